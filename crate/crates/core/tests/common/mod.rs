#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rota_core::algebra::Bimodule;
use rota_core::cochains::{gerstenhaber_bracket, mc_element, BigCochain, Cochain, Multilinear};
use rota_core::linalg::{LinMap, Mat};
use rota_core::rational::q;
use rota_core::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rationals, zero about a third of the time.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    const DENS: [i64; 3] = [1, 1, 2];
    match rng.gen_range(0..3) {
        0 => Rational::zero(),
        _ => q(rng.gen_range(-3..=3), DENS[rng.gen_range(0..3)]),
    }
}

pub fn random_cochain(rng: &mut ChaCha8Rng, degree: usize, in_dim: usize, out_dim: usize) -> Cochain {
    let len = in_dim.pow(degree as u32) * out_dim;
    Multilinear::from_coeffs(degree, in_dim, out_dim, (0..len).map(|_| small_rational(rng)).collect()).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, values: &[i64]) -> LinMap {
    let entries: Vec<i64> = (0..rows * cols).map(|_| values[rng.gen_range(0..values.len())]).collect();
    Mat::from_ints(rows, cols, &entries)
}

/// `T(e_u)·T(e_v) = T(e_u·T(e_v) + T(e_u)·e_v)` at every basis pair, from raw tensors.
pub fn o_identity_oracle(module: &Bimodule, t: &LinMap) -> bool {
    let alg = module.algebra();
    let (na, nm) = (module.alg_dim(), module.dim());
    let tv = |u: usize, k: usize| t[(k, u)].clone();
    for u in 0..nm {
        for v in 0..nm {
            // The element e_u·T(e_v) + T(e_u)·e_v of M.
            let mut inner = vec![Rational::zero(); nm];
            for i in 0..na {
                for (w, x) in inner.iter_mut().enumerate() {
                    *x = &*x + tv(v, i) * &module.right_basis(u, i)[w] + tv(u, i) * &module.left_basis(i, v)[w];
                }
            }
            for k in 0..na {
                let mut lhs = Rational::zero();
                for i in 0..na {
                    for j in 0..na {
                        lhs += tv(u, i) * tv(v, j) * alg.coeff(i, j, k);
                    }
                }
                let rhs = (0..nm).fold(Rational::zero(), |s, w| s + &inner[w] * tv(w, k));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `P ∈ Hom(M^{⊗m}, A)` extended by zero to `(A ⊕ M)^{⊗m} → A ⊕ M`, `A` first.
pub fn lift(module: &Bimodule, p: &Cochain) -> BigCochain {
    let (na, nm) = (module.alg_dim(), module.dim());
    let d = na + nm;
    Multilinear::from_fn(p.arity(), d, d, |t| {
        let mut out = vec![Rational::zero(); d];
        if t.iter().all(|&x| x >= na) {
            let inner: Vec<usize> = t.iter().map(|&x| x - na).collect();
            out[..na].clone_from_slice(p.value(&inner));
        }
        out
    })
}

/// Restriction of a cochain on `A ⊕ M` to inputs in `M` and the `A` component.
pub fn restrict(module: &Bimodule, f: &BigCochain) -> Cochain {
    let (na, nm) = (module.alg_dim(), module.dim());
    Multilinear::from_fn(f.arity(), nm, na, |t| {
        let shifted: Vec<usize> = t.iter().map(|&x| x + na).collect();
        f.value(&shifted)[..na].to_vec()
    })
}

/// `⟦P, Q⟧ = (-1)^m [[μ + l + r, P], Q]` through the Gerstenhaber bracket, `deg P = m ≥ 1`.
pub fn bracket_via_gerstenhaber(module: &Bimodule, p: &Cochain, q: &Cochain) -> Cochain {
    let pi = mc_element(module);
    let inner = gerstenhaber_bracket(&pi, &lift(module, p)).unwrap();
    let outer = gerstenhaber_bracket(&inner, &lift(module, q)).unwrap();
    let sign = if p.degree().is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    restrict(module, &outer).scale(&sign)
}

/// The 2-dim algebra `x·y = x_0 y` (`e_0` is a left unit, `e_1` squares to zero).
pub fn left_unit2() -> rota_core::algebra::Algebra {
    use rota_core::linalg::{unit_vec, zero_vec};
    rota_core::algebra::Algebra::from_fn(2, |i, j| if i == 0 { unit_vec(2, j) } else { zero_vec(2) })
}

/// Operators used as deformation bases.
pub fn deformation_bases() -> Vec<(&'static str, rota_core::operators::OOperatorCandidate)> {
    use rota_core::algebra::Side;
    use rota_core::fixtures;
    use rota_core::operators::OOperatorCandidate as Op;
    vec![
        (
            "poly3_R",
            Op::new(Bimodule::adjoint(&fixtures::poly3()), fixtures::poly3_integration()).unwrap(),
        ),
        (
            "ut2_RB",
            Op::new(Bimodule::adjoint(&fixtures::ut2()), fixtures::ut2_rota_baxter()).unwrap(),
        ),
        (
            "ut2_zero",
            Op::new(Bimodule::adjoint(&fixtures::ut2()), Mat::zeros(3, 3)).unwrap(),
        ),
        (
            "dual2_zero",
            Op::new(Bimodule::adjoint(&fixtures::dual2()), Mat::zeros(2, 2)).unwrap(),
        ),
        (
            "proj2_left",
            Op::new(
                Bimodule::one_sided(&fixtures::dual2(), Side::Left),
                fixtures::proj2_averaging(),
            )
            .unwrap(),
        ),
        (
            "idempotent_left",
            Op::new(Bimodule::one_sided(&fixtures::idempotent1(), Side::Left), Mat::identity(1)).unwrap(),
        ),
    ]
}

/// A random combination of a basis of `Z^1`, as a linear map.
pub fn random_cocycle(rng: &mut ChaCha8Rng, op: &rota_core::operators::OOperatorCandidate) -> LinMap {
    use rota_core::cohomology::Cohomology;
    let z1 = Cohomology::new(op).unwrap().cocycles(1).unwrap();
    let mut v = vec![Rational::zero(); z1.ambient_dim()];
    for b in z1.basis() {
        rota_core::linalg::axpy(&mut v, &small_rational(rng), b);
    }
    Multilinear::from_coeffs(1, op.bimodule().dim(), op.bimodule().alg_dim(), v)
        .unwrap()
        .to_linmap()
        .unwrap()
}

/// Nijenhuis elements of `op` with coordinates in `{-1, 0, 1}`.
pub fn nijenhuis_grid(op: &rota_core::operators::OOperatorCandidate) -> Vec<Vec<Rational>> {
    use itertools::Itertools;
    use rota_core::operators::is_nijenhuis_element;
    let da = op.bimodule().alg_dim();
    (0..da)
        .map(|_| [-1i64, 0, 1])
        .multi_cartesian_product()
        .map(|c| c.into_iter().map(Rational::from_integer).collect::<Vec<_>>())
        .filter(|a| is_nijenhuis_element(op, a).unwrap().is_nijenhuis())
        .collect()
}
