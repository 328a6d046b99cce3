mod common;

use common::*;
use rota_core::algebra::{Bimodule, Side};
use rota_core::cochains::{
    d_ce, d_hoch, d_hoch_matrix, d_t, dend_bracket, dend_differential, derived_bracket, psi, skew_symmetrize, theta, Cochain,
};
use rota_core::fixtures;
use rota_core::linalg::Mat;
use rota_core::operators::{induced_dendriform, induced_prelie, OOperatorCandidate};
use rota_core::Rational;

fn poly3_r() -> OOperatorCandidate {
    OOperatorCandidate::new(Bimodule::adjoint(&fixtures::poly3()), fixtures::poly3_integration()).unwrap()
}

fn operators() -> Vec<OOperatorCandidate> {
    vec![
        poly3_r(),
        OOperatorCandidate::new(Bimodule::adjoint(&fixtures::ut2()), fixtures::ut2_rota_baxter()).unwrap(),
        OOperatorCandidate::new(Bimodule::adjoint(&fixtures::abelian2()), Mat::from_ints(2, 2, &[1, 2, -1, 0])).unwrap(),
        OOperatorCandidate::new(
            Bimodule::one_sided(&fixtures::dual2(), Side::Left),
            fixtures::proj2_averaging(),
        )
        .unwrap(),
    ]
}

#[test]
fn differential_squares_to_zero() {
    for op in operators() {
        for n in 0..=2 {
            let product = d_hoch_matrix(&op, n + 1)
                .unwrap()
                .mul(&d_hoch_matrix(&op, n).unwrap())
                .unwrap();
            assert!(product.is_zero(), "degree {n}");
        }
    }
}

#[test]
fn bracket_differential_is_signed_hochschild() {
    let op = poly3_r();
    let mut rng = rng(3);
    for n in 0..=3 {
        for _ in 0..20 {
            let f = random_cochain(&mut rng, n, 3, 3);
            let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
            assert_eq!(d_t(&op, &f).unwrap(), d_hoch(&op, &f).unwrap().scale(&sign), "degree {n}");
        }
    }
}

#[test]
fn theta_of_t_is_the_induced_dendriform_pair() {
    let op = poly3_r();
    let pi = theta(op.bimodule(), &Cochain::from_linmap(op.matrix())).unwrap();
    let d = induced_dendriform(&op).unwrap();
    assert_eq!(pi, d.as_operad_element());
    let p = random_cochain(&mut rng(1), 2, 3, 3);
    assert!(theta(op.bimodule(), &p).unwrap().component(2).is_zero());
}

#[test]
fn theta_preserves_brackets() {
    let module = poly3_r().bimodule().clone();
    let mut rng = rng(8);
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for _ in 0..3 {
            let p = random_cochain(&mut rng, m, 3, 3);
            let q = random_cochain(&mut rng, n, 3, 3);
            let lhs = dend_bracket(&theta(&module, &p).unwrap(), &theta(&module, &q).unwrap()).unwrap();
            let rhs = theta(&module, &derived_bracket(&module, &p, &q).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "degrees ({m}, {n})");
        }
    }
}

#[test]
fn theta_intertwines_differentials() {
    let op = poly3_r();
    let pi = theta(op.bimodule(), &Cochain::from_linmap(op.matrix())).unwrap();
    let mut rng = rng(9);
    for n in 1..=2 {
        for _ in 0..5 {
            let p = random_cochain(&mut rng, n, 3, 3);
            let lhs = theta(op.bimodule(), &d_hoch(&op, &p).unwrap()).unwrap();
            let rhs = dend_differential(&pi, &theta(op.bimodule(), &p).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "degree {n}");
        }
    }
}

#[test]
fn skew_symmetrization_is_a_chain_map_in_low_degrees() {
    let mut rng = rng(21);
    for op in operators() {
        let (dm, da) = (op.bimodule().dim(), op.bimodule().alg_dim());
        for n in 0..=1 {
            for _ in 0..5 {
                let f = random_cochain(&mut rng, n, dm, da);
                let lhs = skew_symmetrize(&d_hoch(&op, &f).unwrap());
                let rhs = d_ce(&op, &skew_symmetrize(&f)).unwrap();
                assert_eq!(lhs, rhs, "degree {n}");
            }
        }
    }
}

/// Reports which of `S ∘ d_H = ± d_ce ∘ S` holds in degree 2.
#[test]
fn skew_symmetrization_sign_in_degree_two() {
    let mut rng = rng(22);
    for (idx, op) in operators().into_iter().enumerate() {
        let (dm, da) = (op.bimodule().dim(), op.bimodule().alg_dim());
        let (mut plus, mut minus, mut total) = (0, 0, 0);
        for _ in 0..5 {
            let f = random_cochain(&mut rng, 2, dm, da);
            let lhs = skew_symmetrize(&d_hoch(&op, &f).unwrap());
            let rhs = d_ce(&op, &skew_symmetrize(&f)).unwrap();
            total += 1;
            plus += usize::from(lhs == rhs);
            minus += usize::from(lhs == rhs.scale(&-Rational::one()));
        }
        println!("operator {idx}: S∘d_H = +d_ce∘S on {plus}/{total}, = -d_ce∘S on {minus}/{total}");
        assert!(plus == total || minus == total, "neither sign holds for operator {idx}");
    }
}

#[test]
fn ce_differential_squares_to_zero() {
    let mut rng = rng(23);
    for op in operators() {
        let (dm, da) = (op.bimodule().dim(), op.bimodule().alg_dim());
        for n in 0..=1 {
            let f = skew_symmetrize(&random_cochain(&mut rng, n, dm, da));
            assert!(d_ce(&op, &d_ce(&op, &f).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn psi_one_of_t_is_the_prelie_product() {
    for op in operators() {
        let dm = op.bimodule().dim();
        let p = psi(op.bimodule(), &Cochain::from_linmap(op.matrix())).unwrap();
        let pre = induced_prelie(&op).unwrap();
        for u in 0..dm {
            for v in 0..dm {
                assert_eq!(p.value(&[u, v]), pre.value(&[u, v]));
            }
        }
    }
    let module = Bimodule::adjoint(&fixtures::poly3());
    assert!(psi(&module, &Cochain::zero(2, 3, 3)).unwrap().is_zero());
}
