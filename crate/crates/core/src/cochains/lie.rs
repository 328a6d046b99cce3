//! The skew-symmetric side: alternating cochains `Hom(∧^n M, A)`, the
//! Chevalley-Eilenberg differential of the commutator Lie algebra `(M, [,])`
//! with coefficients in `A`, and the comparison maps `S_n` and `Ψ_n`.
//!
//! The Lie bracket on `M` is `[m, n] = m⋆n - n⋆m` and `M` acts on `A` by
//! `ϱ_A(m)(a) = l_T(m, a) - r_T(a, m)`. The differential uses the standard
//! convention
//! `(d f)(m_1, …, m_{n+1}) = Σ_i (-1)^{i+1} ϱ_A(m_i) f(…, m̂_i, …)
//!   + Σ_{i<j} (-1)^{i+j} f([m_i, m_j], …, m̂_i, …, m̂_j, …)`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::derived::check_cochain;
use super::multilinear::{Cochain, Multilinear};
use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, sub_vec, unit_vec, zero_vec, LinMap, Vector};
use crate::operators::OOperatorCandidate;
use crate::rational::Rational;

/// Sign of the permutation sorting `t`, or `None` if `t` has a repeat.
pub fn sort_sign(t: &[usize]) -> Option<(Vec<usize>, Rational)> {
    let mut inversions = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            match t[i].cmp(&t[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let mut s = t.to_vec();
    s.sort_unstable();
    Some((s, Rational::sign(inversions)))
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, Rational)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let sign = sort_sign(&p).expect("permutation").1;
            (p, sign)
        })
        .collect()
}

/// An alternating cochain, stored on strictly increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltCochain {
    degree: usize,
    in_dim: usize,
    out_dim: usize,
    /// Values on the increasing tuples, in lexicographic order.
    values: Vec<Vector>,
}

impl AltCochain {
    /// The increasing tuples of length `degree` in `0..in_dim`.
    pub fn tuples(degree: usize, in_dim: usize) -> Vec<Vec<usize>> {
        (0..in_dim).combinations(degree).collect()
    }

    pub fn from_fn(degree: usize, in_dim: usize, out_dim: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let values = Self::tuples(degree, in_dim).iter().map(|t| f(t)).collect();
        AltCochain {
            degree,
            in_dim,
            out_dim,
            values,
        }
    }

    pub fn zero(degree: usize, in_dim: usize, out_dim: usize) -> Self {
        Self::from_fn(degree, in_dim, out_dim, |_| zero_vec(out_dim))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Vector] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vec(v))
    }

    /// Value on an arbitrary basis tuple, expanded by the sorting sign.
    pub fn value(&self, t: &[usize]) -> Vector {
        match sort_sign(t) {
            None => zero_vec(self.out_dim),
            Some((sorted, sign)) => {
                let pos = Self::tuples(self.degree, self.in_dim)
                    .iter()
                    .position(|x| *x == sorted)
                    .expect("increasing tuple");
                self.values[pos].iter().map(|x| &sign * x).collect()
            }
        }
    }

    /// The full antisymmetric tensor.
    pub fn to_multilinear(&self) -> Multilinear {
        Multilinear::from_fn(self.degree, self.in_dim, self.out_dim, |t| self.value(t))
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        AltCochain {
            values: self.values.iter().map(|v| v.iter().map(|x| alpha * x).collect()).collect(),
            ..self.clone()
        }
    }

    /// Reads an antisymmetric tensor back; errors if it is not alternating.
    pub fn from_multilinear(f: &Multilinear) -> Result<Self> {
        let alt = Self::from_fn(f.arity(), f.in_dim(), f.out_dim(), |t| f.value(t).to_vec());
        if alt.to_multilinear() != *f {
            return Err(Error::Precondition("map is not alternating".into()));
        }
        Ok(alt)
    }
}

/// `S_n(f)(m_1, …, m_n) = Σ_σ (-1)^σ f(m_σ(1), …, m_σ(n))`.
pub fn skew_symmetrize(f: &Cochain) -> AltCochain {
    let n = f.arity();
    let perms = signed_permutations(n);
    AltCochain::from_fn(n, f.in_dim(), f.out_dim(), |t| {
        let mut out = zero_vec(f.out_dim());
        for (p, sign) in &perms {
            let permuted: Vec<usize> = p.iter().map(|&k| t[k]).collect();
            axpy(&mut out, sign, f.value(&permuted));
        }
        out
    })
}

/// `m ⋆ n = mT(n) + T(m)n`.
pub(crate) fn star(module: &Bimodule, t: &LinMap, m: &[Rational], n: &[Rational]) -> Vector {
    let mut out = module.act_right(m, &t.apply(n));
    axpy(&mut out, &Rational::one(), &module.act_left(&t.apply(m), n));
    out
}

/// `[m, n] = m⋆n - n⋆m`.
pub fn induced_lie_bracket(module: &Bimodule, t: &LinMap, m: &[Rational], n: &[Rational]) -> Vector {
    sub_vec(&star(module, t, m, n), &star(module, t, n, m))
}

/// `ϱ_A(m)(a) = T(m)a - T(ma) - aT(m) + T(am)`.
pub fn rho_a(module: &Bimodule, t: &LinMap, m: &[Rational], a: &[Rational]) -> Vector {
    let alg = module.algebra();
    let tm = t.apply(m);
    let mut out = alg.commutator(&tm, a);
    axpy(&mut out, &-Rational::one(), &t.apply(&module.act_right(m, a)));
    axpy(&mut out, &Rational::one(), &t.apply(&module.act_left(a, m)));
    out
}

/// The Chevalley-Eilenberg differential of `(M, [,])` with values in `(A, ϱ_A)`.
pub fn d_ce(op: &OOperatorCandidate, f: &AltCochain) -> Result<AltCochain> {
    op.ensure()?;
    let module = op.bimodule();
    let t = op.matrix();
    if f.in_dim != module.dim() || f.out_dim != module.alg_dim() {
        return Err(Error::Shape("alternating cochain does not match the bimodule".into()));
    }
    let dm = module.dim();
    let full = f.to_multilinear();
    let n = f.degree;
    Ok(AltCochain::from_fn(n + 1, dm, module.alg_dim(), |tuple| {
        let mut out = zero_vec(module.alg_dim());
        let args: Vec<Vector> = tuple.iter().map(|&u| unit_vec(dm, u)).collect();
        for i in 0..=n {
            let rest: Vec<&Vector> = args.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| v).collect();
            let value = full.eval(&rest);
            axpy(&mut out, &Rational::sign(i), &rho_a(module, t, &args[i], &value));
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let br = induced_lie_bracket(module, t, &args[i], &args[j]);
                let mut rest: Vec<&Vector> = vec![&br];
                rest.extend(args.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, v)| v));
                axpy(&mut out, &Rational::sign(i + j), &full.eval(&rest));
            }
        }
        out
    }))
}

/// `(Ψ_n f)(u_1, …, u_n, u_{n+1}) = S_n(f)(u_1, …, u_n)·u_{n+1} - u_{n+1}·S_n(f)(u_1, …, u_n)`,
/// as a map `M^{⊗n+1} → M` alternating in its first `n` slots.
pub fn psi(module: &Bimodule, f: &Cochain) -> Result<Multilinear> {
    check_cochain(module, f)?;
    let s = skew_symmetrize(f);
    let n = f.arity();
    let dm = module.dim();
    Ok(Multilinear::from_fn(n + 1, dm, dm, |t| {
        let v = s.value(&t[..n]);
        let u = unit_vec(dm, t[n]);
        sub_vec(&module.act_left(&v, &u), &module.act_right(&u, &v))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::qi;

    #[test]
    fn sort_signs() {
        assert_eq!(sort_sign(&[2, 0, 1]).unwrap(), (vec![0, 1, 2], qi(1)));
        assert_eq!(sort_sign(&[1, 0]).unwrap().1, qi(-1));
        assert!(sort_sign(&[1, 1]).is_none());
        assert_eq!(signed_permutations(3).len(), 6);
    }

    #[test]
    fn degree_one_skew_is_identity() {
        let f = Multilinear::from_linmap(&fixtures::poly3_integration());
        assert_eq!(skew_symmetrize(&f).to_multilinear(), f);
    }

    #[test]
    fn symmetric_maps_vanish() {
        let f = Multilinear::from_fn(2, 2, 1, |t| vec![qi((t[0] + t[1]) as i64)]);
        assert!(skew_symmetrize(&f).is_zero());
    }

    #[test]
    fn two_term_sum() {
        // f(u, v) = u_0 v_1: f(e0, e1) = 1, f(e1, e0) = 0.
        let f = Multilinear::from_fn(2, 2, 1, |t| vec![if t == [0, 1] { qi(1) } else { qi(0) }]);
        let s = skew_symmetrize(&f);
        assert_eq!(s.value(&[0, 1]), vec![qi(1)]);
        assert_eq!(s.value(&[1, 0]), vec![qi(-1)]);
        assert_eq!(s.value(&[1, 1]), vec![qi(0)]);
    }

    #[test]
    fn alternating_round_trip() {
        let f = Multilinear::from_fn(2, 3, 1, |t| vec![qi(t[0] as i64 - t[1] as i64)]);
        let alt = AltCochain::from_multilinear(&f).unwrap();
        assert_eq!(alt.to_multilinear(), f);
        let g = Multilinear::from_fn(2, 2, 1, |_| vec![qi(1)]);
        assert!(AltCochain::from_multilinear(&g).is_err());
    }
}
