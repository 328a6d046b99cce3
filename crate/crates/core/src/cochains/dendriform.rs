//! The dendriform cochain operad `O(n) = Hom(K[C_n] ⊗ D^{⊗n}, D)`.
//!
//! An element of `O(n)` is a list of `n` multilinear maps `D^{⊗n} → D`, one
//! for each label `[1], …, [n]`. The notation `g([1] + ⋯ + [n]; …)` in the
//! partial compositions is read as the sum of `g` over all its labels.

use serde::{Deserialize, Serialize};

use super::derived::{check_cochain, units};
use super::multilinear::{Cochain, Multilinear};
use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::axpy;
use crate::rational::Rational;

/// An element of `O(arity)` over a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DendCochain {
    dim: usize,
    components: Vec<Multilinear>,
}

impl DendCochain {
    pub fn zero(arity: usize, dim: usize) -> Self {
        DendCochain {
            dim,
            components: (0..arity).map(|_| Multilinear::zero(arity, dim, dim)).collect(),
        }
    }

    /// Builds from one map per label; label `[r]` is `components[r - 1]`.
    pub fn from_components(dim: usize, components: Vec<Multilinear>) -> Result<Self> {
        let arity = components.len();
        if arity == 0 {
            return Err(Error::Shape("dendriform cochains have arity at least 1".into()));
        }
        for c in &components {
            if c.arity() != arity || c.in_dim() != dim || c.out_dim() != dim {
                return Err(Error::Shape(format!(
                    "label component of shape ({}, {}, {}) in an arity-{arity} cochain on dim {dim}",
                    c.arity(),
                    c.in_dim(),
                    c.out_dim()
                )));
            }
        }
        Ok(DendCochain { dim, components })
    }

    /// The operad unit in `O(1)`: the identity map.
    pub fn identity(dim: usize) -> Self {
        DendCochain {
            dim,
            components: vec![Multilinear::from_linmap(&crate::linalg::Mat::identity(dim))],
        }
    }

    /// The element `π` of `O(2)` with `π([1]) = ≺` and `π([2]) = ≻`.
    pub fn from_pair(prec: Multilinear, succ: Multilinear) -> Result<Self> {
        let dim = prec.in_dim();
        Self::from_components(dim, vec![prec, succ])
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    /// Graded degree in `O(• + 1)`: `arity - 1`.
    pub fn degree(&self) -> usize {
        self.arity() - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The map at label `[r]`, `1 ≤ r ≤ arity`.
    pub fn component(&self, r: usize) -> &Multilinear {
        &self.components[r - 1]
    }

    pub fn components(&self) -> &[Multilinear] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Multilinear::is_zero)
    }

    /// Sum of the components over all labels.
    pub fn label_sum(&self) -> Multilinear {
        let mut s = Multilinear::zero(self.arity(), self.dim, self.dim);
        for c in &self.components {
            s.add_scaled(&Rational::one(), c).expect("uniform shapes");
        }
        s
    }

    pub fn add_scaled(&mut self, alpha: &Rational, other: &Self) -> Result<()> {
        if self.arity() != other.arity() || self.dim != other.dim {
            return Err(Error::Shape("dendriform cochains of different shapes".into()));
        }
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            a.add_scaled(alpha, b)?;
        }
        Ok(())
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        DendCochain {
            dim: self.dim,
            components: self.components.iter().map(|c| c.scale(alpha)).collect(),
        }
    }
}

/// `f ∘_i g` for `f ∈ O(m)`, `g ∈ O(n)` and `1 ≤ i ≤ m`.
pub fn dend_partial_comp(f: &DendCochain, i: usize, g: &DendCochain) -> Result<DendCochain> {
    let m = f.arity();
    let n = g.arity();
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, max: m });
    }
    if f.dim != g.dim {
        return Err(Error::Shape(format!("operad elements on dims {} and {}", f.dim, g.dim)));
    }
    let d = f.dim;
    let g_sum = g.label_sum();
    let arity = m + n - 1;
    let components = (1..=arity)
        .map(|r| {
            // Label of f and the g-map to insert, per the three cases.
            let (f_label, inner): (usize, &Multilinear) = if r < i {
                (r, &g_sum)
            } else if r < i + n {
                (i, g.component(r - i + 1))
            } else {
                (r - n + 1, &g_sum)
            };
            let fr = f.component(f_label);
            Multilinear::from_fn(arity, d, d, |t| {
                let inserted = inner.value(&t[i - 1..i - 1 + n]).to_vec();
                let mut args = units(d, &t[..i - 1]);
                args.push(inserted);
                args.extend(units(d, &t[i - 1 + n..]));
                fr.eval(&args)
            })
        })
        .collect();
    Ok(DendCochain { dim: d, components })
}

/// `⌈f, g⌉ = Σ_i (-1)^{(i-1)n} f ∘_i g - (-1)^{mn} Σ_i (-1)^{(i-1)m} g ∘_i f`
/// for `f ∈ O(m+1)`, `g ∈ O(n+1)`.
pub fn dend_bracket(f: &DendCochain, g: &DendCochain) -> Result<DendCochain> {
    let m = f.degree();
    let n = g.degree();
    let mut out = DendCochain::zero(m + n + 1, f.dim);
    for i in 1..=m + 1 {
        out.add_scaled(&Rational::sign((i - 1) * n), &dend_partial_comp(f, i, g)?)?;
    }
    let smn = Rational::sign(m * n);
    for i in 1..=n + 1 {
        out.add_scaled(&-(&smn * Rational::sign((i - 1) * m)), &dend_partial_comp(g, i, f)?)?;
    }
    Ok(out)
}

/// `δ_π(f) = (-1)^{n-1} ⌈π, f⌉` for `f ∈ O(n)`; requires `⌈π, π⌉ = 0`.
pub fn dend_differential(pi: &DendCochain, f: &DendCochain) -> Result<DendCochain> {
    if pi.arity() != 2 {
        return Err(Error::Shape("the dendriform structure must lie in O(2)".into()));
    }
    if !dend_bracket(pi, pi)?.is_zero() {
        return Err(Error::NotSquareZero);
    }
    let n = f.arity();
    Ok(dend_bracket(pi, f)?.scale(&Rational::sign(n - 1)))
}

/// `Θ_n(P) ∈ O(n+1)` for `P ∈ Hom(M^{⊗n}, A)`, `n ≥ 1`:
/// label `[1]` is `(-1)^{n+1} u_1 P(u_2, …)`, label `[n+1]` is `P(u_1, …, u_n) u_{n+1}`,
/// middle labels vanish.
///
/// For `n = 0` the first and last cases name the same label with different
/// values, so degree 0 is rejected.
pub fn theta(module: &Bimodule, p: &Cochain) -> Result<DendCochain> {
    check_cochain(module, p)?;
    let n = p.degree();
    if n == 0 {
        return Err(Error::Precondition("theta is defined for degrees n >= 1".into()));
    }
    let d = module.dim();
    let sign = Rational::sign(n + 1);
    let components = (1..=n + 1)
        .map(|r| {
            if r == 1 {
                Multilinear::from_fn(n + 1, d, d, |t| {
                    let v = module.act_right(&crate::linalg::unit_vec(d, t[0]), p.value(&t[1..]));
                    v.iter().map(|x| &sign * x).collect()
                })
            } else if r == n + 1 {
                Multilinear::from_fn(n + 1, d, d, |t| {
                    module.act_left(p.value(&t[..n]), &crate::linalg::unit_vec(d, t[n]))
                })
            } else {
                Multilinear::zero(n + 1, d, d)
            }
        })
        .collect();
    Ok(DendCochain { dim: d, components })
}

/// The three dendriform axioms of `π ∈ O(2)`, each as an arity-3 map
/// (left side minus right side).
pub fn dendriform_axiom_residuals(pi: &DendCochain) -> Result<[Multilinear; 3]> {
    if pi.arity() != 2 {
        return Err(Error::Shape("a dendriform pair lies in O(2)".into()));
    }
    let d = pi.dim;
    let prec = pi.component(1);
    let succ = pi.component(2);
    let star = pi.label_sum();
    let res = |lhs: &dyn Fn(&[usize]) -> Vec<Rational>, rhs: &dyn Fn(&[usize]) -> Vec<Rational>| {
        Multilinear::from_fn(3, d, d, |t| {
            let mut v = lhs(t);
            axpy(&mut v, &-Rational::one(), &rhs(t));
            v
        })
    };
    let e = |t: usize| crate::linalg::unit_vec(d, t);
    // (a ≺ b) ≺ c = a ≺ (b ≺ c + b ≻ c)
    let a1 = res(&|t| prec.eval(&[prec.value(&t[..2]).to_vec(), e(t[2])]), &|t| {
        prec.eval(&[e(t[0]), star.value(&t[1..]).to_vec()])
    });
    // (a ≻ b) ≺ c = a ≻ (b ≺ c)
    let a2 = res(&|t| prec.eval(&[succ.value(&t[..2]).to_vec(), e(t[2])]), &|t| {
        succ.eval(&[e(t[0]), prec.value(&t[1..]).to_vec()])
    });
    // (a ≺ b + a ≻ b) ≻ c = a ≻ (b ≻ c)
    let a3 = res(&|t| succ.eval(&[star.value(&t[..2]).to_vec(), e(t[2])]), &|t| {
        succ.eval(&[e(t[0]), succ.value(&t[1..]).to_vec()])
    });
    Ok([a1, a2, a3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    fn sample(arity: usize, dim: usize, seed: i64) -> DendCochain {
        let comps = (0..arity)
            .map(|r| {
                let mut k = seed + r as i64;
                Multilinear::from_fn(arity, dim, dim, |_| {
                    (0..dim)
                        .map(|_| {
                            k = (k * 7 + 3) % 5;
                            qi(k - 2)
                        })
                        .collect()
                })
            })
            .collect();
        DendCochain::from_components(dim, comps).unwrap()
    }

    #[test]
    fn unit_laws() {
        let f = sample(3, 2, 1);
        let id = DendCochain::identity(2);
        for i in 1..=3 {
            assert_eq!(dend_partial_comp(&f, i, &id).unwrap(), f);
        }
        assert_eq!(dend_partial_comp(&id, 1, &f).unwrap(), f);
    }

    #[test]
    fn index_out_of_range() {
        let f = sample(2, 2, 0);
        assert_eq!(dend_partial_comp(&f, 3, &f), Err(Error::IndexOutOfRange { index: 3, max: 2 }));
        assert!(dend_partial_comp(&f, 0, &f).is_err());
    }

    #[test]
    fn sequential_and_parallel_associativity() {
        let f = sample(2, 2, 1);
        let g = sample(2, 2, 2);
        let h = sample(2, 2, 3);
        let (m, n) = (f.arity(), g.arity());
        // (f ∘_i g) ∘_{i+j-1} h = f ∘_i (g ∘_j h)
        for i in 1..=m {
            for j in 1..=n {
                let lhs = dend_partial_comp(&dend_partial_comp(&f, i, &g).unwrap(), i + j - 1, &h).unwrap();
                let rhs = dend_partial_comp(&f, i, &dend_partial_comp(&g, j, &h).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "sequential i={i} j={j}");
            }
        }
        // (f ∘_i g) ∘_{j+n-1} h = (f ∘_j h) ∘_i g for i < j
        let k = h.arity();
        for i in 1..=m {
            for j in i + 1..=m {
                let lhs = dend_partial_comp(&dend_partial_comp(&f, i, &g).unwrap(), j + n - 1, &h).unwrap();
                let rhs = dend_partial_comp(&dend_partial_comp(&f, j, &h).unwrap(), i, &g).unwrap();
                assert_eq!(lhs, rhs, "parallel i={i} j={j} k={k}");
            }
        }
    }
}
