//! Finite-dimensional associative algebras and their bimodules.
//!
//! Both are given by structure constants in a fixed basis. For an algebra of
//! dimension `n`, `mu[(i*n + j)*n + k]` is the coefficient of `e_k` in
//! `e_i·e_j`. A bimodule of dimension `m` carries a left tensor indexed
//! `[i][u][v]` (coefficient of `f_v` in `e_i·f_u`) and a right tensor indexed
//! `[u][i][v]` (coefficient of `f_v` in `f_u·e_i`).
//!
//! Algebras need not be unital and morphisms need not preserve a unit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{axpy, zero_vec, LinMap, Mat, Vector};
use crate::rational::Rational;

/// An associative algebra presented by structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Algebra {
    dim: usize,
    mu: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// A basis triple at which `(e_i e_j) e_k != e_i (e_j e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityViolation {
    pub triple: (usize, usize, usize),
    pub left: Vector,
    pub right: Vector,
}

impl Algebra {
    /// Wraps structure constants. Only the shape is checked; use
    /// [`Algebra::associativity_violations`] to validate the product.
    pub fn new(dim: usize, mu: Vec<Rational>) -> Result<Self> {
        if mu.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "structure constants of a {dim}-dim algebra need {} entries, got {}",
                dim * dim * dim,
                mu.len()
            )));
        }
        Ok(Algebra { dim, mu, labels: None })
    }

    /// Builds an algebra from a closure giving `e_i·e_j` as a coefficient vector.
    pub fn from_fn(dim: usize, mut product: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut mu = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                assert_eq!(v.len(), dim, "product vector length");
                mu.extend(v);
            }
        }
        Algebra { dim, mu, labels: None }
    }

    /// The algebra with zero multiplication.
    pub fn zero(dim: usize) -> Self {
        Algebra {
            dim,
            mu: vec![Rational::zero(); dim * dim * dim],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Shape(format!(
                "{} labels for a {}-dim algebra",
                labels.len(),
                self.dim
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of basis element `i`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.mu
    }

    /// Coefficient of `e_k` in `e_i·e_j`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.mu[(i * self.dim + j) * self.dim + k]
    }

    /// `e_i·e_j` as a coefficient slice.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.mu[start..start + self.dim]
    }

    /// Product of two arbitrary elements.
    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(ai * bj), self.basis_product(i, j));
            }
        }
        out
    }

    /// `a·b - b·a`.
    pub fn commutator(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        ab.iter().zip(&ba).map(|(x, y)| x - y).collect()
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mul_matrix(&self, a: &[Rational]) -> LinMap {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(a, &crate::linalg::unit_vec(n, j))).collect();
        Mat::from_cols(n, &cols).expect("square")
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mul_matrix(&self, a: &[Rational]) -> LinMap {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&crate::linalg::unit_vec(n, j), a)).collect();
        Mat::from_cols(n, &cols).expect("square")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Every basis triple where associativity fails, with both sides.
    pub fn associativity_violations(&self) -> Vec<AssociativityViolation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&ij, &crate::linalg::unit_vec(n, k));
                    let right = self.mul(&crate::linalg::unit_vec(n, i), self.basis_product(j, k));
                    if left != right {
                        out.push(AssociativityViolation {
                            triple: (i, j, k),
                            left,
                            right,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violations().is_empty()
    }

    /// Errors with [`Error::InvalidAlgebra`] unless associative.
    pub fn validate(&self) -> Result<()> {
        match self.associativity_violations().len() {
            0 => Ok(()),
            n => Err(Error::InvalidAlgebra(n)),
        }
    }
}

/// Which side of a one-sided bimodule carries the multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// An `A`-bimodule given by action tensors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bimodule {
    algebra: Algebra,
    dim: usize,
    left: Vec<Rational>,
    right: Vec<Rational>,
}

/// Which of the three bimodule axioms a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BimoduleAxiom {
    /// `(a·b)m = a(bm)`
    LeftAssoc,
    /// `a(mb) = (am)b`
    Middle,
    /// `m(a·b) = (ma)b`
    RightAssoc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleViolation {
    pub axiom: BimoduleAxiom,
    /// Indices in the order they appear in the axiom (algebra or module basis).
    pub triple: (usize, usize, usize),
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Bimodule {
    /// Wraps explicit action tensors (shape-checked only).
    pub fn new(algebra: Algebra, dim: usize, left: Vec<Rational>, right: Vec<Rational>) -> Result<Self> {
        let n = algebra.dim();
        let expected = n * dim * dim;
        if left.len() != expected || right.len() != expected {
            return Err(Error::Shape(format!(
                "action tensors of a {dim}-dim module over a {n}-dim algebra need {expected} entries, \
                 got left {} / right {}",
                left.len(),
                right.len()
            )));
        }
        Ok(Bimodule {
            algebra,
            dim,
            left,
            right,
        })
    }

    /// `A` acting on itself by multiplication.
    pub fn adjoint(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let mu = algebra.structure_constants().to_vec();
        // left[i][u][v] = mu[i][u][v]; right[u][i][v] = mu[u][i][v].
        Bimodule {
            algebra: algebra.clone(),
            dim: n,
            left: mu.clone(),
            right: mu,
        }
    }

    /// `A*` with `(a·f)(b) = f(b·a)` and `(f·a)(b) = f(a·b)`, in the dual basis.
    pub fn coadjoint(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let mut left = vec![Rational::zero(); n * n * n];
        let mut right = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for u in 0..n {
                for v in 0..n {
                    left[(i * n + u) * n + v] = algebra.coeff(v, i, u).clone();
                    right[(u * n + i) * n + v] = algebra.coeff(i, v, u).clone();
                }
            }
        }
        Bimodule {
            algebra: algebra.clone(),
            dim: n,
            left,
            right,
        }
    }

    /// `(A, ad^l, 0)` or `(A, 0, ad^r)`.
    pub fn one_sided(algebra: &Algebra, side: Side) -> Self {
        let mut m = Self::adjoint(algebra);
        let zeros = vec![Rational::zero(); m.left.len()];
        match side {
            Side::Left => m.right = zeros,
            Side::Right => m.left = zeros,
        }
        m
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alg_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn left_tensor(&self) -> &[Rational] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[Rational] {
        &self.right
    }

    /// `e_i·f_u`.
    pub fn left_basis(&self, i: usize, u: usize) -> &[Rational] {
        let start = (i * self.dim + u) * self.dim;
        &self.left[start..start + self.dim]
    }

    /// `f_u·e_i`.
    pub fn right_basis(&self, u: usize, i: usize) -> &[Rational] {
        let start = (u * self.alg_dim() + i) * self.dim;
        &self.right[start..start + self.dim]
    }

    /// `a·m`.
    pub fn act_left(&self, a: &[Rational], m: &[Rational]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (u, mu) in m.iter().enumerate() {
                if !mu.is_zero() {
                    axpy(&mut out, &(ai * mu), self.left_basis(i, u));
                }
            }
        }
        out
    }

    /// `m·a`.
    pub fn act_right(&self, m: &[Rational], a: &[Rational]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (u, mu) in m.iter().enumerate() {
            if mu.is_zero() {
                continue;
            }
            for (i, ai) in a.iter().enumerate() {
                if !ai.is_zero() {
                    axpy(&mut out, &(mu * ai), self.right_basis(u, i));
                }
            }
        }
        out
    }

    /// Matrix of `l_a : m ↦ a·m`.
    pub fn left_action_matrix(&self, a: &[Rational]) -> LinMap {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|u| self.act_left(a, &crate::linalg::unit_vec(self.dim, u)))
            .collect();
        Mat::from_cols(self.dim, &cols).expect("square")
    }

    /// Matrix of `r_a : m ↦ m·a`.
    pub fn right_action_matrix(&self, a: &[Rational]) -> LinMap {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|u| self.act_right(&crate::linalg::unit_vec(self.dim, u), a))
            .collect();
        Mat::from_cols(self.dim, &cols).expect("square")
    }

    /// All failures of the three bimodule axioms over basis triples.
    pub fn violations(&self) -> Vec<BimoduleViolation> {
        let n = self.alg_dim();
        let m = self.dim;
        let e = |i| crate::linalg::unit_vec(n, i);
        let f = |u| crate::linalg::unit_vec(m, u);
        let a = &self.algebra;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for u in 0..m {
                    // (e_i e_j) f_u = e_i (e_j f_u)
                    let lhs = self.act_left(a.basis_product(i, j), &f(u));
                    let rhs = self.act_left(&e(i), self.left_basis(j, u));
                    if lhs != rhs {
                        out.push(BimoduleViolation {
                            axiom: BimoduleAxiom::LeftAssoc,
                            triple: (i, j, u),
                            lhs,
                            rhs,
                        });
                    }
                    // f_u (e_i e_j) = (f_u e_i) e_j
                    let lhs = self.act_right(&f(u), a.basis_product(i, j));
                    let rhs = self.act_right(self.right_basis(u, i), &e(j));
                    if lhs != rhs {
                        out.push(BimoduleViolation {
                            axiom: BimoduleAxiom::RightAssoc,
                            triple: (u, i, j),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
            for u in 0..m {
                for j in 0..n {
                    // e_i (f_u e_j) = (e_i f_u) e_j
                    let lhs = self.act_left(&e(i), self.right_basis(u, j));
                    let rhs = self.act_right(self.left_basis(i, u), &e(j));
                    if lhs != rhs {
                        out.push(BimoduleViolation {
                            axiom: BimoduleAxiom::Middle,
                            triple: (i, u, j),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Errors unless both the algebra and the bimodule axioms hold.
    pub fn validate(&self) -> Result<()> {
        self.algebra.validate()?;
        match self.violations().len() {
            0 => Ok(()),
            n => Err(Error::InvalidBimodule(n)),
        }
    }
}

/// The semidirect product `A ⊕ M` with `(a,m)(b,n) = (ab, an + mb)`.
///
/// Basis order: the `A` basis first, then the `M` basis.
pub fn semidirect_product(module: &Bimodule) -> Result<Algebra> {
    module.validate()?;
    Ok(semidirect_product_unchecked(module))
}

/// Same product as [`semidirect_product`] without validating the inputs.
/// Useful for exhibiting that broken inputs give a non-associative result.
pub fn semidirect_product_unchecked(module: &Bimodule) -> Algebra {
    let n = module.alg_dim();
    let m = module.dim();
    let a = module.algebra();
    Algebra::from_fn(n + m, |x, y| {
        let mut out = zero_vec(n + m);
        match (x < n, y < n) {
            (true, true) => out[..n].clone_from_slice(a.basis_product(x, y)),
            (true, false) => out[n..].clone_from_slice(module.left_basis(x, y - n)),
            (false, true) => out[n..].clone_from_slice(module.right_basis(x - n, y)),
            (false, false) => {}
        }
        out
    })
}

/// Whether `phi: A → B` satisfies `phi(e_i e_j) = phi(e_i) phi(e_j)`.
pub fn is_algebra_morphism(phi: &LinMap, source: &Algebra, target: &Algebra) -> Result<bool> {
    if phi.cols() != source.dim() || phi.rows() != target.dim() {
        return Err(Error::Shape(format!(
            "map is {}x{}, algebras have dims {} -> {}",
            phi.rows(),
            phi.cols(),
            source.dim(),
            target.dim()
        )));
    }
    let n = source.dim();
    for i in 0..n {
        let pi = phi.col(i);
        for j in 0..n {
            let pj = phi.col(j);
            if phi.apply(source.basis_product(i, j)) != target.mul(&pi, &pj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
