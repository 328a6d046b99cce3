//! Dense multilinear maps between based spaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, zero_vec, LinMap, Mat, Vector};
use crate::rational::Rational;

/// A multilinear map `V^{⊗arity} → W` stored as a dense coefficient tensor.
///
/// The flat index of the `k`-th output coefficient on the basis tuple
/// `(u_1, …, u_n)` is `((u_1·d + u_2)·d + … + u_n)·out_dim + k`, i.e.
/// lexicographic on `(u_1, …, u_n, k)`. Arity 0 stores a single vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multilinear {
    arity: usize,
    in_dim: usize,
    out_dim: usize,
    coeff: Vec<Rational>,
}

/// Hochschild-type cochain `Hom(M^{⊗n}, A)`: arity `n`, inputs in `M`, values in `A`.
pub type Cochain = Multilinear;

/// Element of `Hom(V^{⊗n+1}, V)` for `V = A ⊕ M`; its Gerstenhaber degree is `arity - 1`.
pub type BigCochain = Multilinear;

/// Calls `f` on every tuple in `{0..dim}^len`, in lexicographic order.
pub fn for_each_tuple(len: usize, dim: usize, mut f: impl FnMut(&[usize])) {
    if len > 0 && dim == 0 {
        return;
    }
    let mut t = vec![0usize; len];
    loop {
        f(&t);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < dim {
                break;
            }
            t[pos] = 0;
        }
    }
}

impl Multilinear {
    pub fn zero(arity: usize, in_dim: usize, out_dim: usize) -> Self {
        Multilinear {
            arity,
            in_dim,
            out_dim,
            coeff: vec![Rational::zero(); in_dim.pow(arity as u32) * out_dim],
        }
    }

    pub fn from_coeffs(arity: usize, in_dim: usize, out_dim: usize, coeff: Vec<Rational>) -> Result<Self> {
        let expected = in_dim.pow(arity as u32) * out_dim;
        if coeff.len() != expected {
            return Err(Error::Shape(format!(
                "arity-{arity} map {in_dim} -> {out_dim} needs {expected} coefficients, got {}",
                coeff.len()
            )));
        }
        Ok(Multilinear {
            arity,
            in_dim,
            out_dim,
            coeff,
        })
    }

    /// Builds the map from its values on basis tuples.
    pub fn from_fn(arity: usize, in_dim: usize, out_dim: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut coeff = Vec::with_capacity(in_dim.pow(arity as u32) * out_dim);
        for_each_tuple(arity, in_dim, |t| {
            let v = f(t);
            debug_assert_eq!(v.len(), out_dim);
            coeff.extend(v);
        });
        Multilinear {
            arity,
            in_dim,
            out_dim,
            coeff,
        }
    }

    /// The arity-0 map with the given value.
    pub fn constant(in_dim: usize, value: Vector) -> Self {
        Multilinear {
            arity: 0,
            in_dim,
            out_dim: value.len(),
            coeff: value,
        }
    }

    /// The arity-1 map with the given matrix (rows = output, cols = input).
    pub fn from_linmap(m: &LinMap) -> Self {
        Self::from_fn(1, m.cols(), m.rows(), |t| m.col(t[0]))
    }

    /// Matrix of an arity-1 map.
    pub fn to_linmap(&self) -> Result<LinMap> {
        if self.arity != 1 {
            return Err(Error::Shape(format!("arity {} map is not linear", self.arity)));
        }
        let cols: Vec<Vector> = (0..self.in_dim).map(|u| self.value(&[u]).to_vec()).collect();
        Mat::from_cols(self.out_dim, &cols)
    }

    /// The map whose coefficient vector is the `idx`-th unit vector.
    pub fn basis_element(arity: usize, in_dim: usize, out_dim: usize, idx: usize) -> Self {
        let mut m = Self::zero(arity, in_dim, out_dim);
        m.coeff[idx] = Rational::one();
        m
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Alias of [`Multilinear::arity`] for cochains in `Hom(M^{⊗n}, A)`.
    pub fn degree(&self) -> usize {
        self.arity
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeff
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeff
    }

    /// Number of coefficients.
    pub fn len(&self) -> usize {
        self.coeff.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeff.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeff)
    }

    fn offset(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        tuple.iter().fold(0, |acc, &u| acc * self.in_dim + u) * self.out_dim
    }

    /// Value on a basis tuple.
    pub fn value(&self, tuple: &[usize]) -> &[Rational] {
        let start = self.offset(tuple);
        &self.coeff[start..start + self.out_dim]
    }

    /// Value on arbitrary vectors, by multilinear expansion (zero
    /// coordinates are skipped, so sparse arguments are cheap).
    pub fn eval<V: AsRef<[Rational]>>(&self, args: &[V]) -> Vector {
        assert_eq!(args.len(), self.arity, "argument count");
        let mut out = zero_vec(self.out_dim);
        self.eval_rec(args, 0, 0, &Rational::one(), &mut out);
        out
    }

    fn eval_rec<V: AsRef<[Rational]>>(&self, args: &[V], depth: usize, offset: usize, weight: &Rational, out: &mut [Rational]) {
        if depth == self.arity {
            let start = offset * self.out_dim;
            axpy(out, weight, &self.coeff[start..start + self.out_dim]);
            return;
        }
        for (u, x) in args[depth].as_ref().iter().enumerate() {
            if !x.is_zero() {
                self.eval_rec(args, depth + 1, offset * self.in_dim + u, &(weight * x), out);
            }
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.arity, self.in_dim, self.out_dim) != (other.arity, other.in_dim, other.out_dim) {
            return Err(Error::Shape(format!(
                "maps of shape ({}, {}, {}) and ({}, {}, {})",
                self.arity, self.in_dim, self.out_dim, other.arity, other.in_dim, other.out_dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let coeff = self.coeff.iter().zip(&other.coeff).map(|(a, b)| a + b).collect();
        Ok(self.with_coeffs(coeff))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let coeff = self.coeff.iter().zip(&other.coeff).map(|(a, b)| a - b).collect();
        Ok(self.with_coeffs(coeff))
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        let coeff = self.coeff.iter().map(|a| alpha * a).collect();
        self.with_coeffs(coeff)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// In-place `self += alpha * other`.
    pub fn add_scaled(&mut self, alpha: &Rational, other: &Self) -> Result<()> {
        self.same_shape(other)?;
        axpy(&mut self.coeff, alpha, &other.coeff);
        Ok(())
    }

    fn with_coeffs(&self, coeff: Vec<Rational>) -> Self {
        Multilinear {
            arity: self.arity,
            in_dim: self.in_dim,
            out_dim: self.out_dim,
            coeff,
        }
    }
}
