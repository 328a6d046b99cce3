//! Dense exact linear algebra over [`Rational`].
//!
//! Everything downstream (cocycle spaces, coboundary spaces, extension
//! problems) reduces to the handful of operations here: reduced row echelon
//! form, kernels, consistent/inconsistent solves and subspace arithmetic.
//! Subspaces are stored by their reduced echelon basis, which is unique, so
//! two subspaces are equal exactly when their bases compare equal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Vector = Vec<Rational>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// `y += alpha * x`.
pub fn axpy(y: &mut [Rational], alpha: &Rational, x: &[Rational]) {
    if alpha.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += alpha * xi;
        }
    }
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(alpha: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| alpha * x).collect()
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// A linear map between based spaces, stored as the matrix acting on
/// column vectors: `rows` = target dimension, `cols` = source dimension.
pub type LinMap = Mat;

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    /// Builds a matrix from rows. All rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Mat { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape(format!("column {j} has {} entries, expected {rows}", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    /// Convenience constructor from small integer fractions `(num, den)`.
    pub fn from_fracs(rows: usize, cols: usize, entries: &[(i64, i64)]) -> Self {
        let data = entries.iter().map(|&(n, d)| Rational::new(n, d)).collect();
        Self::from_vec(rows, cols, data).expect("entry count")
    }

    /// Convenience constructor from integers.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        let data = entries.iter().map(|&n| Rational::from_integer(n)).collect();
        Self::from_vec(rows, cols, data).expect("entry count")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// `v^T * self`.
    pub fn apply_left(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = zero_vec(self.cols);
        for (i, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_same_shape(other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &other.data),
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.check_same_shape(other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &other.data),
        })
    }

    pub fn scale(&self, alpha: &Rational) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: scale_vec(alpha, &self.data),
        }
    }

    fn check_same_shape(&self, other: &Mat) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
    pub reduced: Mat,
}

/// Gauss-Jordan elimination to the unique reduced row echelon form.
pub fn rref(m: &Mat) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip().expect("nonzero pivot");
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] *= &inv;
            }
        }
        let pivot_row: Vector = a.row(r).to_vec();
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = -a[(i, c)].clone();
            axpy(&mut a.data[i * cols..(i + 1) * cols], &factor, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        rank: pivots.len(),
        pivots,
        reduced: a,
    }
}

/// A linear subspace of `Q^ambient_dim`, held by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect(),
        }
    }

    /// The span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let m = Mat::from_rows(ambient_dim, vectors.to_vec())?;
        let r = rref(&m);
        let basis = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        // Reduce v against the echelon basis; pivots are leading ones.
        let mut w = v.to_vec();
        for b in &self.basis {
            let p = b.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            if !w[p].is_zero() {
                let factor = -w[p].clone();
                axpy(&mut w, &factor, b);
            }
        }
        is_zero_vec(&w)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Vectors from `self`'s basis that extend a basis of `sub` to a basis
    /// of `self`. Deterministic given the canonical bases.
    pub fn complement_of(&self, sub: &Subspace) -> Vec<Vector> {
        let mut current = sub.clone();
        let mut out = Vec::new();
        for v in &self.basis {
            if !current.contains(v) {
                out.push(v.clone());
                let mut vs = current.basis.clone();
                vs.push(v.clone());
                current = Subspace::span(self.ambient_dim, &vs).expect("consistent lengths");
            }
        }
        out
    }
}

/// Basis of `{v : m v = 0}`, in canonical echelon form.
pub fn kernel(m: &Mat) -> Subspace {
    let r = rref(m);
    let cols = m.cols;
    let mut vectors = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(cols);
        v[free] = Rational::one();
        for (row, &p) in r.pivots.iter().enumerate() {
            let x = &r.reduced[(row, free)];
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        vectors.push(v);
    }
    Subspace::span(cols, &vectors).expect("consistent lengths")
}

/// Column span of `m`.
pub fn image(m: &Mat) -> Subspace {
    let cols: Vec<Vector> = (0..m.cols).map(|j| m.col(j)).collect();
    Subspace::span(m.rows, &cols).expect("consistent lengths")
}

/// Result of [`solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    /// A particular solution with every free variable set to zero.
    Solution(Vector),
    /// A vector `c` with `c^T m = 0` and `c^T b != 0`.
    Inconsistent(Vector),
}

impl Solve {
    pub fn solution(&self) -> Option<&Vector> {
        match self {
            Solve::Solution(x) => Some(x),
            Solve::Inconsistent(_) => None,
        }
    }
}

/// Solves `m x = b` exactly.
pub fn solve(m: &Mat, b: &[Rational]) -> Result<Solve> {
    if b.len() != m.rows {
        return Err(Error::Shape(format!(
            "right-hand side has {} entries, matrix has {} rows",
            b.len(),
            m.rows
        )));
    }
    let mut aug = Mat::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let r = rref(&aug);
    if r.pivots.last() == Some(&m.cols) {
        let left = kernel(&m.transpose());
        let witness = left
            .basis()
            .iter()
            .find(|c| !dot(c, b).is_zero())
            .cloned()
            .expect("inconsistent system has a separating left-kernel vector");
        return Ok(Solve::Inconsistent(witness));
    }
    let mut x = zero_vec(m.cols);
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.reduced[(row, m.cols)].clone();
    }
    Ok(Solve::Solution(x))
}

/// `dim z - dim b`, after checking `b ⊆ z`.
pub fn quotient_dim(z: &Subspace, b: &Subspace) -> Result<usize> {
    if z.ambient_dim != b.ambient_dim {
        return Err(Error::Shape(format!(
            "ambient dimensions {} and {}",
            z.ambient_dim, b.ambient_dim
        )));
    }
    if !z.contains_subspace(b) {
        return Err(Error::NotContained);
    }
    Ok(z.dim() - b.dim())
}
