//! Associative r-matrices `r ∈ ∧²A`, the map `r♯: A* → A`, the bracket
//! `[[r, r]]`, triangular infinitesimal bialgebras and weak morphisms.
//!
//! `A*` is handled through the dual basis. With `r = Σ R_ij e_i ⊗ e_j`,
//! `⟨β, r♯(α)⟩ = r(α, β)` gives `r♯(e_i*) = Σ_j R_ij e_j`.

use serde::{Deserialize, Serialize};

use crate::algebra::{is_algebra_morphism, Algebra, Bimodule};
use crate::deformation::TruncatedDeformation;
use crate::error::{Error, Result};
use crate::linalg::{axpy, unit_vec, LinMap, Mat, Vector};
use crate::operators::{is_o_morphism, OOperatorCandidate};
use crate::rational::Rational;

/// An element `Σ_{i<j} r_ij (e_i ⊗ e_j - e_j ⊗ e_i)` of `∧²A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WedgeFile", into = "WedgeFile")]
pub struct Wedge2 {
    dim: usize,
    /// `r_ij` for `i < j`, in lexicographic order.
    upper: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct WedgeFile {
    dim: usize,
    entries: Vec<(usize, usize, Rational)>,
}

impl From<Wedge2> for WedgeFile {
    fn from(w: Wedge2) -> Self {
        let entries = w
            .pairs()
            .filter(|(_, _, x)| !x.is_zero())
            .map(|(i, j, x)| (i, j, x.clone()))
            .collect();
        WedgeFile { dim: w.dim, entries }
    }
}

impl TryFrom<WedgeFile> for Wedge2 {
    type Error = Error;

    fn try_from(f: WedgeFile) -> Result<Self> {
        let mut w = Wedge2::zero(f.dim);
        for (i, j, x) in f.entries {
            w.set(i, j, x)?;
        }
        Ok(w)
    }
}

impl Wedge2 {
    pub fn zero(dim: usize) -> Self {
        Wedge2 {
            dim,
            upper: vec![Rational::zero(); dim * dim.saturating_sub(1) / 2],
        }
    }

    /// From the coefficients `r_ij`, `i < j`, in lexicographic order.
    pub fn from_upper(dim: usize, upper: Vec<Rational>) -> Result<Self> {
        if upper.len() != dim * dim.saturating_sub(1) / 2 {
            return Err(Error::Shape(format!(
                "∧² of a {dim}-dim space has {} coefficients",
                dim * dim.saturating_sub(1) / 2
            )));
        }
        Ok(Wedge2 { dim, upper })
    }

    fn index(&self, i: usize, j: usize) -> usize {
        // Rows 0..i contribute (n-1) + (n-2) + ... entries.
        i * self.dim - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) -> Result<()> {
        if i >= j || j >= self.dim {
            return Err(Error::Shape(format!("need i < j < {}, got ({i}, {j})", self.dim)));
        }
        let k = self.index(i, j);
        self.upper[k] = value;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    /// `(i, j, r_ij)` for all `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        (0..self.dim).flat_map(move |i| (i + 1..self.dim).map(move |j| (i, j, &self.upper[self.index(i, j)])))
    }

    /// The full coefficient matrix `R` with `R_ij = -R_ji`.
    pub fn tensor(&self) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (i, j, x) in self.pairs() {
            m[(i, j)] = x.clone();
            m[(j, i)] = -x;
        }
        m
    }

    /// Reads an antisymmetric matrix back.
    pub fn from_tensor(m: &Mat) -> Result<Self> {
        if m.transpose() != m.scale(&-Rational::one()) {
            return Err(Error::Shape("tensor is not antisymmetric".into()));
        }
        let mut w = Wedge2::zero(m.rows());
        for i in 0..m.rows() {
            for j in i + 1..m.rows() {
                w.set(i, j, m[(i, j)].clone())?;
            }
        }
        Ok(w)
    }

    pub fn add_scaled(&self, alpha: &Rational, other: &Wedge2) -> Result<Wedge2> {
        if self.dim != other.dim {
            return Err(Error::Shape("wedges of different dimensions".into()));
        }
        let upper = self.upper.iter().zip(&other.upper).map(|(a, b)| a + alpha * b).collect();
        Ok(Wedge2 { dim: self.dim, upper })
    }
}

fn check_dim(alg: &Algebra, r: &Wedge2) -> Result<()> {
    if alg.dim() != r.dim() {
        return Err(Error::Shape(format!(
            "r lives in a {}-dim space, algebra has dim {}",
            r.dim(),
            alg.dim()
        )));
    }
    Ok(())
}

/// The matrix of `r♯: A* → A` (column `i` is `r♯(e_i*)`).
pub fn r_sharp(r: &Wedge2) -> LinMap {
    r.tensor().transpose()
}

/// `⟨r♯(α)·s♯(β), γ⟩ + ⟨r♯(β)·s♯(γ), α⟩ + ⟨r♯(γ)·s♯(α), β⟩` on dual basis triples,
/// indexed `[α][β][γ]`.
pub fn yb_pairing(alg: &Algebra, r: &Wedge2, s: &Wedge2) -> Result<Vec<Rational>> {
    check_dim(alg, r)?;
    check_dim(alg, s)?;
    let n = alg.dim();
    let (rs, ss) = (r_sharp(r), r_sharp(s));
    let prods: Vec<Vector> = (0..n * n).map(|k| alg.mul(&rs.col(k / n), &ss.col(k % n))).collect();
    let mut out = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.push(&prods[a * n + b][c] + &prods[b * n + c][a] + &prods[c * n + a][b]);
            }
        }
    }
    Ok(out)
}

/// `[[r, r]]` on dual basis triples, indexed `[α][β][γ]`.
pub fn yb_bracket(alg: &Algebra, r: &Wedge2) -> Result<Vec<Rational>> {
    yb_pairing(alg, r, r)
}

/// `r♯` as a candidate O-operator over the coadjoint bimodule.
pub fn r_sharp_operator(alg: &Algebra, r: &Wedge2) -> Result<OOperatorCandidate> {
    check_dim(alg, r)?;
    OOperatorCandidate::new(Bimodule::coadjoint(alg), r_sharp(r))
}

/// Both routes: `[[r, r]] = 0` and `r♯` being an O-operator on `A*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixReport {
    pub bracket_vanishes: bool,
    pub sharp_is_o_operator: bool,
}

impl RMatrixReport {
    pub fn is_r_matrix(&self) -> bool {
        self.bracket_vanishes
    }

    pub fn routes_agree(&self) -> bool {
        self.bracket_vanishes == self.sharp_is_o_operator
    }
}

pub fn check_r_matrix(alg: &Algebra, r: &Wedge2) -> Result<RMatrixReport> {
    Ok(RMatrixReport {
        bracket_vanishes: yb_bracket(alg, r)?.iter().all(Rational::is_zero),
        sharp_is_o_operator: r_sharp_operator(alg, r)?.is_o_operator(),
    })
}

pub fn is_r_matrix(alg: &Algebra, r: &Wedge2) -> Result<bool> {
    Ok(check_r_matrix(alg, r)?.is_r_matrix())
}

/// A coproduct `△: A → A ⊗ A`, with `delta[k][i][j]` the coefficient of
/// `e_i ⊗ e_j` in `△(e_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coproduct {
    dim: usize,
    delta: Vec<Rational>,
}

impl Coproduct {
    pub fn new(dim: usize, delta: Vec<Rational>) -> Result<Self> {
        if delta.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "coproduct on a {dim}-dim space needs {} entries",
                dim * dim * dim
            )));
        }
        Ok(Coproduct { dim, delta })
    }

    pub fn zero(dim: usize) -> Self {
        Coproduct {
            dim,
            delta: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// The coproduct dual to a product on `A*` under the pairing
    /// `⟨α ⊗ β, a ⊗ b⟩ = ⟨α, b⟩⟨β, a⟩`, so `⟨△(a), α ⊗ β⟩ = ⟨β ⋆ α, a⟩`.
    pub fn dual_of(star: &Algebra) -> Self {
        let n = star.dim();
        let mut delta = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, x) in star.basis_product(j, i).iter().enumerate() {
                    delta[(k * n + i) * n + j] = x.clone();
                }
            }
        }
        Coproduct { dim: n, delta }
    }

    /// The product on `A*` dual to this coproduct; inverse of [`Coproduct::dual_of`].
    pub fn dual_algebra(&self) -> Algebra {
        let n = self.dim;
        Algebra::from_fn(n, |i, j| (0..n).map(|k| self.delta[(k * n + j) * n + i].clone()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.delta[(k * self.dim + i) * self.dim + j]
    }

    /// `△(a)` as an `n × n` matrix of coefficients.
    pub fn apply(&self, a: &[Rational]) -> Mat {
        let n = self.dim;
        let mut m = Mat::zeros(n, n);
        for (k, ak) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = &m[(i, j)] + ak * self.coeff(k, i, j);
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.delta.iter().all(Rational::is_zero)
    }

    /// `(△ ⊗ id)△ = (id ⊗ △)△`, equivalently associativity of the dual product.
    pub fn is_coassociative(&self) -> bool {
        self.dual_algebra().is_associative()
    }
}

/// `△_r`, dual to `α ⋆ β = α·r♯(β) + r♯(α)·β` on `A*`; it equals `a ↦ r·a - a·r`.
pub fn induced_coproduct(alg: &Algebra, r: &Wedge2) -> Result<Coproduct> {
    if !is_r_matrix(alg, r)? {
        return Err(Error::NotRMatrix);
    }
    let star = crate::operators::induced_star(&r_sharp_operator(alg, r)?)?;
    Ok(Coproduct::dual_of(&star))
}

/// Outcome of [`infinitesimal_bialgebra_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraReport {
    pub coassociative: bool,
    /// First basis pair `(a, b)` where `△(ab) ≠ a△(b) + △(a)b`.
    pub derivation_failure: Option<(usize, usize)>,
}

impl BialgebraReport {
    pub fn holds(&self) -> bool {
        self.coassociative && self.derivation_failure.is_none()
    }
}

/// Coassociativity and `△(ab) = a△(b) + △(a)b` with `a(b⊗c) = ab⊗c`, `(b⊗c)a = b⊗ca`.
pub fn infinitesimal_bialgebra_check(alg: &Algebra, delta: &Coproduct) -> Result<BialgebraReport> {
    let n = alg.dim();
    if delta.dim() != n {
        return Err(Error::Shape(format!(
            "coproduct on dim {} for an algebra of dim {n}",
            delta.dim()
        )));
    }
    let left = |p: usize| alg.left_mul_matrix(&unit_vec(n, p));
    let right = |q: usize| alg.right_mul_matrix(&unit_vec(n, q));
    let mut derivation_failure = None;
    'outer: for p in 0..n {
        for q in 0..n {
            let lhs = delta.apply(alg.basis_product(p, q));
            // a(b⊗c) = L_a acting on the first factor; (b⊗c)a = R_a on the second.
            let rhs = left(p)
                .mul(&delta.apply(&unit_vec(n, q)))?
                .add(&delta.apply(&unit_vec(n, p)).mul(&right(q).transpose())?)?;
            if lhs != rhs {
                derivation_failure = Some((p, q));
                break 'outer;
            }
        }
    }
    Ok(BialgebraReport {
        coassociative: delta.is_coassociative(),
        derivation_failure,
    })
}

/// Which defining identity of a weak morphism failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeakIdentity {
    /// `(ψ ⊗ id)(r_2) = (id ⊗ φ)(r_1)`.
    Tensor,
    /// `ψ(φ(a)·b) = a·ψ(b)`.
    Left,
    /// `ψ(a·φ(b)) = ψ(a)·b`.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakMorphismReport {
    pub failed: Vec<WeakIdentity>,
    /// Whether `(φ, ψ*)` is an O-morphism from `r_1♯` to `r_2♯`.
    pub dual_route: bool,
}

impl WeakMorphismReport {
    pub fn is_weak_morphism(&self) -> bool {
        self.failed.is_empty()
    }
}

fn compat_failures(alg: &Algebra, phi: &LinMap, psi: &LinMap) -> (bool, bool) {
    let n = alg.dim();
    let mut left = true;
    let mut right = true;
    for a in 0..n {
        let ea = unit_vec(n, a);
        for b in 0..n {
            let eb = unit_vec(n, b);
            left &= psi.apply(&alg.mul(&phi.col(a), &eb)) == alg.mul(&ea, &psi.col(b));
            right &= psi.apply(&alg.mul(&ea, &phi.col(b))) == alg.mul(&psi.col(a), &eb);
        }
    }
    (left, right)
}

fn check_square_maps(alg: &Algebra, maps: &[&LinMap]) -> Result<()> {
    let n = alg.dim();
    if maps.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::Shape(format!("maps must be {n}x{n}")));
    }
    Ok(())
}

/// Checks a weak morphism `(φ, ψ)` from `r_1` to `r_2` directly and through `r♯`.
pub fn weak_morphism_check(alg: &Algebra, r1: &Wedge2, r2: &Wedge2, phi: &LinMap, psi: &LinMap) -> Result<WeakMorphismReport> {
    check_square_maps(alg, &[phi, psi])?;
    if !is_algebra_morphism(phi, alg, alg)? {
        return Err(Error::NotAlgebraMorphism);
    }
    let mut failed = Vec::new();
    if psi.mul(&r2.tensor())? != r1.tensor().mul(&phi.transpose())? {
        failed.push(WeakIdentity::Tensor);
    }
    let (left, right) = compat_failures(alg, phi, psi);
    if !left {
        failed.push(WeakIdentity::Left);
    }
    if !right {
        failed.push(WeakIdentity::Right);
    }
    let (o1, o2) = (r_sharp_operator(alg, r1)?, r_sharp_operator(alg, r2)?);
    let dual_route = is_o_morphism(&o1, &o2, phi, &psi.transpose())?.is_morphism();
    Ok(WeakMorphismReport { failed, dual_route })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraWeakReport {
    pub phi_is_algebra_morphism: bool,
    /// `(ψ ⊗ ψ)△_2 = △_1 ψ`, i.e. `ψ*` is an algebra map from the first dual product to the second.
    pub psi_dual_is_algebra_map: bool,
    pub left_compatible: bool,
    pub right_compatible: bool,
}

impl BialgebraWeakReport {
    pub fn holds(&self) -> bool {
        self.phi_is_algebra_morphism && self.psi_dual_is_algebra_map && self.left_compatible && self.right_compatible
    }
}

/// Weak morphism `(φ, ψ)` from `(A, ·, △_1)` to `(A, ·, △_2)`.
///
/// The coalgebra condition is the one the transport from r-matrices
/// produces: `ψ*` maps the product dual to `△_1` to the one dual to `△_2`.
pub fn bialgebra_weak_morphism_check(
    alg: &Algebra,
    delta1: &Coproduct,
    delta2: &Coproduct,
    phi: &LinMap,
    psi: &LinMap,
) -> Result<BialgebraWeakReport> {
    check_square_maps(alg, &[phi, psi])?;
    let (s1, s2) = (delta1.dual_algebra(), delta2.dual_algebra());
    let (left_compatible, right_compatible) = compat_failures(alg, phi, psi);
    Ok(BialgebraWeakReport {
        phi_is_algebra_morphism: is_algebra_morphism(phi, alg, alg)?,
        psi_dual_is_algebra_map: is_algebra_morphism(&psi.transpose(), &s1, &s2)?,
        left_compatible,
        right_compatible,
    })
}

/// Both sides of the linear-deformation transport for `r + tκ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearTransportReport {
    /// Every `t`-coefficient of `[[r + tκ, r + tκ]]` vanishes.
    pub r_matrix_for_all_t: bool,
    /// `r♯ + tκ♯` is a linear deformation of the O-operator `r♯`.
    pub sharp_deformation: bool,
}

pub fn linear_deformation_transport(alg: &Algebra, r: &Wedge2, kappa: &Wedge2) -> Result<LinearTransportReport> {
    if !is_r_matrix(alg, r)? {
        return Err(Error::NotRMatrix);
    }
    let zero = |v: &[Rational]| v.iter().all(Rational::is_zero);
    let mut linear = yb_pairing(alg, r, kappa)?;
    let other = yb_pairing(alg, kappa, r)?;
    axpy(&mut linear, &Rational::one(), &other);
    let r_matrix_for_all_t = zero(&linear) && zero(&yb_bracket(alg, kappa)?);
    let d = TruncatedDeformation::new(r_sharp_operator(alg, r)?, vec![r_sharp(kappa)])?;
    Ok(LinearTransportReport {
        r_matrix_for_all_t,
        sharp_deformation: d.holds_for_all_t()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::qi;

    fn one_wedge_x() -> Wedge2 {
        Wedge2::from_upper(2, vec![qi(1)]).unwrap()
    }

    #[test]
    fn sharp_on_dual2() {
        let s = r_sharp(&one_wedge_x());
        assert_eq!(s.col(0), vec![qi(0), qi(1)]);
        assert_eq!(s.col(1), vec![qi(-1), qi(0)]);
        assert!(r_sharp(&Wedge2::zero(2)).is_zero());
    }

    #[test]
    fn bracket_on_dual2() {
        let b = yb_bracket(&fixtures::dual2(), &one_wedge_x()).unwrap();
        // (1*, x*, x*) has index (0*2 + 1)*2 + 1.
        assert_eq!(b[3], qi(-1));
        let rep = check_r_matrix(&fixtures::dual2(), &one_wedge_x()).unwrap();
        assert!(!rep.is_r_matrix() && rep.routes_agree());
    }

    #[test]
    fn wedge_indexing() {
        let mut w = Wedge2::zero(4);
        w.set(1, 3, qi(7)).unwrap();
        w.set(0, 1, qi(2)).unwrap();
        assert_eq!(w.tensor()[(3, 1)], qi(-7));
        assert_eq!(Wedge2::from_tensor(&w.tensor()).unwrap(), w);
        assert!(w.set(2, 2, qi(1)).is_err());
    }

    #[test]
    fn abelian_bracket_vanishes() {
        let r = one_wedge_x();
        assert!(is_r_matrix(&fixtures::abelian2(), &r).unwrap());
        assert!(induced_coproduct(&fixtures::abelian2(), &r).unwrap().is_zero());
        assert_eq!(induced_coproduct(&fixtures::dual2(), &r), Err(Error::NotRMatrix));
    }

    #[test]
    fn zero_coproduct_is_a_bialgebra() {
        assert!(infinitesimal_bialgebra_check(&fixtures::ut2(), &Coproduct::zero(3))
            .unwrap()
            .holds());
    }

    #[test]
    fn dual_round_trip() {
        let d = Coproduct::new(2, (0..8).map(qi).collect()).unwrap();
        assert_eq!(Coproduct::dual_of(&d.dual_algebra()), d);
    }
}
