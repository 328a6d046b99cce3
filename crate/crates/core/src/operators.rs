//! O-operators and their relatives: Rota-Baxter and averaging operators,
//! the structures an O-operator induces, morphisms, Nijenhuis lifts and
//! Nijenhuis elements.
//!
//! A linear map `T: M → A` is an O-operator when
//! `T(m)·T(n) = T(mT(n) + T(m)n)` for all `m, n ∈ M`.

use serde::{Deserialize, Serialize};

use crate::algebra::{is_algebra_morphism, semidirect_product, Algebra, Bimodule, Side};
use crate::cochains::dendriform::{dendriform_axiom_residuals, DendCochain};
use crate::cochains::lie::star;
use crate::cochains::multilinear::{Cochain, Multilinear};
use crate::error::{Error, Result};
use crate::linalg::{add_vec, axpy, is_zero_vec, sub_vec, unit_vec, zero_vec, LinMap, Mat, Subspace, Vector};
use crate::rational::Rational;

/// A linear map `T: M → A` together with the bimodule it is measured against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OOperatorCandidate {
    bimodule: Bimodule,
    matrix: LinMap,
}

impl OOperatorCandidate {
    /// Checks the shape `alg_dim × module_dim`; the identity itself is not checked.
    pub fn new(bimodule: Bimodule, matrix: LinMap) -> Result<Self> {
        if matrix.rows() != bimodule.alg_dim() || matrix.cols() != bimodule.dim() {
            return Err(Error::Shape(format!(
                "operator is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                bimodule.alg_dim(),
                bimodule.dim()
            )));
        }
        Ok(OOperatorCandidate { bimodule, matrix })
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn matrix(&self) -> &LinMap {
        &self.matrix
    }

    pub fn apply(&self, m: &[Rational]) -> Vector {
        self.matrix.apply(m)
    }

    /// Same bimodule, different map.
    pub fn with_matrix(&self, matrix: LinMap) -> Result<Self> {
        Self::new(self.bimodule.clone(), matrix)
    }

    /// `defect(u, v) = T(u)T(v) - T(uT(v) + T(u)v)` on basis pairs.
    pub fn defect(&self) -> Cochain {
        let module = &self.bimodule;
        let alg = module.algebra();
        let dm = module.dim();
        Multilinear::from_fn(2, dm, module.alg_dim(), |t| {
            let (u, v) = (unit_vec(dm, t[0]), unit_vec(dm, t[1]));
            let (tu, tv) = (self.matrix.col(t[0]), self.matrix.col(t[1]));
            let inner = add_vec(&module.act_right(&u, &tv), &module.act_left(&tu, &v));
            sub_vec(&alg.mul(&tu, &tv), &self.matrix.apply(&inner))
        })
    }

    pub fn is_o_operator(&self) -> bool {
        self.defect().is_zero()
    }

    /// Errors with the number of failing basis pairs unless `T` is an O-operator.
    pub fn ensure(&self) -> Result<()> {
        let defect = self.defect();
        let dm = self.bimodule.dim();
        let bad = (0..dm * dm)
            .filter(|&k| !is_zero_vec(defect.value(&[k / dm, k % dm])))
            .count();
        if bad > 0 {
            return Err(Error::NotOOperator(bad));
        }
        Ok(())
    }

    /// `l_T(m, a) = T(m)a - T(ma)`.
    pub fn l_t(&self, m: &[Rational], a: &[Rational]) -> Vector {
        let alg = self.bimodule.algebra();
        sub_vec(&alg.mul(&self.apply(m), a), &self.apply(&self.bimodule.act_right(m, a)))
    }

    /// `r_T(a, m) = aT(m) - T(am)`.
    pub fn r_t(&self, a: &[Rational], m: &[Rational]) -> Vector {
        let alg = self.bimodule.algebra();
        sub_vec(&alg.mul(a, &self.apply(m)), &self.apply(&self.bimodule.act_left(a, m)))
    }

    /// `m ⋆ n = mT(n) + T(m)n`.
    pub fn star(&self, m: &[Rational], n: &[Rational]) -> Vector {
        star(&self.bimodule, &self.matrix, m, n)
    }
}

/// Free-function form of [`OOperatorCandidate::defect`].
pub fn o_operator_defect(op: &OOperatorCandidate) -> Cochain {
    op.defect()
}

fn check_square(alg: &Algebra, r: &LinMap) -> Result<()> {
    if r.rows() != alg.dim() || r.cols() != alg.dim() {
        return Err(Error::Shape(format!(
            "map is {}x{} on an algebra of dim {}",
            r.rows(),
            r.cols(),
            alg.dim()
        )));
    }
    Ok(())
}

/// `R(a)R(b) = R(aR(b) + R(a)b + λab)` on all basis pairs.
pub fn is_rota_baxter(alg: &Algebra, r: &LinMap, weight: &Rational) -> Result<bool> {
    check_square(alg, r)?;
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let (ri, rj) = (r.col(i), r.col(j));
            let mut inner = alg.mul(&unit_vec(n, i), &rj);
            axpy(&mut inner, &Rational::one(), &alg.mul(&ri, &unit_vec(n, j)));
            axpy(&mut inner, weight, alg.basis_product(i, j));
            if alg.mul(&ri, &rj) != r.apply(&inner) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn averaging_holds(alg: &Algebra, p: &LinMap, side: Side) -> Result<bool> {
    check_square(alg, p)?;
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (p.col(i), p.col(j));
            let inner = match side {
                Side::Left => alg.mul(&pi, &unit_vec(n, j)),
                Side::Right => alg.mul(&unit_vec(n, i), &pj),
            };
            if alg.mul(&pi, &pj) != p.apply(&inner) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `P(a)P(b) = P(P(a)b)`.
pub fn is_left_averaging(alg: &Algebra, p: &LinMap) -> Result<bool> {
    averaging_holds(alg, p, Side::Left)
}

/// `P(a)P(b) = P(aP(b))`.
pub fn is_right_averaging(alg: &Algebra, p: &LinMap) -> Result<bool> {
    averaging_holds(alg, p, Side::Right)
}

pub fn is_averaging(alg: &Algebra, p: &LinMap) -> Result<bool> {
    Ok(is_left_averaging(alg, p)? && is_right_averaging(alg, p)?)
}

/// A pair of products `≺, ≻` on a vector space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dendriform {
    pub prec: Multilinear,
    pub succ: Multilinear,
}

impl Dendriform {
    pub fn new(prec: Multilinear, succ: Multilinear) -> Result<Self> {
        let d = prec.in_dim();
        for x in [&prec, &succ] {
            if x.arity() != 2 || x.in_dim() != d || x.out_dim() != d {
                return Err(Error::Shape("dendriform products must be bilinear maps D⊗D → D".into()));
            }
        }
        Ok(Dendriform { prec, succ })
    }

    pub fn dim(&self) -> usize {
        self.prec.in_dim()
    }

    /// The element of the dendriform operad with labels `[1] = ≺`, `[2] = ≻`.
    pub fn as_operad_element(&self) -> DendCochain {
        DendCochain::from_pair(self.prec.clone(), self.succ.clone()).expect("shapes checked on construction")
    }

    /// Left minus right side of each of the three axioms.
    pub fn axiom_residuals(&self) -> [Multilinear; 3] {
        dendriform_axiom_residuals(&self.as_operad_element()).expect("arity 2")
    }

    pub fn is_valid(&self) -> bool {
        self.axiom_residuals().iter().all(Multilinear::is_zero)
    }

    /// `a ⋆ b = a ≺ b + a ≻ b`.
    pub fn star(&self) -> Algebra {
        let d = self.dim();
        Algebra::from_fn(d, |i, j| add_vec(self.prec.value(&[i, j]), self.succ.value(&[i, j])))
    }
}

/// `m ≺ n = mT(n)`, `m ≻ n = T(m)n`.
pub fn induced_dendriform(op: &OOperatorCandidate) -> Result<Dendriform> {
    op.ensure()?;
    let module = op.bimodule();
    let dm = module.dim();
    let prec = Multilinear::from_fn(2, dm, dm, |t| module.act_right(&unit_vec(dm, t[0]), &op.matrix().col(t[1])));
    let succ = Multilinear::from_fn(2, dm, dm, |t| module.act_left(&op.matrix().col(t[0]), &unit_vec(dm, t[1])));
    Dendriform::new(prec, succ)
}

/// `(M, ⋆)` with `m ⋆ n = mT(n) + T(m)n`.
pub fn induced_star(op: &OOperatorCandidate) -> Result<Algebra> {
    op.ensure()?;
    let dm = op.bimodule().dim();
    Ok(Algebra::from_fn(dm, |i, j| op.star(&unit_vec(dm, i), &unit_vec(dm, j))))
}

/// The pre-Lie product `m ∘ n = T(m)n - nT(m)`.
pub fn induced_prelie(op: &OOperatorCandidate) -> Result<Multilinear> {
    op.ensure()?;
    let module = op.bimodule();
    let dm = module.dim();
    Ok(Multilinear::from_fn(2, dm, dm, |t| {
        let tm = op.matrix().col(t[0]);
        let n = unit_vec(dm, t[1]);
        sub_vec(&module.act_left(&tm, &n), &module.act_right(&n, &tm))
    }))
}

/// `(a∘b)∘c - a∘(b∘c) - (b∘a)∘c + b∘(a∘c)` on basis triples.
pub fn left_prelie_residual(p: &Multilinear) -> Result<Multilinear> {
    if p.arity() != 2 || p.in_dim() != p.out_dim() {
        return Err(Error::Shape("pre-Lie product must be a bilinear map V⊗V → V".into()));
    }
    let d = p.in_dim();
    let e = |k: usize| unit_vec(d, k);
    Ok(Multilinear::from_fn(3, d, d, |t| {
        let assoc = |x: usize, y: usize, z: usize| {
            sub_vec(
                &p.eval(&[p.value(&[x, y]).to_vec(), e(z)]),
                &p.eval(&[e(x), p.value(&[y, z]).to_vec()]),
            )
        };
        sub_vec(&assoc(t[0], t[1], t[2]), &assoc(t[1], t[0], t[2]))
    }))
}

pub fn is_left_prelie(p: &Multilinear) -> Result<bool> {
    Ok(left_prelie_residual(p)?.is_zero())
}

/// `A` as a bimodule over `(M, ⋆)` with `l_T(m, a) = T(m)a - T(ma)` and
/// `r_T(a, m) = aT(m) - T(am)`.
pub fn induced_bimodule_on_a(op: &OOperatorCandidate) -> Result<Bimodule> {
    let star_alg = induced_star(op)?;
    let (dm, da) = (op.bimodule().dim(), op.bimodule().alg_dim());
    let mut left = Vec::with_capacity(dm * da * da);
    for i in 0..dm {
        for u in 0..da {
            left.extend(op.l_t(&unit_vec(dm, i), &unit_vec(da, u)));
        }
    }
    let mut right = Vec::with_capacity(da * dm * da);
    for u in 0..da {
        for i in 0..dm {
            right.extend(op.r_t(&unit_vec(da, u), &unit_vec(dm, i)));
        }
    }
    Bimodule::new(star_alg, da, left, right)
}

/// `N_T = (0 T; 0 0)` on `A ⊕ M`, with the `A` basis first.
pub fn nijenhuis_lift(op: &OOperatorCandidate) -> LinMap {
    let (da, dm) = (op.bimodule().alg_dim(), op.bimodule().dim());
    let cols: Vec<Vector> = (0..da + dm)
        .map(|c| {
            let mut col = zero_vec(da + dm);
            if c >= da {
                col[..da].clone_from_slice(&op.matrix().col(c - da));
            }
            col
        })
        .collect();
    Mat::from_cols(da + dm, &cols).expect("square")
}

/// `N(a)N(b) - N(N(a)b + aN(b) - N(ab))` on basis pairs.
pub fn nijenhuis_torsion(alg: &Algebra, n: &LinMap) -> Result<Multilinear> {
    check_square(alg, n)?;
    let d = alg.dim();
    Ok(Multilinear::from_fn(2, d, d, |t| {
        let (na, nb) = (n.col(t[0]), n.col(t[1]));
        let mut inner = alg.mul(&na, &unit_vec(d, t[1]));
        axpy(&mut inner, &Rational::one(), &alg.mul(&unit_vec(d, t[0]), &nb));
        axpy(&mut inner, &-Rational::one(), &n.apply(alg.basis_product(t[0], t[1])));
        sub_vec(&alg.mul(&na, &nb), &n.apply(&inner))
    }))
}

pub fn is_nijenhuis_operator(alg: &Algebra, n: &LinMap) -> Result<bool> {
    Ok(nijenhuis_torsion(alg, n)?.is_zero())
}

/// Whether `N_T` is a Nijenhuis operator on the semidirect product.
pub fn nijenhuis_lift_check(op: &OOperatorCandidate) -> Result<bool> {
    let semi = semidirect_product(op.bimodule())?;
    is_nijenhuis_operator(&semi, &nijenhuis_lift(op))
}

/// Whether `Gr(T) = {(T(m), m)}` is closed under the semidirect product.
pub fn graph_subalgebra_check(op: &OOperatorCandidate) -> Result<bool> {
    let semi = semidirect_product(op.bimodule())?;
    let (da, dm) = (op.bimodule().alg_dim(), op.bimodule().dim());
    let graph_vec = |u: usize| {
        let mut v = op.matrix().col(u);
        v.extend(unit_vec(dm, u));
        v
    };
    let gens: Vec<Vector> = (0..dm).map(graph_vec).collect();
    let graph = Subspace::span(da + dm, &gens)?;
    for x in &gens {
        for y in &gens {
            if !graph.contains(&semi.mul(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the `N_T`-deformed product on `A ⊕ M` is
/// `(a,m)·(b,n) = (l_T(m,b) + r_T(a,n), m⋆n)` on all basis pairs.
pub fn deformed_semidirect_check(op: &OOperatorCandidate) -> Result<bool> {
    op.ensure()?;
    let semi = semidirect_product(op.bimodule())?;
    let n = nijenhuis_lift(op);
    let (da, dm) = (op.bimodule().alg_dim(), op.bimodule().dim());
    let d = da + dm;
    for x in 0..d {
        for y in 0..d {
            let (ex, ey) = (unit_vec(d, x), unit_vec(d, y));
            let mut deformed = semi.mul(&n.col(x), &ey);
            axpy(&mut deformed, &Rational::one(), &semi.mul(&ex, &n.col(y)));
            axpy(&mut deformed, &-Rational::one(), &n.apply(semi.basis_product(x, y)));
            let (a, m) = (&ex[..da], &ex[da..]);
            let (b, nn) = (&ey[..da], &ey[da..]);
            let mut expected = add_vec(&op.l_t(m, b), &op.r_t(a, nn));
            expected.extend(op.star(m, nn));
            if deformed != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the three identities defining a morphism `(φ, ψ)` from `T` to `T'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OMorphismReport {
    /// `T' ∘ ψ = φ ∘ T`.
    pub intertwines: bool,
    /// `φ(a)ψ(m) = ψ(am)`.
    pub left_equivariant: bool,
    /// `ψ(m)φ(a) = ψ(ma)`.
    pub right_equivariant: bool,
}

impl OMorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.intertwines && self.left_equivariant && self.right_equivariant
    }
}

fn check_morphism_shapes(t: &OOperatorCandidate, t2: &OOperatorCandidate, phi: &LinMap, psi: &LinMap) -> Result<()> {
    let (a, b) = (t.bimodule().alg_dim(), t2.bimodule().alg_dim());
    let (m, n) = (t.bimodule().dim(), t2.bimodule().dim());
    if phi.rows() != b || phi.cols() != a || psi.rows() != n || psi.cols() != m {
        return Err(Error::Shape(format!(
            "phi is {}x{} and psi is {}x{}, expected {b}x{a} and {n}x{m}",
            phi.rows(),
            phi.cols(),
            psi.rows(),
            psi.cols()
        )));
    }
    Ok(())
}

/// Checks `(φ, ψ)` against the three identities. Errors if `φ` is not an
/// algebra morphism.
pub fn is_o_morphism(t: &OOperatorCandidate, t2: &OOperatorCandidate, phi: &LinMap, psi: &LinMap) -> Result<OMorphismReport> {
    check_morphism_shapes(t, t2, phi, psi)?;
    if !is_algebra_morphism(phi, t.bimodule().algebra(), t2.bimodule().algebra())? {
        return Err(Error::NotAlgebraMorphism);
    }
    let (m1, m2) = (t.bimodule(), t2.bimodule());
    let (da, dm) = (m1.alg_dim(), m1.dim());
    let intertwines = t2.matrix().mul(psi)? == phi.mul(t.matrix())?;
    let mut left_equivariant = true;
    let mut right_equivariant = true;
    for i in 0..da {
        let (a, pa) = (unit_vec(da, i), phi.col(i));
        for u in 0..dm {
            let (m, pm) = (unit_vec(dm, u), psi.col(u));
            left_equivariant &= m2.act_left(&pa, &pm) == psi.apply(&m1.act_left(&a, &m));
            right_equivariant &= m2.act_right(&pm, &pa) == psi.apply(&m1.act_right(&m, &a));
        }
    }
    Ok(OMorphismReport {
        intertwines,
        left_equivariant,
        right_equivariant,
    })
}

/// Whether the graph of `φ ⊕ ψ` is a subalgebra of `(A ⊕ M) ⊕ (B ⊕ N)`.
///
/// The graph of a linear map is a subalgebra exactly when the map is an
/// algebra morphism of the semidirect products, which covers `φ` being a
/// morphism and the two equivariance identities. The identity
/// `T' ∘ ψ = φ ∘ T` does not enter.
pub fn graph_morphism_check(t: &OOperatorCandidate, t2: &OOperatorCandidate, phi: &LinMap, psi: &LinMap) -> Result<bool> {
    check_morphism_shapes(t, t2, phi, psi)?;
    let s1 = semidirect_product(t.bimodule())?;
    let s2 = semidirect_product(t2.bimodule())?;
    let (d1, d2) = (s1.dim(), s2.dim());
    let (a, b) = (phi.cols(), phi.rows());
    let graph_vec = |x: usize| {
        let mut v = unit_vec(d1, x);
        let image = if x < a {
            let mut w = phi.col(x);
            w.extend(zero_vec(d2 - b));
            w
        } else {
            let mut w = zero_vec(b);
            w.extend(psi.col(x - a));
            w
        };
        v.extend(image);
        v
    };
    let gens: Vec<Vector> = (0..d1).map(graph_vec).collect();
    let graph = Subspace::span(d1 + d2, &gens)?;
    for x in &gens {
        for y in &gens {
            let mut prod = s1.mul(&x[..d1], &y[..d1]);
            prod.extend(s2.mul(&x[d1..], &y[d1..]));
            if !graph.contains(&prod) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `ψ` preserves the induced `≺` and `≻`.
pub fn dendriform_morphism_check(t: &OOperatorCandidate, t2: &OOperatorCandidate, psi: &LinMap) -> Result<bool> {
    let (d1, d2) = (induced_dendriform(t)?, induced_dendriform(t2)?);
    let (m, n) = (d1.dim(), d2.dim());
    if psi.rows() != n || psi.cols() != m {
        return Err(Error::Shape(format!(
            "psi is {}x{}, expected {n}x{m}",
            psi.rows(),
            psi.cols()
        )));
    }
    for i in 0..m {
        for j in 0..m {
            let args = [psi.col(i), psi.col(j)];
            if psi.apply(d1.prec.value(&[i, j])) != d2.prec.eval(&args)
                || psi.apply(d1.succ.value(&[i, j])) != d2.succ.eval(&args)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[Tm, Tn] = T(ϱ(Tm)n - ϱ(Tn)m)` with `ϱ(a)m = am - ma`, on basis pairs.
pub fn lie_transport_check(op: &OOperatorCandidate) -> Result<bool> {
    let module = op.bimodule();
    let alg = module.algebra();
    let dm = module.dim();
    let rho = |a: &[Rational], m: &[Rational]| sub_vec(&module.act_left(a, m), &module.act_right(m, a));
    for i in 0..dm {
        for j in 0..dm {
            let (m, n) = (unit_vec(dm, i), unit_vec(dm, j));
            let (tm, tn) = (op.matrix().col(i), op.matrix().col(j));
            let rhs = op.apply(&sub_vec(&rho(&tm, &n), &rho(&tn, &m)));
            if alg.commutator(&tm, &tn) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which of the four Nijenhuis-element conditions hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NijenhuisReport {
    /// `a·X - X·a = 0` for `X = l_T(m, a) - r_T(a, m)`, all `m`.
    pub commutes_with_d_a: bool,
    /// `(ab - ba)(ac - ca) = 0` for all `b, c`.
    pub comm_comm_zero: bool,
    /// `(ab - ba)·(am - ma) = 0` for all `b, m`.
    pub left_condition: bool,
    /// `(am - ma)·(ab - ba) = 0` for all `b, m`.
    pub right_condition: bool,
}

impl NijenhuisReport {
    pub fn is_nijenhuis(&self) -> bool {
        self.failed().is_empty()
    }

    pub fn failed(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.commutes_with_d_a {
            out.push("commutes-with-d_a");
        }
        if !self.comm_comm_zero {
            out.push("comm-comm-zero");
        }
        if !self.left_condition {
            out.push("left-action");
        }
        if !self.right_condition {
            out.push("right-action");
        }
        out
    }
}

/// Evaluates the Nijenhuis-element conditions on all basis `b, c ∈ A`, `m ∈ M`.
pub fn is_nijenhuis_element(op: &OOperatorCandidate, a: &[Rational]) -> Result<NijenhuisReport> {
    op.ensure()?;
    let module = op.bimodule();
    let alg = module.algebra();
    let (da, dm) = (module.alg_dim(), module.dim());
    if a.len() != da {
        return Err(Error::Shape(format!(
            "element of length {} in an algebra of dim {da}",
            a.len()
        )));
    }
    let ad = |b: &[Rational]| alg.commutator(a, b);
    let ad_m = |m: &[Rational]| sub_vec(&module.act_left(a, m), &module.act_right(m, a));
    let commutes_with_d_a = (0..dm).all(|u| {
        let m = unit_vec(dm, u);
        let x = sub_vec(&op.l_t(&m, a), &op.r_t(a, &m));
        is_zero_vec(&alg.commutator(a, &x))
    });
    let comms: Vec<Vector> = (0..da).map(|i| ad(&unit_vec(da, i))).collect();
    let comm_comm_zero = comms.iter().all(|x| comms.iter().all(|y| is_zero_vec(&alg.mul(x, y))));
    let mods: Vec<Vector> = (0..dm).map(|u| ad_m(&unit_vec(dm, u))).collect();
    let left_condition = comms.iter().all(|x| mods.iter().all(|y| is_zero_vec(&module.act_left(x, y))));
    let right_condition = comms
        .iter()
        .all(|x| mods.iter().all(|y| is_zero_vec(&module.act_right(y, x))));
    Ok(NijenhuisReport {
        commutes_with_d_a,
        comm_comm_zero,
        left_condition,
        right_condition,
    })
}

/// `N = l_a - r_a` on `M`: `N(m) = am - ma`.
pub fn ad_on_module(module: &Bimodule, a: &[Rational]) -> LinMap {
    let dm = module.dim();
    let cols: Vec<Vector> = (0..dm)
        .map(|u| {
            let m = unit_vec(dm, u);
            sub_vec(&module.act_left(a, &m), &module.act_right(&m, a))
        })
        .collect();
    Mat::from_cols(dm, &cols).expect("square")
}

/// Whether `N = l_a - r_a` satisfies
/// `N(m)∘N(n) = N(N(m)∘n + m∘N(n) - N(m∘n))` for the induced pre-Lie product.
pub fn prelie_nijenhuis_check(op: &OOperatorCandidate, a: &[Rational]) -> Result<bool> {
    let p = induced_prelie(op)?;
    let n = ad_on_module(op.bimodule(), a);
    let dm = op.bimodule().dim();
    for i in 0..dm {
        for j in 0..dm {
            let (m, k) = (unit_vec(dm, i), unit_vec(dm, j));
            let (nm, nk) = (n.col(i), n.col(j));
            let lhs = p.eval(&[&nm, &nk]);
            let mut inner = p.eval(&[&nm, &k]);
            axpy(&mut inner, &Rational::one(), &p.eval(&[&m, &nk]));
            axpy(&mut inner, &-Rational::one(), &n.apply(p.value(&[i, j])));
            if lhs != n.apply(&inner) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
