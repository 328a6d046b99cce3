//! Linear and formal deformations of an O-operator.
//!
//! A truncated deformation `T_t = Σ_{i=0}^n t^i T_i` is an O-operator modulo
//! `t^{n+1}`. Every "for all t" statement is checked coefficient-wise in `t`.

use serde::{Deserialize, Serialize};

use crate::algebra::Bimodule;
use crate::cochains::derived::bracket;
use crate::cochains::hochschild::{d_hoch, d_hoch_matrix};
use crate::cochains::multilinear::{Cochain, Multilinear};
use crate::cohomology::Cohomology;
use crate::error::{Error, Result};
use crate::linalg::{add_vec, axpy, dot, is_zero_vec, solve, sub_vec, unit_vec, LinMap, Mat, Solve, Subspace, Vector};
use crate::operators::{ad_on_module, is_nijenhuis_element, OOperatorCandidate};
use crate::rational::Rational;

pub const DEFAULT_ORDER_CAP: usize = 4;

/// `D(S, S')(u, v) = S(u)S'(v) - S(uS'(v) + S'(u)v)` for two maps `M → A`.
pub fn pair_defect(module: &Bimodule, s: &LinMap, s2: &LinMap) -> Cochain {
    let alg = module.algebra();
    let dm = module.dim();
    Multilinear::from_fn(2, dm, module.alg_dim(), |t| {
        let (u, v) = (unit_vec(dm, t[0]), unit_vec(dm, t[1]));
        let (su, s2u, s2v) = (s.col(t[0]), s2.col(t[0]), s2.col(t[1]));
        let inner = add_vec(&module.act_right(&u, &s2v), &module.act_left(&s2u, &v));
        sub_vec(&alg.mul(&su, &s2v), &s.apply(&inner))
    })
}

/// `T_t = Σ_{i=0}^n t^i T_i` with `T_0` an O-operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedDeformation {
    base: OOperatorCandidate,
    terms: Vec<LinMap>,
}

/// Outcome of [`TruncatedDeformation::check_order`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    /// First order `k` whose equation fails, with the raw residual there.
    pub first_failure: Option<(usize, Cochain)>,
    /// Whether the raw and bracket forms agreed (bracket = -raw) at every order.
    pub forms_agree: bool,
}

impl OrderReport {
    pub fn passes(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl TruncatedDeformation {
    /// Order capped at [`DEFAULT_ORDER_CAP`].
    pub fn new(base: OOperatorCandidate, terms: Vec<LinMap>) -> Result<Self> {
        Self::with_cap(base, terms, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(base: OOperatorCandidate, terms: Vec<LinMap>, cap: usize) -> Result<Self> {
        base.ensure()?;
        if terms.len() > cap {
            return Err(Error::DegreeCap {
                degree: terms.len(),
                cap,
            });
        }
        let (r, c) = (base.matrix().rows(), base.matrix().cols());
        if let Some((i, _)) = terms.iter().enumerate().find(|(_, t)| t.rows() != r || t.cols() != c) {
            return Err(Error::Shape(format!("term T_{} does not have shape {r}x{c}", i + 1)));
        }
        Ok(TruncatedDeformation { base, terms })
    }

    pub fn base(&self) -> &OOperatorCandidate {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `T_1, …, T_n`.
    pub fn terms(&self) -> &[LinMap] {
        &self.terms
    }

    /// `T_k`, with `T_0 = T` and `T_k = 0` beyond the order.
    pub fn term(&self, k: usize) -> LinMap {
        match k {
            0 => self.base.matrix().clone(),
            k if k <= self.order() => self.terms[k - 1].clone(),
            _ => Mat::zeros(self.base.matrix().rows(), self.base.matrix().cols()),
        }
    }

    /// Appends `T_{n+1}`.
    pub fn extended(&self, next: LinMap) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.push(next);
        Self::with_cap(self.base.clone(), terms, usize::MAX)
    }

    /// `Σ_{i+j=k} [T_i(m)T_j(n) - T_i(mT_j(n) + T_j(m)n)]`.
    pub fn raw_residual(&self, k: usize) -> Cochain {
        let module = self.base.bimodule();
        let mut out = Multilinear::zero(2, module.dim(), module.alg_dim());
        for i in 0..=k {
            let d = pair_defect(module, &self.term(i), &self.term(k - i));
            out.add_scaled(&Rational::one(), &d).expect("uniform shapes");
        }
        out
    }

    /// `⟦T, T_k⟧ + ½ Σ_{i+j=k, i,j≥1} ⟦T_i, T_j⟧`, or `½⟦T, T⟧` at `k = 0`.
    pub fn bracket_residual(&self, k: usize) -> Result<Cochain> {
        let module = self.base.bimodule();
        let half = Rational::new(1, 2);
        let lift = |i: usize| Multilinear::from_linmap(&self.term(i));
        if k == 0 {
            return Ok(bracket(module, &lift(0), &lift(0))?.scale(&half));
        }
        let mut out = bracket(module, &lift(0), &lift(k))?;
        for i in 1..k {
            out.add_scaled(&half, &bracket(module, &lift(i), &lift(k - i))?)?;
        }
        Ok(out)
    }

    /// Checks the deformation equations for `k = 0..=order`.
    pub fn check_order(&self) -> Result<OrderReport> {
        self.check_through(self.order())
    }

    /// Checks the deformation equations for `k = 0..=max_k`.
    pub fn check_through(&self, max_k: usize) -> Result<OrderReport> {
        let mut forms_agree = true;
        let mut first_failure = None;
        for k in 0..=max_k {
            let raw = self.raw_residual(k);
            forms_agree &= self.bracket_residual(k)? == raw.neg();
            if first_failure.is_none() && !raw.is_zero() {
                first_failure = Some((k, raw));
            }
        }
        Ok(OrderReport {
            first_failure,
            forms_agree,
        })
    }

    /// Whether `Σ t^i T_i` is an O-operator for every `t`, not only modulo
    /// `t^{n+1}`: all coefficients up to `t^{2n}` vanish.
    pub fn holds_for_all_t(&self) -> Result<bool> {
        Ok(self.check_through(2 * self.order())?.passes())
    }

    /// The infinitesimal `T_1`, which must be a 1-cocycle.
    pub fn infinitesimal(&self) -> Result<Cochain> {
        if self.order() == 0 {
            return Err(Error::InvalidDeformation("order 0 has no infinitesimal".into()));
        }
        if let Some((k, _)) = self.check_through(1)?.first_failure {
            return Err(Error::InvalidDeformation(format!("deformation equation fails at order {k}")));
        }
        Ok(Multilinear::from_linmap(&self.terms[0]))
    }

    /// Coefficients of `t^k`, `k = 0..=order`, of the three dendriform axioms
    /// for `m ≺_t n = Σ t^i mT_i(n)` and `m ≻_t n = Σ t^i T_i(m)n`.
    pub fn dendriform_transport_residuals(&self) -> Vec<[Multilinear; 3]> {
        let module = self.base.bimodule();
        let dm = module.dim();
        let prec = |i: usize, x: &[Rational], y: &[Rational]| module.act_right(x, &self.term(i).apply(y));
        let succ = |i: usize, x: &[Rational], y: &[Rational]| module.act_left(&self.term(i).apply(x), y);
        (0..=self.order())
            .map(|k| {
                let mut res: [Multilinear; 3] = std::array::from_fn(|_| Multilinear::zero(3, dm, dm));
                for (r, out) in res.iter_mut().enumerate() {
                    *out = Multilinear::from_fn(3, dm, dm, |t| {
                        let (a, b, c) = (unit_vec(dm, t[0]), unit_vec(dm, t[1]), unit_vec(dm, t[2]));
                        let mut v = vec![Rational::zero(); dm];
                        for i in 0..=k {
                            let j = k - i;
                            let (lhs, rhs) = match r {
                                0 => (
                                    prec(j, &prec(i, &a, &b), &c),
                                    prec(j, &a, &add_vec(&prec(i, &b, &c), &succ(i, &b, &c))),
                                ),
                                1 => (prec(j, &succ(i, &a, &b), &c), succ(j, &a, &prec(i, &b, &c))),
                                _ => (
                                    succ(j, &add_vec(&prec(i, &a, &b), &succ(i, &a, &b)), &c),
                                    succ(j, &a, &succ(i, &b, &c)),
                                ),
                            };
                            axpy(&mut v, &Rational::one(), &sub_vec(&lhs, &rhs));
                        }
                        v
                    });
                }
                res
            })
            .collect()
    }
}

/// `T + t·d_H(a)` for a Nijenhuis element `a`.
pub fn trivial_deformation(op: &OOperatorCandidate, a: &[Rational]) -> Result<TruncatedDeformation> {
    let report = is_nijenhuis_element(op, a)?;
    if !report.is_nijenhuis() {
        return Err(Error::NotNijenhuis(report.failed().join(", ")));
    }
    let da = d_hoch(op, &Multilinear::constant(op.bimodule().dim(), a.to_vec()))?;
    TruncatedDeformation::new(op.clone(), vec![da.to_linmap()?])
}

/// A polynomial `Σ t^i P_i` of linear maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMap {
    coeffs: Vec<LinMap>,
}

impl PolyMap {
    pub fn new(coeffs: Vec<LinMap>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::Shape("polynomial map needs a constant term".into()))?;
        let (r, c) = (first.rows(), first.cols());
        if coeffs.iter().any(|m| m.rows() != r || m.cols() != c) {
            return Err(Error::Shape("polynomial coefficients of different shapes".into()));
        }
        Ok(PolyMap { coeffs })
    }

    pub fn from_deformation(d: &TruncatedDeformation) -> Self {
        PolyMap {
            coeffs: (0..=d.order()).map(|k| d.term(k)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> LinMap {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.coeffs[0].rows(), self.coeffs[0].cols()))
    }

    pub fn rows(&self) -> usize {
        self.coeffs[0].rows()
    }

    pub fn cols(&self) -> usize {
        self.coeffs[0].cols()
    }
}

/// `(id_A + t(ad^l_a - ad^r_a), id_M + t(l_a - r_a))`.
pub fn equivalence_pair(module: &Bimodule, a: &[Rational]) -> (PolyMap, PolyMap) {
    let alg = module.algebra();
    let (da, dm) = (module.alg_dim(), module.dim());
    let ad_a: Vec<Vector> = (0..da).map(|i| alg.commutator(a, &unit_vec(da, i))).collect();
    let phi = PolyMap {
        coeffs: vec![Mat::identity(da), Mat::from_cols(da, &ad_a).expect("square")],
    };
    let psi = PolyMap {
        coeffs: vec![Mat::identity(dm), ad_on_module(module, a)],
    };
    (phi, psi)
}

/// The four morphism identities, each in one coefficient of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MorphismCondition {
    /// `φ_t(b)φ_t(c) = φ_t(bc)`.
    AlgebraMorphism,
    /// `T'_t ∘ ψ_t = φ_t ∘ T_t`.
    Intertwines,
    /// `φ_t(b)ψ_t(m) = ψ_t(bm)`.
    LeftEquivariant,
    /// `ψ_t(m)φ_t(b) = ψ_t(mb)`.
    RightEquivariant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMorphismReport {
    /// Failing conditions with the power of `t` where they fail.
    pub failures: Vec<(MorphismCondition, usize)>,
}

impl PolyMorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn holds(&self, cond: MorphismCondition) -> bool {
        !self.failures.iter().any(|(c, _)| *c == cond)
    }
}

/// Checks that `(φ_t, ψ_t)` is a morphism from `T_t` to `T'_t`, all over the
/// same algebra and bimodule, comparing coefficients of `t^k` for every `k`
/// up to `truncate` (or up to the full degree when `None`).
pub fn poly_o_morphism_check(
    module: &Bimodule,
    source: &PolyMap,
    target: &PolyMap,
    phi: &PolyMap,
    psi: &PolyMap,
    truncate: Option<usize>,
) -> Result<PolyMorphismReport> {
    let (da, dm) = (module.alg_dim(), module.dim());
    for (name, p, r, c) in [
        ("T", source, da, dm),
        ("T'", target, da, dm),
        ("phi", phi, da, da),
        ("psi", psi, dm, dm),
    ] {
        if p.rows() != r || p.cols() != c {
            return Err(Error::Shape(format!("{name} is {}x{}, expected {r}x{c}", p.rows(), p.cols())));
        }
    }
    let alg = module.algebra();
    let full = (phi.degree() * 2)
        .max(target.degree() + psi.degree())
        .max(phi.degree() + source.degree())
        .max(phi.degree() + psi.degree());
    let top = truncate.map_or(full, |n| n.min(full));
    let mut failures = Vec::new();
    for k in 0..=top {
        let pairs = || (0..=k).map(move |i| (i, k - i));
        let alg_ok = (0..da).all(|b| {
            (0..da).all(|c| {
                let mut lhs = vec![Rational::zero(); da];
                for (i, j) in pairs() {
                    axpy(
                        &mut lhs,
                        &Rational::one(),
                        &alg.mul(&phi.coeff(i).col(b), &phi.coeff(j).col(c)),
                    );
                }
                lhs == phi.coeff(k).apply(alg.basis_product(b, c))
            })
        });
        let mut lhs = Mat::zeros(da, dm);
        let mut rhs = Mat::zeros(da, dm);
        for (i, j) in pairs() {
            lhs = lhs.add(&target.coeff(i).mul(&psi.coeff(j))?)?;
            rhs = rhs.add(&phi.coeff(i).mul(&source.coeff(j))?)?;
        }
        let inter_ok = lhs == rhs;
        let mut left_ok = true;
        let mut right_ok = true;
        for b in 0..da {
            let eb = unit_vec(da, b);
            for u in 0..dm {
                let m = unit_vec(dm, u);
                let mut l = vec![Rational::zero(); dm];
                let mut r = vec![Rational::zero(); dm];
                for (i, j) in pairs() {
                    let (pb, sm) = (phi.coeff(i).col(b), psi.coeff(j).col(u));
                    axpy(&mut l, &Rational::one(), &module.act_left(&pb, &sm));
                    axpy(&mut r, &Rational::one(), &module.act_right(&sm, &pb));
                }
                left_ok &= l == psi.coeff(k).apply(&module.act_left(&eb, &m));
                right_ok &= r == psi.coeff(k).apply(&module.act_right(&m, &eb));
            }
        }
        for (ok, cond) in [
            (alg_ok, MorphismCondition::AlgebraMorphism),
            (inter_ok, MorphismCondition::Intertwines),
            (left_ok, MorphismCondition::LeftEquivariant),
            (right_ok, MorphismCondition::RightEquivariant),
        ] {
            if !ok {
                failures.push((cond, k));
            }
        }
    }
    Ok(PolyMorphismReport { failures })
}

/// The displayed consequences of a linear equivalence, and the morphism check itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearEquivalenceReport {
    /// `(ab - ba)(ac - ca) = 0`.
    pub comm_comm_zero: bool,
    /// `(ab - ba)(am - ma) = 0`.
    pub left_condition: bool,
    /// `(am - ma)(ab - ba) = 0`.
    pub right_condition: bool,
    /// `𝔗_1 - 𝔗_2 = d_H(a)`.
    pub difference_is_d_h_a: bool,
    /// `a·𝔗_1(m) - 𝔗_1(m)·a = 𝔗_2(am - ma)`.
    pub second_order_identity: bool,
    pub morphism: PolyMorphismReport,
}

impl LinearEquivalenceReport {
    pub fn holds(&self) -> bool {
        self.morphism.is_morphism()
    }
}

/// Whether `T + t𝔗_1` and `T + t𝔗_2` are equivalent through `a`.
pub fn linear_equivalence_check(
    op: &OOperatorCandidate,
    t1: &LinMap,
    t2: &LinMap,
    a: &[Rational],
) -> Result<LinearEquivalenceReport> {
    let mut problems = Vec::new();
    let mut deformations = Vec::new();
    for (name, t) in [("first", t1), ("second", t2)] {
        let d = TruncatedDeformation::new(op.clone(), vec![t.clone()])?;
        if let Some((k, _)) = d.check_through(2)?.first_failure {
            let cond = if k == 1 { "cocycle condition" } else { "O-operator condition" };
            problems.push(format!("{name} map fails the {cond}"));
        }
        deformations.push(d);
    }
    if !problems.is_empty() {
        return Err(Error::InvalidDeformation(problems.join("; ")));
    }
    let module = op.bimodule();
    let alg = module.algebra();
    let (da, dm) = (module.alg_dim(), module.dim());
    if a.len() != da {
        return Err(Error::Shape(format!(
            "element of length {} in an algebra of dim {da}",
            a.len()
        )));
    }
    let comms: Vec<Vector> = (0..da).map(|i| alg.commutator(a, &unit_vec(da, i))).collect();
    let ad_m = ad_on_module(module, a);
    let mods: Vec<Vector> = (0..dm).map(|u| ad_m.col(u)).collect();
    let comm_comm_zero = comms.iter().all(|x| comms.iter().all(|y| is_zero_vec(&alg.mul(x, y))));
    let left_condition = comms.iter().all(|x| mods.iter().all(|y| is_zero_vec(&module.act_left(x, y))));
    let right_condition = comms
        .iter()
        .all(|x| mods.iter().all(|y| is_zero_vec(&module.act_right(y, x))));
    let d_a = crate::cochains::hochschild::d_hoch_unchecked(op, &Multilinear::constant(dm, a.to_vec()));
    let difference_is_d_h_a = Multilinear::from_linmap(&t1.sub(t2)?) == d_a;
    let second_order_identity = (0..dm).all(|u| {
        let x = t1.col(u);
        alg.commutator(a, &x) == t2.apply(&mods[u])
    });
    let (phi, psi) = equivalence_pair(module, a);
    let morphism = poly_o_morphism_check(
        module,
        &PolyMap::from_deformation(&deformations[0]),
        &PolyMap::from_deformation(&deformations[1]),
        &phi,
        &psi,
        None,
    )?;
    Ok(LinearEquivalenceReport {
        comm_comm_zero,
        left_condition,
        right_condition,
        difference_is_d_h_a,
        second_order_identity,
        morphism,
    })
}

/// Whether `φ_t = id + t(ad^l_a - ad^r_a) + Σ_{i≥2} t^i φ_i` and the matching
/// `ψ_t` form a morphism from `d1` to `d2` modulo `t^{order+1}`.
pub fn formal_equivalence_check(
    d1: &TruncatedDeformation,
    d2: &TruncatedDeformation,
    a: &[Rational],
    phi_tail: &[LinMap],
    psi_tail: &[LinMap],
    order: usize,
) -> Result<PolyMorphismReport> {
    if d1.base() != d2.base() {
        return Err(Error::InvalidDeformation("deformations of different operators".into()));
    }
    if order > d1.order().min(d2.order()) {
        return Err(Error::InvalidDeformation(format!(
            "order {order} exceeds the deformation orders {} and {}",
            d1.order(),
            d2.order()
        )));
    }
    for (name, d) in [("first", d1), ("second", d2)] {
        if let Some((k, _)) = d.check_through(order)?.first_failure {
            return Err(Error::InvalidDeformation(format!("{name} deformation fails at order {k}")));
        }
    }
    let module = d1.base().bimodule();
    let (mut phi, mut psi) = equivalence_pair(module, a);
    phi.coeffs.extend(phi_tail.iter().cloned());
    psi.coeffs.extend(psi_tail.iter().cloned());
    let phi = PolyMap::new(phi.coeffs)?;
    let psi = PolyMap::new(psi.coeffs)?;
    poly_o_morphism_check(
        module,
        &PolyMap::from_deformation(d1),
        &PolyMap::from_deformation(d2),
        &phi,
        &psi,
        Some(order),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionResult {
    /// `Ob(m, n) = Σ_{i+j=n+1, i,j≥1} [T_i(m)T_j(n) - T_i(mT_j(n) + T_j(m)n)]`.
    pub cocycle: Cochain,
    pub is_cocycle_verified: bool,
    pub class_trivial: bool,
    /// `T_{n+1}` solving `d_H(T_{n+1}) = -Ob`.
    pub extension: Option<LinMap>,
    /// A vector `c` with `c·d_H = 0` and `c·Ob ≠ 0`.
    pub certificate: Option<Vector>,
}

impl ObstructionResult {
    /// Re-verifies the certificate against the degree-1 differential.
    pub fn certificate_verifies(&self, op: &OOperatorCandidate) -> Result<bool> {
        let Some(c) = &self.certificate else { return Ok(false) };
        let d1 = d_hoch_matrix(op, 1)?;
        let annihilates = is_zero_vec(&d1.apply_left(c));
        Ok(annihilates && !dot(c, self.cocycle.coeffs()).is_zero())
    }
}

/// The obstruction to extending `d` by one order, and an extension when it exists.
pub fn obstruction(d: &TruncatedDeformation) -> Result<ObstructionResult> {
    let report = d.check_order()?;
    if let Some((k, _)) = report.first_failure {
        return Err(Error::InvalidDeformation(format!("deformation equation fails at order {k}")));
    }
    let op = d.base();
    let module = op.bimodule();
    let n = d.order();
    let mut ob = Multilinear::zero(2, module.dim(), module.alg_dim());
    for i in 1..=n {
        ob.add_scaled(&Rational::one(), &pair_defect(module, &d.term(i), &d.term(n + 1 - i)))?;
    }
    let is_cocycle_verified = d_hoch(op, &ob)?.is_zero();
    let rhs: Vector = ob.coeffs().iter().map(|x| -x).collect();
    let (extension, certificate) = match solve(&d_hoch_matrix(op, 1)?, &rhs)? {
        Solve::Solution(x) => {
            let f = Multilinear::from_coeffs(1, module.dim(), module.alg_dim(), x)?;
            (Some(f.to_linmap()?), None)
        }
        Solve::Inconsistent(c) => (None, Some(c)),
    };
    Ok(ObstructionResult {
        cocycle: ob,
        is_cocycle_verified,
        class_trivial: extension.is_some(),
        extension,
        certificate,
    })
}

/// Extends `d` by one order if the obstruction class vanishes.
pub fn extend(d: &TruncatedDeformation) -> Result<Option<TruncatedDeformation>> {
    match obstruction(d)?.extension {
        Some(next) => Ok(Some(d.extended(next)?)),
        None => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    /// Whether each candidate is a Nijenhuis element.
    pub candidates_nijenhuis: Vec<bool>,
    pub z1_dim: usize,
    /// Dimension of the span of `d_H(a)` over the Nijenhuis candidates.
    pub witness_span_dim: usize,
    /// Whether that span contains `Z^1`.
    pub covers_z1: bool,
}

impl RigidityReport {
    /// Every `Z^1` basis vector is a combination of `d_H` of the supplied
    /// Nijenhuis witnesses. This supports the rigidity hypothesis for the
    /// given witnesses; a negative report proves nothing.
    pub fn positive(&self) -> bool {
        self.covers_z1
    }
}

pub fn rigidity_certificate(op: &OOperatorCandidate, candidates: &[Vector]) -> Result<RigidityReport> {
    let coh = Cohomology::new(op)?;
    let z1 = coh.cocycles(1)?;
    let module = op.bimodule();
    let mut candidates_nijenhuis = Vec::with_capacity(candidates.len());
    let mut images = Vec::new();
    for a in candidates {
        let ok = is_nijenhuis_element(op, a)?.is_nijenhuis();
        candidates_nijenhuis.push(ok);
        if ok {
            images.push(d_hoch(op, &Multilinear::constant(module.dim(), a.clone()))?.into_coeffs());
        }
    }
    let span = Subspace::span(z1.ambient_dim(), &images)?;
    Ok(RigidityReport {
        candidates_nijenhuis,
        z1_dim: z1.dim(),
        witness_span_dim: span.dim(),
        covers_z1: span.contains_subspace(&z1),
    })
}
