//! One function per subcommand. Property failures come back as reports with
//! `holds = false`; malformed input comes back as an error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rota_core::algebra::BimoduleAxiom;
use rota_core::cochains::{d_hoch, Cochain, Multilinear};
use rota_core::cohomology::Cohomology;
use rota_core::deformation::{
    formal_equivalence_check, linear_equivalence_check, obstruction, TruncatedDeformation, DEFAULT_ORDER_CAP,
};
use rota_core::linalg::{add_vec, axpy, unit_vec, LinMap, Vector};
use rota_core::operators::{is_left_averaging, is_nijenhuis_element, is_right_averaging, is_rota_baxter, OOperatorCandidate};
use rota_core::rmatrix::{
    bialgebra_weak_morphism_check, check_r_matrix, induced_coproduct, infinitesimal_bialgebra_check, weak_morphism_check,
    yb_bracket, Coproduct, Wedge2,
};
use rota_core::{Error, Rational};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::problem::{rows_of, DeformationSection, Problem};
use crate::report::{format_element, Report};

/// Which operator identity `check-op` tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OpKind {
    OOperator,
    RotaBaxter,
    LeftAveraging,
    RightAveraging,
    Averaging,
}

/// A basis pair where the two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
struct Witness {
    pair: (String, String),
    lhs: String,
    rhs: String,
}

/// Evaluates `sides(u, v)` on all basis pairs and keeps those that differ.
fn witnesses(in_labels: &[String], out_labels: &[String], sides: impl Fn(usize, usize) -> (Vector, Vector)) -> Vec<Witness> {
    let d = in_labels.len();
    let mut out = Vec::new();
    for u in 0..d {
        for v in 0..d {
            let (lhs, rhs) = sides(u, v);
            if lhs != rhs {
                out.push(Witness {
                    pair: (in_labels[u].clone(), in_labels[v].clone()),
                    lhs: format_element(out_labels, &lhs),
                    rhs: format_element(out_labels, &rhs),
                });
            }
        }
    }
    out
}

/// `T(u)T(v)` against `T(uT(v) + T(u)v)`.
fn o_operator_witnesses(p: &Problem, op: &OOperatorCandidate) -> Vec<Witness> {
    let module = op.bimodule();
    let (alg, t, dm) = (module.algebra(), op.matrix(), module.dim());
    witnesses(&p.module_labels, &p.alg_labels, |u, v| {
        let (tu, tv) = (t.col(u), t.col(v));
        let inner = add_vec(
            &module.act_right(&unit_vec(dm, u), &tv),
            &module.act_left(&tu, &unit_vec(dm, v)),
        );
        (alg.mul(&tu, &tv), t.apply(&inner))
    })
}

fn push_witnesses(report: &mut Report, ws: &[Witness]) {
    for w in ws {
        report.push(format!("witness ({}, {}): {} vs {}", w.pair.0, w.pair.1, w.lhs, w.rhs));
    }
}

/// The failing report used when a command needs an O-operator and gets something else.
fn not_an_o_operator(command: &str, p: &Problem, op: &OOperatorCandidate) -> Report {
    let ws = o_operator_witnesses(p, op);
    let mut r = Report::new(command, false).line(format!(
        "operator is not an O-operator: defect nonzero at {} basis pairs",
        ws.len()
    ));
    push_witnesses(&mut r, &ws);
    r.with_data(json!({ "witnesses": ws }))
}

pub fn validate(p: &Problem) -> Report {
    let alg_v = p.algebra.associativity_violations();
    let mod_v = p.bimodule.violations();
    let mut r = Report::new("validate", alg_v.is_empty() && mod_v.is_empty());
    r.push(format!(
        "algebra: dim {}, {} associativity violations",
        p.algebra.dim(),
        alg_v.len()
    ));
    for v in alg_v.iter().take(5) {
        let (i, j, k) = v.triple;
        let l = &p.alg_labels;
        r.push(format!(
            "witness ({a} {b}) {c} = {} vs {a} ({b} {c}) = {}",
            format_element(l, &v.left),
            format_element(l, &v.right),
            a = l[i],
            b = l[j],
            c = l[k],
        ));
    }
    r.push(format!(
        "bimodule: dim {}, {} axiom violations",
        p.bimodule.dim(),
        mod_v.len()
    ));
    for v in mod_v.iter().take(5) {
        let (i, j, k) = v.triple;
        let (a, m) = (&p.alg_labels, &p.module_labels);
        let (axiom, args) = match v.axiom {
            BimoduleAxiom::LeftAssoc => ("(ab)m = a(bm)", format!("a = {}, b = {}, m = {}", a[i], a[j], m[k])),
            BimoduleAxiom::Middle => ("a(mb) = (am)b", format!("a = {}, m = {}, b = {}", a[i], m[j], a[k])),
            BimoduleAxiom::RightAssoc => ("m(ab) = (ma)b", format!("m = {}, a = {}, b = {}", m[i], a[j], a[k])),
        };
        r.push(format!(
            "witness {axiom} at {args}: {} vs {}",
            format_element(m, &v.lhs),
            format_element(m, &v.rhs)
        ));
    }
    r.with_data(json!({
        "associativity_violations": alg_v.len(),
        "bimodule_violations": mod_v.len(),
    }))
}

pub fn check_op(p: &Problem, kind: OpKind, weight: &Rational) -> Result<Report, CliError> {
    let op = p.operator()?;
    let alg = &p.algebra;
    let t = op.matrix();
    let n = alg.dim();
    let square = |f: &dyn Fn(usize, usize, &LinMap) -> (Vector, Vector)| -> Result<Vec<Witness>, CliError> {
        if t.rows() != n || t.cols() != n {
            return Err(CliError::Usage(format!(
                "--kind {kind:?} needs a square operator on the algebra, got {}x{}",
                t.rows(),
                t.cols()
            )));
        }
        Ok(witnesses(&p.alg_labels, &p.alg_labels, |u, v| f(u, v, t)))
    };
    let left_avg =
        |u: usize, v: usize, t: &LinMap| (alg.mul(&t.col(u), &t.col(v)), t.apply(&alg.mul(&t.col(u), &unit_vec(n, v))));
    let right_avg =
        |u: usize, v: usize, t: &LinMap| (alg.mul(&t.col(u), &t.col(v)), t.apply(&alg.mul(&unit_vec(n, u), &t.col(v))));
    let (holds, ws, identity) = match kind {
        OpKind::OOperator => (op.is_o_operator(), o_operator_witnesses(p, op), "T(u)T(v) = T(uT(v) + T(u)v)"),
        OpKind::RotaBaxter => {
            let ws = square(&|u, v, t| {
                let (tu, tv) = (t.col(u), t.col(v));
                let mut inner = alg.mul(&unit_vec(n, u), &tv);
                axpy(&mut inner, &Rational::one(), &alg.mul(&tu, &unit_vec(n, v)));
                axpy(&mut inner, weight, alg.basis_product(u, v));
                (alg.mul(&tu, &tv), t.apply(&inner))
            })?;
            (is_rota_baxter(alg, t, weight)?, ws, "R(a)R(b) = R(aR(b) + R(a)b + weight*ab)")
        }
        OpKind::LeftAveraging => (is_left_averaging(alg, t)?, square(&left_avg)?, "P(a)P(b) = P(P(a)b)"),
        OpKind::RightAveraging => (is_right_averaging(alg, t)?, square(&right_avg)?, "P(a)P(b) = P(aP(b))"),
        OpKind::Averaging => {
            let mut ws = square(&left_avg)?;
            ws.extend(square(&right_avg)?);
            (
                is_left_averaging(alg, t)? && is_right_averaging(alg, t)?,
                ws,
                "P(a)P(b) = P(P(a)b) = P(aP(b))",
            )
        }
    };
    debug_assert_eq!(holds, ws.is_empty());
    let pairs = p.module_labels.len().pow(2);
    let mut r = Report::new("check-op", holds).line(format!("identity: {identity}"));
    if holds {
        r.push(format!("defect = 0 on all {pairs} basis pairs"));
    } else {
        r.push(format!("defect nonzero at {} basis pairs", ws.len()));
        push_witnesses(&mut r, &ws);
    }
    Ok(r.with_data(json!({ "kind": format!("{kind:?}"), "weight": weight, "witnesses": ws })))
}

pub fn cohomology(p: &Problem, degree: usize) -> Result<Report, CliError> {
    let op = p.operator()?;
    if !op.is_o_operator() {
        return Ok(not_an_o_operator("cohomology", p, op));
    }
    let mut coh = Cohomology::new(op)?;
    if let Some(cap) = p.task.degree_cap {
        coh = coh.with_cap(cap);
    }
    let rep = coh.report(degree)?;
    let reps: Vec<&[Rational]> = rep.representatives.iter().map(|c| c.coeffs()).collect();
    let mut r = Report::new("cohomology", true)
        .line(format!("dim Z^{degree} = {}", rep.dim_z))
        .line(format!("dim B^{degree} = {}", rep.dim_b))
        .line(format!("dim H^{degree} = {}", rep.dim_h));
    for (k, c) in reps.iter().enumerate() {
        r.push(format!("representative {k}: {}", format_vector(c)));
    }
    Ok(r.with_data(json!({
        "degree": degree,
        "dim_z": rep.dim_z,
        "dim_b": rep.dim_b,
        "dim_h": rep.dim_h,
        "representatives": reps,
    })))
}

pub fn nijenhuis(p: &Problem, element: &str) -> Result<Report, CliError> {
    let op = p.operator()?;
    if !op.is_o_operator() {
        return Ok(not_an_o_operator("nijenhuis", p, op));
    }
    let a = p.element(element)?;
    let rep = is_nijenhuis_element(op, &a)?;
    let mut r = Report::new("nijenhuis", rep.is_nijenhuis()).line(format!("element a = {}", format_element(&p.alg_labels, &a)));
    for (name, ok) in [
        ("commutes-with-d_a", rep.commutes_with_d_a),
        ("comm-comm-zero", rep.comm_comm_zero),
        ("left-action", rep.left_condition),
        ("right-action", rep.right_condition),
    ] {
        r.push(format!("{name}: {}", if ok { "ok" } else { "fails" }));
    }
    let d_a = d_hoch(op, &Cochain::constant(op.bimodule().dim(), a.clone()))?.to_linmap()?;
    if rep.is_nijenhuis() {
        r.push(format!(
            "trivial deformation T + t*d_H(a) with d_H(a) = {}",
            format_matrix(&d_a)
        ));
    }
    Ok(r.with_data(json!({ "element": a, "report": rep, "d_h_a": rows_of(&d_a) })))
}

fn deformation(op: &OOperatorCandidate, terms: Vec<LinMap>, cap: usize) -> Result<TruncatedDeformation, CliError> {
    Ok(TruncatedDeformation::with_cap(op.clone(), terms, cap)?)
}

fn order_cap(p: &Problem) -> usize {
    p.task.order_cap.unwrap_or(DEFAULT_ORDER_CAP)
}

pub fn deform_check(p: &Problem, order: Option<usize>) -> Result<Report, CliError> {
    let op = p.operator()?;
    if !op.is_o_operator() {
        return Ok(not_an_o_operator("deform check", p, op));
    }
    let terms = p.deformation.clone().ok_or_else(|| missing("deformation"))?;
    let d = deformation(op, terms, order_cap(p))?;
    let through = order.unwrap_or(d.order());
    if through > order_cap(p) {
        return Err(Error::DegreeCap {
            degree: through,
            cap: order_cap(p),
        }
        .into());
    }
    let rep = d.check_through(through)?;
    let mut r = Report::new("deform check", rep.passes())
        .line(format!("deformation of order {}, checked through t^{through}", d.order()));
    match &rep.first_failure {
        None => r.push(format!("equation holds at every order 1..={through}")),
        Some((k, residual)) => {
            let nonzero = residual.coeffs().iter().filter(|c| !c.is_zero()).count();
            r.push(format!(
                "equation fails at order {k} ({nonzero} nonzero residual coefficients)"
            ));
        }
    }
    r.push(format!("raw and bracket residuals agree: {}", yes_no(rep.forms_agree)));
    let failure = rep
        .first_failure
        .as_ref()
        .map(|(k, c)| json!({ "order": k, "residual": c.coeffs() }));
    Ok(r.with_data(
        json!({ "order": d.order(), "checked_through": through, "first_failure": failure, "forms_agree": rep.forms_agree }),
    ))
}

/// A seeded random element of `Z^1`, used when no deformation is given.
fn random_infinitesimal(op: &OOperatorCandidate, seed: u64) -> Result<LinMap, CliError> {
    let z1 = Cohomology::new(op)?.cocycles(1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = vec![Rational::zero(); z1.ambient_dim()];
    for b in z1.basis() {
        axpy(&mut v, &Rational::from_integer(rng.gen_range(-2..=2)), b);
    }
    let module = op.bimodule();
    Ok(Multilinear::from_coeffs(1, module.dim(), module.alg_dim(), v)?.to_linmap()?)
}

pub fn deform_extend(p: &Problem, order: Option<usize>, seed: u64) -> Result<Report, CliError> {
    let op = p.operator()?;
    if !op.is_o_operator() {
        return Ok(not_an_o_operator("deform extend", p, op));
    }
    let cap = order_cap(p);
    let (terms, start) = match &p.deformation {
        Some(t) => (t.clone(), "from file".to_string()),
        None => (
            vec![random_infinitesimal(op, seed)?],
            format!("random Z^1 element, seed {seed}"),
        ),
    };
    let mut d = deformation(op, terms, cap)?;
    let target = order.unwrap_or(d.order() + 1);
    if target > cap {
        return Err(Error::DegreeCap { degree: target, cap }.into());
    }
    let mut r = Report::new("deform extend", true).line(format!("start: order {} ({start})", d.order()));
    let mut certificate = None;
    if let Some((k, _)) = d.check_order()?.first_failure {
        r.holds = false;
        r.push(format!("input is not a deformation: equation fails at order {k}"));
    }
    while r.holds && d.order() < target {
        let ob = obstruction(&d)?;
        let next = d.order() + 1;
        match ob.extension {
            Some(t) => {
                r.push(format!(
                    "order {next}: obstruction class vanishes, T_{next} = {}",
                    format_matrix(&t)
                ));
                d = d.extended(t)?;
            }
            None => {
                r.holds = false;
                r.push(format!("order {next}: obstruction class is nonzero, cannot extend"));
                if let Some(c) = &ob.certificate {
                    r.push(format!("certificate c with c*d_H = 0 and c*Ob != 0: {}", format_vector(c)));
                    r.push(format!("certificate verifies: {}", yes_no(ob.certificate_verifies(op)?)));
                }
                certificate = ob.certificate;
            }
        }
    }
    if r.holds {
        let check = d.check_order()?;
        r.holds = check.passes();
        r.push(format!(
            "extended deformation passes the order check: {}",
            yes_no(check.passes())
        ));
    }
    let section = DeformationSection {
        terms: d.terms().iter().map(rows_of).collect(),
        order: Some(d.order()),
    };
    Ok(r.with_data(json!({ "deformation": section, "certificate": certificate })))
}

pub fn deform_equiv(p: &Problem, element: &str) -> Result<Report, CliError> {
    let op = p.operator()?;
    if !op.is_o_operator() {
        return Ok(not_an_o_operator("deform equiv", p, op));
    }
    let t1 = p.deformation.clone().ok_or_else(|| missing("deformation"))?;
    let t2 = p.deformation_target.clone().ok_or_else(|| missing("deformation_target"))?;
    let a = p.element(element)?;
    let mut r = Report::new("deform equiv", true).line(format!("element a = {}", format_element(&p.alg_labels, &a)));
    if t1.is_empty() || t2.is_empty() {
        return Err(CliError::Usage("both deformations need at least one term".into()));
    }
    if t1.len() == 1 && t2.len() == 1 {
        let rep = match linear_equivalence_check(op, &t1[0], &t2[0], &a) {
            Ok(rep) => rep,
            Err(Error::InvalidDeformation(why)) => return Ok(r.failed(format!("not linear deformations: {why}"))),
            Err(e) => return Err(e.into()),
        };
        r.holds = rep.holds();
        r.push("linear deformations T + t*T1 and T + t*T2");
        for (name, ok) in [
            ("(ab - ba)(ac - ca) = 0", rep.comm_comm_zero),
            ("(ab - ba)(am - ma) = 0", rep.left_condition),
            ("(am - ma)(ab - ba) = 0", rep.right_condition),
            ("T1 - T2 = d_H(a)", rep.difference_is_d_h_a),
            ("a*T1(m) - T1(m)*a = T2(am - ma)", rep.second_order_identity),
        ] {
            r.push(format!("{name}: {}", yes_no(ok)));
        }
        push_morphism_failures(&mut r, &rep.morphism.failures);
        return Ok(r.with_data(json!({ "linear": rep })));
    }
    let cap = order_cap(p);
    let (d1, d2) = (deformation(op, t1, cap)?, deformation(op, t2, cap)?);
    let order = d1.order().min(d2.order());
    let rep = match formal_equivalence_check(&d1, &d2, &a, &[], &[], order) {
        Ok(rep) => rep,
        Err(Error::InvalidDeformation(why)) => return Ok(r.failed(why)),
        Err(e) => return Err(e.into()),
    };
    r.holds = rep.is_morphism();
    r.push(format!("formal deformations compared modulo t^{}", order + 1));
    push_morphism_failures(&mut r, &rep.failures);
    Ok(r.with_data(json!({ "order": order, "formal": rep })))
}

fn push_morphism_failures<T: std::fmt::Debug>(r: &mut Report, failures: &[(T, usize)]) {
    if failures.is_empty() {
        r.push("(phi_t, psi_t) is a morphism at every power of t");
    }
    for (cond, k) in failures {
        r.push(format!("{cond:?} fails at t^{k}"));
    }
}

/// A nonzero component `[[r,r]](α, β, γ)`, labelled by dual basis names.
type BracketEntry = (String, String, String, Rational);

fn bracket_lines(p: &Problem, r: &Wedge2) -> Result<(Vec<String>, Vec<BracketEntry>), CliError> {
    let n = p.algebra.dim();
    let b = yb_bracket(&p.algebra, r)?;
    let dual: Vec<String> = p.alg_labels.iter().map(|l| format!("{l}*")).collect();
    let mut lines = Vec::new();
    let mut data = Vec::new();
    for (idx, c) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (x, y, z) = (idx / (n * n), (idx / n) % n, idx % n);
        lines.push(format!("[[r,r]]({}, {}, {}) = {c}", dual[x], dual[y], dual[z]));
        data.push((dual[x].clone(), dual[y].clone(), dual[z].clone(), c.clone()));
    }
    Ok((lines, data))
}

pub fn rmatrix_check(p: &Problem) -> Result<Report, CliError> {
    let r = p.r_matrix()?;
    let rep = check_r_matrix(&p.algebra, r)?;
    let (lines, nonzero) = bracket_lines(p, r)?;
    let mut out = Report::new("rmatrix check", rep.is_r_matrix())
        .line(format!("r = {}", format_wedge(&p.alg_labels, r)))
        .line(format!("[[r,r]] = 0: {}", yes_no(rep.bracket_vanishes)))
        .line(format!(
            "r# is an O-operator on the coadjoint module: {}",
            yes_no(rep.sharp_is_o_operator)
        ))
        .line(format!("routes agree: {}", yes_no(rep.routes_agree())));
    for l in lines {
        out.push(l);
    }
    Ok(out.with_data(json!({ "report": rep, "nonzero_bracket": nonzero })))
}

fn format_coproduct(labels: &[String], delta: &Coproduct, k: usize) -> String {
    let n = delta.dim();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = delta.coeff(k, i, j);
            if !c.is_zero() {
                terms.push(format!("{}{}⊗{}", coeff_prefix(c), labels[i], labels[j]));
            }
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

pub fn rmatrix_coproduct(p: &Problem) -> Result<Report, CliError> {
    let r = p.r_matrix()?;
    let delta = match induced_coproduct(&p.algebra, r) {
        Ok(d) => d,
        Err(Error::NotRMatrix) => {
            let (lines, nonzero) = bracket_lines(p, r)?;
            let mut out = Report::new("rmatrix coproduct", false).line("r is not an r-matrix");
            for l in lines {
                out.push(l);
            }
            return Ok(out.with_data(json!({ "nonzero_bracket": nonzero })));
        }
        Err(e) => return Err(e.into()),
    };
    let rep = infinitesimal_bialgebra_check(&p.algebra, &delta)?;
    let mut out = Report::new("rmatrix coproduct", rep.holds());
    for k in 0..delta.dim() {
        out.push(format!(
            "delta({}) = {}",
            p.alg_labels[k],
            format_coproduct(&p.alg_labels, &delta, k)
        ));
    }
    out.push(format!("coassociative: {}", yes_no(rep.coassociative)));
    match rep.derivation_failure {
        None => out.push("derivation rule holds on all basis pairs"),
        Some((a, b)) => out.push(format!("derivation rule fails at ({}, {})", p.alg_labels[a], p.alg_labels[b])),
    }
    Ok(out.with_data(json!({ "coproduct": delta, "bialgebra": rep })))
}

pub fn rmatrix_weak_morphism(p: &Problem) -> Result<Report, CliError> {
    let r1 = p.r_matrix()?;
    let r2 = p.r_matrix_target.as_ref().ok_or_else(|| missing("r_matrix_target"))?;
    let (phi, psi) = p.morphism.as_ref().ok_or_else(|| missing("morphism"))?;
    let n = p.algebra.dim();
    if psi.rows() != n {
        return Err(CliError::Section {
            section: "morphism.psi".into(),
            message: format!("must be {n}x{n} for r-matrices"),
        });
    }
    let rep = match weak_morphism_check(&p.algebra, r1, r2, phi, psi) {
        Ok(rep) => rep,
        Err(Error::NotAlgebraMorphism) => {
            return Ok(Report::new("rmatrix weak-morphism", false).line("phi is not an algebra morphism"));
        }
        Err(e) => return Err(e.into()),
    };
    let mut out = Report::new("rmatrix weak-morphism", rep.is_weak_morphism());
    out.push(format!("failed identities: {:?}", rep.failed));
    out.push(format!(
        "(phi, psi^T) is an O-operator morphism r1# -> r2#: {}",
        yes_no(rep.dual_route)
    ));
    let mut bialgebra = None;
    if let (Ok(d1), Ok(d2)) = (induced_coproduct(&p.algebra, r1), induced_coproduct(&p.algebra, r2)) {
        let bi = bialgebra_weak_morphism_check(&p.algebra, &d1, &d2, phi, psi)?;
        out.push(format!("induced bialgebras are weakly morphic: {}", yes_no(bi.holds())));
        bialgebra = Some(bi);
    } else {
        out.push("induced bialgebras: skipped, not both r-matrices");
    }
    Ok(out.with_data(json!({ "report": rep, "bialgebra": bialgebra })))
}

fn missing(section: &str) -> CliError {
    CliError::Section {
        section: section.into(),
        message: "missing".into(),
    }
}

/// `c*` before a basis tensor, with `1*` dropped and `-1*` shortened to `-`.
fn coeff_prefix(c: &Rational) -> String {
    if c.is_one() {
        String::new()
    } else if (-c).is_one() {
        "-".into()
    } else {
        format!("{c}*")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn format_matrix(m: &LinMap) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| format_vector(m.row(i))).collect();
    format!("[{}]", rows.join(", "))
}

fn format_wedge(labels: &[String], r: &Wedge2) -> String {
    let terms: Vec<String> = r
        .pairs()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(i, j, c)| format!("{}{}∧{}", coeff_prefix(c), labels[i], labels[j]))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

impl Report {
    fn failed(mut self, why: impl Into<String>) -> Self {
        self.holds = false;
        self.push(why);
        self
    }
}
