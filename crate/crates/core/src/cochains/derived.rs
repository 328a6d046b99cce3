//! The derived bracket `⟦·,·⟧` on `C^•(M, A) = ⊕ Hom(M^{⊗n}, A)`.
//!
//! For `P` of degree `m ≥ 1` and `Q` of degree `n ≥ 1` the bracket is the
//! explicit five-group sum; degree-0 arguments use the separate formula
//! `⟦P, a⟧` and the commutator `⟦a, b⟧ = ab - ba`.

use super::multilinear::{Cochain, Multilinear};
use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{axpy, sub_vec, unit_vec, LinMap, Vector};
use crate::rational::Rational;

pub(crate) fn check_cochain(module: &Bimodule, p: &Cochain) -> Result<()> {
    if p.in_dim() != module.dim() || p.out_dim() != module.alg_dim() {
        return Err(Error::Shape(format!(
            "cochain {} -> {} over a bimodule of dim {} on an algebra of dim {}",
            p.in_dim(),
            p.out_dim(),
            module.dim(),
            module.alg_dim()
        )));
    }
    Ok(())
}

/// Basis vectors of `M` for a tuple of indices.
pub(crate) fn units(dim: usize, t: &[usize]) -> Vec<Vector> {
    t.iter().map(|&u| unit_vec(dim, u)).collect()
}

/// Evaluates `p` on the basis tuple `t` with the slots `[i, i + width)`
/// replaced by the single vector `v`.
pub(crate) fn eval_with_slot(p: &Cochain, dim: usize, t: &[usize], i: usize, width: usize, v: Vector) -> Vector {
    let mut args = Vec::with_capacity(p.arity());
    args.extend(units(dim, &t[..i]));
    args.push(v);
    args.extend(units(dim, &t[i + width..]));
    p.eval(&args)
}

/// `⟦P, Q⟧` for `deg P, deg Q ≥ 1`, transcribed from the explicit formula.
pub fn derived_bracket(module: &Bimodule, p: &Cochain, q: &Cochain) -> Result<Cochain> {
    check_cochain(module, p)?;
    check_cochain(module, q)?;
    let m = p.degree();
    let n = q.degree();
    if m == 0 || n == 0 {
        return Err(Error::Shape("derived_bracket needs degrees >= 1; use bracket".into()));
    }
    let dm = module.dim();
    let alg = module.algebra();
    let smn = Rational::sign(m * n);
    Ok(Multilinear::from_fn(m + n, dm, module.alg_dim(), |t| {
        let mut out = vec![Rational::zero(); module.alg_dim()];
        let u = |k: usize| unit_vec(dm, t[k]);
        // Groups 1 and 2: Q inserted into P.
        for i in 0..m {
            let qv = q.value(&t[i..i + n]);
            let arg = module.act_left(qv, &u(i + n));
            axpy(&mut out, &Rational::sign(i * n), &eval_with_slot(p, dm, t, i, n + 1, arg));
            let qv = q.value(&t[i + 1..i + 1 + n]);
            let arg = module.act_right(&u(i), qv);
            axpy(
                &mut out,
                &-Rational::sign((i + 1) * n),
                &eval_with_slot(p, dm, t, i, n + 1, arg),
            );
        }
        // Groups 3 and 4: P inserted into Q, with overall sign -(-1)^{mn}.
        for i in 0..n {
            let pv = p.value(&t[i..i + m]);
            let arg = module.act_left(pv, &u(i + m));
            let c = -(&smn * Rational::sign(i * m));
            axpy(&mut out, &c, &eval_with_slot(q, dm, t, i, m + 1, arg));
            let pv = p.value(&t[i + 1..i + 1 + m]);
            let arg = module.act_right(&u(i), pv);
            let c = &smn * Rational::sign((i + 1) * m);
            axpy(&mut out, &c, &eval_with_slot(q, dm, t, i, m + 1, arg));
        }
        // Group 5: products in A.
        let pq = alg.mul(p.value(&t[..m]), q.value(&t[m..]));
        let qp = alg.mul(q.value(&t[..n]), p.value(&t[n..]));
        axpy(&mut out, &smn, &pq);
        axpy(&mut out, &-Rational::one(), &qp);
        out
    }))
}

/// `⟦P, a⟧` for `P` of degree `m` and `a ∈ A`:
/// `Σ_i P(…, a u_i - u_i a, …) + P(…)·a - a·P(…)`.
pub fn derived_bracket_deg0(module: &Bimodule, p: &Cochain, a: &[Rational]) -> Result<Cochain> {
    check_cochain(module, p)?;
    if a.len() != module.alg_dim() {
        return Err(Error::Shape(format!(
            "element of length {} in an algebra of dim {}",
            a.len(),
            module.alg_dim()
        )));
    }
    let dm = module.dim();
    let alg = module.algebra();
    let m = p.degree();
    if m == 0 {
        return Ok(Multilinear::constant(dm, alg.commutator(p.value(&[]), a)));
    }
    Ok(Multilinear::from_fn(m, dm, module.alg_dim(), |t| {
        let mut out = vec![Rational::zero(); module.alg_dim()];
        for i in 0..m {
            let ui = unit_vec(dm, t[i]);
            let arg = sub_vec(&module.act_left(a, &ui), &module.act_right(&ui, a));
            axpy(&mut out, &Rational::one(), &eval_with_slot(p, dm, t, i, 1, arg));
        }
        let pv = p.value(t);
        axpy(&mut out, &Rational::one(), &alg.commutator(pv, a));
        out
    }))
}

/// The bracket on all of `C^•(M, A)`, degree 0 included.
///
/// `⟦a, P⟧` is defined as `-⟦P, a⟧`, the value forced by graded antisymmetry.
pub fn bracket(module: &Bimodule, p: &Cochain, q: &Cochain) -> Result<Cochain> {
    match (p.degree(), q.degree()) {
        (0, 0) => {
            check_cochain(module, p)?;
            check_cochain(module, q)?;
            Ok(Multilinear::constant(
                module.dim(),
                module.algebra().commutator(p.value(&[]), q.value(&[])),
            ))
        }
        (_, 0) => derived_bracket_deg0(module, p, q.value(&[])),
        (0, _) => Ok(derived_bracket_deg0(module, q, p.value(&[]))?.neg()),
        _ => derived_bracket(module, p, q),
    }
}

/// The closed form of `⟦T, T'⟧` for two linear maps `M → A`:
/// `T(T'(u)v) + T(uT'(v)) + T'(T(u)v) + T'(uT(v)) - T(u)T'(v) - T'(u)T(v)`.
pub fn bracket_of_linear_maps(module: &Bimodule, t: &LinMap, t2: &LinMap) -> Result<Cochain> {
    let (n, m) = (module.alg_dim(), module.dim());
    for x in [t, t2] {
        if x.rows() != n || x.cols() != m {
            return Err(Error::Shape(format!("map is {}x{}, expected {n}x{m}", x.rows(), x.cols())));
        }
    }
    let alg = module.algebra();
    Ok(Multilinear::from_fn(2, m, n, |idx| {
        let (u, v) = (unit_vec(m, idx[0]), unit_vec(m, idx[1]));
        let (tu, tv, su, sv) = (t.col(idx[0]), t.col(idx[1]), t2.col(idx[0]), t2.col(idx[1]));
        let mut out = t.apply(&module.act_left(&su, &v));
        axpy(&mut out, &Rational::one(), &t.apply(&module.act_right(&u, &sv)));
        axpy(&mut out, &Rational::one(), &t2.apply(&module.act_left(&tu, &v)));
        axpy(&mut out, &Rational::one(), &t2.apply(&module.act_right(&u, &tv)));
        axpy(&mut out, &-Rational::one(), &alg.mul(&tu, &sv));
        axpy(&mut out, &-Rational::one(), &alg.mul(&su, &tv));
        out
    }))
}
