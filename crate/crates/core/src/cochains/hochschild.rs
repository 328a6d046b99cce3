//! The differential `d_H` of an O-operator and its matrix form.
//!
//! `d_H` is the Hochschild differential of `(M, ⋆)` with coefficients in `A`,
//! where `M` acts on `A` by `l_T(m, a) = T(m)a - T(ma)` and
//! `r_T(a, m) = aT(m) - T(am)`.

use super::derived::{bracket, check_cochain, eval_with_slot};
use super::multilinear::{Cochain, Multilinear};
use crate::error::{Error, Result};
use crate::linalg::{add_vec, axpy, unit_vec, Mat, Vector};
use crate::operators::OOperatorCandidate;
use crate::rational::Rational;

/// `d_H f`, refusing candidates that are not O-operators.
pub fn d_hoch(op: &OOperatorCandidate, f: &Cochain) -> Result<Cochain> {
    op.ensure()?;
    check_cochain(op.bimodule(), f)?;
    Ok(d_hoch_unchecked(op, f))
}

/// `d_H f` without checking the O-operator identity on `T`.
pub fn d_hoch_unchecked(op: &OOperatorCandidate, f: &Cochain) -> Cochain {
    let module = op.bimodule();
    let alg = module.algebra();
    let t_map = op.matrix();
    let dm = module.dim();
    let n = f.degree();
    if n == 0 {
        let a = f.value(&[]);
        return Multilinear::from_fn(1, dm, module.alg_dim(), |t| {
            let m = unit_vec(dm, t[0]);
            let tm = t_map.col(t[0]);
            let mut out = alg.mul(&tm, a);
            axpy(&mut out, &-Rational::one(), &t_map.apply(&module.act_right(&m, a)));
            axpy(&mut out, &-Rational::one(), &alg.mul(a, &tm));
            axpy(&mut out, &Rational::one(), &t_map.apply(&module.act_left(a, &m)));
            out
        });
    }
    Multilinear::from_fn(n + 1, dm, module.alg_dim(), |t| {
        let u = |k: usize| unit_vec(dm, t[k]);
        let tail = f.value(&t[1..]);
        let mut out = alg.mul(&t_map.col(t[0]), tail);
        axpy(&mut out, &-Rational::one(), &t_map.apply(&module.act_right(&u(0), tail)));
        for i in 0..n {
            let star = add_vec(
                &module.act_right(&u(i), &t_map.col(t[i + 1])),
                &module.act_left(&t_map.col(t[i]), &u(i + 1)),
            );
            axpy(&mut out, &Rational::sign(i + 1), &eval_with_slot(f, dm, t, i, 2, star));
        }
        let head = f.value(&t[..n]);
        let s = Rational::sign(n + 1);
        axpy(&mut out, &s, &alg.mul(head, &t_map.col(t[n])));
        axpy(&mut out, &-s, &t_map.apply(&module.act_left(head, &u(n))));
        out
    })
}

/// `d_T f = ⟦T, f⟧`.
pub fn d_t(op: &OOperatorCandidate, f: &Cochain) -> Result<Cochain> {
    op.ensure()?;
    bracket(op.bimodule(), &Multilinear::from_linmap(op.matrix()), f)
}

/// Number of coefficients of a degree-`n` cochain.
pub fn cochain_len(op: &OOperatorCandidate, n: usize) -> usize {
    op.bimodule().dim().pow(n as u32) * op.bimodule().alg_dim()
}

fn matrix_of(op: &OOperatorCandidate, n: usize, mut apply: impl FnMut(&Cochain) -> Result<Cochain>) -> Result<Mat> {
    let (dm, da) = (op.bimodule().dim(), op.bimodule().alg_dim());
    let cols: Vec<Vector> = (0..cochain_len(op, n))
        .map(|idx| apply(&Multilinear::basis_element(n, dm, da, idx)).map(Multilinear::into_coeffs))
        .collect::<Result<_>>()?;
    Mat::from_cols(cochain_len(op, n + 1), &cols)
}

/// Matrix of `d_H : C^n → C^{n+1}` in the lexicographic cochain basis.
pub fn d_hoch_matrix(op: &OOperatorCandidate, n: usize) -> Result<Mat> {
    op.ensure()?;
    matrix_of(op, n, |f| Ok(d_hoch_unchecked(op, f)))
}

/// Matrix of `d_T = ⟦T, ·⟧ : C^n → C^{n+1}`.
pub fn d_t_matrix(op: &OOperatorCandidate, n: usize) -> Result<Mat> {
    op.ensure()?;
    let t = Multilinear::from_linmap(op.matrix());
    matrix_of(op, n, |f| bracket(op.bimodule(), &t, f))
}

/// Shape guard shared by callers that take explicit degrees.
pub(crate) fn check_degree(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        return Err(Error::DegreeCap { degree, cap });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bimodule;
    use crate::fixtures;
    use crate::rational::qi;

    fn poly3_r() -> OOperatorCandidate {
        OOperatorCandidate::new(Bimodule::adjoint(&fixtures::poly3()), fixtures::poly3_integration()).unwrap()
    }

    #[test]
    fn zero_goes_to_zero() {
        let op = poly3_r();
        assert!(d_hoch(&op, &Multilinear::zero(2, 3, 3)).unwrap().is_zero());
    }

    #[test]
    fn unit_is_closed_in_degree_zero() {
        let op = poly3_r();
        let one = Multilinear::constant(3, vec![qi(1), qi(0), qi(0)]);
        assert!(d_hoch(&op, &one).unwrap().is_zero());
    }

    #[test]
    fn refuses_non_o_operators() {
        let op = OOperatorCandidate::new(Bimodule::adjoint(&fixtures::poly3()), fixtures::poly3_derivative()).unwrap();
        assert!(matches!(
            d_hoch(&op, &Multilinear::zero(1, 3, 3)),
            Err(Error::NotOOperator(_))
        ));
    }

    #[test]
    fn general_formula_agrees_with_degree_zero_formula() {
        // Substituting n = 0 in the general expression reproduces the degree-0 one.
        let op = OOperatorCandidate::new(Bimodule::adjoint(&fixtures::ut2()), fixtures::ut2_rota_baxter()).unwrap();
        let a = vec![qi(2), qi(-1), qi(3)];
        let via_zero = d_hoch(&op, &Multilinear::constant(3, a.clone())).unwrap();
        let alg = op.bimodule().algebra();
        let expected = Multilinear::from_fn(1, 3, 3, |t| {
            let m = unit_vec(3, t[0]);
            let tm = op.matrix().col(t[0]);
            let mut out = alg.mul(&tm, &a);
            axpy(&mut out, &-Rational::one(), &op.matrix().apply(&alg.mul(&m, &a)));
            axpy(&mut out, &-Rational::one(), &alg.mul(&a, &tm));
            axpy(&mut out, &Rational::one(), &op.matrix().apply(&alg.mul(&a, &m)));
            out
        });
        assert_eq!(via_zero, expected);
    }
}
