//! Small algebras and operators used as worked examples and test data.

use crate::algebra::Algebra;
use crate::linalg::{unit_vec, zero_vec, LinMap, Mat};
use crate::rational::qi;

fn labelled(a: Algebra, labels: &[&str]) -> Algebra {
    a.with_labels(labels.iter().map(|s| s.to_string()).collect())
        .expect("label count")
}

/// `Q[x]/(x^3)` with basis `1, x, x^2`.
pub fn poly3() -> Algebra {
    let a = Algebra::from_fn(3, |i, j| if i + j < 3 { unit_vec(3, i + j) } else { zero_vec(3) });
    labelled(a, &["1", "x", "x2"])
}

/// Integration on `poly3`: `1 ↦ x`, `x ↦ x^2/2`, `x^2 ↦ 0`.
pub fn poly3_integration() -> LinMap {
    Mat::from_fracs(
        3,
        3,
        &[(0, 1), (0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1), (1, 2), (0, 1)],
    )
}

/// Differentiation on `poly3`: `1 ↦ 0`, `x ↦ 1`, `x^2 ↦ 2x`.
pub fn poly3_derivative() -> LinMap {
    Mat::from_ints(3, 3, &[0, 1, 0, 0, 0, 2, 0, 0, 0])
}

/// Dual numbers `Q[x]/(x^2)` with basis `1, x`.
pub fn dual2() -> Algebra {
    let a = Algebra::from_fn(2, |i, j| if i + j < 2 { unit_vec(2, i + j) } else { zero_vec(2) });
    labelled(a, &["1", "x"])
}

/// The projection `1 ↦ 1`, `x ↦ 0` on `dual2`, an averaging operator.
pub fn proj2_averaging() -> LinMap {
    Mat::from_ints(2, 2, &[1, 0, 0, 0])
}

/// Two-dimensional algebra with zero multiplication.
pub fn abelian2() -> Algebra {
    labelled(Algebra::zero(2), &["e0", "e1"])
}

/// Upper-triangular 2×2 matrices with basis `E11, E12, E22`.
pub fn ut2() -> Algebra {
    let a = Algebra::from_fn(3, |i, j| match (i, j) {
        (0, 0) => unit_vec(3, 0),
        (0, 1) => unit_vec(3, 1),
        (1, 2) => unit_vec(3, 1),
        (2, 2) => unit_vec(3, 2),
        _ => zero_vec(3),
    });
    labelled(a, &["E11", "E12", "E22"])
}

/// The one-dimensional algebra `e·e = e`.
pub fn idempotent1() -> Algebra {
    labelled(Algebra::new(1, vec![qi(1)]).expect("shape"), &["e"])
}

/// A Rota-Baxter operator of weight 0 on `ut2`: `E22 ↦ E12`, rest to zero.
pub fn ut2_rota_baxter() -> LinMap {
    Mat::from_ints(3, 3, &[0, 0, 0, 0, 0, 1, 0, 0, 0])
}
