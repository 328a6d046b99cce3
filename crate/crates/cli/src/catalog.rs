//! The shipped fixture catalog.

use std::collections::BTreeMap;

use rota_core::algebra::{Algebra, Bimodule};
use rota_core::cohomology::Cohomology;
use rota_core::fixtures;
use rota_core::linalg::{LinMap, Mat};
use rota_core::operators::OOperatorCandidate;
use rota_core::rational::qi;
use rota_core::rmatrix::Wedge2;

use crate::error::CliError;
use crate::problem::{
    rows_of, AlgebraSection, BimoduleKind, BimoduleSection, DeformationSection, MorphismSection, OperatorSection, ProblemFile,
    TaskSection, FORMAT_VERSION,
};

pub const NAMES: [&str; 6] = ["poly3_R", "poly3_D", "dual2", "abelian2", "ut2", "proj2_averaging"];

pub fn emit_fixture(name: &str) -> Result<ProblemFile, CliError> {
    let file = match name {
        "poly3_R" => {
            let mut f = base(&fixtures::poly3(), Some(&fixtures::poly3_integration()));
            f.task.elements = elements(&[("x", &[0, 1, 0]), ("x2", &[0, 0, 1])]);
            f
        }
        "poly3_D" => base(&fixtures::poly3(), Some(&fixtures::poly3_derivative())),
        "dual2" => {
            let mut f = base(&fixtures::dual2(), None);
            f.r_matrix = Some(wedge(2, &[(0, 1, 1)]));
            f
        }
        "abelian2" => {
            let mut f = base(&fixtures::abelian2(), Some(&Mat::from_ints(2, 2, &[1, 2, -1, 0])));
            f.r_matrix = Some(wedge(2, &[(0, 1, 3)]));
            f
        }
        "ut2" => ut2()?,
        "proj2_averaging" => {
            let mut f = base(&fixtures::dual2(), Some(&fixtures::proj2_averaging()));
            f.bimodule = Some(BimoduleSection::of_kind(BimoduleKind::Left));
            f
        }
        other => return Err(CliError::UnknownFixture(other.to_string())),
    };
    Ok(file)
}

fn base(alg: &Algebra, operator: Option<&LinMap>) -> ProblemFile {
    ProblemFile {
        format_version: FORMAT_VERSION,
        algebra: AlgebraSection::from_algebra(alg),
        bimodule: Some(BimoduleSection::of_kind(BimoduleKind::Adjoint)),
        operator: operator.map(|t| OperatorSection { matrix: rows_of(t) }),
        deformation: None,
        deformation_target: None,
        r_matrix: None,
        r_matrix_target: None,
        morphism: None,
        task: TaskSection::default(),
    }
}

fn wedge(dim: usize, entries: &[(usize, usize, i64)]) -> Wedge2 {
    let mut w = Wedge2::zero(dim);
    for &(i, j, c) in entries {
        w.set(i, j, qi(c)).expect("catalog indices are in range");
    }
    w
}

fn elements(named: &[(&str, &[i64])]) -> BTreeMap<String, Vec<rota_core::Rational>> {
    named
        .iter()
        .map(|(k, v)| (k.to_string(), v.iter().map(|&c| qi(c)).collect()))
        .collect()
}

/// `ut2` with its Rota-Baxter operator, a linear deformation, and an r-matrix moved by conjugation with
/// `[[1, 1], [0, 1]]`.
fn ut2() -> Result<ProblemFile, CliError> {
    let alg = fixtures::ut2();
    let t = fixtures::ut2_rota_baxter();
    let mut f = base(&alg, Some(&t));
    let op = OOperatorCandidate::new(Bimodule::adjoint(&alg), t)?;
    // A Z^1 class that is not a coboundary; the target is the same deformation,
    // reached through the Nijenhuis element E12.
    let reps = Cohomology::new(&op)?.report(1)?.representatives;
    let t1 = reps
        .iter()
        .map(|c| c.to_linmap())
        .find(|m| {
            m.as_ref()
                .is_ok_and(|m| m.entries().iter().filter(|c| !c.is_zero()).count() == 1)
        })
        .expect("ut2 has an elementary H^1 representative")?;
    f.deformation = Some(DeformationSection {
        terms: vec![rows_of(&t1)],
        order: Some(1),
    });
    f.deformation_target = f.deformation.clone();
    let phi = Mat::from_ints(3, 3, &[1, 0, 0, -1, 1, 1, 0, 0, 1]);
    let phi_inv = Mat::from_ints(3, 3, &[1, 0, 0, 1, 1, -1, 0, 0, 1]);
    let r = wedge(3, &[(0, 1, 1)]);
    let pushed = Wedge2::from_tensor(&phi.mul(&r.tensor())?.mul(&phi.transpose())?)?;
    f.r_matrix = Some(r);
    f.r_matrix_target = Some(pushed);
    f.morphism = Some(MorphismSection {
        phi: rows_of(&phi),
        psi: rows_of(&phi_inv),
    });
    f.task.elements = elements(&[("E11", &[1, 0, 0]), ("E12", &[0, 1, 0])]);
    Ok(f)
}
