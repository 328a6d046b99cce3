//! The JSON problem file and its conversion into checked domain objects.
//!
//! Scalars are rational strings (`"3"`, `"-1/2"`); plain integers are also
//! accepted. Matrices are lists of rows. Sparse tensors are lists of index
//! tuples followed by a coefficient.

use std::collections::BTreeMap;
use std::path::Path;

use rota_core::algebra::{Algebra, Bimodule, Side};
use rota_core::linalg::{LinMap, Mat, Vector};
use rota_core::operators::OOperatorCandidate;
use rota_core::rmatrix::Wedge2;
use rota_core::Rational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub format_version: u32,
    pub algebra: AlgebraSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<BimoduleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationSection>,
    /// Second deformation, compared against the first by `deform equiv`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation_target: Option<DeformationSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Wedge2>,
    /// Target of `rmatrix weak-morphism`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix_target: Option<Wedge2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<MorphismSection>,
    #[serde(default, skip_serializing_if = "TaskSection::is_empty")]
    pub task: TaskSection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `[i, j, k, c]`: the coefficient of `e_k` in `e_i e_j`.
    pub mu: Vec<(usize, usize, usize, Rational)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BimoduleKind {
    Adjoint,
    Coadjoint,
    Left,
    Right,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSection {
    pub kind: BimoduleKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// `[i, u, v, c]`: the coefficient of `m_v` in `e_i m_u`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub left: Vec<(usize, usize, usize, Rational)>,
    /// `[u, i, v, c]`: the coefficient of `m_v` in `m_u e_i`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub right: Vec<(usize, usize, usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSection {
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationSection {
    /// `T_1, T_2, …`, each shaped like the operator.
    pub terms: Vec<Vec<Vec<Rational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSection {
    pub phi: Vec<Vec<Rational>>,
    pub psi: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_cap: Option<usize>,
    /// Named elements of `A`, for `--element <name>`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub elements: BTreeMap<String, Vec<Rational>>,
}

impl TaskSection {
    fn is_empty(&self) -> bool {
        self.degree_cap.is_none() && self.order_cap.is_none() && self.elements.is_empty()
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Reads `path`, or `path.json` when `path` itself does not exist.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let with_ext = path.with_extension("json");
        let path = if !path.exists() && with_ext.exists() {
            with_ext.as_path()
        } else {
            path
        };
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Indented JSON with arrays of scalars kept on one line.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("problem files serialize");
        let mut out = String::new();
        write_compact(&value, 0, &mut out);
        out
    }

    /// Builds the domain objects, checking every dimension against the
    /// algebra and bimodule. Axioms are not checked here.
    pub fn build(&self) -> Result<Problem, CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(section(
                "format_version",
                format!("unsupported version {}, expected {FORMAT_VERSION}", self.format_version),
            ));
        }
        let algebra = self.algebra.build()?;
        let n = algebra.dim();
        let bimodule = match &self.bimodule {
            None => Bimodule::adjoint(&algebra),
            Some(b) => b.build(&algebra)?,
        };
        let m = bimodule.dim();
        let alg_labels: Vec<String> = (0..n).map(|i| algebra.label(i)).collect();
        let module_labels = match self.bimodule.as_ref().map_or(BimoduleKind::Adjoint, |b| b.kind) {
            BimoduleKind::Adjoint | BimoduleKind::Left | BimoduleKind::Right => alg_labels.clone(),
            BimoduleKind::Coadjoint => alg_labels.iter().map(|l| format!("{l}*")).collect(),
            BimoduleKind::Explicit => (0..m).map(|u| format!("m{u}")).collect(),
        };
        let operator = match &self.operator {
            None => None,
            Some(op) => {
                let t = matrix("operator", &op.matrix, n, m)?;
                Some(OOperatorCandidate::new(bimodule.clone(), t).map_err(|e| section("operator", e.to_string()))?)
            }
        };
        let deformation = self.deformation.as_ref().map(|d| d.build("deformation", n, m)).transpose()?;
        let deformation_target = self
            .deformation_target
            .as_ref()
            .map(|d| d.build("deformation_target", n, m))
            .transpose()?;
        for (name, r) in [("r_matrix", &self.r_matrix), ("r_matrix_target", &self.r_matrix_target)] {
            if let Some(r) = r {
                if r.dim() != n {
                    return Err(section(name, format!("dim {} does not match the algebra dim {n}", r.dim())));
                }
            }
        }
        let morphism = match &self.morphism {
            None => None,
            Some(mo) => {
                let phi = matrix("morphism.phi", &mo.phi, n, n)?;
                let psi_cols = mo.psi.first().map_or(0, Vec::len);
                if psi_cols != n && psi_cols != m {
                    return Err(section(
                        "morphism.psi",
                        format!("has {psi_cols} columns; expected {m} (bimodule) or {n} (algebra)"),
                    ));
                }
                Some((phi, matrix("morphism.psi", &mo.psi, psi_cols, psi_cols)?))
            }
        };
        for (name, v) in &self.task.elements {
            if v.len() != n {
                return Err(section(
                    "task.elements",
                    format!("`{name}` has {} coordinates, the algebra has dim {n}", v.len()),
                ));
            }
        }
        Ok(Problem {
            alg_labels,
            module_labels,
            algebra,
            bimodule,
            operator,
            deformation,
            deformation_target,
            r_matrix: self.r_matrix.clone(),
            r_matrix_target: self.r_matrix_target.clone(),
            morphism,
            task: self.task.clone(),
        })
    }
}

impl AlgebraSection {
    pub fn from_algebra(a: &Algebra) -> Self {
        let n = a.dim();
        let mut mu = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        mu.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        AlgebraSection {
            dim: n,
            labels: a.labels().map(<[String]>::to_vec),
            mu,
        }
    }

    fn build(&self) -> Result<Algebra, CliError> {
        let n = self.dim;
        let mut mu = vec![Rational::zero(); n * n * n];
        for (i, j, k, c) in &self.mu {
            if *i >= n || *j >= n || *k >= n {
                return Err(section(
                    "algebra.mu",
                    format!("entry ({i}, {j}, {k}) out of range for dim {n}"),
                ));
            }
            mu[(i * n + j) * n + k] = c.clone();
        }
        let a = Algebra::new(n, mu).map_err(|e| section("algebra", e.to_string()))?;
        match &self.labels {
            None => Ok(a),
            Some(l) => a.with_labels(l.clone()).map_err(|e| section("algebra.labels", e.to_string())),
        }
    }
}

impl BimoduleSection {
    pub fn of_kind(kind: BimoduleKind) -> Self {
        BimoduleSection {
            kind,
            dim: None,
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    fn build(&self, algebra: &Algebra) -> Result<Bimodule, CliError> {
        let standard = match self.kind {
            BimoduleKind::Adjoint => Some(Bimodule::adjoint(algebra)),
            BimoduleKind::Coadjoint => Some(Bimodule::coadjoint(algebra)),
            BimoduleKind::Left => Some(Bimodule::one_sided(algebra, Side::Left)),
            BimoduleKind::Right => Some(Bimodule::one_sided(algebra, Side::Right)),
            BimoduleKind::Explicit => None,
        };
        if let Some(b) = standard {
            if !self.left.is_empty() || !self.right.is_empty() {
                return Err(section("bimodule", "action tensors are only allowed with kind `explicit`"));
            }
            if self.dim.is_some_and(|d| d != b.dim()) {
                return Err(section(
                    "bimodule",
                    format!(
                        "dim {} does not match the {:?} module of dim {}",
                        self.dim.unwrap_or(0),
                        self.kind,
                        b.dim()
                    ),
                ));
            }
            return Ok(b);
        }
        let (n, m) = (
            algebra.dim(),
            self.dim.ok_or_else(|| section("bimodule", "kind `explicit` needs `dim`"))?,
        );
        let mut left = vec![Rational::zero(); n * m * m];
        for (i, u, v, c) in &self.left {
            if *i >= n || *u >= m || *v >= m {
                return Err(section("bimodule.left", format!("entry ({i}, {u}, {v}) out of range")));
            }
            left[(i * m + u) * m + v] = c.clone();
        }
        let mut right = vec![Rational::zero(); n * m * m];
        for (u, i, v, c) in &self.right {
            if *u >= m || *i >= n || *v >= m {
                return Err(section("bimodule.right", format!("entry ({u}, {i}, {v}) out of range")));
            }
            right[(u * n + i) * m + v] = c.clone();
        }
        Bimodule::new(algebra.clone(), m, left, right).map_err(|e| section("bimodule", e.to_string()))
    }
}

impl DeformationSection {
    fn build(&self, name: &'static str, n: usize, m: usize) -> Result<Vec<LinMap>, CliError> {
        if let Some(order) = self.order {
            if order != self.terms.len() {
                return Err(section(name, format!("order {order} but {} terms", self.terms.len())));
            }
        }
        self.terms.iter().map(|t| matrix(name, t, n, m)).collect()
    }
}

fn write_compact(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize").replace(',', ", "));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_compact(x, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(indent + 1), Value::String(key.clone())));
                write_compact(x, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("scalars serialize")),
    }
}

/// Rows of a matrix as written in a file.
pub fn rows_of(m: &Mat) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn matrix(name: &str, rows: &[Vec<Rational>], r: usize, c: usize) -> Result<LinMap, CliError> {
    let got_c = rows.first().map_or(0, Vec::len);
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(section(name, format!("matrix is {}x{got_c}, expected {r}x{c}", rows.len())));
    }
    Mat::from_rows(c, rows.to_vec()).map_err(|e| section(name, e.to_string()))
}

fn section(name: &str, message: impl Into<String>) -> CliError {
    CliError::Section {
        section: name.to_string(),
        message: message.into(),
    }
}

/// A problem file after dimension checks.
#[derive(Clone, Debug)]
pub struct Problem {
    pub alg_labels: Vec<String>,
    pub module_labels: Vec<String>,
    pub algebra: Algebra,
    pub bimodule: Bimodule,
    pub operator: Option<OOperatorCandidate>,
    pub deformation: Option<Vec<LinMap>>,
    pub deformation_target: Option<Vec<LinMap>>,
    pub r_matrix: Option<Wedge2>,
    pub r_matrix_target: Option<Wedge2>,
    pub morphism: Option<(LinMap, LinMap)>,
    pub task: TaskSection,
}

impl Problem {
    pub fn operator(&self) -> Result<&OOperatorCandidate, CliError> {
        self.operator.as_ref().ok_or_else(|| section("operator", "missing"))
    }

    pub fn r_matrix(&self) -> Result<&Wedge2, CliError> {
        self.r_matrix.as_ref().ok_or_else(|| section("r_matrix", "missing"))
    }

    /// An element named in the task section, or an inline comma-separated list.
    pub fn element(&self, given: &str) -> Result<Vector, CliError> {
        if let Some(v) = self.task.elements.get(given) {
            return Ok(v.clone());
        }
        let parsed: Result<Vector, _> = given.split(',').map(|s| s.trim().parse::<Rational>()).collect();
        let v = parsed.map_err(|_| CliError::Usage(format!("`{given}` is neither a named element nor a list of rationals")))?;
        if v.len() != self.algebra.dim() {
            return Err(CliError::Usage(format!(
                "element has {} coordinates, the algebra has dim {}",
                v.len(),
                self.algebra.dim()
            )));
        }
        Ok(v)
    }

    /// Errors (exit 2) unless the algebra and bimodule axioms hold.
    pub fn require_valid(&self) -> Result<(), CliError> {
        if !self.algebra.is_associative() {
            return Err(section(
                "algebra",
                "product is not associative (run `validate` for a witness)",
            ));
        }
        if !self.bimodule.is_valid() {
            return Err(section("bimodule", "bimodule axioms fail (run `validate` for a witness)"));
        }
        Ok(())
    }
}
