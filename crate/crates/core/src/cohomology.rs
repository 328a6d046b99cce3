//! Cocycles, coboundaries and cohomology of an O-operator, by exact rank
//! computations on the matrices of `d_H`.
//!
//! Cochains of degree `n` are vectors of length `dim(M)^n · dim(A)` in the
//! lexicographic basis on `(u_1, …, u_n, k)`.

use serde::{Deserialize, Serialize};

use crate::cochains::hochschild::{check_degree, cochain_len, d_hoch_matrix, d_t_matrix};
use crate::cochains::multilinear::{Cochain, Multilinear};
use crate::error::{Error, Result};
use crate::linalg::{image, kernel, quotient_dim, sub_vec, unit_vec, Subspace};
use crate::operators::OOperatorCandidate;

pub const DEFAULT_DEGREE_CAP: usize = 3;

/// Which matrix is used as the differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    /// The explicit `d_H`.
    Hochschild,
    /// `⟦T, ·⟧` through the derived bracket.
    Bracket,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// Echelon-complement vectors of `B^n` in `Z^n`, as cochains.
    pub representatives: Vec<Cochain>,
}

/// The cochain complex of an O-operator, with a degree cap.
#[derive(Clone, Debug)]
pub struct Cohomology<'a> {
    op: &'a OOperatorCandidate,
    cap: usize,
    route: Route,
}

impl<'a> Cohomology<'a> {
    /// Refuses candidates that are not O-operators.
    pub fn new(op: &'a OOperatorCandidate) -> Result<Self> {
        op.ensure()?;
        Ok(Cohomology {
            op,
            cap: DEFAULT_DEGREE_CAP,
            route: Route::Hochschild,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_route(mut self, route: Route) -> Self {
        self.route = route;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn differential(&self, n: usize) -> Result<crate::linalg::Mat> {
        match self.route {
            Route::Hochschild => d_hoch_matrix(self.op, n),
            Route::Bracket => d_t_matrix(self.op, n),
        }
    }

    /// `Z^n = ker(d : C^n → C^{n+1})`.
    pub fn cocycles(&self, n: usize) -> Result<Subspace> {
        check_degree(n, self.cap)?;
        Ok(kernel(&self.differential(n)?))
    }

    /// `B^n = im(d : C^{n-1} → C^n)`, with `B^0 = 0`.
    pub fn coboundaries(&self, n: usize) -> Result<Subspace> {
        check_degree(n, self.cap)?;
        if n == 0 {
            return Ok(Subspace::zero(cochain_len(self.op, 0)));
        }
        Ok(image(&self.differential(n - 1)?))
    }

    pub fn report(&self, n: usize) -> Result<CohomologyReport> {
        let z = self.cocycles(n)?;
        let b = self.coboundaries(n)?;
        let dim_h = quotient_dim(&z, &b)?;
        let (dm, da) = (self.op.bimodule().dim(), self.op.bimodule().alg_dim());
        let representatives = z
            .complement_of(&b)
            .into_iter()
            .map(|v| Multilinear::from_coeffs(n, dm, da, v))
            .collect::<Result<_>>()?;
        Ok(CohomologyReport {
            degree: n,
            dim_z: z.dim(),
            dim_b: b.dim(),
            dim_h,
            cocycles: z,
            coboundaries: b,
            representatives,
        })
    }

    fn check_shape(&self, f: &Cochain) -> Result<()> {
        let m = self.op.bimodule();
        if f.in_dim() != m.dim() || f.out_dim() != m.alg_dim() {
            return Err(Error::Shape("cochain does not match the operator".into()));
        }
        Ok(())
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool> {
        self.check_shape(f)?;
        Ok(self.cocycles(f.degree())?.contains(f.coeffs()))
    }

    /// Whether `f - g ∈ B^n`; both must be cocycles.
    pub fn is_cohomologous(&self, f: &Cochain, g: &Cochain) -> Result<bool> {
        if f.degree() != g.degree() {
            return Err(Error::Shape("cochains of different degrees".into()));
        }
        for (name, x) in [("first", f), ("second", g)] {
            if !self.is_cocycle(x)? {
                return Err(Error::Precondition(format!("{name} cochain is not a cocycle")));
            }
        }
        Ok(self.coboundaries(f.degree())?.contains(&sub_vec(f.coeffs(), g.coeffs())))
    }

    /// `{a : a·T(m) - T(m)·a = T(am - ma) for all m}`, computed directly.
    pub fn h0_direct(&self) -> Result<Subspace> {
        let module = self.op.bimodule();
        let alg = module.algebra();
        let (da, dm) = (module.alg_dim(), module.dim());
        // Rows: one per (m, k); columns: basis of A.
        let cols: Vec<_> = (0..da)
            .map(|i| {
                let a = unit_vec(da, i);
                let mut col = Vec::with_capacity(dm * da);
                for u in 0..dm {
                    let m = unit_vec(dm, u);
                    let tm = self.op.matrix().col(u);
                    let lhs = alg.commutator(&a, &tm);
                    let rhs = self.op.apply(&sub_vec(&module.act_left(&a, &m), &module.act_right(&m, &a)));
                    col.extend(sub_vec(&lhs, &rhs));
                }
                col
            })
            .collect();
        Ok(kernel(&crate::linalg::Mat::from_cols(dm * da, &cols)?))
    }

    /// Whether `[a, b] = ab - ba` stays in `H^0` for `a, b` in a basis of `H^0`.
    pub fn h0_bracket_closure_check(&self) -> Result<bool> {
        let h0 = self.cocycles(0)?;
        let alg = self.op.bimodule().algebra();
        Ok(h0
            .basis()
            .iter()
            .all(|a| h0.basis().iter().all(|b| h0.contains(&alg.commutator(a, b)))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bimodule;
    use crate::fixtures;
    use crate::linalg::Mat;

    fn poly3_r() -> OOperatorCandidate {
        OOperatorCandidate::new(Bimodule::adjoint(&fixtures::poly3()), fixtures::poly3_integration()).unwrap()
    }

    #[test]
    fn refuses_non_operators() {
        let d = OOperatorCandidate::new(Bimodule::adjoint(&fixtures::poly3()), fixtures::poly3_derivative()).unwrap();
        assert!(Cohomology::new(&d).is_err());
    }

    #[test]
    fn degree_cap() {
        let op = poly3_r();
        let c = Cohomology::new(&op).unwrap();
        assert_eq!(c.cocycles(4), Err(Error::DegreeCap { degree: 4, cap: 3 }));
        assert!(c.with_cap(1).report(2).is_err());
    }

    #[test]
    fn poly3_low_degrees() {
        let op = poly3_r();
        let c = Cohomology::new(&op).unwrap();
        let h0 = c.report(0).unwrap();
        assert_eq!((h0.dim_z, h0.dim_b, h0.dim_h), (3, 0, 3));
        assert_eq!(c.coboundaries(1).unwrap().dim(), 0);
        let r = Multilinear::from_linmap(&fixtures::poly3_integration());
        assert!(c.is_cocycle(&r).unwrap());
        assert!(!c.is_cohomologous(&r, &Multilinear::zero(1, 3, 3)).unwrap());
        assert!(c.is_cohomologous(&r, &r).unwrap());
        assert_eq!(c.h0_direct().unwrap(), c.cocycles(0).unwrap());
        assert!(c.h0_bracket_closure_check().unwrap());
    }

    #[test]
    fn zero_operator_on_abelian2() {
        let op = OOperatorCandidate::new(Bimodule::adjoint(&fixtures::abelian2()), Mat::zeros(2, 2)).unwrap();
        let c = Cohomology::new(&op).unwrap();
        for n in 0..=2 {
            assert_eq!(c.report(n).unwrap().dim_h, 2usize.pow(n as u32) * 2);
        }
    }

    #[test]
    fn representatives_are_cocycles_outside_b() {
        let op = OOperatorCandidate::new(Bimodule::adjoint(&fixtures::ut2()), fixtures::ut2_rota_baxter()).unwrap();
        let c = Cohomology::new(&op).unwrap();
        for n in 0..=2 {
            let rep = c.report(n).unwrap();
            assert_eq!(rep.representatives.len(), rep.dim_h);
            for f in &rep.representatives {
                assert!(rep.cocycles.contains(f.coeffs()));
                assert!(!rep.coboundaries.contains(f.coeffs()));
            }
        }
    }
}
