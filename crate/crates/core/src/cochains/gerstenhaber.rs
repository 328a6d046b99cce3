//! The Gerstenhaber composition and bracket on `⊕ Hom(V^{⊗n+1}, V)`.
//!
//! A [`BigCochain`] of arity `n + 1` has degree `n`.

use super::multilinear::{BigCochain, Multilinear};
use crate::algebra::{semidirect_product_unchecked, Bimodule};
use crate::error::{Error, Result};
use crate::linalg::unit_vec;
use crate::rational::Rational;

fn degree_of(f: &BigCochain) -> Result<usize> {
    if f.in_dim() != f.out_dim() {
        return Err(Error::Shape(format!(
            "map {} -> {} is not an endomorphism cochain",
            f.in_dim(),
            f.out_dim()
        )));
    }
    if f.arity() == 0 {
        return Err(Error::Shape("Gerstenhaber cochains have arity at least 1".into()));
    }
    Ok(f.arity() - 1)
}

/// `(f ∘ g)(v_1, …, v_{m+n+1}) = Σ_i (-1)^{(i-1)n} f(v_1, …, g(v_i, …, v_{i+n}), …)`.
pub fn gerstenhaber_circ(f: &BigCochain, g: &BigCochain) -> Result<BigCochain> {
    let m = degree_of(f)?;
    let n = degree_of(g)?;
    if f.in_dim() != g.in_dim() {
        return Err(Error::Shape(format!("spaces of dim {} and {}", f.in_dim(), g.in_dim())));
    }
    let d = f.in_dim();
    let arity = m + n + 1;
    Ok(Multilinear::from_fn(arity, d, d, |t| {
        let mut out = vec![Rational::zero(); d];
        for i in 0..=m {
            let inner = g.value(&t[i..i + n + 1]).to_vec();
            let mut args: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
            args.extend(t[..i].iter().map(|&u| unit_vec(d, u)));
            args.push(inner);
            args.extend(t[i + n + 1..].iter().map(|&u| unit_vec(d, u)));
            let v = f.eval(&args);
            let s = Rational::sign(i * n);
            crate::linalg::axpy(&mut out, &s, &v);
        }
        out
    }))
}

/// `[f, g] = f ∘ g - (-1)^{mn} g ∘ f`.
pub fn gerstenhaber_bracket(f: &BigCochain, g: &BigCochain) -> Result<BigCochain> {
    let m = degree_of(f)?;
    let n = degree_of(g)?;
    let fg = gerstenhaber_circ(f, g)?;
    let gf = gerstenhaber_circ(g, f)?;
    let mut out = fg;
    out.add_scaled(&-Rational::sign(m * n), &gf)?;
    Ok(out)
}

/// The degree-1 element `μ + l + r` on `A ⊕ M` (basis: `A` then `M`).
///
/// This assembles the tensors without validating them, so that broken
/// inputs can be shown to fail the Maurer-Cartan equation.
pub fn mc_element(module: &Bimodule) -> BigCochain {
    let s = semidirect_product_unchecked(module);
    let d = s.dim();
    Multilinear::from_fn(2, d, d, |t| s.basis_product(t[0], t[1]).to_vec())
}

/// Whether `θ ∘ θ = 0` for a degree-1 element.
pub fn is_maurer_cartan(theta: &BigCochain) -> Result<bool> {
    if degree_of(theta)? != 1 {
        return Err(Error::Shape("Maurer-Cartan elements have degree 1".into()));
    }
    Ok(gerstenhaber_circ(theta, theta)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Bimodule};
    use crate::fixtures;
    use crate::rational::qi;

    fn mu_of(a: &Algebra) -> BigCochain {
        Multilinear::from_fn(2, a.dim(), a.dim(), |t| a.basis_product(t[0], t[1]).to_vec())
    }

    #[test]
    fn one_dim_idempotent_circ_vanishes() {
        let mu = mu_of(&fixtures::idempotent1());
        assert!(gerstenhaber_circ(&mu, &mu).unwrap().is_zero());
    }

    #[test]
    fn circ_with_identity() {
        // With g = id (degree 0) every sign (-1)^{(i-1)·0} is +1, so f ∘ id = (m+1) f.
        let mu = mu_of(&fixtures::ut2());
        let id = Multilinear::from_linmap(&crate::linalg::Mat::identity(3));
        assert_eq!(gerstenhaber_circ(&mu, &id).unwrap(), mu.scale(&qi(2)));
        assert_eq!(gerstenhaber_circ(&id, &mu).unwrap(), mu);
    }

    #[test]
    fn non_associative_square_nonzero() {
        let bad = Algebra::from_fn(2, |i, j| match (i, j) {
            (0, 0) => vec![qi(0), qi(1)],
            (1, 0) => vec![qi(1), qi(0)],
            _ => vec![qi(0), qi(0)],
        });
        let mu = mu_of(&bad);
        let sq = gerstenhaber_circ(&mu, &mu).unwrap();
        // (μ∘μ)(e0,e0,e0) = μ(μ(e0,e0),e0) - μ(e0,μ(e0,e0)) = e0 - 0
        assert_eq!(sq.value(&[0, 0, 0]), &[qi(1), qi(0)]);
    }

    #[test]
    fn bracket_of_degree_one_is_twice_circ() {
        let mu = mu_of(&fixtures::poly3());
        let b = gerstenhaber_bracket(&mu, &mu).unwrap();
        assert_eq!(b, gerstenhaber_circ(&mu, &mu).unwrap().scale(&qi(2)));
    }

    #[test]
    fn mc_element_of_valid_and_corrupted() {
        let a = fixtures::poly3();
        let theta = mc_element(&Bimodule::adjoint(&a));
        assert!(is_maurer_cartan(&theta).unwrap());
        assert!(gerstenhaber_bracket(&theta, &theta).unwrap().is_zero());

        let z = Algebra::zero(2);
        let zm = Bimodule::new(z, 2, vec![qi(0); 8], vec![qi(0); 8]).unwrap();
        assert!(mc_element(&zm).is_zero());

        let adj = Bimodule::adjoint(&a);
        let mut left = adj.left_tensor().to_vec();
        left[0] = qi(2); // e0·f0 = 2 f0 breaks (e0 e0) f0 = e0 (e0 f0)
        let broken = Bimodule::new(a, 3, left, adj.right_tensor().to_vec()).unwrap();
        assert!(!broken.is_valid());
        assert!(!is_maurer_cartan(&mc_element(&broken)).unwrap());
    }
}
