mod common;

use common::*;
use proptest::prelude::*;
use rota_core::algebra::Bimodule;
use rota_core::cochains::{bracket, derived_bracket, Cochain};
use rota_core::fixtures;
use rota_core::operators::OOperatorCandidate;
use rota_core::Rational;

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[test]
fn explicit_bracket_matches_gerstenhaber_route() {
    let mut rng = rng(11);
    let modules = [
        Bimodule::coadjoint(&left_unit2()),
        Bimodule::adjoint(&fixtures::ut2()),
        Bimodule::coadjoint(&fixtures::dual2()),
        Bimodule::adjoint(&fixtures::poly3()),
    ];
    for module in &modules {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let p = random_cochain(&mut rng, m, module.dim(), module.alg_dim());
            let q = random_cochain(&mut rng, n, module.dim(), module.alg_dim());
            assert_eq!(
                derived_bracket(module, &p, &q).unwrap(),
                bracket_via_gerstenhaber(module, &p, &q),
                "degrees ({m}, {n})"
            );
        }
    }
}

#[test]
fn maurer_cartan_iff_o_operator() {
    let mut rng = rng(5);
    let cases: Vec<(Bimodule, usize)> = vec![
        (Bimodule::adjoint(&fixtures::dual2()), 20),
        (Bimodule::adjoint(&fixtures::ut2()), 20),
        (Bimodule::coadjoint(&fixtures::ut2()), 20),
        (Bimodule::adjoint(&fixtures::abelian2()), 5),
    ];
    let (mut yes, mut no) = (0, 0);
    for (module, count) in &cases {
        for _ in 0..*count {
            let t = random_matrix(&mut rng, module.alg_dim(), module.dim(), &[-1, 0, 0, 0, 1]);
            let c = Cochain::from_linmap(&t);
            let mc = derived_bracket(module, &c, &c).unwrap().is_zero();
            assert_eq!(mc, o_identity_oracle(module, &t), "{t:?}");
            assert_eq!(mc, OOperatorCandidate::new(module.clone(), t).unwrap().is_o_operator());
            if mc {
                yes += 1;
            } else {
                no += 1;
            }
        }
    }
    assert!(yes > 0 && no > 0, "{yes} operators, {no} non-operators");
}

fn arb_degrees() -> impl Strategy<Value = (usize, usize, usize)> {
    (0usize..=3, 0usize..=3, 0usize..=3).prop_filter("m + n + k <= 5", |(m, n, k)| m + n + k <= 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn graded_antisymmetry_and_jacobi((m, n, k) in arb_degrees(), seed in any::<u64>(), which in 0usize..3) {
        let module = match which {
            0 => Bimodule::adjoint(&fixtures::dual2()),
            1 => Bimodule::adjoint(&left_unit2()),
            _ => Bimodule::coadjoint(&left_unit2()),
        };
        let mut rng = rng(seed);
        let p = random_cochain(&mut rng, m, 2, 2);
        let q = random_cochain(&mut rng, n, 2, 2);
        let r = random_cochain(&mut rng, k, 2, 2);
        let pq = bracket(&module, &p, &q).unwrap();
        let qp = bracket(&module, &q, &p).unwrap();
        prop_assert_eq!(&pq, &qp.scale(&-sign(m * n)));

        let lhs = bracket(&module, &p, &bracket(&module, &q, &r).unwrap()).unwrap();
        let mut rhs = bracket(&module, &pq, &r).unwrap();
        rhs.add_scaled(&sign(m * n), &bracket(&module, &q, &bracket(&module, &p, &r).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
