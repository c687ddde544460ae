use kgsym_core::checks;
use kgsym_core::jet::{apply_operator_free, apply_operator_reduced, lift_to_operator};
use kgsym_core::noether::{
    current_ctilde, generating_current, is_cl_characteristic_free, is_variational_linear,
    skew_basis, symmetry_action_on_current,
};
use kgsym_core::symmetry::{
    independence_rank, is_generalized_symmetry, monomial_characteristics, solve_linear_determining,
};
use kgsym_core::{int, rat, FieldId, TDOperator, Var, XYPoly};

#[test]
fn module_checks_pass_at_small_order() {
    for c in checks::verify_all(3) {
        if c.id == 6 {
            continue;
        }
        assert!(c.passed, "{} {}: {}", c.id, c.name, c.detail);
    }
}

// The lift of the reduced J³ characteristic is J³ + 3xy·J∘L. Since 3xy·J is
// skew-adjoint the lift passes both variational tests.
#[test]
fn lifted_reduced_j_cubed() {
    let j3 = TDOperator::j().pow(3);
    let lifted = lift_to_operator(&apply_operator_reduced(&j3, FieldId::U)).unwrap();
    let a = TDOperator::mul(XYPoly::monomial(int(3), 1, 1)).compose(&TDOperator::j());
    assert_eq!(&lifted - &j3, a.compose(&TDOperator::klein_gordon()));
    assert!(a.is_skew_adjoint());
    assert!(is_variational_linear(&lifted));
    assert!(is_cl_characteristic_free(&apply_operator_free(&lifted)));
    let c6 = checks::reduced_counterexample();
    assert!(!c6.passed);
}

#[test]
fn solver_basis_matches_monomial_characteristics() {
    // The solver returns everything of order ≤ n; the recursion-operator
    // images of orders 0..=n must span the same (n + 1)²-dimensional space.
    for n in 0..=4 {
        let solved = solve_linear_determining(n, n + 2).unwrap().elements;
        let monomial: Vec<_> = (0..=n).flat_map(monomial_characteristics).collect();
        assert!(monomial.iter().all(is_generalized_symmetry));
        let want = ((n + 1) * (n + 1)) as usize;
        assert_eq!(independence_rank(&solved).unwrap(), want);
        assert_eq!(independence_rank(&monomial).unwrap(), want);
        let mut both = solved;
        both.extend(monomial);
        assert_eq!(independence_rank(&both).unwrap(), want, "order {n}");
    }
}

#[test]
fn generating_current_on_skew_combinations() {
    let ops: Vec<TDOperator> = skew_basis(3).into_iter().map(|(_, _, _, q)| q).collect();
    let gen = generating_current();
    for (i, a) in ops.iter().enumerate() {
        let b = &ops[(i + 3) % ops.len()];
        let q = &a.scale(&rat(2, 3)) - &b.scale(&int(5));
        let eta = apply_operator_reduced(&q, FieldId::U)
            .total_derivative(Var::Y)
            .scale(&rat(1, 2));
        let acted = symmetry_action_on_current(&eta, &gen);
        let c = current_ctilde(&q).unwrap();
        assert_eq!((acted.t, acted.x), (c.t.clone(), c.x.clone()));
        let two_qu = apply_operator_reduced(&q, FieldId::U).scale(&int(2));
        assert_eq!(c.characteristic().unwrap().unwrap(), two_qu);
    }
}
