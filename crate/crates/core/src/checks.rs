//! Self-contained verification of the main structural facts, one function
//! per claim. Each check is exact; `detail` explains the first mismatch.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{int, rat, Var, XYPoly};
use crate::error::Error;
use crate::jet::{
    apply_operator_free, apply_operator_reduced, lift_to_operator, reduced_j, FieldId,
    ReducedJetPoly,
};
use crate::noether::{
    count_order_n_currents, current_c0, current_c0_bar, current_ctilde, current_minimal,
    generating_current, is_cl_characteristic, is_cl_characteristic_free, is_variational_linear,
    minimal_characteristic_operator, order_n_currents, proportionality, skew_basis,
    symmetry_action_on_current, CurrentFamily,
};
use crate::opalg::{BasisKind, Side, TDOperator};
use crate::symmetry::{
    essential_characteristics, graded_dimension, independence_rank, monomial_characteristics,
    reduced_bracket,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

fn result(id: u32, name: &'static str, outcome: Outcome) -> CheckResult {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        id,
        name,
        passed,
        detail,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    format!("{e}")
}

fn kind_name(kind: BasisKind) -> &'static str {
    match kind {
        BasisKind::Q => "Q",
        BasisKind::Qbar => "Qbar",
    }
}

/// `dim = 2n + 1` per order and `(n + 1)²` cumulatively, stable under a
/// larger degree bound.
pub fn dimensions(max_order: u32) -> CheckResult {
    let run = || -> Outcome {
        let mut total = 0;
        for n in 0..=max_order {
            let d = graded_dimension(n, n + 2).map_err(err)?;
            let d1 = graded_dimension(n, n + 3).map_err(err)?;
            ensure(d == d1, || {
                format!("order {n}: {d} at degree {} but {d1} at {}", n + 2, n + 3)
            })?;
            ensure(d == 2 * n as usize + 1, || {
                format!("order {n}: dimension {d}")
            })?;
            total += d;
            let want = ((n + 1) * (n + 1)) as usize;
            ensure(total == want, || {
                format!("up to order {n}: {total}, expected {want}")
            })?;
        }
        Ok(format!("orders 0..={max_order}"))
    };
    result(1, "dimension tables", run())
}

/// `adjoint(Q_kl) = (−1)^{k+l} Q_kl`, both families, `k, l ≤ 4`.
pub fn adjoint_parity() -> CheckResult {
    let run = || -> Outcome {
        let mut n = 0;
        for kind in [BasisKind::Q, BasisKind::Qbar] {
            for k in 0..=4 {
                for l in 0..=4 {
                    if kind == BasisKind::Qbar && l == 0 {
                        continue;
                    }
                    let q = TDOperator::basis(kind, k, l).map_err(err)?;
                    let want = if (k + l) % 2 == 0 { q.clone() } else { -&q };
                    ensure(q.adjoint() == want, || {
                        format!("{}({k},{l})", kind_name(kind))
                    })?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} operators"))
    };
    result(2, "adjoint parity", run())
}

/// `[L, J^k D^l] = 0` for `k + l ≤ 6`, both sides.
pub fn centrality() -> CheckResult {
    let run = || -> Outcome {
        let l_op = TDOperator::klein_gordon();
        let mut n = 0;
        for side in [Side::X, Side::Y] {
            for total in 0..=6 {
                for k in 0..=total {
                    let m = TDOperator::monomial(side, k, total - k);
                    let c = l_op.commutator(&m);
                    ensure(c.is_zero(), || format!("{side:?} ({k},{}): {c}", total - k))?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} operators"))
    };
    result(3, "centrality of L", run())
}

/// Bracket table of the essential characteristics.
pub fn structure_constants() -> CheckResult {
    let run = || -> Outcome {
        let e = essential_characteristics();
        let zero = ReducedJetPoly::zero();
        let table = [
            (1, 2, zero.clone()),
            (1, 3, e[1].clone()),
            (2, 3, -&e[2]),
            (0, 1, zero.clone()),
            (0, 2, zero.clone()),
            (0, 3, zero),
        ];
        for (i, j, want) in table {
            let got = reduced_bracket(&e[i], &e[j]);
            ensure(got == want, || {
                format!("[e{i},e{j}] = {got}, expected {want}")
            })?;
        }
        Ok(String::from("6 brackets"))
    };
    result(4, "structure constants", run())
}

/// Variational exactly when `k + l` is odd, `k + l ≤ 7`.
pub fn variational_parity() -> CheckResult {
    let run = || -> Outcome {
        let mut n = 0;
        for kind in [BasisKind::Q, BasisKind::Qbar] {
            for total in 0..=7 {
                for k in 0..=total {
                    let l = total - k;
                    if kind == BasisKind::Qbar && l == 0 {
                        continue;
                    }
                    let q = TDOperator::basis(kind, k, l).map_err(err)?;
                    let v = is_variational_linear(&q);
                    ensure(v == (total % 2 == 1), || {
                        format!("{}({k},{l}) variational = {v}", kind_name(kind))
                    })?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} operators"))
    };
    result(5, "variational parity", run())
}

/// J³ against the lift of its reduced counterpart. The lift differs from J³
/// by `3xy·J∘L`; the claim under test is that the lift is not variational.
pub fn reduced_counterexample() -> CheckResult {
    let run = || -> Outcome {
        let j3 = TDOperator::basis(BasisKind::Q, 3, 0).map_err(err)?;
        ensure(j3 == TDOperator::j().pow(3), || format!("Q(3,0) = {j3}"))?;
        ensure(is_variational_linear(&j3), || {
            String::from("J^3 is not variational")
        })?;
        let reduced = reduced_j(&reduced_j(&reduced_j(&ReducedJetPoly::u(0))));
        ensure(reduced == apply_operator_reduced(&j3, FieldId::U), || {
            String::from("reduced J^3 u disagrees with the normal form")
        })?;
        let lifted = lift_to_operator(&reduced).map_err(err)?;
        let diff = &lifted - &j3;
        let a = TDOperator::mul(XYPoly::monomial(int(3), 1, 1)).compose(&TDOperator::j());
        let want = a.compose(&TDOperator::klein_gordon());
        ensure(diff == want, || format!("difference {diff}"))?;
        // Second route: Euler operator on η·(u_xy − u) for the off-shell lift.
        let by_euler = is_cl_characteristic_free(&apply_operator_free(&lifted));
        ensure(!is_variational_linear(&lifted) && !by_euler, || {
            format!(
                "lifted operator is variational (operator test: {}, Euler test: {by_euler}); \
                 the difference 3xy*J*L has skew-adjoint factor 3xy*J (skew: {})",
                is_variational_linear(&lifted),
                a.is_skew_adjoint()
            )
        })?;
        Ok(String::from(
            "lift differs by 3xy*J*L and is not variational",
        ))
    };
    result(6, "reduced counterpart of J^3", run())
}

/// Every constructed current is conserved, has the stated order and a
/// conservation-law characteristic.
pub fn conservation() -> CheckResult {
    let run = || -> Outcome {
        let mut n = 0;
        for c in [current_c0(FieldId::F), current_c0_bar(FieldId::F)] {
            let c = c.map_err(err)?;
            ensure(c.is_conserved() && c.order() == Some(1), || {
                format!("{} order {:?}", c.family, c.order())
            })?;
            n += 1;
        }
        for (kind, k, l, q) in skew_basis(5) {
            let tag = || format!("Ctilde {}({k},{l})", kind_name(kind));
            let c = current_ctilde(&q).map_err(|e| format!("{}: {e}", tag()))?;
            let qu = apply_operator_reduced(&q, FieldId::U);
            // Minimal order of the law is (k + l + 1)/2; C̃ exceeds it once k + l ≥ 2.
            let min = (k + l).div_ceil(2);
            let order_ok = c
                .order()
                .is_some_and(|o| if k + l >= 2 { o > min } else { o >= min });
            ensure(order_ok, || {
                format!("{}: order {:?}, minimal {min}", tag(), c.order())
            })?;
            let eta = c.characteristic().expect("free form").map_err(err)?;
            ensure(eta == qu.scale(&int(2)), || {
                format!("{}: characteristic {eta}", tag())
            })?;
            ensure(is_cl_characteristic(&eta).map_err(err)?, || {
                format!("{}: not a characteristic", tag())
            })?;
            ensure(is_cl_characteristic_free(&apply_operator_free(&q)), || {
                format!("{}: off-shell characteristic fails", tag())
            })?;
            n += 1;
        }
        for family in CurrentFamily::MINIMAL {
            for total in 0..=3 {
                for kp in 0..=total {
                    let lp = total - kp;
                    if family == CurrentFamily::C1 && lp == 0 {
                        continue;
                    }
                    let tag = || format!("{family}({kp},{lp})");
                    let c =
                        current_minimal(family, kp, lp).map_err(|e| format!("{}: {e}", tag()))?;
                    ensure(c.order() == Some(kp + lp + 1), || {
                        format!("{}: order {:?}", tag(), c.order())
                    })?;
                    let eta = c.characteristic().expect("free form").map_err(err)?;
                    let q = minimal_characteristic_operator(family, kp, lp).map_err(err)?;
                    let qu = apply_operator_reduced(&q, FieldId::U);
                    ensure(
                        proportionality(&eta, &qu).is_some_and(|s| s != int(0)),
                        || format!("{}: characteristic {eta} not a multiple of {qu}", tag()),
                    )?;
                    ensure(is_cl_characteristic(&eta).map_err(err)?, || {
                        format!("{}: not a characteristic", tag())
                    })?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} currents"))
    };
    result(7, "conservation", run())
}

/// Acting on `(−u², u_x²)` with `½𝒟_y Q u` and `½ f_y`.
pub fn generating_law() -> CheckResult {
    let run = || -> Outcome {
        let gen = generating_current();
        let mut n = 0;
        for (kind, k, l, q) in skew_basis(3) {
            let eta = apply_operator_reduced(&q, FieldId::U)
                .total_derivative(Var::Y)
                .scale(&rat(1, 2));
            let acted = symmetry_action_on_current(&eta, &gen);
            let c = current_ctilde(&q).map_err(err)?;
            ensure(acted.t == c.t && acted.x == c.x, || {
                format!(
                    "{}({k},{l}): got ({}, {})",
                    kind_name(kind),
                    acted.t,
                    acted.x
                )
            })?;
            n += 1;
        }
        let f = ReducedJetPoly::field_var(FieldId::F, -1).scale(&rat(1, 2));
        let acted = symmetry_action_on_current(&f, &gen);
        let c = current_c0_bar(FieldId::F).map_err(err)?;
        ensure(acted.t == c.t && acted.x == c.x, || {
            format!("f: got ({}, {})", acted.t, acted.x)
        })?;
        Ok(format!("{} actions", n + 1))
    };
    result(8, "generating conservation law", run())
}

/// `4n − 1` independent minimal currents of order `n`.
pub fn counting(max_order: u32) -> CheckResult {
    let run = || -> Outcome {
        for n in 2..=max_order.max(2) {
            let count = count_order_n_currents(n).map_err(err)?;
            let want = 4 * n as usize - 1;
            ensure(count == want, || format!("order {n}: {count} currents"))?;
            let mut chars = Vec::new();
            for (family, kp, lp, c) in order_n_currents(n).map_err(err)? {
                ensure(c.is_conserved() && c.order() == Some(n), || {
                    format!("{family}({kp},{lp})")
                })?;
                chars.push(c.characteristic().expect("free form").map_err(err)?);
            }
            let rank = independence_rank(&chars).map_err(err)?;
            ensure(rank == want, || {
                format!("order {n}: characteristics have rank {rank}")
            })?;
        }
        Ok(format!("orders 2..={}", max_order.max(2)))
    };
    result(9, "counting", run())
}

/// The `2n + 1` monomial characteristics of order `n` are independent.
pub fn independence(max_order: u32) -> CheckResult {
    let run = || -> Outcome {
        for n in 0..=max_order {
            let rank = independence_rank(&monomial_characteristics(n)).map_err(err)?;
            ensure(rank == 2 * n as usize + 1, || {
                format!("order {n}: rank {rank}")
            })?;
        }
        Ok(format!("orders 0..={max_order}"))
    };
    result(10, "independence", run())
}

/// Checks 1–10; the parser round-trip lives with the parser.
pub fn verify_all(max_order: u32) -> Vec<CheckResult> {
    alloc::vec![
        dimensions(max_order),
        adjoint_parity(),
        centrality(),
        structure_constants(),
        variational_parity(),
        reduced_counterexample(),
        conservation(),
        generating_law(),
        counting(max_order),
        independence(max_order),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        for c in [
            dimensions(2),
            adjoint_parity(),
            structure_constants(),
            counting(3),
            independence(3),
        ] {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
