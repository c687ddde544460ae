//! Variational symmetries and conserved currents.
//!
//! A current `(T, X)` is conserved when `𝒟_x T + 𝒟_y X = 0` on the reduced
//! jet. Currents built from operator words are first assembled on the free
//! jet and then reduced, so both views are kept.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{rat, Rational, Var, XYPoly};
use crate::error::Error;
use crate::jet::{
    apply_operator_free, euler_operator, lift_to_free, reduce, FieldId, FreeJetPoly, ReducedJetPoly,
};
use crate::opalg::{BasisKind, TDOperator};
use crate::symmetry::prolonged_action;

/// Which construction produced a current.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurrentFamily {
    /// `(f u_y, −f_x u)` for a solution `f`.
    C0,
    /// `(−f_y u, f u_x)`.
    C0Bar,
    /// `(−u D_y Q u, u_x Q u)` for a skew-adjoint `Q`.
    Ctilde,
    C1,
    C1Bar,
    C2,
    C2Bar,
    /// Obtained by a symmetry acting on another current.
    Gen,
}

impl CurrentFamily {
    pub fn name(self) -> &'static str {
        match self {
            CurrentFamily::C0 => "C0",
            CurrentFamily::C0Bar => "C0bar",
            CurrentFamily::Ctilde => "Ctilde",
            CurrentFamily::C1 => "C1",
            CurrentFamily::C1Bar => "C1bar",
            CurrentFamily::C2 => "C2",
            CurrentFamily::C2Bar => "C2bar",
            CurrentFamily::Gen => "GEN",
        }
    }

    /// The four minimal-order families, in enumeration order.
    pub const MINIMAL: [CurrentFamily; 4] = [
        CurrentFamily::C1,
        CurrentFamily::C1Bar,
        CurrentFamily::C2,
        CurrentFamily::C2Bar,
    ];
}

impl fmt::Display for CurrentFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A pair `(T, X)` with zero on-shell divergence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConservedCurrent {
    pub family: CurrentFamily,
    pub t: ReducedJetPoly,
    pub x: ReducedJetPoly,
    /// Off-shell components, present when the current was built on the free jet.
    pub free: Option<(FreeJetPoly, FreeJetPoly)>,
    pub declared_order: u32,
}

impl ConservedCurrent {
    /// `𝒟_x T + 𝒟_y X` on the reduced jet.
    pub fn divergence(&self) -> ReducedJetPoly {
        on_shell_divergence(&self.t, &self.x)
    }

    pub fn is_conserved(&self) -> bool {
        self.divergence().is_zero()
    }

    /// Highest jet order over both components.
    pub fn order(&self) -> Option<u32> {
        self.t.order().max(self.x.order())
    }

    /// Characteristic of the conservation law, reduced on shell; requires the
    /// off-shell components.
    pub fn characteristic(&self) -> Option<Result<ReducedJetPoly, Error>> {
        self.free
            .as_ref()
            .map(|(t, x)| extract_characteristic(self.family.name(), t, x))
    }
}

pub fn on_shell_divergence(t: &ReducedJetPoly, x: &ReducedJetPoly) -> ReducedJetPoly {
    &t.total_derivative(Var::X) + &x.total_derivative(Var::Y)
}

/// `Q^† L + L^† Q = 0` with `L = D_x D_y − 1`.
pub fn is_variational_linear(a: &TDOperator) -> bool {
    let l = TDOperator::klein_gordon();
    (&a.adjoint().compose(&l) + &l.adjoint().compose(a)).is_zero()
}

/// `η` lifted to pure derivatives is a conservation-law characteristic:
/// `E_u(η (u_xy − u)) = 0`.
pub fn is_cl_characteristic(eta: &ReducedJetPoly) -> Result<bool, Error> {
    Ok(is_cl_characteristic_free(&lift_to_free(eta)?))
}

/// Off-shell version of [`is_cl_characteristic`].
pub fn is_cl_characteristic_free(eta: &FreeJetPoly) -> bool {
    euler_operator(&(eta * &FreeJetPoly::equation())).is_zero()
}

/// Characteristic of a current given off shell.
///
/// Every `u(a,b)` with `m = min(a,b) > 0` is rewritten as
/// `u(a−m,b−m) + Σ_{i=1..m} Δ(a−i,b−i)` where `Δ(c,d) = D_x^c D_y^d (u_xy − u)`.
/// The divergence then reads `Σ_α P_α Δ_α` plus terms of higher degree in the
/// `Δ`'s, and the characteristic is `Σ_α (−D)^α P_α`, evaluated on shell.
pub fn extract_characteristic(
    family: &'static str,
    t: &FreeJetPoly,
    x: &FreeJetPoly,
) -> Result<ReducedJetPoly, Error> {
    let div = &t.total_derivative(Var::X) + &x.total_derivative(Var::Y);
    let residual = reduce(&div);
    if !residual.is_zero() {
        return Err(Error::NotConserved {
            family,
            divergence: residual.to_string(),
        });
    }
    let mut linear: BTreeMap<(u32, u32), ReducedJetPoly> = BTreeMap::new();
    for (m, c) in div.terms() {
        for (v, _) in m.powers() {
            let depth = v.a.min(v.b);
            if depth == 0 {
                continue;
            }
            let rest = reduce(&FreeJetPoly::term(c.clone(), m.clone()).partial(v));
            for i in 1..=depth {
                let slot = linear.entry((v.a - i, v.b - i)).or_default();
                *slot = &*slot + &rest;
            }
        }
    }
    let mut eta = ReducedJetPoly::zero();
    for ((a, b), p) in linear {
        let term = p.total_derivative_n(a, b);
        eta = if (a + b) % 2 == 0 {
            &eta + &term
        } else {
            &eta - &term
        };
    }
    Ok(eta)
}

/// `C⁰_f = (f u_y, −f_x u)` in reduced two-field form.
pub fn current_c0(f: FieldId) -> Result<ConservedCurrent, Error> {
    if f == FieldId::U {
        return Err(Error::FieldIsU);
    }
    let w = |k| ReducedJetPoly::field_var(f, k);
    let u = ReducedJetPoly::u;
    finish(
        CurrentFamily::C0,
        &w(0) * &u(-1),
        -&(&w(1) * &u(0)),
        None,
        Some(1),
    )
}

/// `C̄⁰_f = (−f_y u, f u_x)` in reduced two-field form.
pub fn current_c0_bar(f: FieldId) -> Result<ConservedCurrent, Error> {
    if f == FieldId::U {
        return Err(Error::FieldIsU);
    }
    let w = |k| ReducedJetPoly::field_var(f, k);
    let u = ReducedJetPoly::u;
    finish(
        CurrentFamily::C0Bar,
        -&(&w(-1) * &u(0)),
        &w(0) * &u(1),
        None,
        Some(1),
    )
}

/// `C̃_Q = (−u D_y Q u, u_x Q u)` for skew-adjoint `Q`.
pub fn current_ctilde(a: &TDOperator) -> Result<ConservedCurrent, Error> {
    let (_, residue) = a.skew_self_split();
    if !residue.is_zero() {
        return Err(Error::NotSkewAdjoint {
            residue: residue.to_string(),
        });
    }
    let qu = apply_operator_free(a);
    let t = -&(&FreeJetPoly::u(0, 0) * &qu.total_derivative(Var::Y));
    let x = &FreeJetPoly::u(1, 0) * &qu;
    finish(
        CurrentFamily::Ctilde,
        reduce(&t),
        reduce(&x),
        Some((t, x)),
        None,
    )
}

/// Operator word whose square builds the minimal current, and the basis
/// operator `Q_kl` / `Q̄_kl` of its characteristic.
fn minimal_word(family: CurrentFamily, kp: u32, lp: u32) -> Result<TDOperator, Error> {
    let j = TDOperator::j();
    let half = TDOperator::constant(rat(1, 2));
    Ok(match family {
        CurrentFamily::C1 => {
            if lp == 0 {
                return Err(Error::C1ZeroShift { kp });
            }
            j.pow(kp).compose(&TDOperator::dx().pow(lp))
        }
        CurrentFamily::C1Bar => j.pow(kp).compose(&TDOperator::dy().pow(lp)),
        CurrentFamily::C2 => (&j - &half).pow(kp).compose(&TDOperator::dx().pow(lp)),
        CurrentFamily::C2Bar => (&j + &half).pow(kp).compose(&TDOperator::dy().pow(lp)),
        other => unreachable!("{other} is not a minimal family"),
    })
}

/// Basis operator whose characteristic the minimal current carries:
/// `C¹ ↔ Q_{2k'+1,2l'}`, `C² ↔ Q_{2k',2l'+1}`, `C̄¹ ↔ Q̄_{2k'+1,2l'}`
/// (`J^{2k'+1}` when `l' = 0`), `C̄² ↔ Q̄_{2k',2l'+1}`.
pub fn minimal_characteristic_operator(
    family: CurrentFamily,
    kp: u32,
    lp: u32,
) -> Result<TDOperator, Error> {
    match family {
        CurrentFamily::C1 if lp == 0 => Err(Error::C1ZeroShift { kp }),
        CurrentFamily::C1 => TDOperator::basis(BasisKind::Q, 2 * kp + 1, 2 * lp),
        CurrentFamily::C1Bar if lp == 0 => TDOperator::basis(BasisKind::Q, 2 * kp + 1, 0),
        CurrentFamily::C1Bar => TDOperator::basis(BasisKind::Qbar, 2 * kp + 1, 2 * lp),
        CurrentFamily::C2 => TDOperator::basis(BasisKind::Q, 2 * kp, 2 * lp + 1),
        CurrentFamily::C2Bar => TDOperator::basis(BasisKind::Qbar, 2 * kp, 2 * lp + 1),
        other => unreachable!("{other} is not a minimal family"),
    }
}

/// Minimal-order currents `C¹_{k'l'}`, `C̄¹_{k'l'}`, `C²_{k'l'}`, `C̄²_{k'l'}`,
/// each of order `k' + l' + 1`.
pub fn current_minimal(family: CurrentFamily, kp: u32, lp: u32) -> Result<ConservedCurrent, Error> {
    let w = apply_operator_free(&minimal_word(family, kp, lp)?);
    let (x, y) = (XYPoly::x(), XYPoly::y());
    let sq = |p: &FreeJetPoly| p.pow(2);
    let w2 = sq(&w);
    let (t, xc) = match family {
        CurrentFamily::C1 => (
            -&(&sq(&w.total_derivative(Var::Y)).scale_by(&y) + &w2.scale_by(&x)),
            &sq(&w.total_derivative(Var::X)).scale_by(&x) + &w2.scale_by(&y),
        ),
        CurrentFamily::C1Bar => (
            &sq(&w.total_derivative(Var::Y)).scale_by(&y) + &w2.scale_by(&x),
            -&(&sq(&w.total_derivative(Var::X)).scale_by(&x) + &w2.scale_by(&y)),
        ),
        CurrentFamily::C2 => (-&w2, sq(&w.total_derivative(Var::X))),
        CurrentFamily::C2Bar => (sq(&w.total_derivative(Var::Y)), -&w2),
        _ => unreachable!(),
    };
    finish(
        family,
        reduce(&t),
        reduce(&xc),
        Some((t, xc)),
        Some(kp + lp + 1),
    )
}

fn finish(
    family: CurrentFamily,
    t: ReducedJetPoly,
    x: ReducedJetPoly,
    free: Option<(FreeJetPoly, FreeJetPoly)>,
    expected_order: Option<u32>,
) -> Result<ConservedCurrent, Error> {
    let div = on_shell_divergence(&t, &x);
    if !div.is_zero() {
        return Err(Error::NotConserved {
            family: family.name(),
            divergence: div.to_string(),
        });
    }
    let found = t.order().max(x.order());
    let declared_order = match expected_order {
        Some(expected) if found != Some(expected) => {
            return Err(Error::OrderMismatch {
                family: family.name(),
                expected,
                found,
            });
        }
        Some(expected) => expected,
        None => found.unwrap_or(0),
    };
    Ok(ConservedCurrent {
        family,
        t,
        x,
        free,
        declared_order,
    })
}

/// Result of acting with a symmetry on a current.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActedCurrent {
    pub t: ReducedJetPoly,
    pub x: ReducedJetPoly,
    pub divergence: ReducedJetPoly,
}

impl ActedCurrent {
    pub fn is_conserved(&self) -> bool {
        self.divergence.is_zero()
    }

    pub fn into_current(self) -> Result<ConservedCurrent, Error> {
        finish(CurrentFamily::Gen, self.t, self.x, None, None)
    }
}

/// Componentwise prolonged action of `η ∂_u` on a current.
pub fn symmetry_action_on_current(eta: &ReducedJetPoly, c: &ConservedCurrent) -> ActedCurrent {
    let t = prolonged_action(eta, &c.t);
    let x = prolonged_action(eta, &c.x);
    let divergence = on_shell_divergence(&t, &x);
    ActedCurrent { t, x, divergence }
}

/// The generating current `(−u², u_x²)`.
pub fn generating_current() -> ConservedCurrent {
    current_minimal(CurrentFamily::C2, 0, 0).expect("C2(0,0) is conserved")
}

/// Every minimal current of order `n ≥ 2`: members with `k' + l' = n − 1`,
/// ordered by `(family, k', l')`.
pub fn order_n_currents(n: u32) -> Result<Vec<(CurrentFamily, u32, u32, ConservedCurrent)>, Error> {
    if n < 2 {
        return Err(Error::OrderOutOfRange { order: n, min: 2 });
    }
    let mut out = Vec::new();
    for family in CurrentFamily::MINIMAL {
        for kp in 0..n {
            let lp = n - 1 - kp;
            if family == CurrentFamily::C1 && lp == 0 {
                continue;
            }
            out.push((family, kp, lp, current_minimal(family, kp, lp)?));
        }
    }
    Ok(out)
}

/// Number of independent order-`n` conservation laws, `4n − 1` for `n ≥ 2`.
pub fn count_order_n_currents(n: u32) -> Result<usize, Error> {
    Ok(order_n_currents(n)?.len())
}

/// Scalar `c` with `a = c · b`, if one exists and `b ≠ 0`.
pub fn proportionality(a: &ReducedJetPoly, b: &ReducedJetPoly) -> Option<Rational> {
    let (m, bc) = b.terms().next()?;
    let (e, bv) = bc.terms().next()?;
    let c = a.coeff(m).coeff(e.x, e.y) / bv;
    (b.scale(&c) == *a).then_some(c)
}

/// Skew-adjoint basis operators `(kind, k, l)` with `k + l ≤ max`.
pub fn skew_basis(max: u32) -> Vec<(BasisKind, u32, u32, TDOperator)> {
    let mut out = Vec::new();
    for total in (1..=max).step_by(2) {
        for k in 0..=total {
            let l = total - k;
            out.push((
                BasisKind::Q,
                k,
                l,
                TDOperator::basis(BasisKind::Q, k, l).expect("Q"),
            ));
            if l >= 1 {
                out.push((
                    BasisKind::Qbar,
                    k,
                    l,
                    TDOperator::basis(BasisKind::Qbar, k, l).expect("Qbar"),
                ));
            }
        }
    }
    out
}
