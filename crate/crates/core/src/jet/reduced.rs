use alloc::collections::BTreeSet;
use core::fmt;

use super::free::{FreeJetPoly, FreeVar};
use super::laurent::LaurentEval;
use super::poly::{JetPoly, JetVariable};
use crate::arith::{Var, XYPoly};
use crate::error::Error;
use crate::opalg::{Deriv, TDOperator};

/// A dependent field on the reduced jet. Every field is a solution of
/// `w_xy = w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldId(char);

impl FieldId {
    /// The unknown `u` of the equation.
    pub const U: FieldId = FieldId('u');
    /// A fixed, symbolic solution `f`.
    pub const F: FieldId = FieldId('f');

    /// Any ASCII lowercase letter other than the independent variables.
    pub fn new(name: char) -> Option<Self> {
        (name.is_ascii_lowercase() && name != 'x' && name != 'y').then_some(FieldId(name))
    }

    pub fn name(self) -> char {
        self.0
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Reduced coordinate `w[k]`: `∂_x^k w` for `k ≥ 0`, `∂_y^{-k} w` for `k < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetVar {
    pub field: FieldId,
    pub index: i64,
}

impl JetVar {
    pub const fn new(field: FieldId, index: i64) -> Self {
        JetVar { field, index }
    }

    pub const fn u(index: i64) -> Self {
        JetVar::new(FieldId::U, index)
    }
}

impl fmt::Display for JetVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.index)
    }
}

impl JetVariable for JetVar {
    fn shifted(&self, dir: Var) -> Self {
        match dir {
            Var::X => JetVar::new(self.field, self.index + 1),
            Var::Y => JetVar::new(self.field, self.index - 1),
        }
    }
}

/// Differential polynomial on the reduced jet.
pub type ReducedJetPoly = JetPoly<JetVar>;

impl ReducedJetPoly {
    /// `u[k]`.
    pub fn u(k: i64) -> Self {
        Self::var(JetVar::u(k))
    }

    /// `w[k]` for an arbitrary field.
    pub fn field_var(field: FieldId, k: i64) -> Self {
        Self::var(JetVar::new(field, k))
    }

    /// `max |k|` over the coordinates present; `None` stands for `−∞`.
    pub fn order(&self) -> Option<u32> {
        self.variables()
            .iter()
            .map(|v| v.index.unsigned_abs() as u32)
            .max()
    }

    pub fn fields(&self) -> BTreeSet<FieldId> {
        self.variables().iter().map(|v| v.field).collect()
    }

    /// True when no field other than `u` occurs.
    pub fn only_u(&self) -> bool {
        self.fields().iter().all(|f| *f == FieldId::U)
    }
}

/// `𝒟_x` or `𝒟_y` on the reduced jet: `w[k] ↦ w[k ± 1]` plus the coefficient
/// derivative.
pub fn reduced_total_derivative(p: &ReducedJetPoly, dir: Var) -> ReducedJetPoly {
    p.total_derivative(dir)
}

/// `𝒥 = x 𝒟_x − y 𝒟_y`.
pub fn reduced_j(p: &ReducedJetPoly) -> ReducedJetPoly {
    &p.total_derivative(Var::X).scale_by(&XYPoly::x())
        - &p.total_derivative(Var::Y).scale_by(&XYPoly::y())
}

/// `a` applied to the field `w` and reduced on shell:
/// `Σ a_pq · w[p − q]`.
pub fn apply_operator_reduced(a: &TDOperator, w: FieldId) -> ReducedJetPoly {
    let mut out = ReducedJetPoly::zero();
    for (d, c) in a.terms() {
        let k = i64::from(d.p) - i64::from(d.q);
        out = &out + &ReducedJetPoly::field_var(w, k).scale_by(c);
    }
    out
}

/// Lifts a linear characteristic in `u` to the operator with pure powers:
/// `u[k] ↦ D_x^k` for `k ≥ 0` and `u[-k] ↦ D_y^k`.
pub fn lift_to_operator(eta: &ReducedJetPoly) -> Result<TDOperator, Error> {
    if !eta.only_u() {
        return Err(Error::MixedFields);
    }
    let coeffs = eta.linear_coefficients().ok_or(Error::NotLinear)?;
    let mut op = TDOperator::zero();
    for (v, a) in coeffs {
        op.add_term(pure_deriv(v.index), a);
    }
    Ok(op)
}

fn pure_deriv(k: i64) -> Deriv {
    if k >= 0 {
        Deriv::new(k as u32, 0)
    } else {
        Deriv::new(0, k.unsigned_abs() as u32)
    }
}

/// Lifts a reduced `u`-polynomial to the free jet by identifying `u[k]` with
/// the pure derivative `u(k,0)` (`k ≥ 0`) or `u(0,-k)` (`k < 0`).
pub fn lift_to_free(p: &ReducedJetPoly) -> Result<FreeJetPoly, Error> {
    if !p.only_u() {
        return Err(Error::MixedFields);
    }
    Ok(p.map_vars(|v| {
        let d = pure_deriv(v.index);
        FreeVar::new(d.p, d.q)
    }))
}

/// Evaluates on the exponential solutions `w = e^{λx + λ^{-1}y}`: every
/// `w[k]` becomes `λ^k` times the exponential, and the exponential factors are
/// dropped.
pub fn eval_exp_family(p: &ReducedJetPoly) -> Result<LaurentEval, Error> {
    if p.fields().len() > 1 {
        return Err(Error::MixedFields);
    }
    let mut out = LaurentEval::zero();
    for (m, a) in p.terms() {
        let lambda: i64 = m.powers().map(|(v, e)| v.index * i64::from(*e)).sum();
        out.add_term(lambda, a.clone());
    }
    Ok(out)
}
