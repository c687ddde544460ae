//! Jet polynomials: differential polynomials with `XYPoly` coefficients.
//!
//! Two coordinate systems are used.
//!
//! * The reduced (on-shell) jet: coordinates `w[k]`, `k ∈ ℤ`, for every field
//!   `w` satisfying `w_xy = w`, with `w[k] = ∂_x^k w` and `w[-k] = ∂_y^k w`.
//! * The free (off-shell) jet: coordinates `u(a,b) = ∂_x^a ∂_y^b u` of the
//!   single field `u`, no relation imposed.
//!
//! Both are instances of [`JetPoly`], generic over the coordinate type.

mod free;
mod laurent;
mod poly;
mod reduced;

pub use free::{apply_operator_free, euler_operator, reduce, FreeJetPoly, FreeVar};
pub use laurent::LaurentEval;
pub use poly::{JetPoly, JetVariable, Monomial};
pub use reduced::{
    apply_operator_reduced, eval_exp_family, lift_to_free, lift_to_operator, reduced_j,
    reduced_total_derivative, FieldId, JetVar, ReducedJetPoly,
};
