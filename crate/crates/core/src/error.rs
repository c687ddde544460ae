use alloc::string::String;
use core::fmt;

/// Precondition failures of the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `Q̄_{kl}` is only defined for `l ≥ 1`.
    QbarZeroShift { k: u32 },
    /// The `C¹` family starts at `l' = 1`.
    C1ZeroShift { kp: u32 },
    /// The operator is not skew-adjoint; carries the self-adjoint residue `(A + A†)/2`.
    NotSkewAdjoint { residue: String },
    /// A single-field operation received a polynomial in several fields.
    MixedFields,
    /// A linear-in-jets operation received a nonlinear polynomial.
    NotLinear,
    /// The order argument is outside the supported range.
    OrderOutOfRange { order: u32, min: u32 },
    /// The coefficient degree bound cannot represent symmetries of this order.
    DegreeBelowOrder { degree: u32, order: u32 },
    /// The declared field must differ from `u`.
    FieldIsU,
    /// A constructed current does not have the order its family predicts.
    OrderMismatch {
        family: &'static str,
        expected: u32,
        found: Option<u32>,
    },
    /// A constructed current failed its own conservation check.
    NotConserved {
        family: &'static str,
        divergence: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::QbarZeroShift { k } => {
                write!(
                    f,
                    "Qbar({k}, 0) is not a basis operator: l must be at least 1"
                )
            }
            Error::C1ZeroShift { kp } => {
                write!(f, "C1({kp}, 0) is not in the family: l' must be at least 1")
            }
            Error::NotSkewAdjoint { residue } => {
                write!(
                    f,
                    "operator is not skew-adjoint; self-adjoint residue (A + A^†)/2 = {residue}"
                )
            }
            Error::MixedFields => f.write_str("jet polynomial mixes several fields"),
            Error::NotLinear => f.write_str("jet polynomial is not linear in the jet variables"),
            Error::OrderOutOfRange { order, min } => {
                write!(f, "order {order} out of range: must be at least {min}")
            }
            Error::DegreeBelowOrder { degree, order } => {
                write!(f, "degree bound {degree} is below the order {order}")
            }
            Error::FieldIsU => f.write_str("the solution field must be distinct from u"),
            Error::OrderMismatch {
                family,
                expected,
                found,
            } => match found {
                Some(o) => write!(f, "{family}: expected order {expected}, found {o}"),
                None => write!(f, "{family}: expected order {expected}, found -inf"),
            },
            Error::NotConserved { family, divergence } => {
                write!(f, "{family}: nonzero on-shell divergence {divergence}")
            }
        }
    }
}
impl core::error::Error for Error {}
