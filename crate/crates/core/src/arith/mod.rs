//! Exact scalars, bivariate polynomials and rational linear algebra.

mod matrix;
mod poly;

pub use matrix::RationalMatrix;
pub(crate) use poly::write_unsigned_term as poly_write_unsigned_term;
pub use poly::{Exponent, Var, XYPoly};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The rational `n/d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
