//! Exact differential algebra for the light-cone Klein–Gordon equation
//! `u_xy = u`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over
//! arbitrary-precision rationals, so every identity checked here is checked
//! exactly:
//!
//! * [`arith`]: rationals, bivariate polynomials in `x`, `y`, exact nullspaces.
//! * [`opalg`]: linear operators in total derivatives `Σ a_pq(x,y) D_x^p D_y^q`.
//! * [`jet`]: reduced (on-shell) and free (off-shell) jet polynomials.
//! * [`symmetry`]: determining equations, symmetry brackets, independence.
//! * [`noether`]: variational symmetries and conserved currents.
//! * [`checks`]: the verification suite composed from the modules above.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod checks;
pub mod error;
pub mod jet;
pub mod noether;
pub mod opalg;
pub mod symmetry;

pub use arith::{int, rat, Rational, RationalMatrix, Var, XYPoly};
pub use error::Error;
pub use jet::{FieldId, FreeJetPoly, FreeVar, JetVar, LaurentEval, ReducedJetPoly};
pub use noether::{ConservedCurrent, CurrentFamily};
pub use opalg::{BasisKind, Generator, Side, TDOperator};
pub use symmetry::SymmetryBasis;
