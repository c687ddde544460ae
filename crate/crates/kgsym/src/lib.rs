//! Parser, reports and command dispatch for the `kgsym` binary.

pub mod cmd;
pub mod parse;
pub mod report;
pub mod roundtrip;
