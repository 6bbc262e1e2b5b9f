//! Library layer behind the `drd` binary: input handling, exact ranking,
//! and the named verification suites. Kept as a library so integration
//! tests can drive everything in-process.

pub mod corpus;
pub mod io;
pub mod rank;
pub mod suites;

pub use rank::{match_family, rank_extremal, RankedEntry};
pub use suites::{run_suite, Check, VerificationOutcome, SUITE_NAMES};
