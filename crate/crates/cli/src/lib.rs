//! Verification harness for `shuffle-core`: theorem checks with
//! serializable reports, exhaustive sweeps over small instances, and
//! plain-text tables for decompositions and insertion data.

pub mod render;
pub mod report;
pub mod sweep;
pub mod verify;

pub use report::{all_passed, Quantity, Theorem, Verdict, VerificationReport};
pub use sweep::{run_suite, SweepOutcome, SUITE_CAP};
pub use verify::{verify_garsia_gessel, verify_insertion_lemma, verify_macmahon, verify_stanley, MACMAHON_CAP};
