//! Library side of the verification CLI: check records, the sporadic
//! dataset, the verification suites, and report serialization. The binary
//! in `main.rs` is a thin clap wrapper over these.

pub mod checks;
pub mod report;
pub mod runners;
pub mod sporadic;
