//! Spec-file front end for the `srep` library: declarations of posets and
//! spaces, queries in a textual syntax, and an optional brute-force
//! cross-check of every answer.

pub mod diag;
pub mod run;
pub mod spec;
pub mod syntax;

pub use diag::{DiagCode, Diagnostic};
pub use run::{result_codes, run_query, run_spec, transcript, Outcome, Report, RunOptions};
pub use spec::{parse_query, parse_spec, Query, QueryKind, SpecFile};
