//! Seeded property suites, an expression evaluator and report formatting
//! for `bicyclic-core`. The `bicyclic` binary is a thin front end.

pub mod error;
pub mod expr;
pub mod gen;
pub mod oracle;
pub mod report;
pub mod suite;

pub use error::HarnessError;
pub use expr::{parse_elem, parse_expr, parse_scalar, parse_tops, Value};
pub use gen::{gen_elem, Gen, GenConfig, ScalarMode};
pub use report::{Failure, SuiteReport};
pub use suite::{run_suite, run_suite_with, SuiteHooks, SUITES};
