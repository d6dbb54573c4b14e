//! Command-line front end for `levelpers`: reads a map or filtration from
//! JSON, runs the level and sub-level pipelines, and reports bars, relevant
//! numbers and invariant checks as JSON, CSV or SVG.

pub mod check;
pub mod cli;
pub mod corpus;
pub mod input;
pub mod report;
pub mod svg;
pub mod table;

pub use check::{run_checks, CHECK_NAMES};
pub use cli::run;
pub use input::{parse_input, ParsedInput};
pub use report::{analyze, Analysis, CheckRecord, EndFlag, ResultDocument, Sections};
pub use svg::render_svg;

/// A problem with an input document.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}
