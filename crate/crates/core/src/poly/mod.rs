//! Exact dense univariate and sparse bivariate polynomials over the rationals,
//! with perfect-square root extraction. This is the engine behind the symbolic
//! identity suites and the quartic-square machinery.

mod bi;
mod text;
mod uni;

pub use bi::BiPoly;
pub use uni::UniPoly;

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Text that does not match the polynomial term grammar.
    Parse(String),
    /// A variable outside the expected set appeared while parsing.
    UnknownVariable(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::Parse(s) => write!(f, "invalid polynomial text: {s}"),
            PolyError::UnknownVariable(v) => write!(f, "unknown variable {v:?}"),
        }
    }
}

impl std::error::Error for PolyError {}
