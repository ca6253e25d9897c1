//! Exact-arithmetic construction, verification and search of pairs of
//! Brahmagupta quadrilaterals — cyclic quadrilaterals with integer sides,
//! diagonals and area — sharing both perimeter and area.
//!
//! Two parametric families are implemented end to end (closed forms plus the
//! full derivation pipelines, cross-checked against each other), together
//! with the quartic-square method that powers them, symbolic identity suites
//! for the reference formulas, and a brute-force search oracle for desk-scale
//! ground truth. Everything is exact: the only scalars are arbitrary
//! precision integers and rationals.

// error values carry the exact rationals that violated a contract; they are
// cold paths, so the size is acceptable
#![allow(clippy::result_large_err)]

pub mod arith;
pub mod fermat;
pub mod identities;
pub mod isosceles;
pub mod poly;
pub mod quad;
pub mod record;
pub mod scalene;
pub mod search;

pub use arith::{Integer, Rational};
pub use quad::{QuadMetrics, QuadSides};
pub use record::{PairRecord, Provenance};
