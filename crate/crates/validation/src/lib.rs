//! Holds the `acceptance` test target, which runs the end-to-end criteria
//! with exact expected values and runtime budgets:
//!
//! ```text
//! cargo test -p p3convex-validation --test acceptance
//! ```
