//! Exact calculus for finitely-generated convex sets of probability
//! distributions: set-level combination, marginalization and conditioning,
//! five independence tests with certificate-carrying verdicts, and the
//! marginal-problem fusion operator. All arithmetic is rational and exact;
//! no decision ever passes through floating point.

pub mod credal;
pub mod error;
pub mod format;
pub mod func;
pub mod funcset;
pub mod fusion;
pub mod geometry;
pub mod harness;
pub mod independence;
pub mod rational;
pub mod space;

pub use error::{CredalError, Result};
pub use func::Func;
pub use rational::{parse_rational, rat, render_rational, Rational};
pub use space::Space;
