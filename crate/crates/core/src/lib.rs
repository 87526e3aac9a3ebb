//! Knot diagram invariants and concordance bounds.
//!
//! Diagrams are planar-diagram codes; from them the crate computes the
//! Kauffman bracket and Jones polynomial, checkerboard data of alternating
//! diagrams, builds twisted Whitehead doubles and full-twist insertions, and
//! brackets the concordance invariant `t_nu` in an integer interval.

pub mod bounds;
pub mod bracket;
pub mod builtins;
pub mod checkerboard;
pub mod diagram;
pub mod error;
pub mod moves;
pub mod pipeline;
pub mod poly;

mod par;
mod unionfind;

pub use error::{Error, ErrorKind};
