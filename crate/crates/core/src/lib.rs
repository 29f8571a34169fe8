//! Exact combinatorial enumeration on small graphs.
//!
//! Everything here is built on one observation: the entries of the n-th
//! power of an adjacency matrix count walks of length n. Powering exact
//! big-integer matrices gives walk counts, closed-walk counts (traces),
//! silent-circle configuration counts, Hamiltonian cycle counts in
//! antiprism graphs, and — through inclusion-exclusion over node subsets —
//! Hamiltonian and fixed-length simple path/cycle counts in arbitrary
//! graphs. Generating functions and linear recurrences for the resulting
//! sequences are derived exactly as well.
//!
//! All arithmetic is arbitrary-precision; nothing ever wraps.

pub mod antiprism;
pub mod cli;
mod error;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod series;
pub mod silent;
pub mod subsets;
pub mod walks;

pub use error::{Error, Result};
pub use graph::Digraph;
pub use matrix::IntMatrix;
pub use poly::Poly;
pub use series::{CountSeq, RationalGf};

// Downstream callers handle the same big integers this crate produces.
pub use num;
