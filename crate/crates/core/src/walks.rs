//! Walk counting by powers of the adjacency matrix.
//!
//! A walk of length n is a chain of n edges, repetitions allowed; the
//! number of walks from i to j is the (i, j) entry of the n-th power of
//! the adjacency matrix. Walks of length 0 exist and are counted, one per
//! node, so that the closed-walk series starts at the node count.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use num::BigInt;

/// Number of walks of length `len` from node `from` to node `to`.
pub fn count_walks(g: &Digraph, len: u64, from: usize, to: usize) -> Result<BigInt> {
    let n = g.node_count();
    if from >= n || to >= n {
        return Err(Error::domain(format!(
            "node out of range: graph has {n} nodes"
        )));
    }
    Ok(g.adjacency_matrix().pow(len).get(from, to).clone())
}

/// Number of closed walks of length `len`, i.e. the trace of `A^len`.
pub fn count_closed_walks(g: &Digraph, len: u64) -> BigInt {
    g.adjacency_matrix().pow(len).trace()
}

/// Sum of the `(i, pairing[i])` entries of `A^len`: the number of walks of
/// length `len` whose endpoints are matched by the given permutation. With
/// the identity permutation this is the closed-walk count.
pub fn count_paired_walks(g: &Digraph, len: u64, pairing: &[usize]) -> Result<BigInt> {
    let n = g.node_count();
    if pairing.len() != n || !is_permutation(pairing) {
        return Err(Error::domain(format!(
            "pairing must be a permutation of 0..{n}"
        )));
    }
    let p = g.adjacency_matrix().pow(len);
    Ok((0..n).map(|i| p.get(i, pairing[i])).sum())
}

fn is_permutation(xs: &[usize]) -> bool {
    let mut seen = vec![false; xs.len()];
    xs.iter()
        .all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
}
