//! Hamiltonian and fixed-length simple path/cycle counting by
//! inclusion-exclusion over node subsets.
//!
//! A Hamiltonian path is a walk of length n-1 that avoids no node; summing
//! walk counts over deleted-subset matrices with alternating signs isolates
//! exactly those. Cycles use traces instead of full-matrix sums and divide
//! the rooted count by the length. Fixed-length variants carry a binomial
//! factor counting the supersets each term came from.
//!
//! Each subset term is independent and the total is a sum of exact
//! integers, so the mask range can be split across worker threads with a
//! result that is bit-identical to the sequential one.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use num::traits::{One, Zero};
use num::BigInt;

/// Directed simple paths or directed simple cycles.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Path,
    Cycle,
}

/// Exact binomial coefficient by the multiplicative formula; every
/// intermediate division is exact.
pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    c
}

fn check_mask_width(g: &Digraph) -> usize {
    let n = g.node_count();
    assert!(n <= 63, "subset enumeration limited to 63 nodes");
    n
}

/// Folds `term` over all 2^n subset masks. `workers = 1` runs a plain
/// sequential loop; more workers split the mask range into contiguous
/// chunks whose partial sums are combined in chunk order. Exact integer
/// addition makes any split yield the identical total.
fn subset_fold<F>(n: usize, workers: usize, term: F) -> BigInt
where
    F: Fn(u64) -> Option<BigInt> + Sync,
{
    let total: u64 = 1u64 << n;
    let fold_range = |from: u64, to: u64| {
        let mut acc = BigInt::zero();
        for mask in from..to {
            if let Some(t) = term(mask) {
                acc += t;
            }
        }
        acc
    };
    if workers <= 1 {
        return fold_range(0, total);
    }
    let workers = workers.min(total as usize).max(1);
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers as u64 {
            let from = total / workers as u64 * w;
            let to = if w + 1 == workers as u64 {
                total
            } else {
                total / workers as u64 * (w + 1)
            };
            let fold_range = &fold_range;
            handles.push(scope.spawn(move || fold_range(from, to)));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("subset worker panicked"))
            .sum()
    })
}

/// Number of directed Hamiltonian paths.
pub fn hamiltonian_paths(g: &Digraph) -> BigInt {
    hamiltonian_paths_par(g, 1)
}

/// [`hamiltonian_paths`] with the subset range split across `workers`
/// threads; the result does not depend on the worker count.
pub fn hamiltonian_paths_par(g: &Digraph, workers: usize) -> BigInt {
    let n = check_mask_width(g);
    if n == 0 {
        return BigInt::zero();
    }
    let adj = g.adjacency_matrix();
    subset_fold(n, workers, |keep| {
        let kept = keep.count_ones() as u64;
        let sum = adj.principal_submatrix(keep).pow(n as u64 - 1).sum_all();
        // sign is (-1)^|S| with |S| = n - kept
        Some(signed((n as u64 - kept) % 2 == 1, sum))
    })
}

/// Number of directed Hamiltonian cycles (each counted once per cyclic
/// class, not per starting node).
pub fn hamiltonian_cycles(g: &Digraph) -> BigInt {
    hamiltonian_cycles_par(g, 1)
}

/// [`hamiltonian_cycles`] with a worker count.
pub fn hamiltonian_cycles_par(g: &Digraph, workers: usize) -> BigInt {
    let n = check_mask_width(g);
    if n == 0 {
        return BigInt::zero();
    }
    let adj = g.adjacency_matrix();
    let rooted = subset_fold(n, workers, |keep| {
        let kept = keep.count_ones() as u64;
        let tr = adj.principal_submatrix(keep).pow(n as u64).trace();
        Some(signed((n as u64 - kept) % 2 == 1, tr))
    });
    exact_div(rooted, n as u64, "Hamiltonian cycle rooted count")
}

/// Number of directed simple cycles of length `k` (`1 <= k <= n`).
pub fn simple_cycles(g: &Digraph, k: u64) -> Result<BigInt> {
    simple_cycles_par(g, k, 1)
}

/// [`simple_cycles`] with a worker count.
pub fn simple_cycles_par(g: &Digraph, k: u64, workers: usize) -> Result<BigInt> {
    let n = check_mask_width(g) as u64;
    if k < 1 || k > n {
        return Err(Error::domain(format!(
            "cycle length k = {k} out of range 1..={n}"
        )));
    }
    let adj = g.adjacency_matrix();
    let rooted = subset_fold(n as usize, workers, |mask| {
        let t = u64::from(mask.count_ones());
        if t > k {
            return None; // zero binomial factor; skip before any matrix work
        }
        let tr = adj.principal_submatrix(mask).pow(k).trace();
        Some(signed((k - t) % 2 == 1, binomial(n - t, k - t) * tr))
    });
    Ok(exact_div(rooted, k, "simple cycle rooted count"))
}

/// Number of directed simple paths of length `k` (`1 <= k <= n - 1`).
pub fn simple_paths(g: &Digraph, k: u64) -> Result<BigInt> {
    simple_paths_par(g, k, 1)
}

/// [`simple_paths`] with a worker count.
pub fn simple_paths_par(g: &Digraph, k: u64, workers: usize) -> Result<BigInt> {
    let n = check_mask_width(g) as u64;
    if k < 1 || k + 1 > n {
        return Err(Error::domain(format!(
            "path length k = {k} out of range 1..={}",
            n.saturating_sub(1)
        )));
    }
    let adj = g.adjacency_matrix();
    Ok(subset_fold(n as usize, workers, |mask| {
        let t = u64::from(mask.count_ones());
        if t > k + 1 {
            return None;
        }
        let sum = adj.principal_submatrix(mask).pow(k).sum_all();
        Some(signed(
            (k + 1 - t) % 2 == 1,
            binomial(n - t, k + 1 - t) * sum,
        ))
    }))
}

fn signed(negative: bool, value: BigInt) -> BigInt {
    if negative {
        -value
    } else {
        value
    }
}

fn exact_div(sum: BigInt, by: u64, what: &str) -> BigInt {
    let by = BigInt::from(by);
    assert!(
        (&sum % &by).is_zero(),
        "{what} {sum} not divisible by {by}: implementation bug"
    );
    sum / by
}

/// Halves a directed count to the undirected convention. Cycles need
/// `k >= 3`: a 2-cycle is its own reversal, so halving is ill-defined
/// there. An odd `raw` can only come from a bug upstream and panics.
pub fn undirected_count(raw: &BigInt, kind: Kind, k: u64) -> Result<BigInt> {
    match kind {
        Kind::Cycle if k < 3 => {
            return Err(Error::domain(
                "undirected counts are not defined for cycles of length < 3",
            ))
        }
        Kind::Path if k < 1 => {
            return Err(Error::domain(
                "undirected counts are not defined for paths of length < 1",
            ))
        }
        _ => {}
    }
    assert!(
        (raw % 2u8).is_zero(),
        "directed count {raw} is odd, cannot halve: implementation bug"
    );
    Ok(raw / 2)
}

/// Independent verification oracle: counts directed simple paths of length
/// `k` by depth-first search over the multiplicity function, or directed
/// simple cycles of length `k` as rooted closed paths divided by `k`.
/// Refuses graphs with more than 16 nodes.
pub fn brute_force_count(g: &Digraph, kind: Kind, k: u64) -> Result<BigInt> {
    let n = g.node_count();
    if n > 16 {
        return Err(Error::domain(
            "brute-force enumeration is limited to 16 nodes",
        ));
    }
    match kind {
        Kind::Path => {
            let mut total = BigInt::zero();
            for start in 0..n {
                total += dfs_paths(g, start, k, &mut vec![false; n].into_boxed_slice(), start);
            }
            Ok(total)
        }
        Kind::Cycle => {
            if k < 1 {
                return Err(Error::domain("cycle length must be at least 1"));
            }
            let mut rooted = BigInt::zero();
            for start in 0..n {
                rooted += dfs_cycles(g, start, start, k, &mut vec![false; n].into_boxed_slice());
            }
            Ok(exact_div(rooted, k, "rooted simple cycle count"))
        }
    }
}

// Weighted count of simple paths of `remaining` further edges from `at`;
// `visited` excludes `at` itself until entry.
fn dfs_paths(
    g: &Digraph,
    at: usize,
    remaining: u64,
    visited: &mut [bool],
    _start: usize,
) -> BigInt {
    if remaining == 0 {
        return BigInt::one();
    }
    visited[at] = true;
    let mut acc = BigInt::zero();
    for next in 0..g.node_count() {
        let m = g.multiplicity(at, next);
        if m > 0 && !visited[next] {
            acc += BigInt::from(m) * dfs_paths(g, next, remaining - 1, visited, _start);
        }
    }
    visited[at] = false;
    acc
}

// Weighted count of closed walks of `remaining` edges from `at` back to
// `start` with all intermediate nodes distinct and different from `start`.
fn dfs_cycles(
    g: &Digraph,
    at: usize,
    start: usize,
    remaining: u64,
    visited: &mut [bool],
) -> BigInt {
    if remaining == 1 {
        return BigInt::from(g.multiplicity(at, start));
    }
    visited[at] = true;
    let mut acc = BigInt::zero();
    for next in 0..g.node_count() {
        let m = g.multiplicity(at, next);
        if m > 0 && next != start && !visited[next] {
            acc += BigInt::from(m) * dfs_cycles(g, next, start, remaining - 1, visited);
        }
    }
    visited[at] = false;
    acc
}
