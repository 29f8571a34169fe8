//! Directed Hamiltonian cycles in antiprism graphs.
//!
//! A Hamiltonian cycle in the circulant graph C_{2n}^{1,2} either leaves
//! some node's three nearby chords untouched (there are exactly 4n such
//! cycles) or induces an allowed visitation signature everywhere, in which
//! case it corresponds to a closed walk of length 2n in the 4-node
//! signature digraph counted twice (two traversal directions). Hence
//! `h_n = 4n + 2 tr(A_S^{2n})`.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::matrix::IntMatrix;
use crate::series::{trace_gf, CountSeq, RationalGf};
use num::BigInt;

fn signature_matrix() -> IntMatrix {
    Digraph::build("signature")
        .expect("signature builder")
        .adjacency_matrix()
}

fn check_n(n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::domain("antiprism graph is defined for n >= 3"));
    }
    Ok(())
}

/// `h_n`, the number of directed Hamiltonian cycles in C_{2n}^{1,2}.
pub fn hc_count(n: u64) -> Result<BigInt> {
    check_n(n)?;
    // tr(A_S^(2n)) as the n-th power of the squared matrix.
    let squared = {
        let a = signature_matrix();
        &a * &a
    };
    Ok(BigInt::from(4 * n) + 2 * squared.pow(n).trace())
}

/// Number of cycles that skip all three chords near some node: `4n`.
pub fn type1_count(n: u64) -> Result<BigInt> {
    check_n(n)?;
    Ok(BigInt::from(4 * n))
}

/// Generating function of the type-1 count `4n` from n = 3 on.
pub fn type1_gf() -> RationalGf {
    let initial = CountSeq::from_i64(3, &[12, 16]);
    RationalGf::from_recurrence(&initial, &[BigInt::from(2), BigInt::from(-1)])
        .expect("two initial values determine the order-2 numerator")
}

/// Generating function of `h_n` from n = 3 on, assembled as the type-1
/// part plus twice the even-trace series of the signature matrix with its
/// first three terms removed.
pub fn hc_gf() -> RationalGf {
    let even = trace_gf(&signature_matrix()).even_part();
    let head = even.series(3);
    let head_poly = crate::poly::Poly::new(head.values().to_vec());
    let tail_num = (even.num() - &(&head_poly * even.den())).scale(&BigInt::from(2));
    let type2 = RationalGf::new(tail_num, even.den().clone());
    &type1_gf() + &type2
}

/// Table of `h_n` for n = 3..=max.
pub fn table(max: u64) -> CountSeq {
    assert!(max >= 3, "antiprism table starts at n = 3");
    let squared = {
        let a = signature_matrix();
        &a * &a
    };
    let values: Vec<BigInt> = squared
        .powers()
        .take(max as usize + 1)
        .enumerate()
        .skip(3)
        .map(|(n, p)| BigInt::from(4 * n as u64) + 2 * p.trace())
        .collect();
    CountSeq::new(3, values)
}
