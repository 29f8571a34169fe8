//! Dense arbitrary-precision integer matrices.
//!
//! The transfer-matrix method never needs anything fancier: graphs here
//! have at most a couple dozen nodes, but entries of `A^n` grow
//! exponentially, so exactness matters far more than sparsity.

use num::traits::{One, Zero};
use num::BigInt;
use std::fmt;
use std::ops::Mul;

/// Square matrix of arbitrary-precision integers.
///
/// Dimension 0 is legal: the empty matrix has trace 0 and element sum 0,
/// which makes the all-nodes-deleted term of the subset sums vanish on its
/// own.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// All-zero matrix of the given dimension.
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    /// Identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    /// Convenience constructor from machine-integer rows; panics unless the
    /// rows form a square matrix.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "rows do not form a square matrix"
        );
        IntMatrix::from_fn(dim, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row `i`, column `j`; panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.dim && j < self.dim, "index out of range");
        &self.entries[i * self.dim + j]
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| &self.entries[i * self.dim + i]).sum()
    }

    /// Sum of all `dim * dim` entries.
    pub fn sum_all(&self) -> BigInt {
        self.entries.iter().sum()
    }

    /// Sum of the off-diagonal entries.
    pub fn sum_off_diagonal(&self) -> BigInt {
        self.sum_all() - self.trace()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `self` raised to the `n`-th power by binary exponentiation;
    /// `n = 0` yields the identity of the same dimension.
    pub fn pow(&self, mut n: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Principal submatrix on the rows/columns whose bit is set in `keep`,
    /// preserving relative order. Panics if `keep` has bits at or beyond
    /// `dim` (callers own the mask width).
    pub fn principal_submatrix(&self, keep: u64) -> IntMatrix {
        assert!(self.dim <= 64, "bitmask submatrix limited to 64 rows");
        if self.dim < 64 {
            assert!(keep >> self.dim == 0, "keep mask wider than matrix");
        }
        let idx: Vec<usize> = (0..self.dim).filter(|i| keep >> i & 1 == 1).collect();
        IntMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// Iterator over `I, A, A^2, ...` computed incrementally; useful when a
    /// whole table of consecutive powers is needed.
    pub fn powers(&self) -> PowerIter {
        PowerIter {
            base: self.clone(),
            next: IntMatrix::identity(self.dim),
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let dim = self.dim;
        IntMatrix::from_fn(dim, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..dim {
                acc += &self.entries[i * dim + k] * &rhs.entries[k * dim + j];
            }
            acc
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Yields successive powers of a fixed base matrix, one multiplication per
/// step. Owned by a single consumer; concurrent table builds each take
/// their own iterator.
pub struct PowerIter {
    base: IntMatrix,
    next: IntMatrix,
}

impl Iterator for PowerIter {
    type Item = IntMatrix;

    fn next(&mut self) -> Option<IntMatrix> {
        let out = self.next.clone();
        self.next = &self.next * &self.base;
        Some(out)
    }
}
