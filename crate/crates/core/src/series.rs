//! Generating functions, linear recurrences and the closed-walk series.
//!
//! The central identity: for an m x m matrix A with F(z) = det(I - zA),
//! the series sum of tr(A^n) z^n equals m - z F'(z)/F(z). Everything in
//! this module is exact integer arithmetic except the final root bracketing
//! used for growth-rate estimates.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::Poly;
use num::traits::{One, Signed, Zero};
use num::BigInt;
use std::fmt;

/// Default tolerance for [`largest_real_root`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-9;

/// Finite prefix of an integer sequence: `values[k]` is the term of index
/// `offset + k`. Always holds at least one term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountSeq {
    offset: usize,
    values: Vec<BigInt>,
}

impl CountSeq {
    pub fn new(offset: usize, values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty(), "CountSeq may not be empty");
        CountSeq { offset, values }
    }

    pub fn from_i64(offset: usize, values: &[i64]) -> Self {
        CountSeq::new(offset, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Term of index `n`, or `None` outside the stored range.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.offset).and_then(|k| self.values.get(k))
    }

    /// Index of the last stored term.
    pub fn last_index(&self) -> usize {
        self.offset + self.values.len() - 1
    }

    /// Checks `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}` for every stored
    /// index `n >= from`. Errors if the stored range does not cover
    /// `from - d ..= from`.
    pub fn satisfies_recurrence(&self, rec: &[BigInt], from: usize) -> Result<bool> {
        let d = rec.len();
        if from < self.offset + d || from > self.last_index() {
            return Err(Error::domain(format!(
                "sequence covers indices {}..={}, cannot check a recurrence of order {d} from {from}",
                self.offset,
                self.last_index()
            )));
        }
        for n in from..=self.last_index() {
            let mut rhs = BigInt::zero();
            for (k, c) in rec.iter().enumerate() {
                rhs += c * self.get(n - k - 1).unwrap();
            }
            if self.get(n).unwrap() != &rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Ratio of integer polynomials with den(0) = 1, kept reduced (the gcd of
/// numerator and denominator over the rationals is constant).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGf {
    num: Poly,
    den: Poly,
}

impl RationalGf {
    /// Builds the reduced form. Panics unless `den(0) = 1`; every
    /// construction path in this crate normalises to that form first.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(
            den.constant_term().is_one(),
            "generating function denominator must have constant term 1"
        );
        if num.is_zero() {
            return RationalGf {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let mut g = Poly::gcd(&num, &den);
        if g.constant_term().is_negative() {
            g = g.scale(&BigInt::from(-1));
        }
        RationalGf {
            num: num.div_exact(&g),
            den: den.div_exact(&g),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// First `count` Taylor coefficients at z = 0, computed exactly by the
    /// linear recurrence the denominator induces.
    pub fn series(&self, count: usize) -> CountSeq {
        assert!(count >= 1, "series needs at least one coefficient");
        let mut values: Vec<BigInt> = Vec::with_capacity(count);
        let d = self.den.degree().unwrap_or(0);
        for n in 0..count {
            let mut a = self.num.coeff(n);
            for k in 1..=d.min(n) {
                a -= self.den.coeff(k) * &values[n - k];
            }
            values.push(a);
        }
        CountSeq::new(0, values)
    }

    /// The unique generating function with denominator
    /// `1 - c_1 z - ... - c_d z^d` whose series agrees with `initial` on
    /// its stored range (terms below the offset are zero) and continues by
    /// the recurrence. Errors when fewer than `d` terms are supplied.
    pub fn from_recurrence(initial: &CountSeq, rec: &[BigInt]) -> Result<RationalGf> {
        let d = rec.len();
        if initial.values.len() < d {
            return Err(Error::domain(format!(
                "need at least {d} initial values to determine the numerator, got {}",
                initial.values.len()
            )));
        }
        let mut den = vec![BigInt::one()];
        den.extend(rec.iter().map(|c| -c));
        let den = Poly::new(den);

        let top = initial.last_index();
        let mut num = vec![BigInt::zero(); top + 1];
        let term = |n: usize| -> BigInt { initial.get(n).cloned().unwrap_or_else(BigInt::zero) };
        for (j, out) in num.iter_mut().enumerate() {
            let mut v = term(j);
            for (k, c) in rec.iter().enumerate() {
                if k < j {
                    v -= c * term(j - k - 1);
                }
            }
            *out = v;
        }
        Ok(RationalGf::new(Poly::new(num), den))
    }

    /// Even-index part: the generating function of the coefficients at
    /// even powers, i.e. `E` with `E(z^2) = (G(z) + G(-z)) / 2`.
    pub fn even_part(&self) -> RationalGf {
        let num_neg = self.num.substitute_neg();
        let den_neg = self.den.substitute_neg();
        let sym = &(&self.num * &den_neg) + &(&num_neg * &self.den);
        let half = sym.div_exact(&Poly::constant(BigInt::from(2)));
        let den = &self.den * &den_neg;
        RationalGf::new(half.compress_even(), den.compress_even())
    }
}

impl std::ops::Add for &RationalGf {
    type Output = RationalGf;

    fn add(self, rhs: &RationalGf) -> RationalGf {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalGf::new(num, den)
    }
}

/// Canonical rendering, e.g.
/// `(8 - 56*z + 96*z^2 - 50*z^3 + 4*z^4) / (1 - 8*z + 16*z^2 - 10*z^3 + z^4)`.
impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Coefficients of `F(z) = det(I - zA)`, the reversed characteristic
/// polynomial, computed by the Faddeev-LeVerrier iteration. All divisions
/// are exact over the integers; the constant term is always 1.
pub fn reversed_char_poly(a: &IntMatrix) -> Poly {
    let m = a.dim();
    // char(x) = x^m + c[m-1] x^(m-1) + ... + c[0]
    let mut c = vec![BigInt::zero(); m + 1];
    c[m] = BigInt::one();
    let mut prev = IntMatrix::zero(m);
    for k in 1..=m {
        let step = a * &prev;
        let mk = IntMatrix::from_fn(m, |i, j| {
            if i == j {
                step.get(i, j) + &c[m - k + 1]
            } else {
                step.get(i, j).clone()
            }
        });
        let t = (a * &mk).trace();
        let kk = BigInt::from(k);
        debug_assert!((&t % &kk).is_zero(), "Faddeev-LeVerrier division not exact");
        c[m - k] = -(t / kk);
        prev = mk;
    }
    Poly::new((0..=m).map(|j| c[m - j].clone()).collect())
}

/// The closed-walk generating function `(m F - z F') / F` of an m x m
/// matrix, reduced.
pub fn trace_gf(a: &IntMatrix) -> RationalGf {
    let m = a.dim();
    let f = reversed_char_poly(a);
    let zfp = &Poly::monomial(BigInt::one(), 1) * &f.derivative();
    let num = &f.scale(&BigInt::from(m)) - &zfp;
    RationalGf::new(num, f)
}

/// Largest real root of `p` in `[0, B]` where `B = 1 + max|c_i| / |lead|`
/// (the Cauchy bound), located by a right-to-left sign-change scan followed
/// by bisection to within `tol`.
pub fn largest_real_root(p: &Poly, tol: f64) -> Result<f64> {
    let Some(deg) = p.degree() else {
        return Err(Error::domain("zero polynomial has no well-defined roots"));
    };
    if deg == 0 {
        return Err(Error::NoRealRoot { bound: 0.0 });
    }
    use num::ToPrimitive;
    let lead = p.coeff(deg).abs().to_f64().unwrap_or(f64::INFINITY);
    let max_low = (0..deg)
        .map(|k| p.coeff(k).abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0f64, f64::max);
    let bound = 1.0 + max_low / lead;

    let steps = 1 << 16;
    let width = bound / steps as f64;
    let mut hi_val = p.eval_f64(bound);
    if hi_val == 0.0 {
        return Ok(bound);
    }
    for i in (0..steps).rev() {
        let lo = i as f64 * width;
        let lo_val = p.eval_f64(lo);
        if lo_val == 0.0 {
            return Ok(lo);
        }
        if (lo_val < 0.0) != (hi_val < 0.0) {
            return Ok(bisect(p, lo, lo + width, tol));
        }
        hi_val = lo_val;
    }
    Err(Error::NoRealRoot { bound })
}

fn bisect(p: &Poly, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let lo_neg = p.eval_f64(lo) < 0.0;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) / 2.0;
        let v = p.eval_f64(mid);
        if v == 0.0 {
            return mid;
        }
        if (v < 0.0) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}
