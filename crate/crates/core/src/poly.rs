//! Exact univariate polynomials over the integers.

use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial with arbitrary-precision integer coefficients, stored by
/// ascending degree with trailing zeros trimmed. The zero polynomial is the
/// empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(-z)`.
    pub fn substitute_neg(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// For an even polynomial `p`, the `q` with `q(z^2) = p(z)`.
    /// Panics if an odd-degree coefficient is nonzero.
    pub fn compress_even(&self) -> Poly {
        assert!(
            self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero()),
            "polynomial is not even"
        );
        Poly::new(self.coeffs.iter().step_by(2).cloned().collect())
    }

    /// Coefficient reversal: for degree-`d` input, `z^d * p(1/z)`.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Greatest common divisor over the rationals, returned as a primitive
    /// integer polynomial with positive leading coefficient.
    /// `gcd(0, p)` is the primitive part of `p`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = to_rational(a);
        let mut y = to_rational(b);
        while !y.is_empty() {
            let r = rat_rem(&x, &y);
            x = y;
            y = r;
        }
        primitive_part(&x)
    }

    /// Exact quotient `self / d`; panics if the division leaves a remainder
    /// or a non-integer coefficient.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (q, r) = rat_div_rem(&to_rational(self), &to_rational(d));
        assert!(r.is_empty(), "polynomial division not exact");
        Poly::new(
            q.into_iter()
                .map(|c| {
                    assert!(c.is_integer(), "polynomial quotient not integral");
                    c.to_integer()
                })
                .collect(),
        )
    }
}

fn to_rational(p: &Poly) -> Vec<BigRational> {
    p.coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn rat_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn rat_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = rat_trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = rat_trim(a.to_vec());
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db)];
    while rem.len() >= b.len() {
        let dr = rem.len() - 1;
        let f = &rem[dr] / &lead;
        for (k, bc) in b.iter().enumerate() {
            let t = &f * bc;
            rem[dr - db + k] -= t;
        }
        quot[dr - db] = f;
        rem = rat_trim(rem);
    }
    (quot, rem)
}

fn rat_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    rat_div_rem(a, b).1
}

/// Clears denominators and divides by the content; leading coefficient made
/// positive. Empty input stays empty.
fn primitive_part(v: &[BigRational]) -> Poly {
    if v.is_empty() {
        return Poly::zero();
    }
    let mut denom_lcm = BigInt::one();
    for c in v {
        denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num::integer::gcd(content, c.clone());
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    Poly::new(ints.iter().map(|c| c / &content).collect())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Canonical rendering: ascending powers, `*` between coefficient and
/// variable, unit coefficients elided, e.g. `1 - 8*z + 16*z^2 - 10*z^3 + z^4`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}
