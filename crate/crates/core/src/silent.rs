//! Counting silent configurations of the staring game.
//!
//! 2n people stand in a circle (or as two partnered n-circles, the prism
//! variant); everyone simultaneously stares at a neighbour, the partner, or
//! the diametrically opposite person. Mutual stares scream. The number of
//! silent configurations is a walk count in the 8-node gaze digraph: closed
//! walks of length n for prisms, flip-paired walks for circles.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::matrix::IntMatrix;
use crate::series::{largest_real_root, trace_gf, CountSeq, RationalGf, DEFAULT_ROOT_TOL};
use crate::walks;
use num::{BigInt, BigRational};

/// The vertical-flip involution on the 8 gaze nodes: a circle of 2n people
/// closes after n steps onto the starting pair seen in the opposite order,
/// so walks must end at the flip of their starting gaze.
pub const FLIP_PAIRING: [usize; 8] = [0, 1, 7, 6, 5, 4, 3, 2];

/// Which arrangement of the 2n players is being counted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Prism,
    Circle,
}

/// Recurrence satisfied by both count sequences:
/// `a_n = 8 a_{n-1} - 16 a_{n-2} + 10 a_{n-3} - a_{n-4}`.
pub fn silent_recurrence() -> Vec<BigInt> {
    [8, -16, 10, -1].iter().map(|&c| BigInt::from(c)).collect()
}

fn gaze_matrix() -> IntMatrix {
    Digraph::build("gaze")
        .expect("gaze builder")
        .adjacency_matrix()
}

/// Number of silent n-gonal prisms, `t_n = tr(A^n)`. Values for n < 3 are
/// formal trace values; the CLI marks them as such.
pub fn prism_count(n: u64) -> BigInt {
    gaze_matrix().pow(n).trace()
}

/// Number of silent circles of 2n people, the flip-paired walk count.
/// The case n = 1 is degenerate (both neighbours and the opposite person
/// coincide) and is refused; n = 0 likewise.
pub fn circle_count(n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::domain(
            "circle counts need n >= 2: for n = 1 the neighbours and the opposite person coincide",
        ));
    }
    let g = Digraph::build("gaze").expect("gaze builder");
    walks::count_paired_walks(&g, n, &FLIP_PAIRING)
}

/// Probability that a uniformly random configuration is silent: the count
/// over 9^n, as an exact rational together with its 3-decimal rendering.
pub fn silence_probability(n: u64, variant: Variant) -> Result<(BigRational, String)> {
    if n < 2 {
        return Err(Error::domain("silence probabilities need n >= 2"));
    }
    let count = match variant {
        Variant::Prism => prism_count(n),
        Variant::Circle => circle_count(n)?,
    };
    let denom = num::pow(BigInt::from(9), n as usize);
    let p = BigRational::new(count, denom);
    let rendered = round3(&p);
    Ok((p, rendered))
}

/// Rounds a non-negative rational to three decimals, half away from zero.
/// No probability here can hit an exact tie: that would need an odd
/// multiple of a power of 9 to be even.
pub(crate) fn round3(p: &BigRational) -> String {
    let scaled = p * BigRational::from_integer(BigInt::from(1000));
    let num = scaled.numer();
    let den = scaled.denom();
    let milli: BigInt = (num * 2 + den) / (den * 2);
    let whole = &milli / 1000;
    let frac = &milli % 1000;
    format!("{whole}.{frac:03}")
}

/// Both counting generating functions: the prism one from the closed-walk
/// series of the gaze matrix, the circle one from computed initial values
/// and the shared recurrence.
pub fn silent_gfs() -> (RationalGf, RationalGf) {
    let t_gf = trace_gf(&gaze_matrix());
    let initial = CountSeq::new(
        2,
        (2..=5).map(|n| circle_count(n).expect("n >= 2")).collect(),
    );
    let s_gf = RationalGf::from_recurrence(&initial, &silent_recurrence())
        .expect("four initial values determine the order-4 numerator");
    (t_gf, s_gf)
}

/// The growth constant pair `(alpha, alpha / 9)`: both silence
/// probabilities decay like `(alpha / 9)^n`, where alpha is the largest
/// real root of the reversed denominator of the prism generating function.
pub fn growth_constant() -> (f64, f64) {
    let (t_gf, _) = silent_gfs();
    let alpha = largest_real_root(&t_gf.den().reversed(), DEFAULT_ROOT_TOL)
        .expect("reversed denominator has a positive dominant root");
    (alpha, alpha / 9.0)
}

/// One row of the silent-configuration table.
pub struct SilentRow {
    pub n: u64,
    pub t: BigInt,
    pub s: BigInt,
    pub p_t: (BigRational, String),
    pub p_s: (BigRational, String),
}

/// Table of (t_n, s_n) with probabilities for n = 2..=max, computed with a
/// single incremental power iterator rather than independent powerings.
pub fn table(max: u64) -> Vec<SilentRow> {
    let a = gaze_matrix();
    let mut rows = Vec::new();
    let mut nine = BigInt::from(81);
    for (n, p) in a.powers().take(max as usize + 1).enumerate().skip(2) {
        let t = p.trace();
        let s: BigInt = (0..8).map(|i| p.get(i, FLIP_PAIRING[i])).sum();
        let p_t = BigRational::new(t.clone(), nine.clone());
        let p_s = BigRational::new(s.clone(), nine.clone());
        let row = SilentRow {
            n: n as u64,
            t,
            s,
            p_t: (p_t.clone(), round3(&p_t)),
            p_s: (p_s.clone(), round3(&p_s)),
        };
        rows.push(row);
        nine *= 9;
    }
    rows
}
