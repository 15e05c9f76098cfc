//! Convergence rates of the gap iteration on equidistant spectra.
//!
//! For `P(x) = Π (x - p1 - μl)` the gap iterates scale as `ε_k² = μ² w_k²(m)`
//! where `w_k²` depends on `m` alone. This module runs that recurrence, the
//! companion sequence `v_k = 1 - w_k²`, the constants `A(m)` and `B(m)`, and the
//! iteration-count window that follows from the geometric sandwich on `v_k`.

use std::fmt;

use malachite_base::num::arithmetic::traits::{Ceiling, Floor};
use malachite_base::num::basic::traits::One;
use malachite_nz::integer::Integer;
use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::exact::{bit_size, ln_bounds, Fraction, Interval, Poly};

/// Precision of logarithm brackets, in bits.
const LN_BITS: u64 = 96;
/// `v_k` stays exact until its size passes this many bits; after that it is
/// carried as an outward-rounded interval.
const EXACT_BITS: u64 = 4096;
/// Grid for rounded `v_k` enclosures, `2^-ROUND_BITS`.
const ROUND_BITS: u64 = 256;

fn check_m(m: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::BadParams(format!("m must be at least 3, got {m}")));
    }
    Ok(())
}

/// `Π_{l<m} (x - p1 - μl)`, the equidistant polynomial with step `μ`.
pub fn wgp_poly(m: usize, p1: &Rational, mu: &Rational) -> Result<Poly> {
    check_m(m)?;
    if *mu <= 0u32 {
        return Err(Error::BadParams(format!("step must be positive, got {mu}")));
    }
    let roots: Vec<Rational> = (0..m).map(|l| p1 + mu * Rational::from(l)).collect();
    Ok(Poly::from_roots(&roots))
}

/// One step `w² + (Σ_{l=1}^{m-1} (m-l)/(l² - w²))⁻¹`.
pub fn w_sq_iterate(m: usize, w_sq: &Rational) -> Result<Rational> {
    check_m(m)?;
    if *w_sq < 0u32 || *w_sq >= 1u32 {
        return Err(Error::BadParams(format!("w² must lie in [0, 1), got {w_sq}")));
    }
    let sum: Rational = (1..m)
        .map(|l| Rational::from(m - l) / (Rational::from(l * l) - w_sq))
        .sum();
    Ok(w_sq + Rational::ONE / sum)
}

/// `w_0² = 0, ..., w_k²` as unreduced fractions.
///
/// With `w² = a/b` a step is `(aN + D) / (bN)`, where `D = Π (l²b - a)` and
/// `N = Σ (m-l) Π_{j≠l} (j²b - a)`.
pub fn w_sq_sequence(m: usize, k: usize) -> Result<Vec<Fraction>> {
    check_m(m)?;
    let mut out = vec![Fraction::zero()];
    for _ in 0..k {
        let last = out.last().unwrap();
        let (a, b) = (last.numerator(), last.denominator());
        let factors: Vec<Integer> = (1..m).map(|l| Integer::from(l * l) * b - a).collect();
        // prefix[i] = Π factors[..i], suffix[i] = Π factors[i..]
        let mut prefix = vec![Integer::ONE];
        for f in &factors {
            let next = prefix.last().unwrap() * f;
            prefix.push(next);
        }
        let mut suffix = vec![Integer::ONE; factors.len() + 1];
        for i in (0..factors.len()).rev() {
            suffix[i] = &suffix[i + 1] * &factors[i];
        }
        let n: Integer = (0..factors.len())
            .map(|i| Integer::from(m - 1 - i) * &prefix[i] * &suffix[i + 1])
            .sum();
        let d = &prefix[factors.len()];
        out.push(Fraction::new(a * &n + d, b * n));
    }
    Ok(out)
}

/// `B(m) = Σ_{l=2}^{m-1} ((m-l)/(m-1)) / (l² - 1)`.
pub fn b_of_m(m: usize) -> Result<Rational> {
    check_m(m)?;
    let sum: Rational = (2..m)
        .map(|l| Rational::from(m - l) / Rational::from(l * l - 1))
        .sum();
    Ok(sum / Rational::from(m - 1))
}

/// `B(m)` through harmonic sums: `3/4 - (1 + 1/(2m) + Σ_{l=3}^{m-1} 1/l) / (m-1)`.
pub fn b_of_m_closed_form(m: usize) -> Result<Rational> {
    check_m(m)?;
    let harmonic: Rational = (3..m).map(|l| Rational::from_unsigneds(1usize, l)).sum();
    let bracket = Rational::ONE + Rational::from_unsigneds(1usize, 2 * m) + harmonic;
    Ok(Rational::from_signeds(3, 4) - bracket / Rational::from(m - 1))
}

/// `A(m) = (m-1) / ((m-1)² + m(m-2)B(m))`.
pub fn a_of_m(m: usize) -> Result<Rational> {
    let b = b_of_m(m)?;
    let m1 = Rational::from(m - 1);
    let denom = &m1 * &m1 + Rational::from(m * (m - 2)) * b;
    Ok(m1 / denom)
}

/// Whether `w_k²(m+1) < w_k²(m)`, compared exactly.
pub fn monotone_in_m_check(m: usize, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    let here = w_sq_sequence(m, k)?;
    let next = w_sq_sequence(m + 1, k)?;
    Ok(next[k] < here[k])
}

/// The target accuracy `δ` of the iteration-count window, either as a
/// rational or through `ln δ⁻¹` (so that `δ = e^-10` is expressible).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Accuracy {
    Delta(Rational),
    LnInverse(Rational),
}

impl Accuracy {
    fn validate(&self) -> Result<()> {
        match self {
            Accuracy::Delta(d) if *d <= 0u32 || *d >= 1u32 => {
                Err(Error::BadParams(format!("delta must lie in (0, 1), got {d}")))
            }
            Accuracy::LnInverse(l) if *l <= 0u32 => {
                Err(Error::BadParams(format!("ln(1/delta) must be positive, got {l}")))
            }
            _ => Ok(()),
        }
    }

    /// Bracket of `ln δ⁻¹`.
    pub fn ln_inverse(&self) -> Interval {
        match self {
            Accuracy::Delta(d) => ln_bounds(d, LN_BITS).neg(),
            Accuracy::LnInverse(l) => Interval::point(l.clone()),
        }
    }

    /// `Some(true)` if `v < δ` certainly, `Some(false)` if `v ≥ δ` certainly.
    fn below(&self, v: &Interval) -> Option<bool> {
        match self {
            Accuracy::Delta(d) if v.hi < *d => Some(true),
            Accuracy::Delta(d) if v.lo >= *d => Some(false),
            Accuracy::Delta(_) => None,
            Accuracy::LnInverse(l) => {
                let target = -l;
                if ln_bounds(&v.hi, LN_BITS).hi < target {
                    Some(true)
                } else if ln_bounds(&v.lo, LN_BITS).lo >= target {
                    Some(false)
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Accuracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Accuracy::Delta(d) => write!(f, "{d}"),
            Accuracy::LnInverse(l) => write!(f, "exp(-{l})"),
        }
    }
}

/// Outcome of one side of a sandwich comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    /// The enclosure of `v_k` straddles the bound.
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Undecided => "undecided",
        }
    }
}

/// `((m-2)/(m-1))^k < v_k ≤ (1-A)^k` at one step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichCheck {
    pub k: usize,
    pub lower: Verdict,
    pub upper: Verdict,
}

impl SandwichCheck {
    pub fn holds(&self) -> bool {
        self.lower == Verdict::Holds && self.upper == Verdict::Holds
    }
}

#[derive(Clone, Debug)]
pub struct RateReport {
    pub m: usize,
    pub b: Rational,
    pub a: Rational,
    /// Enclosures of `v_0 = 1, v_1, ...`; degenerate while the values are exact.
    pub v: Vec<Interval>,
    pub lower_geo: Rational,
    pub upper_geo: Rational,
    pub sandwich: Vec<SandwichCheck>,
    pub delta: Accuracy,
    pub k_min: u64,
    pub k_max: u64,
    /// First computed `k` with `v_k < δ`.
    pub first_below: Option<usize>,
}

impl RateReport {
    /// Steps where the sandwich does not certainly hold.
    pub fn violations(&self) -> impl Iterator<Item = &SandwichCheck> {
        self.sandwich.iter().filter(|c| !c.holds())
    }

    pub fn require_sandwich(&self) -> Result<()> {
        match self.violations().next() {
            Some(c) => Err(Error::SandwichViolation(c.k)),
            None => Ok(()),
        }
    }

    /// Whether `v_k` is known exactly.
    pub fn is_exact(&self, k: usize) -> bool {
        self.v.get(k).is_some_and(|iv| iv.lo == iv.hi)
    }
}

/// One step of `v ↦ v - {(m-1)/v + Σ_{l=2}^{m-1} (m-l)/(l²-1+v)}⁻¹`.
fn v_step(m: usize, v: &Rational) -> Rational {
    let tail: Rational = (2..m)
        .map(|l| Rational::from(m - l) / (Rational::from(l * l - 1) + v))
        .sum();
    let bracket = Rational::from(m - 1) / v + tail;
    v - Rational::ONE / bracket
}

fn compare_lower(v: &Interval, bound: &Rational) -> Verdict {
    if v.lo > *bound {
        Verdict::Holds
    } else if v.hi <= *bound {
        Verdict::Violated
    } else {
        Verdict::Undecided
    }
}

fn compare_upper(v: &Interval, bound: &Rational) -> Verdict {
    if v.hi <= *bound {
        Verdict::Holds
    } else if v.lo > *bound {
        Verdict::Violated
    } else {
        Verdict::Undecided
    }
}

/// Runs `steps` steps of the `v` recurrence, checks the geometric sandwich at
/// every step and brackets the iteration count needed for `v_k < δ`.
pub fn rate_report(m: usize, delta: &Accuracy, steps: usize) -> Result<RateReport> {
    check_m(m)?;
    delta.validate()?;
    let b = b_of_m(m)?;
    let a = a_of_m(m)?;
    let lower_geo = Rational::from_unsigneds(m - 2, m - 1);
    let upper_geo = Rational::ONE - &a;

    let mut v = vec![Interval::point(Rational::ONE)];
    let mut sandwich = Vec::with_capacity(steps);
    let (mut lower_pow, mut upper_pow) = (Rational::ONE, Rational::ONE);
    let mut first_below = None;
    for k in 1..=steps {
        let prev = v.last().unwrap();
        // The step map is increasing in v, so endpoints map to endpoints.
        let next = if prev.lo == prev.hi && bit_size(&prev.lo) < EXACT_BITS {
            Interval::point(v_step(m, &prev.lo))
        } else {
            Interval::new(v_step(m, &prev.lo), v_step(m, &prev.hi)).round_out(ROUND_BITS)
        };
        lower_pow *= &lower_geo;
        upper_pow *= &upper_geo;
        sandwich.push(SandwichCheck {
            k,
            lower: compare_lower(&next, &lower_pow),
            upper: compare_upper(&next, &upper_pow),
        });
        if first_below.is_none() && delta.below(&next) == Some(true) {
            first_below = Some(k);
        }
        v.push(next);
    }

    let ln_inv = delta.ln_inverse();
    // ln(m-1) - ln(m-2) and -ln(1-A), both positive.
    let lower_rate = ln_bounds(&Rational::from(m - 1), LN_BITS)
        .sub(&ln_bounds(&Rational::from(m - 2), LN_BITS));
    let upper_rate = ln_bounds(&upper_geo, LN_BITS).neg();
    let k_min = (&ln_inv.lo / &lower_rate.hi).ceiling();
    let k_max = (&ln_inv.hi / &upper_rate.lo).floor();
    let to_u64 = |x: Integer| u64::try_from(&x).unwrap_or(0);

    Ok(RateReport {
        m,
        b,
        a,
        v,
        lower_geo,
        upper_geo,
        sandwich,
        delta: delta.clone(),
        k_min: to_u64(k_min),
        k_max: to_u64(k_max),
        first_below,
    })
}
