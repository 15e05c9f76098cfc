//! Rational intervals with outward rounding, used where a logarithm has to
//! be bracketed by two rationals.

use std::cmp::Ordering;
use std::fmt;

use malachite_base::num::arithmetic::traits::{Pow, Sign};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::natural::Natural;
use malachite_q::Rational;

use super::{ceil_to_grid, floor_to_grid};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Interval {
        assert!(
            self.lo.sign() == Ordering::Greater || self.hi.sign() == Ordering::Less,
            "reciprocal of an interval containing zero"
        );
        Interval { lo: Rational::ONE / &self.hi, hi: Rational::ONE / &self.lo }
    }

    pub fn div(&self, rhs: &Interval) -> Interval {
        self.mul(&rhs.recip())
    }

    /// Widen the endpoints outward onto the grid `2^-bits` to keep sizes bounded.
    pub fn round_out(&self, bits: u64) -> Interval {
        let grid = Natural::from(2u32).pow(bits);
        Interval { lo: floor_to_grid(&self.lo, &grid), hi: ceil_to_grid(&self.hi, &grid) }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Bracket `2·atanh(u)` for `|u| < 1`, to within about `2^-bits`.
fn two_atanh(u: &Rational, bits: u64) -> Interval {
    if *u == Rational::ZERO {
        return Interval::point(Rational::ZERO);
    }
    let negative = u.sign() == Ordering::Less;
    let u = if negative { -u } else { u.clone() };
    let u2 = &u * &u;
    let target = Rational::ONE / Rational::from(Natural::from(2u32).pow(bits + 2));
    let mut power = u.clone();
    let mut sum = Rational::ZERO;
    let mut j = 0u64;
    loop {
        sum += &power / Rational::from(2 * j + 1);
        power *= &u2;
        j += 1;
        // Remaining terms are bounded by a geometric series.
        let tail = &power / (Rational::from(2 * j + 1) * (Rational::ONE - &u2));
        if tail < target {
            let two = Rational::from(2u32);
            let iv = Interval { lo: &sum * &two, hi: (&sum + &tail) * &two }.round_out(bits + 2);
            return if negative { iv.neg() } else { iv };
        }
    }
}

/// Interval containing `ln x` for rational `x > 0`, of width about `2^-bits`.
pub fn ln_bounds(x: &Rational, bits: u64) -> Interval {
    assert!(x.sign() == Ordering::Greater, "logarithm of a nonpositive rational");
    // Reduce to y = x / 2^k with y in [2/3, 4/3].
    let mut k: i64 = 0;
    let mut y = x.clone();
    let two = Rational::from(2u32);
    let (low, high) = (Rational::from_signeds(2, 3), Rational::from_signeds(4, 3));
    while y > high {
        y /= &two;
        k += 1;
    }
    while y < low {
        y *= &two;
        k -= 1;
    }
    let extra = 64 - u64::from(k.unsigned_abs().leading_zeros()) + 2;
    let u = (&y - Rational::ONE) / (&y + Rational::ONE);
    let ln_y = two_atanh(&u, bits + 2);
    if k == 0 {
        return ln_y.round_out(bits);
    }
    let ln2 = two_atanh(&Rational::from_signeds(1, 3), bits + extra);
    let scaled = ln2.mul(&Interval::point(Rational::from(k)));
    scaled.add(&ln_y).round_out(bits)
}
