//! Unreduced quotients of integers.
//!
//! Exact Newton iterates grow geometrically and their numerator and
//! denominator share almost no factors, so normalizing each iterate costs a
//! huge gcd for nothing. `Fraction` skips the gcd and compares by
//! cross-multiplication.

use std::cmp::Ordering;

use malachite_base::num::arithmetic::traits::{DivRound, Sign};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::logic::traits::SignificantBits;
use malachite_base::rounding_modes::RoundingMode;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;

/// `num / den` with `den > 0`, not necessarily in lowest terms.
#[derive(Clone, Debug)]
pub struct Fraction {
    num: Integer,
    den: Integer,
}

impl Fraction {
    pub fn new(num: Integer, den: Integer) -> Self {
        assert!(den != 0u32, "zero denominator");
        if den < 0u32 {
            Fraction { num: -num, den: -den }
        } else {
            Fraction { num, den }
        }
    }

    pub fn zero() -> Self {
        Fraction { num: Integer::ZERO, den: Integer::ONE }
    }

    pub fn from_rational(x: &Rational) -> Self {
        let num = Integer::from_sign_and_abs(*x >= 0u32, x.numerator_ref().clone());
        Fraction { num, den: Integer::from(x.denominator_ref().clone()) }
    }

    /// Reduce to lowest terms. Expensive for large values.
    pub fn to_rational(&self) -> Rational {
        Rational::from_integers_ref(&self.num, &self.den)
    }

    pub fn numerator(&self) -> &Integer {
        &self.num
    }

    pub fn denominator(&self) -> &Integer {
        &self.den
    }

    pub fn sign(&self) -> Ordering {
        self.num.sign()
    }

    /// Bits in numerator plus denominator.
    pub fn bit_size(&self) -> u64 {
        self.num.significant_bits() + self.den.significant_bits()
    }

    pub fn scale(&self, r: &Rational) -> Fraction {
        let rn = Integer::from_sign_and_abs(*r >= 0u32, r.numerator_ref().clone());
        let rd = Integer::from(r.denominator_ref().clone());
        Fraction { num: &self.num * rn, den: &self.den * rd }
    }

    pub fn sub(&self, other: &Fraction) -> Fraction {
        if self.den == other.den {
            return Fraction { num: &self.num - &other.num, den: self.den.clone() };
        }
        Fraction {
            num: &self.num * &other.den - &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    /// Compare with a rational without reducing.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.cmp(&Fraction::from_rational(r))
    }

    /// Largest multiple of `1/grid` not above the value.
    pub fn floor_to_grid(&self, grid: &Natural) -> Rational {
        let scaled = &self.num * Integer::from(grid.clone());
        let (q, _) = scaled.div_round(&self.den, RoundingMode::Floor);
        Rational::from_integers(q, Integer::from(grid.clone()))
    }

    /// Smallest multiple of `1/grid` not below the value.
    pub fn ceil_to_grid(&self, grid: &Natural) -> Rational {
        let scaled = &self.num * Integer::from(grid.clone());
        let (q, _) = scaled.div_round(&self.den, RoundingMode::Ceiling);
        Rational::from_integers(q, Integer::from(grid.clone()))
    }

    /// Whether the denominator has more bits than `grid`.
    pub fn denominator_exceeds(&self, grid: &Natural) -> bool {
        self.den > *grid
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.sign() == other.num.sign() && &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Fraction {}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        match self.num.sign().cmp(&other.num.sign()) {
            Ordering::Equal => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
            unequal => unequal,
        }
    }
}

impl From<&Rational> for Fraction {
    fn from(x: &Rational) -> Self {
        Fraction::from_rational(x)
    }
}
