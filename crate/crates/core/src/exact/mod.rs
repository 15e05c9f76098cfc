//! Exact arithmetic: rational scalars, complex rationals, dense polynomials,
//! exact linear algebra and resultants.
//!
//! Every scalar in the crate is a [`Rational`] kept in lowest terms with a
//! positive denominator. There is no floating point anywhere on the
//! computation path; the few irrational quantities (square roots for outer
//! bounds, logarithms for rate windows) are replaced by rational bounds
//! rounded in a stated direction.

mod complex;
mod fraction;
mod interval;
mod matrix;
mod poly;
mod resultant;

pub use complex::ComplexRational;
pub use fraction::Fraction;
pub use interval::{ln_bounds, Interval};
pub use matrix::{bareiss_det, leading_principal_minors, Domain, ExactMatrix};
pub use poly::Poly;
pub use resultant::{resultant, shifted_poly, ZPoly};

pub use malachite_nz::integer::Integer;
pub use malachite_nz::natural::Natural;
pub use malachite_q::Rational;

use std::cmp::Ordering;

use malachite_base::num::arithmetic::traits::{
    Ceiling, CeilingSqrt, CheckedSqrt, Floor, FloorSqrt, Pow, Sign,
};
use malachite_base::num::basic::traits::Zero;
use malachite_base::num::logic::traits::SignificantBits;

use crate::error::{Error, Result};

/// `n/d` as an exact rational. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::from_signeds(n, d)
}

/// Integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from(n)
}

pub fn sign(x: &Rational) -> Ordering {
    x.sign()
}

pub fn is_zero(x: &Rational) -> bool {
    *x == Rational::ZERO
}

pub fn is_positive(x: &Rational) -> bool {
    x.sign() == Ordering::Greater
}

pub fn is_integer(x: &Rational) -> bool {
    *x.denominator_ref() == 1u32
}

/// Size of a rational in bits (numerator plus denominator).
pub fn bit_size(x: &Rational) -> u64 {
    x.numerator_ref().significant_bits() + x.denominator_ref().significant_bits()
}

/// Parse `"p"`, `"p/q"` or a terminating decimal such as `"-1.25"`.
///
/// Accepts a leading `+`, `-` or the Unicode minus sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = |message: &str| Error::Parse {
        context: format!("rational {text:?}"),
        message: message.to_string(),
    };
    let trimmed = text.trim().replace('\u{2212}', "-");
    if trimmed.is_empty() {
        return Err(err("empty string"));
    }
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(&trimmed)),
    };
    let digits_only = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let magnitude = if let Some((num, den)) = body.split_once('/') {
        if !digits_only(num) || !digits_only(den) {
            return Err(err("expected digits around '/'"));
        }
        let num: Natural = num.parse().map_err(|_| err("bad numerator"))?;
        let den: Natural = den.parse().map_err(|_| err("bad denominator"))?;
        if den == 0u32 {
            return Err(err("zero denominator"));
        }
        Rational::from_naturals(num, den)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if !(digits_only(whole) || whole.is_empty()) || !digits_only(frac) {
            return Err(err("malformed decimal"));
        }
        let all: Natural = format!("{whole}{frac}").parse().map_err(|_| err("bad decimal"))?;
        let scale = Natural::from(10u32).pow(frac.len() as u64);
        Rational::from_naturals(all, scale)
    } else {
        if !digits_only(body) {
            return Err(err("expected an integer, fraction or decimal"));
        }
        Rational::from(body.parse::<Natural>().map_err(|_| err("bad integer"))?)
    };
    Ok(if negative { -magnitude } else { magnitude })
}

/// Largest multiple of `1/grid` that is `<= x`.
pub fn floor_to_grid(x: &Rational, grid: &Natural) -> Rational {
    let scaled = x * Rational::from(grid.clone());
    Rational::from_integers(scaled.floor(), Integer::from(grid.clone()))
}

/// Smallest multiple of `1/grid` that is `>= x`.
pub fn ceil_to_grid(x: &Rational, grid: &Natural) -> Rational {
    let scaled = x * Rational::from(grid.clone());
    Rational::from_integers(scaled.ceiling(), Integer::from(grid.clone()))
}

/// `10^digits` as a natural number.
pub fn power_of_ten(digits: u64) -> Natural {
    Natural::from(10u32).pow(digits)
}

/// Exact square root if `x` is the square of a rational.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.sign() == Ordering::Less {
        return None;
    }
    let num = x.numerator_ref().checked_sqrt()?;
    let den = x.denominator_ref().checked_sqrt()?;
    Some(Rational::from_naturals(num, den))
}

/// A rational `r` with `r <= sqrt(x)`, exact when `x` is a perfect square,
/// otherwise within `10^-digits` of the true root. `x` must be `>= 0`.
pub fn sqrt_lower(x: &Rational, digits: u64) -> Rational {
    assert!(x.sign() != Ordering::Less, "sqrt of a negative rational");
    if let Some(root) = exact_sqrt(x) {
        return root;
    }
    let grid = power_of_ten(digits);
    // floor(sqrt(x * grid^2)) / grid
    let scaled = x * Rational::from(&grid * &grid);
    let floor: Integer = scaled.floor();
    let floor = Natural::try_from(floor).expect("nonnegative");
    Rational::from_naturals(floor.floor_sqrt(), grid)
}

/// A rational `r` with `r >= sqrt(x)`; exact for perfect squares.
pub fn sqrt_upper(x: &Rational, digits: u64) -> Rational {
    assert!(x.sign() != Ordering::Less, "sqrt of a negative rational");
    if let Some(root) = exact_sqrt(x) {
        return root;
    }
    let grid = power_of_ten(digits);
    let scaled = x * Rational::from(&grid * &grid);
    let ceil: Integer = scaled.ceiling();
    let ceil = Natural::try_from(ceil).expect("nonnegative");
    Rational::from_naturals(ceil.ceiling_sqrt(), grid)
}

/// Smallest integer `c >= 0` with `c^2 >= x`.
pub fn ceil_sqrt_integer(x: &Rational) -> Integer {
    if x.sign() != Ordering::Greater {
        return Integer::ZERO;
    }
    let ceil: Integer = x.ceiling();
    let ceil = Natural::try_from(ceil).expect("positive");
    Integer::from(ceil.ceiling_sqrt())
}
