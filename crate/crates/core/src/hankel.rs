//! Hankel matrices of moment sequences: the determinant ladder, the distinct
//! root count, real-rootedness, and Hankel polynomials for counting roots on
//! an interval.

use std::cmp::Ordering;

use malachite_base::num::arithmetic::traits::Sign;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::exact::{leading_principal_minors, ExactMatrix, Poly};
use crate::moments::MomentSeq;

/// `k x k` Hankel matrix `[t_{i+j}]`, zero-based.
pub fn build_hankel(t: &MomentSeq, k: usize) -> Result<ExactMatrix> {
    t.require((2 * k).saturating_sub(1))?;
    let data = (0..k).flat_map(|i| (0..k).map(move |j| t.get(i + j).clone())).collect();
    ExactMatrix::new(k, k, data)
}

/// Determinants `D_1..D_n` of the leading Hankel matrices and what they say
/// about the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelLadder {
    pub dets: Vec<Rational>,
    /// Number of distinct roots.
    pub m: usize,
    /// Whether `D_1..D_m > 0` and `D_{m+1}..D_n = 0`.
    pub valid_real: bool,
    /// One-based index of the first determinant breaking that pattern.
    pub violation: Option<usize>,
}

impl HankelLadder {
    pub fn require_real(&self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(index) => Err(Error::NotRealRooted { index }),
        }
    }
}

pub fn hankel_ladder(t: &MomentSeq, n: usize) -> Result<HankelLadder> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let h = build_hankel(t, n)?;
    let mut dets = leading_principal_minors(&h);
    // Past the first vanishing minor the pivot-free sweep stops; finish the
    // ladder with independent determinants.
    for k in dets.len() + 1..=n {
        let rows: Vec<usize> = (0..k).collect();
        dets.push(h.select(&rows, &rows).det()?);
    }

    let positive_prefix = dets.iter().take_while(|d| d.sign() == Ordering::Greater).count();
    let violation = dets[positive_prefix..]
        .iter()
        .position(|d| *d != Rational::ZERO)
        .map(|offset| positive_prefix + offset + 1);
    let valid_real = violation.is_none();
    let m = if valid_real { positive_prefix } else { h.rank() };
    Ok(HankelLadder { dets, m, valid_real, violation })
}

/// Number of distinct roots encoded by `t`, the rank of `H_n`.
pub fn distinct_root_count(t: &MomentSeq, n: usize) -> Result<usize> {
    Ok(hankel_ladder(t, n)?.m)
}

/// The `k x (k+1)` block `[t_{i+j}]` sitting above the bordering row.
fn bordered_block(t: &MomentSeq, k: usize) -> Result<ExactMatrix> {
    t.require(2 * k)?;
    let data = (0..k).flat_map(|i| (0..=k).map(move |j| t.get(i + j).clone())).collect();
    ExactMatrix::new(k, k + 1, data)
}

/// Coefficients of the Hankel polynomial `ℋ_k(x)`: the determinant of the
/// Hankel block `[t_{i+j}]` (k rows, k+1 columns) bordered below by
/// `(1, x, ..., x^k)`.
///
/// For `k = m` this is `D_m` times the minimal polynomial; for smaller `k`
/// the same shape is truncated to order `k`. `ℋ_0 = 1`.
pub fn hankel_poly_coeffs(t: &MomentSeq, k: usize) -> Result<Poly> {
    if k == 0 {
        return Ok(Poly::one());
    }
    let block = bordered_block(t, k)?;
    let rows: Vec<usize> = (0..k).collect();
    let coeffs = (0..=k)
        .map(|j| {
            let cols: Vec<usize> = (0..=k).filter(|&c| c != j).collect();
            let minor = block.select(&rows, &cols).det()?;
            Ok(if (k + j).is_multiple_of(2) { minor } else { -minor })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// `ℋ_k(x)` evaluated directly as a `(k+1) x (k+1)` determinant.
pub fn hankel_polynomial(t: &MomentSeq, k: usize, x: &Rational) -> Result<Rational> {
    if k == 0 {
        return Ok(Rational::ONE);
    }
    let block = bordered_block(t, k)?;
    let mut rows = block.to_rows();
    let mut power = Rational::ONE;
    let mut last = Vec::with_capacity(k + 1);
    for _ in 0..=k {
        last.push(power.clone());
        power *= x;
    }
    rows.push(last);
    ExactMatrix::from_rows(rows)?.det()
}

/// Sign variations in a sequence after dropping zeros. Two adjacent zeros
/// break the counting theorem and are reported.
fn sign_variations(values: &[Rational]) -> Result<usize> {
    if values.windows(2).any(|w| w[0] == Rational::ZERO && w[1] == Rational::ZERO) {
        return Err(Error::ConsecutiveZeros);
    }
    let signs: Vec<Ordering> =
        values.iter().map(Sign::sign).filter(|s| *s != Ordering::Equal).collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// The sequence `1, ℋ_1, ..., ℋ_m` as polynomials, computed once so it can be
/// evaluated at many points.
#[derive(Clone, Debug)]
pub struct HankelSequence {
    polys: Vec<Poly>,
}

impl HankelSequence {
    pub fn new(t: &MomentSeq, m: usize) -> Result<Self> {
        let polys = (0..=m).map(|k| hankel_poly_coeffs(t, k)).collect::<Result<Vec<_>>>()?;
        Ok(HankelSequence { polys })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn variations_at(&self, x: &Rational) -> Result<usize> {
        let values: Vec<Rational> = self.polys.iter().map(|p| p.eval(x)).collect();
        sign_variations(&values)
    }

    /// Distinct roots in the open interval `]a, b[`.
    pub fn count(&self, a: &Rational, b: &Rational) -> Result<usize> {
        if a >= b {
            return Err(Error::InvalidInput(format!("interval endpoints out of order: {a} >= {b}")));
        }
        let va = self.variations_at(a)?;
        let vb = self.variations_at(b)?;
        va.checked_sub(vb).ok_or_else(|| {
            Error::InvalidInput("sign variations increased across the interval".into())
        })
    }
}

/// Distinct roots in `]a, b[`, by sign variations of `1, ℋ_1, ..., ℋ_m`.
pub fn count_roots_in_interval(t: &MomentSeq, m: usize, a: &Rational, b: &Rational) -> Result<usize> {
    HankelSequence::new(t, m)?.count(a, b)
}
