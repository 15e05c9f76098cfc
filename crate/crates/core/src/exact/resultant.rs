//! Resultants of polynomials whose coefficients are themselves polynomials
//! in a parameter `z`.

use malachite_base::num::basic::traits::Zero;
use malachite_q::Rational;

use super::matrix::{bareiss_det, Domain};
use super::poly::Poly;

/// A polynomial in `x` with coefficients in `Q[z]`, ascending in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<Poly>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    /// Lift a polynomial in `x` with constant coefficients.
    pub fn from_poly(p: &Poly) -> Self {
        Self::new(p.coeffs().iter().cloned().map(Poly::constant).collect())
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Substitute a value for `z`, leaving a polynomial in `x`.
    pub fn eval_z(&self, z: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.eval(z)).collect())
    }
}

/// `P(x + z)` as a polynomial in `x` over `Q[z]`.
pub fn shifted_poly(p: &Poly) -> ZPoly {
    let n = p.coeffs().len();
    // binom[k][i] = C(k, i)
    let mut binom = vec![vec![Rational::ZERO; n]; n];
    for k in 0..n {
        binom[k][0] = Rational::from(1u32);
        for i in 1..=k {
            binom[k][i] = if i == k {
                Rational::from(1u32)
            } else {
                &binom[k - 1][i - 1] + &binom[k - 1][i]
            };
        }
    }
    let coeffs = (0..n)
        .map(|i| {
            let mut zc = vec![Rational::ZERO; n - i];
            for (k, a) in p.coeffs().iter().enumerate().skip(i) {
                zc[k - i] = a * &binom[k][i];
            }
            Poly::new(zc)
        })
        .collect();
    ZPoly::new(coeffs)
}

/// Resultant with respect to `x`, as a polynomial in `z`.
///
/// Computed as the determinant of the Sylvester matrix by fraction-free
/// elimination over `Q[z]`.
pub fn resultant(p: &ZPoly, q: &ZPoly) -> Poly {
    let (dp, dq) = (p.degree(), q.degree());
    let size = dp + dq;
    if size == 0 {
        return Poly::one();
    }
    let mut rows = Vec::with_capacity(size);
    for (shift, count, src) in [(0, dq, p), (0, dp, q)] {
        for r in 0..count {
            let mut row = vec![<Poly as Domain>::zero(); size];
            for (j, c) in src.coeffs().iter().rev().enumerate() {
                row[shift + r + j] = c.clone();
            }
            rows.push(row);
        }
    }
    bareiss_det(rows)
}
