//! Minimal polynomial, root multiplicities, and the factorization of a
//! characteristic polynomial into same-multiplicity factors.

use std::cmp::Ordering;

use malachite_base::num::arithmetic::traits::Sign;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::exact::{is_integer, ExactMatrix, Poly};
use crate::hankel::{build_hankel, hankel_ladder, hankel_poly_coeffs, HankelLadder};
use crate::moments::{power_sums_from_coeffs, MomentSeq};

/// Monic `P_m(x) = Π (x - p_i)` over the distinct roots, read off the
/// bordered Hankel determinant of order `m` and divided by `D_m`.
pub fn minimal_polynomial(t: &MomentSeq, m: usize) -> Result<Poly> {
    if m == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let d_m = build_hankel(t, m)?.det()?;
    if d_m == Rational::ZERO {
        return Err(Error::SingularHankel(m));
    }
    let bordered = hankel_poly_coeffs(t, m)?;
    Ok(bordered.scale(&(Rational::ONE / d_m)))
}

/// Minimal polynomial of a characteristic polynomial, after checking that
/// it is real-rooted.
pub fn real_minimal_polynomial(cp: &Poly) -> Result<Poly> {
    let n = cp.degree();
    let t = power_sums_from_coeffs(cp, 2 * n)?;
    let ladder = hankel_ladder(&t, n)?;
    ladder.require_real()?;
    minimal_polynomial(&t, ladder.m)
}

/// `(1, x, ..., x^{m-1})`.
fn power_vector(x: &Rational, m: usize) -> Vec<Rational> {
    std::iter::successors(Some(Rational::ONE), |p| Some(p * x)).take(m).collect()
}

/// `<x_vec · H_m^{-1} · y_vec>` for the moment Hankel matrix of order `m`.
///
/// On two distinct roots this vanishes; on a root paired with itself it is
/// the reciprocal multiplicity.
pub fn hankel_inner_product(t: &MomentSeq, m: usize, x: &Rational, y: &Rational) -> Result<Rational> {
    let h = build_hankel(t, m)?;
    let solved = h.solve(&power_vector(y, m))?;
    Ok(power_vector(x, m).iter().zip(&solved).map(|(a, b)| a * b).sum())
}

/// Multiplicity of a root of the minimal polynomial, as `1 / <p H_m^{-1} p>`.
pub fn multiplicity_of_root(t: &MomentSeq, m: usize, p: &Rational) -> Result<u64> {
    let pm = minimal_polynomial(t, m)?;
    if pm.eval(p) != Rational::ZERO {
        return Err(Error::NotARoot);
    }
    let form = hankel_inner_product(t, m, p, p)?;
    if form.sign() != Ordering::Greater {
        return Err(Error::NonIntegerMultiplicity(format!("1/({form})")));
    }
    let r = Rational::ONE / form;
    if !is_integer(&r) {
        return Err(Error::NonIntegerMultiplicity(r.to_string()));
    }
    u64::try_from(&r).map_err(|_| Error::NonIntegerMultiplicity(r.to_string()))
}

/// `t_k - q·s_k`: every root of multiplicity exactly `q` drops out.
pub fn deflated_moments(t: &MomentSeq, s: &MomentSeq, q: u64) -> Result<MomentSeq> {
    if t.len() != s.len() {
        return Err(Error::LengthMismatch(format!(
            "moment sequences of lengths {} and {}",
            t.len(),
            s.len()
        )));
    }
    let q = Rational::from(q);
    let values = t.values().iter().zip(s.values()).map(|(a, b)| a - &q * b).collect();
    Ok(MomentSeq::new(values, t.source_degree()))
}

/// All roots sharing the multiplicity `q`, collected into one monic factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityGroup {
    pub q: u64,
    /// Number of distinct roots with this multiplicity.
    pub count: usize,
    pub factor: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicitySpectrum {
    /// Degree of the characteristic polynomial.
    pub n: usize,
    /// Number of distinct roots.
    pub m: usize,
    /// Groups in ascending order of multiplicity.
    pub groups: Vec<MultiplicityGroup>,
    pub min_poly: Poly,
    pub ladder: HankelLadder,
}

impl MultiplicitySpectrum {
    /// Number of distinct multiplicities.
    pub fn l(&self) -> usize {
        self.groups.len()
    }

    /// `Π Q_α^{q_α}`, which must equal the characteristic polynomial.
    pub fn reconstruct(&self) -> Poly {
        self.groups.iter().fold(Poly::one(), |acc, g| &acc * &g.factor.pow(g.q))
    }

    pub fn group_of(&self, q: u64) -> Option<&MultiplicityGroup> {
        self.groups.iter().find(|g| g.q == q)
    }
}

/// Polynomial vanishing exactly on the roots that keep a nonzero weight in
/// `tq`, where `rank` such roots remain.
fn auxiliary_polynomial(tq: &MomentSeq, rank: usize) -> Result<Poly> {
    let d = build_hankel(tq, rank)?.det()?;
    if d == Rational::ZERO {
        return Err(Error::SingularHankel(rank));
    }
    Ok(hankel_poly_coeffs(tq, rank)?.scale(&(Rational::ONE / d)))
}

/// Split a real-rooted monic polynomial into factors whose roots share a
/// multiplicity.
///
/// ```
/// use hankel_spectra::exact::Poly;
/// use hankel_spectra::factor::multiplicity_spectrum;
///
/// // (x-1)^2 (x-2)^2 (x-3)
/// let cp = &Poly::from_i64s(&[2, -3, 1]).pow(2) * &Poly::from_i64s(&[-3, 1]);
/// let spectrum = multiplicity_spectrum(&cp).unwrap();
/// assert_eq!(spectrum.groups[0].factor, Poly::from_i64s(&[-3, 1]));
/// assert_eq!(spectrum.groups[1].factor, Poly::from_i64s(&[2, -3, 1]));
/// ```
pub fn multiplicity_spectrum(cp: &Poly) -> Result<MultiplicitySpectrum> {
    let n = cp.degree();
    let t = power_sums_from_coeffs(cp, 2 * n)?;
    let ladder = hankel_ladder(&t, n)?;
    ladder.require_real()?;
    let m = ladder.m;
    let min_poly = minimal_polynomial(&t, m)?;

    let mut groups = Vec::new();
    if m == n {
        groups.push(MultiplicityGroup { q: 1, count: m, factor: min_poly.clone() });
    } else {
        let t = t.truncated(2 * m)?;
        let s = power_sums_from_coeffs(&min_poly, 2 * m)?;
        let mut remaining = m;
        for q in 1..=(n - m + 1) as u64 {
            let tq = deflated_moments(&t, &s, q)?;
            let rank = build_hankel(&tq, m)?.rank();
            let count = m - rank;
            if count == 0 {
                continue;
            }
            let factor = if count == m {
                min_poly.clone()
            } else {
                min_poly.div_exact(&auxiliary_polynomial(&tq, rank)?)?
            };
            if factor.degree() != count {
                return Err(Error::ReconstructionFailure);
            }
            groups.push(MultiplicityGroup { q, count, factor });
            remaining = remaining.checked_sub(count).ok_or(Error::ReconstructionFailure)?;
            if remaining == 0 {
                break;
            }
        }
    }

    let spectrum = MultiplicitySpectrum { n, m, groups, min_poly, ladder };
    let distinct: usize = spectrum.groups.iter().map(|g| g.count).sum();
    let total: u64 = spectrum.groups.iter().map(|g| g.count as u64 * g.q).sum();
    if distinct != m || total != n as u64 || spectrum.reconstruct() != *cp {
        return Err(Error::ReconstructionFailure);
    }
    Ok(spectrum)
}

/// Outcome of checking the vanishing Hankel determinants of every deflated
/// sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyReport {
    /// For each multiplicity, the orders `k` at which `det H_k(t^(q)) = 0` was verified.
    pub vanishing: Vec<(u64, Vec<usize>)>,
    /// Independent relations: one fewer than the vanishings per group.
    pub count: usize,
    pub expected: usize,
}

pub fn syzygy_check(cp: &Poly, spectrum: &MultiplicitySpectrum) -> Result<SyzygyReport> {
    let m = spectrum.m;
    let t = power_sums_from_coeffs(cp, 2 * m)?;
    let s = power_sums_from_coeffs(&spectrum.min_poly, 2 * m)?;
    let mut vanishing = Vec::with_capacity(spectrum.groups.len());
    let mut count = 0;
    for g in &spectrum.groups {
        let tq = deflated_moments(&t, &s, g.q)?;
        let h = build_hankel(&tq, m)?;
        let mut orders = Vec::with_capacity(g.count);
        for k in (m - g.count + 1)..=m {
            let idx: Vec<usize> = (0..k).collect();
            let det = h.select(&idx, &idx).det()?;
            if det != Rational::ZERO {
                return Err(Error::SyzygyViolation { q: g.q, order: k, value: det.to_string() });
            }
            orders.push(k);
        }
        count += orders.len() - 1;
        vanishing.push((g.q, orders));
    }
    let expected = m - spectrum.l();
    if count != expected {
        return Err(Error::SyzygyViolation {
            q: 0,
            order: count,
            value: format!("expected {expected} relations"),
        });
    }
    Ok(SyzygyReport { vanishing, count, expected })
}

/// `H_m^{-1}` for callers that want the matrix itself.
pub fn inverse_hankel(t: &MomentSeq, m: usize) -> Result<ExactMatrix> {
    build_hankel(t, m)?.inverse().map_err(|e| match e {
        Error::Singular => Error::SingularHankel(m),
        other => other,
    })
}
