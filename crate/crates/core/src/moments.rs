//! Moment sequences `t_k = Σ r_i p_i^k` and conversions between power sums,
//! elementary symmetric functions and characteristic polynomials.

use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::exact::{ComplexRational, Poly};

/// Weighted power sums `t_0, t_1, ...` together with the degree of the
/// polynomial or matrix they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSeq {
    values: Vec<Rational>,
    source_degree: usize,
}

impl MomentSeq {
    pub fn new(values: Vec<Rational>, source_degree: usize) -> Self {
        MomentSeq { values, source_degree }
    }

    /// Moments of an explicit weighted point set, `t_k = Σ w_i x_i^k`.
    pub fn from_weighted_points(points: &[(Rational, Rational)], count: usize) -> Self {
        let mut values = vec![Rational::ZERO; count];
        for (x, w) in points {
            let mut power = w.clone();
            for v in values.iter_mut() {
                *v += &power;
                power *= x;
            }
        }
        let degree = points.iter().map(|(_, w)| w).sum::<Rational>();
        let degree = usize::try_from(&degree).unwrap_or(points.len());
        MomentSeq { values, source_degree: degree }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn source_degree(&self) -> usize {
        self.source_degree
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn require(&self, needed: usize) -> Result<()> {
        if self.values.len() < needed {
            Err(Error::InsufficientMoments { needed, have: self.values.len() })
        } else {
            Ok(())
        }
    }

    /// The first `count` values; errors if fewer are available.
    pub fn truncated(&self, count: usize) -> Result<MomentSeq> {
        self.require(count)?;
        Ok(MomentSeq { values: self.values[..count].to_vec(), source_degree: self.source_degree })
    }
}

/// Power sums `t_0..t_{count-1}` of the roots of a monic polynomial,
/// counted with multiplicity, by Newton's identities.
pub fn power_sums_from_coeffs(p: &Poly, count: usize) -> Result<MomentSeq> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = p.degree();
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    let a = p.coeffs();
    let mut t: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        let value = if k == 0 {
            Rational::from(n)
        } else {
            let mut acc = if k <= n { -(Rational::from(k) * &a[n - k]) } else { Rational::ZERO };
            for j in 1..k.min(n + 1) {
                acc -= &a[n - j] * &t[k - j];
            }
            acc
        };
        t.push(value);
    }
    Ok(MomentSeq::new(t, n))
}

/// Elementary symmetric functions `σ_1..σ_m` from power sums `s_0..s_m`.
pub fn elementary_from_power_sums(s: &MomentSeq, m: usize) -> Result<Vec<Rational>> {
    if s.len() < m + 1 {
        return Err(Error::LengthMismatch(format!(
            "need {} power sums for {m} elementary functions, have {}",
            m + 1,
            s.len()
        )));
    }
    if *s.get(0) != m {
        return Err(Error::LengthMismatch(format!("s_0 = {} but m = {m}", s.get(0))));
    }
    let mut sigma = vec![Rational::ONE];
    for k in 1..=m {
        let mut acc = Rational::ZERO;
        for i in 1..=k {
            let term = &sigma[k - i] * s.get(i);
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        sigma.push(acc / Rational::from(k));
    }
    sigma.remove(0);
    Ok(sigma)
}

/// The monic degree-`n` polynomial whose power sums are `t`.
pub fn charpoly_from_traces(t: &MomentSeq, n: usize) -> Result<Poly> {
    let sigma = elementary_from_power_sums(t, n)?;
    let mut coeffs = vec![Rational::ZERO; n + 1];
    coeffs[n] = Rational::ONE;
    for (k, s) in sigma.into_iter().enumerate() {
        let k = k + 1;
        coeffs[n - k] = if k % 2 == 1 { -s } else { s };
    }
    Ok(Poly::new(coeffs))
}

/// A square matrix with complex rational entries, checked to be Hermitian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianInput {
    size: usize,
    entries: Vec<ComplexRational>,
}

impl HermitianInput {
    pub fn new(rows: Vec<Vec<ComplexRational>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::InvalidInput("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != size) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {size}",
                rows[bad].len()
            )));
        }
        for i in 0..size {
            for j in i..size {
                if rows[i][j] != rows[j][i].conj() {
                    return Err(Error::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(HermitianInput { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let size = values.len();
        let mut entries = vec![ComplexRational::zero(); size * size];
        for (i, v) in values.iter().enumerate() {
            entries[i * size + i] = ComplexRational::real(v.clone());
        }
        HermitianInput { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &ComplexRational {
        &self.entries[i * self.size + j]
    }

    fn mul(&self, a: &[ComplexRational], b: &[ComplexRational]) -> Vec<ComplexRational> {
        let n = self.size;
        let mut out = vec![ComplexRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = &a[i * n + k];
                if *x == ComplexRational::zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = &out[i * n + j] + &(x * &b[k * n + j]);
                }
            }
        }
        out
    }

    /// Characteristic polynomial `det(xI - H)`, via traces of powers.
    pub fn characteristic_polynomial(&self) -> Result<Poly> {
        charpoly_from_traces(&traces_from_matrix(self, self.size + 1)?, self.size)
    }
}

/// Exact traces `tr H^0 .. tr H^{count-1}`.
pub fn traces_from_matrix(h: &HermitianInput, count: usize) -> Result<MomentSeq> {
    let n = h.size();
    let mut values = Vec::with_capacity(count);
    let mut power: Option<Vec<ComplexRational>> = None;
    for k in 0..count {
        let trace = match &power {
            None => ComplexRational::real(Rational::from(n)),
            Some(p) => (0..n).fold(ComplexRational::zero(), |acc, i| &acc + &p[i * n + i]),
        };
        if !trace.is_real() {
            return Err(Error::ComplexTrace(k));
        }
        values.push(trace.re);
        if k + 1 < count {
            power = Some(match power {
                None => h.entries.clone(),
                Some(p) => h.mul(&p, &h.entries),
            });
        }
    }
    Ok(MomentSeq::new(values, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn c(re: i64, im: i64) -> ComplexRational {
        ComplexRational::new(int(re), int(im))
    }

    #[test]
    fn power_sum_examples() {
        let t = power_sums_from_coeffs(&Poly::from_i64s(&[2, -3, 1]), 4).unwrap();
        assert_eq!(t.values(), ints(&[2, 3, 5, 9]));
        let t = power_sums_from_coeffs(&Poly::from_i64s(&[-2, 5, -4, 1]), 6).unwrap();
        assert_eq!(t.values(), ints(&[3, 4, 6, 10, 18, 34]));
        let t = power_sums_from_coeffs(&Poly::from_i64s(&[0, 0, 0, 0, 1]), 7).unwrap();
        assert_eq!(t.values(), ints(&[4, 0, 0, 0, 0, 0, 0]));
        assert_eq!(power_sums_from_coeffs(&Poly::from_i64s(&[1, 2]), 3), Err(Error::NotMonic));
    }

    #[test]
    fn elementary_examples() {
        let s = MomentSeq::new(ints(&[2, 3, 5]), 2);
        assert_eq!(elementary_from_power_sums(&s, 2).unwrap(), ints(&[3, 2]));
        let s = MomentSeq::new(ints(&[3, 6, 14, 36]), 3);
        assert_eq!(elementary_from_power_sums(&s, 3).unwrap(), ints(&[6, 11, 6]));
        let s = MomentSeq::new(ints(&[4, 0, 0, 0, 0]), 4);
        assert_eq!(elementary_from_power_sums(&s, 4).unwrap(), ints(&[0, 0, 0, 0]));
        assert!(matches!(
            elementary_from_power_sums(&MomentSeq::new(ints(&[2, 3]), 2), 2),
            Err(Error::LengthMismatch(_))
        ));
    }

    #[test]
    fn charpoly_examples() {
        let p = charpoly_from_traces(&MomentSeq::new(ints(&[2, 3, 5]), 2), 2).unwrap();
        assert_eq!(p, Poly::from_i64s(&[2, -3, 1]));
        let p = charpoly_from_traces(&MomentSeq::new(vec![int(1), rat(7, 3)], 1), 1).unwrap();
        assert_eq!(p, Poly::new(vec![rat(-7, 3), int(1)]));
        let p = charpoly_from_traces(&MomentSeq::new(ints(&[3, 4, 6, 10]), 3), 3).unwrap();
        assert_eq!(p, Poly::from_i64s(&[-2, 5, -4, 1]));
    }

    #[test]
    fn trace_examples() {
        let h = HermitianInput::diagonal(&ints(&[1, 1, 2]));
        assert_eq!(traces_from_matrix(&h, 4).unwrap().values(), ints(&[3, 4, 6, 10]));
        let z = HermitianInput::new(vec![vec![c(0, 0), c(0, 0)], vec![c(0, 0), c(0, 0)]]).unwrap();
        assert_eq!(traces_from_matrix(&z, 3).unwrap().values(), ints(&[2, 0, 0]));
        let y = HermitianInput::new(vec![vec![c(0, 0), c(0, 1)], vec![c(0, -1), c(0, 0)]]).unwrap();
        assert_eq!(traces_from_matrix(&y, 3).unwrap().values(), ints(&[2, 0, 2]));
        assert_eq!(y.characteristic_polynomial().unwrap(), Poly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn hermitian_validation() {
        let bad = HermitianInput::new(vec![vec![c(0, 0), c(1, 1)], vec![c(1, 1), c(0, 0)]]);
        assert_eq!(bad, Err(Error::NotHermitian { row: 0, col: 1 }));
        let bad_diag = HermitianInput::new(vec![vec![c(1, 1)]]);
        assert_eq!(bad_diag, Err(Error::NotHermitian { row: 0, col: 0 }));
    }

    fn monic(coeffs: Vec<i64>) -> Poly {
        let mut c = ints(&coeffs);
        c.push(int(1));
        Poly::new(c)
    }

    proptest! {
        #[test]
        fn newton_round_trip(coeffs in prop::collection::vec(-9i64..=9, 1..=10)) {
            let p = monic(coeffs);
            let n = p.degree();
            let t = power_sums_from_coeffs(&p, n + 1).unwrap();
            prop_assert_eq!(charpoly_from_traces(&t, n).unwrap(), p);
        }

        #[test]
        fn elementary_inverts_power_sums(sigma in prop::collection::vec(-6i64..=6, 1..=8)) {
            let m = sigma.len();
            let mut coeffs = vec![Rational::ZERO; m + 1];
            coeffs[m] = Rational::ONE;
            for (k, s) in sigma.iter().enumerate() {
                let k = k + 1;
                coeffs[m - k] = if k % 2 == 1 { -int(*s) } else { int(*s) };
            }
            let t = power_sums_from_coeffs(&Poly::new(coeffs), m + 1).unwrap();
            prop_assert_eq!(elementary_from_power_sums(&t, m).unwrap(), ints(&sigma));
        }

        #[test]
        fn diagonal_traces_match_newton(diag in prop::collection::vec(-7i64..=7, 1..=6)) {
            let values = ints(&diag);
            let h = HermitianInput::diagonal(&values);
            let count = 2 * diag.len() + 1;
            let p = Poly::from_roots(&values);
            prop_assert_eq!(
                traces_from_matrix(&h, count).unwrap(),
                power_sums_from_coeffs(&p, count).unwrap()
            );
        }

        #[test]
        fn hermitian_traces_are_real(
            n in 1usize..=4,
            raw in prop::collection::vec((-5i64..=5, -5i64..=5), 16)
        ) {
            let mut rows = vec![vec![ComplexRational::zero(); n]; n];
            for i in 0..n {
                for j in i..n {
                    let (re, im) = raw[i * 4 + j];
                    let v = if i == j { c(re, 0) } else { c(re, im) };
                    rows[j][i] = v.conj();
                    rows[i][j] = v;
                }
            }
            let h = HermitianInput::new(rows).unwrap();
            prop_assert!(traces_from_matrix(&h, 2 * n + 1).is_ok());
        }
    }
}
