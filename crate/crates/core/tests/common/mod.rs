//! Seeded spectra and brute-force oracles shared by the integration tests.
//!
//! Nothing here calls into the Hankel machinery: values are computed
//! straight from the constructed roots.

#![allow(dead_code)]

use malachite_base::num::arithmetic::traits::Pow;
use hankel_spectra::exact::{int, ComplexRational, Poly, Rational};
use hankel_spectra::moments::{HermitianInput, MomentSeq};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2024;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(stream);
    rng
}

/// Distinct integer eigenvalues in increasing order with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub roots: Vec<i64>,
    pub mults: Vec<u64>,
}

impl Spectrum {
    pub fn new(mut pairs: Vec<(i64, u64)>) -> Self {
        pairs.sort();
        let (roots, mults) = pairs.into_iter().unzip();
        Spectrum { roots, mults }
    }

    /// `m` distinct roots in `[-20, 20]`, multiplicities in `1..=4`.
    pub fn random(rng: &mut ChaCha8Rng, m: usize) -> Self {
        let pool: Vec<i64> = (-20..=20).collect();
        let pairs = pool
            .choose_multiple(rng, m)
            .map(|&p| (p, rng.gen_range(1..=4)))
            .collect();
        Spectrum::new(pairs)
    }

    pub fn m(&self) -> usize {
        self.roots.len()
    }

    pub fn n(&self) -> usize {
        self.mults.iter().sum::<u64>() as usize
    }

    /// Every eigenvalue repeated by its multiplicity.
    pub fn eigenvalues(&self) -> Vec<Rational> {
        self.roots
            .iter()
            .zip(&self.mults)
            .flat_map(|(&p, &r)| std::iter::repeat_n(int(p), r as usize))
            .collect()
    }

    pub fn charpoly(&self) -> Poly {
        Poly::from_roots(&self.eigenvalues())
    }

    pub fn traces(&self, count: usize) -> MomentSeq {
        let values = (0..count as u32)
            .map(|k| {
                self.roots
                    .iter()
                    .zip(&self.mults)
                    .map(|(&p, &r)| Rational::from(r) * int(p).pow(u64::from(k)))
                    .sum()
            })
            .collect();
        MomentSeq::new(values, self.n())
    }

    /// Smallest distance between distinct roots.
    pub fn min_gap(&self) -> i64 {
        self.roots.windows(2).map(|w| w[1] - w[0]).min().expect("m >= 2")
    }

    /// Squared differences over all pairs `i < j`.
    pub fn squared_differences(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for (i, &a) in self.roots.iter().enumerate() {
            for &b in &self.roots[i + 1..] {
                out.push(int((a - b) * (a - b)));
            }
        }
        out
    }

    pub fn diagonal(&self) -> HermitianInput {
        HermitianInput::diagonal(&self.eigenvalues())
    }

    /// `O D Oᵀ` for a rational orthogonal `O` built by the Cayley transform
    /// of a random skew-symmetric matrix.
    pub fn conjugated(&self, rng: &mut ChaCha8Rng) -> HermitianInput {
        let d = self.eigenvalues();
        let o = random_orthogonal(rng, d.len());
        let n = d.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let entry: Rational = (0..n).map(|k| &o[i][k] * &d[k] * &o[j][k]).sum();
                        ComplexRational::real(entry)
                    })
                    .collect()
            })
            .collect();
        HermitianInput::new(rows).expect("conjugate of a real diagonal is symmetric")
    }
}

pub fn random_spectra(stream: u64, count: usize, m_range: std::ops::RangeInclusive<usize>) -> Vec<Spectrum> {
    let mut rng = rng(stream);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(m_range.clone());
            Spectrum::random(&mut rng, m)
        })
        .collect()
}

/// Gauss-Jordan inverse over the rationals, for the Cayley transform only.
fn invert(mut a: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| int(i64::from(i == j))).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0u32).expect("I + S is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0u32 {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&f * &a[col][j], &f * &inv[col][j]);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    let mut s = vec![vec![int(0); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = Rational::from_signeds(rng.gen_range(-3..=3), rng.gen_range(1..=3));
            s[i][j] = v.clone();
            s[j][i] = -v;
        }
    }
    let plus: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| &s[i][j] + int(i64::from(i == j))).collect())
        .collect();
    let inv = invert(plus);
    // (I - S)(I + S)^{-1}
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| (int(i64::from(i == k)) - &s[i][k]) * &inv[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Subsets of `0..m` of size `k`.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if m < k {
        return Vec::new();
    }
    let mut out = subsets(m - 1, k);
    for mut s in subsets(m - 1, k - 1) {
        s.push(m - 1);
        out.push(s);
    }
    out
}

/// `D_k = Σ_S Π_{i∈S} r_i Π_{i<j∈S} (p_i - p_j)²` over `k`-subsets.
pub fn hankel_det_closed_form(s: &Spectrum, k: usize) -> Rational {
    subsets(s.m(), k)
        .into_iter()
        .map(|set| {
            let mut term = Rational::from(1u32);
            for (a, &i) in set.iter().enumerate() {
                term *= Rational::from(s.mults[i]);
                for &j in &set[a + 1..] {
                    let d = s.roots[i] - s.roots[j];
                    term *= int(d * d);
                }
            }
            term
        })
        .sum()
}

/// Euclidean gcd over Q, kept apart from the library's own.
pub fn euclid_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.to_monic()
}

/// Distinct roots strictly inside `]a, b[`.
pub fn roots_inside(s: &Spectrum, a: &Rational, b: &Rational) -> usize {
    s.roots.iter().filter(|&&p| *a < int(p) && int(p) < *b).count()
}

/// A monic polynomial with the complex pair `u ± vi` (`v ≠ 0`) and some
/// real roots.
pub fn complex_rooted(rng: &mut ChaCha8Rng) -> Poly {
    let u = rng.gen_range(-6..=6);
    let v = rng.gen_range(1..=5);
    let pair = Poly::from_i64s(&[u * u + v * v, -2 * u, 1]);
    let real: Vec<Rational> = (0..rng.gen_range(0..=3)).map(|_| int(rng.gen_range(-8..=8))).collect();
    &pair * &Poly::from_roots(&real)
}
