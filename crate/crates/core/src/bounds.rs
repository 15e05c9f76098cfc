//! Certified monotone iterations: lower bounds on the minimal eigenvalue gap
//! and outer bounds on the extreme eigenvalues.
//!
//! Both iterations are Newton's method started outside the root hull of a
//! real-rooted polynomial: on `G(y) = Π_{i<j} (y - (p_i - p_j)^2)` from the
//! left for the gap, and on the minimal polynomial for the extremes. Newton's
//! map is increasing there, so every iterate stays on the starting side and
//! rounding an iterate further outward never breaks the bound.

use std::cmp::Ordering;
use std::fmt;

use malachite_base::num::arithmetic::traits::{Ceiling, Lcm, Mod, Sign};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::exact::{
    ceil_sqrt_integer, ln_bounds, Fraction, power_of_ten, resultant,
    shifted_poly, sqrt_lower, Poly, ZPoly,
};
use crate::factor::real_minimal_polynomial;
use crate::moments::power_sums_from_coeffs;

/// Decimal digits kept when a certified square root is reported.
const SQRT_DIGITS: u64 = 40;

/// Monic `G(y)` whose roots are the squared differences `(p_i - p_j)^2`,
/// `i < j`, of the roots of a square-free `pm`.
pub fn squared_difference_poly(pm: &Poly) -> Result<Poly> {
    let m = pm.degree();
    if m < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: m });
    }
    let r = resultant(&ZPoly::from_poly(pm), &shifted_poly(pm));
    let coeffs = r.coeffs();
    if coeffs.len() != m * m + 1 || coeffs[..m].iter().any(|c| *c != Rational::ZERO) {
        return Err(Error::NonzeroRemainder);
    }
    let stripped = &coeffs[m..];
    if stripped.iter().skip(1).step_by(2).any(|c| *c != Rational::ZERO) {
        return Err(Error::OddPartNonzero);
    }
    Ok(Poly::new(stripped.iter().step_by(2).cloned().collect()).to_monic())
}

/// One gap step `ε² - G(ε²)/G'(ε²)`, evaluated literally.
pub fn gap_iterate(g: &Poly, eps_sq: &Rational) -> Result<Rational> {
    newton_step(g, eps_sq)
}

/// One extremal step `c - P(c)/P'(c)`.
pub fn extremal_iterate(pm: &Poly, c: &Rational) -> Result<Rational> {
    newton_step(pm, c)
}

fn newton_step(p: &Poly, x: &Rational) -> Result<Rational> {
    let d = p.derivative().eval(x);
    if d == Rational::ZERO {
        return Err(Error::DerivativeZero);
    }
    Ok(x - p.eval(x) / d)
}

/// `c + (Σ 1/(f_i - c))^{-1}` over explicit values `f_i`.
///
/// With `f_i` the roots this is the extremal step; with `f_i` the squared
/// root differences it is the gap step. Useful for checking either against
/// the polynomial form when the values are known.
pub fn reciprocal_sum_step(values: &[Rational], c: &Rational) -> Result<Rational> {
    let mut sum = Rational::ZERO;
    for f in values {
        let d = f - c;
        if d == Rational::ZERO {
            return Err(Error::DerivativeZero);
        }
        sum += Rational::ONE / d;
    }
    if sum == Rational::ZERO {
        return Err(Error::DerivativeZero);
    }
    Ok(c + Rational::ONE / sum)
}

/// Newton's map `x - A(x)/B(x)` for `p`, with `A = p/g`, `B = p'/g` and
/// `g = gcd(p, p')`, stored as integer coefficient vectors under one common
/// scale. `P = xB - A` is the numerator of the map. Steps evaluate `A`, `P`
/// and `B` homogeneously at `num/den`, so no rational normalization happens
/// inside the loop.
#[derive(Clone, Debug)]
struct NewtonMap {
    a: Vec<Integer>,
    p: Vec<Integer>,
    b: Vec<Integer>,
    /// `deg A`; `B` has degree `deg A - 1`.
    degree: usize,
}

/// Two primes below 2^61 for the root filter.
const FILTER_PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 2_305_843_009_213_693_921];

impl NewtonMap {
    fn new(poly: &Poly) -> Self {
        let dp = poly.derivative();
        let g = poly.gcd(&dp);
        let a = poly.div_exact(&g).expect("gcd divides p");
        let b = dp.div_exact(&g).expect("gcd divides p'");
        let degree = a.degree();
        let (a, b) = common_integer_scale(&a, &b);
        let mut p: Vec<Integer> = std::iter::once(Integer::ZERO).chain(b.iter().cloned()).collect();
        p.resize(degree + 1, Integer::ZERO);
        for (pi, ai) in p.iter_mut().zip(&a) {
            *pi -= ai;
        }
        NewtonMap { a, p, b, degree }
    }

    /// `den^deg · f(num/den)` with `den_pows[k] = den^k`.
    fn homogeneous(coeffs: &[Integer], deg: usize, num: &Integer, den_pows: &[Integer]) -> Integer {
        let mut acc = coeffs.get(deg).cloned().unwrap_or(Integer::ZERO);
        for i in (0..deg).rev() {
            if acc != 0u32 {
                acc *= num;
            }
            if let Some(c) = coeffs.get(i).filter(|c| **c != 0u32) {
                acc += c * &den_pows[deg - i];
            }
        }
        acc
    }

    fn residue(x: &Integer, prime: u64) -> u128 {
        let r = Integer::from(prime);
        let m = x.mod_op(&r);
        u128::from(u64::try_from(&m).expect("residue fits"))
    }

    /// Whether `A(num/den) = 0`, screened modulo two primes before the
    /// exact evaluation.
    fn is_root(&self, x: &Fraction, den_pows: &[Integer]) -> bool {
        for prime in FILTER_PRIMES {
            let q = u128::from(prime);
            let (n, d) = (Self::residue(x.numerator(), prime), Self::residue(x.denominator(), prime));
            let mut acc = 0u128;
            let mut dpow = vec![1u128; self.degree + 1];
            for k in 1..=self.degree {
                dpow[k] = dpow[k - 1] * d % q;
            }
            for i in (0..=self.degree).rev() {
                let c = Self::residue(&self.a[i], prime);
                acc = (acc * n % q + c * dpow[self.degree - i]) % q;
            }
            if acc != 0 {
                return false;
            }
        }
        Self::homogeneous(&self.a, self.degree, x.numerator(), den_pows) == 0u32
    }

    fn den_powers(&self, den: &Integer) -> Vec<Integer> {
        let mut pows = Vec::with_capacity(self.degree + 1);
        pows.push(Integer::ONE);
        for k in 1..=self.degree {
            let next = &pows[k - 1] * den;
            pows.push(next);
        }
        pows
    }

    /// `None` when `x` is a root of the polynomial.
    fn step(&self, x: &Fraction) -> Result<Option<Fraction>> {
        let den_pows = self.den_powers(x.denominator());
        if self.is_root(x, &den_pows) {
            return Ok(None);
        }
        let ph = Self::homogeneous(&self.p, self.degree, x.numerator(), &den_pows);
        let bh = Self::homogeneous(&self.b, self.degree - 1, x.numerator(), &den_pows);
        if bh == 0u32 {
            return Err(Error::DerivativeZero);
        }
        // P(x)/B(x) = (ph / den^d) / (bh / den^(d-1)) = ph / (den * bh)
        Ok(Some(Fraction::new(ph, bh * x.denominator())))
    }
}

/// Integer coefficient vectors `λA`, `λB` for one common `λ > 0`.
fn common_integer_scale(a: &Poly, b: &Poly) -> (Vec<Integer>, Vec<Integer>) {
    let lcm = a
        .coeffs()
        .iter()
        .chain(b.coeffs())
        .fold(Natural::ONE, |acc, c| acc.lcm(c.denominator_ref()));
    let scale = Rational::from(lcm);
    let lift = |p: &Poly| {
        p.coeffs()
            .iter()
            .map(|c| Integer::try_from(c * &scale).expect("denominators cleared"))
            .collect()
    };
    (lift(a), lift(b))
}

/// Exact gap iterates `ε_k²` for one minimal polynomial.
///
/// Iterates are unreduced [`Fraction`]s: reducing them would cost a gcd on
/// numbers that grow by a factor of `deg A` in size every step.
#[derive(Clone, Debug)]
pub struct GapEngine {
    gap_poly: Poly,
    map: NewtonMap,
}

impl GapEngine {
    pub fn new(pm: &Poly) -> Result<Self> {
        Ok(Self::from_gap_poly(squared_difference_poly(pm)?))
    }

    /// Engine for an explicit real-rooted `G`, approached from the left.
    pub fn from_gap_poly(gap_poly: Poly) -> Self {
        let map = NewtonMap::new(&gap_poly);
        GapEngine { gap_poly, map }
    }

    pub fn gap_poly(&self) -> &Poly {
        &self.gap_poly
    }

    /// The next iterate, or `None` when `eps_sq` is already a root of `G`.
    pub fn step(&self, eps_sq: &Fraction) -> Result<Option<Fraction>> {
        self.map.step(eps_sq)
    }

    /// `ε_0² = 0, ..., ε_k²` without rounding; shorter if a root is hit.
    pub fn exact_iterates(&self, k: usize) -> Result<Vec<Fraction>> {
        let mut out = vec![Fraction::zero()];
        while out.len() <= k {
            match self.step(out.last().unwrap())? {
                Some(next) => out.push(next),
                None => break,
            }
        }
        Ok(out)
    }
}

/// Stopping rule and rational size control shared by the iterations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterOptions {
    pub tol: Rational,
    /// `None` picks a default from the degree and tolerance.
    pub max_iter: Option<usize>,
    /// Round iterates outward to a `10^-d` grid once their denominator
    /// exceeds `10^d`. `None` keeps every iterate exact.
    pub round_digits: Option<u64>,
    /// Stop the gap iteration once `(ε_{k+1}² - ε_k²) / ε_{k+1}² < tol`
    /// instead of comparing the step with `tol²`.
    pub relative: bool,
}

impl Default for IterOptions {
    fn default() -> Self {
        IterOptions {
            tol: Rational::from_signeds(1, 1_000_000),
            max_iter: None,
            round_digits: Some(64),
            relative: false,
        }
    }
}

impl IterOptions {
    pub fn with_tol(tol: Rational) -> Self {
        IterOptions { tol, ..Self::default() }
    }

    /// Relative stopping rule for the gap iteration.
    pub fn relative(tol: Rational) -> Self {
        IterOptions { tol, relative: true, ..Self::default() }
    }

    /// Exact iterates, no rounding.
    pub fn exact(self) -> Self {
        IterOptions { round_digits: None, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.tol.sign() != Ordering::Greater {
            return Err(Error::InvalidInput(format!("tolerance must be positive, got {}", self.tol)));
        }
        Ok(())
    }
}

/// Upper bound on `ln(1/tol)`, at least zero.
fn ln_inverse_upper(tol: &Rational) -> Rational {
    let ln = ln_bounds(&(Rational::ONE / tol), 32).hi;
    if ln.sign() == Ordering::Less {
        Rational::ZERO
    } else {
        ln
    }
}

fn ceil_usize(x: &Rational) -> usize {
    let c: Integer = x.ceiling();
    usize::try_from(&c).unwrap_or(usize::MAX)
}

/// Default gap iteration budget, `ceil(2·(7/4)(m-1)·ln(1/tol))`.
pub fn default_gap_max_iter(m: usize, tol: &Rational) -> usize {
    let budget = Rational::from_signeds(7, 2) * Rational::from(m.saturating_sub(1)) * ln_inverse_upper(tol);
    ceil_usize(&budget).max(1)
}

/// Certified lower bounds `ε_k` on the minimal gap between distinct eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapIteration {
    /// `ε_0² = 0, ε_1², ...`, strictly increasing.
    pub eps_sq: Vec<Rational>,
    pub converged: bool,
    /// The last iterate is a root of `G`, so it equals `μ²`.
    pub exact_hit: bool,
    /// A rational `≤ ε_K ≤ μ`.
    pub certified_lower: Rational,
    pub gap_poly: Poly,
    /// Whether any iterate was rounded down.
    pub rounded: bool,
}

impl GapIteration {
    pub fn iterations(&self) -> usize {
        self.eps_sq.len() - 1
    }

    pub fn last_eps_sq(&self) -> &Rational {
        self.eps_sq.last().expect("eps_0 is always present")
    }
}

/// Gap iteration for a real-rooted characteristic polynomial.
pub fn min_gap(cp: &Poly, opts: &IterOptions) -> Result<GapIteration> {
    let pm = real_minimal_polynomial(cp)?;
    gap_from_min_poly(&pm, opts)
}

/// Gap iteration when the minimal polynomial is already known.
pub fn gap_from_min_poly(pm: &Poly, opts: &IterOptions) -> Result<GapIteration> {
    opts.validate()?;
    let m = pm.degree();
    if m < 2 {
        return Err(Error::SingleEigenvalue);
    }
    let engine = GapEngine::new(pm)?;
    let max_iter = opts.max_iter.unwrap_or_else(|| default_gap_max_iter(m, &opts.tol));
    let tol_sq = Fraction::from_rational(&(&opts.tol * &opts.tol));
    let small_step = |step: &Fraction, next: &Fraction| {
        if opts.relative {
            *step < next.scale(&opts.tol)
        } else {
            *step < tol_sq
        }
    };
    let grid = opts.round_digits.map(power_of_ten);

    let mut eps_sq = vec![Rational::ZERO];
    let mut current = Fraction::zero();
    let (mut converged, mut exact_hit, mut rounded) = (false, false, false);
    loop {
        let Some(next) = engine.step(&current)? else {
            converged = true;
            exact_hit = true;
            break;
        };
        if eps_sq.len() > max_iter {
            break;
        }
        let step = next.sub(&current);
        if step.sign() != Ordering::Greater {
            return Err(Error::DerivativeZero);
        }
        let next = match &grid {
            Some(g) if next.denominator_exceeds(g) => {
                rounded = true;
                Fraction::from_rational(&next.floor_to_grid(g))
            }
            _ => next,
        };
        if next <= current {
            // The step fell below the rounding grid.
            converged = small_step(&step, &current);
            break;
        }
        let done = small_step(&step, &next);
        eps_sq.push(next.to_rational());
        current = next;
        if done {
            converged = true;
            break;
        }
    }
    let gap_poly = engine.gap_poly;
    let certified_lower = sqrt_lower(eps_sq.last().unwrap(), SQRT_DIGITS);
    Ok(GapIteration { eps_sq, converged, exact_hit, certified_lower, gap_poly, rounded })
}

/// Which extreme eigenvalue an iteration approaches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Min,
    Max,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Min => "min",
            Side::Max => "max",
        })
    }
}

/// `mean ∓ r` with `r` the least integer whose square is at least
/// `D_2 = s_0 s_2 - s_1^2`; widened to `mean ∓ 1` when `m = 1`.
///
/// ```
/// use hankel_spectra::bounds::initial_outer_bounds;
/// use hankel_spectra::exact::{rat, Poly};
///
/// let pm = Poly::from_i64s(&[0, 3, -4, 1]); // roots 0, 1, 3
/// assert_eq!(initial_outer_bounds(&pm).unwrap(), (rat(-8, 3), rat(16, 3)));
/// ```
pub fn initial_outer_bounds(pm: &Poly) -> Result<(Rational, Rational)> {
    let m = pm.degree();
    let s = power_sums_from_coeffs(pm, 3)?;
    let mean = s.get(1) / Rational::from(m);
    let radius = if m == 1 {
        Rational::ONE
    } else {
        let d2 = s.get(0) * s.get(2) - s.get(1) * s.get(1);
        Rational::from(ceil_sqrt_integer(&d2))
    };
    Ok((&mean - &radius, &mean + &radius))
}

/// Monotone Newton sequence approaching an extreme eigenvalue from outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalIteration {
    pub side: Side,
    /// Iterates, all strictly outside the root hull.
    pub values: Vec<Rational>,
    /// The last iterate: strictly below `p_1` (min) or above `p_m` (max).
    pub certified_bound: Rational,
    /// Set when an iterate landed exactly on the extreme root.
    pub limit: Option<Rational>,
    pub converged: bool,
}

impl ExtremalIteration {
    pub fn iterations(&self) -> usize {
        self.values.len() - 1 + usize::from(self.limit.is_some())
    }
}

/// Default extremal budget: a linear phase from the initial radius plus the
/// tolerance-dependent tail, both scaled by the degree.
fn default_extremal_max_iter(m: usize, width: &Rational, tol: &Rational) -> usize {
    let ln_width = ln_bounds(&(width + Rational::ONE), 16).hi;
    let budget = Rational::from(2 * m) * (ln_width + ln_inverse_upper(tol)) + Rational::from(8);
    ceil_usize(&budget)
}

pub fn extremal_bound(pm: &Poly, side: Side, opts: &IterOptions) -> Result<ExtremalIteration> {
    opts.validate()?;
    if !pm.is_monic() || pm.degree() < 1 {
        return Err(Error::InvalidInput("extremal bounds need a monic polynomial of degree >= 1".into()));
    }
    let (low, high) = initial_outer_bounds(pm)?;
    let max_iter = opts
        .max_iter
        .unwrap_or_else(|| default_extremal_max_iter(pm.degree(), &(&high - &low), &opts.tol));
    let start = match side {
        Side::Min => low,
        Side::Max => high,
    };
    let map = NewtonMap::new(pm);
    let grid = opts.round_digits.map(power_of_ten);
    let tol = Fraction::from_rational(&opts.tol);

    let mut values = vec![start];
    let mut current = Fraction::from_rational(&values[0]);
    let (mut limit, mut converged) = (None, false);
    while values.len() <= max_iter {
        let next = map
            .step(&current)?
            .ok_or_else(|| Error::InvalidInput("extremal iterate is a root".into()))?;
        let den_pows = map.den_powers(next.denominator());
        if map.is_root(&next, &den_pows) {
            limit = Some(next.to_rational());
            converged = true;
            break;
        }
        let step = match side {
            Side::Min => next.sub(&current),
            Side::Max => current.sub(&next),
        };
        if step.sign() != Ordering::Greater {
            return Err(Error::DerivativeZero);
        }
        let next = match &grid {
            Some(g) if next.denominator_exceeds(g) => Fraction::from_rational(&match side {
                Side::Min => next.floor_to_grid(g),
                Side::Max => next.ceil_to_grid(g),
            }),
            _ => next,
        };
        if next == current {
            converged = step < tol;
            break;
        }
        values.push(next.to_rational());
        current = next;
        if step < tol {
            converged = true;
            break;
        }
    }
    let certified_bound = values.last().unwrap().clone();
    Ok(ExtremalIteration { side, values, certified_bound, limit, converged })
}
