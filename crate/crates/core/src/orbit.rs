//! Orbit classes of Hermitian matrices.
//!
//! A lattice with spacing below the minimal eigenvalue gap puts every
//! distinct eigenvalue in its own half-open cell `]x_{j-1}, x_j]`. Locating
//! the roots of each multiplicity factor on that lattice recovers the order
//! in which multiplicities appear along the real line, which labels the
//! class. Unitary equivalence itself is decided by comparing traces.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use malachite_base::num::arithmetic::traits::{Floor, Sign};
use malachite_base::num::basic::traits::One;
use malachite_nz::integer::Integer;
use malachite_q::Rational;

use crate::bounds::{extremal_bound, gap_from_min_poly, GapIteration, IterOptions, Side};
use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::factor::{multiplicity_spectrum, MultiplicitySpectrum};
use crate::hankel::hankel_ladder;
use crate::moments::MomentSeq;

/// Largest lattice the classifier will scan.
pub const MAX_CELLS: usize = 1_000_000;

/// Sites `x_j = origin + j·step` for `j = 0..=cells`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    origin: Rational,
    step: Rational,
    cells: usize,
}

impl Lattice {
    /// The coarsest lattice from `origin` with the given step whose last
    /// site lies beyond `upper`: `cells = floor((upper - origin)/step + 1)`.
    pub fn new(origin: Rational, step: Rational, upper: &Rational) -> Result<Self> {
        if step.sign() != Ordering::Greater {
            return Err(Error::DegenerateGap);
        }
        if *upper <= origin {
            return Err(Error::InvalidInput(format!("empty bracket [{origin}, {upper}]")));
        }
        let count: Integer = ((upper - &origin) / &step + Rational::ONE).floor();
        let cells = usize::try_from(&count)
            .ok()
            .filter(|&c| c <= MAX_CELLS)
            .ok_or_else(|| Error::LatticeTooLarge(format!("{count} cells of width {step}")))?;
        Ok(Lattice { origin, step, cells })
    }

    pub fn origin(&self) -> &Rational {
        &self.origin
    }

    pub fn step(&self) -> &Rational {
        &self.step
    }

    /// Number of cells `M`.
    pub fn cells(&self) -> usize {
        self.cells
    }

    pub fn site(&self, j: usize) -> Rational {
        &self.origin + &self.step * Rational::from(j)
    }

    /// The last site `x_M`.
    pub fn end(&self) -> Rational {
        self.site(self.cells)
    }

    /// Index of the cell `]x_{j-1}, x_j]` holding `x`, if any.
    pub fn cell_of(&self, x: &Rational) -> Option<usize> {
        if *x <= self.origin || *x > self.end() {
            return None;
        }
        let scaled = (x - &self.origin) / &self.step;
        let below = usize::try_from(&scaled.clone().floor()).ok()?;
        Some(if scaled == below { below } else { below + 1 })
    }
}

/// Lattice for a spectrum from a certified gap bound and strict outer bounds.
pub fn build_lattice(
    spectrum: &MultiplicitySpectrum,
    gap: &GapIteration,
    lowb: &Rational,
    highb: &Rational,
) -> Result<Lattice> {
    if spectrum.m < 2 {
        return Err(Error::DegenerateGap);
    }
    Lattice::new(lowb.clone(), gap.certified_lower.clone(), highb)
}

/// Cells of `lat` holding a root of the square-free `factor`.
///
/// A sign change between consecutive sites marks a root. A root sitting on a
/// site belongs to the cell it closes, and the next cell is then tested
/// against the following site alone.
pub fn occupancy_set(factor: &Poly, lat: &Lattice) -> Result<BTreeSet<usize>> {
    let mut previous = factor.eval(lat.origin()).sign();
    if previous == Ordering::Equal {
        return Err(Error::RootOnOriginBoundary);
    }
    let mut consumed = false;
    let mut occupied = BTreeSet::new();
    for j in 1..=lat.cells() {
        let sign = factor.eval(&lat.site(j)).sign();
        if sign == Ordering::Equal {
            occupied.insert(j);
            consumed = true;
            continue;
        }
        if !consumed && sign != previous {
            occupied.insert(j);
        }
        consumed = false;
        previous = sign;
    }
    Ok(occupied)
}

/// Class label of a spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSignature {
    /// Multiplicities of the distinct eigenvalues in increasing order.
    pub ordered_multiplicities: Vec<u64>,
    /// Occupied cells per multiplicity.
    pub occupancy: BTreeMap<u64, BTreeSet<usize>>,
    /// `None` for a single distinct eigenvalue.
    pub lattice: Option<Lattice>,
}

/// Signature of a spectrum read off a given lattice.
pub fn signature_on_lattice(spectrum: &MultiplicitySpectrum, lattice: Lattice) -> Result<OrbitSignature> {
    let mut occupancy = BTreeMap::new();
    let mut by_cell = BTreeMap::new();
    for group in &spectrum.groups {
        let cells = occupancy_set(&group.factor, &lattice)?;
        if cells.len() != group.count {
            return Err(Error::OccupancyMismatch { expected: group.count, found: cells.len() });
        }
        for &cell in &cells {
            if by_cell.insert(cell, group.q).is_some() {
                return Err(Error::OccupancyMismatch { expected: spectrum.m, found: by_cell.len() });
            }
        }
        occupancy.insert(group.q, cells);
    }
    if by_cell.len() != spectrum.m {
        return Err(Error::OccupancyMismatch { expected: spectrum.m, found: by_cell.len() });
    }
    Ok(OrbitSignature {
        ordered_multiplicities: by_cell.into_values().collect(),
        occupancy,
        lattice: Some(lattice),
    })
}

/// Gap options for the lattice spacing: stop once a step adds less than a
/// sixteenth to `ε²`.
pub fn lattice_gap_options() -> IterOptions {
    IterOptions::relative(Rational::from_signeds(1, 16))
}

/// Signature of a spectrum, building its lattice from scratch.
pub fn spectrum_signature(spectrum: &MultiplicitySpectrum) -> Result<OrbitSignature> {
    if spectrum.m == 1 {
        return Ok(OrbitSignature {
            ordered_multiplicities: vec![spectrum.n as u64],
            occupancy: BTreeMap::from([(spectrum.n as u64, BTreeSet::new())]),
            lattice: None,
        });
    }
    let pm = &spectrum.min_poly;
    let gap = gap_from_min_poly(pm, &lattice_gap_options())?;
    let coarse = IterOptions::with_tol(Rational::from_signeds(1, 1000));
    let low = extremal_bound(pm, Side::Min, &coarse)?;
    let high = extremal_bound(pm, Side::Max, &coarse)?;
    let lattice = build_lattice(spectrum, &gap, &low.certified_bound, &high.certified_bound)?;
    signature_on_lattice(spectrum, lattice)
}

/// Class signature of a real-rooted characteristic polynomial.
///
/// ```
/// use hankel_spectra::exact::{int, Poly};
/// use hankel_spectra::orbit::class_signature;
///
/// let cp = Poly::from_roots(&[int(1), int(1), int(2), int(2), int(3)]);
/// assert_eq!(class_signature(&cp).unwrap().ordered_multiplicities, vec![2, 2, 1]);
/// ```
pub fn class_signature(cp: &Poly) -> Result<OrbitSignature> {
    spectrum_signature(&multiplicity_spectrum(cp)?)
}

/// Evidence for a trace comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceComparison {
    /// Distinct eigenvalue counts of the two inputs.
    pub m: (usize, usize),
    /// Number of leading traces compared, `2·max(m)`.
    pub compared: usize,
    pub first_difference: Option<usize>,
}

impl TraceComparison {
    pub fn same_orbit(&self) -> bool {
        self.first_difference.is_none()
    }
}

fn distinct_count(t: &MomentSeq) -> Result<usize> {
    let n = t.source_degree().max(1);
    Ok(hankel_ladder(t, n)?.m)
}

/// Compare `t_0..t_{2m-1}` where `m` is the larger distinct count of the two.
///
/// Using only one side's count is not enough: `diag(0, 0)` and `diag(-1, 1)`
/// agree on `t_0, t_1`.
pub fn compare_traces(tp: &MomentSeq, tq: &MomentSeq) -> Result<TraceComparison> {
    let m = (distinct_count(tp)?, distinct_count(tq)?);
    let compared = 2 * m.0.max(m.1);
    tp.require(compared)?;
    tq.require(compared)?;
    let first_difference = (0..compared).find(|&k| tp.get(k) != tq.get(k));
    Ok(TraceComparison { m, compared, first_difference })
}

/// Whether two Hermitian matrices with these traces are unitarily equivalent.
pub fn same_orbit(tp: &MomentSeq, tq: &MomentSeq) -> Result<bool> {
    Ok(compare_traces(tp, tq)?.same_orbit())
}

/// Whether two spectra carry the same ordered multiplicities.
pub fn same_class(cp: &Poly, cq: &Poly) -> Result<bool> {
    Ok(class_signature(cp)?.ordered_multiplicities == class_signature(cq)?.ordered_multiplicities)
}
