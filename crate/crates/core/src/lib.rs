//! Exact spectral analysis of Hermitian operators from the traces of their
//! powers.
//!
//! Given a characteristic polynomial, a Hermitian matrix with rational
//! entries, or the moments `t_k = tr H^k`, the crate answers questions about
//! the spectrum without computing a single eigenvalue:
//!
//! * the number of distinct eigenvalues and the minimal polynomial
//!   ([`hankel`], [`factor`]);
//! * one square-free factor per multiplicity ([`factor::multiplicity_spectrum`]);
//! * certified rational bounds on the smallest gap between eigenvalues and on
//!   the extreme eigenvalues ([`bounds`]);
//! * the number of eigenvalues in an interval ([`hankel::count_roots_in_interval`]);
//! * convergence rates of the gap iteration on equidistant spectra ([`rates`]);
//! * the ordered multiplicity sequence that labels a unitary-orbit class
//!   ([`orbit`]).
//!
//! All arithmetic is over exact rationals.
//!
//! ```
//! use hankel_spectra::exact::{int, Poly};
//! use hankel_spectra::factor::multiplicity_spectrum;
//!
//! let cp = Poly::from_roots(&[int(2), int(2), int(5)]);
//! let spectrum = multiplicity_spectrum(&cp).unwrap();
//! assert_eq!(spectrum.m, 2);
//! assert_eq!(spectrum.group_of(2).unwrap().factor, Poly::from_i64s(&[-2, 1]));
//! ```

pub mod error;
pub mod exact;
pub mod moments;
pub mod hankel;
pub mod factor;
pub mod bounds;
pub mod rates;
pub mod orbit;
pub mod cli;
