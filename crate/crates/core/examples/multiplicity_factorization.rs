//! Split a characteristic polynomial into one square-free factor per
//! multiplicity, using rational operations on the coefficients only.

use hankel_spectra::exact::{int, Poly};
use hankel_spectra::factor::{multiplicity_spectrum, syzygy_check};

fn main() {
    // Roots 4 and -1 twice each, 0 three times, 7 and 9 once.
    let roots = [4, 4, -1, -1, 0, 0, 0, 7, 9].map(int);
    let cp = Poly::from_roots(&roots);
    let spectrum = multiplicity_spectrum(&cp).unwrap();

    println!("n = {}, m = {}", spectrum.n, spectrum.m);
    for g in &spectrum.groups {
        println!("  multiplicity {}: {} root(s), Q = {}", g.q, g.count, g.factor);
    }
    assert_eq!(spectrum.reconstruct(), cp);
    println!("product of Q^q reproduces the input");

    let syz = syzygy_check(&cp, &spectrum).unwrap();
    println!("verified determinant relations: {} (expected {})", syz.count, syz.expected);
}
