//! How many distinct eigenvalues does an operator have? Only its traces are needed.

use hankel_spectra::exact::{int, Poly};
use hankel_spectra::hankel::hankel_ladder;
use hankel_spectra::moments::power_sums_from_coeffs;

fn main() {
    // (x - 1)^2 (x - 3)(x + 2)^3
    let roots = [1, 1, 3, -2, -2, -2].map(int);
    let cp = Poly::from_roots(&roots);
    let n = cp.degree();

    let t = power_sums_from_coeffs(&cp, 2 * n).unwrap();
    println!("traces t_0..t_{}: {:?}", 2 * n - 1, t.values().iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let ladder = hankel_ladder(&t, n).unwrap();
    for (k, d) in ladder.dets.iter().enumerate() {
        println!("D_{} = {d}", k + 1);
    }
    println!("distinct roots: {} (real-rooted: {})", ladder.m, ladder.valid_real);

    // A complex pair shows up as a determinant with the wrong sign.
    let complex = Poly::from_i64s(&[5, -2, 1]); // roots 1 ± 2i
    let ladder = hankel_ladder(&power_sums_from_coeffs(&complex, 4).unwrap(), 2).unwrap();
    println!("x^2 - 2x + 5: dets {:?}, valid_real = {}", ladder.dets.iter().map(|d| d.to_string()).collect::<Vec<_>>(), ladder.valid_real);
}
