use hankel_spectra::exact::{int, Poly};
use hankel_spectra::factor::{minimal_polynomial, real_minimal_polynomial};
use hankel_spectra::hankel::distinct_root_count;
use hankel_spectra::moments::{power_sums_from_coeffs, MomentSeq};

fn main() {
    let cp = Poly::from_roots(&[0, 0, 0, 2, 5, 5].map(int));
    println!("characteristic polynomial: {cp}");
    println!("minimal polynomial:        {}", real_minimal_polynomial(&cp).unwrap());

    // Starting from moments alone, e.g. traces measured from a matrix.
    let t: MomentSeq = power_sums_from_coeffs(&cp, 12).unwrap();
    let m = distinct_root_count(&t, cp.degree()).unwrap();
    let pm = minimal_polynomial(&t, m).unwrap();
    println!("from traces, m = {m}: {pm}");
}
