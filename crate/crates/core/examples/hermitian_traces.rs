//! Traces of powers of a complex Hermitian matrix, and what they reveal.

use hankel_spectra::exact::{rat, ComplexRational as C, Rational};
use hankel_spectra::factor::multiplicity_spectrum;
use hankel_spectra::hankel::hankel_ladder;
use hankel_spectra::moments::{traces_from_matrix, HermitianInput};

fn c(re: i64, im: i64) -> C {
    C::new(Rational::from(re), Rational::from(im))
}

fn main() {
    // [[2, i, 0], [-i, 2, 0], [0, 0, 3]] has eigenvalues 1, 3, 3.
    let h = HermitianInput::new(vec![
        vec![c(2, 0), c(0, 1), c(0, 0)],
        vec![c(0, -1), c(2, 0), c(0, 0)],
        vec![c(0, 0), c(0, 0), C::real(rat(3, 1))],
    ])
    .unwrap();

    let t = traces_from_matrix(&h, 6).unwrap();
    println!("tr H^k: {}", t.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    println!("distinct eigenvalues: {}", hankel_ladder(&t, 3).unwrap().m);

    let cp = h.characteristic_polynomial().unwrap();
    println!("characteristic polynomial: {cp}");
    for g in multiplicity_spectrum(&cp).unwrap().groups {
        println!("multiplicity {}: {}", g.q, g.factor);
    }
}
