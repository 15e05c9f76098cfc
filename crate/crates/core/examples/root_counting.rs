use hankel_spectra::exact::{int, rat, Poly};
use hankel_spectra::hankel::HankelSequence;
use hankel_spectra::moments::power_sums_from_coeffs;

fn main() {
    let cp = Poly::from_roots(&[-4, -1, -1, 2, 3, 3, 3, 8].map(int));
    let t = power_sums_from_coeffs(&cp, 16).unwrap();
    let seq = HankelSequence::new(&t, 5).unwrap();

    let intervals = [(rat(-5, 1), rat(0, 1)), (rat(1, 2), rat(7, 2)), (rat(-10, 1), rat(10, 1)), (rat(4, 1), rat(7, 1))];
    for (a, b) in intervals {
        println!("distinct roots in ]{a}, {b}[: {}", seq.count(&a, &b).unwrap());
    }
}
