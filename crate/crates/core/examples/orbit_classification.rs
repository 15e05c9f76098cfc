use hankel_spectra::exact::{int, Poly};
use hankel_spectra::orbit::{class_signature, same_class, same_orbit};
use hankel_spectra::moments::power_sums_from_coeffs;

fn poly(roots: &[i64]) -> Poly {
    Poly::from_roots(&roots.iter().map(|&r| int(r)).collect::<Vec<_>>())
}

fn main() {
    let p = poly(&[-3, -3, 0, 5, 5, 5]);
    let q = poly(&[1, 1, 2, 10, 10, 10]);
    let r = poly(&[0, 0, 0, 1, 4, 4]);

    for (name, cp) in [("p", &p), ("q", &q), ("r", &r)] {
        let sig = class_signature(cp).unwrap();
        println!("{name}: multiplicities in eigenvalue order {:?}", sig.ordered_multiplicities);
    }
    println!("p ~ q (class): {}", same_class(&p, &q).unwrap());
    println!("p ~ r (class): {}", same_class(&p, &r).unwrap());

    let t = |cp: &Poly| power_sums_from_coeffs(cp, 12).unwrap();
    println!("p ~ q (orbit): {}", same_orbit(&t(&p), &t(&q)).unwrap());
    println!("p ~ p (orbit): {}", same_orbit(&t(&p), &t(&p)).unwrap());
}
