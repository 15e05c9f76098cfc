use hankel_spectra::bounds::{min_gap, IterOptions};
use hankel_spectra::exact::{rat, Poly};

fn main() {
    // x^3 - 2x: roots 0 and ±sqrt(2), so the gap is sqrt(2).
    let cp = Poly::from_i64s(&[0, -2, 0, 1]);
    let it = min_gap(&cp, &IterOptions::with_tol(rat(1, 1_000_000))).unwrap();

    println!("G = {}", it.gap_poly);
    for (k, e) in it.eps_sq.iter().enumerate().take(6) {
        println!("eps_{k}^2 = {e}");
    }
    println!("... {} steps, converged = {}", it.iterations(), it.converged);
    println!("certified: gap >= {}", it.certified_lower);
}
