//! Bracket the smallest and largest eigenvalues from outside with monotone
//! Newton sequences started at rational outer bounds.

use hankel_spectra::bounds::{extremal_bound, initial_outer_bounds, IterOptions, Side};
use hankel_spectra::exact::{rat, Poly};

fn main() {
    let pm = Poly::from_i64s(&[-6, 1, 4, 1]); // roots -3, -2, 1
    let (lo, hi) = initial_outer_bounds(&pm).unwrap();
    println!("initial bracket: [{lo}, {hi}]");

    let opts = IterOptions::with_tol(rat(1, 10_000));
    for side in [Side::Min, Side::Max] {
        let it = extremal_bound(&pm, side, &opts).unwrap();
        let shown: Vec<String> = it.values.iter().take(4).map(|v| v.to_string()).collect();
        println!("{side:?}: {} ... -> {} after {} steps", shown.join(", "), it.certified_bound, it.iterations());
    }
}
