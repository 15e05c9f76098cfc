//! The equidistant spectrum is the slowest case for the gap iteration.
//! Its normalized error v_k is trapped between two geometric sequences.

use hankel_spectra::exact::int;
use hankel_spectra::rates::{a_of_m, b_of_m, rate_report, Accuracy};

fn main() {
    for m in 3..=6 {
        let (b, a) = (b_of_m(m).unwrap(), a_of_m(m).unwrap());
        let report = rate_report(m, &Accuracy::LnInverse(int(10)), 20 * (m - 1)).unwrap();
        println!(
            "m = {m}: B = {b}, A = {a}, v_k < e^-10 first at k = {:?}, predicted window [{}, {}]",
            report.first_below, report.k_min, report.k_max
        );
    }

    let report = rate_report(4, &Accuracy::LnInverse(int(10)), 3).unwrap();
    println!("m = 4: lower ratio {}, upper ratio {}", report.lower_geo, report.upper_geo);
    for check in &report.sandwich {
        println!(
            "  k = {}: v_k = {}, lower side {}, upper side {}",
            check.k,
            report.v[check.k].lo,
            check.lower.as_str(),
            check.upper.as_str()
        );
    }
}
