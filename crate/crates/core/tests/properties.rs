mod common;

use std::collections::BTreeSet;

use common::{euclid_gcd, Spectrum};
use hankel_spectra::bounds::{
    extremal_bound, extremal_iterate, gap_iterate, min_gap, reciprocal_sum_step, squared_difference_poly, IterOptions,
    Side,
};
use hankel_spectra::exact::{int, rat, resultant, shifted_poly, Rational, ZPoly};
use hankel_spectra::factor::{minimal_polynomial, multiplicity_spectrum, real_minimal_polynomial};
use hankel_spectra::hankel::{count_roots_in_interval, hankel_ladder};
use hankel_spectra::moments::power_sums_from_coeffs;
use hankel_spectra::orbit::{class_signature, same_class, same_orbit, signature_on_lattice, Lattice};
use hankel_spectra::rates::w_sq_sequence;
use proptest::prelude::*;

fn spectrum(m: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Spectrum> {
    m.prop_flat_map(|m| {
        (
            prop::sample::subsequence((-20i64..=20).collect::<Vec<_>>(), m),
            prop::collection::vec(1u64..=4, m),
        )
    })
    .prop_map(|(roots, mults)| Spectrum { roots, mults })
}

fn is_equidistant(s: &Spectrum) -> bool {
    s.roots.windows(3).all(|w| w[1] - w[0] == w[2] - w[1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resultant_vanishes_at_root_differences(s in spectrum(1..=4)) {
        let pm = Spectrum { roots: s.roots.clone(), mults: vec![1; s.m()] }.charpoly();
        let r = resultant(&ZPoly::from_poly(&pm), &shifted_poly(&pm));
        for &a in &s.roots {
            for &b in &s.roots {
                prop_assert_eq!(r.eval(&int(a - b)), int(0));
            }
        }
    }

    #[test]
    fn second_and_last_determinants(s in spectrum(1..=5)) {
        let n = s.n();
        let ladder = hankel_ladder(&s.traces(2 * n), n).unwrap();
        let m = s.m();
        let (mut d2, mut dm) = (int(0), int(s.mults.iter().product::<u64>() as i64));
        for i in 0..m {
            for j in i + 1..m {
                let sq = int((s.roots[j] - s.roots[i]).pow(2));
                d2 += Rational::from(s.mults[i] * s.mults[j]) * &sq;
                dm *= sq;
            }
        }
        if n >= 2 {
            prop_assert_eq!(&ladder.dets[1], &d2);
        }
        prop_assert_eq!(&ladder.dets[m - 1], &dm);
        prop_assert!(ladder.dets[m..].iter().all(|d| *d == 0u32));
        prop_assert_eq!(ladder.m, m);
    }

    #[test]
    fn interval_counts_partition_the_roots(s in spectrum(1..=6), cuts in prop::collection::btree_set(-21i64..=20, 1..6)) {
        let t = s.traces(2 * s.m());
        let mut edges: Vec<Rational> = vec![int(-25)];
        edges.extend(cuts.iter().map(|&c| rat(2 * c + 1, 2)));
        edges.push(int(25));
        let total: usize = edges
            .windows(2)
            .map(|w| count_roots_in_interval(&t, s.m(), &w[0], &w[1]).unwrap())
            .sum();
        prop_assert_eq!(total, s.m());
    }

    #[test]
    fn minimal_polynomial_matches_euclid(s in spectrum(1..=5)) {
        let cp = s.charpoly();
        let expected = cp.div_exact(&euclid_gcd(&cp, &cp.derivative())).unwrap();
        prop_assert_eq!(real_minimal_polynomial(&cp).unwrap(), expected.clone());
        let t = power_sums_from_coeffs(&cp, 2 * s.m() + 1).unwrap();
        prop_assert_eq!(minimal_polynomial(&t, s.m()).unwrap(), expected);
    }

    #[test]
    fn factors_are_coprime_and_distinct(s in spectrum(1..=6)) {
        let spectrum = multiplicity_spectrum(&s.charpoly()).unwrap();
        let qs: BTreeSet<u64> = spectrum.groups.iter().map(|g| g.q).collect();
        prop_assert_eq!(qs.len(), spectrum.groups.len());
        for (i, a) in spectrum.groups.iter().enumerate() {
            for b in &spectrum.groups[i + 1..] {
                prop_assert_eq!(a.factor.gcd(&b.factor).degree(), 0);
            }
        }
    }

    #[test]
    fn gap_step_is_the_pair_sum(s in spectrum(2..=5), num in 0i64..100) {
        let pm = real_minimal_polynomial(&s.charpoly()).unwrap();
        let g = squared_difference_poly(&pm).unwrap();
        let mu_sq = s.min_gap().pow(2);
        // Any point strictly below μ².
        let eps_sq = rat(num * mu_sq, 100);
        let literal = gap_iterate(&g, &eps_sq).unwrap();
        let pairs = reciprocal_sum_step(&s.squared_differences(), &eps_sq).unwrap();
        prop_assert_eq!(literal, pairs);
    }

    #[test]
    fn extremal_step_is_the_root_sum(s in spectrum(1..=5), offset in 1i64..30) {
        let pm = real_minimal_polynomial(&s.charpoly()).unwrap();
        let roots: Vec<Rational> = s.roots.iter().map(|&p| int(p)).collect();
        let below = int(s.roots[0] - offset);
        prop_assert_eq!(extremal_iterate(&pm, &below).unwrap(), reciprocal_sum_step(&roots, &below).unwrap());
    }

    #[test]
    fn extremal_sequences_are_monotone(s in spectrum(1..=6)) {
        let pm = real_minimal_polynomial(&s.charpoly()).unwrap();
        let opts = IterOptions::with_tol(rat(1, 1000));
        let min = extremal_bound(&pm, Side::Min, &opts).unwrap();
        let max = extremal_bound(&pm, Side::Max, &opts).unwrap();
        let (p1, pm_max) = (int(s.roots[0]), int(*s.roots.last().unwrap()));
        prop_assert!(min.values.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(max.values.windows(2).all(|w| w[0] > w[1]));
        prop_assert!(min.certified_bound < p1 && max.certified_bound > pm_max);
    }

    #[test]
    fn orbit_refines_class(a in spectrum(1..=4), b in spectrum(1..=4)) {
        let n = a.n().max(b.n());
        let orbit = same_orbit(&a.traces(2 * n), &b.traces(2 * n)).unwrap();
        let class = same_class(&a.charpoly(), &b.charpoly()).unwrap();
        prop_assert_eq!(orbit, a == b);
        prop_assert!(!orbit || class);
        prop_assert_eq!(class, a.mults == b.mults);
    }

    #[test]
    fn signature_survives_refinement(s in spectrum(2..=6)) {
        let cp = s.charpoly();
        let sig = class_signature(&cp).unwrap();
        let lattice = sig.lattice.clone().unwrap();
        let finer = Lattice::new(
            lattice.origin() - lattice.step(),
            lattice.step() / int(2),
            &(lattice.end() + lattice.step()),
        )
        .unwrap();
        let spectrum = multiplicity_spectrum(&cp).unwrap();
        let refined = signature_on_lattice(&spectrum, finer).unwrap();
        prop_assert_eq!(&refined.ordered_multiplicities, &sig.ordered_multiplicities);

        let occupied: Vec<usize> = sig.occupancy.values().flatten().copied().collect();
        let distinct: BTreeSet<usize> = occupied.iter().copied().collect();
        prop_assert_eq!(occupied.len(), s.m());
        prop_assert_eq!(distinct.len(), s.m());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn same_class_is_an_equivalence(a in spectrum(1..=4), b in spectrum(1..=4), c in spectrum(1..=4)) {
        let (pa, pb, pc) = (a.charpoly(), b.charpoly(), c.charpoly());
        let ab = same_class(&pa, &pb).unwrap();
        prop_assert!(same_class(&pa, &pa).unwrap());
        prop_assert_eq!(ab, same_class(&pb, &pa).unwrap());
        if ab && same_class(&pb, &pc).unwrap() {
            prop_assert!(same_class(&pa, &pc).unwrap());
        }
    }

    #[test]
    fn equidistant_spectra_converge_slowest(s in spectrum(3..=5)) {
        prop_assume!(!is_equidistant(&s));
        let m = s.m();
        let mu_sq = int(s.min_gap().pow(2));
        let opts = IterOptions { max_iter: Some(10), ..IterOptions::with_tol(rat(1, 1_000_000_000)) };
        let it = min_gap(&s.charpoly(), &opts).unwrap();
        let w = w_sq_sequence(m, 10).unwrap();
        for (k, e) in it.eps_sq.iter().enumerate().skip(1) {
            prop_assert!(*e >= &mu_sq * w[k].to_rational(), "step {} of {:?}", k, s);
        }
    }
}
