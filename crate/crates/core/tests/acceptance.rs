//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{
    complex_rooted, hankel_det_closed_form, random_spectra, roots_inside, rng, Spectrum,
};
use hankel_spectra::bounds::{
    extremal_bound, initial_outer_bounds, min_gap, squared_difference_poly, GapEngine, IterOptions, Side,
};
use hankel_spectra::exact::{int, rat, Poly, Rational};
use hankel_spectra::factor::{
    hankel_inner_product, multiplicity_spectrum, real_minimal_polynomial, syzygy_check,
};
use hankel_spectra::hankel::{count_roots_in_interval, hankel_ladder};
use hankel_spectra::moments::{power_sums_from_coeffs, traces_from_matrix};
use hankel_spectra::orbit::{class_signature, same_class, same_orbit};
use hankel_spectra::rates::{a_of_m, b_of_m, rate_report, w_sq_sequence, wgp_poly, Accuracy};
use rand::Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gap_corpus() -> Vec<Spectrum> {
    random_spectra(3, 200, 2..=6)
}

fn factor_corpus() -> Vec<Spectrum> {
    random_spectra(5, 200, 1..=6)
}

fn constants() -> Outcome {
    let expected = [
        (b_of_m(3), rat(1, 6)),
        (b_of_m(4), rat(19, 72)),
        (b_of_m(5), rat(79, 240)),
        (a_of_m(3), rat(4, 9)),
        (a_of_m(4), rat(27, 100)),
    ];
    for (got, want) in expected {
        let got = got.map_err(|e| e.to_string())?;
        ensure!(got == want, "got {got}, expected {want}");
    }
    ensure!(int(1) - a_of_m(3).unwrap() == rat(5, 9), "1 - A(3) != 5/9");
    ensure!(int(1) - a_of_m(4).unwrap() == rat(73, 100), "1 - A(4) != 73/100");
    Ok("B(3..5) = 1/6, 19/72, 79/240; A(3), A(4) = 4/9, 27/100".into())
}

fn wgp_scaling() -> Outcome {
    let mus = [int(1), rat(1, 3), rat(7, 2)];
    let p1s = [int(0), int(-5), rat(2, 7)];
    let mut checked = 0;
    for m in 3..=6usize {
        let w = w_sq_sequence(m, 10).map_err(|e| e.to_string())?;
        for mu in &mus {
            // The engine's iterates depend on the input only through G, so
            // equal G across translations means equal iterates.
            let mut shared: Option<Poly> = None;
            for p1 in &p1s {
                let pm = wgp_poly(m, p1, mu).map_err(|e| e.to_string())?;
                let g = squared_difference_poly(&pm).map_err(|e| e.to_string())?;
                if let Some(s) = &shared {
                    ensure!(*s == g, "G differs under translation for m={m}, mu={mu}, p1={p1}");
                } else {
                    shared = Some(g);
                }
                // The public entry point agrees on the first steps.
                let opts = IterOptions { max_iter: Some(3), ..IterOptions::default().exact() };
                let short = min_gap(&pm, &opts).map_err(|e| e.to_string())?;
                let mu_sq = mu * mu;
                for (k, e) in short.eps_sq.iter().enumerate() {
                    ensure!(*e == &mu_sq * w[k].to_rational(), "min_gap step {k} off for m={m}, mu={mu}, p1={p1}");
                }
            }
            let engine = GapEngine::from_gap_poly(shared.unwrap());
            let eps = engine.exact_iterates(10).map_err(|e| e.to_string())?;
            ensure!(eps.len() == 11, "iteration stopped early for m={m}, mu={mu}");
            let mu_sq = mu * mu;
            for (k, (e, w)) in eps.iter().zip(&w).enumerate() {
                ensure!(*e == w.scale(&mu_sq), "eps_{k}^2 != mu^2 w_{k}^2 for m={m}, mu={mu}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} exact equalities, k <= 10, 36 (m, mu, p1) cases"))
}

fn gap_soundness() -> Outcome {
    let corpus = gap_corpus();
    let ln_inv = (1e6f64).ln();
    for s in &corpus {
        let m = s.m();
        let mu_sq = int(s.min_gap() * s.min_gap());
        let max_iter = (2.0 * 1.75 * (m - 1) as f64 * ln_inv).ceil() as usize;
        let opts = IterOptions { max_iter: Some(max_iter), ..IterOptions::with_tol(rat(1, 1_000_000)) };
        let it = min_gap(&s.charpoly(), &opts).map_err(|e| format!("{s:?}: {e}"))?;
        ensure!(it.eps_sq.windows(2).all(|w| w[0] < w[1]), "{s:?}: not strictly increasing");
        let last = it.eps_sq.len() - 1;
        for (k, e) in it.eps_sq.iter().enumerate() {
            let hit = it.exact_hit && k == last;
            ensure!(*e < mu_sq || (hit && *e == mu_sq), "{s:?}: eps_{k}^2 = {e} not below mu^2 = {mu_sq}");
        }
        let pair_sum: Rational = s.squared_differences().iter().map(|d| int(1) / d).sum();
        ensure!(it.eps_sq[1] == int(1) / pair_sum, "{s:?}: first step differs from the pair sum");
        let c = &it.certified_lower;
        let target = rat(999, 1000);
        ensure!(
            *c > 0u32 && c * c > &target * &target * &mu_sq && c * c <= mu_sq,
            "{s:?}: certified {c} not within 1e-3 of mu after {} steps",
            it.iterations()
        );
        ensure!(it.iterations() <= max_iter, "{s:?}: budget exceeded");
    }
    Ok(format!("{} spectra, m in 2..=6", corpus.len()))
}

fn iteration_window() -> Outcome {
    let mut notes = Vec::new();
    for m in 3..=6usize {
        let report = rate_report(m, &Accuracy::LnInverse(int(10)), 20 * (m - 1)).map_err(|e| e.to_string())?;
        let k = report.first_below.ok_or(format!("m={m}: v_k never dropped below e^-10"))? as u64;
        let (lo, hi) = (10 * (m as u64 - 2), 18 * (m as u64 - 1));
        ensure!(lo < k && k < hi, "m={m}: k={k} outside ({lo}, {hi})");
        ensure!(report.k_min <= k && k <= report.k_max, "m={m}: k={k} outside [{}, {}]", report.k_min, report.k_max);
        if let Some(v) = report.violations().next() {
            notes.push(format!("sandwich not certain at m={m}, k={}", v.k));
        }
        notes.push(format!("m={m}: k={k} in [{}, {}]", report.k_min, report.k_max));
    }
    let m4 = rate_report(4, &Accuracy::LnInverse(int(10)), 1).map_err(|e| e.to_string())?;
    notes.push(format!(
        "m=4 first step v_1 = {} vs 1-A = {}: {}",
        m4.v[1].lo,
        m4.upper_geo,
        if m4.sandwich[0].holds() { "holds" } else { "violated (reported)" }
    ));
    Ok(notes.join("; "))
}

fn factorization() -> Outcome {
    let corpus = factor_corpus();
    for s in &corpus {
        let cp = s.charpoly();
        let spectrum = multiplicity_spectrum(&cp).map_err(|e| format!("{s:?}: {e}"))?;
        ensure!(spectrum.reconstruct() == cp, "{s:?}: product of factors differs");
        let distinct: usize = spectrum.groups.iter().map(|g| g.count).sum();
        let total: u64 = spectrum.groups.iter().map(|g| g.q * g.count as u64).sum();
        ensure!(distinct == s.m() && total == s.n() as u64, "{s:?}: partition identities fail");
        for g in &spectrum.groups {
            for (&p, &r) in s.roots.iter().zip(&s.mults) {
                let vanishes = g.factor.eval(&int(p)) == 0u32;
                ensure!(vanishes == (r == g.q), "{s:?}: Q for q={} wrong at {p}", g.q);
            }
        }
    }
    Ok(format!("{} spectra reconstructed exactly", corpus.len()))
}

fn kronecker() -> Outcome {
    let corpus = random_spectra(6, 50, 1..=5);
    let mut pairs = 0;
    for s in &corpus {
        let m = s.m();
        let t = s.traces(2 * m);
        for (i, &pi) in s.roots.iter().enumerate() {
            for (j, &pj) in s.roots.iter().enumerate() {
                let got = hankel_inner_product(&t, m, &int(pi), &int(pj)).map_err(|e| e.to_string())?;
                let want = if i == j { int(1) / Rational::from(s.mults[i]) } else { int(0) };
                ensure!(got == want, "{s:?}: <p_{i} H^-1 p_{j}> = {got}, expected {want}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} inner products on {} spectra", corpus.len()))
}

fn hankel_closed_forms() -> Outcome {
    let corpus = random_spectra(7, 50, 1..=5);
    for s in &corpus {
        let n = s.n();
        let ladder = hankel_ladder(&s.traces(2 * n), n).map_err(|e| e.to_string())?;
        for k in 1..=n {
            let want = hankel_det_closed_form(s, k);
            ensure!(ladder.dets[k - 1] == want, "{s:?}: D_{k} = {}, subset sum {want}", ladder.dets[k - 1]);
        }
    }
    let mut rng = rng(8);
    let mut rejected = 0;
    for _ in 0..50 {
        let p = complex_rooted(&mut rng);
        let n = p.degree();
        let ladder = hankel_ladder(&power_sums_from_coeffs(&p, 2 * n).unwrap(), n).map_err(|e| e.to_string())?;
        ensure!(!ladder.valid_real, "accepted complex-rooted {p}");
        rejected += 1;
    }
    let mut accepted = 0;
    for s in random_spectra(9, 50, 1..=6) {
        let p = s.charpoly();
        let n = p.degree();
        let ladder = hankel_ladder(&power_sums_from_coeffs(&p, 2 * n).unwrap(), n).map_err(|e| e.to_string())?;
        ensure!(ladder.valid_real && ladder.m == s.m(), "rejected real-rooted {p}");
        accepted += 1;
    }
    Ok(format!("{} ladders match subset sums; {rejected} rejected, {accepted} accepted", corpus.len()))
}

fn syzygies() -> Outcome {
    let corpus = factor_corpus();
    let mut total = 0;
    for s in &corpus {
        let cp = s.charpoly();
        let spectrum = multiplicity_spectrum(&cp).map_err(|e| e.to_string())?;
        let report = syzygy_check(&cp, &spectrum).map_err(|e| format!("{s:?}: {e}"))?;
        let l = spectrum.groups.len();
        ensure!(report.count == s.m() - l, "{s:?}: {} relations, expected {}", report.count, s.m() - l);
        total += report.count;
    }
    Ok(format!("{total} relations over {} spectra", corpus.len()))
}

fn extremal() -> Outcome {
    let corpus = gap_corpus();
    let tol = rat(1, 1_000_000);
    let opts = IterOptions::with_tol(tol.clone());
    for s in &corpus {
        let pm = real_minimal_polynomial(&s.charpoly()).map_err(|e| e.to_string())?;
        let (p1, pm_max) = (int(s.roots[0]), int(*s.roots.last().unwrap()));
        let (lo, hi) = initial_outer_bounds(&pm).map_err(|e| e.to_string())?;
        ensure!(lo < p1 && hi > pm_max, "{s:?}: initial bounds ({lo}, {hi}) do not bracket strictly");

        let min = extremal_bound(&pm, Side::Min, &opts).map_err(|e| e.to_string())?;
        ensure!(min.values.windows(2).all(|w| w[0] < w[1]), "{s:?}: min side not increasing");
        ensure!(min.values.iter().all(|v| *v < p1), "{s:?}: min side crossed p_1");
        let end = min.limit.clone().unwrap_or(min.certified_bound.clone());
        ensure!(&p1 - &end <= tol, "{s:?}: min side ended at {end}");

        let max = extremal_bound(&pm, Side::Max, &opts).map_err(|e| e.to_string())?;
        ensure!(max.values.windows(2).all(|w| w[0] > w[1]), "{s:?}: max side not decreasing");
        ensure!(max.values.iter().all(|v| *v > pm_max), "{s:?}: max side crossed p_m");
        let end = max.limit.clone().unwrap_or(max.certified_bound.clone());
        ensure!(&end - &pm_max <= tol, "{s:?}: max side ended at {end}");
    }
    Ok(format!("{} spectra, both sides within 1e-6", corpus.len()))
}

fn counting() -> Outcome {
    let mut rng = rng(10);
    let mut total = 0;
    for _ in 0..500 {
        let m = rng.gen_range(1..=6);
        let s = Spectrum::random(&mut rng, m);
        let a = rng.gen_range(-22..=20);
        let b = rng.gen_range(a + 1..=21);
        // Half-integers never hit an integer root.
        let (a, b) = (rat(2 * a + 1, 2), rat(2 * b + 1, 2));
        let n = s.n();
        let t = power_sums_from_coeffs(&s.charpoly(), 2 * n).unwrap();
        let got = count_roots_in_interval(&t, s.m(), &a, &b).map_err(|e| e.to_string())?;
        let want = roots_inside(&s, &a, &b);
        ensure!(got == want, "{s:?} on ]{a}, {b}[: counted {got}, expected {want}");
        total += got;
    }
    Ok(format!("500 intervals, {total} roots located"))
}

/// A spectrum with the same multiplicity multiset but a different
/// arrangement or different values.
fn near_miss(s: &Spectrum, rng: &mut rand_chacha::ChaCha8Rng) -> Spectrum {
    let mut mults = s.mults.clone();
    mults.rotate_left(1);
    if mults != s.mults && rng.gen_bool(0.5) {
        return Spectrum { roots: s.roots.clone(), mults };
    }
    let taken: BTreeSet<i64> = s.roots.iter().copied().collect();
    let i = rng.gen_range(0..s.m());
    let fresh = (1..).map(|d| s.roots[i] + d).find(|p| !taken.contains(p)).unwrap();
    let mut pairs: Vec<(i64, u64)> = s.roots.iter().copied().zip(s.mults.iter().copied()).collect();
    pairs[i].0 = fresh;
    Spectrum::new(pairs)
}

fn classification() -> Outcome {
    let corpus = factor_corpus();
    for s in &corpus {
        let sig = class_signature(&s.charpoly()).map_err(|e| format!("{s:?}: {e}"))?;
        ensure!(sig.ordered_multiplicities == s.mults, "{s:?}: signature {:?}", sig.ordered_multiplicities);
    }

    let mut rng = rng(11);
    let mut identical = 0;
    for s in corpus.iter().filter(|s| s.n() <= 8).take(50) {
        let n = s.n();
        let tp = traces_from_matrix(&s.diagonal(), 2 * n).unwrap();
        let tq = traces_from_matrix(&s.conjugated(&mut rng), 2 * n).unwrap();
        ensure!(same_orbit(&tp, &tq).map_err(|e| e.to_string())?, "{s:?}: conjugate not in the same orbit");
        ensure!(same_class(&s.charpoly(), &s.charpoly()).unwrap(), "{s:?}: same_class not reflexive");
        identical += 1;
    }

    let mut misses = 0;
    for s in corpus.iter().filter(|s| s.m() >= 2).take(100) {
        let q = near_miss(s, &mut rng);
        let n = s.n();
        ensure!(!same_orbit(&s.traces(2 * n), &q.traces(2 * n)).unwrap(), "{s:?} vs {q:?}: same orbit");
        let verdict = same_class(&s.charpoly(), &q.charpoly()).map_err(|e| e.to_string())?;
        ensure!(verdict == (s.mults == q.mults), "{s:?} vs {q:?}: same_class = {verdict}");
        misses += 1;
    }
    ensure!(identical > 0 && misses == 100, "corpus too small: {identical} identical, {misses} near misses");
    Ok(format!("{} signatures, {identical} conjugate pairs, {misses} near misses", corpus.len()))
}

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

fn run_fixture(path: &Path) -> std::io::Result<(Vec<u8>, Vec<u8>, Option<i32>)> {
    let name = path.file_name().unwrap().to_string_lossy().to_string();
    let command = name.split('.').next().unwrap().to_string();
    let out = Command::new(env!("CARGO_BIN_EXE_hankel-spectra"))
        .arg(&command)
        .arg("--input")
        .arg(path)
        .output()?;
    Ok((out.stdout, out.stderr, out.status.code()))
}

fn cli_determinism() -> Outcome {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    ensure!(!paths.is_empty(), "no fixtures found");
    for path in &paths {
        let first = run_fixture(path).map_err(|e| e.to_string())?;
        let second = run_fixture(path).map_err(|e| e.to_string())?;
        ensure!(first == second, "{} differs between runs", path.display());
        let doc = if first.0.is_empty() { &first.1 } else { &first.0 };
        ensure!(
            serde_json::from_slice::<serde_json::Value>(doc).is_ok(),
            "{} output is not JSON",
            path.display()
        );
    }
    Ok(format!("{} fixtures byte-identical across two runs", paths.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "rate constants A(m), B(m)", budget: secs(1), check: constants },
        Criterion { id: 2, name: "gap scaling on equidistant spectra", budget: secs(30), check: wgp_scaling },
        Criterion { id: 3, name: "gap iteration soundness", budget: secs(300), check: gap_soundness },
        Criterion { id: 4, name: "iteration-count window", budget: None, check: iteration_window },
        Criterion { id: 5, name: "factorization reconstruction", budget: secs(120), check: factorization },
        Criterion { id: 6, name: "Kronecker identity", budget: None, check: kronecker },
        Criterion { id: 7, name: "Hankel closed forms and real-rootedness", budget: None, check: hankel_closed_forms },
        Criterion { id: 8, name: "syzygy count", budget: None, check: syzygies },
        Criterion { id: 9, name: "extremal bounds", budget: None, check: extremal },
        Criterion { id: 10, name: "root counting on intervals", budget: None, check: counting },
        Criterion { id: 11, name: "classification end to end", budget: secs(120), check: classification },
        Criterion { id: 12, name: "CLI determinism", budget: None, check: cli_determinism },
    ];
    let filter: Option<u32> = std::env::args().nth(1).and_then(|a| a.parse().ok());

    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for c in criteria.iter().filter(|c| filter.is_none_or(|f| f == c.id)) {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.check))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
        let elapsed = start.elapsed();
        let result = match (result, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        println!("{tag} [{:>2}] {} ({elapsed:.2?}): {detail}", c.id, c.name);
        failures += usize::from(result.is_err());
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
