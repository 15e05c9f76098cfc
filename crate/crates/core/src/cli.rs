//! JSON requests in, deterministic reports out.
//!
//! Polynomial coefficients are listed in ascending powers: `["2", "-3", "1"]`
//! is `x² - 3x + 2`. Every rational crosses the boundary as a string in
//! lowest terms, so reports are exact and byte-stable.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use malachite_base::num::basic::traits::One;
use malachite_q::Rational;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::bounds::{extremal_bound, initial_outer_bounds, min_gap, ExtremalIteration, IterOptions, Side};
use crate::error::{Error, Result};
use crate::exact::{exact_sqrt, parse_rational, ComplexRational, Interval, Poly};
use crate::factor::{multiplicity_spectrum, real_minimal_polynomial, syzygy_check, MultiplicitySpectrum};
use crate::hankel::{hankel_ladder, HankelLadder, HankelSequence};
use crate::moments::{charpoly_from_traces, power_sums_from_coeffs, traces_from_matrix, HermitianInput, MomentSeq};
use crate::orbit::{compare_traces, spectrum_signature, OrbitSignature};
use crate::rates::{rate_report, Accuracy};

pub const SCHEMA_VERSION: u64 = 1;
/// Longest iteration trace printed before entries are elided.
pub const TRACE_CAP: usize = 100;
const DEFAULT_RATE_STEPS: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Analyze,
    Minpoly,
    Factor,
    Gap,
    Bounds,
    Count,
    Rates,
    Classify,
    Compare,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Analyze,
        Command::Minpoly,
        Command::Factor,
        Command::Gap,
        Command::Bounds,
        Command::Count,
        Command::Rates,
        Command::Classify,
        Command::Compare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Minpoly => "minpoly",
            Command::Factor => "factor",
            Command::Gap => "gap",
            Command::Bounds => "bounds",
            Command::Count => "count",
            Command::Rates => "rates",
            Command::Classify => "classify",
            Command::Compare => "compare",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown command {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidInput(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub tol: Rational,
    pub max_iter: Option<usize>,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options { tol: Rational::from_signeds(1, 1_000_000), max_iter: None, format: Format::Json }
    }
}

impl Options {
    fn iter_options(&self) -> IterOptions {
        IterOptions { max_iter: self.max_iter, ..IterOptions::with_tol(self.tol.clone()) }
    }
}

/// One operator, in any accepted input form.
#[derive(Clone, Debug)]
pub enum Operand {
    Poly(Poly),
    Matrix(HermitianInput),
    /// Traces `t_0 = n, t_1, ...`.
    Moments(MomentSeq),
}

impl Operand {
    pub fn degree(&self) -> usize {
        match self {
            Operand::Poly(p) => p.degree(),
            Operand::Matrix(h) => h.size(),
            Operand::Moments(t) => t.source_degree(),
        }
    }

    pub fn characteristic_polynomial(&self) -> Result<Poly> {
        match self {
            Operand::Poly(p) => Ok(p.clone()),
            Operand::Matrix(h) => h.characteristic_polynomial(),
            Operand::Moments(t) => charpoly_from_traces(t, t.source_degree()),
        }
    }

    /// `t_0 .. t_{count-1}`. Given moments must agree with the operator
    /// they determine.
    pub fn traces(&self, count: usize) -> Result<MomentSeq> {
        match self {
            Operand::Poly(p) => power_sums_from_coeffs(p, count),
            Operand::Matrix(h) => traces_from_matrix(h, count),
            Operand::Moments(t) => {
                let full = power_sums_from_coeffs(&self.characteristic_polynomial()?, count.max(t.len()))?;
                if let Some(k) = (0..t.len()).find(|&k| t.get(k) != full.get(k)) {
                    return Err(Error::InvalidInput(format!(
                        "moment t_{k} = {} is inconsistent with the first {} moments",
                        t.get(k),
                        t.source_degree() + 1
                    )));
                }
                full.truncated(count)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum Payload {
    Single(Operand),
    Pair(Operand, Operand),
    /// A bare number of distinct eigenvalues, for `rates`.
    Order(usize),
}

#[derive(Clone, Debug)]
pub struct AnalysisRequest {
    pub command: Command,
    pub payload: Payload,
    pub interval: Option<(Rational, Rational)>,
    pub delta: Accuracy,
    pub steps: Option<usize>,
    pub options: Options,
    /// Notes from parsing, such as coefficient normalization.
    pub warnings: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    version: Option<u64>,
    poly: Option<Vec<String>>,
    matrix: Option<Vec<Vec<[String; 2]>>>,
    moments: Option<Vec<String>>,
    first: Option<Box<Document>>,
    second: Option<Box<Document>>,
    interval: Option<[String; 2]>,
    m: Option<usize>,
    delta: Option<String>,
    ln_inverse_delta: Option<String>,
    steps: Option<usize>,
}

fn field_rational(text: &str, field: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { context: field.to_string(), message },
        other => other,
    })
}

fn field_rationals(items: &[String], field: &str) -> Result<Vec<Rational>> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| field_rational(s, &format!("{field}[{i}]")))
        .collect()
}

fn parse_operand(doc: &Document, field: &str, warnings: &mut Vec<String>) -> Result<Operand> {
    let forms = [doc.poly.is_some(), doc.matrix.is_some(), doc.moments.is_some()];
    match forms.iter().filter(|&&f| f).count() {
        1 => {}
        0 => {
            return Err(Error::Parse {
                context: field.to_string(),
                message: "expected one of \"poly\", \"matrix\" or \"moments\"".into(),
            })
        }
        _ => {
            return Err(Error::Parse {
                context: field.to_string(),
                message: "more than one input form given".into(),
            })
        }
    }
    let prefix = if field.is_empty() { String::new() } else { format!("{field}.") };

    if let Some(coeffs) = &doc.poly {
        let poly = Poly::new(field_rationals(coeffs, &format!("{prefix}poly"))?);
        if poly.degree() < 1 || poly.is_zero() {
            return Err(Error::DegreeTooSmall { min: 1, got: 0 });
        }
        if !poly.is_monic() {
            warnings.push(format!(
                "{prefix}poly: leading coefficient {} divided out",
                poly.leading_coeff()
            ));
        }
        return Ok(Operand::Poly(poly.to_monic()));
    }
    if let Some(rows) = &doc.matrix {
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, [re, im])| {
                        let at = format!("{prefix}matrix[{i}][{j}]");
                        Ok(ComplexRational::new(field_rational(re, &at)?, field_rational(im, &at)?))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Operand::Matrix(HermitianInput::new(rows)?));
    }
    let values = field_rationals(doc.moments.as_deref().unwrap_or_default(), &format!("{prefix}moments"))?;
    let n = values
        .first()
        .and_then(|t0| usize::try_from(t0).ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Parse {
            context: format!("{prefix}moments[0]"),
            message: "t_0 must be the dimension, a positive integer".into(),
        })?;
    if values.len() < n + 1 {
        return Err(Error::InsufficientMoments { needed: n + 1, have: values.len() });
    }
    Ok(Operand::Moments(MomentSeq::new(values, n)))
}

/// Validate a JSON document for `command`.
pub fn parse_input(document: &str, command: Command, options: Options) -> Result<AnalysisRequest> {
    let doc: Document = serde_json::from_str(document).map_err(|e| Error::Parse {
        context: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    if let Some(v) = doc.version.filter(|&v| v != SCHEMA_VERSION) {
        return Err(Error::Parse {
            context: "version".into(),
            message: format!("unsupported schema version {v}, expected {SCHEMA_VERSION}"),
        });
    }
    if options.tol <= 0u32 {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {}", options.tol)));
    }

    let mut warnings = Vec::new();
    let payload = match command {
        Command::Compare => {
            let (Some(first), Some(second)) = (&doc.first, &doc.second) else {
                return Err(Error::Parse {
                    context: "compare".into(),
                    message: "expected \"first\" and \"second\"".into(),
                });
            };
            Payload::Pair(
                parse_operand(first, "first", &mut warnings)?,
                parse_operand(second, "second", &mut warnings)?,
            )
        }
        Command::Rates if doc.m.is_some() => Payload::Order(doc.m.unwrap()),
        _ => Payload::Single(parse_operand(&doc, "", &mut warnings)?),
    };

    let interval = doc
        .interval
        .as_ref()
        .map(|[a, b]| Ok::<_, Error>((field_rational(a, "interval[0]")?, field_rational(b, "interval[1]")?)))
        .transpose()?;
    let delta = match (&doc.delta, &doc.ln_inverse_delta) {
        (Some(_), Some(_)) => {
            return Err(Error::Parse {
                context: "delta".into(),
                message: "give either \"delta\" or \"ln_inverse_delta\"".into(),
            })
        }
        (Some(d), None) => Accuracy::Delta(field_rational(d, "delta")?),
        (None, Some(l)) => Accuracy::LnInverse(field_rational(l, "ln_inverse_delta")?),
        (None, None) => Accuracy::LnInverse(Rational::from(10u32)),
    };

    Ok(AnalysisRequest { command, payload, interval, delta, steps: doc.steps, options, warnings })
}

/// Outcome of a command, before rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    pub command: Command,
    pub results: Value,
    pub warnings: Vec<String>,
    /// Which fields are exact values rather than certified bounds or estimates.
    pub exact: BTreeMap<String, bool>,
    /// Set when an iteration ran out of budget; results are still partial
    /// certified bounds.
    pub incomplete: Option<Error>,
}

impl AnalysisReport {
    fn new(command: Command, results: Value) -> Self {
        AnalysisReport { command, results, warnings: Vec::new(), exact: BTreeMap::new(), incomplete: None }
    }

    fn exact(mut self, fields: &[(&str, bool)]) -> Self {
        self.exact.extend(fields.iter().map(|(k, v)| (k.to_string(), *v)));
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.incomplete.as_ref().map_or(0, exit_code)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command.name(),
            "results": self.results,
            "warnings": self.warnings,
            "exact": self.exact,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(&self.to_json()).expect("reports serialize");
                out.push('\n');
                out
            }
            Format::Text => {
                let mut lines = vec![format!("command: {}", self.command)];
                flatten("", &self.results, &mut lines);
                lines.extend(self.warnings.iter().map(|w| format!("warning: {w}")));
                lines.join("\n") + "\n"
            }
        }
    }
}

fn flatten(path: &str, value: &Value, lines: &mut Vec<String>) {
    let join = |key: &str| if path.is_empty() { key.to_string() } else { format!("{path}.{key}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, lines);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, lines);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            lines.push(format!("{path}: [{}]", parts.join(", ")));
        }
        other => lines.push(format!("{path}: {}", scalar_text(other))),
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

/// Process exit status for an error: 1 bad input, 2 broken identity,
/// 3 iteration budget exhausted.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotConverged(_) => 3,
        e if e.is_internal() => 2,
        _ => 1,
    }
}

/// The JSON document written to the error stream.
pub fn error_json(err: &Error) -> String {
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "error": err.kind(),
        "message": err.to_string(),
        "exit_code": exit_code(err),
    });
    serde_json::to_string(&doc).expect("errors serialize") + "\n"
}

fn r(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn rs<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(xs.into_iter().map(r).collect())
}

fn poly_json(p: &Poly) -> Value {
    rs(p.coeffs())
}

/// At most [`TRACE_CAP`] entries; the middle of a longer trace is replaced
/// by a marker string.
fn capped(items: Vec<Value>) -> Value {
    if items.len() <= TRACE_CAP {
        return Value::Array(items);
    }
    let head = TRACE_CAP / 2;
    let tail = TRACE_CAP - head - 1;
    let elided = items.len() - head - tail;
    let mut out: Vec<Value> = items[..head].to_vec();
    out.push(Value::String(format!("... {elided} entries elided ...")));
    out.extend_from_slice(&items[items.len() - tail..]);
    Value::Array(out)
}

fn interval_json(iv: &Interval) -> Value {
    if iv.lo == iv.hi {
        r(&iv.lo)
    } else {
        json!([iv.lo.to_string(), iv.hi.to_string()])
    }
}

fn ladder_json(ladder: &HankelLadder) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("dets".into(), rs(&ladder.dets));
    map.insert("m".into(), json!(ladder.m));
    map.insert("valid_real".into(), json!(ladder.valid_real));
    if let Some(index) = ladder.violation {
        map.insert("violation".into(), json!(index));
    }
    map
}

fn spectrum_json(spectrum: &MultiplicitySpectrum) -> Value {
    Value::Array(
        spectrum
            .groups
            .iter()
            .map(|g| json!({ "q": g.q, "n": g.count, "factor": poly_json(&g.factor) }))
            .collect(),
    )
}

fn signature_json(sig: &OrbitSignature) -> Value {
    let occupancy: Map<String, Value> = sig
        .occupancy
        .iter()
        .map(|(q, cells)| (q.to_string(), json!(cells.iter().collect::<Vec<_>>())))
        .collect();
    let lattice = sig.lattice.as_ref().map_or(Value::Null, |lat| {
        json!({ "origin": r(lat.origin()), "step": r(lat.step()), "cells": lat.cells() })
    });
    json!({
        "ordered_multiplicities": sig.ordered_multiplicities,
        "occupancy": occupancy,
        "lattice": lattice,
    })
}

fn extremal_json(it: &ExtremalIteration) -> Value {
    json!({
        "side": it.side.to_string(),
        "iterations": it.iterations(),
        "values": capped(it.values.iter().map(r).collect()),
        "certified_bound": r(&it.certified_bound),
        "limit": it.limit.as_ref().map_or(Value::Null, r),
        "converged": it.converged,
    })
}

fn single(req: &AnalysisRequest) -> Result<&Operand> {
    match &req.payload {
        Payload::Single(op) => Ok(op),
        _ => Err(Error::InvalidInput(format!("{} takes a single operand", req.command))),
    }
}

/// Power sums and ladder of one operand.
fn ladder_of(op: &Operand) -> Result<(Poly, MomentSeq, HankelLadder)> {
    let cp = op.characteristic_polynomial()?;
    let n = cp.degree();
    let t = op.traces(2 * n)?;
    let ladder = hankel_ladder(&t, n)?;
    Ok((cp, t, ladder))
}

fn analyze(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let (cp, _, ladder) = ladder_of(single(req)?)?;
    let mut results = ladder_json(&ladder);
    results.insert("n".into(), json!(cp.degree()));
    results.insert("charpoly".into(), poly_json(&cp));
    let mut warnings = Vec::new();
    if ladder.valid_real {
        let spectrum = multiplicity_spectrum(&cp)?;
        let syzygies = syzygy_check(&cp, &spectrum)?;
        let signature = spectrum_signature(&spectrum)?;
        results.insert("min_poly".into(), poly_json(&spectrum.min_poly));
        results.insert("spectrum".into(), spectrum_json(&spectrum));
        results.insert("signature".into(), json!(signature.ordered_multiplicities));
        results.insert("syzygies".into(), json!({ "count": syzygies.count, "expected": syzygies.expected }));
    } else {
        warnings.push("Hankel ladder shows non-real roots; spectral analysis skipped".to_string());
    }
    let mut report = AnalysisReport::new(req.command, Value::Object(results))
        .exact(&[("dets", true), ("min_poly", true), ("spectrum", true), ("signature", true)]);
    report.warnings = warnings;
    Ok(report)
}

fn minpoly(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let (cp, _, ladder) = ladder_of(single(req)?)?;
    ladder.require_real()?;
    let mut results = ladder_json(&ladder);
    results.insert("min_poly".into(), poly_json(&real_minimal_polynomial(&cp)?));
    Ok(AnalysisReport::new(req.command, Value::Object(results)).exact(&[("dets", true), ("min_poly", true)]))
}

fn factor(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let cp = single(req)?.characteristic_polynomial()?;
    let spectrum = multiplicity_spectrum(&cp)?;
    let syzygies = syzygy_check(&cp, &spectrum)?;
    let vanishing: Vec<Value> = syzygies
        .vanishing
        .iter()
        .map(|(q, orders)| json!({ "q": q, "orders": orders }))
        .collect();
    let results = json!({
        "n": spectrum.n,
        "m": spectrum.m,
        "l": spectrum.l(),
        "min_poly": poly_json(&spectrum.min_poly),
        "spectrum": spectrum_json(&spectrum),
        "reconstructs": spectrum.reconstruct() == cp,
        "syzygies": { "vanishing": vanishing, "count": syzygies.count, "expected": syzygies.expected },
    });
    Ok(AnalysisReport::new(req.command, results).exact(&[("spectrum", true), ("syzygies", true)]))
}

fn gap(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let cp = single(req)?.characteristic_polynomial()?;
    let it = min_gap(&cp, &req.options.iter_options())?;
    let last = it.last_eps_sq();
    let mu = if it.exact_hit { exact_sqrt(last) } else { None };
    let results = json!({
        "converged": it.converged,
        "exact_hit": it.exact_hit,
        "iterations": it.iterations(),
        "eps_sq": capped(it.eps_sq.iter().map(r).collect()),
        "certified_lower": r(&it.certified_lower),
        "mu_sq": if it.exact_hit { r(last) } else { Value::Null },
        "mu": mu.as_ref().map_or(Value::Null, r),
        "gap_poly": poly_json(&it.gap_poly),
    });
    let mut report = AnalysisReport::new(req.command, results).exact(&[
        ("eps_sq", !it.rounded),
        ("certified_lower", mu.is_some()),
        ("mu", true),
        ("gap_poly", true),
    ]);
    if it.rounded {
        report.warnings.push("iterates were rounded down to keep sizes bounded".into());
    }
    if !it.converged {
        report.warnings.push(format!("gap iteration stopped after {} steps", it.iterations()));
        report.incomplete = Some(Error::NotConverged(it.iterations()));
    }
    Ok(report)
}

fn bounds(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let cp = single(req)?.characteristic_polynomial()?;
    let pm = real_minimal_polynomial(&cp)?;
    let (lo, hi) = initial_outer_bounds(&pm)?;
    let opts = req.options.iter_options();
    let min = extremal_bound(&pm, Side::Min, &opts)?;
    let max = extremal_bound(&pm, Side::Max, &opts)?;
    let results = json!({
        "initial": [lo.to_string(), hi.to_string()],
        "min": extremal_json(&min),
        "max": extremal_json(&max),
    });
    let mut report = AnalysisReport::new(req.command, results).exact(&[
        ("initial", true),
        ("certified_bound", false),
        ("limit", true),
    ]);
    for it in [&min, &max] {
        if !it.converged {
            report.warnings.push(format!("{} iteration stopped after {} steps", it.side, it.iterations()));
            report.incomplete = Some(Error::NotConverged(it.iterations()));
        }
    }
    Ok(report)
}

fn count(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let (a, b) = req
        .interval
        .clone()
        .ok_or_else(|| Error::InvalidInput("count needs \"interval\": [a, b]".into()))?;
    let (_, t, ladder) = ladder_of(single(req)?)?;
    ladder.require_real()?;
    let seq = HankelSequence::new(&t, ladder.m)?;
    let results = json!({
        "interval": [a.to_string(), b.to_string()],
        "m": ladder.m,
        "count": seq.count(&a, &b)?,
        "variations": [seq.variations_at(&a)?, seq.variations_at(&b)?],
    });
    Ok(AnalysisReport::new(req.command, results).exact(&[("count", true)]))
}

fn rates(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let m = match &req.payload {
        Payload::Order(m) => *m,
        Payload::Single(op) => {
            let (_, _, ladder) = ladder_of(op)?;
            ladder.require_real()?;
            ladder.m
        }
        Payload::Pair(..) => return Err(Error::InvalidInput("rates takes a single operand".into())),
    };
    let steps = req.steps.or(req.options.max_iter).unwrap_or(DEFAULT_RATE_STEPS);
    let report = rate_report(m, &req.delta, steps)?;
    let exact_steps = (0..report.v.len()).take_while(|&k| report.is_exact(k)).count();
    let results = json!({
        "m": m,
        "B": r(&report.b),
        "A": r(&report.a),
        "one_minus_A": r(&report.upper_geo),
        "lower_ratio": r(&report.lower_geo),
        "v": capped(report.v.iter().map(interval_json).collect()),
        "v_exact_steps": exact_steps.saturating_sub(1),
        "sandwich_holds": report.violations().next().is_none(),
        "delta": report.delta.to_string(),
        "k_min": report.k_min,
        "k_max": report.k_max,
        "first_below_delta": report.first_below,
    });
    let mut out = AnalysisReport::new(req.command, results).exact(&[
        ("A", true),
        ("B", true),
        ("v", exact_steps == report.v.len()),
        ("k_window", false),
    ]);
    out.warnings.extend(report.violations().map(|c| {
        format!("sandwich at k = {}: lower {}, upper {}", c.k, c.lower.as_str(), c.upper.as_str())
    }));
    Ok(out)
}

fn classify(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let cp = single(req)?.characteristic_polynomial()?;
    let spectrum = multiplicity_spectrum(&cp)?;
    let sig = spectrum_signature(&spectrum)?;
    Ok(AnalysisReport::new(req.command, signature_json(&sig)).exact(&[("ordered_multiplicities", true)]))
}

fn compare(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let Payload::Pair(p, q) = &req.payload else {
        return Err(Error::InvalidInput("compare needs \"first\" and \"second\"".into()));
    };
    let count = 2 * p.degree().max(q.degree());
    let (tp, tq) = (p.traces(count)?, q.traces(count)?);
    let cmp = compare_traces(&tp, &tq)?;
    let sp = spectrum_signature(&multiplicity_spectrum(&p.characteristic_polynomial()?)?)?;
    let sq = spectrum_signature(&multiplicity_spectrum(&q.characteristic_polynomial()?)?)?;
    let results = json!({
        "same_orbit": cmp.same_orbit(),
        "same_class": sp.ordered_multiplicities == sq.ordered_multiplicities,
        "traces": {
            "m": [cmp.m.0, cmp.m.1],
            "compared": cmp.compared,
            "first_difference": cmp.first_difference,
            "first": capped(tp.values()[..cmp.compared].iter().map(r).collect()),
            "second": capped(tq.values()[..cmp.compared].iter().map(r).collect()),
        },
        "signatures": [sp.ordered_multiplicities, sq.ordered_multiplicities],
    });
    Ok(AnalysisReport::new(req.command, results).exact(&[("same_orbit", true), ("same_class", true)]))
}

/// Dispatch a validated request.
pub fn run_command(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let mut report = match req.command {
        Command::Analyze => analyze(req),
        Command::Minpoly => minpoly(req),
        Command::Factor => factor(req),
        Command::Gap => gap(req),
        Command::Bounds => bounds(req),
        Command::Count => count(req),
        Command::Rates => rates(req),
        Command::Classify => classify(req),
        Command::Compare => compare(req),
    }?;
    let mut warnings = req.warnings.clone();
    warnings.append(&mut report.warnings);
    report.warnings = warnings;
    Ok(report)
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parse, run and render in one go.
pub fn execute(command: Command, document: &str, options: Options) -> Outcome {
    let format = options.format;
    let result = parse_input(document, command, options).and_then(|req| run_command(&req));
    match result {
        Ok(report) => Outcome {
            stdout: report.render(format),
            stderr: report.incomplete.as_ref().map(error_json).unwrap_or_default(),
            code: report.exit_code(),
        },
        Err(err) => Outcome { stdout: String::new(), stderr: error_json(&err), code: exit_code(&err) },
    }
}

/// Parse a `--tol` value; it must be a positive rational.
pub fn parse_tolerance(text: &str) -> Result<Rational> {
    let tol = field_rational(text, "--tol")?;
    if tol <= 0u32 || tol >= Rational::ONE {
        return Err(Error::InvalidInput(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    Ok(tol)
}
