//! Verification suites: printed series and cross-route identities, oracle
//! counts against series coefficients, bijection round trips, and OEIS
//! alignments.
//!
//! Checks within a suite run in parallel; the report keeps the order in
//! which they were declared.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{phi, phi_inv, psi, psi_inv};
use crate::catalog::bounded::{self, EndKind};
use crate::catalog::{evaluate, grand, poly, special, GrandSeries, Params};
use crate::oeis::{align_and_compare, OeisClient, CITED};
use crate::oracle::{
    count_paths, enum_compositions, enum_h, enum_motzkin_avoiding, enum_paths, CompositionKind,
    Family, FamilySpec, StepKind,
};
use crate::printed;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    PrintedSeries,
    DualPath,
    OracleVsGf,
    BijectionRoundtrip,
    GfVsOeis,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::PrintedSeries => "printed_series",
            CheckKind::DualPath => "dual_path",
            CheckKind::OracleVsGf => "oracle_vs_gf",
            CheckKind::BijectionRoundtrip => "bijection_roundtrip",
            CheckKind::GfVsOeis => "gf_vs_oeis",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub subject: String,
    pub kind: CheckKind,
    pub range: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<String>,
}

impl Check {
    fn new(
        subject: impl Into<String>,
        kind: CheckKind,
        range: impl Into<String>,
        mismatch: Option<String>,
    ) -> Self {
        Check {
            subject: subject.into(),
            kind,
            range: range.into(),
            status: if mismatch.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            first_mismatch: mismatch,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Reference,
    Oracle,
    Bijections,
    Oeis,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper-series" => Ok(Suite::Reference),
            "oracle" => Ok(Suite::Oracle),
            "bijections" => Ok(Suite::Bijections),
            "oeis" => Ok(Suite::Oeis),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} {} [{}]", c.kind, c.subject, c.range));
            if let Some(m) = &c.first_mismatch {
                out.push_str(&format!(": {m}"));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        ));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("status,kind,subject,range,first_mismatch\n");
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            let fields = [
                status,
                &c.kind.to_string(),
                &c.subject,
                &c.range,
                c.first_mismatch.as_deref().unwrap_or(""),
            ];
            let quoted: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
            out.push_str(&quoted.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest length used by oracle and bijection checks (bounded families
    /// go two further).
    pub max_n: usize,
    /// Series order for identity checks.
    pub order: usize,
    pub offline: bool,
    pub refresh: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 10,
            order: 30,
            offline: false,
            refresh: false,
        }
    }
}

type Job = Box<dyn Fn() -> Vec<Check> + Send + Sync>;

fn run(suite: &str, jobs: Vec<Job>) -> VerificationReport {
    let checks = jobs.par_iter().flat_map_iter(|j| j()).collect();
    VerificationReport {
        suite: suite.to_string(),
        checks,
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerificationReport {
    let (name, jobs) = match suite {
        Suite::Reference => ("paper-series", reference_jobs(opts)),
        Suite::Oracle => ("oracle", oracle_jobs(opts)),
        Suite::Bijections => ("bijections", bijection_jobs(opts)),
        Suite::Oeis => ("oeis", oeis_jobs(opts)),
        Suite::All => {
            let mut jobs = reference_jobs(opts);
            jobs.extend(oracle_jobs(opts));
            jobs.extend(bijection_jobs(opts));
            jobs.extend(oeis_jobs(opts));
            ("all", jobs)
        }
    };
    run(name, jobs)
}

fn subject(name: &str, p: &Params) -> String {
    let mut parts = Vec::new();
    if let Some(k) = p.k {
        parts.push(format!("k={k}"));
    }
    if let Some(t) = p.t {
        parts.push(format!("t={t}"));
    }
    if let Some(m) = p.m {
        parts.push(format!("m={m}"));
    }
    if parts.is_empty() {
        name.to_string()
    } else {
        format!("{name}[{}]", parts.join(","))
    }
}

/// First index where `got` differs from `expected`, described.
pub fn first_difference(expected: &[BigInt], got: &TruncatedSeries) -> Option<String> {
    let Some(ints) = got.to_integers() else {
        return Some("non-integer coefficient".into());
    };
    for (n, e) in expected.iter().enumerate() {
        match ints.get(n) {
            Some(g) if g == e => {}
            Some(g) => return Some(format!("x^{n}: expected {e}, got {g}")),
            None => return Some(format!("x^{n}: beyond computed order")),
        }
    }
    None
}

fn ints(c: &[i64]) -> Vec<BigInt> {
    c.iter().map(|&v| BigInt::from(v)).collect()
}

fn series_eq(subject: String, range: String, a: &TruncatedSeries, b: &TruncatedSeries) -> Check {
    let order = a.order().min(b.order());
    let (a, b) = (a.truncate(order), b.truncate(order));
    let mismatch = (0..=order)
        .find(|&n| a.coeff(n) != b.coeff(n))
        .map(|n| format!("x^{n}: {} vs {}", a.coeff(n), b.coeff(n)));
    Check::new(subject, CheckKind::DualPath, range, mismatch)
}

fn reference_jobs(opts: &VerifyOptions) -> Vec<Job> {
    let order = opts.order;
    let mut jobs: Vec<Job> = Vec::new();

    for p in printed::SERIES {
        jobs.push(Box::new(move || {
            let deg = p.coeffs.len() - 1;
            let got = evaluate(p.name, p.params, deg).map(|s| s.series);
            let mismatch = match got {
                Ok(s) => first_difference(&ints(p.coeffs), &s),
                Err(e) => Some(e.to_string()),
            };
            vec![Check::new(
                subject(p.name, &p.params),
                CheckKind::PrintedSeries,
                format!("x^0..x^{deg}"),
                mismatch,
            )]
        }));
    }
    jobs.push(Box::new(|| {
        printed::D
            .iter()
            .enumerate()
            .map(|(t, d)| {
                let got = bounded::d_recurrence(t, 8);
                Check::new(
                    format!("D[t={t}]"),
                    CheckKind::PrintedSeries,
                    "polynomial",
                    first_difference(&ints(d), &got),
                )
            })
            .collect()
    }));
    jobs.push(Box::new(|| {
        printed::N_TABLE
            .iter()
            .map(|&(k, t, n)| {
                let mismatch = match bounded::n_recurrence(k, t, 8) {
                    Ok(s) => first_difference(&ints(n), &s).or_else(|| {
                        (s.degree().unwrap_or(0) >= n.len()).then(|| "extra terms".to_string())
                    }),
                    Err(e) => Some(e.to_string()),
                };
                Check::new(
                    format!("N[k={k},t={t}]"),
                    CheckKind::PrintedSeries,
                    "polynomial",
                    mismatch,
                )
            })
            .collect()
    }));

    // Closed forms against linear systems.
    jobs.push(Box::new(move || {
        let sys = match grand::grand_from_systems(order) {
            Ok(s) => s,
            Err(e) => {
                return vec![Check::new(
                    "grand systems",
                    CheckKind::DualPath,
                    "",
                    Some(e.to_string()),
                )]
            }
        };
        GrandSeries::ALL
            .iter()
            .map(|&g| {
                series_eq(
                    format!("{g}: closed form vs system"),
                    format!("order {order}"),
                    &grand::grand(g, order),
                    &sys.get(g),
                )
            })
            .collect()
    }));
    jobs.push(Box::new(move || {
        let g = |w| grand::grand(w, order);
        let one = TruncatedSeries::one(order);
        let x = TruncatedSeries::x(order);
        let x2 = poly(&[0, 0, 1], order);
        let fm1 = grand::prefix(-1, order).unwrap();
        let fm2 = grand::prefix(-2, order).unwrap();
        let range = format!("order {order}");
        vec![
            series_eq(
                "G = Gp + Gm".into(),
                range.clone(),
                &g(GrandSeries::G),
                &(&g(GrandSeries::Gp) + &g(GrandSeries::Gm)),
            ),
            series_eq(
                "Gm2 = Gp1 (mirror)".into(),
                range.clone(),
                &g(GrandSeries::Gm2),
                &g(GrandSeries::Gp1),
            ),
            series_eq(
                "G = 1 + f0 + g0".into(),
                range.clone(),
                &g(GrandSeries::G),
                &(&(&one + &g(GrandSeries::F0)) + &g(GrandSeries::G0)),
            ),
            series_eq(
                "x * prefix(-1) = Gp - 1".into(),
                range.clone(),
                &(&x * &fm1),
                &(&g(GrandSeries::Gp) - &one),
            ),
            series_eq(
                "x^2 * prefix(-2) = Gp2".into(),
                range.clone(),
                &(&x2 * &fm2),
                &g(GrandSeries::Gp2),
            ),
            series_eq(
                "prefix_pos_total: closed form vs sum over k".into(),
                range.clone(),
                &grand::prefix_positive_total(order),
                &grand::prefix_positive_sum(order),
            ),
            Check::new(
                "A functional equation",
                CheckKind::DualPath,
                range,
                (!grand::dap_functional_residual(&grand::dap(order)).is_zero())
                    .then(|| "nonzero residual".into()),
            ),
        ]
    }));
    jobs.push(Box::new(move || {
        let mut out = Vec::new();
        for m in [0i64, -1, -2, -3] {
            let closed = grand::minorized(m, 16).unwrap();
            let mismatch = match bounded::minorized_from_system(m, 16) {
                Ok(sys) => series_eq(String::new(), String::new(), &closed, &sys).first_mismatch,
                Err(e) => Some(e.to_string()),
            };
            out.push(Check::new(
                format!("minorized[m={m}]: closed form vs strip system"),
                CheckKind::DualPath,
                "order 16",
                mismatch,
            ));
        }
        out
    }));
    for t in 0..=6usize {
        jobs.push(Box::new(move || {
            let r = bounded::d_recurrence(t, order);
            vec![
                series_eq(
                    format!("D[t={t}]: recurrence vs closed form"),
                    format!("order {order}"),
                    &r,
                    &bounded::d_closed(t, order),
                ),
                series_eq(
                    format!("D[t={t}]: recurrence vs determinant"),
                    format!("order {order}"),
                    &r,
                    &bounded::d_determinant(t, order),
                ),
            ]
        }));
    }
    for t in 0..=3usize {
        jobs.push(Box::new(move || {
            (0..=2 * t + 1)
                .map(|k| {
                    series_eq(
                        format!("N[k={k},t={t}]: recurrence vs Cramer determinant"),
                        "exact".into(),
                        &bounded::n_recurrence(k, t, 20).unwrap(),
                        &bounded::n_determinant(k, t, 20).unwrap(),
                    )
                })
                .collect()
        }));
    }
    for t in 1..=4usize {
        jobs.push(Box::new(move || {
            let sol = match bounded::bounded_0t_system(t, order) {
                Ok(s) => s,
                Err(e) => {
                    return vec![Check::new(
                        format!("[0,{t}] system"),
                        CheckKind::DualPath,
                        "",
                        Some(e.to_string()),
                    )]
                }
            };
            let mut out = Vec::new();
            for k in 0..=t {
                for (kind, idx, label) in [(EndKind::F, k, "f"), (EndKind::G, t + 1 + k, "g")] {
                    out.push(series_eq(
                        format!("{label}[k={k},t={t}]: Cramer vs system"),
                        format!("order {order}"),
                        &bounded::bounded_0t(k, t, kind, order).unwrap(),
                        &sol[idx],
                    ));
                }
            }
            out.push(series_eq(
                format!("g0t[t={t}]: closed form vs Cramer"),
                format!("order {order}"),
                &bounded::g0t_closed(t, order),
                &bounded::bounded_0t(0, t, EndKind::G, order).unwrap(),
            ));
            out
        }));
    }
    for t in 1..=5usize {
        jobs.push(Box::new(move || {
            vec![series_eq(
                format!("D'[t={t}] = D[t={}]", 2 * t),
                "exact".into(),
                &bounded::d_prime_determinant(t, 24),
                &bounded::d_recurrence(2 * t, 24),
            )]
        }));
    }
    for t in 1..=3usize {
        jobs.push(Box::new(move || {
            let d = |s| bounded::d_recurrence(s, 24);
            let n_up = bounded::n_recurrence(t + 1, t, 24).unwrap();
            let sym = bounded::bounded_sym(t, order).unwrap();
            let mut out = vec![
                series_eq(
                    format!("Ntilde[k=0,t={t}] = D[t-1] D[t]"),
                    "exact".into(),
                    &bounded::n_tilde_determinant(0, t, 24).unwrap(),
                    &(&d(t - 1) * &d(t)),
                ),
                series_eq(
                    format!("Ntilde[k={},t={t}] = D[t-1] N[t+1,t]", 2 * t + 1),
                    "exact".into(),
                    &bounded::n_tilde_determinant(2 * t as i64 + 1, t, 24).unwrap(),
                    &(&d(t - 1) * &n_up),
                ),
                series_eq(
                    format!("sym[t={t}]: product formula vs Cramer"),
                    format!("order {order}"),
                    &sym,
                    &bounded::bounded_sym_cramer(t, order).unwrap(),
                ),
            ];
            let check = match bounded::bounded_sym_system(t, order) {
                Ok(rows) => {
                    let (_, f0, g0) = &rows[t];
                    series_eq(
                        format!("sym[t={t}]: product formula vs system"),
                        format!("order {order}"),
                        &sym,
                        &(f0 + g0),
                    )
                }
                Err(e) => Check::new(
                    format!("sym[t={t}] system"),
                    CheckKind::DualPath,
                    "",
                    Some(e.to_string()),
                ),
            };
            out.push(check);
            out
        }));
    }
    jobs.push(Box::new(move || {
        let levels = special::special_h_levels(order, order);
        let mut out = vec![
            series_eq(
                format!("H: B_k at k={order} vs closed form"),
                format!("order {order}"),
                &levels[order].1,
                &special::special_h(order),
            ),
            Check::new(
                "H quadratic residual",
                CheckKind::DualPath,
                format!("order {order}"),
                (!special::special_h_residual(&special::special_h(order)).is_zero())
                    .then(|| "nonzero residual".into()),
            ),
        ];
        let bad = (1..=order)
            .find(|&k| !special::backward_residual(&levels[k - 1].1, &levels[k].1).is_zero());
        out.push(Check::new(
            "H backward relation between B_{k-1} and B_k",
            CheckKind::DualPath,
            format!("k=1..{order}"),
            bad.map(|k| format!("fails at k={k}")),
        ));
        out
    }));
    jobs
}

/// A catalog entry and the oracle family it counts. `empty_bonus` corrects
/// the length-0 count where the series and the family disagree about the
/// empty path.
struct OraclePair {
    name: &'static str,
    params: Params,
    spec: FamilySpec,
    empty_bonus: i128,
    bounded: bool,
}

fn oracle_pairs() -> Vec<OraclePair> {
    use StepKind::{Down, Up};
    let none = Params::default();
    let p = |name, params, spec, empty_bonus| OraclePair {
        name,
        params,
        spec,
        empty_bonus,
        bounded: false,
    };
    let b = |name, params, spec, empty_bonus| OraclePair {
        name,
        params,
        spec,
        empty_bonus,
        bounded: true,
    };
    let g = FamilySpec::gdap;
    let mut v = vec![
        p("A", none, FamilySpec::new(Family::Dap), 0),
        p("P", none, FamilySpec::new(Family::Prime), 0),
        p("Gp1", none, g().start_step(Up).end_step(Down), 0),
        p("Gp2", none, g().start_step(Up).end_step(Up), 0),
        p("Gp", none, g().start_step(Up), 1),
        p("Gm", none, g().start_step(Down), 0),
        p("G", none, g(), 0),
        p("Gm1", none, g().start_step(Down).end_step(Down), 0),
        p("Gm2", none, g().start_step(Down).end_step(Up), 0),
        p("f0", none, g().end_step(Up), 0),
        p("g0", none, g().end_step(Down), 0),
        p("H", none, FamilySpec::new(Family::SpecialH), 0),
    ];
    for k in 0..=3 {
        v.push(p(
            "T",
            Params::k(k),
            FamilySpec::prefix().min_y(0).end_ordinate(k),
            0,
        ));
    }
    for k in [-3, -2, -1, 1, 2, 3] {
        v.push(p(
            "prefix",
            Params::k(k),
            FamilySpec::prefix().end_ordinate(k),
            0,
        ));
    }
    for m in [0, -1, -2] {
        v.push(p(
            "minorized",
            Params::m(m),
            FamilySpec::prefix().min_y(m),
            0,
        ));
    }
    for t in 1..=4 {
        v.push(b("g0t", Params::t(t), g().bounded(0, t), -1));
        v.push(b("sym", Params::t(t), g().bounded(-t, t), 0));
        for k in 0..=t {
            let base = FamilySpec::prefix().bounded(0, t).end_ordinate(k);
            v.push(b(
                "fkt",
                Params::kt(k, t),
                base.clone().end_step(Up),
                i128::from(k == 0),
            ));
            v.push(b("gkt", Params::kt(k, t), base.end_step(Down), 0));
        }
    }
    for k in 0..=3 {
        v.push(b(
            "Hk",
            Params::k(k),
            FamilySpec::new(Family::SpecialH).max_y(k),
            0,
        ));
    }
    v
}

fn oracle_jobs(opts: &VerifyOptions) -> Vec<Job> {
    let max_n = opts.max_n;
    let mut jobs: Vec<Job> = oracle_pairs()
        .into_iter()
        .map(|pair| -> Job {
            Box::new(move || {
                let top = if pair.bounded { max_n + 2 } else { max_n };
                let mismatch = match evaluate(pair.name, pair.params, top) {
                    Err(e) => Some(e.to_string()),
                    Ok(s) => {
                        let coeffs = s.series.to_integers();
                        (0..=top).find_map(|n| {
                            let bonus = if n == 0 { pair.empty_bonus } else { 0 };
                            // No path of length n climbs above n; the oracle rejects
                            // such a spec, but the slice is simply empty.
                            let raw = if pair.spec.end_ordinate.is_some_and(|e| e > n as i64) {
                                0
                            } else {
                                match count_paths(n, &pair.spec) {
                                    Ok(c) => c,
                                    Err(e) => return Some(format!("n={n}: oracle error: {e}")),
                                }
                            };
                            let count = raw as i128 + bonus;
                            let c = coeffs.as_ref().map(|v| v[n].clone());
                            (c != Some(BigInt::from(count))).then(|| {
                                format!(
                                    "n={n}: oracle {count}, series {}",
                                    c.map_or("non-integer".into(), |c| c.to_string())
                                )
                            })
                        })
                    }
                };
                vec![Check::new(
                    subject(pair.name, &pair.params),
                    CheckKind::OracleVsGf,
                    format!("n=0..{top}"),
                    mismatch,
                )]
            })
        })
        .collect();
    jobs.push(Box::new(move || {
        let h = special::special_h(max_n);
        let coeffs = h.to_integers().unwrap();
        let listing = (0..=max_n).find_map(|n| {
            let count = BigInt::from(enum_h(n).len());
            (count != coeffs[n]).then(|| format!("n={n}: |H_n| = {count}, B has {}", coeffs[n]))
        });
        let motzkin = (0..=max_n).find_map(|n| {
            let (m, h) = (enum_motzkin_avoiding(n).len(), enum_h(n).len());
            (m != h).then(|| format!("n={n}: {m} Motzkin paths, {h} members of H"))
        });
        vec![
            Check::new(
                "H listing vs B",
                CheckKind::OracleVsGf,
                format!("n=0..{max_n}"),
                listing,
            ),
            Check::new(
                "Motzkin avoiding UH,HU,HH vs H",
                CheckKind::OracleVsGf,
                format!("n=0..{max_n}"),
                motzkin,
            ),
        ]
    }));
    jobs
}

fn bijection_jobs(opts: &VerifyOptions) -> Vec<Job> {
    let max_n = opts.max_n;
    vec![
        Box::new(move || {
            let spec = FamilySpec::gdap().bounded(0, 2);
            let mut bad = None;
            'outer: for n in 2..=max_n {
                for path in enum_paths(n, &spec).unwrap() {
                    let c = match psi(&path) {
                        Ok(c) => c,
                        Err(e) => {
                            bad = Some(format!("psi({path}): {e}"));
                            break 'outer;
                        }
                    };
                    if c.total() != n as u64 - 2 || !c.is_alternating() {
                        bad = Some(format!("psi({path}) = {c} is not in C({})", n - 2));
                        break 'outer;
                    }
                    if psi_inv(&c).as_ref() != Ok(&path) {
                        bad = Some(format!("psi_inv(psi({path})) != {path}"));
                        break 'outer;
                    }
                }
            }
            let inverse = (0..=max_n.saturating_sub(2)).find_map(|m| {
                enum_compositions(m, CompositionKind::Alt)
                    .into_iter()
                    .find_map(|c| {
                        let ok = psi_inv(&c).ok().and_then(|p| psi(&p).ok()).as_ref() == Some(&c);
                        (!ok).then(|| format!("psi(psi_inv({c})) != {c}"))
                    })
            });
            let counts = (2..=max_n).find_map(|n| {
                let paths = count_paths(n, &spec).unwrap();
                let comps = enum_compositions(n - 2, CompositionKind::Alt).len() as u128;
                (paths != comps).then(|| format!("n={n}: {paths} paths, {comps} compositions"))
            });
            let example = match psi(&printed::PSI_EXAMPLE_PATH.parse().unwrap()) {
                Ok(c) if c.to_string() == printed::PSI_EXAMPLE_COMPOSITION => None,
                other => Some(format!("{other:?}")),
            };
            vec![
                Check::new(
                    "psi_inv . psi",
                    CheckKind::BijectionRoundtrip,
                    format!("n=2..{max_n}"),
                    bad,
                ),
                Check::new(
                    "psi . psi_inv",
                    CheckKind::BijectionRoundtrip,
                    format!("m=0..{}", max_n.saturating_sub(2)),
                    inverse,
                ),
                Check::new(
                    "|G[0,2](n)| = |C(n-2)|",
                    CheckKind::BijectionRoundtrip,
                    format!("n=2..{max_n}"),
                    counts,
                ),
                Check::new(
                    "psi worked example",
                    CheckKind::BijectionRoundtrip,
                    printed::PSI_EXAMPLE_PATH,
                    example,
                ),
            ]
        }),
        Box::new(move || {
            let spec = FamilySpec::gdap().bounded(-1, 1);
            let mut bad = None;
            'outer: for n in 0..=max_n {
                for path in enum_paths(n, &spec).unwrap() {
                    let c = match phi(&path) {
                        Ok(c) => c,
                        Err(e) => {
                            bad = Some(format!("phi({path}): {e}"));
                            break 'outer;
                        }
                    };
                    if c.total() != n as u64 + 3 || !c.is_alternating_odd_even() {
                        bad = Some(format!("phi({path}) = {c} is not in C'({})", n + 3));
                        break 'outer;
                    }
                    if phi_inv(&c).as_ref() != Ok(&path) {
                        bad = Some(format!("phi_inv(phi({path})) != {path}"));
                        break 'outer;
                    }
                }
            }
            let inverse = (3..=max_n + 3).find_map(|m| {
                enum_compositions(m, CompositionKind::AltOddEven)
                    .into_iter()
                    .find_map(|c| {
                        let ok = phi_inv(&c).ok().and_then(|p| phi(&p).ok()).as_ref() == Some(&c);
                        (!ok).then(|| format!("phi(phi_inv({c})) != {c}"))
                    })
            });
            let counts = (0..=max_n).find_map(|n| {
                let paths = count_paths(n, &spec).unwrap();
                let comps = enum_compositions(n + 3, CompositionKind::AltOddEven).len() as u128;
                (paths != comps).then(|| format!("n={n}: {paths} paths, {comps} compositions"))
            });
            let example = match phi(&printed::PHI_EXAMPLE_PATH.parse().unwrap()) {
                Ok(c) if c.to_string() == printed::PHI_EXAMPLE_COMPOSITION => None,
                other => Some(format!("{other:?}")),
            };
            vec![
                Check::new(
                    "phi_inv . phi",
                    CheckKind::BijectionRoundtrip,
                    format!("n=0..{max_n}"),
                    bad,
                ),
                Check::new(
                    "phi . phi_inv",
                    CheckKind::BijectionRoundtrip,
                    format!("m=3..{}", max_n + 3),
                    inverse,
                ),
                Check::new(
                    "|G[-1,1](n)| = |C'(n+3)|",
                    CheckKind::BijectionRoundtrip,
                    format!("n=0..{max_n}"),
                    counts,
                ),
                Check::new(
                    "phi worked example",
                    CheckKind::BijectionRoundtrip,
                    printed::PHI_EXAMPLE_PATH,
                    example,
                ),
            ]
        }),
    ]
}

fn oeis_jobs(opts: &VerifyOptions) -> Vec<Job> {
    let offline = opts.offline;
    let refresh = opts.refresh;
    CITED
        .iter()
        .map(|pair| -> Job {
            Box::new(move || {
                let client = OeisClient::new().offline(offline).refresh(refresh);
                let mismatch = client
                    .fetch(pair.id)
                    .map_err(|e| e.to_string())
                    .and_then(|rec| {
                        let s = evaluate(pair.name, pair.params, 30).map_err(|e| e.to_string())?;
                        align_and_compare(&s.series, &rec, 9).map_err(|e| e.to_string())
                    })
                    .err();
                vec![Check::new(
                    format!("{} vs {}", subject(pair.name, &pair.params), pair.id),
                    CheckKind::GfVsOeis,
                    "min_match 9",
                    mismatch,
                )]
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_suite_is_green() {
        let r = run_suite(
            Suite::Reference,
            &VerifyOptions {
                order: 20,
                ..Default::default()
            },
        );
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn report_formats() {
        let r = VerificationReport {
            suite: "x".into(),
            checks: vec![
                Check::new("a", CheckKind::DualPath, "n=0..3", None),
                Check::new(
                    "b, c",
                    CheckKind::OracleVsGf,
                    "n=0..3",
                    Some("n=1: 2 vs 3".into()),
                ),
            ],
        };
        assert!(!r.passed());
        assert!(r
            .to_plain()
            .contains("FAIL oracle_vs_gf b, c [n=0..3]: n=1: 2 vs 3"));
        assert!(r.to_csv().contains("fail,oracle_vs_gf,\"b, c\""));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0].get("first_mismatch").is_none());
    }
}
