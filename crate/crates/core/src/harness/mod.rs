//! Exhaustive checks of strongly J#-clean ring results over a catalog of
//! rings.
//!
//! Every check scans a subject ring (and rings derived from it) for a tuple
//! of elements at which a named predicate from [`predicates`] fails. A
//! failure carries that predicate's name, the DSL expression of the ring it
//! was found in and the elements, so it can be replayed with
//! [`replay_witness`].

mod checks;
pub mod predicates;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use checks::{CheckDef, CHECKS};
pub use predicates::{Env, Predicate, ShapeReq, PREDICATES};

use crate::cache::SetCache;
use crate::classify::local_test;
use crate::constructions::BUILTIN_GROUPS;
use crate::dsl::{build_ring, parse_catalog};
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Shape};

/// The shipped catalog manifest.
pub const DEFAULT_CATALOG: &str = include_str!("../../catalog/default.txt");

/// Derived group rings `GR(R,G)` and `K(R,s)` are added only up to this order.
pub const DERIVED_ORDER_LIMIT: u128 = 256;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct Witness {
    pub predicate: String,
    /// DSL expression of the ring the elements belong to.
    pub ring: String,
    pub roles: Vec<String>,
    pub elements: Vec<usize>,
    #[serde(skip)]
    env: Option<Arc<Env>>,
}

impl fmt::Debug for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Witness")
            .field("predicate", &self.predicate)
            .field("ring", &self.ring)
            .field("roles", &self.roles)
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for Witness {
    fn eq(&self, other: &Self) -> bool {
        (&self.predicate, &self.ring, &self.roles, &self.elements)
            == (&other.predicate, &other.ring, &other.roles, &other.elements)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub elapsed_ms: f64,
}

/// What a check body reports.
pub(crate) enum Outcome {
    Pass(Option<String>),
    Fail { reason: String, witness: Witness },
    Skip(String),
}

/// A ring under test.
pub struct Subject {
    pub expr: String,
    pub derived: bool,
    pub build_ms: f64,
    env: Arc<Env>,
}

impl Subject {
    pub fn new(expr: impl Into<String>, ring: FiniteRing, derived: bool) -> Self {
        Self { expr: expr.into(), derived, build_ms: 0.0, env: Arc::new(Env::new(ring)) }
    }

    pub fn from_expr(expr: &str) -> Result<Self> {
        let start = Instant::now();
        let ring = build_ring(expr)?;
        let mut s = Self::new(expr, ring, false);
        s.build_ms = millis(start);
        Ok(s)
    }

    pub fn ring(&self) -> &FiniteRing {
        self.env.ring()
    }

    pub(crate) fn env(&self) -> &Arc<Env> {
        &self.env
    }

    pub fn group(&self) -> Option<String> {
        match self.ring().shape() {
            Shape::GroupRing { group, .. } => Some(group.label().to_string()),
            _ => None,
        }
    }
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn check_def(id: &str) -> Result<&'static CheckDef> {
    CHECKS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Run one check on one subject. Shape mismatches are reported as skipped.
pub fn run_check(id: &str, subject: &Subject) -> Result<CheckResult> {
    Ok(execute(check_def(id)?, subject))
}

fn execute(def: &CheckDef, subject: &Subject) -> CheckResult {
    let start = Instant::now();
    let outcome = if def.scope.admits(subject.ring()) {
        (def.run)(subject)
    } else {
        Outcome::Skip(format!("not applicable: {}", def.scope_text()))
    };
    let mut result = CheckResult {
        check_id: def.id.to_string(),
        subject: subject.expr.clone(),
        group: subject.group(),
        status: Status::Pass,
        reason: None,
        witness: None,
        note: None,
        elapsed_ms: 0.0,
    };
    match outcome {
        Outcome::Pass(note) => result.note = note,
        Outcome::Skip(reason) => {
            result.status = Status::Skipped;
            result.reason = Some(reason);
        }
        Outcome::Fail { reason, witness } => {
            result.status = Status::Fail;
            result.reason = Some(reason);
            if !replay_on(&witness) {
                log::error!("{} on {}: witness does not replay", def.id, subject.expr);
                result.note = Some("witness did not reproduce on replay".to_string());
            }
            result.witness = Some(witness);
        }
    }
    result.elapsed_ms = millis(start);
    result
}

fn replay_on(w: &Witness) -> bool {
    let Some(env) = &w.env else { return false };
    match predicates::predicate(&w.predicate) {
        Some(p) => p.shape.admits(env.ring()) && !(p.eval)(env, &w.elements),
        None => false,
    }
}

/// Rebuild the witness ring from its expression and re-evaluate the
/// predicate. `Ok(true)` when the failure reproduces.
pub fn replay_witness(w: &Witness) -> Result<bool> {
    let p = predicates::predicate(&w.predicate).ok_or_else(|| Error::UnknownCheck(w.predicate.clone()))?;
    let ring = build_ring(&w.ring)?;
    if !p.shape.admits(&ring) || w.elements.len() != p.roles.len() {
        return Ok(false);
    }
    if let Some(&bad) = w.elements.iter().find(|&&x| x >= ring.order()) {
        return Err(Error::ElementOutOfRange { index: bad, order: ring.order() });
    }
    let env = Env::new(ring);
    Ok(!(p.eval)(&env, &w.elements))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubjectSummary {
    pub subject: String,
    pub order: usize,
    pub derived: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<String>,
    pub build_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuildFailure {
    pub subject: String,
    pub line: usize,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub subjects: Vec<SubjectSummary>,
    pub build_failures: Vec<BuildFailure>,
    pub checks: Vec<String>,
    pub totals: Totals,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.summary.totals.fail == 0 && self.summary.build_failures.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    /// One JSON object per result, then `{"summary": ...}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&serde_json::to_string(r).expect("result serializes"));
            out.push('\n');
        }
        out.push_str(&serde_json::json!({ "summary": &self.summary }).to_string());
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Restrict to these check ids (in registry order).
    pub checks: Option<Vec<String>>,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// Add derived group-ring and `K(R,s)` subjects.
    pub derive: bool,
    pub cache: Option<SetCache>,
}

impl SuiteOptions {
    pub fn new() -> Self {
        Self { derive: true, ..Self::default() }
    }
}

/// Catalog subjects in manifest order, then derived subjects. Entries that
/// cannot be built are returned separately.
pub fn load_subjects(catalog: &str, derive: bool) -> Result<(Vec<Subject>, Vec<BuildFailure>)> {
    let entries = parse_catalog(catalog)?;
    if entries.is_empty() {
        return Err(Error::EmptyCatalog);
    }
    let mut seen = BTreeSet::new();
    let mut subjects = Vec::new();
    let mut failures = Vec::new();
    for entry in &entries {
        let expr = entry.ast.to_string();
        if !seen.insert(expr.clone()) {
            continue;
        }
        match Subject::from_expr(&expr) {
            Ok(s) => subjects.push(s),
            Err(e) => failures.push(BuildFailure { subject: expr, line: entry.line, error: e.to_string() }),
        }
    }
    if derive {
        let mut derived = Vec::new();
        for s in &subjects {
            for expr in derived_exprs(s.ring()) {
                if seen.insert(expr.clone()) {
                    match Subject::from_expr(&expr) {
                        Ok(mut d) => {
                            d.derived = true;
                            derived.push(d);
                        }
                        Err(e) => log::warn!("skipping derived subject {expr}: {e}"),
                    }
                }
            }
        }
        subjects.extend(derived);
    }
    Ok((subjects, failures))
}

/// `GR(R,G)` over the builtin groups and `K(R,s)` for central `s` when `R` is
/// local, within [`DERIVED_ORDER_LIMIT`].
fn derived_exprs(r: &FiniteRing) -> Vec<String> {
    let mut out = Vec::new();
    if r.is_trivial() || matches!(r.shape(), Shape::GroupRing { .. } | Shape::GenMatrix { .. }) {
        return out;
    }
    let n = r.order() as u128;
    for g in BUILTIN_GROUPS {
        let gorder = crate::constructions::builtin_group(g).expect("builtin group").order();
        if n.checked_pow(gorder as u32).is_some_and(|size| size <= DERIVED_ORDER_LIMIT) {
            out.push(format!("GR({},{g})", r.label()));
        }
    }
    if local_test(r).is_ok() && n.pow(4) <= DERIVED_ORDER_LIMIT {
        for s in r.center().iter() {
            out.push(format!("K({},{s})", r.label()));
        }
    }
    out
}

/// Run the selected checks over every applicable subject.
pub fn run_subjects(subjects: &[Subject], opts: &SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let defs: Vec<&CheckDef> = match &opts.checks {
        Some(ids) => {
            let wanted: Vec<&CheckDef> = ids.iter().map(|id| check_def(id)).collect::<Result<_>>()?;
            CHECKS.iter().filter(|c| wanted.iter().any(|w| w.id == c.id)).collect()
        }
        None => CHECKS.iter().collect(),
    };
    if let Some(cache) = &opts.cache {
        for s in subjects {
            if let Err(e) = cache.load_or_compute(s.ring()) {
                log::warn!("structural sets of {}: {e}", s.expr);
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..defs.len())
        .flat_map(|c| (0..subjects.len()).map(move |s| (c, s)))
        .filter(|&(c, s)| defs[c].scope.admits(subjects[s].ring()))
        .collect();
    let work = || pairs.par_iter().map(|&(c, s)| execute(defs[c], &subjects[s])).collect::<Vec<_>>();
    let results = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InternalInconsistency(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    let mut totals = Totals::default();
    for r in &results {
        match r.status {
            Status::Pass => totals.pass += 1,
            Status::Fail => totals.fail += 1,
            Status::Skipped => totals.skipped += 1,
        }
    }
    let summary = Summary {
        subjects: subjects
            .iter()
            .map(|s| SubjectSummary {
                subject: s.expr.clone(),
                order: s.ring().order(),
                derived: s.derived,
                group: s.group(),
                build_ms: s.build_ms,
            })
            .collect(),
        build_failures: Vec::new(),
        checks: defs.iter().map(|d| d.id.to_string()).collect(),
        totals,
        elapsed_ms: millis(start),
    };
    Ok(SuiteReport { results, summary })
}

/// Parse a catalog manifest, derive subjects and run the suite.
pub fn run_suite(catalog: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let (subjects, failures) = load_subjects(catalog, opts.derive)?;
    let mut report = run_subjects(&subjects, opts)?;
    report.summary.build_failures = failures;
    Ok(report)
}
