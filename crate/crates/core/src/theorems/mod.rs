//! Verification harness. Each verifier checks one claim exhaustively over a
//! bounded universe of graphs and reports every counterexample it finds.
//!
//! A verifier splits its universe into items (one or two graphs plus a case
//! string carrying whatever else the check needs). Evaluating an item only
//! depends on the item, which makes every failure replayable on its own.

mod basic;
mod degree;
mod operations;
mod universe;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{parse_graph6, write_graph6};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
    T16,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::T15,
        TheoremId::T16,
    ];

    fn verifier(self) -> &'static dyn Verifier {
        match self {
            TheoremId::T1 => &basic::PathCharacterization,
            TheoremId::T2 => &basic::ZeroForcingTwo,
            TheoremId::T3 => &basic::UniversalVertex,
            TheoremId::T4 => &basic::SmallestGraphs,
            TheoremId::T5 => &basic::FamilyTable,
            TheoremId::T6 => &basic::Multipartite,
            TheoremId::T7 => &basic::SpiderNumber,
            TheoremId::T8 => &degree::PlanarDiameter,
            TheoremId::T9 => &degree::LargeMaxDegree,
            TheoremId::T10 => &degree::TwinLemma,
            TheoremId::T11 => &degree::CodegreeTwoRegular,
            TheoremId::T12 => &operations::TotalDominationTwo,
            TheoremId::T13 => &operations::Lexicographic,
            TheoremId::T14 => &operations::Grid,
            TheoremId::T15 => &operations::CartesianBounds,
            TheoremId::T16 => &operations::CartesianPrism,
        }
    }

    pub fn claim(self) -> &'static str {
        self.verifier().claim()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Universe parameters shared by all verifiers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Overrides the verifier's default order bound. Its meaning is
    /// verifier specific (graph order, factor order or product order).
    pub max_n: Option<usize>,
    /// graph6 files whose graphs join the enumerated universes.
    pub universe: Vec<PathBuf>,
    /// Use the built-in enumerator. When off, enumerated universes come
    /// from `universe` files only.
    pub builtin: bool,
    /// Worker threads; `None` uses the available parallelism.
    pub workers: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: None, universe: Vec::new(), builtin: true, workers: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    /// graph6 of the graph (two space-separated encodings for pairs).
    pub graph: String,
    /// `<item case>/<sub-claim>`.
    pub case: String,
    pub expected: String,
    pub observed: String,
}

/// Outcome of a bounded existence search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub name: String,
    pub cap: String,
    pub examined: usize,
    pub witness: Option<String>,
    /// The witness re-checked from its graph6 encoding alone.
    pub verified: bool,
}

impl SearchOutcome {
    pub fn line(&self) -> String {
        match &self.witness {
            Some(w) => format!(
                "{}: witness {} ({}) after {} graphs",
                self.name,
                w,
                if self.verified { "re-checked" } else { "RE-CHECK FAILED" },
                self.examined
            ),
            None => format!("{}: no witness up to cap ({}), {} graphs examined", self.name, self.cap, self.examined),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem_id: TheoremId,
    pub claim: String,
    pub universe: String,
    pub graphs_checked: usize,
    /// Items checked, keyed by graph order (product order for pairs).
    pub per_order: BTreeMap<usize, usize>,
    pub failures: Vec<Failure>,
    pub searches: Vec<SearchOutcome>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out += &format!("{} [{}] {}\n", self.theorem_id, verdict, self.claim);
        out += &format!("  universe: {}\n", self.universe);
        let orders: Vec<String> = self.per_order.iter().map(|(n, c)| format!("{n}:{c}")).collect();
        out += &format!("  checked:  {} ({})\n", self.graphs_checked, orders.join(" "));
        out += &format!("  elapsed:  {} ms\n", self.elapsed_ms);
        if !self.failures.is_empty() {
            out += &format!("  failures: {}\n", self.failures.len());
            let w = self.failures.iter().map(|f| f.graph.len()).max().unwrap_or(0);
            for f in &self.failures {
                out += &format!(
                    "    {:<w$}  {}  expected {}, observed {}\n",
                    f.graph, f.case, f.expected, f.observed
                );
            }
        }
        for s in &self.searches {
            out += &format!("  search:   {}\n", s.line());
        }
        for n in &self.notes {
            out += &format!("  note:     {n}\n");
        }
        out
    }
}

pub(crate) struct Item {
    pub graphs: Vec<Graph>,
    pub case: String,
    pub order: usize,
}

impl Item {
    pub fn single(g: Graph, case: impl Into<String>) -> Self {
        let order = g.order();
        Item { graphs: vec![g], case: case.into(), order }
    }

    pub fn pair(g: Graph, h: Graph, case: impl Into<String>) -> Self {
        let order = g.order() * h.order();
        Item { graphs: vec![g, h], case: case.into(), order }
    }
}

pub(crate) struct Violation {
    pub sub: String,
    pub expected: String,
    pub observed: String,
}

impl Violation {
    pub fn new(sub: &str, expected: impl fmt::Display, observed: impl fmt::Display) -> Self {
        Violation { sub: sub.to_string(), expected: expected.to_string(), observed: observed.to_string() }
    }
}

#[derive(Default)]
pub(crate) struct Eval {
    pub violations: Vec<Violation>,
    /// Labels attached to the item for the verifier's own bookkeeping.
    pub flags: Vec<&'static str>,
}

impl Eval {
    pub fn check(&mut self, ok: bool, sub: &str, expected: impl fmt::Display, observed: impl fmt::Display) {
        if !ok {
            self.violations.push(Violation::new(sub, expected, observed));
        }
    }
}

pub(crate) struct Plan {
    pub universe: String,
    pub items: Vec<Item>,
    pub notes: Vec<String>,
}

/// Graphs flagged during evaluation: flag -> graph6 encodings, sorted by
/// (order, encoding).
pub(crate) type Flagged = BTreeMap<&'static str, Vec<String>>;

pub(crate) trait Verifier: Sync {
    fn claim(&self) -> &'static str;
    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan>;
    fn eval(&self, graphs: &[Graph], case: &str) -> Result<Eval>;
    fn finish(&self, _cfg: &VerifyConfig, _flagged: &Flagged, _report: &mut VerifyReport) -> Result<()> {
        Ok(())
    }
}

fn encode(graphs: &[Graph]) -> String {
    graphs.iter().map(write_graph6).collect::<Vec<_>>().join(" ")
}

fn run(id: TheoremId, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    let v = id.verifier();
    let plan = v.plan(cfg)?;
    let evals: Vec<(&Item, Eval)> = plan
        .items
        .par_iter()
        .map(|item| v.eval(&item.graphs, &item.case).map(|e| (item, e)))
        .collect::<Result<_>>()?;

    let mut per_order = BTreeMap::new();
    let mut failures = Vec::new();
    let mut flagged_raw: BTreeMap<&'static str, Vec<(usize, String)>> = BTreeMap::new();
    for (item, eval) in &evals {
        *per_order.entry(item.order).or_insert(0) += 1;
        if eval.violations.is_empty() && eval.flags.is_empty() {
            continue;
        }
        let graph = encode(&item.graphs);
        for viol in &eval.violations {
            failures.push(Failure {
                graph: graph.clone(),
                case: format!("{}/{}", item.case, viol.sub),
                expected: viol.expected.clone(),
                observed: viol.observed.clone(),
            });
        }
        for &flag in &eval.flags {
            flagged_raw.entry(flag).or_default().push((item.order, graph.clone()));
        }
    }
    failures.sort();
    failures.dedup();
    let flagged: Flagged = flagged_raw
        .into_iter()
        .map(|(k, mut v)| {
            v.sort();
            v.dedup();
            (k, v.into_iter().map(|(_, g)| g).collect())
        })
        .collect();

    let mut report = VerifyReport {
        theorem_id: id,
        claim: v.claim().to_string(),
        universe: plan.universe,
        graphs_checked: plan.items.len(),
        per_order,
        failures,
        searches: Vec::new(),
        notes: plan.notes,
        verdict: Verdict::Pass,
        elapsed_ms: 0,
    };
    v.finish(cfg, &flagged, &mut report)?;
    if !report.failures.is_empty() {
        report.verdict = Verdict::Fail;
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs one verifier.
pub fn verify(id: TheoremId, cfg: &VerifyConfig) -> Result<VerifyReport> {
    match cfg.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Io(e.to_string()))?;
            pool.install(|| run(id, cfg))
        }
        None => run(id, cfg),
    }
}

/// Parses theorem ids and runs each in order. Unknown ids produce an error
/// entry without stopping the others.
pub fn verify_ids(ids: &[&str], cfg: &VerifyConfig) -> Vec<(String, Result<VerifyReport>)> {
    ids.iter()
        .map(|s| (s.to_string(), s.parse::<TheoremId>().and_then(|id| verify(id, cfg))))
        .collect()
}

/// Re-evaluates a reported failure from its graph6 encoding and case
/// string alone. Returns the failure as observed now, or `None` if the
/// sub-claim holds on replay.
pub fn replay_failure(id: TheoremId, failure: &Failure) -> Result<Option<Failure>> {
    let graphs: Vec<Graph> = failure.graph.split(' ').map(parse_graph6).collect::<Result<_>>()?;
    let (case, sub) = failure
        .case
        .rsplit_once('/')
        .ok_or_else(|| Error::Graph6(format!("malformed case {:?}", failure.case)))?;
    let eval = id.verifier().eval(&graphs, case)?;
    Ok(eval.violations.into_iter().find(|v| v.sub == sub).map(|v| Failure {
        graph: failure.graph.clone(),
        case: failure.case.clone(),
        expected: v.expected,
        observed: v.observed,
    }))
}

/// Looks up `key=value` in a colon-separated case string.
pub(crate) fn case_field<'a>(case: &'a str, key: &str) -> Result<&'a str> {
    case.split(':')
        .find_map(|part| part.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .ok_or_else(|| Error::Graph6(format!("case {case:?} lacks field {key}")))
}

pub(crate) fn case_usize(case: &str, key: &str) -> Result<usize> {
    case_field(case, key)?
        .parse()
        .map_err(|_| Error::Graph6(format!("case {case:?}: field {key} is not a number")))
}

pub(crate) fn cap_check(id: &str, value: usize, cap: usize, what: &str) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded {
            theorem: id.to_string(),
            message: format!("{what} {value} exceeds cap {cap}"),
        });
    }
    Ok(())
}

/// Runs `pred` over graphs in order and returns the first hit, its index
/// and the number examined up to and including it.
pub(crate) fn first_hit<F>(graphs: &[Graph], pred: F) -> (Option<usize>, usize)
where
    F: Fn(&Graph) -> bool + Sync,
{
    match graphs.par_iter().position_first(|g| pred(g)) {
        Some(i) => (Some(i), i + 1),
        None => (None, graphs.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse() {
        assert_eq!("t7".parse::<TheoremId>().unwrap(), TheoremId::T7);
        assert_eq!("T16".parse::<TheoremId>().unwrap(), TheoremId::T16);
        assert!(matches!("BOGUS".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn case_fields() {
        assert_eq!(case_field("grid:m=4:n=7", "m").unwrap(), "4");
        assert_eq!(case_usize("grid:m=4:n=7", "n").unwrap(), 7);
        assert!(case_field("grid:m=4", "n").is_err());
    }
}
