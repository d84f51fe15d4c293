//! Exact solvers for the zero forcing, power domination, domination, total
//! domination, path cover and spider numbers.
//!
//! Set parameters are found by scanning cardinalities upward and, within a
//! cardinality, subsets in ascending bitmask order, so the witness is the
//! numerically smallest minimum set. Partition parameters use a subset DP
//! `f(S) = 1 + min f(S \ Q)` over admissible parts `Q` containing the lowest
//! vertex of `S`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{k_subsets, Graph, VertexSet};
use crate::propagation::{closure, closure_with_log, ForceLog};

/// Largest order accepted by the partition solvers.
pub const MAX_PARTITION_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Set(VertexSet),
    Partition(Vec<VertexSet>),
}

impl Witness {
    pub fn cardinality(&self) -> usize {
        match self {
            Witness::Set(s) => s.len(),
            Witness::Partition(p) => p.len(),
        }
    }

    pub fn as_set(&self) -> Option<VertexSet> {
        match self {
            Witness::Set(s) => Some(*s),
            Witness::Partition(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamResult {
    pub value: usize,
    pub witness: Witness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ForceLog>,
}

impl ParamResult {
    fn set(s: VertexSet) -> Self {
        ParamResult { value: s.len(), witness: Witness::Set(s), certificate: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parameter {
    #[serde(rename = "zf")]
    ZeroForcing,
    #[serde(rename = "pd")]
    PowerDomination,
    #[serde(rename = "dom")]
    Domination,
    #[serde(rename = "tdom")]
    TotalDomination,
    #[serde(rename = "pathcover")]
    PathCover,
    #[serde(rename = "spider")]
    Spider,
}

impl Parameter {
    pub const ALL: [Parameter; 6] = [
        Parameter::ZeroForcing,
        Parameter::PowerDomination,
        Parameter::Domination,
        Parameter::TotalDomination,
        Parameter::PathCover,
        Parameter::Spider,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::ZeroForcing => "zf",
            Parameter::PowerDomination => "pd",
            Parameter::Domination => "dom",
            Parameter::TotalDomination => "tdom",
            Parameter::PathCover => "pathcover",
            Parameter::Spider => "spider",
        }
    }

    pub fn compute(self, g: &Graph) -> Result<ParamResult> {
        match self {
            Parameter::ZeroForcing => zero_forcing_number(g),
            Parameter::PowerDomination => power_domination_number(g),
            Parameter::Domination => domination_number(g),
            Parameter::TotalDomination => total_domination_number(g),
            Parameter::PathCover => path_cover_number(g),
            Parameter::Spider => spider_number(g),
        }
    }

    /// Re-checks a witness against the defining predicate of the parameter.
    pub fn accepts(self, g: &Graph, witness: &Witness) -> bool {
        match (self, witness) {
            (Parameter::ZeroForcing, Witness::Set(s)) => closure(g, *s) == g.vertex_set(),
            (Parameter::PowerDomination, Witness::Set(s)) => is_pd(g, *s),
            (Parameter::Domination, Witness::Set(s)) => g.closed_neighborhood_of(*s) == g.vertex_set(),
            (Parameter::TotalDomination, Witness::Set(s)) => g.open_neighborhood_of(*s) == g.vertex_set(),
            (Parameter::PathCover, Witness::Partition(p)) => {
                is_partition(g, p) && p.iter().all(|&q| induces_path(g, q))
            }
            (Parameter::Spider, Witness::Partition(p)) => {
                is_partition(g, p) && p.iter().all(|&q| induces_spider(g, q))
            }
            _ => false,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownParameter(s.to_string()))
    }
}

fn is_partition(g: &Graph, parts: &[VertexSet]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &p in parts {
        if p.is_empty() || p.intersects(seen) {
            return false;
        }
        seen |= p;
    }
    seen == g.vertex_set()
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else if !g.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

/// Smallest set (by cardinality, then bitmask) with `lo <= |S| <= hi`
/// satisfying `pred`.
fn min_set<F: Fn(VertexSet) -> bool>(n: usize, lo: usize, hi: usize, pred: F) -> Option<VertexSet> {
    (lo..=hi.min(n)).find_map(|k| k_subsets(n, k).find(|&s| pred(s)))
}

fn is_pd(g: &Graph, s: VertexSet) -> bool {
    closure(g, g.closed_neighborhood_of(s)) == g.vertex_set()
}

/// Minimum zero forcing set, searched upward from `max(δ, 1)`: a set
/// smaller than the minimum degree cannot perform the first force.
pub fn zero_forcing_number(g: &Graph) -> Result<ParamResult> {
    require_connected(g)?;
    Ok(zero_forcing_number_capped(g, g.order())?.expect("V(G) is zero forcing"))
}

/// As [`zero_forcing_number`], but gives up (returning `None`) once the
/// cardinality would exceed `cap`.
pub fn zero_forcing_number_capped(g: &Graph, cap: usize) -> Result<Option<ParamResult>> {
    require_connected(g)?;
    let n = g.order();
    let all = g.vertex_set();
    let lo = g.min_degree().max(1);
    Ok(min_set(n, lo, cap, |s| closure(g, s) == all).map(|s| {
        let (_, log) = closure_with_log(g, s);
        ParamResult { certificate: Some(log), ..ParamResult::set(s) }
    }))
}

pub fn power_domination_number(g: &Graph) -> Result<ParamResult> {
    require_connected(g)?;
    Ok(power_domination_number_capped(g, g.order())?.expect("V(G) is power dominating"))
}

/// Minimum power dominating set of cardinality at most `cap`, if one exists.
pub fn power_domination_number_capped(g: &Graph, cap: usize) -> Result<Option<ParamResult>> {
    require_connected(g)?;
    Ok(min_set(g.order(), 1, cap, |s| is_pd(g, s)).map(|s| {
        let (_, log) = closure_with_log(g, g.closed_neighborhood_of(s));
        ParamResult { certificate: Some(log), ..ParamResult::set(s) }
    }))
}

/// Power domination number when an upper bound is already known (for
/// instance `min(γ, Z)`); the scan never looks past `upper`.
pub fn power_domination_number_bounded(g: &Graph, upper: usize) -> Result<ParamResult> {
    power_domination_number_capped(g, upper)?
        .ok_or(Error::BoundTooSmall(upper))
}

/// True iff `γ_P(g) <= k`. Cheaper than computing the value.
pub fn has_power_dominating_set_of_size(g: &Graph, k: usize) -> bool {
    min_set(g.order(), 1, k, |s| is_pd(g, s)).is_some()
}

pub fn domination_number(g: &Graph) -> Result<ParamResult> {
    require_connected(g)?;
    let all = g.vertex_set();
    Ok(ParamResult::set(
        min_set(g.order(), 1, g.order(), |s| g.closed_neighborhood_of(s) == all).unwrap(),
    ))
}

pub fn total_domination_number(g: &Graph) -> Result<ParamResult> {
    require_connected(g)?;
    if g.order() < 2 {
        return Err(Error::IsolatedVertex);
    }
    let all = g.vertex_set();
    Ok(ParamResult::set(
        min_set(g.order(), 2, g.order(), |s| g.open_neighborhood_of(s) == all).unwrap(),
    ))
}

pub fn diameter(g: &Graph) -> Result<usize> {
    g.diameter()
}

/// `q` is nonempty and `G[q]` is a path (a single vertex counts).
pub fn induces_path(g: &Graph, q: VertexSet) -> bool {
    g.is_connected_set(q)
        && g.edges_within(q) + 1 == q.len()
        && q.iter().all(|v| (g.adj(v) & q).len() <= 2)
}

/// `q` induces a tree with at most one vertex of degree above two. Paths,
/// `K1` and `K2` are included.
pub fn induces_spider(g: &Graph, q: VertexSet) -> bool {
    g.is_connected_set(q)
        && g.edges_within(q) + 1 == q.len()
        && q.iter().filter(|&v| (g.adj(v) & q).len() > 2).count() <= 1
}

/// Vertex sets of all induced paths, grouped by their lowest vertex and
/// sorted ascending within each group.
fn induced_paths_by_min(g: &Graph) -> Vec<Vec<VertexSet>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, set: VertexSet, found: &mut HashSet<VertexSet>) {
        found.insert(set);
        let last = *path.last().unwrap();
        let interior = set.without(last);
        for w in g.adj(last) - set {
            if g.adj(w).intersects(interior) {
                continue;
            }
            path.push(w);
            extend(g, path, set.with(w), found);
            path.pop();
        }
    }
    let n = g.order();
    let mut found = HashSet::new();
    for v in 0..n {
        extend(g, &mut vec![v], VertexSet::singleton(v), &mut found);
    }
    group_by_min(n, found)
}

fn group_by_min(n: usize, sets: impl IntoIterator<Item = VertexSet>) -> Vec<Vec<VertexSet>> {
    let mut groups = vec![Vec::new(); n];
    for s in sets {
        groups[s.first().unwrap()].push(s);
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

/// Minimum partition of `V(g)` into parts drawn from `parts_by_min`.
fn min_partition(n: usize, parts_by_min: &[Vec<VertexSet>]) -> Option<Vec<VertexSet>> {
    const UNKNOWN: u8 = u8::MAX;
    const NONE: u8 = u8::MAX - 1;
    fn solve(s: u64, parts: &[Vec<VertexSet>], memo: &mut [u8]) -> u8 {
        if s == 0 {
            return 0;
        }
        if memo[s as usize] != UNKNOWN {
            return memo[s as usize];
        }
        let rest = VertexSet(s);
        let low = rest.first().unwrap();
        let mut best = NONE;
        for &q in &parts[low] {
            if q.is_subset(rest) {
                let sub = solve(s & !q.0, parts, memo);
                if sub != NONE && sub + 1 < best {
                    best = sub + 1;
                }
            }
        }
        memo[s as usize] = best;
        best
    }
    let mut memo = vec![UNKNOWN; 1usize << n];
    let full = VertexSet::full(n).0;
    if solve(full, parts_by_min, &mut memo) == NONE {
        return None;
    }
    let mut s = full;
    let mut out = Vec::new();
    while s != 0 {
        let rest = VertexSet(s);
        let low = rest.first().unwrap();
        let target = memo[s as usize];
        let q = parts_by_min[low]
            .iter()
            .copied()
            .find(|q| q.is_subset(rest) && solve(s & !q.0, parts_by_min, &mut memo) + 1 == target)
            .unwrap();
        out.push(q);
        s &= !q.0;
    }
    Some(out)
}

fn partition_result(parts: Vec<VertexSet>) -> ParamResult {
    ParamResult { value: parts.len(), witness: Witness::Partition(parts), certificate: None }
}

fn check_partition_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_PARTITION_ORDER {
        Err(Error::OrderTooLarge { order: g.order(), max: MAX_PARTITION_ORDER })
    } else {
        Ok(())
    }
}

/// Minimum number of vertex-disjoint induced paths covering `V(g)`.
pub fn path_cover_number(g: &Graph) -> Result<ParamResult> {
    require_connected(g)?;
    check_partition_order(g)?;
    let parts = induced_paths_by_min(g);
    Ok(partition_result(min_partition(g.order(), &parts).expect("singletons always cover")))
}

/// Minimum number of parts, each inducing a (possibly degenerate) spider,
/// partitioning the vertices of the tree `t`.
pub fn spider_number(t: &Graph) -> Result<ParamResult> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    check_partition_order(t)?;
    let n = t.order();
    let mut spiders = Vec::new();
    for root in 0..n {
        let above = VertexSet::full(n) - VertexSet::full(root + 1);
        t.for_each_connected_set(root, above, &mut |s| {
            if induces_spider(t, s) {
                spiders.push(s);
            }
            true
        });
    }
    let parts = group_by_min(n, spiders);
    Ok(partition_result(min_partition(n, &parts).expect("singletons always cover")))
}
