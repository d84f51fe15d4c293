//! Minor containment for small fixed patterns, and the outerplanarity and
//! planarity tests built on it.
//!
//! For a connected pattern and a connected host, every minor model can be
//! grown until its branch sets cover the host, so it suffices to explore
//! edge contractions until the host has as many vertices as the pattern and
//! then test for a spanning subgraph. Contracted hosts are memoised by
//! canonical key. Two contractions are applied without branching: a vertex
//! of degree at most one is merged into its neighbour when the pattern has
//! minimum degree at least two, and a vertex of degree two is merged into a
//! neighbour when the pattern has minimum degree at least three.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{canonical_form, complete, complete_bipartite, CanonKey, MAX_CANON_ORDER};
use crate::graph::{Graph, VertexSet};

pub const MAX_PATTERN_ORDER: usize = 6;

/// Largest host accepted by [`is_planar`].
pub const MAX_PLANARITY_ORDER: usize = 12;

/// Hosts up to this order share a process-wide memo per pattern.
const SHARED_MEMO_ORDER: usize = 9;

/// One branch set per pattern vertex, in pattern order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    /// Checks disjointness, connectivity of every branch set, and that each
    /// pattern edge is realised by a host edge.
    pub fn check(&self, g: &Graph, pattern: &Graph) -> std::result::Result<(), String> {
        if self.branch_sets.len() != pattern.order() {
            return Err("wrong number of branch sets".into());
        }
        let mut used = VertexSet::EMPTY;
        for (p, &b) in self.branch_sets.iter().enumerate() {
            if !b.is_subset(g.vertex_set()) {
                return Err(format!("branch set {p} leaves the host"));
            }
            if b.intersects(used) {
                return Err(format!("branch set {p} overlaps an earlier one"));
            }
            if !g.is_connected_set(b) {
                return Err(format!("branch set {p} is empty or disconnected"));
            }
            used |= b;
        }
        for (p, q) in pattern.edges() {
            let (bp, bq) = (self.branch_sets[p], self.branch_sets[q]);
            if !g.open_neighborhood_of(bp).intersects(bq) {
                return Err(format!("pattern edge {p}-{q} not realised"));
            }
        }
        Ok(())
    }
}

type Model = Vec<VertexSet>;
/// Keyed by host order and canonical key; the key alone does not fix the order.
type Memo = HashMap<(usize, CanonKey), Option<Model>>;

struct Pattern<'a> {
    graph: &'a Graph,
    key: (usize, CanonKey),
    min_degree: usize,
    edges: usize,
}

/// Merge `v` into `a` (adjacent). Returns the contracted graph and, for each
/// of its vertices, the host vertices it stands for.
fn contract(g: &Graph, a: usize, v: usize) -> (Graph, Vec<VertexSet>) {
    let keep: Vec<usize> = (0..g.order()).filter(|&x| x != v).collect();
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &x) in keep.iter().enumerate() {
        pos[x] = i;
    }
    pos[v] = pos[a];
    let adj = keep
        .iter()
        .map(|&x| {
            let row = if x == a { g.adj(a) | g.adj(v) } else { g.adj(x) };
            row.iter().map(|y| pos[y]).filter(|&y| y != pos[x]).collect()
        })
        .collect();
    let groups = keep
        .iter()
        .map(|&x| if x == a { VertexSet::from_vertices([a, v]) } else { VertexSet::singleton(x) })
        .collect();
    (Graph::from_adjacency_unchecked(adj), groups)
}

fn lift(model: Model, groups: &[VertexSet]) -> Model {
    model
        .into_iter()
        .map(|b| b.iter().fold(VertexSet::EMPTY, |acc, i| acc | groups[i]))
        .collect()
}

/// Bijection pattern -> host (same order) mapping every pattern edge onto
/// a host edge.
fn spanning_embedding(g: &Graph, h: &Graph) -> Option<Model> {
    fn extend(g: &Graph, h: &Graph, order: &[usize], map: &mut Vec<usize>, used: VertexSet) -> bool {
        let i = map.iter().filter(|&&x| x != usize::MAX).count();
        if i == order.len() {
            return true;
        }
        let p = order[i];
        for x in g.vertex_set() - used {
            if g.degree(x) < h.degree(p) {
                continue;
            }
            let ok = h.adj(p).iter().all(|q| map[q] == usize::MAX || g.has_edge(x, map[q]));
            if ok {
                map[p] = x;
                if extend(g, h, order, map, used.with(x)) {
                    return true;
                }
                map[p] = usize::MAX;
            }
        }
        false
    }
    let mut order: Vec<usize> = (0..h.order()).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(h.degree(p)));
    let mut map = vec![usize::MAX; h.order()];
    extend(g, h, &order, &mut map, VertexSet::EMPTY)
        .then(|| map.into_iter().map(VertexSet::singleton).collect())
}

/// Model of `pat` in the connected graph `g`, whose branch sets partition `V(g)`.
fn search_connected(g: &Graph, pat: &Pattern, memo: &mut Memo) -> Option<Model> {
    let n = g.order();
    let k = pat.graph.order();
    if n < k || g.size() < pat.edges {
        return None;
    }
    if n == k {
        return spanning_embedding(g, pat.graph);
    }
    for v in 0..n {
        let d = g.degree(v);
        if (d <= 1 && pat.min_degree >= 2) || (d == 2 && pat.min_degree >= 3) {
            let a = g.adj(v).first().unwrap();
            let (child, groups) = contract(g, a, v);
            return search_connected(&child, pat, memo).map(|m| lift(m, &groups));
        }
    }
    let canon = (n <= MAX_CANON_ORDER).then(|| canonical_form(g).unwrap());
    if let Some((key, order)) = &canon {
        let hit = if n <= SHARED_MEMO_ORDER {
            shared_memo().lock().unwrap().get(&(pat.key, (n, *key))).cloned()
        } else {
            memo.get(&(n, *key)).cloned()
        };
        if let Some(found) = hit {
            return found.map(|m| from_canonical(&m, order));
        }
    }
    let mut found = None;
    for (a, v) in g.edges() {
        let (child, groups) = contract(g, a, v);
        if let Some(m) = search_connected(&child, pat, memo) {
            found = Some(lift(m, &groups));
            break;
        }
    }
    if let Some((key, order)) = canon {
        let stored = found.as_ref().map(|m| to_canonical(m, &order));
        if n <= SHARED_MEMO_ORDER {
            shared_memo().lock().unwrap().insert((pat.key, (n, key)), stored);
        } else {
            memo.insert((n, key), stored);
        }
    }
    found
}

type SharedMemo = HashMap<((usize, CanonKey), (usize, CanonKey)), Option<Model>>;

fn shared_memo() -> &'static Mutex<SharedMemo> {
    static MEMO: OnceLock<Mutex<SharedMemo>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn to_canonical(model: &Model, order: &[usize]) -> Model {
    model
        .iter()
        .map(|b| (0..order.len()).filter(|&i| b.contains(order[i])).collect())
        .collect()
}

fn from_canonical(model: &Model, order: &[usize]) -> Model {
    model.iter().map(|b| b.iter().map(|i| order[i]).collect()).collect()
}

/// General fallback for disconnected patterns: try every vertex deletion
/// as well as every contraction.
fn search_any(g: &Graph, pat: &Pattern, memo: &mut Memo) -> Option<Model> {
    let n = g.order();
    let k = pat.graph.order();
    if n < k || g.size() < pat.edges {
        return None;
    }
    if n == k {
        return spanning_embedding(g, pat.graph);
    }
    let canon = (n <= MAX_CANON_ORDER).then(|| canonical_form(g).unwrap());
    if let Some((key, order)) = &canon {
        if let Some(found) = memo.get(&(n, *key)) {
            return found.as_ref().map(|m| from_canonical(m, order));
        }
    }
    let mut found = None;
    for v in 0..n {
        let (child, map) = g.induced_subgraph(g.vertex_set().without(v)).unwrap();
        if let Some(m) = search_any(&child, pat, memo) {
            let groups: Vec<VertexSet> = map.into_iter().map(VertexSet::singleton).collect();
            found = Some(lift(m, &groups));
            break;
        }
    }
    if found.is_none() {
        for (a, v) in g.edges() {
            let (child, groups) = contract(g, a, v);
            if let Some(m) = search_any(&child, pat, memo) {
                found = Some(lift(m, &groups));
                break;
            }
        }
    }
    if let Some((key, order)) = canon {
        memo.insert((n, key), found.as_ref().map(|m| to_canonical(m, &order)));
    }
    found
}

/// A minor model of `pattern` in `g`, if `pattern` is a minor of `g`.
pub fn has_minor(g: &Graph, pattern: &Graph) -> Result<Option<MinorWitness>> {
    let k = pattern.order();
    if k > MAX_PATTERN_ORDER {
        return Err(Error::PatternTooLarge(k));
    }
    if k == 0 {
        return Ok(Some(MinorWitness { branch_sets: Vec::new() }));
    }
    if g.order() < k || g.size() < pattern.size() {
        return Ok(None);
    }
    let pat = Pattern {
        graph: pattern,
        key: (k, canonical_form(pattern)?.0),
        min_degree: pattern.min_degree(),
        edges: pattern.size(),
    };
    let mut memo = Memo::new();
    let found = if pattern.is_connected() {
        g.components().into_iter().find_map(|comp| {
            let (sub, map) = g.induced_subgraph(comp).unwrap();
            let groups: Vec<VertexSet> = map.into_iter().map(VertexSet::singleton).collect();
            search_connected(&sub, &pat, &mut memo).map(|m| lift(m, &groups))
        })
    } else {
        // memo keys must not mix with the connected search
        let pat = Pattern { key: (k + MAX_PATTERN_ORDER + 1, pat.key.1), ..pat };
        search_any(g, &pat, &mut memo)
    };
    Ok(found.map(|branch_sets| MinorWitness { branch_sets }))
}

fn k4() -> &'static Graph {
    static G: OnceLock<Graph> = OnceLock::new();
    G.get_or_init(|| complete(4).unwrap())
}

fn k23() -> &'static Graph {
    static G: OnceLock<Graph> = OnceLock::new();
    G.get_or_init(|| complete_bipartite(2, 3).unwrap())
}

fn k5() -> &'static Graph {
    static G: OnceLock<Graph> = OnceLock::new();
    G.get_or_init(|| complete(5).unwrap())
}

fn k33() -> &'static Graph {
    static G: OnceLock<Graph> = OnceLock::new();
    G.get_or_init(|| complete_bipartite(3, 3).unwrap())
}

/// No `K4` minor and no `K_{2,3}` minor. Graphs with more than `2n - 3`
/// edges are rejected without a minor search.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 2 && g.size() > 2 * n - 3 {
        return false;
    }
    has_minor(g, k4()).unwrap().is_none() && has_minor(g, k23()).unwrap().is_none()
}

/// No `K5` minor and no `K_{3,3}` minor. Graphs with more than `3n - 6`
/// edges are rejected without a minor search.
pub fn is_planar(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > MAX_PLANARITY_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_PLANARITY_ORDER });
    }
    if n >= 3 && g.size() > 3 * n - 6 {
        return Ok(false);
    }
    Ok(has_minor(g, k5())?.is_none() && has_minor(g, k33())?.is_none())
}

/// A forbidden minor witnessing non-outerplanarity, if any.
pub fn outerplanarity_obstruction(g: &Graph) -> Option<(Graph, MinorWitness)> {
    for pat in [k4(), k23()] {
        if let Some(w) = has_minor(g, pat).unwrap() {
            return Some((pat.clone(), w));
        }
    }
    None
}
