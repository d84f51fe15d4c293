//! Canonical labelling and exhaustive generation of small graphs up to
//! isomorphism.
//!
//! The canonical key of a graph is the adjacency bitstring (upper triangle,
//! column order, first bit most significant) of a canonical relabelling.
//! The relabelling is found by ordered partition refinement followed by
//! individualisation; the key is the minimum over all leaves of that search
//! tree. Twin vertices are interchangeable by an automorphism that fixes
//! every other vertex, so only one member per twin class is individualised.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub type CanonKey = u128;

/// Largest order for which [`canonical_key`] is defined (the key must fit
/// in 128 bits).
pub const MAX_CANON_ORDER: usize = 16;

/// Largest order served by the built-in enumerator.
pub const MAX_ENUM_ORDER: usize = 9;

/// Largest order for [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 16;

/// Adjacency bitstring of `g` under the labelling `order`, where `order[i]`
/// is the original vertex placed at position `i`.
pub fn key_under(g: &Graph, order: &[usize]) -> CanonKey {
    let mut key: CanonKey = 0;
    for v in 1..order.len() {
        let row = g.adj(order[v]);
        for &u in &order[..v] {
            key = key << 1 | row.contains(u) as CanonKey;
        }
    }
    key
}

/// Inverse of [`key_under`] for the identity labelling.
pub fn graph_from_key(n: usize, key: CanonKey) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = bits;
    for v in 1..n {
        for u in 0..v {
            k -= 1;
            if key >> k & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|&m| (g.adj(v) & m).len() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if next.last().unwrap().len() != cell.len() {
                changed = true;
            }
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(CanonKey, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(t) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let key = key_under(g, &order);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            *best = Some((key, order));
        }
        return;
    };
    let cell = &cells[t];
    let mut reps: Vec<usize> = Vec::new();
    for &v in cell {
        if !reps.iter().any(|&w| g.are_twins(v, w).unwrap()) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut branch = Vec::with_capacity(cells.len() + 1);
        branch.extend_from_slice(&cells[..t]);
        branch.push(vec![v]);
        branch.push(cells[t].iter().copied().filter(|&w| w != v).collect());
        branch.extend_from_slice(&cells[t + 1..]);
        search(g, branch, best);
    }
}

/// Canonical key together with the canonical labelling (`order[i]` is the
/// original vertex that receives label `i`).
pub fn canonical_form(g: &Graph) -> Result<(CanonKey, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_CANON_ORDER });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    Ok(best.unwrap())
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey> {
    canonical_form(g).map(|(k, _)| k)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(graph_from_key(g.order(), canonical_key(g)?))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

type Level = Arc<Vec<Graph>>;

fn cache() -> &'static Mutex<HashMap<usize, Level>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Level>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn extend_level(prev: &[Graph], n: usize) -> Vec<Graph> {
    let m = n - 1;
    // Every graph of order n arises from one of order n-1 by adding a
    // vertex of maximum degree, so only such extensions are generated.
    let keys: HashSet<CanonKey> = prev
        .par_iter()
        .map(|g| {
            let mut local = HashSet::new();
            let base = g.adjacency().to_vec();
            let max_deg = g.max_degree();
            for mask in 0u64..(1u64 << m) {
                let s = VertexSet(mask);
                let d = s.len();
                if d < max_deg {
                    continue;
                }
                if s.iter().any(|v| g.degree(v) + 1 > d) {
                    continue;
                }
                let mut adj = base.clone();
                for v in s {
                    adj[v].insert(m);
                }
                adj.push(s);
                let h = Graph::from_adjacency_unchecked(adj);
                local.insert(canonical_key(&h).unwrap());
            }
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut keys: Vec<CanonKey> = keys.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|k| graph_from_key(n, k)).collect()
}

/// Every graph of order `n` (connected or not), one per isomorphism class,
/// in ascending canonical-key order.
pub fn enumerate_all(n: usize) -> Result<Level> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ENUM_ORDER });
    }
    if let Some(level) = cache().lock().unwrap().get(&n) {
        return Ok(level.clone());
    }
    let level: Level = if n == 0 {
        Arc::new(vec![Graph::empty(0)?])
    } else {
        let prev = enumerate_all(n - 1)?;
        Arc::new(extend_level(&prev, n))
    };
    cache().lock().unwrap().insert(n, level.clone());
    Ok(level)
}

/// Connected graphs of order `n`, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ENUM_ORDER });
    }
    Ok(enumerate_all(n)?.iter().filter(|g| g.is_connected()).cloned().collect())
}

/// Trees of order `n`, one per isomorphism class, grown by leaf addition.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_TREE_ORDER });
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        let mut keys = HashSet::new();
        for t in &level {
            for v in 0..m {
                let mut adj = t.adjacency().to_vec();
                adj[v].insert(m);
                adj.push(VertexSet::singleton(v));
                keys.insert(canonical_key(&Graph::from_adjacency_unchecked(adj))?);
            }
        }
        let mut keys: Vec<_> = keys.into_iter().collect();
        keys.sort_unstable();
        level = keys.into_iter().map(|k| graph_from_key(m + 1, k)).collect();
    }
    Ok(level)
}

fn partitions_min_part(n: usize, min: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in min..=n {
        for mut rest in partitions_min_part(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Connected `(n-3)`-regular graphs of order `n`: exactly the connected
/// complements of disjoint unions of cycles.
pub fn enumerate_codegree_two_regular(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_CANON_ORDER });
    }
    let mut out = Vec::new();
    for parts in partitions_min_part(n, 3) {
        let mut edges = Vec::new();
        let mut base = 0;
        for &len in &parts {
            edges.extend((0..len).map(|i| (base + i, base + (i + 1) % len)));
            base += len;
        }
        let g = Graph::from_edges(n, edges)?.complement();
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_key(g: &Graph) -> CanonKey {
        // minimum over all n! labellings (Heap's algorithm)
        let n = g.order();
        let mut p: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut best = key_under(g, &p);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    p.swap(0, i);
                } else {
                    p.swap(c[i], i);
                }
                best = best.min(key_under(g, &p));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
        let bits = n * (n - 1) / 2;
        (0u128..1 << bits).map(move |k| graph_from_key(n, k))
    }

    #[test]
    fn key_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 4), (2, 3)]).unwrap();
        let ident: Vec<usize> = (0..5).collect();
        assert_eq!(graph_from_key(5, key_under(&g, &ident)), g);
    }

    #[test]
    fn canonical_classes_match_permutation_minimum() {
        // Two labelled graphs share a canonical key iff they share the
        // brute-force minimum key.
        for n in 1..=5 {
            let mut pairs: HashMap<CanonKey, CanonKey> = HashMap::new();
            let mut reverse: HashMap<CanonKey, CanonKey> = HashMap::new();
            for g in all_labelled(n) {
                let fast = canonical_key(&g).unwrap();
                let slow = brute_key(&g);
                assert_eq!(*pairs.entry(fast).or_insert(slow), slow);
                assert_eq!(*reverse.entry(slow).or_insert(fast), fast);
            }
            let expected = [1, 2, 4, 11, 34][n - 1];
            assert_eq!(pairs.len(), expected, "n={n}");
        }
    }

    #[test]
    fn canonical_form_is_a_relabelling() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let (key, order) = canonical_form(&g).unwrap();
        assert_eq!(key_under(&g, &order), key);
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(sorted, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_counts() {
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            assert_eq!(enumerate_all(n).unwrap().len(), all[n], "all n={n}");
            assert_eq!(enumerate_connected(n).unwrap().len(), connected[n - 1], "connected n={n}");
        }
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(MAX_ENUM_ORDER + 1).is_err());
    }

    #[test]
    fn connected_four_matches_brute_force_dedup() {
        let mut classes = HashSet::new();
        for g in all_labelled(4) {
            if g.is_connected() {
                classes.insert(brute_key(&g));
            }
        }
        assert_eq!(classes.len(), 6);
    }

    #[test]
    fn tree_counts() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for n in 1..=10 {
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len(), expected[n - 1], "n={n}");
            assert!(trees.iter().all(|t| t.is_tree()));
        }
    }

    #[test]
    fn codegree_two_regular() {
        // n=5: complement of C5 is C5; n=6: complement of C6 (the prism)
        // and of 2C3 (K_{3,3}).
        assert_eq!(enumerate_codegree_two_regular(5).unwrap().len(), 1);
        let six = enumerate_codegree_two_regular(6).unwrap();
        assert_eq!(six.len(), 2);
        for n in 5..=10 {
            for g in enumerate_codegree_two_regular(n).unwrap() {
                assert!(g.is_connected());
                assert_eq!(g.degree_stats().unwrap(), (n - 3, n - 3));
            }
        }
    }
}
