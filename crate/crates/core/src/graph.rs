//! Immutable simple undirected graphs over dense vertex labels `0..n`,
//! stored as one adjacency bitset per vertex.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// A set of vertex indices packed into a single word. Serializes as an
/// ascending list of vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter()
            .fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// All `k`-subsets of `{0..n}` in ascending bitmask order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n <= MAX_ORDER);
    let limit = VertexSet::full(n).0;
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(VertexSet::full(k).0)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nx = (((r ^ cur) >> 2) / c) | r;
                (nx & !limit == 0).then_some(nx)
            }
        };
        Some(VertexSet(cur))
    })
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::EMPTY; n];
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds from raw adjacency rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        let all = VertexSet::full(n);
        for (u, &row) in adj.iter().enumerate() {
            if !row.is_subset(all) {
                let v = (row - all).first().unwrap();
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if row.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return Err(Error::EdgeAbsent(v, u));
            }
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        let g = Graph { adj };
        debug_assert!(g.check_invariants());
        g
    }

    /// Symmetry, irreflexivity, and range of every adjacency row.
    pub fn check_invariants(&self) -> bool {
        let all = self.vertex_set();
        self.adj.iter().enumerate().all(|(u, &row)| {
            row.is_subset(all) && !row.contains(u) && row.iter().all(|v| self.adj[v].contains(u))
        })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// Unchecked N(v) for hot loops; `v` must be in range.
    #[inline]
    pub fn adj(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// N[S] = union of closed neighborhoods of members of `s`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    /// N(S) = union of open neighborhoods of members of `s`.
    pub fn open_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `(δ, Δ)`.
    pub fn degree_stats(&self) -> Result<(usize, usize)> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let degs = (0..self.order()).map(|v| self.degree(v));
        let min = degs.clone().min().unwrap();
        let max = degs.max().unwrap();
        Ok((min, max))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(src)?;
        let mut dist = vec![None; self.order()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path length, `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    pub fn diameter(&self) -> Result<usize> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for u in 0..self.order() {
            for d in self.distances_from(u)? {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Open twins (N(u) = N(v)) or closed twins (N[u] = N[v]).
    pub fn are_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let (nu, nv) = (self.adj[u], self.adj[v]);
        Ok(nu == nv || nu.with(u) == nv.with(v))
    }

    pub fn is_twin_free(&self) -> bool {
        let n = self.order();
        (0..n).all(|u| (u + 1..n).all(|v| !self.are_twins(u, v).unwrap()))
    }

    /// Vertices reachable from `src` inside `within` (which must contain `src`).
    pub fn component_within(&self, src: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(src);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of(frontier) & within;
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// True when `s` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.component_within(v, s) == s,
        }
    }

    /// Calls `visit` on every connected set `S` with `root ∈ S ⊆ allowed ∪ {root}`,
    /// each exactly once. Stops early when `visit` returns `false`; the
    /// return value reports whether the enumeration ran to completion.
    pub fn for_each_connected_set<F>(&self, root: usize, allowed: VertexSet, visit: &mut F) -> bool
    where
        F: FnMut(VertexSet) -> bool,
    {
        let start = VertexSet::singleton(root);
        let cand = self.adj[root] & allowed - start;
        self.grow_connected(start, cand, VertexSet::EMPTY, allowed, visit)
    }

    fn grow_connected<F>(
        &self,
        cur: VertexSet,
        cand: VertexSet,
        forbidden: VertexSet,
        allowed: VertexSet,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(VertexSet) -> bool,
    {
        if !visit(cur) {
            return false;
        }
        let mut forbidden = forbidden;
        for w in cand {
            let next = cur.with(w);
            let next_cand = (cand | self.adj[w]) & allowed - next - forbidden;
            if !self.grow_connected(next, next_cand, forbidden, allowed, visit) {
                return false;
            }
            forbidden.insert(w);
        }
        true
    }

    /// The empty graph counts as disconnected; `K1` is connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertex_set())
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.size() + 1 == self.order()
    }

    /// True iff the graph is the path on its vertex set.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    pub fn is_regular(&self) -> bool {
        self.order() == 0 || self.min_degree() == self.max_degree()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &row)| (all - row).without(u))
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.adj[u].contains(v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Subgraph induced by `s`, relabelled in ascending order. The second
    /// component maps new labels to original ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset(self.vertex_set()) {
            let v = (s - self.vertex_set()).first().unwrap();
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order() });
        }
        let map = s.to_vec();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| pos[w]).collect())
            .collect();
        Ok((Graph::from_adjacency_unchecked(adj), map))
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (u, &row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Graph::from_adjacency_unchecked(adj)
    }
}
