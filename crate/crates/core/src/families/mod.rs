//! Named graph families, graph6 and edge-list I/O, and exhaustive
//! enumeration of small graphs.

mod enumerate;
mod graph6;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use enumerate::{
    are_isomorphic, canonical_form, canonical_graph, canonical_key, enumerate_all,
    enumerate_codegree_two_regular, enumerate_connected, enumerate_trees, graph_from_key,
    key_under, CanonKey, MAX_CANON_ORDER, MAX_ENUM_ORDER, MAX_TREE_ORDER,
};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Part sizes of a complete multipartite graph, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartiteSpec {
    parts: Vec<usize>,
}

impl PartiteSpec {
    /// Sorts the given sizes; needs at least two parts, all nonzero.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidFamily("complete multipartite needs at least 2 parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidFamily("part sizes must be positive".into()));
        }
        parts.sort_unstable();
        Ok(PartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Smallest part size.
    pub fn r1(&self) -> usize {
        self.parts[0]
    }

    /// Vertices of part `i` occupy a contiguous index range.
    pub fn part_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.parts[..i].iter().sum();
        start..start + self.parts[i]
    }

    pub fn part_of(&self, v: usize) -> usize {
        (0..self.parts.len())
            .find(|&i| self.part_range(i).contains(&v))
            .expect("vertex outside the multipartite graph")
    }

    /// Every spec with at least two parts and total order at most `max_order`.
    pub fn all_up_to(max_order: usize) -> Vec<PartiteSpec> {
        fn rec(remaining: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<PartiteSpec>) {
            if cur.len() >= 2 {
                out.push(PartiteSpec { parts: cur.clone() });
            }
            for p in min..=remaining {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(max_order, 1, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.order().cmp(&b.order()).then(a.parts.cmp(&b.parts)));
        out
    }
}

impl fmt::Display for PartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "K_{{{}}}", s.join(","))
    }
}

/// A named family member. Integer parameters are graph orders unless noted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Multipartite(PartiteSpec),
    /// Hub joined to every vertex of a cycle of order `n - 1`.
    Wheel(usize),
    /// `K_{1,n-1}`.
    Star(usize),
    /// Leg lengths around a single center.
    Spider(Vec<usize>),
    HGraph,
    Wagner,
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => complete(*n),
            Family::Multipartite(spec) => complete_multipartite(spec),
            Family::Wheel(n) => wheel(*n),
            Family::Star(n) => star(*n),
            Family::Spider(legs) => spider(legs),
            Family::HGraph => Ok(h_graph()),
            Family::Wagner => Ok(wagner()),
        }
    }

    /// Parses a family name plus its parameters, as accepted on the command line.
    pub fn from_parts(name: &str, n: Option<usize>, list: Option<&[usize]>) -> Result<Family> {
        let need_n = || n.ok_or_else(|| Error::InvalidFamily(format!("{name} requires an order")));
        let need_list = || {
            list.map(|l| l.to_vec())
                .ok_or_else(|| Error::InvalidFamily(format!("{name} requires a list parameter")))
        };
        Ok(match name.to_ascii_lowercase().as_str() {
            "path" => Family::Path(need_n()?),
            "cycle" => Family::Cycle(need_n()?),
            "complete" => Family::Complete(need_n()?),
            "multipartite" => Family::Multipartite(PartiteSpec::new(need_list()?)?),
            "wheel" => Family::Wheel(need_n()?),
            "star" => Family::Star(need_n()?),
            "spider" => Family::Spider(need_list()?),
            "hgraph" | "h-graph" | "h" => Family::HGraph,
            "wagner" => Family::Wagner,
            other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        })
    }
}

fn at_least(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidFamily(format!("{name} needs order >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_multipartite(spec: &PartiteSpec) -> Result<Graph> {
    let n = spec.order();
    let part: Vec<usize> = (0..n).map(|v| spec.part_of(v)).collect();
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part[u] != part[v]),
    )
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&PartiteSpec::new(vec![a, b])?)
}

/// Vertex 0 is the hub; 1..n form the rim cycle.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("wheel", n, 4)?;
    let rim = n - 1;
    Graph::from_edges(
        n,
        (1..n).map(|i| (0, i)).chain((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim))),
    )
}

/// Vertex 0 is the center.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 2)?;
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

/// Vertex 0 is the center; legs are laid out consecutively outward.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.len() < 3 || legs.contains(&0) {
        return Err(Error::InvalidFamily("spider needs at least 3 legs of positive length".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Two copies of `P3` (0-1-2 and 3-4-5) with their centers 1 and 4 joined.
pub fn h_graph() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (1, 4)]).unwrap()
}

/// The Möbius ladder on 8 vertices: the cycle 0..7 plus chords `{i, i+4}`.
pub fn wagner() -> Graph {
    Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4)))).unwrap()
}

/// One `u v` pair per line, 0-based. The order is one more than the largest
/// label seen. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let bad = |message: String| Error::Parse { line: i + 1, message };
        let fields: Vec<&str> = t.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad(format!("expected two vertex labels, got {:?}", t)));
        }
        let u = usize::from_str(fields[0]).map_err(|e| bad(e.to_string()))?;
        let v = usize::from_str(fields[1]).map_err(|e| bad(e.to_string()))?;
        if u == v {
            return Err(bad(format!("self-loop at {u}")));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// Reads a graph6 file (one graph per line, `#` comments skipped).
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph6_lines(&text)
}
