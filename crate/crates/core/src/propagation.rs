//! The color change rule: a black vertex with exactly one white neighbor
//! turns that neighbor black.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Least fixed point of the color change rule starting from `initial`.
pub fn closure(g: &Graph, initial: VertexSet) -> VertexSet {
    let mut black = initial & g.vertex_set();
    loop {
        let before = black;
        for v in black {
            let white = g.adj(v) - black;
            if white.len() == 1 {
                black |= white;
            }
        }
        if black == before {
            return black;
        }
    }
}

/// Chronological forces performed while computing a closure, and the
/// forcing chains they induce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForceLog {
    pub initial: VertexSet,
    /// `(forcer, forced)` in the order applied.
    pub forces: Vec<(usize, usize)>,
    /// One chain per initial vertex, ordered by starting vertex.
    pub chains: Vec<Vec<usize>>,
    /// Last vertex of each chain.
    pub terminals: VertexSet,
}

impl ForceLog {
    fn from_forces(initial: VertexSet, forces: Vec<(usize, usize)>) -> Self {
        let mut next = std::collections::HashMap::new();
        for &(a, b) in &forces {
            next.insert(a, b);
        }
        let chains: Vec<Vec<usize>> = initial
            .iter()
            .map(|start| {
                let mut chain = vec![start];
                while let Some(&b) = next.get(chain.last().unwrap()) {
                    chain.push(b);
                }
                chain
            })
            .collect();
        let terminals = chains.iter().map(|c| *c.last().unwrap()).collect();
        ForceLog { initial, forces, chains, terminals }
    }

    /// Checks the structural guarantees of a force log against `g`: each
    /// vertex forced at most once and never an initial one, every force
    /// valid under the color change rule at the time it was applied, and
    /// the chains are disjoint induced paths partitioning the black set.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut black = self.initial;
        for &(a, b) in &self.forces {
            if !black.contains(a) {
                return Err(format!("forcer {a} is white when forcing {b}"));
            }
            if black.contains(b) {
                return Err(format!("vertex {b} forced twice or was initial"));
            }
            if g.adj(a) - black != VertexSet::singleton(b) {
                return Err(format!("{a} -> {b} violates the color change rule"));
            }
            black.insert(b);
        }
        let mut seen = VertexSet::EMPTY;
        for chain in &self.chains {
            let set: VertexSet = chain.iter().copied().collect();
            if set.len() != chain.len() || set.intersects(seen) {
                return Err(format!("chain {chain:?} overlaps another chain"));
            }
            seen |= set;
            if !self.initial.contains(chain[0]) {
                return Err(format!("chain {chain:?} does not start in the initial set"));
            }
            if chain.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(format!("chain {chain:?} has non-adjacent consecutive vertices"));
            }
            if g.edges_within(set) != chain.len() - 1 {
                return Err(format!("chain {chain:?} does not induce a path"));
            }
        }
        if seen != black {
            return Err("chains do not partition the closure".into());
        }
        let terminals: VertexSet = self.chains.iter().map(|c| *c.last().unwrap()).collect();
        if terminals != self.terminals {
            return Err("terminals disagree with chains".into());
        }
        Ok(())
    }
}

/// Closure together with the force log. Forces are scheduled by a FIFO
/// worklist seeded with the initial vertices in ascending order; whenever a
/// vertex turns black it is appended, followed by its black neighbours in
/// ascending order, since their white degree just dropped.
pub fn closure_with_log(g: &Graph, initial: VertexSet) -> (VertexSet, ForceLog) {
    let initial = initial & g.vertex_set();
    let mut black = initial;
    let mut queued = initial;
    let mut queue: VecDeque<usize> = initial.iter().collect();
    let mut forces = Vec::new();
    while let Some(v) = queue.pop_front() {
        queued.remove(v);
        let white = g.adj(v) - black;
        if white.len() != 1 {
            continue;
        }
        let w = white.first().unwrap();
        black.insert(w);
        forces.push((v, w));
        for x in std::iter::once(w).chain((g.adj(w) & black).without(v).iter()) {
            if !queued.contains(x) {
                queued.insert(x);
                queue.push_back(x);
            }
        }
    }
    (black, ForceLog::from_forces(initial, forces))
}

pub fn is_zero_forcing_set(g: &Graph, u: VertexSet) -> bool {
    closure(g, u) == g.vertex_set()
}

/// `s` is power dominating iff `N[s]` is zero forcing.
pub fn is_power_dominating_set(g: &Graph, s: VertexSet) -> bool {
    is_zero_forcing_set(g, g.closed_neighborhood_of(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, h_graph, path, star, wheel};

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&path(4).unwrap(), vs(&[0])), vs(&[0, 1, 2, 3]));
        assert_eq!(closure(&cycle(4).unwrap(), vs(&[0])), vs(&[0]));
        assert_eq!(closure(&complete(4).unwrap(), vs(&[0, 1])), vs(&[0, 1]));
        assert_eq!(closure(&complete(4).unwrap(), vs(&[0, 1, 2])), vs(&[0, 1, 2, 3]));
    }

    #[test]
    fn log_examples() {
        let (cl, log) = closure_with_log(&path(3).unwrap(), vs(&[0]));
        assert_eq!(cl, vs(&[0, 1, 2]));
        assert_eq!(log.chains, vec![vec![0, 1, 2]]);
        assert_eq!(log.terminals, vs(&[2]));

        // K_{1,3} with center 0
        let k13 = star(4).unwrap();
        assert_eq!(closure(&k13, vs(&[0])), vs(&[0]));
        let (cl, log) = closure_with_log(&k13, vs(&[0, 1, 2]));
        assert_eq!(cl, k13.vertex_set());
        assert_eq!(log.chains, vec![vec![0, 3], vec![1], vec![2]]);
        log.check(&k13).unwrap();

        let c5 = cycle(5).unwrap();
        let (cl, log) = closure_with_log(&c5, vs(&[0, 1]));
        assert_eq!(cl, c5.vertex_set());
        assert_eq!(log.forces, vec![(0, 4), (1, 2), (4, 3)]);
        assert_eq!(log.chains, vec![vec![0, 4, 3], vec![1, 2]]);
        assert_eq!(log.terminals, vs(&[2, 3]));
        log.check(&c5).unwrap();
    }

    #[test]
    fn zero_forcing_examples() {
        assert!(is_zero_forcing_set(&path(5).unwrap(), vs(&[0])));
        assert!(is_zero_forcing_set(&path(5).unwrap(), vs(&[4])));
        assert!(!is_zero_forcing_set(&path(5).unwrap(), vs(&[2])));
        let c5 = cycle(5).unwrap();
        assert!(!is_zero_forcing_set(&c5, vs(&[0])));
        assert!(is_zero_forcing_set(&c5, vs(&[0, 1])));
        assert!(is_zero_forcing_set(&c5, c5.vertex_set()));
    }

    #[test]
    fn power_domination_examples() {
        for n in 4..=9 {
            assert!(is_power_dominating_set(&wheel(n).unwrap(), vs(&[0])));
        }
        let k33 = complete_bipartite(3, 3).unwrap();
        for v in 0..6 {
            assert!(!is_power_dominating_set(&k33, vs(&[v])));
        }
        let h = h_graph();
        assert!(!is_power_dominating_set(&h, vs(&[1])));
        assert!(!is_power_dominating_set(&h, vs(&[4])));
        assert!(is_power_dominating_set(&h, vs(&[1, 4])));
        // brute force: no singleton works on the H-graph
        assert!((0..6).all(|v| !is_power_dominating_set(&h, vs(&[v]))));
    }

    #[test]
    fn bad_log_is_rejected() {
        let p3 = path(3).unwrap();
        let (_, mut log) = closure_with_log(&p3, vs(&[0]));
        log.forces.swap(0, 1);
        assert!(log.check(&p3).is_err());
    }
}
