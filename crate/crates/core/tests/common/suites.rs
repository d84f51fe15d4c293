//! Property suites shared by the property tests and the acceptance run.
//! Each returns a one-line summary on success or the first violations.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use zfpd::families::{enumerate_connected, write_graph6};
use zfpd::invariants::{
    domination_number, path_cover_number, power_domination_number, total_domination_number,
    zero_forcing_number,
};
use zfpd::propagation::{closure, closure_with_log};
use zfpd::{Graph, VertexSet};

use super::*;

pub type Outcome = std::result::Result<String, Vec<String>>;

fn finish(summary: String, violations: Vec<String>) -> Outcome {
    if violations.is_empty() {
        Ok(summary)
    } else {
        Err(violations.into_iter().take(10).collect())
    }
}

/// Closure laws and force log invariants over `pairs` random
/// `(graph, subset)` pairs with `1 <= n <= 12`.
pub fn closure_suite(pairs: usize, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..pairs {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(n, p, &mut rng);
        let mask = (1u64 << n) - 1;
        let u = rng.gen::<u64>() & rng.gen::<u64>() & mask;
        let w = u | (rng.gen::<u64>() & mask);
        let tag = || format!("{} U={u:#b}", write_graph6(&g));

        let cu = closure(&g, VertexSet(u));
        if !VertexSet(u).is_subset(cu) {
            bad.push(format!("not extensive: {}", tag()));
        }
        if closure(&g, cu) != cu {
            bad.push(format!("not idempotent: {}", tag()));
        }
        if !cu.is_subset(closure(&g, VertexSet(w))) {
            bad.push(format!("not monotone: {} W={w:#b}", tag()));
        }
        if naive_closure(&g, u, &mut rng) != cu.bits() {
            bad.push(format!("order dependent: {}", tag()));
        }

        let (logged, log) = closure_with_log(&g, VertexSet(u));
        if logged != cu {
            bad.push(format!("logged closure differs: {}", tag()));
        }
        if let Err(e) = log.check(&g) {
            bad.push(format!("force log: {e}: {}", tag()));
        }
        let mut covered = 0u64;
        for chain in &log.chains {
            let set = chain.iter().fold(0u64, |m, &v| m | 1 << v);
            if set & covered != 0 || set.count_ones() as usize != chain.len() {
                bad.push(format!("chains overlap: {}", tag()));
            }
            covered |= set;
            if !induces_path(&g, chain) || chain.windows(2).any(|x| !g.has_edge(x[0], x[1])) {
                bad.push(format!("chain {chain:?} is not an induced path: {}", tag()));
            }
        }
        if covered != cu.bits() || log.chains.len() != u.count_ones() as usize {
            bad.push(format!("chains do not partition the closure: {}", tag()));
        }
    }
    finish(format!("{pairs} random pairs"), bad)
}

fn connected_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_connected(n).unwrap()).collect()
}

/// `P <= Z` and `γ_P <= min(γ, Z)` on every connected graph up to `max_n`.
pub fn bounds_suite(max_n: usize) -> Outcome {
    let graphs = connected_upto(max_n);
    let mut bad = Vec::new();
    for g in &graphs {
        let z = zero_forcing_number(g).unwrap().value;
        let p = path_cover_number(g).unwrap().value;
        let gp = power_domination_number(g).unwrap().value;
        let d = domination_number(g).unwrap().value;
        if p > z {
            bad.push(format!("{}: P = {p} > Z = {z}", write_graph6(g)));
        }
        if gp > d.min(z) {
            bad.push(format!("{}: gamma_P = {gp} > min(gamma = {d}, Z = {z})", write_graph6(g)));
        }
    }
    finish(format!("{} connected graphs n <= {max_n}", graphs.len()), bad)
}

/// Library solvers against the brute-force oracles on every connected
/// graph up to `max_n`.
pub fn oracle_suite(max_n: usize, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let graphs = connected_upto(max_n);
    let mut bad = Vec::new();
    for g in &graphs {
        let name = write_graph6(g);
        let pairs = [
            ("zf", zero_forcing_number(g).unwrap().value, brute_zf(g, &mut rng)),
            ("pd", power_domination_number(g).unwrap().value, brute_pd(g, &mut rng)),
            ("dom", domination_number(g).unwrap().value, brute_dom(g)),
            ("pathcover", path_cover_number(g).unwrap().value, brute_path_cover(g)),
        ];
        for (what, got, want) in pairs {
            if got != want {
                bad.push(format!("{name}: {what} = {got}, oracle {want}"));
            }
        }
        match (total_domination_number(g), brute_tdom(g)) {
            (Ok(r), Some(want)) if r.value == want => {}
            (Err(_), None) => {}
            (got, want) => bad.push(format!("{name}: tdom {:?} vs oracle {want:?}", got.map(|r| r.value))),
        }
    }
    finish(format!("{} connected graphs n <= {max_n}", graphs.len()), bad)
}
