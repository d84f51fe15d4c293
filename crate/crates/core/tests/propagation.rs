mod common;

use proptest::prelude::*;
use zfpd::families::{cycle, path, star};
use zfpd::propagation::{closure, closure_with_log, is_power_dominating_set, is_zero_forcing_set};
use zfpd::{Graph, VertexSet};

#[test]
fn closure_laws_on_random_pairs() {
    if let Err(v) = common::suites::closure_suite(10_000, 7) {
        panic!("{v:#?}");
    }
}

#[test]
fn path_end_forces_everything() {
    let p = path(7).unwrap();
    assert_eq!(closure(&p, VertexSet::singleton(0)), p.vertex_set());
    assert!(!is_zero_forcing_set(&p, VertexSet::singleton(3)));
}

#[test]
fn cycle_chains() {
    let c = cycle(5).unwrap();
    let (cl, log) = closure_with_log(&c, VertexSet::from_vertices([0, 1]));
    assert_eq!(cl, c.vertex_set());
    assert_eq!(log.chains, vec![vec![0, 4, 3], vec![1, 2]]);
    assert_eq!(log.terminals, VertexSet::from_vertices([3, 2]));
}

#[test]
fn star_centre_power_dominates() {
    let s = star(6).unwrap();
    assert!(is_power_dominating_set(&s, VertexSet::singleton(0)));
    assert!(!is_zero_forcing_set(&s, VertexSet::singleton(0)));
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn closure_is_a_closure_operator(g in arb_graph(), a in any::<u64>(), b in any::<u64>()) {
        let full = g.vertex_set();
        let u = VertexSet(a) & full;
        let w = u | (VertexSet(b) & full);
        let cu = closure(&g, u);
        prop_assert!(u.is_subset(cu));
        prop_assert_eq!(closure(&g, cu), cu);
        prop_assert!(cu.is_subset(closure(&g, w)));
    }

    #[test]
    fn force_log_is_consistent(g in arb_graph(), a in any::<u64>()) {
        let u = VertexSet(a) & g.vertex_set();
        let (cl, log) = closure_with_log(&g, u);
        prop_assert_eq!(cl, closure(&g, u));
        prop_assert_eq!(log.check(&g), Ok(()));
        prop_assert_eq!(log.chains.len(), u.len());
    }

    #[test]
    fn power_domination_is_closure_of_neighbourhood(g in arb_graph(), a in any::<u64>()) {
        let s = VertexSet(a) & g.vertex_set();
        let expected = closure(&g, g.closed_neighborhood_of(s)) == g.vertex_set();
        prop_assert_eq!(is_power_dominating_set(&g, s), expected);
    }
}
