use std::io::Write;

use zfpd::families::{are_isomorphic, enumerate_connected, h_graph, parse_graph6, write_graph6};
use zfpd::theorems::{replay_failure, verify, verify_ids, TheoremId, VerifyConfig, VerifyReport};
use zfpd::Error;

fn run(id: TheoremId, max_n: Option<usize>) -> VerifyReport {
    verify(id, &VerifyConfig { max_n, ..VerifyConfig::default() }).unwrap()
}

fn strip_time(mut r: VerifyReport) -> VerifyReport {
    r.elapsed_ms = 0;
    r
}

#[test]
fn every_verifier_runs_at_small_bounds() {
    let small = [
        (TheoremId::T1, 6),
        (TheoremId::T2, 6),
        (TheoremId::T3, 6),
        (TheoremId::T4, 6),
        (TheoremId::T5, 8),
        (TheoremId::T6, 8),
        (TheoremId::T7, 8),
        (TheoremId::T8, 7),
        (TheoremId::T9, 7),
        (TheoremId::T10, 7),
        (TheoremId::T11, 8),
        (TheoremId::T12, 6),
        (TheoremId::T13, 3),
        (TheoremId::T14, 6),
        (TheoremId::T15, 12),
        (TheoremId::T16, 6),
    ];
    for (id, n) in small {
        let r = run(id, Some(n));
        assert!(r.graphs_checked > 0, "{id}");
        assert_eq!(r.per_order.values().sum::<usize>(), r.graphs_checked, "{id}");
        assert_eq!(r.theorem_id, id);
        let expected_fail = matches!(id, TheoremId::T8 | TheoremId::T16);
        assert_eq!(r.passed(), !expected_fail, "{id}: {:?}", r.failures.first());
        assert!(r.to_table().starts_with(&id.to_string()));
    }
}

#[test]
fn t1_counts_all_connected_graphs_up_to_six() {
    let r = run(TheoremId::T1, Some(6));
    assert!(r.passed());
    assert_eq!(r.graphs_checked, 143);
    assert_eq!(r.per_order.get(&6), Some(&112));
}

#[test]
fn reports_are_deterministic_across_worker_counts() {
    for id in [TheoremId::T8, TheoremId::T13] {
        let one = verify(id, &VerifyConfig { max_n: None, workers: Some(1), ..VerifyConfig::default() }).unwrap();
        let many = verify(id, &VerifyConfig { max_n: None, workers: Some(4), ..VerifyConfig::default() }).unwrap();
        assert_eq!(strip_time(one), strip_time(many), "{id}");
    }
}

#[test]
fn every_failure_replays_from_its_encoding() {
    for id in [TheoremId::T8, TheoremId::T16] {
        let r = run(id, None);
        assert!(!r.failures.is_empty(), "{id}");
        for f in &r.failures {
            let again = replay_failure(id, f).unwrap();
            assert_eq!(again.as_ref(), Some(f), "{id} {}", f.case);
        }
    }
}

#[test]
fn t8_counterexample_is_the_h_graph_family() {
    let r = run(TheoremId::T8, None);
    let h = h_graph();
    assert!(r
        .failures
        .iter()
        .filter(|f| f.case.ends_with("/outerplanar"))
        .any(|f| are_isomorphic(&parse_graph6(&f.graph).unwrap(), &h).unwrap()));
    assert!(r.failures.iter().all(|f| f.observed.ends_with("(diameter 3)")));
}

#[test]
fn searches_report_a_line() {
    for id in [TheoremId::T9, TheoremId::T10, TheoremId::T16] {
        let r = run(id, None);
        assert!(!r.searches.is_empty(), "{id}");
        for s in &r.searches {
            assert!(s.witness.is_none() || s.verified, "{}", s.line());
        }
    }
}

#[test]
fn file_universe_and_missing_universe() {
    let off = VerifyConfig { builtin: false, ..VerifyConfig::default() };
    assert!(matches!(verify(TheoremId::T1, &off), Err(Error::MissingUniverse(_))));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("six.g6");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# connected graphs on six vertices").unwrap();
    for g in enumerate_connected(6).unwrap() {
        writeln!(f, "{}", write_graph6(&g)).unwrap();
    }
    drop(f);
    let cfg = VerifyConfig { universe: vec![path], builtin: false, ..VerifyConfig::default() };
    let r = verify(TheoremId::T1, &cfg).unwrap();
    assert!(r.passed());
    assert_eq!(r.graphs_checked, 112);
}

#[test]
fn caps_and_unknown_ids() {
    let too_big = VerifyConfig { max_n: Some(40), ..VerifyConfig::default() };
    for id in [TheoremId::T1, TheoremId::T5, TheoremId::T14] {
        assert!(matches!(verify(id, &too_big), Err(Error::CapExceeded { .. })), "{id}");
    }
    let out = verify_ids(&["T5", "T99"], &VerifyConfig { max_n: Some(5), ..VerifyConfig::default() });
    assert!(out[0].1.is_ok());
    assert!(matches!(out[1].1, Err(Error::UnknownTheorem(_))));
    assert_eq!("t12".parse::<TheoremId>().unwrap(), TheoremId::T12);
}

#[test]
fn report_json_round_trips() {
    let r = run(TheoremId::T11, None);
    let back: VerifyReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["theorem_id", "claim", "universe", "graphs_checked", "per_order", "failures", "searches", "notes", "verdict", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["verdict"], "pass");
}
