//! Verifiers T8 to T11: planar and outerplanar graphs of small diameter,
//! large maximum degree, the twin lemma and (n-3)-regular graphs.

use crate::error::{Error, Result};
use crate::families::{enumerate_codegree_two_regular, enumerate_connected, write_graph6};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{has_power_dominating_set_of_size, power_domination_number};
use crate::propagation::is_power_dominating_set;
use crate::structure::{is_outerplanar, is_planar};

use super::basic::recheck_search;
use super::universe::{self, Bounds};
use super::{cap_check, first_hit, Eval, Flagged, Item, Plan, Verifier, VerifyConfig, VerifyReport};

fn connected_plan(id: &str, cfg: &VerifyConfig, b: &Bounds) -> Result<Plan> {
    let u = universe::connected(id, cfg, b)?;
    Ok(Plan {
        universe: u.description,
        items: u.graphs.into_iter().map(|g| Item::single(g, "connected")).collect(),
        notes: u.notes,
    })
}

fn gp(g: &Graph) -> Result<usize> {
    Ok(power_domination_number(g)?.value)
}

pub(crate) struct PlanarDiameter;

impl Verifier for PlanarDiameter {
    fn claim(&self) -> &'static str {
        "planar with diameter <= 2 implies gamma_P <= 2; outerplanar with diameter <= 3 implies gamma_P = 1"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let b = Bounds { min_n: 1, default_max: 8, builtin_cap: 9, file_cap: 12 };
        connected_plan("T8", cfg, &b)
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let g = &g[0];
        let mut e = Eval::default();
        let d = g.diameter()?;
        if d <= 2 && !has_power_dominating_set_of_size(g, 2) && is_planar(g)? {
            e.check(false, "planar", "gamma_P <= 2", format!("gamma_P = {} (diameter {d})", gp(g)?));
        }
        if d <= 3 && !has_power_dominating_set_of_size(g, 1) && is_outerplanar(g) {
            e.check(false, "outerplanar", "gamma_P = 1", format!("gamma_P = {} (diameter {d})", gp(g)?));
        }
        Ok(e)
    }

    fn finish(&self, _cfg: &VerifyConfig, _flagged: &Flagged, report: &mut VerifyReport) -> Result<()> {
        let outer: Vec<&str> = report
            .failures
            .iter()
            .filter(|f| f.case.ends_with("/outerplanar"))
            .map(|f| f.observed.as_str())
            .collect();
        let at_three = outer.iter().filter(|o| o.ends_with("(diameter 3)")).count();
        let planar = report.failures.iter().filter(|f| f.case.ends_with("/planar")).count();
        report.notes.push(format!(
            "outerplanar failures: {} total, {} of them at diameter exactly 3; planar failures: {planar}",
            outer.len(),
            at_three
        ));
        Ok(())
    }
}

pub(crate) struct LargeMaxDegree;

const DEGREE_SEARCH_CAP: usize = 9;

impl Verifier for LargeMaxDegree {
    fn claim(&self) -> &'static str {
        "Delta >= n-2 implies gamma_P = 1; Delta >= n-4 implies gamma_P <= 2; some graph with Delta = n-5 \
         has gamma_P >= 3"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let b = Bounds { min_n: 1, default_max: 8, builtin_cap: 9, file_cap: 12 };
        connected_plan("T9", cfg, &b)
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let g = &g[0];
        let mut e = Eval::default();
        let (n, delta) = (g.order(), g.max_degree());
        if delta + 2 >= n {
            let ok = has_power_dominating_set_of_size(g, 1);
            e.check(ok, "part1", "gamma_P = 1", format!("gamma_P = {} (Delta = n-{})", gp(g)?, n - delta));
        } else if delta + 4 >= n {
            let ok = has_power_dominating_set_of_size(g, 2);
            e.check(ok, "part2", "gamma_P <= 2", format!("gamma_P = {} (Delta = n-{})", gp(g)?, n - delta));
        }
        Ok(e)
    }

    fn finish(&self, cfg: &VerifyConfig, _flagged: &Flagged, report: &mut VerifyReport) -> Result<()> {
        let hit = |g: &Graph| g.max_degree() + 5 == g.order() && !has_power_dominating_set_of_size(g, 2);
        let (pool, cap) = if cfg.builtin {
            let mut pool = Vec::new();
            for n in 6..=DEGREE_SEARCH_CAP {
                pool.extend(enumerate_connected(n)?.into_iter().filter(|g| g.max_degree() + 5 == n));
            }
            (pool, format!("connected n <= {DEGREE_SEARCH_CAP}"))
        } else {
            let b = Bounds { min_n: 6, default_max: 0, builtin_cap: 0, file_cap: 12 };
            let mut pool = universe::connected("T9", cfg, &b)?.graphs;
            pool.retain(|g| g.max_degree() + 5 == g.order());
            pool.sort_by_key(|g| (g.order(), write_graph6(g)));
            (pool, "universe files".to_string())
        };
        let (idx, examined) = first_hit(&pool, hit);
        let witness = idx.map(|i| write_graph6(&pool[i]));
        report.searches.push(recheck_search("Delta = n-5 with gamma_P >= 3", cap, examined, witness, |g| {
            Ok(g.is_connected() && g.max_degree() + 5 == g.order() && gp(g)? >= 3)
        })?);
        Ok(())
    }
}

pub(crate) struct TwinLemma;

/// Vertices of degree `n-3` together with the two vertices they miss.
fn codegree_two_vertices(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.order();
    (0..n)
        .filter(|&u| g.degree(u) + 3 == n)
        .map(|u| {
            let out = (g.vertex_set() - g.closed_neighborhood_of(VertexSet::singleton(u))).to_vec();
            (u, out[0], out[1])
        })
        .collect()
}

impl Verifier for TwinLemma {
    fn claim(&self) -> &'static str {
        "for deg(u) = n-3 with V = N[u] + {w1, w2}: {u} is power dominating iff w1 and w2 are not twins"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let b = Bounds { min_n: 4, default_max: 8, builtin_cap: 9, file_cap: 12 };
        connected_plan("T10", cfg, &b)
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let g = &g[0];
        let mut e = Eval::default();
        let cands = codegree_two_vertices(g);
        let mut all_twins = !cands.is_empty();
        for &(u, w1, w2) in &cands {
            let pd = is_power_dominating_set(g, VertexSet::singleton(u));
            let twins = g.are_twins(w1, w2)?;
            all_twins &= twins;
            let want = if twins { "not power dominating (twins)" } else { "power dominating (not twins)" };
            let got = if pd { "power dominating" } else { "not power dominating" };
            e.check(pd != twins, &format!("u={u}"), format!("{{{u}}} {want}"), format!("{{{u}}} {got}"));
        }
        if all_twins && has_power_dominating_set_of_size(g, 1) {
            e.flags.push("converse");
        }
        Ok(e)
    }

    fn finish(&self, cfg: &VerifyConfig, flagged: &Flagged, report: &mut VerifyReport) -> Result<()> {
        let list = flagged.get("converse").cloned().unwrap_or_default();
        let cap = format!("connected 4 <= n <= {}", cfg.max_n.unwrap_or(8));
        let examined = report.graphs_checked;
        report.searches.push(recheck_search(
            "gamma_P = 1 while every degree-(n-3) vertex misses a twin pair",
            cap,
            examined,
            list.first().cloned(),
            |g| {
                let cands = codegree_two_vertices(g);
                let all_twins = !cands.is_empty() && cands.iter().all(|&(_, a, b)| g.are_twins(a, b).unwrap_or(false));
                Ok(all_twins && gp(g)? == 1)
            },
        )?);
        if !list.is_empty() {
            report.notes.push(format!("{} graphs witness the failed converse", list.len()));
        }
        Ok(())
    }
}

pub(crate) struct CodegreeTwoRegular;

/// Some edge `uv` (either orientation) with `|N[v] \ N[u]| = 1`.
fn has_near_twin_edge(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let nu = g.closed_neighborhood_of(VertexSet::singleton(u));
        let nv = g.closed_neighborhood_of(VertexSet::singleton(v));
        (nv - nu).len() == 1 || (nu - nv).len() == 1
    })
}

impl Verifier for CodegreeTwoRegular {
    fn claim(&self) -> &'static str {
        "(n-3)-regular G, n >= 5: gamma_P = 1 iff some edge uv has |N[v] \\ N[u]| = 1"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let max = cfg.max_n.unwrap_or(10);
        cap_check("T11", max, 16, "order")?;
        let mut items = Vec::new();
        for n in 5..=max {
            items.extend(enumerate_codegree_two_regular(n)?.into_iter().map(|g| Item::single(g, "regular")));
        }
        Ok(Plan {
            universe: format!("connected (n-3)-regular graphs 5<=n<={max}"),
            items,
            notes: Vec::new(),
        })
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let g = &g[0];
        let n = g.order();
        if !g.is_regular() || g.max_degree() + 3 != n || !g.is_connected() {
            return Err(Error::InvalidFamily(format!("{} is not a connected (n-3)-regular graph", write_graph6(g))));
        }
        let mut e = Eval::default();
        let one = has_power_dominating_set_of_size(g, 1);
        let edge = has_near_twin_edge(g);
        e.check(
            one == edge,
            "iff",
            format!("gamma_P {} 1 (edge condition {edge})", if edge { "=" } else { ">" }),
            format!("gamma_P = {}", gp(g)?),
        );
        Ok(e)
    }
}
