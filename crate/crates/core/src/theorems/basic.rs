//! Verifiers T1 to T7: paths, zero forcing number two, universal vertices,
//! smallest graphs, the family table, complete multipartite graphs and
//! trees.

use crate::error::{Error, Result};
use crate::families::{
    complete, complete_bipartite, complete_multipartite, cycle, enumerate_connected, enumerate_trees, h_graph,
    path, star, wagner, wheel, PartiteSpec,
};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    domination_number, has_power_dominating_set_of_size, path_cover_number, power_domination_number,
    spider_number, zero_forcing_number, zero_forcing_number_capped,
};
use crate::structure::is_outerplanar;

use super::universe::{self, Bounds};
use super::{cap_check, case_field, case_usize, Eval, Flagged, Item, Plan, SearchOutcome, Verifier, VerifyConfig, VerifyReport};

fn gp(g: &Graph) -> Result<usize> {
    Ok(power_domination_number(g)?.value)
}

fn connected_items(id: &str, cfg: &VerifyConfig, b: &Bounds, case: &str) -> Result<Plan> {
    let u = universe::connected(id, cfg, b)?;
    Ok(Plan {
        universe: u.description,
        items: u.graphs.into_iter().map(|g| Item::single(g, case)).collect(),
        notes: u.notes,
    })
}

pub(crate) struct PathCharacterization;

impl Verifier for PathCharacterization {
    fn claim(&self) -> &'static str {
        "Z(G) = 1 iff G is a path"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let b = Bounds { min_n: 1, default_max: 7, builtin_cap: 9, file_cap: 12 };
        connected_items("T1", cfg, &b, "connected")
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let g = &g[0];
        let mut e = Eval::default();
        let z_is_one = zero_forcing_number_capped(g, 1)?.is_some();
        let is_path = g.is_path();
        if z_is_one != is_path {
            let z = zero_forcing_number(g)?.value;
            let expected = if is_path { "Z = 1 (path)" } else { "Z > 1 (not a path)" };
            e.check(false, "iff", expected, format!("Z = {z}"));
        }
        Ok(e)
    }
}

pub(crate) struct ZeroForcingTwo;

impl Verifier for ZeroForcingTwo {
    fn claim(&self) -> &'static str {
        "for n >= 5: Z(G) = 2 iff G is outerplanar and P(G) = 2"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let b = Bounds { min_n: 5, default_max: 7, builtin_cap: 9, file_cap: 10 };
        connected_items("T2", cfg, &b, "connected")
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let g = &g[0];
        let mut e = Eval::default();
        let z_is_two = zero_forcing_number_capped(g, 2)?.is_some_and(|r| r.value == 2);
        let p = path_cover_number(g)?.value;
        // outerplanarity only matters when one side can hold
        if !z_is_two && p != 2 {
            return Ok(e);
        }
        let outer = is_outerplanar(g);
        let rhs = outer && p == 2;
        if z_is_two != rhs {
            let z = zero_forcing_number(g)?.value;
            e.check(
                false,
                "iff",
                format!("Z {} 2 (outerplanar={outer}, P={p})", if rhs { "=" } else { "!=" }),
                format!("Z = {z}"),
            );
        }
        Ok(e)
    }
}

pub(crate) struct UniversalVertex;

impl Verifier for UniversalVertex {
    fn claim(&self) -> &'static str {
        "Delta(G) = n-1 iff gamma_P(G) = gamma(G) = 1"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let b = Bounds { min_n: 1, default_max: 7, builtin_cap: 9, file_cap: 12 };
        connected_items("T3", cfg, &b, "connected")
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let g = &g[0];
        let mut e = Eval::default();
        let universal = g.max_degree() + 1 == g.order();
        let p = gp(g)?;
        let d = domination_number(g)?.value;
        e.check(
            universal == (p == 1 && d == 1),
            "literal",
            format!("Delta {} n-1", if universal { "=" } else { "<" }),
            format!("gamma_P = {p}, gamma = {d}"),
        );
        if universal != (p == d) {
            e.flags.push("weak");
        }
        Ok(e)
    }

    fn finish(&self, _cfg: &VerifyConfig, flagged: &Flagged, report: &mut VerifyReport) -> Result<()> {
        let weak = flagged.get("weak").map(Vec::as_slice).unwrap_or(&[]);
        report.notes.push(format!(
            "reading gamma_P = gamma as equality (Delta = n-1 iff gamma_P = gamma): {} counterexamples{}",
            weak.len(),
            sample(weak)
        ));
        Ok(())
    }
}

fn sample(list: &[String]) -> String {
    if list.is_empty() {
        return String::new();
    }
    let shown: Vec<&str> = list.iter().take(8).map(String::as_str).collect();
    let more = if list.len() > shown.len() { ", ..." } else { "" };
    format!(", e.g. {}{more}", shown.join(" "))
}

pub(crate) struct SmallestGraphs;

impl Verifier for SmallestGraphs {
    fn claim(&self) -> &'static str {
        "connected graphs of order <= 5 have gamma_P = 1; the H-graph is a smallest connected graph with \
         gamma_P = 2; the Wagner graph is a smallest twin-free connected graph with gamma_P = 2"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let max = cfg.max_n.unwrap_or(7);
        cap_check("T4", max, 8, "twin-free order")?;
        if max < 6 {
            return Err(Error::CapExceeded { theorem: "T4".into(), message: format!("order bound {max} below 6") });
        }
        let mut items = Vec::new();
        for n in 1..=5 {
            items.extend(enumerate_connected(n)?.into_iter().map(|g| Item::single(g, "small")));
        }
        items.push(Item::single(h_graph(), "h-graph"));
        items.extend(enumerate_connected(6)?.into_iter().map(|g| Item::single(g, "order6")));
        items.push(Item::single(wagner(), "wagner"));
        for n in 1..=max {
            let tf = enumerate_connected(n)?.into_iter().filter(Graph::is_twin_free);
            items.extend(tf.map(|g| Item::single(g, "twin-free")));
        }
        Ok(Plan {
            universe: format!(
                "connected n<=5; H-graph; connected n=6; Wagner graph; twin-free connected n<={max}"
            ),
            items,
            notes: Vec::new(),
        })
    }

    fn eval(&self, g: &[Graph], case: &str) -> Result<Eval> {
        let g = &g[0];
        let n = g.order();
        let mut e = Eval::default();
        match case {
            "small" => {
                let one = has_power_dominating_set_of_size(g, 1);
                e.check(one, "gamma_p", "gamma_P = 1", format!("gamma_P = {}", gp(g)?));
            }
            "h-graph" => {
                let p = gp(g)?;
                e.check(p == 2 && n == 6, "gamma_p", "order 6, gamma_P = 2", format!("order {n}, gamma_P = {p}"));
            }
            "order6" => {
                if !has_power_dominating_set_of_size(g, 1) {
                    e.flags.push("order6");
                }
            }
            "wagner" => {
                let p = gp(g)?;
                let tf = g.is_twin_free();
                e.check(
                    p == 2 && tf && n == 8,
                    "gamma_p",
                    "order 8, twin-free, gamma_P = 2",
                    format!("order {n}, twin-free = {tf}, gamma_P = {p}"),
                );
            }
            "twin-free" => {
                let one = has_power_dominating_set_of_size(g, 1);
                if n <= 7 {
                    e.check(one, "gamma_p", "gamma_P = 1", format!("gamma_P = {}", gp(g)?));
                } else if !one {
                    e.flags.push("twin-free-8");
                }
            }
            _ => return Err(Error::Graph6(format!("unknown T4 case {case:?}"))),
        }
        Ok(e)
    }

    fn finish(&self, _cfg: &VerifyConfig, flagged: &Flagged, report: &mut VerifyReport) -> Result<()> {
        let six = flagged.get("order6").cloned().unwrap_or_default();
        let h = crate::families::write_graph6(&crate::families::canonical_graph(&h_graph())?);
        report.notes.push(format!(
            "connected order-6 graphs with gamma_P >= 2: {} [{}]; H-graph among them: {}",
            six.len(),
            six.join(" "),
            six.contains(&h)
        ));
        if let Some(eight) = flagged.get("twin-free-8") {
            let w = crate::families::write_graph6(&crate::families::canonical_graph(&wagner())?);
            report.notes.push(format!(
                "twin-free connected order-8 graphs with gamma_P >= 2: {} [{}]; Wagner graph among them: {}",
                eight.len(),
                eight.join(" "),
                eight.contains(&w)
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Row {
    Path,
    Cycle,
    Complete,
    Star,
    KTwo,
    KH,
    Wheel,
}

impl Row {
    const ALL: [Row; 7] = [Row::Path, Row::Cycle, Row::Complete, Row::Star, Row::KTwo, Row::KH, Row::Wheel];

    fn name(self) -> &'static str {
        match self {
            Row::Path => "P_n",
            Row::Cycle => "C_n",
            Row::Complete => "K_n",
            Row::Star => "K_{1,n-1}",
            Row::KTwo => "K_{2,n-2}",
            Row::KH => "K_{h,n-h}",
            Row::Wheel => "W_n",
        }
    }

    /// `(gamma_P, gamma, Z)` for a member of order `n`.
    fn expected(self, n: usize) -> [usize; 3] {
        let third = (n + 2) / 3;
        match self {
            Row::Path => [1, third, 1],
            Row::Cycle => [1, third, 2],
            Row::Complete => [1, 1, n - 1],
            Row::Star => [1, 1, n - 2],
            Row::KTwo => [1, 2, n - 2],
            Row::KH => [2, 2, n - 2],
            Row::Wheel => [1, 1, 3],
        }
    }
}

/// Table rows are all read as order-`n` families. `K_{2,n-2}` starts at
/// `n = 4` and `K_{h,n-h}` needs `3 <= h <= n-h`.
fn table_members(n: usize) -> Result<Vec<(Row, Option<usize>, Graph)>> {
    let mut out = Vec::new();
    for row in Row::ALL {
        match row {
            Row::Path => out.push((row, None, path(n)?)),
            Row::Cycle => out.push((row, None, cycle(n)?)),
            Row::Complete => out.push((row, None, complete(n)?)),
            Row::Star => out.push((row, None, star(n)?)),
            Row::KTwo if n >= 4 => out.push((row, None, complete_bipartite(2, n - 2)?)),
            Row::KH => {
                for h in 3..=n / 2 {
                    out.push((row, Some(h), complete_bipartite(h, n - h)?));
                }
            }
            Row::Wheel if n >= 4 => out.push((row, None, wheel(n)?)),
            _ => {}
        }
    }
    Ok(out)
}

pub(crate) struct FamilyTable;

impl Verifier for FamilyTable {
    fn claim(&self) -> &'static str {
        "gamma_P, gamma and Z of paths, cycles, complete graphs, stars, K_{2,n-2}, K_{h,n-h} and wheels \
         (all of order n) match the family table"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let max = cfg.max_n.unwrap_or(10);
        cap_check("T5", max, 16, "order")?;
        let mut items = Vec::new();
        for n in 3..=max {
            for (row, h, g) in table_members(n)? {
                let case = match h {
                    Some(h) => format!("table:{}:h={h}:n={n}", row.name()),
                    None => format!("table:{}:n={n}", row.name()),
                };
                items.push(Item::single(g, case));
            }
        }
        Ok(Plan {
            universe: format!("family members of order 3<=n<={max}"),
            items,
            notes: vec!["every column is read as an order-n family: K_{1,n-1}, K_{2,n-2}, K_{h,n-h}".into()],
        })
    }

    fn eval(&self, g: &[Graph], case: &str) -> Result<Eval> {
        let g = &g[0];
        let name = case.split(':').nth(1).unwrap_or_default();
        let row = Row::ALL
            .into_iter()
            .find(|r| r.name() == name)
            .ok_or_else(|| Error::Graph6(format!("unknown table row in {case:?}")))?;
        let n = case_usize(case, "n")?;
        let [p, d, z] = row.expected(n);
        let mut e = Eval::default();
        let obs = [gp(g)?, domination_number(g)?.value, zero_forcing_number(g)?.value];
        for ((sub, want), got) in ["pd", "dom", "zf"].into_iter().zip([p, d, z]).zip(obs) {
            e.check(want == got, sub, want, got);
        }
        Ok(e)
    }
}

pub(crate) struct Multipartite;

fn parse_parts(case: &str) -> Result<PartiteSpec> {
    let parts = case_field(case, "parts")?
        .split(',')
        .map(|s| s.parse::<usize>().map_err(|_| Error::Graph6(format!("bad parts in {case:?}"))))
        .collect::<Result<Vec<_>>>()?;
    PartiteSpec::new(parts)
}

impl Verifier for Multipartite {
    fn claim(&self) -> &'static str {
        "complete multipartite G with smallest part r1: gamma_P(G) = 1 if r1 <= 2, else 2; after deleting \
         an edge vw: 1 if r1 <= 2; for r1 = 3, 1 if vw meets a smallest part, else 2; 2 if r1 >= 4"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let max = cfg.max_n.unwrap_or(10);
        cap_check("T6", max, 12, "total order")?;
        let mut items = Vec::new();
        let mut skipped = Vec::new();
        for spec in PartiteSpec::all_up_to(max) {
            let csv: Vec<String> = spec.parts().iter().map(|p| p.to_string()).collect();
            let csv = csv.join(",");
            let g = complete_multipartite(&spec)?;
            items.push(Item::single(g.clone(), format!("partite:parts={csv}")));
            // one edge per pair of part indices; all edges between the
            // same two parts are equivalent under automorphisms
            let k = spec.parts().len();
            for i in 0..k {
                for j in i + 1..k {
                    let (v, w) = (spec.part_range(i).start, spec.part_range(j).start);
                    let ge = g.delete_edge(v, w)?;
                    if !ge.is_connected() {
                        skipped.push(format!("{spec}-e"));
                        continue;
                    }
                    items.push(Item::single(ge, format!("partite:parts={csv}:e={v}-{w}")));
                }
            }
        }
        skipped.dedup();
        let notes = vec![format!(
            "{} edge deletions skipped because G-e is disconnected (stars K_{{1,r}}, where the isolated \
             leaf would add 1 to gamma_P): {}",
            skipped.len(),
            skipped.join(" ")
        )];
        Ok(Plan { universe: format!("complete multipartite graphs of total order <= {max}, and single-edge deletions"), items, notes })
    }

    fn eval(&self, g: &[Graph], case: &str) -> Result<Eval> {
        let g = &g[0];
        let spec = parse_parts(case)?;
        let r1 = spec.r1();
        let p = gp(g)?;
        let mut e = Eval::default();
        match case_field(case, "e") {
            Err(_) => {
                if r1 <= 2 {
                    e.check(p == 1, "item1", 1, p);
                } else {
                    e.check(p == 2, "item2", 2, p);
                }
            }
            Ok(edge) => {
                let (v, w) = edge
                    .split_once('-')
                    .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                    .ok_or_else(|| Error::Graph6(format!("bad edge in {case:?}")))?;
                if r1 <= 2 {
                    e.check(p == 1, "item3", 1, p);
                } else if r1 == 3 {
                    let smallest: VertexSet = (0..spec.parts().len())
                        .filter(|&i| spec.parts()[i] == r1)
                        .flat_map(|i| spec.part_range(i))
                        .collect();
                    let meets = smallest.contains(v) || smallest.contains(w);
                    let want = if meets { 1 } else { 2 };
                    e.check(p == want, "item4", want, p);
                } else {
                    e.check(p == 2, "item5", 2, p);
                }
            }
        }
        Ok(e)
    }
}

pub(crate) struct SpiderNumber;

/// At most one vertex of degree greater than two (paths included).
fn is_spider(t: &Graph) -> bool {
    (0..t.order()).filter(|&v| t.degree(v) > 2).count() <= 1
}

impl Verifier for SpiderNumber {
    fn claim(&self) -> &'static str {
        "for trees, gamma_P(T) = sp(T); gamma_P(T) = 1 iff T is a spider"
    }

    fn plan(&self, cfg: &VerifyConfig) -> Result<Plan> {
        let max = cfg.max_n.unwrap_or(9);
        cap_check("T7", max, 12, "tree order")?;
        let mut items = Vec::new();
        for n in 1..=max {
            items.extend(enumerate_trees(n)?.into_iter().map(|t| Item::single(t, "tree")));
        }
        Ok(Plan { universe: format!("trees 1<=n<={max}"), items, notes: Vec::new() })
    }

    fn eval(&self, g: &[Graph], _case: &str) -> Result<Eval> {
        let t = &g[0];
        let mut e = Eval::default();
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        let p = gp(t)?;
        let sp = spider_number(t)?.value;
        e.check(p == sp, "sp", format!("gamma_P = sp = {sp}"), format!("gamma_P = {p}"));
        let spider = is_spider(t);
        e.check(
            spider == (p == 1),
            "spider",
            format!("gamma_P {} 1 (spider = {spider})", if spider { "=" } else { ">" }),
            format!("gamma_P = {p}"),
        );
        Ok(e)
    }
}

pub(crate) fn recheck_search(name: &str, cap: String, examined: usize, witness: Option<String>, ok: impl Fn(&Graph) -> Result<bool>) -> Result<SearchOutcome> {
    let verified = match &witness {
        Some(w) => ok(&crate::families::parse_graph6(w)?)?,
        None => false,
    };
    Ok(SearchOutcome { name: name.to_string(), cap, examined, witness, verified })
}
