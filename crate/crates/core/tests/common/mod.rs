//! Brute-force reference implementations. They only use adjacency queries
//! from the library and share no code with its solvers.

#![allow(dead_code)]

pub mod suites;

use rand::seq::SliceRandom;
use rand::Rng;
use zfpd::Graph;

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Applies the color change rule, visiting black vertices in a random
/// order each sweep.
pub fn naive_closure<R: Rng>(g: &Graph, start: u64, rng: &mut R) -> u64 {
    let n = g.order();
    let mut black = vec![false; n];
    for v in members(start, n) {
        black[v] = true;
    }
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.shuffle(rng);
        let mut changed = false;
        for &v in &order {
            if !black[v] {
                continue;
            }
            let white: Vec<usize> = (0..n).filter(|&w| g.has_edge(v, w) && !black[w]).collect();
            if white.len() == 1 {
                black[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..n).filter(|&v| black[v]).fold(0, |m, v| m | 1 << v)
}

pub fn closed_nbhd(g: &Graph, s: u64) -> u64 {
    let n = g.order();
    let mut out = s;
    for v in members(s, n) {
        for w in 0..n {
            if g.has_edge(v, w) {
                out |= 1 << w;
            }
        }
    }
    out
}

pub fn open_nbhd(g: &Graph, s: u64) -> u64 {
    let n = g.order();
    let mut out = 0;
    for v in members(s, n) {
        for w in 0..n {
            if g.has_edge(v, w) {
                out |= 1 << w;
            }
        }
    }
    out
}

fn full(n: usize) -> u64 {
    if n == 64 { u64::MAX } else { (1u64 << n) - 1 }
}

/// Smallest `|S|` over all subsets satisfying `pred`.
pub fn min_subset(n: usize, mut pred: impl FnMut(u64) -> bool) -> Option<usize> {
    (0..=full(n)).filter(|&s| pred(s)).map(|s| s.count_ones() as usize).min()
}

pub fn brute_zf<R: Rng>(g: &Graph, rng: &mut R) -> usize {
    let n = g.order();
    min_subset(n, |s| naive_closure(g, s, rng) == full(n)).unwrap()
}

pub fn brute_pd<R: Rng>(g: &Graph, rng: &mut R) -> usize {
    let n = g.order();
    min_subset(n, |s| s != 0 && naive_closure(g, closed_nbhd(g, s), rng) == full(n)).unwrap()
}

pub fn brute_dom(g: &Graph) -> usize {
    let n = g.order();
    min_subset(n, |s| s != 0 && closed_nbhd(g, s) == full(n)).unwrap()
}

pub fn brute_tdom(g: &Graph) -> Option<usize> {
    let n = g.order();
    min_subset(n, |s| s != 0 && open_nbhd(g, s) == full(n))
}

fn induced_degrees(g: &Graph, block: &[usize]) -> (Vec<usize>, usize) {
    let degs: Vec<usize> = block.iter().map(|&v| block.iter().filter(|&&w| g.has_edge(v, w)).count()).collect();
    let edges = degs.iter().sum::<usize>() / 2;
    (degs, edges)
}

fn block_connected(g: &Graph, block: &[usize]) -> bool {
    let mut seen = vec![block[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &w in block {
            if g.has_edge(v, w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == block.len()
}

pub fn induces_path(g: &Graph, block: &[usize]) -> bool {
    let (degs, edges) = induced_degrees(g, block);
    block_connected(g, block) && edges + 1 == block.len() && degs.iter().all(|&d| d <= 2)
}

pub fn induces_spider(g: &Graph, block: &[usize]) -> bool {
    let (degs, edges) = induced_degrees(g, block);
    block_connected(g, block) && edges + 1 == block.len() && degs.iter().filter(|&&d| d > 2).count() <= 1
}

/// Minimum number of blocks in a set partition of `V(g)` whose blocks all
/// satisfy `ok`.
pub fn min_partition(g: &Graph, ok: &dyn Fn(&Graph, &[usize]) -> bool) -> usize {
    fn rec(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, ok: &dyn Fn(&Graph, &[usize]) -> bool, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == g.order() {
            if blocks.iter().all(|b| ok(g, b)) {
                *best = blocks.len();
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            rec(g, v + 1, blocks, ok, best);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        rec(g, v + 1, blocks, ok, best);
        blocks.pop();
    }
    let mut best = g.order() + 1;
    rec(g, 0, &mut Vec::new(), ok, &mut best);
    best
}

pub fn brute_path_cover(g: &Graph) -> usize {
    min_partition(g, &induces_path)
}

pub fn brute_spider_number(g: &Graph) -> usize {
    min_partition(g, &induces_spider)
}

/// Minor test by assigning every host vertex to a branch set or to none.
pub fn brute_has_minor(g: &Graph, pattern: &Graph) -> bool {
    let (n, k) = (g.order(), pattern.order());
    if k > n {
        return false;
    }
    let mut label = vec![0usize; n];
    loop {
        let sets: Vec<Vec<usize>> = (0..k).map(|p| (0..n).filter(|&v| label[v] == p + 1).collect()).collect();
        let ok = sets.iter().all(|s| !s.is_empty() && block_connected(g, s))
            && (0..k).all(|p| {
                (0..k).all(|q| {
                    !pattern.has_edge(p, q) || sets[p].iter().any(|&a| sets[q].iter().any(|&b| g.has_edge(a, b)))
                })
            });
        if ok {
            return true;
        }
        // next assignment in base k+1
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

/// Uniform random graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
