//! Cartesian and lexicographic products, and vertex amalgamation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Vertex `(g, h)` of a product is numbered `g * n_h + h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductVertexMap {
    pub n_g: usize,
    pub n_h: usize,
}

impl ProductVertexMap {
    pub fn index(&self, g: usize, h: usize) -> usize {
        g * self.n_h + h
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.n_h, v % self.n_h)
    }

    /// The `H`-fiber `{g} x V(H)`.
    pub fn h_layer(&self, g: usize) -> VertexSet {
        (0..self.n_h).map(|h| self.index(g, h)).collect()
    }

    /// The `G`-fiber `V(G) x {h}`.
    pub fn g_layer(&self, h: usize) -> VertexSet {
        (0..self.n_g).map(|g| self.index(g, h)).collect()
    }
}

fn product_map(g: &Graph, h: &Graph) -> Result<ProductVertexMap> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.order() * h.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    Ok(ProductVertexMap { n_g: g.order(), n_h: h.order() })
}

/// `(g1,h1) ~ (g2,h2)` iff one coordinate is equal and the other adjacent.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    let map = product_map(g, h)?;
    let adj = (0..map.n_g * map.n_h)
        .map(|v| {
            let (a, b) = map.pair(v);
            let along_h = h.adj(b).iter().map(|y| map.index(a, y));
            let along_g = g.adj(a).iter().map(|x| map.index(x, b));
            along_h.chain(along_g).collect()
        })
        .collect();
    Ok((Graph::from_adjacency_unchecked(adj), map))
}

/// `(g1,h1) ~ (g2,h2)` iff `g1 ~ g2`, or `g1 = g2` and `h1 ~ h2`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    let map = product_map(g, h)?;
    let adj = (0..map.n_g * map.n_h)
        .map(|v| {
            let (a, b) = map.pair(v);
            let within = h.adj(b).iter().map(|y| map.index(a, y));
            let across = g.adj(a).iter().flat_map(|x| (0..map.n_h).map(move |y| map.index(x, y)));
            within.chain(across).collect()
        })
        .collect();
    Ok((Graph::from_adjacency_unchecked(adj), map))
}

/// Disjoint union of `g` and `h` with `gv` and `hv` identified. Vertices of
/// `g` keep their labels; `h`'s vertices other than `hv` follow in order.
/// Returns the graph and the image of each vertex of `h`.
pub fn amalgamate(g: &Graph, gv: usize, h: &Graph, hv: usize) -> Result<(Graph, Vec<usize>)> {
    if gv >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: gv, order: g.order() });
    }
    if hv >= h.order() {
        return Err(Error::VertexOutOfRange { vertex: hv, order: h.order() });
    }
    let n = g.order() + h.order() - 1;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    let mut image = Vec::with_capacity(h.order());
    let mut next = g.order();
    for y in 0..h.order() {
        if y == hv {
            image.push(gv);
        } else {
            image.push(next);
            next += 1;
        }
    }
    let edges = g.edges().chain(h.edges().map(|(a, b)| (image[a], image[b])));
    Ok((Graph::from_edges(n, edges)?, image))
}
