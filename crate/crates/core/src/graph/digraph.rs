use std::collections::BTreeMap;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::DensityMatrix;

/// A directed edge. Vertices are zero-based internally and shown one-based.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Edge {
    pub origin: usize,
    pub terminus: usize,
    pub weight: C64,
}

/// Directed graph with complex edge weights, at most one edge per ordered
/// vertex pair, loops allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedDigraph {
    n_vertices: usize,
    edges: Vec<Edge>,
    index: BTreeMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
}

impl WeightedDigraph {
    /// Edges are stored sorted by `(origin, terminus)`.
    pub fn new(n_vertices: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        edges.sort_by_key(|e| (e.origin, e.terminus));
        let mut index = BTreeMap::new();
        let mut out = vec![Vec::new(); n_vertices];
        for (k, e) in edges.iter().enumerate() {
            if e.origin >= n_vertices || e.terminus >= n_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) references a vertex outside 1..={n_vertices}",
                    e.origin + 1, e.terminus + 1,
                )));
            }
            if e.weight == C64::new(0.0, 0.0) || !(e.weight.re.is_finite() && e.weight.im.is_finite()) {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) has weight {}", e.origin + 1, e.terminus + 1, e.weight,
                )));
            }
            if index.insert((e.origin, e.terminus), k).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})", e.origin + 1, e.terminus + 1,
                )));
            }
            out[e.origin].push(k);
        }
        Ok(Self { n_vertices, edges, index, out })
    }

    pub fn n_vertices(&self) -> usize { self.n_vertices }

    pub fn edges(&self) -> &[Edge] { &self.edges }

    pub fn n_edges(&self) -> usize { self.edges.len() }

    pub fn n_loops(&self) -> usize {
        self.edges.iter().filter(|e| e.origin == e.terminus).count()
    }

    pub fn weight(&self, origin: usize, terminus: usize) -> Option<C64> {
        self.index.get(&(origin, terminus)).map(|&k| self.edges[k].weight)
    }

    /// Outgoing edges of `v`, ordered by terminus.
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.out[v].iter().map(move |&k| &self.edges[k])
    }
}

/// One vertex per basis state and an edge `i -> j` of weight `ρ_ij` for every
/// entry with `|ρ_ij| > zero_tol`.
pub fn graph_from_density(rho: &DensityMatrix, zero_tol: f64) -> WeightedDigraph {
    let n = rho.dim();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let w = rho[(i, j)];
            if w.norm() > zero_tol {
                edges.push(Edge { origin: i, terminus: j, weight: w });
            }
        }
    }
    WeightedDigraph::new(n, edges).expect("density matrix entries always form a valid graph")
}

/// Product of the edge weights along a walk given as `(origin, terminus)`
/// pairs. The empty walk has norm 1.
pub fn edge_norm(g: &WeightedDigraph, walk: &[(usize, usize)]) -> Result<C64> {
    let mut norm = C64::new(1.0, 0.0);
    for (k, &(a, b)) in walk.iter().enumerate() {
        if k > 0 && walk[k - 1].1 != a {
            return Err(Error::NotAWalk(format!(
                "edge {} ends at v{} but edge {} starts at v{}",
                k, walk[k - 1].1 + 1, k + 1, a + 1,
            )));
        }
        let w = g.weight(a, b)
            .ok_or_else(|| Error::NotAWalk(format!("no edge v{} -> v{}", a + 1, b + 1)))?;
        norm *= w;
    }
    Ok(norm)
}
