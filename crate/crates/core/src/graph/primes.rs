//! Primes of a weighted digraph: classes of primitive closed walks under
//! cyclic rotation.
//!
//! Edges `i -> j` and `j -> i` are independent directed edges with no formal
//! inverses, so there is no backtracking constraint and walks may revisit
//! vertices and edges. Each class is represented by its lexicographically
//! least rotation, edges compared by `(origin, terminus)`.

use std::fmt;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::tolerance::MAX_PRIME_LEN;

/// Canonical representative of a prime class.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeClass {
    rep: Vec<(usize, usize)>,
    norm: C64,
}

impl PrimeClass {
    /// Edge sequence of the canonical rotation (zero-based vertices).
    pub fn rep(&self) -> &[(usize, usize)] { &self.rep }

    /// Walk length `ν`.
    pub fn len(&self) -> usize { self.rep.len() }

    pub fn is_empty(&self) -> bool { self.rep.is_empty() }

    /// Edge norm `N_E`, the product of the edge weights.
    pub fn norm(&self) -> C64 { self.norm }

    /// Vertices visited, starting vertex repeated at the end.
    pub fn vertex_walk(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.rep.iter().map(|e| e.0).collect();
        vs.push(self.rep[0].0);
        vs
    }
}

impl fmt::Display for PrimeClass {
    /// One-based closed vertex walk, e.g. `1-2-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.vertex_walk().iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{}", s.join("-"))
    }
}

/// All prime classes of length at most `max_len`, sorted by `(ν, rep)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeTable {
    pub max_len: usize,
    pub classes: Vec<PrimeClass>,
}

impl PrimeTable {
    pub fn of_length(&self, nu: usize) -> impl Iterator<Item = &PrimeClass> + '_ {
        self.classes.iter().filter(move |p| p.len() == nu)
    }
}

/// Enumerates every prime class with `1 <= ν <= max_len`.
///
/// Walks are grown depth-first from each start vertex `s` through vertices
/// `>= s` only; the least rotation of a class always starts at its smallest
/// vertex, so every class is reached. Among the rotations found, only the
/// primitive, lexicographically least one is kept.
pub fn enumerate_primes(g: &WeightedDigraph, max_len: usize) -> Result<PrimeTable> {
    if max_len > MAX_PRIME_LEN {
        return Err(Error::CapExceeded { what: "prime length", value: max_len, cap: MAX_PRIME_LEN });
    }
    if max_len == 0 {
        return Err(Error::InvalidParameter("prime length must be at least 1".into()));
    }
    let mut classes = Vec::new();
    let mut path = Vec::with_capacity(max_len + 1);
    for s in 0..g.n_vertices() {
        path.clear();
        path.push(s);
        grow(g, s, max_len, &mut path, C64::new(1.0, 0.0), &mut classes);
    }
    classes.sort_by(|a: &PrimeClass, b: &PrimeClass| {
        (a.len(), &a.rep).cmp(&(b.len(), &b.rep))
    });
    Ok(PrimeTable { max_len, classes })
}

fn grow(
    g: &WeightedDigraph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    norm: C64,
    out: &mut Vec<PrimeClass>,
) {
    let v = *path.last().unwrap();
    let len = path.len(); // edges after the next step
    for e in g.out_edges(v) {
        if e.terminus < start {
            continue;
        }
        let next_norm = norm * e.weight;
        if e.terminus == start {
            let verts = &path[..];
            if is_primitive(verts) && is_least_rotation(verts) {
                out.push(PrimeClass { rep: edges_of(verts), norm: next_norm });
            }
        }
        if len < max_len {
            path.push(e.terminus);
            grow(g, start, max_len, path, next_norm, out);
            path.pop();
        }
    }
}

/// Edge sequence of the closed walk through `verts` (back to `verts[0]`).
fn edges_of(verts: &[usize]) -> Vec<(usize, usize)> {
    let s = verts.len();
    (0..s).map(|i| (verts[i], verts[(i + 1) % s])).collect()
}

/// A closed walk is a proper power iff its vertex sequence has a period that
/// is a proper divisor of its length.
pub(crate) fn is_primitive(verts: &[usize]) -> bool {
    let s = verts.len();
    (1..s)
        .filter(|d| s.is_multiple_of(*d))
        .all(|d| (d..s).any(|i| verts[i] != verts[i - d]))
}

fn is_least_rotation(verts: &[usize]) -> bool {
    let s = verts.len();
    let base = edges_of(verts);
    (1..s).all(|r| {
        let rotated = (0..s).map(|i| base[(i + r) % s]);
        base.iter().copied().cmp(rotated) != std::cmp::Ordering::Greater
    })
}
