//! Independent oracles shared by the integration tests. Nothing here calls
//! the code paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use graphzeta::graph::{WeightedDigraph, WeightedLaplacianInput};
use graphzeta::linalg::{validate_density, ComplexMatrix, DensityMatrix};
use graphzeta::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<C64>]) -> C64 {
    let n = m.len();
    if n == 0 {
        return C64::new(1.0, 0.0);
    }
    if n == 1 {
        return m[0][0];
    }
    let mut acc = C64::new(0.0, 0.0);
    for col in 0..n {
        let minor: Vec<Vec<C64>> = m[1..].iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, &z)| z).collect())
            .collect();
        let term = m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 { acc += term } else { acc -= term }
    }
    acc
}

/// `det(I - uρ)` by cofactor expansion.
pub fn det_i_minus_u_rho(rho: &ComplexMatrix, u: f64) -> C64 {
    let n = rho.dim();
    let rows: Vec<Vec<C64>> = (0..n)
        .map(|i| (0..n).map(|j| {
            let id = if i == j { 1.0 } else { 0.0 };
            C64::new(id, 0.0) - rho[(i, j)] * u
        }).collect())
        .collect();
    cofactor_det(&rows)
}

/// Coefficients of `Π_i (1 - λ_i u)` by direct multiplication.
pub fn poly_from_eigenvalues(lambdas: &[f64]) -> Vec<f64> {
    let mut poly = vec![1.0];
    for &l in lambdas {
        let mut next = vec![0.0; poly.len() + 1];
        for (k, &c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= l * c;
        }
        poly = next;
    }
    poly
}

/// Complete homogeneous symmetric polynomial `h_n(λ)` by summing over all
/// multisets of size `n`.
pub fn complete_homogeneous(n: usize, lambdas: &[f64]) -> f64 {
    fn go(n: usize, from: usize, lambdas: &[f64], prod: f64) -> f64 {
        if n == 0 {
            return prod;
        }
        (from..lambdas.len()).map(|i| go(n - 1, i, lambdas, prod * lambdas[i])).sum()
    }
    go(n, 0, lambdas, 1.0)
}

/// `ρ_B[b, b'] = Σ_a ψ_{a b} conj(ψ_{a b'})`, summed explicitly from the
/// amplitudes.
pub fn reduced_from_amplitudes(psi: &[C64], da: usize, db: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(db, |b, bp| {
        (0..da).map(|a| psi[a * db + b] * psi[a * db + bp].conj()).sum()
    })
}

/// Every closed walk of length `len` (start vertex free), as vertex lists.
pub fn closed_walks(g: &WeightedDigraph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = g.n_vertices();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|s| vec![s]).collect();
    while let Some(walk) = stack.pop() {
        let v = *walk.last().unwrap();
        for w in 0..n {
            if g.weight(v, w).is_none() {
                continue;
            }
            if walk.len() == len {
                if w == walk[0] {
                    out.push(walk.clone());
                }
            } else {
                let mut next = walk.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    out
}

/// Prime classes of length exactly `len` by brute force: all closed walks,
/// primitive ones keyed by their minimal edge rotation. Values are the
/// number of rotations seen and the edge norm.
pub fn brute_force_primes(g: &WeightedDigraph, len: usize) -> BTreeMap<Vec<(usize, usize)>, (usize, C64)> {
    let mut classes = BTreeMap::new();
    for walk in closed_walks(g, len) {
        let edges: Vec<(usize, usize)> = (0..len).map(|i| (walk[i], walk[(i + 1) % len])).collect();
        let is_power = (1..len).filter(|d| len.is_multiple_of(*d)).any(|d| {
            (0..len).all(|i| edges[i] == edges[i % d])
        });
        if is_power {
            continue;
        }
        let key = (0..len)
            .map(|r| (0..len).map(|i| edges[(i + r) % len]).collect::<Vec<_>>())
            .min()
            .unwrap();
        let norm = edges.iter().map(|&(a, b)| g.weight(a, b).unwrap()).product();
        let entry = classes.entry(key).or_insert((0, norm));
        entry.0 += 1;
    }
    classes
}

pub fn diag_density(values: &[f64]) -> DensityMatrix {
    validate_density(ComplexMatrix::diagonal(values), 1e-9).unwrap()
}

/// Magnitude-symmetric weights: the reverse edge is the forward weight
/// conjugated, negated, rotated by ±i, or copied, all of which keep `|ω|`
/// bit-for-bit.
pub fn random_symmetric_graph(seed: u64) -> WeightedLaplacianInput {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=7);
    let mut edges = Vec::new();
    for i in 0..n {
        if rng.gen_bool(0.4) {
            edges.push((i, i, C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))));
        }
        for j in i + 1..n {
            if !rng.gen_bool(0.6) {
                continue;
            }
            let w = C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let back = match rng.gen_range(0..5) {
                0 => w.conj(),
                1 => -w,
                2 => w * C64::i(),
                3 => w * -C64::i(),
                _ => w,
            };
            edges.push((i, j, w));
            edges.push((j, i, back));
        }
    }
    if edges.iter().all(|e| e.0 == e.1) {
        edges.push((0, 1, C64::new(1.0, 0.0)));
        edges.push((1, 0, C64::new(1.0, 0.0)));
    }
    WeightedLaplacianInput::new(n, &edges).unwrap()
}
