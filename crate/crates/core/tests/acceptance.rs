//! Acceptance suite. Runs every criterion, prints one line each and exits
//! nonzero if any fail.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use graphzeta::graph::{density_from_weighted_graph, enumerate_primes, graph_from_density};
use graphzeta::linalg::*;
use graphzeta::quantum::*;
use graphzeta::zeta::*;

use common::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: String) -> Outcome {
    if ok { Ok(msg) } else { Err(msg) }
}

fn builtin(name: &str) -> DensityMatrix {
    make_state(&name.parse().unwrap()).unwrap().density()
}

fn newton(rho: &DensityMatrix, order: usize) -> Vec<f64> {
    series_coeffs(&trace_powers(rho, order), order).unwrap().coeffs
}

fn euler(rho: &DensityMatrix, order: usize) -> Vec<f64> {
    let g = graph_from_density(rho, graphzeta::tolerance::EDGE_ZERO_TOL);
    euler_product_coeffs(&enumerate_primes(&g, order).unwrap(), order).unwrap().coeffs
}

fn partition_sum(rho: &DensityMatrix, order: usize) -> Vec<f64> {
    let x = trace_powers(rho, order).real_parts();
    (0..=order).map(|k| cycle_index(k, &x)).collect()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn pure_state_coefficients() -> Outcome {
    let rho = builtin("plus");
    let routes = [newton(&rho, 12), euler(&rho, 12), partition_sum(&rho, 12)];
    let worst = routes.iter()
        .flat_map(|r| r[1..].iter().map(|c| (c - 1.0).abs()))
        .fold(0.0, f64::max);
    check(worst <= 1e-9, format!("max |c_n - 1| over n<=12, three routes: {worst:.2e}"))
}

fn maximally_mixed_second_coefficient() -> Outcome {
    let rho = builtin("maxmixed2");
    let vals = [newton(&rho, 2)[2], euler(&rho, 2)[2], partition_sum(&rho, 2)[2]];
    let ok = vals.iter().all(|v| (v - 0.75).abs() <= 1e-12);
    check(ok, format!("c_2 (newton, euler, partition) = {vals:?}"))
}

fn sigma_cubed_singularities() -> Outcome {
    let rho = builtin("sigma3");
    let z = singularities(&rho).map_err(|e| e.to_string())?;
    let want_loc = [3.375, 6.75, 13.5, 27.0];

    // brute-force spectrum: σ is diagonal, so σ⊗3 has the triple products
    let diag: Vec<f64> = (0..4).map(|i| sigma()[(i, i)].re).collect();
    let mut products: Vec<f64> = Vec::new();
    for a in &diag {
        for b in &diag {
            for c in &diag {
                if a * b * c > 0.0 {
                    products.push(a * b * c);
                }
            }
        }
    }
    let want_mult: Vec<usize> = want_loc.iter()
        .map(|u| products.iter().filter(|&&l| (l * u - 1.0).abs() < 1e-12).count())
        .collect();
    if want_mult != [1, 3, 3, 1] {
        return Err(format!("oracle multiplicities {want_mult:?}"));
    }

    let got: Vec<(f64, usize)> = z.singularities.iter().map(|s| (s.location, s.multiplicity)).collect();
    let ok = got.len() == 4
        && got.iter().zip(want_loc.iter().zip(&want_mult))
            .all(|((l, m), (wl, wm))| (l - wl).abs() <= 1e-6 && m == wm);
    check(ok, format!("singularities {got:?}"))
}

fn ghz_reduction_singularity() -> Outcome {
    let z = singularities(&builtin("ghz-reduced")).map_err(|e| e.to_string())?;
    let got: Vec<(f64, usize)> = z.singularities.iter().map(|s| (s.location, s.multiplicity)).collect();
    let ok = got.len() == 1 && (got[0].0 - 2.0).abs() <= 1e-8 && got[0].1 == 2;
    check(ok, format!("singularities {got:?}"))
}

fn isotropic_endpoints() -> Outcome {
    let at = |p: f64| -> Vec<(f64, usize)> {
        let rho = isotropic(p).unwrap();
        singularities(&rho).unwrap().singularities.iter().map(|s| (s.location, s.multiplicity)).collect()
    };
    let (z0, z1) = (at(0.0), at(1.0));
    let ok = z0.len() == 1 && (z0[0].0 - 1.0).abs() <= 1e-8
        && z1.len() == 1 && (z1[0].0 - 4.0).abs() <= 1e-8;
    check(ok, format!("p=0: {z0:?}, p=1: {z1:?}"))
}

fn three_route_agreement() -> Outcome {
    let mut worst = 0.0f64;
    for seed in 0..50u64 {
        let dim = 1 + (seed % 4) as usize;
        let rank = 1 + ((seed / 4) % dim as u64) as usize;
        let rho = random_density_of_rank(dim, rank, 7000 + seed).map_err(|e| e.to_string())?;
        let (a, b, c) = (newton(&rho, 6), euler(&rho, 6), partition_sum(&rho, 6));
        worst = worst.max(max_diff(&a, &b)).max(max_diff(&a, &c)).max(max_diff(&b, &c));
    }
    check(worst <= 1e-8, format!("50 states, max pairwise difference {worst:.2e}"))
}

fn projector_oracle() -> Outcome {
    let mut states: Vec<(String, DensityMatrix)> = [
        "plus", "bell", "bell-reduced", "maxmixed2", "maxmixed4", "w", "w-reduced", "ghz",
        "ghz-reduced", "isotropic(0)", "isotropic(0.3)", "isotropic(1)", "sigma", "sigma3",
    ].iter().map(|n| (n.to_string(), builtin(n))).collect();
    for seed in 0..20u64 {
        let dim = 2 + (seed % 2) as usize;
        states.push((format!("random({dim}) seed {seed}"), random_density(dim, 9000 + seed).unwrap()));
    }
    let mut worst = 0.0f64;
    let mut checked = 0;
    for (name, rho) in &states {
        let c = newton(rho, 4);
        for (k, &c_k) in c.iter().enumerate().skip(1) {
            let Some(size) = rho.dim().checked_pow(k as u32).filter(|&s| s <= MAX_TENSOR_DIM) else {
                continue;
            };
            let p = acceptance_probability(rho, k).map_err(|e| format!("{name}: {e}"))?;
            worst = worst.max((p - c_k).abs());
            if size <= 256 {
                let dense = acceptance_probability_dense(rho, k).map_err(|e| format!("{name}: {e}"))?;
                worst = worst.max((dense - c_k).abs());
            }
            checked += 1;
        }
    }
    check(worst <= 1e-9, format!("{checked} (state, k) pairs, max |tr[Pi rho^k] - c_k| {worst:.2e}"))
}

fn basis_invariance() -> Outcome {
    let mut worst = 0.0f64;
    for seed in 0..20u64 {
        let dim = 2 + (seed % 3) as usize;
        let rho = random_density(dim, 11_000 + seed).unwrap();
        let u = random_unitary(dim, 12_000 + seed).unwrap();
        let rotated = rho.conjugate_by(&u).map_err(|e| e.to_string())?;
        worst = worst.max(max_diff(&newton(&rho, 10), &newton(&rotated, 10)));
    }
    check(worst <= 1e-8, format!("20 unitaries, max coefficient change {worst:.2e}"))
}

fn laplacian_is_psd() -> Outcome {
    let mut min = f64::INFINITY;
    for seed in 0..200 {
        let rho = density_from_weighted_graph(&random_symmetric_graph(seed)).map_err(|e| e.to_string())?;
        min = min.min(rho.eigenvalues().map_err(|e| e.to_string())?[0]);
    }
    check(min >= -1e-10, format!("200 graphs, minimum eigenvalue {min:.3e}"))
}

fn mixed_state_decay() -> Outcome {
    let mut ok = true;
    let mut report = Vec::new();
    for name in ["sigma3", "sigma"] {
        let rho = builtin(name);
        let c = newton(&rho, 10);
        let evals: Vec<f64> = rho.eigenvalues().unwrap().into_iter().filter(|&l| l > 1e-12).collect();
        let oracle_err = (0..=10).map(|n| (c[n] - complete_homogeneous(n, &evals)).abs()).fold(0.0, f64::max);
        let decreasing = c[1..].windows(2).all(|w| w[1] < w[0]);
        let small = c[10] < 0.01;
        ok &= decreasing && small && oracle_err <= 1e-12;
        report.push(format!(
            "{name}: decreasing={decreasing} c_10={:.5} (<0.01: {small}) oracle err {oracle_err:.1e}",
            c[10],
        ));
    }
    check(ok, report.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("pure-state coefficients are one", pure_state_coefficients),
        ("maximally mixed c_2 by three routes", maximally_mixed_second_coefficient),
        ("sigma^3 singularities and multiplicities", sigma_cubed_singularities),
        ("ghz reduction singularity", ghz_reduction_singularity),
        ("isotropic endpoints", isotropic_endpoints),
        ("three-route agreement", three_route_agreement),
        ("symmetric projector oracle", projector_oracle),
        ("basis invariance", basis_invariance),
        ("weighted laplacian is psd", laplacian_is_psd),
        ("mixed-state coefficient decay", mixed_state_decay),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} [{tag}] {name}: {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
