use std::fs;

use anyhow::{bail, ensure, Context, Result};
use graphzeta::graph::{enumerate_primes, export_dot, graph_from_density};
use graphzeta::io::{
    matrix_from_json, matrix_to_json, prime_rows, write_csv_with_header, BoseRow, CoeffRow, CurveRow,
    SurfaceRow,
};
use graphzeta::linalg::{trace_powers, validate_density, DensityMatrix};
use graphzeta::quantum::{acceptance_probability, isotropic, make_state, StateSpec};
use graphzeta::tolerance::EDGE_ZERO_TOL;
use graphzeta::zeta::{
    is_separable_by_coeffs, is_separable_by_singularity, series_coeffs, singularities, zeta_eval, Assessment,
    Provenance, Verdict as ZetaVerdict, ZetaRational,
};
use graphzeta::{Error, C64};
use rayon::prelude::*;
use serde::Serialize;

use crate::{Command, Input, Output, Verdict};

/// Grid points closer than this to a pole are reported as singular.
const SINGULAR_ROW_TOL: f64 = 1e-6;
const MAX_ORDER: usize = 64;

pub enum Status {
    Done,
    Entangled,
}

pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::Graph { input, output } => graph(&input, &output),
        Command::Coeffs { input, output, verdict, order } => coeffs(&input, &output, &verdict, order),
        Command::Curve { input, output, u_min, u_max, u_steps, p_min, p_max, p_steps } => {
            let u = grid(u_min, u_max, u_steps).context("u-grid")?;
            match p_steps {
                Some(steps) => {
                    ensure!(
                        input.state.is_none() && input.file.is_none(),
                        "a p-grid sweeps the isotropic family; drop --state and --file",
                    );
                    let p = grid(p_min.unwrap_or(0.0), p_max.unwrap_or(1.0), steps).context("p-grid")?;
                    surface(&output, &u, &p)
                }
                None => curve(&input, &output, &u),
            }
        }
        Command::Primes { input, output, lmax } => primes(&input, &output, lmax),
        Command::Bose { input, output, copies } => bose(&input, &output, copies),
        Command::Singularities { input, output, verdict } => poles(&input, &output, &verdict),
        Command::State { input, output } => {
            let rho = load(&input)?;
            emit(&output, &(matrix_to_json(rho.matrix())? + "\n"))?;
            Ok(Status::Done)
        }
    }
}

fn load(input: &Input) -> Result<DensityMatrix> {
    ensure!(input.tol > 0.0, "--tol must be positive");
    match (&input.state, &input.file) {
        (Some(name), None) => {
            let spec = StateSpec::parse_with_seed(name, input.seed)?;
            Ok(make_state(&spec)?.density())
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let m = matrix_from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok(validate_density(m, input.tol).with_context(|| format!("validating {}", path.display()))?)
        }
        (None, None) => bail!("one of --state or --file is required"),
        (Some(_), Some(_)) => bail!("--state and --file are exclusive"),
    }
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn grid(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    ensure!(min.is_finite() && max.is_finite(), "grid bounds must be finite");
    ensure!(min < max, "grid needs min < max, got {min} and {max}");
    ensure!(steps >= 2, "grid needs at least 2 steps, got {steps}");
    let last = steps - 1;
    Ok((0..steps)
        .map(|i| if i == last { max } else { min + (max - min) * i as f64 / last as f64 })
        .collect())
}

fn graph(input: &Input, output: &Output) -> Result<Status> {
    let g = graph_from_density(&load(input)?, EDGE_ZERO_TOL);
    emit(output, &export_dot(&g))?;
    eprintln!("vertices: {}, edges: {}, loops: {}", g.n_vertices(), g.n_edges(), g.n_loops());
    Ok(Status::Done)
}

fn report(assessment: &Assessment, verdict: &Verdict) -> Status {
    match &assessment.verdict {
        ZetaVerdict::Separable => eprintln!("verdict: separable"),
        ZetaVerdict::EntangledAtCoefficient { n, value } => {
            eprintln!("verdict: entangled (c_{n} = {value})")
        }
        ZetaVerdict::EntangledBySingularities(poles) => {
            let locs: Vec<String> = poles.iter().map(|s| s.location.to_string()).collect();
            eprintln!("verdict: entangled (singularities at u = {})", locs.join(", "))
        }
    }
    if assessment.caveat {
        eprintln!("note: input not asserted to be a pure bipartite reduction, so the verdict is not conclusive");
    }
    if verdict.pure_bipartite && !assessment.verdict.is_separable() {
        Status::Entangled
    } else {
        Status::Done
    }
}

fn provenance(verdict: &Verdict) -> Result<Provenance> {
    ensure!(verdict.sep_tol > 0.0, "--sep-tol must be positive");
    Ok(if verdict.pure_bipartite { Provenance::PureBipartite } else { Provenance::Unknown })
}

fn coeffs(input: &Input, output: &Output, verdict: &Verdict, order: usize) -> Result<Status> {
    ensure!((1..=MAX_ORDER).contains(&order), "--N must be between 1 and {MAX_ORDER}, got {order}");
    let prov = provenance(verdict)?;
    let rho = load(input)?;
    let series = series_coeffs(&trace_powers(&rho, order), order)?;
    let rows: Vec<CoeffRow> = (1..=order).map(|n| CoeffRow { n, c_n: series.get(n) }).collect();
    emit(output, &write_csv_with_header(&["n", "c_n"], &rows)?)?;
    Ok(report(&is_separable_by_coeffs(&rho, order, verdict.sep_tol, prov), verdict))
}

/// `None` marks a singular grid point.
fn sample(z: &ZetaRational, u: f64) -> Result<Option<C64>> {
    if z.nearest_singularity(u).is_some_and(|d| d <= SINGULAR_ROW_TOL) {
        return Ok(None);
    }
    match zeta_eval(z, C64::new(u, 0.0)) {
        // adding zero clears the sign of -0.0
        Ok(v) => Ok(Some(v + C64::new(0.0, 0.0))),
        Err(Error::AtSingularity(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn curve(input: &Input, output: &Output, u: &[f64]) -> Result<Status> {
    let z = singularities(&load(input)?)?;
    let rows = u.par_iter()
        .map(|&u| {
            let v = sample(&z, u)?;
            Ok(CurveRow {
                u,
                zeta_re: v.map(|v| v.re),
                zeta_im: v.map(|v| v.im),
                at_singularity: v.is_none() as u8,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    emit(output, &write_csv_with_header(&["u", "zeta_re", "zeta_im", "at_singularity"], &rows)?)?;
    Ok(Status::Done)
}

fn surface(output: &Output, u: &[f64], p: &[f64]) -> Result<Status> {
    let slices = p.iter()
        .map(|&p| Ok((p, singularities(&isotropic(p)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(usize, f64)> = (0..slices.len())
        .flat_map(|i| u.iter().map(move |&u| (i, u)))
        .collect();
    let rows = points.par_iter()
        .map(|&(i, u)| {
            let (p, z) = &slices[i];
            let v = sample(z, u)?;
            Ok(SurfaceRow {
                u,
                p: *p,
                zeta_re: v.map(|v| v.re),
                zeta_im: v.map(|v| v.im),
                at_singularity: v.is_none() as u8,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    emit(output, &write_csv_with_header(&["u", "p", "zeta_re", "zeta_im", "at_singularity"], &rows)?)?;
    Ok(Status::Done)
}

fn primes(input: &Input, output: &Output, lmax: usize) -> Result<Status> {
    let g = graph_from_density(&load(input)?, EDGE_ZERO_TOL);
    let table = enumerate_primes(&g, lmax)?;
    emit(output, &write_csv_with_header(&["nu", "rep", "norm_re", "norm_im"], &prime_rows(&table))?)?;
    eprintln!("primes: {}", table.classes.len());
    Ok(Status::Done)
}

fn bose(input: &Input, output: &Output, copies: usize) -> Result<Status> {
    ensure!(copies >= 1, "--K must be at least 1");
    let rho = load(input)?;
    let series = series_coeffs(&trace_powers(&rho, copies), copies)?;
    let rows = (1..=copies)
        .map(|k| {
            let p_k = acceptance_probability(&rho, k)?;
            let c_k = series.get(k);
            Ok(BoseRow { k, p_k, c_k, abs_diff: (p_k - c_k).abs() })
        })
        .collect::<Result<Vec<_>>>()?;
    emit(output, &write_csv_with_header(&["k", "p_k", "c_k", "abs_diff"], &rows)?)?;
    Ok(Status::Done)
}

#[derive(Serialize)]
struct PoleRow {
    u: f64,
    multiplicity: usize,
}

fn poles(input: &Input, output: &Output, verdict: &Verdict) -> Result<Status> {
    let prov = provenance(verdict)?;
    let rho = load(input)?;
    let z = singularities(&rho)?;
    let rows: Vec<PoleRow> = z.singularities.iter()
        .map(|s| PoleRow { u: s.location, multiplicity: s.multiplicity })
        .collect();
    emit(output, &write_csv_with_header(&["u", "multiplicity"], &rows)?)?;
    Ok(report(&is_separable_by_singularity(&rho, verdict.sep_tol, prov)?, verdict))
}
