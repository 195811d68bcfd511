use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{
    partial_trace, random_density, validate_density, ComplexMatrix, DensityMatrix, Keep,
};
use crate::tolerance::DEFAULT_TOL;

/// Normalized state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::NotNormalized((norm - 1.0).abs()));
        }
        Ok(Self { amplitudes })
    }

    /// Equal superposition of the listed basis states.
    pub fn uniform(dim: usize, basis: &[usize]) -> Result<Self> {
        let a = 1.0 / (basis.len() as f64).sqrt();
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        for &b in basis {
            amps[b] = C64::new(a, 0.0);
        }
        Self::new(amps)
    }

    pub fn dim(&self) -> usize { self.amplitudes.len() }

    pub fn amplitudes(&self) -> &[C64] { &self.amplitudes }

    /// `|ψ⟩⟨ψ|`
    pub fn density(&self) -> DensityMatrix {
        validate_density(ComplexMatrix::outer(&self.amplitudes), DEFAULT_TOL)
            .expect("projector onto a unit vector is a density matrix")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum State {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl State {
    pub fn density(&self) -> DensityMatrix {
        match self {
            State::Pure(psi) => psi.density(),
            State::Mixed(rho) => rho.clone(),
        }
    }
}

/// Named constructors for the worked examples, addressable by string.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    /// `(|0⟩ + |1⟩)/√2`
    Plus,
    /// `(|00⟩ + |11⟩)/√2`
    Bell,
    /// Reduced state of `Bell`, i.e. `I/2`.
    BellReduced,
    MaxMixed2,
    MaxMixed4,
    /// `(|001⟩ + |010⟩ + |100⟩)/√3`
    W,
    /// `W` with the first qubit traced out.
    WReduced,
    /// `(|000⟩ + |111⟩)/√2`
    Ghz,
    /// `GHZ` with the first qubit traced out.
    GhzReduced,
    /// Two-qubit family from the Bell state (`p = 0`) to `I/4` (`p = 1`).
    Isotropic(f64),
    /// `diag(1/3, 0, 0, 2/3)`
    Sigma,
    /// `σ ⊗ σ ⊗ σ`
    Sigma3,
    /// Seeded random full-rank density matrix of the given dimension.
    Random { dim: usize, seed: u64 },
    CustomVector(Vec<C64>),
    CustomMatrix(ComplexMatrix),
}

pub const BUILTIN_NAMES: &[&str] = &[
    "plus", "bell", "bell-reduced", "maxmixed2", "maxmixed4", "w", "w-reduced", "ghz",
    "ghz-reduced", "isotropic(p)", "sigma", "sigma3", "random(d)",
];

impl StateSpec {
    /// Parses a built-in name. `isotropic` takes `p` as `isotropic(p)` or
    /// `isotropic:p`; `random` takes the dimension the same way and uses
    /// `seed`.
    pub fn parse_with_seed(s: &str, seed: u64) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = split_arg(s)?;
        let need = || arg.ok_or_else(|| {
            Error::InvalidParameter(format!("state `{name}` needs a parameter, e.g. {name}(0.5)"))
        });
        let none = |arg: Option<&str>, spec: StateSpec| match arg {
            None => Ok(spec),
            Some(_) => Err(Error::InvalidParameter(format!("state `{name}` takes no parameter"))),
        };
        match name {
            "plus" => none(arg, StateSpec::Plus),
            "bell" => none(arg, StateSpec::Bell),
            "bell-reduced" => none(arg, StateSpec::BellReduced),
            "maxmixed2" => none(arg, StateSpec::MaxMixed2),
            "maxmixed4" => none(arg, StateSpec::MaxMixed4),
            "w" => none(arg, StateSpec::W),
            "w-reduced" => none(arg, StateSpec::WReduced),
            "ghz" => none(arg, StateSpec::Ghz),
            "ghz-reduced" => none(arg, StateSpec::GhzReduced),
            "sigma" => none(arg, StateSpec::Sigma),
            "sigma3" => none(arg, StateSpec::Sigma3),
            "isotropic" => {
                let p: f64 = need()?.parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad isotropic parameter in `{s}`")))?;
                Ok(StateSpec::Isotropic(p))
            }
            "random" => {
                let dim: usize = need()?.parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad dimension in `{s}`")))?;
                Ok(StateSpec::Random { dim, seed })
            }
            _ => Err(Error::InvalidParameter(format!(
                "unknown state `{s}`; known: {}", BUILTIN_NAMES.join(", "),
            ))),
        }
    }
}

fn split_arg(s: &str) -> Result<(&str, Option<&str>)> {
    if let Some((name, rest)) = s.split_once('(') {
        let arg = rest.strip_suffix(')')
            .ok_or_else(|| Error::InvalidParameter(format!("unbalanced parentheses in `{s}`")))?;
        Ok((name, Some(arg.trim())))
    } else if let Some((name, arg)) = s.split_once(':') {
        Ok((name, Some(arg.trim())))
    } else {
        Ok((s, None))
    }
}

impl FromStr for StateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> { Self::parse_with_seed(s, 0) }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::Plus => write!(f, "plus"),
            StateSpec::Bell => write!(f, "bell"),
            StateSpec::BellReduced => write!(f, "bell-reduced"),
            StateSpec::MaxMixed2 => write!(f, "maxmixed2"),
            StateSpec::MaxMixed4 => write!(f, "maxmixed4"),
            StateSpec::W => write!(f, "w"),
            StateSpec::WReduced => write!(f, "w-reduced"),
            StateSpec::Ghz => write!(f, "ghz"),
            StateSpec::GhzReduced => write!(f, "ghz-reduced"),
            StateSpec::Isotropic(p) => write!(f, "isotropic({p})"),
            StateSpec::Sigma => write!(f, "sigma"),
            StateSpec::Sigma3 => write!(f, "sigma3"),
            StateSpec::Random { dim, .. } => write!(f, "random({dim})"),
            StateSpec::CustomVector(_) => write!(f, "custom-vector"),
            StateSpec::CustomMatrix(_) => write!(f, "custom-matrix"),
        }
    }
}

pub fn plus() -> PureState { PureState::uniform(2, &[0, 1]).unwrap() }

pub fn bell() -> PureState { PureState::uniform(4, &[0b00, 0b11]).unwrap() }

pub fn w_state() -> PureState { PureState::uniform(8, &[0b001, 0b010, 0b100]).unwrap() }

pub fn ghz() -> PureState { PureState::uniform(8, &[0b000, 0b111]).unwrap() }

pub fn sigma() -> DensityMatrix {
    validate_density(ComplexMatrix::diagonal(&[1.0 / 3.0, 0.0, 0.0, 2.0 / 3.0]), DEFAULT_TOL)
        .unwrap()
}

/// ```text
/// ρ(p) = [ (2-p)/4   0    0   (1-p)/2 ]
///        [    0     p/4   0      0    ]
///        [    0      0   p/4     0    ]
///        [ (1-p)/2   0    0   (2-p)/4 ]
/// ```
pub fn isotropic(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("isotropic parameter p = {p} outside [0, 1]")));
    }
    let a = (2.0 - p) / 4.0;
    let b = (1.0 - p) / 2.0;
    let q = p / 4.0;
    let m = ComplexMatrix::from_real_rows(&[
        &[a, 0.0, 0.0, b],
        &[0.0, q, 0.0, 0.0],
        &[0.0, 0.0, q, 0.0],
        &[b, 0.0, 0.0, a],
    ])?;
    validate_density(m, DEFAULT_TOL)
}

fn maximally_mixed(dim: usize) -> DensityMatrix {
    validate_density(ComplexMatrix::diagonal(&vec![1.0 / dim as f64; dim]), DEFAULT_TOL).unwrap()
}

/// Builds the state named by `spec`.
pub fn make_state(spec: &StateSpec) -> Result<State> {
    let reduce = |psi: PureState, dims: [usize; 2]| -> Result<State> {
        Ok(State::Mixed(partial_trace(&psi.density(), dims, Keep::B)?))
    };
    match spec {
        StateSpec::Plus => Ok(State::Pure(plus())),
        StateSpec::Bell => Ok(State::Pure(bell())),
        StateSpec::BellReduced => reduce(bell(), [2, 2]),
        StateSpec::MaxMixed2 => Ok(State::Mixed(maximally_mixed(2))),
        StateSpec::MaxMixed4 => Ok(State::Mixed(maximally_mixed(4))),
        StateSpec::W => Ok(State::Pure(w_state())),
        StateSpec::WReduced => reduce(w_state(), [2, 4]),
        StateSpec::Ghz => Ok(State::Pure(ghz())),
        StateSpec::GhzReduced => reduce(ghz(), [2, 4]),
        StateSpec::Isotropic(p) => Ok(State::Mixed(isotropic(*p)?)),
        StateSpec::Sigma => Ok(State::Mixed(sigma())),
        StateSpec::Sigma3 => {
            let s = sigma();
            Ok(State::Mixed(s.kron(&s)?.kron(&s)?))
        }
        StateSpec::Random { dim, seed } => Ok(State::Mixed(random_density(*dim, *seed)?)),
        StateSpec::CustomVector(v) => Ok(State::Pure(PureState::new(v.clone())?)),
        StateSpec::CustomMatrix(m) => Ok(State::Mixed(validate_density(m.clone(), DEFAULT_TOL)?)),
    }
}
