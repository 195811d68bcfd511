//! Named quantum states and the brute-force symmetric-group Bose test.

mod bose;
mod states;

pub use bose::{
    acceptance_probability, acceptance_probability_dense, permutation_index_map,
    permutation_operator, permutations, purity, symmetric_dimension, symmetric_projector,
    SymmetricProjector, MAX_COPIES, MAX_TENSOR_DIM,
};
pub use states::{
    bell, ghz, isotropic, make_state, plus, sigma, w_state, PureState, State, StateSpec,
    BUILTIN_NAMES,
};
