//! Braided data of `C^br_{k,ℓ,±}`: `R` coefficients, `S`, `T`, modularity,
//! conductor, Verlinde and Galois conjugation.

mod galois;
mod matrices;
mod params;

pub use galois::{galois_conjugate, galois_orbits};
pub use matrices::{
    conductor, modularity_rank, predicted_conductor, predicted_rank, r_coeff, s_matrix, t_matrix, twist,
    verlinde_check, verlinde_check_matrix, ModularReport, VerlindeReport,
};
pub use params::{s_param, BraidingParams};
