//! Fusion rules, dimensions, θ and 6j symbols of `C_{k,m,±}`.

mod data;
pub mod oracle;
mod params;
mod pentagon;
mod rules;
mod sixj;

pub use data::{global_dim, global_dim_by_sum, qdim, theta_symbol, theta_symbol_strict};
pub use oracle::{sixj_oracle, sixj_oracle_column, theta_oracle};
pub use params::{CategoryParams, PivotalSign};
pub use pentagon::{pentagon_check, pentagon_check_table, PentagonReport};
pub use rules::{
    admissible, admissible_generic, admissible_six_j_labels, fuse, multiplicity, AdmissibleTriple, SixJLabels,
};
pub use sixj::{six_j, SixJTable};

