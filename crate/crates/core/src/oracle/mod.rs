//! Numerical estimators of induced norms that share no code path with the
//! closed forms: they only ever evaluate `‖Ax‖_p / ‖x‖_p` on concrete vectors
//! (or, for `p = 2`, the circulant eigenvalues).
//!
//! Every estimate is a lower bound on the true norm, certified by the
//! witness vector it came from.

mod brute;
mod kernel;
mod lemma;
mod power;
mod spectral;

pub use brute::{brute_force_estimate, default_grid_depth, BRUTE_FORCE_MAX_N};
pub use kernel::dirichlet_l1_riemann;
pub use lemma::{lemma31_check, Lemma31Report, LEMMA31_MAX_N};
pub use power::{power_estimate, OracleConfig, OracleReport, DEFAULT_SEED};
pub use spectral::{circulant_eigenvalues, spectral_two_norm};
