//! Induced `ℓ^p → ℓ^p` operator norms of circulant matrices.
//!
//! * [`exact`]: closed forms (nonnegative circulants at every `p`, the
//!   endpoints `p ∈ {1, ∞}`, and several 2-norm formulas).
//! * [`bounds`]: certified brackets for `A(n, −a, b)` at other `p`.
//! * [`oracle`]: independent numerical lower estimates with witnesses.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the usual double-precision instantiation.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod circulant;
pub mod error;
pub mod exact;
pub mod exponent;
pub mod oracle;
pub mod quadrature;
pub mod result;
pub mod scalar;
pub mod vnorm;

pub use bounds::{
    best_bounds, bounds_holder, bounds_riesz_thorin, harmonic_upper, reflect_dual, BoundSet,
};
pub use circulant::{
    canonicalize, CirculantSpec, DenseMatrix, DiagonalSign, LinearOperator, TwoParamSpec,
    DEFAULT_DENSE_CAP,
};
pub use error::{Error, Result};
pub use exact::{
    endpoint_norms, exact_norm, exact_two_param, gram_params_from_circulant,
    pnorm_nonneg_circulant, two_norm_circ3, two_norm_gram, two_norm_minus, GramParams,
};
pub use exponent::{Exponent, ExponentKind};
pub use oracle::{OracleConfig, OracleReport};
pub use quadrature::dirichlet_l1;
pub use result::{NormResult, NormValue, Regime};
pub use scalar::Scalar;
pub use vnorm::vector_pnorm;

pub type Exponent64 = Exponent<f64>;
pub type Circulant64 = CirculantSpec<f64>;
pub type TwoParam64 = TwoParamSpec<f64>;
pub type NormResult64 = NormResult<f64>;
pub type GramParams64 = GramParams<f64>;
pub type BoundSet64 = BoundSet<f64>;
pub type OracleReport64 = OracleReport<f64>;

pub type Exponent32 = Exponent<f32>;
pub type Circulant32 = CirculantSpec<f32>;
pub type TwoParam32 = TwoParamSpec<f32>;
pub type NormResult32 = NormResult<f32>;
pub type BoundSet32 = BoundSet<f32>;
