//! Closed-form induced norms.
//!
//! Any `p` for circulants with nonnegative entries; `p ∈ {1, ∞}` for every
//! circulant; `p = 2` for `A(n, −a, b)`, for `3 × 3` circulants, and for any
//! matrix whose Gram matrix has the form `(ρ − β)I + βK`.

use crate::circulant::{CirculantSpec, DiagonalSign, TwoParamSpec};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, ExponentKind};
use crate::result::{NormResult, Regime};
use crate::scalar::{sum_ltr, Scalar};

/// Relative tolerance for deciding that all off-diagonal Gram entries agree.
pub const GRAM_EQUALITY_TOL: f64 = 1e-12;

pub const METHOD_NONNEG: &str = "nonneg-row-sum";
pub const METHOD_ENDPOINT_ONE: &str = "max-abs-column-sum";
pub const METHOD_ENDPOINT_INF: &str = "max-abs-row-sum";
pub const METHOD_CIRC3: &str = "circ3-2norm";
pub const METHOD_GRAM: &str = "gram-2norm";

/// `‖A‖_p = α_1 + ⋯ + α_n` for every `p` when all `α_i ≥ 0`. The all-ones
/// vector attains it.
pub fn pnorm_nonneg_circulant<T: Scalar>(
    spec: &CirculantSpec<T>,
    _e: Exponent<T>,
) -> Result<NormResult<T>> {
    if !spec.is_nonnegative() {
        return Err(Error::NotApplicable(
            "circulant has a negative entry; use the bounds module".into(),
        ));
    }
    Ok(NormResult::exact(
        spec.row_sum(),
        METHOD_NONNEG,
        Regime::NotApplicable,
    ))
}

/// `‖A(n, −a, b)‖_2`: `a + b` when `(n−2)b ≤ 2a`, `(n−1)b − a` otherwise.
///
/// `n = 1` is the `1 × 1` matrix `(−a)`, whose norm is `a`.
pub fn two_norm_minus<T: Scalar>(spec: &TwoParamSpec<T>) -> Result<NormResult<T>> {
    if spec.sign() != DiagonalSign::Minus {
        return Err(Error::NotApplicable(
            "expected A(n, -a, b); nonnegative matrices use the row-sum formula".into(),
        ));
    }
    let (a, b) = (spec.a(), spec.b());
    let regime = spec.regime();
    if spec.n() == 1 {
        return Ok(NormResult::exact(a, "thm-2norm n=1", regime));
    }
    let value = match regime {
        Regime::CaseII => T::from_usize_lossy(spec.n() - 1) * b - a,
        _ => a + b,
    };
    Ok(NormResult::exact(
        value,
        format!("thm-2norm {}", regime.label()),
        regime,
    ))
}

/// `‖Circ(α_1, α_2, α_3)‖_2`. With `s = α_1α_2 + α_2α_3 + α_3α_1`:
/// `√(α_1² + α_2² + α_3² − s)` when `s ≤ 0`, `|α_1 + α_2 + α_3|` when `s > 0`.
pub fn two_norm_circ3<T: Scalar>(alpha: [T; 3]) -> NormResult<T> {
    let [x, y, z] = alpha;
    let s = x * y + y * z + z * x;
    if s <= T::zero() {
        let sq = (x * x + y * y + z * z - s).max(T::zero());
        NormResult::exact(sq.sqrt(), METHOD_CIRC3, Regime::CaseI)
    } else {
        NormResult::exact((x + y + z).abs(), METHOD_CIRC3, Regime::CaseII)
    }
}

/// A Gram matrix of the form `(ρ − β)I + βK`: every column has squared norm
/// `ρ` and every pair of distinct columns has inner product `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramParams<T> {
    rho: T,
    beta: T,
    n: usize,
}

impl<T: Scalar> GramParams<T> {
    /// Rejects parameters whose Gram matrix is not positive semidefinite,
    /// i.e. `ρ − β < 0` or `ρ + (n−1)β < 0` beyond rounding.
    pub fn new(rho: T, beta: T, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyRow);
        }
        if !rho.is_finite() || !beta.is_finite() {
            return Err(Error::NonFinite {
                what: "Gram parameters",
            });
        }
        let slack = T::lit(GRAM_EQUALITY_TOL) * rho.abs().max(beta.abs());
        if rho < T::zero() {
            return Err(Error::NotPsd(format!("rho = {rho} < 0")));
        }
        if n > 1 && rho - beta < -slack {
            return Err(Error::NotPsd(format!("rho - beta = {} < 0", rho - beta)));
        }
        let top = rho + T::from_usize_lossy(n - 1) * beta;
        if top < -slack {
            return Err(Error::NotPsd(format!("rho + (n-1) beta = {top} < 0")));
        }
        Ok(Self { rho, beta, n })
    }

    pub fn rho(&self) -> T {
        self.rho
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Square root of the largest Gram eigenvalue. The eigenvalues are `ρ − β`
/// (multiplicity `n − 1`) and `ρ + (n−1)β` (multiplicity one).
pub fn two_norm_gram<T: Scalar>(g: &GramParams<T>) -> NormResult<T> {
    let (rho, beta) = (g.rho, g.beta);
    let (eig, regime) = if g.n == 1 || beta > T::zero() {
        (rho + T::from_usize_lossy(g.n - 1) * beta, Regime::CaseII)
    } else {
        (rho - beta, Regime::CaseI)
    };
    let regime = if g.n == 1 { Regime::CaseI } else { regime };
    NormResult::exact(eig.max(T::zero()).sqrt(), METHOD_GRAM, regime)
}

/// Column Gram entries of a circulant. For a circulant, `(AᵀA)_{ij}` only
/// depends on `(j − i) mod n` and equals the cyclic autocorrelation
/// `G_k = Σ_r α_r α_{r+k}` of the first row; the diagonal is `G_0` for every
/// column.
///
/// Returns `None` unless `G_1, …, G_{n−1}` agree to
/// [`GRAM_EQUALITY_TOL`] relative to `ρ = G_0`.
pub fn gram_params_from_circulant<T: Scalar>(spec: &CirculantSpec<T>) -> Option<GramParams<T>> {
    let row = spec.first_row();
    let n = row.len();
    let corr = |k: usize| sum_ltr((0..n).map(|r| row[r] * row[(r + k) % n]));
    let rho = corr(0);
    if n == 1 {
        return GramParams::new(rho, T::zero(), 1).ok();
    }
    let beta = corr(1);
    let tol = T::lit(GRAM_EQUALITY_TOL) * rho.max(T::min_positive_value());
    if (2..n).any(|k| (corr(k) - beta).abs() > tol) {
        return None;
    }
    GramParams::new(rho, beta, n).ok()
}

/// `‖A‖_1` or `‖A‖_∞`. For a circulant the maximal absolute row sum and
/// column sum both equal `Σ|α_i|`.
pub fn endpoint_norms<T: Scalar>(spec: &CirculantSpec<T>, e: Exponent<T>) -> Result<NormResult<T>> {
    let method = match e.kind() {
        ExponentKind::Infinity => METHOD_ENDPOINT_INF,
        _ if e.is_one() => METHOD_ENDPOINT_ONE,
        _ => {
            return Err(Error::ExponentOutOfRange {
                p: e.to_string(),
                range: "{1, inf}",
            })
        }
    };
    let regime = match spec.as_two_param() {
        Some(t) if t.sign() == DiagonalSign::Minus => t.regime(),
        _ => Regime::NotApplicable,
    };
    Ok(NormResult::exact(spec.abs_row_sum(), method, regime))
}

/// Tries every closed form that applies to `spec` at `e`, most specific
/// first. `NotApplicable` when none does.
pub fn exact_norm<T: Scalar>(spec: &CirculantSpec<T>, e: Exponent<T>) -> Result<NormResult<T>> {
    if spec.is_nonnegative() {
        return pnorm_nonneg_circulant(spec, e);
    }
    if e.is_endpoint() {
        return endpoint_norms(spec, e);
    }
    if e.is_two() {
        if let Some(t) = spec.as_two_param() {
            return two_norm_minus(&t);
        }
        if let [x, y, z] = *spec.first_row() {
            return Ok(two_norm_circ3([x, y, z]));
        }
        if let Some(g) = gram_params_from_circulant(spec) {
            return Ok(two_norm_gram(&g));
        }
        return Err(Error::NotApplicable(
            "no closed-form 2-norm for this circulant".into(),
        ));
    }
    Err(Error::NotApplicable(format!(
        "no closed form for p = {e} with negative entries; use bounds"
    )))
}

/// Closed form for a canonical `A(n, ±a, b)`, if one is known at `e`.
pub fn exact_two_param<T: Scalar>(spec: &TwoParamSpec<T>, e: Exponent<T>) -> Result<NormResult<T>> {
    match spec.sign() {
        DiagonalSign::Plus => pnorm_nonneg_circulant(&spec.expand(), e),
        DiagonalSign::Minus if e.is_two() => two_norm_minus(spec),
        DiagonalSign::Minus if e.is_endpoint() => {
            let method = if e.is_one() {
                METHOD_ENDPOINT_ONE
            } else {
                METHOD_ENDPOINT_INF
            };
            Ok(NormResult::exact(spec.abs_row_sum(), method, spec.regime()))
        }
        DiagonalSign::Minus => Err(Error::NotApplicable(format!(
            "no closed form for A(n, -a, b) at p = {e}; use bounds"
        ))),
    }
}
