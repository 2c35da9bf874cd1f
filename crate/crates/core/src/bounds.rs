//! Lower and upper bounds on `‖A(n, −a, b)‖_p` where no closed form is known.
//!
//! Lower bounds come from two witness families: zero-sum vectors, on which
//! `A` acts as `−(a + b)I`, and the all-ones vector, which `A` scales by
//! `(n−1)b − a`. The larger of the two is the exact 2-norm `M₂`.
//!
//! Three upper bounds are reported for `p ≥ 2` (and for `p < 2` through the
//! conjugate exponent, since the matrix is symmetric):
//!
//! * Hölder: `n^{1/2 − 1/p} · M₂`
//! * interpolation between `p = 2` and `p = ∞`: `M₂^{2/p} · M∞^{1 − 2/p}`
//!   with `M∞ = (n−1)b + a`
//! * harmonic: `a + b + b·n·‖φ‖_{L¹}`, valid for every `p`.

use crate::circulant::{DiagonalSign, TwoParamSpec};
use crate::error::{Error, Result};
use crate::exact::two_norm_minus;
use crate::exponent::{Exponent, ExponentKind};
use crate::quadrature::dirichlet_l1;
use crate::result::Regime;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSet<T> {
    /// The exponent the caller asked for (before any reflection).
    pub p: Exponent<T>,
    pub lower: T,
    pub upper_holder: T,
    pub upper_rt: T,
    pub upper_harmonic: T,
    pub regime: Regime,
}

impl<T: Scalar> BoundSet<T> {
    /// `min(upper_holder, upper_rt)`: the certified upper bound. The harmonic
    /// bound is reported separately.
    pub fn upper(&self) -> T {
        self.upper_holder.min(self.upper_rt)
    }

    /// Minimum over all three uppers.
    pub fn min_upper(&self) -> T {
        self.upper().min(self.upper_harmonic)
    }

    /// The bracket has collapsed onto a single value.
    pub fn is_tight(&self) -> bool {
        self.lower == self.upper()
    }
}

fn require_minus<T: Scalar>(spec: &TwoParamSpec<T>) -> Result<()> {
    match spec.sign() {
        DiagonalSign::Minus => Ok(()),
        DiagonalSign::Plus => Err(Error::NotApplicable(
            "bounds are for A(n, -a, b); A(n, a, b) has an exact norm".into(),
        )),
    }
}

/// `M₂`, the exact 2-norm, which is also the best witness lower bound.
fn two_norm<T: Scalar>(spec: &TwoParamSpec<T>) -> T {
    two_norm_minus(spec)
        .expect("sign checked by caller")
        .lower()
}

/// Hölder bracket for `2 ≤ p < ∞`.
pub fn bounds_holder<T: Scalar>(spec: &TwoParamSpec<T>, e: Exponent<T>) -> Result<(T, T)> {
    require_minus(spec)?;
    let p = match e.kind() {
        ExponentKind::Finite(p) if p >= T::lit(2.0) => p,
        _ => {
            return Err(Error::ExponentOutOfRange {
                p: e.to_string(),
                range: "[2, inf)",
            })
        }
    };
    let m2 = two_norm(spec);
    let exponent = T::lit(0.5) - p.recip();
    Ok((m2, T::from_usize_lossy(spec.n()).powf(exponent) * m2))
}

/// Interpolation bracket for `2 ≤ p ≤ ∞`.
pub fn bounds_riesz_thorin<T: Scalar>(spec: &TwoParamSpec<T>, e: Exponent<T>) -> Result<(T, T)> {
    require_minus(spec)?;
    if !(e >= Exponent::two()) {
        return Err(Error::ExponentOutOfRange {
            p: e.to_string(),
            range: "[2, inf]",
        });
    }
    let m2 = two_norm(spec);
    let minf = spec.abs_row_sum();
    let upper = match e.kind() {
        ExponentKind::Infinity => minf,
        ExponentKind::Finite(p) => {
            let w = T::lit(2.0) / p;
            m2.powf(w) * minf.powf(T::one() - w)
        }
    };
    Ok((m2, upper))
}

/// Maps `p < 2` to its conjugate so the `p ≥ 2` bounds apply; `p ≥ 2` is
/// returned as the conjugate too (the map is an involution on `[1, ∞]`).
pub fn reflect_dual<T: Scalar>(e: Exponent<T>) -> Exponent<T> {
    e.conjugate()
}

/// `|sign·a − b| + b·n·‖φ‖_{L¹}`, from `A = (sign·a − b)I + bK`. For
/// `A(n, −a, b)` this is `a + b + b·n·‖φ‖_{L¹}`. Holds for every `p`.
pub fn harmonic_upper<T: Scalar>(spec: &TwoParamSpec<T>) -> T {
    let b = spec.b();
    let shift = (spec.diagonal() - b).abs();
    if b == T::zero() {
        return shift;
    }
    shift + b * T::from_usize_lossy(spec.n()) * dirichlet_l1::<T>(spec.n())
}

/// Every bound at once for any `p ∈ [1, ∞]`.
///
/// `p < 2` is served at the conjugate exponent. At `p ∈ {1, 2, ∞}` the lower
/// bound is the exact norm. For `A(n, a, b)` with a nonnegative diagonal the
/// norm is `(n−1)b + a` at every `p` and all but the harmonic bound collapse
/// to it.
pub fn best_bounds<T: Scalar>(spec: &TwoParamSpec<T>, e: Exponent<T>) -> BoundSet<T> {
    let harmonic = harmonic_upper(spec);
    if spec.sign() == DiagonalSign::Plus {
        let exact = spec.abs_row_sum();
        return BoundSet {
            p: e,
            lower: exact,
            upper_holder: exact,
            upper_rt: exact,
            upper_harmonic: harmonic,
            regime: Regime::NotApplicable,
        };
    }
    let served = if e < Exponent::two() {
        reflect_dual(e)
    } else {
        e
    };
    let (lower, upper_rt) = bounds_riesz_thorin(spec, served).expect("served p >= 2");
    let upper_holder = match served.kind() {
        ExponentKind::Infinity => T::from_usize_lossy(spec.n()).sqrt() * lower,
        _ => bounds_holder(spec, served).expect("served p in [2, inf)").1,
    };
    let lower = if served.is_infinite() {
        upper_rt
    } else {
        lower
    };
    BoundSet {
        p: e,
        lower,
        upper_holder,
        upper_rt,
        upper_harmonic: harmonic,
        regime: spec.regime(),
    }
}
