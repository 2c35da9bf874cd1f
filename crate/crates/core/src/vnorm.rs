use crate::error::{Error, Result};
use crate::exponent::{Exponent, ExponentKind};
use crate::scalar::{sum_ltr, Scalar};

/// `‖x‖_p`, scaled by `max |x_k|` before exponentiation so large `p` and
/// large entries do not overflow.
pub fn vector_pnorm<T: Scalar>(x: &[T], e: Exponent<T>) -> Result<T> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            what: "vector entries",
        });
    }
    Ok(pnorm_unchecked(x, e))
}

/// [`vector_pnorm`] without the finiteness scan, for inner loops.
pub(crate) fn pnorm_unchecked<T: Scalar>(x: &[T], e: Exponent<T>) -> T {
    let max = x.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    match e.kind() {
        ExponentKind::Infinity => max,
        _ if max == T::zero() => T::zero(),
        ExponentKind::Finite(p) if p == T::one() => sum_ltr(x.iter().map(|v| v.abs())),
        ExponentKind::Finite(p) => {
            let s = sum_ltr(x.iter().map(|v| (v.abs() / max).powf(p)));
            max * s.powf(p.recip())
        }
    }
}

/// `‖A x‖_p / ‖x‖_p`; zero for `x = 0`.
pub fn quotient<T: Scalar>(ax: &[T], x: &[T], e: Exponent<T>) -> T {
    let den = pnorm_unchecked(x, e);
    if den == T::zero() {
        T::zero()
    } else {
        pnorm_unchecked(ax, e) / den
    }
}
