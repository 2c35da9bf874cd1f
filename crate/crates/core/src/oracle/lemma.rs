use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::{sum_ltr, Scalar};

/// Largest `n` enumerated (`8! = 40320` permutations).
pub const LEMMA31_MAX_N: usize = 8;

/// Both sides of the permutation inequality
/// `Σ_σ (α_{σ(1)}x_1 + ⋯ + α_{σ(n)}x_n)^p ≤ (n−1)! (Σα)^p (Σ x^p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma31Report<T> {
    pub lhs: T,
    pub rhs: T,
    pub holds: bool,
    pub n: usize,
}

impl<T: Scalar> Lemma31Report<T> {
    /// Both sides divided by `n!`. When `Σα = 1` this is the averaged form
    /// `(1/n!) Σ_σ (⋯)^p ≤ (x_1^p + ⋯ + x_n^p)/n`.
    pub fn averaged(&self) -> (T, T) {
        let fact = T::from_usize_lossy((1..=self.n).product());
        (self.lhs / fact, self.rhs / fact)
    }
}

/// Evaluates both sides by enumerating all `n!` permutations.
pub fn lemma31_check<T: Scalar>(alpha: &[T], x: &[T], p: T) -> Result<Lemma31Report<T>> {
    let n = alpha.len();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if n == 0 {
        return Err(Error::EmptyRow);
    }
    if n > LEMMA31_MAX_N {
        return Err(Error::TooLarge {
            n,
            cap: LEMMA31_MAX_N,
        });
    }
    if !(p > T::one()) || !p.is_finite() {
        return Err(Error::ExponentOutOfRange {
            p: p.to_string(),
            range: "(1, inf)",
        });
    }
    if alpha.iter().chain(x).any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            what: "lemma inputs",
        });
    }
    if alpha.iter().chain(x).any(|&v| v < T::zero()) {
        return Err(Error::Negative {
            what: "lemma inputs",
        });
    }

    let lhs = sum_ltr(
        (0..n)
            .permutations(n)
            .map(|sigma| sum_ltr(sigma.iter().zip(x).map(|(&s, &xi)| alpha[s] * xi)).powf(p)),
    );
    let fact_n_minus_1 = T::from_usize_lossy((1..n).product());
    let rhs = fact_n_minus_1
        * sum_ltr(alpha.iter().copied()).powf(p)
        * sum_ltr(x.iter().map(|v| v.powf(p)));
    let holds = lhs <= rhs * (T::one() + T::lit(1e-12));
    Ok(Lemma31Report { lhs, rhs, holds, n })
}
