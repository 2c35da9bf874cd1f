use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A Lebesgue exponent `p` in `[1, ∞]`.
///
/// Validated on construction. Infinity is a distinct point (see
/// [`ExponentKind`]), never a large float stand-in. The conjugate exponent is
/// computed once and carried along, so [`Exponent::conjugate`] is an exact
/// involution.
#[derive(Debug, Clone, Copy)]
pub struct Exponent<T> {
    p: T,
    q: T,
}

/// Matchable view of an [`Exponent`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExponentKind<T> {
    Finite(T),
    Infinity,
}

impl<T: Scalar> Exponent<T> {
    pub fn finite(p: T) -> Result<Self> {
        if !p.is_finite() || !(p >= T::one()) {
            return Err(Error::InvalidExponent(format!("{p}")));
        }
        let q = if p == T::one() {
            T::infinity()
        } else {
            p / (p - T::one())
        };
        Ok(Self { p, q })
    }

    /// Maps `+inf` to [`Exponent::infinity`], everything else through
    /// [`Exponent::finite`].
    pub fn new(p: T) -> Result<Self> {
        if p == T::infinity() {
            Ok(Self::infinity())
        } else {
            Self::finite(p)
        }
    }

    pub fn infinity() -> Self {
        Self {
            p: T::infinity(),
            q: T::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            p: T::one(),
            q: T::infinity(),
        }
    }

    pub fn two() -> Self {
        Self {
            p: T::lit(2.0),
            q: T::lit(2.0),
        }
    }

    pub fn kind(&self) -> ExponentKind<T> {
        if self.p.is_infinite() {
            ExponentKind::Infinity
        } else {
            ExponentKind::Finite(self.p)
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.p.is_infinite()
    }

    pub fn is_one(&self) -> bool {
        self.p == T::one()
    }

    pub fn is_two(&self) -> bool {
        self.p == T::lit(2.0)
    }

    /// `p ∈ {1, ∞}`.
    pub fn is_endpoint(&self) -> bool {
        self.is_one() || self.is_infinite()
    }

    /// The value of `p`, with infinity as `T::infinity()`.
    pub fn value(&self) -> T {
        self.p
    }

    /// `1/p`, zero at infinity.
    pub fn reciprocal(&self) -> T {
        self.p.recip()
    }

    /// The conjugate exponent `q` with `1/p + 1/q = 1`.
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }

    /// Converts between scalar types.
    pub fn cast<U: Scalar>(&self) -> Exponent<U> {
        Exponent {
            p: U::lit(self.p.to_f64_lossy()),
            q: U::lit(self.q.to_f64_lossy()),
        }
    }
}

impl<T: PartialEq> PartialEq for Exponent<T> {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl<T: PartialOrd> PartialOrd for Exponent<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        self.p.partial_cmp(&other.p)
    }
}

impl<T: Scalar> fmt::Display for Exponent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ExponentKind::Finite(p) => write!(f, "{p}"),
            ExponentKind::Infinity => f.write_str("inf"),
        }
    }
}

impl<T: Scalar + FromStr> FromStr for Exponent<T> {
    type Err = Error;

    /// Accepts a number, or `inf` / `infinity` / `∞` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" | "∞" => Ok(Self::infinity()),
            _ => {
                let p: T = t
                    .parse()
                    .map_err(|_| Error::InvalidExponent(t.to_string()))?;
                Self::finite(p)
            }
        }
    }
}
