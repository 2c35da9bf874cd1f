use std::fmt;

use crate::scalar::Scalar;

/// Which side of `(n−2)b` versus `2a` an `A(n, −a, b)` sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `(n−2)b ≤ 2a`
    CaseI,
    /// `(n−2)b > 2a` (the boundary is reported as case I)
    CaseII,
    NotApplicable,
}

impl Regime {
    /// Exact float comparison, no epsilon: both closed forms agree on the
    /// boundary.
    pub fn classify<T: Scalar>(n: usize, a: T, b: T) -> Self {
        let lhs = (T::from_usize_lossy(n) - T::lit(2.0)) * b;
        if lhs <= T::lit(2.0) * a {
            Regime::CaseI
        } else {
            Regime::CaseII
        }
    }

    /// Whether the point sits exactly on `(n−2)b = 2a`.
    pub fn on_boundary<T: Scalar>(n: usize, a: T, b: T) -> bool {
        (T::from_usize_lossy(n) - T::lit(2.0)) * b == T::lit(2.0) * a
    }

    pub fn label(&self) -> &'static str {
        match self {
            Regime::CaseI => "case_I",
            Regime::CaseII => "case_II",
            Regime::NotApplicable => "not_applicable",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormValue<T> {
    Exact(T),
    Bounded { lower: T, upper: T },
}

/// An induced norm, either known in closed form or bracketed.
#[derive(Debug, Clone, PartialEq)]
pub struct NormResult<T> {
    pub value: NormValue<T>,
    pub method: String,
    pub regime: Regime,
}

impl<T: Scalar> NormResult<T> {
    pub fn exact(value: T, method: impl Into<String>, regime: Regime) -> Self {
        debug_assert!(!(value < T::zero()), "norms are nonnegative");
        Self {
            value: NormValue::Exact(value),
            method: method.into(),
            regime,
        }
    }

    pub fn bounded(lower: T, upper: T, method: impl Into<String>, regime: Regime) -> Self {
        debug_assert!(!(lower > upper), "lower bound above upper bound");
        Self {
            value: NormValue::Bounded { lower, upper },
            method: method.into(),
            regime,
        }
    }

    pub fn exact_value(&self) -> Option<T> {
        match self.value {
            NormValue::Exact(v) => Some(v),
            NormValue::Bounded { .. } => None,
        }
    }

    pub fn lower(&self) -> T {
        match self.value {
            NormValue::Exact(v) => v,
            NormValue::Bounded { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> T {
        match self.value {
            NormValue::Exact(v) => v,
            NormValue::Bounded { upper, .. } => upper,
        }
    }
}

impl<T: Scalar> fmt::Display for NormResult<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            NormValue::Exact(v) => write!(f, "{v} ({})", self.method),
            NormValue::Bounded { lower, upper } => {
                write!(f, "[{lower}, {upper}] ({})", self.method)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regime_boundary_is_case_one() {
        assert_eq!(Regime::classify(4, 1.0, 1.0), Regime::CaseI);
        assert!(Regime::on_boundary(4, 1.0, 1.0));
        assert_eq!(Regime::classify(3, 1.0, 4.0), Regime::CaseII);
        assert_eq!(Regime::classify(2, 0.0, 7.0), Regime::CaseI);
        assert_eq!(Regime::classify(1, 0.0, 7.0), Regime::CaseI);
    }

    #[test]
    fn display() {
        let r = NormResult::exact(11.0, "nonneg-row-sum", Regime::NotApplicable);
        assert_eq!(r.to_string(), "11 (nonneg-row-sum)");
        let r = NormResult::bounded(2.0, 3.0, "holder", Regime::CaseI);
        assert_eq!((r.lower(), r.upper(), r.exact_value()), (2.0, 3.0, None));
    }
}
