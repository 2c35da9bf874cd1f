use num_complex::Complex;

use crate::scalar::{sum_ltr, Scalar};

/// `(1/2π) ∫ |φ(e^{iθ})| dθ` by the midpoint rule on `points` nodes, with
/// `φ(e^{iθ}) = Σ_{k<n} e^{ikθ}` summed term by term (no closed form for
/// the geometric series).
pub fn dirichlet_l1_riemann<T: Scalar>(n: usize, points: usize) -> T {
    let h = T::lit(2.0) * T::pi() / T::from_usize_lossy(points);
    let half = T::lit(0.5);
    let total = sum_ltr((0..points).map(|m| {
        let theta = (T::from_usize_lossy(m) + half) * h;
        let z = Complex::from_polar(T::one(), theta);
        let mut term = Complex::new(T::one(), T::zero());
        let mut acc = Complex::new(T::zero(), T::zero());
        for _ in 0..n {
            acc += term;
            term *= z;
        }
        acc.norm()
    }));
    total / T::from_usize_lossy(points)
}
