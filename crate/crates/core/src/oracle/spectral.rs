use num_complex::Complex;

use crate::circulant::CirculantSpec;
use crate::scalar::{sum_ltr, Scalar};

/// `λ_k = Σ_j α_{j+1} ω^{jk}` with `ω = e^{2πi/n}`, by direct `O(n²)`
/// summation. The angle index `jk` is reduced mod `n` before the
/// trigonometric call.
pub fn circulant_eigenvalues<T: Scalar>(spec: &CirculantSpec<T>) -> Vec<Complex<T>> {
    let row = spec.first_row();
    let n = row.len();
    let step = T::lit(2.0) * T::pi() / T::from_usize_lossy(n);
    let roots: Vec<Complex<T>> = (0..n)
        .map(|m| Complex::from_polar(T::one(), step * T::from_usize_lossy(m)))
        .collect();
    (0..n)
        .map(|k| {
            let re = sum_ltr((0..n).map(|j| row[j] * roots[(j * k) % n].re));
            let im = sum_ltr((0..n).map(|j| row[j] * roots[(j * k) % n].im));
            Complex::new(re, im)
        })
        .collect()
}

/// `max_k |λ_k|`. Circulants are normal, so this is the induced 2-norm.
pub fn spectral_two_norm<T: Scalar>(spec: &CirculantSpec<T>) -> T {
    circulant_eigenvalues(spec)
        .into_iter()
        .map(|l| l.norm())
        .fold(T::zero(), T::max)
}
