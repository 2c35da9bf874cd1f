//! Adaptive Simpson quadrature and the `L¹` norm of the Dirichlet-type
//! kernel `φ(z) = 1 + z + ⋯ + z^{n−1}` on the unit circle.

use crate::scalar::{sum_ltr, Scalar};

/// Absolute tolerance used by [`dirichlet_l1`].
pub const DIRICHLET_TOL: f64 = 1e-10;

const MAX_DEPTH: u32 = 48;

/// `∫_lo^hi f` by adaptive Simpson with absolute tolerance `tol`.
pub fn adaptive_simpson<T: Scalar, F: Fn(T) -> T>(f: &F, lo: T, hi: T, tol: T) -> T {
    let two = T::lit(2.0);
    let mid = (lo + hi) / two;
    let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
    let whole = simpson(lo, hi, flo, fmid, fhi);
    // below the representable resolution there is nothing left to gain
    let tol = tol.max(T::epsilon() * whole.abs() * T::lit(16.0));
    recurse(f, lo, hi, flo, fmid, fhi, whole, tol, MAX_DEPTH)
}

fn simpson<T: Scalar>(lo: T, hi: T, flo: T, fmid: T, fhi: T) -> T {
    (hi - lo) / T::lit(6.0) * (flo + T::lit(4.0) * fmid + fhi)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T: Scalar, F: Fn(T) -> T>(
    f: &F,
    lo: T,
    hi: T,
    flo: T,
    fmid: T,
    fhi: T,
    whole: T,
    tol: T,
    depth: u32,
) -> T {
    let two = T::lit(2.0);
    let mid = (lo + hi) / two;
    let lmid = (lo + mid) / two;
    let rmid = (mid + hi) / two;
    let (flm, frm) = (f(lmid), f(rmid));
    let left = simpson(lo, mid, flo, flm, fmid);
    let right = simpson(mid, hi, fmid, frm, fhi);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= T::lit(15.0) * tol {
        return left + right + delta / T::lit(15.0);
    }
    recurse(f, lo, mid, flo, flm, fmid, left, tol / two, depth - 1)
        + recurse(f, mid, hi, fmid, frm, fhi, right, tol / two, depth - 1)
}

/// `|φ(e^{iθ})| = |sin(nθ/2) / sin(θ/2)|`, equal to `n` at `θ ∈ 2πℤ`.
pub fn dirichlet_abs<T: Scalar>(n: usize, theta: T) -> T {
    let half = theta / T::lit(2.0);
    let den = half.sin();
    let nf = T::from_usize_lossy(n);
    if den.abs() < T::lit(1e-8) {
        return nf;
    }
    ((nf * half).sin() / den).abs()
}

/// `‖φ‖_{L¹(𝕋)} = (1/2π) ∫_0^{2π} |φ(e^{iθ})| dθ`.
///
/// Uses `|φ(θ)| = |φ(2π − θ)|` to integrate over `[0, π]` only, split at the
/// kernel zeros `2πk/n` so every panel is smooth.
pub fn dirichlet_l1<T: Scalar>(n: usize) -> T {
    assert!(n >= 1, "dirichlet_l1 needs n >= 1");
    if n == 1 {
        return T::one();
    }
    let pi = T::pi();
    let nf = T::from_usize_lossy(n);
    let mut breaks: Vec<T> = (0..=n / 2)
        .map(|k| T::lit(2.0) * pi * T::from_usize_lossy(k) / nf)
        .filter(|&t| t < pi)
        .collect();
    breaks.push(pi);
    // (1/π) ∫_0^π, so the absolute tolerance on the integral is scaled by π
    let panel_tol = T::lit(DIRICHLET_TOL) * pi / T::from_usize_lossy(breaks.len());
    let f = |t: T| dirichlet_abs(n, t);
    let integral = sum_ltr(
        breaks
            .windows(2)
            .map(|w| adaptive_simpson(&f, w[0], w[1], panel_tol)),
    );
    integral / pi
}
