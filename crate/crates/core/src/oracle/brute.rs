use crate::circulant::LinearOperator;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::scalar::Scalar;
use crate::vnorm::quotient;

pub const BRUTE_FORCE_MAX_N: usize = 4;

const REFINE_PASSES: usize = 3;
const GOLDEN_STEPS: usize = 60;

/// Points per angular coordinate when the caller does not choose.
pub fn default_grid_depth(n: usize) -> usize {
    if n >= 4 {
        180
    } else {
        720
    }
}

/// Maximises `‖Ax‖_p / ‖x‖_p` over a grid of directions, then polishes the
/// best grid point with golden-section searches along each angle.
///
/// Directions use hyperspherical angles `θ_1, …, θ_{n−1}`; the last angle
/// only covers `[0, π)` because `x` and `−x` give the same quotient. The
/// quotient is scale invariant, so Euclidean directions cover the `ℓ^p`
/// sphere. The result is a lower bound on `‖A‖_p`.
pub fn brute_force_estimate<T: Scalar, A: LinearOperator<T> + ?Sized>(
    op: &A,
    e: Exponent<T>,
    grid_depth: Option<usize>,
) -> Result<T> {
    let n = op.dim();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge {
            n,
            cap: BRUTE_FORCE_MAX_N,
        });
    }
    let depth = grid_depth.unwrap_or_else(|| default_grid_depth(n)).max(2);
    let eval = |angles: &[T]| -> T {
        let x = direction(angles, n);
        let ax = op.apply(&x).expect("length n");
        quotient(&ax, &x, e)
    };
    if n == 1 {
        return Ok(eval(&[]));
    }

    let dims = n - 1;
    let pi = T::pi();
    let steps: Vec<T> = (0..dims)
        .map(|d| {
            if d + 1 == dims {
                pi / T::from_usize_lossy(depth)
            } else {
                pi / T::from_usize_lossy(depth - 1)
            }
        })
        .collect();

    let mut idx = vec![0usize; dims];
    let mut angles = vec![T::zero(); dims];
    let mut best = (T::neg_infinity(), angles.clone());
    loop {
        for d in 0..dims {
            angles[d] = steps[d] * T::from_usize_lossy(idx[d]);
        }
        let v = eval(&angles);
        if v > best.0 {
            best = (v, angles.clone());
        }
        // odometer over the grid
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] < depth {
                break;
            }
            idx[d] = 0;
            d += 1;
            if d == dims {
                return Ok(refine(&eval, best, &steps));
            }
        }
    }
}

fn refine<T: Scalar, F: Fn(&[T]) -> T>(eval: &F, best: (T, Vec<T>), steps: &[T]) -> T {
    let (mut value, mut angles) = best;
    let inv_phi = T::lit((5f64.sqrt() - 1.0) / 2.0);
    for _ in 0..REFINE_PASSES {
        for d in 0..angles.len() {
            let mut lo = angles[d] - steps[d];
            let mut hi = angles[d] + steps[d];
            let mut probe = angles.clone();
            let at = |t: T, probe: &mut Vec<T>| {
                probe[d] = t;
                eval(probe)
            };
            let mut c = hi - inv_phi * (hi - lo);
            let mut dd = lo + inv_phi * (hi - lo);
            let mut fc = at(c, &mut probe);
            let mut fd = at(dd, &mut probe);
            for _ in 0..GOLDEN_STEPS {
                if fc > fd {
                    hi = dd;
                    dd = c;
                    fd = fc;
                    c = hi - inv_phi * (hi - lo);
                    fc = at(c, &mut probe);
                } else {
                    lo = c;
                    c = dd;
                    fc = fd;
                    dd = lo + inv_phi * (hi - lo);
                    fd = at(dd, &mut probe);
                }
            }
            let (t, f) = if fc > fd { (c, fc) } else { (dd, fd) };
            if f > value {
                value = f;
                angles[d] = t;
            }
        }
    }
    value
}

/// Unit vector with hyperspherical angles `θ_1, …, θ_{n−1}`.
fn direction<T: Scalar>(angles: &[T], n: usize) -> Vec<T> {
    let mut x = vec![T::zero(); n];
    let mut sin_prod = T::one();
    for (k, &t) in angles.iter().enumerate() {
        x[k] = sin_prod * t.cos();
        sin_prod *= t.sin();
    }
    x[n - 1] = sin_prod;
    x
}
