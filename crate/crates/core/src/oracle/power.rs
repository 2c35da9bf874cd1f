use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::circulant::LinearOperator;
use crate::exponent::{Exponent, ExponentKind};
use crate::scalar::Scalar;
use crate::vnorm::{pnorm_unchecked, quotient};

/// Seed used when none is given. All oracle randomness derives from it.
pub const DEFAULT_SEED: u64 = 0xC14C;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Random starts on top of the structured ones.
    pub restarts: usize,
    pub max_iter: usize,
    /// Stop once the quotient moves by less than `tol` relative.
    pub tol: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_iter: 10_000,
            tol: 1e-12,
            seed: DEFAULT_SEED,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport<T> {
    /// `‖A w‖_p / ‖w‖_p` for the witness `w`; a lower bound on `‖A‖_p`.
    pub estimate: T,
    /// Unit vector in `ℓ^p` attaining `estimate`.
    pub witness: Vec<T>,
    /// Number of starting vectors tried.
    pub restarts_used: usize,
    /// Iterations summed over all starts.
    pub iterations: usize,
    /// Whether the start that produced `estimate` met the tolerance.
    pub converged: bool,
    pub seed: u64,
    /// Best estimate after each start, in pool order.
    pub trace: Vec<T>,
}

struct Run<T> {
    estimate: T,
    witness: Vec<T>,
    iterations: usize,
    converged: bool,
}

/// Lower estimate of `‖A‖_p` by nonlinear power iteration with restarts.
///
/// Each start iterates `x ← ψ_q(Aᵀ ψ_p(A x))`, renormalised in `ℓ^p`, where
/// `ψ_r(v)_i = sign(v_i)|v_i|^{r−1}` and `q` is the conjugate exponent. The
/// pool always contains the all-ones vector, `e_1` and the zero-sum vector
/// `(1, −1, 0, …, 0)`, followed by `cfg.restarts` Gaussian directions drawn
/// from `cfg.seed`. Starts run in parallel; the merge is a max in pool order,
/// so the result is independent of scheduling.
///
/// At `p ∈ {1, ∞}` the unit ball is a polytope and the norm is attained at a
/// vertex, so the candidates are evaluated directly instead: the basis
/// vectors for `p = 1`, and for `p = ∞` the sign pattern of every row.
pub fn power_estimate<T: Scalar, A: LinearOperator<T> + ?Sized>(
    op: &A,
    e: Exponent<T>,
    cfg: &OracleConfig,
) -> OracleReport<T> {
    let n = op.dim();
    let starts = match e.kind() {
        ExponentKind::Finite(p) if p == T::one() => basis_vectors(n),
        ExponentKind::Infinity => row_sign_vectors(op),
        ExponentKind::Finite(_) => start_pool(n, cfg),
    };
    let runs: Vec<Run<T>> = match e.kind() {
        ExponentKind::Finite(p) if p > T::one() => starts
            .into_par_iter()
            .map(|x0| iterate(op, x0, p, cfg))
            .collect(),
        _ => starts
            .into_iter()
            .map(|x0| {
                let witness = normalized(x0, e);
                Run {
                    estimate: evaluate(op, &witness, e),
                    witness,
                    iterations: 0,
                    converged: true,
                }
            })
            .collect(),
    };
    merge(runs, cfg.seed)
}

fn merge<T: Scalar>(runs: Vec<Run<T>>, seed: u64) -> OracleReport<T> {
    let restarts_used = runs.len();
    let iterations = runs.iter().map(|r| r.iterations).sum();
    let mut trace = Vec::with_capacity(runs.len());
    let mut best: Option<Run<T>> = None;
    for run in runs {
        if best.as_ref().is_none_or(|b| run.estimate > b.estimate) {
            best = Some(run);
        }
        trace.push(best.as_ref().map_or(T::zero(), |b| b.estimate));
    }
    let best = best.expect("start pool is never empty");
    OracleReport {
        estimate: best.estimate,
        witness: best.witness,
        restarts_used,
        iterations,
        converged: best.converged,
        seed,
        trace,
    }
}

fn basis_vectors<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|j| {
            let mut v = vec![T::zero(); n];
            v[j] = T::one();
            v
        })
        .collect()
}

fn row_sign_vectors<T: Scalar, A: LinearOperator<T> + ?Sized>(op: &A) -> Vec<Vec<T>> {
    let n = op.dim();
    basis_vectors::<T>(n)
        .into_iter()
        .map(|ei| {
            // row i of A is Aᵀ e_i
            let row = op.apply_transpose(&ei).expect("length n");
            row.into_iter()
                .map(|a| if a < T::zero() { -T::one() } else { T::one() })
                .collect()
        })
        .collect()
}

fn start_pool<T: Scalar>(n: usize, cfg: &OracleConfig) -> Vec<Vec<T>> {
    let mut pool = Vec::with_capacity(cfg.restarts + 3);
    pool.push(vec![T::one(); n]);
    let mut e1 = vec![T::zero(); n];
    e1[0] = T::one();
    pool.push(e1);
    if n >= 2 {
        let mut zs = vec![T::zero(); n];
        zs[0] = T::one();
        zs[1] = -T::one();
        pool.push(zs);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.restarts {
        let v: Vec<T> = (0..n)
            .map(|_| {
                let g: f64 = StandardNormal.sample(&mut rng);
                T::lit(g)
            })
            .collect();
        pool.push(v);
    }
    pool
}

fn normalized<T: Scalar>(mut x: Vec<T>, e: Exponent<T>) -> Vec<T> {
    let norm = pnorm_unchecked(&x, e);
    if norm > T::zero() {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    x
}

fn evaluate<T: Scalar, A: LinearOperator<T> + ?Sized>(op: &A, x: &[T], e: Exponent<T>) -> T {
    let ax = op.apply(x).expect("length n");
    quotient(&ax, x, e)
}

/// `sign(v_i) |v_i / max|v||^{r−1}`; direction only.
fn signed_power<T: Scalar>(v: &[T], r_minus_one: T, out: &mut [T]) {
    let max = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    if max == T::zero() {
        out.iter_mut().for_each(|o| *o = T::zero());
        return;
    }
    for (o, &x) in out.iter_mut().zip(v) {
        let mag = (x.abs() / max).powf(r_minus_one);
        *o = if x < T::zero() { -mag } else { mag };
    }
}

fn iterate<T: Scalar, A: LinearOperator<T> + ?Sized>(
    op: &A,
    x0: Vec<T>,
    p: T,
    cfg: &OracleConfig,
) -> Run<T> {
    let n = op.dim();
    let e = Exponent::finite(p).expect("p > 1");
    let q_minus_one = (p - T::one()).recip();
    let p_minus_one = p - T::one();
    let tol = T::lit(cfg.tol);

    let mut x = normalized(x0, e);
    let mut y = vec![T::zero(); n];
    let mut s = vec![T::zero(); n];
    let mut z = vec![T::zero(); n];
    op.apply_into(&x, &mut y);
    let mut gamma = quotient(&y, &x, e);
    let mut best = (gamma, x.clone());
    let mut iterations = 0;
    let mut converged = false;

    while iterations < cfg.max_iter {
        iterations += 1;
        signed_power(&y, p_minus_one, &mut s);
        op.apply_transpose_into(&s, &mut z);
        signed_power(&z, q_minus_one, &mut x);
        if x.iter().all(|v| *v == T::zero()) {
            converged = true;
            break;
        }
        x = normalized(x, e);
        op.apply_into(&x, &mut y);
        let next = quotient(&y, &x, e);
        if next > best.0 {
            best = (next, x.clone());
        }
        let moved = (next - gamma).abs();
        gamma = next;
        if moved <= tol * gamma.max(T::min_positive_value()) {
            converged = true;
            break;
        }
    }
    if gamma == T::zero() && iterations == 0 {
        converged = true;
    }

    let witness = best.1;
    Run {
        estimate: evaluate(op, &witness, e),
        witness,
        iterations,
        converged,
    }
}
