//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! nonzero if any fails.
//!
//! cargo test -p circnorm-cli --test acceptance

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use circnorm::oracle::{
    dirichlet_l1_riemann, lemma31_check, power_estimate, spectral_two_norm, LEMMA31_MAX_N,
};
use circnorm::{
    best_bounds, bounds_riesz_thorin, dirichlet_l1, gram_params_from_circulant,
    pnorm_nonneg_circulant, reflect_dual, two_norm_circ3, two_norm_gram, two_norm_minus,
    CirculantSpec, Exponent, OracleConfig, Regime, TwoParamSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(v: f64) -> Exponent<f64> {
    Exponent::new(v).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn exact(r: circnorm::NormResult<f64>) -> f64 {
    r.exact_value().expect("closed form")
}

/// Tracks the worst residual and the first violation.
struct Tally {
    checks: usize,
    worst: f64,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checks: 0,
            worst: 0.0,
            first_failure: None,
        }
    }

    fn check(&mut self, residual: f64, tol: f64, ctx: impl FnOnce() -> String) {
        self.checks += 1;
        if residual > self.worst || residual.is_nan() {
            self.worst = residual;
        }
        if residual.partial_cmp(&tol).is_none_or(|o| o.is_gt()) && self.first_failure.is_none() {
            self.first_failure = Some(format!("{} (residual {residual:e} > {tol:e})", ctx()));
        }
    }

    fn require(&mut self, ok: bool, ctx: impl FnOnce() -> String) {
        self.check(if ok { 0.0 } else { f64::INFINITY }, 0.0, ctx);
    }

    fn finish(self) -> Outcome {
        let summary = format!("{} checks, worst residual {:e}", self.checks, self.worst);
        match self.first_failure {
            None => Ok(summary),
            Some(f) => Err(format!("{summary}; first failure: {f}")),
        }
    }
}

fn nonnegative_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let cfg = OracleConfig::default();
    let ps = [1.0, 1.5, 2.0, 3.0, 10.0, f64::INFINITY];
    let mut t = Tally::new();

    let a423 = TwoParamSpec::plus(4, 2.0, 3.0).unwrap().expand();
    for &pv in &ps {
        let v = exact(pnorm_nonneg_circulant(&a423, p(pv)).unwrap());
        t.check((v - 11.0).abs(), 0.0, || format!("A(4,2,3) p={pv} -> {v}"));
        let est = power_estimate(&a423, p(pv), &cfg).estimate;
        t.check(rel(est, 11.0), 1e-6, || {
            format!("A(4,2,3) p={pv} oracle {est}")
        });
    }

    for _ in 0..200 {
        let n = rng.random_range(2..=8);
        let row: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..10.0)).collect();
        let sum: f64 = row.iter().sum();
        let spec = CirculantSpec::new(row.clone()).unwrap();
        for &pv in &ps {
            let est = power_estimate(&spec, p(pv), &cfg).estimate;
            t.check(rel(est, sum), 1e-6, || {
                format!("row={row:?} p={pv} oracle={est} sum={sum}")
            });
        }
    }
    t.finish()
}

fn two_norm_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut t = Tally::new();
    let (mut case_one, mut case_two) = (0, 0);

    let v = exact(two_norm_minus(&TwoParamSpec::minus(3, 1.0, 4.0).unwrap()).unwrap());
    t.check((v - 7.0).abs(), 0.0, || format!("A(3,-1,4) -> {v}"));

    for i in 0..500 {
        let n = rng.random_range(1..=64);
        let b = rng.random_range(0.0..5.0);
        let threshold = (n as f64 - 2.0).max(0.0) * b / 2.0;
        // alternate sides of the regime boundary so both cases are covered
        let a = if i % 2 == 0 {
            threshold + rng.random_range(0.0..5.0)
        } else {
            threshold * rng.random_range(0.0..1.0)
        };
        let spec = TwoParamSpec::minus(n, a, b).unwrap();
        match spec.regime() {
            Regime::CaseI => case_one += 1,
            Regime::CaseII => case_two += 1,
            Regime::NotApplicable => {}
        }
        let v = exact(two_norm_minus(&spec).unwrap());
        let s = spectral_two_norm(&spec.expand());
        t.check(rel(v, s), 1e-9, || {
            format!("A({n},-{a},{b}) formula={v} spectral={s}")
        });
    }

    for _ in 0..50 {
        let n = rng.random_range(3..=64);
        let b = rng.random_range(0.01..5.0);
        let a = (n as f64 - 2.0) * b / 2.0;
        let one = a + b;
        let two = (n as f64 - 1.0) * b - a;
        t.check(rel(one, two), 1e-12, || {
            format!("boundary n={n} a={a} b={b}: {one} vs {two}")
        });
        let v = exact(two_norm_minus(&TwoParamSpec::minus(n, a, b).unwrap()).unwrap());
        let s = spectral_two_norm(&TwoParamSpec::minus(n, a, b).unwrap().expand());
        t.check(rel(v, s), 1e-9, || {
            format!("boundary A({n},-{a},{b}) formula={v} spectral={s}")
        });
    }

    t.require(case_one > 100 && case_two > 100, || {
        format!("regime coverage: case I {case_one}, case II {case_two}")
    });
    t.finish()
}

fn circ3_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut t = Tally::new();
    let mut near_zero = 0;

    for i in 0..500 {
        let alpha: [f64; 3] = loop {
            let mut x: [f64; 3] = std::array::from_fn(|_| rng.random_range(-5.0..5.0));
            if i % 5 == 0 {
                // solve for the third entry so that s = x0 x1 + x2 (x0 + x1) is tiny
                let eps = rng.random_range(-1e-9..1e-9);
                x[2] = (eps - x[0] * x[1]) / (x[0] + x[1]);
            }
            let mixed = x.iter().any(|&v| v < 0.0) && x.iter().any(|&v| v > 0.0);
            if mixed && x.iter().all(|v| v.is_finite() && v.abs() < 1e6) {
                break x;
            }
        };
        let s = alpha[0] * alpha[1] + alpha[1] * alpha[2] + alpha[2] * alpha[0];
        if s.abs() < 1e-6 {
            near_zero += 1;
        }
        let v = exact(two_norm_circ3(alpha));
        let spec = CirculantSpec::new(alpha.to_vec()).unwrap();
        let sp = spectral_two_norm(&spec);
        t.check(rel(v, sp), 1e-9, || {
            format!("alpha={alpha:?} formula={v} spectral={sp}")
        });
    }
    t.require(near_zero >= 50, || {
        format!("only {near_zero} instances with s near 0")
    });
    t.finish()
}

fn gram_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut t = Tally::new();
    for _ in 0..200 {
        let n = rng.random_range(2..=64);
        let (a, b) = (rng.random_range(0.0..5.0), rng.random_range(0.0..5.0));
        let spec = TwoParamSpec::minus(n, a, b).unwrap();
        let Some(g) = gram_params_from_circulant(&spec.expand()) else {
            t.require(false, || format!("A({n},-{a},{b}) has no Gram parameters"));
            continue;
        };
        let nf = n as f64;
        let rho = a * a + (nf - 1.0) * b * b;
        let beta = -2.0 * a * b + (nf - 2.0) * b * b;
        t.check(rel(g.rho(), rho), 1e-12, || {
            format!("A({n},-{a},{b}) rho {} vs {rho}", g.rho())
        });
        let scale = rho.max(1.0);
        t.check((g.beta() - beta).abs() / scale, 1e-12, || {
            format!("A({n},-{a},{b}) beta {} vs {beta}", g.beta())
        });
        let via_gram = exact(two_norm_gram(&g));
        let direct = exact(two_norm_minus(&spec).unwrap());
        t.check(rel(via_gram, direct), 1e-12, || {
            format!("A({n},-{a},{b}) gram={via_gram} direct={direct}")
        });
    }
    t.finish()
}

const GRID9: [f64; 9] = [1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0, f64::INFINITY];

fn bound_sandwich() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cfg = OracleConfig::default();
    let mut t = Tally::new();
    for _ in 0..300 {
        let n = rng.random_range(1..=16);
        let (a, b) = (rng.random_range(0.0..5.0), rng.random_range(0.0..5.0));
        let pv = GRID9[rng.random_range(0..GRID9.len())];
        let spec = TwoParamSpec::minus(n, a, b).unwrap();
        let bs = best_bounds(&spec, p(pv));
        let est = power_estimate(&spec, p(pv), &cfg).estimate;
        let ctx = || format!("A({n},-{a},{b}) p={pv} bounds={bs:?} oracle={est}");
        // the oracle is a rounded quotient; it may sit an ulp below an exact lower bound
        t.check((bs.lower - est) / bs.lower.max(1.0), 1e-12, ctx);
        t.check(est - bs.upper_holder.min(bs.upper_rt), 1e-9, ctx);
        t.check(est - bs.upper_harmonic, 1e-9, ctx);
    }
    t.finish()
}

fn dominance_and_endpoints() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut t = Tally::new();
    for _ in 0..1000 {
        let n = rng.random_range(1..=64);
        let (a, b) = (rng.random_range(0.0..5.0), rng.random_range(0.0..5.0));
        let spec = TwoParamSpec::minus(n, a, b).unwrap();
        let pv = if rng.random_bool(0.1) {
            f64::INFINITY
        } else {
            rng.random_range(2.0..50.0)
        };
        let bs = best_bounds(&spec, p(pv));
        t.check(bs.upper_rt - bs.upper_holder, 1e-12, || {
            format!(
                "A({n},-{a},{b}) p={pv} rt={} holder={}",
                bs.upper_rt, bs.upper_holder
            )
        });

        let m2 = exact(two_norm_minus(&spec).unwrap());
        let at2 = best_bounds(&spec, Exponent::two());
        t.check(
            (at2.upper_holder - m2).abs().max((at2.upper_rt - m2).abs()),
            1e-12,
            || format!("A({n},-{a},{b}) p=2 uppers {at2:?} vs {m2}"),
        );

        let minf = (n as f64 - 1.0) * b + a;
        let at_inf = best_bounds(&spec, Exponent::infinity());
        t.check((at_inf.upper_rt - minf).abs(), 1e-12, || {
            format!(
                "A({n},-{a},{b}) p=inf upper_rt {} vs {minf}",
                at_inf.upper_rt
            )
        });
        let at_one = best_bounds(&spec, Exponent::one());
        let (_, reflected) = bounds_riesz_thorin(&spec, reflect_dual(Exponent::one())).unwrap();
        t.check(
            (at_one.upper_rt - minf).abs().max((reflected - minf).abs()),
            1e-12,
            || {
                format!(
                    "A({n},-{a},{b}) p=1 upper_rt {} reflected {reflected} vs {minf}",
                    at_one.upper_rt
                )
            },
        );
    }
    t.finish()
}

fn permutation_inequality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut t = Tally::new();
    for n in 2..=6usize.min(LEMMA31_MAX_N) {
        for pv in [1.5, 2.0, 3.0, 7.0] {
            for _ in 0..1000 {
                let alpha: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
                let x: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
                let r = lemma31_check(&alpha, &x, pv).unwrap();
                let excess = if r.holds { 0.0 } else { r.lhs / r.rhs - 1.0 };
                t.check(excess, 0.0, || {
                    format!("alpha={alpha:?} x={x:?} p={pv} lhs={} rhs={}", r.lhs, r.rhs)
                });
            }
        }
    }
    t.finish()
}

fn duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cfg = OracleConfig::default();
    let mut t = Tally::new();
    for i in 0..100 {
        let n = rng.random_range(1..=16);
        let (a, b) = (rng.random_range(0.0..5.0), rng.random_range(0.0..5.0));
        let spec = TwoParamSpec::minus(n, a, b).unwrap();
        let e = if i % 10 == 0 {
            Exponent::one()
        } else {
            p(rng.random_range(1.05..12.0))
        };
        let (x, y) = (best_bounds(&spec, e), best_bounds(&spec, e.conjugate()));
        let diff = [
            rel(x.lower, y.lower),
            rel(x.upper_holder, y.upper_holder),
            rel(x.upper_rt, y.upper_rt),
            rel(x.upper_harmonic, y.upper_harmonic),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        t.check(diff, 1e-12, || {
            format!("A({n},-{a},{b}) p={e}: {x:?} vs {y:?}")
        });

        let ox = power_estimate(&spec, e, &cfg).estimate;
        let oy = power_estimate(&spec, e.conjugate(), &cfg).estimate;
        t.check(rel(ox, oy), 1e-5, || {
            format!("A({n},-{a},{b}) p={e}: oracle {ox} vs {oy}")
        });
    }
    t.finish()
}

fn quadrature() -> Outcome {
    let mut t = Tally::new();
    let one: f64 = dirichlet_l1(1);
    t.check((one - 1.0).abs(), 0.0, || format!("n=1 -> {one}"));
    let two: f64 = dirichlet_l1(2);
    t.check((two - 4.0 / std::f64::consts::PI).abs(), 1e-9, || {
        format!("n=2 -> {two}")
    });
    for n in [3usize, 5, 16, 64] {
        let q: f64 = dirichlet_l1(n);
        let r: f64 = dirichlet_l1_riemann(n, 1_000_000);
        t.check((q - r).abs(), 1e-8, || {
            format!("n={n} quadrature={q} riemann={r}")
        });
    }
    let mut prev = 0.0;
    for n in 1..=128usize {
        let v: f64 = dirichlet_l1(n);
        t.check((prev - v).max(0.0), 0.0, || format!("n={n}: {v} < {prev}"));
        prev = v;
    }
    t.finish()
}

fn cli_reproducibility() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_circnorm");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut t = Tally::new();
    let mut outputs = Vec::new();
    for name in ["first.csv", "second.csv"] {
        let path = dir.path().join(name);
        let status = Command::new(bin)
            .args([
                "sweep",
                "--n",
                "7",
                "--a",
                "-1.5",
                "--b",
                "0.75",
                "--p",
                "log:1.1:30:12",
            ])
            .args(["--seed", "20240101", "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        t.require(status.success(), || format!("sweep exited with {status}"));
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    t.require(!outputs[0].is_empty() && outputs[0] == outputs[1], || {
        "sweep CSV differs between runs".into()
    });

    let verify = Command::new(bin)
        .args(["verify", "--suite", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    t.require(verify.status.code() == Some(0), || {
        format!(
            "verify exited with {:?}: {}",
            verify.status.code(),
            String::from_utf8_lossy(&verify.stderr)
        )
    });
    t.finish()
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("nonnegative circulant exactness", nonnegative_exactness),
        ("2-norm of A(n,-a,b)", two_norm_formula),
        ("3x3 circulant 2-norm", circ3_formula),
        ("Gram-parameter 2-norm", gram_formula),
        ("bound sandwich", bound_sandwich),
        ("dominance and endpoint optimality", dominance_and_endpoints),
        ("permutation-averaging inequality", permutation_inequality),
        ("duality", duality),
        ("Dirichlet kernel quadrature", quadrature),
        ("CLI reproducibility", cli_reproducibility),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
