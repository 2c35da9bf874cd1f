//! Property suites behind `circnorm verify`: fixed fixtures plus seeded
//! random draws, each check reduced to a residual compared against a
//! tolerance.

use std::fmt;

use circnorm::oracle::{dirichlet_l1_riemann, lemma31_check, power_estimate, spectral_two_norm};
use circnorm::{
    best_bounds, dirichlet_l1, endpoint_norms, gram_params_from_circulant, pnorm_nonneg_circulant,
    two_norm_circ3, two_norm_gram, two_norm_minus, CirculantSpec, Exponent, GramParams,
    OracleConfig, TwoParamSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Exact,
    Bounds,
    Lemma,
    All,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub draws: usize,
    pub seed: u64,
    pub oracle: OracleConfig,
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub check: &'static str,
    pub context: String,
    pub residual: f64,
    pub tol: f64,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (residual {:e} > tol {:e})",
            self.check, self.context, self.residual, self.tol
        )
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub worst: f64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            worst: 0.0,
            failures: Vec::new(),
        }
    }

    /// Passes iff `residual <= tol`. `context` is only built on failure.
    pub fn check(
        &mut self,
        check: &'static str,
        residual: f64,
        tol: f64,
        context: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if residual > self.worst || residual.is_nan() {
            self.worst = residual;
        }
        if !(residual <= tol) {
            self.failures.push(Failure {
                check,
                context: context(),
                residual,
                tol,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {}: {} checks, {} failed, worst residual {:e}",
            self.name,
            self.checks,
            self.failures.len(),
            self.worst
        )
    }
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn exact_value(r: circnorm::NormResult<f64>) -> f64 {
    r.exact_value().expect("closed forms are exact")
}

const ORACLE_PS: [f64; 6] = [1.0, 1.5, 2.0, 3.0, 10.0, f64::INFINITY];
const SANDWICH_PS: [f64; 9] = [1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0, f64::INFINITY];
const LEMMA_PS: [f64; 4] = [1.5, 2.0, 3.0, 7.0];

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Vec<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    if matches!(suite, Suite::Exact | Suite::All) {
        out.push(exact_suite(cfg, &mut rng));
    }
    if matches!(suite, Suite::Bounds | Suite::All) {
        out.push(bounds_suite(cfg, &mut rng));
    }
    if matches!(suite, Suite::Lemma | Suite::All) {
        out.push(lemma_suite(cfg, &mut rng));
    }
    out
}

fn exact_suite(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("exact");
    let p = |v: f64| Exponent::new(v).expect("valid exponent");

    // fixtures
    let a423 = TwoParamSpec::plus(4, 2.0, 3.0).expect("valid").expand();
    for &pv in &ORACLE_PS {
        let v = exact_value(pnorm_nonneg_circulant(&a423, p(pv)).expect("nonnegative"));
        r.check("nonneg fixture", (v - 11.0).abs(), 0.0, || {
            format!("A(4,2,3) p={pv} gave {v}")
        });
        let est = power_estimate(&a423, p(pv), &cfg.oracle).estimate;
        r.check("nonneg oracle fixture", rel(est, 11.0), 1e-6, || {
            format!("A(4,2,3) p={pv} oracle {est}")
        });
    }
    let m314 = TwoParamSpec::minus(3, 1.0, 4.0).expect("valid");
    let v = exact_value(two_norm_minus(&m314).expect("minus"));
    r.check("2-norm fixture", (v - 7.0).abs(), 0.0, || {
        format!("A(3,-1,4) gave {v}")
    });
    let v = exact_value(two_norm_circ3([-1.0, 4.0, 4.0]));
    r.check("circ3 fixture", (v - 7.0).abs(), 0.0, || {
        format!("Circ(-1,4,4) gave {v}")
    });
    let v = exact_value(two_norm_circ3([2.0, -3.0, 1.0]));
    r.check("circ3 fixture", rel(v, 21f64.sqrt()), 1e-15, || {
        format!("Circ(2,-3,1) gave {v}")
    });
    let v = exact_value(two_norm_gram(&GramParams::new(33.0, 8.0, 3).expect("psd")));
    r.check("gram fixture", (v - 7.0).abs(), 0.0, || {
        format!("rho=33 beta=8 gave {v}")
    });
    let m412 = TwoParamSpec::minus(4, 1.0, 2.0).expect("valid").expand();
    let v = exact_value(endpoint_norms(&m412, Exponent::infinity()).expect("endpoint"));
    r.check("endpoint fixture", (v - 7.0).abs(), 0.0, || {
        format!("A(4,-1,2) p=inf gave {v}")
    });

    let n_hi = cfg.n_max.max(2);
    for _ in 0..cfg.draws {
        let n = rng.random_range(2..=n_hi);
        let row: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
        let spec = CirculantSpec::new(row.clone()).expect("finite");
        for &pv in &ORACLE_PS {
            let exact = exact_value(pnorm_nonneg_circulant(&spec, p(pv)).expect("nonnegative"));
            let est = power_estimate(&spec, p(pv), &cfg.oracle).estimate;
            r.check("nonneg vs oracle", rel(exact, est), 1e-6, || {
                format!("row={row:?} p={pv} exact={exact} oracle={est}")
            });
        }

        let (a, b) = (rng.random_range(0.0..5.0), rng.random_range(0.0..5.0));
        let m = TwoParamSpec::minus(n, a, b).expect("valid");
        let exact = exact_value(two_norm_minus(&m).expect("minus"));
        let spectral = spectral_two_norm(&m.expand());
        r.check("2-norm vs spectral", rel(exact, spectral), 1e-9, || {
            format!("A({n},-{a},{b}) exact={exact} spectral={spectral}")
        });
        let via_gram =
            gram_params_from_circulant(&m.expand()).map(|g| exact_value(two_norm_gram(&g)));
        let resid = via_gram.map_or(f64::INFINITY, |g| rel(g, exact));
        r.check("gram vs 2-norm", resid, 1e-12, || {
            format!("A({n},-{a},{b}) gram={via_gram:?} exact={exact}")
        });

        // exactly on the regime boundary (n-2)b = 2a
        let nb = rng.random_range(3..=n_hi.max(3));
        let bb = rng.random_range(0.0..5.0);
        let ab = (nb as f64 - 2.0) * bb / 2.0;
        let case_one = ab + bb;
        let case_two = (nb as f64 - 1.0) * bb - ab;
        r.check(
            "boundary continuity",
            rel(case_one, case_two),
            1e-12,
            || format!("n={nb} a={ab} b={bb}: {case_one} vs {case_two}"),
        );

        let alpha: [f64; 3] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
        let c3 = exact_value(two_norm_circ3(alpha));
        let spectral = spectral_two_norm(&CirculantSpec::new(alpha.to_vec()).expect("finite"));
        r.check("circ3 vs spectral", rel(c3, spectral), 1e-9, || {
            format!("alpha={alpha:?} circ3={c3} spectral={spectral}")
        });
    }
    r
}

fn bounds_suite(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("bounds");
    let p = |v: f64| Exponent::new(v).expect("valid exponent");

    // fixtures
    let b = best_bounds(&TwoParamSpec::minus(4, 0.0, 1.0).expect("valid"), p(2.0));
    r.check(
        "best_bounds fixture",
        (b.lower - 3.0).abs().max((b.upper() - 3.0).abs()),
        0.0,
        || format!("A(4,0,1) p=2 gave {b:?}"),
    );
    let b = best_bounds(
        &TwoParamSpec::minus(4, 3.0, 1.0).expect("valid"),
        Exponent::one(),
    );
    r.check(
        "best_bounds fixture",
        (b.lower - 6.0f64).abs().max((b.upper() - 6.0f64).abs()),
        0.0,
        || format!("A(4,-3,1) p=1 gave {b:?}"),
    );
    let l1: f64 = dirichlet_l1(1);
    r.check("dirichlet n=1", (l1 - 1.0).abs(), 0.0, || {
        format!("got {l1}")
    });
    let l2: f64 = dirichlet_l1(2);
    r.check(
        "dirichlet n=2",
        (l2 - 4.0 / std::f64::consts::PI).abs(),
        1e-9,
        || format!("got {l2}"),
    );
    for n in [3usize, 5] {
        let quad: f64 = dirichlet_l1(n);
        let riemann: f64 = dirichlet_l1_riemann(n, 1_000_000);
        r.check("dirichlet vs riemann", (quad - riemann).abs(), 1e-8, || {
            format!("n={n} quadrature={quad} riemann={riemann}")
        });
    }
    let mut prev = 0.0;
    for n in 1..=128usize {
        let v: f64 = dirichlet_l1(n);
        r.check("dirichlet monotone", (prev - v).max(0.0), 0.0, || {
            format!("n={n}: {v} < previous {prev}")
        });
        prev = v;
    }

    let n_hi = cfg.n_max.max(2);
    for _ in 0..cfg.draws {
        let n = rng.random_range(2..=n_hi);
        let (a, b) = (rng.random_range(0.0..5.0), rng.random_range(0.0..5.0));
        let spec = TwoParamSpec::minus(n, a, b).expect("valid");
        let pv = SANDWICH_PS[rng.random_range(0..SANDWICH_PS.len())];
        let e = p(pv);
        let bs = best_bounds(&spec, e);
        let est = power_estimate(&spec, e, &cfg.oracle).estimate;
        let ctx = || format!("A({n},-{a},{b}) p={pv} bounds={bs:?} oracle={est}");
        r.check("lower <= oracle", bs.lower - est, 1e-9, ctx);
        r.check("oracle <= upper", est - bs.upper(), 1e-9, ctx);
        r.check("oracle <= harmonic", est - bs.upper_harmonic, 1e-9, ctx);

        let dual = best_bounds(&spec, e.conjugate());
        let diff = [
            rel(bs.lower, dual.lower),
            rel(bs.upper_holder, dual.upper_holder),
            rel(bs.upper_rt, dual.upper_rt),
            rel(bs.upper_harmonic, dual.upper_harmonic),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        r.check("dual symmetry", diff, 1e-12, ctx);

        let q = rng.random_range(2.0..20.0);
        let bq = best_bounds(&spec, p(q));
        r.check("rt <= holder", bq.upper_rt - bq.upper_holder, 1e-12, || {
            format!("A({n},-{a},{b}) p={q} {bq:?}")
        });
    }
    r
}

fn lemma_suite(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("lemma");
    let fx = lemma31_check(&[1.0, 0.0], &[1.0, 1.0], 2.0).expect("valid");
    r.check(
        "lemma fixture",
        (fx.lhs - 2.0f64).abs().max((fx.rhs - 2.0f64).abs()),
        0.0,
        || format!("{fx:?}"),
    );
    let fx = lemma31_check(&[0.5, 0.5], &[1.0, 0.0], 2.0).expect("valid");
    r.check(
        "lemma fixture",
        (fx.lhs - 0.5f64).abs().max((fx.rhs - 1.0f64).abs()),
        0.0,
        || format!("{fx:?}"),
    );

    let n_hi = cfg.n_max.clamp(2, 6);
    for n in 2..=n_hi {
        for &pv in &LEMMA_PS {
            for _ in 0..cfg.draws {
                let alpha: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
                let x: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
                let rep = lemma31_check(&alpha, &x, pv).expect("valid input");
                let excess = if rep.holds {
                    0.0
                } else {
                    rep.lhs / rep.rhs - 1.0
                };
                r.check("averaging inequality", excess, 0.0, || {
                    format!(
                        "alpha={alpha:?} x={x:?} p={pv} lhs={} rhs={}",
                        rep.lhs, rep.rhs
                    )
                });
            }
        }
    }
    r
}
