//! The `verify` command: every identity and property suite, one PASS/FAIL
//! line each with the largest deviation observed.
//!
//! The exact suites take the first-kind polynomials from a caller-supplied
//! source, so a corrupted construction can be fed in and must be caught.

use std::f64::consts::PI;

use chebkit_core::approx::{default_fourier_rule, parseval_balance, STEP_RULE_SIZE};
use chebkit_core::cheb::{
    chebyshev_operator, eval_u_trig, reflects_with_sign, second_solution_residual,
};
use chebkit_core::quadrature::integrate_weighted;
use chebkit_core::{
    cheb_coefficients, chebyshev_t, chebyshev_u, error_metrics, eval_trig, fourier_coefficients,
    general_solution_residual, generating_closed, generating_coefficients, generating_partial,
    gibbs_overshoot, monomial_to_cheb, rodrigues, Parity, Poly, QuadRule, TargetFn,
};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::output::num;
use crate::Outcome;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    /// Largest deviation from the expected value, in the suite's own units.
    pub max_dev: f64,
    pub tolerance: f64,
}

impl SuiteResult {
    fn within(name: &'static str, max_dev: f64, tolerance: f64) -> Self {
        SuiteResult {
            name,
            passed: max_dev <= tolerance,
            max_dev,
            tolerance,
        }
    }

    fn check(name: &'static str, passed: bool, max_dev: f64, tolerance: f64) -> Self {
        SuiteResult {
            name,
            passed,
            max_dev,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = format!("# chebkit verify seed={}\n", self.seed);
        for s in &self.suites {
            out.push_str(&format!(
                "{} {:<24} max_dev={} tol={}\n",
                if s.passed { "PASS" } else { "FAIL" },
                s.name,
                num(s.max_dev),
                num(s.tolerance)
            ));
        }
        let passed = self.suites.iter().filter(|s| s.passed).count();
        out.push_str(&format!("# {passed}/{} suites passed\n", self.suites.len()));
        out
    }
}

pub fn cmd_verify(config: &RunConfig) -> Outcome {
    let report = run_suites(config.seed, &chebyshev_t);
    Outcome {
        text: report.render(),
        success: report.all_passed(),
    }
}

/// Largest coefficient magnitude, 0 for the zero polynomial.
fn max_abs_coeff(p: &Poly) -> f64 {
    p.coeffs()
        .iter()
        .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

/// Runs every suite. `first_kind(n)` supplies `T_n` to the exact suites.
pub fn run_suites(seed: u64, first_kind: &dyn Fn(usize) -> Poly) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ts: Vec<Poly> = (0..=30).map(first_kind).collect();
    let suites = vec![
        ode_suite(&ts),
        rodrigues_suite(&ts),
        recurrence_suite(&ts),
        trig_suite(&ts),
        endpoint_suite(&ts),
        parity_suite(&ts),
        generating_suite(),
        generating_recurrence_suite(),
        second_kind_suite(),
        general_solution_suite(&mut rng),
        orthogonality_suite(),
        quadrature_exactness_suite(&mut rng),
        polynomial_fit_suite(),
        step_symmetry_suite(),
        parseval_suite(),
        gibbs_suite(),
    ];
    Report { seed, suites }
}

fn ode_suite(ts: &[Poly]) -> SuiteResult {
    let dev = ts
        .iter()
        .enumerate()
        .map(|(n, t)| max_abs_coeff(&chebyshev_operator(t, n)))
        .fold(0.0, f64::max);
    SuiteResult::within("ode_residual", dev, 0.0)
}

fn rodrigues_suite(ts: &[Poly]) -> SuiteResult {
    let dev = (0..=12)
        .map(|n| max_abs_coeff(&(&rodrigues(n) - &ts[n])))
        .fold(0.0, f64::max);
    SuiteResult::within("rodrigues", dev, 0.0)
}

fn recurrence_suite(ts: &[Poly]) -> SuiteResult {
    let two_x = Poly::from_i64s(&[0, 2]);
    let dev = (1..=29)
        .map(|n| max_abs_coeff(&(&ts[n + 1] - &(&(&two_x * &ts[n]) - &ts[n - 1]))))
        .fold(0.0, f64::max);
    // seeds of the recurrence
    let seeds_ok = ts[0] == Poly::one() && ts[1] == Poly::x();
    SuiteResult::check("recurrence", dev == 0.0 && seeds_ok, dev, 0.0)
}

fn trig_suite(ts: &[Poly]) -> SuiteResult {
    let mut dev = 0.0_f64;
    for (n, t) in ts.iter().enumerate().take(21) {
        for i in 0..200 {
            let x = -1.0 + 2.0 * i as f64 / 199.0;
            let v = eval_trig(n, x).unwrap_or(f64::NAN);
            dev = dev.max((v - t.eval_exact_f64(x)).abs());
        }
    }
    SuiteResult::within("trig_vs_exact", dev, 1e-11)
}

fn endpoint_suite(ts: &[Poly]) -> SuiteResult {
    let one = BigRational::one();
    let mut ok = true;
    let mut excess = 0.0_f64;
    for (n, t) in ts.iter().enumerate() {
        let sign = if n % 2 == 0 { one.clone() } else { -one.clone() };
        ok &= t.eval(&one) == one && t.eval(&-one.clone()) == sign;
        for i in 0..=100 {
            let x = BigRational::new((i - 50).into(), 50.into());
            let v = t.eval(&x).abs().to_f64().unwrap_or(f64::INFINITY);
            excess = excess.max(v - 1.0);
        }
    }
    SuiteResult::check("endpoints_and_bounds", ok && excess <= 0.0, excess.max(0.0), 0.0)
}

fn parity_suite(ts: &[Poly]) -> SuiteResult {
    let mut ok = true;
    for (n, t) in ts.iter().enumerate() {
        ok &= Parity::of_poly(t) == Some(Parity::of(n));
        for (p, q) in [(1, 3), (2, 7), (5, 11), (13, 17)] {
            ok &= reflects_with_sign(t, n, &BigRational::new(p.into(), q.into()));
        }
    }
    SuiteResult::check("parity", ok, if ok { 0.0 } else { 1.0 }, 0.0)
}

fn generating_suite() -> SuiteResult {
    let mut dev = 0.0_f64;
    for i in 0..=20 {
        let x = -1.0 + i as f64 / 10.0;
        for j in 0..=20 {
            let z = -0.5 + j as f64 / 20.0;
            let d = match (generating_closed(x, z), generating_partial(x, z, 40)) {
                (Ok(a), Ok(b)) => (a - b).abs(),
                _ => f64::INFINITY,
            };
            dev = dev.max(d);
        }
    }
    SuiteResult::within("generating_function", dev, 0.5_f64.powi(41) / 0.5)
}

/// Taylor coefficients of the closed form, extracted independently, must
/// satisfy the three-term recurrence.
fn generating_recurrence_suite() -> SuiteResult {
    let mut dev = 0.0_f64;
    for i in 0..=10 {
        let x = -1.0 + i as f64 / 5.0;
        let Ok(c) = generating_coefficients(x, 31) else {
            dev = f64::INFINITY;
            continue;
        };
        for n in 1..30 {
            dev = dev.max((c[n + 1] - (2.0 * x * c[n] - c[n - 1])).abs());
        }
    }
    SuiteResult::within("generating_recurrence", dev, 1e-11)
}

fn second_kind_suite() -> SuiteResult {
    let mut dev = 0.0_f64;
    for n in 0..=20 {
        let u = chebyshev_u(n);
        for k in 1..40 {
            let x = -1.0 + k as f64 / 20.0;
            let q = eval_u_trig(n, x).unwrap_or(f64::NAN);
            dev = dev.max((u.eval_exact_f64(x) - q).abs() / (n as f64 + 1.0));
        }
    }
    SuiteResult::within("second_kind", dev, 1e-10)
}

fn general_solution_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut dev = 0.0_f64;
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let b1 = rng.gen_range(-2.0..=2.0);
        let b2 = rng.gen_range(-2.0..=2.0);
        let x = rng.gen_range(-0.9..=0.9);
        let r = general_solution_residual(n, b1, b2, x).unwrap_or(f64::INFINITY);
        dev = dev.max(r.abs());
    }
    let exact = (1..=10).all(|n| second_solution_residual(n).is_ok_and(|t| t.is_zero()));
    SuiteResult::check("general_solution", exact && dev <= 1e-9, dev, 1e-9)
}

fn orthogonality_suite() -> SuiteResult {
    let rule = QuadRule::gauss_chebyshev(16).expect("16 > 0");
    let mut dev = 0.0_f64;
    for m in 0..=12 {
        for n in 0..=12 {
            let g = integrate_weighted(
                |x| eval_trig(m, x).unwrap_or(f64::NAN) * eval_trig(n, x).unwrap_or(f64::NAN),
                &rule,
            )
            .unwrap_or(f64::INFINITY);
            let expected = match (m, n) {
                (0, 0) => PI,
                _ if m == n => PI / 2.0,
                _ => 0.0,
            };
            dev = dev.max((g - expected).abs());
        }
    }
    SuiteResult::within("orthogonality", dev, 1e-12)
}

/// `int x^k / sqrt(1 - x^2)`: 0 for odd k, pi (k-1)!!/k!! for even k.
fn weighted_moment(k: usize) -> f64 {
    if k % 2 == 1 {
        0.0
    } else {
        (1..=k / 2).fold(PI, |acc, j| acc * (2 * j - 1) as f64 / (2 * j) as f64)
    }
}

fn quadrature_exactness_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut dev = 0.0_f64;
    for m in [1, 2, 3, 5, 8, 13, 21] {
        let rule = QuadRule::gauss_chebyshev(m).expect("m > 0");
        for _ in 0..10 {
            let deg = rng.gen_range(0..=2 * m - 1);
            let c: Vec<f64> = (0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let exact: f64 = c.iter().enumerate().map(|(k, ck)| ck * weighted_moment(k)).sum();
            let got = integrate_weighted(|x| c.iter().rev().fold(0.0, |a, ck| a * x + ck), &rule)
                .unwrap_or(f64::INFINITY);
            dev = dev.max((got - exact).abs());
        }
    }
    SuiteResult::within("quadrature_exactness", dev, 1e-12)
}

fn polynomial_fit_suite() -> SuiteResult {
    let f = TargetFn::septic();
    let run = || -> chebkit_core::Result<(f64, f64)> {
        let fit = cheb_coefficients(&f, 7, 64)?;
        let oracle = monomial_to_cheb(&f.as_poly().expect("polynomial target"));
        let coeff_dev = fit
            .coeffs()
            .iter()
            .zip(oracle.coeffs())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        Ok((coeff_dev, error_metrics(&f, &fit, 2001)?.sup_error))
    };
    match run() {
        Ok((coeff_dev, sup)) => SuiteResult::check(
            "polynomial_exactness",
            coeff_dev <= 1e-12 && sup <= 1e-10,
            sup.max(coeff_dev),
            1e-10,
        ),
        Err(_) => SuiteResult::within("polynomial_exactness", f64::INFINITY, 1e-10),
    }
}

fn step_symmetry_suite() -> SuiteResult {
    match cheb_coefficients(&TargetFn::unit_step(), 20, STEP_RULE_SIZE) {
        Ok(fit) => {
            let c = fit.coeffs();
            let even = c.iter().step_by(2).map(|v| v.abs()).fold(0.0, f64::max);
            let nonzero = c.iter().filter(|v| v.abs() > 1e-6).count();
            SuiteResult::check("step_symmetry", even <= 1e-12 && nonzero == 10, even, 1e-12)
        }
        Err(_) => SuiteResult::within("step_symmetry", f64::INFINITY, 1e-12),
    }
}

fn parseval_suite() -> SuiteResult {
    let run = || -> chebkit_core::Result<(f64, bool)> {
        let t3 = TargetFn::Polynomial(vec![0.0, -3.0, 0.0, 4.0]);
        let septic = TargetFn::septic();
        let g3 = parseval_balance(&t3, &cheb_coefficients(&t3, 3, 64)?, 64)?.gap();
        let g7 = parseval_balance(&septic, &cheb_coefficients(&septic, 7, 64)?, 64)?.gap();
        let step = TargetFn::unit_step();
        let mut gaps = Vec::new();
        for n in [5, 10, 20, 40] {
            let fit = cheb_coefficients(&step, n, STEP_RULE_SIZE)?;
            gaps.push(parseval_balance(&step, &fit, STEP_RULE_SIZE)?.gap());
        }
        let decreasing = gaps.iter().all(|&g| g > 0.0) && gaps.windows(2).all(|w| w[1] < w[0]);
        Ok((g3.max(g7), decreasing))
    };
    match run() {
        Ok((dev, decreasing)) => SuiteResult::check("parseval", dev <= 1e-10 && decreasing, dev, 1e-10),
        Err(_) => SuiteResult::within("parseval", f64::INFINITY, 1e-10),
    }
}

fn gibbs_suite() -> SuiteResult {
    let run = || -> chebkit_core::Result<(f64, bool)> {
        let f = TargetFn::unit_step();
        let rule = default_fourier_rule(&f)?;
        let mut ok = true;
        let mut worst = 0.0_f64;
        for n in [10, 20, 40] {
            let o = gibbs_overshoot(&f, &fourier_coefficients(&f, n, &rule)?, 0.2)?;
            ok &= (0.05..=0.12).contains(&o);
            worst = worst.max((o - 0.0895).abs());
        }
        let cheb = gibbs_overshoot(&f, &cheb_coefficients(&f, 20, STEP_RULE_SIZE)?, 0.2)?;
        ok &= cheb > 0.02;
        Ok((worst, ok))
    };
    match run() {
        // deviation reported against the limiting overshoot 0.0895
        Ok((dev, ok)) => SuiteResult::check("gibbs", ok, dev, 0.035),
        Err(_) => SuiteResult::within("gibbs", f64::INFINITY, 0.035),
    }
}
