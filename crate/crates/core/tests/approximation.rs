//! Series fitting on [-1, 1]: orthogonality, polynomial exactness, the step
//! target, Parseval and Gibbs behaviour.

use std::f64::consts::PI;

use chebkit_core::approx::{
    default_fourier_rule, default_rule_size, parseval_balance, uniform_grid, DEFAULT_GRID,
    STEP_RULE_SIZE,
};
use chebkit_core::quadrature::integrate_weighted;
use chebkit_core::{
    cheb_coefficients, error_metrics, eval_trig, fourier_coefficients, gibbs_overshoot,
    monomial_to_cheb, parseval_gap, ChebSeries, Evaluable, FourierSeries, Poly, QuadRule, TargetFn,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `int x^k / sqrt(1 - x^2)` over [-1, 1]: 0 for odd k, pi (k-1)!!/k!! for even k.
fn weighted_moment(k: usize) -> f64 {
    if k % 2 == 1 {
        return 0.0;
    }
    (1..=k / 2).fold(PI, |acc, j| acc * (2 * j - 1) as f64 / (2 * j) as f64)
}

/// `int_{-1}^{1} x^k sin(w x) dx` and the cosine analogue with `w = n pi`,
/// by repeated integration by parts.
fn monomial_fourier(k: usize, n: usize) -> (f64, f64) {
    let w = n as f64 * PI;
    let cos_w = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    assert!(n >= 1);
    // I_k = int x^k sin(wx), J_k = int x^k cos(wx); both vanish at k = 0
    let (mut i_prev, mut j_prev) = (0.0, 0.0);
    for m in 1..=k {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let mf = m as f64;
        // I_m = [-x^m cos(wx)/w] + (m/w) J_{m-1}
        let i_m = -(cos_w - sign * cos_w) / w + mf / w * j_prev;
        // J_m = [x^m sin(wx)/w] - (m/w) I_{m-1}; the boundary term vanishes
        let j_m = -mf / w * i_prev;
        i_prev = i_m;
        j_prev = j_m;
    }
    (i_prev, j_prev)
}

#[test]
fn gram_matrix_is_diagonal() {
    let rule = QuadRule::gauss_chebyshev(16).unwrap();
    for m in 0..=12 {
        for n in 0..=12 {
            let g = integrate_weighted(
                |x| eval_trig(m, x).unwrap() * eval_trig(n, x).unwrap(),
                &rule,
            )
            .unwrap();
            let expected = match (m, n) {
                (0, 0) => PI,
                _ if m == n => PI / 2.0,
                _ => 0.0,
            };
            assert!((g - expected).abs() <= 1e-12, "G[{m}][{n}] = {g}");
        }
    }
}

#[test]
fn gauss_chebyshev_exact_on_random_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in [1, 2, 3, 5, 8, 13] {
        let rule = QuadRule::gauss_chebyshev(m).unwrap();
        for _ in 0..20 {
            let deg = rng.gen_range(0..=2 * m - 1);
            let c: Vec<f64> = (0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let exact: f64 = c.iter().enumerate().map(|(k, ck)| ck * weighted_moment(k)).sum();
            let got = integrate_weighted(
                |x| c.iter().rev().fold(0.0, |acc, ck| acc * x + ck),
                &rule,
            )
            .unwrap();
            assert!((got - exact).abs() <= 1e-12, "m={m} deg={deg}");
        }
    }
}

#[test]
fn septic_chebyshev_fit_is_exact() {
    let f = TargetFn::septic();
    let fit = cheb_coefficients(&f, 7, default_rule_size(&f, 7)).unwrap();
    let oracle = monomial_to_cheb(&f.as_poly().unwrap());
    for (a, b) in fit.coeffs().iter().zip(oracle.coeffs()) {
        assert!((a - b).abs() <= 1e-12, "{a} vs {b}");
    }
    let m = error_metrics(&f, &fit, DEFAULT_GRID).unwrap();
    assert!(m.sup_error <= 1e-10, "{m:?}");
    assert!((fit.eval(0.5).unwrap() - -12.3046875).abs() <= 1e-11);
    assert!(fit.eval(1.0).unwrap().abs() <= 1e-11);
}

#[test]
fn septic_fourier_fit_shows_visible_error() {
    let f = TargetFn::septic();
    let rule = default_fourier_rule(&f).unwrap();
    for n in [10, 20] {
        let s = fourier_coefficients(&f, n, &rule).unwrap();
        let m = error_metrics(&f, &s, DEFAULT_GRID).unwrap();
        assert!(m.sup_error > 1e-3, "N={n}: {m:?}");
        // odd target
        assert!(s.cosine().iter().all(|a| a.abs() <= 1e-10));
        assert!(s.a0().abs() <= 1e-10);
    }
}

#[test]
fn septic_sine_coefficient_matches_closed_form() {
    let f = TargetFn::septic();
    let s = fourier_coefficients(&f, 10, &default_fourier_rule(&f).unwrap()).unwrap();
    let coeffs = [0.0, -36.0, 0.0, 49.0, 0.0, -14.0, 0.0, 1.0];
    let b10: f64 = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * monomial_fourier(k, 10).0)
        .sum();
    assert!((s.sine()[9] - b10).abs() <= 1e-8, "{} vs {b10}", s.sine()[9]);
    // sanity for the oracle itself: int x sin(n pi x) = 2 (-1)^(n+1) / (n pi)
    assert!((monomial_fourier(1, 3).0 - 2.0 / (3.0 * PI)).abs() < 1e-15);
}

#[test]
fn step_chebyshev_coefficients() {
    let f = TargetFn::unit_step();
    let fit = cheb_coefficients(&f, 20, STEP_RULE_SIZE).unwrap();
    let c = fit.coeffs();
    for n in (0..=20).step_by(2) {
        assert!(c[n].abs() <= 1e-12, "C_{n} = {}", c[n]);
    }
    assert_eq!(c.iter().filter(|v| v.abs() > 1e-6).count(), 10);
    // odd coefficients approach 4 sin(n pi / 2) / (n pi)
    for n in (1..=19).step_by(2) {
        let exact = 4.0 * (n as f64 * PI / 2.0).sin() / (n as f64 * PI);
        assert!((c[n] - exact).abs() <= 1e-5, "C_{n}");
    }
}

#[test]
fn step_fourier_coefficients() {
    let f = TargetFn::unit_step();
    let s = fourier_coefficients(&f, 40, &default_fourier_rule(&f).unwrap()).unwrap();
    assert!(s.a0().abs() <= 1e-10);
    for n in 1..=40 {
        assert!(s.cosine()[n - 1].abs() <= 1e-10);
        let exact = 2.0 * (1.0 - (n as f64 * PI).cos()) / (n as f64 * PI);
        assert!((s.sine()[n - 1] - exact).abs() <= 1e-8, "b_{n}");
    }
}

#[test]
fn even_targets_have_no_odd_modes() {
    let f = TargetFn::Polynomial(vec![0.5, 0.0, -2.0, 0.0, 0.7]);
    let c = cheb_coefficients(&f, 10, 64).unwrap();
    assert!(c.coeffs().iter().skip(1).step_by(2).all(|v| v.abs() <= 1e-12));
    let s = fourier_coefficients(&f, 12, &default_fourier_rule(&f).unwrap()).unwrap();
    assert!(s.sine().iter().all(|b| b.abs() <= 1e-10));
}

fn square_wave(n: usize) -> FourierSeries {
    let b = (1..=n)
        .map(|k| 2.0 * (1.0 - (k as f64 * PI).cos()) / (k as f64 * PI))
        .collect();
    FourierSeries::new(0.0, vec![0.0; n], b).unwrap()
}

#[test]
fn gibbs_overshoot_of_fourier_partial_sums() {
    let f = TargetFn::unit_step();
    let rule = default_fourier_rule(&f).unwrap();
    let mut last = None;
    for n in [10, 20, 40] {
        let fitted = fourier_coefficients(&f, n, &rule).unwrap();
        let o = gibbs_overshoot(&f, &fitted, 0.2).unwrap();
        assert!((0.05..=0.12).contains(&o), "N={n}: {o}");
        // the fit and the analytic square wave agree
        let analytic = gibbs_overshoot(&f, &square_wave(n), 0.2).unwrap();
        assert!((o - analytic).abs() < 1e-8);
        last = Some(o);
    }
    // Wilbraham-Gibbs: Si(pi)/pi - 1/2 = 0.0894898...
    assert!((last.unwrap() - 0.08949).abs() < 0.005);
}

#[test]
fn gibbs_overshoot_of_chebyshev_fit() {
    let f = TargetFn::unit_step();
    let fit = cheb_coefficients(&f, 20, STEP_RULE_SIZE).unwrap();
    let o = gibbs_overshoot(&f, &fit, 0.2).unwrap();
    assert!(o > 0.02, "{o}");
}

#[test]
fn parseval_band_limited() {
    let t3 = TargetFn::Polynomial(vec![0.0, -3.0, 0.0, 4.0]);
    for n in 3..=8 {
        let fit = cheb_coefficients(&t3, n, 64).unwrap();
        assert!(parseval_gap(&t3, &fit, 64).unwrap() <= 1e-12, "N={n}");
    }
    let septic = TargetFn::septic();
    let fit = cheb_coefficients(&septic, 7, 64).unwrap();
    let b = parseval_balance(&septic, &fit, 64).unwrap();
    assert!(b.gap() <= 1e-10 * (1.0 + b.function_energy));
    let c = TargetFn::Polynomial(vec![2.5]);
    let fit = cheb_coefficients(&c, 0, 64).unwrap();
    assert!(parseval_gap(&c, &fit, 64).unwrap() <= 1e-13);
    let only = ChebSeries::new(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
    assert!(parseval_gap(&t3, &only, 64).unwrap() <= 1e-12);
}

#[test]
fn parseval_step_tail_energy_decreases() {
    let f = TargetFn::unit_step();
    let gaps: Vec<f64> = [5, 10, 20, 40]
        .iter()
        .map(|&n| {
            let fit = cheb_coefficients(&f, n, STEP_RULE_SIZE).unwrap();
            parseval_gap(&f, &fit, STEP_RULE_SIZE).unwrap()
        })
        .collect();
    assert!(gaps.iter().all(|&g| g > 0.0));
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
}

#[test]
fn bessel_inequality_and_l2_monotonicity() {
    let f = TargetFn::unit_step();
    let mut last = f64::INFINITY;
    for n in 0..=30 {
        let fit = cheb_coefficients(&f, n, STEP_RULE_SIZE).unwrap();
        let b = parseval_balance(&f, &fit, STEP_RULE_SIZE).unwrap();
        assert!(b.series_energy <= b.function_energy + 1e-10);
        let l2 = error_metrics(&f, &fit, DEFAULT_GRID).unwrap().l2w_error;
        assert!(l2 <= last + 1e-12, "N={n}: {l2} > {last}");
        last = l2;
    }
}

#[test]
fn fit_at_jump_tends_to_midpoint() {
    // the deviation at the jump is an oscillating O(1/N) envelope, so compare
    // at jump locations where N = 10 does not sit near one of its zeros
    for x0 in [0.5, -0.2] {
        let f = TargetFn::step(x0, -1.0, 1.0).unwrap();
        let at = |n| {
            let fit = cheb_coefficients(&f, n, STEP_RULE_SIZE).unwrap();
            fit.eval(x0).unwrap().abs()
        };
        assert!(at(40) < at(10), "x0 = {x0}");
    }
    // symmetric case: odd series, exact midpoint
    let fit = cheb_coefficients(&TargetFn::unit_step(), 40, STEP_RULE_SIZE).unwrap();
    assert!(fit.eval(0.0).unwrap().abs() < 1e-14);
}

#[test]
fn zero_order_fits_are_weighted_means() {
    let f = TargetFn::Polynomial(vec![1.0, 0.0, 3.0]);
    let fit = cheb_coefficients(&f, 0, 64).unwrap();
    // weighted mean of 1 + 3x^2 is 1 + 3/2
    assert!((fit.coeffs()[0] - 2.5).abs() < 1e-14);
    let s = fourier_coefficients(&f, 0, &default_fourier_rule(&f).unwrap()).unwrap();
    // plain mean is 1 + 1 = 2
    assert!((s.eval(0.3).unwrap() - 2.0).abs() < 1e-13);
}

#[test]
fn grid_includes_endpoints() {
    let g = uniform_grid(DEFAULT_GRID).unwrap();
    assert_eq!((g[0], g[2000]), (-1.0, 1.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_targets_are_reproduced(c in prop::collection::vec(-3.0f64..3.0, 1..12), extra in 0usize..6) {
        let d = c.len() - 1;
        let n = d + extra;
        let f = TargetFn::Polynomial(c.clone());
        let fit = cheb_coefficients(&f, n, 2 * n + 2).unwrap();
        let m = error_metrics(&f, &fit, 201).unwrap();
        prop_assert!(m.sup_error <= 1e-10, "{:?}", m);
        let oracle = monomial_to_cheb(&Poly::from_f64s(&c).unwrap());
        for (k, o) in oracle.coeffs().iter().enumerate() {
            prop_assert!((fit.coeffs()[k] - o).abs() <= 1e-12);
        }
    }

    #[test]
    fn odd_polynomials_have_no_even_modes(c in prop::collection::vec(-3.0f64..3.0, 1..6)) {
        let mut coeffs = vec![0.0; 2 * c.len()];
        for (i, ci) in c.iter().enumerate() {
            coeffs[2 * i + 1] = *ci;
        }
        let f = TargetFn::Polynomial(coeffs);
        let fit = cheb_coefficients(&f, 12, 64).unwrap();
        prop_assert!(fit.coeffs().iter().step_by(2).all(|v| v.abs() <= 1e-12));
    }
}
