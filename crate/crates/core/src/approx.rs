//! Chebyshev and Fourier approximation of target functions, with error
//! metrics, the Parseval energy balance and Gibbs overshoot.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cheb::{chebyshev_t_upto, eval_trig};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quadrature::{integrate_weighted, QuadRule, RuleKind};
use crate::series::{ChebSeries, Evaluable, FourierSeries};
use crate::target::TargetFn;

/// Gauss-Chebyshev size used to fit step targets.
pub const STEP_RULE_SIZE: usize = 4096;
/// Uniform grid size for [`error_metrics`] when none is given.
pub const DEFAULT_GRID: usize = 2001;
/// Points per window for [`gibbs_overshoot`].
pub const GIBBS_POINTS: usize = 10_001;

/// Rule size that makes the fit of a degree-`n` polynomial exact:
/// `max(64, 2n + 2)`, or [`STEP_RULE_SIZE`] for discontinuous targets.
pub fn default_rule_size(f: &TargetFn, n: usize) -> usize {
    if f.as_step().is_some() {
        STEP_RULE_SIZE.max(2 * n + 2)
    } else {
        64.max(2 * n + 2)
    }
}

/// `C_0 = (1/pi) int w f`, `C_n = (2/pi) int w f T_n` by Gauss-Chebyshev
/// quadrature of size `rule_size`.
pub fn cheb_coefficients(f: &TargetFn, n: usize, rule_size: usize) -> Result<ChebSeries> {
    if rule_size < n + 1 {
        return Err(Error::RuleTooSmall {
            rule_size,
            terms: n + 1,
        });
    }
    let rule = QuadRule::gauss_chebyshev(rule_size)?;
    let fx: Vec<f64> = rule.nodes().iter().map(|&x| f.value(x)).collect();
    if let Some((i, _)) = fx.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite(rule.nodes()[i]));
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let integrand = rule
            .nodes()
            .iter()
            .zip(&fx)
            .map(|(&x, &v)| eval_trig(k, x).map(|t| t * v))
            .collect::<Result<Vec<_>>>()?;
        let scale = if k == 0 { 1.0 / PI } else { 2.0 / PI };
        coeffs.push(scale * rule.integrate_values(&integrand));
    }
    ChebSeries::new(coeffs)
}

/// Exact Chebyshev coefficients of a monomial-basis polynomial, found by
/// peeling off the leading term `c x^k` as `c / 2^(k-1) T_k` until nothing
/// remains.
pub fn monomial_to_cheb_exact(p: &Poly) -> Vec<BigRational> {
    let Some(deg) = p.degree() else {
        return vec![BigRational::zero()];
    };
    let ts = chebyshev_t_upto(deg);
    let mut out = vec![BigRational::zero(); deg + 1];
    let mut rest = p.clone();
    while let Some(k) = rest.degree() {
        let lead = rest.leading_coeff().expect("nonzero").clone();
        let ck = if k == 0 {
            lead
        } else {
            lead / BigRational::from_integer(BigInt::from(1u8) << (k - 1))
        };
        rest = &rest - &ts[k].scale(&ck);
        out[k] = ck;
    }
    out
}

pub fn monomial_to_cheb(p: &Poly) -> ChebSeries {
    let coeffs = monomial_to_cheb_exact(p)
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    ChebSeries::new(coeffs).expect("rational coefficients are finite")
}

/// `sum c_n T_n` expanded back into the monomial basis.
pub fn cheb_to_monomial(coeffs: &[BigRational]) -> Poly {
    if coeffs.is_empty() {
        return Poly::zero();
    }
    chebyshev_t_upto(coeffs.len() - 1)
        .iter()
        .zip(coeffs)
        .fold(Poly::zero(), |acc, (t, c)| &acc + &t.scale(c))
}

/// Composite Gauss-Legendre rule for Fourier integrals of `f`: 64 uniform
/// panels of order 12, with every discontinuity of `f` added as a break.
pub fn default_fourier_rule(f: &TargetFn) -> Result<QuadRule> {
    const PANELS: i64 = 64;
    let mut breaks: Vec<f64> = (0..=PANELS)
        .map(|i| (2 * i - PANELS) as f64 / PANELS as f64)
        .collect();
    breaks.extend(f.discontinuities());
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    QuadRule::gauss_legendre_piecewise(&breaks, 12)
}

/// Period-2 coefficients `a_n = int f cos(n pi x)`, `b_n = int f sin(n pi x)`
/// over `[-1, 1]`, for `n = 0..=order` (`a_0` only at `n = 0`).
pub fn fourier_coefficients(f: &TargetFn, order: usize, rule: &QuadRule) -> Result<FourierSeries> {
    if rule.kind() != RuleKind::GaussLegendreComposite {
        return Err(Error::WrongRuleKind {
            expected: RuleKind::GaussLegendreComposite,
            actual: rule.kind(),
        });
    }
    let fx: Vec<f64> = rule.nodes().iter().map(|&x| f.value(x)).collect();
    if let Some((i, _)) = fx.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite(rule.nodes()[i]));
    }
    let a0 = rule.integrate_values(&fx);
    let mut a = Vec::with_capacity(order);
    let mut b = Vec::with_capacity(order);
    for n in 1..=order {
        let w = n as f64 * PI;
        let (mut sa, mut sb) = (0.0, 0.0);
        for ((&x, &wt), &v) in rule.nodes().iter().zip(rule.weights()).zip(&fx) {
            sa += wt * v * (w * x).cos();
            sb += wt * v * (w * x).sin();
        }
        a.push(sa);
        b.push(sb);
    }
    FourierSeries::new(a0, a, b)
}

pub fn eval_cheb_series(s: &ChebSeries, x: f64) -> Result<f64> {
    s.eval(x)
}

pub fn eval_fourier_series(s: &FourierSeries, x: f64) -> Result<f64> {
    s.eval(x)
}

/// `n` uniform points on `[-1, 1]` including both endpoints exactly.
pub fn uniform_grid(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::GridTooSmall(n));
    }
    let d = (n - 1) as i64;
    Ok((0..n as i64).map(|i| (2 * i - d) as f64 / d as f64).collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorMetrics {
    /// Largest `|f - approx|` over the uniform grid.
    pub sup_error: f64,
    /// `sqrt(int w (f - approx)^2)` with a Gauss-Chebyshev rule.
    pub l2w_error: f64,
}

/// Sup error on a `grid_size` uniform grid and weighted L2 error with a
/// Gauss-Chebyshev rule of the same size.
pub fn error_metrics(
    f: &dyn Evaluable,
    approx: &dyn Evaluable,
    grid_size: usize,
) -> Result<ErrorMetrics> {
    let mut sup = 0.0_f64;
    for x in uniform_grid(grid_size)? {
        sup = sup.max((f.eval(x)? - approx.eval(x)?).abs());
    }
    let rule = QuadRule::gauss_chebyshev(grid_size)?;
    let mut sq = Vec::with_capacity(rule.len());
    for &x in rule.nodes() {
        let d = f.eval(x)? - approx.eval(x)?;
        sq.push(d * d);
    }
    let l2 = rule.integrate_values(&sq);
    Ok(ErrorMetrics {
        sup_error: sup,
        l2w_error: l2.max(0.0).sqrt(),
    })
}

/// Both sides of Parseval's identity for a fitted series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsevalBalance {
    /// `int w f^2` over `[-1, 1]`.
    pub function_energy: f64,
    /// `C_0^2 pi + (pi/2) sum C_n^2`.
    pub series_energy: f64,
}

impl ParsevalBalance {
    pub fn gap(&self) -> f64 {
        (self.function_energy - self.series_energy).abs()
    }
}

pub fn parseval_balance(f: &TargetFn, s: &ChebSeries, rule_size: usize) -> Result<ParsevalBalance> {
    let rule = QuadRule::gauss_chebyshev(rule_size)?;
    let function_energy = integrate_weighted(|x| f.value(x).powi(2), &rule)?;
    Ok(ParsevalBalance {
        function_energy,
        series_energy: s.energy(),
    })
}

/// `|int w f^2 - (C_0^2 pi + (pi/2) sum C_n^2)|`.
pub fn parseval_gap(f: &TargetFn, s: &ChebSeries, rule_size: usize) -> Result<f64> {
    parseval_balance(f, s, rule_size).map(|b| b.gap())
}

/// Relative overshoot `(max approx - high) / (high - low)` over
/// `(x0, x0 + window]`, sampled at [`GIBBS_POINTS`] points.
pub fn gibbs_overshoot(f: &TargetFn, approx: &dyn Evaluable, window: f64) -> Result<f64> {
    let (x0, low, high) = f.as_step().ok_or(Error::NotAStep)?;
    if window.is_nan() || window <= 0.0 || x0 + window > 1.0 {
        return Err(Error::BadWindow { x0, window });
    }
    let step = window / GIBBS_POINTS as f64;
    let mut peak = f64::NEG_INFINITY;
    for i in 1..=GIBBS_POINTS {
        let x = (x0 + step * i as f64).min(1.0);
        peak = peak.max(approx.eval(x)?);
    }
    Ok((peak - high) / (high - low))
}
