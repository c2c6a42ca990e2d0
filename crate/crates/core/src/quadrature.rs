//! Fixed quadrature rules on `[-1, 1]`.
//!
//! Gauss-Chebyshev rules fold the weight `1/sqrt(1 - x^2)` into equal
//! weights `pi/m`, so the endpoint singularity is never sampled.
//! Composite Gauss-Legendre rules cover the unweighted integrals used for
//! Fourier coefficients.

use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    GaussChebyshev,
    GaussLegendreComposite,
}

/// Nodes strictly inside `(-1, 1)` in increasing order, with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    kind: RuleKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    exactness_degree: usize,
}

pub const MAX_LEGENDRE_ORDER: usize = 64;

impl QuadRule {
    /// `m`-point Gauss-Chebyshev rule: nodes `cos((2k-1) pi / (2m))`,
    /// weights `pi/m`, exact for `w(x) q(x)` with `deg q <= 2m - 1`.
    pub fn gauss_chebyshev(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyRule);
        }
        // cos((2k-1)pi/(2m)) written as a sine of the complementary angle:
        // ascending order, exact zero in the middle, exact mirror symmetry.
        let nodes = (0..m)
            .map(|i| {
                let j = 2 * i as i64 + 1 - m as i64;
                (j as f64 * PI / (2 * m) as f64).sin()
            })
            .collect();
        Ok(QuadRule {
            kind: RuleKind::GaussChebyshev,
            nodes,
            weights: vec![PI / m as f64; m],
            exactness_degree: 2 * m - 1,
        })
    }

    /// `panels` equal panels, each with an `order`-point Gauss-Legendre rule.
    pub fn gauss_legendre_composite(panels: usize, order: usize) -> Result<Self> {
        if panels == 0 {
            return Err(Error::EmptyRule);
        }
        let breaks: Vec<f64> = (0..=panels)
            .map(|i| (2 * i as i64 - panels as i64) as f64 / panels as f64)
            .collect();
        QuadRule::gauss_legendre_piecewise(&breaks, order)
    }

    /// Gauss-Legendre on arbitrary panels. `breaks` must start at -1, end at
    /// 1 and be strictly increasing. Placing a break on a discontinuity of
    /// the integrand keeps every panel smooth.
    pub fn gauss_legendre_piecewise(breaks: &[f64], order: usize) -> Result<Self> {
        if order == 0 || order > MAX_LEGENDRE_ORDER {
            return Err(Error::UnsupportedOrder(order));
        }
        if breaks.len() < 2 || breaks[0] != -1.0 || *breaks.last().unwrap() != 1.0 {
            return Err(Error::InvalidBreakpoints("must run from -1 to 1"));
        }
        if breaks.windows(2).any(|w| w[0].is_nan() || w[1].is_nan() || w[0] >= w[1]) {
            return Err(Error::InvalidBreakpoints("must be strictly increasing"));
        }
        let (ref_nodes, ref_weights) = legendre_nodes_weights(order);
        let mut nodes = Vec::with_capacity(order * (breaks.len() - 1));
        let mut weights = Vec::with_capacity(nodes.capacity());
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            for (t, wt) in ref_nodes.iter().zip(&ref_weights) {
                nodes.push(mid + half * t);
                weights.push(half * wt);
            }
        }
        Ok(QuadRule {
            kind: RuleKind::GaussLegendreComposite,
            nodes,
            weights,
            exactness_degree: 2 * order - 1,
        })
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Highest polynomial degree integrated exactly (per panel for composite
    /// rules, against the weight for Gauss-Chebyshev).
    pub fn exactness_degree(&self) -> usize {
        self.exactness_degree
    }

    /// `sum w_k f(x_k)`, accumulated in node order. For a Gauss-Chebyshev
    /// rule this approximates the weighted integral.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        let mut sum = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let fx = f(x);
            if !fx.is_finite() {
                return Err(Error::NonFinite(x));
            }
            sum += w * fx;
        }
        Ok(sum)
    }

    /// Weighted sum against precomputed values at the nodes.
    pub fn integrate_values(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.nodes.len());
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    fn expect_kind(&self, expected: RuleKind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::WrongRuleKind {
                expected,
                actual: self.kind,
            })
        }
    }
}

/// `int_{-1}^{1} f(x) / sqrt(1 - x^2) dx` with a Gauss-Chebyshev rule.
pub fn integrate_weighted<F: Fn(f64) -> f64>(f: F, rule: &QuadRule) -> Result<f64> {
    rule.expect_kind(RuleKind::GaussChebyshev)?;
    rule.integrate(f)
}

/// `int_{-1}^{1} f(x) dx` with a composite Gauss-Legendre rule.
pub fn integrate_plain<F: Fn(f64) -> f64>(f: F, rule: &QuadRule) -> Result<f64> {
    rule.expect_kind(RuleKind::GaussLegendreComposite)?;
    rule.integrate(f)
}

/// Gauss-Legendre nodes (ascending) and weights on `[-1, 1]` by Newton
/// iteration on `P_n`.
fn legendre_nodes_weights(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is the i-th largest root
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
