//! Truncated Chebyshev and Fourier series on `[-1, 1]`.

use std::f64::consts::PI;

use crate::cheb::{check_closed, clenshaw};
use crate::error::{Error, Result};

/// Anything that can be sampled on `[-1, 1]`: fitted series as well as the
/// target functions themselves.
pub trait Evaluable {
    fn eval(&self, x: f64) -> Result<f64>;
}

/// Coefficients `C_0..C_N` of `sum C_n T_n(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries {
    coeffs: Vec<f64>,
}

impl ChebSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("a Chebyshev series needs at least C_0"));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidSeries("non-finite Chebyshev coefficient"));
        }
        Ok(ChebSeries { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `C_0^2 pi + (pi/2) sum_{n>=1} C_n^2`, the weighted energy of the series.
    pub fn energy(&self) -> f64 {
        let tail: f64 = self.coeffs[1..].iter().map(|c| c * c).sum();
        self.coeffs[0] * self.coeffs[0] * PI + 0.5 * PI * tail
    }
}

impl Evaluable for ChebSeries {
    fn eval(&self, x: f64) -> Result<f64> {
        clenshaw(self, x)
    }
}

/// `a0/2 + sum_{n=1}^{N} (a_n cos(n pi x) + b_n sin(n pi x))`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    a0: f64,
    a: Vec<f64>,
    b: Vec<f64>,
}

impl FourierSeries {
    pub fn new(a0: f64, a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidSeries("cosine and sine lists differ in length"));
        }
        if !a0.is_finite() || a.iter().chain(&b).any(|c| !c.is_finite()) {
            return Err(Error::InvalidSeries("non-finite Fourier coefficient"));
        }
        Ok(FourierSeries { a0, a, b })
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn cosine(&self) -> &[f64] {
        &self.a
    }

    pub fn sine(&self) -> &[f64] {
        &self.b
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }
}

impl Evaluable for FourierSeries {
    fn eval(&self, x: f64) -> Result<f64> {
        check_closed(x)?;
        let mut sum = 0.5 * self.a0;
        for (k, (an, bn)) in self.a.iter().zip(&self.b).enumerate() {
            let arg = (k + 1) as f64 * PI * x;
            sum += an * arg.cos() + bn * arg.sin();
        }
        Ok(sum)
    }
}

impl<F: Fn(f64) -> f64> Evaluable for F {
    fn eval(&self, x: f64) -> Result<f64> {
        check_closed(x)?;
        Ok(self(x))
    }
}
