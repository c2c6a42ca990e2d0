//! Terms of the form `p(x) * (1 - x^2)^(m/2)` with `m` odd.
//!
//! Differentiation keeps `m` odd:
//! `d/dx [p (1-x^2)^(m/2)] = [p' (1-x^2) - m x p] (1-x^2)^((m-2)/2)`,
//! so repeated derivatives of half-integer powers of `1 - x^2` stay exact.

use std::ops::Add;

use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPowerTerm {
    p: Poly,
    m: i64,
}

/// `1 - x^2`.
fn one_minus_x2() -> Poly {
    Poly::from_i64s(&[1, 0, -1])
}

impl HalfPowerTerm {
    /// # Panics
    ///
    /// If `m` is even.
    pub fn new(p: Poly, m: i64) -> Self {
        assert!(m % 2 != 0, "half-power exponent must be odd, got {m}");
        HalfPowerTerm { p, m }
    }

    /// `(1 - x^2)^(m/2)`.
    pub fn pure(m: i64) -> Self {
        HalfPowerTerm::new(Poly::one(), m)
    }

    pub fn poly(&self) -> &Poly {
        &self.p
    }

    /// Twice the exponent of `1 - x^2`.
    pub fn half_exponent(&self) -> i64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    pub fn derivative(&self) -> HalfPowerTerm {
        let m = BigRational::from_integer(self.m.into());
        let left = &self.p.derivative() * &one_minus_x2();
        let right = self.p.shift(1).scale(&m);
        HalfPowerTerm {
            p: &left - &right,
            m: self.m - 2,
        }
    }

    pub fn nth_derivative(&self, n: usize) -> HalfPowerTerm {
        (0..n).fold(self.clone(), |t, _| t.derivative())
    }

    /// Rewrites the term with a smaller exponent `target <= m` of the same
    /// parity by absorbing whole powers of `1 - x^2` into the polynomial.
    ///
    /// # Panics
    ///
    /// If `target > m` or has the wrong parity.
    pub fn lowered_to(&self, target: i64) -> HalfPowerTerm {
        assert!(
            target <= self.m && (self.m - target) % 2 == 0,
            "cannot lower exponent {} to {target}",
            self.m
        );
        let base = one_minus_x2();
        let steps = (self.m - target) / 2;
        let p = (0..steps).fold(self.p.clone(), |acc, _| &acc * &base);
        HalfPowerTerm { p, m: target }
    }

    pub fn mul_poly(&self, q: &Poly) -> HalfPowerTerm {
        HalfPowerTerm {
            p: &self.p * q,
            m: self.m,
        }
    }

    pub fn scale(&self, c: &BigRational) -> HalfPowerTerm {
        HalfPowerTerm {
            p: self.p.scale(c),
            m: self.m,
        }
    }

    /// Floating-point value at `x`, for `|x| < 1` (or `|x| <= 1` when `m > 0`).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let s = (1.0 - x * x).sqrt();
        self.p.eval_exact_f64(x) * s.powi(self.m as i32)
    }
}

impl Add for &HalfPowerTerm {
    type Output = HalfPowerTerm;

    fn add(self, rhs: &HalfPowerTerm) -> HalfPowerTerm {
        let m = self.m.min(rhs.m);
        let a = self.lowered_to(m);
        let b = rhs.lowered_to(m);
        HalfPowerTerm { p: &a.p + &b.p, m }
    }
}

impl Zero for HalfPowerTerm {
    fn zero() -> Self {
        HalfPowerTerm {
            p: Poly::zero(),
            m: 1,
        }
    }

    fn is_zero(&self) -> bool {
        self.p.is_zero()
    }
}

impl Add for HalfPowerTerm {
    type Output = HalfPowerTerm;

    fn add(self, rhs: HalfPowerTerm) -> HalfPowerTerm {
        &self + &rhs
    }
}
