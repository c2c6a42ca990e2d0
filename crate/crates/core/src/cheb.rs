//! Construction and evaluation of Chebyshev polynomials, and the identities
//! they satisfy: the three-term recurrence, the Chebyshev differential
//! equation `(1 - x^2) y'' - x y' + n^2 y = 0`, Rodrigues' formula, the
//! generating function and parity.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::half_power::HalfPowerTerm;
use crate::poly::Poly;
use crate::series::ChebSeries;

pub(crate) fn check_closed(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfDomain(x))
    }
}

pub(crate) fn check_open(x: f64) -> Result<()> {
    if x > -1.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::NotInterior(x))
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Runs `next = 2x * cur - prev` from the given seeds, returning the first
/// `count` members.
fn three_term(first: Poly, second: Poly, count: usize) -> Vec<Poly> {
    let two_x = Poly::from_i64s(&[0, 2]);
    let mut out = Vec::with_capacity(count);
    let (mut prev, mut cur) = (first, second);
    for _ in 0..count {
        let next = &(&two_x * &cur) - &prev;
        out.push(prev);
        prev = cur;
        cur = next;
    }
    out
}

/// `T_0..=T_n`, built by the recurrence `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn chebyshev_t_upto(n: usize) -> Vec<Poly> {
    three_term(Poly::one(), Poly::x(), n + 1)
}

/// `T_n` with exact integer coefficients.
pub fn chebyshev_t(n: usize) -> Poly {
    chebyshev_t_upto(n).pop().expect("n + 1 >= 1 terms")
}

/// `U_0..=U_n`, second kind: `U_0 = 1`, `U_1 = 2x`, same recurrence.
pub fn chebyshev_u_upto(n: usize) -> Vec<Poly> {
    three_term(Poly::one(), Poly::from_i64s(&[0, 2]), n + 1)
}

/// `U_n`, satisfying `U_n(cos t) = sin((n+1) t) / sin t`.
pub fn chebyshev_u(n: usize) -> Poly {
    chebyshev_u_upto(n).pop().expect("n + 1 >= 1 terms")
}

/// `T_n(x) = cos(n arccos x)` on the closed interval.
pub fn eval_trig(n: usize, x: f64) -> Result<f64> {
    check_closed(x)?;
    Ok((n as f64 * x.acos()).cos())
}

/// `sin((n+1) t) / sin t` at `x = cos t`; undefined at the endpoints.
pub fn eval_u_trig(n: usize, x: f64) -> Result<f64> {
    check_open(x)?;
    let t = x.acos();
    Ok(((n + 1) as f64 * t).sin() / t.sin())
}

/// `sum C_n T_n(x)` by Clenshaw's backward recurrence.
pub fn clenshaw(series: &ChebSeries, x: f64) -> Result<f64> {
    check_closed(x)?;
    let c = series.coeffs();
    let (mut b1, mut b2) = (0.0_f64, 0.0_f64);
    for &ck in c[1..].iter().rev() {
        let b0 = ck + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    Ok(c[0] + x * b1 - b2)
}

/// `(1 - x^2) y'' - x y' + n^2 y` for an arbitrary polynomial `y`.
pub fn chebyshev_operator(y: &Poly, n: usize) -> Poly {
    let d1 = y.derivative();
    let d2 = d1.derivative();
    let n2 = int((n * n) as i64);
    &(&(&Poly::from_i64s(&[1, 0, -1]) * &d2) - &d1.shift(1)) + &y.scale(&n2)
}

/// The Chebyshev differential operator applied to `T_n`. Always zero.
pub fn ode_residual(n: usize) -> Poly {
    chebyshev_operator(&chebyshev_t(n), n)
}

/// The differential operator applied to `sqrt(1 - x^2) U_{n-1}(x)`, kept
/// exact as a half-power term. Always zero for `n >= 1`.
pub fn second_solution_residual(n: usize) -> Result<HalfPowerTerm> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let y = HalfPowerTerm::new(chebyshev_u(n - 1), 1);
    let d1 = y.derivative();
    let d2 = d1.derivative();
    let weighted_d2 = HalfPowerTerm::new(d2.poly().clone(), d2.half_exponent() + 2);
    let x_d1 = d1.mul_poly(&Poly::from_i64s(&[0, -1]));
    let scaled = y.scale(&int((n * n) as i64));
    Ok(&(&weighted_d2 + &x_d1) + &scaled)
}

/// Value of `(1 - x^2) y'' - x y' + n^2 y` at `x` for the general solution
/// `y = b1 T_n + b2 sqrt(1 - x^2) U_{n-1}`.
pub fn general_solution_residual(n: usize, b1: f64, b2: f64, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    check_open(x)?;
    let t = chebyshev_t(n);
    let t1 = t.derivative();
    let t2 = t1.derivative();
    let h = HalfPowerTerm::new(chebyshev_u(n - 1), 1);
    let h1 = h.derivative();
    let h2 = h1.derivative();

    let y = b1 * t.eval_exact_f64(x) + b2 * h.eval_f64(x);
    let dy = b1 * t1.eval_exact_f64(x) + b2 * h1.eval_f64(x);
    let ddy = b1 * t2.eval_exact_f64(x) + b2 * h2.eval_f64(x);
    let n2 = (n * n) as f64;
    Ok((1.0 - x * x) * ddy - x * dy + n2 * y)
}

/// `(2n-1)(2n-3)...1`, the empty product being 1.
pub fn odd_double_factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k - 1))
}

/// `T_n` from Rodrigues' formula
/// `sqrt(1-x^2) / ((-1)^n (2n-1)!!) * d^n/dx^n (1-x^2)^(n - 1/2)`,
/// evaluated exactly through half-power differentiation.
pub fn rodrigues(n: usize) -> Poly {
    let start = HalfPowerTerm::pure(2 * n as i64 - 1);
    let d = start.nth_derivative(n);
    debug_assert_eq!(d.half_exponent(), -1);
    // multiplying by sqrt(1 - x^2) cancels the remaining (1 - x^2)^(-1/2)
    let mut denom = BigRational::from_integer(odd_double_factorial(n));
    if n % 2 == 1 {
        denom = -denom;
    }
    d.poly().scale(&denom.recip())
}

/// `(1 - z x) / (1 - 2 z x + z^2)`.
pub fn generating_closed(x: f64, z: f64) -> Result<f64> {
    check_closed(x)?;
    if z.is_nan() || z.abs() >= 1.0 {
        return Err(Error::GeneratingRadius(z));
    }
    Ok((1.0 - z * x) / (1.0 - 2.0 * z * x + z * z))
}

/// `sum_{n=0}^{terms} T_n(x) z^n`, with `T_n(x)` from the recurrence.
pub fn generating_partial(x: f64, z: f64, terms: usize) -> Result<f64> {
    check_closed(x)?;
    let (mut t_prev, mut t_cur) = (1.0_f64, x);
    let mut zp = 1.0;
    let mut sum = 1.0;
    for _ in 1..=terms {
        zp *= z;
        sum += t_cur * zp;
        let next = 2.0 * x * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = next;
    }
    Ok(sum)
}

/// Taylor coefficients in `z` of the closed generating function at fixed
/// `x`, `c_0..c_{count-1}`, extracted by the trapezoidal Cauchy integral on
/// the circle `|z| = 0.9`. They reproduce `T_n(x)` independently of any
/// recurrence.
pub fn generating_coefficients(x: f64, count: usize) -> Result<Vec<f64>> {
    check_closed(x)?;
    const RADIUS: f64 = 0.9;
    const SAMPLES: usize = 512;
    let values: Vec<Complex64> = (0..SAMPLES)
        .map(|j| {
            let z = Complex64::from_polar(RADIUS, 2.0 * PI * j as f64 / SAMPLES as f64);
            (1.0 - z * x) / (1.0 - 2.0 * z * x + z * z)
        })
        .collect();
    Ok((0..count)
        .map(|n| {
            let sum: Complex64 = values
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let phase = -2.0 * PI * ((j * n) % SAMPLES) as f64 / SAMPLES as f64;
                    v * Complex64::from_polar(1.0, phase)
                })
                .sum();
            sum.re / (SAMPLES as f64 * RADIUS.powi(n as i32))
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity of a polynomial read off its coefficients, `None` when mixed.
    /// The zero polynomial reports `Even`.
    pub fn of_poly(p: &Poly) -> Option<Parity> {
        if p.is_even() {
            Some(Parity::Even)
        } else if p.is_odd() {
            Some(Parity::Odd)
        } else {
            None
        }
    }
}

/// Parity of `T_n`. Cross-checks the coefficient pattern of the constructed
/// polynomial against the parity of `n`.
pub fn parity(n: usize) -> Parity {
    let expected = Parity::of(n);
    let observed = Parity::of_poly(&chebyshev_t(n));
    assert_eq!(observed, Some(expected), "T_{n} has mixed parity");
    expected
}

/// True when the rational sample point `x` satisfies `p(-x) = (-1)^n p(x)`.
pub fn reflects_with_sign(p: &Poly, n: usize, x: &BigRational) -> bool {
    let at = p.eval(x);
    let mirrored = p.eval(&-x);
    if n.is_multiple_of(2) {
        mirrored == at
    } else {
        mirrored == -at
    }
}
