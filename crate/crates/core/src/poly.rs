//! Dense polynomials with exact rational coefficients in the monomial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `coeffs[i]` is the coefficient of `x^i`. The last stored coefficient is
/// never zero; the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Exact conversion of binary floating-point coefficients.
    ///
    /// Returns `None` if any coefficient is not finite.
    pub fn from_f64s(coeffs: &[f64]) -> Option<Self> {
        coeffs
            .iter()
            .map(|&c| BigRational::from_float(c))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates exactly at the binary value of `x`, then rounds once.
    pub fn eval_exact_f64(&self, x: f64) -> f64 {
        match BigRational::from_float(x) {
            Some(xr) => self.eval(&xr).to_f64().unwrap_or(f64::NAN),
            None => f64::NAN,
        }
    }

    /// Floating-point Horner evaluation. Suffers cancellation for large
    /// degrees; prefer [`Poly::eval_exact_f64`] when checking identities.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64s().iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// True when every odd-power coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// True when every even-power coefficient vanishes.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

/// Highest power first, e.g. `16x^5 - 20x^3 + 5x`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() || k == 0 {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let p = Poly::new(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::new(vec![q(0, 1)]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_examples() {
        let x = Poly::x();
        assert_eq!(&x * &x, Poly::from_i64s(&[0, 0, 1]));
        assert_eq!(
            Poly::from_i64s(&[-1, 0, 2]) + Poly::one(),
            Poly::from_i64s(&[0, 0, 2])
        );
        let two_x = Poly::from_i64s(&[0, 2]);
        assert_eq!(&(&two_x * &x) - &Poly::one(), Poly::from_i64s(&[-1, 0, 2]));
        // cancellation of the leading term keeps the invariant
        let p = Poly::from_i64s(&[1, 2, 3]);
        let r = &p - &Poly::from_i64s(&[0, 0, 3]);
        assert_eq!(r.degree(), Some(1));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(Poly::from_i64s(&[0, 0, 0, 1]).derivative(), Poly::from_i64s(&[0, 0, 3]));
        assert!(Poly::from_i64s(&[7]).derivative().is_zero());
        assert!(Poly::zero().derivative().is_zero());
        assert_eq!(
            Poly::from_i64s(&[0, -3, 0, 4]).derivative(),
            Poly::from_i64s(&[-3, 0, 12])
        );
    }

    #[test]
    fn exact_and_float_evaluation() {
        let p = Poly::from_i64s(&[1, 0, -8, 0, 8]);
        assert_eq!(p.eval(&q(1, 2)), q(-1, 2));
        assert_eq!(p.eval_exact_f64(0.5), -0.5);
        assert_eq!(p.eval_f64(0.5), -0.5);
    }

    #[test]
    fn parity_helpers() {
        let t4 = Poly::from_i64s(&[1, 0, -8, 0, 8]);
        assert!(t4.is_even() && !t4.is_odd());
        assert_eq!(t4.reflect(), t4);
        let t5 = Poly::from_i64s(&[0, 5, 0, -20, 0, 16]);
        assert!(t5.is_odd() && !t5.is_even());
        assert_eq!(t5.reflect(), -&t5);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64s(&[0, 5, 0, -20, 0, 16]).to_string(), "16x^5 - 20x^3 + 5x");
        assert_eq!(Poly::from_i64s(&[-1, 0, 2]).to_string(), "2x^2 - 1");
        assert_eq!(Poly::new(vec![q(1, 2), q(-1, 1)]).to_string(), "-x + (1/2)");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn from_f64s_is_exact() {
        let p = Poly::from_f64s(&[0.1, -2.5]).unwrap();
        assert_eq!(p.coeff(1), q(-5, 2));
        assert_eq!(p.to_f64s(), vec![0.1, -2.5]);
        assert!(Poly::from_f64s(&[f64::NAN]).is_none());
    }
}
