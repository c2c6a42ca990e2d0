//! Chebyshev polynomials of the first and second kind.
//!
//! Two evaluation paths live side by side:
//!
//! * an exact one, built on [`Poly`] with arbitrary-precision rational
//!   coefficients, used to check algebraic identities (the three-term
//!   recurrence, the Chebyshev differential equation, Rodrigues' formula,
//!   parity) with no tolerance at all;
//! * a floating-point one ([`eval_trig`], [`clenshaw`], [`quadrature`],
//!   [`approx`]) used for series fitting, Fourier comparisons and error
//!   metrics on `[-1, 1]`.

pub mod approx;
pub mod cheb;
mod error;
pub mod half_power;
pub mod poly;
pub mod quadrature;
pub mod series;
pub mod target;

pub use approx::{
    cheb_coefficients, cheb_to_monomial, error_metrics, fourier_coefficients, gibbs_overshoot,
    monomial_to_cheb, monomial_to_cheb_exact, parseval_gap, ErrorMetrics,
};
pub use cheb::{
    chebyshev_t, chebyshev_u, clenshaw, eval_trig, general_solution_residual,
    generating_closed, generating_coefficients, generating_partial, ode_residual, parity,
    rodrigues, Parity,
};
pub use error::{Error, Result};
pub use half_power::HalfPowerTerm;
pub use poly::Poly;
pub use quadrature::{QuadRule, RuleKind};
pub use series::{ChebSeries, Evaluable, FourierSeries};
pub use target::{Preset, TargetFn};
