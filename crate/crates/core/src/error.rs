use thiserror::Error;

use crate::quadrature::RuleKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("x = {0} lies outside [-1, 1]")]
    OutOfDomain(f64),
    #[error("x = {0} must lie strictly inside (-1, 1)")]
    NotInterior(f64),
    #[error("generating function needs |z| < 1, got z = {0}")]
    GeneratingRadius(f64),
    #[error("the second solution needs n >= 1")]
    ZeroOrder,
    #[error("a quadrature rule needs at least one point")]
    EmptyRule,
    #[error("unsupported Gauss-Legendre order {0} (supported: 1..=64)")]
    UnsupportedOrder(usize),
    #[error("invalid breakpoints: {0}")]
    InvalidBreakpoints(&'static str),
    #[error("expected a {expected:?} rule, got {actual:?}")]
    WrongRuleKind { expected: RuleKind, actual: RuleKind },
    #[error("integrand is not finite at x = {0}")]
    NonFinite(f64),
    #[error("rule size {rule_size} cannot resolve {terms} coefficients")]
    RuleTooSmall { rule_size: usize, terms: usize },
    #[error("invalid series: {0}")]
    InvalidSeries(&'static str),
    #[error("target is not a step function")]
    NotAStep,
    #[error("window {window} right of x0 = {x0} leaves [-1, 1]")]
    BadWindow { x0: f64, window: f64 },
    #[error("grid needs at least 2 points, got {0}")]
    GridTooSmall(usize),
    #[error("invalid target `{input}`: {reason}")]
    TargetParse { input: String, reason: String },
}
