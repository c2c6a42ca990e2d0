//! Target functions on `[-1, 1]` and their textual form.
//!
//! Grammar:
//!
//! ```text
//! poly:c0,c1,...,cd     monomial coefficients, ascending powers
//! step:x0/low/high      low for x < x0, high for x > x0, midpoint at x0
//! preset:septic         x^7 - 14x^5 + 49x^3 - 36x
//! preset:unit_step      step:0/-1/1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::cheb::check_closed;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::series::Evaluable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Septic,
    UnitStep,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Septic => "septic",
            Preset::UnitStep => "unit_step",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TargetFn {
    Polynomial(Vec<f64>),
    Step { jump: f64, low: f64, high: f64 },
    Preset(Preset),
}

const SEPTIC: [f64; 8] = [0.0, -36.0, 0.0, 49.0, 0.0, -14.0, 0.0, 1.0];

impl TargetFn {
    pub fn septic() -> Self {
        TargetFn::Preset(Preset::Septic)
    }

    pub fn unit_step() -> Self {
        TargetFn::Preset(Preset::UnitStep)
    }

    /// Validating constructor for steps: the jump must lie inside `(-1, 1)`.
    pub fn step(jump: f64, low: f64, high: f64) -> Result<Self> {
        if !(jump > -1.0 && jump < 1.0) || !low.is_finite() || !high.is_finite() {
            return Err(Error::TargetParse {
                input: format!("step:{jump}/{low}/{high}"),
                reason: "jump must lie in (-1, 1) with finite levels".into(),
            });
        }
        Ok(TargetFn::Step { jump, low, high })
    }

    /// Presets expanded into their underlying polynomial or step.
    pub fn resolved(&self) -> TargetFn {
        match self {
            TargetFn::Preset(Preset::Septic) => TargetFn::Polynomial(SEPTIC.to_vec()),
            TargetFn::Preset(Preset::UnitStep) => TargetFn::Step {
                jump: 0.0,
                low: -1.0,
                high: 1.0,
            },
            other => other.clone(),
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        match self.resolved() {
            TargetFn::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck),
            TargetFn::Step { jump, low, high } => {
                if x < jump {
                    low
                } else if x > jump {
                    high
                } else {
                    0.5 * (low + high)
                }
            }
            TargetFn::Preset(_) => unreachable!("resolved"),
        }
    }

    /// Exact polynomial form, `None` for steps.
    pub fn as_poly(&self) -> Option<Poly> {
        match self.resolved() {
            TargetFn::Polynomial(c) => Poly::from_f64s(&c),
            _ => None,
        }
    }

    /// `(jump, low, high)` for step targets.
    pub fn as_step(&self) -> Option<(f64, f64, f64)> {
        match self.resolved() {
            TargetFn::Step { jump, low, high } => Some((jump, low, high)),
            _ => None,
        }
    }

    /// Interior points where the target is discontinuous.
    pub fn discontinuities(&self) -> Vec<f64> {
        self.as_step().map(|(j, _, _)| vec![j]).unwrap_or_default()
    }
}

impl Evaluable for TargetFn {
    fn eval(&self, x: f64) -> Result<f64> {
        check_closed(x)?;
        Ok(self.value(x))
    }
}

impl fmt::Display for TargetFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetFn::Polynomial(c) => {
                write!(f, "poly:")?;
                for (i, ck) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{ck:?}")?;
                }
                Ok(())
            }
            TargetFn::Step { jump, low, high } => write!(f, "step:{jump:?}/{low:?}/{high:?}"),
            TargetFn::Preset(p) => write!(f, "preset:{}", p.name()),
        }
    }
}

impl FromStr for TargetFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::TargetParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let num = |t: &str| -> Result<f64> {
            let v: f64 = t.trim().parse().map_err(|_| fail(&format!("`{t}` is not a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(fail("numbers must be finite"))
            }
        };
        let (kind, body) = s.split_once(':').ok_or_else(|| fail("expected `kind:args`"))?;
        match kind.trim() {
            "poly" => {
                let c = body.split(',').map(num).collect::<Result<Vec<_>>>()?;
                Ok(TargetFn::Polynomial(c))
            }
            "step" => {
                let parts: Vec<&str> = body.split('/').collect();
                let [x0, low, high] = parts[..] else {
                    return Err(fail("step takes x0/low/high"));
                };
                TargetFn::step(num(x0)?, num(low)?, num(high)?).map_err(|_| fail("jump must lie in (-1, 1)"))
            }
            "preset" => match body.trim() {
                "septic" => Ok(TargetFn::septic()),
                "unit_step" => Ok(TargetFn::unit_step()),
                other => Err(fail(&format!("unknown preset `{other}`"))),
            },
            other => Err(fail(&format!("unknown target kind `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn septic_values() {
        let f = TargetFn::septic();
        assert_eq!(f.value(0.5), -12.3046875);
        assert_eq!(f.value(1.0), 0.0);
        assert_eq!(f.value(-1.0), 0.0);
    }

    #[test]
    fn step_midpoint() {
        let f = TargetFn::step(0.25, -2.0, 4.0).unwrap();
        assert_eq!(f.value(0.25), 1.0);
        assert_eq!(f.value(0.2), -2.0);
        assert_eq!(f.value(0.3), 4.0);
        assert_eq!(TargetFn::unit_step().value(0.0), 0.0);
        assert!(TargetFn::step(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn parses_grammar() {
        assert_eq!("preset:septic".parse::<TargetFn>().unwrap(), TargetFn::septic());
        assert_eq!("preset:unit_step".parse::<TargetFn>().unwrap(), TargetFn::unit_step());
        assert_eq!(
            "poly:1,0,-2.5".parse::<TargetFn>().unwrap(),
            TargetFn::Polynomial(vec![1.0, 0.0, -2.5])
        );
        assert_eq!(
            "step:0/-1/1".parse::<TargetFn>().unwrap(),
            TargetFn::Step { jump: 0.0, low: -1.0, high: 1.0 }
        );
        for bad in ["", "poly", "poly:", "poly:1,x", "step:0/1", "step:2/0/1", "preset:cubic", "sine:1", "poly:inf"] {
            assert!(bad.parse::<TargetFn>().is_err(), "{bad}");
        }
    }

    #[test]
    fn exact_poly_form() {
        let p = TargetFn::septic().as_poly().unwrap();
        assert_eq!(p, Poly::from_i64s(&[0, -36, 0, 49, 0, -14, 0, 1]));
        assert!(TargetFn::unit_step().as_poly().is_none());
    }

    fn arb_target() -> impl Strategy<Value = TargetFn> {
        let finite = prop::num::f64::NORMAL | prop::num::f64::ZERO;
        prop_oneof![
            prop::collection::vec(finite, 1..8).prop_map(TargetFn::Polynomial),
            (-0.999f64..0.999, finite, finite)
                .prop_map(|(j, l, h)| TargetFn::Step { jump: j, low: l, high: h }),
            Just(TargetFn::septic()),
            Just(TargetFn::unit_step()),
        ]
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(t in arb_target()) {
            let text = t.to_string();
            let back: TargetFn = text.parse().unwrap();
            prop_assert_eq!(&back, &t);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
