use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_complex, Real};

/// A value `a` in the extended plane: a finite complex number or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetValue<T> {
    Finite(Complex<T>),
    Infinity,
}

impl<T: Real> TargetValue<T> {
    pub fn finite(c: Complex<T>) -> Result<Self> {
        if is_finite_complex(c) {
            Ok(TargetValue::Finite(c))
        } else {
            Err(Error::NonFinite("target value"))
        }
    }

    pub fn real(x: T) -> Self {
        TargetValue::Finite(Complex::new(x, T::zero()))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, TargetValue::Infinity)
    }

    pub fn as_finite(&self) -> Option<Complex<T>> {
        match *self {
            TargetValue::Finite(c) => Some(c),
            TargetValue::Infinity => None,
        }
    }
}

impl<T: Real> fmt::Display for TargetValue<T> {
    /// Writes the literal grammar accepted by the command line: `inf`, `a`,
    /// `bi`, `a+bi`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TargetValue::Infinity => f.write_str("inf"),
            TargetValue::Finite(c) if c.im == T::zero() => write!(f, "{}", c.re),
            TargetValue::Finite(c) if c.re == T::zero() => write!(f, "{}i", c.im),
            TargetValue::Finite(c) => {
                let sign = if c.im < T::zero() { '-' } else { '+' };
                write!(f, "{}{}{}i", c.re, sign, c.im.abs())
            }
        }
    }
}

fn parse_real(s: &str, literal: &str) -> Result<f64> {
    let bad = || Error::Parse(format!("invalid complex literal '{literal}'"));
    if s.is_empty() || s.chars().any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E') {
        return Err(bad());
    }
    let x: f64 = s.parse().map_err(|_| bad())?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(bad())
    }
}

fn parse_imaginary(s: &str, literal: &str) -> Result<f64> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s, literal),
    }
}

impl<T: Real> FromStr for TargetValue<T> {
    type Err = Error;

    /// Parses `inf`, `a`, `bi`, `i`, `a+bi` or `a-bi`, ignoring whitespace.
    fn from_str(literal: &str) -> Result<Self> {
        let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        if s.eq_ignore_ascii_case("inf") || s == "\u{221e}" {
            return Ok(TargetValue::Infinity);
        }
        let (re, im) = match s.strip_suffix('i') {
            None => (parse_real(&s, literal)?, 0.0),
            Some(body) => {
                let bytes = body.as_bytes();
                let split = (1..bytes.len())
                    .rev()
                    .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
                match split {
                    Some(k) => (parse_real(&body[..k], literal)?, parse_imaginary(&body[k..], literal)?),
                    None => (0.0, parse_imaginary(body, literal)?),
                }
            }
        };
        TargetValue::finite(Complex::new(T::lit(re), T::lit(im)))
    }
}

/// Parses a comma-separated list of target literals; the list must not be
/// empty.
pub fn parse_targets<T: Real>(list: &str) -> Result<Vec<TargetValue<T>>> {
    if list.trim().is_empty() {
        return Err(Error::Parse("empty target list".into()));
    }
    list.split(',').map(str::parse).collect()
}
