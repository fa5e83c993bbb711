use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// First fundamental theorem.
    Fft,
    /// Second fundamental theorem.
    Smt,
    /// `T(r, P) = deg P log r + O(1)`.
    Degree,
    /// Inequality chain for polynomials without a `z` term.
    Claim1,
    /// `N(r, 0; P)` carries the full `deg P log r` growth.
    Remark,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Fft => "fft",
            Theorem::Smt => "smt",
            Theorem::Degree => "degree",
            Theorem::Claim1 => "claim1",
            Theorem::Remark => "remark",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// Tolerances and allowances shared by the verifiers.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyParams<T> {
    /// Allowed tail drift of an `O(1)` series.
    pub drift_tol: T,
    /// Allowed tail drift of the claim-1 chain components.
    pub chain_drift_tol: T,
    /// Allowed distance of a fitted growth slope from the degree.
    pub slope_tol: T,
    /// Relative part `ε_S` of the `S(r, f)` allowance.
    pub eps_s: T,
    /// Absolute/logarithmic part `C_S`; `None` means `4 (q + deg num + deg den)`.
    pub c_s: Option<T>,
    /// The claim-1 margin must be positive from this radius on.
    pub margin_from: T,
}

impl<T: Real> Default for VerifyParams<T> {
    fn default() -> Self {
        Self {
            drift_tol: T::lit(1e-3),
            chain_drift_tol: T::lit(1e-2),
            slope_tol: T::lit(1e-3),
            eps_s: T::zero(),
            c_s: None,
            margin_from: T::lit(10.0),
        }
    }
}

/// A named sub-series: measured quantity minus its closed form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentSeries<T> {
    pub name: String,
    pub closed_form: String,
    pub deviation: Vec<T>,
    pub tail_drift: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeviationReport<T> {
    pub theorem: Theorem,
    pub context: BTreeMap<String, String>,
    pub rgrid: Vec<T>,
    pub series: Vec<T>,
    pub sup_abs: T,
    pub tail_drift: T,
    pub verdict: Verdict,
    pub params: BTreeMap<String, T>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metrics: BTreeMap<String, T>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentSeries<T>>,
}

/// First index of the tail window (last half of the grid).
pub fn tail_start(len: usize) -> usize {
    len / 2
}

/// `max |s(r) - s(r_max)|` over the tail window.
pub fn tail_drift<T: Real>(series: &[T]) -> T {
    let Some(&last) = series.last() else {
        return T::zero();
    };
    series[tail_start(series.len())..]
        .iter()
        .map(|&s| (s - last).abs())
        .fold(T::zero(), T::max)
}

impl<T: Real> DeviationReport<T> {
    /// Report with `sup_abs` and `tail_drift` filled in; verdict starts as
    /// fail until the caller decides.
    pub fn new(theorem: Theorem, rgrid: Vec<T>, series: Vec<T>) -> Self {
        let sup_abs = series.iter().map(|s| s.abs()).fold(T::zero(), T::max);
        let drift = tail_drift(&series);
        Self {
            theorem,
            context: BTreeMap::new(),
            rgrid,
            series,
            sup_abs,
            tail_drift: drift,
            verdict: Verdict::Fail,
            params: BTreeMap::new(),
            metrics: BTreeMap::new(),
            components: Vec::new(),
        }
    }

    pub fn with_context(mut self, key: &str, value: impl ToString) -> Self {
        self.context.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_param(mut self, key: &str, value: T) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_metric(mut self, key: &str, value: T) -> Self {
        self.metrics.insert(key.to_string(), value);
        self
    }

    /// Value of the series at the largest radius.
    pub fn tail_value(&self) -> T {
        self.series.last().copied().unwrap_or_else(T::zero)
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}
