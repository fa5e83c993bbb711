//! Verifiers for the first and second fundamental theorems, the polynomial
//! growth lemma and the zero-free contradiction.

use num_complex::Complex;

use super::report::{DeviationReport, Theorem, Verdict, VerifyParams};
use crate::distribution::profile::validate_grid;
use crate::distribution::{build_profile, QuadratureConfig, TargetAnalysis};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, TRIM_RELATIVE};
use crate::rational::RationalFunction;
use crate::scalar::{log_plus, Real};
use crate::target::TargetValue;

pub(crate) fn describe<T: Real>(f: &RationalFunction<T>) -> String {
    let fmt = |p: &Polynomial<T>| {
        let terms: Vec<String> = p.coeffs().iter().map(|c| format!("[{}, {}]", c.re, c.im)).collect();
        format!("[{}]", terms.join(", "))
    };
    if f.is_polynomial() && f.denominator().coeff(0) == Complex::new(T::one(), T::zero()) {
        fmt(f.numerator())
    } else {
        format!("{} / {}", fmt(f.numerator()), fmt(f.denominator()))
    }
}

/// `log|c|` where `c` is the leading coefficient of the Laurent expansion of
/// `f - a` at the origin.
pub fn jensen_constant<T: Real>(f: &RationalFunction<T>, a: Complex<T>) -> Result<T> {
    let f = f.reduced()?;
    let shifted = f.numerator() - &f.denominator().scale_by(a);
    if shifted.is_zero() {
        return Err(Error::FunctionIdenticallyA);
    }
    let rel = T::lit(TRIM_RELATIVE);
    let top = shifted.coeff(shifted.origin_multiplicity(rel));
    let bottom = f.denominator().coeff(f.denominator().origin_multiplicity(rel));
    Ok((top / bottom).norm().ln())
}

/// Limit of `m(r,a) + N(r,a) - T(r,f)` as `r → ∞`:
/// `-log|c| + log⁺|f(∞) - a| - log⁺|f(∞)|` (the correction vanishes when
/// `f` has a pole at infinity).
pub fn fft_limit<T: Real>(f: &RationalFunction<T>, a: Complex<T>) -> Result<T> {
    let f = f.reduced()?;
    let c = jensen_constant(&f, a)?;
    let correction = match f.value_at_infinity() {
        Some(l) => log_plus((l - a).norm()) - log_plus(l.norm()),
        None => T::zero(),
    };
    Ok(correction - c)
}

/// First fundamental theorem: `m(r,a) + N(r,a) - T(r,f)` must be bounded.
pub fn verify_first_fundamental<T: Real>(
    f: &RationalFunction<T>,
    a: TargetValue<T>,
    rgrid: &[T],
    cfg: &QuadratureConfig<T>,
    params: &VerifyParams<T>,
) -> Result<DeviationReport<T>> {
    let profiles = build_profile(f, &[a], rgrid, cfg)?;
    let rows = &profiles[0].rows;
    let series: Vec<T> = rows.iter().map(|row| row.m_plus_n - row.t).collect();
    let grid: Vec<T> = rows.iter().map(|row| row.r).collect();
    let mut report = DeviationReport::new(Theorem::Fft, grid, series)
        .with_context("f", describe(f))
        .with_context("a", a)
        .with_param("drift_tol", params.drift_tol)
        .with_param("abs_tol", cfg.abs_tol);
    if let TargetValue::Finite(value) = a {
        let limit = fft_limit(f, value)?;
        let tail = report.tail_value();
        report = report
            .with_metric("jensen_log_c", jensen_constant(f, value)?)
            .with_metric("expected_tail", limit)
            .with_metric("tail_value", tail)
            .with_metric("jensen_gap", tail - limit);
    }
    report.verdict = Verdict::from_bool(report.sup_abs.is_finite() && report.tail_drift <= params.drift_tol);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeGrowth<T> {
    pub slope: T,
    pub intercept: T,
    /// Largest absolute residual of the fit over the tail window.
    pub residual: T,
    pub degree: usize,
    /// Series `T(r, P) - deg P log r` over the whole grid.
    pub report: DeviationReport<T>,
}

/// Least-squares slope of `T(r, P)` against `log r` over the tail half.
pub fn verify_degree_growth<T: Real>(
    p: &Polynomial<T>,
    rgrid: &[T],
    cfg: &QuadratureConfig<T>,
    params: &VerifyParams<T>,
) -> Result<DegreeGrowth<T>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    validate_grid(rgrid)?;
    let (first, last) = (rgrid[0], rgrid[rgrid.len() - 1]);
    if rgrid.len() < 4 || last / first < T::lit(100.0) {
        return Err(Error::InvalidGrid(
            "degree fit needs at least 4 radii spanning two decades".into(),
        ));
    }
    let f = RationalFunction::polynomial(p.clone());
    let profiles = build_profile(&f, &[TargetValue::Infinity], rgrid, cfg)?;
    let rows = &profiles[0].rows;

    let tail = &rows[super::report::tail_start(rows.len())..];
    let k = T::from_usize_lossy(tail.len());
    let (sx, sy) = tail
        .iter()
        .fold((T::zero(), T::zero()), |(sx, sy), row| (sx + row.r.ln(), sy + row.t));
    let (mx, my) = (sx / k, sy / k);
    let (sxy, sxx) = tail.iter().fold((T::zero(), T::zero()), |(sxy, sxx), row| {
        let dx = row.r.ln() - mx;
        (sxy + dx * (row.t - my), sxx + dx * dx)
    });
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = tail
        .iter()
        .map(|row| (row.t - slope * row.r.ln() - intercept).abs())
        .fold(T::zero(), T::max);

    let degree = p.degree();
    let deg = T::from_usize_lossy(degree);
    let series = rows.iter().map(|row| row.t - deg * row.r.ln()).collect();
    let grid = rows.iter().map(|row| row.r).collect();
    let mut report = DeviationReport::new(Theorem::Degree, grid, series)
        .with_context("p", describe(&f))
        .with_param("slope_tol", params.slope_tol)
        .with_param("abs_tol", cfg.abs_tol)
        .with_metric("slope", slope)
        .with_metric("intercept", intercept)
        .with_metric("residual", residual)
        .with_metric("degree", deg);
    report.verdict = Verdict::from_bool(slope.round() == deg && (slope - deg).abs() <= params.slope_tol);
    Ok(DegreeGrowth {
        slope,
        intercept,
        residual,
        degree,
        report,
    })
}

fn distinct_targets<T: Real>(targets: &[TargetValue<T>]) -> bool {
    for (i, a) in targets.iter().enumerate() {
        for b in &targets[i + 1..] {
            let same = match (a, b) {
                (TargetValue::Infinity, TargetValue::Infinity) => true,
                (TargetValue::Finite(x), TargetValue::Finite(y)) => {
                    (*x - *y).norm() <= T::lit(1e-12) * x.norm().max(y.norm()).max(T::one())
                }
                _ => false,
            };
            if same {
                return false;
            }
        }
    }
    true
}

/// Second fundamental theorem: `Σ N̄(r, a_j) - (q - 2) T(r, f)` must stay
/// above `-(ε_S T + C_S log(r + 2) + C_S)`.
pub fn verify_second_fundamental<T: Real>(
    f: &RationalFunction<T>,
    targets: &[TargetValue<T>],
    rgrid: &[T],
    cfg: &QuadratureConfig<T>,
    params: &VerifyParams<T>,
) -> Result<DeviationReport<T>> {
    if targets.len() < 3 {
        return Err(Error::TooFewTargets(targets.len()));
    }
    if !distinct_targets(targets) {
        return Err(Error::DuplicateTargets);
    }
    let reduced = f.reduced()?;
    let q = targets.len();
    let c_s = params.c_s.unwrap_or_else(|| {
        T::lit(4.0) * T::from_usize_lossy(q + reduced.numerator().degree() + reduced.denominator().degree())
    });
    let profiles = build_profile(&reduced, targets, rgrid, cfg)?;
    let weight = T::from_usize_lossy(q - 2);
    let mut series = Vec::with_capacity(rgrid.len());
    let mut min_margin = T::infinity();
    let mut grid = Vec::with_capacity(rgrid.len());
    for i in 0..profiles[0].rows.len() {
        let row0 = &profiles[0].rows[i];
        let sum = profiles.iter().fold(T::zero(), |acc, p| acc + p.rows[i].big_nbar);
        let slack = sum - weight * row0.t;
        let allowance = params.eps_s * row0.t + c_s * (row0.r + T::lit(2.0)).ln() + c_s;
        min_margin = min_margin.min(slack + allowance);
        series.push(slack);
        grid.push(row0.r);
    }
    let targets_label: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
    let mut report = DeviationReport::new(Theorem::Smt, grid, series)
        .with_context("f", describe(f))
        .with_context("targets", targets_label.join(","))
        .with_param("eps_s", params.eps_s)
        .with_param("c_s", c_s)
        .with_param("abs_tol", cfg.abs_tol)
        .with_metric("min_margin", min_margin);
    report.verdict = Verdict::from_bool(min_margin >= T::zero());
    Ok(report)
}

/// `N(r, 0; P) - deg P log r` must settle to a constant: a zero-free
/// polynomial would instead have `N ≡ 0`.
pub fn remark_fft_check<T: Real>(
    p: &Polynomial<T>,
    rgrid: &[T],
    cfg: &QuadratureConfig<T>,
    params: &VerifyParams<T>,
) -> Result<DeviationReport<T>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    validate_grid(rgrid)?;
    if rgrid.is_empty() {
        return Err(Error::InvalidGrid("empty grid".into()));
    }
    let f = RationalFunction::polynomial(p.clone());
    let zeros = TargetAnalysis::new(&f, TargetValue::real(T::zero()))?;
    let deg = T::from_usize_lossy(p.degree());
    let series = rgrid
        .iter()
        .map(|&r| zeros.integrated_count(r, false) - deg * r.ln())
        .collect();
    let rmax = rgrid[rgrid.len() - 1];
    let mut report = DeviationReport::new(Theorem::Remark, rgrid.to_vec(), series)
        .with_context("p", describe(&f))
        .with_param("drift_tol", params.drift_tol)
        .with_metric("m_zero_at_rmax", zeros.proximity(rmax, cfg)?)
        .with_metric(
            "zero_count",
            T::from_usize_lossy(zeros.points().iter().map(|z| z.multiplicity).sum()),
        );
    report.verdict = Verdict::from_bool(report.tail_drift <= params.drift_tol);
    Ok(report)
}
