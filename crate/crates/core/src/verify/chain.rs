//! Numerical replay of the inequality chain for `Q = z^l R(z) + b_m`.
//!
//! The chain bounds `T(r, F)` for `F = z^l R` by the reduced counting
//! functions of `F` at `∞`, `0` and `-b_m`, and then by
//! `((m - l + 1)/m) T(r, F)`. Every polynomial has zeros, so the term
//! `N̄(r, -b_m; F)` (zeros of `Q`) is never zero; this report checks each link
//! against its closed form and that the resulting inequality holds.

use num_complex::Complex;

use super::claim1::{claim1_shape_check, Claim1Shape};
use super::report::{tail_drift, ComponentSeries, DeviationReport, Theorem, Verdict, VerifyParams};
use super::theorems::describe;
use crate::distribution::profile::validate_grid;
use crate::distribution::{build_profile, QuadratureConfig, TargetAnalysis};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::RationalFunction;
use crate::scalar::Real;
use crate::target::TargetValue;

fn component<T: Real>(name: &str, closed_form: &str, deviation: Vec<T>) -> ComponentSeries<T> {
    let drift = tail_drift(&deviation);
    ComponentSeries {
        name: name.into(),
        closed_form: closed_form.into(),
        deviation,
        tail_drift: drift,
    }
}

pub fn claim1_chain_report<T: Real>(
    q: &Polynomial<T>,
    rgrid: &[T],
    cfg: &QuadratureConfig<T>,
    params: &VerifyParams<T>,
) -> Result<DeviationReport<T>> {
    let d = match claim1_shape_check(q)? {
        Claim1Shape::Chain(d) => d,
        Claim1Shape::Binomial { .. } => return Err(Error::BinomialShape),
    };
    validate_grid(rgrid)?;
    let (m, l) = (T::from_usize_lossy(d.m), T::from_usize_lossy(d.l));
    let zero = TargetValue::real(T::zero());
    let f = RationalFunction::polynomial(d.f.clone());
    let minus_bm = TargetValue::Finite(-d.bm);

    let profiles = build_profile(&f, &[TargetValue::Infinity, minus_bm], rgrid, cfg)?;
    let (t_rows, q_rows) = (&profiles[0].rows, &profiles[1].rows);
    let grid: Vec<T> = t_rows.iter().map(|row| row.r).collect();

    let power = TargetAnalysis::new(
        &RationalFunction::polynomial(Polynomial::monomial(d.l, Complex::new(T::one(), T::zero()))),
        zero,
    )?;
    let r_zeros = TargetAnalysis::new(&RationalFunction::polynomial(d.r.clone()), zero)?;
    let distinct_q_zeros = T::from_usize_lossy(TargetAnalysis::new(&f, minus_bm)?.points().len());

    let ratio = d.chain_ratio();
    let series: Vec<T> = t_rows
        .iter()
        .zip(q_rows)
        .map(|(t, qr)| ratio * t.t + qr.big_nbar - t.t)
        .collect();

    let log_r = |r: T| r.ln();
    let components = vec![
        component(
            "nbar_zero_of_power",
            "Nbar(r,0;z^l) = log r",
            grid.iter()
                .map(|&r| power.integrated_count(r, true) - log_r(r))
                .collect(),
        ),
        component(
            "n_zero_of_r",
            "N(r,0;R) = (m-l) log r + O(1)",
            grid.iter()
                .map(|&r| r_zeros.integrated_count(r, false) - (m - l) * log_r(r))
                .collect(),
        ),
        component(
            "characteristic_of_f",
            "T(r,F) = m log r + O(1)",
            t_rows.iter().map(|row| row.t - m * log_r(row.r)).collect(),
        ),
        component(
            "nbar_minus_bm_of_f",
            "Nbar(r,-b_m;F) = (distinct zeros of Q) log r + O(1)",
            q_rows
                .iter()
                .map(|row| row.big_nbar - distinct_q_zeros * log_r(row.r))
                .collect(),
        ),
    ];

    let margin_ok = grid
        .iter()
        .zip(&series)
        .filter(|(&r, _)| r >= params.margin_from)
        .all(|(_, &s)| s > T::zero());
    let min_margin = grid
        .iter()
        .zip(&series)
        .filter(|(&r, _)| r >= params.margin_from)
        .map(|(_, &s)| s)
        .fold(T::infinity(), T::min);
    let components_ok = components.iter().all(|c| c.tail_drift <= params.chain_drift_tol);

    let mut report = DeviationReport::new(Theorem::Claim1, grid, series)
        .with_context("q", describe(&RationalFunction::polynomial(q.clone())))
        .with_context("m", d.m)
        .with_context("l", d.l)
        .with_param("chain_drift_tol", params.chain_drift_tol)
        .with_param("margin_from", params.margin_from)
        .with_param("abs_tol", cfg.abs_tol)
        .with_metric("chain_ratio", ratio)
        .with_metric("min_margin", min_margin)
        .with_metric("distinct_zeros_of_q", distinct_q_zeros);
    report.components = components;
    report.verdict = Verdict::from_bool(margin_ok && components_ok);
    Ok(report)
}
