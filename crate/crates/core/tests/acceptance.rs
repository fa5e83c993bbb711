//! Acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p nevanlinna --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nevanlinna::corpus::Corpus;
use nevanlinna::verify::fft_limit;
use nevanlinna::{
    build_profile, claim1_chain_report, counting_n, fta_witness, log_grid, proximity_m, remark_fft_check,
    verify_degree_growth, verify_first_fundamental, verify_second_fundamental, winding_count, Complex64, Polynomial64,
    Quadrature64, Rational64, Target64, VerifyParams,
};

const SEED: u64 = 0x5eed_2024;

const SLOPE_TOL: f64 = 1e-3;
const DRIFT_TOL: f64 = 1e-3;
const JENSEN_TAIL_TOL: f64 = 1e-6;
const SMT_CLOSED_FORM_TOL: f64 = 5e-3;
const CHAIN_DRIFT_TOL: f64 = 1e-2;
const CHAIN_MARGIN_FROM: f64 = 10.0;
const WITNESS_RELATIVE_RESIDUAL: f64 = 1e-8;
const WITNESS_SOLVER_TOL: f64 = 1e-10;
const LINEAR_VANISH_RELATIVE: f64 = 1e-9;
const COUNTING_ORACLE_TOL: f64 = 1e-9;
const JENSEN_IDENTITY_TOL: f64 = 1e-7;
const MONOTONE_SLACK: f64 = 1e-9;
const SHIFT_ROOT_RELATIVE: f64 = 1e-10;

const DEGREE_BUDGET: Duration = Duration::from_secs(60);
const FFT_BUDGET: Duration = Duration::from_secs(120);
const WITNESS_BUDGET: Duration = Duration::from_secs(120);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn standard_grid() -> Vec<f64> {
    log_grid(1.0, 1e4, 32).unwrap()
}

fn degree_recovery() -> Outcome {
    let start = Instant::now();
    let mut corpus = Corpus::new(SEED);
    let grid = log_grid(1e2, 1e4, 32).unwrap();
    let (cfg, params) = (Quadrature64::default(), VerifyParams::default());
    let mut worst: f64 = 0.0;
    let mut bad = 0;
    for degree in 1..=10 {
        for _ in 0..5 {
            let p: Polynomial64 = corpus.unit_box_polynomial(degree);
            match verify_degree_growth(&p, &grid, &cfg, &params) {
                Ok(fit) => {
                    let err = (fit.slope - degree as f64).abs();
                    worst = worst.max(err);
                    if fit.slope.round() != degree as f64 || err > SLOPE_TOL {
                        bad += 1;
                    }
                }
                Err(_) => bad += 1,
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad == 0 && elapsed <= DEGREE_BUDGET,
        format!(
            "{}/50 slopes within {SLOPE_TOL:e}, max |slope - deg| = {worst:.2e}, {:.1?}",
            50 - bad,
            elapsed
        ),
    )
}

fn fft_boundedness() -> Outcome {
    let start = Instant::now();
    let corpus = common::fft_corpus(SEED, 20, 3, 6);
    let grid = standard_grid();
    let (cfg, params) = (Quadrature64::default(), VerifyParams::default());
    let (mut worst_drift, mut worst_gap) = (0.0f64, 0.0f64);
    let mut bad = 0;
    for (f, targets) in &corpus {
        for &a in targets {
            let ok = verify_first_fundamental(f, Target64::Finite(a), &grid, &cfg, &params)
                .and_then(|r| Ok((r.clone(), fft_limit(f, a)?)))
                .map(|(report, limit)| {
                    let gap = (report.tail_value() - limit).abs();
                    worst_drift = worst_drift.max(report.tail_drift);
                    worst_gap = worst_gap.max(gap);
                    report.sup_abs.is_finite() && report.tail_drift <= DRIFT_TOL && gap <= JENSEN_TAIL_TOL
                })
                .unwrap_or(false);
            if !ok {
                bad += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad == 0 && elapsed <= FFT_BUDGET,
        format!(
            "{}/60 cases, max tail drift {worst_drift:.2e}, max |tail - Jensen limit| {worst_gap:.2e}, {:.1?}",
            60 - bad,
            elapsed
        ),
    )
}

/// Moves a target off the value `f` takes at infinity.
fn avoid_deficient(f: &Rational64, a: Target64) -> Target64 {
    match (a, f.value_at_infinity()) {
        (Target64::Finite(v), Some(l)) if (v - l).norm() < 0.05 => Target64::Finite(v + Complex64::new(0.125, 0.125)),
        _ => a,
    }
}

fn smt_inequality() -> Outcome {
    let corpus = common::fft_corpus(SEED, 20, 3, 6);
    let grid = standard_grid();
    let (cfg, params) = (Quadrature64::default(), VerifyParams::default());
    let base = [Target64::real(0.0), Target64::real(1.0), Target64::Infinity];
    let mut bad = 0;
    let mut worst_margin = f64::INFINITY;
    for (f, _) in &corpus {
        let targets: Vec<Target64> = base.iter().map(|&a| avoid_deficient(f, a)).collect();
        match verify_second_fundamental(f, &targets, &grid, &cfg, &params) {
            Ok(r) => {
                worst_margin = worst_margin.min(r.metrics["min_margin"]);
                if !r.passed() {
                    bad += 1;
                }
            }
            Err(_) => bad += 1,
        }
    }
    let square = Rational64::polynomial(Polynomial64::from_real(&[0.0, 0.0, 1.0]).unwrap());
    let grid = [1.0, 10.0, 100.0, 1e3];
    let closed = verify_second_fundamental(&square, &base, &grid, &cfg, &params)
        .map(|r| (r.tail_value() - 1e3f64.ln()).abs())
        .unwrap_or(f64::INFINITY);
    outcome(
        bad == 0 && closed <= SMT_CLOSED_FORM_TOL,
        format!("{}/20 corpus slacks above allowance (min margin {worst_margin:.3}), |slack(1e3) - log 1e3| = {closed:.2e} for z^2", 20 - bad),
    )
}

fn claim1_chain() -> Outcome {
    let grid = standard_grid();
    let cfg = Quadrature64::default();
    let params = VerifyParams {
        chain_drift_tol: CHAIN_DRIFT_TOL,
        margin_from: CHAIN_MARGIN_FROM,
        ..VerifyParams::default()
    };
    let mut details = Vec::new();
    let mut all = true;
    for coeffs in [&[-1.0, 0.0, 3.0, 1.0][..], &[5.0, 0.0, 1.0, 0.0, 2.0][..]] {
        let q = Polynomial64::from_real(coeffs).unwrap();
        match claim1_chain_report(&q, &grid, &cfg, &params) {
            Ok(r) => {
                let drift = r.components.iter().map(|c| c.tail_drift).fold(0.0, f64::max);
                all &= r.passed();
                details.push(format!(
                    "deg {}: ratio {:.4}, max component drift {drift:.1e}, min margin {:.3}",
                    q.degree(),
                    r.metrics["chain_ratio"],
                    r.metrics["min_margin"]
                ));
            }
            Err(e) => {
                all = false;
                details.push(format!("deg {}: {e}", q.degree()));
            }
        }
    }
    outcome(all, details.join("; "))
}

fn fta_witnesses() -> Outcome {
    let start = Instant::now();
    let mut corpus = Corpus::new(SEED ^ 0xf7a);
    let mut good = 0;
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for i in 0..100 {
        let degree = 3 + i % 10;
        let p: Polynomial64 = corpus.unit_box_polynomial(degree);
        match fta_witness(&p, WITNESS_SOLVER_TOL) {
            Ok(trace) => {
                let rel = trace.relative_residual();
                worst = worst.max(rel);
                if rel <= WITNESS_RELATIVE_RESIDUAL && trace.linear_terms_vanish(LINEAR_VANISH_RELATIVE) {
                    good += 1;
                } else {
                    failures.push(format!("#{i} deg {degree} rel {rel:.1e}"));
                }
            }
            Err(e) => failures.push(format!("#{i} deg {degree}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let mut detail = format!("{good}/100 witnesses, max |P(w)|/scale {worst:.1e}, {elapsed:.1?}");
    if !failures.is_empty() {
        detail.push_str(&format!(" [{}]", failures.join(", ")));
    }
    outcome(good == 100 && elapsed <= WITNESS_BUDGET, detail)
}

fn remark_check() -> Outcome {
    let mut corpus = Corpus::new(SEED ^ 0x6e);
    let grid = standard_grid();
    let (cfg, params) = (Quadrature64::default(), VerifyParams::default());
    let mut bad = 0;
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let p: Polynomial64 = corpus.unit_box_polynomial(1 + i % 10);
        match remark_fft_check(&p, &grid, &cfg, &params) {
            Ok(r) => {
                worst = worst.max(r.tail_drift);
                if !r.passed() {
                    bad += 1;
                }
            }
            Err(_) => bad += 1,
        }
    }
    outcome(
        bad == 0,
        format!("{}/50 polynomials, max tail drift {worst:.1e}", 50 - bad),
    )
}

fn oracle_equivalence() -> Outcome {
    use rand::Rng;
    let mut corpus = Corpus::new(SEED ^ 0x07ac1e);
    let mut worst: f64 = 0.0;
    let mut count_bad = 0;
    for _ in 0..50 {
        let f = corpus.factored_polynomial::<f64>(12);
        let rational = Rational64::polynomial(f.polynomial.clone());
        let r = loop {
            let r: f64 = corpus.rng().gen_range(0.5..3.0);
            if f.roots.iter().all(|(z, _)| (z.norm() - r).abs() > 1e-6) {
                break r;
            }
        };
        for distinct in [false, true] {
            match counting_n(&rational, Target64::real(0.0), r, distinct) {
                Ok(v) => {
                    let err = (v - common::counting_integral(&f.roots, r, distinct)).abs();
                    worst = worst.max(err);
                    if err > COUNTING_ORACLE_TOL {
                        count_bad += 1;
                    }
                }
                Err(_) => count_bad += 1,
            }
        }
    }
    let mut winding_bad = 0;
    for _ in 0..100 {
        let f = corpus.factored_polynomial::<f64>(12);
        let region = common::region_avoiding(&mut corpus, &f, 0.05);
        let expected = common::expected_count(&region, &f);
        let got = winding_count(&Rational64::polynomial(f.polynomial.clone()), &region).map(|(w, _)| w);
        if got != Ok(expected) {
            winding_bad += 1;
        }
    }
    outcome(
        count_bad == 0 && winding_bad == 0,
        format!(
            "counting N vs integral: {}/100 within {COUNTING_ORACLE_TOL:e} (max {worst:.1e}); winding: {}/100 exact",
            100 - count_bad,
            100 - winding_bad
        ),
    )
}

fn property_suites() -> Outcome {
    let mut corpus = Corpus::new(SEED ^ 0x9f0);
    let grid = log_grid(0.5, 1e3, 16).unwrap();
    let cfg = Quadrature64::default();
    let mut violations: Vec<String> = Vec::new();
    let mut checks = 0usize;
    for i in 0..25 {
        let f: Rational64 = corpus.rational_function(5);
        let f = f.reduced().unwrap();
        let a: Complex64 = corpus.point(1.5);
        let targets = [Target64::Infinity, Target64::Finite(a)];
        let Ok(profiles) = build_profile(&f, &targets, &grid, &cfg) else {
            violations.push(format!("#{i} profile failed"));
            continue;
        };
        for profile in &profiles {
            for w in profile.rows.windows(2) {
                checks += 3;
                for (name, lo, hi) in [
                    ("T", w[0].t, w[1].t),
                    ("N", w[0].big_n, w[1].big_n),
                    ("Nbar", w[0].big_nbar, w[1].big_nbar),
                ] {
                    if hi < lo - MONOTONE_SLACK * (1.0 + lo.abs()) {
                        violations.push(format!("#{i} {name} decreases at r={}", w[1].r));
                    }
                }
            }
            for row in &profile.rows {
                checks += 2;
                if row.m < 0.0 {
                    violations.push(format!("#{i} m < 0 at r={}", row.r));
                }
                if row.big_nbar > row.big_n + 1e-12 * (1.0 + row.big_n.abs()) || row.nbar > row.n {
                    violations.push(format!("#{i} Nbar > N at r={}", row.r));
                }
            }
        }
        // Jensen at every radius: m(r,a) + N(r,a) - T(r,f) = m(r, f-a) - m(r, f) - log|c|.
        let shifted = Rational64::new(f.numerator() - &f.denominator().scale_by(a), f.denominator().clone()).unwrap();
        let log_c = nevanlinna::verify::jensen_constant(&f, a).unwrap();
        for (row_inf, row_a) in profiles[0].rows.iter().zip(&profiles[1].rows) {
            checks += 1;
            let m_shift = proximity_m(&shifted, Target64::Infinity, row_a.r, &cfg).unwrap();
            let lhs = row_a.m_plus_n - row_inf.t;
            let rhs = m_shift - row_inf.m - log_c;
            if (lhs - rhs).abs() > JENSEN_IDENTITY_TOL {
                violations.push(format!("#{i} Jensen off by {:.1e} at r={}", (lhs - rhs).abs(), row_a.r));
            }
        }
    }
    for i in 0..50 {
        let f = corpus.factored_polynomial::<f64>(10);
        let h: Complex64 = corpus.point(1.0);
        let shifted = f.polynomial.shift(h);
        for &(z, _) in &f.roots {
            checks += 1;
            let w = z - h;
            let bound = shifted.abs_eval(w.norm());
            if shifted.eval(w).norm() > SHIFT_ROOT_RELATIVE * bound {
                violations.push(format!(
                    "#{i} shift root residual {:.1e}",
                    shifted.eval(w).norm() / bound
                ));
            }
        }
    }
    let mut detail = format!("{} violations over {checks} checks", violations.len());
    if !violations.is_empty() {
        detail.push_str(&format!(
            " [{}]",
            violations.iter().take(5).cloned().collect::<Vec<_>>().join(", ")
        ));
    }
    outcome(violations.is_empty(), detail)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("degree recovery", degree_recovery),
        (
            "first fundamental theorem boundedness and Jensen constant",
            fft_boundedness,
        ),
        ("second fundamental theorem inequality", smt_inequality),
        ("claim-1 chain components and margin", claim1_chain),
        ("root witnesses", fta_witnesses),
        ("remark: N(r,0;P) carries full degree growth", remark_check),
        (
            "oracle equivalence: counting integral and winding counts",
            oracle_equivalence,
        ),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.passed {
            failed += 1;
        }
        println!(
            "[{}] {}. {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            k + 1,
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
