use std::fs;
use std::io::Write;
use std::path::Path;

use nevanlinna::corpus::Corpus;
use nevanlinna::{
    all_roots, build_profile, claim1_chain_report, localize_roots, log_grid, remark_fft_check, verify_degree_growth,
    verify_first_fundamental, verify_second_fundamental, Polynomial64, Quadrature64, Rational64, Target64,
    VerifyParams,
};
use serde::Serialize;

use crate::args::{
    CorpusArgs, CorpusKind, GridArgs, LocalizeArgs, ProfileArgs, QuadratureArgs, TheoremName, VerifyArgs, WitnessArgs,
};
use crate::csv::profile_csv;
use crate::input::{load_function, load_polynomial, region, targets};
use crate::{CliError, Status};

/// Smallest grid accepted on the command line.
const MIN_POINTS: usize = 8;

fn grid(args: &GridArgs) -> Result<Vec<f64>, CliError> {
    if args.points < MIN_POINTS {
        return Err(CliError::Input(format!("--points must be at least {MIN_POINTS}")));
    }
    if !(args.rmin > 0.0 && args.rmin < args.rmax && args.rmax.is_finite()) {
        return Err(CliError::Input("need 0 < --rmin < --rmax".into()));
    }
    Ok(log_grid(args.rmin, args.rmax, args.points)?)
}

fn quadrature(args: &QuadratureArgs) -> Result<Quadrature64, CliError> {
    let cfg = Quadrature64 {
        abs_tol: args.abs_tol,
        max_subdivisions: args.max_subdivisions,
        singularity_refine_band: args.refine_band,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Compute(format!("cannot write {}: {e}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Compute(format!("cannot write to stdout: {e}"))),
    }
}

fn to_json<S: Serialize>(value: &S) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Compute(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn file_label(target: &Target64) -> String {
    target
        .to_string()
        .chars()
        .map(|c| match c {
            '+' => 'p',
            '-' => 'm',
            c if c.is_ascii_alphanumeric() || c == '.' => c,
            _ => '_',
        })
        .collect()
}

pub fn profile(args: &ProfileArgs) -> Result<Status, CliError> {
    let f = load_function(&args.function)?;
    let targets = targets(&args.targets)?;
    let rgrid = grid(&args.grid)?;
    let cfg = quadrature(&args.quadrature)?;
    let profiles = build_profile(&f, &targets, &rgrid, &cfg)?;

    for p in &profiles {
        for nudge in &p.nudges {
            eprintln!(
                "note: a = {}: radius {} moved to {} off an a-point",
                p.target, nudge.requested, nudge.used
            );
        }
    }
    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
            for (k, p) in profiles.iter().enumerate() {
                let path = dir.join(format!("profile_{k}_{}.csv", file_label(&p.target)));
                fs::write(&path, profile_csv(&p.rows)).map_err(|e| io_error(&path, e))?;
                println!("{}\ta = {}", path.display(), p.target);
            }
        }
        None => {
            let mut text = String::new();
            for p in &profiles {
                text.push_str(&format!("# a = {}\n", p.target));
                text.push_str(&profile_csv(&p.rows));
            }
            emit(None, &text)?;
        }
    }
    Ok(Status::Pass)
}

#[derive(Serialize)]
struct DegreeOutput<'a> {
    slope: f64,
    intercept: f64,
    residual: f64,
    degree: usize,
    report: &'a nevanlinna::DeviationReport<f64>,
}

fn function_input(args: &VerifyArgs) -> Result<Rational64, CliError> {
    match (&args.function, &args.poly) {
        (Some(path), _) | (None, Some(path)) => load_function(path),
        (None, None) => Err(CliError::Input("--function or --poly is required".into())),
    }
}

fn polynomial_input(args: &VerifyArgs) -> Result<Polynomial64, CliError> {
    match (&args.poly, &args.function) {
        (Some(path), _) | (None, Some(path)) => load_polynomial(path),
        (None, None) => Err(CliError::Input("--poly is required".into())),
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Status, CliError> {
    let rgrid = grid(&args.grid)?;
    let cfg = quadrature(&args.quadrature)?;
    let params = VerifyParams {
        drift_tol: args.drift_tol,
        chain_drift_tol: args.chain_drift_tol,
        slope_tol: args.slope_tol,
        eps_s: args.eps_s,
        c_s: args.c_s,
        ..VerifyParams::default()
    };
    let target_list = || match &args.targets {
        Some(list) => targets(list),
        None => Err(CliError::Input("--a is required".into())),
    };
    let (text, passed) = match args.theorem {
        TheoremName::Fft => {
            let f = function_input(args)?;
            let list = target_list()?;
            let [a] = list[..] else {
                return Err(CliError::Input(format!(
                    "fft takes exactly one target value, got {}",
                    list.len()
                )));
            };
            let report = verify_first_fundamental(&f, a, &rgrid, &cfg, &params)?;
            (to_json(&report)?, report.passed())
        }
        TheoremName::Smt => {
            let f = function_input(args)?;
            let report = verify_second_fundamental(&f, &target_list()?, &rgrid, &cfg, &params)?;
            (to_json(&report)?, report.passed())
        }
        TheoremName::Degree => {
            let p = polynomial_input(args)?;
            let fit = verify_degree_growth(&p, &rgrid, &cfg, &params)?;
            let out = DegreeOutput {
                slope: fit.slope,
                intercept: fit.intercept,
                residual: fit.residual,
                degree: fit.degree,
                report: &fit.report,
            };
            (to_json(&out)?, fit.report.passed())
        }
        TheoremName::Claim1 => {
            let p = polynomial_input(args)?;
            let report = claim1_chain_report(&p, &rgrid, &cfg, &params)?;
            (to_json(&report)?, report.passed())
        }
        TheoremName::Remark => {
            let p = polynomial_input(args)?;
            let report = remark_fft_check(&p, &rgrid, &cfg, &params)?;
            (to_json(&report)?, report.passed())
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(if passed { Status::Pass } else { Status::Fail })
}

pub fn fta_witness(args: &WitnessArgs) -> Result<Status, CliError> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(CliError::Input("--tol must be positive".into()));
    }
    let p = load_polynomial(&args.poly)?;
    let trace = nevanlinna::fta_witness(&p, args.tol)?;
    emit(args.out.as_deref(), &to_json(&trace)?)?;
    Ok(if trace.relative_residual() <= args.tol {
        Status::Pass
    } else {
        Status::Fail
    })
}

pub fn localize(args: &LocalizeArgs) -> Result<Status, CliError> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(CliError::Input("--tol must be positive".into()));
    }
    let p = load_polynomial(&args.poly)?;
    let enclosures = match &args.region {
        Some(spec) => localize_roots(&p, &region(spec)?, args.tol)?,
        None => all_roots(&p, args.tol)?,
    };
    emit(args.out.as_deref(), &to_json(&enclosures)?)?;
    Ok(Status::Pass)
}

#[derive(Serialize)]
struct FactoredFile<'a> {
    numerator: &'a Polynomial64,
    roots: Vec<FactoredRoot>,
}

#[derive(Serialize)]
struct FactoredRoot {
    point: [f64; 2],
    multiplicity: usize,
}

pub fn corpus(args: &CorpusArgs) -> Result<Status, CliError> {
    if args.degree == 0 {
        return Err(CliError::Input("--degree must be at least 1".into()));
    }
    fs::create_dir_all(&args.out).map_err(|e| io_error(&args.out, e))?;
    let mut corpus = Corpus::new(args.seed);
    for k in 0..args.count {
        let (name, text) = match args.kind {
            CorpusKind::Poly => {
                let p: Polynomial64 = corpus.unit_box_polynomial(args.degree);
                (format!("poly_{k:03}.json"), to_json(&p)?)
            }
            CorpusKind::Factored => {
                let f = corpus.factored_polynomial::<f64>(args.degree);
                let file = FactoredFile {
                    numerator: &f.polynomial,
                    roots: f
                        .roots
                        .iter()
                        .map(|&(z, m)| FactoredRoot {
                            point: [z.re, z.im],
                            multiplicity: m,
                        })
                        .collect(),
                };
                (format!("factored_{k:03}.json"), to_json(&file)?)
            }
            CorpusKind::Rational => {
                let f: Rational64 = corpus.rational_function(args.degree);
                (format!("rational_{k:03}.json"), to_json(&f)?)
            }
        };
        let path = args.out.join(name);
        fs::write(&path, text).map_err(|e| io_error(&path, e))?;
    }
    Ok(Status::Pass)
}
