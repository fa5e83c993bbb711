use std::fs;
use std::path::Path;

use nevanlinna::{parse_targets, Polynomial64, Rational64, Region64, Target64};
use serde::Deserialize;

use crate::CliError;

/// A function file: a rational-function object or a bare coefficient array.
#[derive(Deserialize)]
#[serde(untagged)]
enum FunctionFile {
    Rational(Rational64),
    Polynomial(Polynomial64),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

pub fn load_function(path: &Path) -> Result<Rational64, CliError> {
    let text = read(path)?;
    match serde_json::from_str::<FunctionFile>(&text) {
        Ok(FunctionFile::Rational(f)) => Ok(f),
        Ok(FunctionFile::Polynomial(p)) => Ok(Rational64::polynomial(p)),
        Err(e) => Err(CliError::Input(format!("{}: not a function file: {e}", path.display()))),
    }
}

pub fn load_polynomial(path: &Path) -> Result<Polynomial64, CliError> {
    let f = load_function(path)?.reduced().map_err(CliError::from)?;
    if !f.denominator().is_constant() {
        return Err(CliError::Input(format!(
            "{}: expected a polynomial, found a proper rational function",
            path.display()
        )));
    }
    let c = f.denominator().coeff(0);
    Ok(f.numerator().scale_by(c.inv()))
}

pub fn targets(list: &str) -> Result<Vec<Target64>, CliError> {
    parse_targets(list).map_err(CliError::from)
}

pub fn region(spec: &str) -> Result<Region64, CliError> {
    let parts: Vec<f64> = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Input(format!("invalid region '{spec}', expected x0,x1,y0,y1")))?;
    match parts[..] {
        [x0, x1, y0, y1] => Region64::from_corners(x0, x1, y0, y1).map_err(CliError::from),
        _ => Err(CliError::Input(format!(
            "invalid region '{spec}', expected x0,x1,y0,y1"
        ))),
    }
}
