use std::fmt::Write;

use nevanlinna::ProfileRow;

pub const HEADER: &str = "r,n,nbar,N,Nbar,m,T";

/// `%.{digits}g` formatting.
pub fn format_g(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let precision = digits.max(1) - 1;
    let sci = format!("{x:.precision$e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (precision as i32 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn profile_csv(rows: &[ProfileRow<f64>]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for row in rows {
        let g = |x: f64| format_g(x, 12);
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            g(row.r),
            row.n,
            row.nbar,
            g(row.big_n),
            g(row.big_nbar),
            g(row.m),
            g(row.t)
        )
        .expect("write to string");
    }
    out
}
