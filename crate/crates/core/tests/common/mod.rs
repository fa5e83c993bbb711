#![allow(dead_code)]

use nevanlinna::corpus::{Corpus, FactoredPolynomial};
use nevanlinna::{Complex64, Rational64, Region64, Target64, TargetAnalysis};

/// Five-point Gauss-Legendre nodes and weights on `[-1, 1]`.
const GL5: [(f64, f64); 5] = [
    (0.0, 0.568_888_888_888_888_9),
    (-0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
    (0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
    (-0.906_179_845_938_664, 0.236_926_885_056_189_1),
    (0.906_179_845_938_664, 0.236_926_885_056_189_1),
];

/// Largest ratio `b/a` of a quadrature panel.
const PANEL_RATIO: f64 = 1.05;

fn gl5(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
    GL5.iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>() * half
}

/// Numerical `∫_0^r (n(t) - n(0))/t dt + n(0) log r` for known roots, with
/// `n(t)` counted directly from the roots and the integral done panel by
/// panel between breakpoints.
pub fn counting_integral(roots: &[(Complex64, usize)], r: f64, distinct: bool) -> f64 {
    let weight = |k: usize| if distinct { 1 } else { k };
    let at_origin: usize = roots
        .iter()
        .filter(|(z, _)| z.norm() == 0.0)
        .map(|&(_, k)| weight(k))
        .sum();
    let n_open = |t: f64| -> usize {
        roots
            .iter()
            .filter(|(z, _)| z.norm() > 0.0 && z.norm() < t)
            .map(|&(_, k)| weight(k))
            .sum()
    };
    let mut breaks: Vec<f64> = roots
        .iter()
        .map(|(z, _)| z.norm())
        .filter(|&m| m > 0.0 && m < r)
        .collect();
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.push(r);
    let mut total = 0.0;
    for w in breaks.windows(2) {
        let (mut a, b) = (w[0], w[1]);
        while a < b {
            let next = (a * PANEL_RATIO).min(b);
            let n = n_open(0.5 * (a + next)) as f64;
            total += gl5(|t| n / t, a, next);
            a = next;
        }
    }
    total + at_origin as f64 * r.ln()
}

/// Distance from `z` to the boundary of `region`.
pub fn boundary_distance(region: &Region64, z: Complex64) -> f64 {
    match *region {
        Region64::Disk { center, radius } => ((z - center).norm() - radius).abs(),
        Region64::Box {
            center,
            half_width,
            half_height,
        } => {
            let d = z - center;
            let (dx, dy) = (d.re.abs() - half_width, d.im.abs() - half_height);
            if dx <= 0.0 && dy <= 0.0 {
                (-dx).min(-dy)
            } else {
                dx.max(0.0).hypot(dy.max(0.0))
            }
        }
    }
}

/// Random disk or box in `[-2.5, 2.5]^2` whose boundary stays at least
/// `margin` from every root.
pub fn region_avoiding(corpus: &mut Corpus, f: &FactoredPolynomial<f64>, margin: f64) -> Region64 {
    use rand::Rng;
    loop {
        let center: Complex64 = corpus.point(1.5);
        let rng = corpus.rng();
        let region = if rng.gen_bool(0.5) {
            Region64::disk(center, rng.gen_range(0.2..2.5)).unwrap()
        } else {
            Region64::rect(center, rng.gen_range(0.2..2.0), rng.gen_range(0.2..2.0)).unwrap()
        };
        if f.roots.iter().all(|&(z, _)| boundary_distance(&region, z) >= margin) {
            return region;
        }
    }
}

/// Roots of a factored polynomial that lie inside `region`, with multiplicity.
pub fn expected_count(region: &Region64, f: &FactoredPolynomial<f64>) -> i64 {
    f.roots
        .iter()
        .filter(|&&(z, _)| region.contains(z))
        .map(|&(_, k)| k as i64)
        .sum()
}

/// Minimum distance of `|L|` and `|L - a|` from 1 for a finite limit `L`.
pub const KINK_CLEARANCE: f64 = 0.1;
/// All `a`-points of an FFT corpus case lie in `|z| < A_POINT_RADIUS`.
pub const A_POINT_RADIUS: f64 = 10.0;

/// True when `(f, a)` is a well-posed first-fundamental-theorem case: `f(0)`
/// finite and different from `a`, all `a`-points and poles well inside the
/// tail window, and `log⁺` not evaluated at its kink as `r → ∞`.
pub fn fft_case_ok(f: &Rational64, a: Complex64) -> bool {
    let den0 = f.denominator().coeff(0);
    if den0.norm() == 0.0 {
        return false;
    }
    let f0 = f.numerator().coeff(0) / den0;
    if (f0 - a).norm() < 1e-6 {
        return false;
    }
    if let Some(l) = f.value_at_infinity() {
        if (l.norm() - 1.0).abs() < KINK_CLEARANCE || ((l - a).norm() - 1.0).abs() < KINK_CLEARANCE {
            return false;
        }
    }
    let Ok(analysis) = TargetAnalysis::new(f, Target64::Finite(a)) else {
        return false;
    };
    analysis.points().iter().all(|p| p.point.norm() < A_POINT_RADIUS)
}

/// `n` rational functions with `n_targets` admissible finite targets each.
pub fn fft_corpus(seed: u64, n: usize, n_targets: usize, max_degree: usize) -> Vec<(Rational64, Vec<Complex64>)> {
    let mut corpus = Corpus::new(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let f: Rational64 = corpus.rational_function(max_degree);
        let f = f.reduced().unwrap();
        let mut targets = Vec::with_capacity(n_targets);
        let mut tries = 0;
        while targets.len() < n_targets && tries < 50 {
            tries += 1;
            let a: Complex64 = corpus.point(2.0);
            if fft_case_ok(&f, a) {
                targets.push(a);
            }
        }
        if targets.len() == n_targets {
            out.push((f, targets));
        }
    }
    out
}
