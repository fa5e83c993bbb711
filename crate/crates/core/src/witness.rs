//! Constructive existence of a root, following the induction on degree.
//!
//! For `deg p >= 3` a root `h` of `p'` is produced by recursion, so the
//! translate `Q(z) = p(z + h)` has no `z` term. `Q` then has the shape
//! `b0 z^m + ... + b_{m-l} z^l + b_m` with `l >= 2`, and a root of `Q` is
//! located by certified subdivision inside its Cauchy bound. Degrees one and
//! two are solved in closed form.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::localize::localize_one;
use crate::poly::Polynomial;
use crate::region::Region;
use crate::scalar::Real;
use crate::verify::claim1::{claim1_shape_check, Claim1Shape, VANISHING_RELATIVE};

/// Outcome of the shape check on one shifted polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Claim1Outcome {
    Accepted { m: usize, l: usize },
    Binomial { m: usize },
    Rejected { reason: String },
}

/// How the final root of a level was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMethod {
    Linear,
    Quadratic,
    ShiftIsRoot,
    Binomial,
    Localized,
}

/// One induction step: `p` of degree `degree` translated by `shift`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub struct WitnessLevel<T: Real> {
    pub degree: usize,
    pub shift: Complex<T>,
    /// `|coefficient of z in p(z + shift)|`.
    pub linear_coefficient: T,
    /// Coefficient scale of `p(z + shift)`.
    pub shifted_scale: T,
    pub claim1: Claim1Outcome,
    pub method: WitnessMethod,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub struct WitnessTrace<T: Real> {
    /// Number of shift levels, `deg p - 2` for `deg p >= 3`.
    pub depth: usize,
    /// Outermost level (the input polynomial) first.
    pub levels: Vec<WitnessLevel<T>>,
    pub witness: Complex<T>,
    /// `|p(witness)|`.
    pub residual: T,
    /// Coefficient scale of the input.
    pub scale: T,
    pub method: WitnessMethod,
}

impl<T: Real> WitnessTrace<T> {
    pub fn shifts(&self) -> Vec<Complex<T>> {
        self.levels.iter().map(|l| l.shift).collect()
    }

    /// Residual relative to the coefficient scale.
    pub fn relative_residual(&self) -> T {
        self.residual / self.scale
    }

    /// True when every level's translate had a vanishing `z` coefficient.
    pub fn linear_terms_vanish(&self, relative: T) -> bool {
        self.levels
            .iter()
            .all(|l| l.linear_coefficient <= relative * l.shifted_scale)
    }
}

/// Root of `a z^2 + b z + c` avoiding cancellation; returns the root of
/// smaller modulus.
pub fn stable_quadratic_root<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>) -> Complex<T> {
    let four = T::lit(4.0);
    let disc = (b * b - a * c * four).sqrt();
    // Choose the sign making |b + s*disc| largest.
    let s = if (b.conj() * disc).re >= T::zero() {
        T::one()
    } else {
        -T::one()
    };
    let q = -(b + disc * s) * T::lit(0.5);
    if q.norm() == T::zero() {
        return Complex::new(T::zero(), T::zero());
    }
    let r1 = q / a;
    let r2 = c / q;
    if r2.norm() <= r1.norm() {
        r2
    } else {
        r1
    }
}

/// Walks the derivative chain and returns a root witness of `p` with
/// `|p(w)| <= tol * scale(p)` whenever working precision allows it.
pub fn fta_witness<T: Real>(p: &Polynomial<T>, tol: T) -> Result<WitnessTrace<T>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !(tol > T::zero()) {
        return Err(Error::InvalidConfig("witness tolerance must be positive".into()));
    }
    let scale = p.scale();
    let (witness, levels, method) = witness_at(p, tol * scale)?;
    Ok(WitnessTrace {
        depth: levels.len(),
        levels,
        witness,
        residual: p.eval_compensated(witness).norm(),
        scale,
        method,
    })
}

const POLISH_STEPS: usize = 8;

type Level<T> = (Complex<T>, Vec<WitnessLevel<T>>, WitnessMethod);

fn witness_at<T: Real>(p: &Polynomial<T>, target: T) -> Result<Level<T>> {
    let c = p.coeffs();
    match p.degree() {
        0 => Err(Error::ConstantPolynomial),
        1 => Ok((-c[0] / c[1], Vec::new(), WitnessMethod::Linear)),
        2 => Ok((
            stable_quadratic_root(c[2], c[1], c[0]),
            Vec::new(),
            WitnessMethod::Quadratic,
        )),
        m => {
            // Induction hypothesis: the derivative has a root h.
            let dp = p.derivative();
            let critical_target = T::lit(0.5 * VANISHING_RELATIVE) * p.scale();
            let (h, inner, _) = witness_at(&dp, critical_target)?;
            let h = polish(&dp, h);
            let q = p.shift(h);
            let claim1 = match claim1_shape_check(&q) {
                Ok(Claim1Shape::Chain(d)) => Claim1Outcome::Accepted { m: d.m, l: d.l },
                Ok(Claim1Shape::Binomial { m, .. }) => Claim1Outcome::Binomial { m },
                Err(e) => Claim1Outcome::Rejected { reason: e.to_string() },
            };
            let residual = |w: Complex<T>| p.eval_compensated(w).norm();

            let (w, method) = if residual(h) <= target {
                (h, WitnessMethod::ShiftIsRoot)
            } else {
                let closed = match claim1 {
                    Claim1Outcome::Binomial { .. } => {
                        let ratio = -q.coeff(0) / q.leading();
                        let w = ratio.powf(T::one() / T::from_usize_lossy(m)) + h;
                        (residual(w) <= target).then_some(w)
                    }
                    _ => None,
                };
                match closed {
                    Some(w) => (w, WitnessMethod::Binomial),
                    None => (polish(p, localize_shifted(p, &q, h, target)?), WitnessMethod::Localized),
                }
            };

            let mut levels = vec![WitnessLevel {
                degree: m,
                shift: h,
                linear_coefficient: q.coeff(1).norm(),
                shifted_scale: q.scale(),
                claim1,
                method,
            }];
            levels.extend(inner);
            Ok((w, levels, method))
        }
    }
}

/// Newton steps on `p` from `z`, kept only while they shrink `|p(z)|`.
fn polish<T: Real>(p: &Polynomial<T>, mut z: Complex<T>) -> Complex<T> {
    let dp = p.derivative();
    let mut value = p.eval_compensated(z).norm();
    for _ in 0..POLISH_STEPS {
        let slope = dp.eval(z);
        if value == T::zero() || slope.norm() == T::zero() {
            break;
        }
        let next = z - p.eval_compensated(z) / slope;
        let next_value = p.eval_compensated(next).norm();
        if !(next_value < value) {
            break;
        }
        z = next;
        value = next_value;
    }
    z
}

/// Root of `q = p(. + h)` inside its Cauchy bound, returned in the
/// coordinates of `p`. Descends toward the origin of `p` and stops once the
/// residual target is met or the cells reach working precision.
fn localize_shifted<T: Real>(p: &Polynomial<T>, q: &Polynomial<T>, h: Complex<T>, target: T) -> Result<Complex<T>> {
    let bound = q.cauchy_bound();
    let region = Region::centered_square(bound)?;
    let floor = bound * T::epsilon();
    let enclosure = localize_one(q, &region, floor, -h, |c| p.eval_compensated(c + h).norm() <= target)
        .map_err(|e| Error::LocalizationFailed(Box::new(e)))?;
    Ok(enclosure.center() + h)
}
