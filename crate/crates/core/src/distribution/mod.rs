//! Counting, proximity and characteristic functions of rational functions.
//!
//! For a target `a` the proximity integrand is `log⁺|g|` on the circle
//! `|z| = r`, where `g = f` for `a = ∞` and `g = 1/(f - a)` otherwise. In both
//! cases `g = A / B` with polynomials `A`, `B` and the `a`-points of `f` are
//! exactly the roots of `B`, which are also the only places `log⁺|g|` blows
//! up. [`TargetAnalysis`] stores that pair together with the enumerated
//! roots so every radius reuses one root search.

pub mod profile;
pub mod quadrature;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::localize::numerical_roots;
use crate::poly::{Polynomial, TRIM_RELATIVE};
use crate::rational::RationalFunction;
use crate::scalar::Real;
use crate::target::TargetValue;

pub use profile::{build_profile, NevanlinnaProfile, ProfileRow, RadiusNudge};

/// Relative half-width of the band around `|z| = r` in which an `a`-point
/// makes `n(r)` ambiguous.
pub const BOUNDARY_GUARD: f64 = 1e-12;
/// Uniform panels laid over the circle before adaptive refinement.
pub const BASE_PANELS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig<T> {
    pub abs_tol: T,
    /// Maximum bisection depth below each pre-split interval.
    pub max_subdivisions: usize,
    /// Relative distance from the circle within which `a`-points trigger a
    /// pre-split of the angular interval.
    pub singularity_refine_band: T,
}

impl<T: Real> Default for QuadratureConfig<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::lit(1e-9),
            max_subdivisions: 24,
            singularity_refine_band: T::lit(1e-6),
        }
    }
}

impl<T: Real> QuadratureConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > T::zero()) || self.max_subdivisions < 1 || !(self.singularity_refine_band > T::zero()) {
            return Err(Error::InvalidConfig(
                "abs_tol and singularity_refine_band must be positive, max_subdivisions >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// A solution of `f(z) = a` with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct APoint<T> {
    pub point: Complex<T>,
    pub multiplicity: usize,
}

/// Everything about one target value that does not depend on the radius.
#[derive(Clone, Debug)]
pub struct TargetAnalysis<T: Real> {
    target: TargetValue<T>,
    /// `g = upper / lower` is the function whose `log⁺` is averaged.
    upper: Polynomial<T>,
    lower: Polynomial<T>,
    points: Vec<APoint<T>>,
}

impl<T: Real> TargetAnalysis<T> {
    /// Enumerates all `a`-points of a reduced `f`.
    pub fn new(f: &RationalFunction<T>, target: TargetValue<T>) -> Result<Self> {
        let f = f.reduced()?;
        let (upper, lower) = match target {
            TargetValue::Infinity => (f.numerator().clone(), f.denominator().clone()),
            TargetValue::Finite(a) => {
                let shifted = f.numerator() - &f.denominator().scale_by(a);
                let reference = f.numerator().scale() + a.norm() * f.denominator().scale();
                if shifted.is_zero() || shifted.scale() <= reference * T::lit(TRIM_RELATIVE) {
                    return Err(Error::FunctionIdenticallyA);
                }
                (f.denominator().clone(), shifted)
            }
        };
        let points = numerical_roots(&lower)?
            .into_iter()
            .map(|(point, multiplicity)| APoint { point, multiplicity })
            .collect();
        Ok(Self {
            target,
            upper,
            lower,
            points,
        })
    }

    pub fn target(&self) -> TargetValue<T> {
        self.target
    }

    /// All `a`-points in the plane, canonical `(re, im)` order.
    pub fn points(&self) -> &[APoint<T>] {
        &self.points
    }

    /// `a`-points with `|z| < radius`.
    pub fn points_within(&self, radius: T) -> Vec<APoint<T>> {
        self.points
            .iter()
            .copied()
            .filter(|p| p.point.norm() < radius)
            .collect()
    }

    fn check_boundary(&self, r: T) -> Result<()> {
        let band = r * T::lit(BOUNDARY_GUARD);
        match self
            .points
            .iter()
            .find(|p| (p.point.norm() - r).abs() <= band && p.point.norm() > T::zero())
        {
            Some(p) => Err(Error::BoundaryCoincidence {
                r: r.to_f64().unwrap_or(f64::NAN),
                point_radius: p.point.norm().to_f64().unwrap_or(f64::NAN),
            }),
            None => Ok(()),
        }
    }

    /// True when some `a`-point lies in the boundary band of `|z| = r`.
    pub fn touches_circle(&self, r: T) -> bool {
        self.check_boundary(r).is_err()
    }

    /// `n(r, a)`: number of `a`-points in `|z| < r`, with multiplicity unless
    /// `distinct`.
    pub fn count(&self, r: T, distinct: bool) -> Result<usize> {
        self.check_boundary(r)?;
        Ok(self
            .points
            .iter()
            .filter(|p| p.point.norm() < r)
            .map(|p| if distinct { 1 } else { p.multiplicity })
            .sum())
    }

    /// `N(r, a)`, the integrated counting function, in the closed form
    /// `sum_{0<|z_j|<r} mult_j log(r/|z_j|) + n(0, a) log r`.
    pub fn integrated_count(&self, r: T, distinct: bool) -> T {
        let log_r = r.ln();
        self.points
            .iter()
            .filter(|p| p.point.norm() < r)
            .map(|p| {
                let weight = T::from_usize_lossy(if distinct { 1 } else { p.multiplicity });
                let modulus = p.point.norm();
                if modulus == T::zero() {
                    weight * log_r
                } else {
                    weight * (log_r - modulus.ln())
                }
            })
            .fold(T::zero(), |acc, x| acc + x)
    }

    /// `log⁺|g(z)|`.
    pub fn log_plus_integrand(&self, z: Complex<T>) -> T {
        let v = self.upper.log_abs(z) - self.lower.log_abs(z);
        if v.is_nan() {
            // 0/0 cannot occur for a reduced pair; treat as a pole.
            return T::infinity();
        }
        v.max(T::zero())
    }

    /// `m(r, a)`: circle mean of `log⁺|g|`.
    pub fn proximity(&self, r: T, cfg: &QuadratureConfig<T>) -> Result<T> {
        cfg.validate()?;
        if !(r > T::zero()) {
            return Err(Error::InvalidGrid("radius must be positive".into()));
        }
        if self.upper.is_zero() {
            return Ok(T::zero());
        }
        let tau = T::TAU();
        let band = cfg.singularity_refine_band * r;
        let wrap = |t: T| {
            if t < T::zero() {
                t + tau
            } else if t >= tau {
                t - tau
            } else {
                t
            }
        };

        // Angles where nodes must cluster: a uniform base mesh, plus a mesh
        // graded geometrically toward each nearby singularity of `g`.
        let mut cuts: Vec<(T, bool)> = (0..BASE_PANELS)
            .map(|k| (tau * T::from_usize_lossy(k) / T::from_usize_lossy(BASE_PANELS), false))
            .collect();
        for p in &self.points {
            let gap = (p.point.norm() - r).abs();
            if gap >= r {
                continue;
            }
            let theta = wrap(p.point.arg());
            cuts.push((theta, gap <= band));
            let mut step = (gap / r).max(cfg.singularity_refine_band);
            while step < T::PI() {
                cuts.push((wrap(theta + step), false));
                cuts.push((wrap(theta - step), false));
                step = step * T::lit(2.0);
            }
        }
        let singular: Vec<T> = cuts.iter().filter(|c| c.1).map(|c| c.0).collect();
        let clearance = cfg.singularity_refine_band * T::lit(0.5);
        cuts.retain(|&(t, is_singular)| {
            is_singular
                || singular.iter().all(|&s| {
                    let d = (t - s).abs();
                    d.min(tau - d) > clearance
                })
        });
        cuts.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
        let mut merged: Vec<(T, bool)> = Vec::with_capacity(cuts.len());
        for (t, singular) in cuts {
            match merged.last_mut() {
                Some(last) if t - last.0 <= T::epsilon() * tau => last.1 |= singular,
                _ => merged.push((t, singular)),
            }
        }
        let first = merged[0];
        merged.push((first.0 + tau, first.1));

        let integrand = |theta: T| self.log_plus_integrand(Complex::from_polar(r, theta)) / tau;
        let mut total = T::zero();
        for w in merged.windows(2) {
            let ((lo, lo_singular), (hi, hi_singular)) = (w[0], w[1]);
            let len = hi - lo;
            if len <= T::zero() {
                continue;
            }
            let tol = cfg.abs_tol * len / tau;
            total = total
                + if lo_singular || hi_singular {
                    // The smoothstep map clusters nodes at both ends and its
                    // Jacobian tames the logarithm.
                    let mapped = |u: T| {
                        let phi = u * u * (T::lit(3.0) - T::lit(2.0) * u);
                        let dphi = T::lit(6.0) * u * (T::one() - u);
                        if dphi == T::zero() {
                            return T::zero();
                        }
                        integrand(lo + len * phi) * len * dphi
                    };
                    quadrature::integrate(mapped, T::zero(), T::one(), tol, cfg.max_subdivisions)?
                } else {
                    quadrature::integrate(integrand, lo, hi, tol, cfg.max_subdivisions)?
                };
        }
        Ok(total.max(T::zero()))
    }
}

/// `a`-points of `f` in `|z| < radius`.
pub fn enumerate_a_points<T: Real>(f: &RationalFunction<T>, a: TargetValue<T>, radius: T) -> Result<Vec<APoint<T>>> {
    Ok(TargetAnalysis::new(f, a)?.points_within(radius))
}

/// `n(r, a; f)`, or `n̄(r, a; f)` when `distinct`.
pub fn count_n<T: Real>(f: &RationalFunction<T>, a: TargetValue<T>, r: T, distinct: bool) -> Result<usize> {
    TargetAnalysis::new(f, a)?.count(r, distinct)
}

/// `N(r, a; f)`, or `N̄(r, a; f)` when `distinct`.
pub fn counting_n<T: Real>(f: &RationalFunction<T>, a: TargetValue<T>, r: T, distinct: bool) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::InvalidGrid("radius must be positive".into()));
    }
    Ok(TargetAnalysis::new(f, a)?.integrated_count(r, distinct))
}

/// `m(r, a; f)`.
pub fn proximity_m<T: Real>(f: &RationalFunction<T>, a: TargetValue<T>, r: T, cfg: &QuadratureConfig<T>) -> Result<T> {
    TargetAnalysis::new(f, a)?.proximity(r, cfg)
}

/// `T(r, f) = m(r, ∞; f) + N(r, ∞; f)`.
pub fn characteristic_t<T: Real>(f: &RationalFunction<T>, r: T, cfg: &QuadratureConfig<T>) -> Result<T> {
    let f = f.reduced()?;
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let poles = TargetAnalysis::new(&f, TargetValue::Infinity)?;
    Ok(poles.proximity(r, cfg)? + poles.integrated_count(r, false))
}
