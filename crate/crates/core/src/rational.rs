//! Rational functions `numerator / denominator` with complex coefficients.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::localize::numerical_roots;
use crate::poly::Polynomial;
use crate::scalar::Real;

/// Default cancellation distance, relative to the larger coefficient scale.
pub const GCD_RELATIVE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "RationalRepr<T>",
    into = "RationalRepr<T>",
    bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>")
)]
pub struct RationalFunction<T: Real> {
    numerator: Polynomial<T>,
    denominator: Polynomial<T>,
    reduced: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
struct RationalRepr<T: Real> {
    numerator: Polynomial<T>,
    #[serde(default = "Polynomial::one")]
    denominator: Polynomial<T>,
}

impl<T: Real> TryFrom<RationalRepr<T>> for RationalFunction<T> {
    type Error = Error;
    fn try_from(r: RationalRepr<T>) -> Result<Self> {
        Self::new(r.numerator, r.denominator)
    }
}

impl<T: Real> From<RationalFunction<T>> for RationalRepr<T> {
    fn from(f: RationalFunction<T>) -> Self {
        RationalRepr {
            numerator: f.numerator,
            denominator: f.denominator,
        }
    }
}

impl<T: Real> RationalFunction<T> {
    /// Unreduced quotient. Polynomials over a constant are trivially reduced.
    pub fn new(numerator: Polynomial<T>, denominator: Polynomial<T>) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::IdenticallyZeroDenominator);
        }
        let reduced = numerator.is_constant() || denominator.is_constant();
        Ok(Self {
            numerator,
            denominator,
            reduced,
        })
    }

    pub fn polynomial(p: Polynomial<T>) -> Self {
        Self {
            numerator: p,
            denominator: Polynomial::one(),
            reduced: true,
        }
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.denominator
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_constant()
    }

    /// Constant as a function (valid for reduced functions).
    pub fn is_constant(&self) -> bool {
        self.numerator.is_constant() && self.denominator.is_constant()
    }

    /// Total degree `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.numerator.degree().max(self.denominator.degree())
    }

    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.numerator.eval(z) / self.denominator.eval(z)
    }

    /// `ln |f(z)|`, overflow-free.
    pub fn log_abs(&self, z: Complex<T>) -> T {
        self.numerator.log_abs(z) - self.denominator.log_abs(z)
    }

    /// Value at infinity: `None` when `f` has a pole there.
    pub fn value_at_infinity(&self) -> Option<Complex<T>> {
        let (dn, dd) = (self.numerator.degree(), self.denominator.degree());
        if self.numerator.is_zero() || dn < dd {
            Some(Complex::new(T::zero(), T::zero()))
        } else if dn == dd {
            Some(self.numerator.leading() / self.denominator.leading())
        } else {
            None
        }
    }

    /// Cancels common roots of numerator and denominator with the default
    /// distance `GCD_RELATIVE * max coefficient scale`.
    pub fn reduce(&self) -> Result<Self> {
        let tau = T::lit(GCD_RELATIVE) * self.numerator.scale().max(self.denominator.scale());
        self.reduce_with(tau)
    }

    /// Cancels every numerator/denominator root pair closer than `tau`.
    pub fn reduce_with(&self, tau: T) -> Result<Self> {
        if self.denominator.is_zero() {
            return Err(Error::IdenticallyZeroDenominator);
        }
        if self.numerator.is_zero() {
            return Ok(Self {
                numerator: Polynomial::zero(),
                denominator: Polynomial::one(),
                reduced: true,
            });
        }
        if self.numerator.is_constant() || self.denominator.is_constant() {
            return Ok(Self {
                reduced: true,
                ..self.clone()
            });
        }
        let lift = |e| Error::LocalizationFailed(Box::new(e));
        let num_roots = numerical_roots(&self.numerator).map_err(lift)?;
        let den_roots = numerical_roots(&self.denominator).map_err(lift)?;

        let mut pairs = Vec::new();
        for (i, a) in num_roots.iter().enumerate() {
            for (j, b) in den_roots.iter().enumerate() {
                let d = (a.0 - b.0).norm();
                if d < tau {
                    pairs.push((d, i, j));
                }
            }
        }
        pairs.sort_by(|x, y| x.partial_cmp(y).expect("finite distances"));

        let mut left_num: Vec<usize> = num_roots.iter().map(|e| e.1).collect();
        let mut left_den: Vec<usize> = den_roots.iter().map(|e| e.1).collect();
        let (mut num, mut den) = (self.numerator.clone(), self.denominator.clone());
        let half = T::lit(0.5);
        for (_, i, j) in pairs {
            let k = left_num[i].min(left_den[j]);
            let root = (num_roots[i].0 + den_roots[j].0) * half;
            for _ in 0..k {
                num = num.deflate(root).0;
                den = den.deflate(root).0;
            }
            left_num[i] -= k;
            left_den[j] -= k;
        }
        Ok(Self {
            numerator: num,
            denominator: den,
            reduced: true,
        })
    }

    /// Reduced copy, skipping the work when already reduced.
    pub fn reduced(&self) -> Result<Self> {
        if self.reduced {
            Ok(self.clone())
        } else {
            self.reduce()
        }
    }
}
