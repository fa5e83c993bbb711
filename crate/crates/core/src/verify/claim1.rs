//! Shape test for polynomials `b0 z^m + ... + b_{m-l} z^l + b_m` whose `z`
//! coefficient vanishes, and the split `Q = z^l R(z) + b_m`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Real;

/// Coefficients below this fraction of the coefficient scale count as zero.
pub const VANISHING_RELATIVE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub struct Claim1Decomposition<T: Real> {
    /// Degree of `Q`.
    pub m: usize,
    /// Lowest non-constant exponent present, `2 <= l < m`.
    pub l: usize,
    pub b0: Complex<T>,
    pub bm: Complex<T>,
    /// `R` with `deg R = m - l` and `R(0) != 0`.
    pub r: Polynomial<T>,
    /// `F = z^l R`.
    pub f: Polynomial<T>,
}

impl<T: Real> Claim1Decomposition<T> {
    /// `F + b_m`.
    pub fn reconstruct(&self) -> Polynomial<T> {
        &self.f + &Polynomial::constant(self.bm)
    }

    /// `(m - l + 1) / m`, the factor the chain bounds `T(r, F)` by.
    pub fn chain_ratio(&self) -> T {
        T::from_usize_lossy(self.m - self.l + 1) / T::from_usize_lossy(self.m)
    }
}

/// Accepted shapes. A binomial `b0 z^m + b_m` has no middle term, so it is
/// outside the chain but has closed-form roots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub enum Claim1Shape<T: Real> {
    Chain(Claim1Decomposition<T>),
    Binomial { m: usize, b0: Complex<T>, bm: Complex<T> },
}

pub fn claim1_shape_check<T: Real>(q: &Polynomial<T>) -> Result<Claim1Shape<T>> {
    if q.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let m = q.degree();
    if m <= 2 {
        return Err(Error::DegreeTooSmall { degree: m });
    }
    let cut = q.scale() * T::lit(VANISHING_RELATIVE);
    let linear = q.coeff(1).norm();
    if linear > cut {
        return Err(Error::LinearCoefficientNonzero {
            magnitude: linear.to_f64().unwrap_or(f64::NAN),
        });
    }
    let b0 = q.leading();
    let bm = q.coeff(0);
    let Some(l) = (2..m).find(|&k| q.coeff(k).norm() > cut) else {
        return Ok(Claim1Shape::Binomial { m, b0, bm });
    };
    let r = Polynomial::new(q.coeffs()[l..].to_vec())?;
    let f = &Polynomial::monomial(l, Complex::new(T::one(), T::zero())) * &r;
    Ok(Claim1Shape::Chain(Claim1Decomposition { m, l, b0, bm, r, f }))
}
