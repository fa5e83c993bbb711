//! Dense complex-coefficient polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_complex, DoubleWord, Real};

/// Relative modulus below which trailing coefficients are dropped.
pub const TRIM_RELATIVE: f64 = 1e-14;

/// Polynomial stored by ascending powers: `coeffs[i]` multiplies `z^i`.
///
/// The zero polynomial is the single coefficient `[0]`; every other value has
/// a nonzero leading coefficient, so `degree() == coeffs.len() - 1` always.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "Vec<[T; 2]>",
    into = "Vec<[T; 2]>",
    bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>")
)]
pub struct Polynomial<T: Real> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> Polynomial<T> {
    /// Builds a polynomial from ascending coefficients, trimming negligible
    /// leading terms. Rejects NaN/Inf.
    pub fn new(coeffs: Vec<Complex<T>>) -> Result<Self> {
        if !coeffs.iter().all(|c| is_finite_complex(*c)) {
            return Err(Error::NonFinite("polynomial coefficient"));
        }
        Ok(Self::from_finite(coeffs))
    }

    /// Real coefficients, ascending.
    pub fn from_real(coeffs: &[T]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, T::zero())).collect())
    }

    pub(crate) fn from_finite(mut coeffs: Vec<Complex<T>>) -> Self {
        let scale = coeffs.iter().map(|c| c.norm()).fold(T::zero(), T::max);
        let cut = scale * T::lit(TRIM_RELATIVE);
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() <= cut) {
            coeffs.pop();
        }
        if coeffs.is_empty() || (coeffs.len() == 1 && coeffs[0].is_zero()) {
            coeffs = vec![Complex::zero()];
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![Complex::zero()],
        }
    }

    pub fn one() -> Self {
        Self::constant(Complex::new(T::one(), T::zero()))
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::from_finite(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn identity() -> Self {
        Self::monomial(1, Complex::new(T::one(), T::zero()))
    }

    /// `c * z^k`.
    pub fn monomial(k: usize, c: Complex<T>) -> Self {
        let mut coeffs = vec![Complex::zero(); k + 1];
        coeffs[k] = c;
        Self::from_finite(coeffs)
    }

    /// Monic polynomial `prod (z - r)` over the given roots.
    pub fn from_roots(roots: &[Complex<T>]) -> Self {
        let mut coeffs = vec![Complex::new(T::one(), T::zero())];
        for &r in roots {
            let mut next = vec![Complex::zero(); coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1] + c;
                next[i] = next[i] - c * r;
            }
            coeffs = next;
        }
        Self::from_finite(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Complex<T> {
        self.coeffs[self.degree()]
    }

    /// Coefficient of `z^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs.get(k).copied().unwrap_or_else(Complex::zero)
    }

    /// Maximum coefficient modulus; the unit for relative tolerances.
    pub fn scale(&self) -> T {
        self.coeffs.iter().map(|c| c.norm()).fold(T::zero(), T::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, &c| acc * z + c)
    }

    /// Horner evaluation with a double-word accumulator. The result carries
    /// roughly twice the working precision before the final rounding, which
    /// keeps the sign pattern of `p(z)` meaningful next to clustered roots.
    pub fn eval_compensated(&self, z: Complex<T>) -> Complex<T> {
        let mut re = DoubleWord::new(T::zero());
        let mut im = DoubleWord::new(T::zero());
        for &c in self.coeffs.iter().rev() {
            let next_re = re
                .mul_scalar(z.re)
                .add(im.mul_scalar(z.im).neg())
                .add(DoubleWord::new(c.re));
            let next_im = re.mul_scalar(z.im).add(im.mul_scalar(z.re)).add(DoubleWord::new(c.im));
            re = next_re;
            im = next_im;
        }
        Complex::new(re.value(), im.value())
    }

    /// `sum |a_k| |z|^k`, the magnitude that bounds rounding error in `eval`.
    pub fn abs_eval(&self, z_abs: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z_abs + c.norm())
    }

    /// `ln |p(z)|`, overflow-free for large `|z|`. Returns `-inf` at a zero.
    pub fn log_abs(&self, z: Complex<T>) -> T {
        let r = z.norm();
        if r <= T::one() || self.is_constant() {
            return self.eval(z).norm().ln();
        }
        // p(z) = z^n * sum a_k z^(k-n)
        let w = z.inv();
        let rev = self
            .coeffs
            .iter()
            .fold(Complex::zero(), |acc: Complex<T>, &c| acc * w + c);
        T::from_usize_lossy(self.degree()) * r.ln() + rev.norm().ln()
    }

    pub fn derivative(&self) -> Self {
        if self.is_constant() {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * T::from_usize_lossy(k))
            .collect();
        Self::from_finite(coeffs)
    }

    /// Coefficients of `p(z + h)`, i.e. the Taylor coefficients of `p` at `h`.
    pub fn shift(&self, h: Complex<T>) -> Self {
        let mut c = self.coeffs.clone();
        taylor_shift_in_place(&mut c, h);
        // Leading coefficient and degree are invariant under translation.
        Self { coeffs: c }
    }

    pub fn scale_by(&self, c: Complex<T>) -> Self {
        Self::from_finite(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Division by `z - root`; returns quotient and remainder `p(root)`.
    pub fn deflate(&self, root: Complex<T>) -> (Self, Complex<T>) {
        if self.is_constant() {
            return (Self::zero(), self.coeffs[0]);
        }
        let n = self.degree();
        let mut q = vec![Complex::zero(); n];
        let mut acc = self.coeffs[n];
        for k in (0..n).rev() {
            q[k] = acc;
            acc = self.coeffs[k] + acc * root;
        }
        (Self::from_finite(q), acc)
    }

    /// Cauchy bound `1 + max |a_i / a_n|`: every root lies strictly inside.
    pub fn cauchy_bound(&self) -> T {
        let lead = self.leading().norm();
        let n = self.degree();
        self.coeffs[..n].iter().map(|c| c.norm() / lead).fold(T::zero(), T::max) + T::one()
    }

    /// Number of exactly-or-negligibly zero low-order coefficients, i.e. the
    /// multiplicity of the root at the origin.
    pub fn origin_multiplicity(&self, relative: T) -> usize {
        if self.is_zero() {
            return 0;
        }
        let cut = self.scale() * relative;
        self.coeffs.iter().take_while(|c| c.norm() <= cut).count()
    }

    /// Drops the factor `z^k` (the low `k` coefficients are discarded).
    pub fn divide_by_power(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if k > self.degree() {
            return Self::zero();
        }
        Self::from_finite(self.coeffs[k..].to_vec())
    }
}

/// In-place Taylor shift: afterwards `c[k]` is the coefficient of `z^k` in
/// `p(z + h)`. Quadratic in the degree.
pub(crate) fn taylor_shift_in_place<T: Real>(c: &mut [Complex<T>], h: Complex<T>) {
    let n = c.len();
    for k in 0..n.saturating_sub(1) {
        for i in (k..n - 1).rev() {
            let hi = c[i + 1] * h;
            c[i] = c[i] + hi;
        }
    }
}

/// Real analogue of [`taylor_shift_in_place`] for nonnegative magnitudes.
pub(crate) fn taylor_shift_abs<T: Real>(c: &mut [T], h: T) {
    let n = c.len();
    for k in 0..n.saturating_sub(1) {
        for i in (k..n - 1).rev() {
            c[i] = c[i] + c[i + 1] * h;
        }
    }
}

impl<T: Real> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Polynomial[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}{:+}i)z^{}", c.re, c.im, i)?;
        }
        f.write_str("]")
    }
}

impl<T: Real> TryFrom<Vec<[T; 2]>> for Polynomial<T> {
    type Error = Error;

    fn try_from(pairs: Vec<[T; 2]>) -> Result<Self> {
        Self::new(pairs.into_iter().map(|[re, im]| Complex::new(re, im)).collect())
    }
}

impl<T: Real> From<Polynomial<T>> for Vec<[T; 2]> {
    fn from(p: Polynomial<T>) -> Self {
        p.coeffs.into_iter().map(|c| [c.re, c.im]).collect()
    }
}

fn zip_with<T: Real>(
    a: &Polynomial<T>,
    b: &Polynomial<T>,
    op: impl Fn(Complex<T>, Complex<T>) -> Complex<T>,
) -> Polynomial<T> {
    let n = a.coeffs.len().max(b.coeffs.len());
    Polynomial::from_finite((0..n).map(|k| op(a.coeff(k), b.coeff(k))).collect())
}

impl<T: Real> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl<T: Real> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl<T: Real> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        let mut out = vec![Complex::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Polynomial::from_finite(out)
    }
}

impl<T: Real> Mul<Complex<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Complex<T>) -> Polynomial<T> {
        self.scale_by(rhs)
    }
}

impl<T: Real> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Real> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
