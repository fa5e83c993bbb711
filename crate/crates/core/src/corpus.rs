//! Seeded random test functions.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Polynomial;
use crate::rational::RationalFunction;
use crate::scalar::Real;

/// Smallest leading-coefficient modulus accepted for unit-box polynomials.
pub const MIN_LEADING: f64 = 0.25;
/// Smallest zero-pole distance in random rational functions.
pub const MIN_ZERO_POLE_GAP: f64 = 1e-3;
/// Smallest distance between distinct roots of a factored polynomial.
pub const MIN_ROOT_GAP: f64 = 0.1;

/// A polynomial built from its roots, with the roots kept alongside.
#[derive(Clone, Debug)]
pub struct FactoredPolynomial<T: Real> {
    pub polynomial: Polynomial<T>,
    pub roots: Vec<(Complex<T>, usize)>,
}

impl<T: Real> FactoredPolynomial<T> {
    pub fn degree(&self) -> usize {
        self.roots.iter().map(|&(_, k)| k).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform point of the box `[-h, h] x [-h, h]`.
    pub fn point<T: Real>(&mut self, h: f64) -> Complex<T> {
        let re = self.rng.gen_range(-h..=h);
        let im = self.rng.gen_range(-h..=h);
        Complex::new(T::lit(re), T::lit(im))
    }

    fn unit_modulus(&mut self, lo: f64, hi: f64) -> Complex<f64> {
        let rho = self.rng.gen_range(lo..=hi);
        let theta = self.rng.gen_range(0.0..std::f64::consts::TAU);
        Complex::from_polar(rho, theta)
    }

    /// Degree-`degree` polynomial with coefficients uniform in the unit box;
    /// the leading coefficient is resampled until its modulus is at least
    /// [`MIN_LEADING`].
    pub fn unit_box_polynomial<T: Real>(&mut self, degree: usize) -> Polynomial<T> {
        let mut coeffs: Vec<Complex<f64>> = (0..=degree).map(|_| self.point(1.0)).collect();
        while coeffs[degree].norm() < MIN_LEADING {
            coeffs[degree] = self.point(1.0);
        }
        to_poly(&coeffs)
    }

    /// Monic polynomial with roots in `[-2, 2]^2`, multiplicities `1..=3` and
    /// total degree in `1..=max_degree`.
    pub fn factored_polynomial<T: Real>(&mut self, max_degree: usize) -> FactoredPolynomial<T> {
        let target = self.rng.gen_range(1..=max_degree.max(1));
        let mut roots: Vec<(Complex<f64>, usize)> = Vec::new();
        let mut degree = 0;
        while degree < target {
            let z: Complex<f64> = self.point(2.0);
            if roots.iter().any(|&(w, _)| (w - z).norm() < MIN_ROOT_GAP) {
                continue;
            }
            let k = self.rng.gen_range(1..=3).min(target - degree);
            roots.push((z, k));
            degree += k;
        }
        let expanded: Vec<Complex<T>> = roots
            .iter()
            .flat_map(|&(z, k)| std::iter::repeat_n(lift(z), k))
            .collect();
        FactoredPolynomial {
            polynomial: Polynomial::from_roots(&expanded),
            roots: roots.into_iter().map(|(z, k)| (lift(z), k)).collect(),
        }
    }

    /// Non-constant `c (prod (z - z_j)) / (prod (z - p_k))` with zeros and
    /// poles in the unit box, degrees in `0..=max_degree`, `|c|` in
    /// `[0.5, 2]` and every zero at least [`MIN_ZERO_POLE_GAP`] from every
    /// pole.
    pub fn rational_function<T: Real>(&mut self, max_degree: usize) -> RationalFunction<T> {
        loop {
            let dn = self.rng.gen_range(0..=max_degree);
            let dd = self.rng.gen_range(0..=max_degree);
            if dn + dd == 0 {
                continue;
            }
            let poles: Vec<Complex<f64>> = (0..dd).map(|_| self.point(1.0)).collect();
            let mut zeros: Vec<Complex<f64>> = Vec::with_capacity(dn);
            while zeros.len() < dn {
                let z = self.point(1.0);
                if poles.iter().all(|&p| (p - z).norm() >= MIN_ZERO_POLE_GAP) {
                    zeros.push(z);
                }
            }
            let c = self.unit_modulus(0.5, 2.0);
            let lifted = |v: &[Complex<f64>]| v.iter().map(|&z| lift(z)).collect::<Vec<Complex<T>>>();
            let numerator = Polynomial::from_roots(&lifted(&zeros)).scale_by(lift(c));
            let denominator = Polynomial::from_roots(&lifted(&poles));
            if let Ok(f) = RationalFunction::new(numerator, denominator) {
                return f;
            }
        }
    }
}

fn lift<T: Real>(z: Complex<f64>) -> Complex<T> {
    Complex::new(T::lit(z.re), T::lit(z.im))
}

fn to_poly<T: Real>(coeffs: &[Complex<f64>]) -> Polynomial<T> {
    Polynomial::new(coeffs.iter().map(|&c| lift(c)).collect()).expect("finite corpus coefficients")
}
