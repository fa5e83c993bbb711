//! Argument-principle counting of zeros minus poles inside a region.
//!
//! The boundary is split into straight segments (boxes) or arcs (disks). A
//! piece is accepted once a Taylor bound at its midpoint proves that the image
//! of the whole piece lies in a disk that excludes the origin; on such a piece
//! the change of argument equals the principal argument of `p(end) / p(start)`.
//! Summing those increments gives the winding number without any quadrature
//! error, so the integer snap below only absorbs rounding.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::poly::{taylor_shift_abs, taylor_shift_in_place, Polynomial};
use crate::rational::RationalFunction;
use crate::region::{jitter, Region};
use crate::scalar::Real;

/// Relative width of the boundary guard band.
pub const CONTOUR_GUARD: f64 = 1e-9;
/// Maximum number of boundary pieces examined per contour.
pub const MAX_PIECES: usize = 1 << 20;
/// Retries with an inflated region when a root sits on the boundary.
pub const INFLATE_RETRIES: usize = 8;

/// Piece, parameter interval and endpoint values.
type PendingPiece<T> = (Piece<T>, T, T, Complex<T>, Complex<T>);

#[derive(Clone, Copy)]
enum Piece<T> {
    Segment { from: Complex<T>, to: Complex<T> },
    Arc { center: Complex<T>, radius: T },
}

impl<T: Real> Piece<T> {
    /// Point at parameter `s` (`[0,1]` for segments, angle for arcs).
    fn at(&self, s: T) -> Complex<T> {
        match *self {
            Piece::Segment { from, to } => from + (to - from) * s,
            Piece::Arc { center, radius } => center + Complex::from_polar(radius, s),
        }
    }

    fn length(&self, s0: T, s1: T) -> T {
        match *self {
            Piece::Segment { from, to } => (to - from).norm() * (s1 - s0),
            Piece::Arc { radius, .. } => radius * (s1 - s0),
        }
    }
}

fn boundary<T: Real>(region: &Region<T>) -> Vec<(Piece<T>, T, T)> {
    const SPLIT: usize = 4;
    match *region {
        Region::Disk { center, radius } => {
            let n = 4 * SPLIT;
            let step = T::TAU() / T::from_usize_lossy(n);
            (0..n)
                .map(|k| {
                    let s0 = step * T::from_usize_lossy(k);
                    let s1 = if k + 1 == n {
                        T::TAU()
                    } else {
                        step * T::from_usize_lossy(k + 1)
                    };
                    (Piece::Arc { center, radius }, s0, s1)
                })
                .collect()
        }
        Region::Box {
            center,
            half_width,
            half_height,
        } => {
            let c = |dx: T, dy: T| center + Complex::new(dx, dy);
            let corners = [
                c(-half_width, -half_height),
                c(half_width, -half_height),
                c(half_width, half_height),
                c(-half_width, half_height),
            ];
            let mut out = Vec::with_capacity(4 * SPLIT);
            for i in 0..4 {
                let piece = Piece::Segment {
                    from: corners[i],
                    to: corners[(i + 1) % 4],
                };
                for k in 0..SPLIT {
                    let s0 = T::from_usize_lossy(k) / T::from_usize_lossy(SPLIT);
                    let s1 = T::from_usize_lossy(k + 1) / T::from_usize_lossy(SPLIT);
                    out.push((piece, s0, s1));
                }
            }
            out
        }
    }
}

/// Scratch buffers and error constants for one polynomial.
struct Certifier<'a, T: Real> {
    p: &'a Polynomial<T>,
    abs_coeffs: Vec<T>,
    taylor: Vec<Complex<T>>,
    taylor_abs: Vec<T>,
    gamma: T,
    gamma2: T,
}

impl<'a, T: Real> Certifier<'a, T> {
    fn new(p: &'a Polynomial<T>) -> Self {
        let n = T::from_usize_lossy(p.degree() + 1);
        let u = T::unit_roundoff();
        Self {
            p,
            abs_coeffs: p.coeffs().iter().map(|c| c.norm()).collect(),
            taylor: Vec::with_capacity(p.degree() + 1),
            taylor_abs: Vec::with_capacity(p.degree() + 1),
            gamma: T::lit(8.0) * n * n * u,
            gamma2: (T::lit(16.0) * n * u).powi(2),
        }
    }

    /// True when `p` provably has no zero within `rho` of `zm`, with the image
    /// of that disk confined to a disk around `p(zm)` that excludes 0.
    fn certify(&mut self, zm: Complex<T>, rho: T) -> bool {
        let v = self.p.eval_compensated(zm);
        self.taylor.clear();
        self.taylor.extend_from_slice(self.p.coeffs());
        taylor_shift_in_place(&mut self.taylor, zm);
        self.taylor_abs.clear();
        self.taylor_abs.extend_from_slice(&self.abs_coeffs);
        taylor_shift_abs(&mut self.taylor_abs, zm.norm());

        let u = T::unit_roundoff();
        let value_err = T::lit(2.0) * u * v.norm() + self.gamma2 * self.taylor_abs[0];
        let mut bound = T::zero();
        for j in (1..self.taylor.len()).rev() {
            bound = (bound + self.taylor[j].norm() + self.gamma * self.taylor_abs[j]) * rho;
        }
        bound + value_err < v.norm() * T::lit(0.999)
    }
}

/// Winding number of `p` around the boundary of `region`, without retries.
pub(crate) fn polynomial_winding<T: Real>(p: &Polynomial<T>, region: &Region<T>) -> Result<i64> {
    if p.is_zero() {
        return Err(Error::ContourTooClose);
    }
    if p.is_constant() {
        return Ok(0);
    }
    let min_len = region.scale() * T::lit(CONTOUR_GUARD);
    let mut cert = Certifier::new(p);
    let mut total = T::zero();
    let mut pieces = 0usize;
    let two = T::lit(2.0);

    let mut stack: Vec<PendingPiece<T>> = boundary(region)
        .into_iter()
        .map(|(piece, s0, s1)| {
            let v0 = p.eval_compensated(piece.at(s0));
            let v1 = p.eval_compensated(piece.at(s1));
            (piece, s0, s1, v0, v1)
        })
        .collect();

    while let Some((piece, s0, s1, v0, v1)) = stack.pop() {
        pieces += 1;
        if pieces > MAX_PIECES {
            return Err(Error::QuadratureNotConverged);
        }
        let sm = (s0 + s1) / two;
        let len = piece.length(s0, s1);
        if cert.certify(piece.at(sm), len / two) {
            total = total + (v1 * v0.conj()).arg();
            continue;
        }
        if len / two < min_len || !(s0 < sm && sm < s1) {
            return Err(Error::ContourTooClose);
        }
        let vm = p.eval_compensated(piece.at(sm));
        stack.push((piece, s0, sm, v0, vm));
        stack.push((piece, sm, s1, vm, v1));
    }

    let turns = total / T::TAU();
    let nearest = turns.round();
    if (turns - nearest).abs() >= T::lit(0.25) {
        return Err(Error::QuadratureNotConverged);
    }
    Ok(nearest.to_i64().unwrap_or(0))
}

/// Zeros minus poles of `f` inside `region`, without boundary retries.
pub(crate) fn rational_winding<T: Real>(f: &RationalFunction<T>, region: &Region<T>) -> Result<i64> {
    Ok(polynomial_winding(f.numerator(), region)? - polynomial_winding(f.denominator(), region)?)
}

/// Zeros minus poles of `f` inside `region`, counted with multiplicity.
///
/// When a zero or pole lies within the guard band of the boundary the region
/// is inflated by a factor slightly above one and the count is retried; the
/// returned region is the one actually certified.
pub fn winding_count<T: Real>(f: &RationalFunction<T>, region: &Region<T>) -> Result<(i64, Region<T>)> {
    let mut current = *region;
    for attempt in 0..=INFLATE_RETRIES {
        match rational_winding(f, &current) {
            Ok(n) => return Ok((n, current)),
            Err(Error::ContourTooClose) if attempt < INFLATE_RETRIES => {
                let factor = T::one() + T::lit(1e-7 * (1.0 + jitter(attempt)));
                current = region.inflate(factor.powi(attempt as i32 + 1));
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::ContourTooClose)
}
