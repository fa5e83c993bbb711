use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_complex, Real};

/// Closed planar region whose boundary is traversed counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Region<T> {
    Disk {
        center: Complex<T>,
        radius: T,
    },
    Box {
        center: Complex<T>,
        half_width: T,
        half_height: T,
    },
}

impl<T: Real> Region<T> {
    pub fn disk(center: Complex<T>, radius: T) -> Result<Self> {
        if !is_finite_complex(center) || !(radius > T::zero()) || !radius.is_finite() {
            return Err(Error::InvalidConfig("disk radius must be positive and finite".into()));
        }
        Ok(Region::Disk { center, radius })
    }

    pub fn rect(center: Complex<T>, half_width: T, half_height: T) -> Result<Self> {
        let ok = |h: T| h > T::zero() && h.is_finite();
        if !is_finite_complex(center) || !ok(half_width) || !ok(half_height) {
            return Err(Error::InvalidConfig(
                "box half-widths must be positive and finite".into(),
            ));
        }
        Ok(Region::Box {
            center,
            half_width,
            half_height,
        })
    }

    /// Box `[x0, x1] x [y0, y1]`.
    pub fn from_corners(x0: T, x1: T, y0: T, y1: T) -> Result<Self> {
        let two = T::lit(2.0);
        Self::rect(
            Complex::new((x0 + x1) / two, (y0 + y1) / two),
            (x1 - x0) / two,
            (y1 - y0) / two,
        )
    }

    /// Square of half-width `half` centred on the origin.
    pub fn centered_square(half: T) -> Result<Self> {
        Self::rect(Complex::new(T::zero(), T::zero()), half, half)
    }

    pub fn center(&self) -> Complex<T> {
        match *self {
            Region::Disk { center, .. } | Region::Box { center, .. } => center,
        }
    }

    /// Largest radius or half-width; the length unit for guard bands.
    pub fn scale(&self) -> T {
        match *self {
            Region::Disk { radius, .. } => radius,
            Region::Box {
                half_width,
                half_height,
                ..
            } => half_width.max(half_height),
        }
    }

    /// Radius of the smallest disk about the center containing the region.
    pub fn circumradius(&self) -> T {
        match *self {
            Region::Disk { radius, .. } => radius,
            Region::Box {
                half_width,
                half_height,
                ..
            } => half_width.hypot(half_height),
        }
    }

    pub fn contains(&self, z: Complex<T>) -> bool {
        match *self {
            Region::Disk { center, radius } => (z - center).norm() < radius,
            Region::Box {
                center,
                half_width,
                half_height,
            } => (z.re - center.re).abs() < half_width && (z.im - center.im).abs() < half_height,
        }
    }

    /// Same center, every length multiplied by `factor`.
    pub fn inflate(&self, factor: T) -> Self {
        match *self {
            Region::Disk { center, radius } => Region::Disk {
                center,
                radius: radius * factor,
            },
            Region::Box {
                center,
                half_width,
                half_height,
            } => Region::Box {
                center,
                half_width: half_width * factor,
                half_height: half_height * factor,
            },
        }
    }

    /// Axis-aligned box containing the region.
    pub fn bounding_box(&self) -> Self {
        match *self {
            Region::Disk { center, radius } => Region::Box {
                center,
                half_width: radius,
                half_height: radius,
            },
            b @ Region::Box { .. } => b,
        }
    }
}

/// Deterministic jitter in `[0, 1)` for retry number `k` (golden-ratio sequence).
pub(crate) fn jitter(k: usize) -> f64 {
    let x = (k as f64 + 1.0) * 0.618_033_988_749_894_9;
    x - x.floor()
}
