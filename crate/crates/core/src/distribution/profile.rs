use serde::{Deserialize, Serialize};

use super::{QuadratureConfig, TargetAnalysis};
use crate::error::{Error, Result};
use crate::rational::RationalFunction;
use crate::scalar::Real;
use crate::target::TargetValue;

/// Multiplicative step applied to a radius that lands on an `a`-point.
pub const NUDGE_FACTOR: f64 = 1e-9;
const MAX_NUDGES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow<T> {
    pub r: T,
    pub n: usize,
    pub nbar: usize,
    #[serde(rename = "N")]
    pub big_n: T,
    #[serde(rename = "Nbar")]
    pub big_nbar: T,
    pub m: T,
    /// Characteristic `T(r, f)` from the pole route `m(r,∞) + N(r,∞)`.
    #[serde(rename = "T")]
    pub t: T,
    /// `m(r, a) + N(r, a)` for this target; equals `t` for `a = ∞`.
    pub m_plus_n: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusNudge<T> {
    pub requested: T,
    pub used: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NevanlinnaProfile<T> {
    pub target: TargetValue<T>,
    pub rows: Vec<ProfileRow<T>>,
    /// Radii moved off `a`-points of any target (shared by all profiles).
    pub nudges: Vec<RadiusNudge<T>>,
}

pub(crate) fn validate_grid<T: Real>(rgrid: &[T]) -> Result<()> {
    if rgrid.iter().any(|&r| !(r > T::zero()) || !r.is_finite()) {
        return Err(Error::InvalidGrid("radii must be positive and finite".into()));
    }
    if rgrid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidGrid("radii must be strictly increasing".into()));
    }
    Ok(())
}

/// `points` radii log-spaced over `[rmin, rmax]`, endpoints included.
pub fn log_grid<T: Real>(rmin: T, rmax: T, points: usize) -> Result<Vec<T>> {
    if !(rmin > T::zero()) || !(rmin < rmax) || !rmax.is_finite() || points < 2 {
        return Err(Error::InvalidGrid(
            "need 0 < rmin < rmax and at least two points".into(),
        ));
    }
    let (a, b) = (rmin.ln(), rmax.ln());
    let last = T::from_usize_lossy(points - 1);
    let mut grid: Vec<T> = (0..points)
        .map(|k| (a + (b - a) * T::from_usize_lossy(k) / last).exp())
        .collect();
    grid[0] = rmin;
    grid[points - 1] = rmax;
    Ok(grid)
}

/// Moves each radius off every `a`-point circle, recording the moves.
fn nudge_grid<T: Real>(rgrid: &[T], analyses: &[&TargetAnalysis<T>]) -> Result<(Vec<T>, Vec<RadiusNudge<T>>)> {
    let step = T::one() + T::lit(NUDGE_FACTOR);
    let mut used = Vec::with_capacity(rgrid.len());
    let mut nudges = Vec::new();
    for &requested in rgrid {
        let mut r = requested;
        let mut tries = 0;
        while analyses.iter().any(|a| a.touches_circle(r)) {
            tries += 1;
            if tries > MAX_NUDGES {
                return Err(Error::InvalidGrid("could not move radius off an a-point".into()));
            }
            r = r * step;
        }
        if r != requested {
            nudges.push(RadiusNudge { requested, used: r });
        }
        used.push(r);
    }
    validate_grid(&used)?;
    Ok((used, nudges))
}

/// Tabulates `n, n̄, N, N̄, m, T` for each target on the radius grid.
///
/// The `a`-points of each target are enumerated once. Rows are computed in
/// grid order so results do not depend on scheduling.
pub fn build_profile<T: Real>(
    f: &RationalFunction<T>,
    targets: &[TargetValue<T>],
    rgrid: &[T],
    cfg: &QuadratureConfig<T>,
) -> Result<Vec<NevanlinnaProfile<T>>> {
    cfg.validate()?;
    let f = f.reduced()?;
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    validate_grid(rgrid)?;
    if targets.is_empty() {
        return Ok(Vec::new());
    }

    let poles = TargetAnalysis::new(&f, TargetValue::Infinity)?;
    let analyses = targets
        .iter()
        .map(|&a| match a {
            TargetValue::Infinity => Ok(None),
            finite => TargetAnalysis::new(&f, finite).map(Some),
        })
        .collect::<Result<Vec<_>>>()?;

    let mut all: Vec<&TargetAnalysis<T>> = vec![&poles];
    all.extend(analyses.iter().flatten());
    let (grid, nudges) = nudge_grid(rgrid, &all)?;

    let characteristic = grid
        .iter()
        .map(|&r| Ok((poles.proximity(r, cfg)?, poles.integrated_count(r, false))))
        .collect::<Result<Vec<(T, T)>>>()?;

    targets
        .iter()
        .zip(&analyses)
        .map(|(&target, analysis)| {
            let analysis = analysis.as_ref().unwrap_or(&poles);
            let rows = grid
                .iter()
                .zip(&characteristic)
                .map(|(&r, &(m_inf, n_inf))| {
                    let (m, big_n) = if target.is_infinite() {
                        (m_inf, n_inf)
                    } else {
                        (analysis.proximity(r, cfg)?, analysis.integrated_count(r, false))
                    };
                    Ok(ProfileRow {
                        r,
                        n: analysis.count(r, false)?,
                        nbar: analysis.count(r, true)?,
                        big_n,
                        big_nbar: analysis.integrated_count(r, true),
                        m,
                        t: m_inf + n_inf,
                        m_plus_n: m + big_n,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(NevanlinnaProfile {
                target,
                rows,
                nudges: nudges.clone(),
            })
        })
        .collect()
}
