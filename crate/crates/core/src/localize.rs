//! Certified root enclosures by quadtree subdivision.
//!
//! Every box carries a winding count proven by [`crate::winding`]. Boxes with
//! count zero are dropped, the rest are split until their diagonal is below
//! the requested tolerance. Splits happen at the midpoint first; when a root
//! lands on a split line the split point is moved by a small deterministic
//! offset and the children are recounted.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, TRIM_RELATIVE};
use crate::region::{jitter, Region};
use crate::scalar::Real;
use crate::target::TargetValue;
use crate::winding::{polynomial_winding, INFLATE_RETRIES};

/// Hard cap on quadtree depth.
/// Enclosure diameter used by [`numerical_roots`], relative to the Cauchy
/// bound.
pub const ENUMERATION_RELATIVE_TOL: f64 = 1e-13;
/// Roots closer than this, relative to their modulus, are candidates for a
/// single multiple root.
pub const CLUSTER_PREFILTER: f64 = 1e-3;
/// Multiplier on `deg * u * |p|(|c|)` in the pseudozero radius.
pub const CLUSTER_ROUNDOFF_FACTOR: f64 = 64.0;
pub const MAX_DEPTH: usize = 200;
const SPLIT_RETRIES: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootEnclosure<T> {
    /// Always a disk.
    pub region: Region<T>,
    pub multiplicity: usize,
    pub target: TargetValue<T>,
}

impl<T: Real> RootEnclosure<T> {
    pub fn center(&self) -> Complex<T> {
        self.region.center()
    }

    pub fn radius(&self) -> T {
        self.region.scale()
    }
}

#[derive(Clone, Copy, Debug)]
struct Cell<T> {
    x0: T,
    x1: T,
    y0: T,
    y1: T,
    count: usize,
    depth: usize,
}

impl<T: Real> Cell<T> {
    fn region(&self) -> Region<T> {
        let two = T::lit(2.0);
        Region::Box {
            center: Complex::new((self.x0 + self.x1) / two, (self.y0 + self.y1) / two),
            half_width: (self.x1 - self.x0) / two,
            half_height: (self.y1 - self.y0) / two,
        }
    }

    fn diagonal(&self) -> T {
        (self.x1 - self.x0).hypot(self.y1 - self.y0)
    }

    fn resolvable(&self) -> bool {
        // Stop before the split point collides with the corners in floating point.
        let mag = self.x0.abs().max(self.x1.abs()).max(self.y0.abs()).max(self.y1.abs());
        let floor = T::lit(64.0) * T::epsilon() * mag.max(T::min_positive_value().sqrt());
        (self.x1 - self.x0).min(self.y1 - self.y0) > floor
    }

    /// Children of the split at the relative position `t` in both axes.
    fn quarters(&self, t: T) -> [Cell<T>; 4] {
        let xm = self.x0 + (self.x1 - self.x0) * t;
        let ym = self.y0 + (self.y1 - self.y0) * t;
        let d = self.depth + 1;
        let mk = |x0, x1, y0, y1| Cell {
            x0,
            x1,
            y0,
            y1,
            count: 0,
            depth: d,
        };
        [
            mk(self.x0, xm, self.y0, ym),
            mk(xm, self.x1, self.y0, ym),
            mk(self.x0, xm, ym, self.y1),
            mk(xm, self.x1, ym, self.y1),
        ]
    }

    /// Splits and counts the children. The fourth count follows from
    /// conservation since all four children share certified edges.
    fn split(&self, p: &Polynomial<T>) -> Result<[Cell<T>; 4]> {
        if self.depth >= MAX_DEPTH || !self.resolvable() {
            return Err(Error::SubdivisionDepthExceeded {
                width: (self.x1 - self.x0).to_f64().unwrap_or(f64::NAN),
            });
        }
        'attempt: for attempt in 0..SPLIT_RETRIES {
            let t = if attempt == 0 {
                T::lit(0.5)
            } else {
                T::lit(0.5 + 0.1 * (jitter(attempt + 7 * self.depth) - 0.5))
            };
            let mut kids = self.quarters(t);
            let mut seen = 0usize;
            for kid in kids.iter_mut().take(3) {
                match polynomial_winding(p, &kid.region()) {
                    Ok(n) if n >= 0 => {
                        kid.count = n as usize;
                        seen += kid.count;
                    }
                    Ok(_) | Err(Error::ContourTooClose) => continue 'attempt,
                    Err(e) => return Err(e),
                }
            }
            if seen > self.count {
                continue;
            }
            kids[3].count = self.count - seen;
            return Ok(kids);
        }
        Err(Error::RootOnBoundary {
            attempts: SPLIT_RETRIES,
        })
    }
}

/// Counts roots of `p` in `region` and in its bounding box, inflating the
/// region slightly when a root sits on its boundary.
fn certified_start<T: Real>(p: &Polynomial<T>, region: &Region<T>) -> Result<(Region<T>, usize, Cell<T>)> {
    for attempt in 0..=INFLATE_RETRIES {
        let current = if attempt == 0 {
            *region
        } else {
            let f = T::one() + T::lit(1e-7 * (1.0 + jitter(attempt)));
            region.inflate(f.powi(attempt as i32))
        };
        let counted = polynomial_winding(p, &current).and_then(|n| {
            let bbox = current.bounding_box();
            let m = if matches!(current, Region::Disk { .. }) {
                polynomial_winding(p, &bbox)?
            } else {
                n
            };
            Ok((n, bbox, m))
        });
        match counted {
            Ok((
                n,
                Region::Box {
                    center,
                    half_width,
                    half_height,
                },
                m,
            )) => {
                let cell = Cell {
                    x0: center.re - half_width,
                    x1: center.re + half_width,
                    y0: center.im - half_height,
                    y1: center.im + half_height,
                    count: m.max(0) as usize,
                    depth: 0,
                };
                return Ok((current, n.max(0) as usize, cell));
            }
            Ok(_) => unreachable!("bounding box is a box"),
            Err(Error::ContourTooClose) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RootOnBoundary {
        attempts: INFLATE_RETRIES,
    })
}

fn subdivide<T: Real>(p: &Polynomial<T>, root: Cell<T>, tol: T) -> Result<Vec<Cell<T>>> {
    let mut leaves = Vec::new();
    let mut stack = vec![root];
    while let Some(cell) = stack.pop() {
        if cell.count == 0 {
            continue;
        }
        if cell.diagonal() <= tol {
            leaves.push(cell);
            continue;
        }
        stack.extend(cell.split(p)?);
    }
    Ok(leaves)
}

fn disk_around<T: Real>(x0: T, x1: T, y0: T, y1: T) -> Region<T> {
    let two = T::lit(2.0);
    Region::Disk {
        center: Complex::new((x0 + x1) / two, (y0 + y1) / two),
        radius: (x1 - x0).hypot(y1 - y0) / two,
    }
}

/// Groups leaves whose circumscribed disks overlap.
/// Bounding box `x0, x1, y0, y1` and total multiplicity of merged leaves.
type MergedBox<T> = (T, T, T, T, usize);

fn merge_leaves<T: Real>(leaves: &[Cell<T>]) -> Vec<MergedBox<T>> {
    let n = leaves.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let disks: Vec<Region<T>> = leaves.iter().map(|c| disk_around(c.x0, c.x1, c.y0, c.y1)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let gap = (disks[i].center() - disks[j].center()).norm();
            if gap < disks[i].scale() + disks[j].scale() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(usize, MergedBox<T>)> = Vec::new();
    for (i, c) in leaves.iter().enumerate() {
        let g = find(&mut parent, i);
        match groups.iter_mut().find(|(k, _)| *k == g) {
            Some((_, acc)) => {
                acc.0 = acc.0.min(c.x0);
                acc.1 = acc.1.max(c.x1);
                acc.2 = acc.2.min(c.y0);
                acc.3 = acc.3.max(c.y1);
                acc.4 += c.count;
            }
            None => groups.push((g, (c.x0, c.x1, c.y0, c.y1, c.count))),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

fn sort_canonical<T: Real>(out: &mut [RootEnclosure<T>]) {
    out.sort_by(|a, b| {
        let (za, zb) = (a.center(), b.center());
        za.re
            .partial_cmp(&zb.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(za.im.partial_cmp(&zb.im).unwrap_or(std::cmp::Ordering::Equal))
    });
}

/// Disjoint disk enclosures of the roots of `p` in `region`, each of radius
/// at most `tol` (clusters tighter than `tol` are reported once with summed
/// multiplicity). Sorted by `(re, im)` of the centers.
pub fn localize_roots<T: Real>(p: &Polynomial<T>, region: &Region<T>, tol: T) -> Result<Vec<RootEnclosure<T>>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !(tol > T::zero()) {
        return Err(Error::InvalidConfig("localization tolerance must be positive".into()));
    }
    let (working, expected, start) = certified_start(p, region)?;
    let mut leaves = subdivide(p, start, tol)?;
    if matches!(working, Region::Disk { .. }) {
        leaves.retain(|c| working.contains(c.region().center()));
    }

    let mut out = Vec::new();
    for (x0, x1, y0, y1, count) in merge_leaves(&leaves) {
        let disk = disk_around(x0, x1, y0, y1);
        let confirmed = polynomial_winding(p, &disk).map_err(|_| Error::RootOnBoundary { attempts: 0 })?;
        if confirmed != count as i64 {
            return Err(Error::RootOnBoundary { attempts: 0 });
        }
        out.push(RootEnclosure {
            region: disk,
            multiplicity: count,
            target: TargetValue::Finite(Complex::new(T::zero(), T::zero())),
        });
    }
    if out.iter().map(|e| e.multiplicity).sum::<usize>() != expected {
        return Err(Error::RootOnBoundary { attempts: 0 });
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// Enclosures of every root of `p`, searched inside its Cauchy bound.
pub fn all_roots<T: Real>(p: &Polynomial<T>, tol: T) -> Result<Vec<RootEnclosure<T>>> {
    let region = Region::centered_square(p.cauchy_bound())?;
    localize_roots(p, &region, tol)
}

/// Depth-first descent to a single root of `p` in `region`.
///
/// Among children holding roots the one whose center is closest to `prefer`
/// is entered. Descent ends when the cell diagonal reaches `tol` or when
/// `stop(center)` accepts the current cell center.
pub fn localize_one<T: Real>(
    p: &Polynomial<T>,
    region: &Region<T>,
    tol: T,
    prefer: Complex<T>,
    mut stop: impl FnMut(Complex<T>) -> bool,
) -> Result<RootEnclosure<T>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let (_, _, mut cell) = certified_start(p, region)?;
    if cell.count == 0 {
        return Err(Error::LocalizationFailed(Box::new(Error::InvalidConfig(
            "no root in region".into(),
        ))));
    }
    loop {
        let center = cell.region().center();
        if cell.diagonal() <= tol || stop(center) {
            break;
        }
        let kids = match cell.split(p) {
            Ok(k) => k,
            // Resolution floor: report the smallest certified cell.
            Err(Error::SubdivisionDepthExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        cell = kids
            .into_iter()
            .filter(|k| k.count > 0)
            .min_by(|a, b| {
                let da = (a.region().center() - prefer).norm();
                let db = (b.region().center() - prefer).norm();
                da.partial_cmp(&db).unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("a nonzero count is conserved by the split");
    }
    Ok(RootEnclosure {
        region: disk_around(cell.x0, cell.x1, cell.y0, cell.y1),
        multiplicity: cell.count,
        target: TargetValue::Finite(Complex::new(T::zero(), T::zero())),
    })
}

/// Roots of `p` with multiplicities; a root at the origin is taken from the
/// vanishing low-order coefficients so that it is exactly zero.
pub fn numerical_roots<T: Real>(p: &Polynomial<T>) -> Result<Vec<(Complex<T>, usize)>> {
    let mut out = Vec::new();
    let at_origin = p.origin_multiplicity(T::lit(TRIM_RELATIVE));
    if at_origin > 0 {
        out.push((Complex::new(T::zero(), T::zero()), at_origin));
    }
    let rest = p.divide_by_power(at_origin);
    if !rest.is_constant() {
        let tol = rest.cauchy_bound() * T::lit(ENUMERATION_RELATIVE_TOL);
        let found: Vec<(Complex<T>, usize)> = all_roots(&rest, tol)
            .map_err(|e| Error::LocalizationFailed(Box::new(e)))?
            .into_iter()
            .map(|e| (e.center(), e.multiplicity))
            .collect();
        out.extend(merge_multiple_roots(&rest, found));
    }
    out.sort_by(|a, b| {
        a.0.re
            .partial_cmp(&b.0.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.0.im.partial_cmp(&b.0.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    Ok(out)
}

/// Radius within which a `k`-fold root of `p` at `c` is indistinguishable
/// from `k` simple roots in floating point.
fn pseudozero_radius<T: Real>(p: &Polynomial<T>, c: Complex<T>, k: usize) -> T {
    let mut d = p.clone();
    let mut factorial = T::one();
    for j in 1..=k {
        d = d.derivative();
        factorial = factorial * T::from_usize_lossy(j);
    }
    let slope = d.eval(c).norm();
    if slope == T::zero() {
        return T::infinity();
    }
    let floor =
        T::lit(CLUSTER_ROUNDOFF_FACTOR) * T::from_usize_lossy(p.degree()) * T::unit_roundoff() * p.abs_eval(c.norm());
    (floor * factorial / slope).powf(T::one() / T::from_usize_lossy(k))
}

/// Groups nearby roots and replaces each group by its centroid when the
/// group fits inside the pseudozero radius of a root of the combined
/// multiplicity.
fn merge_multiple_roots<T: Real>(p: &Polynomial<T>, roots: Vec<(Complex<T>, usize)>) -> Vec<(Complex<T>, usize)> {
    let n = roots.len();
    let near = |a: Complex<T>, b: Complex<T>| {
        (a - b).norm() <= T::lit(CLUSTER_PREFILTER) * a.norm().max(b.norm()).max(T::one())
    };
    let mut group: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if near(roots[i].0, roots[j].0) {
                let (gi, gj) = (group[i], group[j]);
                for g in group.iter_mut() {
                    if *g == gj {
                        *g = gi;
                    }
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for leader in 0..n {
        let members: Vec<&(Complex<T>, usize)> = (0..n).filter(|&i| group[i] == leader).map(|i| &roots[i]).collect();
        if members.is_empty() {
            continue;
        }
        if members.len() == 1 {
            out.push(*members[0]);
            continue;
        }
        let k: usize = members.iter().map(|m| m.1).sum();
        let centroid = members.iter().fold(Complex::new(T::zero(), T::zero()), |acc, m| {
            acc + m.0 * T::from_usize_lossy(m.1)
        }) / T::from_usize_lossy(k);
        let radius = pseudozero_radius(p, centroid, k);
        if members.iter().all(|m| (m.0 - centroid).norm() <= radius) {
            out.push((centroid, k));
        } else {
            out.extend(members.into_iter().copied());
        }
    }
    out
}
