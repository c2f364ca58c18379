//! Nonexpansive directions: brute-force orbit-boundary point sets, the four
//! predicted strips, minimal-width strip fitting, and slope classification.

use crate::exactnum::{GoldenNum, Vec2};
use crate::partition::{Location, Partition, SlopeClass};
use crate::torus::{self, TorusPoint};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// A strip {n : lower <= <n, normal> <= upper} around a line through the
/// origin in the given direction.
#[derive(Clone, Debug)]
pub struct StripSpec {
    pub normal: Vec2,
    pub lower: GoldenNum,
    pub upper: GoldenNum,
    pub slope_class: SlopeClass,
    pub direction: Vec2,
}

impl StripSpec {
    pub fn contains(&self, n: (i64, i64)) -> bool {
        let v = Vec2::of(n.0, n.1).dot(&self.normal);
        (&v - &self.lower).sign() >= 0 && (&v - &self.upper).sign() <= 0
    }

    /// How far outside the strip the point lies (0 when inside): the excess
    /// of |<n, normal>| over the bounds.
    pub fn excess(&self, n: (i64, i64)) -> GoldenNum {
        let v = Vec2::of(n.0, n.1).dot(&self.normal);
        let below = &self.lower - &v;
        let above = &v - &self.upper;
        below.max(above).max(GoldenNum::zero())
    }
}

/// The strip of the given slope family predicted to contain every
/// orbit-boundary hit, widened by `margin`.
pub fn predicted_strip(slope_class: SlopeClass, margin: &GoldenNum) -> StripSpec {
    let g = GoldenNum::of;
    match slope_class {
        // N' = Z^2 /\ {(x, y) : y in [0, 1]}
        SlopeClass::Zero => StripSpec {
            normal: Vec2::of(0, 1),
            lower: GoldenNum::zero() - margin.clone(),
            upper: GoldenNum::one() + margin.clone(),
            slope_class,
            direction: Vec2::of(1, 0),
        },
        // |<n, (-(phi+3), 1)>| <= phi+3 + delta, direction (1, phi+3)
        SlopeClass::Inf => {
            let bound = g(3, 1) + margin.clone();
            StripSpec {
                normal: Vec2::new(-g(3, 1), GoldenNum::one()),
                lower: -bound.clone(),
                upper: bound,
                slope_class,
                direction: Vec2::new(GoldenNum::one(), g(3, 1)),
            }
        }
        // |<n, (phi-8, 1-2phi)>| <= 3(3-phi) + delta, direction (1-2phi, 8-phi)
        SlopeClass::Phi => {
            let bound = g(9, -3) + margin.clone();
            StripSpec {
                normal: Vec2::new(g(-8, 1), g(1, -2)),
                lower: -bound.clone(),
                upper: bound,
                slope_class,
                direction: Vec2::new(g(1, -2), g(8, -1)),
            }
        }
        // |<n, (5-2phi, -2)>| <= (4/3)((2-phi)^2 + 1) + delta,
        // direction (2, 5-2phi)
        SlopeClass::PhiSq => {
            let two_m_phi = g(2, -1);
            let bound = GoldenNum::rational(4, 3) * (&two_m_phi * &two_m_phi + GoldenNum::one())
                + margin.clone();
            StripSpec {
                normal: Vec2::new(g(5, -2), g(-2, 0)),
                lower: -bound.clone(),
                upper: bound,
                slope_class,
                direction: Vec2::new(g(2, 0), g(5, -2)),
            }
        }
    }
}

/// Brute force: all n in the closed window with act(n, p) on the partition
/// boundary.
pub fn orbit_delta(
    partition: &Partition,
    p: &TorusPoint,
    window: (i64, i64, i64, i64),
) -> BTreeSet<(i64, i64)> {
    let (x0, y0, x1, y1) = window;
    (y0..=y1)
        .into_par_iter()
        .flat_map_iter(|y| {
            let p = p.clone();
            (x0..=x1).filter_map(move |x| match partition.locate(&p.act(x, y)) {
                Location::Boundary(_) => Some((x, y)),
                Location::Interior(_) => None,
            })
        })
        .collect()
}

/// Square window [-r, r]^2.
pub fn square_window(r: i64) -> (i64, i64, i64, i64) {
    (-r, -r, r, r)
}

/// Result of minimal-width strip fitting on an integer point set. Since the
/// points are integral, the optimal direction is a primitive integer vector
/// (a convex-hull edge); the width is reported by its exact square,
/// width^2 = spread^2 / |direction|^2, a rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripFit {
    pub direction: (i64, i64),
    pub width_sq: GoldenNum,
}

/// Minimal-width enclosing strip of a finite integer point set, by rotating
/// calipers over the exact convex hull.
pub fn strip_fit(points: &BTreeSet<(i64, i64)>) -> Option<StripFit> {
    if points.len() < 2 {
        return None;
    }
    let pts: Vec<(i64, i64)> = points.iter().copied().collect();
    let hull = convex_hull(&pts);
    if hull.len() == 2 {
        // Collinear points: zero width along the hull direction.
        let d = primitive((hull[1].0 - hull[0].0, hull[1].1 - hull[0].1));
        return Some(StripFit {
            direction: d,
            width_sq: GoldenNum::zero(),
        });
    }
    let mut best: Option<StripFit> = None;
    let h = hull.len();
    for i in 0..h {
        let a = hull[i];
        let b = hull[(i + 1) % h];
        let d = (b.0 - a.0, b.1 - a.1);
        // Spread: max |cross(p - a, d)| over hull points (all on one side).
        let spread = hull
            .iter()
            .map(|p| (cross_i((p.0 - a.0, p.1 - a.1), d)).abs())
            .max()
            .unwrap();
        let dp = primitive(d);
        let len_sq = d.0 as i128 * d.0 as i128 + d.1 as i128 * d.1 as i128;
        let width_sq = GoldenNum::from_bigint((spread * spread).into())
            / GoldenNum::from_bigint(len_sq.into());
        if best
            .as_ref()
            .map_or(true, |bst| width_sq < bst.width_sq)
        {
            best = Some(StripFit {
                direction: dp,
                width_sq,
            });
        }
    }
    best
}

/// Width of the narrowest strip with one of the four canonical directions
/// that encloses the point set; returns the best class and the exact squared
/// width. Canonical directions are irrational, so this complements
/// `strip_fit`, which is restricted to integer hull-edge directions.
pub fn strip_fit_canonical(points: &BTreeSet<(i64, i64)>) -> Option<(SlopeClass, GoldenNum)> {
    if points.len() < 2 {
        return None;
    }
    let mut best: Option<(SlopeClass, GoldenNum)> = None;
    for class in SlopeClass::ALL {
        let norm = predicted_strip(class, &GoldenNum::zero()).normal;
        let mut lo: Option<GoldenNum> = None;
        let mut hi: Option<GoldenNum> = None;
        for &(x, y) in points {
            let v = Vec2::of(x, y).dot(&norm);
            if lo.as_ref().map_or(true, |l| &v < l) {
                lo = Some(v.clone());
            }
            if hi.as_ref().map_or(true, |h| &v > h) {
                hi = Some(v);
            }
        }
        let spread = hi.unwrap() - lo.unwrap();
        let width_sq = (&spread * &spread) / norm.dot(&norm);
        if best.as_ref().map_or(true, |(_, w)| &width_sq < w) {
            best = Some((class, width_sq));
        }
    }
    best
}

/// Slope classification of a torus point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointClass {
    OriginOrbit,
    Slope(SlopeClass),
    /// No boundary hit on the scanned window; a window-relative verdict.
    Generic,
}

/// Classifies a point: in the combined lattice/integer orbit of the origin,
/// on the orbit of a single Delta slope family, or window-certified generic.
pub fn classify_point(partition: &Partition, p: &TorusPoint, radius: i64) -> PointClass {
    if torus::in_lattice_plus_z2(p.rep()) {
        return PointClass::OriginOrbit;
    }
    let mut classes: BTreeSet<SlopeClass> = BTreeSet::new();
    for y in -radius..=radius {
        for x in -radius..=radius {
            if let Location::Boundary(ids) = partition.locate(&p.act(x, y)) {
                for id in ids {
                    classes.insert(partition.line(id).unwrap().slope);
                }
            }
        }
        if !classes.is_empty() && y > -radius + 2 {
            break; // a few rows of hits are enough to know the family
        }
    }
    match classes.len() {
        0 => PointClass::Generic,
        1 => PointClass::Slope(*classes.iter().next().unwrap()),
        _ => unreachable!(
            "orbit of a non-origin point met Delta-lines of several slopes: {classes:?}"
        ),
    }
}

fn cross_i(u: (i64, i64), v: (i64, i64)) -> i128 {
    u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128
}

fn primitive(d: (i64, i64)) -> (i64, i64) {
    let g = gcd(d.0.unsigned_abs(), d.1.unsigned_abs()) as i64;
    let mut p = if g == 0 { d } else { (d.0 / g, d.1 / g) };
    if p.0 < 0 || (p.0 == 0 && p.1 < 0) {
        p = (-p.0, -p.1);
    }
    p
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact convex hull (Andrew's monotone chain) of integer points.
pub fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            if cross_i((b.0 - a.0, b.1 - a.1), (p.0 - a.0, p.1 - a.1)) <= 0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            if cross_i((b.0 - a.0, b.1 - a.1), (p.0 - a.0, p.1 - a.1)) <= 0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
