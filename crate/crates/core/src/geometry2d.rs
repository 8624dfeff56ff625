//! Exact planar predicates and the oriented distance between a point and a
//! segment.
//!
//! The oriented distance of a segment `e` to a target `p` is the pair
//! `[d, α]`: `d` is the Euclidean distance from `p` to the closest point
//! `e_p` of the closed segment, and `α` is the angle between `w = p − e_p`
//! and the direction `u` pointing from `e_p` into the segment (towards the
//! far endpoint when `e_p` is an endpoint). First-order optimality of `e_p`
//! gives `w·u ≤ 0`, so `α ∈ [π/2, π]`, with `α = π/2` whenever `e_p` lies
//! strictly inside the segment.
//!
//! Pairs are ordered lexicographically. Every comparison here is exact: it
//! works on `d²` and on `w·u`, `|u|²` with no square roots or trigonometry,
//! and the polynomial signs are certified by an interval filter with a
//! rational fallback. The angle carried in [`OrientedDistance::alpha`] is a
//! floating-point display value and is never consulted for ordering.

use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Exact, Interval, Real};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("segment has zero length")]
    ZeroLengthSegment,
    #[error("target point lies on the segment")]
    PointOnEdge,
    #[error("triangle is not counter-clockwise or has zero area")]
    DegenerateTriangle,
}

/// A point of the plane with finite coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    /// Panics on NaN or infinite coordinates; use [`Point2::try_new`] for
    /// untrusted input.
    pub fn new(x: f64, y: f64) -> Self {
        Self::try_new(x, y).expect("Point2 coordinates must be finite")
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() {
            Ok(Point2 { x, y })
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

impl TryFrom<[f64; 2]> for Point2 {
    type Error = GeometryError;
    fn try_from([x, y]: [f64; 2]) -> Result<Self, Self::Error> {
        Point2::try_new(x, y)
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Closed segment from `a` to `b`, `a ≠ b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment2 {
    a: Point2,
    b: Point2,
}

impl Segment2 {
    pub fn new(a: Point2, b: Point2) -> Result<Self, GeometryError> {
        if a == b {
            Err(GeometryError::ZeroLengthSegment)
        } else {
            Ok(Segment2 { a, b })
        }
    }

    pub fn start(&self) -> Point2 {
        self.a
    }

    pub fn end(&self) -> Point2 {
        self.b
    }

    /// Exact test for `p` on the closed segment.
    pub fn contains(&self, p: Point2) -> bool {
        orientation(self.a, self.b, p) == Orientation::Collinear
            && p.x >= self.a.x.min(self.b.x)
            && p.x <= self.a.x.max(self.b.x)
            && p.y >= self.a.y.min(self.b.y)
            && p.y <= self.a.y.max(self.b.y)
    }

    fn same_undirected(&self, other: &Segment2) -> bool {
        (self.a == other.a && self.b == other.b) || (self.a == other.b && self.b == other.a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Collinear,
    Clockwise,
}

impl Orientation {
    /// `+1` for a left turn, `0` for collinear, `-1` for a right turn.
    pub fn sign(self) -> i8 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Collinear => 0,
            Orientation::Clockwise => -1,
        }
    }

    fn from_sign(s: Ordering) -> Self {
        match s {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Less => Orientation::Clockwise,
        }
    }
}

/// Where the closest point of a segment to a target lies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosestPointClass {
    AtStart,
    Interior,
    AtEnd,
}

/// Runs the interval version of a predicate and falls back to rationals when
/// the filter cannot certify every sign.
#[inline]
fn certified<R>(fast: impl FnOnce() -> Option<R>, exact: impl FnOnce() -> Option<R>) -> R {
    match fast() {
        Some(r) => r,
        None => exact().expect("rational arithmetic decides every sign"),
    }
}

#[inline]
fn lift<T: Real>(p: Point2) -> (T, T) {
    (T::from_f64(p.x), T::from_f64(p.y))
}

fn orient_in<T: Real>(a: Point2, b: Point2, c: Point2) -> Option<Ordering> {
    let (ax, ay) = lift::<T>(a);
    let (bx, by) = lift::<T>(b);
    let (cx, cy) = lift::<T>(c);
    let det = (bx - ax.clone()) * (cy - ay.clone()) - (by - ay) * (cx - ax);
    det.sign()
}

/// Exact orientation of `c` relative to the directed line `a → b`.
pub fn orientation(a: Point2, b: Point2, c: Point2) -> Orientation {
    Orientation::from_sign(certified(|| orient_in::<Interval>(a, b, c), || orient_in::<Exact>(a, b, c)))
}

fn incircle_in<T: Real>(a: Point2, b: Point2, c: Point2, d: Point2) -> Option<Ordering> {
    let (dx, dy) = lift::<T>(d);
    let row = |p: Point2| {
        let (px, py) = lift::<T>(p);
        let x = px - dx.clone();
        let y = py - dy.clone();
        let n = x.clone() * x.clone() + y.clone() * y.clone();
        (x, y, n)
    };
    let (ax, ay, an) = row(a);
    let (bx, by, bn) = row(b);
    let (cx, cy, cn) = row(c);
    let det = ax * (by.clone() * cn.clone() - bn.clone() * cy.clone()) - ay * (bx.clone() * cn - bn * cx.clone())
        + an * (bx * cy - by * cx);
    det.sign()
}

/// Exact in-circle test: `Greater` when `d` lies strictly inside the
/// circumcircle of the counter-clockwise triangle `(a, b, c)`, `Equal` when
/// the four points are cocircular.
pub fn incircle(a: Point2, b: Point2, c: Point2, d: Point2) -> Ordering {
    certified(|| incircle_in::<Interval>(a, b, c, d), || incircle_in::<Exact>(a, b, c, d))
}

/// `true` iff `p` lies in the closed triangle `(a, b, c)`, which must be
/// counter-clockwise.
pub fn point_in_triangle(a: Point2, b: Point2, c: Point2, p: Point2) -> Result<bool, GeometryError> {
    if orientation(a, b, c) != Orientation::CounterClockwise {
        return Err(GeometryError::DegenerateTriangle);
    }
    Ok(point_in_ccw_triangle(a, b, c, p))
}

/// Closed-triangle membership without re-checking the winding.
pub(crate) fn point_in_ccw_triangle(a: Point2, b: Point2, c: Point2, p: Point2) -> bool {
    orientation(a, b, p) != Orientation::Clockwise
        && orientation(b, c, p) != Orientation::Clockwise
        && orientation(c, a, p) != Orientation::Clockwise
}

/// Raw polynomial data of the oriented distance, in some arithmetic `T`.
///
/// `d² = d2_num / d2_den`; `dot = w·u ≤ 0`; `u_len2 = |u|²`.
struct Measure<T> {
    class: ClosestPointClass,
    d2_num: T,
    d2_den: T,
    dot: T,
    u_len2: T,
    foot: Option<Point2>,
}

fn measure_in<T: Real>(s: &Segment2, p: Point2) -> Option<Measure<T>> {
    let (ax, ay) = lift::<T>(s.a);
    let (bx, by) = lift::<T>(s.b);
    let (px, py) = lift::<T>(p);
    let vx = bx.clone() - ax.clone();
    let vy = by.clone() - ay.clone();
    let wx = px.clone() - ax;
    let wy = py.clone() - ay;
    let t = vx.clone() * wx.clone() + vy.clone() * wy.clone();
    let len2 = vx.clone() * vx.clone() + vy.clone() * vy.clone();

    if t.sign()? != Ordering::Greater {
        return Some(Measure {
            class: ClosestPointClass::AtStart,
            d2_num: wx.clone() * wx + wy.clone() * wy,
            d2_den: T::from_f64(1.0),
            dot: t,
            u_len2: len2,
            foot: Some(s.a),
        });
    }
    let beyond = t.clone() - len2.clone();
    if beyond.sign()? != Ordering::Less {
        let qx = px - bx;
        let qy = py - by;
        return Some(Measure {
            class: ClosestPointClass::AtEnd,
            d2_num: qx.clone() * qx + qy.clone() * qy,
            d2_den: T::from_f64(1.0),
            dot: -beyond,
            u_len2: len2,
            foot: Some(s.b),
        });
    }
    let cross = vx * wy - vy * wx;
    Some(Measure {
        class: ClosestPointClass::Interior,
        d2_num: cross.clone() * cross,
        d2_den: len2.clone(),
        dot: T::zero(),
        u_len2: len2,
        foot: None,
    })
}

fn dist_cmp_in<T: Real>(
    sa: &Segment2,
    sb: &Segment2,
    ma: &Measure<T>,
    mb: &Measure<T>,
) -> Option<Result<Ordering, GeometryError>> {
    if ma.d2_num.sign()? == Ordering::Equal || mb.d2_num.sign()? == Ordering::Equal {
        return Some(Err(GeometryError::PointOnEdge));
    }
    if sa.same_undirected(sb) {
        return Some(Ok(Ordering::Equal));
    }
    // Two endpoint feet at the same vertex have identical distances.
    if matches!((ma.foot, mb.foot), (Some(fa), Some(fb)) if fa == fb) {
        return Some(Ok(Ordering::Equal));
    }
    let diff = ma.d2_num.clone() * mb.d2_den.clone() - mb.d2_num.clone() * ma.d2_den.clone();
    Some(Ok(diff.sign()?))
}

/// Equal d: α_a < α_b ⟺ cos α_a > cos α_b ⟺ dot_a/|u_a| > dot_b/|u_b|.
/// Both dots are ≤ 0, so this is dot_a²·|u_b|² < dot_b²·|u_a|².
fn angle_cmp_in<T: Real>(ma: Measure<T>, mb: Measure<T>) -> Option<Ordering> {
    let lhs = ma.dot.clone() * ma.dot * mb.u_len2;
    let rhs = mb.dot.clone() * mb.dot * ma.u_len2;
    (lhs - rhs).sign()
}

fn od_cmp_in<T: Real>(sa: &Segment2, sb: &Segment2, p: Point2) -> Option<Result<Ordering, GeometryError>> {
    let ma = measure_in::<T>(sa, p)?;
    let mb = measure_in::<T>(sb, p)?;
    match dist_cmp_in(sa, sb, &ma, &mb)? {
        Ok(Ordering::Equal) => Some(Ok(angle_cmp_in(ma, mb)?)),
        other => Some(other),
    }
}

fn d_cmp_in<T: Real>(sa: &Segment2, sb: &Segment2, p: Point2) -> Option<Result<Ordering, GeometryError>> {
    let ma = measure_in::<T>(sa, p)?;
    let mb = measure_in::<T>(sb, p)?;
    dist_cmp_in(sa, sb, &ma, &mb)
}

/// Closest point of the closed segment to `p`, with its position class.
pub fn closest_point_on_segment(s: &Segment2, p: Point2) -> (Point2, ClosestPointClass) {
    let class =
        certified(|| measure_in::<Interval>(s, p).map(|m| m.class), || measure_in::<Exact>(s, p).map(|m| m.class));
    let foot = match class {
        ClosestPointClass::AtStart => s.a,
        ClosestPointClass::AtEnd => s.b,
        ClosestPointClass::Interior => {
            let (vx, vy) = (s.b.x - s.a.x, s.b.y - s.a.y);
            let t = ((p.x - s.a.x) * vx + (p.y - s.a.y) * vy) / (vx * vx + vy * vy);
            Point2::new(s.a.x + t * vx, s.a.y + t * vy)
        }
    };
    (foot, class)
}

/// The oriented distance `[d, α]` of a segment to a target point.
///
/// Holds the generating segment and target so that [`OrientedDistance::cmp_exact`]
/// can re-derive everything exactly; the floating fields are for display.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedDistance {
    segment: Segment2,
    target: Point2,
    pub closest: ClosestPointClass,
    /// Approximate closest point `e_p`.
    pub foot: Point2,
    /// Approximate `d²`.
    pub d2: f64,
    /// `p − e_p`.
    pub w: [f64; 2],
    /// Into-segment direction at `e_p`.
    pub u: [f64; 2],
    /// Display angle in radians, `π/2` exactly for interior feet.
    pub alpha: f64,
}

impl OrientedDistance {
    pub fn distance(&self) -> f64 {
        self.d2.sqrt()
    }

    pub fn segment(&self) -> Segment2 {
        self.segment
    }

    pub fn target(&self) -> Point2 {
        self.target
    }

    /// Exact lexicographic comparison. Both measures must refer to the same
    /// target point.
    pub fn cmp_exact(&self, other: &OrientedDistance) -> Ordering {
        assert_eq!(self.target, other.target, "oriented distances to different targets");
        od_compare(&self.segment, &other.segment, self.target).expect("targets validated at construction")
    }
}

pub fn oriented_distance(s: &Segment2, p: Point2) -> Result<OrientedDistance, GeometryError> {
    if s.contains(p) {
        return Err(GeometryError::PointOnEdge);
    }
    let (foot, closest) = closest_point_on_segment(s, p);
    let w = [p.x - foot.x, p.y - foot.y];
    let v = [s.b.x - s.a.x, s.b.y - s.a.y];
    let u = match closest {
        ClosestPointClass::AtEnd => [-v[0], -v[1]],
        _ => v,
    };
    let alpha = match closest {
        ClosestPointClass::Interior => FRAC_PI_2,
        _ => {
            let cos = (w[0] * u[0] + w[1] * u[1]) / (w[0].hypot(w[1]) * u[0].hypot(u[1]));
            cos.clamp(-1.0, 0.0).acos()
        }
    };
    Ok(OrientedDistance { segment: *s, target: p, closest, foot, d2: w[0] * w[0] + w[1] * w[1], w, u, alpha })
}

/// Exact lexicographic comparison of the oriented distances of two segments
/// to `p`. The measure ignores segment direction.
pub fn od_compare(sa: &Segment2, sb: &Segment2, p: Point2) -> Result<Ordering, GeometryError> {
    certified(|| od_cmp_in::<Interval>(sa, sb, p), || od_cmp_in::<Exact>(sa, sb, p))
}

/// Classification of a target against a triangle `(e1, e2, tip)` seen from
/// its base edge `e1 → e2`, with `l = (e1, tip)` and `r = (tip, e2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionClass {
    /// `d_l < d_r`, closest point of `l` is `e1`.
    Il,
    /// `d_l < d_r`, closest point of `l` strictly inside `l`.
    IIl,
    /// `d_l = d_r`, `α_l < α_r`.
    IIIl,
    /// `d_l = d_r`, `α_l = α_r`.
    IV,
    /// `d_l = d_r`, `α_l > α_r`.
    IIIr,
    /// `d_l > d_r`, closest point of `r` strictly inside `r`.
    IIr,
    /// `d_l > d_r`, closest point of `r` is `e2`.
    Ir,
    OnFace,
    RightOfSupportLine,
}

pub fn classify_region(e1: Point2, e2: Point2, tip: Point2, p: Point2) -> Result<RegionClass, GeometryError> {
    if !point_in_triangle(e1, e2, tip, p)? {
        if orientation(e1, e2, p) == Orientation::Clockwise {
            return Ok(RegionClass::RightOfSupportLine);
        }
    } else {
        return Ok(RegionClass::OnFace);
    }
    let l = Segment2::new(e1, tip)?;
    let r = Segment2::new(tip, e2)?;
    let by_distance = certified(|| d_cmp_in::<Interval>(&l, &r, p), || d_cmp_in::<Exact>(&l, &r, p))?;
    let class = match by_distance {
        // d_l < d_r rules out a foot at the shared tip.
        Ordering::Less => match closest_point_on_segment(&l, p).1 {
            ClosestPointClass::Interior => RegionClass::IIl,
            _ => RegionClass::Il,
        },
        Ordering::Greater => match closest_point_on_segment(&r, p).1 {
            ClosestPointClass::Interior => RegionClass::IIr,
            _ => RegionClass::Ir,
        },
        Ordering::Equal => match measure_angle_cmp(&l, &r, p) {
            Ordering::Less => RegionClass::IIIl,
            Ordering::Equal => RegionClass::IV,
            Ordering::Greater => RegionClass::IIIr,
        },
    };
    Ok(class)
}

/// Angle-only comparison for two segments already known to tie on distance.
fn measure_angle_cmp(l: &Segment2, r: &Segment2, p: Point2) -> Ordering {
    fn angle_in<T: Real>(l: &Segment2, r: &Segment2, p: Point2) -> Option<Ordering> {
        angle_cmp_in(measure_in::<T>(l, p)?, measure_in::<T>(r, p)?)
    }
    certified(|| angle_in::<Interval>(l, r, p), || angle_in::<Exact>(l, r, p))
}
