//! Oriented distance `[d, α, β]` of a triangle to a point in space.
//!
//! Let `q` be the closest point of the closed triangle to `p` and
//! `w = p − q` the ray. A roll axis is a direction `t` in the face plane,
//! anchored at `q`, along which a neighbourhood of `q` stays in the face
//! (the tangent cone of the triangle at `q`). For such `t`:
//!
//! * pitch `α(t)` is the angle between `w` and `t`;
//! * the pitch axis is `w × t`, and the pitch–roll plane is spanned by `t`
//!   and `w × t`; its normal is `m = w − (w·t) t` (for unit `t`);
//! * roll `β(t)` is the unsigned angle between the face and the pitch–roll
//!   plane, `cos β = |n·m| / |m|` with `n` the face normal, so `β ∈ [0, π/2]`.
//!
//! `[α, β]` is the lexicographic minimum over admissible `t`.
//!
//! Closed form. Optimality of `q` gives `w·t ≤ 0` for every admissible `t`,
//! so `α ≥ π/2`. Write `w = w_n n + w_p` with `w_p` in the plane.
//! * If `w_p = 0` (`p` projects onto `q`), every `t` has `α = π/2` and
//!   `m = w ∥ n`, so `β = 0`.
//! * On an edge interior the cone is a half-plane; `w_p` is normal to the
//!   edge, so `α = π/2` is attained exactly at `t = ±edge`, where `m = w`
//!   and `cos β = |w_n| / |w|`.
//! * At a vertex the cone is the wedge between the two incident edges.
//!   `w·t` is a sinusoid in the direction angle and `ŵ_p` lies outside the
//!   wedge, so the maximum of `w·t` sits on one of the two bounding edge
//!   directions. Ties between them go to the smaller roll.
//!
//! The face-interior case is the special case `w_p = 0` of the above.
//!
//! Unlike the planar measure this module uses plain floating point.

use std::cmp::Ordering;

use thiserror::Error;

/// Ties in [`od3_compare`] are decided with this absolute tolerance.
pub const OD3_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    fn sub(self, o: Point3) -> [f64; 3] {
        [self.x - o.x, self.y - o.y, self.z - o.z]
    }

    fn offset(self, v: [f64; 3], s: f64) -> Point3 {
        Point3::new(self.x + s * v[0], self.y + s * v[1], self.z + s * v[2])
    }
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub(crate) fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn unit(a: [f64; 3]) -> [f64; 3] {
    let n = norm(a);
    [a[0] / n, a[1] / n, a[2] / n]
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Od3Error {
    #[error("triangle vertices are collinear or not finite")]
    DegenerateTriangle,
    #[error("target point lies on the triangle")]
    PointOnFace,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle3 {
    v: [Point3; 3],
}

impl Triangle3 {
    pub fn new(a: Point3, b: Point3, c: Point3) -> Result<Self, Od3Error> {
        let finite = [a, b, c].iter().all(|p| p.x.is_finite() && p.y.is_finite() && p.z.is_finite());
        let n = cross(b.sub(a), c.sub(a));
        let scale = norm(b.sub(a)) * norm(c.sub(a));
        if !finite || norm(n) <= 1e-14 * scale || scale == 0.0 {
            return Err(Od3Error::DegenerateTriangle);
        }
        Ok(Triangle3 { v: [a, b, c] })
    }

    pub fn vertices(&self) -> [Point3; 3] {
        self.v
    }

    pub fn normal(&self) -> [f64; 3] {
        unit(cross(self.v[1].sub(self.v[0]), self.v[2].sub(self.v[0])))
    }
}

/// Part of the triangle the closest point lies on. `Edge(i)` joins vertex
/// `i` to vertex `(i + 1) % 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Feature {
    Face,
    Edge(usize),
    Vertex(usize),
}

/// Closest point of the closed triangle to `p`, by Voronoi-region
/// classification of `p` against the vertices and edges.
pub fn closest_point_on_triangle(t: &Triangle3, p: Point3) -> Result<(Point3, Feature), Od3Error> {
    let [a, b, c] = t.v;
    let ab = b.sub(a);
    let ac = c.sub(a);
    let ap = p.sub(a);
    let d1 = dot(ab, ap);
    let d2 = dot(ac, ap);
    let found = if d1 <= 0.0 && d2 <= 0.0 {
        (a, Feature::Vertex(0))
    } else {
        let bp = p.sub(b);
        let d3 = dot(ab, bp);
        let d4 = dot(ac, bp);
        let cp = p.sub(c);
        let d5 = dot(ab, cp);
        let d6 = dot(ac, cp);
        let vc = d1 * d4 - d3 * d2;
        let vb = d5 * d2 - d1 * d6;
        let va = d3 * d6 - d5 * d4;
        if d3 >= 0.0 && d4 <= d3 {
            (b, Feature::Vertex(1))
        } else if d6 >= 0.0 && d5 <= d6 {
            (c, Feature::Vertex(2))
        } else if vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0 {
            (a.offset(ab, d1 / (d1 - d3)), Feature::Edge(0))
        } else if vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0 {
            (a.offset(ac, d2 / (d2 - d6)), Feature::Edge(2))
        } else if va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0 {
            (b.offset(c.sub(b), (d4 - d3) / ((d4 - d3) + (d5 - d6))), Feature::Edge(1))
        } else {
            let denom = va + vb + vc;
            let (v, w) = (vb / denom, vc / denom);
            (a.offset(ab, v).offset(ac, w), Feature::Face)
        }
    };
    if dot(p.sub(found.0), p.sub(found.0)) == 0.0 {
        return Err(Od3Error::PointOnFace);
    }
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedDistance3 {
    pub d2: f64,
    /// Minimal pitch angle, radians in `[π/2, π]`.
    pub alpha: f64,
    /// Minimal roll angle among pitch minimizers, radians in `[0, π/2]`.
    pub beta: f64,
    /// Where the ray meets the triangle. Edge and vertex feet restrict the
    /// admissible roll axes to the tangent cone there.
    pub feature: Feature,
    /// A minimizing roll axis (unit, in the face plane).
    pub roll_axis: [f64; 3],
}

fn angle_between(a: [f64; 3], b: [f64; 3]) -> f64 {
    (dot(a, b) / (norm(a) * norm(b))).clamp(-1.0, 1.0).acos()
}

/// Pitch and roll for a unit in-plane axis `t`.
pub(crate) fn pitch_roll(w: [f64; 3], n: [f64; 3], t: [f64; 3]) -> (f64, f64) {
    let pitch = angle_between(w, t);
    let wt = dot(w, t);
    let m = [w[0] - wt * t[0], w[1] - wt * t[1], w[2] - wt * t[2]];
    let roll = (dot(n, m).abs() / norm(m)).clamp(0.0, 1.0).acos();
    (pitch, roll)
}

pub fn oriented_distance3(t: &Triangle3, p: Point3) -> Result<OrientedDistance3, Od3Error> {
    let (q, feature) = closest_point_on_triangle(t, p)?;
    let w = p.sub(q);
    let n = t.normal();
    let d2 = dot(w, w);
    let w_n = dot(w, n);
    let w_p = [w[0] - w_n * n[0], w[1] - w_n * n[1], w[2] - w_n * n[2]];

    let v = t.v;
    let edge_dir = |i: usize| unit(v[(i + 1) % 3].sub(v[i]));
    let (alpha, beta, roll_axis) = match feature {
        Feature::Face => (std::f64::consts::FRAC_PI_2, 0.0, edge_dir(0)),
        Feature::Edge(i) => {
            let d = edge_dir(i);
            let (pitch, roll) = pitch_roll(w, n, d);
            // w_p ⟂ d here, so pitch is π/2 up to rounding.
            let _ = w_p;
            (pitch.max(std::f64::consts::FRAC_PI_2), roll, d)
        }
        Feature::Vertex(i) => {
            let d_out = edge_dir(i);
            let d_in = unit(v[(i + 2) % 3].sub(v[i]));
            if norm(w_p) <= 1e-15 * norm(w) {
                (std::f64::consts::FRAC_PI_2, 0.0, d_out)
            } else {
                let a = pitch_roll(w, n, d_out);
                let b = pitch_roll(w, n, d_in);
                if lex_less(b, a) {
                    (b.0, b.1, d_in)
                } else {
                    (a.0, a.1, d_out)
                }
            }
        }
    };
    Ok(OrientedDistance3 { d2, alpha, beta, feature, roll_axis })
}

fn lex_less(a: (f64, f64), b: (f64, f64)) -> bool {
    match cmp_tol(a.0, b.0) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => cmp_tol(a.1, b.1) == Ordering::Less,
    }
}

fn cmp_tol(a: f64, b: f64) -> Ordering {
    if (a - b).abs() <= OD3_TOLERANCE {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Lexicographic order on `(d², α, β)`; components within
/// [`OD3_TOLERANCE`] compare equal.
pub fn od3_compare(a: &OrientedDistance3, b: &OrientedDistance3) -> Ordering {
    cmp_tol(a.d2, b.d2).then_with(|| cmp_tol(a.alpha, b.alpha)).then_with(|| cmp_tol(a.beta, b.beta))
}
