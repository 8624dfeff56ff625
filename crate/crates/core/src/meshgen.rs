//! Deterministic test and benchmark triangulations.

use std::cmp::Ordering;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry2d::{incircle, orientation, Orientation, Point2};
use crate::mesh::{Mesh, MeshError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenKind {
    /// `nx × ny` unit squares, each split along its rising diagonal.
    Grid { nx: usize, ny: usize },
    /// Delaunay triangulation of `n_points` uniform points in `bbox`
    /// (`[min_x, min_y, max_x, max_y]`).
    RandomDelaunay { n_points: usize, seed: u64, bbox: [f64; 4] },
    /// `n` triangles sharing the apex at the origin, spanning `apex_angle`
    /// radians in total.
    Fan { n: usize, apex_angle: f64 },
    /// Zig-zag strip of `n` triangles with unit base and height `1 / aspect`.
    ThinStrip { n: usize, aspect: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Uniform scale applied to every coordinate.
    pub scale: f64,
}

impl GenSpec {
    pub fn new(kind: GenKind) -> Self {
        GenSpec { kind, scale: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    SpecInvalid(String),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::SpecInvalid(msg.into())
}

pub fn generate(spec: &GenSpec) -> Result<Mesh, GenError> {
    if !(spec.scale.is_finite() && spec.scale > 0.0) {
        return Err(invalid("scale must be positive and finite"));
    }
    let (points, tris) = match spec.kind {
        GenKind::Grid { nx, ny } => grid(nx, ny)?,
        GenKind::RandomDelaunay { n_points, seed, bbox } => {
            let points = random_points(n_points, seed, bbox)?;
            let tris = delaunay(&points)?;
            (points, tris)
        }
        GenKind::Fan { n, apex_angle } => fan(n, apex_angle)?,
        GenKind::ThinStrip { n, aspect } => thin_strip(n, aspect)?,
    };
    let points = if spec.scale == 1.0 {
        points
    } else {
        points.into_iter().map(|p| Point2::new(p.x * spec.scale, p.y * spec.scale)).collect()
    };
    Ok(Mesh::from_triangles(points, &tris)?)
}

fn grid(nx: usize, ny: usize) -> Result<(Vec<Point2>, Vec<[u32; 3]>), GenError> {
    if nx == 0 || ny == 0 {
        return Err(invalid("grid dimensions must be positive"));
    }
    let idx = |i: usize, j: usize| (j * (nx + 1) + i) as u32;
    let points = (0..=ny).flat_map(|j| (0..=nx).map(move |i| Point2::new(i as f64, j as f64))).collect();
    let mut tris = Vec::with_capacity(2 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            tris.push([idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]);
            tris.push([idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)]);
        }
    }
    Ok((points, tris))
}

fn fan(n: usize, apex_angle: f64) -> Result<(Vec<Point2>, Vec<[u32; 3]>), GenError> {
    if n == 0 {
        return Err(invalid("fan needs at least one triangle"));
    }
    if !(apex_angle > 0.0 && apex_angle < std::f64::consts::PI) {
        return Err(invalid("fan apex angle must lie in (0, π)"));
    }
    let mut points = vec![Point2::new(0.0, 0.0)];
    for i in 0..=n {
        let theta = -0.5 * apex_angle + apex_angle * i as f64 / n as f64;
        points.push(Point2::new(theta.cos(), theta.sin()));
    }
    let tris = (1..=n as u32).map(|i| [0, i, i + 1]).collect();
    Ok((points, tris))
}

fn thin_strip(n: usize, aspect: f64) -> Result<(Vec<Point2>, Vec<[u32; 3]>), GenError> {
    if n == 0 {
        return Err(invalid("strip needs at least one triangle"));
    }
    if !(aspect.is_finite() && aspect > 0.0) {
        return Err(invalid("strip aspect must be positive and finite"));
    }
    let h = 1.0 / aspect;
    // Triangle k: even k has base b_{k/2} b_{k/2+1} and apex t_{k/2};
    // odd k has top t_{k/2} t_{k/2+1} and apex b_{k/2+1}.
    let bottom = n.div_ceil(2) + 1;
    let top = n / 2 + 1;
    let mut points: Vec<Point2> = (0..bottom).map(|i| Point2::new(i as f64, 0.0)).collect();
    points.extend((0..top).map(|i| Point2::new(i as f64 + 0.5, h)));
    let b = |i: usize| i as u32;
    let t = |i: usize| (bottom + i) as u32;
    let tris = (0..n)
        .map(|k| if k % 2 == 0 { [b(k / 2), b(k / 2 + 1), t(k / 2)] } else { [b(k / 2 + 1), t(k / 2 + 1), t(k / 2)] })
        .collect();
    Ok((points, tris))
}

fn random_points(n: usize, seed: u64, bbox: [f64; 4]) -> Result<Vec<Point2>, GenError> {
    let [x0, y0, x1, y1] = bbox;
    if n < 3 {
        return Err(invalid("a Delaunay mesh needs at least three points"));
    }
    if !bbox.iter().all(|v| v.is_finite()) || !(x0 < x1 && y0 < y1) {
        return Err(invalid("bounding box must be finite with min < max"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    let mut seen = std::collections::HashSet::with_capacity(n);
    while points.len() < n {
        let p = Point2::new(rng.gen_range(x0..x1), rng.gen_range(y0..y1));
        if seen.insert((p.x.to_bits(), p.y.to_bits())) {
            points.push(p);
        }
    }
    Ok(points)
}

/// Vertex index standing for the point at infinity.
const INF: u32 = u32::MAX;

/// Bowyer–Watson over the convex hull with ghost triangles `(a, b, ∞)`, one
/// per hull edge `b → a`. A point conflicts with a solid triangle when it is
/// strictly inside the circumcircle and with a ghost when it is strictly
/// outside the hull edge or on its open segment. Cocircular points are
/// therefore never in conflict, so ties resolve by insertion order.
/// Every step scans all triangles: O(n²) overall.
pub(crate) fn delaunay(points: &[Point2]) -> Result<Vec<[u32; 3]>, GenError> {
    let n = points.len() as u32;
    let (a, b) = (0u32, 1u32);
    let Some(c) = (2..n).find(|&c| orientation(points[0], points[1], points[c as usize]) != Orientation::Collinear)
    else {
        return Err(invalid("all points are collinear"));
    };
    let first = match orientation(points[0], points[1], points[c as usize]) {
        Orientation::CounterClockwise => [a, b, c],
        _ => [b, a, c],
    };
    let mut tris: Vec<[u32; 3]> = vec![first];
    for s in 0..3 {
        tris.push([first[(s + 1) % 3], first[s], INF]);
    }

    let pt = |i: u32| points[i as usize];
    let conflicts = |t: &[u32; 3], p: Point2| -> bool {
        if t[2] == INF {
            // hull edge t[1] -> t[0], interior on its left
            let (u, v) = (pt(t[1]), pt(t[0]));
            match orientation(u, v, p) {
                Orientation::Clockwise => true,
                Orientation::Collinear => {
                    let within = |lo: f64, hi: f64, x: f64| x > lo.min(hi) && x < lo.max(hi);
                    if u.x != v.x {
                        within(u.x, v.x, p.x)
                    } else {
                        within(u.y, v.y, p.y)
                    }
                }
                Orientation::CounterClockwise => false,
            }
        } else {
            incircle(pt(t[0]), pt(t[1]), pt(t[2]), p) == Ordering::Greater
        }
    };

    for i in (2..n).filter(|&i| i != c) {
        let p = pt(i);
        let mut cavity = Vec::new();
        let mut keep = Vec::with_capacity(tris.len() + 2);
        for t in tris.drain(..) {
            if conflicts(&t, p) {
                cavity.push(t);
            } else {
                keep.push(t);
            }
        }
        debug_assert!(!cavity.is_empty(), "every new point conflicts with some triangle");
        let mut edges: HashMap<(u32, u32), bool> = HashMap::with_capacity(cavity.len() * 3);
        for t in &cavity {
            for s in 0..3 {
                edges.insert((t[s], t[(s + 1) % 3]), true);
            }
        }
        for t in &cavity {
            for s in 0..3 {
                let (u, v) = (t[s], t[(s + 1) % 3]);
                if !edges.contains_key(&(v, u)) {
                    // Rotate so a ghost keeps ∞ last.
                    keep.push(match (u, v) {
                        (INF, v) => [v, i, INF],
                        (u, INF) => [i, u, INF],
                        (u, v) => [u, v, i],
                    });
                }
            }
        }
        tris = keep;
    }
    Ok(tris.into_iter().filter(|t| t[2] != INF).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler(m: &Mesh) -> i64 {
        m.num_vertices() as i64 - m.num_edges() as i64 + m.num_faces() as i64
    }

    #[test]
    fn grid_counts() {
        let m = generate(&GenSpec::new(GenKind::Grid { nx: 2, ny: 2 })).unwrap();
        assert_eq!((m.num_vertices(), m.num_edges(), m.num_faces()), (9, 16, 8));
        assert_eq!(euler(&m), 1);
        assert!(m.validate().is_empty());
    }

    #[test]
    fn delaunay_is_reproducible() {
        let spec = GenSpec::new(GenKind::RandomDelaunay { n_points: 100, seed: 7, bbox: [0., 0., 1., 1.] });
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().is_empty());
        assert_eq!(euler(&a), 1);
    }

    #[test]
    fn delaunay_small_cases() {
        // square plus its centre: four triangles
        let p: Vec<Point2> =
            [(0., 0.), (1., 0.), (1., 1.), (0., 1.), (0.5, 0.5)].map(|(x, y)| Point2::new(x, y)).to_vec();
        let tris = delaunay(&p).unwrap();
        assert_eq!(tris.len(), 4);
        // cocircular square alone: two triangles either way
        let tris = delaunay(&p[..4]).unwrap();
        assert_eq!(tris.len(), 2);
        // collinear points on the hull
        let p: Vec<Point2> =
            [(0., 0.), (2., 0.), (1., 1.), (1., 0.), (3., 0.)].map(|(x, y)| Point2::new(x, y)).to_vec();
        let m = Mesh::from_triangles(p.clone(), &delaunay(&p).unwrap()).unwrap();
        assert!(m.validate().is_empty());
        assert_eq!(m.num_faces(), 3);
        let line: Vec<Point2> = (0..4).map(|i| Point2::new(i as f64, 0.)).collect();
        assert!(delaunay(&line).is_err());
    }

    #[test]
    fn strip_and_fan_are_valid() {
        for n in [1, 2, 3, 10, 11] {
            let m = generate(&GenSpec::new(GenKind::ThinStrip { n, aspect: 100.0 })).unwrap();
            assert!(m.validate().is_empty(), "strip {n}");
            assert_eq!(m.num_faces(), n);
            assert_eq!(euler(&m), 1);
        }
        let m = generate(&GenSpec::new(GenKind::Fan { n: 50, apex_angle: 0.25 })).unwrap();
        assert!(m.validate().is_empty());
        assert_eq!(m.num_faces(), 50);
    }

    #[test]
    fn invalid_specs() {
        let bad = [
            GenKind::Grid { nx: 0, ny: 3 },
            GenKind::Fan { n: 5, apex_angle: 4.0 },
            GenKind::ThinStrip { n: 4, aspect: -1.0 },
            GenKind::RandomDelaunay { n_points: 2, seed: 0, bbox: [0., 0., 1., 1.] },
            GenKind::RandomDelaunay { n_points: 10, seed: 0, bbox: [1., 0., 0., 1.] },
        ];
        for kind in bad {
            assert!(matches!(generate(&GenSpec::new(kind)), Err(GenError::SpecInvalid(_))), "{kind:?}");
        }
        let spec = GenSpec { kind: GenKind::Grid { nx: 1, ny: 1 }, scale: 0.0 };
        assert!(generate(&spec).is_err());
    }

    #[test]
    fn scale_applies_to_coordinates() {
        let spec = GenSpec { kind: GenKind::Grid { nx: 1, ny: 1 }, scale: 2.5 };
        let m = generate(&spec).unwrap();
        assert_eq!(m.bounds().1, Point2::new(2.5, 2.5));
    }
}
