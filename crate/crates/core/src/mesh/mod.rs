//! Indexed half-edge triangulation.
//!
//! Interior faces are counter-clockwise triangles. Face `f` owns half-edges
//! `3f`, `3f + 1`, `3f + 2` in winding order; boundary half-edges follow and
//! carry [`FaceId::OUTER`]. `prev` is not stored: inside a triangle it is
//! `next ∘ next`.

mod io;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::geometry2d::{od_compare, orientation, point_in_ccw_triangle, GeometryError, Orientation, Point2, Segment2};

pub use io::{parse_off, MeshFile, OffError};

macro_rules! id_type {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub u32);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

id_type!(VertexId);
id_type!(HalfEdgeId);
id_type!(
    /// Interior face index, or [`FaceId::OUTER`] for the unbounded side.
    FaceId
);

impl FaceId {
    pub const OUTER: FaceId = FaceId(u32::MAX);

    pub fn is_outer(self) -> bool {
        self == FaceId::OUTER
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfEdgeRecord {
    pub origin: VertexId,
    pub twin: HalfEdgeId,
    /// Next half-edge around `face`; for boundary half-edges, the next one
    /// along the outer boundary loop.
    pub next: HalfEdgeId,
    pub face: FaceId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeshError {
    #[error("triangle {triangle} references vertex {index}, but there are only {count} vertices")]
    IndexOutOfRange { triangle: usize, index: usize, count: usize },
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("triangle {0} is degenerate")]
    DegenerateFace(usize),
    #[error("edge ({0}, {1}) is used by more than two triangles")]
    NonManifold(u32, u32),
    #[error("edge ({0}, {1}) is traversed in the same direction by two triangles")]
    InconsistentOrientation(u32, u32),
    #[error("mesh has no triangles")]
    Empty,
    #[error("half-edge {0} lies on the outer face and has no interior winding")]
    OuterFace(HalfEdgeId),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// One broken invariant found by [`Mesh::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    IdOutOfRange { half_edge: HalfEdgeId },
    TwinNotInvolution { half_edge: HalfEdgeId },
    TwinIsSelf { half_edge: HalfEdgeId },
    TwinEndpointsMismatch { half_edge: HalfEdgeId },
    NextNotTriangle { half_edge: HalfEdgeId },
    FaceNotConstant { half_edge: HalfEdgeId },
    FaceNotCounterClockwise { face: FaceId },
    FaceHalfEdgeMismatch { face: FaceId },
    EdgeMultiplicity { from: VertexId, to: VertexId, count: usize },
    CoincidentVertices { a: VertexId, b: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IdOutOfRange { half_edge } => write!(f, "half-edge {half_edge}: id out of range"),
            Violation::TwinNotInvolution { half_edge } => write!(f, "half-edge {half_edge}: twin(twin(e)) != e"),
            Violation::TwinIsSelf { half_edge } => write!(f, "half-edge {half_edge}: twin(e) == e"),
            Violation::TwinEndpointsMismatch { half_edge } => {
                write!(f, "half-edge {half_edge}: twin does not reverse the endpoints")
            }
            Violation::NextNotTriangle { half_edge } => write!(f, "half-edge {half_edge}: next^3 != id"),
            Violation::FaceNotConstant { half_edge } => write!(f, "half-edge {half_edge}: face(next(e)) != face(e)"),
            Violation::FaceNotCounterClockwise { face } => write!(f, "face {face}: not counter-clockwise"),
            Violation::FaceHalfEdgeMismatch { face } => {
                write!(f, "face {face}: incident half-edge lies on another face")
            }
            Violation::EdgeMultiplicity { from, to, count } => {
                write!(f, "edge ({from}, {to}): {count} half-edges instead of 2")
            }
            Violation::CoincidentVertices { a, b } => write!(f, "vertices {a} and {b} coincide"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    vertices: Vec<Point2>,
    half_edges: Vec<HalfEdgeRecord>,
    faces: Vec<HalfEdgeId>,
}

impl Mesh {
    /// Builds the canonical half-edge mesh of a triangle soup. Clockwise
    /// triangles are flipped; unmatched sides get outer twins.
    pub fn from_triangles(points: Vec<Point2>, triangles: &[[u32; 3]]) -> Result<Mesh, MeshError> {
        if triangles.is_empty() {
            return Err(MeshError::Empty);
        }
        let n = points.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| points[i].x.total_cmp(&points[j].x).then(points[i].y.total_cmp(&points[j].y)));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(MeshError::DuplicateVertex(w[0].min(w[1]), w[0].max(w[1])));
            }
        }

        let mut tris = Vec::with_capacity(triangles.len());
        for (t, &[i, j, k]) in triangles.iter().enumerate() {
            for idx in [i, j, k] {
                if idx as usize >= n {
                    return Err(MeshError::IndexOutOfRange { triangle: t, index: idx as usize, count: n });
                }
            }
            if i == j || j == k || i == k {
                return Err(MeshError::DegenerateFace(t));
            }
            let tri = match orientation(points[i as usize], points[j as usize], points[k as usize]) {
                Orientation::CounterClockwise => [i, j, k],
                Orientation::Clockwise => [i, k, j],
                Orientation::Collinear => return Err(MeshError::DegenerateFace(t)),
            };
            tris.push(tri);
        }

        let mut undirected: HashMap<(u32, u32), usize> = HashMap::new();
        let mut seen_faces: HashMap<[u32; 3], usize> = HashMap::new();
        for tri in &tris {
            let mut key = *tri;
            key.sort_unstable();
            if seen_faces.insert(key, 0).is_some() {
                return Err(MeshError::NonManifold(key[0], key[1]));
            }
            for s in 0..3 {
                let (a, b) = (tri[s], tri[(s + 1) % 3]);
                let c = undirected.entry((a.min(b), a.max(b))).or_default();
                *c += 1;
                if *c > 2 {
                    return Err(MeshError::NonManifold(a.min(b), a.max(b)));
                }
            }
        }

        let mut half_edges = Vec::with_capacity(tris.len() * 3 + 16);
        let mut directed: HashMap<(u32, u32), u32> = HashMap::with_capacity(tris.len() * 3);
        for (f, tri) in tris.iter().enumerate() {
            for s in 0..3 {
                let h = (3 * f + s) as u32;
                let (a, b) = (tri[s], tri[(s + 1) % 3]);
                if directed.insert((a, b), h).is_some() {
                    return Err(MeshError::InconsistentOrientation(a, b));
                }
                half_edges.push(HalfEdgeRecord {
                    origin: VertexId(a),
                    twin: HalfEdgeId(u32::MAX),
                    next: HalfEdgeId((3 * f + (s + 1) % 3) as u32),
                    face: FaceId(f as u32),
                });
            }
        }

        let interior = half_edges.len();
        for h in 0..interior {
            if half_edges[h].twin.0 != u32::MAX {
                continue;
            }
            let a = half_edges[h].origin.0;
            let b = half_edges[half_edges[h].next.index()].origin.0;
            match directed.get(&(b, a)) {
                Some(&t) => {
                    half_edges[h].twin = HalfEdgeId(t);
                    half_edges[t as usize].twin = HalfEdgeId(h as u32);
                }
                None => {
                    let t = half_edges.len() as u32;
                    half_edges[h].twin = HalfEdgeId(t);
                    half_edges.push(HalfEdgeRecord {
                        origin: VertexId(b),
                        twin: HalfEdgeId(h as u32),
                        next: HalfEdgeId(u32::MAX),
                        face: FaceId::OUTER,
                    });
                }
            }
        }

        // Outer loop: after arriving at vertex u along boundary half-edge b,
        // rotate around u through interior faces until the boundary reappears.
        for b in interior..half_edges.len() {
            let mut h = half_edges[b].twin;
            loop {
                let prev = half_edges[half_edges[h.index()].next.index()].next;
                let t = half_edges[prev.index()].twin;
                if half_edges[t.index()].face.is_outer() {
                    half_edges[b].next = t;
                    break;
                }
                h = t;
            }
        }

        let faces = (0..tris.len()).map(|f| HalfEdgeId((3 * f) as u32)).collect();
        Ok(Mesh { vertices: points, half_edges, faces })
    }

    /// Assembles a mesh from raw records without checking anything. Pair with
    /// [`Mesh::validate`].
    pub fn from_raw_parts(vertices: Vec<Point2>, half_edges: Vec<HalfEdgeRecord>, faces: Vec<HalfEdgeId>) -> Mesh {
        Mesh { vertices, half_edges, faces }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn half_edges(&self) -> &[HalfEdgeRecord] {
        &self.half_edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_half_edges(&self) -> usize {
        self.half_edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn num_edges(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn half_edge_ids(&self) -> impl Iterator<Item = HalfEdgeId> + '_ {
        (0..self.half_edges.len() as u32).map(HalfEdgeId)
    }

    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len() as u32).map(FaceId)
    }

    pub fn contains_half_edge(&self, e: HalfEdgeId) -> bool {
        e.index() < self.half_edges.len()
    }

    pub fn point(&self, v: VertexId) -> Point2 {
        self.vertices[v.index()]
    }

    #[inline]
    pub fn inv(&self, e: HalfEdgeId) -> HalfEdgeId {
        self.half_edges[e.index()].twin
    }

    #[inline]
    pub fn face(&self, e: HalfEdgeId) -> FaceId {
        self.half_edges[e.index()].face
    }

    #[inline]
    pub fn origin(&self, e: HalfEdgeId) -> VertexId {
        self.half_edges[e.index()].origin
    }

    #[inline]
    pub fn next(&self, e: HalfEdgeId) -> Result<HalfEdgeId, MeshError> {
        let r = &self.half_edges[e.index()];
        if r.face.is_outer() {
            Err(MeshError::OuterFace(e))
        } else {
            Ok(r.next)
        }
    }

    #[inline]
    pub fn prev(&self, e: HalfEdgeId) -> Result<HalfEdgeId, MeshError> {
        let n = self.next(e)?;
        Ok(self.half_edges[n.index()].next)
    }

    pub fn is_boundary(&self, e: HalfEdgeId) -> bool {
        self.face(e).is_outer()
    }

    /// `(origin(e), origin(inv(e)))`
    #[inline]
    pub fn endpoints(&self, e: HalfEdgeId) -> (VertexId, VertexId) {
        (self.origin(e), self.origin(self.inv(e)))
    }

    #[inline]
    pub fn edge_points(&self, e: HalfEdgeId) -> (Point2, Point2) {
        let (a, b) = self.endpoints(e);
        (self.point(a), self.point(b))
    }

    pub fn segment(&self, e: HalfEdgeId) -> Segment2 {
        let (a, b) = self.edge_points(e);
        Segment2::new(a, b).expect("mesh vertices are distinct")
    }

    /// One half-edge of an interior face.
    pub fn face_half_edge(&self, f: FaceId) -> HalfEdgeId {
        self.faces[f.index()]
    }

    pub fn face_vertices(&self, f: FaceId) -> [VertexId; 3] {
        let h0 = self.faces[f.index()];
        let h1 = self.half_edges[h0.index()].next;
        let h2 = self.half_edges[h1.index()].next;
        [self.origin(h0), self.origin(h1), self.origin(h2)]
    }

    pub fn face_points(&self, f: FaceId) -> [Point2; 3] {
        self.face_vertices(f).map(|v| self.point(v))
    }

    /// Closed-triangle membership of `p` in `f`; always false for the outer face.
    pub fn face_contains(&self, f: FaceId, p: Point2) -> bool {
        if f.is_outer() {
            return false;
        }
        let [a, b, c] = self.face_points(f);
        point_in_ccw_triangle(a, b, c, p)
    }

    /// Interior triangles in face order, counter-clockwise.
    pub fn triangles(&self) -> Vec<[u32; 3]> {
        self.face_ids().map(|f| self.face_vertices(f).map(|v| v.0)).collect()
    }

    /// Checks every structural and geometric invariant.
    pub fn validate(&self) -> Vec<Violation> {
        let mut report = Vec::new();
        let nh = self.half_edges.len();
        let nv = self.vertices.len();
        let nf = self.faces.len();
        let in_range = |r: &HalfEdgeRecord| {
            r.origin.index() < nv
                && r.twin.index() < nh
                && r.next.index() < nh
                && (r.face.is_outer() || r.face.index() < nf)
        };

        let mut bad = vec![false; nh];
        for (i, r) in self.half_edges.iter().enumerate() {
            if !in_range(r) {
                bad[i] = true;
                report.push(Violation::IdOutOfRange { half_edge: HalfEdgeId(i as u32) });
            }
        }

        let mut multiplicity: HashMap<(u32, u32), usize> = HashMap::new();
        for (i, r) in self.half_edges.iter().enumerate() {
            if bad[i] || bad[r.twin.index()] || bad[r.next.index()] {
                continue;
            }
            let e = HalfEdgeId(i as u32);
            let twin = &self.half_edges[r.twin.index()];
            if r.twin == e {
                report.push(Violation::TwinIsSelf { half_edge: e });
            } else if twin.twin != e {
                report.push(Violation::TwinNotInvolution { half_edge: e });
            }
            if !r.face.is_outer() {
                let n1 = r.next;
                let n2 = self.half_edges[n1.index()].next;
                if bad[n2.index()] || self.half_edges[n2.index()].next != e {
                    report.push(Violation::NextNotTriangle { half_edge: e });
                } else if twin.origin != self.half_edges[n1.index()].origin {
                    report.push(Violation::TwinEndpointsMismatch { half_edge: e });
                }
            }
            if self.half_edges[r.next.index()].face != r.face {
                report.push(Violation::FaceNotConstant { half_edge: e });
            }
            let (a, b) = (r.origin.0, twin.origin.0);
            *multiplicity.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        let mut counts: Vec<_> = multiplicity.into_iter().filter(|&(_, c)| c != 2).collect();
        counts.sort_unstable();
        for ((a, b), count) in counts {
            report.push(Violation::EdgeMultiplicity { from: VertexId(a), to: VertexId(b), count });
        }

        for (f, &h) in self.faces.iter().enumerate() {
            let f = FaceId(f as u32);
            if h.index() >= nh || bad[h.index()] {
                report.push(Violation::FaceHalfEdgeMismatch { face: f });
                continue;
            }
            if self.half_edges[h.index()].face != f {
                report.push(Violation::FaceHalfEdgeMismatch { face: f });
                continue;
            }
            let h1 = self.half_edges[h.index()].next;
            let h2 = self.half_edges[h1.index()].next;
            if bad[h1.index()] || bad[h2.index()] {
                continue;
            }
            let [a, b, c] = [h, h1, h2].map(|x| self.vertices[self.half_edges[x.index()].origin.index()]);
            if orientation(a, b, c) != Orientation::CounterClockwise {
                report.push(Violation::FaceNotCounterClockwise { face: f });
            }
        }

        let mut order: Vec<usize> = (0..nv).collect();
        let v = &self.vertices;
        order.sort_by(|&i, &j| v[i].x.total_cmp(&v[j].x).then(v[i].y.total_cmp(&v[j].y)).then(i.cmp(&j)));
        for w in order.windows(2) {
            if v[w[0]] == v[w[1]] {
                report.push(Violation::CoincidentVertices { a: VertexId(w[0] as u32), b: VertexId(w[1] as u32) });
            }
        }
        report
    }

    /// Size of the neighborhood `{ e' : od(e', p) ≤ od(e, p) }`, counted over
    /// every half-edge by exhaustive exact comparison. Half-edges passing
    /// through `p` have distance zero and are included.
    pub fn neighborhood_size(&self, e: HalfEdgeId, p: Point2) -> Result<usize, GeometryError> {
        let reference = self.segment(e);
        if reference.contains(p) {
            return Err(GeometryError::PointOnEdge);
        }
        let mut count = 0;
        for other in self.half_edge_ids() {
            let s = self.segment(other);
            match od_compare(&s, &reference, p) {
                Ok(Ordering::Greater) => {}
                Ok(_) | Err(GeometryError::PointOnEdge) => count += 1,
                Err(err) => return Err(err),
            }
        }
        Ok(count)
    }

    /// Axis-aligned bounds `(min, max)` of the vertices.
    pub fn bounds(&self) -> (Point2, Point2) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices[1..] {
            lo = Point2::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point2::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
        v.iter().map(|&(x, y)| Point2::new(x, y)).collect()
    }

    fn square() -> Mesh {
        Mesh::from_triangles(pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]), &[[0, 1, 2], [0, 2, 3]]).unwrap()
    }

    #[test]
    fn single_triangle_counts() {
        let m = Mesh::from_triangles(pts(&[(0., 0.), (1., 0.), (0., 1.)]), &[[0, 1, 2]]).unwrap();
        assert_eq!(m.num_faces(), 1);
        assert_eq!(m.num_half_edges(), 6);
        assert_eq!(m.half_edge_ids().filter(|&e| m.is_boundary(e)).count(), 3);
        assert!(m.validate().is_empty());
    }

    #[test]
    fn square_shares_diagonal() {
        let m = square();
        assert_eq!(m.num_half_edges(), 10);
        let diag = m.half_edge_ids().find(|&e| m.endpoints(e) == (VertexId(2), VertexId(0))).unwrap();
        let twin = m.inv(diag);
        assert_eq!(m.endpoints(twin), (VertexId(0), VertexId(2)));
        assert!(!m.is_boundary(diag) && !m.is_boundary(twin));
        assert_ne!(m.face(diag), m.face(twin));
        assert!(m.validate().is_empty());
    }

    #[test]
    fn clockwise_input_is_flipped() {
        let m = Mesh::from_triangles(pts(&[(0., 0.), (1., 0.), (0., 1.)]), &[[0, 2, 1]]).unwrap();
        assert_eq!(m.triangles(), vec![[0, 1, 2]]);
    }

    #[test]
    fn construction_errors() {
        let p = pts(&[(0., 0.), (1., 0.), (0., 1.), (1., 1.)]);
        assert!(matches!(Mesh::from_triangles(p.clone(), &[[0, 1, 2], [0, 1, 2]]), Err(MeshError::NonManifold(..))));
        assert!(matches!(Mesh::from_triangles(p.clone(), &[[0, 1, 7]]), Err(MeshError::IndexOutOfRange { .. })));
        assert!(matches!(Mesh::from_triangles(p.clone(), &[[0, 1, 1]]), Err(MeshError::DegenerateFace(0))));
        let collinear = pts(&[(0., 0.), (1., 0.), (2., 0.)]);
        assert!(matches!(Mesh::from_triangles(collinear, &[[0, 1, 2]]), Err(MeshError::DegenerateFace(0))));
        let dup = pts(&[(0., 0.), (1., 0.), (0., 1.), (1., 0.)]);
        assert_eq!(Mesh::from_triangles(dup, &[[0, 1, 2]]), Err(MeshError::DuplicateVertex(1, 3)));
        // three triangles on one edge
        let fan = pts(&[(0., 0.), (1., 0.), (0.5, 1.), (0.5, 2.), (0.5, -1.)]);
        assert!(matches!(
            Mesh::from_triangles(fan.clone(), &[[0, 1, 2], [0, 1, 3], [0, 4, 1]]),
            Err(MeshError::NonManifold(0, 1))
        ));
        // two overlapping triangles on the same side of an edge
        assert!(matches!(
            Mesh::from_triangles(fan, &[[0, 1, 2], [0, 1, 3]]),
            Err(MeshError::InconsistentOrientation(0, 1))
        ));
        assert_eq!(Mesh::from_triangles(p, &[]), Err(MeshError::Empty));
    }

    #[test]
    fn accessor_identities() {
        let m = square();
        for e in m.half_edge_ids() {
            assert_eq!(m.inv(m.inv(e)), e);
            if m.is_boundary(e) {
                assert_eq!(m.next(e), Err(MeshError::OuterFace(e)));
                assert!(m.prev(e).is_err());
                continue;
            }
            let n = m.next(e).unwrap();
            assert_eq!(m.next(m.next(n).unwrap()).unwrap(), e);
            assert_eq!(m.prev(e).unwrap(), m.next(n).unwrap());
            assert_eq!(m.face(n), m.face(e));
            let (a, b) = m.endpoints(e);
            assert_eq!(m.endpoints(m.inv(e)), (b, a));
        }
    }

    #[test]
    fn outer_loop_is_closed() {
        let m = square();
        let start = m.half_edge_ids().find(|&e| m.is_boundary(e)).unwrap();
        let mut e = start;
        let mut len = 0;
        loop {
            let next = m.half_edges()[e.index()].next;
            assert!(m.is_boundary(next));
            assert_eq!(m.origin(next), m.endpoints(e).1);
            e = next;
            len += 1;
            if e == start {
                break;
            }
        }
        assert_eq!(len, 4);
    }

    #[test]
    fn validate_reports_corrupted_twin() {
        let m = square();
        let mut he = m.half_edges().to_vec();
        he[4].twin = HalfEdgeId(0);
        let bad = Mesh::from_raw_parts(m.vertices().to_vec(), he, (0..2).map(|f| HalfEdgeId(3 * f)).collect());
        let report = bad.validate();
        assert!(report.contains(&Violation::TwinNotInvolution { half_edge: HalfEdgeId(4) }), "{report:?}");
    }

    #[test]
    fn validate_reports_clockwise_face() {
        let m = square();
        let mut v = m.vertices().to_vec();
        // drag vertex 2 across the diagonal of face 0
        v[2] = Point2::new(0.2, -0.5);
        let bad = Mesh::from_raw_parts(v, m.half_edges().to_vec(), vec![HalfEdgeId(0), HalfEdgeId(3)]);
        let report = bad.validate();
        assert!(report.contains(&Violation::FaceNotCounterClockwise { face: FaceId(0) }), "{report:?}");
    }

    #[test]
    fn neighborhood_examples() {
        let m = Mesh::from_triangles(pts(&[(0., 0.), (2., 0.), (1., 1.)]), &[[0, 1, 2]]).unwrap();
        let bottom = m.half_edge_ids().find(|&e| m.endpoints(e) == (VertexId(0), VertexId(1))).unwrap();
        // far above: all sides are closer or equal
        let far = m.neighborhood_size(bottom, Point2::new(1., 10.)).unwrap();
        assert_eq!(far, 6);
        // just below the bottom edge: only the edge and its twin
        let near = m.neighborhood_size(bottom, Point2::new(1., -0.01)).unwrap();
        assert_eq!(near, 2);
        assert_eq!(m.neighborhood_size(bottom, Point2::new(1., 0.)), Err(GeometryError::PointOnEdge));
    }

    #[test]
    fn neighborhood_shrinks_toward_edge() {
        let m = square();
        let e = HalfEdgeId(0);
        let mut last = usize::MAX;
        for k in 1..=20 {
            let y = -10.0 / k as f64;
            let n = m.neighborhood_size(e, Point2::new(0.5, y)).unwrap();
            assert!(n <= last);
            last = n;
        }
    }
}
