//! Ground truth for point location and independent re-verification of walk
//! traces.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry2d::{od_compare, orientation, Orientation, Point2};
use crate::mesh::{FaceId, HalfEdgeId, Mesh};
use crate::walk::{Choice, WalkResult, WalkTrace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocationAnswer {
    /// Every interior face whose closed triangle contains the point, ascending.
    pub faces: Vec<FaceId>,
    /// The point lies on a boundary edge of the mesh.
    pub on_boundary_of_hull: bool,
}

impl LocationAnswer {
    pub fn contains(&self, f: FaceId) -> bool {
        self.faces.binary_search(&f).is_ok()
    }
}

/// Exhaustive closed-face scan.
pub fn brute_force_locate(m: &Mesh, p: Point2) -> LocationAnswer {
    let faces = m.face_ids().filter(|&f| m.face_contains(f, p)).collect();
    let on_boundary_of_hull = m.half_edge_ids().any(|e| m.is_boundary(e) && m.segment(e).contains(p));
    LocationAnswer { faces, on_boundary_of_hull }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditViolation {
    EmptyTrace,
    UnknownEdge {
        step: usize,
        edge: u32,
    },
    /// The first step is neither the start edge nor its twin.
    BadBootstrap {
        edge: u32,
    },
    /// Step `step` is not `inv(prev(.))` / `inv(next(.))` of the previous edge.
    NotConnected {
        step: usize,
    },
    /// The recorded L/R label does not match the successor taken.
    WrongLabel {
        step: usize,
    },
    /// Target not strictly left of the edge at `step`.
    HalfSpace {
        step: usize,
    },
    /// Oriented distance did not strictly decrease into `step`.
    NotDecreasing {
        step: usize,
    },
    /// Reported face does not contain the target, or is not the last face.
    WrongFace {
        face: u32,
    },
    StepCountMismatch {
        reported: usize,
        recorded: usize,
    },
}

impl fmt::Display for AuditViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Re-checks a trace against `m` with exact predicates: connectivity and
/// labels, the target staying strictly left of every edge, strictly
/// decreasing oriented distance, and the reported outcome.
pub fn audit_trace(m: &Mesh, trace: &WalkTrace) -> Vec<AuditViolation> {
    let mut report = Vec::new();
    let p = trace.target;
    let Some(first) = trace.steps.first() else {
        report.push(AuditViolation::EmptyTrace);
        return report;
    };
    for (k, s) in trace.steps.iter().enumerate() {
        if !m.contains_half_edge(HalfEdgeId(s.edge)) {
            report.push(AuditViolation::UnknownEdge { step: k, edge: s.edge });
        }
    }
    if !report.is_empty() || !m.contains_half_edge(HalfEdgeId(trace.start)) {
        return report;
    }
    let start = HalfEdgeId(trace.start);
    let e0 = HalfEdgeId(first.edge);
    if e0 != start && e0 != m.inv(start) {
        report.push(AuditViolation::BadBootstrap { edge: first.edge });
    }

    let on_first = m.segment(e0).contains(p);
    if !on_first {
        // A start collinear with p is allowed at step 0 only.
        let (a, b) = m.edge_points(e0);
        if orientation(a, b, p) == Orientation::Clockwise {
            report.push(AuditViolation::HalfSpace { step: 0 });
        }
    }

    for (k, pair) in trace.steps.windows(2).enumerate() {
        let step = k + 1;
        let (prev, cur) = (HalfEdgeId(pair[0].edge), HalfEdgeId(pair[1].edge));
        let successors = m.next(prev).and_then(|n| Ok((m.inv(m.prev(prev)?), m.inv(n))));
        match successors {
            Ok((l, r)) if cur == l || cur == r => {
                let expected = if cur == l { Choice::Left } else { Choice::Right };
                if pair[1].choice != expected {
                    report.push(AuditViolation::WrongLabel { step });
                }
            }
            _ => report.push(AuditViolation::NotConnected { step }),
        }
        let (a, b) = m.edge_points(cur);
        if orientation(a, b, p) != Orientation::CounterClockwise {
            report.push(AuditViolation::HalfSpace { step });
        }
        match od_compare(&m.segment(cur), &m.segment(prev), p) {
            Ok(Ordering::Less) => {}
            _ => report.push(AuditViolation::NotDecreasing { step }),
        }
    }

    let recorded = trace.steps.len() - 1;
    match trace.result {
        WalkResult::Found { face, steps } => {
            let last = HalfEdgeId(trace.steps[recorded].edge);
            if m.face(last) != FaceId(face) || !m.face_contains(FaceId(face), p) {
                report.push(AuditViolation::WrongFace { face });
            }
            if steps != recorded {
                report.push(AuditViolation::StepCountMismatch { reported: steps, recorded });
            }
        }
        WalkResult::Boundary { steps, .. } | WalkResult::Aborted { steps, .. } => {
            if steps != recorded {
                report.push(AuditViolation::StepCountMismatch { reported: steps, recorded });
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkStats {
    /// Face transitions.
    pub steps: usize,
    /// Mesh relations traversed: three per step (`next`, `prev`, and the
    /// `inv` of the chosen side) plus one `inv` if the start was flipped.
    pub atomic_ops: usize,
}

pub fn link_distance_stats(trace: &WalkTrace) -> LinkStats {
    let steps = trace.steps.len().saturating_sub(1);
    let flipped = trace.steps.first().is_some_and(|s| s.edge != trace.start);
    LinkStats { steps, atomic_ops: 3 * steps + usize::from(flipped) }
}

/// `count` points drawn uniformly from the mesh bounding box and kept only if
/// some face contains them. Deterministic in `seed`.
pub fn sample_queries(m: &Mesh, count: usize, seed: u64) -> Vec<Point2> {
    let (lo, hi) = m.bounds();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = Point2::new(rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
        if m.face_ids().any(|f| m.face_contains(f, p)) {
            out.push(p);
        }
    }
    out
}
