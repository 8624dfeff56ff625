//! The oblivious zig-zag walk.
//!
//! From the current half-edge `e` (target strictly to its left, outside
//! `face(e)`) the walk moves to whichever of the two other sides of
//! `face(e)`, seen from the far side, has the smaller oriented distance to
//! the target:
//!
//! ```text
//! if p is right of e:  e ← inv(e)
//! while p ∉ face(e):
//!     l, r ← inv(prev(e)), inv(next(e))
//!     e ← l if od(l, p) < od(r, p) else r      (ties per TieBreakPolicy)
//! ```
//!
//! `l` runs from `e`'s origin to the apex of `face(e)` and `r` from the apex
//! to `e`'s destination, so `l` is the geometrically left successor. (The
//! labelling `l = inv(next(e))` also appears in the literature; it swaps the
//! names but not the set of candidates, and only matters for tie-breaking.)
//! The oriented distance strictly decreases at every step, which bounds the
//! walk by the number of half-edges at most as far from the target as the
//! start.

use std::cmp::Ordering;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry2d::{od_compare, orientation, oriented_distance, Orientation, Point2};
use crate::mesh::{FaceId, HalfEdgeId, Mesh, MeshError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreakPolicy {
    RightFirst,
    LeftFirst,
    /// Chooses a side at random on ties; the draw for step `k` depends only
    /// on `(seed, k)`.
    RandomSeeded(u64),
}

impl TieBreakPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            TieBreakPolicy::RightFirst => "right",
            TieBreakPolicy::LeftFirst => "left",
            TieBreakPolicy::RandomSeeded(_) => "random",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkConfig {
    pub policy: TieBreakPolicy,
    /// Upper bound on successor steps; `None` means `|E| + 1`.
    pub max_steps: Option<usize>,
    pub record_trace: bool,
    /// Re-verify the half-space and monotonicity properties at every step.
    pub check_invariants: bool,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig { policy: TieBreakPolicy::RightFirst, max_steps: None, record_trace: false, check_invariants: false }
    }
}

impl WalkConfig {
    pub fn with_policy(policy: TieBreakPolicy) -> Self {
        WalkConfig { policy, ..Default::default() }
    }

    pub fn traced(mut self) -> Self {
        self.record_trace = true;
        self
    }

    pub fn checked(mut self) -> Self {
        self.check_invariants = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Choice {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
    #[serde(rename = "B")]
    Bootstrap,
}

/// One visited half-edge. `d` and `alpha` are display values; `d = 0,
/// alpha = 0` when the target lies on the edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WalkStep {
    pub edge: u32,
    pub choice: Choice,
    pub d: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AbortReason {
    MaxSteps,
    HalfSpaceViolated { edge: u32 },
    NotDecreasing { edge: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WalkResult {
    Found {
        face: u32,
        steps: usize,
    },
    /// The chosen successor lies on the outer face: the target is outside
    /// the mesh, or past a concavity of its boundary.
    Boundary {
        edge: u32,
        steps: usize,
    },
    Aborted {
        reason: AbortReason,
        steps: usize,
    },
}

impl WalkResult {
    pub fn steps(&self) -> usize {
        match *self {
            WalkResult::Found { steps, .. }
            | WalkResult::Boundary { steps, .. }
            | WalkResult::Aborted { steps, .. } => steps,
        }
    }

    pub fn found_face(&self) -> Option<FaceId> {
        match *self {
            WalkResult::Found { face, .. } => Some(FaceId(face)),
            _ => None,
        }
    }
}

/// Full record of a walk. `steps[0]` is the bootstrapped start edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkTrace {
    pub target: Point2,
    pub start: u32,
    pub policy: TieBreakPolicy,
    pub steps: Vec<WalkStep>,
    pub result: WalkResult,
}

impl WalkTrace {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trace serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<WalkTrace, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn edges(&self) -> impl Iterator<Item = HalfEdgeId> + '_ {
        self.steps.iter().map(|s| HalfEdgeId(s.edge))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Walk {
    pub result: WalkResult,
    pub trace: Option<WalkTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("half-edge {0} does not exist")]
    UnknownEdge(u32),
    #[error("target lies on the start edge; test its incident faces directly")]
    PointOnEdge,
    #[error("the side of half-edge {0} facing the target is the outer face")]
    BoundaryStart(u32),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

/// The two candidate successors `(l, r) = (inv(prev(e)), inv(next(e)))`.
pub fn successors(m: &Mesh, e: HalfEdgeId) -> Result<(HalfEdgeId, HalfEdgeId), MeshError> {
    let next = m.next(e)?;
    let prev = m.prev(e)?;
    Ok((m.inv(prev), m.inv(next)))
}

/// Orients the start edge so the target is on its left: returns `e` if `p`
/// is strictly left, `inv(e)` if strictly right. A target on the supporting
/// line (but off the segment) keeps whichever side is an interior face.
pub fn bootstrap(m: &Mesh, e: HalfEdgeId, p: Point2) -> Result<HalfEdgeId, WalkError> {
    let seg = m.segment(e);
    if seg.contains(p) {
        return Err(WalkError::PointOnEdge);
    }
    let chosen = match orientation(seg.start(), seg.end(), p) {
        Orientation::CounterClockwise => e,
        Orientation::Clockwise => m.inv(e),
        Orientation::Collinear if !m.is_boundary(e) => e,
        Orientation::Collinear => m.inv(e),
    };
    if m.is_boundary(chosen) {
        return Err(WalkError::BoundaryStart(chosen.0));
    }
    Ok(chosen)
}

/// Draw for tie number `step` of a seeded walk.
fn seeded_coin(seed: u64, step: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(2 * step as u128);
    rng.next_u64() & 1 == 1
}

/// One decision of the walk from interior half-edge `e`: the successor, the
/// side it is on, and the exact comparison `od(l, p)` vs `od(r, p)`.
pub fn choose_successor(
    m: &Mesh,
    e: HalfEdgeId,
    p: Point2,
    policy: TieBreakPolicy,
    step: usize,
) -> Result<(HalfEdgeId, Choice, Ordering), MeshError> {
    let (l, r) = successors(m, e)?;
    let ord = od_compare(&m.segment(l), &m.segment(r), p)?;
    let take_left = match ord {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match policy {
            TieBreakPolicy::RightFirst => false,
            TieBreakPolicy::LeftFirst => true,
            TieBreakPolicy::RandomSeeded(seed) => seeded_coin(seed, step),
        },
    };
    Ok(if take_left { (l, Choice::Left, ord) } else { (r, Choice::Right, ord) })
}

fn snapshot(m: &Mesh, e: HalfEdgeId, p: Point2, choice: Choice) -> WalkStep {
    let (d, alpha) = match oriented_distance(&m.segment(e), p) {
        Ok(od) => (od.distance(), od.alpha),
        Err(_) => (0.0, 0.0),
    };
    WalkStep { edge: e.0, choice, d, alpha }
}

/// Locates the face containing `p`, starting from `e_init`.
pub fn locate(m: &Mesh, e_init: HalfEdgeId, p: Point2, cfg: &WalkConfig) -> Result<Walk, WalkError> {
    if !m.contains_half_edge(e_init) {
        return Err(WalkError::UnknownEdge(e_init.0));
    }
    let max_steps = cfg.max_steps.unwrap_or(m.num_half_edges() + 1);
    let mut steps_log = Vec::new();
    let finish = |result: WalkResult, steps_log: Vec<WalkStep>| Walk {
        trace: cfg.record_trace.then(|| WalkTrace {
            target: p,
            start: e_init.0,
            policy: cfg.policy,
            steps: steps_log,
            result: result.clone(),
        }),
        result,
    };

    let mut e = match bootstrap(m, e_init, p) {
        Ok(e) => e,
        Err(WalkError::PointOnEdge) => {
            // Closed faces: either incident interior face contains p.
            let e = if m.is_boundary(e_init) { m.inv(e_init) } else { e_init };
            if cfg.record_trace {
                steps_log.push(snapshot(m, e, p, Choice::Bootstrap));
            }
            return Ok(finish(WalkResult::Found { face: m.face(e).0, steps: 0 }, steps_log));
        }
        Err(WalkError::BoundaryStart(edge)) => {
            if cfg.record_trace {
                steps_log.push(snapshot(m, HalfEdgeId(edge), p, Choice::Bootstrap));
            }
            return Ok(finish(WalkResult::Boundary { edge, steps: 0 }, steps_log));
        }
        Err(err) => return Err(err),
    };
    if cfg.record_trace {
        steps_log.push(snapshot(m, e, p, Choice::Bootstrap));
    }

    let mut steps = 0;
    loop {
        if m.face_contains(m.face(e), p) {
            return Ok(finish(WalkResult::Found { face: m.face(e).0, steps }, steps_log));
        }
        if steps >= max_steps {
            return Ok(finish(WalkResult::Aborted { reason: AbortReason::MaxSteps, steps }, steps_log));
        }
        let (next, choice, _) = choose_successor(m, e, p, cfg.policy, steps)?;
        if cfg.check_invariants {
            let seg = m.segment(next);
            if orientation(seg.start(), seg.end(), p) != Orientation::CounterClockwise {
                let reason = AbortReason::HalfSpaceViolated { edge: next.0 };
                return Ok(finish(WalkResult::Aborted { reason, steps }, steps_log));
            }
            if od_compare(&seg, &m.segment(e), p) != Ok(Ordering::Less) {
                let reason = AbortReason::NotDecreasing { edge: next.0 };
                return Ok(finish(WalkResult::Aborted { reason, steps }, steps_log));
            }
        }
        steps += 1;
        if cfg.record_trace {
            steps_log.push(snapshot(m, next, p, choice));
        }
        if m.is_boundary(next) {
            return Ok(finish(WalkResult::Boundary { edge: next.0, steps }, steps_log));
        }
        e = next;
    }
}

/// Baseline result with the visited faces and a count of mesh relations used.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineWalk {
    pub result: WalkResult,
    pub faces: Vec<FaceId>,
    /// One per `next` taken to reach a tested side, one per `inv` crossing.
    pub atomic_ops: usize,
}

/// Remembering stochastic visibility walk: in each triangle, test the sides
/// other than the entry side in random cyclic order and cross the first one
/// that has the target strictly on its far side.
pub fn visibility_walk_baseline(m: &Mesh, e_init: HalfEdgeId, p: Point2, seed: u64) -> Result<BaselineWalk, WalkError> {
    if !m.contains_half_edge(e_init) {
        return Err(WalkError::UnknownEdge(e_init.0));
    }
    let max_steps = 4 * m.num_half_edges() + 16;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = if m.is_boundary(e_init) { m.inv(e_init) } else { e_init };
    let mut entry: Option<HalfEdgeId> = None;
    let mut faces = vec![m.face(h)];
    let mut ops = 0;
    let mut steps = 0;

    'walk: loop {
        if steps >= max_steps {
            let result = WalkResult::Aborted { reason: AbortReason::MaxSteps, steps };
            return Ok(BaselineWalk { result, faces, atomic_ops: ops });
        }
        let sides = [h, m.next(h)?, m.prev(h)?];
        let offset = rng.gen_range(0..3);
        for k in 0..3 {
            let side = sides[(offset + k) % 3];
            if k > 0 {
                ops += 1;
            }
            if Some(side) == entry {
                continue;
            }
            let (a, b) = m.edge_points(side);
            if orientation(a, b, p) == Orientation::Clockwise {
                let across = m.inv(side);
                ops += 1;
                steps += 1;
                if m.is_boundary(across) {
                    let result = WalkResult::Boundary { edge: across.0, steps };
                    return Ok(BaselineWalk { result, faces, atomic_ops: ops });
                }
                faces.push(m.face(across));
                entry = Some(across);
                h = across;
                continue 'walk;
            }
        }
        let result = WalkResult::Found { face: m.face(h).0, steps };
        return Ok(BaselineWalk { result, faces, atomic_ops: ops });
    }
}
