//! Point location in planar triangulations by an oblivious zig-zag walk.
//!
//! From a half-edge whose left face is interior, the walk repeatedly moves
//! to whichever of the two other sides of the current triangle (re-oriented
//! to face the target) is closer to the target under the oriented distance
//! `[d, α]`: Euclidean distance first, then the angle between the shortest
//! ray and the segment. That measure strictly decreases, so the walk
//! terminates on any triangulation and its length is bounded by the number
//! of half-edges at most as close as the start.
//!
//! All 2D predicates are exact: interval filters with a rational fallback.
//!
//! ```
//! use zigzag::geometry2d::Point2;
//! use zigzag::meshgen::{generate, GenKind, GenSpec};
//! use zigzag::mesh::HalfEdgeId;
//! use zigzag::walk::{locate, WalkConfig, WalkResult};
//!
//! let mesh = generate(&GenSpec::new(GenKind::Grid { nx: 4, ny: 4 })).unwrap();
//! let walk = locate(&mesh, HalfEdgeId(0), Point2::new(3.3, 2.6), &WalkConfig::default()).unwrap();
//! let face = walk.result.found_face().unwrap();
//! assert!(mesh.face_contains(face, Point2::new(3.3, 2.6)));
//! # let _ = WalkResult::Found { face: 0, steps: 0 };
//! ```

mod exact;

pub mod cli;
pub mod geometry2d;
pub mod mesh;
pub mod meshgen;
pub mod oracle;
pub mod oriented3d;
pub mod walk;
