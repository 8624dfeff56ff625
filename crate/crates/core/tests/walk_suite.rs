use zigzag::geometry2d::{incircle, Point2};
use zigzag::mesh::{FaceId, HalfEdgeId, Mesh};
use zigzag::meshgen::{generate, GenKind, GenSpec};
use zigzag::oracle::{audit_trace, brute_force_locate};
use zigzag::walk::{locate, visibility_walk_baseline, TieBreakPolicy, WalkConfig, WalkResult};

fn grid() -> Mesh {
    generate(&GenSpec::new(GenKind::Grid { nx: 10, ny: 10 })).unwrap()
}

fn centroid(m: &Mesh, f: FaceId) -> Point2 {
    let [a, b, c] = m.face_points(f);
    Point2::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)
}

#[test]
fn every_grid_face_is_reached_from_every_corner() {
    let m = grid();
    let starts: Vec<HalfEdgeId> =
        [0u32, 7, 300, 599].map(HalfEdgeId).into_iter().filter(|e| m.contains_half_edge(*e)).collect();
    for f in m.face_ids() {
        let p = centroid(&m, f);
        for &s in &starts {
            for pol in [TieBreakPolicy::RightFirst, TieBreakPolicy::LeftFirst, TieBreakPolicy::RandomSeeded(f.0 as u64)]
            {
                let w = locate(&m, s, p, &WalkConfig::with_policy(pol).traced().checked()).unwrap();
                assert_eq!(w.result.found_face(), Some(f), "start {s} policy {pol:?}");
                assert_eq!(audit_trace(&m, &w.trace.unwrap()), vec![]);
            }
        }
    }
}

#[test]
fn grid_vertices_and_edges_are_located() {
    // Targets on mesh vertices and edges land in some closed face holding them.
    let m = grid();
    for &(x, y) in &[(3.0, 4.0), (5.5, 5.0), (2.5, 2.5), (0.0, 0.0), (10.0, 10.0), (10.0, 3.5)] {
        let p = Point2::new(x, y);
        let truth = brute_force_locate(&m, p);
        for s in (0..m.num_half_edges() as u32).step_by(37) {
            let w = locate(&m, HalfEdgeId(s), p, &WalkConfig::default().checked()).unwrap();
            let f = w.result.found_face().unwrap_or_else(|| panic!("{p} from {s}: {:?}", w.result));
            assert!(truth.contains(f));
        }
    }
}

#[test]
fn outside_points_end_on_the_boundary() {
    let m = grid();
    for &(x, y) in &[(-1.0, 5.0), (11.0, 0.5), (5.0, -3.0), (20.0, 20.0)] {
        let w = locate(&m, HalfEdgeId(100), Point2::new(x, y), &WalkConfig::default()).unwrap();
        match w.result {
            WalkResult::Boundary { edge, .. } => assert!(m.is_boundary(HalfEdgeId(edge))),
            other => panic!("({x}, {y}): {other:?}"),
        }
    }
}

#[test]
fn baseline_agrees_with_oracle() {
    let m = generate(&GenSpec::new(GenKind::RandomDelaunay { n_points: 200, seed: 4, bbox: [0.0, 0.0, 1.0, 1.0] }))
        .unwrap();
    for (k, f) in m.face_ids().enumerate() {
        let p = centroid(&m, f);
        let b = visibility_walk_baseline(&m, HalfEdgeId((k * 13 % m.num_half_edges()) as u32), p, k as u64).unwrap();
        assert_eq!(b.result.found_face(), Some(f));
        assert_eq!(*b.faces.last().unwrap(), f);
    }
}

#[test]
fn delaunay_meshes_have_empty_circumcircles() {
    for (n, seed) in [(20, 1), (100, 2), (200, 3)] {
        let m =
            generate(&GenSpec::new(GenKind::RandomDelaunay { n_points: n, seed, bbox: [0.0, 0.0, 1.0, 1.0] })).unwrap();
        assert!(m.validate().is_empty());
        for f in m.face_ids() {
            let [a, b, c] = m.face_points(f);
            for &v in m.vertices() {
                assert_ne!(incircle(a, b, c, v), std::cmp::Ordering::Greater, "face {f} n={n}");
            }
        }
    }
}

#[test]
fn degenerate_meshes_are_walkable() {
    for kind in [GenKind::Fan { n: 50, apex_angle: 0.25 }, GenKind::ThinStrip { n: 100, aspect: 1000.0 }] {
        let m = generate(&GenSpec::new(kind)).unwrap();
        assert!(m.validate().is_empty(), "{kind:?}");
        for f in m.face_ids() {
            let p = centroid(&m, f);
            let w = locate(&m, HalfEdgeId(0), p, &WalkConfig::default().traced().checked()).unwrap();
            assert_eq!(w.result.found_face(), Some(f), "{kind:?}");
            assert_eq!(audit_trace(&m, &w.trace.unwrap()), vec![]);
        }
    }
}
