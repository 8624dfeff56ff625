use std::cmp::Ordering;

use proptest::prelude::*;

use zigzag::geometry2d::{
    incircle, od_compare, orientation, oriented_distance, ClosestPointClass, Orientation, Point2, Segment2,
};
use zigzag::mesh::{HalfEdgeId, MeshFile};
use zigzag::meshgen::{generate, GenKind, GenSpec};
use zigzag::oracle::{audit_trace, brute_force_locate};
use zigzag::oriented3d::{od3_compare, oriented_distance3, Point3, Triangle3};
use zigzag::walk::{locate, TieBreakPolicy, WalkConfig, WalkResult};

fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![(-40i32..=40).prop_map(|k| k as f64 / 4.0), -10.0..10.0f64]
}

fn point() -> impl Strategy<Value = Point2> {
    (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
}

fn segment() -> impl Strategy<Value = Segment2> {
    (point(), point()).prop_filter_map("zero length", |(a, b)| Segment2::new(a, b).ok())
}

fn policy() -> impl Strategy<Value = TieBreakPolicy> {
    prop_oneof![
        Just(TieBreakPolicy::RightFirst),
        Just(TieBreakPolicy::LeftFirst),
        any::<u64>().prop_map(TieBreakPolicy::RandomSeeded)
    ]
}

proptest! {
    #[test]
    fn orientation_flips_with_swap(a in point(), b in point(), c in point()) {
        let o = orientation(a, b, c);
        let flipped = match o {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        };
        prop_assert_eq!(orientation(b, a, c), flipped);
        prop_assert_eq!(orientation(b, c, a), o);
    }

    #[test]
    fn incircle_is_invariant_under_rotation(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(orientation(a, b, c) == Orientation::CounterClockwise);
        prop_assert_eq!(incircle(a, b, c, d), incircle(b, c, a, d));
    }

    #[test]
    fn od_is_a_total_preorder(a in segment(), b in segment(), c in segment(), p in point()) {
        let (Ok(ab), Ok(ba), Ok(bc), Ok(ac)) = (od_compare(&a, &b, p), od_compare(&b, &a, p), od_compare(&b, &c, p), od_compare(&a, &c, p)) else {
            return Ok(());
        };
        prop_assert_eq!(ab, ba.reverse());
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert!(ac != Ordering::Greater);
        }
        if ab == Ordering::Equal && bc == Ordering::Equal {
            prop_assert_eq!(ac, Ordering::Equal);
        }
    }

    #[test]
    fn od_ignores_segment_direction(a in segment(), b in segment(), p in point()) {
        let rev = Segment2::new(a.end(), a.start()).unwrap();
        prop_assert_eq!(od_compare(&a, &b, p), od_compare(&rev, &b, p));
    }

    #[test]
    fn od_angle_range(s in segment(), p in point()) {
        if let Ok(od) = oriented_distance(&s, p) {
            prop_assert!(od.alpha >= std::f64::consts::FRAC_PI_2 && od.alpha <= std::f64::consts::PI);
            prop_assert_eq!(od.closest == ClosestPointClass::Interior, od.alpha == std::f64::consts::FRAC_PI_2);
            prop_assert!(od.w[0] * od.u[0] + od.w[1] * od.u[1] <= 1e-9 * (1.0 + od.d2));
        }
    }

    #[test]
    fn walks_on_random_delaunay_find_the_oracle_face(
        seed in 0u64..1000,
        n in 3usize..80,
        e in any::<u32>(),
        (qx, qy) in (0.0..1.0f64, 0.0..1.0f64),
        pol in policy(),
    ) {
        let m = generate(&GenSpec::new(GenKind::RandomDelaunay { n_points: n, seed, bbox: [0.0, 0.0, 1.0, 1.0] })).unwrap();
        let p = Point2::new(qx, qy);
        let start = HalfEdgeId(e % m.num_half_edges() as u32);
        let w = locate(&m, start, p, &WalkConfig::with_policy(pol).traced().checked()).unwrap();
        let trace = w.trace.unwrap();
        prop_assert_eq!(audit_trace(&m, &trace), vec![]);
        let truth = brute_force_locate(&m, p);
        match w.result {
            WalkResult::Found { face, .. } => prop_assert!(truth.contains(zigzag::mesh::FaceId(face))),
            WalkResult::Boundary { .. } => prop_assert!(truth.faces.is_empty()),
            WalkResult::Aborted { .. } => prop_assert!(false, "aborted"),
        }
    }

    #[test]
    fn delaunay_meshes_are_valid_and_round_trip(seed in 0u64..1000, n in 3usize..60) {
        let m = generate(&GenSpec::new(GenKind::RandomDelaunay { n_points: n, seed, bbox: [-1.0, -1.0, 1.0, 1.0] })).unwrap();
        prop_assert!(m.validate().is_empty());
        let text = MeshFile::from(&m).to_json();
        let back = MeshFile::from_json(&text).unwrap().build().unwrap();
        prop_assert_eq!(back.triangles(), m.triangles());
        prop_assert_eq!(back.vertices(), m.vertices());
    }

    #[test]
    fn od3_compare_is_consistent(
        t in prop::array::uniform3(prop::array::uniform3(-1.0..1.0f64)),
        ps in prop::array::uniform3(prop::array::uniform3(-2.0..2.0f64)),
    ) {
        let [a, b, c] = t.map(|v| Point3::new(v[0], v[1], v[2]));
        let Ok(tri) = Triangle3::new(a, b, c) else { return Ok(()) };
        let ods: Vec<_> = ps.iter().filter_map(|v| oriented_distance3(&tri, Point3::new(v[0], v[1], v[2])).ok()).collect();
        for x in &ods {
            prop_assert!(x.alpha >= std::f64::consts::FRAC_PI_2 - 1e-12);
            prop_assert!((0.0..=std::f64::consts::FRAC_PI_2).contains(&x.beta));
            prop_assert_eq!(od3_compare(x, x), Ordering::Equal);
            for y in &ods {
                prop_assert_eq!(od3_compare(x, y), od3_compare(y, x).reverse());
            }
        }
    }
}
