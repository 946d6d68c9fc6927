mod common;

use common::{lorentz, sphere_point, vec3};
use flatlorentz::boosts::{standard_matrix, AffineIsometry};
use flatlorentz::sphere::*;
use nalgebra::{Matrix4, Vector3, Vector4};
use proptest::prelude::*;

fn cluster(center: Vector3<f64>, r: f64) -> ConvexBody {
    let offsets = [Vector3::zeros(), Vector3::x(), -Vector3::x(), Vector3::y(), Vector3::z()];
    ConvexBody::new(offsets.iter().map(|o| SpherePoint::affine(&(center + o * r))).collect()).unwrap()
}

proptest! {
    #![proptest_config(common::cfg(256))]

    #[test]
    fn antipode_is_an_involution(p in sphere_point()) {
        prop_assert_eq!(p.antipode().antipode(), p);
        prop_assert!((sphere_distance(&p, &p.antipode()) - std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn distance_is_a_metric(a in sphere_point(), b in sphere_point(), c in sphere_point()) {
        let (ab, bc, ac) = (sphere_distance(&a, &b), sphere_distance(&b, &c), sphere_distance(&a, &c));
        prop_assert!((ab - sphere_distance(&b, &a)).abs() < 1e-9);
        prop_assert!(ac <= ab + bc + 1e-9);
        prop_assert!(sphere_distance(&a, &a) < 1e-9);
    }

    #[test]
    fn min_distance_bounded_by_hausdorff(
        a in prop::collection::vec(sphere_point(), 1..20),
        b in prop::collection::vec(sphere_point(), 1..20),
    ) {
        prop_assert!(min_distance(&a, &b).unwrap() <= hausdorff_distance(&a, &b).unwrap());
    }

    #[test]
    fn frame_transport_sends_frame_to_basis(m in prop::array::uniform16(-1.0..1.0f64)) {
        let m = Matrix4::from_column_slice(&m) + Matrix4::identity() * 2.0;
        let svd = m.svd(false, false);
        prop_assume!(svd.singular_values.max() / svd.singular_values.min() < 1e3);
        let pts: Vec<SpherePoint> = (0..4)
            .map(|j| SpherePoint::from_vector(m.column(j).into_owned()).unwrap())
            .collect();
        let h = frame_transport([&pts[0], &pts[1], &pts[2], &pts[3]]).unwrap();
        for (j, p) in pts.iter().enumerate() {
            prop_assert!(sphere_distance(&h.apply(p), &SpherePoint::basis(j)) < 1e-9);
        }
    }

    #[test]
    fn join_commutes_with_isometries(
        a in lorentz(1.0), t in vec3(1.0), ca in vec3(1.0), cb in vec3(1.0), interior in 0usize..4,
    ) {
        let g = AffineIsometry::new(a, t).unwrap().to_projective();
        let (ka, kb) = (cluster(ca, 0.2), cluster(cb, 0.2));
        let image = g.apply_all(join(&ka, &kb, interior).unwrap().vertices());
        let joined = join(&ka.transform(&g).unwrap(), &kb.transform(&g).unwrap(), interior).unwrap();
        if interior == 0 {
            prop_assert!(hausdorff_distance(&image, joined.vertices()).unwrap() < 1e-6);
        }
        let ga = g.apply_all(ka.vertices());
        let gb = g.apply_all(kb.vertices());
        for p in &image {
            let d = ga.iter().chain(&gb).map(|v| sphere_distance(p, v))
                .chain(ga.iter().flat_map(|x| gb.iter().filter_map(move |y| Segment::new(*x, *y).ok()))
                    .map(|s| s.distance_to(p)))
                .fold(f64::INFINITY, f64::min);
            prop_assert!(d < 1e-6);
        }
    }
}

#[test]
fn join_of_shrinking_perturbations_converges() {
    let (a, b) = (cluster(Vector3::new(0.5, 0.0, 0.0), 0.2), cluster(Vector3::new(-0.5, 0.3, 0.0), 0.2));
    let limit = join(&a, &b, 3).unwrap();
    let mut last = f64::INFINITY;
    for n in 1..=12 {
        let eps = 0.5f64.powi(n);
        let shift = Vector3::new(eps, -eps, 0.5 * eps);
        let an = cluster(Vector3::new(0.5, 0.0, 0.0) + shift, 0.2);
        let bn = cluster(Vector3::new(-0.5, 0.3, 0.0) - shift, 0.2);
        let d = hausdorff_distance(join(&an, &bn, 3).unwrap().vertices(), limit.vertices()).unwrap();
        if n > 2 {
            assert!(d < last, "n = {n}: {d} >= {last}");
        }
        last = d;
    }
    assert!(last < 1e-3);
}

#[test]
fn normalized_powers_of_a_boost_have_rank_one() {
    let g = standard_matrix(2.0, 1.0);
    let mut ranks = Vec::new();
    for n in [1, 5, 20, 60] {
        let mut p = Matrix4::<f64>::identity();
        for _ in 0..n {
            p *= g;
        }
        let p = p / p.amax();
        let e = ProjectiveEndomorphism::new(p).unwrap();
        ranks.push(e.rank());
        if e.rank() == 1 {
            assert!(e.image()[0].x.abs() > 1.0 - 1e-12);
            // weak-stable subspace x = 0 is the kernel
            for k in e.kernel() {
                assert!(k.x.abs() < 1e-9);
            }
            let q = SpherePoint::from_vector(Vector4::new(0.3, 0.2, -0.4, 1.0)).unwrap();
            let img = e.apply(&q).unwrap();
            assert!(sphere_distance(&img, &SpherePoint::basis(0)) < 1e-12);
        }
    }
    assert_eq!(ranks.first(), Some(&4));
    assert_eq!(ranks.last(), Some(&1));
}
