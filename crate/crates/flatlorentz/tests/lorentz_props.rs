mod common;

use common::lorentz;
use flatlorentz::lorentz::*;
use flatlorentz::margulis::tangency_defect;
use flatlorentz::sphere::{hausdorff_distance, min_distance, sphere_distance, SpherePoint};
use nalgebra::Vector3;
use proptest::prelude::*;
use std::f64::consts::PI;

fn spacelike() -> impl Strategy<Value = Vector3<f64>> {
    (-PI..PI, 1.0..5.0f64, -0.99..0.99f64).prop_map(|(phi, r, c)| Vector3::new(r * phi.cos(), r * phi.sin(), c * r))
}

fn null_vector() -> impl Strategy<Value = Vector3<f64>> {
    (-PI..PI, 0.2..5.0f64).prop_map(|(t, s)| n_theta(t) * s)
}

fn dir(v: &Vector3<f64>) -> SpherePoint {
    SpherePoint::direction(v).unwrap()
}

proptest! {
    #![proptest_config(common::cfg(1000))]

    #[test]
    fn n_theta_is_null(t in -10.0..10.0f64) {
        prop_assert!(quad(&n_theta(t)).abs() < 1e-12);
    }

    #[test]
    fn collapse_projection_contains_direction(w in spacelike()) {
        let x = collapse_project(&w).unwrap();
        prop_assert!(x.is_at_infinity());
        prop_assert!(quad(&x.spatial()).abs() < 1e-12);
        let arc = wing(&x.spatial()).unwrap();
        prop_assert!(arc.distance_to(&dir(&w)) < 1e-6);
        let t = boundary_angle(&x);
        for dt in [-1e-2, 1e-2] {
            prop_assert!(wing(&n_theta(t + dt)).unwrap().distance_to(&dir(&w)) > 1e-6);
        }
    }
}

proptest! {
    #![proptest_config(common::cfg(64))]

    #[test]
    fn wing_ignores_time_orientation(v in null_vector()) {
        let (a, b) = (wing(&v).unwrap(), wing(&(-v)).unwrap());
        prop_assert!(hausdorff_distance(&a.cloud(true), &b.cloud(true)).unwrap() < 1e-6);
    }

    #[test]
    fn distinct_arcs_are_disjoint(t1 in -PI..PI, dt in 0.05..(2.0 * PI - 0.05)) {
        let (a, b) = (wing_sampled(&n_theta(t1), 64).unwrap(), wing_sampled(&n_theta(t1 + dt), 64).unwrap());
        prop_assert!(min_distance(a.samples(), b.samples()).unwrap() > 0.0);
    }

    #[test]
    fn wings_are_equivariant(a in lorentz(1.5), v in null_vector()) {
        let arc = wing(&v).unwrap();
        let image = wing(&(a * v)).unwrap();
        let inv = lorentz_inverse(&a);
        prop_assert!(sphere_distance(&dir(&(a * arc.base().spatial())), image.base()) < 1e-6);
        for p in arc.samples() {
            prop_assert!(image.distance_to(&dir(&(a * p.spatial()))) < 1e-6);
        }
        for p in image.samples() {
            prop_assert!(arc.distance_to(&dir(&(inv * p.spatial()))) < 1e-6);
        }
    }

    #[test]
    fn arcs_touch_the_future_cone_only_at_their_base(t in -PI..PI) {
        let arc = wing_sampled(&n_theta(t), 255).unwrap();
        prop_assert!(tangency_defect(&arc) < 1e-12);
        let base = arc.base();
        for p in arc.samples() {
            let d = sphere_distance(p, base);
            if d > 0.2 {
                let s = p.spatial();
                // angular distance above the future cone x² + y² = z², z > 0
                let margin = (s.x.hypot(s.y)).atan2(s.z) - PI / 4.0;
                prop_assert!(margin > 0.0);
            }
        }
    }
}
