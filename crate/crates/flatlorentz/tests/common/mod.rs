#![allow(dead_code)]

use flatlorentz::boosts::AffineIsometry;
use flatlorentz::lorentz::{boost_x, rotation_z};
use flatlorentz::sphere::SpherePoint;
use nalgebra::{Matrix3, Vector3, Vector4};
use proptest::prelude::*;

pub fn so21(a: f64, s: f64, b: f64) -> Matrix3<f64> {
    rotation_z(a) * boost_x(s) * rotation_z(b)
}

prop_compose! {
    pub fn lorentz(max_rapidity: f64)(a in -3.2..3.2f64, s in -max_rapidity..max_rapidity, b in -3.2..3.2f64) -> Matrix3<f64> {
        so21(a, s, b)
    }
}

prop_compose! {
    pub fn vec3(r: f64)(x in -r..r, y in -r..r, z in -r..r) -> Vector3<f64> {
        Vector3::new(x, y, z)
    }
}

prop_compose! {
    pub fn isometry(max_rapidity: f64, r: f64)(a in lorentz(max_rapidity), b in vec3(r)) -> AffineIsometry {
        AffineIsometry::new(a, b).unwrap()
    }
}

prop_compose! {
    pub fn sphere_point()(v in prop::array::uniform4(-1.0..1.0f64)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)) -> SpherePoint {
        SpherePoint::from_vector(Vector4::from(v)).unwrap()
    }
}

/// `(γ, ℓ, α)` with `γ` conjugate to the boost of translation length `ℓ` and Margulis invariant `α`.
pub fn random_boost() -> impl Strategy<Value = (AffineIsometry, f64, f64)> {
    (0.5..5.0f64, 0.1..10.0f64, isometry(1.0, 2.0)).prop_map(|(ell, alpha, h)| {
        let g = AffineIsometry::new(boost_x(ell / 2.0), Vector3::y() * alpha).unwrap();
        (g.conjugate_by(&h), ell, alpha)
    })
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// Fixed-seed configuration, so failures reproduce across runs.
pub fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
