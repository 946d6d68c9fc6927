//! Browser bindings. Every export returns a scene JSON string, or
//! `{"error": "..."}` when the inputs are rejected.

use std::f64::consts::{FRAC_PI_2, TAU};

use flatlorentz::boosts::{boost_convergence_experiment, power_schedule, ExperimentOptions};
use flatlorentz::fuchsian::{gap_chords, limit_set_with, FuchsianGroup};
use flatlorentz::lorentz::{boost_towards, boundary_angle, collapse_project, wing_sampled, n_theta};
use flatlorentz::scene::{Frame, PolylineKind, Scene};
use flatlorentz::sphere::{ConvexBody, SpherePoint};
use flatlorentz::{tol, Result};
use nalgebra::Vector3;
use wasm_bindgen::prelude::wasm_bindgen;

const MAX_DEPTH: u32 = 6;
const MAX_STEPS: u32 = 40;

fn respond(r: Result<Scene>) -> String {
    match r {
        Ok(s) => s.to_json(),
        Err(e) => serde_json::json!({ "error": e.to_string() }).to_string(),
    }
}

fn schottky(ell: f64, depth: u32) -> Result<Scene> {
    let s = ell / 2.0;
    let group = FuchsianGroup::new(vec![boost_towards(0.0, s), boost_towards(FRAC_PI_2, s)])?;
    group.certify(1024)?;
    let ls = limit_set_with(&group, depth.min(MAX_DEPTH) as usize, tol::GAP_MIN);
    let mut scene = Scene::new(Frame::Stereographic);
    scene.add_boundary_circles(128);
    scene.add_points("limit_set", &ls.points);
    for (i, c) in gap_chords(&ls)?.iter().enumerate() {
        scene.add_polyline(&format!("gap_chord_{i}"), PolylineKind::Chord, &c.segment.sample(33));
    }
    scene.set_meta("limit_points", ls.len());
    Ok(scene)
}

/// Limit set and gap chords of the Schottky group generated by boosts of
/// translation length `ell` along the x- and y-axes.
#[wasm_bindgen]
pub fn limit_set(ell: f64, depth: u32) -> String {
    respond(schottky(ell, depth))
}

fn leaves(count: u32, x: f64, y: f64, z: f64) -> Result<Scene> {
    let mut scene = Scene::new(Frame::Stereographic);
    scene.add_boundary_circles(128);
    for k in 0..count.clamp(1, 256) {
        let arc = wing_sampled(&n_theta(TAU * k as f64 / count as f64), 64)?;
        scene.add_polyline(&format!("leaf_{k}"), PolylineKind::Arc, &arc.cloud(true));
    }
    let w = Vector3::new(x, y, z);
    let base = collapse_project(&w)?;
    let leaf = wing_sampled(&base.spatial(), 128)?;
    scene.add_polyline("selected_leaf", PolylineKind::Arc, &leaf.cloud(true));
    scene.add_points("selected", &[SpherePoint::direction(&w)?, base]);
    scene.set_meta("base_angle", boundary_angle(&base));
    Ok(scene)
}

/// `count` leaves of the spacelike foliation and the leaf through the
/// spacelike direction `(x, y, z)`.
#[wasm_bindgen]
pub fn foliation(count: u32, x: f64, y: f64, z: f64) -> String {
    respond(leaves(count, x, y, z))
}

fn orbit(ell: f64, mu: f64, steps: u32, spread: f64) -> Result<Scene> {
    let lambda = (ell / 2.0).exp();
    let mut pts = Vec::new();
    for (dx, dy, dz) in [(spread, 0.0, 0.0), (-spread, 0.1, 0.0), (spread, 0.0, 0.1), (-spread, -0.1, 0.0), (0.0, 0.0, -0.1)] {
        pts.push(SpherePoint::affine(&Vector3::new(dx, 0.2 + dy, 0.1 + dz)));
    }
    let k = ConvexBody::new(pts)?;
    let opts = ExperimentOptions {
        step: 5e-3,
        limit_samples: 128,
        keep_images: true,
    };
    let run = boost_convergence_experiment(&power_schedule(lambda, mu, steps.clamp(1, MAX_STEPS) as usize), &k, &opts)?;
    let mut scene = Scene::new(Frame::Ball);
    scene.add_points("K", k.vertices());
    scene.add_polyline("predicted_limit", PolylineKind::Curve, &run.limit.samples(64));
    for (n, s) in run.steps.iter().enumerate() {
        if let Some(img) = &s.image {
            scene.add_points(&format!("step_{}", n + 1), img);
        }
    }
    scene.set_meta("limit", run.limit.label());
    scene.set_meta("distances", run.steps.iter().map(|s| s.distance).collect::<Vec<_>>());
    Ok(scene)
}

/// Images of a small body under the powers of the standard boost with
/// translation length `ell` and Margulis invariant `mu`. `spread` is the
/// x-offset of the body; zero puts it on the stable sphere.
#[wasm_bindgen]
pub fn boost_orbit(ell: f64, mu: f64, steps: u32, spread: f64) -> String {
    respond(orbit(ell, mu, steps, spread))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn limit_set_scene_validates() {
        let s = limit_set(4.0, 3);
        let scene = Scene::from_json(&s).unwrap();
        assert_eq!(scene.metadata["limit_points"], 44);
        assert!(parse(&limit_set(0.1, 3))["error"].is_string());
    }

    #[test]
    fn foliation_selects_the_leaf_through_a_direction() {
        let scene = Scene::from_json(&foliation(12, 1.0, 0.0, 0.5)).unwrap();
        assert!(scene.polylines.iter().any(|p| p.label == "selected_leaf"));
        assert!(parse(&foliation(12, 0.0, 0.0, 1.0))["error"].is_string());
    }

    #[test]
    fn orbit_limits() {
        let v = parse(&boost_orbit(2.0, 1.0, 8, 0.5));
        assert_eq!(v["metadata"]["limit"], "eta+");
        let d: Vec<f64> = v["metadata"]["distances"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        assert!(d.last().unwrap() < &d[0]);
        assert_eq!(parse(&boost_orbit(2.0, 1.0, 4, 0.0))["metadata"]["limit"], "e2");
    }
}
