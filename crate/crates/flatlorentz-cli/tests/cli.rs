use std::path::PathBuf;
use std::process::{Command, Output};

use flatlorentz::config::GroupConfig;
use flatlorentz::fuchsian::{limit_set, FuchsianGroup};
use flatlorentz::scene::Scene;

fn config(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn flatlorentz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatlorentz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("flatlorentz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn shipped_configs_match_the_library() {
    for (name, cfg) in [
        ("bundled", GroupConfig::bundled()),
        ("cyclic", GroupConfig::cyclic()),
        ("elliptic", GroupConfig::elliptic()),
    ] {
        let text = std::fs::read_to_string(config(name)).unwrap();
        assert_eq!(GroupConfig::from_json(&text).unwrap(), cfg, "{name}");
    }
}

#[test]
fn check_exit_codes() {
    let ok = flatlorentz(&["check", &config("bundled")]);
    assert!(ok.status.success(), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("all checks passed"));

    let elliptic = flatlorentz(&["check", &config("elliptic")]);
    assert_eq!(elliptic.status.code(), Some(1));
    assert!(stdout(&elliptic).contains("FAIL generator 0: hyperbolicity"));

    let bad = scratch("malformed.json");
    std::fs::write(&bad, "{\"schema\": ").unwrap();
    let parse = flatlorentz(&["check", bad.to_str().unwrap()]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(stderr(&parse).contains("config parse error"));
}

#[test]
fn check_writes_a_json_report() {
    let out = scratch("check.json");
    let o = flatlorentz(&["check", &config("bundled"), "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(doc["schema"], "flatlorentz/1");
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["sweep"]["sign"], "Positive");
}

#[test]
fn sweep_depth_one_and_zero() {
    let o = flatlorentz(&["sweep", &config("bundled"), "--depth", "1"]);
    let csv = stdout(&o);
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "word,wordlen,lambda,ell,mu,ratio");
    assert_eq!(rows.len(), 5);
    for r in &rows[1..] {
        let mu: f64 = r.split(',').nth(4).unwrap().parse().unwrap();
        assert!((mu - 3.0).abs() < 1e-12, "{r}");
    }
    assert!(csv.contains("# sign Positive"));

    let empty = flatlorentz(&["sweep", &config("bundled"), "--depth", "0"]);
    assert_eq!(stdout(&empty), "word,wordlen,lambda,ell,mu,ratio\n");
}

#[test]
fn cyclic_domain_scene() {
    let o = flatlorentz(&["domain", &config("cyclic")]);
    assert!(o.status.success());
    let scene = Scene::from_json(&stdout(&o)).unwrap();
    assert_eq!(scene.points[0].coords.len(), 2);
    let arcs = scene.polylines.iter().filter(|p| p.label.starts_with("excluded_")).count();
    assert_eq!(arcs, 2);
}

#[test]
fn stereographic_frame_drops_the_pole() {
    // the cyclic chord passes through (0,0,1), so its antipode reaches the pole
    let o = flatlorentz(&["domain", &config("cyclic"), "--frame", "stereographic"]);
    assert!(o.status.success());
    let scene = Scene::from_json(&stdout(&o)).unwrap();
    assert!(scene.points.iter().flat_map(|p| &p.coords).all(|c| c.len() == 2));
    assert!(stderr(&o).contains("projection pole"), "{}", stderr(&o));
}

#[test]
fn limitset_scene_has_every_limit_point() {
    let o = flatlorentz(&["limitset", &config("bundled"), "--depth", "6"]);
    let scene = Scene::from_json(&stdout(&o)).unwrap();
    let n = limit_set(&FuchsianGroup::bundled(), 6).len();
    assert_eq!(scene.points[0].coords.len(), n);
    assert_eq!(scene.metadata["limit_points"], n);
}

#[test]
fn strips_scene_carries_the_disjointness_matrix() {
    let o = flatlorentz(&["strips", &config("bundled"), "--depth", "2"]);
    let scene = Scene::from_json(&stdout(&o)).unwrap();
    let m = scene.metadata["disjointness_matrix"].as_array().unwrap();
    assert_eq!(m.len(), 12);
    assert!(scene.points.iter().any(|p| p.label == "strip_0_interior"));
    assert_eq!(scene.metadata["strips_disjoint"], true);
}

#[test]
fn boost_demo_limits_and_warnings() {
    let out = scratch("demo.json");
    let o = flatlorentz(&["boost-demo", "--schedule", "power:12", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("# limit eta+"));
    let scene = Scene::from_json(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert!(scene.points.iter().any(|p| p.label == "step_12"));

    let stable = flatlorentz(&["boost-demo", "--K", "stable", "--schedule", "power:4"]);
    assert!(stdout(&stable).starts_with("# limit e2"));

    let flat = flatlorentz(&["boost-demo", "--mu", "0", "--schedule", "power:3"]);
    assert!(stderr(&flat).contains("pure linear boost"));

    let hit = flatlorentz(&["boost-demo", "--K", "points:0,-1,0,0;0,-1,0.1,0.1;0.1,-1,0,0.1", "--schedule", "power:3"]);
    assert_eq!(hit.status.code(), Some(2));
    assert!(stderr(&hit).contains("repelling arc"), "{}", stderr(&hit));
}

#[test]
fn crooked_obj_has_three_groups() {
    let o = flatlorentz(&["crooked", "--chord", "diameter"]);
    let obj = stdout(&o);
    let groups: Vec<&str> = obj.lines().filter(|l| l.starts_with("g ")).collect();
    assert_eq!(groups, ["g stem", "g wing1", "g wing2"]);
    let v = obj.lines().filter(|l| l.starts_with("v ")).count();
    let f = obj.lines().filter(|l| l.starts_with("f ")).count();
    assert_eq!(v, flatlorentz::crooked::mesh_vertex_count(8));
    assert!(f > 0);
    for l in obj.lines().filter(|l| l.starts_with("v ")) {
        let n: f64 = l[2..].split(' ').map(|x| x.parse::<f64>().unwrap().powi(2)).sum();
        assert!(n.sqrt() <= 1.0 + 1e-6);
    }

    let scene = flatlorentz(&["crooked", "--chord", "0.3,2.5", "--format", "scene"]);
    let s = Scene::from_json(&stdout(&scene)).unwrap();
    assert_eq!(s.meshes.len(), 1);

    let both = flatlorentz(&["crooked", &config("bundled"), "--chord", "diameter"]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn properness_report() {
    let o = flatlorentz(&["properness", &config("bundled"), "--depth", "4"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["intersecting"], serde_json::json!(["e"]));
    assert_eq!(doc["stabilized"], true);

    // (1, 0, 1) is the attracting fixed point of the first generator
    let bad = flatlorentz(&["properness", &config("bundled"), "--depth", "2", "--K", "patch:1,0,1,0.01,4"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("excluded arc"));
}

#[test]
fn thread_cap_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_flatlorentz"))
            .args(["properness", &config("bundled"), "--depth", "3"])
            .env("FLATLORENTZ_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("3"));
}
