//! Command implementations behind the `flatlorentz` binary.
//!
//! Every command returns an [`Output`] instead of printing, so the same code
//! paths are exercised by the binary and by in-process tests.

pub mod kspec;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use nalgebra::Vector3;
use serde_json::json;

use flatlorentz::boosts::{
    boost_convergence_experiment, classify, power_schedule, ExperimentOptions, LinearClass, FORM_TOL,
};
use flatlorentz::config::GroupConfig;
use flatlorentz::crooked::{crooked_circle, mesh, CrookedPlane, Mesh, Piece, DEFAULT_EXTENT};
use flatlorentz::fuchsian::{gap_chords, limit_set_with, LimitSetApprox};
use flatlorentz::lorentz::{form_defect, lorentz_det, n_theta};
use flatlorentz::margulis::{
    build_domain_from, margulis_sweep, properness_census_with, strip_disjointness, DomainModel,
    SignVerdict, StripResolution,
};
use flatlorentz::scene::{Frame, PolylineKind, Scene};
use flatlorentz::sphere::{join, ConvexBody, SpherePoint};
use flatlorentz::tol;

#[derive(Debug, Parser)]
#[command(name = "flatlorentz", version, about = "Affine Lorentzian boosts, Schottky domains and crooked planes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Word length, limit-set depth or census depth.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Command-specific tolerance (form defect, gap width or overlap).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value = "ball")]
    pub frame: Frame,
    /// Output file; the artifact goes to stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Default for Global {
    fn default() -> Self {
        Global {
            depth: None,
            tol: None,
            seed: 0,
            frame: Frame::Ball,
            out: None,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Verify a group config: form, hyperbolicity, ping-pong and sweep sign.
    Check { config: PathBuf },
    /// CSV of Margulis invariants over reduced words.
    Sweep { config: PathBuf },
    /// Scene of the limit-set approximation.
    Limitset { config: PathBuf },
    /// Scene of limit points, excluded arcs, strip boundaries and boundary circles.
    Domain { config: PathBuf },
    /// Scene of strip samples with the disjointness matrix.
    Strips { config: PathBuf },
    /// Transport a compact set by a sequence of standard boosts.
    BoostDemo {
        #[arg(long, default_value_t = 2.0)]
        ell: f64,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        /// `power:N` or explicit `lambda,k;lambda,k;...`.
        #[arg(long, default_value = "power:30")]
        schedule: String,
        /// `dumbbell`, `stable`, `side`, or `points:x,y,z;...` in standard coordinates
        /// (four numbers give homogeneous `x,y,z,t`).
        #[arg(long = "K", default_value = "dumbbell")]
        k: String,
    },
    /// Crooked-plane meshes (OBJ) or scenes.
    Crooked {
        /// Group config; one plane per gap chord of the limit set.
        config: Option<PathBuf>,
        /// Null-direction angles `theta1,theta2` in radians, or `diameter`.
        #[arg(long)]
        chord: Option<String>,
        /// Vertex of the plane for `--chord`.
        #[arg(long, default_value = "0,0,0")]
        vertex: String,
        #[arg(long, default_value_t = DEFAULT_EXTENT)]
        extent: f64,
        #[arg(long, default_value_t = 8)]
        resolution: usize,
        #[arg(long, default_value = "obj")]
        format: MeshFormat,
    },
    /// Census of words `w` with `w(K) ∩ K ≠ ∅`.
    Properness {
        config: PathBuf,
        #[arg(long = "K", default_value = kspec::DEFAULT_K)]
        k: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MeshFormat {
    Obj,
    Scene,
}

/// Result of a command.
#[derive(Debug, Clone, Default)]
pub struct Output {
    /// Human-readable report.
    pub report: String,
    /// CSV, JSON or OBJ payload.
    pub artifact: Option<String>,
    /// Print the artifact to stdout when no `--out` is given.
    pub artifact_to_stdout: bool,
    pub warnings: Vec<String>,
    pub ok: bool,
}

impl Output {
    fn artifact(report: String, artifact: String, warnings: Vec<String>) -> Self {
        Output {
            report,
            artifact: Some(artifact),
            artifact_to_stdout: true,
            warnings,
            ok: true,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Check { config } => cmd_check(&load(config)?, g),
        Command::Sweep { config } => cmd_sweep(&load(config)?, g),
        Command::Limitset { config } => cmd_limitset(&load(config)?, g),
        Command::Domain { config } => cmd_domain(&load(config)?, g, false),
        Command::Strips { config } => cmd_domain(&load(config)?, g, true),
        Command::BoostDemo { ell, mu, schedule, k } => cmd_boost_demo(*ell, *mu, schedule, k, g),
        Command::Crooked {
            config,
            chord,
            vertex,
            extent,
            resolution,
            format,
        } => {
            let cfg = config.as_deref().map(load).transpose()?;
            cmd_crooked(cfg.as_ref(), chord.as_deref(), vertex, *extent, *resolution, *format, g)
        }
        Command::Properness { config, k } => cmd_properness(&load(config)?, k, g),
    }
}

pub fn load(path: &Path) -> Result<GroupConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(GroupConfig::from_json(&text)?)
}

/// Odd, so chord midpoints are sampled.
const CHORD_SAMPLES: usize = 65;

/// `{:.16e}`: 17 significant digits.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

struct CheckItem {
    name: String,
    passed: bool,
    detail: String,
}

pub fn cmd_check(cfg: &GroupConfig, g: &Global) -> Result<Output> {
    let tol = g.tol.unwrap_or(FORM_TOL);
    let depth = g.depth.unwrap_or(3);
    let mut items = Vec::new();
    let mut push = |name: String, passed: bool, detail: String| items.push(CheckItem { name, passed, detail });

    let mut all_gens = true;
    for (i, spec) in cfg.generators.iter().enumerate() {
        let (a, _) = match spec.raw() {
            Ok(ab) => ab,
            Err(e) => {
                push(format!("generator {i}: parse"), false, e.to_string());
                all_gens = false;
                continue;
            }
        };
        let defect = form_defect(&a);
        let form_ok = defect <= tol;
        push(format!("generator {i}: form"), form_ok, format!("defect {defect:.3e} (tol {tol:.1e})"));
        let det = lorentz_det(&a);
        push(format!("generator {i}: orientation"), det > 0.0, format!("det {det:.6}"));
        let class = classify(&a);
        let hyp = matches!(class, Ok(LinearClass::PositiveHyperbolic));
        let detail = match &class {
            Ok(c) => format!("{c:?}"),
            Err(e) => e.to_string(),
        };
        push(format!("generator {i}: hyperbolicity"), hyp, detail);
        all_gens &= form_ok && det > 0.0 && hyp;
    }

    let mut sweep_json = serde_json::Value::Null;
    if all_gens {
        match cfg.group() {
            Ok(group) => {
                let cert = group.certificate();
                push("ping-pong".into(), true, format!("certified on {} samples", cert.samples));
                match margulis_sweep(&group, depth) {
                    Ok(sw) => {
                        let s = sw.summary;
                        let coherent = matches!(s.sign, SignVerdict::Positive | SignVerdict::Negative);
                        push(
                            format!("sweep sign (depth {depth})"),
                            coherent,
                            format!("{:?}, mu in [{:.6}, {:.6}], C = {:.6}", s.sign, s.min_mu, s.max_mu, s.empirical_c),
                        );
                        sweep_json = json!({
                            "depth": depth,
                            "rows": s.rows,
                            "sign": s.sign,
                            "min_mu": s.min_mu,
                            "max_mu": s.max_mu,
                            "empirical_c": s.empirical_c,
                        });
                    }
                    Err(e) => push(format!("sweep sign (depth {depth})"), false, e.to_string()),
                }
            }
            Err(e) => push("ping-pong".into(), false, e.to_string()),
        }
    } else {
        push("ping-pong".into(), false, "skipped: a generator failed".into());
    }

    let ok = items.iter().all(|c| c.passed);
    let mut report = format!("config {:?}\n", cfg.metadata.name);
    for c in &items {
        let _ = writeln!(report, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let _ = writeln!(report, "{}", if ok { "all checks passed" } else { "checks failed" });
    let doc = json!({
        "schema": flatlorentz::config::SCHEMA,
        "config": cfg.metadata.name,
        "passed": ok,
        "checks": items.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        "sweep": sweep_json,
    });
    Ok(Output {
        report,
        artifact: Some(pretty(&doc)),
        artifact_to_stdout: false,
        warnings: Vec::new(),
        ok,
    })
}

pub fn cmd_sweep(cfg: &GroupConfig, g: &Global) -> Result<Output> {
    let depth = g.depth.unwrap_or(4);
    let group = cfg.group()?;
    let sw = margulis_sweep(&group, depth)?;
    let mut csv = String::from("word,wordlen,lambda,ell,mu,ratio\n");
    for r in &sw.rows {
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{}",
            r.word,
            r.word.len(),
            num(r.lambda),
            num(r.ell),
            num(r.mu),
            num(r.ratio)
        );
    }
    let s = sw.summary;
    if s.rows > 0 {
        let _ = writeln!(csv, "# rows {}", s.rows);
        let _ = writeln!(csv, "# sign {:?}", s.sign);
        let _ = writeln!(csv, "# min_mu {}", num(s.min_mu));
        let _ = writeln!(csv, "# empirical_c {}", num(s.empirical_c));
    }
    let report = format!("{} words up to length {depth}, sign {:?}, C = {:.6}\n", s.rows, s.sign, s.empirical_c);
    Ok(Output::artifact(report, csv, Vec::new()))
}

fn limit_set_for(cfg: &GroupConfig, g: &Global, default_depth: usize) -> Result<LimitSetApprox> {
    let group = cfg.group()?;
    let w_min = g.tol.unwrap_or(tol::GAP_MIN);
    Ok(limit_set_with(group.linear(), g.depth.unwrap_or(default_depth), w_min))
}

fn scene_output(scene: Scene, what: &str) -> Output {
    let report = format!(
        "{what}: {} point sets, {} polylines, {} meshes\n",
        scene.points.len(),
        scene.polylines.len(),
        scene.meshes.len()
    );
    let mut text = scene.to_json();
    text.push('\n');
    Output::artifact(report, text, scene.warnings.clone())
}

pub fn cmd_limitset(cfg: &GroupConfig, g: &Global) -> Result<Output> {
    let ls = limit_set_for(cfg, g, 6)?;
    let mut scene = Scene::new(g.frame);
    scene.add_boundary_circles(256);
    scene.add_points("limit_set", &ls.points);
    for (i, c) in gap_chords(&ls)?.iter().enumerate() {
        scene.add_polyline(&format!("gap_chord_{i}"), PolylineKind::Chord, &c.segment.sample(CHORD_SAMPLES));
    }
    scene.set_meta("config", &cfg.metadata.name);
    scene.set_meta("depth", ls.depth);
    scene.set_meta("limit_points", ls.len());
    scene.set_meta("gaps", ls.gaps.len());
    scene.set_meta("seed", g.seed);
    Ok(scene_output(scene, "limitset"))
}

fn domain_for(cfg: &GroupConfig, g: &Global, default_depth: usize) -> Result<DomainModel> {
    let ls = limit_set_for(cfg, g, default_depth)?;
    Ok(build_domain_from(ls, &StripResolution::default())?)
}

pub fn cmd_domain(cfg: &GroupConfig, g: &Global, strips: bool) -> Result<Output> {
    let model = domain_for(cfg, g, 4)?;
    let mut scene = Scene::new(g.frame);
    scene.add_boundary_circles(256);
    scene.add_points("limit_set", &model.limit_set.points);
    for (i, arc) in model.excluded.iter().enumerate() {
        scene.add_polyline(&format!("excluded_{i}"), PolylineKind::Arc, &arc.cloud(true));
    }
    for st in &model.strips {
        let i = st.index;
        scene.add_polyline(&format!("strip_{i}_l"), PolylineKind::Chord, &st.l.sample(CHORD_SAMPLES));
        scene.add_polyline(&format!("strip_{i}_l_minus"), PolylineKind::Chord, &st.l_minus.sample(CHORD_SAMPLES));
        scene.add_polyline(&format!("strip_{i}_s"), PolylineKind::Arc, &st.s.cloud(true));
        scene.add_polyline(&format!("strip_{i}_t"), PolylineKind::Arc, &st.t.cloud(true));
        if strips {
            scene.add_points(&format!("strip_{i}_interior"), &st.interior);
        }
    }
    let rep = strip_disjointness(&model);
    scene.set_meta("config", &cfg.metadata.name);
    scene.set_meta("depth", model.limit_set.depth);
    scene.set_meta("limit_points", model.limit_set.len());
    scene.set_meta("strips", model.strips.len());
    scene.set_meta("disjointness_matrix", &rep.matrix);
    scene.set_meta("min_off_diagonal", rep.min_off_diagonal);
    scene.set_meta("strips_disjoint", rep.disjoint);
    scene.set_meta("seed", g.seed);
    let mut out = scene_output(scene, if strips { "strips" } else { "domain" });
    let _ = writeln!(
        out.report,
        "{} limit points, {} strips, min off-diagonal distance {:.6e}",
        model.limit_set.len(),
        model.strips.len(),
        rep.min_off_diagonal
    );
    Ok(out)
}

fn parse_floats(s: &str, sep: char) -> Result<Vec<f64>> {
    s.split(sep)
        .map(|x| x.trim().parse::<f64>().with_context(|| format!("bad number {x:?}")))
        .collect()
}

pub fn parse_schedule(spec: &str, lambda: f64, mu: f64) -> Result<Vec<(f64, f64)>> {
    if let Some(n) = spec.strip_prefix("power:") {
        return Ok(power_schedule(lambda, mu, n.trim().parse().context("power:N")?));
    }
    spec.split(';')
        .map(|pair| match parse_floats(pair, ',')?.as_slice() {
            [l, k] if *l > 1.0 => Ok((*l, *k)),
            _ => bail!("schedule entry {pair:?} is not `lambda,k` with lambda > 1"),
        })
        .collect()
}

fn cluster(x: f64, y: f64, z: f64, stable: bool) -> Vec<SpherePoint> {
    let offsets = [(0.0, 0.0), (0.1, 0.0), (-0.1, 0.0), (0.0, 0.1), (0.0, -0.1)];
    offsets
        .iter()
        .map(|&(a, b)| {
            let p = if stable {
                Vector3::new(x, y + a, z + b)
            } else {
                Vector3::new(x + a, y, z + b)
            };
            SpherePoint::affine(&p)
        })
        .collect()
}

/// Named compact sets for the boost demo, in standard coordinates.
pub fn demo_body(spec: &str) -> Result<ConvexBody> {
    let body = match spec {
        "dumbbell" => join(
            &ConvexBody::new(cluster(0.5, 0.2, 0.1, true))?,
            &ConvexBody::new(cluster(-0.5, 0.2, 0.1, true))?,
            0,
        )?,
        "stable" => ConvexBody::new(cluster(0.0, 0.2, 0.1, true))?,
        "side" => ConvexBody::new(cluster(0.5, 0.2, 0.1, false))?,
        other => {
            let pts = other
                .strip_prefix("points:")
                .ok_or_else(|| anyhow!("unknown K {other:?}"))?
                .split(';')
                .map(|p| match parse_floats(p, ',')?.as_slice() {
                    [x, y, z] => Ok(SpherePoint::affine(&Vector3::new(*x, *y, *z))),
                    [x, y, z, t] => Ok(SpherePoint::new(*x, *y, *z, *t)?),
                    _ => bail!("point {p:?} is not x,y,z or x,y,z,t"),
                })
                .collect::<Result<Vec<_>>>()?;
            ConvexBody::new(pts)?
        }
    };
    Ok(body)
}

pub fn cmd_boost_demo(ell: f64, mu: f64, schedule: &str, k: &str, g: &Global) -> Result<Output> {
    if ell <= 0.0 {
        bail!("--ell must be positive");
    }
    let lambda = (ell / 2.0).exp();
    let sched = parse_schedule(schedule, lambda, mu)?;
    let mut warnings = Vec::new();
    if sched.iter().all(|&(_, k)| k == 0.0) {
        warnings.push("degenerate case: k = 0 throughout, the schedule is a pure linear boost".to_string());
    }
    let body = demo_body(k)?;
    let opts = ExperimentOptions {
        keep_images: true,
        ..ExperimentOptions::default()
    };
    let run = boost_convergence_experiment(&sched, &body, &opts)?;

    let mut report = format!("# limit {}\n# repeller_distance {}\nn,lambda,k,distance\n", run.limit.label(), num(run.repeller_distance));
    for (n, s) in run.steps.iter().enumerate() {
        let _ = writeln!(report, "{},{},{},{}", n + 1, num(s.lambda), num(s.k), num(s.distance));
    }

    let mut scene = Scene::new(g.frame);
    scene.add_boundary_circles(256);
    scene.add_points("K", body.vertices());
    scene.add_polyline("predicted_limit", PolylineKind::Curve, &run.limit.samples(128));
    for (i, name) in ["e1", "e2", "e3"].iter().enumerate() {
        scene.add_label(name, &SpherePoint::basis(i));
    }
    for (n, s) in run.steps.iter().enumerate() {
        if let Some(img) = &s.image {
            scene.add_points(&format!("step_{}", n + 1), img);
        }
    }
    scene.set_meta("limit", run.limit.label());
    scene.set_meta("ell", ell);
    scene.set_meta("mu", mu);
    scene.set_meta("distances", run.steps.iter().map(|s| s.distance).collect::<Vec<_>>());
    warnings.extend(scene.warnings.iter().cloned());
    let mut text = scene.to_json();
    text.push('\n');
    Ok(Output {
        report,
        artifact: Some(text),
        artifact_to_stdout: false,
        warnings,
        ok: true,
    })
}

fn planes_from_chord(chord: &str, vertex: &str) -> Result<Vec<CrookedPlane>> {
    let x = match parse_floats(vertex, ',')?.as_slice() {
        [a, b, c] => Vector3::new(*a, *b, *c),
        _ => bail!("--vertex is not x,y,z"),
    };
    let (v1, v2) = if chord == "diameter" {
        (Vector3::new(1.0, 0.0, 1.0), Vector3::new(-1.0, 0.0, 1.0))
    } else {
        match parse_floats(chord, ',')?.as_slice() {
            [t1, t2] => (n_theta(*t1), n_theta(*t2)),
            _ => bail!("--chord is not theta1,theta2 or diameter"),
        }
    };
    Ok(vec![CrookedPlane::new(x, v1, v2)?])
}

/// Wavefront OBJ, one object per plane and one group per piece.
pub fn to_obj(meshes: &[(String, Mesh)]) -> String {
    let mut s = String::new();
    let mut base = 1;
    for (name, m) in meshes {
        let _ = writeln!(s, "o {name}");
        for v in &m.vertices {
            let _ = writeln!(s, "v {} {} {}", num(v.x), num(v.y), num(v.z));
        }
        for piece in [Piece::Stem, Piece::Wing1, Piece::Wing2] {
            let _ = writeln!(s, "g {}", piece.name());
            for (t, p) in m.triangles.iter().zip(&m.pieces) {
                if *p == piece {
                    let _ = writeln!(s, "f {} {} {}", t[0] + base, t[1] + base, t[2] + base);
                }
            }
        }
        base += m.vertices.len();
    }
    s
}

pub fn cmd_crooked(
    cfg: Option<&GroupConfig>,
    chord: Option<&str>,
    vertex: &str,
    extent: f64,
    resolution: usize,
    format: MeshFormat,
    g: &Global,
) -> Result<Output> {
    let planes = match (cfg, chord) {
        (Some(_), Some(_)) => bail!("give either a config or --chord, not both"),
        (None, None) => bail!("crooked needs a config or --chord"),
        (None, Some(c)) => planes_from_chord(c, vertex)?,
        (Some(cfg), None) => {
            let ls = limit_set_for(cfg, g, 2)?;
            gap_chords(&ls)?
                .iter()
                .map(|c| CrookedPlane::new(Vector3::zeros(), n_theta(c.p_angle), n_theta(c.q_angle)))
                .collect::<flatlorentz::Result<Vec<_>>>()?
        }
    };
    let meshes: Vec<(String, Mesh)> = planes
        .iter()
        .enumerate()
        .map(|(i, cp)| (format!("crooked_{i}"), mesh(cp, extent, resolution)))
        .collect();
    let mut report = String::new();
    let mut circles = Vec::new();
    for ((name, m), cp) in meshes.iter().zip(&planes) {
        let (v1, v2) = cp.null_dirs();
        let circle = crooked_circle(&SpherePoint::direction(&v1)?, &SpherePoint::direction(&v2)?, tol::ARC_SAMPLES)?;
        let _ = writeln!(
            report,
            "{name}: {} vertices, {} triangles, crooked-circle closure gap {:.3e}",
            m.vertices.len(),
            m.triangles.len(),
            circle.closure_gap()
        );
        circles.push(circle);
    }
    let artifact = match format {
        MeshFormat::Obj => to_obj(&meshes),
        MeshFormat::Scene => {
            let mut scene = Scene::new(g.frame);
            scene.add_boundary_circles(256);
            for ((name, m), c) in meshes.iter().zip(&circles) {
                scene.add_mesh(name, m);
                scene.add_polyline(&format!("{name}_circle"), PolylineKind::Curve, &c.cloud);
            }
            scene.set_meta("extent", extent);
            scene.set_meta("resolution", resolution);
            let mut t = scene.to_json();
            t.push('\n');
            return Ok(Output::artifact(report, t, scene.warnings));
        }
    };
    Ok(Output::artifact(report, artifact, Vec::new()))
}

pub fn cmd_properness(cfg: &GroupConfig, k: &str, g: &Global) -> Result<Output> {
    let depth = g.depth.unwrap_or(4);
    let group = cfg.group()?;
    let ls = limit_set_with(group.linear(), depth.max(1), tol::GAP_MIN);
    let model = build_domain_from(ls, &StripResolution::default())?;
    let kset = kspec::parse(k, Some(&model))?;
    let overlap = g.tol.unwrap_or(tol::OVERLAP);
    let rep = properness_census_with(&group, &model, &kset, depth, overlap)?;
    let words: Vec<String> = rep.intersecting.iter().map(|w| w.to_string()).collect();
    let doc = json!({
        "schema": flatlorentz::config::SCHEMA,
        "config": cfg.metadata.name,
        "K": k,
        "depth": rep.depth,
        "resolution": rep.resolution,
        "overlap": overlap,
        "intersecting": words,
        "by_length": rep.by_length,
        "stabilized": rep.stabilized,
        "min_nonidentity_distance": rep.min_nonidentity_distance,
        "statement": rep.statement(),
    });
    let report = format!(
        "intersecting words: {{{}}}\nstabilized: {}\n{}\n",
        words.join(", "),
        rep.stabilized,
        rep.statement()
    );
    let mut out = Output::artifact(report, pretty(&doc), Vec::new());
    out.ok = rep.stabilized;
    Ok(out)
}
