//! Scene files consumed by external renderers.

use std::collections::BTreeMap;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::config::SCHEMA;
use crate::crooked::Mesh;
use crate::sphere::{normalize_to_ball, SpherePoint};
use crate::{tol, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    /// Normalized-ball coordinates.
    Ball,
    /// `S²_∞` projected to the plane from `(0, 0, −1)`.
    Stereographic,
}

impl std::str::FromStr for Frame {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ball" => Ok(Frame::Ball),
            "stereographic" => Ok(Frame::Stereographic),
            _ => Err(format!("unknown frame {s:?}")),
        }
    }
}

impl Frame {
    pub fn dim(&self) -> usize {
        match self {
            Frame::Ball => 3,
            Frame::Stereographic => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    pub label: String,
    pub coords: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolylineKind {
    Arc,
    Chord,
    Circle,
    Curve,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    pub label: String,
    pub kind: PolylineKind,
    pub coords: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneMesh {
    pub label: String,
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[usize; 3]>,
    /// Piece name per triangle.
    pub groups: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Label {
    pub text: String,
    pub position: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub schema: String,
    pub frame: Frame,
    pub points: Vec<PointSet>,
    pub polylines: Vec<Polyline>,
    pub meshes: Vec<SceneMesh>,
    pub labels: Vec<Label>,
    pub metadata: BTreeMap<String, serde_json::Value>,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

/// `(x, y, z) ↦ (x, y) / (1 + z)` on the unit sphere.
pub fn stereographic(p: &Vector3<f64>) -> Option<[f64; 2]> {
    let u = p.normalize();
    let d = 1.0 + u.z;
    (d > tol::GEO).then(|| [u.x / d, u.y / d])
}

impl Scene {
    pub fn new(frame: Frame) -> Self {
        Scene {
            schema: SCHEMA.into(),
            frame,
            points: Vec::new(),
            polylines: Vec::new(),
            meshes: Vec::new(),
            labels: Vec::new(),
            metadata: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    fn project(&mut self, label: &str, pts: &[SpherePoint]) -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(pts.len());
        for p in pts {
            match self.frame {
                Frame::Ball => match normalize_to_ball(p) {
                    Ok(b) => out.push(vec![b.x, b.y, b.z]),
                    Err(_) => self
                        .warnings
                        .push(format!("{label}: dropped a point outside the hemisphere")),
                },
                Frame::Stereographic => {
                    if !p.is_at_infinity() {
                        self.warnings
                            .push(format!("{label}: dropped a point not on the sphere at infinity"));
                    } else if let Some(q) = stereographic(&p.spatial()) {
                        out.push(q.to_vec());
                    } else {
                        self.warnings
                            .push(format!("{label}: dropped the projection pole (0, 0, -1)"));
                    }
                }
            }
        }
        out
    }

    pub fn add_points(&mut self, label: &str, pts: &[SpherePoint]) {
        let coords = self.project(label, pts);
        self.points.push(PointSet {
            label: label.into(),
            coords,
        });
    }

    pub fn add_polyline(&mut self, label: &str, kind: PolylineKind, pts: &[SpherePoint]) {
        let coords = self.project(label, pts);
        self.polylines.push(Polyline {
            label: label.into(),
            kind,
            coords,
        });
    }

    pub fn add_label(&mut self, text: &str, at: &SpherePoint) {
        if let Some(position) = self.project(text, std::slice::from_ref(at)).pop() {
            self.labels.push(Label {
                text: text.into(),
                position,
            });
        }
    }

    /// Meshes live in the ball; stereographic scenes drop them with a warning.
    pub fn add_mesh(&mut self, label: &str, m: &Mesh) {
        if self.frame != Frame::Ball {
            self.warnings
                .push(format!("{label}: meshes are only written in the ball frame"));
            return;
        }
        self.meshes.push(SceneMesh {
            label: label.into(),
            vertices: m.vertices.iter().map(|v| [v.x, v.y, v.z]).collect(),
            triangles: m.triangles.clone(),
            groups: m.pieces.iter().map(|p| p.name().to_string()).collect(),
        });
    }

    /// `∂𝕊₊` and `∂𝕊₋` sampled at `n` points each.
    pub fn add_boundary_circles(&mut self, n: usize) {
        let plus: Vec<SpherePoint> = (0..=n)
            .map(|k| crate::lorentz::boundary_point(std::f64::consts::TAU * k as f64 / n as f64))
            .collect();
        let minus: Vec<SpherePoint> = plus.iter().map(SpherePoint::antipode).collect();
        self.add_polyline("boundary_plus", PolylineKind::Circle, &plus);
        self.add_polyline("boundary_minus", PolylineKind::Circle, &minus);
    }

    pub fn set_meta(&mut self, key: &str, value: impl Serialize) {
        self.metadata.insert(
            key.into(),
            serde_json::to_value(value).expect("metadata serializes"),
        );
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let scene: Scene =
            serde_json::from_str(text).map_err(|e| Error::ConfigParse(e.to_string()))?;
        if scene.schema != SCHEMA {
            return Err(Error::SchemaMismatch {
                expected: SCHEMA.into(),
                found: scene.schema,
            });
        }
        scene.validate()?;
        Ok(scene)
    }

    /// Coordinate dimensions match the frame, ball norms are at most
    /// `1 + τ_geo` and triangle indices are in range.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::ConfigParse(format!("invalid scene: {what}")));
        let dim = self.frame.dim();
        let coords = self
            .points
            .iter()
            .flat_map(|p| &p.coords)
            .chain(self.polylines.iter().flat_map(|p| &p.coords))
            .chain(self.labels.iter().map(|l| &l.position));
        for c in coords {
            if c.len() != dim {
                return bad("coordinate dimension does not match frame");
            }
            if self.frame == Frame::Ball && c.iter().map(|x| x * x).sum::<f64>().sqrt() > 1.0 + tol::GEO {
                return bad("ball coordinate outside the unit ball");
            }
        }
        for m in &self.meshes {
            if self.frame != Frame::Ball {
                return bad("mesh in a planar frame");
            }
            if m.groups.len() != m.triangles.len() {
                return bad("mesh group count differs from triangle count");
            }
            if m.triangles.iter().flatten().any(|&i| i >= m.vertices.len()) {
                return bad("triangle index out of range");
            }
            if m.vertices.iter().any(|v| Vector3::from(*v).norm() > 1.0 + tol::GEO) {
                return bad("mesh vertex outside the unit ball");
            }
        }
        Ok(())
    }
}
