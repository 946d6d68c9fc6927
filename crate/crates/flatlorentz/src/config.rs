//! Group configuration files.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::boosts::{affine_boost, AffineIsometry};
use crate::fuchsian::{FuchsianGroup, Interval};
use crate::margulis::MargulisGroup;
use crate::{lorentz, Error, Result};

pub const SCHEMA: &str = "flatlorentz/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    pub schema: String,
    #[serde(default)]
    pub metadata: Metadata,
    pub generators: Vec<GeneratorSpec>,
    /// `[D⁺₁, D⁻₁, D⁺₂, …]` as `[start, end]` angle pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pingpong: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Matrix(MatrixGenerator),
    Boost(BoostGenerator),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixGenerator {
    /// Row-major.
    pub linear: [f64; 9],
    pub translation: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoostGenerator {
    pub boost: BoostParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoostParams {
    /// Translation length `2 ln λ`.
    pub ell: f64,
    pub mu: f64,
    pub axis_frame: AxisFrame,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisFrame {
    pub v_plus: [f64; 3],
    pub v_minus: [f64; 3],
    pub base_point: [f64; 3],
}

impl GeneratorSpec {
    /// `(A, b)` without any validation of `A`.
    pub fn raw(&self) -> Result<(Matrix3<f64>, Vector3<f64>)> {
        match self {
            GeneratorSpec::Matrix(m) => Ok((
                Matrix3::from_row_slice(&m.linear),
                Vector3::from(m.translation),
            )),
            GeneratorSpec::Boost(b) => {
                let p = &b.boost;
                let g = affine_boost(
                    (p.ell / 2.0).exp(),
                    p.mu,
                    &Vector3::from(p.axis_frame.v_plus),
                    &Vector3::from(p.axis_frame.v_minus),
                    &Vector3::from(p.axis_frame.base_point),
                )?;
                Ok((*g.linear(), *g.translation()))
            }
        }
    }

    pub fn isometry(&self) -> Result<AffineIsometry> {
        let (a, b) = self.raw()?;
        AffineIsometry::new(a, b)
    }

    pub fn from_isometry(g: &AffineIsometry) -> Self {
        let mut linear = [0.0; 9];
        for r in 0..3 {
            for c in 0..3 {
                linear[3 * r + c] = g.linear()[(r, c)];
            }
        }
        GeneratorSpec::Matrix(MatrixGenerator {
            linear,
            translation: (*g.translation()).into(),
        })
    }
}

impl GroupConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::ConfigParse(e.to_string()))?;
        match value.get("schema").and_then(|s| s.as_str()) {
            Some(SCHEMA) => {}
            Some(other) => {
                return Err(Error::SchemaMismatch {
                    expected: SCHEMA.into(),
                    found: other.into(),
                })
            }
            None => return Err(Error::ConfigParse("missing \"schema\" field".into())),
        }
        let cfg: GroupConfig =
            serde_json::from_value(value).map_err(|e| Error::ConfigParse(e.to_string()))?;
        if let Some(p) = &cfg.pingpong {
            if p.len() != 2 * cfg.generators.len() {
                return Err(Error::ConfigParse(format!(
                    "pingpong lists {} intervals for {} generators",
                    p.len(),
                    cfg.generators.len()
                )));
            }
        }
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn isometries(&self) -> Result<Vec<AffineIsometry>> {
        self.generators.iter().map(GeneratorSpec::isometry).collect()
    }

    pub fn intervals(&self) -> Option<Vec<(Interval, Interval)>> {
        self.pingpong.as_ref().map(|p| {
            p.chunks(2)
                .map(|c| (Interval::new(c[0][0], c[0][1]), Interval::new(c[1][0], c[1][1])))
                .collect()
        })
    }

    pub fn linear_group(&self) -> Result<FuchsianGroup> {
        let gens = self.isometries()?;
        let group = FuchsianGroup::new(gens.iter().map(|g| *g.linear()).collect())?;
        Ok(match self.intervals() {
            Some(iv) => group.with_intervals(iv),
            None => group,
        })
    }

    /// The certified group; fails on the first violated invariant.
    pub fn group(&self) -> Result<MargulisGroup> {
        MargulisGroup::with_linear(self.isometries()?, self.linear_group()?)
    }

    fn boost(v_plus: [f64; 3], v_minus: [f64; 3], ell: f64, mu: f64) -> GeneratorSpec {
        GeneratorSpec::Boost(BoostGenerator {
            boost: BoostParams {
                ell,
                mu,
                axis_frame: AxisFrame {
                    v_plus,
                    v_minus,
                    base_point: [0.0; 3],
                },
            },
        })
    }

    /// Rank-2 Schottky group of boosts along the x- and y-axes, `ℓ = 4`, `μ = 3`.
    pub fn bundled() -> Self {
        GroupConfig {
            schema: SCHEMA.into(),
            metadata: Metadata {
                name: "bundled".into(),
                description: "rank-2 Schottky group, boosts of translation length 4 along the x- and y-axes with Margulis invariant 3".into(),
            },
            generators: vec![
                Self::boost([1.0, 0.0, 1.0], [-1.0, 0.0, 1.0], 4.0, 3.0),
                Self::boost([0.0, 1.0, 1.0], [0.0, -1.0, 1.0], 4.0, 3.0),
            ],
            pingpong: None,
        }
    }

    /// Cyclic group of a single boost along the x-axis.
    pub fn cyclic() -> Self {
        GroupConfig {
            schema: SCHEMA.into(),
            metadata: Metadata {
                name: "cyclic".into(),
                description: "cyclic group of one affine boost along the x-axis".into(),
            },
            generators: vec![Self::boost([1.0, 0.0, 1.0], [-1.0, 0.0, 1.0], 4.0, 3.0)],
            pingpong: None,
        }
    }

    /// A rotation about the time axis: fails the hyperbolicity check.
    pub fn elliptic() -> Self {
        let g = AffineIsometry::linear_only(lorentz::rotation_z(1.0)).expect("rotation");
        GroupConfig {
            schema: SCHEMA.into(),
            metadata: Metadata {
                name: "elliptic".into(),
                description: "a rotation about the time axis; not a Schottky group".into(),
            },
            generators: vec![GeneratorSpec::from_isometry(&g)],
            pingpong: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_matches_library_group() {
        let a = GroupConfig::bundled().group().unwrap();
        let b = MargulisGroup::bundled(3.0);
        for (g, h) in a.generators().iter().zip(b.generators()) {
            assert!((g.matrix4() - h.matrix4()).amax() < 1e-12);
        }
    }

    #[test]
    fn roundtrip() {
        for cfg in [GroupConfig::bundled(), GroupConfig::cyclic(), GroupConfig::elliptic()] {
            assert_eq!(GroupConfig::from_json(&cfg.to_json()).unwrap(), cfg);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(GroupConfig::from_json("{"), Err(Error::ConfigParse(_))));
        assert!(matches!(
            GroupConfig::from_json(r#"{"schema":"other/2","generators":[]}"#),
            Err(Error::SchemaMismatch { .. })
        ));
        let both = r#"{"schema":"flatlorentz/1","generators":[{"linear":[1,0,0,0,1,0,0,0,1],"translation":[0,0,0],
            "boost":{"ell":1,"mu":0,"axis_frame":{"v_plus":[1,0,1],"v_minus":[-1,0,1],"base_point":[0,0,0]}}}]}"#;
        assert!(matches!(GroupConfig::from_json(both), Err(Error::ConfigParse(_))));
        assert_eq!(GroupConfig::elliptic().group().err(), Some(Error::NotHyperbolic));
    }
}
