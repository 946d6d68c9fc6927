//! Compact descriptions of compact sets `K ⊂ S³`.
//!
//! A spec is a `+`-separated union of terms:
//!
//! ```text
//! ball:x,y,z,r[,shell]     S³-ball of radius r about the affine point (x, y, z)
//! patch:x,y,z,r[,n]        disk of radius r in S²_∞ about the direction (x, y, z)
//! strip:i,r[,n]            patch inside strip i of the domain model ("widest" allowed)
//! point:x,y,z              a single affine point
//! ```

use anyhow::{anyhow, bail, Context, Result};
use flatlorentz::margulis::{ball_cloud, boundary_patch, strip_patch, DomainModel};
use flatlorentz::sphere::SpherePoint;
use nalgebra::Vector3;

pub const DEFAULT_K: &str = "ball:0,0,0,0.1,40";

fn numbers(args: &str) -> Result<Vec<f64>> {
    args.split(',')
        .map(|a| a.trim().parse::<f64>().with_context(|| format!("bad number {a:?}")))
        .collect()
}

fn arity(kind: &str, v: &[f64], min: usize, max: usize) -> Result<()> {
    if v.len() < min || v.len() > max {
        bail!("{kind}: expected {min} to {max} numbers, got {}", v.len());
    }
    Ok(())
}

pub fn parse(spec: &str, model: Option<&DomainModel>) -> Result<Vec<SpherePoint>> {
    let mut out = Vec::new();
    for term in spec.split('+') {
        let (kind, args) = term
            .trim()
            .split_once(':')
            .ok_or_else(|| anyhow!("term {term:?} lacks a ':'"))?;
        match kind {
            "ball" => {
                let v = numbers(args)?;
                arity(kind, &v, 4, 5)?;
                let shell = v.get(4).map_or(24, |&s| s as usize);
                out.extend(ball_cloud(&Vector3::new(v[0], v[1], v[2]), v[3], shell));
            }
            "patch" => {
                let v = numbers(args)?;
                arity(kind, &v, 4, 5)?;
                let n = v.get(4).map_or(12, |&s| s as usize);
                out.extend(boundary_patch(&Vector3::new(v[0], v[1], v[2]), v[3], n)?);
            }
            "point" => {
                let v = numbers(args)?;
                arity(kind, &v, 3, 3)?;
                out.push(SpherePoint::affine(&Vector3::new(v[0], v[1], v[2])));
            }
            "strip" => {
                let model = model.ok_or_else(|| anyhow!("strip terms need a domain model"))?;
                let (first, rest) = args.split_once(',').ok_or_else(|| anyhow!("strip:i,r[,n]"))?;
                let i = if first.trim() == "widest" {
                    model.widest_strip().ok_or_else(|| anyhow!("domain has no strips"))?
                } else {
                    first.trim().parse::<usize>().context("strip index")?
                };
                if i >= model.strips.len() {
                    bail!("strip {i} out of range ({} strips)", model.strips.len());
                }
                let v = numbers(rest)?;
                arity(kind, &v, 1, 2)?;
                let n = v.get(1).map_or(5, |&s| s as usize);
                out.extend(strip_patch(model, i, v[0], n));
            }
            other => bail!("unknown K term {other:?}"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_unions() {
        let k = parse("ball:0,0,0,0.1,10+point:1,2,3", None).unwrap();
        assert_eq!(k.len(), 1 + 2 * 10 + 1);
        assert!(parse("strip:0,0.1", None).is_err());
        assert!(parse("cube:1", None).is_err());
        assert!(parse("ball:0,0,0", None).is_err());
    }
}
