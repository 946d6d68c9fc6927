//! The Lorentzian vector space `(V, ·, Det)` with form `x² + y² − z²`.
//!
//! On `S²_∞` every spacelike direction `w` lies on exactly one arc `ε(x)`:
//! the directions of the positively oriented wing of the null vector `x`.
//! These arcs foliate the annulus `𝕊₀`; [`collapse_project`] recovers `x`.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};

use crate::sphere::{Semicircle, SpherePoint};
use crate::{tol, Error, Result};

pub type LorentzVector = Vector3<f64>;

/// `J = diag(1, 1, −1)`.
pub fn form() -> Matrix3<f64> {
    Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0))
}

pub fn inner(u: &LorentzVector, w: &LorentzVector) -> f64 {
    u.x * w.x + u.y * w.y - u.z * w.z
}

pub fn quad(v: &LorentzVector) -> f64 {
    inner(v, v)
}

pub fn det3(u: &LorentzVector, v: &LorentzVector, w: &LorentzVector) -> f64 {
    Matrix3::from_columns(&[*u, *v, *w]).determinant()
}

/// The vector `u × v` with `inner(u × v, w) = det3(u, v, w)`.
pub fn lorentz_cross(u: &LorentzVector, v: &LorentzVector) -> LorentzVector {
    let c = u.cross(v);
    Vector3::new(c.x, c.y, -c.z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    FutureTimelike,
    PastTimelike,
    FutureNull,
    PastNull,
    Spacelike,
    Zero,
}

impl CausalClass {
    pub fn is_null(self) -> bool {
        matches!(self, CausalClass::FutureNull | CausalClass::PastNull)
    }

    pub fn is_future(self) -> bool {
        matches!(self, CausalClass::FutureNull | CausalClass::FutureTimelike)
    }
}

pub fn causal_class(v: &LorentzVector) -> CausalClass {
    let n2 = v.norm_squared();
    if n2 < tol::NORM * tol::NORM {
        return CausalClass::Zero;
    }
    let q = quad(v);
    if q.abs() < tol::CAUSAL * n2 {
        if v.z > 0.0 {
            CausalClass::FutureNull
        } else {
            CausalClass::PastNull
        }
    } else if q > 0.0 {
        CausalClass::Spacelike
    } else if v.z > 0.0 {
        CausalClass::FutureTimelike
    } else {
        CausalClass::PastTimelike
    }
}

/// Relative defect `‖AᵀJA − J‖ / max(1, ‖A‖²)` in the max-entry norm.
pub fn form_defect(a: &Matrix3<f64>) -> f64 {
    let j = form();
    let d = (a.transpose() * j * a - j).amax();
    d / a.amax().powi(2).max(1.0)
}

/// `det A = ±1` of a form-preserving matrix, read off `cof(A) = det(A) · J A J`
/// at the largest entry; stable where the direct determinant has lost its sign.
pub fn lorentz_det(a: &Matrix3<f64>) -> f64 {
    let jaj = form() * a * form();
    let (mut r, mut c) = (0, 0);
    for i in 0..3 {
        for k in 0..3 {
            if jaj[(i, k)].abs() > jaj[(r, c)].abs() {
                (r, c) = (i, k);
            }
        }
    }
    let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
    let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
    let cof = a[(r1, c1)] * a[(r2, c2)] - a[(r1, c2)] * a[(r2, c1)];
    cof / jaj[(r, c)]
}

/// `J Aᵀ J`, the inverse of a form-preserving matrix.
pub fn lorentz_inverse(a: &Matrix3<f64>) -> Matrix3<f64> {
    let j = form();
    j * a.transpose() * j
}

/// Rotation by `phi` about the time axis.
pub fn rotation_z(phi: f64) -> Matrix3<f64> {
    let (s, c) = phi.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

/// Hyperbolic rotation in the `x–z` plane with rapidity `s`; eigenvalue `eˢ` on `(1, 0, 1)`.
pub fn boost_x(s: f64) -> Matrix3<f64> {
    let (ch, sh) = (s.cosh(), s.sinh());
    Matrix3::new(ch, 0.0, sh, 0.0, 1.0, 0.0, sh, 0.0, ch)
}

/// Boost with rapidity `s` whose attracting null direction is `n_θ`.
pub fn boost_towards(theta: f64, s: f64) -> Matrix3<f64> {
    rotation_z(theta) * boost_x(s) * rotation_z(-theta)
}

/// `n_θ = (cos θ, sin θ, 1)`, the future null vector of Euclidean length `√2`.
pub fn n_theta(theta: f64) -> LorentzVector {
    Vector3::new(theta.cos(), theta.sin(), 1.0)
}

/// `(−sin θ, cos θ, 0)`, spanning the wing of `n_θ` together with `n_θ`.
pub fn m_theta(theta: f64) -> LorentzVector {
    Vector3::new(-theta.sin(), theta.cos(), 0.0)
}

/// Angle `θ` with `v ∝ ±n_θ` for a null vector `v`.
pub fn null_angle(v: &LorentzVector) -> Result<f64> {
    match causal_class(v) {
        CausalClass::FutureNull => Ok(v.y.atan2(v.x)),
        CausalClass::PastNull => Ok((-v.y).atan2(-v.x)),
        _ => Err(Error::NotNull),
    }
}

/// The point `((n_θ : 0))` of `∂𝕊₊`.
pub fn boundary_point(theta: f64) -> SpherePoint {
    SpherePoint::direction(&n_theta(theta)).expect("nonzero")
}

/// Angle of a point of `S²_∞` around the time axis.
pub fn boundary_angle(p: &SpherePoint) -> f64 {
    p.coords().y.atan2(p.coords().x)
}

/// Wing orientation `Det(v, w, u)` with `u = (0, 0, ±1)` matching the time orientation of `v`.
pub fn wing_sign(v: &LorentzVector, w: &LorentzVector) -> f64 {
    let u = Vector3::new(0.0, 0.0, v.z.signum());
    det3(v, w, &u)
}

/// The open arc `ε(x)` of directions of the positive wing of a null vector.
#[derive(Debug, Clone, PartialEq)]
pub struct NullArc {
    theta: f64,
    base: SpherePoint,
    curve: Semicircle,
    samples: Vec<SpherePoint>,
}

impl NullArc {
    /// Arc over `n_θ` with `n` interior samples on the grid `t_k = −1 + 2k/(n+1)`.
    pub fn new(theta: f64, n: usize) -> Self {
        let (nv, mv) = (n_theta(theta), m_theta(theta));
        let base = SpherePoint::direction(&nv).expect("nonzero");
        let mid = SpherePoint::direction(&mv).expect("nonzero");
        let curve = Semicircle::new(base, mid).expect("orthogonal");
        let samples = (1..=n)
            .map(|k| {
                let t = -1.0 + 2.0 * k as f64 / (n + 1) as f64;
                let w = nv * t + mv * (1.0 - t * t).sqrt();
                SpherePoint::direction(&w).expect("nonzero")
            })
            .collect();
        NullArc {
            theta: wrap_angle(theta),
            base,
            curve,
            samples,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `((v))`, the endpoint on `∂𝕊₊`.
    pub fn base(&self) -> &SpherePoint {
        &self.base
    }

    /// `((v₋))`, the endpoint on `∂𝕊₋`.
    pub fn far_end(&self) -> SpherePoint {
        self.base.antipode()
    }

    pub fn samples(&self) -> &[SpherePoint] {
        &self.samples
    }

    /// Samples of the arc, with both endpoints appended when `closed`.
    pub fn cloud(&self, closed: bool) -> Vec<SpherePoint> {
        let mut out = Vec::with_capacity(self.samples.len() + 2);
        if closed {
            out.push(self.base);
        }
        out.extend_from_slice(&self.samples);
        if closed {
            out.push(self.far_end());
        }
        out
    }

    /// The great semicircle carrying the closed arc.
    pub fn curve(&self) -> &Semicircle {
        &self.curve
    }

    /// Exact distance to the closed arc `Cl(ε(x))`.
    pub fn distance_to(&self, p: &SpherePoint) -> f64 {
        self.curve.distance_to(p)
    }
}

/// Wrap an angle into `(−π, π]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t - 2.0 * PI
    } else {
        t
    }
}

/// `ε((v))` for a future or past null vector `v`, sampled at the default resolution.
pub fn wing(v: &LorentzVector) -> Result<NullArc> {
    wing_sampled(v, tol::ARC_SAMPLES)
}

pub fn wing_sampled(v: &LorentzVector, n: usize) -> Result<NullArc> {
    Ok(NullArc::new(null_angle(v)?, n))
}

/// Distance from `p` to `Cl(ε(x))`.
///
/// Computed on the carrying semicircle rather than on samples, so the
/// value is exact. The infimum over the open arc equals that over its
/// closure, so `closed` does not change the result.
pub fn arc_distance(p: &SpherePoint, arc: &NullArc, _closed: bool) -> f64 {
    arc.distance_to(p)
}

/// Angle `θ` of the base of the arc `ε` containing the spacelike vector `w`.
///
/// Solves `a cos θ + b sin θ = c` and picks the root with `Det(n_θ, w, u) > 0`.
/// Since `Det(n_θ, w, e_z) = r sin(φ − θ)` with `(a, b) = r(cos φ, sin φ)`,
/// that root is `θ = φ − arccos(c / r)`.
pub fn collapse_angle(w: &LorentzVector) -> Result<f64> {
    if causal_class(w) != CausalClass::Spacelike {
        return Err(Error::NotSpacelike);
    }
    let r = w.x.hypot(w.y);
    let phi = w.y.atan2(w.x);
    let delta = (w.z / r).clamp(-1.0, 1.0).acos();
    Ok(wrap_angle(phi - delta))
}

/// The point `x ∈ ∂𝕊₊` with `w ∈ ε(x)`.
pub fn collapse_project(w: &LorentzVector) -> Result<SpherePoint> {
    Ok(boundary_point(collapse_angle(w)?))
}

/// [`collapse_project`] for a point of `S²_∞`.
pub fn collapse_project_point(p: &SpherePoint) -> Result<SpherePoint> {
    if !p.is_at_infinity() {
        return Err(Error::NotOnBoundarySphere);
    }
    collapse_project(&p.spatial())
}
