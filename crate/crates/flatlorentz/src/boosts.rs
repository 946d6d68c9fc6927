//! Affine boosts of `E`, their invariants and their projective extensions.
//!
//! The ambient frame is orthonormal for `x² + y² − z²`. Standard forms are
//! written in the null eigen-frame `(v₊, v₀, v₋)` of a boost, where it acts
//! as `diag(λ, 1, λ⁻¹)` plus the translation `μ` along the middle axis.

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};

use crate::lorentz::{self, det3, inner, lorentz_cross, quad, CausalClass, LorentzVector};
use crate::sphere::{
    frame_transport, point_arc_distance, sphere_distance, ConvexBody, ProjectiveMap, Segment,
    Semicircle, SpherePoint,
};
use crate::{par, tol, Error, Result};

/// Form-preservation tolerance for linear parts, relative to `‖A‖²`.
pub const FORM_TOL: f64 = 1e-9;

/// The isometry `x ↦ A x + b` of Minkowski space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineIsometry {
    linear: Matrix3<f64>,
    translation: Vector3<f64>,
}

impl AffineIsometry {
    pub fn new(linear: Matrix3<f64>, translation: Vector3<f64>) -> Result<Self> {
        let defect = lorentz::form_defect(&linear);
        if !(defect <= FORM_TOL) {
            return Err(Error::NotLorentz { defect });
        }
        Ok(AffineIsometry {
            linear,
            translation,
        })
    }

    pub fn identity() -> Self {
        AffineIsometry {
            linear: Matrix3::identity(),
            translation: Vector3::zeros(),
        }
    }

    pub fn linear_only(a: Matrix3<f64>) -> Result<Self> {
        Self::new(a, Vector3::zeros())
    }

    pub fn translation_by(b: Vector3<f64>) -> Self {
        AffineIsometry {
            linear: Matrix3::identity(),
            translation: b,
        }
    }

    pub fn linear(&self) -> &Matrix3<f64> {
        &self.linear
    }

    pub fn translation(&self) -> &Vector3<f64> {
        &self.translation
    }

    /// Sign of `det A`.
    pub fn orientation(&self) -> f64 {
        lorentz::lorentz_det(&self.linear).signum()
    }

    pub fn apply(&self, x: &Vector3<f64>) -> Vector3<f64> {
        self.linear * x + self.translation
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineIsometry) -> Self {
        AffineIsometry {
            linear: self.linear * other.linear,
            translation: self.linear * other.translation + self.translation,
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = lorentz::lorentz_inverse(&self.linear);
        AffineIsometry {
            linear: inv,
            translation: -(inv * self.translation),
        }
    }

    pub fn power(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc.compose(&base))
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &AffineIsometry) -> Self {
        h.compose(self).compose(&h.inverse())
    }

    /// The block matrix `(A b; 0 1)`.
    pub fn matrix4(&self) -> Matrix4<f64> {
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(&self.linear);
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(&self.translation);
        m
    }

    pub fn to_projective(&self) -> ProjectiveMap {
        ProjectiveMap::new(self.matrix4()).expect("affine isometries are invertible")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinearClass {
    PositiveHyperbolic,
    /// Real eigenvalues `−λ, −λ⁻¹, 1`.
    Hyperbolic,
    Parabolic,
    Elliptic,
    Identity,
    /// Orientation-reversing.
    Other,
}

/// Eigenvalue structure of a form-preserving matrix.
///
/// With `det A = 1` one eigenvalue is `1` and the other two satisfy
/// `λ + λ⁻¹ = tr A − 1`.
pub fn classify(a: &Matrix3<f64>) -> Result<LinearClass> {
    let defect = lorentz::form_defect(a);
    if !(defect <= FORM_TOL) {
        return Err(Error::NotLorentz { defect });
    }
    if (a - Matrix3::identity()).amax() <= tol::RANK {
        return Ok(LinearClass::Identity);
    }
    if lorentz::lorentz_det(a) < 0.0 {
        return Ok(LinearClass::Other);
    }
    let s = a.trace() - 1.0;
    let eps = tol::RANK * s.abs().max(1.0);
    Ok(if s > 2.0 + eps {
        LinearClass::PositiveHyperbolic
    } else if s < -2.0 - eps {
        LinearClass::Hyperbolic
    } else if (s - 2.0).abs() <= eps {
        LinearClass::Parabolic
    } else if (s + 2.0).abs() <= eps {
        if (a * a - Matrix3::identity()).amax() <= tol::RANK.sqrt() {
            LinearClass::Elliptic
        } else {
            LinearClass::Parabolic
        }
    } else {
        LinearClass::Elliptic
    })
}

fn top_eigenvalue(a: &Matrix3<f64>) -> f64 {
    let s = a.trace() - 1.0;
    0.5 * (s + (s * s - 4.0).max(0.0).sqrt())
}

/// Unit-Euclidean future-pointing kernel vector of `A − λI`, refined by power steps.
fn null_eigenvector(a: &Matrix3<f64>, lambda: f64) -> Vector3<f64> {
    let m = a - Matrix3::identity() * lambda;
    let rows = [
        m.row(0).transpose(),
        m.row(1).transpose(),
        m.row(2).transpose(),
    ];
    let mut v = [
        rows[0].cross(&rows[1]),
        rows[0].cross(&rows[2]),
        rows[1].cross(&rows[2]),
    ]
    .into_iter()
    .max_by(|x, y| x.norm_squared().total_cmp(&y.norm_squared()))
    .unwrap()
    .normalize();
    for _ in 0..2 {
        v = (a * v).normalize();
    }
    if v.z < 0.0 {
        -v
    } else {
        v
    }
}

/// Unit spacelike `v₀ ⟂ v₊, v₋` with `det3(v₊, v₀, v₋) > 0`.
pub fn neutral_vector(v_plus: &LorentzVector, v_minus: &LorentzVector) -> Result<LorentzVector> {
    let x = lorentz_cross(v_minus, v_plus);
    let q = quad(&x);
    if !(q > tol::NORM) {
        return Err(Error::DependentDirections);
    }
    let v0 = x / q.sqrt();
    Ok(if det3(v_plus, &v0, v_minus) > 0.0 {
        v0
    } else {
        -v0
    })
}

/// Eigen-data and invariants of an affine boost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostData {
    pub lambda: f64,
    pub v_plus: LorentzVector,
    pub v_minus: LorentzVector,
    pub v0: LorentzVector,
    pub axis_point: LorentzVector,
    pub mu: f64,
    /// Translation length `2 ln λ`.
    pub ell: f64,
    /// Set when `|μ| < tol::GEO`: the boost has a fixed line and does not act freely.
    pub non_proper: bool,
}

pub fn boost_data(g: &AffineIsometry) -> Result<BoostData> {
    let a = g.linear();
    if classify(a)? != LinearClass::PositiveHyperbolic {
        return Err(Error::NotBoost);
    }
    let lambda = top_eigenvalue(a);
    let v_plus = null_eigenvector(a, lambda);
    let v_minus = null_eigenvector(&lorentz::lorentz_inverse(a), lambda);
    let v0 = neutral_vector(&v_plus, &v_minus)?;
    let b = g.translation();
    let mu = inner(b, &v0);
    let n = Matrix3::from_columns(&[v_plus, v0, v_minus]);
    let c = n.try_inverse().ok_or(Error::DependentDirections)? * b;
    let alpha = -c[0] / (lambda - 1.0);
    let beta = c[2] * lambda / (lambda - 1.0);
    Ok(BoostData {
        lambda,
        v_plus,
        v_minus,
        v0,
        axis_point: v_plus * alpha + v_minus * beta,
        mu,
        ell: 2.0 * lambda.ln(),
        non_proper: mu.abs() < tol::GEO,
    })
}

pub fn margulis_invariant(g: &AffineIsometry) -> Result<f64> {
    Ok(boost_data(g)?.mu)
}

/// The boost with eigenvalues `λ, 1, λ⁻¹` on `v₊, v₀, v₋` whose axis passes
/// through `base` and which translates it by `μ v₀`.
pub fn affine_boost(
    lambda: f64,
    mu: f64,
    v_plus: &LorentzVector,
    v_minus: &LorentzVector,
    base: &Vector3<f64>,
) -> Result<AffineIsometry> {
    for v in [v_plus, v_minus] {
        if lorentz::causal_class(v) != CausalClass::FutureNull {
            return Err(Error::NotNull);
        }
    }
    if !(lambda > 1.0) {
        return Err(Error::NotBoost);
    }
    let v0 = neutral_vector(v_plus, v_minus)?;
    let n = Matrix3::from_columns(&[*v_plus, v0, *v_minus]);
    let d = Matrix3::from_diagonal(&Vector3::new(lambda, 1.0, 1.0 / lambda));
    let a = n * d * n.try_inverse().ok_or(Error::DependentDirections)?;
    let b = base + v0 * mu - a * base;
    AffineIsometry::new(a, b)
}

/// The matrix `g_{λ,k}` of the standard boost in null-frame coordinates.
pub fn standard_matrix(lambda: f64, k: f64) -> Matrix4<f64> {
    Matrix4::new(
        lambda, 0.0, 0.0, 0.0, //
        0.0, 1.0, 0.0, k, //
        0.0, 0.0, 1.0 / lambda, 0.0, //
        0.0, 0.0, 0.0, 1.0,
    )
}

/// The six fixed points of a projective boost on `S²_∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SixPoints {
    pub plus: SpherePoint,
    pub plus_anti: SpherePoint,
    pub zero: SpherePoint,
    pub zero_anti: SpherePoint,
    pub minus: SpherePoint,
    pub minus_anti: SpherePoint,
}

impl SixPoints {
    fn from_dirs(p: Vector4<f64>, z: Vector4<f64>, m: Vector4<f64>) -> Result<Self> {
        let (plus, zero, minus) = (
            SpherePoint::from_vector(p)?,
            SpherePoint::from_vector(z)?,
            SpherePoint::from_vector(m)?,
        );
        Ok(SixPoints {
            plus,
            plus_anti: plus.antipode(),
            zero,
            zero_anti: zero.antipode(),
            minus,
            minus_anti: minus.antipode(),
        })
    }

    pub fn all(&self) -> [SpherePoint; 6] {
        [
            self.plus,
            self.plus_anti,
            self.zero,
            self.zero_anti,
            self.minus,
            self.minus_anti,
        ]
    }
}

/// A boost extended to `S³`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveBoost {
    pub map: ProjectiveMap,
    pub fixed: SixPoints,
    /// `x⁺ x⁰ x⁺₋`.
    pub eta_plus: Semicircle,
    /// `x⁻ x⁰₋ x⁻₋`.
    pub eta_minus: Semicircle,
    /// Covector whose zero set is the weak-stable hyperplane `span(x⁻ ∪ σ)`.
    pub stable_normal: Vector4<f64>,
    /// Covector whose zero set is the weak-unstable hyperplane `span(x⁺ ∪ σ)`.
    pub unstable_normal: Vector4<f64>,
}

impl ProjectiveBoost {
    /// The boost `g_{λ,k}` in standard coordinates.
    pub fn standard(lambda: f64, k: f64) -> Result<Self> {
        let map = ProjectiveMap::new(standard_matrix(lambda, k))?;
        let fixed = SixPoints::from_dirs(Vector4::x(), Vector4::y(), Vector4::z())?;
        Ok(ProjectiveBoost {
            map,
            eta_plus: Semicircle::new(fixed.plus, fixed.zero)?,
            eta_minus: Semicircle::new(fixed.minus, fixed.zero_anti)?,
            fixed,
            stable_normal: Vector4::x(),
            unstable_normal: Vector4::z(),
        })
    }

    /// Signed side of `p` relative to the weak-stable hyperplane.
    pub fn stable_side(&self, p: &SpherePoint) -> f64 {
        self.stable_normal.dot(p.coords())
    }
}

fn dir4(v: &Vector3<f64>) -> Vector4<f64> {
    Vector4::new(v.x, v.y, v.z, 0.0)
}

pub fn extend_to_sphere(g: &AffineIsometry) -> Result<ProjectiveBoost> {
    let d = boost_data(g)?;
    let fixed = SixPoints::from_dirs(dir4(&d.v_plus), dir4(&d.v0), dir4(&d.v_minus))?;
    let sf = to_standard_form(g)?;
    let frame = sf.affine_frame;
    Ok(ProjectiveBoost {
        map: g.to_projective(),
        eta_plus: Semicircle::new(fixed.plus, fixed.zero)?,
        eta_minus: Semicircle::new(fixed.minus, fixed.zero_anti)?,
        fixed,
        stable_normal: frame.row(0).transpose().normalize(),
        unstable_normal: frame.row(2).transpose().normalize(),
    })
}

/// Conjugation of a boost into standard coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardForm {
    /// `h` with `h(a) = e₁, h((ν)) = e₂, h(r) = e₃, h(p) = e₄`.
    pub h: ProjectiveMap,
    /// The affine representative of `h`: last row `(0, 0, 0, 1)` and `Dh(v₀) = e₂`.
    pub affine_frame: Matrix4<f64>,
    pub lambda: f64,
    pub mu: f64,
}

impl StandardForm {
    /// `h⁻¹ ∘ g_{λ,μ} ∘ h`, which reproduces the original boost.
    pub fn reconstruct(&self) -> Matrix4<f64> {
        let inv = self.affine_frame.try_inverse().expect("frame is invertible");
        inv * standard_matrix(self.lambda, self.mu) * self.affine_frame
    }
}

pub fn to_standard_form(g: &AffineIsometry) -> Result<StandardForm> {
    let d = boost_data(g)?;
    let p = d.axis_point;
    let reps = [
        dir4(&d.v_plus),
        dir4(&d.v0),
        dir4(&d.v_minus),
        Vector4::new(p.x, p.y, p.z, 1.0),
    ];
    let pts = [
        SpherePoint::from_vector(reps[0])?,
        SpherePoint::from_vector(reps[1])?,
        SpherePoint::from_vector(reps[2])?,
        SpherePoint::from_vector(reps[3])?,
    ];
    let h0 = frame_transport([&pts[0], &pts[1], &pts[2], &pts[3]])?;
    let m = h0.matrix();
    let scale = Vector4::from_fn(|j, _| 1.0 / (m * reps[j])[j]);
    let frame = Matrix4::from_diagonal(&scale) * m;
    Ok(StandardForm {
        h: ProjectiveMap::new(frame)?,
        affine_frame: frame,
        lambda: d.lambda,
        mu: d.mu,
    })
}

/// Limit of `g_{λₙ,kₙ}(K)` selected from the position of `K` relative to `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PredictedLimit {
    /// `η₊ = e₁ e₂ e₁₋`, when `K` meets both sides of the stable sphere.
    Eta,
    /// `{e₂}`, when `K` lies on the stable sphere.
    E2,
    /// `{e₁}`, when `K` lies on the side `x > 0`.
    E1,
    /// `{e₁₋}`, when `K` lies on the side `x < 0`.
    E1Anti,
    /// The half-arc `e₁ e₂`, when `K` touches the stable sphere from `x > 0`.
    UpperHalf,
    /// The half-arc `e₁₋ e₂`, when `K` touches the stable sphere from `x < 0`.
    LowerHalf,
}

impl PredictedLimit {
    pub fn label(&self) -> &'static str {
        match self {
            PredictedLimit::Eta => "eta+",
            PredictedLimit::E2 => "e2",
            PredictedLimit::E1 => "e1",
            PredictedLimit::E1Anti => "e1-",
            PredictedLimit::UpperHalf => "e1e2",
            PredictedLimit::LowerHalf => "e1-e2",
        }
    }

    /// Sides of `x = 0` met by the sample `pts` (standard coordinates).
    pub fn select(pts: &[SpherePoint]) -> Self {
        let side = |p: &SpherePoint| {
            let x = p.coords().x;
            if x > tol::GEO {
                1
            } else if x < -tol::GEO {
                -1
            } else {
                0
            }
        };
        let (mut pos, mut neg, mut zero) = (false, false, false);
        for p in pts {
            match side(p) {
                1 => pos = true,
                -1 => neg = true,
                _ => zero = true,
            }
        }
        match (pos, neg, zero) {
            (true, true, _) => PredictedLimit::Eta,
            (true, false, false) => PredictedLimit::E1,
            (false, true, false) => PredictedLimit::E1Anti,
            (true, false, true) => PredictedLimit::UpperHalf,
            (false, true, true) => PredictedLimit::LowerHalf,
            (false, false, _) => PredictedLimit::E2,
        }
    }

    fn e(i: usize) -> SpherePoint {
        SpherePoint::basis(i)
    }

    pub fn distance_to(&self, p: &SpherePoint) -> f64 {
        let e = Self::e;
        match self {
            PredictedLimit::Eta => Semicircle::new(e(0), e(1)).unwrap().distance_to(p),
            PredictedLimit::E2 => sphere_distance(p, &e(1)),
            PredictedLimit::E1 => sphere_distance(p, &e(0)),
            PredictedLimit::E1Anti => sphere_distance(p, &e(0).antipode()),
            PredictedLimit::UpperHalf => point_arc_distance(p, &e(0), &e(1)),
            PredictedLimit::LowerHalf => point_arc_distance(p, &e(0).antipode(), &e(1)),
        }
    }

    pub fn samples(&self, n: usize) -> Vec<SpherePoint> {
        let e = Self::e;
        match self {
            PredictedLimit::Eta => Semicircle::new(e(0), e(1)).unwrap().sample(n),
            PredictedLimit::E2 => vec![e(1)],
            PredictedLimit::E1 => vec![e(0)],
            PredictedLimit::E1Anti => vec![e(0).antipode()],
            PredictedLimit::UpperHalf => Segment::new(e(0), e(1)).unwrap().sample(n / 2),
            PredictedLimit::LowerHalf => Segment::new(e(0).antipode(), e(1)).unwrap().sample(n / 2),
        }
    }
}

/// Resolution of the convergence experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentOptions {
    /// Maximum spacing of transported arc samples, in radians.
    pub step: f64,
    /// Samples on the predicted limit for the reverse directed distance.
    pub limit_samples: usize,
    /// Keep a coarse copy of each transported set.
    pub keep_images: bool,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        ExperimentOptions {
            step: 1e-3,
            limit_samples: 512,
            keep_images: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStep {
    pub lambda: f64,
    pub k: f64,
    /// Hausdorff distance from the transported set to the predicted limit.
    pub distance: f64,
    pub image: Option<Vec<SpherePoint>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRun {
    pub limit: PredictedLimit,
    /// Distance from `K` to the repelling arc `η₋`.
    pub repeller_distance: f64,
    pub steps: Vec<ConvergenceStep>,
}

/// Image under `m` of the arc `[p, q]`, subdivided until consecutive
/// image points are at most `step` apart.
fn transported_arc(m: &Matrix4<f64>, seg: &Segment, step: f64) -> Vec<SpherePoint> {
    let image = |s: f64| SpherePoint::from_vector(m * seg.at(s).coords()).expect("invertible");
    let mut out = vec![image(0.0)];
    let mut stack = vec![(0.0, 1.0, image(1.0), 0u32)];
    let mut left = out[0];
    while let Some((s0, s1, right, depth)) = stack.pop() {
        if sphere_distance(&left, &right) > step && depth < 64 {
            let sm = 0.5 * (s0 + s1);
            let mid = image(sm);
            stack.push((sm, s1, right, depth + 1));
            stack.push((s0, sm, mid, depth + 1));
        } else {
            out.push(right);
            left = right;
        }
    }
    out
}

/// Every `k`-th point such that consecutive kept points are at most `max` apart.
fn decimate(chain: &[SpherePoint], max: f64) -> Vec<SpherePoint> {
    let mut out = vec![chain[0]];
    let mut run = 0.0;
    for w in chain.windows(2) {
        let d = sphere_distance(&w[0], &w[1]);
        if run + d > max {
            out.push(w[0]);
            run = 0.0;
        }
        run += d;
    }
    out.push(*chain.last().unwrap());
    out.dedup();
    out
}

fn skeleton(k: &ConvexBody) -> Vec<Segment> {
    let v = k.vertices();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if let Ok(s) = Segment::new(v[i], v[j]) {
                out.push(s);
            }
        }
    }
    out
}

fn chain_distance(x: &SpherePoint, chains: &[Vec<SpherePoint>]) -> f64 {
    chains
        .iter()
        .flat_map(|c| {
            if c.len() == 1 {
                vec![sphere_distance(x, &c[0])]
            } else {
                c.windows(2).map(|w| point_arc_distance(x, &w[0], &w[1])).collect()
            }
        })
        .fold(f64::INFINITY, f64::min)
}

/// Transport `K` (given in standard coordinates) by `g_{λ,k}` along a
/// schedule and measure the Hausdorff distance to the predicted limit.
///
/// The image of `K` is represented by the images of all segments between
/// its vertices. Projective maps send segments to segments, so each image
/// arc is sampled adaptively in the image at spacing `opts.step`, and
/// distances to the image are measured against exact arcs.
pub fn boost_convergence_experiment(
    schedule: &[(f64, f64)],
    k: &ConvexBody,
    opts: &ExperimentOptions,
) -> Result<ConvergenceRun> {
    if k.vertices().iter().any(|p| p.t() < -tol::GEO) {
        return Err(Error::OutsideHemisphere);
    }
    let eta_minus = Semicircle::new(SpherePoint::basis(2), SpherePoint::basis(1).antipode())?;
    let arcs = skeleton(k);
    let mut repeller_distance = k
        .vertices()
        .iter()
        .map(|p| eta_minus.distance_to(p))
        .fold(f64::INFINITY, f64::min);
    for s in &arcs {
        for p in s.sample(64) {
            repeller_distance = repeller_distance.min(eta_minus.distance_to(&p));
        }
    }
    if repeller_distance <= tol::GEO {
        return Err(Error::RepellingArcHit {
            distance: repeller_distance,
        });
    }
    let limit = PredictedLimit::select(k.vertices());
    let targets = limit.samples(opts.limit_samples);
    let steps = par::map(schedule, |&(lambda, kk)| {
        let m = standard_matrix(lambda, kk);
        let mut fine: Vec<Vec<SpherePoint>> = arcs
            .iter()
            .map(|s| transported_arc(&m, s, opts.step))
            .collect();
        fine.extend(k.vertices().iter().map(|p| {
            vec![SpherePoint::from_vector(m * p.coords()).expect("invertible")]
        }));
        let forward = fine
            .iter()
            .flatten()
            .map(|p| limit.distance_to(p))
            .fold(0.0, f64::max);
        let coarse: Vec<Vec<SpherePoint>> = fine.iter().map(|c| decimate(c, 0.25)).collect();
        let backward = targets
            .iter()
            .map(|t| chain_distance(t, &coarse))
            .fold(0.0, f64::max);
        ConvergenceStep {
            lambda,
            k: kk,
            distance: forward.max(backward),
            image: opts.keep_images.then(|| coarse.concat()),
        }
    });
    Ok(ConvergenceRun {
        limit,
        repeller_distance,
        steps,
    })
}

/// `λₙ = λⁿ, kₙ = n μ` for `n = 1..=steps`: the powers of `g_{λ,μ}`.
pub fn power_schedule(lambda: f64, mu: f64, steps: usize) -> Vec<(f64, f64)> {
    (1..=steps)
        .map(|n| (lambda.powi(n as i32), n as f64 * mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn xz_boost(b: Vector3<f64>) -> AffineIsometry {
        AffineIsometry::new(lorentz::boost_x(1.0), b).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(&lorentz::boost_x(1.0)).unwrap(),
            LinearClass::PositiveHyperbolic
        );
        assert_eq!(classify(&Matrix3::identity()).unwrap(), LinearClass::Identity);
        assert_eq!(
            classify(&lorentz::rotation_z(0.3)).unwrap(),
            LinearClass::Elliptic
        );
        let n = Matrix3::from_columns(&[
            Vector3::new(1.0, 0.0, 1.0),
            Vector3::new(0.0, 1.0, 0.0),
            Vector3::new(-1.0, 0.0, 1.0),
        ]);
        let d = Matrix3::from_diagonal(&Vector3::new(-E, 1.0, -1.0 / E));
        let a = n * d * n.try_inverse().unwrap();
        assert_eq!(classify(&a).unwrap(), LinearClass::Hyperbolic);
        assert!(matches!(
            classify(&Matrix3::from_diagonal_element(2.0)),
            Err(Error::NotLorentz { .. })
        ));
    }

    #[test]
    fn boost_data_of_xz_rotation() {
        let d = boost_data(&xz_boost(Vector3::new(0.0, 2.0, 0.0))).unwrap();
        assert!((d.lambda - E).abs() < 1e-14);
        assert!((d.v0 - Vector3::y()).norm() < 1e-14);
        assert!((d.mu - 2.0).abs() < 1e-14);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((d.v_plus - Vector3::new(s, 0.0, s)).norm() < 1e-14);
        assert!((d.v_minus - Vector3::new(-s, 0.0, s)).norm() < 1e-14);
        let d = boost_data(&xz_boost(Vector3::new(1.0, 2.0, 3.0))).unwrap();
        assert!((d.mu - 2.0).abs() < 1e-14);
        let g = xz_boost(Vector3::new(1.0, 2.0, 3.0));
        let p = d.axis_point;
        assert!((g.apply(&p) - p - d.v0 * d.mu).norm() < 1e-12);
    }

    #[test]
    fn standard_form_in_null_frame_has_mu_alpha() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let g = affine_boost(
            2.0,
            0.75,
            &Vector3::new(s, 0.0, s),
            &Vector3::new(-s, 0.0, s),
            &Vector3::zeros(),
        )
        .unwrap();
        assert!((margulis_invariant(&g).unwrap() - 0.75).abs() < 1e-14);
    }

    #[test]
    fn standard_boost_fixed_points_and_arcs() {
        let b = ProjectiveBoost::standard(2.0, 1.0).unwrap();
        for p in b.fixed.all() {
            assert!(sphere_distance(&b.map.apply(&p), &p) < 1e-15);
        }
        assert_eq!(b.fixed.plus, SpherePoint::basis(0));
        assert_eq!(b.fixed.minus_anti, SpherePoint::basis(2).antipode());
        let mid = b.eta_plus.at(std::f64::consts::FRAC_PI_2);
        assert!(sphere_distance(&mid, &SpherePoint::basis(1)) < 1e-15);
    }

    #[test]
    fn selector_cases() {
        let p = |x: f64, t: f64| SpherePoint::new(x, 0.3, 0.1, t).unwrap();
        assert_eq!(PredictedLimit::select(&[p(0.5, 1.0), p(-0.5, 1.0)]), PredictedLimit::Eta);
        assert_eq!(PredictedLimit::select(&[p(0.0, 1.0)]), PredictedLimit::E2);
        assert_eq!(PredictedLimit::select(&[p(0.5, 1.0)]), PredictedLimit::E1);
        assert_eq!(PredictedLimit::select(&[p(-0.5, 1.0)]), PredictedLimit::E1Anti);
        assert_eq!(
            PredictedLimit::select(&[p(0.5, 1.0), p(0.0, 1.0)]),
            PredictedLimit::UpperHalf
        );
    }
}
