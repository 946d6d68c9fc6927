//! The projective 3-sphere `S³` of rays in `ℝ⁴`.
//!
//! A point `((x:y:z:t))` is stored as its unit representative. The affine
//! point `(x, y, z)` of `E` is `((x:y:z:1))`; directions live at `t = 0`.

use nalgebra::{Matrix4, Vector3, Vector4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{par, tol, Error, Result};

/// A point of `S³`, stored as a unit 4-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint(Vector4<f64>);

impl SpherePoint {
    pub fn new(x: f64, y: f64, z: f64, t: f64) -> Result<Self> {
        Self::from_vector(Vector4::new(x, y, z, t))
    }

    /// Positive ray through `v`.
    pub fn from_vector(v: Vector4<f64>) -> Result<Self> {
        let n = v.norm();
        if !(n > tol::NORM) || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(SpherePoint(v / n))
    }

    /// The affine point `(x, y, z)` of `E`, i.e. `((x:y:z:1))`.
    pub fn affine(p: &Vector3<f64>) -> Self {
        SpherePoint(Vector4::new(p.x, p.y, p.z, 1.0).normalize())
    }

    /// The direction `((v:0))` on `S²_∞`.
    pub fn direction(v: &Vector3<f64>) -> Result<Self> {
        Self::from_vector(Vector4::new(v.x, v.y, v.z, 0.0))
    }

    /// Standard basis point `e_{i+1}` for `i` in `0..4`.
    pub fn basis(i: usize) -> Self {
        let mut v = Vector4::zeros();
        v[i] = 1.0;
        SpherePoint(v)
    }

    /// The origin `O = e₄` of `E`.
    pub fn origin() -> Self {
        Self::basis(3)
    }

    pub fn coords(&self) -> &Vector4<f64> {
        &self.0
    }

    /// Spatial part `(x, y, z)` of the unit representative.
    pub fn spatial(&self) -> Vector3<f64> {
        self.0.xyz()
    }

    pub fn t(&self) -> f64 {
        self.0.w
    }

    /// True when the point lies on `S²_∞` within `tol::GEO`.
    pub fn is_at_infinity(&self) -> bool {
        self.0.w.abs() < tol::GEO
    }

    /// Affine coordinates of a point with `t > 0`.
    pub fn to_affine(&self) -> Option<Vector3<f64>> {
        (self.0.w > tol::NORM).then(|| self.0.xyz() / self.0.w)
    }

    pub fn antipode(&self) -> Self {
        SpherePoint(-self.0)
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn distance(&self, other: &SpherePoint) -> f64 {
        sphere_distance(self, other)
    }
}

pub fn antipode(p: &SpherePoint) -> SpherePoint {
    p.antipode()
}

/// Riemannian distance on `S³`.
///
/// Equal to `arccos(p·q)`, evaluated as `2·atan2(|p−q|, |p+q|)` so that
/// nearly equal and nearly antipodal pairs keep full precision.
pub fn sphere_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    2.0 * (p.0 - q.0).norm().atan2((p.0 + q.0).norm())
}

fn chord_to_angle(chord: f64) -> f64 {
    2.0 * (0.5 * chord).min(1.0).asin()
}

/// Distance from `x` to the arc `[p, q]` of angle less than `π`.
///
/// Points `p ≈ q` are treated as a single point.
pub fn point_arc_distance(x: &SpherePoint, p: &SpherePoint, q: &SpherePoint) -> f64 {
    let a = p.0;
    let b = q.0 - a * q.0.dot(&a);
    let bn = b.norm();
    if bn < tol::NORM {
        return sphere_distance(x, p);
    }
    let b = b / bn;
    let theta = q.0.dot(&b).atan2(q.0.dot(&a));
    let (alpha, beta) = (x.0.dot(&a), x.0.dot(&b));
    let phi = beta.atan2(alpha);
    if (0.0..=theta).contains(&phi) && alpha.hypot(beta) > 0.0 {
        let perp = (x.0 - a * alpha - b * beta).norm();
        perp.atan2(alpha.hypot(beta))
    } else {
        sphere_distance(x, p).min(sphere_distance(x, q))
    }
}

/// The unique closed segment from `p` to `q` avoiding `p₋` and `q₋`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    p: SpherePoint,
    q: SpherePoint,
    length: f64,
}

impl Segment {
    pub fn new(p: SpherePoint, q: SpherePoint) -> Result<Self> {
        let length = sphere_distance(&p, &q);
        if length < tol::GEO || length > std::f64::consts::PI - tol::GEO {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { p, q, length })
    }

    pub fn start(&self) -> &SpherePoint {
        &self.p
    }

    pub fn end(&self) -> &SpherePoint {
        &self.q
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Point at fraction `s ∈ [0, 1]` of the arc length.
    pub fn at(&self, s: f64) -> SpherePoint {
        let th = self.length;
        let (c1, c2) = (((1.0 - s) * th).sin(), (s * th).sin());
        SpherePoint((self.p.0 * c1 + self.q.0 * c2).normalize())
    }

    pub fn midpoint(&self) -> SpherePoint {
        self.at(0.5)
    }

    /// `n ≥ 2` equally spaced samples including both endpoints.
    pub fn sample(&self, n: usize) -> Vec<SpherePoint> {
        let n = n.max(2);
        (0..n).map(|k| self.at(k as f64 / (n - 1) as f64)).collect()
    }

    pub fn distance_to(&self, x: &SpherePoint) -> f64 {
        point_arc_distance(x, &self.p, &self.q)
    }

    pub fn antipode(&self) -> Segment {
        Segment {
            p: self.p.antipode(),
            q: self.q.antipode(),
            length: self.length,
        }
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            p: self.q,
            q: self.p,
            length: self.length,
        }
    }
}

pub fn segment(p: SpherePoint, q: SpherePoint) -> Result<Segment> {
    Segment::new(p, q)
}

pub fn sample_segment(s: &Segment, n: usize) -> Vec<SpherePoint> {
    s.sample(n)
}

/// Closed great semicircle from `start` through `mid` to `start₋`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Semicircle {
    start: SpherePoint,
    mid: SpherePoint,
}

impl Semicircle {
    /// `mid` is orthogonalized against `start`.
    pub fn new(start: SpherePoint, mid: SpherePoint) -> Result<Self> {
        let m = mid.0 - start.0 * mid.0.dot(&start.0);
        let mid = SpherePoint::from_vector(m)?;
        Ok(Semicircle { start, mid })
    }

    pub fn start(&self) -> &SpherePoint {
        &self.start
    }

    pub fn mid(&self) -> &SpherePoint {
        &self.mid
    }

    pub fn end(&self) -> SpherePoint {
        self.start.antipode()
    }

    /// Point at angle `phi ∈ [0, π]` from the start.
    pub fn at(&self, phi: f64) -> SpherePoint {
        SpherePoint((self.start.0 * phi.cos() + self.mid.0 * phi.sin()).normalize())
    }

    pub fn sample(&self, n: usize) -> Vec<SpherePoint> {
        let n = n.max(2);
        (0..n)
            .map(|k| self.at(std::f64::consts::PI * k as f64 / (n - 1) as f64))
            .collect()
    }

    pub fn distance_to(&self, x: &SpherePoint) -> f64 {
        let (alpha, beta) = (x.0.dot(&self.start.0), x.0.dot(&self.mid.0));
        if beta >= 0.0 && alpha.hypot(beta) > 0.0 {
            let perp = (x.0 - self.start.0 * alpha - self.mid.0 * beta).norm();
            perp.atan2(alpha.hypot(beta))
        } else {
            sphere_distance(x, &self.start).min(sphere_distance(x, &self.end()))
        }
    }
}

/// Normalization map of `𝓗 = {t ≥ 0}` onto the closed unit ball.
pub fn normalize_to_ball(p: &SpherePoint) -> Result<Vector3<f64>> {
    let t = p.t();
    if t < -tol::NORM {
        return Err(Error::OutsideHemisphere);
    }
    if t <= tol::NORM {
        return Ok(p.spatial().normalize());
    }
    // (x,y,z,t) unit  =>  (x/t, y/t, z/t)/sqrt(|x/t|^2 + 1) = (x, y, z)
    Ok(p.spatial())
}

/// Inverse of [`normalize_to_ball`] on the closed ball.
pub fn from_ball(b: &Vector3<f64>) -> Result<SpherePoint> {
    let r2 = b.norm_squared();
    if r2 > 1.0 + tol::GEO {
        return Err(Error::OutsideHemisphere);
    }
    let t = (1.0 - r2).max(0.0).sqrt();
    SpherePoint::new(b.x, b.y, b.z, t)
}

fn canonical(m: &Matrix4<f64>) -> Result<Matrix4<f64>> {
    let s = m.amax();
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::Singular);
    }
    Ok(m / s)
}

fn sorted_svd(m: &Matrix4<f64>) -> (Matrix4<f64>, [f64; 4], Matrix4<f64>) {
    let svd = m.svd(true, true);
    let (u, vt) = (svd.u.unwrap(), svd.v_t.unwrap());
    let mut idx = [0usize, 1, 2, 3];
    idx.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let mut us = Matrix4::zeros();
    let mut vs = Matrix4::zeros();
    let mut s = [0.0; 4];
    for (k, &i) in idx.iter().enumerate() {
        us.set_column(k, &u.column(i));
        vs.set_row(k, &vt.row(i));
        s[k] = svd.singular_values[i];
    }
    (us, s, vs)
}

/// An element of `SL±(4, ℝ)` acting on `S³`, stored with max-entry scaling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectiveMap {
    m: Matrix4<f64>,
}

impl ProjectiveMap {
    pub fn new(m: Matrix4<f64>) -> Result<Self> {
        let m = canonical(&m)?;
        let (_, s, _) = sorted_svd(&m);
        if !(s[3] > f64::EPSILON * s[0]) {
            return Err(Error::Singular);
        }
        Ok(ProjectiveMap { m })
    }

    pub fn identity() -> Self {
        ProjectiveMap {
            m: Matrix4::identity(),
        }
    }

    /// The affine map `x ↦ A x + b` extended to `S³`.
    pub fn from_affine(a: &nalgebra::Matrix3<f64>, b: &Vector3<f64>) -> Result<Self> {
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(a);
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(b);
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        SpherePoint((self.m * p.0).normalize())
    }

    pub fn apply_all(&self, ps: &[SpherePoint]) -> Vec<SpherePoint> {
        ps.iter().map(|p| self.apply(p)).collect()
    }

    pub fn inverse(&self) -> Self {
        let inv = self.m.try_inverse().expect("nonsingular by construction");
        ProjectiveMap {
            m: canonical(&inv).expect("nonzero"),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ProjectiveMap) -> Self {
        ProjectiveMap {
            m: canonical(&(self.m * other.m)).expect("nonzero"),
        }
    }

    /// `‖M‖·‖M⁻¹‖` in the operator 2-norm, a bi-Lipschitz bound for the action.
    pub fn condition(&self) -> f64 {
        let (_, s, _) = sorted_svd(&self.m);
        s[0] / s[3]
    }
}

pub fn apply(g: &ProjectiveMap, p: &SpherePoint) -> SpherePoint {
    g.apply(p)
}

/// A possibly singular linear map acting on `S³` away from its kernel sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveEndomorphism {
    m: Matrix4<f64>,
    rank: usize,
    kernel: Vec<Vector4<f64>>,
    image: Vec<Vector4<f64>>,
    sigma_max: f64,
}

impl ProjectiveEndomorphism {
    pub fn new(m: Matrix4<f64>) -> Result<Self> {
        let m = canonical(&m)?;
        let (u, s, vt) = sorted_svd(&m);
        let rank = s.iter().filter(|&&x| x > tol::RANK * s[0]).count();
        let image = (0..rank).map(|k| u.column(k).into_owned()).collect();
        let kernel = (rank..4).map(|k| vt.row(k).transpose()).collect();
        Ok(ProjectiveEndomorphism {
            m,
            rank,
            kernel,
            image,
            sigma_max: s[0],
        })
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Orthonormal basis of the kernel `N`.
    pub fn kernel(&self) -> &[Vector4<f64>] {
        &self.kernel
    }

    /// Orthonormal basis of the image.
    pub fn image(&self) -> &[Vector4<f64>] {
        &self.image
    }

    pub fn apply(&self, p: &SpherePoint) -> Result<SpherePoint> {
        let w = self.m * p.0;
        if w.norm() <= tol::RANK * self.sigma_max {
            return Err(Error::Undefined);
        }
        Ok(SpherePoint(w.normalize()))
    }
}

pub fn apply_endo(l: &ProjectiveEndomorphism, p: &SpherePoint) -> Result<SpherePoint> {
    l.apply(p)
}

/// The projective map sending `v[j]` to `e_{j+1}`.
pub fn frame_transport(v: [&SpherePoint; 4]) -> Result<ProjectiveMap> {
    let m = Matrix4::from_columns(&[v[0].0, v[1].0, v[2].0, v[3].0]);
    let det = m.determinant();
    if det.abs() <= tol::RANK {
        return Err(Error::DegenerateFrame { det });
    }
    let inv = m.try_inverse().ok_or(Error::DegenerateFrame { det })?;
    Ok(ProjectiveMap {
        m: canonical(&inv)?,
    })
}

/// `max_{a∈A} min_{b∈B} d(a, b)`.
pub fn directed_hausdorff(a: &[SpherePoint], b: &[SpherePoint]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let nearest = par::map(a, |p| nearest_chord(p, b));
    Ok(chord_to_angle(nearest.into_iter().fold(0.0, f64::max)))
}

fn nearest_chord(p: &SpherePoint, b: &[SpherePoint]) -> f64 {
    b.iter()
        .map(|q| (p.0 - q.0).norm_squared())
        .fold(f64::INFINITY, f64::min)
        .sqrt()
}

/// Symmetric Hausdorff distance between finite clouds.
pub fn hausdorff_distance(a: &[SpherePoint], b: &[SpherePoint]) -> Result<f64> {
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}

/// Infimum distance `min_{a, b} d(a, b)` between finite clouds.
pub fn min_distance(a: &[SpherePoint], b: &[SpherePoint]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let nearest = par::map(a, |p| nearest_chord(p, b));
    Ok(chord_to_angle(nearest.into_iter().fold(f64::INFINITY, f64::min)))
}

/// Outcome of the hemisphere-witness search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Convexity {
    /// Every point satisfies `u·vᵢ ≥ tol::HEMI`.
    Proper { witness: SpherePoint },
    /// No witness found; the pair with the most negative dot product.
    NotProper { pair: (usize, usize) },
}

impl Convexity {
    pub fn is_proper(&self) -> bool {
        matches!(self, Convexity::Proper { .. })
    }
}

const PERCEPTRON_ITERS: usize = 20_000;
const GRID_DIRECTIONS: usize = 4096;

fn margin(u: &Vector4<f64>, pts: &[SpherePoint]) -> (f64, usize) {
    pts.iter()
        .enumerate()
        .map(|(i, p)| (u.dot(&p.0), i))
        .fold((f64::INFINITY, 0), |acc, x| if x.0 < acc.0 { x } else { acc })
}

/// Searches for a direction `u` with `u·vᵢ ≥ tol::HEMI` for every point.
///
/// Starts at the normalized mean, corrects towards the worst point until
/// the margin is met, and finally scans a fixed pseudo-random grid of
/// directions (seeded, so the answer is reproducible).
pub fn is_properly_convex(pts: &[SpherePoint]) -> Convexity {
    if pts.is_empty() {
        return Convexity::Proper {
            witness: SpherePoint::origin(),
        };
    }
    let mean: Vector4<f64> = pts.iter().map(|p| p.0).sum();
    let mut u = if mean.norm() > tol::NORM {
        mean.normalize()
    } else {
        pts[0].0
    };
    let mut acc = u;
    for _ in 0..PERCEPTRON_ITERS {
        let (m, worst) = margin(&u, pts);
        if m >= tol::HEMI {
            return Convexity::Proper {
                witness: SpherePoint(u),
            };
        }
        acc += pts[worst].0;
        if acc.norm() < tol::NORM {
            break;
        }
        u = acc.normalize();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut best = (f64::NEG_INFINITY, u);
    for _ in 0..GRID_DIRECTIONS {
        let v = Vector4::from_fn(|_, _| rng.random::<f64>() * 2.0 - 1.0);
        if v.norm() < 1e-3 {
            continue;
        }
        let v = v.normalize();
        let (m, _) = margin(&v, pts);
        if m > best.0 {
            best = (m, v);
        }
    }
    if best.0 >= tol::HEMI {
        return Convexity::Proper {
            witness: SpherePoint(best.1),
        };
    }
    let mut pair = (0, 0);
    let mut lowest = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i..pts.len() {
            let d = pts[i].dot(&pts[j]);
            if d < lowest {
                lowest = d;
                pair = (i, j);
            }
        }
    }
    Convexity::NotProper { pair }
}

/// A finite sample of a properly convex set together with its hemisphere witness.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexBody {
    vertices: Vec<SpherePoint>,
    witness: SpherePoint,
}

impl ConvexBody {
    pub fn new(vertices: Vec<SpherePoint>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySet);
        }
        match is_properly_convex(&vertices) {
            Convexity::Proper { witness } => Ok(ConvexBody { vertices, witness }),
            Convexity::NotProper { pair } => Err(Error::NotProperlyConvex(pair.0, pair.1)),
        }
    }

    pub fn vertices(&self) -> &[SpherePoint] {
        &self.vertices
    }

    pub fn witness(&self) -> &SpherePoint {
        &self.witness
    }

    pub fn transform(&self, g: &ProjectiveMap) -> Result<Self> {
        ConvexBody::new(g.apply_all(&self.vertices))
    }
}

/// The join of two bodies: their vertices plus `interior` samples on every
/// connecting segment (endpoints excluded).
pub fn join(a: &ConvexBody, b: &ConvexBody, interior: usize) -> Result<ConvexBody> {
    let far = std::f64::consts::PI - tol::GEO;
    for (i, p) in a.vertices.iter().enumerate() {
        for (j, q) in b.vertices.iter().enumerate() {
            if sphere_distance(p, q) > far {
                return Err(Error::AntipodalPair { a: i, b: j });
            }
        }
    }
    let mut vertices = a.vertices.clone();
    vertices.extend_from_slice(&b.vertices);
    for p in &a.vertices {
        for q in &b.vertices {
            if let Ok(s) = Segment::new(*p, *q) {
                let n = interior + 1;
                vertices.extend((1..n).map(|k| s.at(k as f64 / n as f64)));
            }
        }
    }
    ConvexBody::new(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    fn e(i: usize) -> SpherePoint {
        SpherePoint::basis(i)
    }

    #[test]
    fn antipode_of_basis_and_diagonal() {
        assert_eq!(e(0).antipode().coords(), &Vector4::new(-1.0, 0.0, 0.0, 0.0));
        let p = SpherePoint::new(1.0, 1.0, 0.0, 0.0).unwrap();
        let q = p.antipode();
        assert!((q.coords() - Vector4::new(-FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0, 0.0)).norm() < 1e-15);
        assert_eq!(q.antipode(), p);
    }

    #[test]
    fn distances_of_basis_points() {
        assert!((sphere_distance(&e(0), &e(1)) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(sphere_distance(&e(2), &e(2)), 0.0);
        assert!((sphere_distance(&e(2), &e(2).antipode()) - PI).abs() < 1e-15);
    }

    #[test]
    fn segment_midpoint_and_samples() {
        let s = segment(e(0), e(1)).unwrap();
        let m = SpherePoint::new(1.0, 1.0, 0.0, 0.0).unwrap();
        assert!(sphere_distance(&s.midpoint(), &m) < 1e-15);
        let pts = sample_segment(&s, 3);
        assert_eq!(pts.len(), 3);
        assert!(sphere_distance(&pts[0], &e(0)) < 1e-15);
        assert!(sphere_distance(&pts[1], &m) < 1e-15);
        assert!(sphere_distance(&pts[2], &e(1)) < 1e-15);
        assert_eq!(segment(e(0), e(0).antipode()), Err(Error::DegenerateSegment));
        assert_eq!(segment(e(0), e(0)), Err(Error::DegenerateSegment));
    }

    #[test]
    fn ball_normalization() {
        let b = normalize_to_ball(&SpherePoint::origin()).unwrap();
        assert!(b.norm() < 1e-15);
        let b = normalize_to_ball(&SpherePoint::affine(&Vector3::new(1.0, 0.0, 0.0))).unwrap();
        assert!((b - Vector3::new(FRAC_1_SQRT_2, 0.0, 0.0)).norm() < 1e-15);
        let b = normalize_to_ball(&SpherePoint::new(3.0, 4.0, 0.0, 0.0).unwrap()).unwrap();
        assert!((b - Vector3::new(0.6, 0.8, 0.0)).norm() < 1e-15);
        let below = SpherePoint::new(0.0, 0.0, 0.0, -1.0).unwrap();
        assert_eq!(normalize_to_ball(&below), Err(Error::OutsideHemisphere));
        let x = Vector3::new(0.3, -2.0, 5.0);
        let back = from_ball(&normalize_to_ball(&SpherePoint::affine(&x)).unwrap()).unwrap();
        assert!((back.to_affine().unwrap() - x).norm() < 1e-12);
    }

    #[test]
    fn rank_one_endomorphism() {
        let mut m = Matrix4::zeros();
        m[(0, 0)] = 1.0;
        let l = ProjectiveEndomorphism::new(m).unwrap();
        assert_eq!(l.rank(), 1);
        let p = SpherePoint::new(-0.2, 0.5, 0.1, 0.3).unwrap();
        assert!(sphere_distance(&l.apply(&p).unwrap(), &e(0).antipode()) < 1e-15);
        assert_eq!(apply_endo(&l, &e(2)), Err(Error::Undefined));
        assert_eq!(apply(&ProjectiveMap::identity(), &p), p);
    }

    #[test]
    fn frames() {
        let h = frame_transport([&e(0), &e(1), &e(2), &e(3)]).unwrap();
        assert_eq!(h.matrix(), &Matrix4::identity());
        assert!(matches!(
            frame_transport([&e(0), &e(0), &e(2), &e(3)]),
            Err(Error::DegenerateFrame { .. })
        ));
    }

    #[test]
    fn cloud_metrics_of_singletons() {
        assert_eq!(hausdorff_distance(&[e(0)], &[e(0)]).unwrap(), 0.0);
        assert!((hausdorff_distance(&[e(0)], &[e(1)]).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(hausdorff_distance(&[], &[e(1)]), Err(Error::EmptySet));
    }

    #[test]
    fn witness_search() {
        let m = SpherePoint::new(1.0, 1.0, 0.0, 0.0).unwrap();
        match is_properly_convex(&[e(0), e(1), m]) {
            Convexity::Proper { witness } => assert!(sphere_distance(&witness, &m) < 1e-9),
            c => panic!("{c:?}"),
        }
        assert_eq!(
            is_properly_convex(&[e(0), e(0).antipode()]),
            Convexity::NotProper { pair: (0, 1) }
        );
    }

    #[test]
    fn join_of_two_points_is_their_segment() {
        let a = ConvexBody::new(vec![e(0)]).unwrap();
        let b = ConvexBody::new(vec![e(1)]).unwrap();
        let j = join(&a, &b, 7).unwrap();
        let s = segment(e(0), e(1)).unwrap();
        assert_eq!(j.vertices().len(), 9);
        assert!(j.vertices().iter().all(|p| s.distance_to(p) < 1e-15));
        let c = ConvexBody::new(vec![e(0).antipode()]).unwrap();
        assert_eq!(join(&a, &c, 3), Err(Error::AntipodalPair { a: 0, b: 0 }));
    }
}
