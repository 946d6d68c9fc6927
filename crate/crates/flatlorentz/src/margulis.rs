//! Affine deformations of Schottky groups: Margulis-invariant sweeps, the
//! invariant domain `Σ̃ ⊂ S²_∞`, its strips, and numerical properness evidence.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix4, Vector3};

use crate::boosts::{boost_data, to_standard_form, AffineIsometry};
use crate::fuchsian::{
    attractor_of_sequence, gap_chords, limit_set, word_products, AttractorEstimate, FreeWord,
    FuchsianGroup, GapChord, LimitSetApprox, PingPongCert,
};
use crate::lorentz::{self, boundary_point, NullArc};
use crate::sphere::{min_distance, sphere_distance, Segment, SpherePoint};
use crate::{par, tol, Error, Result};

/// Samples per generator complement used to certify linear ping-pong.
pub const CERT_SAMPLES: usize = 4096;

/// A group of affine boosts whose linear parts play ping-pong.
#[derive(Debug, Clone, PartialEq)]
pub struct MargulisGroup {
    generators: Vec<AffineIsometry>,
    linear: FuchsianGroup,
    cert: PingPongCert,
}

impl MargulisGroup {
    pub fn new(generators: Vec<AffineIsometry>) -> Result<Self> {
        let linear = FuchsianGroup::new(generators.iter().map(|g| *g.linear()).collect())?;
        Self::with_linear(generators, linear)
    }

    /// Uses the intervals of `linear`, whose generators must be the linear parts.
    pub fn with_linear(generators: Vec<AffineIsometry>, linear: FuchsianGroup) -> Result<Self> {
        let cert = linear.certify(CERT_SAMPLES)?;
        Ok(MargulisGroup {
            generators,
            linear,
            cert,
        })
    }

    /// Generators `Aᵢ` with translations `cᵢ v₀(Aᵢ)`, so that `μ(gᵢ) = cᵢ`.
    pub fn from_neutral_translations(linear: FuchsianGroup, c: &[f64]) -> Result<Self> {
        let generators = linear
            .generators()
            .iter()
            .zip(c)
            .map(|(a, &ci)| {
                let d = boost_data(&AffineIsometry::linear_only(*a)?)?;
                AffineIsometry::new(*a, d.v0 * ci)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_linear(generators, linear)
    }

    /// The bundled linear group with every translation coefficient `c`.
    pub fn bundled(c: f64) -> Self {
        let linear = FuchsianGroup::bundled();
        let cs = vec![c; linear.rank()];
        Self::from_neutral_translations(linear, &cs).expect("bundled group certifies")
    }

    pub fn generators(&self) -> &[AffineIsometry] {
        &self.generators
    }

    pub fn linear(&self) -> &FuchsianGroup {
        &self.linear
    }

    pub fn certificate(&self) -> &PingPongCert {
        &self.cert
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn evaluate(&self, w: &FreeWord) -> AffineIsometry {
        w.evaluate(&self.generators)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub word: FreeWord,
    pub lambda: f64,
    pub ell: f64,
    pub mu: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SignVerdict {
    Positive,
    Negative,
    Mixed,
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub rows: usize,
    pub min_mu: f64,
    pub max_mu: f64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    /// `max(ratio, 1/ratio)` over all rows.
    pub empirical_c: f64,
    pub sign: SignVerdict,
}

impl SweepSummary {
    pub fn from_rows(rows: &[SweepRow]) -> Self {
        let fold = |f: fn(&SweepRow) -> f64, init: f64, op: fn(f64, f64) -> f64| {
            rows.iter().map(f).fold(init, op)
        };
        let min_mu = fold(|r| r.mu, f64::INFINITY, f64::min);
        let max_mu = fold(|r| r.mu, f64::NEG_INFINITY, f64::max);
        let sign = if rows.is_empty() {
            SignVerdict::Empty
        } else if min_mu > 0.0 {
            SignVerdict::Positive
        } else if max_mu < 0.0 {
            SignVerdict::Negative
        } else {
            SignVerdict::Mixed
        };
        SweepSummary {
            rows: rows.len(),
            min_mu,
            max_mu,
            min_ratio: fold(|r| r.ratio, f64::INFINITY, f64::min),
            max_ratio: fold(|r| r.ratio, f64::NEG_INFINITY, f64::max),
            empirical_c: fold(|r| r.ratio.abs().max(1.0 / r.ratio.abs()), 0.0, f64::max),
            sign,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

/// `(λ, ℓ, μ, μ/ℓ)` for every nonidentity reduced word of length `≤ depth`.
pub fn margulis_sweep(group: &MargulisGroup, depth: usize) -> Result<Sweep> {
    let words = word_products(group.generators(), depth);
    let rows = par::map(&words[1..], |(w, g)| {
        let d = boost_data(g).map_err(|_| Error::ParabolicEncountered {
            word: w.to_string(),
        })?;
        Ok(SweepRow {
            word: w.clone(),
            lambda: d.lambda,
            ell: d.ell,
            mu: d.mu,
            ratio: d.mu / d.ell,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let summary = SweepSummary::from_rows(&rows);
    Ok(Sweep { rows, summary })
}

/// Sampling resolution of strip regions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripResolution {
    /// Samples along the gap.
    pub along: usize,
    /// Samples from the chord towards the boundary circle.
    pub across: usize,
    /// Interior samples per null arc.
    pub arc: usize,
}

impl Default for StripResolution {
    fn default() -> Self {
        StripResolution {
            along: 10,
            across: 5,
            arc: 15,
        }
    }
}

/// The closed strip `𝓡ᵢ = Eᵢ ∪ lᵢ ∪ lᵢ₋` over a gap of the limit set.
#[derive(Debug, Clone, PartialEq)]
pub struct Strip {
    pub index: usize,
    pub chord: GapChord,
    pub l: Segment,
    pub l_minus: Segment,
    /// `ε(pᵢ)`.
    pub s: NullArc,
    /// `ε(qᵢ)`.
    pub t: NullArc,
    pub boundary: Vec<SpherePoint>,
    pub interior: Vec<SpherePoint>,
}

impl Strip {
    pub fn new(chord: GapChord, res: &StripResolution) -> Self {
        let s = NullArc::new(chord.p_angle, res.arc);
        let t = NullArc::new(chord.q_angle, res.arc);
        let l = chord.segment;
        let l_minus = l.antipode();
        let mut boundary = Vec::new();
        boundary.extend(l.sample(res.along + 2));
        boundary.extend(l_minus.sample(res.along + 2));
        boundary.extend(s.cloud(true));
        boundary.extend(t.cloud(true));
        let us: Vec<f64> = (1..=res.along)
            .map(|k| k as f64 / (res.along + 1) as f64)
            .collect();
        let mut disk = Vec::new();
        let mut band = Vec::new();
        for &u in &us {
            let theta = chord.gap.start + u * chord.gap.width();
            let c = l.at(u);
            let b = boundary_point(theta);
            disk.extend((0..=res.across).map(|k| {
                let v = k as f64 / res.across as f64;
                SpherePoint::from_vector(c.coords() * (1.0 - v) + b.coords() * v)
                    .expect("chord and arc points are not antipodal")
            }));
            band.extend(NullArc::new(theta, res.arc).samples().iter().copied());
        }
        let mut interior = disk.clone();
        interior.extend(band);
        interior.extend(disk.iter().map(|p| p.antipode()));
        Strip {
            index: chord.index,
            chord,
            l,
            l_minus,
            s,
            t,
            boundary,
            interior,
        }
    }

    /// Exact distance from `p` to `∂Eᵢ = lᵢ ∪ sᵢ ∪ tᵢ ∪ lᵢ₋`.
    pub fn boundary_distance(&self, p: &SpherePoint) -> f64 {
        [
            self.l.distance_to(p),
            self.l_minus.distance_to(p),
            self.s.distance_to(p),
            self.t.distance_to(p),
        ]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
    }

    /// Samples of the closed strip: interior and boundary.
    pub fn cloud(&self) -> Vec<SpherePoint> {
        let mut v = self.interior.clone();
        v.extend_from_slice(&self.boundary);
        v
    }
}

/// `1 − |cos|` of the angle between the arc's tangent at its base and the
/// tangent of `∂𝕊₊` there; zero exactly when the arc is tangent.
pub fn tangency_defect(arc: &NullArc) -> f64 {
    let base = arc.base();
    let m = lorentz::m_theta(arc.theta());
    let circle_tangent = nalgebra::Vector4::new(m.x, m.y, m.z, 0.0);
    let circle_tangent =
        (circle_tangent - base.coords() * base.coords().dot(&circle_tangent)).normalize();
    1.0 - arc.curve().mid().coords().dot(&circle_tangent).abs()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DomainModel {
    pub limit_set: LimitSetApprox,
    /// `Cl(ε(z))` for each `z ∈ Λ_L`, in the order of the limit set.
    pub excluded: Vec<NullArc>,
    pub strips: Vec<Strip>,
}

impl DomainModel {
    /// Union of the sampled excluded arcs, approximating `Λ̂ ∩ S²_∞`.
    pub fn lambda_hat(&self) -> Vec<SpherePoint> {
        self.excluded.iter().flat_map(|a| a.cloud(true)).collect()
    }

    /// Index of the widest strip.
    pub fn widest_strip(&self) -> Option<usize> {
        (0..self.strips.len()).max_by(|&i, &j| {
            let w = |k: usize| self.strips[k].chord.gap.width();
            w(i).total_cmp(&w(j))
        })
    }
}

/// Interior samples per excluded arc kept in the model.
pub const EXCLUDED_ARC_SAMPLES: usize = 48;

pub fn build_domain(group: &FuchsianGroup, depth: usize) -> Result<DomainModel> {
    build_domain_with(group, depth, &StripResolution::default())
}

pub fn build_domain_with(
    group: &FuchsianGroup,
    depth: usize,
    res: &StripResolution,
) -> Result<DomainModel> {
    build_domain_from(limit_set(group, depth), res)
}

/// Domain model over a precomputed limit-set approximation.
pub fn build_domain_from(ls: LimitSetApprox, res: &StripResolution) -> Result<DomainModel> {
    let excluded = ls
        .angles
        .iter()
        .map(|&a| NullArc::new(a, EXCLUDED_ARC_SAMPLES))
        .collect();
    let chords = gap_chords(&ls)?;
    let strips = par::map(&chords, |c| Strip::new(*c, res));
    Ok(DomainModel {
        limit_set: ls,
        excluded,
        strips,
    })
}

/// Nearest-sample distances between interior clouds of all strip pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct DisjointnessReport {
    pub matrix: Vec<Vec<f64>>,
    pub min_off_diagonal: f64,
    pub disjoint: bool,
}

pub fn strip_disjointness(model: &DomainModel) -> DisjointnessReport {
    let n = model.strips.len();
    let clouds: Vec<Vec<SpherePoint>> = model.strips.iter().map(|s| s.interior.clone()).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let dists = par::map(&pairs, |&(i, j)| {
        if i == j {
            0.0
        } else {
            min_distance(&clouds[i], &clouds[j]).expect("nonempty clouds")
        }
    });
    let mut matrix = vec![vec![0.0; n]; n];
    for (&(i, j), d) in pairs.iter().zip(dists) {
        matrix[i][j] = d;
        matrix[j][i] = d;
    }
    let min_off_diagonal = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| matrix[i][j])
        .fold(f64::INFINITY, f64::min);
    DisjointnessReport {
        matrix,
        min_off_diagonal,
        disjoint: n < 2 || min_off_diagonal > 0.0,
    }
}

/// How `g` moves a strip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripImage {
    /// Strip whose gap endpoints are the images of this strip's endpoints.
    pub matches: Option<usize>,
    /// Nearest-sample distance between `g(𝓡ᵢ)` and `𝓡ᵢ`.
    pub self_distance: f64,
}

pub fn strip_image(model: &DomainModel, i: usize, g: &nalgebra::Matrix3<f64>) -> StripImage {
    let map = |p: &SpherePoint| SpherePoint::direction(&(g * p.spatial())).expect("invertible");
    let strip = &model.strips[i];
    let (p, q) = (map(&strip.chord.p), map(&strip.chord.q));
    let matches = model.strips.iter().position(|s| {
        sphere_distance(&s.chord.p, &p) < tol::GEO && sphere_distance(&s.chord.q, &q) < tol::GEO
    });
    let image: Vec<SpherePoint> = strip.interior.iter().map(map).collect();
    StripImage {
        matches,
        self_distance: min_distance(&image, &strip.interior).expect("nonempty"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Membership {
    /// Within `tol::GEO` of the excluded arc over limit point `arc`.
    Excluded { arc: usize },
    /// Distance to the nearest excluded arc.
    ProbablyInside { margin: f64 },
}

impl Membership {
    pub fn is_excluded(&self) -> bool {
        matches!(self, Membership::Excluded { .. })
    }
}

pub fn sigma_membership(model: &DomainModel, p: &SpherePoint) -> Result<Membership> {
    if p.t().abs() > tol::NORM {
        return Err(Error::NotOnBoundarySphere);
    }
    let (arc, margin) = model
        .excluded
        .iter()
        .enumerate()
        .map(|(i, a)| (i, a.distance_to(p)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or(Error::EmptySet)?;
    Ok(if margin < tol::GEO {
        Membership::Excluded { arc }
    } else {
        Membership::ProbablyInside { margin }
    })
}

/// `n` roughly uniform unit vectors (Fibonacci lattice).
fn fibonacci_sphere(n: usize) -> Vec<Vector3<f64>> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).sqrt();
            let a = golden * k as f64;
            Vector3::new(r * a.cos(), r * a.sin(), z)
        })
        .collect()
}

/// Cloud of the `S³`-ball of radius `r` about the affine point `center`:
/// the center and two Fibonacci shells.
pub fn ball_cloud(center: &Vector3<f64>, r: f64, shell: usize) -> Vec<SpherePoint> {
    let c = SpherePoint::affine(center);
    let dirs = fibonacci_sphere(shell);
    let mut out = vec![c];
    for frac in [0.5, 1.0] {
        let rho = frac * r;
        for d in &dirs {
            let tangent = nalgebra::Vector4::new(d.x, d.y, d.z, 0.0);
            let tangent = (tangent - c.coords() * c.coords().dot(&tangent)).normalize();
            let v = c.coords() * rho.cos() + tangent * rho.sin();
            out.push(SpherePoint::from_vector(v).expect("unit"));
        }
    }
    out
}

/// Cloud of the disk of radius `r` in `S²_∞` about the direction `center`.
pub fn boundary_patch(center: &Vector3<f64>, r: f64, n: usize) -> Result<Vec<SpherePoint>> {
    let c = SpherePoint::direction(center)?;
    let helper = if center.x.abs() < 0.9 * center.norm() {
        Vector3::x()
    } else {
        Vector3::y()
    };
    let e1 = center.cross(&helper).normalize();
    let e2 = center.normalize().cross(&e1);
    let mut out = vec![c];
    for k in 0..n {
        let a = 2.0 * PI * k as f64 / n as f64;
        for frac in [0.5, 1.0] {
            let d = e1 * a.cos() + e2 * a.sin();
            let v = c.spatial() * (frac * r).cos() + d * (frac * r).sin();
            out.push(SpherePoint::direction(&v)?);
        }
    }
    Ok(out)
}

/// A patch of half-width `r` (relative to the gap) inside `𝒜ᵢ` around the
/// midpoint of the null arc over the center of the gap.
pub fn strip_patch(model: &DomainModel, i: usize, r: f64, n: usize) -> Vec<SpherePoint> {
    let strip = &model.strips[i];
    let gap = strip.chord.gap;
    let mut out = Vec::new();
    for a in 0..n {
        let u = 0.5 + r * (2.0 * a as f64 / (n.max(2) - 1) as f64 - 1.0);
        let arc = NullArc::new(gap.start + u * gap.width(), 0);
        for b in 0..n {
            let phi = FRAC_PI_2 + r * PI * (2.0 * b as f64 / (n.max(2) - 1) as f64 - 1.0);
            out.push(arc.curve().at(phi));
        }
    }
    out
}

/// Words `w` with `w(K) ∩ K ≠ ∅` at the overlap tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct PropernessReport {
    pub depth: usize,
    pub resolution: usize,
    pub intersecting: Vec<FreeWord>,
    /// Count of intersecting words by length `0..=depth`.
    pub by_length: Vec<usize>,
    /// No intersecting words of length `depth` or `depth − 1`.
    pub stabilized: bool,
    /// Smallest `min_distance(w(K), K)` over nonidentity words.
    pub min_nonidentity_distance: f64,
}

impl PropernessReport {
    pub fn statement(&self) -> String {
        format!(
            "no violation found beyond {} intersecting words at depth {}, resolution {}",
            self.intersecting.len(),
            self.depth,
            self.resolution
        )
    }
}

pub fn properness_census(
    group: &MargulisGroup,
    model: &DomainModel,
    k: &[SpherePoint],
    depth: usize,
) -> Result<PropernessReport> {
    properness_census_with(group, model, k, depth, tol::OVERLAP)
}

/// Census with words counted as intersecting below distance `overlap`.
pub fn properness_census_with(
    group: &MargulisGroup,
    model: &DomainModel,
    k: &[SpherePoint],
    depth: usize,
    overlap: f64,
) -> Result<PropernessReport> {
    if k.is_empty() {
        return Err(Error::EmptySet);
    }
    for (index, p) in k.iter().enumerate() {
        if p.t().abs() <= tol::NORM && sigma_membership(model, p)?.is_excluded() {
            return Err(Error::DomainViolation { index });
        }
    }
    let words = word_products(group.generators(), depth);
    let dists = par::map(&words, |(_, g)| {
        let m = g.to_projective();
        let image = m.apply_all(k);
        min_distance(&image, k).expect("nonempty")
    });
    let mut intersecting = Vec::new();
    let mut by_length = vec![0; depth + 1];
    let mut min_nonidentity_distance = f64::INFINITY;
    for ((w, _), d) in words.iter().zip(dists) {
        if !w.is_identity() {
            min_nonidentity_distance = min_nonidentity_distance.min(d);
        }
        if d < overlap {
            by_length[w.len()] += 1;
            intersecting.push(w.clone());
        }
    }
    let stabilized = by_length[depth] == 0 && (depth == 0 || by_length[depth - 1] == 0);
    Ok(PropernessReport {
        depth,
        resolution: k.len(),
        intersecting,
        by_length,
        stabilized,
        min_nonidentity_distance,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationTerm {
    pub word: FreeWord,
    pub lambda: f64,
    pub mu: f64,
    /// The affine frame `hₙ` of the standard form.
    pub frame: Matrix4<f64>,
    /// `‖hₙ − hₙ₋₁‖_F`, zero for the first term.
    pub cauchy_step: f64,
    /// Operator-norm condition number of `hₙ`.
    pub condition: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationReport {
    pub terms: Vec<NormalizationTerm>,
    pub estimate: AttractorEstimate,
    /// Fixed element precomposed because attractor and repeller coincided.
    pub gamma0: Option<FreeWord>,
    pub lambda_increasing: bool,
    pub ratio_decreasing: bool,
    /// Largest condition number over the sequence.
    pub bi_lipschitz: f64,
}

fn operator_condition(m: &Matrix4<f64>) -> f64 {
    let sv = m.singular_values();
    sv.max() / sv.min()
}

/// Standard-form frames along a word sequence.
///
/// When the attractor and repeller estimates coincide, the sequence is
/// precomposed with the first generator that moves the attractor.
pub fn normalization_sequence(
    group: &MargulisGroup,
    words: &[FreeWord],
) -> Result<NormalizationReport> {
    let linear = |ws: &[FreeWord]| -> Vec<_> { ws.iter().map(|w| *group.evaluate(w).linear()).collect() };
    let mut words = words.to_vec();
    let mut estimate = attractor_of_sequence(&linear(&words))?;
    let mut gamma0 = None;
    if !estimate.valid {
        let a = estimate.attractor;
        let fix = (0..group.rank()).find(|&i| {
            let img = SpherePoint::direction(&(group.linear().generators()[i] * a.spatial()))
                .expect("invertible");
            sphere_distance(&img, &a) > tol::SEP
        });
        let Some(i) = fix else {
            return Err(Error::CoincidentAttractorRepeller);
        };
        let g0 = FreeWord::generator(i);
        words = words.iter().map(|w| g0.mul(w)).collect();
        estimate = attractor_of_sequence(&linear(&words))?;
        if !estimate.valid {
            return Err(Error::CoincidentAttractorRepeller);
        }
        gamma0 = Some(g0);
    }
    let forms = par::map(&words, |w| to_standard_form(&group.evaluate(w)));
    let mut terms: Vec<NormalizationTerm> = Vec::with_capacity(words.len());
    for (w, sf) in words.iter().zip(forms) {
        let sf = sf?;
        let cauchy_step = terms
            .last()
            .map_or(0.0, |t| (sf.affine_frame - t.frame).norm());
        terms.push(NormalizationTerm {
            word: w.clone(),
            lambda: sf.lambda,
            mu: sf.mu,
            frame: sf.affine_frame,
            cauchy_step,
            condition: operator_condition(&sf.affine_frame),
        });
    }
    let lambda_increasing = terms.windows(2).all(|t| t[1].lambda > t[0].lambda);
    let ratio_decreasing = terms
        .windows(2)
        .all(|t| t[1].mu / t[1].lambda <= t[0].mu / t[0].lambda);
    let bi_lipschitz = terms.iter().map(|t| t.condition).fold(0.0, f64::max);
    Ok(NormalizationReport {
        terms,
        estimate,
        gamma0,
        lambda_increasing,
        ratio_decreasing,
        bi_lipschitz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_generators_have_prescribed_mu() {
        let g = MargulisGroup::bundled(3.0);
        for h in g.generators() {
            assert!((boost_data(h).unwrap().mu - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn cyclic_domain() {
        let g = FuchsianGroup::new(vec![lorentz::boost_x(2.0)]).unwrap();
        let m = build_domain(&g, 3).unwrap();
        assert_eq!(m.excluded.len(), 2);
        assert_eq!(m.strips.len(), 2);
        let center = SpherePoint::basis(2);
        match sigma_membership(&m, &center).unwrap() {
            Membership::ProbablyInside { margin } => assert!(margin >= PI / 4.0 - 1e-12),
            other => panic!("{other:?}"),
        }
        assert!(sigma_membership(&m, m.excluded[0].base()).unwrap().is_excluded());
    }

    #[test]
    fn ball_cloud_radius() {
        let c = ball_cloud(&Vector3::zeros(), 0.1, 20);
        let o = SpherePoint::origin();
        let max = c.iter().map(|p| sphere_distance(p, &o)).fold(0.0, f64::max);
        assert!((max - 0.1).abs() < 1e-12);
    }
}
