//! Free groups acting on the disk `𝕊₊` of future timelike directions.
//!
//! Boundary points of `𝕊₊` are identified with angles `θ ∈ (−π, π]` via
//! the null directions `(cos θ, sin θ, 1)`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boosts::{boost_data, classify, AffineIsometry, LinearClass};
use crate::lorentz::{self, boundary_angle, boundary_point, wrap_angle};
use crate::sphere::{sphere_distance, Segment, SpherePoint};
use crate::{par, tol, Error, Result};

/// A freely reduced word. Letter `+i` is generator `i` (1-based) and `−i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

fn letter_key(l: i32) -> u32 {
    2 * (l.unsigned_abs() - 1) + u32::from(l < 0)
}

fn letter_from_key(k: u32) -> i32 {
    let g = (k / 2 + 1) as i32;
    if k % 2 == 0 {
        g
    } else {
        -g
    }
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// Freely reduces `letters`. Zero letters are dropped.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters.into_iter().filter(|&l| l != 0) {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    pub fn generator(i: usize) -> Self {
        FreeWord {
            letters: vec![i as i32 + 1],
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        FreeWord::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        FreeWord::new(
            std::iter::repeat_n(base.letters, n.unsigned_abs() as usize).flatten(),
        )
    }

    /// Largest generator index used, 1-based.
    pub fn max_generator(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Shortlex key: length first, then letters in the order `g₁ < g₁⁻¹ < g₂ < …`.
    pub fn shortlex_key(&self) -> (usize, Vec<u32>) {
        (self.len(), self.letters.iter().map(|&l| letter_key(l)).collect())
    }

    pub fn evaluate<T: GroupElement>(&self, generators: &[T]) -> T {
        self.letters.iter().fold(T::identity(), |acc, &l| {
            let g = &generators[l.unsigned_abs() as usize - 1];
            acc.mul(&if l > 0 { g.clone() } else { g.inv() })
        })
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.shortlex_key().cmp(&other.shortlex_key())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for &l in &self.letters {
            let c = (b'a' + (l.unsigned_abs() - 1) as u8) as char;
            let c = if l < 0 { c.to_ascii_uppercase() } else { c };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses `a`, `A`, `b`, … ; `e` or the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(FreeWord::identity());
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'a'..='z' => Ok(c as i32 - 'a' as i32 + 1),
                'A'..='Z' => Ok(-(c as i32 - 'A' as i32 + 1)),
                _ => Err(Error::ConfigParse(format!("bad letter {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeWord::new(letters))
    }
}

/// Count of reduced words of length `≤ len` in the free group of rank `r`.
pub fn word_count(rank: usize, len: usize) -> usize {
    let r = 2 * rank;
    1 + (1..=len).map(|k| r * (r - 1).pow(k as u32 - 1)).sum::<usize>()
}

/// All reduced words of length `≤ len` in shortlex order.
pub fn enumerate_words(rank: usize, len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity()];
    let mut level = vec![FreeWord::identity()];
    for _ in 0..len {
        level = level
            .iter()
            .flat_map(|w| {
                (0..2 * rank as u32).map(letter_from_key).filter_map(move |l| {
                    (w.letters.last() != Some(&-l)).then(|| {
                        let mut letters = w.letters.clone();
                        letters.push(l);
                        FreeWord { letters }
                    })
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Elements that can be multiplied along words.
pub trait GroupElement: Clone + Send + Sync {
    fn identity() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl GroupElement for Matrix3<f64> {
    fn identity() -> Self {
        Matrix3::identity()
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Self {
        lorentz::lorentz_inverse(self)
    }
}

impl GroupElement for AffineIsometry {
    fn identity() -> Self {
        AffineIsometry::identity()
    }

    fn mul(&self, other: &Self) -> Self {
        self.compose(other)
    }

    fn inv(&self) -> Self {
        self.inverse()
    }
}

/// Every reduced word of length `≤ len` with its value, in shortlex order.
///
/// Each level is computed from the previous one by right multiplication.
pub fn word_products<T: GroupElement>(generators: &[T], len: usize) -> Vec<(FreeWord, T)> {
    let rank = generators.len();
    let letters: Vec<(i32, T)> = (0..2 * rank as u32)
        .map(|k| {
            let l = letter_from_key(k);
            let g = &generators[l.unsigned_abs() as usize - 1];
            (l, if l > 0 { g.clone() } else { g.inv() })
        })
        .collect();
    let mut out = vec![(FreeWord::identity(), T::identity())];
    let mut level = out.clone();
    for _ in 0..len {
        level = par::map(&level, |(w, v)| {
            letters
                .iter()
                .filter(|(l, _)| w.letters.last() != Some(&-l))
                .map(|(l, g)| {
                    let mut letters = w.letters.clone();
                    letters.push(*l);
                    (FreeWord { letters }, v.mul(g))
                })
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Attracting and repelling fixed points on `∂𝕊₊` of a positive hyperbolic matrix.
pub fn boundary_fixed_points(a: &Matrix3<f64>) -> Result<(SpherePoint, SpherePoint)> {
    match classify(a) {
        Ok(LinearClass::PositiveHyperbolic) => {}
        Ok(_) => return Err(Error::NotHyperbolic),
        Err(e) => return Err(e),
    }
    let d = boost_data(&AffineIsometry::linear_only(*a)?)?;
    let dir = |v: &nalgebra::Vector3<f64>| SpherePoint::direction(v).expect("nonzero");
    Ok((dir(&d.v_plus), dir(&d.v_minus)))
}

/// A closed counterclockwise arc of `∂𝕊₊` from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Interval {
    pub start: f64,
    pub end: f64,
}

impl Interval {
    pub fn new(start: f64, end: f64) -> Self {
        Interval {
            start: wrap_angle(start),
            end: wrap_angle(end),
        }
    }

    pub fn centered(center: f64, half_width: f64) -> Self {
        Interval::new(center - half_width, center + half_width)
    }

    pub fn width(&self) -> f64 {
        let w = (self.end - self.start).rem_euclid(TAU);
        if w == 0.0 && self.start != self.end {
            TAU
        } else {
            w
        }
    }

    pub fn center(&self) -> f64 {
        wrap_angle(self.start + 0.5 * self.width())
    }

    /// Membership with angular slack `slack` on both ends.
    pub fn contains(&self, theta: f64, slack: f64) -> bool {
        (theta - self.start + slack).rem_euclid(TAU) <= self.width() + 2.0 * slack
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        !self.contains(other.start, 0.0)
            && !self.contains(other.end, 0.0)
            && !other.contains(self.start, 0.0)
    }

    /// `n ≥ 2` evenly spaced angles from `start` to `end` inclusive.
    pub fn sample(&self, n: usize) -> Vec<f64> {
        let n = n.max(2);
        let w = self.width();
        (0..n)
            .map(|k| wrap_angle(self.start + w * k as f64 / (n - 1) as f64))
            .collect()
    }

    /// The closure of the complement.
    pub fn complement(&self) -> Interval {
        Interval::new(self.end, self.start)
    }
}

/// `(D⁺, D⁻)` for `A`: `D⁻ = {θ : (A n_θ)_z ≤ 1}` is the region expanded by
/// `A`, and `D⁺` is the same region for `A⁻¹`. `A` maps the closure of the
/// complement of `D⁻` onto `D⁺`.
pub fn isometric_intervals(a: &Matrix3<f64>) -> (Interval, Interval) {
    let region = |m: &Matrix3<f64>| {
        let r = m[(2, 0)].hypot(m[(2, 1)]);
        let phi = m[(2, 1)].atan2(m[(2, 0)]);
        let kappa = ((1.0 - m[(2, 2)]) / r).clamp(-1.0, 1.0);
        Interval::centered(phi + PI, PI - kappa.acos())
    };
    (region(&lorentz::lorentz_inverse(a)), region(a))
}

/// Evidence that generators play ping-pong on `∂𝕊₊`.
#[derive(Debug, Clone, PartialEq)]
pub struct PingPongCert {
    /// `(D⁺ᵢ, D⁻ᵢ)` per generator.
    pub intervals: Vec<(Interval, Interval)>,
    pub samples: usize,
}

fn ping_pong_image(a: &Matrix3<f64>, theta: f64) -> f64 {
    boundary_angle(&SpherePoint::direction(&(a * lorentz::n_theta(theta))).expect("invertible"))
}

/// Checks disjointness of all `2·rank` intervals and, on `samples` points of
/// each complement, `gᵢ(∂𝕊₊ − D⁻ᵢ) ⊂ D⁺ᵢ` and `gᵢ⁻¹(∂𝕊₊ − D⁺ᵢ) ⊂ D⁻ᵢ`.
pub fn certify_ping_pong(
    generators: &[Matrix3<f64>],
    intervals: &[(Interval, Interval)],
    samples: usize,
) -> Result<PingPongCert> {
    let violation = |generator: usize, angle: f64, reason: String| Error::PingPongViolation {
        generator,
        angle,
        reason,
    };
    if intervals.len() != generators.len() {
        return Err(violation(
            0,
            0.0,
            format!(
                "{} interval pairs for {} generators",
                intervals.len(),
                generators.len()
            ),
        ));
    }
    let all: Vec<(usize, &Interval)> = intervals
        .iter()
        .enumerate()
        .flat_map(|(i, (p, m))| [(i, p), (i, m)])
        .collect();
    for (k, (i, a)) in all.iter().enumerate() {
        if !(a.width() > 0.0 && a.width() < TAU) {
            return Err(violation(*i, a.start, "degenerate interval".into()));
        }
        for (j, b) in &all[k + 1..] {
            if !a.is_disjoint(b) {
                return Err(violation(
                    *i,
                    b.start,
                    format!("intervals of generators {i} and {j} overlap"),
                ));
            }
        }
    }
    for (i, (g, (plus, minus))) in generators.iter().zip(intervals).enumerate() {
        let inv = lorentz::lorentz_inverse(g);
        for (m, from, to, dir) in [(g, minus, plus, "g"), (&inv, plus, minus, "g^-1")] {
            for theta in from.complement().sample(samples) {
                let image = ping_pong_image(m, theta);
                if !to.contains(image, tol::GEO) {
                    return Err(violation(
                        i,
                        theta,
                        format!("{dir} maps {theta:.6} to {image:.6}, outside its target"),
                    ));
                }
            }
        }
    }
    Ok(PingPongCert {
        intervals: intervals.to_vec(),
        samples,
    })
}

/// A finitely generated group of positive hyperbolic matrices with ping-pong intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct FuchsianGroup {
    generators: Vec<Matrix3<f64>>,
    intervals: Vec<(Interval, Interval)>,
}

impl FuchsianGroup {
    /// Intervals default to the isometric intervals of each generator.
    pub fn new(generators: Vec<Matrix3<f64>>) -> Result<Self> {
        for a in &generators {
            if classify(a)? != LinearClass::PositiveHyperbolic {
                return Err(Error::NotHyperbolic);
            }
        }
        let intervals = generators.iter().map(isometric_intervals).collect();
        Ok(FuchsianGroup {
            generators,
            intervals,
        })
    }

    pub fn with_intervals(mut self, intervals: Vec<(Interval, Interval)>) -> Self {
        self.intervals = intervals;
        self
    }

    /// Boosts of rapidity 2 (translation length 4) along the x- and y-axes.
    pub fn bundled() -> Self {
        FuchsianGroup::new(vec![
            lorentz::boost_towards(0.0, 2.0),
            lorentz::boost_towards(PI / 2.0, 2.0),
        ])
        .expect("bundled generators are boosts")
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Matrix3<f64>] {
        &self.generators
    }

    pub fn intervals(&self) -> &[(Interval, Interval)] {
        &self.intervals
    }

    pub fn certify(&self, samples: usize) -> Result<PingPongCert> {
        certify_ping_pong(&self.generators, &self.intervals, samples)
    }

    pub fn evaluate(&self, w: &FreeWord) -> Matrix3<f64> {
        w.evaluate(&self.generators)
    }
}

/// A gap of the limit set: the open arc from `start` counterclockwise to `end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gap {
    /// Index of the limit point at the backward end.
    pub start_index: usize,
    /// Index of the limit point at the forward end.
    pub end_index: usize,
    pub arc: Interval,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitSetApprox {
    pub depth: usize,
    pub points: Vec<SpherePoint>,
    pub angles: Vec<f64>,
    pub gaps: Vec<Gap>,
}

impl LimitSetApprox {
    pub fn from_points(depth: usize, pts: impl IntoIterator<Item = SpherePoint>, w_min: f64) -> Self {
        let mut pts: Vec<(f64, SpherePoint)> = pts
            .into_iter()
            .map(|p| (boundary_angle(&p), p))
            .collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut kept: Vec<(f64, SpherePoint)> = Vec::with_capacity(pts.len());
        for (a, p) in pts {
            match kept.last() {
                Some((_, q)) if sphere_distance(&p, q) < tol::GEO => {}
                _ => kept.push((a, p)),
            }
        }
        if kept.len() > 1 && sphere_distance(&kept[0].1, &kept[kept.len() - 1].1) < tol::GEO {
            kept.pop();
        }
        let n = kept.len();
        let gaps = if n < 2 {
            Vec::new()
        } else {
            (0..n)
                .filter_map(|i| {
                    let j = (i + 1) % n;
                    let arc = Interval::new(kept[i].0, kept[j].0);
                    (arc.width() > w_min).then_some(Gap {
                        start_index: i,
                        end_index: j,
                        arc,
                    })
                })
                .collect()
        };
        LimitSetApprox {
            depth,
            angles: kept.iter().map(|k| k.0).collect(),
            points: kept.into_iter().map(|k| k.1).collect(),
            gaps,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Distance from `p` to the nearest approximate limit point.
    pub fn distance_to(&self, p: &SpherePoint) -> f64 {
        self.points
            .iter()
            .map(|q| sphere_distance(p, q))
            .fold(f64::INFINITY, f64::min)
    }
}

/// Attracting fixed points of all nonidentity reduced words of length `≤ depth`.
pub fn limit_set(group: &FuchsianGroup, depth: usize) -> LimitSetApprox {
    limit_set_with(group, depth, tol::GAP_MIN)
}

pub fn limit_set_with(group: &FuchsianGroup, depth: usize, w_min: f64) -> LimitSetApprox {
    let words = word_products(group.generators(), depth);
    let pts = par::map(&words[1..], |(_, m)| {
        boundary_fixed_points(m).ok().map(|(a, _)| a)
    });
    LimitSetApprox::from_points(depth, pts.into_iter().flatten(), w_min)
}

/// The chord `lᵢ` spanning a gap, from the backward end `q` to the forward end `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapChord {
    pub index: usize,
    pub p: SpherePoint,
    pub q: SpherePoint,
    pub p_angle: f64,
    pub q_angle: f64,
    pub gap: Interval,
    pub segment: Segment,
}

pub fn gap_chords(ls: &LimitSetApprox) -> Result<Vec<GapChord>> {
    if ls.len() < 2 {
        return Err(Error::TooFewPoints);
    }
    ls.gaps
        .iter()
        .enumerate()
        .map(|(index, g)| {
            let (q, p) = (ls.points[g.start_index], ls.points[g.end_index]);
            Ok(GapChord {
                index,
                p,
                q,
                p_angle: ls.angles[g.end_index],
                q_angle: ls.angles[g.start_index],
                gap: g.arc,
                segment: Segment::new(q, p).map_err(|_| Error::DegenerateChord)?,
            })
        })
        .collect()
}

/// Limits of the attracting and repelling fixed points along a sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttractorEstimate {
    pub attractor: SpherePoint,
    pub repeller: SpherePoint,
    /// Largest deviation over the tail of the sequence.
    pub spread: f64,
    /// Attractor and repeller are separated by more than `tol::SEP`.
    pub valid: bool,
}

/// Estimates from the last quarter of the sequence, which must be Cauchy at `tol::SEP`.
pub fn attractor_of_sequence(mats: &[Matrix3<f64>]) -> Result<AttractorEstimate> {
    if mats.is_empty() {
        return Err(Error::EmptySet);
    }
    let tail = &mats[mats.len() - mats.len().div_ceil(4)..];
    let fixed = tail
        .iter()
        .map(boundary_fixed_points)
        .collect::<Result<Vec<_>>>()?;
    let (a, r) = *fixed.last().unwrap();
    let spread = fixed
        .iter()
        .map(|(x, y)| sphere_distance(x, &a).max(sphere_distance(y, &r)))
        .fold(0.0, f64::max);
    if spread > tol::SEP {
        return Err(Error::InconclusiveSequence { spread });
    }
    Ok(AttractorEstimate {
        attractor: a,
        repeller: r,
        spread,
        valid: sphere_distance(&a, &r) > tol::SEP,
    })
}

pub fn convergence_attractor(group: &FuchsianGroup, words: &[FreeWord]) -> Result<AttractorEstimate> {
    let mats: Vec<_> = words.iter().map(|w| group.evaluate(w)).collect();
    attractor_of_sequence(&mats)
}

/// Fraction of `n` boundary samples at distance `> exclude` from `repeller`
/// whose image under `a` lies within `eps` of `attractor`.
pub fn concentration(
    a: &Matrix3<f64>,
    attractor: &SpherePoint,
    repeller: &SpherePoint,
    eps: f64,
    exclude: f64,
    n: usize,
) -> f64 {
    let pts: Vec<SpherePoint> = (0..n)
        .map(|k| boundary_point(TAU * k as f64 / n as f64))
        .filter(|p| sphere_distance(p, repeller) > exclude)
        .collect();
    if pts.is_empty() {
        return 1.0;
    }
    let hits = pts
        .iter()
        .filter(|p| {
            let img = SpherePoint::direction(&(a * p.spatial())).expect("invertible");
            sphere_distance(&img, attractor) < eps
        })
        .count();
    hits as f64 / pts.len() as f64
}

/// Hit rate of the density proxy: for `pairs` random pairs of distinct
/// points of `Λ_depth`, whether some word of length `≤ depth + extra` has
/// its (attracting, repelling) pair within `eps` of the target pair.
pub fn density_hit_rate(
    group: &FuchsianGroup,
    depth: usize,
    extra: usize,
    pairs: usize,
    eps: f64,
    seed: u64,
) -> f64 {
    let ls = limit_set(group, depth);
    if ls.len() < 2 || pairs == 0 {
        return 0.0;
    }
    let fixed: Vec<(SpherePoint, SpherePoint)> = word_products(group.generators(), depth + extra)
        [1..]
        .iter()
        .filter_map(|(_, m)| boundary_fixed_points(m).ok())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let targets: Vec<(usize, usize)> = (0..pairs)
        .map(|_| {
            let i = rng.random_range(0..ls.len());
            let mut j = rng.random_range(0..ls.len() - 1);
            if j >= i {
                j += 1;
            }
            (i, j)
        })
        .collect();
    let hits = par::map(&targets, |&(i, j)| {
        let (x, y) = (&ls.points[i], &ls.points[j]);
        fixed
            .iter()
            .any(|(a, r)| sphere_distance(a, x) < eps && sphere_distance(r, y) < eps)
    });
    hits.iter().filter(|&&h| h).count() as f64 / pairs as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_and_display() {
        let w = enumerate_words(2, 1);
        let names: Vec<String> = w.iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["e", "a", "A", "b", "B"]);
        assert_eq!(enumerate_words(2, 2).len(), 17);
        assert_eq!(enumerate_words(3, 2).len(), 37);
        let w: FreeWord = "abBA".parse().unwrap();
        assert!(w.is_identity());
        assert_eq!("aab".parse::<FreeWord>().unwrap().inverse().to_string(), "BAA");
    }

    #[test]
    fn products_match_direct_evaluation() {
        let g = FuchsianGroup::bundled();
        for (w, m) in word_products(g.generators(), 3) {
            assert!((m - g.evaluate(&w)).amax() < 1e-9 * m.amax());
        }
    }

    #[test]
    fn fixed_points_of_xz_boost() {
        let (a, r) = boundary_fixed_points(&lorentz::boost_x(1.0)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((a.coords() - nalgebra::Vector4::new(s, 0.0, s, 0.0)).norm() < 1e-14);
        assert!((r.coords() - nalgebra::Vector4::new(-s, 0.0, s, 0.0)).norm() < 1e-14);
        assert_eq!(
            boundary_fixed_points(&lorentz::rotation_z(1.0)),
            Err(Error::NotHyperbolic)
        );
    }

    #[test]
    fn isometric_interval_width() {
        let (p, m) = isometric_intervals(&lorentz::boost_x(2.0));
        let oracle = PI - (-(1.0f64).tanh()).acos();
        assert!((p.width() - 2.0 * oracle).abs() < 1e-12);
        assert!((m.width() - 2.0 * oracle).abs() < 1e-12);
        assert!(p.contains(0.0, 0.0) && m.contains(PI, 0.0));
    }

    #[test]
    fn interval_wraps() {
        let i = Interval::new(-0.5, 0.5);
        assert!(i.contains(0.0, 0.0) && i.contains(TAU - 0.1, 0.0) && !i.contains(PI, 0.0));
        assert!(i.is_disjoint(&Interval::new(1.0, 2.0)));
        assert!(!i.is_disjoint(&Interval::new(0.4, 2.0)));
        assert!(!i.is_disjoint(&Interval::new(-1.0, 1.0)));
    }

    #[test]
    fn cyclic_chords() {
        let g = FuchsianGroup::new(vec![lorentz::boost_x(2.0)]).unwrap();
        let ls = limit_set(&g, 5);
        assert_eq!(ls.len(), 2);
        let c = gap_chords(&ls).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].p, c[1].q);
        assert_eq!(c[0].q, c[1].p);
    }
}
