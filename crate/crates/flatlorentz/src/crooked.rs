//! Crooked planes in `E`, crooked circles on `S²_∞`, and triangle meshes of
//! crooked planes in normalized-ball coordinates.

use nalgebra::Vector3;

use crate::boosts::AffineIsometry;
use crate::lorentz::{self, lorentz_cross, quad, wing_sign, CausalClass, LorentzVector, NullArc};
use crate::sphere::{from_ball, normalize_to_ball, sphere_distance, Segment, SpherePoint};
use crate::{par, tol, Error, Result};

/// Default mesh extent in Lorentz units.
pub const DEFAULT_EXTENT: f64 = 10.0;

/// `C₁ ∪ C₂ ∪ 𝒲(v₁) ∪ 𝒲(v₂)` with vertex `x`.
///
/// The null directions are stored as given, so that transporting the
/// defining data by an isometry transports every derived sample exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrookedPlane {
    vertex: Vector3<f64>,
    v1: LorentzVector,
    v2: LorentzVector,
    /// Unit spacelike vectors spanning the wings together with `v₁`, `v₂`.
    w1: LorentzVector,
    w2: LorentzVector,
}

pub fn crooked_plane(x: Vector3<f64>, v1: LorentzVector, v2: LorentzVector) -> Result<CrookedPlane> {
    CrookedPlane::new(x, v1, v2)
}

impl CrookedPlane {
    pub fn new(vertex: Vector3<f64>, v1: LorentzVector, v2: LorentzVector) -> Result<Self> {
        for v in [&v1, &v2] {
            if lorentz::causal_class(v) != CausalClass::FutureNull {
                return Err(Error::NotNull);
            }
        }
        let n = lorentz_cross(&v2, &v1);
        let q = quad(&n);
        if !(q > tol::NORM * v1.norm_squared() * v2.norm_squared()) {
            return Err(Error::DependentDirections);
        }
        let n = n / q.sqrt();
        let w1 = if wing_sign(&v1, &n) > 0.0 { n } else { -n };
        let w2 = if wing_sign(&v2, &n) > 0.0 { n } else { -n };
        Ok(CrookedPlane {
            vertex,
            v1,
            v2,
            w1,
            w2,
        })
    }

    pub fn vertex(&self) -> &Vector3<f64> {
        &self.vertex
    }

    pub fn null_dirs(&self) -> (LorentzVector, LorentzVector) {
        (self.v1, self.v2)
    }

    /// Wing directions `(w₁, w₂)`; `𝒲(vᵢ) = x + ℝvᵢ + ℝ₊wᵢ`.
    pub fn wing_dirs(&self) -> (LorentzVector, LorentzVector) {
        (self.w1, self.w2)
    }

    /// The spacelike normal of the stem plane `P`.
    pub fn spine(&self) -> LorentzVector {
        self.w1
    }

    /// `γ(C)`, built from the transported defining data.
    pub fn transform(&self, g: &AffineIsometry) -> Result<Self> {
        let a = g.linear();
        CrookedPlane::new(g.apply(&self.vertex), a * self.v1, a * self.v2)
    }

    /// `x + a v₁ + b v₂`: in `C₁` for `a, b ≥ 0`, in `C₂` for `a, b ≤ 0`.
    pub fn stem_point(&self, a: f64, b: f64) -> Vector3<f64> {
        self.vertex + self.v1 * a + self.v2 * b
    }

    /// `x + t vᵢ + s wᵢ` with `s ≥ 0`, for `i ∈ {1, 2}`.
    pub fn wing_point(&self, i: usize, t: f64, s: f64) -> Vector3<f64> {
        let (v, w) = if i == 1 {
            (self.v1, self.w1)
        } else {
            (self.v2, self.w2)
        };
        self.vertex + v * t + w * s
    }

    /// Affine samples of the four pieces, labelled, at extent `r` and resolution `n`.
    pub fn samples(&self, r: f64, n: usize) -> Vec<(Piece, Vector3<f64>)> {
        let mesh = affine_grid(self, r, n);
        mesh.vertices
            .into_iter()
            .zip(mesh.vertex_pieces)
            .map(|(v, p)| (p, v))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Piece {
    Stem,
    Wing1,
    Wing2,
}

impl Piece {
    pub fn name(&self) -> &'static str {
        match self {
            Piece::Stem => "stem",
            Piece::Wing1 => "wing1",
            Piece::Wing2 => "wing2",
        }
    }
}

/// A triangulated surface with per-triangle piece labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<Vector3<f64>>,
    pub triangles: Vec<[usize; 3]>,
    pub pieces: Vec<Piece>,
}

struct AffineGrid {
    vertices: Vec<Vector3<f64>>,
    vertex_pieces: Vec<Piece>,
    triangles: Vec<[usize; 3]>,
    pieces: Vec<Piece>,
}

/// Number of mesh vertices at resolution `n`: the shared apex, two stem
/// cones of `n(n+1)` vertices and two wings of `(2n+1)(n+1)` vertices.
pub fn mesh_vertex_count(n: usize) -> usize {
    1 + 2 * n * (n + 1) + 2 * (2 * n + 1) * (n + 1)
}

/// Grid parameter in `[−r, r]` for `u ∈ [−1, 1]`, uniform in ball radius along unit directions.
fn spread(u: f64, r: f64) -> f64 {
    u.signum() * (u.abs() * r.atan()).tan()
}

fn affine_grid(cp: &CrookedPlane, r: f64, n: usize) -> AffineGrid {
    let n = n.max(2);
    let mut g = AffineGrid {
        vertices: vec![cp.vertex],
        vertex_pieces: vec![Piece::Stem],
        triangles: Vec::new(),
        pieces: Vec::new(),
    };
    let nf = n as f64;
    for sign in [1.0, -1.0] {
        let base = g.vertices.len();
        for i in 1..=n {
            for j in 0..=n {
                let (rho, phi) = (spread(i as f64 / nf, r), j as f64 / nf);
                g.vertices
                    .push(cp.stem_point(sign * rho * (1.0 - phi), sign * rho * phi));
                g.vertex_pieces.push(Piece::Stem);
            }
        }
        let idx = |i: usize, j: usize| base + (i - 1) * (n + 1) + j;
        for j in 0..n {
            g.triangles.push([0, idx(1, j), idx(1, j + 1)]);
        }
        for i in 1..n {
            for j in 0..n {
                g.triangles.push([idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]);
                g.triangles.push([idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)]);
            }
        }
    }
    g.pieces.resize(g.triangles.len(), Piece::Stem);
    for (wing, piece) in [(1, Piece::Wing1), (2, Piece::Wing2)] {
        let base = g.vertices.len();
        for a in 0..=2 * n {
            for b in 0..=n {
                let t = spread((a as f64 - nf) / nf, r);
                let s = spread(b as f64 / nf, r);
                g.vertices.push(cp.wing_point(wing, t, s));
                g.vertex_pieces.push(piece);
            }
        }
        let idx = |a: usize, b: usize| base + a * (n + 1) + b;
        for a in 0..2 * n {
            for b in 0..n {
                g.triangles.push([idx(a, b), idx(a + 1, b), idx(a + 1, b + 1)]);
                g.triangles.push([idx(a, b), idx(a + 1, b + 1), idx(a, b + 1)]);
                g.pieces.extend([piece, piece]);
            }
        }
    }
    g
}

fn to_ball(x: &Vector3<f64>) -> Vector3<f64> {
    normalize_to_ball(&SpherePoint::affine(x)).expect("affine points lie in the hemisphere")
}

/// Triangulation of `cp` with stem radius and wing extent `r` (multiples of
/// the stored null directions and unit wing directions), in ball coordinates.
///
/// Grid lines sit at parameters `tan(k·atan(r)/n)`, so successive
/// resolutions are nested and spacing is roughly uniform in the ball.
pub fn mesh(cp: &CrookedPlane, r: f64, n: usize) -> Mesh {
    let g = affine_grid(cp, r, n);
    Mesh {
        vertices: g.vertices.iter().map(to_ball).collect(),
        triangles: g.triangles,
        pieces: g.pieces,
    }
}

impl Mesh {
    /// Images of the vertices under `g`, keeping the combinatorics.
    pub fn transform(&self, g: &AffineIsometry) -> Result<Mesh> {
        let map = g.to_projective();
        let vertices = self
            .vertices
            .iter()
            .map(|b| normalize_to_ball(&map.apply(&from_ball(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mesh {
            vertices,
            triangles: self.triangles.clone(),
            pieces: self.pieces.clone(),
        })
    }

    pub fn triangle(&self, k: usize) -> [Vector3<f64>; 3] {
        let [a, b, c] = self.triangles[k];
        [self.vertices[a], self.vertices[b], self.vertices[c]]
    }

    /// Twice the area of triangle `k`.
    pub fn double_area(&self, k: usize) -> f64 {
        let [a, b, c] = self.triangle(k);
        (b - a).cross(&(c - a)).norm()
    }

    /// Indices in range and every triangle of area above `tol::GEO²`.
    pub fn is_valid(&self) -> bool {
        let n = self.vertices.len();
        self.triangles.iter().all(|t| t.iter().all(|&i| i < n))
            && (0..self.triangles.len()).all(|k| self.double_area(k) > tol::GEO * tol::GEO)
    }

    /// Vertices used by triangles of `piece`.
    pub fn piece_vertices(&self, piece: Piece) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .triangles
            .iter()
            .zip(&self.pieces)
            .filter(|(_, p)| **p == piece)
            .flat_map(|(t, _)| *t)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Closest point of the triangle `abc` to `p`.
fn closest_on_triangle(
    p: &Vector3<f64>,
    a: &Vector3<f64>,
    b: &Vector3<f64>,
    c: &Vector3<f64>,
) -> Vector3<f64> {
    let (ab, ac, ap) = (b - a, c - a, p - a);
    let (d1, d2) = (ab.dot(&ap), ac.dot(&ap));
    if d1 <= 0.0 && d2 <= 0.0 {
        return *a;
    }
    let bp = p - b;
    let (d3, d4) = (ab.dot(&bp), ac.dot(&bp));
    if d3 >= 0.0 && d4 <= d3 {
        return *b;
    }
    let vc = d1 * d4 - d3 * d2;
    if vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0 {
        return a + ab * (d1 / (d1 - d3));
    }
    let cp = p - c;
    let (d5, d6) = (ab.dot(&cp), ac.dot(&cp));
    if d6 >= 0.0 && d5 <= d6 {
        return *c;
    }
    let vb = d5 * d2 - d1 * d6;
    if vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0 {
        return a + ac * (d2 / (d2 - d6));
    }
    let va = d3 * d6 - d5 * d4;
    if va <= 0.0 && d4 - d3 >= 0.0 && d5 - d6 >= 0.0 {
        return b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)));
    }
    let denom = 1.0 / (va + vb + vc);
    a + ab * (vb * denom) + ac * (vc * denom)
}

pub fn point_triangle_distance(
    p: &Vector3<f64>,
    a: &Vector3<f64>,
    b: &Vector3<f64>,
    c: &Vector3<f64>,
) -> f64 {
    (p - closest_on_triangle(p, a, b, c)).norm()
}

fn vertex_to_mesh(vertices: &[Vector3<f64>], m: &Mesh) -> f64 {
    let tris: Vec<([Vector3<f64>; 3], Vector3<f64>, Vector3<f64>)> = (0..m.triangles.len())
        .map(|k| {
            let t = m.triangle(k);
            (t, t[0].inf(&t[1]).inf(&t[2]), t[0].sup(&t[1]).sup(&t[2]))
        })
        .collect();
    par::map(vertices, |p| {
        let mut best = f64::INFINITY;
        for ([a, b, c], lo, hi) in &tris {
            let gap = (lo - p).sup(&(p - hi)).sup(&Vector3::zeros());
            if gap.norm() < best {
                best = best.min(point_triangle_distance(p, a, b, c));
            }
        }
        best
    })
    .into_iter()
    .fold(f64::INFINITY, f64::min)
}

/// Symmetric minimum vertex-to-triangle distance in ball coordinates.
pub fn pairwise_clearance(m1: &Mesh, m2: &Mesh) -> f64 {
    vertex_to_mesh(&m1.vertices, m2).min(vertex_to_mesh(&m2.vertices, m1))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClearanceStudy {
    /// `(n, clearance)` per resolution.
    pub values: Vec<(usize, f64)>,
    pub value: f64,
    /// Last two values agree within `max(tol::GEO, rel · value)`.
    pub stable: bool,
}

/// Clearance at resolutions `n₀, 2n₀, …` up to `n_max`, stopping once stable.
pub fn clearance_study(
    a: &CrookedPlane,
    b: &CrookedPlane,
    r: f64,
    n0: usize,
    n_max: usize,
    rel: f64,
) -> ClearanceStudy {
    let mut values: Vec<(usize, f64)> = Vec::new();
    let mut n = n0.max(2);
    let mut stable = false;
    while n <= n_max {
        let c = pairwise_clearance(&mesh(a, r, n), &mesh(b, r, n));
        if let Some(&(_, prev)) = values.last() {
            let prev: f64 = prev;
            if (c - prev).abs() <= (rel * c).max(tol::GEO) {
                stable = true;
            }
        }
        values.push((n, c));
        if stable {
            break;
        }
        n *= 2;
    }
    let value = values.last().map_or(f64::NAN, |v| v.1);
    ClearanceStudy {
        values,
        value,
        stable,
    }
}

/// Euclidean Hausdorff distance between vertex sets.
pub fn vertex_hausdorff(a: &[Vector3<f64>], b: &[Vector3<f64>]) -> f64 {
    let directed = |x: &[Vector3<f64>], y: &[Vector3<f64>]| {
        par::map(x, |p| {
            y.iter()
                .map(|q| (p - q).norm_squared())
                .fold(f64::INFINITY, f64::min)
        })
        .into_iter()
        .fold(0.0, f64::max)
        .sqrt()
    };
    directed(a, b).max(directed(b, a))
}

/// Vertex-set Hausdorff distances between meshes at successive resolutions in `ns`.
pub fn refinement_study(cp: &CrookedPlane, r: f64, ns: &[usize]) -> Vec<(usize, f64)> {
    let meshes: Vec<Mesh> = ns.iter().map(|&n| mesh(cp, r, n)).collect();
    ns.windows(2)
        .zip(meshes.windows(2))
        .map(|(n, m)| (n[0], vertex_hausdorff(&m[0].vertices, &m[1].vertices)))
        .collect()
}

/// `α ∪ α₋ ∪ ε(∂₁α) ∪ ε(∂₂α)` on `S²_∞` for a chord `α` of `∂𝕊₊`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrookedCircle {
    /// `α`, from `∂₁α` to `∂₂α`.
    pub chord: Segment,
    pub chord_minus: Segment,
    /// `ε(∂₂α)`, from `∂₂α` to its antipode.
    pub wing_end: NullArc,
    /// `ε(∂₁α)`, from `∂₁α` to its antipode.
    pub wing_start: NullArc,
    /// Loop samples in order `α`, `ε(∂₂α)`, `α₋` reversed, `ε(∂₁α)` reversed.
    pub cloud: Vec<SpherePoint>,
    /// Endpoints of the four pieces in loop order.
    pieces: [(SpherePoint, SpherePoint); 4],
}

/// Crooked circle of the chord from `start` to `end`, both on `∂𝕊₊`.
pub fn crooked_circle(start: &SpherePoint, end: &SpherePoint, n: usize) -> Result<CrookedCircle> {
    for p in [start, end] {
        if !p.is_at_infinity() {
            return Err(Error::NotOnBoundarySphere);
        }
        lorentz::null_angle(&p.spatial())?;
    }
    let chord = Segment::new(*start, *end).map_err(|_| Error::DegenerateChord)?;
    let chord_minus = chord.antipode();
    let arc = |p: &SpherePoint| {
        NullArc::new(
            lorentz::null_angle(&p.spatial()).expect("checked null"),
            n,
        )
    };
    let (wing_start, wing_end) = (arc(start), arc(end));
    let mut cloud = chord.sample(n + 2);
    cloud.extend(wing_end.curve().sample(n + 2).into_iter().skip(1));
    cloud.extend(chord_minus.reversed().sample(n + 2).into_iter().skip(1));
    let mut back = wing_start.curve().sample(n + 2);
    back.reverse();
    cloud.extend(back.into_iter().skip(1));
    let pieces = [
        (*chord.start(), *chord.end()),
        (*wing_end.base(), wing_end.far_end()),
        (*chord_minus.end(), *chord_minus.start()),
        (wing_start.far_end(), *wing_start.base()),
    ];
    Ok(CrookedCircle {
        chord,
        chord_minus,
        wing_end,
        wing_start,
        cloud,
        pieces,
    })
}

impl CrookedCircle {
    /// Largest distance between the end of a piece and the start of the next.
    pub fn closure_gap(&self) -> f64 {
        (0..4)
            .map(|i| sphere_distance(&self.pieces[i].1, &self.pieces[(i + 1) % 4].0))
            .fold(0.0, f64::max)
    }

    /// Exact distance from `p` to the loop.
    pub fn distance_to(&self, p: &SpherePoint) -> f64 {
        [
            self.chord.distance_to(p),
            self.chord_minus.distance_to(p),
            self.wing_start.distance_to(p),
            self.wing_end.distance_to(p),
        ]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
    }

    /// Largest spacing of consecutive loop samples.
    pub fn sample_spacing(&self) -> f64 {
        self.cloud
            .windows(2)
            .map(|w| sphere_distance(&w[0], &w[1]))
            .fold(0.0, f64::max)
    }
}

/// Directions of the mesh vertices with ball norm above `threshold`.
pub fn far_directions(m: &Mesh, threshold: f64) -> Vec<SpherePoint> {
    m.vertices
        .iter()
        .filter(|v| v.norm() > threshold)
        .map(|v| SpherePoint::direction(v).expect("nonzero"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> CrookedPlane {
        CrookedPlane::new(
            Vector3::zeros(),
            Vector3::new(1.0, 0.0, 1.0),
            Vector3::new(-1.0, 0.0, 1.0),
        )
        .unwrap()
    }

    #[test]
    fn wings_of_xz_example_point_along_y() {
        let (w1, w2) = example().wing_dirs();
        assert!((w1 - Vector3::y()).norm() < 1e-15);
        assert!((w2 + Vector3::y()).norm() < 1e-15);
    }

    #[test]
    fn stem_is_causal_quadrant() {
        let cp = example();
        for (piece, p) in cp.samples(3.0, 6) {
            if piece == Piece::Stem {
                assert!(p.y.abs() < 1e-15 && p.x.abs() <= p.z.abs() * (1.0 + 1e-15));
            }
        }
    }

    #[test]
    fn vertex_count_formula() {
        for n in [2, 3, 8] {
            let m = mesh(&example(), 10.0, n);
            assert_eq!(m.vertices.len(), mesh_vertex_count(n));
            assert!(m.is_valid());
            assert!(m.vertices.iter().all(|v| v.norm() <= 1.0));
        }
    }

    #[test]
    fn self_clearance_is_zero() {
        let m = mesh(&example(), 5.0, 4);
        assert_eq!(pairwise_clearance(&m, &m), 0.0);
    }

    #[test]
    fn point_triangle_regions() {
        let (a, b, c) = (Vector3::zeros(), Vector3::x(), Vector3::y());
        let d = |p: Vector3<f64>| point_triangle_distance(&p, &a, &b, &c);
        assert!((d(Vector3::new(0.2, 0.2, 1.0)) - 1.0).abs() < 1e-15);
        assert!((d(Vector3::new(-1.0, -1.0, 0.0)) - 2f64.sqrt()).abs() < 1e-15);
        assert!((d(Vector3::new(1.0, 1.0, 0.0)) - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((d(Vector3::new(0.5, -2.0, 0.0)) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn diameter_circle_closes() {
        let p = lorentz::boundary_point(0.0);
        let q = lorentz::boundary_point(std::f64::consts::PI);
        let c = crooked_circle(&p, &q, 64).unwrap();
        assert!(c.closure_gap() < 1e-15);
        assert!(c.sample_spacing() < 0.1);
        assert_eq!(crooked_circle(&p, &p, 8), Err(Error::DegenerateChord));
    }
}
