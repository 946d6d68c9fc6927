//! Projective-sphere geometry for affine Lorentzian isometry groups.
//!
//! Points of the real projective 3-sphere `S³` are positive rays in `ℝ⁴`.
//! Affine 3-space `E` sits inside as the open hemisphere `t > 0` and the
//! sphere of directions `S²_∞` is the equator `t = 0`. On `S²_∞` the Lorentz
//! form `x² + y² − z²` splits directions into the future and past timelike
//! disks `𝕊₊`, `𝕊₋` and the annulus `𝕊₀` of spacelike directions.
//!
//! The crate is organised bottom-up:
//!
//! * [`sphere`]: points, segments, projective maps and point-cloud metrics on `S³`.
//! * [`lorentz`]: the form, causal classes, wings and the `ε`-arc foliation of `𝕊₀`.
//! * [`boosts`]: affine boosts, Margulis invariants, projective extensions and
//!   the convergence experiment for sequences of boosts.
//! * [`fuchsian`]: free-group words, ping-pong certificates, limit sets and gap chords.
//! * [`margulis`]: invariant sweeps, the boundary domain, strips and properness censuses.
//! * [`crooked`]: crooked planes, crooked circles, meshes and clearances.
//! * [`config`] and [`scene`]: the JSON group configuration and scene outputs.

pub mod boosts;
pub mod config;
pub mod crooked;
mod error;
pub mod fuchsian;
pub mod lorentz;
pub mod margulis;
mod par;
pub mod scene;
pub mod sphere;

pub use error::{Error, Result};

/// Numerical tolerances shared by every module.
pub mod tol {
    /// Renormalization threshold for stored unit vectors.
    pub const NORM: f64 = 1e-12;
    /// Geometric predicates (incidence, containment, equality of points).
    pub const GEO: f64 = 1e-6;
    /// Relative singular-value threshold for numerical rank.
    pub const RANK: f64 = 1e-9;
    /// Relative threshold below which `v·v` counts as null.
    pub const CAUSAL: f64 = 1e-9;
    /// Minimum margin of a hemisphere witness, `u·vᵢ ≥ HEMI`.
    pub const HEMI: f64 = 1e-6;
    /// Overlap tolerance in properness censuses.
    pub const OVERLAP: f64 = 1e-4;
    /// Separation of attractor and repeller estimates.
    pub const SEP: f64 = 1e-4;
    /// Narrowest limit-set gap that is treated as resolved, in radians.
    pub const GAP_MIN: f64 = 1e-3;
    /// Default number of samples on an `ε`-arc.
    pub const ARC_SAMPLES: usize = 256;
}
