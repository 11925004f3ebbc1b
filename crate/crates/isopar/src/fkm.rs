//! The degree-4 isoparametric polynomial of a Clifford system,
//!
//! ```text
//! F(x) = ⟨x,x⟩² − 2 Σ_{i=0}^{m} ⟨P_i x, x⟩²,      x ∈ R^N,  N = 2kδ(m),
//! ```
//!
//! together with its gradient, Hessian, Laplacian, and a verifier for the
//! Cartan-Münzner identities. Expanding |∇F|² with the Clifford relations
//! (⟨P_i x, P_j x⟩ = 0 for i ≠ j because P_iP_j is skew, |P_i x| = |x|)
//! gives the two identities the verifier checks:
//!
//! ```text
//! |∇F(x)|² = 16 ⟨x,x⟩³
//! ΔF(x)    = (4N − 16m − 8) ⟨x,x⟩ = 8 (m_− − m_+) ⟨x,x⟩
//! ```
//!
//! with the multiplicity convention (m_+, m_−) = (m, n/2 − m), n = N − 2.
//! Both constants are re-derived here, not copied: `verify_identities_exact`
//! recomputes the identities in exact integer arithmetic at random integer
//! points, which for fixed-degree polynomials is a sound identity test.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::clifford::{CliffordSystem, CliffordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FkmError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error("degenerate multiplicities: n/2 - m = {second} < 1 for (m,k)=({m},{k})")]
    DegenerateMultiplicity { m: u64, k: u64, second: i64 },
    #[error("vector has length {found}, polynomial lives on R^{expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("exact verification supports dim <= {max}, system has dim {dim}")]
    ExactDimTooLarge { dim: usize, max: usize },
}

/// The quartic polynomial of a Clifford system on R^N, N = n + 2.
#[derive(Debug, Clone)]
pub struct FkmPolynomial {
    system: CliffordSystem,
    mats: Vec<DMatrix<f64>>,
    traces: Vec<f64>,
}

impl FkmPolynomial {
    /// Wrap a Clifford system, enforcing nondegenerate multiplicities
    /// (m ≥ 1 and n/2 − m ≥ 1).
    pub fn new(system: CliffordSystem) -> Result<Self, FkmError> {
        let n = system.dim() as i64 - 2;
        let second = n / 2 - system.m() as i64;
        if n < 2 || second < 1 {
            return Err(FkmError::DegenerateMultiplicity {
                m: system.m(),
                k: system.k(),
                second,
            });
        }
        let mats: Vec<DMatrix<f64>> = system.matrices().iter().map(|p| p.map(|e| e as f64)).collect();
        let traces = system.matrices().iter().map(|p| p.trace() as f64).collect();
        Ok(Self { system, mats, traces })
    }

    /// Build the system for (m, k) and wrap it.
    pub fn build(m: u64, k: u64) -> Result<Self, FkmError> {
        Ok(Self::new(crate::clifford::build_clifford_system(m, k)?)?)
    }

    pub fn system(&self) -> &CliffordSystem {
        &self.system
    }

    /// Ambient dimension N = n + 2.
    pub fn ambient_dim(&self) -> usize {
        self.system.dim()
    }

    /// Dimension n of the regular level hypersurfaces in S^{N−1}.
    pub fn hypersurface_dim(&self) -> usize {
        self.system.dim() - 2
    }

    /// Multiplicity pair in the sign convention (m_+, m_−) = (m, n/2 − m).
    pub fn mult_pair(&self) -> (u64, u64) {
        let m = self.system.m();
        let n = self.hypersurface_dim() as u64;
        (m, n / 2 - m)
    }

    /// The constant 8(m_− − m_+) with ΔF = const · ⟨x,x⟩.
    pub fn laplacian_constant(&self) -> f64 {
        let (mp, mm) = self.mult_pair();
        8.0 * (mm as f64 - mp as f64)
    }

    fn check_len(&self, x: &DVector<f64>) -> Result<(), FkmError> {
        if x.len() != self.ambient_dim() {
            return Err(FkmError::LengthMismatch {
                expected: self.ambient_dim(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// F(x) = ⟨x,x⟩² − 2 Σ ⟨P_i x, x⟩².
    pub fn eval(&self, x: &DVector<f64>) -> Result<f64, FkmError> {
        self.check_len(x)?;
        let r2 = x.dot(x);
        let s: f64 = self.mats.iter().map(|p| (p * x).dot(x).powi(2)).sum();
        Ok(r2 * r2 - 2.0 * s)
    }

    /// ∇F(x) = 4⟨x,x⟩x − 8 Σ ⟨P_i x, x⟩ P_i x.
    pub fn grad(&self, x: &DVector<f64>) -> Result<DVector<f64>, FkmError> {
        self.check_len(x)?;
        let r2 = x.dot(x);
        let mut g = x * (4.0 * r2);
        for p in &self.mats {
            let px = p * x;
            let a = px.dot(x);
            g -= px * (8.0 * a);
        }
        Ok(g)
    }

    /// Hess F(x) = 4(⟨x,x⟩ I + 2 x xᵀ) − 8 Σ (2 (P_i x)(P_i x)ᵀ + ⟨P_i x, x⟩ P_i).
    pub fn hessian(&self, x: &DVector<f64>) -> Result<DMatrix<f64>, FkmError> {
        self.check_len(x)?;
        let dim = self.ambient_dim();
        let r2 = x.dot(x);
        let mut h = DMatrix::identity(dim, dim) * (4.0 * r2);
        h += x * x.transpose() * 8.0;
        for p in &self.mats {
            let px = p * x;
            let a = px.dot(x);
            h -= &px * px.transpose() * 16.0;
            h -= p * (8.0 * a);
        }
        Ok(h)
    }

    /// ΔF(x) = trace Hess F(x), computed term by term.
    pub fn laplacian(&self, x: &DVector<f64>) -> Result<f64, FkmError> {
        self.check_len(x)?;
        let dim = self.ambient_dim() as f64;
        let r2 = x.dot(x);
        let mut lap = 4.0 * (dim + 2.0) * r2;
        for (p, t) in self.mats.iter().zip(&self.traces) {
            let px = p * x;
            lap -= 8.0 * (2.0 * px.dot(&px) + px.dot(x) * t);
        }
        Ok(lap)
    }
}

/// Residuals and verdict from random-point verification of the
/// Cartan-Münzner identities.
#[derive(Debug, Clone)]
pub struct CartanMunznerReport {
    pub samples: usize,
    pub sphere_samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// max over samples of | |∇F|² − 16⟨x,x⟩³ | / 16⟨x,x⟩³
    pub max_rel_grad_residual: f64,
    /// max over samples of |ΔF/⟨x,x⟩ − 8(m_−−m_+)| / max(1, |8(m_−−m_+)|)
    pub max_rel_laplacian_residual: f64,
    pub laplacian_expected: f64,
    pub sphere_min: f64,
    pub sphere_max: f64,
    pub passed: bool,
}

/// Deterministic point with coordinates in (−1, 1), stream (seed, index).
fn cube_point(dim: usize, seed: u64, index: u64) -> DVector<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let x = DVector::from_fn(dim, |_, _| rng.gen_range(-1.0..1.0));
        if x.dot(&x) > 1e-6 {
            return x;
        }
    }
}

/// Deterministic uniform point on the unit sphere, stream (seed, index).
pub(crate) fn sphere_point(dim: usize, seed: u64, index: u64) -> DVector<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let x = DVector::from_fn(dim, |_, _| rng.sample::<f64, _>(StandardNormal));
        let norm = x.norm();
        if norm > 1e-6 {
            return x / norm;
        }
    }
}

const SPHERE_STREAM_OFFSET: u64 = 1 << 40;

/// Check the Cartan-Münzner identities at seeded random points:
/// (a) |∇F(x)|² = 16⟨x,x⟩³ to relative `tol`,
/// (b) ΔF(x)/⟨x,x⟩ equals 8(m_− − m_+) to `tol`,
/// (c) F maps the unit sphere into [−1−tol, 1+tol].
pub fn verify_cartan_munzner(
    f: &FkmPolynomial,
    samples: usize,
    sphere_samples: usize,
    seed: u64,
    tol: f64,
) -> CartanMunznerReport {
    let dim = f.ambient_dim();
    let expected = f.laplacian_constant();
    let lap_scale = expected.abs().max(1.0);

    let mut max_grad = 0.0f64;
    let mut max_lap = 0.0f64;
    for i in 0..samples {
        let x = cube_point(dim, seed, i as u64);
        let r2 = x.dot(&x);
        let g = f.grad(&x).expect("dimension fixed by construction");
        let rhs = 16.0 * r2.powi(3);
        max_grad = max_grad.max((g.dot(&g) - rhs).abs() / rhs);
        let lap = f.laplacian(&x).expect("dimension fixed by construction");
        max_lap = max_lap.max((lap / r2 - expected).abs() / lap_scale);
    }

    let mut smin = f64::INFINITY;
    let mut smax = f64::NEG_INFINITY;
    for i in 0..sphere_samples {
        let x = sphere_point(dim, seed, SPHERE_STREAM_OFFSET + i as u64);
        let v = f.eval(&x).expect("dimension fixed by construction");
        smin = smin.min(v);
        smax = smax.max(v);
    }

    let passed = max_grad <= tol
        && max_lap <= tol
        && (sphere_samples == 0 || (smin >= -1.0 - tol && smax <= 1.0 + tol));
    CartanMunznerReport {
        samples,
        sphere_samples,
        seed,
        tol,
        max_rel_grad_residual: max_grad,
        max_rel_laplacian_residual: max_lap,
        laplacian_expected: expected,
        sphere_min: smin,
        sphere_max: smax,
        passed,
    }
}

/// Outcome of the exact integer identity test.
#[derive(Debug, Clone)]
pub struct ExactIdentityReport {
    pub samples: usize,
    pub seed: u64,
    pub gradient_identity: bool,
    pub laplacian_identity: bool,
    pub euler_identity: bool,
}

impl ExactIdentityReport {
    pub fn passed(&self) -> bool {
        self.gradient_identity && self.laplacian_identity && self.euler_identity
    }
}

const EXACT_DIM_MAX: usize = 16;
const EXACT_COORD_BOUND: i64 = 64;

fn apply_int(p: &crate::clifford::IntMatrix, x: &[i128]) -> Vec<i128> {
    let (rows, cols) = p.shape();
    let mut out = vec![0i128; rows];
    for r in 0..rows {
        let mut acc = 0i128;
        for c in 0..cols {
            let e = p[(r, c)];
            if e != 0 {
                acc += e as i128 * x[c];
            }
        }
        out[r] = acc;
    }
    out
}

/// Verify the polynomial identities in exact integer arithmetic at random
/// integer points with coordinates in [−64, 64] (dim ≤ 16, so all values
/// fit comfortably in i128). Checks:
///
/// * Σ (∇F)_c² = 16 ⟨x,x⟩³
/// * ΔF = (4N − 16m − 8) ⟨x,x⟩
/// * ⟨∇F, x⟩ = 4 F(x)   (Euler, degree 4)
pub fn verify_identities_exact(
    f: &FkmPolynomial,
    samples: usize,
    seed: u64,
) -> Result<ExactIdentityReport, FkmError> {
    let dim = f.ambient_dim();
    if dim > EXACT_DIM_MAX {
        return Err(FkmError::ExactDimTooLarge {
            dim,
            max: EXACT_DIM_MAX,
        });
    }
    let mats = f.system().matrices();
    let n_mats = mats.len() as i128;
    let m = f.system().m() as i128;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grad_ok = true;
    let mut lap_ok = true;
    let mut euler_ok = true;
    for _ in 0..samples {
        let x: Vec<i128> = (0..dim)
            .map(|_| rng.gen_range(-EXACT_COORD_BOUND..=EXACT_COORD_BOUND) as i128)
            .collect();
        let r2: i128 = x.iter().map(|v| v * v).sum();

        let images: Vec<Vec<i128>> = mats.iter().map(|p| apply_int(p, &x)).collect();
        let inner: Vec<i128> = images
            .iter()
            .map(|px| px.iter().zip(&x).map(|(a, b)| a * b).sum())
            .collect();

        // gradient: 4 r2 x - 8 sum a_i P_i x
        let mut grad = vec![0i128; dim];
        for c in 0..dim {
            grad[c] = 4 * r2 * x[c];
        }
        for (px, a) in images.iter().zip(&inner) {
            for c in 0..dim {
                grad[c] -= 8 * a * px[c];
            }
        }
        let grad_sq: i128 = grad.iter().map(|v| v * v).sum();
        grad_ok &= grad_sq == 16 * r2 * r2 * r2;

        // laplacian: traces vanish for built systems, but keep them so a
        // corrupted system is caught honestly.
        let mut lap = 4 * (dim as i128 + 2) * r2;
        for (p, (px, a)) in mats.iter().zip(images.iter().zip(&inner)) {
            let norm_sq: i128 = px.iter().map(|v| v * v).sum();
            lap -= 8 * (2 * norm_sq + a * p.trace() as i128);
        }
        lap_ok &= lap == (4 * dim as i128 - 16 * m - 8) * r2;
        let _ = n_mats;

        let f_val = r2 * r2 - 2 * inner.iter().map(|a| a * a).sum::<i128>();
        let gx: i128 = grad.iter().zip(&x).map(|(a, b)| a * b).sum();
        euler_ok &= gx == 4 * f_val;
    }

    Ok(ExactIdentityReport {
        samples,
        seed,
        gradient_identity: grad_ok,
        laplacian_identity: lap_ok,
        euler_identity: euler_ok,
    })
}
