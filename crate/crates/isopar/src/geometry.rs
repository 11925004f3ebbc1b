//! Geometry of the level hypersurfaces M = F⁻¹(c) ∩ S^{N−1}: seeded Newton
//! projection onto the two constraints, shape operators from the analytic
//! Hessian, and principal-curvature spectra with eigenvalue clustering.
//!
//! For a regular level c ∈ (−1, 1) the hypersurface has n = N − 2
//! dimensions inside the unit sphere. The unit normal within the sphere is
//! the normalized spherical gradient ξ = (∇F − ⟨∇F,x⟩x)/|·|, and the shape
//! operator is A(v) = −(D_v ξ)^tangential, assembled in a deterministic
//! orthonormal basis of the tangent space.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::fkm::{sphere_point, FkmError, FkmPolynomial};

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("level c = {0} is not a regular value: need -1 < c < 1")]
    InvalidLevel(f64),
    #[error("sample count must be >= 1")]
    EmptySample,
    #[error("Newton projection did not converge for sample {index}")]
    NonConvergence { index: usize },
    #[error("spherical gradient degenerates: point is not regular")]
    IrregularPoint,
    #[error("eigenvalue gap {gap} falls inside the ambiguous band [tol, 10*tol]")]
    AmbiguousClustering { gap: f64 },
    #[error("spectra disagree across sampled points: {0}")]
    InconsistentSpectra(String),
    #[error(transparent)]
    Fkm(#[from] FkmError),
}

/// Projection tolerances for the two constraints |x|² = 1 and F(x) = c.
#[derive(Debug, Clone, Copy)]
pub struct ProjectionTols {
    pub sphere: f64,
    pub level: f64,
}

impl Default for ProjectionTols {
    fn default() -> Self {
        Self {
            sphere: 1e-12,
            level: 1e-10,
        }
    }
}

/// A point on the level hypersurface, with its post-projection residuals.
#[derive(Debug, Clone)]
pub struct SurfacePoint {
    pub position: DVector<f64>,
    pub level: f64,
    pub residual_sphere: f64,
    pub residual_level: f64,
}

const MAX_NEWTON_ITERS: usize = 50;
const MAX_STEP_HALVINGS: usize = 5;
const REGULARITY_EPS: f64 = 1e-8;

fn project_point(
    f: &FkmPolynomial,
    c: f64,
    start: DVector<f64>,
    tols: &ProjectionTols,
    index: usize,
) -> Result<SurfacePoint, GeometryError> {
    let mut x = start;
    for _ in 0..MAX_NEWTON_ITERS {
        let r2 = x.dot(&x);
        let h1 = r2 - 1.0;
        let h2 = f.eval(&x)? - c;
        if h1.abs() <= tols.sphere && h2.abs() <= tols.level {
            let g = f.grad(&x)?;
            let w = &g - &x * (g.dot(&x) / r2);
            if w.norm() < REGULARITY_EPS {
                return Err(GeometryError::IrregularPoint);
            }
            return Ok(SurfacePoint {
                position: x,
                level: c,
                residual_sphere: h1.abs(),
                residual_level: h2.abs(),
            });
        }

        // Newton correction in span{x, spherical gradient}.
        let g = f.grad(&x)?;
        let gx = g.dot(&x);
        let w = &g - &x * (gx / r2);
        let w2 = w.dot(&w);
        if w2 < 1e-24 {
            return Err(GeometryError::NonConvergence { index });
        }
        let alpha = -h1 / (2.0 * r2);
        let beta = (-h2 - alpha * gx) / w2;
        let mut step = &x * alpha + &w * beta;

        // Damped update: halve the step while the residual grows.
        let res0 = h1.hypot(h2);
        for halving in 0..=MAX_STEP_HALVINGS {
            let candidate = &x + &step;
            let cr2 = candidate.dot(&candidate);
            let ch2 = f.eval(&candidate)? - c;
            let res = (cr2 - 1.0).hypot(ch2);
            if res < res0 || halving == MAX_STEP_HALVINGS {
                x = candidate;
                break;
            }
            step *= 0.5;
        }
    }
    Err(GeometryError::NonConvergence { index })
}

/// Sample `count` points of F⁻¹(c) ∩ S^{N−1} by Newton projection from
/// seeded random unit starts (stream (seed, index) per sample).
pub fn sample_level_set(
    f: &FkmPolynomial,
    c: f64,
    count: usize,
    seed: u64,
    tols: &ProjectionTols,
) -> Result<Vec<SurfacePoint>, GeometryError> {
    if !(-1.0 < c && c < 1.0) {
        return Err(GeometryError::InvalidLevel(c));
    }
    if count == 0 {
        return Err(GeometryError::EmptySample);
    }
    let dim = f.ambient_dim();
    (0..count)
        .map(|i| project_point(f, c, sphere_point(dim, seed, i as u64), tols, i))
        .collect()
}

/// Unit normal of the level set within the sphere at `x` (normalized
/// spherical gradient). Fails at irregular points.
pub fn unit_normal(f: &FkmPolynomial, x: &DVector<f64>) -> Result<DVector<f64>, GeometryError> {
    let g = f.grad(x)?;
    let r2 = x.dot(x);
    let w = &g - x * (g.dot(x) / r2);
    let norm = w.norm();
    if norm < REGULARITY_EPS {
        return Err(GeometryError::IrregularPoint);
    }
    Ok(w / norm)
}

/// Deterministic orthonormal basis of the tangent space T = {x, ξ}^⊥,
/// by Gram-Schmidt over the standard basis.
pub fn tangent_basis(
    f: &FkmPolynomial,
    p: &SurfacePoint,
) -> Result<(DVector<f64>, Vec<DVector<f64>>), GeometryError> {
    let x = &p.position;
    let xi = unit_normal(f, x)?;
    let dim = f.ambient_dim();
    let n = dim - 2;
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(n);
    for i in 0..dim {
        if basis.len() == n {
            break;
        }
        let mut v = DVector::zeros(dim);
        v[i] = 1.0;
        v -= x * x.dot(&v);
        v -= &xi * xi.dot(&v);
        for t in &basis {
            v -= t * t.dot(&v);
        }
        let norm = v.norm();
        if norm > 1e-6 {
            basis.push(v / norm);
        }
    }
    debug_assert_eq!(basis.len(), n);
    Ok((xi, basis))
}

/// Shape operator of M = F⁻¹(c) ∩ S^{N−1} at `p`, as an n×n matrix in the
/// deterministic tangent basis: A(v) = −(D_v ξ)^tangential, with the
/// derivative of the normal field taken from the analytic Hessian.
pub fn shape_operator(f: &FkmPolynomial, p: &SurfacePoint) -> Result<DMatrix<f64>, GeometryError> {
    let x = &p.position;
    let (xi, basis) = tangent_basis(f, p)?;
    let n = basis.len();
    let r2 = x.dot(x);
    let g = f.grad(x)?;
    let gx = g.dot(x);
    let w = &g - x * (gx / r2);
    let wn = w.norm();
    let hess = f.hessian(x)?;

    let mut a = DMatrix::zeros(n, n);
    for (b, v) in basis.iter().enumerate() {
        // D_v w for the extended field w(y) = ∇F(y) − (⟨∇F,y⟩/⟨y,y⟩) y,
        // evaluated on the sphere with v ⊥ x.
        let hv = &hess * v;
        let coeff = (hv.dot(x) + g.dot(v)) / r2;
        let dw = &hv - x * coeff - v * (gx / r2);
        // remove the normal component, normalize, project to T
        let dxi = (&dw - &xi * xi.dot(&dw)) / wn;
        for (r, t) in basis.iter().enumerate() {
            a[(r, b)] = -t.dot(&dxi);
        }
    }
    Ok(a)
}

/// One eigenvalue cluster of the shape operator.
#[derive(Debug, Clone, Copy)]
pub struct CurvatureCluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// The clustered principal-curvature spectrum at one point. Clusters are
/// sorted by arccot of their value (equivalently by decreasing value), the
/// order in which the curvature angles θ, θ + π/g, … appear.
#[derive(Debug, Clone)]
pub struct CurvatureSpectrum {
    /// All n eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<CurvatureCluster>,
    /// arccot of the largest principal curvature, in (0, π/g).
    pub theta: f64,
}

impl CurvatureSpectrum {
    pub fn g(&self) -> usize {
        self.clusters.len()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.multiplicity).collect()
    }

    /// Curvature angles arccot(λ) ∈ (0, π) in cluster order (ascending).
    pub fn arccots(&self) -> Vec<f64> {
        self.clusters.iter().map(|c| arccot(c.value)).collect()
    }
}

fn arccot(v: f64) -> f64 {
    // branch with range (0, pi)
    (1.0f64).atan2(v)
}

fn cluster_eigenvalues(
    sorted: &[f64],
    cluster_tol: f64,
) -> Result<Vec<CurvatureCluster>, GeometryError> {
    let mut clusters = Vec::new();
    let mut start = 0;
    for i in 0..sorted.len() {
        let boundary = if i + 1 == sorted.len() {
            true
        } else {
            let gap = sorted[i + 1] - sorted[i];
            if gap >= cluster_tol && gap <= 10.0 * cluster_tol {
                return Err(GeometryError::AmbiguousClustering { gap });
            }
            gap > 10.0 * cluster_tol
        };
        if boundary {
            let members = &sorted[start..=i];
            let spread = members[members.len() - 1] - members[0];
            if spread >= cluster_tol {
                return Err(GeometryError::AmbiguousClustering { gap: spread });
            }
            let value = members.iter().sum::<f64>() / members.len() as f64;
            clusters.push(CurvatureCluster {
                value,
                multiplicity: members.len(),
            });
            start = i + 1;
        }
    }
    // sort by arccot ascending = value descending
    clusters.sort_by(|a, b| b.value.partial_cmp(&a.value).expect("finite eigenvalues"));
    Ok(clusters)
}

/// Eigendecompose the shape operator at `p` and group the eigenvalues into
/// clusters with internal spread below `cluster_tol` and mutual gaps above
/// 10×`cluster_tol`.
pub fn principal_curvatures(
    f: &FkmPolynomial,
    p: &SurfacePoint,
    cluster_tol: f64,
) -> Result<CurvatureSpectrum, GeometryError> {
    let a = shape_operator(f, p)?;
    let sym = (&a + a.transpose()) * 0.5;
    let mut eigenvalues: Vec<f64> = nalgebra::SymmetricEigen::new(sym)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    let clusters = cluster_eigenvalues(&eigenvalues, cluster_tol)?;
    let theta = arccot(clusters[0].value);
    Ok(CurvatureSpectrum {
        eigenvalues,
        clusters,
        theta,
    })
}

/// Aggregated curvature data for one level, over `samples` points.
///
/// `scalar_curvature` comes from the Gauss equation for a hypersurface of
/// the unit sphere, scal = n(n−1) + H² − |A|²; `scal_reference` records the
/// closed-form value n² − 4n it is compared against, without asserting it.
#[derive(Debug, Clone)]
pub struct CurvatureReport {
    pub n: usize,
    pub level: f64,
    pub g: usize,
    /// Cluster multiplicities in arccot order (a cyclic pattern).
    pub multiplicities: Vec<usize>,
    pub theta: f64,
    /// H = Σ mᵢ λᵢ
    pub mean_curvature: f64,
    /// |A|² = Σ mᵢ λᵢ²
    pub shape_norm_sq: f64,
    pub scalar_curvature: f64,
    pub scal_reference: f64,
    pub scal_delta: f64,
    /// Max over clusters of the value range across sampled points.
    pub spread: f64,
    pub samples: usize,
}

/// Sample the level set and aggregate spectra: verifies that g and the
/// multiplicity pattern agree at every point, averages cluster values, and
/// derives the curvature invariants.
pub fn curvature_report(
    f: &FkmPolynomial,
    c: f64,
    count: usize,
    seed: u64,
    tols: &ProjectionTols,
    cluster_tol: f64,
) -> Result<CurvatureReport, GeometryError> {
    let points = sample_level_set(f, c, count, seed, tols)?;
    let spectra: Vec<CurvatureSpectrum> = points
        .iter()
        .map(|p| principal_curvatures(f, p, cluster_tol))
        .collect::<Result<_, _>>()?;

    let g = spectra[0].g();
    let mults = spectra[0].multiplicities();
    if !matches!(g, 1 | 2 | 3 | 4 | 6) {
        return Err(GeometryError::InconsistentSpectra(format!(
            "cluster count {g} is not a valid curvature count"
        )));
    }
    for (i, s) in spectra.iter().enumerate() {
        if s.g() != g || s.multiplicities() != mults {
            return Err(GeometryError::InconsistentSpectra(format!(
                "point {i} has g={} multiplicities {:?}, expected g={g} {:?}",
                s.g(),
                s.multiplicities(),
                mults
            )));
        }
    }

    let mut spread = 0.0f64;
    let mut values = vec![0.0f64; g];
    for j in 0..g {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for s in &spectra {
            let v = s.clusters[j].value;
            lo = lo.min(v);
            hi = hi.max(v);
            sum += v;
        }
        spread = spread.max(hi - lo);
        values[j] = sum / spectra.len() as f64;
    }

    let n = f.hypersurface_dim();
    let mean_curvature: f64 = values
        .iter()
        .zip(&mults)
        .map(|(v, &m)| v * m as f64)
        .sum();
    let shape_norm_sq: f64 = values
        .iter()
        .zip(&mults)
        .map(|(v, &m)| v * v * m as f64)
        .sum();
    let scalar_curvature =
        (n * (n - 1)) as f64 + mean_curvature * mean_curvature - shape_norm_sq;
    let scal_reference = (n * n) as f64 - 4.0 * n as f64;

    Ok(CurvatureReport {
        n,
        level: c,
        g,
        multiplicities: mults,
        theta: arccot(values[0]),
        mean_curvature,
        shape_norm_sq,
        scalar_curvature,
        scal_reference,
        scal_delta: scalar_curvature - scal_reference,
        spread,
        samples: count,
    })
}
