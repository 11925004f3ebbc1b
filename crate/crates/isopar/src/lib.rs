//! Construction and verification tools for the Clifford-algebra families of
//! isoparametric hypersurfaces in spheres, together with the arithmetic that
//! classifies their multiplicity data.
//!
//! The crate is organised in layers:
//!
//! * [`arith`] — the Clifford dimension function δ(m), Radon-Hurwitz numbers,
//!   and their divisibility duality.
//! * [`clifford`] — symmetric Clifford systems P_0,…,P_m as exact
//!   signed-permutation integer matrices, with an exact verifier.
//! * [`fkm`] — the degree-4 polynomial F(x) = ⟨x,x⟩² − 2Σ⟨P_i x, x⟩² of a
//!   Clifford system, its derivatives, and the Cartan-Münzner identities.
//! * [`geometry`] — level-set sampling on the unit sphere, shape operators,
//!   and principal-curvature spectra.
//! * [`classify`] — admissibility of dimension triples (n; m_+, m_−), the
//!   Stolz multiplicity criteria, and enumeration of the Clifford families.
//! * [`homotopy`] — the Grove-Halperin tables: π₁, integral homology, and
//!   rational homotopy type of the inclusion fiber, with Poincaré series
//!   cross-checks.
//! * [`cli`] — run configuration, report schemas, and the command
//!   implementations behind the `isopar` binary.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod clifford;
pub mod fkm;
pub mod geometry;
pub mod homotopy;

pub use classify::{admissibility, enumerate_fkm, munzner_g, stolz, DimensionTriple, Verdict};
pub use clifford::{build_clifford_system, verify_clifford_system, CliffordSystem};
pub use fkm::{verify_cartan_munzner, FkmPolynomial};
pub use geometry::{curvature_report, principal_curvatures, sample_level_set, CurvatureReport};
pub use homotopy::{fiber_homology, fundamental_group, rational_type, FiberConfig};
