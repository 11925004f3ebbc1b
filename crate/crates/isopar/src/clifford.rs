//! Symmetric Clifford systems: families P_0,…,P_m of symmetric matrices on
//! R^{2kδ(m)} with P_i² = I and P_iP_j = −P_jP_i for i ≠ j.
//!
//! Every matrix produced here is a signed permutation (entries in {−1,0,1},
//! one nonzero per row and column), so all the defining relations are checked
//! with exact integer arithmetic — no floating point enters this layer.
//!
//! Construction: split R^{2h} into pairs (u, v) with h = kδ(m) and set
//!
//! ```text
//! P_0(u, v) = (u, −v)
//! P_1(u, v) = (v, u)
//! P_{1+j}(u, v) = (E_j v, −E_j u)      j = 1, …, m−1
//! ```
//!
//! where E_1,…,E_{m−1} are pairwise anticommuting skew-symmetric complex
//! structures on R^h. The E_j come from the Hurwitz-Radon tensor recursion:
//! rotation on R², quaternion left multiplications on R⁴, octonion left
//! multiplications on R⁸, and for m > 8 the 16-fold periodicity step
//! R^{16d} = R^{16} ⊗ R^d using the eight structures on R^{16} and their
//! symmetric volume element.

use nalgebra::DMatrix;
use thiserror::Error;

use crate::arith::delta;

pub type IntMatrix = DMatrix<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("clifford system requires m >= 1 and k >= 1, got m={m}, k={k}")]
    InvalidParameters { m: u64, k: u64 },
    #[error("expected {expected} matrices of size {dim}x{dim}")]
    MalformedMatrices { expected: usize, dim: usize },
}

/// A family P_0,…,P_m of integer matrices on R^{2kδ(m)}.
///
/// Systems built by [`build_clifford_system`] satisfy all the Clifford
/// relations exactly; [`CliffordSystem::from_matrices`] only checks shapes,
/// so arbitrary (possibly invalid) systems can be assembled for testing the
/// verifier.
#[derive(Debug, Clone)]
pub struct CliffordSystem {
    m: u64,
    k: u64,
    dim: usize,
    matrices: Vec<IntMatrix>,
}

impl CliffordSystem {
    /// Assemble a system from raw matrices, checking shapes only.
    pub fn from_matrices(m: u64, k: u64, matrices: Vec<IntMatrix>) -> Result<Self, CliffordError> {
        if m < 1 || k < 1 {
            return Err(CliffordError::InvalidParameters { m, k });
        }
        let d = delta(m).map_err(|_| CliffordError::InvalidParameters { m, k })?;
        let dim = match (2 * k * d).try_into() {
            Ok(dim) => dim,
            Err(_) => return Err(CliffordError::InvalidParameters { m, k }),
        };
        let expected = m as usize + 1;
        let well_shaped =
            matrices.len() == expected && matrices.iter().all(|p| p.shape() == (dim, dim));
        if !well_shaped {
            return Err(CliffordError::MalformedMatrices { expected, dim });
        }
        Ok(Self { m, k, dim, matrices })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Ambient dimension 2kδ(m).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.matrices
    }
}

fn ident(n: usize) -> IntMatrix {
    IntMatrix::identity(n, n)
}

/// diag(1, −1)
fn block_reflect() -> IntMatrix {
    IntMatrix::from_row_slice(2, 2, &[1, 0, 0, -1])
}

/// antidiag(1, 1)
fn block_swap() -> IntMatrix {
    IntMatrix::from_row_slice(2, 2, &[0, 1, 1, 0])
}

/// Rotation J with J² = −I.
fn block_rot() -> IntMatrix {
    IntMatrix::from_row_slice(2, 2, &[0, -1, 1, 0])
}

fn block_rot_neg() -> IntMatrix {
    IntMatrix::from_row_slice(2, 2, &[0, 1, -1, 0])
}

/// Quaternion units: e_1 e_2 = e_3 cyclically.
const QUATERNION_TRIPLES: &[[usize; 3]] = &[[1, 2, 3]];

/// Octonion units with the Fano-plane rule e_i e_{i+1} = e_{i+3} (mod 7).
const OCTONION_TRIPLES: &[[usize; 3]] = &[
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [5, 6, 1],
    [6, 7, 2],
    [7, 1, 3],
];

/// Product e_a e_b in a composition algebra with the given unit triples;
/// index 0 is the real unit. Returns (sign, index).
fn unit_product(triples: &[[usize; 3]], a: usize, b: usize) -> (i64, usize) {
    if a == 0 {
        return (1, b);
    }
    if b == 0 {
        return (1, a);
    }
    if a == b {
        return (-1, 0);
    }
    for &[x, y, z] in triples {
        let (s, t) = if (a, b) == (x, y) || (a, b) == (y, z) || (a, b) == (z, x) {
            (1, match (a, b) {
                p if p == (x, y) => z,
                p if p == (y, z) => x,
                _ => y,
            })
        } else if (b, a) == (x, y) || (b, a) == (y, z) || (b, a) == (z, x) {
            (-1, match (b, a) {
                p if p == (x, y) => z,
                p if p == (y, z) => x,
                _ => y,
            })
        } else {
            continue;
        };
        return (s, t);
    }
    unreachable!("every pair of distinct imaginary units lies on one line");
}

/// Matrix of left multiplication by the imaginary unit e_t.
fn left_mult(triples: &[[usize; 3]], dim: usize, t: usize) -> IntMatrix {
    let mut mat = IntMatrix::zeros(dim, dim);
    for c in 0..dim {
        let (sign, r) = unit_product(triples, t, c);
        mat[(r, c)] = sign;
    }
    mat
}

/// Eight anticommuting complex structures on R^16 together with their
/// volume element ω = G_1···G_8, which is symmetric, squares to the
/// identity, and anticommutes with every G_i.
fn sixteen_block() -> (Vec<IntMatrix>, IntMatrix) {
    let id8 = ident(8);
    let mut structures = vec![block_rot().kronecker(&id8)];
    for t in 1..=7 {
        structures.push(block_reflect().kronecker(&left_mult(OCTONION_TRIPLES, 8, t)));
    }
    let mut omega = ident(16);
    for g in &structures {
        omega = &omega * g;
    }
    debug_assert_eq!(omega.transpose(), omega);
    debug_assert_eq!(&omega * &omega, ident(16));
    debug_assert!(structures
        .iter()
        .all(|g| &omega * g + g * &omega == IntMatrix::zeros(16, 16)));
    (structures, omega)
}

/// The m−1 anticommuting complex structures E_j on R^{δ(m)}.
fn half_block_family(m: u64) -> (usize, Vec<IntMatrix>) {
    match m {
        1 => (1, Vec::new()),
        2 => (2, vec![block_rot()]),
        3 | 4 => (
            4,
            (1..m as usize)
                .map(|t| left_mult(QUATERNION_TRIPLES, 4, t))
                .collect(),
        ),
        5..=8 => (
            8,
            (1..m as usize)
                .map(|t| left_mult(OCTONION_TRIPLES, 8, t))
                .collect(),
        ),
        _ => {
            let (d, inner) = half_block_family(m - 8);
            let (structures, omega) = sixteen_block();
            let id = ident(d);
            let mut family: Vec<IntMatrix> =
                structures.iter().map(|g| g.kronecker(&id)).collect();
            family.extend(inner.iter().map(|e| omega.kronecker(e)));
            (16 * d, family)
        }
    }
}

/// Build the symmetric Clifford system P_0,…,P_m on R^{2kδ(m)}.
pub fn build_clifford_system(m: u64, k: u64) -> Result<CliffordSystem, CliffordError> {
    if m < 1 || k < 1 {
        return Err(CliffordError::InvalidParameters { m, k });
    }
    let d = delta(m).map_err(|_| CliffordError::InvalidParameters { m, k })?;
    let half: usize = (k * d)
        .try_into()
        .map_err(|_| CliffordError::InvalidParameters { m, k })?;
    let (base_dim, base_family) = half_block_family(m);
    debug_assert_eq!(base_dim as u64, d);
    debug_assert_eq!(base_family.len() as u64, m - 1);

    let id_half = ident(half);
    let id_k = ident(k as usize);
    let mut matrices = Vec::with_capacity(m as usize + 1);
    matrices.push(block_reflect().kronecker(&id_half));
    matrices.push(block_swap().kronecker(&id_half));
    for e in &base_family {
        // k-fold block-diagonal extension of E_j, then [[0, E], [-E, 0]].
        let extended = id_k.kronecker(e);
        matrices.push(block_rot_neg().kronecker(&extended));
    }

    Ok(CliffordSystem {
        m,
        k,
        dim: 2 * half,
        matrices,
    })
}

/// A violated Clifford-system relation, with the indices involved.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("expected {expected} matrices, found {found}")]
    MatrixCount { expected: usize, found: usize },
    #[error("P_{index} is {rows}x{cols}, expected {dim}x{dim}")]
    WrongShape {
        index: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("P_{index} is not symmetric")]
    NotSymmetric { index: usize },
    #[error("P_{index}^2 != I")]
    SquareNotIdentity { index: usize },
    #[error("P_{i}P_{j} + P_{j}P_{i} != 0")]
    Anticommutator { i: usize, j: usize },
    #[error("trace(P_{index}) = {trace} != 0")]
    NonzeroTrace { index: usize, trace: i64 },
    #[error("P_{index} is not a signed permutation")]
    NotSignedPermutation { index: usize },
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

fn is_signed_permutation(p: &IntMatrix) -> bool {
    let (rows, cols) = p.shape();
    let mut col_seen = vec![false; cols];
    for r in 0..rows {
        let mut row_nonzero = 0;
        for c in 0..cols {
            let e = p[(r, c)];
            if e == 0 {
                continue;
            }
            if e.abs() != 1 {
                return false;
            }
            row_nonzero += 1;
            if col_seen[c] {
                return false;
            }
            col_seen[c] = true;
        }
        if row_nonzero != 1 {
            return false;
        }
    }
    true
}

/// Check every defining relation with exact integer arithmetic.
///
/// Never fails: each violated relation is reported with the indices
/// involved, and `passed` is true iff the list is empty.
pub fn verify_clifford_system(sys: &CliffordSystem) -> VerificationReport {
    let mut violations = Vec::new();
    let dim = sys.dim();
    let expected = sys.m() as usize + 1;
    if sys.matrices.len() != expected {
        violations.push(Violation::MatrixCount {
            expected,
            found: sys.matrices.len(),
        });
    }

    let mut checkable = Vec::new();
    for (index, p) in sys.matrices.iter().enumerate() {
        let (rows, cols) = p.shape();
        if rows != dim || cols != dim {
            violations.push(Violation::WrongShape {
                index,
                rows,
                cols,
                dim,
            });
            continue;
        }
        checkable.push(index);
    }

    let id = ident(dim);
    for &i in &checkable {
        let p = &sys.matrices[i];
        if p.transpose() != *p {
            violations.push(Violation::NotSymmetric { index: i });
        }
        if p * p != id {
            violations.push(Violation::SquareNotIdentity { index: i });
        }
        let trace = p.trace();
        if trace != 0 {
            violations.push(Violation::NonzeroTrace { index: i, trace });
        }
        if !is_signed_permutation(p) {
            violations.push(Violation::NotSignedPermutation { index: i });
        }
    }
    let zero = IntMatrix::zeros(dim, dim);
    for a in 0..checkable.len() {
        for b in a + 1..checkable.len() {
            let (i, j) = (checkable[a], checkable[b]);
            let (p, q) = (&sys.matrices[i], &sys.matrices[j]);
            if p * q + q * p != zero {
                violations.push(Violation::Anticommutator { i, j });
            }
        }
    }

    VerificationReport {
        passed: violations.is_empty(),
        violations,
    }
}
