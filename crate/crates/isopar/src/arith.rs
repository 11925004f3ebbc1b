//! Integer arithmetic behind the multiplicity classification: the Clifford
//! dimension function δ(m), the Radon-Hurwitz numbers ρ(N), and the
//! divisibility predicate linking them through Adams' vector-field theorem.
//!
//! The two functions validate each other: δ(m) is the smallest N with
//! ρ(N) ≥ m, and both depend only on the 2-adic part of their argument, so
//! δ(ℓ) | N ⟺ ρ(N) ≥ ℓ. The property tests exercise this equivalence over a
//! large range instead of trusting either closed form alone.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("delta(m) requires m >= 1, got {0}")]
    DeltaDomain(u64),
    #[error("delta({0}) does not fit in 64 bits")]
    DeltaOverflow(u64),
    #[error("radon_hurwitz(N) requires N >= 1, got {0}")]
    RadonHurwitzDomain(u64),
    #[error("delta_divides requires N >= 1, got {0}")]
    DivisorDomain(u64),
}

/// δ(m) for m = 1..=8; extended by δ(m + 8k) = 2^{4k} δ(m).
const DELTA_TABLE: [u64; 8] = [1, 2, 4, 4, 8, 8, 8, 8];

/// Minimal half-dimension δ(m): irreducible modules carrying a symmetric
/// Clifford system P_0,…,P_m have real dimension 2δ(m).
pub fn delta(m: u64) -> Result<u64, ArithError> {
    if m < 1 {
        return Err(ArithError::DeltaDomain(m));
    }
    let periods = (m - 1) / 8;
    let base = DELTA_TABLE[((m - 1) % 8) as usize];
    base.checked_shl(4 * periods as u32)
        .ok_or(ArithError::DeltaOverflow(m))
}

/// Radon-Hurwitz number ρ(N) = 2^b + 8c for N = (odd)·2^{4c+b}, 0 ≤ b ≤ 3.
///
/// ρ(N) − 1 is the maximal number of linearly independent vector fields on
/// the sphere S^{N−1}.
pub fn radon_hurwitz(n: u64) -> Result<u64, ArithError> {
    if n < 1 {
        return Err(ArithError::RadonHurwitzDomain(n));
    }
    let v = n.trailing_zeros() as u64;
    let b = v % 4;
    let c = v / 4;
    Ok((1u64 << b) + 8 * c)
}

/// True iff δ(ell) divides `n`, with the convention δ(0) = 1.
///
/// Equivalent to ρ(n) ≥ ell: both sides are conditions on the 2-adic
/// valuation of `n`, and δ(ell) is the least N with ρ(N) ≥ ell.
pub fn delta_divides(ell: u64, n: u64) -> Result<bool, ArithError> {
    if n < 1 {
        return Err(ArithError::DivisorDomain(n));
    }
    let d = if ell == 0 { 1 } else { delta(ell)? };
    Ok(n % d == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_matches_base_table() {
        let expected = [1u64, 2, 4, 4, 8, 8, 8, 8];
        for (m, want) in (1u64..=8).zip(expected) {
            assert_eq!(delta(m).unwrap(), want, "delta({m})");
        }
    }

    #[test]
    fn delta_periodicity() {
        // δ(m+8) = 16 δ(m), checked well past the first period.
        for m in 1u64..=32 {
            assert_eq!(delta(m + 8).unwrap(), 16 * delta(m).unwrap(), "m={m}");
        }
        assert_eq!(delta(9).unwrap(), 16);
    }

    #[test]
    fn delta_is_nondecreasing_and_bounded() {
        let mut prev = 0;
        for m in 1u64..=32 {
            let d = delta(m).unwrap();
            assert!(d >= prev, "delta not monotone at m={m}");
            assert!(d <= 1u64 << m, "delta({m}) > 2^{m}");
            prev = d;
        }
    }

    #[test]
    fn delta_domain_errors() {
        assert_eq!(delta(0), Err(ArithError::DeltaDomain(0)));
        assert!(matches!(delta(1000), Err(ArithError::DeltaOverflow(_))));
    }

    #[test]
    fn radon_hurwitz_closed_form() {
        assert_eq!(radon_hurwitz(1).unwrap(), 1);
        assert_eq!(radon_hurwitz(2).unwrap(), 2);
        assert_eq!(radon_hurwitz(16).unwrap(), 9);
        assert_eq!(radon_hurwitz(0), Err(ArithError::RadonHurwitzDomain(0)));
    }

    #[test]
    fn radon_hurwitz_small_values() {
        // Classical table: max vector fields on S^{N-1} is rho(N)-1, so
        // S^1, S^3, S^7, S^15 carry 1, 3, 7, 8 fields.
        let rho: [u64; 16] = [1, 2, 1, 4, 1, 2, 1, 8, 1, 2, 1, 4, 1, 2, 1, 9];
        for (n, want) in (1u64..=16).zip(rho) {
            assert_eq!(radon_hurwitz(n).unwrap(), want, "rho({n})");
        }
    }

    #[test]
    fn delta_divides_examples() {
        assert!(delta_divides(1, 10).unwrap());
        assert!(delta_divides(3, 8).unwrap());
        assert!(!delta_divides(3, 10).unwrap());
        assert!(delta_divides(0, 7).unwrap());
        assert_eq!(delta_divides(2, 0), Err(ArithError::DivisorDomain(0)));
    }

    #[test]
    fn adams_duality() {
        // delta(l) | N  <=>  rho(N) >= l, i.e. S^{N-1} carries l-1 fields.
        for ell in 0u64..=12 {
            for n in 1u64..=512 {
                let divides = delta_divides(ell, n).unwrap();
                let rho = radon_hurwitz(n).unwrap();
                assert_eq!(divides, rho >= ell, "ell={ell}, N={n}, rho={rho}");
            }
        }
    }

    #[test]
    fn adams_duality_shifted_index() {
        // The same equivalence read one index up: delta(l+1) | N <=> rho(N) >= l+1,
        // i.e. delta(l+1) is the least dimension supporting l vector fields.
        for ell in 0u64..=11 {
            for n in 1u64..=512 {
                let divides = delta_divides(ell + 1, n).unwrap();
                assert_eq!(divides, radon_hurwitz(n).unwrap() >= ell + 1);
            }
        }
    }

    #[test]
    fn duality_bound_is_tight() {
        // For each l below, N = delta(l) itself satisfies rho(N) = l exactly,
        // so "delta(l) | N implies rho(N) >= l" cannot be strengthened to
        // "rho(N) >= l + 1".
        for ell in [1u64, 2, 4, 8, 9, 10, 12] {
            let n = delta(ell).unwrap();
            assert!(delta_divides(ell, n).unwrap());
            assert_eq!(radon_hurwitz(n).unwrap(), ell, "rho(delta({ell}))");
        }
    }
}
