//! Classification of dimension triples (n; m_+, m_−): which triples pass the
//! necessary admissibility conditions, the Stolz multiplicity criteria for
//! the half-ratio case, and enumeration of the Clifford families.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{delta, delta_divides};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("invalid triple (n; m_+, m_-) = ({n}; {m_plus}, {m_minus}): need 1 <= m_+/- <= n")]
    InvalidTriple { n: u64, m_plus: u64, m_minus: u64 },
    #[error("homotopy-sphere criterion requires 2 <= m_- < m_+, got (m_+, m_-) = ({m_plus}, {m_minus})")]
    StolzHomotopySphereHypothesis { m_plus: u64, m_minus: u64 },
    #[error("Dupin criterion requires 1 <= m_- <= m_+, got (m_+, m_-) = ({m_plus}, {m_minus})")]
    StolzDupinHypothesis { m_plus: u64, m_minus: u64 },
    #[error("enumeration requires max ambient dimension >= 4, got {0}")]
    EnumerationRange(u64),
}

/// A candidate (n; m_+, m_−): n is the hypersurface dimension (the ambient
/// sphere has dimension n+1) and m_± are the dimensions of the normal
/// spheres to the two focal submanifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionTriple {
    pub n: u64,
    pub m_plus: u64,
    pub m_minus: u64,
}

impl DimensionTriple {
    pub fn new(n: u64, m_plus: u64, m_minus: u64) -> Result<Self, ClassifyError> {
        let ok = n >= 1 && (1..=n).contains(&m_plus) && (1..=n).contains(&m_minus);
        if !ok {
            return Err(ClassifyError::InvalidTriple { n, m_plus, m_minus });
        }
        Ok(Self { n, m_plus, m_minus })
    }
}

/// The admissibility cases. Several can match at once (e.g. (4; 1, 1) is
/// both `OneQuarter` and `RatioTwo`); all matches are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    /// m_+ = m_− = n (a dual pair of points).
    EqualN,
    /// m_+ = m_− = n/3 ∈ {1, 2, 4, 8}.
    OneThird,
    /// m_+ = m_− = n/4 ∈ {1, 2}.
    OneQuarter,
    /// m_+ = m_− = n/6 ∈ {1, 2}.
    OneSixth,
    /// n = m_+ + m_−.
    RatioOne,
    /// n = 2(m_+ + m_−), with m_+ + m_− odd unless min(m_+, m_−) = 1.
    RatioTwo,
}

impl CaseTag {
    /// The count g of distinct principal curvatures forced by the case,
    /// via 2n = g(m_+ + m_−) (n = g·m in the equal-multiplicity cases).
    pub fn g(self) -> u64 {
        match self {
            CaseTag::EqualN => 1,
            CaseTag::RatioOne => 2,
            CaseTag::OneThird => 3,
            CaseTag::OneQuarter | CaseTag::RatioTwo => 4,
            CaseTag::OneSixth => 6,
        }
    }
}

/// Outcome of the admissibility test: the matched cases and, when any
/// match, the curvature count g (all simultaneously matching cases agree
/// on g).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub cases: Vec<CaseTag>,
    pub g: Option<u64>,
}

impl Verdict {
    pub fn admissible(&self) -> bool {
        !self.cases.is_empty()
    }
}

/// Test a triple against the necessary admissibility conditions and report
/// every matching case. Symmetric in (m_+, m_−).
pub fn admissibility(triple: &DimensionTriple) -> Verdict {
    let DimensionTriple { n, m_plus, m_minus } = *triple;
    let mut cases = Vec::new();
    let sum = m_plus + m_minus;
    let min = m_plus.min(m_minus);

    if m_plus == n && m_minus == n {
        cases.push(CaseTag::EqualN);
    }
    if m_plus == m_minus {
        let m = m_plus;
        if 3 * m == n && matches!(m, 1 | 2 | 4 | 8) {
            cases.push(CaseTag::OneThird);
        }
        if 4 * m == n && matches!(m, 1 | 2) {
            cases.push(CaseTag::OneQuarter);
        }
        if 6 * m == n && matches!(m, 1 | 2) {
            cases.push(CaseTag::OneSixth);
        }
    }
    if sum == n {
        cases.push(CaseTag::RatioOne);
    }
    if 2 * sum == n && (min == 1 || sum % 2 == 1) {
        cases.push(CaseTag::RatioTwo);
    }

    cases.sort();
    let g = cases.first().map(|c| c.g());
    debug_assert!(cases.iter().all(|c| Some(c.g()) == g));
    Verdict { cases, g }
}

/// g from 2n = g(m_+ + m_−) when it is a positive integer and, for odd g,
/// the multiplicities agree. Existence of g is weaker than admissibility.
pub fn munzner_g(triple: &DimensionTriple) -> Option<u64> {
    let sum = triple.m_plus + triple.m_minus;
    if (2 * triple.n) % sum != 0 {
        return None;
    }
    let g = 2 * triple.n / sum;
    if g == 0 || (g % 2 == 1 && triple.m_plus != triple.m_minus) {
        return None;
    }
    Some(g)
}

/// Which form of the Stolz multiplicity criterion to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StolzVariant {
    /// Dual pair in a homotopy sphere with n = 2(m_+ + m_−), 2 ≤ m_− < m_+.
    HomotopySphere,
    /// Dupin hypersurface with four principal curvatures, 1 ≤ m_− ≤ m_+.
    Dupin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StolzReason {
    /// One of the finitely many exceptional pairs.
    ExceptionalPair,
    /// δ(m_− − 1) divides m_+ + m_− + 1.
    Divisibility,
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StolzVerdict {
    pub reason: StolzReason,
}

impl StolzVerdict {
    pub fn admissible(&self) -> bool {
        self.reason != StolzReason::Fails
    }
}

/// The Stolz criterion: the pair passes iff it is exceptional ((5,4) for
/// homotopy spheres; (2,2) and (5,4) for Dupin hypersurfaces) or
/// m_+ + m_− + 1 is divisible by δ(m_− − 1), with δ(0) = 1.
pub fn stolz(m_plus: u64, m_minus: u64, variant: StolzVariant) -> Result<StolzVerdict, ClassifyError> {
    let exceptional = match variant {
        StolzVariant::HomotopySphere => {
            if !(2 <= m_minus && m_minus < m_plus) {
                return Err(ClassifyError::StolzHomotopySphereHypothesis { m_plus, m_minus });
            }
            (m_plus, m_minus) == (5, 4)
        }
        StolzVariant::Dupin => {
            if !(1 <= m_minus && m_minus <= m_plus) {
                return Err(ClassifyError::StolzDupinHypothesis { m_plus, m_minus });
            }
            (m_plus, m_minus) == (2, 2) || (m_plus, m_minus) == (5, 4)
        }
    };
    let reason = if exceptional {
        StolzReason::ExceptionalPair
    } else if delta_divides(m_minus - 1, m_plus + m_minus + 1)
        .expect("m_+ + m_- + 1 >= 3 is positive")
    {
        StolzReason::Divisibility
    } else {
        StolzReason::Fails
    };
    Ok(StolzVerdict { reason })
}

/// One Clifford family: parameters (m, k), hypersurface dimension
/// n = 2kδ(m) − 2, and the unordered multiplicity pair {m, n/2 − m}
/// reported with m_plus ≥ m_minus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FkmFamily {
    pub m: u64,
    pub k: u64,
    pub n: u64,
    pub m_plus: u64,
    pub m_minus: u64,
}

/// All families (m ≥ 1, k ≥ 1) with ambient sphere dimension n+1 at most
/// `max_ambient_dim` (so n + 2 = 2kδ(m) ≤ max_ambient_dim + 1) and both
/// multiplicities positive. Sorted by (n, m_plus, m_minus, m, k).
pub fn enumerate_fkm(max_ambient_dim: u64) -> Result<Vec<FkmFamily>, ClassifyError> {
    if max_ambient_dim < 4 {
        return Err(ClassifyError::EnumerationRange(max_ambient_dim));
    }
    let bound = max_ambient_dim + 1;
    let mut out = Vec::new();
    for m in 1u64.. {
        let d = match delta(m) {
            Ok(d) => d,
            Err(_) => break,
        };
        if 2 * d > bound {
            break;
        }
        for k in 1u64.. {
            let ambient = 2 * k * d;
            if ambient > bound {
                break;
            }
            let n = ambient - 2;
            let half = n / 2;
            if half < m + 1 {
                continue; // second multiplicity n/2 - m would vanish
            }
            let other = half - m;
            out.push(FkmFamily {
                m,
                k,
                n,
                m_plus: m.max(other),
                m_minus: m.min(other),
            });
        }
    }
    out.sort_by_key(|f| (f.n, f.m_plus, f.m_minus, f.m, f.k));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triple(n: u64, a: u64, b: u64) -> DimensionTriple {
        DimensionTriple::new(n, a, b).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let v = admissibility(&triple(3, 1, 1));
        assert_eq!(v.cases, vec![CaseTag::OneThird]);
        assert_eq!(v.g, Some(3));

        let v = admissibility(&triple(24, 8, 8));
        assert_eq!(v.cases, vec![CaseTag::OneThird]);

        assert!(!admissibility(&triple(8, 1, 1)).admissible());
        assert!(!admissibility(&triple(12, 4, 2)).admissible());

        let v = admissibility(&triple(8, 2, 2));
        assert_eq!(v.cases, vec![CaseTag::OneQuarter]);
        assert_eq!(v.g, Some(4));

        let v = admissibility(&triple(5, 5, 5));
        assert_eq!(v.cases, vec![CaseTag::EqualN]);
        assert_eq!(v.g, Some(1));

        let v = admissibility(&triple(10, 4, 1));
        assert_eq!(v.cases, vec![CaseTag::RatioTwo]);
        assert_eq!(v.g, Some(4));
    }

    #[test]
    fn overlapping_cases_agree_on_g() {
        let v = admissibility(&triple(4, 1, 1));
        assert_eq!(v.cases, vec![CaseTag::OneQuarter, CaseTag::RatioTwo]);
        assert_eq!(v.g, Some(4));
    }

    #[test]
    fn codimension_two_sweep() {
        // (n; 1, 1) is admissible exactly for n in {1, 2, 3, 4, 6}.
        for n in 1u64..=100 {
            let admissible = admissibility(&triple(n, 1, 1)).admissible();
            assert_eq!(admissible, matches!(n, 1 | 2 | 3 | 4 | 6), "n={n}");
        }
    }

    #[test]
    fn point_pair_requires_both_equal_n() {
        // One multiplicity equal to n forces the other; nothing matches
        // otherwise.
        assert!(!admissibility(&triple(5, 5, 3)).admissible());
        assert!(admissibility(&triple(5, 5, 5)).admissible());
    }

    #[test]
    fn g_is_consistent_with_dimension_formula() {
        for n in 1u64..=60 {
            for a in 1..=n {
                for b in 1..=n {
                    let v = admissibility(&triple(n, a, b));
                    if let Some(g) = v.g {
                        for c in &v.cases {
                            assert_eq!(c.g(), g);
                        }
                        assert_eq!(2 * n, g * (a + b), "(n,a,b)=({n},{a},{b})");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn admissibility_is_symmetric(n in 1u64..200, a in 1u64..200, b in 1u64..200) {
            prop_assume!(a <= n && b <= n);
            let v1 = admissibility(&triple(n, a, b));
            let v2 = admissibility(&triple(n, b, a));
            prop_assert_eq!(v1, v2);
        }
    }

    #[test]
    fn munzner_g_examples() {
        assert_eq!(munzner_g(&triple(4, 1, 1)), Some(4));
        assert_eq!(munzner_g(&triple(24, 8, 8)), Some(3));
        assert_eq!(munzner_g(&triple(12, 4, 2)), Some(4));
        // odd g needs equal multiplicities
        assert_eq!(munzner_g(&triple(24, 10, 6)), None);
        // non-integer case
        assert_eq!(munzner_g(&triple(5, 2, 1)), None);
    }

    #[test]
    fn stolz_examples() {
        let v = stolz(5, 4, StolzVariant::HomotopySphere).unwrap();
        assert_eq!(v.reason, StolzReason::ExceptionalPair);

        let v = stolz(2, 2, StolzVariant::Dupin).unwrap();
        assert_eq!(v.reason, StolzReason::ExceptionalPair);
        let v = stolz(5, 4, StolzVariant::Dupin).unwrap();
        assert_eq!(v.reason, StolzReason::ExceptionalPair);

        let v = stolz(4, 3, StolzVariant::HomotopySphere).unwrap();
        assert_eq!(v.reason, StolzReason::Divisibility);

        let v = stolz(5, 3, StolzVariant::HomotopySphere).unwrap();
        assert_eq!(v.reason, StolzReason::Fails);
        assert!(!v.admissible());
    }

    #[test]
    fn stolz_preconditions() {
        assert!(matches!(
            stolz(4, 1, StolzVariant::HomotopySphere),
            Err(ClassifyError::StolzHomotopySphereHypothesis { .. })
        ));
        assert!(matches!(
            stolz(3, 3, StolzVariant::HomotopySphere),
            Err(ClassifyError::StolzHomotopySphereHypothesis { .. })
        ));
        assert!(matches!(
            stolz(2, 3, StolzVariant::Dupin),
            Err(ClassifyError::StolzDupinHypothesis { .. })
        ));
        assert!(stolz(3, 1, StolzVariant::Dupin).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        let rows = enumerate_fkm(16).unwrap();
        assert!(rows.contains(&FkmFamily { m: 1, k: 3, n: 4, m_plus: 1, m_minus: 1 }));
        assert!(rows.contains(&FkmFamily { m: 2, k: 2, n: 6, m_plus: 2, m_minus: 1 }));
        assert!(rows.contains(&FkmFamily { m: 4, k: 2, n: 14, m_plus: 4, m_minus: 3 }));
        assert!(rows.contains(&FkmFamily { m: 3, k: 2, n: 14, m_plus: 4, m_minus: 3 }));
        assert_eq!(enumerate_fkm(3), Err(ClassifyError::EnumerationRange(3)));
    }

    #[test]
    fn enumeration_is_sorted_and_positive() {
        let rows = enumerate_fkm(128).unwrap();
        for w in rows.windows(2) {
            assert!((w[0].n, w[0].m_plus, w[0].m_minus, w[0].m, w[0].k)
                < (w[1].n, w[1].m_plus, w[1].m_minus, w[1].m, w[1].k));
        }
        for f in &rows {
            assert!(f.m_minus >= 1);
            assert_eq!(f.m_plus + f.m_minus, f.n / 2);
            assert_eq!(f.n + 2, 2 * f.k * delta(f.m).unwrap());
        }
    }

    #[test]
    fn enumerated_families_pass_admissibility_with_ratio_two() {
        for f in enumerate_fkm(256).unwrap() {
            let v = admissibility(&triple(f.n, f.m_plus, f.m_minus));
            assert!(
                v.cases.contains(&CaseTag::RatioTwo),
                "family {f:?} missing RatioTwo: {v:?}"
            );
            if f.m_minus >= 2 {
                assert_eq!((f.m_plus + f.m_minus) % 2, 1, "sum must be odd: {f:?}");
            }
        }
    }

    #[test]
    fn enumerated_families_pass_stolz() {
        for f in enumerate_fkm(256).unwrap() {
            if f.m_minus >= 2 && f.m_minus < f.m_plus {
                let v = stolz(f.m_plus, f.m_minus, StolzVariant::HomotopySphere).unwrap();
                assert!(v.admissible(), "{f:?}");
            }
            let v = stolz(f.m_plus, f.m_minus, StolzVariant::Dupin).unwrap();
            assert!(v.admissible(), "{f:?}");
        }
    }

    #[test]
    fn triple_validation() {
        assert!(DimensionTriple::new(0, 1, 1).is_err());
        assert!(DimensionTriple::new(4, 0, 1).is_err());
        assert!(DimensionTriple::new(4, 5, 1).is_err());
        assert!(DimensionTriple::new(4, 1, 1).is_ok());
    }
}
