//! The Grove-Halperin invariants of the inclusion fiber F of a dual-pair
//! decomposition: fundamental group, integral homology, and rational
//! homotopy type, indexed by the normal-sphere dimensions (m_+, m_−) and
//! the twist data of the two sphere fibrations.
//!
//! The homology tables and the rational types are cross-checked against
//! each other: the rank of H_i(F; Z) must equal the degree-i coefficient of
//! the Poincaré series of every listed rational type.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("fiber configuration requires m_+ >= m_- >= 1, got ({m_plus}, {m_minus})")]
    UnorderedPair { m_plus: u64, m_minus: u64 },
    #[error("twisting the {side} fibration requires the opposite fiber to be a circle (m = 1)")]
    IllegalTwist { side: &'static str },
    #[error("alternative rational types disagree on the Poincaré series")]
    AlternativesDisagree,
}

/// Input data for the fiber tables: normal-sphere dimensions with
/// m_+ ≥ m_− ≥ 1 and the twist flags. A fibration can only be twisted when
/// the companion fiber is a 1-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberConfig {
    m_plus: u64,
    m_minus: u64,
    twist_plus: bool,
    twist_minus: bool,
}

impl FiberConfig {
    pub fn new(
        m_plus: u64,
        m_minus: u64,
        twist_plus: bool,
        twist_minus: bool,
    ) -> Result<Self, HomotopyError> {
        if m_minus < 1 || m_plus < m_minus {
            return Err(HomotopyError::UnorderedPair { m_plus, m_minus });
        }
        if twist_plus && m_minus != 1 {
            return Err(HomotopyError::IllegalTwist { side: "plus" });
        }
        if twist_minus && m_plus != 1 {
            return Err(HomotopyError::IllegalTwist { side: "minus" });
        }
        Ok(Self {
            m_plus,
            m_minus,
            twist_plus,
            twist_minus,
        })
    }

    /// Build from an unordered pair, swapping the twist flags along with the
    /// multiplicities. Returns whether a swap happened.
    pub fn normalized(
        a: u64,
        b: u64,
        twist_a: bool,
        twist_b: bool,
    ) -> Result<(Self, bool), HomotopyError> {
        if a >= b {
            Ok((Self::new(a, b, twist_a, twist_b)?, false))
        } else {
            Ok((Self::new(b, a, twist_b, twist_a)?, true))
        }
    }

    pub fn m_plus(&self) -> u64 {
        self.m_plus
    }

    pub fn m_minus(&self) -> u64 {
        self.m_minus
    }

    pub fn twist_plus(&self) -> bool {
        self.twist_plus
    }

    pub fn twist_minus(&self) -> bool {
        self.twist_minus
    }

    fn twisted(&self) -> bool {
        self.twist_plus || self.twist_minus
    }
}

/// π₁(F).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pi1 {
    #[serde(rename = "1")]
    Trivial,
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Z x Z")]
    ZxZ,
    #[serde(rename = "Z x Z2")]
    ZxZ2,
    #[serde(rename = "Q8")]
    Q8,
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pi1::Trivial => "1",
            Pi1::Z => "Z",
            Pi1::ZxZ => "Z x Z",
            Pi1::ZxZ2 => "Z x Z2",
            Pi1::Q8 => "Q8",
        };
        f.write_str(s)
    }
}

/// Fundamental group of the fiber: trivial for m_± > 1, Z for m_+ > m_− = 1,
/// and for m_+ = m_− = 1 either Z⊕Z, Z⊕Z₂, or the order-8 quaternion group
/// depending on how many fibrations are twisted.
pub fn fundamental_group(cfg: &FiberConfig) -> Pi1 {
    if cfg.m_minus > 1 {
        Pi1::Trivial
    } else if cfg.m_plus > 1 {
        Pi1::Z
    } else {
        match (cfg.twist_plus, cfg.twist_minus) {
            (false, false) => Pi1::ZxZ,
            (true, true) => Pi1::Q8,
            _ => Pi1::ZxZ2,
        }
    }
}

/// A finitely generated abelian group in canonical form: free rank plus a
/// sorted multiset of prime-power torsion orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub rank: u32,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        Self { rank: 0, torsion: vec![] }
    }

    pub fn free(rank: u32) -> Self {
        Self { rank, torsion: vec![] }
    }

    pub fn with_torsion(rank: u32, mut torsion: Vec<u64>) -> Self {
        torsion.sort();
        Self { rank, torsion }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = (0..self.rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|t| format!("Z{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// H_i(F; Z) from the homology table. H_0 = Z always; the remaining rows are
/// periodic with modulus m_+ + m_−, m_+, 2m_+ + 2, 4, or 3 depending on the
/// configuration.
pub fn fiber_homology(cfg: &FiberConfig, i: u64) -> AbelianGroup {
    if i == 0 {
        return AbelianGroup::free(1);
    }
    let (mp, mm) = (cfg.m_plus, cfg.m_minus);
    if !cfg.twisted() {
        if mp == mm {
            // equal multiplicities, untwisted: Z^2 in degrees 0 mod m_+
            if i % mp == 0 {
                AbelianGroup::free(2)
            } else {
                AbelianGroup::zero()
            }
        } else {
            let s = mp + mm;
            let r = i % s;
            if r == 0 {
                AbelianGroup::free(2)
            } else if r == mp || r == mm {
                AbelianGroup::free(1)
            } else {
                AbelianGroup::zero()
            }
        }
    } else if mp > 1 {
        // m_+ > m_- = 1 with the plus fibration twisted
        let p = 2 * mp + 2;
        let r = i % p;
        if r == 0 {
            AbelianGroup::free(2)
        } else if r == 1 || r == p - 1 {
            AbelianGroup::free(1)
        } else if r == mp || r == mp + 1 {
            AbelianGroup::with_torsion(0, vec![2])
        } else {
            AbelianGroup::zero()
        }
    } else if cfg.twist_plus && cfg.twist_minus {
        match i % 3 {
            0 => AbelianGroup::free(2),
            1 => AbelianGroup::with_torsion(0, vec![2, 2]),
            _ => AbelianGroup::zero(),
        }
    } else {
        // m_+ = m_- = 1, exactly one twist
        match i % 4 {
            0 => AbelianGroup::free(2),
            1 => AbelianGroup::with_torsion(1, vec![2]),
            2 => AbelianGroup::with_torsion(0, vec![2]),
            _ => AbelianGroup::free(1),
        }
    }
}

/// The row modulus of the homology table for this configuration.
pub fn homology_period(cfg: &FiberConfig) -> u64 {
    let (mp, mm) = (cfg.m_plus, cfg.m_minus);
    if !cfg.twisted() {
        if mp == mm {
            mp
        } else {
            mp + mm
        }
    } else if mp > 1 {
        2 * mp + 2
    } else if cfg.twist_plus && cfg.twist_minus {
        3
    } else {
        4
    }
}

/// Named homogeneous quotients appearing as rational types, each carrying a
/// rationally equivalent product-of-atoms model used for series computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuotientTag {
    Su3ModT2,
    Sp2ModT2,
    G2ModT2,
    Sp3ModSp1Cubed,
    F4ModSpin8,
    So3ModZ2Z2,
    So4ModZ2Z2,
    So2So3ModZ2,
}

impl QuotientTag {
    /// A rationally equivalent expression, used for the Poincaré series.
    fn model(&self) -> Vec<RationalAtom> {
        use RationalAtom::*;
        match self {
            QuotientTag::Su3ModT2 => vec![AmSpace { m: 3, k: 2 }],
            QuotientTag::Sp2ModT2 => vec![AmSpace { m: 4, k: 2 }],
            QuotientTag::G2ModT2 => vec![AmSpace { m: 6, k: 2 }],
            QuotientTag::Sp3ModSp1Cubed => vec![AmSpace { m: 3, k: 4 }],
            QuotientTag::F4ModSpin8 => vec![AmSpace { m: 3, k: 8 }],
            QuotientTag::So3ModZ2Z2 => vec![Sphere(3)],
            QuotientTag::So4ModZ2Z2 => vec![Sphere(3), Sphere(3)],
            QuotientTag::So2So3ModZ2 => vec![Sphere(1), Sphere(3)],
        }
    }

    fn label(&self) -> &'static str {
        match self {
            QuotientTag::Su3ModT2 => "SU(3)/T^2",
            QuotientTag::Sp2ModT2 => "Sp(2)/T^2",
            QuotientTag::G2ModT2 => "G2/T^2",
            QuotientTag::Sp3ModSp1Cubed => "Sp(3)/Sp(1)^3",
            QuotientTag::F4ModSpin8 => "F4/Spin(8)",
            QuotientTag::So3ModZ2Z2 => "SO(3)/(Z2+Z2)",
            QuotientTag::So4ModZ2Z2 => "SO(4)/(Z2+Z2)",
            QuotientTag::So2So3ModZ2 => "(SO(2)xSO(3))/Z2",
        }
    }
}

/// One factor of a rational homotopy type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RationalAtom {
    /// S^k
    Sphere(u64),
    /// ΩS^k, the based loop space
    LoopSphere(u64),
    /// The space A_m(k) with cohomology Q[x,y]/(x^m, x²+y²) (x²+3y² for
    /// m = 3, 6), deg x = deg y = k.
    AmSpace { m: u32, k: u64 },
    NamedQuotient(QuotientTag),
}

impl fmt::Display for RationalAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalAtom::Sphere(k) => write!(f, "S^{k}"),
            RationalAtom::LoopSphere(k) => write!(f, "Loop(S^{k})"),
            RationalAtom::AmSpace { m, k } => write!(f, "A_{m}({k})"),
            RationalAtom::NamedQuotient(tag) => f.write_str(tag.label()),
        }
    }
}

/// A product of atoms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalExpr(pub Vec<RationalAtom>);

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// The rational homotopy type of the fiber: one or several alternative
/// expressions when the table does not decide among them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalType {
    pub alternatives: Vec<RationalExpr>,
}

impl RationalType {
    /// Poincaré series of the rational cohomology, asserting that every
    /// alternative yields the same coefficients.
    pub fn poincare_series(&self, max_degree: usize) -> Result<Vec<u64>, HomotopyError> {
        let mut it = self.alternatives.iter();
        let first = poincare_series(it.next().expect("at least one alternative"), max_degree);
        for alt in it {
            if poincare_series(alt, max_degree) != first {
                return Err(HomotopyError::AlternativesDisagree);
            }
        }
        Ok(first)
    }
}

fn mul_series(a: &[u64], b: &[u64]) -> Vec<u64> {
    let d = a.len();
    let mut out = vec![0u64; d];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(d - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn atom_series(atom: &RationalAtom, max_degree: usize) -> Vec<u64> {
    let d = max_degree + 1;
    let mut out = vec![0u64; d];
    match *atom {
        RationalAtom::Sphere(k) => {
            out[0] = 1;
            if (k as usize) < d {
                out[k as usize] += 1;
            }
        }
        RationalAtom::LoopSphere(k) => {
            if k % 2 == 1 {
                // H^*(ΩS^{2j+1}; Q) = Q[x], deg x = 2j
                let step = (k - 1) as usize;
                let mut i = 0;
                while i < d {
                    out[i] = 1;
                    i += step.max(1);
                }
            } else {
                // ΩS^{2j} is rationally S^{2j-1} × ΩS^{4j-1}
                let sphere = atom_series(&RationalAtom::Sphere(k - 1), max_degree);
                let loop_odd = atom_series(&RationalAtom::LoopSphere(2 * k - 1), max_degree);
                return mul_series(&sphere, &loop_odd);
            }
        }
        RationalAtom::AmSpace { m, k } => {
            // basis {x^j, x^{j-1} y}: 1, 2, …, 2, 1 in degrees 0, k, …, mk
            out[0] = 1;
            for j in 1..=(m as u64) {
                let deg = (j * k) as usize;
                if deg < d {
                    out[deg] += if j < m as u64 { 2 } else { 1 };
                }
            }
        }
        RationalAtom::NamedQuotient(tag) => {
            return poincare_series(&RationalExpr(tag.model()), max_degree);
        }
    }
    out
}

/// Rational Betti numbers b_0..b_max of a product expression.
pub fn poincare_series(expr: &RationalExpr, max_degree: usize) -> Vec<u64> {
    let mut acc = vec![0u64; max_degree + 1];
    acc[0] = 1;
    for atom in &expr.0 {
        acc = mul_series(&acc, &atom_series(atom, max_degree));
    }
    acc
}

/// The rational homotopy type of the fiber. Rows that list several
/// possibilities return them all; with `homotopy_sphere_context` set, the
/// alternatives A₄(4)×ΩS¹⁷ and A₆(4)×ΩS²⁵ are removed (they cannot occur
/// when the ambient space is a homotopy sphere and the fibrations are the
/// normal sphere bundles).
pub fn rational_type(cfg: &FiberConfig, homotopy_sphere_context: bool) -> RationalType {
    use QuotientTag::*;
    use RationalAtom::*;
    let (mp, mm) = (cfg.m_plus, cfg.m_minus);
    let expr = |atoms: Vec<RationalAtom>| RationalExpr(atoms);

    let alternatives = if mp == 1 {
        // m_+ = m_- = 1
        match (cfg.twist_plus, cfg.twist_minus) {
            (false, false) => vec![
                expr(vec![Sphere(1), Sphere(1), LoopSphere(3)]),
                expr(vec![Sphere(1), LoopSphere(2)]),
            ],
            (true, true) => vec![
                expr(vec![NamedQuotient(So3ModZ2Z2), LoopSphere(4)]),
                expr(vec![NamedQuotient(So4ModZ2Z2), LoopSphere(7)]),
            ],
            _ => vec![expr(vec![NamedQuotient(So2So3ModZ2), LoopSphere(5)])],
        }
    } else if mm == 1 {
        if cfg.twist_plus {
            vec![expr(vec![
                Sphere(1),
                Sphere(2 * mp + 1),
                LoopSphere(2 * mp + 3),
            ])]
        } else {
            let mut alts = vec![expr(vec![Sphere(1), Sphere(mp), LoopSphere(mp + 2)])];
            if mp % 2 == 0 {
                alts.push(expr(vec![
                    Sphere(1),
                    Sphere(mp),
                    Sphere(mp + 1),
                    LoopSphere(2 * mp + 3),
                ]));
            }
            alts
        }
    } else if mp != mm {
        vec![expr(vec![Sphere(mp), Sphere(mm), LoopSphere(mp + mm + 1)])]
    } else {
        // equal multiplicities m_+ = m_- >= 2
        let mut alts = vec![
            expr(vec![Sphere(mp), Sphere(mp), LoopSphere(2 * mp + 1)]),
            expr(vec![Sphere(mp), LoopSphere(mp + 1)]),
        ];
        match mp {
            2 => {
                alts.push(expr(vec![NamedQuotient(Su3ModT2), LoopSphere(7)]));
                alts.push(expr(vec![NamedQuotient(Sp2ModT2), LoopSphere(9)]));
                alts.push(expr(vec![NamedQuotient(G2ModT2), LoopSphere(13)]));
            }
            4 => {
                alts.push(expr(vec![NamedQuotient(Sp3ModSp1Cubed), LoopSphere(13)]));
                if !homotopy_sphere_context {
                    alts.push(expr(vec![AmSpace { m: 4, k: 4 }, LoopSphere(17)]));
                    alts.push(expr(vec![AmSpace { m: 6, k: 4 }, LoopSphere(25)]));
                }
            }
            8 => {
                alts.push(expr(vec![NamedQuotient(F4ModSpin8), LoopSphere(25)]));
            }
            _ => {}
        }
        alts
    };

    RationalType { alternatives }
}

/// All legal twist configurations for an ordered pair m_+ ≥ m_−.
pub fn legal_configs(m_plus: u64, m_minus: u64) -> Vec<FiberConfig> {
    let mut out = Vec::new();
    for tp in [false, true] {
        for tm in [false, true] {
            if let Ok(cfg) = FiberConfig::new(m_plus, m_minus, tp, tm) {
                out.push(cfg);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(mp: u64, mm: u64, tp: bool, tm: bool) -> FiberConfig {
        FiberConfig::new(mp, mm, tp, tm).unwrap()
    }

    #[test]
    fn twist_legality() {
        assert!(FiberConfig::new(4, 3, true, false).is_err());
        assert!(FiberConfig::new(4, 3, false, true).is_err());
        assert!(FiberConfig::new(3, 1, true, false).is_ok());
        assert!(FiberConfig::new(3, 1, false, true).is_err());
        assert!(FiberConfig::new(1, 1, true, true).is_ok());
        assert!(FiberConfig::new(2, 3, false, false).is_err());
    }

    #[test]
    fn normalization_swaps_twists() {
        let (c, swapped) = FiberConfig::normalized(1, 3, false, true).unwrap();
        assert!(swapped);
        assert_eq!((c.m_plus(), c.m_minus()), (3, 1));
        assert!(c.twist_plus() && !c.twist_minus());
        let (_, swapped) = FiberConfig::normalized(3, 1, false, false).unwrap();
        assert!(!swapped);
    }

    #[test]
    fn fundamental_group_table() {
        assert_eq!(fundamental_group(&cfg(4, 3, false, false)), Pi1::Trivial);
        assert_eq!(fundamental_group(&cfg(3, 1, false, false)), Pi1::Z);
        assert_eq!(fundamental_group(&cfg(1, 1, false, false)), Pi1::ZxZ);
        assert_eq!(fundamental_group(&cfg(1, 1, true, false)), Pi1::ZxZ2);
        assert_eq!(fundamental_group(&cfg(1, 1, false, true)), Pi1::ZxZ2);
        assert_eq!(fundamental_group(&cfg(1, 1, true, true)), Pi1::Q8);
    }

    #[test]
    fn homology_examples() {
        let c43 = cfg(4, 3, false, false);
        assert_eq!(fiber_homology(&c43, 7), AbelianGroup::free(2));
        assert_eq!(fiber_homology(&c43, 4), AbelianGroup::free(1));
        assert_eq!(fiber_homology(&c43, 5), AbelianGroup::zero());

        let c31t = cfg(3, 1, true, false);
        assert_eq!(fiber_homology(&c31t, 3), AbelianGroup::with_torsion(0, vec![2]));

        let c11t = cfg(1, 1, true, false);
        assert_eq!(fiber_homology(&c11t, 2), AbelianGroup::with_torsion(0, vec![2]));

        let c11tt = cfg(1, 1, true, true);
        assert_eq!(
            fiber_homology(&c11tt, 1),
            AbelianGroup::with_torsion(0, vec![2, 2])
        );
    }

    #[test]
    fn h0_is_always_z() {
        for (mp, mm) in [(1, 1), (3, 1), (4, 4), (5, 2)] {
            for c in legal_configs(mp, mm) {
                assert_eq!(fiber_homology(&c, 0), AbelianGroup::free(1));
            }
        }
    }

    #[test]
    fn homology_is_periodic() {
        for (mp, mm) in [(1u64, 1u64), (3, 1), (4, 3), (4, 4), (7, 2)] {
            for c in legal_configs(mp, mm) {
                let p = homology_period(&c);
                for i in (p + 1)..(p + 40) {
                    assert_eq!(
                        fiber_homology(&c, i),
                        fiber_homology(&c, i + p),
                        "cfg {c:?}, i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn sphere_series() {
        let s = poincare_series(&RationalExpr(vec![RationalAtom::Sphere(4)]), 8);
        assert_eq!(s, vec![1, 0, 0, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn a2_series_is_a_product_of_spheres() {
        // A_2(k) is rationally S^k × S^k.
        for k in [2u64, 4, 6] {
            let a2 = poincare_series(
                &RationalExpr(vec![RationalAtom::AmSpace { m: 2, k }]),
                (3 * k) as usize,
            );
            let ss = poincare_series(
                &RationalExpr(vec![RationalAtom::Sphere(k), RationalAtom::Sphere(k)]),
                (3 * k) as usize,
            );
            assert_eq!(a2, ss);
        }
    }

    #[test]
    fn product_series_example() {
        // S^4 × S^3 × ΩS^8 through degree 14.
        let expr = RationalExpr(vec![
            RationalAtom::Sphere(4),
            RationalAtom::Sphere(3),
            RationalAtom::LoopSphere(8),
        ]);
        assert_eq!(
            poincare_series(&expr, 14),
            vec![1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2]
        );
    }

    #[test]
    fn even_loop_space_splits() {
        // ΩS^4 is rationally S^3 × ΩS^7.
        let lhs = poincare_series(&RationalExpr(vec![RationalAtom::LoopSphere(4)]), 20);
        let rhs = poincare_series(
            &RationalExpr(vec![RationalAtom::Sphere(3), RationalAtom::LoopSphere(7)]),
            20,
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_type_examples() {
        let t = rational_type(&cfg(4, 3, false, false), false);
        assert_eq!(t.alternatives.len(), 1);
        assert_eq!(t.alternatives[0].to_string(), "S^4 x S^3 x Loop(S^8)");

        let t = rational_type(&cfg(3, 1, true, false), false);
        assert_eq!(t.alternatives[0].to_string(), "S^1 x S^7 x Loop(S^9)");
    }

    #[test]
    fn homotopy_sphere_context_excludes_exceptional_types() {
        let all = rational_type(&cfg(4, 4, false, false), false);
        let restricted = rational_type(&cfg(4, 4, false, false), true);
        let has = |t: &RationalType, m: u32| {
            t.alternatives.iter().any(|e| {
                e.0.iter()
                    .any(|a| matches!(a, RationalAtom::AmSpace { m: mm, .. } if *mm == m))
            })
        };
        assert!(has(&all, 4) && has(&all, 6));
        assert!(!has(&restricted, 4) && !has(&restricted, 6));
        let sp3 = |t: &RationalType| {
            t.alternatives.iter().any(|e| {
                e.0.iter().any(|a| {
                    matches!(a, RationalAtom::NamedQuotient(QuotientTag::Sp3ModSp1Cubed))
                })
            })
        };
        assert!(sp3(&all) && sp3(&restricted));
    }

    #[test]
    fn ranks_match_poincare_coefficients() {
        // The module's core cross-check, on a moderate range; the acceptance
        // suite runs the full one.
        for mm in 1u64..=6 {
            for mp in mm..=6 {
                for c in legal_configs(mp, mm) {
                    for context in [false, true] {
                        let t = rational_type(&c, context);
                        let series = t.poincare_series(40).unwrap();
                        for (i, coeff) in series.iter().enumerate() {
                            let rank = fiber_homology(&c, i as u64).rank as u64;
                            assert_eq!(
                                rank, *coeff,
                                "cfg {c:?} degree {i}: rank {rank} vs series {coeff}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn group_display() {
        assert_eq!(AbelianGroup::zero().to_string(), "0");
        assert_eq!(AbelianGroup::free(2).to_string(), "Z + Z");
        assert_eq!(AbelianGroup::with_torsion(1, vec![2]).to_string(), "Z + Z2");
        assert_eq!(
            AbelianGroup::with_torsion(0, vec![2, 2]).to_string(),
            "Z2 + Z2"
        );
    }
}
