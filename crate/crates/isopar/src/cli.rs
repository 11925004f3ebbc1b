//! Run configuration, report schemas, and the implementations behind the
//! `isopar` binary.
//!
//! Reports are serialized deterministically: struct fields in declaration
//! order, floats always printed with 17 significant digits, so identical
//! flags and seed produce byte-identical output.

use std::io::{self, Write};

use serde::Serialize;

use crate::arith::delta;
use crate::classify::{
    admissibility, enumerate_fkm, munzner_g, stolz, CaseTag, DimensionTriple, FkmFamily,
    StolzReason, StolzVariant,
};
use crate::clifford::build_clifford_system;
use crate::fkm::{verify_cartan_munzner, FkmPolynomial};
use crate::geometry::{curvature_report, GeometryError, ProjectionTols};
use crate::homotopy::{
    fiber_homology, fundamental_group, rational_type, AbelianGroup, FiberConfig,
};

/// Exit codes shared by all commands.
pub mod exit {
    pub const OK: u8 = 0;
    /// classify: triple is inadmissible; fkm verify: identities violated.
    pub const NEGATIVE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const NON_CONVERGENCE: u8 = 3;
}

pub const SCHEMA_VERSION: &str = "1";

/// Seed, sample counts, and tolerances for the sampling commands.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol_cm: f64,
    pub tol_cluster: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 100,
            tol_cm: 1e-9,
            tol_cluster: 1e-5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Successful command output: exit code plus report body.
#[derive(Debug, Clone)]
pub struct CmdOut {
    pub code: u8,
    pub body: String,
}

/// Failed command: exit code plus message for stderr.
#[derive(Debug, Clone)]
pub struct CmdErr {
    pub code: u8,
    pub message: String,
}

impl CmdErr {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: exit::INPUT,
            message: message.into(),
        }
    }
}

struct SciFloatFormatter;

impl serde_json::ser::Formatter for SciFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize with fixed field order and 17-significant-digit floats.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFloatFormatter);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(buf).expect("serialized JSON is UTF-8")
}

#[derive(Serialize)]
struct StolzSideReport {
    applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    admissible: Option<bool>,
    reason: String,
}

fn stolz_side(m_plus: u64, m_minus: u64, variant: StolzVariant) -> StolzSideReport {
    match stolz(m_plus, m_minus, variant) {
        Ok(v) => StolzSideReport {
            applicable: true,
            admissible: Some(v.admissible()),
            reason: format!("{:?}", v.reason),
        },
        Err(e) => StolzSideReport {
            applicable: false,
            admissible: None,
            reason: e.to_string(),
        },
    }
}

#[derive(Serialize)]
struct StolzReport {
    m_plus: u64,
    m_minus: u64,
    homotopy_sphere: StolzSideReport,
    dupin: StolzSideReport,
}

#[derive(Serialize)]
struct ClassifyReport {
    schema_version: &'static str,
    triple: DimensionTriple,
    admissible: bool,
    cases: Vec<CaseTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    munzner_g: Option<u64>,
    interpretation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    stolz: Option<StolzReport>,
}

const INTERPRETATION_NOTE: &str = "cases are the necessary dimension conditions; \
realizability is the converse reading and is only constructed here for the Clifford families";

/// Admissibility verdict for (n; m_+, m_−), with the Stolz criteria attached
/// when n = 2(m_+ + m_−). Exit 0 when admissible, 1 when not.
pub fn cmd_classify(n: u64, m_plus: u64, m_minus: u64) -> Result<CmdOut, CmdErr> {
    let triple = DimensionTriple::new(n, m_plus, m_minus)
        .map_err(|e| CmdErr::input(e.to_string()))?;
    let verdict = admissibility(&triple);
    let ordered = (m_plus.max(m_minus), m_plus.min(m_minus));
    let stolz = (n == 2 * (m_plus + m_minus)).then(|| StolzReport {
        m_plus: ordered.0,
        m_minus: ordered.1,
        homotopy_sphere: stolz_side(ordered.0, ordered.1, StolzVariant::HomotopySphere),
        dupin: stolz_side(ordered.0, ordered.1, StolzVariant::Dupin),
    });
    let report = ClassifyReport {
        schema_version: SCHEMA_VERSION,
        triple,
        admissible: verdict.admissible(),
        cases: verdict.cases.clone(),
        g: verdict.g,
        munzner_g: munzner_g(&triple),
        interpretation: INTERPRETATION_NOTE,
        stolz,
    };
    Ok(CmdOut {
        code: if verdict.admissible() {
            exit::OK
        } else {
            exit::NEGATIVE
        },
        body: to_canonical_json(&report),
    })
}

#[derive(Serialize)]
struct MatrixFile {
    schema_version: &'static str,
    m: u64,
    k: u64,
    dim: usize,
    /// Row-major entries, one flat array per matrix P_0..P_m.
    matrices: Vec<Vec<i64>>,
}

fn fkm_polynomial(m: u64, k: u64) -> Result<FkmPolynomial, CmdErr> {
    FkmPolynomial::build(m, k).map_err(|e| CmdErr {
        code: exit::INPUT,
        message: format!("focal degenerate: {e}"),
    })
}

/// Build the Clifford system and export the matrices as JSON.
pub fn cmd_fkm_build(m: u64, k: u64) -> Result<CmdOut, CmdErr> {
    // surface the degeneracy check even though the matrices alone don't need it
    let _ = fkm_polynomial(m, k)?;
    let sys = build_clifford_system(m, k).map_err(|e| CmdErr::input(e.to_string()))?;
    let report = MatrixFile {
        schema_version: SCHEMA_VERSION,
        m,
        k,
        dim: sys.dim(),
        matrices: sys
            .matrices()
            .iter()
            .map(|p| p.transpose().as_slice().to_vec()) // nalgebra stores column-major
            .collect(),
    };
    Ok(CmdOut {
        code: exit::OK,
        body: to_canonical_json(&report),
    })
}

#[derive(Serialize)]
struct CartanMunznerJson {
    schema_version: &'static str,
    m: u64,
    k: u64,
    dim: usize,
    n: usize,
    mult_pair: (u64, u64),
    samples: usize,
    sphere_samples: usize,
    seed: u64,
    tol: f64,
    max_rel_grad_residual: f64,
    max_rel_laplacian_residual: f64,
    laplacian_expected: f64,
    sphere_min: f64,
    sphere_max: f64,
    passed: bool,
}

/// Verify the Cartan-Münzner identities at seeded random points.
pub fn cmd_fkm_verify(m: u64, k: u64, cfg: &RunConfig) -> Result<CmdOut, CmdErr> {
    let f = fkm_polynomial(m, k)?;
    let report = verify_cartan_munzner(&f, cfg.samples, 10 * cfg.samples, cfg.seed, cfg.tol_cm);
    let body = to_canonical_json(&CartanMunznerJson {
        schema_version: SCHEMA_VERSION,
        m,
        k,
        dim: f.ambient_dim(),
        n: f.hypersurface_dim(),
        mult_pair: f.mult_pair(),
        samples: report.samples,
        sphere_samples: report.sphere_samples,
        seed: report.seed,
        tol: report.tol,
        max_rel_grad_residual: report.max_rel_grad_residual,
        max_rel_laplacian_residual: report.max_rel_laplacian_residual,
        laplacian_expected: report.laplacian_expected,
        sphere_min: report.sphere_min,
        sphere_max: report.sphere_max,
        passed: report.passed,
    });
    Ok(CmdOut {
        code: if report.passed { exit::OK } else { exit::NEGATIVE },
        body,
    })
}

#[derive(Serialize)]
struct CurvatureJson {
    schema_version: &'static str,
    n: usize,
    level: f64,
    g: usize,
    multiplicities: Vec<usize>,
    theta: f64,
    #[serde(rename = "H")]
    mean_curvature: f64,
    #[serde(rename = "A2")]
    shape_norm_sq: f64,
    scal: f64,
    /// n² − 4n, recorded for comparison, not asserted.
    scal_paper: f64,
    scal_delta: f64,
    spread: f64,
    samples: usize,
    seed: u64,
    tol_cluster: f64,
}

/// Sample a level set and report the principal-curvature data.
pub fn cmd_fkm_curvature(m: u64, k: u64, level: f64, cfg: &RunConfig) -> Result<CmdOut, CmdErr> {
    let f = fkm_polynomial(m, k)?;
    let tols = ProjectionTols::default();
    let report = curvature_report(&f, level, cfg.samples, cfg.seed, &tols, cfg.tol_cluster)
        .map_err(|e| match e {
            GeometryError::NonConvergence { index } => CmdErr {
                code: exit::NON_CONVERGENCE,
                message: format!("sample {index} did not converge"),
            },
            GeometryError::InvalidLevel(_) | GeometryError::EmptySample => {
                CmdErr::input(e.to_string())
            }
            other => CmdErr {
                code: exit::NON_CONVERGENCE,
                message: other.to_string(),
            },
        })?;
    let body = to_canonical_json(&CurvatureJson {
        schema_version: SCHEMA_VERSION,
        n: report.n,
        level: report.level,
        g: report.g,
        multiplicities: report.multiplicities.clone(),
        theta: report.theta,
        mean_curvature: report.mean_curvature,
        shape_norm_sq: report.shape_norm_sq,
        scal: report.scalar_curvature,
        scal_paper: report.scal_reference,
        scal_delta: report.scal_delta,
        spread: report.spread,
        samples: report.samples,
        seed: cfg.seed,
        tol_cluster: cfg.tol_cluster,
    });
    Ok(CmdOut {
        code: exit::OK,
        body,
    })
}

#[derive(Serialize)]
struct HomologyEntry {
    i: u64,
    #[serde(flatten)]
    group: AbelianGroup,
    display: String,
}

#[derive(Serialize)]
struct FiberReport {
    schema_version: &'static str,
    m_plus: u64,
    m_minus: u64,
    twist_plus: bool,
    twist_minus: bool,
    /// True when the input pair was reordered to m_+ ≥ m_−.
    normalized: bool,
    pi1: String,
    max_degree: u64,
    homology: Vec<HomologyEntry>,
    rational_types: Vec<String>,
    /// rank H_i equals the Poincaré coefficient for every alternative, i ≤ max_degree.
    consistent: bool,
}

/// Fiber invariants: π₁, H_* up to the requested degree, and the rational
/// homotopy type alternatives, with the rank/series cross-check.
pub fn cmd_fiber(
    m_a: u64,
    m_b: u64,
    twist_a: bool,
    twist_b: bool,
    max_degree: u64,
) -> Result<CmdOut, CmdErr> {
    let (cfg, normalized) = FiberConfig::normalized(m_a, m_b, twist_a, twist_b)
        .map_err(|e| CmdErr::input(e.to_string()))?;
    let pi1 = fundamental_group(&cfg);
    let rt = rational_type(&cfg, false);
    let homology: Vec<HomologyEntry> = (0..=max_degree)
        .map(|i| {
            let group = fiber_homology(&cfg, i);
            HomologyEntry {
                i,
                display: group.to_string(),
                group,
            }
        })
        .collect();
    let consistent = match rt.poincare_series(max_degree as usize) {
        Ok(series) => homology
            .iter()
            .zip(&series)
            .all(|(h, coeff)| h.group.rank as u64 == *coeff),
        Err(_) => false,
    };
    let report = FiberReport {
        schema_version: SCHEMA_VERSION,
        m_plus: cfg.m_plus(),
        m_minus: cfg.m_minus(),
        twist_plus: cfg.twist_plus(),
        twist_minus: cfg.twist_minus(),
        normalized,
        pi1: pi1.to_string(),
        max_degree,
        homology,
        rational_types: rt.alternatives.iter().map(|e| e.to_string()).collect(),
        consistent,
    };
    Ok(CmdOut {
        code: exit::OK,
        body: to_canonical_json(&report),
    })
}

#[derive(Serialize)]
struct EnumerateRow {
    n: u64,
    m_plus: u64,
    m_minus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    sources: Option<Vec<String>>,
    cases: Vec<CaseTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stolz_homotopy_sphere: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stolz_dupin: Option<String>,
}

#[derive(Serialize)]
struct EnumerateReport {
    schema_version: &'static str,
    max_dim: u64,
    with_sources: bool,
    with_stolz: bool,
    rows: Vec<EnumerateRow>,
}

fn stolz_cell(m_plus: u64, m_minus: u64, variant: StolzVariant) -> String {
    match stolz(m_plus, m_minus, variant) {
        Ok(v) => match v.reason {
            StolzReason::ExceptionalPair => "ExceptionalPair".to_string(),
            StolzReason::Divisibility => "Divisibility".to_string(),
            StolzReason::Fails => "Fails".to_string(),
        },
        Err(_) => "N/A".to_string(),
    }
}

/// Enumerate the Clifford families with ambient sphere dimension at most
/// `max_dim`, grouped by (n, m_+, m_−). `--fkm` adds the (m, k) sources,
/// `--stolz` the Stolz verdicts.
pub fn cmd_enumerate(
    max_dim: u64,
    with_stolz: bool,
    with_fkm: bool,
    format: OutputFormat,
) -> Result<CmdOut, CmdErr> {
    let families = enumerate_fkm(max_dim).map_err(|e| CmdErr::input(e.to_string()))?;

    // group families with the same dimension data
    let mut rows: Vec<(u64, u64, u64, Vec<FkmFamily>)> = Vec::new();
    for f in families {
        match rows
            .iter_mut()
            .find(|(n, mp, mm, _)| *n == f.n && *mp == f.m_plus && *mm == f.m_minus)
        {
            Some((_, _, _, v)) => v.push(f),
            None => rows.push((f.n, f.m_plus, f.m_minus, vec![f])),
        }
    }
    rows.sort_by_key(|(n, mp, mm, _)| (*n, *mp, *mm));

    let rows: Vec<EnumerateRow> = rows
        .into_iter()
        .map(|(n, m_plus, m_minus, sources)| {
            let triple = DimensionTriple::new(n, m_plus, m_minus)
                .expect("enumerated triples are valid");
            EnumerateRow {
                n,
                m_plus,
                m_minus,
                sources: with_fkm.then(|| {
                    sources
                        .iter()
                        .map(|f| format!("FKM({},{})", f.m, f.k))
                        .collect()
                }),
                cases: admissibility(&triple).cases,
                stolz_homotopy_sphere: with_stolz
                    .then(|| stolz_cell(m_plus, m_minus, StolzVariant::HomotopySphere)),
                stolz_dupin: with_stolz.then(|| stolz_cell(m_plus, m_minus, StolzVariant::Dupin)),
            }
        })
        .collect();

    let body = match format {
        OutputFormat::Json => to_canonical_json(&EnumerateReport {
            schema_version: SCHEMA_VERSION,
            max_dim,
            with_sources: with_fkm,
            with_stolz,
            rows,
        }),
        OutputFormat::Csv => {
            let mut header = vec!["n", "m_plus", "m_minus"];
            if with_fkm {
                header.push("sources");
            }
            header.push("cases");
            if with_stolz {
                header.push("stolz_homotopy_sphere");
                header.push("stolz_dupin");
            }
            let mut lines = vec![header.join(",")];
            for r in &rows {
                let mut cells = vec![r.n.to_string(), r.m_plus.to_string(), r.m_minus.to_string()];
                if let Some(s) = &r.sources {
                    cells.push(s.join("|"));
                }
                cells.push(
                    r.cases
                        .iter()
                        .map(|c| format!("{c:?}"))
                        .collect::<Vec<_>>()
                        .join("|"),
                );
                if let Some(s) = &r.stolz_homotopy_sphere {
                    cells.push(s.clone());
                }
                if let Some(s) = &r.stolz_dupin {
                    cells.push(s.clone());
                }
                lines.push(cells.join(","));
            }
            lines.join("\n")
        }
    };
    Ok(CmdOut {
        code: exit::OK,
        body,
    })
}

/// Sanity helper used by the binary: 2kδ(m) for reporting.
pub fn ambient_dim(m: u64, k: u64) -> Option<u64> {
    delta(m).ok().map(|d| 2 * k * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_fixed_width() {
        #[derive(Serialize)]
        struct S {
            a: f64,
            b: f64,
            c: f64,
        }
        let json = to_canonical_json(&S {
            a: 0.0,
            b: -1.5,
            c: 1.0 / 3.0,
        });
        assert_eq!(
            json,
            r#"{"a":0.0000000000000000e0,"b":-1.5000000000000000e0,"c":3.3333333333333331e-1}"#
        );
        // round-trips as valid JSON
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["b"].as_f64().unwrap(), -1.5);
    }

    #[test]
    fn classify_exit_codes() {
        assert_eq!(cmd_classify(24, 8, 8).unwrap().code, exit::OK);
        assert_eq!(cmd_classify(8, 1, 1).unwrap().code, exit::NEGATIVE);
        assert_eq!(cmd_classify(0, 1, 1).unwrap_err().code, exit::INPUT);
        assert_eq!(cmd_classify(4, 5, 1).unwrap_err().code, exit::INPUT);
    }

    #[test]
    fn classify_includes_stolz_only_for_half_ratio() {
        let out = cmd_classify(18, 5, 4).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["stolz"]["homotopy_sphere"]["reason"], "ExceptionalPair");
        let out = cmd_classify(9, 5, 4).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert!(v.get("stolz").is_none());
    }

    #[test]
    fn fkm_degenerate_is_input_error() {
        let err = cmd_fkm_build(1, 1).unwrap_err();
        assert_eq!(err.code, exit::INPUT);
        assert!(err.message.contains("focal degenerate"));
    }

    #[test]
    fn fkm_build_is_row_major() {
        let out = cmd_fkm_build(1, 3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["dim"], 6);
        let mats = v["matrices"].as_array().unwrap();
        assert_eq!(mats.len(), 2);
        assert_eq!(mats[0].as_array().unwrap().len(), 36);
        // P_0 = diag(1,1,1,-1,-1,-1): row-major first row is (1,0,0,0,0,0)
        assert_eq!(mats[0][0], 1);
        assert_eq!(mats[0][1], 0);
        assert_eq!(mats[0][35], -1);
    }

    #[test]
    fn verify_command_passes() {
        let cfg = RunConfig {
            samples: 50,
            ..RunConfig::default()
        };
        let out = cmd_fkm_verify(2, 2, &cfg).unwrap();
        assert_eq!(out.code, exit::OK);
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["laplacian_expected"].as_f64().unwrap(), -8.0);
    }

    #[test]
    fn curvature_command_reports_multiplicities() {
        let cfg = RunConfig {
            samples: 5,
            seed: 42,
            ..RunConfig::default()
        };
        let out = cmd_fkm_curvature(1, 3, 0.0, &cfg).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["g"], 4);
        assert_eq!(v["multiplicities"].as_array().unwrap().len(), 4);
        assert!(v["scal"].as_f64().unwrap().abs() < 1e-6);
        let err = cmd_fkm_curvature(1, 3, 1.0, &cfg).unwrap_err();
        assert_eq!(err.code, exit::INPUT);
    }

    #[test]
    fn fiber_command_normalizes_and_cross_checks() {
        let out = cmd_fiber(2, 3, false, false, 20).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["normalized"], true);
        assert_eq!(v["m_plus"], 3);
        assert_eq!(v["consistent"], true);
        assert_eq!(v["pi1"], "1");
        let err = cmd_fiber(4, 3, true, false, 10).unwrap_err();
        assert_eq!(err.code, exit::INPUT);
    }

    #[test]
    fn fiber_q8_example() {
        let out = cmd_fiber(1, 1, true, true, 9).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["pi1"], "Q8");
        assert_eq!(v["homology"][1]["rank"], 0);
        assert_eq!(v["homology"][1]["torsion"][0], 2);
        assert_eq!(v["homology"][1]["torsion"][1], 2);
    }

    #[test]
    fn enumerate_rows_and_formats() {
        let out = cmd_enumerate(16, true, true, OutputFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        let rows = v["rows"].as_array().unwrap();
        let row = rows
            .iter()
            .find(|r| r["n"] == 14 && r["m_plus"] == 4 && r["m_minus"] == 3)
            .expect("(14; 4, 3) present");
        let sources: Vec<&str> = row["sources"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap())
            .collect();
        assert!(sources.contains(&"FKM(4,2)"));
        assert!(sources.contains(&"FKM(3,2)"));

        let csv = cmd_enumerate(6, false, false, OutputFormat::Csv).unwrap();
        assert!(csv.body.lines().any(|l| l.starts_with("4,1,1")));

        assert_eq!(
            cmd_enumerate(3, false, false, OutputFormat::Json)
                .unwrap_err()
                .code,
            exit::INPUT
        );
    }

    #[test]
    fn enumerate_json_is_deterministic() {
        let a = cmd_enumerate(64, true, true, OutputFormat::Json).unwrap();
        let b = cmd_enumerate(64, true, true, OutputFormat::Json).unwrap();
        assert_eq!(a.body, b.body);
    }
}
