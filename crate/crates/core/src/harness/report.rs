//! Report data model. Serialization is stable: struct fields keep their
//! declaration order and all collections are deterministically ordered, so
//! reports are byte-identical across runs with the same config and seed.
//! The `timings` section holds deterministic work counters, not wall-clock
//! times, for the same reason.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Serialize, Clone, Debug)]
pub struct ConfigInfo {
    pub family: String,
    pub m: usize,
    pub ell: u64,
    pub kappa: String,
    pub seed: u64,
    pub order_check: bool,
    pub lattice_enum: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct RootsInfo {
    pub c1: i64,
    pub c2: i64,
    pub c1_mod: u8,
    pub c2_mod: u8,
    pub equal_mod: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct ParamsInfo {
    pub a: i64,
    pub b: i64,
    pub r: i64,
    pub s: i64,
}

#[derive(Serialize, Clone, Debug)]
pub struct FactorInfo {
    pub dim: usize,
    pub iso_id: usize,
    pub multiplicity: usize,
    pub label: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct DimsInfo {
    pub rational: (u64, u64),
    /// (root, dim U'_c, dim U_c) over GF(ell).
    pub graph_mod_ell: Vec<(i64, usize, usize)>,
}

#[derive(Serialize, Clone, Debug)]
pub struct OrbitReport {
    pub kappa: i8,
    pub npoints: usize,
    pub parameters: ParamsInfo,
    pub dims: DimsInfo,
    pub factors: Vec<FactorInfo>,
    pub socle_series: Vec<Vec<FactorInfo>>,
    pub head: Vec<FactorInfo>,
    pub summands: Vec<usize>,
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub citation: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(
        name: impl Into<String>,
        citation: impl Into<String>,
        pass: bool,
        detail: impl Into<String>,
    ) -> Self {
        CheckResult {
            name: name.into(),
            citation: citation.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub config: ConfigInfo,
    pub ell_class: String,
    pub point_counts: (usize, usize, usize),
    pub roots: RootsInfo,
    pub orbits: Vec<OrbitReport>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    pub timings: BTreeMap<String, u64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary: one line per check plus a verdict.
    pub fn render_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "== {}_{}(3), ell = {} [{}], kappa = {}, seed = {}",
            c.family, c.m, c.ell, self.ell_class, c.kappa, c.seed
        );
        let _ = writeln!(
            out,
            "   points (P^0, P^+, P^-) = {:?}; roots {} / {} (mod ell: {} / {}{})",
            self.point_counts,
            self.roots.c1,
            self.roots.c2,
            self.roots.c1_mod,
            self.roots.c2_mod,
            if self.roots.equal_mod { ", equal" } else { "" }
        );
        for orbit in &self.orbits {
            let factors: Vec<String> = orbit
                .factors
                .iter()
                .map(|f| {
                    if f.multiplicity == 1 {
                        format!("{}({})", f.label, f.dim)
                    } else {
                        format!("{}({})x{}", f.label, f.dim, f.multiplicity)
                    }
                })
                .collect();
            let series: Vec<String> = orbit
                .socle_series
                .iter()
                .map(|layer| {
                    let parts: Vec<String> = layer
                        .iter()
                        .map(|f| {
                            if f.multiplicity == 1 {
                                f.label.clone()
                            } else {
                                format!("{}x{}", f.label, f.multiplicity)
                            }
                        })
                        .collect();
                    parts.join("+")
                })
                .collect();
            let _ = writeln!(
                out,
                "   kappa = {:+}: |P| = {}, (a,b,r,s) = ({},{},{},{})",
                orbit.kappa, orbit.npoints, orbit.parameters.a, orbit.parameters.b,
                orbit.parameters.r, orbit.parameters.s
            );
            let _ = writeln!(
                out,
                "     factors {} | socle series {} | summands {:?}",
                factors.join(" + "),
                series.join(" - "),
                orbit.summands
            );
        }
        for ck in &self.checks {
            let _ = writeln!(
                out,
                "   [{}] {:<30} {} ({})",
                if ck.pass { "pass" } else { "FAIL" },
                ck.name,
                ck.citation,
                ck.detail
            );
        }
        let _ = writeln!(
            out,
            "   verdict: {}",
            if self.passed { "ALL CHECKS PASS" } else { "FAILURES PRESENT" }
        );
        out
    }
}
