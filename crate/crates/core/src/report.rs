//! Run configuration and the command reports behind the `galois-loci` binary.
//! Each command returns a serializable report; rendering as JSON or as a
//! plain table is kept separate so output stays byte-identical for a seed.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;

use crate::acceptance::{run_all, AcceptanceConfig, CriterionResult};
use crate::error::{Error, Result};
use crate::families::{enumerate_families, FamilyRecord, SamplingOptions};
use crate::form::BinaryForm;
use crate::galois::{
    center_from_section, meets_curve, plucker, GaloisSection, LinearSystem, PluckerPoint, ProjPoint,
    ProjectionCenter,
};
use crate::groups::{conjugated_pair, GroupSpec};
use crate::oracle::{is_galois, GaloisReport, OracleConfig};

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub tol_accept: f64,
    pub tol_dedupe: f64,
    pub sample_count: usize,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            tol_accept: 1e-8,
            tol_dedupe: 1e-6,
            sample_count: 50,
            output: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, t) in [("tol-accept", self.tol_accept), ("tol-dedupe", self.tol_dedupe)] {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::Invalid(format!("{name} must be a positive number, got {t}")));
            }
        }
        if self.sample_count == 0 {
            return Err(Error::Invalid("samples must be at least 1".into()));
        }
        Ok(())
    }

    pub fn oracle(&self) -> OracleConfig {
        OracleConfig {
            tol_accept: self.tol_accept,
            tol_dedupe: self.tol_dedupe,
            seed: self.seed,
            ..OracleConfig::default()
        }
    }

    pub fn acceptance(&self) -> AcceptanceConfig {
        AcceptanceConfig {
            oracle: self.oracle(),
            samples: self.sample_count,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

/// Pretty JSON or a plain-text table, always ending in a newline.
pub trait Render: Serialize {
    fn table(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamiliesReport {
    pub degree: usize,
    pub complete: bool,
    pub families: Vec<FamilyRecord>,
}

pub fn cmd_families(system: &LinearSystem, cfg: &RunConfig) -> FamiliesReport {
    let opts = SamplingOptions {
        conjugators: cfg.sample_count,
        seed: cfg.seed,
    };
    FamiliesReport {
        degree: system.degree(),
        complete: system.is_complete(),
        families: enumerate_families(system, &opts),
    }
}

impl Render for FamiliesReport {
    fn table(&self) -> String {
        let mut s = format!(
            "{:<14} {:>3} {:>5} {:>5} {:>5} {:>9} {:>5}\n",
            "kind", "m", "fiber", "base", "total", "disjoint", "vary"
        );
        for r in &self.families {
            let _ = writeln!(
                s,
                "{:<14} {:>3} {:>5} {:>5} {:>5} {:>9} {:>5}",
                r.kind.to_string(),
                r.m,
                r.fiber_dim,
                r.base_dim,
                r.total_dim,
                r.disjoint_from_curve,
                r.fiber_dim_may_vary
            );
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub center: ProjectionCenter,
    pub meets_curve: Vec<ProjPoint>,
    #[serde(flatten)]
    pub report: GaloisReport,
}

/// Galois test for a center. Centers meeting the curve are composed after
/// removing the base locus, as the oracle does.
pub fn cmd_verify(center: &ProjectionCenter, system: &LinearSystem, cfg: &RunConfig) -> Result<VerifyReport> {
    if center.degree() != system.degree() || center.ambient_dim() != system.ambient_dim() {
        return Err(Error::Invalid(format!(
            "center lives in P^{} for d = {}, system in P^{} for d = {}",
            center.ambient_dim(),
            center.degree(),
            system.ambient_dim(),
            system.degree()
        )));
    }
    Ok(VerifyReport {
        center: center.clone(),
        meets_curve: meets_curve(center, system)?,
        report: is_galois(center, system, &cfg.oracle())?,
    })
}

impl Render for VerifyReport {
    fn table(&self) -> String {
        let r = &self.report;
        let mut s = String::new();
        let _ = writeln!(s, "galois        {}", r.galois);
        let _ = writeln!(s, "degree        {}", r.degree);
        let _ = writeln!(s, "deck order    {}", r.deck_order);
        if let Some(k) = r.kind {
            let _ = writeln!(s, "group         {k}");
        }
        let _ = writeln!(s, "residual max  {:.3e}", r.residual_max);
        let _ = writeln!(s, "meets curve   {}", self.meets_curve.len());
        let _ = writeln!(s, "seed          {}", r.seed);
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PluckerJson {
    pub pairs: Vec<(usize, usize)>,
    pub minors: Vec<crate::field::Coef>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub group: GroupSpec,
    pub section: BinaryForm,
    pub center: ProjectionCenter,
    pub plucker: PluckerJson,
    pub meets_curve: Vec<ProjPoint>,
}

/// The center attached to `(G, s)`; fails with the violated inclusion when
/// `s` is outside the Galois space of `V`.
pub fn cmd_center(group: &GroupSpec, section: BinaryForm, system: &LinearSystem) -> Result<CenterReport> {
    let pair = conjugated_pair(group)?;
    let s = GaloisSection::new(&pair, section.clone(), system)?;
    let center = center_from_section(&pair, &s, system)?;
    let PluckerPoint { minors } = plucker(&center)?;
    Ok(CenterReport {
        group: group.clone(),
        section,
        plucker: PluckerJson {
            pairs: PluckerPoint::index_pairs(center.ambient_dim() + 1),
            minors,
        },
        meets_curve: meets_curve(&center, system)?,
        center,
    })
}

impl Render for CenterReport {
    fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group    {}", self.group.kind);
        let _ = writeln!(s, "section  {}", self.section);
        for row in self.center.pencil().row_vecs() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(s, "pencil   [{}]", cells.join(", "));
        }
        let minors: Vec<String> = self.plucker.minors.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "plucker  [{}]", minors.join(", "));
        let _ = writeln!(s, "meets    {}", self.meets_curve.len());
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
    pub warning_count: usize,
}

pub fn cmd_selftest(cfg: &RunConfig) -> SelftestReport {
    let criteria = run_all(&cfg.acceptance());
    SelftestReport {
        passed: criteria.iter().all(|c| c.passed),
        seed: cfg.seed,
        warning_count: criteria.iter().map(|c| c.warnings.len()).sum(),
        criteria,
    }
}

impl SelftestReport {
    pub fn warnings(&self) -> impl Iterator<Item = &str> {
        self.criteria.iter().flat_map(|c| c.warnings.iter().map(String::as_str))
    }
}

impl Render for SelftestReport {
    /// One line per criterion, with timings, then the overall verdict.
    fn table(&self) -> String {
        let mut s: String = self.criteria.iter().map(|c| c.line() + "\n").collect();
        s.push_str(if self.passed { "PASS\n" } else { "FAIL\n" });
        s
    }
}
