//! The acceptance suite: eight end-to-end criteria, each reporting pass/fail
//! with a one-line detail. Shared by `galois-loci selftest` and the
//! `acceptance` test target.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::field::{ratio, Coef};
use crate::form::BinaryForm;
use crate::galois::{
    center_from_section, galois_space, plucker, GaloisSection, LinearSystem, PluckerPoint, ProjectionCenter,
};
use crate::groups::{
    catalog_kinds, conjugated_pair, generate_group, standard_generators, standard_invariant_pair,
    verify_invariance, GroupKind, GroupSpec,
};
use crate::families::intermediate_factorization;
use crate::oracle::{compose_projection, compose_projection_with_base, is_galois, is_galois_map, OracleConfig};
use crate::sample;

#[derive(Clone, Copy, Debug)]
pub struct AcceptanceConfig {
    pub oracle: OracleConfig,
    /// Samples per family for the injectivity and disjointness criteria.
    pub samples: usize,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            oracle: OracleConfig::default(),
            samples: 50,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub time_limit: Option<Duration>,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

impl CriterionResult {
    /// `PASS [3] dimension law (0.12 s): …`
    pub fn line(&self) -> String {
        let limit = self
            .time_limit
            .map(|l| format!(", limit {} s", l.as_secs()))
            .unwrap_or_default();
        format!(
            "{} [{}] {} ({:.2} s{limit}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

struct Outcome {
    passed: bool,
    detail: String,
    warnings: Vec<String>,
}

impl Outcome {
    fn new(passed: bool, detail: String) -> Self {
        Outcome {
            passed,
            detail,
            warnings: Vec::new(),
        }
    }
}

fn timed(
    id: u8,
    name: &'static str,
    time_limit: Option<Duration>,
    body: impl FnOnce() -> Outcome,
) -> CriterionResult {
    let start = Instant::now();
    let out = body();
    let elapsed = start.elapsed();
    let in_time = time_limit.is_none_or(|l| elapsed < l);
    let detail = if in_time {
        out.detail
    } else {
        format!("{}; exceeded the time limit", out.detail)
    };
    CriterionResult {
        id,
        name,
        passed: out.passed && in_time,
        detail,
        elapsed,
        time_limit,
        warnings: out.warnings,
    }
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "conic partition at d = 2"),
    (2, "round trip through the oracle, d = 2..8"),
    (3, "dimension law, d ≤ 12"),
    (4, "Plücker injectivity at d = 5"),
    (5, "disjointness across families at d = 6"),
    (6, "intermediate factorization, d ≤ 8"),
    (7, "random quartic centers are not Galois"),
    (8, "catalog self-certification"),
];

/// Runs a single criterion by number (1–8).
pub fn run_criterion(id: u8, cfg: &AcceptanceConfig) -> CriterionResult {
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .expect("criterion ids are 1..=8");
    match id {
        1 => timed(id, name, Some(Duration::from_secs(10)), || conic_partition(cfg)),
        2 => timed(id, name, Some(Duration::from_secs(60)), || round_trip(cfg)),
        3 => timed(id, name, None, dimension_law),
        4 => timed(id, name, None, || injectivity(cfg)),
        5 => timed(id, name, None, || disjointness(cfg)),
        6 => timed(id, name, None, || intermediate(cfg)),
        7 => timed(id, name, Some(Duration::from_secs(120)), || negative_control(cfg)),
        _ => timed(id, name, None, catalog_certification),
    }
}

pub fn run_all(cfg: &AcceptanceConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(id, cfg)).collect()
}

/// Points of `P²` used for the partition check: the affine grid
/// `(a : b : 1)` with `a, b ∈ {−5, −4.5, …, 5}` and the 21 points
/// `(1 : t : 0)`, `t ∈ {−5, …, 4.5}`, and `(0 : 1 : 0)` on the line at infinity.
pub fn partition_grid() -> Vec<[Coef; 3]> {
    let half = |k: i64| Coef::from(ratio(k, 2));
    let mut pts = Vec::with_capacity(21 * 21 + 21);
    for i in -10..=10 {
        for j in -10..=10 {
            pts.push([half(i), half(j), Coef::one()]);
        }
    }
    for k in -10..10 {
        pts.push([Coef::one(), half(k), Coef::zero()]);
    }
    pts.push([Coef::zero(), Coef::one(), Coef::zero()]);
    pts
}

fn conic_partition(cfg: &AcceptanceConfig) -> Outcome {
    let v2 = LinearSystem::complete(2).expect("degree 2");
    let pts = partition_grid();
    let verdicts: Vec<std::result::Result<bool, String>> = pts
        .par_iter()
        .map(|z| {
            let center = ProjectionCenter::spanned_by(2, &[z.to_vec()]).map_err(|e| e.to_string())?;
            let f = compose_projection(&center, &v2).map_err(|e| e.to_string())?;
            match (on_conic(z), f.degree()) {
                (true, 1) => Ok(true),
                (false, 2) => {
                    let r = is_galois_map(&f, &cfg.oracle).map_err(|e| e.to_string())?;
                    if r.galois && r.deck_order == 2 && r.kind == Some(GroupKind::Cyclic(2)) {
                        Ok(false)
                    } else {
                        Err(format!("({}:{}:{}) off the conic has deck order {}", z[0], z[1], z[2], r.deck_order))
                    }
                }
                (c, e) => Err(format!("({}:{}:{}) on_conic={c} gives degree {e}", z[0], z[1], z[2])),
            }
        })
        .collect();
    let errors: Vec<&String> = verdicts.iter().filter_map(|v| v.as_ref().err()).collect();
    let on = verdicts.iter().filter(|v| matches!(v, Ok(true))).count();
    let off = verdicts.iter().filter(|v| matches!(v, Ok(false))).count();
    let detail = match errors.first() {
        None => format!("{} centers: {on} on the conic (degree 1), {off} Galois of order 2", pts.len()),
        Some(e) => format!("{} exception(s), first: {e}", errors.len()),
    };
    Outcome::new(errors.is_empty(), detail)
}

struct RoundTripTask {
    degree: usize,
    kind: GroupKind,
    stream: u64,
}

fn round_trip(cfg: &AcceptanceConfig) -> Outcome {
    let mut tasks = Vec::new();
    for degree in 2..=8 {
        for kind in catalog_kinds(degree) {
            for _ in 0..10 {
                let stream = tasks.len() as u64;
                tasks.push(RoundTripTask { degree, kind, stream });
            }
        }
    }
    let results: Vec<(usize, Vec<String>, Vec<String>)> = tasks
        .par_iter()
        .map(|t| {
            let mut rng = sample::substream(cfg.oracle.seed ^ 0x2b, t.stream);
            let v = LinearSystem::complete(t.degree).expect("degree ≥ 2");
            let theta = sample::conjugator(&mut rng);
            let spec = GroupSpec::conjugated(t.kind, theta);
            let pair = conjugated_pair(&spec).expect("invertible conjugator");
            let space = galois_space(&pair, &v);
            let mut failures = Vec::new();
            let mut warnings = Vec::new();
            let mut ok = 0;
            for _ in 0..5 {
                let s = sample::combination(&mut rng, &space);
                let label = format!("{} at d = {}, θ = {}, s = {s}", t.kind, t.degree, spec.theta);
                let mut check = || -> std::result::Result<(), String> {
                    let section = GaloisSection::new(&pair, s.clone(), &v).map_err(|e| e.to_string())?;
                    let center = center_from_section(&pair, &section, &v).map_err(|e| e.to_string())?;
                    let (f, g) = compose_projection_with_base(&center, &v).map_err(|e| e.to_string())?;
                    if !f.same_pencil(&pair.a, &pair.b) {
                        return Err("composed pencil differs from the conjugated pair".into());
                    }
                    if !g.is_proportional(&s) {
                        return Err(format!("base locus {g} is not proportional to s"));
                    }
                    let r = is_galois_map(&f, &cfg.oracle).map_err(|e| e.to_string())?;
                    warnings.extend(r.warnings.iter().map(|w| format!("{label}: {w}")));
                    if !r.galois || r.kind != Some(t.kind) {
                        return Err(format!(
                            "oracle reports galois={} kind={:?} (deck {} of {})",
                            r.galois, r.kind, r.deck_order, r.degree
                        ));
                    }
                    Ok(())
                };
                match check() {
                    Ok(()) => ok += 1,
                    Err(e) => failures.push(format!("{label}: {e}")),
                }
            }
            (ok, failures, warnings)
        })
        .collect();
    let total = tasks.len() * 5;
    let ok: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<&String> = results.iter().flat_map(|r| &r.1).collect();
    let detail = match failures.first() {
        None => format!("{ok}/{total} sections round-trip with the constructing group"),
        Some(f) => format!("{ok}/{total} pass; first failure: {f}"),
    };
    Outcome {
        passed: failures.is_empty(),
        detail,
        warnings: results.into_iter().flat_map(|r| r.2).collect(),
    }
}

fn dimension_law() -> Outcome {
    let cases: Vec<(usize, GroupKind)> = (1..=12)
        .flat_map(|d| catalog_kinds(d).into_iter().map(move |k| (d, k)))
        .collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|&(d, kind)| {
            let v = LinearSystem::complete(d).expect("degree ≥ 1");
            let dim = galois_space(&standard_invariant_pair(kind), &v).len();
            (dim != d - kind.order() + 1).then(|| format!("{kind} at d = {d}: dimension {dim}"))
        })
        .collect();
    let detail = match bad.first() {
        None => format!("{} (kind, d) cases satisfy dim = d − m + 1", cases.len()),
        Some(b) => format!("{} violation(s), first: {b}", bad.len()),
    };
    Outcome::new(bad.is_empty(), detail)
}

/// Families at degree `d` whose section space has dimension at least `min_dim`.
fn families_with_space(d: usize, min_dim: usize) -> Vec<GroupKind> {
    catalog_kinds(d)
        .into_iter()
        .filter(|k| d + 1 - k.order() >= min_dim)
        .collect()
}

fn sample_center(
    rng: &mut sample::SeededRng,
    kind: GroupKind,
    v: &LinearSystem,
) -> std::result::Result<(BinaryForm, PluckerPoint), String> {
    let spec = GroupSpec::conjugated(kind, sample::conjugator(rng));
    let pair = conjugated_pair(&spec).map_err(|e| e.to_string())?;
    let s = sample::combination(rng, &galois_space(&pair, v));
    let section = GaloisSection::new(&pair, s.clone(), v).map_err(|e| e.to_string())?;
    let c = center_from_section(&pair, &section, v).map_err(|e| e.to_string())?;
    Ok((s, plucker(&c).map_err(|e| e.to_string())?))
}

fn injectivity(cfg: &AcceptanceConfig) -> Outcome {
    let d = 5;
    let v = LinearSystem::complete(d).expect("degree 5");
    // a one-dimensional section space (m = d) has no non-proportional pairs
    let kinds = families_with_space(d, 2);
    let results: Vec<std::result::Result<usize, String>> = kinds
        .par_iter()
        .enumerate()
        .map(|(idx, &kind)| {
            let mut rng = sample::substream(cfg.oracle.seed ^ 0x4c, idx as u64);
            let spec = GroupSpec::conjugated(kind, sample::conjugator(&mut rng));
            let pair = conjugated_pair(&spec).map_err(|e| e.to_string())?;
            let space = galois_space(&pair, &v);
            let center_of = |s: &BinaryForm| -> std::result::Result<PluckerPoint, String> {
                let sec = GaloisSection::new(&pair, s.clone(), &v).map_err(|e| e.to_string())?;
                let c = center_from_section(&pair, &sec, &v).map_err(|e| e.to_string())?;
                plucker(&c).map_err(|e| e.to_string())
            };
            let mut pairs = 0;
            while pairs < cfg.samples {
                let s = sample::combination(&mut rng, &space);
                let t = sample::combination(&mut rng, &space);
                if s.is_proportional(&t) {
                    continue;
                }
                if center_of(&s)? == center_of(&t)? {
                    return Err(format!("{kind}: sections {s} and {t} share a Plücker point"));
                }
                pairs += 1;
            }
            Ok(pairs)
        })
        .collect();
    let errors: Vec<&String> = results.iter().filter_map(|r| r.as_ref().err()).collect();
    let pairs: usize = results.iter().filter_map(|r| r.as_ref().ok()).sum();
    let detail = match errors.first() {
        None => format!("{pairs} section pairs over {} families give distinct points", kinds.len()),
        Some(e) => e.to_string(),
    };
    Outcome::new(errors.is_empty(), detail)
}

fn disjointness(cfg: &AcceptanceConfig) -> Outcome {
    let d = 6;
    let v = LinearSystem::complete(d).expect("degree 6");
    let kinds = catalog_kinds(d);
    let samples: Vec<std::result::Result<Vec<PluckerPoint>, String>> = kinds
        .par_iter()
        .enumerate()
        .map(|(idx, &kind)| {
            let mut rng = sample::substream(cfg.oracle.seed ^ 0x5d, idx as u64);
            (0..cfg.samples)
                .map(|_| sample_center(&mut rng, kind, &v).map(|(_, p)| p))
                .collect()
        })
        .collect();
    if let Some(Err(e)) = samples.iter().find(|s| s.is_err()) {
        return Outcome::new(false, e.clone());
    }
    let samples: Vec<Vec<PluckerPoint>> = samples.into_iter().map(|s| s.expect("checked")).collect();
    let clash = (0..kinds.len())
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..kinds.len()).map(move |j| (i, j)))
        .find_first(|&(i, j)| samples[i].iter().any(|p| samples[j].contains(p)));
    let n: usize = samples.iter().map(Vec::len).sum();
    match clash {
        None => Outcome::new(
            true,
            format!("{n} centers over {} families, no point shared across families", kinds.len()),
        ),
        Some((i, j)) => Outcome::new(false, format!("{} and {} share a center", kinds[i], kinds[j])),
    }
}

fn intermediate(cfg: &AcceptanceConfig) -> Outcome {
    let cases: Vec<(usize, GroupKind)> = (1..=8)
        .flat_map(|d| catalog_kinds(d).into_iter().map(move |k| (d, k)))
        .collect();
    let results: Vec<std::result::Result<usize, String>> = cases
        .par_iter()
        .enumerate()
        .map(|(idx, &(d, kind))| {
            let mut rng = sample::substream(cfg.oracle.seed ^ 0x6e, idx as u64);
            let v = LinearSystem::complete(d).map_err(|e| e.to_string())?;
            let pair = standard_invariant_pair(kind);
            let space = galois_space(&pair, &v);
            for _ in 0..5 {
                let s = sample::combination(&mut rng, &space);
                let sec = GaloisSection::new(&pair, s.clone(), &v).map_err(|e| e.to_string())?;
                let r = intermediate_factorization(&pair, &sec, &v).map_err(|e| e.to_string())?;
                if !r.identity_holds {
                    return Err(format!("{kind} at d = {d}, s = {s}: C·M_sᵀ differs from the pencil"));
                }
                if !r.intermediate_disjoint {
                    return Err(format!("{kind}: gcd(A, B) ≠ 1"));
                }
            }
            Ok(5)
        })
        .collect();
    let errors: Vec<&String> = results.iter().filter_map(|r| r.as_ref().err()).collect();
    let n: usize = results.iter().filter_map(|r| r.as_ref().ok()).sum();
    let detail = match errors.first() {
        None => format!("{n} sections over {} (kind, d) cases factor exactly", cases.len()),
        Some(e) => e.to_string(),
    };
    Outcome::new(errors.is_empty(), detail)
}

fn negative_control(cfg: &AcceptanceConfig) -> Outcome {
    let v4 = LinearSystem::complete(4).expect("degree 4");
    let mut rng = sample::rng(cfg.oracle.seed ^ 0x7f);
    let centers: Vec<ProjectionCenter> = (0..100).map(|_| sample::center(&mut rng, 4)).collect();
    let reports: Vec<std::result::Result<(bool, usize, usize, Vec<String>), String>> = centers
        .par_iter()
        .map(|c| {
            let r = is_galois(c, &v4, &cfg.oracle).map_err(|e| e.to_string())?;
            Ok((r.galois, r.deck_order, r.degree, r.warnings))
        })
        .collect();
    if let Some(Err(e)) = reports.iter().find(|r| r.is_err()) {
        return Outcome::new(false, format!("oracle failure: {e}"));
    }
    let reports: Vec<_> = reports.into_iter().map(|r| r.expect("checked")).collect();
    let non_galois = reports.iter().filter(|r| !r.0).count();
    let inconsistent = reports.iter().filter(|r| !r.0 && r.1 >= r.2).count();
    let passed = non_galois >= 95 && inconsistent == 0;
    Outcome {
        passed,
        detail: format!(
            "{non_galois}/100 non-Galois (need ≥ 95); {inconsistent} verdict(s) with deck order ≥ degree"
        ),
        warnings: reports.into_iter().flat_map(|r| r.3).collect(),
    }
}

fn catalog_certification() -> Outcome {
    let kinds = catalog_kinds(60);
    let bad: Vec<String> = kinds
        .par_iter()
        .filter_map(|&kind| {
            let gens = standard_generators(kind);
            let pair = standard_invariant_pair(kind);
            if !verify_invariance(&pair, &gens) {
                return Some(format!("{kind}: pencil is not invariant"));
            }
            let n = generate_group(&gens, kind.order() + 1).len();
            (n != kind.order()).then(|| format!("{kind}: closure has {n} elements, expected {}", kind.order()))
        })
        .collect();
    let detail = match bad.first() {
        None => format!(
            "{} kinds (orders 1..60) invariant, closures of exact catalog order",
            kinds.len()
        ),
        Some(b) => format!("{} failure(s), first: {b}", bad.len()),
    };
    Outcome::new(bad.is_empty(), detail)
}

/// Conic incidence `z₀z₂ = z₁²` of a point of `P²`.
pub fn on_conic(z: &[Coef; 3]) -> bool {
    &z[0] * &z[2] == &z[1] * &z[1]
}
