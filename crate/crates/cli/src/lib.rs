//! Report types and command implementations behind the `glr` binary.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, Context};
use serde::{Deserialize, Serialize};

use glr_core::arith::{is_prime, is_square_free, prime_divisors};
use glr_core::catalog;
use glr_core::homology::lhs_summands;
use glr_core::ktheory::TateVanishingReport;
use glr_core::{
    ahss_e2, classify, counterexample_witness, decomposition_type, ko_real_group_algebra, sylow_restriction,
    tate_vanishing_report, CrystalGroup, DecompositionType, E2Page, Error, Execution, FinAbGroup, GlrStatus,
    GroupDescriptor, Verdict, WitnessReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

/// A command failure carrying its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSquareFree { .. } => EXIT_HYPOTHESIS,
            _ => EXIT_INVALID_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::invalid(format!("{e:#}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Reads a group from a JSON file, or from the bundled catalog when `source`
/// names a catalog entry and no such file exists.
pub fn load_group(source: &str) -> CliResult<(GroupDescriptor, CrystalGroup)> {
    let descriptor = if Path::new(source).exists() {
        let text = std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?;
        serde_json::from_str::<GroupDescriptor>(&text).with_context(|| format!("parsing {source}"))?
    } else if let Some(entry) = catalog::lookup(source) {
        entry.descriptor()
    } else {
        return Err(anyhow!("{source}: no such file or catalog entry").into());
    };
    let group = descriptor
        .to_group()
        .map_err(|e| CliError::invalid(format!("invalid group: {e}")))?;
    Ok((descriptor, group))
}

fn label(d: &GroupDescriptor) -> String {
    d.name.clone().unwrap_or_else(|| "<unnamed>".into())
}

fn require_square_free(g: &CrystalGroup) -> CliResult<()> {
    if is_square_free(g.m()) {
        Ok(())
    } else {
        Err(Error::NotSquareFree { m: g.m() }.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub group: GroupDescriptor,
    pub faithful_order: u64,
    pub non_faithful: bool,
    pub status: GlrStatus,
    pub witness_report: Option<WitnessReport>,
}

pub fn classify_report(descriptor: GroupDescriptor, g: &CrystalGroup) -> CliResult<ClassifyReport> {
    let status = classify(g);
    let witness_report = match &status.witness {
        Some(w) => Some(counterexample_witness(g, w.p)?),
        None => None,
    };
    Ok(ClassifyReport {
        group: descriptor,
        faithful_order: g.faithful_order(),
        non_faithful: !g.is_faithful(),
        status,
        witness_report,
    })
}

pub fn render_classify(r: &ClassifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group: {} (n = {}, m = {}, faithful order {})",
        label(&r.group),
        r.group.n,
        r.group.m,
        r.faithful_order
    );
    if r.non_faithful {
        let _ = writeln!(out, "warning: the action is not faithful (order {} < m)", r.faithful_order);
    }
    let _ = writeln!(out, "verdict: {:?}", r.status.verdict);
    let _ = writeln!(out, "hypotheses:");
    for h in &r.status.reasons {
        let mark = if h.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  [{mark}] {}: {}", h.name, h.detail);
    }
    if let Some(w) = &r.status.witness {
        let d = &w.decomposition;
        let _ = writeln!(out, "witness: p = {}, (r, s, t) = ({}, {}, {})", w.p, d.r, d.s, d.t);
    }
    if let Some(w) = &r.witness_report {
        let _ = writeln!(out, "  H_1 free rank: {}", w.h1_free_rank);
        let _ = writeln!(out, "  H_1 has {}-torsion: {}", w.p, w.h1_p_torsion_present);
        let _ = writeln!(out, "  H_5(T^4 x BZ/{}) = {}", w.p, w.h5_torsion_certificate);
    }
    if r.status.verdict == Verdict::Unknown {
        let _ = writeln!(out, "neither criterion applies; no conclusion is drawn");
    }
    out
}

pub fn cmd_classify(source: &str, json: bool) -> CliResult<String> {
    let (d, g) = load_group(source)?;
    let report = classify_report(d, &g)?;
    if json {
        Ok(serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)? + "\n")
    } else {
        Ok(render_classify(&report))
    }
}

pub fn decompose(g: &CrystalGroup, p: u64) -> CliResult<DecompositionType> {
    let module = sylow_restriction(g, p)?;
    Ok(decomposition_type(&module)?)
}

pub fn cmd_decompose(source: &str, p: u64) -> CliResult<String> {
    let (d, g) = load_group(source)?;
    let t = decompose(&g, p)?;
    let mut out = String::new();
    let _ = writeln!(out, "group: {} (n = {}, m = {})", label(&d), g.n(), g.m());
    let _ = writeln!(out, "type at p = {p}: (r, s, t) = ({}, {}, {})", t.r, t.s, t.t);
    let _ = writeln!(
        out,
        "rank check: r + p*s + (p-1)*t = {} + {} + {} = {} = n",
        t.r,
        p as usize * t.s,
        (p as usize - 1) * t.t,
        t.rank()
    );
    Ok(out)
}

pub fn cmd_homology(source: &str, degree: i64) -> CliResult<String> {
    let (d, g) = load_group(source)?;
    if degree < 0 {
        return Err(Error::NegativeDegree(degree).into());
    }
    require_square_free(&g)?;
    let summands = lhs_summands(&g, degree, Execution::default())?;
    let total = FinAbGroup::sum_all(summands.iter().map(|s| &s.group));
    let mut out = String::new();
    let _ = writeln!(out, "group: {} (n = {}, m = {})", label(&d), g.n(), g.m());
    let _ = writeln!(out, "H_{degree}(Γ) = {total}");
    let _ = writeln!(out, "E^2 summands H_i(Z/{}; Λ^j Z^{}):", g.m(), g.n());
    for s in &summands {
        let _ = writeln!(out, "  (i = {}, j = {}): {}", s.i, s.j, s.group);
    }
    Ok(out)
}

pub fn cmd_ko_table(p: u64, s: u32) -> CliResult<String> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p).into());
    }
    let mut out = String::new();
    for j in 0..8 {
        let g = ko_real_group_algebra(p, s, j)?;
        let _ = writeln!(out, "KO_{j}(R[Z/{p}^{s}]) = {g}");
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AhssReport {
    pub group: GroupDescriptor,
    pub e2: E2Page,
    pub tate: Vec<TateVanishingReport>,
}

pub fn ahss_report(descriptor: GroupDescriptor, g: &CrystalGroup, max_degree: i64) -> CliResult<AhssReport> {
    require_square_free(g)?;
    let e2 = ahss_e2(g, max_degree)?;
    let bound = (max_degree.max(0) as usize).min(g.n());
    let tate = prime_divisors(g.m())
        .into_iter()
        .filter(|p| p % 2 == 1)
        .map(|p| tate_vanishing_report(g, p, bound))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AhssReport {
        group: descriptor,
        e2,
        tate,
    })
}

pub fn render_ahss(r: &AhssReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group: {} (n = {}, m = {})",
        label(&r.group),
        r.group.n,
        r.group.m
    );
    let _ = writeln!(out, "E^2_(i,j) = H_i(BΓ; ko_j), i + j <= {}:", r.e2.max_total_degree);
    for ((i, j), g) in r.e2.entries() {
        let _ = writeln!(out, "  ({i}, {j}): {g}");
    }
    for t in &r.tate {
        let _ = writeln!(out, "Tate groups Ĥ^(i+1)(Z/{}; ko_j(BZ^n)), j <= {}:", t.p, t.bound);
        for e in &t.entries {
            let _ = writeln!(out, "  (i = {}, j = {}): {}", e.i, e.j, e.group);
        }
        let _ = writeln!(out, "  vanishing for all even i + j: {}", t.vanishing_holds);
    }
    if r.tate.is_empty() {
        let _ = writeln!(out, "no odd prime divides m; no Tate summary");
    }
    out
}

pub fn cmd_ahss(source: &str, max_degree: i64, json: bool) -> CliResult<String> {
    let (d, g) = load_group(source)?;
    let report = ahss_report(d, &g, max_degree)?;
    if json {
        Ok(serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)? + "\n")
    } else {
        Ok(render_ahss(&report))
    }
}

pub fn cmd_catalog_list() -> String {
    let mut out = String::new();
    for e in catalog::CATALOG {
        let _ = writeln!(out, "{:<22} {}", e.name, e.summary);
    }
    out
}

pub fn cmd_catalog_show(name: &str) -> CliResult<String> {
    let entry = catalog::lookup(name).ok_or_else(|| CliError::invalid(format!("unknown catalog entry {name}")))?;
    Ok(serde_json::to_string_pretty(&entry.descriptor()).map_err(anyhow::Error::from)? + "\n")
}

/// Randomized consistency checks on `count` seeded random groups.
pub fn cmd_self_test(seed: u64, count: usize) -> CliResult<String> {
    use glr_core::catalog::random_group;
    use glr_core::lattice::{cokernel, IntMatrix};
    use glr_core::{check_counterexample, check_positive, lhs_total_homology};
    use rand::SeedableRng;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut tally = [0usize; 3];
    for k in 0..count {
        let g = random_group(&mut rng);
        if check_positive(&g) && check_counterexample(&g).is_some() {
            return Err(CliError::invalid(format!("group #{k}: both criteria hold")));
        }
        let m = IntMatrix::from_rows(&[[g.m() as i64]]).map_err(CliError::from)?;
        let relations = IntMatrix::block_diag([&g.action().minus_identity()?, &m]);
        if lhs_total_homology(&g, 1)? != cokernel(&relations) {
            return Err(CliError::invalid(format!("group #{k}: H_1 disagrees with abelianization")));
        }
        let status = classify(&g);
        if status != classify(&g) {
            return Err(CliError::invalid(format!("group #{k}: classification not deterministic")));
        }
        tally[match status.verdict {
            Verdict::PositivePSC => 0,
            Verdict::Counterexample => 1,
            Verdict::Unknown => 2,
        }] += 1;
    }
    Ok(format!(
        "self-test seed {seed}: {count} groups ok (PositivePSC {}, Counterexample {}, Unknown {})\n",
        tally[0], tally[1], tally[2]
    ))
}
