//! Exhaustive census of all families over `P(n)` for very small `n`.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::analysis::{contains_maximal_antichain, is_cutset, is_minimal_cutset, is_nontrivial};
use crate::error::{capacity, Result};
use crate::lattice::{Family, GroundSize};

/// There are `2^(2^n)` families; `n = 5` would already be `2^32`.
pub const MAX_SURVEY_GROUND: usize = 4;

const CHUNK: u64 = 1 << 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub n: GroundSize,
    pub minimal_only: bool,
    pub families_examined: u64,
    pub cutsets: u64,
    pub nontrivial_cutsets: u64,
    pub minimal_cutsets: u64,
    /// Cutsets searched for a maximal antichain.
    pub antichain_checks: u64,
    /// Non-trivial cutsets containing no maximal antichain. Always empty
    /// unless something is broken.
    pub failures: Vec<Family>,
    pub elapsed: Duration,
}

impl SurveyReport {
    fn empty(n: GroundSize, minimal_only: bool) -> Self {
        SurveyReport {
            n,
            minimal_only,
            families_examined: 0,
            cutsets: 0,
            nontrivial_cutsets: 0,
            minimal_cutsets: 0,
            antichain_checks: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn merge(mut self, other: SurveyReport) -> Self {
        self.families_examined += other.families_examined;
        self.cutsets += other.cutsets;
        self.nontrivial_cutsets += other.nontrivial_cutsets;
        self.minimal_cutsets += other.minimal_cutsets;
        self.antichain_checks += other.antichain_checks;
        self.failures.extend(other.failures);
        self
    }
}

/// Deterministic `key=value` record; the elapsed time is left out so that
/// reports compare byte for byte across runs.
impl fmt::Display for SurveyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "minimal_only={}", self.minimal_only)?;
        writeln!(f, "families_examined={}", self.families_examined)?;
        writeln!(f, "cutsets={}", self.cutsets)?;
        writeln!(f, "nontrivial_cutsets={}", self.nontrivial_cutsets)?;
        writeln!(f, "minimal_cutsets={}", self.minimal_cutsets)?;
        writeln!(f, "antichain_checks={}", self.antichain_checks)?;
        writeln!(f, "dsw_failures={}", self.failures.len())
    }
}

/// Family number `code` over `P(n)`: bit `s` of `code` says whether the subset
/// with bit pattern `s` is a member.
pub fn family_from_code(n: GroundSize, code: u64) -> Family {
    let size = 1u64 << n.get();
    Family::from_bits(n, (0..size).filter(|s| code >> s & 1 == 1)).expect("in-bounds bit patterns")
}

/// Classifies every family over `P(n)`. Every non-trivial cutset is searched
/// for a maximal antichain; with `minimal_only` only the minimal ones are,
/// which suffices since every cutset contains a minimal cutset.
pub fn census(n: GroundSize, minimal_only: bool) -> Result<SurveyReport> {
    capacity("ground size for survey", n.get(), MAX_SURVEY_GROUND)?;
    let start = Instant::now();
    let total: u64 = 1 << (1u64 << n.get());
    let chunks: Vec<u64> = (0..total).step_by(CHUNK as usize).collect();
    let parts: Vec<Result<SurveyReport>> = chunks
        .par_iter()
        .map(|&lo| census_range(n, minimal_only, lo, (lo + CHUNK).min(total)))
        .collect();
    let mut report = SurveyReport::empty(n, minimal_only);
    for part in parts {
        report = report.merge(part?);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn census_range(n: GroundSize, minimal_only: bool, lo: u64, hi: u64) -> Result<SurveyReport> {
    let mut r = SurveyReport::empty(n, minimal_only);
    for code in lo..hi {
        r.families_examined += 1;
        let family = family_from_code(n, code);
        if !is_cutset(&family)? {
            continue;
        }
        r.cutsets += 1;
        let minimal = is_minimal_cutset(&family)?;
        if minimal {
            r.minimal_cutsets += 1;
        }
        if !is_nontrivial(&family) {
            continue;
        }
        r.nontrivial_cutsets += 1;
        if minimal_only && !minimal {
            continue;
        }
        r.antichain_checks += 1;
        if contains_maximal_antichain(&family)?.is_none() {
            r.failures.push(family);
        }
    }
    Ok(r)
}

/// True iff every non-trivial cutset over `P(n)` contains a maximal antichain.
pub fn dsw_check(n: GroundSize) -> Result<bool> {
    Ok(census(n, false)?.failures.is_empty())
}
