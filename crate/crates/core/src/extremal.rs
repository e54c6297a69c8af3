//! Threshold scans and the exhaustive characterization-versus-oracle harness.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characterize::characterize;
use crate::error::{Error, Result};
use crate::oracle::{potentially_oracle, SearchBudget};
use crate::patterns::PatternId;
use crate::sequence::{is_graphic_eg, DegreeSequence};

pub const REPORT_VERSION: &str = "v1";
pub const MIN_SCAN_ORDER: usize = 4;
pub const MAX_SCAN_ORDER: usize = 10;
/// Failing sequences kept per report; counts stay exact.
pub const WITNESS_LIMIT: usize = 10;

fn check_range(n: usize, lo: usize, hi: usize) -> Result<()> {
    if n < lo || n > hi {
        return Err(Error::RangeOutOfBounds { n, lo, hi });
    }
    Ok(())
}

fn push_non_increasing(prefix: &mut Vec<u32>, len: usize, max: u32, out: &mut Vec<DegreeSequence>) {
    if prefix.len() == len {
        out.push(DegreeSequence::new(prefix.clone()));
        return;
    }
    for value in (1..=max).rev() {
        prefix.push(value);
        push_non_increasing(prefix, len, value, out);
        prefix.pop();
    }
}

/// Every positive graphic sequence of length `n`, by decreasing sum, then
/// lexicographically decreasing within one sum.
pub fn enumerate_graphic_sequences(n: usize, min_sigma: Option<u64>) -> Result<Vec<DegreeSequence>> {
    check_range(n, MIN_SCAN_ORDER, MAX_SCAN_ORDER)?;
    let mut all = Vec::new();
    push_non_increasing(&mut Vec::with_capacity(n), n, (n - 1) as u32, &mut all);
    let floor = min_sigma.unwrap_or(0);
    let mut graphic: Vec<DegreeSequence> = all
        .into_iter()
        .filter(|s| s.sigma() >= floor && is_graphic_eg(s))
        .collect();
    graphic.sort_by(|a, b| b.sigma().cmp(&a.sigma()).then_with(|| b.terms().cmp(a.terms())));
    Ok(graphic)
}

fn pool(workers: Option<usize>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    builder.build().expect("thread pool")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub sequence: DegreeSequence,
    pub theorem: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchReport {
    pub version: String,
    pub pattern: PatternId,
    pub n_lo: usize,
    pub n_hi: usize,
    pub sequences_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub budget_failures: Vec<DegreeSequence>,
}

impl MismatchReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty() && self.budget_failures.is_empty()
    }
}

enum Compared {
    Agree,
    Disagree(Mismatch),
    Budget(DegreeSequence),
}

/// Compares the closed-form decision with the oracle on every positive
/// graphic sequence with `n_lo <= n <= n_hi`.
///
/// Output does not depend on `workers`.
pub fn verify_characterization(
    pattern: PatternId,
    n_lo: usize,
    n_hi: usize,
    budget: SearchBudget,
    workers: Option<usize>,
) -> Result<MismatchReport> {
    if !crate::characterize::has_characterization(pattern) {
        return Err(Error::NoCharacterization(pattern));
    }
    let lo = pattern.order().max(MIN_SCAN_ORDER);
    check_range(n_lo, lo, MAX_SCAN_ORDER)?;
    check_range(n_hi, n_lo, MAX_SCAN_ORDER)?;
    let mut sequences = Vec::new();
    for n in n_lo..=n_hi {
        sequences.extend(enumerate_graphic_sequences(n, None)?);
    }
    let outcomes: Vec<Result<Compared>> = pool(workers).install(|| {
        sequences
            .par_iter()
            .map(|seq| {
                let theorem = characterize(pattern, seq)?.decision;
                Ok(match potentially_oracle(seq, pattern, budget) {
                    Ok(oracle) if oracle == theorem => Compared::Agree,
                    Ok(oracle) => Compared::Disagree(Mismatch { sequence: seq.clone(), theorem, oracle }),
                    Err(Error::BudgetExhausted { .. }) => Compared::Budget(seq.clone()),
                    Err(e) => return Err(e),
                })
            })
            .collect()
    });
    let mut report = MismatchReport {
        version: REPORT_VERSION.to_string(),
        pattern,
        n_lo,
        n_hi,
        sequences_checked: sequences.len(),
        mismatches: Vec::new(),
        budget_failures: Vec::new(),
    };
    for outcome in outcomes {
        match outcome? {
            Compared::Agree => {}
            Compared::Disagree(m) => report.mismatches.push(m),
            Compared::Budget(s) => report.budget_failures.push(s),
        }
    }
    Ok(report)
}

/// Patterns whose threshold has a closed form here.
pub const FORMULA_PATTERNS: [PatternId; 4] = [PatternId::K5P3, PatternId::K5C4, PatternId::C5, PatternId::K311];

fn formula_family(pattern: PatternId) -> Option<bool> {
    // Some(true): the 4n-2 family, Some(false): the 4n-4 family
    match pattern {
        PatternId::K5P3 | PatternId::K5C4 | PatternId::C5 => Some(false),
        PatternId::K311 | PatternId::K5K3 => Some(true),
        _ => None,
    }
}

/// Closed-form threshold: `4n - 4` for `K5-P3`, `K5-C4` and `C5`; `4n - 2`
/// for `K_{3,1,1}` except `26` at `n = 6`.
pub fn formula_sigma(pattern: PatternId, n: usize) -> Result<u64> {
    let dense = formula_family(pattern).ok_or(Error::NoFormula(pattern))?;
    check_range(n, 5, usize::MAX)?;
    let n = n as u64;
    Ok(match (dense, n) {
        (false, _) => 4 * n - 4,
        (true, 6) => 26,
        (true, _) => 4 * n - 2,
    })
}

/// A sequence just below the threshold that is not potentially `pattern`-graphic:
/// `((n-1)^2, 2^(n-2))` for the `4n - 4` family, `(n-1, 3^(n-1))` for `K_{3,1,1}`.
pub fn extremal_witness(pattern: PatternId, n: usize) -> Result<DegreeSequence> {
    let dense = formula_family(pattern).ok_or(Error::NoFormula(pattern))?;
    check_range(n, 5, usize::MAX)?;
    let top = (n - 1) as u32;
    Ok(if dense {
        DegreeSequence::from_runs(&[(top, 1), (3, n - 1)])
    } else {
        DegreeSequence::from_runs(&[(top, 2), (2, n - 2)])
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaResult {
    pub version: String,
    pub pattern: PatternId,
    pub n: usize,
    pub empirical: u64,
    pub formula: Option<u64>,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Failing sequences at `empirical - 2`, lexicographically greatest first.
    pub witnesses: Vec<DegreeSequence>,
    pub witness_count: usize,
    pub checked: usize,
    pub elapsed_ms: u64,
}

pub const MAX_SIGMA_ORDER: usize = 9;

/// Scans sum levels from `n(n-1)` downwards and stops at the first level
/// holding a sequence that is not potentially `pattern`-graphic. Every level
/// above it is checked in full.
pub fn empirical_sigma(
    pattern: PatternId,
    n: usize,
    budget: SearchBudget,
    workers: Option<usize>,
) -> Result<SigmaResult> {
    check_range(n, 5, MAX_SIGMA_ORDER)?;
    let started = Instant::now();
    let sequences = enumerate_graphic_sequences(n, None)?;
    let pool = pool(workers);
    let mut checked = 0;
    let mut failing: Vec<DegreeSequence> = Vec::new();
    let mut empirical = sequences.last().map(|s| s.sigma()).unwrap_or(0);
    empirical += empirical % 2;
    for level in sequences.chunk_by(|a, b| a.sigma() == b.sigma()) {
        let verdicts: Vec<Result<bool>> =
            pool.install(|| level.par_iter().map(|s| potentially_oracle(s, pattern, budget)).collect());
        checked += level.len();
        for (seq, verdict) in level.iter().zip(verdicts) {
            if !verdict? {
                failing.push(seq.clone());
            }
        }
        if !failing.is_empty() {
            empirical = level[0].sigma() + 2;
            break;
        }
    }
    let formula = formula_sigma(pattern, n).ok();
    Ok(SigmaResult {
        version: REPORT_VERSION.to_string(),
        pattern,
        n,
        empirical,
        formula,
        matches: formula == Some(empirical),
        witness_count: failing.len(),
        witnesses: failing.into_iter().take(WITNESS_LIMIT).collect(),
        checked,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}
