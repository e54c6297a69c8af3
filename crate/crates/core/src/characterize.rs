//! Closed-form decisions for potentially `K5 - H`-graphic and potentially
//! `C4`-graphic sequences.
//!
//! Every check requires a graphic sequence with strictly positive terms. A
//! decision is "potentially" exactly when no degree condition fails and no
//! exception (listed sequence or parametric family) matches.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{matches_family_a3, matches_family_s1, matches_hub, FamilyMatch};
use crate::patterns::PatternId;
use crate::sequence::{is_graphic_eg, parse_sequence, DegreeSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Theorem,
    Oracle,
}

/// Why a sequence hit an exception clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExceptionMatch {
    Family(FamilyMatch),
    Listed(ListedException),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename = "listed")]
pub struct ListedException {
    pub sequence: DegreeSequence,
}

impl ExceptionMatch {
    /// The sequence the exception stands for.
    pub fn expand(&self) -> DegreeSequence {
        match self {
            Self::Family(m) => m.expand(),
            Self::Listed(l) => l.sequence.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub pattern: PatternId,
    pub sequence: DegreeSequence,
    pub decision: bool,
    pub failed_conditions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exception: Option<ExceptionMatch>,
    pub source: Source,
}

impl Verdict {
    fn from_theorem(
        pattern: PatternId,
        sequence: &DegreeSequence,
        failed_conditions: Vec<String>,
        exception: Option<ExceptionMatch>,
    ) -> Self {
        Self {
            pattern,
            sequence: sequence.clone(),
            decision: failed_conditions.is_empty() && exception.is_none(),
            failed_conditions,
            exception,
            source: Source::Theorem,
        }
    }

    pub fn from_oracle(pattern: PatternId, sequence: &DegreeSequence, decision: bool) -> Self {
        Self {
            pattern,
            sequence: sequence.clone(),
            decision,
            failed_conditions: Vec::new(),
            exception: None,
            source: Source::Oracle,
        }
    }
}

fn listed(table: &[&str]) -> Vec<DegreeSequence> {
    table
        .iter()
        .map(|s| parse_sequence(s).expect("well-formed exception table"))
        .collect()
}

pub const K5_P3_LISTED: [&str; 3] = ["4,3^2,2^3", "4,3^2,2^4", "4,3^6"];
pub const K5_A3_LISTED: [&str; 7] = ["3^4,2^2", "3^6", "3^4,2^3", "3^6,2", "4,3^6", "3^7,1", "3^8"];
pub const K5_K3_LISTED: [&str; 4] = ["4^2,2^4", "4^2,2^5", "4^3,2^3", "4^6"];
pub const K5_K13_LISTED: [&str; 6] = ["4,3^4,2", "4^6", "4^2,3^4", "4,3^6", "4^7", "4,3^5,1"];
pub const K5_2K2_LISTED: [&str; 19] = [
    "4^2,3^4",
    "4,3^4,2",
    "5,4,3^5",
    "5,3^5,2",
    "4^7",
    "4^3,3^4",
    "4^2,3^4,2",
    "4,3^6",
    "4,3^5,1",
    "4,3^4,2^2",
    "5,3^7",
    "5,3^6,1",
    "4^8",
    "4^2,3^6",
    "4^2,3^5,1",
    "4,3^6,2",
    "4,3^5,2,1",
    "4,3^7,1",
    "4,3^6,1^2",
];

/// Hub families `(n-1, 3^k, 1^(n-1-k))` excluded for each pattern.
pub fn hub_exceptions(pattern: PatternId) -> &'static [usize] {
    match pattern.canonical() {
        PatternId::K5A3 | PatternId::K5TwoK2 => &[5, 6],
        PatternId::K5K13 => &[4, 5],
        _ => &[],
    }
}

/// Fixed exception sequences for a characterized pattern.
pub fn listed_exceptions(pattern: PatternId) -> Vec<DegreeSequence> {
    match pattern.canonical() {
        PatternId::K5P3 => listed(&K5_P3_LISTED),
        PatternId::K5A3 => listed(&K5_A3_LISTED),
        PatternId::K5K3 => listed(&K5_K3_LISTED),
        PatternId::K5K13 => listed(&K5_K13_LISTED),
        PatternId::K5TwoK2 => listed(&K5_2K2_LISTED),
        _ => Vec::new(),
    }
}

fn require(seq: &DegreeSequence, min_len: usize) -> Result<()> {
    if seq.len() < min_len {
        return Err(Error::TooShort { n: seq.len(), min: min_len });
    }
    if !seq.is_positive() {
        return Err(Error::ZeroTerms(seq.to_string()));
    }
    if !is_graphic_eg(seq) {
        return Err(Error::NotGraphic(seq.to_string()));
    }
    Ok(())
}

/// Lower bounds `d_index >= bound`, reported as `"d{index}<{bound}"` when violated.
fn lower_bounds(seq: &DegreeSequence, bounds: &[(usize, u32)]) -> Vec<String> {
    bounds
        .iter()
        .filter(|&&(index, bound)| seq.d(index) < bound)
        .map(|&(index, bound)| format!("d{index}<{bound}"))
        .collect()
}

fn listed_match(pattern: PatternId, seq: &DegreeSequence) -> Option<ExceptionMatch> {
    listed_exceptions(pattern)
        .into_iter()
        .find(|s| s == seq)
        .map(|sequence| ExceptionMatch::Listed(ListedException { sequence }))
}

fn hub_match(pattern: PatternId, seq: &DegreeSequence) -> Option<ExceptionMatch> {
    hub_exceptions(pattern)
        .iter()
        .find_map(|&k| matches_hub(seq, k))
        .map(ExceptionMatch::Family)
}

pub fn check_k5_p3(seq: &DegreeSequence) -> Result<Verdict> {
    require(seq, 5)?;
    let failed = lower_bounds(seq, &[(1, 4), (3, 3), (5, 2)]);
    let exception = listed_match(PatternId::K5P3, seq);
    Ok(Verdict::from_theorem(PatternId::K5P3, seq, failed, exception))
}

pub fn check_k5_a3(seq: &DegreeSequence) -> Result<Verdict> {
    require(seq, 5)?;
    let failed = lower_bounds(seq, &[(4, 3), (5, 2)]);
    let exception = matches_family_a3(seq)
        .map(ExceptionMatch::Family)
        .or_else(|| listed_match(PatternId::K5A3, seq))
        .or_else(|| hub_match(PatternId::K5A3, seq));
    Ok(Verdict::from_theorem(PatternId::K5A3, seq, failed, exception))
}

pub fn check_k5_k3(seq: &DegreeSequence) -> Result<Verdict> {
    require(seq, 5)?;
    let failed = lower_bounds(seq, &[(2, 4), (5, 2)]);
    let exception = listed_match(PatternId::K5K3, seq);
    Ok(Verdict::from_theorem(PatternId::K5K3, seq, failed, exception))
}

pub fn check_k5_k13(seq: &DegreeSequence) -> Result<Verdict> {
    require(seq, 5)?;
    let failed = lower_bounds(seq, &[(1, 4), (4, 3)]);
    let exception = listed_match(PatternId::K5K13, seq).or_else(|| hub_match(PatternId::K5K13, seq));
    Ok(Verdict::from_theorem(PatternId::K5K13, seq, failed, exception))
}

pub fn check_k5_2k2(seq: &DegreeSequence) -> Result<Verdict> {
    require(seq, 5)?;
    let failed = lower_bounds(seq, &[(1, 4), (5, 3)]);
    let exception = matches_family_s1(seq)
        .map(ExceptionMatch::Family)
        .or_else(|| listed_match(PatternId::K5TwoK2, seq))
        .or_else(|| hub_match(PatternId::K5TwoK2, seq));
    Ok(Verdict::from_theorem(PatternId::K5TwoK2, seq, failed, exception))
}

pub fn check_c4(seq: &DegreeSequence) -> Result<Verdict> {
    require(seq, 4)?;
    let n = seq.len();
    let mut failed = lower_bounds(seq, &[(4, 2)]);
    if seq.d(1) as usize == n - 1 && seq.d(2) < 3 {
        failed.push("d1=n-1,d2<3".to_string());
    }
    let exception = ((n == 5 || n == 6) && seq.terms().iter().all(|&d| d == 2))
        .then(|| ExceptionMatch::Listed(ListedException { sequence: seq.clone() }));
    Ok(Verdict::from_theorem(PatternId::C4, seq, failed, exception))
}

/// Dispatches to the characterization for `pattern`, resolving the
/// `k122`/`k311` aliases to their isomorphic `K5 - H` forms.
pub fn characterize(pattern: PatternId, seq: &DegreeSequence) -> Result<Verdict> {
    let mut verdict = match pattern.canonical() {
        PatternId::K5P3 => check_k5_p3(seq),
        PatternId::K5A3 => check_k5_a3(seq),
        PatternId::K5K3 => check_k5_k3(seq),
        PatternId::K5K13 => check_k5_k13(seq),
        PatternId::K5TwoK2 => check_k5_2k2(seq),
        PatternId::C4 => check_c4(seq),
        _ => return Err(Error::NoCharacterization(pattern)),
    }?;
    verdict.pattern = pattern;
    Ok(verdict)
}

pub fn has_characterization(pattern: PatternId) -> bool {
    matches!(
        pattern.canonical(),
        PatternId::K5P3
            | PatternId::K5A3
            | PatternId::K5K3
            | PatternId::K5K13
            | PatternId::K5TwoK2
            | PatternId::C4
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        parse_sequence(s).unwrap()
    }

    fn listed_ex(s: &str) -> Option<ExceptionMatch> {
        Some(ExceptionMatch::Listed(ListedException { sequence: seq(s) }))
    }

    #[test]
    fn k5_p3_examples() {
        assert!(check_k5_p3(&seq("4^5")).unwrap().decision);
        let v = check_k5_p3(&seq("4,3,3,2,2,2")).unwrap();
        assert!(!v.decision);
        assert!(v.failed_conditions.is_empty());
        assert_eq!(v.exception, listed_ex("4,3^2,2^3"));
        let v = check_k5_p3(&seq("6,6,2^5")).unwrap();
        assert_eq!(v.failed_conditions, vec!["d3<3"]);
        assert_eq!(v.exception, None);
    }

    #[test]
    fn k5_a3_examples() {
        let v = check_k5_a3(&seq("5,3^3,2^2")).unwrap();
        assert_eq!(v.exception, Some(ExceptionMatch::Family(FamilyMatch::A3 { n: 6, k: 4 })));
        let v = check_k5_a3(&seq("6,3^5,1")).unwrap();
        assert_eq!(v.exception, Some(ExceptionMatch::Family(FamilyMatch::Hub { n: 7, k: 5 })));
        assert!(check_k5_a3(&seq("3^4,2")).unwrap().decision);
    }

    #[test]
    fn k5_k3_examples() {
        assert_eq!(check_k5_k3(&seq("4^2,2^4")).unwrap().exception, listed_ex("4^2,2^4"));
        assert!(check_k5_k3(&seq("5^4,4^3")).unwrap().decision);
        let v = check_k5_k3(&seq("4,3^4")).unwrap();
        assert_eq!(v.failed_conditions, vec!["d2<4"]);
    }

    #[test]
    fn k5_k13_examples() {
        assert_eq!(check_k5_k13(&seq("4,3^4,2")).unwrap().exception, listed_ex("4,3^4,2"));
        assert!(check_k5_k13(&seq("4,3^3,1")).unwrap().decision);
        let v = check_k5_k13(&seq("5,3^4,1")).unwrap();
        assert_eq!(v.exception, Some(ExceptionMatch::Family(FamilyMatch::Hub { n: 6, k: 4 })));
    }

    #[test]
    fn k5_2k2_examples() {
        let v = check_k5_2k2(&seq("6,6,3^4,2")).unwrap();
        assert_eq!(v.exception, Some(ExceptionMatch::Family(FamilyMatch::S1 { n: 7, i: 1, j: 1, k: 0 })));
        assert_eq!(check_k5_2k2(&seq("4^2,3^4")).unwrap().exception, listed_ex("4^2,3^4"));
        assert!(check_k5_2k2(&seq("4^6")).unwrap().decision);
    }

    #[test]
    fn c4_examples() {
        let v = check_c4(&seq("2^5")).unwrap();
        assert!(!v.decision);
        assert!(v.failed_conditions.is_empty());
        assert!(check_c4(&seq("2^7")).unwrap().decision);
        let v = check_c4(&seq("6,2^6")).unwrap();
        assert_eq!(v.failed_conditions, vec!["d1=n-1,d2<3"]);
        assert_eq!(check_c4(&seq("1,1,1")), Err(Error::TooShort { n: 3, min: 4 }));
    }

    #[test]
    fn all_violated_clauses_reported() {
        let v = check_k5_p3(&seq("3,3,2,2,2")).unwrap();
        assert_eq!(v.failed_conditions, vec!["d1<4", "d3<3"]);
        let v = check_k5_2k2(&seq("2^6")).unwrap();
        assert_eq!(v.failed_conditions, vec!["d1<4", "d5<3"]);
    }

    #[test]
    fn precondition_errors() {
        assert_eq!(check_k5_p3(&seq("3^3,1,1")), Err(Error::NotGraphic("3^3,1^2".into())));
        assert_eq!(check_k5_p3(&seq("4^5,0")), Err(Error::ZeroTerms("4^5,0".into())));
        assert_eq!(check_k5_p3(&seq("3^4")), Err(Error::TooShort { n: 4, min: 5 }));
        assert_eq!(
            characterize(PatternId::C5, &seq("4^5")),
            Err(Error::NoCharacterization(PatternId::C5))
        );
    }

    #[test]
    fn aliases_dispatch() {
        let v = characterize(PatternId::K311, &seq("4^6")).unwrap();
        assert_eq!(v.pattern, PatternId::K311);
        assert!(!v.decision);
        assert!(characterize(PatternId::K122, &seq("4^6")).unwrap().decision);
    }

    #[test]
    fn listed_exceptions_are_graphic_and_rejected() {
        for pattern in PatternId::CHARACTERIZED {
            for s in listed_exceptions(pattern) {
                assert!(is_graphic_eg(&s), "{pattern} {s}");
                let v = characterize(pattern, &s).unwrap();
                assert!(!v.decision, "{pattern} {s}");
                assert_eq!(v.exception.unwrap().expand(), s);
            }
        }
    }

    #[test]
    fn verdict_json_shape() {
        let v = check_k5_2k2(&seq("6,6,3^4,2")).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"pattern":"k5-2k2","sequence":"6^2,3^4,2","decision":false,"failed_conditions":[],"exception":{"family":"s1","n":7,"i":1,"j":1,"k":0},"source":"theorem"}"#
        );
        let back: Verdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        let v = check_k5_p3(&seq("4,3^2,2^3")).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains(r#""exception":{"family":"listed","sequence":"4,3^2,2^3"}"#), "{json}");
        assert_eq!(serde_json::from_str::<Verdict>(&json).unwrap(), v);
    }
}
