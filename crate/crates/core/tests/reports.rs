mod common;

use common::seq;
use degseq::characterize::{characterize, Verdict};
use degseq::extremal::{empirical_sigma, verify_characterization, MismatchReport, SigmaResult};
use degseq::{PatternId, SearchBudget};

fn round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(value: &T) {
    let text = serde_json::to_string_pretty(value).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
}

#[test]
fn verdicts_round_trip() {
    for (p, s) in [
        (PatternId::K5A3, "5,3^3,2^2"),
        (PatternId::K5A3, "6,3^5,1"),
        (PatternId::K5TwoK2, "6,5,3^4,1"),
        (PatternId::K5P3, "4,3^2,2^3"),
        (PatternId::K5P3, "3,3,2,2,2"),
        (PatternId::K311, "4^6"),
        (PatternId::C4, "2^6"),
    ] {
        let v: Verdict = characterize(p, &seq(s)).unwrap();
        round_trip(&v);
        assert_eq!(v.exception.as_ref().map(|e| e.expand()).unwrap_or_else(|| seq(s)), seq(s));
    }
}

#[test]
fn reports_round_trip() {
    let report: MismatchReport = verify_characterization(PatternId::K5K13, 5, 6, SearchBudget::default(), Some(2)).unwrap();
    round_trip(&report);
    let sigma: SigmaResult = empirical_sigma(PatternId::C5, 6, SearchBudget::default(), Some(2)).unwrap();
    round_trip(&sigma);
    let text = serde_json::to_string(&sigma).unwrap();
    for key in ["\"pattern\"", "\"n\"", "\"empirical\"", "\"formula\"", "\"match\"", "\"witnesses\"", "\"checked\"", "\"elapsed_ms\"", "\"version\":\"v1\""] {
        assert!(text.contains(key), "{key} missing from {text}");
    }
}

#[test]
fn worker_count_does_not_change_reports() {
    let one = verify_characterization(PatternId::K5A3, 5, 8, SearchBudget::default(), Some(1)).unwrap();
    let four = verify_characterization(PatternId::K5A3, 5, 8, SearchBudget::default(), Some(4)).unwrap();
    assert_eq!(one, four);
    let mut a = empirical_sigma(PatternId::K5P3, 7, SearchBudget::default(), Some(1)).unwrap();
    let mut b = empirical_sigma(PatternId::K5P3, 7, SearchBudget::default(), Some(3)).unwrap();
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a, b);
    assert_eq!(a.witnesses, vec![seq("6^2,2^5"), seq("4,3^6")]);
}
