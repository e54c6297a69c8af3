//! Degree sequences, graphicality tests and the laying-off reduction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, MAX_VERTICES};

/// A non-increasing list of nonnegative integers.
///
/// Construction always sorts, so two sequences with the same multiset of terms
/// compare equal. Graphicality is not required; see [`is_graphic_eg`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DegreeSequence {
    terms: Vec<u32>,
    sigma: u64,
}

impl DegreeSequence {
    pub fn new(mut terms: Vec<u32>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        let sigma = terms.iter().map(|&d| u64::from(d)).sum();
        Self { terms, sigma }
    }

    /// Builds a sequence from `(value, repeat)` runs, as in `r^t` notation.
    pub fn from_runs(runs: &[(u32, usize)]) -> Self {
        Self::new(
            runs.iter()
                .flat_map(|&(value, times)| std::iter::repeat(value).take(times))
                .collect(),
        )
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// 1-based term access, matching the usual `d_i` convention.
    ///
    /// # Panics
    /// Panics when `i` is zero or exceeds the length.
    pub fn d(&self, i: usize) -> u32 {
        assert!(i >= 1 && i <= self.terms.len(), "d_{i} out of range");
        self.terms[i - 1]
    }

    pub fn is_positive(&self) -> bool {
        self.terms.iter().all(|&d| d > 0)
    }

    pub fn count(&self, value: u32) -> usize {
        self.terms.iter().filter(|&&d| d == value).count()
    }

    /// Largest and smallest positive terms.
    pub fn m_h(&self) -> Result<(u32, u32)> {
        let largest = *self.terms.first().ok_or(Error::NoPositiveTerm)?;
        if largest == 0 {
            return Err(Error::NoPositiveTerm);
        }
        let smallest = self.terms.iter().rev().copied().find(|&d| d > 0).unwrap_or(largest);
        Ok((largest, smallest))
    }

    /// Runs of equal terms, largest value first.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &d in &self.terms {
            match runs.last_mut() {
                Some((value, times)) if *value == d => *times += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs
    }
}

impl fmt::Display for DegreeSequence {
    /// Power notation, exponents written only when greater than one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (value, times)) in self.runs().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            if times > 1 {
                write!(f, "{value}^{times}")?;
            } else {
                write!(f, "{value}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

impl From<DegreeSequence> for String {
    fn from(seq: DegreeSequence) -> String {
        seq.to_string()
    }
}

impl TryFrom<String> for DegreeSequence {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        parse_sequence(&s)
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(terms: Vec<u32>) -> Self {
        Self::new(terms)
    }
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(start) == Some(&b'-') {
            return Err(Error::NegativeValue { position: start });
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Syntax {
                position: start,
                message: "expected an integer".into(),
            });
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Syntax {
            position: start,
            message: format!("integer {digits} out of range"),
        })
    }
}

/// Parses `item ("," item)*` where `item := INT | INT "^" INT`.
///
/// Whitespace is ignored anywhere between tokens. The result is canonical
/// (non-increasing), so `"2,4,3"` parses to `(4,3,2)`.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    let mut lexer = Lexer { bytes: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    loop {
        let value = lexer.int()?;
        let mut times = 1usize;
        if lexer.peek() == Some(b'^') {
            lexer.pos += 1;
            lexer.skip_ws();
            let at = lexer.pos;
            times = lexer.int()? as usize;
            if times == 0 {
                return Err(Error::ZeroExponent { position: at });
            }
        }
        terms.extend(std::iter::repeat(value).take(times));
        match lexer.peek() {
            None => break,
            Some(b',') => lexer.pos += 1,
            Some(c) => {
                return Err(Error::Syntax {
                    position: lexer.pos,
                    message: format!("unexpected character {:?}", c as char),
                })
            }
        }
    }
    Ok(DegreeSequence::new(terms))
}

pub fn sigma(seq: &DegreeSequence) -> u64 {
    seq.sigma()
}

/// Why a sequence fails the Erdős–Gallai test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphicViolation {
    OddSum,
    /// The inequality fails at this 1-based prefix length.
    Inequality { k: usize },
}

impl fmt::Display for GraphicViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OddSum => f.write_str("odd degree sum"),
            Self::Inequality { k } => write!(f, "Erdős–Gallai inequality fails at k = {k}"),
        }
    }
}

/// First violated Erdős–Gallai condition, or `None` when the sequence is graphic.
pub fn erdos_gallai_violation(terms: &[u32]) -> Option<GraphicViolation> {
    debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
    let total: u64 = terms.iter().map(|&d| u64::from(d)).sum();
    if total % 2 == 1 {
        return Some(GraphicViolation::OddSum);
    }
    let mut prefix = 0u64;
    for k in 1..=terms.len() {
        prefix += u64::from(terms[k - 1]);
        let kk = k as u64;
        let tail: u64 = terms[k..].iter().map(|&d| u64::from(d).min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return Some(GraphicViolation::Inequality { k });
        }
    }
    None
}

pub fn is_graphic_eg(seq: &DegreeSequence) -> bool {
    erdos_gallai_violation(seq.terms()).is_none()
}

/// Laying off `d_k` (1-based): `d_k` is deleted and joined to `d_k` other
/// terms, taken from the front and skipping position `k` itself.
///
/// The result is re-sorted and has `sigma(seq) - 2 * d_k`.
pub fn lay_off(seq: &DegreeSequence, k: usize) -> Result<DegreeSequence> {
    let n = seq.len();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    let value = seq.d(k);
    if value == 0 {
        return Err(Error::ZeroTerm { k });
    }
    let degree = value as usize;
    if degree > n - 1 {
        return Err(Error::LayOffTooLarge { k, value, available: n - 1 });
    }
    let mut rest: Vec<u32> = Vec::with_capacity(n - 1);
    rest.extend_from_slice(&seq.terms()[..k - 1]);
    rest.extend_from_slice(&seq.terms()[k..]);
    // Both branches of the definition reduce to decrementing the first d_k
    // entries once position k has been removed.
    for term in &mut rest[..degree] {
        *term = term.checked_sub(1).ok_or(Error::NegativeResidual { k })?;
    }
    Ok(DegreeSequence::new(rest))
}

/// Graphicality by repeatedly laying off the last positive term.
pub fn is_graphic_kw(seq: &DegreeSequence) -> bool {
    if seq.sigma() % 2 == 1 {
        return false;
    }
    let mut current = seq.clone();
    loop {
        let positive = current.terms().iter().take_while(|&&d| d > 0).count();
        if positive == 0 {
            return true;
        }
        if positive < current.len() {
            current = DegreeSequence::new(current.terms()[..positive].to_vec());
        }
        match lay_off(&current, positive) {
            Ok(next) => current = next,
            Err(_) => return false,
        }
    }
}

/// Sufficient conditions for graphicality that avoid running a full test.
///
/// `Some(true)` when either all positive terms lie in `{1, 2}` with at least
/// one `1` and an even sum, or when every term lies in `{1, 2, 3}`, `n >= 4`,
/// the sum is even and the sequence is neither `(3^3,1)` nor `(3^2,1^2)`.
/// `None` when neither hypothesis holds.
pub fn graphic_fast_path(seq: &DegreeSequence) -> Option<bool> {
    if seq.sigma() % 2 == 1 {
        return None;
    }
    if let Ok((largest, smallest)) = seq.m_h() {
        if largest <= 2 && smallest == 1 {
            return Some(true);
        }
    }
    let terms = seq.terms();
    let low_degree = seq.len() >= 4 && seq.is_positive() && terms[0] <= 3;
    if low_degree && terms != [3, 3, 3, 1] && terms != [3, 3, 1, 1] {
        return Some(true);
    }
    None
}

/// Deterministic Havel–Hakimi realization.
///
/// Vertex `i` receives degree `terms[i]`. At each step the vertex with the
/// largest remaining demand (lowest label on ties) is joined to the next
/// largest demands, again lowest label first.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<SmallGraph> {
    let n = seq.len();
    if n > MAX_VERTICES {
        return Err(Error::TooLong { n, max: MAX_VERTICES });
    }
    if !is_graphic_eg(seq) {
        return Err(Error::NotGraphic(seq.to_string()));
    }
    let mut graph = SmallGraph::empty(n);
    let mut demand: Vec<u32> = seq.terms().to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| demand[b].cmp(&demand[a]).then(a.cmp(&b)));
        let hub = order[0];
        let need = demand[hub] as usize;
        if need == 0 {
            break;
        }
        demand[hub] = 0;
        for &v in &order[1..=need] {
            // graphicality guarantees positive demand here
            debug_assert!(demand[v] > 0);
            demand[v] -= 1;
            graph.add_edge(hub, v);
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        parse_sequence(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(seq("4^2,3^4").terms(), &[4, 4, 3, 3, 3, 3]);
        assert_eq!(seq("2,4,3").terms(), &[4, 3, 2]);
        assert_eq!(seq("5,3^3,2^2").terms(), &[5, 3, 3, 3, 2, 2]);
        assert_eq!(seq(" 4 ^ 2 , 1 ").terms(), &[4, 4, 1]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_sequence("3,-1"), Err(Error::NegativeValue { position: 2 }));
        assert_eq!(parse_sequence("3^0"), Err(Error::ZeroExponent { position: 2 }));
        assert!(matches!(parse_sequence("3,,1"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_sequence("3;1"), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_sequence(""), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_sequence("3^"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn display_uses_power_notation() {
        assert_eq!(seq("4,4,3,3,3,3").to_string(), "4^2,3^4");
        assert_eq!(seq("5,3,3,3,2,2").to_string(), "5,3^3,2^2");
        assert_eq!(DegreeSequence::new(vec![]).to_string(), "");
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&seq("4^5")), 20);
        assert_eq!(sigma(&seq("6,6,2,2,2,2,2")), 22);
        assert_eq!(sigma(&DegreeSequence::new(vec![])), 0);
    }

    #[test]
    fn m_h_examples() {
        assert_eq!(seq("2,2,1,1").m_h(), Ok((2, 1)));
        assert_eq!(seq("3,3,3").m_h(), Ok((3, 3)));
        assert_eq!(seq("4,2,1,0").m_h(), Ok((4, 1)));
        assert_eq!(seq("0,0").m_h(), Err(Error::NoPositiveTerm));
        assert_eq!(DegreeSequence::new(vec![]).m_h(), Err(Error::NoPositiveTerm));
    }

    #[test]
    fn erdos_gallai_examples() {
        assert!(is_graphic_eg(&seq("3^4")));
        assert!(!is_graphic_eg(&seq("3^3,1")));
        assert!(!is_graphic_eg(&seq("3^2,1^2")));
        assert!(is_graphic_eg(&seq("0,0")));
        assert_eq!(erdos_gallai_violation(&[3, 3, 1, 1]), Some(GraphicViolation::Inequality { k: 2 }));
        assert_eq!(erdos_gallai_violation(&[3, 2]), Some(GraphicViolation::OddSum));
    }

    #[test]
    fn lay_off_examples() {
        assert_eq!(lay_off(&seq("4,3,3,2,2,2"), 6).unwrap(), seq("3,3,2,2,2"));
        assert_eq!(lay_off(&seq("4^5"), 5).unwrap(), seq("3^4"));
        let residual = lay_off(&seq("5,3^3,2^2"), 1).unwrap();
        assert_eq!(residual, seq("2,2,2,1,1"));
        assert_eq!(residual.sigma(), 18 - 10);
    }

    #[test]
    fn lay_off_errors() {
        assert_eq!(lay_off(&seq("2,2,2"), 0), Err(Error::IndexOutOfRange { k: 0, n: 3 }));
        assert_eq!(lay_off(&seq("2,2,2"), 4), Err(Error::IndexOutOfRange { k: 4, n: 3 }));
        assert_eq!(lay_off(&seq("2,1,0"), 3), Err(Error::ZeroTerm { k: 3 }));
        assert!(matches!(lay_off(&seq("5,1"), 1), Err(Error::LayOffTooLarge { .. })));
        assert_eq!(lay_off(&seq("2,0,0"), 1), Err(Error::NegativeResidual { k: 1 }));
    }

    #[test]
    fn kleitman_wang_examples() {
        assert!(is_graphic_kw(&seq("4,3,3,2,2,2")));
        assert!(!is_graphic_kw(&seq("3^3,1")));
        assert!(is_graphic_kw(&seq("1,1")));
        assert!(is_graphic_kw(&seq("2,2,2,0")));
        assert!(is_graphic_kw(&DegreeSequence::new(vec![])));
    }

    #[test]
    fn fast_path_examples() {
        assert_eq!(graphic_fast_path(&seq("2,2,1,1")), Some(true));
        assert_eq!(graphic_fast_path(&seq("3,3,2,2,2,2")), Some(true));
        assert_eq!(graphic_fast_path(&seq("4^5")), None);
        assert_eq!(graphic_fast_path(&seq("3^3,1")), None);
        assert_eq!(graphic_fast_path(&seq("2,1,0")), None);
        assert_eq!(graphic_fast_path(&seq("2,1,1,0")), Some(true));
    }

    #[test]
    fn havel_hakimi_examples() {
        let k4 = havel_hakimi_realize(&seq("3^4")).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let c5 = havel_hakimi_realize(&seq("2^5")).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.is_connected());
        let g = havel_hakimi_realize(&seq("4,3^4")).unwrap();
        assert_eq!(g.degree_sequence(), seq("4,3^4"));
        assert_eq!(havel_hakimi_realize(&seq("3^3,1")), Err(Error::NotGraphic("3^3,1".into())));
        let big = DegreeSequence::new(vec![1; 18]);
        assert!(matches!(havel_hakimi_realize(&big), Err(Error::TooLong { .. })));
    }
}
