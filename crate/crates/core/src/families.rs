//! Parametric exception families and their exact matchers.
//!
//! Each family describes positive sequences of a fixed shape. A matcher
//! recovers the parameters from the sequence itself, then re-expands them and
//! compares, so a returned match always reproduces its input.

use serde::{Deserialize, Serialize};

use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyMatch {
    /// `(n-1, 3^3, 2^(n-k), 1^(k-4))` with `n >= 6`, `4 <= k <= n-2` and
    /// `n = k (mod 2)`.
    A3 { n: usize, k: usize },
    /// `(n-i, n-j, 3^a, 2^b, 1^(i+j-2))` where `b = 2k` if `n-i-j` is even
    /// and `b = 2k+1` otherwise, `a` filling the remaining positions;
    /// `1 <= i <= j <= n-5` and `0 <= k <= floor((n-i-j-4)/2)`.
    S1 { n: usize, i: usize, j: usize, k: usize },
    /// `(n-1, 3^k, 1^(n-1-k))`: one vertex joined to everything, the rest
    /// carrying exactly `k` threes. `k` in `{5, 6}` is the `S2` pair.
    Hub { n: usize, k: usize },
}

impl FamilyMatch {
    pub fn n(&self) -> usize {
        match *self {
            Self::A3 { n, .. } | Self::S1 { n, .. } | Self::Hub { n, .. } => n,
        }
    }

    /// Whether the parameters lie in the family's admissible range.
    pub fn is_admissible(&self) -> bool {
        match *self {
            Self::A3 { n, k } => n >= 6 && (4..=n - 2).contains(&k) && (n - k) % 2 == 0,
            Self::S1 { n, i, j, k } => {
                i >= 1 && i <= j && n >= 5 && j <= n - 5 && n >= i + j + 4 && k <= (n - i - j - 4) / 2
            }
            Self::Hub { n, k } => k >= 1 && n > k,
        }
    }

    /// The sequence this match stands for. Parameters must be admissible.
    pub fn expand(&self) -> DegreeSequence {
        debug_assert!(self.is_admissible(), "{self:?}");
        let n = self.n();
        let runs: Vec<(u32, usize)> = match *self {
            Self::A3 { k, .. } => vec![((n - 1) as u32, 1), (3, 3), (2, n - k), (1, k - 4)],
            Self::S1 { i, j, k, .. } => {
                let twos = if (n - i - j) % 2 == 0 { 2 * k } else { 2 * k + 1 };
                let threes = n - i - j - twos;
                vec![
                    ((n - i) as u32, 1),
                    ((n - j) as u32, 1),
                    (3, threes),
                    (2, twos),
                    (1, i + j - 2),
                ]
            }
            Self::Hub { k, .. } => vec![((n - 1) as u32, 1), (3, k), (1, n - 1 - k)],
        };
        DegreeSequence::from_runs(&runs)
    }

    /// Every admissible `A3` and `S1` parameter choice with the given length.
    pub fn enumerate(n: usize) -> Vec<FamilyMatch> {
        let mut out = Vec::new();
        if n >= 6 {
            for k in 4..=n - 2 {
                out.push(Self::A3 { n, k });
            }
        }
        for j in 1..=n.saturating_sub(5) {
            for i in 1..=j {
                if n < i + j + 4 {
                    continue;
                }
                for k in 0..=(n - i - j - 4) / 2 {
                    out.push(Self::S1 { n, i, j, k });
                }
            }
        }
        out.retain(|m| m.is_admissible());
        out
    }
}

fn confirm(candidate: FamilyMatch, seq: &DegreeSequence) -> Option<FamilyMatch> {
    (candidate.is_admissible() && candidate.expand() == *seq).then_some(candidate)
}

/// Matches `(n-1, 3^3, 2^(n-k), 1^(k-4))`; `k` is read off the number of ones.
pub fn matches_family_a3(seq: &DegreeSequence) -> Option<FamilyMatch> {
    let n = seq.len();
    let k = 4 + seq.count(1);
    confirm(FamilyMatch::A3 { n, k }, seq)
}

/// Matches the two-branch `S1` family; `i` and `j` come from `d_1` and `d_2`,
/// `k` from the number of twos.
pub fn matches_family_s1(seq: &DegreeSequence) -> Option<FamilyMatch> {
    let n = seq.len();
    if n < 2 {
        return None;
    }
    let i = n.checked_sub(seq.d(1) as usize)?;
    let j = n.checked_sub(seq.d(2) as usize)?;
    // the parity of n-i-j fixes whether the twos count is 2k or 2k+1
    let k = seq.count(2) / 2;
    confirm(FamilyMatch::S1 { n, i, j, k }, seq)
}

/// Matches `(n-1, 3^threes, 1^(n-1-threes))`.
pub fn matches_hub(seq: &DegreeSequence, threes: usize) -> Option<FamilyMatch> {
    confirm(FamilyMatch::Hub { n: seq.len(), k: threes }, seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_sequence;

    fn seq(s: &str) -> DegreeSequence {
        parse_sequence(s).unwrap()
    }

    #[test]
    fn a3_examples() {
        assert_eq!(matches_family_a3(&seq("7,3^3,2^4")), Some(FamilyMatch::A3 { n: 8, k: 4 }));
        assert_eq!(matches_family_a3(&seq("5,3^3,2^2")), Some(FamilyMatch::A3 { n: 6, k: 4 }));
        assert_eq!(matches_family_a3(&seq("6,3^3,2^3")), None);
        assert_eq!(matches_family_a3(&seq("7,3^3,2^2,1^2")), Some(FamilyMatch::A3 { n: 8, k: 6 }));
        // k = n - 1 is outside the range even though the shape fits
        assert_eq!(matches_family_a3(&seq("6,3^3,2,1^2")), None);
    }

    #[test]
    fn s1_examples() {
        assert_eq!(
            matches_family_s1(&seq("6,5,3^4,1")),
            Some(FamilyMatch::S1 { n: 7, i: 1, j: 2, k: 0 })
        );
        assert_eq!(
            matches_family_s1(&seq("6,6,3^4,2")),
            Some(FamilyMatch::S1 { n: 7, i: 1, j: 1, k: 0 })
        );
        assert_eq!(matches_family_s1(&seq("6,3^5,1")), None);
    }

    #[test]
    fn hub_examples() {
        assert_eq!(matches_hub(&seq("6,3^5,1"), 5), Some(FamilyMatch::Hub { n: 7, k: 5 }));
        assert_eq!(matches_hub(&seq("5,3^5"), 5), Some(FamilyMatch::Hub { n: 6, k: 5 }));
        assert_eq!(matches_hub(&seq("4,3^4"), 4), Some(FamilyMatch::Hub { n: 5, k: 4 }));
        assert_eq!(matches_hub(&seq("4,3^4"), 5), None);
    }

    #[test]
    fn expansions_have_length_n() {
        for n in 5..=12 {
            for m in FamilyMatch::enumerate(n) {
                let s = m.expand();
                assert_eq!(s.len(), n, "{m:?}");
                assert!(s.is_positive(), "{m:?}");
                assert_eq!(s.sigma() % 2, 0, "{m:?}");
            }
        }
    }
}
