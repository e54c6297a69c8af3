#![allow(dead_code)]

use degseq::DegreeSequence;

/// All non-increasing sequences of length `len` with terms in `lo..=hi`.
pub fn non_increasing(len: usize, lo: u32, hi: u32) -> Vec<DegreeSequence> {
    fn go(prefix: &mut Vec<u32>, len: usize, lo: u32, hi: u32, out: &mut Vec<DegreeSequence>) {
        if prefix.len() == len {
            out.push(DegreeSequence::new(prefix.clone()));
            return;
        }
        let top = prefix.last().copied().unwrap_or(hi);
        for v in lo..=top {
            prefix.push(v);
            go(prefix, len, lo, hi, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        go(&mut Vec::new(), len, lo, hi, &mut out);
    }
    out
}

/// Degree vector of the graph on `n` vertices given by a subset of the
/// `n(n-1)/2` pairs, listed in lexicographic order.
pub fn subset_degrees(n: usize, mask: u32) -> Vec<u32> {
    let mut degrees = vec![0u32; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                degrees[u] += 1;
                degrees[v] += 1;
            }
            bit += 1;
        }
    }
    degrees
}

pub fn seq(s: &str) -> DegreeSequence {
    degseq::parse_sequence(s).unwrap()
}
