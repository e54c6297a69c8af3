//! Labeled simple graphs on at most 16 vertices, one adjacency word per vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

pub const MAX_VERTICES: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: usize,
    adj: [u16; MAX_VERTICES],
}

impl SmallGraph {
    /// # Panics
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Self { n, adj: [0; MAX_VERTICES] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.adj[v] = g.mask() & !(1 << v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub(crate) fn from_rows(n: usize, rows: &[u16]) -> Self {
        let mut g = Self::empty(n);
        g.adj[..n].copy_from_slice(&rows[..n]);
        debug_assert!(g.is_valid());
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & self.mask() & !(1 << v);
        }
        g
    }

    /// Copy of `self` with `other` placed on vertices `0..other.order()`.
    pub fn union_edges(&self, other: &SmallGraph) -> Self {
        assert!(other.n <= self.n);
        let mut g = *self;
        for v in 0..other.n {
            g.adj[v] |= other.adj[v];
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == self.mask()
    }

    fn is_valid(&self) -> bool {
        (0..self.n).all(|v| {
            self.adj[v] & !self.mask() == 0
                && !self.has_edge(v, v)
                && (0..self.n).all(|u| self.has_edge(u, v) == self.has_edge(v, u))
        })
    }

    /// One `u-v` line per edge, `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u}-{v}\n"));
        }
        out
    }

    /// Parses the format written by [`SmallGraph::to_edge_list`].
    pub fn parse_edge_list(n: usize, text: &str) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLong { n, max: MAX_VERTICES });
        }
        let mut g = Self::empty(n);
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                let syntax = |message: &str| Error::Syntax { position: offset, message: message.into() };
                let (u, v) = trimmed.split_once('-').ok_or_else(|| syntax("expected u-v"))?;
                let u: usize = u.trim().parse().map_err(|_| syntax("bad vertex"))?;
                let v: usize = v.trim().parse().map_err(|_| syntax("bad vertex"))?;
                if u == v || u >= n || v >= n {
                    return Err(syntax("edge outside vertex range"));
                }
                g.add_edge(u, v);
            }
            offset += line.len();
        }
        Ok(g)
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_complement() {
        let k5 = SmallGraph::complete(5);
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5.complement().edge_count(), 0);
        assert_eq!(k5.complement().order(), 5);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = SmallGraph::from_edges(5, &[(3, 1), (0, 4), (0, 1)]);
        assert_eq!(g.to_edge_list(), "0-1\n0-4\n1-3\n");
        assert_eq!(SmallGraph::parse_edge_list(5, &g.to_edge_list()).unwrap(), g);
        assert!(SmallGraph::parse_edge_list(3, "0-3\n").is_err());
        assert!(SmallGraph::parse_edge_list(3, "0 1\n").is_err());
    }

    #[test]
    fn connectivity() {
        assert!(SmallGraph::cycle(6).is_connected());
        let two = SmallGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(!two.is_connected());
    }

    #[test]
    #[should_panic]
    fn rejects_loops() {
        SmallGraph::empty(3).add_edge(1, 1);
    }
}
