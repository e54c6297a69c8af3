//! Target graphs `K5 - H` and non-induced subgraph containment.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SmallGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "&'static str", try_from = "String")]
pub enum PatternId {
    K5P3,
    K5A3,
    K5K3,
    K5K13,
    K5TwoK2,
    C4,
    C5,
    K5C4,
    K5E,
    K122,
    K311,
}

impl PatternId {
    pub const ALL: [PatternId; 11] = [
        PatternId::K5P3,
        PatternId::K5A3,
        PatternId::K5K3,
        PatternId::K5K13,
        PatternId::K5TwoK2,
        PatternId::C4,
        PatternId::C5,
        PatternId::K5C4,
        PatternId::K5E,
        PatternId::K122,
        PatternId::K311,
    ];

    /// The five patterns with a closed-form characterization on 5 vertices.
    pub const CHARACTERIZED: [PatternId; 5] = [
        PatternId::K5P3,
        PatternId::K5A3,
        PatternId::K5K3,
        PatternId::K5K13,
        PatternId::K5TwoK2,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Self::K5P3 => "k5-p3",
            Self::K5A3 => "k5-a3",
            Self::K5K3 => "k5-k3",
            Self::K5K13 => "k5-k13",
            Self::K5TwoK2 => "k5-2k2",
            Self::C4 => "c4",
            Self::C5 => "c5",
            Self::K5C4 => "k5-c4",
            Self::K5E => "k5-e",
            Self::K122 => "k122",
            Self::K311 => "k311",
        }
    }

    /// Maps isomorphic aliases onto the `K5 - H` name that has a characterization.
    pub fn canonical(self) -> Self {
        match self {
            Self::K122 => Self::K5TwoK2,
            Self::K311 => Self::K5K3,
            other => other,
        }
    }

    pub fn order(self) -> usize {
        match self {
            Self::C4 => 4,
            _ => 5,
        }
    }

    pub fn graph(self) -> SmallGraph {
        pattern_graph(self)
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for PatternId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let wanted = s.trim().to_ascii_lowercase();
        PatternId::ALL
            .into_iter()
            .find(|p| p.token() == wanted)
            .ok_or_else(|| {
                let names: Vec<_> = PatternId::ALL.iter().map(|p| p.token()).collect();
                format!("unknown pattern {s:?}; expected one of {}", names.join(", "))
            })
    }
}

impl From<PatternId> for &'static str {
    fn from(p: PatternId) -> Self {
        p.token()
    }
}

impl TryFrom<String> for PatternId {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

fn k5_minus(removed: &[(usize, usize)]) -> SmallGraph {
    let mut g = SmallGraph::complete(5);
    for &(u, v) in removed {
        g.remove_edge(u, v);
    }
    g
}

/// Canonical labeled copy of a pattern.
///
/// Labels are fixed but carry no meaning; callers compare patterns through
/// [`contains_subgraph`] or [`is_isomorphic`], never by labels.
pub fn pattern_graph(id: PatternId) -> SmallGraph {
    match id {
        PatternId::K5P3 => k5_minus(&[(0, 1), (1, 2), (2, 3)]),
        PatternId::K5A3 => k5_minus(&[(0, 1), (1, 2), (3, 4)]),
        PatternId::K5K3 => k5_minus(&[(0, 1), (1, 2), (0, 2)]),
        PatternId::K5K13 => k5_minus(&[(0, 1), (0, 2), (0, 3)]),
        PatternId::K5TwoK2 => k5_minus(&[(0, 1), (2, 3)]),
        PatternId::K5C4 => k5_minus(&[(0, 1), (1, 2), (2, 3), (3, 0)]),
        PatternId::K5E => k5_minus(&[(0, 1)]),
        PatternId::C4 => SmallGraph::cycle(4),
        PatternId::C5 => SmallGraph::cycle(5),
        // parts {0}, {1,2}, {3,4}
        PatternId::K122 => SmallGraph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)],
        ),
        // parts {0,1,2}, {3}, {4}
        PatternId::K311 => SmallGraph::from_edges(
            5,
            &[(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        ),
    }
}

/// Checks the isomorphisms the pattern aliases rely on.
pub fn check_pattern_identities() -> Result<(), String> {
    let pairs = [(PatternId::K122, PatternId::K5TwoK2), (PatternId::K311, PatternId::K5K3)];
    for (a, b) in pairs {
        if !is_isomorphic(&a.graph(), &b.graph()).unwrap_or(false) {
            return Err(format!("{a} is not isomorphic to {b}"));
        }
    }
    Ok(())
}

struct Embedder<'a> {
    host: &'a SmallGraph,
    guest: &'a SmallGraph,
    order: Vec<usize>,
    exact_degrees: bool,
    image: Vec<usize>,
    used: u16,
}

impl Embedder<'_> {
    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let need = self.guest.degree(x);
        // every already-mapped guest neighbour of x constrains the host candidate
        let mut candidates = !self.used & (((1u32 << self.host.order()) - 1) as u16);
        for &y in &self.order[..depth] {
            if self.guest.has_edge(x, y) {
                candidates &= self.host.neighbors(self.image[y]);
            } else if self.exact_degrees {
                candidates &= !self.host.neighbors(self.image[y]);
            }
        }
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let have = self.host.degree(v);
            if have < need || (self.exact_degrees && have != need) {
                continue;
            }
            self.image[x] = v;
            self.used |= 1 << v;
            if self.search(depth + 1) {
                return true;
            }
            self.used &= !(1 << v);
        }
        false
    }
}

fn embed(host: &SmallGraph, guest: &SmallGraph, exact_degrees: bool) -> Option<Vec<usize>> {
    if guest.order() > host.order() || guest.edge_count() > host.edge_count() {
        return None;
    }
    let mut order: Vec<usize> = (0..guest.order()).collect();
    order.sort_by(|&a, &b| guest.degree(b).cmp(&guest.degree(a)).then(a.cmp(&b)));
    let mut embedder = Embedder {
        host,
        guest,
        order,
        exact_degrees,
        image: vec![0; guest.order()],
        used: 0,
    };
    embedder.search(0).then_some(embedder.image)
}

/// An injective map `h -> g` sending every edge of `h` onto an edge of `g`.
///
/// Entry `x` of the result is the image of guest vertex `x`.
pub fn find_embedding(g: &SmallGraph, h: &SmallGraph) -> Option<Vec<usize>> {
    embed(g, h, false)
}

/// Non-induced subgraph containment.
pub fn contains_subgraph(g: &SmallGraph, h: &SmallGraph) -> bool {
    find_embedding(g, h).is_some()
}

pub fn complement(g: &SmallGraph) -> SmallGraph {
    g.complement()
}

pub const MAX_ISOMORPHISM_ORDER: usize = 10;

pub fn is_isomorphic(g: &SmallGraph, h: &SmallGraph) -> Result<bool> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch { left: g.order(), right: h.order() });
    }
    if g.order() > MAX_ISOMORPHISM_ORDER {
        return Err(Error::TooLong { n: g.order(), max: MAX_ISOMORPHISM_ORDER });
    }
    if g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(embed(g, h, true).is_some())
}
