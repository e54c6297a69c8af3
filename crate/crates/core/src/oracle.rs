//! Brute-force ground truth: backtracking over labeled realizations.
//!
//! Nothing here consults the closed-form characterizations. Two searches are
//! provided. The unrestricted one enumerates every labeled realization and
//! tests containment at the leaves. The placement search pins a copy of the
//! pattern onto the highest-degree vertices (any realization containing the
//! pattern can be rearranged into that shape) and only completes the
//! remaining degrees.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::patterns::{contains_subgraph, PatternId};
use crate::sequence::{erdos_gallai_violation, is_graphic_eg, DegreeSequence};

pub const MAX_ORACLE_ORDER: usize = 12;
pub const DEFAULT_MAX_NODES: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_nodes: DEFAULT_MAX_NODES, time_limit: None }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self { max_nodes, time_limit: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    /// Every realization was visited.
    Complete { visited: u64 },
    /// The visitor asked to stop.
    Stopped { visited: u64 },
}

/// A realization containing the pattern, with the pattern's image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: SmallGraph,
    /// `embedding[x]` is the host vertex of pattern vertex `x`.
    pub embedding: Vec<usize>,
}

struct Meter {
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Self { nodes: 0, budget, started: Instant::now() }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        if self.nodes % 4096 == 0 {
            if let Some(limit) = self.budget.time_limit {
                if self.started.elapsed() > limit {
                    return Err(Error::BudgetExhausted { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}

/// Row-major completion of a partially fixed adjacency matrix.
///
/// Row `v` is finished before row `v + 1`: `v` is joined to a combination of
/// later vertices that exactly uses up its residual demand. Edges fixed before
/// the search starts are never revisited, so each completion is produced once.
struct Completion<'m, F> {
    n: usize,
    rows: [u16; 16],
    residual: [u32; 16],
    meter: &'m mut Meter,
    visit: F,
    visited: u64,
}

impl<F: FnMut(&SmallGraph) -> ControlFlow<()>> Completion<'_, F> {
    fn run(&mut self, v: usize) -> Result<ControlFlow<()>> {
        self.meter.tick()?;
        if v == self.n {
            self.visited += 1;
            let graph = SmallGraph::from_rows(self.n, &self.rows);
            return Ok((self.visit)(&graph));
        }
        let need = self.residual[v] as usize;
        let candidates: Vec<usize> = (v + 1..self.n)
            .filter(|&w| self.residual[w] > 0 && self.rows[v] >> w & 1 == 0)
            .collect();
        if candidates.len() < need {
            return Ok(ControlFlow::Continue(()));
        }
        if need == 0 {
            return self.run(v + 1);
        }
        let mut chosen = Vec::with_capacity(need);
        self.choose(v, &candidates, 0, need, &mut chosen)
    }

    fn choose(
        &mut self,
        v: usize,
        candidates: &[usize],
        from: usize,
        need: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<ControlFlow<()>> {
        if chosen.len() == need {
            let saved = self.residual[v];
            for &w in chosen.iter() {
                self.rows[v] |= 1 << w;
                self.rows[w] |= 1 << v;
                self.residual[w] -= 1;
            }
            self.residual[v] = 0;
            let flow = if self.tail_feasible(v + 1) {
                self.run(v + 1)?
            } else {
                ControlFlow::Continue(())
            };
            for &w in chosen.iter() {
                self.rows[v] &= !(1 << w);
                self.rows[w] &= !(1 << v);
                self.residual[w] += 1;
            }
            self.residual[v] = saved;
            return Ok(flow);
        }
        let remaining = need - chosen.len();
        for idx in from..=candidates.len() - remaining {
            chosen.push(candidates[idx]);
            let flow = self.choose(v, candidates, idx + 1, need, chosen)?;
            chosen.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Necessary conditions for the rows from `start` on to be completable.
    fn tail_feasible(&self, start: usize) -> bool {
        let mut tail: Vec<u32> = Vec::with_capacity(self.n - start);
        for w in start..self.n {
            let free = (start..self.n)
                .filter(|&u| u != w && self.rows[w] >> u & 1 == 0)
                .count() as u32;
            if self.residual[w] > free {
                return false;
            }
            tail.push(self.residual[w]);
        }
        tail.sort_unstable_by(|a, b| b.cmp(a));
        erdos_gallai_violation(&tail).is_none()
    }
}

fn complete_from<F>(
    n: usize,
    rows: [u16; 16],
    residual: [u32; 16],
    meter: &mut Meter,
    visit: F,
) -> Result<(ControlFlow<()>, u64)>
where
    F: FnMut(&SmallGraph) -> ControlFlow<()>,
{
    let mut search = Completion { n, rows, residual, meter, visit, visited: 0 };
    if !search.tail_feasible(0) {
        return Ok((ControlFlow::Continue(()), 0));
    }
    let flow = search.run(0)?;
    Ok((flow, search.visited))
}

fn require_graphic(seq: &DegreeSequence) -> Result<()> {
    if seq.len() > MAX_ORACLE_ORDER {
        return Err(Error::TooLong { n: seq.len(), max: MAX_ORACLE_ORDER });
    }
    if !is_graphic_eg(seq) {
        return Err(Error::NotGraphic(seq.to_string()));
    }
    Ok(())
}

fn require_positive_graphic(seq: &DegreeSequence) -> Result<()> {
    require_graphic(seq)?;
    if !seq.is_positive() {
        return Err(Error::ZeroTerms(seq.to_string()));
    }
    Ok(())
}

fn demand_of(seq: &DegreeSequence) -> [u32; 16] {
    let mut residual = [0u32; 16];
    residual[..seq.len()].copy_from_slice(seq.terms());
    residual
}

/// Visits every labeled realization in which vertex `i` has degree `terms[i]`.
pub fn enumerate_realizations<F>(seq: &DegreeSequence, budget: SearchBudget, visit: F) -> Result<Enumeration>
where
    F: FnMut(&SmallGraph) -> ControlFlow<()>,
{
    require_graphic(seq)?;
    let mut meter = Meter::new(budget);
    let (flow, visited) = complete_from(seq.len(), [0; 16], demand_of(seq), &mut meter, visit)?;
    Ok(match flow {
        ControlFlow::Continue(()) => Enumeration::Complete { visited },
        ControlFlow::Break(()) => Enumeration::Stopped { visited },
    })
}

/// Unrestricted search: some labeled realization contains the pattern.
pub fn potentially_unrestricted(seq: &DegreeSequence, pattern: PatternId, budget: SearchBudget) -> Result<bool> {
    require_positive_graphic(seq)?;
    let target = pattern.graph();
    if seq.len() < target.order() {
        return Ok(false);
    }
    let outcome = enumerate_realizations(seq, budget, |g| {
        if contains_subgraph(g, &target) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(matches!(outcome, Enumeration::Stopped { .. }))
}

/// All distinct labeled copies of `pattern` on vertices `0..order`, each
/// paired with the vertex map that produced it.
pub fn placements(pattern: PatternId) -> Vec<(SmallGraph, Vec<usize>)> {
    let base = pattern.graph();
    let order = base.order();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..order).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut copy = SmallGraph::empty(order);
        for (u, v) in base.edges() {
            copy.add_edge(p[u], p[v]);
        }
        if seen.insert(copy) {
            out.push((copy, p.to_vec()));
        }
    });
    out.sort_by(|a, b| a.0.edges().cmp(&b.0.edges()));
    out
}

fn permutations(items: &mut Vec<usize>, start: usize, emit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        emit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, emit);
        items.swap(start, i);
    }
}

/// Placement search: pattern on the top-degree vertices, then completion.
///
/// Placements are tried in lexicographic order of their edge lists and
/// completions in row-major combination order; the first completion found is
/// returned, so the output is deterministic.
pub fn find_witness(seq: &DegreeSequence, pattern: PatternId, budget: SearchBudget) -> Result<Option<Witness>> {
    require_positive_graphic(seq)?;
    let n = seq.len();
    let order = pattern.order();
    if n < order {
        return Ok(None);
    }
    let mut meter = Meter::new(budget);
    for (copy, embedding) in placements(pattern) {
        let mut residual = demand_of(seq);
        if (0..order).any(|v| copy.degree(v) > residual[v]) {
            continue;
        }
        let mut rows = [0u16; 16];
        for v in 0..order {
            rows[v] = copy.neighbors(v);
            residual[v] -= copy.degree(v);
        }
        let mut found = None;
        let (flow, _) = complete_from(n, rows, residual, &mut meter, |g| {
            found = Some(*g);
            ControlFlow::Break(())
        })?;
        if flow.is_break() {
            let graph = found.expect("set before break");
            debug_assert!(graph.union_edges(&copy) == graph);
            return Ok(Some(Witness { graph, embedding }));
        }
    }
    Ok(None)
}

/// True iff some realization of `seq` contains `pattern`.
///
/// Exhausting `budget` is reported as [`Error::BudgetExhausted`], never as
/// `false`.
pub fn potentially_oracle(seq: &DegreeSequence, pattern: PatternId, budget: SearchBudget) -> Result<bool> {
    Ok(find_witness(seq, pattern, budget)?.is_some())
}

pub const MAX_PLACEMENT_CHECK_ORDER: usize = 10;

/// Whether the unrestricted and the placement search agree on `seq`.
pub fn placement_agrees(seq: &DegreeSequence, pattern: PatternId, budget: SearchBudget) -> Result<bool> {
    if seq.len() > MAX_PLACEMENT_CHECK_ORDER {
        return Err(Error::TooLong { n: seq.len(), max: MAX_PLACEMENT_CHECK_ORDER });
    }
    let restricted = potentially_oracle(seq, pattern, budget)?;
    let unrestricted = potentially_unrestricted(seq, pattern, budget)?;
    Ok(restricted == unrestricted)
}
