//! Induced (chordless) paths and cycles in undirected graphs.
//!
//! Both searches extend vertex sequences in increasing id order and reject a
//! vertex as soon as it would create a chord, so the first witness found is
//! the lexicographically least one.

use crate::digraph::{UGraph, VertexId};
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedPath(pub Vec<VertexId>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedCycle(pub Vec<VertexId>);

impl InducedPath {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Consecutive vertices adjacent, all other pairs non-adjacent.
    pub fn is_valid_in(&self, g: &UGraph) -> bool {
        let p = &self.0;
        let distinct = p.iter().copied().collect::<VertexSet>().len() == p.len();
        distinct
            && (0..p.len()).all(|i| {
                (i + 1..p.len()).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1))
            })
    }
}

impl InducedCycle {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn is_valid_in(&self, g: &UGraph) -> bool {
        let c = &self.0;
        let k = c.len();
        let distinct = c.iter().copied().collect::<VertexSet>().len() == k;
        distinct
            && k >= 3
            && (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    g.has_edge(c[i], c[j]) == consecutive
                })
            })
    }
}

pub fn find_induced_path(g: &UGraph, k: usize) -> Option<InducedPath> {
    find_induced_path_within(g, g.vertices(), k)
}

/// Induced path on `k` vertices inside the subgraph induced by `within`.
pub fn find_induced_path_within(g: &UGraph, within: VertexSet, k: usize) -> Option<InducedPath> {
    if k == 0 || k > within.len() {
        return None;
    }
    let mut seq = Vec::with_capacity(k);
    for start in within.iter() {
        seq.push(start);
        if extend_path(g, within, k, &mut seq, VertexSet::singleton(start)) {
            return Some(InducedPath(seq));
        }
        seq.pop();
    }
    None
}

fn extend_path(
    g: &UGraph,
    within: VertexSet,
    k: usize,
    seq: &mut Vec<VertexId>,
    placed: VertexSet,
) -> bool {
    if seq.len() == k {
        return true;
    }
    let last = *seq.last().expect("non-empty");
    // Vertices adjacent to anything placed before `last` would form a chord.
    let earlier = placed.difference(VertexSet::singleton(last));
    let mut blocked = VertexSet::EMPTY;
    for v in earlier.iter() {
        blocked = blocked.union(g.neighbors(v));
    }
    let candidates = g
        .neighbors(last)
        .intersection(within)
        .difference(placed)
        .difference(blocked);
    for next in candidates.iter() {
        seq.push(next);
        if extend_path(g, within, k, seq, placed.union(VertexSet::singleton(next))) {
            return true;
        }
        seq.pop();
    }
    false
}

pub fn find_induced_cycle(g: &UGraph, k: usize) -> Option<InducedCycle> {
    find_induced_cycle_within(g, g.vertices(), k)
}

pub fn find_induced_cycle_within(
    g: &UGraph,
    within: VertexSet,
    k: usize,
) -> Option<InducedCycle> {
    if k < 3 || k > within.len() {
        return None;
    }
    let mut seq = Vec::with_capacity(k);
    for start in within.iter() {
        seq.push(start);
        if extend_cycle(g, within, k, &mut seq, VertexSet::singleton(start)) {
            return Some(InducedCycle(seq));
        }
        seq.pop();
    }
    None
}

fn extend_cycle(
    g: &UGraph,
    within: VertexSet,
    k: usize,
    seq: &mut Vec<VertexId>,
    placed: VertexSet,
) -> bool {
    let first = seq[0];
    let last = *seq.last().expect("non-empty");
    if seq.len() == k {
        return g.has_edge(last, first);
    }
    // Vertices between the first and the last may not touch the newcomer;
    // the first may only touch it when it closes the cycle.
    let mut blocked = VertexSet::EMPTY;
    if seq.len() > 2 {
        for &v in &seq[1..seq.len() - 1] {
            blocked = blocked.union(g.neighbors(v));
        }
    }
    let closing = seq.len() + 1 == k;
    if !closing && seq.len() > 1 {
        blocked = blocked.union(g.neighbors(first));
    }
    let mut candidates = g
        .neighbors(last)
        .intersection(within)
        .difference(placed)
        .difference(blocked);
    if closing {
        candidates = candidates.intersection(g.neighbors(first));
    }
    // The cycle is reported from its smallest vertex.
    for next in candidates.iter().filter(|&v| v > first) {
        seq.push(next);
        if extend_cycle(g, within, k, seq, placed.union(VertexSet::singleton(next))) {
            return true;
        }
        seq.pop();
    }
    false
}

/// P4-free test.
pub fn is_cograph(g: &UGraph) -> bool {
    find_induced_path(g, 4).is_none()
}
