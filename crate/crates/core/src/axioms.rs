//! The three 2-qBMG axioms, with witnesses.
//!
//! * N1: if `u`, `v` are independent there are no `t`, `w` with `ut`, `vw`, `tw` edges.
//! * N2: bi-transitivity, `uv`, `vw`, `wt` edges imply `ut`.
//! * N3: two vertices with a common out-neighbor have nested out-neighborhoods.
//!
//! Each finder returns the lexicographically first violating tuple. The
//! `_within` variants restrict the graph to a vertex subset without building
//! the induced sub-digraph.

use serde::Serialize;

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    N1,
    N2,
    N3,
}

/// A replayable axiom violation.
///
/// Vertex order: N1 as `(u, t, w, v)`, N2 as `(u, v, w, t)`, N3 as
/// `(u, v, shared_out)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomWitness {
    pub axiom: Axiom,
    pub vertices: Vec<VertexId>,
}

impl AxiomWitness {
    /// True if the witness still describes a violation in `g`.
    pub fn replay(&self, g: &Digraph) -> bool {
        let e = |a: usize, b: usize| g.has_edge(a, b);
        match (self.axiom, self.vertices.as_slice()) {
            (Axiom::N1, &[u, t, w, v]) => {
                u != v && !e(u, v) && !e(v, u) && e(u, t) && e(v, w) && e(t, w)
            }
            (Axiom::N2, &[u, v, w, t]) => e(u, v) && e(v, w) && e(w, t) && !e(u, t),
            (Axiom::N3, &[u, v, s]) => {
                let (ou, ov) = (g.out(u), g.out(v));
                u != v && e(u, s) && e(v, s) && !ou.is_subset(ov) && !ov.is_subset(ou)
            }
            _ => false,
        }
    }
}

pub fn find_n1_violation(g: &Digraph) -> Option<AxiomWitness> {
    find_n1_within(g, g.vertices())
}

pub fn find_n1_within(g: &Digraph, s: VertexSet) -> Option<AxiomWitness> {
    for u in s.iter() {
        let independent_of_u = s.difference(g.adjacent(u));
        for t in g.out(u).intersection(s).iter() {
            for w in g.out(t).intersection(s).iter() {
                let candidates = g.inn(w).intersection(independent_of_u);
                if let Some(v) = candidates.iter().find(|&v| v != u) {
                    return Some(AxiomWitness {
                        axiom: Axiom::N1,
                        vertices: vec![u, t, w, v],
                    });
                }
            }
        }
    }
    None
}

pub fn find_n2_violation(g: &Digraph) -> Option<AxiomWitness> {
    find_n2_within(g, g.vertices())
}

pub fn find_n2_within(g: &Digraph, s: VertexSet) -> Option<AxiomWitness> {
    for u in s.iter() {
        let out_u = g.out(u);
        for v in out_u.intersection(s).iter() {
            for w in g.out(v).intersection(s).iter() {
                let missing = g.out(w).intersection(s).difference(out_u);
                if let Some(t) = missing.first() {
                    return Some(AxiomWitness {
                        axiom: Axiom::N2,
                        vertices: vec![u, v, w, t],
                    });
                }
            }
        }
    }
    None
}

pub fn find_n3_violation(g: &Digraph) -> Option<AxiomWitness> {
    find_n3_within(g, g.vertices())
}

pub fn find_n3_within(g: &Digraph, s: VertexSet) -> Option<AxiomWitness> {
    let verts = s.to_vec();
    for (i, &u) in verts.iter().enumerate() {
        let ou = g.out(u).intersection(s);
        for &v in &verts[i + 1..] {
            let ov = g.out(v).intersection(s);
            let common = ou.intersection(ov);
            if let Some(shared) = common.first() {
                if !ou.is_subset(ov) && !ov.is_subset(ou) {
                    return Some(AxiomWitness {
                        axiom: Axiom::N3,
                        vertices: vec![u, v, shared],
                    });
                }
            }
        }
    }
    None
}

/// First violation in the order N1, N2, N3 on the sub-digraph induced by `s`.
pub fn first_violation_within(g: &Digraph, s: VertexSet) -> Option<AxiomWitness> {
    find_n1_within(g, s)
        .or_else(|| find_n2_within(g, s))
        .or_else(|| find_n3_within(g, s))
}

pub fn is_qbmg(g: &Digraph) -> bool {
    first_violation_within(g, g.vertices()).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionReport {
    pub is_qbmg: bool,
    pub is_bmg: bool,
    pub is_reciprocal: bool,
    pub witness: Option<AxiomWitness>,
    pub sinks: VertexSet,
    pub symmetric_edge_count: usize,
}

pub fn recognize(g: &Digraph) -> RecognitionReport {
    let witness = first_violation_within(g, g.vertices());
    let sinks = g.sinks();
    let symmetric_edge_count = g.symmetric_pairs().len();
    let is_qbmg = witness.is_none();
    let is_bmg = is_qbmg && sinks.is_empty();
    let is_reciprocal = is_bmg && 2 * symmetric_edge_count == g.edge_count();
    RecognitionReport {
        is_qbmg,
        is_bmg,
        is_reciprocal,
        witness,
        sinks,
        symmetric_edge_count,
    }
}

/// Quadruples `[x1, x2, x3, y]` of distinct vertices with `x1x2`, `x2x3`,
/// `yx3` edges and `x1`, `y` adjacent.
pub fn n1_configurations(g: &Digraph) -> Vec<[VertexId; 4]> {
    let mut found = Vec::new();
    for x1 in 0..g.n() {
        for x2 in g.out(x1).iter() {
            for x3 in g.out(x2).iter() {
                for y in g.inn(x3).intersection(g.adjacent(x1)).iter() {
                    if y != x1 && y != x2 && x3 != x1 {
                        found.push([x1, x2, x3, y]);
                    }
                }
            }
        }
    }
    found
}

/// Largest vertex count accepted by [`is_hereditary_on`].
pub const MAX_HEREDITARY_VERTICES: usize = 8;

/// Checks every induced sub-digraph. Returns the smallest violating vertex
/// subset (fewest vertices, then lowest mask), or `None`.
pub fn is_hereditary_on(g: &Digraph) -> Result<Option<VertexSet>> {
    if g.n() > MAX_HEREDITARY_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            max: MAX_HEREDITARY_VERTICES,
        });
    }
    if !is_qbmg(g) {
        return Err(Error::NotQbmg);
    }
    let mut subsets: Vec<VertexSet> = g.vertices().subsets().collect();
    subsets.sort_by_key(|s| (s.len(), s.0));
    Ok(subsets
        .into_iter()
        .find(|&s| first_violation_within(g, s).is_some()))
}
