//! K ⊕ S graphs and the vertex decomposition of connected 2-qBMGs into
//! connected type-(A) pieces.

use serde::Serialize;

use crate::axioms::first_violation_within;
use crate::biclique::{find_dominating_biclique_within, maximal_bicliques_within, Biclique};
use crate::digraph::{Digraph, UGraph};
use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// A split of the vertex set into a biclique and a stable set.
///
/// `degenerate` is set when the graph has an isolated vertex; such graphs
/// count as K ⊕ S even without a split, in which case `biclique` is `None`
/// and `stable` is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KosPartition {
    pub biclique: Option<Biclique>,
    pub stable: VertexSet,
    pub degenerate: bool,
}

pub fn kos_partition(g: &UGraph) -> Option<KosPartition> {
    kos_partition_within(g, g.vertices())
}

/// K ⊕ S split of the subgraph induced on `within`. Growing a biclique only
/// shrinks the remainder, so maximal bicliques suffice.
pub fn kos_partition_within(g: &UGraph, within: VertexSet) -> Option<KosPartition> {
    let degenerate = within
        .iter()
        .any(|v| !g.neighbors(v).intersects(within));
    let split = maximal_bicliques_within(g, within)
        .into_iter()
        .find(|b| g.is_stable(within.difference(b.vertices())));
    match split {
        Some(b) => Some(KosPartition {
            biclique: Some(b),
            stable: within.difference(b.vertices()),
            degenerate,
        }),
        None if degenerate => Some(KosPartition {
            biclique: None,
            stable: VertexSet::EMPTY,
            degenerate,
        }),
        None => None,
    }
}

/// Connected 2-qBMG whose underlying graph is K ⊕ S.
pub fn is_type_a(g: &Digraph) -> bool {
    is_type_a_within(g, &g.underlying(), g.vertices())
}

fn is_type_a_within(g: &Digraph, ug: &UGraph, within: VertexSet) -> bool {
    !within.is_empty()
        && ug.is_connected_within(within)
        && first_violation_within(g, within).is_none()
        && kos_partition_within(ug, within).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub parts: Vec<VertexSet>,
}

impl Decomposition {
    /// Parts are disjoint, cover `g`, and each induces a connected type-(A)
    /// sub-digraph.
    pub fn is_valid_for(&self, g: &Digraph) -> bool {
        let mut covered = VertexSet::EMPTY;
        for &p in &self.parts {
            if p.intersects(covered) {
                return false;
            }
            covered = covered.union(p);
            let (sub, _) = g.induced(p);
            if !is_type_a(&sub) {
                return false;
            }
        }
        covered == g.vertices()
    }
}

/// Splits a connected 2-qBMG into connected type-(A) parts.
///
/// A type-(A) input is returned whole. Otherwise a dominating biclique with
/// sides `T`, `Z` is chosen, `S` collects the vertices outside `T ∪ Z` whose
/// neighbors all lie in `T ∪ Z`, `T ∪ Z ∪ S` becomes a part, and each
/// component of the remaining vertices is decomposed in turn.
pub fn decompose_type_a(g: &Digraph) -> Result<Decomposition> {
    if first_violation_within(g, g.vertices()).is_some() {
        return Err(Error::NotQbmg);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let ug = g.underlying();
    let mut parts = Vec::new();
    if g.n() > 0 {
        split(g, &ug, g.vertices(), &mut parts)?;
    }
    Ok(Decomposition { parts })
}

fn split(g: &Digraph, ug: &UGraph, within: VertexSet, parts: &mut Vec<VertexSet>) -> Result<()> {
    if is_type_a_within(g, ug, within) {
        parts.push(within);
        return Ok(());
    }
    let delta = find_dominating_biclique_within(ug, within).ok_or_else(|| {
        Error::DecompositionInvariant(format!("no dominating biclique on {within:?}"))
    })?;
    let core = delta.vertices();
    let stable: VertexSet = within
        .difference(core)
        .iter()
        .filter(|&v| ug.neighbors(v).intersection(within).is_subset(core))
        .collect();
    if !ug.is_stable(stable) {
        return Err(Error::DecompositionInvariant(format!(
            "S = {stable:?} is not stable"
        )));
    }
    let sigma = core.union(stable);
    if !is_type_a_within(g, ug, sigma) {
        return Err(Error::DecompositionInvariant(format!(
            "part {sigma:?} is not of type (A)"
        )));
    }
    parts.push(sigma);

    let rest = within.difference(sigma);
    if let Some(v) = rest.iter().find(|&v| !ug.neighbors(v).intersects(rest)) {
        return Err(Error::DecompositionInvariant(format!(
            "vertex {v} is isolated in the remainder {rest:?}"
        )));
    }
    for component in ug.components_within(rest) {
        split(g, ug, component, parts)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Color;
    use crate::fixtures;

    fn set(one_based: &[usize]) -> VertexSet {
        one_based.iter().map(|v| v - 1).collect()
    }

    #[test]
    fn ex10_partition() {
        let g = fixtures::ex10();
        let kos = kos_partition(&g.underlying()).unwrap();
        let b = kos.biclique.unwrap();
        assert_eq!(b.left, set(&[1, 2, 3, 4]));
        assert_eq!(b.right, set(&[5, 6, 7, 8]));
        assert_eq!(kos.stable, set(&[9, 10]));
        assert!(!kos.degenerate);
        assert!(is_type_a(&g));
        let d = decompose_type_a(&g).unwrap();
        assert_eq!(d.parts, vec![g.vertices()]);
    }

    #[test]
    fn small_partitions() {
        let edge = fixtures::path(2);
        let kos = kos_partition(&edge).unwrap();
        assert_eq!(kos.biclique.unwrap().vertices(), edge.vertices());
        assert!(kos.stable.is_empty());
        assert_eq!(kos_partition(&fixtures::cycle(6)), None);

        let lonely = UGraph::new(&[Color::Zero, Color::One, Color::Zero], &[(0, 1)]).unwrap();
        let kos = kos_partition(&lonely).unwrap();
        assert!(kos.degenerate);
        assert_eq!(kos.stable, VertexSet::singleton(2));
    }

    #[test]
    fn path_is_k_plus_s_via_star() {
        // Underlying P5: the star ({v3}, {v2, v4}) leaves {v1, v5} stable.
        let g = fixtures::p5ab();
        let kos = kos_partition(&g.underlying()).unwrap();
        let b = kos.biclique.unwrap();
        assert_eq!(b.left, set(&[3]));
        assert_eq!(b.right, set(&[2, 4]));
        assert_eq!(kos.stable, set(&[1, 5]));
        assert!(is_type_a(&g));
        assert_eq!(decompose_type_a(&fixtures::p5a1()).unwrap().parts.len(), 1);
    }

    #[test]
    fn disconnected_and_non_qbmg_inputs() {
        let g = Digraph::new(
            &[Color::Zero, Color::One, Color::Zero, Color::One],
            &[(0, 1), (2, 3)],
        )
        .unwrap();
        assert!(!is_type_a(&g));
        assert_eq!(decompose_type_a(&g), Err(Error::Disconnected));
        let chain = fixtures::parity_digraph(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(decompose_type_a(&chain), Err(Error::NotQbmg));
    }

    #[test]
    fn single_vertex_is_its_own_part() {
        let g = Digraph::new(&[Color::Zero], &[]).unwrap();
        assert!(is_type_a(&g));
        assert_eq!(decompose_type_a(&g).unwrap().parts, vec![VertexSet::singleton(0)]);
    }
}
