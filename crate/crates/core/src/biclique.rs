//! Bicliques, dominating sets and dominating bicliques.

use std::cmp::Reverse;

use serde::Serialize;

use crate::digraph::{Color, UGraph};
use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// A complete bipartite subgraph: `left` lies in color class 0, `right` in
/// color class 1, both sides nonempty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Biclique {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Biclique {
    pub fn vertices(&self) -> VertexSet {
        self.left.union(self.right)
    }

    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_biclique_in(&self, g: &UGraph) -> bool {
        !self.left.is_empty()
            && !self.right.is_empty()
            && self.left.is_subset(g.color_class(Color::Zero))
            && self.right.is_subset(g.color_class(Color::One))
            && self.left.iter().all(|t| self.right.is_subset(g.neighbors(t)))
    }

    /// Splits a vertex set by color; `None` unless it is a biclique of `g`.
    pub fn from_vertices(g: &UGraph, s: VertexSet) -> Option<Biclique> {
        let b = Biclique {
            left: s.intersection(g.color_class(Color::Zero)),
            right: s.intersection(g.color_class(Color::One)),
        };
        b.is_biclique_in(g).then_some(b)
    }

    fn preference_key(&self) -> (Reverse<usize>, Vec<usize>, Vec<usize>) {
        (Reverse(self.size()), self.vertices().to_vec(), self.left.to_vec())
    }
}

/// Vertices of `within` adjacent to every member of `s`.
fn common_neighbors(g: &UGraph, s: VertexSet, within: VertexSet) -> VertexSet {
    s.iter()
        .fold(within, |acc, v| acc.intersection(g.neighbors(v)))
}

pub fn is_dominating_set(g: &UGraph, d: VertexSet) -> bool {
    is_dominating_within(g, g.vertices(), d)
}

/// Domination inside the subgraph induced on `within`.
pub fn is_dominating_within(g: &UGraph, within: VertexSet, d: VertexSet) -> bool {
    within
        .difference(d)
        .iter()
        .all(|v| g.neighbors(v).intersects(d))
}

pub fn maximal_bicliques(g: &UGraph) -> Vec<Biclique> {
    maximal_bicliques_within(g, g.vertices())
}

/// Inclusion-maximal bicliques of the subgraph induced on `within`, in
/// preference order: larger first, then lexicographic on the vertex list.
pub fn maximal_bicliques_within(g: &UGraph, within: VertexSet) -> Vec<Biclique> {
    let zeros = g.color_class(Color::Zero).intersection(within);
    let ones = g.color_class(Color::One).intersection(within);
    let (small, large) = if zeros.len() <= ones.len() {
        (zeros, ones)
    } else {
        (ones, zeros)
    };
    let mut found: Vec<(VertexSet, VertexSet)> = Vec::new();
    for x in small.subsets().skip(1) {
        let y = common_neighbors(g, x, large);
        if y.is_empty() {
            continue;
        }
        let closed = common_neighbors(g, y, small);
        found.push((closed, y));
    }
    found.sort_unstable();
    found.dedup();
    let mut out: Vec<Biclique> = found
        .into_iter()
        .map(|(a, b)| {
            if a.is_subset(zeros) {
                Biclique { left: a, right: b }
            } else {
                Biclique { left: b, right: a }
            }
        })
        .collect();
    out.sort_by_cached_key(Biclique::preference_key);
    out
}

/// Every biclique (not only maximal ones), in preference order.
pub fn all_bicliques(g: &UGraph) -> Vec<Biclique> {
    let zeros = g.color_class(Color::Zero);
    let ones = g.color_class(Color::One);
    let mut out = Vec::new();
    for left in zeros.subsets().skip(1) {
        let common = common_neighbors(g, left, ones);
        for right in common.subsets().skip(1) {
            out.push(Biclique { left, right });
        }
    }
    out.sort_by_cached_key(Biclique::preference_key);
    out
}

/// Number of bicliques, counted without listing them.
pub fn count_bicliques(g: &UGraph) -> u64 {
    let zeros = g.color_class(Color::Zero);
    let ones = g.color_class(Color::One);
    zeros
        .subsets()
        .skip(1)
        .map(|left| (1u64 << common_neighbors(g, left, ones).len()) - 1)
        .sum()
}

/// A biclique whose vertex set dominates the connected graph `g`.
///
/// Any superset of a dominating set dominates, so if some biclique dominates
/// then so does every maximal biclique containing it; scanning the maximal
/// bicliques in preference order is therefore exhaustive.
pub fn find_dominating_biclique(g: &UGraph) -> Result<Option<Biclique>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(find_dominating_biclique_within(g, g.vertices()))
}

/// As [`find_dominating_biclique`] on the subgraph induced by `within`,
/// without the connectivity check.
pub fn find_dominating_biclique_within(g: &UGraph, within: VertexSet) -> Option<Biclique> {
    maximal_bicliques_within(g, within)
        .into_iter()
        .find(|b| is_dominating_within(g, within, b.vertices()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(one_based: &[usize]) -> VertexSet {
        one_based.iter().map(|v| v - 1).collect()
    }

    #[test]
    fn domination_in_ex10() {
        let g = fixtures::ex10().underlying();
        assert!(is_dominating_set(&g, set(&[1, 2, 3, 4, 5, 6, 7, 8])));
        assert!(is_dominating_set(&g, g.vertices()));
        assert!(!is_dominating_set(&g, set(&[9, 10])));
    }

    #[test]
    fn maximal_bicliques_small() {
        let k22 = fixtures::complete_bipartite(2, 2);
        let bs = maximal_bicliques(&k22);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].vertices(), k22.vertices());

        // a - b - c with b of color 1.
        let p3 = fixtures::path(3);
        assert_eq!(
            maximal_bicliques(&p3),
            vec![Biclique {
                left: VertexSet::from_slice(&[0, 2]),
                right: VertexSet::singleton(1)
            }]
        );

        let ex10 = fixtures::ex10().underlying();
        let expected = Biclique {
            left: set(&[1, 2, 3, 4]),
            right: set(&[5, 6, 7, 8]),
        };
        let bs = maximal_bicliques(&ex10);
        assert!(bs.contains(&expected));
        assert!(bs.iter().all(|b| b.is_biclique_in(&ex10)));
    }

    #[test]
    fn dominating_biclique_search() {
        let ex10 = fixtures::ex10().underlying();
        let b = find_dominating_biclique(&ex10).unwrap().unwrap();
        assert_eq!(b.left, set(&[1, 2, 3, 4]));
        assert_eq!(b.right, set(&[5, 6, 7, 8]));

        let edge = fixtures::path(2);
        let b = find_dominating_biclique(&edge).unwrap().unwrap();
        assert_eq!(b.vertices(), edge.vertices());

        // C6 has six edges and six two-edge stars; none of them dominates.
        let c6 = fixtures::cycle(6);
        assert_eq!(all_bicliques(&c6).len(), 12);
        assert_eq!(maximal_bicliques(&c6).len(), 6);
        assert_eq!(find_dominating_biclique(&c6), Ok(None));

        let two_edges = UGraph::new(
            &[Color::Zero, Color::One, Color::Zero, Color::One],
            &[(0, 1), (2, 3)],
        )
        .unwrap();
        assert_eq!(find_dominating_biclique(&two_edges), Err(Error::Disconnected));
    }

    #[test]
    fn counting_matches_listing() {
        for g in [
            fixtures::ex10().underlying(),
            fixtures::cycle(6),
            fixtures::complete_bipartite(3, 2),
            fixtures::path(5),
        ] {
            assert_eq!(count_bicliques(&g), all_bicliques(&g).len() as u64);
        }
    }
}
