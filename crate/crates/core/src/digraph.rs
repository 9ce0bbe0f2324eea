//! Bipartite two-colored digraphs and their underlying undirected graphs.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored as one [`VertexSet`]
//! per vertex, so graphs are limited to [`MAX_VERTICES`] vertices.

use std::borrow::Cow;
use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Zero = 0,
    One = 1,
}

impl Color {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Color::One
        } else {
            Color::Zero
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn other(self) -> Self {
        match self {
            Color::Zero => Color::One,
            Color::One => Color::Zero,
        }
    }
}

impl TryFrom<u8> for Color {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(Color::Zero),
            1 => Ok(Color::One),
            _ => Err(Error::InvalidSpec(format!("color must be 0 or 1, got {v}"))),
        }
    }
}

/// Vertex names. `None` means the default names `v1, v2, ..`.
#[derive(Debug, Clone, Default)]
struct Names(Option<Arc<Vec<String>>>);

impl Names {
    fn get(&self, v: VertexId) -> Cow<'_, str> {
        match &self.0 {
            Some(names) => Cow::Borrowed(names[v].as_str()),
            None => Cow::Owned(format!("v{}", v + 1)),
        }
    }

    fn explicit(n: usize, names: Vec<String>) -> Result<Self> {
        if names.len() != n {
            return Err(Error::NameCountMismatch {
                expected: n,
                got: names.len(),
            });
        }
        let mut seen = HashSet::with_capacity(n);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Names(Some(Arc::new(names))))
    }

    fn subset(&self, original: &[VertexId]) -> Self {
        Names(Some(Arc::new(
            original.iter().map(|&v| self.get(v).into_owned()).collect(),
        )))
    }

    fn all(&self, n: usize) -> Vec<String> {
        (0..n).map(|v| self.get(v).into_owned()).collect()
    }
}

fn color_mask(colors: &[Color]) -> VertexSet {
    colors
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == Color::One)
        .map(|(v, _)| v)
        .collect()
}

fn check_size(n: usize, colors: &[Color]) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    if colors.len() != n {
        return Err(Error::ColorCountMismatch {
            expected: n,
            got: colors.len(),
        });
    }
    Ok(())
}

fn check_pair(n: usize, ones: VertexSet, u: VertexId, v: VertexId) -> Result<()> {
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::LoopEdge(u));
    }
    if ones.contains(u) == ones.contains(v) {
        return Err(Error::MonochromaticEdge(u, v));
    }
    Ok(())
}

/// Out-/in-neighborhood of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhood {
    pub out: VertexSet,
    pub inn: VertexSet,
    pub is_sink: bool,
    pub is_source: bool,
}

/// A bipartite two-colored digraph without loops or parallel edges.
/// Symmetric pairs `(u, v)`, `(v, u)` are allowed.
#[derive(Debug, Clone)]
pub struct Digraph {
    names: Names,
    ones: VertexSet,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n()
            && self.ones == other.ones
            && self.out == other.out
            && (0..self.n()).all(|v| self.name(v) == other.name(v))
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a digraph with default names `v1..vn`.
    pub fn new(colors: &[Color], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::build(Names::default(), colors, edges)
    }

    pub fn with_names(
        names: Vec<String>,
        colors: &[Color],
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let names = Names::explicit(colors.len(), names)?;
        Self::build(names, colors, edges)
    }

    fn build(names: Names, colors: &[Color], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let n = colors.len();
        check_size(n, colors)?;
        let ones = color_mask(colors);
        let mut out = vec![VertexSet::EMPTY; n];
        let mut inn = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            check_pair(n, ones, u, v)?;
            if out[u].contains(v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            out[u].insert(v);
            inn[v].insert(u);
        }
        Ok(Digraph {
            names,
            ones,
            out,
            inn,
        })
    }

    /// Builds from raw out-neighborhoods without validation. Callers
    /// guarantee bipartiteness and the absence of loops.
    pub(crate) fn from_out_sets(ones: VertexSet, out: Vec<VertexSet>) -> Self {
        let n = out.len();
        let mut inn = vec![VertexSet::EMPTY; n];
        for (u, targets) in out.iter().enumerate() {
            for v in targets.iter() {
                inn[v].insert(u);
            }
        }
        let g = Digraph {
            names: Names::default(),
            ones,
            out,
            inn,
        };
        debug_assert!(g.validate().is_ok());
        g
    }

    /// Re-checks the structural invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for u in 0..n {
            for v in self.out[u].iter() {
                check_pair(n, self.ones, u, v)?;
                if !self.inn[v].contains(u) {
                    return Err(Error::InvalidSpec(format!(
                        "in-neighborhood of {v} lacks {u}"
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn color(&self, v: VertexId) -> Color {
        Color::from_bit(self.ones.contains(v))
    }

    pub fn colors(&self) -> Vec<Color> {
        (0..self.n()).map(|v| self.color(v)).collect()
    }

    pub fn color_class(&self, c: Color) -> VertexSet {
        match c {
            Color::One => self.ones,
            Color::Zero => self.vertices().difference(self.ones),
        }
    }

    pub fn name(&self, v: VertexId) -> Cow<'_, str> {
        self.names.get(v)
    }

    pub fn names(&self) -> Vec<String> {
        self.names.all(self.n())
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        (0..self.n()).find(|&v| self.name(v) == name)
    }

    #[inline]
    pub fn out(&self, v: VertexId) -> VertexSet {
        self.out[v]
    }

    #[inline]
    pub fn inn(&self, v: VertexId) -> VertexSet {
        self.inn[v]
    }

    /// Vertices joined to `v` in either direction.
    #[inline]
    pub fn adjacent(&self, v: VertexId) -> VertexSet {
        self.out[v].union(self.inn[v])
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.out[u].contains(v)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    pub fn neighbors(&self, v: VertexId) -> Neighborhood {
        let (out, inn) = (self.out[v], self.inn[v]);
        Neighborhood {
            out,
            inn,
            is_sink: out.is_empty(),
            is_source: inn.is_empty(),
        }
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.out[v].is_empty()).collect()
    }

    /// Unordered pairs `{u, v}`, `u < v`, with both directions present.
    pub fn symmetric_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .filter(|&(u, v)| u < v && self.has_edge(v, u))
            .collect()
    }

    pub fn is_oriented(&self) -> bool {
        self.edges().all(|(u, v)| !self.has_edge(v, u))
    }

    pub fn underlying(&self) -> UGraph {
        UGraph {
            names: self.names.clone(),
            ones: self.ones,
            adj: (0..self.n()).map(|v| self.adjacent(v)).collect(),
        }
    }

    /// The sub-digraph induced on `s`, re-indexed densely in increasing id
    /// order, together with the original id of every new vertex.
    pub fn induced(&self, s: VertexSet) -> (Digraph, Vec<VertexId>) {
        let original: Vec<VertexId> = s.iter().filter(|&v| v < self.n()).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in original.iter().enumerate() {
            index[old] = new;
        }
        let reindex = |set: VertexSet| -> VertexSet {
            set.intersection(s).iter().map(|v| index[v]).collect()
        };
        let g = Digraph {
            names: self.names.subset(&original),
            ones: original
                .iter()
                .enumerate()
                .filter(|(_, &old)| self.ones.contains(old))
                .map(|(new, _)| new)
                .collect(),
            out: original.iter().map(|&v| reindex(self.out[v])).collect(),
            inn: original.iter().map(|&v| reindex(self.inn[v])).collect(),
        };
        (g, original)
    }

    /// Connected components of the underlying graph, ordered by smallest member.
    pub fn weak_components(&self) -> Vec<VertexSet> {
        components(&(0..self.n()).map(|v| self.adjacent(v)).collect::<Vec<_>>())
    }

    pub fn is_connected(&self) -> bool {
        self.weak_components().len() <= 1
    }

    /// Pairs `{u, v}`, `u < v`, with identical in- and out-neighborhoods.
    pub fn equivalent_vertex_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.n();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.out[u] == self.out[v] && self.inn[u] == self.inn[v] {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`. Names and colors move
    /// with their vertices.
    pub fn relabel(&self, perm: &[VertexId]) -> Digraph {
        let n = self.n();
        assert_eq!(perm.len(), n, "permutation length");
        let mut names = vec![String::new(); n];
        let mut out = vec![VertexSet::EMPTY; n];
        let mut inn = vec![VertexSet::EMPTY; n];
        let mut ones = VertexSet::EMPTY;
        for v in 0..n {
            names[perm[v]] = self.name(v).into_owned();
            if self.ones.contains(v) {
                ones.insert(perm[v]);
            }
            out[perm[v]] = self.out[v].iter().map(|w| perm[w]).collect();
            inn[perm[v]] = self.inn[v].iter().map(|w| perm[w]).collect();
        }
        Digraph {
            names: Names(Some(Arc::new(names))),
            ones,
            out,
            inn,
        }
    }

    /// Same vertices and coloring, different edge set.
    pub fn with_edges(&self, edges: &[(VertexId, VertexId)]) -> Result<Digraph> {
        Self::build(self.names.clone(), &self.colors(), edges)
    }

    /// Vertices of `other` follow those of `self`. Names must stay distinct.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let shift = self.n();
        let mut names = self.names();
        names.extend(other.names());
        let mut colors = self.colors();
        colors.extend(other.colors());
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Digraph::with_names(names, &colors, &edges)
    }
}

/// Validated construction, named after the operation it implements.
pub fn build_digraph(colors: &[Color], edges: &[(VertexId, VertexId)]) -> Result<Digraph> {
    Digraph::new(colors, edges)
}

/// An undirected bipartite graph.
#[derive(Debug, Clone)]
pub struct UGraph {
    names: Names,
    ones: VertexSet,
    adj: Vec<VertexSet>,
}

impl PartialEq for UGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n()
            && self.ones == other.ones
            && self.adj == other.adj
            && (0..self.n()).all(|v| self.name(v) == other.name(v))
    }
}

impl Eq for UGraph {}

impl UGraph {
    pub fn new(colors: &[Color], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::build(Names::default(), colors, edges)
    }

    pub fn with_names(
        names: Vec<String>,
        colors: &[Color],
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let names = Names::explicit(colors.len(), names)?;
        Self::build(names, colors, edges)
    }

    fn build(names: Names, colors: &[Color], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let n = colors.len();
        check_size(n, colors)?;
        let ones = color_mask(colors);
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            check_pair(n, ones, u, v)?;
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(UGraph { names, ones, adj })
    }

    pub(crate) fn from_adj(ones: VertexSet, adj: Vec<VertexSet>) -> Self {
        UGraph {
            names: Names::default(),
            ones,
            adj,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn color(&self, v: VertexId) -> Color {
        Color::from_bit(self.ones.contains(v))
    }

    pub fn colors(&self) -> Vec<Color> {
        (0..self.n()).map(|v| self.color(v)).collect()
    }

    pub fn color_class(&self, c: Color) -> VertexSet {
        match c {
            Color::One => self.ones,
            Color::Zero => self.vertices().difference(self.ones),
        }
    }

    pub fn name(&self, v: VertexId) -> Cow<'_, str> {
        self.names.get(v)
    }

    pub fn names(&self) -> Vec<String> {
        self.names.all(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn isolated(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn induced(&self, s: VertexSet) -> (UGraph, Vec<VertexId>) {
        let original: Vec<VertexId> = s.iter().filter(|&v| v < self.n()).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in original.iter().enumerate() {
            index[old] = new;
        }
        let g = UGraph {
            names: self.names.subset(&original),
            ones: original
                .iter()
                .enumerate()
                .filter(|(_, &old)| self.ones.contains(old))
                .map(|(new, _)| new)
                .collect(),
            adj: original
                .iter()
                .map(|&v| self.adj[v].intersection(s).iter().map(|w| index[w]).collect())
                .collect(),
        };
        (g, original)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        components(&self.adj)
    }

    /// Components of the subgraph induced on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        components_masked(&self.adj, within)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        self.components_within(within).len() <= 1
    }

    pub fn relabel(&self, perm: &[VertexId]) -> UGraph {
        let n = self.n();
        assert_eq!(perm.len(), n, "permutation length");
        let mut names = vec![String::new(); n];
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut ones = VertexSet::EMPTY;
        for v in 0..n {
            names[perm[v]] = self.name(v).into_owned();
            if self.ones.contains(v) {
                ones.insert(perm[v]);
            }
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        UGraph {
            names: Names(Some(Arc::new(names))),
            ones,
            adj,
        }
    }
}

fn components(adj: &[VertexSet]) -> Vec<VertexSet> {
    components_masked(adj, VertexSet::full(adj.len()))
}

fn components_masked(adj: &[VertexSet], within: VertexSet) -> Vec<VertexSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(adj[v]);
            }
            frontier = next.intersection(within).difference(comp);
            comp = comp.union(frontier);
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn parity(n: usize) -> Vec<Color> {
        (0..n).map(|v| Color::from_bit(v % 2 == 1)).collect()
    }

    #[test]
    fn build_p5a() {
        let g = build_digraph(&parity(5), &[(0, 1), (2, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, fixtures::p5a());
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Digraph::new(&[Color::Zero, Color::Zero], &[(0, 1)]),
            Err(Error::MonochromaticEdge(0, 1))
        );
        assert_eq!(
            Digraph::new(&parity(3), &[(0, 0)]),
            Err(Error::LoopEdge(0))
        );
        assert_eq!(
            Digraph::new(&parity(2), &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Digraph::new(&parity(2), &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        ));
        assert!(matches!(
            Digraph::with_names(vec!["a".into(), "a".into()], &parity(2), &[]),
            Err(Error::DuplicateName(_))
        ));
    }

    #[test]
    fn neighbors_of_p5a() {
        let g = fixtures::p5a();
        let nb = g.neighbors(2);
        assert_eq!(nb.out, VertexSet::from_slice(&[1, 3]));
        assert!(nb.inn.is_empty());
        assert!(nb.is_source && !nb.is_sink);
        let nb = g.neighbors(4);
        assert!(nb.out.is_empty());
        assert_eq!(nb.inn, VertexSet::singleton(3));
        assert!(nb.is_sink);

        let lone = Digraph::new(&parity(3), &[(0, 1)]).unwrap();
        let nb = lone.neighbors(2);
        assert!(nb.is_sink && nb.is_source);
    }

    #[test]
    fn underlying_collapses_symmetric_pairs() {
        let u = fixtures::p5ab().underlying();
        let edges: Vec<_> = u.edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);

        let c = fixtures::c4(1).underlying();
        assert_eq!(c.edge_count(), 4);
        assert!(c.vertices().iter().all(|v| c.neighbors(v).len() == 2));

        let empty = Digraph::new(&parity(4), &[]).unwrap().underlying();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn induced_subdigraphs() {
        let ex7 = fixtures::ex7();
        let (sub, orig) = ex7.induced(VertexSet::full(5));
        assert_eq!(orig, vec![0, 1, 2, 3, 4]);
        let mut edges: Vec<_> = sub
            .edges()
            .map(|(u, v)| format!("{}{}", sub.name(u), sub.name(v)))
            .collect();
        edges.sort();
        assert_eq!(edges, vec!["v2v1", "v3v2", "v3v4", "v5v4"]);

        let (same, _) = ex7.induced(ex7.vertices());
        assert_eq!(same, ex7);

        let ex10 = fixtures::ex10();
        let (pair, orig) = ex10.induced(VertexSet::from_slice(&[8, 9]));
        assert_eq!(orig, vec![8, 9]);
        assert_eq!(pair.edge_count(), 0);
        assert_eq!(pair.name(0), "v9");
        assert_eq!(pair.name(1), "v10");
    }

    #[test]
    fn components() {
        assert_eq!(fixtures::ex10().weak_components().len(), 1);
        let empty = Digraph::new(&parity(3), &[]).unwrap();
        assert_eq!(
            empty.weak_components(),
            vec![
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );
        let p4 = fixtures::p4(1);
        let renamed = p4.relabel(&[0, 1, 2, 3]);
        let names: Vec<String> = (0..4).map(|v| format!("w{v}")).collect();
        let renamed = Digraph::with_names(names, &renamed.colors(), &renamed.edges().collect::<Vec<_>>()).unwrap();
        let union = fixtures::p5a().disjoint_union(&renamed).unwrap();
        let sizes: Vec<_> = union.weak_components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![5, 4]);
    }

    #[test]
    fn equivalent_pairs() {
        let empty = Digraph::new(&parity(3), &[]).unwrap();
        assert_eq!(empty.equivalent_vertex_pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(fixtures::p5a().equivalent_vertex_pairs().is_empty());
        // N+(v2) = {v1} = N+(v6), but N-(v2) = {v3} while N-(v6) = {v1, v3}.
        let ex7 = fixtures::ex7();
        assert!(!ex7.equivalent_vertex_pairs().contains(&(1, 5)));
        // v5 and v7 each point only at v4; v7 also has in-neighbor v4.
        assert!(ex7.equivalent_vertex_pairs().is_empty());
    }

    #[test]
    fn relabel_round_trip() {
        let g = fixtures::ex7();
        let perm = [3, 0, 6, 1, 5, 2, 4];
        let mut inverse = [0; 7];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        assert_eq!(g.relabel(&perm).relabel(&inverse), g);
        assert!(g.relabel(&perm).validate().is_ok());
    }
}
