//! Symmetric-edge conditions, orientations, topological orders, odd-even
//! digraphs and bitournaments.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::axioms::find_n2_violation;
use crate::biclique::Biclique;
use crate::digraph::{Color, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarConditions {
    /// No vertex lies on two symmetric pairs.
    pub star: bool,
    /// No two vertices are equivalent.
    pub starstar: bool,
    pub symmetric_pairs: Vec<(VertexId, VertexId)>,
}

pub fn star_conditions(g: &Digraph) -> StarConditions {
    let symmetric_pairs = g.symmetric_pairs();
    let mut seen = VertexSet::EMPTY;
    let mut star = true;
    for &(u, v) in &symmetric_pairs {
        for w in [u, v] {
            if seen.contains(w) {
                star = false;
            }
            seen.insert(w);
        }
    }
    StarConditions {
        star,
        starstar: g.equivalent_vertex_pairs().is_empty(),
        symmetric_pairs,
    }
}

/// Keeps `u -> v` for every symmetric pair with `u < v`.
pub fn orient(g: &Digraph) -> Digraph {
    orient_with(g, 0)
}

/// Orientation selected by a bitmask over `g.symmetric_pairs()`: bit `i`
/// set keeps the larger-to-smaller direction of pair `i`.
pub fn orient_with(g: &Digraph, choice: u64) -> Digraph {
    let pairs = g.symmetric_pairs();
    let dropped: Vec<(VertexId, VertexId)> = pairs
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if choice >> i & 1 == 1 { (u, v) } else { (v, u) })
        .collect();
    let edges: Vec<_> = g.edges().filter(|e| !dropped.contains(e)).collect();
    g.with_edges(&edges).expect("subset of a valid edge set")
}

/// Every orientation of `g`, one per choice bitmask.
pub fn all_orientations(g: &Digraph) -> impl Iterator<Item = Digraph> + '_ {
    let k = g.symmetric_pairs().len();
    assert!(k < 64, "too many symmetric pairs to enumerate");
    (0..1u64 << k).map(move |choice| orient_with(g, choice))
}

/// Kahn's algorithm, smallest available id first. `None` if a directed cycle
/// exists.
pub fn topological_order(g: &Digraph) -> Result<Option<Vec<VertexId>>> {
    if let Some(&(u, v)) = g.symmetric_pairs().first() {
        return Err(Error::NotOriented(u, v));
    }
    let n = g.n();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&v| !placed.contains(v) && g.inn(v).is_subset(placed));
        match next {
            Some(v) => {
                placed.insert(v);
                order.push(v);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(order))
}

/// `(A, O)`: even non-negative vertex labels and odd positive edge labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddEvenSpec {
    pub evens: BTreeSet<u64>,
    pub odds: BTreeSet<u64>,
}

impl OddEvenSpec {
    pub fn new(evens: impl IntoIterator<Item = u64>, odds: impl IntoIterator<Item = u64>) -> Result<Self> {
        let spec = OddEvenSpec {
            evens: evens.into_iter().collect(),
            odds: odds.into_iter().collect(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(a) = self.evens.iter().find(|a| *a % 2 != 0) {
            return Err(Error::InvalidSpec(format!("{a} in A is not even")));
        }
        if let Some(o) = self.odds.iter().find(|o| *o % 2 != 1) {
            return Err(Error::InvalidSpec(format!("{o} in O is not a positive odd integer")));
        }
        Ok(())
    }
}

/// Vertices are the members of `A` in increasing order, named by value;
/// `a -> b` iff `(a + b) / 2` and `(b - a) / 2` are both in `O`. Values
/// `≡ 0 (mod 4)` get color 0, values `≡ 2 (mod 4)` color 1.
pub fn odd_even_digraph(spec: &OddEvenSpec) -> Result<Digraph> {
    spec.validate()?;
    let values: Vec<u64> = spec.evens.iter().copied().collect();
    let colors: Vec<Color> = values.iter().map(|a| Color::from_bit(a % 4 == 2)).collect();
    let mut edges = Vec::new();
    for (i, &a) in values.iter().enumerate() {
        for (j, &b) in values.iter().enumerate() {
            if b > a && spec.odds.contains(&((a + b) / 2)) && spec.odds.contains(&((b - a) / 2)) {
                edges.push((i, j));
            }
        }
    }
    let names = values.iter().map(u64::to_string).collect();
    Digraph::with_names(names, &colors, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BitournamentReport {
    pub is_bitournament: bool,
    pub is_bitransitive: bool,
}

pub fn bitournament_report(g: &Digraph) -> BitournamentReport {
    let zeros = g.color_class(Color::Zero);
    let ones = g.color_class(Color::One);
    let is_bitournament = g.is_oriented()
        && zeros.iter().all(|u| ones.is_subset(g.adjacent(u)));
    BitournamentReport {
        is_bitournament,
        is_bitransitive: find_n2_violation(g).is_none(),
    }
}

/// Bounded search for `(A, O)` with `max A <= bound` whose odd-even digraph is
/// isomorphic to `g`. `Ok(None)` means inconclusive within the bound.
///
/// Vertices of one color take values in one residue class mod 4 and the
/// other color the other class; every edge must increase the value. `O` is
/// then the set of half-sums and half-differences along the edges, and each
/// candidate is confirmed by rebuilding its digraph.
pub fn find_odd_even_representation(g: &Digraph, bound: u64) -> Result<Option<OddEvenSpec>> {
    let report = bitournament_report(g);
    if !report.is_bitournament {
        return Err(Error::NotBitournament);
    }
    if !report.is_bitransitive {
        return Err(Error::NotBitransitive);
    }
    let Some(order) = topological_order(g)? else {
        return Ok(None);
    };
    for zero_residue in [0u64, 2] {
        let mut values = vec![None; g.n()];
        if assign(g, &order, 0, zero_residue, bound, &mut values) {
            let values: Vec<u64> = values.into_iter().map(|v| v.expect("assigned")).collect();
            let spec = spec_from_values(g, &values);
            if realises(g, &spec, &values)? {
                return Ok(Some(spec));
            }
        }
    }
    Ok(None)
}

fn assign(
    g: &Digraph,
    order: &[VertexId],
    k: usize,
    zero_residue: u64,
    bound: u64,
    values: &mut [Option<u64>],
) -> bool {
    let Some(&v) = order.get(k) else {
        return true;
    };
    let residue = match g.color(v) {
        Color::Zero => zero_residue,
        Color::One => 2 - zero_residue,
    };
    // Predecessors in topological order are already placed.
    let floor = g.inn(v).iter().filter_map(|u| values[u]).max();
    let mut candidate = residue;
    if let Some(f) = floor {
        while candidate <= f {
            candidate += 4;
        }
    }
    while candidate <= bound {
        if !values.contains(&Some(candidate)) {
            values[v] = Some(candidate);
            if assign(g, order, k + 1, zero_residue, bound, values) {
                return true;
            }
            values[v] = None;
        }
        candidate += 4;
    }
    false
}

fn spec_from_values(g: &Digraph, values: &[u64]) -> OddEvenSpec {
    let mut odds = BTreeSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (values[u], values[v]);
        odds.insert((a + b) / 2);
        odds.insert((b - a) / 2);
    }
    OddEvenSpec {
        evens: values.iter().copied().collect(),
        odds,
    }
}

/// Checks that `values` is an isomorphism from `g` onto the odd-even digraph.
fn realises(g: &Digraph, spec: &OddEvenSpec, values: &[u64]) -> Result<bool> {
    let h = odd_even_digraph(spec)?;
    if h.n() != g.n() || h.edge_count() != g.edge_count() {
        return Ok(false);
    }
    let sorted: Vec<u64> = spec.evens.iter().copied().collect();
    let pos = |v: VertexId| sorted.binary_search(&values[v]).expect("value in A");
    Ok(g.edges().all(|(u, v)| h.has_edge(pos(u), pos(v))))
}

/// The sub-digraph on the biclique's vertices carrying the edges of the
/// canonical orientation. Differs from the induced sub-digraph exactly when
/// a symmetric pair lies inside the biclique.
pub fn oriented_biclique_subdigraph(g: &Digraph, b: &Biclique) -> Result<Digraph> {
    let ug = g.underlying();
    if !b.is_biclique_in(&ug) {
        return Err(Error::NotBiclique(format!(
            "{:?} x {:?}",
            b.left, b.right
        )));
    }
    let (sub, _) = orient(g).induced(b.vertices());
    Ok(sub)
}
