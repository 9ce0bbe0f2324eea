//! Canonical forms for small digraphs.
//!
//! Isomorphism here is a pure edge-preserving permutation: vertex colors are
//! ignored. The form is the lexicographically least adjacency code over all
//! labelings that respect a colour-refinement partition, with interchangeable
//! twins (identical in- and out-neighborhoods) tried only once.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, UGraph};
use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.code
    }

    /// Vertex count encoded in the form.
    pub fn n(&self) -> usize {
        self.code.first().copied().unwrap_or(0) as usize
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.code {
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_form(g: &Digraph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

pub fn canonical_form_undirected(g: &UGraph) -> Result<CanonicalForm> {
    canonical_form(&symmetric_digraph(g))
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

pub fn is_isomorphic_undirected(a: &UGraph, b: &UGraph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form_undirected(a)? == canonical_form_undirected(b)?)
}

/// Every undirected edge as a symmetric pair.
fn symmetric_digraph(g: &UGraph) -> Digraph {
    let ones = g.color_class(crate::digraph::Color::One);
    Digraph::from_out_sets(ones, (0..g.n()).map(|v| g.neighbors(v)).collect())
}

/// Returns the canonical form and the labeling that realises it:
/// `order[i]` is the vertex placed at position `i`.
pub fn canonical_labeling(g: &Digraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let cells = refine(g);
    let mut cell_of_position = Vec::with_capacity(n);
    let mut sorted_cells = cells.clone();
    sorted_cells.sort_unstable();
    cell_of_position.extend(sorted_cells);

    let twin_rep: Vec<usize> = (0..n)
        .map(|v| {
            (0..v)
                .find(|&u| g.out(u) == g.out(v) && g.inn(u) == g.inn(v))
                .unwrap_or(v)
        })
        .collect();

    let mut search = Search {
        g,
        cells: &cells,
        cell_of_position: &cell_of_position,
        twin_rep: &twin_rep,
        order: Vec::with_capacity(n),
        code: vec![n as u8],
        best: None,
    };
    search.run(VertexSet::EMPTY, false);
    let (code, order) = search.best.expect("at least one labeling exists");
    Ok((CanonicalForm { code }, order))
}

/// Colour refinement on (out, in, symmetric) degrees. Returns a cell index
/// per vertex; cell indices are an isomorphism invariant.
fn refine(g: &Digraph) -> Vec<u32> {
    let n = g.n();
    let rel = |u: usize, v: usize| -> u8 {
        (g.has_edge(u, v) as u8) | ((g.has_edge(v, u) as u8) << 1)
    };
    let mut cells: Vec<u32> = {
        let sig: Vec<(usize, usize, usize)> = (0..n)
            .map(|v| {
                let sym = g.out(v).intersection(g.inn(v)).len();
                (g.out(v).len(), g.inn(v).len(), sym)
            })
            .collect();
        rank(&sig)
    };
    let mut classes = distinct(&cells);
    loop {
        let sig: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u8)> = g
                    .adjacent(v)
                    .iter()
                    .map(|w| (cells[w], rel(v, w)))
                    .collect();
                nb.sort_unstable();
                (cells[v], nb)
            })
            .collect();
        let next = rank(&sig);
        let next_classes = distinct(&next);
        cells = next;
        if next_classes == classes {
            return cells;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = sig.to_vec();
    sorted.sort();
    sorted.dedup();
    sig.iter()
        .map(|s| sorted.binary_search(s).expect("present") as u32)
        .collect()
}

fn distinct(cells: &[u32]) -> usize {
    let mut c = cells.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Digraph,
    cells: &'a [u32],
    cell_of_position: &'a [u32],
    twin_rep: &'a [usize],
    order: Vec<usize>,
    code: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, used: VertexSet, mut below: bool) {
        let k = self.order.len();
        let n = self.g.n();
        if k == n {
            if below || self.best.is_none() {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        let cell = self.cell_of_position[k];
        let mut tried_twins = VertexSet::EMPTY;
        for v in 0..n {
            if used.contains(v) || self.cells[v] != cell {
                continue;
            }
            let rep = self.twin_rep[v];
            if tried_twins.contains(rep) {
                continue;
            }
            tried_twins.insert(rep);

            let mark = self.code.len();
            for &w in &self.order {
                let bits = (self.g.has_edge(v, w) as u8) | ((self.g.has_edge(w, v) as u8) << 1);
                self.code.push(bits);
            }
            let mut child_below = below;
            let mut prune = false;
            if !below {
                if let Some((best, _)) = &self.best {
                    for (c, b) in self.code[mark..].iter().zip(&best[mark..]) {
                        match c.cmp(b) {
                            std::cmp::Ordering::Less => {
                                child_below = true;
                                break;
                            }
                            std::cmp::Ordering::Greater => {
                                prune = true;
                                break;
                            }
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
            }
            if !prune {
                self.order.push(v);
                self.run(used.union(VertexSet::singleton(v)), child_below);
                self.order.pop();
                // A strictly better leaf replaced `best`; later siblings compare
                // against it from scratch.
                if child_below {
                    below = false;
                }
            }
            self.code.truncate(mark);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Color;
    use crate::fixtures;

    #[test]
    fn p5b_plus_v4v5_is_p5b1() {
        let g = fixtures::p5b();
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((3, 4));
        let h = g.with_edges(&edges).unwrap();
        assert_eq!(
            canonical_form(&h).unwrap(),
            canonical_form(&fixtures::p5b1()).unwrap()
        );
    }

    #[test]
    fn distinct_p5_classes() {
        let forms: Vec<_> = fixtures::p5_classes()
            .iter()
            .map(|(_, g)| canonical_form(g).unwrap())
            .collect();
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                assert_ne!(forms[i], forms[j], "classes {i} and {j} collide");
            }
        }
    }

    #[test]
    fn colors_are_ignored() {
        let g = fixtures::p4(1);
        let swapped: Vec<Color> = g.colors().into_iter().map(Color::other).collect();
        let h = Digraph::new(&swapped, &g.edges().collect::<Vec<_>>()).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn too_large() {
        let g = Digraph::new(&[Color::Zero; 11], &[]).unwrap();
        assert_eq!(
            canonical_form(&g),
            Err(Error::TooLarge { n: 11, max: 10 })
        );
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = fixtures::ex10();
        let (form, order) = canonical_labeling(&g).unwrap();
        let mut perm = vec![0; g.n()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let relabeled = g.relabel(&perm);
        let (form2, order2) = canonical_labeling(&relabeled).unwrap();
        assert_eq!(form, form2);
        assert_eq!(order2.len(), g.n());
    }

    #[test]
    fn edgeless_ten_vertices_is_fast() {
        let g = Digraph::new(&[Color::Zero; 10], &[]).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(f.n(), 10);
    }

    #[test]
    fn undirected_forms() {
        assert!(is_isomorphic_undirected(
            &fixtures::path(4),
            &fixtures::path(4).relabel(&[2, 0, 3, 1])
        )
        .unwrap());
        assert!(!is_isomorphic_undirected(&fixtures::path(4), &fixtures::cycle(4)).unwrap());
    }
}
