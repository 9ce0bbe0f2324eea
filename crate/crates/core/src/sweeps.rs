//! Exhaustive property sweeps over all small bipartite digraphs and graphs.
//!
//! Each sweep tallies, per property, how many graphs were checked, how many
//! failed, and the first failure by `(n, index)` in the generating space, so
//! a failure can be regenerated with `all_bipartite_digraphs(n)?.get(index)`.

use serde::Serialize;

use crate::axioms::{first_violation_within, recognize};
use crate::biclique::{all_bicliques, find_dominating_biclique, find_dominating_biclique_within, maximal_bicliques};
use crate::decompose::decompose_type_a;
use crate::digraph::{Color, Digraph, UGraph};
use crate::enumerate::{all_bipartite_digraphs, all_bipartite_ugraphs};
use crate::error::Result;
use crate::orient::{
    bitournament_report, oriented_biclique_subdigraph, orient_with, star_conditions,
    topological_order,
};
use crate::par::{self, Exec};
use crate::paths::{find_induced_cycle, find_induced_path, is_cograph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
    /// `(n, index)` of the first failing graph.
    pub first_failure: Option<(usize, usize)>,
}

impl Tally {
    fn record(&mut self, ok: bool, at: (usize, usize)) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none_or(|f| at < f) {
                self.first_failure = Some(at);
            }
        }
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            checked: self.checked + other.checked,
            failed: self.failed + other.failed,
            first_failure: match (self.first_failure, other.first_failure) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Tallies over every labelled bipartite digraph on `1..=max_n` vertices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TheoremSweep {
    pub graphs: u64,
    pub qbmgs: u64,
    /// Every 2-qBMG: no induced P6 in the underlying graph.
    pub p6_free: Tally,
    /// Every 2-qBMG: no induced C6 in the underlying graph.
    pub c6_free: Tally,
    /// 2-qBMGs with at most `hereditary_max_n` vertices: every induced
    /// sub-digraph is a 2-qBMG.
    pub hereditary: Tally,
    /// Sink-free 2-qBMGs: the underlying graph is P4-free.
    pub cograph: Tally,
    /// Connected 2-qBMGs: the type-(A) decomposition succeeds and is valid.
    pub decomposition: Tally,
    /// 2-qBMGs with (*) or (**): every orientation is acyclic.
    pub orientation_acyclic: Tally,
    /// 2-qBMGs with (*) or (**): every biclique free of symmetric pairs
    /// yields a 2-qBMG oriented biclique sub-digraph.
    pub biclique_subdigraph: Tally,
    /// Connected 2-qBMGs on two or more vertices with (*): the oriented
    /// dominating biclique is a bi-transitive bitournament.
    pub dominating_bitournament: Tally,
}

impl TheoremSweep {
    fn merge(self, o: TheoremSweep) -> TheoremSweep {
        TheoremSweep {
            graphs: self.graphs + o.graphs,
            qbmgs: self.qbmgs + o.qbmgs,
            p6_free: self.p6_free.merge(o.p6_free),
            c6_free: self.c6_free.merge(o.c6_free),
            hereditary: self.hereditary.merge(o.hereditary),
            cograph: self.cograph.merge(o.cograph),
            decomposition: self.decomposition.merge(o.decomposition),
            orientation_acyclic: self.orientation_acyclic.merge(o.orientation_acyclic),
            biclique_subdigraph: self.biclique_subdigraph.merge(o.biclique_subdigraph),
            dominating_bitournament: self.dominating_bitournament.merge(o.dominating_bitournament),
        }
    }

    fn check(&mut self, g: &Digraph, at: (usize, usize), hereditary_max_n: usize) {
        self.graphs += 1;
        if first_violation_within(g, g.vertices()).is_some() {
            return;
        }
        self.qbmgs += 1;
        let ug = g.underlying();
        self.p6_free.record(find_induced_path(&ug, 6).is_none(), at);
        self.c6_free.record(find_induced_cycle(&ug, 6).is_none(), at);
        if g.n() <= hereditary_max_n {
            let ok = g
                .vertices()
                .subsets()
                .all(|s| first_violation_within(g, s).is_none());
            self.hereditary.record(ok, at);
        }
        if g.sinks().is_empty() {
            self.cograph.record(is_cograph(&ug), at);
        }
        let connected = g.is_connected();
        if connected {
            let ok = decompose_type_a(g).is_ok_and(|d| d.is_valid_for(g));
            self.decomposition.record(ok, at);
        }
        let stars = star_conditions(g);
        if stars.star || stars.starstar {
            let k = stars.symmetric_pairs.len();
            let ok = (0..1u64 << k).all(|choice| {
                matches!(topological_order(&orient_with(g, choice)), Ok(Some(_)))
            });
            self.orientation_acyclic.record(ok, at);

            let ok = all_bicliques(&ug)
                .iter()
                .filter(|b| {
                    let inside = b.vertices();
                    !stars
                        .symmetric_pairs
                        .iter()
                        .any(|&(u, v)| inside.contains(u) && inside.contains(v))
                })
                .all(|b| {
                    oriented_biclique_subdigraph(g, b).is_ok_and(|sub| recognize(&sub).is_qbmg)
                });
            self.biclique_subdigraph.record(ok, at);
        }
        if stars.star && connected && g.n() >= 2 {
            let ok = match find_dominating_biclique(&ug) {
                Ok(Some(delta)) => oriented_biclique_subdigraph(g, &delta).is_ok_and(|sub| {
                    let r = bitournament_report(&sub);
                    r.is_bitournament && r.is_bitransitive
                }),
                _ => false,
            };
            self.dominating_bitournament.record(ok, at);
        }
    }
}

/// Runs every digraph-level property over all labelled bipartite digraphs on
/// `1..=max_n <= 6` vertices. Hereditarity is checked up to
/// `hereditary_max_n` vertices.
pub fn theorem_sweep(exec: Exec, max_n: usize, hereditary_max_n: usize) -> Result<TheoremSweep> {
    let mut total = TheoremSweep::default();
    for n in 1..=max_n {
        let space = all_bipartite_digraphs(n)?;
        let part = par::fold(
            exec,
            space.len(),
            TheoremSweep::default,
            |mut acc, i| {
                acc.check(&space.get(i), (n, i), hereditary_max_n);
                acc
            },
            TheoremSweep::merge,
        );
        total = total.merge(part);
    }
    Ok(total)
}

/// Every connected induced subgraph on two or more vertices has a
/// dominating biclique. Single vertices are exempt: they have no biclique
/// with two nonempty sides.
pub fn hereditarily_biclique_dominated(g: &UGraph) -> bool {
    g.vertices()
        .subsets()
        .filter(|s| s.len() >= 2 && g.is_connected_within(*s))
        .all(|s| find_dominating_biclique_within(g, s).is_some())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LiuZhouSweep {
    pub connected_graphs: u64,
    pub dominated: u64,
    pub p6_c6_free: u64,
    /// Both sides of the equivalence agree.
    pub equivalence: Tally,
}

/// The dominating-biclique characterisation over all connected labelled
/// bipartite graphs on `1..=max_n <= 7` vertices.
pub fn liu_zhou_sweep(exec: Exec, max_n: usize) -> Result<LiuZhouSweep> {
    let mut total = LiuZhouSweep::default();
    for n in 1..=max_n {
        let space = all_bipartite_ugraphs(n)?;
        let part = par::fold(
            exec,
            space.len(),
            LiuZhouSweep::default,
            |mut acc, i| {
                let g = space.get(i);
                if !g.is_connected() {
                    return acc;
                }
                acc.connected_graphs += 1;
                let free = find_induced_path(&g, 6).is_none() && find_induced_cycle(&g, 6).is_none();
                let dominated = hereditarily_biclique_dominated(&g);
                acc.p6_c6_free += free as u64;
                acc.dominated += dominated as u64;
                acc.equivalence.record(free == dominated, (n, i));
                acc
            },
            |a, b| LiuZhouSweep {
                connected_graphs: a.connected_graphs + b.connected_graphs,
                dominated: a.dominated + b.dominated,
                p6_c6_free: a.p6_c6_free + b.p6_c6_free,
                equivalence: a.equivalence.merge(b.equivalence),
            },
        );
        total = LiuZhouSweep {
            connected_graphs: total.connected_graphs + part.connected_graphs,
            dominated: total.dominated + part.dominated,
            p6_c6_free: total.p6_c6_free + part.p6_c6_free,
            equivalence: total.equivalence.merge(part.equivalence),
        };
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PrisnerSweep {
    pub c6_free_graphs: u64,
    /// Maximal-biclique count within `|U|^2 |W|^2`.
    pub bound: Tally,
    pub max_maximal_bicliques: u64,
    /// Largest count of all (not only maximal) bicliques; reported, not
    /// bounded.
    pub max_all_bicliques: u64,
}

/// The maximal-biclique bound over all C6-free labelled bipartite graphs on
/// `1..=max_n <= 7` vertices.
pub fn prisner_sweep(exec: Exec, max_n: usize) -> Result<PrisnerSweep> {
    let merge = |a: PrisnerSweep, b: PrisnerSweep| PrisnerSweep {
        c6_free_graphs: a.c6_free_graphs + b.c6_free_graphs,
        bound: a.bound.merge(b.bound),
        max_maximal_bicliques: a.max_maximal_bicliques.max(b.max_maximal_bicliques),
        max_all_bicliques: a.max_all_bicliques.max(b.max_all_bicliques),
    };
    let mut total = PrisnerSweep::default();
    for n in 1..=max_n {
        let space = all_bipartite_ugraphs(n)?;
        let part = par::fold(
            exec,
            space.len(),
            PrisnerSweep::default,
            |mut acc, i| {
                let g = space.get(i);
                if find_induced_cycle(&g, 6).is_some() {
                    return acc;
                }
                acc.c6_free_graphs += 1;
                let u = g.color_class(Color::Zero).len() as u64;
                let w = g.color_class(Color::One).len() as u64;
                let count = maximal_bicliques(&g).len() as u64;
                acc.bound.record(count <= u * u * w * w, (n, i));
                acc.max_maximal_bicliques = acc.max_maximal_bicliques.max(count);
                acc.max_all_bicliques = acc
                    .max_all_bicliques
                    .max(crate::biclique::count_bicliques(&g));
                acc
            },
            merge,
        );
        total = merge(total, part);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn small_theorem_sweep_is_clean_and_mode_independent() {
        let seq = theorem_sweep(Exec::Sequential, 4, 4).unwrap();
        let par = theorem_sweep(Exec::Parallel, 4, 4).unwrap();
        assert_eq!(seq, par);
        assert!(seq.qbmgs > 0 && seq.qbmgs <= seq.graphs);
        for t in [seq.p6_free, seq.c6_free, seq.hereditary, seq.cograph, seq.decomposition] {
            assert!(t.passed(), "{t:?}");
        }
    }

    #[test]
    fn hereditary_domination_examples() {
        assert!(hereditarily_biclique_dominated(&fixtures::path(5)));
        assert!(!hereditarily_biclique_dominated(&fixtures::path(6)));
        assert!(!hereditarily_biclique_dominated(&fixtures::cycle(6)));
        assert!(hereditarily_biclique_dominated(&fixtures::complete_bipartite(3, 3)));
    }

    #[test]
    fn tally_keeps_smallest_failure() {
        let mut a = Tally::default();
        a.record(false, (3, 7));
        a.record(true, (1, 0));
        let mut b = Tally::default();
        b.record(false, (2, 9));
        let m = a.merge(b);
        assert_eq!((m.checked, m.failed, m.first_failure), (3, 2, Some((2, 9))));
    }
}
