//! Exhaustive generation of small bipartite digraphs and their
//! classification up to isomorphism.
//!
//! Generators are indexable spaces (`len` and `get`) so that sweeps can be
//! split across workers by index range and still report results in a fixed
//! order.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::axioms::{is_qbmg, recognize};
use crate::canon::{canonical_form, canonical_form_undirected, CanonicalForm};
use crate::decompose::is_type_a;
use crate::digraph::{Color, Digraph, UGraph, VertexId};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::par::{self, Exec};
use crate::vset::VertexSet;

/// Direction of a template edge `{u, v}` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeState {
    Forward,
    Backward,
    Both,
}

impl EdgeState {
    pub const ALL: [EdgeState; 3] = [EdgeState::Forward, EdgeState::Backward, EdgeState::Both];
}

/// All digraphs whose underlying graph is a fixed template, one per
/// assignment of an [`EdgeState`] to each template edge.
#[derive(Debug, Clone)]
pub struct OrientationSpace {
    template: UGraph,
    edges: Vec<(VertexId, VertexId)>,
}

impl OrientationSpace {
    pub fn new(template: &UGraph) -> Self {
        OrientationSpace {
            template: template.clone(),
            edges: template.edges().collect(),
        }
    }

    pub fn len(&self) -> usize {
        3usize.pow(self.edges.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edge states for index `i`; the first template edge varies slowest.
    pub fn states(&self, mut i: usize) -> Vec<EdgeState> {
        let mut states = vec![EdgeState::Forward; self.edges.len()];
        for s in states.iter_mut().rev() {
            *s = EdgeState::ALL[i % 3];
            i /= 3;
        }
        states
    }

    pub fn get(&self, i: usize) -> Digraph {
        let g = &self.template;
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for (&(u, v), state) in self.edges.iter().zip(self.states(i)) {
            match state {
                EdgeState::Forward => edges.push((u, v)),
                EdgeState::Backward => edges.push((v, u)),
                EdgeState::Both => edges.extend([(u, v), (v, u)]),
            }
        }
        Digraph::with_names(g.names(), &g.colors(), &edges).expect("template edges are bipartite")
    }

    pub fn iter(&self) -> impl Iterator<Item = Digraph> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

/// Every digraph with underlying graph `g`, `3^|E|` in all.
pub fn orientations_of(g: &UGraph) -> impl Iterator<Item = Digraph> {
    let space = OrientationSpace::new(g);
    (0..space.len()).map(move |i| space.get(i))
}

/// Largest vertex count for the unconstrained digraph enumeration.
pub const MAX_ALL_DIGRAPHS: usize = 6;
/// Largest vertex count for the undirected bipartite graph enumeration.
pub const MAX_ALL_UGRAPHS: usize = 7;

/// Colorings (bit `v` set means color 1) with the opposite-color pairs of
/// each, and the cumulative index at which each coloring starts.
#[derive(Debug, Clone)]
struct ColoringTable {
    n: usize,
    pairs: Vec<Vec<(VertexId, VertexId)>>,
    offsets: Vec<usize>,
    len: usize,
}

impl ColoringTable {
    fn new(n: usize, states_per_pair: usize) -> Self {
        let mut pairs = Vec::with_capacity(1 << n);
        let mut offsets = Vec::with_capacity(1 << n);
        let mut len = 0usize;
        for mask in 0u64..1 << n {
            let p: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| (mask >> u & 1) != (mask >> v & 1))
                .collect();
            offsets.push(len);
            len += states_per_pair.pow(p.len() as u32);
            pairs.push(p);
        }
        ColoringTable {
            n,
            pairs,
            offsets,
            len,
        }
    }

    /// Coloring mask and index within that coloring.
    fn locate(&self, i: usize) -> (u64, usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        let mask = self.offsets.partition_point(|&o| o <= i) - 1;
        (mask as u64, i - self.offsets[mask])
    }
}

/// All 2-colorings of `n` labelled vertices times all states
/// (none, `u -> v`, `v -> u`, both) of each opposite-color pair.
#[derive(Debug, Clone)]
pub struct BipartiteDigraphSpace {
    table: ColoringTable,
}

impl BipartiteDigraphSpace {
    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn len(&self) -> usize {
        self.table.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> Digraph {
        let (mask, mut r) = self.table.locate(i);
        let mut out = vec![VertexSet::EMPTY; self.table.n];
        for &(u, v) in &self.table.pairs[mask as usize] {
            let state = r & 3;
            r >>= 2;
            if state & 1 != 0 {
                out[u].insert(v);
            }
            if state & 2 != 0 {
                out[v].insert(u);
            }
        }
        Digraph::from_out_sets(VertexSet(mask), out)
    }

    pub fn iter(&self) -> impl Iterator<Item = Digraph> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

/// Labelled bipartite digraphs on `n <= 6` vertices, not deduplicated.
pub fn all_bipartite_digraphs(n: usize) -> Result<BipartiteDigraphSpace> {
    if n > MAX_ALL_DIGRAPHS {
        return Err(Error::TooLarge {
            n,
            max: MAX_ALL_DIGRAPHS,
        });
    }
    Ok(BipartiteDigraphSpace {
        table: ColoringTable::new(n, 4),
    })
}

/// All 2-colorings of `n` labelled vertices times all subsets of the
/// opposite-color pairs.
#[derive(Debug, Clone)]
pub struct BipartiteGraphSpace {
    table: ColoringTable,
}

impl BipartiteGraphSpace {
    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn len(&self) -> usize {
        self.table.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> UGraph {
        let (mask, r) = self.table.locate(i);
        let mut adj = vec![VertexSet::EMPTY; self.table.n];
        for (j, &(u, v)) in self.table.pairs[mask as usize].iter().enumerate() {
            if r >> j & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        UGraph::from_adj(VertexSet(mask), adj)
    }
}

/// Labelled bipartite graphs on `n <= 7` vertices, not deduplicated.
pub fn all_bipartite_ugraphs(n: usize) -> Result<BipartiteGraphSpace> {
    if n > MAX_ALL_UGRAPHS {
        return Err(Error::TooLarge {
            n,
            max: MAX_ALL_UGRAPHS,
        });
    }
    Ok(BipartiteGraphSpace {
        table: ColoringTable::new(n, 2),
    })
}

/// One isomorphism class of 2-qBMGs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRep {
    pub form: CanonicalForm,
    /// The member with the least labelled adjacency code.
    pub witness: Digraph,
    pub members: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    /// Sorted by canonical form.
    pub classes: Vec<ClassRep>,
    pub total_filtered: usize,
}

impl ClassificationResult {
    pub fn forms(&self) -> Vec<CanonicalForm> {
        self.classes.iter().map(|c| c.form.clone()).collect()
    }
}

/// Colors then out-neighborhoods; orders labelled members of a class.
fn labelled_key(g: &Digraph) -> (u64, Vec<u64>) {
    (
        g.color_class(Color::One).0,
        (0..g.n()).map(|v| g.out(v).0).collect(),
    )
}

type Buckets = BTreeMap<CanonicalForm, ((u64, Vec<u64>), Digraph, usize)>;

fn merge(mut a: Buckets, b: Buckets) -> Buckets {
    for (form, (key, g, count)) in b {
        match a.get_mut(&form) {
            Some(entry) => {
                if key < entry.0 {
                    entry.0 = key;
                    entry.1 = g;
                }
                entry.2 += count;
            }
            None => {
                a.insert(form, (key, g, count));
            }
        }
    }
    a
}

/// Filters `graphs` to 2-qBMGs (with underlying graph isomorphic to
/// `template`, if given) and buckets them by canonical form.
pub fn classify_qbmgs<I>(graphs: I, template: Option<&UGraph>) -> Result<ClassificationResult>
where
    I: IntoIterator<Item = Digraph>,
{
    let graphs: Vec<Digraph> = graphs.into_iter().collect();
    classify_indexed(Exec::default(), graphs.len(), |i| graphs[i].clone(), template)
}

/// As [`classify_qbmgs`] over an indexable space.
pub fn classify_indexed<F>(
    exec: Exec,
    len: usize,
    get: F,
    template: Option<&UGraph>,
) -> Result<ClassificationResult>
where
    F: Fn(usize) -> Digraph + Sync + Send,
{
    let template_form = template.map(canonical_form_undirected).transpose()?;
    let buckets = par::fold(
        exec,
        len,
        || Ok(Buckets::new()),
        |acc: Result<Buckets>, i| {
            let mut acc = acc?;
            let g = get(i);
            if !is_qbmg(&g) {
                return Ok(acc);
            }
            if let Some(tf) = &template_form {
                if canonical_form_undirected(&g.underlying())? != *tf {
                    return Ok(acc);
                }
            }
            let form = canonical_form(&g)?;
            let key = labelled_key(&g);
            let single = Buckets::from([(form, (key, g, 1))]);
            acc = merge(acc, single);
            Ok(acc)
        },
        |a, b| Ok(merge(a?, b?)),
    )?;
    let total_filtered = buckets.values().map(|(_, _, c)| c).sum();
    let classes = buckets
        .into_iter()
        .map(|(form, (_, witness, members))| ClassRep {
            form,
            witness,
            members,
        })
        .collect();
    Ok(ClassificationResult {
        classes,
        total_filtered,
    })
}

/// Classification of the orientations of a template graph.
pub fn classify_template(exec: Exec, template: &UGraph) -> Result<ClassificationResult> {
    let space = OrientationSpace::new(template);
    classify_indexed(exec, space.len(), |i| space.get(i), Some(template))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaperReport {
    pub checks: Vec<CheckLine>,
}

impl PaperReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn sorted_forms(graphs: &[Digraph]) -> Result<Vec<CanonicalForm>> {
    let mut forms = graphs.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
    forms.sort();
    Ok(forms)
}

/// Index of the P5 fixture isomorphic to `g`, if any.
pub fn p5_class_of(g: &Digraph) -> Result<Option<&'static str>> {
    let form = canonical_form(g)?;
    for (name, h) in fixtures::p5_classes() {
        if canonical_form(&h)? == form {
            return Ok(Some(name));
        }
    }
    Ok(None)
}

/// Runs the counting theorems, the P6/C6 vacuity checks, the three-vertex
/// sweep and the two worked examples.
pub fn verify_paper_counts(exec: Exec) -> Result<PaperReport> {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(CheckLine {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    let p3 = fixtures::path(3);
    let p3_space = OrientationSpace::new(&p3);
    let p3_result = classify_template(exec, &p3)?;
    push(
        "P3 orientations are all 2-qBMGs",
        p3_result.total_filtered == p3_space.len(),
        format!(
            "{} of {} orientations, {} classes",
            p3_result.total_filtered,
            p3_space.len(),
            p3_result.classes.len()
        ),
    );

    let mut count_check = |name: &str, template: UGraph, expected: &[Digraph]| -> Result<()> {
        let result = classify_template(exec, &template)?;
        let matches = result.forms() == sorted_forms(expected)?;
        push(
            name,
            result.classes.len() == expected.len() && matches,
            format!(
                "{} classes (expected {}), fixtures {}",
                result.classes.len(),
                expected.len(),
                if matches { "match" } else { "differ" }
            ),
        );
        Ok(())
    };
    count_check("P4 classification", fixtures::path(4), &(1..=4).map(fixtures::p4).collect::<Vec<_>>())?;
    let p5: Vec<Digraph> = fixtures::p5_classes().into_iter().map(|(_, g)| g).collect();
    count_check("P5 classification", fixtures::path(5), &p5)?;
    count_check("C4 classification", fixtures::cycle(4), &(1..=10).map(fixtures::c4).collect::<Vec<_>>())?;
    count_check("P6 vacuity", fixtures::path(6), &[])?;
    count_check("C6 vacuity", fixtures::cycle(6), &[])?;

    let three = all_bipartite_digraphs(3)?;
    let passing = par::fold(
        exec,
        three.len(),
        || 0usize,
        |acc, i| acc + is_qbmg(&three.get(i)) as usize,
        |a, b| a + b,
    );
    push(
        "3-vertex bipartite digraphs are 2-qBMGs",
        passing == three.len(),
        format!("{passing} of {}", three.len()),
    );

    let ex7 = fixtures::ex7();
    let (sub, _) = ex7.induced(VertexSet::full(5));
    let class = p5_class_of(&sub)?;
    push(
        "EX7 on v1..v5 is a P5 class",
        recognize(&ex7).is_qbmg && class.is_some(),
        format!(
            "class {} (expected P5a1)",
            class.unwrap_or("none")
        ),
    );

    let ex10 = fixtures::ex10();
    push(
        "EX10 is of type (A)",
        is_type_a(&ex10),
        format!("{} vertices, {} edges", ex10.n(), ex10.edge_count()),
    );

    Ok(PaperReport { checks })
}
