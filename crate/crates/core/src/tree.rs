//! Leaf-colored phylogenetic trees, best matches, truncation maps and the
//! digraphs they explain.
//!
//! Node ids are preorder positions (root = 0), so `a` is an ancestor of `b`
//! (or `b` itself) exactly when `a <= b < a + subtree_size(a)`.

use std::collections::HashSet;
use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;

use crate::digraph::{Color, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::vset::VertexSet;

pub type NodeId = usize;
pub type LeafId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhyloTree {
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    depth: Vec<usize>,
    subtree: Vec<usize>,
    leaf_node: Vec<NodeId>,
    node_leaf: Vec<Option<LeafId>>,
    leaf_names: Vec<String>,
}

/// A tree under construction: arbitrary node numbering, leaves tagged with
/// their leaf id.
#[derive(Debug, Clone)]
pub(crate) struct RawTree {
    pub children: Vec<Vec<usize>>,
    pub leaf: Vec<Option<LeafId>>,
    pub root: usize,
}

impl PhyloTree {
    pub(crate) fn from_raw(raw: &RawTree, leaf_names: Vec<String>) -> Result<PhyloTree> {
        let total = raw.children.len();
        let mut parent = Vec::with_capacity(total);
        let mut children: Vec<Vec<NodeId>> = Vec::with_capacity(total);
        let mut depth = Vec::with_capacity(total);
        let mut node_leaf = Vec::with_capacity(total);
        let mut leaf_node = vec![usize::MAX; leaf_names.len()];

        // Iterative preorder: (raw node, new parent id, depth).
        let mut stack = vec![(raw.root, None::<NodeId>, 0usize)];
        while let Some((node, par, d)) = stack.pop() {
            let id = parent.len();
            parent.push(par);
            children.push(Vec::new());
            depth.push(d);
            node_leaf.push(raw.leaf[node]);
            if let Some(p) = par {
                children[p].push(id);
            }
            match raw.leaf[node] {
                Some(leaf) => {
                    if !raw.children[node].is_empty() {
                        return Err(Error::InvalidSpec(format!("leaf {leaf} has children")));
                    }
                    leaf_node[leaf] = id;
                }
                None if raw.children[node].len() < 2 => return Err(Error::NotPhylogenetic(id)),
                None => {}
            }
            for &c in raw.children[node].iter().rev() {
                stack.push((c, Some(id), d + 1));
            }
        }
        if leaf_node.contains(&usize::MAX) {
            return Err(Error::InvalidSpec("some leaf is not reachable from the root".into()));
        }
        let mut subtree = vec![1usize; parent.len()];
        for v in (1..parent.len()).rev() {
            let p = parent[v].expect("non-root has a parent");
            subtree[p] += subtree[v];
        }
        Ok(PhyloTree {
            parent,
            children,
            depth,
            subtree,
            leaf_node,
            node_leaf,
            leaf_names,
        })
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_node.len()
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.children[v]
    }

    pub fn depth(&self, v: NodeId) -> usize {
        self.depth[v]
    }

    pub fn leaf_node(&self, x: LeafId) -> NodeId {
        self.leaf_node[x]
    }

    pub fn node_leaf(&self, v: NodeId) -> Option<LeafId> {
        self.node_leaf[v]
    }

    pub fn leaf_name(&self, x: LeafId) -> &str {
        &self.leaf_names[x]
    }

    pub fn leaf_names(&self) -> &[String] {
        &self.leaf_names
    }

    /// `a` is `b` or lies above it.
    #[inline]
    pub fn is_ancestor_or_equal(&self, a: NodeId, b: NodeId) -> bool {
        a <= b && b < a + self.subtree[a]
    }

    /// Nodes from the root down to `v`, inclusive.
    pub fn root_path(&self, v: NodeId) -> Vec<NodeId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    pub fn lca_nodes(&self, mut a: NodeId, mut b: NodeId) -> NodeId {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("deeper node has a parent");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("deeper node has a parent");
        }
        while a != b {
            a = self.parent[a].expect("not at root");
            b = self.parent[b].expect("not at root");
        }
        a
    }

    /// Last common ancestor of two leaves.
    pub fn lca(&self, x: LeafId, y: LeafId) -> NodeId {
        self.lca_nodes(self.leaf_node[x], self.leaf_node[y])
    }

    pub fn to_newick(&self, sigma: &LeafColoring) -> String {
        let mut s = String::new();
        self.write_node(self.root(), sigma, &mut s);
        s.push(';');
        s
    }

    fn write_node(&self, v: NodeId, sigma: &LeafColoring, s: &mut String) {
        match self.node_leaf[v] {
            Some(x) => {
                let _ = write!(s, "{}={}", self.leaf_names[x], sigma.color(x).index());
            }
            None => {
                s.push('(');
                for (i, &c) in self.children[v].iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    self.write_node(c, sigma, s);
                }
                s.push(')');
            }
        }
    }
}

/// Surjective leaf coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafColoring(Vec<Color>);

impl LeafColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        let has = |c| colors.contains(&c);
        if !(has(Color::Zero) && has(Color::One)) {
            return Err(Error::NotSurjective);
        }
        Ok(LeafColoring(colors))
    }

    pub fn color(&self, x: LeafId) -> Color {
        self.0[x]
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Colors from the parity of the integer suffix of each name (`v3` -> 1).
pub fn parity_coloring<S: AsRef<str>>(names: &[S]) -> Result<Vec<Color>> {
    names
        .iter()
        .map(|name| {
            let name = name.as_ref();
            let digits = name.len() - name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
            if digits == 0 {
                return Err(Error::NoIntegerSuffix(name.to_string()));
            }
            let last = name.as_bytes()[name.len() - 1] - b'0';
            Ok(Color::from_bit(last % 2 == 1))
        })
        .collect()
}

/// `u(x, s)` for every leaf `x` and color `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncationMap(Vec<[NodeId; 2]>);

impl TruncationMap {
    /// No truncation: `u(x, σ(x)) = x`, otherwise the root.
    pub fn root(t: &PhyloTree, sigma: &LeafColoring) -> Self {
        TruncationMap(
            (0..t.leaf_count())
                .map(|x| {
                    let mut row = [t.root(); 2];
                    row[sigma.color(x).index()] = t.leaf_node(x);
                    row
                })
                .collect(),
        )
    }

    pub fn get(&self, x: LeafId, s: Color) -> NodeId {
        self.0[x][s.index()]
    }

    pub fn set(&mut self, x: LeafId, s: Color, node: NodeId) {
        self.0[x][s.index()] = node;
    }

    /// Truncates `x` at itself for color `s`, removing its out-edges to `s`.
    pub fn sink(&mut self, t: &PhyloTree, x: LeafId, s: Color) {
        self.0[x][s.index()] = t.leaf_node(x);
    }

    pub fn validate(&self, t: &PhyloTree, sigma: &LeafColoring) -> Result<()> {
        if self.0.len() != t.leaf_count() || sigma.len() != t.leaf_count() {
            return Err(Error::InvalidTruncation(format!(
                "{} rows for {} leaves",
                self.0.len(),
                t.leaf_count()
            )));
        }
        for x in 0..t.leaf_count() {
            let leaf = t.leaf_node(x);
            for s in [Color::Zero, Color::One] {
                let node = self.get(x, s);
                if node >= t.node_count() || !t.is_ancestor_or_equal(node, leaf) {
                    return Err(Error::InvalidTruncation(format!(
                        "u({}, {}) = {node} is not on the path from the root to the leaf",
                        t.leaf_name(x),
                        s.index()
                    )));
                }
            }
            if self.get(x, sigma.color(x)) != leaf {
                return Err(Error::InvalidTruncation(format!(
                    "u({0}, σ({0})) must be the leaf itself",
                    t.leaf_name(x)
                )));
            }
        }
        Ok(())
    }
}

/// Leaves of color `s` that are best matches of `x`.
fn best_matches(t: &PhyloTree, sigma: &LeafColoring, x: LeafId, s: Color) -> VertexSet {
    let candidates: Vec<LeafId> = (0..t.leaf_count()).filter(|&y| sigma.color(y) == s).collect();
    let lcas: Vec<NodeId> = candidates.iter().map(|&y| t.lca(x, y)).collect();
    candidates
        .iter()
        .zip(&lcas)
        .filter(|(_, &l)| lcas.iter().all(|&other| t.is_ancestor_or_equal(other, l)))
        .map(|(&y, _)| y)
        .collect()
}

/// The best match graph: `x -> y` iff `y` has the other color and
/// `lca(x, y)` lies at or below `lca(x, z)` for every `z` of `y`'s color.
pub fn best_match_graph(t: &PhyloTree, sigma: &LeafColoring) -> Digraph {
    let out: Vec<VertexSet> = (0..t.leaf_count())
        .map(|x| best_matches(t, sigma, x, sigma.color(x).other()))
        .collect();
    leaf_digraph(t, sigma, &out)
}

/// Quasi-best matches: best matches `y` of `x` with `lca(x, y)` at or below
/// `u(x, σ(y))`.
pub fn qbmg_from_tree(t: &PhyloTree, sigma: &LeafColoring, u: &TruncationMap) -> Result<Digraph> {
    u.validate(t, sigma)?;
    let out: Vec<VertexSet> = (0..t.leaf_count())
        .map(|x| {
            let s = sigma.color(x).other();
            let gate = u.get(x, s);
            best_matches(t, sigma, x, s)
                .iter()
                .filter(|&y| t.is_ancestor_or_equal(gate, t.lca(x, y)))
                .collect()
        })
        .collect();
    Ok(leaf_digraph(t, sigma, &out))
}

fn leaf_digraph(t: &PhyloTree, sigma: &LeafColoring, out: &[VertexSet]) -> Digraph {
    let edges: Vec<_> = out
        .iter()
        .enumerate()
        .flat_map(|(x, s)| s.iter().map(move |y| (x, y)))
        .collect();
    Digraph::with_names(t.leaf_names().to_vec(), sigma.colors(), &edges)
        .expect("best matches join leaves of different colors")
}

/// Parses `((a=0,b=1),c=1);`. Leaves are numbered in order of appearance.
pub fn parse_tree(text: &str) -> Result<(PhyloTree, LeafColoring)> {
    let mut p = NewickParser {
        bytes: text.as_bytes(),
        pos: 0,
        raw: RawTree {
            children: Vec::new(),
            leaf: Vec::new(),
            root: 0,
        },
        names: Vec::new(),
        colors: Vec::new(),
        seen: HashSet::new(),
    };
    let root = p.subtree()?;
    p.skip_ws();
    p.expect(b';')?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("trailing input after `;`"));
    }
    p.raw.root = root;
    let tree = PhyloTree::from_raw(&p.raw, p.names)?;
    let sigma = LeafColoring::new(p.colors)?;
    Ok((tree, sigma))
}

struct NewickParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    raw: RawTree,
    names: Vec<String>,
    colors: Vec<Color>,
    seen: HashSet<String>,
}

impl NewickParser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::TreeParse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", b as char)))
        }
    }

    fn new_node(&mut self, leaf: Option<LeafId>) -> usize {
        self.raw.children.push(Vec::new());
        self.raw.leaf.push(leaf);
        self.raw.children.len() - 1
    }

    fn subtree(&mut self) -> Result<usize> {
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let node = self.new_node(None);
            loop {
                let child = self.subtree()?;
                self.raw.children[node].push(child);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        return Ok(node);
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        }
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b"(),;=".contains(&b) || b.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a leaf name"));
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos])
            .map_err(|_| self.error("leaf name is not UTF-8"))?
            .to_string();
        self.skip_ws();
        self.expect(b'=')?;
        self.skip_ws();
        let color = match self.peek() {
            Some(b'0') => Color::Zero,
            Some(b'1') => Color::One,
            _ => return Err(self.error("expected color 0 or 1")),
        };
        self.pos += 1;
        if !self.seen.insert(name.clone()) {
            return Err(Error::DuplicateName(name));
        }
        let leaf = self.names.len();
        self.names.push(name);
        self.colors.push(color);
        Ok(self.new_node(Some(leaf)))
    }
}

/// Parses `<leaf> <color> <node-id>` lines; omitted pairs keep the root.
pub fn parse_truncation(text: &str, t: &PhyloTree, sigma: &LeafColoring) -> Result<TruncationMap> {
    let mut u = TruncationMap::root(t, sigma);
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [leaf, color, node] = tokens.as_slice() else {
            return Err(err("expected `<leaf> <color> <node-id>`".into()));
        };
        let x = t
            .leaf_names()
            .iter()
            .position(|n| n == leaf)
            .ok_or_else(|| err(format!("unknown leaf {leaf:?}")))?;
        let s = match *color {
            "0" => Color::Zero,
            "1" => Color::One,
            other => return Err(err(format!("invalid color {other:?}"))),
        };
        let node: NodeId = node
            .parse()
            .map_err(|_| err(format!("invalid node id {node:?}")))?;
        u.set(x, s, node);
    }
    u.validate(t, sigma)?;
    Ok(u)
}

/// Writes the non-default entries of `u`.
pub fn write_truncation(t: &PhyloTree, sigma: &LeafColoring, u: &TruncationMap) -> String {
    let default = TruncationMap::root(t, sigma);
    let mut s = String::new();
    for x in 0..t.leaf_count() {
        for c in [Color::Zero, Color::One] {
            if u.get(x, c) != default.get(x, c) {
                let _ = writeln!(s, "{} {} {}", t.leaf_name(x), c.index(), u.get(x, c));
            }
        }
    }
    s
}

/// All rooted phylogenetic trees whose leaves are `0..n`, each exactly once.
/// Leaf `k` is inserted either as a new child of an internal node or by
/// subdividing the edge above some node (including above the root).
pub(crate) fn all_raw_trees(n: usize) -> Vec<RawTree> {
    assert!(n >= 1);
    if n == 1 {
        return vec![RawTree {
            children: vec![Vec::new()],
            leaf: vec![Some(0)],
            root: 0,
        }];
    }
    let mut out = Vec::new();
    let start = RawTree {
        children: vec![Vec::new(), Vec::new(), vec![0, 1]],
        leaf: vec![Some(0), Some(1), None],
        root: 2,
    };
    grow(start, 2, n, &mut out);
    out
}

fn grow(tree: RawTree, next: LeafId, n: usize, out: &mut Vec<RawTree>) {
    if next == n {
        out.push(tree);
        return;
    }
    for option in 0..insertion_options(&tree) {
        grow(insert_leaf(&tree, next, option), next + 1, n, out);
    }
}

fn insertion_options(tree: &RawTree) -> usize {
    let internal = tree.leaf.iter().filter(|l| l.is_none()).count();
    internal + tree.children.len()
}

/// Options `0..internal` attach to the internal nodes in id order; the rest
/// subdivide the edge above node `option - internal`.
fn insert_leaf(tree: &RawTree, leaf: LeafId, option: usize) -> RawTree {
    let mut t = tree.clone();
    let internal: Vec<usize> = (0..t.leaf.len()).filter(|&v| t.leaf[v].is_none()).collect();
    let new_leaf = t.children.len();
    t.children.push(Vec::new());
    t.leaf.push(Some(leaf));
    if option < internal.len() {
        t.children[internal[option]].push(new_leaf);
        return t;
    }
    let below = option - internal.len();
    let w = t.children.len();
    t.children.push(vec![below, new_leaf]);
    t.leaf.push(None);
    if below == t.root {
        t.root = w;
    } else {
        let p = (0..w)
            .find(|&p| t.children[p].contains(&below))
            .expect("non-root node has a parent");
        for c in t.children[p].iter_mut() {
            if *c == below {
                *c = w;
            }
        }
    }
    t
}

/// Number of rooted phylogenetic trees on `n` labelled leaves.
pub fn count_trees(n: usize) -> usize {
    all_raw_trees(n).len()
}

/// A random phylogenetic tree on `n >= 2` leaves named `names`.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, names: Vec<String>) -> PhyloTree {
    let n = names.len();
    assert!(n >= 2, "need at least two leaves");
    let mut tree = RawTree {
        children: vec![Vec::new(), Vec::new(), vec![0, 1]],
        leaf: vec![Some(0), Some(1), None],
        root: 2,
    };
    for leaf in 2..n {
        let option = rng.gen_range(0..insertion_options(&tree));
        tree = insert_leaf(&tree, leaf, option);
    }
    PhyloTree::from_raw(&tree, names).expect("insertion keeps trees phylogenetic")
}

/// Random surjective coloring of `n >= 2` leaves.
pub fn random_coloring<R: Rng + ?Sized>(rng: &mut R, n: usize) -> LeafColoring {
    loop {
        let colors: Vec<Color> = (0..n).map(|_| Color::from_bit(rng.gen())).collect();
        if let Ok(c) = LeafColoring::new(colors) {
            return c;
        }
    }
}

/// Random valid truncation map: `u(x, s)` uniform on the root-to-`x` path.
pub fn random_truncation<R: Rng + ?Sized>(
    rng: &mut R,
    t: &PhyloTree,
    sigma: &LeafColoring,
) -> TruncationMap {
    let mut u = TruncationMap::root(t, sigma);
    for x in 0..t.leaf_count() {
        let path = t.root_path(t.leaf_node(x));
        let s = sigma.color(x).other();
        u.set(x, s, path[rng.gen_range(0..path.len())]);
    }
    u
}

/// A tree, coloring and truncation map explaining a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Explanation {
    pub tree: PhyloTree,
    pub coloring: LeafColoring,
    pub truncation: TruncationMap,
}

/// Largest leaf count accepted by [`search_explanation`].
pub const MAX_EXPLAIN_LEAVES: usize = 6;

/// Exhaustive search for a leaf-labelled tree, the digraph's own coloring and
/// a truncation map with `qbmg_from_tree(..) == g`.
///
/// With two colors all best matches of `x` share one lca, so truncation
/// either keeps every best-match edge of `x` (root) or none (the leaf
/// itself). A topology therefore explains `g` iff every out-neighborhood
/// of `g` is either the best-match set or empty.
pub fn search_explanation(g: &Digraph, max_leaves: usize) -> Result<Option<Explanation>> {
    search_explanation_with(g, max_leaves, Exec::default())
}

pub fn search_explanation_with(
    g: &Digraph,
    max_leaves: usize,
    exec: Exec,
) -> Result<Option<Explanation>> {
    let n = g.n();
    if max_leaves > MAX_EXPLAIN_LEAVES || n > max_leaves {
        return Err(Error::TooLarge {
            n: n.max(max_leaves),
            max: MAX_EXPLAIN_LEAVES,
        });
    }
    let Ok(sigma) = LeafColoring::new(g.colors()) else {
        return Ok(None);
    };
    let names = g.names();
    let trees = all_raw_trees(n);
    let found = par::find_first(exec, trees.len(), |i| {
        let tree = PhyloTree::from_raw(&trees[i], names.clone()).ok()?;
        explain_with_topology(g, &tree, &sigma).map(|truncation| (tree, truncation))
    });
    Ok(found.map(|(tree, truncation)| Explanation {
        tree,
        coloring: sigma,
        truncation,
    }))
}

fn explain_with_topology(g: &Digraph, t: &PhyloTree, sigma: &LeafColoring) -> Option<TruncationMap> {
    let mut u = TruncationMap::root(t, sigma);
    for x in 0..g.n() {
        let s = sigma.color(x).other();
        let full = best_matches(t, sigma, x, s);
        let actual = g.out(x);
        if actual.is_empty() {
            u.sink(t, x, s);
        } else if actual != full {
            return None;
        }
    }
    Some(u)
}

/// Vertex ids of `g` double as leaf ids of the witness tree.
pub fn explains(e: &Explanation, g: &Digraph) -> bool {
    match qbmg_from_tree(&e.tree, &e.coloring, &e.truncation) {
        Ok(h) => (0..g.n()).all(|v: VertexId| h.out(v) == g.out(v)) && h.n() == g.n(),
        Err(_) => false,
    }
}
