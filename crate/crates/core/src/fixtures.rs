//! Named digraphs used throughout the tests, the CLI and the theorem report.
//!
//! Vertices are `v1..vn`; vertices with odd index get color 0 unless stated
//! otherwise. Edge lists are written one-based, as `(from, to)`.

use crate::digraph::{Color, Digraph, UGraph};

fn parity_colors(n: usize) -> Vec<Color> {
    (0..n).map(|v| Color::from_bit(v % 2 == 1)).collect()
}

fn one_based(n: usize, edges: &[(usize, usize)]) -> Digraph {
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Digraph::new(&parity_colors(n), &edges).expect("fixture is a valid bipartite digraph")
}

pub fn p5a() -> Digraph {
    one_based(5, &[(1, 2), (3, 2), (3, 4), (4, 5)])
}

pub fn p5b() -> Digraph {
    one_based(5, &[(1, 2), (3, 2), (3, 4), (5, 4)])
}

pub fn p5c() -> Digraph {
    one_based(5, &[(2, 1), (3, 2), (3, 4), (4, 5)])
}

pub fn p5a1() -> Digraph {
    one_based(5, &[(1, 2), (2, 1), (3, 2), (3, 4), (4, 5)])
}

pub fn p5b1() -> Digraph {
    one_based(5, &[(1, 2), (2, 1), (3, 2), (3, 4), (5, 4)])
}

pub fn p5ab() -> Digraph {
    one_based(5, &[(1, 2), (2, 1), (3, 2), (3, 4), (4, 5), (5, 4)])
}

/// The six P5 classes in the order a, b, c, a1, b1, ab.
pub fn p5_classes() -> Vec<(&'static str, Digraph)> {
    vec![
        ("P5a", p5a()),
        ("P5b", p5b()),
        ("P5c", p5c()),
        ("P5a1", p5a1()),
        ("P5b1", p5b1()),
        ("P5ab", p5ab()),
    ]
}

/// The `i`-th (1-based) of the four P4 classes.
pub fn p4(i: usize) -> Digraph {
    let edges: &[(usize, usize)] = match i {
        1 => &[(1, 2), (1, 4), (2, 3)],
        2 => &[(1, 2), (1, 4), (3, 4)],
        3 => &[(1, 2), (1, 4), (2, 1), (2, 3)],
        4 => &[(1, 2), (2, 1), (4, 1), (4, 3)],
        _ => panic!("there are four P4 classes, got index {i}"),
    };
    one_based(4, edges)
}

/// The `i`-th (1-based) of the ten C4 classes.
pub fn c4(i: usize) -> Digraph {
    let edges: &[(usize, usize)] = match i {
        1 => &[(1, 2), (1, 4), (2, 1), (2, 3), (3, 4), (4, 3)],
        2 => &[(1, 2), (1, 4), (2, 3), (3, 2), (3, 4), (4, 3)],
        3 => &[(1, 2), (1, 4), (3, 2), (3, 4)],
        4 => &[(1, 2), (1, 4), (3, 2), (4, 3)],
        5 => &[(1, 2), (2, 1), (3, 2), (3, 4), (4, 1)],
        6 => &[(1, 2), (1, 4), (3, 2), (4, 1), (4, 3)],
        7 => &[(1, 2), (1, 4), (2, 3), (4, 3)],
        8 => &[(1, 2), (1, 4), (3, 2), (3, 4), (4, 3)],
        9 => &[(1, 2), (1, 4), (2, 1), (2, 3), (3, 2), (3, 4)],
        10 => &[
            (1, 2),
            (1, 4),
            (3, 2),
            (3, 4),
            (2, 1),
            (2, 3),
            (4, 1),
            (4, 3),
        ],
        _ => panic!("there are ten C4 classes, got index {i}"),
    };
    one_based(4, edges)
}

/// Seven-vertex 2-qBMG whose first five vertices induce a P5.
pub fn ex7() -> Digraph {
    one_based(
        7,
        &[
            (5, 4),
            (2, 1),
            (3, 4),
            (3, 2),
            (4, 7),
            (1, 6),
            (3, 6),
            (6, 1),
            (7, 4),
        ],
    )
}

/// Ten-vertex type-(A) 2-qBMG: a dominating biclique on `v1..v8` plus the
/// stable set `{v9, v10}`. Colors: `v1..v4, v9` are 0, `v5..v8, v10` are 1.
pub fn ex10() -> Digraph {
    let colors: Vec<Color> = (1..=10)
        .map(|v| Color::from_bit(matches!(v, 5..=8 | 10)))
        .collect();
    let edges: Vec<_> = [
        (1, 5),
        (1, 6),
        (1, 7),
        (1, 8),
        (5, 2),
        (6, 2),
        (2, 7),
        (2, 8),
        (5, 3),
        (6, 3),
        (3, 7),
        (3, 8),
        (5, 4),
        (6, 4),
        (7, 4),
        (4, 8),
        (5, 9),
        (1, 10),
        (2, 10),
    ]
    .iter()
    .map(|&(u, v)| (u - 1, v - 1))
    .collect();
    Digraph::new(&colors, &edges).expect("fixture is a valid bipartite digraph")
}

/// Four-vertex 2-qBMG `{v2v1, v2v3, v3v4}` with an induced P4.
pub fn r4() -> Digraph {
    one_based(4, &[(2, 1), (2, 3), (3, 4)])
}

/// Three-vertex 2-qBMG `{v2v1, v2v3}` with an induced P3.
pub fn r3() -> Digraph {
    one_based(3, &[(2, 1), (2, 3)])
}

/// Undirected path `v1 - v2 - .. - vk`.
pub fn path(k: usize) -> UGraph {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    UGraph::new(&parity_colors(k), &edges).expect("paths are bipartite")
}

/// Undirected cycle on `k` vertices, `k` even.
pub fn cycle(k: usize) -> UGraph {
    assert!(k >= 4 && k.is_multiple_of(2), "bipartite cycles have even length >= 4");
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.push((0, k - 1));
    UGraph::new(&parity_colors(k), &edges).expect("even cycles are bipartite")
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> UGraph {
    let colors: Vec<Color> = (0..a + b).map(|v| Color::from_bit(v >= a)).collect();
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |w| (u, w)))
        .collect();
    UGraph::new(&colors, &edges).expect("complete bipartite graphs are bipartite")
}

/// Parity-colored digraph on `n` vertices with the given one-based edges.
pub fn parity_digraph(n: usize, edges: &[(usize, usize)]) -> Digraph {
    one_based(n, edges)
}
