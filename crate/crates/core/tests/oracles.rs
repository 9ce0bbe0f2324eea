//! Library results checked against naive re-implementations written straight
//! from the definitions.

use qbmg::biclique::{all_bicliques, find_dominating_biclique, is_dominating_set, maximal_bicliques};
use qbmg::decompose::{decompose_type_a, is_type_a, kos_partition};
use qbmg::enumerate::{all_bipartite_digraphs, classify_qbmgs, orientations_of};
use qbmg::orient::{bitournament_report, odd_even_digraph, oriented_biclique_subdigraph, orient, topological_order, OddEvenSpec};
use qbmg::paths::{find_induced_cycle, find_induced_path, is_cograph};
use qbmg::tree::{best_match_graph, parse_tree, parse_truncation, qbmg_from_tree};
use qbmg::{axioms, fixtures, recognize, Biclique, Color, Digraph, UGraph, VertexSet};

fn naive_n1(g: &Digraph) -> bool {
    let n = g.n();
    let e = |a, b| g.has_edge(a, b);
    for u in 0..n {
        for v in 0..n {
            if u == v || e(u, v) || e(v, u) {
                continue;
            }
            for t in 0..n {
                for w in 0..n {
                    if e(u, t) && e(v, w) && e(t, w) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn naive_n2(g: &Digraph) -> bool {
    let n = g.n();
    let e = |a, b| g.has_edge(a, b);
    (0..n).all(|u| {
        (0..n).all(|v| {
            (0..n).all(|w| (0..n).all(|t| !(e(u, v) && e(v, w) && e(w, t)) || e(u, t)))
        })
    })
}

fn naive_n3(g: &Digraph) -> bool {
    let n = g.n();
    let out = |a: usize| -> Vec<bool> { (0..n).map(|b| g.has_edge(a, b)).collect() };
    let sub = |x: &[bool], y: &[bool]| x.iter().zip(y).all(|(a, b)| !a || *b);
    for u in 0..n {
        for v in 0..n {
            let shared = (0..n).any(|s| g.has_edge(u, s) && g.has_edge(v, s));
            if u != v && shared && !sub(&out(u), &out(v)) && !sub(&out(v), &out(u)) {
                return false;
            }
        }
    }
    true
}

fn edge_list(g: &Digraph) -> Vec<(String, String)> {
    g.edges()
        .map(|(a, b)| (g.name(a).into_owned(), g.name(b).into_owned()))
        .collect()
}

fn set_of(g: &Digraph, names: &[&str]) -> VertexSet {
    let ids: Vec<usize> = names.iter().map(|s| g.vertex_by_name(s).unwrap()).collect();
    VertexSet::from_slice(&ids)
}

#[test]
fn recognition_agrees_with_naive_axioms() {
    for n in 1..=5 {
        let space = all_bipartite_digraphs(n).unwrap();
        for i in 0..space.len() {
            let g = space.get(i);
            let (n1, n2, n3) = (naive_n1(&g), naive_n2(&g), naive_n3(&g));
            assert_eq!(axioms::find_n1_violation(&g).is_none(), n1, "n={n} i={i}");
            assert_eq!(axioms::find_n2_violation(&g).is_none(), n2, "n={n} i={i}");
            assert_eq!(axioms::find_n3_violation(&g).is_none(), n3, "n={n} i={i}");
            let r = recognize(&g);
            assert_eq!(r.is_qbmg, n1 && n2 && n3, "n={n} i={i}");
            if let Some(w) = &r.witness {
                assert!(w.replay(&g));
            }
            let sink_free = (0..n).all(|v| (0..n).any(|w| g.has_edge(v, w)));
            assert_eq!(r.is_bmg, r.is_qbmg && sink_free);
        }
    }
}

#[test]
fn underlying_commutes_with_induced() {
    for n in 1..=5 {
        let space = all_bipartite_digraphs(n).unwrap();
        for i in 0..space.len() {
            let g = space.get(i);
            let ug = g.underlying();
            for s in g.vertices().subsets() {
                let (sub, _) = g.induced(s);
                let (usub, _) = ug.induced(s);
                assert_eq!(sub.underlying(), usub, "n={n} i={i} s={s:?}");
            }
        }
    }
}

#[test]
fn qbmgs_are_hereditary_up_to_five() {
    for n in 1..=5 {
        let space = all_bipartite_digraphs(n).unwrap();
        for g in space.iter().filter(|g| recognize(g).is_qbmg) {
            for s in g.vertices().subsets() {
                assert!(recognize(&g.induced(s).0).is_qbmg);
            }
        }
    }
}

#[test]
fn odd_cycles_never_found_in_bipartite_graphs() {
    for g in [fixtures::ex7(), fixtures::ex10(), fixtures::p5ab()] {
        let ug = g.underlying();
        for k in [3, 5, 7, 9] {
            assert!(find_induced_cycle(&ug, k).is_none());
        }
    }
}

#[test]
fn c4_underlying_is_a_four_cycle() {
    let ug = fixtures::c4(1).underlying();
    assert_eq!(ug.edge_count(), 4);
    assert!(ug.is_connected());
    assert!((0..4).all(|v| ug.neighbors(v).len() == 2));
}

#[test]
fn ex10_structure() {
    let g = fixtures::ex10();
    let r = recognize(&g);
    assert!(r.is_qbmg);
    let pair = set_of(&g, &["v9", "v10"]);
    assert_eq!(g.induced(pair).0.edge_count(), 0);
    assert_eq!(g.weak_components().len(), 1);
    let naive_sinks: Vec<usize> = (0..g.n()).filter(|&v| g.out(v).is_empty()).collect();
    assert_eq!(r.sinks.to_vec(), naive_sinks);
    assert!(!is_dominating_set(&g.underlying(), pair));
    assert!(is_type_a(&g));
    assert_eq!(decompose_type_a(&g).unwrap().parts, vec![g.vertices()]);

    let b = Biclique {
        left: set_of(&g, &["v1", "v2", "v3", "v4"]),
        right: set_of(&g, &["v5", "v6", "v7", "v8"]),
    };
    let sub = oriented_biclique_subdigraph(&g, &b).unwrap();
    assert_eq!(sub.n(), 8);
    assert_eq!(sub.edge_count(), 16);
    assert!(bitournament_report(&sub).is_bitournament);
}

#[test]
fn equivalent_pairs_match_scan() {
    for g in [fixtures::ex7(), fixtures::p5a(), fixtures::ex10()] {
        let mut naive = Vec::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.out(u) == g.out(v) && g.inn(u) == g.inn(v) {
                    naive.push((u, v));
                }
            }
        }
        assert_eq!(g.equivalent_vertex_pairs(), naive);
    }
    assert!(fixtures::p5a().equivalent_vertex_pairs().is_empty());
}

#[test]
fn n1_configurations_match_scan() {
    for g in fixtures::p5_classes().into_iter().map(|(_, g)| g).chain([fixtures::ex7()]) {
        let e = |a, b| g.has_edge(a, b);
        let mut naive = Vec::new();
        for x1 in 0..g.n() {
            for x2 in 0..g.n() {
                for x3 in 0..g.n() {
                    for y in 0..g.n() {
                        let distinct = x1 != x2 && x1 != x3 && x1 != y && x2 != x3 && x2 != y && x3 != y;
                        if distinct && e(x1, x2) && e(x2, x3) && e(y, x3) && (e(x1, y) || e(y, x1)) {
                            naive.push([x1, x2, x3, y]);
                        }
                    }
                }
            }
        }
        let mut found = axioms::n1_configurations(&g);
        found.sort();
        assert_eq!(found, naive);
    }
    assert!(axioms::n1_configurations(&fixtures::p5a()).is_empty());
}

#[test]
fn p5ab_is_hereditary_and_type_a() {
    let g = fixtures::p5ab();
    assert_eq!(axioms::is_hereditary_on(&g).unwrap(), None);
    assert!(is_type_a(&g));
    let k = kos_partition(&g.underlying()).unwrap();
    let star = k.biclique.unwrap();
    assert_eq!(star.vertices(), VertexSet::from_slice(&[1, 2, 3]));
    assert_eq!(k.stable, VertexSet::from_slice(&[0, 4]));
}

#[test]
fn p5a1_decomposes_into_connected_type_a_parts() {
    let g = fixtures::p5a1();
    let d = decompose_type_a(&g).unwrap();
    assert!(d.is_valid_for(&g));
    let first = d.parts[0];
    let dom = find_dominating_biclique(&g.underlying()).unwrap().unwrap();
    assert!(dom.vertices().is_subset(first));
}

#[test]
fn k22_has_no_induced_p4_and_complete_bipartite_is_cograph() {
    let k22 = fixtures::complete_bipartite(2, 2);
    assert!(find_induced_path(&k22, 4).is_none());
    for (a, b) in [(1, 1), (1, 3), (2, 3), (3, 3)] {
        assert!(is_cograph(&fixtures::complete_bipartite(a, b)));
    }
}

fn naive_bicliques(g: &UGraph) -> Vec<Biclique> {
    let mut found = Vec::new();
    for s in g.vertices().subsets() {
        let left = s.intersection(g.color_class(Color::Zero));
        let right = s.intersection(g.color_class(Color::One));
        if left.is_empty() || right.is_empty() {
            continue;
        }
        if left.iter().all(|u| right.is_subset(g.neighbors(u))) {
            found.push(Biclique { left, right });
        }
    }
    found
}

#[test]
fn bicliques_match_subset_scan() {
    let graphs = [
        fixtures::path(3),
        fixtures::path(5),
        fixtures::cycle(6),
        fixtures::complete_bipartite(2, 3),
        fixtures::ex10().underlying(),
    ];
    for g in &graphs {
        let all = naive_bicliques(g);
        let mut lib = all_bicliques(g);
        lib.sort_by_key(|b| (b.left.0, b.right.0));
        let mut naive = all.clone();
        naive.sort_by_key(|b| (b.left.0, b.right.0));
        assert_eq!(lib, naive);

        let maximal: Vec<Biclique> = all
            .iter()
            .filter(|b| !all.iter().any(|c| c != *b && b.vertices().is_subset(c.vertices())))
            .copied()
            .collect();
        let mut lib_max = maximal_bicliques(g);
        lib_max.sort_by_key(|b| (b.left.0, b.right.0));
        let mut naive_max = maximal;
        naive_max.sort_by_key(|b| (b.left.0, b.right.0));
        assert_eq!(lib_max, naive_max);

        let any_dominates = all.iter().any(|b| is_dominating_set(g, b.vertices()));
        let found = find_dominating_biclique(g).unwrap();
        assert_eq!(found.is_some(), any_dominates);
        if let Some(b) = found {
            assert!(b.is_biclique_in(g) && is_dominating_set(g, b.vertices()));
        }
    }
    let p3 = fixtures::path(3);
    let max = maximal_bicliques(&p3);
    assert_eq!(max.len(), 1);
    assert_eq!(max[0].vertices(), p3.vertices());
    assert!(find_dominating_biclique(&fixtures::cycle(6)).unwrap().is_none());
}

#[test]
fn orientation_examples() {
    let g = orient(&fixtures::p5ab());
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert_eq!(edges, vec![(0, 1), (2, 1), (2, 3), (3, 4)]);

    let a = fixtures::p5a();
    let order = [0, 2, 1, 3, 4];
    let pos = |v: usize| order.iter().position(|&x| x == v).unwrap();
    assert!(a.edges().all(|(u, v)| pos(u) < pos(v)));
    let lib = topological_order(&orient(&a)).unwrap().unwrap();
    let pos = |v: usize| lib.iter().position(|&x| x == v).unwrap();
    assert!(a.edges().all(|(u, v)| pos(u) < pos(v)));
    assert!(!bitournament_report(&a).is_bitournament);
}

#[test]
fn odd_even_examples() {
    let g = odd_even_digraph(&OddEvenSpec::new([0, 2, 4, 6], [1, 3]).unwrap()).unwrap();
    let mut naive = Vec::new();
    for a in [0u64, 2, 4, 6] {
        for b in [0u64, 2, 4, 6] {
            if b > a && [1, 3].contains(&((a + b) / 2)) && [1, 3].contains(&((b - a) / 2)) {
                naive.push((a.to_string(), b.to_string()));
            }
        }
    }
    assert_eq!(edge_list(&g), naive);
    assert_eq!(
        naive,
        vec![("0".into(), "2".into()), ("0".into(), "6".into()), ("2".into(), "4".into())]
    );
    let single = odd_even_digraph(&OddEvenSpec::new([0, 2], [1]).unwrap()).unwrap();
    let r = bitournament_report(&single);
    assert!(r.is_bitournament && r.is_bitransitive);
}

#[test]
fn three_leaf_tree_examples() {
    let (t, sigma) = parse_tree("((a=0,b=1),c=1);").unwrap();
    let leaf = |s: &str| t.leaf_names().iter().position(|x| x == s).unwrap();
    let (a, b, c) = (leaf("a"), leaf("b"), leaf("c"));
    assert_eq!(t.lca(a, c), t.root());
    let inner = t.lca(a, b);
    assert_ne!(inner, t.root());
    assert_eq!(t.parent(t.leaf_node(a)), Some(inner));

    let bmg = best_match_graph(&t, &sigma);
    let pairs = |v: &[(&str, &str)]| -> Vec<(String, String)> {
        v.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect()
    };
    assert_eq!(edge_list(&bmg), pairs(&[("a", "b"), ("b", "a"), ("c", "a")]));

    let u = parse_truncation("c 0 4\n", &t, &sigma).unwrap();
    let g = qbmg_from_tree(&t, &sigma, &u).unwrap();
    assert_eq!(edge_list(&g), pairs(&[("a", "b"), ("b", "a")]));
}

#[test]
fn template_spaces_and_p3_classes() {
    assert_eq!(orientations_of(&fixtures::path(5)).count(), 81);
    assert_eq!(orientations_of(&fixtures::cycle(4)).count(), 81);
    assert_eq!(all_bipartite_digraphs(2).unwrap().len(), 10);

    let orients: Vec<Digraph> = orientations_of(&fixtures::path(3)).collect();
    assert_eq!(orients.len(), 9);
    assert!(orients.iter().all(|g| recognize(g).is_qbmg));
    // Oracle: pairwise isomorphism by brute force over all 3! relabelings.
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut reps: Vec<&Digraph> = Vec::new();
    for g in &orients {
        let seen = reps.iter().any(|r| {
            perms.iter().any(|p| {
                let h = g.relabel(p);
                h.edges().collect::<Vec<_>>() == r.edges().collect::<Vec<_>>()
            })
        });
        if !seen {
            reps.push(g);
        }
    }
    let lib = classify_qbmgs(orients.iter().cloned(), Some(&fixtures::path(3))).unwrap();
    assert_eq!(lib.classes.len(), reps.len());
}

/// A sink-free 2-qBMG whose underlying graph is the path `v5 v1 v4 v2 v3`.
/// Sink-freeness is not inherited by induced sub-digraphs: `v1` is a sink of
/// the induced P4 on `v1 v4 v2 v3` but reaches `v5` in the whole graph.
#[test]
fn sink_free_qbmg_can_contain_an_induced_p4() {
    let names = (1..=5).map(|i| format!("v{i}")).collect();
    let colors: Vec<Color> = [1, 1, 0, 0, 0].iter().map(|&b| Color::from_bit(b == 1)).collect();
    let edges = [(0, 4), (4, 0), (1, 2), (2, 1), (3, 0), (3, 1)];
    let g = Digraph::with_names(names, &colors, &edges).unwrap();
    let r = recognize(&g);
    assert!(naive_n1(&g) && naive_n2(&g) && naive_n3(&g));
    assert!(r.is_bmg);
    let ug = g.underlying();
    let p4 = find_induced_path(&ug, 4).unwrap();
    assert!(p4.is_valid_in(&ug));
    assert!(!is_cograph(&ug));

    let (t, sigma) = parse_tree("((v1=1,v5=0),(v2=1,v3=0),v4=0);").unwrap();
    let bmg = best_match_graph(&t, &sigma);
    let mut expected = edge_list(&g);
    expected.sort();
    let mut got = edge_list(&bmg);
    got.sort();
    assert_eq!(got, expected);
}
