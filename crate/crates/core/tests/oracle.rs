mod common;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use zagreb_core::constructions::{build_family, FamilyParams, Mode};
use zagreb_core::graph::Index;
use zagreb_core::oracle::{canonical_form, enumerate_class, graph_from_mask, has_connectivity};
use zagreb_core::{
    complete_bipartite, decode_graph6, encode_graph6, is_bipartite, search_max,
    search_max_at_least, vertex_connectivity_value, Graph, SearchReport, SearchSpec, Strategy,
};

fn spec(n: usize, mode: Mode, c: usize, index: Index) -> SearchSpec {
    SearchSpec::new(n, mode, c, index).unwrap()
}

fn form(g: &Graph) -> String {
    String::from_utf8(canonical_form(g).unwrap()).unwrap()
}

#[test]
fn documented_maxima() {
    let r = search_max(spec(6, Mode::Vertex, 1, Index::M1), Strategy::Sequential);
    assert_eq!(r.max_value, Some(38));
    assert!(r
        .maximizers
        .contains(&form(&build_family(FamilyParams::new(6, 1, 2).unwrap()))));
    assert!(r.matches);

    let r = search_max(spec(6, Mode::Vertex, 3, Index::M1), Strategy::Sequential);
    assert_eq!(r.max_value, Some(54));
    assert_eq!(r.maximizers, vec![form(&complete_bipartite(3, 3).unwrap())]);

    let r = search_max(spec(7, Mode::Edge, 1, Index::M2), Strategy::Sequential);
    assert_eq!(r.max_value, Some(94));
    assert!(r
        .maximizers
        .contains(&form(&build_family(FamilyParams::new(7, 1, 3).unwrap()))));
}

#[test]
fn pruned_search_equals_unpruned_maximum() {
    for n in 6..=7 {
        for mode in Mode::ALL {
            for c in 1..=n / 2 {
                for index in Index::ALL {
                    let s = spec(n, mode, c, index);
                    let all: Vec<Graph> = enumerate_class(s).collect();
                    let max = all.iter().map(|g| index.evaluate(g)).max();
                    let forms: BTreeSet<String> = all
                        .iter()
                        .filter(|g| Some(index.evaluate(g)) == max)
                        .map(form)
                        .collect();
                    let r = search_max(s, Strategy::Sequential);
                    assert_eq!(r.max_value, max, "{s:?}");
                    assert_eq!(r.maximizers, forms.into_iter().collect::<Vec<_>>(), "{s:?}");
                }
            }
        }
    }
}

/// Smallest edge-mask code over all vertex permutations.
fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> u32 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u32::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u32;
        for &(u, v) in edges {
            let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
            code |= 1 << (b * (b - 1) / 2 + a);
        }
        best = best.min(code);
    });
    best
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

fn two_colourable(n: usize, edges: &[(usize, usize)]) -> bool {
    (0u32..1 << n).any(|side| {
        edges
            .iter()
            .all(|&(u, v)| (side >> u & 1) != (side >> v & 1))
    })
}

/// Isomorphism classes of connected bipartite graphs on five vertices with κ = 1,
/// counted from scratch by permutation and subset enumeration.
const ORDER_FIVE_CUT_VERTEX_CLASSES: usize = 4;

#[test]
fn order_five_class_count() {
    let mut brute = BTreeSet::new();
    for edges in common::all_graphs(5) {
        if two_colourable(5, &edges) && common::brute_vertex_connectivity(5, &edges) == 1 {
            brute.insert(brute_canonical(5, &edges));
        }
    }
    let library: BTreeSet<String> = enumerate_class(spec(5, Mode::Vertex, 1, Index::M1))
        .map(|g| form(&g))
        .collect();
    assert_eq!(brute.len(), ORDER_FIVE_CUT_VERTEX_CLASSES);
    assert_eq!(library.len(), ORDER_FIVE_CUT_VERTEX_CLASSES);
}

fn without_timing(mut r: SearchReport) -> SearchReport {
    r.elapsed = 0.0;
    r
}

#[test]
fn strategies_agree() {
    for c in 1..=4 {
        for index in Index::ALL {
            let s = spec(8, Mode::Vertex, c, index);
            let seq = without_timing(search_max(s, Strategy::Sequential));
            let par = without_timing(search_max(s, Strategy::Parallel));
            assert_eq!(seq, par);
        }
    }
}

#[test]
fn enumeration_spot_check() {
    let mut rng = common::rng(31);
    let n = 8;
    for p in 1..=n / 2 {
        let bits = p * (n - p);
        for _ in 0..((1u64 << bits) / 100).max(20) {
            let mask = rng.gen_range(0..1u64 << bits);
            let g = graph_from_mask(n, p, mask);
            assert!(is_bipartite(&g));
            let edges: Vec<_> = g.edges().collect();
            let kappa = common::brute_vertex_connectivity(n, &edges);
            for c in 1..=n / 2 {
                assert_eq!(
                    has_connectivity(&g, Mode::Vertex, c),
                    kappa == c,
                    "{}",
                    encode_graph6(&g)
                );
            }
        }
    }
}

#[test]
fn canonical_form_ignores_labels() {
    let mut rng = common::rng(32);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=10);
        let density = rng.gen_range(0.0..=1.0);
        let g = common::random_graph(&mut rng, n, density);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&h).unwrap(),
            "{} {perm:?}",
            encode_graph6(&g)
        );
    }
}

#[test]
fn canonical_form_separates_classes() {
    let mut seen = BTreeSet::new();
    for edges in common::all_graphs(5) {
        let g = Graph::from_edges(5, edges.iter().copied()).unwrap();
        seen.insert((brute_canonical(5, &edges), form(&g)));
    }
    let codes: BTreeSet<_> = seen.iter().map(|(c, _)| *c).collect();
    let forms: BTreeSet<_> = seen.iter().map(|(_, f)| f.clone()).collect();
    assert_eq!(codes.len(), 34);
    assert_eq!(forms.len(), 34);
    assert_eq!(seen.len(), 34);
}

#[test]
fn canonical_form_decodes_to_isomorphic_graph() {
    let g = build_family(FamilyParams::new(9, 2, 4).unwrap());
    let h = decode_graph6(&canonical_form(&g).unwrap()).unwrap();
    assert_eq!(form(&h), form(&g));
    assert_eq!(vertex_connectivity_value(&h), 2);
}

#[test]
fn at_least_covers_the_union() {
    let s = spec(8, Mode::Vertex, 2, Index::M1);
    let union = search_max_at_least(s, Strategy::Sequential);
    let best = (2..=4)
        .filter_map(|c| {
            search_max(spec(8, Mode::Vertex, c, Index::M1), Strategy::Sequential).max_value
        })
        .max();
    assert_eq!(union.max_value, best);
    assert_eq!(
        union.maximizers,
        vec![form(&complete_bipartite(4, 4).unwrap())]
    );
    assert!(union.matches);
    assert!(union.note.unwrap().contains("union"));
}

#[test]
fn report_field_names() {
    let r = search_max(spec(6, Mode::Edge, 2, Index::M2), Strategy::Sequential);
    let v = serde_json::to_value(&r).unwrap();
    for key in [
        "spec",
        "max_value",
        "maximizers",
        "predicted_graph",
        "predicted_value",
        "matches",
        "graphs_enumerated",
        "elapsed",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["spec"]["mode"], "edge");
    let back: SearchReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}
