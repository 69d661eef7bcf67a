use proptest::prelude::*;

use gammaline::catalog::GroupRecord;
use gammaline::graph::{enumerate_graphs, find_induced, is_isomorphic, SimpleGraph};
use gammaline::group::{
    direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_symmetric,
    FiniteGroup,
};
use gammaline::lattice::build_gamma;
use gammaline::line::{
    forbidden_set, is_line_graph_by_beineke, is_line_graph_by_roots, line_graph, Evidence,
};

fn gamma_of(spec: &str) -> gammaline::lattice::LabeledGraph {
    build_gamma(&GroupRecord::from_spec(spec).unwrap().group)
}

#[test]
fn z12_contains_claw_centred_at_order_two() {
    let gamma = gamma_of("Z12");
    let m = find_induced(gamma.graph(), &SimpleGraph::claw()).unwrap();
    let centre = (0..4)
        .find(|&i| SimpleGraph::claw().degree(i) == 3)
        .unwrap();
    assert_eq!(gamma.label(m[centre]).order, 2);
    let mut leaves: Vec<usize> = (0..4)
        .filter(|&i| i != centre)
        .map(|i| gamma.label(m[i]).order)
        .collect();
    leaves.sort_unstable();
    assert_eq!(leaves, vec![1, 4, 6]);
}

#[test]
fn beineke_witnesses_on_group_graphs() {
    let f = forbidden_set().unwrap();
    let z6 = gamma_of("Z6");
    assert!(is_line_graph_by_beineke(z6.graph(), f).is_line_graph);

    let v4 = gamma_of("Z2xZ2");
    let v = is_line_graph_by_beineke(v4.graph(), f);
    let Evidence::Forbidden {
        pattern: 1,
        embedding,
    } = &v.evidence
    else {
        panic!("expected a claw, got {:?}", v.evidence);
    };
    let centre = (0..4).find(|&i| f.get(1).unwrap().degree(i) == 3).unwrap();
    assert_eq!(v4.label(embedding[centre]).name, "{e}");

    let z30 = gamma_of("Z30");
    let v = is_line_graph_by_beineke(z30.graph(), f);
    let Evidence::Forbidden {
        pattern: 1,
        embedding,
    } = &v.evidence
    else {
        panic!("expected a claw");
    };
    let mut orders: Vec<usize> = embedding.iter().map(|&x| z30.label(x).order).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![1, 2, 3, 5]);
}

#[test]
fn every_small_graph_line_or_not_consistently() {
    let f = forbidden_set().unwrap();
    for n in 1..=3 {
        for g in enumerate_graphs(n).unwrap() {
            assert!(is_line_graph_by_roots(&g).unwrap().is_line_graph, "{g:?}");
        }
    }
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let a = is_line_graph_by_roots(&g).unwrap();
            let b = is_line_graph_by_beineke(&g, f);
            assert_eq!(a.is_line_graph, b.is_line_graph, "{g:?}");
            assert!(a.check(&g, f) && b.check(&g, f));
        }
    }
}

#[test]
fn roots_reproduce_input() {
    for g in [
        SimpleGraph::cycle(6),
        SimpleGraph::complete(5),
        SimpleGraph::path(7),
    ] {
        let v = is_line_graph_by_roots(&g).unwrap();
        let Evidence::Root { root, .. } = v.evidence else {
            panic!("expected a root")
        };
        assert!(is_isomorphic(&line_graph(&root), &g));
    }
}

fn constructors_up_to_60() -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for n in 1..=60 {
        out.push(make_cyclic(n).unwrap());
    }
    for n in 1..=30 {
        out.push(make_dihedral(n).unwrap());
    }
    for n in 2..=15 {
        out.push(make_dicyclic(n).unwrap());
    }
    for n in 1..=4 {
        out.push(make_symmetric(n).unwrap());
    }
    for n in 3..=5 {
        out.push(make_alternating(n).unwrap());
    }
    for m in 2..=7 {
        for k in 2..=60 / m {
            out.push(direct_product(
                &make_cyclic(m).unwrap(),
                &make_cyclic(k).unwrap(),
            ));
        }
    }
    out
}

#[test]
fn lagrange_and_gamma_connectivity_for_all_constructors() {
    for g in constructors_up_to_60() {
        for x in g.elements() {
            assert_eq!(g.order() % g.element_order(x), 0, "{}", g.name());
        }
        let gamma = build_gamma(&g);
        assert!(gamma.graph().is_connected(), "{}", g.name());
        // trivial subgroup is vertex 0 and every vertex is a distinct member set
        assert_eq!(gamma.label(0).order, 1);
        let mut sets: Vec<&Vec<usize>> = gamma.labels().iter().map(|l| &l.members).collect();
        sets.sort();
        sets.dedup();
        assert_eq!(sets.len(), gamma.vertex_count());
    }
}

fn arb_root() -> impl Strategy<Value = SimpleGraph> {
    (2usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn line_graphs_are_recognized(h in arb_root()) {
        let f = forbidden_set().unwrap();
        let l = line_graph(&h);
        prop_assume!(l.vertex_count() <= 24);
        let by_roots = is_line_graph_by_roots(&l).unwrap();
        prop_assert!(by_roots.is_line_graph);
        prop_assert!(by_roots.check(&l, f));
        prop_assert!(is_line_graph_by_beineke(&l, f).is_line_graph);
        prop_assert!(find_induced(&l, &SimpleGraph::claw()).is_none());
    }
}
