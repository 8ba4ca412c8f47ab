use graphpoly::invariants::covered::covered_by_expansion;
use graphpoly::invariants::tutte::tutte_by_expansion;
use graphpoly::invariants::*;
use graphpoly::{canonical_form, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges_unchecked(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

/// Small multigraphs with loops and parallel edges.
fn arb_multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |es| Graph::from_edges_unchecked(n, es))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn multiplicative_over_disjoint_union(g in arb_graph(5), h in arb_graph(5)) {
        let u = g.disjoint_union(&h);
        for id in [
            PolynomialId::Dom,
            PolynomialId::Indep,
            PolynomialId::MatchM,
            PolynomialId::CoveredC,
            PolynomialId::Xi,
            PolynomialId::PartitionZ,
            PolynomialId::CharAdj,
            PolynomialId::Chromatic,
        ] {
            prop_assert_eq!(id.compute(&u).unwrap(), &id.compute(&g).unwrap() * &id.compute(&h).unwrap(), "{}", id);
        }
    }

    #[test]
    fn invariant_under_relabeling(g in arb_graph(6), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        for id in PolynomialId::ALL {
            prop_assert_eq!(id.compute(&g).unwrap(), id.compute(&h).unwrap(), "{}", id);
        }
    }

    #[test]
    fn elimination_bookkeeping(g in arb_multigraph(6, 8)) {
        for &(u, v) in g.edges() {
            let d = g.delete_edge(u, v).unwrap();
            prop_assert_eq!(d.size(), g.size() - 1);
            prop_assert_eq!(d.order(), g.order());
            if u != v {
                prop_assert_eq!(g.contract_edge(u, v).unwrap().order(), g.order() - 1);
                prop_assert_eq!(g.extract_edge(u, v).unwrap().order(), g.order() - 2);
            }
        }
    }

    #[test]
    fn multigraph_recursions_match_expansions(g in arb_multigraph(5, 7)) {
        prop_assert_eq!(tutte_poly(&g).unwrap(), tutte_by_expansion(&g).unwrap());
        prop_assert_eq!(covered::c_from_xi(&xi_poly(&g).unwrap()), covered_by_expansion(&g).unwrap());
        let loopless = g.loop_count() == 0;
        if loopless {
            prop_assert_eq!(matching_m(&g).unwrap(), xi_poly(&g).unwrap().subs(&[
                ("x", "w1".parse().unwrap()),
                ("y", graphpoly::Polynomial::zero()),
                ("z", "w2".parse().unwrap()),
            ]));
        }
    }

    #[test]
    fn domination_counts_whole_vertex_set(g in arb_graph(7)) {
        let d = domination_poly(&g).unwrap();
        let top = d.coefficient(&[("x", g.order() as u32)]);
        prop_assert_eq!(top, graphpoly::poly::integer(1u32));
        prop_assert_eq!(d.degree_in("x") as usize, g.order());
    }

    #[test]
    fn similarity_key_is_isomorphism_invariant(g in arb_graph(6)) {
        let h = canonical_form(&g).key.graph();
        prop_assert_eq!(similarity_key(&g), similarity_key(&h));
    }
}
