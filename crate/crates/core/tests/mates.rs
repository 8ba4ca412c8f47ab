use graphpoly::invariants::domination::dominating_sets;
use graphpoly::invariants::{similarity_key, PolynomialId};
use graphpoly::mates::*;
use graphpoly::pendant::RootedPendant;
use graphpoly::{are_isomorphic, canonical_form, Graph, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_forest(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    for i in 1..n {
        if rng.gen_bool(0.85) {
            edges.push((rng.gen_range(0..i), i));
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, p: f64) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

fn schwenk_pair() -> PseudosimilarPair {
    let target: Polynomial = "x^8 - 6x^6 + 10x^4 - 4x^2".parse().unwrap();
    find_pseudosimilar_trees(9)
        .unwrap()
        .into_iter()
        .find(|p| p.tree.order() == 9 && p.deleted_char_poly().unwrap() == target)
        .expect("order-9 gadget")
}

fn smallest_pseudosimilar() -> PseudosimilarPair {
    find_pseudosimilar_trees(11).unwrap().into_iter().find(|p| p.kind == PairKind::Pseudosimilar).expect("exists by order 11")
}

#[test]
fn no_gadgets_below_order_nine() {
    assert!(find_pseudosimilar_trees(8).unwrap().is_empty());
}

#[test]
fn returned_pairs_satisfy_their_definitions() {
    for p in find_pseudosimilar_trees(12).unwrap() {
        assert!(p.check().unwrap(), "{:?}", p);
        let orbits = canonical_form(&p.tree).orbits();
        assert_ne!(orbits[p.u], orbits[p.v]);
    }
}

#[test]
fn order_nine_gadget_is_cospectral_only() {
    let p = schwenk_pair();
    assert_eq!(p.kind, PairKind::CospectralDeletion);
    let s = smallest_pseudosimilar();
    assert_eq!(s.tree.order(), 11);
}

#[test]
fn schwenk_swap_on_minimal_and_non_tree_hosts() {
    let pair = schwenk_pair();
    for host in [Graph::empty(1), Graph::cycle(4)] {
        let (g, occ) = graft_with_occurrence(&host, 0, &pair.rooted_at_v().unwrap()).unwrap();
        let c = schwenk_swap(&g, &occ, &pair).unwrap();
        assert!(c.equal, "{c:?}");
        let (g, h) = c.graphs().unwrap();
        assert_eq!(similarity_key(&g), similarity_key(&h));
    }
}

#[test]
fn schwenk_swap_on_random_forest_hosts() {
    let pair = schwenk_pair();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..100 {
        let host = random_forest(&mut rng, 20);
        let attach = rng.gen_range(0..host.order());
        let (g, occ) = graft_with_occurrence(&host, attach, &pair.rooted_at_v().unwrap()).unwrap();
        let c = schwenk_swap(&g, &occ, &pair).unwrap();
        assert!(c.equal && c.nonisomorphic, "{c:?}");
    }
}

#[test]
fn swaps_reject_mismatched_occurrences() {
    let pair = schwenk_pair();
    let (g, occ) = graft_with_occurrence(&Graph::empty(1), 0, &pair.rooted_at_u().unwrap()).unwrap();
    assert!(schwenk_swap(&g, &occ, &pair).is_err());
    // cospectral deletions are not enough for the covered-components swap
    let (g, occ) = graft_with_occurrence(&Graph::empty(1), 0, &pair.rooted_at_v().unwrap()).unwrap();
    assert!(xi_swap(&g, &occ, &pair).is_err());
}

#[test]
fn xi_swap_certifies_covered_tutte_and_matching() {
    let pair = smallest_pseudosimilar();
    let (g, occ) = graft_with_occurrence(&Graph::empty(1), 0, &pair.rooted_at_v().unwrap()).unwrap();
    for id in [PolynomialId::CoveredC, PolynomialId::Xi, PolynomialId::Tutte, PolynomialId::MatchM] {
        let c = xi_swap_for(&g, &occ, &pair, id).unwrap();
        assert!(c.equal, "{id}");
    }
    let a = xi_swap(&g, &occ, &pair).unwrap();
    let b = schwenk_swap(&g, &occ, &pair).unwrap();
    assert!(b.equal);
    assert_eq!(a.nonisomorphic, b.nonisomorphic);
}

#[test]
fn xi_swap_on_random_forest_hosts() {
    let pair = smallest_pseudosimilar();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let host = random_forest(&mut rng, 10);
        let attach = rng.gen_range(0..host.order());
        let (g, occ) = graft_with_occurrence(&host, attach, &pair.rooted_at_v().unwrap()).unwrap();
        let c = xi_swap(&g, &occ, &pair).unwrap();
        assert!(c.equal, "{c:?}");
        let (g, h) = c.graphs().unwrap();
        assert_eq!(similarity_key(&g), similarity_key(&h));
    }
}

#[test]
fn stem_toggle_preserves_dominating_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut applied = 0;
    while applied < 100 {
        let g = random_graph(&mut rng, 12, 0.2);
        let Some(c) = stem_toggle(&g).unwrap() else { continue };
        applied += 1;
        assert!(c.equal);
        let (g, h) = c.graphs().unwrap();
        let (mut a, mut b) = (dominating_sets(&g).unwrap(), dominating_sets(&h).unwrap());
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        // re-adding the deleted edge restores g
        let (x, y) = *g.edges().iter().find(|e| !h.has_edge(e.0, e.1)).unwrap();
        assert!(are_isomorphic(&h.add_edge(x, y).unwrap(), &g));
    }
}

#[test]
fn p5_graft_on_random_forest_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for root in 1..=3 {
        let (g, occ) = graft_p5(&Graph::empty(1), 0, root).unwrap();
        let c = p5_graft_swap(&g, &occ).unwrap();
        assert!(c.equal && c.nonisomorphic);
    }
    for _ in 0..100 {
        let host = random_forest(&mut rng, 15);
        let attach = rng.gen_range(0..host.order());
        let root = rng.gen_range(1..=3);
        let (g, occ) = graft_p5(&host, attach, root).unwrap();
        let c = p5_graft_swap(&g, &occ).unwrap();
        assert!(c.equal && c.nonisomorphic, "{c:?}");
        let (g, h) = c.graphs().unwrap();
        assert_eq!(h.size(), g.size() + 1);
        // toggling the new stem edge back gives a Dom-mate again
        let back = stem_toggle(&h).unwrap().unwrap();
        assert!(back.equal);
    }
}

#[test]
fn clique_root_swap_examples() {
    let end = RootedPendant::new(Graph::path(3), 0).unwrap();
    let (g, occ) = graft_with_occurrence(&Graph::complete(3), 0, &end).unwrap();
    let c = clique_root_swap(&g, &occ).unwrap();
    assert!(c.equal && c.nonisomorphic);

    // host K1: a path and a star on four vertices
    let (g, occ) = graft_with_occurrence(&Graph::empty(1), 0, &end).unwrap();
    let c = clique_root_swap(&g, &occ).unwrap();
    let (g, h) = c.graphs().unwrap();
    assert!(are_isomorphic(&g, &Graph::path(4)) && are_isomorphic(&h, &Graph::star(3)));
    assert!(c.equal && c.nonisomorphic);
    // the independence polynomial separates them
    assert!(!verify_mate(&g, &h, PolynomialId::Indep).unwrap().equal);

    let mid = RootedPendant::new(Graph::path(3), 1).unwrap();
    let (g, occ) = graft_with_occurrence(&Graph::complete(3), 0, &mid).unwrap();
    assert!(clique_root_swap(&g, &occ).is_err());
}

#[test]
fn clique_root_swap_on_random_hosts() {
    let end = RootedPendant::new(Graph::path(3), 0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..100 {
        let host = random_graph(&mut rng, 10, 0.4);
        let attach = rng.gen_range(0..host.order());
        let (g, occ) = graft_with_occurrence(&host, attach, &end).unwrap();
        let c = clique_root_swap(&g, &occ).unwrap();
        assert!(c.equal, "{c:?}");
        let (g, h) = c.graphs().unwrap();
        assert_eq!(similarity_key(&g), similarity_key(&h));
    }
}

#[test]
fn laplacian_candidates_hold_on_their_hosts() {
    let found = laplacian_swap_search(6, 1).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for c in &found {
        assert!(seen.insert((c.gadget.clone(), c.u, c.v)));
        assert_eq!(c.hosts.len(), LAPLACIAN_HOSTS);
        let s = graphpoly::format::parse_line(&c.gadget).unwrap();
        let (pu, pv) = (RootedPendant::new(s.clone(), c.u).unwrap(), RootedPendant::new(s, c.v).unwrap());
        for (h, a) in &c.hosts {
            let host = graphpoly::format::parse_line(h).unwrap();
            let gu = graphpoly::pendant::graft_pendant(&host, *a, &pu).unwrap();
            let gv = graphpoly::pendant::graft_pendant(&host, *a, &pv).unwrap();
            assert!(verify_mate(&gu, &gv, PolynomialId::CharLap).unwrap().equal);
        }
    }
    assert_eq!(found, laplacian_swap_search(6, 1).unwrap());
}
