use std::collections::BTreeMap;

use graphpoly::invariants::charpoly::{adjacency_matrix, bareiss_determinant, char_poly_by_interpolation};
use graphpoly::invariants::covered::c_from_xi;
use graphpoly::invariants::gc::count_generalized_colorings;
use graphpoly::invariants::tutte::{
    chromatic_from_tutte, euler_from_tutte_at, flow_by_expansion, reliability_by_expansion, tutte_by_expansion,
    z_t_identity_at,
};
use graphpoly::invariants::*;
use graphpoly::poly::{integer, rational};
use graphpoly::{enumerate_class, Graph, GraphClass, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn all_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_class(GraphClass::All, n).unwrap()).collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rational(rng.gen_range(-7..8), rng.gen_range(1..5))
}

#[test]
fn covered_equals_xi_substitution_up_to_six() {
    for g in all_graphs(6) {
        let c = covered_components_poly(&g).unwrap();
        assert_eq!(c, c_from_xi(&xi_poly(&g).unwrap()), "{:?}", g.edges());
    }
}

#[test]
fn xi_equality_iff_covered_equality_up_to_six() {
    for n in 1..=6 {
        let gs = enumerate_class(GraphClass::All, n).unwrap();
        let xs: Vec<String> = gs.iter().map(|g| xi_poly(g).unwrap().to_string()).collect();
        let cs: Vec<String> = gs.iter().map(|g| covered_components_poly(g).unwrap().to_string()).collect();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert_eq!(xs[i] == xs[j], cs[i] == cs[j]);
            }
        }
    }
}

#[test]
fn bivariate_matching_is_xi_at_y_zero() {
    for g in all_graphs(6) {
        let xi = xi_poly(&g).unwrap();
        let spec = xi.subs(&[("x", p("w1")), ("y", Polynomial::zero()), ("z", p("w2"))]);
        assert_eq!(matching_m(&g).unwrap(), spec);
    }
}

#[test]
fn matching_defect_equals_spectrum_on_forests() {
    for n in 1..=10 {
        for f in enumerate_class(GraphClass::Forests, n).unwrap() {
            assert_eq!(matching_mu(&f).unwrap(), char_poly_adjacency(&f).unwrap());
        }
    }
}

#[test]
fn independence_is_clique_of_complement_up_to_seven() {
    for g in all_graphs(7) {
        assert_eq!(independence_poly(&g).unwrap(), clique_poly(&g.complement()).unwrap());
        let n = g.order() as u32;
        let reversed = independence_poly(&g).unwrap().reversed("x", n).unwrap();
        assert_eq!(vertex_cover_poly(&g).unwrap(), reversed);
    }
}

#[test]
fn chromatic_two_ways_up_to_seven() {
    for g in all_graphs(7) {
        let t = tutte_poly(&g).unwrap();
        assert_eq!(chromatic_poly(&g).unwrap(), chromatic_from_tutte(&g, &t), "{:?}", g.edges());
    }
}

#[test]
fn tutte_recursion_matches_expansion_up_to_six() {
    for g in all_graphs(6) {
        let t = tutte_poly(&g).unwrap();
        assert_eq!(t, tutte_by_expansion(&g).unwrap());
        assert_eq!(tutte_poly(&g.disjoint_union(&Graph::empty(1))).unwrap(), t);
    }
}

#[test]
fn partition_function_matches_tutte_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let one = BigRational::one();
    for g in all_graphs(6) {
        let t = tutte_poly(&g).unwrap();
        let z = partition_z(&g).unwrap();
        let mut checked = 0;
        while checked < 5 {
            let (x, y) = (random_rational(&mut rng), random_rational(&mut rng));
            if x == one || y == one {
                continue;
            }
            assert!(z_t_identity_at(&g, &t, &z, &x, &y).unwrap());
            checked += 1;
        }
    }
}

#[test]
fn euler_flow_reliability_identities_up_to_six() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in all_graphs(6) {
        let t = tutte_poly(&g).unwrap();
        let e = euler_poly(&g).unwrap();
        let mut checked = 0;
        while checked < 3 {
            let x = random_rational(&mut rng);
            // poles are skipped and resampled
            let Some(v) = euler_from_tutte_at(&g, &t, &x).unwrap() else { continue };
            assert_eq!(e.eval(&[("x", x)]).unwrap(), v, "{:?}", g.edges());
            checked += 1;
        }
        assert_eq!(flow_poly(&g).unwrap(), flow_by_expansion(&g).unwrap());
        assert_eq!(reliability_poly(&g).unwrap(), reliability_by_expansion(&g).unwrap());
    }
}

#[test]
fn generalized_chromatic_specializations() {
    for g in all_graphs(5) {
        let gc = gen_chromatic_poly(&g).unwrap();
        assert_eq!(gc.subs(&[("y", p("x"))]), chromatic_poly(&g).unwrap());
    }
    for g in all_graphs(6) {
        let gc = gen_chromatic_poly(&g).unwrap();
        let via_xi = xi_poly(&g).unwrap().subs(&[("y", Polynomial::int(-1)), ("z", p("x - y"))]);
        assert_eq!(gc, via_xi, "{:?}", g.edges());
    }
}

#[test]
fn generalized_chromatic_counts_are_polynomial_values() {
    let g = Graph::cycle(5);
    let gc = gen_chromatic_poly(&g).unwrap();
    for x in 0..7u64 {
        for y in 0..=x {
            let v = gc.eval(&[("x", integer(x)), ("y", integer(y))]).unwrap();
            assert_eq!(v, BigRational::from(count_generalized_colorings(&g, x, y).unwrap()));
        }
    }
}

#[test]
fn laplacian_constant_term_vanishes_up_to_seven() {
    for g in all_graphs(7) {
        let l = char_poly_laplacian(&g).unwrap();
        assert!(l.coefficient(&[("x", 0)]) == BigRational::from_integer(0.into()), "{l}");
    }
}

#[test]
fn charpoly_algorithms_agree() {
    for g in all_graphs(6) {
        let a = adjacency_matrix(&g);
        assert_eq!(char_poly_adjacency(&g).unwrap(), char_poly_by_interpolation(&a));
        let n = g.order();
        let neg: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
        let c0 = char_poly_adjacency(&g).unwrap().coefficient(&[("x", 0)]);
        assert_eq!(c0, BigRational::from(bareiss_determinant(&neg)), "n = {n}");
    }
}

#[test]
fn char_recurrence_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let g1 = random_graph(&mut rng, 1, 7);
        let g2 = random_graph(&mut rng, 1, 7);
        let (v1, v2) = (rng.gen_range(0..g1.order()), rng.gen_range(0..g2.order()));
        assert!(char_recurrence_check(&g1, v1, &g2, v2).unwrap());
    }
}

#[test]
fn join_identity_for_small_orders_and_random_joins() {
    let small = all_graphs(4);
    for g1 in &small {
        for g2 in &small {
            for v1 in 0..g1.order() {
                for v2 in 0..g2.order() {
                    assert!(crec_join_check(g1, v1, g2, v2).unwrap());
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let g1 = random_graph(&mut rng, 1, 5);
        let g2 = random_graph(&mut rng, 1, 5);
        let (v1, v2) = (rng.gen_range(0..g1.order()), rng.gen_range(0..g2.order()));
        assert!(crec_join_check(&g1, v1, &g2, v2).unwrap());
    }
}

#[test]
fn matching_forms_agree_on_similar_graphs() {
    for n in 1..=6 {
        let gs = enumerate_class(GraphClass::All, n).unwrap();
        let mut groups: BTreeMap<SimilarityKey, Vec<&Graph>> = BTreeMap::new();
        for g in &gs {
            groups.entry(similarity_key(g)).or_default().push(g);
        }
        for members in groups.values() {
            for a in members {
                for b in members {
                    let mu = matching_mu(a).unwrap() == matching_mu(b).unwrap();
                    let m = matching_m(a).unwrap() == matching_m(b).unwrap();
                    assert_eq!(mu, m);
                }
            }
        }
    }
}

/// Path 0-1-2-3-4 with an edge between its stems 1 and 3.
fn p5_hat() -> Graph {
    Graph::from_edges_unchecked(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
}

#[test]
fn incomparability_witnesses() {
    let star = Graph::star(4);
    let c4k1 = Graph::cycle(4).disjoint_union(&Graph::empty(1));
    assert_eq!(char_poly_adjacency(&star).unwrap(), p("x^5 - 4x^3"));
    assert_eq!(char_poly_adjacency(&star).unwrap(), char_poly_adjacency(&c4k1).unwrap());
    assert_ne!(domination_poly(&star).unwrap(), domination_poly(&c4k1).unwrap());

    let path = Graph::path(5);
    assert_eq!(domination_poly(&path).unwrap(), domination_poly(&p5_hat()).unwrap());
    assert_ne!(char_poly_adjacency(&path).unwrap(), char_poly_adjacency(&p5_hat()).unwrap());
    assert_eq!(char_poly_adjacency(&path).unwrap(), p("x^5 - 4x^3 + 3x"));
}

#[test]
fn p5_hat_spectrum_factorization() {
    let expected = -&(&(&p("x") * &p("x^2 - x - 3")) * &p("x^2 + x - 1"));
    let got = char_poly_adjacency(&p5_hat()).unwrap();
    assert!(got == expected || got == -&expected, "{got}");
}

#[test]
fn comparison_report_finds_witnesses() {
    let r = compare_dp(PolynomialId::CharAdj, PolynomialId::Dom, GraphClass::All, 5, false).unwrap();
    assert!(!r.p_below_q() && !r.q_below_p());
    let r = compare_dp(PolynomialId::MatchMu, PolynomialId::MatchM, GraphClass::All, 6, true).unwrap();
    assert!(r.p_below_q() && r.q_below_p());
    assert_eq!(r.unique_p, r.unique_q);
    assert!(r.unique_p_subset_unique_q);
}

#[test]
fn covered_components_refine_tutte() {
    let r = compare_dp(PolynomialId::Tutte, PolynomialId::CoveredC, GraphClass::All, 5, false).unwrap();
    assert!(r.p_below_q() && !r.q_below_p());
    assert!(r.unique_p_subset_unique_q);
    assert!(PolynomialId::Tutte.has_cross_order_mates());
}

#[test]
fn small_oracles() {
    assert_eq!(euler_poly(&Graph::cycle(3)).unwrap(), p("1 + x^3"));
    assert_eq!(flow_poly(&Graph::cycle(3)).unwrap(), p("x - 1"));
    assert_eq!(euler_poly(&Graph::star(4)).unwrap(), p("1"));
    assert_eq!(chromatic_poly(&Graph::path(3)).unwrap(), p("x(x - 1)^2"));
    assert_eq!(independence_poly(&Graph::path(3)).unwrap(), p("1 + 3x + x^2"));
    assert_eq!(clique_poly(&Graph::complete(3)).unwrap(), p("(1 + x)^3"));
    assert_eq!(matching_counts(&Graph::cycle(4)).unwrap(), vec![1, 4, 2]);
    assert_eq!(matching_m(&Graph::complete(2)).unwrap(), p("w1^2 + w2"));
    assert_eq!(char_poly_laplacian(&Graph::complete(2)).unwrap(), p("x^2 - 2x"));
    for n in 0..5 {
        assert_eq!(matching_g(&Graph::empty(n)).unwrap(), p("1"));
        assert_eq!(independence_poly(&Graph::empty(n)).unwrap(), p("1 + x").pow(n as u32));
    }
    let one = integer(1u32);
    assert_eq!(domination_poly(&Graph::star(4)).unwrap().eval(&[("x", -one)]).unwrap(), integer(1u32));
}

fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.45) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges_unchecked(n, edges)
}
