//! Constructions of graphs sharing a polynomial, the tree searches that
//! supply their gadgets, and certificates recording what was checked.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{are_isomorphic, canonical_form, canonical_form_colored};
use crate::classes::{enumerate_shared, GraphClass};
use crate::error::{Error, Result};
use crate::format::write_line;
use crate::graph::Graph;
use crate::invariants::domination::stems;
use crate::invariants::{char_poly_adjacency, char_poly_laplacian, PolynomialId};
use crate::pendant::{graft_pendant, replace_pendant, PendantOccurrence, RootedPendant};
use crate::poly::Polynomial;

pub const MAX_PSEUDOSIMILAR_ORDER: usize = 12;
pub const MAX_LAPLACIAN_SEARCH_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    SchwenkSwap,
    StemToggle,
    P5Graft,
    XiSwap,
    CliqueRootSwap,
    Search,
    /// A pair supplied by the caller and only checked.
    Given,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::SchwenkSwap,
        Construction::StemToggle,
        Construction::P5Graft,
        Construction::XiSwap,
        Construction::CliqueRootSwap,
        Construction::Search,
        Construction::Given,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::SchwenkSwap => "schwenk_swap",
            Construction::StemToggle => "stem_toggle",
            Construction::P5Graft => "p5_graft",
            Construction::XiSwap => "xi_swap",
            Construction::CliqueRootSwap => "clique_root_swap",
            Construction::Search => "search",
            Construction::Given => "given",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Construction::ALL.iter().map(|c| c.name()).collect();
            Error::domain(format!("unknown construction '{s}' (expected one of: {})", names.join(", ")))
        })
    }
}

/// Outcome of comparing `P(g)` with `P(h)`. The pair is a mate pair when
/// both flags are set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MateCertificate {
    pub construction: Construction,
    /// graph6 (sparse6 for multigraphs).
    pub g: String,
    pub h: String,
    pub polynomial_id: PolynomialId,
    pub equal: bool,
    pub nonisomorphic: bool,
    /// `P(g)`.
    pub polynomial: String,
}

impl MateCertificate {
    pub fn is_mate(&self) -> bool {
        self.equal && self.nonisomorphic
    }

    pub fn graphs(&self) -> Result<(Graph, Graph)> {
        Ok((crate::format::parse_line(&self.g)?, crate::format::parse_line(&self.h)?))
    }
}

fn certify(construction: Construction, g: &Graph, h: &Graph, id: PolynomialId) -> Result<MateCertificate> {
    let pg = id.compute(g)?;
    let ph = id.compute(h)?;
    Ok(MateCertificate {
        construction,
        g: write_line(g),
        h: write_line(h),
        polynomial_id: id,
        equal: pg == ph,
        nonisomorphic: !are_isomorphic(g, h),
        polynomial: pg.to_string(),
    })
}

/// Exact comparison of `P(g)` and `P(h)` plus an isomorphism test.
pub fn verify_mate(g: &Graph, h: &Graph, id: PolynomialId) -> Result<MateCertificate> {
    certify(Construction::Given, g, h, id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// `T - u` and `T - v` are isomorphic.
    Pseudosimilar,
    /// `T - u` and `T - v` are cospectral but not isomorphic.
    CospectralDeletion,
}

/// Vertices `u`, `v` of a tree in different automorphism orbits whose
/// deletions agree (up to isomorphism or up to spectrum, per `kind`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudosimilarPair {
    pub tree: Graph,
    pub u: usize,
    pub v: usize,
    pub kind: PairKind,
}

impl PseudosimilarPair {
    /// Characteristic polynomial of `tree - v` (equal to that of `tree - u`).
    pub fn deleted_char_poly(&self) -> Result<Polynomial> {
        char_poly_adjacency(&self.tree.delete_vertex(self.v))
    }

    pub fn rooted_at_v(&self) -> Result<RootedPendant> {
        RootedPendant::new(self.tree.clone(), self.v)
    }

    pub fn rooted_at_u(&self) -> Result<RootedPendant> {
        RootedPendant::new(self.tree.clone(), self.u)
    }

    /// Rechecks the defining conditions from scratch.
    pub fn check(&self) -> Result<bool> {
        let t = &self.tree;
        if !t.is_tree() || self.u == self.v || self.u >= t.order() || self.v >= t.order() {
            return Ok(false);
        }
        let orbits = canonical_form(t).orbits();
        if orbits[self.u] == orbits[self.v] {
            return Ok(false);
        }
        let (du, dv) = (t.delete_vertex(self.u), t.delete_vertex(self.v));
        Ok(match self.kind {
            PairKind::Pseudosimilar => are_isomorphic(&du, &dv),
            PairKind::CospectralDeletion => {
                !are_isomorphic(&du, &dv) && char_poly_adjacency(&du)? == char_poly_adjacency(&dv)?
            }
        })
    }
}

/// Every vertex pair, over all trees of order at most `max_order`, whose
/// deletions are isomorphic or cospectral while the vertices lie in different
/// orbits. One pair is reported per pair of orbits.
pub fn find_pseudosimilar_trees(max_order: usize) -> Result<Vec<PseudosimilarPair>> {
    if max_order > MAX_PSEUDOSIMILAR_ORDER {
        return Err(Error::domain(format!("pseudosimilar tree search is limited to order {MAX_PSEUDOSIMILAR_ORDER}")));
    }
    let mut out = Vec::new();
    for n in 3..=max_order {
        let trees = enumerate_shared(GraphClass::Trees, n)?;
        let found: Vec<Vec<PseudosimilarPair>> = trees.par_iter().map(pairs_in_tree).collect::<Result<_>>()?;
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

fn pairs_in_tree(t: &Graph) -> Result<Vec<PseudosimilarPair>> {
    let orbits = canonical_form(t).orbits();
    let reps: Vec<usize> = (0..t.order()).filter(|&v| orbits[v] == v).collect();
    let deleted: Vec<(Graph, Polynomial)> = reps
        .iter()
        .map(|&v| {
            let d = t.delete_vertex(v);
            let key = canonical_form(&d).key.graph();
            Ok((key, char_poly_adjacency(&d)?))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let kind = if deleted[i].0 == deleted[j].0 {
                PairKind::Pseudosimilar
            } else if deleted[i].1 == deleted[j].1 {
                PairKind::CospectralDeletion
            } else {
                continue;
            };
            out.push(PseudosimilarPair { tree: t.clone(), u: reps[i], v: reps[j], kind });
        }
    }
    Ok(out)
}

/// Whether `occ` in `g` is a copy of `p` with the roots corresponding.
pub fn occurrence_matches(g: &Graph, occ: &PendantOccurrence, p: &RootedPendant) -> bool {
    if !occ.is_valid_in(g) || occ.witness.len() != p.order() {
        return false;
    }
    let sub = g.induced_subgraph(&occ.witness);
    let root = occ.witness.binary_search(&occ.root).expect("root lies in the witness set");
    let mark = |n: usize, r: usize| (0..n).map(|v| usize::from(v == r)).collect::<Vec<_>>();
    canonical_form_colored(&sub, &mark(sub.order(), root)).key
        == canonical_form_colored(p.graph(), &mark(p.order(), p.root())).key
}

/// Grafts `p` onto `host` at `attach`, returning the graph and the occurrence
/// of `p` it creates.
pub fn graft_with_occurrence(host: &Graph, attach: usize, p: &RootedPendant) -> Result<(Graph, PendantOccurrence)> {
    let g = graft_pendant(host, attach, p)?;
    let base = host.order();
    let occ = PendantOccurrence { witness: (base..base + p.order()).collect(), root: base + p.root(), attachment: attach };
    Ok((g, occ))
}

fn reroot_swap(g: &Graph, occ: &PendantOccurrence, pair: &PseudosimilarPair) -> Result<Graph> {
    if !occurrence_matches(g, occ, &pair.rooted_at_v()?) {
        return Err(Error::domain("the occurrence is not a copy of the pair's tree rooted at v"));
    }
    replace_pendant(g, occ, &pair.rooted_at_u()?)
}

/// Re-roots a pendant tree from `v` to `u`; the characteristic polynomial is
/// preserved whenever `T - u` and `T - v` are cospectral.
pub fn schwenk_swap(g: &Graph, occ: &PendantOccurrence, pair: &PseudosimilarPair) -> Result<MateCertificate> {
    let h = reroot_swap(g, occ, pair)?;
    certify(Construction::SchwenkSwap, g, &h, PolynomialId::CharAdj)
}

/// As [`schwenk_swap`], certified for the covered-components polynomial. This
/// needs `T - u` and `T - v` isomorphic, not merely cospectral.
pub fn xi_swap(g: &Graph, occ: &PendantOccurrence, pair: &PseudosimilarPair) -> Result<MateCertificate> {
    xi_swap_for(g, occ, pair, PolynomialId::CoveredC)
}

/// [`xi_swap`] certified for another polynomial, e.g. a specialisation of `C`.
pub fn xi_swap_for(g: &Graph, occ: &PendantOccurrence, pair: &PseudosimilarPair, id: PolynomialId) -> Result<MateCertificate> {
    if pair.kind != PairKind::Pseudosimilar {
        return Err(Error::domain("xi_swap needs a pair whose vertex-deleted trees are isomorphic"));
    }
    let h = reroot_swap(g, occ, pair)?;
    certify(Construction::XiSwap, g, &h, id)
}

/// Deletes the edge between the first pair of adjacent stems that each have
/// a leaf other than the partner stem (in `K2` each end is the other's leaf,
/// and deleting the edge changes the dominating sets). `None` when there is
/// no such pair.
pub fn stem_toggle(g: &Graph) -> Result<Option<MateCertificate>> {
    if !g.is_simple() {
        return Err(Error::domain("stem_toggle expects a simple graph"));
    }
    let deg = g.degrees();
    let has_leaf_besides = |a: usize, b: usize| g.neighbors(a).iter().any(|&w| w != b && deg[w] == 1);
    let s = stems(g);
    for (i, &a) in s.iter().enumerate() {
        let partner = s[i + 1..].iter().find(|&&b| g.has_edge(a, b) && has_leaf_besides(a, b) && has_leaf_besides(b, a));
        if let Some(&b) = partner {
            let h = g.delete_edge(a, b)?;
            return certify(Construction::StemToggle, g, &h, PolynomialId::Dom).map(Some);
        }
    }
    Ok(None)
}

/// The pendant path's vertices in path order, starting from the end closer
/// to index 0 of the witness list.
fn path_order(g: &Graph, occ: &PendantOccurrence) -> Option<Vec<usize>> {
    let sub = g.induced_subgraph(&occ.witness);
    if !sub.is_tree() || sub.degrees().iter().any(|&d| d > 2) {
        return None;
    }
    let start = (0..sub.order()).find(|&v| sub.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = sub.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order.into_iter().map(|i| occ.witness[i]).collect())
}

/// Adds the edge between the two stems of a pendant path on five vertices.
/// The root must not be an end of the path.
pub fn p5_graft_swap(g: &Graph, occ: &PendantOccurrence) -> Result<MateCertificate> {
    if !g.is_simple() || !occ.is_valid_in(g) || occ.witness.len() != 5 {
        return Err(Error::domain("expected a pendant path on five vertices"));
    }
    let path = path_order(g, occ).ok_or_else(|| Error::domain("the pendant is not a path on five vertices"))?;
    let pos = path.iter().position(|&v| v == occ.root).expect("root is on the path");
    if pos == 0 || pos == 4 {
        return Err(Error::domain("the path is rooted at an end, so that end is not a leaf"));
    }
    let h = g.add_edge(path[1], path[3])?;
    certify(Construction::P5Graft, g, &h, PolynomialId::Dom)
}

/// Grafts a path on five vertices, rooted at path vertex `root` (0-based,
/// one of 1, 2, 3), onto `host` at `attach`.
pub fn graft_p5(host: &Graph, attach: usize, root: usize) -> Result<(Graph, PendantOccurrence)> {
    if !(1..=3).contains(&root) {
        return Err(Error::domain("the path must be rooted at one of its three inner vertices"));
    }
    graft_with_occurrence(host, attach, &RootedPendant::new(Graph::path(5), root)?)
}

/// Re-roots a pendant path on three vertices from an end to its middle.
pub fn clique_root_swap(g: &Graph, occ: &PendantOccurrence) -> Result<MateCertificate> {
    let end = RootedPendant::new(Graph::path(3), 0)?;
    if !g.is_simple() || !occurrence_matches(g, occ, &end) {
        return Err(Error::domain("expected a pendant path on three vertices rooted at an end"));
    }
    let h = replace_pendant(g, occ, &RootedPendant::new(Graph::path(3), 1)?)?;
    certify(Construction::CliqueRootSwap, g, &h, PolynomialId::Clique)
}

/// Evidence for a candidate Laplacian re-rooting gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaplacianCandidate {
    /// graph6 of the gadget.
    pub gadget: String,
    pub u: usize,
    pub v: usize,
    pub is_tree: bool,
    /// Hosts (graph6, attachment) on which both re-rootings have equal
    /// Laplacian characteristic polynomials.
    pub hosts: Vec<(String, usize)>,
    /// Hosts where the two grafted graphs are also non-isomorphic.
    pub nonisomorphic_hosts: usize,
}

pub const LAPLACIAN_HOSTS: usize = 50;

fn random_host(rng: &mut ChaCha8Rng) -> (Graph, usize) {
    let n = rng.gen_range(1..=6);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.4) {
                edges.push((a, b));
            }
        }
    }
    let attach = rng.gen_range(0..n);
    (Graph::from_edges_unchecked(n, edges), attach)
}

/// Searches trees, then connected graphs of order at most 7, for vertex
/// pairs whose re-rooting preserves the Laplacian characteristic polynomial
/// on a fixed battery of random hosts. May well return nothing.
pub fn laplacian_swap_search(max_order: usize, seed: u64) -> Result<Vec<LaplacianCandidate>> {
    if max_order > MAX_LAPLACIAN_SEARCH_ORDER {
        return Err(Error::domain(format!("Laplacian swap search is limited to order {MAX_LAPLACIAN_SEARCH_ORDER}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hosts: Vec<(Graph, usize)> = (0..LAPLACIAN_HOSTS).map(|_| random_host(&mut rng)).collect();
    let mut gadgets: Vec<Graph> = Vec::new();
    for n in 2..=max_order {
        gadgets.extend(enumerate_shared(GraphClass::Trees, n)?.iter().cloned());
    }
    for n in 3..=max_order.min(7) {
        gadgets.extend(enumerate_shared(GraphClass::All, n)?.iter().filter(|g| g.is_connected() && !g.is_tree()).cloned());
    }
    let found: Vec<Vec<LaplacianCandidate>> =
        gadgets.par_iter().map(|s| laplacian_candidates(s, &hosts)).collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

fn laplacian_candidates(s: &Graph, hosts: &[(Graph, usize)]) -> Result<Vec<LaplacianCandidate>> {
    let orbits = canonical_form(s).orbits();
    let reps: Vec<usize> = (0..s.order()).filter(|&v| orbits[v] == v).collect();
    let mut out = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let (pu, pv) = (RootedPendant::new(s.clone(), reps[i])?, RootedPendant::new(s.clone(), reps[j])?);
            let mut nonisomorphic = 0;
            let mut ok = true;
            for (host, attach) in hosts {
                let gu = graft_pendant(host, *attach, &pu)?;
                let gv = graft_pendant(host, *attach, &pv)?;
                if char_poly_laplacian(&gu)? != char_poly_laplacian(&gv)? {
                    ok = false;
                    break;
                }
                nonisomorphic += usize::from(!are_isomorphic(&gu, &gv));
            }
            if ok {
                out.push(LaplacianCandidate {
                    gadget: write_line(s),
                    u: reps[i],
                    v: reps[j],
                    is_tree: s.is_tree(),
                    hosts: hosts.iter().map(|(h, a)| (write_line(h), *a)).collect(),
                    nonisomorphic_hosts: nonisomorphic,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5_hat() -> Graph {
        Graph::from_edges_unchecked(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    }

    #[test]
    fn verify_mate_examples() {
        let c = verify_mate(&Graph::path(5), &p5_hat(), PolynomialId::Dom).unwrap();
        assert!(c.equal && c.nonisomorphic);
        let c = verify_mate(&Graph::path(4), &Graph::path(4), PolynomialId::Tutte).unwrap();
        assert!(c.equal && !c.nonisomorphic && !c.is_mate());
        let c = verify_mate(&Graph::complete(2), &Graph::empty(2), PolynomialId::CharAdj).unwrap();
        assert!(!c.equal);
    }

    #[test]
    fn stem_toggle_on_p5_hat() {
        let c = stem_toggle(&p5_hat()).unwrap().unwrap();
        assert!(c.is_mate());
        let (_, h) = c.graphs().unwrap();
        assert!(are_isomorphic(&h, &Graph::path(5)));
        assert!(stem_toggle(&Graph::path(5)).unwrap().is_none());
        assert!(stem_toggle(&Graph::complete(2)).unwrap().is_none());
    }

    #[test]
    fn p5_graft_rejects_end_roots() {
        assert!(graft_p5(&Graph::empty(1), 0, 0).is_err());
        let (g, occ) = graft_with_occurrence(&Graph::empty(1), 0, &RootedPendant::new(Graph::path(5), 0).unwrap()).unwrap();
        assert!(p5_graft_swap(&g, &occ).is_err());
        let (g, occ) = graft_p5(&Graph::empty(1), 0, 2).unwrap();
        let c = p5_graft_swap(&g, &occ).unwrap();
        assert!(c.is_mate());
    }

    #[test]
    fn certificate_json_shape() {
        let c = verify_mate(&Graph::complete(2), &Graph::complete(2), PolynomialId::Dom).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        for k in ["construction", "g", "h", "polynomial_id", "equal", "nonisomorphic", "polynomial"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        assert_eq!(v["g"], "A_");
        assert_eq!(v["polynomial"], "x^2 + 2*x");
    }
}
