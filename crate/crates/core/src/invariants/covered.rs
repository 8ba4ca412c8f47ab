//! The covered-components polynomial `C(G; x, y, z)` and the trivariate
//! edge-elimination polynomial `xi(G; x, y, z)`.
//!
//! `xi` is computed by its deletion/contraction/extraction recurrence with
//! memoization on canonical forms of connected components. Non-loop edges are
//! eliminated first; a vertex left carrying only loops is reduced by
//! `xi(G) = (1 + y) xi(G - e) + z xi(G - v)` for a loop `e` at `v`, which is the
//! rule forced by `C(G) = xi(G; x, y, xyz - xy)` on multigraphs.

use std::sync::OnceLock;

use crate::canon::{canonical_form, CanonKey, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::memo::Memo;
use crate::invariants::subsets::{subset_statistics, MAX_EXPANSION_SIZE};
use crate::poly::{integer, Polynomial};

/// `C` by direct expansion over edge subsets, componentwise. Components
/// with more than the expansion budget of edges go through `xi` instead.
pub fn covered_components_poly(g: &Graph) -> Result<Polynomial> {
    let mut acc = Polynomial::one();
    for c in g.split_components() {
        let part = if c.size() <= MAX_EXPANSION_SIZE { covered_by_expansion(&c)? } else { covered_via_xi(&c)? };
        acc = &acc * &part;
    }
    Ok(acc)
}

/// `C` by expansion over all edge subsets of `g` (at most 24 edges).
pub fn covered_by_expansion(g: &Graph) -> Result<Polynomial> {
    let stats = subset_statistics(g)?;
    Ok(Polynomial::from_terms(
        &["x", "y", "z"],
        stats.entries().map(|((k, a, c), n)| (vec![k as u32, a as u32, c as u32], integer(n))),
    ))
}

/// `C(G; x, y, z) = xi(G; x, y, xyz - xy)`.
pub fn covered_via_xi(g: &Graph) -> Result<Polynomial> {
    Ok(c_from_xi(&xi_poly(g)?))
}

pub fn c_from_xi(xi: &Polynomial) -> Polynomial {
    let sub: Polynomial = "x*y*z - x*y".parse().expect("valid literal");
    xi.subs(&[("z", sub)])
}

/// Inverse change of variables, `xi(G; x, y, z) = C(G; x, y, 1 + z/(xy))`,
/// cleared of the negative powers it introduces (the result is a polynomial).
pub fn xi_from_c(c: &Polynomial) -> Result<Polynomial> {
    // C = sum c_{k,a,j} x^k y^a z^j; each z^j becomes (xy + z)^j / (xy)^j and
    // every term with j > 0 has k >= j and a >= j.
    let mut acc = Polynomial::zero();
    let vars = c.variables().to_vec();
    let idx = |name: &str| vars.iter().position(|v| v == name);
    let (ix, iy, iz) = (idx("x"), idx("y"), idx("z"));
    if vars.iter().any(|v| v != "x" && v != "y" && v != "z") {
        return Err(Error::domain("expected a polynomial in x, y, z"));
    }
    let xy_plus_z: Polynomial = "x*y + z".parse().expect("valid literal");
    for (exps, coef) in c.terms() {
        let get = |i: Option<usize>| i.map_or(0, |i| exps[i]);
        let (k, a, j) = (get(ix), get(iy), get(iz));
        if j > k || j > a {
            return Err(Error::Consistency("covered components exceed components or edges".into()));
        }
        let term = &(&Polynomial::monomial("x", k - j) * &Polynomial::monomial("y", a - j)) * &xy_plus_z.pow(j);
        acc = &acc + &term.scale(coef);
    }
    Ok(acc)
}

fn xi_memo() -> &'static Memo<CanonKey, Polynomial> {
    static MEMO: OnceLock<Memo<CanonKey, Polynomial>> = OnceLock::new();
    MEMO.get_or_init(|| Memo::new(400_000))
}

/// `xi(G; x, y, z)` for a multigraph.
pub fn xi_poly(g: &Graph) -> Result<Polynomial> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::resource(format!("xi recursion is limited to order {MAX_CANON_ORDER}")));
    }
    Ok(xi_rec(g))
}

fn xi_rec(g: &Graph) -> Polynomial {
    g.split_components().iter().map(xi_connected).product()
}

fn xi_connected(g: &Graph) -> Polynomial {
    let n = g.order();
    if n == 0 {
        return Polynomial::one();
    }
    if g.size() == 0 {
        return Polynomial::var("x");
    }
    let key = canonical_form(g).key;
    if let Some(p) = xi_memo().get(&key) {
        return p;
    }
    let h = key.graph();
    let value = match pick_non_loop_edge(&h) {
        Some((u, v)) => {
            let del = xi_rec(&h.delete_edge(u, v).expect("edge present"));
            let con = xi_rec(&h.contract_edge(u, v).expect("non-loop edge"));
            let ext = xi_rec(&h.extract_edge(u, v).expect("edge present"));
            &(&del + &(&Polynomial::var("y") * &con)) + &(&Polynomial::var("z") * &ext)
        }
        None => {
            // a single vertex carrying loops
            let rest = xi_rec(&h.delete_edge(0, 0).expect("loop present"));
            let one_plus_y: Polynomial = "1 + y".parse().expect("valid literal");
            &(&one_plus_y * &rest) + &Polynomial::var("z")
        }
    };
    xi_memo().insert(key, value.clone());
    value
}

/// A non-loop edge at a vertex of least degree, so that extraction and
/// contraction shrink the graph quickly.
fn pick_non_loop_edge(g: &Graph) -> Option<(usize, usize)> {
    let deg = g.degrees();
    g.edges().iter().copied().filter(|(a, b)| a != b).min_by_key(|&(a, b)| (deg[a].min(deg[b]), deg[a].max(deg[b])))
}

/// Checks the one-point-join identity for `C`, multiplied through by `xz`:
/// `xz C(H) = C1 C2 + x(z - 1)(C1 D2 + D1 C2) + x^2 (1 - z) D1 D2`
/// where `Ci = C(Gi)`, `Di = C(Gi - vi)` and `H` identifies `v1` with `v2`.
pub fn crec_join_check(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<bool> {
    let h = g1.one_point_join(v1, g2, v2)?;
    let c = |g: &Graph| covered_components_poly(g);
    let (c1, c2) = (c(g1)?, c(g2)?);
    let (d1, d2) = (c(&g1.delete_vertex(v1))?, c(&g2.delete_vertex(v2))?);
    let p = |s: &str| -> Polynomial { s.parse().expect("valid literal") };
    let lhs = &p("x*z") * &c(&h)?;
    let rhs = &(&(&c1 * &c2) + &(&p("x*z - x") * &(&(&c1 * &d2) + &(&d1 * &c2)))) + &(&p("x^2 - x^2*z") * &(&d1 * &d2));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_covered_values() {
        assert_eq!(covered_components_poly(&Graph::empty(1)).unwrap(), p("x"));
        assert_eq!(covered_components_poly(&Graph::complete(2)).unwrap(), p("x^2 + x*y*z"));
        assert_eq!(covered_components_poly(&Graph::path(3)).unwrap(), p("x^3 + 2x^2*y*z + x*y^2*z"));
    }

    #[test]
    fn small_xi_values() {
        assert_eq!(xi_poly(&Graph::complete(2)).unwrap(), p("x^2 + x*y + z"));
        assert_eq!(c_from_xi(&xi_poly(&Graph::complete(2)).unwrap()), p("x^2 + x*y*z"));
        assert_eq!(xi_poly(&Graph::empty(0)).unwrap(), p("1"));
    }

    #[test]
    fn substitution_round_trip_on_multigraphs() {
        let g = Graph::from_edges_unchecked(4, [(0, 0), (0, 1), (0, 1), (1, 2), (2, 0), (2, 3), (3, 3)]);
        let xi = xi_poly(&g).unwrap();
        assert_eq!(c_from_xi(&xi), covered_by_expansion(&g).unwrap());
        assert_eq!(xi_from_c(&covered_by_expansion(&g).unwrap()).unwrap(), xi);
    }

    #[test]
    fn join_identity_small_cases() {
        let k1 = Graph::empty(1);
        let k2 = Graph::complete(2);
        assert!(crec_join_check(&k2, 1, &k2, 0).unwrap());
        assert!(crec_join_check(&k1, 0, &k1, 0).unwrap());
        assert!(crec_join_check(&Graph::complete(3), 0, &Graph::path(3), 1).unwrap());
    }
}
