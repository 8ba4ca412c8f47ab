//! Independence, clique and vertex-cover polynomials.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;

fn require_simple(g: &Graph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::domain("independence-type polynomials are defined here for simple graphs"));
    }
    if g.order() > 64 {
        return Err(Error::resource("independence-type polynomials are limited to order 64"));
    }
    Ok(())
}

/// `i[k]` is the number of independent `k`-sets.
pub fn independent_set_counts(g: &Graph) -> Result<Vec<u128>> {
    require_simple(g)?;
    let n = g.order();
    let nb = g.neighbor_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(count(full, &nb, &mut memo))
}

/// `In(S) = In(S - v) + x In(S - N[v])` on the lowest vertex `v` of `S`.
fn count(s: u64, nb: &[u64], memo: &mut HashMap<u64, Vec<u128>>) -> Vec<u128> {
    if s == 0 {
        return vec![1];
    }
    if let Some(c) = memo.get(&s) {
        return c.clone();
    }
    let v = s.trailing_zeros() as usize;
    let mut out = count(s & !(1 << v), nb, memo);
    let with = count(s & !(1 << v) & !nb[v], nb, memo);
    if out.len() < with.len() + 1 {
        out.resize(with.len() + 1, 0);
    }
    for (k, c) in with.iter().enumerate() {
        out[k + 1] += c;
    }
    memo.insert(s, out.clone());
    out
}

pub fn independence_poly(g: &Graph) -> Result<Polynomial> {
    Ok(Polynomial::from_univariate("x", &independent_set_counts(g)?))
}

/// `Cl(G) = In(complement of G)`.
pub fn clique_poly(g: &Graph) -> Result<Polynomial> {
    require_simple(g)?;
    independence_poly(&g.complement())
}

/// `VC(G; x) = x^n In(G; 1/x)`.
pub fn vertex_cover_poly(g: &Graph) -> Result<Polynomial> {
    independence_poly(g)?.reversed("x", g.order() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(independence_poly(&Graph::path(3)).unwrap(), p("1 + 3x + x^2"));
        assert_eq!(independence_poly(&Graph::empty(4)).unwrap(), p("(1+x)^4"));
        assert_eq!(clique_poly(&Graph::complete(3)).unwrap(), p("(1+x)^3"));
        assert_eq!(vertex_cover_poly(&Graph::complete(2)).unwrap(), p("x^2 + 2x"));
        assert_eq!(independence_poly(&Graph::empty(0)).unwrap(), p("1"));
    }

    #[test]
    fn direct_clique_listing_agrees() {
        let g = Graph::from_edges_unchecked(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 3)]);
        let adj = g.adjacency_matrix();
        let mut counts = vec![0u32; 6];
        for s in 0u32..32 {
            let vs: Vec<usize> = (0..5).filter(|v| s >> v & 1 == 1).collect();
            if vs.iter().all(|&a| vs.iter().all(|&b| a == b || adj[a][b] > 0)) {
                counts[vs.len()] += 1;
            }
        }
        assert_eq!(clique_poly(&g).unwrap(), Polynomial::from_univariate("x", &counts));
    }
}
