//! Matching counts and the three matching polynomials built from them.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{integer, Polynomial};

/// `m[k]` is the number of `k`-edge matchings (parallel edges count
/// separately; loops never belong to a matching).
pub fn matching_counts(g: &Graph) -> Result<Vec<u128>> {
    let n = g.order();
    if n > 64 {
        return Err(Error::resource("matching counts are limited to order 64"));
    }
    let mut mult = vec![vec![0u128; n]; n];
    for &(a, b) in g.edges() {
        if a != b {
            mult[a][b] += 1;
            mult[b][a] += 1;
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, Vec<u128>> = HashMap::new();
    let mut counts = count(full, &mult, &mut memo);
    counts.resize(n / 2 + 1, 0);
    Ok(counts)
}

/// Edge recursion on the lowest vertex `v` of `s`: either `v` is unmatched,
/// or it is matched to some neighbour `u`.
fn count(s: u64, mult: &[Vec<u128>], memo: &mut HashMap<u64, Vec<u128>>) -> Vec<u128> {
    if s == 0 {
        return vec![1];
    }
    if let Some(c) = memo.get(&s) {
        return c.clone();
    }
    let v = s.trailing_zeros() as usize;
    let rest = s & !(1 << v);
    let mut out = count(rest, mult, memo);
    let mut r = rest;
    while r != 0 {
        let u = r.trailing_zeros() as usize;
        r &= r - 1;
        if mult[v][u] == 0 {
            continue;
        }
        let sub = count(rest & !(1 << u), mult, memo);
        if out.len() < sub.len() + 1 {
            out.resize(sub.len() + 1, 0);
        }
        for (k, c) in sub.iter().enumerate() {
            out[k + 1] += mult[v][u] * c;
        }
    }
    memo.insert(s, out.clone());
    out
}

/// `mu(G; x) = sum (-1)^k m_k x^(n - 2k)`.
pub fn matching_mu(g: &Graph) -> Result<Polynomial> {
    let n = g.order() as u32;
    let m = matching_counts(g)?;
    Ok(Polynomial::from_terms(
        &["x"],
        m.iter().enumerate().map(|(k, &c)| {
            let c = integer(c);
            (vec![n - 2 * k as u32], if k % 2 == 1 { -c } else { c })
        }),
    ))
}

/// `g(G; x) = sum m_k x^k`.
pub fn matching_g(g: &Graph) -> Result<Polynomial> {
    Ok(Polynomial::from_univariate("x", &matching_counts(g)?))
}

/// `M(G; w1, w2) = sum m_k w1^(n - 2k) w2^k`.
pub fn matching_m(g: &Graph) -> Result<Polynomial> {
    let n = g.order() as u32;
    let m = matching_counts(g)?;
    Ok(Polynomial::from_terms(
        &["w1", "w2"],
        m.iter().enumerate().map(|(k, &c)| (vec![n - 2 * k as u32, k as u32], integer(c))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_and_edgeless() {
        let c4 = Graph::cycle(4);
        assert_eq!(matching_counts(&c4).unwrap(), vec![1, 4, 2]);
        assert_eq!(matching_g(&c4).unwrap(), p("1 + 4x + 2x^2"));
        assert_eq!(matching_mu(&c4).unwrap(), p("x^4 - 4x^2 + 2"));
        for n in 0..5 {
            assert_eq!(matching_g(&Graph::empty(n)).unwrap(), p("1"));
            assert_eq!(matching_mu(&Graph::empty(n)).unwrap(), Polynomial::monomial("x", n as u32));
        }
        assert_eq!(matching_m(&Graph::complete(2)).unwrap(), p("w1^2 + w2"));
    }

    #[test]
    fn complete_graph_perfect_matchings() {
        // (2k - 1)!! perfect matchings in K_2k
        assert_eq!(*matching_counts(&Graph::complete(8)).unwrap().last().unwrap(), 105);
        assert_eq!(matching_counts(&Graph::complete(5)).unwrap(), vec![1, 10, 15]);
    }

    #[test]
    fn parallel_edges_and_loops() {
        let g = Graph::from_edges_unchecked(3, [(0, 0), (0, 1), (0, 1), (1, 2)]);
        assert_eq!(matching_counts(&g).unwrap(), vec![1, 3]);
    }
}
