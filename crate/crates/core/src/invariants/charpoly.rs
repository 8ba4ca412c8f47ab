//! Characteristic polynomials of the adjacency and Laplacian matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{integer, interpolate, Polynomial};

fn require_simple(g: &Graph) -> Result<()> {
    if g.is_simple() {
        Ok(())
    } else {
        Err(Error::domain("characteristic polynomials are defined here for simple graphs"))
    }
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<BigInt>> {
    g.adjacency_matrix().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()
}

/// `D - A` for a simple graph.
pub fn laplacian_matrix(g: &Graph) -> Vec<Vec<BigInt>> {
    let mut m = adjacency_matrix(g);
    for (i, row) in m.iter_mut().enumerate() {
        for x in row.iter_mut() {
            *x = -&*x;
        }
        row[i] = BigInt::from(g.degree(i));
    }
    m
}

/// Coefficients of `det(xI - A)`, constant term first, by Berkowitz's
/// division-free algorithm.
pub fn berkowitz(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    // running characteristic polynomial of the leading k x k block, highest degree first
    let mut p = vec![BigInt::one()];
    for k in 0..n {
        // the leading (k+1) x (k+1) block is [[M, col], [row, a_kk]]
        let row = &a[k][..k];
        let col: Vec<BigInt> = (0..k).map(|i| a[i][k].clone()).collect();
        let mut t = Vec::with_capacity(k + 2);
        t.push(BigInt::one());
        t.push(-&a[k][k]);
        let mut v = col;
        for _ in 0..k {
            let dot: BigInt = row.iter().zip(&v).map(|(r, x)| r * x).sum();
            t.push(-dot);
            v = (0..k).map(|i| (0..k).map(|j| &a[i][j] * &v[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(k) {
                *slot += &t[i - j] * &p[j];
            }
        }
        p = next;
    }
    p.reverse();
    p
}

/// Determinant by fraction-free Gaussian elimination.
pub fn bareiss_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(xI - A)` recovered from exact determinants at `x = 0..=n`.
pub fn char_poly_by_interpolation(a: &[Vec<BigInt>]) -> Polynomial {
    let n = a.len();
    let nodes: Vec<_> = (0..=n as i64).map(integer).collect();
    let values: Vec<_> = (0..=n as i64)
        .map(|t| {
            let shifted: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { BigInt::from(t) - &a[i][j] } else { -&a[i][j] }).collect())
                .collect();
            integer(bareiss_determinant(&shifted))
        })
        .collect();
    Polynomial::from_univariate_rational("x", &interpolate(&nodes, &values).expect("distinct integer nodes"))
}

/// Monic `det(xI - A_G)`.
pub fn char_poly_adjacency(g: &Graph) -> Result<Polynomial> {
    require_simple(g)?;
    Ok(Polynomial::from_univariate("x", &berkowitz(&adjacency_matrix(g))))
}

/// Monic `det(xI - L_G)` with `L_G = D_G - A_G`.
pub fn char_poly_laplacian(g: &Graph) -> Result<Polynomial> {
    require_simple(g)?;
    Ok(Polynomial::from_univariate("x", &berkowitz(&laplacian_matrix(g))))
}

/// Checks `P(H) = P(G1) P(G2) - P(G1 - v1) P(G2 - v2)` where `H` joins the
/// two graphs by the edge `v1 v2`.
pub fn char_recurrence_check(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<bool> {
    let h = g1.bridge_join(v1, g2, v2)?;
    let lhs = char_poly_adjacency(&h)?;
    let rhs = &char_poly_adjacency(g1)? * &char_poly_adjacency(g2)?
        - &char_poly_adjacency(&g1.delete_vertex(v1))? * &char_poly_adjacency(&g2.delete_vertex(v2))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_spectra() {
        assert_eq!(char_poly_adjacency(&Graph::path(5)).unwrap(), p("x^5 - 4x^3 + 3x"));
        assert_eq!(char_poly_adjacency(&Graph::empty(1)).unwrap(), p("x"));
        assert_eq!(char_poly_adjacency(&Graph::empty(0)).unwrap(), p("1"));
        assert_eq!(char_poly_adjacency(&Graph::complete(3)).unwrap(), p("(x-2)(x+1)^2"));
        assert_eq!(char_poly_laplacian(&Graph::complete(2)).unwrap(), p("x^2 - 2x"));
        assert_eq!(char_poly_laplacian(&Graph::empty(4)).unwrap(), p("x^4"));
    }

    #[test]
    fn berkowitz_matches_interpolated_determinants() {
        let g = Graph::from_edges_unchecked(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (0, 5)]);
        for m in [adjacency_matrix(&g), laplacian_matrix(&g)] {
            assert_eq!(Polynomial::from_univariate("x", &berkowitz(&m)), char_poly_by_interpolation(&m));
        }
    }

    #[test]
    fn bridge_recurrence_small_cases() {
        let k1 = Graph::empty(1);
        assert!(char_recurrence_check(&k1, 0, &k1, 0).unwrap());
        let k2 = Graph::complete(2);
        assert!(char_recurrence_check(&k2, 0, &k1, 0).unwrap());
        assert!(char_recurrence_check(&k2, 1, &k1, 0).unwrap());
    }

    #[test]
    fn multigraphs_are_rejected() {
        let g = Graph::from_edges_unchecked(2, [(0, 1), (0, 1)]);
        assert!(char_poly_adjacency(&g).is_err());
    }
}
