//! The Tutte polynomial and its relatives: the partition function `Z`, the
//! chromatic, Euler, flow and reliability polynomials.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::canon::{canonical_form, CanonKey, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::memo::Memo;
use crate::invariants::subsets::{eulerian_subset_counts, subset_statistics};
use crate::poly::{integer, Polynomial};

fn p(s: &str) -> Polynomial {
    s.parse().expect("valid literal")
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::resource(format!("deletion-contraction is limited to order {MAX_CANON_ORDER}")));
    }
    Ok(())
}

fn tutte_memo() -> &'static Memo<CanonKey, Polynomial> {
    static MEMO: OnceLock<Memo<CanonKey, Polynomial>> = OnceLock::new();
    MEMO.get_or_init(|| Memo::new(400_000))
}

/// `T(G; x, y)` by deletion-contraction on connected loopless multigraphs,
/// with bridges and parallel classes eliminated in one step.
pub fn tutte_poly(g: &Graph) -> Result<Polynomial> {
    check_order(g)?;
    Ok(tutte_rec(g))
}

fn tutte_rec(g: &Graph) -> Polynomial {
    g.split_components().iter().map(tutte_connected).product()
}

fn without_loops(g: &Graph) -> (Graph, usize) {
    let loops = g.loop_count();
    if loops == 0 {
        return (g.clone(), 0);
    }
    (Graph::from_edges_unchecked(g.order(), g.edges().iter().copied().filter(|(a, b)| a != b)), loops)
}

fn geometric(var: &str, from: u32, to: u32) -> Polynomial {
    (from..to).map(|k| Polynomial::monomial(var, k)).sum()
}

fn tutte_connected(g: &Graph) -> Polynomial {
    let (g, loops) = without_loops(g);
    let loop_factor = Polynomial::monomial("y", loops as u32);
    if g.size() == 0 {
        return loop_factor;
    }
    let key = canonical_form(&g).key;
    if let Some(t) = tutte_memo().get(&key) {
        return &loop_factor * &t;
    }
    let h = key.graph();
    let bridges = h.bridges();
    let value = if let Some(&(u, v)) = bridges.first() {
        &Polynomial::var("x") * &tutte_rec(&h.contract_edge(u, v).expect("non-loop"))
    } else {
        // the heaviest parallel class {u, v} of multiplicity k
        let (u, v) = *h.edges().iter().max_by_key(|&&(a, b)| h.multiplicity(a, b)).expect("has edges");
        let k = h.multiplicity(u, v) as u32;
        let mut rest = h.clone();
        for _ in 0..k {
            rest = rest.delete_edge(u, v).expect("copy present");
        }
        let contracted = tutte_rec(&h.contract_edge(u, v).expect("non-loop").simplify_loops());
        if rest.is_connected() {
            &tutte_rec(&rest) + &(&geometric("y", 0, k) * &contracted)
        } else {
            &(&Polynomial::var("x") + &geometric("y", 1, k)) * &contracted
        }
    };
    tutte_memo().insert(key, value.clone());
    &loop_factor * &value
}

trait DropLoops {
    fn simplify_loops(&self) -> Graph;
}

impl DropLoops for Graph {
    fn simplify_loops(&self) -> Graph {
        without_loops(self).0
    }
}

/// `(x - 1)^r (y - 1)^s`-weighted rank expansion of `T`.
pub fn tutte_by_expansion(g: &Graph) -> Result<Polynomial> {
    let stats = subset_statistics(g)?;
    let n = g.order() as i64;
    let k_e = g.component_count() as i64;
    let mut acc = Polynomial::zero();
    let (xm1, ym1) = (p("x - 1"), p("y - 1"));
    let mut by_exponent: std::collections::BTreeMap<(u32, u32), u64> = Default::default();
    for ((k, a, _), cnt) in stats.entries() {
        let r = (k as i64 - k_e) as u32;
        let s = (k as i64 + a as i64 - n) as u32;
        *by_exponent.entry((r, s)).or_default() += cnt;
    }
    for ((r, s), cnt) in by_exponent {
        acc = &acc + &(&xm1.pow(r) * &ym1.pow(s)).scale(&integer(cnt));
    }
    Ok(acc)
}

/// `Z(G; q, w) = sum over A of q^k(A) w^|A|`.
pub fn partition_z(g: &Graph) -> Result<Polynomial> {
    let stats = subset_statistics(g)?;
    let mut acc: std::collections::BTreeMap<(u32, u32), u64> = Default::default();
    for ((k, a, _), cnt) in stats.entries() {
        *acc.entry((k as u32, a as u32)).or_default() += cnt;
    }
    Ok(Polynomial::from_terms(&["q", "w"], acc.into_iter().map(|((k, a), c)| (vec![k, a], integer(c)))))
}

/// Checks `T(x, y) = (x-1)^(-k) (y-1)^(-n) Z((x-1)(y-1), y-1)` at a point
/// with `x != 1` and `y != 1`.
pub fn z_t_identity_at(g: &Graph, t: &Polynomial, z: &Polynomial, x: &BigRational, y: &BigRational) -> Result<bool> {
    let one = BigRational::one();
    if *x == one || *y == one {
        return Err(Error::domain("the change of variables has a pole at x = 1 or y = 1"));
    }
    let (xm, ym) = (x - &one, y - &one);
    let lhs = t.eval(&[("x", x.clone()), ("y", y.clone())])?;
    let zv = z.eval(&[("q", &xm * &ym), ("w", ym.clone())])?;
    let k = g.component_count() as i32;
    let n = g.order() as i32;
    let rhs = zv * num_traits::pow::pow(xm.recip(), k as usize) * num_traits::pow::pow(ym.recip(), n as usize);
    Ok(lhs == rhs)
}

fn chromatic_memo() -> &'static Memo<CanonKey, Polynomial> {
    static MEMO: OnceLock<Memo<CanonKey, Polynomial>> = OnceLock::new();
    MEMO.get_or_init(|| Memo::new(400_000))
}

/// `chi(G; x)` by deletion-contraction on simple graphs. A loop forces zero.
pub fn chromatic_poly(g: &Graph) -> Result<Polynomial> {
    check_order(g)?;
    if g.loop_count() > 0 {
        return Ok(Polynomial::zero());
    }
    Ok(chromatic_rec(&g.simplify()))
}

fn chromatic_rec(g: &Graph) -> Polynomial {
    let n = g.order();
    if g.size() == 0 {
        return Polynomial::monomial("x", n as u32);
    }
    if g.size() == n * (n - 1) / 2 {
        // falling factorial x (x - 1) ... (x - n + 1)
        return (0..n as i64).map(|i| &Polynomial::var("x") - &Polynomial::int(i)).product();
    }
    let comps = g.split_components();
    if comps.len() > 1 {
        return comps.iter().map(chromatic_rec).product();
    }
    let key = canonical_form(g).key;
    if let Some(c) = chromatic_memo().get(&key) {
        return c;
    }
    let h = key.graph();
    // eliminate an edge at a vertex of maximum degree
    let deg = h.degrees();
    let &(u, v) = h.edges().iter().max_by_key(|&&(a, b)| deg[a] + deg[b]).expect("has edges");
    let value = &chromatic_rec(&h.delete_edge(u, v).expect("present"))
        - &chromatic_rec(&h.contract_edge(u, v).expect("non-loop").simplify());
    chromatic_memo().insert(key, value.clone());
    value
}

/// `chi(G; x) = (-1)^(n - k) x^k T(G; 1 - x, 0)`.
pub fn chromatic_from_tutte(g: &Graph, t: &Polynomial) -> Polynomial {
    let n = g.order();
    let k = g.component_count();
    let spec = t.subs(&[("x", p("1 - x")), ("y", Polynomial::zero())]);
    let signed = if (n - k) % 2 == 1 { -&spec } else { spec };
    &Polynomial::monomial("x", k as u32) * &signed
}

/// Cyclomatic number `m - n + k`.
fn nullity(g: &Graph) -> u32 {
    (g.size() + g.component_count() - g.order()) as u32
}

/// `E(G; x) = sum over Eulerian edge subsets A of x^|A|`.
pub fn euler_poly(g: &Graph) -> Result<Polynomial> {
    Ok(Polynomial::from_univariate("x", &eulerian_subset_counts(g)?))
}

/// Value of `(1 - x)^(m - n + k) x^(n - k) T(G; 1/x, (1 + x)/(1 - x))` at a
/// point; `None` at the poles `x = 0` and `x = 1`.
pub fn euler_from_tutte_at(g: &Graph, t: &Polynomial, x: &BigRational) -> Result<Option<BigRational>> {
    let one = BigRational::one();
    if x.is_zero() || *x == one {
        return Ok(None);
    }
    let tv = t.eval(&[("x", x.recip()), ("y", (&one + x) / (&one - x))])?;
    let rank = (g.order() - g.component_count()) as usize;
    Ok(Some(tv * num_traits::pow::pow(&one - x, nullity(g) as usize) * num_traits::pow::pow(x.clone(), rank)))
}

/// `Fl(G; x) = (-1)^(m - n + k) T(G; 0, 1 - x)`.
pub fn flow_poly(g: &Graph) -> Result<Polynomial> {
    Ok(flow_from_tutte(g, &tutte_poly(g)?))
}

pub fn flow_from_tutte(g: &Graph, t: &Polynomial) -> Polynomial {
    let v = t.subs(&[("x", Polynomial::zero()), ("y", p("1 - x"))]);
    if nullity(g) % 2 == 1 {
        -&v
    } else {
        v
    }
}

/// `Fl(G; x) = sum over A of (-1)^|E - A| x^(|A| - n + k(A))`.
pub fn flow_by_expansion(g: &Graph) -> Result<Polynomial> {
    let stats = subset_statistics(g)?;
    let (n, m) = (g.order(), g.size());
    let terms = stats.entries().map(|((k, a, _), cnt)| {
        let c = integer(cnt);
        (vec![(a + k - n) as u32], if (m - a) % 2 == 1 { -c } else { c })
    });
    Ok(Polynomial::from_terms(&["x"], terms.collect::<Vec<_>>()))
}

/// `R(G; p) = p^(m - n + k) (1 - p)^(n - k) T(G; 1, 1/p)`, where `p` is the
/// probability that an edge fails.
pub fn reliability_poly(g: &Graph) -> Result<Polynomial> {
    Ok(reliability_from_tutte(g, &tutte_poly(g)?))
}

pub fn reliability_from_tutte(g: &Graph, t: &Polynomial) -> Polynomial {
    let nu = nullity(g);
    let at_one = t.subs(&[("x", Polynomial::one())]);
    let coeffs = if at_one.is_zero() {
        Vec::new()
    } else if at_one.variables().is_empty() {
        vec![at_one.as_constant().expect("constant")]
    } else {
        at_one.univariate_coeffs("y").expect("univariate in y")
    };
    // p^nu * sum t_j p^(-j); T(1, y) has degree at most nu in y
    let scaled = Polynomial::from_terms(
        &["p"],
        coeffs.into_iter().enumerate().map(|(j, c)| (vec![nu - j as u32], c)).collect::<Vec<_>>(),
    );
    &scaled * &p("1 - p").pow((g.order() - g.component_count()) as u32)
}

/// `R(G; p) = sum over A with k(A) = k(G) of (1 - p)^|A| p^(m - |A|)`.
pub fn reliability_by_expansion(g: &Graph) -> Result<Polynomial> {
    let stats = subset_statistics(g)?;
    let (m, k_e) = (g.size(), g.component_count());
    let mut by_size = vec![0u64; m + 1];
    for ((k, a, _), cnt) in stats.entries() {
        if k == k_e {
            by_size[a] += cnt;
        }
    }
    let q = p("1 - p");
    Ok(by_size
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(a, &c)| (&q.pow(a as u32) * &Polynomial::monomial("p", (m - a) as u32)).scale(&integer(c)))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tutte_small_values() {
        assert_eq!(tutte_poly(&Graph::complete(3)).unwrap(), p("x^2 + x + y"));
        assert_eq!(tutte_poly(&Graph::path(5)).unwrap(), p("x^4"));
        assert_eq!(tutte_poly(&Graph::empty(3)).unwrap(), p("1"));
        let k4 = Graph::complete(4);
        assert_eq!(tutte_poly(&k4).unwrap(), p("x^3 + 3x^2 + 2x + 4x*y + 2y + 3y^2 + y^3"));
        assert_eq!(tutte_by_expansion(&k4).unwrap(), tutte_poly(&k4).unwrap());
    }

    #[test]
    fn tutte_of_multigraphs() {
        let fat = Graph::from_edges_unchecked(2, [(0, 1), (0, 1), (0, 1)]);
        assert_eq!(tutte_poly(&fat).unwrap(), p("x + y + y^2"));
        let g = Graph::from_edges_unchecked(3, [(0, 0), (0, 1), (0, 1), (1, 2), (2, 0)]);
        assert_eq!(tutte_poly(&g).unwrap(), tutte_by_expansion(&g).unwrap());
    }

    #[test]
    fn chromatic_small_values() {
        assert_eq!(chromatic_poly(&Graph::complete(3)).unwrap(), p("x(x-1)(x-2)"));
        assert_eq!(chromatic_poly(&Graph::path(3)).unwrap(), p("x(x-1)^2"));
        assert_eq!(chromatic_poly(&Graph::cycle(4)).unwrap(), p("(x-1)^4 + (x-1)"));
        let c5 = Graph::cycle(5);
        assert_eq!(chromatic_from_tutte(&c5, &tutte_poly(&c5).unwrap()), chromatic_poly(&c5).unwrap());
    }

    #[test]
    fn euler_flow_reliability_small_values() {
        let c3 = Graph::complete(3);
        assert_eq!(euler_poly(&c3).unwrap(), p("1 + x^3"));
        assert_eq!(euler_poly(&Graph::path(4)).unwrap(), p("1"));
        assert_eq!(flow_poly(&c3).unwrap(), p("x - 1"));
        assert_eq!(flow_by_expansion(&c3).unwrap(), p("x - 1"));
        assert_eq!(reliability_poly(&Graph::complete(2)).unwrap(), p("1 - p"));
        assert_eq!(reliability_poly(&c3).unwrap(), reliability_by_expansion(&c3).unwrap());
        let t = tutte_poly(&c3).unwrap();
        let x = crate::poly::rational(1, 3);
        assert_eq!(euler_from_tutte_at(&c3, &t, &x).unwrap().unwrap(), euler_poly(&c3).unwrap().eval(&[("x", x)]).unwrap());
    }

    #[test]
    fn z_and_t_agree_at_a_point() {
        let g = Graph::from_edges_unchecked(5, [(0, 1), (1, 2), (2, 0), (2, 3)]);
        let (t, z) = (tutte_poly(&g).unwrap(), partition_z(&g).unwrap());
        assert!(z_t_identity_at(&g, &t, &z, &crate::poly::rational(3, 2), &crate::poly::rational(-2, 5)).unwrap());
    }
}
