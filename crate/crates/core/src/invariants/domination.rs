//! Domination polynomial by pruned subset search over closed neighbourhoods.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;

pub const MAX_DOMINATION_ORDER: usize = 24;

/// Closed neighbourhoods as bitmasks, loops and multiplicities ignored.
fn closed_neighbourhoods(g: &Graph) -> Vec<u64> {
    g.neighbor_masks().iter().enumerate().map(|(v, m)| m | 1 << v).collect()
}

/// Visits every dominating set (as a vertex bitmask) exactly once.
fn for_each_dominating_set(g: &Graph, mut visit: impl FnMut(u64)) -> Result<()> {
    let n = g.order();
    if n > MAX_DOMINATION_ORDER {
        return Err(Error::resource(format!(
            "domination polynomial is limited to order {MAX_DOMINATION_ORDER}, got {n}"
        )));
    }
    let nb = closed_neighbourhoods(g);
    // after deciding vertices 0..=i, every vertex whose closed neighbourhood
    // lies within 0..=i must already be dominated
    let mut settled = vec![0u64; n];
    for (v, &m) in nb.iter().enumerate() {
        let last = 63 - m.leading_zeros() as usize;
        settled[last] |= 1 << v;
    }
    fn go(i: usize, n: usize, set: u64, covered: u64, nb: &[u64], settled: &[u64], visit: &mut dyn FnMut(u64)) {
        if i == n {
            visit(set);
            return;
        }
        for take in [false, true] {
            let (s, c) = if take { (set | 1 << i, covered | nb[i]) } else { (set, covered) };
            if settled[i] & !c == 0 {
                go(i + 1, n, s, c, nb, settled, visit);
            }
        }
    }
    go(0, n, 0, 0, &nb, &settled, &mut visit);
    Ok(())
}

/// All dominating sets as sorted bitmasks.
pub fn dominating_sets(g: &Graph) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for_each_dominating_set(g, |s| out.push(s))?;
    out.sort_unstable();
    Ok(out)
}

/// `Dom(G; x) = sum over dominating sets S of x^|S|`.
pub fn domination_poly(g: &Graph) -> Result<Polynomial> {
    let mut counts = vec![0u64; g.order() + 1];
    for_each_dominating_set(g, |s| counts[s.count_ones() as usize] += 1)?;
    Ok(Polynomial::from_univariate("x", &counts))
}

/// Stems: vertices with a neighbour of degree one.
pub fn stems(g: &Graph) -> Vec<usize> {
    let deg = g.degrees();
    (0..g.order()).filter(|&v| g.neighbors(v).iter().any(|&u| u != v && deg[u] == 1)).collect()
}
