//! Generalized chromatic polynomial `GC(G; x, y)`: the number of maps from
//! the vertices into `x` colours, `y` of which are proper, such that adjacent
//! vertices never share a proper colour.
//!
//! Values are counted exactly on the integer grid `x in n..=2n`,
//! `y in 0..=n`, and the polynomial of bidegree at most `(n, n)` is recovered
//! by interpolation. Counting groups the maps by which vertices take improper
//! colours and by the partition of the rest into proper colour classes; a
//! class opened at step `k` can take any of the `y - k` unused proper colours.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{integer, interpolate_bivariate, Polynomial};

pub const MAX_GC_ORDER: usize = 8;

/// `table[i][b]`: assignments with `i` improper vertices whose proper
/// vertices are split into `b` independent classes.
fn class_table(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let nb = g.neighbor_masks();
    let mut table = vec![vec![0u64; n + 1]; n + 1];
    let mut classes: Vec<u64> = Vec::new();
    fn go(v: usize, n: usize, improper: usize, nb: &[u64], classes: &mut Vec<u64>, table: &mut [Vec<u64>]) {
        if v == n {
            table[improper][classes.len()] += 1;
            return;
        }
        go(v + 1, n, improper + 1, nb, classes, table);
        for i in 0..classes.len() {
            if classes[i] & nb[v] == 0 {
                classes[i] |= 1 << v;
                go(v + 1, n, improper, nb, classes, table);
                classes[i] &= !(1 << v);
            }
        }
        classes.push(1 << v);
        go(v + 1, n, improper, nb, classes, table);
        classes.pop();
    }
    go(0, n, 0, &nb, &mut classes, &mut table);
    table
}

/// Exact number of generalized colourings with `x` colours of which `y` are
/// proper (`x >= y >= 0`).
pub fn count_generalized_colorings(g: &Graph, x: u64, y: u64) -> Result<BigInt> {
    if g.order() > MAX_GC_ORDER {
        return Err(Error::resource(format!("generalized colouring counts are limited to order {MAX_GC_ORDER}")));
    }
    if !g.is_simple() {
        return Err(Error::domain("generalized colourings are defined here for simple graphs"));
    }
    if x < y {
        return Err(Error::domain("the number of proper colours cannot exceed the number of colours"));
    }
    Ok(count_from_table(&class_table(g), x, y))
}

fn count_from_table(table: &[Vec<u64>], x: u64, y: u64) -> BigInt {
    let mut total = BigInt::zero();
    for (i, row) in table.iter().enumerate() {
        let improper = num_traits::pow::pow(BigInt::from(x - y), i);
        let mut falling = BigInt::one();
        for (b, &cnt) in row.iter().enumerate() {
            if b > 0 {
                falling *= BigInt::from(y) - BigInt::from(b - 1);
            }
            if cnt > 0 {
                total += &improper * &falling * cnt;
            }
        }
    }
    total
}

pub fn gen_chromatic_poly(g: &Graph) -> Result<Polynomial> {
    let n = g.order();
    if n > MAX_GC_ORDER {
        return Err(Error::resource(format!("generalized chromatic polynomial is limited to order {MAX_GC_ORDER}")));
    }
    if !g.is_simple() {
        return Err(Error::domain("generalized colourings are defined here for simple graphs"));
    }
    let table = class_table(g);
    let mut samples = Vec::with_capacity((n + 1) * (n + 1));
    for x in n as u64..=2 * n as u64 {
        for y in 0..=n as u64 {
            samples.push((integer(x), integer(y), integer(count_from_table(&table, x, y))));
        }
    }
    interpolate_bivariate(&samples, n, n, "x", "y")
}
