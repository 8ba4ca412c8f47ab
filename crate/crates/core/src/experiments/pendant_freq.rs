use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{labeled_graphs, GraphClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pendant::{find_pendant_occurrences, MatchMode, RootedPendant};

/// Largest order for exhaustive runs over labeled trees (`n^(n-2)` of them).
pub const MAX_EXHAUSTIVE_TREE_ORDER: usize = 8;
/// Largest order for exhaustive runs over other labeled classes.
pub const MAX_EXHAUSTIVE_GRAPH_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrequencyMode {
    /// Every labeled member of the class.
    Exhaustive,
    /// Uniform random labeled members, reproducible from the seed.
    Sample { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PendantFrequencyReport {
    /// graph6 of the pendant graph.
    pub pendant: String,
    pub root: usize,
    pub class: GraphClass,
    pub order: usize,
    pub mode: FrequencyMode,
    pub samples: usize,
    /// `histogram[k]`: members with exactly `k` labeled occurrences.
    pub histogram: Vec<u64>,
    pub fraction_with_occurrence: f64,
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labeled tree.
pub fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| deg[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains");
        edges.push((leaf, s));
        deg[s] -= 1;
        if deg[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges_unchecked(n, edges)
}

fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total = if n <= 1 { 1 } else { (n as u64).pow(len as u32) };
    (0..total).map(move |mut code| {
        let seq: Vec<usize> = (0..len)
            .map(|_| {
                let d = (code % n as u64) as usize;
                code /= n as u64;
                d
            })
            .collect();
        tree_from_pruefer(n, &seq)
    })
}

fn random_member(class: GraphClass, n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    match class {
        GraphClass::Trees => {
            let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
            Ok(tree_from_pruefer(n, &seq))
        }
        GraphClass::All => {
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((a, b));
                    }
                }
            }
            Ok(Graph::from_edges_unchecked(n, edges))
        }
        other => Err(Error::NotSupported(format!(
            "no uniform sampler for {other}; use exhaustive mode with order at most {MAX_EXHAUSTIVE_GRAPH_ORDER}"
        ))),
    }
}

fn occurrences(g: &Graph, p: &RootedPendant) -> Result<usize> {
    if p.order() >= g.order() {
        return Ok(0);
    }
    Ok(find_pendant_occurrences(g, p, MatchMode::Labeled)?.len())
}

/// Distribution of labeled pendant-occurrence counts over a class.
pub fn pendant_frequency(p: &RootedPendant, class: GraphClass, n: usize, mode: FrequencyMode) -> Result<PendantFrequencyReport> {
    let counts: Vec<usize> = match mode {
        FrequencyMode::Exhaustive => {
            let members: Vec<Graph> = match class {
                GraphClass::Trees if n <= MAX_EXHAUSTIVE_TREE_ORDER => all_labeled_trees(n).collect(),
                _ if n <= MAX_EXHAUSTIVE_GRAPH_ORDER => labeled_graphs(n).filter(|g| class.contains(g)).collect(),
                _ => {
                    return Err(Error::resource(format!(
                        "exhaustive pendant counts for {class} are limited to order {}",
                        if class == GraphClass::Trees { MAX_EXHAUSTIVE_TREE_ORDER } else { MAX_EXHAUSTIVE_GRAPH_ORDER }
                    )))
                }
            };
            members.par_iter().map(|g| occurrences(g, p)).collect::<Result<_>>()?
        }
        FrequencyMode::Sample { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let members: Vec<Graph> = (0..samples).map(|_| random_member(class, n, &mut rng)).collect::<Result<_>>()?;
            members.par_iter().map(|g| occurrences(g, p)).collect::<Result<_>>()?
        }
    };
    let mut histogram = vec![0u64; counts.iter().copied().max().unwrap_or(0) + 1];
    for &c in &counts {
        histogram[c] += 1;
    }
    let hit = counts.iter().filter(|&&c| c > 0).count();
    Ok(PendantFrequencyReport {
        pendant: crate::format::write_line(p.graph()),
        root: p.root(),
        class,
        order: n,
        mode,
        samples: counts.len(),
        histogram,
        fraction_with_occurrence: if counts.is_empty() { 0.0 } else { hit as f64 / counts.len() as f64 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pruefer_decoding() {
        let t = tree_from_pruefer(6, &[3, 3, 3, 4]);
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(all_labeled_trees(5).count(), 125);
        assert!(all_labeled_trees(5).all(|t| t.is_tree()));
    }

    #[test]
    fn large_pendant_gives_zero_histogram() {
        let p = RootedPendant::new(Graph::path(5), 0).unwrap();
        let r = pendant_frequency(&p, GraphClass::Trees, 4, FrequencyMode::Exhaustive).unwrap();
        assert_eq!(r.histogram, vec![16]);
        assert_eq!(r.fraction_with_occurrence, 0.0);
    }

    #[test]
    fn no_sampler_for_planar() {
        let p = RootedPendant::new(Graph::complete(2), 0).unwrap();
        let mode = FrequencyMode::Sample { samples: 3, seed: 0 };
        assert!(matches!(pendant_frequency(&p, GraphClass::Planar, 20, mode), Err(Error::NotSupported(_))));
    }
}
