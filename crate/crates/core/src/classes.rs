//! Graph classes and isomorph-free enumeration of their members.
//!
//! Members of order `n` are generated from members of order `n - 1` by
//! canonical augmentation: a child `P + v` is accepted only when the new
//! vertex `v` lies in the automorphism orbit of the vertex that receives the
//! last canonical label. Every class here is closed under vertex deletion, so
//! each isomorphism class is produced exactly once, from the parent obtained by
//! deleting its canonical last vertex. Siblings from the same parent are
//! deduplicated by canonical form.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonKey};
use crate::error::{Error, Result};
use crate::format;
use crate::graph::{Graph, UnionFind};
use crate::planarity::is_planar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    All,
    Forests,
    Trees,
    Planar,
}

impl GraphClass {
    pub const ALL: [GraphClass; 4] = [GraphClass::All, GraphClass::Forests, GraphClass::Trees, GraphClass::Planar];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::All => "all",
            GraphClass::Forests => "forests",
            GraphClass::Trees => "trees",
            GraphClass::Planar => "planar",
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => g.is_simple(),
            GraphClass::Forests => g.is_forest(),
            GraphClass::Trees => g.is_tree(),
            GraphClass::Planar => g.is_simple() && is_planar(g),
        }
    }

    /// Largest order the internal enumerator will generate.
    pub fn max_order(self) -> usize {
        match self {
            GraphClass::All | GraphClass::Planar => 9,
            GraphClass::Forests | GraphClass::Trees => 14,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown class '{s}' (expected one of: all, forests, trees, planar)")))
    }
}

type Level = Arc<Vec<Graph>>;

fn cache() -> &'static Mutex<HashMap<(GraphClass, usize), Level>> {
    static CACHE: OnceLock<Mutex<HashMap<(GraphClass, usize), Level>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All members of `class` with `n` vertices, one canonical representative
/// per isomorphism class, sorted by canonical key.
pub fn enumerate_class(class: GraphClass, n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_shared(class, n)?.as_ref().clone())
}

/// As [`enumerate_class`] but shares the cached level.
pub fn enumerate_shared(class: GraphClass, n: usize) -> Result<Level> {
    if n > class.max_order() {
        return Err(Error::resource(format!(
            "class '{class}' is enumerated internally only up to order {}; supply larger orders as a graph6 file",
            class.max_order()
        )));
    }
    if class == GraphClass::Trees {
        if let Some(l) = cache().lock().expect("cache poisoned").get(&(class, n)) {
            return Ok(l.clone());
        }
        let forests = enumerate_shared(GraphClass::Forests, n)?;
        let trees: Vec<Graph> = forests.iter().filter(|g| n > 0 && g.is_tree()).cloned().collect();
        let level = Arc::new(trees);
        cache().lock().expect("cache poisoned").insert((class, n), level.clone());
        return Ok(level);
    }
    generate_level(class, n)
}

fn generate_level(class: GraphClass, n: usize) -> Result<Level> {
    if let Some(l) = cache().lock().expect("cache poisoned").get(&(class, n)) {
        return Ok(l.clone());
    }
    let level = if n == 0 {
        Arc::new(vec![Graph::empty(0)])
    } else {
        let parents = generate_level(class, n - 1)?;
        let mut keys: Vec<CanonKey> = parents
            .par_iter()
            .flat_map_iter(|p| children(class, p))
            .collect();
        keys.sort();
        debug_assert!(keys.windows(2).all(|w| w[0] != w[1]), "canonical augmentation produced a duplicate");
        keys.dedup();
        Arc::new(keys.into_iter().map(|k| k.graph()).collect())
    };
    cache().lock().expect("cache poisoned").insert((class, n), level.clone());
    Ok(level)
}

fn children(class: GraphClass, parent: &Graph) -> Vec<CanonKey> {
    let m = parent.order();
    let comp_of: Vec<usize> = if class == GraphClass::Forests {
        let mut uf = UnionFind::new(m);
        for &(a, b) in parent.edges() {
            uf.union(a, b);
        }
        (0..m).map(|v| uf.find(v)).collect()
    } else {
        Vec::new()
    };
    let parent_deg = parent.degrees();
    let mut seen: HashSet<CanonKey> = HashSet::new();
    for mask in 0u64..(1u64 << m) {
        if class == GraphClass::Forests {
            // at most one neighbour per component keeps the child acyclic
            let mut hit = HashSet::new();
            if (0..m).any(|v| mask >> v & 1 == 1 && !hit.insert(comp_of[v])) {
                continue;
            }
        }
        let new_deg = mask.count_ones() as usize;
        let max_old = (0..m).map(|v| parent_deg[v] + (mask >> v & 1) as usize).max().unwrap_or(0);
        if new_deg < max_old {
            continue;
        }
        let edges = parent.edges().iter().copied().chain((0..m).filter(|v| mask >> v & 1 == 1).map(|v| (v, m)));
        let child = Graph::from_edges_unchecked(m + 1, edges);
        if class == GraphClass::Planar && !is_planar(&child) {
            continue;
        }
        let cf = canonical_form(&child);
        let orbits = cf.orbits();
        let last = cf.last_vertex().expect("non-empty graph");
        if orbits[last] != orbits[m] {
            continue;
        }
        seen.insert(cf.key);
    }
    seen.into_iter().collect()
}

/// Reads graph6/sparse6 lines, keeps members of `class` of order `n` (any
/// order when `n` is `None`), and returns one representative per isomorphism
/// class, sorted by canonical key.
pub fn ingest_graph6(text: &str, class: GraphClass, n: Option<usize>) -> Result<Vec<Graph>> {
    let graphs = format::parse_lines(text)?;
    let mut keys: Vec<CanonKey> = graphs
        .par_iter()
        .filter(|g| n.is_none_or(|n| g.order() == n) && class.contains(g))
        .map(|g| canonical_form(g).key)
        .collect();
    keys.sort();
    keys.dedup();
    Ok(keys.into_iter().map(|k| k.graph()).collect())
}

/// Every labeled simple graph on `n` vertices (2^(n choose 2) of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is limited to n <= 8");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::from_edges_unchecked(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_class(GraphClass::All, 1).unwrap().len(), 1);
        assert_eq!(enumerate_class(GraphClass::All, 4).unwrap().len(), 11);
        let forests3 = enumerate_class(GraphClass::Forests, 3).unwrap();
        assert_eq!(forests3.len(), 3);
        let mut sizes: Vec<usize> = forests3.iter().map(Graph::size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![0, 1, 2]);
    }

    #[test]
    fn four_vertex_graphs_match_labeled_bucketing() {
        let mut keys: Vec<CanonKey> = labeled_graphs(4).map(|g| canonical_form(&g).key).collect();
        keys.sort();
        keys.dedup();
        let generated: Vec<CanonKey> =
            enumerate_class(GraphClass::All, 4).unwrap().iter().map(|g| canonical_form(g).key).collect();
        assert_eq!(keys, generated);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(enumerate_class(GraphClass::All, 10), Err(Error::Resource(_))));
        assert!(matches!(enumerate_class(GraphClass::Trees, 15), Err(Error::Resource(_))));
    }

    #[test]
    fn class_names_round_trip() {
        for c in GraphClass::ALL {
            assert_eq!(c.name().parse::<GraphClass>().unwrap(), c);
        }
        assert!("outerplanar".parse::<GraphClass>().is_err());
    }

    #[test]
    fn ingest_dedupes_and_filters() {
        let text = "Bg\nBW\nBw\n\n";
        let all = ingest_graph6(text, GraphClass::All, Some(3)).unwrap();
        assert_eq!(all.len(), 2);
        let forests = ingest_graph6(text, GraphClass::Forests, None).unwrap();
        assert_eq!(forests.len(), 1);
    }
}
