//! Edge-subset expansions. A depth-first walk over all `2^m` spanning
//! subgraphs maintains a union-find with rollback, so each step costs a
//! near-constant amount of work.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_EXPANSION_SIZE: usize = 24;

/// `count(k, a, c)`: number of edge subsets `A` with `k` components, `|A| = a`
/// and `c` covered components.
pub struct SubsetStatistics {
    order: usize,
    size: usize,
    table: Vec<u64>,
}

impl SubsetStatistics {
    fn index(&self, k: usize, a: usize, c: usize) -> usize {
        (k * (self.size + 1) + a) * (self.order + 1) + c
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Non-zero entries as `((k, a, c), count)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        let (n, m) = (self.order, self.size);
        (0..=n).flat_map(move |k| {
            (0..=m).flat_map(move |a| {
                (0..=n).filter_map(move |c| {
                    let v = self.table[self.index(k, a, c)];
                    (v > 0).then_some(((k, a, c), v))
                })
            })
        })
    }
}

struct Walker {
    parent: Vec<usize>,
    rank: Vec<usize>,
    covered: Vec<bool>,
    components: usize,
    covered_components: usize,
}

enum Undo {
    Cover(usize),
    Union { child: usize, root: usize, root_cov: bool, child_cov: bool, rank_bumped: bool },
}

impl Walker {
    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn add(&mut self, a: usize, b: usize) -> Option<Undo> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            if self.covered[ra] {
                return None;
            }
            self.covered[ra] = true;
            self.covered_components += 1;
            return Some(Undo::Cover(ra));
        }
        let (root, child) = if self.rank[ra] >= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        let rank_bumped = self.rank[root] == self.rank[child];
        let (root_cov, child_cov) = (self.covered[root], self.covered[child]);
        self.parent[child] = root;
        if rank_bumped {
            self.rank[root] += 1;
        }
        self.covered[root] = true;
        self.components -= 1;
        self.covered_components = self.covered_components + 1 - root_cov as usize - child_cov as usize;
        Some(Undo::Union { child, root, root_cov, child_cov, rank_bumped })
    }

    fn undo(&mut self, u: Undo) {
        match u {
            Undo::Cover(r) => {
                self.covered[r] = false;
                self.covered_components -= 1;
            }
            Undo::Union { child, root, root_cov, child_cov, rank_bumped } => {
                self.parent[child] = child;
                if rank_bumped {
                    self.rank[root] -= 1;
                }
                self.covered_components = self.covered_components + root_cov as usize + child_cov as usize - 1;
                self.covered[root] = root_cov;
                self.components += 1;
            }
        }
    }
}

/// Tabulates `(k(A), |A|, c(A))` over all edge subsets. Each copy of a
/// parallel edge and each loop is a separate element of the ground set.
pub fn subset_statistics(g: &Graph) -> Result<SubsetStatistics> {
    let (n, m) = (g.order(), g.size());
    if m > MAX_EXPANSION_SIZE {
        return Err(Error::resource(format!(
            "edge-subset expansion is limited to {MAX_EXPANSION_SIZE} edges, got {m}"
        )));
    }
    let mut stats = SubsetStatistics { order: n, size: m, table: vec![0; (n + 1) * (m + 1) * (n + 1)] };
    let mut w = Walker {
        parent: (0..n).collect(),
        rank: vec![0; n],
        covered: vec![false; n],
        components: n,
        covered_components: 0,
    };
    fn go(i: usize, a: usize, edges: &[(usize, usize)], w: &mut Walker, stats: &mut SubsetStatistics) {
        if i == edges.len() {
            let idx = stats.index(w.components, a, w.covered_components);
            stats.table[idx] += 1;
            return;
        }
        go(i + 1, a, edges, w, stats);
        let (x, y) = edges[i];
        let undo = w.add(x, y);
        go(i + 1, a + 1, edges, w, stats);
        if let Some(u) = undo {
            w.undo(u);
        }
    }
    go(0, 0, g.edges(), &mut w, &mut stats);
    Ok(stats)
}

/// `e[a]` is the number of `a`-edge subsets in which every vertex has even
/// degree, found by walking the cycle space (a loop adds two to a degree).
pub fn eulerian_subset_counts(g: &Graph) -> Result<Vec<u64>> {
    let (n, m) = (g.order(), g.size());
    if m > 128 {
        return Err(Error::resource("Eulerian subgraph enumeration is limited to 128 edges"));
    }
    let mut uf = crate::graph::UnionFind::new(n);
    let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut chords = Vec::new();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if a != b && uf.union(a, b) {
            tree_adj[a].push((b, i));
            tree_adj[b].push((a, i));
        } else {
            chords.push(i);
        }
    }
    let dim = chords.len();
    if dim > 30 {
        return Err(Error::resource(format!("cycle space of dimension {dim} is too large to enumerate")));
    }
    // fundamental cycle of chord (a, b): the chord plus the tree path a..b
    let tree_path = |a: usize, b: usize| -> u128 {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            for &(w, e) in &tree_adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, e));
                    stack.push(w);
                }
            }
        }
        let mut mask = 0u128;
        let mut v = b;
        while let Some((p, e)) = prev[v] {
            mask ^= 1 << e;
            v = p;
        }
        mask
    };
    let basis: Vec<u128> = chords
        .iter()
        .map(|&i| {
            let (a, b) = g.edges()[i];
            let chord = 1u128 << i;
            if a == b {
                chord
            } else {
                chord | tree_path(a, b)
            }
        })
        .collect();
    let mut counts = vec![0u64; m + 1];
    let mut cur = 0u128;
    counts[0] += 1;
    for step in 1u64..(1u64 << dim) {
        cur ^= basis[step.trailing_zeros() as usize];
        counts[cur.count_ones() as usize] += 1;
    }
    Ok(counts)
}
