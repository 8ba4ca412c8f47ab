//! Labeled multigraphs and the structural operations used by every
//! recursion in the crate.
//!
//! Vertices are `0..order`. Edges are unordered pairs stored as `(a, b)` with
//! `a <= b`; the edge list is kept sorted, so two graphs are equal exactly when
//! they have the same order and the same edge multiset. Loops are `(v, v)`.
//! Every operation that removes vertices renumbers the survivors to
//! `0..order'` preserving their relative order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

#[inline]
fn norm(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph { order, edges: Vec::new() }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            list.push(norm(u, v));
        }
        list.sort_unstable();
        Ok(Graph { order, edges: list })
    }

    /// Builds a graph from edges known to be in range. Panics otherwise.
    pub fn from_edges_unchecked(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_edges(order, edges).expect("edge endpoint out of range")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::from_edges_unchecked(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Self::from_edges_unchecked(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges_unchecked(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges, counting multiplicities and loops.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|(a, b)| a != b) && self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let e = norm(u, v);
        let start = self.edges.partition_point(|x| *x < e);
        self.edges[start..].iter().take_while(|x| **x == e).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&norm(u, v)).is_ok()
    }

    /// Degree with the usual convention that a loop contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Distinct neighbours of `v`, excluding `v` itself, in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v && b != v {
                    Some(b)
                } else if b == v && a != v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Symmetric multiplicity matrix; the diagonal holds loop counts.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.order]; self.order];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    /// Neighbourhood bitmasks of the underlying simple graph (order <= 64).
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.order <= 64, "bitmask neighbourhoods need order <= 64");
        let mut masks = vec![0u64; self.order];
        for &(a, b) in &self.edges {
            if a != b {
                masks[a] |= 1 << b;
                masks[b] |= 1 << a;
            }
        }
        masks
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.order || v >= self.order {
            return Err(Error::domain(format!("vertex out of range for order {}", self.order)));
        }
        let e = norm(u, v);
        let mut edges = self.edges.clone();
        let at = edges.partition_point(|x| *x <= e);
        edges.insert(at, e);
        Ok(Graph { order: self.order, edges })
    }

    /// `G - e`: removes one copy of `e`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        let e = norm(u, v);
        let at = self.edges.binary_search(&e).map_err(|_| Error::NoSuchEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(at);
        Ok(Graph { order: self.order, edges })
    }

    /// `G / e`: merges the endpoints into the smaller one. Remaining copies of
    /// `e` become loops; all other parallel edges are kept.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::domain("cannot contract a loop"));
        }
        let without = self.delete_edge(u, v)?;
        let (keep, gone) = norm(u, v);
        let edges = without.edges.iter().map(|&(a, b)| {
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            let shift = |x: usize| if x > gone { x - 1 } else { x };
            (shift(a), shift(b))
        });
        Ok(Graph::from_edges_unchecked(self.order - 1, edges))
    }

    /// `G † e`: removes both endpoints of `e` and everything incident to them.
    pub fn extract_edge(&self, u: usize, v: usize) -> Result<Self> {
        if self.edges.binary_search(&norm(u, v)).is_err() {
            return Err(Error::NoSuchEdge(u, v));
        }
        Ok(self.delete_vertices(&[u, v]))
    }

    pub fn delete_vertex(&self, v: usize) -> Self {
        self.delete_vertices(&[v])
    }

    /// Removes a set of vertices (out-of-range and repeated entries ignored).
    pub fn delete_vertices(&self, vs: &[usize]) -> Self {
        let mut gone = vec![false; self.order];
        for &v in vs {
            if v < self.order {
                gone[v] = true;
            }
        }
        let mut map = vec![usize::MAX; self.order];
        let mut next = 0;
        for v in 0..self.order {
            if !gone[v] {
                map[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| !gone[*a] && !gone[*b])
            .map(|&(a, b)| (map[a], map[b]));
        Graph::from_edges_unchecked(next, edges)
    }

    /// Induced subgraph on `vs`, relabeled by the increasing bijection.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Self {
        let mut keep: Vec<usize> = vs.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let rest: Vec<usize> = (0..self.order).filter(|v| keep.binary_search(v).is_err()).collect();
        self.delete_vertices(&rest)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.order;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        Graph::from_edges_unchecked(self.order + other.order, edges)
    }

    /// Union of `self` and `other` plus the bridge `(v_self, v_other)`.
    pub fn bridge_join(&self, v_self: usize, other: &Graph, v_other: usize) -> Result<Self> {
        if v_self >= self.order || v_other >= other.order {
            return Err(Error::domain("bridge endpoint out of range"));
        }
        self.disjoint_union(other).add_edge(v_self, self.order + v_other)
    }

    /// Identifies `v_self` with `v_other`. The identified vertex keeps the
    /// label `v_self`; the vertices of `other` follow those of `self`.
    pub fn one_point_join(&self, v_self: usize, other: &Graph, v_other: usize) -> Result<Self> {
        if v_self >= self.order || v_other >= other.order {
            return Err(Error::domain("join vertex out of range"));
        }
        let off = self.order;
        let map = |x: usize| -> usize {
            match x.cmp(&v_other) {
                std::cmp::Ordering::Equal => v_self,
                std::cmp::Ordering::Less => off + x,
                std::cmp::Ordering::Greater => off + x - 1,
            }
        };
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (map(a), map(b))));
        Ok(Graph::from_edges_unchecked(self.order + other.order - 1, edges))
    }

    /// Loopless complement of the underlying simple graph.
    pub fn complement(&self) -> Self {
        let m = self.adjacency_matrix();
        let n = self.order;
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::from_edges_unchecked(n, edges.filter(|&(i, j)| m[i][j] == 0).collect::<Vec<_>>())
    }

    /// Drops loops and collapses parallel edges.
    pub fn simplify(&self) -> Self {
        let mut edges: Vec<_> = self.edges.iter().copied().filter(|(a, b)| a != b).collect();
        edges.dedup();
        Graph { order: self.order, edges }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order, "permutation length must equal the order");
        Graph::from_edges_unchecked(self.order, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.order);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut index = vec![usize::MAX; self.order];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.order {
            let r = uf.find(v);
            if index[r] == usize::MAX {
                index[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index[r]].push(v);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.order);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.count()
    }

    /// Components that contain at least one edge (a loop counts).
    pub fn covered_component_count(&self) -> usize {
        let mut touched = vec![false; self.order];
        for &(a, b) in &self.edges {
            touched[a] = true;
            touched[b] = true;
        }
        let isolated = touched.iter().filter(|t| !**t).count();
        self.component_count() - isolated
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.component_count() == 1
    }

    /// Acyclic with no loops and no parallel edges.
    pub fn is_forest(&self) -> bool {
        self.is_simple() && self.size() + self.component_count() == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.is_forest() && self.component_count() == 1
    }

    /// Connected components as standalone graphs.
    pub fn split_components(&self) -> Vec<Graph> {
        let comps = self.components();
        if comps.len() == 1 {
            return vec![self.clone()];
        }
        comps.iter().map(|c| self.induced_subgraph(c)).collect()
    }

    /// Bridges of the graph, as `(a, b)` with `a < b`. Parallel copies and
    /// loops are never bridges.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if a != b {
                adj[a].push((b, id));
                adj[b].push((a, id));
            }
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent edge id, next adjacency index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (v, pe) = (top.0, top.1);
                if top.2 < adj[v].len() {
                    let (w, id) = adj[v][top.2];
                    top.2 += 1;
                    if id == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, id, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(norm(p, v));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Plain union-find with path halving and size-balanced unions.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], count: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.count -= 1;
        true
    }

    pub fn count(&self) -> usize {
        self.count
    }
}
