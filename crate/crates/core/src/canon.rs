//! Canonical labeling by partition refinement and individualization, with
//! automorphism pruning.
//!
//! The search explores the tree of ordered partitions obtained by repeatedly
//! refining to an equitable partition and individualizing a vertex of the
//! first non-singleton cell. Leaves are compared by their relabeled edge list;
//! the least one is the canonical form. Leaves equal to the first leaf yield
//! automorphisms, which prune sibling branches in the same orbit and give the
//! group order through the orbit–stabilizer chain along the first path.
//! Loops and edge multiplicities take part in refinement, so multigraphs are
//! handled directly.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, UnionFind};

/// Largest order accepted by the canonical labeler.
pub const MAX_CANON_ORDER: usize = 64;

/// Hashable identity of an isomorphism class (of vertex-coloured graphs when
/// `colors` is non-empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonKey {
    pub order: usize,
    pub colors: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl CanonKey {
    /// The canonical representative as a graph.
    pub fn graph(&self) -> Graph {
        Graph::from_edges_unchecked(self.order, self.edges.iter().copied())
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonKey,
    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub labeling: Vec<usize>,
    pub automorphism_count: BigUint,
    /// Generators of the automorphism group, as vertex permutations.
    pub generators: Vec<Vec<usize>>,
}

impl CanonicalForm {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.key.edges
    }

    pub fn graph(&self) -> Graph {
        self.key.graph()
    }

    /// Orbit representative (least vertex of the orbit) for every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.labeling.len();
        let mut uf = UnionFind::new(n);
        for g in &self.generators {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w);
            }
        }
        let mut least = vec![usize::MAX; n];
        for v in 0..n {
            let r = uf.find(v);
            least[r] = least[r].min(v);
        }
        (0..n).map(|v| least[uf.find(v)]).collect()
    }

    /// Input vertex that receives the last canonical label.
    pub fn last_vertex(&self) -> Option<usize> {
        let n = self.labeling.len();
        self.labeling.iter().position(|&l| l + 1 == n)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g, None)
}

/// Canonical form of a vertex-coloured graph. Isomorphisms must preserve
/// colours; colour classes receive consecutive canonical labels in increasing
/// colour order.
pub fn canonical_form_colored(g: &Graph, colors: &[usize]) -> CanonicalForm {
    assert_eq!(colors.len(), g.order(), "one colour per vertex");
    canonize(g, Some(colors))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && {
            let mut a = g.degrees();
            let mut b = h.degrees();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
        && canonical_form(g).key == canonical_form(h).key
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    pos: Vec<usize>,
    cert: Vec<(usize, usize)>,
}

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<Vec<u32>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

fn canonize(g: &Graph, colors: Option<&[usize]>) -> CanonicalForm {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical labeling is budgeted for order <= {MAX_CANON_ORDER}");
    let adj = g.adjacency_matrix();
    let degrees = g.degrees();
    let color = |v: usize| colors.map_or(0, |c| c[v]);
    let mut verts: Vec<usize> = (0..n).collect();
    let init_key = |v: usize| (color(v), adj[v][v], degrees[v]);
    verts.sort_by_key(|&v| (init_key(v), v));
    let mut cells: Cells = Vec::new();
    for v in verts {
        match cells.last_mut() {
            Some(c) if init_key(c[0]) == init_key(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }

    let mut s = Search { g, adj, first: None, best: None, first_path: Vec::new(), generators: Vec::new() };
    let mut prefix = Vec::new();
    s.search(cells, &mut prefix, true);

    let best = s.best.take().expect("search reaches at least one leaf");
    let mut count = BigUint::one();
    for k in 0..s.first_path.len() {
        let orbit = s.orbit_size(s.first_path[k], &s.first_path[..k]);
        count *= BigUint::from(orbit);
    }
    let key_colors = match colors {
        None => Vec::new(),
        Some(c) => {
            let mut by_label = vec![0; n];
            for v in 0..n {
                by_label[best.pos[v]] = c[v];
            }
            by_label
        }
    };
    CanonicalForm {
        key: CanonKey { order: n, colors: key_colors, edges: best.cert },
        labeling: best.pos,
        automorphism_count: count,
        generators: s.generators,
    }
}

impl Search<'_> {
    fn refine(&self, mut cells: Cells) -> Cells {
        let n = self.adj.len();
        let mut cell_of = vec![0usize; n];
        loop {
            for (ci, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = ci;
                }
            }
            let k = cells.len();
            let mut next: Cells = Vec::with_capacity(k);
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sigs: Vec<(Vec<u32>, usize)> = c
                    .iter()
                    .map(|&v| {
                        let mut counts = vec![0u32; k];
                        for (w, &m) in self.adj[v].iter().enumerate() {
                            if m != 0 {
                                counts[cell_of[w]] += m;
                            }
                        }
                        (counts, v)
                    })
                    .collect();
                sigs.sort_by(|a, b| a.0.cmp(&b.0));
                let mut start = 0;
                for i in 1..=sigs.len() {
                    if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                        next.push(sigs[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let done = next.len() == k;
            cells = next;
            if done {
                return cells;
            }
        }
    }

    fn orbit_roots_fixing(&self, fixed: &[usize]) -> UnionFind {
        let n = self.adj.len();
        let mut uf = UnionFind::new(n);
        for gen in &self.generators {
            if fixed.iter().all(|&v| gen[v] == v) {
                for (v, &w) in gen.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }

    fn orbit_size(&self, v: usize, fixed: &[usize]) -> usize {
        let mut uf = self.orbit_roots_fixing(fixed);
        let r = uf.find(v);
        (0..self.adj.len()).filter(|&w| uf.find(w) == r).count()
    }

    /// Returns `Some(level)` to unwind to the node whose prefix has that length.
    fn search(&mut self, cells: Cells, prefix: &mut Vec<usize>, on_first: bool) -> Option<usize> {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let mut uf = self.orbit_roots_fixing(prefix);
                let rv = uf.find(v);
                if explored.iter().any(|&u| uf.find(u) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            let is_first = on_first && explored.len() == 1;
            if is_first {
                self.first_path.push(v);
            }
            prefix.push(v);
            let jump = self.search(child, prefix, is_first);
            prefix.pop();
            if let Some(level) = jump {
                if level < prefix.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, prefix: &[usize]) -> Option<usize> {
        let n = self.adj.len();
        let mut pos = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            pos[c[0]] = i;
        }
        let mut cert: Vec<(usize, usize)> = self
            .g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (pos[a], pos[b]);
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        cert.sort_unstable();

        let Some(first) = &self.first else {
            self.first = Some(Leaf { pos: pos.clone(), cert: cert.clone() });
            self.best = Some(Leaf { pos, cert });
            return None;
        };
        if cert == first.cert {
            let gen = automorphism(&first.pos, &pos);
            self.generators.push(gen);
            let common = prefix.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Less => self.best = Some(Leaf { pos, cert }),
            std::cmp::Ordering::Equal => {
                let gen = automorphism(&best.pos, &pos);
                self.generators.push(gen);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }
}

/// The permutation sending each vertex to the vertex holding the same
/// position in `reference`.
fn automorphism(reference: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; reference.len()];
    for (v, &p) in reference.iter().enumerate() {
        inv[p] = v;
    }
    other.iter().map(|&p| inv[p]).collect()
}
