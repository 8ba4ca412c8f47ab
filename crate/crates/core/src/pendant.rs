//! Pendant occurrences: induced copies of a rooted connected graph that hang
//! off the rest of the host by a single edge at the root.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form_colored, CanonKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A connected simple graph with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootedPendant {
    graph: Graph,
    root: usize,
}

impl RootedPendant {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if graph.order() == 0 || root >= graph.order() {
            return Err(Error::domain(format!("root {root} is not a vertex of the pendant")));
        }
        if !graph.is_simple() || !graph.is_connected() {
            return Err(Error::domain("a pendant must be a connected simple graph"));
        }
        Ok(RootedPendant { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Same graph, different root.
    pub fn rerooted(&self, root: usize) -> Result<Self> {
        RootedPendant::new(self.graph.clone(), root)
    }

    fn colored_key(&self) -> CanonKey {
        let mut colors = vec![0; self.order()];
        colors[self.root] = 1;
        canonical_form_colored(&self.graph, &colors).key
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchMode {
    /// The increasing bijection from the pendant's vertices onto the witness
    /// set must be an isomorphism, and the crossing edge must sit at the image
    /// of the pendant's root.
    Labeled,
    /// Any isomorphism that carries the pendant's root to the crossing-edge
    /// endpoint is accepted.
    Relaxed,
}

/// A witness set `W` with exactly one edge `(root, attachment)` leaving it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PendantOccurrence {
    /// Sorted vertex set of the copy.
    pub witness: Vec<usize>,
    /// Endpoint of the crossing edge inside `witness`.
    pub root: usize,
    /// Endpoint of the crossing edge outside `witness`.
    pub attachment: usize,
}

impl PendantOccurrence {
    /// Checks the cut condition: `witness` is a proper vertex set, `root` is in
    /// it, and `(root, attachment)` is the one and only edge leaving it.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let n = g.order();
        let w = &self.witness;
        if w.is_empty() || w.windows(2).any(|p| p[0] >= p[1]) || w.last().is_some_and(|&v| v >= n) {
            return false;
        }
        let inside = |v: usize| w.binary_search(&v).is_ok();
        if !inside(self.root) || self.attachment >= n || inside(self.attachment) {
            return false;
        }
        let mut crossing = g.edges().iter().filter(|&&(a, b)| inside(a) != inside(b));
        let first = crossing.next();
        let want = if self.root < self.attachment { (self.root, self.attachment) } else { (self.attachment, self.root) };
        first == Some(&want) && crossing.next().is_none()
    }
}

/// All pendant occurrences of `p` in `g`, sorted.
pub fn find_pendant_occurrences(g: &Graph, p: &RootedPendant, mode: MatchMode) -> Result<Vec<PendantOccurrence>> {
    if !g.is_simple() {
        return Err(Error::domain("pendant occurrences are defined for simple hosts"));
    }
    if p.order() >= g.order() {
        return Err(Error::domain(format!(
            "pendant of order {} cannot occur in a host of order {}",
            p.order(),
            g.order()
        )));
    }
    let h = p.order();
    let target = (mode == MatchMode::Relaxed).then(|| p.colored_key());
    let mut out = Vec::new();
    for (a, b) in g.bridges() {
        for (root, attachment) in [(a, b), (b, a)] {
            let side = side_of_bridge(g, root, attachment);
            if side.len() != h {
                continue;
            }
            let sub = g.induced_subgraph(&side);
            let pos = side.binary_search(&root).expect("root lies on its own side");
            let ok = match &target {
                None => pos == p.root && sub == p.graph,
                Some(key) => {
                    let mut colors = vec![0; h];
                    colors[pos] = 1;
                    canonical_form_colored(&sub, &colors).key == *key
                }
            };
            if ok {
                out.push(PendantOccurrence { witness: side, root, attachment });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Sorted vertices reachable from `root` without crossing `(root, other)`.
fn side_of_bridge(g: &Graph, root: usize, other: usize) -> Vec<usize> {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        if (a, b) == (root.min(other), root.max(other)) {
            continue;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![root];
    let mut side = Vec::new();
    while let Some(v) = stack.pop() {
        side.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    side.sort_unstable();
    side
}

/// Disjoint union of `core` and `p` plus the edge from `attach` to the root.
/// The pendant's vertices follow the core's.
pub fn graft_pendant(core: &Graph, attach: usize, p: &RootedPendant) -> Result<Graph> {
    if attach >= core.order() {
        return Err(Error::domain(format!("attachment vertex {attach} is not in the core")));
    }
    core.bridge_join(attach, &p.graph, p.root)
}

/// Removes the witness set of `occ` and grafts `q` at the former attachment
/// vertex, with `q`'s root carrying the new crossing edge.
pub fn replace_pendant(g: &Graph, occ: &PendantOccurrence, q: &RootedPendant) -> Result<Graph> {
    if !occ.is_valid_in(g) {
        return Err(Error::Consistency(format!(
            "occurrence with witness {:?} no longer hangs off vertex {} by a single edge",
            occ.witness, occ.attachment
        )));
    }
    let host = g.delete_vertices(&occ.witness);
    let shift = occ.witness.partition_point(|&w| w < occ.attachment);
    graft_pendant(&host, occ.attachment - shift, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn k2_root0() -> RootedPendant {
        RootedPendant::new(Graph::complete(2), 0).unwrap()
    }

    #[test]
    fn path_has_one_labeled_k2_occurrence() {
        let occ = find_pendant_occurrences(&Graph::path(4), &k2_root0(), MatchMode::Labeled).unwrap();
        assert_eq!(occ, vec![PendantOccurrence { witness: vec![2, 3], root: 2, attachment: 1 }]);
        let relaxed = find_pendant_occurrences(&Graph::path(4), &k2_root0(), MatchMode::Relaxed).unwrap();
        assert_eq!(relaxed.len(), 2);
    }

    #[test]
    fn star_has_no_k2_occurrence() {
        assert!(find_pendant_occurrences(&Graph::star(4), &k2_root0(), MatchMode::Labeled).unwrap().is_empty());
    }

    #[test]
    fn pendant_must_be_smaller_than_host() {
        assert!(find_pendant_occurrences(&Graph::complete(2), &k2_root0(), MatchMode::Labeled).is_err());
    }

    #[test]
    fn grafting_examples() {
        let p = graft_pendant(&Graph::empty(1), 0, &k2_root0()).unwrap();
        assert_eq!(p, Graph::path(3));
        let k1 = RootedPendant::new(Graph::empty(1), 0).unwrap();
        let c4 = graft_pendant(&Graph::cycle(4), 0, &k1).unwrap();
        assert_eq!((c4.order(), c4.size(), c4.degree(4)), (5, 5, 1));
        assert!(graft_pendant(&Graph::empty(1), 1, &k1).is_err());
    }

    #[test]
    fn replacement_examples() {
        let g = Graph::path(4);
        let occ = &find_pendant_occurrences(&g, &k2_root0(), MatchMode::Labeled).unwrap()[0];
        assert!(are_isomorphic(&replace_pendant(&g, occ, &k2_root0()).unwrap(), &g));

        let p5 = Graph::path(5);
        let end = RootedPendant::new(Graph::path(3), 0).unwrap();
        let mid = end.rerooted(1).unwrap();
        let occ = &find_pendant_occurrences(&p5, &end, MatchMode::Relaxed).unwrap()[0];
        let h = replace_pendant(&p5, occ, &mid).unwrap();
        assert_eq!((h.order(), h.size()), (5, 4));
        assert!(!are_isomorphic(&h, &p5));
    }

    #[test]
    fn stale_occurrence_is_rejected() {
        let g = Graph::path(4);
        let occ = find_pendant_occurrences(&g, &k2_root0(), MatchMode::Labeled).unwrap().remove(0);
        let changed = g.add_edge(1, 3).unwrap();
        assert!(matches!(replace_pendant(&changed, &occ, &k2_root0()), Err(Error::Consistency(_))));
    }
}
