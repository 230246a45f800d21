//! Undirected simple graphs over a fixed vertex order.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::set::{VertexSet, MAX_VERTICES};

/// Vertex identifier. The numeric order of ids is the vertex order ≺.
pub type VertexId = usize;

/// The three vertices added by [`augment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Special {
    /// Universal vertex.
    pub root: VertexId,
    /// Pendant on `root`, drawn at the far left of every canonical model.
    pub left: VertexId,
    /// Pendant on `root`, drawn at the far right.
    pub right: VertexId,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<VertexSet>,
    special: Option<Special>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        Ok(Graph {
            adj: alloc::vec![VertexSet::EMPTY; n],
            special: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from symmetric adjacency rows. Panics on asymmetry.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, row)| !row.contains(u)
            && row.iter().all(|v| adj[v].contains(u))));
        Graph { adj, special: None }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), Error> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn special(&self) -> Option<Special> {
        self.special
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: VertexId) -> VertexSet {
        self.adj[v].with(v)
    }

    /// N(S): vertices outside `s` with a neighbor in `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        self.closed_neighborhood(s) - s
    }

    /// N[S] = S ∪ N(S).
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(VertexId, VertexId)> {
        let all = self.vertices();
        let mut out = Vec::new();
        for u in 0..self.n() {
            let missing = all - self.adj[u] - VertexSet::full(u + 1);
            out.extend(missing.iter().map(|v| (u, v)));
        }
        out
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.closed_neighbors(v)).is_empty())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: VertexId, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// G + F: the same vertex set with the extra edges added.
    pub fn with_edges(&self, extra: &[(VertexId, VertexId)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in extra {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    /// Complement graph (markers dropped).
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: (0..self.n()).map(|v| all - self.adj[v].with(v)).collect(),
            special: None,
        }
    }

    /// The subgraph induced by `keep`, relabelled densely in ≺ order.
    /// Returns the graph and the map from new ids to old ids.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<VertexId>) {
        let map: Vec<VertexId> = keep.iter().collect();
        let mut inv = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| inv[w]).collect())
            .collect();
        (Graph { adj, special: None }, map)
    }

    pub fn remove_vertices(&self, drop: VertexSet) -> (Graph, Vec<VertexId>) {
        self.induced(self.vertices() - drop)
    }

    /// The graph without its augmentation markers and vertices.
    pub fn strip_augmentation(&self) -> Result<Graph, Error> {
        let s = self.special.ok_or(Error::NotAugmented)?;
        let drop = VertexSet::singleton(s.root)
            .with(s.left)
            .with(s.right);
        Ok(self.remove_vertices(drop).0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?}", self.n(), self.edges())?;
        if let Some(s) = self.special {
            write!(f, ", special={s:?}")?;
        }
        f.write_str(")")
    }
}

/// Connected components of `G \ excluded`, ordered by their minimum vertex.
pub fn components(g: &Graph, excluded: VertexSet) -> Vec<VertexSet> {
    let mut rest = g.vertices() - excluded;
    let mut out = Vec::new();
    while let Some(v) = rest.first() {
        let c = g.reach(v, rest);
        out.push(c);
        rest -= c;
    }
    out
}

/// Adds a universal vertex 𝔯 and two pendants 𝔯_L, 𝔯_R on it.
///
/// Ids: 𝔯 = 0, 𝔯_L = 1, old vertex `v` becomes `v + 2`, 𝔯_R = n + 2, so that
/// 𝔯 ≺ 𝔯_L ≺ old vertices ≺ 𝔯_R.
pub fn augment(g: &Graph) -> Result<Graph, Error> {
    if g.special.is_some() {
        return Err(Error::AlreadyAugmented);
    }
    let n = g.n();
    if n + 3 > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: n + 3, cap: MAX_VERTICES });
    }
    let (root, left, right) = (0, 1, n + 2);
    let mut adj = alloc::vec![VertexSet::EMPTY; n + 3];
    for v in 0..n {
        adj[v + 2] = VertexSet::from_bits(g.adj[v].bits() << 2).with(root);
    }
    adj[root] = VertexSet::full(n + 3).without(root);
    adj[left] = VertexSet::singleton(root);
    adj[right] = VertexSet::singleton(root);
    Ok(Graph {
        adj,
        special: Some(Special { root, left, right }),
    })
}

/// Partition of `V \ a` by the trace `N(v) ∩ a`, classes ordered by minimum.
pub fn neighborhood_classes(g: &Graph, a: VertexSet) -> Vec<VertexSet> {
    let mut classes: Vec<(VertexSet, VertexSet)> = Vec::new();
    for v in g.vertices() - a {
        let key = g.neighbors(v) & a;
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, c)) => c.insert(v),
            None => classes.push((key, VertexSet::singleton(v))),
        }
    }
    classes.into_iter().map(|(_, c)| c).collect()
}

/// Number of components `C` of `G \ a` having a vertex that misses at most
/// `r` vertices of `a`.
pub fn count_low_deficiency_components(g: &Graph, a: VertexSet, r: usize) -> usize {
    components(g, a)
        .into_iter()
        .filter(|c| c.iter().any(|v| (a - g.neighbors(v)).len() <= r))
        .count()
}

/// Small named graphs used across tests and fixtures.
pub mod named {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b).unwrap();
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Star K_{1,m} with center 0.
    pub fn star(m: usize) -> Graph {
        complete_bipartite(1, m)
    }

    /// Triangle 0,1,2 with pendants 3,4,5 on its corners.
    pub fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    /// Subdivided claw: center 0, arms 1-2, 3-4, 5-6.
    pub fn long_claw() -> Graph {
        Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    /// Disjoint union, second graph's ids shifted after the first's.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let mut e = a.edges();
        let off = a.n();
        e.extend(b.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(a.n() + b.n(), &e).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn components_examples() {
        let p4 = path(4);
        assert_eq!(components(&p4, set(&[1])), vec![set(&[0]), set(&[2, 3])]);
        assert!(components(&p4, p4.vertices()).is_empty());
        assert_eq!(components(&cycle(4), set(&[0, 2])), vec![set(&[1]), set(&[3])]);
    }

    #[test]
    fn augment_examples() {
        let k1 = Graph::new(1).unwrap();
        let a = augment(&k1).unwrap();
        assert_eq!(a.n(), 4);
        assert_eq!(a.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        let a0 = augment(&Graph::new(0).unwrap()).unwrap();
        assert_eq!(a0.edges(), vec![(0, 1), (0, 2)]);
        let a2 = augment(&complete(2)).unwrap();
        assert_eq!(a2.edges(), vec![(0, 1), (0, 2), (0, 3), (0, 4), (2, 3)]);
        assert_eq!(augment(&a2), Err(Error::AlreadyAugmented));
        let s = a2.special().unwrap();
        assert_eq!((s.root, s.left, s.right), (0, 1, 4));
    }

    #[test]
    fn neighborhood_class_examples() {
        let p4 = path(4);
        assert_eq!(neighborhood_classes(&p4, set(&[1, 2])), vec![set(&[0]), set(&[3])]);
        assert_eq!(neighborhood_classes(&p4, VertexSet::EMPTY), vec![p4.vertices()]);
        assert_eq!(neighborhood_classes(&complete(4), set(&[0])), vec![set(&[1, 2, 3])]);
    }

    #[test]
    fn low_deficiency_examples() {
        assert_eq!(count_low_deficiency_components(&star(3), set(&[0]), 1), 3);
        let c6 = cycle(6);
        assert_eq!(count_low_deficiency_components(&c6, VertexSet::EMPTY, 1), 1);
        assert_eq!(count_low_deficiency_components(&c6, set(&[0, 3]), 1), 2);
        // Deficiency counted by brute force for the C6 case.
        let brute = components(&c6, set(&[0, 3]))
            .iter()
            .filter(|c| c.iter().any(|v| (0..6).filter(|&u| (u == 0 || u == 3) && !c6.has_edge(u, v)).count() <= 1))
            .count();
        assert_eq!(brute, 2);
    }

    #[test]
    fn non_edges_are_complement_edges() {
        let g = net();
        assert_eq!(g.non_edges(), g.complement().edges());
        assert_eq!(g.edges().len() + g.non_edges().len(), 15);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n).unwrap();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            g.add_edge(u, v).unwrap();
                        }
                        i += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn components_partition(g in arb_graph(10), ex in any::<u16>()) {
            let excluded = VertexSet::from_bits(ex as u64) & g.vertices();
            let cs = components(&g, excluded);
            let mut union = VertexSet::EMPTY;
            for (i, c) in cs.iter().enumerate() {
                prop_assert!(!c.intersects(union));
                union |= *c;
                prop_assert!(g.is_connected_set(*c));
                for d in &cs[i + 1..] {
                    prop_assert!(c.iter().all(|v| !g.neighbors(v).intersects(*d)));
                }
            }
            prop_assert_eq!(union, g.vertices() - excluded);
        }

        #[test]
        fn augment_strips_to_identity(g in arb_graph(10)) {
            let a = augment(&g).unwrap();
            let back = a.strip_augmentation().unwrap();
            prop_assert_eq!(back.edges(), g.edges());
        }
    }
}
