//! Completions (sets of fill edges) and the cheap/expensive classification.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::set::VertexSet;

/// A set of non-edges, stored as `(u, v)` pairs with `u < v` in increasing
/// order. The derived ordering compares the sorted pair lists
/// lexicographically, which is ≺ lifted to completions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Completion(Vec<(VertexId, VertexId)>);

impl Completion {
    pub fn empty() -> Self {
        Completion(Vec::new())
    }

    /// Normalizes and checks that every pair is a non-edge of `g`.
    pub fn new(g: &Graph, pairs: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        let mut out = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if u == v || g.has_edge(u, v) {
                return Err(Error::NotANonEdge(u, v));
            }
            out.push((u, v));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Completion(out))
    }

    /// Wraps pairs that are already normalized and sorted.
    pub(crate) fn from_sorted(pairs: Vec<(VertexId, VertexId)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]) && pairs.iter().all(|p| p.0 < p.1));
        Completion(pairs)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.0
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        let p = if u < v { (u, v) } else { (v, u) };
        self.0.binary_search(&p).is_ok()
    }

    /// G + F.
    pub fn apply(&self, g: &Graph) -> Graph {
        g.with_edges(&self.0)
    }

    /// Number of fill edges incident with `v`.
    pub fn incident(&self, v: VertexId) -> usize {
        self.0.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Partners of `v` through fill edges.
    pub fn partners(&self, v: VertexId) -> VertexSet {
        self.0
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn touched(&self) -> VertexSet {
        self.0.iter().fold(VertexSet::EMPTY, |s, &(a, b)| s.with(a).with(b))
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains_all(&self, other: &Completion) -> bool {
        other.0.iter().all(|p| self.0.binary_search(p).is_ok())
    }

    /// The same pairs with every id passed through `map`.
    pub fn relabel(&self, map: &[VertexId]) -> Completion {
        let mut out: Vec<_> = self
            .0
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map[a], map[b]);
                if x < y { (x, y) } else { (y, x) }
            })
            .collect();
        out.sort_unstable();
        Completion(out)
    }
}

impl fmt::Debug for Completion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// `x <= c * sqrt(k) + d`, decided exactly in integers.
pub fn le_scaled_sqrt(x: usize, c: usize, k: usize, d: usize) -> bool {
    x <= d || (x - d) * (x - d) <= c * c * k
}

/// `x <= sqrt(k)`.
#[inline]
pub fn le_sqrt(x: usize, k: usize) -> bool {
    le_scaled_sqrt(x, 1, k, 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    /// Number of fill edges at the vertex.
    pub incident: usize,
    pub touched: bool,
    /// At most sqrt(k) incident fill edges.
    pub cheap: bool,
}

/// Touched/cheap status of every vertex of `g` with respect to `f` and `k`.
pub fn classify_vertices(g: &Graph, f: &Completion, k: usize) -> Vec<VertexClass> {
    (0..g.n())
        .map(|v| {
            let incident = f.incident(v);
            VertexClass { incident, touched: incident > 0, cheap: le_sqrt(incident, k) }
        })
        .collect()
}

/// The set of cheap vertices.
pub fn cheap_vertices(g: &Graph, f: &Completion, k: usize) -> VertexSet {
    classify_vertices(g, f, k)
        .iter()
        .enumerate()
        .filter(|(_, c)| c.cheap)
        .map(|(v, _)| v)
        .collect()
}
