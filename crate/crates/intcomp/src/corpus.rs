//! Graph corpora: exhaustive non-isomorphic graphs, seeded random graphs
//! and named fixtures.

use std::collections::BTreeSet;

use intcomp_core::graph::named;
use intcomp_core::{Graph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `n` the exhaustive generator accepts.
pub const EXHAUSTIVE_CAP: usize = 8;

#[derive(Debug, Error, PartialEq)]
pub enum CorpusError {
    #[error("n = {n} exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("edge probability {0} is not in [0, 1]")]
    BadProbability(f64),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceKind {
    /// Every connected graph on exactly `n` vertices, one per isomorphism
    /// class.
    Exhaustive { n: usize },
    /// `count` graphs on `n` vertices, each pair an edge with probability `p`.
    Random { n: usize, p: f64, seed: u64, count: usize },
    Named { name: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    #[serde(flatten)]
    pub kind: InstanceKind,
    pub k: usize,
}

/// The graphs a spec describes, in a fixed order.
pub fn generate(spec: &InstanceSpec) -> Result<Vec<Graph>, CorpusError> {
    match &spec.kind {
        InstanceKind::Exhaustive { n } => connected_graphs(*n),
        InstanceKind::Random { n, p, seed, count } => {
            if !(0.0..=1.0).contains(p) {
                return Err(CorpusError::BadProbability(*p));
            }
            if *n > intcomp_core::MAX_VERTICES {
                return Err(CorpusError::TooLarge { n: *n, cap: intcomp_core::MAX_VERTICES });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Ok((0..*count).map(|_| random_graph(*n, *p, &mut rng)).collect())
        }
        InstanceKind::Named { name } => named_graph(name).map(|g| vec![g]).ok_or_else(|| CorpusError::UnknownFixture(name.clone())),
    }
}

/// G(n, p): every pair independently an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n).expect("n checked by the caller");
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Fixtures by name: `net`, `long-claw`, `k23`-style complete bipartite
/// graphs, and `p<n>`, `c<n>`, `k<n>`, `star<m>`, `e<n>` (no edges).
pub fn named_graph(name: &str) -> Option<Graph> {
    let name = name.to_ascii_lowercase();
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
    let small = |n: usize| n <= intcomp_core::MAX_VERTICES;
    match name.as_str() {
        "net" => return Some(named::net()),
        "long-claw" | "longclaw" => return Some(named::long_claw()),
        _ => {}
    }
    if let Some(m) = num("star").filter(|&m| small(m + 1)) {
        return Some(named::star(m));
    }
    if let Some(n) = num("p").filter(|&n| small(n)) {
        return Some(named::path(n));
    }
    if let Some(n) = num("c").filter(|&n| n >= 3 && small(n)) {
        return Some(named::cycle(n));
    }
    if let Some(n) = num("e").filter(|&n| small(n)) {
        return Graph::new(n).ok();
    }
    if let Some(rest) = name.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once(',') {
            let (a, b) = (a.parse().ok()?, b.parse().ok()?);
            return small(a + b).then(|| named::complete_bipartite(a, b));
        }
        if rest.len() == 2 && rest.bytes().all(|b| b.is_ascii_digit()) && rest != "10" {
            let (a, b) = ((rest.as_bytes()[0] - b'0') as usize, (rest.as_bytes()[1] - b'0') as usize);
            return Some(named::complete_bipartite(a, b));
        }
        let n: usize = rest.parse().ok()?;
        return small(n).then(|| named::complete(n));
    }
    None
}

/// Upper-triangle adjacency bits, pair `(i, j)` with `i < j` at index
/// `j (j - 1) / 2 + i`.
fn encode(g: &Graph, order: &[VertexId]) -> u64 {
    let mut bits = 0u64;
    let mut k = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

fn decode(n: usize, bits: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

/// Colour refinement started from degrees. Colours are ranks of sorted
/// signatures, so they do not depend on the labelling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sig.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sig.iter().map(|s| ranks.binary_search(&s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&color) {
            return next;
        }
        color = next;
    }
}

/// Isomorphism-invariant form of a graph with at most 11 vertices: the
/// smallest adjacency bitstring over all orderings that list the refined
/// colour classes in order.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let color = refine(g);
    let mut cells: Vec<Vec<VertexId>> = Vec::new();
    let mut by_color: Vec<(usize, VertexId)> = (0..n).map(|v| (color[v], v)).collect();
    by_color.sort_unstable();
    for (c, v) in by_color {
        match cells.last_mut() {
            Some(cell) if color[cell[0]] == c => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    fn go(g: &Graph, cells: &mut [Vec<VertexId>], ci: usize, order: &mut Vec<VertexId>, best: &mut u64) {
        if ci == cells.len() {
            *best = (*best).min(encode(g, order));
            return;
        }
        if cells[ci].is_empty() {
            return go(g, cells, ci + 1, order, best);
        }
        for i in 0..cells[ci].len() {
            let v = cells[ci].remove(i);
            order.push(v);
            go(g, cells, ci, order, best);
            order.pop();
            cells[ci].insert(i, v);
        }
    }
    go(g, &mut cells, 0, &mut order, &mut best);
    (n, best)
}

/// The representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (n, bits) = canonical_form(g);
    decode(n, bits)
}

/// One graph per isomorphism class on exactly `n` vertices, built by adding
/// a vertex in every possible way to the classes on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, CorpusError> {
    if n > EXHAUSTIVE_CAP {
        return Err(CorpusError::TooLarge { n, cap: EXHAUSTIVE_CAP });
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for &bits in &level {
            let base = decode(m - 1, bits);
            for mask in 0u64..1 << (m - 1) {
                let mut g = Graph::new(m).unwrap();
                for (u, v) in base.edges() {
                    g.add_edge(u, v).unwrap();
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, m - 1).unwrap();
                    }
                }
                next.insert(canonical_form(&g).1);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|bits| decode(n, bits)).collect())
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, CorpusError> {
    Ok(all_graphs(n)?.into_iter().filter(|g| g.is_connected_set(g.vertices())).collect())
}

/// Connected graphs on `1..=n_max` vertices, smallest first.
pub fn connected_up_to(n_max: usize) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}
