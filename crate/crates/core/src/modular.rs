//! Modular decomposition and the module reduction rule.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::completion::Completion;
use crate::error::Error;
use crate::graph::{components, Graph, VertexId};
use crate::recognition::is_interval_induced;
use crate::set::VertexSet;

/// `M` is a module if every vertex outside `M` sees all of it or none of it.
pub fn is_module(g: &Graph, m: VertexSet) -> bool {
    (g.vertices() - m).iter().all(|v| {
        let seen = g.neighbors(v) & m;
        seen.is_empty() || seen == m
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Union,
    Join,
    Prime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleNode {
    pub label: VertexSet,
    pub kind: NodeKind,
    /// Ordered by minimum vertex.
    pub children: Vec<ModuleNode>,
}

impl ModuleNode {
    /// Nodes in preorder (parent before children, children in order).
    pub fn preorder(&self) -> Vec<&ModuleNode> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            stack.extend(t.children.iter().rev());
        }
        out
    }
}

/// The module decomposition tree of a graph with at least one vertex.
pub fn decompose(g: &Graph) -> Result<ModuleNode, Error> {
    if g.n() == 0 {
        return Err(Error::Invariant("decomposition of the empty graph"));
    }
    Ok(decompose_set(g, g.vertices()))
}

fn decompose_set(g: &Graph, s: VertexSet) -> ModuleNode {
    if s.len() == 1 {
        return ModuleNode { label: s, kind: NodeKind::Leaf, children: Vec::new() };
    }
    let comps = components(g, g.vertices() - s);
    if comps.len() > 1 {
        return node(g, s, NodeKind::Union, comps);
    }
    let co = co_components(g, s);
    if co.len() > 1 {
        return node(g, s, NodeKind::Join, co);
    }
    node(g, s, NodeKind::Prime, maximal_proper_modules(g, s))
}

fn node(g: &Graph, s: VertexSet, kind: NodeKind, mut parts: Vec<VertexSet>) -> ModuleNode {
    parts.sort_by_key(|p| p.first());
    ModuleNode {
        label: s,
        kind,
        children: parts.into_iter().map(|p| decompose_set(g, p)).collect(),
    }
}

/// Components of the complement of `G[s]`.
fn co_components(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut rest = s;
    let mut out = Vec::new();
    while let Some(v) = rest.first() {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= s - g.closed_neighbors(u);
            }
            frontier = next - seen;
            seen |= frontier;
        }
        out.push(seen);
        rest -= seen;
    }
    out
}

/// Smallest module of `G[s]` containing `x`: keep adding vertices of `s`
/// that see part of the current set but not all of it.
fn module_closure(g: &Graph, s: VertexSet, x: VertexSet) -> VertexSet {
    let mut m = x;
    loop {
        let splitters: VertexSet = (s - m)
            .iter()
            .filter(|&z| {
                let seen = g.neighbors(z) & m;
                !seen.is_empty() && seen != m
            })
            .collect();
        if splitters.is_empty() {
            return m;
        }
        m |= splitters;
    }
}

/// Maximal proper modules of `G[s]` when `G[s]` and its complement are both
/// connected. They partition `s`.
fn maximal_proper_modules(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut rest = s;
    let mut out = Vec::new();
    while let Some(v) = rest.first() {
        let m: VertexSet = (s.without(v))
            .iter()
            .filter(|&w| module_closure(g, s, VertexSet::singleton(v).with(w)) != s)
            .collect::<VertexSet>()
            .with(v);
        out.push(m);
        rest -= m;
    }
    out
}

/// One firing of the reduction rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    /// Common neighborhood of the matched modules.
    pub x: VertexSet,
    /// All children of the union node that have neighborhood `x`.
    pub modules: Vec<VertexSet>,
    /// `None` when more than `k` of the modules are not interval, which
    /// certifies that no solution of size `k` exists.
    pub removed: Option<VertexSet>,
}

/// Looks for `2k + 3` components of `G \ X` that are modules with equal
/// neighborhoods. Union nodes are scanned in preorder and the first match
/// wins; the removed module is the interval one with the largest minimum.
pub fn find_rule_application(g: &Graph, k: usize) -> Option<RuleApplication> {
    if g.n() == 0 {
        return None;
    }
    let tree = decompose_set(g, g.vertices());
    for t in tree.preorder() {
        if t.kind != NodeKind::Union {
            continue;
        }
        let mut groups: Vec<(VertexSet, Vec<VertexSet>)> = Vec::new();
        for c in &t.children {
            let nb = g.neighborhood(c.label);
            match groups.iter_mut().find(|(x, _)| *x == nb) {
                Some((_, ms)) => ms.push(c.label),
                None => groups.push((nb, alloc::vec![c.label])),
            }
        }
        if let Some((x, modules)) = groups.into_iter().find(|(_, ms)| ms.len() >= 2 * k + 3) {
            let bad = modules.iter().filter(|m| !is_interval_induced(g, **m)).count();
            let removed = if bad > k {
                None
            } else {
                modules
                    .iter()
                    .filter(|m| is_interval_induced(g, **m))
                    .max_by_key(|m| m.first())
                    .copied()
            };
            return Some(RuleApplication { x, modules, removed });
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Reduction {
    Reduced {
        graph: Graph,
        /// `map[i]` is the original id of vertex `i` of `graph`.
        map: Vec<VertexId>,
        trace: Vec<RuleApplication>,
    },
    NoInstance {
        trace: Vec<RuleApplication>,
    },
}

/// Applies the rule until it no longer fires. Trace entries use the ids of
/// the input graph.
pub fn reduce_exhaustively(g: &Graph, k: usize) -> Reduction {
    let mut cur = g.clone();
    let mut map: Vec<VertexId> = (0..g.n()).collect();
    let mut trace = Vec::new();
    let lift = |s: VertexSet, map: &[VertexId]| -> VertexSet { s.iter().map(|v| map[v]).collect() };
    while let Some(app) = find_rule_application(&cur, k) {
        let step = RuleApplication {
            x: lift(app.x, &map),
            modules: app.modules.iter().map(|m| lift(*m, &map)).collect(),
            removed: app.removed.map(|m| lift(m, &map)),
        };
        trace.push(step);
        let Some(drop) = app.removed else {
            return Reduction::NoInstance { trace };
        };
        let (next, sub) = cur.remove_vertices(drop);
        map = sub.iter().map(|&v| map[v]).collect();
        cur = next;
    }
    Reduction::Reduced { graph: cur, map, trace }
}

/// Whether the connected module `m` of `g` is still a module in `G + F`.
pub fn check_module_stays(g: &Graph, f: &Completion, m: VertexSet) -> Result<bool, Error> {
    if m.is_empty() || !m.is_subset(g.vertices()) || !g.is_connected_set(m) || !is_module(g, m) {
        return Err(Error::NotAConnectedModule);
    }
    Ok(is_module(&f.apply(g), m))
}

/// Every module of `g`, by brute force over all vertex subsets. Small `n`
/// only.
pub fn all_modules(g: &Graph) -> Vec<VertexSet> {
    g.vertices()
        .subsets()
        .filter(|m| !m.is_empty() && is_module(g, *m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    fn check_tree(g: &Graph, t: &ModuleNode) {
        assert!(is_module(g, t.label));
        let mut union = VertexSet::EMPTY;
        for c in &t.children {
            assert!(c.label.is_subset(t.label) && !c.label.intersects(union));
            union |= c.label;
            check_tree(g, c);
        }
        match t.kind {
            NodeKind::Leaf => assert_eq!(t.label.len(), 1),
            NodeKind::Union => {
                assert_eq!(union, t.label);
                assert_eq!(t.children.len(), components(g, g.vertices() - t.label).len());
            }
            NodeKind::Join => {
                assert_eq!(union, t.label);
                assert_eq!(t.children.len(), co_components(g, t.label).len());
            }
            NodeKind::Prime => {
                assert_eq!(union, t.label);
                for c in &t.children {
                    // No proper module strictly between the child and the node.
                    for m in all_modules(g) {
                        if c.label.is_subset(m) && m != c.label && m.is_subset(t.label) {
                            assert_eq!(m, t.label);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let t = decompose(&Graph::new(2).unwrap()).unwrap();
        assert_eq!(t.kind, NodeKind::Union);
        assert_eq!(t.children.len(), 2);
        assert_eq!(decompose(&complete(2)).unwrap().kind, NodeKind::Join);
        let p4 = decompose(&path(4)).unwrap();
        assert_eq!(p4.kind, NodeKind::Prime);
        assert_eq!(p4.children.len(), 4);
        assert!(p4.children.iter().all(|c| c.kind == NodeKind::Leaf));
        assert_eq!(all_modules(&path(4)).len(), 4 + 1);
    }

    #[test]
    fn is_module_examples() {
        assert!(is_module(&star(3), set(&[1, 2])));
        assert!(!is_module(&path(4), set(&[1, 2])));
        let g = net();
        assert!(is_module(&g, set(&[4])) && is_module(&g, g.vertices()));
    }

    #[test]
    fn rule_examples() {
        let app = find_rule_application(&star(3), 0).unwrap();
        assert_eq!(app.x, set(&[0]));
        assert_eq!(app.modules, vec![set(&[1]), set(&[2]), set(&[3])]);
        assert_eq!(app.removed, Some(set(&[3])));
        assert_eq!(find_rule_application(&path(4), 0), None);
        assert_eq!(find_rule_application(&path(4), 3), None);

        // Center 0 joined to three disjoint C4s.
        let mut e = vec![];
        for b in 0..3 {
            let base = 1 + 4 * b;
            for i in 0..4 {
                e.push((base + i, base + (i + 1) % 4));
                e.push((0, base + i));
            }
        }
        let g = Graph::from_edges(13, &e).unwrap();
        let app = find_rule_application(&g, 0).unwrap();
        assert_eq!(app.removed, None);
        assert_eq!(app.modules.len(), 3);
    }

    #[test]
    fn reduction_examples() {
        match reduce_exhaustively(&star(5), 0) {
            Reduction::Reduced { graph, map, trace } => {
                assert_eq!(graph, star(2));
                assert_eq!(map, vec![0, 1, 2]);
                assert_eq!(trace.len(), 3);
                assert_eq!(trace[0].removed, Some(set(&[5])));
            }
            other => panic!("{other:?}"),
        }
        let p5 = path(5);
        assert!(matches!(reduce_exhaustively(&p5, 0), Reduction::Reduced { ref graph, .. } if *graph == p5));
        assert!(matches!(reduce_exhaustively(&star(3), 1), Reduction::Reduced { ref trace, .. } if trace.is_empty()));
    }

    #[test]
    fn module_stays_examples() {
        let c4 = cycle(4);
        let f = Completion::new(&c4, &[(0, 2)]).unwrap();
        assert_eq!(check_module_stays(&c4, &f, set(&[1])), Ok(true));
        assert_eq!(check_module_stays(&c4, &f, set(&[0, 1])), Err(Error::NotAConnectedModule));
        let p4 = path(4);
        assert_eq!(check_module_stays(&p4, &Completion::empty(), p4.vertices()), Ok(true));
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

    fn covers(t: &ModuleNode, m: VertexSet) -> bool {
        if t.label == m {
            return true;
        }
        if matches!(t.kind, NodeKind::Union | NodeKind::Join) {
            let inside: Vec<_> = t.children.iter().filter(|c| c.label.is_subset(m)).collect();
            let u = inside.iter().fold(VertexSet::EMPTY, |a, c| a | c.label);
            if u == m && inside.len() >= 2 {
                return true;
            }
        }
        t.children.iter().any(|c| covers(c, m))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn decomposition_is_valid(g in arb_graph(7)) {
            let t = decompose(&g).unwrap();
            prop_assert_eq!(t.label, g.vertices());
            check_tree(&g, &t);
            for m in all_modules(&g) {
                prop_assert!(covers(&t, m), "module {:?} not represented", m);
            }
        }
    }
}
