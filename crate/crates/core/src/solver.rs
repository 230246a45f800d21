//! Exact solvers for interval completion.
//!
//! [`solve_oracle`] enumerates fill sets by size and then in ≺ order, so the
//! first hit is the canonical solution. [`solve_branching`] reduces with the
//! module rule and branches on the non-edges of a minimal non-interval
//! induced subgraph, with iterative deepening on the budget.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::completion::Completion;
use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::model::IntervalModel;
use crate::modular::{reduce_exhaustively, Reduction};
use crate::recognition::{canonical_model, is_interval, minimal_witness};
use crate::set::VertexSet;

pub use crate::completion::{classify_vertices, VertexClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Solved,
    OverBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Size of a minimum completion, when one of size at most `k` exists.
    pub opt: Option<usize>,
    /// The ≺-smallest minimum completion. Only the oracle fills this in.
    pub canonical: Option<Completion>,
    /// Some minimum completion.
    pub solution: Option<Completion>,
    /// Canonical model of `G + solution`.
    pub canonical_model: Option<IntervalModel>,
    /// Every inclusion-minimal completion of size at most `k`, in
    /// enumeration order, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_minimal: Option<Vec<Completion>>,
}

impl SolveResult {
    fn over_budget() -> Self {
        SolveResult {
            status: SolveStatus::OverBudget,
            opt: None,
            canonical: None,
            solution: None,
            canonical_model: None,
            all_minimal: None,
        }
    }

    fn solved(g: &Graph, f: Completion, canonical: bool) -> Self {
        let model = canonical_model(&f.apply(g)).expect("solution makes the graph interval");
        SolveResult {
            status: SolveStatus::Solved,
            opt: Some(f.len()),
            canonical: canonical.then(|| f.clone()),
            solution: Some(f),
            canonical_model: Some(model),
            all_minimal: None,
        }
    }
}

/// Working copy of a graph that fill edges are toggled on.
struct Scratch {
    g: Graph,
}

impl Scratch {
    fn test(&mut self, pairs: impl Iterator<Item = (VertexId, VertexId)> + Clone) -> bool {
        for (u, v) in pairs.clone() {
            self.g.add_edge(u, v).unwrap();
        }
        let ok = is_interval(&self.g);
        for (u, v) in pairs {
            self.g.remove_edge(u, v);
        }
        ok
    }
}

/// Calls `f` on every `s`-subset of `0..m` in lexicographic order until it
/// returns `false`.
fn for_each_combination(m: usize, s: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if s > m {
        return;
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = s;
        while i > 0 && idx[i - 1] == m - s + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Number of fill sets of size at most `k` the oracle may have to test.
pub fn oracle_search_space(g: &Graph, k: usize) -> u128 {
    let m = g.non_edges().len() as u128;
    let mut total = 0u128;
    let mut c = 1u128;
    for s in 0..=k as u128 {
        if s > m {
            break;
        }
        total += c;
        c = c * (m - s) / (s + 1);
    }
    total
}

/// Exhaustive solver. Returns the canonical solution of size at most `k`.
pub fn solve_oracle(g: &Graph, k: usize) -> SolveResult {
    let non_edges = g.non_edges();
    let mut scratch = Scratch { g: g.clone() };
    for s in 0..=k.min(non_edges.len()) {
        let mut hit: Option<Vec<usize>> = None;
        for_each_combination(non_edges.len(), s, |idx| {
            if scratch.test(idx.iter().map(|&i| non_edges[i])) {
                hit = Some(idx.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(idx) = hit {
            let f = Completion::from_sorted(idx.iter().map(|&i| non_edges[i]).collect());
            return SolveResult::solved(g, f, true);
        }
    }
    SolveResult::over_budget()
}

/// Every inclusion-minimal completion of size at most `k`, ordered by size
/// and then by ≺. A completion is kept iff it contains no smaller one found
/// earlier, which checks all proper subsets, not just single removals.
pub fn minimal_completions(g: &Graph, k: usize) -> Result<Vec<Completion>, Error> {
    let non_edges = g.non_edges();
    if non_edges.len() > 128 {
        return Err(Error::TooManyVertices { n: g.n(), cap: 16 });
    }
    let mut scratch = Scratch { g: g.clone() };
    let mut found: Vec<u128> = Vec::new();
    let mut out = Vec::new();
    for s in 0..=k.min(non_edges.len()) {
        let mut this_size = Vec::new();
        for_each_combination(non_edges.len(), s, |idx| {
            let mask = idx.iter().fold(0u128, |m, &i| m | 1u128 << i);
            if found.iter().any(|&f| f & !mask == 0) {
                return true;
            }
            if scratch.test(idx.iter().map(|&i| non_edges[i])) {
                this_size.push(mask);
                out.push(Completion::from_sorted(idx.iter().map(|&i| non_edges[i]).collect()));
            }
            true
        });
        found.extend(this_size);
    }
    Ok(out)
}

/// Oracle solve that also lists all minimal completions of size at most `k`.
pub fn solve_oracle_all_minimal(g: &Graph, k: usize) -> Result<SolveResult, Error> {
    let minimal = minimal_completions(g, k)?;
    let mut res = solve_oracle(g, k);
    res.all_minimal = Some(minimal);
    Ok(res)
}

/// Whether `f` is a completion and no proper subset of it is one. Checks
/// all `2^|f|` subsets, so `f` must be small.
pub fn is_minimal_completion(g: &Graph, f: &Completion) -> bool {
    if !is_interval(&f.apply(g)) {
        return false;
    }
    let m = f.len();
    assert!(m < 24, "minimality check over {m} fill edges");
    let mut scratch = Scratch { g: g.clone() };
    (0..(1u32 << m) - 1).all(|mask| {
        !scratch.test((0..m).filter(|i| mask >> i & 1 == 1).map(|i| f.edges()[i]))
    })
}

/// Branching solver with the module rule as preprocessing.
pub fn solve_branching(g: &Graph, k: usize) -> SolveResult {
    for budget in 0..=k {
        let (h, map) = match reduce_exhaustively(g, budget) {
            Reduction::NoInstance { .. } => continue,
            Reduction::Reduced { graph, map, .. } => (graph, map),
        };
        let mut search = Branching { g: h, chosen: Vec::new(), failed: BTreeSet::new() };
        if search.run(budget) {
            let mut pairs: Vec<_> = search.chosen.iter().map(|&(u, v)| (map[u], map[v])).collect();
            for p in pairs.iter_mut() {
                if p.0 > p.1 {
                    *p = (p.1, p.0);
                }
            }
            let f = Completion::new(g, &pairs).expect("fill edges of the reduced graph are non-edges");
            debug_assert!(is_interval(&f.apply(g)));
            return SolveResult::solved(g, f, false);
        }
    }
    SolveResult::over_budget()
}

struct Branching {
    g: Graph,
    chosen: Vec<(VertexId, VertexId)>,
    /// Fill sets already explored without success at a given budget.
    failed: BTreeSet<(Vec<(VertexId, VertexId)>, usize)>,
}

impl Branching {
    fn run(&mut self, budget: usize) -> bool {
        let Some(w) = minimal_witness(&self.g) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        let mut key = self.chosen.clone();
        key.sort_unstable();
        if self.failed.contains(&(key.clone(), budget)) {
            return false;
        }
        for (u, v) in witness_non_edges(&self.g, w) {
            self.g.add_edge(u, v).unwrap();
            self.chosen.push((u, v));
            if self.run(budget - 1) {
                return true;
            }
            self.chosen.pop();
            self.g.remove_edge(u, v);
        }
        self.failed.insert((key, budget));
        false
    }
}

fn witness_non_edges(g: &Graph, w: VertexSet) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for u in w {
        for v in w - g.closed_neighbors(u) - VertexSet::full(u + 1) {
            out.push((u, v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use alloc::vec;

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(3, 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_combination(2, 3, |_| panic!("no 3-subsets of 2 items"));
        assert_eq!(oracle_search_space(&cycle(4), 2), 1 + 2 + 1);
    }

    #[test]
    fn oracle_examples() {
        let r = solve_oracle(&cycle(4), 1);
        assert_eq!(r.opt, Some(1));
        assert_eq!(r.canonical.unwrap().edges(), &[(0, 2)]);
        assert_eq!(solve_oracle(&path(4), 0).opt, Some(0));
        assert_eq!(solve_oracle(&cycle(5), 3).opt, Some(2));
        assert_eq!(solve_oracle(&cycle(4), 0).status, SolveStatus::OverBudget);
    }

    #[test]
    fn branching_examples() {
        assert_eq!(solve_branching(&net(), 3).opt, Some(1));
        // Joining the two vertices of the small side gives two long intervals
        // over three disjoint short ones.
        let k23 = complete_bipartite(2, 3);
        assert_eq!(solve_branching(&k23, 3).opt, Some(1));
        assert_eq!(solve_oracle(&k23, 3).canonical.unwrap().edges(), &[(0, 1)]);
        let two_c4 = disjoint_union(&cycle(4), &cycle(4));
        assert_eq!(solve_branching(&two_c4, 2).opt, Some(2));
        assert_eq!(solve_branching(&two_c4, 1).status, SolveStatus::OverBudget);
        let r = solve_branching(&cycle(5), 2);
        assert!(is_minimal_completion(&cycle(5), r.solution.as_ref().unwrap()));
    }

    #[test]
    fn minimal_completions_of_c4() {
        let all = minimal_completions(&cycle(4), 2).unwrap();
        assert_eq!(all.len(), 2);
        for f in &all {
            assert!(is_minimal_completion(&cycle(4), f));
        }
        let both = Completion::new(&cycle(4), &[(0, 2), (1, 3)]).unwrap();
        assert!(!is_minimal_completion(&cycle(4), &both));
    }
}
