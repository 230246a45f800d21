//! Counting bounds on neighbourhood classes and on components that are
//! almost complete to a vertex set.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{precondition, violated, LemmaId, LemmaReport, Verdict};
use crate::graph::{count_low_deficiency_components, neighborhood_classes, Graph};
use crate::modular::find_rule_application;
use crate::set::VertexSet;
use crate::solver::solve_oracle;

/// Coefficients of the two bounds. Tests mutate them to make sure a wrong
/// bound gets caught.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundConstants {
    /// Classes: `(scale * |A| + offset)^2 + |F|`.
    pub class_scale: usize,
    pub class_offset: usize,
    /// Components: `kr * k * r + k_only * k + r_only * r + constant`.
    pub kr: usize,
    pub k_only: usize,
    pub r_only: usize,
    pub constant: usize,
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants { class_scale: 2, class_offset: 1, kr: 12, k_only: 4, r_only: 18, constant: 4 }
    }
}

impl BoundConstants {
    pub fn class_bound(&self, a: usize, fill: usize) -> usize {
        let s = self.class_scale * a + self.class_offset;
        s * s + fill
    }

    pub fn component_bound(&self, k: usize, r: usize) -> usize {
        self.kr * k * r + self.k_only * k + self.r_only * r + self.constant
    }
}

/// All subsets of `0..n` with at most `max` elements, smallest first.
pub fn small_subsets(n: usize, max: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        out.push(cur.iter().copied().collect());
        if cur.len() == max {
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, max, cur, out);
            cur.pop();
        }
    }
    go(0, n, max, &mut cur, &mut out);
    out.sort_by_key(|s| (s.len(), Vec::from(*s)));
    out
}

/// For every `A` in `sets`: at most `(2|A|+1)^2 + |F|` neighbourhood classes
/// with respect to `A`, where `F` is a minimum completion. If additionally
/// the module rule does not apply, for every `r` in `1..=max(k, 1)`: at most
/// `12kr + 4k + 18r + 4` components of `G \ A` with a vertex missing at most
/// `r` vertices of `A`.
///
/// A single precondition failure is returned when `(g, k)` has no solution,
/// and one for the second bound when the rule applies.
pub fn verify_bounds(g: &Graph, k: usize, sets: &[VertexSet], consts: &BoundConstants) -> Vec<LemmaReport> {
    let solved = solve_oracle(g, k);
    let Some(opt) = solved.opt else {
        return alloc::vec![LemmaReport::new(
            LemmaId::NeighborhoodClasses,
            precondition(format!("no completion with at most {k} edges")),
        )];
    };
    let mut out = Vec::new();
    for &a in sets {
        let classes = neighborhood_classes(g, a).len();
        let bound = consts.class_bound(a.len(), opt);
        let verdict = if classes <= bound {
            Verdict::Holds
        } else {
            violated(format!("{classes} classes w.r.t. A={a}, bound {bound} with |F|={opt}"))
        };
        out.push(LemmaReport::new(LemmaId::NeighborhoodClasses, verdict));
    }
    if let Some(rule) = find_rule_application(g, k) {
        out.push(LemmaReport::new(
            LemmaId::LowDeficiency,
            precondition(format!("module rule applies at X={}", rule.x)),
        ));
        return out;
    }
    for &a in sets {
        for r in 1..=k.max(1) {
            let count = count_low_deficiency_components(g, a, r);
            let bound = consts.component_bound(k, r);
            let verdict = if count <= bound {
                Verdict::Holds
            } else {
                violated(format!("{count} components of G \\ A for A={a}, r={r}, bound {bound}"))
            };
            out.push(LemmaReport::new(LemmaId::LowDeficiency, verdict));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn subsets_are_counted_right() {
        assert_eq!(small_subsets(4, 2).len(), 1 + 4 + 6);
        assert_eq!(small_subsets(3, 5).len(), 8);
        assert_eq!(small_subsets(3, 1)[1], VertexSet::singleton(0));
    }

    #[test]
    fn trivial_sets() {
        let g = cycle(5);
        let all = g.vertices();
        let reports = verify_bounds(&g, 2, &[VertexSet::EMPTY, all], &BoundConstants::default());
        assert!(reports.iter().all(|r| r.verdict.holds()), "{reports:?}");
        assert_eq!(neighborhood_classes(&g, VertexSet::EMPTY).len(), 1);
        assert_eq!(neighborhood_classes(&g, all).len(), 0);
    }

    #[test]
    fn mutated_constants_fire() {
        let g = path(3);
        let bad = BoundConstants { class_offset: 0, ..BoundConstants::default() };
        let reports = verify_bounds(&g, 0, &[VertexSet::EMPTY], &bad);
        assert!(reports[0].verdict.is_violated());
    }

    #[test]
    fn unsolvable_instance_is_a_precondition_failure() {
        let reports = verify_bounds(&cycle(4), 0, &[VertexSet::EMPTY], &BoundConstants::default());
        assert_eq!(reports.len(), 1);
        assert!(reports[0].verdict.is_precondition_failed());
    }
}
