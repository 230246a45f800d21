//! Order properties of canonical models.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{precondition, report, span, violated, Check, LemmaId, LemmaReport};
use crate::graph::{components, Graph};
use crate::model::IntervalModel;
use crate::recognition::canonical_model;

fn require_canonical(g: &Graph, m: &IntervalModel) -> Check<()> {
    if canonical_model(g).ok().as_ref() != Some(m) {
        return Err(precondition(String::from("model is not the canonical model of the graph")));
    }
    Ok(())
}

/// Consecutive begins appear in ≺ order and consecutive ends in reverse ≺
/// order.
pub fn verify_canonical_endpoints(g: &Graph, m: &IntervalModel) -> LemmaReport {
    let outcome = require_canonical(g, m).and_then(|()| {
        for p in 1..m.len() {
            let (a, b) = (m.at(p), m.at(p + 1));
            if a.kind != b.kind {
                continue;
            }
            let ok = if a.is_begin() { a.vertex < b.vertex } else { a.vertex > b.vertex };
            if !ok {
                return Err(violated(format!("events {a} {b} at positions {p}, {}", p + 1)));
            }
        }
        Ok(())
    });
    report(LemmaId::CanonicalEndpoints, outcome)
}

/// For every clique `X`, the components `C` of `G \ X` whose vertices all
/// have `N(v) \ C = X` occupy disjoint stretches of `m`, ordered by their
/// smallest vertex.
pub fn verify_canonical_modules(g: &Graph, m: &IntervalModel) -> LemmaReport {
    let outcome = require_canonical(g, m).and_then(|()| {
        for x in g.vertices().subsets() {
            if !g.is_clique(x) {
                continue;
            }
            let mut twins: Vec<_> = components(g, x)
                .into_iter()
                .filter(|&c| c.iter().all(|v| g.neighbors(v) - c == x))
                .map(|c| (span(m, c), c))
                .collect();
            twins.sort_by_key(|&(s, _)| s);
            for w in twins.windows(2) {
                let ((s1, c1), (s2, c2)) = (w[0], w[1]);
                if s1.1 >= s2.0 {
                    return Err(violated(format!("components {c1} and {c2} of G \\ {x} interleave")));
                }
                if c1.first() > c2.first() {
                    return Err(violated(format!(
                        "components {c1} spanning {s1:?} and {c2} spanning {s2:?} of G \\ {x} out of order"
                    )));
                }
            }
        }
        Ok(())
    });
    report(LemmaId::CanonicalModules, outcome)
}
