//! Every section of a canonical model is determined by the two nearest
//! maximal cliques and the distance to the left one.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{check_model_of, precondition, report, violated, Check, LemmaId, LemmaReport};
use crate::completion::Completion;
use crate::graph::Graph;
use crate::model::{Event, IntervalModel};
use crate::recognition::canonical_model;
use crate::set::VertexSet;
use crate::solver::is_minimal_completion;

/// Rebuilds `Ω(p1 + d)` from the maximal cliques at `p1` and the next
/// maximal-clique position: first the vertices of `Ω1 \ Ω2` leave in
/// reverse ≺ order, then those of `Ω2 \ Ω1` join in ≺ order.
pub fn reconstruct_section(omega1: VertexSet, omega2: VertexSet, d: usize) -> VertexSet {
    let leaving: Vec<_> = (omega1 - omega2).iter_rev().collect();
    let r = leaving.len();
    if d <= r {
        leaving[..d].iter().fold(omega1, |s, &v| s.without(v))
    } else {
        (omega1 & omega2) | (omega2 - omega1).iter().take(d - r).collect::<VertexSet>()
    }
}

/// Checks the four outermost sections and the layout of events between
/// every pair of consecutive maximal cliques of the canonical model `m` of
/// `G + F`, and that each section in between is rebuilt by
/// [`reconstruct_section`].
pub fn verify_section_reconstruction(g: &Graph, f: &Completion, m: &IntervalModel) -> LemmaReport {
    report(LemmaId::Sections, check(g, f, m))
}

fn check(g: &Graph, f: &Completion, m: &IntervalModel) -> Check<()> {
    let special = g.special().ok_or_else(|| precondition(String::from("graph is not augmented")))?;
    let gf = check_model_of(g, f, m)?;
    if !is_minimal_completion(g, f) {
        return Err(precondition(format!("F = {f:?} is not minimal")));
    }
    if canonical_model(&gf).ok().as_ref() != Some(m) {
        return Err(precondition(String::from("model is not the canonical model of G + F")));
    }
    let sections = m.sections();
    let root = VertexSet::singleton(special.root);
    let obvious = [VertexSet::EMPTY, root, root.with(special.left), root.with(special.right)];
    for s in obvious {
        if !sections.contains(&s) {
            return Err(violated(format!("{s} is not a section")));
        }
    }
    let cliques: Vec<usize> = m.maximal_cliques().iter().map(|&(_, p)| p).collect();
    for w in cliques.windows(2) {
        let (p1, p2) = (w[0], w[1]);
        let (o1, o2) = (sections[p1], sections[p2]);
        let expected: Vec<Event> = (o1 - o2)
            .iter_rev()
            .map(Event::end)
            .chain((o2 - o1).iter().map(Event::begin))
            .collect();
        let actual = &m.events()[p1..p2];
        if actual != expected.as_slice() {
            return Err(violated(format!(
                "events between cliques {o1} at {p1} and {o2} at {p2} are {actual:?}, expected {expected:?}"
            )));
        }
    }
    for (p, &s) in sections.iter().enumerate() {
        if obvious.contains(&s) {
            continue;
        }
        let p1 = cliques.iter().rev().find(|&&q| q <= p);
        let p2 = cliques.iter().find(|&&q| q >= p);
        let (Some(&p1), Some(&p2)) = (p1, p2) else {
            return Err(violated(format!("section {s} at {p} has no maximal clique on both sides")));
        };
        let rebuilt = reconstruct_section(sections[p1], sections[p2], p - p1);
        if rebuilt != s {
            return Err(violated(format!(
                "section {s} at {p} rebuilt as {rebuilt} from {} at {p1} and {} at {p2}",
                sections[p1], sections[p2]
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::augment;
    use crate::graph::named::*;

    #[test]
    fn small_examples_hold() {
        for g in [Graph::new(1).unwrap(), path(3), star(3), complete(3)] {
            let a = augment(&g).unwrap();
            let m = canonical_model(&a).unwrap();
            let r = verify_section_reconstruction(&a, &Completion::empty(), &m);
            assert!(r.verdict.holds(), "{g:?}: {r:?}");
        }
    }

    #[test]
    fn path_sections_by_hand() {
        // 0+ 1+ 1- 2+ 3+ 2- 4+ 4- 3- 5+ 5- 0- for augmented P3 = 2-3-4.
        let a = augment(&path(3)).unwrap();
        let m = canonical_model(&a).unwrap();
        assert_eq!(m.to_line(), "0+ 1+ 1- 2+ 3+ 2- 4+ 4- 3- 5+ 5- 0-");
        let s = m.sections();
        assert_eq!(reconstruct_section(s[5], s[7], 1), s[6]);
        assert_eq!(reconstruct_section(s[7], s[10], 2), s[9]);
    }

    #[test]
    fn non_canonical_model_is_rejected() {
        let a = augment(&path(3)).unwrap();
        let m = canonical_model(&a).unwrap().reversed();
        let r = verify_section_reconstruction(&a, &Completion::empty(), &m);
        assert!(r.verdict.is_precondition_failed());
    }
}
