//! Components squeezed between two sections that interleave with the
//! events of a small one-sided set `K`.

use alloc::format;
use alloc::vec::Vec;

use super::{check_model_of, precondition, report, span, violated, Check, LemmaId, LemmaReport};
use crate::completion::{le_scaled_sqrt, Completion};
use crate::graph::{components, Graph};
use crate::model::IntervalModel;
use crate::set::VertexSet;

/// Components `C` of `G \ (Ω(p_l) ∪ Ω(p_r - 1))` with
/// `N(C) ⊆ K ∪ (Ω_L ∩ Ω_R)`, `p_l < begin(C) < end(C) < p_r`, and some event
/// of `K` strictly inside the span of `C`.
pub fn separated_components(g: &Graph, m: &IntervalModel, pl: usize, pr: usize, kset: VertexSet) -> Vec<VertexSet> {
    let (ol, or) = (m.section(pl), m.section(pr - 1));
    let allowed = kset | (ol & or);
    components(g, ol | or)
        .into_iter()
        .filter(|&c| {
            let (sb, se) = span(m, c);
            g.neighborhood(c).is_subset(allowed)
                && pl < sb
                && se < pr
                && kset.iter().any(|x| {
                    let (b, e) = (m.begin(x), m.end(x));
                    (sb < b && b < se) || (sb < e && e < se)
                })
        })
        .collect()
}

/// Checks that at most `3 sqrt(k) + |K|` components are returned by
/// [`separated_components`].
///
/// `f` must be a minimum completion of size at most `k` and `m` the
/// canonical model of `G + F`; the caller certifies both. `K` must lie
/// entirely on one side: inside `Ω_L \ Ω_R` or inside `Ω_R \ Ω_L`.
pub fn verify_small_separation(
    g: &Graph,
    k: usize,
    f: &Completion,
    m: &IntervalModel,
    pl: usize,
    pr: usize,
    kset: VertexSet,
) -> LemmaReport {
    report(LemmaId::LeftRight, check(g, k, f, m, pl, pr, kset))
}

fn check(g: &Graph, k: usize, f: &Completion, m: &IntervalModel, pl: usize, pr: usize, kset: VertexSet) -> Check<()> {
    if f.len() > k {
        return Err(precondition(format!("|F| = {} exceeds k = {k}", f.len())));
    }
    check_model_of(g, f, m)?;
    if !(pl < pr && pr <= m.len() + 1) {
        return Err(precondition(format!("positions {pl} < {pr} out of range")));
    }
    let (ol, or) = (m.section(pl), m.section(pr - 1));
    if !kset.is_subset(ol - or) && !kset.is_subset(or - ol) {
        return Err(precondition(format!("K={kset} straddles Ω_L={ol} and Ω_R={or}")));
    }
    let found = separated_components(g, m, pl, pr, kset);
    if !le_scaled_sqrt(found.len(), 3, k, kset.len()) {
        return Err(violated(format!(
            "{} components {found:?} between {pl} and {pr} with K={kset}, bound 3 sqrt({k}) + {}",
            found.len(),
            kset.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::recognition::canonical_model;

    #[test]
    fn empty_k_counts_nothing() {
        let g = star(4);
        let m = canonical_model(&g).unwrap();
        for pl in 0..m.len() {
            for pr in pl + 1..=m.len() {
                assert!(separated_components(&g, &m, pl, pr, VertexSet::EMPTY).is_empty());
                assert!(verify_small_separation(&g, 0, &Completion::empty(), &m, pl, pr, VertexSet::EMPTY).verdict.holds());
            }
        }
    }

    #[test]
    fn star_leaves_under_the_center() {
        // 0+ 1+ 1- 2+ 2- 3+ 3- 4+ 4- 0-: the center is the only set member.
        let g = star(4);
        let m = canonical_model(&g).unwrap();
        assert_eq!(m.to_line(), "0+ 1+ 1- 2+ 2- 3+ 3- 4+ 4- 0-");
        let k = VertexSet::singleton(0);
        // Ω(0) = ∅ and Ω(9) = {0}: every leaf is a component whose span
        // contains no event of the center.
        assert!(separated_components(&g, &m, 0, 10, k).is_empty());
        let r = verify_small_separation(&g, 0, &Completion::empty(), &m, 0, 10, k);
        assert!(r.verdict.holds());
        let r = verify_small_separation(&g, 0, &Completion::empty(), &m, 1, 3, [0, 1].into_iter().collect());
        assert!(r.verdict.is_precondition_failed());
    }

    #[test]
    fn untouched_instances_stay_within_k() {
        for g in [path(5), star(3), complete(3), disjoint_union(&path(2), &path(3))] {
            let m = canonical_model(&g).unwrap();
            let n2 = m.len();
            for pl in 0..=n2 {
                for pr in pl + 1..=n2 + 1 {
                    let (ol, or) = (m.section(pl), m.section(pr - 1));
                    for side in [ol - or, or - ol] {
                        for kset in side.subsets() {
                            let c = separated_components(&g, &m, pl, pr, kset);
                            assert!(c.len() <= kset.len(), "{g:?} {pl} {pr} {kset}");
                        }
                    }
                }
            }
        }
    }
}
