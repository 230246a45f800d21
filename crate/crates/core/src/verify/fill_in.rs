//! Components around a vertex `v`, seen from the innermost untouched
//! vertices enclosing it.

use alloc::format;
use alloc::string::String;

use serde::{Deserialize, Serialize};

use super::{check_model_of, precondition, report, span, violated, Check, LemmaId, LemmaReport};
use crate::completion::Completion;
use crate::graph::{components, Graph, VertexId};
use crate::model::IntervalModel;
use crate::set::VertexSet;
use crate::solver::is_minimal_completion;

/// Positions and sections around `v`.
///
/// `f_left` is the untouched vertex enclosing `v` that begins last and
/// `f_right` the one that ends first. The four sections are taken at the
/// begin of `f_left`, the begin of `v`, just before the end of `v` and just
/// before the end of `f_right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillInContext {
    pub v: VertexId,
    pub f_left: VertexId,
    pub f_right: VertexId,
    pub pv_left: usize,
    pub pv_right: usize,
    pub pf_left: usize,
    pub pf_right: usize,
    pub omega_f_left: VertexSet,
    pub omega_v_left: VertexSet,
    pub omega_v_right: VertexSet,
    pub omega_f_right: VertexSet,
}

/// `None` when no untouched vertex encloses `v`.
pub fn fill_in_context(g: &Graph, f: &Completion, m: &IntervalModel, v: VertexId) -> Option<FillInContext> {
    let touched = f.touched();
    let (pv_left, pv_right) = (m.begin(v), m.end(v));
    let enclosing = (g.vertices() - touched)
        .iter()
        .filter(|&u| m.begin(u) <= pv_left && pv_right <= m.end(u));
    let f_left = enclosing.clone().max_by_key(|&u| m.begin(u))?;
    let f_right = enclosing.min_by_key(|&u| m.end(u))?;
    let (pf_left, pf_right) = (m.begin(f_left), m.end(f_right));
    Some(FillInContext {
        v,
        f_left,
        f_right,
        pv_left,
        pv_right,
        pf_left,
        pf_right,
        omega_f_left: m.section(pf_left),
        omega_v_left: m.section(pv_left),
        omega_v_right: m.section(pv_right - 1),
        omega_f_right: m.section(pf_right - 1),
    })
}

/// Classifies every component `C` of `G` minus the four sections around
/// `v` and checks the claims made for its category:
///
/// 1. no common neighbour of `f_left` and `f_right`: `C` lies outside
///    `(pf_left, pf_right)` and nothing in `C` is adjacent to `v` in `G + F`;
/// 2. a common neighbour: `C` lies strictly inside `(pf_left, pf_right)` and
///    inside both neighbourhoods;
/// 3. additionally a `G`-neighbour of `v`: `C` lies inside `(pv_left,
///    pv_right)` and is complete to `v` in `G + F`;
/// 4. otherwise exactly one of: (a) inside `v`, all fill to `v`,
///    `N(C) ⊆ Ω_L^v ∪ Ω_R^v`; (b) between `f_left` and `v`, no fill to `v`,
///    `N(C) ⊆ Ω_L^f ∪ Ω_L^v`; (c) the mirror of (b). Case (a) needs
///    `|C| <= k`.
pub fn verify_fill_in_structure(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, v: VertexId) -> LemmaReport {
    report(LemmaId::FiStructure, check(g, f, k, m, v))
}

fn check(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, v: VertexId) -> Check<()> {
    if g.special().is_none() {
        return Err(precondition(String::from("graph is not augmented")));
    }
    if v >= g.n() {
        return Err(precondition(format!("vertex {v} out of range")));
    }
    let gf = check_model_of(g, f, m)?;
    if f.len() > k {
        return Err(precondition(format!("|F| = {} exceeds k = {k}", f.len())));
    }
    if !is_minimal_completion(g, f) {
        return Err(precondition(format!("F = {f:?} is not minimal")));
    }
    let cx = fill_in_context(g, f, m, v)
        .ok_or_else(|| precondition(format!("no untouched vertex encloses {v}")))?;
    let FillInContext { f_left, f_right, pv_left, pv_right, pf_left, pf_right, .. } = cx;
    let (olf, olv, orv, orf) = (cx.omega_f_left, cx.omega_v_left, cx.omega_v_right, cx.omega_f_right);

    let order = [m.begin(f_right), pf_left, pv_left, pv_right, pf_right, m.end(f_left)];
    if !(order[0] <= order[1] && order[1] <= order[2] && order[2] < order[3] && order[3] <= order[4] && order[4] <= order[5]) {
        return Err(violated(format!(
            "positions b(f_R={f_right}), pLf, pLv, pRv, pRf, e(f_L={f_left}) = {order:?} out of order"
        )));
    }
    let consistent = (olv & orv).contains(v)
        && (olf & orf).contains(f_left)
        && (olf & orf).contains(f_right)
        && (olf & orf).is_subset(olf & orv)
        && (olf & orv).is_subset(olv & orv)
        && (olf & orf).is_subset(olv & orf)
        && (olv & orf).is_subset(olv & orv);
    if !consistent {
        return Err(precondition(format!(
            "sections ΩLf={olf} ΩLv={olv} ΩRv={orv} ΩRf={orf} inconsistent around {v}"
        )));
    }

    let removed = olf | olv | orv | orf;
    let common = g.neighbors(f_left) & g.neighbors(f_right);
    let v_adj = gf.neighbors(v);
    let fill_v = f.partners(v);
    for c in components(g, removed) {
        let (sb, se) = span(m, c);
        let describe = || format!("component {c} spanning ({sb}, {se}) around v={v} [f_L={f_left} f_R={f_right} pLf={pf_left} pLv={pv_left} pRv={pv_right} pRf={pf_right}]");
        if !c.intersects(common) {
            if !(se < pf_left || sb > pf_right) {
                return Err(violated(format!("{}: category 1 but not outside", describe())));
            }
            if c.intersects(v_adj) {
                return Err(violated(format!("{}: category 1 but adjacent to v in G + F", describe())));
            }
            continue;
        }
        if !(pf_left < sb && se < pf_right) || !c.is_subset(common) {
            return Err(violated(format!("{}: common neighbour but not nested in f_L, f_R", describe())));
        }
        if c.intersects(g.neighbors(v)) {
            if !(pv_left < sb && se < pv_right) || !c.is_subset(v_adj) {
                return Err(violated(format!("{}: category 3 claims fail", describe())));
            }
            continue;
        }
        let nc = g.neighborhood(c);
        let inside = pv_left < sb && se < pv_right;
        let before = pf_left < sb && se < pv_left;
        let after = pv_right < sb && se < pf_right;
        let cases = [inside, before, after].iter().filter(|&&b| b).count();
        if cases != 1 {
            return Err(violated(format!("{}: category 4 matches {cases} cases", describe())));
        }
        if inside {
            if !c.is_subset(fill_v) || !nc.is_subset(olv | orv) {
                return Err(violated(format!("{}: case (a) claims fail, N(C)={nc}", describe())));
            }
            if c.len() > k {
                return Err(violated(format!("{}: case (a) with |C| > k={k}", describe())));
            }
        } else if before {
            if c.intersects(fill_v) || !nc.is_subset(olf | olv) {
                return Err(violated(format!("{}: case (b) claims fail, N(C)={nc}", describe())));
            }
        } else if c.intersects(fill_v) || !nc.is_subset(orf | orv) {
            return Err(violated(format!("{}: case (c) claims fail, N(C)={nc}", describe())));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::augment;
    use crate::graph::named::*;
    use crate::recognition::canonical_model;

    #[test]
    fn root_on_untouched_path() {
        let g = augment(&path(4)).unwrap();
        let m = canonical_model(&g).unwrap();
        let cx = fill_in_context(&g, &Completion::empty(), &m, 0).unwrap();
        assert_eq!((cx.f_left, cx.f_right), (0, 0));
        assert_eq!(cx.omega_v_left, VertexSet::singleton(0));
        for v in g.vertices() {
            let r = verify_fill_in_structure(&g, &Completion::empty(), 0, &m, v);
            assert!(r.verdict.holds(), "{v}: {r:?}");
        }
    }

    #[test]
    fn c4_with_one_chord() {
        // 0+ 1+ 1- 2+ 3+ 4+ 3- 5+ 5- 4- 2- 6+ 6- 0-; 2 and 4 are touched.
        let g = augment(&cycle(4)).unwrap();
        let f = Completion::new(&g, &[(2, 4)]).unwrap();
        let m = canonical_model(&f.apply(&g)).unwrap();
        let cx = fill_in_context(&g, &f, &m, 2).unwrap();
        assert_eq!((cx.f_left, cx.f_right), (0, 0));
        let cx = fill_in_context(&g, &f, &m, 3).unwrap();
        assert_eq!((cx.f_left, cx.f_right, cx.pv_left, cx.pv_right), (3, 3, 5, 7));
        for v in g.vertices() {
            for model in [m.clone(), m.reversed()] {
                let r = verify_fill_in_structure(&g, &f, 1, &model, v);
                assert!(r.verdict.holds(), "{v}: {r:?}");
            }
        }
    }
}
