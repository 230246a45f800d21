//! Maximal cliques described through eight anchor vertices.

use alloc::format;
use alloc::string::String;

use serde::{Deserialize, Serialize};

use super::{check_model_of, precondition, report, violated, Check, LemmaId, LemmaReport};
use crate::completion::{classify_vertices, le_scaled_sqrt, le_sqrt, Completion};
use crate::graph::{Graph, VertexId};
use crate::model::IntervalModel;
use crate::set::VertexSet;
use crate::solver::is_minimal_completion;

/// The anchors of a maximal clique `omega = Ω(p)`, where `v2` begins at `p`
/// and `v1` ends at `p + 1`.
///
/// `c1`/`c2` are the cheap vertices ending last before / beginning first
/// after the clique, `f1`/`f2` the same for untouched vertices, and
/// `g1`/`g2` the outermost untouched vertices in the closed neighbourhoods
/// of `f1`/`f2` away from the clique. `x1`/`x2` hold the vertices between
/// `c_i` and the clique, `fill1`/`fill2` the fill partners of `c_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueAnatomy {
    pub omega: VertexSet,
    pub p: usize,
    pub v1: VertexId,
    pub v2: VertexId,
    pub c1: VertexId,
    pub c2: VertexId,
    pub f1: VertexId,
    pub f2: VertexId,
    pub g1: VertexId,
    pub g2: VertexId,
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub fill1: VertexSet,
    pub fill2: VertexSet,
}

/// Reads the anatomy of the maximal clique at position `p` off `m`.
/// `None` if `p` is not a maximal-clique position or some anchor does not
/// exist.
pub fn clique_anatomy(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, p: usize) -> Option<CliqueAnatomy> {
    if p == 0 || p >= m.len() || !m.at(p).is_begin() || m.at(p + 1).is_begin() {
        return None;
    }
    let classes = classify_vertices(g, f, k);
    let cheap = |v: VertexId| classes[v].cheap;
    let untouched = |v: VertexId| !classes[v].touched;
    let all = g.vertices();
    let omega = m.section(p);
    let v2 = m.at(p).vertex;
    let v1 = m.at(p + 1).vertex;
    let left = |v: &VertexId| m.end(*v) <= p + 1;
    let right = |v: &VertexId| m.begin(*v) >= p;

    let c1 = all.iter().filter(|&v| cheap(v)).filter(left).max_by_key(|&v| m.end(v))?;
    let c2 = all.iter().filter(|&v| cheap(v)).filter(right).min_by_key(|&v| m.begin(v))?;
    let f1 = all.iter().filter(|&v| untouched(v)).filter(left).max_by_key(|&v| m.end(v))?;
    let f2 = all.iter().filter(|&v| untouched(v)).filter(right).min_by_key(|&v| m.begin(v))?;
    let away1 = g.closed_neighbors(f1) - omega.without(v1);
    let away2 = g.closed_neighbors(f2) - omega.without(v2);
    let g1 = away1.iter().filter(|&v| untouched(v)).min_by_key(|&v| m.begin(v))?;
    let g2 = away2.iter().filter(|&v| untouched(v)).max_by_key(|&v| m.end(v))?;

    let x1 = all.iter().filter(|&v| m.end(c1) < m.end(v) && m.end(v) <= p + 1).collect();
    let x2 = all.iter().filter(|&v| p <= m.begin(v) && m.begin(v) < m.begin(c2)).collect();
    Some(CliqueAnatomy {
        omega,
        p,
        v1,
        v2,
        c1,
        c2,
        f1,
        f2,
        g1,
        g2,
        x1,
        x2,
        fill1: f.partners(c1),
        fill2: f.partners(c2),
    })
}

/// Checks that a maximal clique of `G + F` equals
/// `(N_G[{v1, c1, f1} ∪ X1] ∪ F1) ∩ (N_G[{v2, c2, f2} ∪ X2] ∪ F2)`, together
/// with the position chain of the anchors and `v1 ∈ N_G[v2]`.
///
/// `g` must be augmented, `f` an inclusion-minimal completion with at most
/// `k` edges, `m` any model of `G + F` and `omega` one of its maximal
/// cliques other than the two outermost ones.
pub fn verify_clique_characterization(
    g: &Graph,
    f: &Completion,
    k: usize,
    m: &IntervalModel,
    omega: VertexSet,
) -> LemmaReport {
    report(LemmaId::PmcChar, check(g, f, k, m, omega))
}

fn check(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, omega: VertexSet) -> Check<()> {
    let special = g.special().ok_or_else(|| precondition(String::from("graph is not augmented")))?;
    check_model_of(g, f, m)?;
    if f.len() > k {
        return Err(precondition(format!("|F| = {} exceeds k = {k}", f.len())));
    }
    if !is_minimal_completion(g, f) {
        return Err(precondition(format!("F = {f:?} is not minimal")));
    }
    let Some(&(_, p)) = m.maximal_cliques().iter().find(|(s, _)| *s == omega) else {
        return Err(precondition(format!("{omega} is not a maximal clique of the model")));
    };
    let root = VertexSet::singleton(special.root);
    if omega == root.with(special.left) || omega == root.with(special.right) {
        return Err(precondition(format!("{omega} is an outermost clique")));
    }
    let a = clique_anatomy(g, f, k, m, p)
        .ok_or_else(|| violated(format!("anchor vertices missing for {omega} at p={p}")))?;

    let n2 = m.len();
    if !(3 < p && p + 3 < n2) {
        return Err(violated(format!("clique {omega} at p={p} too close to the border of 1..={n2}")));
    }
    for v in [a.v1, a.v2] {
        if v == special.root || v == special.left || v == special.right {
            return Err(violated(format!("anchor v={v} is a special vertex")));
        }
    }
    if !g.closed_neighbors(a.v2).contains(a.v1) {
        return Err(violated(format!("v1={} not in N_G[v2={}]", a.v1, a.v2)));
    }
    let chain1 = [m.end(a.g1), m.end(a.f1), m.end(a.c1), m.end(a.v1)];
    if !chain1.windows(2).all(|w| w[0] <= w[1]) || chain1[3] != p + 1 {
        return Err(violated(format!(
            "left chain e(g1={}) e(f1={}) e(c1={}) e(v1={}) = {chain1:?}, p+1={}",
            a.g1,
            a.f1,
            a.c1,
            a.v1,
            p + 1
        )));
    }
    let chain2 = [m.begin(a.g2), m.begin(a.f2), m.begin(a.c2), m.begin(a.v2)];
    if !chain2.windows(2).all(|w| w[0] >= w[1]) || chain2[3] != p {
        return Err(violated(format!(
            "right chain b(g2={}) b(f2={}) b(c2={}) b(v2={}) = {chain2:?}, p={p}",
            a.g2, a.f2, a.c2, a.v2
        )));
    }
    for (name, s) in [("F1", a.fill1), ("F2", a.fill2)] {
        if !le_sqrt(s.len(), k) {
            return Err(violated(format!("|{name}| = {} exceeds sqrt({k})", s.len())));
        }
    }
    let classes = classify_vertices(g, f, k);
    if let Some(v) = (a.x1 | a.x2).iter().find(|&v| classes[v].cheap) {
        return Err(violated(format!("X1={} X2={} contain cheap vertex {v}", a.x1, a.x2)));
    }
    if !le_scaled_sqrt(a.x1.len() + a.x2.len(), 2, k, 1) {
        return Err(violated(format!("|X1|+|X2| = {} exceeds 2 sqrt({k}) + 1", a.x1.len() + a.x2.len())));
    }
    let side1 = g.closed_neighborhood(a.x1.with(a.v1).with(a.c1).with(a.f1)) | a.fill1;
    let side2 = g.closed_neighborhood(a.x2.with(a.v2).with(a.c2).with(a.f2)) | a.fill2;
    if side1 & side2 != omega {
        return Err(violated(format!(
            "clique {omega} at p={p} differs from {} = {side1} ∩ {side2} (v1={} c1={} f1={} X1={} F1={}; v2={} c2={} f2={} X2={} F2={})",
            side1 & side2,
            a.v1,
            a.c1,
            a.f1,
            a.x1,
            a.fill1,
            a.v2,
            a.c2,
            a.f2,
            a.x2,
            a.fill2
        )));
    }
    Ok(())
}
