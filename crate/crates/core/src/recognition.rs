//! Recognition of interval graphs, canonical models and models with
//! prescribed first and last cliques.
//!
//! Two independent routes decide intervalness. [`canonical_model`] searches
//! over event sequences and is the reference; [`is_interval`] uses the
//! characterization "chordal and without asteroidal triples" and is the one
//! the solvers call in their inner loops. Tests check that they agree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{components, Graph, VertexId};
use crate::model::{validate_model, Event, IntervalModel};
use crate::set::{VertexSet, MAX_VERTICES};

/// Outcome of [`recognize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Recognition {
    Interval { model: IntervalModel },
    NotInterval { witness: VertexSet },
}

pub fn is_interval(g: &Graph) -> bool {
    is_interval_induced(g, g.vertices())
}

/// Whether `G[s]` is an interval graph.
pub fn is_interval_induced(g: &Graph, s: VertexSet) -> bool {
    is_chordal_induced(g, s) && is_at_free_induced(g, s)
}

/// Chordality of `G[s]` via maximum cardinality search: the visit order is
/// the reverse of a perfect elimination ordering iff the graph is chordal.
pub fn is_chordal_induced(g: &Graph, s: VertexSet) -> bool {
    let mut visited = VertexSet::EMPTY;
    let mut weight = [0u8; MAX_VERTICES];
    for _ in 0..s.len() {
        let v = (s - visited)
            .iter()
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .unwrap();
        let earlier = g.neighbors(v) & visited;
        if !g.is_clique(earlier) {
            return false;
        }
        visited.insert(v);
        for w in g.neighbors(v) & s {
            weight[w] += 1;
        }
    }
    true
}

/// Whether `G[s]` has no asteroidal triple: no three pairwise non-adjacent
/// vertices such that each pair is joined by a path avoiding the closed
/// neighborhood of the third.
pub fn is_at_free_induced(g: &Graph, s: VertexSet) -> bool {
    find_asteroidal_triple(g, s).is_none()
}

pub fn find_asteroidal_triple(g: &Graph, s: VertexSet) -> Option<[VertexId; 3]> {
    const NONE: u8 = u8::MAX;
    let mut comp = [[NONE; MAX_VERTICES]; MAX_VERTICES];
    for z in s {
        let rest = s - g.closed_neighbors(z);
        for (i, c) in components_within(g, rest).enumerate() {
            for v in c {
                comp[z][v] = i as u8;
            }
        }
    }
    for x in s {
        let after_x = s - g.closed_neighbors(x) - VertexSet::full(x + 1);
        for y in after_x {
            if comp[x][y] == NONE {
                continue;
            }
            let after_y = after_x - g.closed_neighbors(y) - VertexSet::full(y + 1);
            for z in after_y {
                if comp[z][x] == comp[z][y] && comp[x][y] == comp[x][z] && comp[y][x] == comp[y][z] {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

fn components_within(g: &Graph, within: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
    let mut rest = within;
    core::iter::from_fn(move || {
        let v = rest.first()?;
        let c = g.reach(v, rest);
        rest -= c;
        Some(c)
    })
}

/// A vertex-minimal set `W` with `G[W]` not interval, found by trying to
/// delete each vertex in ≺ order. `None` if `g` is interval.
pub fn minimal_witness(g: &Graph) -> Option<VertexSet> {
    let mut w = g.vertices();
    if is_interval_induced(g, w) {
        return None;
    }
    for v in g.vertices() {
        if !is_interval_induced(g, w.without(v)) {
            w.remove(v);
        }
    }
    Some(w)
}

/// The canonical model if `g` is interval, otherwise a minimal witness.
pub fn recognize(g: &Graph) -> Recognition {
    match canonical_model(g) {
        Ok(model) => Recognition::Interval { model },
        Err(_) => Recognition::NotInterval {
            witness: minimal_witness(g).expect("search and characterization disagree"),
        },
    }
}

/// Any model of `g`; currently the canonical one.
pub fn find_model(g: &Graph) -> Option<IntervalModel> {
    canonical_model(g).ok()
}

/// The model whose tuple `(begin(v_1), ..., begin(v_n), end(v_n), ...,
/// end(v_1))` is lexicographically smallest.
///
/// The search walks event sequences. A begin of `v` may be placed only when
/// every currently open interval is a neighbor of `v` and no neighbor has
/// already ended; an end of `u` only when every neighbor of `u` has begun.
/// A sequence built from such steps is exactly a model, and the best
/// continuation from a state `(started, ended)` does not depend on how the
/// state was reached, so the search is memoized on the state.
pub fn canonical_model(g: &Graph) -> Result<IntervalModel, Error> {
    let mut search = CanonicalSearch { g, memo: BTreeMap::new() };
    let suffix = search.best(VertexSet::EMPTY, VertexSet::EMPTY).ok_or(Error::NotInterval)?;
    let m = IntervalModel::from_events(suffix).map_err(|_| Error::Invariant("canonical search produced a non-permutation"))?;
    debug_assert!(validate_model(g, m.events()).is_ok());
    Ok(m)
}

struct CanonicalSearch<'a> {
    g: &'a Graph,
    memo: BTreeMap<(u64, u64), Option<Vec<Event>>>,
}

impl CanonicalSearch<'_> {
    fn can_begin(&self, v: VertexId, started: VertexSet, ended: VertexSet) -> bool {
        let active = started - ended;
        active.is_subset(self.g.neighbors(v)) && !self.g.neighbors(v).intersects(ended)
    }

    fn can_end(&self, u: VertexId, started: VertexSet) -> bool {
        self.g.neighbors(u).is_subset(started)
    }

    /// Best remaining event sequence from the given state.
    fn best(&mut self, started: VertexSet, ended: VertexSet) -> Option<Vec<Event>> {
        let all = self.g.vertices();
        if ended == all {
            return Some(Vec::new());
        }
        let key = (started.bits(), ended.bits());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let active = started - ended;
        // The first unplaced entry of the tuple: if it can go next, taking
        // it is optimal since every earlier entry is already fixed.
        let first = match (all - started).first() {
            Some(v) => Event::begin(v),
            None => Event::end(active.last().unwrap()),
        };
        let mut candidates: Vec<Event> = Vec::new();
        for v in all - started {
            if self.can_begin(v, started, ended) {
                candidates.push(Event::begin(v));
            }
        }
        for u in active.iter_rev() {
            if self.can_end(u, started) {
                candidates.push(Event::end(u));
            }
        }
        let mut best: Option<Vec<Event>> = None;
        if candidates.contains(&first) {
            if let Some(rest) = self.step(first, started, ended) {
                best = Some(rest);
            }
        }
        if best.is_none() {
            for c in candidates {
                if c == first {
                    continue;
                }
                if let Some(seq) = self.step(c, started, ended) {
                    let better = match &best {
                        None => true,
                        Some(cur) => suffix_less(&seq, cur, started, ended, self.g.n()),
                    };
                    if better {
                        best = Some(seq);
                    }
                }
            }
        }
        self.memo.insert(key, best.clone());
        best
    }

    fn step(&mut self, e: Event, started: VertexSet, ended: VertexSet) -> Option<Vec<Event>> {
        let (s, d) = if e.is_begin() {
            (started.with(e.vertex), ended)
        } else {
            (started, ended.with(e.vertex))
        };
        let rest = self.best(s, d)?;
        let mut seq = Vec::with_capacity(rest.len() + 1);
        seq.push(e);
        seq.extend(rest);
        Some(seq)
    }
}

/// Compares two continuations of the same state by the canonical tuple.
fn suffix_less(a: &[Event], b: &[Event], started: VertexSet, ended: VertexSet, n: usize) -> bool {
    let mut pa = [0usize; 2 * MAX_VERTICES];
    let mut pb = [0usize; 2 * MAX_VERTICES];
    for (i, e) in a.iter().enumerate() {
        pa[e.index()] = i;
    }
    for (i, e) in b.iter().enumerate() {
        pb[e.index()] = i;
    }
    let order = (0..n)
        .filter(|&v| !started.contains(v))
        .map(Event::begin)
        .chain((0..n).rev().filter(|&v| !ended.contains(v)).map(Event::end));
    for e in order {
        let (x, y) = (pa[e.index()], pb[e.index()]);
        if x != y {
            return x < y;
        }
    }
    false
}

/// A model of `g` whose first events are the begins of `omega1` and whose
/// last events are the ends of `omega2`, or `None` if no such model exists.
///
/// Two three-vertex paths are hung on the prescribed cliques, the extended
/// graph is recognized, and its model is folded back: each path tells on
/// which side of its component the clique ended up, and components are
/// reversed and reordered accordingly. Within the prefix, begins are in ≺
/// order; within the suffix, ends are in reverse ≺ order.
pub fn model_with_prescribed_cliques(
    g: &Graph,
    omega1: VertexSet,
    omega2: VertexSet,
) -> Result<Option<IntervalModel>, Error> {
    if !omega1.is_subset(g.vertices()) || !omega2.is_subset(g.vertices()) {
        return Err(Error::NotAClique);
    }
    if !g.is_clique(omega1) || !g.is_clique(omega2) {
        return Err(Error::NotAClique);
    }
    if !is_interval(g) {
        return Err(Error::NotInterval);
    }
    let n = g.n();
    if n == 0 {
        return Ok(Some(IntervalModel::from_events(Vec::new()).unwrap()));
    }
    let comps = components(g, VertexSet::EMPTY);
    let comp_of = |s: VertexSet| s.first().map(|v| comps.iter().position(|c| c.contains(v)).unwrap());
    let (c1, c2) = (comp_of(omega1), comp_of(omega2));
    if let (Some(a), Some(b)) = (c1, c2) {
        if a == b && comps.len() > 1 {
            return Ok(None);
        }
    }
    if n + 6 > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: n + 6, cap: MAX_VERTICES });
    }

    // H = G plus x1 x2 x3 on omega1 and y1 y2 y3 on omega2.
    let mut h = Graph::new(n + 6)?;
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    let (x1, x2, x3, y1, y2, y3) = (n, n + 1, n + 2, n + 3, n + 4, n + 5);
    let mut dummies = VertexSet::EMPTY;
    if !omega1.is_empty() {
        h.add_edge(x1, x2)?;
        h.add_edge(x2, x3)?;
        for v in omega1 {
            h.add_edge(x1, v)?;
        }
    } else {
        dummies |= VertexSet::singleton(x1).with(x2).with(x3);
    }
    if !omega2.is_empty() {
        h.add_edge(y1, y2)?;
        h.add_edge(y2, y3)?;
        for v in omega2 {
            h.add_edge(y1, v)?;
        }
    } else {
        dummies |= VertexSet::singleton(y1).with(y2).with(y3);
    }
    let (h, map) = h.remove_vertices(dummies);
    let Some(sigma) = find_model(&h) else {
        return Ok(None);
    };
    let pos = |v: VertexId| map.iter().position(|&w| w == v).unwrap();

    // (1.i): x2 starts before x1, so omega1 opens its component.
    let omega1_at_start = omega1.is_empty() || sigma.begin(pos(x2)) < sigma.begin(pos(x1));
    // (2.ii): x2's twin y2 ends after y1, so omega2 closes its component.
    let omega2_at_end = omega2.is_empty() || sigma.end(pos(y1)) < sigma.end(pos(y2));

    let restrict = |c: VertexSet| -> Vec<Event> {
        sigma
            .events()
            .iter()
            .filter(|e| map[e.vertex] < n && c.contains(map[e.vertex]))
            .map(|e| Event { vertex: map[e.vertex], kind: e.kind })
            .collect()
    };
    let reverse = |seq: Vec<Event>| -> Vec<Event> {
        seq.into_iter()
            .rev()
            .map(|e| if e.is_begin() { Event::end(e.vertex) } else { Event::begin(e.vertex) })
            .collect()
    };

    let events: Vec<Event> = if comps.len() == 1 {
        let all = restrict(g.vertices());
        match (omega1_at_start, omega2_at_end) {
            (true, true) => all,
            (false, false) => reverse(all),
            _ if omega1.is_empty() || omega2.is_empty() => {
                // Only one path present; orient by it.
                if omega1.is_empty() {
                    if omega2_at_end { all } else { reverse(all) }
                } else if omega1_at_start {
                    all
                } else {
                    reverse(all)
                }
            }
            _ => return Err(Error::Invariant("both prescribed cliques on the same side")),
        }
    } else {
        let mut seq = Vec::with_capacity(2 * n);
        if let Some(a) = c1 {
            let part = restrict(comps[a]);
            seq.extend(if omega1_at_start { part } else { reverse(part) });
        }
        for (i, c) in comps.iter().enumerate() {
            if Some(i) != c1 && Some(i) != c2 {
                seq.extend(restrict(*c));
            }
        }
        if let Some(b) = c2 {
            let part = restrict(comps[b]);
            seq.extend(if omega2_at_end { part } else { reverse(part) });
        }
        seq
    };

    let mut events = events;
    let k1 = omega1.len();
    let k2 = omega2.len();
    let len = events.len();
    let prefix_ok = events[..k1].iter().all(|e| e.is_begin() && omega1.contains(e.vertex));
    let suffix_ok = events[len - k2..].iter().all(|e| !e.is_begin() && omega2.contains(e.vertex));
    if !prefix_ok || !suffix_ok {
        return Err(Error::Invariant("folded model misses a prescribed clique"));
    }
    events[..k1].sort_by_key(|e| e.vertex);
    events[len - k2..].sort_by_key(|e| core::cmp::Reverse(e.vertex));
    validate_model(g, &events)
        .map(Some)
        .map_err(|_| Error::Invariant("folded model is not a model"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{augment, named};

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    /// All models of `g` by plain enumeration of valid event sequences.
    fn all_models(g: &Graph) -> Vec<IntervalModel> {
        fn go(g: &Graph, seq: &mut Vec<Event>, started: VertexSet, ended: VertexSet, out: &mut Vec<IntervalModel>) {
            if ended == g.vertices() {
                if let Ok(m) = validate_model(g, seq) {
                    out.push(m);
                }
                return;
            }
            for v in g.vertices() - started {
                seq.push(Event::begin(v));
                go(g, seq, started.with(v), ended, out);
                seq.pop();
            }
            for u in started - ended {
                seq.push(Event::end(u));
                go(g, seq, started, ended.with(u), out);
                seq.pop();
            }
        }
        let mut out = Vec::new();
        go(g, &mut Vec::new(), VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
        out
    }

    #[test]
    fn canonical_examples() {
        let m = canonical_model(&path(3)).unwrap();
        assert_eq!(m.to_line(), "0+ 1+ 0- 2+ 2- 1-");
        let k1 = canonical_model(&Graph::new(1).unwrap()).unwrap();
        assert_eq!(k1.to_line(), "0+ 0-");
        let a = canonical_model(&augment(&Graph::new(1).unwrap()).unwrap()).unwrap();
        assert_eq!(a.to_line(), "0+ 1+ 1- 2+ 2- 3+ 3- 0-");
        assert_eq!(canonical_model(&cycle(4)), Err(Error::NotInterval));
        assert_eq!(canonical_model(&path(4)).unwrap().to_line(), "0+ 1+ 0- 2+ 1- 3+ 3- 2-");
    }

    #[test]
    fn canonical_matches_enumeration() {
        for g in [path(3), path(4), star(3), net().with_edges(&[(3, 1)]), complete(3), Graph::new(3).unwrap()] {
            let all = all_models(&g);
            let best = all.iter().min_by_key(|m| m.canonical_key()).unwrap();
            assert_eq!(&canonical_model(&g).unwrap(), best);
        }
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(recognize(&cycle(4)), Recognition::NotInterval { witness: set(&[0, 1, 2, 3]) });
        assert!(matches!(recognize(&path(4)), Recognition::Interval { .. }));
        assert_eq!(recognize(&net()), Recognition::NotInterval { witness: set(&[0, 1, 2, 3, 4, 5]) });
        assert!(all_models(&net()).is_empty());
        assert_eq!(
            recognize(&long_claw()),
            Recognition::NotInterval { witness: set(&[0, 1, 2, 3, 4, 5, 6]) }
        );
    }

    #[test]
    fn witness_is_minimal() {
        let g = named::disjoint_union(&cycle(5), &path(3));
        let w = minimal_witness(&g).unwrap();
        assert_eq!(w, set(&[0, 1, 2, 3, 4]));
        for v in w {
            assert!(is_interval_induced(&g, w.without(v)));
        }
    }

    #[test]
    fn prescribed_examples() {
        let p3 = path(3);
        let m = model_with_prescribed_cliques(&p3, set(&[0, 1]), set(&[1, 2])).unwrap().unwrap();
        assert_eq!(m.to_line(), "0+ 1+ 0- 2+ 2- 1-");
        let k2 = complete(2);
        let m = model_with_prescribed_cliques(&k2, set(&[0, 1]), set(&[0, 1])).unwrap().unwrap();
        assert_eq!(m.to_line(), "0+ 1+ 1- 0-");
        assert_eq!(model_with_prescribed_cliques(&p3, set(&[0, 1]), set(&[0])).unwrap(), None);
        assert_eq!(model_with_prescribed_cliques(&p3, set(&[0, 2]), set(&[0])), Err(Error::NotAClique));
    }

    #[test]
    fn prescribed_on_disconnected() {
        let g = named::disjoint_union(&path(3), &path(2));
        let m = model_with_prescribed_cliques(&g, set(&[3]), set(&[1, 2])).unwrap().unwrap();
        assert_eq!(m.at(1), Event::begin(3));
        assert_eq!(m.at(10), Event::end(1));
        assert_eq!(model_with_prescribed_cliques(&g, set(&[0]), set(&[2])).unwrap(), None);
        let m = model_with_prescribed_cliques(&g, VertexSet::EMPTY, set(&[0])).unwrap().unwrap();
        assert_eq!(m.at(10), Event::end(0));
    }

    #[test]
    fn interval_routes_agree_on_small_graphs() {
        for n in 1..=5usize {
            let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p).collect();
                let g = Graph::from_edges(n, &e).unwrap();
                assert_eq!(is_interval(&g), canonical_model(&g).is_ok(), "{g:?}");
            }
        }
    }

    #[test]
    fn asteroidal_triple_of_long_claw() {
        let g = long_claw();
        assert_eq!(find_asteroidal_triple(&g, g.vertices()), Some([2, 4, 6]));
        assert!(is_chordal_induced(&g, g.vertices()));
        assert!(!is_chordal_induced(&cycle(5), cycle(5).vertices()));
    }
}
