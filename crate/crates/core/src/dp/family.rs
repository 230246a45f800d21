//! Worlds, terraces and states read off a model, and the substates the
//! recurrence glues for a given state.

use alloc::format;
use alloc::vec::Vec;

use super::structures::{State, Terrace, World};
use crate::completion::{cheap_vertices, le_sqrt, Completion};
use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::model::IntervalModel;
use crate::set::VertexSet;

fn root_of(g: &Graph) -> Result<VertexId, Error> {
    g.special().map(|s| s.root).ok_or(Error::NotAugmented)
}

/// `W(σ, v)`: the world of a cheap vertex as drawn by `m`.
pub fn world_from_model(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, v: VertexId) -> Result<World, Error> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !le_sqrt(f.incident(v), k) {
        return Err(Error::Invariant("world: vertex is not cheap"));
    }
    let (pl, pr) = (m.begin(v), m.end(v) - 1);
    World::new(g, k, v, m.section(pl), m.section(pr), pl, pr, f.partners(v))
}

/// `T(σ, x)`: the nested terrace of a cheap vertex other than the root,
/// between the cheap enclosing vertex that begins last (`y1`) and the one
/// that ends first (`y2`).
pub fn terrace_from_model(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, x: VertexId) -> Result<Terrace, Error> {
    if x == root_of(g)? {
        return Err(Error::Invariant("terrace: the root has no enclosing vertex"));
    }
    let inner = world_from_model(g, f, k, m, x)?;
    let enclosing: Vec<VertexId> = cheap_vertices(g, f, k)
        .iter()
        .filter(|&y| m.begin(y) < m.begin(x) && m.end(x) < m.end(y))
        .collect();
    let y1 = enclosing.iter().copied().max_by_key(|&y| m.begin(y));
    let y2 = enclosing.iter().copied().min_by_key(|&y| m.end(y));
    let (Some(y1), Some(y2)) = (y1, y2) else {
        return Err(Error::Invariant("terrace: no cheap vertex encloses x"));
    };
    let outer1 = world_from_model(g, f, k, m, y1)?;
    let outer2 = world_from_model(g, f, k, m, y2)?;
    let domain = (outer1.interior() & outer2.interior()) - inner.closed();
    let side1: VertexSet = domain.iter().filter(|&w| m.end(w) < m.begin(x)).collect();
    Terrace::nested(g, k, inner, outer1, outer2, side1, domain - side1)
}

/// Every terrace drawn by `m`: a flat one per cheap vertex and a nested one
/// per cheap vertex other than the root, flat first, each by vertex.
pub fn terraces_from_model(g: &Graph, f: &Completion, k: usize, m: &IntervalModel) -> Result<Vec<Terrace>, Error> {
    let root = root_of(g)?;
    let cheap = cheap_vertices(g, f, k);
    let mut out = Vec::new();
    for v in cheap {
        out.push(Terrace::Flat(world_from_model(g, f, k, m, v)?));
    }
    for x in cheap.without(root) {
        out.push(terrace_from_model(g, f, k, m, x)?);
    }
    Ok(out)
}

/// All ordered pairs of terraces from [`terraces_from_model`] that form a
/// state. The root state `(W_r, W_r)` comes first.
pub fn states_from_model(g: &Graph, f: &Completion, k: usize, m: &IntervalModel) -> Result<Vec<State>, Error> {
    let terraces = terraces_from_model(g, f, k, m)?;
    let mut out = Vec::new();
    for t1 in &terraces {
        for t2 in &terraces {
            if let Ok(s) = State::new(t1.clone(), t2.clone()) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// The vertex the recurrence splits `s` at: a cheap vertex of
/// `(Ω_L △ Ω_R) ∪ I` whose interval covers most of the state, preferring
/// interior vertices and then smaller ids.
pub fn pivot(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, s: &State) -> Option<VertexId> {
    let interior = s.interior();
    let pool = ((s.omega_left() ^ s.omega_right()) | interior) & cheap_vertices(g, f, k);
    pool.iter().max_by_key(|&x| {
        let cover = m.end(x).min(s.p_right() + 1) as isize - m.begin(x).max(s.p_left()) as isize;
        (cover, interior.contains(x), core::cmp::Reverse(x))
    })
}

/// The two or three substates whose completions, concatenated, give the
/// completion of `s` in `m`.
pub fn pivot_substates(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, s: &State) -> Result<Vec<State>, Error> {
    let x = pivot(g, f, k, m, s).ok_or_else(|| Error::MissingState(format!("no cheap pivot for state at {}..{}", s.p_left(), s.p_right())))?;
    let flat = Terrace::Flat(world_from_model(g, f, k, m, x)?);
    let nested = terrace_from_model(g, f, k, m, x)?;
    let (t1, t2) = (s.t1.clone(), s.t2.clone());
    let pairs = if s.interior().contains(x) {
        alloc::vec![(t1, nested.clone()), (flat.clone(), flat), (nested, t2)]
    } else if s.omega_left().contains(x) {
        alloc::vec![(t1, flat), (nested, t2)]
    } else {
        alloc::vec![(t1, nested), (flat, t2)]
    };
    pairs
        .into_iter()
        .map(|(a, b)| {
            State::new(a, b).map_err(|e| Error::MissingState(format!("pivot {x} of state at {}..{}: {e}", s.p_left(), s.p_right())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::structures::state_events;
    use crate::graph::{augment, named::*};
    use crate::recognition::canonical_model;
    use crate::set::EventSet;

    fn setup(base: &Graph, pairs: &[(VertexId, VertexId)]) -> (Graph, Completion, IntervalModel) {
        let g = augment(base).unwrap();
        let f = Completion::new(&g, pairs).unwrap();
        let m = canonical_model(&f.apply(&g)).unwrap();
        (g, f, m)
    }

    #[test]
    fn root_world() {
        let (g, f, m) = setup(&path(3), &[]);
        let w = world_from_model(&g, &f, 0, &m, 0).unwrap();
        assert_eq!((w.p_left, w.p_right), (1, 2 * g.n() - 1));
        assert_eq!(w.omega_left, VertexSet::singleton(0));
        assert_eq!(w.omega_right, VertexSet::singleton(0));
        assert!(w.fill.is_empty());
        assert!(w.appears(&f, &m));
    }

    #[test]
    fn middle_of_p3() {
        // a, b, c are 2, 3, 4 after augmenting.
        let (g, f, m) = setup(&path(3), &[]);
        assert_eq!(m.to_line(), "0+ 1+ 1- 2+ 3+ 2- 4+ 4- 3- 5+ 5- 0-");
        let w = world_from_model(&g, &f, 0, &m, 3).unwrap();
        assert_eq!(w.omega_left, [0, 2, 3].into_iter().collect());
        assert_eq!(w.omega_right, [0, 3].into_iter().collect());
        assert_eq!(w.interior(), VertexSet::singleton(4));
        let t = terrace_from_model(&g, &f, 0, &m, 3).unwrap();
        let Terrace::Nested(n) = &t else { panic!() };
        assert_eq!((n.outer1.v, n.outer2.v), (0, 0));
        // Everything strictly inside the root but away from b: the pendants.
        assert_eq!(n.side1, VertexSet::singleton(1));
        assert_eq!(n.side2, VertexSet::singleton(5));
        assert!(t.appears(&f, &m));
    }

    #[test]
    fn single_vertex_terrace() {
        let (g, f, m) = setup(&path(1), &[]);
        let t = terrace_from_model(&g, &f, 0, &m, 2).unwrap();
        let Terrace::Nested(n) = t else { panic!() };
        assert_eq!((n.outer1.v, n.outer2.v), (0, 0));
        assert_eq!(n.side1, VertexSet::singleton(1));
        assert_eq!(n.side2, VertexSet::singleton(3));
    }

    #[test]
    fn sides_follow_the_model() {
        // Three isolated vertices under the root: a and c flank b.
        let base = Graph::new(3).unwrap();
        let (g, f, m) = setup(&base, &[]);
        let t = terrace_from_model(&g, &f, 0, &m, 3).unwrap();
        let Terrace::Nested(n) = t else { panic!() };
        assert_eq!(n.side1, [1, 2].into_iter().collect());
        assert_eq!(n.side2, [4, 5].into_iter().collect());
    }

    #[test]
    fn c4_with_fill() {
        // C4 on 2..=5 with the chord 2-4 added.
        let (g, f, m) = setup(&cycle(4), &[(2, 4)]);
        for v in 0..g.n() {
            let w = world_from_model(&g, &f, 1, &m, v).unwrap();
            assert!(w.appears(&f, &m));
        }
        let shifted = m.reversed();
        let w = world_from_model(&g, &f, 1, &m, 3).unwrap();
        assert!(!w.appears(&f, &shifted));
        let w2 = world_from_model(&g, &f, 1, &m, 2).unwrap();
        assert!(!w2.appears(&Completion::empty(), &m));
    }

    #[test]
    fn states_match_their_events() {
        for (base, pairs) in [(path(4), alloc::vec![]), (cycle(4), alloc::vec![(2, 4)]), (star(3), alloc::vec![])] {
            let (g, f, m) = setup(&base, &pairs);
            let states = states_from_model(&g, &f, 1, &m).unwrap();
            assert!(!states.is_empty());
            for s in &states {
                assert!(s.appears(&f, &m));
                let seen: EventSet = (s.p_left() + 1..=s.p_right()).map(|p| m.at(p)).collect();
                assert_eq!(state_events(s), seen);
                assert_eq!(state_events(s).len(), s.width());
            }
            let root = &states[0];
            assert_eq!((root.p_left(), root.p_right()), (1, m.len() - 1));
            let all_but_root = EventSet::both(g.vertices().without(0));
            assert_eq!(state_events(root), all_but_root);
        }
    }

    #[test]
    fn empty_state() {
        let (g, f, m) = setup(&path(2), &[]);
        // The left pendant: begins and ends back to back.
        let w = world_from_model(&g, &f, 0, &m, 1).unwrap();
        let t = Terrace::Flat(w);
        let s = State::new(t.clone(), t).unwrap();
        assert_eq!(s.width(), 0);
        assert!(state_events(&s).is_empty());
    }

    #[test]
    fn expensive_vertices_are_refused() {
        let (g, f, m) = setup(&cycle(4), &[(2, 4)]);
        assert!(world_from_model(&g, &f, 0, &m, 2).is_err());
        assert!(terrace_from_model(&g, &f, 1, &m, 0).is_err());
    }
}
