//! Completions of a single state and the ⊴-minimum among them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::structures::{state_events, State};
use crate::completion::Completion;
use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::model::Event;
use crate::set::{EventSet, VertexSet};

/// An arrangement of the events of a state on positions
/// `p_left + 1 ..= p_right`, with the fill it induces on the state's
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateCompletion {
    pub events: Vec<Event>,
    pub fill: Completion,
    /// Positions of the events listed begins first by vertex, then ends by
    /// decreasing vertex.
    pub sequence: Vec<usize>,
}

impl StateCompletion {
    /// The ⊴ order: fill size, then fill, then the associated sequence.
    pub fn cmp_key(&self, other: &StateCompletion) -> Ordering {
        (self.fill.len(), &self.fill, &self.sequence).cmp(&(other.fill.len(), &other.fill, &other.sequence))
    }
}

/// Begins by increasing vertex, then ends by decreasing vertex.
fn associated_order(events: EventSet) -> Vec<Event> {
    let mut begins: Vec<Event> = events.iter().filter(|e| e.is_begin()).collect();
    let mut ends: Vec<Event> = events.iter().filter(|e| !e.is_begin()).collect();
    begins.sort_by_key(|e| e.vertex);
    ends.sort_by_key(|e| core::cmp::Reverse(e.vertex));
    begins.extend(ends);
    begins
}

/// Running state of an arrangement: which vertices have begun and ended.
#[derive(Clone, Copy)]
struct Sweep<'a> {
    g: &'a Graph,
    w: VertexSet,
    begun: VertexSet,
    ended: VertexSet,
}

impl<'a> Sweep<'a> {
    fn new(g: &'a Graph, s: &State) -> Sweep<'a> {
        Sweep { g, w: s.vertices(), begun: s.omega_left(), ended: VertexSet::EMPTY }
    }

    /// Non-adjacent pairs inside the left border.
    fn initial_fill(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in self.begun {
            for v in (self.begun - self.g.closed_neighbors(u)).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Applies `e` if it keeps every edge of `G[W]` drawable, returning the
    /// fill pairs it creates.
    fn step(&mut self, e: Event) -> Option<Vec<(VertexId, VertexId)>> {
        let v = e.vertex;
        if e.is_begin() {
            if self.begun.contains(v) || self.g.neighbors(v).intersects(self.ended) {
                return None;
            }
            let open = self.begun - self.ended;
            let fill = (open - self.g.neighbors(v))
                .iter()
                .map(|u| if u < v { (u, v) } else { (v, u) })
                .collect();
            self.begun.insert(v);
            Some(fill)
        } else {
            if !self.begun.contains(v) || self.ended.contains(v) {
                return None;
            }
            if !(self.g.neighbors(v) & self.w).is_subset(self.begun) {
                return None;
            }
            self.ended.insert(v);
            Some(Vec::new())
        }
    }
}

/// Checks that `events` is an arrangement of the events of `s` that, with
/// the left border begun before and the right border ended after, draws
/// `G[W(S)]` plus some fill.
pub fn completion_of(g: &Graph, s: &State, events: &[Event]) -> Result<StateCompletion, Error> {
    let expected = state_events(s);
    let given: EventSet = events.iter().copied().collect();
    if given != expected || events.len() != expected.len() {
        return Err(Error::WrongDomain { expected: expected.len(), found: events.len() });
    }
    let mut sweep = Sweep::new(g, s);
    let mut fill = sweep.initial_fill();
    for &e in events {
        fill.extend(sweep.step(e).ok_or(Error::NoCompletion)?);
    }
    fill.sort_unstable();
    let base = s.p_left() + 1;
    let sequence = associated_order(expected)
        .into_iter()
        .map(|e| base + events.iter().position(|&x| x == e).unwrap())
        .collect();
    Ok(StateCompletion { events: events.to_vec(), fill: Completion::from_sorted(fill), sequence })
}

/// Best way to finish from one sweep state. Fill created before this point
/// is shared by every continuation, and for equal sizes the lexicographic
/// order of `past ∪ future` only depends on `future`, so suffixes can be
/// compared on their own.
#[derive(Clone)]
struct Suffix {
    fill: Vec<(VertexId, VertexId)>,
    /// Positions of the remaining events in associated order.
    sequence: Vec<usize>,
    first: Option<Event>,
}

impl Suffix {
    fn key(&self) -> (usize, &[(VertexId, VertexId)], &[usize]) {
        (self.fill.len(), &self.fill, &self.sequence)
    }
}

struct Search<'a> {
    order: Vec<Event>,
    p_left: usize,
    memo: BTreeMap<(u64, u64), Option<Suffix>>,
    start: Sweep<'a>,
}

impl Search<'_> {
    fn placed(&self, sw: &Sweep) -> usize {
        // Every event of the state changes `begun` or `ended`; the left
        // border starts out begun.
        (sw.begun - self.start.begun).len() + sw.ended.len()
    }

    fn remaining(&self, sw: &Sweep) -> impl Iterator<Item = Event> + '_ {
        let (begun, ended) = (sw.begun, sw.ended);
        self.order.iter().copied().filter(move |&e| {
            if e.is_begin() {
                !begun.contains(e.vertex)
            } else {
                !ended.contains(e.vertex)
            }
        })
    }

    fn best(&mut self, sw: Sweep) -> Option<Suffix> {
        let key = (sw.begun.bits(), sw.ended.bits());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let pos = self.p_left + 1 + self.placed(&sw);
        let rest: Vec<Event> = self.remaining(&sw).collect();
        let mut best: Option<Suffix> = if rest.is_empty() {
            Some(Suffix { fill: Vec::new(), sequence: Vec::new(), first: None })
        } else {
            None
        };
        for (rank, &e) in rest.iter().enumerate() {
            let mut next = sw;
            let Some(mut fill) = next.step(e) else { continue };
            let Some(child) = self.best(next) else { continue };
            fill.extend_from_slice(&child.fill);
            fill.sort_unstable();
            let mut sequence = child.sequence.clone();
            sequence.insert(rank, pos);
            let cand = Suffix { fill, sequence, first: Some(e) };
            if best.as_ref().is_none_or(|b| cand.key() < b.key()) {
                best = Some(cand);
            }
        }
        self.memo.insert(key, best.clone());
        best
    }
}

/// The ⊴-minimum completion of `s`, found by an exact search over all
/// arrangements of its events (memoized on the set of placed events).
///
/// Fails with [`Error::TooManyEvents`] when the state has more than `cap`
/// events and with [`Error::NoCompletion`] when it has no completion.
pub fn best_completion(g: &Graph, s: &State, cap: usize) -> Result<StateCompletion, Error> {
    let events = state_events(s);
    if events.len() > cap {
        return Err(Error::TooManyEvents { events: events.len(), cap });
    }
    let start = Sweep::new(g, s);
    let mut search = Search { order: associated_order(events), p_left: s.p_left(), memo: BTreeMap::new(), start };
    search.best(start).ok_or(Error::NoCompletion)?;
    let mut seq = Vec::with_capacity(events.len());
    let mut sw = start;
    while let Some(e) = search.memo.get(&(sw.begun.bits(), sw.ended.bits())).cloned().flatten().and_then(|b| b.first) {
        sw.step(e);
        seq.push(e);
    }
    completion_of(g, s, &seq)
}
