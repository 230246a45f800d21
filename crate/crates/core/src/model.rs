//! Interval models as permutations of begin/end events.
//!
//! Positions are 1-based: a model of an `n`-vertex graph places its `2n`
//! events on positions `1..=2n`. The section at position `p` is the set of
//! vertices whose begin is at or before `p` and whose end is after `p`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Begin,
    End,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Event {
    pub vertex: VertexId,
    pub kind: EventKind,
}

impl Event {
    #[inline]
    pub const fn begin(vertex: VertexId) -> Event {
        Event { vertex, kind: EventKind::Begin }
    }

    #[inline]
    pub const fn end(vertex: VertexId) -> Event {
        Event { vertex, kind: EventKind::End }
    }

    #[inline]
    pub const fn is_begin(self) -> bool {
        matches!(self.kind, EventKind::Begin)
    }

    /// Dense index `2 * vertex + kind`.
    #[inline]
    pub const fn index(self) -> usize {
        2 * self.vertex + if self.is_begin() { 0 } else { 1 }
    }

    #[inline]
    pub const fn from_index(i: usize) -> Event {
        if i.is_multiple_of(2) {
            Event::begin(i / 2)
        } else {
            Event::end(i / 2)
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.vertex, if self.is_begin() { '+' } else { '-' })
    }
}

/// Why a candidate event sequence is not a model of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelViolation {
    WrongDomain { expected: usize, found: usize },
    DuplicateEvent { vertex: VertexId },
    EndBeforeBegin { vertex: VertexId },
    /// Adjacent vertices whose intervals are disjoint.
    AdjacentDisjoint { u: VertexId, v: VertexId },
    /// Non-adjacent vertices whose intervals overlap.
    NonAdjacentOverlap { u: VertexId, v: VertexId },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::WrongDomain { expected, found } => {
                write!(f, "expected {expected} events, found {found}")
            }
            ModelViolation::DuplicateEvent { vertex } => write!(f, "vertex {vertex} has a repeated event"),
            ModelViolation::EndBeforeBegin { vertex } => write!(f, "vertex {vertex} ends before it begins"),
            ModelViolation::AdjacentDisjoint { u, v } => write!(f, "{u} and {v} are adjacent but disjoint"),
            ModelViolation::NonAdjacentOverlap { u, v } => {
                write!(f, "{u} and {v} overlap but are not adjacent")
            }
        }
    }
}

/// A permutation of the events of `n` vertices in which every begin precedes
/// its end. Which graph it models is a separate question, see
/// [`validate_model`] and [`IntervalModel::graph`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Event>", into = "Vec<Event>")]
pub struct IntervalModel {
    events: Vec<Event>,
    begin: Vec<usize>,
    end: Vec<usize>,
}

impl TryFrom<Vec<Event>> for IntervalModel {
    type Error = ModelViolation;

    fn try_from(events: Vec<Event>) -> Result<Self, ModelViolation> {
        IntervalModel::from_events(events)
    }
}

impl From<IntervalModel> for Vec<Event> {
    fn from(m: IntervalModel) -> Self {
        m.events
    }
}

impl IntervalModel {
    /// Checks that `events` is a bijection onto the events of `0..n` with
    /// every begin before the matching end.
    pub fn from_events(events: Vec<Event>) -> Result<Self, ModelViolation> {
        if !events.len().is_multiple_of(2) {
            return Err(ModelViolation::WrongDomain {
                expected: events.len() + 1,
                found: events.len(),
            });
        }
        let n = events.len() / 2;
        let mut begin = alloc::vec![0usize; n];
        let mut end = alloc::vec![0usize; n];
        for (i, e) in events.iter().enumerate() {
            if e.vertex >= n {
                return Err(ModelViolation::WrongDomain { expected: 2 * (e.vertex + 1), found: events.len() });
            }
            let slot = if e.is_begin() { &mut begin[e.vertex] } else { &mut end[e.vertex] };
            if *slot != 0 {
                return Err(ModelViolation::DuplicateEvent { vertex: e.vertex });
            }
            *slot = i + 1;
        }
        for v in 0..n {
            if end[v] < begin[v] {
                return Err(ModelViolation::EndBeforeBegin { vertex: v });
            }
        }
        Ok(IntervalModel { events, begin, end })
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.begin.len()
    }

    /// Number of events, `2n`.
    #[inline]
    pub fn len(&self) -> usize {
        self.events.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    #[inline]
    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Event at 1-based position `p`.
    #[inline]
    pub fn at(&self, p: usize) -> Event {
        self.events[p - 1]
    }

    #[inline]
    pub fn begin(&self, v: VertexId) -> usize {
        self.begin[v]
    }

    #[inline]
    pub fn end(&self, v: VertexId) -> usize {
        self.end[v]
    }

    #[inline]
    pub fn position(&self, e: Event) -> usize {
        if e.is_begin() {
            self.begin[e.vertex]
        } else {
            self.end[e.vertex]
        }
    }

    /// Whether the intervals of `u` and `v` share a position.
    #[inline]
    pub fn overlap(&self, u: VertexId, v: VertexId) -> bool {
        self.begin[u] < self.end[v] && self.begin[v] < self.end[u]
    }

    /// Section at `p`: `{v : begin(v) <= p < end(v)}`.
    pub fn section(&self, p: usize) -> VertexSet {
        (0..self.n())
            .filter(|&v| self.begin[v] <= p && p < self.end[v])
            .collect()
    }

    /// All sections, indexed by position `0..=2n`.
    pub fn sections(&self) -> Vec<VertexSet> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut cur = VertexSet::EMPTY;
        out.push(cur);
        for e in &self.events {
            if e.is_begin() {
                cur.insert(e.vertex);
            } else {
                cur.remove(e.vertex);
            }
            out.push(cur);
        }
        out
    }

    /// Sections lying between a begin event and the end event right after
    /// it, with their positions.
    pub fn maximal_cliques(&self) -> Vec<(VertexSet, usize)> {
        let sections = self.sections();
        (1..self.len())
            .filter(|&p| self.at(p).is_begin() && !self.at(p + 1).is_begin())
            .map(|p| (sections[p], p))
            .collect()
    }

    /// The graph this model draws: vertices adjacent iff intervals overlap.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let mut rows = alloc::vec![VertexSet::EMPTY; n];
        for u in 0..n {
            for v in u + 1..n {
                if self.overlap(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// The mirrored model: position `p` goes to `2n + 1 - p`, begins and
    /// ends swap.
    pub fn reversed(&self) -> IntervalModel {
        let events = self
            .events
            .iter()
            .rev()
            .map(|e| if e.is_begin() { Event::end(e.vertex) } else { Event::begin(e.vertex) })
            .collect();
        IntervalModel::from_events(events).expect("mirror of a model is a model")
    }

    /// The tuple minimized by canonical models:
    /// `(begin(0), ..., begin(n-1), end(n-1), ..., end(0))`.
    pub fn canonical_key(&self) -> Vec<usize> {
        let mut key = self.begin.clone();
        key.extend(self.end.iter().rev());
        key
    }

    /// Space-separated `v+` / `v-` tokens in position order.
    pub fn to_line(&self) -> String {
        let mut s = String::new();
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&alloc::format!("{e}"));
        }
        s
    }

    /// Parses the format written by [`IntervalModel::to_line`].
    pub fn parse_line(line: &str) -> Result<IntervalModel, Error> {
        let mut events = Vec::new();
        for tok in line.split_whitespace() {
            let (num, kind) = tok.split_at(tok.len() - 1);
            let v: VertexId = num.parse().map_err(|_| Error::Invariant("bad model token"))?;
            events.push(match kind {
                "+" => Event::begin(v),
                "-" => Event::end(v),
                _ => return Err(Error::Invariant("bad model token")),
            });
        }
        let found = events.len();
        IntervalModel::from_events(events).map_err(|_| Error::WrongDomain { expected: found, found })
    }
}

impl fmt::Debug for IntervalModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntervalModel[{}]", self.to_line())
    }
}

impl fmt::Display for IntervalModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Checks a candidate event sequence against both model conditions for `g`.
pub fn validate_model(g: &Graph, events: &[Event]) -> Result<IntervalModel, ModelViolation> {
    if events.len() != 2 * g.n() {
        return Err(ModelViolation::WrongDomain { expected: 2 * g.n(), found: events.len() });
    }
    let m = IntervalModel::from_events(events.to_vec())?;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            match (g.has_edge(u, v), m.overlap(u, v)) {
                (true, false) => return Err(ModelViolation::AdjacentDisjoint { u, v }),
                (false, true) => return Err(ModelViolation::NonAdjacentOverlap { u, v }),
                _ => {}
            }
        }
    }
    Ok(m)
}
