//! Worlds, terraces and states.

use serde::{Deserialize, Serialize};

use crate::completion::{le_scaled_sqrt, le_sqrt, Completion};
use crate::error::Error;
use crate::graph::{components, Graph, VertexId};
use crate::model::IntervalModel;
use crate::set::{EventSet, VertexSet};

/// The surroundings of one vertex `v`: the sections at its two ends, their
/// positions, and its fill partners.
///
/// `p_left` is the position of `v`'s begin and `p_right` the position just
/// before its end, so `omega_left` and `omega_right` both contain `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct World {
    pub v: VertexId,
    pub omega_left: VertexSet,
    pub omega_right: VertexSet,
    pub p_left: usize,
    pub p_right: usize,
    /// Fill partners of `v`.
    pub fill: VertexSet,
    closed: VertexSet,
    interior: VertexSet,
}

impl World {
    /// Checks every defining condition of a world.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        g: &Graph,
        k: usize,
        v: VertexId,
        omega_left: VertexSet,
        omega_right: VertexSet,
        p_left: usize,
        p_right: usize,
        fill: VertexSet,
    ) -> Result<World, Error> {
        let n = g.n();
        if v >= n || !(omega_left | omega_right | fill).is_subset(g.vertices()) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if fill.intersects(g.closed_neighbors(v)) {
            return Err(Error::Invariant("world: fill partner is v or a neighbour of v"));
        }
        if !(1 <= p_left && p_left <= p_right && p_right < 2 * n) {
            return Err(Error::Invariant("world: positions out of range"));
        }
        if !(omega_left & omega_right).contains(v) {
            return Err(Error::Invariant("world: v missing from a border section"));
        }
        let closed = g.closed_neighbors(v) | fill;
        let open = closed.without(v);
        let borders = omega_left | omega_right;
        let interior = closed - borders;
        if p_right - p_left != (omega_left ^ omega_right).len() + 2 * (open - borders).len() {
            return Err(Error::Invariant("world: width does not match its events"));
        }
        if !borders.is_subset(closed) {
            return Err(Error::Invariant("world: border vertex not adjacent to v"));
        }
        for c in components(g, borders) {
            if c.intersects(open) && !c.is_subset(open) {
                return Err(Error::Invariant("world: component split by the neighbourhood of v"));
            }
        }
        if !le_sqrt(fill.len(), k) {
            return Err(Error::Invariant("world: v has more than sqrt(k) fill edges"));
        }
        Ok(World { v, omega_left, omega_right, p_left, p_right, fill, closed, interior })
    }

    /// `N_{G+F_v}[v]`.
    pub fn closed(&self) -> VertexSet {
        self.closed
    }

    /// `closed()` minus both border sections.
    pub fn interior(&self) -> VertexSet {
        self.interior
    }

    /// Whether `m` draws `v` with exactly these sections, positions and fill.
    pub fn appears(&self, f: &Completion, m: &IntervalModel) -> bool {
        self.fill == f.partners(self.v)
            && self.p_left == m.begin(self.v)
            && self.p_right + 1 == m.end(self.v)
            && self.omega_left == m.section(self.p_left)
            && self.omega_right == m.section(self.p_right)
    }

    fn area(&self) -> Area {
        Area {
            omega_left: self.omega_left,
            omega_right: self.omega_right,
            p_left: self.p_left,
            p_right: self.p_right,
            interior: self.interior,
        }
    }
}

/// One of the two active areas of a terrace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Area {
    pub omega_left: VertexSet,
    pub omega_right: VertexSet,
    pub p_left: usize,
    pub p_right: usize,
    pub interior: VertexSet,
}

/// A world nested inside two enclosing worlds, with the vertices between
/// them split into those left of the inner vertex (`side1`) and those right
/// of it (`side2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nested {
    pub inner: World,
    pub outer1: World,
    pub outer2: World,
    pub side1: VertexSet,
    pub side2: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Terrace {
    Flat(World),
    Nested(Nested),
}

impl Terrace {
    /// Checks the nesting chain, the bound on vertices spanning the inner
    /// world but not both outer borders, and that the side split covers the
    /// domain and respects its components.
    pub fn nested(
        g: &Graph,
        k: usize,
        inner: World,
        outer1: World,
        outer2: World,
        side1: VertexSet,
        side2: VertexSet,
    ) -> Result<Terrace, Error> {
        if outer1.v == inner.v || outer2.v == inner.v {
            return Err(Error::Invariant("terrace: inner vertex equals an outer one"));
        }
        let chain = [outer2.p_left, outer1.p_left, inner.p_left, inner.p_right, outer2.p_right, outer1.p_right];
        if !(chain[0] <= chain[1]
            && chain[1] < chain[2]
            && chain[2] <= chain[3]
            && chain[3] < chain[4]
            && chain[4] <= chain[5])
        {
            return Err(Error::Invariant("terrace: worlds are not nested"));
        }
        // The inner vertex always lies in both of its own sections and never
        // in the outer ones, so it is left out of the count.
        let extra = ((inner.omega_left & inner.omega_right) - (outer1.omega_left & outer2.omega_right)).without(inner.v);
        if !le_scaled_sqrt(extra.len(), 2, k, 0) {
            return Err(Error::Invariant("terrace: more than 2 sqrt(k) inner-only border vertices"));
        }
        let domain = (outer1.interior & outer2.interior) - inner.closed;
        if side1.intersects(side2) || side1 | side2 != domain {
            return Err(Error::Invariant("terrace: side split does not cover its domain"));
        }
        if side1.iter().any(|x| g.neighbors(x).intersects(side2)) {
            return Err(Error::Invariant("terrace: adjacent vertices on different sides"));
        }
        Ok(Terrace::Nested(Nested { inner, outer1, outer2, side1, side2 }))
    }

    /// The left active area. For a flat terrace both areas are the world.
    pub fn first(&self) -> Area {
        match self {
            Terrace::Flat(w) => w.area(),
            Terrace::Nested(t) => Area {
                omega_left: t.outer1.omega_left,
                omega_right: t.inner.omega_left,
                p_left: t.outer1.p_left,
                p_right: t.inner.p_left,
                interior: t.side1,
            },
        }
    }

    /// The right active area.
    pub fn second(&self) -> Area {
        match self {
            Terrace::Flat(w) => w.area(),
            Terrace::Nested(t) => Area {
                omega_left: t.inner.omega_right,
                omega_right: t.outer2.omega_right,
                p_left: t.inner.p_right,
                p_right: t.outer2.p_right,
                interior: t.side2,
            },
        }
    }

    /// The world whose vertex the terrace is built around.
    pub fn inner(&self) -> &World {
        match self {
            Terrace::Flat(w) => w,
            Terrace::Nested(t) => &t.inner,
        }
    }

    pub fn appears(&self, f: &Completion, m: &IntervalModel) -> bool {
        match self {
            Terrace::Flat(w) => w.appears(f, m),
            Terrace::Nested(t) => {
                if !(t.inner.appears(f, m) && t.outer1.appears(f, m) && t.outer2.appears(f, m)) {
                    return false;
                }
                let start = m.begin(t.inner.v);
                (t.side1 | t.side2).iter().all(|w| (m.end(w) < start) == t.side1.contains(w))
            }
        }
    }
}

/// A pair of terraces; the state covers the second area of `t1`
/// intersected with the first area of `t2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct State {
    pub t1: Terrace,
    pub t2: Terrace,
    omega_left: VertexSet,
    omega_right: VertexSet,
    p_left: usize,
    p_right: usize,
    interior: VertexSet,
}

impl State {
    /// Checks the position chain and that the width equals the number of
    /// events inside. Equal left and right positions are allowed, giving a
    /// state with no events.
    pub fn new(t1: Terrace, t2: Terrace) -> Result<State, Error> {
        let (b1, a2) = (t1.second(), t2.first());
        if !(a2.p_left <= b1.p_left && b1.p_left <= a2.p_right && a2.p_right <= b1.p_right) {
            return Err(Error::Invariant("state: areas do not overlap in order"));
        }
        let interior = b1.interior & a2.interior;
        let width = a2.p_right - b1.p_left;
        if width != 2 * interior.len() + (b1.omega_left ^ a2.omega_right).len() {
            return Err(Error::Invariant("state: width does not match its events"));
        }
        Ok(State {
            omega_left: b1.omega_left,
            omega_right: a2.omega_right,
            p_left: b1.p_left,
            p_right: a2.p_right,
            interior,
            t1,
            t2,
        })
    }

    pub fn omega_left(&self) -> VertexSet {
        self.omega_left
    }

    pub fn omega_right(&self) -> VertexSet {
        self.omega_right
    }

    pub fn p_left(&self) -> usize {
        self.p_left
    }

    pub fn p_right(&self) -> usize {
        self.p_right
    }

    pub fn interior(&self) -> VertexSet {
        self.interior
    }

    /// Interior plus both borders.
    pub fn vertices(&self) -> VertexSet {
        self.interior | self.omega_left | self.omega_right
    }

    pub fn width(&self) -> usize {
        self.p_right - self.p_left
    }

    pub fn appears(&self, f: &Completion, m: &IntervalModel) -> bool {
        self.t1.appears(f, m) && self.t2.appears(f, m)
    }
}

/// Events placed strictly after `p_left` and up to `p_right`: both events
/// of the interior, the ends of vertices leaving and the begins of vertices
/// joining.
pub fn state_events(s: &State) -> EventSet {
    EventSet::both(s.interior)
        .union(EventSet::ends(s.omega_left - s.omega_right))
        .union(EventSet::begins(s.omega_right - s.omega_left))
}
