use core::fmt;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    TooManyVertices { n: usize, cap: usize },
    VertexOutOfRange { vertex: VertexId, n: usize },
    SelfLoop(VertexId),
    AlreadyAugmented,
    NotAugmented,
    NotInterval,
    NotAClique,
    /// A completion contains a pair that is already an edge, or a self pair.
    NotANonEdge(VertexId, VertexId),
    NotAConnectedModule,
    /// The events given do not form a bijection onto the events of the graph.
    WrongDomain { expected: usize, found: usize },
    NoCompletion,
    /// A state has more events than the brute-force cap allows.
    TooManyEvents { events: usize, cap: usize },
    /// A state needed by the recurrence is not in the family.
    MissingState(alloc::string::String),
    /// A dynamic-programming structure failed one of its defining conditions.
    Invariant(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooManyVertices { n, cap } => write!(f, "graph has {n} vertices, cap is {cap}"),
            Error::VertexOutOfRange { vertex, n } => write!(f, "vertex {vertex} out of range for n={n}"),
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::AlreadyAugmented => f.write_str("graph is already augmented"),
            Error::NotAugmented => f.write_str("graph is not augmented"),
            Error::NotInterval => f.write_str("graph is not an interval graph"),
            Error::NotAClique => f.write_str("vertex set is not a clique"),
            Error::NotANonEdge(u, v) => write!(f, "pair {u}-{v} is not a non-edge"),
            Error::NotAConnectedModule => f.write_str("vertex set is not a connected module"),
            Error::WrongDomain { expected, found } => {
                write!(f, "expected {expected} events, found {found}")
            }
            Error::NoCompletion => f.write_str("no valid completion exists"),
            Error::TooManyEvents { events, cap } => write!(f, "state has {events} events, cap is {cap}"),
            Error::MissingState(what) => write!(f, "state missing from the family: {what}"),
            Error::Invariant(what) => write!(f, "invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
