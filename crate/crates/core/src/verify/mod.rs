//! Checkers for structural properties of minimal completions and their
//! models.
//!
//! Every checker is total: it returns exactly one [`Verdict`] per input
//! tuple. `Violated` always carries enough of the situation (sets,
//! positions, vertices) to redo the check by hand.

use alloc::string::String;

use serde::{Deserialize, Serialize};

use crate::completion::Completion;
use crate::graph::Graph;
use crate::model::IntervalModel;
use crate::set::VertexSet;

mod bounds;
mod canonical;
mod fill_in;
mod left_right;
mod modules;
mod pmc;
mod sections;

pub use bounds::{small_subsets, verify_bounds, BoundConstants};
pub use canonical::{verify_canonical_endpoints, verify_canonical_modules};
pub use fill_in::{fill_in_context, verify_fill_in_structure, FillInContext};
pub use left_right::{separated_components, verify_small_separation};
pub use modules::verify_module_stays;
pub use pmc::{clique_anatomy, verify_clique_characterization, CliqueAnatomy};
pub use sections::verify_section_reconstruction;

/// Which property a report is about. The string forms double as CLI names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// Maximal cliques from the eight anchor vertices.
    PmcChar,
    /// Sections from the two nearest maximal cliques.
    Sections,
    /// Components around a vertex and its untouched neighbours.
    FiStructure,
    /// Few components between two sections occupy events of a small set.
    LeftRight,
    /// Number of neighbourhood classes with respect to a set.
    NeighborhoodClasses,
    /// Number of components nearly complete to a set.
    LowDeficiency,
    /// Connected modules stay modules under minimum completions.
    ModuleStays,
    /// Consecutive begins and ends in a canonical model follow the order.
    CanonicalEndpoints,
    /// Twin components in a canonical model are sorted by minimum vertex.
    CanonicalModules,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::PmcChar => "pmc-char",
            LemmaId::Sections => "sections",
            LemmaId::FiStructure => "fi-structure",
            LemmaId::LeftRight => "left-right",
            LemmaId::NeighborhoodClasses => "neighborhood-classes",
            LemmaId::LowDeficiency => "low-deficiency",
            LemmaId::ModuleStays => "module-stays",
            LemmaId::CanonicalEndpoints => "canonical-endpoints",
            LemmaId::CanonicalModules => "canonical-modules",
        }
    }
}

impl core::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "details", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated(String),
    PreconditionFailed(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }

    pub fn is_precondition_failed(&self) -> bool {
        matches!(self, Verdict::PreconditionFailed(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    /// Free-form instance label set by the caller, empty by default.
    pub instance: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl LemmaReport {
    pub fn new(lemma: LemmaId, verdict: Verdict) -> Self {
        LemmaReport { lemma, instance: String::new(), verdict }
    }

    pub fn for_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }
}

/// Shorthand used by the checkers to bail out with a verdict.
pub(crate) type Check<T> = Result<T, Verdict>;

pub(crate) fn violated(msg: String) -> Verdict {
    Verdict::Violated(msg)
}

pub(crate) fn precondition(msg: String) -> Verdict {
    Verdict::PreconditionFailed(msg)
}

pub(crate) fn report(lemma: LemmaId, outcome: Check<()>) -> LemmaReport {
    LemmaReport::new(lemma, outcome.err().unwrap_or(Verdict::Holds))
}

/// `m` draws exactly `G + F`.
pub(crate) fn check_model_of(g: &Graph, f: &Completion, m: &IntervalModel) -> Check<Graph> {
    let gf = f.apply(g);
    if m.n() != g.n() {
        return Err(precondition(alloc::format!("model has {} vertices, graph has {}", m.n(), g.n())));
    }
    if m.graph().edges() != gf.edges() {
        return Err(precondition(String::from("model does not draw G + F")));
    }
    Ok(gf)
}

/// First and last positions of the events of `c`.
pub(crate) fn span(m: &IntervalModel, c: VertexSet) -> (usize, usize) {
    let beg = c.iter().map(|v| m.begin(v)).min().unwrap_or(0);
    let end = c.iter().map(|v| m.end(v)).max().unwrap_or(0);
    (beg, end)
}
