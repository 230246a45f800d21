//! Test suites that fan corpus instances through the solvers and checkers
//! and tally the outcomes.

use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use intcomp_core::dp::{default_cap, dp_check};
use intcomp_core::graph::named;
use intcomp_core::modular::find_rule_application;
use intcomp_core::recognition::{canonical_model, is_interval};
use intcomp_core::solver::{minimal_completions, oracle_search_space};
use intcomp_core::verify::{
    small_subsets, verify_bounds, verify_canonical_endpoints, verify_canonical_modules, verify_clique_characterization,
    verify_fill_in_structure, verify_module_stays, verify_section_reconstruction, verify_small_separation, BoundConstants,
    LemmaReport, Verdict,
};
use intcomp_core::{augment, solve_branching, solve_oracle, Completion, Graph, IntervalModel, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{connected_up_to, random_graph, CorpusError};
use crate::io::to_graph6;

/// At most this many failures are kept in a report.
pub const MAX_FAILURES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Fixtures,
    SolverEquivalence,
    ReductionSafety,
    Canonical,
    PmcChar,
    Sections,
    FiStructure,
    LeftRight,
    Bounds,
    ModuleStays,
    DpCheck,
    Controls,
}

impl SuiteName {
    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Fixtures => "fixtures",
            SuiteName::SolverEquivalence => "solver-equivalence",
            SuiteName::ReductionSafety => "reduction-safety",
            SuiteName::Canonical => "canonical",
            SuiteName::PmcChar => "pmc-char",
            SuiteName::Sections => "sections",
            SuiteName::FiStructure => "fi-structure",
            SuiteName::LeftRight => "left-right",
            SuiteName::Bounds => "bounds",
            SuiteName::ModuleStays => "module-stays",
            SuiteName::DpCheck => "dp-check",
            SuiteName::Controls => "controls",
        }
    }

    /// Largest base graph in the default corpus of this suite.
    pub fn default_n_max(self) -> usize {
        match self {
            SuiteName::PmcChar | SuiteName::Sections | SuiteName::FiStructure | SuiteName::DpCheck => 6,
            SuiteName::Controls => 5,
            _ => 7,
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOptions {
    /// Largest base graph; `None` picks the suite default.
    pub n_max: Option<usize>,
    pub k_max: usize,
    /// Seeded random graphs for the solver comparison.
    pub random: usize,
    pub random_n_max: usize,
    pub random_k_max: usize,
    pub seed: u64,
    /// Random instances whose oracle search space exceeds this are replaced
    /// by fresh ones.
    pub horizon: u128,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n_max: None, k_max: 3, random: 0, random_n_max: 12, random_k_max: 4, seed: 0, horizon: 250_000 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub instances: usize,
    pub checked: usize,
    pub holds: usize,
    pub violated: usize,
    pub precondition_failed: usize,
    pub skipped: usize,
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.instances += o.instances;
        self.checked += o.checked;
        self.holds += o.holds;
        self.violated += o.violated;
        self.precondition_failed += o.precondition_failed;
        self.skipped += o.skipped;
        self
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "checked={} holds={} violated={} skipped={}",
            self.checked,
            self.holds,
            self.violated,
            self.skipped + self.precondition_failed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub instance: String,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub options: SuiteOptions,
    pub tally: Tally,
    /// The first [`MAX_FAILURES`] failures.
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.tally.violated == 0
    }
}

/// Outcomes of one instance.
#[derive(Default)]
struct Acc {
    tally: Tally,
    failures: Vec<Failure>,
}

impl Acc {
    fn hold(&mut self) {
        self.tally.checked += 1;
        self.tally.holds += 1;
    }

    fn fail(&mut self, check: &str, instance: &str, details: String) {
        self.tally.checked += 1;
        self.tally.violated += 1;
        self.push(check, instance, details);
    }

    fn push(&mut self, check: &str, instance: &str, details: String) {
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(Failure { check: check.into(), instance: instance.into(), details });
        }
    }

    fn expect(&mut self, ok: bool, check: &str, instance: &str, details: impl FnOnce() -> String) {
        if ok {
            self.hold()
        } else {
            self.fail(check, instance, details())
        }
    }

    fn skip(&mut self) {
        self.tally.skipped += 1;
    }

    fn report(&mut self, r: &LemmaReport, instance: &str) {
        self.tally.checked += 1;
        match &r.verdict {
            Verdict::Holds => self.tally.holds += 1,
            Verdict::PreconditionFailed(_) => self.tally.precondition_failed += 1,
            Verdict::Violated(d) => {
                self.tally.violated += 1;
                self.push(r.lemma.name(), instance, d.clone());
            }
        }
    }

    fn merge(mut self, o: Acc) -> Acc {
        self.tally = self.tally.merge(o.tally);
        let room = MAX_FAILURES - self.failures.len();
        self.failures.extend(o.failures.into_iter().take(room));
        self
    }
}

/// Runs `per` on every instance in parallel and sums up in instance order.
fn fan<T: Sync>(items: &[T], per: impl Fn(&T) -> Acc + Sync) -> Acc {
    let mut acc = items
        .par_iter()
        .map(|x| {
            let mut a = per(x);
            a.tally.instances = 1;
            a
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Acc::default(), Acc::merge);
    acc.failures.truncate(MAX_FAILURES);
    acc
}

fn label(g: &Graph) -> String {
    to_graph6(g)
}

/// Runs a suite over its corpus.
pub fn run_suite(name: SuiteName, opts: &SuiteOptions) -> Result<SuiteReport, CorpusError> {
    let n_max = opts.n_max.unwrap_or(name.default_n_max());
    let k_max = opts.k_max;
    let acc = match name {
        SuiteName::Fixtures => fixtures(),
        SuiteName::SolverEquivalence => solver_equivalence(&connected_up_to(n_max)?, opts),
        SuiteName::ReductionSafety => reduction_safety(&connected_up_to(n_max)?, k_max),
        SuiteName::Canonical => canonical(&connected_up_to(n_max)?),
        SuiteName::PmcChar | SuiteName::Sections | SuiteName::FiStructure => {
            minimal_tuples(name, &connected_up_to(n_max)?, k_max)
        }
        SuiteName::LeftRight => left_right(&connected_up_to(n_max)?, k_max),
        SuiteName::Bounds => bounds(&connected_up_to(n_max)?, k_max, &BoundConstants::default()),
        SuiteName::ModuleStays => module_stays(&connected_up_to(n_max)?),
        SuiteName::DpCheck => dp(&connected_up_to(n_max)?, k_max),
        SuiteName::Controls => controls(&connected_up_to(n_max)?, k_max),
    };
    Ok(SuiteReport { suite: name, options: opts.clone(), tally: acc.tally, failures: acc.failures })
}

/// Named fixtures and their optimum, each cross-checked by both solvers.
pub fn fixture_table() -> Vec<(&'static str, Graph, usize)> {
    vec![
        ("C4", named::cycle(4), 1),
        ("C5", named::cycle(5), 2),
        ("net", named::net(), 1),
        ("K2,3", named::complete_bipartite(2, 3), 1),
        ("P5", named::path(5), 0),
        ("K4", named::complete(4), 0),
        ("star5", named::star(5), 0),
        ("long-claw", named::long_claw(), 1),
    ]
}

fn fixtures() -> Acc {
    fan(&fixture_table(), |(name, g, want)| {
        let mut acc = Acc::default();
        let k = g.non_edges().len();
        let (a, b) = (solve_oracle(g, k), solve_branching(g, k));
        acc.expect(a.opt == Some(*want), "oracle", name, || format!("oracle gives {:?}, expected {want}", a.opt));
        acc.expect(b.opt == Some(*want), "branching", name, || format!("branching gives {:?}, expected {want}", b.opt));
        acc
    })
}

/// `opt` from both solvers, and the branching solution must be a
/// completion of that size.
fn compare_solvers(g: &Graph, k: usize, acc: &mut Acc) {
    let (a, b) = (solve_oracle(g, k), solve_branching(g, k));
    let inst = format!("{} k={k}", label(g));
    if a.opt != b.opt {
        return acc.fail("solver-equivalence", &inst, format!("oracle {:?}, branching {:?}", a.opt, b.opt));
    }
    let sound = match &b.solution {
        Some(f) => Some(f.len()) == b.opt && is_interval(&f.apply(g)),
        None => b.opt.is_none(),
    };
    acc.expect(sound, "solver-equivalence", &inst, || format!("branching solution {:?} is not a completion", b.solution));
}

/// Random instances for the solver comparison, drawn until `count` fall
/// under the horizon. Returns them with the number of draws replaced.
pub fn random_instances(opts: &SuiteOptions) -> (Vec<(Graph, usize)>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::with_capacity(opts.random);
    let mut replaced = 0;
    while out.len() < opts.random {
        let n = rng.gen_range(1..=opts.random_n_max);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(n, p, &mut rng);
        let k = out.len() % (opts.random_k_max + 1);
        if oracle_search_space(&g, k) > opts.horizon {
            replaced += 1;
        } else {
            out.push((g, k));
        }
    }
    (out, replaced)
}

fn solver_equivalence(corpus: &[Graph], opts: &SuiteOptions) -> Acc {
    // With k at the number of non-edges both answers are exact.
    let exhaustive = fan(corpus, |g| {
        let mut acc = Acc::default();
        compare_solvers(g, g.non_edges().len(), &mut acc);
        acc
    });
    let (random, replaced) = random_instances(opts);
    let mut acc = exhaustive.merge(fan(&random, |(g, k)| {
        let mut acc = Acc::default();
        compare_solvers(g, *k, &mut acc);
        acc
    }));
    acc.tally.skipped += replaced;
    acc
}

/// Graphs where the module rule fires: a vertex joined to `m` copies of a
/// small graph, plus one extra module.
pub fn rule_family() -> Vec<Graph> {
    let mut out = Vec::new();
    let parts = [named::path(1), named::path(2), named::path(3), named::cycle(4)];
    for m in 3..=9 {
        for (i, part) in parts.iter().enumerate() {
            for (j, odd) in parts.iter().enumerate() {
                if i == j || part.n() * m + odd.n() + 1 > 16 {
                    continue;
                }
                let mut body = odd.clone();
                for _ in 0..m {
                    body = named::disjoint_union(&body, part);
                }
                out.push(cone(&body));
            }
        }
        out.push(named::star(m));
    }
    out
}

/// `g` plus a vertex adjacent to everything.
fn cone(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = Graph::new(n + 1).unwrap();
    for (u, v) in g.edges() {
        h.add_edge(u, v).unwrap();
    }
    for u in 0..n {
        h.add_edge(u, n).unwrap();
    }
    h
}

fn reduction_safety(corpus: &[Graph], k_max: usize) -> Acc {
    let mut all: Vec<Graph> = corpus.to_vec();
    all.extend(rule_family());
    fan(&all, |g| {
        let mut acc = Acc::default();
        for k in 0..=k_max {
            let Some(app) = find_rule_application(g, k) else {
                continue;
            };
            let inst = format!("{} k={k}", label(g));
            let opt = solve_oracle(g, k).opt;
            match app.removed {
                None => acc.expect(opt.is_none(), "reduction-safety", &inst, || {
                    format!("rule reports no instance but OPT = {opt:?}")
                }),
                Some(drop) => {
                    let (h, _) = g.remove_vertices(drop);
                    let after = solve_oracle(&h, k).opt;
                    acc.expect(after == opt, "reduction-safety", &inst, || {
                        format!("removing {drop} changes OPT from {opt:?} to {after:?}")
                    });
                }
            }
        }
        acc
    })
}

/// One line per interval graph of the corpus: its canonical model.
pub fn canonical_digest(corpus: &[Graph]) -> Vec<String> {
    corpus
        .par_iter()
        .filter(|g| is_interval(g))
        .map(|g| canonical_model(g).map(|m| m.to_line()).unwrap_or_else(|e| format!("error: {e}")))
        .collect()
}

fn canonical(corpus: &[Graph]) -> Acc {
    let intervals: Vec<&Graph> = corpus.iter().filter(|g| is_interval(g)).collect();
    fan(&intervals, |g| {
        let mut acc = Acc::default();
        let inst = label(g);
        let (Ok(m), Ok(again)) = (canonical_model(g), canonical_model(g)) else {
            acc.fail("canonical", &inst, "no canonical model for an interval graph".into());
            return acc;
        };
        acc.expect(m.to_line() == again.to_line(), "canonical", &inst, || "two runs differ".into());
        acc.expect(m.graph().edges() == g.edges(), "canonical", &inst, || format!("{} does not draw the graph", m.to_line()));
        acc.report(&verify_canonical_endpoints(g, &m), &inst);
        acc.report(&verify_canonical_modules(g, &m), &inst);
        acc
    })
}

fn model_of(g: &Graph, f: &Completion) -> Option<IntervalModel> {
    canonical_model(&f.apply(g)).ok()
}

fn minimal_tuples(name: SuiteName, corpus: &[Graph], k_max: usize) -> Acc {
    fan(corpus, |base| {
        let mut acc = Acc::default();
        let g = augment(base).expect("corpus graphs are small");
        let Ok(mins) = minimal_completions(&g, k_max) else {
            acc.skip();
            return acc;
        };
        for f in &mins {
            let Some(m) = model_of(&g, f) else {
                acc.fail(name.name(), &label(base), format!("no model for G + {f:?}"));
                continue;
            };
            for k in f.len()..=k_max {
                let inst = format!("{} F={:?} k={k}", label(base), f.edges());
                match name {
                    SuiteName::Sections => acc.report(&verify_section_reconstruction(&g, f, &m), &inst),
                    SuiteName::PmcChar => {
                        for model in [&m, &m.reversed()] {
                            for (omega, _) in model.maximal_cliques() {
                                acc.report(&verify_clique_characterization(&g, f, k, model, omega), &inst);
                            }
                        }
                    }
                    _ => {
                        for model in [&m, &m.reversed()] {
                            for v in g.vertices() {
                                acc.report(&verify_fill_in_structure(&g, f, k, model, v), &inst);
                            }
                        }
                    }
                }
                if name == SuiteName::Sections {
                    // Independent of k.
                    break;
                }
            }
        }
        acc
    })
}

/// All minimum completions, or `None` when OPT exceeds `k`.
fn minimum_completions(g: &Graph, k: usize) -> Option<Vec<Completion>> {
    let opt = solve_oracle(g, k).opt?;
    let all = minimal_completions(g, opt).ok()?;
    Some(all.into_iter().filter(|f| f.len() == opt).collect())
}

/// Subsets of `side` with at most two elements.
fn pairs_of(side: VertexSet) -> Vec<VertexSet> {
    let vs: Vec<_> = side.iter().collect();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        out.push(VertexSet::singleton(a));
        for &b in &vs[i + 1..] {
            out.push(VertexSet::singleton(a).with(b));
        }
    }
    out
}

fn left_right(corpus: &[Graph], k_max: usize) -> Acc {
    fan(corpus, |g| {
        let mut acc = Acc::default();
        let Some(fs) = minimum_completions(g, k_max) else {
            acc.skip();
            return acc;
        };
        for f in &fs {
            let Some(m) = model_of(g, f) else { continue };
            let len = m.len();
            for k in f.len()..=k_max {
                let inst = format!("{} F={:?} k={k}", label(g), f.edges());
                for pl in 0..=len {
                    for pr in pl + 1..=len + 1 {
                        let (ol, or) = (m.section(pl), m.section(pr - 1));
                        let mut ks: BTreeSet<VertexSet> = BTreeSet::from([VertexSet::EMPTY]);
                        ks.extend(pairs_of(ol - or));
                        ks.extend(pairs_of(or - ol));
                        for kset in ks {
                            acc.report(&verify_small_separation(g, k, f, &m, pl, pr, kset), &inst);
                        }
                    }
                }
            }
        }
        acc
    })
}

fn bounds(corpus: &[Graph], k_max: usize, consts: &BoundConstants) -> Acc {
    fan(corpus, |g| {
        let mut acc = Acc::default();
        let sets = small_subsets(g.n(), 3);
        for k in 0..=k_max {
            let inst = format!("{} k={k}", label(g));
            for r in verify_bounds(g, k, &sets, consts) {
                acc.report(&r, &inst);
            }
        }
        acc
    })
}

fn module_stays(corpus: &[Graph]) -> Acc {
    fan(corpus, |g| {
        let mut acc = Acc::default();
        let fs = minimum_completions(g, g.non_edges().len()).unwrap_or_default();
        for f in &fs {
            acc.report(&verify_module_stays(g, f), &format!("{} F={:?}", label(g), f.edges()));
        }
        acc
    })
}

fn dp(corpus: &[Graph], k_max: usize) -> Acc {
    fan(corpus, |base| {
        let mut acc = Acc::default();
        let g = augment(base).expect("corpus graphs are small");
        let Some(f) = solve_oracle(&g, k_max).canonical else {
            acc.skip();
            return acc;
        };
        for k in f.len()..=k_max {
            let inst = format!("{} k={k}", label(base));
            match dp_check(&g, &f, k, default_cap(k)) {
                Ok(r) => acc.expect(r.ok(), "dp-check", &inst, || {
                    format!("reconstructed {:?}, canonical {}; {}", r.reconstructed, r.canonical, r.problems.join("; "))
                }),
                Err(e) => acc.fail("dp-check", &inst, e.to_string()),
            }
        }
        acc
    })
}

/// Completions that are not minimal: a minimal one plus one more edge that
/// keeps the graph interval.
fn padded_completions(g: &Graph, k_max: usize) -> Vec<Completion> {
    let mut out = Vec::new();
    for f in minimal_completions(g, k_max.saturating_sub(1)).unwrap_or_default() {
        for e in g.non_edges() {
            if f.contains(e.0, e.1) {
                continue;
            }
            let mut pairs = f.edges().to_vec();
            pairs.push(e);
            let padded = Completion::new(g, &pairs).expect("non-edges");
            if is_interval(&padded.apply(g)) {
                out.push(padded);
            }
        }
    }
    out
}

/// Controls that must fire. A control that stays silent is counted as a
/// violation.
fn controls(corpus: &[Graph], k_max: usize) -> Acc {
    let teeth = fan(corpus, |base| {
        let mut acc = Acc::default();
        let g = augment(base).expect("corpus graphs are small");
        for f in padded_completions(&g, k_max) {
            let Some(m) = model_of(&g, &f) else { continue };
            let inst = format!("{} F={:?}", label(base), f.edges());
            for (omega, _) in m.maximal_cliques() {
                let r = verify_clique_characterization(&g, &f, k_max, &m, omega);
                acc.expect(r.verdict.is_precondition_failed(), "non-minimal", &inst, || {
                    format!("non-minimal completion gave {:?}", r.verdict)
                });
            }
        }
        acc
    });
    let mutated = BoundConstants { class_offset: 0, ..BoundConstants::default() };
    let broken = bounds(corpus, k_max, &mutated);
    let mut acc = teeth;
    acc.tally.instances += broken.tally.instances;
    acc.expect(broken.tally.violated > 0, "mutated-bound", "corpus", || "mutated bound constant was never violated".into());
    acc
}

/// Runs one checker over its default corpus and keeps the individual
/// reports, for the `verify` subcommand.
pub fn collect_reports(name: SuiteName, n_max: usize, k_max: usize) -> Result<Vec<LemmaReport>, CorpusError> {
    let corpus = connected_up_to(n_max)?;
    let per = |g: &Graph| -> Vec<LemmaReport> {
        let l = label(g);
        let mut out = Vec::new();
        match name {
            SuiteName::Canonical => {
                if let Ok(m) = canonical_model(g) {
                    out.push(verify_canonical_endpoints(g, &m));
                    out.push(verify_canonical_modules(g, &m));
                }
            }
            SuiteName::Bounds => {
                let sets = small_subsets(g.n(), 3);
                for k in 0..=k_max {
                    out.extend(verify_bounds(g, k, &sets, &BoundConstants::default()));
                }
            }
            SuiteName::ModuleStays => {
                for f in minimum_completions(g, g.non_edges().len()).unwrap_or_default() {
                    out.push(verify_module_stays(g, &f));
                }
            }
            SuiteName::LeftRight => {
                for f in minimum_completions(g, k_max).unwrap_or_default() {
                    let Some(m) = model_of(g, &f) else { continue };
                    for k in f.len()..=k_max {
                        for pl in 0..=m.len() {
                            for pr in pl + 1..=m.len() + 1 {
                                let (ol, or) = (m.section(pl), m.section(pr - 1));
                                let mut ks = BTreeSet::from([VertexSet::EMPTY]);
                                ks.extend(pairs_of(ol - or));
                                ks.extend(pairs_of(or - ol));
                                for kset in ks {
                                    out.push(verify_small_separation(g, k, &f, &m, pl, pr, kset));
                                }
                            }
                        }
                    }
                }
            }
            SuiteName::PmcChar | SuiteName::Sections | SuiteName::FiStructure => {
                let a = augment(g).expect("corpus graphs are small");
                for f in minimal_completions(&a, k_max).unwrap_or_default() {
                    let Some(m) = model_of(&a, &f) else { continue };
                    if name == SuiteName::Sections {
                        out.push(verify_section_reconstruction(&a, &f, &m));
                        continue;
                    }
                    for k in f.len()..=k_max {
                        for model in [&m, &m.reversed()] {
                            if name == SuiteName::PmcChar {
                                for (omega, _) in model.maximal_cliques() {
                                    out.push(verify_clique_characterization(&a, &f, k, model, omega));
                                }
                            } else {
                                for v in a.vertices() {
                                    out.push(verify_fill_in_structure(&a, &f, k, model, v));
                                }
                            }
                        }
                    }
                }
            }
            _ => {}
        }
        out.into_iter().map(|r| r.for_instance(l.clone())).collect()
    };
    Ok(corpus.par_iter().flat_map_iter(per).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(name: SuiteName, n: usize) -> SuiteReport {
        run_suite(name, &SuiteOptions { n_max: Some(n), ..SuiteOptions::default() }).unwrap()
    }

    #[test]
    fn fixtures_pass() {
        let r = small(SuiteName::Fixtures, 0);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.tally.checked, 2 * fixture_table().len());
    }

    #[test]
    fn small_suites_pass() {
        for name in [
            SuiteName::SolverEquivalence,
            SuiteName::ReductionSafety,
            SuiteName::Canonical,
            SuiteName::PmcChar,
            SuiteName::Sections,
            SuiteName::FiStructure,
            SuiteName::LeftRight,
            SuiteName::Bounds,
            SuiteName::ModuleStays,
            SuiteName::DpCheck,
            SuiteName::Controls,
        ] {
            let r = small(name, 4);
            assert!(r.ok(), "{name}: {:?}", r.failures);
            assert!(r.tally.checked > 0, "{name} checked nothing");
        }
    }

    #[test]
    fn random_instances_respect_the_horizon() {
        let opts = SuiteOptions { random: 30, horizon: 1000, ..SuiteOptions::default() };
        let (a, _) = random_instances(&opts);
        assert_eq!(a.len(), 30);
        assert!(a.iter().all(|(g, k)| oracle_search_space(g, *k) <= 1000 && g.n() <= 12 && *k <= 4));
        assert_eq!(a, random_instances(&opts).0);
    }

    #[test]
    fn rule_family_fires() {
        for g in rule_family() {
            assert!(find_rule_application(&g, 0).is_some(), "{}", label(&g));
        }
    }

    #[test]
    fn tally_line() {
        let t = Tally { checked: 5, holds: 3, violated: 1, skipped: 1, precondition_failed: 0, instances: 2 };
        assert_eq!(t.to_string(), "checked=5 holds=3 violated=1 skipped=1");
    }
}
