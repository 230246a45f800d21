//! The DP table: base cases by exact search, larger states by gluing two or
//! three narrower states, and the end-to-end check against a model.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::arrange::{best_completion, completion_of, StateCompletion};
use super::family::{pivot_substates, states_from_model, world_from_model};
use super::structures::{state_events, State, Terrace};
use crate::completion::Completion;
use crate::error::Error;
use crate::graph::Graph;
use crate::model::{Event, IntervalModel};
use crate::recognition::canonical_model;
use crate::set::EventSet;

/// Largest state solved by exact search: the most events `e` with
/// `e <= 4 sqrt(k) + 4`, but never below 10.
pub fn default_cap(k: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= 16 * k {
        r += 1;
    }
    (r + 4).max(10)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpStats {
    pub states: usize,
    pub base_cases: usize,
    pub glued: usize,
    /// States for which no candidate concatenation was a completion.
    pub unresolved: usize,
    /// Chains examined while gluing.
    pub chains: usize,
}

/// The filled table. `entries[i]` is `M[states[i]]`, or `None` when no
/// candidate was found.
#[derive(Clone, Debug)]
pub struct DpTable {
    pub states: Vec<State>,
    pub entries: Vec<Option<StateCompletion>>,
    pub stats: DpStats,
}

impl DpTable {
    /// Index of a state equal to `s` in the family.
    pub fn find(&self, s: &State) -> Option<usize> {
        self.states.iter().position(|t| t == s)
    }
}

/// Fills `M` for every state, in order of width. States with at most `cap`
/// events are solved exactly; the rest take the ⊴-minimum over all
/// concatenations of 2 or 3 strictly narrower states that chain border to
/// border, split the events of the state, and form a completion of it.
/// Among equal candidates the first found is kept.
pub fn fill_table(g: &Graph, states: Vec<State>, cap: usize) -> Result<DpTable, Error> {
    let mut order: Vec<usize> = (0..states.len()).collect();
    order.sort_by_key(|&i| states[i].width());
    let events: Vec<EventSet> = states.iter().map(state_events).collect();
    let mut by_left: BTreeMap<(usize, u64), Vec<usize>> = BTreeMap::new();
    for &i in &order {
        by_left.entry((states[i].p_left(), states[i].omega_left().bits())).or_default().push(i);
    }
    let mut entries: Vec<Option<StateCompletion>> = alloc::vec![None; states.len()];
    let mut stats = DpStats { states: states.len(), ..DpStats::default() };
    for &i in &order {
        let s = &states[i];
        if events[i].len() <= cap {
            entries[i] = Some(best_completion(g, s, cap)?);
            stats.base_cases += 1;
            continue;
        }
        let width = s.width();
        let narrower = |j: &&usize| states[**j].width() < width;
        let next = |j: usize| by_left.get(&(states[j].p_right(), states[j].omega_right().bits()));
        let ends_here = |j: usize| states[j].p_right() == s.p_right() && states[j].omega_right() == s.omega_right();
        let mut chains: Vec<Vec<usize>> = Vec::new();
        let firsts = by_left.get(&(s.p_left(), s.omega_left().bits())).into_iter().flatten().filter(narrower);
        for &a in firsts {
            for &b in next(a).into_iter().flatten().filter(narrower) {
                if ends_here(b) {
                    chains.push(alloc::vec![a, b]);
                }
                for &c in next(b).into_iter().flatten().filter(narrower) {
                    if ends_here(c) {
                        chains.push(alloc::vec![a, b, c]);
                    }
                }
            }
        }
        let mut best: Option<StateCompletion> = None;
        for chain in chains {
            let mut union = EventSet::EMPTY;
            let mut disjoint = true;
            for &j in &chain {
                disjoint &= union.is_disjoint(events[j]);
                union = union.union(events[j]);
            }
            if !disjoint || union != events[i] {
                continue;
            }
            let mut seq: Vec<Event> = Vec::with_capacity(width);
            let mut known = true;
            for &j in &chain {
                match &entries[j] {
                    Some(c) => seq.extend_from_slice(&c.events),
                    None => known = false,
                }
            }
            if !known {
                continue;
            }
            stats.chains += 1;
            let Ok(cand) = completion_of(g, s, &seq) else { continue };
            if best.as_ref().is_none_or(|b| cand.cmp_key(b).is_lt()) {
                best = Some(cand);
            }
        }
        match best {
            Some(b) => {
                entries[i] = Some(b);
                stats.glued += 1;
            }
            None => stats.unresolved += 1,
        }
    }
    Ok(DpTable { states, entries, stats })
}

/// Reads the root cell and wraps it in the root's own events.
pub fn read_model(g: &Graph, table: &DpTable, root: &State) -> Result<IntervalModel, Error> {
    let r = g.special().ok_or(Error::NotAugmented)?.root;
    let i = table.find(root).ok_or_else(|| Error::MissingState(String::from("root state")))?;
    let cell = table.entries[i].as_ref().ok_or_else(|| Error::MissingState(String::from("no value for the root state")))?;
    let mut events = alloc::vec![Event::begin(r)];
    events.extend_from_slice(&cell.events);
    events.push(Event::end(r));
    IntervalModel::from_events(events).map_err(|_| Error::Invariant("root cell is not a model"))
}

/// Builds the family from `m`, fills the table and reads the model off the
/// root state `(W_r, W_r)`.
pub fn dp_reconstruct(g: &Graph, f: &Completion, k: usize, m: &IntervalModel, cap: usize) -> Result<(IntervalModel, DpTable), Error> {
    let root = root_state(g, f, k, m)?;
    let table = fill_table(g, states_from_model(g, f, k, m)?, cap)?;
    let model = read_model(g, &table, &root)?;
    Ok((model, table))
}

fn root_state(g: &Graph, f: &Completion, k: usize, m: &IntervalModel) -> Result<State, Error> {
    let r = g.special().ok_or(Error::NotAugmented)?.root;
    let t = Terrace::Flat(world_from_model(g, f, k, m, r)?);
    State::new(t.clone(), t)
}

/// Outcome of [`dp_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpReport {
    pub instance: String,
    pub k: usize,
    pub cap: usize,
    pub fill: Completion,
    pub canonical: String,
    pub reconstructed: Option<String>,
    pub matches: bool,
    pub stats: DpStats,
    /// Every failed check, in the order found.
    pub problems: Vec<String>,
}

impl DpReport {
    pub fn ok(&self) -> bool {
        self.matches && self.problems.is_empty()
    }
}

/// Runs the whole pipeline on an augmented graph and a completion `f`
/// (normally the canonical solution):
///
/// * every generated state appears in the canonical model `σ` of `G + F`,
///   its events are exactly those of `σ` between its positions, and their
///   number is its width;
/// * the exact ⊴-minimum completion of every state equals `σ` restricted to
///   its events (searched without the cap);
/// * every table cell equals `σ` restricted to its events;
/// * for every state above the cap, the pivot substates are in the family;
/// * the reconstructed model equals `σ`.
pub fn dp_check(g: &Graph, f: &Completion, k: usize, cap: usize) -> Result<DpReport, Error> {
    let m = canonical_model(&f.apply(g))?;
    let states = states_from_model(g, f, k, &m)?;
    let mut problems = Vec::new();
    for s in &states {
        let at = format!("state {}..{} ({:?})", s.p_left(), s.p_right(), s.omega_left());
        if !s.appears(f, &m) {
            problems.push(format!("{at} does not appear"));
        }
        let seen: EventSet = (s.p_left() + 1..=s.p_right()).map(|p| m.at(p)).collect();
        let ev = state_events(s);
        if ev != seen || ev.len() != s.width() {
            problems.push(format!("{at}: events {ev:?} but the model has {seen:?}"));
        }
        let restricted = &m.events()[s.p_left()..s.p_right()];
        match best_completion(g, s, usize::MAX) {
            Ok(b) if b.events[..] == *restricted => {}
            Ok(b) => problems.push(format!("{at}: best completion {:?} differs from the model {restricted:?}", b.events)),
            Err(e) => problems.push(format!("{at}: {e}")),
        }
    }
    let (table, reconstructed) = match dp_reconstruct(g, f, k, &m, cap) {
        Ok((model, table)) => (Some(table), Some(model)),
        Err(e) => {
            problems.push(format!("reconstruction failed: {e}"));
            (None, None)
        }
    };
    if let Some(table) = &table {
        for (s, cell) in table.states.iter().zip(&table.entries) {
            let restricted = &m.events()[s.p_left()..s.p_right()];
            let at = format!("cell {}..{}", s.p_left(), s.p_right());
            match cell {
                Some(c) if c.events[..] == *restricted => {}
                Some(c) => problems.push(format!("{at}: {:?} differs from the model", c.events)),
                None => problems.push(format!("{at}: no candidate")),
            }
            if state_events(s).len() > cap {
                match pivot_substates(g, f, k, &m, s) {
                    Ok(subs) => {
                        for sub in subs {
                            if table.find(&sub).is_none() {
                                problems.push(format!("{at}: pivot substate {}..{} missing", sub.p_left(), sub.p_right()));
                            }
                        }
                    }
                    Err(e) => problems.push(format!("{at}: {e}")),
                }
            }
        }
    }
    let matches = reconstructed.as_ref() == Some(&m);
    Ok(DpReport {
        instance: String::new(),
        k,
        cap,
        fill: f.clone(),
        canonical: m.to_line(),
        reconstructed: reconstructed.map(|r| r.to_line()),
        matches,
        stats: table.map(|t| t.stats).unwrap_or_default(),
        problems,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{augment, named::*};
    use crate::solver::solve_oracle;

    #[test]
    fn caps() {
        assert_eq!(default_cap(0), 10);
        assert_eq!(default_cap(3), 10);
        assert_eq!(default_cap(4), 12);
        assert_eq!(default_cap(10), 16);
        assert_eq!(default_cap(9), 16);
    }

    fn check(base: &Graph, k: usize, cap: usize) -> DpReport {
        let g = augment(base).unwrap();
        let f = solve_oracle(&g, k).canonical.unwrap();
        dp_check(&g, &f, k, cap).unwrap()
    }

    #[test]
    fn base_case_only() {
        let r = check(&path(2), 0, 100);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.stats.glued, 0);
    }

    #[test]
    fn c4_is_rebuilt_by_gluing() {
        let r = check(&cycle(4), 1, 10);
        assert!(r.ok(), "{r:?}");
        assert!(r.stats.glued > 0);
        assert_eq!(r.fill.len(), 1);
        assert_eq!(r.reconstructed.as_deref(), Some(r.canonical.as_str()));
    }

    #[test]
    fn small_cap_forces_deep_gluing() {
        for base in [path(4), star(3), cycle(5), net()] {
            let r = check(&base, 2, 4);
            assert!(r.ok(), "{base:?} {r:?}");
        }
    }

    #[test]
    fn not_augmented() {
        let g = path(3);
        assert_eq!(dp_check(&g, &Completion::empty(), 0, 10).unwrap_err(), Error::NotAugmented);
    }
}
