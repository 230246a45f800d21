//! Connected modules survive minimum completions.

use alloc::format;
use alloc::string::String;

use super::{precondition, report, violated, Check, LemmaId, LemmaReport};
use crate::completion::Completion;
use crate::graph::Graph;
use crate::modular::{all_modules, is_module};
use crate::recognition::is_interval;

/// Every connected module of `g` is a module of `G + F`. `f` must be a
/// minimum completion; only its being a completion is checked here.
pub fn verify_module_stays(g: &Graph, f: &Completion) -> LemmaReport {
    report(LemmaId::ModuleStays, check(g, f))
}

fn check(g: &Graph, f: &Completion) -> Check<()> {
    let gf = f.apply(g);
    if !is_interval(&gf) {
        return Err(precondition(String::from("F is not a completion")));
    }
    for m in all_modules(g) {
        if !g.is_connected_set(m) || is_module(&gf, m) {
            continue;
        }
        let splitter = (g.vertices() - m)
            .iter()
            .find(|&v| {
                let seen = gf.neighbors(v) & m;
                !seen.is_empty() && seen != m
            })
            .unwrap();
        return Err(violated(format!(
            "module {m} split by {splitter} in G + F with F = {f:?}"
        )));
    }
    Ok(())
}
