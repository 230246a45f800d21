use intcomp::corpus::connected_up_to;
use intcomp::suite::{run_suite, SuiteName, SuiteOptions};
use intcomp_core::dp::dp_check;
use intcomp_core::{augment, solve_oracle};

#[test]
fn solvers_agree_up_to_eight_vertices() {
    let r = run_suite(SuiteName::SolverEquivalence, &SuiteOptions { n_max: Some(8), ..SuiteOptions::default() }).unwrap();
    assert!(r.ok(), "{:?}", r.failures);
    assert_eq!(r.tally.holds, 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117);
}

#[test]
fn dp_glues_with_a_small_cap() {
    for base in connected_up_to(5).unwrap() {
        let g = augment(&base).unwrap();
        let Some(f) = solve_oracle(&g, 2).canonical else { continue };
        for k in f.len()..=2 {
            let r = dp_check(&g, &f, k, 4).unwrap();
            assert!(r.ok(), "{base:?} k={k}: {:?}", r.problems);
            assert_eq!(r.stats.unresolved, 0);
        }
    }
}

#[test]
fn suite_reports_are_reproducible() {
    let opts = SuiteOptions { n_max: Some(5), random: 200, seed: 3, ..SuiteOptions::default() };
    let a = serde_json::to_string(&run_suite(SuiteName::SolverEquivalence, &opts).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(SuiteName::SolverEquivalence, &opts).unwrap()).unwrap();
    assert_eq!(a, b);
}
