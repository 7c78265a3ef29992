use quasicover::{check_theorem_quasi, run_property, verify, RunOptions};
use quasicover_core::verify::{EnumerationSpec, PairProperty, Property};
use quasicover_core::{is_periodic, Word};

/// False on purpose: periodicity is not preserved by a one-letter change.
struct NeighbourStaysPeriodic;

impl PairProperty for NeighbourStaysPeriodic {
    type WordFacts = bool;

    fn name(&self) -> &'static str {
        "neighbour-stays-periodic"
    }

    fn facts(&self, w: &Word) -> bool {
        is_periodic(w).unwrap()
    }

    fn check(&self, &periodic: &bool, _w: &Word, w_prime: &Word, _j: usize) -> Option<String> {
        (periodic && !is_periodic(w_prime).unwrap()).then(|| "lost periodicity".into())
    }
}

#[test]
fn failing_property_exits_with_one() {
    let spec = EnumerationSpec::new(2, 1, 6, false).unwrap();
    let report = run_property(&NeighbourStaysPeriodic, &spec, &RunOptions::default()).unwrap();
    assert!(!report.passed());
    assert_eq!(report.exit_code(), 1);
    assert_eq!(report.pairs_tested, report.expected_pairs());
    assert!(report.to_text().contains("result: FAILED"));
}

#[test]
fn failing_reports_are_identical_across_worker_counts() {
    let spec = EnumerationSpec::new(3, 1, 7, false).unwrap();
    let reference = run_property(&NeighbourStaysPeriodic, &spec, &RunOptions::default()).unwrap();
    for workers in [2, 4, 7, 16] {
        let report =
            run_property(&NeighbourStaysPeriodic, &spec, &RunOptions { workers, stop_at_first: false }).unwrap();
        assert!(report.same_outcome(&reference), "workers={workers}");
    }
}

#[test]
fn stop_at_first_keeps_one_counterexample() {
    let spec = EnumerationSpec::new(2, 1, 12, false).unwrap();
    for workers in [1, 4] {
        let report =
            run_property(&NeighbourStaysPeriodic, &spec, &RunOptions { workers, stop_at_first: true }).unwrap();
        assert_eq!(report.counterexamples.len(), 1);
        assert!(report.pairs_tested < report.expected_pairs());
    }
}

#[test]
fn full_scans_match_analytic_pair_counts() {
    for canonical in [false, true] {
        let spec = EnumerationSpec::new(3, 1, 6, canonical).unwrap();
        for property in Property::ALL {
            let report = verify(property, &spec, &RunOptions { workers: 3, stop_at_first: false }).unwrap();
            assert!(report.passed(), "{property}");
            assert_eq!(report.pairs_tested, report.expected_pairs(), "{property}");
        }
    }
}

#[test]
fn theorem_and_cover_seed_lemma_agree() {
    // the theorem's proof goes through the lemma: both must hold together
    let spec = EnumerationSpec::new(2, 1, 11, false).unwrap();
    let opts = RunOptions { workers: 2, stop_at_first: false };
    let theorem = check_theorem_quasi(&spec, &opts).unwrap();
    let lemma = verify(Property::LemmaCoverSeed, &spec, &opts).unwrap();
    assert!(theorem.passed() && lemma.passed());
}
