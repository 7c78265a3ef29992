//! Verification reports and their text and JSON forms.
//!
//! The JSON layout is described by `schema/report.schema.json` at the
//! repository root.

use std::fmt::Write as _;
use std::time::Duration;

use quasicover_core::verify::{Counterexample, EnumerationSpec, Tally};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub sigma: u8,
    pub n_min: usize,
    pub n_max: usize,
    pub canonical: bool,
}

impl From<EnumerationSpec> for SpecRecord {
    fn from(s: EnumerationSpec) -> Self {
        SpecRecord { sigma: s.sigma, n_min: s.n_min, n_max: s.n_max, canonical: s.canonical }
    }
}

impl From<SpecRecord> for EnumerationSpec {
    fn from(s: SpecRecord) -> Self {
        EnumerationSpec { sigma: s.sigma, n_min: s.n_min, n_max: s.n_max, canonical: s.canonical }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub rank: u64,
    pub w: String,
    pub w_prime: String,
    pub j: usize,
    pub diagnostics: String,
}

impl From<&Counterexample> for CounterexampleRecord {
    fn from(c: &Counterexample) -> Self {
        CounterexampleRecord {
            rank: c.rank,
            w: c.w.to_string(),
            w_prime: c.w_prime.to_string(),
            j: c.j,
            diagnostics: c.diagnostics.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: SpecRecord,
    pub property: String,
    pub words_tested: u64,
    pub pairs_tested: u64,
    pub counterexamples: Vec<CounterexampleRecord>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(spec: EnumerationSpec, property: &str, tally: Tally, elapsed: Duration) -> Self {
        VerificationReport {
            spec: spec.into(),
            property: property.to_string(),
            words_tested: tally.words_tested,
            pairs_tested: tally.pairs_tested,
            counterexamples: tally.counterexamples.iter().map(Into::into).collect(),
            elapsed_ms: u64::try_from(elapsed.as_millis()).unwrap_or(u64::MAX),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// 0 when verified, 1 when a counterexample was found.
    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Analytic pair count for the spec; a full-scan run must match it.
    pub fn expected_pairs(&self) -> u64 {
        EnumerationSpec::from(self.spec).expected_pairs()
    }

    /// Equal in everything but wall time.
    pub fn same_outcome(&self, other: &VerificationReport) -> bool {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
            == VerificationReport { elapsed_ms: 0, ..other.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(out, "property: {}", self.property);
        let _ = writeln!(out, "spec:");
        let _ = writeln!(out, "  sigma: {}", s.sigma);
        let _ = writeln!(out, "  n_min: {}", s.n_min);
        let _ = writeln!(out, "  n_max: {}", s.n_max);
        let _ = writeln!(out, "  canonical: {}", s.canonical);
        let _ = writeln!(out, "words_tested: {}", self.words_tested);
        let _ = writeln!(out, "pairs_tested: {}", self.pairs_tested);
        let _ = writeln!(out, "elapsed_ms: {}", self.elapsed_ms);
        let _ = writeln!(out, "counterexamples: {}", self.counterexamples.len());
        for c in &self.counterexamples {
            let _ = writeln!(out, "  - rank: {}", c.rank);
            let _ = writeln!(out, "    w: {}", c.w);
            let _ = writeln!(out, "    w_prime: {}", c.w_prime);
            let _ = writeln!(out, "    j: {}", c.j);
            let _ = writeln!(out, "    diagnostics: {}", c.diagnostics);
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "verified" } else { "FAILED" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasicover_core::Word;

    fn sample() -> VerificationReport {
        let spec = EnumerationSpec::new(2, 1, 3, false).unwrap();
        let tally = Tally {
            words_tested: 14,
            pairs_tested: 34,
            counterexamples: vec![Counterexample {
                rank: 3,
                w: "ab".parse::<Word>().unwrap(),
                w_prime: "bb".parse::<Word>().unwrap(),
                j: 1,
                diagnostics: "made up".into(),
            }],
        };
        VerificationReport::new(spec, "theorem-quasi", tally, Duration::from_millis(5))
    }

    #[test]
    fn json_round_trips() {
        let report = sample();
        let back: VerificationReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        let keys: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
        for key in ["spec", "property", "words_tested", "pairs_tested", "counterexamples", "elapsed_ms"] {
            assert!(keys.contains(&key), "{key}");
        }
    }

    #[test]
    fn text_lists_counterexamples() {
        let text = sample().to_text();
        assert!(text.contains("counterexamples: 1\n"));
        assert!(text.contains("    w_prime: bb\n"));
        assert!(text.ends_with("result: FAILED\n"));
        assert_eq!(sample().exit_code(), 1);
    }
}
