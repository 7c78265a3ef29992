//! Multi-threaded verification runs.
//!
//! The rank space is cut into contiguous blocks; workers pull block indices
//! from a shared counter and each block yields its own [`Tally`]. Tallies are
//! merged in block order after all workers join, so a full-scan report is
//! the same for any worker count.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use quasicover_core::verify::{
    BlockOptions, EnumerationSpec, FactPeriodic, LemmaCoverSeed, LemmaNotSeed, PairProperty,
    Property, Tally, TheoremQuasi,
};

use crate::report::VerificationReport;

/// Blocks per worker; more blocks even out the longer words at the end of
/// the rank space.
const BLOCKS_PER_WORKER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// 1 runs everything on the calling thread.
    pub workers: usize,
    pub stop_at_first: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { workers: 1, stop_at_first: false }
    }
}

pub fn run_property<P: PairProperty + Sync>(
    property: &P,
    spec: &EnumerationSpec,
    options: &RunOptions,
) -> quasicover_core::Result<VerificationReport> {
    spec.validate()?;
    let started = Instant::now();
    let block_options = BlockOptions { stop_at_first: options.stop_at_first };
    let workers = options.workers.max(1);

    let tally = if workers == 1 {
        quasicover_core::verify::run(property, spec, block_options)?
    } else {
        let blocks = spec.partition(workers * BLOCKS_PER_WORKER);
        let next = AtomicUsize::new(0);
        let found = AtomicBool::new(false);
        let results: Mutex<Vec<(usize, Tally)>> = Mutex::new(Vec::with_capacity(blocks.len()));
        let cancelled = || options.stop_at_first && found.load(Ordering::Relaxed);

        std::thread::scope(|scope| {
            for _ in 0..workers.min(blocks.len()) {
                scope.spawn(|| loop {
                    let index = next.fetch_add(1, Ordering::Relaxed);
                    let Some(range) = blocks.get(index) else { break };
                    if cancelled() {
                        break;
                    }
                    let tally =
                        quasicover_core::verify::run_block(property, spec, range.clone(), block_options, &cancelled);
                    if !tally.passed() {
                        found.store(true, Ordering::Relaxed);
                    }
                    results.lock().unwrap().push((index, tally));
                });
            }
        });

        let mut results = results.into_inner().unwrap();
        results.sort_by_key(|(index, _)| *index);
        let mut merged = results.into_iter().fold(Tally::default(), |acc, (_, t)| acc.merge(t));
        if options.stop_at_first {
            merged.counterexamples.truncate(1);
        }
        merged
    };

    Ok(VerificationReport::new(*spec, property.name(), tally, started.elapsed()))
}

/// Runs a named property.
pub fn verify(
    property: Property,
    spec: &EnumerationSpec,
    options: &RunOptions,
) -> quasicover_core::Result<VerificationReport> {
    match property {
        Property::FactPeriodic => run_property(&FactPeriodic, spec, options),
        Property::LemmaSeed => run_property(&LemmaNotSeed, spec, options),
        Property::LemmaCoverSeed => run_property(&LemmaCoverSeed, spec, options),
        Property::TheoremQuasi => run_property(&TheoremQuasi, spec, options),
    }
}

/// At most one word of each Hamming-1 pair is periodic.
pub fn check_fact_periodic(spec: &EnumerationSpec, options: &RunOptions) -> quasicover_core::Result<VerificationReport> {
    verify(Property::FactPeriodic, spec, options)
}

/// Neither word of a Hamming-1 pair is a seed of the other.
pub fn check_lemma_not_seed(spec: &EnumerationSpec, options: &RunOptions) -> quasicover_core::Result<VerificationReport> {
    verify(Property::LemmaSeed, spec, options)
}

/// No cover of `w` is a seed of a Hamming-1 neighbour `w'`.
pub fn check_lemma_cover_seed(spec: &EnumerationSpec, options: &RunOptions) -> quasicover_core::Result<VerificationReport> {
    verify(Property::LemmaCoverSeed, spec, options)
}

/// At most one word of each Hamming-1 pair is quasiperiodic.
pub fn check_theorem_quasi(spec: &EnumerationSpec, options: &RunOptions) -> quasicover_core::Result<VerificationReport> {
    verify(Property::TheoremQuasi, spec, options)
}
