#![cfg_attr(not(test), no_std)]

//! Combinatorics of string covers.
//!
//! Words are sequences of small integer letters (`0..sigma`). All positions in
//! the public API are 1-based: `occurrences` returns start positions counted
//! from 1, mismatch indices are 1-based, and so on. The crate needs only
//! `alloc`; threading, timing and text formats live in the `quasicover` crate.

extern crate alloc;

mod error;

pub mod almost;
pub mod border;
pub mod cover;
pub mod seed;
pub mod verify;
pub mod word;

pub use almost::{almost_borders, almost_periods, AlmostBorder, AlmostPeriod};
pub use border::{
    border_array, is_periodic, occurrences, overlaps, periods, BorderArray, OverlapPair,
};
pub use cover::{
    all_cover_lengths, cover_array, cover_intervals, is_cover, is_quasiperiodic, shortest_cover,
    CoverArray, CoverArrayBuilder, Interval, IntervalKind,
};
pub use error::{Error, Result};
pub use seed::{is_left_seed, is_seed, is_seed_oracle, seed_coverage, SeedCoverage, SeedWitness};
pub use word::{cyclic_shift, is_cyclic_shift, mismatch_positions, MismatchPair, Word};
