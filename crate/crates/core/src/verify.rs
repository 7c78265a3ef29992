//! Exhaustive verification over small alphabets.
//!
//! Words of each length in `n_min..=n_max` are ranked in lexicographic order,
//! shorter lengths first; the global rank is the position in that stream
//! before canonical filtering. Every enumerated word `w` is paired with all
//! `n (sigma - 1)` words at Hamming distance 1 and a [`PairProperty`] is
//! checked on each pair. Rank ranges can be processed independently and
//! their [`Tally`]s merged in any grouping; the merged result does not
//! depend on how the ranges were split.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::border::shortest_period;
use crate::cover::{all_cover_lengths, cover_array, is_quasiperiodic};
use crate::error::{Error, Result};
use crate::seed::is_seed;
use crate::word::{mismatch_positions, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumerationSpec {
    pub sigma: u8,
    pub n_min: usize,
    pub n_max: usize,
    /// Only words whose letters first appear in increasing order.
    pub canonical: bool,
}

impl EnumerationSpec {
    pub fn new(sigma: u8, n_min: usize, n_max: usize, canonical: bool) -> Result<Self> {
        let spec = EnumerationSpec { sigma, n_min, n_max, canonical };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sigma < 2 {
            return Err(Error::InvalidSpec("sigma must be at least 2"));
        }
        if self.n_min < 1 {
            return Err(Error::InvalidSpec("n_min must be at least 1"));
        }
        if self.n_max < self.n_min {
            return Err(Error::InvalidSpec("n_max must not be below n_min"));
        }
        if self.checked_total_ranks().is_none() {
            return Err(Error::InvalidSpec("word space does not fit in 64 bits"));
        }
        Ok(())
    }

    fn words_of_length(&self, n: usize) -> Option<u64> {
        u64::from(self.sigma).checked_pow(u32::try_from(n).ok()?)
    }

    fn checked_total_ranks(&self) -> Option<u64> {
        (self.n_min..=self.n_max).try_fold(0u64, |acc, n| acc.checked_add(self.words_of_length(n)?))
    }

    /// Size of the rank space, before canonical filtering.
    pub fn total_ranks(&self) -> u64 {
        self.checked_total_ranks().expect("validated spec")
    }

    /// Number of words the enumeration yields of length `n`, counted
    /// analytically: `sigma^n`, or in canonical mode the number of set
    /// partitions of `n` positions into at most `sigma` blocks.
    pub fn word_count_of_length(&self, n: usize) -> u64 {
        if !self.canonical {
            return self.words_of_length(n).expect("validated spec");
        }
        let k_max = usize::from(self.sigma).min(n);
        // stirling[k] = S(i, k), second kind
        let mut stirling = alloc::vec![0u64; k_max + 1];
        stirling[0] = 1;
        for i in 1..=n {
            for k in (1..=k_max.min(i)).rev() {
                stirling[k] = (k as u64) * stirling[k] + stirling[k - 1];
            }
            stirling[0] = 0;
        }
        stirling[1..].iter().sum()
    }

    pub fn expected_words(&self) -> u64 {
        (self.n_min..=self.n_max).map(|n| self.word_count_of_length(n)).sum()
    }

    /// `sum over enumerated w of n (sigma - 1)`.
    pub fn expected_pairs(&self) -> u64 {
        (self.n_min..=self.n_max)
            .map(|n| self.word_count_of_length(n) * n as u64 * u64::from(self.sigma - 1))
            .sum()
    }

    /// Splits the rank space into at most `parts` contiguous, disjoint,
    /// nonempty ranges in rank order.
    pub fn partition(&self, parts: usize) -> Vec<Range<u64>> {
        let total = self.total_ranks();
        let parts = (parts.max(1) as u64).min(total.max(1));
        let (base, extra) = (total / parts, total % parts);
        let mut start = 0;
        (0..parts)
            .map(|k| {
                let len = base + u64::from(k < extra);
                let range = start..start + len;
                start += len;
                range
            })
            .filter(|r| !r.is_empty())
            .collect()
    }

    /// The word at a global rank, canonical or not.
    pub fn decode(&self, mut rank: u64) -> Word {
        for n in self.n_min..=self.n_max {
            let count = self.words_of_length(n).expect("validated spec");
            if rank < count {
                let sigma = u64::from(self.sigma);
                let mut letters = alloc::vec![0u8; n];
                for slot in letters.iter_mut().rev() {
                    *slot = (rank % sigma) as u8;
                    rank /= sigma;
                }
                return Word::from_letters(letters);
            }
            rank -= count;
        }
        panic!("rank outside the enumeration");
    }

    /// Words with global rank in `ranks`, paired with their rank.
    pub fn words_in(&self, ranks: Range<u64>) -> RankedWords {
        let end = ranks.end.min(self.total_ranks());
        let current = (ranks.start < end).then(|| self.decode(ranks.start).into_letters());
        RankedWords { spec: *self, rank: ranks.start, end, current }
    }
}

/// Iterator behind [`enumerate_words`] and [`EnumerationSpec::words_in`].
#[derive(Clone, Debug)]
pub struct RankedWords {
    spec: EnumerationSpec,
    rank: u64,
    end: u64,
    current: Option<Vec<u8>>,
}

impl RankedWords {
    fn advance(&mut self) {
        self.rank += 1;
        let Some(letters) = self.current.as_mut() else { return };
        if self.rank >= self.end {
            self.current = None;
            return;
        }
        for slot in letters.iter_mut().rev() {
            *slot += 1;
            if *slot < self.spec.sigma {
                return;
            }
            *slot = 0;
        }
        // odometer wrapped: next length starts at all zeros
        letters.push(0);
        letters.iter_mut().for_each(|l| *l = 0);
    }
}

impl Iterator for RankedWords {
    type Item = (u64, Word);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let letters = self.current.as_ref()?;
            let rank = self.rank;
            let word = Word::from_letters(letters.clone());
            self.advance();
            if !self.spec.canonical || word.is_canonical() {
                return Some((rank, word));
            }
        }
    }
}

/// Every word of the spec in lexicographic order, shorter lengths first.
pub fn enumerate_words(spec: &EnumerationSpec) -> Result<impl Iterator<Item = Word>> {
    spec.validate()?;
    Ok(spec.words_in(0..spec.total_ranks()).map(|(_, w)| w))
}

/// All `(w', j)` with `w =_j w'`, by position and then by letter.
pub fn hamming1_neighbors(w: &Word, sigma: u8) -> impl Iterator<Item = (Word, usize)> + '_ {
    (0..w.len()).flat_map(move |i| {
        let original = w.letters()[i];
        (0..sigma).filter(move |&l| l != original).map(move |l| {
            let mut letters = w.letters().to_vec();
            letters[i] = l;
            (Word::from_letters(letters), i + 1)
        })
    })
}

/// A statement about pairs `w =_j w'` that should never fail.
pub trait PairProperty {
    /// Whatever depends on `w` alone, computed once per word.
    type WordFacts;

    fn name(&self) -> &'static str;

    fn facts(&self, w: &Word) -> Self::WordFacts;

    /// `Some(diagnostics)` when the pair violates the statement.
    fn check(&self, facts: &Self::WordFacts, w: &Word, w_prime: &Word, j: usize) -> Option<String>;
}

/// At most one of two words at Hamming distance 1 is periodic.
#[derive(Clone, Copy, Debug, Default)]
pub struct FactPeriodic;

impl PairProperty for FactPeriodic {
    type WordFacts = usize;

    fn name(&self) -> &'static str {
        Property::FactPeriodic.name()
    }

    fn facts(&self, w: &Word) -> usize {
        shortest_period(w).expect("enumerated words are nonempty")
    }

    fn check(&self, &period: &usize, w: &Word, w_prime: &Word, _j: usize) -> Option<String> {
        let n = w.len();
        if 2 * period > n {
            return None;
        }
        let other = shortest_period(w_prime).expect("nonempty");
        (2 * other <= n).then(|| format!("w has period {period}, w' has period {other}"))
    }
}

/// Neither word of a pair at Hamming distance 1 is a seed of the other.
#[derive(Clone, Copy, Debug, Default)]
pub struct LemmaNotSeed;

impl PairProperty for LemmaNotSeed {
    type WordFacts = ();

    fn name(&self) -> &'static str {
        Property::LemmaSeed.name()
    }

    fn facts(&self, _w: &Word) {}

    fn check(&self, _: &(), w: &Word, w_prime: &Word, _j: usize) -> Option<String> {
        let forward = is_seed(w, w_prime).expect("equal lengths");
        let backward = is_seed(w_prime, w).expect("equal lengths");
        match (forward, backward) {
            (false, false) => None,
            (true, false) => Some("w is a seed of w'".into()),
            (false, true) => Some("w' is a seed of w".into()),
            (true, true) => Some("w and w' are seeds of each other".into()),
        }
    }
}

/// No cover of `w` is a seed of `w'`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LemmaCoverSeed;

impl PairProperty for LemmaCoverSeed {
    /// Every cover of `w`, proper ones first, then `w` itself.
    type WordFacts = Vec<Word>;

    fn name(&self) -> &'static str {
        Property::LemmaCoverSeed.name()
    }

    fn facts(&self, w: &Word) -> Vec<Word> {
        let mut covers: Vec<Word> = all_cover_lengths(w)
            .expect("nonempty")
            .into_iter()
            .map(|len| w.prefix(len))
            .collect();
        covers.push(w.clone());
        covers
    }

    fn check(&self, covers: &Vec<Word>, _w: &Word, w_prime: &Word, _j: usize) -> Option<String> {
        covers
            .iter()
            .find(|c| is_seed(c, w_prime).expect("cover fits"))
            .map(|c| format!("{c} covers w and is a seed of w'"))
    }
}

/// At most one of two words at Hamming distance 1 is quasiperiodic.
#[derive(Clone, Copy, Debug, Default)]
pub struct TheoremQuasi;

impl PairProperty for TheoremQuasi {
    /// Shortest cover length of `w`.
    type WordFacts = usize;

    fn name(&self) -> &'static str {
        Property::TheoremQuasi.name()
    }

    fn facts(&self, w: &Word) -> usize {
        cover_array(w).last().expect("nonempty")
    }

    fn check(&self, &cover: &usize, w: &Word, w_prime: &Word, _j: usize) -> Option<String> {
        let n = w.len();
        if cover == n {
            return None;
        }
        let other = cover_array(w_prime).last().expect("nonempty");
        (other < n).then(|| {
            format!("w has cover {}, w' has cover {}", w.prefix(cover), w_prime.prefix(other))
        })
    }
}

/// The statements the verifier knows by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    FactPeriodic,
    LemmaSeed,
    LemmaCoverSeed,
    TheoremQuasi,
}

impl Property {
    pub const ALL: [Property; 4] =
        [Property::FactPeriodic, Property::LemmaSeed, Property::LemmaCoverSeed, Property::TheoremQuasi];

    pub fn name(self) -> &'static str {
        match self {
            Property::FactPeriodic => "fact-periodic",
            Property::LemmaSeed => "lemma-seed",
            Property::LemmaCoverSeed => "lemma-cover-seed",
            Property::TheoremQuasi => "theorem-quasi",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or(Error::InvalidSpec("unknown property"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Global enumeration rank of `w`.
    pub rank: u64,
    pub w: Word,
    pub w_prime: Word,
    pub j: usize,
    pub diagnostics: String,
}

/// Counts and violations of one or more rank ranges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub words_tested: u64,
    pub pairs_tested: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Tally {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Sums counts and keeps counterexamples in enumeration order.
    pub fn merge(mut self, other: Tally) -> Tally {
        self.words_tested += other.words_tested;
        self.pairs_tested += other.pairs_tested;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples
            .sort_by(|a, b| (a.rank, a.j, &a.w_prime).cmp(&(b.rank, b.j, &b.w_prime)));
        self
    }
}

/// Options for [`run_block`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BlockOptions {
    /// Return as soon as one counterexample is found.
    pub stop_at_first: bool,
}

/// Checks `property` on every pair whose `w` has a rank in `ranks`.
///
/// `cancelled` is polled once per word; when it returns true the block
/// stops early with what it has.
pub fn run_block<P: PairProperty>(
    property: &P,
    spec: &EnumerationSpec,
    ranks: Range<u64>,
    options: BlockOptions,
    cancelled: &dyn Fn() -> bool,
) -> Tally {
    let mut tally = Tally::default();
    for (rank, w) in spec.words_in(ranks) {
        if cancelled() {
            break;
        }
        tally.words_tested += 1;
        let facts = property.facts(&w);
        for (w_prime, j) in hamming1_neighbors(&w, spec.sigma) {
            tally.pairs_tested += 1;
            if let Some(diagnostics) = property.check(&facts, &w, &w_prime, j) {
                tally.counterexamples.push(Counterexample {
                    rank,
                    w: w.clone(),
                    w_prime,
                    j,
                    diagnostics,
                });
                if options.stop_at_first {
                    return tally;
                }
            }
        }
    }
    tally
}

/// Single-threaded run over the whole spec.
pub fn run<P: PairProperty>(property: &P, spec: &EnumerationSpec, options: BlockOptions) -> Result<Tally> {
    spec.validate()?;
    Ok(run_block(property, spec, 0..spec.total_ranks(), options, &|| false))
}

/// The two-mismatch construction `a^{n/2-1} b a^{n/2-1} b` against `a^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tightness {
    pub w: Word,
    pub w_prime: Word,
    pub mismatches: Vec<usize>,
    pub w_quasiperiodic: bool,
    pub w_prime_quasiperiodic: bool,
}

impl Tightness {
    pub fn both_quasiperiodic(&self) -> bool {
        self.w_quasiperiodic && self.w_prime_quasiperiodic
    }
}

/// Builds and checks the pair for an even `n >= 2`. Quasiperiodicity is
/// computed per word, not assumed.
pub fn tightness_search(n: usize) -> Result<Tightness> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::OddLength(n));
    }
    let half = Word::repeat(0, n / 2 - 1).concat(&Word::from_letters([1u8]));
    let w = half.concat(&half);
    let w_prime = Word::repeat(0, n);
    let mismatches = mismatch_positions(&w, &w_prime)?;
    Ok(Tightness {
        w_quasiperiodic: is_quasiperiodic(&w)?,
        w_prime_quasiperiodic: is_quasiperiodic(&w_prime)?,
        w,
        w_prime,
        mismatches,
    })
}
