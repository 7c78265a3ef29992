//! Seeds and left seeds.
//!
//! `s` is a seed of `w` when `|s| <= |w|` and `w` is a factor of some word
//! `u` that `s` covers. Two independent procedures decide it:
//!
//! * [`is_seed`] works on `w` alone. Occurrences of `s` inside `w` give
//!   intervals; occurrences of `s` in `u` that hang off either end of `w`
//!   contribute a left interval `[1, tL]` and a right interval
//!   `[n - tR + 1, n]`. Longer overhangs cover more, so only the longest
//!   valid ones are used.
//! * [`is_seed_oracle`] builds candidate superstrings
//!   `u = s[1..d] · w · s[|s|-e+1..|s|]` and tests `is_cover(s, u)`.

use alloc::vec::Vec;

use crate::border::Matcher;
use crate::cover::{cover_intervals, is_cover, spans, Interval, IntervalKind};
use crate::error::{Error, Result};
use crate::word::Word;

/// The intervals behind an [`is_seed`] decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedCoverage {
    /// Sorted by start: left overhang, occurrences, right overhang.
    pub intervals: Vec<Interval>,
    /// Longest proper suffix of `s` that is a prefix of `w`.
    pub left_overhang: usize,
    /// Longest proper prefix of `s` that is a suffix of `w`.
    pub right_overhang: usize,
    pub is_seed: bool,
}

fn check_pattern(s: &Word, w: &Word) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if s.len() > w.len() {
        return Err(Error::PatternTooLong { pattern: s.len(), text: w.len() });
    }
    Ok(())
}

pub fn seed_coverage(s: &Word, w: &Word) -> Result<SeedCoverage> {
    check_pattern(s, w)?;
    let (m, n) = (s.len(), w.len());

    let by_w = Matcher::new(w.letters());
    let mut left = by_w.final_state(s.letters());
    if left == m {
        // s is a prefix of w; step down to the longest proper candidate
        left = by_w.failure()[m - 1];
    }

    let by_s = Matcher::new(s.letters());
    let mut right = by_s.final_state(w.letters());
    if right == m {
        right = by_s.failure()[m - 1];
    }

    let mut intervals = Vec::new();
    if left > 0 {
        intervals.push(Interval { start: 1, end: left, kind: IntervalKind::LeftOverhang });
    }
    intervals.extend(cover_intervals(s, w)?);
    if right > 0 {
        intervals.push(Interval { start: n - right + 1, end: n, kind: IntervalKind::RightOverhang });
    }
    let is_seed = spans(&intervals, n);
    Ok(SeedCoverage { intervals, left_overhang: left, right_overhang: right, is_seed })
}

pub fn is_seed(s: &Word, w: &Word) -> Result<bool> {
    Ok(seed_coverage(s, w)?.is_seed)
}

pub fn is_left_seed(s: &Word, w: &Word) -> Result<bool> {
    check_pattern(s, w)?;
    Ok(w.letters().starts_with(s.letters()) && is_seed(s, w)?)
}

/// A superstring proving that `s` is a seed of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedWitness {
    /// `s[1..d] · w · s[|s|-e+1..|s|]`, covered by `s`.
    pub superstring: Word,
    /// `d`: letters of `s` prepended to `w`.
    pub left_trim: usize,
    /// `e`: letters of `s` appended to `w`.
    pub right_trim: usize,
}

impl SeedWitness {
    /// Checks the witness against the pair it claims to prove.
    pub fn verify(&self, s: &Word, w: &Word) -> bool {
        let (m, d, e) = (s.len(), self.left_trim, self.right_trim);
        if m == 0 || d >= m || e >= m {
            return false;
        }
        let expected = s.prefix(d).concat(w).concat(&s.suffix(e));
        let u = &self.superstring;
        expected == *u
            && u.letters()[d..d + w.len()] == *w.letters()
            && is_cover(s, u).unwrap_or(false)
    }
}

/// Searches every `(d, e)` in `[0, |s| - 1]^2`, `d` first, and returns the
/// first superstring that `s` covers.
///
/// Any covered `u` containing `w` can be cut down to run from its first to
/// its last occurrence of `s`, so it starts and ends with `s` and overhangs
/// `w` by less than `|s|` on each side; the search is therefore complete.
/// A covered word must start and end with `s`, which is tested first.
pub fn is_seed_oracle(s: &Word, w: &Word) -> Result<Option<SeedWitness>> {
    check_pattern(s, w)?;
    let (m, n) = (s.len(), w.len());
    let (sl, wl) = (s.letters(), w.letters());
    for d in 0..m {
        if sl[d..] != wl[..m - d] {
            continue;
        }
        for e in 0..m {
            if sl[..m - e] != wl[n - (m - e)..] {
                continue;
            }
            let u = s.prefix(d).concat(w).concat(&s.suffix(e));
            if is_cover(s, &u)? {
                return Ok(Some(SeedWitness { superstring: u, left_trim: d, right_trim: e }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const SEEDED: &str = "abaabaaaabaaabaaa";

    #[test]
    fn seeds() {
        assert!(is_seed(&w("aabaa"), &w(SEEDED)).unwrap());
        assert!(is_seed(&w(SEEDED), &w(SEEDED)).unwrap());
        assert!(!is_seed(&w("ab"), &w("aab")).unwrap());
        assert_eq!(is_seed(&w("aaa"), &w("aa")), Err(Error::PatternTooLong { pattern: 3, text: 2 }));
        assert_eq!(is_seed(&Word::default(), &w("aa")), Err(Error::EmptyPattern));
    }

    #[test]
    fn seeded_coverage_intervals() {
        let cov = seed_coverage(&w("aabaa"), &w(SEEDED)).unwrap();
        assert_eq!(cov.left_overhang, 4);
        assert_eq!(cov.right_overhang, 2);
        let spans: Vec<(usize, usize)> = cov.intervals.iter().map(|iv| (iv.start, iv.end)).collect();
        assert_eq!(spans, vec![(1, 4), (3, 7), (8, 12), (12, 16), (16, 17)]);
    }

    #[test]
    fn equal_length_uses_overhangs_only() {
        // "ab" vs "ba": no occurrence, but "b" + "a" hang off both ends
        let cov = seed_coverage(&w("ab"), &w("ba")).unwrap();
        assert_eq!(cov.intervals.len(), 2);
        assert!(cov.is_seed);
    }

    #[test]
    fn oracle_witnesses() {
        let witness = is_seed_oracle(&w("aabaa"), &w(SEEDED)).unwrap().unwrap();
        assert_eq!((witness.left_trim, witness.right_trim), (1, 3));
        assert_eq!(witness.superstring, w("aabaabaaaabaaabaaabaa"));
        assert!(witness.verify(&w("aabaa"), &w(SEEDED)));

        let same = is_seed_oracle(&w("abaab"), &w("abaab")).unwrap().unwrap();
        assert_eq!((same.left_trim, same.right_trim), (0, 0));
        assert_eq!(same.superstring, w("abaab"));

        assert_eq!(is_seed_oracle(&w("ab"), &w("aab")).unwrap(), None);
    }

    #[test]
    fn witness_verification_rejects_tampering() {
        let mut witness = is_seed_oracle(&w("aabaa"), &w(SEEDED)).unwrap().unwrap();
        witness.right_trim = 2;
        assert!(!witness.verify(&w("aabaa"), &w(SEEDED)));
    }

    #[test]
    fn left_seeds() {
        assert!(is_left_seed(&w("aabaa"), &w("aabaabaaaabaaabaa")).unwrap());
        assert!(is_left_seed(&w("ab"), &w("ab")).unwrap());
        assert!(!is_left_seed(&w("aabaa"), &w(SEEDED)).unwrap());
    }
}
