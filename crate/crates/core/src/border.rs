//! Borders, periods, occurrences and overlaps.
//!
//! Everything here is driven by the classic failure table: `b[i]` is the
//! length of the longest proper border of the prefix of length `i`. A word
//! of length `n` has period `p` exactly when it has a border of length
//! `n - p`, so the period list is read off the iterated border chain.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::Word;

/// Longest proper border of every prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderArray(Vec<usize>);

impl BorderArray {
    /// Border of the prefix of length `i` (1-based, `1..=n`).
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Values in prefix-length order: index 0 is the prefix of length 1.
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Iterated borders of the prefix of length `i`, longest first, ending
    /// with the empty border 0. The prefix itself is not included.
    pub fn chain(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let mut next = if i == 0 { None } else { Some(self.get(i)) };
        core::iter::from_fn(move || {
            let current = next?;
            next = if current == 0 { None } else { Some(self.get(current)) };
            Some(current)
        })
    }
}

pub(crate) fn failure_table(letters: &[u8]) -> Vec<usize> {
    let mut table = alloc::vec![0; letters.len()];
    let mut k = 0;
    for i in 1..letters.len() {
        while k > 0 && letters[k] != letters[i] {
            k = table[k - 1];
        }
        if letters[k] == letters[i] {
            k += 1;
        }
        table[i] = k;
    }
    table
}

pub fn border_array(w: &Word) -> BorderArray {
    BorderArray(failure_table(w.letters()))
}

fn require_nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::TooShort { len: 0, min: 1 })
    } else {
        Ok(())
    }
}

/// All periods of `w` in ascending order, `n` included.
pub fn periods(w: &Word) -> Result<Vec<usize>> {
    require_nonempty(w)?;
    let n = w.len();
    let borders = border_array(w);
    Ok(borders.chain(n).map(|b| n - b).collect())
}

/// Smallest period of a nonempty word.
pub(crate) fn shortest_period(w: &Word) -> Result<usize> {
    require_nonempty(w)?;
    let n = w.len();
    Ok(n - border_array(w).get(n))
}

/// Whether `w` has a period `p` with `2p <= n`.
pub fn is_periodic(w: &Word) -> Result<bool> {
    Ok(2 * shortest_period(w)? <= w.len())
}

/// Knuth-Morris-Pratt automaton for a fixed nonempty pattern.
pub(crate) struct Matcher<'a> {
    pattern: &'a [u8],
    failure: Vec<usize>,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(pattern: &'a [u8]) -> Self {
        debug_assert!(!pattern.is_empty());
        Matcher { pattern, failure: failure_table(pattern) }
    }

    pub(crate) fn failure(&self) -> &[usize] {
        &self.failure
    }

    fn step(&self, mut state: usize, letter: u8) -> usize {
        if state == self.pattern.len() {
            state = self.failure[state - 1];
        }
        while state > 0 && self.pattern[state] != letter {
            state = self.failure[state - 1];
        }
        if self.pattern[state] == letter {
            state += 1;
        }
        state
    }

    /// 1-based start positions of every occurrence in `text`.
    pub(crate) fn find_all(&self, text: &[u8]) -> Vec<usize> {
        let m = self.pattern.len();
        let mut found = Vec::new();
        let mut state = 0;
        for (i, &letter) in text.iter().enumerate() {
            state = self.step(state, letter);
            if state == m {
                found.push(i + 2 - m);
            }
        }
        found
    }

    /// Length of the longest suffix of `text` that is a prefix of the pattern.
    pub(crate) fn final_state(&self, text: &[u8]) -> usize {
        text.iter().fold(0, |state, &letter| self.step(state, letter))
    }
}

/// 1-based start positions of `pattern` in `text`, in ascending order.
pub fn occurrences(pattern: &Word, text: &Word) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if pattern.len() > text.len() {
        return Ok(Vec::new());
    }
    Ok(Matcher::new(pattern.letters()).find_all(text.letters()))
}

/// Longest overlaps between two words of equal length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OverlapPair {
    /// Longest suffix of `w'` that is a prefix of `w`.
    pub alpha: usize,
    /// Longest prefix of `w'` that is a suffix of `w`.
    pub beta: usize,
}

/// Overlap lengths between `w_prime` and `w`; a full overlap (`n`) is
/// allowed and happens exactly when the words are equal.
pub fn overlaps(w_prime: &Word, w: &Word) -> Result<OverlapPair> {
    if w.len() != w_prime.len() {
        return Err(Error::LengthMismatch { left: w_prime.len(), right: w.len() });
    }
    require_nonempty(w)?;
    let alpha = Matcher::new(w.letters()).final_state(w_prime.letters());
    let beta = Matcher::new(w_prime.letters()).final_state(w.letters());
    Ok(OverlapPair { alpha, beta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn border_arrays() {
        assert_eq!(border_array(&w("abaab")).as_slice(), &[0, 0, 1, 1, 2]);
        assert_eq!(border_array(&w("aaaa")).as_slice(), &[0, 1, 2, 3]);
        assert_eq!(border_array(&w("abc")).as_slice(), &[0, 0, 0]);
        assert!(border_array(&Word::default()).is_empty());
    }

    #[test]
    fn border_chain_ends_at_zero() {
        let b = border_array(&w("abaababaab"));
        assert_eq!(b.chain(10).collect::<Vec<_>>(), vec![5, 2, 0]);
        assert_eq!(b.chain(0).count(), 0);
    }

    #[test]
    fn period_lists() {
        assert_eq!(periods(&w("abaab")).unwrap(), vec![3, 5]);
        assert_eq!(periods(&w("aaaa")).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(periods(&w("ab")).unwrap(), vec![2]);
        assert_eq!(periods(&Word::default()), Err(Error::TooShort { len: 0, min: 1 }));
    }

    #[test]
    fn periodicity() {
        assert!(is_periodic(&w("abab")).unwrap());
        assert!(!is_periodic(&w("abaab")).unwrap());
        assert!(is_periodic(&w("aaaa")).unwrap());
        assert!(!is_periodic(&w("a")).unwrap());
        assert!(is_periodic(&Word::default()).is_err());
    }

    #[test]
    fn occurrence_lists() {
        assert_eq!(occurrences(&w("aabaa"), &w("aabaabaaaabaaabaa")).unwrap(), vec![1, 4, 9, 13]);
        assert_eq!(occurrences(&w("a"), &w("aaa")).unwrap(), vec![1, 2, 3]);
        assert!(occurrences(&w("ba"), &w("aaa")).unwrap().is_empty());
        assert!(occurrences(&w("aaaa"), &w("aaa")).unwrap().is_empty());
        assert_eq!(occurrences(&Word::default(), &w("aaa")), Err(Error::EmptyPattern));
    }

    #[test]
    fn overlap_lengths() {
        let wp = w("abaababaababbababba");
        let ww = w("abaababbababbababba");
        assert_eq!(overlaps(&wp, &ww).unwrap().alpha, 14);
        assert_eq!(overlaps(&ww, &ww).unwrap(), OverlapPair { alpha: 19, beta: 19 });
        assert_eq!(overlaps(&w("ab"), &w("ba")).unwrap(), OverlapPair { alpha: 1, beta: 1 });
        assert!(overlaps(&w("ab"), &w("b")).is_err());
        assert!(overlaps(&Word::default(), &Word::default()).is_err());
    }
}
