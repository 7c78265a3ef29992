//! Covers and the online cover array.

use alloc::vec::Vec;

use crate::border::{border_array, Matcher};
use crate::error::{Error, Result};
use crate::word::Word;

/// Where an interval of a coverage decision comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    /// A full occurrence inside the word.
    Occurrence,
    /// A suffix of the pattern sitting at the start of the word.
    LeftOverhang,
    /// A prefix of the pattern sitting at the end of the word.
    RightOverhang,
}

/// A 1-based closed interval `[start, end]` of word positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
    pub kind: IntervalKind,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Whether intervals sorted by start cover every position of `[1, n]`.
pub(crate) fn spans(intervals: &[Interval], n: usize) -> bool {
    let mut reach = 0;
    for iv in intervals {
        if iv.start > reach + 1 {
            return false;
        }
        reach = reach.max(iv.end);
    }
    reach >= n
}

fn check_pattern(c: &Word, w: &Word) -> Result<()> {
    if c.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if c.len() > w.len() {
        return Err(Error::PatternTooLong { pattern: c.len(), text: w.len() });
    }
    Ok(())
}

/// Occurrence intervals of `c` in `w`, the ones `is_cover` decides on.
pub fn cover_intervals(c: &Word, w: &Word) -> Result<Vec<Interval>> {
    check_pattern(c, w)?;
    let m = c.len();
    Ok(Matcher::new(c.letters())
        .find_all(w.letters())
        .into_iter()
        .map(|start| Interval { start, end: start + m - 1, kind: IntervalKind::Occurrence })
        .collect())
}

/// Whether every position of `w` lies inside an occurrence of `c`.
pub fn is_cover(c: &Word, w: &Word) -> Result<bool> {
    Ok(spans(&cover_intervals(c, w)?, w.len()))
}

/// Length of the shortest cover of each prefix; `cv[i] = i` when the prefix
/// of length `i` has no proper cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverArray(Vec<usize>);

impl CoverArray {
    /// Shortest cover length of the prefix of length `i` (1-based).
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

/// Builds the cover array one letter at a time.
///
/// Each prefix keeps its border and shortest cover length. For every length
/// `k` that is its own shortest cover, `reach[k]` is the longest prefix seen
/// so far that `k` covers. A new prefix of length `i` with border `b > 0`
/// takes `c = cv[b]` as shortest cover iff `c` already covers up to
/// `i - c`, so that the occurrence ending at `i` joins on. Work per letter is
/// amortised constant.
#[derive(Clone, Debug, Default)]
pub struct CoverArrayBuilder {
    letters: Vec<u8>,
    border: Vec<usize>,
    cover: Vec<usize>,
    reach: Vec<usize>,
}

impl CoverArrayBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        CoverArrayBuilder {
            letters: Vec::with_capacity(n),
            border: Vec::with_capacity(n),
            cover: Vec::with_capacity(n),
            reach: Vec::with_capacity(n),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a letter and returns the shortest cover length of the new prefix.
    pub fn push(&mut self, letter: u8) -> usize {
        let prev = self.letters.len();
        self.letters.push(letter);
        let i = prev + 1;

        let border = if prev == 0 {
            0
        } else {
            let mut k = self.border[prev - 1];
            while k > 0 && self.letters[k] != letter {
                k = self.border[k - 1];
            }
            if self.letters[k] == letter {
                k + 1
            } else {
                0
            }
        };
        self.border.push(border);
        self.reach.push(i);

        let mut cover = i;
        if border > 0 {
            let candidate = self.cover[border - 1];
            if self.reach[candidate - 1] >= i - candidate {
                cover = candidate;
                self.reach[candidate - 1] = i;
            }
        }
        self.cover.push(cover);
        cover
    }

    pub fn extend_from_slice(&mut self, letters: &[u8]) {
        for &l in letters {
            self.push(l);
        }
    }

    pub fn cover_array(&self) -> CoverArray {
        CoverArray(self.cover.clone())
    }

    pub fn finish(self) -> CoverArray {
        CoverArray(self.cover)
    }
}

pub fn cover_array(w: &Word) -> CoverArray {
    let mut builder = CoverArrayBuilder::with_capacity(w.len());
    builder.extend_from_slice(w.letters());
    builder.finish()
}

fn require_nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::TooShort { len: 0, min: 1 })
    } else {
        Ok(())
    }
}

/// Shortest cover of `w`; `w` itself when it has no proper cover.
pub fn shortest_cover(w: &Word) -> Result<Word> {
    require_nonempty(w)?;
    let cv = cover_array(w);
    Ok(w.prefix(cv.get(w.len())))
}

/// Lengths of all proper covers of `w`, ascending.
///
/// A cover is always a border, so the candidates are the border chain.
pub fn all_cover_lengths(w: &Word) -> Result<Vec<usize>> {
    require_nonempty(w)?;
    let n = w.len();
    let borders = border_array(w);
    let mut lengths = Vec::new();
    for b in borders.chain(n).filter(|&b| b > 0) {
        if is_cover(&w.prefix(b), w)? {
            lengths.push(b);
        }
    }
    lengths.reverse();
    Ok(lengths)
}

pub fn is_quasiperiodic(w: &Word) -> Result<bool> {
    require_nonempty(w)?;
    Ok(cover_array(w).get(w.len()) < w.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const COVERED: &str = "aabaabaaaabaaabaa";

    #[test]
    fn cover_membership() {
        assert!(is_cover(&w("aabaa"), &w(COVERED)).unwrap());
        assert!(is_cover(&w(COVERED), &w(COVERED)).unwrap());
        assert!(!is_cover(&w("aab"), &w(COVERED)).unwrap());
        assert_eq!(is_cover(&Word::default(), &w("a")), Err(Error::EmptyPattern));
        assert_eq!(
            is_cover(&w("aa"), &w("a")),
            Err(Error::PatternTooLong { pattern: 2, text: 1 })
        );
    }

    #[test]
    fn uncovered_positions_of_aab() {
        let intervals = cover_intervals(&w("aab"), &w(COVERED)).unwrap();
        let mut covered = [false; 18];
        for iv in &intervals {
            for p in iv.start..=iv.end {
                covered[p] = true;
            }
        }
        let gaps: Vec<usize> = (1..=17).filter(|&p| !covered[p]).collect();
        assert_eq!(gaps, vec![7, 8, 12, 16, 17]);
    }

    #[test]
    fn cover_arrays() {
        assert_eq!(cover_array(&w("aaaa")).as_slice(), &[1, 1, 1, 1]);
        assert_eq!(cover_array(&w("abaab")).as_slice(), &[1, 2, 3, 4, 5]);
        assert_eq!(cover_array(&w(COVERED)).get(17), 5);
        assert!(cover_array(&Word::default()).is_empty());
    }

    #[test]
    fn builder_reports_each_prefix() {
        let mut b = CoverArrayBuilder::new();
        let online: Vec<usize> = w("abaababa").letters().iter().map(|&l| b.push(l)).collect();
        assert_eq!(online, cover_array(&w("abaababa")).as_slice());
        assert_eq!(b.len(), 8);
    }

    #[test]
    fn shortest_covers() {
        assert_eq!(shortest_cover(&w(COVERED)).unwrap(), w("aabaa"));
        assert_eq!(shortest_cover(&w("abaab")).unwrap(), w("abaab"));
        assert_eq!(shortest_cover(&w("aaaa")).unwrap(), w("a"));
        assert!(shortest_cover(&Word::default()).is_err());
    }

    #[test]
    fn all_covers() {
        assert_eq!(all_cover_lengths(&w(COVERED)).unwrap(), vec![5]);
        assert_eq!(all_cover_lengths(&w("aaaa")).unwrap(), vec![1, 2, 3]);
        assert!(all_cover_lengths(&w("abc")).unwrap().is_empty());
    }

    #[test]
    fn quasiperiodicity() {
        assert!(is_quasiperiodic(&w(COVERED)).unwrap());
        assert!(!is_quasiperiodic(&w("abaab")).unwrap());
        assert!(is_quasiperiodic(&w("aaabaaab")).unwrap());
        assert!(!is_quasiperiodic(&w("a")).unwrap());
        assert!(is_quasiperiodic(&Word::default()).is_err());
    }
}
