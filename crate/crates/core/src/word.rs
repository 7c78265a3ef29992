//! Words over a small integer alphabet and the relations between them.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::border::occurrences;
use crate::error::{Error, Result};

/// A finite sequence of letters, each letter a small integer.
///
/// A `Word` does not remember its alphabet; [`Word::new`] checks letters
/// against a declared size and [`Word::from_letters`] trusts the caller.
/// Text form maps `a` to 0, `b` to 1 and so on.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>, sigma: u8) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l >= sigma) {
            return Err(Error::LetterOutOfRange { letter, sigma });
        }
        Ok(Word(letters))
    }

    pub fn from_letters(letters: impl Into<Vec<u8>>) -> Self {
        Word(letters.into())
    }

    /// Parses lowercase ASCII, `a` -> 0 through `z` -> 25.
    pub fn from_ascii(text: &str) -> Result<Self> {
        text.chars()
            .map(|c| {
                if c.is_ascii_lowercase() {
                    Ok(c as u8 - b'a')
                } else {
                    Err(Error::InvalidCharacter(c))
                }
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    /// `a^count`.
    pub fn repeat(letter: u8, count: usize) -> Self {
        Word(alloc::vec![letter; count])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    /// Letter at 1-based position `i`.
    ///
    /// Panics if `i` is 0 or greater than the length.
    pub fn at(&self, i: usize) -> u8 {
        assert!(i >= 1, "positions are 1-based");
        self.0[i - 1]
    }

    /// The factor `w[i..j]`, 1-based and inclusive. Empty when `i > j`.
    pub fn factor(&self, i: usize, j: usize) -> Word {
        if i > j {
            return Word::default();
        }
        assert!(i >= 1 && j <= self.len(), "factor [{i}, {j}] out of bounds");
        Word(self.0[i - 1..j].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.len() - len..].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Smallest alphabet size that contains every letter of the word.
    pub fn alphabet_bound(&self) -> u8 {
        self.0.iter().max().map_or(0, |&m| m + 1)
    }

    /// True when the first occurrence of each letter `k + 1` comes after the
    /// first occurrence of `k`, i.e. the word is the representative of its
    /// letter-renaming class.
    pub fn is_canonical(&self) -> bool {
        let mut next = 0u8;
        for &letter in &self.0 {
            if letter > next {
                return false;
            }
            if letter == next {
                next += 1;
            }
        }
        true
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::from_ascii(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l < 26) {
            for &l in &self.0 {
                fmt::Write::write_char(f, (b'a' + l) as char)?;
            }
            Ok(())
        } else {
            f.write_str("[")?;
            for (k, l) in self.0.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str("]")
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Ascending 1-based positions where `w` and `v` differ.
///
/// `w =_j v` holds exactly when the result is `[j]`.
pub fn mismatch_positions(w: &Word, v: &Word) -> Result<Vec<usize>> {
    if w.len() != v.len() {
        return Err(Error::LengthMismatch { left: w.len(), right: v.len() });
    }
    Ok(w.0
        .iter()
        .zip(&v.0)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, _)| i + 1)
        .collect())
}

/// Two equal-length words that differ at exactly one position `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MismatchPair {
    w: Word,
    w_prime: Word,
    j: usize,
}

impl MismatchPair {
    /// Fails unless the words have equal length and Hamming distance 1.
    pub fn new(w: Word, w_prime: Word) -> Result<Self> {
        let diff = mismatch_positions(&w, &w_prime)?;
        match diff.as_slice() {
            [j] => {
                let j = *j;
                Ok(MismatchPair { w, w_prime, j })
            }
            _ => Err(Error::InvalidSpec("words must differ at exactly one position")),
        }
    }

    pub fn w(&self) -> &Word {
        &self.w
    }

    pub fn w_prime(&self) -> &Word {
        &self.w_prime
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn swapped(&self) -> MismatchPair {
        MismatchPair { w: self.w_prime.clone(), w_prime: self.w.clone(), j: self.j }
    }
}

/// `w[i+1..n] w[1..i]`; offsets 0 and `n` give `w` back.
pub fn cyclic_shift(w: &Word, i: usize) -> Result<Word> {
    if i > w.len() {
        return Err(Error::ShiftOutOfRange { offset: i, len: w.len() });
    }
    let mut letters = Vec::with_capacity(w.len());
    letters.extend_from_slice(&w.0[i..]);
    letters.extend_from_slice(&w.0[..i]);
    Ok(Word(letters))
}

/// Whether `v` is a rotation of `w`, tested as `v` occurring in `ww`.
pub fn is_cyclic_shift(w: &Word, v: &Word) -> bool {
    if w.len() != v.len() {
        return false;
    }
    if w.is_empty() {
        return true;
    }
    let doubled = w.concat(w);
    occurrences(v, &doubled).map_or(false, |occ| !occ.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn ascii_round_trip() {
        assert_eq!(w("abaab").letters(), &[0, 1, 0, 0, 1]);
        assert_eq!(w("abaab").to_string(), "abaab");
        assert_eq!(Word::from_ascii("aB"), Err(Error::InvalidCharacter('B')));
        assert_eq!(Word::from_letters(vec![30, 1]).to_string(), "[30,1]");
    }

    #[test]
    fn alphabet_is_checked() {
        assert!(Word::new(vec![0, 1, 2], 3).is_ok());
        assert_eq!(
            Word::new(vec![0, 3], 3),
            Err(Error::LetterOutOfRange { letter: 3, sigma: 3 })
        );
    }

    #[test]
    fn factors_are_one_based() {
        let x = w("abcde");
        assert_eq!(x.at(1), 0);
        assert_eq!(x.factor(2, 4), w("bcd"));
        assert_eq!(x.factor(3, 2), Word::default());
        assert_eq!(x.prefix(2), w("ab"));
        assert_eq!(x.suffix(2), w("de"));
    }

    #[test]
    fn mismatches() {
        assert_eq!(mismatch_positions(&w("abaab"), &w("abbab")).unwrap(), vec![3]);
        assert!(mismatch_positions(&w("abc"), &w("abc")).unwrap().is_empty());
        assert_eq!(mismatch_positions(&w("aaabaaab"), &w("aaaaaaaa")).unwrap(), vec![4, 8]);
        assert_eq!(
            mismatch_positions(&w("ab"), &w("abc")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn mismatch_pair_requires_distance_one() {
        let pair = MismatchPair::new(w("abaab"), w("abbab")).unwrap();
        assert_eq!(pair.j(), 3);
        assert_eq!(pair.swapped().w(), &w("abbab"));
        assert!(MismatchPair::new(w("ab"), w("ab")).is_err());
        assert!(MismatchPair::new(w("ab"), w("ba")).is_err());
    }

    #[test]
    fn shifts() {
        assert_eq!(cyclic_shift(&w("abaab"), 2).unwrap(), w("aabab"));
        assert_eq!(cyclic_shift(&w("abaab"), 0).unwrap(), w("abaab"));
        assert_eq!(cyclic_shift(&w("abaab"), 5).unwrap(), w("abaab"));
        assert_eq!(cyclic_shift(&w("ab"), 1).unwrap(), w("ba"));
        assert_eq!(
            cyclic_shift(&w("ab"), 3),
            Err(Error::ShiftOutOfRange { offset: 3, len: 2 })
        );
        assert!(is_cyclic_shift(&w("abaab"), &w("aabab")));
        assert!(is_cyclic_shift(&w("ab"), &w("ab")));
        assert!(!is_cyclic_shift(&w("aab"), &w("abb")));
        assert!(!is_cyclic_shift(&w("aab"), &w("aa")));
        assert!(is_cyclic_shift(&Word::default(), &Word::default()));
    }

    #[test]
    fn canonical_forms() {
        assert!(w("aabac").is_canonical());
        assert!(w("").is_canonical());
        assert!(!w("ba").is_canonical());
        assert!(!w("aac").is_canonical());
    }
}
