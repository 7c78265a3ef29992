//! Almost periods and almost borders.
//!
//! `w` is almost periodic with period `p` and mismatch `j` when
//! `w[i] = w[i + p]` for every `i` in `1..=n-p` except `i = j`, where the
//! letters differ. An almost border of length `b` is a prefix and a suffix
//! of that length at Hamming distance exactly 1. Both lists are plain
//! quadratic scans.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlmostPeriod {
    pub period: usize,
    /// 1-based, in `1..=n-p`.
    pub mismatch: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlmostBorder {
    pub length: usize,
    /// 1-based position inside the prefix copy.
    pub mismatch: usize,
}

fn require_two(w: &Word) -> Result<()> {
    if w.len() < 2 {
        Err(Error::TooShort { len: w.len(), min: 2 })
    } else {
        Ok(())
    }
}

/// The position of the only mismatch between two equal-length slices.
fn single_mismatch(a: &[u8], b: &[u8]) -> Option<usize> {
    let mut found = None;
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            if found.is_some() {
                return None;
            }
            found = Some(i + 1);
        }
    }
    found
}

/// All `(p, j)` pairs, ordered by period. A period has at most one mismatch.
pub fn almost_periods(w: &Word) -> Result<Vec<AlmostPeriod>> {
    require_two(w)?;
    let l = w.letters();
    let n = l.len();
    let mut out = Vec::new();
    for period in 1..n {
        let mut mismatch = None;
        let mut count = 0;
        for i in 0..n - period {
            if l[i] != l[i + period] {
                count += 1;
                if count > 1 {
                    break;
                }
                mismatch = Some(i + 1);
            }
        }
        if count == 1 {
            out.push(AlmostPeriod { period, mismatch: mismatch.unwrap() });
        }
    }
    Ok(out)
}

/// All `(b, j)` with `w[1..b] =_j w[n-b+1..n]`, ordered by length.
pub fn almost_borders(w: &Word) -> Result<Vec<AlmostBorder>> {
    require_two(w)?;
    let l = w.letters();
    let n = l.len();
    Ok((1..n)
        .filter_map(|length| {
            single_mismatch(&l[..length], &l[n - length..])
                .map(|mismatch| AlmostBorder { length, mismatch })
        })
        .collect())
}
