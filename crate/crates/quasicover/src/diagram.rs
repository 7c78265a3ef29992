//! ASCII occurrence diagrams.
//!
//! The word goes on the first line and every interval gets a line of its
//! own below it, aligned to the word's columns. A full occurrence is drawn
//! `[---]`; an overhang loses the bracket on the side that runs past the
//! word, so a left overhang is `---]` and a right one `[---`. A one-letter
//! occurrence is a single `-`.

use quasicover_core::{Interval, IntervalKind, Word};

pub fn interval_line(iv: &Interval) -> String {
    let len = iv.len();
    let body = match (iv.kind, len) {
        (IntervalKind::Occurrence, 1) => "-".to_string(),
        (IntervalKind::Occurrence, _) => format!("[{}]", "-".repeat(len - 2)),
        (IntervalKind::LeftOverhang, _) => format!("{}]", "-".repeat(len - 1)),
        (IntervalKind::RightOverhang, _) => format!("[{}", "-".repeat(len - 1)),
    };
    format!("{}{}", " ".repeat(iv.start - 1), body)
}

pub fn render(word: &Word, intervals: &[Interval]) -> String {
    let mut out = word.to_string();
    out.push('\n');
    for iv in intervals {
        out.push_str(&interval_line(iv));
        out.push('\n');
    }
    out
}
