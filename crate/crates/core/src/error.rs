use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter is not below the declared alphabet size.
    LetterOutOfRange { letter: u8, sigma: u8 },
    /// A character outside `a..=z` was given as word text.
    InvalidCharacter(char),
    /// Two words that must have equal length do not.
    LengthMismatch { left: usize, right: usize },
    /// The operation needs a word of at least `min` letters.
    TooShort { len: usize, min: usize },
    /// A pattern (cover or seed candidate) is empty.
    EmptyPattern,
    /// A pattern (cover or seed candidate) is longer than the text.
    PatternTooLong { pattern: usize, text: usize },
    ShiftOutOfRange { offset: usize, len: usize },
    OddLength(usize),
    InvalidSpec(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LetterOutOfRange { letter, sigma } => {
                write!(f, "letter {letter} is outside the alphabet 0..{sigma}")
            }
            Error::InvalidCharacter(c) => {
                write!(f, "invalid character {c:?}: words use lowercase ASCII letters")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "words are incomparable: lengths {left} and {right} differ")
            }
            Error::TooShort { len, min } => {
                write!(f, "word of length {len} is too short (need at least {min})")
            }
            Error::EmptyPattern => f.write_str("pattern must not be empty"),
            Error::PatternTooLong { pattern, text } => {
                write!(f, "pattern of length {pattern} is longer than text of length {text}")
            }
            Error::ShiftOutOfRange { offset, len } => {
                write!(f, "shift offset {offset} is outside 0..={len}")
            }
            Error::OddLength(n) => write!(f, "length {n} is not an even number >= 2"),
            Error::InvalidSpec(msg) => write!(f, "invalid enumeration spec: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
