use core::fmt;

use crate::words::Letter;

/// Everything that can go wrong in this crate.
///
/// [`Error::name`] gives a stable identifier (used by the command-line tool
/// as its diagnostic), `Display` adds the details.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed word text; `position` is a byte offset into the input.
    Parse { position: usize, reason: &'static str },
    /// A letter outside the alphabet a morphism is defined on.
    LetterOutsideAlphabet(Letter),
    /// Two morphisms over different alphabets were compared or composed.
    AlphabetMismatch,
    /// The operation needs a nonempty word.
    EmptyWord,
    /// A block site that does not describe a block of the given word.
    StaleSite,
    /// Only one letter occurs infinitely often: the directed word is periodic.
    PeriodicDirective,
    /// The directive word has finitely many `L`-spinned letters.
    UltimatelyRSpinned,
    /// The normalizer's pending `R`-run exceeded its cap.
    PendingOverflow { cap: usize },
    /// No repeating normalizer state was found within the configured bounds.
    CycleNotFound,
    /// An ultimately `R`-spinned word directs several words; a start letter is required.
    AmbiguousDirective,
    /// The operation needs a different [`DirectiveClass`](crate::DirectiveClass).
    WrongClass,
    /// The requested letter does not occur `R`-spinned infinitely often.
    LetterNotRecurring(Letter),
    /// The operation needs an `L`-spinned directive word.
    NotLSpinned,
    /// The operation needs a word over exactly two letters.
    NotBinary,
    /// The respin window is too large.
    WindowTooLarge { window: usize, max: usize },
    /// A generated prefix would exceed the output cap.
    OutputCapExceeded { requested: usize, cap: usize },
    /// Successive generated prefixes stopped growing.
    GenerationStalled,
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::LetterOutsideAlphabet(_) => "LetterOutsideAlphabet",
            Error::AlphabetMismatch => "AlphabetMismatch",
            Error::EmptyWord => "EmptyWord",
            Error::StaleSite => "StaleSite",
            Error::PeriodicDirective => "PeriodicDirective",
            Error::UltimatelyRSpinned => "UltimatelyRSpinned",
            Error::PendingOverflow { .. } => "PendingOverflow",
            Error::CycleNotFound => "CycleNotFound",
            Error::AmbiguousDirective => "AmbiguousDirective",
            Error::WrongClass => "WrongClass",
            Error::LetterNotRecurring(_) => "LetterNotRecurring",
            Error::NotLSpinned => "NotLSpinned",
            Error::NotBinary => "NotBinary",
            Error::WindowTooLarge { .. } => "WindowTooLarge",
            Error::OutputCapExceeded { .. } => "OutputCapExceeded",
            Error::GenerationStalled => "GenerationStalled",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { position, reason } => {
                write!(f, "parse error at position {position}: {reason}")
            }
            Error::LetterOutsideAlphabet(l) => write!(f, "letter {l} is outside the alphabet"),
            Error::AlphabetMismatch => f.write_str("morphisms are defined over different alphabets"),
            Error::EmptyWord => f.write_str("empty word"),
            Error::StaleSite => f.write_str("block site does not match the word"),
            Error::PeriodicDirective => {
                f.write_str("directive word has a single recurring letter (periodic word)")
            }
            Error::UltimatelyRSpinned => {
                f.write_str("directive word has finitely many L-spinned letters")
            }
            Error::PendingOverflow { cap } => {
                write!(f, "pending R-spinned suffix exceeded {cap} letters")
            }
            Error::CycleNotFound => f.write_str("normalizer did not reach a repeating state"),
            Error::AmbiguousDirective => {
                f.write_str("ultimately R-spinned directive word: a start letter is required")
            }
            Error::WrongClass => f.write_str("operation not defined for this directive class"),
            Error::LetterNotRecurring(l) => {
                write!(f, "letter {l} does not occur R-spinned infinitely often")
            }
            Error::NotLSpinned => f.write_str("directive word must be L-spinned"),
            Error::NotBinary => f.write_str("directive word must be over exactly two letters"),
            Error::WindowTooLarge { window, max } => {
                write!(f, "respin window {window} exceeds the maximum {max}")
            }
            Error::OutputCapExceeded { requested, cap } => {
                write!(f, "requested {requested} letters, cap is {cap}")
            }
            Error::GenerationStalled => f.write_str("generated prefixes stopped growing"),
        }
    }
}

impl core::error::Error for Error {}
