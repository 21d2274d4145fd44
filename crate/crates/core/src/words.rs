//! Letters, spins, finite and eventually periodic spinned words.
//!
//! Text format: `[a-zA-Z]*` for a finite word, `[a-zA-Z]*\([a-zA-Z]+\)` for
//! an eventually periodic one. Lowercase is spin `L`, uppercase is spin `R`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::Deref;
use core::str::FromStr;

use crate::{Error, Result};

/// One of the 26 letters `a..=z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u8);

impl Letter {
    pub const MAX: usize = 26;

    /// The letter with the given index (`0` is `a`).
    pub const fn new(index: usize) -> Option<Letter> {
        if index < Self::MAX {
            Some(Letter(index as u8))
        } else {
            None
        }
    }

    /// Accepts a lowercase ASCII letter.
    pub fn from_char(c: char) -> Option<Letter> {
        if c.is_ascii_lowercase() {
            Some(Letter(c as u8 - b'a'))
        } else {
            None
        }
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn to_char(self) -> char {
        (b'a' + self.0) as char
    }

    pub const fn with_spin(self, spin: Spin) -> SpinnedLetter {
        SpinnedLetter { letter: self, spin }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char(self.to_char())
    }
}

/// Parses a lowercase letter sequence such as `"abc"`.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.char_indices()
        .map(|(i, c)| {
            Letter::from_char(c).ok_or(Error::Parse { position: i, reason: "expected a lowercase letter" })
        })
        .collect()
}

/// Renders a letter sequence.
pub fn render_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_char()).collect()
}

/// A set of letters, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LetterSet(u32);

impl LetterSet {
    pub const fn empty() -> Self {
        LetterSet(0)
    }

    pub fn insert(&mut self, l: Letter) {
        self.0 |= 1 << l.0;
    }

    pub fn contains(self, l: Letter) -> bool {
        self.0 & (1 << l.0) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 | other.0)
    }

    /// The largest letter in the set.
    pub fn max(self) -> Option<Letter> {
        if self.0 == 0 {
            None
        } else {
            Some(Letter(31 - self.0.leading_zeros() as u8))
        }
    }

    /// Letters in alphabetical order.
    pub fn iter(self) -> impl Iterator<Item = Letter> {
        (0..Letter::MAX as u8).filter(move |i| self.0 & (1 << i) != 0).map(Letter)
    }
}

impl FromIterator<Letter> for LetterSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        let mut set = LetterSet::empty();
        for l in iter {
            set.insert(l);
        }
        set
    }
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_char('}')
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Spin {
    L,
    R,
}

impl Spin {
    pub const fn opposite(self) -> Spin {
        match self {
            Spin::L => Spin::R,
            Spin::R => Spin::L,
        }
    }
}

/// A directive letter: `x` (spin `L`, the morphism `L_x`) or `x̄` (spin `R`, `R_x`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SpinnedLetter {
    pub letter: Letter,
    pub spin: Spin,
}

impl SpinnedLetter {
    pub const fn new(letter: Letter, spin: Spin) -> Self {
        SpinnedLetter { letter, spin }
    }

    pub fn from_char(c: char) -> Option<SpinnedLetter> {
        if c.is_ascii_lowercase() {
            Some(Letter(c as u8 - b'a').with_spin(Spin::L))
        } else if c.is_ascii_uppercase() {
            Some(Letter(c as u8 - b'A').with_spin(Spin::R))
        } else {
            None
        }
    }

    pub const fn to_char(self) -> char {
        match self.spin {
            Spin::L => (b'a' + self.letter.0) as char,
            Spin::R => (b'A' + self.letter.0) as char,
        }
    }

    pub const fn opposite(self) -> Self {
        SpinnedLetter { letter: self.letter, spin: self.spin.opposite() }
    }

    pub fn is_l(self) -> bool {
        self.spin == Spin::L
    }

    pub fn is_r(self) -> bool {
        self.spin == Spin::R
    }
}

impl fmt::Display for SpinnedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char(self.to_char())
    }
}

/// Direction of a forbidden-factor scan or of a block site.
///
/// `RtoL` stands for factors in `⋃ x̄ 𝒜̄* x` (an `R`-spinned run closed by an
/// `L`-spinned letter), `LtoR` for factors in `⋃ x 𝒜* x̄`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Direction {
    LtoR,
    RtoL,
}

impl Direction {
    /// Spin of the first letter and of the interior of a matching factor.
    pub const fn run_spin(self) -> Spin {
        match self {
            Direction::LtoR => Spin::L,
            Direction::RtoL => Spin::R,
        }
    }
}

/// True iff `letters` contains a factor `x̄ 𝒜̄* x` (`RtoL`) or `x 𝒜* x̄` (`LtoR`).
pub(crate) fn scan_forbidden<I>(letters: I, direction: Direction) -> bool
where
    I: IntoIterator<Item = SpinnedLetter>,
{
    let run = direction.run_spin();
    let mut seen = LetterSet::empty();
    for sl in letters {
        if sl.spin == run {
            seen.insert(sl.letter);
        } else if seen.contains(sl.letter) {
            return true;
        } else {
            seen = LetterSet::empty();
        }
    }
    false
}

/// Length of the primitive root of `s`; `s` must be nonempty.
pub(crate) fn primitive_root_len<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    (1..=n)
        .find(|&d| n % d == 0 && (d..n).all(|i| s[i] == s[i - d]))
        .unwrap_or(n)
}

/// A finite spinned word; may be empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SpinnedWord(Vec<SpinnedLetter>);

impl SpinnedWord {
    pub const fn new() -> Self {
        SpinnedWord(Vec::new())
    }

    pub fn from_letters(letters: Vec<SpinnedLetter>) -> Self {
        SpinnedWord(letters)
    }

    /// The `L`-spinned word with the given underlying letters.
    pub fn l_spinned(letters: &[Letter]) -> Self {
        SpinnedWord(letters.iter().map(|l| l.with_spin(Spin::L)).collect())
    }

    pub fn into_letters(self) -> Vec<SpinnedLetter> {
        self.0
    }

    pub fn push(&mut self, sl: SpinnedLetter) {
        self.0.push(sl);
    }

    pub fn extend_from_slice(&mut self, letters: &[SpinnedLetter]) {
        self.0.extend_from_slice(letters);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn opposite(&self) -> SpinnedWord {
        SpinnedWord(self.0.iter().map(|sl| sl.opposite()).collect())
    }

    pub fn underlying(&self) -> Vec<Letter> {
        self.0.iter().map(|sl| sl.letter).collect()
    }

    pub fn alph(&self) -> LetterSet {
        self.0.iter().map(|sl| sl.letter).collect()
    }

    pub fn is_l_spinned(&self) -> bool {
        self.0.iter().all(|sl| sl.is_l())
    }

    pub fn has_forbidden_factor(&self, direction: Direction) -> bool {
        scan_forbidden(self.0.iter().copied(), direction)
    }

    /// True iff every underlying letter occurs with a single spin.
    pub fn is_regular(&self) -> bool {
        is_regular(self.0.iter().copied())
    }
}

pub(crate) fn is_regular<I: IntoIterator<Item = SpinnedLetter>>(letters: I) -> bool {
    let mut l = LetterSet::empty();
    let mut r = LetterSet::empty();
    for sl in letters {
        match sl.spin {
            Spin::L => l.insert(sl.letter),
            Spin::R => r.insert(sl.letter),
        }
    }
    l.0 & r.0 == 0
}

impl Deref for SpinnedWord {
    type Target = [SpinnedLetter];

    fn deref(&self) -> &[SpinnedLetter] {
        &self.0
    }
}

impl From<Vec<SpinnedLetter>> for SpinnedWord {
    fn from(letters: Vec<SpinnedLetter>) -> Self {
        SpinnedWord(letters)
    }
}

impl FromIterator<SpinnedLetter> for SpinnedWord {
    fn from_iter<I: IntoIterator<Item = SpinnedLetter>>(iter: I) -> Self {
        SpinnedWord(iter.into_iter().collect())
    }
}

impl fmt::Display for SpinnedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|sl| f.write_char(sl.to_char()))
    }
}

impl FromStr for SpinnedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse(s)? {
            Word::Finite(w) => Ok(w),
            Word::Infinite(_) => Err(Error::Parse {
                position: s.find('(').unwrap_or(0),
                reason: "expected a finite word",
            }),
        }
    }
}

/// An eventually periodic spinned infinite word `preperiod · period^ω`.
///
/// Equality (`==`) is on the representation. Two values denote the same
/// infinite word iff their [`canonicalize`](Self::canonicalize)d forms are
/// equal; see [`same_word`](Self::same_word).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EvPeriodicSpinnedWord {
    preperiod: SpinnedWord,
    period: SpinnedWord,
}

impl EvPeriodicSpinnedWord {
    /// Fails with [`Error::EmptyWord`] if `period` is empty.
    pub fn new(preperiod: SpinnedWord, period: SpinnedWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(EvPeriodicSpinnedWord { preperiod, period })
    }

    pub fn periodic(period: SpinnedWord) -> Result<Self> {
        Self::new(SpinnedWord::new(), period)
    }

    pub fn preperiod(&self) -> &SpinnedWord {
        &self.preperiod
    }

    pub fn period(&self) -> &SpinnedWord {
        &self.period
    }

    /// Letter at position `i` (0-based) of the infinite word.
    pub fn at(&self, i: usize) -> SpinnedLetter {
        let p = self.preperiod.len();
        if i < p {
            self.preperiod[i]
        } else {
            self.period[(i - p) % self.period.len()]
        }
    }

    /// Infinite iterator over the letters.
    pub fn iter(&self) -> impl Iterator<Item = SpinnedLetter> + '_ {
        self.preperiod.iter().copied().chain(self.period.iter().copied().cycle())
    }

    /// The first `n` letters.
    pub fn unfold(&self, n: usize) -> SpinnedWord {
        self.iter().take(n).collect()
    }

    /// The suffix starting at position `k`.
    pub fn shift(&self, k: usize) -> EvPeriodicSpinnedWord {
        let p = self.preperiod.len();
        if k <= p {
            EvPeriodicSpinnedWord {
                preperiod: SpinnedWord(self.preperiod[k..].to_vec()),
                period: self.period.clone(),
            }
        } else {
            let r = (k - p) % self.period.len();
            let mut period = self.period[r..].to_vec();
            period.extend_from_slice(&self.period[..r]);
            EvPeriodicSpinnedWord { preperiod: SpinnedWord::new(), period: SpinnedWord(period) }
        }
    }

    /// Same infinite word with a primitive period and a preperiod that cannot
    /// be absorbed into the period.
    pub fn canonicalize(&self) -> EvPeriodicSpinnedWord {
        let root = primitive_root_len(&self.period);
        let mut period: Vec<SpinnedLetter> = self.period[..root].to_vec();
        let mut pre = self.preperiod.0.clone();
        while let (Some(&a), Some(&b)) = (pre.last(), period.last()) {
            if a != b {
                break;
            }
            pre.pop();
            period.rotate_right(1);
        }
        EvPeriodicSpinnedWord { preperiod: SpinnedWord(pre), period: SpinnedWord(period) }
    }

    pub fn is_canonical(&self) -> bool {
        primitive_root_len(&self.period) == self.period.len()
            && self.preperiod.last() != self.period.last()
    }

    /// True iff both values denote the same infinite word.
    pub fn same_word(&self, other: &EvPeriodicSpinnedWord) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    pub fn opposite(&self) -> EvPeriodicSpinnedWord {
        EvPeriodicSpinnedWord { preperiod: self.preperiod.opposite(), period: self.period.opposite() }
    }

    /// The `L`-spinned word with the same underlying letters.
    pub fn underlying(&self) -> EvPeriodicSpinnedWord {
        EvPeriodicSpinnedWord {
            preperiod: SpinnedWord::l_spinned(&self.preperiod.underlying()),
            period: SpinnedWord::l_spinned(&self.period.underlying()),
        }
    }

    pub fn alph(&self) -> LetterSet {
        self.preperiod.alph().union(self.period.alph())
    }

    /// Letters occurring infinitely often.
    pub fn ult(&self) -> LetterSet {
        self.period.alph()
    }

    pub fn is_l_spinned(&self) -> bool {
        self.preperiod.is_l_spinned() && self.period.is_l_spinned()
    }

    /// Infinitely many `L`- and infinitely many `R`-spinned letters.
    pub fn is_wavy(&self) -> bool {
        self.period.iter().any(|sl| sl.is_l()) && self.period.iter().any(|sl| sl.is_r())
    }

    pub fn is_regular(&self) -> bool {
        is_regular(self.preperiod.iter().chain(self.period.iter()).copied())
    }

    /// Scans the preperiod followed by three copies of the period; every
    /// occurrence class of a forbidden factor shows up in that window.
    pub fn has_forbidden_factor(&self, direction: Direction) -> bool {
        let window = self.preperiod.len() + 3 * self.period.len();
        scan_forbidden(self.iter().take(window), direction)
    }

    /// Formats the representation as stored, without canonicalizing.
    pub fn raw(&self) -> impl fmt::Display + '_ {
        Raw(self)
    }
}

struct Raw<'a>(&'a EvPeriodicSpinnedWord);

impl fmt::Display for Raw<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.0.preperiod, self.0.period)
    }
}

/// Renders the canonical form.
impl fmt::Display for EvPeriodicSpinnedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_canonical() {
            Raw(self).fmt(f)
        } else {
            Raw(&self.canonicalize()).fmt(f)
        }
    }
}

impl FromStr for EvPeriodicSpinnedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse(s)? {
            Word::Infinite(w) => Ok(w),
            Word::Finite(_) => Err(Error::Parse { position: s.len(), reason: "expected `(period)`" }),
        }
    }
}

/// Result of [`parse`]: either kind of spinned word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Word {
    Finite(SpinnedWord),
    Infinite(EvPeriodicSpinnedWord),
}

impl Word {
    pub fn opposite(&self) -> Word {
        match self {
            Word::Finite(w) => Word::Finite(w.opposite()),
            Word::Infinite(w) => Word::Infinite(w.opposite()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Finite(w) => w.fmt(f),
            Word::Infinite(w) => w.fmt(f),
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Parses `[a-zA-Z]*` or `[a-zA-Z]*\([a-zA-Z]+\)`.
pub fn parse(text: &str) -> Result<Word> {
    let mut pre = Vec::new();
    let mut chars = text.char_indices();
    let open = loop {
        match chars.next() {
            None => return Ok(Word::Finite(SpinnedWord(pre))),
            Some((i, '(')) => break i,
            Some((i, c)) => pre.push(
                SpinnedLetter::from_char(c)
                    .ok_or(Error::Parse { position: i, reason: "expected an ASCII letter or `(`" })?,
            ),
        }
    };
    let mut period = Vec::new();
    let close = loop {
        match chars.next() {
            None => return Err(Error::Parse { position: text.len(), reason: "unclosed period" }),
            Some((i, ')')) => break i,
            Some((i, c)) => period.push(
                SpinnedLetter::from_char(c)
                    .ok_or(Error::Parse { position: i, reason: "expected an ASCII letter or `)`" })?,
            ),
        }
    };
    if period.is_empty() {
        return Err(Error::Parse { position: open, reason: "empty period" });
    }
    if let Some((i, _)) = chars.next() {
        return Err(Error::Parse { position: i, reason: "trailing characters after the period" });
    }
    debug_assert!(close + 1 == text.len());
    Ok(Word::Infinite(EvPeriodicSpinnedWord { preperiod: SpinnedWord(pre), period: SpinnedWord(period) }))
}
