//! Pure episturmian morphisms represented by their letter images.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::words::{primitive_root_len, Letter, LetterSet, Spin, SpinnedLetter};
use crate::{Error, Result};

/// The first `n` letters `a, b, …`, with `2 <= n <= 26`.
///
/// Over a single letter `L_a` and `R_a` coincide, so two letters is the
/// smallest alphabet on which morphisms are compared.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Alphabet(u8);

impl Alphabet {
    /// Clamps `size` into `2..=26`.
    pub fn new(size: usize) -> Alphabet {
        Alphabet(size.clamp(2, Letter::MAX) as u8)
    }

    /// Smallest alphabet containing every letter of `letters`.
    pub fn spanning(letters: LetterSet) -> Alphabet {
        Alphabet::new(letters.max().map_or(0, |l| l.index() + 1))
    }

    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, l: Letter) -> bool {
        l.index() < self.size()
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.size()).filter_map(Letter::new)
    }
}

/// A pure episturmian morphism, given by the image of every letter.
///
/// Equality compares images only; the directive word a map was built from
/// is kept for display purposes.
#[derive(Clone, Debug)]
pub struct LetterImageMap {
    alphabet: Alphabet,
    images: Vec<Vec<Letter>>,
    source: Option<Vec<SpinnedLetter>>,
}

impl PartialEq for LetterImageMap {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.images == other.images
    }
}

impl Eq for LetterImageMap {}

impl LetterImageMap {
    pub fn identity(alphabet: Alphabet) -> Self {
        LetterImageMap {
            alphabet,
            images: alphabet.letters().map(|l| vec![l]).collect(),
            source: Some(Vec::new()),
        }
    }

    /// `L_x` for an `L`-spinned letter, `R_x` for an `R`-spinned one.
    pub fn elementary(sl: SpinnedLetter, alphabet: Alphabet) -> Result<Self> {
        let mut m = Self::identity(alphabet);
        m.extend(sl)?;
        Ok(m)
    }

    /// `μ_w`: the composition of the elementary morphisms of `w`, leftmost
    /// outermost. The alphabet is the smallest one spanning `w`.
    pub fn mu(w: &[SpinnedLetter]) -> Self {
        let alphabet = Alphabet::spanning(w.iter().map(|sl| sl.letter).collect());
        Self::mu_over(w, alphabet).expect("alphabet spans the word")
    }

    pub fn mu_over(w: &[SpinnedLetter], alphabet: Alphabet) -> Result<Self> {
        let mut m = Self::identity(alphabet);
        for &sl in w {
            m.extend(sl)?;
        }
        Ok(m)
    }

    /// Replaces `μ_w` by `μ_{w·sl}`.
    ///
    /// `μ_{w·x}(b) = μ_w(x b)` and `μ_{w·x̄}(b) = μ_w(b x)` for `b ≠ x`.
    pub fn extend(&mut self, sl: SpinnedLetter) -> Result<()> {
        let x = sl.letter;
        if !self.alphabet.contains(x) {
            return Err(Error::LetterOutsideAlphabet(x));
        }
        let xi = x.index();
        let (head, tail) = self.images.split_at_mut(xi);
        let (img_x, tail) = tail.split_first_mut().expect("x in alphabet");
        for img in head.iter_mut().chain(tail.iter_mut()) {
            match sl.spin {
                Spin::L => {
                    img.splice(0..0, img_x.iter().copied());
                }
                Spin::R => img.extend_from_slice(img_x),
            }
        }
        if let Some(src) = &mut self.source {
            src.push(sl);
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The directive word this map was built from, when known.
    pub fn source_directive(&self) -> Option<&[SpinnedLetter]> {
        self.source.as_deref()
    }

    pub fn image(&self, l: Letter) -> Result<&[Letter]> {
        self.images.get(l.index()).map(Vec::as_slice).ok_or(Error::LetterOutsideAlphabet(l))
    }

    /// Concatenation of the images of the letters of `w`.
    pub fn apply(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for &l in w {
            out.extend_from_slice(self.image(l)?);
        }
        Ok(out)
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &LetterImageMap) -> Result<LetterImageMap> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let images = other.images.iter().map(|img| self.apply(img)).collect::<Result<_>>()?;
        let source = match (&self.source, &other.source) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Ok(LetterImageMap { alphabet: self.alphabet, images, source })
    }

    /// True iff both maps send every letter to the same image.
    pub fn equal(&self, other: &LetterImageMap) -> Result<bool> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.images == other.images)
    }

    /// `(letter, image)` pairs in alphabetical order.
    pub fn images(&self) -> impl Iterator<Item = (Letter, &[Letter])> {
        self.alphabet.letters().zip(self.images.iter().map(Vec::as_slice))
    }
}

/// One `x->image` line per letter.
impl fmt::Display for LetterImageMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, img) in self.images() {
            write!(f, "{l}->")?;
            for c in img {
                write!(f, "{c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// True iff `w` is not `u^p` for some `p >= 2`.
pub fn is_primitive(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(primitive_root_len(w) == w.len())
}

/// The primitive `u` with `w = u^p`.
pub fn primitive_root(w: &[Letter]) -> Result<Vec<Letter>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w[..primitive_root_len(w)].to_vec())
}
