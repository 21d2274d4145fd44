//! Prefixes of directed episturmian words, iterated palindromic closure,
//! and factor utilities.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::equivalence::{classify, flip_to_L, periodic_root, DirectiveClass};
use crate::morphisms::{Alphabet, LetterImageMap};
use crate::words::{EvPeriodicSpinnedWord, Letter};
use crate::{Error, Result};

/// Default cap on generated prefix lengths.
pub const DEFAULT_MAX_OUTPUT: usize = 1_000_000;

/// Resumable generator for a directive word with infinitely many
/// `L`-spinned letters.
///
/// After consuming `k` directive letters, the candidate prefix is
/// `μ_{Δ[0..k)}(a_k)`, where `a_k` is the letter of the first `L`-spinned
/// letter at or after position `k`. Each candidate is a prefix of the next.
#[derive(Clone, Debug)]
pub struct Generator {
    delta: EvPeriodicSpinnedWord,
    images: LetterImageMap,
    consumed: usize,
    stall_limit: usize,
}

impl Generator {
    /// Fails with [`Error::WrongClass`] unless `delta` has infinitely many
    /// `L`-spinned letters and at least two recurring letters.
    pub fn new(delta: &EvPeriodicSpinnedWord) -> Result<Generator> {
        let delta = delta.canonicalize();
        if classify(&delta) != DirectiveClass::AperiodicManyL {
            return Err(Error::WrongClass);
        }
        let alphabet = Alphabet::spanning(delta.alph());
        let stall_limit = delta.preperiod().len() + 2 * delta.period().len() + 1;
        Ok(Generator { delta, images: LetterImageMap::identity(alphabet), consumed: 0, stall_limit })
    }

    /// Number of directive letters consumed.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    /// `a_k` for the current `k`.
    fn seed(&self) -> Letter {
        (self.consumed..)
            .map(|i| self.delta.at(i))
            .find(|sl| sl.is_l())
            .expect("infinitely many L-spinned letters")
            .letter
    }

    /// The current candidate prefix.
    pub fn candidate(&self) -> &[Letter] {
        self.images.image(self.seed()).expect("seed is in the alphabet")
    }

    /// Consumes one directive letter.
    pub fn step(&mut self) {
        let sl = self.delta.at(self.consumed);
        self.images.extend(sl).expect("letter is in the alphabet");
        self.consumed += 1;
    }

    /// The first `n` letters of the directed word.
    pub fn prefix(&mut self, n: usize) -> Result<Vec<Letter>> {
        let mut stalled = 0;
        let mut len = self.candidate().len();
        while len < n {
            self.step();
            let next = self.candidate().len();
            if next > len {
                stalled = 0;
            } else {
                stalled += 1;
                if stalled > self.stall_limit {
                    return Err(Error::GenerationStalled);
                }
            }
            len = next;
        }
        Ok(self.candidate()[..n].to_vec())
    }
}

/// The first `n` letters of the episturmian word directed by `delta`.
///
/// An ultimately `R`-spinned `delta` directs several words; `start` picks
/// the one obtained through that recurring letter. It is ignored otherwise.
pub fn directed_prefix(delta: &EvPeriodicSpinnedWord, n: usize, start: Option<Letter>) -> Result<Vec<Letter>> {
    directed_prefix_with(delta, n, start, DEFAULT_MAX_OUTPUT)
}

/// [`directed_prefix`] with an explicit output cap.
pub fn directed_prefix_with(
    delta: &EvPeriodicSpinnedWord,
    n: usize,
    start: Option<Letter>,
    max_output: usize,
) -> Result<Vec<Letter>> {
    if n > max_output {
        return Err(Error::OutputCapExceeded { requested: n, cap: max_output });
    }
    match classify(delta) {
        DirectiveClass::Periodic => {
            let root = periodic_root(delta)?;
            Ok(root.iter().copied().cycle().take(n).collect())
        }
        DirectiveClass::AperiodicManyL => Generator::new(delta)?.prefix(n),
        DirectiveClass::AperiodicUltimatelyR => {
            let x = start.ok_or(Error::AmbiguousDirective)?;
            Generator::new(&flip_to_L(delta, x)?)?.prefix(n)
        }
    }
}

/// Shortest palindrome with prefix `w`.
///
/// `w` followed by the reversal of what precedes its longest palindromic
/// suffix. That suffix is the longest border of `rev(w) # w`.
pub fn pal(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    let s: Vec<Option<Letter>> =
        w.iter().rev().copied().map(Some).chain(Some(None)).chain(w.iter().copied().map(Some)).collect();
    let mut border = alloc::vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = border[i - 1];
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    let lps = border.last().copied().unwrap_or(0);
    let mut out = w.to_vec();
    out.extend(w[..n - lps].iter().rev());
    out
}

/// Prefix of the epistandard word directed by the `L`-spinned `delta`,
/// built by iterated palindromic closure: `u_{k+1} = pal(u_k x_{k+1})`.
///
/// Each step is linear in the current length, so a directive word with a
/// single recurring letter (linear growth) makes this quadratic in `n`.
pub fn epistandard_prefix(delta: &EvPeriodicSpinnedWord, n: usize) -> Result<Vec<Letter>> {
    if !delta.is_l_spinned() {
        return Err(Error::NotLSpinned);
    }
    let mut u: Vec<Letter> = Vec::new();
    for sl in delta.iter() {
        if u.len() >= n {
            break;
        }
        u.push(sl.letter);
        u = pal(&u);
    }
    u.truncate(n);
    Ok(u)
}

/// All factors of length `len`.
pub fn factors(w: &[Letter], len: usize) -> BTreeSet<Vec<Letter>> {
    if len == 0 {
        return BTreeSet::from([Vec::new()]);
    }
    w.windows(len).map(<[Letter]>::to_vec).collect()
}

/// Factors `u` of length `len` such that `ux` is a factor for at least two
/// letters `x`.
pub fn right_special(w: &[Letter], len: usize) -> BTreeSet<Vec<Letter>> {
    let mut followers: BTreeMap<&[Letter], BTreeSet<Letter>> = BTreeMap::new();
    for i in 0..w.len().saturating_sub(len) {
        followers.entry(&w[i..i + len]).or_default().insert(w[i + len]);
    }
    followers.into_iter().filter(|(_, next)| next.len() >= 2).map(|(u, _)| u.to_vec()).collect()
}

/// True iff the reversal of every member is a member.
pub fn is_reversal_closed(set: &BTreeSet<Vec<Letter>>) -> bool {
    set.iter().all(|u| {
        let r: Vec<Letter> = u.iter().rev().copied().collect();
        set.contains(&r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_letters, render_letters};
    use alloc::string::String;

    fn inf(s: &str) -> EvPeriodicSpinnedWord {
        s.parse().unwrap()
    }

    fn letters(s: &str) -> Vec<Letter> {
        parse_letters(s).unwrap()
    }

    fn prefix(s: &str, n: usize) -> String {
        render_letters(&directed_prefix(&inf(s), n, None).unwrap())
    }

    #[test]
    fn prefixes() {
        assert_eq!(prefix("a(b)", 6), "ababab");
        assert_eq!(prefix("B(a)", 6), "ababab");
        assert_eq!(prefix("(abc)", 7), "abacaba");
        assert_eq!(prefix("(ab)", 8), "abaababa");
        assert_eq!(prefix("(a)", 3), "aaa");
        assert_eq!(prefix("(ab)", 0), "");
        let a = Letter::from_char('a');
        let d = inf("A(BCA)");
        assert_eq!(directed_prefix(&d, 4, a).unwrap(), directed_prefix(&inf("a(bcA)"), 4, None).unwrap());
        assert_eq!(directed_prefix(&d, 4, None), Err(Error::AmbiguousDirective));
    }

    #[test]
    fn output_cap() {
        assert_eq!(
            directed_prefix_with(&inf("(ab)"), 11, None, 10),
            Err(Error::OutputCapExceeded { requested: 11, cap: 10 })
        );
    }

    #[test]
    fn generator_is_resumable() {
        let mut g = Generator::new(&inf("(aBc)")).unwrap();
        let short = g.prefix(10).unwrap();
        let long = g.prefix(100).unwrap();
        assert_eq!(&long[..10], &short[..]);
        assert!(g.consumed() > 0);
        assert_eq!(Generator::new(&inf("a(b)")).err(), Some(Error::WrongClass));
    }

    #[test]
    fn palindromic_closure() {
        assert_eq!(render_letters(&pal(&letters("ab"))), "aba");
        assert_eq!(render_letters(&pal(&letters("aa"))), "aa");
        assert_eq!(render_letters(&pal(&letters("abc"))), "abcba");
        assert_eq!(render_letters(&pal(&letters("abacabac"))), "abacabacaba");
        assert_eq!(pal(&[]), Vec::new());
    }

    #[test]
    fn epistandard() {
        let e = |s: &str, n| render_letters(&epistandard_prefix(&inf(s), n).unwrap());
        assert_eq!(e("(abc)", 7), "abacaba");
        assert_eq!(e("(ab)", 8), "abaababa");
        assert_eq!(e("(a)", 3), "aaa");
        assert_eq!(epistandard_prefix(&inf("(aB)"), 3), Err(Error::NotLSpinned));
    }

    #[test]
    fn factor_utilities() {
        let w = letters("abacaba");
        assert_eq!(right_special(&w, 1), BTreeSet::from([letters("a")]));
        assert_eq!(factors(&letters("abab"), 2), BTreeSet::from([letters("ab"), letters("ba")]));
        assert!(is_reversal_closed(&factors(&w, 3)));
        assert!(!is_reversal_closed(&factors(&letters("aab"), 2)));
        assert_eq!(factors(&w, 8), BTreeSet::new());
    }
}
