//! Which episturmian words a spinned infinite word directs, and when two
//! directive words direct a common one.
//!
//! Every directed word gets a canonical [`DirectedWordId`]. A periodic word
//! `z^ω` is identified by the primitive word `z`. An aperiodic word is
//! identified by its normalized directive word, which is unique once it has
//! infinitely many `L`-spinned letters. An ultimately `R`-spinned directive
//! word directs one word per recurring letter; each is reached through
//! [`flip_to_L`].
//!
//! Directing a common word is reflexive and symmetric but not transitive:
//! `a(bcA)` and `Ab(caB)` both share a word with `A(BCA)`, but not with
//! each other.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::morphisms::{Alphabet, LetterImageMap};
use crate::normalizer::normalize_evp;
use crate::words::{
    render_letters, Direction, EvPeriodicSpinnedWord, Letter, Spin, SpinnedLetter, SpinnedWord,
};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DirectiveClass {
    /// One recurring letter: the directed word is periodic.
    Periodic,
    /// Aperiodic, with infinitely many `L`-spinned letters.
    AperiodicManyL,
    /// Aperiodic, with finitely many `L`-spinned letters.
    AperiodicUltimatelyR,
}

impl fmt::Display for DirectiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DirectiveClass::Periodic => "Periodic",
            DirectiveClass::AperiodicManyL => "AperiodicManyL",
            DirectiveClass::AperiodicUltimatelyR => "AperiodicUltimatelyR",
        })
    }
}

/// Canonical identity of an episturmian word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DirectedWordId {
    /// The word is `root^ω`, `root` primitive.
    PeriodicRoot(Vec<Letter>),
    /// Canonical normalized directive word with infinitely many `L`-spins.
    AperiodicNormal(EvPeriodicSpinnedWord),
}

impl fmt::Display for DirectedWordId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectedWordId::PeriodicRoot(root) => write!(f, "root:{}", render_letters(root)),
            DirectedWordId::AperiodicNormal(n) => write!(f, "normal:{n}"),
        }
    }
}

pub fn classify(delta: &EvPeriodicSpinnedWord) -> DirectiveClass {
    let delta = delta.canonicalize();
    if delta.ult().len() == 1 {
        DirectiveClass::Periodic
    } else if delta.period().iter().any(|sl| sl.is_l()) {
        DirectiveClass::AperiodicManyL
    } else {
        DirectiveClass::AperiodicUltimatelyR
    }
}

/// The primitive `z` such that `delta` directs `z^ω`.
///
/// With `x` the only recurring letter and `q` the length of the shortest
/// prefix after which only `x` (with either spin) occurs, `z = μ_{Δ[0..q)}(x)`.
pub fn periodic_root(delta: &EvPeriodicSpinnedWord) -> Result<Vec<Letter>> {
    let delta = delta.canonicalize();
    if classify(&delta) != DirectiveClass::Periodic {
        return Err(Error::WrongClass);
    }
    let x = delta.period()[0].letter;
    let pre = delta.preperiod();
    let q = pre.iter().rposition(|sl| sl.letter != x).map_or(0, |i| i + 1);
    let m = LetterImageMap::mu_over(&pre[..q], Alphabet::spanning(delta.alph()))?;
    let root = m.image(x)?.to_vec();
    debug_assert!(crate::morphisms::is_primitive(&root) == Ok(true));
    Ok(root)
}

/// An `L`-spinned-infinitely-often directive word of the word that the
/// ultimately `R`-spinned `delta` directs through the recurring letter `x`.
///
/// Past the last `L`-spinned letter, the last `x̄` of the first run of `x̄`
/// becomes `x`; after it every letter other than `x` becomes `L`-spinned
/// and every `x̄` stays. The `x`-free stretches between consecutive `x̄`
/// runs are nonempty because at least two letters recur.
#[allow(non_snake_case)]
pub fn flip_to_L(delta: &EvPeriodicSpinnedWord, x: Letter) -> Result<EvPeriodicSpinnedWord> {
    let delta = delta.canonicalize();
    if classify(&delta) != DirectiveClass::AperiodicUltimatelyR {
        return Err(Error::WrongClass);
    }
    if !delta.ult().contains(x) {
        return Err(Error::LetterNotRecurring(x));
    }
    let pre = delta.preperiod();
    let s = pre.iter().rposition(|sl| sl.is_l()).map_or(0, |i| i + 1);
    let mut p = (s..).find(|&i| delta.at(i).letter == x).expect("x recurs");
    while delta.at(p + 1).letter == x {
        p += 1;
    }
    let respin = |i: usize| -> SpinnedLetter {
        let sl = delta.at(i);
        match i.cmp(&p) {
            core::cmp::Ordering::Less => sl,
            core::cmp::Ordering::Equal => x.with_spin(Spin::L),
            core::cmp::Ordering::Greater if sl.letter == x => sl,
            core::cmp::Ordering::Greater => sl.letter.with_spin(Spin::L),
        }
    };
    let k = (p + 1).max(pre.len());
    let preperiod: SpinnedWord = (0..k).map(respin).collect();
    let period: SpinnedWord = (k..k + delta.period().len()).map(respin).collect();
    Ok(EvPeriodicSpinnedWord::new(preperiod, period)?.canonicalize())
}

/// Ids of every episturmian word directed by `delta`: one, unless `delta`
/// is ultimately `R`-spinned, in which case there is one per recurring
/// letter.
pub fn directed_words(delta: &EvPeriodicSpinnedWord) -> Result<BTreeSet<DirectedWordId>> {
    let delta = delta.canonicalize();
    let mut ids = BTreeSet::new();
    match classify(&delta) {
        DirectiveClass::Periodic => {
            ids.insert(DirectedWordId::PeriodicRoot(periodic_root(&delta)?));
        }
        DirectiveClass::AperiodicManyL => {
            ids.insert(DirectedWordId::AperiodicNormal(normalize_evp(&delta)?));
        }
        DirectiveClass::AperiodicUltimatelyR => {
            for x in delta.ult().iter() {
                let n = normalize_evp(&flip_to_L(&delta, x)?)?;
                ids.insert(DirectedWordId::AperiodicNormal(n));
            }
        }
    }
    Ok(ids)
}

/// True iff `d1` and `d2` direct a common episturmian word.
pub fn equivalent(d1: &EvPeriodicSpinnedWord, d2: &EvPeriodicSpinnedWord) -> Result<bool> {
    let a = directed_words(d1)?;
    let b = directed_words(d2)?;
    Ok(!a.is_disjoint(&b))
}

/// Normalized directive word of the aperiodic word directed by `delta`
/// (through `start` when `delta` is ultimately `R`-spinned).
fn normal_form(delta: &EvPeriodicSpinnedWord, start: Option<Letter>) -> Result<EvPeriodicSpinnedWord> {
    match classify(delta) {
        DirectiveClass::Periodic => Err(Error::PeriodicDirective),
        DirectiveClass::AperiodicManyL => normalize_evp(delta),
        DirectiveClass::AperiodicUltimatelyR => {
            let x = start.ok_or(Error::AmbiguousDirective)?;
            normalize_evp(&flip_to_L(delta, x)?)
        }
    }
}

/// True iff the word directed by `delta` has no other spinned directive
/// word.
///
/// That holds exactly when its normalized directive word is wavy and has no
/// factor in `⋃ x 𝒜* x̄` (nor in `⋃ x̄ 𝒜̄* x`, which normalization already
/// excludes). Periodic words always have several.
pub fn unique_directive(delta: &EvPeriodicSpinnedWord, start: Option<Letter>) -> Result<bool> {
    let n = match normal_form(delta, start) {
        Err(Error::PeriodicDirective) => return Ok(false),
        other => other?,
    };
    Ok(n.is_wavy()
        && !n.has_forbidden_factor(Direction::RtoL)
        && !n.has_forbidden_factor(Direction::LtoR))
}

/// Largest accepted window for [`enumerate_respins`].
pub const MAX_WINDOW: usize = 20;

/// Every respin of the first `k` letters of `delta` that directs a common
/// word with `delta`, in lexicographic spin order (`L < R`), canonical.
///
/// Letters past the window, and all underlying letters, are kept.
pub fn enumerate_respins(delta: &EvPeriodicSpinnedWord, k: usize) -> Result<Vec<EvPeriodicSpinnedWord>> {
    if k > MAX_WINDOW {
        return Err(Error::WindowTooLarge { window: k, max: MAX_WINDOW });
    }
    let delta = delta.canonicalize();
    let target = directed_words(&delta)?;
    let head_len = k.max(delta.preperiod().len());
    let head = delta.unfold(head_len);
    let period = delta.shift(head_len).period().clone();

    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let mut pre = head.clone().into_letters();
        for (i, sl) in pre.iter_mut().take(k).enumerate() {
            let spin = if mask >> (k - 1 - i) & 1 == 1 { Spin::R } else { Spin::L };
            *sl = sl.letter.with_spin(spin);
        }
        let candidate = EvPeriodicSpinnedWord::new(pre.into(), period.clone())?.canonicalize();
        if !directed_words(&candidate)?.is_disjoint(&target) {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// Sturmian words have either exactly one spinned directive word or
/// infinitely many.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SturmianClass {
    Unique,
    InfinitelyMany,
}

impl fmt::Display for SturmianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SturmianClass::Unique => "Unique",
            SturmianClass::InfinitelyMany => "InfinitelyMany",
        })
    }
}

/// For a binary aperiodic directive word: `Unique` iff the normalized
/// directive word is regular and wavy.
pub fn classify_sturmian(delta: &EvPeriodicSpinnedWord, start: Option<Letter>) -> Result<SturmianClass> {
    if delta.alph().len() != 2 {
        return Err(Error::NotBinary);
    }
    let n = normal_form(&delta.canonicalize(), start)?;
    Ok(if n.is_regular() && n.is_wavy() { SturmianClass::Unique } else { SturmianClass::InfinitelyMany })
}
