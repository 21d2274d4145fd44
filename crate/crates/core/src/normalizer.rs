//! Streaming normalization of spinned infinite words.
//!
//! Feeding a directive word letter by letter through [`NormalizerState`]
//! runs the finite normalization incrementally. Everything up to the last
//! `L`-spinned letter of the current normal form is final: later input only
//! rewrites the trailing `R`-spinned run. With infinitely many `L`-spinned
//! letters the final prefixes converge to the normalized directive word of
//! the episturmian word.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::blocks::push_normalized;
use crate::words::{EvPeriodicSpinnedWord, SpinnedLetter, SpinnedWord};
use crate::{Error, Result};

/// Emitted (final) prefix plus the pending `R`-spinned suffix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizerState {
    emitted: SpinnedWord,
    pending: SpinnedWord,
    consumed: usize,
    max_pending: Option<usize>,
}

impl NormalizerState {
    pub fn new() -> Self {
        Self::default()
    }

    /// A state whose [`push`](Self::push) fails once the pending run would
    /// exceed `cap` letters.
    pub fn with_max_pending(cap: usize) -> Self {
        NormalizerState { max_pending: Some(cap), ..Self::default() }
    }

    /// Final prefix; empty or ending with an `L`-spinned letter.
    pub fn emitted(&self) -> &SpinnedWord {
        &self.emitted
    }

    /// `R`-spinned suffix that later input may still rewrite.
    pub fn pending(&self) -> &SpinnedWord {
        &self.pending
    }

    /// Number of input letters pushed so far.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    /// `emitted · pending`: the normal form of everything pushed so far.
    pub fn current(&self) -> SpinnedWord {
        let mut w = self.emitted.clone();
        w.extend_from_slice(&self.pending);
        w
    }

    /// Consumes one letter and returns the letters it made final.
    pub fn push(&mut self, sl: SpinnedLetter) -> Result<SpinnedWord> {
        self.consumed += 1;
        if sl.is_r() {
            if let Some(cap) = self.max_pending {
                if self.pending.len() >= cap {
                    return Err(Error::PendingOverflow { cap });
                }
            }
            self.pending.push(sl);
            return Ok(SpinnedWord::new());
        }
        let mut tail = core::mem::take(&mut self.pending).into_letters();
        push_normalized(&mut tail, sl);
        let last_l = tail.iter().rposition(|s| s.is_l()).expect("an L-spinned letter was pushed");
        self.pending = tail.split_off(last_l + 1).into();
        self.emitted.extend_from_slice(&tail);
        Ok(tail.into())
    }
}

/// Default cap on the pending run for [`normalize_evp`]:
/// `4 · (|preperiod| + |period|) · (|alphabet| + 2)`.
pub fn default_pending_cap(delta: &EvPeriodicSpinnedWord) -> usize {
    4 * (delta.preperiod().len() + delta.period().len()) * (delta.alph().len() + 2)
}

/// Normalized directive word of the aperiodic episturmian word directed by
/// `delta`, which must have at least two recurring letters and infinitely
/// many `L`-spinned letters.
pub fn normalize_evp(delta: &EvPeriodicSpinnedWord) -> Result<EvPeriodicSpinnedWord> {
    normalize_evp_with(delta, None)
}

/// [`normalize_evp`] with an explicit pending cap (`None` for the default).
///
/// The input is fed through a [`NormalizerState`]; at every period boundary
/// the pending run is recorded. The normalizer is a deterministic
/// transducer, so the first repeated pending run closes a cycle: what was
/// emitted between the two occurrences is the output period.
pub fn normalize_evp_with(
    delta: &EvPeriodicSpinnedWord,
    max_pending: Option<usize>,
) -> Result<EvPeriodicSpinnedWord> {
    let delta = delta.canonicalize();
    if delta.ult().len() < 2 {
        return Err(Error::PeriodicDirective);
    }
    if !delta.period().iter().any(|sl| sl.is_l()) {
        return Err(Error::UltimatelyRSpinned);
    }
    let cap = max_pending.unwrap_or_else(|| default_pending_cap(&delta));
    let overflow = |e: Error| match e {
        Error::PendingOverflow { .. } => Error::CycleNotFound,
        e => e,
    };

    let mut state = NormalizerState::with_max_pending(cap);
    for &sl in delta.preperiod().iter() {
        state.push(sl).map_err(overflow)?;
    }
    // phase is 0 at every boundary, so the pending run is the whole key
    let mut boundaries: BTreeMap<SpinnedWord, usize> = BTreeMap::new();
    let max_rounds = cap + 2;
    for _ in 0..max_rounds {
        if let Some(&start) = boundaries.get(state.pending()) {
            let emitted: Vec<SpinnedLetter> = state.emitted().to_vec();
            let period = SpinnedWord::from(emitted[start..].to_vec());
            let pre = SpinnedWord::from(emitted[..start].to_vec());
            return Ok(EvPeriodicSpinnedWord::new(pre, period)?.canonicalize());
        }
        boundaries.insert(state.pending().clone(), state.emitted().len());
        for &sl in delta.period().iter() {
            state.push(sl).map_err(overflow)?;
        }
    }
    Err(Error::CycleNotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::normalize_finite;
    use crate::words::Direction;
    use alloc::string::ToString;

    fn inf(s: &str) -> EvPeriodicSpinnedWord {
        s.parse().unwrap()
    }

    fn push_all(state: &mut NormalizerState, s: &str) -> SpinnedWord {
        let mut out = SpinnedWord::new();
        for sl in s.parse::<SpinnedWord>().unwrap().iter() {
            out.extend_from_slice(&state.push(*sl).unwrap());
        }
        out
    }

    #[test]
    fn push_examples() {
        let mut st = NormalizerState::new();
        assert_eq!(push_all(&mut st, "ABC").to_string(), "");
        assert_eq!(push_all(&mut st, "a").to_string(), "abc");
        assert_eq!(st.pending().to_string(), "A");

        let mut st = NormalizerState::new();
        assert_eq!(push_all(&mut st, "abc").to_string(), "abc");
        assert!(st.pending().is_empty());

        let mut st = NormalizerState::new();
        push_all(&mut st, "B");
        assert_eq!(push_all(&mut st, "b").to_string(), "b");
        assert_eq!(st.pending().to_string(), "B");
    }

    #[test]
    fn push_tracks_finite_normal_form() {
        let input: SpinnedWord = "ABcBaBACBACa".parse().unwrap();
        let mut st = NormalizerState::new();
        for n in 0..input.len() {
            st.push(input[n]).unwrap();
            assert_eq!(st.current(), normalize_finite(&input[..=n]));
            assert_eq!(st.consumed(), n + 1);
        }
    }

    #[test]
    fn pending_cap() {
        let mut st = NormalizerState::with_max_pending(2);
        push_all(&mut st, "AB");
        let c = "C".parse::<SpinnedWord>().unwrap()[0];
        assert_eq!(st.push(c), Err(Error::PendingOverflow { cap: 2 }));
    }

    #[test]
    fn evp_examples() {
        assert_eq!(normalize_evp(&inf("(abc)")).unwrap(), inf("(abc)"));
        assert_eq!(normalize_evp(&inf("ABC(aBC)")).unwrap(), inf("(abc)"));
        assert_eq!(normalize_evp(&inf("abcABC(aBC)")).unwrap(), inf("(abc)"));
        assert_eq!(normalize_evp(&inf("abcabcABC(aBC)")).unwrap(), inf("(abc)"));
    }

    #[test]
    fn evp_errors() {
        assert_eq!(normalize_evp(&inf("ab(B)")), Err(Error::PeriodicDirective));
        assert_eq!(normalize_evp(&inf("(aA)")), Err(Error::PeriodicDirective));
        assert_eq!(normalize_evp(&inf("a(BCA)")), Err(Error::UltimatelyRSpinned));
        assert_eq!(normalize_evp_with(&inf("(ABCDEFa)"), Some(3)), Err(Error::CycleNotFound));
    }

    #[test]
    fn evp_output_is_normalized() {
        for s in ["(aBAb)", "AB(CbaC)", "ABCABC(abcA)", "(CBAcbA)", "a(BBAAb)"] {
            let n = normalize_evp(&inf(s)).unwrap();
            assert!(!n.has_forbidden_factor(Direction::RtoL), "{s} -> {n}");
            assert!(n.period().iter().any(|sl| sl.is_l()));
            assert_eq!(n.underlying().unfold(60), inf(s).underlying().unfold(60));
            assert_eq!(normalize_evp(&n).unwrap(), n);
        }
    }
}
