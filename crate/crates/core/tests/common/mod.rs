//! Strategies and independent oracles shared by the integration tests.
//!
//! Nothing here calls into the normalizer or the equivalence procedure; the
//! oracles work on plain strings so they can check those modules.

#![allow(dead_code)]

use episturm_core::{EvPeriodicSpinnedWord, Letter, Spin, SpinnedLetter, SpinnedWord};
use proptest::prelude::*;

pub fn letter(i: usize) -> Letter {
    Letter::new(i).unwrap()
}

pub fn spinned(alphabet: usize) -> impl Strategy<Value = SpinnedLetter> {
    (0..alphabet, any::<bool>())
        .prop_map(|(i, r)| letter(i).with_spin(if r { Spin::R } else { Spin::L }))
}

pub fn word(alphabet: usize, len: impl Into<proptest::collection::SizeRange>) -> impl Strategy<Value = SpinnedWord> {
    proptest::collection::vec(spinned(alphabet), len).prop_map(SpinnedWord::from)
}

pub fn l_word(alphabet: usize, len: impl Into<proptest::collection::SizeRange>) -> impl Strategy<Value = SpinnedWord> {
    proptest::collection::vec((0..alphabet).prop_map(|i| letter(i).with_spin(Spin::L)), len)
        .prop_map(SpinnedWord::from)
}

/// Canonical eventually periodic words.
pub fn evp(alphabet: usize, max_pre: usize, max_per: usize) -> impl Strategy<Value = EvPeriodicSpinnedWord> {
    (word(alphabet, 0..=max_pre), word(alphabet, 1..=max_per))
        .prop_map(|(p, q)| EvPeriodicSpinnedWord::new(p, q).unwrap().canonicalize())
}

pub fn l_evp(alphabet: usize, max_pre: usize, max_per: usize) -> impl Strategy<Value = EvPeriodicSpinnedWord> {
    (l_word(alphabet, 0..=max_pre), l_word(alphabet, 1..=max_per))
        .prop_map(|(p, q)| EvPeriodicSpinnedWord::new(p, q).unwrap().canonicalize())
}

/// Same underlying word, spins redrawn.
pub fn respin(w: &[SpinnedLetter], spins: &[bool]) -> SpinnedWord {
    w.iter()
        .zip(spins.iter().cycle())
        .map(|(sl, &r)| sl.letter.with_spin(if r { Spin::R } else { Spin::L }))
        .collect()
}

pub fn s(w: &impl ToString) -> String {
    w.to_string()
}

pub fn inf(text: &str) -> EvPeriodicSpinnedWord {
    text.parse().unwrap()
}

pub fn fin(text: &str) -> SpinnedWord {
    text.parse().unwrap()
}

pub fn chars(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_char()).collect()
}

/// Shortest palindrome starting with `w`, by trying every extension.
pub fn brute_pal(w: &str) -> String {
    let b = w.as_bytes();
    for i in 0..=b.len() {
        let mut cand = b.to_vec();
        cand.extend(b[..i].iter().rev());
        if cand.iter().eq(cand.iter().rev()) {
            return String::from_utf8(cand).unwrap();
        }
    }
    unreachable!()
}

pub fn brute_epistandard(directive: &str, n: usize) -> String {
    let mut u = String::new();
    for c in directive.chars().cycle() {
        if u.len() >= n {
            break;
        }
        u.push(c);
        u = brute_pal(&u);
    }
    u.truncate(n);
    u
}

/// Undoes `L_x` (`spin_r = false`) or `R_x` on a finite prefix of an image.
///
/// Returns `None` if `u` is not a prefix of any image; an incomplete last
/// block is dropped.
pub fn desubstitute(u: &[u8], x: u8, spin_r: bool) -> Option<Vec<u8>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < u.len() {
        if !spin_r {
            // L_x: x -> x, y -> xy
            if u[i] != x {
                return None;
            }
            match u.get(i + 1) {
                None => break,
                Some(&y) if y != x => {
                    out.push(y);
                    i += 2;
                }
                Some(_) => {
                    out.push(x);
                    i += 1;
                }
            }
        } else {
            // R_x: x -> x, y -> yx
            if u[i] == x {
                out.push(x);
                i += 1;
            } else {
                match u.get(i + 1) {
                    None => break,
                    Some(&n) if n == x => {
                        out.push(u[i]);
                        i += 2;
                    }
                    Some(_) => return None,
                }
            }
        }
    }
    Some(out)
}

/// True iff `prefix` survives `steps` successive desubstitutions along
/// `directive`, i.e. it is consistent with being a prefix of a word that
/// `directive` directs.
pub fn consistent_with(prefix: &str, directive: &EvPeriodicSpinnedWord, steps: usize) -> bool {
    let mut u = prefix.as_bytes().to_vec();
    for sl in directive.iter().take(steps) {
        if u.len() <= 1 {
            return true;
        }
        match desubstitute(&u, sl.letter.to_char() as u8, sl.is_r()) {
            Some(v) => u = v,
            None => return false,
        }
    }
    true
}

/// Scan for `ĀB̄*a` or `B̄Ā*b` on the rendered text (binary words only).
pub fn has_bhz_factor(text: &str) -> bool {
    let b = text.as_bytes();
    for (i, &c) in b.iter().enumerate() {
        let (other, close) = match c {
            b'A' => (b'B', b'a'),
            b'B' => (b'A', b'b'),
            _ => continue,
        };
        let mut j = i + 1;
        while j < b.len() && b[j] == other {
            j += 1;
        }
        if j < b.len() && b[j] == close {
            return true;
        }
    }
    false
}

/// Rendered text of the first `n` letters.
pub fn unfold_text(w: &EvPeriodicSpinnedWord, n: usize) -> String {
    w.unfold(n).to_string()
}

/// Integration tests have no `lib.rs` to anchor regression files next to.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}
