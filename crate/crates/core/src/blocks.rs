//! Block-transformations on finite spinned words and the normal form of
//! pure episturmian morphisms.
//!
//! An `x`-based block is `x v x` with `v` an `x`-free word. A
//! block-transformation replaces an occurrence of `x v x̄` (with `v`
//! `L`-spinned) by `x̄ v̄ x`, or the reverse. Both directions flip every spin
//! of the occurrence. Two words related by a chain of such replacements
//! direct the same morphism, and conversely.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::words::{Direction, Spin, SpinnedLetter, SpinnedWord};
use crate::{Error, Result};

/// Occurrence of `x v x̄` (`LtoR`) or `x̄ v̄ x` (`RtoL`) at `start..end`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BlockSite {
    pub start: usize,
    pub end: usize,
    pub direction: Direction,
}

/// The site starting at `start`, if there is one. There is at most one:
/// the end is the next occurrence of the same underlying letter.
fn site_at(w: &[SpinnedLetter], start: usize) -> Option<BlockSite> {
    let first = w[start];
    for (j, sl) in w.iter().enumerate().skip(start + 1) {
        if sl.letter == first.letter {
            return (sl.spin != first.spin).then(|| BlockSite {
                start,
                end: j + 1,
                direction: match first.spin {
                    Spin::L => Direction::LtoR,
                    Spin::R => Direction::RtoL,
                },
            });
        }
        if sl.spin != first.spin {
            return None;
        }
    }
    None
}

/// Every place where a block-transformation applies, ordered by start.
pub fn block_sites(w: &[SpinnedLetter]) -> Vec<BlockSite> {
    (0..w.len()).filter_map(|i| site_at(w, i)).collect()
}

/// Applies the block-transformation at `site`.
pub fn apply_block(w: &[SpinnedLetter], site: BlockSite) -> Result<SpinnedWord> {
    if site.start >= w.len() || site_at(w, site.start) != Some(site) {
        return Err(Error::StaleSite);
    }
    let mut out = w.to_vec();
    for sl in &mut out[site.start..site.end] {
        *sl = sl.opposite();
    }
    Ok(out.into())
}

/// All words reachable from `w` by block-transformations, `w` included.
pub fn block_class(w: &[SpinnedLetter]) -> BTreeSet<SpinnedWord> {
    let start = SpinnedWord::from(w.to_vec());
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for site in block_sites(&cur) {
            let next = apply_block(&cur, site).expect("site from block_sites");
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Breadth-first search from `w1` for `w2` under block-transformations.
///
/// Brute force over at most `2^|w1|` spin assignments.
pub fn block_equivalent_bfs(w1: &[SpinnedLetter], w2: &[SpinnedLetter]) -> bool {
    if w1.len() != w2.len() || w1.iter().zip(w2).any(|(a, b)| a.letter != b.letter) {
        return false;
    }
    if w1 == w2 {
        return true;
    }
    let target = SpinnedWord::from(w2.to_vec());
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let start = SpinnedWord::from(w1.to_vec());
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for site in block_sites(&cur) {
            let next = apply_block(&cur, site).expect("site from block_sites");
            if next == target {
                return true;
            }
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    false
}

/// Appends `sl` to the normalized word `out`, keeping it normalized and
/// directing `μ_{out}·μ_{sl}`.
///
/// An `L`-spinned `x` arriving after an `R`-run that contains `x̄` rewrites
/// `p x̄ ū1 x̄ ū2 … x̄ ūk · x` into `p x u1 x̄ u2 … x̄ uk x̄`, anchored at the
/// first `x̄` of the run.
pub(crate) fn push_normalized(out: &mut Vec<SpinnedLetter>, sl: SpinnedLetter) {
    if sl.is_r() {
        out.push(sl);
        return;
    }
    let x = sl.letter;
    let run_start = out.iter().rposition(|s| s.is_l()).map_or(0, |i| i + 1);
    match out[run_start..].iter().position(|s| s.letter == x) {
        None => out.push(sl),
        Some(offset) => {
            let anchor = run_start + offset;
            out[anchor].spin = Spin::L;
            for s in &mut out[anchor + 1..] {
                if s.letter != x {
                    s.spin = Spin::L;
                }
            }
            out.push(sl.opposite());
        }
    }
}

/// The unique word directing `μ_w` with no factor in `⋃ x̄ 𝒜̄* x`.
pub fn normalize_finite(w: &[SpinnedLetter]) -> SpinnedWord {
    let mut out = Vec::with_capacity(w.len());
    for &sl in w {
        push_normalized(&mut out, sl);
    }
    out.into()
}

pub fn is_normalized_finite(w: &[SpinnedLetter]) -> bool {
    !crate::words::scan_forbidden(w.iter().copied(), Direction::RtoL)
}
