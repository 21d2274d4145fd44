//! Episturmian words and pure episturmian morphisms.
//!
//! Spinned directive words are written as ASCII text: a lowercase letter is
//! an `L`-spinned letter, an uppercase letter is `R`-spinned, and an
//! eventually periodic infinite word is written `pre(period)`, e.g.
//! `ABC(aBC)`.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! Composition follows the juxtaposition convention: `mu("ab")` is
//! `L_a ∘ L_b`, so the *leftmost* directive letter is applied *last*
//! (outermost). Every downstream operation depends on this order.

#![no_std]

extern crate alloc;

pub mod blocks;
pub mod equivalence;
mod error;
pub mod generate;
pub mod morphisms;
pub mod normalizer;
pub mod words;

pub use blocks::{block_equivalent_bfs, block_sites, is_normalized_finite, normalize_finite, BlockSite};
pub use equivalence::{
    classify, classify_sturmian, directed_words, enumerate_respins, equivalent, flip_to_L,
    periodic_root, unique_directive, DirectedWordId, DirectiveClass, SturmianClass,
};
pub use error::Error;
pub use generate::{
    directed_prefix, directed_prefix_with, epistandard_prefix, factors, is_reversal_closed, pal,
    right_special, Generator,
};
pub use morphisms::{is_primitive, primitive_root, Alphabet, LetterImageMap};
pub use normalizer::{normalize_evp, normalize_evp_with, NormalizerState};
pub use words::{
    parse, Direction, EvPeriodicSpinnedWord, Letter, Spin, SpinnedLetter, SpinnedWord, Word,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
