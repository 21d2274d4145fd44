mod common;

use common::*;
use episturm_core::blocks::{apply_block, block_class};
use episturm_core::{
    block_equivalent_bfs, block_sites, is_normalized_finite, normalize_finite, LetterImageMap,
    SpinnedWord,
};
use proptest::prelude::*;

#[test]
fn worked_examples() {
    assert!(block_equivalent_bfs(&fin("BAbCbAC"), &fin("babcBAC")));
    assert_eq!(normalize_finite(&fin("ABcBaBACBACa")).to_string(), "ABcBaBacbAcA");
    // the normal form is the only normalized member of its class
    let class = block_class(&fin("ABcBaBACBACa"));
    let normalized: Vec<&SpinnedWord> = class.iter().filter(|w| is_normalized_finite(w)).collect();
    assert_eq!(normalized.len(), 1);
    assert_eq!(normalized[0].to_string(), "ABcBaBacbAcA");
}

fn mu(w: &SpinnedWord) -> LetterImageMap {
    LetterImageMap::mu_over(w, episturm_core::Alphabet::new(3)).unwrap()
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn block_transformations_preserve_mu(w in word(3, 0..10)) {
        for site in block_sites(&w) {
            let v = apply_block(&w, site).unwrap();
            prop_assert_eq!(v.underlying(), w.underlying());
            prop_assert_eq!(mu(&v), mu(&w));
        }
    }

    #[test]
    fn three_oracles_agree(w1 in word(3, 0..=8), spins in proptest::collection::vec(any::<bool>(), 8)) {
        let w2 = respin(&w1, &spins);
        let bfs = block_equivalent_bfs(&w1, &w2);
        let images = mu(&w1) == mu(&w2);
        let normal = normalize_finite(&w1) == normalize_finite(&w2);
        prop_assert_eq!(bfs, images, "{} {}", w1, w2);
        prop_assert_eq!(images, normal, "{} {}", w1, w2);
    }

    #[test]
    fn normalization_properties(w in word(3, 0..12)) {
        let n = normalize_finite(&w);
        prop_assert_eq!(n.underlying(), w.underlying());
        prop_assert!(is_normalized_finite(&n));
        prop_assert_eq!(normalize_finite(&n), n.clone());
        prop_assert_eq!(mu(&n), mu(&w));
    }

    #[test]
    fn normal_form_is_unique_in_class(w in word(3, 0..=9)) {
        let n = normalize_finite(&w);
        for member in block_class(&w) {
            if is_normalized_finite(&member) {
                prop_assert_eq!(&member, &n);
            }
        }
    }
}
