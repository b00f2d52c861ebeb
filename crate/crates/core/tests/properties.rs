mod common;

use std::collections::HashSet;

use pants_arcs::census::{conjectured_max, conjectured_maximizer};
use pants_arcs::lowlying::{decompose, ContinuedFraction};
use pants_arcs::{
    chains, enumerate_words, positivize, resolve_chain, segments, self_intersection,
    self_intersection_with_stats, ArcWord, Intersector, Puncture, Seam,
};
use pants_arcs::family::{family_word, FamilyId};
use proptest::prelude::*;

/// Valid words built letter by letter, so no rejection is needed for
/// reducedness; endpoint clashes are filtered.
fn arb_word(max_seams: usize) -> impl Strategy<Value = ArcWord> {
    (
        0..3usize,
        0..4usize,
        prop::collection::vec(0..3usize, 0..max_seams),
        0..3usize,
    )
        .prop_filter_map("endpoint clash", |(s, first, steps, e)| {
            let order = Seam::ENUMERATION_ORDER;
            let mut seams = vec![order[first]];
            for k in steps {
                let prev = *seams.last().unwrap();
                let options: Vec<Seam> = order.into_iter().filter(|&x| x != prev.inverse()).collect();
                seams.push(options[k]);
            }
            ArcWord::new(Puncture::ALL[s], seams, Puncture::ALL[e]).ok()
        })
}

proptest! {
    #[test]
    fn text_round_trip(w in arb_word(20)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<ArcWord>().unwrap(), w);
    }

    #[test]
    fn inverse_and_relabel_are_involutions(w in arb_word(20)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.relabel().relabel(), w.clone());
        prop_assert_eq!(w.inverse().relabel(), w.relabel().inverse());
    }

    #[test]
    fn symmetric_counts(w in arb_word(16)) {
        let i = self_intersection(&w);
        prop_assert_eq!(self_intersection(&w.inverse()), i);
        prop_assert_eq!(self_intersection(&w.relabel()), i);
    }

    #[test]
    fn chain_resolution_agrees_with_lift(w in arb_word(12)) {
        prop_assert_eq!(self_intersection(&w), common::hyperbolic_i(&w));
    }

    #[test]
    fn positivize_keeps_shape(w in arb_word(12)) {
        let p = positivize(&w);
        prop_assert!(p.is_lower_case());
        prop_assert_eq!(p.word_length(), w.word_length());
        prop_assert_eq!(p.seam_counts(), w.seam_counts());
        prop_assert!(self_intersection(&p) <= self_intersection(&w));
    }

    #[test]
    fn any_seed_gives_the_same_chain(w in arb_word(14)) {
        let segs = segments(&w);
        for c in chains(&w) {
            for &(i, j) in &c.members {
                let again = resolve_chain(&segs, i, j).unwrap();
                prop_assert_eq!(again.crossing, c.crossing);
                let a: HashSet<_> = again.members.iter().collect();
                let b: HashSet<_> = c.members.iter().collect();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn cf_tail_identity(mut q in prop::collection::vec(1u32..6, 1..12), last in 2u32..6) {
        q.push(last);
        let long: Vec<u32> = q[..q.len() - 1].iter().copied().chain([last - 1, 1]).collect();
        let a = ContinuedFraction::new(q).unwrap().eval();
        let b = ContinuedFraction::new(long).unwrap().eval();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn decomposition_is_self_consistent(n in 0u64..20_000) {
        let d = decompose(n);
        prop_assert_eq!(d.target, n);
        prop_assert!(d.max_quotient() <= 2);
        if n <= 300 {
            prop_assert_eq!(self_intersection(&d.word), n);
        }
    }
}

#[test]
fn bounds_hold_up_to_length_12() {
    let mut counter = Intersector::new();
    for wl in 2..=12 {
        let l = (wl - 2) as u64;
        let lower = if l.is_multiple_of(2) { (l / 2).saturating_sub(1) } else { (l - 1) / 2 };
        for w in enumerate_words(wl) {
            let i = counter.count(&w);
            assert!(lower <= i && i <= l * (l + 1) / 2, "{w}: {i}");
        }
    }
}

#[test]
fn positive_words_respect_seam_count_bound() {
    let mut counter = Intersector::new();
    for wl in 2..=10 {
        for w in enumerate_words(wl).filter(ArcWord::is_positive) {
            let c = w.seam_counts();
            let i = counter.count(&w);
            assert!(i + 1 >= c.alpha.max(c.beta) as u64, "{w}: {i}");
        }
    }
}

#[test]
fn extension_steps_grow_quadratically() {
    for id in [FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4] {
        for n in [10, 50, 100, 200] {
            let w = family_word(id, n, None).unwrap();
            let l = w.seam_len() as u64;
            let (_, stats) = self_intersection_with_stats(&w);
            assert!(stats.steps <= 2 * l * l, "{id} n={n}: {} steps for L={l}", stats.steps);
        }
    }
}

#[test]
fn conjectured_maximizer_attains_the_bound() {
    for wl in 3..=16 {
        let w = conjectured_maximizer(wl);
        assert_eq!(w.word_length(), wl);
        assert_eq!(self_intersection(&w), conjectured_max(wl), "{w}");
    }
}
