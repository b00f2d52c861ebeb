mod common;

use common::{chords_cross, circle_point, hyperbolic_i, lift_endpoints, transfer_matrix_count, Cusp};
use pants_arcs::family::{family_word, FamilyId};
use pants_arcs::lowlying::family_cf;
use pants_arcs::planar::{classify_decidable, segment_labels, PairClass, Segment};
use pants_arcs::{enumerate_words, self_intersection, ArcWord, Intersector};

fn w(s: &str) -> ArcWord {
    s.parse().unwrap()
}

#[test]
fn hyperbolic_oracle_on_small_cases() {
    for (s, i) in [("1BABA2", 2), ("3aB1", 3), ("12", 0), ("1b1", 0), ("2a2", 0), ("3a3", 0)] {
        assert_eq!(hyperbolic_i(&w(s)), self_intersection(&w(s)), "{s}");
        if s == "1BABA2" {
            assert_eq!(hyperbolic_i(&w(s)), i);
        }
    }
}

#[test]
fn chain_resolution_matches_hyperbolic_lift_up_to_length_9() {
    let mut counter = Intersector::new();
    for wl in 2..=9 {
        for word in enumerate_words(wl) {
            assert_eq!(counter.count(&word), hyperbolic_i(&word), "{word}");
        }
    }
}

#[test]
fn enumeration_counts_match_transfer_matrix() {
    for wl in 2..=12 {
        assert_eq!(enumerate_words(wl).count() as u64, transfer_matrix_count(wl), "length {wl}");
    }
    assert_eq!(transfer_matrix_count(3), 16);
    assert_eq!(transfer_matrix_count(8), 16 * 3u64.pow(5));
}

#[test]
fn enumeration_is_strictly_increasing_and_unique() {
    let rank = |c: char| "123ABab".find(c).unwrap();
    for wl in 2..=8 {
        let words: Vec<String> = enumerate_words(wl).map(|w| w.to_string()).collect();
        for pair in words.windows(2) {
            let a: Vec<usize> = pair[0].chars().map(rank).collect();
            let b: Vec<usize> = pair[1].chars().map(rank).collect();
            assert!(a < b, "{} !< {}", pair[0], pair[1]);
        }
    }
}

#[test]
fn family_endpoint_is_negated_continued_fraction() {
    for id in FamilyId::LOW_LYING {
        for n in 0..6 {
            let m = id.takes_m().then_some(2);
            let Ok(word) = family_word(id, n, m) else { continue };
            let cf = family_cf(id, n, m).unwrap().eval();
            let (_, q, _) = lift_endpoints(&word);
            let (p, d) = q.parts();
            let (num, den): (i128, i128) = (
                cf.numerator().try_into().unwrap(),
                cf.denominator().try_into().unwrap(),
            );
            assert_eq!(Cusp::new(p, d), Cusp::new(-num, den), "{id} n={n} {word}");
        }
    }
}

#[test]
fn decidable_pairs_match_circle_chords() {
    let labels = segment_labels();
    assert_eq!(labels.len(), 28);
    let mut decided = 0;
    for x in &labels {
        for y in &labels {
            let (s, t) = (Segment::from_label(x, 1).unwrap(), Segment::from_label(y, 2).unwrap());
            let class = classify_decidable(&s, &t);
            if class == PairClass::Undecidable {
                continue;
            }
            decided += 1;
            // Corners shared between the two segments never count.
            let shares_corner = [s.from, s.to].iter().any(|v| *v == t.from || *v == t.to);
            let crossing = !shares_corner
                && chords_cross(
                    circle_point(s.from, 0.0),
                    circle_point(s.to, 0.0),
                    circle_point(t.from, 0.0),
                    circle_point(t.to, 0.0),
                );
            assert_eq!(class == PairClass::Intersecting, crossing, "{x} {y}");
        }
    }
    assert_eq!(decided, 264 + 144);
}
