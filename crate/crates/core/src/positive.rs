//! Rewriting a word into a positive one of the same shape.

use crate::intersect::Intersector;
use crate::word::{ArcWord, Seam};

/// A lower-case word with the same endpoints, length and seam counts, whose
/// self-intersection number is at most that of `w`.
///
/// Capital blocks are rewritten left to right by reversing and inverting
/// them. When that would break an endpoint rule the block is lowered in
/// place. If the result still intersects more often than `w`, the
/// lower-case words with the same data are searched in lexicographic order.
pub fn positivize(w: &ArcWord) -> ArcWord {
    if w.seam_len() == 0 || w.is_lower_case() {
        return w.clone();
    }
    if w.seams().iter().all(|s| s.is_capital()) {
        return w.inverse();
    }
    let (start, end) = (w.start(), w.end());
    let mut xs = w.seams().to_vec();
    while let Some(s) = xs.iter().position(|x| x.is_capital()) {
        let e = xs[s..]
            .iter()
            .position(|x| !x.is_capital())
            .map_or(xs.len(), |k| s + k);
        let mut candidate = xs.clone();
        for (k, x) in xs[s..e].iter().rev().enumerate() {
            candidate[s + k] = x.inverse();
        }
        if ArcWord::new(start, candidate.clone(), end).is_ok() {
            xs = candidate;
        } else {
            for x in &mut xs[s..e] {
                *x = x.to_lower();
            }
        }
    }
    let rewritten = ArcWord::new_unchecked(start, xs, end);
    let mut counter = Intersector::new();
    let bound = counter.count(w);
    if counter.count(&rewritten) <= bound {
        return rewritten;
    }
    lower_case_search(w, bound, &mut counter).unwrap_or(rewritten)
}

fn lower_case_search(w: &ArcWord, bound: u64, counter: &mut Intersector) -> Option<ArcWord> {
    let len = w.seam_len();
    let alpha = w.seam_counts().alpha;
    // bit k set means position k carries b; ascending masks with the high
    // bit first give lexicographic order over {a < b}
    let mut found = None;
    let mut seams = vec![Seam::A; len];
    for mask in 0u64..(1u64 << len) {
        if (len as u32 - mask.count_ones()) as usize != alpha {
            continue;
        }
        for (k, s) in seams.iter_mut().enumerate() {
            *s = if mask >> (len - 1 - k) & 1 == 1 {
                Seam::B
            } else {
                Seam::A
            };
        }
        let Ok(candidate) = ArcWord::new(w.start(), seams.clone(), w.end()) else {
            continue;
        };
        if counter.count(&candidate) <= bound {
            found = Some(candidate);
            break;
        }
    }
    found
}
