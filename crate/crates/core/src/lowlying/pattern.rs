//! Word-level test for wrapping a cuff too many times in a row.

use serde::Serialize;

use crate::word::{ArcWord, Seam};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LowLyingVerdict {
    pub low_lying: bool,
    /// Set when the verdict goes beyond the printed `k = 4` patterns.
    pub extrapolated: bool,
}

fn has_run(xs: &[Seam], k: usize) -> bool {
    k > 0 && xs.windows(k).any(|w| w.iter().all(|&s| s == w[0]))
}

/// An alternation of two different letters over `len` positions. With
/// `fold_case`, `bAbA` counts as an alternation of `b` and `a`.
fn has_alternation(xs: &[Seam], len: usize, fold_case: bool) -> bool {
    let key = |s: Seam| if fold_case { s.to_lower() } else { s };
    len >= 2
        && xs.windows(len).any(|w| {
            let (p, q) = (key(w[0]), key(w[1]));
            p.is_a_family() != q.is_a_family()
                && w.iter()
                    .enumerate()
                    .all(|(i, &s)| key(s) == if i % 2 == 0 { p } else { q })
                && (fold_case || p.is_capital() == q.is_capital())
        })
}

/// `k`-low-lying by forbidden patterns: no letter repeated `k` times and no
/// two seams alternating over `2k` letters, ignoring case.
pub fn pattern_low_lying(w: &ArcWord, k: usize) -> LowLyingVerdict {
    let xs = w.seams();
    let low_lying = !has_run(xs, k) && !has_alternation(xs, 2 * k, true);
    let extrapolated = if k == 4 {
        let printed = !has_run(xs, 4) && !has_alternation(xs, 8, false);
        printed != low_lying
    } else {
        true
    };
    LowLyingVerdict {
        low_lying,
        extrapolated,
    }
}
