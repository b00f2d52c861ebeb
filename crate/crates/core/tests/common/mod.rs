//! Independent oracles shared by the integration tests.
//!
//! None of these reuse the chain-resolution code. The hyperbolic oracle
//! lifts a word to the upper half plane and counts crossing translates;
//! the circle oracle places boundary items on a circle and tests chords
//! with cross products; the transfer matrix counts words from the grammar.

#![allow(dead_code)]

use std::collections::HashSet;

use pants_arcs::planar::{segments, BoundaryItem};
use pants_arcs::word::{ArcWord, Puncture, Seam};

// ---------------------------------------------------------------- hyperbolic

/// Projective point on the real line: `p/q` with `q >= 0`, infinity as `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cusp {
    p: i128,
    q: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Cusp {
    pub const INF: Cusp = Cusp { p: 1, q: 0 };

    pub fn new(p: i128, q: i128) -> Cusp {
        let g = gcd(p, q);
        let (p, q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            Cusp { p: -p, q: -q }
        } else {
            Cusp { p, q }
        }
    }

    pub fn int(n: i128) -> Cusp {
        Cusp { p: n, q: 1 }
    }

    pub fn parts(self) -> (i128, i128) {
        (self.p, self.q)
    }

    /// Strict order on the extended line with infinity largest.
    fn lt(self, o: Cusp) -> bool {
        match (self.q, o.q) {
            (_, 0) => self.q != 0,
            (0, _) => false,
            _ => self.p.checked_mul(o.q).unwrap() < o.p.checked_mul(self.q).unwrap(),
        }
    }
}

pub type Mat = [i128; 4];

pub const ID: Mat = [1, 0, 0, 1];

pub fn mul(a: Mat, b: Mat) -> Mat {
    let m = |x: i128, y: i128| x.checked_mul(y).expect("matrix entry overflow");
    [
        m(a[0], b[0]) + m(a[1], b[2]),
        m(a[0], b[1]) + m(a[1], b[3]),
        m(a[2], b[0]) + m(a[3], b[2]),
        m(a[2], b[1]) + m(a[3], b[3]),
    ]
}

fn inv(a: Mat) -> Mat {
    [a[3], -a[1], -a[2], a[0]]
}

fn psl(a: Mat) -> Mat {
    let first = *a.iter().find(|&&x| x != 0).unwrap();
    if first < 0 {
        a.map(|x| -x)
    } else {
        a
    }
}

pub fn act(a: Mat, z: Cusp) -> Cusp {
    let (p, q) = (z.p, z.q);
    Cusp::new(a[0] * p + a[1] * q, a[2] * p + a[3] * q)
}

/// Crossing a seam: `a: z -> z + 2`, `b: z -> z / (1 - 2z)`.
pub fn generator(s: Seam) -> Mat {
    match s {
        Seam::A => [1, 2, 0, 1],
        Seam::AInv => [1, -2, 0, 1],
        Seam::B => [1, 0, -2, 1],
        Seam::BInv => [1, 0, 2, 1],
    }
}

/// Cusp for each corner of the ideal fundamental domain.
pub fn corner_cusp(v: BoundaryItem) -> Cusp {
    match v {
        BoundaryItem::V1 => Cusp::INF,
        BoundaryItem::V2 => Cusp::int(0),
        BoundaryItem::V3Alpha => Cusp::int(-1),
        BoundaryItem::V3Beta => Cusp::int(1),
        e => panic!("{e} is an edge"),
    }
}

/// The two endpoints of the geodesic lift starting in the base domain.
pub fn lift_endpoints(w: &ArcWord) -> (Cusp, Cusp, Vec<Mat>) {
    let segs = segments(w);
    let mut hs = vec![ID];
    for &x in w.seams() {
        hs.push(mul(*hs.last().unwrap(), generator(x)));
    }
    let p = corner_cusp(segs[0].from);
    let q = act(*hs.last().unwrap(), corner_cusp(segs.last().unwrap().to));
    (p, q, hs)
}

fn interleave(p1: Cusp, q1: Cusp, p2: Cusp, q2: Cusp) -> bool {
    let pts = [p1, q1, p2, q2];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return false;
            }
        }
    }
    let (lo, hi) = if p1.lt(q1) { (p1, q1) } else { (q1, p1) };
    let inside = |x: Cusp| lo.lt(x) && x.lt(hi);
    inside(p2) != inside(q2)
}

/// Number of transverse crossings of the geodesic arc with itself.
pub fn hyperbolic_i(w: &ArcWord) -> u64 {
    let (p, q, hs) = lift_endpoints(w);
    let mut cands = HashSet::new();
    for (s, hs_s) in hs.iter().enumerate() {
        for (t, hs_t) in hs.iter().enumerate() {
            if s != t {
                cands.insert(psl(mul(*hs_s, inv(*hs_t))));
            }
        }
    }
    cands.remove(&ID);
    let n = cands
        .into_iter()
        .filter(|&g| interleave(p, q, act(g, p), act(g, q)))
        .count() as u64;
    assert_eq!(n % 2, 0, "crossing translates come in inverse pairs");
    n / 2
}

// -------------------------------------------------------------------- circle

/// Boundary item position as a point on the unit circle; edges sit at
/// their midpoint, pushed slightly along the circle by `jitter`.
pub fn circle_point(item: BoundaryItem, jitter: f64) -> (f64, f64) {
    let step = std::f64::consts::TAU / 8.0;
    let t = item.position() as f64 * step + if item.is_edge() { jitter * step * 0.4 } else { 0.0 };
    (t.cos(), t.sin())
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Straight chords cross properly.
pub fn chords_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

// ------------------------------------------------------------------- counts

/// Number of valid words of a total length from the grammar's transfer matrix.
pub fn transfer_matrix_count(word_length: usize) -> u64 {
    if word_length < 2 {
        return 0;
    }
    let seams = Seam::ENUMERATION_ORDER;
    let punct = Puncture::ALL;
    if word_length == 2 {
        return (punct.len() * punct.len() - 2) as u64;
    }
    // v[s] = number of valid prefixes ending in seam s
    let mut v: Vec<u64> = seams
        .iter()
        .map(|&s| punct.iter().filter(|p| !p.forbids(s)).count() as u64)
        .collect();
    for _ in 1..word_length - 2 {
        v = seams
            .iter()
            .map(|&t| {
                seams
                    .iter()
                    .zip(&v)
                    .filter(|(&s, _)| s != t.inverse())
                    .map(|(_, c)| c)
                    .sum()
            })
            .collect();
    }
    seams
        .iter()
        .zip(&v)
        .map(|(&s, c)| c * punct.iter().filter(|p| !p.forbids(s)).count() as u64)
        .sum()
}
