//! Self-intersection numbers of arcs on a pair of pants.
//!
//! Arcs are words `n1 x1 ... xL n2` over punctures `1 2 3` and seam
//! crossings `a A b B`. The crate parses and transforms such words, counts
//! self-intersections by chain resolution in the fundamental domain, runs
//! exhaustive censuses, and builds low-lying witnesses for every value.
//!
//! ```
//! use pants_arcs::{self_intersection, ArcWord};
//!
//! let w: ArcWord = "1BABA2".parse().unwrap();
//! assert_eq!(self_intersection(&w), 2);
//! ```

pub mod census;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod intersect;
pub mod lowlying;
pub mod planar;
pub mod positive;
pub mod tables;
pub mod word;

pub use census::{census, census_with, enumerate_words, CensusOptions, CensusReport};
pub use error::{
    CensusError, CfError, ChainError, FamilyError, FixtureError, LowLyingError, SideError,
    WordError,
};
pub use family::{family_predicted_i, family_word, FamilyId};
pub use intersect::{
    chains, resolve_chain, self_intersection, self_intersection_with_stats, side_at_divergence,
    trace, CellState, ChainMode, ChainResult, Intersector, PairGrid, Polarity, Side,
};
pub use planar::{
    boundary_cycle, classify_decidable, corner3_item, segments, BoundaryItem, PairClass, Segment,
};
pub use positive::positivize;
pub use word::{parse_word, ArcWord, Letter, Puncture, Seam, SeamCounts};
