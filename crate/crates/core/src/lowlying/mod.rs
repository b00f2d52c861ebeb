//! Continued fractions, the cover of the naturals, and low-lying witnesses.

pub mod cf;
pub mod cover;
pub mod pattern;

pub use cf::{cf_eval, family_cf, max_partial_quotient, ContinuedFraction, Fraction};
pub use cover::{
    cover_check, decompose, decompose_params, set_membership, spectrum_check, witness,
    CoverReport, CoverSet, CoverWitness, Membership, SpectrumReport, WitnessCheck,
};
pub use pattern::{pattern_low_lying, LowLyingVerdict};
