use thiserror::Error;

/// Grammar violations. Positions are 0-based character offsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed token {found:?} at position {position}")]
    MalformedToken { position: usize, found: char },
    #[error("bad shape at position {position}: punctures must appear exactly at both ends")]
    BadShape { position: usize },
    #[error("forbidden two-letter word at position {position} (11 and 22 are not arcs)")]
    ForbiddenPair { position: usize },
    #[error("non-reduced pair at position {position}: letter followed by its inverse")]
    NonReduced { position: usize },
    #[error("endpoint clash at position {position}: seam letter lies on the adjacent puncture")]
    EndpointClash { position: usize },
}

impl WordError {
    pub fn position(&self) -> usize {
        match *self {
            WordError::MalformedToken { position, .. }
            | WordError::BadShape { position }
            | WordError::ForbiddenPair { position }
            | WordError::NonReduced { position }
            | WordError::EndpointClash { position } => position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SideError {
    #[error("items coincide, not a divergence")]
    SameItem,
    #[error("divergence items must differ from the shared edge")]
    SharedItem,
    #[error("shared item must be an edge")]
    NotAnEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("pair ({i}, {j}) is not a valid pair of segment indices")]
    BadPair { i: usize, j: usize },
    #[error("chain extension ran past the end of the word")]
    AlignmentOverrun,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters for family {family}: {reason}")]
    BadParams { family: String, reason: String },
    #[error("family {0} has no continued fraction")]
    Unsupported(String),
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("word length must be at least 2, got {0}")]
    TooShort(usize),
    #[error("time budget exhausted")]
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("continued fraction must have at least one quotient")]
    Empty,
    #[error("partial quotient {index} is zero")]
    ZeroQuotient { index: usize },
    #[error("cannot parse quotient {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LowLyingError {
    #[error("no cover set contains {0}")]
    CoverGap(u64),
    #[error("reparameterized form of {set} disagrees at {n}")]
    IdentityMismatch { set: String, n: u64 },
    #[error("spectrum mismatch at {n}: {word} expected {expected}, got {got}")]
    SpectrumMismatch {
        n: u64,
        word: String,
        expected: u64,
        got: u64,
    },
    #[error("witness for {n} has partial quotient {max_quotient} > 2")]
    QuotientTooLarge { n: u64, max_quotient: u32 },
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },
}
