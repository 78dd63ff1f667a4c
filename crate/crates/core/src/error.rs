use thiserror::Error;

/// Broad classes of failure, used by front ends to choose exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad user input: malformed group spec, weight, or level.
    Malformed,
    /// Well-formed request the library deliberately does not answer.
    Unsupported,
    /// A configured size cap would be exceeded.
    Resource,
    /// An internal consistency check failed.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple type: {0}")]
    InvalidType(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("dimension mismatch: expected rank {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight {weight:?} does not lie in the level-{level} alcove")]
    NotAtLevel { weight: Vec<i64>, level: u32 },

    #[error("weight {weight:?} is not pre-quantizable at level {level}")]
    NotPrequantizable { weight: Vec<i64>, level: u32 },

    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),

    #[error("root datum mismatch: {0} vs {1}")]
    DatumMismatch(String, String),

    #[error("{what} of size {requested} exceeds the cap of {limit}")]
    ResourceCap {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("{0} does not name a subgroup of the center")]
    NotSubgroup(String),

    #[error("no central extension at level {level}: not a multiple of the basic level {basic}")]
    NoExtension { level: u32, basic: u32 },

    #[error("level {level} is not a multiple of the multiplicative level {multiplicative}")]
    NotMultiplicative { level: u32, multiplicative: u32 },

    #[error("fusion coefficients involving orbits with non-trivial stabilizer are unsupported")]
    FixedPointFusion,

    #[error("the center action at level {0} does not preserve characters")]
    CharacterShift(u32),

    #[error("the twisted extension (chi,-) is unsupported")]
    TwistedExtension,

    #[error("unknown fundamental level for {0}")]
    UnknownFundamentalLevel(String),

    #[error("character index {index} out of range for a group of order {order}")]
    BadCharacter { index: String, order: usize },

    #[error("orbit is not a {0}-orbit of level-{1} weights")]
    BadOrbit(String, u32),

    #[error("Verlinde sum {value} is not within {tolerance:e} of an integer")]
    NonIntegral { value: f64, tolerance: f64 },

    #[error("basis mismatch between modular invariant and modular data")]
    BasisMismatch,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            InvalidType(_) | Parse { .. } | DimensionMismatch { .. } | NotDominant(_)
            | NotAtLevel { .. } | NotPrequantizable { .. } | LevelMismatch(..)
            | DatumMismatch(..) | NotSubgroup(_) | BadCharacter { .. } | BadOrbit(..)
            | BasisMismatch => ErrorKind::Malformed,
            NoExtension { .. } | NotMultiplicative { .. } | CharacterShift(_) | FixedPointFusion
            | TwistedExtension | UnknownFundamentalLevel(_) => ErrorKind::Unsupported,
            ResourceCap { .. } => ErrorKind::Resource,
            NonIntegral { .. } | Internal(_) => ErrorKind::Internal,
        }
    }

    /// Short stable tag for machine-readable diagnostics.
    pub fn tag(&self) -> &'static str {
        use Error::*;
        match self {
            InvalidType(_) => "invalid-type",
            Parse { .. } => "parse",
            DimensionMismatch { .. } => "dimension-mismatch",
            NotDominant(_) => "not-dominant",
            NotAtLevel { .. } => "not-at-level",
            NotPrequantizable { .. } => "not-prequantizable",
            LevelMismatch(..) => "level-mismatch",
            DatumMismatch(..) => "datum-mismatch",
            ResourceCap { .. } => "resource-cap",
            NotSubgroup(_) => "not-subgroup",
            NoExtension { .. } => "no-extension",
            NotMultiplicative { .. } => "not-multiplicative",
            CharacterShift(_) => "character-shift",
            FixedPointFusion => "fixed-point-fusion",
            TwistedExtension => "twisted-extension",
            UnknownFundamentalLevel(_) => "unknown-fundamental-level",
            BadCharacter { .. } => "bad-character",
            BadOrbit(..) => "bad-orbit",
            NonIntegral { .. } => "non-integral",
            BasisMismatch => "basis-mismatch",
            Internal(_) => "internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
