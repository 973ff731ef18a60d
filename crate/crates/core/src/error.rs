use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("modulus {0} is not an odd prime below 2^31")]
    InvalidModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial in T is not monic")]
    NotMonic,
    #[error("leading coefficient is not a square in the base field")]
    NonSquareLeading,
    #[error("leading exponent of the series is odd")]
    OddLeadExponent,
    #[error("series is zero to the available precision")]
    ZeroSeries,
    #[error("f is not squarefree")]
    NotSquarefree,
    #[error("deg f = {0} is too small for a curve of positive genus")]
    DegreeTooSmall(usize),
    #[error("invalid superelliptic descriptor: {0}")]
    Superelliptic(&'static str),
    #[error("operation not available for this curve model: {0}")]
    UnsupportedModel(&'static str),
    #[error("place does not lie on this curve")]
    PlaceMismatch,
    #[error("elements belong to different curves")]
    CurveMismatch,
    #[error("place is not rational")]
    NotRational,
    #[error("exact reduction is not available for split infinity")]
    SplitInfinity,
    #[error("enumeration of {size} candidates exceeds the cap of {cap}")]
    EnumerationCap { size: u128, cap: u128 },
    #[error("the set of places is empty")]
    EmptyPlaceSet,
    #[error("p = {p} is too small for the classicality guard (need p > 2g = {twice_genus})")]
    ClassicalityGuard { p: u64, twice_genus: u64 },
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
