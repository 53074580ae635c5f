use crate::topology::Mask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or querying spaces, maps and
/// functions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{count} points exceeds the supported maximum of {max}")]
    TooManyPoints { count: usize, max: usize },
    #[error("mask {mask:#b} uses bits outside the {arity} points of the space")]
    MaskOutOfRange { mask: Mask, arity: usize },
    #[error("the empty set is not a member of the closed family")]
    MissingEmptySet,
    #[error("the full set is not a member of the closed family")]
    MissingFullSet,
    #[error("closed family is not closed under union: {0:#b} | {1:#b} is missing")]
    NotClosedUnderUnion(Mask, Mask),
    #[error("closed family is not closed under intersection: {0:#b} & {1:#b} is missing")]
    NotClosedUnderIntersection(Mask, Mask),
    #[error("subset has arity {found}, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("spaces of {0} points are not supported here")]
    UnsupportedSize(usize),
    #[error("subset {0:#b} is not closed")]
    NotClosed(Mask),
    #[error("malformed functor table: {0}")]
    MalformedTable(String),
    #[error("map is not monotone: {0:#b} is contained in {1:#b} but their images are not")]
    NotMonotone(Mask, Mask),
    #[error("maps do not connect the same spaces")]
    SpaceMismatch,
    #[error("no hom-set bijection at U = {u:#b}, V = {v:#b}")]
    BijectionMissing { u: Mask, v: Mask },
    #[error("input pair is not adjoint")]
    NotAdjointInput,
    #[error("invalid point mapping: {0}")]
    InvalidMapping(String),
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
    #[error("invalid input: {0}")]
    Format(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TooManyPoints { .. } => "TooManyPoints",
            Error::MaskOutOfRange { .. } => "MaskOutOfRange",
            Error::MissingEmptySet => "MissingEmptySet",
            Error::MissingFullSet => "MissingFullSet",
            Error::NotClosedUnderUnion(..) => "NotClosedUnderUnion",
            Error::NotClosedUnderIntersection(..) => "NotClosedUnderIntersection",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::UnsupportedSize(_) => "UnsupportedSize",
            Error::NotClosed(_) => "NotClosed",
            Error::MalformedTable(_) => "MalformedTable",
            Error::NotMonotone(..) => "NotMonotone",
            Error::SpaceMismatch => "SpaceMismatch",
            Error::BijectionMissing { .. } => "BijectionMissing",
            Error::NotAdjointInput => "NotAdjointInput",
            Error::InvalidMapping(_) => "InvalidMapping",
            Error::TheoremViolation(_) => "TheoremViolation",
            Error::Format(_) => "Format",
        }
    }
}
