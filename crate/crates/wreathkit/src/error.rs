//! Crate-wide error type.

use crate::report::AxiomReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Composition `g ∘ f` where `dom(g) ≠ cod(f)`.
    #[error("cannot compose: left factor expects domain {expected}, right factor has codomain {actual}")]
    ComposeMismatch { expected: String, actual: String },

    /// A morphism or table does not have the shape its slot demands.
    #[error("{context}: expected {expected}, got {actual}")]
    ShapeMismatch {
        context: String,
        expected: String,
        actual: String,
    },

    /// A scalar of the wrong kind for the ambient field.
    #[error("scalar {scalar} does not belong to the {field} field")]
    FieldMismatch { field: String, scalar: String },

    /// Two values built over different fields were combined.
    #[error("field mismatch: {left} versus {right}")]
    MixedFields { left: String, right: String },

    #[error("modulus {p} is not a prime in the supported range (2 ≤ p < 2^31)")]
    NonPrime { p: u64 },

    #[error("cannot parse scalar from {text:?}")]
    BadScalar { text: String },

    #[error("invalid finite monoid: {reason}")]
    BadFinMonoid { reason: String },

    #[error("invalid fibration data: {reason}")]
    BadFibration { reason: String },

    #[error("invalid extension data: {reason}")]
    BadExtension { reason: String },

    /// A construction refused its input because a prerequisite law check failed.
    #[error("{what} failed validation:\n{report}")]
    ValidationFailed { what: String, report: AxiomReport },

    #[error("cocycle search space has {candidates} candidates, exceeding the bound {bound}")]
    SearchSpaceExceeded { candidates: u128, bound: u128 },

    /// Two morphisms that must share a mixed-opwreath context do not.
    #[error("kleisli morphisms belong to different opwreath contexts")]
    ContextMismatch,

    #[error("bundle: {0}")]
    Bundle(String),

    #[error("unknown {kind} {name:?} in bundle")]
    UnknownName { kind: &'static str, name: String },

    #[error("structure {name:?} has type {actual}, expected {expected}")]
    WrongStructureType {
        name: String,
        expected: &'static str,
        actual: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed bundle document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
