//! Error type shared by every module in the crate.

use thiserror::Error;

/// All failure modes of the library.
///
/// Variants are split between *user errors* (bad parameters, out-of-range
/// requests) and *internal assertion failures* that signal an implementation
/// bug and are never expected on legal inputs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    // ---- field construction ----
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree {0} out of range")]
    DegreeOutOfRange(u32),
    #[error("field order {0} exceeds the implementation cap {1}")]
    CapExceeded(u64, u64),

    // ---- element arithmetic ----
    #[error("division by zero (or discrete log of zero)")]
    DivisionByZero,
    #[error("elements belong to different field contexts")]
    FieldMismatch,
    #[error("field is not presented as a quadratic extension")]
    NotQuadraticExtension,
    #[error("fields do not form a compatible subfield tower")]
    IncompatibleTower,
    #[error("element is not in the subfield fixed by x -> x^q")]
    NotInSubfield,

    // ---- codes and matrices ----
    #[error("locators must be pairwise distinct")]
    DuplicateLocators,
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("message polynomial degree exceeds k-1")]
    DegreeTooHigh,
    #[error("codeword enumeration would exceed the cap ({0} messages > {1})")]
    EnumerationCapExceeded(u64, u64),

    // ---- constructions ----
    #[error("parameters out of range: {0}")]
    ParamsOutOfRange(String),
    #[error("construction assertion failed: {0}")]
    ConstructionAssertionFailed(String),
    #[error("hull-reduction target {0} out of range (current hull {1})")]
    TargetOutOfRange(usize, usize),
    #[error("hull-reduction search exhausted without reaching the target")]
    SearchExhausted,
    #[error("hull dimension {0} is excluded for these parameters")]
    ExcludedHullDim(usize),

    // ---- quantum derivation ----
    #[error("code dimension k exceeds floor(len/2)")]
    DimensionTooLarge,
    #[error("rank identity violated: rank(HH+) = {0} but len - k - hull = {1}")]
    RankIdentityViolated(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
