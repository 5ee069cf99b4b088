//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by the algebra engines.
///
/// Post-condition failures that indicate a bug (a differential that does not
/// square to zero, a non-integral coefficient) panic instead; the variants
/// here are conditions a caller can run into with well-formed but
/// unfavourable input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over different prime fields.
    ModulusMismatch { left: u64, right: u64 },
    /// Two operands disagree on the number of variables.
    VariableCountMismatch { left: usize, right: usize },
    /// A free-module operand does not match the expected ambient rank.
    AmbientMismatch { expected: usize, found: usize },
    /// Parse failure, with byte position into the input.
    Parse { position: usize, message: String },
    /// Input required to be homogeneous is not.
    NotHomogeneous { context: &'static str },
    /// `J` failed to become a reduction of `I` within the iteration cap.
    NotAReduction { cap: u32 },
    /// A colon chain kept strictly ascending past the cap.
    NoStabilization { cap: u32 },
    /// The ideal is not primary on the module: some length came out infinite.
    NotPrimary,
    /// A value table never settled onto its polynomial within the window.
    NotStabilized { context: &'static str },
    /// The ring is not flagged Gorenstein but a dual computation was asked for.
    NotGorenstein,
    /// The resolution has not exhibited a two-periodic tail within the cap.
    NotPeriodicYet { cap: usize },
    /// An entry nominally divisible by the relation ideal was not.
    DivisionFailure { context: &'static str },
    /// No quasi-polynomial of admissible degree fits the sample.
    FitInconclusive { max_degree: usize },
    /// Superficial-element sampling exhausted its tries.
    NoCandidateFound { tries: u32 },
    /// A declared module dimension is inconsistent with the value table.
    DimensionMismatch { declared: usize },
    /// Input sequence is too short for the requested fit.
    TooFewPoints { needed: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::VariableCountMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            Error::AmbientMismatch { expected, found } => {
                write!(f, "ambient rank mismatch: expected {expected}, found {found}")
            }
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::NotHomogeneous { context } => write!(f, "not homogeneous: {context}"),
            Error::NotAReduction { cap } => {
                write!(f, "ideal is not a reduction within cap {cap}; resample")
            }
            Error::NoStabilization { cap } => {
                write!(f, "colon chain still ascending at cap {cap}")
            }
            Error::NotPrimary => write!(f, "ideal is not primary on the module"),
            Error::NotStabilized { context } => {
                write!(f, "table did not stabilize: {context}")
            }
            Error::NotGorenstein => write!(f, "ring is not flagged Gorenstein"),
            Error::NotPeriodicYet { cap } => {
                write!(f, "no two-periodic tail within {cap} resolution steps")
            }
            Error::DivisionFailure { context } => {
                write!(f, "division by relation ideal failed: {context}")
            }
            Error::FitInconclusive { max_degree } => {
                write!(f, "no quasi-polynomial of degree <= {max_degree} fits")
            }
            Error::NoCandidateFound { tries } => {
                write!(f, "no superficial candidate found in {tries} tries")
            }
            Error::DimensionMismatch { declared } => {
                write!(f, "declared dimension {declared} inconsistent with values")
            }
            Error::TooFewPoints { needed, got } => {
                write!(f, "need {needed} sample points, got {got}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
