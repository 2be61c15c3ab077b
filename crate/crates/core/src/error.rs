//! Crate-wide error type.
//!
//! Every fallible operation in this crate reports one of the variants below.
//! Domain violations (dividing by a non-unit, reversing a series of the wrong
//! valuation, composing outside the allowed domain) are ordinary values, never
//! panics, so callers such as the CLI can map them to exit codes.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands live in different coefficient rings (includes modulus
    /// mismatches between residue rings).
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    /// The element has no multiplicative inverse in its ring.
    #[error("not invertible: {0} in {1}")]
    NotInvertible(String, String),

    /// A series cannot be reversed (valuation is not exactly 1, or the
    /// linear coefficient is not a unit).
    #[error("not reversible: {0}")]
    NotReversible(String),

    /// Composition `a(b)` requested outside its domain.
    #[error("composition domain: {0}")]
    CompositionDomain(String),

    /// An operation needed division by an integer that does not exist in the
    /// coefficient ring (e.g. exponentials over Z/m).
    #[error("characteristic: {0}")]
    Characteristic(String),

    /// Not enough known coefficients to produce even one output coefficient.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// A structured input violated its schema or a guard.
    #[error("domain: {0}")]
    Domain(String),

    /// An infinite product whose factor exponents do not tend to infinity.
    #[error("divergent product: {0}")]
    DivergentProduct(String),

    /// `verify` was asked for an identity id that is not registered.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    /// A polynomial claimed to be symmetric is not; carries a witnessing
    /// transposition of variable indices.
    #[error("symmetry violation: input changes under swap of variables {0} and {1}")]
    SymmetryViolation(usize, usize),

    /// Weierstrass division/preparation applied to a series that is not
    /// Y-regular within the known precision.
    #[error("not regular: {0}")]
    NotRegular(String),

    /// Parse failure with a byte position into the source text.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
