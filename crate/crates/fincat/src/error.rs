//! Shared error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FincatError {
    /// Composition attempted on morphisms whose boundary objects do not match.
    #[error("cannot compose: codomain {cod_f} of `{f}` differs from domain {dom_g} of `{g}`")]
    ComposeMismatch {
        f: String,
        g: String,
        cod_f: String,
        dom_g: String,
    },

    /// Tensor or pairing of data from incompatible instances.
    #[error("instance mismatch: {0}")]
    InstanceMismatch(String),

    /// A morphism whose internal data is inconsistent with the instance.
    #[error("malformed morphism: {0}")]
    MalformedMorphism(String),

    /// A structure (algebra, bialgebra, operad, ...) failed a precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A configured bound (arity, dimension) was exceeded.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Description-file or option parsing problems.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A component-indexed failure inside a compound construction.
    #[error("component {index}: {message}")]
    Component { index: usize, message: String },
}

impl FincatError {
    pub fn compose_mismatch(
        f: impl ToString,
        g: impl ToString,
        cod_f: impl ToString,
        dom_g: impl ToString,
    ) -> Self {
        FincatError::ComposeMismatch {
            f: f.to_string(),
            g: g.to_string(),
            cod_f: cod_f.to_string(),
            dom_g: dom_g.to_string(),
        }
    }
}
