use thiserror::Error;

/// Errors raised by the computational pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("vector is not contained in the ambient span: {0}")]
    ContainmentViolation(String),

    #[error("{what} = {value} exceeds the configured maximum {limit}")]
    Guardrail {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// A runtime certificate failed; `stage` names the pipeline stage.
    #[error("certificate failure in stage `{stage}`{}: {detail}", degree.map(|d| format!(" at degree {d}")).unwrap_or_default())]
    Certificate {
        stage: &'static str,
        degree: Option<usize>,
        detail: String,
    },

    #[error("permuted vector left the module at degree {degree}: {detail}")]
    StabilityViolation { degree: usize, detail: String },

    #[error("partition orientation mismatch: {0}")]
    Convention(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}
