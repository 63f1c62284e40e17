//! Errors of the command-line front end and their exit codes.

use gradhecke::graded::GradedError;
use gradhecke::klr::KlrError;
use gradhecke::seminormal::SeminormalError;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// The configuration cannot be realized.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A computation found an identity that does not hold.
    #[error("{0}")]
    Violation(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Exit code 1 for theorem violations, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            _ => 2,
        }
    }

    pub fn diagnostic(&self) -> Value {
        match self {
            CliError::Violation(msg) => json!({"status": "fail", "failed": [msg]}),
            other => json!({"status": "error", "error": other.to_string()}),
        }
    }
}

impl From<SeminormalError> for CliError {
    fn from(err: SeminormalError) -> Self {
        match err {
            SeminormalError::NotIntegral(_) | SeminormalError::NotPositive(_) | SeminormalError::ZeroDenominator(_) => {
                CliError::Violation(err.to_string())
            }
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<KlrError> for CliError {
    fn from(err: KlrError) -> Self {
        match err {
            KlrError::Seminormal(inner) => inner.into(),
            KlrError::Theorem(_)
            | KlrError::Consistency(_)
            | KlrError::NotNilpotent(_)
            | KlrError::ZeroConstant { .. } => CliError::Violation(err.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<GradedError> for CliError {
    fn from(err: GradedError) -> Self {
        match err {
            GradedError::Klr(inner) => inner.into(),
            GradedError::Theorem(_) | GradedError::Singular(_) => CliError::Violation(err.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

macro_rules! config_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(err: $t) -> Self {
                CliError::Config(err.to_string())
            }
        })*
    };
}

config_error!(
    gradhecke::combin::QuiverError,
    gradhecke::hecke::HeckeError,
    gradhecke::scalars::ScalarError
);
