use std::time::Duration;

use gldim_core::order::QuiverPresentation;
use serde::Serialize;
use serde_json::Value;

use crate::config::ConfigEcho;

pub const SCHEMA: &str = "gldim-lab/1";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Argument(String),
    /// A degree bound that did not survive doubling, or a resolution cap.
    #[error("{0}")]
    Precision(String),
    #[error(transparent)]
    Core(gldim_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<gldim_core::Error> for CliError {
    fn from(e: gldim_core::Error) -> Self {
        use gldim_core::Error as E;
        match e {
            E::Argument(_) | E::NotNumericalSemigroup { .. } | E::NotBasic { .. } => CliError::Argument(e.to_string()),
            E::Precision { .. } => CliError::Precision(e.to_string()),
            E::InvariantViolation(_) => CliError::Core(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Argument(_) => 2,
            CliError::Precision(_) => 3,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

/// Whether a report carries a cap verdict somewhere in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Complete,
    Capped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub input: Value,
    pub config: ConfigEcho,
    pub results: Value,
    pub certificates: Value,
    #[serde(skip)]
    pub status: Status,
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub quiver: Option<QuiverPresentation>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Complete => 0,
            Status::Capped => 3,
        }
    }
}

pub fn emit_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

pub fn emit_dot(quiver: &QuiverPresentation) -> String {
    quiver.to_dot()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_errors_map_to_exit_codes() {
        use gldim_core::Error as E;
        assert_eq!(CliError::from(E::Argument("x".into())).exit_code(), 2);
        assert_eq!(CliError::from(E::NotNumericalSemigroup { gcd: 2 }).exit_code(), 2);
        assert_eq!(CliError::from(E::NotBasic { first: 1, second: 2 }).exit_code(), 2);
        assert_eq!(CliError::from(E::Precision { bound: 4 }).exit_code(), 3);
        assert_eq!(CliError::from(E::InvariantViolation("x".into())).exit_code(), 1);
    }
}
