use std::path::PathBuf;

use clap::ValueEnum;
use gldim_core::resolve::{Caps, DegreeBound};
use serde::Serialize;

use crate::report::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
    Dot,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "txt",
            Format::Dot => "dot",
        }
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandConfig {
    pub max_length: usize,
    pub degree_multiplier: i64,
    pub format: Format,
    pub out_dir: Option<PathBuf>,
    /// Worker threads for per-simple and per-subset work. Results are
    /// ordered the same way for every value.
    pub threads: usize,
}

impl Default for CommandConfig {
    fn default() -> Self {
        CommandConfig { max_length: 16, degree_multiplier: 1, format: Format::Json, out_dir: None, threads: 1 }
    }
}

/// The part of the config that can change results, echoed into reports.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub max_length: usize,
    pub degree_multiplier: i64,
}

impl CommandConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_length == 0 {
            return Err(CliError::Argument("--max-length must be positive".into()));
        }
        if self.degree_multiplier <= 0 {
            return Err(CliError::Argument("--degree-multiplier must be positive".into()));
        }
        if self.threads == 0 {
            return Err(CliError::Argument("--threads must be positive".into()));
        }
        Ok(())
    }

    pub fn caps(&self) -> Caps {
        Caps {
            max_length: self.max_length,
            degree_bound: DegreeBound::Auto { multiplier: self.degree_multiplier },
            ..Caps::default()
        }
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho { max_length: self.max_length, degree_multiplier: self.degree_multiplier }
    }
}
