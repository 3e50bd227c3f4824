use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{CommandConfig, Format};

#[derive(Debug, Parser)]
#[command(name = "gldim-lab", version, about = "Global dimensions of endomorphism orders over monomial curves")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Resolution steps before giving up on a simple.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_length: usize,
    /// Scales the heuristic part of the degree bound.
    #[arg(long, global = true, default_value_t = 1)]
    pub degree_multiplier: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report into this directory instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

impl GlobalArgs {
    pub fn config(&self) -> CommandConfig {
        CommandConfig {
            max_length: self.max_length,
            degree_multiplier: self.degree_multiplier,
            format: self.format,
            out_dir: self.out.clone(),
            threads: self.threads,
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Use the normalization chain of the semigroup.
    #[arg(long)]
    pub leuschke: bool,
    /// JSON list of degree sets `{"min", "stab", "members"}`.
    #[arg(long)]
    pub ideal_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(subcommand)]
    Semigroup(SemigroupCommand),
    /// Normalization chain of a semigroup.
    Chain {
        #[arg(required = true, num_args = 1..)]
        gens: Vec<i64>,
    },
    /// Global dimension of an endomorphism order.
    Gldim {
        #[arg(required = true, num_args = 1..)]
        gens: Vec<i64>,
        #[command(flatten)]
        source: SourceArgs,
    },
    #[command(subcommand)]
    Order(OrderCommand),
    #[command(subcommand)]
    Artinian(ArtinianCommand),
    /// Cube algebra series, shapes and bounds.
    Cube { n: usize },
    #[command(subcommand)]
    Rational(RationalCommand),
}

#[derive(Debug, Subcommand)]
pub enum SemigroupCommand {
    Info {
        #[arg(required = true, num_args = 1..)]
        gens: Vec<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrderCommand {
    Quiver {
        #[arg(required = true, num_args = 1..)]
        gens: Vec<i64>,
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum ArtinianCommand {
    /// Every nonempty subset of `{1, …, n}`.
    Spectrum {
        n: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    Gldim {
        n: usize,
        #[arg(value_delimiter = ',', required = true)]
        indices: Vec<usize>,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub weights: Vec<i64>,
    /// Omit for a weighted polynomial ring.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Vec<i64>,
}

#[derive(Debug, Subcommand)]
pub enum RationalCommand {
    Flenner(WeightArgs),
    #[command(name = "a-inv")]
    AInv(WeightArgs),
}
