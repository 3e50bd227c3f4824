//! Command-line front end for `gldim-core`: every command builds a
//! [`Report`], which is rendered as JSON, plain text or (for quivers) DOT.
//!
//! Exit codes: 0 on success, 2 on bad arguments, 3 when a degree bound
//! failed to stabilize or a resolution hit its cap.

pub mod args;
pub mod commands;
pub mod config;
pub mod report;

use std::time::Instant;

pub use args::Cli;
pub use commands::{
    run_a_invariant, run_artinian_gldim, run_chain, run_cube, run_flenner, run_gldim, run_order_quiver,
    run_semigroup_info, run_spectrum, IdealSource,
};
pub use config::{CommandConfig, Format};
pub use report::{emit_dot, emit_json, CliError, Report, Status};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub struct BookCli;

use args::{ArtinianCommand, Command, OrderCommand, RationalCommand, SemigroupCommand, SourceArgs};

fn source(args: &SourceArgs) -> IdealSource {
    match &args.ideal_file {
        Some(path) => IdealSource::File(path.clone()),
        None => IdealSource::Leuschke,
    }
}

fn dispatch(command: &Command, config: &CommandConfig) -> Result<Report, CliError> {
    match command {
        Command::Semigroup(SemigroupCommand::Info { gens }) => run_semigroup_info(gens, config),
        Command::Chain { gens } => run_chain(gens, config),
        Command::Gldim { gens, source: s } => run_gldim(gens, &source(s), config),
        Command::Order(OrderCommand::Quiver { gens, source: s }) => run_order_quiver(gens, &source(s), config),
        Command::Artinian(ArtinianCommand::Spectrum { n, cap }) => run_spectrum(*n, *cap, config),
        Command::Artinian(ArtinianCommand::Gldim { n, indices, cap }) => run_artinian_gldim(*n, indices, *cap, config),
        Command::Cube { n } => run_cube(*n, config),
        Command::Rational(RationalCommand::Flenner(w)) => run_flenner(&w.weights, &w.degrees, config),
        Command::Rational(RationalCommand::AInv(w)) => run_a_invariant(&w.weights, &w.degrees, config),
    }
}

/// Runs a command on a pool of `config.threads` workers and times it.
pub fn execute(command: &Command, config: &CommandConfig) -> Result<Report, CliError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| CliError::Argument(format!("cannot start {} threads: {e}", config.threads)))?;
    let start = Instant::now();
    let mut report = pool.install(|| dispatch(command, config))?;
    report.wall_time = start.elapsed();
    Ok(report)
}

/// The report in the requested format.
pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(emit_json(report)),
        Format::Text => Ok(report.text.clone()),
        Format::Dot => match &report.quiver {
            Some(q) => Ok(emit_dot(q)),
            None => Err(CliError::Argument(format!("`{}` has no quiver to draw", report.command))),
        },
    }
}

/// File name for `--out`: the command with spaces and commas as dashes.
pub fn report_file_name(report: &Report, format: Format) -> String {
    let stem: String = report
        .command
        .split_whitespace()
        .take_while(|w| !w.starts_with("--ideal-file"))
        .collect::<Vec<_>>()
        .join("-")
        .replace([',', '/'], "-");
    format!("{stem}.{}", format.extension())
}

/// Parses, runs and writes the output. Returns the process exit code.
pub fn main_with(cli: &Cli) -> i32 {
    let config = cli.global.config();
    let outcome = execute(&cli.command, &config).and_then(|report| {
        let text = render(&report, config.format)?;
        match &config.out_dir {
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(report_file_name(&report, config.format));
                std::fs::write(&path, text)?;
                eprintln!("wrote {}", path.display());
            }
            None => print!("{text}"),
        }
        eprintln!("wall time: {:.3} s", report.wall_time.as_secs_f64());
        Ok(report.exit_code())
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
