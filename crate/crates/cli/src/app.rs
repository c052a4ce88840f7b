//! Command dispatch shared by the binary and the integration tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use tenpoint_core::{build_configuration, verify_all};

use crate::document::{ConfigDocument, ReportDocument};
use crate::error::CliError;
use crate::fuzz::{run_campaign, FuzzPolicy};
use crate::render::{render_svg, Layers, RenderStyle};
use crate::seed_text::parse_seed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "tenpoint", version, about = "Exact ten-point configuration generator and verifier")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a configuration from seed text.
    Gen {
        /// e.g. "tJ=0,tK=1,tA=-1,tB=2,tC=3,s=-3/2"
        #[arg(long)]
        seed: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-derive and verify a configuration document.
    Verify {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Verify a deterministic batch of random seeds.
    Fuzz {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        rng_seed: u64,
        #[arg(long = "max-num")]
        max_num: u32,
        #[arg(long, default_value_t = FuzzPolicy::DEFAULT_RETRIES)]
        max_retries: u32,
        /// Verify on one thread.
        #[arg(long)]
        serial: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a configuration document as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Comma list of points, circles, perspectrices, haggeCentres, pentagon; or all.
        #[arg(long, default_value = "all")]
        layers: String,
        #[arg(long, default_value_t = 800)]
        size: u32,
        #[arg(long, default_value_t = 0.05)]
        margin: f64,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source }),
    }
}

fn load(path: &Path) -> Result<tenpoint_core::WoodDesarguesConfiguration, CliError> {
    ConfigDocument::from_json(&read(path)?)?.to_configuration()
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Gen { seed, output } => {
            let config = build_configuration(&parse_seed(&seed)?)?;
            emit(output.as_deref(), &ConfigDocument::from_configuration(&config).to_json(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, report } => {
            let result = verify_all(&load(&file)?);
            let doc = ReportDocument::from_report(&result);
            emit(report.as_deref(), &doc.to_json(), out)?;
            let s = &result.summary;
            let _ = writeln!(err, "{} checks: {} pass, {} degenerate-pass, {} fail", s.total, s.pass, s.degenerate_pass, s.fail);
            for failed in result.failures() {
                let _ = writeln!(err, "FAIL {}", failed.name);
            }
            Ok(if result.all_ok() { EXIT_OK } else { EXIT_VERIFY_FAIL })
        }
        Command::Fuzz { count, rng_seed, max_num, max_retries, serial, output } => {
            if count == 0 || max_num == 0 || max_retries == 0 {
                return Err(CliError::Parse("count, max-num and max-retries must be positive".into()));
            }
            let policy = FuzzPolicy { count, rng_seed, max_magnitude: max_num, max_retries };
            let report = run_campaign(&policy, !serial)?;
            emit(output.as_deref(), &report.to_json(), out)?;
            let s = &report.summary;
            let _ = writeln!(
                err,
                "{} seeds: {} pass, {} degenerate-pass, {} fail ({} rejected draws)",
                s.seeds, s.pass, s.degenerate_pass, s.fail, s.rejections
            );
            Ok(if report.all_ok() { EXIT_OK } else { EXIT_VERIFY_FAIL })
        }
        Command::Render { file, output, layers, size, margin } => {
            if size == 0 || !(0.0..10.0).contains(&margin) {
                return Err(CliError::Parse("size must be positive and margin in [0, 10)".into()));
            }
            let style = RenderStyle { layers: Layers::parse(&layers)?, size, margin };
            write(&output, &render_svg(&load(&file)?, &style))?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            match &e {
                CliError::Degenerate(d) => {
                    let _ = writeln!(err, "error: degenerate seed: {}: {}", d.reason.code(), d.detail);
                }
                other => {
                    let _ = writeln!(err, "error: {other}");
                }
            }
            e.exit_code()
        }
    }
}
