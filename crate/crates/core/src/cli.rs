//! The `jdoc` command line: `jdoc (validate|fmt|stats) (FILE|-) [--pretty] [--output PATH]`.
//!
//! Exit codes: 0 on success, 1 when the input is not a valid document, 2 on
//! usage or IO errors. Results go to stdout (or `--output`), diagnostics to
//! stderr.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::json::JTy;
use crate::jsontext::{parse_bytes, serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "jdoc",
    version,
    about = "Validate, format and inspect JSON documents whose root is an object"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the input is a well-formed document.
    Validate(CommonArgs),
    /// Re-serialize the document.
    Fmt(CommonArgs),
    /// Print node counts and nesting depth.
    Stats(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Input file, or `-` for stdin.
    input: String,
    /// Indent output by two spaces per level.
    #[arg(long)]
    pretty: bool,
    /// Write results to PATH instead of stdout.
    #[arg(long, short, value_name = "PATH")]
    output: Option<PathBuf>,
}

/// A parsed command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub subcommand: Mode,
    /// `None` reads stdin.
    pub input: Option<PathBuf>,
    pub pretty: bool,
    /// `None` writes to stdout.
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Validate,
    Fmt,
    Stats,
}

impl CliConfig {
    /// Parses `argv`, program name first.
    pub fn from_args<I, T>(argv: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(argv)?;
        let (subcommand, args) = match cli.command {
            Command::Validate(a) => (Mode::Validate, a),
            Command::Fmt(a) => (Mode::Fmt, a),
            Command::Stats(a) => (Mode::Stats, a),
        };
        Ok(CliConfig {
            subcommand,
            input: (args.input != "-").then(|| PathBuf::from(args.input)),
            pretty: args.pretty,
            output: args.output,
        })
    }
}

/// Runs the tool and returns its exit code.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::from_args(argv) {
        Ok(config) => config,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(&config, stdin) {
        Ok(text) => match emit(&config, &text, stdout) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: io: {e}");
                EXIT_USAGE
            }
        },
        Err(Failure::Invalid(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INVALID
        }
        Err(Failure::Io(message)) => {
            let _ = writeln!(stderr, "error: io: {message}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Invalid(String),
    Io(String),
}

fn read_input(config: &CliConfig, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    match &config.input {
        Some(path) => fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn execute(config: &CliConfig, stdin: &mut dyn Read) -> Result<String, Failure> {
    let bytes = read_input(config, stdin)?;
    let doc = parse_bytes(&bytes).map_err(|e| Failure::Invalid(e.to_string()))?;
    let text = match config.subcommand {
        Mode::Validate => "valid\n".to_owned(),
        Mode::Fmt => {
            let mut text =
                serialize(&doc, config.pretty).map_err(|e| Failure::Invalid(e.to_string()))?;
            text.push('\n');
            text
        }
        Mode::Stats => {
            let counts = doc.kind_counts();
            let mut text = format!("nodes: {}\ndepth: {}\n", doc.count_nodes(), doc.max_depth());
            for &ty in &[JTy::Doc, JTy::Map, JTy::Array, JTy::Value] {
                text.push_str(&format!("{ty}: {}\n", counts.get(ty)));
            }
            text
        }
    };
    Ok(text)
}

fn emit(config: &CliConfig, text: &str, stdout: &mut dyn Write) -> io::Result<()> {
    match &config.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()),
    }
}
