mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use delpezzo::golden::{self, VerifyError};
use delpezzo::{Error, SurfaceModel};

use report::{Document, Failure};

#[derive(Parser)]
#[command(
    name = "acm",
    version,
    about = "Divisor classes and ACM line bundles on del Pezzo surfaces"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the (-1)-lines of a surface.
    Lines { surface: SurfaceModel },
    /// Report invariants and positivity of one divisor class.
    Classify {
        surface: SurfaceModel,
        divisor: String,
    },
    /// Count initialized ACM classes by degree (SURFACE or `all`).
    Table { surface: String },
    /// Plan the rank-n family of simple ACM bundles.
    Wild {
        surface: SurfaceModel,
        #[arg(long)]
        rank: usize,
    },
    /// Check golden files, the closed-form catalog and the invariant suite.
    Verify {
        dir: Option<PathBuf>,
        #[arg(long, conflicts_with = "dir")]
        golden: Option<PathBuf>,
        /// Write fresh golden files instead of checking them.
        #[arg(long)]
        bless: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(f) = configure_threads() {
        return fail(f);
    }
    match run(cli.command) {
        Ok((doc, code)) => {
            let text = match cli.format {
                Format::Text => doc.to_text(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&doc).expect("documents serialize");
                    s.push('\n');
                    s
                }
            };
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("acm: {}", f.message);
    ExitCode::from(f.code)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("ACM_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::usage(format!(
            "ACM_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::new(1, e.to_string()))
}

fn run(command: Command) -> Result<(Document, u8), Failure> {
    Ok(match command {
        Command::Lines { surface } => (report::lines(surface), 0),
        Command::Classify { surface, divisor } => (report::classify(surface, &divisor)?, 0),
        Command::Table { surface } => {
            let surfaces = if surface.eq_ignore_ascii_case("all") {
                SurfaceModel::all().to_vec()
            } else {
                vec![surface.parse::<SurfaceModel>().map_err(Failure::from)?]
            };
            (report::table(&surfaces), 0)
        }
        Command::Wild { surface, rank } => (report::wild(surface, rank)?, 0),
        Command::Verify { dir, golden, bless } => {
            let dir = dir.or(golden).unwrap_or_else(|| PathBuf::from("golden"));
            if bless {
                golden::write_all(&dir).map_err(Failure::from)?;
                (report::blessed(&dir), 0)
            } else {
                let outcome = golden::verify_dir(&dir)
                    .map_err(|VerifyError::Missing(m)| Failure::usage(m))?;
                let code = if outcome.passed() { 0 } else { 1 };
                (report::verified(&dir, &outcome), code)
            }
        }
    })
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedSurface { .. } => 3,
            Error::Parse { .. } | Error::InvalidSurface(_) | Error::PreconditionViolated(_) => 2,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}
