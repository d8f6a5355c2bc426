use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use duadic::pipeline::{self, MethodChoice, SetRule};
use duadic::report::{render, BoundReport, CatalogReport, CodeReport, LemmaMatrix, Report, TableReport, Target};
use duadic::{parallel, parse_residues, Error, Format};

/// Binary duadic codes C[r,m,S] of length 2^m - 1 built from binary-weight classes.
#[derive(Parser)]
#[command(name = "duadic", version)]
#[command(after_help = "Set DUADIC_THREADS to cap the number of worker threads.\n\
Exit codes: 0 success, 1 verification failure, 2 usage error.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build C[r,m,S] with its dual and extended codes, classification and BCH certificate.
    #[command(after_help = csv_help::<CodeReport>())]
    Construct {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        m: u32,
        /// Comma-separated residues mod r.
        #[arg(short = 'S')]
        s: String,
        /// Multipliers for the BCH certificate (default 2^((m-1)/2)-1, 2^((m+1)/2)-1).
        #[arg(long = "v", value_delimiter = ',')]
        v: Option<Vec<usize>>,
        /// Accept any r, m and |S|; such specs are reported as non-duadic.
        #[arg(long)]
        unchecked: bool,
        #[command(flatten)]
        output: Output,
    },
    /// All duadic S for m ≡ t (mod r), by exhaustive search.
    #[command(after_help = csv_help::<CatalogReport>())]
    Catalog {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        t: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Parameter table over a list of degrees.
    #[command(after_help = csv_help::<TableReport>())]
    Table {
        #[arg(short)]
        r: u32,
        /// Comma-separated odd degrees.
        #[arg(short, value_delimiter = ',', num_args = 0..)]
        m: Vec<u32>,
        /// Comma-separated residues, or "all" for every catalog set.
        #[arg(short = 'S')]
        s: String,
        #[arg(long = "v", value_delimiter = ',')]
        v: Option<Vec<usize>>,
        #[command(flatten)]
        output: Output,
    },
    /// Check the progression statements behind each family on every catalog set.
    #[command(after_help = csv_help::<LemmaMatrix>())]
    VerifyLemmas {
        #[arg(short)]
        r: u32,
        #[arg(short, value_delimiter = ',', required = true)]
        m: Vec<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Minimum distance, exact or bracketed by BCH and information-set search.
    #[command(after_help = csv_help::<BoundReport>())]
    Mindist {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        m: u32,
        #[arg(short = 'S')]
        s: String,
        #[arg(long, value_enum, default_value = "code")]
        target: Target,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodChoice,
        /// Information-set rounds.
        #[arg(long, default_value_t = 100)]
        effort: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "v", value_delimiter = ',')]
        v: Option<Vec<usize>>,
        #[arg(long)]
        unchecked: bool,
        #[command(flatten)]
        output: Output,
    },
}

fn csv_help<R: Report>() -> String {
    format!("CSV columns: {}", R::CSV_COLUMNS.join(", "))
}

fn emit<R: Report>(report: &R, output: &Output) -> Result<Vec<String>, Error> {
    let text = render(report, output.format)?;
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(report.failures())
}

fn run(cli: &Cli) -> Result<Vec<String>, Error> {
    match &cli.command {
        Command::Construct { r, m, s, v, unchecked, output } => {
            let spec = pipeline::make_spec(*r, *m, &parse_residues(s)?, *unchecked)?;
            emit(&pipeline::construct(&spec, v.as_deref())?, output)
        }
        Command::Catalog { r, t, output } => emit(&pipeline::catalog(*r, *t)?, output),
        Command::Table { r, m, s, v, output } => {
            let rule = if s.trim() == "all" { SetRule::All } else { SetRule::Fixed(parse_residues(s)?) };
            emit(&pipeline::table(*r, &rule, m, v.as_deref())?, output)
        }
        Command::VerifyLemmas { r, m, output } => emit(&pipeline::verify_lemmas(*r, m)?, output),
        Command::Mindist { r, m, s, target, method, effort, seed, v, unchecked, output } => {
            let spec = pipeline::make_spec(*r, *m, &parse_residues(s)?, *unchecked)?;
            emit(&pipeline::mindist(&spec, *target, *method, *effort, *seed, v.as_deref())?, output)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match parallel::pool().install(|| run(&cli)) {
        Ok(failures) if failures.is_empty() => ExitCode::SUCCESS,
        Ok(failures) => {
            for f in failures {
                eprintln!("verification failed: {f}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
