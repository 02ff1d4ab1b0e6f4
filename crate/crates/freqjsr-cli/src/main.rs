//! Command-line front end: feasibility checks, block listings, transition
//! graph export, radius bound tables, two-sided verification, and sequence
//! sampling over JSON problem files.
//!
//! Exit codes: 0 success, 1 empty constraint or language, 2 input error,
//! 3 internal invariant violation.

mod problem;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use freqjsr::{
    build_graph, check_nonempty, classify_rigidity, count_blocks, count_bounds, enumerate_words,
    export_dot, sample_sequence, verify_berger_wang, NormKind, SpectralError, WordSource,
};
use problem::{Mode, ProblemFile};

const EXIT_OK: u8 = 0;
const EXIT_EMPTY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "freqjsr",
    version,
    about = "Symbolic sequences under sliding-window frequency constraints \
             and bounds on the constrained joint spectral radius"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum NormArg {
    Rowsum,
    Colsum,
    Spectral,
}

impl From<NormArg> for NormKind {
    fn from(a: NormArg) -> NormKind {
        match a {
            NormArg::Rowsum => NormKind::RowSum,
            NormArg::Colsum => NormKind::ColSum,
            NormArg::Spectral => NormKind::Spectral,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Report integer occurrence bounds, feasibility, and rigidity
    Check {
        file: PathBuf,
    },
    /// List admissible blocks in lexicographic order
    Blocks {
        file: PathBuf,
        /// Maximum number of blocks to print (0 for the count only)
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Build the block transition graph, optionally writing DOT
    Graph {
        file: PathBuf,
        /// Write the graph in DOT format to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Radius bound table as CSV
    Radius {
        file: PathBuf,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = NormArg::Rowsum)]
        norm: NormArg,
        #[arg(long, value_enum, default_value_t = Mode::Constrained)]
        mode: Mode,
        /// Emit exact hexadecimal float encodings instead of decimals
        #[arg(long)]
        raw: bool,
        /// Write the CSV here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Two-sided radius verification across all norms
    Verify {
        file: PathBuf,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        /// Accepted gap between the best bounds
        #[arg(long, default_value_t = 0.05)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Mode::Constrained)]
        mode: Mode,
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample an admissible word of a given length
    Sample {
        file: PathBuf,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Check { file } => cmd_check(&file),
        Command::Blocks { file, limit } => cmd_blocks(&file, limit),
        Command::Graph { file, dot } => cmd_graph(&file, dot.as_deref()),
        Command::Radius { file, n_max, norm, mode, raw, output } => {
            cmd_radius(&file, n_max, norm.into(), mode, raw, output.as_deref())
        }
        Command::Verify { file, n_max, tol, mode, raw, output } => {
            cmd_verify(&file, n_max, tol, mode, raw, output.as_deref())
        }
        Command::Sample { file, length, seed } => cmd_sample(&file, length, seed),
    }
}

fn cmd_check(file: &std::path::Path) -> Result<u8, String> {
    let problem = ProblemFile::load(file)?;
    let c = problem.constraint()?;
    let bounds = count_bounds(&c);
    let report = check_nonempty(&c);
    let rigidity = classify_rigidity(&c);
    print!(
        "{}",
        render::check_report(
            c.alphabet_size(),
            c.window(),
            bounds.lo(),
            bounds.hi(),
            &report,
            &rigidity
        )
    );
    Ok(if report.nonempty { EXIT_OK } else { EXIT_EMPTY })
}

fn cmd_blocks(file: &std::path::Path, limit: usize) -> Result<u8, String> {
    let problem = ProblemFile::load(file)?;
    let c = problem.constraint()?;
    if limit > 0 {
        for block in enumerate_words(&c, c.window()).take(limit) {
            println!("{block}");
        }
    }
    let total = count_blocks(&c);
    println!("total={total}");
    Ok(if total == 0u32.into() { EXIT_EMPTY } else { EXIT_OK })
}

fn cmd_graph(file: &std::path::Path, dot: Option<&std::path::Path>) -> Result<u8, String> {
    let problem = ProblemFile::load(file)?;
    let c = problem.constraint()?;
    if !check_nonempty(&c).nonempty {
        eprintln!("constraint admits no blocks; nothing to build");
        return Ok(EXIT_EMPTY);
    }
    let graph = build_graph(&c);
    println!("nodes={} edges={}", graph.node_count(), graph.edge_count());
    if let Some(path) = dot {
        fs::write(path, export_dot(&graph)).map_err(|e| format!("{}: {e}", path.display()))?;
        println!("dot written to {}", path.display());
    }
    Ok(EXIT_OK)
}

fn write_table(table: &str, output: Option<&std::path::Path>) -> Result<(), String> {
    match output {
        None => {
            print!("{table}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, table).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}

/// Maps radius-evaluation failures onto the exit contract: everything the
/// caller wrote wrong is an input error, a non-converging eigenvalue
/// iteration is an internal one.
fn spectral_exit(e: SpectralError) -> Result<u8, String> {
    match e {
        SpectralError::NoConvergence => {
            eprintln!("error: {e}");
            Ok(EXIT_INTERNAL)
        }
        other => Err(other.to_string()),
    }
}

fn cmd_radius(
    file: &std::path::Path,
    n_max: usize,
    norm: NormKind,
    mode: Mode,
    raw: bool,
    output: Option<&std::path::Path>,
) -> Result<u8, String> {
    let problem = ProblemFile::load(file)?;
    let ms = problem.matrix_set()?;
    let src = problem.word_source(mode)?;
    if let WordSource::Constrained(c) = &src {
        if !check_nonempty(c).nonempty {
            write_table(&render::radius_csv_empty(raw), output)?;
            return Ok(EXIT_EMPTY);
        }
    }
    match freqjsr::bracket(&ms, &src, n_max, norm) {
        Ok(bracket) => {
            write_table(&render::radius_csv(&bracket, raw), output)?;
            Ok(EXIT_OK)
        }
        Err(e) => spectral_exit(e),
    }
}

fn cmd_verify(
    file: &std::path::Path,
    n_max: usize,
    tol: f64,
    mode: Mode,
    raw: bool,
    output: Option<&std::path::Path>,
) -> Result<u8, String> {
    let problem = ProblemFile::load(file)?;
    let ms = problem.matrix_set()?;
    let src = problem.word_source(mode)?;
    if let WordSource::Constrained(c) = &src {
        if !check_nonempty(c).nonempty {
            eprintln!("constraint admits no blocks; nothing to verify");
            return Ok(EXIT_EMPTY);
        }
    }
    let report = match verify_berger_wang(&ms, &src, n_max) {
        Ok(report) => report,
        Err(e) => return spectral_exit(e),
    };
    write_table(&render::verify_csv(&report, raw), output)?;
    let (summary, code) = render::verify_verdict(&report, tol);
    print!("{summary}");
    if code == EXIT_INTERNAL {
        for violation in &report.violations {
            eprintln!("invariant violation: {violation}");
        }
    }
    Ok(code)
}

fn cmd_sample(file: &std::path::Path, length: usize, seed: u64) -> Result<u8, String> {
    let problem = ProblemFile::load(file)?;
    let c = problem.constraint()?;
    match sample_sequence(&c, length, seed) {
        Ok(word) => {
            let rendered: Vec<String> = word.symbols().iter().map(|s| s.to_string()).collect();
            println!("{}", rendered.join(","));
            Ok(EXIT_OK)
        }
        Err(freqjsr::SubshiftError::EmptyConstraint) => {
            eprintln!("constraint admits no blocks; nothing to sample");
            Ok(EXIT_EMPTY)
        }
        Err(e) => Err(e.to_string()),
    }
}
