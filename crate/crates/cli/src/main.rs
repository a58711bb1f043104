use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dicon::{BlockKind, SolutionKind, Strategy};
use dicon_cli::{CliError, Options, Output};

/// Strong articulation points, strong bridges, 2-blocks and block-preserving
/// sparse spanning subgraphs of directed graphs.
#[derive(Parser)]
#[command(name = "dicon", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Leave the wall-clock timing out of the report.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "2d")]
    Directed,
    #[value(name = "2s")]
    Strong,
    #[value(name = "2e")]
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum VertexKind {
    #[value(name = "2d")]
    TwoDirected,
    #[value(name = "2e")]
    TwoEdge,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Dom,
    Enum,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preserve {
    Saps,
    #[value(name = "2s")]
    TwoStrong,
    #[value(name = "2e")]
    TwoEdge,
    #[value(name = "2d")]
    TwoDirected,
}

#[derive(Subcommand)]
enum Command {
    /// Strong articulation points, strong bridges and 2-connectivity flags.
    Analyze { file: PathBuf },
    /// Block decomposition of one kind.
    Blocks {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
    },
    /// Blocks that contain one vertex, given by its label.
    BlocksAt {
        file: PathBuf,
        vertex: u64,
        #[arg(long, value_enum)]
        kind: VertexKind,
    },
    /// Sparse strongly connected spanning subgraph keeping a structure.
    Mscss {
        file: PathBuf,
        #[arg(long, value_enum)]
        preserve: Preserve,
        /// When patching 2s solutions, skip SCCs outside every 2-strong block.
        #[arg(long)]
        skip_blockless: bool,
    },
    /// Compare every fast result with brute force (at most 12 vertices).
    OracleCheck { file: PathBuf },
    /// Write a seeded random strongly connected graph.
    Gen {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Option<Output>, CliError> {
    let opts = Options {
        timing: !cli.no_timing,
    };
    let out = match cli.command {
        Command::Analyze { file } => dicon_cli::analyze(&dicon_cli::load(&file)?, opts),
        Command::Blocks { file, kind, algo } => {
            let kind = match kind {
                Kind::Directed => BlockKind::TwoDirected,
                Kind::Strong => BlockKind::TwoStrong,
                Kind::Edge => BlockKind::TwoEdge,
            };
            let algo = match algo {
                Algo::Dom => Strategy::Dominators,
                Algo::Enum => Strategy::Enumeration,
                Algo::Auto => Strategy::Auto,
            };
            dicon_cli::blocks(&dicon_cli::load(&file)?, kind, algo, opts)
        }
        Command::BlocksAt { file, vertex, kind } => {
            let kind = match kind {
                VertexKind::TwoDirected => BlockKind::TwoDirected,
                VertexKind::TwoEdge => BlockKind::TwoEdge,
            };
            dicon_cli::blocks_at(&dicon_cli::load(&file)?, vertex, kind, opts)?
        }
        Command::Mscss {
            file,
            preserve,
            skip_blockless,
        } => {
            let kind = match preserve {
                Preserve::Saps => SolutionKind::Saps,
                Preserve::TwoStrong => SolutionKind::TwoStrong,
                Preserve::TwoEdge => SolutionKind::TwoEdge,
                Preserve::TwoDirected => SolutionKind::TwoDirected,
            };
            dicon_cli::mscss(&dicon_cli::load(&file)?, kind, skip_blockless, opts)?
        }
        Command::OracleCheck { file } => dicon_cli::oracle_check(&dicon_cli::load(&file)?, opts)?,
        Command::Gen { n, m, seed, out } => {
            let file = dicon_cli::generate(n, m, seed)?;
            let text = file.to_text(Some(&format!(
                "random strongly connected graph n={n} m={m} seed={seed}"
            )));
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| CliError {
                    code: 1,
                    message: format!("cannot write {}: {e}", path.display()),
                })?,
                None => {
                    let _ = std::io::stdout().lock().write_all(text.as_bytes());
                }
            }
            return Ok(None);
        }
    };
    Ok(Some(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(out)) => {
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
                Format::Text => out.text,
            };
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
