mod certs;
mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "locality",
    version,
    about = "Exact locality, cutwidth and pathwidth with certificates"
)]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Locality of a word, with an optimal marking sequence.
    Loc {
        /// The word; characters are symbols unless it contains whitespace.
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = LocMethod::Dp)]
        method: LocMethod,
        /// Treat the input as whitespace-separated symbol names.
        #[arg(long)]
        tokens: bool,
        /// Solve every non-empty line of FILE, in parallel.
        #[arg(long, value_name = "FILE", conflicts_with = "word")]
        batch: Option<PathBuf>,
        /// Also write the marking sequence to FILE.
        #[arg(long, value_name = "FILE")]
        cert: Option<PathBuf>,
    },
    /// Cutwidth or pathwidth of a graph file.
    Width {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Cutwidth)]
        which: Which,
        /// How cutwidth is computed.
        #[arg(long, value_enum, default_value_t = WidthMethod::Exact)]
        method: WidthMethod,
        #[arg(long, value_name = "FILE")]
        cert: Option<PathBuf>,
    },
    /// Build a reduction, or translate a certificate back through it.
    Reduce {
        /// A word for word2cut and word2pw, a graph file otherwise.
        input: String,
        #[arg(long, value_enum)]
        kind: ReduceKind,
        /// Build H with the `$`/`#` padding for this k (word2cut).
        #[arg(long)]
        k: Option<usize>,
        /// Closed walk of the doubled graph to read words from (graph2word).
        #[arg(long, value_name = "WALK")]
        cycle: Option<String>,
        /// One word per traversal instead of one per vertex (graph2word).
        #[arg(long)]
        all_edges: bool,
        /// Keep only the word chosen for this vertex (graph2word).
        #[arg(long, value_name = "VERTEX")]
        anchor: Option<String>,
        #[arg(long)]
        tokens: bool,
        /// Certificate for the constructed instance, translated back to the source.
        #[arg(long, value_name = "FILE")]
        translate: Option<PathBuf>,
        /// Write the constructed graph (or translated certificate) here instead of stdout.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Best run of greedy marking strategies.
    Greedy {
        #[arg(conflicts_with = "family", required_unless_present = "family")]
        word: Option<String>,
        /// A word family as NAME:L, with NAME one of be, alpha6, gamma, delta.
        #[arg(long, value_name = "NAME:L")]
        family: Option<String>,
        /// Strategy tag (SO, MO, SNM, LR, BE, BE-SO, ...) or `all`.
        #[arg(long, default_value = "all")]
        strategy: String,
        /// Also report loc and greedy/loc.
        #[arg(long)]
        ratio: bool,
        #[arg(long)]
        tokens: bool,
    },
    /// Build the clique gadget word for a graph file and clique size.
    Gadget {
        graph: PathBuf,
        ell: usize,
        /// Solve the word exactly and compare with a clique search.
        #[arg(long)]
        verify: bool,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Print a member of a word family.
    Family {
        /// zimin I | alpha N K | beta K | be L | alpha6 L | gamma L | delta L
        name: String,
        params: Vec<usize>,
    },
    /// Re-validate a certificate against its instance.
    Check {
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        word: Option<String>,
        #[arg(long)]
        tokens: bool,
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
        /// Marking sequence (with --word), arrangement or decomposition (with --graph).
        #[arg(long, value_enum)]
        kind: Option<CertKind>,
        cert: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LocMethod {
    Dp,
    Bruteforce,
    ViaCutwidth,
    ViaPathwidth,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Which {
    Cutwidth,
    Pathwidth,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum WidthMethod {
    Exact,
    ViaLocality,
    ViaPathwidth,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum ReduceKind {
    Word2cut,
    Word2pw,
    Graph2word,
    Graph2pw,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum CertKind {
    Arrangement,
    Decomposition,
}

/// Exit codes: 0 ok, 2 bad input, 3 resource cap, 4 broken guarantee.
fn exit_code(err: &anyhow::Error) -> u8 {
    use locality::Error;
    match err.downcast_ref::<Error>() {
        Some(Error::ResourceLimit { .. }) => 3,
        Some(Error::ContractViolation(_)) => 4,
        Some(Error::Parse(_) | Error::Precondition(_) | Error::InvalidCertificate(_)) => 2,
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli.command) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let out = if cli.json {
                serde_json::to_string(&report).expect("report serialises") + "\n"
            } else {
                report.text.clone()
            };
            // A closed pipe downstream is not an error of ours.
            let _ = io::stdout().lock().write_all(out.as_bytes());
            if report.valid {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: the result did not re-validate");
                ExitCode::from(4)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
