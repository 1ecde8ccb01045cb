use clap::{Parser, Subcommand, ValueEnum};
use idcodes::{Solver, DEFAULT_SEARCH_CAP};
use idcodes_cli::commands::{self, Rendered, TableFamily};

/// Exact identifying-code computations: graph parameters, twin classes,
/// and minimum identifying codes of lexicographic products, each verified
/// against brute force on demand.
///
/// Graphs are given as generator expressions (P5, C9, K3, S3 for a star
/// with 3 leaves, LEX(P3,P4)) or paths to edge-list files (`n m` header,
/// then `u v` lines; `#` comments).
///
/// Exit codes: 0 success, 2 bad input, 3 exact-search cap refusal,
/// 4 when two routes that must agree disagree.
#[derive(Parser)]
#[command(name = "idcodes", version, max_term_width = 100)]
struct Cli {
    /// Vertex cap for the exponential exact searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_CAP)]
    cap: usize,

    /// Output format: human text or the structured key-value document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Reserved for randomized corpus generation; accepted and ignored.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Identifiability and the three code parameters of one graph.
    Analyze { graph: String },
    /// Twin classes, representatives, and the surplus counts s and t.
    Twins { graph: String },
    /// Emit the lexicographic product LEX(G,H) as an edge list.
    Product { g: String, h: String },
    /// Predict the minimum identifying code of LEX(G,H) from the factors,
    /// optionally checking it against brute force on the product.
    Verify {
        g: String,
        h: String,
        /// Also run the brute-force search over the product and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Parameter table for paths or cycles, cross-checking closed forms
    /// against exact search on every in-range cell.
    Table {
        family: TableFamily,
        n_max: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let solver = Solver::with_cap(cli.cap);

    let result = match &cli.command {
        Command::Analyze { graph } => commands::analyze(graph, &solver),
        Command::Twins { graph } => commands::twins(graph),
        Command::Product { g, h } => commands::product(g, h),
        Command::Verify { g, h, oracle } => commands::verify(g, h, *oracle, &solver),
        Command::Table { family, n_max } => commands::table(*family, *n_max, &solver),
    };

    let code = match result {
        Ok(Rendered { report, text, exit }) => {
            match (&report, cli.format) {
                (Some(r), Format::Structured) => print!("{}", r.emit()),
                _ => print!("{text}"),
            }
            if let Some(r) = &report {
                if !r.timing_ms.is_empty() {
                    let stages: Vec<String> = r
                        .timing_ms
                        .iter()
                        .map(|(stage, ms)| format!("{stage}={ms}ms"))
                        .collect();
                    eprintln!("timing: {}", stages.join(" "));
                }
            }
            exit
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.exit
        }
    };
    std::process::exit(code);
}
