use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use graphpoly::classes::ingest_graph6;
use graphpoly::experiments::{
    coxi_targets, dp_chain_audit, fingerprint_search, mate_buckets, pendant_frequency, uniqueness_ratio, FrequencyMode,
};
use graphpoly::format::{parse_line, parse_lines, write_line};
use graphpoly::invariants::PolynomialId;
use graphpoly::mates::{
    clique_root_swap, find_pseudosimilar_trees, graft_p5, graft_with_occurrence, laplacian_swap_search, p5_graft_swap,
    schwenk_swap, stem_toggle, verify_mate, xi_swap, Construction, PairKind, PseudosimilarPair,
};
use graphpoly::pendant::RootedPendant;
use graphpoly::{enumerate_class, Error, Graph, GraphClass, Polynomial};
use serde_json::json;

#[derive(Parser)]
#[command(name = "graphpoly", version, about = "Exact graph polynomials, mate constructions and uniqueness experiments")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "GRAPHPOLY_JOBS")]
    jobs: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial for each input graph.
    Compute {
        #[arg(long)]
        poly: PolynomialId,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every graph of a class and order as graph6.
    Enumerate {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Fraction of graphs without a mate of the same order.
    Ratio {
        #[arg(long)]
        poly: PolynomialId,
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include the mate buckets (JSON only).
        #[arg(long)]
        buckets: bool,
    },
    /// Build and certify a mate pair, or search for gadgets.
    Mates(MatesArgs),
    /// Check the distinctive-power claims between polynomials on a class.
    Audit {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
    },
    /// Distribution of labeled pendant-occurrence counts.
    PendantFreq {
        /// Pendant graph (graph6).
        #[arg(long)]
        pendant: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        /// Random samples; omit for an exhaustive run.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Scan graph6 input for the printed order-10 fingerprints.
    Search {
        #[command(flatten)]
        input: Input,
        /// Maximum number of graphs to scan.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
}

#[derive(Args)]
struct Input {
    /// A single graph in graph6 or sparse6.
    #[arg(long, conflicts_with = "file")]
    graph6: Option<String>,
    /// A file with one graph per line; standard input when neither is given.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct MatesArgs {
    #[arg(long)]
    construction: Construction,
    /// Graph to act on (stem_toggle, given).
    #[arg(long)]
    graph6: Option<String>,
    /// Second graph (given).
    #[arg(long)]
    other: Option<String>,
    /// Polynomial for `given`.
    #[arg(long)]
    poly: Option<PolynomialId>,
    /// Host graph the gadget is grafted onto (default: a single vertex).
    #[arg(long)]
    host: Option<String>,
    #[arg(long, default_value_t = 0)]
    attach: usize,
    /// Inner path vertex used as the root of the five-vertex path (1, 2 or 3).
    #[arg(long, default_value_t = 2)]
    root: usize,
    /// What `search` looks for.
    #[arg(long, value_enum, default_value_t = SearchTarget::Pseudosimilar)]
    target: SearchTarget,
    #[arg(long, default_value_t = 9)]
    max_order: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchTarget {
    Pseudosimilar,
    Laplacian,
}

fn read_graphs(input: &Input) -> Result<Vec<Graph>, Error> {
    if let Some(code) = &input.graph6 {
        return Ok(vec![parse_line(code.trim())?]);
    }
    let text = match &input.file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Error::Domain(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    parse_lines(&text)
}

fn json_line(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn schwenk_pair() -> Result<PseudosimilarPair, Error> {
    let target: Polynomial = "x^8 - 6x^6 + 10x^4 - 4x^2".parse()?;
    for p in find_pseudosimilar_trees(9)? {
        if p.deleted_char_poly()? == target {
            return Ok(p);
        }
    }
    Err(Error::Consistency("the order-9 gadget was not found".into()))
}

fn pseudosimilar_pair() -> Result<PseudosimilarPair, Error> {
    find_pseudosimilar_trees(11)?
        .into_iter()
        .find(|p| p.kind == PairKind::Pseudosimilar)
        .ok_or_else(|| Error::Consistency("no pseudosimilar tree up to order 11".into()))
}

fn need(flag: &str, v: &Option<String>) -> Result<Graph, Error> {
    let code = v.as_deref().ok_or_else(|| Error::Domain(format!("--{flag} is required for this construction")))?;
    parse_line(code.trim())
}

fn run_mates(a: &MatesArgs) -> Result<String, Error> {
    let host = match &a.host {
        Some(code) => parse_line(code.trim())?,
        None => Graph::empty(1),
    };
    let cert = match a.construction {
        Construction::SchwenkSwap | Construction::XiSwap => {
            let pair = if a.construction == Construction::SchwenkSwap { schwenk_pair()? } else { pseudosimilar_pair()? };
            let (g, occ) = graft_with_occurrence(&host, a.attach, &pair.rooted_at_v()?)?;
            if a.construction == Construction::SchwenkSwap {
                schwenk_swap(&g, &occ, &pair)?
            } else {
                xi_swap(&g, &occ, &pair)?
            }
        }
        Construction::StemToggle => match stem_toggle(&need("graph6", &a.graph6)?)? {
            Some(c) => c,
            None => return Ok(json_line(&json!({ "construction": "stem_toggle", "applicable": false }))),
        },
        Construction::P5Graft => {
            let (g, occ) = graft_p5(&host, a.attach, a.root)?;
            p5_graft_swap(&g, &occ)?
        }
        Construction::CliqueRootSwap => {
            let (g, occ) = graft_with_occurrence(&host, a.attach, &RootedPendant::new(Graph::path(3), 0)?)?;
            clique_root_swap(&g, &occ)?
        }
        Construction::Given => {
            let id = a.poly.ok_or_else(|| Error::Domain("--poly is required for `given`".into()))?;
            verify_mate(&need("graph6", &a.graph6)?, &need("other", &a.other)?, id)?
        }
        Construction::Search => {
            return Ok(match a.target {
                SearchTarget::Pseudosimilar => json_line(&find_pseudosimilar_trees(a.max_order)?),
                SearchTarget::Laplacian => json_line(&laplacian_swap_search(a.max_order, a.seed)?),
            });
        }
    };
    Ok(json_line(&cert))
}

fn run(cli: &Cli) -> Result<String, Error> {
    Ok(match &cli.command {
        Command::Compute { poly, input, format } => {
            let mut out = String::new();
            for g in read_graphs(input)? {
                let p = poly.compute(&g)?;
                match format {
                    Format::Text => out += &format!("{p}\n"),
                    Format::Json => {
                        let rec = json!({ "graph6": write_line(&g), "polynomial_id": poly, "polynomial": p });
                        out += &(serde_json::to_string(&rec).expect("serializes") + "\n");
                    }
                    Format::Csv => out += &format!("{},{},\"{}\"\n", write_line(&g), poly, p),
                }
            }
            out
        }
        Command::Enumerate { class, n, format } => {
            let gs = enumerate_class(*class, *n)?;
            match format {
                Format::Json => json_line(&gs.iter().map(write_line).collect::<Vec<_>>()),
                _ => gs.iter().map(|g| write_line(g) + "\n").collect(),
            }
        }
        Command::Ratio { poly, class, n, format, buckets } => {
            let r = uniqueness_ratio(*poly, *class, *n)?;
            match format {
                Format::Csv | Format::Text => format!("{}\n{}\n", graphpoly::experiments::uniqueness::CSV_HEADER, r.csv_row()),
                Format::Json if *buckets => {
                    json_line(&json!({ "report": r, "buckets": mate_buckets(*poly, *class, *n)? }))
                }
                Format::Json => json_line(&r),
            }
        }
        Command::Mates(a) => run_mates(a)?,
        Command::Audit { class, n } => json_line(&dp_chain_audit(*class, *n)?),
        Command::PendantFreq { pendant, root, class, n, samples, seed } => {
            let p = RootedPendant::new(parse_line(pendant.trim())?, *root)?;
            let mode = match samples {
                Some(s) => FrequencyMode::Sample { samples: *s, seed: *seed },
                None => FrequencyMode::Exhaustive,
            };
            json_line(&pendant_frequency(&p, *class, *n, mode)?)
        }
        Command::Search { input, budget } => {
            let text = match (&input.graph6, &input.file) {
                (Some(g), _) => g.clone(),
                (None, Some(path)) => fs::read_to_string(path)
                    .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?,
                (None, None) => {
                    let mut s = String::new();
                    io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| Error::Domain(format!("cannot read standard input: {e}")))?;
                    s
                }
            };
            let graphs = ingest_graph6(&text, GraphClass::All, None)?;
            json_line(&fingerprint_search(&coxi_targets()?, graphs, *budget)?)
        }
    })
}

fn help_footer() -> String {
    let ids: Vec<&str> = PolynomialId::ALL.iter().map(|p| p.name()).collect();
    let classes: Vec<&str> = GraphClass::ALL.iter().map(|c| c.name()).collect();
    let constructions: Vec<&str> = Construction::ALL.iter().map(|c| c.name()).collect();
    format!(
        "Polynomial ids: {}\nClasses: {}\nConstructions: {}\n\nExit status: 0 on success, 1 on invalid input, 2 when a size budget is exceeded.",
        ids.join(", "),
        classes.join(", "),
        constructions.join(", ")
    )
}

fn main() -> ExitCode {
    let footer = help_footer();
    let mut cmd = Cli::command().after_help(footer.clone());
    let names: Vec<String> = cmd.get_subcommands().map(|s| s.get_name().to_string()).collect();
    for name in names {
        cmd = cmd.mut_subcommand(name, |s| s.after_help(footer.clone()));
    }
    let cli = match cmd.try_get_matches().and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start {jobs} workers: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, text.as_bytes()),
                None => io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_resource() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
