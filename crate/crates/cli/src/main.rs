use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use rted_cli::{
    append_csv, compute, count_rows, join, load_dir, read_tree, strategy_rows, write_csv,
    AlgoChoice, CliError, CostSpec, Result,
};
use rted_core::{
    gen_shape, ingest_xml, serialize_bracket, Algorithm, LabelMode, ShapeKind, ShapeSize,
    ShapeSpec, TreeIndex,
};

#[derive(Parser)]
#[command(
    name = "rted",
    version,
    about = "Tree edit distance with optimal path strategies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two bracket-encoded trees.
    Compute {
        file_a: PathBuf,
        file_b: PathBuf,
        /// rted, zhang-l, zhang-r, klein-h, demaine-h or brute.
        #[arg(long, default_value = "rted")]
        algo: AlgoChoice,
        /// `unit` or DEL,INS,REN.
        #[arg(long, default_value = "unit")]
        costs: CostSpec,
        /// Append a CSV report row to this file.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
    /// Dump the strategy an algorithm uses, one `v,w,side,kind` row per pair.
    Strategy {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, default_value = "rted")]
        algo: Algorithm,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relevant-subproblem counts on identical pairs of generated trees.
    Count {
        #[arg(long, value_delimiter = ',', required = true)]
        shapes: Vec<ShapeKind>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "rted,zhang-l,zhang-r,klein-h,demaine-h"
        )]
        algos: Vec<Algorithm>,
        /// Seed for random shapes.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run each strategy and report the executed count and timings.
        #[arg(long)]
        execute: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Self-join of a directory of trees: pairs with distance below tau.
    Join {
        #[arg(long)]
        dir: PathBuf,
        /// Threshold; `inf` matches every pair.
        #[arg(long, default_value = "inf")]
        tau: f64,
        #[arg(long, value_delimiter = ',', default_value = "rted")]
        algo: Vec<Algorithm>,
        #[arg(long, default_value = "unit")]
        costs: CostSpec,
        /// Worker threads; 0 picks the number of CPUs.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic tree.
    #[command(group(ArgGroup::new("extent").required(true).args(["size", "depth"])))]
    Generate {
        #[arg(long)]
        shape: ShapeKind,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 15)]
        max_depth: usize,
        #[arg(long, default_value_t = 6)]
        max_fanout: usize,
        /// Draw labels from this many letters instead of labeling every node `x`.
        #[arg(long, value_name = "K")]
        labels: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert the element structure of an XML document to a bracket tree.
    Ingest {
        #[arg(long)]
        xml: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = fs::File::create(p).map_err(|e| CliError::io(p, e))?;
            Ok(Box::new(io::BufWriter::new(f)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    let mut out = output(path)?;
    writeln!(out, "{text}")?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Compute {
            file_a,
            file_b,
            algo,
            costs,
            report,
        } => {
            let (f, g) = (read_tree(&file_a)?, read_tree(&file_b)?);
            let r = compute(&f, &g, algo, costs.model())?;
            println!("{}", r.distance);
            if let Some(path) = report {
                append_csv(&path, &r)?;
            }
        }
        Command::Strategy {
            file_a,
            file_b,
            algo,
            out,
        } => {
            let f = TreeIndex::build(&read_tree(&file_a)?);
            let g = TreeIndex::build(&read_tree(&file_b)?);
            let (rows, cost) = strategy_rows(&f, &g, algo);
            write_csv(output(out.as_deref())?, &rows)?;
            eprintln!("cost {cost}");
        }
        Command::Count {
            shapes,
            sizes,
            algos,
            seed,
            execute,
            out,
        } => {
            let rows = count_rows(&shapes, &sizes, &algos, seed, execute)?;
            write_csv(output(out.as_deref())?, &rows)?;
            if let Some(r) = rows
                .iter()
                .find(|r| r.executed.is_some_and(|e| e != r.subproblems))
            {
                return Err(CliError::Other(format!(
                    "{} {} {}: executed {} subproblems, predicted {}",
                    r.shape,
                    r.size,
                    r.algo,
                    r.executed.unwrap_or_default(),
                    r.subproblems
                )));
            }
        }
        Command::Join {
            dir,
            tau,
            algo,
            costs,
            threads,
            out,
        } => {
            let trees = load_dir(&dir)?;
            let result = join(&trees, tau, &algo, costs.model(), threads)?;
            write_csv(output(out.as_deref())?, &result.pairs)?;
            for (a, n) in &result.subproblems {
                eprintln!("subproblems {a} {n}");
            }
        }
        Command::Generate {
            shape,
            size,
            depth,
            seed,
            max_depth,
            max_fanout,
            labels,
            out,
        } => {
            let size = match (size, depth) {
                (Some(n), _) => ShapeSize::Nodes(n),
                (None, Some(d)) => ShapeSize::Depth(d),
                (None, None) => unreachable!("clap requires one of --size and --depth"),
            };
            let spec = ShapeSpec {
                kind: shape,
                size,
                seed,
                max_depth,
                max_fanout,
                labels: labels.map_or(LabelMode::Uniform, LabelMode::Alphabet),
            };
            write_text(out.as_deref(), &serialize_bracket(&gen_shape(&spec)?))?;
        }
        Command::Ingest { xml, out } => {
            let text = fs::read_to_string(&xml).map_err(|e| CliError::io(&xml, e))?;
            let tree = ingest_xml(&text).map_err(|source| CliError::Input {
                path: xml.clone(),
                source,
            })?;
            write_text(out.as_deref(), &serialize_bracket(&tree))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
