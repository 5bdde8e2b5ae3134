use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperindep::compare;
use hyperindep::config::VerifyConfig;
use hyperindep::corpus;
use hyperindep::hg::{parse_hg, write_hg};
use hyperindep::json::{self, BoundReportJson, ExtractionJson, OracleJson};
use hyperindep::verify;
use hyperindep_core::bounds::{bound_report, BoundReport};
use hyperindep_core::exact::{alpha_k_exact, chi_k_exact, OracleResult, Witness};
use hyperindep_core::extract::{
    best_extract, greedy_peel, partition_extract, thm37_extract,
};
use hyperindep_core::generate::{gen_complete, gen_random_uniform};
use hyperindep_core::{Error as CoreError, ExtractionResult, Hypergraph, VertexSet};

const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Parser)]
#[command(name = "hyperindep", version, about = "Lower bounds and exact values for k-independence in uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Output file (gen, compare) or counterexample directory (verify).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Machine-readable JSON output (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Human-readable aligned output.
    #[arg(long, global = true)]
    table: bool,
    /// Generator seed; for verify, overrides the config's master seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Oracle node budget.
    #[arg(long, global = true)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random or complete s-uniform hypergraph in .hg format.
    Gen(GenArgs),
    /// Every lower bound on alpha_k for an instance.
    Bounds(InstanceArgs),
    /// Extract a k-independent set.
    Extract {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value = "best")]
        algo: AlgoArg,
    },
    /// Exact alpha_k or chi_k by exhaustive search.
    Exact {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value = "alpha")]
        quantity: QuantityArg,
    },
    /// Check every property over a generated corpus.
    Verify {
        /// Flat key = value config; defaults apply when omitted.
        config: Option<PathBuf>,
    },
    /// CSV of bounds, exact values and extraction sizes.
    Compare {
        /// Instances in .hg format.
        files: Vec<PathBuf>,
        /// Also include the corpus described by this verify config.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated k values.
        #[arg(short, long, value_delimiter = ',', default_value = "0,1,2,3")]
        k: Vec<usize>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    complete: bool,
    #[arg(long)]
    random: bool,
    #[arg(short)]
    n: usize,
    #[arg(short, required_if_eq("random", "true"))]
    m: Option<u64>,
    #[arg(short)]
    s: usize,
}

#[derive(Args)]
struct InstanceArgs {
    file: PathBuf,
    #[arg(short, default_value_t = 0)]
    k: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Greedy,
    Thm37,
    Partition,
    Best,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    Alpha,
    Chi,
}

/// Failure modes, mapped onto the exit codes 2 and 1.
enum Failure {
    Usage(String),
    Check(String),
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn core_failure(e: CoreError) -> Failure {
    match e {
        CoreError::NotIndependent { .. } => Failure::Check(format!("re-verification failed: {e}")),
        other => Failure::usage(other),
    }
}

fn read_instance(path: &Path) -> Result<Hypergraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_hg(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(global: &Global, text: &str) -> Result<(), Failure> {
    match &global.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summary_line(h: &Hypergraph) -> String {
    let d = h.degree_profile().avg_degree;
    format!(
        "n={} m={} s={} delta={} d={}/{}",
        h.order(),
        h.edge_count(),
        h.uniformity(),
        h.max_degree(),
        d.numer(),
        d.denom()
    )
}

fn cmd_gen(args: &GenArgs, global: &Global) -> Result<(), Failure> {
    let h = if args.complete {
        gen_complete(args.n, args.s)
    } else {
        let m = args.m.ok_or_else(|| Failure::usage("--random needs -m"))?;
        gen_random_uniform(args.n, m, args.s, global.seed.unwrap_or(0))
    }
    .map_err(Failure::usage)?;
    let text = write_hg(&h);
    match &global.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            println!("{}", summary_line(&h));
        }
        None => {
            print!("{text}");
            eprintln!("{}", summary_line(&h));
        }
    }
    Ok(())
}

fn bounds_table(r: &BoundReport) -> String {
    let d = &r.d;
    let mut out = format!(
        "n={} e={} s={} k={} delta={} d={}/{}\n",
        r.n,
        r.e,
        r.s,
        r.k,
        r.delta,
        d.numer(),
        d.denom()
    );
    out += &format!("{:<18} {:>24} {:>16}\n", "bound", "exact", "value");
    for b in &r.bounds {
        match &b.amount {
            Some(a) => {
                let exact = a
                    .exact()
                    .map(|x| format!("{}/{}", x.numer(), x.denom()))
                    .unwrap_or_else(|| "-".into());
                out += &format!("{:<18} {:>24} {:>16}\n", b.name.as_str(), exact, compare::sig12(a.to_f64()));
            }
            None => {
                out += &format!(
                    "{:<18} {:>24} {:>16}  ({})\n",
                    b.name.as_str(),
                    "-",
                    "n/a",
                    b.reason.as_deref().unwrap_or("")
                )
            }
        }
    }
    out += &format!("best {}\n", r.best);
    out
}

fn one_based(set: &VertexSet) -> String {
    let ids: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", ids.join(", "))
}

fn extraction_table(r: &ExtractionResult) -> String {
    format!(
        "algorithm {}\nk {}\nsize {}\nset {}\ncertified_max_degree {}\nsteps {}\n",
        r.algorithm.as_str(),
        r.k,
        r.size(),
        one_based(&r.set),
        r.certified_max_degree,
        r.trace.len()
    )
}

fn oracle_table(r: &OracleResult) -> String {
    let value = r.value().map_or("unknown (budget exceeded)".to_string(), |v| v.to_string());
    let witness = match r.witness() {
        Some(Witness::Set(s)) => one_based(s),
        Some(Witness::Partition(p)) => {
            let classes: Vec<String> = p.classes.iter().map(one_based).collect();
            classes.join(" ")
        }
        None => "-".into(),
    };
    format!(
        "{} (k={}) = {}\nwitness {}\nnodes {}\n",
        r.quantity.as_str(),
        r.k,
        value,
        witness,
        r.nodes
    )
}

fn cmd_verify(config: Option<&Path>, global: &Global) -> Result<(), Failure> {
    let mut cfg = match config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            VerifyConfig::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        None => VerifyConfig::default(),
    };
    if let Some(seed) = global.seed {
        cfg.seed = seed;
    }
    if let Some(budget) = global.budget {
        cfg.budget = budget;
    }
    if let Some(out) = &global.output {
        cfg.output = Some(out.clone());
    }
    let mut summary = verify::run(&cfg).map_err(|e| match e {
        verify::VerifyError::Io(_) => Failure::Check(e.to_string()),
        other => Failure::usage(other),
    })?;
    let dir = cfg.output.clone().unwrap_or_else(|| PathBuf::from("counterexamples"));
    verify::write_dumps(&mut summary, &dir).map_err(|e| Failure::Check(format!("{}: {e}", dir.display())))?;
    print!("{}", verify::render(&summary));
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "verification failed; counterexamples in {}",
            dir.display()
        )))
    }
}

fn cmd_compare(
    files: &[PathBuf],
    corpus_cfg: Option<&Path>,
    ks: &[usize],
    global: &Global,
) -> Result<(), Failure> {
    let mut instances = Vec::new();
    for f in files {
        instances.push((f.display().to_string(), read_instance(f)?));
    }
    if let Some(path) = corpus_cfg {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let mut cfg = VerifyConfig::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        if let Some(seed) = global.seed {
            cfg.seed = seed;
        }
        for inst in corpus::build_main(&cfg).map_err(Failure::usage)? {
            instances.push((inst.label(), inst.h));
        }
    }
    if instances.is_empty() {
        return Err(Failure::usage("no instances"));
    }
    if ks.is_empty() {
        return Err(Failure::usage("empty k list"));
    }
    let budget = global.budget.unwrap_or(DEFAULT_BUDGET);
    let mut buf = Vec::new();
    compare::write_csv(&mut buf, &instances, ks, budget).map_err(|e| Failure::Check(e.to_string()))?;
    emit(global, &String::from_utf8(buf).expect("utf-8 csv"))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let global = &cli.global;
    let budget = global.budget.unwrap_or(DEFAULT_BUDGET);
    match &cli.command {
        Command::Gen(args) => cmd_gen(args, global),
        Command::Bounds(a) => {
            let h = read_instance(&a.file)?;
            let report = bound_report(&h, a.k);
            let text = if global.table {
                bounds_table(&report)
            } else {
                json::to_string(&BoundReportJson::from(&report)) + "\n"
            };
            emit(global, &text)
        }
        Command::Extract { instance: a, algo } => {
            let h = read_instance(&a.file)?;
            if matches!(algo, AlgoArg::Partition) && a.k == 0 {
                return Err(Failure::usage("--algo partition needs k >= 1"));
            }
            let result = match algo {
                AlgoArg::Greedy => greedy_peel(&h, a.k, None),
                AlgoArg::Thm37 => thm37_extract(&h, a.k),
                AlgoArg::Partition => partition_extract(&h, a.k),
                AlgoArg::Best => best_extract(&h, a.k),
            }
            .map_err(core_failure)?;
            let text = if global.table {
                extraction_table(&result)
            } else {
                json::to_string(&ExtractionJson::from(&result)) + "\n"
            };
            emit(global, &text)
        }
        Command::Exact { instance: a, quantity } => {
            let h = read_instance(&a.file)?;
            let result = match quantity {
                QuantityArg::Alpha => alpha_k_exact(&h, a.k, budget),
                QuantityArg::Chi => chi_k_exact(&h, a.k, budget),
            }
            .map_err(Failure::usage)?;
            let text = if global.table {
                oracle_table(&result)
            } else {
                json::to_string(&OracleJson::from(&result)) + "\n"
            };
            emit(global, &text)
        }
        Command::Verify { config } => cmd_verify(config.as_deref(), global),
        Command::Compare { files, corpus, k } => cmd_compare(files, corpus.as_deref(), k, global),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli);
    let _ = io::stdout().flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
