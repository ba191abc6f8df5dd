use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use edp_cli::bench::{self, BenchConfig};
use edp_cli::format::{parse_demand, parse_realization, write_demand, write_realization};
use edp_cli::generate::{generate, GenParams, Model};
use edp_cli::solve::{solve, MethodChoice};
use edp_core::oracle::edp_decide_with_clock;
use edp_core::{maxedp_approx, maxedp_exact, verify_realization, DemandGraph, EdpOutcome, Partitioner, SearchBudget};

const EXIT_NOT_REALIZED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_VIOLATION: u8 = 3;
const EXIT_SCALE: u8 = 4;

#[derive(Parser)]
#[command(name = "edp", version, about = "Edge-disjoint path realization in K_{n,n}")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a random demand graph.
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Model::Uniform)]
        model: Model,
        #[arg(long, env = "EDP_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Realize a demand graph; the report goes to stderr.
    Realize {
        demand: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a realization against its demand graph.
    Verify { demand: PathBuf, realization: PathBuf },
    /// Exact search for small instances.
    Oracle {
        demand: PathBuf,
        #[arg(long, value_enum, default_value_t = OracleMode::Edp)]
        mode: OracleMode,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Large realizable subgraph with all degrees at most t.
    Maxedp {
        demand: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, value_enum, default_value_t = PartitionerArg::Shannon)]
        partitioner: PartitionerArg,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Time a method on generated instances.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [200, 400, 800, 1600])]
        sizes: Vec<u32>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long, value_enum, default_value_t = Model::Regular)]
        model: Model,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
        #[arg(long, env = "EDP_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Edp,
    Maxedp,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartitionerArg {
    Shannon,
    Greedy,
}

#[derive(clap::Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = SearchBudget::default().max_n)]
    max_n: u32,
    #[arg(long, default_value_t = SearchBudget::default().max_edges)]
    max_edges: usize,
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    max_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
}

fn read_demand(path: &Path) -> anyhow::Result<DemandGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_demand(&text).with_context(|| format!("{}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(cmd: Cmd) -> anyhow::Result<u8> {
    match cmd {
        Cmd::Gen {
            n,
            edges,
            max_degree,
            model,
            seed,
            out,
        } => {
            anyhow::ensure!(n > 0, "n must be positive");
            let d = generate(&GenParams {
                n,
                edges,
                max_degree,
                model,
                seed,
            });
            emit(out.as_deref(), &write_demand(&d))?;
            Ok(0)
        }
        Cmd::Realize { demand, method, out } => {
            let d = read_demand(&demand)?;
            let s = solve(&d, method);
            eprintln!("{}", s.report);
            if let Some(e) = &s.error {
                eprintln!("{e}");
            }
            match &s.realization {
                Some(r) => {
                    emit(out.as_deref(), &write_realization(r))?;
                    Ok(0)
                }
                None => Ok(EXIT_NOT_REALIZED),
            }
        }
        Cmd::Verify { demand, realization } => {
            let d = read_demand(&demand)?;
            let text = std::fs::read_to_string(&realization)
                .with_context(|| format!("reading {}", realization.display()))?;
            let r = parse_realization(&text).with_context(|| format!("{}", realization.display()))?;
            match verify_realization(&d, &r) {
                Ok(()) => {
                    println!("ok: {} paths, longest {}", r.len(), r.max_path_len());
                    Ok(0)
                }
                Err(v) => {
                    println!("violation {v}");
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        Cmd::Oracle {
            demand,
            mode,
            budget,
            out,
        } => {
            let d = read_demand(&demand)?;
            let b = SearchBudget {
                max_n: budget.max_n,
                max_edges: budget.max_edges,
                max_nodes: budget.max_nodes,
            };
            match mode {
                OracleMode::Edp => {
                    let start = Instant::now();
                    let limit = budget.timeout.map(Duration::from_secs_f64);
                    let mut clock = || limit.is_some_and(|l| start.elapsed() > l);
                    match edp_decide_with_clock(&d, &b, &mut clock) {
                        EdpOutcome::Feasible(r) => {
                            eprintln!("Feasible");
                            emit(out.as_deref(), &write_realization(&r))?;
                            Ok(0)
                        }
                        EdpOutcome::Infeasible => {
                            eprintln!("Infeasible");
                            Ok(EXIT_NOT_REALIZED)
                        }
                        EdpOutcome::ScaleExceeded => {
                            eprintln!("ScaleExceeded");
                            Ok(EXIT_SCALE)
                        }
                    }
                }
                OracleMode::Maxedp => match maxedp_exact(&d, &b) {
                    Ok((sub, r)) => {
                        eprintln!("optimum {} of {} edges", sub.edge_count(), d.edge_count());
                        emit(out.as_deref(), &write_demand(&sub))?;
                        eprint!("{}", write_realization(&r));
                        Ok(0)
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        Ok(EXIT_SCALE)
                    }
                },
            }
        }
        Cmd::Maxedp {
            demand,
            t,
            partitioner,
            out,
        } => {
            let d = read_demand(&demand)?;
            let p = match partitioner {
                PartitionerArg::Shannon => Partitioner::Shannon,
                PartitionerArg::Greedy => Partitioner::Greedy,
            };
            let res = maxedp_approx(&d, t, p)?;
            eprintln!(
                "kept {} of {} edges (t = {t}, {} matchings of sizes {:?}, {} capped)",
                res.kept(),
                d.edge_count(),
                res.classes,
                res.class_sizes,
                res.capped
            );
            if let Some(report) = &res.report {
                eprintln!("{report}");
            }
            match res.realization_in_input_labels() {
                Some(r) => {
                    emit(out.as_deref(), &write_realization(&r))?;
                    Ok(0)
                }
                None => {
                    if let Some(e) = &res.failure {
                        eprintln!("{e}");
                    }
                    Ok(EXIT_NOT_REALIZED)
                }
            }
        }
        Cmd::Bench {
            sizes,
            trials,
            max_degree,
            edges,
            model,
            method,
            seed,
            csv,
        } => {
            let rows = bench::run(&BenchConfig {
                sizes,
                trials,
                model,
                max_degree,
                edges,
                method,
                seed,
            });
            match csv {
                Some(p) => {
                    let f = std::fs::File::create(&p).with_context(|| format!("creating {}", p.display()))?;
                    bench::write_csv(&rows, f)?;
                }
                None => bench::write_csv(&rows, std::io::stdout().lock())?,
            }
            for (n, m) in bench::medians(&rows) {
                eprintln!("n = {n}: median {m:.3} ms");
            }
            Ok(0)
        }
    }
}
