//! Batch CLI over the library: reads the text instance format, emits
//! canonical JSON reports.
//!
//! Exit codes: 0 success, 1 usage/IO/input errors, 2 verification-failure
//! findings (a guarantee that must hold on balanced inputs does not),
//! 3 search budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use hypermatch::augment;
use hypermatch::decompose::DecompTag;
use hypermatch::error::Error;
use hypermatch::gen::{self, GenSpec};
use hypermatch::io as hio;
use hypermatch::report::{self, CharacWhich, TheoremName};
use hypermatch::set::IdSet;
use hypermatch::solve::WeightFn;
use hypermatch::Limits;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hypermatch",
    version,
    about = "Matching theory of balanced hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightArg {
    #[value(alias = "E")]
    E,
    #[value(alias = "V")]
    V,
    Custom,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Dpm,
    Fqn,
    Classic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Galed2,
    Galed1,
    Equalities,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    #[value(alias = "D")]
    D,
    Weighted,
    Stable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Interval,
    Bipartite,
    Closure,
    Planted,
}

#[derive(Subcommand)]
enum Command {
    /// Balancedness verdict with a strong-odd-cycle witness.
    CheckBalance {
        /// Instance file (`-` for stdin).
        instance: PathBuf,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// d-maximum matching.
    Match {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "v")]
        weights: WeightArg,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// Minimum integer d-vertex cover.
    Cover {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "v")]
        weights: WeightArg,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// γ_d versus τ_d; equality is mandatory on balanced instances.
    Konig {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "v")]
        weights: WeightArg,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// Degree-sum bound on γ_V.
    Bound {
        instance: PathBuf,
        #[arg(long, default_value_t = 1)]
        q: u64,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// Proper edge coloring in at most Δ colors.
    Color {
        instance: PathBuf,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// Greedy coloring-based augmentation; one JSON line per step.
    Augment {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "v")]
        weights: WeightArg,
        /// Starting matching as comma-separated 1-based edge indices.
        #[arg(long)]
        start: Option<String>,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// One of the three vertex decompositions.
    Decompose {
        instance: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// Item-by-item theorem verification.
    Verify {
        instance: PathBuf,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// Balancedness characterizations.
    Charac {
        instance: PathBuf,
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: u64,
    },
    /// Writes a generated instance in the text format.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        n1: usize,
        #[arg(long, default_value_t = 3)]
        n2: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 3)]
        ops: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::InstanceTooLarge => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn read_instance(path: &PathBuf) -> Result<hio::Instance, Error> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    hio::parse(&text)
}

fn weight_fn(arg: WeightArg, instance: &hio::Instance) -> Result<WeightFn, Error> {
    match arg {
        WeightArg::E => Ok(WeightFn::EWeights),
        WeightArg::V => Ok(WeightFn::VWeights),
        WeightArg::Custom => match &instance.edge_weights {
            Some(w) => Ok(WeightFn::Custom(w.clone())),
            None => Err(Error::InvalidWeight(
                "--weights custom needs w= fields in the the instance file".into(),
            )),
        },
    }
}

fn emit(report: report::Report) -> ExitCode {
    println!("{}", report.to_canonical_string());
    if report.violated {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::CheckBalance {
            instance,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let limits = Limits::with_max_states(max_states);
            Ok(emit(report::check_balance(&inst.hypergraph, &limits)?))
        }
        Command::Match {
            instance,
            weights,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let d = weight_fn(weights, &inst)?;
            let limits = Limits::with_max_states(max_states);
            Ok(emit(report::matching(&inst.hypergraph, &d, &limits)?))
        }
        Command::Cover {
            instance,
            weights,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let d = weight_fn(weights, &inst)?;
            let limits = Limits::with_max_states(max_states);
            Ok(emit(report::cover(&inst.hypergraph, &d, &limits)?))
        }
        Command::Konig {
            instance,
            weights,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let d = weight_fn(weights, &inst)?;
            let limits = Limits::with_max_states(max_states);
            Ok(emit(report::konig(&inst.hypergraph, &d, &limits)?))
        }
        Command::Bound {
            instance,
            q,
            max_states,
        } => {
            if q == 0 {
                return Err(Error::InvalidWeight("--q must be at least 1".into()));
            }
            let inst = read_instance(&instance)?;
            let limits = Limits::with_max_states(max_states);
            Ok(emit(report::bound(&inst.hypergraph, q, &limits)?))
        }
        Command::Color {
            instance,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let limits = Limits::with_max_states(max_states);
            Ok(emit(report::color(&inst.hypergraph, &limits)?))
        }
        Command::Augment {
            instance,
            weights,
            start,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let d = weight_fn(weights, &inst)?;
            let limits = Limits::with_max_states(max_states);
            let start_set = match start {
                None => IdSet::EMPTY,
                Some(text) => parse_edge_list(&text, inst.hypergraph.edge_count())?,
            };
            let run =
                augment::matching_via_augmentation_from(&inst.hypergraph, &d, start_set, &limits)?;
            for (i, step) in run.steps.iter().enumerate() {
                println!(
                    "{}",
                    serde_json::to_string(&report::augment_step_line(step, i))
                        .expect("steps are valid JSON")
                );
            }
            Ok(emit(report::augment_summary(&inst.hypergraph, &run)))
        }
        Command::Decompose {
            instance,
            mode,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let limits = Limits::with_max_states(max_states);
            let tag = match mode {
                ModeArg::Dpm => DecompTag::Dpm,
                ModeArg::Fqn => DecompTag::Fqn,
                ModeArg::Classic => DecompTag::ClassicDac,
            };
            Ok(emit(report::decomposition(&inst.hypergraph, tag, &limits)?))
        }
        Command::Verify {
            instance,
            theorem,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let limits = Limits::with_max_states(max_states);
            let name = match theorem {
                TheoremArg::Galed2 => TheoremName::GalEd2,
                TheoremArg::Galed1 => TheoremName::GalEd1,
                TheoremArg::Equalities => TheoremName::Equalities,
            };
            Ok(emit(report::verify(&inst.hypergraph, name, &limits)?))
        }
        Command::Charac {
            instance,
            which,
            max_states,
        } => {
            let inst = read_instance(&instance)?;
            let limits = Limits::with_max_states(max_states);
            let which = match which {
                WhichArg::D => CharacWhich::D,
                WhichArg::Weighted => CharacWhich::Weighted,
                WhichArg::Stable => CharacWhich::Stable,
            };
            Ok(emit(report::charac(
                &inst.hypergraph,
                which,
                inst.edge_weights.as_deref(),
                &limits,
            )?))
        }
        Command::Gen {
            family,
            seed,
            n,
            m,
            max_len,
            n1,
            n2,
            p,
            ops,
        } => {
            let spec = match family {
                FamilyArg::Interval => GenSpec::Interval {
                    n,
                    m,
                    max_len,
                    seed,
                },
                FamilyArg::Bipartite => GenSpec::Bipartite { n1, n2, p, seed },
                FamilyArg::Closure => GenSpec::Closure {
                    n,
                    m,
                    max_len,
                    ops,
                    seed,
                },
                FamilyArg::Planted => GenSpec::Planted { n, seed },
            };
            let h = gen::generate(&spec)?;
            print!("{}", hio::render(&h, None));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_edge_list(text: &str, edge_count: usize) -> Result<IdSet, Error> {
    let mut set = IdSet::EMPTY;
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let index: usize = token
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge index `{token}`")))?;
        if index == 0 || index > edge_count {
            return Err(Error::Parse(format!(
                "edge index {index} outside 1..={edge_count}"
            )));
        }
        set.insert(index - 1);
    }
    Ok(set)
}
