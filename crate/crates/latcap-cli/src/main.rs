//! `latcap`: exact capacities on finite lattices from the command line.
//!
//! One subcommand per library operation; input is a JSON problem file, all
//! numbers are exact rational strings, and output is a deterministic JSON
//! report (or plain text with `--table`). Exit codes: 0 on success, 1 on a
//! domain error (reported with the library error name), 2 on usage or
//! parse errors.

mod examples;
mod problem;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use latcap::capacity::{classify, mobius_inverse, nabla};
use latcap::format_rational;
use latcap::frechet::{
    construct_extension_along_path, dual_bound, frechet_bound, lambda_table, successive_lambda,
    IdealFn,
};
use latcap::ideal::{
    dual_mobius_extension, greedy_extension, mobius_extension, Extension, IdealLattice, UpSet,
};
use latcap::stochastic::{
    comp_condition, dominance_coupling, membership_coupling, norberg_dominance, ConditionOutcome,
    Coupling,
};
use problem::{CliError, CliResult, Problem};
use report::Report;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "latcap", version, about = "Exact capacities on finite lattices")]
struct Cli {
    /// Render results as plain text instead of JSON
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a problem file
    Validate { file: PathBuf },
    /// Monotonicity and capacity classification flags
    Classify {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
    },
    /// The unique mass function whose cumulative sums give the capacity
    MobiusInverse {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
    },
    /// Successive difference functional ∇ over the set --seq at --at
    Nabla {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        /// Comma-separated element ids
        #[arg(long)]
        seq: String,
        /// Evaluation point; omitted → table over every element
        #[arg(long)]
        at: Option<String>,
    },
    /// Enumerate the lattice of nonempty up-sets
    Upsets {
        file: PathBuf,
        /// Node cap for the enumeration
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Level-set extension of a nonnegative monotone function
    GreedyExtend {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Extension carried by the Möbius inverse on principal up-sets
    MobiusExtend {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Extension of a completely alternating capacity via its dual
    DualMobiusExtend {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Optimal pairwise lower bound λ(φ; a, b)
    Lambda {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        /// The source element a
        #[arg(long)]
        seq: String,
        /// The target b; omitted → table over every element
        #[arg(long)]
        at: Option<String>,
    },
    /// Iterated λ-difference along --seq
    LambdaSeq {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Exact optimum of Φ(U) over extensions with the given marginal
    FrechetBound {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        /// Generators of the up-set, separated by `|`
        #[arg(long)]
        upset: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Build an extension along a monotone path
    ConstructExtension {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Antichain dominance condition between --capacity and psi
    Compare {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
    },
    /// Successive-difference comparison condition between --capacity and psi
    CompCondition {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
    },
    /// Construct a coupling of --capacity and psi by exact LP feasibility
    Couple {
        file: PathBuf,
        #[arg(long)]
        capacity: Option<String>,
        #[arg(long, value_enum)]
        mode: CoupleMode,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Re-derive every bundled worked example and report pass/fail
    PaperExamples,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoupleMode {
    /// Joint law of two lattice variables with the first below the second
    Dominance,
    /// Joint law of an up-set variable and a member element
    Membership,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            eprintln!(
                "{}",
                json!({ "error": { "code": e.code(), "message": e.to_string() } })
            );
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn ideals_for(problem: &Problem, cap: Option<usize>) -> CliResult<Arc<IdealLattice>> {
    let cap = cap.unwrap_or(latcap::ideal::DEFAULT_IDEAL_CAP);
    Ok(Arc::new(IdealLattice::build_with_cap(&problem.lattice, cap)?))
}

fn values_table(problem: &Problem, f: &latcap::capacity::LatticeFn) -> Value {
    Value::Array(
        problem
            .lattice
            .elements()
            .map(|x| json!([problem.lattice.id(x), format_rational(f.get(x))]))
            .collect(),
    )
}

fn pmf_atoms(ext: &Extension) -> Value {
    let ideals = ext.ideals();
    Value::Array(
        ext.pmf()
            .iter()
            .map(|(&node, mass)| {
                json!([ideals.node(node).render(ideals.base()), format_rational(mass)])
            })
            .collect(),
    )
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let table = cli.table;
    match cli.command {
        Command::Validate { file } => {
            let p = Problem::load(&file, None)?;
            let lat = &p.lattice;
            let covers: Vec<Value> = lat
                .covers()
                .iter()
                .map(|&(a, b)| json!([lat.id(a), lat.id(b)]))
                .collect();
            Report::new("validate")
                .input(&p.path, &p.sha256)
                .result("elements", lat.len())
                .result("bottom", lat.id(lat.bottom()))
                .result("top", lat.id(lat.top()))
                .result("covers", Value::Array(covers))
                .result(
                    "capacities",
                    Value::Array(
                        p.capacities.keys().map(|k| Value::String(k.clone())).collect(),
                    ),
                )
                .result("psi", p.psi.is_some())
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file, capacity } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let class = classify(phi);
            Report::new("classify")
                .input(&p.path, &p.sha256)
                .result("is_monotone", class.is_monotone)
                .result("is_capacity", class.is_capacity)
                .result("is_completely_monotone", class.is_completely_monotone)
                .result("is_completely_alternating", class.is_completely_alternating)
                .result("bottom_nonnegative", class.bottom_nonnegative)
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::MobiusInverse { file, capacity } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let inv = mobius_inverse(phi);
            Report::new("mobius-inverse")
                .input(&p.path, &p.sha256)
                .result("values", values_table(&p, &inv))
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::Nabla { file, capacity, seq, at } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?.clone();
            let a = p.elems(&seq)?;
            let mut report = Report::new("nabla").input(&p.path, &p.sha256).arg("seq", seq);
            match at {
                Some(at) => {
                    let b = p.lattice.elem(&at)?;
                    let value = nabla(&phi, &a, b)?;
                    report = report.arg("at", at).result("value", format_rational(&value));
                }
                None => {
                    let rows: Vec<Value> = p
                        .lattice
                        .elements()
                        .map(|b| {
                            nabla(&phi, &a, b)
                                .map(|v| json!([p.lattice.id(b), format_rational(&v)]))
                        })
                        .collect::<Result<_, _>>()?;
                    report = report.result("values", Value::Array(rows));
                }
            }
            report.print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::Upsets { file, cap } => {
            let p = Problem::load(&file, None)?;
            let ideals = ideals_for(&p, cap)?;
            let generators: Vec<Value> = ideals
                .nodes()
                .iter()
                .map(|u| Value::String(u.render(&p.lattice)))
                .collect();
            Report::new("upsets")
                .input(&p.path, &p.sha256)
                .result("count", ideals.len())
                .result("generators", Value::Array(generators))
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::GreedyExtend { file, capacity, cap } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let ideals = ideals_for(&p, cap)?;
            let ext = greedy_extension(&ideals, phi)?;
            Report::new("greedy-extend")
                .input(&p.path, &p.sha256)
                .result("pmf", pmf_atoms(&ext))
                .result("total_mass", format_rational(&ext.total_mass()))
                .result("projects_back", ext.project() == *phi)
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::MobiusExtend { file, capacity, cap } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let ideals = ideals_for(&p, cap)?;
            let ext = mobius_extension(&ideals, phi)?;
            Report::new("mobius-extend")
                .input(&p.path, &p.sha256)
                .result("pmf", pmf_atoms(&ext))
                .result("pair_condition", latcap::ideal::is_mobius_extension(&ext, phi)?)
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::DualMobiusExtend { file, capacity, cap } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let ideals = ideals_for(&p, cap)?;
            let ext = dual_mobius_extension(&ideals, phi)?;
            Report::new("dual-mobius-extend")
                .input(&p.path, &p.sha256)
                .result("pmf", pmf_atoms(&ext))
                .result("projects_back", ext.project() == *phi)
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::Lambda { file, capacity, seq, at } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let a = p.lattice.elem(seq.trim())?;
            let lam = lambda_table(phi, a)?;
            let mut report = Report::new("lambda").input(&p.path, &p.sha256).arg("seq", seq);
            match at {
                Some(at) => {
                    let b = p.lattice.elem(&at)?;
                    report = report.arg("at", at).result("value", format_rational(lam.get(b)));
                }
                None => {
                    report = report.result("values", values_table(&p, &lam));
                }
            }
            report.print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::LambdaSeq { file, capacity, seq, at } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let elems = p.elems(&seq)?;
            let lam = successive_lambda(phi, &elems)?;
            let mut report = Report::new("lambda-seq").input(&p.path, &p.sha256).arg("seq", seq);
            match at {
                Some(at) => {
                    let x = p.lattice.elem(&at)?;
                    report = report.arg("at", at).result("value", format_rational(lam.get(x)));
                }
                None => {
                    report = report.result("values", values_table(&p, &lam));
                }
            }
            report.print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::FrechetBound { file, capacity, upset, cap } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let ideals = ideals_for(&p, cap)?;
            let gens: Vec<latcap::Elem> = upset
                .split('|')
                .map(|s| p.lattice.elem(s.trim()).map_err(CliError::from))
                .collect::<CliResult<_>>()?;
            let u = UpSet::generate(&p.lattice, &gens)?;
            let node = ideals
                .node_of(&u)
                .expect("every nonempty up-set is a node");
            let g = IdealFn::indicator_below(&ideals, node);
            let value = frechet_bound(&ideals, phi, &g)?;
            let (dual_value, r) = dual_bound(&ideals, phi, &g)?;
            let certificate: Vec<Value> = p
                .lattice
                .elements()
                .filter(|&x| !num_traits::Zero::is_zero(r.get(x)))
                .map(|x| json!([p.lattice.id(x), format_rational(r.get(x))]))
                .collect();
            Report::new("frechet-bound")
                .input(&p.path, &p.sha256)
                .arg("upset", u.render(&p.lattice))
                .result("value", format_rational(&value))
                .result("dual_value", format_rational(&dual_value))
                .certificates(json!({ "dual_coefficients": certificate }))
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::ConstructExtension { file, capacity, seq, cap } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let ideals = ideals_for(&p, cap)?;
            let elems = p.elems(&seq)?;
            let ext = construct_extension_along_path(&ideals, phi, &elems)?;
            // Re-derive every prefix λ-difference from the indicator masses.
            let mut verified = 0usize;
            for k in 1..=elems.len() {
                let prefix = &elems[..k];
                let lam = successive_lambda(phi, prefix)?;
                for x in p.lattice.elements() {
                    assert_eq!(ext.mass_containing_avoiding(x, prefix), *lam.get(x));
                }
                verified += 1;
            }
            Report::new("construct-extension")
                .input(&p.path, &p.sha256)
                .arg("seq", seq)
                .result("pmf", pmf_atoms(&ext))
                .result("projects_back", ext.project() == *phi)
                .result("prefixes_verified", verified)
                .print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { file, capacity } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let psi = p.psi()?;
            let outcome = norberg_dominance(phi, psi)?;
            let mut report = Report::new("compare")
                .input(&p.path, &p.sha256)
                .result("holds", outcome.holds());
            if let ConditionOutcome::Violated(antichain) = &outcome {
                let names: Vec<Value> = antichain
                    .iter()
                    .map(|&x| Value::String(p.lattice.id(x).to_string()))
                    .collect();
                report = report.certificates(json!({ "antichain": names }));
            }
            report.print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::CompCondition { file, capacity } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let psi = p.psi()?;
            let outcome = comp_condition(phi, psi)?;
            let mut report = Report::new("comp-condition")
                .input(&p.path, &p.sha256)
                .result("holds", outcome.holds());
            if let ConditionOutcome::Violated(path) = &outcome {
                let names: Vec<Value> = path
                    .iter()
                    .map(|&x| Value::String(p.lattice.id(x).to_string()))
                    .collect();
                report = report.certificates(json!({ "path": names }));
            }
            report.print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::Couple { file, capacity, mode, cap } => {
            let p = Problem::load(&file, None)?;
            let phi = p.capacity(capacity.as_deref())?;
            let psi = p.psi()?;
            let ideals = ideals_for(&p, cap)?;
            let coupling = match mode {
                CoupleMode::Dominance => dominance_coupling(&ideals, phi, psi)?,
                CoupleMode::Membership => membership_coupling(&ideals, phi, psi)?,
            };
            let mut report = Report::new("couple").input(&p.path, &p.sha256).arg(
                "mode",
                match mode {
                    CoupleMode::Dominance => "dominance",
                    CoupleMode::Membership => "membership",
                },
            );
            match coupling {
                Coupling::Feasible(j) => {
                    let atoms: Vec<Value> = j
                        .atoms()
                        .iter()
                        .map(|(v, y, m)| {
                            json!([
                                ideals.node(*v).render(&p.lattice),
                                p.lattice.id(*y),
                                format_rational(m)
                            ])
                        })
                        .collect();
                    report = report
                        .result("feasible", true)
                        .result("total_mass", format_rational(&j.total_mass()))
                        .certificates(json!({ "atoms": atoms }));
                }
                Coupling::Infeasible => {
                    report = report.result("feasible", false);
                }
            }
            report.print(table);
            Ok(ExitCode::SUCCESS)
        }
        Command::PaperExamples => {
            if examples::run()? {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}
