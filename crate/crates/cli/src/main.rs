mod report;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use graph_hypergroup::hypergroup::{
    analyze, build_structure_constants, check_commutative, diam2_parameters, diam2_structure, enumerate_walks,
    symmetry_report, EnumerationCaps,
};
use graph_hypergroup::walks::{compare, simulate, WalkSpec, RNG_NAME, Z_THRESHOLD};
use graph_hypergroup::{compute_distance_profile, Error, PointedGraph, Rational};
use serde::Serialize;
use serde_json::{json, Value};

const SCHEMA: &str = "1";

#[derive(Parser)]
#[command(name = "graph-hypergroup", version, about = "Hypergroup productivity of random walks on pointed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide productivity; exit 0 if productive, 1 if not, 2 on input errors.
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// Print A^(k), P_k and D.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Print the convolution table x_i ∘ x_j.
    Structure {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Write a builtin graph as an edge list.
    Gen {
        /// Family and parameters, e.g. `cycle 4` or `cayley z4 1,3`.
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo estimate of the distance distribution after a jump sequence.
    Simulate {
        #[command(flatten)]
        input: GraphInput,
        /// Jump sequence, e.g. 1,1,2.
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Longest sequence the exact walk enumeration will attempt.
        #[arg(long, default_value_t = EnumerationCaps::default().max_length)]
        max_length: usize,
        /// Largest walk count the exact enumeration will attempt.
        #[arg(long, default_value_t = EnumerationCaps::default().max_tuples)]
        max_tuples: u128,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Builtin name (petersen, fig2, cycle N, complete N, path N, hypercube D,
    /// platonic NAME, cayley zN s1,s2,...) or an edge-list file.
    #[arg(required = true, num_args = 1..)]
    graph: Vec<String>,
    #[arg(long, default_value_t = 0)]
    base: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct RunConfig<'a> {
    subcommand: &'a str,
    source: String,
    base_point: usize,
    output: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    workers: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rng: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    caps: Option<EnumerationCaps>,
}

impl<'a> RunConfig<'a> {
    fn new(subcommand: &'a str, input: &GraphInput) -> Self {
        RunConfig {
            subcommand,
            source: input.graph.join(" "),
            base_point: input.base,
            output: if input.json { "json" } else { "human" },
            seed: None,
            samples: None,
            workers: None,
            rng: None,
            caps: None,
        }
    }
}

enum Outcome {
    Success,
    Negative,
}

fn pointed(input: &GraphInput) -> Result<PointedGraph> {
    let graph = source::resolve(&input.graph)?;
    Ok(PointedGraph::new(graph, input.base)?)
}

fn emit(value: Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
}

fn cmd_check(input: &GraphInput, dump: bool) -> Result<Outcome> {
    let pg = pointed(input)?;
    let a = analyze::<Rational>(&pg)?;
    if input.json {
        let mut out = json!({
            "schema": SCHEMA,
            "config": RunConfig::new("check", input),
            "graph": { "vertex_count": pg.graph().vertex_count(), "edge_count": pg.graph().edge_count() },
            "verdict": a.verdict,
            "structure_constants": a.constants,
        });
        if dump {
            out["matrices"] = json!({
                "adjacency": a.adjacency.adjacency,
                "normalized_adjacency": a.adjacency.normalized,
                "transition": a.transitions.matrices,
                "aggregation": a.aggregation.matrix,
            });
        }
        emit(out);
    } else {
        print!("{}", report::check(&input.graph.join(" "), &a, pg.graph().edge_count(), dump));
    }
    Ok(if a.verdict.productive { Outcome::Success } else { Outcome::Negative })
}

fn cmd_structure(input: &GraphInput) -> Result<Outcome> {
    let pg = pointed(input)?;
    let profile = compute_distance_profile(&pg)?;
    let sc = build_structure_constants::<Rational>(&profile)?;
    let commutative = check_commutative(&sc).holds;
    let lines = report::expansions(&sc, commutative);
    let symmetry = symmetry_report(&profile);
    let diam2 = if profile.diameter == 2 && symmetry.s1s2() {
        let (mu1, mu2, m) = diam2_parameters(&profile)?;
        let formula = diam2_structure::<Rational>(mu1, mu2, m)?;
        if formula.to_constants() != sc {
            return Err(Error::CrossCheck(format!("closed form for ({mu1}, {mu2}, {m}) differs from the table")).into());
        }
        Some((mu1, mu2, m))
    } else {
        None
    };
    if input.json {
        emit(json!({
            "schema": SCHEMA,
            "config": RunConfig::new("structure", input),
            "sphere_sizes": profile.sphere_sizes,
            "commutative": commutative,
            "structure_constants": sc,
            "expansions": lines,
            "diam2": diam2.map(|(mu1, mu2, m)| json!({ "mu1": mu1, "mu2": mu2, "m": m, "formula_matches_table": true })),
        }));
    } else {
        for line in &lines {
            println!("{line}");
        }
        if let Some((mu1, mu2, m)) = diam2 {
            println!("diameter 2: (mu1, mu2, m) = ({mu1}, {mu2}, {m}); closed form matches the table");
        }
    }
    Ok(Outcome::Success)
}

fn cmd_gen(family: &[String], out: Option<&PathBuf>) -> Result<Outcome> {
    let graph = source::builtin(family)?
        .with_context(|| format!("unknown family '{}'; builtins: {}", family.join(" "), source::BUILTINS))?;
    let text = graph.to_edge_list();
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(Outcome::Success)
}

fn cmd_simulate(input: &GraphInput, seq: &str, spec: WalkSpec, caps: EnumerationCaps) -> Result<Outcome> {
    let pg = pointed(input)?;
    let profile = compute_distance_profile(&pg)?;
    let sc = build_structure_constants::<Rational>(&profile)?;
    let spec = WalkSpec { sequence: source::parse_sequence(seq)?, ..spec };
    let emp = simulate(&profile, &sc, &spec)?;
    let agreement = compare(&emp);
    // The walk itself, exact, when small enough to enumerate.
    let enumeration = match enumerate_walks::<Rational>(&profile, &spec.sequence, caps) {
        Ok(v) => Some(v),
        Err(Error::EnumerationBudget(_)) => None,
        Err(e) => return Err(e.into()),
    };
    if input.json {
        let mut config = RunConfig::new("simulate", input);
        config.seed = Some(spec.seed);
        config.samples = Some(spec.samples);
        config.workers = Some(spec.workers);
        config.rng = Some(RNG_NAME);
        config.caps = Some(caps);
        emit(json!({
            "schema": SCHEMA,
            "config": config,
            "sequence": spec.sequence,
            "distribution": emp,
            "enumeration": enumeration.map(|v| v.iter().map(report::show).collect::<Vec<_>>()),
            "z_threshold": Z_THRESHOLD,
            "agreement": agreement,
        }));
    } else {
        println!("sequence {:?}, {} samples, seed {}, {} worker(s), rng {RNG_NAME}", spec.sequence, spec.samples, spec.seed, spec.workers);
        println!("{:>3} {:>10} {:>10} {:>10} {:>8}", "k", "count", "estimate", "exact", "z");
        for k in 0..emp.counts.len() {
            println!(
                "{k:>3} {:>10} {:>10.5} {:>10} {:>8.3}",
                emp.counts[k],
                emp.probabilities[k],
                report::show(&emp.reference[k]),
                agreement.z_scores[k]
            );
        }
        println!("gate |z| <= {Z_THRESHOLD}: {}", if agreement.pass { "pass" } else { "FAIL" });
    }
    Ok(if agreement.pass { Outcome::Success } else { Outcome::Negative })
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Check { input, dump_matrices } => cmd_check(&input, dump_matrices),
        Command::Structure { input } => cmd_structure(&input),
        Command::Gen { family, out } => cmd_gen(&family, out.as_ref()),
        Command::Simulate { input, seq, samples, seed, workers, max_length, max_tuples } => {
            let spec = WalkSpec { sequence: Vec::new(), samples, seed, workers };
            cmd_simulate(&input, &seq, spec, EnumerationCaps { max_length, max_tuples })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = match &cli.command {
        Command::Check { input, .. } | Command::Structure { input } | Command::Simulate { input, .. } => input.json,
        Command::Gen { .. } => false,
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            let kind = e.downcast_ref::<Error>().map(Error::kind).unwrap_or("input");
            if json {
                emit(json!({ "schema": SCHEMA, "error": { "kind": kind, "message": format!("{e:#}") } }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
