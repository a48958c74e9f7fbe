#![allow(clippy::result_large_err)]

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cnmaps::complex::{
    build_cell_complex, format_homology_table, homology, pi1_presentation, simplify_presentation,
    MAX_N,
};
use cnmaps::plmap::MapDocument;
use cnmaps::weights::{balance_constraints, solve_positive, weigh, WeightCertificate};
use cnmaps::{hausdorff_distance, Configuration, PLMultimap, SPMap};

#[derive(Parser)]
#[command(
    name = "cn",
    version,
    about = "Exact computations with at-most-n-valued maps on the circle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral homology of C_n(S^1), one line per dimension
    Homology { n: usize },
    /// Presentation of the fundamental group of C_n(S^1) and its simplification
    Pi1 { n: usize },
    /// Cell counts and boundary matrices of C_n(S^1) as JSON
    Cells { n: usize },
    /// Validate a map file and classify it
    Check { map: PathBuf },
    /// Decide whether a map admits positive balanced integer weights
    Weights { map: PathBuf },
    /// Convert a map file to another representation
    Convert {
        map: PathBuf,
        #[arg(long)]
        to: Target,
    },
    /// Hausdorff distance between two comma-separated configurations
    Hausdorff { a: String, b: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Sp,
    Weighted,
    Nfold,
}

/// Failure modes, mapped to exit codes 1 (semantic) and 2 (usage/input).
enum Failure {
    Semantic(String),
    Usage(String),
}

type Outcome = Result<String, Failure>;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 || n > MAX_N {
        return Err(Failure::Usage(format!(
            "n must be between 1 and {MAX_N}, got {n}"
        )));
    }
    Ok(())
}

fn load(path: &Path) -> Result<(MapDocument, PLMultimap), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = MapDocument::parse(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let map = doc
        .to_map()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok((doc, map))
}

fn load_valid(path: &Path) -> Result<PLMultimap, Failure> {
    let (_, map) = load(path)?;
    let report = map.validate();
    if !report.is_valid() {
        return Err(Failure::Semantic(report.to_string()));
    }
    Ok(map)
}

fn map_value(f: &PLMultimap) -> Value {
    serde_json::to_value(MapDocument::from_map(f)).expect("map documents serialize")
}

fn sp_value(sp: &SPMap) -> Value {
    json!({ "n": sp.n(), "map": map_value(sp.graph()) })
}

fn run_check(path: &Path) -> Outcome {
    let (doc, f) = load(path)?;
    let report = f.validate();
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            let mut value = serde_json::to_value(v).expect("violations serialize");
            value["message"] = json!(v.to_string());
            value
        })
        .collect();
    let mut out = json!({
        "valid": report.is_valid(),
        "violations": violations,
        "profile": f.cardinality_profile().to_string(),
        "equicardinal": f.is_equicardinal(),
        "one_n_valued": f.is_one_n_valued(),
        "union_check": serde_json::to_value(f.union_check()).expect("verdicts serialize"),
        "components": f.component_arcs(),
    });
    if let Some(name) = doc.name {
        out["name"] = json!(name);
    }
    let text = pretty(&out);
    if report.is_valid() {
        Ok(text)
    } else {
        // The report is still printed; the exit status carries the verdict.
        println!("{text}");
        Err(Failure::Semantic(format!(
            "{} is not a valid map",
            path.display()
        )))
    }
}

fn run_weights(path: &Path) -> Outcome {
    let f = load_valid(path)?;
    Ok(pretty(&solve_positive(&balance_constraints(&f)).to_json()))
}

fn to_sp(f: &PLMultimap) -> Result<SPMap, Failure> {
    let sp = if f.is_weighted() {
        f.weighted_to_sp()
    } else if f.is_one_n_valued() {
        f.one_n_valued_to_sp()
    } else {
        f.to_nfold().and_then(|g| g.to_sp())
    };
    sp.map_err(|e| Failure::Semantic(e.to_string()))
}

fn run_convert(path: &Path, target: Target) -> Outcome {
    let f = load_valid(path)?;
    let value = match target {
        Target::Nfold => {
            let g = f.to_nfold().map_err(|e| Failure::Semantic(e.to_string()))?;
            let mut v = serde_json::to_value(&g).expect("n-fold maps serialize");
            v["cycles"] = json!(g.monodromy().to_string());
            v
        }
        Target::Sp => sp_value(&to_sp(&f)?),
        Target::Weighted => {
            if f.is_weighted() {
                map_value(&to_sp(&f)?.to_weighted())
            } else {
                match weigh(&f) {
                    (_, Some(g)) => map_value(&g),
                    (cert @ WeightCertificate::Infeasible { .. }, None) => {
                        println!("{}", pretty(&cert.to_json()));
                        return Err(Failure::Semantic(
                            "no positive balanced weights exist".into(),
                        ));
                    }
                    (_, None) => unreachable!("feasible certificates produce a weighted map"),
                }
            }
        }
    };
    Ok(pretty(&value))
}

fn parse_config(s: &str) -> Result<Configuration, Failure> {
    s.parse()
        .map_err(|e| Failure::Usage(format!("bad configuration {s:?}: {e}")))
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Homology { n } => {
            check_n(n)?;
            let h = homology(n).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(format_homology_table(&h).trim_end().to_string())
        }
        Command::Pi1 { n } => {
            check_n(n)?;
            let p = pi1_presentation(n).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(format!(
                "presentation: {p}\nsimplified: {}",
                simplify_presentation(&p)
            ))
        }
        Command::Cells { n } => {
            check_n(n)?;
            let cc = build_cell_complex(n).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(pretty(&cc.to_json()))
        }
        Command::Check { map } => run_check(&map),
        Command::Weights { map } => run_weights(&map),
        Command::Convert { map, to } => run_convert(&map, to),
        Command::Hausdorff { a, b } => {
            let (a, b) = (parse_config(&a)?, parse_config(&b)?);
            Ok(hausdorff_distance(&a, &b).to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("cn: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("cn: {msg}");
            ExitCode::from(2)
        }
    }
}
