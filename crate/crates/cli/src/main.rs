//! `cubics`: multiplicities, character tables, quiver data and the verification suites.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cubic_dmod::catalog::{object_character, Object};
use cubic_dmod::character::{Character, StabilizationPolicy, Weight};
use cubic_dmod::cubics::NamedQuiver;
use cubic_dmod::quiver::{decompose, BoundQuiver, DecomposeConfig, Representation};
use cubic_dmod::repfile::RepFile;
use cubic_dmod::verify::{run_suite, Suite, VerifyConfig};
use cubic_dmod::{BigInt, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cubics", version, about = "Equivariant D-modules on binary cubic forms")]
struct Cli {
    /// Seed for randomized checks and decompositions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest shift tried when localizing.
    #[arg(long, global = true, default_value_t = 50)]
    n_max: u32,
    /// Equal consecutive values needed to accept a localized multiplicity.
    #[arg(long, global = true, default_value_t = 3)]
    streak: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of a weight in a simple or derived object.
    Mult {
        name: String,
        #[arg(allow_negative_numbers = true)]
        l1: i64,
        #[arg(allow_negative_numbers = true)]
        l2: i64,
    },
    /// Nonzero multiplicities on the box lo <= l2 <= l1 <= hi.
    Table {
        name: String,
        #[arg(long, allow_negative_numbers = true)]
        lo: i64,
        #[arg(long, allow_negative_numbers = true)]
        hi: i64,
    },
    /// Data of a named quiver.
    Quiver {
        #[command(subcommand)]
        query: QuiverQuery,
    },
    /// Operations on representations read from JSON files.
    Rep {
        #[command(subcommand)]
        op: RepOp,
    },
    /// Run acceptance suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum QuiverQuery {
    /// Basis of the path algebra modulo relations, optionally between two vertices.
    Paths {
        quiver: String,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
    },
    /// Dimension vector of the indecomposable injective at a vertex.
    Injective { quiver: String, vertex: String },
    /// Dimension vector of the indecomposable projective at a vertex.
    Projective { quiver: String, vertex: String },
    /// Number of arrows between two vertices, the dimension of Ext^1 between the simples.
    Ext1 { quiver: String, from: String, to: String },
    /// The quiver in the representation file format.
    Export { quiver: String },
}

#[derive(Subcommand)]
enum RepOp {
    /// Split into indecomposable summands.
    Decompose { file: String },
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn policy(cli: &Cli) -> StabilizationPolicy {
    StabilizationPolicy { n_max: cli.n_max, streak: cli.streak }
}

fn character(cli: &Cli, name: &str) -> Result<Character, String> {
    let obj: Object = name.parse()?;
    Ok(object_character(obj).with_policy(policy(cli)))
}

fn int_json(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Mult { name, l1, l2 } => {
            let c = character(cli, name)?;
            let lambda = Weight::new(*l1, *l2);
            let m = c.mult(lambda).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => println!("{}", json!({"name": name, "weight": [l1, l2], "mult": int_json(&m)})),
                _ => println!("{m}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { name, lo, hi } => {
            let c = character(cli, name)?;
            let table = c.truncate(*lo, *hi).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> =
                        table.iter().map(|(w, m)| json!({"weight": [w.l1, w.l2], "mult": int_json(m)})).collect();
                    println!("{}", serde_json::to_string_pretty(&json!({"name": name, "lo": lo, "hi": hi, "entries": rows})).unwrap());
                }
                Format::Tsv => table.iter().for_each(|(w, m)| println!("{}\t{}\t{m}", w.l1, w.l2)),
                Format::Text => table.iter().for_each(|(w, m)| println!("{w} {m}")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Quiver { query } => quiver(cli, query),
        Command::Rep { op: RepOp::Decompose { file } } => rep_decompose(cli, file),
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let cfg = VerifyConfig { seed: cli.seed, policy: policy(cli), ..Default::default() };
            let report = run_suite(suite, &cfg);
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Text => println!("{report}"),
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

fn named(name: &str) -> Result<std::sync::Arc<BoundQuiver>, String> {
    Ok(name.parse::<NamedQuiver>()?.build())
}

fn vertex(bq: &BoundQuiver, name: &str) -> Result<usize, String> {
    bq.quiver().vertex_index(name).map_err(|e| e.to_string())
}

fn print_dims(cli: &Cli, bq: &BoundQuiver, dims: &[usize]) {
    let names = bq.quiver().vertices();
    match cli.format {
        Format::Json => {
            let map: serde_json::Map<String, Value> = names.iter().zip(dims).map(|(n, d)| (n.clone(), Value::from(*d))).collect();
            println!("{}", Value::Object(map));
        }
        Format::Tsv => names.iter().zip(dims).for_each(|(n, d)| println!("{n}\t{d}")),
        Format::Text => {
            let parts: Vec<String> = names.iter().zip(dims).filter(|(_, d)| **d > 0).map(|(n, d)| format!("{n}:{d}")).collect();
            println!("{}", parts.join(" "));
        }
    }
}

fn quiver(cli: &Cli, query: &QuiverQuery) -> CliResult {
    match query {
        QuiverQuery::Paths { quiver, from, to } => {
            let bq = named(quiver)?;
            let q = bq.quiver();
            let basis = bq.path_basis().map_err(|e| e.to_string())?;
            let from = from.as_deref().map(|v| vertex(&bq, v)).transpose()?;
            let to = to.as_deref().map(|v| vertex(&bq, v)).transpose()?;
            let paths: Vec<_> = basis
                .elements()
                .iter()
                .filter(|p| from.is_none_or(|x| p.source == x) && to.is_none_or(|y| p.target == y))
                .collect();
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = paths
                        .iter()
                        .map(|p| json!({"source": q.vertices()[p.source], "target": q.vertices()[p.target], "path": p.display(q)}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                }
                _ => {
                    let sep = if cli.format == Format::Tsv { "\t" } else { " " };
                    for p in paths {
                        println!("{}{sep}{}{sep}{}", q.vertices()[p.source], q.vertices()[p.target], p.display(q));
                    }
                }
            }
        }
        QuiverQuery::Injective { quiver, vertex: v } | QuiverQuery::Projective { quiver, vertex: v } => {
            let bq = named(quiver)?;
            let x = vertex(&bq, v)?;
            let rep: Representation<Rational> = if matches!(query, QuiverQuery::Injective { .. }) {
                Representation::injective(bq.clone(), x)
            } else {
                Representation::projective(bq.clone(), x)
            }
            .map_err(|e| e.to_string())?;
            print_dims(cli, &bq, rep.dims());
        }
        QuiverQuery::Ext1 { quiver, from, to } => {
            let bq = named(quiver)?;
            let n = bq.quiver().arrow_count(vertex(&bq, from)?, vertex(&bq, to)?);
            match cli.format {
                Format::Json => println!("{}", json!({"from": from, "to": to, "arrows": n})),
                _ => println!("{n}"),
            }
        }
        QuiverQuery::Export { quiver } => println!("{}", RepFile::export_quiver(&*named(quiver)?).to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn rep_decompose(cli: &Cli, file: &str) -> CliResult {
    let text = fs::read_to_string(file).map_err(|e| format!("cannot read {file}: {e}"))?;
    let rep = RepFile::parse(&text).and_then(|f| f.representation()).map_err(|e| format!("{file}: {e}"))?;
    let parts = decompose(&rep, DecomposeConfig { seed: cli.seed, ..Default::default() }).map_err(|e| e.to_string())?;
    let names = rep.quiver().quiver().vertices();
    let verdict = |s: &cubic_dmod::quiver::Summand<Rational>| format!("{:?}", s.verdict).to_lowercase();
    match cli.format {
        Format::Json => {
            let rows: Vec<Value> = parts
                .iter()
                .map(|s| {
                    let dims: serde_json::Map<String, Value> =
                        names.iter().zip(s.rep.dims()).map(|(n, d)| (n.clone(), Value::from(*d))).collect();
                    json!({"dims": dims, "verdict": verdict(s)})
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&json!({"summands": rows})).unwrap());
        }
        _ => {
            let sep = if cli.format == Format::Tsv { "\t" } else { "  " };
            for s in &parts {
                let dims: Vec<String> = s.rep.dims().iter().map(usize::to_string).collect();
                println!("({}){sep}{}", dims.join(","), verdict(s));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
