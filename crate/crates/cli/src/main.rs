//! Command-line front end: runs the law suites with JSON reports and
//! demonstrates the parser and simulated-IO instances end to end.
//!
//! Exit codes: 0 for success or an all-pass suite, 1 for a domain
//! failure (a parse error, law failures, a failed effect run), 2 for
//! usage errors (malformed flags, unreadable input, malformed world
//! JSON).
//!
//! `--input` values are resolved as a path when one names an existing
//! file, and as literal text otherwise.

mod effects;
mod grammar;

use std::io::Read;

use clap::{Parser as ClapParser, Subcommand};
use serde::Serialize;

use conjoined::eio::World;
use conjoined::laws::report::LawReport;
use conjoined::laws::suite::{run_full_suite, shipped_adapters, total_failures};
use conjoined::outcome::Outcome;
use conjoined::parser::run_parser;

#[derive(ClapParser)]
#[command(
    name = "conjoined",
    version,
    about = "Error-handling algebra with computations monadic in both their error and value indices: law runner and instance demos"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every shipped adapter's law suite.
    Laws {
        /// Cases per law.
        #[arg(long, default_value_t = 500)]
        cases: u64,
        /// Root seed; when absent, LAW_SEED from the environment, then 42.
        #[arg(long)]
        seed: Option<u64>,
        /// Emit the full JSON report instead of a summary.
        #[arg(long)]
        json: bool,
    },
    /// Parse an arithmetic expression with the demo grammar.
    Parse {
        /// Expression text, or a path to a file holding it.
        #[arg(long)]
        input: String,
    },
    /// Run the demo effect program on a world.
    Eio {
        /// World JSON (literal or path); standard input when absent.
        /// Either a full world object or a bare array of input lines.
        #[arg(long)]
        input: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Laws { cases, seed, json } => cmd_laws(cases, seed, json),
        Command::Parse { input } => cmd_parse(&input),
        Command::Eio { input } => cmd_eio(input.as_deref()),
    };
    std::process::exit(code);
}

fn resolve_input(raw: &str) -> Result<String, String> {
    let path = std::path::Path::new(raw);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
    } else {
        Ok(raw.to_string())
    }
}

#[derive(Serialize)]
struct LawsOutput<'a> {
    seed: u64,
    cases: u64,
    reports: &'a [LawReport],
}

fn cmd_laws(cases: u64, seed_flag: Option<u64>, json: bool) -> i32 {
    let seed = match seed_flag {
        Some(seed) => seed,
        None => match std::env::var("LAW_SEED") {
            Ok(raw) => match raw.parse::<u64>() {
                Ok(seed) => seed,
                Err(_) => {
                    eprintln!("error: LAW_SEED must be a 64-bit unsigned integer, got {raw:?}");
                    return 2;
                }
            },
            Err(_) => 42,
        },
    };
    let adapters = shipped_adapters();
    let reports = run_full_suite(&adapters, cases, seed);
    let failures = total_failures(&reports);
    if json {
        let output = LawsOutput {
            seed,
            cases,
            reports: &reports,
        };
        println!(
            "{}",
            serde_json::to_string(&output).expect("law reports always serialize")
        );
    } else {
        println!(
            "law suite: {} adapters, cases={cases} seed={seed}",
            adapters.len()
        );
        for report in &reports {
            println!(
                "  {}: {} laws, {} cases, {} failures",
                report.adapter_name,
                report.results.len(),
                report.total_cases(),
                report.failures.len()
            );
        }
        println!("total failures: {failures}");
    }
    if failures == 0 {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct ParseSuccess {
    ok: grammar::Expr,
    rest: String,
}

#[derive(Serialize)]
struct ParseFailure {
    errors: Vec<String>,
    rest: String,
}

fn cmd_parse(raw: &str) -> i32 {
    let text = match resolve_input(raw) {
        Ok(text) => text,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let text = text.trim_end_matches(['\n', '\r']).to_string();
    match run_parser(&grammar::expr_grammar(), text) {
        Outcome::Ok((ast, rest)) => {
            let output = ParseSuccess { ok: ast, rest };
            println!(
                "{}",
                serde_json::to_string(&output).expect("parse results always serialize")
            );
            0
        }
        Outcome::Fail((log, rest)) => {
            let output = ParseFailure {
                errors: log.messages().to_vec(),
                rest,
            };
            println!(
                "{}",
                serde_json::to_string(&output).expect("parse results always serialize")
            );
            1
        }
    }
}

fn parse_world(text: &str) -> Result<World, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("malformed world JSON: {e}"))?;
    if value.is_array() {
        let lines: Vec<String> = serde_json::from_value(value)
            .map_err(|e| format!("world array must hold strings: {e}"))?;
        Ok(World::with_input(lines))
    } else if value.is_object() {
        serde_json::from_value(value).map_err(|e| format!("malformed world object: {e}"))
    } else {
        Err("world JSON must be an array of input lines or a world object".to_string())
    }
}

#[derive(Serialize)]
struct EioOutput {
    world: World,
    outcome: serde_json::Value,
}

fn cmd_eio(input: Option<&str>) -> i32 {
    let text = match input {
        Some(raw) => match resolve_input(raw) {
            Ok(text) => text,
            Err(message) => {
                eprintln!("error: {message}");
                return 2;
            }
        },
        None => {
            let mut buffer = String::new();
            if std::io::stdin().read_to_string(&mut buffer).is_err() {
                eprintln!("error: cannot read standard input");
                return 2;
            }
            buffer
        }
    };
    let world = match parse_world(&text) {
        Ok(world) => world,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let (outcome, world) = effects::demo_program().run(world);
    let (code, outcome_json) = match outcome {
        Outcome::Ok(()) => (0, serde_json::Value::String("ok".to_string())),
        Outcome::Fail(e) => (1, serde_json::json!({ "fail": e.rendered() })),
    };
    let output = EioOutput {
        world,
        outcome: outcome_json,
    };
    println!(
        "{}",
        serde_json::to_string(&output).expect("world results always serialize")
    );
    code
}
