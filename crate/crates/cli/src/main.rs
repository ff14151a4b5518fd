//! `dynheights`: one JSON report per run on stdout.
//!
//! Exit codes: 0 success, 1 usage or invalid input, 2 required verdict not
//! met, 3 numeric failure.

mod cli;
mod commands;
mod json;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use cli::Cli;
use json::Json;

const EXIT_USAGE: u8 = 1;
const EXIT_VERDICT: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

fn table(prefix: &str, value: &Json, out: &mut String) {
    match value {
        Json::Obj(fields) => {
            for (k, v) in fields {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                table(&key, v, out);
            }
        }
        Json::Arr(items) if items.iter().any(|i| matches!(i, Json::Obj(_))) => {
            for (i, v) in items.iter().enumerate() {
                table(&format!("{prefix}[{i}]"), v, out);
            }
        }
        other => {
            let text = match other {
                Json::Str(s) => s.clone(),
                v => serde_json::to_string(v).expect("serializable"),
            };
            out.push_str(&format!("{prefix:<40} {text}\n"));
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("error: cannot configure {k} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }

    let start = Instant::now();
    let outcome = match commands::run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_numeric_failure() {
                EXIT_NUMERIC
            } else {
                EXIT_USAGE
            });
        }
    };
    let report = Json::obj([
        ("command", Json::str(outcome.command)),
        ("inputs", outcome.inputs),
        ("result", outcome.result),
        ("comparisons", Json::Arr(outcome.comparisons)),
        (
            "elapsed_seconds",
            Json::Float(start.elapsed().as_secs_f64()),
        ),
        ("thread_count", Json::from(rayon::current_num_threads())),
    ]);

    let document = serde_json::to_string(&report).expect("serializable");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{document}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let text = if cli.pretty {
        let mut s = String::new();
        table("", &report, &mut s);
        s
    } else {
        format!("{document}\n")
    };
    let _ = std::io::stdout().lock().write_all(text.as_bytes());

    if outcome.verdict_unmet {
        ExitCode::from(EXIT_VERDICT)
    } else {
        ExitCode::SUCCESS
    }
}
