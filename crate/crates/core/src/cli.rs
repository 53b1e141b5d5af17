//! Command-line surface. Reports go to stdout as JSON lines, summaries to
//! stderr.
//!
//! Exit codes: 0 when every check holds or is gated, 1 on a `VIOLATED`
//! report, 2 on parse or usage errors, 3 when a computation gives up
//! (degree cap, retry budget).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::corpus::{parse_corpus, render_corpus, CorpusFile};
use crate::degree::ExtInt;
use crate::error::{Error, Result};
use crate::harness::{evaluate, generate_instance, instance_seed, plan_check, run_checks, CheckKind, Recipe, Tally, Verdict};
use crate::hilbert::hilbert_series;
use crate::homological::{betti_table, local_cohomology_profile};
use crate::regularity::{
    random_filter_regular_sequence, regularity_conca_recursive_with, regularity_postulation, regularity_sat_formula,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GAVE_UP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cmreg", version, about = "Regularity of graded modules, computed several ways and cross-checked")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Betti,
    Postulation,
    Conca,
    Sat,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Corpus file.
    file: PathBuf,
    /// Module to use; defaults to the first one in the file.
    #[arg(long)]
    module: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert series, Hilbert polynomial and postulation number.
    Hilbert {
        #[command(flatten)]
        input: Input,
        /// Print Hilbert function values on `[lo, hi]`.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        values: Option<Vec<i64>>,
    },
    /// Graded Betti table of the minimal free resolution.
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Regularity by the selected routes (all of them by default).
    Reg {
        #[command(flatten)]
        input: Input,
        #[arg(long = "route", value_enum)]
        routes: Vec<Route>,
        #[arg(long, env = "CMREG_SEED", default_value_t = 0)]
        seed: u64,
        /// Degrees of the filter-regular forms, `/`-separated; all 1 by default.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Top degrees and graded dimensions of local cohomology.
    LcProfile {
        #[command(flatten)]
        input: Input,
    },
    /// Run a checker over generated instances.
    Check {
        kind: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, env = "CMREG_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "mixed")]
        recipe: String,
        /// Where witness files of `VIOLATED` reports go.
        #[arg(long, default_value = "witnesses")]
        witness_dir: PathBuf,
    },
    /// Print generated instances as corpus files.
    Gen {
        #[arg(long, default_value = "mixed")]
        recipe: String,
        #[arg(long, env = "CMREG_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Write one file per instance here instead of printing.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Attach parameters for this check.
        #[arg(long)]
        check: Option<String>,
    },
    /// Re-run the check recorded in a witness file.
    Replay { file: PathBuf },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Usage(_) => EXIT_USAGE,
        _ => EXIT_GAVE_UP,
    }
}

fn read_corpus(path: &Path) -> Result<CorpusFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    parse_corpus(&text)
}

fn pick_module(file: &CorpusFile, name: Option<&str>) -> Result<crate::algebra::Presentation> {
    match name {
        Some(n) => file.module(n).cloned().ok_or_else(|| Error::Usage(format!("no module named {n}"))),
        None => file.modules.first().map(|(_, m)| m.clone()).ok_or_else(|| Error::Usage("corpus file has no module".into())),
    }
}

fn load(input: &Input) -> Result<crate::algebra::Presentation> {
    pick_module(&read_corpus(&input.file)?, input.module.as_deref())
}

/// Runs the CLI on `argv` (including the program name), writing to the
/// given streams.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Usage(format!("write failed: {e}"));
    match cmd {
        Command::Hilbert { input, values } => {
            let hs = hilbert_series(&load(&input)?)?;
            let poly: Vec<String> = hs.hilbert_polynomial().coefficients().iter().map(|c| c.to_string()).collect();
            let mut rec = json!({
                "numerator": hs.numerator().terms().collect::<Vec<_>>(),
                "dim": hs.dim(),
                "hilbert_polynomial": poly,
                "postulation_number": hs.postulation_number(),
            });
            if let Some(v) = values {
                let table: Vec<(i64, u64)> = (v[0]..=v[1]).map(|i| (i, hs.value(i))).collect();
                rec["values"] = json!(table);
            }
            writeln!(out, "{rec}").map_err(io)?;
        }
        Command::Betti { input, json } => {
            let table = betti_table(&load(&input)?)?;
            if json {
                let entries: Vec<_> = table.entries().iter().map(|(&(i, j), &b)| json!([i, j, b])).collect();
                writeln!(out, "{}", json!({"entries": entries, "regularity": table.regularity()})).map_err(io)?;
            } else {
                write!(out, "{table}").map_err(io)?;
            }
        }
        Command::Reg { input, routes, seed, degrees } => {
            let m = load(&input)?;
            let routes = if routes.is_empty() {
                vec![Route::Betti, Route::Postulation, Route::Conca, Route::Sat]
            } else {
                routes
            };
            let dim = crate::hilbert::krull_dim(&m)?.max(0) as usize;
            let degrees: Vec<u32> = match degrees {
                Some(d) => d
                    .split('/')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| Error::Usage(format!("bad degree {t:?}"))))
                    .collect::<Result<_>>()?,
                None => vec![1; dim],
            };
            for route in routes {
                let (name, value): (&str, ExtInt) = match route {
                    Route::Betti => ("betti", crate::homological::regularity_from_betti(&m)?),
                    Route::Postulation => {
                        let chain = random_filter_regular_sequence(&m, &degrees, seed)?;
                        ("postulation", regularity_postulation(&m, &chain)?)
                    }
                    Route::Sat => {
                        let chain = random_filter_regular_sequence(&m, &degrees, seed)?;
                        ("sat", regularity_sat_formula(&m, &chain)?)
                    }
                    Route::Conca => {
                        ("conca", regularity_conca_recursive_with(&m, seed, degrees.first().copied().unwrap_or(1))?)
                    }
                };
                writeln!(out, "{name} {value}").map_err(io)?;
            }
        }
        Command::LcProfile { input } => {
            let p = local_cohomology_profile(&load(&input)?)?;
            let dims: Vec<_> = p.dims.iter().map(|(&(j, i), &d)| json!([j, i, d])).collect();
            let rec = json!({"top_degree": p.top_degree, "dims": dims, "regularity": p.regularity()});
            writeln!(out, "{rec}").map_err(io)?;
        }
        Command::Check { kind, count, seed, recipe, witness_dir } => {
            let kind: CheckKind = kind.parse()?;
            let recipe: Recipe = recipe.parse()?;
            return run_check_command(kind, count, seed, &recipe, &witness_dir, out, err);
        }
        Command::Gen { recipe, seed, count, out_dir, check } => {
            let recipe: Recipe = recipe.parse()?;
            let kind = check.map(|c| c.parse::<CheckKind>()).transpose()?;
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir).map_err(|e| Error::Usage(format!("{}: {e}", dir.display())))?;
            }
            for k in 0..count as u64 {
                let inst = generate_instance(&recipe, instance_seed(seed, k));
                let mut file = match kind {
                    Some(kind) => plan_check(kind, &inst)?,
                    None => inst.to_corpus(&["M", "N", "I"]),
                };
                file.instance = Some(format!("{:016x}", inst.seed));
                let text = render_corpus(&file);
                match &out_dir {
                    Some(dir) => {
                        let path = dir.join(format!("{:016x}.cmr", inst.seed));
                        fs::write(&path, text).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
                    }
                    None => {
                        if k > 0 {
                            writeln!(out).map_err(io)?;
                        }
                        write!(out, "{text}").map_err(io)?;
                    }
                }
            }
        }
        Command::Replay { file } => {
            let rep = evaluate(&read_corpus(&file)?)?;
            writeln!(out, "{}", rep.to_json_line()).map_err(io)?;
            writeln!(err, "{}: {:?}", rep.check, rep.verdict).map_err(io)?;
            return Ok(if rep.verdict == Verdict::Violated { EXIT_VIOLATED } else { EXIT_OK });
        }
    }
    Ok(EXIT_OK)
}

fn run_check_command(
    kind: CheckKind,
    count: usize,
    seed: u64,
    recipe: &Recipe,
    witness_dir: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let io = |e: std::io::Error| Error::Usage(format!("write failed: {e}"));
    let results = run_checks(kind, recipe, seed, count);
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (k, r) in results.into_iter().enumerate() {
        match r {
            Ok(rep) => {
                writeln!(out, "{}", rep.to_json_line()).map_err(io)?;
                if let Some(w) = &rep.witness {
                    fs::create_dir_all(witness_dir).map_err(|e| Error::Usage(format!("{}: {e}", witness_dir.display())))?;
                    let path = witness_dir.join(format!("{}-{}.cmr", rep.check, rep.instance_id));
                    fs::write(&path, w).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
                    writeln!(err, "witness written to {}", path.display()).map_err(io)?;
                }
                reports.push(rep);
            }
            Err(e) => {
                let id = format!("{:016x}", instance_seed(seed, k as u64));
                writeln!(out, "{}", json!({"check": kind.name(), "instance_id": id, "error": e.to_string()}))
                    .map_err(io)?;
                failures.push(e);
            }
        }
    }
    let tally = Tally::of(&reports);
    writeln!(err, "{kind}: {tally}, {} errors ({count} instances, seed {seed}, recipe {recipe})", failures.len())
        .map_err(io)?;
    Ok(if tally.violated > 0 {
        EXIT_VIOLATED
    } else if let Some(e) = failures.first() {
        exit_code(e)
    } else {
        EXIT_OK
    })
}
