//! Command-line surface for the heights library.
//!
//! One binary, subcommands for each operation family. Output goes to
//! stdout (or `--out`), randomness is always ChaCha8 seeded through
//! `--seed` (default 0), and no environment variables are consulted, so
//! identical invocations produce byte-identical output.
//!
//! Exit codes: 0 on success with every verification passing, 1 when any
//! emitted report fails its bound, 2 on usage or input errors (malformed
//! tokens are named in the message).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use heights::bounds::{tightness_experiment, BoundReport, TightnessRow};
use heights::cauchy::{cauchy_interpolate, cauchy_interpolate_auto};
use heights::interpolate::{lagrange_interpolate, NodeSet};
use heights::quadratic::{unit_reduce, QuadField};
use heights::verify::{run_suite, verify_corollary_pinned, verify_poly_bounds};
use heights::{height_affine_tuple, height_projective_tuple, Rational};

#[derive(Parser)]
#[command(
    name = "heights",
    version,
    about = "Exact Weil heights, interpolation, and height-bound verification",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Height of rationals: one value for h(x), several for the tuple height.
    Height {
        /// Values in the rational text format ("p/q" or "p").
        #[arg(required = true)]
        values: Vec<String>,
        /// Treat the values as projective coordinates instead of an affine tuple.
        #[arg(long)]
        projective: bool,
    },
    /// Interpolating polynomial of degree <= DEGREE through DEGREE+1 points.
    InterpPoly {
        /// Comma-separated integer nodes, e.g. "-1,0,1".
        #[arg(long, allow_hyphen_values = true)]
        nodes: String,
        /// Comma-separated rational values aligned with the nodes, e.g. "0,1/2,2".
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Degree bound; exactly degree+1 nodes are required.
        #[arg(long)]
        degree: usize,
    },
    /// Rational fraction through integer points (Cauchy interpolation).
    InterpFrac {
        /// Comma-separated integer nodes.
        #[arg(long, allow_hyphen_values = true)]
        nodes: String,
        /// Comma-separated rational values aligned with the nodes.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Numerator degree (give --dq too; exactly dp+dq+1 nodes).
        #[arg(long)]
        dp: Option<usize>,
        /// Denominator degree (give --dp too).
        #[arg(long)]
        dq: Option<usize>,
        /// Search all degree profiles up to --degree (needs 2*degree+1 nodes).
        #[arg(long)]
        auto: bool,
        /// Total degree bound for --auto.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Real quadratic fields Q(sqrt(m)).
    Nf {
        #[command(subcommand)]
        op: NfCommand,
    },
    /// Seeded verification suites; emits a list of bound reports.
    Verify {
        /// One of: heights, poly-bounds, fractions, padic, quadratic, main, corollary, all.
        suite: String,
        /// Random instances per suite.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// ChaCha8 seed; identical seeds reproduce reports exactly.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Degree ceiling for the poly-bounds suite (default 4).
        #[arg(long)]
        degree_max: Option<u64>,
        /// Pin the corollary hypothesis constant (give --degree too).
        #[arg(long)]
        c: Option<f64>,
        /// Pin the corollary instance degree (give --c too).
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized experiments with CSV or JSON output.
    Experiment {
        #[command(subcommand)]
        op: ExperimentCommand,
    },
}

#[derive(Subcommand)]
enum NfCommand {
    /// Fundamental unit of Q(sqrt(m)) from the continued fraction of sqrt(m).
    Unit {
        /// Squarefree integer >= 2.
        #[arg(long)]
        m: i64,
    },
    /// Multiply a + b*sqrt(m) by the unit power minimizing its height.
    Reduce {
        /// Squarefree integer >= 2.
        #[arg(long)]
        m: i64,
        /// The element as "a,b" with rational a and b, meaning a + b*sqrt(m).
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Ratio of the proven height bounds to true heights, per degree.
    Tightness {
        /// Largest fraction degree; degrees 1..=dmax each get `trials` rows.
        #[arg(long, default_value_t = 5)]
        dmax: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the rows here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Height { values, projective } => {
            let xs = parse_rationals(&values.join(","))?;
            let h = if projective {
                height_projective_tuple(&xs).map_err(|e| e.to_string())?
            } else {
                height_affine_tuple(&xs)
            };
            println!("{}", h.value());
            Ok(0)
        }
        Command::InterpPoly {
            nodes,
            values,
            degree,
        } => {
            let nodes = parse_nodes(&nodes)?;
            let values = parse_rationals(&values)?;
            let poly =
                lagrange_interpolate(&nodes, &values, degree).map_err(|e| e.to_string())?;
            println!("{poly}");
            Ok(0)
        }
        Command::InterpFrac {
            nodes,
            values,
            dp,
            dq,
            auto,
            degree,
        } => {
            let nodes = parse_nodes(&nodes)?;
            let values = parse_rationals(&values)?;
            let fraction = match (dp, dq, auto, degree) {
                (Some(dp), Some(dq), false, None) => {
                    cauchy_interpolate(&nodes, &values, dp, dq).map_err(|e| e.to_string())?
                }
                (None, None, true, Some(d)) => {
                    cauchy_interpolate_auto(&nodes, &values, d).map_err(|e| e.to_string())?
                }
                _ => {
                    return Err(
                        "give either --dp and --dq, or --auto with --degree".to_string()
                    )
                }
            };
            println!("{fraction}");
            Ok(0)
        }
        Command::Nf { op } => {
            run_nf(op)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            degree_max,
            c,
            degree,
            format,
            out,
        } => {
            let reports = dispatch_verify(&suite, trials, seed, degree_max, c, degree)?;
            let rendered = render_reports(&reports, format);
            emit(rendered, out.as_deref())?;
            Ok(exit_code_for(&reports))
        }
        Command::Experiment {
            op:
                ExperimentCommand::Tightness {
                    dmax,
                    trials,
                    seed,
                    format,
                    out,
                },
        } => {
            if dmax < 1 {
                return Err("--dmax must be at least 1".to_string());
            }
            let rows = tightness_experiment(dmax, trials.max(1), seed);
            let rendered = render_tightness(&rows, format)?;
            emit(rendered, out.as_deref())?;
            Ok(0)
        }
    }
}

/// JSON shape for `nf unit`.
#[derive(Serialize)]
struct UnitOut {
    m: i64,
    unit: String,
    a: String,
    b: String,
    norm: String,
    height: f64,
}

/// JSON shape for `nf reduce`.
#[derive(Serialize)]
struct ReduceOut {
    m: i64,
    element: String,
    n: i64,
    reduced: String,
    height_before: f64,
    height_after: f64,
    bound: f64,
}

fn run_nf(op: NfCommand) -> Result<(), String> {
    match op {
        NfCommand::Unit { m } => {
            let field = QuadField::new(m).map_err(|e| e.to_string())?;
            let eps = field.fundamental_unit();
            let out = UnitOut {
                m,
                unit: eps.to_string(),
                a: eps.a().to_string(),
                b: eps.b().to_string(),
                norm: eps.norm().to_string(),
                height: eps.height().value(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("plain struct"));
        }
        NfCommand::Reduce { m, element } => {
            let field = QuadField::new(m).map_err(|e| e.to_string())?;
            let parts = parse_rationals(&element)?;
            if parts.len() != 2 {
                return Err(format!(
                    "malformed element: expected \"a,b\", got {element:?}"
                ));
            }
            let x = field.element(parts[0].clone(), parts[1].clone());
            let reduction = unit_reduce(&x).map_err(|e| e.to_string())?;
            let out = ReduceOut {
                m,
                element: x.to_string(),
                n: reduction.n,
                reduced: reduction.reduced.to_string(),
                height_before: reduction.height_before,
                height_after: reduction.height_after,
                bound: reduction.bound,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("plain struct"));
        }
    }
    Ok(())
}

fn dispatch_verify(
    suite: &str,
    trials: u64,
    seed: u64,
    degree_max: Option<u64>,
    c: Option<f64>,
    degree: Option<u64>,
) -> Result<Vec<BoundReport>, String> {
    if degree_max.is_some() && suite != "poly-bounds" {
        return Err("--degree-max applies only to the poly-bounds suite".to_string());
    }
    if (c.is_some() || degree.is_some()) && suite != "corollary" {
        return Err("--c and --degree apply only to the corollary suite".to_string());
    }
    let reports = match (degree_max, c, degree) {
        (Some(dm), None, None) => verify_poly_bounds(trials.max(1), seed, dm),
        (None, Some(c), Some(d)) => {
            verify_corollary_pinned(trials, seed, c, d).map_err(|e| e.to_string())?
        }
        (None, None, None) => run_suite(suite, trials, seed).map_err(|e| e.to_string())?,
        _ => return Err("--c and --degree must be given together".to_string()),
    };
    Ok(reports)
}

fn exit_code_for(reports: &[BoundReport]) -> u8 {
    if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}

fn render_reports(reports: &[BoundReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("plain structs");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("name,hypotheses_ok,bound,measured,passed,inputs_digest\n");
            for r in reports {
                writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    r.name, r.hypotheses_ok, r.bound, r.measured, r.passed, r.inputs_digest
                )
                .expect("writing to String");
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                writeln!(
                    s,
                    "{verdict} {}: measured {} vs bound {}{}",
                    r.name,
                    r.measured,
                    r.bound,
                    if r.notes.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", r.notes)
                    }
                )
                .expect("writing to String");
            }
            s
        }
    }
}

fn render_tightness(rows: &[TightnessRow], format: Format) -> Result<String, String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("plain structs");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut s =
                String::from("trial,d,hF,bound_basic,bound_main,ratio_basic,ratio_main\n");
            for r in rows {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    r.trial, r.d, r.h_f, r.bound_basic, r.bound_main, r.ratio_basic, r.ratio_main
                )
                .expect("writing to String");
            }
            Ok(s)
        }
        Format::Text => Err("tightness output is csv or json".to_string()),
    }
}

fn emit(rendered: String, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn parse_rationals(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|e| e.to_string()))
        .collect()
}

fn parse_nodes(text: &str) -> Result<NodeSet, String> {
    let points: Vec<i64> = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| format!("malformed integer node: offending token {t:?}"))
        })
        .collect::<Result<_, _>>()?;
    NodeSet::spanning(points).map_err(|e| e.to_string())
}
