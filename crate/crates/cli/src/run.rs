//! Command dispatch: `eval`, `reverse`, `verify`, `table`, `macmahon`.
//!
//! Exit codes: 0 on success, 1 on mathematical domain errors or failed
//! verifications, 2 on usage errors (the clap default).

use crate::ast::Expr;
use crate::eval::{eval_rendered, reverse_two_ways, RingChoice};
use crate::parser::parse;
use clap::{Args, Parser, Subcommand};
use fps_core::combinat::{
    bell, bernoulli, divisor_series, four_square_count, gl_class_count,
    inversion_polynomial, linear_recurrence_series, partition_count, plane_partition_count,
    stirling, RecurrenceKind, SequenceTable, StirlingKind,
};
use fps_core::error::{Error, Result};
use fps_core::mps::macmahon;
use fps_core::qseries::{verify_all, verify_identity, IdentityReport};
use fps_core::RationalRing;

/// Hard ceiling on requested truncation orders, overridable through the
/// FPS_MAX_ORDER environment variable.
const DEFAULT_MAX_ORDER: usize = 10_000;

fn max_order() -> usize {
    std::env::var("FPS_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

fn check_order(order: usize) -> Result<usize> {
    let cap = max_order();
    if order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    if order > cap {
        return Err(Error::Domain(format!(
            "order {order} exceeds the FPS_MAX_ORDER guard of {cap}"
        )));
    }
    Ok(order)
}

#[derive(Parser)]
#[command(
    name = "fps",
    about = "Exact formal power series: evaluation, identity verification, tables",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonEval {
    /// Truncation order: results are reported modulo X^N.
    #[arg(long, short = 'n')]
    order: usize,
    /// Coefficient ring: rational, gaussian, or mod:M.
    #[arg(long, default_value = "rational")]
    ring: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to a truncated series.
    Eval {
        /// Expression over the single indeterminate X.
        expr: String,
        #[command(flatten)]
        common: CommonEval,
    },
    /// Compositional inverse through two independent methods.
    Reverse {
        expr: String,
        #[command(flatten)]
        common: CommonEval,
    },
    /// Verify a registered identity (or all of them) to a given order.
    Verify {
        /// Identity id, or "all".
        id: String,
        #[arg(long, short = 'n')]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit a combinatorial sequence as CSV.
    Table {
        /// One of: partitions, plane-partitions, stirling1, stirling2, bell,
        /// bernoulli, inversions, four-square, divisors, fibonacci, catalan,
        /// gl-classes.
        name: String,
        /// Largest index to tabulate.
        #[arg(long)]
        max: usize,
        /// Extra parameter (the k of stirling tables).
        #[arg(long)]
        param: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate both sides of the master theorem for an integer matrix.
    Macmahon {
        /// Path to a JSON file holding an integer matrix, e.g. [[0,1],[1,0]].
        #[arg(long)]
        matrix: std::path::PathBuf,
        /// Comma-separated exponents, one per row.
        #[arg(long)]
        powers: String,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(failed_verification) => {
            if failed_verification {
                1
            } else {
                0
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Eval { expr, common } => {
            let order = check_order(common.order)?;
            let choice = RingChoice::parse(&common.ring)?;
            let ast = parse(&expr)?;
            println!("{}", eval_rendered(&choice, &ast, order, common.json)?);
            Ok(false)
        }
        Command::Reverse { expr, common } => {
            let order = check_order(common.order)?;
            if !matches!(RingChoice::parse(&common.ring)?, RingChoice::Rational) {
                return Err(Error::Domain(
                    "reverse cross-checks need the rational ring".into(),
                ));
            }
            let ast: Expr = parse(&expr)?;
            let (via_recursion, via_residues) = reverse_two_ways(&RationalRing, &ast, order)?;
            if common.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "reverse": via_recursion.to_json(),
                        "lagrange_buermann": via_residues.to_json(),
                        "methods_agree": true,
                    })
                );
            } else {
                println!("{}", via_recursion.render());
                println!("methods agree: recursion == residue formula");
            }
            Ok(false)
        }
        Command::Verify { id, order, json } => {
            let order = check_order(order)?;
            let reports = if id == "all" {
                verify_all(order)?
            } else {
                vec![verify_identity(&id, order)?]
            };
            let mut any_failed = false;
            for report in &reports {
                if json {
                    println!("{}", report.to_json());
                } else {
                    println!("{}", format_report(report));
                }
                any_failed |= !report.holds;
            }
            Ok(any_failed)
        }
        Command::Table {
            name,
            max,
            param,
            json,
        } => {
            let max = check_order(max.max(1))?;
            let table = build_table(&name, max, param)?;
            if json {
                for (n, value) in table.values.iter().enumerate() {
                    println!(
                        "{}",
                        serde_json::json!({"n": n + table_offset(&name), "value": value})
                    );
                }
            } else {
                print!("{}", render_csv(&name, &table));
            }
            Ok(false)
        }
        Command::Macmahon {
            matrix,
            powers,
            json,
        } => {
            let text = std::fs::read_to_string(&matrix)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", matrix.display())))?;
            let parsed: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| Error::Domain(format!("matrix file is not an integer matrix: {e}")))?;
            let powers = powers
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Domain(format!("invalid exponent {p:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let report = macmahon(&parsed, &powers)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "lhs": report.lhs.to_string(),
                        "rhs": report.rhs.to_string(),
                        "equal": report.equal,
                        "mac1_ok": report.mac1_ok,
                        "a2_ok": report.a2_ok,
                    })
                );
            } else {
                println!(
                    "lhs = {}\nrhs = {}\nequal: {}\ndeterminant expansion (mac1): {}\npermanent expansion (a2): {}",
                    report.lhs,
                    report.rhs,
                    report.equal,
                    if report.mac1_ok { "ok" } else { "FAILED" },
                    match report.a2_ok {
                        Some(true) => "ok",
                        Some(false) => "FAILED",
                        None => "skipped (power sum too large)",
                    }
                );
            }
            Ok(!report.equal)
        }
    }
}

fn format_report(report: &IdentityReport) -> String {
    match &report.first_mismatch {
        None => format!(
            "{:<24} order {:<4} PASS",
            report.identity_id, report.order
        ),
        Some(m) => format!(
            "{:<24} order {:<4} FAIL at index {}: lhs {} != rhs {}",
            report.identity_id, report.order, m.index, m.lhs, m.rhs
        ),
    }
}

/// Tables whose natural index starts at 1 rather than 0.
fn table_offset(name: &str) -> usize {
    match name {
        "four-square" | "divisors" | "gl-classes" => 1,
        _ => 0,
    }
}

fn render_csv(name: &str, table: &SequenceTable<String>) -> String {
    let offset = table_offset(name);
    let mut out = String::from("n,value\n");
    for (i, v) in table.values.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + offset, v));
    }
    out
}

fn build_table(name: &str, max: usize, param: Option<usize>) -> Result<SequenceTable<String>> {
    let stringify = |t: SequenceTable| SequenceTable {
        name: t.name,
        values: t.values.iter().map(|v| v.to_string()).collect(),
    };
    match name {
        "partitions" => Ok(stringify(partition_count(max))),
        "plane-partitions" => Ok(stringify(plane_partition_count(max)?)),
        "divisors" => {
            let t = divisor_series(max)?;
            Ok(SequenceTable {
                name: t.name,
                values: t.values[1..].iter().map(|v| v.to_string()).collect(),
            })
        }
        "four-square" => {
            let values = (1..=max)
                .map(|n| four_square_count(n).map(|v| v.to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(SequenceTable {
                name: "four-square".into(),
                values,
            })
        }
        "fibonacci" => Ok(stringify(linear_recurrence_series(
            RecurrenceKind::Fibonacci,
            max,
        )?)),
        "catalan" => Ok(stringify(linear_recurrence_series(
            RecurrenceKind::Catalan,
            max,
        )?)),
        "bell" => {
            let values = (0..=max)
                .map(|n| bell(n).map(|v| v.to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(SequenceTable {
                name: "bell".into(),
                values,
            })
        }
        "bernoulli" => {
            let t = bernoulli(max)?;
            Ok(SequenceTable {
                name: t.name,
                values: t.values.iter().map(|v| v.to_string()).collect(),
            })
        }
        "stirling1" | "stirling2" => {
            let k = param.ok_or_else(|| {
                Error::Domain(format!("{name} needs --param K for the lower index"))
            })?;
            let kind = if name == "stirling1" {
                StirlingKind::First
            } else {
                StirlingKind::Second
            };
            let values = (0..=max)
                .map(|n| {
                    if k > n {
                        Ok("0".to_string())
                    } else {
                        stirling(kind, n, k).map(|v| v.to_string())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SequenceTable {
                name: name.into(),
                values,
            })
        }
        "inversions" => {
            let values = (0..=max)
                .map(|n|

                    inversion_polynomial(n).map(|p| {
                        p.render()
                            .rsplit_once(" + O(")
                            .map(|(body, _)| body.to_string())
                            .unwrap_or_else(|| p.render())
                    })
                )
                .collect::<Result<Vec<_>>>()?;
            Ok(SequenceTable {
                name: "inversions".into(),
                values,
            })
        }
        "gl-classes" => {
            let values = (1..=max)
                .map(|n| gl_class_count(n).map(|p| p.render_with("q")))
                .collect::<Result<Vec<_>>>()?;
            Ok(SequenceTable {
                name: "gl-classes".into(),
                values,
            })
        }
        other => Err(Error::Domain(format!(
            "unknown table {other:?}; see --help for the list"
        ))),
    }
}
