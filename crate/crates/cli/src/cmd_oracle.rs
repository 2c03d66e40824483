//! `rtk oracle`: exact Turán numbers by exhaustive search, as JSON reports.

use std::time::Instant;

use serde_json::json;

use rtk_core::codec::{write_colored_graph, write_graph};
use rtk_core::oracle::{ex_classical, ex_rainbow, OracleError, ReportWitness, SearchReport};

use crate::render::{csv_line, print_json, report_witness_json, Format};
use crate::{pattern_from, CliError, OracleArgs, OracleMode};

pub fn run(args: OracleArgs, format: Format) -> Result<(), CliError> {
    let pattern = pattern_from(&args.pattern)?;
    let started = Instant::now();
    let result = match args.mode {
        OracleMode::Rainbow => ex_rainbow(args.n, &pattern, args.budget),
        OracleMode::Classical => ex_classical(args.n, &pattern, args.budget),
    };
    let mut report: SearchReport = result.map_err(|e| match e {
        OracleError::BudgetExceeded { spent } => {
            CliError::Failed(format!("search budget exhausted after {spent} steps"))
        }
        other => CliError::usage(other),
    })?;
    report.elapsed_ms = started.elapsed().as_millis() as u64;

    if let Some(path) = &args.emit_witness {
        let text = match &report.witness {
            ReportWitness::Plain(g) => write_graph(g),
            ReportWitness::Colored(cg) => write_colored_graph(cg),
        };
        std::fs::write(path, text)
            .map_err(|e| CliError::Failed(format!("cannot write {}: {e}", path.display())))?;
    }

    let mode = match args.mode {
        OracleMode::Rainbow => "rainbow",
        OracleMode::Classical => "classical",
    };
    match format {
        Format::Json => print_json(&json!({
            "kind": mode,
            "n": report.n,
            "pattern": report.pattern.to_string(),
            "value": report.value,
            "witness": report_witness_json(&report.witness),
            "graphs_enumerated": report.graphs_enumerated,
            "colorings_tested": report.colorings_tested,
            "elapsed_ms": report.elapsed_ms,
            "seed": report.seed,
        })),
        Format::Csv => {
            println!(
                "{}",
                csv_line(&[
                    "kind",
                    "n",
                    "pattern",
                    "value",
                    "graphs_enumerated",
                    "colorings_tested",
                    "elapsed_ms",
                ])
            );
            println!(
                "{}",
                csv_line(&[
                    mode.to_string(),
                    report.n.to_string(),
                    report.pattern.to_string(),
                    report.value.to_string(),
                    report.graphs_enumerated.to_string(),
                    report.colorings_tested.to_string(),
                    report.elapsed_ms.to_string(),
                ])
            );
        }
        Format::Text => {
            let name = match args.mode {
                OracleMode::Rainbow => format!("ex*({}, {})", report.n, report.pattern),
                OracleMode::Classical => format!("ex({}, {})", report.n, report.pattern),
            };
            println!(
                "{name} = {} ({} classes, {} colorings, {} ms)",
                report.value, report.graphs_enumerated, report.colorings_tested, report.elapsed_ms
            );
        }
    }
    Ok(())
}
