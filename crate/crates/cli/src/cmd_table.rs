//! `rtk table`: grids of formula values and oracle answers, shaped for
//! committing as fixtures and diffing on regressions.

use serde_json::json;

use rtk_core::constructions::{best_c, h_edge_count, llp_bound};
use rtk_core::oracle::{ex_rainbow, OracleError};

use crate::render::{csv_line, print_json, Format};
use crate::{forest_from, pattern_from, CliError, TableArgs, TableCmd};

pub fn run(args: TableArgs, format: Format) -> Result<(), CliError> {
    match args.grid {
        TableCmd::HEdges {
            forest,
            n_min,
            n_max,
        } => h_edges(&forest, n_min, n_max, format),
        TableCmd::ExRainbow {
            pattern,
            n_min,
            n_max,
            budget,
        } => ex_rainbow_grid(&pattern, n_min, n_max, budget, format),
    }
}

fn h_edges(forest: &str, n_min: u32, n_max: u32, format: Format) -> Result<(), CliError> {
    let f = forest_from(forest)?;
    if n_min > n_max {
        return Err(CliError::Usage("--n-min exceeds --n-max".into()));
    }

    // One row per feasible (n, c); the best column and the overall bound
    // ride along so a single grid answers "which c wins".
    let mut rows: Vec<(u32, u32, u64, bool, u64)> = Vec::new();
    for n in n_min..=n_max {
        let best = best_c(&f, n).ok();
        let llp = llp_bound(&f, n).ok();
        for c in 0..f.k() {
            if let Ok(edges) = h_edge_count(&f, n, c) {
                rows.push((
                    n,
                    c,
                    edges,
                    best == Some(c),
                    llp.unwrap_or(0),
                ));
            }
        }
    }

    match format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, c, edges, best, llp)| {
                    json!({ "n": n, "c": c, "edges": edges, "best": best, "llp": llp })
                })
                .collect();
            print_json(&json!({
                "grid": "h-edges",
                "forest": f.to_string(),
                "rows": rows,
            }));
        }
        Format::Csv => {
            println!("{}", csv_line(&["n", "c", "edges", "best", "llp"]));
            for (n, c, edges, best, llp) in &rows {
                println!(
                    "{}",
                    csv_line(&[
                        n.to_string(),
                        c.to_string(),
                        edges.to_string(),
                        best.to_string(),
                        llp.to_string(),
                    ])
                );
            }
        }
        Format::Text => {
            println!("h-star-forest edge counts for {f}");
            println!("{:>6} {:>4} {:>10} {:>6} {:>10}", "n", "c", "edges", "best", "llp");
            for (n, c, edges, best, llp) in &rows {
                println!(
                    "{n:>6} {c:>4} {edges:>10} {:>6} {llp:>10}",
                    if *best { "*" } else { "" }
                );
            }
        }
    }
    Ok(())
}

fn ex_rainbow_grid(
    pattern: &str,
    n_min: u32,
    n_max: u32,
    budget: Option<u64>,
    format: Format,
) -> Result<(), CliError> {
    let p = pattern_from(pattern)?;
    if n_min > n_max {
        return Err(CliError::Usage("--n-min exceeds --n-max".into()));
    }

    let mut rows: Vec<(u32, u64, u64, u64)> = Vec::new();
    for n in n_min..=n_max {
        let report = ex_rainbow(n, &p, budget).map_err(|e| match e {
            OracleError::BudgetExceeded { spent } => {
                CliError::Failed(format!("n={n}: budget exhausted after {spent} steps"))
            }
            other => CliError::usage(other),
        })?;
        rows.push((
            n,
            report.value,
            report.graphs_enumerated,
            report.colorings_tested,
        ));
    }

    match format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, value, classes, colorings)| {
                    json!({ "n": n, "value": value, "classes": classes, "colorings": colorings })
                })
                .collect();
            print_json(&json!({
                "grid": "ex-rainbow",
                "pattern": p.to_string(),
                "rows": rows,
            }));
        }
        Format::Csv => {
            println!("{}", csv_line(&["n", "value", "classes", "colorings"]));
            for (n, value, classes, colorings) in &rows {
                println!(
                    "{}",
                    csv_line(&[
                        n.to_string(),
                        value.to_string(),
                        classes.to_string(),
                        colorings.to_string(),
                    ])
                );
            }
        }
        Format::Text => {
            println!("exact rainbow values for {p}");
            println!("{:>6} {:>8} {:>8} {:>10}", "n", "value", "classes", "colorings");
            for (n, value, classes, colorings) in &rows {
                println!("{n:>6} {value:>8} {classes:>8} {colorings:>10}");
            }
        }
    }
    Ok(())
}
