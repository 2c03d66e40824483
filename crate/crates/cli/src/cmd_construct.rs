//! `rtk construct`: build a generator output, write the graph text file and
//! a JSON sidecar describing it.

use std::path::PathBuf;

use serde_json::{json, Value};

use rtk_core::codec::{write_colored_graph, write_graph};
use rtk_core::constructions::{ConstructionError, ConstructionId, ConstructionOutput};
use rtk_core::oracle::OracleError;

use crate::render::{csv_line, print_json, Format};
use crate::{forest_from, CliError, ConstructArgs, ConstructCmd};

fn id_and_params(which: &ConstructCmd) -> Result<(ConstructionId, Value, String), CliError> {
    Ok(match which {
        ConstructCmd::SplitGraph { n, k } => (
            ConstructionId::SplitGraph { n: *n, k: *k },
            json!({ "n": n, "k": k }),
            format!("split-graph-n{n}-k{k}"),
        ),
        ConstructCmd::HStarForest { forest, n, c } => {
            let f = forest_from(forest)?;
            (
                ConstructionId::HStarForest {
                    forest: f.clone(),
                    n: *n,
                    c: *c,
                },
                json!({ "forest": f.to_string(), "n": n, "c": c }),
                format!("h-star-forest-{f}-n{n}-c{c}"),
            )
        }
        ConstructCmd::HPrime { forest, n, i } => {
            let f = forest_from(forest)?;
            (
                ConstructionId::HPrime {
                    forest: f.clone(),
                    n: *n,
                    i: *i,
                },
                json!({ "forest": f.to_string(), "n": n, "i": i }),
                format!("h-prime-{f}-n{n}-i{i}"),
            )
        }
        ConstructCmd::K4Union { n } => (
            ConstructionId::K4Union { n: *n },
            json!({ "n": n }),
            format!("k4-union-n{n}"),
        ),
        ConstructCmd::K44Union { n } => (
            ConstructionId::K44Union { n: *n },
            json!({ "n": n }),
            format!("k44-union-n{n}"),
        ),
        ConstructCmd::BooleanCubeClique { k } => (
            ConstructionId::BooleanCubeClique { k: *k },
            json!({ "k": k }),
            format!("boolean-cube-clique-k{k}"),
        ),
        ConstructCmd::RainbowFreeClique { c, l, .. } => (
            ConstructionId::RainbowFreeClique { c: *c, l: *l },
            json!({ "c": c, "l": l }),
            format!("rainbow-free-clique-c{c}-l{l}"),
        ),
    })
}

pub fn run(args: ConstructArgs, format: Format) -> Result<(), CliError> {
    let budget = match &args.which {
        ConstructCmd::RainbowFreeClique { budget, .. } => *budget,
        _ => None,
    };
    let (id, params, slug) = id_and_params(&args.which)?;

    let built = id.build(budget).map_err(|e| match e {
        ConstructionError::Oracle(OracleError::BudgetExceeded { spent }) => {
            CliError::Failed(format!("search budget exhausted after {spent} assignments"))
        }
        other => CliError::usage(other),
    })?;

    let Some(output) = built else {
        // Exhaustive miss: a legitimate answer, not a failure.
        match format {
            Format::Json => print_json(&json!({
                "found": false,
                "id": id.name(),
                "params": params,
            })),
            Format::Csv => {
                println!("{}", csv_line(&["found", "id", "n", "edges", "colors", "out"]));
                println!("{}", csv_line(&["false", id.name(), "", "", "", ""]));
            }
            Format::Text => println!("{id}: no such coloring (search exhausted)"),
        }
        return Ok(());
    };

    let out = args.out.unwrap_or_else(|| PathBuf::from(format!("{slug}.cg")));
    let text = match &output {
        ConstructionOutput::Plain(g) => write_graph(g),
        ConstructionOutput::Colored(cg) => write_colored_graph(cg),
    };
    std::fs::write(&out, &text)
        .map_err(|e| CliError::Failed(format!("cannot write {}: {e}", out.display())))?;

    let n = output.graph().n();
    let edges = output.graph().edge_count();
    let colors = output.colored().map(|cg| cg.distinct_color_count());
    let sidecar = json!({
        "id": id.name(),
        "params": params,
        "n": n,
        "edges": edges,
        "colors": colors,
        "predicted_edge_count": id.predicted_edge_count(),
    });
    let sidecar_path = PathBuf::from(format!("{}.json", out.display()));
    std::fs::write(
        &sidecar_path,
        format!("{}\n", serde_json::to_string_pretty(&sidecar).expect("serializable")),
    )
    .map_err(|e| CliError::Failed(format!("cannot write {}: {e}", sidecar_path.display())))?;

    match format {
        Format::Json => {
            let mut report = sidecar;
            report["found"] = json!(true);
            report["out"] = json!(out.display().to_string());
            print_json(&report);
        }
        Format::Csv => {
            println!(
                "{}",
                csv_line(&["found", "id", "n", "edges", "colors", "out"])
            );
            println!(
                "{}",
                csv_line(&[
                    "true".to_string(),
                    id.name().to_string(),
                    n.to_string(),
                    edges.to_string(),
                    colors.map(|c| c.to_string()).unwrap_or_default(),
                    out.display().to_string(),
                ])
            );
        }
        Format::Text => {
            let palette = match colors {
                Some(c) => format!(", {c} colors"),
                None => String::new(),
            };
            println!(
                "{id}: wrote {} ({n} vertices, {edges} edges{palette})",
                out.display()
            );
        }
    }
    Ok(())
}
