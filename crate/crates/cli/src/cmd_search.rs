//! `rtk search`: run a detector over a colored graph file.

use std::time::Instant;

use serde_json::json;

use rtk_core::codec::read_colored_graph;
use rtk_core::search::{find_rainbow_path_stats, find_rainbow_star_forest_stats, SearchStats};
use rtk_core::Pattern;

use crate::render::{csv_line, print_json, witness_json, witness_text, Format};
use crate::{pattern_from, CliError, SearchArgs};

pub fn run(args: SearchArgs, format: Format) -> Result<(), CliError> {
    let pattern = pattern_from(&args.pattern)?;
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.input.display())))?;
    let cg = read_colored_graph(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", args.input.display())))?;

    let mut stats = SearchStats::default();
    let started = Instant::now();
    let witness = match &pattern {
        Pattern::Path(l) => find_rainbow_path_stats(&cg, *l, &mut stats),
        Pattern::Stars(f) => find_rainbow_star_forest_stats(&cg, f, &mut stats),
    };
    let elapsed = started.elapsed().as_millis() as u64;

    match format {
        Format::Json => print_json(&json!({
            "pattern": pattern.to_string(),
            "found": witness.is_some(),
            "witness": witness.as_ref().map(witness_json),
            "nodes_expanded": stats.nodes,
            "elapsed": elapsed,
        })),
        Format::Csv => {
            println!(
                "{}",
                csv_line(&["pattern", "found", "nodes_expanded", "elapsed"])
            );
            println!(
                "{}",
                csv_line(&[
                    pattern.to_string(),
                    witness.is_some().to_string(),
                    stats.nodes.to_string(),
                    elapsed.to_string(),
                ])
            );
        }
        Format::Text => match &witness {
            Some(w) => println!(
                "found rainbow {pattern}: {} ({} nodes)",
                witness_text(w),
                stats.nodes
            ),
            None => println!("no rainbow {pattern} ({} nodes)", stats.nodes),
        },
    }
    Ok(())
}
