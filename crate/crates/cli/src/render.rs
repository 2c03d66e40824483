//! Shared output plumbing: the three formats and JSON shapes for graphs and
//! witnesses. JSON keys come out sorted, so all formats are diff-stable.

use clap::ValueEnum;
use serde_json::{json, Value};

use rtk_core::oracle::ReportWitness;
use rtk_core::witness::Embedding;
use rtk_core::{ColoredGraph, Graph, Witness};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// One CSV line; fields with commas or quotes get quoted.
pub fn csv_line<S: AsRef<str>>(fields: &[S]) -> String {
    let mut out = String::new();
    for (i, f) in fields.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let f = f.as_ref();
        if f.contains(',') || f.contains('"') {
            out.push('"');
            out.push_str(&f.replace('"', "\"\""));
            out.push('"');
        } else {
            out.push_str(f);
        }
    }
    out
}

pub fn graph_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g.edges().iter().map(|e| json!([e.u(), e.v()])).collect();
    json!({ "n": g.n(), "edges": edges })
}

pub fn colored_graph_json(cg: &ColoredGraph) -> Value {
    let edges: Vec<Value> = cg
        .edge_colors()
        .map(|(e, c)| json!([e.u(), e.v(), c]))
        .collect();
    json!({
        "n": cg.graph().n(),
        "edges": edges,
        "colors": cg.distinct_color_count(),
    })
}

pub fn report_witness_json(w: &ReportWitness) -> Value {
    match w {
        ReportWitness::Plain(g) => json!({ "kind": "plain", "graph": graph_json(g) }),
        ReportWitness::Colored(cg) => {
            json!({ "kind": "colored", "graph": colored_graph_json(cg) })
        }
    }
}

pub fn witness_json(w: &Witness) -> Value {
    match w.embedding() {
        Embedding::Path(vs) => json!({
            "pattern": w.pattern().to_string(),
            "kind": "path",
            "vertices": vs,
        }),
        Embedding::Stars(comps) => {
            let components: Vec<Value> = comps
                .iter()
                .map(|c| json!({ "center": c.center, "leaves": c.leaves }))
                .collect();
            json!({
                "pattern": w.pattern().to_string(),
                "kind": "stars",
                "components": components,
            })
        }
    }
}

/// Short human rendering of an embedding, for the text format.
pub fn witness_text(w: &Witness) -> String {
    match w.embedding() {
        Embedding::Path(vs) => vs
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("-"),
        Embedding::Stars(comps) => comps
            .iter()
            .map(|c| {
                let leaves = c
                    .leaves
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{}:({leaves})", c.center)
            })
            .collect::<Vec<_>>()
            .join(" "),
    }
}
