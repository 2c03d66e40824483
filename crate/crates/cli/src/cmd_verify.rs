//! `rtk verify`: property checks with seeded generators. Stdout carries the
//! report; any FAIL also lands on stderr and flips the exit code to 1.

use std::path::{Path, PathBuf};

use serde_json::json;

use rtk_core::codec::write_colored_graph;
use rtk_core::harness::{
    check_degree_lemma, falsify_upper_bound, random_colored_graph, random_properly_colored_graph,
    sweep_theta, sweep_two_thirds, theta_trial, two_thirds_trial, HarnessConfig, LemmaOutcome,
    PathBoundReport, SweepReport,
};
use rtk_core::oracle::enumerate_graphs;

use crate::render::{csv_line, print_json, Format};
use crate::{resolve_seed, CliError, PaletteArg, SweepArgs, VerifyArgs, VerifyCmd};

pub fn run(args: VerifyArgs, format: Format) -> Result<(), CliError> {
    match args.check {
        VerifyCmd::TwoThirds(sweep) => run_sweep(sweep, format, Kind::Delta),
        VerifyCmd::Theta(sweep) => run_sweep(sweep, format, Kind::Theta),
        VerifyCmd::DegreeLemma { n_max, eps } => run_degree_lemma(n_max, &eps, format),
        VerifyCmd::Falsify {
            pattern,
            n,
            trials,
            edges,
            seed,
            palette,
            archive_dir,
        } => run_falsify(&pattern, n, trials, edges, seed, palette, archive_dir, format),
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Delta,
    Theta,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Delta => "two-thirds",
            Kind::Theta => "theta",
        }
    }

    fn trial(self) -> fn(&HarnessConfig, u64) -> Option<PathBoundReport> {
        match self {
            Kind::Delta => two_thirds_trial,
            Kind::Theta => theta_trial,
        }
    }
}

fn palette_name(p: PaletteArg) -> &'static str {
    match p {
        PaletteArg::Fresh => "fresh",
        PaletteArg::Recycled => "recycled",
    }
}

fn archive_host(dir: &Path, name: &str, cg: &rtk_core::ColoredGraph) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Failed(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, write_colored_graph(cg))
        .map_err(|e| CliError::Failed(format!("cannot write {}: {e}", path.display())))
}

fn parallel_sweep(cfg: &HarnessConfig, jobs: usize, kind: Kind) -> SweepReport {
    let f = kind.trial();
    let jobs = jobs.clamp(1, cfg.trials.max(1) as usize);
    let per = cfg.trials.div_ceil(jobs as u64);
    std::thread::scope(|s| {
        let workers: Vec<_> = (0..jobs as u64)
            .map(|j| {
                let lo = j * per;
                let hi = ((j + 1) * per).min(cfg.trials);
                s.spawn(move || {
                    let mut rep = SweepReport::default();
                    for t in lo..hi {
                        rep.record(t, f(cfg, t).as_ref());
                    }
                    rep
                })
            })
            .collect();
        workers
            .into_iter()
            .map(|w| w.join().expect("sweep worker panicked"))
            .fold(SweepReport::default(), SweepReport::merge)
    })
}

fn run_sweep(args: SweepArgs, format: Format, kind: Kind) -> Result<(), CliError> {
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if args.n_min > args.n_max {
        return Err(CliError::Usage("--n-min exceeds --n-max".into()));
    }
    if !(0.0..=1.0).contains(&args.density) {
        return Err(CliError::Usage("--density must lie in [0, 1]".into()));
    }
    let seed = resolve_seed(args.seed)?;
    let cfg = HarnessConfig {
        trials: args.trials,
        n_range: (args.n_min, args.n_max),
        edge_density: args.density,
        seed,
        palette: args.palette.into(),
        probe_budget: Some(args.budget),
    };

    let report = if args.jobs <= 1 {
        let sweep = match kind {
            Kind::Delta => sweep_two_thirds(&cfg),
            Kind::Theta => sweep_theta(&cfg),
        };
        sweep.expect("trials checked above")
    } else {
        parallel_sweep(&cfg, args.jobs, kind)
    };

    if let Some(dir) = &args.archive_dir {
        for &t in &report.failures {
            let sub = HarnessConfig {
                seed: cfg.seed ^ t,
                ..cfg.clone()
            };
            let host = match kind {
                Kind::Delta => random_properly_colored_graph(&sub),
                Kind::Theta => random_colored_graph(&sub),
            };
            archive_host(dir, &format!("{}-fail-{t}.cg", kind.name()), &host)?;
        }
    }

    let pass = report.failures.is_empty();
    match format {
        Format::Json => print_json(&json!({
            "check": kind.name(),
            "trials": report.trials,
            "seed": seed,
            "n_min": args.n_min,
            "n_max": args.n_max,
            "density": args.density,
            "palette": palette_name(args.palette),
            "budget": args.budget,
            "pass": pass,
            "failures": report.failures,
            "skipped": report.skipped,
            "equalities": report.equalities,
            "flagged": report.flagged,
            "undecided": report.undecided,
        })),
        Format::Csv => {
            println!(
                "{}",
                csv_line(&[
                    "check",
                    "trials",
                    "failures",
                    "skipped",
                    "equalities",
                    "flagged",
                    "undecided",
                    "pass",
                ])
            );
            println!(
                "{}",
                csv_line(&[
                    kind.name().to_string(),
                    report.trials.to_string(),
                    report.failures.len().to_string(),
                    report.skipped.len().to_string(),
                    report.equalities.len().to_string(),
                    report.flagged.len().to_string(),
                    report.undecided.len().to_string(),
                    pass.to_string(),
                ])
            );
        }
        Format::Text => println!(
            "{}: {} trials, {} failures, {} equalities ({} flagged), {} undecided, {} skipped -> {}",
            kind.name(),
            report.trials,
            report.failures.len(),
            report.equalities.len(),
            report.flagged.len(),
            report.undecided.len(),
            report.skipped.len(),
            if pass { "PASS" } else { "FAIL" },
        ),
    }

    if pass {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{}: {} of {} trials failed",
            kind.name(),
            report.failures.len(),
            report.trials
        )))
    }
}

fn run_degree_lemma(n_max: u32, eps: &[f64], format: Format) -> Result<(), CliError> {
    if n_max == 0 || n_max > 8 {
        return Err(CliError::Usage("--n-max must lie in 1..=8".into()));
    }
    if let Some(bad) = eps.iter().find(|e| !(0.0..1.0).contains(*e)) {
        return Err(CliError::Usage(format!("--eps value {bad} outside [0, 1)")));
    }

    let mut instances: u64 = 0;
    let mut passes: u64 = 0;
    let mut preconditions: u64 = 0;
    let mut fails: Vec<serde_json::Value> = Vec::new();
    for n in 2..=n_max {
        let graphs = enumerate_graphs(n).expect("n_max checked above");
        for (gi, g) in graphs.iter().enumerate() {
            for d in 1..n {
                for max_deg in d..n {
                    for &e in eps {
                        instances += 1;
                        match check_degree_lemma(g, d, max_deg, e).outcome {
                            LemmaOutcome::Pass => passes += 1,
                            LemmaOutcome::Precondition(_) => preconditions += 1,
                            LemmaOutcome::Fail => fails.push(json!({
                                "n": n,
                                "graph": gi,
                                "d": d,
                                "max_deg": max_deg,
                                "eps": e,
                            })),
                        }
                    }
                }
            }
        }
    }

    let pass = fails.is_empty();
    match format {
        Format::Json => print_json(&json!({
            "check": "degree-lemma",
            "n_max": n_max,
            "eps": eps,
            "instances": instances,
            "passes": passes,
            "preconditions": preconditions,
            "fails": fails,
            "pass": pass,
        })),
        Format::Csv => {
            println!(
                "{}",
                csv_line(&["check", "instances", "passes", "preconditions", "fails", "pass"])
            );
            println!(
                "{}",
                csv_line(&[
                    "degree-lemma".to_string(),
                    instances.to_string(),
                    passes.to_string(),
                    preconditions.to_string(),
                    fails.len().to_string(),
                    pass.to_string(),
                ])
            );
        }
        Format::Text => println!(
            "degree-lemma: {instances} instances ({passes} pass, {preconditions} precondition-skipped), {} failures -> {}",
            fails.len(),
            if pass { "PASS" } else { "FAIL" },
        ),
    }

    if pass {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "degree-lemma: {} failing instances",
            fails.len()
        )))
    }
}

#[allow(clippy::too_many_arguments)]
fn run_falsify(
    pattern: &str,
    n: u32,
    trials: u64,
    edges: Option<u64>,
    seed: Option<u64>,
    palette: PaletteArg,
    archive_dir: Option<PathBuf>,
    format: Format,
) -> Result<(), CliError> {
    let pattern = crate::pattern_from(pattern)?;
    let seed = resolve_seed(seed)?;
    let cfg = HarnessConfig {
        palette: palette.into(),
        ..HarnessConfig::new(seed)
    };
    let report = falsify_upper_bound(&pattern, n, trials, &cfg, edges).map_err(CliError::usage)?;

    if let Some(dir) = &archive_dir {
        for (i, cg) in report.counterexamples.iter().enumerate() {
            archive_host(dir, &format!("falsify-counterexample-{i}.cg"), cg)?;
        }
    }

    match format {
        Format::Json => print_json(&json!({
            "check": "falsify",
            "pattern": report.pattern.to_string(),
            "n": report.n,
            "edges": report.edges,
            "trials": report.trials,
            "seed": seed,
            "palette": palette_name(palette),
            "counterexamples": report.counterexamples.len(),
            "pass": report.pass,
        })),
        Format::Csv => {
            println!(
                "{}",
                csv_line(&["check", "pattern", "n", "edges", "trials", "counterexamples", "pass"])
            );
            println!(
                "{}",
                csv_line(&[
                    "falsify".to_string(),
                    report.pattern.to_string(),
                    report.n.to_string(),
                    report.edges.to_string(),
                    report.trials.to_string(),
                    report.counterexamples.len().to_string(),
                    report.pass.to_string(),
                ])
            );
        }
        Format::Text => println!(
            "falsify {} on n={} with {} edges: {} trials, {} counterexamples -> {}",
            report.pattern,
            report.n,
            report.edges,
            report.trials,
            report.counterexamples.len(),
            if report.pass { "PASS" } else { "FAIL" },
        ),
    }

    if report.pass {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "falsify: {} rainbow-free hosts found",
            report.counterexamples.len()
        )))
    }
}
