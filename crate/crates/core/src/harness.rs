//! Randomized property checks over seeded instance generators.
//!
//! Everything here is a pure function of its inputs: generators are driven by
//! explicit seeds and reports carry no wall-clock data, so a report can be
//! diffed across runs and machines. Sweep trials are independent — trial `t`
//! derives its stream from `cfg.seed ^ t` — which lets a driver split the
//! index range across workers and [`SweepReport::merge`] the partial results.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Color, ColorDegreeError, ColoredGraph, Graph, Vertex};
use crate::oracle::{rainbow_matching_upper, rainbow_path_upper};
use crate::pattern::Pattern;
use crate::rng::SplitMix64;
use crate::search::{
    find_rainbow_path, find_rainbow_path_capped, find_rainbow_star_forest, longest_rainbow_path,
};
use crate::witness::Witness;

/// How generated hosts are edge-colored.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PaletteStrategy {
    /// Every edge its own color. Maximally rainbow-friendly hosts.
    Fresh,
    /// Greedy smallest legal color in sorted edge order. Few colors, many
    /// repeats, still proper.
    Recycled,
}

/// Knobs shared by the randomized checks.
#[derive(Clone, PartialEq, Debug)]
pub struct HarnessConfig {
    /// Trials per sweep; at least 1.
    pub trials: u64,
    /// Inclusive range of host orders, sampled uniformly per trial.
    pub n_range: (u32, u32),
    /// Target edge density in [0, 1]. Each host gets exactly
    /// round(density * C(n, 2)) edges, uniform over edge sets of that size.
    pub edge_density: f64,
    /// Root seed. Trial `t` of a sweep uses `seed ^ t`.
    pub seed: u64,
    /// Coloring strategy for generated hosts.
    pub palette: PaletteStrategy,
    /// Node cap for the equality probe in the path-bound checks. The probe
    /// classifies passing hosts as tight or slack; `None` skips it entirely
    /// and leaves `equality` undecided.
    pub probe_budget: Option<u64>,
}

impl HarnessConfig {
    /// Defaults tuned for quick exploratory sweeps: 100 trials on hosts of
    /// order 2..=10 at density 0.5 with a recycled palette.
    pub fn new(seed: u64) -> HarnessConfig {
        HarnessConfig {
            trials: 100,
            n_range: (2, 10),
            edge_density: 0.5,
            seed,
            palette: PaletteStrategy::Recycled,
            probe_budget: Some(200_000),
        }
    }
}

/// Contract violations in check inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HarnessError {
    /// The check requires a proper coloring and the input is not one.
    Improper { vertex: Vertex },
    /// The check needs at least one edge.
    EdgelessHost,
    /// Bound falsification only has bounds wired in for paths and matchings.
    UnsupportedPattern(Pattern),
    /// The requested edge count does not fit on `n` vertices.
    TooManyEdges { edges: u64, max: u64 },
    /// A sweep needs at least one trial.
    ZeroTrials,
}

impl core::fmt::Display for HarnessError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HarnessError::Improper { vertex } => {
                write!(f, "coloring is not proper at vertex {vertex}")
            }
            HarnessError::EdgelessHost => write!(f, "host graph has no edges"),
            HarnessError::UnsupportedPattern(p) => {
                write!(f, "no upper bound is wired in for pattern {p}")
            }
            HarnessError::TooManyEdges { edges, max } => {
                write!(f, "{edges} edges requested but the host only fits {max}")
            }
            HarnessError::ZeroTrials => write!(f, "sweep needs at least one trial"),
        }
    }
}

impl core::error::Error for HarnessError {}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

/// Samples a uniform graph with exactly `m` of the C(n, 2) possible edges.
fn random_graph_exact(rng: &mut SplitMix64, n: u32, m: u64) -> Graph {
    if n < 2 || m == 0 {
        return Graph::empty(n);
    }
    let mut pool: Vec<(Vertex, Vertex)> = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pool.push((u, v));
        }
    }
    let total = pool.len() as u64;
    assert!(m <= total, "requested {m} edges but only {total} fit");
    // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
    for i in 0..m as usize {
        let j = i + rng.below(total - i as u64) as usize;
        pool.swap(i, j);
    }
    Graph::new(n, &pool[..m as usize]).expect("sampled pairs are simple and in range")
}

fn random_graph(rng: &mut SplitMix64, n: u32, density: f64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&density),
        "edge density must lie in [0, 1]"
    );
    let total = if n < 2 {
        0
    } else {
        n as u64 * (n as u64 - 1) / 2
    };
    let m = (density * total as f64 + 0.5) as u64;
    random_graph_exact(rng, n, m.min(total))
}

/// Greedy proper coloring: each edge, in sorted order, takes the smallest
/// color absent at both endpoints.
fn greedy_proper_colors(graph: &Graph) -> Vec<Color> {
    let mut at_vertex: Vec<Vec<Color>> = vec![Vec::new(); graph.n() as usize];
    let mut colors = Vec::with_capacity(graph.edges().len());
    for e in graph.edges() {
        let mut c: Color = 0;
        while at_vertex[e.u() as usize].contains(&c) || at_vertex[e.v() as usize].contains(&c) {
            c += 1;
        }
        at_vertex[e.u() as usize].push(c);
        at_vertex[e.v() as usize].push(c);
        colors.push(c);
    }
    colors
}

fn color_graph(graph: Graph, palette: PaletteStrategy) -> ColoredGraph {
    let colors: Vec<Color> = match palette {
        PaletteStrategy::Fresh => (0..graph.edge_count()).map(|i| i as Color).collect(),
        PaletteStrategy::Recycled => greedy_proper_colors(&graph),
    };
    ColoredGraph::new(graph, colors).expect("both strategies yield proper colorings")
}

/// Samples a host graph with a proper coloring from `cfg.seed`.
///
/// Order is uniform over `cfg.n_range`, the edge set is uniform over all
/// sets of round(density * C(n, 2)) pairs, and the coloring follows
/// `cfg.palette`. Same config, same host, bit for bit.
pub fn random_properly_colored_graph(cfg: &HarnessConfig) -> ColoredGraph {
    let (lo, hi) = cfg.n_range;
    assert!(lo <= hi, "empty order range");
    let mut rng = SplitMix64::new(cfg.seed);
    let n = lo + rng.below((hi - lo + 1) as u64) as u32;
    color_graph(random_graph(&mut rng, n, cfg.edge_density), cfg.palette)
}

/// Samples a host with an arbitrary, not necessarily proper, coloring.
///
/// Colors are drawn uniformly from a palette of about half the edge count,
/// so repeats at a vertex are common. This feeds the color-degree check,
/// whose point is exactly that properness is not assumed.
pub fn random_colored_graph(cfg: &HarnessConfig) -> ColoredGraph {
    let (lo, hi) = cfg.n_range;
    assert!(lo <= hi, "empty order range");
    let mut rng = SplitMix64::new(cfg.seed);
    let n = lo + rng.below((hi - lo + 1) as u64) as u32;
    let graph = random_graph(&mut rng, n, cfg.edge_density);
    let palette = (graph.edge_count() / 2).max(1);
    let colors: Vec<Color> = (0..graph.edge_count())
        .map(|_| rng.below(palette) as Color)
        .collect();
    ColoredGraph::with_any_coloring(graph, colors).expect("lengths match by construction")
}

// ---------------------------------------------------------------------------
// path-bound checks
// ---------------------------------------------------------------------------

/// Outcome of one minimum-(color-)degree path check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathBoundReport {
    /// Whether a rainbow path of the required length exists.
    pub pass: bool,
    /// The driving bound: minimum degree or minimum color degree.
    pub bound: u32,
    /// ceil(2 * bound / 3), the length the host must achieve.
    pub required: u32,
    /// Length of the exhibited rainbow path.
    pub achieved: u32,
    /// Whether the longest rainbow path is exactly `required`; `None` when
    /// the probe hit its node budget before deciding.
    pub equality: Option<bool>,
    /// The rainbow path backing `achieved`.
    pub witness: Witness,
}

fn bound_report(
    cg: &ColoredGraph,
    bound: u32,
    probe_budget: Option<u64>,
) -> Result<PathBoundReport, HarnessError> {
    let required = (2 * bound as u64).div_ceil(3) as u32;
    if required == 0 {
        // Vacuous requirement; still exhibit the path every edge provides.
        let witness = find_rainbow_path(cg, 1).expect("host has an edge");
        return Ok(PathBoundReport {
            pass: true,
            bound,
            required,
            achieved: 1,
            equality: Some(false),
            witness,
        });
    }
    match find_rainbow_path(cg, required) {
        Some(witness) => {
            // Passed. Probe one longer to classify the pass as tight or
            // slack; rainbow paths restrict to subpaths, so absence at
            // required + 1 pins the longest at exactly `required`.
            let (equality, achieved, witness) = match probe_budget {
                None => (None, required, witness),
                Some(b) => match find_rainbow_path_capped(cg, required + 1, b) {
                    None => (None, required, witness),
                    Some(None) => (Some(true), required, witness),
                    Some(Some(longer)) => (Some(false), required + 1, longer),
                },
            };
            Ok(PathBoundReport {
                pass: true,
                bound,
                required,
                achieved,
                equality,
                witness,
            })
        }
        None => {
            // A failing host would be a counterexample; spell out exactly
            // how far it gets.
            let (achieved, witness) = longest_rainbow_path(cg).expect("host has an edge");
            Ok(PathBoundReport {
                pass: false,
                bound,
                required,
                achieved,
                equality: Some(false),
                witness,
            })
        }
    }
}

/// Checks that a properly colored host has a rainbow path of length at least
/// ceil(2 * delta / 3), delta the minimum degree.
///
/// Errors on improper or edgeless input. A passing report carries a witness
/// of the required length (or one longer, when the equality probe already
/// found it); a failing report carries the exact longest rainbow path.
pub fn check_two_thirds(
    cg: &ColoredGraph,
    probe_budget: Option<u64>,
) -> Result<PathBoundReport, HarnessError> {
    if let Some((vertex, _, _)) = cg.properness_violation() {
        return Err(HarnessError::Improper { vertex });
    }
    if cg.graph().edge_count() == 0 {
        return Err(HarnessError::EdgelessHost);
    }
    let delta = cg.graph().min_degree().expect("nonempty by the edge check");
    bound_report(cg, delta, probe_budget)
}

/// As [`check_two_thirds`] with the minimum color degree in place of the
/// minimum degree. The coloring need not be proper; that is the point.
pub fn check_theta_two_thirds(
    cg: &ColoredGraph,
    probe_budget: Option<u64>,
) -> Result<PathBoundReport, HarnessError> {
    let theta = match cg.min_color_degree(false) {
        Ok(t) => t,
        Err(ColorDegreeError::NoEdges) => return Err(HarnessError::EdgelessHost),
        Err(ColorDegreeError::Improper { .. }) => {
            unreachable!("properness was not required")
        }
    };
    bound_report(cg, theta, probe_budget)
}

// ---------------------------------------------------------------------------
// degree lemma
// ---------------------------------------------------------------------------

/// Which hypothesis of the degree lemma an instance missed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PreconditionViolation {
    /// No vertices: the average degree is undefined.
    NoVertices,
    /// `eps` must lie in [0, 1).
    EpsilonOutOfRange,
    /// `d` exceeds the assumed maximum degree.
    DegreeAboveCap,
    /// Some vertex exceeds the assumed maximum degree.
    MaxDegreeExceeded,
    /// The average degree falls below `d - eps`.
    AverageTooLow,
}

/// How a degree-lemma instance resolved.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LemmaOutcome {
    /// The low-degree count obeys the bound.
    Pass,
    /// The count exceeds the bound.
    Fail,
    /// The hypotheses do not hold, so the instance says nothing either way.
    Precondition(PreconditionViolation),
}

/// Report for [`check_degree_lemma`].
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct DegreeLemmaReport {
    pub outcome: LemmaOutcome,
    /// Vertices of degree strictly below `d`.
    pub low_count: u64,
    /// The cap ((max_deg - d + eps) / (max_deg - d + 1)) * n on that count.
    pub allowed: f64,
}

/// Counts vertices of degree below `d` in a host of maximum degree at most
/// `max_deg` and average degree at least `d - eps`, and checks the count
/// against ((max_deg - d + eps) / (max_deg - d + 1)) * n.
///
/// Hypothesis failures come back as `Precondition(..)` outcomes rather than
/// errors: sweeps over random hosts hit them routinely, and they are data,
/// not faults. Comparisons run in f64, exact for the integer parts at any
/// realistic order; when probing instances that are tight on purpose, pick
/// an `eps` with an exact binary representation (0, 0.25, 0.5).
pub fn check_degree_lemma(g: &Graph, d: u32, max_deg: u32, eps: f64) -> DegreeLemmaReport {
    let n = g.n() as u64;
    let low_count = g.degrees().iter().filter(|&&x| x < d).count() as u64;
    let gap = max_deg.saturating_sub(d) as f64;
    let allowed = (gap + eps) / (gap + 1.0) * n as f64;

    let violation = if !(0.0..1.0).contains(&eps) {
        Some(PreconditionViolation::EpsilonOutOfRange)
    } else if max_deg < d {
        Some(PreconditionViolation::DegreeAboveCap)
    } else if n == 0 {
        Some(PreconditionViolation::NoVertices)
    } else if g.max_degree().unwrap_or(0) > max_deg {
        Some(PreconditionViolation::MaxDegreeExceeded)
    } else if ((2 * g.edge_count()) as f64) + eps * (n as f64) < (d as u64 * n) as f64 {
        Some(PreconditionViolation::AverageTooLow)
    } else {
        None
    };

    let outcome = match violation {
        Some(v) => LemmaOutcome::Precondition(v),
        None if (low_count as f64) * (gap + 1.0) <= gap * n as f64 + eps * n as f64 => {
            LemmaOutcome::Pass
        }
        None => LemmaOutcome::Fail,
    };
    DegreeLemmaReport {
        outcome,
        low_count,
        allowed,
    }
}

// ---------------------------------------------------------------------------
// bound falsification
// ---------------------------------------------------------------------------

/// Archive of attempts to beat a rainbow Turán upper bound by random search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FalsifyReport {
    /// True when every sampled host contained the rainbow pattern, i.e. the
    /// tested bound survived.
    pub pass: bool,
    pub pattern: Pattern,
    pub n: u32,
    /// Edges per sampled host.
    pub edges: u64,
    pub trials: u64,
    /// Hosts with no rainbow copy of the pattern: each one refutes the
    /// tested bound.
    pub counterexamples: Vec<ColoredGraph>,
}

/// Samples `trials` properly colored hosts on `n` vertices with more edges
/// than an upper bound allows and hunts for one with no rainbow copy of
/// `pattern`.
///
/// With `edges` unset, the tested bound is the general one wired in for the
/// pattern — ceil((3l - 2) / 2) * n for the path with l edges, or
/// n(k - 1) + (k - 1)(4k - 3) for the matching with k edges — and each host
/// gets bound + 1 edges. Passing `edges` overrides the host size, which is
/// how sharper conjectured bounds get probed. Patterns other than paths and
/// matchings are rejected, as are hosts that cannot fit the edges.
pub fn falsify_upper_bound(
    pattern: &Pattern,
    n: u32,
    trials: u64,
    cfg: &HarnessConfig,
    edges: Option<u64>,
) -> Result<FalsifyReport, HarnessError> {
    if trials == 0 {
        return Err(HarnessError::ZeroTrials);
    }
    let default_edges = match pattern {
        Pattern::Path(l) => rainbow_path_upper(n as u64, *l) + 1,
        Pattern::Stars(f) if f.is_matching() => rainbow_matching_upper(n as u64, f.k()) + 1,
        other => return Err(HarnessError::UnsupportedPattern(other.clone())),
    };
    let m = edges.unwrap_or(default_edges);
    let total = if n < 2 {
        0
    } else {
        n as u64 * (n as u64 - 1) / 2
    };
    if m > total {
        return Err(HarnessError::TooManyEdges { edges: m, max: total });
    }

    let mut counterexamples = Vec::new();
    for t in 0..trials {
        let mut rng = SplitMix64::new(cfg.seed ^ t);
        let cg = color_graph(random_graph_exact(&mut rng, n, m), cfg.palette);
        let found = match pattern {
            Pattern::Path(l) => find_rainbow_path(&cg, *l).is_some(),
            Pattern::Stars(f) => find_rainbow_star_forest(&cg, f).is_some(),
        };
        if !found {
            counterexamples.push(cg);
        }
    }
    Ok(FalsifyReport {
        pass: counterexamples.is_empty(),
        pattern: pattern.clone(),
        n,
        edges: m,
        trials,
        counterexamples,
    })
}

// ---------------------------------------------------------------------------
// sweeps
// ---------------------------------------------------------------------------

/// Merged outcome of independent sweep trials.
///
/// Buckets hold trial indices and stay sorted, so merging partial reports
/// from disjoint index ranges reproduces the sequential sweep exactly.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SweepReport {
    /// Trials run.
    pub trials: u64,
    /// Trials whose host had no edges and was skipped.
    pub skipped: Vec<u64>,
    /// Trials whose check failed.
    pub failures: Vec<u64>,
    /// Trials whose longest rainbow path exactly met the requirement.
    pub equalities: Vec<u64>,
    /// Equality trials whose bound was not divisible by 3. Tightness is
    /// expected from the divisible case, so these deserve a second look.
    pub flagged: Vec<u64>,
    /// Trials whose equality probe ran out of budget undecided.
    pub undecided: Vec<u64>,
}

impl SweepReport {
    /// Files one trial outcome under its index; `None` means the generated
    /// host was edgeless and the check did not apply.
    pub fn record(&mut self, trial: u64, outcome: Option<&PathBoundReport>) {
        self.trials += 1;
        match outcome {
            None => self.skipped.push(trial),
            Some(r) => {
                if !r.pass {
                    self.failures.push(trial);
                }
                match r.equality {
                    Some(true) => {
                        self.equalities.push(trial);
                        if r.bound % 3 != 0 {
                            self.flagged.push(trial);
                        }
                    }
                    Some(false) => {}
                    None => self.undecided.push(trial),
                }
            }
        }
    }

    /// Folds another partial report in. Associative and, for disjoint trial
    /// ranges, order-independent.
    pub fn merge(mut self, other: SweepReport) -> SweepReport {
        self.trials += other.trials;
        for (mine, theirs) in [
            (&mut self.skipped, other.skipped),
            (&mut self.failures, other.failures),
            (&mut self.equalities, other.equalities),
            (&mut self.flagged, other.flagged),
            (&mut self.undecided, other.undecided),
        ] {
            mine.extend(theirs);
            mine.sort_unstable();
        }
        self
    }
}

/// Runs trial `trial` of a minimum-degree sweep: builds the host from
/// `cfg.seed ^ trial` and checks it. `None` means the host was edgeless.
pub fn two_thirds_trial(cfg: &HarnessConfig, trial: u64) -> Option<PathBoundReport> {
    let sub = HarnessConfig {
        seed: cfg.seed ^ trial,
        ..cfg.clone()
    };
    match check_two_thirds(&random_properly_colored_graph(&sub), cfg.probe_budget) {
        Ok(r) => Some(r),
        Err(HarnessError::EdgelessHost) => None,
        Err(e) => unreachable!("generated hosts are properly colored: {e:?}"),
    }
}

/// Color-degree counterpart of [`two_thirds_trial`], on hosts with
/// arbitrary colorings.
pub fn theta_trial(cfg: &HarnessConfig, trial: u64) -> Option<PathBoundReport> {
    let sub = HarnessConfig {
        seed: cfg.seed ^ trial,
        ..cfg.clone()
    };
    match check_theta_two_thirds(&random_colored_graph(&sub), cfg.probe_budget) {
        Ok(r) => Some(r),
        Err(HarnessError::EdgelessHost) => None,
        Err(e) => unreachable!("arbitrary colorings cannot be rejected: {e:?}"),
    }
}

fn run_sweep(
    cfg: &HarnessConfig,
    trial_fn: fn(&HarnessConfig, u64) -> Option<PathBoundReport>,
) -> Result<SweepReport, HarnessError> {
    if cfg.trials == 0 {
        return Err(HarnessError::ZeroTrials);
    }
    let mut report = SweepReport::default();
    for t in 0..cfg.trials {
        report.record(t, trial_fn(cfg, t).as_ref());
    }
    Ok(report)
}

/// Runs `cfg.trials` minimum-degree checks on independently seeded hosts.
pub fn sweep_two_thirds(cfg: &HarnessConfig) -> Result<SweepReport, HarnessError> {
    run_sweep(cfg, two_thirds_trial)
}

/// Runs `cfg.trials` color-degree checks on independently seeded hosts.
pub fn sweep_theta(cfg: &HarnessConfig) -> Result<SweepReport, HarnessError> {
    run_sweep(cfg, theta_trial)
}
