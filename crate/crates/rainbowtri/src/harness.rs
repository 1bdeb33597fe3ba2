//! Exhaustive and randomized checking of the theorem statements.
//!
//! Exhaustive enumeration walks every edge-colored graph on `n` labeled
//! vertices (every subset of the vertex pairs, times every coloring of
//! the chosen edges up to color renaming) or every oriented graph (each
//! pair absent, one way, or the other way). Counts grow fast, so both
//! walks sit behind explicit caps; the defaults keep a full run under a
//! second. Randomized streams draw reproducible instances from a seeded
//! generator, with a fresh edge density per instance so sparse and dense
//! graphs both appear.
//!
//! Colorings are enumerated as restricted growth strings: the first edge
//! gets color 1 and each later edge gets a color at most one above the
//! largest used so far. Every coloring of a fixed edge set is the
//! canonical relabeling of exactly one such string, so enumerating them
//! visits each color pattern once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colored_graph::ColoredGraph;
use crate::format;
use crate::oriented_graph::OrientedGraph;
use crate::theorems::{self, Conclusion, TheoremId, TheoremInput, TheoremVerdict};
use crate::{Color, GraphKind};

/// Largest `n` an exhaustive colored walk accepts by default.
pub const DEFAULT_COLORED_CAP: usize = 4;
/// Largest `n` an exhaustive oriented walk accepts by default.
pub const DEFAULT_ORIENTED_CAP: usize = 5;

/// Upper bounds on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub colored_cap: usize,
    pub oriented_cap: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            colored_cap: DEFAULT_COLORED_CAP,
            oriented_cap: DEFAULT_ORIENTED_CAP,
        }
    }
}

impl EnumerationLimits {
    /// Raises both caps to at least `cap`; never lowers a default.
    pub fn with_cap(cap: usize) -> Self {
        EnumerationLimits {
            colored_cap: cap.max(DEFAULT_COLORED_CAP),
            oriented_cap: cap.max(DEFAULT_ORIENTED_CAP),
        }
    }
}

/// A verification request the harness cannot run.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("exhaustive enumeration of {kind} graphs on {n} vertices exceeds the cap of {cap}")]
    LimitExceeded {
        kind: GraphKind,
        n: usize,
        cap: usize,
    },
    #[error(transparent)]
    KindMismatch(#[from] theorems::KindMismatch),
}

/// Restricted growth strings of a fixed length, 1-based: the first entry
/// is 1 and each entry is at most one above the maximum before it. There
/// are Bell(len) of them, one per partition of the edge positions into
/// color classes.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    next: Option<Vec<Color>>,
}

impl RestrictedGrowth {
    pub fn new(len: usize) -> Self {
        RestrictedGrowth {
            next: Some(vec![1; len]),
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<Color>;

    fn next(&mut self) -> Option<Vec<Color>> {
        let current = self.next.take()?;
        let mut s = current.clone();
        for i in (1..s.len()).rev() {
            let prefix_max = s[..i].iter().copied().max().unwrap_or(0);
            if s[i] <= prefix_max {
                s[i] += 1;
                for slot in s[i + 1..].iter_mut() {
                    *slot = 1;
                }
                self.next = Some(s);
                break;
            }
        }
        Some(current)
    }
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Every edge-colored graph on `n` labeled vertices: each subset of the
/// vertex pairs as the edge set, times every restricted growth coloring
/// of it. Yields `sum over k of C(n(n-1)/2, k) * Bell(k)` graphs.
#[derive(Debug, Clone)]
pub struct ColoredEnumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    mask_count: u64,
    active: Option<(Vec<(usize, usize)>, RestrictedGrowth)>,
}

impl Iterator for ColoredEnumeration {
    type Item = ColoredGraph;

    fn next(&mut self) -> Option<ColoredGraph> {
        loop {
            if let Some((edges, colorings)) = self.active.as_mut() {
                if let Some(colors) = colorings.next() {
                    let colored = edges
                        .iter()
                        .zip(colors)
                        .map(|(&(u, v), c)| (u, v, c))
                        .collect::<Vec<_>>();
                    return Some(
                        ColoredGraph::new(self.n, colored).expect("enumerated edges are valid"),
                    );
                }
                self.active = None;
            }
            if self.next_mask == self.mask_count {
                return None;
            }
            let mask = self.next_mask;
            self.next_mask += 1;
            let edges: Vec<(usize, usize)> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let len = edges.len();
            self.active = Some((edges, RestrictedGrowth::new(len)));
        }
    }
}

/// Starts an exhaustive colored walk, refusing `n` above the cap.
pub fn enumerate_colored_graphs(
    n: usize,
    limits: EnumerationLimits,
) -> Result<ColoredEnumeration, HarnessError> {
    let pairs = vertex_pairs(n);
    // the edge subset lives in a u64 bitmask, which caps pairs at 63
    if n > limits.colored_cap || pairs.len() >= 64 {
        return Err(HarnessError::LimitExceeded {
            kind: GraphKind::Colored,
            n,
            cap: limits.colored_cap.min(11),
        });
    }
    let mask_count = 1u64 << pairs.len();
    Ok(ColoredEnumeration {
        n,
        pairs,
        next_mask: 0,
        mask_count,
        active: None,
    })
}

/// Every coloring of the edge set of `base`, one per restricted growth
/// string: Bell(m) graphs on the same vertices and edges.
pub fn enumerate_colorings(base: &ColoredGraph) -> impl Iterator<Item = ColoredGraph> + use<> {
    let n = base.vertex_count();
    let edges: Vec<(usize, usize)> = base.edges().map(|(u, v, _)| (u, v)).collect();
    RestrictedGrowth::new(edges.len()).map(move |colors| {
        let colored = edges
            .iter()
            .zip(colors)
            .map(|(&(u, v), c)| (u, v, c))
            .collect::<Vec<_>>();
        ColoredGraph::new(n, colored).expect("recolored edges are valid")
    })
}

/// Every oriented graph on `n` labeled vertices: each vertex pair is
/// absent, directed low to high, or directed high to low. Yields
/// `3^(n(n-1)/2)` graphs.
#[derive(Debug, Clone)]
pub struct OrientedEnumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    trits: Option<Vec<u8>>,
}

impl Iterator for OrientedEnumeration {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        let trits = self.trits.take()?;
        let arcs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .zip(&trits)
            .filter_map(|(&(u, v), &t)| match t {
                0 => None,
                1 => Some((u, v)),
                _ => Some((v, u)),
            })
            .collect();
        let graph = OrientedGraph::new(self.n, arcs).expect("one arc per pair is valid");
        let mut next = trits;
        for i in (0..next.len()).rev() {
            if next[i] < 2 {
                next[i] += 1;
                for slot in next[i + 1..].iter_mut() {
                    *slot = 0;
                }
                self.trits = Some(next);
                return Some(graph);
            }
        }
        Some(graph)
    }
}

/// Starts an exhaustive oriented walk, refusing `n` above the cap.
pub fn enumerate_oriented_graphs(
    n: usize,
    limits: EnumerationLimits,
) -> Result<OrientedEnumeration, HarnessError> {
    if n > limits.oriented_cap {
        return Err(HarnessError::LimitExceeded {
            kind: GraphKind::Oriented,
            n,
            cap: limits.oriented_cap,
        });
    }
    Ok(OrientedEnumeration {
        n,
        pairs: vertex_pairs(n),
        trits: Some(vec![0; n * n.saturating_sub(1) / 2]),
    })
}

fn random_colored(rng: &mut ChaCha8Rng, n: usize) -> ColoredGraph {
    let density: f64 = rng.random();
    let mut edges: Vec<(usize, usize, Color)> = Vec::new();
    for (u, v) in vertex_pairs(n) {
        if rng.random::<f64>() < density {
            edges.push((u, v, 1));
        }
    }
    let palette = (edges.len().max(1)) as Color;
    let palette = rng.random_range(1..=palette);
    for edge in edges.iter_mut() {
        edge.2 = rng.random_range(1..=palette);
    }
    ColoredGraph::new(n, edges).expect("sampled edges are valid")
}

fn random_oriented(rng: &mut ChaCha8Rng, n: usize) -> OrientedGraph {
    let density: f64 = rng.random();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (u, v) in vertex_pairs(n) {
        if rng.random::<f64>() < density {
            arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    OrientedGraph::new(n, arcs).expect("sampled arcs are valid")
}

/// A reproducible stream of random edge-colored graphs on `n` vertices.
/// Each instance draws its own edge density, then a palette size of at
/// most the edge count, then a color per edge.
#[derive(Debug, Clone)]
pub struct RandomColoredGraphs {
    rng: ChaCha8Rng,
    n: usize,
    remaining: u64,
}

impl Iterator for RandomColoredGraphs {
    type Item = ColoredGraph;

    fn next(&mut self) -> Option<ColoredGraph> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        Some(random_colored(&mut self.rng, self.n))
    }
}

pub fn random_colored_graphs(n: usize, samples: u64, seed: u64) -> RandomColoredGraphs {
    RandomColoredGraphs {
        rng: ChaCha8Rng::seed_from_u64(seed),
        n,
        remaining: samples,
    }
}

/// A reproducible stream of random oriented graphs on `n` vertices. Each
/// instance draws its own arc density; each present pair gets a fair coin
/// for direction.
#[derive(Debug, Clone)]
pub struct RandomOrientedGraphs {
    rng: ChaCha8Rng,
    n: usize,
    remaining: u64,
}

impl Iterator for RandomOrientedGraphs {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        Some(random_oriented(&mut self.rng, self.n))
    }
}

pub fn random_oriented_graphs(n: usize, samples: u64, seed: u64) -> RandomOrientedGraphs {
    RandomOrientedGraphs {
        rng: ChaCha8Rng::seed_from_u64(seed),
        n,
        remaining: samples,
    }
}

/// Which instances a verification run should cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationSpec {
    /// Every edge-colored graph on `n` labeled vertices.
    AllColoredGraphs { n: usize },
    /// Every oriented graph on `n` labeled vertices.
    AllOrientedGraphs { n: usize },
    /// Every coloring of one fixed edge set.
    AllColoringsOf { base: ColoredGraph },
    /// A seeded stream of random colored graphs; `canonicalize` relabels
    /// each instance's colors by first appearance before checking.
    RandomColored {
        n: usize,
        samples: u64,
        seed: u64,
        canonicalize: bool,
    },
    /// A seeded stream of random oriented graphs.
    RandomOriented { n: usize, samples: u64, seed: u64 },
}

impl EnumerationSpec {
    pub fn kind(&self) -> GraphKind {
        match self {
            EnumerationSpec::AllColoredGraphs { .. }
            | EnumerationSpec::AllColoringsOf { .. }
            | EnumerationSpec::RandomColored { .. } => GraphKind::Colored,
            EnumerationSpec::AllOrientedGraphs { .. }
            | EnumerationSpec::RandomOriented { .. } => GraphKind::Oriented,
        }
    }

    /// A stable one-line name for reports.
    pub fn describe(&self) -> String {
        match self {
            EnumerationSpec::AllColoredGraphs { n } => format!("AllColoredGraphs(n={n})"),
            EnumerationSpec::AllOrientedGraphs { n } => format!("AllOrientedGraphs(n={n})"),
            EnumerationSpec::AllColoringsOf { base } => format!(
                "AllColoringsOf(n={}, m={})",
                base.vertex_count(),
                base.edge_count()
            ),
            EnumerationSpec::RandomColored {
                n,
                samples,
                seed,
                canonicalize,
            } => format!(
                "RandomColored(n={n}, samples={samples}, seed={seed}, canonicalize={canonicalize})"
            ),
            EnumerationSpec::RandomOriented { n, samples, seed } => {
                format!("RandomOriented(n={n}, samples={samples}, seed={seed})")
            }
        }
    }
}

/// The outcome of one verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub instance_class: String,
    pub instances_checked: u64,
    pub condition_met_count: u64,
    pub verdict_tally: BTreeMap<Conclusion, u64>,
    /// Serialized instances whose verdict was a violation or a conjecture
    /// counterexample, sorted.
    pub counterexamples: Vec<String>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn violation_count(&self) -> u64 {
        *self.verdict_tally.get(&Conclusion::Violation).unwrap_or(&0)
    }

    pub fn conjecture_counterexample_count(&self) -> u64 {
        *self
            .verdict_tally
            .get(&Conclusion::ConjectureCounterexample)
            .unwrap_or(&0)
    }

    /// A human-readable block, one fact per line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "theorem: {}", self.theorem);
        let _ = writeln!(out, "instance class: {}", self.instance_class);
        let _ = writeln!(out, "instances checked: {}", self.instances_checked);
        let _ = writeln!(out, "condition met: {}", self.condition_met_count);
        for (conclusion, count) in &self.verdict_tally {
            let _ = writeln!(out, "  {conclusion}: {count}");
        }
        let _ = writeln!(out, "violations: {}", self.violation_count());
        let _ = writeln!(out, "wall time: {:?}", self.wall_time);
        if !self.counterexamples.is_empty() {
            let _ = writeln!(out, "counterexamples ({}):", self.counterexamples.len());
            for instance in &self.counterexamples {
                out.push_str(instance);
                if !instance.ends_with('\n') {
                    out.push('\n');
                }
            }
        }
        out
    }

    /// Tab-separated records `theorem, instance class, key, value`, one
    /// line per fact. Newlines inside counterexamples become `;`.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        let mut record = |key: &str, value: &str| {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                self.theorem, self.instance_class, key, value
            );
        };
        record("checked", &self.instances_checked.to_string());
        record("condition_met", &self.condition_met_count.to_string());
        for (conclusion, count) in &self.verdict_tally {
            record(&format!("conclusion:{conclusion}"), &count.to_string());
        }
        for instance in &self.counterexamples {
            record(
                "counterexample",
                instance.trim_end_matches('\n').replace('\n', ";").as_str(),
            );
        }
        out
    }
}

struct RunningTally {
    checked: u64,
    met: u64,
    tally: BTreeMap<Conclusion, u64>,
    counterexamples: Vec<String>,
}

impl RunningTally {
    fn new() -> Self {
        RunningTally {
            checked: 0,
            met: 0,
            tally: BTreeMap::new(),
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, verdict: &TheoremVerdict, instance_text: impl FnOnce() -> String) {
        self.checked += 1;
        if verdict.condition_met {
            self.met += 1;
        }
        *self.tally.entry(verdict.conclusion).or_insert(0) += 1;
        if matches!(
            verdict.conclusion,
            Conclusion::Violation | Conclusion::ConjectureCounterexample
        ) {
            self.counterexamples.push(instance_text());
        }
    }

    fn finish(mut self, theorem: TheoremId, class: String, started: Instant) -> VerificationReport {
        self.counterexamples.sort();
        VerificationReport {
            theorem,
            instance_class: class,
            instances_checked: self.checked,
            condition_met_count: self.met,
            verdict_tally: self.tally,
            counterexamples: self.counterexamples,
            wall_time: started.elapsed(),
        }
    }
}

fn run_colored(
    theorem: TheoremId,
    class: String,
    instances: impl Iterator<Item = ColoredGraph>,
) -> VerificationReport {
    let started = Instant::now();
    let mut tally = RunningTally::new();
    for g in instances {
        let verdict =
            theorems::check(theorem, TheoremInput::Colored(&g)).expect("kind checked upfront");
        tally.record(&verdict, || format::serialize_colored(&g));
    }
    tally.finish(theorem, class, started)
}

fn run_oriented(
    theorem: TheoremId,
    class: String,
    instances: impl Iterator<Item = OrientedGraph>,
) -> VerificationReport {
    let started = Instant::now();
    let mut tally = RunningTally::new();
    for d in instances {
        let verdict =
            theorems::check(theorem, TheoremInput::Oriented(&d)).expect("kind checked upfront");
        tally.record(&verdict, || format::serialize_oriented(&d));
    }
    tally.finish(theorem, class, started)
}

/// Runs `theorem` on every instance described by `spec` and tallies the
/// verdicts. Fails upfront on a kind mismatch or a cap overrun.
pub fn verify(
    spec: &EnumerationSpec,
    theorem: TheoremId,
    limits: EnumerationLimits,
) -> Result<VerificationReport, HarnessError> {
    if spec.kind() != theorem.kind() {
        return Err(HarnessError::KindMismatch(theorems::KindMismatch {
            theorem,
            expected: theorem.kind(),
            got: spec.kind(),
        }));
    }
    let class = spec.describe();
    let report = match spec {
        EnumerationSpec::AllColoredGraphs { n } => {
            run_colored(theorem, class, enumerate_colored_graphs(*n, limits)?)
        }
        EnumerationSpec::AllOrientedGraphs { n } => {
            run_oriented(theorem, class, enumerate_oriented_graphs(*n, limits)?)
        }
        EnumerationSpec::AllColoringsOf { base } => {
            run_colored(theorem, class, enumerate_colorings(base))
        }
        EnumerationSpec::RandomColored {
            n,
            samples,
            seed,
            canonicalize,
        } => {
            let stream = random_colored_graphs(*n, *samples, *seed);
            if *canonicalize {
                run_colored(theorem, class, stream.map(|g| g.canonicalize_colors()))
            } else {
                run_colored(theorem, class, stream)
            }
        }
        EnumerationSpec::RandomOriented { n, samples, seed } => {
            run_oriented(theorem, class, random_oriented_graphs(*n, *samples, *seed))
        }
    };
    Ok(report)
}

/// Checks CH over every oriented graph on 1 through `n_max` vertices and
/// aggregates one report. A counterexample here would be publishable, so
/// it lands in the report rather than an error.
pub fn search_ch_counterexample(
    n_max: usize,
    limits: EnumerationLimits,
) -> Result<VerificationReport, HarnessError> {
    if n_max > limits.oriented_cap {
        return Err(HarnessError::LimitExceeded {
            kind: GraphKind::Oriented,
            n: n_max,
            cap: limits.oriented_cap,
        });
    }
    let started = Instant::now();
    let mut tally = RunningTally::new();
    for n in 1..=n_max {
        for d in enumerate_oriented_graphs(n, limits)? {
            let verdict = theorems::check_ch(&d);
            tally.record(&verdict, || format::serialize_oriented(&d));
        }
    }
    Ok(tally.finish(
        TheoremId::Ch,
        format!("AllOrientedGraphs(n=1..={n_max})"),
        started,
    ))
}
