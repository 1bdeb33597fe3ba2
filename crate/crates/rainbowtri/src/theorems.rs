//! Checkers for the eight sufficient conditions.
//!
//! Four run on edge-colored graphs: T1 (`e(G) + c(G) >= n(n+1)/2`), T2
//! (`sum of color degrees >= n(n+1)/2`), COR1 (`every color degree >=
//! (n+1)/2`), and the classifier T3 (`every color degree >= n/2`, where a
//! rainbow-triangle-free graph must be a balanced complete bipartite graph
//! or one of two four-vertex exceptions). Four run on oriented graphs: T4
//! (`a(D) + sum of out-component numbers >= n(n+1)/2`), the classifier T5
//! (`in-degree + out-component number >= n/2 at every vertex`), T6
//! (`minimum in-degree >= (3 - sqrt 7) n`), and CH (`minimum in-degree >=
//! n/3`, a conjecture: met instances without a directed triangle are
//! reported as counterexamples, not as bugs).
//!
//! Every comparison is exact integer arithmetic. A checker never claims a
//! triangle without producing one; if a proven condition is met and no
//! triangle or admissible structure exists, the verdict is a `Violation`
//! carrying the full instance, which signals a bug in this crate rather
//! than in the mathematics. The degenerate graph with no vertices meets
//! every threshold vacuously but contains nothing, so all checkers treat
//! it as out of scope: `condition_met` is false on `n = 0`.

use std::fmt;

use crate::colored_graph::ColoredGraph;
use crate::oriented_graph::OrientedGraph;
use crate::GraphKind;

/// Identifier of one checkable statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    Cor1,
    T3,
    T4,
    T5,
    T6,
    Ch,
}

impl TheoremId {
    /// The graph kind this statement is about.
    pub fn kind(self) -> GraphKind {
        match self {
            TheoremId::T1 | TheoremId::T2 | TheoremId::Cor1 | TheoremId::T3 => GraphKind::Colored,
            TheoremId::T4 | TheoremId::T5 | TheoremId::T6 | TheoremId::Ch => GraphKind::Oriented,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::Cor1 => "COR1",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::Ch => "CH",
        })
    }
}

/// Failed lookup of a theorem id by name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id `{0}`; expected one of t1, t2, cor1, t3, t4, t5, t6, ch")]
pub struct UnknownTheorem(pub String);

impl std::str::FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, UnknownTheorem> {
        match s.to_ascii_lowercase().as_str() {
            "t1" => Ok(TheoremId::T1),
            "t2" => Ok(TheoremId::T2),
            "cor1" => Ok(TheoremId::Cor1),
            "t3" => Ok(TheoremId::T3),
            "t4" => Ok(TheoremId::T4),
            "t5" => Ok(TheoremId::T5),
            "t6" => Ok(TheoremId::T6),
            "ch" => Ok(TheoremId::Ch),
            _ => Err(UnknownTheorem(s.to_string())),
        }
    }
}

/// What a checker concluded about one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conclusion {
    /// The condition does not hold, so the statement says nothing.
    NotApplicable,
    HasRainbowTriangle,
    HasDirectedTriangle,
    /// The underlying graph is complete bipartite with equal sides.
    BalancedCompleteBipartite,
    /// The four-vertex complete exception of T3.
    K4Exception,
    /// The four-vertex complete-minus-an-edge exception of T3.
    K4MinusEdgeException,
    /// The underlying graph of the digraph is complete bipartite with
    /// equal sides.
    OrientationOfBalancedBipartite,
    /// A met CH condition with no directed triangle. Reportable, and would
    /// be a major find; never treated as an implementation bug.
    ConjectureCounterexample,
    /// A proven statement failed on this instance: the implementation is
    /// wrong somewhere. The verdict carries the full instance.
    Violation,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::NotApplicable => "NotApplicable",
            Conclusion::HasRainbowTriangle => "HasRainbowTriangle",
            Conclusion::HasDirectedTriangle => "HasDirectedTriangle",
            Conclusion::BalancedCompleteBipartite => "BalancedCompleteBipartite",
            Conclusion::K4Exception => "K4Exception",
            Conclusion::K4MinusEdgeException => "K4MinusEdgeException",
            Conclusion::OrientationOfBalancedBipartite => "OrientationOfBalancedBipartite",
            Conclusion::ConjectureCounterexample => "ConjectureCounterexample",
            Conclusion::Violation => "Violation",
        })
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A triangle, sorted ascending: rainbow for colored checkers,
    /// directed for oriented ones. Always the lexicographically smallest.
    Triangle([usize; 3]),
    /// The two sides of a complete bipartite underlying graph.
    Bipartition { left: Vec<usize>, right: Vec<usize> },
    /// The full instance, attached to violations and counterexamples.
    ColoredInstance(ColoredGraph),
    OrientedInstance(OrientedGraph),
}

/// The outcome of running one checker on one instance.
///
/// When `condition_met` is false the conclusion is always
/// [`Conclusion::NotApplicable`] and there is no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub condition_met: bool,
    pub conclusion: Conclusion,
    pub witness: Option<Witness>,
}

impl TheoremVerdict {
    fn not_applicable(theorem: TheoremId) -> Self {
        TheoremVerdict {
            theorem,
            condition_met: false,
            conclusion: Conclusion::NotApplicable,
            witness: None,
        }
    }

    fn met(theorem: TheoremId, conclusion: Conclusion, witness: Option<Witness>) -> Self {
        TheoremVerdict {
            theorem,
            condition_met: true,
            conclusion,
            witness,
        }
    }
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem: {}", self.theorem)?;
        writeln!(
            f,
            "condition: {}",
            if self.condition_met { "met" } else { "not met" }
        )?;
        writeln!(f, "conclusion: {}", self.conclusion)?;
        match &self.witness {
            Some(Witness::Triangle([a, b, c])) => writeln!(f, "witness: triangle {a} {b} {c}")?,
            Some(Witness::Bipartition { left, right }) => {
                let fmt_side = |side: &[usize]| {
                    side.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(f, "witness: bipartition {} / {}", fmt_side(left), fmt_side(right))?;
            }
            Some(Witness::ColoredInstance(_)) | Some(Witness::OrientedInstance(_)) => {
                writeln!(f, "witness: full instance")?;
            }
            None => {}
        }
        Ok(())
    }
}

fn rainbow_or_violation(theorem: TheoremId, g: &ColoredGraph) -> TheoremVerdict {
    match g.rainbow_triangles().smallest() {
        Some(t) => TheoremVerdict::met(
            theorem,
            Conclusion::HasRainbowTriangle,
            Some(Witness::Triangle(t)),
        ),
        None => TheoremVerdict::met(
            theorem,
            Conclusion::Violation,
            Some(Witness::ColoredInstance(g.clone())),
        ),
    }
}

fn directed_or_violation(theorem: TheoremId, d: &OrientedGraph) -> TheoremVerdict {
    match d.directed_triangles().smallest() {
        Some(t) => TheoremVerdict::met(
            theorem,
            Conclusion::HasDirectedTriangle,
            Some(Witness::Triangle(t)),
        ),
        None => TheoremVerdict::met(
            theorem,
            Conclusion::Violation,
            Some(Witness::OrientedInstance(d.clone())),
        ),
    }
}

/// T1: if `e(G) + c(G) >= n(n+1)/2` then G has a rainbow triangle.
pub fn check_t1(g: &ColoredGraph) -> TheoremVerdict {
    let n = g.vertex_count() as u64;
    let lhs = (g.edge_count() + g.color_number()) as u64;
    if n == 0 || 2 * lhs < n * (n + 1) {
        return TheoremVerdict::not_applicable(TheoremId::T1);
    }
    rainbow_or_violation(TheoremId::T1, g)
}

/// T2: if the color degrees sum to at least `n(n+1)/2` then G has a
/// rainbow triangle.
pub fn check_t2(g: &ColoredGraph) -> TheoremVerdict {
    let n = g.vertex_count() as u64;
    let lhs = g.stats().color_degree_sum() as u64;
    if n == 0 || 2 * lhs < n * (n + 1) {
        return TheoremVerdict::not_applicable(TheoremId::T2);
    }
    rainbow_or_violation(TheoremId::T2, g)
}

/// COR1: if every color degree is at least `(n+1)/2` then G has a rainbow
/// triangle.
pub fn check_cor1(g: &ColoredGraph) -> TheoremVerdict {
    let n = g.vertex_count();
    let stats = g.stats();
    let met = n > 0 && stats.color_degrees.iter().all(|&d| 2 * d > n);
    if !met {
        return TheoremVerdict::not_applicable(TheoremId::Cor1);
    }
    rainbow_or_violation(TheoremId::Cor1, g)
}

/// T3: if every color degree is at least `n/2`, classifies G as having a
/// rainbow triangle, being a balanced complete bipartite graph, or being
/// one of the two four-vertex exceptions. Anything else is a `Violation`.
pub fn classify_t3(g: &ColoredGraph) -> TheoremVerdict {
    let n = g.vertex_count();
    let stats = g.stats();
    let met = n > 0 && stats.color_degrees.iter().all(|&d| 2 * d >= n);
    if !met {
        return TheoremVerdict::not_applicable(TheoremId::T3);
    }
    if let Some(t) = g.rainbow_triangles().smallest() {
        return TheoremVerdict::met(
            TheoremId::T3,
            Conclusion::HasRainbowTriangle,
            Some(Witness::Triangle(t)),
        );
    }
    if let Some((left, right)) = balanced_complete_bipartition(n, |u, v| g.has_edge(u, v)) {
        return TheoremVerdict::met(
            TheoremId::T3,
            Conclusion::BalancedCompleteBipartite,
            Some(Witness::Bipartition { left, right }),
        );
    }
    if n == 4 && g.edge_count() == 6 {
        return TheoremVerdict::met(TheoremId::T3, Conclusion::K4Exception, None);
    }
    if n == 4 && g.edge_count() == 5 {
        return TheoremVerdict::met(TheoremId::T3, Conclusion::K4MinusEdgeException, None);
    }
    TheoremVerdict::met(
        TheoremId::T3,
        Conclusion::Violation,
        Some(Witness::ColoredInstance(g.clone())),
    )
}

/// T4: if `a(D)` plus the sum of out-component numbers is at least
/// `n(n+1)/2` then D has a directed triangle.
pub fn check_t4(d: &OrientedGraph) -> TheoremVerdict {
    let n = d.vertex_count() as u64;
    let profile = d.degree_profile();
    let lhs = (d.arc_count() + profile.out_component_sum()) as u64;
    if n == 0 || 2 * lhs < n * (n + 1) {
        return TheoremVerdict::not_applicable(TheoremId::T4);
    }
    directed_or_violation(TheoremId::T4, d)
}

/// T5: if `in_degree(v) + out_component_number(v) >= n/2` at every vertex,
/// classifies D as having a directed triangle or being an orientation of a
/// balanced complete bipartite graph. Anything else is a `Violation`.
pub fn classify_t5(d: &OrientedGraph) -> TheoremVerdict {
    let n = d.vertex_count();
    let profile = d.degree_profile();
    let met = n > 0
        && (0..n).all(|v| {
            2 * (profile.in_degrees[v] + profile.out_component_numbers[v]) >= n
        });
    if !met {
        return TheoremVerdict::not_applicable(TheoremId::T5);
    }
    if let Some(t) = d.directed_triangles().smallest() {
        return TheoremVerdict::met(
            TheoremId::T5,
            Conclusion::HasDirectedTriangle,
            Some(Witness::Triangle(t)),
        );
    }
    if let Some((left, right)) = balanced_complete_bipartition(n, |u, v| d.adjacent(u, v)) {
        return TheoremVerdict::met(
            TheoremId::T5,
            Conclusion::OrientationOfBalancedBipartite,
            Some(Witness::Bipartition { left, right }),
        );
    }
    TheoremVerdict::met(
        TheoremId::T5,
        Conclusion::Violation,
        Some(Witness::OrientedInstance(d.clone())),
    )
}

// min_in >= (3 - sqrt 7) n, decided exactly: with t = 3n - min_in the
// condition reads t <= sqrt(7) n, i.e. t <= 0 or t^2 <= 7 n^2.
fn t6_condition(min_in: usize, n: usize) -> bool {
    let n = n as u128;
    let k = min_in as u128;
    if k >= 3 * n {
        return true;
    }
    let t = 3 * n - k;
    t * t <= 7 * n * n
}

/// T6: if the minimum in-degree is at least `(3 - sqrt 7) n` then D has a
/// directed triangle.
pub fn check_t6(d: &OrientedGraph) -> TheoremVerdict {
    let n = d.vertex_count();
    let min_in = d.degree_profile().min_in_degree();
    let met = match min_in {
        Some(k) => t6_condition(k, n),
        None => false,
    };
    if !met {
        return TheoremVerdict::not_applicable(TheoremId::T6);
    }
    directed_or_violation(TheoremId::T6, d)
}

/// CH: if the minimum in-degree is at least `n/3` then D should have a
/// directed triangle. A met condition with no triangle yields
/// [`Conclusion::ConjectureCounterexample`], never a `Violation`.
pub fn check_ch(d: &OrientedGraph) -> TheoremVerdict {
    let n = d.vertex_count();
    let met = match d.degree_profile().min_in_degree() {
        Some(k) => n > 0 && 3 * k >= n,
        None => false,
    };
    if !met {
        return TheoremVerdict::not_applicable(TheoremId::Ch);
    }
    match d.directed_triangles().smallest() {
        Some(t) => TheoremVerdict::met(
            TheoremId::Ch,
            Conclusion::HasDirectedTriangle,
            Some(Witness::Triangle(t)),
        ),
        None => TheoremVerdict::met(
            TheoremId::Ch,
            Conclusion::ConjectureCounterexample,
            Some(Witness::OrientedInstance(d.clone())),
        ),
    }
}

/// A borrowed instance of either kind, for checker dispatch.
#[derive(Debug, Clone, Copy)]
pub enum TheoremInput<'a> {
    Colored(&'a ColoredGraph),
    Oriented(&'a OrientedGraph),
}

impl TheoremInput<'_> {
    pub fn kind(&self) -> GraphKind {
        match self {
            TheoremInput::Colored(_) => GraphKind::Colored,
            TheoremInput::Oriented(_) => GraphKind::Oriented,
        }
    }
}

/// A checker was handed the wrong kind of instance.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("theorem {theorem} runs on {expected} graphs, got a {got} one")]
pub struct KindMismatch {
    pub theorem: TheoremId,
    pub expected: GraphKind,
    pub got: GraphKind,
}

/// Runs the checker named by `theorem` on `input`.
pub fn check(theorem: TheoremId, input: TheoremInput<'_>) -> Result<TheoremVerdict, KindMismatch> {
    match (theorem, input) {
        (TheoremId::T1, TheoremInput::Colored(g)) => Ok(check_t1(g)),
        (TheoremId::T2, TheoremInput::Colored(g)) => Ok(check_t2(g)),
        (TheoremId::Cor1, TheoremInput::Colored(g)) => Ok(check_cor1(g)),
        (TheoremId::T3, TheoremInput::Colored(g)) => Ok(classify_t3(g)),
        (TheoremId::T4, TheoremInput::Oriented(d)) => Ok(check_t4(d)),
        (TheoremId::T5, TheoremInput::Oriented(d)) => Ok(classify_t5(d)),
        (TheoremId::T6, TheoremInput::Oriented(d)) => Ok(check_t6(d)),
        (TheoremId::Ch, TheoremInput::Oriented(d)) => Ok(check_ch(d)),
        (theorem, input) => Err(KindMismatch {
            theorem,
            expected: theorem.kind(),
            got: input.kind(),
        }),
    }
}

/// If the graph described by `has_edge` on `0..n` is complete bipartite
/// with two sides of size `n/2`, returns the sides (each sorted, the one
/// containing vertex 0 first). The complement of a complete bipartite
/// graph is a disjoint union of two cliques, so this checks that the
/// complement has exactly two components, both cliques of size `n/2`.
fn balanced_complete_bipartition<F>(n: usize, has_edge: F) -> Option<(Vec<usize>, Vec<usize>)>
where
    F: Fn(usize, usize) -> bool,
{
    if n == 0 || !n.is_multiple_of(2) {
        return None;
    }
    let mut component = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        let mut stack = vec![start];
        component[start] = id;
        while let Some(x) = stack.pop() {
            for (y, slot) in component.iter_mut().enumerate() {
                if y != x && *slot == usize::MAX && !has_edge(x, y) {
                    *slot = id;
                    stack.push(y);
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    if components.len() != 2 {
        return None;
    }
    if components[0].len() != n / 2 || components[1].len() != n / 2 {
        return None;
    }
    // every complement component must be a complement clique: no original
    // edge inside a side
    for side in &components {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                if has_edge(u, v) {
                    return None;
                }
            }
        }
    }
    let right = components.pop().unwrap();
    let left = components.pop().unwrap();
    Some((left, right))
}
