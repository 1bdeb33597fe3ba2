//! Generators for the graph families that sit exactly on the thresholds.
//!
//! Each family shows one bound cannot be lowered:
//!
//! * [`sharp_complete_coloring`]: a complete graph colored so that both
//!   `e(G) + c(G)` and the color degree sum equal `n(n+1)/2 - 1`, one
//!   short of the T1 and T2 thresholds, with no rainbow triangle.
//! * [`rainbow_balanced_bipartite`]: every edge its own color, every
//!   color degree exactly `n/2`, no triangle at all. Meets the T3
//!   threshold and misses COR1 by one.
//! * [`oriented_balanced_bipartite`]: orientations of the same underlying
//!   graph, the exceptional class of T5.
//! * [`k4_exception`], [`k4_minus_edge_exception`]: the two four-vertex
//!   colorings that meet the T3 threshold without a rainbow triangle and
//!   without being bipartite.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colored_graph::ColoredGraph;
use crate::oriented_graph::OrientedGraph;
use crate::{Color, GraphKind};

/// The complete graph on `n` vertices where edge `{u, v}` with `u < v`
/// receives color `u + 1`.
///
/// Vertex `v < n - 1` has color degree `v + 1` and the last vertex has
/// color degree `n - 1`, so the color degree sum is `n(n+1)/2 - 1`;
/// `e(G) + c(G)` takes the same value. Every triangle `u < v < w` repeats
/// color `u + 1` on two edges, so none is rainbow.
pub fn sharp_complete_coloring(n: usize) -> ColoredGraph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v, (u + 1) as Color));
        }
    }
    ColoredGraph::new(n, edges).expect("complete graph edge list is valid")
}

/// The complete bipartite graph with sides `0..ceil(n/2)` and the rest,
/// every edge a fresh color. Balanced exactly when `n` is even.
pub fn rainbow_balanced_bipartite(n: usize) -> ColoredGraph {
    let split = n.div_ceil(2);
    let mut edges = Vec::new();
    let mut color: Color = 1;
    for u in 0..split {
        for v in split..n {
            edges.push((u, v, color));
            color += 1;
        }
    }
    ColoredGraph::new(n, edges).expect("bipartite edge list is valid")
}

/// How to direct the edges of a balanced complete bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteOrientation {
    /// Every arc runs from the low side to the high side.
    AllOneWay,
    /// Each edge gets an independent fair coin flip, reproducible from
    /// the seed.
    Seeded(u64),
}

/// An orientation of the complete bipartite graph with sides `0..n/2` and
/// `n/2..n`. Fails on odd `n`: the family is only defined balanced.
pub fn oriented_balanced_bipartite(
    n: usize,
    orientation: BipartiteOrientation,
) -> Result<OrientedGraph, GeneratorError> {
    if !n.is_multiple_of(2) {
        return Err(GeneratorError::OddOrder { n });
    }
    let split = n / 2;
    let mut rng = match orientation {
        BipartiteOrientation::AllOneWay => None,
        BipartiteOrientation::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut arcs = Vec::with_capacity(split * split);
    for u in 0..split {
        for v in split..n {
            let forward = match rng.as_mut() {
                None => true,
                Some(rng) => rng.random_bool(0.5),
            };
            arcs.push(if forward { (u, v) } else { (v, u) });
        }
    }
    Ok(OrientedGraph::new(n, arcs).expect("one arc per bipartite edge is valid"))
}

/// The complete graph on four vertices, two colors, every color degree 2,
/// no rainbow triangle.
pub fn k4_exception() -> ColoredGraph {
    ColoredGraph::new(
        4,
        [
            (0, 1, 1),
            (0, 2, 1),
            (2, 3, 1),
            (0, 3, 2),
            (1, 2, 2),
            (1, 3, 2),
        ],
    )
    .expect("fixture edge list is valid")
}

/// The complete graph on four vertices minus the edge `{2, 3}`, two
/// colors, every color degree 2, no rainbow triangle.
pub fn k4_minus_edge_exception() -> ColoredGraph {
    ColoredGraph::new(
        4,
        [(0, 1, 1), (0, 2, 1), (1, 3, 1), (1, 2, 2), (0, 3, 2)],
    )
    .expect("fixture edge list is valid")
}

/// Name of one generatable family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    SharpComplete,
    RainbowBipartite,
    OrientedBipartite,
    K4Exception,
    K4MinusEdgeException,
}

impl Family {
    pub fn kind(self) -> GraphKind {
        match self {
            Family::OrientedBipartite => GraphKind::Oriented,
            _ => GraphKind::Colored,
        }
    }

    pub const ALL: [Family; 5] = [
        Family::SharpComplete,
        Family::RainbowBipartite,
        Family::OrientedBipartite,
        Family::K4Exception,
        Family::K4MinusEdgeException,
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::SharpComplete => "sharp-complete",
            Family::RainbowBipartite => "rainbow-bipartite",
            Family::OrientedBipartite => "oriented-bipartite",
            Family::K4Exception => "k4-exception",
            Family::K4MinusEdgeException => "k4-minus-edge-exception",
        })
    }
}

/// Failed lookup of a family by name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family `{0}`; expected one of sharp-complete, rainbow-bipartite, oriented-bipartite, k4-exception, k4-minus-edge-exception")]
pub struct UnknownFamily(pub String);

impl std::str::FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, UnknownFamily> {
        match s.to_ascii_lowercase().as_str() {
            "sharp-complete" => Ok(Family::SharpComplete),
            "rainbow-bipartite" => Ok(Family::RainbowBipartite),
            "oriented-bipartite" => Ok(Family::OrientedBipartite),
            "k4-exception" => Ok(Family::K4Exception),
            "k4-minus-edge-exception" => Ok(Family::K4MinusEdgeException),
            _ => Err(UnknownFamily(s.to_string())),
        }
    }
}

/// A requested instance of one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    /// Seeds the coin flips of [`Family::OrientedBipartite`]; `None`
    /// directs every arc low side to high side. Ignored elsewhere.
    pub orientation_seed: Option<u64>,
}

/// A generated instance of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratedGraph {
    Colored(ColoredGraph),
    Oriented(OrientedGraph),
}

impl GeneratedGraph {
    pub fn kind(&self) -> GraphKind {
        match self {
            GeneratedGraph::Colored(_) => GraphKind::Colored,
            GeneratedGraph::Oriented(_) => GraphKind::Oriented,
        }
    }
}

/// An impossible generator request.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("family oriented-bipartite needs an even vertex count, got {n}")]
    OddOrder { n: usize },
    #[error("family {family} is only defined on {expected} vertices, got {n}")]
    FixedOrder {
        family: Family,
        n: usize,
        expected: usize,
    },
}

/// Builds the instance described by `spec`.
pub fn generate(spec: GeneratorSpec) -> Result<GeneratedGraph, GeneratorError> {
    match spec.family {
        Family::SharpComplete => Ok(GeneratedGraph::Colored(sharp_complete_coloring(spec.n))),
        Family::RainbowBipartite => {
            Ok(GeneratedGraph::Colored(rainbow_balanced_bipartite(spec.n)))
        }
        Family::OrientedBipartite => {
            let orientation = match spec.orientation_seed {
                None => BipartiteOrientation::AllOneWay,
                Some(seed) => BipartiteOrientation::Seeded(seed),
            };
            Ok(GeneratedGraph::Oriented(oriented_balanced_bipartite(
                spec.n,
                orientation,
            )?))
        }
        Family::K4Exception => {
            if spec.n != 4 {
                return Err(GeneratorError::FixedOrder {
                    family: spec.family,
                    n: spec.n,
                    expected: 4,
                });
            }
            Ok(GeneratedGraph::Colored(k4_exception()))
        }
        Family::K4MinusEdgeException => {
            if spec.n != 4 {
                return Err(GeneratorError::FixedOrder {
                    family: spec.family,
                    n: spec.n,
                    expected: 4,
                });
            }
            Ok(GeneratedGraph::Colored(k4_minus_edge_exception()))
        }
    }
}
