//! Rainbow triangles in edge-colored graphs, directed triangles in oriented
//! graphs, and the constructive bridges between the two settings.
//!
//! - [`ColoredGraph`] and [`OrientedGraph`]: immutable graph values with the
//!   statistics the subject runs on (color degrees, color number, saturated
//!   degrees, in/out degrees, out-component numbers) and triangle
//!   enumeration for both kinds.
//! - [`reductions`]: the associated colored graph of an oriented graph, and
//!   the edge deletion + orientation pipeline that turns a colored graph
//!   into an oriented one while preserving every color degree.
//! - [`theorems`]: checkers for eight sufficient conditions guaranteeing a
//!   rainbow or directed triangle, including the classifiers for the
//!   extremal cases.
//! - [`extremal`]: generators for the constructions showing the conditions
//!   are sharp.
//! - [`harness`]: exhaustive and randomized instance streams with verdict
//!   tallies and counterexample reports.
//! - [`format`] and [`cli`]: a plain-text graph file format and the
//!   command-line front end built on it.
//!
//! ```
//! use rainbowtri::{ColoredGraph, theorems};
//!
//! // a triangle with three distinct edge colors
//! let g = ColoredGraph::new(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])?;
//! let verdict = theorems::check_t2(&g);
//! assert!(verdict.condition_met);
//! assert_eq!(verdict.conclusion, theorems::Conclusion::HasRainbowTriangle);
//! # Ok::<(), rainbowtri::GraphError>(())
//! ```

pub mod cli;
pub mod colored_graph;
pub mod extremal;
pub mod format;
pub mod harness;
pub mod oriented_graph;
pub mod reductions;
pub mod theorems;

#[cfg(doctest)]
pub mod book;

pub use colored_graph::{ColorStats, ColoredGraph, TriangleSet};
pub use oriented_graph::{DegreeProfile, OrientedGraph};
pub use theorems::{Conclusion, TheoremId, TheoremVerdict, Witness};

/// Edge color identifier. Colors are opaque nonnegative integers; they do
/// not need to be contiguous or start anywhere particular.
pub type Color = u32;

/// Which of the two graph kinds a value or a checker works on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphKind {
    Colored,
    Oriented,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GraphKind::Colored => "colored",
            GraphKind::Oriented => "oriented",
        })
    }
}

/// Errors from graph construction and vertex-indexed queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("duplicate arc ({u}, {v})")]
    DuplicateArc { u: usize, v: usize },
    #[error("arcs in both directions between {u} and {v}")]
    Digon { u: usize, v: usize },
}
