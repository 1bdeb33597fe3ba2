//! The two constructive bridges between oriented and edge-colored graphs.
//!
//! One direction builds the associated colored graph of an oriented graph:
//! for every vertex and every weak component of its out-neighborhood, all
//! arcs into that component receive one fresh color. Directed triangles of
//! the source correspond exactly to rainbow triangles of the result.
//!
//! The other direction deletes edges whose color repeats at both endpoints
//! until none remains (color degrees never change), then orients every
//! surviving edge toward an endpoint at which its color is unique.

use std::collections::BTreeMap;

use crate::colored_graph::{ColoredGraph, TriangleSet};
use crate::oriented_graph::OrientedGraph;
use crate::Color;

/// Where a fresh color of an associated colored graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorOrigin {
    /// The vertex whose out-neighborhood produced the color.
    pub tail: usize,
    /// Index of the weak component within that out-neighborhood, counting
    /// components by smallest member.
    pub component: usize,
}

/// An associated colored graph together with the provenance of each color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedColoring {
    pub graph: ColoredGraph,
    pub color_origin: BTreeMap<Color, ColorOrigin>,
}

/// Builds the associated colored graph of `d`: underlying edges are the
/// underlying edges of `d`, and for each vertex `v` and each weak component
/// `H` of the subdigraph induced by N+(v), every edge from `v` into `H`
/// gets one fresh color. Colors are numbered `1, 2, 3, ...` by tail vertex
/// ascending, then by component (smallest member first).
pub fn associated_colored_graph(d: &OrientedGraph) -> AssociatedColoring {
    let mut edges = Vec::with_capacity(d.arc_count());
    let mut color_origin = BTreeMap::new();
    let mut next_color: Color = 1;
    for v in 0..d.vertex_count() {
        let components = d.out_components(v).expect("v is in range");
        for (idx, component) in components.iter().enumerate() {
            let color = next_color;
            next_color += 1;
            color_origin.insert(
                color,
                ColorOrigin {
                    tail: v,
                    component: idx,
                },
            );
            for &head in component {
                let (a, b) = if v < head { (v, head) } else { (head, v) };
                edges.push((a, b, color));
            }
        }
    }
    let graph = ColoredGraph::new(d.vertex_count(), edges)
        .expect("one edge per arc of an oriented graph");
    AssociatedColoring { graph, color_origin }
}

/// The directed triangles of `d` and the rainbow triangles of its
/// associated colored graph. The two sets are always equal.
pub fn triangle_correspondence(d: &OrientedGraph) -> (TriangleSet, TriangleSet) {
    (
        d.directed_triangles(),
        associated_colored_graph(d).graph.rainbow_triangles(),
    )
}

fn per_vertex_color_counts(g: &ColoredGraph) -> Vec<BTreeMap<Color, usize>> {
    let mut counts = vec![BTreeMap::new(); g.vertex_count()];
    for (u, v, c) in g.edges() {
        *counts[u].entry(c).or_insert(0) += 1;
        *counts[v].entry(c).or_insert(0) += 1;
    }
    counts
}

/// Repeatedly deletes an edge whose color appears on another edge at both
/// of its endpoints, scanning edges in lexicographic order and restarting
/// the scan after each deletion. Every color degree of the result equals
/// the corresponding color degree of the input, and every surviving edge
/// has its color unique at one endpoint or the other.
pub fn color_degree_preserving_reduction(g: &ColoredGraph) -> ColoredGraph {
    let mut edges: Vec<(usize, usize, Color)> = g.edges().collect();
    let mut counts = per_vertex_color_counts(g);
    loop {
        let deletable = edges
            .iter()
            .position(|&(u, v, c)| counts[u][&c] >= 2 && counts[v][&c] >= 2);
        match deletable {
            Some(idx) => {
                let (u, v, c) = edges.remove(idx);
                *counts[u].get_mut(&c).unwrap() -= 1;
                *counts[v].get_mut(&c).unwrap() -= 1;
            }
            None => break,
        }
    }
    ColoredGraph::new(g.vertex_count(), edges).expect("spanning subgraph of a valid graph")
}

/// An orientation of a reduced colored graph, kept with its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationResult {
    pub digraph: OrientedGraph,
    pub source: ColoredGraph,
}

/// Tie-break direction for an edge `{u, v}` with `u < v` whose color is
/// unique at both endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcDirection {
    /// Orient from the smaller id to the larger: arc `(u, v)`.
    Forward,
    /// Orient from the larger id to the smaller: arc `(v, u)`.
    Backward,
}

/// An input edge whose color repeats at both endpoints, so no head with a
/// locally unique color exists. Running
/// [`color_degree_preserving_reduction`] first removes every such edge.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("edge {{{u}, {v}}} has its color repeated at both endpoints")]
pub struct OrientError {
    pub u: usize,
    pub v: usize,
}

/// Orients every edge of `g` with the default tie-break (smaller id to
/// larger id when either direction works). See [`orient_with`].
pub fn orient(g: &ColoredGraph) -> Result<OrientationResult, OrientError> {
    orient_with(g, |_, _| ArcDirection::Forward)
}

/// Orients every edge of `g` toward an endpoint at which its color is
/// unique, so each arc's color differs from the colors of all other edges
/// at its head. When the color is unique at both endpoints, `tie_break`
/// decides. When `g` has no rainbow triangle, the resulting digraph
/// additionally satisfies, at every vertex `v`,
/// `in_degree(v) + out_component_number(v) >= color_degree(v)`; a rainbow
/// triangle can break that bound (two out-neighbors joined by an edge may
/// then carry distinct colors at the tail, merging two colors into one
/// out-component).
pub fn orient_with<F>(g: &ColoredGraph, mut tie_break: F) -> Result<OrientationResult, OrientError>
where
    F: FnMut(usize, usize) -> ArcDirection,
{
    let counts = per_vertex_color_counts(g);
    let mut arcs = Vec::with_capacity(g.edge_count());
    for (u, v, c) in g.edges() {
        let unique_at_u = counts[u][&c] == 1;
        let unique_at_v = counts[v][&c] == 1;
        let arc = match (unique_at_u, unique_at_v) {
            (true, false) => (v, u),
            (false, true) => (u, v),
            (true, true) => match tie_break(u, v) {
                ArcDirection::Forward => (u, v),
                ArcDirection::Backward => (v, u),
            },
            (false, false) => return Err(OrientError { u, v }),
        };
        arcs.push(arc);
    }
    let digraph =
        OrientedGraph::new(g.vertex_count(), arcs).expect("one arc per edge of a simple graph");
    Ok(OrientationResult {
        digraph,
        source: g.clone(),
    })
}
