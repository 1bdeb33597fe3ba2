//! Edge-colored simple graphs: color statistics and rainbow triangle
//! enumeration.

use std::collections::{BTreeMap, BTreeSet};

use crate::{Color, GraphError};

/// A simple undirected graph with a color identifier on every edge.
///
/// Vertices are the dense range `0..n`. There is at most one edge per
/// unordered pair and no self-loops. Values are immutable after
/// construction, so every operation is a pure read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    // sorted by (u, v) with u < v
    edges: Vec<(usize, usize, Color)>,
    // (neighbor, color) rows sorted by neighbor
    adj: Vec<Vec<(usize, Color)>>,
}

impl ColoredGraph {
    /// Builds a graph on `n` vertices from an edge list. Endpoints may come
    /// in either order; the pair is stored with the smaller id first.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut list: Vec<(usize, usize, Color)> = Vec::new();
        for (a, b, color) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push((u, v, color));
        }
        list.sort_unstable();
        if let Some(w) = list
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v, color) in &list {
            adj[u].push((v, color));
            adj[v].push((u, color));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(ColoredGraph { n, edges: list, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        ColoredGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v, color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.color_of(u, v).is_some()
    }

    /// The color of edge `{u, v}`, or `None` if the edge is absent.
    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    /// `(neighbor, color)` pairs at `v`, sorted by neighbor.
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.adj[v].iter().copied()
    }

    /// Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    /// d^c(v): the number of distinct colors on edges incident to `v`.
    pub fn color_degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        let colors: BTreeSet<Color> = self.adj[v].iter().map(|&(_, c)| c).collect();
        Ok(colors.len())
    }

    /// c(G): the number of distinct colors in the whole graph.
    pub fn color_number(&self) -> usize {
        let colors: BTreeSet<Color> = self.edges.iter().map(|&(_, _, c)| c).collect();
        colors.len()
    }

    /// d^s(v): the number of colors saturated by `v`, i.e. colors whose
    /// every edge is incident to `v`.
    pub fn saturated_degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        let multiplicity = self.color_multiplicity();
        let mut at_v: BTreeMap<Color, usize> = BTreeMap::new();
        for &(_, c) in &self.adj[v] {
            *at_v.entry(c).or_insert(0) += 1;
        }
        Ok(at_v.iter().filter(|&(c, &k)| multiplicity[c] == k).count())
    }

    fn color_multiplicity(&self) -> BTreeMap<Color, usize> {
        let mut multiplicity: BTreeMap<Color, usize> = BTreeMap::new();
        for &(_, _, c) in &self.edges {
            *multiplicity.entry(c).or_insert(0) += 1;
        }
        multiplicity
    }

    /// Color number, color degrees and saturated degrees, all in one pass.
    pub fn stats(&self) -> ColorStats {
        let multiplicity = self.color_multiplicity();
        let mut color_degrees = Vec::with_capacity(self.n);
        let mut saturated_degrees = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut at_v: BTreeMap<Color, usize> = BTreeMap::new();
            for &(_, c) in &self.adj[v] {
                *at_v.entry(c).or_insert(0) += 1;
            }
            color_degrees.push(at_v.len());
            saturated_degrees.push(at_v.iter().filter(|&(c, &k)| multiplicity[c] == k).count());
        }
        ColorStats {
            color_number: multiplicity.len(),
            color_degrees,
            saturated_degrees,
        }
    }

    /// All triangles whose three edge colors are pairwise distinct.
    pub fn rainbow_triangles(&self) -> TriangleSet {
        let mut triples = BTreeSet::new();
        for &(u, v, cuv) in &self.edges {
            // walk the sorted rows for common neighbors w > v, so each
            // triangle is found exactly once from its smallest edge
            let row_u = &self.adj[u];
            let row_v = &self.adj[v];
            let mut i = 0;
            let mut j = 0;
            while i < row_u.len() && j < row_v.len() {
                let (wu, cuw) = row_u[i];
                let (wv, cvw) = row_v[j];
                match wu.cmp(&wv) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if wu > v && cuv != cuw && cuv != cvw && cuw != cvw {
                            triples.insert([u, v, wu]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        TriangleSet { triples }
    }

    /// Relabels colors to `1, 2, 3, ...` by first appearance along the
    /// sorted edge list: the normal form used by exhaustive enumeration.
    pub fn canonicalize_colors(&self) -> ColoredGraph {
        let mut relabel: BTreeMap<Color, Color> = BTreeMap::new();
        let mut next: Color = 1;
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(u, v, c) in &self.edges {
            let c = *relabel.entry(c).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            edges.push((u, v, c));
        }
        ColoredGraph::new(self.n, edges).expect("relabeling keeps the graph valid")
    }
}

/// Color statistics of one graph, as produced by [`ColoredGraph::stats`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorStats {
    pub color_number: usize,
    pub color_degrees: Vec<usize>,
    pub saturated_degrees: Vec<usize>,
}

impl ColorStats {
    pub fn color_degree_sum(&self) -> usize {
        self.color_degrees.iter().sum()
    }

    pub fn saturated_degree_sum(&self) -> usize {
        self.saturated_degrees.iter().sum()
    }

    /// `None` on the graph with no vertices.
    pub fn min_color_degree(&self) -> Option<usize> {
        self.color_degrees.iter().copied().min()
    }
}

/// A set of unordered vertex triples, kept sorted. Produced by the rainbow
/// and directed triangle enumerators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriangleSet {
    triples: BTreeSet<[usize; 3]>,
}

impl TriangleSet {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Membership test; the triple may come in any order.
    pub fn contains(&self, triple: [usize; 3]) -> bool {
        let mut t = triple;
        t.sort_unstable();
        self.triples.contains(&t)
    }

    /// The lexicographically smallest triple, if any.
    pub fn smallest(&self) -> Option<[usize; 3]> {
        self.triples.iter().next().copied()
    }

    /// Sorted triples in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.triples.iter().copied()
    }
}

impl FromIterator<[usize; 3]> for TriangleSet {
    fn from_iter<I: IntoIterator<Item = [usize; 3]>>(iter: I) -> Self {
        let triples = iter
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        TriangleSet { triples }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rainbow_k3() -> ColoredGraph {
        ColoredGraph::new(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap()
    }

    #[test]
    fn construction_rejects_self_loop() {
        let err = ColoredGraph::new(3, [(1, 1, 1)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { v: 1 });
    }

    #[test]
    fn construction_rejects_out_of_range() {
        let err = ColoredGraph::new(3, [(0, 3, 1)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { v: 3, n: 3 });
    }

    #[test]
    fn construction_rejects_duplicate_pair_even_reversed() {
        let err = ColoredGraph::new(3, [(0, 1, 1), (1, 0, 2)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = ColoredGraph::new(4, [(3, 1, 7), (2, 0, 5)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 2, 5), (1, 3, 7)]);
        assert_eq!(g.color_of(1, 3), Some(7));
        assert_eq!(g.color_of(3, 1), Some(7));
        assert_eq!(g.color_of(0, 1), None);
    }

    #[test]
    fn color_degree_of_rainbow_triangle_vertex_is_two() {
        let g = rainbow_k3();
        for v in 0..3 {
            assert_eq!(g.color_degree(v).unwrap(), 2);
        }
    }

    #[test]
    fn color_degree_of_monochromatic_star_center_is_one() {
        let g = ColoredGraph::new(5, [(0, 1, 9), (0, 2, 9), (0, 3, 9), (0, 4, 9)]).unwrap();
        assert_eq!(g.color_degree(0).unwrap(), 1);
        assert_eq!(g.color_degree(1).unwrap(), 1);
    }

    #[test]
    fn color_degree_out_of_range_errors() {
        let g = rainbow_k3();
        assert_eq!(
            g.color_degree(3).unwrap_err(),
            GraphError::VertexOutOfRange { v: 3, n: 3 }
        );
        assert!(g.saturated_degree(7).is_err());
    }

    #[test]
    fn color_number_counts_distinct_colors() {
        assert_eq!(ColoredGraph::empty(4).color_number(), 0);
        let rainbow_k4 = ColoredGraph::new(
            4,
            [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 4), (1, 3, 5), (2, 3, 6)],
        )
        .unwrap();
        assert_eq!(rainbow_k4.color_number(), 6);
    }

    #[test]
    fn saturated_degree_examples() {
        // all colors distinct: every color at v is saturated by v
        let g = rainbow_k3();
        for v in 0..3 {
            assert_eq!(g.saturated_degree(v).unwrap(), 2);
        }
        // one color on two vertex-disjoint edges: nobody saturates it
        let g = ColoredGraph::new(4, [(0, 1, 1), (2, 3, 1)]).unwrap();
        for v in 0..4 {
            assert_eq!(g.saturated_degree(v).unwrap(), 0);
        }
        // one color on a path: only the middle vertex saturates it
        let g = ColoredGraph::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(g.saturated_degree(0).unwrap(), 0);
        assert_eq!(g.saturated_degree(1).unwrap(), 1);
        assert_eq!(g.saturated_degree(2).unwrap(), 0);
    }

    #[test]
    fn rainbow_triangle_found_in_three_colored_k3() {
        let found = rainbow_k3().rainbow_triangles();
        assert_eq!(found.len(), 1);
        assert!(found.contains([2, 0, 1]));
        assert_eq!(found.smallest(), Some([0, 1, 2]));
    }

    #[test]
    fn two_colored_k3_has_no_rainbow_triangle() {
        let g = ColoredGraph::new(3, [(0, 1, 1), (0, 2, 1), (1, 2, 2)]).unwrap();
        assert!(g.rainbow_triangles().is_empty());
    }

    #[test]
    fn k4_with_two_colors_three_edges_each_has_no_rainbow_triangle() {
        let g = ColoredGraph::new(
            4,
            [(0, 1, 1), (0, 2, 1), (2, 3, 1), (0, 3, 2), (1, 2, 2), (1, 3, 2)],
        )
        .unwrap();
        assert!(g.rainbow_triangles().is_empty());
    }

    #[test]
    fn rainbow_k4_has_four_rainbow_triangles() {
        let g = ColoredGraph::new(
            4,
            [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 4), (1, 3, 5), (2, 3, 6)],
        )
        .unwrap();
        let found = g.rainbow_triangles();
        assert_eq!(found.len(), 4);
        for t in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
            assert!(found.contains(t));
        }
    }

    #[test]
    fn stats_on_empty_graph_are_zero() {
        let stats = ColoredGraph::empty(3).stats();
        assert_eq!(stats.color_number, 0);
        assert_eq!(stats.color_degrees, vec![0, 0, 0]);
        assert_eq!(stats.saturated_degrees, vec![0, 0, 0]);
        assert_eq!(stats.min_color_degree(), Some(0));
        assert_eq!(ColoredGraph::empty(0).stats().min_color_degree(), None);
    }

    #[test]
    fn stats_agree_with_per_vertex_queries() {
        let g = ColoredGraph::new(
            5,
            [(0, 1, 1), (0, 2, 1), (1, 2, 2), (2, 3, 3), (3, 4, 3)],
        )
        .unwrap();
        let stats = g.stats();
        assert_eq!(stats.color_number, g.color_number());
        for v in 0..5 {
            assert_eq!(stats.color_degrees[v], g.color_degree(v).unwrap());
            assert_eq!(stats.saturated_degrees[v], g.saturated_degree(v).unwrap());
        }
        assert_eq!(stats.color_degree_sum(), 1 + 2 + 3 + 1 + 1);
    }

    #[test]
    fn canonicalize_relabels_by_first_appearance() {
        let g = ColoredGraph::new(3, [(0, 1, 40), (0, 2, 9), (1, 2, 40)]).unwrap();
        let canonical = g.canonicalize_colors();
        let edges: Vec<_> = canonical.edges().collect();
        assert_eq!(edges, vec![(0, 1, 1), (0, 2, 2), (1, 2, 1)]);
        // idempotent
        assert_eq!(canonical.canonicalize_colors(), canonical);
    }

    #[test]
    fn triangle_set_normalizes_triples() {
        let set: TriangleSet = [[2, 1, 0], [0, 1, 2], [1, 3, 2]].into_iter().collect();
        assert_eq!(set.len(), 2);
        assert_eq!(set.smallest(), Some([0, 1, 2]));
        let listed: Vec<_> = set.iter().collect();
        assert_eq!(listed, vec![[0, 1, 2], [1, 2, 3]]);
    }
}
