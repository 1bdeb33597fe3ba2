//! Oriented graphs: digraphs with no loops and no pair of opposite arcs,
//! with directed triangle enumeration and out-component numbers.

use std::collections::{BTreeMap, BTreeSet};

use crate::colored_graph::TriangleSet;
use crate::GraphError;

/// An oriented graph on vertices `0..n`: at most one arc per unordered
/// pair, so no loops and no digons. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    // both adjacency rows sorted ascending
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    arc_count: usize,
}

impl OrientedGraph {
    /// Builds an oriented graph from a list of `(tail, head)` arcs.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateArc { u: w[0].0, v: w[0].1 });
        }
        let present: BTreeSet<(usize, usize)> = list.iter().copied().collect();
        for &(u, v) in &list {
            if u < v && present.contains(&(v, u)) {
                return Err(GraphError::Digon { u, v });
            }
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            out_adj[u].push(v); // sorted: list is sorted by (u, v)
            in_adj[v].push(u);
        }
        for row in &mut in_adj {
            row.sort_unstable();
        }
        Ok(OrientedGraph {
            n,
            out_adj,
            in_adj,
            arc_count: list.len(),
        })
    }

    /// The oriented graph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        OrientedGraph {
            n,
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Arcs as `(tail, head)` in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// True when `{u, v}` is an edge of the underlying graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Panics if `v` is out of range.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// Panics if `v` is out of range.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Panics if `v` is out of range.
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    /// Panics if `v` is out of range.
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// The weak components of the subdigraph induced by the out-neighborhood
    /// of `v`; each component is sorted, components ordered by smallest
    /// member.
    pub fn out_components(&self, v: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.weak_partition(&self.out_adj[v]))
    }

    /// The out-component number of `v`: how many weak components the
    /// subdigraph induced by N+(v) has. Zero exactly when N+(v) is empty.
    pub fn out_component_number(&self, v: usize) -> Result<usize, GraphError> {
        Ok(self.out_components(v)?.len())
    }

    fn weak_partition(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let k = verts.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if self.adjacent(verts[i], verts[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(v);
        }
        // verts is ascending, so each group is already sorted
        let mut components: Vec<Vec<usize>> = groups.into_values().collect();
        components.sort_by_key(|c| c[0]);
        components
    }

    /// All vertex triples that induce a directed 3-cycle.
    pub fn directed_triangles(&self) -> TriangleSet {
        let mut triples = Vec::new();
        for u in 0..self.n {
            for &v in &self.out_adj[u] {
                for &w in &self.out_adj[v] {
                    if self.has_arc(w, u) {
                        triples.push([u, v, w]);
                    }
                }
            }
        }
        triples.into_iter().collect()
    }

    /// In-degrees, out-degrees and out-component numbers of every vertex.
    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            in_degrees: self.in_adj.iter().map(Vec::len).collect(),
            out_degrees: self.out_adj.iter().map(Vec::len).collect(),
            out_component_numbers: (0..self.n)
                .map(|v| self.weak_partition(&self.out_adj[v]).len())
                .collect(),
        }
    }

    /// The subdigraph induced by `vertices` (duplicates ignored), densely
    /// reindexed; entry `i` of `original_ids` is the source id of the new
    /// vertex `i`.
    pub fn induced_subdigraph(&self, vertices: &[usize]) -> Result<InducedSubdigraph, GraphError> {
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        let original_ids: Vec<usize> = keep.iter().copied().collect();
        let index: BTreeMap<usize, usize> = original_ids
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut arcs = Vec::new();
        for &u in &original_ids {
            for &v in &self.out_adj[u] {
                if let Some(&j) = index.get(&v) {
                    arcs.push((index[&u], j));
                }
            }
        }
        let digraph =
            OrientedGraph::new(original_ids.len(), arcs).expect("induced arcs stay valid");
        Ok(InducedSubdigraph {
            digraph,
            original_ids,
        })
    }
}

/// Per-vertex degree data of one oriented graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub in_degrees: Vec<usize>,
    pub out_degrees: Vec<usize>,
    pub out_component_numbers: Vec<usize>,
}

impl DegreeProfile {
    pub fn out_component_sum(&self) -> usize {
        self.out_component_numbers.iter().sum()
    }

    /// `None` on the graph with no vertices.
    pub fn min_in_degree(&self) -> Option<usize> {
        self.in_degrees.iter().copied().min()
    }
}

/// Result of [`OrientedGraph::induced_subdigraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubdigraph {
    pub digraph: OrientedGraph,
    pub original_ids: Vec<usize>,
}
