//! Brute-force reference implementations, kept deliberately naive so the
//! library's optimized counterparts are checked against independent logic.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rainbowtri::colored_graph::{ColoredGraph, TriangleSet};
use rainbowtri::oriented_graph::OrientedGraph;
use rainbowtri::Color;

/// Every triple scanned directly against the color lookup.
pub fn oracle_rainbow_triangles(g: &ColoredGraph) -> BTreeSet<[usize; 3]> {
    let n = g.vertex_count();
    let mut found = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let (Some(a), Some(b), Some(c)) =
                    (g.color_of(u, v), g.color_of(u, w), g.color_of(v, w))
                else {
                    continue;
                };
                if a != b && a != c && b != c {
                    found.insert([u, v, w]);
                }
            }
        }
    }
    found
}

/// Every triple scanned for a 3-cycle in either rotation.
pub fn oracle_directed_triangles(d: &OrientedGraph) -> BTreeSet<[usize; 3]> {
    let n = d.vertex_count();
    let mut found = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let forward = d.has_arc(u, v) && d.has_arc(v, w) && d.has_arc(w, u);
                let backward = d.has_arc(u, w) && d.has_arc(w, v) && d.has_arc(v, u);
                if forward || backward {
                    found.insert([u, v, w]);
                }
            }
        }
    }
    found
}

pub fn oracle_color_degree(g: &ColoredGraph, v: usize) -> usize {
    g.neighbors(v).map(|(_, c)| c).collect::<BTreeSet<_>>().len()
}

/// Colors whose every edge touches `v`, counted from a full edge scan.
pub fn oracle_saturated_degree(g: &ColoredGraph, v: usize) -> usize {
    let mut by_color: BTreeMap<Color, Vec<(usize, usize)>> = BTreeMap::new();
    for (u, w, c) in g.edges() {
        by_color.entry(c).or_default().push((u, w));
    }
    by_color
        .values()
        .filter(|edges| edges.iter().all(|&(u, w)| u == v || w == v))
        .count()
}

/// Weak components of the out-neighborhood, found by flood fill over
/// adjacency in either direction.
pub fn oracle_out_component_number(d: &OrientedGraph, v: usize) -> usize {
    let members: Vec<usize> = d.out_neighbors(v).to_vec();
    let mut seen = vec![false; members.len()];
    let mut components = 0;
    for start in 0..members.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for j in 0..members.len() {
                if !seen[j] && d.adjacent(members[i], members[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    components
}

/// Checks a claimed bipartition: the sides partition the vertices, have
/// equal size, carry no internal edge, and span every cross pair.
pub fn oracle_is_balanced_complete_bipartition(
    n: usize,
    adjacent: impl Fn(usize, usize) -> bool,
    left: &[usize],
    right: &[usize],
) -> bool {
    let mut all: Vec<usize> = left.iter().chain(right).copied().collect();
    all.sort_unstable();
    if all != (0..n).collect::<Vec<_>>() || left.len() != right.len() {
        return false;
    }
    let within_ok = |side: &[usize]| {
        side.iter()
            .enumerate()
            .all(|(i, &u)| side[i + 1..].iter().all(|&w| !adjacent(u, w)))
    };
    within_ok(left)
        && within_ok(right)
        && left.iter().all(|&u| right.iter().all(|&w| adjacent(u, w)))
}

/// Bell triangle; `bell(m)` counts the canonical colorings of m edges.
pub fn bell(m: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

pub fn set_of(triangles: &TriangleSet) -> BTreeSet<[usize; 3]> {
    triangles.iter().collect()
}

pub fn oracle_is_rainbow_triangle(g: &ColoredGraph, [u, v, w]: [usize; 3]) -> bool {
    let (Some(a), Some(b), Some(c)) = (g.color_of(u, v), g.color_of(u, w), g.color_of(v, w)) else {
        return false;
    };
    a != b && a != c && b != c
}

pub fn oracle_is_directed_triangle(d: &OrientedGraph, [u, v, w]: [usize; 3]) -> bool {
    (d.has_arc(u, v) && d.has_arc(v, w) && d.has_arc(w, u))
        || (d.has_arc(u, w) && d.has_arc(w, v) && d.has_arc(v, u))
}
