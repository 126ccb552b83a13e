//! Simple undirected graphs on `0..n` with bitset adjacency rows.

mod clique;
pub mod io;
mod paths;

pub use clique::{contains_clique, find_clique_within};
pub use paths::{contains_cycle, exists_path_of_length, find_path_of_length, WalkLayers};
pub(crate) use paths::cycle_with_layers;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group_sets::SymmetricSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Rejects loops and out-of-range endpoints; repeated edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    /// Copy of this graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.order();
        if u >= n || v >= n || u == v {
            return Err(Error::invalid(format!("cannot add edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, lexicographically.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.rows.first().map_or(0, BitSet::count);
        self.rows.iter().all(|r| r.count() == d).then_some(d)
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// True when `vertices`, in order, close up into a cycle of distinct vertices.
    pub fn is_cycle(&self, vertices: &[usize]) -> bool {
        let m = vertices.len();
        if m < 3 {
            return false;
        }
        let mut seen = BitSet::new(self.order());
        for &v in vertices {
            if v >= self.order() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        (0..m).all(|i| self.has_edge(vertices[i], vertices[(i + 1) % m]))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order(), self.edge_count())
    }
}

/// `Cay(Z_n, S)`: `u ~ v` iff `v - u ∈ S`.
pub fn cayley_graph(set: &SymmetricSet) -> Graph {
    let n = set.modulus();
    let row0 = set.residues().bits().clone();
    Graph {
        rows: (0..n).map(|u| row0.rotated(u)).collect(),
    }
}

/// `G + H`: vertices of `g` first, then those of `h` shifted by `|G|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (a, b) = (g.order(), h.order());
    let mut out = Graph::empty(a + b);
    for (u, v) in g.edges() {
        out.link(u, v);
    }
    for (u, v) in h.edges() {
        out.link(a + u, a + v);
    }
    for u in 0..a {
        for v in 0..b {
            out.link(u, a + v);
        }
    }
    out
}

/// Replaces each vertex `v` by the independent class `v*t .. v*t + t`.
pub fn blow_up(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::invalid("blow-up factor must be at least 1"));
    }
    let mut out = Graph::empty(g.order() * t);
    for (u, v) in g.edges() {
        for i in 0..t {
            for j in 0..t {
                out.link(u * t + i, v * t + j);
            }
        }
    }
    Ok(out)
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::empty(n)
}

/// The Kneser graph `K(5,2)`: 2-subsets of `{0..4}` in lexicographic
/// order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut g = Graph::empty(pairs.len());
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.link(i, j);
            }
        }
    }
    g
}
