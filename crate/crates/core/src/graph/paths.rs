//! Fixed-length simple path and cycle search.
//!
//! Every step of the depth-first search is pruned by exact walk
//! reachability: a vertex with `r` steps left must reach the target by some
//! walk of exactly `r` edges. Walks are a superset of paths, so the pruning
//! never discards a real path, and graphs with no closed walk of the right
//! length are dismissed at the root.

use super::Graph;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// `layers[j]`: vertices joined to `target` by a walk of exactly `j` edges.
pub struct WalkLayers {
    target: usize,
    layers: Vec<BitSet>,
}

impl WalkLayers {
    pub fn new(g: &Graph, target: usize, max_len: usize) -> Self {
        let n = g.order();
        let mut layers = Vec::with_capacity(max_len + 1);
        layers.push(BitSet::from_indices(n, [target]));
        for j in 1..=max_len {
            let mut next = BitSet::new(n);
            for v in layers[j - 1].iter() {
                next.union_with(g.neighbors(v));
            }
            layers.push(next);
        }
        WalkLayers { target, layers }
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn max_len(&self) -> usize {
        self.layers.len() - 1
    }

    #[inline]
    pub fn reaches(&self, v: usize, len: usize) -> bool {
        self.layers[len].contains(v)
    }

    /// A simple path with exactly `len` edges from `source` to the target.
    pub fn find_path(&self, g: &Graph, source: usize, len: usize) -> Option<Vec<usize>> {
        assert!(len <= self.max_len(), "walk layers too short for a path of length {len}");
        if source == self.target || !self.reaches(source, len) {
            return None;
        }
        let mut visited = BitSet::from_indices(g.order(), [source]);
        let mut path = vec![source];
        self.extend(g, source, len, &mut visited, &mut path).then_some(path)
    }

    fn extend(&self, g: &Graph, cur: usize, remaining: usize, visited: &mut BitSet, path: &mut Vec<usize>) -> bool {
        if remaining == 1 {
            if g.has_edge(cur, self.target) {
                path.push(self.target);
                return true;
            }
            return false;
        }
        let next_layer = &self.layers[remaining - 1];
        for w in g.neighbors(cur).iter() {
            if w == self.target || visited.contains(w) || !next_layer.contains(w) {
                continue;
            }
            visited.insert(w);
            path.push(w);
            if self.extend(g, w, remaining - 1, visited, path) {
                return true;
            }
            path.pop();
            visited.remove(w);
        }
        false
    }
}

pub fn find_path_of_length(g: &Graph, u: usize, v: usize, len: usize) -> Result<Option<Vec<usize>>> {
    if u == v {
        return Err(Error::invalid("path endpoints must differ"));
    }
    if len == 0 {
        return Err(Error::invalid("path length must be at least 1"));
    }
    if u >= g.order() || v >= g.order() {
        return Err(Error::invalid(format!("vertex out of range for {} vertices", g.order())));
    }
    Ok(WalkLayers::new(g, v, len).find_path(g, u, len))
}

/// Whether a path through distinct vertices with exactly `len` edges joins `u` and `v`.
pub fn exists_path_of_length(g: &Graph, u: usize, v: usize, len: usize) -> Result<bool> {
    Ok(find_path_of_length(g, u, v, len)?.is_some())
}

/// A cycle on exactly `m` vertices, found through the lexicographically
/// first edge that lies on one.
pub fn contains_cycle(g: &Graph, m: usize) -> Result<Option<Vec<usize>>> {
    if m < 3 {
        return Err(Error::invalid(format!("cycle length must be at least 3, got {m}")));
    }
    let layers: Vec<WalkLayers> = (0..g.order()).map(|v| WalkLayers::new(g, v, m - 1)).collect();
    Ok(cycle_with_layers(g, m, &layers))
}

/// Per-edge search reusing precomputed layers (one per vertex, length `>= m - 1`).
pub(crate) fn cycle_with_layers(g: &Graph, m: usize, layers: &[WalkLayers]) -> Option<Vec<usize>> {
    g.edges().find_map(|(u, v)| layers[v].find_path(g, u, m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cayley_graph, petersen};
    use crate::group_sets::SymmetricSet;

    #[test]
    fn five_cycle_paths() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(exists_path_of_length(&c5, 0, 2, 3).unwrap());
        assert!(exists_path_of_length(&c5, 0, 2, 2).unwrap());
        assert!(!exists_path_of_length(&c5, 0, 2, 4).unwrap());
        assert!(exists_path_of_length(&c5, 0, 0, 2).is_err());
        assert!(exists_path_of_length(&c5, 0, 1, 0).is_err());
    }

    #[test]
    fn circulant_path_cross_check() {
        let g = cayley_graph(&SymmetricSet::new(17, [1, 3, 14, 16]).unwrap());
        let p = find_path_of_length(&g, 0, 5, 4).unwrap().unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!((p[0], p[4]), (0, 5));
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
    }

    #[test]
    fn cycle_examples() {
        let c = contains_cycle(&petersen(), 5).unwrap().unwrap();
        assert!(petersen().is_cycle(&c) && c.len() == 5);
        assert_eq!(contains_cycle(&petersen(), 3).unwrap(), None);
        assert_eq!(contains_cycle(&petersen(), 4).unwrap(), None);

        let g = cayley_graph(&SymmetricSet::new(17, [1, 3, 14, 16]).unwrap());
        assert_eq!(contains_cycle(&g, 5).unwrap(), None);

        let k4 = Graph::complete(4);
        let c = contains_cycle(&k4, 4).unwrap().unwrap();
        assert!(k4.is_cycle(&c));
        assert!(contains_cycle(&k4, 2).is_err());
    }
}
