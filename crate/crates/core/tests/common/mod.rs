// Brute-force oracles, written without any of the library's pruning.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use satforge::graph::Graph;
use satforge::group_sets::SymmetricSet;
use satforge::saturation::Target;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn has_clique(adj: &[Vec<bool>], s: usize) -> bool {
    (0..adj.len())
        .combinations(s)
        .any(|c| c.iter().tuple_combinations().all(|(&a, &b)| adj[a][b]))
}

/// Cycles through exactly `m` vertices: fix the least vertex first and
/// try every ordering of the rest.
pub fn has_cycle(adj: &[Vec<bool>], m: usize) -> bool {
    (0..adj.len()).combinations(m).any(|c| {
        c[1..].iter().permutations(m - 1).any(|rest| {
            let order: Vec<usize> = std::iter::once(c[0]).chain(rest.into_iter().copied()).collect();
            (0..m).all(|i| adj[order[i]][order[(i + 1) % m]])
        })
    })
}

pub fn contains(adj: &[Vec<bool>], target: Target) -> bool {
    match target {
        Target::Clique(s) => has_clique(adj, s),
        Target::Cycle(m) => has_cycle(adj, m),
    }
}

/// `None` when saturated, otherwise the reason: `Some(None)` if the graph
/// already contains the target, `Some(Some(e))` for the first non-edge `e`
/// whose addition creates no copy.
pub fn saturation_failure(adj: &[Vec<bool>], target: Target) -> Option<Option<(usize, usize)>> {
    if contains(adj, target) {
        return Some(None);
    }
    let n = adj.len();
    for (u, v) in (0..n).tuple_combinations() {
        if adj[u][v] {
            continue;
        }
        let mut plus = adj.to_vec();
        plus[u][v] = true;
        plus[v][u] = true;
        if !contains(&plus, target) {
            return Some(Some((u, v)));
        }
    }
    None
}

/// Exhaustive check for a path with exactly `len` edges through distinct vertices.
pub fn has_path(adj: &[Vec<bool>], u: usize, v: usize, len: usize) -> bool {
    fn go(adj: &[Vec<bool>], cur: usize, v: usize, left: usize, seen: &mut Vec<bool>) -> bool {
        if left == 0 {
            return cur == v;
        }
        for w in 0..adj.len() {
            if adj[cur][w] && !seen[w] {
                seen[w] = true;
                let found = go(adj, w, v, left - 1, seen);
                seen[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    let mut seen = vec![false; adj.len()];
    seen[u] = true;
    go(adj, u, v, len, &mut seen)
}

/// All sums of `k`-tuples from `set`, with repetition.
pub fn tuple_sumset(n: usize, set: &[usize], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..k)
        .map(|_| set.iter().copied())
        .multi_cartesian_product()
        .map(|t| t.iter().sum::<usize>() % n)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Sums of ordered `k`-tuples whose prefix sums `0, s1, s1+s2, ...` are distinct.
pub fn tuple_restricted_sumset(n: usize, set: &[usize], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..k)
        .map(|_| set.iter().copied())
        .multi_cartesian_product()
        .filter_map(|t| {
            let mut prefixes = vec![0usize];
            for x in &t {
                prefixes.push((prefixes.last().unwrap() + x) % n);
            }
            let total = *prefixes.last().unwrap();
            prefixes.sort_unstable();
            prefixes.dedup();
            (prefixes.len() == k + 1).then_some(total)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The cycle-set hypotheses recomputed from tuples.
pub fn tuple_hypotheses(set: &SymmetricSet, k: usize) -> bool {
    let n = set.modulus();
    let elems = set.elements();
    if elems.is_empty() || tuple_sumset(n, elems, k + 1).contains(&0) {
        return false;
    }
    let expected: Vec<usize> = (1..n).filter(|x| !set.contains(*x)).collect();
    tuple_restricted_sumset(n, elems, k) == expected
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Graph on `n` vertices whose edge set is the bitmask `mask` over pairs in
/// lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_symmetric_set(rng: &mut impl Rng, n: usize, max_orbits: usize) -> SymmetricSet {
    let orbits = rng.gen_range(1..=max_orbits.min(n / 2));
    let mut reps: Vec<usize> = (1..=n / 2).collect();
    for i in 0..orbits {
        let j = rng.gen_range(i..reps.len());
        reps.swap(i, j);
    }
    SymmetricSet::from_generators(n, reps[..orbits].iter().copied()).unwrap()
}
