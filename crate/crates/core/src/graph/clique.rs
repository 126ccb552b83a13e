use super::Graph;
use crate::bitset::BitSet;

/// A clique on `s` vertices, if one exists.
pub fn contains_clique(g: &Graph, s: usize) -> Option<Vec<usize>> {
    find_clique_within(g, &BitSet::full(g.order()), s)
}

/// A clique on `s` vertices drawn from `candidates`, sorted ascending.
pub fn find_clique_within(g: &Graph, candidates: &BitSet, s: usize) -> Option<Vec<usize>> {
    let mut clique = Vec::with_capacity(s);
    if extend(g, candidates.clone(), s, &mut clique) {
        clique.sort_unstable();
        Some(clique)
    } else {
        None
    }
}

fn extend(g: &Graph, mut cand: BitSet, need: usize, clique: &mut Vec<usize>) -> bool {
    match need {
        0 => return true,
        1 => {
            return match cand.first() {
                Some(v) => {
                    clique.push(v);
                    true
                }
                None => false,
            }
        }
        2 => {
            for u in cand.iter() {
                if let Some(v) = g.neighbors(u).intersection(&cand).first() {
                    clique.extend([u, v]);
                    return true;
                }
            }
            return false;
        }
        _ => {}
    }
    if cand.count() < need {
        return false;
    }

    // Greedy colouring: the vertices of colour < c induce a (c-1)-colourable
    // graph, so once the colour of the next vertex drops below `need` the
    // remaining candidates cannot host the clique.
    let order = colour_classes(g, &cand);
    for &(v, colour) in order.iter().rev() {
        if colour < need {
            return false;
        }
        let next = g.neighbors(v).intersection(&cand);
        clique.push(v);
        if extend(g, next, need - 1, clique) {
            return true;
        }
        clique.pop();
        cand.remove(v);
    }
    false
}

/// Vertices of `cand` with 1-based greedy colours, in non-decreasing colour.
fn colour_classes(g: &Graph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut uncoloured = cand.clone();
    let mut order = Vec::with_capacity(cand.count());
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut available = uncoloured.clone();
        while let Some(v) = available.first() {
            available.remove(v);
            available.difference_with(g.neighbors(v));
            uncoloured.remove(v);
            order.push((v, colour));
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cayley_graph, petersen};
    use crate::group_sets::SymmetricSet;

    #[test]
    fn examples() {
        assert_eq!(contains_clique(&petersen(), 3), None);
        assert!(contains_clique(&petersen(), 2).is_some());
        assert_eq!(contains_clique(&Graph::complete(4), 4), Some(vec![0, 1, 2, 3]));
        let h = cayley_graph(&SymmetricSet::new(19, [1, 2, 6, 8, 11, 13, 17, 18]).unwrap());
        assert_eq!(contains_clique(&h, 4), None);
        assert!(contains_clique(&h, 3).is_some());
    }

    #[test]
    fn witnesses_are_cliques() {
        let g = Graph::complete(9);
        for s in 1..=9 {
            let c = contains_clique(&g, s).unwrap();
            assert_eq!(c.len(), s);
            assert!(g.is_clique(&c));
        }
        assert_eq!(contains_clique(&g, 10), None);
    }
}
