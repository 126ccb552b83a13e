mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use satforge::constructions::gprime;
use satforge::graph::{cayley_graph, contains_clique, exists_path_of_length, Graph};
use satforge::group_sets::{
    check_construction_hypotheses, restricted_sumset, sumset, super_sum_set, ResidueSet, SymmetricSet,
};
use satforge::saturation::{is_clique_saturated, is_cycle_saturated, Verdict};
use satforge::search::{
    accepts, find_clique_circulants, find_cycle_sets, orbit_representatives, SearchMode, SearchOptions,
    SearchTarget,
};

fn symmetric_set() -> impl Strategy<Value = SymmetricSet> {
    (3usize..=40).prop_flat_map(|n| {
        proptest::collection::btree_set(1..=n / 2, 1..=3)
            .prop_map(move |reps| SymmetricSet::from_generators(n, reps).unwrap())
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| it.next().unwrap())
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn restricted_sumset_matches_tuples(set in symmetric_set(), k in 1usize..=5) {
        let got = restricted_sumset(&set, k).unwrap().to_vec();
        prop_assert_eq!(got, common::tuple_restricted_sumset(set.modulus(), set.elements(), k));
    }

    #[test]
    fn sumset_matches_tuples_and_folds(set in symmetric_set(), k in 2usize..=5, split in 1usize..=4) {
        let n = set.modulus();
        let ks = sumset(&set, k).unwrap();
        prop_assert_eq!(ks.to_vec(), common::tuple_sumset(n, set.elements(), k));
        prop_assert_eq!(&ks, &sumset(&set, k - 1).unwrap().plus(&set.residues()));
        let a = split.min(k - 1);
        prop_assert_eq!(&ks, &sumset(&set, a).unwrap().plus(&sumset(&set, k - a).unwrap()));
    }

    #[test]
    fn restricted_sumset_lies_in_sumset(set in symmetric_set(), k in 1usize..=5) {
        let r = restricted_sumset(&set, k).unwrap();
        prop_assert!(r.is_subset(&sumset(&set, k).unwrap()));
        prop_assert!(!r.contains(0));
    }

    #[test]
    fn clique_search_matches_brute_force(g in graph(12), s in 1usize..=5) {
        let adj = common::adjacency(&g);
        let found = contains_clique(&g, s);
        prop_assert_eq!(found.is_some(), common::has_clique(&adj, s));
        if let Some(c) = found {
            prop_assert!(g.is_clique(&c) && c.len() == s);
        }
    }

    #[test]
    fn path_search_matches_brute_force(g in graph(10), len in 1usize..=7, u in 0usize..10, v in 0usize..10) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let adj = common::adjacency(&g);
        prop_assert_eq!(exists_path_of_length(&g, u, v, len).unwrap(), common::has_path(&adj, u, v, len));
    }

    #[test]
    fn triangle_and_three_cycle_agree(g in graph(10)) {
        let c = is_cycle_saturated(&g, 3).unwrap();
        let k = is_clique_saturated(&g, 3).unwrap();
        prop_assert_eq!(c.verdict, k.verdict);
        if c.verdict == Verdict::NonEdgeUnwitnessed {
            prop_assert_eq!(c.certificate, k.certificate);
        }
    }

    #[test]
    fn certificates_replay(g in graph(9), s in 3usize..=4) {
        let v = is_clique_saturated(&g, s).unwrap();
        match v.verdict {
            Verdict::ContainsForbidden => prop_assert!(g.is_clique(&v.certificate) && v.certificate.len() == s),
            Verdict::NonEdgeUnwitnessed => {
                let (a, b) = (v.certificate[0], v.certificate[1]);
                prop_assert!(!g.has_edge(a, b));
                prop_assert!(contains_clique(&g.with_edge(a, b).unwrap(), s).is_none());
            }
            Verdict::Saturated => prop_assert!(v.certificate.is_empty()),
        }
    }
}

#[test]
fn hypotheses_imply_cycle_saturation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut holding = 0;
    for _ in 0..3000 {
        let n = rng.gen_range(9..=40);
        let set = common::random_symmetric_set(&mut rng, n, 4);
        for k in [2, 4] {
            let report = check_construction_hypotheses(&set, k).unwrap();
            assert_eq!(report.holds(), common::tuple_hypotheses(&set, k), "{set} k={k}");
            if report.holds() {
                holding += 1;
                let v = is_cycle_saturated(&cayley_graph(&set), k + 1).unwrap();
                assert!(v.is_saturated(), "{set} k={k}: {:?}", v);
            }
        }
    }
    assert!(holding > 10, "only {holding} sampled sets satisfied the hypotheses");
}

#[test]
fn super_sum_sets_fill_the_complement() {
    for alpha in 1..=4 {
        for k in 1..=4 {
            let set = super_sum_set(alpha, k).unwrap();
            let kk = 2 * alpha + 2;
            let complement = set.residues().complement();
            assert_eq!(sumset(&set, kk).unwrap(), complement, "alpha={alpha} k={k}");
            let mut without_zero = complement.clone();
            without_zero.remove(0);
            assert_eq!(restricted_sumset(&set, kk).unwrap(), without_zero, "alpha={alpha} k={k}");
            assert_eq!(set.len(), 2 * (k + 1));
        }
    }
}

#[test]
fn search_hits_replay_through_the_graph() {
    let all = SearchOptions::default().mode(SearchMode::AllHits);
    for n in [17, 21, 23, 25, 27] {
        for hit in find_cycle_sets(n, 4, &all.max_orbit_pairs(4)).unwrap().hits {
            assert!(hit.check.passed());
            assert!(common::tuple_hypotheses(&hit.set, 4));
            let v = is_cycle_saturated(&cayley_graph(&hit.set), 5).unwrap();
            assert!(v.is_saturated() && v.regular == Some(hit.set.len()), "{:?}", hit.set);
        }
    }
    for n in [13, 17, 19, 22] {
        for hit in find_clique_circulants(n, 4, &all).unwrap().hits {
            assert!(is_clique_saturated(&cayley_graph(&hit.set), 4).unwrap().is_saturated());
        }
    }
}

#[test]
fn certify_empty_rejections_hold_up_under_tuples() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in [19, 31] {
        let reps = orbit_representatives(n);
        let mut sampled = 0;
        for mask in 1u64..(1 << reps.len()) {
            if !rng.gen_bool(0.01) && mask != 1 {
                continue;
            }
            let gens = reps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x);
            let set = SymmetricSet::from_generators(n, gens).unwrap();
            if set.len() > 10 {
                // keep the tuple oracle tractable
                continue;
            }
            sampled += 1;
            let target = SearchTarget::CycleSets { k: 4 };
            assert!(!accepts(target, &set).unwrap());
            assert!(!common::tuple_hypotheses(&set, 4), "n={n}: {set} wrongly rejected");
        }
        assert!(sampled > 0);
    }
}

#[test]
fn fast_circulant_check_matches_full_check() {
    for n in 5..=16 {
        let reps = orbit_representatives(n);
        for mask in 1u64..(1 << reps.len()) {
            let gens = reps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x);
            let set = SymmetricSet::from_generators(n, gens).unwrap();
            let g = cayley_graph(&set);
            for s in [3, 4] {
                let fast = accepts(SearchTarget::CliqueCirculants { s }, &set).unwrap();
                let full = is_clique_saturated(&g, s).unwrap().is_saturated();
                assert_eq!(fast, full, "{set} s={s}");
            }
        }
    }
}

#[test]
fn super_family_appears_among_hits() {
    for k in 1..=4 {
        let n = 10 * k + 7;
        let opts = SearchOptions::default().mode(SearchMode::AllHits).max_orbit_pairs(k + 1);
        let res = find_cycle_sets(n, 4, &opts).unwrap();
        let expected = super_sum_set(1, k).unwrap();
        assert!(res.hits.iter().any(|h| h.set == expected), "n={n}");
    }
}

#[test]
fn searches_are_deterministic_across_threads() {
    let all = SearchOptions::default().mode(SearchMode::AllHits).max_orbit_pairs(4);
    for n in [29, 33] {
        let a = find_cycle_sets(n, 4, &all).unwrap();
        let b = find_cycle_sets(n, 4, &all.threads(4)).unwrap();
        assert_eq!(a, b);
        let first = find_cycle_sets(n, 4, &SearchOptions::default().threads(4)).unwrap();
        assert_eq!(first.hits.first(), a.hits.first());
    }
}

#[test]
fn repaired_gprime_holds_over_a_range() {
    for k in 9..=19 {
        let c = gprime(k).unwrap();
        assert_eq!(c.graph.regular_degree(), Some(k - 1));
    }
}

#[test]
fn residue_set_algebra() {
    let a = ResidueSet::from_residues(12, [1, 2, 3]);
    let b = ResidueSet::from_residues(12, [3, 4]);
    assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
    assert_eq!(a.plus(&b).to_vec(), vec![4, 5, 6, 7]);
    assert_eq!(a.translated(11).to_vec(), vec![0, 1, 2]);
}
