//! Builders for the explicit families of regular saturated graphs.
//!
//! Every builder returns the graph together with its [`ConstructionSpec`]
//! and the claimed order, degree and forbidden target, so that callers can
//! replay and verify the claim independently.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::group_sets::{super_sum_modulus, super_sum_set, SymmetricSet};
use crate::provenance::ConstructionSpec;
use crate::saturation::{self, Report, Target};
use crate::search::BaseStore;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub n: usize,
    pub degree: Option<usize>,
    pub target: Target,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    pub spec: ConstructionSpec,
    pub claim: Claim,
}

impl Construction {
    /// Runs the exact saturation check against the claimed target.
    pub fn verify(&self) -> Result<Report> {
        let v = saturation::check(&self.graph, self.claim.target)?;
        Ok(Report::from_verdict(&self.spec, self.graph.order(), &v))
    }

    /// Whether `report` confirms saturation, order and degree.
    pub fn claim_holds(&self, report: &Report) -> bool {
        report.is_saturated()
            && report.n == self.claim.n
            && (self.claim.degree.is_none() || report.degree == self.claim.degree)
    }
}

/// `K_3`-saturated Cayley graph on `3k + r` vertices, `(k + r - 1)`-regular.
///
/// `g3(3, 1)` is the Petersen graph, which is not a circulant.
pub fn g3(k: usize, r: usize) -> Result<Construction> {
    let n = 3 * k + r;
    let elements: Vec<usize> = match r {
        2 if k >= 1 => (k + 1..=2 * k + 1).collect(),
        1 if k == 3 => {
            return Ok(Construction {
                graph: graph::petersen(),
                spec: ConstructionSpec::g3(3, 1),
                claim: Claim { n: 10, degree: Some(3), target: Target::Clique(3) },
            })
        }
        1 if k >= 4 => [k, 2 * k + 1].into_iter().chain(k + 2..2 * k).collect(),
        0 if k >= 7 => [k - 1, k + 1, 2 * k - 1, 2 * k + 1]
            .into_iter()
            .chain(k + 3..=2 * k - 3)
            .collect(),
        0..=2 => {
            let need = [7, 3, 1][r];
            return Err(Error::unsupported("g3", format!("r = {r} needs k >= {need}, got k = {k}")));
        }
        _ => return Err(Error::unsupported("g3", format!("r must be 0, 1 or 2, got {r}"))),
    };
    let graph = graph::cayley_graph(&SymmetricSet::new(n, elements)?);
    Ok(Construction {
        graph,
        spec: ConstructionSpec::g3(k, r),
        claim: Claim { n, degree: Some(k + r - 1), target: Target::Clique(3) },
    })
}

pub(crate) fn h4_set(k: usize) -> Result<SymmetricSet> {
    let n = 5 * k + 4;
    let tail = (6..=5 * (k - 1) + 3).filter(|x| x % 5 == 1 || x % 5 == 3);
    SymmetricSet::new(n, [1, 2, n - 2, n - 1].into_iter().chain(tail))
}

/// `(2k + 2)`-regular `K_4`-saturated circulant on `5k + 4` vertices.
pub fn h4(k: usize) -> Result<Construction> {
    if k < 3 {
        return Err(Error::unsupported("h4", format!("needs k >= 3, got {k}")));
    }
    let set = h4_set(k)?;
    Ok(Construction {
        graph: graph::cayley_graph(&set),
        spec: ConstructionSpec::h4(k),
        claim: Claim { n: 5 * k + 4, degree: Some(2 * k + 2), target: Target::Clique(4) },
    })
}

pub(crate) const GPRIME_NOTE: &str =
    "element k+2 of the published set replaced by k+1 so that the set is closed under negation";

pub(crate) fn gprime_set(k: usize) -> Result<SymmetricSet> {
    let n = 3 * k + 2;
    let elements = [k - 1, k + 1, k + 3]
        .into_iter()
        .chain(k + 5..=2 * k - 3)
        .chain([2 * k - 1, 2 * k + 1, 2 * k + 3]);
    SymmetricSet::new(n, elements)
}

/// `(k - 1)`-regular `K_3`-saturated circulant on `3k + 2` vertices.
///
/// The published connection set is not symmetric, so `k + 2` is replaced by
/// `k + 1` and the result is checked exactly before it is returned.
pub fn gprime(k: usize) -> Result<Construction> {
    if k < 9 {
        return Err(Error::unsupported("gprime", format!("needs k >= 9, got {k}")));
    }
    let set = gprime_set(k)?;
    let graph = graph::cayley_graph(&set);
    let v = saturation::is_clique_saturated(&graph, 3)?;
    if !v.is_saturated() || v.regular != Some(k - 1) {
        return Err(Error::ConstructionDiscrepancy {
            family: "gprime".into(),
            detail: format!("Cay(Z_{}, {:?}) is {} with degree {:?}", 3 * k + 2, set.elements(), v.verdict, v.regular),
            certificate: v.certificate,
        });
    }
    Ok(Construction {
        graph,
        spec: ConstructionSpec::gprime(k).with_note(GPRIME_NOTE),
        claim: Claim { n: 3 * k + 2, degree: Some(k - 1), target: Target::Clique(3) },
    })
}

/// Join of a `K_3`-saturated `d`-regular graph on `N` vertices with `N - d`
/// isolated vertices: `K_4`-saturated and `N`-regular on `2N - d` vertices.
fn k4_from_k3(base: Construction) -> Construction {
    let big_n = base.claim.n;
    let d = base.claim.degree.expect("K3 builders claim a degree");
    let pad = big_n - d;
    Construction {
        graph: graph::join(&base.graph, &graph::empty_graph(pad)),
        spec: ConstructionSpec::join(base.spec, ConstructionSpec::empty(pad)),
        claim: Claim { n: 2 * big_n - d, degree: Some(big_n), target: Target::Clique(4) },
    }
}

/// Regular `K_4`-saturated graph on `n >= 36` vertices.
///
/// Orders divisible by 5 are blown up from the largest divisor `m` of `n`
/// for which `store` holds a `K_4`-saturated circulant base.
pub fn k4_family(n: usize, store: &BaseStore) -> Result<Construction> {
    if n < 36 {
        return Err(Error::unsupported("k4", format!("needs n >= 36, got {n}")));
    }
    match n % 5 {
        4 => h4((n - 4) / 5),
        0 => {
            for m in (3..=n).rev().filter(|m| n.is_multiple_of(*m)) {
                let Some(set) = store.load(m, 4)? else { continue };
                let t = n / m;
                let base = graph::cayley_graph(&set);
                return Ok(Construction {
                    graph: graph::blow_up(&base, t)?,
                    spec: ConstructionSpec::blow_up(ConstructionSpec::cayley(&set), t),
                    claim: Claim { n, degree: Some(set.len() * t), target: Target::Clique(4) },
                });
            }
            Err(Error::unsupported("k4", format!("no stored K4 base graph divides n = {n}")))
        }
        rem => {
            let r = rem - 1;
            Ok(k4_from_k3(g3((n - 1 - r) / 5, r)?))
        }
    }
}

fn join_claimed(a: Construction, b: Construction, target: Target) -> Construction {
    let degree = match (a.claim.degree, b.claim.degree) {
        (Some(da), Some(db)) if a.claim.n - da == b.claim.n - db => Some(da + b.claim.n),
        _ => None,
    };
    Construction {
        graph: graph::join(&a.graph, &b.graph),
        spec: ConstructionSpec::join(a.spec, b.spec),
        claim: Claim { n: a.claim.n + b.claim.n, degree, target },
    }
}

/// Regular `K_5`-saturated graph on `n` vertices.
pub fn k5_family(n: usize) -> Result<Construction> {
    if n % 6 == 5 {
        if n < 59 {
            return Err(Error::unsupported("k5", format!("n = 5 mod 6 needs n >= 59, got {n}")));
        }
        let k = (n - 5) / 6;
        return Ok(join_claimed(gprime(k)?, g3(k + 1, 0)?, Target::Clique(5)));
    }
    if n < 42 {
        return Err(Error::unsupported("k5", format!("needs n >= 42, got {n}")));
    }
    let (k, rsum) = (n / 6, n % 6);
    let r1 = rsum.min(2);
    Ok(join_claimed(g3(k, r1)?, g3(k, rsum - r1)?, Target::Clique(5)))
}

/// The two recursive families for large cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CliquePart {
    /// `K_{2δ+1}`-saturated on `3δk + r` vertices, `r ∈ 0..=2δ`.
    Odd,
    /// `K_{2δ+2}`-saturated on `(3δ+2)k + r` vertices, `r ∈ 1..=2δ+1`.
    Even,
}

impl CliquePart {
    pub fn index(self) -> usize {
        match self {
            CliquePart::Odd => 1,
            CliquePart::Even => 2,
        }
    }

    pub fn from_index(i: usize) -> Result<Self> {
        match i {
            1 => Ok(CliquePart::Odd),
            2 => Ok(CliquePart::Even),
            _ => Err(Error::invalid(format!("part must be 1 or 2, got {i}"))),
        }
    }
}

/// Recursive joins of `g3` graphs.
///
/// Each step peels off `g3(k, r')` and recurses on `δ - 1` with `r - r'`.
/// For the even part `r'` is capped at `r - 1` so the remainder stays in
/// `1..`, and the base case joins `g3(k, r - 1)` with `2k + 1` isolated
/// vertices.
pub fn large_clique_family(delta: usize, k: usize, r: usize, part: CliquePart) -> Result<Construction> {
    let family = "recursive_clique";
    if delta == 0 {
        return Err(Error::unsupported(family, "needs delta >= 1"));
    }
    let (lo, hi, s) = match part {
        CliquePart::Odd => (0, 2 * delta, 2 * delta + 1),
        CliquePart::Even => (1, 2 * delta + 1, 2 * delta + 2),
    };
    if r < lo || r > hi {
        return Err(Error::unsupported(family, format!("r must lie in {lo}..={hi} for delta = {delta}, got {r}")));
    }
    let mut c = if delta == 1 {
        match part {
            CliquePart::Odd => g3(k, r)?,
            CliquePart::Even => k4_from_k3(g3(k, r - 1)?),
        }
    } else {
        let r1 = match part {
            CliquePart::Odd => r.min(2),
            CliquePart::Even => (r - 1).min(2),
        };
        let rest = large_clique_family(delta - 1, k, r - r1, part)?;
        join_claimed(g3(k, r1)?, rest, Target::Clique(s))
    };
    c.spec = ConstructionSpec::recursive_clique(delta, k, r, part).with_children(vec![c.spec]);
    Ok(c)
}

/// `C_{2α+3}`-saturated `2(k+1)`-regular circulant over the super sum set.
pub fn c_odd_cycle(alpha: usize, k: usize) -> Result<Construction> {
    let set = super_sum_set(alpha, k)?;
    Ok(Construction {
        graph: graph::cayley_graph(&set),
        spec: ConstructionSpec::super_sum(alpha, k),
        claim: Claim {
            n: super_sum_modulus(alpha, k),
            degree: Some(2 * (k + 1)),
            target: Target::Cycle(2 * alpha + 3),
        },
    })
}

/// Cayley graph of an explicit set, with no claim beyond its order and degree.
pub fn circulant(set: &SymmetricSet, target: Target) -> Construction {
    Construction {
        graph: graph::cayley_graph(set),
        spec: ConstructionSpec::cayley(set),
        claim: Claim { n: set.modulus(), degree: Some(set.len()), target },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::Verdict;

    fn assert_claim(c: &Construction) {
        let r = c.verify().unwrap();
        assert!(c.claim_holds(&r), "{}: {:?} {:?}", c.spec, r.verdict, r.certificate);
    }

    #[test]
    fn g3_examples() {
        let c = g3(5, 2).unwrap();
        assert_eq!((c.claim.n, c.claim.degree), (17, Some(6)));
        assert_claim(&c);
        assert_eq!(g3(3, 1).unwrap().graph, graph::petersen());
        let c = g3(7, 0).unwrap();
        assert_eq!((c.graph.order(), c.graph.regular_degree()), (21, Some(6)));
        assert_claim(&c);
        assert_claim(&g3(4, 1).unwrap());
        assert!(matches!(g3(6, 0), Err(Error::UnsupportedParameters { .. })));
        assert!(g3(2, 1).is_err());
        assert!(g3(0, 2).is_err());
        assert!(g3(5, 3).is_err());
    }

    #[test]
    fn h4_examples() {
        let s = h4_set(6).unwrap();
        assert_eq!(s.modulus(), 34);
        for x in [6, 8, 11, 13, 16, 18, 21, 23, 26, 28] {
            assert!(s.contains(x));
        }
        let c = h4(3).unwrap();
        assert_eq!((c.graph.order(), c.graph.regular_degree()), (19, Some(8)));
        assert_claim(&c);
        assert!(h4(2).is_err());
    }

    #[test]
    fn gprime_examples() {
        let c = gprime(9).unwrap();
        assert_eq!((c.graph.order(), c.graph.regular_degree()), (29, Some(8)));
        assert!(c.spec.note.is_some());
        let c = gprime(10).unwrap();
        assert_eq!((c.graph.order(), c.graph.regular_degree()), (32, Some(9)));
        assert!(gprime(8).is_err());
    }

    #[test]
    fn k4_examples() {
        let store = BaseStore::in_memory();
        let c = k4_family(36, &store).unwrap();
        assert_eq!(c.claim.degree, Some(21));
        assert_eq!(c.spec.to_string(), "join(g3(7,0),empty(15))");
        assert_claim(&c);
        let c = k4_family(39, &store).unwrap();
        assert_eq!(c.spec.to_string(), "h4(7)");
        assert_eq!(c.claim.degree, Some(16));
        assert!(matches!(k4_family(50, &store), Err(Error::UnsupportedParameters { .. })));
        assert!(k4_family(35, &store).is_err());

        store.store(&h4_set(3).unwrap(), 4).unwrap();
        let c = k4_family(95, &store).unwrap();
        assert_eq!(c.spec.to_string(), format!("blow_up({},5)", ConstructionSpec::cayley(&h4_set(3).unwrap())));
        assert_eq!(c.claim.degree, Some(40));
        assert_claim(&c);
    }

    #[test]
    fn k5_examples() {
        let c = k5_family(42).unwrap();
        assert_eq!(c.spec.to_string(), "join(g3(7,0),g3(7,0))");
        assert_eq!(c.claim.degree, Some(27));
        assert_claim(&c);
        let c = k5_family(43).unwrap();
        assert_eq!((c.graph.order(), c.graph.regular_degree()), (43, Some(28)));
        assert_claim(&c);
        let c = k5_family(59).unwrap();
        assert_eq!(c.graph.regular_degree(), Some(38));
        assert!(c.spec.to_string().starts_with("join(gprime(9),g3(10,0))"));
        assert!(k5_family(53).is_err());
        assert!(k5_family(41).is_err());
    }

    #[test]
    fn large_clique_examples() {
        let c = large_clique_family(2, 7, 0, CliquePart::Odd).unwrap();
        assert_eq!((c.claim.n, c.claim.degree), (42, Some(27)));
        assert_claim(&c);
        let c = large_clique_family(2, 7, 4, CliquePart::Odd).unwrap();
        assert_eq!((c.graph.order(), c.graph.regular_degree()), (46, Some(31)));
        let c = large_clique_family(1, 7, 1, CliquePart::Odd).unwrap();
        assert_eq!(c.graph, g3(7, 1).unwrap().graph);
        let c = large_clique_family(1, 7, 1, CliquePart::Even).unwrap();
        assert_eq!((c.graph.order(), c.graph.regular_degree()), (36, Some(21)));
        assert_eq!(c.spec.build().unwrap(), c.graph);
        assert!(large_clique_family(2, 7, 5, CliquePart::Odd).is_err());
        assert!(large_clique_family(2, 7, 0, CliquePart::Even).is_err());
    }

    #[test]
    fn odd_cycle_examples() {
        for (alpha, k, n, d, m) in [(1, 1, 17, 4, 5), (1, 4, 47, 10, 5), (2, 1, 33, 4, 7)] {
            let c = c_odd_cycle(alpha, k).unwrap();
            assert_eq!((c.graph.order(), c.graph.regular_degree()), (n, Some(d)));
            assert_eq!(c.claim.target, Target::Cycle(m));
            let r = c.verify().unwrap();
            assert_eq!(r.verdict, Verdict::Saturated);
        }
    }
}
