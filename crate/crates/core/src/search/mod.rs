//! Exhaustive and budgeted searches over symmetric subsets of `Z_n`.
//!
//! Candidates are unions of orbits `{x, n - x}` for `1 <= x <= n/2`, visited
//! by ascending orbit count and then lexicographically by representative.
//! Each target runs cheap necessary conditions before its exact predicate.

mod store;
mod table;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cayley_graph, find_clique_within};
use crate::group_sets::{
    check_construction_hypotheses, is_complete_kl, sumset_layers, HypothesisReport, SymmetricSet,
};
use crate::saturation::{is_clique_saturated, SaturationVerdict};

pub use store::{append_jsonl, read_jsonl, BaseStore, BASE_DIR_ENV, DEFAULT_BASE_DIR};
pub use table::{reproduce_table, RowStatus, TableOptions, TableReport, TableRow, LISTED_ROWS, TABLE_EXCEPTIONS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SearchTarget {
    /// `0 ∉ (k+1)S` and `R_k(S) = Z_n \ (S ∪ {0})`, `k` even.
    CycleSets { k: usize },
    /// `Cay(Z_n, S)` is `K_s`-saturated.
    CliqueCirculants { s: usize },
    /// `kS = Z_n \ S`.
    CompleteK1 { k: usize },
}

impl fmt::Display for SearchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchTarget::CycleSets { k } => write!(f, "cycle-sets(k={k})"),
            SearchTarget::CliqueCirculants { s } => write!(f, "clique-circulants(s={s})"),
            SearchTarget::CompleteK1 { k } => write!(f, "complete-k1(k={k})"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    #[default]
    FirstHit,
    AllHits,
    CertifyEmpty,
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first-hit" => Ok(SearchMode::FirstHit),
            "all-hits" => Ok(SearchMode::AllHits),
            "certify-empty" => Ok(SearchMode::CertifyEmpty),
            other => Err(Error::Parse(format!("unknown search mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchJob {
    pub n: usize,
    pub target: SearchTarget,
    /// Cap on the number of orbits in a candidate; `None` means all of them.
    pub max_orbit_pairs: Option<usize>,
    /// Cap on evaluated candidates; `None` means unlimited.
    pub budget: Option<u64>,
    pub mode: SearchMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_orbit_pairs: Option<usize>,
    pub budget: Option<u64>,
    pub mode: SearchMode,
    /// Worker threads; 1 runs on the calling thread, 0 uses the global pool.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_orbit_pairs: None, budget: None, mode: SearchMode::FirstHit, threads: 1 }
    }
}

impl SearchOptions {
    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn max_orbit_pairs(mut self, cap: usize) -> Self {
        self.max_orbit_pairs = Some(cap);
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }
}

/// Replay of the full predicate for an accepted set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum HitCheck {
    Hypotheses(HypothesisReport),
    Saturation(SaturationVerdict),
    CompleteK1 { k: usize, holds: bool },
}

impl HitCheck {
    pub fn passed(&self) -> bool {
        match self {
            HitCheck::Hypotheses(r) => r.holds(),
            HitCheck::Saturation(v) => v.is_saturated(),
            HitCheck::CompleteK1 { holds, .. } => *holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub set: SymmetricSet,
    /// Orbit representatives, ascending.
    pub generators: Vec<usize>,
    pub check: HitCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub job: SearchJob,
    pub hits: Vec<Hit>,
    /// Every candidate under the cap was evaluated.
    pub exhausted: bool,
    pub nodes_expanded: u64,
}

impl SearchResult {
    /// The whole capped space was enumerated and nothing matched.
    pub fn certified_empty(&self) -> bool {
        self.exhausted && self.hits.is_empty()
    }
}

/// `1..=n/2`: one representative per orbit `{x, -x}`.
pub fn orbit_representatives(n: usize) -> Vec<usize> {
    (1..=n / 2).collect()
}

fn validate(job: &SearchJob) -> Result<()> {
    if job.n < 3 {
        return Err(Error::invalid(format!("search needs n >= 3, got {}", job.n)));
    }
    match job.target {
        SearchTarget::CycleSets { k } if k < 2 || k % 2 == 1 => Err(Error::invalid(format!(
            "cycle-set search needs an even k >= 2, got {k}"
        ))),
        SearchTarget::CliqueCirculants { s } if s < 3 => {
            Err(Error::invalid(format!("clique-circulant search needs s >= 3, got {s}")))
        }
        SearchTarget::CompleteK1 { k } if k < 2 => {
            Err(Error::invalid(format!("complete (k,1) search needs k >= 2, got {k}")))
        }
        _ => Ok(()),
    }
}

/// The filtered predicate used by the search; equal to the full predicate.
pub fn accepts(target: SearchTarget, set: &SymmetricSet) -> Result<bool> {
    if set.is_empty() {
        return Ok(false);
    }
    let base = set.residues();
    let mut outside = base.complement();
    outside.remove(0);
    match target {
        SearchTarget::CycleSets { k } => {
            // At most d(d-1)^(k-1) self-avoiding walks of length k leave 0.
            let d = set.len() as u128;
            let walks = d.saturating_mul(d.saturating_sub(1).saturating_pow(k as u32 - 1));
            if walks < outside.len() as u128 {
                return Ok(false);
            }
            let layers = sumset_layers(&base, k + 1);
            if layers[k + 1].contains(0) || !outside.is_subset(&layers[k]) {
                return Ok(false);
            }
            Ok(check_construction_hypotheses(set, k)?.holds())
        }
        SearchTarget::CliqueCirculants { s } => {
            // A non-edge 0x needs a common neighbour, so 2S covers the outside.
            if s >= 3 && !outside.is_subset(&base.plus(&base)) {
                return Ok(false);
            }
            Ok(clique_circulant_saturated(set, s))
        }
        SearchTarget::CompleteK1 { k } => is_complete_kl(set, k, 1),
    }
}

/// `K_s`-saturation of a circulant, checked at vertex 0 only: translations
/// move every clique and every non-edge to one through 0, and `x -> -x`
/// identifies the non-edges `0x` and `0(n-x)`.
fn clique_circulant_saturated(set: &SymmetricSet, s: usize) -> bool {
    let g = cayley_graph(set);
    let n = set.modulus();
    if find_clique_within(&g, g.neighbors(0), s - 1).is_some() {
        return false;
    }
    (1..=n / 2).filter(|&x| !set.contains(x)).all(|x| {
        let common = g.neighbors(0).intersection(g.neighbors(x));
        find_clique_within(&g, &common, s - 2).is_some()
    })
}

fn replay(target: SearchTarget, set: &SymmetricSet) -> Result<HitCheck> {
    Ok(match target {
        SearchTarget::CycleSets { k } => HitCheck::Hypotheses(check_construction_hypotheses(set, k)?),
        SearchTarget::CliqueCirculants { s } => HitCheck::Saturation(is_clique_saturated(&cayley_graph(set), s)?),
        SearchTarget::CompleteK1 { k } => HitCheck::CompleteK1 { k, holds: is_complete_kl(set, k, 1)? },
    })
}

enum Step {
    Miss,
    Hit(Hit),
    OutOfBudget,
}

struct Engine<'a> {
    job: &'a SearchJob,
    reps: Vec<usize>,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
}

impl Engine<'_> {
    fn eval(&self, combo: &[usize]) -> Result<Step> {
        if self.out_of_budget.load(Ordering::Relaxed) {
            return Ok(Step::OutOfBudget);
        }
        let spent = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.job.budget.is_some_and(|b| spent > b) {
            self.nodes.fetch_sub(1, Ordering::Relaxed);
            self.out_of_budget.store(true, Ordering::Relaxed);
            return Ok(Step::OutOfBudget);
        }
        let generators: Vec<usize> = combo.iter().map(|&i| self.reps[i]).collect();
        let set = SymmetricSet::from_generators(self.job.n, generators.iter().copied())?;
        if !accepts(self.job.target, &set)? {
            return Ok(Step::Miss);
        }
        let check = replay(self.job.target, &set)?;
        if !check.passed() {
            return Err(Error::invalid(format!("search filter accepted {set:?} but the replay rejects it")));
        }
        Ok(Step::Hit(Hit { set, generators, check }))
    }

    /// Candidates of `size` orbits whose smallest orbit index is `first`.
    fn scan(&self, size: usize, first: usize, stop_at_hit: bool) -> Result<Vec<Hit>> {
        let mut hits = Vec::new();
        for rest in (first + 1..self.reps.len()).combinations(size - 1) {
            let mut combo = Vec::with_capacity(size);
            combo.push(first);
            combo.extend(rest);
            match self.eval(&combo)? {
                Step::Miss => {}
                Step::Hit(h) => {
                    hits.push(h);
                    if stop_at_hit {
                        break;
                    }
                }
                Step::OutOfBudget => break,
            }
        }
        Ok(hits)
    }

    fn run(&self, parallel: bool) -> Result<(Vec<Hit>, bool)> {
        let m = self.reps.len();
        let cap = self.job.max_orbit_pairs.unwrap_or(m).min(m);
        let first_hit = self.job.mode == SearchMode::FirstHit;
        let mut hits = Vec::new();
        for size in 1..=cap {
            let firsts = 0..=m - size;
            let per_first: Vec<Vec<Hit>> = if parallel {
                firsts.into_par_iter().map(|f| self.scan(size, f, first_hit)).collect::<Result<_>>()?
            } else {
                let mut out = Vec::new();
                for f in firsts {
                    let found = self.scan(size, f, first_hit)?;
                    let stop = first_hit && !found.is_empty();
                    out.push(found);
                    if stop || self.out_of_budget.load(Ordering::Relaxed) {
                        break;
                    }
                }
                out
            };
            hits.extend(per_first.into_iter().flatten());
            if first_hit && !hits.is_empty() {
                hits.sort_by(|a, b| a.generators.cmp(&b.generators));
                hits.truncate(1);
                return Ok((hits, false));
            }
            if self.out_of_budget.load(Ordering::Relaxed) {
                break;
            }
        }
        hits.sort_by(|a, b| (a.generators.len(), &a.generators).cmp(&(b.generators.len(), &b.generators)));
        Ok((hits, !self.out_of_budget.load(Ordering::Relaxed)))
    }
}

/// Runs `job` on `threads` workers (1: calling thread, 0: global pool).
pub fn run(job: &SearchJob, threads: usize) -> Result<SearchResult> {
    validate(job)?;
    let engine = Engine {
        job,
        reps: orbit_representatives(job.n),
        nodes: AtomicU64::new(0),
        out_of_budget: AtomicBool::new(false),
    };
    let (hits, exhausted) = match threads {
        1 => engine.run(false)?,
        0 => engine.run(true)?,
        t => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start {t} workers: {e}")))?
            .install(|| engine.run(true))?,
    };
    Ok(SearchResult {
        job: job.clone(),
        hits,
        exhausted,
        nodes_expanded: engine.nodes.load(Ordering::Relaxed),
    })
}

fn job(n: usize, target: SearchTarget, opts: &SearchOptions) -> SearchJob {
    SearchJob { n, target, max_orbit_pairs: opts.max_orbit_pairs, budget: opts.budget, mode: opts.mode }
}

/// Sets satisfying the circulant `C_{k+1}`-saturation hypotheses.
pub fn find_cycle_sets(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchResult> {
    run(&job(n, SearchTarget::CycleSets { k }, opts), opts.threads)
}

/// Connection sets whose Cayley graph is `K_s`-saturated.
pub fn find_clique_circulants(n: usize, s: usize, opts: &SearchOptions) -> Result<SearchResult> {
    run(&job(n, SearchTarget::CliqueCirculants { s }, opts), opts.threads)
}

/// Sets with `kS = Z_n \ S`.
pub fn find_complete_k1_sets(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchResult> {
    run(&job(n, SearchTarget::CompleteK1 { k }, opts), opts.threads)
}

/// Ensures `store` holds a `K_s`-saturated circulant for each order, running
/// a first-hit search where none is stored yet. Returns the orders still
/// without a base, each with whether its search space was exhausted.
pub fn seed_bases(
    store: &BaseStore,
    orders: impl IntoIterator<Item = usize>,
    s: usize,
    opts: &SearchOptions,
) -> Result<Vec<(usize, bool)>> {
    let opts = opts.mode(SearchMode::FirstHit);
    let mut gaps = Vec::new();
    for n in orders {
        if store.load(n, s)?.is_some() {
            continue;
        }
        let res = find_clique_circulants(n, s, &opts)?;
        match res.hits.first() {
            Some(hit) => store.store(&hit.set, s)?,
            None => gaps.push((n, res.exhausted)),
        }
    }
    Ok(gaps)
}

/// Whether some hit has exactly `elements`.
pub fn contains_set(result: &SearchResult, elements: &[usize]) -> bool {
    result.hits.iter().any(|h| h.set.elements() == elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> SearchOptions {
        SearchOptions::default().mode(SearchMode::AllHits)
    }

    #[test]
    fn cycle_set_examples() {
        let r = find_cycle_sets(17, 4, &SearchOptions::default()).unwrap();
        assert_eq!(r.hits.len(), 1);
        assert_eq!(r.hits[0].set.elements(), &[1, 3, 14, 16]);
        assert!(!r.exhausted);

        let r = find_cycle_sets(21, 4, &all()).unwrap();
        assert!(contains_set(&r, &[1, 6, 8, 13, 15, 20]));
        assert!(r.exhausted);

        let r = find_cycle_sets(19, 4, &SearchOptions::default().mode(SearchMode::CertifyEmpty)).unwrap();
        assert!(r.certified_empty());
        assert_eq!(r.nodes_expanded, (1 << 9) - 1);

        assert!(find_cycle_sets(17, 5, &all()).is_err());
    }

    #[test]
    fn clique_circulant_examples() {
        let r = find_clique_circulants(19, 4, &all()).unwrap();
        assert!(contains_set(&r, &[1, 2, 6, 8, 11, 13, 17, 18]));
        let r = find_clique_circulants(10, 3, &all()).unwrap();
        assert!(r.exhausted);
        let r = find_clique_circulants(17, 3, &all()).unwrap();
        assert!(contains_set(&r, &[6, 7, 8, 9, 10, 11]));
        assert!(r.hits.iter().all(|h| h.check.passed()));
    }

    #[test]
    fn complete_k1_examples() {
        assert!(contains_set(&find_complete_k1_sets(17, 4, &all()).unwrap(), &[1, 3, 14, 16]));
        assert!(contains_set(&find_complete_k1_sets(17, 2, &all()).unwrap(), &[6, 7, 8, 9, 10, 11]));
        assert!(contains_set(&find_complete_k1_sets(5, 2, &all()).unwrap(), &[1, 4]));
    }

    #[test]
    fn seeding_reports_gaps() {
        let store = BaseStore::in_memory();
        let gaps = seed_bases(&store, [10, 19, 20], 4, &SearchOptions::default()).unwrap();
        assert_eq!(gaps, vec![(10, true), (20, true)]);
        assert!(store.load(19, 4).unwrap().is_some());
    }

    #[test]
    fn budget_and_threads() {
        let r = find_cycle_sets(35, 4, &all().budget(100)).unwrap();
        assert!(!r.exhausted);
        assert_eq!(r.nodes_expanded, 100);

        let seq = find_clique_circulants(19, 4, &all()).unwrap();
        let par = find_clique_circulants(19, 4, &all().threads(4)).unwrap();
        assert_eq!(seq.hits, par.hits);
        assert_eq!(seq.nodes_expanded, par.nodes_expanded);

        let seq = find_cycle_sets(25, 4, &SearchOptions::default()).unwrap();
        let par = find_cycle_sets(25, 4, &SearchOptions::default().threads(3)).unwrap();
        assert_eq!(seq.hits, par.hits);
    }
}
