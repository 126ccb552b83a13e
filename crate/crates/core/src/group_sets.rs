//! Exact set arithmetic in the cyclic group `Z_n`.
//!
//! Residues are always stored as least residues `0..n`. Sumsets are folded
//! one summand at a time with cyclic bitset rotations, and the restricted
//! sumset `R_k(S)` is computed as the endpoint set of self-avoiding walks
//! from `0` in the circulant graph with connection set `S`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A connection set `S ⊂ Z_n \ {0}` closed under negation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SetRepr", into = "SetRepr")]
pub struct SymmetricSet {
    n: usize,
    elements: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SetRepr {
    n: usize,
    set: Vec<usize>,
}

impl TryFrom<SetRepr> for SymmetricSet {
    type Error = Error;

    fn try_from(r: SetRepr) -> Result<Self> {
        SymmetricSet::new(r.n, r.set)
    }
}

impl From<SymmetricSet> for SetRepr {
    fn from(s: SymmetricSet) -> Self {
        SetRepr {
            n: s.n,
            set: s.elements,
        }
    }
}

impl SymmetricSet {
    /// Validates and sorts `elements`. Zero, out-of-range residues, duplicates
    /// and sets not closed under negation are rejected rather than repaired.
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("modulus must be at least 3, got {n}")));
        }
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate element {} in set over Z_{n}", w[0])));
        }
        for &x in &elements {
            if x == 0 {
                return Err(Error::invalid("0 may not belong to a connection set"));
            }
            if x >= n {
                return Err(Error::invalid(format!("{x} is not a least residue mod {n}")));
            }
            if elements.binary_search(&(n - x)).is_err() {
                return Err(Error::invalid(format!(
                    "set over Z_{n} is not symmetric: {x} present but {} missing",
                    n - x
                )));
            }
        }
        Ok(SymmetricSet { n, elements })
    }

    /// Builds `{±x : x ∈ reps}`, reducing each representative mod `n` first.
    pub fn from_generators(n: usize, reps: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("modulus must be at least 3, got {n}")));
        }
        let mut all = Vec::new();
        for x in reps {
            let x = x % n;
            if x == 0 {
                return Err(Error::invalid("generator reduces to 0"));
            }
            all.push(x);
            all.push(n - x);
        }
        all.sort_unstable();
        all.dedup();
        SymmetricSet::new(n, all)
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&(x % self.n)).is_ok()
    }

    /// Elements below `n/2`, plus `n/2` itself when present.
    pub fn positive_half(&self) -> Vec<usize> {
        self.elements
            .iter()
            .copied()
            .filter(|&x| 2 * x <= self.n)
            .collect()
    }

    pub fn residues(&self) -> ResidueSet {
        ResidueSet::from_residues(self.n, self.elements.iter().copied())
    }
}

impl fmt::Debug for SymmetricSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetricSet({self})")
    }
}

/// Compact text form `n: a,b,c`.
impl fmt::Display for SymmetricSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.n)?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for SymmetricSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `n: a,b,...`, got {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad modulus {n:?}: {e}")))?;
        let elements = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad element {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SymmetricSet::new(n, elements)
    }
}

/// An arbitrary subset of `Z_n`, stored as an `n`-bit mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    n: usize,
    members: BitSet,
}

impl ResidueSet {
    pub fn empty(n: usize) -> Self {
        ResidueSet {
            n,
            members: BitSet::new(n),
        }
    }

    pub fn whole(n: usize) -> Self {
        ResidueSet {
            n,
            members: BitSet::full(n),
        }
    }

    /// Values are reduced mod `n` on insertion.
    pub fn from_residues(n: usize, values: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ResidueSet::empty(n);
        for v in values {
            s.insert(v);
        }
        s
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, x: usize) {
        self.members.insert(x % self.n);
    }

    pub fn remove(&mut self, x: usize) {
        self.members.remove(x % self.n);
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x % self.n)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &ResidueSet) -> ResidueSet {
        let mut m = self.members.clone();
        m.union_with(&other.members);
        ResidueSet { n: self.n, members: m }
    }

    pub fn intersection(&self, other: &ResidueSet) -> ResidueSet {
        ResidueSet {
            n: self.n,
            members: self.members.intersection(&other.members),
        }
    }

    pub fn difference(&self, other: &ResidueSet) -> ResidueSet {
        let mut m = self.members.clone();
        m.difference_with(&other.members);
        ResidueSet { n: self.n, members: m }
    }

    pub fn complement(&self) -> ResidueSet {
        ResidueSet {
            n: self.n,
            members: self.members.complement(),
        }
    }

    pub fn is_disjoint(&self, other: &ResidueSet) -> bool {
        !self.members.intersects(&other.members)
    }

    pub fn is_subset(&self, other: &ResidueSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The translate `self + g`.
    pub fn translated(&self, g: usize) -> ResidueSet {
        ResidueSet {
            n: self.n,
            members: self.members.rotated(g % self.n),
        }
    }

    /// `self + other` (one sumset fold).
    pub fn plus(&self, other: &ResidueSet) -> ResidueSet {
        debug_assert_eq!(self.n, other.n);
        let mut out = BitSet::new(self.n);
        for s in other.iter() {
            out.union_with(&self.members.rotated(s));
        }
        ResidueSet { n: self.n, members: out }
    }

    pub(crate) fn bits(&self) -> &BitSet {
        &self.members
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.n)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Anything that can be viewed as a subset of `Z_n`.
pub trait AsResidues {
    fn as_residues(&self) -> ResidueSet;
}

impl AsResidues for ResidueSet {
    fn as_residues(&self) -> ResidueSet {
        self.clone()
    }
}

impl AsResidues for SymmetricSet {
    fn as_residues(&self) -> ResidueSet {
        self.residues()
    }
}

/// `kS = {s_1 + ... + s_k}`, folded pairwise `k - 1` times.
pub fn sumset<S: AsResidues + ?Sized>(set: &S, k: usize) -> Result<ResidueSet> {
    let base = set.as_residues();
    if k == 0 {
        return Err(Error::invalid("sumset needs k >= 1"));
    }
    if base.is_empty() {
        return Err(Error::invalid("sumset of the empty set"));
    }
    let mut acc = base.clone();
    for _ in 1..k {
        acc = acc.plus(&base);
    }
    Ok(acc)
}

/// `[{0}, S, 2S, ..., kS]`.
pub(crate) fn sumset_layers(base: &ResidueSet, k: usize) -> Vec<ResidueSet> {
    let mut layers = Vec::with_capacity(k + 1);
    layers.push(ResidueSet::from_residues(base.modulus(), [0]));
    for j in 1..=k {
        let next = layers[j - 1].plus(base);
        layers.push(next);
    }
    layers
}

/// Recovers an ordered `j`-term representation of `x` from sumset layers.
fn decompose(layers: &[ResidueSet], steps: &[usize], mut x: usize, j: usize) -> Option<Vec<usize>> {
    let n = layers[0].modulus();
    if !layers[j].contains(x) {
        return None;
    }
    let mut terms = Vec::with_capacity(j);
    for level in (1..=j).rev() {
        let s = *steps
            .iter()
            .find(|&&s| layers[level - 1].contains((x + n - s) % n))?;
        terms.push(s);
        x = (x + n - s) % n;
    }
    terms.reverse();
    Some(terms)
}

/// Self-avoiding walk enumerator over the circulant graph `Cay(Z_n, S)`.
struct WalkSearch<'a> {
    n: usize,
    k: usize,
    steps: &'a [usize],
    /// `reach[r][p] = p + rS`
    reach: Vec<Vec<BitSet>>,
    visited: BitSet,
    pending: BitSet,
    found: BitSet,
}

impl<'a> WalkSearch<'a> {
    fn new(set: &'a SymmetricSet, k: usize, pending: BitSet) -> Self {
        let n = set.modulus();
        let layers = sumset_layers(&set.residues(), k);
        let reach = layers
            .iter()
            .map(|layer| (0..n).map(|p| layer.bits().rotated(p)).collect())
            .collect();
        let mut visited = BitSet::new(n);
        visited.insert(0);
        WalkSearch {
            n,
            k,
            steps: set.elements(),
            reach,
            visited,
            pending,
            found: BitSet::new(n),
        }
    }

    fn run(mut self) -> BitSet {
        if self.k >= 1 && !self.pending.is_empty() && self.reach[self.k][0].intersects(&self.pending) {
            self.extend(0, self.k);
        }
        self.found
    }

    fn extend(&mut self, p: usize, remaining: usize) {
        if remaining == 1 {
            let mut hit = self.reach[1][p].clone();
            hit.difference_with(&self.visited);
            hit.intersect_with(&self.pending);
            self.found.union_with(&hit);
            self.pending.difference_with(&hit);
            return;
        }
        for &s in self.steps {
            let q = (p + s) % self.n;
            if self.visited.contains(q) || !self.reach[remaining - 1][q].intersects(&self.pending) {
                continue;
            }
            self.visited.insert(q);
            self.extend(q, remaining - 1);
            self.visited.remove(q);
            if self.pending.is_empty() {
                return;
            }
        }
    }
}

/// Members of `targets` that lie in `R_k(S)`.
pub fn restricted_sumset_within(set: &SymmetricSet, k: usize, targets: &ResidueSet) -> Result<ResidueSet> {
    if k == 0 {
        return Err(Error::invalid("restricted sumset needs k >= 1"));
    }
    let n = set.modulus();
    let mut pending = targets.bits().clone();
    pending.remove(0);
    if set.is_empty() {
        return Ok(ResidueSet::empty(n));
    }
    let found = WalkSearch::new(set, k, pending).run();
    Ok(ResidueSet { n, members: found })
}

/// `R_k(S)`: sums `s_1 + ... + s_k` admitting an ordering with no vanishing
/// consecutive sub-sum.
pub fn restricted_sumset(set: &SymmetricSet, k: usize) -> Result<ResidueSet> {
    if k == 0 {
        return Err(Error::invalid("restricted sumset needs k >= 1"));
    }
    if set.is_empty() {
        return Ok(ResidueSet::empty(set.modulus()));
    }
    let candidates = sumset(set, k)?;
    restricted_sumset_within(set, k, &candidates)
}

/// An ordered summand sequence realizing `target ∈ R_k(S)`, if any.
pub fn restricted_walk(set: &SymmetricSet, k: usize, target: usize) -> Option<Vec<usize>> {
    let n = set.modulus();
    let target = target % n;
    if k == 0 || target == 0 || set.is_empty() {
        return None;
    }
    let mut walk = TargetedWalk {
        n,
        target,
        steps: set.elements(),
        layers: sumset_layers(&set.residues(), k),
        visited: BitSet::from_indices(n, [0]),
        terms: Vec::with_capacity(k),
    };
    walk.extend(0, k).then_some(walk.terms)
}

struct TargetedWalk<'a> {
    n: usize,
    target: usize,
    steps: &'a [usize],
    layers: Vec<ResidueSet>,
    visited: BitSet,
    terms: Vec<usize>,
}

impl TargetedWalk<'_> {
    fn extend(&mut self, p: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return p == self.target;
        }
        if !self.layers[remaining].contains((self.target + self.n - p) % self.n) {
            return false;
        }
        for &s in self.steps {
            let q = (p + s) % self.n;
            if self.visited.contains(q) {
                continue;
            }
            self.visited.insert(q);
            self.terms.push(s);
            if self.extend(q, remaining - 1) {
                return true;
            }
            self.terms.pop();
            self.visited.remove(q);
        }
        false
    }
}

pub fn is_sum_free(set: &SymmetricSet) -> bool {
    if set.is_empty() {
        return true;
    }
    let s = set.residues();
    s.plus(&s).is_disjoint(&s)
}

/// `S + S = Z_n \ S`.
pub fn is_complete_sum_free(set: &SymmetricSet) -> bool {
    if set.is_empty() {
        return false;
    }
    let s = set.residues();
    s.plus(&s) == s.complement()
}

/// `kS ∩ lS = ∅`.
pub fn is_kl_sum_free<S: AsResidues + ?Sized>(set: &S, k: usize, l: usize) -> Result<bool> {
    if k == l {
        return Err(Error::invalid("(k,l)-sum-free needs k != l"));
    }
    Ok(sumset(set, k)?.is_disjoint(&sumset(set, l)?))
}

/// `kS` and `lS` partition `Z_n`.
pub fn is_complete_kl<S: AsResidues + ?Sized>(set: &S, k: usize, l: usize) -> Result<bool> {
    if k == l {
        return Err(Error::invalid("complete (k,l)-sum-free needs k != l"));
    }
    let a = sumset(set, k)?;
    let b = sumset(set, l)?;
    Ok(a.is_disjoint(&b) && a.union(&b) == ResidueSet::whole(a.modulus()))
}

/// Outcome of checking the circulant cycle-saturation hypotheses
/// `R_k(S) = Z_n \ (S ∪ {0})` and `0 ∉ (k+1)S` for a given even `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub n: usize,
    pub k: usize,
    pub symmetric: bool,
    pub restricted_cover: bool,
    pub zero_free: bool,
    /// A residue outside `S ∪ {0}` missing from `R_k(S)`.
    pub uncovered: Option<usize>,
    /// A residue of `R_k(S)` that lies in `S`.
    pub spurious: Option<usize>,
    /// Ordered summands of a vanishing `(k+1)`-term sum.
    pub zero_sum: Option<Vec<usize>>,
}

impl HypothesisReport {
    pub fn holds(&self) -> bool {
        self.symmetric && self.restricted_cover && self.zero_free
    }
}

pub fn check_construction_hypotheses(set: &SymmetricSet, k: usize) -> Result<HypothesisReport> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::invalid(format!("hypotheses need an even k >= 2, got {k}")));
    }
    let n = set.modulus();
    let symmetric = SymmetricSet::new(n, set.elements().iter().copied()).is_ok();
    let mut report = HypothesisReport {
        n,
        k,
        symmetric,
        restricted_cover: false,
        zero_free: false,
        uncovered: None,
        spurious: None,
        zero_sum: None,
    };
    if set.is_empty() {
        report.uncovered = (1..n).next();
        report.zero_free = true;
        return Ok(report);
    }

    let base = set.residues();
    let layers = sumset_layers(&base, k + 1);
    report.zero_free = !layers[k + 1].contains(0);
    if !report.zero_free {
        report.zero_sum = decompose(&layers, set.elements(), 0, k + 1);
    }

    let mut target = base.complement();
    target.remove(0);
    if report.zero_free {
        // 0 ∉ (k+1)S with S = -S forces S ∩ kS = ∅, so only coverage is open.
        let found = restricted_sumset_within(set, k, &target)?;
        report.uncovered = target.difference(&found).iter().next();
    } else {
        let r = restricted_sumset_within(set, k, &layers[k])?;
        report.uncovered = target.difference(&r).iter().next();
        report.spurious = r.difference(&target).iter().next();
    }
    report.restricted_cover = report.uncovered.is_none() && report.spurious.is_none();
    Ok(report)
}

/// `S = {±(2αℓ + 1) : 0 ≤ ℓ ≤ k}` in `Z_n` with `n = 2α(α+4)k + 2α + 5`.
pub fn super_sum_set(alpha: usize, k: usize) -> Result<SymmetricSet> {
    if alpha == 0 || k == 0 {
        return Err(Error::invalid("super sum set needs alpha >= 1 and k >= 1"));
    }
    let n = super_sum_modulus(alpha, k);
    SymmetricSet::from_generators(n, (0..=k).map(|l| 2 * alpha * l + 1))
}

pub fn super_sum_modulus(alpha: usize, k: usize) -> usize {
    2 * alpha * (alpha + 4) * k + 2 * alpha + 5
}
