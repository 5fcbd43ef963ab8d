//! Exhaustive computation of `w(G)`, `W(G)`, `d(G)`, `D(G)` and `η(G)`.
//!
//! Zero-sum free sequences are grown one term at a time. A partial sequence `S`
//! is summarized by the pair `(Σ(S), σ(S))`: whether `S·T` is zero-sum free, and
//! what `σ(S·T)` is, depends on nothing else. The engine therefore memoizes, per
//! pair, the sets of numerator increments reachable by extensions (one mask for
//! zero-sum free extensions, one for extensions closed by `-σ` into a minimal
//! zero-sum sequence) together with the longest extension. Pairs are further
//! identified up to automorphisms of `G` when the support is the whole group.
//!
//! Every minimal zero-sum sequence `U` has the form `S·(-σ(S))` with `S = U·g⁻¹`
//! zero-sum free, and conversely, so `W(G)` is read off the same traversal.

use std::time::{Duration, Instant};

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteAbelianGroup, GroupElement, GroupError, DEFAULT_SUBGROUP_BOUND};
use crate::sequence::{CrossSet, CrossValue, Sequence};

/// Changes whenever the engine could produce different results; caches key on it.
pub const ENGINE_VERSION: &str = concat!("crossnum-engine/", env!("CARGO_PKG_VERSION"), "/memo-sigma");
/// Largest group the bitmask engine accepts.
pub const MAX_ENGINE_ORDER: u64 = 64;
/// Default cap on `|G|` for [`eta`].
pub const DEFAULT_ETA_BOUND: u64 = 32;
/// Cap on the number of automorphisms used to canonicalize memo keys.
const AUTOMORPHISM_LIMIT: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_states: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: 100_000_000, max_time: Duration::from_secs(30 * 60) }
    }
}

impl Budget {
    pub fn states(max_states: u64) -> Self {
        Budget { max_states, ..Budget::default() }
    }
}

/// Everything the engine learned before a budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialResult {
    /// Values proven present (from fully explored first terms).
    pub w_set: CrossSet,
    #[serde(rename = "W_set")]
    pub big_w_set: CrossSet,
    pub states_visited: u64,
    /// First terms whose subtree was not finished.
    pub frontier: Vec<GroupElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("group of order {cardinality} exceeds the engine bound {bound}")]
    TooLarge { cardinality: u64, bound: u64 },
    #[error("search budget exceeded after {} states", .0.states_visited)]
    BudgetExceeded(Box<PartialResult>),
    #[error("cross-number numerators exceed the engine's mask width")]
    NumeratorOverflow,
    #[error("support element {0} is not in the group")]
    ForeignSupport(GroupElement),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub w_set: CrossSet,
    #[serde(rename = "W_set")]
    pub big_w_set: CrossSet,
    pub d_small: u64,
    pub d_large: u64,
    /// `k(G) = max w(G)`; absent when `w(G)` is empty (trivial group or support).
    pub k_max: Option<CrossValue>,
    #[serde(rename = "K_max")]
    pub big_k_max: CrossValue,
    pub states_visited: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SequenceKind {
    ZeroSumFree,
    MinimalZeroSum,
}

/// Fixed-width set of small integers.
trait Mask: Copy + Eq + std::ops::BitOr<Output = Self> + std::ops::BitOrAssign {
    const ZERO: Self;
    fn bit(i: u64) -> Option<Self>;
    /// `{a + s : a ∈ self}`, or `None` if some value falls off the top.
    fn shifted(self, s: u64) -> Option<Self>;
    fn ones(self) -> Vec<u64>;
}

macro_rules! impl_mask {
    ($t:ty) => {
        impl Mask for $t {
            const ZERO: Self = 0;
            fn bit(i: u64) -> Option<Self> {
                (i < <$t>::BITS as u64).then(|| 1 << i)
            }
            fn shifted(self, s: u64) -> Option<Self> {
                if self == 0 {
                    return Some(0);
                }
                if s >= <$t>::BITS as u64 || self.leading_zeros() < s as u32 {
                    return None;
                }
                Some(self << s)
            }
            fn ones(self) -> Vec<u64> {
                (0..<$t>::BITS as u64).filter(|&i| self >> i & 1 == 1).collect()
            }
        }
    };
}
impl_mask!(u64);
impl_mask!(u128);

/// Precomputed tables of a group of order at most 64; elements are indices.
#[derive(Debug, Clone)]
pub(crate) struct Tables {
    pub group: FiniteAbelianGroup,
    pub n: usize,
    pub exp: u64,
    pub add: Vec<u8>,
    pub neg: Vec<u8>,
    /// `exp(G) / ord(g)`: the numerator contributed by one copy of `g`.
    pub weight: Vec<u64>,
    pub order: Vec<u64>,
    pub cyclic: bool,
}

impl Tables {
    pub fn new(group: &FiniteAbelianGroup, bound: u64) -> Result<Self, SearchError> {
        let card = group.cardinality();
        if card > bound.min(MAX_ENGINE_ORDER) {
            return Err(SearchError::TooLarge { cardinality: card, bound: bound.min(MAX_ENGINE_ORDER) });
        }
        let n = card as usize;
        let els: Vec<GroupElement> = group.elements().collect();
        let mut add = vec![0u8; n * n];
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                add[i * n + j] = group.index_of(&group.add(a, b)) as u8;
            }
        }
        let neg = els.iter().map(|a| group.index_of(&group.neg(a)) as u8).collect();
        let order: Vec<u64> = els.iter().map(|a| group.order(a)).collect();
        let exp = group.exponent();
        Ok(Tables {
            group: group.clone(),
            n,
            exp,
            add,
            neg,
            weight: order.iter().map(|o| exp / o).collect(),
            order,
            cyclic: group.is_cyclic(),
        })
    }

    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    /// `g + A` for a subset `A` given as a bitmask.
    #[inline]
    pub fn translate(&self, set: u64, g: usize) -> u64 {
        if g == 0 || set == 0 {
            return set;
        }
        if self.cyclic {
            // in C_n the index is the residue, so translation is a rotation
            let n = self.n as u32;
            let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            return ((set << g) | (set >> (n - g as u32))) & full;
        }
        let mut out = 0u64;
        let mut rest = set;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.sum(a, g);
        }
        out
    }

    fn apply_perm(perm: &[u8], set: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = set;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << perm[a];
        }
        out
    }

    /// Automorphisms as index permutations, identity first, at most `limit`
    /// of them.
    ///
    /// Any list containing the identity yields a sound memo key (two states with
    /// the same minimal image lie in one orbit); a longer list only merges more.
    pub fn automorphisms(&self, limit: usize) -> Vec<Vec<u8>> {
        let identity: Vec<u8> = (0..self.n as u8).collect();
        let factors = self.group.invariant_factors().to_vec();
        let r = factors.len();
        if r == 0 {
            return vec![identity];
        }
        // the i-th coordinate generator must go to an element of the same order
        let candidates: Vec<Vec<usize>> =
            factors.iter().map(|&ni| (0..self.n).filter(|&x| self.order[x] == ni).collect()).collect();
        // mixed-radix strides; index - stride[i] clears one unit of coordinate i
        let mut stride = vec![1usize; r];
        for i in (0..r.saturating_sub(1)).rev() {
            stride[i] = stride[i + 1] * factors[i + 1] as usize;
        }
        let last_nonzero: Vec<usize> = (0..self.n)
            .map(|idx| (0..r).rev().find(|&i| (idx / stride[i]) % factors[i] as usize != 0).unwrap_or(0))
            .collect();
        let mut out = vec![identity.clone()];
        let mut choice = vec![0usize; r];
        let mut perm = vec![0u8; self.n];
        loop {
            let images: Vec<usize> = (0..r).map(|i| candidates[i][choice[i]]).collect();
            let mut seen = 1u64;
            let mut injective = true;
            for idx in 1..self.n {
                let i = last_nonzero[idx];
                let img = self.sum(perm[idx - stride[i]] as usize, images[i]);
                if seen >> img & 1 == 1 {
                    injective = false;
                    break;
                }
                seen |= 1 << img;
                perm[idx] = img as u8;
            }
            if injective && perm != identity {
                out.push(perm.clone());
                if out.len() >= limit {
                    return out;
                }
            }
            let mut i = 0;
            loop {
                if i == r {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

#[derive(Clone, Copy)]
struct Entry<M> {
    zsf: M,
    closed: M,
    longest: u8,
}

enum Abort {
    Budget,
    Overflow,
}

/// An automorphism acting on element indices and, bytewise, on subset masks.
struct Relabeling {
    images: Vec<u8>,
    byte_images: Vec<[u64; 256]>,
}

impl Relabeling {
    fn new(images: Vec<u8>) -> Self {
        let n = images.len();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let byte_images = (0..n.div_ceil(8))
            .map(|chunk| {
                let mut table = [0u64; 256];
                for (byte, slot) in table.iter_mut().enumerate() {
                    *slot = Tables::apply_perm(&images, ((byte as u64) << (8 * chunk)) & full);
                }
                table
            })
            .collect();
        Relabeling { images, byte_images }
    }

    #[inline]
    fn apply(&self, set: u64) -> u64 {
        self.byte_images
            .iter()
            .enumerate()
            .fold(0, |acc, (chunk, table)| acc | table[(set >> (8 * chunk)) as usize & 0xff])
    }
}

struct Engine<'a, M> {
    t: &'a Tables,
    support: u64,
    /// Non-identity automorphisms used for canonical keys.
    autos: Vec<Relabeling>,
    /// Entries under canonical keys and, as a shortcut, under raw keys seen so far.
    memo: FxHashMap<(u64, u8), Entry<M>>,
    /// Number of distinct canonical states expanded.
    states: u64,
    budget: Budget,
    started: Instant,
}

impl<'a, M: Mask> Engine<'a, M> {
    fn new(t: &'a Tables, support: u64, budget: Budget) -> Self {
        let full = if t.n == 64 { u64::MAX } else { (1u64 << t.n) - 1 } & !1;
        let autos = if support == full {
            t.automorphisms(AUTOMORPHISM_LIMIT).into_iter().skip(1).map(Relabeling::new).collect()
        } else {
            Vec::new()
        };
        Engine {
            t,
            support,
            autos,
            memo: FxHashMap::default(),
            states: 0,
            budget,
            started: Instant::now(),
        }
    }

    fn canonical(&self, sums: u64, total: u8) -> (u64, u8) {
        let mut best = (sums, total);
        for perm in &self.autos {
            let key = (perm.apply(sums), perm.images[total as usize]);
            if key < best {
                best = key;
            }
        }
        best
    }

    fn explore(&mut self, sums: u64, total: usize) -> Result<Entry<M>, Abort> {
        let raw = (sums, total as u8);
        if let Some(e) = self.memo.get(&raw) {
            return Ok(*e);
        }
        let key = self.canonical(sums, total as u8);
        if let Some(&e) = self.memo.get(&key) {
            self.memo.insert(raw, e);
            return Ok(e);
        }
        if self.states >= self.budget.max_states
            || (self.states % 1024 == 0 && self.started.elapsed() > self.budget.max_time)
        {
            return Err(Abort::Budget);
        }
        self.states += 1;
        let t = self.t;
        let closing = t.neg[total] as usize;
        let mut entry = Entry {
            zsf: M::bit(0).ok_or(Abort::Overflow)?,
            closed: M::bit(t.weight[closing]).ok_or(Abort::Overflow)?,
            longest: 0,
        };
        let mut candidates = self.support;
        while candidates != 0 {
            let g = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            // -g ∈ Σ(S) would make S·g contain a zero-sum subsequence
            if sums >> t.neg[g] & 1 == 1 {
                continue;
            }
            let next = sums | t.translate(sums, g) | (1 << g);
            let child = self.explore(next, t.sum(total, g))?;
            let w = t.weight[g];
            entry.zsf |= child.zsf.shifted(w).ok_or(Abort::Overflow)?;
            entry.closed |= child.closed.shifted(w).ok_or(Abort::Overflow)?;
            entry.longest = entry.longest.max(child.longest + 1);
        }
        self.memo.insert(key, entry);
        self.memo.insert(raw, entry);
        Ok(entry)
    }

    fn run(&mut self) -> Result<SearchResult, (Abort, PartialResult)> {
        let t = self.t;
        let exp = t.exp;
        let mut zsf = M::ZERO;
        let mut closed = M::bit(exp).unwrap_or(M::ZERO);
        let mut longest = 0u8;
        let first_terms: Vec<usize> = (0..t.n).filter(|&g| self.support >> g & 1 == 1).collect();
        for (pos, &g) in first_terms.iter().enumerate() {
            let outcome = self.explore(1 << g, g).and_then(|child| {
                let w = t.weight[g];
                Ok((
                    child.zsf.shifted(w).ok_or(Abort::Overflow)?,
                    child.closed.shifted(w).ok_or(Abort::Overflow)?,
                    child.longest + 1,
                ))
            });
            match outcome {
                Ok((a, b, l)) => {
                    zsf |= a;
                    closed |= b;
                    longest = longest.max(l);
                }
                Err(abort) => {
                    let partial = PartialResult {
                        w_set: CrossSet::from_numerators(exp, zsf.ones()),
                        big_w_set: CrossSet::from_numerators(exp, closed.ones()),
                        states_visited: self.states,
                        frontier: first_terms[pos..].iter().map(|&i| t.group.element_at(i)).collect(),
                    };
                    return Err((abort, partial));
                }
            }
        }
        let w_set = CrossSet::from_numerators(exp, zsf.ones());
        let big_w_set = CrossSet::from_numerators(exp, closed.ones());
        Ok(SearchResult {
            k_max: w_set.max(),
            big_k_max: big_w_set.max().expect("the sequence (0) is always counted"),
            w_set,
            big_w_set,
            d_small: longest as u64,
            d_large: longest as u64 + 1,
            states_visited: self.states,
        })
    }
}

fn support_mask(t: &Tables, support: Option<&[GroupElement]>) -> Result<u64, SearchError> {
    let full = if t.n == 64 { u64::MAX } else { (1u64 << t.n) - 1 };
    match support {
        None => Ok(full & !1),
        Some(els) => {
            let mut mask = 0u64;
            for g in els {
                if !t.group.contains(g) {
                    return Err(SearchError::ForeignSupport(g.clone()));
                }
                mask |= 1 << t.group.index_of(g);
            }
            Ok(mask & !1)
        }
    }
}

/// Computes `w`, `W`, `d`, `D` over sequences supported on `support`
/// (default `G \ {0}`); denominators are always `exp(G)`.
pub fn enumerate(
    group: &FiniteAbelianGroup,
    support: Option<&[GroupElement]>,
    budget: Budget,
) -> Result<SearchResult, SearchError> {
    let t = Tables::new(group, MAX_ENGINE_ORDER)?;
    let mask = support_mask(&t, support)?;
    let fail = |abort: Abort, partial: PartialResult| match abort {
        Abort::Budget => SearchError::BudgetExceeded(Box::new(partial)),
        Abort::Overflow => SearchError::NumeratorOverflow,
    };
    match Engine::<u64>::new(&t, mask, budget).run() {
        Ok(r) => Ok(r),
        Err((Abort::Overflow, _)) => Engine::<u128>::new(&t, mask, budget).run().map_err(|(a, p)| fail(a, p)),
        Err((a, p)) => Err(fail(a, p)),
    }
}

/// Looks for a sequence of the requested kind with cross number `target`.
///
/// Depth-first in canonical order, pruning branches whose numerator cannot
/// reach the target: every further term adds at most the largest weight and
/// grows `Σ` by at least one element.
pub fn membership(
    group: &FiniteAbelianGroup,
    target: CrossValue,
    kind: SequenceKind,
    support: Option<&[GroupElement]>,
    budget: Budget,
) -> Result<Option<Sequence>, SearchError> {
    let t = Tables::new(group, MAX_ENGINE_ORDER)?;
    let mask = support_mask(&t, support)?;
    let Some(target) = target.rescale(t.exp) else {
        return Ok(None);
    };
    let mut finder = Finder {
        t: &t,
        support: mask,
        kind,
        max_weight: (0..t.n).filter(|&g| mask >> g & 1 == 1).map(|g| t.weight[g]).max().unwrap_or(0),
        failed: FxHashSet::default(),
        budget,
        started: Instant::now(),
        visited: 0,
    };
    let mut path = Vec::new();
    match finder.find(0, 0, target.numerator, &mut path) {
        Ok(true) => {
            let els: Vec<GroupElement> = path.iter().map(|&i| t.group.element_at(i)).collect();
            Ok(Some(Sequence::from_elements(group, &els).expect("indices come from the group")))
        }
        Ok(false) => Ok(None),
        Err(()) => Err(SearchError::BudgetExceeded(Box::new(PartialResult {
            w_set: CrossSet::new(t.exp),
            big_w_set: CrossSet::new(t.exp),
            states_visited: finder.visited,
            frontier: Vec::new(),
        }))),
    }
}

struct Finder<'a> {
    t: &'a Tables,
    support: u64,
    kind: SequenceKind,
    max_weight: u64,
    failed: FxHashSet<(u64, u8, u64)>,
    budget: Budget,
    started: Instant,
    visited: u64,
}

impl Finder<'_> {
    fn find(&mut self, sums: u64, total: usize, need: u64, path: &mut Vec<usize>) -> Result<bool, ()> {
        let t = self.t;
        match self.kind {
            SequenceKind::ZeroSumFree if need == 0 => return Ok(sums != 0),
            SequenceKind::MinimalZeroSum => {
                let closing = t.neg[total] as usize;
                if t.weight[closing] == need {
                    path.push(closing);
                    return Ok(true);
                }
            }
            _ => {}
        }
        let slots = (t.n as u64 - 1).saturating_sub(sums.count_ones() as u64);
        let closing_bonus = if self.kind == SequenceKind::MinimalZeroSum { t.exp } else { 0 };
        if need > slots * self.max_weight + closing_bonus {
            return Ok(false);
        }
        let key = (sums, total as u8, need);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        self.visited += 1;
        if self.visited >= self.budget.max_states
            || (self.visited % 4096 == 0 && self.started.elapsed() > self.budget.max_time)
        {
            return Err(());
        }
        let mut candidates = self.support;
        while candidates != 0 {
            let g = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let w = t.weight[g];
            if sums >> t.neg[g] & 1 == 1 || w > need {
                continue;
            }
            path.push(g);
            let next = sums | t.translate(sums, g) | (1 << g);
            if self.find(next, t.sum(total, g), need - w, path)? {
                return Ok(true);
            }
            path.pop();
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// `η(G)`: one more than the longest sequence without a zero-sum subsequence of
/// length in `[1, exp(G)]`.
///
/// The state records, for every element `h`, the set of lengths `≤ exp(G)` of
/// nonempty subsequences summing to `h`. Lengths above `exp(G)` are dropped;
/// they never become short again.
pub fn eta(group: &FiniteAbelianGroup, bound: u64, budget: Budget) -> Result<u64, SearchError> {
    let t = Tables::new(group, bound)?;
    if t.n == 1 {
        return Ok(1);
    }
    let cap = t.exp;
    if cap >= 64 {
        return Err(SearchError::NumeratorOverflow);
    }
    let mut search = EtaSearch {
        t: &t,
        length_mask: ((1u64 << (cap + 1)) - 1) & !1,
        memo: FxHashMap::default(),
        budget,
        started: Instant::now(),
    };
    let root = vec![0u64; t.n];
    let longest = search.longest(&root).map_err(|()| {
        SearchError::BudgetExceeded(Box::new(PartialResult {
            w_set: CrossSet::new(t.exp),
            big_w_set: CrossSet::new(t.exp),
            states_visited: search.memo.len() as u64,
            frontier: Vec::new(),
        }))
    })?;
    Ok(longest + 1)
}

struct EtaSearch<'a> {
    t: &'a Tables,
    length_mask: u64,
    memo: FxHashMap<Vec<u64>, u64>,
    budget: Budget,
    started: Instant,
}

impl EtaSearch<'_> {
    /// Longest extension of a sequence with the given length profile that keeps
    /// `0` free of short representations.
    fn longest(&mut self, profile: &[u64]) -> Result<u64, ()> {
        if let Some(&v) = self.memo.get(profile) {
            return Ok(v);
        }
        if self.memo.len() as u64 >= self.budget.max_states
            || (self.memo.len() % 1024 == 0 && self.started.elapsed() > self.budget.max_time)
        {
            return Err(());
        }
        let t = self.t;
        let mut best = 0;
        for g in 1..t.n {
            let mut next = profile.to_vec();
            for h in 0..t.n {
                let from = t.sum(h, t.neg[g] as usize);
                next[h] |= (profile[from] << 1) & self.length_mask;
            }
            next[g] |= 0b10;
            if next[0] != 0 {
                continue;
            }
            best = best.max(1 + self.longest(&next)?);
        }
        self.memo.insert(profile.to_vec(), best);
        Ok(best)
    }
}

/// One search per subgroup `H`, with support `H \ {0}`; denominators stay `exp(G)`.
pub fn enumerate_subgroup_profiles(
    group: &FiniteAbelianGroup,
    budget: Budget,
) -> Result<Vec<(FiniteAbelianGroup, Vec<GroupElement>, SearchResult)>, SearchError> {
    let mut out = Vec::new();
    for h in group.subgroups(DEFAULT_SUBGROUP_BOUND)? {
        let class = group.iso_class(&h)?;
        let result = enumerate(group, Some(&h), budget)?;
        out.push((class, h, result));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_orders(orders).unwrap()
    }

    fn run(orders: &[u64]) -> SearchResult {
        enumerate(&grp(orders), None, Budget::default()).unwrap()
    }

    fn nums(s: &CrossSet) -> Vec<u64> {
        s.numerators.iter().copied().collect()
    }

    #[test]
    fn c4() {
        let r = run(&[4]);
        assert_eq!(nums(&r.w_set), vec![1, 2, 3]);
        assert_eq!(nums(&r.big_w_set), vec![2, 4]);
        assert_eq!(r.d_large, 4);
        assert_eq!(r.k_max, Some(CrossValue::new(3, 4)));
    }

    #[test]
    fn c3_c3() {
        let r = run(&[3, 3]);
        assert_eq!(nums(&r.w_set), vec![1, 2, 3, 4]);
        assert_eq!(nums(&r.big_w_set), vec![2, 3, 4, 5]);
        assert_eq!(r.d_large, 5);
    }

    #[test]
    fn c6() {
        let r = run(&[6]);
        assert_eq!(nums(&r.big_w_set), vec![2, 4, 6, 8]);
        assert_eq!(nums(&r.w_set), (1..=7).collect::<Vec<_>>());
    }

    #[test]
    fn trivial_group() {
        let r = enumerate(&FiniteAbelianGroup::trivial(), None, Budget::default()).unwrap();
        assert!(r.w_set.is_empty());
        assert_eq!(nums(&r.big_w_set), vec![1]);
        assert_eq!((r.d_small, r.d_large), (0, 1));
        assert_eq!(r.k_max, None);
    }

    #[test]
    fn automorphism_counts() {
        let count = |o: &[u64]| Tables::new(&grp(o), 64).unwrap().automorphisms(usize::MAX).len();
        assert_eq!(count(&[33]), 20);
        assert_eq!(count(&[2, 2]), 6);
        assert_eq!(count(&[3, 3]), 48);
        assert_eq!(count(&[2, 4]), 8);
        assert_eq!(count(&[2, 2, 2]), 168);
    }

    #[test]
    fn automorphism_reduction_does_not_change_results() {
        for orders in [&[2u64, 4][..], &[3, 3], &[2, 2, 2], &[12], &[2, 6]] {
            let g = grp(orders);
            let all: Vec<GroupElement> = g.elements().collect();
            let t = Tables::new(&g, 64).unwrap();
            let full = support_mask(&t, Some(&all)).unwrap();
            let mut plain = Engine::<u64>::new(&t, full, Budget::default());
            plain.autos.clear();
            let a = plain.run().ok().unwrap();
            let b = enumerate(&g, None, Budget::default()).unwrap();
            assert_eq!((a.w_set, a.big_w_set, a.d_small), (b.w_set, b.big_w_set, b.d_small));
            assert!(b.states_visited <= a.states_visited);
        }
    }

    #[test]
    fn subgroup_support_keeps_denominator() {
        let g = grp(&[6]);
        let h: Vec<GroupElement> = [0, 2, 4].iter().map(|&c| g.element(&[c]).unwrap()).collect();
        let r = enumerate(&g, Some(&h), Budget::default()).unwrap();
        assert_eq!(r.w_set.denominator, 6);
        assert_eq!(nums(&r.w_set), vec![2, 4]);
        let trivial = enumerate(&g, Some(&[g.zero()]), Budget::default()).unwrap();
        assert!(trivial.w_set.is_empty());
        let profiles = enumerate_subgroup_profiles(&g, Budget::default()).unwrap();
        assert_eq!(profiles.len(), 4);
        assert_eq!(profiles.last().unwrap().2, run(&[6]));
    }

    #[test]
    fn budget_exceeded_reports_frontier() {
        match enumerate(&grp(&[3, 9]), None, Budget::states(10)) {
            Err(SearchError::BudgetExceeded(p)) => {
                assert!(!p.frontier.is_empty());
                assert!(p.states_visited <= 10);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(matches!(
            enumerate(&grp(&[5, 25]), None, Budget::default()),
            Err(SearchError::TooLarge { cardinality: 125, .. })
        ));
    }

    #[test]
    fn membership_examples() {
        let c9 = grp(&[9]);
        let s = membership(&c9, CrossValue::new(1, 1), SequenceKind::MinimalZeroSum, None, Budget::default())
            .unwrap()
            .unwrap();
        assert!(s.is_minimal_zero_sum());
        assert_eq!(s.cross_number(), CrossValue::new(9, 9));
        let c4 = grp(&[4]);
        assert!(membership(&c4, CrossValue::new(3, 4), SequenceKind::MinimalZeroSum, None, Budget::default())
            .unwrap()
            .is_none());
        let s = membership(&c4, CrossValue::new(3, 4), SequenceKind::ZeroSumFree, None, Budget::default())
            .unwrap()
            .unwrap();
        assert!(s.is_zero_sum_free() && s.cross_number() == CrossValue::new(3, 4));
        // not representable over exp(G)
        assert!(membership(&c4, CrossValue::new(1, 3), SequenceKind::ZeroSumFree, None, Budget::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn every_reported_value_has_a_witness() {
        for orders in [&[6u64][..], &[2, 4], &[3, 3], &[8]] {
            let g = grp(orders);
            let r = run(orders);
            for (set, kind) in [(&r.w_set, SequenceKind::ZeroSumFree), (&r.big_w_set, SequenceKind::MinimalZeroSum)] {
                for v in set.values() {
                    let s = membership(&g, v, kind, None, Budget::default()).unwrap().unwrap();
                    assert_eq!(s.cross_number(), v);
                    match kind {
                        SequenceKind::ZeroSumFree => assert!(s.is_zero_sum_free() && !s.is_trivial()),
                        SequenceKind::MinimalZeroSum => assert!(s.is_minimal_zero_sum()),
                    }
                }
                let above = set.max().unwrap().numerator + 1;
                assert!(membership(&g, CrossValue::new(above, g.exponent()), kind, None, Budget::default())
                    .unwrap()
                    .is_none());
            }
        }
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&grp(&[2]), 32, Budget::default()).unwrap(), 2);
        assert_eq!(eta(&grp(&[3]), 32, Budget::default()).unwrap(), 3);
        assert_eq!(eta(&grp(&[3, 3]), 32, Budget::default()).unwrap(), 7);
        assert_eq!(eta(&grp(&[2, 2]), 32, Budget::default()).unwrap(), 4);
    }
}
