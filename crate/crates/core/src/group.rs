//! Finite abelian groups presented by invariant factors, and their elements.
//!
//! A group is stored as its canonical chain `n_1 | n_2 | ... | n_r`; elements
//! are residue vectors against that chain. Elements are totally ordered
//! lexicographically on their coordinates, and the index of an element in
//! [`FiniteAbelianGroup::elements`] is its mixed-radix value, so index order
//! and the lexicographic order agree. The zero element always has index 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{factorize, invariant_factor_chains, lcm, prime_power_base, valuation};

/// Default cap on `|G|` for subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cyclic orders must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("element {coords:?} does not belong to a group with invariant factors {factors:?}")]
    InvalidElement { coords: Vec<i64>, factors: Vec<u64> },
    #[error("no element g0 with {p}*g0 = g and larger p-valuation: v_{p}(ord g) already equals v_{p}(n)")]
    NoLift { p: u64 },
    #[error("operation needs a cyclic group, got {0}")]
    NotCyclic(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group of order {cardinality} exceeds the bound {bound}")]
    TooLarge { cardinality: u64, bound: u64 },
    #[error("the given element set is not a finite abelian group")]
    NotAGroup,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// `⊕ C_{n_i}` with `n_1 | ... | n_r`, every `n_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
    prime_power_factors: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Summary numbers of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupStats {
    pub cardinality: u64,
    pub exponent: u64,
    pub rank: usize,
    pub total_rank: usize,
    /// `(p, r_p(G))` for every prime dividing the exponent.
    pub p_ranks: Vec<(u64, usize)>,
}

/// A homomorphism given by the images of the coordinate generators of its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: FiniteAbelianGroup,
    target: FiniteAbelianGroup,
    images: Vec<GroupElement>,
}

impl Homomorphism {
    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        &self.target
    }

    pub fn apply(&self, g: &GroupElement) -> GroupElement {
        let mut acc = self.target.zero();
        for (c, img) in g.coords.iter().zip(&self.images) {
            acc = self.target.add(&acc, &self.target.scale(*c, img));
        }
        acc
    }
}

/// `G1 ⊕ G2` in canonical form together with the two coordinate embeddings.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub group: FiniteAbelianGroup,
    pub left: Homomorphism,
    pub right: Homomorphism,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new(), prime_power_factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Result<Self, GroupError> {
        Self::from_orders(&[n])
    }

    /// Normalizes `⊕ C_{orders[i]}` to its invariant-factor chain.
    pub fn from_orders(orders: &[u64]) -> Result<Self, GroupError> {
        Self::with_generators(orders).map(|(g, _)| g)
    }

    /// Like [`from_orders`](Self::from_orders), but also returns, for each input
    /// cyclic factor, the image of its generator in the canonical group. The
    /// images are independent and `images[i]` has order `orders[i]`.
    ///
    /// Prime-power parts are grouped per prime, sorted, and distributed
    /// largest-to-largest onto the invariant factors.
    pub fn with_generators(orders: &[u64]) -> Result<(Self, Vec<GroupElement>), GroupError> {
        if let Some(&bad) = orders.iter().find(|&&m| m < 2) {
            return Err(GroupError::InvalidOrder(bad));
        }
        // prime -> [(p^a, source index)]
        let mut parts: BTreeMap<u64, Vec<(u64, usize)>> = BTreeMap::new();
        for (j, &m) in orders.iter().enumerate() {
            for (p, a) in factorize(m) {
                parts.entry(p).or_default().push((p.pow(a), j));
            }
        }
        let rank = parts.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        // (factor index, prime-power part) assigned to each source
        let mut placement: Vec<Vec<(usize, u64)>> = vec![Vec::new(); orders.len()];
        for list in parts.values_mut() {
            list.sort();
            let offset = rank - list.len();
            for (t, &(q, j)) in list.iter().enumerate() {
                factors[offset + t] *= q;
                placement[j].push((offset + t, q));
            }
        }
        let mut prime_power_factors: Vec<u64> =
            parts.values().flat_map(|l| l.iter().map(|&(q, _)| q)).collect();
        prime_power_factors.sort_unstable();
        let group = FiniteAbelianGroup { invariant_factors: factors, prime_power_factors };
        let images = placement
            .iter()
            .map(|slots| {
                let mut coords = vec![0u64; rank];
                for &(i, q) in slots {
                    let n = group.invariant_factors[i];
                    coords[i] = (coords[i] + n / q) % n;
                }
                GroupElement { coords }
            })
            .collect();
        Ok((group, images))
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    /// The prime powers `q_1 <= ... <= q_s` with `G ≅ ⊕ C_{q_i}`.
    pub fn prime_power_factors(&self) -> &[u64] {
        &self.prime_power_factors
    }

    pub fn cardinality(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn total_rank(&self) -> usize {
        self.prime_power_factors.len()
    }

    pub fn p_rank(&self, p: u64) -> usize {
        self.prime_power_factors.iter().filter(|&&q| prime_power_base(q) == Some(p)).count()
    }

    /// Primes dividing `|G|`, ascending.
    pub fn primes(&self) -> Vec<u64> {
        factorize(self.exponent()).into_iter().map(|(p, _)| p).collect()
    }

    pub fn stats(&self) -> GroupStats {
        GroupStats {
            cardinality: self.cardinality(),
            exponent: self.exponent(),
            rank: self.rank(),
            total_rank: self.total_rank(),
            p_ranks: self.primes().into_iter().map(|p| (p, self.p_rank(p))).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    /// The prime `p` if this is a non-trivial `p`-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        prime_power_base(self.exponent())
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.rank()] }
    }

    /// Builds an element from (possibly negative or unreduced) coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement, GroupError> {
        if coords.len() != self.rank() {
            return Err(GroupError::InvalidElement {
                coords: coords.to_vec(),
                factors: self.invariant_factors.clone(),
            });
        }
        let coords = coords
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.coords.len() == self.rank()
            && g.coords.iter().zip(&self.invariant_factors).all(|(c, n)| c < n)
    }

    /// Mixed-radix index; agrees with the lexicographic order.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.coords
            .iter()
            .zip(&self.invariant_factors)
            .fold(0u64, |acc, (&c, &n)| acc * n + c) as usize
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0u64; self.rank()];
        for (slot, &n) in coords.iter_mut().zip(&self.invariant_factors).rev() {
            *slot = index as u64 % n;
            index /= n as usize;
        }
        GroupElement { coords }
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.cardinality() as usize).map(move |i| self.element_at(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.invariant_factors)
            .map(|((x, y), n)| (x + y) % n)
            .collect();
        GroupElement { coords }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let coords =
            a.coords.iter().zip(&self.invariant_factors).map(|(x, n)| (n - x) % n).collect();
        GroupElement { coords }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, m: u64, a: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&self.invariant_factors)
            .map(|(x, n)| ((*x as u128 * m as u128) % *n as u128) as u64)
            .collect();
        GroupElement { coords }
    }

    /// `lcm_i(n_i / gcd(n_i, c_i))`.
    pub fn order(&self, g: &GroupElement) -> u64 {
        g.coords
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&c, &n)| n / crate::arith::gcd(n, c))
            .fold(1, lcm)
    }

    /// Independent generators `e_1, ..., e_s` with `ord(e_i) = q_i`, paired with `q_i`,
    /// in the order of [`prime_power_factors`](Self::prime_power_factors).
    pub fn prime_power_basis(&self) -> Vec<(u64, GroupElement)> {
        let mut basis = Vec::new();
        for (i, &n) in self.invariant_factors.iter().enumerate() {
            for (p, a) in factorize(n) {
                let q = p.pow(a);
                let mut coords = vec![0; self.rank()];
                coords[i] = n / q;
                basis.push((q, GroupElement { coords }));
            }
        }
        // stable: ties keep factor order
        basis.sort_by_key(|(q, _)| *q);
        basis
    }

    /// In a cyclic group `C_n`, finds the first `g0` (canonical order) with
    /// `p * g0 = g` and `ord(g0) = p * ord(g)`.
    pub fn prime_divide(&self, p: u64, g: &GroupElement) -> Result<GroupElement, GroupError> {
        if !self.is_cyclic() {
            return Err(GroupError::NotCyclic(self.to_string()));
        }
        if !crate::arith::is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let n = self.exponent();
        let ord = self.order(g);
        if n % p != 0 || valuation(p, ord) >= valuation(p, n) {
            return Err(GroupError::NoLift { p });
        }
        self.elements()
            .find(|x| &self.scale(p, x) == g && self.order(x) == p * ord)
            .ok_or(GroupError::NoLift { p })
    }

    /// `self ⊕ other`, normalized, with order-preserving embeddings of both summands.
    pub fn direct_sum(&self, other: &FiniteAbelianGroup) -> DirectSum {
        let orders: Vec<u64> =
            self.invariant_factors.iter().chain(&other.invariant_factors).copied().collect();
        let (group, images) = Self::with_generators(&orders).expect("invariant factors are >= 2");
        let (left_images, right_images) = images.split_at(self.rank());
        DirectSum {
            left: Homomorphism {
                source: self.clone(),
                target: group.clone(),
                images: left_images.to_vec(),
            },
            right: Homomorphism {
                source: other.clone(),
                target: group.clone(),
                images: right_images.to_vec(),
            },
            group,
        }
    }

    fn check_bound(&self, bound: u64) -> Result<(), GroupError> {
        if self.cardinality() > bound {
            return Err(GroupError::TooLarge { cardinality: self.cardinality(), bound });
        }
        Ok(())
    }

    fn span(&self, gens: &FixedBitSet) -> FixedBitSet {
        let card = self.cardinality() as usize;
        let mut set = FixedBitSet::with_capacity(card);
        set.insert(0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            let gx = self.element_at(x);
            for gi in gens.ones() {
                let y = self.index_of(&self.add(&gx, &self.element_at(gi)));
                if !set.put(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// All subgroups as sorted element lists, ordered by size then lexicographically.
    ///
    /// Built by closing the set of cyclic subgroups under joins.
    pub fn subgroups(&self, bound: u64) -> Result<Vec<Vec<GroupElement>>, GroupError> {
        self.check_bound(bound)?;
        let card = self.cardinality() as usize;
        let single = |i: usize| {
            let mut s = FixedBitSet::with_capacity(card);
            s.insert(i);
            s
        };
        let cyclic: BTreeSet<Vec<usize>> =
            (0..card).map(|i| self.span(&single(i)).ones().collect()).collect();
        let mut all: BTreeSet<Vec<usize>> = cyclic.clone();
        let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
        while let Some(sub) = frontier.pop() {
            for c in &cyclic {
                if c.iter().all(|x| sub.binary_search(x).is_ok()) {
                    continue;
                }
                let mut gens = FixedBitSet::with_capacity(card);
                gens.extend(sub.iter().copied());
                gens.extend(c.iter().copied());
                let joined: Vec<usize> = self.span(&gens).ones().collect();
                if all.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = all.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out.into_iter().map(|s| s.into_iter().map(|i| self.element_at(i)).collect()).collect())
    }

    /// Recovers the isomorphism type of a subgroup given by its elements.
    pub fn iso_class(&self, elements: &[GroupElement]) -> Result<FiniteAbelianGroup, GroupError> {
        let set: BTreeSet<&GroupElement> = elements.iter().collect();
        let closed = set.contains(&self.zero())
            && set.iter().all(|a| self.contains(a) && set.contains(&self.neg(a)))
            && set.iter().all(|a| set.iter().all(|b| set.contains(&self.add(a, b))));
        if !closed {
            return Err(GroupError::NotAGroup);
        }
        let mut stats: BTreeMap<u64, u64> = BTreeMap::new();
        for g in &set {
            *stats.entry(self.order(g)).or_default() += 1;
        }
        iso_class_from_order_stats(set.len() as u64, &stats)
    }

    /// Isomorphism type of `G / H` for a subgroup `H` given by its elements.
    pub fn quotient_class(&self, subgroup: &[GroupElement]) -> Result<FiniteAbelianGroup, GroupError> {
        let sub = self.iso_class(subgroup)?;
        let h: BTreeSet<&GroupElement> = subgroup.iter().collect();
        let card = self.cardinality() / sub.cardinality();
        // every coset has |H| representatives; count each coset's order |H| times
        let mut stats: BTreeMap<u64, u64> = BTreeMap::new();
        for g in self.elements() {
            let m = (1..=self.order(&g)).find(|&m| h.contains(&self.scale(m, &g))).unwrap_or(1);
            *stats.entry(m).or_default() += 1;
        }
        let stats = stats.into_iter().map(|(m, c)| (m, c / sub.cardinality())).collect();
        iso_class_from_order_stats(card, &stats)
    }
}

/// Element-order counts of `⊕ C_{n_i}`, computed by multiplicativity over cyclic factors.
pub fn order_statistics(factors: &[u64]) -> BTreeMap<u64, u64> {
    let mut stats: BTreeMap<u64, u64> = BTreeMap::from([(1, 1)]);
    for &n in factors {
        let cyc: Vec<(u64, u64)> = crate::arith::divisors(n)
            .into_iter()
            .map(|d| (d, (1..=d).filter(|&x| crate::arith::gcd(x, d) == 1).count() as u64))
            .collect();
        let mut next: BTreeMap<u64, u64> = BTreeMap::new();
        for (&o, &c) in &stats {
            for &(d, k) in &cyc {
                *next.entry(lcm(o, d)).or_default() += c * k;
            }
        }
        stats = next;
    }
    stats
}

fn iso_class_from_order_stats(
    cardinality: u64,
    stats: &BTreeMap<u64, u64>,
) -> Result<FiniteAbelianGroup, GroupError> {
    invariant_factor_chains(cardinality)
        .into_iter()
        .find(|chain| &order_statistics(chain) == stats)
        .map(|chain| {
            if chain.is_empty() {
                FiniteAbelianGroup::trivial()
            } else {
                FiniteAbelianGroup::from_orders(&chain).expect("chain entries are >= 2")
            }
        })
        .ok_or(GroupError::NotAGroup)
}

/// Canonical spec string: invariant factors ascending, comma separated; `1` for the trivial group.
impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses a comma-separated list of cyclic orders, e.g. `"2,4"` or `"33"`.
impl FromStr for FiniteAbelianGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut orders = Vec::new();
        let mut position = 0;
        for piece in s.split(',') {
            let trimmed = piece.trim();
            let start = position + piece.find(|c: char| !c.is_whitespace()).unwrap_or(0);
            let n: u64 = trimmed.parse().map_err(|_| GroupError::Parse {
                position: start,
                message: format!("expected a cyclic order, found {trimmed:?}"),
            })?;
            if n < 2 {
                return Err(GroupError::Parse {
                    position: start,
                    message: format!("cyclic orders must be at least 2, found {n}"),
                });
            }
            orders.push(n);
            position += piece.len() + 1;
        }
        Self::from_orders(&orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_orders(orders).unwrap()
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(grp(&[2, 3]).invariant_factors(), &[6]);
        assert_eq!(grp(&[4, 6]).invariant_factors(), &[2, 12]);
        assert_eq!(grp(&[3, 9]).invariant_factors(), &[3, 9]);
        assert_eq!(grp(&[6, 10, 4]).invariant_factors(), &[2, 2, 60]);
        assert_eq!(grp(&[6]).prime_power_factors(), &[2, 3]);
        assert_eq!(
            FiniteAbelianGroup::from_orders(&[4, 1]),
            Err(GroupError::InvalidOrder(1))
        );
    }

    #[test]
    fn c4_c6_matches_order_statistics_oracle() {
        // brute-force order statistics of the external product C_4 x C_6
        let mut stats: BTreeMap<u64, u64> = BTreeMap::new();
        for a in 0..4u64 {
            for b in 0..6u64 {
                let o = lcm(4 / crate::arith::gcd(4, a), 6 / crate::arith::gcd(6, b));
                *stats.entry(o).or_default() += 1;
            }
        }
        let matches: Vec<Vec<u64>> = invariant_factor_chains(24)
            .into_iter()
            .filter(|c| order_statistics(c) == stats)
            .collect();
        assert_eq!(matches, vec![vec![2, 12]]);
        assert_eq!(grp(&[4, 6]).invariant_factors(), matches[0].as_slice());
    }

    #[test]
    fn element_orders() {
        let c12 = grp(&[12]);
        assert_eq!(c12.order(&c12.element(&[8]).unwrap()), 3);
        let c18 = grp(&[2, 9]);
        // C_2 ⊕ C_9 is cyclic; coordinates (1,3) in the external form map to 9+6 = 15
        let (_, gens) = FiniteAbelianGroup::with_generators(&[2, 9]).unwrap();
        let g = c18.add(&gens[0], &c18.scale(3, &gens[1]));
        assert_eq!(c18.order(&g), 6);
        assert_eq!(c18.order(&c18.zero()), 1);
    }

    #[test]
    fn stats_examples() {
        let g = grp(&[3, 9]);
        let s = g.stats();
        assert_eq!((s.exponent, s.rank, s.total_rank), (9, 2, 2));
        assert_eq!(s.p_ranks, vec![(3, 2)]);
        let s = grp(&[6]).stats();
        assert_eq!((s.exponent, s.rank, s.total_rank), (6, 1, 2));
        assert_eq!(s.p_ranks, vec![(2, 1), (3, 1)]);
        let s = FiniteAbelianGroup::trivial().stats();
        assert_eq!((s.exponent, s.rank, s.total_rank), (1, 0, 0));
    }

    #[test]
    fn arithmetic_examples() {
        let c6 = grp(&[6]);
        let e = |g: &FiniteAbelianGroup, c: &[i64]| g.element(c).unwrap();
        assert_eq!(c6.add(&e(&c6, &[4]), &e(&c6, &[5])), e(&c6, &[3]));
        // C_2 ⊕ C_9 written with an explicit rank-2 group to exercise neg per coordinate
        let g = FiniteAbelianGroup { invariant_factors: vec![2, 9], prime_power_factors: vec![2, 9] };
        assert_eq!(g.neg(&e(&g, &[1, 4])), e(&g, &[1, 5]));
        let c9 = grp(&[9]);
        assert_eq!(c9.scale(3, &e(&c9, &[6])), c9.zero());
    }

    #[test]
    fn prime_divide_examples() {
        let c6 = grp(&[6]);
        let two = c6.element(&[2]).unwrap();
        assert_eq!(c6.prime_divide(2, &two).unwrap(), c6.element(&[1]).unwrap());
        let c9 = grp(&[9]);
        let lifted = c9.prime_divide(3, &c9.element(&[3]).unwrap()).unwrap();
        assert!([1, 4, 7].contains(&lifted.coords()[0]));
        assert_eq!(c9.order(&lifted), 9);
        assert_eq!(
            c6.prime_divide(2, &c6.element(&[3]).unwrap()),
            Err(GroupError::NoLift { p: 2 })
        );
        assert!(matches!(
            grp(&[2, 2]).prime_divide(2, &grp(&[2, 2]).zero()),
            Err(GroupError::NotCyclic(_))
        ));
    }

    #[test]
    fn direct_sum_examples() {
        let c2 = grp(&[2]);
        let c9 = grp(&[9]);
        let ds = c2.direct_sum(&c9);
        assert_eq!(ds.group.invariant_factors(), &[18]);
        assert_eq!(ds.left.apply(&c2.element(&[1]).unwrap()).coords(), &[9]);
        assert_eq!(ds.right.apply(&c9.element(&[1]).unwrap()).coords(), &[2]);

        let c3 = grp(&[3]);
        let ds = c3.direct_sum(&c3);
        assert_eq!(ds.group.invariant_factors(), &[3, 3]);
        let a = ds.left.apply(&c3.element(&[1]).unwrap());
        let b = ds.right.apply(&c3.element(&[1]).unwrap());
        assert_ne!(a, b);

        let t = FiniteAbelianGroup::trivial();
        let ds = t.direct_sum(&c9);
        assert_eq!(ds.group, c9);
        for g in c9.elements() {
            assert_eq!(ds.right.apply(&g), g);
        }
    }

    #[test]
    fn direct_sum_embeddings_preserve_orders_and_meet_trivially() {
        let cases: &[(&[u64], &[u64])] =
            &[(&[2], &[9]), (&[4], &[6]), (&[2, 2], &[6]), (&[3], &[3, 9]), (&[2, 4], &[2])];
        for (a, b) in cases {
            let (g1, g2) = (grp(a), grp(b));
            let ds = g1.direct_sum(&g2);
            assert_eq!(ds.group.cardinality(), g1.cardinality() * g2.cardinality());
            let img1: BTreeSet<GroupElement> = g1.elements().map(|g| ds.left.apply(&g)).collect();
            let img2: BTreeSet<GroupElement> = g2.elements().map(|g| ds.right.apply(&g)).collect();
            assert_eq!(img1.len() as u64, g1.cardinality());
            assert_eq!(img2.len() as u64, g2.cardinality());
            assert_eq!(img1.intersection(&img2).count(), 1);
            for g in g1.elements() {
                assert_eq!(ds.group.order(&ds.left.apply(&g)), g1.order(&g));
            }
            for g in g2.elements() {
                assert_eq!(ds.group.order(&ds.right.apply(&g)), g2.order(&g));
            }
        }
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(grp(&[6]).subgroups(64).unwrap().len(), 4);
        let sizes: Vec<usize> = grp(&[6]).subgroups(64).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
        assert_eq!(grp(&[2, 2]).subgroups(64).unwrap().len(), 5);
        let c3c3 = grp(&[3, 3]).subgroups(64).unwrap();
        assert_eq!(c3c3.len(), 6);
        assert_eq!(c3c3.iter().filter(|s| s.len() == 3).count(), 4);
        for p in [2u64, 3, 5, 7] {
            assert_eq!(grp(&[p, p]).subgroups(64).unwrap().len() as u64, p + 3);
        }
        assert!(matches!(grp(&[5, 5, 5]).subgroups(64), Err(GroupError::TooLarge { .. })));
    }

    #[test]
    fn iso_class_examples() {
        let c6 = grp(&[6]);
        let e = |c: i64| c6.element(&[c]).unwrap();
        assert_eq!(c6.iso_class(&[e(0), e(3)]).unwrap(), grp(&[2]));
        assert_eq!(c6.iso_class(&[e(0), e(2), e(4)]).unwrap(), grp(&[3]));
        assert_eq!(c6.iso_class(&[e(0), e(1)]), Err(GroupError::NotAGroup));
        let g = grp(&[2, 4]);
        let all: Vec<GroupElement> = g.elements().collect();
        assert_eq!(g.iso_class(&all).unwrap().invariant_factors(), &[2, 4]);
        assert_eq!(order_statistics(&[2, 4]), BTreeMap::from([(1, 1), (2, 3), (4, 4)]));
    }

    #[test]
    fn quotient_classes() {
        let g = grp(&[2, 4]);
        for h in g.subgroups(64).unwrap() {
            let q = g.quotient_class(&h).unwrap();
            assert_eq!(q.cardinality() * h.len() as u64, g.cardinality());
        }
        let c6 = grp(&[6]);
        let h = vec![c6.zero(), c6.element(&[3]).unwrap()];
        assert_eq!(c6.quotient_class(&h).unwrap(), grp(&[3]));
    }

    #[test]
    fn basis_has_prime_power_orders() {
        for orders in [&[6u64][..], &[2, 12], &[3, 9], &[2, 2, 9], &[33]] {
            let g = grp(orders);
            let basis = g.prime_power_basis();
            let qs: Vec<u64> = basis.iter().map(|(q, _)| *q).collect();
            assert_eq!(qs, g.prime_power_factors());
            for (q, e) in &basis {
                assert_eq!(g.order(e), *q);
            }
        }
    }

    #[test]
    fn spec_strings() {
        let g: FiniteAbelianGroup = "2,4".parse().unwrap();
        assert_eq!(g.to_string(), "2,4");
        let g: FiniteAbelianGroup = "4, 6".parse().unwrap();
        assert_eq!(g.to_string(), "2,12");
        assert!(matches!("1".parse::<FiniteAbelianGroup>(), Err(GroupError::Parse { position: 0, .. })));
        assert!(matches!("2,x".parse::<FiniteAbelianGroup>(), Err(GroupError::Parse { position: 2, .. })));
        assert!(matches!("3, 0".parse::<FiniteAbelianGroup>(), Err(GroupError::Parse { position: 3, .. })));
    }

    #[test]
    fn index_order_is_lexicographic() {
        let g = grp(&[2, 6]);
        let els: Vec<GroupElement> = g.elements().collect();
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        for (i, e) in els.iter().enumerate() {
            assert_eq!(g.index_of(e), i);
        }
        assert_eq!(els[0], g.zero());
    }
}
