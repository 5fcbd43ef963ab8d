//! Sequences over a finite abelian group, i.e. finite multisets of elements, with
//! cross numbers kept as exact numerators over the fixed denominator `exp(G)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteAbelianGroup, GroupElement, GroupError, Homomorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("element {0} does not belong to the sequence's group")]
    ForeignElement(GroupElement),
    #[error("the removed elements are not a sub-multiset of the sequence")]
    NotSubMultiset,
    #[error("sequences live over different groups")]
    GroupMismatch,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An exact cross number `numerator / denominator`. Never reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossValue {
    pub numerator: u64,
    pub denominator: u64,
}

impl CrossValue {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "cross value denominator must be positive");
        CrossValue { numerator, denominator }
    }

    /// Re-expresses the value over `denominator`, if it is exactly representable there.
    pub fn rescale(self, denominator: u64) -> Option<CrossValue> {
        let scaled = self.numerator as u128 * denominator as u128;
        (scaled % self.denominator as u128 == 0)
            .then(|| CrossValue::new((scaled / self.denominator as u128) as u64, denominator))
    }

    /// Rational equality, independent of the chosen denominators.
    pub fn same_value(&self, other: &CrossValue) -> bool {
        self.numerator as u128 * other.denominator as u128
            == other.numerator as u128 * self.denominator as u128
    }

    pub fn reduced(&self) -> (u64, u64) {
        let g = crate::arith::gcd(self.numerator, self.denominator).max(1);
        (self.numerator / g, self.denominator / g)
    }
}

impl PartialOrd for CrossValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        Some(lhs.cmp(&rhs))
    }
}

impl fmt::Display for CrossValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// A sorted, deduplicated set of cross numbers over one denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CrossSet {
    pub denominator: u64,
    pub numerators: BTreeSet<u64>,
}

impl CrossSet {
    pub fn new(denominator: u64) -> Self {
        CrossSet { denominator, numerators: BTreeSet::new() }
    }

    pub fn from_numerators(denominator: u64, numerators: impl IntoIterator<Item = u64>) -> Self {
        CrossSet { denominator, numerators: numerators.into_iter().collect() }
    }

    /// `(step / denominator) · [lo, hi]`, i.e. numerators `step·lo, ..., step·hi`.
    pub fn progression(denominator: u64, step: u64, lo: u64, hi: u64) -> Self {
        Self::from_numerators(denominator, (lo..=hi).map(|i| i * step))
    }

    pub fn insert(&mut self, numerator: u64) {
        self.numerators.insert(numerator);
    }

    pub fn contains(&self, numerator: u64) -> bool {
        self.numerators.contains(&numerator)
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn min(&self) -> Option<CrossValue> {
        self.numerators.first().map(|&n| CrossValue::new(n, self.denominator))
    }

    pub fn max(&self) -> Option<CrossValue> {
        self.numerators.last().map(|&n| CrossValue::new(n, self.denominator))
    }

    pub fn values(&self) -> impl Iterator<Item = CrossValue> + '_ {
        self.numerators.iter().map(move |&n| CrossValue::new(n, self.denominator))
    }

    /// Re-expresses every value over `denominator`; `None` if some value is not representable.
    pub fn rescale(&self, denominator: u64) -> Option<CrossSet> {
        let numerators = self
            .values()
            .map(|v| v.rescale(denominator).map(|v| v.numerator))
            .collect::<Option<BTreeSet<u64>>>()?;
        Some(CrossSet { denominator, numerators })
    }

    /// Set inclusion as rational numbers.
    pub fn is_subset(&self, other: &CrossSet) -> bool {
        match self.rescale(other.denominator) {
            Some(s) => s.numerators.is_subset(&other.numerators),
            None => false,
        }
    }

    /// Numerators of `self` (over `self.denominator`) missing from `other`.
    pub fn missing_from(&self, other: &CrossSet) -> Vec<u64> {
        self.values()
            .filter(|v| match v.rescale(other.denominator) {
                Some(r) => !other.contains(r.numerator),
                None => true,
            })
            .map(|v| v.numerator)
            .collect()
    }

    /// Rational set equality.
    pub fn same_values(&self, other: &CrossSet) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }
}

impl fmt::Display for CrossSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.numerators.iter().map(u64::to_string).collect();
        write!(f, "(1/{}){{{}}}", self.denominator, parts.join(","))
    }
}

/// `Σ(S)` as a membership mask over the canonical element enumeration of the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSet {
    group: FiniteAbelianGroup,
    mask: FixedBitSet,
}

impl SumSet {
    pub fn empty(group: &FiniteAbelianGroup) -> Self {
        SumSet { group: group.clone(), mask: FixedBitSet::with_capacity(group.cardinality() as usize) }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.mask.contains(self.group.index_of(g))
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.mask.ones().map(|i| self.group.element_at(i))
    }

    /// `Σ(S·g) = Σ(S) ∪ (g + Σ(S)) ∪ {g}`.
    pub fn extend(&mut self, g: &GroupElement) {
        let factors = self.group.invariant_factors();
        let shifted: Vec<usize> = self.mask.ones().map(|i| shift_index(factors, g.coords(), i)).collect();
        self.mask.extend(shifted);
        self.mask.insert(self.group.index_of(g));
    }

    /// Adds `m` copies of `g`, stopping once `Σ` is closed under `+g` or
    /// `stop` says so.
    fn extend_by(&mut self, g: &GroupElement, m: u64, stop: impl Fn(&Self) -> bool) -> bool {
        for _ in 0..m {
            let before = self.mask.count_ones(..);
            self.extend(g);
            if stop(self) {
                return true;
            }
            if self.mask.count_ones(..) == before {
                break;
            }
        }
        false
    }
}

/// Index of `element_at(i) + g`, digit by digit in mixed radix.
fn shift_index(factors: &[u64], g: &[u64], mut i: usize) -> usize {
    let mut out = 0;
    let mut place = 1;
    for (&n, &c) in factors.iter().zip(g).rev() {
        let n = n as usize;
        out += (i % n + c as usize) % n * place;
        i /= n;
        place *= n;
    }
    out
}

/// A sequence over `G`: an element of the free abelian monoid over `G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    group: FiniteAbelianGroup,
    counts: BTreeMap<GroupElement, u64>,
}

impl Sequence {
    /// The trivial (empty) sequence.
    pub fn trivial(group: &FiniteAbelianGroup) -> Self {
        Sequence { group: group.clone(), counts: BTreeMap::new() }
    }

    pub fn from_elements<'a>(
        group: &FiniteAbelianGroup,
        elements: impl IntoIterator<Item = &'a GroupElement>,
    ) -> Result<Self, SequenceError> {
        let mut s = Self::trivial(group);
        for g in elements {
            s.push(g.clone(), 1)?;
        }
        Ok(s)
    }

    /// Convenience constructor from coordinate tuples.
    pub fn from_coords(group: &FiniteAbelianGroup, coords: &[&[i64]]) -> Result<Self, SequenceError> {
        let mut s = Self::trivial(group);
        for c in coords {
            s.push(group.element(c)?, 1)?;
        }
        Ok(s)
    }

    /// Multiplies the sequence by `g^multiplicity`.
    pub fn push(&mut self, g: GroupElement, multiplicity: u64) -> Result<(), SequenceError> {
        if !self.group.contains(&g) {
            return Err(SequenceError::ForeignElement(g));
        }
        if multiplicity > 0 {
            *self.counts.entry(g).or_default() += multiplicity;
        }
        Ok(())
    }

    pub fn with(mut self, g: GroupElement, multiplicity: u64) -> Result<Self, SequenceError> {
        self.push(g, multiplicity)?;
        Ok(self)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn is_trivial(&self) -> bool {
        self.counts.is_empty()
    }

    /// `|S|`.
    pub fn len(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn multiplicity(&self, g: &GroupElement) -> u64 {
        self.counts.get(g).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.counts.keys()
    }

    /// `(element, multiplicity)` pairs in canonical element order.
    pub fn counts(&self) -> impl Iterator<Item = (&GroupElement, u64)> {
        self.counts.iter().map(|(g, &m)| (g, m))
    }

    /// Every term with repetition, in canonical order.
    pub fn terms(&self) -> Vec<GroupElement> {
        self.counts
            .iter()
            .flat_map(|(g, &m)| std::iter::repeat(g.clone()).take(m as usize))
            .collect()
    }

    /// `σ(S)`.
    pub fn sigma(&self) -> GroupElement {
        self.counts
            .iter()
            .fold(self.group.zero(), |acc, (g, &m)| self.group.add(&acc, &self.group.scale(m, g)))
    }

    /// `k(S)` over the denominator `exp(G)`.
    pub fn cross_number(&self) -> CrossValue {
        let exp = self.group.exponent();
        let numerator = self.counts.iter().map(|(g, &m)| m * (exp / self.group.order(g))).sum();
        CrossValue::new(numerator, exp)
    }

    /// `Σ(S)`, built incrementally term by term.
    pub fn subset_sums(&self) -> SumSet {
        let mut sums = SumSet::empty(&self.group);
        for (g, &m) in &self.counts {
            sums.extend_by(g, m, |_| false);
        }
        sums
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sigma() == self.group.zero()
    }

    /// `0 ∉ Σ(S)`; the trivial sequence is vacuously zero-sum free.
    pub fn is_zero_sum_free(&self) -> bool {
        let mut sums = SumSet::empty(&self.group);
        !self.counts.iter().any(|(g, &m)| sums.extend_by(g, m, |s| s.mask.contains(0)))
    }

    /// Non-trivial, sums to zero, and dropping any one term leaves a zero-sum free sequence.
    /// The sequence `(0)` qualifies.
    pub fn is_minimal_zero_sum(&self) -> bool {
        let Some(first) = self.counts.keys().next() else {
            return false;
        };
        self.is_zero_sum() && self.without(first).is_zero_sum_free()
    }

    fn without(&self, g: &GroupElement) -> Sequence {
        let mut s = self.clone();
        if let Some(m) = s.counts.get_mut(g) {
            *m -= 1;
            if *m == 0 {
                s.counts.remove(g);
            }
        }
        s
    }

    /// Is `other` a sub-multiset of `self`?
    pub fn divides(&self, other: &Sequence) -> bool {
        other.counts.iter().all(|(g, &m)| self.multiplicity(g) >= m)
    }

    /// Removes the sub-multiset `out` and adds `into`.
    pub fn replace(&self, out: &Sequence, into: &Sequence) -> Result<Sequence, SequenceError> {
        if out.group != self.group || into.group != self.group {
            return Err(SequenceError::GroupMismatch);
        }
        if !self.divides(out) {
            return Err(SequenceError::NotSubMultiset);
        }
        let mut s = self.clone();
        for (g, &m) in &out.counts {
            let entry = s.counts.get_mut(g).expect("checked by divides");
            *entry -= m;
            if *entry == 0 {
                s.counts.remove(g);
            }
        }
        for (g, &m) in &into.counts {
            *s.counts.entry(g.clone()).or_default() += m;
        }
        Ok(s)
    }

    /// Image of the sequence under a homomorphism out of its group.
    pub fn map(&self, hom: &Homomorphism) -> Result<Sequence, SequenceError> {
        if hom.source() != &self.group {
            return Err(SequenceError::GroupMismatch);
        }
        let mut s = Sequence::trivial(hom.target());
        for (g, &m) in &self.counts {
            s.push(hom.apply(g), m)?;
        }
        Ok(s)
    }

    /// Product of two sequences over the same group.
    pub fn product(&self, other: &Sequence) -> Result<Sequence, SequenceError> {
        self.replace(&Sequence::trivial(&self.group), other)
    }

    /// Textual literal `(c,...)^m;(c,...)`; the trivial sequence is `1`.
    pub fn parse(group: &FiniteAbelianGroup, literal: &str) -> Result<Sequence, SequenceError> {
        let mut s = Sequence::trivial(group);
        let text = literal.trim();
        if text.is_empty() || text == "1" {
            return Ok(s);
        }
        let mut position = literal.len() - literal.trim_start().len();
        for term in text.split(';') {
            let err = |offset: usize, message: String| SequenceError::Parse { position: position + offset, message };
            let lead = term.len() - term.trim_start().len();
            let t = term.trim();
            let (body, mult) = match t.rsplit_once('^') {
                Some((b, m)) => {
                    let mult: u64 = m.trim().parse().map_err(|_| {
                        err(lead + b.len() + 1, format!("bad multiplicity {:?}", m.trim()))
                    })?;
                    (b.trim(), mult)
                }
                None => (t, 1),
            };
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(|| err(lead, format!("expected a parenthesized tuple, found {body:?}")))?;
            let coords = inner
                .split(',')
                .map(|c| c.trim().parse::<i64>())
                .collect::<Result<Vec<i64>, _>>()
                .map_err(|_| err(lead + 1, format!("bad coordinates in {body:?}")))?;
            let g = group.element(&coords).map_err(|_| {
                err(lead, format!("tuple {body} does not match invariant factors {group}"))
            })?;
            s.push(g, mult)?;
            position += term.len() + 1;
        }
        Ok(s)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(g, &m)| if m == 1 { g.to_string() } else { format!("{g}^{m}") })
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// `S1 · S2` over `G1 ⊕ G2`, embedding each factor through the direct-sum maps.
pub fn concat(s1: &Sequence, s2: &Sequence, ds: &crate::group::DirectSum) -> Result<Sequence, SequenceError> {
    s1.map(&ds.left)?.product(&s2.map(&ds.right)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_orders(orders).unwrap()
    }

    fn seq(g: &FiniteAbelianGroup, lit: &str) -> Sequence {
        Sequence::parse(g, lit).unwrap()
    }

    /// Σ(S) by enumerating all nonempty index subsets.
    fn brute_sums(s: &Sequence) -> BTreeSet<GroupElement> {
        let terms = s.terms();
        let g = s.group();
        (1u64..(1 << terms.len()))
            .map(|mask| {
                terms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(g.zero(), |acc, (_, t)| g.add(&acc, t))
            })
            .collect()
    }

    #[test]
    fn sigma_length_cross_number() {
        let c6 = grp(&[6]);
        let s = seq(&c6, "(3);(2)^2");
        assert_eq!(s.sigma(), c6.element(&[1]).unwrap());
        assert_eq!(s.len(), 3);
        assert_eq!(s.cross_number(), CrossValue::new(7, 6));
        let t = Sequence::trivial(&c6);
        assert_eq!((t.sigma(), t.len(), t.cross_number()), (c6.zero(), 0, CrossValue::new(0, 6)));
        let c9 = grp(&[9]);
        let s = seq(&c9, "(1)^9");
        assert!(s.is_zero_sum());
        assert_eq!(s.cross_number(), CrossValue::new(9, 9));
    }

    #[test]
    fn subset_sum_examples() {
        let c6 = grp(&[6]);
        let sums: Vec<u64> = seq(&c6, "(2);(5)").subset_sums().elements().map(|g| g.coords()[0]).collect();
        assert_eq!(sums, vec![1, 2, 5]);
        let c3 = grp(&[3]);
        let sums: Vec<u64> = seq(&c3, "(1)^2").subset_sums().elements().map(|g| g.coords()[0]).collect();
        assert_eq!(sums, vec![1, 2]);
        let c9 = grp(&[9]);
        let s = seq(&c9, "(2);(5)");
        let sums: Vec<u64> = s.subset_sums().elements().map(|g| g.coords()[0]).collect();
        assert_eq!(sums, vec![2, 5, 7]);
        assert!(!s.subset_sums().contains(&c9.element(&[8]).unwrap()));
        assert!(Sequence::trivial(&c9).subset_sums().is_empty());
    }

    #[test]
    fn predicate_examples() {
        let c6 = grp(&[6]);
        assert!(seq(&c6, "(3);(2)^2").is_zero_sum_free());
        let c4 = grp(&[4]);
        let s = seq(&c4, "(1)^2;(2)");
        assert!(s.is_minimal_zero_sum());
        assert_eq!(s.cross_number(), CrossValue::new(4, 4));
        assert!(!seq(&c6, "(3)^2;(2);(4)").is_minimal_zero_sum());
        assert!(seq(&c6, "(0)").is_minimal_zero_sum());
        assert!(!Sequence::trivial(&c6).is_minimal_zero_sum());
        assert!(Sequence::trivial(&c6).is_zero_sum_free());
    }

    #[test]
    fn concat_examples() {
        let (c2, c3) = (grp(&[2]), grp(&[3]));
        let ds = c2.direct_sum(&c3);
        let s = concat(&seq(&c2, "(1)"), &seq(&c3, "(1)^2"), &ds).unwrap();
        assert_eq!(s.group(), &grp(&[6]));
        assert_eq!(s.cross_number(), CrossValue::new(7, 6));
        assert!(s.is_zero_sum_free());

        let t = concat(&Sequence::trivial(&c2), &seq(&c3, "(1)^2"), &ds).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.support().all(|g| ds.group.order(g) == 3));

        let ds = c3.direct_sum(&c3);
        let s = concat(&seq(&c3, "(1)^2"), &seq(&c3, "(1)^2"), &ds).unwrap();
        assert!(s.is_zero_sum_free());
        assert_eq!(s.cross_number(), CrossValue::new(4, 3));
    }

    #[test]
    fn replace_examples() {
        let c6 = grp(&[6]);
        let s = seq(&c6, "(1);(2);(4)");
        let merged = s.replace(&seq(&c6, "(1);(2)"), &seq(&c6, "(3)")).unwrap();
        assert_eq!(merged.len(), s.len() - 1);
        let grown = s.replace(&Sequence::trivial(&c6), &seq(&c6, "(5)")).unwrap();
        assert_eq!(grown.multiplicity(&c6.element(&[5]).unwrap()), 1);
        assert!(s.replace(&s, &Sequence::trivial(&c6)).unwrap().is_trivial());
        assert_eq!(s.replace(&seq(&c6, "(3)"), &Sequence::trivial(&c6)), Err(SequenceError::NotSubMultiset));
    }

    #[test]
    fn literal_roundtrip_and_errors() {
        let g = grp(&[2, 4]);
        let s = seq(&g, "(1,0)^2;(1,1)");
        assert_eq!(s.len(), 3);
        assert_eq!(Sequence::parse(&g, &s.to_string()).unwrap(), s);
        assert_eq!(seq(&g, "1"), Sequence::trivial(&g));
        assert!(matches!(Sequence::parse(&g, "(1,0);(1)"), Err(SequenceError::Parse { position: 6, .. })));
        assert!(matches!(Sequence::parse(&g, "(1,0)^x"), Err(SequenceError::Parse { .. })));
    }

    #[test]
    fn cross_value_ordering() {
        assert!(CrossValue::new(1, 2) < CrossValue::new(2, 3));
        assert!(CrossValue::new(2, 4).same_value(&CrossValue::new(1, 2)));
        assert_eq!(CrossValue::new(1, 3).rescale(6), Some(CrossValue::new(2, 6)));
        assert_eq!(CrossValue::new(1, 4).rescale(6), None);
    }

    /// Exhaustive check over every multiset of bounded length on small groups.
    fn all_multisets(g: &FiniteAbelianGroup, max_len: usize) -> Vec<Sequence> {
        let els: Vec<GroupElement> = g.elements().collect();
        let mut out = vec![Sequence::trivial(g)];
        let mut layer = vec![(Sequence::trivial(g), 0usize)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (s, start) in &layer {
                for (i, e) in els.iter().enumerate().skip(*start) {
                    let t = s.clone().with(e.clone(), 1).unwrap();
                    out.push(t.clone());
                    next.push((t, i));
                }
            }
            layer = next;
        }
        out
    }

    #[test]
    fn incremental_sums_and_minimality_match_definitions() {
        for orders in [&[2u64][..], &[3], &[4], &[2, 2], &[5], &[6], &[2, 4], &[3, 3]] {
            let g = grp(orders);
            let max_len = if g.cardinality() <= 4 { 8 } else { 5 };
            for s in all_multisets(&g, max_len) {
                let inc: BTreeSet<GroupElement> = s.subset_sums().elements().collect();
                assert_eq!(inc, brute_sums(&s), "Σ mismatch for {s}");
                // minimal zero-sum by definition: zero sum, and no proper nonempty zero-sum subsequence
                let terms = s.terms();
                let by_def = !terms.is_empty()
                    && s.is_zero_sum()
                    && (1u64..(1 << terms.len()) - 1).all(|mask| {
                        terms
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .fold(g.zero(), |acc, (_, t)| g.add(&acc, t))
                            != g.zero()
                    });
                assert_eq!(s.is_minimal_zero_sum(), by_def, "minimality mismatch for {s}");
            }
        }
    }

    #[test]
    fn glued_atoms_stay_minimal() {
        let (c2, c3) = (grp(&[2]), grp(&[3]));
        let ds = c2.direct_sum(&c3);
        let atoms1: Vec<Sequence> = all_multisets(&c2, 3).into_iter().filter(Sequence::is_minimal_zero_sum).collect();
        let atoms2: Vec<Sequence> = all_multisets(&c3, 4).into_iter().filter(Sequence::is_minimal_zero_sum).collect();
        for u1 in &atoms1 {
            for u2 in &atoms2 {
                for g in u1.support() {
                    for h in u2.support() {
                        let a = u1.replace(&seq(&c2, &g.to_string()), &Sequence::trivial(&c2)).unwrap();
                        let b = u2.replace(&seq(&c3, &h.to_string()), &Sequence::trivial(&c3)).unwrap();
                        let glue = ds.group.add(&ds.left.apply(g), &ds.right.apply(h));
                        let u = concat(&a, &b, &ds).unwrap().with(glue, 1).unwrap();
                        assert!(u.is_minimal_zero_sum(), "{u1} * {u2} glued at {g},{h}");
                        assert_eq!(u.len(), u1.len() + u2.len() - 1);
                    }
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn group_and_seq() -> impl Strategy<Value = (Vec<u64>, Vec<usize>, Vec<usize>)> {
            prop_oneof![
                Just(vec![6u64]),
                Just(vec![2, 4]),
                Just(vec![3, 3]),
                Just(vec![12]),
                Just(vec![2, 2, 2]),
            ]
            .prop_flat_map(|orders| {
                let card: u64 = orders.iter().product();
                (
                    Just(orders),
                    proptest::collection::vec(0..card as usize, 0..8),
                    proptest::collection::vec(0..card as usize, 0..8),
                )
            })
        }

        proptest! {
            #[test]
            fn cross_number_is_additive_and_monotone((orders, a, b) in group_and_seq()) {
                let g = FiniteAbelianGroup::from_orders(&orders).unwrap();
                let sa = Sequence::from_elements(&g, &a.iter().map(|&i| g.element_at(i)).collect::<Vec<_>>()).unwrap();
                let sb = Sequence::from_elements(&g, &b.iter().map(|&i| g.element_at(i)).collect::<Vec<_>>()).unwrap();
                let prod = sa.product(&sb).unwrap();
                prop_assert_eq!(
                    prod.cross_number().numerator,
                    sa.cross_number().numerator + sb.cross_number().numerator
                );
                prop_assert!(sa.cross_number() <= prod.cross_number());
                prop_assert_eq!(prod.len(), sa.len() + sb.len());
            }
        }
    }
}
