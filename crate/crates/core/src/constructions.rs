//! Explicit witness sequences.
//!
//! Every builder returns a [`Witness`]: the sequence together with the kind and
//! cross number it is claimed to have. Nothing here trusts its own claims;
//! [`Witness::holds`] re-derives both from the sequence.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{factorize, is_prime, prime_power_base, valuation};
use crate::group::{DirectSum, FiniteAbelianGroup, GroupElement, GroupError};
use crate::search::{eta, Budget, SearchError, SequenceKind, DEFAULT_ETA_BOUND};
use crate::sequence::{CrossValue, Sequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange { name: &'static str, value: u64, lo: u64, hi: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("p = {p} is below eta(C_{q}^{s}) + 2q = {needed}")]
    Regime { p: u64, q: u64, s: usize, needed: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub sequence: Sequence,
    pub kind: SequenceKind,
    pub claimed: CrossValue,
}

impl Witness {
    fn new(sequence: Sequence, kind: SequenceKind, numerator: u64) -> Self {
        let claimed = CrossValue::new(numerator, sequence.group().exponent());
        Witness { sequence, kind, claimed }
    }

    pub fn has_claimed_kind(&self) -> bool {
        match self.kind {
            SequenceKind::ZeroSumFree => !self.sequence.is_trivial() && self.sequence.is_zero_sum_free(),
            SequenceKind::MinimalZeroSum => self.sequence.is_minimal_zero_sum(),
        }
    }

    /// The claimed kind and cross number both check out.
    pub fn holds(&self) -> bool {
        self.has_claimed_kind() && self.sequence.cross_number().same_value(&self.claimed)
    }
}

fn check_range(name: &'static str, value: u64, lo: u64, hi: u64) -> Result<()> {
    if value < lo || value > hi {
        return Err(ConstructionError::OutOfRange { name, value, lo, hi });
    }
    Ok(())
}

fn single(g: &GroupElement, group: &FiniteAbelianGroup) -> Sequence {
    Sequence::trivial(group).with(g.clone(), 1).expect("element of the group")
}

/// `S g^{-1} h^m`.
fn swap(s: &Sequence, g: &GroupElement, h: &GroupElement, m: u64) -> Result<Sequence> {
    let group = s.group();
    let into = Sequence::trivial(group).with(h.clone(), m)?;
    Ok(s.replace(&single(g, group), &into)?)
}

/// `exp(G) / ord(g)`: the contribution of `g` to the numerator.
fn weight(group: &FiniteAbelianGroup, g: &GroupElement) -> u64 {
    group.exponent() / group.order(g)
}

/// `(T, S)` with `T = e_1^{q_1-1} ... e_s^{q_s-1}` zero-sum free of cross number
/// `k*(G)` and `S = T (e_1 + ... + e_s)` minimal of cross number `K*(G)`.
pub fn basis_witness(group: &FiniteAbelianGroup) -> Result<(Witness, Witness)> {
    if group.is_trivial() {
        return Err(ConstructionError::Precondition("the trivial group has no basis".into()));
    }
    let exp = group.exponent();
    let mut t = Sequence::trivial(group);
    let mut total = group.zero();
    let mut numerator = 0;
    for (q, e) in group.prime_power_basis() {
        t.push(e.clone(), q - 1)?;
        total = group.add(&total, &e);
        numerator += (q - 1) * (exp / q);
    }
    let s = t.clone().with(total, 1)?;
    Ok((
        Witness::new(t, SequenceKind::ZeroSumFree, numerator),
        Witness::new(s, SequenceKind::MinimalZeroSum, numerator + 1),
    ))
}

/// `g^j` for `1 <= j < ord(g)`.
pub fn power_witness(group: &FiniteAbelianGroup, g: &GroupElement, j: u64) -> Result<Witness> {
    if !group.contains(g) {
        return Err(SequenceError::ForeignElement(g.clone()).into());
    }
    let ord = group.order(g);
    check_range("j", j, 1, ord.saturating_sub(1))?;
    let s = Sequence::trivial(group).with(g.clone(), j)?;
    Ok(Witness::new(s, SequenceKind::ZeroSumFree, j * weight(group, g)))
}

/// `(g1^{-1} U1)(g2^{-1} U2)(g1 + g2)` over `G1 ⊕ G2`.
pub fn glue_minimal(
    u1: &Sequence,
    g1: &GroupElement,
    u2: &Sequence,
    g2: &GroupElement,
    ds: &DirectSum,
) -> Result<Witness> {
    for (u, g) in [(u1, g1), (u2, g2)] {
        if u.multiplicity(g) == 0 {
            return Err(ConstructionError::Precondition(format!("{g} does not divide {u}")));
        }
    }
    let group = &ds.group;
    let h1 = ds.left.apply(g1);
    let h2 = ds.right.apply(g2);
    let joined = group.add(&h1, &h2);
    let glued = u1.map(&ds.left)?.product(&u2.map(&ds.right)?)?;
    let glued = glued.replace(
        &Sequence::from_elements(group, [&h1, &h2])?,
        &single(&joined, group),
    )?;
    let numerator = u1.map(&ds.left)?.cross_number().numerator
        + u2.map(&ds.right)?.cross_number().numerator
        + weight(group, &joined)
        - weight(group, &h1)
        - weight(group, &h2);
    Ok(Witness::new(glued, SequenceKind::MinimalZeroSum, numerator))
}

fn require_cyclic_atom(a: &Sequence) -> Result<()> {
    if !a.group().is_cyclic() {
        return Err(GroupError::NotCyclic(a.group().to_string()).into());
    }
    if !a.is_minimal_zero_sum() {
        return Err(ConstructionError::Precondition(format!("{a} is not a minimal zero-sum sequence")));
    }
    Ok(())
}

/// Lifts elements of a cyclic atom until, for every prime in `primes`, some
/// element has order of full `p`-valuation.
fn lift_valuations(a: &Sequence, primes: &[u64]) -> Result<Sequence> {
    let group = a.group().clone();
    let n = group.exponent();
    let mut s = a.clone();
    for &p in primes {
        let full = valuation(p, n);
        loop {
            // first element of maximal p-valuation, canonical order
            let g = s
                .support()
                .max_by_key(|g| (valuation(p, group.order(g)), std::cmp::Reverse((*g).clone())))
                .expect("atoms are non-trivial")
                .clone();
            if valuation(p, group.order(&g)) == full {
                break;
            }
            let g0 = group.prime_divide(p, &g)?;
            s = swap(&s, &g, &g0, p)?;
        }
    }
    Ok(s)
}

/// An atom over a cyclic group with the same cross number as `a` that contains,
/// for each prime `p | n`, an element whose order has full `p`-valuation.
///
/// Each step replaces `g` by `g0^p` where `p g0 = g` and `ord(g0) = p ord(g)`.
pub fn fix_valuation(a: &Sequence) -> Result<Witness> {
    require_cyclic_atom(a)?;
    let primes: Vec<u64> = factorize(a.group().exponent()).into_iter().map(|(p, _)| p).collect();
    let s = lift_valuations(a, &primes)?;
    Ok(Witness::new(s, SequenceKind::MinimalZeroSum, a.cross_number().numerator))
}

/// Extends an atom `S_c` over `C_n` to an atom over `C_n ⊕ C_{q_1} ⊕ ... ⊕ C_{q_t}`
/// whose cross number is `k(S_c) + Σ j_i / q_i`.
///
/// `S_c` is first lifted (for the primes that need it) so that every prime has
/// an element `g` of full valuation; `g` is then traded for
/// `g - Σ j_i e_i` over the block of that prime, and `∏ e_i^{j_i}` is appended.
pub fn glue_prop_w(s_c: &Sequence, q: &[u64], j: &[u64]) -> Result<Witness> {
    require_cyclic_atom(s_c)?;
    if q.len() != j.len() {
        return Err(ConstructionError::Precondition("q and j differ in length".into()));
    }
    let n = s_c.group().exponent();
    let mut blocks: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, (&qi, &ji)) in q.iter().zip(j).enumerate() {
        let Some(p) = prime_power_base(qi) else {
            return Err(ConstructionError::Precondition(format!("{qi} is not a prime power")));
        };
        if n % qi != 0 {
            return Err(ConstructionError::Precondition(format!("{qi} does not divide {n}")));
        }
        check_range("j", ji, 0, qi - 1)?;
        blocks.entry(p).or_default().push(i);
    }
    let active: Vec<u64> =
        blocks.iter().filter(|(_, idx)| idx.iter().any(|&i| j[i] > 0)).map(|(&p, _)| p).collect();
    let lifted = lift_valuations(s_c, &active)?;

    let orders: Vec<u64> = std::iter::once(n).chain(q.iter().copied()).collect();
    let (group, gens) = FiniteAbelianGroup::with_generators(&orders)?;
    let f = &gens[0];
    let mut s = Sequence::trivial(&group);
    for (x, m) in lifted.counts() {
        s.push(group.scale(x.coords()[0], f), m)?;
    }
    let mut numerator = s.cross_number().numerator;
    for &p in &active {
        let block = &blocks[&p];
        let offset = block.iter().fold(group.zero(), |acc, &i| group.add(&acc, &group.scale(j[i], &gens[i + 1])));
        let g = s
            .support()
            .find(|g| valuation(p, group.order(g)) == valuation(p, n))
            .expect("lifted for every active prime")
            .clone();
        let g_star = group.sub(&g, &offset);
        s = swap(&s, &g, &g_star, 1)?;
        for &i in block {
            s.push(gens[i + 1].clone(), j[i])?;
            numerator += j[i] * (n / q[i]);
        }
    }
    Ok(Witness::new(s, SequenceKind::MinimalZeroSum, numerator))
}

/// Checks that `f` generates a cyclic subgroup of odd prime-power order; returns `(p, p^k)`.
fn odd_prime_power_generator(group: &FiniteAbelianGroup, f: &GroupElement) -> Result<(u64, u64)> {
    let ord = group.order(f);
    match prime_power_base(ord) {
        Some(p) if p != 2 => Ok((p, ord)),
        _ => Err(ConstructionError::Precondition(format!("ord({f}) = {ord} is not an odd prime power"))),
    }
}

/// `f^{a}(b_1 f)(b_2 f)...` as a sequence.
fn multiples(group: &FiniteAbelianGroup, f: &GroupElement, ones: u64, others: &[u64]) -> Result<Sequence> {
    let mut s = Sequence::trivial(group).with(f.clone(), ones)?;
    for &b in others {
        s.push(group.scale(b, f), 1)?;
    }
    Ok(s)
}

/// Zero-sum free `S_j` in `<f>` with `σ(S_j) = -f` and `k(S_j) = j / ord(f)`,
/// for `ord(f) = p^k` with `p` odd and `1 <= j <= p^k - 1`.
pub fn cyclic_sj(group: &FiniteAbelianGroup, f: &GroupElement, j: u64) -> Result<Witness> {
    let (p, pk) = odd_prime_power_generator(group, f)?;
    check_range("j", j, 1, pk - 1)?;
    let s = if (pk - j) % p != 0 {
        multiples(group, f, j - 1, &[pk - j])?
    } else {
        // p | j, so j >= p >= 3
        assert!(j >= 2, "fallback needs two spare copies of f");
        multiples(group, f, j - 2, &[2, pk - j - 1])?
    };
    Ok(Witness::new(s, SequenceKind::ZeroSumFree, j * weight(group, f)))
}

/// Zero-sum free `T_j` in `<f>` with `σ(T_j) = -2f`, `-f ∉ Σ(T_j)` and
/// `k(T_j) = j / ord(f)`, for `1 <= j <= p^k - 2`.
pub fn cyclic_tj(group: &FiniteAbelianGroup, f: &GroupElement, j: u64) -> Result<Witness> {
    let (p, pk) = odd_prime_power_generator(group, f)?;
    check_range("j", j, 1, pk - 2)?;
    let s = if (pk - j - 1) % p != 0 {
        multiples(group, f, j - 1, &[pk - j - 1])?
    } else {
        assert!(j >= 2, "fallback needs two spare copies of f");
        multiples(group, f, j - 2, &[2, pk - j - 2])?
    };
    Ok(Witness::new(s, SequenceKind::ZeroSumFree, j * weight(group, f)))
}

fn odd_prime_power(p: u64, k: u32) -> Result<u64> {
    if !is_prime(p) || p == 2 || k == 0 {
        return Err(ConstructionError::Precondition(format!("need an odd prime and k >= 1, got p={p}, k={k}")));
    }
    Ok(p.pow(k))
}

/// `(B_l, B)` over `C_2 ⊕ C_{p^k}` with `B_l = e(e+f)f^{p^k-1-l}` and
/// `B = B_l (e+f)^{-1}`. `B_0` is an atom; otherwise both are zero-sum free.
pub fn w2pk_witnesses(p: u64, k: u32, l: u64) -> Result<(Witness, Witness)> {
    let pk = odd_prime_power(p, k)?;
    check_range("l", l, 0, (pk - 1) / 2)?;
    let (group, gens) = FiniteAbelianGroup::with_generators(&[2, pk])?;
    let (e, f) = (&gens[0], &gens[1]);
    let ef = group.add(e, f);
    let b = Sequence::trivial(&group).with(e.clone(), 1)?.with(f.clone(), pk - 1 - l)?;
    let b_l = b.clone().with(ef, 1)?;
    // numerators over 2p^k
    let n_bl = 3 * pk - 1 - 2 * l;
    let kind = if l == 0 { SequenceKind::MinimalZeroSum } else { SequenceKind::ZeroSumFree };
    Ok((Witness::new(b_l, kind, n_bl), Witness::new(b, SequenceKind::ZeroSumFree, n_bl - 1)))
}

/// The four atom families over `C_2 ⊕ C_2 ⊕ C_{p^k}` that fill `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum C22Variant {
    /// `e_1 e_2 (e_1+e_2+f) S_j`, `j ∈ [1, p^k-1]`.
    Aj,
    /// `e_1 e_2 (e_1+f)(e_2+f) T_j`, `j ∈ [1, p^k-2]`.
    AjPrime,
    /// `e_1 e_2 (e_1+f)(e_2-f)`.
    Special1,
    /// `(e_1+e_2-f)(e_1+f)(e_2+f) f^{p^k-1}`.
    Special2,
}

pub fn c22_witnesses(p: u64, k: u32, j: u64, variant: C22Variant) -> Result<Witness> {
    let pk = odd_prime_power(p, k)?;
    let (group, gens) = FiniteAbelianGroup::with_generators(&[2, 2, pk])?;
    let (e1, e2, f) = (&gens[0], &gens[1], &gens[2]);
    let add = |a: &GroupElement, b: &GroupElement| group.add(a, b);
    let base = Sequence::from_elements(&group, [e1, e2])?;
    let (s, numerator) = match variant {
        C22Variant::Aj => {
            let sj = cyclic_sj(&group, f, j)?;
            let s = base.with(add(&add(e1, e2), f), 1)?.product(&sj.sequence)?;
            (s, 2 * pk + 1 + 2 * j)
        }
        C22Variant::AjPrime => {
            let tj = cyclic_tj(&group, f, j)?;
            let s = base.with(add(e1, f), 1)?.with(add(e2, f), 1)?.product(&tj.sequence)?;
            (s, 2 * pk + 2 + 2 * j)
        }
        C22Variant::Special1 => {
            let s = base.with(add(e1, f), 1)?.with(group.sub(e2, f), 1)?;
            (s, 2 * pk + 2)
        }
        C22Variant::Special2 => {
            let s = Sequence::trivial(&group)
                .with(group.sub(&add(e1, e2), f), 1)?
                .with(add(e1, f), 1)?
                .with(add(e2, f), 1)?
                .with(f.clone(), pk - 1)?;
            (s, 2 * pk + 1)
        }
    };
    Ok(Witness::new(s, SequenceKind::MinimalZeroSum, numerator))
}

/// Shape of a large-cross-number witness over `C_p^r ⊕ C_q^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GapShape {
    /// Close the zero-sum free sequence to an atom with an element of order `pq`.
    pub closed: bool,
    /// How many fewer than `r(p-1)` elements the `p`-part carries (0 or 1).
    pub deficit: u64,
    /// How many `p`-part elements `g` are traded for `g + h` (0, 1 or 2).
    pub swaps: u64,
}

/// `η(C_q^s) + 2q`, the least `p` for which the gap structure is proven.
pub fn gap_regime_threshold(q: u64, s: usize, budget: Budget) -> Result<u64> {
    let cqs = FiniteAbelianGroup::from_orders(&vec![q; s])?;
    Ok(eta(&cqs, DEFAULT_ETA_BOUND, budget)? + 2 * q)
}

/// `S_q S_p'` over `C_p^r ⊕ C_q^s`, with `S_q = ∏ f_i^{q-1}`, `S_p'` of length
/// `r(p-1) - deficit`, and `swaps` of its terms `g` replaced by `g + h`.
///
/// `h` is the first nonzero element of `C_q^s` in canonical order; for the
/// closed shape, later choices are tried until the sum has order `pq`.
pub fn gap_witness(p: u64, r: usize, q: u64, s: usize, shape: GapShape) -> Result<Witness> {
    if !(is_prime(p) && is_prime(q) && q > 2 && p > q) || r == 0 || s == 0 {
        return Err(ConstructionError::Precondition(format!(
            "need odd primes p > q and r, s >= 1, got p={p}, r={r}, q={q}, s={s}"
        )));
    }
    check_range("deficit", shape.deficit, 0, 1)?;
    check_range("swaps", shape.swaps, 0, 2)?;
    let needed = gap_regime_threshold(q, s, Budget::default())?;
    if p < needed {
        return Err(ConstructionError::Regime { p, q, s, needed });
    }
    let orders: Vec<u64> = std::iter::repeat(p).take(r).chain(std::iter::repeat(q).take(s)).collect();
    let (group, gens) = FiniteAbelianGroup::with_generators(&orders)?;
    let (e, f) = gens.split_at(r);

    let mut s_q = Sequence::trivial(&group);
    for fi in f {
        s_q.push(fi.clone(), q - 1)?;
    }
    let mut p_terms: Vec<GroupElement> =
        e.iter().flat_map(|ei| std::iter::repeat(ei.clone()).take(p as usize - 1)).collect();
    p_terms.truncate(p_terms.len() - shape.deficit as usize);

    // nonzero elements of the q-part, canonical order
    let q_part: Vec<GroupElement> = group
        .elements()
        .filter(|x| group.order(x) == q)
        .collect();
    let build = |h: &GroupElement| -> Result<Sequence> {
        let mut seq = s_q.clone();
        for (i, g) in p_terms.iter().enumerate() {
            let term = if (i as u64) < shape.swaps { group.add(g, h) } else { g.clone() };
            seq.push(term, 1)?;
        }
        Ok(seq)
    };
    let pq = p * q;
    let base_numerator =
        s as u64 * (q - 1) * p + q * (p_terms.len() as u64 - shape.swaps) + shape.swaps;
    if !shape.closed {
        let seq = build(&q_part[0])?;
        return Ok(Witness::new(seq, SequenceKind::ZeroSumFree, base_numerator));
    }
    for h in &q_part {
        let seq = build(h)?;
        let closing = group.neg(&seq.sigma());
        if group.order(&closing) == pq {
            let atom = seq.with(closing, 1)?;
            return Ok(Witness::new(atom, SequenceKind::MinimalZeroSum, base_numerator + 1));
        }
    }
    Err(ConstructionError::Precondition("no h gives a sum of order pq".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(o: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_orders(o).unwrap()
    }

    fn seq(g: &FiniteAbelianGroup, lit: &str) -> Sequence {
        Sequence::parse(g, lit).unwrap()
    }

    #[test]
    fn basis_examples() {
        let (t, s) = basis_witness(&grp(&[3, 9])).unwrap();
        assert_eq!((t.claimed.numerator, s.claimed.numerator), (14, 15));
        assert!(t.holds() && s.holds());
        let (t, s) = basis_witness(&grp(&[6])).unwrap();
        assert_eq!((t.claimed.numerator, s.claimed.numerator), (7, 8));
        assert!(t.holds() && s.holds());
        let c2 = grp(&[2]);
        let (t, s) = basis_witness(&c2).unwrap();
        assert_eq!(t.sequence, seq(&c2, "(1)"));
        assert_eq!(s.sequence, seq(&c2, "(1)^2"));
        assert!(basis_witness(&FiniteAbelianGroup::trivial()).is_err());
    }

    #[test]
    fn powers() {
        let c9 = grp(&[9]);
        let w = power_witness(&c9, &c9.element(&[1]).unwrap(), 5).unwrap();
        assert!(w.holds());
        assert_eq!(w.claimed, CrossValue::new(5, 9));
        let c6 = grp(&[6]);
        assert!(power_witness(&c6, &c6.element(&[1]).unwrap(), 6).is_err());
        assert_eq!(power_witness(&c6, &c6.element(&[5]).unwrap(), 5).unwrap().claimed.numerator, 5);
    }

    #[test]
    fn glue_examples() {
        let (c2, c3) = (grp(&[2]), grp(&[3]));
        let ds = c2.direct_sum(&c3);
        let g1 = c2.element(&[1]).unwrap();
        let g2 = c3.element(&[1]).unwrap();
        let w = glue_minimal(&seq(&c2, "(1)^2"), &g1, &seq(&c3, "(1)^3"), &g2, &ds).unwrap();
        assert!(w.holds());
        assert_eq!(w.sequence.len(), 4);

        let ds = c3.direct_sum(&c3);
        let w = glue_minimal(&seq(&c3, "(1)^3"), &g2, &seq(&c3, "(1)^3"), &g2, &ds).unwrap();
        assert!(w.holds());
        assert_eq!(w.sequence.len(), 5);

        let c4 = grp(&[4]);
        let u1 = seq(&c4, "(1)^2;(2)");
        let ds = c4.direct_sum(&c3);
        let w = glue_minimal(&u1, &c4.element(&[2]).unwrap(), &seq(&c3, "(0)"), &c3.zero(), &ds).unwrap();
        assert_eq!(w.sequence, u1.map(&ds.left).unwrap());
        assert!(glue_minimal(&u1, &c4.element(&[3]).unwrap(), &u1, &c4.zero(), &c4.direct_sum(&c4)).is_err());
    }

    #[test]
    fn fix_valuation_examples() {
        let c6 = grp(&[6]);
        let w = fix_valuation(&seq(&c6, "(2)^3")).unwrap();
        assert_eq!(w.sequence, seq(&c6, "(2)^2;(1)^2"));
        assert!(w.holds());
        let w = fix_valuation(&seq(&c6, "(3)^2")).unwrap();
        assert!(w.holds());
        assert!(w.sequence.support().any(|g| c6.order(g) == 6));
        let full = seq(&c6, "(1)^6");
        assert_eq!(fix_valuation(&full).unwrap().sequence, full);
    }

    /// All atoms over `C_n` built from zero-sum free sequences by closing them.
    fn cyclic_atoms(n: u64) -> Vec<Sequence> {
        let g = grp(&[n]);
        let mut out = vec![seq(&g, "(0)")];
        let mut stack = vec![(Sequence::trivial(&g), 1u64)];
        while let Some((s, from)) = stack.pop() {
            if !s.is_trivial() {
                out.push(s.clone().with(g.neg(&s.sigma()), 1).unwrap());
            }
            for x in from..n {
                let t = s.clone().with(g.element_at(x as usize), 1).unwrap();
                if t.is_zero_sum_free() {
                    stack.push((t, x));
                }
            }
        }
        out.sort_by_key(|s| s.to_string());
        out.dedup();
        out
    }

    #[test]
    fn fix_valuation_over_all_small_cyclic_atoms() {
        for n in [6, 10, 12] {
            let g = grp(&[n]);
            for a in cyclic_atoms(n) {
                let w = fix_valuation(&a).unwrap();
                assert!(w.holds(), "{a} -> {}", w.sequence);
                for (p, e) in factorize(n) {
                    assert!(w.sequence.support().any(|x| valuation(p, g.order(x)) == e), "{a}");
                }
            }
        }
    }

    #[test]
    fn glue_prop_w_examples() {
        let c9 = grp(&[9]);
        let w = glue_prop_w(&seq(&c9, "(1)^9"), &[3], &[2]).unwrap();
        assert!(w.holds());
        assert_eq!(w.claimed, CrossValue::new(15, 9));
        let w = glue_prop_w(&seq(&c9, "(1)^9"), &[3], &[0]).unwrap();
        assert_eq!(w.sequence.len(), 9);
        assert!(w.holds());
        let c6 = grp(&[6]);
        let w = glue_prop_w(&seq(&c6, "(1)^6"), &[2], &[1]).unwrap();
        assert!(w.holds());
        assert_eq!(w.claimed, CrossValue::new(9, 6));
        assert!(glue_prop_w(&seq(&c6, "(1)^6"), &[4], &[1]).is_err());
    }

    #[test]
    fn glue_prop_w_over_small_atoms_and_exponents() {
        for (n, q) in [(6u64, vec![2u64, 3]), (12, vec![2, 4, 3]), (9, vec![3, 3])] {
            for a in cyclic_atoms(n) {
                let mut j = vec![0u64; q.len()];
                loop {
                    let w = glue_prop_w(&a, &q, &j).unwrap();
                    assert!(w.holds(), "{a} {q:?} {j:?} -> {}", w.sequence);
                    let mut i = 0;
                    while i < q.len() && j[i] + 1 == q[i] {
                        j[i] = 0;
                        i += 1;
                    }
                    if i == q.len() {
                        break;
                    }
                    j[i] += 1;
                }
            }
        }
    }

    #[test]
    fn cyclic_examples() {
        let c9 = grp(&[9]);
        let f = c9.element(&[1]).unwrap();
        let s3 = cyclic_sj(&c9, &f, 3).unwrap();
        assert_eq!(s3.sequence, seq(&c9, "(1);(2);(5)"));
        let s2 = cyclic_sj(&c9, &f, 2).unwrap();
        assert_eq!(s2.sequence, seq(&c9, "(1);(7)"));
        let t2 = cyclic_tj(&c9, &f, 2).unwrap();
        assert_eq!(t2.sequence, seq(&c9, "(2);(5)"));
        assert!(!t2.sequence.subset_sums().contains(&c9.element(&[8]).unwrap()));
        assert!(cyclic_sj(&c9, &f, 9).is_err());
        assert!(cyclic_tj(&c9, &f, 8).is_err());
    }

    #[test]
    fn w2pk_examples() {
        let (b1, _) = w2pk_witnesses(3, 2, 1).unwrap();
        assert_eq!(b1.claimed, CrossValue::new(24, 18));
        let (b0, b) = w2pk_witnesses(3, 1, 0).unwrap();
        assert_eq!(b0.kind, SequenceKind::MinimalZeroSum);
        assert!(b.claimed.same_value(&CrossValue::new(7, 6)));
        assert!(b0.holds() && b.holds());
        assert!(w2pk_witnesses(3, 1, 2).is_err());
        assert!(w2pk_witnesses(2, 1, 0).is_err());
    }

    #[test]
    fn c22_examples() {
        let a1 = c22_witnesses(3, 1, 1, C22Variant::Aj).unwrap();
        assert!(a1.claimed.same_value(&CrossValue::new(3, 2)));
        let s2 = c22_witnesses(3, 1, 0, C22Variant::Special2).unwrap();
        assert_eq!(s2.claimed, CrossValue::new(7, 6));
        let s1 = c22_witnesses(3, 1, 0, C22Variant::Special1).unwrap();
        assert_eq!(s1.claimed, CrossValue::new(8, 6));
        assert!(a1.holds() && s1.holds() && s2.holds());
        assert!(c22_witnesses(3, 1, 2, C22Variant::AjPrime).is_err());
    }

    #[test]
    fn gap_examples() {
        let shape = |closed, deficit, swaps| GapShape { closed, deficit, swaps };
        for (sh, num) in [(shape(false, 0, 0), 52), (shape(false, 0, 1), 50), (shape(false, 1, 0), 49)] {
            let w = gap_witness(11, 1, 3, 1, sh).unwrap();
            assert_eq!(w.claimed, CrossValue::new(num, 33));
            assert!(w.holds());
        }
        let w = gap_witness(11, 1, 3, 1, shape(true, 0, 1)).unwrap();
        assert_eq!(w.claimed.numerator, 51);
        assert!(w.holds());
        assert!(matches!(
            gap_witness(7, 1, 3, 1, shape(false, 0, 0)),
            Err(ConstructionError::Regime { needed: 9, .. })
        ));
    }
}
