//! Closed forms for `k*`, `K*`, predicted shapes of `w(G)` and `W(G)`, integer
//! set utilities, and the harness that checks predictions against computed sets.
//!
//! A [`Prediction`] carries its preconditions; when one fails the prediction is
//! not comparable and can produce neither a pass nor a failure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{factorize, is_prime, prime_power_base, valuation};
use crate::group::{FiniteAbelianGroup, GroupElement, GroupError, DEFAULT_SUBGROUP_BOUND};
use crate::search::{enumerate_subgroup_profiles, eta, Budget, SearchError, SearchResult, DEFAULT_ETA_BOUND};
use crate::sequence::{CrossSet, CrossValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

type Result<T> = std::result::Result<T, FormulaError>;

/// `k*(G) = Σ (q_i - 1)/q_i` over the prime-power decomposition; `0` for the trivial group.
pub fn k_star(group: &FiniteAbelianGroup) -> CrossValue {
    let exp = group.exponent();
    let numerator = group.prime_power_factors().iter().map(|&q| (q - 1) * (exp / q)).sum();
    CrossValue::new(numerator, exp)
}

/// `K*(G) = 1/exp(G) + k*(G)`; `1` for the trivial group.
pub fn big_k_star(group: &FiniteAbelianGroup) -> CrossValue {
    let k = k_star(group);
    CrossValue::new(k.numerator + 1, k.denominator)
}

/// `D(G)` where a closed form is known: `|G|` for cyclic groups and
/// `1 + Σ (q_i - 1)` for `p`-groups.
pub fn davenport_closed_form(group: &FiniteAbelianGroup) -> Option<u64> {
    if group.is_cyclic() {
        return Some(group.cardinality());
    }
    group
        .p_group_prime()
        .map(|_| 1 + group.prime_power_factors().iter().map(|q| q - 1).sum::<u64>())
}

/// Results that make predictions, under descriptive ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// `w` and `W` of `p`-groups.
    PGroup,
    /// `w` and `W` of `C_{2p^k}`.
    Cyclic2pk,
    /// `w` and `W` of `C_2^r ⊕ G_p` for odd `p` and `r ≤ 2`.
    C2rOdd,
    /// Progressions contained in `w` and `W` for `G = H ⊕ C_n`.
    LowerBounds,
    /// Gaps near the top of `w` and `W` for `C_p^r ⊕ C_q^s`.
    Gap,
    /// Structural facts that hold for every group.
    Invariants,
    /// What equal sets of cross numbers say about two groups.
    ExponentPair,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::PGroup,
        Theorem::Cyclic2pk,
        Theorem::C2rOdd,
        Theorem::LowerBounds,
        Theorem::Gap,
        Theorem::Invariants,
        Theorem::ExponentPair,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::PGroup => "p-group",
            Theorem::Cyclic2pk => "cyclic-2pk",
            Theorem::C2rOdd => "c2r-odd",
            Theorem::LowerBounds => "lower-bounds",
            Theorem::Gap => "gap",
            Theorem::Invariants => "invariants",
            Theorem::ExponentPair => "exp-pair",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Theorem::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Theorem::ALL.iter().map(|t| t.id()).collect();
            format!("unknown theorem {s:?}; expected one of {}", ids.join(", "))
        })
    }
}

/// Which set a prediction talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    #[serde(rename = "w")]
    ZeroSumFree,
    #[serde(rename = "W")]
    Minimal,
}

impl Target {
    fn of(self, result: &SearchResult) -> &CrossSet {
        match self {
            Target::ZeroSumFree => &result.w_set,
            Target::Minimal => &result.big_w_set,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Target::ZeroSumFree => "w",
            Target::Minimal => "W",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// The computed set equals the predicted one.
    Equals,
    /// The predicted set is contained in the computed one.
    SubsetOfComputed,
    /// The predicted set contains the computed one.
    SupersetOfComputed,
    /// No predicted value occurs in the computed set.
    Excludes,
}

impl Relation {
    pub fn id(self) -> &'static str {
        match self {
            Relation::Equals => "equals",
            Relation::SubsetOfComputed => "subset-of-computed",
            Relation::SupersetOfComputed => "superset-of-computed",
            Relation::Excludes => "excludes",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precondition {
    pub description: String,
    pub holds: bool,
}

impl Precondition {
    fn new(description: impl Into<String>, holds: bool) -> Self {
        Precondition { description: description.into(), holds }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub theorem: Theorem,
    pub group: FiniteAbelianGroup,
    pub target: Target,
    pub relation: Relation,
    pub predicted: CrossSet,
    pub preconditions: Vec<Precondition>,
}

impl Prediction {
    pub fn comparable(&self) -> bool {
        self.preconditions.iter().all(|c| c.holds)
    }

    /// Numerators witnessing a violation of the relation against `computed`.
    pub fn violations(&self, computed: &CrossSet) -> Vec<u64> {
        let p = &self.predicted;
        let mut out: BTreeSet<u64> = BTreeSet::new();
        match self.relation {
            Relation::Equals => {
                out.extend(p.missing_from(computed));
                out.extend(computed.missing_from(p));
            }
            Relation::SubsetOfComputed => out.extend(p.missing_from(computed)),
            Relation::SupersetOfComputed => out.extend(computed.missing_from(p)),
            Relation::Excludes => out.extend(p.values().filter_map(|v| {
                let r = v.rescale(computed.denominator)?;
                computed.contains(r.numerator).then_some(v.numerator)
            })),
        }
        out.into_iter().collect()
    }

    pub fn check(&self, computed: Option<&SearchResult>) -> Report {
        let mut details = ReportDetails {
            comparable: false,
            counterexamples: Vec::new(),
            denominator: self.predicted.denominator,
            note: format!("predicted {}", self.predicted),
            target: self.target.name().to_string(),
        };
        let failed: Vec<&str> =
            self.preconditions.iter().filter(|c| !c.holds).map(|c| c.description.as_str()).collect();
        let pass = match computed {
            _ if !failed.is_empty() => {
                details.note = format!("precondition failed: {}", failed.join("; "));
                false
            }
            None => {
                details.note = "search incomplete".to_string();
                false
            }
            Some(result) => {
                details.comparable = true;
                details.counterexamples = self.violations(self.target.of(result));
                details.counterexamples.is_empty()
            }
        };
        Report {
            details,
            group: self.group.to_string(),
            pass,
            relation: self.relation.id().to_string(),
            theorem: self.theorem.id().to_string(),
        }
    }
}

/// One checked claim. Fields are declared in sorted order so serialized
/// reports have sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub details: ReportDetails,
    pub group: String,
    pub pass: bool,
    pub relation: String,
    pub theorem: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDetails {
    /// False when a precondition failed or the search was incomplete.
    pub comparable: bool,
    pub counterexamples: Vec<u64>,
    pub denominator: u64,
    pub note: String,
    /// `w`, `W`, or empty for checks on constants.
    pub target: String,
}

impl Report {
    fn scalar(theorem: Theorem, group: &FiniteAbelianGroup, relation: &str, pass: bool, note: String) -> Self {
        Report {
            details: ReportDetails {
                comparable: true,
                counterexamples: Vec::new(),
                denominator: group.exponent(),
                note,
                target: String::new(),
            },
            group: group.to_string(),
            pass,
            relation: relation.to_string(),
            theorem: theorem.id().to_string(),
        }
    }

    fn incomparable(theorem: Theorem, group: &FiniteAbelianGroup, note: String) -> Self {
        let mut r = Report::scalar(theorem, group, "none", false, note);
        r.details.comparable = false;
        r
    }

    /// A failure that counts: comparable and not passing.
    pub fn is_failure(&self) -> bool {
        self.details.comparable && !self.pass
    }
}

fn prediction(
    theorem: Theorem,
    group: &FiniteAbelianGroup,
    target: Target,
    relation: Relation,
    predicted: CrossSet,
    preconditions: Vec<Precondition>,
) -> Prediction {
    Prediction { theorem, group: group.clone(), target, relation, predicted, preconditions }
}

/// `W` and `w` of a `p`-group: `W = (1/n)[2, n K*]`, or `(2/n)[1, n K*/2]` when
/// `p = 2` and `n_{r-1} < n_r`; `w = (1/n)[1, n k*]`.
pub fn predict_pgroup(group: &FiniteAbelianGroup) -> Result<(Prediction, Prediction)> {
    let p = group
        .p_group_prime()
        .ok_or_else(|| FormulaError::NotApplicable(format!("{group} is not a p-group")))?;
    let n = group.exponent();
    let f = group.invariant_factors();
    let halved = p == 2 && (f.len() < 2 || f[f.len() - 2] < f[f.len() - 1]);
    let top = big_k_star(group).numerator;
    let big_w = if halved {
        CrossSet::progression(n, 2, 1, top / 2)
    } else {
        CrossSet::progression(n, 1, 2, top)
    };
    let pre = vec![Precondition::new(format!("{group} is a {p}-group"), true)];
    let small_w = CrossSet::progression(n, 1, 1, k_star(group).numerator);
    Ok((
        prediction(Theorem::PGroup, group, Target::Minimal, Relation::Equals, big_w, pre.clone()),
        prediction(Theorem::PGroup, group, Target::ZeroSumFree, Relation::Equals, small_w, pre),
    ))
}

fn odd_prime_power(p: u64, k: u32) -> Result<u64> {
    if !is_prime(p) || p == 2 || k == 0 {
        return Err(FormulaError::NotApplicable(format!("need an odd prime and k >= 1, got p={p}, k={k}")));
    }
    Ok(p.pow(k))
}

/// `W(C_{2p^k}) = (2/2p^k)[1, p^k K*]` and `w(C_{2p^k}) = (1/2p^k)[1, 3p^k - 2]`.
pub fn predict_2pk(p: u64, k: u32) -> Result<(Prediction, Prediction)> {
    let pk = odd_prime_power(p, k)?;
    let group = FiniteAbelianGroup::cyclic(2 * pk)?;
    let n = 2 * pk;
    let pre = vec![Precondition::new(format!("{p} is an odd prime"), true)];
    let top = big_k_star(&group).numerator;
    Ok((
        prediction(Theorem::Cyclic2pk, &group, Target::Minimal, Relation::Equals, CrossSet::progression(n, 2, 1, top / 2), pre.clone()),
        prediction(Theorem::Cyclic2pk, &group, Target::ZeroSumFree, Relation::Equals, CrossSet::progression(n, 1, 1, 3 * pk - 2), pre),
    ))
}

/// `G = C_2^r ⊕ G_p` with `G_p` of odd prime-power exponent and `r ∈ {1, 2}`:
/// `W = (2/n)[1, n K*/2]` for `r = 1`, `W = (1/n)[2, n K*]` for `r = 2`, and
/// `w = (1/n)[1, n k*]`.
pub fn predict_c2r_odd(g_p: &FiniteAbelianGroup, r: usize) -> Result<(Prediction, Prediction)> {
    let odd_p = g_p.p_group_prime().filter(|&p| p != 2);
    let orders: Vec<u64> = std::iter::repeat(2).take(r).chain(g_p.invariant_factors().iter().copied()).collect();
    let group = FiniteAbelianGroup::from_orders(&orders)?;
    let pre = vec![
        Precondition::new(format!("{g_p} is a p-group for an odd prime p"), odd_p.is_some()),
        Precondition::new(format!("r = {r} is 1 or 2"), r == 1 || r == 2),
    ];
    let n = group.exponent();
    let top = big_k_star(&group).numerator;
    let big_w = if r == 1 { CrossSet::progression(n, 2, 1, top / 2) } else { CrossSet::progression(n, 1, 2, top) };
    let small_w = CrossSet::progression(n, 1, 1, k_star(&group).numerator);
    Ok((
        prediction(Theorem::C2rOdd, &group, Target::Minimal, Relation::Equals, big_w, pre.clone()),
        prediction(Theorem::C2rOdd, &group, Target::ZeroSumFree, Relation::Equals, small_w, pre),
    ))
}

/// The complement `H` in `G = H ⊕ C_{exp(G)}`: drop the largest invariant factor.
pub fn exponent_complement(group: &FiniteAbelianGroup) -> FiniteAbelianGroup {
    let f = group.invariant_factors();
    FiniteAbelianGroup::from_orders(&f[..f.len().saturating_sub(1)]).expect("invariant factors are >= 2")
}

/// Has a subgroup `C_{2^k} ⊕ C_{2^k}` with `2^k` the full 2-part of the exponent.
pub fn has_full_two_square(group: &FiniteAbelianGroup) -> bool {
    let k = valuation(2, group.exponent());
    k >= 1 && group.invariant_factors().iter().filter(|&&m| valuation(2, m) == k).count() >= 2
}

/// Inclusions for `G = H ⊕ C_n` with `exp(G) = n`:
/// * `(1/n)[1, n-1+n k*(H)] ⊆ w(G)`;
/// * `(1/n)[2, n+n k*(H)] ⊆ W(G)` for odd `n`, `(2/n)[1, (n+n k*(H))/2] ⊆ W(G)` for even `n`;
/// * `(1/n)[1, (n-1)s] ⊆ w(G)` where `s` counts the summands of exponent `n`;
/// * `(1/n)[2, n] ⊆ W(G)` for odd `|G|` or when `G` contains `C_{2^k}^2`, else `(2/n)[1, n/2]`.
pub fn predict_lower_bounds(group: &FiniteAbelianGroup, h: &FiniteAbelianGroup) -> Result<Vec<Prediction>> {
    if group.is_trivial() {
        return Err(FormulaError::NotApplicable("trivial group".into()));
    }
    let n = group.exponent();
    let mut orders = h.invariant_factors().to_vec();
    orders.push(n);
    let pre = vec![
        Precondition::new(format!("exp({h}) divides {n}"), n % h.exponent() == 0),
        Precondition::new(format!("{h} + C_{n} is {group}"), &FiniteAbelianGroup::from_orders(&orders)? == group),
    ];
    let kh = k_star(h);
    // n k*(H), exact because exp(H) | n (checked above; 0 otherwise)
    let nkh = if n % kh.denominator == 0 { kh.numerator * (n / kh.denominator) } else { 0 };
    let s = group.invariant_factors().iter().filter(|&&m| m == n).count() as u64;
    let mut out = vec![
        prediction(Theorem::LowerBounds, group, Target::ZeroSumFree, Relation::SubsetOfComputed,
            CrossSet::progression(n, 1, 1, n - 1 + nkh), pre.clone()),
        prediction(Theorem::LowerBounds, group, Target::Minimal, Relation::SubsetOfComputed,
            if n % 2 == 1 {
                CrossSet::progression(n, 1, 2, n + nkh)
            } else {
                CrossSet::progression(n, 2, 1, (n + nkh) / 2)
            },
            pre),
        prediction(Theorem::LowerBounds, group, Target::ZeroSumFree, Relation::SubsetOfComputed,
            CrossSet::progression(n, 1, 1, (n - 1) * s),
            vec![Precondition::new(format!("{s} summands of exponent {n}"), s >= 1)]),
    ];
    let full = group.cardinality() % 2 == 1 || has_full_two_square(group);
    out.push(prediction(Theorem::LowerBounds, group, Target::Minimal, Relation::SubsetOfComputed,
        if full { CrossSet::progression(n, 1, 2, n) } else { CrossSet::progression(n, 2, 1, n / 2) },
        Vec::new()));
    Ok(out)
}

/// `Σ (1/q_i)[0, q_i-1] + w(C_n) ⊆ w(G)` and the same with `W`, for
/// `G = C_n ⊕ C_{q_1} ⊕ ... ⊕ C_{q_t}` and prime powers `q_i | n`, given the
/// computed sets of `C_n`.
pub fn predict_cyclic_extensions(n: u64, q: &[u64], cyclic: &SearchResult) -> Result<Vec<Prediction>> {
    let orders: Vec<u64> = std::iter::once(n).chain(q.iter().copied()).collect();
    let group = FiniteAbelianGroup::from_orders(&orders)?;
    let pre: Vec<Precondition> = q
        .iter()
        .map(|&qi| Precondition::new(format!("{qi} is a prime power dividing {n}"), prime_power_base(qi).is_some() && n % qi == 0))
        .collect();
    let comparable = pre.iter().all(|c| c.holds) && cyclic.w_set.denominator == n;
    let mut offsets: BTreeSet<u64> = BTreeSet::from([0]);
    if comparable {
        for &qi in q {
            let steps: BTreeSet<u64> = (0..qi).map(|j| j * (n / qi)).collect();
            offsets = sumset(&offsets, &steps);
        }
    }
    let lift = |set: &CrossSet| CrossSet::from_numerators(n, sumset(&offsets, &set.numerators));
    Ok(vec![
        prediction(Theorem::LowerBounds, &group, Target::ZeroSumFree, Relation::SubsetOfComputed, lift(&cyclic.w_set), pre.clone()),
        prediction(Theorem::LowerBounds, &group, Target::Minimal, Relation::SubsetOfComputed, lift(&cyclic.big_w_set), pre),
    ])
}

/// Gap structure of `w` and `W` over `C_p^r ⊕ C_q^s` for odd primes `p > q`
/// with `p ≥ η(C_q^s) + 2q`. With `M = pq k*`:
/// * `w ⊆ (1/pq)([1, M] \ ([M-(2q-3), M-(q+1)] ∪ [M-(q-2), M-1]))`;
/// * `{M-(2q-2), M-q, M-(q-1), M} ⊆ pq w`;
/// * the same shape for `W` around `pq K* = M + 1`, starting at 2.
///
/// `η(C_q^s)` is computed by search.
pub fn predict_gaps(p: u64, r: usize, q: u64, s: usize, budget: Budget) -> Result<Vec<Prediction>> {
    let shape_ok = is_prime(p) && is_prime(q) && q > 2 && p > q && r >= 1 && s >= 1;
    if !shape_ok {
        return Err(FormulaError::NotApplicable(format!(
            "need odd primes p > q and r, s >= 1, got p={p}, r={r}, q={q}, s={s}"
        )));
    }
    let orders: Vec<u64> = std::iter::repeat(p).take(r).chain(std::iter::repeat(q).take(s)).collect();
    let group = FiniteAbelianGroup::from_orders(&orders)?;
    let cqs = FiniteAbelianGroup::from_orders(&vec![q; s])?;
    let eta_q = eta(&cqs, DEFAULT_ETA_BOUND, budget)?;
    let pre = vec![Precondition::new(
        format!("p = {p} >= eta(C_{q}^{s}) + 2q = {eta_q} + {}", 2 * q),
        p >= eta_q + 2 * q,
    )];
    let pq = p * q;
    let mut out = Vec::new();
    for (target, top, bottom) in [
        (Target::ZeroSumFree, k_star(&group).numerator, 1),
        (Target::Minimal, big_k_star(&group).numerator, 2),
    ] {
        let gaps: BTreeSet<u64> = (top + 1 - (2 * q - 3).min(top)..=top - (q + 1))
            .chain(top - (q - 2)..=top - 1)
            .filter(|&x| x + 2 * q - 3 >= top)
            .collect();
        let gaps: BTreeSet<u64> = gaps.into_iter().filter(|x| in_gap(*x, top, q)).collect();
        let allowed = (bottom..=top).filter(|x| !gaps.contains(x));
        let required = [top - (2 * q - 2), top - q, top - (q - 1), top];
        out.push(prediction(Theorem::Gap, &group, target, Relation::SupersetOfComputed,
            CrossSet::from_numerators(pq, allowed), pre.clone()));
        out.push(prediction(Theorem::Gap, &group, target, Relation::Excludes,
            CrossSet::from_numerators(pq, gaps), pre.clone()));
        out.push(prediction(Theorem::Gap, &group, target, Relation::SubsetOfComputed,
            CrossSet::from_numerators(pq, required), pre.clone()));
    }
    Ok(out)
}

/// `x ∈ [top-(2q-3), top-(q+1)] ∪ [top-(q-2), top-1]`.
fn in_gap(x: u64, top: u64, q: u64) -> bool {
    let d = top as i64 - x as i64;
    let q = q as i64;
    (q + 1..=2 * q - 3).contains(&d) || (1..=q - 2).contains(&d)
}

/// Successive differences of a set with at least two elements.
pub fn delta_set(a: &BTreeSet<u64>) -> BTreeSet<u64> {
    a.iter().zip(a.iter().skip(1)).map(|(x, y)| y - x).collect()
}

/// `[0, l-1] + A`.
pub fn interval_add(l: u64, a: &BTreeSet<u64>) -> BTreeSet<u64> {
    sumset(&(0..l).collect(), a)
}

pub fn sumset(a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> BTreeSet<u64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

/// `A + ... + A` (`s` copies); `{0}` for `s = 0`.
pub fn s_fold(a: &BTreeSet<u64>, s: usize) -> BTreeSet<u64> {
    (0..s).fold(BTreeSet::from([0]), |acc, _| sumset(&acc, a))
}

/// `(num/den) · A`, or `None` if some element leaves the integers.
pub fn dilate(num: u64, den: u64, a: &BTreeSet<u64>) -> Option<BTreeSet<u64>> {
    assert!(den > 0, "dilation denominator must be positive");
    a.iter().map(|&x| (x * num % den == 0).then_some(x * num / den)).collect()
}

/// A finite set written as `lower ⊎ [lo, hi] ⊎ upper`, where `[lo, hi]` is the
/// longest run of consecutive integers (the first one on ties).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldShape {
    pub lower: Vec<u64>,
    pub interval: (u64, u64),
    pub upper: Vec<u64>,
}

pub fn fold_shape(set: &BTreeSet<u64>) -> Option<FoldShape> {
    let mut best: Option<(u64, u64)> = None;
    let mut run: Option<(u64, u64)> = None;
    for &x in set {
        run = match run {
            Some((lo, hi)) if hi + 1 == x => Some((lo, x)),
            _ => Some((x, x)),
        };
        let (lo, hi) = run.expect("just set");
        if best.map_or(true, |(a, b)| hi - lo > b - a) {
            best = Some((lo, hi));
        }
    }
    let (lo, hi) = best?;
    Some(FoldShape {
        lower: set.range(..lo).copied().collect(),
        interval: (lo, hi),
        upper: set.range(hi + 1..).copied().collect(),
    })
}

/// The shape of the `s`-fold sumset of `exp(G) w°(G) = {0} ∪ exp(G) w(G)`.
/// Purely descriptive: how large the fringes around the central interval are.
pub fn fold_probe(result: &SearchResult, s: usize) -> Option<FoldShape> {
    let mut a = result.w_set.numerators.clone();
    a.insert(0);
    fold_shape(&s_fold(&a, s))
}

/// Splits `G` as `C_2^r ⊕ G_p` with `G_p` of odd prime-power exponent.
fn c2r_odd_split(group: &FiniteAbelianGroup) -> Option<(FiniteAbelianGroup, usize)> {
    let q = group.prime_power_factors();
    let r = q.iter().filter(|&&x| x == 2).count();
    let odd: Vec<u64> = q.iter().copied().filter(|&x| x % 2 == 1).collect();
    if r + odd.len() != q.len() || odd.is_empty() {
        return None;
    }
    let g_p = FiniteAbelianGroup::from_orders(&odd).ok()?;
    g_p.p_group_prime().map(|_| (g_p, r))
}

/// Splits `G` as `C_p^r ⊕ C_q^s` with primes `p > q`.
fn elementary_pair(group: &FiniteAbelianGroup) -> Option<(u64, usize, u64, usize)> {
    let f = factorize(group.exponent());
    match f.as_slice() {
        [(q, 1), (p, 1)] => Some((*p, group.p_rank(*p), *q, group.p_rank(*q))),
        _ => None,
    }
}

/// The predictions a theorem makes about `group`, with parameters read off its structure.
pub fn predictions_for(theorem: Theorem, group: &FiniteAbelianGroup, budget: Budget) -> Result<Vec<Prediction>> {
    let not = |what: &str| FormulaError::NotApplicable(format!("{group} is not {what}"));
    match theorem {
        Theorem::PGroup => predict_pgroup(group).map(|(a, b)| vec![a, b]),
        Theorem::Cyclic2pk => {
            let n = group.exponent();
            let base = (group.is_cyclic() && n % 4 == 2).then(|| prime_power_base(n / 2)).flatten();
            match base {
                Some(p) if p != 2 => predict_2pk(p, valuation(p, n)).map(|(a, b)| vec![a, b]),
                _ => Err(not("cyclic of order 2p^k")),
            }
        }
        Theorem::C2rOdd => {
            let (g_p, r) = c2r_odd_split(group).ok_or_else(|| not("C_2^r + G_p with G_p an odd p-group"))?;
            if r == 0 {
                return Err(not("C_2^r + G_p with r >= 1"));
            }
            predict_c2r_odd(&g_p, r).map(|(a, b)| vec![a, b])
        }
        Theorem::LowerBounds => predict_lower_bounds(group, &exponent_complement(group)),
        Theorem::Gap => {
            let (p, r, q, s) = elementary_pair(group).ok_or_else(|| not("C_p^r + C_q^s"))?;
            predict_gaps(p, r, q, s, budget)
        }
        Theorem::Invariants | Theorem::ExponentPair => Ok(Vec::new()),
    }
}

/// Checks everything `theorem` claims about `group` against `computed`
/// (`None` when the search did not finish).
pub fn verify(
    theorem: Theorem,
    group: &FiniteAbelianGroup,
    computed: Option<&SearchResult>,
    budget: Budget,
) -> Result<Vec<Report>> {
    match theorem {
        Theorem::Invariants => Ok(match computed {
            None => vec![Report::incomparable(theorem, group, "search incomplete".into())],
            Some(result) => {
                let mut reports = invariant_reports(group, result);
                if group.cardinality() <= DEFAULT_SUBGROUP_BOUND {
                    match enumerate_subgroup_profiles(group, budget) {
                        Ok(profiles) => reports.push(subgroup_report(group, result, &profiles)),
                        Err(e) => reports.push(Report::incomparable(theorem, group, format!("subgroups: {e}"))),
                    }
                }
                reports
            }
        }),
        Theorem::ExponentPair => Err(FormulaError::NotApplicable("exp-pair compares two groups; use compare_pair".into())),
        _ => Ok(predictions_for(theorem, group, budget)?.iter().map(|p| p.check(computed)).collect()),
    }
}

/// Facts every group satisfies, plus the inclusions of [`predict_lower_bounds`].
pub fn invariant_reports(group: &FiniteAbelianGroup, result: &SearchResult) -> Vec<Report> {
    let th = Theorem::Invariants;
    let exp = group.exponent();
    let card = group.cardinality();
    let big_k = result.big_k_max.numerator;
    let k = result.k_max.map_or(0, |v| v.numerator);
    let mut out = Vec::new();
    let min_of = |s: &CrossSet| s.numerators.first().copied();
    if card >= 3 {
        let m = min_of(&result.big_w_set);
        out.push(Report::scalar(th, group, "min", m == Some(2), format!("min W = {m:?}/{exp}, expected 2/{exp}")));
    }
    if card >= 2 {
        let m = min_of(&result.w_set);
        out.push(Report::scalar(th, group, "min", m == Some(1), format!("min w = {m:?}/{exp}, expected 1/{exp}")));
    }
    out.push(Report::scalar(th, group, "inequality", big_k >= 1 + k, format!("K = {big_k}/{exp} >= 1/{exp} + k = {}/{exp}", 1 + k)));
    let ks = k_star(group).numerator;
    let big_ks = big_k_star(group).numerator;
    if big_k == big_ks {
        out.push(Report::scalar(th, group, "implication", k == ks && big_k == 1 + k,
            format!("K = K* = {big_k}/{exp} forces k = k* = {ks}/{exp} and K = 1/{exp} + k")));
    }
    // no counterexample is known; a failure here would be a finding
    out.push(Report::scalar(th, group, "equals", big_k == big_ks && k == ks,
        format!("K = {big_k}, K* = {big_ks}, k = {k}, k* = {ks} (over {exp})")));

    let bounds = |target: Target, predicted: CrossSet, preconditions: Vec<Precondition>| {
        prediction(th, group, target, Relation::SupersetOfComputed, predicted, preconditions).check(Some(result))
    };
    if card >= 2 {
        out.push(bounds(Target::Minimal, CrossSet::progression(exp, 1, 2, big_k), Vec::new()));
        out.push(bounds(Target::ZeroSumFree, CrossSet::progression(exp, 1, 1, k), Vec::new()));
    }
    if card % 2 == 0 && !has_full_two_square(group) {
        out.push(bounds(Target::Minimal, CrossSet::progression(exp, 2, 1, big_k / 2),
            vec![Precondition::new(format!("{group} has no subgroup C_{0}^2", 1u64 << valuation(2, exp)), true)]));
    }
    if let Some((p, _, q, _)) = elementary_pair(group) {
        // W ⊆ 1/pq + w
        let shifted = CrossSet::from_numerators(exp, result.w_set.numerators.iter().map(|x| x + 1));
        out.push(bounds(Target::Minimal, shifted,
            vec![Precondition::new(format!("{group} is C_{p}^r + C_{q}^s"), true)]));
    }
    if card >= 2 {
        if let Ok(predictions) = predict_lower_bounds(group, &exponent_complement(group)) {
            out.extend(predictions.iter().map(|p| p.check(Some(result))));
        }
    }
    out
}

/// `w(H) ⊆ w(G)` for every subgroup, with equality exactly for `H = G`.
pub fn subgroup_report(
    group: &FiniteAbelianGroup,
    full: &SearchResult,
    profiles: &[(FiniteAbelianGroup, Vec<GroupElement>, SearchResult)],
) -> Report {
    let mut bad = Vec::new();
    let mut counterexamples = BTreeSet::new();
    for (class, elements, result) in profiles {
        let missing = result.w_set.missing_from(&full.w_set);
        let equal = result.w_set.same_values(&full.w_set);
        let is_whole = elements.len() as u64 == group.cardinality();
        if !missing.is_empty() || equal != is_whole {
            bad.push(format!("{class} ({} elements)", elements.len()));
            counterexamples.extend(missing);
        }
    }
    let mut r = Report::scalar(
        Theorem::Invariants,
        group,
        "subgroup-inclusion",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} subgroups checked", profiles.len())
        } else {
            format!("violations: {}", bad.join(", "))
        },
    );
    r.details.target = "w".into();
    r.details.counterexamples = counterexamples.into_iter().collect();
    r
}

/// What equal sets say about two groups:
/// * `|G|, |G'| ≥ 3` and `W(G) = W(G')` imply equal exponents and `K`;
/// * for an odd `p`-group `G`, `W(G) = W(G')` iff equal exponents and `K`;
/// * for a `p`-group `G`, `w(G) = w(G')` iff equal exponents and `k`.
pub fn compare_pair(
    g1: &FiniteAbelianGroup,
    r1: &SearchResult,
    g2: &FiniteAbelianGroup,
    r2: &SearchResult,
) -> Vec<Report> {
    let th = Theorem::ExponentPair;
    let pair = FiniteAbelianGroup::from_orders(&[]).expect("trivial");
    let label = format!("{g1} | {g2}");
    let same_exp = g1.exponent() == g2.exponent();
    let same_big_k = r1.big_k_max.same_value(&r2.big_k_max);
    let same_k = match (r1.k_max, r2.k_max) {
        (Some(a), Some(b)) => a.same_value(&b),
        (a, b) => a.is_none() && b.is_none(),
    };
    let same_big_w = r1.big_w_set.same_values(&r2.big_w_set);
    let same_w = r1.w_set.same_values(&r2.w_set);
    let mut out = Vec::new();
    let mut push = |relation: &str, pass: bool, note: String| {
        let mut r = Report::scalar(th, &pair, relation, pass, note);
        r.group = label.clone();
        r.details.denominator = 0;
        out.push(r);
    };
    if g1.cardinality() >= 3 && g2.cardinality() >= 3 {
        push("implication", !same_big_w || (same_exp && same_big_k),
            format!("W equal: {same_big_w}; exp equal: {same_exp}; K equal: {same_big_k}"));
    }
    for (g, other) in [(g1, g2), (g2, g1)] {
        if let Some(p) = g.p_group_prime() {
            if p != 2 {
                push("equivalence", same_big_w == (same_exp && same_big_k),
                    format!("{g} is an odd p-group, {other}: W equal {same_big_w}, exp and K equal {}", same_exp && same_big_k));
            }
            push("equivalence", same_w == (same_exp && same_k),
                format!("{g} is a p-group, {other}: w equal {same_w}, exp and k equal {}", same_exp && same_k));
        }
    }
    out
}

/// A group and the theorem checked on it by the desk suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeskCase {
    pub theorem: Theorem,
    pub orders: Vec<u64>,
}

pub const DESK_PGROUPS: [&[u64]; 11] =
    [&[4], &[8], &[9], &[27], &[2, 2], &[2, 4], &[2, 2, 2], &[3, 3], &[3, 9], &[5, 5], &[4, 4]];
pub const DESK_2PK: [&[u64]; 4] = [&[6], &[10], &[14], &[18]];
pub const DESK_C2R_ODD: [&[u64]; 2] = [&[2, 2, 3], &[2, 2, 9]];
pub const DESK_GAP: [&[u64]; 1] = [&[33]];

/// Every desk group with its dedicated theorem, then the invariants over all of them.
pub fn desk_suite() -> Vec<DeskCase> {
    let mut cases = Vec::new();
    for (theorem, groups) in [
        (Theorem::PGroup, &DESK_PGROUPS[..]),
        (Theorem::Cyclic2pk, &DESK_2PK[..]),
        (Theorem::C2rOdd, &DESK_C2R_ODD[..]),
        (Theorem::Gap, &DESK_GAP[..]),
    ] {
        for g in groups {
            cases.push(DeskCase { theorem, orders: g.to_vec() });
        }
    }
    let all: Vec<Vec<u64>> = cases.iter().map(|c| c.orders.clone()).collect();
    for orders in all {
        cases.push(DeskCase { theorem: Theorem::Invariants, orders });
    }
    cases
}
