//! Short/long subset calculus, genericity, strata and chamber signatures.
//!
//! A subset `J ⊆ {1,…,n}` is *short* for a length vector `ℓ` when its bar
//! sum is less than the sum of the complement, *long* when the complement
//! is short, and *degenerate* when both sums tie. Generic vectors have no
//! degenerate subsets. For an ordered generic vector the chamber is
//! recorded by the family of `J ⊆ {1,…,n−1}` with `J ∪ {n}` short (the
//! signature), or equivalently by the antichain of its maximal elements
//! under the dominance order (the genetic code).

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::rat::{parse_rat_list, Rat};
use crate::{Error, Result, MAX_BARS};

/// A subset of `{1,…,n}` stored as a bitmask (bit `j−1` encodes index `j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Mask from 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &i in indices {
            assert!((1..=MAX_BARS).contains(&i), "index {i} out of range");
            bits |= 1 << (i - 1);
        }
        SubsetMask(bits)
    }

    /// Full set `{1,…,n}`.
    pub fn full(n: usize) -> Self {
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    /// Sorted 1-based indices.
    pub fn indices(self) -> Vec<usize> {
        (1..=MAX_BARS).filter(|&i| self.contains(i)).collect()
    }

    pub fn contains(self, index: usize) -> bool {
        index >= 1 && self.0 & (1 << (index - 1)) != 0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, index: usize) -> Self {
        SubsetMask(self.0 | 1 << (index - 1))
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        SubsetMask(Self::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }

    /// Canonical comparison key: cardinality first, then bit value.
    pub fn canonical_key(self) -> (usize, u32) {
        (self.card(), self.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubsetMask {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(d)?;
        for &i in &indices {
            if !(1..=MAX_BARS).contains(&i) {
                return Err(serde::de::Error::custom(format!("index {i} out of range")));
            }
        }
        Ok(SubsetMask::from_indices(&indices))
    }
}

/// Dominance order on subsets of `{1,…,n−1}`: `a ≤ b` iff there is an
/// order-preserving injection `φ: a → b` with `x ≤ φ(x)`. Equivalently,
/// matching the `r = |a|` largest elements of `b` against `a` succeeds
/// componentwise.
pub fn poset_leq(a: SubsetMask, b: SubsetMask) -> bool {
    let r = a.card();
    let s = b.card();
    if r > s {
        return false;
    }
    let ai = a.indices();
    let bi = b.indices();
    // Match top-down: the t-th largest of `a` against the t-th largest of `b`.
    (0..r).all(|t| ai[r - 1 - t] <= bi[s - 1 - t])
}

/// How a subset compares against its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shortness {
    Short,
    Long,
    Degenerate,
}

/// A vector of positive rational bar lengths.
#[derive(Clone, PartialEq, Eq)]
pub struct LengthVector {
    entries: Vec<Rat>,
}

impl LengthVector {
    pub fn new(entries: Vec<Rat>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::InvalidInput("need at least 3 bars".into()));
        }
        if entries.len() > MAX_BARS {
            return Err(Error::OutOfRange(format!(
                "at most {MAX_BARS} bars are supported, got {}",
                entries.len()
            )));
        }
        if entries.iter().any(|e| *e <= Rat::zero()) {
            return Err(Error::InvalidInput("bar lengths must be positive".into()));
        }
        Ok(LengthVector { entries })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| crate::rat::rat(v)).collect())
    }

    /// Parses a comma-separated list of rationals.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_rat_list(s)?)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn total(&self) -> Rat {
        self.entries.iter().sum()
    }

    pub fn subset_sum(&self, mask: SubsetMask) -> Rat {
        let mut acc = Rat::zero();
        for (i, e) in self.entries.iter().enumerate() {
            if mask.contains(i + 1) {
                acc += e;
            }
        }
        acc
    }

    pub fn is_ordered(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Debug for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Permutation `σ` with `ℓσ = (ℓ_{σ(1)},…,ℓ_{σ(n)})` ordered; images are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Image of a set of sorted positions under `σ` (used to pull strata of
    /// the ordered representative back to the original indexing).
    pub fn push_mask(&self, mask: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for i in mask.indices() {
            out = out.with(self.0[i - 1]);
        }
        out
    }
}

/// Classifies `J ⊆ {1,…,n}` against its complement by exact comparison.
pub fn classify_subset(lengths: &LengthVector, subset: SubsetMask) -> Shortness {
    let twice = crate::rat::rat(2) * lengths.subset_sum(subset);
    let total = lengths.total();
    match twice.cmp(&total) {
        std::cmp::Ordering::Less => Shortness::Short,
        std::cmp::Ordering::Greater => Shortness::Long,
        std::cmp::Ordering::Equal => Shortness::Degenerate,
    }
}

/// Finds a degenerate subset if one exists. Scans the `2^{n−1}` subsets
/// containing `n`, which covers every complement pair, with an incremental
/// (Gray code) subset sum.
fn degenerate_witness(lengths: &LengthVector) -> Option<SubsetMask> {
    let n = lengths.n();
    let total = lengths.total();
    let mut sum = lengths.entries()[n - 1].clone(); // running sum over gray ∪ {n}
    let mut gray_prev = 0u32;
    for m in 0..(1u32 << (n - 1)) {
        let gray = m ^ (m >> 1);
        let flipped = gray ^ gray_prev;
        if flipped != 0 {
            let idx = flipped.trailing_zeros() as usize;
            if gray & flipped != 0 {
                sum += &lengths.entries()[idx];
            } else {
                sum -= &lengths.entries()[idx];
            }
        }
        gray_prev = gray;
        if crate::rat::rat(2) * &sum == total {
            return Some(SubsetMask(gray).with(n));
        }
    }
    None
}

/// True iff no subset ties with its complement.
pub fn is_generic(lengths: &LengthVector) -> bool {
    degenerate_witness(lengths).is_none()
}

fn ensure_generic(lengths: &LengthVector) -> Result<()> {
    match degenerate_witness(lengths) {
        None => Ok(()),
        Some(w) => Err(Error::NonGeneric(
            w.indices()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )),
    }
}

/// Stable sort returning the ordered vector and the permutation `σ` such
/// that `ℓσ` is the ordered vector; ties keep their input order.
pub fn order_and_track(lengths: &LengthVector) -> (LengthVector, Permutation) {
    let n = lengths.n();
    let mut positions: Vec<usize> = (0..n).collect();
    positions.sort_by(|&a, &b| {
        lengths.entries()[a]
            .cmp(&lengths.entries()[b])
            .then(a.cmp(&b))
    });
    let sorted = LengthVector {
        entries: positions
            .iter()
            .map(|&p| lengths.entries()[p].clone())
            .collect(),
    };
    (sorted, Permutation(positions.iter().map(|&p| p + 1).collect()))
}

/// The family of `J ⊆ {1,…,n−1}` with `J ∪ {n}` short, for the ordered
/// representative of a generic vector. Canonically sorted by
/// (cardinality, bit value).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberSignature {
    pub n: usize,
    pub shorts: Vec<SubsetMask>,
}

impl ChamberSignature {
    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.shorts.binary_search_by_key(&mask.canonical_key(), |m| m.canonical_key()).is_ok()
    }

    /// Members of cardinality `k` (the stratum `S_k`).
    pub fn stratum(&self, k: usize) -> Vec<SubsetMask> {
        self.shorts.iter().copied().filter(|m| m.card() == k).collect()
    }

    /// `a_k = |S_k|` for `k = 0,…,n−3`.
    pub fn stratum_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.n.saturating_sub(2)];
        for m in &self.shorts {
            sizes[m.card()] += 1;
        }
        sizes
    }

    /// Empty polygon space: `{n}` is long, so even `∅` is missing.
    pub fn is_empty_space(&self) -> bool {
        self.shorts.is_empty()
    }

    fn sort_canonical(masks: &mut Vec<SubsetMask>) {
        masks.sort_by_key(|m| m.canonical_key());
        masks.dedup();
    }
}

/// Antichain of the maximal signature members under [`poset_leq`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneticCode {
    pub n: usize,
    pub antichain: Vec<SubsetMask>,
}

/// Computes the chamber signature of the ordered representative.
pub fn chamber_signature(lengths: &LengthVector) -> Result<ChamberSignature> {
    ensure_generic(lengths)?;
    let (sorted, _) = order_and_track(lengths);
    let n = sorted.n();
    let total = sorted.total();
    let mut shorts = Vec::new();
    let last = sorted.entries()[n - 1].clone();
    let mut sum = last;
    let mut gray_prev = 0u32;
    for m in 0..(1u32 << (n - 1)) {
        let gray = m ^ (m >> 1);
        let flipped = gray ^ gray_prev;
        if flipped != 0 {
            let idx = flipped.trailing_zeros() as usize;
            if gray & flipped != 0 {
                sum += &sorted.entries()[idx];
            } else {
                sum -= &sorted.entries()[idx];
            }
        }
        gray_prev = gray;
        if crate::rat::rat(2) * &sum < total {
            shorts.push(SubsetMask(gray));
        }
    }
    ChamberSignature::sort_canonical(&mut shorts);
    Ok(ChamberSignature { n, shorts })
}

/// The stratum `S_k(ℓ)`: for ordered `ℓ` the `k`-subsets `J` of `{1,…,n−1}`
/// with `J ∪ {n}` short; for unordered `ℓ` the same sets pulled back through
/// the sorting permutation.
pub fn short_sets(lengths: &LengthVector, k: usize) -> Result<Vec<SubsetMask>> {
    let n = lengths.n();
    if k + 3 > n {
        return Err(Error::OutOfRange(format!(
            "stratum index {k} exceeds n-3 = {}",
            n - 3
        )));
    }
    let sig = chamber_signature(lengths)?;
    let (_, perm) = order_and_track(lengths);
    let mut sets: Vec<SubsetMask> = sig
        .stratum(k)
        .into_iter()
        .map(|m| perm.push_mask(m))
        .collect();
    ChamberSignature::sort_canonical(&mut sets);
    Ok(sets)
}

/// Maximal elements of a signature under the dominance order.
pub fn genetic_code(sig: &ChamberSignature) -> GeneticCode {
    let mut antichain: Vec<SubsetMask> = sig
        .shorts
        .iter()
        .copied()
        .filter(|&m| {
            !sig.shorts
                .iter()
                .any(|&other| other != m && poset_leq(m, other))
        })
        .collect();
    ChamberSignature::sort_canonical(&mut antichain);
    GeneticCode { n: sig.n, antichain }
}

/// Down-closure of an antichain inside the subsets of `{1,…,n−1}` of size
/// at most `n−3`.
pub fn down_closure(code: &GeneticCode) -> ChamberSignature {
    let n = code.n;
    let mut shorts = Vec::new();
    if !code.antichain.is_empty() {
        for bits in 0..(1u32 << (n - 1)) {
            let m = SubsetMask(bits);
            if m.card() + 3 <= n && code.antichain.iter().any(|&top| poset_leq(m, top)) {
                shorts.push(m);
            }
        }
    }
    ChamberSignature::sort_canonical(&mut shorts);
    ChamberSignature { n, shorts }
}

/// Two generic vectors lie in the same chamber up to permutation iff their
/// signatures agree.
pub fn same_chamber(a: &LengthVector, b: &LengthVector) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    Ok(chamber_signature(a)? == chamber_signature(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn lv(values: &[i64]) -> LengthVector {
        LengthVector::from_ints(values).unwrap()
    }

    fn mask(indices: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(indices)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_subset(&lv(&[1, 1, 1, 1, 1]), mask(&[1, 2])), Shortness::Short);
        assert_eq!(classify_subset(&lv(&[1, 1, 1, 1]), mask(&[1, 2])), Shortness::Degenerate);
        assert_eq!(classify_subset(&lv(&[1, 2, 2, 2]), mask(&[2, 3])), Shortness::Long);
    }

    #[test]
    fn genericity_examples() {
        assert!(is_generic(&lv(&[1, 1, 1, 1, 1])));
        assert!(!is_generic(&lv(&[1, 1, 1, 1])));
        assert!(is_generic(&lv(&[1, 3, 3, 4, 4, 6])));
    }

    #[test]
    fn odd_integer_totals_are_generic() {
        // Subset sums are integers while half the total is not.
        for v in [&[1i64, 2, 4, 6, 8][..], &[3, 3, 3, 3, 5, 6][..], &[2, 2, 9][..]] {
            let l = lv(v);
            let total: i64 = v.iter().sum();
            assert_eq!(total % 2, 1);
            assert!(is_generic(&l), "{l} should be generic");
        }
    }

    #[test]
    fn order_and_track_examples() {
        let (sorted, perm) = order_and_track(&lv(&[2, 1, 3]));
        assert_eq!(sorted, lv(&[1, 2, 3]));
        assert_eq!(perm.0, vec![2, 1, 3]);

        let (sorted, perm) = order_and_track(&lv(&[1, 1, 2]));
        assert_eq!(sorted, lv(&[1, 1, 2]));
        assert_eq!(perm.0, vec![1, 2, 3]);

        let (sorted, perm) = order_and_track(&lv(&[3, 3, 1, 2]));
        assert_eq!(sorted, lv(&[1, 2, 3, 3]));
        assert_eq!(perm.0, vec![3, 4, 1, 2]);
    }

    #[test]
    fn short_sets_examples() {
        assert_eq!(
            short_sets(&lv(&[1, 1, 2, 2, 3]), 1).unwrap(),
            vec![mask(&[1]), mask(&[2])]
        );
        assert_eq!(short_sets(&lv(&[1, 1, 1, 1, 1]), 2).unwrap(), vec![]);
        assert_eq!(short_sets(&lv(&[1, 2, 2, 2]), 0).unwrap(), vec![SubsetMask::EMPTY]);
        assert!(matches!(short_sets(&lv(&[1, 1, 1, 1]), 0), Err(Error::NonGeneric(_))));
    }

    #[test]
    fn short_sets_pull_back_through_permutation() {
        // (3,1,1,2,2): the long bar sits first; the two unit bars are the
        // short singletons.
        let sets = short_sets(&lv(&[3, 1, 1, 2, 2]), 1).unwrap();
        assert_eq!(sets, vec![mask(&[2]), mask(&[3])]);
    }

    #[test]
    fn poset_examples() {
        assert!(poset_leq(mask(&[1, 3]), mask(&[2, 4])));
        assert!(!poset_leq(mask(&[2, 3]), mask(&[1, 4])));
        assert!(poset_leq(mask(&[1]), mask(&[3])));
        assert!(poset_leq(SubsetMask::EMPTY, mask(&[1])));
    }

    /// Oracle for the dominance order: exhaustive search over injections.
    fn poset_leq_bruteforce(a: SubsetMask, b: SubsetMask) -> bool {
        fn go(rem_a: &[usize], avail_b: &[usize]) -> bool {
            let Some((&x, rest)) = rem_a.split_first() else {
                return true;
            };
            for (i, &y) in avail_b.iter().enumerate() {
                if x <= y {
                    let mut next: Vec<usize> = avail_b.to_vec();
                    next.remove(i);
                    // Order preservation: later elements of `a` are larger,
                    // so they must map above `y`.
                    let next: Vec<usize> = next.into_iter().filter(|&z| z > y).collect();
                    if go(rest, &next) {
                        return true;
                    }
                }
            }
            false
        }
        go(&a.indices(), &b.indices())
    }

    #[test]
    fn poset_matches_injection_oracle() {
        for a_bits in 0..64u32 {
            for b_bits in 0..64u32 {
                let (a, b) = (SubsetMask(a_bits), SubsetMask(b_bits));
                assert_eq!(
                    poset_leq(a, b),
                    poset_leq_bruteforce(a, b),
                    "disagree on {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn signature_examples() {
        let sig = chamber_signature(&lv(&[1, 1, 2, 2, 3])).unwrap();
        assert_eq!(sig.shorts, vec![SubsetMask::EMPTY, mask(&[1]), mask(&[2])]);

        let sig = chamber_signature(&lv(&[2, 2, 3, 5, 5])).unwrap();
        assert_eq!(
            sig.shorts,
            vec![SubsetMask::EMPTY, mask(&[1]), mask(&[2]), mask(&[3])]
        );

        let sig = chamber_signature(&lv(&[1, 1, 1, 5])).unwrap();
        assert!(sig.is_empty_space());
    }

    #[test]
    fn genetic_code_examples() {
        let code = genetic_code(&chamber_signature(&lv(&[1, 1, 2, 2, 3])).unwrap());
        assert_eq!(code.antichain, vec![mask(&[2])]);

        let code = genetic_code(&chamber_signature(&lv(&[1, 1, 1, 1, 1])).unwrap());
        assert_eq!(code.antichain, vec![mask(&[4])]);

        let code = genetic_code(&chamber_signature(&lv(&[1, 3, 3, 3, 4, 5])).unwrap());
        assert_eq!(code.antichain, vec![mask(&[5]), mask(&[1, 4])]);
    }

    #[test]
    fn code_and_closure_are_inverse() {
        for v in [
            &[1i64, 1, 2, 2, 3][..],
            &[1, 1, 1, 1, 1][..],
            &[1, 3, 3, 3, 4, 5][..],
            &[1, 1, 4, 4, 5][..],
            &[1, 1, 1, 5][..],
            &[1, 3, 3, 4, 4, 6][..],
        ] {
            let sig = chamber_signature(&lv(v)).unwrap();
            let code = genetic_code(&sig);
            assert_eq!(down_closure(&code), sig, "round trip failed for {v:?}");
        }
    }

    #[test]
    fn same_chamber_examples() {
        assert!(same_chamber(&lv(&[1, 1, 2, 2, 3]), &lv(&[2, 2, 1, 3, 1])).unwrap());
        assert!(same_chamber(&lv(&[1, 1, 1, 2, 2]), &lv(&[2, 2, 3, 5, 5])).unwrap());
        assert!(!same_chamber(&lv(&[1, 1, 1, 1, 1]), &lv(&[1, 1, 2, 2, 3])).unwrap());
        assert!(matches!(
            same_chamber(&lv(&[1, 1, 1]), &lv(&[1, 1, 1, 1, 1])),
            Err(Error::DimensionMismatch(3, 5))
        ));
    }

    #[test]
    fn duality_short_iff_complement_long() {
        let l = lv(&[1, 3, 3, 4, 4, 6]);
        let n = l.n();
        for bits in 0..(1u32 << n) {
            let m = SubsetMask(bits);
            let c = m.complement(n);
            match classify_subset(&l, m) {
                Shortness::Short => assert_eq!(classify_subset(&l, c), Shortness::Long),
                Shortness::Long => assert_eq!(classify_subset(&l, c), Shortness::Short),
                Shortness::Degenerate => panic!("generic vector with degenerate subset"),
            }
        }
    }

    #[test]
    fn signatures_are_down_closed_and_monotone() {
        for v in [&[1i64, 1, 2, 2, 3][..], &[1, 3, 3, 3, 4, 5][..], &[2, 2, 3, 5, 5][..]] {
            let l = lv(v);
            let sig = chamber_signature(&l).unwrap();
            for &j in &sig.shorts {
                for bits in 0..(1u32 << (l.n() - 1)) {
                    let i = SubsetMask(bits);
                    if poset_leq(i, j) {
                        assert!(sig.contains(i), "{i} ≤ {j} but missing from signature");
                        // Monotone order compatibility for the ordered vector.
                        assert!(l.subset_sum(i) <= l.subset_sum(j));
                    }
                }
            }
        }
    }

    #[test]
    fn signature_members_have_small_cardinality() {
        for v in [&[1i64, 1, 2, 2, 3][..], &[1, 1, 4, 4, 5][..], &[1, 1, 1, 1, 1, 1, 1][..]] {
            let l = lv(v);
            let sig = chamber_signature(&l).unwrap();
            assert!(sig.shorts.iter().all(|m| m.card() + 3 <= l.n()));
            // ∅ belongs iff {n} is short.
            let n = l.n();
            let has_empty = sig.contains(SubsetMask::EMPTY);
            let n_short = classify_subset(&l, SubsetMask::EMPTY.with(n)) == Shortness::Short;
            assert_eq!(has_empty, n_short);
        }
    }

    #[test]
    fn permutation_invariance_of_signature() {
        let base = lv(&[1, 3, 3, 4, 4, 6]);
        let shuffled = lv(&[4, 6, 1, 3, 4, 3]);
        assert_eq!(
            chamber_signature(&base).unwrap(),
            chamber_signature(&shuffled).unwrap()
        );
    }

    #[test]
    fn rational_lengths_work() {
        let l = LengthVector::new(vec![ratio(1, 2), ratio(1, 2), rat(1), rat(1), ratio(3, 2)])
            .unwrap();
        // Scaled copy of (1,1,2,2,3).
        assert!(same_chamber(&l, &lv(&[1, 1, 2, 2, 3])).unwrap());
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(LengthVector::from_ints(&[1, 2]).is_err());
        assert!(LengthVector::new(vec![rat(1), rat(0), rat(1)]).is_err());
        assert!(LengthVector::from_ints(&[1; 25]).is_err());
    }
}
