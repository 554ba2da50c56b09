//! Critical-point bookkeeping for the one-bar reduction cobordism.
//!
//! Shrinking the first bar of an ordered generic vector while growing the
//! last one sweeps out a cobordism from `M_ℓ` to `M_{ℓ_{ℓ₁−ε}}`, whose
//! height function has one nondegenerate critical point per subset
//! `J ⊆ {2,…,n−1}` that is short while `{1} ∪ J` is long, of index `|J|`.
//! The endpoint is a product `M_{ℓ'} × S¹` with
//! `ℓ' = (ℓ₂,…,ℓ_{n−1},ℓ_n+ℓ₁)`, which drives the induction over `n`.

use num_traits::Signed;
use serde::Serialize;

use crate::combinatorics::{
    chamber_signature, classify_subset, LengthVector, Shortness, SubsetMask,
};
use crate::rat::{rat, Rat};
use crate::{Error, Result};

/// One critical point of the reduction cobordism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPoint {
    /// `J ⊆ {2,…,n−1}`: the bars folded back at the critical configuration.
    pub subset: SubsetMask,
    /// Morse index, equal to `|J|`.
    pub index: usize,
    /// Critical value `t ∈ (0, ℓ₁)`.
    pub value: Rat,
    /// Collinear configuration signs `u_1,…,u_n` (`−1` on `J`).
    pub signs: Vec<i8>,
}

/// The reduction `ℓ ↦ ℓ' = (ℓ₂,…,ℓ_{n−1},ℓ_n+ℓ₁)` with an admissible
/// deformation budget `ε`.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub source: LengthVector,
    pub target: LengthVector,
    pub epsilon: Rat,
}

impl ReductionStep {
    /// The deformed vector `(ε, ℓ₂,…,ℓ_{n−1}, ℓ_n+ℓ₁−ε)` at the far end of
    /// the cobordism.
    pub fn deformed(&self) -> LengthVector {
        let src = self.source.entries();
        let n = src.len();
        let mut entries = Vec::with_capacity(n);
        entries.push(self.epsilon.clone());
        entries.extend_from_slice(&src[1..n - 1]);
        entries.push(src[n - 1].clone() + &src[0] - &self.epsilon);
        LengthVector::new(entries).expect("deformed vector stays positive")
    }
}

fn ensure_ordered_generic(lengths: &LengthVector) -> Result<()> {
    if !lengths.is_ordered() {
        return Err(Error::NotOrdered);
    }
    // Genericity surfaces through the signature computation.
    chamber_signature(lengths).map(|_| ())
}

/// All critical points of the reduction cobordism, sorted by critical
/// value. The critical value solves
/// `2t·Σ u_j ℓ_j = ℓ₁² − (Σ_{j≥2} u_j ℓ_j)²` with `u_1 = u_n = +1`.
pub fn critical_points(lengths: &LengthVector) -> Result<Vec<CriticalPoint>> {
    ensure_ordered_generic(lengths)?;
    let n = lengths.n();
    let total = lengths.total();
    let first = lengths.entries()[0].clone();

    let mut points = Vec::new();
    // Masks over {2,…,n−1}.
    let interior: u32 = ((1u32 << (n - 1)) - 1) & !1;
    let mut s = interior;
    loop {
        let j = SubsetMask(s);
        let j_short = classify_subset(lengths, j) == Shortness::Short;
        if j_short && classify_subset(lengths, j.with(1)) == Shortness::Long {
            let sum_j = lengths.subset_sum(j);
            let signed_total = &total - rat(2) * &sum_j; // Σ u_j ℓ_j
            let tail = &signed_total - &first; // Σ_{j≥2} u_j ℓ_j
            let value = (&first * &first - &tail * &tail) / (rat(2) * &signed_total);
            debug_assert!(value.is_positive() && value < first);
            let signs = (1..=n)
                .map(|idx| if j.contains(idx) { -1i8 } else { 1 })
                .collect();
            points.push(CriticalPoint { subset: j, index: j.card(), value, signs });
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & interior;
    }
    points.sort_by(|a, b| a.value.cmp(&b.value).then(a.subset.0.cmp(&b.subset.0)));
    Ok(points)
}

/// Builds the reduction step with half the largest safe `ε`.
///
/// `ε` must (a) stay below every admissibility slack `2t` of a critical
/// point, (b) keep every critical value strictly inside `(0, ℓ₁−ε)`,
/// (c) satisfy `2ε < ℓ₁`, and (d) keep the deformed vector inside the
/// limiting chamber (no subset classification may flip as ε shrinks).
pub fn reduction(lengths: &LengthVector) -> Result<ReductionStep> {
    ensure_ordered_generic(lengths)?;
    let n = lengths.n();
    if n < 4 {
        return Err(Error::OutOfRange("reduction needs at least 4 bars".into()));
    }
    let entries = lengths.entries();
    let first = entries[0].clone();
    let mut target_entries: Vec<Rat> = entries[1..n - 1].to_vec();
    target_entries.push(entries[n - 1].clone() + &first);
    let target = LengthVector::new(target_entries)?;

    let mut bound = first.clone() / rat(2);
    for cp in critical_points(lengths)? {
        let admissible = rat(2) * &cp.value;
        if admissible < bound {
            bound = admissible;
        }
        let inside = &first - &cp.value;
        if inside < bound {
            bound = inside;
        }
    }
    // Chamber stability of (ε, ℓ₂,…,ℓ_n+ℓ₁−ε): a subset whose sum moves
    // with ε must clear its gap at ε = 0.
    let zero = Rat::from_integer(0.into());
    let limit: Vec<Rat> = std::iter::once(zero.clone())
        .chain(entries[1..n - 1].iter().cloned())
        .chain(std::iter::once(entries[n - 1].clone() + &first))
        .collect();
    let total: Rat = limit.iter().sum();
    for bits in 0u32..(1 << n) {
        let k = SubsetMask(bits);
        let slope = i64::from(k.contains(1)) - i64::from(k.contains(n));
        if slope == 0 {
            continue;
        }
        let mut sum = zero.clone();
        for i in k.indices() {
            sum += &limit[i - 1];
        }
        let gap = rat(2) * sum - &total;
        if gap == zero {
            continue;
        }
        let room = gap.abs() / rat(2);
        if room < bound {
            bound = room;
        }
    }

    Ok(ReductionStep { source: lengths.clone(), target, epsilon: bound / rat(2) })
}

/// Outcome of the stratum bookkeeping across the cobordism.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    /// Signature members of the source missing from the deformed end.
    pub removed: Vec<SubsetMask>,
    /// Complements `{2,…,n−1} − J` of the critical subsets.
    pub expected_removed: Vec<SubsetMask>,
    pub inclusion_holds: bool,
    pub shift_consistent: bool,
    pub census_holds: bool,
    pub pass: bool,
}

/// Verifies that the deformed signature sits inside the source signature,
/// that it matches the reduced vector's signature under the index shift,
/// and that the difference corresponds one-to-one to the critical points
/// (with `|K| = n−2−index`).
pub fn check_subset_bijection(lengths: &LengthVector) -> Result<BijectionReport> {
    let n = lengths.n();
    let step = reduction(lengths)?;
    let points = critical_points(lengths)?;
    let sig = chamber_signature(lengths)?;
    let deformed_sig = chamber_signature(&step.deformed())?;
    let target_sig = chamber_signature(&step.target)?;

    let inclusion_holds = deformed_sig.shorts.iter().all(|m| sig.contains(*m));

    // Expected deformed signature: shift the reduced signature up one
    // index; each member appears with and without the tiny first bar.
    let mut expected_deformed: Vec<SubsetMask> = Vec::new();
    for m in &target_sig.shorts {
        let shifted = SubsetMask(m.0 << 1);
        expected_deformed.push(shifted);
        if shifted.card() + 4 <= n {
            expected_deformed.push(shifted.with(1));
        }
    }
    expected_deformed.sort_by_key(|m| m.canonical_key());
    expected_deformed.dedup();
    let shift_consistent = expected_deformed == deformed_sig.shorts;

    let removed: Vec<SubsetMask> = sig
        .shorts
        .iter()
        .copied()
        .filter(|m| !deformed_sig.contains(*m))
        .collect();
    let interior = SubsetMask(((1u32 << (n - 1)) - 1) & !1);
    let mut expected_removed: Vec<SubsetMask> =
        points.iter().map(|cp| interior.minus(cp.subset)).collect();
    expected_removed.sort_by_key(|m| m.canonical_key());
    let census_holds = removed == expected_removed
        && points
            .iter()
            .all(|cp| interior.minus(cp.subset).card() == n - 2 - cp.index);

    let pass = inclusion_holds && shift_consistent && census_holds;
    Ok(BijectionReport {
        removed,
        expected_removed,
        inclusion_holds,
        shift_consistent,
        census_holds,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::euler_characteristic;
    use crate::rat::ratio;

    fn lv(values: &[i64]) -> LengthVector {
        LengthVector::from_ints(values).unwrap()
    }

    fn mask(indices: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(indices)
    }

    #[test]
    fn critical_points_examples() {
        let pts = critical_points(&lv(&[1, 1, 2, 2, 3])).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].subset, mask(&[3, 4]));
        assert_eq!(pts[0].index, 2);
        assert_eq!(pts[0].value, ratio(1, 2));
        assert_eq!(pts[0].signs, vec![1, 1, -1, -1, 1]);

        let pts = critical_points(&lv(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(pts.len(), 3);
        for p in &pts {
            assert_eq!(p.index, 2);
            assert_eq!(p.value, ratio(1, 2));
        }
        let subsets: Vec<SubsetMask> = pts.iter().map(|p| p.subset).collect();
        assert!(subsets.contains(&mask(&[2, 3])));
        assert!(subsets.contains(&mask(&[2, 4])));
        assert!(subsets.contains(&mask(&[3, 4])));

        let pts = critical_points(&lv(&[1, 2, 2, 4])).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].subset, mask(&[2, 3]));
        assert_eq!(pts[0].index, 2);
        assert_eq!(pts[0].value, ratio(1, 2));
    }

    #[test]
    fn critical_points_require_order_and_genericity() {
        assert!(matches!(critical_points(&lv(&[2, 1, 3, 4])), Err(Error::NotOrdered)));
        assert!(matches!(critical_points(&lv(&[1, 1, 1, 1])), Err(Error::NonGeneric(_))));
    }

    #[test]
    fn no_low_indices_without_long_pairs() {
        // Index 0 would need {1} long; index 1 needs some {1, j} long.
        for v in [&[1i64, 1, 2, 2, 3][..], &[1, 3, 3, 3, 4, 5][..], &[2, 3, 3, 4, 5][..]] {
            let l = lv(v);
            for cp in critical_points(&l).unwrap() {
                assert!(cp.index >= 1);
                if cp.index == 1 {
                    let j = cp.subset.indices()[0];
                    assert_eq!(classify_subset(&l, mask(&[1, j])), Shortness::Long);
                }
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let step = reduction(&lv(&[1, 3, 3, 4, 4, 6])).unwrap();
        assert_eq!(step.target, lv(&[3, 3, 4, 4, 7]));
        let step = reduction(&lv(&[1, 3, 3, 3, 4, 5])).unwrap();
        assert_eq!(step.target, lv(&[3, 3, 3, 4, 6]));
        let step = reduction(&lv(&[1, 1, 2, 2, 3])).unwrap();
        assert_eq!(step.target, lv(&[1, 2, 2, 4]));
    }

    #[test]
    fn reduction_type_transitions() {
        use crate::taxonomy::{classify, ChamberClass};
        // Type {2,4,5} (n = 6) drops to type {1,3,4} (n = 5).
        let step = reduction(&lv(&[1, 3, 3, 4, 4, 6])).unwrap();
        assert_eq!(classify(&step.target).unwrap(), ChamberClass::Special(mask(&[1, 3, 4])));
        // Type {2,3,5} (n = 6) drops to type {1,2,4} (n = 5).
        let step = reduction(&lv(&[1, 3, 3, 3, 4, 5])).unwrap();
        assert_eq!(classify(&step.target).unwrap(), ChamberClass::Special(mask(&[1, 2, 4])));
    }

    #[test]
    fn critical_values_stay_inside_the_cobordism() {
        for v in [&[1i64, 1, 2, 2, 3][..], &[1, 1, 1, 1, 1][..], &[1, 3, 3, 3, 4, 5][..]] {
            let l = lv(v);
            let step = reduction(&l).unwrap();
            let upper = l.entries()[0].clone() - &step.epsilon;
            for cp in critical_points(&l).unwrap() {
                assert!(cp.value.is_positive());
                assert!(cp.value < upper, "t = {} not inside for {v:?}", cp.value);
            }
        }
    }

    #[test]
    fn bijection_examples() {
        // Genus-2 chamber: difference {{2}} against critical J = {3,4}.
        let report = check_subset_bijection(&lv(&[1, 1, 2, 2, 3])).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.removed, vec![mask(&[2])]);

        // Equilateral pentagon: three removals.
        let report = check_subset_bijection(&lv(&[1, 1, 1, 1, 1])).unwrap();
        assert!(report.pass);
        assert_eq!(report.removed.len(), 3);

        // One removal here too: the full interior subset is short but
        // rejects the first bar, so even ∅ leaves the signature.
        let report = check_subset_bijection(&lv(&[1, 1, 1, 1, 3])).unwrap();
        assert!(report.pass);
        assert_eq!(report.removed, vec![SubsetMask::EMPTY]);
    }

    #[test]
    fn euler_bookkeeping_on_pentagon_chambers() {
        // For n = 5: χ(M_ℓ) = χ(M_deformed) + Σ 2·(−1)^{index+1}.
        for v in [
            &[1i64, 1, 2, 2, 3][..],
            &[1, 1, 1, 1, 1][..],
            &[1, 1, 1, 2, 2][..],
            &[1, 2, 2, 2, 2][..],
            &[1, 1, 1, 1, 3][..],
            &[1, 1, 2, 2, 5][..],
            &[1, 4, 4, 4, 6][..],
        ] {
            let l = lv(v);
            let step = reduction(&l).unwrap();
            let chi_source = euler_characteristic(&l).unwrap();
            let chi_end = euler_characteristic(&step.deformed()).unwrap();
            let swing: i64 = critical_points(&l)
                .unwrap()
                .iter()
                .map(|cp| if cp.index % 2 == 0 { -2 } else { 2 })
                .sum();
            assert_eq!(chi_source, chi_end + swing, "Euler bookkeeping failed for {v:?}");
        }
    }
}
