//! Desk-scale verification that graded-ring invariants separate chambers.
//!
//! For each unordered pair of distinct chambers of a catalog the report
//! records the first invariant tier that tells them apart:
//!
//! 1. the Betti vector;
//! 2. the full fingerprint (class tag, `d`-invariants, annihilator rank
//!    table, degree-one subring ranks, top annihilator rank) — every
//!    component is invariant under graded ring isomorphism of the rational
//!    cohomology;
//! 3. the isomorphism class of the balanced complex `S̃`, applicable when
//!    both chambers have face-ring-presented degree-one subrings (both
//!    normal, or both special of type `{n−3,n−2,n−1}`): non-isomorphic
//!    complexes force non-isomorphic rings there;
//! 4. residual same-type special pairs, where cohomological rigidity of
//!    the type (a ring isomorphism forces equal chambers) closes the gap;
//!    these are listed with their justification, never dropped.
//!
//! Chamber signatures themselves are never used as a "ring invariant".

use rayon::prelude::*;
use serde::Serialize;

use crate::chambers::{enumerate_chambers, ChamberEntry};
use crate::combinatorics::LengthVector;
use crate::exterior::{complex_isomorphic, RingElement, RingPresentation};
use crate::homology::betti;
use crate::presentations::{present_h1_from_signature, stratum_complex};
use crate::taxonomy::{
    annihilator_rank_combinatorial, classify_signature, d_invariants, ChamberClass, DInvariants,
};
use crate::{Error, Result};

/// Graded-ring-isomorphism invariants of one chamber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub class: ChamberClass,
    pub betti: Vec<u64>,
    /// `d`-invariants; special chambers only.
    pub d: Option<(usize, usize, usize)>,
    /// `(k, i) ↦ rank A^k_i` for `k, i ≥ 1`, `k + i ≤ n−4` (the range
    /// where the stratum count is the ring-theoretic rank). Connected
    /// chambers only.
    pub ann_table: Vec<(usize, usize, usize)>,
    /// Graded ranks of the degree-one subring. Connected chambers only.
    pub h1_ranks: Option<Vec<usize>>,
    /// Rank of the degree-one annihilator against `(n−4)`-fold products;
    /// connected chambers with `n ≥ 6` only.
    pub ann_top: Option<usize>,
}

/// Computes the fingerprint of a generic vector.
pub fn fingerprint(lengths: &LengthVector) -> Result<Fingerprint> {
    let n = lengths.n();
    let sig = crate::combinatorics::chamber_signature(lengths)?;
    let class = classify_signature(&sig);
    let betti = betti(lengths)?.0;

    let d = match class {
        ChamberClass::Special(_) => {
            let DInvariants { d1, d2, d3 } = d_invariants(lengths)?;
            Some((d1, d2, d3))
        }
        _ => None,
    };

    let mut ann_table = Vec::new();
    if class.is_connected() && n >= 6 {
        for k in 1..=n - 5 {
            for i in 1..=n - 4 - k {
                ann_table.push((k, i, annihilator_rank_combinatorial(lengths, k, i)?));
            }
        }
    }

    let (h1_ranks, ann_top) = if class.is_connected() {
        let ph = present_h1_from_signature(&sig)?;
        let ranks = ph.presentation.graded_ranks(n - 3);
        let top = (n >= 6).then(|| ph.presentation.annihilator_rank(1, n - 4));
        (Some(ranks), top)
    } else {
        (None, None)
    };

    Ok(Fingerprint { n, class, betti, d, ann_table, h1_ranks, ann_top })
}

/// The invariant tier that separated a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Tier {
    Betti = 1,
    Fingerprint = 2,
    BalancedComplex = 3,
    Rigidity = 4,
}

/// Separation record for one unordered pair of catalog entries.
#[derive(Clone, Debug, Serialize)]
pub struct PairSeparation {
    pub left: usize,
    pub right: usize,
    pub tier: Tier,
    pub witness: String,
}

/// Full report of [`verify_walker`].
#[derive(Clone, Debug, Serialize)]
pub struct WalkerReport {
    pub n: usize,
    pub chambers: usize,
    pub pairs: Vec<PairSeparation>,
    pub tier_counts: [usize; 4],
    /// Pairs no tier covers; must stay empty.
    pub unexplained: Vec<(usize, usize, String)>,
    pub all_tier1: bool,
    pub betti_collisions: usize,
}

fn first_fingerprint_difference(a: &Fingerprint, b: &Fingerprint) -> Option<&'static str> {
    if a.class != b.class {
        Some("class tag")
    } else if a.d != b.d {
        Some("d-invariants")
    } else if a.ann_table != b.ann_table {
        Some("annihilator rank table")
    } else if a.h1_ranks != b.h1_ranks {
        Some("degree-one subring ranks")
    } else if a.ann_top != b.ann_top {
        Some("top annihilator rank")
    } else {
        None
    }
}

fn rigidity_tag(n: usize, t: &[usize]) -> Option<String> {
    if t == [n - 4, n - 3, n - 1] {
        Some(format!(
            "same-type special pair: type {{{},{},{}}} is cohomologically rigid \
             (annihilator-guided generator matching reduces ring isomorphisms to \
             stratum bijections)",
            t[0], t[1], t[2]
        ))
    } else if t[1] == n - 2 && t[2] == n - 1 && t[0] <= n - 4 {
        Some(format!(
            "same-type special pair: type {{{},{},{}}} is cohomologically rigid \
             (ring isomorphisms restrict to signed monomial bijections of the \
             extended face ring)",
            t[0], t[1], t[2]
        ))
    } else {
        None
    }
}

/// Runs the pairwise separation scan over `enumerate_chambers(n)`.
pub fn verify_walker(n: usize) -> Result<WalkerReport> {
    if !(3..=7).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "walker verification supports n = 3..=7, got {n}"
        )));
    }
    let catalog = enumerate_chambers(n)?;
    let prints: Vec<Fingerprint> = catalog
        .entries
        .par_iter()
        .map(|e| fingerprint(&e.representative).expect("catalog entries are generic"))
        .collect();

    let mut pairs = Vec::new();
    let mut unexplained = Vec::new();
    let mut tier_counts = [0usize; 4];
    let mut betti_collisions = 0usize;

    for a in 0..catalog.entries.len() {
        for b in (a + 1)..catalog.entries.len() {
            let (fa, fb) = (&prints[a], &prints[b]);
            if fa.betti != fb.betti {
                tier_counts[0] += 1;
                pairs.push(PairSeparation {
                    left: a,
                    right: b,
                    tier: Tier::Betti,
                    witness: format!("betti {:?} vs {:?}", fa.betti, fb.betti),
                });
                continue;
            }
            betti_collisions += 1;
            if let Some(which) = first_fingerprint_difference(fa, fb) {
                tier_counts[1] += 1;
                pairs.push(PairSeparation {
                    left: a,
                    right: b,
                    tier: Tier::Fingerprint,
                    witness: format!("fingerprint differs in the {which}"),
                });
                continue;
            }
            if let Some(sep) = try_tier3(&catalog.entries[a], &catalog.entries[b], a, b) {
                match sep {
                    Ok(pair) => {
                        tier_counts[2] += 1;
                        pairs.push(pair);
                    }
                    Err(reason) => unexplained.push((a, b, reason)),
                }
                continue;
            }
            let ta = fa.class.special_type().map(|t| t.indices());
            let tb = fb.class.special_type().map(|t| t.indices());
            match (ta, tb) {
                (Some(ta), Some(tb)) if ta == tb => match rigidity_tag(n, &ta) {
                    Some(witness) => {
                        tier_counts[3] += 1;
                        pairs.push(PairSeparation { left: a, right: b, tier: Tier::Rigidity, witness });
                    }
                    None => unexplained.push((
                        a,
                        b,
                        format!("same-type pair of type {ta:?} without a rigidity argument"),
                    )),
                },
                _ => unexplained.push((a, b, "no applicable separation tier".into())),
            }
        }
    }

    let all_tier1 = tier_counts[1] == 0
        && tier_counts[2] == 0
        && tier_counts[3] == 0
        && unexplained.is_empty();
    Ok(WalkerReport {
        n,
        chambers: catalog.entries.len(),
        pairs,
        tier_counts,
        unexplained,
        all_tier1,
        betti_collisions,
    })
}

/// Tier 3 applies to pairs whose degree-one subrings are face rings
/// (Gubeladze: a face-ring isomorphism forces a complex isomorphism, and
/// the balanced complex determines the chamber there).
fn try_tier3(
    ea: &ChamberEntry,
    eb: &ChamberEntry,
    a: usize,
    b: usize,
) -> Option<std::result::Result<PairSeparation, String>> {
    let n = ea.signature.n;
    let face_ring_class = |c: &ChamberClass| match c {
        ChamberClass::Normal => true,
        ChamberClass::Special(t) => t.indices() == [n - 3, n - 2, n - 1],
        _ => false,
    };
    if !(face_ring_class(&ea.class) && face_ring_class(&eb.class) && ea.class == eb.class) {
        return None;
    }
    let ca = stratum_complex(&ea.signature);
    let cb = stratum_complex(&eb.signature);
    let justification = match ea.class {
        ChamberClass::Normal => {
            "both degree-one subrings are balanced face rings, so a ring isomorphism \
             would force a complex isomorphism"
        }
        _ => {
            "both degree-one subrings are face rings with a lone extra vertex that an \
             isomorphism can be arranged to fix, so a ring isomorphism would force a \
             complex isomorphism"
        }
    };
    match complex_isomorphic(&ca, &cb) {
        None => Some(Ok(PairSeparation {
            left: a,
            right: b,
            tier: Tier::BalancedComplex,
            witness: format!("balanced complexes are non-isomorphic ({justification})"),
        })),
        Some(_) => {
            // Soundness: isomorphic complexes have equal face counts.
            assert_eq!(ca.face_counts(), cb.face_counts());
            Some(Err(
                "distinct chambers with isomorphic balanced complexes".into(),
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// Signed monomial equivalence search
// ---------------------------------------------------------------------------

/// Searches for a signed generator bijection carrying the ideal of `p1`
/// onto the ideal of `p2` in both directions. A hit certifies a ring
/// isomorphism; `None` only rules out signed-monomial isomorphisms.
pub fn presentation_equivalent_monomial(
    p1: &RingPresentation,
    p2: &RingPresentation,
) -> Option<Vec<(usize, i8)>> {
    let g = p1.generators().len();
    if g != p2.generators().len() || g > 16 {
        return None;
    }
    if p1.graded_ranks(g) != p2.graded_ranks(g) {
        return None;
    }

    // Degree-profile pruning: count vanishing pair products per generator.
    let zero_partners = |p: &RingPresentation, v: usize| -> usize {
        (0..g)
            .filter(|&w| {
                w != v
                    && p.multiply(&RingElement::generator(v), &RingElement::generator(w))
                        .is_zero()
            })
            .count()
    };
    let prof1: Vec<usize> = (0..g).map(|v| zero_partners(p1, v)).collect();
    let prof2: Vec<usize> = (0..g).map(|v| zero_partners(p2, v)).collect();
    {
        let mut s1 = prof1.clone();
        let mut s2 = prof2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return None;
        }
    }

    fn map_relation(rel: &RingElement, mapping: &[(usize, i8)]) -> RingElement {
        let mut acc = RingElement::zero();
        for (m, c) in rel.terms() {
            let mut term = RingElement::from_mono(0, c.clone());
            for v in 0..32usize {
                if m & (1 << v) != 0 {
                    let (w, sign) = mapping[v];
                    let gen = RingElement::generator(w).scale(&crate::rat::rat(sign as i64));
                    term = term.mul(&gen);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    fn ideals_match(from: &RingPresentation, to: &RingPresentation, mapping: &[(usize, i8)]) -> bool {
        from.relations()
            .iter()
            .all(|rel| to.canonical_form(&map_relation(rel, mapping)).is_zero())
    }

    fn backtrack(
        pos: usize,
        p1: &RingPresentation,
        p2: &RingPresentation,
        prof1: &[usize],
        prof2: &[usize],
        mapping: &mut Vec<(usize, i8)>,
        used: &mut Vec<bool>,
    ) -> bool {
        let g = prof1.len();
        if pos == g {
            if !ideals_match(p1, p2, mapping) {
                return false;
            }
            // Invert and check the other direction.
            let mut inverse = vec![(usize::MAX, 1i8); g];
            for (v, &(w, s)) in mapping.iter().enumerate() {
                inverse[w] = (v, s);
            }
            return ideals_match(p2, p1, &inverse);
        }
        for w in 0..g {
            if used[w] || prof1[pos] != prof2[w] {
                continue;
            }
            // A global sign flip of all generators is a ring automorphism,
            // so the first generator can take + without loss.
            let signs: &[i8] = if pos == 0 { &[1] } else { &[1, -1] };
            for &sign in signs {
                mapping[pos] = (w, sign);
                used[w] = true;
                // Partial pruning: relations fully supported on mapped
                // generators must already die.
                let assigned: u32 = (0..=pos).fold(0, |acc, v| acc | (1 << v));
                let ok = p1.relations().iter().all(|rel| {
                    let supported = rel.terms().all(|(m, _)| m & !assigned == 0);
                    !supported || p2.canonical_form(&map_relation(rel, mapping)).is_zero()
                });
                if ok && backtrack(pos + 1, p1, p2, prof1, prof2, mapping, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }

    let mut mapping = vec![(usize::MAX, 1i8); g];
    let mut used = vec![false; g];
    backtrack(0, p1, p2, &prof1, &prof2, &mut mapping, &mut used).then_some(mapping)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::same_chamber;
    use crate::exterior::{face_ring, SimplicialComplex};
    use crate::presentations::present_h1;
    use crate::rat::rat;

    fn lv(values: &[i64]) -> LengthVector {
        LengthVector::from_ints(values).unwrap()
    }

    #[test]
    fn fingerprint_examples() {
        let a = fingerprint(&lv(&[1, 1, 1, 1, 1])).unwrap();
        let b = fingerprint(&lv(&[1, 1, 2, 2, 3])).unwrap();
        assert_ne!(a.betti, b.betti);

        let c = fingerprint(&lv(&[1, 1, 1, 2, 2])).unwrap();
        let d = fingerprint(&lv(&[2, 2, 3, 5, 5])).unwrap();
        assert!(same_chamber(&lv(&[1, 1, 1, 2, 2]), &lv(&[2, 2, 3, 5, 5])).unwrap());
        assert_eq!(c, d);

        let e = fingerprint(&lv(&[1, 1, 4, 4, 5])).unwrap();
        assert_eq!(e.class, ChamberClass::Disconnected);
        assert_eq!(e.betti, vec![2, 4, 2]);
        assert!(e.h1_ranks.is_none());
    }

    #[test]
    fn fingerprint_is_permutation_invariant() {
        let a = fingerprint(&lv(&[1, 3, 3, 3, 4, 5])).unwrap();
        let b = fingerprint(&lv(&[5, 3, 4, 3, 3, 1])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn walker_at_4_and_5_is_betti_only() {
        for n in [4, 5] {
            let report = verify_walker(n).unwrap();
            assert!(report.all_tier1, "n = {n}: {report:?}");
            assert!(report.unexplained.is_empty());
            assert_eq!(report.betti_collisions, 0);
        }
    }

    #[test]
    fn walker_rejects_out_of_range() {
        assert!(matches!(verify_walker(8), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn monomial_equivalence_finds_the_role_swap() {
        // Genus-2 ring: swapping the A and B families is an isomorphism.
        let ph = present_h1(&lv(&[1, 1, 2, 2, 3])).unwrap();
        let p = &ph.presentation;
        let swapped = {
            let gens = vec!["B1".into(), "B2".into(), "A1".into(), "A2".into()];
            let mut r = RingElement::from_mono(0b0011, rat(1));
            r.add_term(0b1100, rat(1));
            let mut rels = vec![r];
            for a in 0..2u32 {
                for b in 2..4u32 {
                    rels.push(RingElement::from_mono((1 << a) | (1 << b), rat(1)));
                }
            }
            RingPresentation::new(gens, rels).unwrap()
        };
        assert!(presentation_equivalent_monomial(p, &swapped).is_some());
    }

    #[test]
    fn monomial_equivalence_rejects_different_sizes() {
        let p1 = present_h1(&lv(&[1, 1, 2, 2, 3])).unwrap().presentation;
        let p2 = present_h1(&lv(&[1, 1, 1, 2, 2])).unwrap().presentation;
        assert!(presentation_equivalent_monomial(&p1, &p2).is_none());
    }

    #[test]
    fn monomial_equivalence_on_relabeled_face_rings() {
        let c1 = SimplicialComplex::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![vec![0, 1], vec![2]],
        )
        .unwrap();
        let c2 = SimplicialComplex::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![vec![0], vec![1, 2]],
        )
        .unwrap();
        let m = presentation_equivalent_monomial(&face_ring(&c1), &face_ring(&c2));
        assert!(m.is_some());
    }
}
