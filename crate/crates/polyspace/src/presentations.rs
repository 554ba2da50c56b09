//! Presentations of the subring of `H*(M_ℓ; Z)` generated in degrees 0 and
//! 1, for every connected chamber, together with the comparison map from
//! the ambient torus.
//!
//! The builder dispatches on the chamber class:
//!
//! * **normal** — the subring is the balanced subalgebra, an exterior face
//!   ring on generators `X_j` (one per short pair `{j,n}`), modulo the
//!   monomials `X_J` with `J ∪ {n}` long;
//! * **special of type `{i,n−2,n−1}`** (`i ≤ n−4`) — generators
//!   `A_1,…,A_{n−1}` (those with `{j,n}` short) and `B_i,…,B_{n−3}`;
//!   relations `A_J` for long `J ∪ {n}` meeting `{n−2,n−1}`, the binomials
//!   `A_{J−C}(A_C + (−1)^{n−2−i} B_C)` with `C = {i,…,n−3}` for long
//!   `J ∪ {n}` avoiding `{n−2,n−1}`, and `A_j B_k` for `j,k ≥ i`;
//! * **special of type `{n−4,n−3,n−1}`** — generators `A_1,…,A_{n−1}` and
//!   `B_{n−4},B_{n−3},B_{n−2}`, with the two tied symplectic binomials
//!   `A_{n−2}B_{n−2} − A_{n−3}B_{n−3}` and `A_{n−3}B_{n−3} − A_{n−4}B_{n−4}`;
//! * **special of type `{n−3,n−2,n−1}`** — a face ring on the `A_j` plus a
//!   lone generator `B` with zero torus image and `A_j B = 0` for
//!   `j ≥ n−3`;
//! * **special of type `{n−4,n−3,n−2}`** — the tensor product of an
//!   exterior algebra on `A_1,…,A_{n−5}` with the standard genus-4 surface
//!   ring on `A_{n−4..n−1}, B_{n−4..n−1}` (the chamber is a product of a
//!   torus and a genus-4 surface, and is unique for its type).
//!
//! Dropped generators: a relation forcing a degree-one generator to vanish
//! (`{k,n}` long) is realized by omitting the generator; role tags keep the
//! original indexing.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{chamber_signature, ChamberSignature, LengthVector, SubsetMask};
use crate::exterior::{
    face_ring, rank_of_vectors, DegreeSlice, Mono, RingElement, RingPresentation,
    SimplicialComplex,
};
use crate::homology::betti;
use crate::rat::{rat, Rat};
use crate::taxonomy::{classify_signature, ChamberClass};
use crate::{Error, Result};

/// Role of a presentation generator, carrying the bar index it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorRole {
    /// `A_j`: rotation class of the `j`-th bar.
    A(usize),
    /// `B_j`: conjugated partner of `A_j`.
    B(usize),
    /// `X_j`: torus class (normal chambers only).
    X(usize),
    /// The lone extra class with zero torus image (type `{n−3,n−2,n−1}`).
    BLone,
}

impl GeneratorRole {
    pub fn name(self) -> String {
        match self {
            GeneratorRole::A(j) => format!("A{j}"),
            GeneratorRole::B(j) => format!("B{j}"),
            GeneratorRole::X(j) => format!("X{j}"),
            GeneratorRole::BLone => "B".into(),
        }
    }
}

/// Image of a torus generator `X_j` in the presented ring. Unpinned images
/// occur only for type `{n−4,n−3,n−1}`, where the comparison map is known
/// only on `j ≤ n−5` and `j = n−1`.
#[derive(Clone, Debug, PartialEq)]
pub enum TorusImage {
    Pinned(RingElement),
    Unpinned,
}

impl TorusImage {
    pub fn pinned(&self) -> Option<&RingElement> {
        match self {
            TorusImage::Pinned(e) => Some(e),
            TorusImage::Unpinned => None,
        }
    }
}

/// A presented degree-one subring together with the torus comparison data.
#[derive(Clone, Debug)]
pub struct PresentedCohomology {
    pub n: usize,
    pub class: ChamberClass,
    pub presentation: RingPresentation,
    pub roles: Vec<GeneratorRole>,
    /// `torus_images[j−1]` is the image of `X_j`, `j = 1,…,n−1`.
    pub torus_images: Vec<TorusImage>,
    /// Degree `n − 4`, where the duals of annihilated degree-one
    /// generators are missing from the subring. (In general the subring
    /// misses `b_k` in degree `k` by the number of stratum duals
    /// `Y_L, L ∈ S_{n−3−k}`, with no extension into `S_{n−4}`; this degree
    /// carries the count that the chamber taxonomy uses.)
    pub deficit_degree: usize,
}

impl PresentedCohomology {
    pub fn generator_with_role(&self, role: GeneratorRole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let images: Vec<serde_json::Value> = self
            .torus_images
            .iter()
            .enumerate()
            .map(|(idx, img)| match img {
                TorusImage::Unpinned => serde_json::json!({"x": idx + 1, "image": null}),
                TorusImage::Pinned(e) => serde_json::json!({
                    "x": idx + 1,
                    "image": e
                        .to_wire()
                        .into_iter()
                        .map(|(coeff, monomial)| {
                            serde_json::json!({"coeff": coeff, "monomial": monomial})
                        })
                        .collect::<Vec<_>>(),
                }),
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "class": self.class.to_string(),
            "presentation": self.presentation.to_json(),
            "roles": self.roles.iter().map(|r| r.name()).collect::<Vec<_>>(),
            "torus_images": images,
            "deficit_degree": self.deficit_degree,
        })
    }
}

fn singleton_short(sig: &ChamberSignature, j: usize) -> bool {
    sig.contains(SubsetMask::from_indices(&[j]))
}

/// `J ∪ {n}` long for `J ⊆ {1,…,n−1}` (subsets larger than `n−3` are always
/// long for an ordered vector).
fn with_n_long(sig: &ChamberSignature, j: SubsetMask) -> bool {
    j.card() + 3 > sig.n || !sig.contains(j)
}

/// Inclusion-minimal masks among the nonempty subsets of `universe`
/// satisfying `pred`.
fn minimal_masks(universe: SubsetMask, pred: impl Fn(SubsetMask) -> bool) -> Vec<SubsetMask> {
    let mut qualifying: Vec<SubsetMask> = Vec::new();
    let u = universe.0;
    let mut s = u;
    loop {
        let m = SubsetMask(s);
        if !m.is_empty() && pred(m) {
            qualifying.push(m);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & u;
    }
    qualifying.sort_by_key(|m| m.canonical_key());
    qualifying
        .iter()
        .copied()
        .filter(|&m| !qualifying.iter().any(|&o| o != m && o.is_subset_of(m)))
        .collect()
}

/// The simplicial complex `S̃(ℓ)` (signature minus the empty set), with
/// vertices named after the short singletons.
pub fn stratum_complex(sig: &ChamberSignature) -> SimplicialComplex {
    let vertices: Vec<usize> = sig.stratum(1).iter().map(|m| m.max_index().unwrap()).collect();
    let names = vertices.iter().map(|j| format!("X{j}")).collect();
    let position = |j: usize| vertices.iter().position(|&v| v == j).unwrap();
    let facets: Vec<Vec<usize>> = sig
        .shorts
        .iter()
        .filter(|m| !m.is_empty())
        .map(|m| m.indices().into_iter().map(position).collect())
        .collect();
    SimplicialComplex::new(names, facets).expect("signature strata form a complex")
}

/// Face ring of `S̃(ℓ)`: the balanced subalgebra of the cohomology.
pub fn balanced_subalgebra(lengths: &LengthVector) -> Result<RingPresentation> {
    let sig = chamber_signature(lengths)?;
    Ok(face_ring(&stratum_complex(&sig)))
}

struct Builder {
    roles: Vec<GeneratorRole>,
    relations: Vec<RingElement>,
    relation_keys: BTreeSet<Vec<(Mono, Rat)>>,
}

impl Builder {
    fn new() -> Self {
        Builder { roles: Vec::new(), relations: Vec::new(), relation_keys: BTreeSet::new() }
    }

    fn push_role(&mut self, role: GeneratorRole) {
        self.roles.push(role);
    }

    fn position(&self, role: GeneratorRole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    fn mono_of(&self, roles: &[GeneratorRole]) -> Mono {
        let mut m: Mono = 0;
        for role in roles {
            let p = self.position(*role).expect("generator present");
            m |= 1 << p;
        }
        m
    }

    fn push_relation(&mut self, e: RingElement) {
        if e.is_zero() {
            return;
        }
        let key: Vec<(Mono, Rat)> = e.terms().map(|(m, c)| (m, c.clone())).collect();
        if self.relation_keys.insert(key) {
            self.relations.push(e);
        }
    }

    fn push_monomial(&mut self, roles: &[GeneratorRole]) {
        let m = self.mono_of(roles);
        self.push_relation(RingElement::from_mono(m, rat(1)));
    }

    fn finish(self) -> RingPresentation {
        let names = self.roles.iter().map(|r| r.name()).collect();
        RingPresentation::new(names, self.relations).expect("builders produce valid relations")
    }
}

/// Presentation of the degree-one subring for a connected generic chamber.
pub fn present_h1(lengths: &LengthVector) -> Result<PresentedCohomology> {
    let sig = chamber_signature(lengths)?;
    present_h1_from_signature(&sig)
}

/// Signature-level entry point (used by the catalog pipelines).
pub fn present_h1_from_signature(sig: &ChamberSignature) -> Result<PresentedCohomology> {
    let n = sig.n;
    let class = classify_signature(sig);
    let type_indices = match class {
        ChamberClass::Empty => return Err(Error::EmptySpace),
        ChamberClass::Disconnected => return Err(Error::Disconnected),
        ChamberClass::Normal => None,
        ChamberClass::Special(t) => Some(t.indices()),
    };

    let (presentation, roles, torus_images) = match type_indices {
        None => build_normal(sig),
        Some(t) => {
            debug_assert_eq!(t.len(), 3);
            if t == [n - 4, n - 3, n - 2] {
                build_torus_times_genus4(sig)
            } else if t == [n - 4, n - 3, n - 1] {
                build_tied_symplectic(sig)
            } else if t == [n - 3, n - 2, n - 1] {
                build_face_ring_with_lone_generator(sig)
            } else if t[1] == n - 2 && t[2] == n - 1 {
                build_split_symplectic(sig, t[0])
            } else {
                unreachable!("type {t:?} is outside the admissible taxonomy")
            }
        }
    };
    Ok(PresentedCohomology {
        n,
        class,
        presentation,
        roles,
        torus_images,
        deficit_degree: n - 4,
    })
}

type Built = (RingPresentation, Vec<GeneratorRole>, Vec<TorusImage>);

fn build_normal(sig: &ChamberSignature) -> Built {
    let n = sig.n;
    let presentation = face_ring(&stratum_complex(sig));
    let roles: Vec<GeneratorRole> = sig
        .stratum(1)
        .iter()
        .map(|m| GeneratorRole::X(m.max_index().unwrap()))
        .collect();
    let mut images = Vec::new();
    for j in 1..n {
        let img = roles
            .iter()
            .position(|&r| r == GeneratorRole::X(j))
            .map(RingElement::generator)
            .unwrap_or_else(RingElement::zero);
        images.push(TorusImage::Pinned(img));
    }
    (presentation, roles, images)
}

fn build_split_symplectic(sig: &ChamberSignature, i: usize) -> Built {
    let n = sig.n;
    let mut b = Builder::new();
    let a_indices: Vec<usize> = (1..n).filter(|&j| singleton_short(sig, j)).collect();
    debug_assert_eq!(a_indices.iter().filter(|&&j| j <= n - 3).count(), n - 3);
    for &j in &a_indices {
        b.push_role(GeneratorRole::A(j));
    }
    for j in i..=n - 3 {
        b.push_role(GeneratorRole::B(j));
    }

    let a_universe = SubsetMask::from_indices(&a_indices);
    let core = SubsetMask::from_indices(&(i..=n - 3).collect::<Vec<_>>());
    let big = SubsetMask::from_indices(&[n - 2, n - 1]);

    // Long monomials meeting {n−2, n−1}.
    for j in minimal_masks(a_universe, |m| m.0 & big.0 != 0 && with_n_long(sig, m)) {
        let roles: Vec<GeneratorRole> = j.indices().into_iter().map(GeneratorRole::A).collect();
        b.push_monomial(&roles);
    }

    // Binomials A_{J−C}(A_C + (−1)^{n−2−i} B_C) for long J ∪ {n} avoiding
    // {n−2, n−1}; such J necessarily contain C = {i,…,n−3}.
    let small_universe = a_universe.minus(big);
    let sign = if (n - 2 - i) % 2 == 1 { rat(-1) } else { rat(1) };
    for j in minimal_masks(small_universe, |m| with_n_long(sig, m)) {
        debug_assert!(core.is_subset_of(j), "long J ∪ {{n}} must contain the core");
        let prefix = j.minus(core);
        let prefix_elem = RingElement::from_mono(
            b.mono_of(&prefix.indices().into_iter().map(GeneratorRole::A).collect::<Vec<_>>()),
            rat(1),
        );
        let a_core = RingElement::from_mono(
            b.mono_of(&core.indices().into_iter().map(GeneratorRole::A).collect::<Vec<_>>()),
            rat(1),
        );
        let b_core = RingElement::from_mono(
            b.mono_of(&core.indices().into_iter().map(GeneratorRole::B).collect::<Vec<_>>()),
            rat(1),
        );
        let rel = prefix_elem.mul(&a_core.add(&b_core.scale(&sign)));
        b.push_relation(rel);
    }

    // A_j B_k for j, k ≥ i.
    for &j in a_indices.iter().filter(|&&j| j >= i) {
        for k in i..=n - 3 {
            b.push_monomial(&[GeneratorRole::A(j), GeneratorRole::B(k)]);
        }
    }

    let mut images = Vec::new();
    for j in 1..n {
        let img = if (i..=n - 3).contains(&j) {
            let a = RingElement::generator(b.position(GeneratorRole::A(j)).unwrap());
            let bb = RingElement::generator(b.position(GeneratorRole::B(j)).unwrap());
            a.add(&bb.scale(&rat(-1)))
        } else {
            b.position(GeneratorRole::A(j))
                .map(RingElement::generator)
                .unwrap_or_else(RingElement::zero)
        };
        images.push(TorusImage::Pinned(img));
    }
    let roles = b.roles.clone();
    (b.finish(), roles, images)
}

fn build_tied_symplectic(sig: &ChamberSignature) -> Built {
    let n = sig.n;
    let mut b = Builder::new();
    let a_indices: Vec<usize> = (1..n).filter(|&j| singleton_short(sig, j)).collect();
    debug_assert_eq!(a_indices.iter().filter(|&&j| j <= n - 2).count(), n - 2);
    for &j in &a_indices {
        b.push_role(GeneratorRole::A(j));
    }
    let block = [n - 4, n - 3, n - 2];
    for j in block {
        b.push_role(GeneratorRole::B(j));
    }
    let has_a_last = a_indices.contains(&(n - 1));

    for (pi, &p) in block.iter().enumerate() {
        for &q in &block[pi + 1..] {
            b.push_monomial(&[GeneratorRole::A(p), GeneratorRole::A(q)]);
            b.push_monomial(&[GeneratorRole::B(p), GeneratorRole::B(q)]);
            b.push_monomial(&[GeneratorRole::A(p), GeneratorRole::B(q)]);
            b.push_monomial(&[GeneratorRole::A(q), GeneratorRole::B(p)]);
        }
    }
    if has_a_last {
        for j in 1..=n - 2 {
            if with_n_long(sig, SubsetMask::from_indices(&[j, n - 1])) {
                b.push_monomial(&[GeneratorRole::A(j), GeneratorRole::A(n - 1)]);
            }
        }
        for q in block {
            b.push_monomial(&[GeneratorRole::A(n - 1), GeneratorRole::B(q)]);
        }
    }
    // Tied symplectic forms: all A_p B_p agree.
    for w in block.windows(2) {
        let (p, q) = (w[0], w[1]);
        let hi =
            RingElement::from_mono(b.mono_of(&[GeneratorRole::A(q), GeneratorRole::B(q)]), rat(1));
        let lo =
            RingElement::from_mono(b.mono_of(&[GeneratorRole::A(p), GeneratorRole::B(p)]), rat(1));
        b.push_relation(hi.add(&lo.scale(&rat(-1))));
    }
    // Long monomials among the torus-pinned generators.
    let mut pinned: Vec<usize> = (1..=n - 5).collect();
    if has_a_last {
        pinned.push(n - 1);
    }
    for j in minimal_masks(SubsetMask::from_indices(&pinned), |m| with_n_long(sig, m)) {
        let roles: Vec<GeneratorRole> = j.indices().into_iter().map(GeneratorRole::A).collect();
        b.push_monomial(&roles);
    }

    let mut images = Vec::new();
    for j in 1..n {
        if block.contains(&j) {
            images.push(TorusImage::Unpinned);
        } else {
            let img = b
                .position(GeneratorRole::A(j))
                .map(RingElement::generator)
                .unwrap_or_else(RingElement::zero);
            images.push(TorusImage::Pinned(img));
        }
    }
    let roles = b.roles.clone();
    (b.finish(), roles, images)
}

fn build_face_ring_with_lone_generator(sig: &ChamberSignature) -> Built {
    let n = sig.n;
    let mut b = Builder::new();
    let a_indices: Vec<usize> = (1..n).filter(|&j| singleton_short(sig, j)).collect();
    for &j in &a_indices {
        b.push_role(GeneratorRole::A(j));
    }
    b.push_role(GeneratorRole::BLone);

    let a_universe = SubsetMask::from_indices(&a_indices);
    for j in minimal_masks(a_universe, |m| with_n_long(sig, m)) {
        let roles: Vec<GeneratorRole> = j.indices().into_iter().map(GeneratorRole::A).collect();
        b.push_monomial(&roles);
    }
    for &j in a_indices.iter().filter(|&&j| j >= n - 3) {
        b.push_monomial(&[GeneratorRole::A(j), GeneratorRole::BLone]);
    }

    let mut images = Vec::new();
    for j in 1..n {
        let img = b
            .position(GeneratorRole::A(j))
            .map(RingElement::generator)
            .unwrap_or_else(RingElement::zero);
        images.push(TorusImage::Pinned(img));
    }
    let roles = b.roles.clone();
    (b.finish(), roles, images)
}

fn build_torus_times_genus4(sig: &ChamberSignature) -> Built {
    let n = sig.n;
    let mut b = Builder::new();
    for j in 1..n {
        debug_assert!(singleton_short(sig, j));
        b.push_role(GeneratorRole::A(j));
    }
    let surface = [n - 4, n - 3, n - 2, n - 1];
    for j in surface {
        b.push_role(GeneratorRole::B(j));
    }
    for (pi, &p) in surface.iter().enumerate() {
        for &q in &surface[pi + 1..] {
            b.push_monomial(&[GeneratorRole::A(p), GeneratorRole::A(q)]);
            b.push_monomial(&[GeneratorRole::B(p), GeneratorRole::B(q)]);
            b.push_monomial(&[GeneratorRole::A(p), GeneratorRole::B(q)]);
            b.push_monomial(&[GeneratorRole::A(q), GeneratorRole::B(p)]);
        }
    }
    for w in surface.windows(2) {
        let (p, q) = (w[0], w[1]);
        let hi =
            RingElement::from_mono(b.mono_of(&[GeneratorRole::A(q), GeneratorRole::B(q)]), rat(1));
        let lo =
            RingElement::from_mono(b.mono_of(&[GeneratorRole::A(p), GeneratorRole::B(p)]), rat(1));
        b.push_relation(hi.add(&lo.scale(&rat(-1))));
    }

    let mut images = Vec::new();
    for j in 1..n {
        let a = RingElement::generator(b.position(GeneratorRole::A(j)).unwrap());
        let img = if j >= n - 4 {
            let bb = RingElement::generator(b.position(GeneratorRole::B(j)).unwrap());
            a.add(&bb.scale(&rat(-1)))
        } else {
            a
        };
        images.push(TorusImage::Pinned(img));
    }
    let roles = b.roles.clone();
    (b.finish(), roles, images)
}

// ---------------------------------------------------------------------------
// Torus comparison
// ---------------------------------------------------------------------------

/// Per-degree ranks of the subring generated by the pinned torus images.
pub fn torus_image_ranks(ph: &PresentedCohomology) -> Vec<usize> {
    let n = ph.n;
    let top = n - 3;
    let pres = &ph.presentation;

    let pinned: Vec<(usize, &RingElement)> = ph
        .torus_images
        .iter()
        .enumerate()
        .filter_map(|(idx, img)| img.pinned().map(|e| (idx + 1, e)))
        .filter(|(_, e)| !e.is_zero())
        .collect();

    // Products X_J over subsets of the pinned indices, grown one factor at
    // a time; zero products prune their supersets.
    let mut ranks = vec![0usize; top + 1];
    ranks[0] = 1;
    let one = RingElement::from_mono(0, rat(1));
    let mut frontier: Vec<(usize, RingElement)> = vec![(0, one)];
    for k in 1..=top {
        let sl: DegreeSlice = pres.degree_slice(k);
        let basis = sl.quotient_basis();
        let basis_pos: std::collections::HashMap<Mono, usize> =
            basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut next: Vec<(usize, RingElement)> = Vec::new();
        let mut vectors: Vec<Vec<Rat>> = Vec::new();
        for (last, prod) in &frontier {
            for (j, img) in pinned.iter().filter(|(j, _)| j > last) {
                let reduced = sl.reduce(&prod.mul(img));
                if reduced.is_zero() {
                    continue;
                }
                let mut dense = vec![Rat::zero(); basis.len()];
                for (m, c) in reduced.terms() {
                    dense[basis_pos[&m]] += c;
                }
                vectors.push(dense);
                next.push((*j, reduced));
            }
        }
        ranks[k] = rank_of_vectors(vectors);
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    ranks
}

/// Expected torus-subring ranks: stratum counts restricted to the pinned
/// bar indices.
pub fn expected_torus_ranks(sig: &ChamberSignature, class: ChamberClass) -> Vec<usize> {
    let n = sig.n;
    let restricted = matches!(
        class.special_type().map(|t| t.indices()),
        Some(t) if t == vec![n - 4, n - 3, n - 1]
    );
    let mut counts = vec![0usize; n - 2];
    for m in &sig.shorts {
        if restricted && [n - 4, n - 3, n - 2].iter().any(|&j| m.contains(j)) {
            continue;
        }
        counts[m.card()] += 1;
    }
    counts
}

/// Report of the torus comparison for one chamber.
#[derive(Clone, Debug, Serialize)]
pub struct BalancedReport {
    pub ranks: Vec<usize>,
    pub expected: Vec<usize>,
    pub vanishing_ok: bool,
    pub pass: bool,
}

/// Checks that the subring generated by the pinned torus images has the
/// stratum-count ranks, and that a product `X_J` vanishes exactly when
/// `J ∪ {n}` is long.
pub fn balanced_check(lengths: &LengthVector) -> Result<BalancedReport> {
    let sig = chamber_signature(lengths)?;
    let ph = present_h1_from_signature(&sig)?;
    let ranks = torus_image_ranks(&ph);
    let expected = expected_torus_ranks(&sig, ph.class);

    let pres = &ph.presentation;
    let pinned: Vec<usize> = ph
        .torus_images
        .iter()
        .enumerate()
        .filter(|(_, img)| img.pinned().is_some())
        .map(|(idx, _)| idx + 1)
        .collect();
    let mut vanishing_ok = true;
    let universe = SubsetMask::from_indices(&pinned);
    let mut s = universe.0;
    loop {
        let m = SubsetMask(s);
        if !m.is_empty() && m.card() + 3 <= ph.n {
            let mut prod = RingElement::from_mono(0, rat(1));
            for j in m.indices() {
                prod = prod.mul(ph.torus_images[j - 1].pinned().unwrap());
            }
            let vanishes = pres.canonical_form(&prod).is_zero();
            if vanishes != with_n_long(&sig, m) {
                vanishing_ok = false;
            }
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & universe.0;
    }

    let pass = ranks == expected && vanishing_ok;
    Ok(BalancedReport { ranks, expected, vanishing_ok, pass })
}

/// `b_{n−4} − rank_{n−4}` of the presented ring (special chambers only).
pub fn h1_deficit(lengths: &LengthVector) -> Result<usize> {
    let sig = chamber_signature(lengths)?;
    let class = classify_signature(&sig);
    if class.special_type().is_none() {
        return Err(Error::NotSpecial);
    }
    let ph = present_h1_from_signature(&sig)?;
    let b = betti(lengths)?.0;
    let k = ph.deficit_degree;
    let rank = ph.presentation.graded_rank(k);
    Ok(b[k] as usize - rank)
}

/// Dead-generator count predicted per type: degree-one generators whose
/// duals live only in the missing top stratum.
pub fn expected_deficit(sig: &ChamberSignature, class: ChamberClass) -> Result<usize> {
    let n = sig.n;
    let Some(t) = class.special_type().map(|t| t.indices()) else {
        return Err(Error::NotSpecial);
    };
    Ok(if t == [n - 4, n - 3, n - 2] {
        0
    } else if t == [n - 4, n - 3, n - 1] {
        usize::from(singleton_short(sig, n - 1))
    } else if t == [n - 3, n - 2, n - 1] {
        (n - 3..n).filter(|&k| singleton_short(sig, k)).count()
    } else {
        (n - 2..n).filter(|&k| singleton_short(sig, k)).count()
    })
}

// ---------------------------------------------------------------------------
// Right-angled Artin group graphs
// ---------------------------------------------------------------------------

/// Commutation graph of the fundamental group for the right-angled Artin
/// chamber types, with its flag complex.
#[derive(Clone, Debug)]
pub struct RaagGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub flag: SimplicialComplex,
}

/// Builds the commutation graph for special types `{i,n−2,n−1}` with
/// `i ≤ n−5` (needs `n ≥ 6`), or `i = n−4` when `{n−4,n−3,n}` is short
/// (needs `n ≥ 7`). Vertices: `a_1,…,a_k` with `k = |S_1|`, and
/// `b_i,…,b_{n−3}`. All `b`-vertices are pairwise adjacent — this is what
/// the product structure `Z^{i−1} × (Z^{n−2−i} ∗ Z^{n−2−i})` at `k = n−3`
/// requires.
pub fn raag_graph(lengths: &LengthVector) -> Result<RaagGraph> {
    let sig = chamber_signature(lengths)?;
    let n = sig.n;
    let class = classify_signature(&sig);
    let Some(t) = class.special_type().map(|t| t.indices()) else {
        return Err(Error::WrongType(format!(
            "chamber is {class}, which has no right-angled Artin model"
        )));
    };
    if !(t[1] == n - 2 && t[2] == n - 1 && t[0] <= n - 4) {
        return Err(Error::WrongType(format!(
            "type {{{},{},{}}} has no right-angled Artin model",
            t[0], t[1], t[2]
        )));
    }
    let i = t[0];
    let applicable = (i + 5 <= n)
        || (i == n - 4 && n >= 7 && sig.contains(SubsetMask::from_indices(&[n - 4, n - 3])));
    if !applicable {
        return Err(Error::WrongType(format!(
            "type {{{},{},{}}} with n = {n} is outside the right-angled Artin range",
            t[0], t[1], t[2]
        )));
    }

    let k = sig.stratum(1).len();
    let mut vertices: Vec<String> = (1..=k).map(|j| format!("a{j}")).collect();
    vertices.extend((i..=n - 3).map(|j| format!("b{j}")));
    let a = |j: usize| j - 1;
    let b = |j: usize| k + (j - i);

    let mut edges = Vec::new();
    for j in 1..=n - 3 {
        for m in j + 1..=n - 3 {
            edges.push((a(j), a(m)));
        }
    }
    for j in 1..i {
        for m in i..=n - 3 {
            edges.push((a(j), b(m)));
        }
    }
    for j in i..=n - 3 {
        for m in j + 1..=n - 3 {
            edges.push((b(j), b(m)));
        }
    }
    for j in 1..i {
        for m in [n - 2, n - 1] {
            if m <= k && sig.contains(SubsetMask::from_indices(&[j, m])) {
                edges.push((a(j), a(m)));
            }
        }
    }

    let flag = flag_complex(&vertices, &edges);
    Ok(RaagGraph { vertices, edges, flag })
}

/// Maximal cliques of a graph, as the facets of its flag complex.
fn flag_complex(vertices: &[String], edges: &[(usize, usize)]) -> SimplicialComplex {
    let nv = vertices.len();
    let mut adj = vec![0u32; nv];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut cliques = Vec::new();
    bron_kerbosch(0, ((1u64 << nv) - 1) as u32, 0, &adj, &mut cliques);
    let facets = cliques
        .into_iter()
        .map(|c| (0..nv).filter(|&v| c & (1 << v) != 0).collect())
        .collect();
    SimplicialComplex::new(vertices.to_vec(), facets).expect("cliques are valid facets")
}

fn bron_kerbosch(r: u32, p: u32, x: u32, adj: &[u32], out: &mut Vec<u32>) {
    if p == 0 && x == 0 {
        if r != 0 {
            out.push(r);
        }
        return;
    }
    let pux = p | x;
    let pivot = (0..adj.len())
        .filter(|&v| pux & (1 << v) != 0)
        .max_by_key(|&v| (p & adj[v]).count_ones())
        .unwrap();
    let mut candidates = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let vb = 1u32 << v;
        bron_kerbosch(r | vb, p & adj[v], x & adj[v], adj, out);
        p &= !vb;
        x |= vb;
        candidates &= candidates - 1;
    }
}

/// Consistency of the graph model against the presented ring.
#[derive(Clone, Debug, Serialize)]
pub struct RaagReport {
    pub nonedge_violations: Vec<(String, String)>,
    pub rank_dominance: bool,
    pub flag_ranks: Vec<usize>,
    pub ring_ranks: Vec<usize>,
    pub pass: bool,
}

/// Checks that (a) non-adjacent vertices multiply to zero in the presented
/// ring under the role-matching map `a_j ↦ A_j, b_j ↦ B_j`, and (b) the
/// flag-complex face ring dominates the presented ring degreewise (the
/// ring is a quotient of the group cohomology).
pub fn raag_consistency(lengths: &LengthVector) -> Result<RaagReport> {
    let graph = raag_graph(lengths)?;
    let ph = present_h1(lengths)?;
    let pres = &ph.presentation;

    let role_of = |name: &str| -> GeneratorRole {
        let (kind, idx) = name.split_at(1);
        let j: usize = idx.parse().expect("vertex names are a<j>/b<j>");
        match kind {
            "a" => GeneratorRole::A(j),
            _ => GeneratorRole::B(j),
        }
    };

    let nv = graph.vertices.len();
    let mut adjacent = vec![vec![false; nv]; nv];
    for &(u, v) in &graph.edges {
        adjacent[u][v] = true;
        adjacent[v][u] = true;
    }
    let mut nonedge_violations = Vec::new();
    for u in 0..nv {
        for v in u + 1..nv {
            if adjacent[u][v] {
                continue;
            }
            let gu = ph
                .generator_with_role(role_of(&graph.vertices[u]))
                .expect("graph vertices match ring generators");
            let gv = ph
                .generator_with_role(role_of(&graph.vertices[v]))
                .expect("graph vertices match ring generators");
            let prod = pres.multiply(&RingElement::generator(gu), &RingElement::generator(gv));
            if !prod.is_zero() {
                nonedge_violations.push((graph.vertices[u].clone(), graph.vertices[v].clone()));
            }
        }
    }

    let flag_ring = face_ring(&graph.flag);
    let max_deg = nv.max(pres.generators().len());
    let flag_ranks = flag_ring.graded_ranks(max_deg);
    let ring_ranks = pres.graded_ranks(max_deg);
    let rank_dominance = flag_ranks.iter().zip(ring_ranks.iter()).all(|(f, r)| f >= r);

    let pass = nonedge_violations.is_empty() && rank_dominance;
    Ok(RaagReport { nonedge_violations, rank_dominance, flag_ranks, ring_ranks, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(values: &[i64]) -> LengthVector {
        LengthVector::from_ints(values).unwrap()
    }

    #[test]
    fn genus2_presentation() {
        let ph = present_h1(&lv(&[1, 1, 2, 2, 3])).unwrap();
        // A3, A4 dropped ({3,5} and {4,5} long): generators A1, A2, B1, B2.
        assert_eq!(
            ph.roles,
            vec![
                GeneratorRole::A(1),
                GeneratorRole::A(2),
                GeneratorRole::B(1),
                GeneratorRole::B(2)
            ]
        );
        assert_eq!(ph.presentation.graded_ranks(2), vec![1, 4, 1]);
        // X1 = A1 − B1, X2 = A2 − B2, X3 = X4 = 0.
        assert!(matches!(&ph.torus_images[2], TorusImage::Pinned(e) if e.is_zero()));
        assert!(matches!(&ph.torus_images[3], TorusImage::Pinned(e) if e.is_zero()));
    }

    #[test]
    fn tied_symplectic_presentation_ranks() {
        let ph = present_h1(&lv(&[1, 3, 3, 3, 4, 5])).unwrap();
        // Generators A1..A5 (A5 present since {5,6} is short), B2, B3, B4.
        assert_eq!(ph.roles.len(), 8);
        assert_eq!(ph.presentation.graded_ranks(3), vec![1, 8, 7, 1]);
    }

    #[test]
    fn normal_presentation_with_no_generators() {
        let ph = present_h1(&lv(&[1, 1, 1, 1, 3])).unwrap();
        assert!(ph.roles.is_empty());
        assert_eq!(ph.presentation.graded_ranks(2), vec![1, 0, 0]);
    }

    #[test]
    fn present_h1_rejects_empty_and_disconnected() {
        assert!(matches!(present_h1(&lv(&[1, 1, 1, 5])), Err(Error::EmptySpace)));
        assert!(matches!(present_h1(&lv(&[1, 1, 4, 4, 5])), Err(Error::Disconnected)));
    }

    #[test]
    fn torus_ranks_examples() {
        let ph = present_h1(&lv(&[1, 1, 2, 2, 3])).unwrap();
        assert_eq!(torus_image_ranks(&ph), vec![1, 2, 0]);

        let ph = present_h1(&lv(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(torus_image_ranks(&ph), vec![1, 4, 0]);

        let l = lv(&[1, 3, 3, 3, 4, 5]);
        let ph = present_h1(&l).unwrap();
        let sig = chamber_signature(&l).unwrap();
        assert_eq!(torus_image_ranks(&ph), expected_torus_ranks(&sig, ph.class));
    }

    #[test]
    fn balanced_subalgebra_examples() {
        let p = balanced_subalgebra(&lv(&[1, 1, 2, 2, 3])).unwrap();
        assert_eq!(p.graded_ranks(2), vec![1, 2, 0]);
        let p = balanced_subalgebra(&lv(&[1, 1, 1, 2, 2])).unwrap();
        assert_eq!(p.graded_ranks(2), vec![1, 3, 0]);
        let p = balanced_subalgebra(&lv(&[1, 1, 1, 1, 3])).unwrap();
        assert_eq!(p.graded_ranks(2), vec![1, 0, 0]);
    }

    #[test]
    fn balanced_check_small_chambers() {
        for v in [
            &[1i64, 1, 2, 2, 3][..],
            &[1, 1, 1, 1, 1][..],
            &[1, 3, 3, 3, 4, 5][..],
            &[1, 3, 3, 4, 4, 6][..],
            &[1, 1, 1, 1, 3][..],
            &[1, 1, 1, 3, 3, 4][..],
        ] {
            let report = balanced_check(&lv(v)).unwrap();
            assert!(report.pass, "balanced check failed for {v:?}: {report:?}");
        }
    }

    #[test]
    fn deficit_examples() {
        assert_eq!(h1_deficit(&lv(&[1, 1, 2, 2, 3])).unwrap(), 0);
        assert_eq!(h1_deficit(&lv(&[1, 3, 3, 4, 4, 6])).unwrap(), 2);
        assert_eq!(h1_deficit(&lv(&[1, 3, 3, 3, 4, 5])).unwrap(), 1);
        assert!(matches!(h1_deficit(&lv(&[1, 1, 1, 1, 3])), Err(Error::NotSpecial)));
    }

    #[test]
    fn deficit_matches_prediction() {
        for v in [
            &[1i64, 1, 2, 2, 3][..],
            &[1, 1, 1, 1, 1][..],
            &[1, 3, 3, 3, 4, 5][..],
            &[1, 3, 3, 4, 4, 6][..],
            &[1, 1, 1, 3, 3, 4][..],
        ] {
            let sig = chamber_signature(&lv(v)).unwrap();
            let class = classify_signature(&sig);
            assert_eq!(
                h1_deficit(&lv(v)).unwrap(),
                expected_deficit(&sig, class).unwrap(),
                "deficit mismatch for {v:?}"
            );
        }
    }

    #[test]
    fn raag_graph_example() {
        // n = 6, type {1,4,5}: a-triangle plus b-triangle, no cross edges.
        let g = raag_graph(&lv(&[1, 1, 1, 3, 3, 4])).unwrap();
        assert_eq!(g.vertices.len(), 6);
        assert_eq!(g.edges.len(), 6);
        let flag_ring = face_ring(&g.flag);
        assert_eq!(flag_ring.graded_ranks(3), vec![1, 6, 6, 2]);
    }

    #[test]
    fn raag_wrong_type_errors() {
        assert!(matches!(raag_graph(&lv(&[1, 3, 3, 3, 4, 5])), Err(Error::WrongType(_))));
        assert!(matches!(raag_graph(&lv(&[1, 1, 2, 2, 3])), Err(Error::WrongType(_))));
        assert!(matches!(raag_graph(&lv(&[1, 3, 3, 4, 4, 6])), Err(Error::WrongType(_))));
    }

    #[test]
    fn raag_consistency_example() {
        let report = raag_consistency(&lv(&[1, 1, 1, 3, 3, 4])).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn top_class_is_nonzero_for_split_symplectic_types() {
        for v in [&[1i64, 1, 2, 2, 3][..], &[1, 3, 3, 4, 4, 6][..], &[1, 1, 1, 3, 3, 4][..]] {
            let ph = present_h1(&lv(v)).unwrap();
            let n = ph.n;
            let t = ph.class.special_type().unwrap().indices();
            assert_eq!((t[1], t[2]), (n - 2, n - 1));
            let i = t[0];
            let prod = |roles: Vec<GeneratorRole>| {
                let mut e = RingElement::from_mono(0, rat(1));
                for r in roles {
                    let g = ph.generator_with_role(r).unwrap();
                    e = e.mul(&RingElement::generator(g));
                }
                ph.presentation.canonical_form(&e)
            };
            let a_all = prod((1..=n - 3).map(GeneratorRole::A).collect());
            let mixed = prod(
                (1..i)
                    .map(GeneratorRole::A)
                    .chain((i..=n - 3).map(GeneratorRole::B))
                    .collect(),
            );
            assert!(!a_all.is_zero(), "top A-class vanished for {v:?}");
            let diff = a_all.add(&mixed.scale(&rat(-1)));
            let sum = a_all.add(&mixed);
            assert!(diff.is_zero() || sum.is_zero(), "A-top ≠ ±B-top for {v:?}");
        }
    }

    #[test]
    fn kunneth_type_ranks() {
        // n = 6 representative of type {2,3,4}: (1,5,5,5,5,6).
        let l = lv(&[1, 5, 5, 5, 5, 6]);
        let sig = chamber_signature(&l).unwrap();
        assert_eq!(
            classify_signature(&sig),
            ChamberClass::Special(SubsetMask::from_indices(&[2, 3, 4]))
        );
        let ph = present_h1(&l).unwrap();
        assert_eq!(ph.presentation.graded_ranks(3), vec![1, 9, 9, 1]);
        assert_eq!(h1_deficit(&l).unwrap(), 0);
        assert!(balanced_check(&l).unwrap().pass);
    }

    #[test]
    fn lone_generator_type_ranks() {
        // n = 5 representative of type {2,3,4}: (1,4,4,4,6) has M = T².
        let l = lv(&[1, 4, 4, 4, 6]);
        let ph = present_h1(&l).unwrap();
        assert_eq!(ph.class, ChamberClass::Special(SubsetMask::from_indices(&[2, 3, 4])));
        assert_eq!(ph.presentation.graded_ranks(2), vec![1, 2, 1]);
        assert!(balanced_check(&l).unwrap().pass);
    }
}
