//! Quotients of integral exterior algebras by homogeneous square-free
//! ideals, exterior face rings, and simplicial-complex isomorphism.
//!
//! Monomials are square-free products of degree-one generators, stored as
//! bitmasks with the Koszul sign convention (indices ascending; sorting
//! transpositions contribute the sign). Graded ranks are computed over the
//! rationals: the degree-`k` slice of the ideal is spanned by all products
//! `m · r` of a relation `r` with a complementary monomial `m`. Monomial
//! relations are handled structurally (they delete columns); only the
//! multi-term relations require elimination, which keeps the matrices small
//! even at the documented ceiling of ~20 generators.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rat::Rat;
use crate::{Error, Result};

/// Square-free monomial over generator positions (0-based bitmask).
pub type Mono = u32;

pub fn mono_degree(m: Mono) -> usize {
    m.count_ones() as usize
}

/// `divisor` divides `m` as square-free monomials (its support is contained).
fn mono_divides(divisor: Mono, m: Mono) -> bool {
    divisor & m == divisor
}

/// Koszul product of two square-free monomials: `None` when they share a
/// generator, otherwise the sign from sorting the concatenation and the
/// union mask.
pub fn koszul(a: Mono, b: Mono) -> Option<(bool, Mono)> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rem = a;
    while rem != 0 {
        let i = rem.trailing_zeros();
        inversions += (b & ((1u32 << i) - 1)).count_ones();
        rem &= rem - 1;
    }
    Some((inversions % 2 == 1, a | b))
}

/// All degree-`k` square-free monomials over `g` generators, ascending.
pub fn monomials(g: usize, k: usize) -> Vec<Mono> {
    if k > g {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut m: u32 = (1 << k) - 1;
    let limit: u32 = 1 << g;
    while m < limit {
        out.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Homogeneous integer (stored as rational) combination of square-free
/// monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RingElement {
    terms: BTreeMap<Mono, Rat>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn from_mono(m: Mono, coeff: Rat) -> Self {
        let mut e = RingElement::zero();
        e.add_term(m, coeff);
        e
    }

    pub fn generator(index: usize) -> Self {
        Self::from_mono(1 << index, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mono, &Rat)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Mono, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> RingElement {
        if factor.is_zero() {
            return RingElement::zero();
        }
        RingElement {
            terms: self.terms.iter().map(|(&m, c)| (m, c * factor)).collect(),
        }
    }

    /// Free exterior product (no reduction).
    pub fn mul(&self, other: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                if let Some((neg, m)) = koszul(ma, mb) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for (m, _) in self.terms() {
            let d = mono_degree(m);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }
}

/// Degree-one generators plus homogeneous square-free relations.
#[derive(Clone, Debug, PartialEq)]
pub struct RingPresentation {
    generators: Vec<String>,
    relations: Vec<RingElement>,
}

impl RingPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<RingElement>) -> Result<Self> {
        if generators.len() > 28 {
            return Err(Error::OutOfRange(format!(
                "at most 28 generators supported, got {}",
                generators.len()
            )));
        }
        for r in &relations {
            if r.is_zero() {
                return Err(Error::InvalidInput("zero relation".into()));
            }
            match r.degree() {
                Some(d) if d >= 1 => {}
                _ => {
                    return Err(Error::InvalidInput(
                        "relations must be homogeneous of degree ≥ 1".into(),
                    ))
                }
            }
            for (m, _) in r.terms() {
                if (m >> generators.len()) != 0 {
                    return Err(Error::InvalidInput(
                        "relation mentions unknown generator".into(),
                    ));
                }
            }
        }
        Ok(RingPresentation { generators, relations })
    }

    pub fn exterior_algebra(generators: Vec<String>) -> Self {
        RingPresentation { generators, relations: Vec::new() }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[RingElement] {
        &self.relations
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    fn monomial_relations(&self) -> Vec<Mono> {
        self.relations
            .iter()
            .filter(|r| r.num_terms() == 1)
            .map(|r| r.terms().next().unwrap().0)
            .collect()
    }

    fn multi_relations(&self) -> Vec<&RingElement> {
        self.relations.iter().filter(|r| r.num_terms() > 1).collect()
    }

    /// Row-reduced model of the degree-`k` slice of the ideal.
    pub fn degree_slice(&self, k: usize) -> DegreeSlice {
        let g = self.generators.len();
        let mono_rels = self.monomial_relations();
        let killed = |m: Mono| mono_rels.iter().any(|&r| mono_divides(r, m));

        let cols: Vec<Mono> = monomials(g, k).into_iter().filter(|&m| !killed(m)).collect();
        let col_of: HashMap<Mono, usize> =
            cols.iter().enumerate().map(|(i, &m)| (m, i)).collect();

        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for rel in self.multi_relations() {
            let d = rel.degree().expect("validated homogeneous");
            if d > k {
                continue;
            }
            for m in monomials(g, k - d) {
                let mut row = vec![Rat::zero(); cols.len()];
                let mut nonzero = false;
                for (t, c) in rel.terms() {
                    if let Some((neg, prod)) = koszul(m, t) {
                        if let Some(&j) = col_of.get(&prod) {
                            let v = if neg { -c.clone() } else { c.clone() };
                            row[j] += v;
                            nonzero = true;
                        }
                    }
                }
                if nonzero && row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let pivots = rref(&mut rows);
        DegreeSlice { degree: k, cols, col_of, rows, pivots }
    }

    /// Rank over the rationals of the degree-`k` part of the quotient.
    pub fn graded_rank(&self, k: usize) -> usize {
        if k == 0 {
            return 1;
        }
        if k > self.generators.len() {
            return 0;
        }
        let slice = self.degree_slice(k);
        slice.cols.len() - slice.rows.len()
    }

    /// Ranks in degrees `0..=max_degree`.
    pub fn graded_ranks(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree).map(|k| self.graded_rank(k)).collect()
    }

    /// Canonical representative modulo the ideal (reduction against the
    /// row-reduced slice in ascending monomial order).
    pub fn canonical_form(&self, e: &RingElement) -> RingElement {
        let Some(k) = e.degree() else {
            assert!(e.is_zero(), "canonical_form needs homogeneous input");
            return RingElement::zero();
        };
        if k > self.generators.len() {
            return RingElement::zero();
        }
        self.degree_slice(k).reduce(e)
    }

    /// Product reduced to canonical form.
    pub fn multiply(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.canonical_form(&x.mul(y))
    }

    /// Monomials whose classes form a basis of the degree-`k` quotient.
    pub fn quotient_basis(&self, k: usize) -> Vec<Mono> {
        if k > self.generators.len() {
            return Vec::new();
        }
        if k == 0 {
            return vec![0];
        }
        self.degree_slice(k).quotient_basis()
    }

    /// Rank of `{x in degree deg : x·m = 0 for every degree-power monomial m}`.
    ///
    /// Monomials span the degree-`power` part of the subring generated in
    /// degree one, so testing against them suffices.
    pub fn annihilator_rank(&self, deg: usize, power: usize) -> usize {
        let g = self.generators.len();
        let dom = self.quotient_basis(deg);
        if dom.is_empty() {
            return 0;
        }
        if deg + power > g {
            return dom.len();
        }
        let target = self.degree_slice(deg + power);
        let tq = target.quotient_basis();
        let tq_of: HashMap<Mono, usize> = tq.iter().enumerate().map(|(i, &m)| (m, i)).collect();

        let mono_rels = self.monomial_relations();
        let killed = |m: Mono| mono_rels.iter().any(|&r| mono_divides(r, m));

        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for m in monomials(g, power) {
            if killed(m) {
                continue; // zero in the quotient: no constraint
            }
            let mut per_target: Vec<Vec<Rat>> = vec![vec![Rat::zero(); dom.len()]; tq.len()];
            let mut any = false;
            for (d, &b) in dom.iter().enumerate() {
                let Some((neg, prod)) = koszul(b, m) else { continue };
                let coeff = if neg { -Rat::one() } else { Rat::one() };
                let reduced = target.reduce(&RingElement::from_mono(prod, coeff));
                for (mono, c) in reduced.terms() {
                    per_target[tq_of[&mono]][d] += c;
                    any = true;
                }
            }
            if any {
                rows.extend(per_target.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())));
            }
        }
        let rank = rank_of_vectors(rows);
        dom.len() - rank
    }

    /// Human-readable form of an element in this presentation's generators.
    pub fn format_element(&self, e: &RingElement) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in e.terms().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let abs = c.abs();
            let names: Vec<&str> = (0..self.generators.len())
                .filter(|&j| m & (1 << j) != 0)
                .map(|j| self.generators[j].as_str())
                .collect();
            if m == 0 {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&format!("{abs}*"));
                }
                out.push_str(&names.join("*"));
            }
        }
        out
    }
}

/// Reduced degree slice: surviving columns plus RREF rows of the
/// multi-term relation multiples.
pub struct DegreeSlice {
    pub degree: usize,
    cols: Vec<Mono>,
    col_of: HashMap<Mono, usize>,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl DegreeSlice {
    /// Canonical reduction of a homogeneous element of this degree.
    /// Monomials killed by the monomial subideal simply vanish.
    pub fn reduce(&self, e: &RingElement) -> RingElement {
        let mut dense = vec![Rat::zero(); self.cols.len()];
        for (m, c) in e.terms() {
            if let Some(&j) = self.col_of.get(&m) {
                dense[j] += c;
            }
        }
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !dense[p].is_zero() {
                let factor = dense[p].clone();
                for (v, rv) in dense.iter_mut().zip(row.iter()) {
                    *v -= &factor * rv;
                }
            }
        }
        let mut out = RingElement::zero();
        for (j, v) in dense.into_iter().enumerate() {
            out.add_term(self.cols[j], v);
        }
        out
    }

    pub fn quotient_basis(&self) -> Vec<Mono> {
        let pivoted: BTreeSet<usize> = self.pivots.iter().copied().collect();
        self.cols
            .iter()
            .enumerate()
            .filter(|(j, _)| !pivoted.contains(j))
            .map(|(_, &m)| m)
            .collect()
    }
}

/// In-place reduced row echelon form; returns pivot columns. Zero rows are
/// dropped.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    let mut pivots = Vec::new();
    let mut next_row = 0usize;
    let width = rows.first().map_or(0, |r| r.len());
    for col in 0..width {
        if next_row == rows.len() {
            break;
        }
        let Some(pr) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pr);
        let inv = rows[next_row][col].clone();
        for v in rows[next_row].iter_mut() {
            *v /= &inv;
        }
        let pivot_row = rows[next_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(pivot_row.iter()) {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    rows.truncate(next_row);
    pivots
}

/// Rank over the rationals of a list of coordinate vectors.
pub fn rank_of_vectors(mut rows: Vec<Vec<Rat>>) -> usize {
    rref(&mut rows);
    rows.len()
}

// ---------------------------------------------------------------------------
// Simplicial complexes and exterior face rings
// ---------------------------------------------------------------------------

/// Finite simplicial complex with named, ordered vertices; stored by its
/// facets. Isolated vertices must be listed as singleton facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    pub vertices: Vec<String>,
    facets: Vec<Mono>,
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        if vertices.len() > 20 {
            return Err(Error::OutOfRange("at most 20 vertices supported".into()));
        }
        let mut masks: Vec<Mono> = Vec::new();
        for f in facets {
            let mut m: Mono = 0;
            for v in f {
                if v >= vertices.len() {
                    return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
                }
                m |= 1 << v;
            }
            if m != 0 {
                masks.push(m);
            }
        }
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<Mono> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && m & o == m))
            .collect();
        Ok(SimplicialComplex { vertices, facets: maximal })
    }

    pub fn facets(&self) -> &[Mono] {
        &self.facets
    }

    pub fn is_face(&self, m: Mono) -> bool {
        m != 0 && self.facets.iter().any(|&f| m & f == m)
    }

    /// All nonempty faces.
    pub fn faces(&self) -> Vec<Mono> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                if s != 0 {
                    out.insert(s);
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out.into_iter().collect()
    }

    /// Number of faces with `k` vertices, for `k = 1, 2, …`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for f in self.faces() {
            let k = mono_degree(f);
            if counts.len() < k {
                counts.resize(k, 0);
            }
            counts[k - 1] += 1;
        }
        counts
    }

    /// Minimal non-faces (size ≥ 1).
    pub fn minimal_nonfaces(&self) -> Vec<Mono> {
        let v = self.vertices.len();
        let faces: BTreeSet<Mono> = self.faces().into_iter().collect();
        let mut out = Vec::new();
        for m in 1..(1u32 << v) {
            if faces.contains(&m) {
                continue;
            }
            let mut minimal = true;
            let mut rem = m;
            while rem != 0 {
                let bit = rem & rem.wrapping_neg();
                let sub = m & !bit;
                if sub != 0 && !faces.contains(&sub) {
                    minimal = false;
                    break;
                }
                rem &= rem - 1;
            }
            if minimal {
                out.push(m);
            }
        }
        out
    }
}

/// Exterior face ring `Λ[Δ]`: exterior algebra on the vertices modulo the
/// monomials of the minimal non-faces.
pub fn face_ring(complex: &SimplicialComplex) -> RingPresentation {
    let relations = complex
        .minimal_nonfaces()
        .into_iter()
        .map(|m| RingElement::from_mono(m, Rat::one()))
        .collect();
    RingPresentation::new(complex.vertices.clone(), relations)
        .expect("face ring relations are always valid")
}

/// Searches for a vertex bijection carrying faces to faces in both
/// directions. Vertices are matched by their per-size face-degree profiles
/// before backtracking.
pub fn complex_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Vec<usize>> {
    let (va, vb) = (a.vertices.len(), b.vertices.len());
    if va != vb {
        return None;
    }
    let faces_a: BTreeSet<Mono> = a.faces().into_iter().collect();
    let faces_b: BTreeSet<Mono> = b.faces().into_iter().collect();
    if a.face_counts() != b.face_counts() {
        return None;
    }

    let profile = |faces: &BTreeSet<Mono>, nverts: usize, v: usize| -> Vec<usize> {
        let mut p = vec![0usize; nverts + 1];
        for &f in faces {
            if f & (1 << v) != 0 {
                p[mono_degree(f)] += 1;
            }
        }
        p
    };
    let prof_a: Vec<Vec<usize>> = (0..va).map(|v| profile(&faces_a, va, v)).collect();
    let prof_b: Vec<Vec<usize>> = (0..vb).map(|v| profile(&faces_b, vb, v)).collect();
    {
        let mut sa = prof_a.clone();
        let mut sb = prof_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    // Most-constrained-first: rarer profiles early.
    let mut order: Vec<usize> = (0..va).collect();
    order.sort_by_key(|&v| {
        let count = prof_a.iter().filter(|p| **p == prof_a[v]).count();
        (count, v)
    });

    struct Ctx<'c> {
        order: &'c [usize],
        prof_a: &'c [Vec<usize>],
        prof_b: &'c [Vec<usize>],
        faces_a: &'c BTreeSet<Mono>,
        faces_b: &'c BTreeSet<Mono>,
    }

    fn consistent(ctx: &Ctx<'_>, mapping: &[usize]) -> bool {
        let mut assigned: Mono = 0;
        let mut assigned_image: Mono = 0;
        let mut inverse = vec![usize::MAX; mapping.len()];
        for (v, &w) in mapping.iter().enumerate() {
            if w != usize::MAX {
                assigned |= 1 << v;
                assigned_image |= 1 << w;
                inverse[w] = v;
            }
        }
        for &f in ctx.faces_a {
            if f & !assigned == 0 {
                let mut img: Mono = 0;
                let mut rem = f;
                while rem != 0 {
                    img |= 1 << mapping[rem.trailing_zeros() as usize];
                    rem &= rem - 1;
                }
                if !ctx.faces_b.contains(&img) {
                    return false;
                }
            }
        }
        for &f in ctx.faces_b {
            if f & !assigned_image == 0 {
                let mut pre: Mono = 0;
                let mut rem = f;
                while rem != 0 {
                    pre |= 1 << inverse[rem.trailing_zeros() as usize];
                    rem &= rem - 1;
                }
                if !ctx.faces_a.contains(&pre) {
                    return false;
                }
            }
        }
        true
    }

    fn backtrack(ctx: &Ctx<'_>, pos: usize, mapping: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if pos == ctx.order.len() {
            return true;
        }
        let v = ctx.order[pos];
        for w in 0..ctx.prof_b.len() {
            if used[w] || ctx.prof_a[v] != ctx.prof_b[w] {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if consistent(ctx, mapping) && backtrack(ctx, pos + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    let ctx = Ctx {
        order: &order,
        prof_a: &prof_a,
        prof_b: &prof_b,
        faces_a: &faces_a,
        faces_b: &faces_b,
    };
    let mut mapping = vec![usize::MAX; va];
    let mut used = vec![false; vb];
    if backtrack(&ctx, 0, &mut mapping, &mut used) {
        // Transport every face once more before returning.
        for &f in &faces_a {
            let mut img: Mono = 0;
            let mut rem = f;
            while rem != 0 {
                img |= 1 << mapping[rem.trailing_zeros() as usize];
                rem &= rem - 1;
            }
            assert!(faces_b.contains(&img), "backtracking returned a non-isomorphism");
        }
        Some(mapping)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// JSON wire format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermWire {
    coeff: String,
    monomial: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PresentationWire {
    generators: Vec<String>,
    relations: Vec<Vec<TermWire>>,
}

impl RingElement {
    /// `(coefficient, 0-based generator indices)` pairs in monomial order.
    pub fn to_wire(&self) -> Vec<(String, Vec<usize>)> {
        self.terms()
            .map(|(m, c)| {
                let indices = (0..32usize).filter(|j| m & (1 << j) != 0).collect();
                (c.to_string(), indices)
            })
            .collect()
    }
}

impl RingPresentation {
    pub fn to_json(&self) -> serde_json::Value {
        let wire = PresentationWire {
            generators: self.generators.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.to_wire()
                        .into_iter()
                        .map(|(coeff, monomial)| TermWire { coeff, monomial })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_value(wire).expect("serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn genus2() -> RingPresentation {
        // Λ[A1,A2,B1,B2] / (A1A2 + B1B2, AiBk for i,k ∈ {1,2})
        let gens = vec!["A1".into(), "A2".into(), "B1".into(), "B2".into()];
        let mut relations = vec![];
        let mut r = RingElement::from_mono(0b0011, rat(1));
        r.add_term(0b1100, rat(1));
        relations.push(r);
        for a in 0..2u32 {
            for b in 2..4u32 {
                relations.push(RingElement::from_mono((1 << a) | (1 << b), rat(1)));
            }
        }
        RingPresentation::new(gens, relations).unwrap()
    }

    #[test]
    fn koszul_signs() {
        assert_eq!(koszul(0b01, 0b10), Some((false, 0b11)));
        assert_eq!(koszul(0b10, 0b01), Some((true, 0b11)));
        assert_eq!(koszul(0b01, 0b01), None);
        // (x1x3)·(x2x4): x2 moves past x3 only.
        assert_eq!(koszul(0b0101, 0b1010), Some((true, 0b1111)));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(4, 0), vec![0]);
        assert_eq!(monomials(4, 5), Vec::<Mono>::new());
        assert_eq!(monomials(4, 2).len(), 6);
        assert_eq!(monomials(4, 2)[0], 0b0011);
    }

    #[test]
    fn genus2_ranks() {
        let p = genus2();
        assert_eq!(p.graded_ranks(4), vec![1, 4, 1, 0, 0]);
    }

    #[test]
    fn face_ring_examples() {
        let two_points =
            SimplicialComplex::new(vec!["X1".into(), "X2".into()], vec![vec![0], vec![1]])
                .unwrap();
        let p = face_ring(&two_points);
        assert_eq!(p.graded_ranks(2), vec![1, 2, 0]);

        let edge =
            SimplicialComplex::new(vec!["X1".into(), "X2".into()], vec![vec![0, 1]]).unwrap();
        let p = face_ring(&edge);
        assert_eq!(p.graded_ranks(2), vec![1, 2, 1]);
    }

    #[test]
    fn face_ring_rank_equals_face_count() {
        let complexes = vec![
            SimplicialComplex::new(
                (0..5).map(|i| format!("v{i}")).collect(),
                vec![vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![1, 3]],
            )
            .unwrap(),
            SimplicialComplex::new(
                (0..6).map(|i| format!("v{i}")).collect(),
                vec![vec![0, 1, 2, 3], vec![3, 4, 5], vec![0, 5]],
            )
            .unwrap(),
        ];
        for c in complexes {
            let p = face_ring(&c);
            let counts = c.face_counts();
            for k in 1..=c.vertices.len() {
                let expected = counts.get(k - 1).copied().unwrap_or(0);
                assert_eq!(p.graded_rank(k), expected, "degree {k}");
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let p = genus2();
        let a1 = RingElement::generator(0);
        let a2 = RingElement::generator(1);
        let b1 = RingElement::generator(2);
        let b2 = RingElement::generator(3);
        // A1·A2 reduces to −B1B2 (ascending monomial order pivots on A1A2).
        assert_eq!(p.multiply(&a1, &a2), RingElement::from_mono(0b1100, rat(-1)));
        // Exterior square vanishes.
        assert!(p.multiply(&a1, &a1).is_zero());
        // Relation member.
        assert!(p.multiply(&a1, &b1).is_zero());
        // Graded commutativity in odd degree: x·y = −y·x after reduction.
        let xy = p.multiply(&a1, &b2);
        let yx = p.multiply(&b2, &a1);
        assert_eq!(xy, yx.scale(&rat(-1)));
    }

    #[test]
    fn annihilator_examples() {
        let p = genus2();
        // Symplectic pairing is nondegenerate.
        assert_eq!(p.annihilator_rank(1, 1), 0);
        // The top class annihilates degree one.
        assert_eq!(p.annihilator_rank(2, 1), 1);

        let two_points = face_ring(
            &SimplicialComplex::new(vec!["X1".into(), "X2".into()], vec![vec![0], vec![1]])
                .unwrap(),
        );
        assert_eq!(two_points.annihilator_rank(1, 1), 2);
    }

    #[test]
    fn rank_ignores_relation_order() {
        let gens: Vec<String> =
            vec!["A1".into(), "A2".into(), "B1".into(), "B2".into()];
        let mut r = RingElement::from_mono(0b0011, rat(1));
        r.add_term(0b1100, rat(1));
        let mut rels = vec![r];
        for a in 0..2u32 {
            for b in 2..4u32 {
                rels.push(RingElement::from_mono((1 << a) | (1 << b), rat(1)));
            }
        }
        let forward = RingPresentation::new(gens.clone(), rels.clone()).unwrap();
        rels.reverse();
        let backward = RingPresentation::new(gens, rels).unwrap();
        for k in 0..=4 {
            assert_eq!(forward.graded_rank(k), backward.graded_rank(k));
        }
    }

    #[test]
    fn complex_isomorphism_examples() {
        let edge_plus_point = SimplicialComplex::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![vec![0, 1], vec![2]],
        )
        .unwrap();
        let point_plus_edge = SimplicialComplex::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![vec![0], vec![1, 2]],
        )
        .unwrap();
        let m = complex_isomorphic(&edge_plus_point, &point_plus_edge).unwrap();
        assert_eq!(m.len(), 3);

        let edge = SimplicialComplex::new(vec!["1".into(), "2".into()], vec![vec![0, 1]]).unwrap();
        let two_points =
            SimplicialComplex::new(vec!["1".into(), "2".into()], vec![vec![0], vec![1]]).unwrap();
        assert!(complex_isomorphic(&edge, &two_points).is_none());

        // Reflexivity and symmetry on a small complex.
        let c = SimplicialComplex::new(
            (0..4).map(|i| format!("v{i}")).collect(),
            vec![vec![0, 1, 2], vec![2, 3]],
        )
        .unwrap();
        assert!(complex_isomorphic(&c, &c).is_some());
        assert_eq!(
            complex_isomorphic(&c, &edge_plus_point).is_some(),
            complex_isomorphic(&edge_plus_point, &c).is_some()
        );
    }

    #[test]
    fn canonical_form_kills_relations() {
        let p = genus2();
        let mut rel = RingElement::from_mono(0b0011, rat(1));
        rel.add_term(0b1100, rat(1));
        assert!(p.canonical_form(&rel).is_zero());
    }

    #[test]
    fn product_laws_on_random_elements() {
        use rand::{Rng, SeedableRng};
        let p = genus2();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x657874);
        let random_elem = |rng: &mut rand_chacha::ChaCha8Rng, deg: usize| -> RingElement {
            let mut e = RingElement::zero();
            for m in monomials(4, deg) {
                e.add_term(m, rat(rng.gen_range(-3..=3)));
            }
            e
        };
        for _ in 0..30 {
            let dx = rng.gen_range(1..=2usize);
            let dy = rng.gen_range(1..=2usize);
            let x = random_elem(&mut rng, dx);
            let y = random_elem(&mut rng, dy);
            // Graded commutativity after reduction.
            let xy = p.multiply(&x, &y);
            let yx = p.multiply(&y, &x);
            let sign = if dx * dy % 2 == 1 { rat(-1) } else { rat(1) };
            assert_eq!(xy, yx.scale(&sign));
            // Associativity against a third factor.
            let z = random_elem(&mut rng, 1);
            let left = p.multiply(&p.multiply(&x, &y), &z);
            let right = p.multiply(&x, &p.multiply(&y, &z));
            assert_eq!(left, right);
        }
    }

    #[test]
    fn presentation_validation() {
        assert!(RingPresentation::new(vec!["X".into()], vec![RingElement::zero()]).is_err());
        let mut inhomogeneous = RingElement::from_mono(0b1, rat(1));
        inhomogeneous.add_term(0b11, rat(1));
        assert!(
            RingPresentation::new(vec!["X".into(), "Y".into()], vec![inhomogeneous]).is_err()
        );
    }
}
