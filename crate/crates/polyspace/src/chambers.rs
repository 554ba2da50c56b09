//! Chamber enumeration up to permutation and exact realizability of
//! genetic codes.
//!
//! A candidate chamber is a down-closed family of subsets of `{1,…,n−1}`
//! (under the dominance order) recording which `J ∪ {n}` are short.
//! Realizability of a family is a strict linear feasibility problem: on the
//! normalized cone `Σℓ = 1, ℓ ascending`, each maximal member must be
//! strictly short, each minimal non-member strictly long. Strictness is
//! expressed through a slack variable `δ` that the exact simplex maximizes;
//! the family is realizable iff the optimum is positive. Enumeration runs
//! depth-first over a linear extension of the dominance order, reusing the
//! parent's witness vector to skip solves whose constraints it already
//! satisfies strictly.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    chamber_signature, down_closure, genetic_code, poset_leq, ChamberSignature, GeneticCode,
    LengthVector, SubsetMask,
};
use crate::homology::betti;
use crate::rat::{integerize, parse_rat, rat, Rat};
use crate::simplex::{Outcome, Program, Sense};
use crate::taxonomy::{classify_signature, ChamberClass};
use crate::{Error, Result};

/// Strict-inequality feasibility instance for one candidate chamber: every
/// `J ∪ {n}` with `J` in `must_be_short` short, every `K ∪ {n}` with `K` in
/// `must_be_long` long, for an ordered normalized length vector.
#[derive(Clone, Debug)]
pub struct RealizabilityProblem {
    pub n: usize,
    pub must_be_short: Vec<SubsetMask>,
    pub must_be_long: Vec<SubsetMask>,
}

impl RealizabilityProblem {
    /// Maximizes the strictness slack. Returns the witness and the slack
    /// when the optimum is positive.
    pub fn solve(&self) -> Option<(Vec<Rat>, Rat)> {
        let n = self.n;
        let delta = n; // variable layout: ℓ_1..ℓ_n, δ
        let mut p = Program::new(n + 1);
        p.objective[delta] = rat(1);

        let row = |entries: &[(usize, i64)]| {
            let mut coeffs = vec![Rat::zero(); n + 1];
            for &(j, c) in entries {
                coeffs[j] = rat(c);
            }
            coeffs
        };

        // Normalization Σℓ = 1.
        p.constrain((0..n).map(|_| rat(1)).chain([rat(0)]).collect(), Sense::Eq, rat(1));
        // Ordering ℓ_i ≤ ℓ_{i+1}.
        for i in 0..n - 1 {
            p.constrain(row(&[(i + 1, 1), (i, -1)]), Sense::Ge, rat(0));
        }
        // Positivity with slack: ℓ_1 ≥ δ.
        p.constrain(row(&[(0, 1), (delta, -1)]), Sense::Ge, rat(0));
        // Short members: 2·Σ_{J∪{n}} ℓ + δ ≤ 1.
        for j in &self.must_be_short {
            let mut coeffs = vec![Rat::zero(); n + 1];
            for i in j.with(n).indices() {
                coeffs[i - 1] = rat(2);
            }
            coeffs[delta] = rat(1);
            p.constrain(coeffs, Sense::Le, rat(1));
        }
        // Long non-members: 2·Σ_{K∪{n}} ℓ − δ ≥ 1.
        for k in &self.must_be_long {
            let mut coeffs = vec![Rat::zero(); n + 1];
            for i in k.with(n).indices() {
                coeffs[i - 1] = rat(2);
            }
            coeffs[delta] = rat(-1);
            p.constrain(coeffs, Sense::Ge, rat(1));
        }

        match p.maximize() {
            Outcome::Optimal { value, point } if value.is_positive() => {
                Some((point[..n].to_vec(), value))
            }
            Outcome::Optimal { .. } | Outcome::Infeasible => None,
            Outcome::Unbounded => unreachable!("δ ≤ ℓ_1 ≤ 1 bounds the objective"),
        }
    }
}

fn validate_antichain(n: usize, code: &GeneticCode) -> Result<()> {
    if code.n != n {
        return Err(Error::DimensionMismatch(code.n, n));
    }
    for m in &code.antichain {
        if m.card() + 3 > n || m.max_index().unwrap_or(0) > n - 1 {
            return Err(Error::InvalidAntichain(format!(
                "member {m} must lie in {{1,…,{}}} and have at most {} elements",
                n - 1,
                n - 3
            )));
        }
    }
    for a in &code.antichain {
        for b in &code.antichain {
            if a != b && poset_leq(*a, *b) {
                return Err(Error::InvalidAntichain(format!("{a} ≤ {b}")));
            }
        }
    }
    Ok(())
}

/// Minimal non-members of a down-closed family inside the size-`≤ n−3`
/// subsets of `{1,…,n−1}`; `{∅}` when the family is empty.
fn minimal_nonmembers(sig: &ChamberSignature) -> Vec<SubsetMask> {
    let n = sig.n;
    let mut nonmembers = Vec::new();
    for bits in 0..(1u32 << (n - 1)) {
        let m = SubsetMask(bits);
        if m.card() + 3 <= n && !sig.contains(m) {
            nonmembers.push(m);
        }
    }
    nonmembers
        .iter()
        .copied()
        .filter(|&m| {
            !nonmembers
                .iter()
                .any(|&other| other != m && poset_leq(other, m))
        })
        .collect()
}

/// Decides whether some ordered generic vector has the given genetic code,
/// returning a small integer witness if so.
pub fn realizable(n: usize, code: &GeneticCode) -> Result<Option<LengthVector>> {
    if !(3..=crate::MAX_BARS).contains(&n) {
        return Err(Error::OutOfRange(format!("n = {n} not in 3..=24")));
    }
    validate_antichain(n, code)?;
    let sig = down_closure(code);
    let problem = RealizabilityProblem {
        n,
        must_be_short: code.antichain.clone(),
        must_be_long: minimal_nonmembers(&sig),
    };
    match problem.solve() {
        None => Ok(None),
        Some((point, _)) => {
            let ints = integerize(&point);
            let witness =
                LengthVector::new(ints.into_iter().map(Rat::from_integer).collect())?;
            assert_eq!(
                chamber_signature(&witness)?,
                sig,
                "witness does not reproduce the requested chamber"
            );
            Ok(Some(witness))
        }
    }
}

/// Witness for a signature; fails with [`Error::Unrealizable`] if no
/// chamber matches.
pub fn representative(sig: &ChamberSignature) -> Result<LengthVector> {
    let code = genetic_code(sig);
    if &down_closure(&code) != sig {
        return Err(Error::InvalidInput(
            "signature is not down-closed under the dominance order".into(),
        ));
    }
    realizable(sig.n, &code)?.ok_or(Error::Unrealizable)
}

/// One chamber of the catalog.
#[derive(Clone, Debug)]
pub struct ChamberEntry {
    pub genetic_code: GeneticCode,
    pub signature: ChamberSignature,
    pub representative: LengthVector,
    pub betti: Vec<u64>,
    pub class: ChamberClass,
}

/// All chambers for one `n`, up to permutation, in signature order.
#[derive(Clone, Debug)]
pub struct ChamberCatalog {
    pub n: usize,
    pub entries: Vec<ChamberEntry>,
}

/// Search node state for the depth-first enumeration.
#[derive(Clone)]
struct Node {
    max_members: Vec<SubsetMask>,
    min_nonmembers: Vec<SubsetMask>,
    members: Vec<SubsetMask>,
    witness: Vec<Rat>,
    /// Strict lower bound > 0 on the feasibility slack of `witness`.
    slack: Rat,
}

struct Search {
    n: usize,
    subsets: Vec<SubsetMask>,
}

impl Search {
    fn member_slack(&self, witness: &[Rat], j: SubsetMask, long: bool) -> Rat {
        let mut sum = witness[self.n - 1].clone();
        for i in j.indices() {
            sum += &witness[i - 1];
        }
        let gap = rat(1) - rat(2) * sum;
        if long {
            -gap
        } else {
            gap
        }
    }

    fn solve_node(&self, node: &mut Node) -> bool {
        let problem = RealizabilityProblem {
            n: self.n,
            must_be_short: node.max_members.clone(),
            must_be_long: node.min_nonmembers.clone(),
        };
        match problem.solve() {
            None => false,
            Some((point, delta)) => {
                node.witness = point;
                node.slack = delta;
                true
            }
        }
    }

    /// Tries to extend the node with one more constraint, reusing the
    /// parent's witness when it already satisfies the constraint strictly.
    fn extend(&self, node: &Node, j: SubsetMask, long: bool) -> Option<Node> {
        let mut next = node.clone();
        if long {
            next.min_nonmembers.push(j);
        } else {
            next.max_members.retain(|&m| !poset_leq(m, j));
            next.max_members.push(j);
            next.members.push(j);
        }
        let s = self.member_slack(&node.witness, j, long);
        if s.is_positive() {
            if s < next.slack {
                next.slack = s;
            }
            Some(next)
        } else if self.solve_node(&mut next) {
            Some(next)
        } else {
            None
        }
    }

    fn dfs(&self, node: Node, idx: usize, depth: usize, out: &mut Vec<ChamberEntry>) {
        if idx == self.subsets.len() {
            out.push(self.finish(node));
            return;
        }
        let j = self.subsets[idx];
        if node.min_nonmembers.iter().any(|&k| poset_leq(k, j)) {
            self.dfs(node, idx + 1, depth, out);
            return;
        }
        let short_branch = self.extend(&node, j, false);
        let long_branch = self.extend(&node, j, true);
        match (short_branch, long_branch) {
            (Some(a), Some(b)) => {
                if depth < 4 {
                    let (left, right) = rayon::join(
                        || {
                            let mut v = Vec::new();
                            self.dfs(a, idx + 1, depth + 1, &mut v);
                            v
                        },
                        || {
                            let mut v = Vec::new();
                            self.dfs(b, idx + 1, depth + 1, &mut v);
                            v
                        },
                    );
                    out.extend(left);
                    out.extend(right);
                } else {
                    self.dfs(a, idx + 1, depth, out);
                    self.dfs(b, idx + 1, depth, out);
                }
            }
            (Some(a), None) => self.dfs(a, idx + 1, depth, out),
            (None, Some(b)) => self.dfs(b, idx + 1, depth, out),
            (None, None) => {}
        }
    }

    fn finish(&self, node: Node) -> ChamberEntry {
        let n = self.n;
        let mut shorts = node.members.clone();
        shorts.sort_by_key(|m| m.canonical_key());
        let signature = ChamberSignature { n, shorts };
        // Final δ-maximizing solve over the full constraint set gives the
        // canonical representative.
        let problem = RealizabilityProblem {
            n,
            must_be_short: node.max_members.clone(),
            must_be_long: node.min_nonmembers.clone(),
        };
        let (point, _) = problem.solve().expect("leaf nodes are feasible");
        let ints = integerize(&point);
        let representative =
            LengthVector::new(ints.into_iter().map(Rat::from_integer).collect()).unwrap();
        let recomputed = chamber_signature(&representative).unwrap();
        assert_eq!(recomputed, signature, "witness does not reproduce its chamber");
        let betti = betti(&representative).unwrap().0;
        let class = classify_signature(&signature);
        ChamberEntry {
            genetic_code: genetic_code(&signature),
            signature,
            representative,
            betti,
            class,
        }
    }
}

/// Enumerates all chambers for `n` bars up to permutation.
///
/// The search space is the set of down-closed families over the dominance
/// order; infeasible branches are pruned by the exact LP. Practical through
/// `n = 9`.
pub fn enumerate_chambers(n: usize) -> Result<ChamberCatalog> {
    if !(3..=9).contains(&n) {
        return Err(Error::OutOfRange(format!("chamber enumeration supports n = 3..=9, got {n}")));
    }
    let mut subsets: Vec<SubsetMask> = (0..(1u32 << (n - 1)))
        .map(SubsetMask)
        .filter(|m| m.card() + 3 <= n)
        .collect();
    subsets.sort_by_key(|m| m.canonical_key());
    let search = Search { n, subsets };

    // Root: no constraints; the uniform vector with slack ℓ_1 works.
    let uniform = vec![Rat::new(1.into(), (n as i64).into()); n];
    let root = Node {
        max_members: Vec::new(),
        min_nonmembers: Vec::new(),
        members: Vec::new(),
        slack: uniform[0].clone(),
        witness: uniform,
    };
    let mut entries = Vec::new();
    search.dfs(root, 0, 0, &mut entries);
    entries.sort_by(|a, b| a.signature.shorts.len().cmp(&b.signature.shorts.len()).then_with(|| {
        a.signature
            .shorts
            .iter()
            .map(|m| m.canonical_key())
            .collect::<Vec<_>>()
            .cmp(&b.signature.shorts.iter().map(|m| m.canonical_key()).collect::<Vec<_>>())
    }));
    Ok(ChamberCatalog { n, entries })
}

/// Signatures of all ordered integer vectors with entries in `1..=max_entry`
/// and odd total (hence generic). Pure `i64` arithmetic, independent of the
/// rational code path; the completeness oracle for [`enumerate_chambers`].
pub fn sampled_signatures(n: usize, max_entry: i64) -> Vec<Vec<SubsetMask>> {
    use std::collections::BTreeSet;
    let mut found: BTreeSet<Vec<SubsetMask>> = BTreeSet::new();
    let mut vec = vec![1i64; n];
    loop {
        let total: i64 = vec.iter().sum();
        if total % 2 == 1 {
            let mut shorts = Vec::new();
            for bits in 0..(1u32 << (n - 1)) {
                let m = SubsetMask(bits);
                let sum: i64 = m.indices().iter().map(|&i| vec[i - 1]).sum::<i64>() + vec[n - 1];
                if 2 * sum < total {
                    shorts.push(m);
                }
            }
            shorts.sort_by_key(|m| m.canonical_key());
            found.insert(shorts);
        }
        // Next ascending multiset.
        let mut i = n;
        loop {
            if i == 0 {
                return found.into_iter().collect();
            }
            i -= 1;
            if vec[i] < max_entry {
                vec[i] += 1;
                for j in i + 1..n {
                    vec[j] = vec[i];
                }
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// JSONL persistence
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct EntryWire {
    n: usize,
    genetic_code: Vec<SubsetMask>,
    signature: Vec<SubsetMask>,
    representative: Vec<String>,
    betti: Vec<u64>,
    class: String,
}

impl ChamberEntry {
    pub fn to_json(&self, n: usize) -> String {
        let wire = EntryWire {
            n,
            genetic_code: self.genetic_code.antichain.clone(),
            signature: self.signature.shorts.clone(),
            representative: self
                .representative
                .entries()
                .iter()
                .map(|r| r.to_string())
                .collect(),
            betti: self.betti.clone(),
            class: self.class.to_string(),
        };
        serde_json::to_string(&wire).expect("serialization cannot fail")
    }

    pub fn from_json(line: &str) -> Result<(usize, ChamberEntry)> {
        let wire: EntryWire = serde_json::from_str(line)
            .map_err(|e| Error::InvalidInput(format!("bad catalog line: {e}")))?;
        let representative = LengthVector::new(
            wire.representative
                .iter()
                .map(|s| parse_rat(s))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let mut shorts = wire.signature;
        shorts.sort_by_key(|m| m.canonical_key());
        let signature = ChamberSignature { n: wire.n, shorts };
        let mut antichain = wire.genetic_code;
        antichain.sort_by_key(|m| m.canonical_key());
        let class = classify_signature(&signature);
        Ok((
            wire.n,
            ChamberEntry {
                genetic_code: GeneticCode { n: wire.n, antichain },
                signature,
                representative,
                betti: wire.betti,
                class,
            },
        ))
    }
}

impl ChamberCatalog {
    /// Line-delimited JSON, bit-exact reproducible.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.to_json(self.n));
            out.push('\n');
        }
        out
    }
}
