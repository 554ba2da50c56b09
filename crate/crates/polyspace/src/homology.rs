//! Additive invariants: the `a`-vector, Betti numbers and Euler
//! characteristic of `M_ℓ`.
//!
//! For generic `ℓ` the homology is free abelian with
//! `H_k ≅ Z^{a_k} ⊕ Z^{a_{n−3−k}}`, where `a_k` counts the `k`-element
//! strata of the chamber signature.

use serde::Serialize;

use crate::combinatorics::{chamber_signature, LengthVector};
use crate::Result;

/// Betti numbers `b_0,…,b_{n−3}`; empty when the polygon space is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector(pub Vec<u64>);

/// `a_k = |S_k(ℓ)|` for `k = 0,…,n−3`.
pub fn a_vector(lengths: &LengthVector) -> Result<Vec<u64>> {
    let sig = chamber_signature(lengths)?;
    Ok(sig.stratum_sizes().iter().map(|&s| s as u64).collect())
}

/// `b_k = a_k + a_{n−3−k}`.
pub fn betti(lengths: &LengthVector) -> Result<BettiVector> {
    let a = a_vector(lengths)?;
    if a.iter().all(|&x| x == 0) {
        return Ok(BettiVector(Vec::new()));
    }
    let top = a.len() - 1;
    Ok(BettiVector((0..=top).map(|k| a[k] + a[top - k]).collect()))
}

/// Alternating sum of the Betti numbers.
pub fn euler_characteristic(lengths: &LengthVector) -> Result<i64> {
    let b = betti(lengths)?;
    Ok(b.0
        .iter()
        .enumerate()
        .map(|(k, &bk)| if k % 2 == 0 { bk as i64 } else { -(bk as i64) })
        .sum())
}
