//! Exact-arithmetic toolkit for planar polygon spaces.
//!
//! A length vector `ℓ = (ℓ₁,…,ℓₙ)` of positive rationals determines the
//! moduli space `M_ℓ` of closed planar linkages with those bar lengths, up
//! to rotation and translation. The diffeomorphism type of `M_ℓ` only
//! depends on the chamber of `ℓ`, i.e. on which subsets of bars are "short"
//! (sum less than the complementary sum). This crate computes, entirely in
//! exact rational arithmetic:
//!
//! * the short-set calculus, chamber signatures and genetic codes
//!   ([`combinatorics`]),
//! * enumeration of all chambers for a given `n` up to permutation, with
//!   realizability decided by an exact simplex solver ([`chambers`],
//!   [`simplex`]),
//! * Betti numbers and Euler characteristics ([`homology`]),
//! * the chamber taxonomy (empty / disconnected / normal / special with
//!   type) and annihilator rank invariants ([`taxonomy`]),
//! * quotients of integral exterior algebras, face rings of simplicial
//!   complexes, graded ranks and annihilators ([`exterior`]),
//! * presentations of the degree-one subring of `H*(M_ℓ)` for every
//!   connected chamber, with the torus comparison map ([`presentations`]),
//! * critical-point bookkeeping for the one-bar reduction cobordism
//!   ([`morse`]),
//! * the Walker-conjecture verification pipeline: graded-ring invariants
//!   separate chambers at desk scale ([`walker`]).
//!
//! Everything is deterministic; no floating point is used anywhere.

pub mod chambers;
pub mod combinatorics;
pub mod exterior;
pub mod homology;
pub mod morse;
pub mod presentations;
pub mod rat;
pub mod simplex;
pub mod taxonomy;
pub mod walker;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Hard cap on the number of bars, so subsets fit in a single machine word.
pub const MAX_BARS: usize = 24;
