//! Exact combinatorics of shuffles of disjoint permutations.
//!
//! The crate covers four layers, each usable on its own:
//!
//! * [`perm`]: permutations over arbitrary distinct letters, descent sets,
//!   the major index and exhaustive shuffle enumeration.
//! * [`insertion`]: RL/LR classification of insertion spaces, the canonical
//!   labeling and major-increment sequences.
//! * [`qpoly`] and [`partition`]: exact polynomials in `q` with big-integer
//!   coefficients, Gaussian binomials, bounded partitions, and the closed
//!   forms of the shuffle identities ([`identities`]).
//! * [`bijection`]: the map from a `k`-descent shuffle to a pair of bounded
//!   partitions and its inverse.
//!
//! Everything here is `no_std` (with `alloc`) and free of IO. Positions and
//! descents are 1-based throughout; insertion spaces are numbered `0..=n`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bijection;
mod error;
pub mod identities;
pub mod insertion;
pub mod partition;
pub mod perm;
pub mod qpoly;

pub use bijection::{decompose, phi, psi, psi_traced, t_sequence_check, PartitionPair, PsiStep, PsiTrace, ShuffleDecomposition};
pub use error::Error;
pub use identities::{garsia_gessel_rhs, q_chu_vandermonde_lhs, stanley_rhs};
pub use insertion::{
    canonical_labeling, classify_space, descent_change, insert_at, major_increment, mis, mis_prefix_set, CanonicalLabeling,
    MisSequence, SpaceKind,
};
pub use partition::{enumerate_bounded_partitions, enumerate_exact_partitions, Partition};
pub use perm::{
    are_disjoint, des_maj, enumerate_shuffles, for_each_shuffle, next_permutation, shuffle_generating_function, shuffle_statistics, tail_descent_count,
    DescentProfile, Letter, Permutation, Shuffles,
};
pub use qpoly::{gaussian_binomial, q_factorial, q_integer, QPoly};

pub type Result<T, E = Error> = core::result::Result<T, E>;
