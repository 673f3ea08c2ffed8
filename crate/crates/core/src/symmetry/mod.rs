//! Permutations, explicit permutation groups, stabilisers, automorphism
//! search, and subgroup-chain bounds.

mod chain;
mod fixing;
mod group;
mod permutation;
mod search;

use thiserror::Error;

pub(crate) use chain::all_permutations;
pub use chain::{
    chain_length_bound, elementary_chain_bound, longest_chain_bruteforce, BoundMode,
    SubgroupLattice, BRUTEFORCE_MAX_N,
};
pub use fixing::{block_action, minimal_fixing_set};
pub use group::{
    block_stabilizer, colouring_stabilizer, orbits, pointwise_stabilizer, PermGroup,
    DEFAULT_GROUP_CAP,
};
pub use permutation::Permutation;
pub use search::{automorphism_group, AutomorphismSearch};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("group exceeds the element cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("vertex {vertex} outside the domain of size {degree}")]
    OutOfDomain { vertex: usize, degree: usize },
    #[error("domain not invariant: {vertex} maps to {image}")]
    NotInvariant { vertex: usize, image: usize },
    #[error("group does not permute the blocks (block {block})")]
    NotBlockAction { block: usize },
    #[error("fixing set of length {length} exceeds the bound {bound}")]
    BoundViolated { length: usize, bound: usize },
    #[error("colouring has {found} entries, expected {expected}")]
    ColouringLength { expected: usize, found: usize },
    #[error("exhaustive subgroup chains are supported for 1 <= n <= 5, got {n}")]
    ChainDegreeOutOfRange { n: usize },
}
