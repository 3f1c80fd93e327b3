//! Decorated permutations, Grassmann necklaces and positroid envelopes.

mod envelope;
mod necklace;
mod perm;

pub use envelope::{
    canonical_cmp, envelope_class_of, envelope_class_with, envelope_from_necklace, envelope_membership_check, envelope_positroid, is_positroid,
    is_positroid_by_crossing, is_positroid_by_envelope, weak_map_leq, EnvelopeClass, DEFAULT_BUDGET,
};
pub use necklace::{grassmann_necklace_of, necklace_to_permutation, permutation_to_necklace, GrassmannNecklace};
pub use perm::{decorated_permutation_of, disjoint_union_perm, two_sum_perm, DecoratedPermutation, FixedColor};
