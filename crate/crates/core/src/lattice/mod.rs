//! The lattice `N = √2·A_{k−1}`, its cosets in `N°`, minimal norms, and code lattices.

mod code_lattice;
mod coset;
mod norms;
pub mod smith;

pub use code_lattice::{
    build_code_lattice, build_code_lattice_verified, dual_membership, gram_matrix, pairing,
    pairing_labels, pairing_via_representatives, CodeLattice, Parity, ProductCoset,
};
pub use coset::{
    all_canonical, canonicalize, canonicalize_mask, coset_add, coset_neg, coset_of_vector, identity,
    norm_mod_two, representative, representative_raw, CosetLabel, LatticeVector, MAX_COSET_K,
};
pub use norms::{
    min_norm, min_norm_oracle, min_norm_oracle_raw, min_norm_raw, MinNorm, ORACLE_MAX_K,
};

use crate::error::Result;

/// Invariant factors of `N°/N` computed from the coset addition table.
pub fn coset_group_invariants(k: u32) -> Result<Vec<u64>> {
    let labels = all_canonical(k)?;
    let zero = identity(k)?;
    Ok(crate::abelian::invariant_factors(&labels, &zero, |x, y| {
        coset_add(x, y).expect("labels share k")
    }))
}
