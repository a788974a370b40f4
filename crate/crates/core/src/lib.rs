//! Exact invariants of Z_k-code extensions of parafermion vertex operator algebras.
//!
//! Everything is computed with exact integers and rationals: code classification,
//! cosets of `√2·A_{k−1}` and their minimal norms, parafermion and Virasoro
//! label data, branching decompositions, and the counting of irreducible
//! (twisted) modules of the simple current extension `M_D`.

pub mod abelian;
pub mod branching;
pub mod codes;
pub mod error;
pub mod lattice;
pub mod modules;
pub mod parafermion;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use rational::{ModOne, Q};
