//! Irreducible `M_0`-modules under the action of a code `D`: fusion, the b-map,
//! characters, orbits and stabilizers, induced (twisted) `M_D`-modules, and the
//! Case B pairing of `M_{D⁰}`-modules.

mod case_b;
mod characters;
mod labels;
mod orbits;

pub use case_b::{case_b_modules, case_b_modules_with_cap, CaseBRecord, CaseBReport, Verdict};
pub use characters::{character_of, Character, CharacterGroup};
pub use labels::{all_irr_labels, b_ext, fuse, sc_ext_weight, tensor_weight, IrrLabel};
pub use orbits::{
    count_twisted, induced_decomposition, orbits, orbits_with_cap, realize, stabilizer, stabilizer_brute,
    InducedReport, ModuleTable, OrbitRecord, Realization, Regime, DEFAULT_ORBIT_CAP,
};
