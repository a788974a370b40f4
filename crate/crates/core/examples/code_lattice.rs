//! Build Γ_D for a few codes and recompute the discriminant from a Gram matrix.

use pfkit::codes::{span, Codeword};
use pfkit::lattice::build_code_lattice_verified;

pub fn run_example() -> pfkit::Result<()> {
    for (k, gens) in [(4u32, vec![vec![2i64]]), (6, vec![vec![3]]), (5, vec![vec![1, 2]])] {
        let ell = gens[0].len();
        let gens = gens.iter().map(|g| Codeword::new(k, g)).collect::<pfkit::Result<Vec<_>>>()?;
        let l = build_code_lattice_verified(&span(&gens, k, ell)?)?;
        println!(
            "k={k} ell={ell}: {:?}, rank {}, |Γ°/Γ| = {}, invariants {:?}",
            l.parity,
            l.rank,
            l.discriminant_order,
            l.discriminant_invariants.unwrap_or_default()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
