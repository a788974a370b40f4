//! Orbits of D on Irr(M_0) and the number of irreducible (twisted) M_D-modules.

use pfkit::codes::{span, Codeword};
use pfkit::modules::{realize, ModuleTable};

pub fn run_example() -> pfkit::Result<()> {
    let d = span(&[Codeword::new(4, &[2])?], 4, 1)?;
    let table = ModuleTable::new(&d)?;
    for r in &table.induced {
        let o = &r.orbit;
        let place = realize(o.representative(), &d)?;
        println!(
            "{:<6} size {} |D_X| {} chi {} {:<18} -> {} x{}  coset {:?} in dual: {}",
            o.representative().to_string(),
            o.len(),
            o.stabilizer.size(),
            o.character,
            r.regime.to_string(),
            r.num_irreducibles,
            r.multiplicity,
            place.coset,
            place.dual_member
        );
    }
    for (chi, n) in table.counts() {
        println!("character {chi}: {n} irreducible modules");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
