//! Case B: pair M_{D⁰}-modules P with Q = M_{D¹} ⊠ P.

use pfkit::codes::{span, Codeword};
use pfkit::modules::{case_b_modules, sc_ext_weight};

pub fn run_example() -> pfkit::Result<()> {
    let d = span(&[Codeword::new(6, &[3])?], 6, 1)?;
    for w in d.words() {
        println!("h(M_{w}) = {}", sc_ext_weight(w));
    }
    let rep = case_b_modules(&d)?;
    println!("|D0| = {}, shift {}", rep.even.code.size(), rep.shift);
    for r in &rep.records {
        println!("{} + {}: {:?} ({:?} M_D-modules)", r.p_rep, r.q_rep, r.verdict, r.md_modules);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
