//! Span a code, classify it, and look at its dual and binary reduction.

use pfkit::codes::{all_codes, binary_reduce, classify_code, dual_code, radical_data, span, Codeword};

pub fn run_example() -> pfkit::Result<()> {
    let gen = Codeword::new(5, &[1, 2])?;
    let d = span(&[gen], 5, 2)?;
    println!("D = {:?}  ({})", d.words(), d.case());
    println!("D^perp has {} words", dual_code(&d)?.size());

    for (k, g) in [(4u32, 2i64), (6, 3), (9, 3), (4, 1)] {
        let d = span(&[Codeword::new(k, &[g])?], k, 1)?;
        println!("k={k} D=<({g})>: {:?}", classify_code(&d).case());
    }

    let c = Codeword::new(6, &[3, 3])?;
    let bin = binary_reduce(&[Codeword::zero(6, 2), c])?;
    let (radical, m) = radical_data(&bin)?;
    println!("binary image {:?}, |C ∩ C^perp| = {radical}, m = {m}", bin.words());

    let n = all_codes(4, 2, 10_000)?.len();
    println!("(Z_4)^2 has {n} subgroups");
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
