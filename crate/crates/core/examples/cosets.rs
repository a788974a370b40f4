//! The cosets N(j, a) of N = √2·A_{k−1} in its dual: addition, negation, and
//! minimal norms checked against a brute-force search.

use pfkit::lattice::{all_canonical, canonicalize, coset_add, coset_group_invariants, coset_neg, min_norm, min_norm_oracle};

pub fn run_example() -> pfkit::Result<()> {
    let k = 4;
    let x = canonicalize(k, 1, &[1, 1, 0, 0])?;
    let y = canonicalize(k, 0, &[1, 0, 0, 0])?;
    println!("{x} + {y} = {}", coset_add(&x, &y)?);
    println!("-{x} = {}", coset_neg(&x));
    println!("N°/N ≅ {:?}", coset_group_invariants(k)?);

    for z in all_canonical(k)?.iter().take(6) {
        let m = min_norm(z);
        assert_eq!(m, min_norm_oracle(z)?);
        println!("{z}: min norm {} attained {} times", m.value, m.count);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
