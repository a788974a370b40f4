//! Decompose V_{N(j,a)} into Virasoro and parafermion pieces, and find where a
//! parafermion module sits.

use pfkit::branching::{branch, branch_tail, locate_pf, vir_c};
use pfkit::parafermion::pf_canonicalize;

pub fn run_example() -> pfkit::Result<()> {
    let k = 3;
    println!("c_1 = {}, c_2 = {}", vir_c(1)?, vir_c(2)?);
    for c in branch(k, 0, 0b000)? {
        println!("{:?}  {:?}  {}  weight {}", c.tuple, c.virasoro, c.pf, c.weight);
    }
    let x = pf_canonicalize(k, 2, 0)?;
    let eta = locate_pf(&x, 0)?;
    println!("{x} lives in V_N({eta},000): {:?}", branch_tail(k, eta as i64, 0)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
