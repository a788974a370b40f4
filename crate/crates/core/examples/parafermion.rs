//! Parafermion labels M^{i,j}: top weights, simple currents, and the b-map.

use pfkit::parafermion::{all_labels, central_charge, pf_b, pf_weight, sc_fuse, theta_act, SimpleCurrent};

pub fn run_example() -> pfkit::Result<()> {
    let k = 4;
    println!("k={k}: c = {}", central_charge(k)?);
    let m1 = SimpleCurrent::new(k, 1)?;
    for x in all_labels(k)? {
        println!(
            "{x}  h = {:<5}  M^1 x = {}  b = {}  theta = {}",
            pf_weight(&x).to_string(),
            sc_fuse(&m1, &x)?,
            pf_b(&m1, &x)?,
            theta_act(&x)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
