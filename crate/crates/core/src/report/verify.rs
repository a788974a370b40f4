//! Self-checks run by the `verify` analysis. Each returns the number of cases
//! examined and the first counterexample, if any.

use crate::branching::branch;
use crate::codes::{Code, CodeCase};
use crate::error::Result;
use crate::lattice::{
    all_canonical, build_code_lattice_verified, coset_add, coset_group_invariants, coset_neg, coset_of_vector,
    identity, min_norm, min_norm_oracle, representative, ORACLE_MAX_K,
};
use crate::modules::{b_ext, fuse, realize, sc_ext_weight, tensor_weight, CharacterGroup, ModuleTable};
use crate::rational::{fmt_q, q, ModOne};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub property: String,
    pub scope: String,
    pub checked: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

struct Tally {
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self, property: &str, scope: String) -> Check {
        Check {
            property: property.into(),
            scope,
            checked: self.checked,
            passed: self.failure.is_none(),
            counterexample: self.failure,
        }
    }
}

/// Closed-form minimal norms against the enumeration oracle.
pub fn check_min_norms(max_k: u32) -> Result<Check> {
    let max_k = max_k.min(ORACLE_MAX_K);
    let mut t = Tally::new();
    for k in 2..=max_k {
        for x in all_canonical(k)? {
            let oracle = min_norm_oracle(&x)?;
            let closed = min_norm(&x);
            t.record(oracle == closed, || {
                format!(
                    "k={k} {x}: closed form {} x{}, oracle {} x{}",
                    fmt_q(&closed.value),
                    closed.count,
                    fmt_q(&oracle.value),
                    oracle.count
                )
            });
        }
    }
    Ok(t.finish("min_norm_oracle", format!("k=2..{max_k}")))
}

/// Invariant factors of `N°/N`, inverses, and agreement of addition with vectors.
pub fn check_coset_group(max_k: u32) -> Result<Check> {
    let mut t = Tally::new();
    for k in 2..=max_k {
        let mut expected = vec![2u64; k as usize - 2];
        expected.push(2 * k as u64);
        let got = coset_group_invariants(k)?;
        t.record(got == expected, || format!("k={k}: invariant factors {got:?}"));
        let labels = all_canonical(k)?;
        let zero = identity(k)?;
        for x in &labels {
            let neg = coset_neg(x);
            let via_vector = coset_of_vector(&-&representative(x))?;
            t.record(neg == via_vector && coset_add(x, &neg)? == zero, || {
                format!("k={k} {x}: negation {neg}, vector negation {via_vector}")
            });
        }
        if k <= 5 {
            for x in &labels {
                for y in &labels {
                    let sum = coset_add(x, y)?;
                    let via_vector = coset_of_vector(&(&representative(x) + &representative(y)))?;
                    t.record(sum == via_vector, || format!("k={k} {x} + {y}: {sum} vs {via_vector}"));
                }
            }
        }
    }
    Ok(t.finish("coset_group", format!("k=2..{max_k}")))
}

/// Least branching weight equals half the minimal norm, all weights congruent mod 1.
pub fn check_branch_weights(max_k: u32) -> Result<Check> {
    let max_k = max_k.min(crate::branching::BRANCH_MAX_K).min(7);
    let mut t = Tally::new();
    for k in 2..=max_k {
        for x in all_canonical(k)? {
            let comps = branch(k, x.j() as i64, x.mask())?;
            let lo = comps.iter().map(|c| c.weight.clone()).min().expect("nonempty");
            let half = min_norm(&x).value / q(2, 1);
            let congruent = comps.iter().all(|c| (&c.weight - &lo).is_integer());
            t.record(lo == half && congruent, || {
                format!("k={k} {x}: least weight {}, half norm {}", fmt_q(&lo), fmt_q(&half))
            });
        }
    }
    Ok(t.finish("branch_weights", format!("k=2..{max_k}")))
}

/// Checks that need the job's code: the b-map identity, realization, and the
/// Gram/Smith discriminant. Case B codes are checked through `D⁰`.
pub fn check_code(d: &Code, orbit_cap: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut t = Tally::new();
    let lattice = build_code_lattice_verified(d);
    t.record(lattice.is_ok(), || format!("{}", lattice.as_ref().err().expect("failed")));
    out.push(t.finish("discriminant_smith", format!("|D|={}", d.size())));

    let base = match d.case() {
        CodeCase::CaseA => d.clone(),
        CodeCase::CaseB => d.even_part()?,
        CodeCase::Unsupported => return Ok(out),
    };
    let table = ModuleTable::with_cap(&base, orbit_cap)?;
    let chars = CharacterGroup::new(&base)?;

    let mut t = Tally::new();
    for orbit in table.orbits() {
        for x in &orbit.members {
            for xi in d.words() {
                let b = b_ext(xi, x)?;
                let def = ModOne::new(tensor_weight(&fuse(xi, x)?) - sc_ext_weight(xi) - tensor_weight(x));
                t.record(b == def, || format!("ξ={xi} X={x}: closed form {b}, weights {def}"));
            }
        }
    }
    out.push(t.finish("b_map", format!("all labels, ξ ∈ D (|D|={})", d.size())));

    let mut t = Tally::new();
    for orbit in table.orbits() {
        for x in &orbit.members {
            let r = realize(x, &base)?;
            let trivial = chars.of_label(x)?.is_trivial();
            t.record(r.dual_member == trivial, || {
                format!("X={x}: dual membership {}, trivial character {trivial}", r.dual_member)
            });
        }
    }
    out.push(t.finish("realization", format!("all labels, |D|={}", base.size())));
    Ok(out)
}
