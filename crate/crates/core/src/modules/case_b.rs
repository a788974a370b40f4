use super::labels::{fuse_unchecked, IrrLabel};
use super::orbits::{ModuleTable, DEFAULT_ORBIT_CAP};
use crate::codes::{Code, CodeCase, Codeword};
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    /// `P ⊕ Q` is one irreducible `M_D`-module.
    Fused,
    /// `P ≅ Q` and `P ⊕ Q` splits into two irreducibles.
    Split,
    /// Labels alone do not decide between the two.
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One untwisted `D⁰`-orbit `P` paired with its image `Q` under `D¹`.
#[derive(Clone, Debug)]
pub struct CaseBRecord {
    /// Indices into the `D⁰` table; `p_orbit ≤ q_orbit`.
    pub p_orbit: usize,
    pub q_orbit: usize,
    pub p_rep: IrrLabel,
    pub q_rep: IrrLabel,
    pub verdict: Verdict,
    /// Irreducible `M_{D⁰}`-modules carried by the `P` orbit.
    pub even_irreducibles: u64,
    /// Irreducible `M_D`-modules from this pair, when determined.
    pub md_modules: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct CaseBReport {
    pub even: ModuleTable,
    /// The element of `D¹` used to form `Q`.
    pub shift: Codeword,
    pub records: Vec<CaseBRecord>,
}

pub fn case_b_modules(d: &Code) -> Result<CaseBReport> {
    case_b_modules_with_cap(d, DEFAULT_ORBIT_CAP)
}

pub fn case_b_modules_with_cap(d: &Code, cap: u64) -> Result<CaseBReport> {
    if d.case() != CodeCase::CaseB {
        return Err(Error::Unsupported(format!("Case B analysis requested for a {} code", d.case())));
    }
    let even = ModuleTable::with_cap(&d.even_part()?, cap)?;
    let shift = d.odd_part()?[0].clone();
    let mut records = Vec::new();
    for (p, r) in even.induced.iter().enumerate() {
        if !r.orbit.character.is_trivial() {
            continue;
        }
        let image = fuse_unchecked(&shift, r.orbit.representative());
        let q = even
            .orbit_of(&image)
            .ok_or_else(|| Error::Internal(format!("no orbit contains {image}")))?;
        if q < p {
            continue;
        }
        let (verdict, md_modules) = if q != p {
            (Verdict::Fused, Some(r.num_irreducibles))
        } else if r.orbit.is_free() {
            (Verdict::Split, Some(2))
        } else {
            (Verdict::Indeterminate, None)
        };
        records.push(CaseBRecord {
            p_orbit: p,
            q_orbit: q,
            p_rep: r.orbit.representative().clone(),
            q_rep: even.induced[q].orbit.representative().clone(),
            verdict,
            even_irreducibles: r.num_irreducibles,
            md_modules,
        });
    }
    Ok(CaseBReport { even, shift, records })
}
