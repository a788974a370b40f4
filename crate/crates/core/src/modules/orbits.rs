use super::characters::{Character, CharacterGroup};
use super::labels::{base, fuse_unchecked, tensor_weight, IrrLabel};
use crate::branching::locate_pf;
use crate::codes::{binary_reduce, radical_data, Code, CodeCase, Codeword};
use crate::error::{Error, Result};
use crate::lattice::{dual_membership, ProductCoset};
use crate::parafermion::canonical_unchecked;
use crate::rational::Q;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

pub const DEFAULT_ORBIT_CAP: u64 = 10_000_000;

fn require_case_a(d: &Code) -> Result<()> {
    if d.case() != CodeCase::CaseA {
        return Err(Error::Unsupported(format!("this analysis needs a Case A code, got {}", d.case())));
    }
    Ok(())
}

fn check_shape(x: &IrrLabel, d: &Code) -> Result<()> {
    if x.k() != d.k() || x.ell() != d.ell() {
        return Err(Error::Mismatch(format!(
            "label for k = {}, ℓ = {} with a code for k = {}, ℓ = {}",
            x.k(),
            x.ell(),
            d.k(),
            d.ell()
        )));
    }
    Ok(())
}

/// `{ξ ∈ D : ξ ∈ {0, k/2}^ℓ and μ_r = k/2 wherever ξ_r = k/2}`.
pub fn stabilizer(x: &IrrLabel, d: &Code) -> Result<Code> {
    check_shape(x, d)?;
    Ok(stabilizer_unchecked(x, d))
}

fn stabilizer_unchecked(x: &IrrLabel, d: &Code) -> Code {
    let k = d.k();
    let words = if k % 2 == 1 {
        vec![Codeword::zero(k, d.ell())]
    } else {
        let half = k / 2;
        let mu = x.mu();
        d.words()
            .iter()
            .filter(|w| w.entries().iter().zip(&mu).all(|(&e, &m)| e == 0 || (e == half && m == half)))
            .cloned()
            .collect()
    };
    Code::from_subgroup(k, d.ell(), words)
}

/// `{ξ ∈ D : M_ξ ⊠ X ≅ X}` by direct fusion.
pub fn stabilizer_brute(x: &IrrLabel, d: &Code) -> Result<Code> {
    check_shape(x, d)?;
    let words = d.words().iter().filter(|w| fuse_unchecked(w, x) == *x).cloned().collect();
    Ok(Code::from_subgroup(d.k(), d.ell(), words))
}

/// A `D`-orbit on the irreducible `M_0`-modules.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    /// Sorted; the first member represents the orbit.
    pub members: Vec<IrrLabel>,
    pub stabilizer: Code,
    pub character: Character,
    /// Least top weight among members. This bounds the lowest weight of the
    /// induced twisted modules from below; it is not their grading.
    pub min_weight: Q,
}

impl OrbitRecord {
    pub fn representative(&self) -> &IrrLabel {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.stabilizer.size() == 1
    }
}

/// Orbits of `D` with the default label cap.
pub fn orbits(d: &Code) -> Result<Vec<OrbitRecord>> {
    orbits_with_cap(d, DEFAULT_ORBIT_CAP)
}

/// Orbits ordered by their least member.
pub fn orbits_with_cap(d: &Code, cap: u64) -> Result<Vec<OrbitRecord>> {
    require_case_a(d)?;
    let chars = CharacterGroup::new(d)?;
    orbits_inner(d, &chars, cap)
}

fn orbits_inner(d: &Code, chars: &CharacterGroup, cap: u64) -> Result<Vec<OrbitRecord>> {
    let (k, ell) = (d.k(), d.ell());
    let total = base(k)
        .checked_pow(ell as u32)
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::cap(format!("the {ell}-fold label space for k = {k}"), cap))?;
    // fuse_tab[p][x] = index of M^p ⊠ x among the canonical parafermion labels
    let pf = crate::parafermion::all_labels(k)?;
    let fuse_tab: Vec<Vec<u64>> = (0..k)
        .map(|p| pf.iter().map(|x| canonical_unchecked(k, x.i(), x.j() as i64 + p as i64).index() as u64).collect())
        .collect();
    let b = base(k);
    let shifts: Vec<&[u32]> = d.words().iter().map(|w| w.entries()).collect();

    let records = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let mut digits = vec![0u64; ell];
            let mut rest = idx;
            for r in (0..ell).rev() {
                digits[r] = rest % b;
                rest /= b;
            }
            let mut members: Vec<u64> = shifts
                .iter()
                .map(|xi| {
                    digits.iter().zip(xi.iter()).fold(0, |acc, (&x, &p)| acc * b + fuse_tab[p as usize][x as usize])
                })
                .collect();
            members.sort_unstable();
            members.dedup();
            if members[0] != idx {
                return None;
            }
            let members: Vec<IrrLabel> = members.into_iter().map(|n| IrrLabel::from_index(k, ell, n)).collect();
            let rep = &members[0];
            let stabilizer = stabilizer_unchecked(rep, d);
            let character = chars.of_vector_unchecked(&rep.mu_minus_two_nu());
            let min_weight = members.iter().map(tensor_weight).min().expect("orbit is nonempty");
            Some(OrbitRecord { members, stabilizer, character, min_weight })
        })
        .collect();
    Ok(records)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Regime {
    FreeOrbit,
    #[serde(rename = "Fixed_k0mod4")]
    FixedK0Mod4,
    #[serde(rename = "Fixed_k2mod4")]
    FixedK2Mod4,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::FreeOrbit => "free",
            Regime::FixedK0Mod4 => "fixed, k=0 mod 4",
            Regime::FixedK2Mod4 => "fixed, k=2 mod 4",
        })
    }
}

/// Decomposition of `M_D ⊠ X` for `X` in one orbit.
#[derive(Clone, Debug)]
pub struct InducedReport {
    pub orbit: OrbitRecord,
    pub regime: Regime,
    /// Number of inequivalent irreducible `χ_X`-twisted summands.
    pub num_irreducibles: u64,
    /// Multiplicity of each summand.
    pub multiplicity: u64,
    /// `M_0`-constituents of each irreducible summand.
    pub constituents: Vec<(IrrLabel, u64)>,
}

pub fn induced_decomposition(orbit: &OrbitRecord, d: &Code) -> Result<InducedReport> {
    require_case_a(d)?;
    let k = d.k();
    let (regime, num, m) = if orbit.is_free() {
        (Regime::FreeOrbit, 1, 1)
    } else if k % 2 == 1 {
        return Err(Error::Internal(format!(
            "orbit of {} has a nontrivial stabilizer but k = {k} is odd",
            orbit.representative()
        )));
    } else if k % 4 == 0 {
        (Regime::FixedK0Mod4, orbit.stabilizer.size() as u64, 1)
    } else {
        let (radical, m) = radical_data(&binary_reduce(orbit.stabilizer.words())?)?;
        (Regime::FixedK2Mod4, radical, m)
    };
    Ok(InducedReport {
        orbit: orbit.clone(),
        regime,
        num_irreducibles: num,
        multiplicity: m,
        constituents: orbit.members.iter().map(|x| (x.clone(), m)).collect(),
    })
}

/// Orbits, characters and induced decompositions for one Case A code.
#[derive(Clone, Debug)]
pub struct ModuleTable {
    pub code: Code,
    pub characters: CharacterGroup,
    pub induced: Vec<InducedReport>,
}

impl ModuleTable {
    pub fn new(d: &Code) -> Result<Self> {
        Self::with_cap(d, DEFAULT_ORBIT_CAP)
    }

    pub fn with_cap(d: &Code, cap: u64) -> Result<Self> {
        require_case_a(d)?;
        let characters = CharacterGroup::new(d)?;
        let induced = orbits_inner(d, &characters, cap)?
            .iter()
            .map(|o| induced_decomposition(o, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleTable { code: d.clone(), characters, induced })
    }

    pub fn orbits(&self) -> impl Iterator<Item = &OrbitRecord> {
        self.induced.iter().map(|r| &r.orbit)
    }

    /// Position of the orbit containing `x`.
    pub fn orbit_of(&self, x: &IrrLabel) -> Option<usize> {
        let least = self.code.words().iter().map(|w| fuse_unchecked(w, x)).min()?;
        self.induced.binary_search_by(|r| r.orbit.representative().cmp(&least)).ok()
    }

    /// Number of inequivalent irreducible `χ`-twisted `M_D`-modules.
    pub fn count(&self, chi: &Character) -> u64 {
        self.induced.iter().filter(|r| r.orbit.character == *chi).map(|r| r.num_irreducibles).sum()
    }

    /// `(χ, count)` for every character, trivial first.
    pub fn counts(&self) -> Vec<(Character, u64)> {
        self.characters.characters().into_iter().map(|c| { let n = self.count(&c); (c, n) }).collect()
    }
}

/// Number of irreducible `χ`-twisted `M_D`-modules, `χ` given by any vector of its class.
pub fn count_twisted(d: &Code, chi: &Codeword) -> Result<u64> {
    let table = ModuleTable::new(d)?;
    let chi = table.characters.of_vector(chi)?;
    Ok(table.count(&chi))
}

/// A coset `N(η, δ)` whose lattice VOA contains a given `M_0`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub coset: ProductCoset,
    /// Whether `N(η, δ) ⊂ Γ_D°`.
    pub dual_member: bool,
}

/// Chooses `δ = 0` for odd `k` and `d_r ≡ μ_r` for even `k`, then `η_r` by [`locate_pf`].
pub fn realize(x: &IrrLabel, d: &Code) -> Result<Realization> {
    check_shape(x, d)?;
    let k = d.k();
    let delta: Vec<u8> = x.factors().iter().map(|f| if k % 2 == 1 { 0 } else { (f.i() % 2) as u8 }).collect();
    let eta = x
        .factors()
        .iter()
        .zip(&delta)
        .map(|(f, &dr)| locate_pf(f, dr).map(|e| e as i64))
        .collect::<Result<Vec<_>>>()?;
    let eta = Codeword::new(k, &eta)?;
    let dual_member = dual_membership(&eta, &delta, d)?;
    Ok(Realization { coset: ProductCoset::tail(eta, delta)?, dual_member })
}
