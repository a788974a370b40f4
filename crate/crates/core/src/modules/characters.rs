use super::labels::IrrLabel;
use crate::codes::{ambient_words, inner_unchecked, Code, CodeCase, Codeword, DEFAULT_CODE_CAP};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A character of `D`, stored as the lexicographically least vector of its
/// class in `(Z_k)^ℓ / D^⊥`; `v` gives `ξ ↦ exp(2πi (ξ|v)/k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    rep: Codeword,
}

impl Character {
    pub fn representative(&self) -> &Codeword {
        &self.rep
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.is_zero()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + D^⊥", self.rep)
    }
}

/// The character group `D^* ≅ (Z_k)^ℓ / D^⊥`.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    k: u32,
    ell: usize,
    gens: Vec<Codeword>,
    classes: BTreeMap<Vec<u32>, Codeword>,
}

impl CharacterGroup {
    pub fn new(d: &Code) -> Result<Self> {
        let (k, ell) = (d.k(), d.ell());
        let ambient = (k as u64).checked_pow(ell as u32).unwrap_or(u64::MAX);
        if ambient > DEFAULT_CODE_CAP {
            return Err(Error::cap(format!("the ambient space (Z_{k})^{ell}"), DEFAULT_CODE_CAP));
        }
        let gens = d.generators().to_vec();
        let mut classes = BTreeMap::new();
        for v in ambient_words(k, ell) {
            let key: Vec<u32> = gens.iter().map(|g| inner_unchecked(g, &v)).collect();
            classes.entry(key).or_insert(v);
            if classes.len() == d.size() {
                break;
            }
        }
        if classes.len() != d.size() {
            return Err(Error::Internal(format!(
                "found {} characters for a code of size {}",
                classes.len(),
                d.size()
            )));
        }
        Ok(CharacterGroup { k, ell, gens, classes })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// All characters, trivial first.
    pub fn characters(&self) -> Vec<Character> {
        let mut out: Vec<Character> = self.classes.values().map(|v| Character { rep: v.clone() }).collect();
        out.sort();
        out
    }

    pub fn of_vector(&self, v: &Codeword) -> Result<Character> {
        if v.k() != self.k || v.len() != self.ell {
            return Err(Error::Mismatch(format!(
                "vector in (Z_{})^{} for a code in (Z_{})^{}",
                v.k(),
                v.len(),
                self.k,
                self.ell
            )));
        }
        Ok(self.of_vector_unchecked(v))
    }

    pub(crate) fn of_vector_unchecked(&self, v: &Codeword) -> Character {
        let key: Vec<u32> = self.gens.iter().map(|g| inner_unchecked(g, v)).collect();
        Character { rep: self.classes[&key].clone() }
    }

    /// `χ_X`, the class of `μ − 2ν`.
    pub fn of_label(&self, x: &IrrLabel) -> Result<Character> {
        self.of_vector(&x.mu_minus_two_nu())
    }
}

/// The character `(μ − 2ν) + D^⊥` by which `D` acts on `M_D ⊠ X`.
pub fn character_of(x: &IrrLabel, d: &Code) -> Result<Character> {
    if d.case() != CodeCase::CaseA {
        return Err(Error::Unsupported(format!("characters of labels need a Case A code, got {}", d.case())));
    }
    CharacterGroup::new(d)?.of_label(x)
}
