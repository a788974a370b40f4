//! Z_k-codes: additive subgroups of (Z_k)^ℓ with the standard inner product.
//!
//! A [`Code`] stores its full codeword list (lexicographically sorted) together
//! with the Case A / Case B classification that decides whether the code
//! lattice is even, odd, or not a lattice at all.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

/// Default bound on the number of words any enumeration may produce.
pub const DEFAULT_CODE_CAP: u64 = 1_000_000;

/// A word of (Z_k)^ℓ with entries kept in `0..k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Codeword {
    k: u32,
    entries: Vec<u32>,
}

impl Codeword {
    /// Builds a codeword, reducing every entry mod `k`.
    pub fn new(k: u32, entries: &[i64]) -> Result<Self> {
        check_params(k, entries.len())?;
        let entries = entries.iter().map(|&e| crate::rational::modulo(e, k)).collect();
        Ok(Codeword { k, entries })
    }

    pub(crate) fn from_reduced(k: u32, entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&e| e < k));
        Codeword { k, entries }
    }

    pub fn zero(k: u32, ell: usize) -> Self {
        Codeword { k, entries: vec![0; ell] }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Componentwise sum. Both words must share `k` and length.
    pub fn plus(&self, other: &Codeword) -> Codeword {
        assert!(self.same_shape(other), "codeword shape mismatch");
        let k = self.k;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a + b) % k)
            .collect();
        Codeword { k, entries }
    }

    pub fn neg(&self) -> Codeword {
        let k = self.k;
        Codeword { k, entries: self.entries.iter().map(|&a| (k - a) % k).collect() }
    }

    pub fn scale(&self, c: i64) -> Codeword {
        let k = self.k;
        let c = crate::rational::modulo(c, k) as u64;
        let entries = self.entries.iter().map(|&a| ((a as u64 * c) % k as u64) as u32).collect();
        Codeword { k, entries }
    }

    /// Applies a coordinate permutation: position `r` of the result is entry `perm[r]`.
    pub fn permuted(&self, perm: &[usize]) -> Codeword {
        Codeword { k: self.k, entries: perm.iter().map(|&p| self.entries[p]).collect() }
    }

    fn same_shape(&self, other: &Codeword) -> bool {
        self.k == other.k && self.entries.len() == other.entries.len()
    }

    /// `(ξ|ξ)` computed over the integers, entries read in `0..k`.
    pub(crate) fn integer_norm(&self) -> u64 {
        self.entries.iter().map(|&e| (e as u64) * (e as u64)).sum()
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (r, e) in self.entries.iter().enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn check_params(k: u32, ell: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    if ell < 1 {
        return Err(Error::invalid("code length must be at least 1"));
    }
    Ok(())
}

/// The standard inner product `(ξ|η) = Σ ξ_r η_r mod k`.
pub fn inner(x: &Codeword, y: &Codeword) -> Result<u32> {
    if !x.same_shape(y) {
        return Err(Error::Mismatch(format!(
            "inner product of words over Z_{}^{} and Z_{}^{}",
            x.k,
            x.len(),
            y.k,
            y.len()
        )));
    }
    Ok(inner_unchecked(x, y))
}

pub(crate) fn inner_unchecked(x: &Codeword, y: &Codeword) -> u32 {
    let k = x.k as u64;
    let s: u64 = x.entries.iter().zip(&y.entries).map(|(&a, &b)| (a as u64 * b as u64) % k).sum();
    (s % k) as u32
}

/// Which kind of lattice a code produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeCase {
    CaseA,
    CaseB,
    Unsupported,
}

impl fmt::Display for CodeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeCase::CaseA => "CaseA",
            CodeCase::CaseB => "CaseB",
            CodeCase::Unsupported => "Unsupported",
        })
    }
}

/// Classification of a code. Case B carries the split `D = D⁰ ∪ D¹` by `(ξ|ξ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    CaseA,
    CaseB { even: Vec<Codeword>, odd: Vec<Codeword> },
    Unsupported,
}

impl Classification {
    pub fn case(&self) -> CodeCase {
        match self {
            Classification::CaseA => CodeCase::CaseA,
            Classification::CaseB { .. } => CodeCase::CaseB,
            Classification::Unsupported => CodeCase::Unsupported,
        }
    }
}

/// An additive subgroup of (Z_k)^ℓ, stored explicitly.
#[derive(Clone, Debug)]
pub struct Code {
    k: u32,
    ell: usize,
    generators: Vec<Codeword>,
    words: Vec<Codeword>,
    classification: Classification,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.ell == other.ell && self.words == other.words
    }
}

impl Eq for Code {}

impl Code {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn generators(&self) -> &[Codeword] {
        &self.generators
    }

    /// All codewords in lexicographic order.
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn case(&self) -> CodeCase {
        self.classification.case()
    }

    /// The even part `D⁰` of a Case B code.
    pub fn even_part(&self) -> Result<Code> {
        match &self.classification {
            Classification::CaseB { even, .. } => Ok(Code::from_subgroup(self.k, self.ell, even.clone())),
            _ => Err(Error::Unsupported("even part requested for a code that is not Case B".into())),
        }
    }

    /// The odd coset `D¹` of a Case B code.
    pub fn odd_part(&self) -> Result<&[Codeword]> {
        match &self.classification {
            Classification::CaseB { odd, .. } => Ok(odd),
            _ => Err(Error::Unsupported("odd part requested for a code that is not Case B".into())),
        }
    }

    /// Builds a code from a known subgroup; the generating set is chosen greedily.
    pub(crate) fn from_subgroup(k: u32, ell: usize, mut words: Vec<Codeword>) -> Code {
        words.sort();
        words.dedup();
        let generators = greedy_generators(&words);
        let classification = classify_words(k, &generators, &words);
        Code { k, ell, generators, words, classification }
    }

    /// Applies a coordinate permutation to every word.
    pub fn permuted(&self, perm: &[usize]) -> Code {
        let words = self.words.iter().map(|w| w.permuted(perm)).collect();
        Code::from_subgroup(self.k, self.ell, words)
    }
}

/// The additive span of `generators` in (Z_k)^ℓ, with the default cap.
pub fn span(generators: &[Codeword], k: u32, ell: usize) -> Result<Code> {
    span_with_cap(generators, k, ell, DEFAULT_CODE_CAP)
}

/// Breadth-first additive closure of `generators`, failing once more than `cap` words appear.
pub fn span_with_cap(generators: &[Codeword], k: u32, ell: usize, cap: u64) -> Result<Code> {
    check_params(k, ell)?;
    for g in generators {
        if g.k != k || g.len() != ell {
            return Err(Error::Mismatch(format!("generator {g} is not a word of Z_{k}^{ell}")));
        }
    }
    let zero = Codeword::zero(k, ell);
    let mut seen: HashSet<Codeword> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(zero.clone());
    queue.push_back(zero);
    while let Some(w) = queue.pop_front() {
        for g in generators {
            let next = w.plus(g);
            if seen.insert(next.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::cap("code span", cap));
                }
                queue.push_back(next);
            }
        }
    }
    let mut words: Vec<Codeword> = seen.into_iter().collect();
    words.sort();
    let classification = classify_words(k, generators, &words);
    Ok(Code { k, ell, generators: generators.to_vec(), words, classification })
}

fn greedy_generators(words: &[Codeword]) -> Vec<Codeword> {
    let Some(first) = words.first() else {
        return Vec::new();
    };
    let zero = Codeword::zero(first.k, first.len());
    let mut spanned: HashSet<Codeword> = HashSet::from([zero]);
    let mut gens = Vec::new();
    for w in words {
        if spanned.contains(w) {
            continue;
        }
        gens.push(w.clone());
        // extend the subgroup by the cyclic group of w
        let current: Vec<Codeword> = spanned.iter().cloned().collect();
        let mut multiple = w.clone();
        while !multiple.is_zero() {
            for s in &current {
                spanned.insert(s.plus(&multiple));
            }
            multiple = multiple.plus(w);
        }
    }
    gens
}

fn classify_words(k: u32, generators: &[Codeword], words: &[Codeword]) -> Classification {
    let norms: Vec<u32> = words.iter().map(|w| inner_unchecked(w, w)).collect();
    if norms.iter().all(|&n| n == 0) {
        return Classification::CaseA;
    }
    if k % 2 != 0 {
        return Classification::Unsupported;
    }
    let half = k / 2;
    // (ξ|η) ∈ {0, k/2} for all pairs iff 2(g|h) = 0 on generators, by bilinearity
    let pairs_ok = generators
        .iter()
        .all(|g| generators.iter().all(|h| (2 * inner_unchecked(g, h)) % k == 0));
    if !pairs_ok || norms.iter().any(|&n| n != 0 && n != half) {
        return Classification::Unsupported;
    }
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (w, n) in words.iter().zip(norms) {
        if n == 0 {
            even.push(w.clone());
        } else {
            odd.push(w.clone());
        }
    }
    Classification::CaseB { even, odd }
}

/// Re-derives the classification of `d` from its codewords.
pub fn classify_code(d: &Code) -> Classification {
    classify_words(d.k, &d.generators, &d.words)
}

fn ambient_size(k: u32, ell: usize, cap: u64) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..ell {
        total = total.saturating_mul(k as u64);
        if total > cap {
            return Err(Error::cap(format!("ambient space Z_{k}^{ell}"), cap));
        }
    }
    Ok(total)
}

/// Iterates over all of (Z_k)^ℓ in lexicographic order.
pub(crate) fn ambient_words(k: u32, ell: usize) -> impl Iterator<Item = Codeword> {
    let total = (k as u64).pow(ell as u32);
    (0..total).map(move |mut idx| {
        let mut entries = vec![0u32; ell];
        for r in (0..ell).rev() {
            entries[r] = (idx % k as u64) as u32;
            idx /= k as u64;
        }
        Codeword::from_reduced(k, entries)
    })
}

/// The dual code `D^⊥`, using the default cap.
pub fn dual_code(d: &Code) -> Result<Code> {
    dual_code_with_cap(d, DEFAULT_CODE_CAP)
}

pub fn dual_code_with_cap(d: &Code, cap: u64) -> Result<Code> {
    ambient_size(d.k, d.ell, cap)?;
    let words: Vec<Codeword> = ambient_words(d.k, d.ell)
        .filter(|eta| d.generators.iter().all(|g| inner_unchecked(g, eta) == 0))
        .collect();
    Ok(Code::from_subgroup(d.k, d.ell, words))
}

/// Every additive subgroup of (Z_k)^ℓ, sorted by size and then by codeword list.
pub fn all_codes(k: u32, ell: usize, cap: u64) -> Result<Vec<Code>> {
    check_params(k, ell)?;
    ambient_size(k, ell, cap)?;
    let ambient: Vec<Codeword> = ambient_words(k, ell).collect();
    let zero = Code::from_subgroup(k, ell, vec![Codeword::zero(k, ell)]);
    let mut seen: BTreeSet<Vec<Codeword>> = BTreeSet::new();
    seen.insert(zero.words.clone());
    let mut frontier = vec![zero];
    let mut out = Vec::new();
    while let Some(code) = frontier.pop() {
        for w in &ambient {
            if code.contains(w) {
                continue;
            }
            let mut gens = code.generators.clone();
            gens.push(w.clone());
            let bigger = span_with_cap(&gens, k, ell, cap)?;
            if seen.insert(bigger.words.clone()) {
                frontier.push(bigger);
            }
        }
        out.push(code);
    }
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.words.cmp(&b.words)));
    Ok(out)
}

/// A binary linear code of length `n ≤ 64`; words are bitmasks with bit `r` for coordinate `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    words: Vec<u64>,
}

impl BinaryCode {
    pub fn new(n: usize, mut words: Vec<u64>) -> Result<Self> {
        if n > 64 {
            return Err(Error::invalid("binary codes are limited to length 64"));
        }
        words.sort_unstable();
        words.dedup();
        if words.first() != Some(&0) {
            return Err(Error::invalid("binary code must contain the zero word"));
        }
        let set: HashSet<u64> = words.iter().copied().collect();
        if words.iter().any(|a| words.iter().any(|b| !set.contains(&(a ^ b)))) {
            return Err(Error::invalid("binary code is not closed under addition"));
        }
        Ok(BinaryCode { n, words })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Renders a word as a 0/1 string, coordinate 0 first.
    pub fn word_string(&self, w: u64) -> String {
        (0..self.n).map(|r| if w >> r & 1 == 1 { '1' } else { '0' }).collect()
    }
}

/// Image of a subgroup of `{0, k/2}^ℓ` under `0 ↦ 0`, `k/2 ↦ 1`.
pub fn binary_reduce(words: &[Codeword]) -> Result<BinaryCode> {
    let first = words.first().ok_or_else(|| Error::invalid("empty word list"))?;
    let k = first.k;
    if k % 2 != 0 {
        return Err(Error::invalid(format!("binary reduction needs even k, got {k}")));
    }
    let half = k / 2;
    let n = first.len();
    let mut image = Vec::with_capacity(words.len());
    for w in words {
        if w.k != k || w.len() != n {
            return Err(Error::Mismatch("words of different shapes".into()));
        }
        let mut bits = 0u64;
        for (r, &e) in w.entries.iter().enumerate() {
            match e {
                0 => {}
                e if e == half => bits |= 1 << r,
                _ => return Err(Error::invalid(format!("word {w} has an entry outside {{0, {half}}}"))),
            }
        }
        image.push(bits);
    }
    BinaryCode::new(n, image)
}

/// `(|C ∩ C^⊥|, [C : C ∩ C^⊥]^{1/2})` for the standard binary inner product.
pub fn radical_data(c: &BinaryCode) -> Result<(u64, u64)> {
    let radical = c
        .words
        .iter()
        .filter(|&&a| c.words.iter().all(|&b| (a & b).count_ones() % 2 == 0))
        .count() as u64;
    let index = c.words.len() as u64 / radical;
    let m = crate::rational::exact_sqrt(index).ok_or(Error::NotPerfectSquare(index))?;
    Ok((radical, m))
}
