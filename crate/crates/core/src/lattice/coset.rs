//! Cosets `N(j, a)` of `N = √2·A_{k−1}` in its dual.
//!
//! Vectors are written over the orthogonal basis `α_1, …, α_k` with
//! `⟨α_p, α_q⟩ = 2δ_{pq}`; `N°` is the part with zero coordinate sum. The
//! binary tuple `a` is a bitmask with bit `p − 1` standing for `a_p`.

use crate::error::{Error, Result};
use crate::rational::{q, qi, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Largest `k` representable by a coset label.
pub const MAX_COSET_K: u32 = 64;

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    if k > MAX_COSET_K {
        return Err(Error::KTooLarge { k, limit: MAX_COSET_K, what: "coset labels" });
    }
    Ok(())
}

fn full_mask(k: u32) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// A coset of `N` in `N°` in the canonical form `0 ≤ j < wt(a)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetLabel {
    k: u32,
    j: u32,
    a: u64,
}

impl CosetLabel {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// The binary tuple as a bitmask (bit `p − 1` is `a_p`).
    pub fn mask(&self) -> u64 {
        self.a
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.k).map(|p| (self.a >> p & 1) as u8).collect()
    }

    pub fn weight(&self) -> u32 {
        self.a.count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.j == 0 && self.a == full_mask(self.k)
    }

    /// Parses `j:bits`, e.g. `1:110`, and canonicalizes.
    pub fn parse(k: u32, s: &str) -> Result<Self> {
        let (j, bits) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("coset selector {s:?} is not of the form j:bits")))?;
        let j: i64 = j.trim().parse().map_err(|_| Error::invalid(format!("bad coset index {j:?}")))?;
        let bits = bits.trim();
        if bits.len() != k as usize || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::invalid(format!("coset bit string {bits:?} must have {k} binary digits")));
        }
        let a = bits.chars().enumerate().fold(0u64, |m, (p, c)| if c == '1' { m | 1 << p } else { m });
        canonicalize_mask(k, j, a)
    }

    fn bit_string(&self) -> String {
        self.bits().iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N({},{})", self.j, self.bit_string())
    }
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.j, self.bit_string())
    }
}

impl Serialize for CosetLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CosetLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let k = s.split_once(':').map(|(_, b)| b.len()).unwrap_or(0) as u32;
        CosetLabel::parse(k, &s).map_err(serde::de::Error::custom)
    }
}

/// Canonical form of `N(j, a)` given as a 0/1 slice of length `k`.
pub fn canonicalize(k: u32, j: i64, a: &[u8]) -> Result<CosetLabel> {
    if a.len() != k as usize {
        return Err(Error::Mismatch(format!("binary tuple of length {} for k = {k}", a.len())));
    }
    if a.iter().any(|&b| b > 1) {
        return Err(Error::invalid("binary tuple entries must be 0 or 1"));
    }
    let mask = a.iter().enumerate().fold(0u64, |m, (p, &b)| m | (b as u64) << p);
    canonicalize_mask(k, j, mask)
}

/// Canonical form of `N(j, a)` with `a` as a bitmask.
///
/// `N(j, a) = N(j − wt(a), 1 − a)`, and exactly one of the two forms has `j < wt(a)`.
pub fn canonicalize_mask(k: u32, j: i64, a: u64) -> Result<CosetLabel> {
    check_k(k)?;
    if a & !full_mask(k) != 0 {
        return Err(Error::invalid(format!("bitmask {a:#b} has bits beyond k = {k}")));
    }
    Ok(canonical_unchecked(k, j, a))
}

pub(crate) fn canonical_unchecked(k: u32, j: i64, a: u64) -> CosetLabel {
    let j = crate::rational::modulo(j, k);
    let w = a.count_ones();
    if j < w {
        CosetLabel { k, j, a }
    } else {
        CosetLabel { k, j: j - w, a: !a & full_mask(k) }
    }
}

/// The trivial coset `N = N(0, (1,…,1))`.
pub fn identity(k: u32) -> Result<CosetLabel> {
    check_k(k)?;
    Ok(CosetLabel { k, j: 0, a: full_mask(k) })
}

/// All `2^{k−1}·k` canonical labels, sorted.
pub fn all_canonical(k: u32) -> Result<Vec<CosetLabel>> {
    check_k(k)?;
    if k > 24 {
        return Err(Error::KTooLarge { k, limit: 24, what: "listing all cosets" });
    }
    let mut out = Vec::with_capacity((k as usize) << (k - 1));
    for j in 0..k {
        for a in 0..=full_mask(k) {
            if j < a.count_ones() {
                out.push(CosetLabel { k, j, a });
            }
        }
    }
    Ok(out)
}

/// `N(j,a) + N(j',a') = N(j + j' − |a ∧ a'|, a ⊕ a')`.
pub fn coset_add(x: &CosetLabel, y: &CosetLabel) -> Result<CosetLabel> {
    if x.k != y.k {
        return Err(Error::Mismatch(format!("adding cosets for k = {} and k = {}", x.k, y.k)));
    }
    let overlap = (x.a & y.a).count_ones() as i64;
    Ok(canonical_unchecked(x.k, x.j as i64 + y.j as i64 - overlap, x.a ^ y.a))
}

/// The `−1` isometry sends `N(j, a)` to `N(wt(a) − j, a)`.
pub fn coset_neg(x: &CosetLabel) -> CosetLabel {
    canonical_unchecked(x.k, x.weight() as i64 - x.j as i64, x.a)
}

/// A vector of `Q ⊗ L` in α-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    coords: Vec<Q>,
}

impl LatticeVector {
    pub fn new(coords: Vec<Q>) -> Self {
        LatticeVector { coords }
    }

    pub fn zero(k: u32) -> Self {
        LatticeVector { coords: vec![Q::zero(); k as usize] }
    }

    /// `β_p = α_p − α_{p+1}` for `1 ≤ p ≤ k − 1`.
    pub fn beta(k: u32, p: usize) -> Self {
        assert!(p >= 1 && p < k as usize);
        let mut v = Self::zero(k);
        v.coords[p - 1] = Q::one();
        v.coords[p] = -Q::one();
        v
    }

    pub fn k(&self) -> u32 {
        self.coords.len() as u32
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// `⟨v, w⟩ = 2 Σ v_p w_p`.
    pub fn inner(&self, other: &Self) -> Q {
        assert_eq!(self.coords.len(), other.coords.len());
        let s: Q = self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum();
        s * qi(2)
    }

    pub fn norm(&self) -> Q {
        self.inner(self)
    }

    pub fn coordinate_sum(&self) -> Q {
        self.coords.iter().sum()
    }

    /// Membership in `N`: integer coordinates with zero sum.
    pub fn in_root_lattice(&self) -> bool {
        self.coords.iter().all(crate::rational::is_integer) && self.coordinate_sum().is_zero()
    }

    /// Membership in `N°`: zero sum and integral pairing with every `β_p`.
    pub fn in_dual(&self) -> bool {
        self.coordinate_sum().is_zero()
            && self
                .coords
                .windows(2)
                .all(|w| crate::rational::is_integer(&((&w[0] - &w[1]) * qi(2))))
    }

    pub fn scaled(&self, c: &Q) -> Self {
        LatticeVector { coords: self.coords.iter().map(|x| x * c).collect() }
    }
}

impl std::ops::Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.coords.len(), rhs.coords.len());
        LatticeVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.coords.len(), rhs.coords.len());
        LatticeVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl std::ops::Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

/// `(1/2) Σ a_p α_p − j α_k + ((2j − wt(a))/2k) γ` for any, not necessarily canonical, `(j, a)`.
pub fn representative_raw(k: u32, j: i64, a: u64) -> LatticeVector {
    let w = a.count_ones() as i64;
    let shift = q(2 * j - w, 2 * k as i64);
    let coords = (0..k)
        .map(|p| {
            let mut c = shift.clone();
            if a >> p & 1 == 1 {
                c += q(1, 2);
            }
            if p == k - 1 {
                c -= qi(j);
            }
            c
        })
        .collect();
    LatticeVector { coords }
}

pub fn representative(x: &CosetLabel) -> LatticeVector {
    representative_raw(x.k, x.j as i64, x.a)
}

/// The canonical label of the coset containing `v ∈ N°`.
pub fn coset_of_vector(v: &LatticeVector) -> Result<CosetLabel> {
    let k = v.k();
    check_k(k)?;
    if !v.in_dual() {
        return Err(Error::invalid("vector is not in the dual lattice N°"));
    }
    let half = q(1, 2);
    // v − rep(j, a) ∈ N forces v_p − (2j − wt)/2k ≡ a_p/2 mod Z for every p
    for j in 0..k {
        for w in j + 1..=k {
            let shift = q(2 * j as i64 - w as i64, 2 * k as i64);
            let mut mask = 0u64;
            let mut ok = true;
            for (p, c) in v.coords.iter().enumerate() {
                let t = c - &shift;
                let frac = &t - t.floor();
                if frac.is_zero() {
                    continue;
                } else if frac == half {
                    mask |= 1 << p;
                } else {
                    ok = false;
                    break;
                }
            }
            if ok && mask.count_ones() == w {
                let label = CosetLabel { k, j, a: mask };
                if (v - &representative(&label)).in_root_lattice() {
                    return Ok(label);
                }
            }
        }
    }
    Err(Error::Internal(format!("no coset of N matches vector {:?}", v.coords)))
}

/// The discriminant quadratic form: `⟨r, r⟩ mod 2` for any representative `r`.
pub fn norm_mod_two(x: &CosetLabel) -> Q {
    let n = representative(x).norm();
    let two = qi(2);
    let t = &n / &two;
    n - two * t.floor()
}
