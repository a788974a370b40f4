//! Irreducible modules of the parafermion algebra `K(sl₂, k)` at the level of labels.
//!
//! `M^{i,j}` with `0 ≤ i ≤ k` and `j ∈ Z_k` satisfies `M^{i,j} ≅ M^{k−i, j−i}`;
//! the canonical representatives are the pairs `0 ≤ j < i ≤ k`, so the vacuum
//! `M^{0,0}` is written `(k, 0)`.

use crate::error::{Error, Result};
use crate::rational::{modulo, q, ModOne, Q};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A canonical label `M^{i,j}` with `0 ≤ j < i ≤ k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PfLabel {
    k: u32,
    i: u32,
    j: u32,
}

impl PfLabel {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn vacuum(k: u32) -> Self {
        PfLabel { k, i: k, j: 0 }
    }

    pub fn is_vacuum(&self) -> bool {
        self.i == self.k && self.j == 0
    }

    /// The other representative `(k − i, j − i mod k)` of the same class.
    pub fn alternate(&self) -> (u32, u32) {
        (self.k - self.i, modulo(self.j as i64 - self.i as i64, self.k))
    }

    /// Position among the canonical labels ordered by `(i, j)`.
    pub fn index(&self) -> usize {
        (self.i as usize * (self.i as usize - 1)) / 2 + self.j as usize
    }

    pub(crate) fn from_index(k: u32, idx: usize) -> Self {
        // i(i−1)/2 ≤ idx < i(i+1)/2
        let mut i = 1usize;
        while i * (i + 1) / 2 <= idx {
            i += 1;
        }
        debug_assert!(i <= k as usize);
        PfLabel { k, i: i as u32, j: (idx - i * (i - 1) / 2) as u32 }
    }
}

impl fmt::Debug for PfLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^{{{},{}}}", self.i, self.j)
    }
}

impl fmt::Display for PfLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidModulus(k))
    } else {
        Ok(())
    }
}

/// Canonical representative of `M^{i,j}`.
pub fn pf_canonicalize(k: u32, i: u32, j: i64) -> Result<PfLabel> {
    check_k(k)?;
    if i > k {
        return Err(Error::invalid(format!("parafermion index i = {i} exceeds k = {k}")));
    }
    Ok(canonical_unchecked(k, i, j))
}

pub(crate) fn canonical_unchecked(k: u32, i: u32, j: i64) -> PfLabel {
    let j = modulo(j, k);
    if j < i {
        PfLabel { k, i, j }
    } else {
        PfLabel { k, i: k - i, j: modulo(j as i64 - i as i64, k) }
    }
}

/// All `k(k+1)/2` canonical labels in `(i, j)` order.
pub fn all_labels(k: u32) -> Result<Vec<PfLabel>> {
    check_k(k)?;
    Ok((1..=k).flat_map(|i| (0..i).map(move |j| PfLabel { k, i, j })).collect())
}

/// `P(i, j) = k(i − 2j) − (i − 2j)² + 2k(i − j + 1)j`.
fn p_poly(k: i64, i: i64, j: i64) -> i64 {
    let t = i - 2 * j;
    k * t - t * t + 2 * k * (i - j + 1) * j
}

/// Top weight of `M^{i,j}` for any `0 ≤ i ≤ k`, `j ∈ Z`.
///
/// Uses `P(i, j)` when `0 ≤ j ≤ i`, and `P(k − i, j − i)` otherwise with `j`
/// reduced into `0..k`.
pub fn pf_weight_raw(k: u32, i: u32, j: i64) -> Q {
    let kk = k as i64;
    let (i, j) = (i as i64, modulo(j, k) as i64);
    let p = if j <= i { p_poly(kk, i, j) } else { p_poly(kk, kk - i, j - i) };
    q(p, 2 * kk * (kk + 2))
}

pub fn pf_weight(x: &PfLabel) -> Q {
    pf_weight_raw(x.k, x.i, x.j as i64)
}

/// `h(M^j) = j(k − j)/k`.
pub fn sc_weight(k: u32, j: i64) -> Q {
    let j = modulo(j, k) as i64;
    let kk = k as i64;
    q(j * (kk - j), kk)
}

/// The simple current `M^j = M^{0,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleCurrent {
    k: u32,
    j: u32,
}

impl SimpleCurrent {
    pub fn new(k: u32, j: i64) -> Result<Self> {
        check_k(k)?;
        Ok(SimpleCurrent { k, j: modulo(j, k) })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// The class of `M^{0,j}` as a canonical label.
    pub fn label(&self) -> PfLabel {
        canonical_unchecked(self.k, 0, self.j as i64)
    }

    pub fn weight(&self) -> Q {
        sc_weight(self.k, self.j as i64)
    }
}

fn same_k(p: &SimpleCurrent, x: &PfLabel) -> Result<()> {
    if p.k != x.k {
        return Err(Error::Mismatch(format!("simple current for k = {} on a label for k = {}", p.k, x.k)));
    }
    Ok(())
}

/// `M^p ⊠ M^{i,j} = M^{i, j+p}`.
pub fn sc_fuse(p: &SimpleCurrent, x: &PfLabel) -> Result<PfLabel> {
    same_k(p, x)?;
    Ok(canonical_unchecked(x.k, x.i, x.j as i64 + p.j as i64))
}

/// `b(M^p, M^{i,j}) = p(i − 2j)/k mod 1`.
pub fn pf_b(p: &SimpleCurrent, x: &PfLabel) -> Result<ModOne> {
    same_k(p, x)?;
    Ok(pf_b_raw(x.k, p.j as i64, x.i, x.j as i64))
}

/// The closed form on an arbitrary representative `(i, j)`.
pub fn pf_b_raw(k: u32, p: i64, i: u32, j: i64) -> ModOne {
    ModOne::from_ratio(p * (i as i64 - 2 * j), k as i64)
}

/// Label action of the involution θ: `M^{i,j} ↦ M^{i, i−j}`.
pub fn theta_act(x: &PfLabel) -> PfLabel {
    canonical_unchecked(x.k, x.i, x.i as i64 - x.j as i64)
}

/// Whether `M^p ⊠ x ≅ x`: `p = 0`, or `k` even with `p = i = k/2`.
pub fn pf_fixed(p: &SimpleCurrent, x: &PfLabel) -> Result<bool> {
    same_k(p, x)?;
    let k = x.k;
    Ok(p.j == 0 || (k % 2 == 0 && p.j == k / 2 && x.i == k / 2))
}

/// `c = 2(k − 1)/(k + 2)`.
pub fn central_charge(k: u32) -> Result<Q> {
    check_k(k)?;
    Ok(q(2 * (k as i64 - 1), k as i64 + 2))
}

pub fn irr_count(k: u32) -> Result<u64> {
    check_k(k)?;
    Ok(k as u64 * (k as u64 + 1) / 2)
}
