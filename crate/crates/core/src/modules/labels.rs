use crate::codes::{inner_unchecked, Codeword};
use crate::error::{Error, Result};
use crate::parafermion::{all_labels, canonical_unchecked, pf_weight, PfLabel};
use crate::rational::{q, ModOne, Q};
use std::fmt;

/// An irreducible `M_0`-module `M_{μ,ν} = M^{μ_1,ν_1} ⊗ ⋯ ⊗ M^{μ_ℓ,ν_ℓ}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrLabel {
    k: u32,
    factors: Vec<PfLabel>,
}

impl IrrLabel {
    pub fn new(factors: Vec<PfLabel>) -> Result<Self> {
        let k = factors.first().ok_or_else(|| Error::invalid("a label needs at least one factor"))?.k();
        if factors.iter().any(|x| x.k() != k) {
            return Err(Error::Mismatch("factors with different k".into()));
        }
        Ok(IrrLabel { k, factors })
    }

    /// Canonicalizes each pair `(μ_r, ν_r)`.
    pub fn from_pairs(k: u32, pairs: &[(u32, i64)]) -> Result<Self> {
        let factors = pairs
            .iter()
            .map(|&(i, j)| crate::parafermion::pf_canonicalize(k, i, j))
            .collect::<Result<Vec<_>>>()?;
        IrrLabel::new(factors)
    }

    pub fn vacuum(k: u32, ell: usize) -> Self {
        IrrLabel { k, factors: vec![PfLabel::vacuum(k); ell] }
    }

    /// The simple current `M_ξ = M^{0,ξ_1} ⊗ ⋯ ⊗ M^{0,ξ_ℓ}`.
    pub fn of_codeword(xi: &Codeword) -> Self {
        let k = xi.k();
        IrrLabel { k, factors: xi.entries().iter().map(|&e| canonical_unchecked(k, 0, e as i64)).collect() }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[PfLabel] {
        &self.factors
    }

    pub fn mu(&self) -> Vec<u32> {
        self.factors.iter().map(|x| x.i()).collect()
    }

    pub fn nu(&self) -> Vec<u32> {
        self.factors.iter().map(|x| x.j()).collect()
    }

    /// `μ − 2ν` reduced mod `k`.
    pub fn mu_minus_two_nu(&self) -> Codeword {
        let e: Vec<i64> = self.factors.iter().map(|x| x.i() as i64 - 2 * x.j() as i64).collect();
        Codeword::new(self.k, &e).expect("k is valid")
    }

    pub fn is_vacuum(&self) -> bool {
        self.factors.iter().all(|x| x.is_vacuum())
    }

    /// Position in the lexicographic order of all labels of this shape.
    pub fn index(&self) -> u64 {
        let base = base(self.k);
        self.factors.iter().fold(0, |acc, x| acc * base + x.index() as u64)
    }

    pub(crate) fn from_index(k: u32, ell: usize, mut idx: u64) -> Self {
        let base = base(k);
        let mut factors = vec![PfLabel::vacuum(k); ell];
        for r in (0..ell).rev() {
            factors[r] = PfLabel::from_index(k, (idx % base) as usize);
            idx /= base;
        }
        IrrLabel { k, factors }
    }

    fn check_code_shape(&self, xi: &Codeword) -> Result<()> {
        if xi.k() != self.k || xi.len() != self.ell() {
            return Err(Error::Mismatch(format!(
                "codeword in (Z_{})^{} acting on a label for k = {}, ℓ = {}",
                xi.k(),
                xi.len(),
                self.k,
                self.ell()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.factors {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{self}]")
    }
}

pub(crate) fn base(k: u32) -> u64 {
    k as u64 * (k as u64 + 1) / 2
}

/// All `(k(k+1)/2)^ℓ` labels in lexicographic order.
pub fn all_irr_labels(k: u32, ell: usize) -> Result<Vec<IrrLabel>> {
    let pf = all_labels(k)?;
    let mut out = vec![Vec::new()];
    for _ in 0..ell {
        out = out
            .into_iter()
            .flat_map(|t: Vec<PfLabel>| {
                pf.iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(*x);
                    t
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(|factors| IrrLabel { k, factors }).collect())
}

pub fn tensor_weight(x: &IrrLabel) -> Q {
    x.factors.iter().map(pf_weight).sum()
}

/// `h(M_ξ) = Σ ξ_r − Σ ξ_r²/k` with entries read in `0..k`.
pub fn sc_ext_weight(xi: &Codeword) -> Q {
    let k = xi.k() as i64;
    let s: i64 = xi.entries().iter().map(|&e| e as i64).sum();
    q(s * k - xi.integer_norm() as i64, k)
}

/// `M_ξ ⊠ M_{μ,ν} = M_{μ,ν+ξ}`.
pub fn fuse(xi: &Codeword, x: &IrrLabel) -> Result<IrrLabel> {
    x.check_code_shape(xi)?;
    Ok(fuse_unchecked(xi, x))
}

pub(crate) fn fuse_unchecked(xi: &Codeword, x: &IrrLabel) -> IrrLabel {
    let factors = x
        .factors
        .iter()
        .zip(xi.entries())
        .map(|(f, &e)| canonical_unchecked(x.k, f.i(), f.j() as i64 + e as i64))
        .collect();
    IrrLabel { k: x.k, factors }
}

/// `b(M_ξ, M_{μ,ν}) = (ξ | μ − 2ν)/k mod 1`.
pub fn b_ext(xi: &Codeword, x: &IrrLabel) -> Result<ModOne> {
    x.check_code_shape(xi)?;
    let v = x.mu_minus_two_nu();
    Ok(ModOne::from_ratio(inner_unchecked(xi, &v) as i64, x.k as i64))
}
