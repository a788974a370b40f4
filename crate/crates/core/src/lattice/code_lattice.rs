//! Product cosets of `N^ℓ` in `(N°)^ℓ` and the code lattice `Γ_D = ⋃_{ξ∈D} N(ξ)`.

use super::coset::{representative, representative_raw, CosetLabel, LatticeVector};
use super::smith;
use crate::codes::{inner_unchecked, Code, CodeCase, Codeword};
use crate::error::{Error, Result};
use crate::rational::{is_integer, qi, ModOne, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A coset of `N^ℓ`: either `N(ξ) = ∏ N(ξ_r, 0)` or `N(η, δ) = ∏ N(η_r, (0,…,0,d_r))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProductCoset {
    Pure(Codeword),
    Tail { eta: Codeword, delta: Vec<u8> },
}

impl ProductCoset {
    pub fn tail(eta: Codeword, delta: Vec<u8>) -> Result<Self> {
        if delta.len() != eta.len() {
            return Err(Error::Mismatch("δ and η have different lengths".into()));
        }
        if delta.iter().any(|&d| d > 1) {
            return Err(Error::invalid("δ entries must be 0 or 1"));
        }
        Ok(ProductCoset::Tail { eta, delta })
    }

    pub fn k(&self) -> u32 {
        match self {
            ProductCoset::Pure(x) | ProductCoset::Tail { eta: x, .. } => x.k(),
        }
    }

    pub fn ell(&self) -> usize {
        match self {
            ProductCoset::Pure(x) | ProductCoset::Tail { eta: x, .. } => x.len(),
        }
    }

    /// Raw `(j, a)` per factor.
    pub fn factors(&self) -> Vec<(i64, u64)> {
        let k = self.k();
        match self {
            ProductCoset::Pure(xi) => xi.entries().iter().map(|&j| (j as i64, 0)).collect(),
            ProductCoset::Tail { eta, delta } => eta
                .entries()
                .iter()
                .zip(delta)
                .map(|(&j, &d)| (j as i64, (d as u64) << (k - 1)))
                .collect(),
        }
    }

    /// Canonical label of each factor.
    pub fn factor_labels(&self) -> Vec<CosetLabel> {
        let k = self.k();
        self.factors()
            .into_iter()
            .map(|(j, a)| super::coset::canonical_unchecked(k, j, a))
            .collect()
    }

    pub fn representative(&self) -> Vec<LatticeVector> {
        let k = self.k();
        self.factors().into_iter().map(|(j, a)| representative_raw(k, j, a)).collect()
    }
}

/// `⟨x, y⟩ mod 1` for two cosets of `N`, via representatives.
pub fn pairing_labels(x: &CosetLabel, y: &CosetLabel) -> Result<ModOne> {
    if x.k() != y.k() {
        return Err(Error::Mismatch("pairing cosets with different k".into()));
    }
    Ok(ModOne::new(representative(x).inner(&representative(y))))
}

/// `⟨x, y⟩ mod 1` computed from representatives, factor by factor.
pub fn pairing_via_representatives(x: &ProductCoset, y: &ProductCoset) -> Result<ModOne> {
    check_shapes(x, y)?;
    let total: Q = x
        .representative()
        .iter()
        .zip(y.representative())
        .map(|(a, b)| a.inner(&b))
        .sum();
    Ok(ModOne::new(total))
}

fn check_shapes(x: &ProductCoset, y: &ProductCoset) -> Result<()> {
    if x.k() != y.k() || x.ell() != y.ell() {
        return Err(Error::Mismatch("pairing product cosets of different shapes".into()));
    }
    Ok(())
}

/// `⟨x, y⟩ mod 1` for product cosets.
///
/// Pure/pure pairs give `−2(ξ|η)/k`, pure/tail pairs give `(ξ|δ − 2η)/k`;
/// tail/tail pairs fall back to representatives.
pub fn pairing(x: &ProductCoset, y: &ProductCoset) -> Result<ModOne> {
    check_shapes(x, y)?;
    let k = x.k() as i64;
    match (x, y) {
        (ProductCoset::Pure(a), ProductCoset::Pure(b)) => {
            Ok(ModOne::from_ratio(-2 * inner_unchecked(a, b) as i64, k))
        }
        (ProductCoset::Pure(xi), ProductCoset::Tail { eta, delta })
        | (ProductCoset::Tail { eta, delta }, ProductCoset::Pure(xi)) => {
            let s: i64 = xi
                .entries()
                .iter()
                .zip(eta.entries())
                .zip(delta)
                .map(|((&x, &e), &d)| x as i64 * (d as i64 - 2 * e as i64))
                .sum();
            Ok(ModOne::from_ratio(s, k))
        }
        _ => pairing_via_representatives(x, y),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// `Γ_D` summarized by parity and `|Γ_D° / Γ_D|`.
#[derive(Clone, Debug)]
pub struct CodeLattice {
    pub code: Code,
    pub parity: Parity,
    pub rank: usize,
    pub discriminant_order: BigInt,
    /// Smith invariants of a Gram matrix, present when built with verification.
    pub discriminant_invariants: Option<Vec<BigInt>>,
}

/// Parity and discriminant order of `Γ_D` from the index formula `(2^{k−1}k)^ℓ / |D|²`.
pub fn build_code_lattice(d: &Code) -> Result<CodeLattice> {
    let parity = match d.case() {
        CodeCase::CaseA => Parity::Even,
        CodeCase::CaseB => Parity::Odd,
        CodeCase::Unsupported => {
            return Err(Error::Unsupported(
                "not a lattice: some vector of Γ_D has non-integral norm".into(),
            ))
        }
    };
    cross_check_parity(d, parity)?;
    let k = d.k();
    let per_factor = BigInt::from(2u32).pow(k - 1) * BigInt::from(k);
    let numer = per_factor.pow(d.ell() as u32);
    let size = BigInt::from(d.size());
    let denom = &size * &size;
    if !(&numer % &denom).is_zero() {
        return Err(Error::Internal("|D|² does not divide the discriminant of N^ℓ".into()));
    }
    Ok(CodeLattice {
        code: d.clone(),
        parity,
        rank: d.ell() * (k as usize - 1),
        discriminant_order: numer / denom,
        discriminant_invariants: None,
    })
}

/// As [`build_code_lattice`], then recomputes the discriminant from the Smith form
/// of a Gram matrix of an explicit basis and insists that the two agree.
pub fn build_code_lattice_verified(d: &Code) -> Result<CodeLattice> {
    let mut lattice = build_code_lattice(d)?;
    let gram = gram_matrix(d)?;
    let det = smith::determinant(&gram).abs();
    let invariants = smith::smith_invariants(&gram);
    let product: BigInt = invariants.iter().product();
    if det != lattice.discriminant_order || product != det {
        return Err(Error::Internal(format!(
            "discriminant mismatch: index formula {}, determinant {det}, Smith product {product}",
            lattice.discriminant_order
        )));
    }
    lattice.discriminant_invariants = Some(invariants.into_iter().filter(|x| !x.is_one()).collect());
    Ok(lattice)
}

/// Generators of `Γ_D` in α-coordinates: the `β_p` of each factor and one
/// representative of `N(g)` per generator `g` of `D`.
fn lattice_generators(d: &Code) -> Vec<Vec<Q>> {
    let k = d.k();
    let ell = d.ell();
    let width = k as usize * ell;
    let mut gens = Vec::new();
    for r in 0..ell {
        for p in 1..k as usize {
            let mut v = vec![Q::zero(); width];
            let beta = LatticeVector::beta(k, p);
            v[r * k as usize..(r + 1) * k as usize].clone_from_slice(beta.coords());
            gens.push(v);
        }
    }
    for g in d.generators() {
        let rep = ProductCoset::Pure(g.clone()).representative();
        gens.push(rep.iter().flat_map(|v| v.coords().to_vec()).collect());
    }
    gens
}

/// Integral Gram matrix of a Z-basis of `Γ_D`.
pub fn gram_matrix(d: &Code) -> Result<smith::Matrix> {
    let k = d.k() as i64;
    let scale = qi(2 * k);
    let rows: smith::Matrix = lattice_generators(d)
        .iter()
        .map(|v| v.iter().map(|c| (c * &scale).to_integer()).collect())
        .collect();
    let basis = smith::row_basis(rows);
    let expected_rank = d.ell() * (d.k() as usize - 1);
    if basis.len() != expected_rank {
        return Err(Error::Internal(format!("basis has rank {} instead of {expected_rank}", basis.len())));
    }
    // ⟨u, v⟩ = 2 Σ u_p v_p / (2k)² for the scaled rows
    let denom = BigInt::from(4 * k * k);
    let mut gram = Vec::with_capacity(basis.len());
    for u in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for v in &basis {
            let dot: BigInt = u.iter().zip(v).map(|(a, b)| a * b).sum::<BigInt>() * 2;
            if !(&dot % &denom).is_zero() {
                return Err(Error::Internal("Γ_D is not integral".into()));
            }
            row.push(dot / &denom);
        }
        gram.push(row);
    }
    Ok(gram)
}

fn cross_check_parity(d: &Code, parity: Parity) -> Result<()> {
    let gens = d.generators();
    let mut any_odd = false;
    for (a, g) in gens.iter().enumerate() {
        for h in &gens[a..] {
            if !pairing(&ProductCoset::Pure(g.clone()), &ProductCoset::Pure(h.clone()))?.is_zero() {
                return Err(Error::Internal(format!("⟨N({g}), N({h})⟩ is not integral")));
            }
        }
        let norm: Q = ProductCoset::Pure(g.clone()).representative().iter().map(|v| v.norm()).sum();
        if !is_integer(&norm) {
            return Err(Error::Internal(format!("N({g}) has a non-integral norm")));
        }
        any_odd |= (norm.to_integer() % 2u32) != BigInt::zero();
    }
    let observed = if any_odd { Parity::Odd } else { Parity::Even };
    if observed != parity {
        return Err(Error::Internal(format!(
            "classification predicts a {parity:?} lattice but generator norms give {observed:?}"
        )));
    }
    Ok(())
}

/// Whether `N(η, δ) ⊂ Γ_D°`, tested against the generators of `D`.
pub fn dual_membership(eta: &Codeword, delta: &[u8], d: &Code) -> Result<bool> {
    let tail = ProductCoset::tail(eta.clone(), delta.to_vec())?;
    for g in d.generators() {
        if !pairing(&ProductCoset::Pure(g.clone()), &tail)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::span;
    use crate::lattice::coset::{all_canonical, coset_add};

    fn cw(k: u32, e: &[i64]) -> Codeword {
        Codeword::new(k, e).unwrap()
    }

    #[test]
    fn pairing_with_trivial_is_zero() {
        for x in all_canonical(4).unwrap() {
            let e = crate::lattice::coset::identity(4).unwrap();
            assert!(pairing_labels(&x, &e).unwrap().is_zero());
        }
        let zero = ProductCoset::Pure(cw(5, &[0, 0]));
        let t = ProductCoset::tail(cw(5, &[3, 1]), vec![1, 0]).unwrap();
        assert!(pairing(&zero, &t).unwrap().is_zero());
    }

    #[test]
    fn pairing_examples() {
        let n2 = ProductCoset::Pure(cw(4, &[2]));
        assert!(pairing(&n2, &n2).unwrap().is_zero());

        let x = ProductCoset::Pure(cw(3, &[1]));
        let y = ProductCoset::tail(cw(3, &[1]), vec![1]).unwrap();
        assert_eq!(pairing(&x, &y).unwrap(), ModOne::from_ratio(2, 3));
        assert_eq!(pairing_via_representatives(&x, &y).unwrap(), ModOne::from_ratio(2, 3));
    }

    #[test]
    fn closed_forms_match_representatives() {
        for k in 2..=6u32 {
            for xi in 0..k as i64 {
                for eta in 0..k as i64 {
                    let x = ProductCoset::Pure(cw(k, &[xi]));
                    let pure = ProductCoset::Pure(cw(k, &[eta]));
                    assert_eq!(pairing(&x, &pure).unwrap(), pairing_via_representatives(&x, &pure).unwrap());
                    for d in 0..2u8 {
                        let t = ProductCoset::tail(cw(k, &[eta]), vec![d]).unwrap();
                        assert_eq!(pairing(&x, &t).unwrap(), pairing_via_representatives(&x, &t).unwrap());
                        assert_eq!(pairing(&t, &x).unwrap(), pairing(&x, &t).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_is_biadditive() {
        let labels = all_canonical(4).unwrap();
        for x in labels.iter().step_by(3) {
            for y in labels.iter().step_by(5) {
                for z in labels.iter().step_by(7) {
                    let lhs = pairing_labels(&coset_add(x, y).unwrap(), z).unwrap();
                    let rhs = pairing_labels(x, z).unwrap() + pairing_labels(y, z).unwrap();
                    assert_eq!(lhs, rhs);
                    assert_eq!(pairing_labels(x, z).unwrap(), pairing_labels(z, x).unwrap());
                }
            }
        }
    }

    #[test]
    fn code_lattice_examples() {
        let d = span(&[cw(4, &[2])], 4, 1).unwrap();
        let l = build_code_lattice_verified(&d).unwrap();
        assert_eq!(l.parity, Parity::Even);
        assert_eq!(l.discriminant_order, BigInt::from(8));

        let d = span(&[cw(6, &[3])], 6, 1).unwrap();
        let l = build_code_lattice_verified(&d).unwrap();
        assert_eq!(l.parity, Parity::Odd);

        let d = span(&[cw(5, &[1, 2])], 5, 2).unwrap();
        let l = build_code_lattice_verified(&d).unwrap();
        assert_eq!(l.parity, Parity::Even);
        assert_eq!(l.discriminant_order, BigInt::from(256));
    }

    #[test]
    fn unsupported_code_is_not_a_lattice() {
        let d = span(&[cw(3, &[1])], 3, 1).unwrap();
        assert!(matches!(build_code_lattice(&d), Err(Error::Unsupported(_))));
    }

    #[test]
    fn root_lattice_discriminant_group() {
        // D = {0}: Γ_D = N with N°/N ≅ Z_2^{k−2} × Z_{2k}
        for k in 2..=7u32 {
            let d = span(&[], k, 1).unwrap();
            let l = build_code_lattice_verified(&d).unwrap();
            let mut expected = vec![BigInt::from(2); k as usize - 2];
            expected.push(BigInt::from(2 * k));
            assert_eq!(l.discriminant_invariants.unwrap(), expected, "k = {k}");
        }
    }

    #[test]
    fn dual_membership_examples() {
        let d = span(&[cw(4, &[2])], 4, 1).unwrap();
        assert!(dual_membership(&cw(4, &[0]), &[0], &d).unwrap());
        assert!(!dual_membership(&cw(4, &[0]), &[1], &d).unwrap());
        assert!(dual_membership(&cw(4, &[1]), &[0], &d).unwrap());
    }
}
