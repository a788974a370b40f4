//! Virasoro minimal-model labels and the decomposition of `V_{N(j,a)}` into
//! `L(c₁,·) ⊗ ⋯ ⊗ L(c_{k−1},·) ⊗ M^{i_k,·}` components.

use crate::error::{Error, Result};
use crate::parafermion::{canonical_unchecked, pf_weight, PfLabel};
use crate::rational::{modulo, q, Q};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest `k` for which [`branch`] enumerates all components.
pub const BRANCH_MAX_K: u32 = 10;

/// `c_m = 1 − 6/((m+2)(m+3))`.
pub fn vir_c(m: u32) -> Result<Q> {
    if m == 0 {
        return Err(Error::invalid("Virasoro index m must be at least 1"));
    }
    let m = m as i64;
    Ok(q(1, 1) - q(6, (m + 2) * (m + 3)))
}

fn check_rs(m: u32, r: u32, s: u32) -> Result<()> {
    if m == 0 || r == 0 || s == 0 || r > m + 1 || s > m + 2 {
        return Err(Error::invalid(format!("Virasoro label (m, r, s) = ({m}, {r}, {s}) out of range")));
    }
    Ok(())
}

/// `h^m_{r,s} = ((r(m+3) − s(m+2))² − 1) / (4(m+2)(m+3))`.
pub fn vir_h(m: u32, r: u32, s: u32) -> Result<Q> {
    check_rs(m, r, s)?;
    Ok(vir_h_unchecked(m, r, s))
}

fn vir_h_unchecked(m: u32, r: u32, s: u32) -> Q {
    let (m, r, s) = (m as i64, r as i64, s as i64);
    let t = r * (m + 3) - s * (m + 2);
    q(t * t - 1, 4 * (m + 2) * (m + 3))
}

/// A highest weight `h^m_{r,s}` of the unitary minimal model `L(c_m, ·)`,
/// stored in the form `1 ≤ s ≤ r ≤ m + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VirasoroLabel {
    m: u32,
    r: u32,
    s: u32,
}

impl VirasoroLabel {
    /// Canonicalizes via `(r, s) ~ (m + 2 − r, m + 3 − s)`.
    pub fn new(m: u32, r: u32, s: u32) -> Result<Self> {
        check_rs(m, r, s)?;
        Ok(Self::canonical(m, r, s))
    }

    fn canonical(m: u32, r: u32, s: u32) -> Self {
        if s <= r {
            VirasoroLabel { m, r, s }
        } else {
            VirasoroLabel { m, r: m + 2 - r, s: m + 3 - s }
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn weight(&self) -> Q {
        vir_h_unchecked(self.m, self.r, self.s)
    }

    pub fn is_vacuum(&self) -> bool {
        self.r == 1 && self.s == 1
    }
}

impl fmt::Debug for VirasoroLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h^{}_{{{},{}}}", self.m, self.r, self.s)
    }
}

impl fmt::Display for VirasoroLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// One summand `L(c_1, h^1) ⊗ ⋯ ⊗ L(c_{k−1}, h^{k−1}) ⊗ M^{i_k, ·}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchComponent {
    /// `(i_1, …, i_k)` with `0 ≤ i_s ≤ s`.
    pub tuple: Vec<u32>,
    /// Factor `s` is `h^s_{i_s+1, i_{s+1}+1}`, canonicalized.
    pub virasoro: Vec<VirasoroLabel>,
    pub pf: PfLabel,
    #[serde(with = "crate::rational::q_string")]
    pub weight: Q,
}

/// All parity tuples `(i_1, …, i_{k−1})` with `0 ≤ i_s ≤ s`, `i_s ≡ b_s`.
fn prefixes(b: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for s in 1..b.len() {
        let parity = b[s - 1] % 2;
        out = out
            .into_iter()
            .flat_map(|t| {
                (parity..=s as u32).step_by(2).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// The components of `V_{N(j,a)}`, ordered by tuple.
///
/// `a` is a bitmask with bit `p − 1` holding `a_p`. The raw `(j, a)` is used as
/// given; equivalent labels give the same multiset up to reindexing.
pub fn branch(k: u32, j: i64, a: u64) -> Result<Vec<BranchComponent>> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    if k > BRANCH_MAX_K {
        return Err(Error::KTooLarge { k, limit: BRANCH_MAX_K, what: "the full branching decomposition" });
    }
    if a >> k != 0 {
        return Err(Error::invalid(format!("binary word has bits beyond length k = {k}")));
    }
    let j = modulo(j, k) as i64;
    // b_s = a_1 + ⋯ + a_s
    let b: Vec<u32> = (1..=k).map(|s| (a & ((1u64 << s) - 1)).count_ones()).collect();
    let bk = b[k as usize - 1];
    let heads = prefixes(&b);
    // vir[s-1][x][y] = h^s_{x+1, y+1}
    let vir: Vec<Vec<Vec<Q>>> = (1..k)
        .map(|s| {
            (0..=s).map(|x| (0..=s + 1).map(|y| vir_h_unchecked(s, x + 1, y + 1)).collect()).collect()
        })
        .collect();

    let mut out: Vec<BranchComponent> = (bk % 2..=k)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|ik| {
            let pf = canonical_unchecked(k, ik, j + (ik as i64 - bk as i64) / 2);
            let pfw = pf_weight(&pf);
            let vir = &vir;
            heads.iter().map(move |head| {
                let mut tuple = head.clone();
                tuple.push(ik);
                let mut weight = pfw.clone();
                let mut labels = Vec::with_capacity(k as usize - 1);
                for s in 1..k as usize {
                    let (x, y) = (tuple[s - 1], tuple[s]);
                    weight += &vir[s - 1][x as usize][y as usize];
                    labels.push(VirasoroLabel::canonical(s as u32, x + 1, y + 1));
                }
                BranchComponent { tuple, virasoro: labels, pf, weight }
            })
        })
        .collect();
    out.sort_by(|x, y| x.tuple.cmp(&y.tuple));
    Ok(out)
}

/// Components `(h^{k−1}_{1,i+1}, M^{i, j+(i−d)/2})` for `0 ≤ i ≤ k`, `i ≡ d`:
/// the summands of `V_{N(j,(0,…,0,d))}` on which the first `k − 2` Virasoro
/// factors act by their vacuum.
pub fn branch_tail(k: u32, j: i64, d: u8) -> Result<Vec<(VirasoroLabel, PfLabel)>> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    if d > 1 {
        return Err(Error::invalid("tail bit d must be 0 or 1"));
    }
    let d = d as u32;
    Ok((d..=k)
        .step_by(2)
        .map(|i| {
            let v = VirasoroLabel::canonical(k - 1, 1, i + 1);
            let pf = canonical_unchecked(k, i, j + (i as i64 - d as i64) / 2);
            (v, pf)
        })
        .collect())
}

/// The representative `(i, j)` of `x` used with tail bit `d`.
///
/// Among the two representatives with `i ≡ d (mod 2)` the one with smaller `i`
/// is taken, the canonical one on a tie.
pub fn pf_representative(x: &PfLabel, d: u8) -> Result<(u32, u32)> {
    if d > 1 {
        return Err(Error::invalid("tail bit d must be 0 or 1"));
    }
    let reps = [(x.i(), x.j()), x.alternate()];
    reps.iter()
        .copied()
        .filter(|&(i, _)| i % 2 == d as u32)
        .min_by_key(|&(i, _)| i)
        .ok_or_else(|| {
            Error::Parity(format!("{x:?} has no representative with i ≡ {d} (mod 2) for k = {}", x.k()))
        })
}

/// `η = j − (i − d)/2 (mod k)`, so that `x` occurs in `V_{N(η,(0,…,0,d))}`.
pub fn locate_pf(x: &PfLabel, d: u8) -> Result<u32> {
    let (i, j) = pf_representative(x, d)?;
    Ok(modulo(j as i64 - (i as i64 - d as i64) / 2, x.k()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{all_canonical, min_norm};
    use crate::parafermion::{all_labels, pf_canonicalize};
    use num_traits::Zero;

    fn pf(k: u32, i: u32, j: i64) -> PfLabel {
        pf_canonicalize(k, i, j).unwrap()
    }

    #[test]
    fn virasoro_examples() {
        for m in 1..=8 {
            assert!(vir_h(m, 1, 1).unwrap().is_zero());
        }
        assert_eq!(vir_c(1).unwrap(), q(1, 2));
        assert_eq!(vir_h(1, 1, 3).unwrap(), q(1, 2));
        assert_eq!(vir_h(1, 2, 2).unwrap(), q(1, 16));
        assert!(vir_h(1, 3, 1).is_err());
        assert!(vir_h(1, 1, 4).is_err());
        assert!(vir_c(0).is_err());
    }

    #[test]
    fn virasoro_symmetry_and_canonical_form() {
        for m in 1..=9 {
            for r in 1..=m + 1 {
                for s in 1..=m + 2 {
                    let h = vir_h(m, r, s).unwrap();
                    assert_eq!(h, vir_h(m, m + 2 - r, m + 3 - s).unwrap());
                    let v = VirasoroLabel::new(m, r, s).unwrap();
                    assert!(v.s() <= v.r() && v.r() <= m + 1);
                    assert_eq!(v.weight(), h);
                }
            }
        }
    }

    #[test]
    fn k2_vacuum_coset() {
        let comps = branch(2, 0, 0).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].tuple, vec![0, 0]);
        assert!(comps[0].weight.is_zero());
        assert!(comps[0].pf.is_vacuum());
        assert_eq!(comps[1].tuple, vec![0, 2]);
        assert_eq!(comps[1].weight, q(1, 1));
        assert_eq!(comps[1].pf, pf(2, 2, 1));
    }

    #[test]
    fn k2_shifted_coset() {
        let comps = branch(2, 1, 0).unwrap();
        assert_eq!(comps[0].pf, pf(2, 0, 1));
        assert_eq!(comps[0].weight, q(1, 2));
        assert_eq!(comps[1].pf, pf(2, 2, 0));
        assert_eq!(comps[1].weight, q(1, 2));
    }

    #[test]
    fn all_zero_tuple_exists_iff_a_is_zero() {
        for k in 2..=5u32 {
            for a in 0..(1u64 << k) {
                for j in 0..k as i64 {
                    let comps = branch(k, j, a).unwrap();
                    let zero = comps.iter().find(|c| c.tuple.iter().all(|&i| i == 0));
                    assert_eq!(zero.is_some(), a == 0);
                    if let Some(c) = zero {
                        assert_eq!(c.pf, pf(k, 0, j));
                    }
                }
            }
        }
    }

    #[test]
    fn minimum_weight_is_half_min_norm() {
        for k in 2..=5u32 {
            for x in all_canonical(k).unwrap() {
                let comps = branch(k, x.j() as i64, x.mask()).unwrap();
                let lo = comps.iter().map(|c| c.weight.clone()).min().unwrap();
                assert_eq!(lo, min_norm(&x).value / q(2, 1), "k={k} {x}");
                assert!(comps.iter().all(|c| (&c.weight - &lo).is_integer()));
            }
        }
    }

    #[test]
    fn component_counts() {
        for k in 2..=7u32 {
            let expected: usize = (1..=k as usize).map(|s| s / 2 + 1).product();
            for j in 0..k as i64 {
                assert_eq!(branch(k, j, 0).unwrap().len(), expected);
            }
        }
        assert!(branch(11, 0, 0).is_err());
    }

    #[test]
    fn tail_examples() {
        let t = branch_tail(3, 0, 0).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t[0].0.is_vacuum() && t[0].1.is_vacuum());
        assert_eq!(t[1], (VirasoroLabel::new(2, 1, 3).unwrap(), pf(3, 2, 1)));

        let t = branch_tail(3, 0, 1).unwrap();
        assert_eq!(t[0], (VirasoroLabel::new(2, 1, 2).unwrap(), pf(3, 1, 0)));
        assert_eq!(t[1], (VirasoroLabel::new(2, 1, 4).unwrap(), pf(3, 3, 1)));
    }

    #[test]
    fn tail_is_filter_of_full_branch() {
        for k in 2..=6u32 {
            for d in 0..=1u8 {
                for j in 0..k as i64 {
                    let full = branch(k, j, (d as u64) << (k - 1)).unwrap();
                    let filtered: Vec<(VirasoroLabel, PfLabel)> = full
                        .iter()
                        .filter(|c| c.tuple[..k as usize - 1].iter().all(|&i| i == 0))
                        .map(|c| (*c.virasoro.last().unwrap(), c.pf))
                        .collect();
                    assert_eq!(filtered, branch_tail(k, j, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn locate_examples() {
        assert_eq!(locate_pf(&PfLabel::vacuum(4), 0).unwrap(), 0);
        assert_eq!(locate_pf(&PfLabel::vacuum(5), 0).unwrap(), 0);
        assert_eq!(locate_pf(&pf(4, 2, 1), 0).unwrap(), 0);
        assert_eq!(locate_pf(&pf(3, 2, 0), 0).unwrap(), 2);
        assert!(matches!(locate_pf(&pf(4, 1, 0), 0), Err(Error::Parity(_))));
    }

    #[test]
    fn located_labels_appear_in_tail() {
        for k in 2..=8u32 {
            for x in all_labels(k).unwrap() {
                for d in 0..=1u8 {
                    let Ok(eta) = locate_pf(&x, d) else {
                        assert_eq!(k % 2, 0);
                        continue;
                    };
                    let tail = branch_tail(k, eta as i64, d).unwrap();
                    assert!(tail.iter().any(|(_, y)| *y == x), "k={k} {x:?} d={d}");
                }
            }
        }
    }
}
