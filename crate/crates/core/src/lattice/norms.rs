//! Minimal norms of the cosets `N(j, a)`: a closed form and an enumeration oracle.

use super::coset::CosetLabel;
use crate::error::{Error, Result};
use crate::rational::{binomial, q, Q};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest `k` accepted by [`min_norm_oracle`].
pub const ORACLE_MAX_K: u32 = 12;

const WINDOW_LO: i64 = -2;
const WINDOW_HI: i64 = 3;

/// Minimum of `⟨μ, μ⟩` over a coset and the number of vectors attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinNorm {
    #[serde(with = "crate::rational::q_string")]
    pub value: Q,
    pub count: u64,
}

/// Closed-form minimal norm for a raw `(j, a)`.
///
/// The case split is made on the raw pair after reducing `j` into `0..k`, not
/// on the canonical form.
pub fn min_norm_raw(k: u32, j: i64, a: u64) -> MinNorm {
    let kk = k as i64;
    let j = crate::rational::modulo(j, k) as i64;
    let i = a.count_ones() as i64;
    if j < i {
        MinNorm {
            value: q(kk * i - (i - 2 * j).pow(2), 2 * kk),
            count: binomial(i as u64, j as u64),
        }
    } else {
        MinNorm {
            value: q(kk * (kk - i) - (kk + i - 2 * j).pow(2), 2 * kk),
            count: binomial((kk - i) as u64, (j - i) as u64),
        }
    }
}

pub fn min_norm(x: &CosetLabel) -> MinNorm {
    min_norm_raw(x.k(), x.j() as i64, x.mask())
}

/// Brute-force minimal norm of a canonical coset.
pub fn min_norm_oracle(x: &CosetLabel) -> Result<MinNorm> {
    min_norm_oracle_raw(x.k(), x.j() as i64, x.mask())
}

/// Enumerates `μ = (1/2)Σ a_p α_p − Σ c_p α_p + dγ` with `Σ c_p = j`, `d = (2j − wt(a))/2k`,
/// and every `c_p ∈ [−2, 3]`.
///
/// Each coordinate contributes `(a_p/2 + d − c_p)²`; scaled by `2k` this is the
/// integer `a_p k + 2j − wt(a) − 2k c_p`, so the search runs over integers and
/// `⟨μ, μ⟩ = S / 2k²` for the scaled sum of squares `S`. A minimizer with a
/// coordinate on the window boundary is reported as an error: the window would
/// then not be known to contain every minimizer.
pub fn min_norm_oracle_raw(k: u32, j: i64, a: u64) -> Result<MinNorm> {
    if k > ORACLE_MAX_K {
        return Err(Error::KTooLarge { k, limit: ORACLE_MAX_K, what: "the minimal norm oracle" });
    }
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    let kk = k as i64;
    let j = crate::rational::modulo(j, k) as i64;
    let w = a.count_ones() as i64;
    let offsets: Vec<i64> = (0..k).map(|p| (a >> p & 1) as i64 * kk + 2 * j - w).collect();
    let term = |p: usize, c: i64| -> i64 {
        let t = offsets[p] - 2 * kk * c;
        t * t
    };
    // suffix lower bounds ignoring the sum constraint, for pruning
    let mut suffix_lb = vec![0i64; k as usize + 1];
    for p in (0..k as usize).rev() {
        let best = (WINDOW_LO..=WINDOW_HI).map(|c| term(p, c)).min().unwrap();
        suffix_lb[p] = suffix_lb[p + 1] + best;
    }

    let results: Vec<Search> = (WINDOW_LO..=WINDOW_HI)
        .into_par_iter()
        .map(|c1| {
            let mut s = Search { best: i64::MAX, count: 0, boundary_hit: false };
            let on_edge = c1 == WINDOW_LO || c1 == WINDOW_HI;
            descend(1, c1, term(0, c1), on_edge, k as usize, j, &term, &suffix_lb, &mut s);
            s
        })
        .collect();

    let best = results.iter().map(|s| s.best).min().unwrap();
    if best == i64::MAX {
        return Err(Error::Internal("oracle window contains no vector of the coset".into()));
    }
    let winners: Vec<&Search> = results.iter().filter(|s| s.best == best).collect();
    if winners.iter().any(|s| s.boundary_hit) {
        return Err(Error::Internal(format!(
            "a minimizer for N({j}, {a:#b}) with k = {k} touches the search window boundary"
        )));
    }
    Ok(MinNorm { value: q(best, 2 * kk * kk), count: winners.iter().map(|s| s.count).sum() })
}

struct Search {
    best: i64,
    count: u64,
    boundary_hit: bool,
}

#[allow(clippy::too_many_arguments)]
fn descend(
    p: usize,
    partial_sum: i64,
    partial: i64,
    on_edge: bool,
    k: usize,
    j: i64,
    term: &dyn Fn(usize, i64) -> i64,
    suffix_lb: &[i64],
    s: &mut Search,
) {
    if partial + suffix_lb[p] > s.best {
        return;
    }
    if p == k - 1 {
        let c = j - partial_sum;
        if !(WINDOW_LO..=WINDOW_HI).contains(&c) {
            return;
        }
        let total = partial + term(p, c);
        let edge = on_edge || c == WINDOW_LO || c == WINDOW_HI;
        if total < s.best {
            s.best = total;
            s.count = 1;
            s.boundary_hit = edge;
        } else if total == s.best {
            s.count += 1;
            s.boundary_hit |= edge;
        }
        return;
    }
    for c in WINDOW_LO..=WINDOW_HI {
        let edge = on_edge || c == WINDOW_LO || c == WINDOW_HI;
        descend(p + 1, partial_sum + c, partial + term(p, c), edge, k, j, term, suffix_lb, s);
    }
}
