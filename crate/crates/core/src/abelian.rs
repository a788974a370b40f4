//! Invariant factors of a finite abelian group given by its elements and addition.

use std::collections::HashMap;
use std::hash::Hash;

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors `d_1 | d_2 | … | d_r` (all `> 1`) of the group on `elements`.
///
/// For each prime `p`, the sizes `|G[p^e]|` of the `p^e`-torsion subgroups
/// determine how many cyclic `p`-parts have order at least `p^e`.
pub fn invariant_factors<T, F>(elements: &[T], zero: &T, add: F) -> Vec<u64>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let order = elements.len() as u64;
    let mut exponents: HashMap<u64, Vec<u32>> = HashMap::new();
    for p in prime_factors(order) {
        let times_p = |x: &T| (1..p).fold(x.clone(), |acc, _| add(&acc, x));
        let mut multiples: Vec<T> = elements.to_vec();
        let mut prev = 1u64;
        let mut ranks = Vec::new();
        loop {
            multiples = multiples.iter().map(&times_p).collect();
            let torsion = multiples.iter().filter(|m| *m == zero).count() as u64;
            if torsion == prev {
                break;
            }
            let mut ratio = torsion / prev;
            let mut rank = 0;
            while ratio > 1 {
                ratio /= p;
                rank += 1;
            }
            ranks.push(rank);
            prev = torsion;
        }
        // ranks[e-1] = number of cyclic factors of order ≥ p^e
        let mut exps = Vec::new();
        for (e, &r) in ranks.iter().enumerate() {
            let next = ranks.get(e + 1).copied().unwrap_or(0);
            for _ in 0..(r - next) {
                exps.push(e as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        exponents.insert(p, exps);
    }
    let len = exponents.values().map(|v| v.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|t| {
            exponents
                .iter()
                .map(|(&p, exps)| exps.get(t).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.sort_unstable();
    factors
}
