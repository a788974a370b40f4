//! Acceptance criteria. Prints one line per criterion and exits nonzero if any
//! fails or runs past its time budget.

use pfkit::branching::{branch, branch_tail, locate_pf};
use pfkit::codes::{all_codes, span, Code, CodeCase, Codeword};
use pfkit::lattice::{
    all_canonical, coset_add, coset_group_invariants, coset_neg, coset_of_vector, identity, min_norm,
    min_norm_oracle, pairing_via_representatives, representative, CosetLabel, ProductCoset,
};
use pfkit::modules::{
    all_irr_labels, b_ext, case_b_modules, fuse, realize, sc_ext_weight, stabilizer_brute, tensor_weight, IrrLabel,
    ModuleTable, Regime, Verdict,
};
use pfkit::parafermion::{all_labels, central_charge, pf_b, pf_weight, pf_weight_raw, sc_fuse, sc_weight, SimpleCurrent};
use pfkit::rational::{q, ModOne, Q};
use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn code(k: u32, gens: &[&[i64]]) -> Code {
    let ell = gens[0].len();
    let g: Vec<Codeword> = gens.iter().map(|e| Codeword::new(k, e).unwrap()).collect();
    span(&g, k, ell).unwrap()
}

/// Case A codes with `k ≤ 6`, `ℓ ≤ 2`, `|D| ≤ 12`.
fn small_case_a_codes() -> Vec<Code> {
    let mut out = Vec::new();
    for k in 2..=6 {
        for ell in 1..=2 {
            for d in all_codes(k, ell, 100_000).unwrap() {
                if d.case() == CodeCase::CaseA && d.size() <= 12 {
                    out.push(d);
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut total = 0;
    for k in 2..=8u32 {
        let cosets = all_canonical(k).map_err(|e| e.to_string())?;
        ensure!(cosets.len() == (1usize << (k - 1)) * k as usize, "k={k}: {} cosets", cosets.len());
        for x in &cosets {
            let oracle = ok(min_norm_oracle(x))?;
            ensure!(oracle == min_norm(x), "k={k} {x}: closed form {:?} vs oracle {:?}", min_norm(x), oracle);
        }
        total += cosets.len();
    }
    Ok(format!("{total} cosets, k=2..8"))
}

/// Multiset of element orders of `Z_2^{k−2} × Z_{2k}`.
fn expected_order_profile(k: u64) -> BTreeMap<u64, u64> {
    let mut profile = BTreeMap::new();
    let twos = 1u64 << (k - 2);
    for t in 0..twos {
        for c in 0..2 * k {
            let oc = 2 * k / num_integer::gcd(c, 2 * k);
            let o = if t == 0 { oc } else { num_integer::lcm(oc, 2) };
            *profile.entry(o).or_insert(0) += 1;
        }
    }
    profile
}

fn order_of(x: &CosetLabel, zero: &CosetLabel) -> u64 {
    let mut acc = x.clone();
    let mut n = 1;
    while acc != *zero {
        acc = coset_add(&acc, x).unwrap();
        n += 1;
    }
    n
}

fn criterion_2() -> Outcome {
    for k in 2..=8u32 {
        let labels = ok(all_canonical(k))?;
        let zero = ok(identity(k))?;
        let order = (1u64 << (k - 1)) * k as u64;
        ensure!(labels.len() as u64 == order, "k={k}: order {}", labels.len());
        let index: HashMap<&CosetLabel, usize> = labels.iter().enumerate().map(|(n, x)| (x, n)).collect();

        let stride = if k <= 6 { 1 } else { 7 };
        for (a, x) in labels.iter().enumerate().step_by(stride) {
            let neg = coset_neg(x);
            ensure!(coset_add(x, &neg).unwrap() == zero, "k={k}: {x} + {neg} is not zero");
            let vec_neg = ok(coset_of_vector(&-&representative(x)))?;
            ensure!(neg == vec_neg, "k={k}: negation of {x} is {neg}, vectors give {vec_neg}");
            for y in labels.iter().skip(a % stride).step_by(stride) {
                let s = coset_add(x, y).unwrap();
                ensure!(index.contains_key(&s), "k={k}: {x} + {y} = {s} not canonical");
                ensure!(s == coset_add(y, x).unwrap(), "k={k}: addition not commutative at {x}, {y}");
                let v = ok(coset_of_vector(&(&representative(x) + &representative(y))))?;
                ensure!(s == v, "k={k}: {x} + {y} = {s}, vectors give {v}");
            }
        }

        let mut profile = BTreeMap::new();
        for x in &labels {
            *profile.entry(order_of(x, &zero)).or_insert(0u64) += 1;
        }
        ensure!(profile == expected_order_profile(k as u64), "k={k}: element orders {profile:?}");
        let mut expected = vec![2u64; k as usize - 2];
        expected.push(2 * k as u64);
        let inv = ok(coset_group_invariants(k))?;
        ensure!(inv == expected, "k={k}: invariant factors {inv:?}");
    }
    Ok("k=2..8, invariant factors (2,…,2,2k), negation matches vectors".into())
}

fn criterion_3() -> Outcome {
    let mut n = 0;
    for k in 2..=6u32 {
        for x in ok(all_canonical(k))? {
            let comps = ok(branch(k, x.j() as i64, x.mask()))?;
            let lo = comps.iter().map(|c| c.weight.clone()).min().unwrap();
            let half = min_norm(&x).value / q(2, 1);
            ensure!(lo == half, "k={k} {x}: least weight {lo}, half min norm {half}");
            for c in &comps {
                let gap = &c.weight - &lo;
                ensure!(gap.is_integer() && gap >= q(0, 1), "k={k} {x}: weight {} off the lattice", c.weight);
            }
            n += 1;
        }
    }
    Ok(format!("{n} cosets, k=2..6"))
}

fn criterion_4() -> Outcome {
    ensure!(ok(central_charge(2))? == q(1, 2), "c(M^0) for k=2");

    let d = code(4, &[&[2]]);
    ensure!(d.case() == CodeCase::CaseA, "k=4 D={{0,2}} is {}", d.case());
    ensure!(ok(central_charge(4))? == q(1, 1), "c for k=4");
    let table = ok(ModuleTable::new(&d))?;
    let counts = table.counts();
    let untwisted: u64 = counts.iter().filter(|(c, _)| c.is_trivial()).map(|(_, n)| n).sum();
    let twisted: Vec<u64> = counts.iter().filter(|(c, _)| !c.is_trivial()).map(|(_, n)| *n).collect();
    ensure!(untwisted == 6 && twisted == vec![2], "k=4 counts {untwisted} / {twisted:?}");

    let d = code(5, &[&[1, 2]]);
    let words: Vec<String> = d.words().iter().map(|w| w.to_string()).collect();
    ensure!(words == ["(0,0)", "(1,2)", "(2,4)", "(3,1)", "(4,3)"], "k=5 code {words:?}");
    ensure!(d.case() == CodeCase::CaseA && d.size() == 5, "k=5 code classification");
    ensure!(ok(central_charge(5))? * q(2, 1) == q(16, 7), "c for k=5, ℓ=2");

    let d = code(6, &[&[3]]);
    ensure!(d.case() == CodeCase::CaseB, "k=6 D={{0,3}} is {}", d.case());
    ensure!(ok(central_charge(6))? == q(5, 4), "c for k=6");
    ensure!(sc_ext_weight(&Codeword::new(6, &[3]).unwrap()) == q(3, 2), "h(M_(3)) for k=6");

    let d = code(9, &[&[3]]);
    ensure!(d.case() == CodeCase::CaseA && d.size() == 3, "k=9 D=<(3)> is {}", d.case());
    Ok("k=2,4,5,6,9 examples".into())
}

/// Orbits by union-find over explicit fusion.
fn brute_orbits(d: &Code) -> Vec<Vec<IrrLabel>> {
    let labels = all_irr_labels(d.k(), d.ell()).unwrap();
    let index: HashMap<&IrrLabel, usize> = labels.iter().enumerate().map(|(n, x)| (x, n)).collect();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (n, x) in labels.iter().enumerate() {
        for g in d.generators() {
            let y = index[&fuse(g, x).unwrap()];
            let (a, b) = (find(&mut parent, n), find(&mut parent, y));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<IrrLabel>> = BTreeMap::new();
    for (n, x) in labels.iter().enumerate() {
        let r = find(&mut parent, n);
        groups.entry(r).or_default().push(x.clone());
    }
    groups.into_values().collect()
}

fn criterion_5() -> Outcome {
    let codes = small_case_a_codes();
    for d in &codes {
        let table = ok(ModuleTable::new(d))?;
        let (k, ell) = (d.k(), d.ell());
        let total = ((k * (k + 1) / 2) as u64).pow(ell as u32);

        let got: Vec<Vec<IrrLabel>> = table.orbits().map(|o| o.members.clone()).collect();
        ensure!(got == brute_orbits(d), "k={k} D={:?}: orbit partition differs", d.words());

        let mut covered = 0u64;
        let mut by_regime = 0u64;
        for chi in table.characters.characters() {
            let n = table.count(&chi);
            ensure!(n >= 1, "k={k} D={:?}: no module for character {chi}", d.words());
            covered += table.orbits().filter(|o| o.character == chi).map(|o| o.len() as u64).sum::<u64>();
        }
        ensure!(covered == total, "k={k} D={:?}: orbits cover {covered} of {total}", d.words());

        for r in &table.induced {
            let rep = r.orbit.representative();
            let brute = ok(stabilizer_brute(rep, d))?;
            ensure!(brute == r.orbit.stabilizer, "k={k} {rep}: stabilizer differs from direct fusion");
            ensure!(r.orbit.len() * brute.size() == d.size(), "k={k} {rep}: orbit-stabilizer");
            let expected = match (brute.size() == 1, k % 4) {
                (true, _) => (Regime::FreeOrbit, 1),
                (false, 0) => (Regime::FixedK0Mod4, brute.size() as u64),
                (false, 2) => (Regime::FixedK2Mod4, radical_size(&brute)),
                (false, _) => return Err(format!("k={k} odd with nontrivial stabilizer at {rep}")),
            };
            ensure!((r.regime, r.num_irreducibles) == expected, "k={k} {rep}: regime {:?}", r.regime);
            by_regime += expected.1;
        }
        let summed: u64 = table.counts().iter().map(|(_, n)| n).sum();
        ensure!(summed == by_regime, "k={k} D={:?}: Σ counts {summed} vs {by_regime}", d.words());
    }
    Ok(format!("{} Case A codes", codes.len()))
}

/// `|C ∩ C^⊥|` for a subgroup of `{0, k/2}^ℓ`, computed in `(Z_k)^ℓ`.
fn radical_size(c: &Code) -> u64 {
    let k = c.k() as u64;
    c.words()
        .iter()
        .filter(|x| {
            c.words().iter().all(|y| {
                x.entries().iter().zip(y.entries()).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % k == 0
            })
        })
        .count() as u64
}

/// Every word of `(Z_k)^ℓ`.
fn ambient(k: u32, ell: usize) -> Vec<Codeword> {
    let mut out = vec![Vec::new()];
    for _ in 0..ell {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..k as i64).map(move |a| [v.clone(), vec![a]].concat())).collect();
    }
    out.iter().map(|v| Codeword::new(k, v).unwrap()).collect()
}

fn weight_defect(xi: &Codeword, x: &IrrLabel) -> ModOne {
    ModOne::new(tensor_weight(&fuse(xi, x).unwrap()) - sc_ext_weight(xi) - tensor_weight(x))
}

fn criterion_6() -> Outcome {
    let mut n = 0u64;
    for k in 2..=6u32 {
        for p in 0..k as i64 {
            let m = SimpleCurrent::new(k, p).unwrap();
            for x in all_labels(k).unwrap() {
                let fused = sc_fuse(&m, &x).unwrap();
                let def = ModOne::new(pf_weight(&fused) - sc_weight(k, p) - pf_weight(&x));
                ensure!(def == pf_b(&m, &x).unwrap(), "k={k} p={p} {x}: b {def} vs closed form");
                // the weight formula on the other representative agrees
                let (i2, j2) = x.alternate();
                ensure!(pf_weight_raw(k, i2, j2 as i64) == pf_weight(&x), "k={k} {x}: weight not class invariant");
                n += 1;
            }
        }
        for ell in 1..=2usize {
            let labels = all_irr_labels(k, ell).unwrap();
            let words = ambient(k, ell);
            for xi in &words {
                for x in &labels {
                    let b = b_ext(xi, x).unwrap();
                    ensure!(b == weight_defect(xi, x), "k={k} ξ={xi} X={x}: closed form {b}");
                    n += 1;
                }
            }
            for xi in &words {
                for eta in &words {
                    let m_eta = IrrLabel::of_codeword(eta);
                    for x in &labels {
                        let lhs = b_ext(&xi.plus(eta), x).unwrap();
                        ensure!(lhs == b_ext(xi, x).unwrap() + b_ext(eta, x).unwrap(), "additivity in ξ at {xi},{eta},{x}");
                        let lhs = b_ext(xi, &fuse(eta, x).unwrap()).unwrap();
                        let rhs = b_ext(xi, &m_eta).unwrap() + b_ext(xi, x).unwrap();
                        ensure!(lhs == rhs, "additivity in X at {xi},{eta},{x}");
                        n += 2;
                    }
                }
            }
        }
    }
    for d in small_case_a_codes() {
        for xi in d.words() {
            for eta in d.words() {
                let b = b_ext(xi, &IrrLabel::of_codeword(eta)).unwrap();
                ensure!(b.is_zero(), "b(M_{xi}, M_{eta}) = {b} for D={:?}", d.words());
                n += 1;
            }
        }
    }
    Ok(format!("{n} identities, k=2..6, ℓ≤2"))
}

fn criterion_7() -> Outcome {
    let mut n = 0u64;
    let codes = small_case_a_codes();
    for d in &codes {
        let (k, ell) = (d.k(), d.ell());
        for x in all_irr_labels(k, ell).unwrap() {
            let r = ok(realize(&x, d))?;
            let v = x.mu_minus_two_nu();
            let trivial = d.words().iter().all(|xi| {
                xi.entries().iter().zip(v.entries()).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % k as u64 == 0
            });
            ensure!(r.dual_member == trivial, "k={k} D={:?} X={x}: dual {} vs trivial {trivial}", d.words(), r.dual_member);
            let by_vectors = d
                .generators()
                .iter()
                .all(|g| pairing_via_representatives(&ProductCoset::Pure(g.clone()), &r.coset).unwrap().is_zero());
            ensure!(by_vectors == r.dual_member, "k={k} X={x}: vector pairing disagrees");
            let ProductCoset::Tail { eta, delta } = &r.coset else {
                return Err("realize returned a pure coset".into());
            };
            for (f, (&e, &dr)) in x.factors().iter().zip(eta.entries().iter().zip(delta)) {
                ensure!(ok(locate_pf(f, dr))? == e, "k={k} {f}: locate_pf mismatch");
                let tail = ok(branch_tail(k, e as i64, dr))?;
                ensure!(tail.iter().any(|(_, y)| y == f), "k={k} {f} not in V_N({e},..{dr})");
            }
            n += 1;
        }
    }
    Ok(format!("{n} labels over {} codes", codes.len()))
}

fn criterion_8() -> Outcome {
    let mut codes = 0;
    let mut verdicts: BTreeMap<&'static str, u64> = BTreeMap::new();
    for k in [2u32, 6, 10] {
        for ell in 1..=2usize {
            for d in ok(all_codes(k, ell, 100_000))? {
                if d.case() != CodeCase::CaseB {
                    continue;
                }
                codes += 1;
                let even = ok(d.even_part())?;
                ensure!(2 * even.size() == d.size(), "k={k} D={:?}: |D0| = {}", d.words(), even.size());
                let half = Q::new(1.into(), 2.into());
                for w in d.words() {
                    let h = sc_ext_weight(w);
                    let expect_int = even.contains(w);
                    let ok_weight = if expect_int { h.is_integer() } else { (h - &half).is_integer() };
                    ensure!(ok_weight, "k={k} {w}: weight {} in the wrong class", sc_ext_weight(w));
                }
                let rep = ok(case_b_modules(&d))?;
                for r in &rep.records {
                    let p = &rep.even.induced[r.p_orbit].orbit;
                    let q_members: Vec<IrrLabel> =
                        p.members.iter().map(|x| fuse(&rep.shift, x).unwrap()).collect();
                    let disjoint = q_members.iter().all(|x| !p.members.contains(x));
                    let name = match r.verdict {
                        Verdict::Fused => {
                            ensure!(disjoint, "k={k} {}: Fused but orbits meet", r.p_rep);
                            "Fused"
                        }
                        Verdict::Split => {
                            ensure!(!disjoint && p.is_free(), "k={k} {}: Split without a free shared orbit", r.p_rep);
                            "Split"
                        }
                        Verdict::Indeterminate => {
                            ensure!(!disjoint && !p.is_free(), "k={k} {}: Indeterminate but decidable", r.p_rep);
                            "Indeterminate"
                        }
                    };
                    *verdicts.entry(name).or_insert(0) += 1;
                }
            }
        }
    }
    ensure!(codes > 0, "no Case B codes found");
    Ok(format!("{codes} Case B codes, verdicts {verdicts:?}"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 8] = [
        (1, "minimal norm closed form = oracle", Duration::from_secs(120), criterion_1),
        (2, "coset group structure", Duration::from_secs(10), criterion_2),
        (3, "branching weight congruence", Duration::from_secs(60), criterion_3),
        (4, "worked examples", Duration::from_secs(5), criterion_4),
        (5, "counting consistency", Duration::from_secs(120), criterion_5),
        (6, "b-map laws", Duration::from_secs(60), criterion_6),
        (7, "realization cross-check", Duration::from_secs(60), criterion_7),
        (8, "Case B suite", Duration::from_secs(30), criterion_8),
    ];
    let mut failed = 0;
    for (n, name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > budget => ("FAIL", format!("over time budget of {}s", budget.as_secs())),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("[{status}] criterion {n}: {name} ({:.2}s): {detail}", elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
