use super::{OrbitRow, Report};
use std::fmt::Write;

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
    };
    line(out, header.to_vec());
    line(out, width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect());
    for row in rows {
        line(out, row.iter().map(|s| s.as_str()).collect());
    }
}

fn orbit_table(out: &mut String, rows: &[OrbitRow]) {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|o| {
            vec![
                o.representative.clone(),
                o.size.to_string(),
                o.stabilizer.to_string(),
                o.character.clone(),
                o.min_weight.clone(),
                o.regime.clone(),
                o.irreducibles.to_string(),
                o.multiplicity.to_string(),
            ]
        })
        .collect();
    table(out, &["orbit rep", "size", "|stab|", "character", "min weight", "regime", "irreducibles", "mult"], &body);
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Aligned plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let i = &r.input;
    let gens = if i.generators.is_empty() { "none".to_string() } else { i.generators.join(" ") };
    let _ = writeln!(out, "k = {}, ell = {}, generators: {}", i.k, i.ell, gens);
    let _ = writeln!(out, "central charge: {}", r.central_charge);

    if let Some(c) = &r.classification {
        let _ = writeln!(out, "\nclassification: {}", c.case);
        let _ = writeln!(out, "  |D| = {}", c.size);
        if let Some(e) = c.even_size {
            let _ = writeln!(out, "  |D0| = {e}");
        }
        let rows: Vec<Vec<String>> =
            c.codewords.iter().zip(&c.codeword_weights).map(|(w, h)| vec![w.clone(), h.clone()]).collect();
        table(&mut out, &["codeword", "h(M_xi)"], &rows);
    }

    if let Some(l) = &r.lattice {
        if let Some(cl) = &l.code_lattice {
            let _ = writeln!(out, "\ncode lattice: {}, rank {}", cl.parity, cl.rank);
            let _ = writeln!(out, "  discriminant order: {}", cl.discriminant_order);
            if let Some(inv) = &cl.discriminant_invariants {
                let _ = writeln!(out, "  discriminant group: Z/{}", if inv.is_empty() { "1".into() } else { inv.join(" x Z/") });
            }
        }
        if let Some(rows) = &l.min_norms {
            let _ = writeln!(out, "\nminimal norms of N(j,a)");
            let body: Vec<Vec<String>> =
                rows.iter().map(|n| vec![n.coset.clone(), n.min_norm.clone(), n.count.to_string()]).collect();
            table(&mut out, &["coset", "min norm", "count"], &body);
        }
        if let Some(b) = &l.branch {
            let _ = writeln!(out, "\nbranching of V_N({})", b.coset);
            let body: Vec<Vec<String>> = b
                .components
                .iter()
                .map(|c| {
                    let t: Vec<String> = c.tuple.iter().map(|x| x.to_string()).collect();
                    vec![t.join(","), c.virasoro.join(" "), c.parafermion.clone(), c.weight.clone()]
                })
                .collect();
            table(&mut out, &["tuple", "virasoro (r,s)", "parafermion", "weight"], &body);
        }
    }

    if let Some(rows) = &r.orbits {
        let _ = writeln!(out, "\norbits ({})", rows.len());
        orbit_table(&mut out, rows);
    }
    if let Some(rows) = &r.counts {
        let _ = writeln!(out, "\nirreducible modules per character");
        let body: Vec<Vec<String>> = rows
            .iter()
            .map(|c| {
                let kind = if c.trivial { "untwisted" } else { "twisted" };
                vec![c.character.clone(), kind.to_string(), c.orbits.to_string(), c.irreducibles.to_string()]
            })
            .collect();
        table(&mut out, &["character", "kind", "orbits", "irreducibles"], &body);
    }
    if let Some(b) = &r.case_b {
        let _ = writeln!(out, "\nCase B: |D0| = {}, shift {}", b.even_size, b.shift);
        let _ = writeln!(out, "\nD0 orbits ({})", b.even_orbits.len());
        orbit_table(&mut out, &b.even_orbits);
        let _ = writeln!(out, "\npairs P, Q = D1 x P");
        let body: Vec<Vec<String>> = b
            .pairs
            .iter()
            .map(|p| vec![p.p.clone(), p.q.clone(), p.verdict.clone(), p.even_irreducibles.to_string(), opt(&p.md_modules)])
            .collect();
        table(&mut out, &["P rep", "Q rep", "verdict", "M_D0 irr", "M_D irr"], &body);
        let _ = writeln!(out, "  irreducible M_D-modules: {}", opt(&b.md_modules));
    }
    if let Some(checks) = &r.verify {
        let _ = writeln!(out, "\nverification");
        let body: Vec<Vec<String>> = checks
            .iter()
            .map(|c| {
                vec![
                    c.property.clone(),
                    c.scope.clone(),
                    c.checked.to_string(),
                    if c.passed { "pass".into() } else { "FAIL".into() },
                    opt(&c.counterexample),
                ]
            })
            .collect();
        table(&mut out, &["property", "scope", "cases", "result", "counterexample"], &body);
    }
    out
}
