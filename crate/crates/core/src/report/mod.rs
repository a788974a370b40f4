//! Jobs and reports: run a set of analyses on one code and collect the results
//! as plain serializable data.

mod text;
pub mod verify;

pub use text::render_text;
pub use verify::Check;

use crate::branching::branch;
use crate::codes::{span, Classification, Code, CodeCase, Codeword};
use crate::error::{Error, Result};
use crate::lattice::{all_canonical, build_code_lattice, build_code_lattice_verified, min_norm, ORACLE_MAX_K};
use crate::modules::{case_b_modules_with_cap, ModuleTable, OrbitRecord, InducedReport, DEFAULT_ORBIT_CAP};
use crate::parafermion::central_charge;
use crate::rational::{fmt_q, q};
use serde::{Deserialize, Serialize};

/// Largest `k` for which the per-coset minimal-norm table is listed.
pub const NORM_TABLE_MAX_K: u32 = 10;

/// Largest rank for which the lattice discriminant is recomputed from a Gram matrix.
const GRAM_MAX_RANK: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Analysis {
    Classify,
    Lattice,
    Modules,
    Branch,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub k: u32,
    pub ell: usize,
    pub generators: Vec<Vec<i64>>,
    pub analyses: Vec<Analysis>,
    pub format: Format,
    pub orbit_cap: u64,
    pub verify_max_k: u32,
    /// `j:bits` selector for the branching table.
    pub coset: Option<String>,
}

impl JobSpec {
    pub fn new(k: u32, ell: usize, generators: Vec<Vec<i64>>) -> Self {
        JobSpec {
            k,
            ell,
            generators,
            analyses: vec![Analysis::Classify],
            format: Format::Text,
            orbit_cap: DEFAULT_ORBIT_CAP,
            verify_max_k: 6,
            coset: None,
        }
    }

    pub fn with_analyses(mut self, analyses: &[Analysis]) -> Self {
        self.analyses = analyses.to_vec();
        self
    }

    fn wants(&self, a: Analysis) -> bool {
        self.analyses.contains(&a)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::InvalidModulus(self.k));
        }
        if self.ell == 0 {
            return Err(Error::invalid("code length ℓ must be at least 1"));
        }
        if let Some(g) = self.generators.iter().find(|g| g.len() != self.ell) {
            return Err(Error::invalid(format!("generator {g:?} does not have length ℓ = {}", self.ell)));
        }
        if self.verify_max_k < 2 {
            return Err(Error::invalid("verify-max-k must be at least 2"));
        }
        Ok(())
    }

    fn code(&self) -> Result<Code> {
        let gens = self
            .generators
            .iter()
            .map(|g| Codeword::new(self.k, g))
            .collect::<Result<Vec<_>>>()?;
        span(&gens, self.k, self.ell)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub k: u32,
    pub ell: usize,
    pub generators: Vec<String>,
    pub analyses: Vec<Analysis>,
    pub orbit_cap: u64,
    pub verify_max_k: u32,
    pub coset: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationOut {
    pub case: String,
    pub size: usize,
    pub codewords: Vec<String>,
    /// `|D⁰|` for Case B codes.
    pub even_size: Option<usize>,
    /// `h(M_ξ)` for each codeword.
    pub codeword_weights: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormRow {
    pub coset: String,
    pub min_norm: String,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeLatticeOut {
    pub parity: String,
    pub rank: usize,
    pub discriminant_order: String,
    pub discriminant_invariants: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeOut {
    pub code_lattice: Option<CodeLatticeOut>,
    /// Minimal norms of the cosets of `N` in `N°` for one factor.
    pub min_norms: Option<Vec<NormRow>>,
    pub branch: Option<BranchOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRow {
    pub tuple: Vec<u32>,
    pub virasoro: Vec<String>,
    pub parafermion: String,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchOut {
    pub coset: String,
    pub components: Vec<BranchRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub representative: String,
    pub size: usize,
    pub stabilizer: usize,
    pub character: String,
    pub min_weight: String,
    pub regime: String,
    pub irreducibles: u64,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub character: String,
    pub trivial: bool,
    pub orbits: usize,
    pub irreducibles: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub p: String,
    pub q: String,
    pub verdict: String,
    pub even_irreducibles: u64,
    pub md_modules: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseBOut {
    pub even_size: usize,
    pub shift: String,
    pub even_orbits: Vec<OrbitRow>,
    pub pairs: Vec<PairRow>,
    /// Total irreducible `M_D`-modules when every verdict is determinate.
    pub md_modules: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: Input,
    pub classification: Option<ClassificationOut>,
    pub central_charge: String,
    pub lattice: Option<LatticeOut>,
    pub orbits: Option<Vec<OrbitRow>>,
    pub counts: Option<Vec<CountRow>>,
    pub case_b: Option<CaseBOut>,
    pub verify: Option<Vec<Check>>,
}

impl Report {
    /// Whether every verification check passed (true when none ran).
    pub fn passed(&self) -> bool {
        self.verify.as_ref().map_or(true, |v| v.iter().all(|c| c.passed))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::invalid(format!("report JSON: {e}")))
    }
}

/// CLI exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_)
        | Error::InvalidModulus(_)
        | Error::Mismatch(_)
        | Error::Parity(_)
        | Error::NotPerfectSquare(_) => 2,
        Error::Unsupported(_) => 3,
        Error::CapExceeded { .. } | Error::KTooLarge { .. } => 4,
        Error::Internal(_) => 1,
    }
}

pub const EXIT_VERIFY_FAILED: i32 = 5;

fn orbit_row(r: &InducedReport) -> OrbitRow {
    let o: &OrbitRecord = &r.orbit;
    OrbitRow {
        representative: o.representative().to_string(),
        size: o.len(),
        stabilizer: o.stabilizer.size(),
        character: o.character.to_string(),
        min_weight: fmt_q(&o.min_weight),
        regime: r.regime.to_string(),
        irreducibles: r.num_irreducibles,
        multiplicity: r.multiplicity,
    }
}

fn count_rows(table: &ModuleTable) -> Vec<CountRow> {
    table
        .counts()
        .into_iter()
        .map(|(c, n)| CountRow {
            trivial: c.is_trivial(),
            orbits: table.orbits().filter(|o| o.character == c).count(),
            character: c.to_string(),
            irreducibles: n,
        })
        .collect()
}

fn parse_raw_coset(k: u32, s: &str) -> Result<(i64, u64)> {
    // validates the same syntax as the canonical parser
    crate::lattice::CosetLabel::parse(k, s)?;
    let (j, bits) = s.split_once(':').expect("checked by parse");
    let j: i64 = j.trim().parse().expect("checked by parse");
    let a = bits.trim().chars().enumerate().fold(0u64, |m, (p, c)| if c == '1' { m | 1 << p } else { m });
    Ok((j, a))
}

/// Runs every requested analysis. Analyses that need a lattice or module
/// theory fail with [`Error::Unsupported`] on unsupported codes.
pub fn run(job: &JobSpec) -> Result<Report> {
    job.validate()?;
    let d = job.code()?;
    let k = job.k;
    let c = central_charge(k)? * q(job.ell as i64, 1);

    let mut analyses = job.analyses.clone();
    analyses.sort();
    analyses.dedup();
    let input = Input {
        k,
        ell: job.ell,
        generators: d.generators().iter().map(|g| g.to_string()).collect(),
        analyses,
        orbit_cap: job.orbit_cap,
        verify_max_k: job.verify_max_k,
        coset: job.coset.clone(),
    };

    let classification = job.wants(Analysis::Classify).then(|| ClassificationOut {
        case: d.case().to_string(),
        size: d.size(),
        codewords: d.words().iter().map(|w| w.to_string()).collect(),
        even_size: match d.classification() {
            Classification::CaseB { even, .. } => Some(even.len()),
            _ => None,
        },
        codeword_weights: d.words().iter().map(|w| fmt_q(&crate::modules::sc_ext_weight(w))).collect(),
    });

    let needs_theory = job.wants(Analysis::Lattice) || job.wants(Analysis::Modules);
    if needs_theory && d.case() == CodeCase::Unsupported {
        return Err(Error::Unsupported(
            "the code is neither Case A nor Case B, so M_D is not covered".into(),
        ));
    }

    let mut lattice = if job.wants(Analysis::Lattice) {
        let rank = job.ell * (k as usize - 1);
        let l = if rank <= GRAM_MAX_RANK { build_code_lattice_verified(&d)? } else { build_code_lattice(&d)? };
        let min_norms = if k <= NORM_TABLE_MAX_K {
            Some(
                all_canonical(k)?
                    .iter()
                    .map(|x| {
                        let m = min_norm(x);
                        NormRow { coset: x.to_string(), min_norm: fmt_q(&m.value), count: m.count }
                    })
                    .collect(),
            )
        } else {
            None
        };
        Some(LatticeOut {
            code_lattice: Some(CodeLatticeOut {
                parity: format!("{:?}", l.parity).to_lowercase(),
                rank: l.rank,
                discriminant_order: l.discriminant_order.to_string(),
                discriminant_invariants: l
                    .discriminant_invariants
                    .map(|v| v.iter().map(|x| x.to_string()).collect()),
            }),
            min_norms,
            branch: None,
        })
    } else {
        None
    };

    let (mut orbits, mut counts, mut case_b) = (None, None, None);
    if job.wants(Analysis::Modules) {
        match d.case() {
            CodeCase::CaseA => {
                let table = ModuleTable::with_cap(&d, job.orbit_cap)?;
                orbits = Some(table.induced.iter().map(orbit_row).collect());
                counts = Some(count_rows(&table));
            }
            CodeCase::CaseB => {
                let rep = case_b_modules_with_cap(&d, job.orbit_cap)?;
                let pairs: Vec<PairRow> = rep
                    .records
                    .iter()
                    .map(|r| PairRow {
                        p: r.p_rep.to_string(),
                        q: r.q_rep.to_string(),
                        verdict: r.verdict.to_string(),
                        even_irreducibles: r.even_irreducibles,
                        md_modules: r.md_modules,
                    })
                    .collect();
                let total = pairs.iter().map(|p| p.md_modules).sum::<Option<u64>>();
                case_b = Some(CaseBOut {
                    even_size: rep.even.code.size(),
                    shift: rep.shift.to_string(),
                    even_orbits: rep.even.induced.iter().map(orbit_row).collect(),
                    pairs,
                    md_modules: total,
                });
            }
            CodeCase::Unsupported => unreachable!("rejected above"),
        }
    }

    if job.wants(Analysis::Branch) {
        let sel = job.coset.clone().unwrap_or_else(|| format!("0:{}", "0".repeat(k as usize)));
        let (j, a) = parse_raw_coset(k, &sel)?;
        let components = branch(k, j, a)?
            .into_iter()
            .map(|c| BranchRow {
                tuple: c.tuple,
                virasoro: c.virasoro.iter().map(|v| v.to_string()).collect(),
                parafermion: c.pf.to_string(),
                weight: fmt_q(&c.weight),
            })
            .collect();
        lattice.get_or_insert(LatticeOut { code_lattice: None, min_norms: None, branch: None }).branch =
            Some(BranchOut { coset: sel, components });
    }

    let verify = if job.wants(Analysis::Verify) {
        let max_k = job.verify_max_k.min(ORACLE_MAX_K);
        let mut checks = vec![
            verify::check_min_norms(max_k)?,
            verify::check_coset_group(max_k)?,
            verify::check_branch_weights(max_k)?,
        ];
        if d.case() != CodeCase::Unsupported {
            checks.extend(verify::check_code(&d, job.orbit_cap)?);
        }
        Some(checks)
    } else {
        None
    };

    Ok(Report {
        input,
        classification,
        central_charge: fmt_q(&c),
        lattice,
        orbits,
        counts,
        case_b,
        verify,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let r = run(&JobSpec::new(4, 1, vec![vec![2]])).unwrap();
        assert_eq!(r.classification.as_ref().unwrap().case, "CaseA");
        assert_eq!(r.central_charge, "1/1");
        let r = run(&JobSpec::new(6, 1, vec![vec![3]])).unwrap();
        assert_eq!(r.classification.as_ref().unwrap().case, "CaseB");
        assert_eq!(r.central_charge, "5/4");
        let r = run(&JobSpec::new(9, 1, vec![vec![3]])).unwrap();
        assert_eq!(r.classification.as_ref().unwrap().case, "CaseA");
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let job = JobSpec::new(4, 1, vec![vec![2]]).with_analyses(&[
            Analysis::Classify,
            Analysis::Lattice,
            Analysis::Modules,
            Analysis::Branch,
        ]);
        let a = run(&job).unwrap().to_json();
        let b = run(&job).unwrap().to_json();
        assert_eq!(a, b);
        assert_eq!(Report::from_json(&a).unwrap().to_json(), a);
    }

    #[test]
    fn unsupported_code_is_rejected_for_lattice() {
        let job = JobSpec::new(4, 1, vec![vec![1]]).with_analyses(&[Analysis::Lattice]);
        let e = run(&job).unwrap_err();
        assert_eq!(exit_code(&e), 3);
        let job = JobSpec::new(4, 1, vec![vec![1]]);
        assert_eq!(run(&job).unwrap().classification.unwrap().case, "Unsupported");
    }

    #[test]
    fn bad_generator_length() {
        let e = run(&JobSpec::new(4, 2, vec![vec![2]])).unwrap_err();
        assert_eq!(exit_code(&e), 2);
    }
}
