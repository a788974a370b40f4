use clap::{Parser, ValueEnum};
use pfkit::report::{exit_code, render_text, run, Analysis, Format, JobSpec, EXIT_VERIFY_FAILED};
use pfkit::Error;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AnalysisArg {
    Classify,
    Lattice,
    Modules,
    Branch,
    Verify,
}

impl From<AnalysisArg> for Analysis {
    fn from(a: AnalysisArg) -> Self {
        match a {
            AnalysisArg::Classify => Analysis::Classify,
            AnalysisArg::Lattice => Analysis::Lattice,
            AnalysisArg::Modules => Analysis::Modules,
            AnalysisArg::Branch => Analysis::Branch,
            AnalysisArg::Verify => Analysis::Verify,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Invariants of the extension M_D of parafermion algebras by a Z_k-code D.
#[derive(Parser, Debug)]
#[command(name = "pfkit", version)]
struct Cli {
    /// Level k >= 2.
    #[arg(long)]
    k: u32,
    /// Code length.
    #[arg(long, default_value_t = 1)]
    ell: usize,
    /// Generator row, comma separated (repeatable).
    #[arg(long = "gen", value_name = "ROW")]
    gens: Vec<String>,
    /// Analysis to run (repeatable); defaults to classify.
    #[arg(long, value_enum)]
    analysis: Vec<AnalysisArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Coset j:bits for the branch analysis.
    #[arg(long)]
    coset: Option<String>,
    #[arg(long, default_value_t = pfkit::modules::DEFAULT_ORBIT_CAP)]
    orbit_cap: u64,
    #[arg(long, default_value_t = 6)]
    verify_max_k: u32,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

fn parse_row(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad generator entry {x:?} in {s:?}"))))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("PFKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let gens = match cli.gens.iter().map(|g| parse_row(g)).collect::<Result<Vec<_>, _>>() {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let mut job = JobSpec::new(cli.k, cli.ell, gens);
    if !cli.analysis.is_empty() {
        job.analyses = cli.analysis.into_iter().map(Analysis::from).collect();
    }
    job.format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    job.coset = cli.coset;
    job.orbit_cap = cli.orbit_cap;
    job.verify_max_k = cli.verify_max_k;

    let report = match run(&job) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let body = match job.format {
        Format::Text => render_text(&report),
        Format::Json => report.to_json(),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{body}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED as u8)
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e) as u8)
}
