//! Run a job and print the JSON report.

use pfkit::report::{run, Analysis, JobSpec, Report};

pub fn run_example() -> pfkit::Result<()> {
    let job = JobSpec::new(5, 2, vec![vec![1, 2]]).with_analyses(&[Analysis::Classify, Analysis::Modules]);
    let report = run(&job)?;
    let json = report.to_json();
    assert_eq!(Report::from_json(&json)?.to_json(), json);
    println!("{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> pfkit::Result<()> {
    run_example()
}
