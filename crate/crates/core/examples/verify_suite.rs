//! Runs every reproduction check and prints one line per check.

use quotdt::verify::{run_suite, VerifyConfig};

fn main() -> quotdt::Result<()> {
    let results = run_suite("all", &VerifyConfig::default())?;
    for r in &results {
        println!("{:>2} {:<15} {} ({:.2?}) {}", r.id, r.name, if r.passed { "pass" } else { "FAIL" }, r.elapsed, r.detail);
    }
    if results.iter().any(|r| !r.passed) {
        std::process::exit(2);
    }
    Ok(())
}
