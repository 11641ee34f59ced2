//! Acceptance gate: one line per criterion, exact tolerances, nonzero exit on
//! any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kleingeo::suite::{self, CriterionOutcome, SuiteOptions};
use kleingeo::Result;

type Runner = fn(&SuiteOptions) -> Result<CriterionOutcome>;

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    // (runner, wall-clock budget)
    let criteria: [(Runner, u64); 8] = [
        (suite::s6_application, 10),
        (suite::projective_brute, 35 * 60),
        (suite::projective_sampled, 5 * 60),
        (suite::collinearity, 60),
        (suite::field_automorphism, 2 * 60),
        (suite::affine, 5 * 60),
        (suite::artin, 60),
        (suite::structural, 35 * 60),
    ];
    let mut failures = 0;
    for (id, (run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run(&opts);
        let elapsed = start.elapsed();
        let in_budget = elapsed <= Duration::from_secs(budget);
        match result {
            Ok(outcome) => {
                let ok = outcome.passed && in_budget;
                failures += !ok as usize;
                println!(
                    "{} criterion {}: {} ({} checks, {:.2?} of {}s budget)",
                    if ok { "PASS" } else { "FAIL" },
                    outcome.id,
                    outcome.title,
                    outcome.checks.len(),
                    elapsed,
                    budget
                );
                for c in outcome.checks.iter().filter(|c| !c.passed) {
                    println!("     failed {}: {}", c.name, c.detail);
                }
            }
            Err(e) => {
                failures += 1;
                println!("FAIL criterion {}: error {e}", id + 1);
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
