//! One PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;

fn main() -> ExitCode {
    let outcomes = qhm::verify::run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
