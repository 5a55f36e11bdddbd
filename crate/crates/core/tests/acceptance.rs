use std::process::ExitCode;

use quatlat::repro::CRITERIA;

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let r = c.run();
        println!("{}", r.summary());
        if !r.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
