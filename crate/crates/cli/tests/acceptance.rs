use std::process::ExitCode;

use okamoto_cli::acceptance::criteria;
use okamoto_cli::Options;

fn main() -> ExitCode {
    let results = criteria(Options::default());
    for c in &results {
        println!("{}", c.line());
    }
    let failed: Vec<usize> = results.iter().filter(|c| !c.pass()).map(|c| c.number).collect();
    if results.len() != 11 || !failed.is_empty() {
        println!("acceptance: FAIL {failed:?}");
        return ExitCode::FAILURE;
    }
    println!("acceptance: all {} criteria pass", results.len());
    ExitCode::SUCCESS
}
