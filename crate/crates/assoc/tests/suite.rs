use std::time::Instant;

use okamoto_algebra::Exec;
use okamoto_assoc::run_checks;

#[test]
fn every_check_passes() {
    let t = Instant::now();
    let checks = run_checks(Exec::Parallel).all();
    for c in &checks {
        println!("{c}");
    }
    println!("{} checks in {:?}", checks.len(), t.elapsed());
    for c in &checks {
        assert!(c.pass, "{c}");
    }
}
