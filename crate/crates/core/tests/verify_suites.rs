use aks_core::verify::{run, Suite};

#[test]
fn every_shipped_suite_passes() {
    let checks = run(Suite::All, aks_core::sampling::DEFAULT_SEED);
    for c in &checks {
        println!("{c}");
    }
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
    assert!(failed.is_empty(), "{} checks failed", failed.len());
}
