use galois_loci::acceptance::{run_all, AcceptanceConfig};

#[test]
fn acceptance_suite() {
    let results = run_all(&AcceptanceConfig::default());
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
