//! The families of Galois subspaces for complete and incomplete systems, and
//! the factorization of a Galois projection through an intermediate one.
//!
//! Run with `cargo run --example families`.

use galois_loci::families::{enumerate_families, intermediate_factorization, SamplingOptions};
use galois_loci::galois::{GaloisSection, LinearSystem};
use galois_loci::groups::{conjugated_pair, GroupKind, GroupSpec};
use galois_loci::BinaryForm;

fn main() -> galois_loci::Result<()> {
    let opts = SamplingOptions::default();
    for d in 1..=6 {
        let v = LinearSystem::complete(d)?;
        let rows: Vec<String> = enumerate_families(&v, &opts)
            .iter()
            .map(|r| format!("{} ({}+{}={})", r.kind, r.fiber_dim, r.base_dim, r.total_dim))
            .collect();
        println!("d = {d}: {}", rows.join(", "));
    }

    let v = LinearSystem::new(vec![
        BinaryForm::from_ints(&[1, 0, 0, 0]),
        BinaryForm::from_ints(&[0, 1, 0, 0]),
        BinaryForm::from_ints(&[0, 0, 0, 1]),
    ])?;
    println!("span{{x³, x²y, y³}}:");
    for r in enumerate_families(&v, &opts) {
        println!("  {}", serde_json::to_string(&r).expect("serializable"));
    }

    // a cyclic(2) quotient of the twisted cubic through the conic
    let v3 = LinearSystem::complete(3)?;
    let pair = conjugated_pair(&GroupSpec::standard(GroupKind::Cyclic(2)))?;
    let s = GaloisSection::new(&pair, BinaryForm::x(), &v3)?;
    let rep = intermediate_factorization(&pair, &s, &v3)?;
    println!("intermediate factorization holds: {}, disjoint: {}", rep.identity_holds, rep.intermediate_disjoint);
    Ok(())
}
