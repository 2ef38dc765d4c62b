//! The finite subgroups of PGL₂: generators, invariant pairs and numeric
//! recognition of a group from its elements.
//!
//! Run with `cargo run --example group_catalog`.

use galois_loci::groups::{
    catalog_kinds, classify_group, conjugated_generators, conjugated_pair, generate_group, normalizer_dim,
    standard_generators, standard_invariant_pair, verify_invariance, GroupKind, GroupSpec, MoebiusElement,
};

fn main() -> galois_loci::Result<()> {
    println!("{:<14} {:>5} {:>8} {:>10} {:>9}", "kind", "order", "pair deg", "normalizer", "invariant");
    for kind in catalog_kinds(12) {
        let pair = standard_invariant_pair(kind);
        let ok = verify_invariance(&pair, &standard_generators(kind));
        println!(
            "{:<14} {:>5} {:>8} {:>10} {:>9}",
            kind.to_string(),
            kind.order(),
            pair.degree(),
            normalizer_dim(kind),
            ok
        );
    }

    // a conjugate of the Klein four-group keeps its invariants, transported by θ
    let theta = MoebiusElement::from_ints([[1, 1], [0, 1]])?;
    let spec = GroupSpec::conjugated(GroupKind::Dihedral(2), theta);
    let pair = conjugated_pair(&spec)?;
    println!("θ D₂ θ⁻¹ invariants: A = {}, B = {}", pair.a, pair.b);
    println!("invariant under conjugated generators: {}", verify_invariance(&pair, &conjugated_generators(&spec)));

    // the closure of the icosahedral generators, recognized from floating-point matrices
    let elements = generate_group(&standard_generators(GroupKind::Icosahedral), 120);
    let numeric: Vec<_> = elements.iter().map(MoebiusElement::to_complex).collect();
    println!("{} elements classify as {}", elements.len(), classify_group(&numeric, 1e-6)?);
    Ok(())
}
