//! The group-blind Galois test: compose a projection with the rational normal
//! curve and search for every Möbius map preserving the fibers.
//!
//! Run with `cargo run --example deck_oracle`.

use galois_loci::galois::{center_from_section, GaloisSection, LinearSystem, ProjectionCenter};
use galois_loci::groups::{conjugated_pair, GroupKind, GroupSpec, MoebiusElement};
use galois_loci::oracle::{compose_projection, deck_transformations, is_galois, OracleConfig};
use galois_loci::{sample, BinaryForm, Matrix};

fn main() -> galois_loci::Result<()> {
    let cfg = OracleConfig::default();

    // a quartic built from a conjugated Klein four-group
    let v4 = LinearSystem::complete(4)?;
    let theta = MoebiusElement::from_ints([[1, 1], [-2, 2]])?;
    let pair = conjugated_pair(&GroupSpec::conjugated(GroupKind::Dihedral(2), theta))?;
    let s = GaloisSection::new(&pair, BinaryForm::from_ints(&[1]), &v4)?;
    let center = center_from_section(&pair, &s, &v4)?;
    let f = compose_projection(&center, &v4)?;
    println!("f = [{} : {}]", f.p(), f.q());
    let deck = deck_transformations(&f, &cfg)?;
    println!("targets: {:?}", deck.targets.iter().map(ToString::to_string).collect::<Vec<_>>());
    for el in &deck.elements {
        let exact = el.exact.as_ref().map(|m| m.matrix().to_string()).unwrap_or_else(|| "-".into());
        println!("  residual {:.2e}  exact {exact}", el.residual);
    }
    println!("report: {}", serde_json::to_string(&is_galois(&center, &v4, &cfg)?).expect("serializable"));

    // random quartic centers are almost never Galois
    let mut rng = sample::rng(3);
    for _ in 0..3 {
        let c = sample::center(&mut rng, 4);
        let r = is_galois(&c, &v4, &cfg)?;
        println!("random center: galois {} with {} of {} deck elements", r.galois, r.deck_order, r.degree);
    }

    // projecting the conic from [0 : 1 : 0] is the quotient by x ↦ −x
    let v2 = LinearSystem::complete(2)?;
    let off = ProjectionCenter::new(2, Matrix::from_int_rows(&[[1, 0, 0], [0, 0, 1]]))?;
    println!("conic from [0:1:0]: {}", serde_json::to_string(&is_galois(&off, &v2, &cfg)?).expect("serializable"));
    Ok(())
}
