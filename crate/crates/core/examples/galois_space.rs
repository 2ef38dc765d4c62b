//! Galois sections and the centers they determine: from a group and a section
//! `s` to a codimension-two center, its Plücker point, and where it meets the
//! curve.
//!
//! Run with `cargo run --example galois_space`.

use galois_loci::form::BinaryForm;
use galois_loci::galois::{center_from_section, galois_space, meets_curve, plucker, GaloisSection, LinearSystem};
use galois_loci::groups::{conjugated_pair, GroupKind, GroupSpec, MoebiusElement};

fn main() -> galois_loci::Result<()> {
    let v3 = LinearSystem::complete(3)?;
    let spec = GroupSpec::standard(GroupKind::Cyclic(2));
    let pair = conjugated_pair(&spec)?;
    let space = galois_space(&pair, &v3);
    println!("Galois space of cyclic(2) in the complete cubic system: {} forms", space.len());
    for s in &space {
        println!("  {s}");
    }

    // s = x gives the center spanned by x³ and xy², which meets the curve at [0 : 1]
    let s = GaloisSection::new(&pair, BinaryForm::x(), &v3)?;
    let center = center_from_section(&pair, &s, &v3)?;
    println!("center pencil:\n{}", serde_json::to_string(&center).expect("serializable"));
    println!("Plücker minors: {:?}", plucker(&center)?.minors.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("meets the curve at: {}", serde_json::to_string(&meets_curve(&center, &v3)?).expect("serializable"));

    // a smaller system only admits sections whose products stay inside it
    let v = LinearSystem::new(vec![
        BinaryForm::from_ints(&[1, 0, 0, 0]),
        BinaryForm::from_ints(&[0, 1, 0, 0]),
        BinaryForm::from_ints(&[0, 0, 0, 1]),
    ])?;
    let inside = galois_space(&pair, &v);
    println!("inside span{{x³, x²y, y³}}: {}", inside.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    match GaloisSection::new(&pair, BinaryForm::x(), &v) {
        Ok(_) => println!("x is a section"),
        Err(e) => println!("x is rejected: {e}"),
    }

    // conjugating the group moves the center
    let shear = GroupSpec::conjugated(GroupKind::Cyclic(2), MoebiusElement::from_ints([[1, 1], [0, 1]])?);
    let pair = conjugated_pair(&shear)?;
    let v2 = LinearSystem::complete(2)?;
    let one = GaloisSection::new(&pair, BinaryForm::from_ints(&[1]), &v2)?;
    println!(
        "sheared cyclic(2), s = 1: {}",
        serde_json::to_string(&center_from_section(&pair, &one, &v2)?).expect("serializable")
    );
    Ok(())
}
