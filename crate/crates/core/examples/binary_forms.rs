//! Exact arithmetic on binary forms: products, gcds, Möbius substitution and
//! numeric roots.
//!
//! Run with `cargo run --example binary_forms`.

use galois_loci::form::BinaryForm;
use galois_loci::roots::roots_numeric;
use galois_loci::{Coef, Matrix};

fn main() -> galois_loci::Result<()> {
    // x³ and xy² share the factor x
    let f = BinaryForm::from_ints(&[1, 0, 0, 0]);
    let g = BinaryForm::from_ints(&[0, 0, 1, 0]);
    println!("gcd({f}, {g}) = {}", f.gcd(&g)?);

    // (x − y)² by substituting (x, y) ↦ (x − y, y) into x²
    let shear = Matrix::from_int_rows(&[[1, -1], [0, 1]]);
    let sq = BinaryForm::from_ints(&[1, 0, 0]);
    println!("{sq} after x ↦ x − y: {}", sq.compose(&shear)?);

    // x³y(x + y)² has squarefree part xy(x + y)
    let h = BinaryForm::from_ints(&[0, 1, 0, 0])
        .mul(&BinaryForm::from_ints(&[1, 1]).pow(2))
        .mul(&BinaryForm::x());
    println!("squarefree part of {h}: {}", h.squarefree_part()?);

    // x⁴ + y⁴ over Q(ζ₈): the roots are the primitive eighth roots of −1
    let quartic = BinaryForm::new(vec![Coef::one(), Coef::zero(), Coef::zero(), Coef::zero(), Coef::one()]);
    for p in roots_numeric(&quartic) {
        let z = p.z().expect("finite root");
        println!("  root of {quartic}: {:+.6} {:+.6}i", z.re, z.im);
    }
    Ok(())
}
