//! Points of P² as centers for projecting the conic: those on the conic give
//! isomorphisms, every other point gives a degree-two quotient by an
//! involution. Reproduces the partition P² = P(E₁) ⊔ P(E_{Z/2}).
//!
//! Run with `cargo run --example conic_partition`.

use galois_loci::acceptance::{on_conic, partition_grid};
use galois_loci::galois::{LinearSystem, ProjectionCenter};
use galois_loci::oracle::{is_galois, OracleConfig};
use galois_loci::Coef;

fn main() -> galois_loci::Result<()> {
    let v2 = LinearSystem::complete(2)?;
    let cfg = OracleConfig::default();
    let (mut on, mut off) = (0, 0);
    for z in partition_grid() {
        let center = ProjectionCenter::spanned_by(2, &[z.to_vec()])?;
        let r = is_galois(&center, &v2, &cfg)?;
        let expected = if on_conic(&z) { 1 } else { 2 };
        assert!(r.galois && r.degree == expected, "{z:?}: {r:?}");
        if on_conic(&z) {
            on += 1;
            println!("on the conic: [{}]", z.iter().map(Coef::to_string).collect::<Vec<_>>().join(" : "));
        } else {
            off += 1;
        }
    }
    println!("{on} centers on the conic (degree 1), {off} off it (Galois of degree 2)");
    Ok(())
}
