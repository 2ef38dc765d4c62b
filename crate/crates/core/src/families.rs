//! Families of Galois subspaces: one per catalog group `G` with `|G| ≤ d`,
//! fibered over the conjugates `θGθ⁻¹`, plus the factorization checks that
//! tie a linear projection to a quotient map.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::form::{multiplication_matrix, BinaryForm};
use crate::galois::{center_from_section, galois_space, GaloisSection, LinearSystem, ProjectionCenter};
use crate::groups::{
    catalog_kinds, conjugated_pair, normalizer_dim, GroupKind, GroupSpec, InvariantPair, MoebiusElement,
};
use crate::matrix::Matrix;
use crate::sample;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    #[serde(serialize_with = "ser_kind")]
    pub kind: GroupKind,
    /// Group order.
    pub m: usize,
    /// Projective fiber dimension; `-1` when every sampled fiber was empty.
    pub fiber_dim: i64,
    pub base_dim: i64,
    pub total_dim: i64,
    pub disjoint_from_curve: bool,
    pub fiber_dim_may_vary: bool,
}

fn ser_kind<S: Serializer>(k: &GroupKind, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&k.to_string())
}

/// How fibers over a non-complete system are sampled.
#[derive(Clone, Copy, Debug)]
pub struct SamplingOptions {
    /// Random conjugators tried in addition to the identity.
    pub conjugators: usize,
    pub seed: u64,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions {
            conjugators: 8,
            seed: 0,
        }
    }
}

fn base_dim(kind: GroupKind) -> i64 {
    3 - normalizer_dim(kind) as i64
}

/// One record per catalog kind of order at most `d`, in catalog order.
///
/// For a complete system the fiber over every conjugate is `P^{d−m}`. For a
/// smaller system the fiber dimension is observed at the identity and at
/// random conjugates, and `fiber_dim_may_vary` is set when they disagree.
pub fn enumerate_families(system: &LinearSystem, opts: &SamplingOptions) -> Vec<FamilyRecord> {
    let d = system.degree();
    let kinds = catalog_kinds(d);
    if system.is_complete() {
        return kinds
            .into_iter()
            .map(|kind| {
                let m = kind.order();
                let fiber = (d - m) as i64;
                FamilyRecord {
                    kind,
                    m,
                    fiber_dim: fiber,
                    base_dim: base_dim(kind),
                    total_dim: fiber + base_dim(kind),
                    disjoint_from_curve: m == d,
                    fiber_dim_may_vary: false,
                }
            })
            .collect();
    }
    kinds
        .par_iter()
        .enumerate()
        .map(|(idx, &kind)| {
            let mut rng = sample::substream(opts.seed, idx as u64);
            let thetas = std::iter::once(MoebiusElement::identity())
                .chain((0..opts.conjugators).map(|_| sample::conjugator(&mut rng)))
                .collect::<Vec<_>>();
            let dims: Vec<i64> = thetas
                .into_iter()
                .map(|theta| {
                    let pair = conjugated_pair(&GroupSpec::conjugated(kind, theta)).expect("invertible conjugator");
                    galois_space(&pair, system).len() as i64 - 1
                })
                .collect();
            let fiber = *dims.iter().max().expect("identity sample");
            let m = kind.order();
            FamilyRecord {
                kind,
                m,
                fiber_dim: fiber,
                base_dim: base_dim(kind),
                total_dim: if fiber < 0 { -1 } else { fiber + base_dim(kind) },
                disjoint_from_curve: m == d && fiber >= 0,
                fiber_dim_may_vary: dims.iter().any(|&x| x != fiber),
            }
        })
        .collect()
}

/// The center of the section `s` over the conjugate `θGθ⁻¹` named by `spec`.
pub fn family_sample(spec: &GroupSpec, s: &BinaryForm, system: &LinearSystem) -> Result<ProjectionCenter> {
    let pair = conjugated_pair(spec)?;
    let section = GaloisSection::new(&pair, s.clone(), system)?;
    center_from_section(&pair, &section, system)
}

/// Coordinate matrix, `(N+1) × 2`, of a linear map from the two target
/// coordinates into `V`: column `j` holds the basis coordinates of the image
/// of the `j`-th target coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMapSpec {
    matrix: Matrix,
}

impl LinearMapSpec {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.cols() != 2 {
            return Err(Error::Invalid("a linear map to P¹ has two columns".into()));
        }
        if matrix.rank() != 2 {
            return Err(Error::RankDeficient("linear map must have rank 2".into()));
        }
        Ok(LinearMapSpec { matrix })
    }

    pub fn from_center(center: &ProjectionCenter) -> Self {
        LinearMapSpec {
            matrix: center.pencil().transpose(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// The section `s` through which the projection `ξ` factors as `π_G`, i.e.
/// `ξ`'s pulled-back pencil is `s·span{A, B}`; `None` when it does not factor.
pub fn check_factorization(
    xi: &LinearMapSpec,
    pair: &InvariantPair,
    system: &LinearSystem,
) -> Result<Option<BinaryForm>> {
    if xi.matrix.rows() != system.basis().len() {
        return Err(Error::Invalid(format!(
            "linear map has {} rows but the system has {} basis forms",
            xi.matrix.rows(),
            system.basis().len()
        )));
    }
    let p0 = system.combine(&xi.matrix.column(0));
    let p1 = system.combine(&xi.matrix.column(1));
    let g = p0.gcd(&p1)?;
    let q0 = p0.div_exact(&g).expect("gcd divides");
    let q1 = p1.div_exact(&g).expect("gcd divides");
    if q0.degree() != pair.degree() {
        return Ok(None);
    }
    let span = Matrix::from_rows(vec![
        q0.into_coeffs(),
        q1.into_coeffs(),
        pair.a.coeffs().to_vec(),
        pair.b.coeffs().to_vec(),
    ]);
    Ok((span.rank() == 2).then_some(g))
}

/// Result of factoring a Galois projection through the degree-`m` Veronese curve.
#[derive(Clone, Debug, PartialEq)]
pub struct IntermediateReport {
    /// `C`, the coordinates of `A` and `B` in the degree-`m` monomial basis.
    pub pencil_coords: Matrix,
    /// `C · M_sᵀ`.
    pub product: Matrix,
    /// `C · M_sᵀ` equals the center's pencil in monomial coordinates.
    pub identity_holds: bool,
    /// `gcd(A, B) = 1`: the intermediate center misses the degree-`m` curve.
    pub intermediate_disjoint: bool,
}

/// Checks that the center of `s` is the image of the intermediate center
/// `C` under multiplication by `s`, `H⁰(O(m)) → H⁰(O(d))`.
pub fn intermediate_factorization(
    pair: &InvariantPair,
    s: &GaloisSection,
    system: &LinearSystem,
) -> Result<IntermediateReport> {
    if !system.is_complete() {
        return Err(Error::RequiresCompleteSystem);
    }
    let m = pair.degree();
    let center = center_from_section(pair, s, system)?;
    let r = center.pencil();
    let r_mono = Matrix::from_rows(vec![
        system.combine(r.row(0)).into_coeffs(),
        system.combine(r.row(1)).into_coeffs(),
    ]);
    let c = Matrix::from_rows(vec![pair.a.coeffs().to_vec(), pair.b.coeffs().to_vec()]);
    let ms = multiplication_matrix(s.form(), m);
    let product = c.mul(&ms.transpose());
    Ok(IntermediateReport {
        identity_holds: product == r_mono,
        intermediate_disjoint: pair.a.gcd(&pair.b)?.degree() == 0,
        pencil_coords: c,
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Coef;
    use crate::groups::standard_invariant_pair;

    fn f(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    fn summary(r: &[FamilyRecord]) -> Vec<(GroupKind, i64, i64, i64)> {
        r.iter().map(|x| (x.kind, x.fiber_dim, x.base_dim, x.total_dim)).collect()
    }

    #[test]
    fn complete_family_tables() {
        let opts = SamplingOptions::default();
        let r = enumerate_families(&LinearSystem::complete(2).unwrap(), &opts);
        assert_eq!(
            summary(&r),
            vec![(GroupKind::Cyclic(1), 1, 0, 1), (GroupKind::Cyclic(2), 0, 2, 2)]
        );
        let r = enumerate_families(&LinearSystem::complete(3).unwrap(), &opts);
        assert_eq!(
            summary(&r),
            vec![
                (GroupKind::Cyclic(1), 2, 0, 2),
                (GroupKind::Cyclic(2), 1, 2, 3),
                (GroupKind::Cyclic(3), 0, 2, 2)
            ]
        );
        assert!(r[2].disjoint_from_curve && !r[1].disjoint_from_curve);
        let r = enumerate_families(&LinearSystem::complete(4).unwrap(), &opts);
        assert!(summary(&r).contains(&(GroupKind::Dihedral(2), 0, 3, 3)));
        assert!(summary(&r).contains(&(GroupKind::Cyclic(4), 0, 2, 2)));
        let r = enumerate_families(&LinearSystem::complete(1).unwrap(), &opts);
        assert_eq!(summary(&r), vec![(GroupKind::Cyclic(1), 0, 0, 0)]);
    }

    #[test]
    fn partial_system_flags_varying_fibers() {
        // span{x³, x²y, y³}: the pencil (x², y²) needs s = y, which exists only
        // for special conjugates
        let v = LinearSystem::new(vec![f(&[1, 0, 0, 0]), f(&[0, 1, 0, 0]), f(&[0, 0, 0, 1])]).unwrap();
        let r = enumerate_families(&v, &SamplingOptions::default());
        let c2 = r.iter().find(|x| x.kind == GroupKind::Cyclic(2)).unwrap();
        assert_eq!(c2.fiber_dim, 0);
        assert!(c2.fiber_dim_may_vary);
    }

    #[test]
    fn samples_over_conjugates() {
        let v2 = LinearSystem::complete(2).unwrap();
        let c2 = GroupKind::Cyclic(2);
        let c = family_sample(&GroupSpec::standard(c2), &f(&[1]), &v2).unwrap();
        assert_eq!(c.pencil(), &Matrix::from_int_rows(&[[1, 0, 0], [0, 0, 1]]));
        let shear = MoebiusElement::from_ints([[1, 1], [0, 1]]).unwrap();
        let c = family_sample(&GroupSpec::conjugated(c2, shear), &f(&[1]), &v2).unwrap();
        assert_eq!(c.pencil(), &Matrix::from_int_rows(&[[1, -2, 1], [0, 0, 1]]));
        let theta = MoebiusElement::from_ints([[2, 1], [1, 1]]).unwrap();
        let c = family_sample(&GroupSpec::conjugated(GroupKind::Cyclic(1), theta), &BinaryForm::x(), &v2).unwrap();
        let on_conic = crate::galois::meets_curve(&c, &v2).unwrap();
        assert_eq!(on_conic.len(), 1);
    }

    #[test]
    fn factorization_examples() {
        let v3 = LinearSystem::complete(3).unwrap();
        let xi = |a: &[i64], b: &[i64]| {
            let rows = (0..4).map(|i| vec![Coef::int(a[i]), Coef::int(b[i])]).collect();
            LinearMapSpec::new(Matrix::from_rows(rows)).unwrap()
        };
        let c3 = standard_invariant_pair(GroupKind::Cyclic(3));
        let c2 = standard_invariant_pair(GroupKind::Cyclic(2));
        let c1 = standard_invariant_pair(GroupKind::Cyclic(1));
        assert_eq!(check_factorization(&xi(&[1, 0, 0, 0], &[0, 0, 0, 1]), &c3, &v3).unwrap(), Some(f(&[1])));
        let m = xi(&[1, 0, 0, 0], &[0, 0, 1, 0]);
        assert_eq!(check_factorization(&m, &c2, &v3).unwrap(), Some(BinaryForm::x()));
        assert_eq!(check_factorization(&m, &c3, &v3).unwrap(), None);
        // x³ + x²y and x²y: gcd x², residual pencil {x + y, y}
        let m = xi(&[1, 1, 0, 0], &[0, 1, 0, 0]);
        assert_eq!(check_factorization(&m, &c1, &v3).unwrap(), Some(f(&[1, 0, 0])));
    }

    #[test]
    fn intermediate_examples() {
        let c2 = standard_invariant_pair(GroupKind::Cyclic(2));
        let v2 = LinearSystem::complete(2).unwrap();
        let s = GaloisSection::new(&c2, f(&[1]), &v2).unwrap();
        let r = intermediate_factorization(&c2, &s, &v2).unwrap();
        assert!(r.identity_holds && r.intermediate_disjoint);

        let v3 = LinearSystem::complete(3).unwrap();
        let s = GaloisSection::new(&c2, BinaryForm::x(), &v3).unwrap();
        let r = intermediate_factorization(&c2, &s, &v3).unwrap();
        assert_eq!(r.product, Matrix::from_int_rows(&[[1, 0, 0, 0], [0, 0, 1, 0]]));
        assert!(r.identity_holds);

        let c3 = standard_invariant_pair(GroupKind::Cyclic(3));
        let s = GaloisSection::new(&c3, f(&[1]), &v3).unwrap();
        let r = intermediate_factorization(&c3, &s, &v3).unwrap();
        assert_eq!(r.product, Matrix::from_int_rows(&[[1, 0, 0, 0], [0, 0, 0, 1]]));

        let partial = LinearSystem::new(vec![f(&[1, 0, 0]), f(&[0, 0, 1])]).unwrap();
        let s = GaloisSection::new(&c2, f(&[1]), &partial).unwrap();
        assert_eq!(intermediate_factorization(&c2, &s, &partial), Err(Error::RequiresCompleteSystem));
    }

    #[test]
    fn record_json() {
        let r = enumerate_families(&LinearSystem::complete(2).unwrap(), &SamplingOptions::default());
        let j = serde_json::to_string(&r[1]).unwrap();
        assert_eq!(
            j,
            r#"{"kind":"cyclic(2)","m":2,"fiber_dim":0,"base_dim":2,"total_dim":2,"disjoint_from_curve":true,"fiber_dim_may_vary":false}"#
        );
    }
}
