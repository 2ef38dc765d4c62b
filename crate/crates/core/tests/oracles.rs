//! Independent recomputations of values the library derives: each test uses a
//! route that shares no code path with the function it checks.

use galois_loci::families::{enumerate_families, SamplingOptions};
use galois_loci::form::BinaryForm;
use galois_loci::galois::LinearSystem;
use galois_loci::groups::{
    catalog_kinds, conjugated_generators, conjugated_pair, generate_group, normalizer_dim, standard_generators,
    standard_invariant_pair, GroupKind, GroupSpec, MoebiusElement,
};
use galois_loci::oracle::{deck_transformations, OracleConfig, RationalSelfMap};
use galois_loci::roots::CPoint;
use galois_loci::{Coef, Matrix};
use num_complex::Complex64;

/// Dimension of the Lie algebra `{X ∈ sl₂ : gXg⁻¹ = X for every generator}`.
/// For a finite group the normalizer and centralizer share their identity
/// component, so this is the dimension of the normalizer.
fn centralizer_dim(gens: &[MoebiusElement]) -> usize {
    let basis = [
        Matrix::from_int_rows(&[[1, 0], [0, -1]]),
        Matrix::from_int_rows(&[[0, 1], [0, 0]]),
        Matrix::from_int_rows(&[[0, 0], [1, 0]]),
    ];
    let mut rows: Vec<Vec<Coef>> = Vec::new();
    for g in gens {
        let gm = g.matrix();
        let gi = gm.inverse().unwrap();
        let images: Vec<Matrix> = basis.iter().map(|x| gm.mul(x).mul(&gi)).collect();
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            rows.push((0..3).map(|k| &images[k][(i, j)] - &basis[k][(i, j)]).collect());
        }
    }
    if rows.is_empty() {
        return 3;
    }
    3 - Matrix::from_rows(rows).rank()
}

#[test]
fn normalizer_dimension_from_the_lie_algebra() {
    for kind in catalog_kinds(60) {
        assert_eq!(
            centralizer_dim(&standard_generators(kind)),
            normalizer_dim(kind),
            "{kind}"
        );
    }
}

fn poly_mul(a: &[Coef], b: &[Coef]) -> Vec<Coef> {
    let mut out = vec![Coef::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Coefficients of `f(ax + by, cx + dy)`, for any matrix, singular or not.
fn substitute(f: &[Coef], m: &[Coef]) -> Vec<Coef> {
    let deg = f.len() - 1;
    let pow = |l: &[Coef], k: usize| (0..k).fold(vec![Coef::one()], |acc, _| poly_mul(&acc, l));
    let mut out = vec![Coef::zero(); deg + 1];
    for (i, c) in f.iter().enumerate() {
        let term = poly_mul(&pow(&m[..2], deg - i), &pow(&m[2..], i));
        for (o, t) in out.iter_mut().zip(term) {
            *o = &*o + &(c * &t);
        }
    }
    out
}

/// Unnormalized Plücker minors of the pencil `(s·(A∘η), s·(B∘η))`.
fn raw_minors(pair: (&BinaryForm, &BinaryForm), eta: &[Coef], s: &[Coef]) -> Vec<Coef> {
    let r0 = poly_mul(s, &substitute(pair.0.coeffs(), eta));
    let r1 = poly_mul(s, &substitute(pair.1.coeffs(), eta));
    let n = r0.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(&(&r0[i] * &r1[j]) - &(&r0[j] * &r1[i]));
        }
    }
    out
}

/// `d/dt F(x + t·e_k)` at `t = 0` for a polynomial of degree at most `deg`
/// in `t`, by exact Lagrange interpolation on `t = 0, 1, …, deg`.
fn directional_derivative(f: &dyn Fn(&[Coef]) -> Vec<Coef>, x: &[Coef], k: usize, deg: usize) -> Vec<Coef> {
    let nodes: Vec<i64> = (0..=deg as i64).collect();
    let mut acc: Option<Vec<Coef>> = None;
    for (j, &tj) in nodes.iter().enumerate() {
        // ℓ_j'(0) for the Lagrange basis on the integer nodes
        let mut w = Coef::zero();
        for (m, &tm) in nodes.iter().enumerate() {
            if m == j {
                continue;
            }
            let mut term = Coef::frac(1, tj - tm);
            for (l, &tl) in nodes.iter().enumerate() {
                if l != j && l != m {
                    term = &term * &Coef::frac(-tl, tj - tl);
                }
            }
            w = &w + &term;
        }
        let mut pt = x.to_vec();
        pt[k] = &pt[k] + &Coef::int(tj);
        let val: Vec<Coef> = f(&pt).iter().map(|v| v * &w).collect();
        acc = Some(match acc {
            None => val,
            Some(a) => a.iter().zip(&val).map(|(p, q)| p + q).collect(),
        });
    }
    acc.expect("at least one node")
}

/// Rank of the Jacobian of `(η, s) ↦ minors` at an integer point: the
/// dimension of the affine cone over the family's image.
fn family_jacobian_rank(kind: GroupKind, point: &[i64]) -> usize {
    let pair = standard_invariant_pair(kind);
    let m = kind.order();
    let x: Vec<Coef> = point.iter().map(|&c| Coef::int(c)).collect();
    let f = |p: &[Coef]| raw_minors((&pair.a, &pair.b), &p[..4], &p[4..]);
    let cols: Vec<Vec<Coef>> = (0..x.len())
        .map(|k| directional_derivative(&f, &x, k, if k < 4 { 2 * m } else { 2 }))
        .collect();
    let rows = cols[0].len();
    let jac = Matrix::from_rows((0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect());
    jac.rank()
}

#[test]
fn family_dimensions_match_the_jacobian_rank() {
    let points = |n: usize| -> Vec<Vec<i64>> {
        let seq = [2i64, -1, 3, 1, -2, 5, 1, 4, -3, 2, 1, -1, 3, 2, -4, 1];
        (0..3)
            .map(|shift| (0..n).map(|i| seq[(i * 3 + shift * 5) % seq.len()] + shift as i64).collect())
            .collect()
    };
    for d in 1..=7 {
        let v = LinearSystem::complete(d).unwrap();
        for rec in enumerate_families(&v, &SamplingOptions::default()) {
            let m = rec.kind.order();
            let ranks: Vec<usize> = points(4 + d - m + 1)
                .iter()
                .filter(|p| p[0] * p[3] != p[1] * p[2])
                .map(|p| family_jacobian_rank(rec.kind, p))
                .collect();
            assert!(!ranks.is_empty());
            let want = (rec.total_dim + 1) as usize;
            assert!(ranks.iter().all(|&r| r <= want), "{} at d = {d}: ranks {ranks:?}, dim {}", rec.kind, rec.total_dim);
            assert_eq!(ranks.iter().max(), Some(&want), "{} at d = {d}: ranks {ranks:?}", rec.kind);
        }
    }
}

#[test]
fn tetrahedral_family_dimension_from_the_jacobian() {
    let v = LinearSystem::complete(13).unwrap();
    let rec = enumerate_families(&v, &SamplingOptions::default())
        .into_iter()
        .find(|r| r.kind == GroupKind::Tetrahedral)
        .unwrap();
    assert_eq!(rec.total_dim, 4);
    assert_eq!(family_jacobian_rank(GroupKind::Tetrahedral, &[2, 1, -1, 3, 1, -2]), 5);
}

fn point(z: Complex64) -> CPoint {
    CPoint::affine(z)
}

/// Deck elements coincide, as Möbius maps, with the conjugated group
/// generated exactly from its generators.
#[test]
fn deck_group_is_the_conjugated_group() {
    let probes: Vec<CPoint> = [(0.3, 0.1), (-1.2, 0.7), (2.5, -0.4)]
        .iter()
        .map(|&(re, im)| point(Complex64::new(re, im)))
        .collect();
    let cases = [
        (GroupKind::Cyclic(3), [[1, 1], [0, 1]]),
        (GroupKind::Cyclic(5), [[2, 1], [1, 1]]),
        (GroupKind::Dihedral(3), [[1, -1], [2, 1]]),
        (GroupKind::Dihedral(2), [[1, 2], [-2, -3]]),
        (GroupKind::Tetrahedral, [[1, 0], [1, 1]]),
    ];
    for (kind, theta) in cases {
        let spec = GroupSpec::conjugated(kind, MoebiusElement::from_ints(theta).unwrap());
        let pair = conjugated_pair(&spec).unwrap();
        let f = RationalSelfMap::new(pair.a, pair.b).unwrap();
        let deck = deck_transformations(&f, &OracleConfig::default()).unwrap();
        let truth = generate_group(&conjugated_generators(&spec), 2 * kind.order());
        assert_eq!(deck.len(), truth.len(), "{kind}");
        // compare as maps on a few probe points, which avoids any normalization
        for g in &truth {
            let gc = g.to_complex();
            let found = deck.complex_elements().iter().any(|s| {
                probes.iter().all(|p| s.apply(p).distance(&gc.apply(p)) < 1e-7)
            });
            assert!(found, "{kind}: {} missing from the deck", g.matrix());
        }
    }
}

/// The quotient map `[A : B]` of a dihedral group has degree `|G|` and a
/// full deck group.
#[test]
fn dihedral_quotient_degree_is_the_group_order() {
    for m in 2..=5u32 {
        let kind = GroupKind::Dihedral(m);
        let pair = standard_invariant_pair(kind);
        let f = RationalSelfMap::new(pair.a.clone(), pair.b.clone()).unwrap();
        assert_eq!(f.degree(), kind.order());
        assert_eq!(deck_transformations(&f, &OracleConfig::default()).unwrap().len(), kind.order());
    }
}
