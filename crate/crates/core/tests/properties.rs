//! Algebraic laws checked on random inputs.

use proptest::prelude::*;

use galois_loci::form::BinaryForm;
use galois_loci::galois::{
    center_from_section, galois_space, plucker, GaloisSection, LinearSystem, ProjectionCenter,
};
use galois_loci::groups::{
    conjugated_generators, conjugated_pair, standard_invariant_pair, verify_invariance, GroupKind, GroupSpec,
    MoebiusElement,
};
use galois_loci::oracle::{deck_transformations, OracleConfig, RationalSelfMap};
use galois_loci::roots::{multiset_distance, roots_numeric};
use galois_loci::{Coef, Matrix};

fn form(max_degree: usize) -> impl Strategy<Value = BinaryForm> {
    (0..=max_degree)
        .prop_flat_map(|d| prop::collection::vec(-6i64..=6, d + 1))
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| BinaryForm::from_ints(&c))
}

fn invertible() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::array::uniform2(prop::array::uniform2(-4i64..=4)).prop_filter("invertible", |m| {
        m[0][0] * m[1][1] != m[0][1] * m[1][0]
    })
}

fn int_matrix(m: [[i64; 2]; 2]) -> Matrix {
    Matrix::from_int_rows(&m)
}

/// `∏ (x − a·y)` over the given roots.
fn from_roots(roots: &[i64]) -> BinaryForm {
    roots
        .iter()
        .map(|&a| BinaryForm::from_ints(&[1, -a]))
        .fold(BinaryForm::from_ints(&[1]), |acc, l| acc.mul(&l))
}

fn kind() -> impl Strategy<Value = GroupKind> {
    prop_oneof![
        (1u32..=6).prop_map(GroupKind::Cyclic),
        (2u32..=4).prop_map(GroupKind::Dihedral),
        Just(GroupKind::Tetrahedral),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_distributes_over_a_common_factor(f in form(4), g in form(4), h in form(3)) {
        let lhs = f.mul(&h).gcd(&g.mul(&h)).unwrap();
        let rhs = h.mul(&f.gcd(&g).unwrap());
        prop_assert!(lhs.is_proportional(&rhs), "{lhs} vs {rhs}");
    }

    #[test]
    fn gcd_divides_both(f in form(5), g in form(5)) {
        let d = f.gcd(&g).unwrap();
        prop_assert!(f.div_exact(&d).is_some());
        prop_assert!(g.div_exact(&d).is_some());
    }

    #[test]
    fn compose_is_a_right_action(f in form(5), a in invertible(), b in invertible()) {
        let (a, b) = (int_matrix(a), int_matrix(b));
        let stepwise = f.compose(&a).unwrap().compose(&b).unwrap();
        prop_assert_eq!(stepwise, f.compose(&a.mul(&b)).unwrap());
    }

    #[test]
    fn roots_of_a_product_are_the_union(
        roots in prop::collection::btree_set(-9i64..=9, 2..8),
        split in 1usize..7,
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let k = split.min(roots.len() - 1);
        let (f, g) = (from_roots(&roots[..k]), from_roots(&roots[k..]));
        let mut union = roots_numeric(&f);
        union.extend(roots_numeric(&g));
        prop_assert!(multiset_distance(&roots_numeric(&f.mul(&g)), &union) < 1e-8);
    }

    #[test]
    fn squarefree_part_drops_multiplicities(roots in prop::collection::vec(-5i64..=5, 1..6)) {
        let f = from_roots(&roots);
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert!(f.squarefree_part().unwrap().is_proportional(&from_roots(&distinct)));
        prop_assert_eq!(f.is_squarefree(), distinct.len() == roots.len());
    }

    #[test]
    fn plucker_point_ignores_the_choice_of_basis(
        rows in prop::array::uniform2(prop::collection::vec(-5i64..=5, 5)),
        g in invertible(),
    ) {
        let pencil = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&c| Coef::int(c)).collect()).collect());
        prop_assume!(pencil.rank() == 2);
        let a = ProjectionCenter::new(4, pencil.clone()).unwrap();
        let b = ProjectionCenter::new(4, int_matrix(g).mul(&pencil)).unwrap();
        prop_assert_eq!(plucker(&a).unwrap(), plucker(&b).unwrap());
    }

    #[test]
    fn conjugated_pairs_are_invariant(k in kind(), theta in invertible()) {
        let spec = GroupSpec::conjugated(k, MoebiusElement::from_ints(theta).unwrap());
        let pair = conjugated_pair(&spec).unwrap();
        prop_assert!(verify_invariance(&pair, &conjugated_generators(&spec)));
    }

    #[test]
    fn galois_space_dimension_is_conjugation_invariant(k in kind(), theta in invertible(), extra in 0usize..4) {
        let d = k.order() + extra;
        let v = LinearSystem::complete(d).unwrap();
        let spec = GroupSpec::conjugated(k, MoebiusElement::from_ints(theta).unwrap());
        let moved = galois_space(&conjugated_pair(&spec).unwrap(), &v).len();
        prop_assert_eq!(moved, galois_space(&standard_invariant_pair(k), &v).len());
        prop_assert_eq!(moved, d - k.order() + 1);
    }

    #[test]
    fn proportional_sections_give_the_same_center(
        k in kind(),
        coeffs in prop::collection::vec(-4i64..=4, 3),
        c in prop_oneof![-5i64..=-1, 1i64..=5],
    ) {
        let pair = standard_invariant_pair(k);
        let v = LinearSystem::complete(k.order() + 2).unwrap();
        let s = BinaryForm::from_ints(&coeffs);
        prop_assume!(!s.is_zero());
        let a = center_from_section(&pair, &GaloisSection::new(&pair, s.clone(), &v).unwrap(), &v).unwrap();
        let scaled = s.scale(&Coef::int(c));
        let b = center_from_section(&pair, &GaloisSection::new(&pair, scaled, &v).unwrap(), &v).unwrap();
        prop_assert_eq!(plucker(&a).unwrap(), plucker(&b).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Reparametrizing a map conjugates its deck group, so the order is unchanged.
    #[test]
    fn deck_order_survives_reparametrization(m in 2usize..6, t in invertible(), seed in 0u64..1000) {
        let t = int_matrix(t);
        let p = BinaryForm::monomial(m, 0).compose(&t).unwrap();
        let q = BinaryForm::monomial(m, m).compose(&t).unwrap();
        let f = RationalSelfMap::new(p, q).unwrap();
        let cfg = OracleConfig { seed, ..OracleConfig::default() };
        let deck = deck_transformations(&f, &cfg).unwrap();
        prop_assert_eq!(deck.len(), m);
        prop_assert!(deck.is_closed(cfg.tol_dedupe));
        // certified elements must pass the exact check
        for el in &deck.elements {
            if let Some(exact) = &el.exact {
                let ps = f.p().compose(exact.matrix()).unwrap();
                let qs = f.q().compose(exact.matrix()).unwrap();
                prop_assert_eq!(ps.mul(f.q()), qs.mul(f.p()));
            }
        }
    }
}
