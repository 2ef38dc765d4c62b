//! Seeded random inputs. Every random choice in the crate goes through a
//! [`SeededRng`], so a run is reproducible from its seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{ratio, Coef, Rational};
use crate::form::BinaryForm;
use crate::galois::ProjectionCenter;
use crate::groups::MoebiusElement;
use crate::matrix::Matrix;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for the `index`-th task of a batch.
pub fn substream(seed: u64, index: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

/// `p / q` with `|p| ≤ max_num` and `1 ≤ q ≤ max_den`.
pub fn rational(rng: &mut SeededRng, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.random_range(-max_num..=max_num), rng.random_range(1..=max_den))
}

/// Invertible matrix with small integer entries.
pub fn conjugator(rng: &mut SeededRng) -> MoebiusElement {
    loop {
        let mut e = || rng.random_range(-3i64..=3);
        let rows = [[e(), e()], [e(), e()]];
        if let Ok(m) = MoebiusElement::from_ints(rows) {
            return m;
        }
    }
}

/// Nonzero integer combination of `basis` with coefficients in `[-5, 5]`.
pub fn combination(rng: &mut SeededRng, basis: &[BinaryForm]) -> BinaryForm {
    assert!(!basis.is_empty(), "combination of an empty basis");
    loop {
        let f = basis
            .iter()
            .map(|b| b.scale(&Coef::int(rng.random_range(-5i64..=5))))
            .reduce(|a, b| a.add(&b))
            .expect("nonempty");
        if !f.is_zero() {
            return f;
        }
    }
}

/// Rank-2 pencil with entries `p/q`, `|p| ≤ 9`, `q ≤ 5`.
pub fn center(rng: &mut SeededRng, degree: usize) -> ProjectionCenter {
    loop {
        let rows = (0..2)
            .map(|_| (0..=degree).map(|_| Coef::from(rational(rng, 9, 5))).collect())
            .collect();
        if let Ok(c) = ProjectionCenter::new(degree, Matrix::from_rows(rows)) {
            return c;
        }
    }
}
