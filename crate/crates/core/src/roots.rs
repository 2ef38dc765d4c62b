//! Numeric roots of binary forms in `P¹(C)`.
//!
//! Finite roots come from the eigenvalues of the companion matrix of the
//! dehomogenization `f(z, 1)` (after a scaling that balances the root moduli),
//! followed by Newton polishing. Roots at `[1:0]` and `[0:1]` are read off the
//! exact zero pattern of the coefficients and reported exactly.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::form::BinaryForm;

/// A point of `P¹(C)` in homogeneous coordinates, normalized to unit length.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CPoint {
    pub x: Complex64,
    pub y: Complex64,
}

impl CPoint {
    pub fn new(x: Complex64, y: Complex64) -> Self {
        let n = (x.norm_sqr() + y.norm_sqr()).sqrt();
        CPoint { x: x / n, y: y / n }
    }

    pub fn affine(z: Complex64) -> Self {
        if z.norm() <= 1.0 {
            CPoint::new(z, Complex64::new(1.0, 0.0))
        } else {
            CPoint::new(Complex64::new(1.0, 0.0), z.inv())
        }
    }

    pub fn infinity() -> Self {
        CPoint::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn zero() -> Self {
        CPoint::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    /// Chordal distance `|x₁y₂ − x₂y₁|` (both points unit length).
    pub fn distance(&self, other: &CPoint) -> f64 {
        (self.x * other.y - self.y * other.x).norm()
    }

    /// Affine coordinate `x / y`, or `None` at infinity.
    pub fn z(&self) -> Option<Complex64> {
        (self.y.norm() > 0.0).then(|| self.x / self.y)
    }

    /// Total order: finite points by real then imaginary part of `x/y`, infinity last.
    pub fn total_cmp(&self, other: &CPoint) -> Ordering {
        match (self.z(), other.z()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(a), Some(b)) => a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)),
        }
    }
}

/// Value of the form at a unit-normalized point.
pub fn eval_complex(coeffs: &[Complex64], p: &CPoint) -> Complex64 {
    // Horner in whichever of x, y is larger to stay well scaled
    let d = coeffs.len() - 1;
    if p.y.norm() >= p.x.norm() {
        let t = p.x / p.y;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs {
            acc = acc * t + c;
        }
        acc * p.y.powu(d as u32)
    } else {
        let t = p.y / p.x;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc * p.x.powu(d as u32)
    }
}

pub fn coeff_norm(coeffs: &[Complex64]) -> f64 {
    coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// `|f(p)| / ‖f‖₂` at a unit point.
pub fn relative_residual(coeffs: &[Complex64], p: &CPoint) -> f64 {
    eval_complex(coeffs, p).norm() / coeff_norm(coeffs)
}

/// All `deg f` roots of a nonzero exact form, with multiplicity, sorted by
/// [`CPoint::total_cmp`].
pub fn roots_numeric(f: &BinaryForm) -> Vec<CPoint> {
    assert!(!f.is_zero(), "roots of the zero form");
    let ky = f.y_multiplicity();
    let kx = f.x_multiplicity();
    let inner: Vec<Complex64> = f.coeffs()[ky..f.coeffs().len() - kx]
        .iter()
        .map(|c| c.to_complex())
        .collect();
    let mut out = Vec::with_capacity(f.degree());
    out.extend(std::iter::repeat_n(CPoint::infinity(), ky));
    out.extend(std::iter::repeat_n(CPoint::zero(), kx));
    out.extend(finite_roots(&inner));
    out.sort_by(CPoint::total_cmp);
    out
}

/// Roots of a complex form whose first and last coefficients are nonzero
/// (so every root is finite and nonzero).
pub fn roots_complex(coeffs: &[Complex64]) -> Vec<CPoint> {
    let ky = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let kx = coeffs.iter().rev().take_while(|c| c.norm() == 0.0).count();
    if ky == coeffs.len() {
        panic!("roots of the zero form");
    }
    let mut out = Vec::with_capacity(coeffs.len() - 1);
    out.extend(std::iter::repeat_n(CPoint::infinity(), ky));
    out.extend(std::iter::repeat_n(CPoint::zero(), kx));
    out.extend(finite_roots(&coeffs[ky..coeffs.len() - kx]));
    out.sort_by(CPoint::total_cmp);
    out
}

fn finite_roots(desc: &[Complex64]) -> Vec<CPoint> {
    let r = desc.len() - 1;
    if r == 0 {
        return Vec::new();
    }
    // z = ρ·u with ρ the geometric mean of the root moduli
    let rho = (desc[r].norm() / desc[0].norm()).powf(1.0 / r as f64);
    let scaled: Vec<Complex64> = desc
        .iter()
        .enumerate()
        .map(|(i, c)| c * rho.powi((r - i) as i32))
        .collect();
    let eig = if r == 1 {
        vec![-scaled[1] / scaled[0]]
    } else {
        companion_eigenvalues(&scaled)
    };
    eig.into_iter()
        .map(|u| polish(desc, CPoint::affine(u * rho)))
        .collect()
}

/// Eigenvalues of the companion matrix. Shifted QR can stall on symmetric
/// root patterns such as `±a`; the variable is then rotated, `u = e^{iα}v`,
/// and as a last resort the roots come from Aberth iteration.
fn companion_eigenvalues(desc: &[Complex64]) -> Vec<Complex64> {
    let r = desc.len() - 1;
    for alpha in [0.0, 0.7, 1.9, 3.1] {
        let turn = Complex64::from_polar(1.0, alpha);
        let mut comp = DMatrix::<Complex64>::zeros(r, r);
        for j in 0..r {
            comp[(0, j)] = -desc[j + 1] * turn.powi(-(j as i32 + 1)) / desc[0];
        }
        for i in 1..r {
            comp[(i, i - 1)] = Complex64::new(1.0, 0.0);
        }
        if let Some(schur) = nalgebra::Schur::try_new(comp, f64::EPSILON, 200 * r) {
            let (_, t) = schur.unpack();
            return (0..r).map(|i| t[(i, i)] * turn).collect();
        }
    }
    aberth(desc)
}

fn aberth(desc: &[Complex64]) -> Vec<Complex64> {
    let r = desc.len() - 1;
    let mut z: Vec<Complex64> = (0..r)
        .map(|k| Complex64::from_polar(1.0, 0.4 + std::f64::consts::TAU * k as f64 / r as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..r {
            let (v, dv) = horner_with_derivative(desc.iter(), z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..r).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                moved = moved.max(step.norm());
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// A few Newton steps in the better-conditioned chart, keeping only improvements.
fn polish(desc: &[Complex64], p: CPoint) -> CPoint {
    let mut best = p;
    let mut best_res = eval_complex(desc, &best).norm();
    let mut cur = p;
    for _ in 0..8 {
        let next = if cur.y.norm() >= cur.x.norm() {
            let z = cur.x / cur.y;
            let (v, dv) = horner_with_derivative(desc.iter(), z);
            if dv.norm() == 0.0 {
                break;
            }
            CPoint::affine(z - v / dv)
        } else {
            let w = cur.y / cur.x;
            let (v, dv) = horner_with_derivative(desc.iter().rev(), w);
            if dv.norm() == 0.0 {
                break;
            }
            let w2 = w - v / dv;
            CPoint::new(Complex64::new(1.0, 0.0), w2)
        };
        let res = eval_complex(desc, &next).norm();
        if !res.is_finite() {
            break;
        }
        cur = next;
        if res < best_res {
            best = next;
            best_res = res;
        } else {
            break;
        }
    }
    best
}

fn horner_with_derivative<'a>(
    coeffs: impl Iterator<Item = &'a Complex64>,
    z: Complex64,
) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut dv = Complex64::new(0.0, 0.0);
    for c in coeffs {
        dv = dv * z + v;
        v = v * z + c;
    }
    (v, dv)
}

/// Greedy matching of two root multisets; returns the largest matched distance.
pub fn multiset_distance(a: &[CPoint], b: &[CPoint]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for p in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, q)| (j, p.distance(q)))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("equal lengths");
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Coef;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[CPoint], b: &[CPoint]) -> bool {
        multiset_distance(a, b) < 1e-10
    }

    #[test]
    fn rational_roots() {
        let r = roots_numeric(&BinaryForm::from_ints(&[1, 0, -1]));
        let want = [CPoint::affine(c(-1.0, 0.0)), CPoint::affine(c(1.0, 0.0))];
        assert!(close(&r, &want));
        assert!(r[0].z().unwrap().re < 0.0, "sorted by real part");
    }

    #[test]
    fn gaussian_roots() {
        let r = roots_numeric(&BinaryForm::from_ints(&[1, 0, 1]));
        let want = [CPoint::affine(c(0.0, 1.0)), CPoint::affine(c(0.0, -1.0))];
        assert!(close(&r, &want));
    }

    #[test]
    fn coordinate_roots_are_exact() {
        let r = roots_numeric(&BinaryForm::from_ints(&[0, 1, 0]));
        assert_eq!(r, vec![CPoint::zero(), CPoint::infinity()]);
    }

    #[test]
    fn residuals_are_small_for_wide_root_spreads() {
        // (x - 1000y)(x - y/1000)(x + 3y)(x² + 2y²)
        let f = BinaryForm::new(vec![Coef::one(), Coef::int(-1000)])
            .mul(&BinaryForm::new(vec![Coef::one(), Coef::frac(-1, 1000)]))
            .mul(&BinaryForm::from_ints(&[1, 3]))
            .mul(&BinaryForm::from_ints(&[1, 0, 2]));
        let fc = f.to_complex();
        for p in roots_numeric(&f) {
            assert!(relative_residual(&fc, &p) < 1e-10);
        }
    }

    #[test]
    fn cyclotomic_coefficients() {
        // x³ - ζ₃ y³ has the roots ζ₉^{1+3k}
        let f = BinaryForm::new(vec![Coef::one(), Coef::zero(), Coef::zero(), -Coef::root_of_unity(3, 1)]);
        let r = roots_numeric(&f);
        let want: Vec<CPoint> = (0..3)
            .map(|k| CPoint::affine(Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (1.0 + 3.0 * k as f64) / 9.0)))
            .collect();
        assert!(close(&r, &want));
    }

    #[test]
    fn aberth_finds_symmetric_roots() {
        // (x² − y²)(x² − 4y²)
        let desc = [c(1.0, 0.0), c(0.0, 0.0), c(-5.0, 0.0), c(0.0, 0.0), c(4.0, 0.0)];
        let got: Vec<CPoint> = aberth(&desc).into_iter().map(CPoint::affine).collect();
        let want: Vec<CPoint> = [-2.0, -1.0, 1.0, 2.0].iter().map(|&r| CPoint::affine(c(r, 0.0))).collect();
        assert!(multiset_distance(&got, &want) < 1e-12);
    }

    #[test]
    fn rotated_companion_matches_direct() {
        let desc = [c(1.0, 0.0), c(-2.0, 1.0), c(0.5, 0.0), c(3.0, -1.0)];
        let direct: Vec<CPoint> = companion_eigenvalues(&desc).into_iter().map(CPoint::affine).collect();
        let fallback: Vec<CPoint> = aberth(&desc).into_iter().map(CPoint::affine).collect();
        assert!(multiset_distance(&direct, &fallback) < 1e-10);
    }
}
