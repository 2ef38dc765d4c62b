//! Binary forms: homogeneous polynomials in `x, y` with exact coefficients.
//!
//! A form of degree `d` is stored as `d + 1` coefficients, entry `i` being the
//! coefficient of `x^{d-i} y^i`. Leading zero entries therefore count the
//! factors of `y` (vanishing at `[1:0]`), trailing zeros the factors of `x`.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Coef, CoefField};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FormJson", into = "FormJson")]
pub struct BinaryForm {
    coeffs: Vec<Coef>,
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    degree: usize,
    coeffs: Vec<Coef>,
}

impl TryFrom<FormJson> for BinaryForm {
    type Error = String;
    fn try_from(j: FormJson) -> std::result::Result<Self, String> {
        if j.coeffs.len() != j.degree + 1 {
            return Err(format!(
                "form of degree {} needs {} coefficients, got {}",
                j.degree,
                j.degree + 1,
                j.coeffs.len()
            ));
        }
        Ok(BinaryForm { coeffs: j.coeffs })
    }
}

impl From<BinaryForm> for FormJson {
    fn from(f: BinaryForm) -> Self {
        FormJson {
            degree: f.degree(),
            coeffs: f.coeffs,
        }
    }
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Coef>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| Coef::int(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm::new(vec![Coef::zero(); degree + 1])
    }

    pub fn constant(c: Coef) -> Self {
        BinaryForm::new(vec![c])
    }

    /// `x^{d-i} y^i`.
    pub fn monomial(degree: usize, i: usize) -> Self {
        assert!(i <= degree);
        let mut f = BinaryForm::zero(degree);
        f.coeffs[i] = Coef::one();
        f
    }

    pub fn x() -> Self {
        BinaryForm::monomial(1, 0)
    }

    pub fn y() -> Self {
        BinaryForm::monomial(1, 1)
    }

    /// `a·x + b·y`.
    pub fn linear(a: Coef, b: Coef) -> Self {
        BinaryForm::new(vec![a, b])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coef> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coef::is_zero)
    }

    pub fn field(&self) -> CoefField {
        self.coeffs
            .iter()
            .fold(CoefField::Rational, |acc, c| acc.join(c.field()))
    }

    pub fn scale(&self, c: &Coef) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree(), "adding forms of different degree");
        BinaryForm::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree(), "subtracting forms of different degree");
        BinaryForm::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Coef::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BinaryForm::new(out)
    }

    pub fn pow(&self, k: u32) -> BinaryForm {
        let mut acc = BinaryForm::constant(Coef::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// First nonzero coefficient.
    pub fn leading_coef(&self) -> Option<&Coef> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Scaled so the first nonzero coefficient is 1; the zero form is returned unchanged.
    pub fn monic(&self) -> BinaryForm {
        match self.leading_coef() {
            Some(c) if !c.is_one() => {
                let inv = c.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Equality up to a nonzero scalar; both forms must be nonzero.
    pub fn is_proportional(&self, other: &BinaryForm) -> bool {
        if self.degree() != other.degree() || self.is_zero() || other.is_zero() {
            return false;
        }
        self.monic() == other.monic()
    }

    /// Number of factors of `y`, i.e. the multiplicity of the root `[1:0]`.
    pub fn y_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Number of factors of `x`, i.e. the multiplicity of the root `[0:1]`.
    pub fn x_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &BinaryForm) -> Result<BinaryForm> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::ZeroGcd),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        let ky = self.y_multiplicity().min(other.y_multiplicity());
        // strip every factor of y, then work in the chart y = 1 where the
        // degree of the dehomogenization equals the degree of the form
        let a: Vec<Coef> = self.coeffs[self.y_multiplicity()..].iter().rev().cloned().collect();
        let b: Vec<Coef> = other.coeffs[other.y_multiplicity()..].iter().rev().cloned().collect();
        let h = univariate_gcd(a, b);
        let mut coeffs = vec![Coef::zero(); ky];
        coeffs.extend(h.into_iter().rev());
        Ok(BinaryForm::new(coeffs).monic())
    }

    /// `self / g` when `g` divides `self` exactly.
    pub fn div_exact(&self, g: &BinaryForm) -> Option<BinaryForm> {
        if g.is_zero() || g.degree() > self.degree() {
            return None;
        }
        let qdeg = self.degree() - g.degree();
        if self.is_zero() {
            return Some(BinaryForm::zero(qdeg));
        }
        let k = g.y_multiplicity();
        if self.y_multiplicity() < k {
            return None;
        }
        // power-series division in y/x, using g's nonzero coefficient at index k
        let f = &self.coeffs[k..];
        let gs = &g.coeffs[k..];
        let inv = gs[0].inv().expect("nonzero");
        let mut q: Vec<Coef> = Vec::with_capacity(qdeg + 1);
        for i in 0..=qdeg {
            let mut acc = f[i].clone();
            for j in 1..=i.min(gs.len() - 1) {
                if !gs[j].is_zero() && !q[i - j].is_zero() {
                    acc = &acc - &(&gs[j] * &q[i - j]);
                }
            }
            q.push(&acc * &inv);
        }
        let q = BinaryForm::new(q);
        (q.mul(g) == *self).then_some(q)
    }

    /// `f(M·(x, y)ᵀ)` for an invertible 2×2 matrix `M`. This is a right action:
    /// `f.compose(M).compose(N) == f.compose(M·N)`.
    pub fn compose(&self, m: &Matrix) -> Result<BinaryForm> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::Invalid("composition needs a 2×2 matrix".into()));
        }
        if m.determinant().is_zero() {
            return Err(Error::Singular("composition with a singular matrix"));
        }
        Ok(self.compose_unchecked(m))
    }

    pub(crate) fn compose_unchecked(&self, m: &Matrix) -> BinaryForm {
        let d = self.degree();
        let l1 = BinaryForm::linear(m[(0, 0)].clone(), m[(0, 1)].clone());
        let l2 = BinaryForm::linear(m[(1, 0)].clone(), m[(1, 1)].clone());
        let mut p1 = vec![BinaryForm::constant(Coef::one())];
        let mut p2 = vec![BinaryForm::constant(Coef::one())];
        for k in 1..=d {
            p1.push(p1[k - 1].mul(&l1));
            p2.push(p2[k - 1].mul(&l2));
        }
        let mut out = BinaryForm::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = p1[d - i].mul(&p2[i]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// `∂f/∂x`, of degree `d − 1` (the zero form when `d = 0`).
    pub fn derivative_x(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm::new(
            (0..d)
                .map(|i| &self.coeffs[i] * &Coef::int((d - i) as i64))
                .collect(),
        )
    }

    /// `∂f/∂y`, of degree `d − 1` (the zero form when `d = 0`).
    pub fn derivative_y(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm::new(
            (1..=d)
                .map(|i| &self.coeffs[i] * &Coef::int(i as i64))
                .collect(),
        )
    }

    /// Product of the distinct linear factors, monic.
    pub fn squarefree_part(&self) -> Result<BinaryForm> {
        if self.is_zero() {
            return Err(Error::Invalid("squarefree part of the zero form".into()));
        }
        if self.degree() <= 1 {
            return Ok(self.monic());
        }
        // by Euler's identity gcd(f_x, f_y) carries every factor with multiplicity one less
        let g = self.derivative_x().gcd(&self.derivative_y())?;
        Ok(self.div_exact(&g).expect("gcd of the partials divides f").monic())
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() <= 1
            || self
                .derivative_x()
                .gcd(&self.derivative_y())
                .is_ok_and(|g| g.degree() == 0)
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(Coef::to_complex).collect()
    }

    pub fn eval(&self, x: &Coef, y: &Coef) -> Coef {
        let d = self.degree();
        let mut acc = Coef::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&(c * &x.pow((d - i) as u32)) * &y.pow(i as u32));
        }
        acc
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        BinaryForm::mul(self, rhs)
    }
}

/// Multiplication-by-`s` matrix from degree-`m` coefficient vectors to
/// degree-`m + deg s` coefficient vectors (shape `(m + deg s + 1) × (m + 1)`).
pub fn multiplication_matrix(s: &BinaryForm, m: usize) -> Matrix {
    let k = s.degree();
    let mut out = Matrix::zeros(m + k + 1, m + 1);
    for j in 0..=m {
        for (i, c) in s.coeffs().iter().enumerate() {
            out[(i + j, j)] = c.clone();
        }
    }
    out
}

/// Euclid on ascending coefficient vectors with nonzero leading entries.
fn univariate_gcd(mut a: Vec<Coef>, mut b: Vec<Coef>) -> Vec<Coef> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = univariate_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn trim(v: &mut Vec<Coef>) {
    while v.last().is_some_and(Coef::is_zero) {
        v.pop();
    }
}

fn univariate_rem(a: &[Coef], b: &[Coef]) -> Vec<Coef> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = b[db].inv().expect("nonzero leading coefficient");
    while r.len() > db {
        let lead = r.last().expect("nonempty").clone();
        if !lead.is_zero() {
            let f = &lead * &inv;
            let shift = r.len() - 1 - db;
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    r[shift + j] = &r[shift + j] - &(&f * bj);
                }
            }
        }
        r.pop();
    }
    trim(&mut r);
    // keep the remainder monic to curb coefficient growth
    if let Some(l) = r.last().cloned() {
        let inv = l.inv().expect("nonzero");
        for c in r.iter_mut() {
            *c = &*c * &inv;
        }
    }
    r
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (a, 0) => pow_str("x", a),
                (0, b) => pow_str("y", b),
                (a, b) => format!("{}*{}", pow_str("x", a), pow_str("y", b)),
            };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn pow_str(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn products() {
        assert_eq!(BinaryForm::x().mul(&BinaryForm::y()), f(&[0, 1, 0]));
        assert_eq!(f(&[1, 1]).mul(&f(&[1, -1])), f(&[1, 0, -1]));
        // x² · (x² + y²) = x⁴ + x²y²
        assert_eq!(f(&[1, 0, 0]).mul(&f(&[1, 0, 1])), f(&[1, 0, 1, 0, 0]));
    }

    #[test]
    fn gcd_examples() {
        // (x³, xy²) → x
        assert_eq!(f(&[1, 0, 0, 0]).gcd(&f(&[0, 0, 1, 0])).unwrap(), BinaryForm::x());
        // (x², y²) → 1
        assert_eq!(f(&[1, 0, 0]).gcd(&f(&[0, 0, 1])).unwrap(), f(&[1]));
        // (x²y, xy²) → xy
        assert_eq!(f(&[0, 1, 0, 0]).gcd(&f(&[0, 0, 1, 0])).unwrap(), f(&[0, 1, 0]));
        assert_eq!(BinaryForm::zero(2).gcd(&BinaryForm::zero(3)), Err(Error::ZeroGcd));
        assert_eq!(BinaryForm::zero(2).gcd(&f(&[2, 4])).unwrap(), f(&[1, 2]));
    }

    #[test]
    fn gcd_tracks_factor_y() {
        // y²(x + y) and y(x + y)(x - y) → y(x + y)
        let a = f(&[0, 0, 1]).mul(&f(&[1, 1]));
        let b = f(&[0, 1]).mul(&f(&[1, 1])).mul(&f(&[1, -1]));
        assert_eq!(a.gcd(&b).unwrap(), f(&[0, 1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = f(&[1, 0, -1]);
        assert_eq!(a.div_exact(&f(&[1, 1])), Some(f(&[1, -1])));
        assert_eq!(a.div_exact(&f(&[1, 2])), None);
        let b = f(&[0, 1, 0, 0]); // x²y
        assert_eq!(b.div_exact(&f(&[0, 1])), Some(f(&[1, 0, 0])));
        assert_eq!(b.div_exact(&f(&[0, 0, 1])), None);
        assert_eq!(f(&[1, 0, 0]).div_exact(&f(&[1, 0])), Some(f(&[1, 0])));
    }

    #[test]
    fn squarefree_parts() {
        // x³y(x + y)² → xy(x + y)
        let g = f(&[1, 0, 0, 0]).mul(&f(&[0, 1])).mul(&f(&[1, 2, 1]));
        assert_eq!(g.squarefree_part().unwrap(), f(&[0, 1, 1, 0]));
        assert!(!g.is_squarefree());
        assert!(f(&[1, 0, -1]).is_squarefree());
        assert_eq!(f(&[0, 0, 5]).squarefree_part().unwrap(), f(&[0, 1]));
    }

    #[test]
    fn compose_examples() {
        let x2 = f(&[1, 0, 0]);
        assert_eq!(x2.compose(&Matrix::identity(2)).unwrap(), x2);
        let swap = Matrix::from_int_rows(&[[0, 1], [1, 0]]);
        assert_eq!(x2.compose(&swap).unwrap(), f(&[0, 0, 1]));
        assert!(x2.compose(&Matrix::from_int_rows(&[[1, 1], [1, 1]])).is_err());
        // xy(x⁴ - y⁴) under diag(ζ₄, 1) picks up the factor ζ₄
        let t = f(&[0, 1, 0, 0, 0, -1, 0]);
        let i = Coef::root_of_unity(4, 1);
        let d = Matrix::from_rows(vec![vec![i.clone(), Coef::zero()], vec![Coef::zero(), Coef::one()]]);
        let c = t.compose(&d).unwrap();
        assert!(c.is_proportional(&t));
        assert_eq!(c, t.scale(&i));
    }

    #[test]
    fn multiplication_matrix_matches_product() {
        let s = f(&[2, -1]);
        let t = f(&[1, 3, 5]);
        let m = multiplication_matrix(&s, 2);
        assert_eq!(m.mul_vec(t.coeffs()), s.mul(&t).into_coeffs());
    }

    #[test]
    fn json_shape() {
        let g = f(&[1, 0, -1]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"degree":2,"coeffs":["1","0","-1"]}"#);
        let back: BinaryForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<BinaryForm>(r#"{"degree":3,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(f(&[1, 0, -1]).to_string(), "x^2 + -1*y^2");
        assert_eq!(f(&[0, 3, 0]).to_string(), "3*x*y");
    }
}
