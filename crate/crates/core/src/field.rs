//! Exact coefficient fields: the rationals and the cyclotomic fields `Q(ζ_n)`.
//!
//! Elements of `Q(ζ_n)` are stored as coordinate vectors in the power basis
//! `1, ζ, …, ζ^{φ(n)-1}` and reduced modulo the cyclotomic polynomial `Φ_n`.
//! Values that happen to be rational are always demoted to [`Coef::Rat`], so
//! the cheap path is taken whenever possible.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Tag of a coefficient field. Cyclotomic conductors are canonical: `Q(ζ_{2k})`
/// with `k` odd is the same field as `Q(ζ_k)` and is tagged with `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefField {
    Rational,
    Cyclotomic(u32),
}

impl CoefField {
    pub fn cyclotomic(n: u32) -> Self {
        let n = canonical_conductor(n);
        if n == 1 {
            CoefField::Rational
        } else {
            CoefField::Cyclotomic(n)
        }
    }

    pub fn conductor(self) -> u32 {
        match self {
            CoefField::Rational => 1,
            CoefField::Cyclotomic(n) => n,
        }
    }

    /// Degree of the field over the rationals.
    pub fn degree(self) -> usize {
        euler_phi(self.conductor()) as usize
    }

    /// Smallest catalog field containing both.
    pub fn join(self, other: CoefField) -> CoefField {
        CoefField::cyclotomic(self.conductor().lcm(&other.conductor()))
    }
}

fn canonical_conductor(n: u32) -> u32 {
    assert!(n >= 1, "cyclotomic conductor must be positive");
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Integer coefficients of `Φ_n`, ascending.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = div_monic(&num, &div);
        }
    }
    num
}

fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = rem.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Reduction data for one cyclotomic field.
#[derive(Debug)]
struct CycloCtx {
    n: u32,
    phi: usize,
    /// `powers[k]` = coordinates of `ζ^k` for `k < max(n, 2φ - 1)`.
    powers: Vec<Vec<Rational>>,
}

impl CycloCtx {
    fn build(n: u32) -> Self {
        let modulus = cyclotomic_poly(n);
        let phi = modulus.len() - 1;
        let count = (n as usize).max(2 * phi);
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(count);
        let mut cur = vec![Rational::zero(); phi];
        cur[0] = Rational::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by ζ: shift up, then fold the top using ζ^φ = -Σ m_i ζ^i
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for (i, m) in modulus.iter().take(phi).enumerate() {
                    cur[i] -= &top * Rational::from_integer(m.clone());
                }
            }
        }
        CycloCtx { n, phi, powers }
    }

    fn power(&self, k: usize) -> &[Rational] {
        &self.powers[k % self.n as usize]
    }

    fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut full = vec![Rational::zero(); 2 * self.phi - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    full[i + j] += ai * bj;
                }
            }
        }
        let mut out = full[..self.phi].to_vec();
        for (k, c) in full.iter().enumerate().skip(self.phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        out
    }

    fn inv(&self, a: &[Rational]) -> Option<Vec<Rational>> {
        // columns of the multiplication-by-a matrix are a·ζ^j
        let phi = self.phi;
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul(a, &self.powers[j]);
            for i in 0..phi {
                m[i][j] = col[i].clone();
            }
        }
        m[0][phi] = Rational::one();
        solve_augmented(m, phi)
    }
}

/// Gauss–Jordan on an augmented `k × (k+1)` rational system.
fn solve_augmented(mut m: Vec<Vec<Rational>>, k: usize) -> Option<Vec<Rational>> {
    for col in 0..k {
        let piv = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[k].clone()).collect())
}

fn ctx(n: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(c) = cache.read().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(c);
    }
    let built = Arc::new(CycloCtx::build(n));
    let mut w = cache.write().expect("cyclotomic cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

/// An exact element of a catalog coefficient field.
#[derive(Clone, Debug)]
pub enum Coef {
    Rat(Rational),
    /// Irrational element of `Q(ζ_n)`; `coords.len() == φ(n)`.
    Cyc { n: u32, coords: Vec<Rational> },
}

impl Coef {
    pub fn zero() -> Self {
        Coef::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Coef::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Coef::Rat(rat(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Coef::Rat(ratio(n, d))
    }

    /// `e^{2πik/n}`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u32;
        if n == 1 || k == 0 {
            return Coef::one();
        }
        if n == 2 {
            return Coef::int(-1);
        }
        if n % 4 == 2 {
            let h = n / 2;
            let base = -Coef::root_of_unity(h, h.div_ceil(2) as i64);
            return base.pow(k);
        }
        let c = ctx(n);
        Coef::from_coords(n, c.power(k as usize).to_vec())
    }

    /// Builds an element of `Q(ζ_n)` from power-basis coordinates.
    pub fn from_coords(n: u32, coords: Vec<Rational>) -> Self {
        let n = canonical_conductor(n);
        if n == 1 {
            return Coef::Rat(coords.into_iter().next().unwrap_or_else(Rational::zero));
        }
        let phi = euler_phi(n) as usize;
        assert_eq!(coords.len(), phi, "wrong coordinate count for Q(ζ_{n})");
        Coef::Cyc { n, coords }.demote()
    }

    fn demote(self) -> Self {
        match self {
            Coef::Cyc { coords, .. } if coords[1..].iter().all(Zero::is_zero) => {
                Coef::Rat(coords.into_iter().next().expect("nonempty coordinates"))
            }
            other => other,
        }
    }

    pub fn field(&self) -> CoefField {
        match self {
            Coef::Rat(_) => CoefField::Rational,
            Coef::Cyc { n, .. } => CoefField::Cyclotomic(*n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Rat(r) => r.is_zero(),
            Coef::Cyc { .. } => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coef::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coef::Rat(r) => Some(r),
            Coef::Cyc { .. } => None,
        }
    }

    /// Coordinates in the power basis of `Q(ζ_n)`; `n` must be a multiple of
    /// this element's conductor.
    pub fn coords_in(&self, n: u32) -> Vec<Rational> {
        let n = canonical_conductor(n);
        let phi = euler_phi(n) as usize;
        match self {
            Coef::Rat(r) => {
                let mut v = vec![Rational::zero(); phi];
                v[0] = r.clone();
                v
            }
            Coef::Cyc { n: m, coords } => {
                assert!(n.is_multiple_of(*m), "Q(ζ_{m}) does not embed in Q(ζ_{n})");
                if *m == n {
                    return coords.clone();
                }
                let c = ctx(n);
                let step = (n / m) as usize;
                let mut v = vec![Rational::zero(); phi];
                for (j, cj) in coords.iter().enumerate() {
                    if cj.is_zero() {
                        continue;
                    }
                    for (o, p) in v.iter_mut().zip(c.power(j * step)) {
                        if !p.is_zero() {
                            *o += cj * p;
                        }
                    }
                }
                v
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Coef {
        let mut base = self.clone();
        let mut acc = Coef::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Coef> {
        match self {
            Coef::Rat(r) if r.is_zero() => None,
            Coef::Rat(r) => Some(Coef::Rat(r.recip())),
            Coef::Cyc { n, coords } => {
                let c = ctx(*n);
                c.inv(coords).map(|v| Coef::from_coords(*n, v))
            }
        }
    }

    /// Image under the embedding `ζ_n ↦ e^{2πi/n}`.
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Coef::Rat(r) => Complex64::new(rational_to_f64(r), 0.0),
            Coef::Cyc { n, coords } => {
                let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / *n as f64);
                let mut acc = Complex64::new(0.0, 0.0);
                let mut p = Complex64::new(1.0, 0.0);
                for c in coords {
                    acc += p * rational_to_f64(c);
                    p *= w;
                }
                acc
            }
        }
    }

    fn binary(
        a: &Coef,
        b: &Coef,
        rat_op: impl Fn(&Rational, &Rational) -> Rational,
        cyc_op: impl Fn(u32, Vec<Rational>, Vec<Rational>) -> Vec<Rational>,
    ) -> Coef {
        match (a, b) {
            (Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(rat_op(x, y)),
            _ => {
                let n = a.field().join(b.field()).conductor();
                let out = cyc_op(n, a.coords_in(n), b.coords_in(n));
                Coef::from_coords(n, out)
            }
        }
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator beyond f64 range individually
        let shift = r.numer().bits().max(r.denom().bits()) as i64 - 60;
        let n = (r.numer() >> shift.max(0) as usize).to_f64().unwrap_or(0.0);
        let d = (r.denom() >> shift.max(0) as usize).to_f64().unwrap_or(1.0);
        n / d
    })
}

impl PartialEq for Coef {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coef::Rat(a), Coef::Rat(b)) => a == b,
            (Coef::Rat(_), Coef::Cyc { .. }) | (Coef::Cyc { .. }, Coef::Rat(_)) => false,
            _ => {
                let n = self.field().join(other.field()).conductor();
                self.coords_in(n) == other.coords_in(n)
            }
        }
    }
}

impl Eq for Coef {}

impl From<Rational> for Coef {
    fn from(r: Rational) -> Self {
        Coef::Rat(r)
    }
}

impl From<i64> for Coef {
    fn from(n: i64) -> Self {
        Coef::int(n)
    }
}

impl<'a> Add<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn add(self, rhs: &Coef) -> Coef {
        Coef::binary(self, rhs, |x, y| x + y, |_, mut u, v| {
            for (a, b) in u.iter_mut().zip(v) {
                *a += b;
            }
            u
        })
    }
}

impl<'a> Sub<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn sub(self, rhs: &Coef) -> Coef {
        Coef::binary(self, rhs, |x, y| x - y, |_, mut u, v| {
            for (a, b) in u.iter_mut().zip(v) {
                *a -= b;
            }
            u
        })
    }
}

impl<'a> Mul<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn mul(self, rhs: &Coef) -> Coef {
        if self.is_zero() || rhs.is_zero() {
            return Coef::zero();
        }
        Coef::binary(self, rhs, |x, y| x * y, |n, u, v| ctx(n).mul(&u, &v))
    }
}

impl<'a> Div<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn div(self, rhs: &Coef) -> Coef {
        let inv = rhs.inv().expect("division by zero coefficient");
        self * &inv
    }
}

impl Neg for &Coef {
    type Output = Coef;
    fn neg(self) -> Coef {
        match self {
            Coef::Rat(r) => Coef::Rat(-r),
            Coef::Cyc { n, coords } => Coef::Cyc {
                n: *n,
                coords: coords.iter().map(|c| -c).collect(),
            },
        }
    }
}

impl Neg for Coef {
    type Output = Coef;
    fn neg(self) -> Coef {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Coef> for Coef {
            type Output = Coef;
            fn $m(self, rhs: Coef) -> Coef {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Coef> for Coef {
            type Output = Coef;
            fn $m(self, rhs: &Coef) -> Coef {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Rat(r) => write!(f, "{r}"),
            Coef::Cyc { n, coords } => {
                let mut first = true;
                write!(f, "(")?;
                for (k, c) in coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match k {
                        0 => write!(f, "{c}")?,
                        1 => write!(f, "{c}*z{n}")?,
                        _ => write!(f, "{c}*z{n}^{k}")?,
                    }
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let r: Rational = s.parse().map_err(|_| format!("malformed rational {s:?}"))?;
    Ok(r)
}

/// Rationals travel as strings in lowest terms (`"p/q"`, or `"p"` when `q = 1`).
pub fn rational_to_string(r: &Rational) -> String {
    // BigRational keeps lowest terms with positive denominator
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Serialize for Coef {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Coef::Rat(r) => s.serialize_str(&rational_to_string(r)),
            Coef::Cyc { n, coords } => {
                let mut st = s.serialize_struct("Cyclotomic", 2)?;
                st.serialize_field("n", n)?;
                let c: Vec<String> = coords.iter().map(rational_to_string).collect();
                st.serialize_field("coords", &c)?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Coef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
            Cyc { n: u32, coords: Vec<String> },
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => parse_rational(&s).map(Coef::Rat).map_err(de::Error::custom),
            Raw::Int(i) => Ok(Coef::int(i)),
            Raw::Cyc { n, coords } => {
                if n == 0 {
                    return Err(de::Error::custom("cyclotomic conductor must be positive"));
                }
                let mut v = coords
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(de::Error::custom)?;
                let canon = canonical_conductor(n);
                if canon != n {
                    // Q(ζ_{2k}) coordinates: map ζ_{2k}^j = (-ζ_k^{(k+1)/2})^j
                    let z = Coef::root_of_unity(n, 1);
                    let mut acc = Coef::zero();
                    let mut p = Coef::one();
                    for c in v {
                        acc = acc + &Coef::Rat(c) * &p;
                        p = &p * &z;
                    }
                    return Ok(acc);
                }
                let phi = euler_phi(n) as usize;
                if v.len() != phi {
                    return Err(de::Error::custom(format!(
                        "Q(ζ_{n}) needs {phi} coordinates, got {}",
                        v.len()
                    )));
                }
                if n == 1 {
                    return Ok(Coef::Rat(v.remove(0)));
                }
                Ok(Coef::from_coords(n, v))
            }
        }
    }
}

/// True when `|x - p/q| < tol` for some `q ≤ max_den`; returns that rational.
pub fn rationalize(x: f64, max_den: i64, tol: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    for q in 1..=max_den {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() < tol && p.abs() < 9.0e15 {
            return Some(ratio(p as i64, q));
        }
    }
    None
}

pub fn abs_rational(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |v: Vec<BigInt>| v.iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(5)), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        for n in [3u32, 4, 5, 6, 7, 8, 10, 12] {
            let z = Coef::root_of_unity(n, 1);
            for k in 1..n {
                assert!(!z.pow(k).is_one(), "ζ_{n}^{k} should not be 1");
            }
            assert!(z.pow(n).is_one());
            let c = z.to_complex();
            let e = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64);
            assert!((c - e).norm() < 1e-12, "embedding of ζ_{n}");
        }
    }

    #[test]
    fn gaussian_identities() {
        let i = Coef::root_of_unity(4, 1);
        assert_eq!(&i * &i, Coef::int(-1));
        let w = Coef::root_of_unity(3, 1);
        // 1 + ω + ω² = 0
        assert!((&(&Coef::one() + &w) + &w.pow(2)).is_zero());
        // ζ_12^3 = i, ζ_12^4 = ω
        assert_eq!(Coef::root_of_unity(12, 3), Coef::root_of_unity(4, 1));
        assert_eq!(Coef::root_of_unity(12, 4), w);
        // ζ_10 = -ζ_5^3
        assert_eq!(Coef::root_of_unity(10, 1), -Coef::root_of_unity(5, 3));
    }

    #[test]
    fn inversion_in_every_field() {
        for n in [3u32, 4, 5, 8, 12, 7] {
            let z = Coef::root_of_unity(n, 1);
            let a = &(&Coef::int(2) + &z) + &z.pow(2);
            let inv = a.inv().unwrap();
            assert!((&a * &inv).is_one());
        }
        assert!(Coef::zero().inv().is_none());
    }

    #[test]
    fn mixed_fields_promote() {
        let i = Coef::root_of_unity(4, 1);
        let w = Coef::root_of_unity(3, 1);
        let p = &i * &w;
        assert_eq!(p.field(), CoefField::Cyclotomic(12));
        assert_eq!(p, Coef::root_of_unity(12, 7));
        assert_eq!(&p / &w, i);
    }

    #[test]
    fn json_round_trip() {
        let a = Coef::frac(-3, 6);
        assert_eq!(serde_json::to_string(&a).unwrap(), "\"-1/2\"");
        let z = &Coef::root_of_unity(5, 2) + &Coef::frac(1, 3);
        let s = serde_json::to_string(&z).unwrap();
        let back: Coef = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
        let ten: Coef = serde_json::from_str(r#"{"n":10,"coords":["0","1","0","0"]}"#).unwrap();
        assert_eq!(ten, Coef::root_of_unity(10, 1));
        assert!(serde_json::from_str::<Coef>("\"1/0\"").is_err());
    }

    #[test]
    fn rationalize_small_denominators() {
        assert_eq!(rationalize(0.75, 1000, 1e-9), Some(ratio(3, 4)));
        assert_eq!(rationalize(-2.0, 1000, 1e-9), Some(rat(-2)));
        assert!(rationalize(std::f64::consts::PI, 1000, 1e-9).is_none());
    }
}
