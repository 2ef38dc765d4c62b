//! Finite Möbius groups `G ≤ PGL₂` with `P¹/G ≅ P¹`: exact standard models,
//! their quotient pencils `[A : B]`, conjugation and normalizer data, and a
//! numeric classifier for groups recovered from deck transformations.
//!
//! Standard models (all over the rationals or a cyclotomic field):
//!
//! | kind            | generators                                   | pencil `(A, B)`                       |
//! |-----------------|----------------------------------------------|---------------------------------------|
//! | `Cyclic(m)`     | `diag(ζ_m, 1)`                               | `(x^m, y^m)`                          |
//! | `Dihedral(m)`   | `diag(ζ_m, 1)`, `[[0,1],[1,0]]`              | `(x^m y^m, x^{2m} + y^{2m})`          |
//! | `Tetrahedral`   | `diag(-1, 1)`, `[[0,1],[1,0]]`, `[[1,i],[1,-i]]` | `(t², (x⁴+y⁴)((x⁴+y⁴)² − 36x⁴y⁴))` |
//! | `Octahedral`    | `diag(i, 1)`, `[[0,1],[1,0]]`, `[[1,i],[1,-i]]`  | `(t⁴, (x⁸ + 14x⁴y⁴ + y⁸)³)`        |
//! | `Icosahedral`   | `diag(ε, 1)`, `[[0,-1],[1,0]]`, Klein's involution | `(1728 f⁵, H³)`                  |
//!
//! with `t = xy(x⁴ − y⁴)`, `f = xy(x¹⁰ + 11x⁵y⁵ − y¹⁰)`, `ε = ζ₅` and `H` the
//! degree-20 Hessian of `f`. The tetrahedral `B` is `(Φ³ + Ψ³)/2` for Klein's
//! pair `Φ, Ψ = x⁴ ± 2√−3 x²y² + y⁴`, which keeps it rational.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Coef;
use crate::form::BinaryForm;
use crate::matrix::Matrix;
use crate::roots::CPoint;

/// An invertible 2×2 matrix taken modulo scalars.
#[derive(Clone, Debug)]
pub struct MoebiusElement {
    m: Matrix,
}

impl MoebiusElement {
    pub fn new(m: Matrix) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::Invalid("a Möbius element is a 2×2 matrix".into()));
        }
        if m.determinant().is_zero() {
            return Err(Error::Singular("Möbius element with zero determinant"));
        }
        Ok(MoebiusElement { m })
    }

    pub fn from_entries(a: Coef, b: Coef, c: Coef, d: Coef) -> Result<Self> {
        MoebiusElement::new(Matrix::from_rows(vec![vec![a, b], vec![c, d]]))
    }

    pub fn from_ints(rows: [[i64; 2]; 2]) -> Result<Self> {
        MoebiusElement::new(Matrix::from_int_rows(&rows))
    }

    pub fn identity() -> Self {
        MoebiusElement { m: Matrix::identity(2) }
    }

    pub fn diag(a: Coef, b: Coef) -> Self {
        MoebiusElement::from_entries(a, Coef::zero(), Coef::zero(), b).expect("nonzero diagonal")
    }

    pub fn swap() -> Self {
        MoebiusElement::from_ints([[0, 1], [1, 0]]).expect("invertible")
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &MoebiusElement) -> MoebiusElement {
        MoebiusElement { m: self.m.mul(&other.m) }
    }

    /// Adjugate, which is the inverse modulo scalars.
    pub fn inverse(&self) -> MoebiusElement {
        let m = &self.m;
        MoebiusElement {
            m: Matrix::from_rows(vec![
                vec![m[(1, 1)].clone(), -&m[(0, 1)]],
                vec![-&m[(1, 0)], m[(0, 0)].clone()],
            ]),
        }
    }

    /// Representative whose first nonzero entry (row-major) is 1.
    pub fn canonical(&self) -> Matrix {
        let lead = (0..4)
            .map(|k| &self.m[(k / 2, k % 2)])
            .find(|c| !c.is_zero())
            .expect("invertible matrix has a nonzero entry")
            .inv()
            .expect("nonzero");
        let mut out = self.m.clone();
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = &out[(i, j)] * &lead;
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == MoebiusElement::identity()
    }

    pub fn to_complex(&self) -> ComplexMoebius {
        let e = |i, j| self.m[(i, j)].to_complex();
        ComplexMoebius::new([e(0, 0), e(0, 1), e(1, 0), e(1, 1)])
    }
}

impl PartialEq for MoebiusElement {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for MoebiusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

/// Floating-point Möbius element, stored with unit Frobenius norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMoebius {
    pub a: [Complex64; 4],
}

impl ComplexMoebius {
    pub fn new(a: [Complex64; 4]) -> Self {
        let n = a.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        ComplexMoebius { a: a.map(|c| c / n) }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        ComplexMoebius::new([one, zero, zero, one])
    }

    pub fn mul(&self, o: &ComplexMoebius) -> ComplexMoebius {
        let [a, b, c, d] = self.a;
        let [e, f, g, h] = o.a;
        ComplexMoebius::new([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    /// The product together with its error amplification `‖a‖‖b‖ / ‖ab‖`, so a
    /// closure test can compare `ab` at `tol · κ`.
    pub fn mul_conditioned(&self, o: &ComplexMoebius) -> (ComplexMoebius, f64) {
        let [a, b, c, d] = self.a;
        let [e, f, g, h] = o.a;
        let raw = [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h];
        let n = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        (ComplexMoebius::new(raw), 1.0 / n)
    }

    pub fn inverse(&self) -> ComplexMoebius {
        let [a, b, c, d] = self.a;
        ComplexMoebius::new([d, -b, -c, a])
    }

    pub fn det(&self) -> Complex64 {
        self.a[0] * self.a[3] - self.a[1] * self.a[2]
    }

    pub fn apply(&self, p: &CPoint) -> CPoint {
        let [a, b, c, d] = self.a;
        CPoint::new(a * p.x + b * p.y, c * p.x + d * p.y)
    }

    /// Projective distance `min_φ ‖M − e^{iφ}N‖` between unit representatives.
    pub fn distance(&self, other: &ComplexMoebius) -> f64 {
        let ip: Complex64 = self.a.iter().zip(&other.a).map(|(x, y)| x * y.conj()).sum();
        let phase = if ip.norm() > 0.0 { ip / ip.norm() } else { Complex64::new(1.0, 0.0) };
        self.a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| (x - phase * y).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// The unique element sending `src[i] ↦ dst[i]` for three distinct points.
    pub fn from_three_points(src: [CPoint; 3], dst: [CPoint; 3]) -> Option<ComplexMoebius> {
        let to_std = |p: [CPoint; 3]| -> Option<[Complex64; 4]> {
            // columns λ₀p₀, λ₁p₁ with λ₀p₀ + λ₁p₁ = p₂ send [1:0], [0:1], [1:1] to p
            let det = p[0].x * p[1].y - p[1].x * p[0].y;
            if det.norm() < 1e-14 {
                return None;
            }
            let l0 = (p[2].x * p[1].y - p[1].x * p[2].y) / det;
            let l1 = (p[0].x * p[2].y - p[2].x * p[0].y) / det;
            Some([l0 * p[0].x, l1 * p[1].x, l0 * p[0].y, l1 * p[1].y])
        };
        let s = ComplexMoebius { a: to_std(src)? };
        let t = ComplexMoebius { a: to_std(dst)? };
        if s.det().norm() < 1e-300 || t.det().norm() < 1e-300 {
            return None;
        }
        Some(t.mul(&s.inverse()))
    }

    /// `tr² / det`, the conjugacy invariant of the projective class.
    pub fn trace_invariant(&self) -> Complex64 {
        let tr = self.a[0] + self.a[3];
        tr * tr / self.det()
    }

    /// Projective order from `tr²/det = 2 + 2cos(2πj/k)`, searching `k ≤ max_order`.
    pub fn order(&self, max_order: usize) -> Option<usize> {
        let v = self.trace_invariant();
        let cos = ((v.re - 2.0) / 2.0).clamp(-1.0, 1.0);
        let frac = cos.acos() / (2.0 * std::f64::consts::PI);
        (1..=max_order.max(1)).find(|&k| {
            let t = k as f64 * frac;
            (t - t.round()).abs() < 1e-3
        })
    }

    /// Canonical representative: first entry of modulus above 1e-9 scaled to 1.
    pub fn canonical(&self) -> [Complex64; 4] {
        let lead = self
            .a
            .iter()
            .find(|c| c.norm() > 1e-9)
            .copied()
            .unwrap_or(Complex64::new(1.0, 0.0));
        self.a.map(|c| c / lead)
    }
}

/// Isomorphism type of a finite subgroup of `PGL₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Cyclic(u32),
    Dihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupKind {
    /// Dihedral group of order `2m`; `m = 1` is the cyclic group of order 2.
    pub fn dihedral(m: u32) -> Result<GroupKind> {
        match m {
            0 => Err(Error::Invalid("dihedral groups need m ≥ 1".into())),
            1 => Ok(GroupKind::Cyclic(2)),
            _ => Ok(GroupKind::Dihedral(m)),
        }
    }

    pub fn validate(self) -> Result<GroupKind> {
        match self {
            GroupKind::Cyclic(0) => Err(Error::Invalid("cyclic groups need m ≥ 1".into())),
            GroupKind::Dihedral(m) if m < 2 => Err(Error::Invalid(
                "Dihedral(1) is not a catalog label; use Cyclic(2)".into(),
            )),
            k => Ok(k),
        }
    }

    pub fn order(self) -> usize {
        match self {
            GroupKind::Cyclic(m) => m as usize,
            GroupKind::Dihedral(m) => 2 * m as usize,
            GroupKind::Tetrahedral => 12,
            GroupKind::Octahedral => 24,
            GroupKind::Icosahedral => 60,
        }
    }

    /// Short name used in JSON: `cyclic`, `dihedral`, `tetrahedral`, …
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Cyclic(_) => "cyclic",
            GroupKind::Dihedral(_) => "dihedral",
            GroupKind::Tetrahedral => "tetrahedral",
            GroupKind::Octahedral => "octahedral",
            GroupKind::Icosahedral => "icosahedral",
        }
    }

    /// Cyclic/dihedral parameter `m`.
    pub fn parameter(self) -> Option<u32> {
        match self {
            GroupKind::Cyclic(m) | GroupKind::Dihedral(m) => Some(m),
            _ => None,
        }
    }

    pub fn from_name(name: &str, m: Option<u32>) -> Result<GroupKind> {
        let need_m = || m.ok_or_else(|| Error::Invalid(format!("group kind {name:?} needs \"m\"")));
        let kind = match name.to_ascii_lowercase().as_str() {
            "cyclic" => GroupKind::Cyclic(need_m()?),
            "dihedral" => GroupKind::dihedral(need_m()?)?,
            "tetrahedral" => GroupKind::Tetrahedral,
            "octahedral" => GroupKind::Octahedral,
            "icosahedral" => GroupKind::Icosahedral,
            other => return Err(Error::Invalid(format!("unknown group kind {other:?}"))),
        };
        kind.validate()
    }

    fn rank(self) -> u8 {
        match self {
            GroupKind::Cyclic(_) => 0,
            GroupKind::Dihedral(_) => 1,
            GroupKind::Tetrahedral => 2,
            GroupKind::Octahedral => 3,
            GroupKind::Icosahedral => 4,
        }
    }

    /// Catalog sort key: group order, then cyclic < dihedral < polyhedral.
    pub fn sort_key(self) -> (usize, u8) {
        (self.order(), self.rank())
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(m) => write!(f, "{}({m})", self.name()),
            None => write!(f, "{}", self.name()),
        }
    }
}

/// Every catalog kind of order at most `max_order`, in catalog order.
pub fn catalog_kinds(max_order: usize) -> Vec<GroupKind> {
    let mut out: Vec<GroupKind> = (1..=max_order as u32).map(GroupKind::Cyclic).collect();
    out.extend((2..=(max_order / 2) as u32).map(GroupKind::Dihedral));
    for k in [GroupKind::Tetrahedral, GroupKind::Octahedral, GroupKind::Icosahedral] {
        if k.order() <= max_order {
            out.push(k);
        }
    }
    out.sort_by_key(|k| k.sort_key());
    out
}

/// The group `θ · G_std · θ⁻¹`.
///
/// JSON: `{"kind": "cyclic", "m": 3, "theta": [["1","1"],["0","1"]]}`; `m` is
/// required for cyclic and dihedral kinds, `theta` defaults to the identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GroupSpecJson", into = "GroupSpecJson")]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub theta: MoebiusElement,
}

#[derive(Serialize, Deserialize)]
struct GroupSpecJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(default)]
    theta: Option<[[Coef; 2]; 2]>,
}

impl TryFrom<GroupSpecJson> for GroupSpec {
    type Error = Error;
    fn try_from(j: GroupSpecJson) -> Result<Self> {
        let kind = GroupKind::from_name(&j.kind, j.m)?;
        if j.m.is_some() && kind.parameter().is_none() {
            return Err(Error::Invalid(format!("group kind {:?} takes no \"m\"", j.kind)));
        }
        let theta = match j.theta {
            None => MoebiusElement::identity(),
            Some([[a, b], [c, d]]) => MoebiusElement::from_entries(a, b, c, d)?,
        };
        Ok(GroupSpec { kind, theta })
    }
}

impl From<GroupSpec> for GroupSpecJson {
    fn from(g: GroupSpec) -> Self {
        let m = g.theta.matrix();
        GroupSpecJson {
            kind: g.kind.name().to_string(),
            m: g.kind.parameter(),
            theta: Some([
                [m[(0, 0)].clone(), m[(0, 1)].clone()],
                [m[(1, 0)].clone(), m[(1, 1)].clone()],
            ]),
        }
    }
}

impl GroupSpec {
    pub fn standard(kind: GroupKind) -> Self {
        GroupSpec {
            kind,
            theta: MoebiusElement::identity(),
        }
    }

    pub fn conjugated(kind: GroupKind, theta: MoebiusElement) -> Self {
        GroupSpec { kind, theta }
    }

    pub fn order(&self) -> usize {
        self.kind.order()
    }
}

/// Two coprime forms of degree `|G|` spanning the `G`-invariant pencil; the
/// quotient map is `[A : B]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantPair {
    pub a: BinaryForm,
    pub b: BinaryForm,
}

impl InvariantPair {
    pub fn new(a: BinaryForm, b: BinaryForm) -> Result<Self> {
        if a.degree() != b.degree() {
            return Err(Error::Invalid("pencil forms must share a degree".into()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::Invalid("pencil forms must be nonzero".into()));
        }
        let g = a.gcd(&b)?;
        if g.degree() != 0 {
            return Err(Error::Invalid(format!("pencil forms share the factor {g}")));
        }
        Ok(InvariantPair { a, b })
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }
}

fn zeta(n: u32) -> Coef {
    Coef::root_of_unity(n, 1)
}

/// Generators of the standard model of `kind`.
pub fn standard_generators(kind: GroupKind) -> Vec<MoebiusElement> {
    let i = || zeta(4);
    let tetra_rotation = || {
        MoebiusElement::from_entries(Coef::one(), i(), Coef::one(), -i()).expect("invertible")
    };
    match kind {
        GroupKind::Cyclic(m) if m <= 1 => Vec::new(),
        GroupKind::Cyclic(m) => vec![MoebiusElement::diag(zeta(m), Coef::one())],
        GroupKind::Dihedral(m) => vec![
            MoebiusElement::diag(zeta(m), Coef::one()),
            MoebiusElement::swap(),
        ],
        GroupKind::Tetrahedral => vec![
            MoebiusElement::diag(Coef::int(-1), Coef::one()),
            MoebiusElement::swap(),
            tetra_rotation(),
        ],
        GroupKind::Octahedral => vec![
            MoebiusElement::diag(i(), Coef::one()),
            MoebiusElement::swap(),
            tetra_rotation(),
        ],
        GroupKind::Icosahedral => {
            let e = |k: i64| Coef::root_of_unity(5, k);
            let p = &e(1) - &e(4);
            let q = &e(2) - &e(3);
            vec![
                MoebiusElement::diag(e(1), Coef::one()),
                MoebiusElement::from_ints([[0, -1], [1, 0]]).expect("invertible"),
                MoebiusElement::from_entries(-&p, q.clone(), q, p).expect("invertible"),
            ]
        }
    }
}

fn octahedral_vertex_form() -> BinaryForm {
    BinaryForm::from_ints(&[0, 1, 0, 0, 0, -1, 0])
}

/// The catalog quotient pencil of the standard model.
pub fn standard_invariant_pair(kind: GroupKind) -> InvariantPair {
    let (a, b) = match kind {
        GroupKind::Cyclic(m) => {
            let m = m as usize;
            (BinaryForm::monomial(m, 0), BinaryForm::monomial(m, m))
        }
        GroupKind::Dihedral(m) => {
            let m = m as usize;
            let mut b = BinaryForm::monomial(2 * m, 0);
            b = b.add(&BinaryForm::monomial(2 * m, 2 * m));
            (BinaryForm::monomial(2 * m, m), b)
        }
        GroupKind::Tetrahedral => {
            let t = octahedral_vertex_form();
            let u = BinaryForm::from_ints(&[1, 0, 0, 0, 1]);
            let x4y4 = BinaryForm::monomial(8, 4).scale(&Coef::int(36));
            let b = u.mul(&u.mul(&u).sub(&x4y4));
            (t.pow(2), b)
        }
        GroupKind::Octahedral => {
            let t = octahedral_vertex_form();
            let w = BinaryForm::from_ints(&[1, 0, 0, 0, 14, 0, 0, 0, 1]);
            (t.pow(4), w.pow(3))
        }
        GroupKind::Icosahedral => {
            let mut f = vec![0i64; 13];
            f[1] = 1;
            f[6] = 11;
            f[11] = -1;
            let f = BinaryForm::from_ints(&f);
            let mut h = vec![0i64; 21];
            h[0] = -1;
            h[5] = 228;
            h[10] = -494;
            h[15] = -228;
            h[20] = -1;
            let h = BinaryForm::from_ints(&h);
            (f.pow(5).scale(&Coef::int(1728)), h.pow(3))
        }
    };
    InvariantPair::new(a, b).expect("catalog pencils are coprime")
}

/// Common scalars `λ_g` with `A∘g = λ_g·A` and `B∘g = λ_g·B`, if they exist.
pub fn invariance_scalars(pair: &InvariantPair, gens: &[MoebiusElement]) -> Option<Vec<Coef>> {
    gens.iter()
        .map(|g| {
            let ag = pair.a.compose_unchecked(g.matrix());
            let bg = pair.b.compose_unchecked(g.matrix());
            let idx = pair.a.coeffs().iter().position(|c| !c.is_zero())?;
            let lambda = &ag.coeffs()[idx] / &pair.a.coeffs()[idx];
            (ag == pair.a.scale(&lambda) && bg == pair.b.scale(&lambda)).then_some(lambda)
        })
        .collect()
}

pub fn verify_invariance(pair: &InvariantPair, gens: &[MoebiusElement]) -> bool {
    invariance_scalars(pair, gens).is_some()
}

/// `(A∘θ⁻¹, B∘θ⁻¹)`, the quotient pencil of `θGθ⁻¹`.
pub fn conjugated_pair(spec: &GroupSpec) -> Result<InvariantPair> {
    let inv = spec.theta.matrix().inverse()?;
    let std = standard_invariant_pair(spec.kind.validate()?);
    Ok(InvariantPair {
        a: std.a.compose(&inv)?,
        b: std.b.compose(&inv)?,
    })
}

/// Generators `θgθ⁻¹` of the conjugated group.
pub fn conjugated_generators(spec: &GroupSpec) -> Vec<MoebiusElement> {
    let inv = spec.theta.inverse();
    standard_generators(spec.kind)
        .iter()
        .map(|g| spec.theta.compose(g).compose(&inv))
        .collect()
}

/// Dimension of the normalizer `N(G_std)` inside `PGL₂`.
pub fn normalizer_dim(kind: GroupKind) -> usize {
    match kind {
        GroupKind::Cyclic(1) => 3,
        GroupKind::Cyclic(_) => 1,
        _ => 0,
    }
}

/// Exact closure of a generating set, stopping once `limit` elements are found.
pub fn generate_group(gens: &[MoebiusElement], limit: usize) -> Vec<MoebiusElement> {
    let mut elems = vec![MoebiusElement::identity()];
    let mut canon: Vec<Matrix> = vec![MoebiusElement::identity().canonical()];
    let mut frontier = 0;
    while frontier < elems.len() && elems.len() < limit {
        let cur = elems[frontier].clone();
        frontier += 1;
        for g in gens {
            let next = cur.compose(g);
            let c = next.canonical();
            if !canon.contains(&c) {
                canon.push(c);
                elems.push(next);
                if elems.len() >= limit {
                    break;
                }
            }
        }
    }
    elems
}

/// Identifies a numerically given finite group. Products are matched at
/// `tol` scaled by their conditioning.
pub fn classify_group(elements: &[ComplexMoebius], tol: f64) -> Result<GroupKind> {
    let n = elements.len();
    if n == 0 {
        return Err(Error::NotClosed("empty element list".into()));
    }
    let find = |g: &ComplexMoebius| elements.iter().any(|e| e.distance(g) < tol);
    if !find(&ComplexMoebius::identity()) {
        return Err(Error::NotClosed("identity missing".into()));
    }
    for a in elements {
        if !find(&a.inverse()) {
            return Err(Error::NotClosed("missing inverse".into()));
        }
        for b in elements {
            let (ab, kappa) = a.mul_conditioned(b);
            if !elements.iter().any(|e| e.distance(&ab) < tol * kappa) {
                return Err(Error::NotClosed("product outside the set".into()));
            }
        }
    }
    let orders: Vec<usize> = elements
        .iter()
        .map(|e| e.order(n).ok_or_else(|| Error::NotClosed("element of infinite order".into())))
        .collect::<Result<_>>()?;
    let count = |k: usize| orders.iter().filter(|&&o| o == k).count();
    if orders.contains(&n) {
        return Ok(GroupKind::Cyclic(n as u32));
    }
    if n.is_multiple_of(2) {
        let m = n / 2;
        let big = orders.iter().filter(|&&o| o > 2).count();
        if big <= m && count(2) >= m {
            return GroupKind::dihedral(m as u32);
        }
    }
    let stats = |want: &[(usize, usize)]| want.iter().all(|&(k, c)| count(k) == c);
    match n {
        12 if stats(&[(1, 1), (2, 3), (3, 8)]) => Ok(GroupKind::Tetrahedral),
        24 if stats(&[(1, 1), (2, 9), (3, 8), (4, 6)]) => Ok(GroupKind::Octahedral),
        60 if stats(&[(1, 1), (2, 15), (3, 20), (5, 24)]) => Ok(GroupKind::Icosahedral),
        _ => Err(Error::OrderNotInCatalog(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_generator() {
        let g = standard_generators(GroupKind::Cyclic(2));
        assert_eq!(g, vec![MoebiusElement::diag(Coef::int(-1), Coef::one())]);
        assert!(standard_generators(GroupKind::Cyclic(1)).is_empty());
    }

    #[test]
    fn catalog_pencils() {
        let p = standard_invariant_pair(GroupKind::Cyclic(2));
        assert_eq!((p.a, p.b), (BinaryForm::from_ints(&[1, 0, 0]), BinaryForm::from_ints(&[0, 0, 1])));
        let p = standard_invariant_pair(GroupKind::Cyclic(3));
        assert_eq!((p.a, p.b), (BinaryForm::from_ints(&[1, 0, 0, 0]), BinaryForm::from_ints(&[0, 0, 0, 1])));
        let p = standard_invariant_pair(GroupKind::Dihedral(2));
        assert_eq!(
            (p.a, p.b),
            (BinaryForm::from_ints(&[0, 0, 1, 0, 0]), BinaryForm::from_ints(&[1, 0, 0, 0, 1]))
        );
    }

    #[test]
    fn invariance_examples() {
        let p = standard_invariant_pair(GroupKind::Cyclic(2));
        let flip = MoebiusElement::diag(Coef::int(-1), Coef::one());
        assert_eq!(invariance_scalars(&p, &[flip]), Some(vec![Coef::one()]));
        assert!(!verify_invariance(&p, &[MoebiusElement::swap()]));
        let d2 = standard_invariant_pair(GroupKind::Dihedral(2));
        assert!(verify_invariance(
            &d2,
            &[MoebiusElement::swap(), MoebiusElement::diag(Coef::int(-1), Coef::one())]
        ));
        // z ↦ iz is not in the Klein four-group: x²y² changes sign, x⁴ + y⁴ does not
        assert!(!verify_invariance(&d2, &[MoebiusElement::diag(zeta(4), Coef::one())]));
    }

    #[test]
    fn conjugation_examples() {
        let c2 = GroupKind::Cyclic(2);
        let p = conjugated_pair(&GroupSpec::standard(c2)).unwrap();
        assert_eq!(p, standard_invariant_pair(c2));
        let p = conjugated_pair(&GroupSpec::conjugated(c2, MoebiusElement::swap())).unwrap();
        assert_eq!((p.a, p.b), (BinaryForm::from_ints(&[0, 0, 1]), BinaryForm::from_ints(&[1, 0, 0])));
        let shear = MoebiusElement::from_ints([[1, 1], [0, 1]]).unwrap();
        let p = conjugated_pair(&GroupSpec::conjugated(c2, shear)).unwrap();
        assert_eq!((p.a, p.b), (BinaryForm::from_ints(&[1, -2, 1]), BinaryForm::from_ints(&[0, 0, 1])));
        assert!(MoebiusElement::from_ints([[1, 2], [2, 4]]).is_err());
    }

    #[test]
    fn group_spec_json() {
        let g: GroupSpec = serde_json::from_str(r#"{"kind":"cyclic","m":2,"theta":[["1","1"],["0","1"]]}"#).unwrap();
        assert_eq!(g.kind, GroupKind::Cyclic(2));
        assert_eq!(g.theta, MoebiusElement::from_ints([[1, 1], [0, 1]]).unwrap());
        let back: GroupSpec = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
        let ico: GroupSpec = serde_json::from_str(r#"{"kind":"icosahedral"}"#).unwrap();
        assert_eq!(ico, GroupSpec::standard(GroupKind::Icosahedral));
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"cyclic"}"#).is_err());
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"dihedral","m":0}"#).is_err());
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"cyclic","m":2,"theta":[[1,2],[2,4]]}"#).is_err());
    }

    #[test]
    fn normalizer_table() {
        assert_eq!(normalizer_dim(GroupKind::Cyclic(1)), 3);
        assert_eq!(normalizer_dim(GroupKind::Cyclic(2)), 1);
        assert_eq!(normalizer_dim(GroupKind::Icosahedral), 0);
    }

    #[test]
    fn dihedral_one_is_cyclic_two() {
        assert_eq!(GroupKind::dihedral(1).unwrap(), GroupKind::Cyclic(2));
        assert!(GroupKind::Dihedral(1).validate().is_err());
        assert_eq!(GroupKind::from_name("dihedral", Some(1)).unwrap(), GroupKind::Cyclic(2));
    }

    #[test]
    fn catalog_ordering() {
        let k = catalog_kinds(4);
        assert_eq!(
            k,
            vec![
                GroupKind::Cyclic(1),
                GroupKind::Cyclic(2),
                GroupKind::Cyclic(3),
                GroupKind::Cyclic(4),
                GroupKind::Dihedral(2)
            ]
        );
        assert!(catalog_kinds(12).contains(&GroupKind::Tetrahedral));
    }

    fn numeric(kind: GroupKind) -> Vec<ComplexMoebius> {
        generate_group(&standard_generators(kind), 200)
            .iter()
            .map(MoebiusElement::to_complex)
            .collect()
    }

    #[test]
    fn classify_small_groups() {
        assert_eq!(classify_group(&numeric(GroupKind::Cyclic(2)), 1e-8).unwrap(), GroupKind::Cyclic(2));
        assert_eq!(classify_group(&numeric(GroupKind::Cyclic(3)), 1e-8).unwrap(), GroupKind::Cyclic(3));
        assert_eq!(classify_group(&numeric(GroupKind::Dihedral(2)), 1e-8).unwrap(), GroupKind::Dihedral(2));
        assert_eq!(classify_group(&numeric(GroupKind::Dihedral(3)), 1e-8).unwrap(), GroupKind::Dihedral(3));
    }

    #[test]
    fn classify_rejects_non_groups() {
        let e = numeric(GroupKind::Cyclic(3));
        assert!(matches!(classify_group(&e[..2], 1e-8), Err(Error::NotClosed(_))));
    }
}
