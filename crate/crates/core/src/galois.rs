//! Galois subspaces of a linear system: the section space of a quotient
//! pencil, projection centers and their Plücker coordinates.
//!
//! A center of codimension two in `P(V^∨)` is stored as the pencil matrix `R`
//! (2 × (N+1)) whose rows are coordinates, in the basis of `V`, of two forms
//! spanning the pencil `U ≤ V`; the center itself is the annihilator of `U`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rationalize, Coef, Rational};
use crate::form::{multiplication_matrix, BinaryForm};
use crate::groups::InvariantPair;
use crate::matrix::Matrix;
use crate::roots::{roots_numeric, CPoint};

/// A basis of `N + 1 ≥ 2` linearly independent forms of one degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SystemJson", into = "SystemJson")]
pub struct LinearSystem {
    degree: usize,
    basis: Vec<BinaryForm>,
    /// `(d+1) × (N+1)` matrix whose columns are the basis coefficient vectors.
    columns: Matrix,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    degree: usize,
    basis: Vec<BinaryForm>,
}

impl TryFrom<SystemJson> for LinearSystem {
    type Error = Error;
    fn try_from(j: SystemJson) -> Result<Self> {
        let sys = LinearSystem::new(j.basis)?;
        if sys.degree != j.degree {
            return Err(Error::Invalid(format!(
                "declared degree {} but basis forms have degree {}",
                j.degree, sys.degree
            )));
        }
        Ok(sys)
    }
}

impl From<LinearSystem> for SystemJson {
    fn from(s: LinearSystem) -> Self {
        SystemJson {
            degree: s.degree,
            basis: s.basis,
        }
    }
}

impl LinearSystem {
    pub fn new(basis: Vec<BinaryForm>) -> Result<Self> {
        if basis.len() < 2 {
            return Err(Error::Invalid("a linear system needs at least two forms".into()));
        }
        let degree = basis[0].degree();
        if basis.iter().any(|f| f.degree() != degree) {
            return Err(Error::Invalid("basis forms must share one degree".into()));
        }
        let columns = Matrix::from_rows(
            (0..=degree)
                .map(|i| basis.iter().map(|f| f.coeffs()[i].clone()).collect())
                .collect(),
        );
        if columns.rank() != basis.len() {
            return Err(Error::RankDeficient("basis forms are linearly dependent".into()));
        }
        Ok(LinearSystem {
            degree,
            basis,
            columns,
        })
    }

    /// The monomial basis `x^d, x^{d-1}y, …, y^d`.
    pub fn complete(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Invalid("the complete system needs degree ≥ 1".into()));
        }
        LinearSystem::new((0..=degree).map(|i| BinaryForm::monomial(degree, i)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[BinaryForm] {
        &self.basis
    }

    /// `N`, the dimension of the ambient projective space.
    pub fn ambient_dim(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn is_complete(&self) -> bool {
        self.basis.len() == self.degree + 1
    }

    fn is_monomial_basis(&self) -> bool {
        self.is_complete() && self.columns == Matrix::identity(self.degree + 1)
    }

    /// Coordinates of `f` in the basis, or `None` when `f ∉ span V`.
    pub fn coordinates(&self, f: &BinaryForm) -> Option<Vec<Coef>> {
        if f.degree() != self.degree {
            return None;
        }
        if self.is_monomial_basis() {
            return Some(f.coeffs().to_vec());
        }
        self.columns.solve(f.coeffs())
    }

    /// `Σ c_j · basis_j`.
    pub fn combine(&self, coords: &[Coef]) -> BinaryForm {
        assert_eq!(coords.len(), self.basis.len());
        BinaryForm::new(self.columns.mul_vec(coords))
    }

    /// Rows spanning the annihilator of `span V` inside degree-`d` coefficient space.
    fn annihilator(&self) -> Matrix {
        let k = self.columns.transpose().kernel_basis();
        if k.is_empty() {
            return Matrix::zeros(0, self.degree + 1);
        }
        Matrix::from_rows(k)
    }
}

/// A nonzero section `s` of degree `d − m` with `s·A, s·B ∈ span V`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaloisSection {
    s: BinaryForm,
}

impl GaloisSection {
    pub fn new(pair: &InvariantPair, s: BinaryForm, system: &LinearSystem) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::Invalid("a Galois section must be nonzero".into()));
        }
        if pair.degree() + s.degree() != system.degree() {
            return Err(Error::Invalid(format!(
                "section of degree {} does not match d − m = {} − {}",
                s.degree(),
                system.degree(),
                pair.degree()
            )));
        }
        for (name, f) in [("s·A", &pair.a), ("s·B", &pair.b)] {
            if system.coordinates(&s.mul(f)).is_none() {
                return Err(Error::NotInSpan(format!("{name} ∉ span V for s = {s}")));
            }
        }
        Ok(GaloisSection { s })
    }

    pub fn form(&self) -> &BinaryForm {
        &self.s
    }
}

/// Exact basis of the sections `s` of degree `d − m` with `s·A, s·B ∈ span V`.
/// Empty when `m > d` or when no such section exists.
pub fn galois_space(pair: &InvariantPair, system: &LinearSystem) -> Vec<BinaryForm> {
    let (m, d) = (pair.degree(), system.degree());
    if m > d {
        return Vec::new();
    }
    let k = d - m;
    let ann = system.annihilator();
    let conditions = ann
        .mul(&multiplication_matrix(&pair.a, k))
        .stack(&ann.mul(&multiplication_matrix(&pair.b, k)));
    conditions
        .kernel_basis()
        .into_iter()
        .map(BinaryForm::new)
        .collect()
}

/// A codimension-two center, given by its rank-2 pencil matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CenterJson", into = "CenterJson")]
pub struct ProjectionCenter {
    degree: usize,
    pencil: Matrix,
}

#[derive(Serialize, Deserialize)]
struct CenterJson {
    d: usize,
    pencil: Vec<Vec<Coef>>,
}

impl TryFrom<CenterJson> for ProjectionCenter {
    type Error = Error;
    fn try_from(j: CenterJson) -> Result<Self> {
        if j.pencil.len() != 2 || j.pencil.iter().any(|r| r.len() != j.pencil[0].len()) {
            return Err(Error::Invalid("pencil must be two rows of equal length".into()));
        }
        ProjectionCenter::new(j.d, Matrix::from_rows(j.pencil))
    }
}

impl From<ProjectionCenter> for CenterJson {
    fn from(c: ProjectionCenter) -> Self {
        CenterJson {
            d: c.degree,
            pencil: c.pencil.row_vecs(),
        }
    }
}

impl ProjectionCenter {
    pub fn new(degree: usize, pencil: Matrix) -> Result<Self> {
        if pencil.rows() != 2 || pencil.cols() < 2 {
            return Err(Error::Invalid("a pencil matrix is 2 × (N+1) with N ≥ 1".into()));
        }
        if pencil.rank() != 2 {
            return Err(Error::RankDeficient("pencil matrix must have rank 2".into()));
        }
        Ok(ProjectionCenter { degree, pencil })
    }

    /// The center spanned by the given points of `P^N`, whose span must have
    /// codimension two; the pencil is a basis of their annihilator.
    pub fn spanned_by(degree: usize, points: &[Vec<Coef>]) -> Result<Self> {
        let pts = Matrix::from_rows(points.to_vec());
        let ann = pts.kernel_basis();
        if ann.len() != 2 {
            return Err(Error::RankDeficient(format!(
                "points span a subspace of codimension {} instead of 2",
                ann.len()
            )));
        }
        ProjectionCenter::new(degree, Matrix::from_rows(ann))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn pencil(&self) -> &Matrix {
        &self.pencil
    }

    pub fn ambient_dim(&self) -> usize {
        self.pencil.cols() - 1
    }

    fn check_system(&self, system: &LinearSystem) -> Result<()> {
        if system.degree() != self.degree || system.basis().len() != self.pencil.cols() {
            return Err(Error::Invalid(format!(
                "center in P^{} of degree {} does not fit a system of degree {} in P^{}",
                self.ambient_dim(),
                self.degree,
                system.degree(),
                system.ambient_dim()
            )));
        }
        Ok(())
    }

    /// The two forms `R·(basis of V)` cutting out the pulled-back pencil.
    pub fn pencil_forms(&self, system: &LinearSystem) -> Result<(BinaryForm, BinaryForm)> {
        self.check_system(system)?;
        Ok((
            system.combine(self.pencil.row(0)),
            system.combine(self.pencil.row(1)),
        ))
    }
}

/// The center `ker L_s^∨` attached to a Galois section: rows are the
/// coordinates of `s·A` and `s·B`.
pub fn center_from_section(
    pair: &InvariantPair,
    s: &GaloisSection,
    system: &LinearSystem,
) -> Result<ProjectionCenter> {
    let sa = s.form().mul(&pair.a);
    let sb = s.form().mul(&pair.b);
    let ra = system
        .coordinates(&sa)
        .ok_or_else(|| Error::NotInSpan(format!("s·A ∉ span V for s = {}", s.form())))?;
    let rb = system
        .coordinates(&sb)
        .ok_or_else(|| Error::NotInSpan(format!("s·B ∉ span V for s = {}", s.form())))?;
    ProjectionCenter::new(system.degree(), Matrix::from_rows(vec![ra, rb]))
}

/// Normalized 2 × 2 minors of a pencil matrix.
///
/// Entry `k` is the minor on columns `(i, j)`, `i < j`, enumerated
/// lexicographically: `(0,1), (0,2), …, (0,N), (1,2), …, (N−1,N)`. The vector
/// is scaled so its first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluckerPoint {
    pub minors: Vec<Coef>,
}

impl PluckerPoint {
    /// Column pairs in the order used for [`PluckerPoint::minors`].
    pub fn index_pairs(n_plus_1: usize) -> Vec<(usize, usize)> {
        (0..n_plus_1)
            .flat_map(|i| (i + 1..n_plus_1).map(move |j| (i, j)))
            .collect()
    }
}

pub fn plucker(center: &ProjectionCenter) -> Result<PluckerPoint> {
    let r = center.pencil();
    let raw: Vec<Coef> = PluckerPoint::index_pairs(r.cols())
        .into_iter()
        .map(|(i, j)| &(&r[(0, i)] * &r[(1, j)]) - &(&r[(0, j)] * &r[(1, i)]))
        .collect();
    let lead = raw
        .iter()
        .find(|c| !c.is_zero())
        .ok_or_else(|| Error::RankDeficient("all Plücker minors vanish".into()))?
        .inv()
        .expect("nonzero");
    Ok(PluckerPoint {
        minors: raw.iter().map(|c| c * &lead).collect(),
    })
}

/// A point of `P¹`, exact when its coordinates are rational.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ProjPoint {
    Rational {
        #[serde(serialize_with = "ser_rational")]
        x: Rational,
        #[serde(serialize_with = "ser_rational")]
        y: Rational,
    },
    Complex {
        re: f64,
        im: f64,
    },
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::field::rational_to_string(r))
}

impl ProjPoint {
    fn from_root(g: &BinaryForm, p: &CPoint) -> ProjPoint {
        let Some(z) = p.z() else {
            return ProjPoint::Rational {
                x: Rational::from_integer(1.into()),
                y: Rational::from_integer(0.into()),
            };
        };
        if z.im.abs() < 1e-9 {
            if let Some(r) = rationalize(z.re, 1000, 1e-9) {
                if g.eval(&Coef::from(r.clone()), &Coef::one()).is_zero() {
                    return ProjPoint::Rational {
                        x: r,
                        y: Rational::from_integer(1.into()),
                    };
                }
            }
        }
        ProjPoint::Complex { re: z.re, im: z.im }
    }
}

/// Distinct points `p ∈ P¹` with `φ(p)` in the center: the roots of the gcd of
/// the pulled-back pencil.
pub fn meets_curve(center: &ProjectionCenter, system: &LinearSystem) -> Result<Vec<ProjPoint>> {
    let (p0, p1) = center.pencil_forms(system)?;
    let g = p0.gcd(&p1)?;
    if g.degree() == 0 {
        return Ok(Vec::new());
    }
    let sf = g.squarefree_part()?;
    Ok(roots_numeric(&sf)
        .iter()
        .map(|p| ProjPoint::from_root(&sf, p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{standard_invariant_pair, GroupKind};

    fn f(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Coef::int(v)).collect()).collect())
    }

    #[test]
    fn section_spaces() {
        let id = standard_invariant_pair(GroupKind::Cyclic(1));
        for d in 1..6 {
            assert_eq!(galois_space(&id, &LinearSystem::complete(d).unwrap()).len(), d);
        }
        let c2 = standard_invariant_pair(GroupKind::Cyclic(2));
        assert_eq!(galois_space(&c2, &LinearSystem::complete(2).unwrap()), vec![f(&[1])]);
        let v = LinearSystem::new(vec![f(&[1, 0, 0, 0]), f(&[0, 1, 0, 0]), f(&[0, 0, 0, 1])]).unwrap();
        let sp = galois_space(&c2, &v);
        assert_eq!(sp.len(), 1);
        assert!(sp[0].is_proportional(&BinaryForm::y()));
        let c3 = standard_invariant_pair(GroupKind::Cyclic(3));
        assert!(galois_space(&c3, &LinearSystem::complete(2).unwrap()).is_empty());
    }

    #[test]
    fn centers_from_sections() {
        let v3 = LinearSystem::complete(3).unwrap();
        let c3 = standard_invariant_pair(GroupKind::Cyclic(3));
        let s = GaloisSection::new(&c3, f(&[1]), &v3).unwrap();
        let c = center_from_section(&c3, &s, &v3).unwrap();
        assert_eq!(c.pencil(), &ints(&[&[1, 0, 0, 0], &[0, 0, 0, 1]]));
        assert!(meets_curve(&c, &v3).unwrap().is_empty());

        let c2 = standard_invariant_pair(GroupKind::Cyclic(2));
        let s = GaloisSection::new(&c2, BinaryForm::x(), &v3).unwrap();
        let c = center_from_section(&c2, &s, &v3).unwrap();
        assert_eq!(c.pencil(), &ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]));
        let zero = ProjPoint::Rational {
            x: Rational::from_integer(0.into()),
            y: Rational::from_integer(1.into()),
        };
        assert_eq!(meets_curve(&c, &v3).unwrap(), vec![zero]);

        let v1 = LinearSystem::complete(1).unwrap();
        let c1 = standard_invariant_pair(GroupKind::Cyclic(1));
        let s = GaloisSection::new(&c1, f(&[1]), &v1).unwrap();
        assert_eq!(center_from_section(&c1, &s, &v1).unwrap().pencil(), &Matrix::identity(2));
    }

    #[test]
    fn section_outside_span_is_rejected() {
        let v = LinearSystem::new(vec![f(&[1, 0, 0, 0]), f(&[0, 1, 0, 0]), f(&[0, 0, 0, 1])]).unwrap();
        let c2 = standard_invariant_pair(GroupKind::Cyclic(2));
        assert!(matches!(GaloisSection::new(&c2, BinaryForm::x(), &v), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn on_conic_center_meets_infinity() {
        let v2 = LinearSystem::complete(2).unwrap();
        let c = ProjectionCenter::new(2, ints(&[&[0, 1, 0], &[0, 0, 1]])).unwrap();
        let inf = ProjPoint::Rational {
            x: Rational::from_integer(1.into()),
            y: Rational::from_integer(0.into()),
        };
        assert_eq!(meets_curve(&c, &v2).unwrap(), vec![inf]);
    }

    #[test]
    fn plucker_examples() {
        let p = plucker(&ProjectionCenter::new(2, ints(&[&[1, 0, 0], &[0, 0, 1]])).unwrap()).unwrap();
        assert_eq!(p.minors, vec![Coef::zero(), Coef::one(), Coef::zero()]);
        let p = plucker(&ProjectionCenter::new(2, ints(&[&[1, 0, 0], &[0, 1, 0]])).unwrap()).unwrap();
        assert_eq!(p.minors, vec![Coef::one(), Coef::zero(), Coef::zero()]);
        assert_eq!(PluckerPoint::index_pairs(4), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn points_span_a_center() {
        // the point [0:1:0] of P² is the center of the pencil (x², y²)
        let c = ProjectionCenter::spanned_by(2, &[vec![Coef::zero(), Coef::one(), Coef::zero()]]).unwrap();
        assert_eq!(
            plucker(&c).unwrap(),
            plucker(&ProjectionCenter::new(2, ints(&[&[1, 0, 0], &[0, 0, 1]])).unwrap()).unwrap()
        );
    }

    #[test]
    fn rank_checks() {
        assert!(ProjectionCenter::new(2, ints(&[&[1, 2, 3], &[2, 4, 6]])).is_err());
        assert!(LinearSystem::new(vec![f(&[1, 1]), f(&[2, 2])]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = ProjectionCenter::new(2, ints(&[&[1, 0, 0], &[0, 0, 1]])).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"d":2,"pencil":[["1","0","0"],["0","0","1"]]}"#);
        assert_eq!(serde_json::from_str::<ProjectionCenter>(&s).unwrap(), c);
        let v = LinearSystem::complete(1).unwrap();
        let back: LinearSystem = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(back, v);
    }
}
