//! Galois test for a projected curve that never looks at a group: compose the
//! projection with the embedding, then search for every Möbius `σ` with
//! `f∘σ = f` by matching three fibers.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rationalize, Coef, Rational};
use crate::form::BinaryForm;
use crate::galois::{LinearSystem, ProjectionCenter};
use crate::groups::{classify_group, ComplexMoebius, GroupKind, MoebiusElement};
use crate::roots::{coeff_norm, roots_numeric, CPoint};
use crate::sample;

/// A degree-`e` map `[p : q]` of `P¹` with coprime components.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSelfMap {
    p: BinaryForm,
    q: BinaryForm,
}

impl RationalSelfMap {
    pub fn new(p: BinaryForm, q: BinaryForm) -> Result<Self> {
        if p.degree() != q.degree() || p.degree() == 0 {
            return Err(Error::Invalid("map components need one common degree ≥ 1".into()));
        }
        if p.is_zero() || q.is_zero() {
            return Err(Error::ProjectionUndefined);
        }
        if p.gcd(&q)?.degree() != 0 {
            return Err(Error::Invalid("map components share a factor".into()));
        }
        Ok(RationalSelfMap { p, q })
    }

    pub fn p(&self) -> &BinaryForm {
        &self.p
    }

    pub fn q(&self) -> &BinaryForm {
        &self.q
    }

    pub fn degree(&self) -> usize {
        self.p.degree()
    }

    /// True when `span{p, q} = span{a, b}`.
    pub fn same_pencil(&self, a: &BinaryForm, b: &BinaryForm) -> bool {
        if a.degree() != self.degree() || b.degree() != self.degree() {
            return false;
        }
        let rows = |f: &BinaryForm| f.coeffs().to_vec();
        let m = crate::matrix::Matrix::from_rows(vec![rows(&self.p), rows(&self.q), rows(a), rows(b)]);
        m.rank() == 2
    }
}

/// `π_W ∘ φ` with its base locus removed, together with that base locus `g`.
pub fn compose_projection_with_base(
    center: &ProjectionCenter,
    system: &LinearSystem,
) -> Result<(RationalSelfMap, BinaryForm)> {
    let (p0, p1) = center.pencil_forms(system)?;
    if p0.is_zero() || p1.is_zero() || p0.is_proportional(&p1) {
        return Err(Error::ProjectionUndefined);
    }
    let g = p0.gcd(&p1)?;
    let p = p0.div_exact(&g).expect("gcd divides");
    let q = p1.div_exact(&g).expect("gcd divides");
    Ok((RationalSelfMap::new(p, q)?, g))
}

pub fn compose_projection(center: &ProjectionCenter, system: &LinearSystem) -> Result<RationalSelfMap> {
    compose_projection_with_base(center, system).map(|(f, _)| f)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub tol_accept: f64,
    pub tol_dedupe: f64,
    pub seed: u64,
    pub resamples: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            tol_accept: 1e-8,
            tol_dedupe: 1e-6,
            seed: 0,
            resamples: 10,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DeckElement {
    pub sigma: ComplexMoebius,
    /// `T⁻¹σT` in the balanced frame `T` of the deck set.
    pub balanced: ComplexMoebius,
    /// Normalized coefficient residual of `p(σ)·q − q(σ)·p`, measured in the balanced frame.
    pub residual: f64,
    /// Exact element, when `σ` rounds to a Gaussian rational matrix that passes the exact check.
    pub exact: Option<MoebiusElement>,
}

#[derive(Clone, Debug)]
pub struct DeckSet {
    pub elements: Vec<DeckElement>,
    /// Accepted candidates discarded as duplicates of an earlier element.
    pub duplicates_dropped: usize,
    /// Targets `[1 : t]` whose fibers were matched.
    pub targets: Vec<Rational>,
    /// Exact change of coordinates `T` in which the search ran; the deck
    /// group of `f∘T` is close to unitary.
    pub frame: MoebiusElement,
    pub warnings: Vec<String>,
}

impl DeckSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn complex_elements(&self) -> Vec<ComplexMoebius> {
        self.elements.iter().map(|e| e.sigma).collect()
    }

    pub fn balanced_elements(&self) -> Vec<ComplexMoebius> {
        self.elements.iter().map(|e| e.balanced).collect()
    }

    pub fn residual_max(&self) -> f64 {
        self.elements.iter().map(|e| e.residual).fold(0.0, f64::max)
    }

    /// Closure under products and inverses within `tol` in the balanced
    /// frame, scaled for each product by its conditioning.
    pub fn is_closed(&self, tol: f64) -> bool {
        let els = self.balanced_elements();
        let has = |g: &ComplexMoebius, t: f64| els.iter().any(|e| e.distance(g) < t);
        els.iter().all(|a| {
            has(&a.inverse(), tol)
                && els.iter().all(|b| {
                    let (ab, kappa) = a.mul_conditioned(b);
                    has(&ab, tol * kappa)
                })
        })
    }
}

/// Coefficients of `f(σ·(x, y)ᵀ)`.
fn compose_complex(f: &[Complex64], s: &ComplexMoebius) -> Vec<Complex64> {
    let d = f.len() - 1;
    let [a, b, c, dd] = s.a;
    let powers = |u: Complex64, v: Complex64| {
        let mut out = vec![vec![Complex64::new(1.0, 0.0)]];
        for k in 1..=d {
            out.push(mul_complex(&out[k - 1], &[u, v]));
        }
        out
    };
    let l1 = powers(a, b);
    let l2 = powers(c, dd);
    let mut out = vec![Complex64::new(0.0, 0.0); d + 1];
    for (i, ci) in f.iter().enumerate() {
        if ci.norm() == 0.0 {
            continue;
        }
        let term = mul_complex(&l1[d - i], &l2[i]);
        for (o, t) in out.iter_mut().zip(term) {
            *o += ci * t;
        }
    }
    out
}

fn mul_complex(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

struct NumericMap {
    p: Vec<Complex64>,
    q: Vec<Complex64>,
}

impl NumericMap {
    fn new(f: &RationalSelfMap) -> Self {
        let unit = |v: Vec<Complex64>| {
            let n = coeff_norm(&v);
            v.into_iter().map(|c| c / n).collect()
        };
        NumericMap {
            p: unit(f.p.to_complex()),
            q: unit(f.q.to_complex()),
        }
    }

    /// Gauss–Newton steps on `p(σ)·q − q(σ)·p`, which is holomorphic in the
    /// entries of `σ`, halving a step until it improves the residual; stops
    /// when no halving helps.
    fn polish(&self, s: ComplexMoebius) -> (ComplexMoebius, f64) {
        let (mut best, mut best_r) = (s, self.residual(&s));
        let partials = |f: &[Complex64]| {
            let e = f.len() - 1;
            let fx: Vec<Complex64> = (0..e).map(|i| f[i] * (e - i) as f64).collect();
            let fy: Vec<Complex64> = (1..=e).map(|i| f[i] * i as f64).collect();
            (fx, fy)
        };
        let (px, py) = partials(&self.p);
        let (qx, qy) = partials(&self.q);
        let zero = Complex64::new(0.0, 0.0);
        let times_x = |mut v: Vec<Complex64>| {
            v.push(zero);
            v
        };
        let times_y = |v: Vec<Complex64>| {
            let mut out = vec![zero];
            out.extend(v);
            out
        };
        for _ in 0..12 {
            if best_r < 1e-15 {
                break;
            }
            let s = best;
            let ps = compose_complex(&self.p, &s);
            let qs = compose_complex(&self.q, &s);
            let res: Vec<Complex64> = mul_complex(&ps, &self.q)
                .iter()
                .zip(mul_complex(&qs, &self.p))
                .map(|(a, b)| a - b)
                .collect();
            let (pxs, pys) = (compose_complex(&px, &s), compose_complex(&py, &s));
            let (qxs, qys) = (compose_complex(&qx, &s), compose_complex(&qy, &s));
            // ∂/∂σ₀₀ p(σ) = x·p_X(σ), ∂/∂σ₀₁ = y·p_X(σ), ∂/∂σ₁₀ = x·p_Y(σ), ∂/∂σ₁₁ = y·p_Y(σ)
            let dp = [times_x(pxs.clone()), times_y(pxs), times_x(pys.clone()), times_y(pys)];
            let dq = [times_x(qxs.clone()), times_y(qxs), times_x(qys.clone()), times_y(qys)];
            let mut jac = DMatrix::<Complex64>::zeros(res.len(), 4);
            for k in 0..4 {
                let col: Vec<Complex64> = mul_complex(&dp[k], &self.q)
                    .iter()
                    .zip(mul_complex(&dq[k], &self.p))
                    .map(|(a, b)| a - b)
                    .collect();
                for (i, c) in col.into_iter().enumerate() {
                    jac[(i, k)] = c;
                }
            }
            let rhs = DMatrix::from_iterator(res.len(), 1, res.iter().map(|c| -c));
            let Ok(step) = jac.svd(true, true).solve(&rhs, 1e-14) else {
                break;
            };
            let improved = (0..6).find_map(|k| {
                let h = 0.5f64.powi(k);
                let next = ComplexMoebius::new([
                    s.a[0] + step[0] * h,
                    s.a[1] + step[1] * h,
                    s.a[2] + step[2] * h,
                    s.a[3] + step[3] * h,
                ]);
                let r = self.residual(&next);
                (r < best_r).then_some((next, r))
            });
            let Some((next, r)) = improved else {
                break;
            };
            best = next;
            best_r = r;
        }
        (best, best_r)
    }

    fn residual(&self, s: &ComplexMoebius) -> f64 {
        let ps = compose_complex(&self.p, s);
        let qs = compose_complex(&self.q, s);
        let lhs = mul_complex(&ps, &self.q);
        let rhs = mul_complex(&qs, &self.p);
        let diff: Vec<Complex64> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
        let scale = coeff_norm(&ps) + coeff_norm(&qs);
        if scale == 0.0 {
            return f64::INFINITY;
        }
        coeff_norm(&diff) / scale
    }
}

/// Fiber `f⁻¹([1 : t])`, the roots of `t·p − q`.
fn fiber_form(f: &RationalSelfMap, t: &Rational) -> BinaryForm {
    f.p.scale(&Coef::from(t.clone())).sub(&f.q)
}

fn min_separation(points: &[CPoint]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            best = best.min(a.distance(b));
        }
    }
    best
}

fn pick_fibers(f: &RationalSelfMap, cfg: &OracleConfig) -> Result<(Vec<Rational>, [Vec<CPoint>; 3])> {
    let mut rng = sample::rng(cfg.seed);
    'attempt: for _ in 0..cfg.resamples.max(1) {
        let mut targets: Vec<Rational> = Vec::with_capacity(3);
        let mut fibers: Vec<Vec<CPoint>> = Vec::with_capacity(3);
        while targets.len() < 3 {
            let t = sample::rational(&mut rng, 50, 20);
            if targets.contains(&t) {
                continue;
            }
            let h = fiber_form(f, &t);
            if h.is_zero() || !h.is_squarefree() {
                continue 'attempt;
            }
            let pts = roots_numeric(&h);
            if min_separation(&pts) < 1e-6 {
                continue 'attempt;
            }
            targets.push(t);
            fibers.push(pts);
        }
        let [a, b, c]: [Vec<CPoint>; 3] = fibers.try_into().expect("three fibers");
        return Ok((targets, [a, b, c]));
    }
    Err(Error::NonGenericTargets)
}

/// Least-squares fit of `σ` to every correspondence `a ↦ b` it induces on the
/// three fibers; `None` when some point lands farther than `gate` from its fiber.
fn refine(s: ComplexMoebius, fibers: &[Vec<CPoint>; 3], gate: f64) -> Option<ComplexMoebius> {
    let n: usize = fibers.iter().map(Vec::len).sum();
    let mut rows = DMatrix::<Complex64>::zeros(n, 4);
    let mut r = 0;
    for fib in fibers {
        for a in fib {
            let moved = s.apply(a);
            let b = fib
                .iter()
                .min_by(|p, q| p.distance(&moved).total_cmp(&q.distance(&moved)))
                .expect("nonempty fiber");
            if b.distance(&moved) > gate {
                return None;
            }
            // b × σa = 0: b_y (σ₀₀a_x + σ₀₁a_y) − b_x (σ₁₀a_x + σ₁₁a_y) = 0
            rows[(r, 0)] = b.y * a.x;
            rows[(r, 1)] = b.y * a.y;
            rows[(r, 2)] = -b.x * a.x;
            rows[(r, 3)] = -b.x * a.y;
            r += 1;
        }
    }
    let svd = rows.svd(false, true);
    let v_t = svd.v_t?;
    let k = (0..4)
        .min_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]))
        .expect("four singular values");
    let v = v_t.row(k);
    let fitted = ComplexMoebius::new([v[0].conj(), v[1].conj(), v[2].conj(), v[3].conj()]);
    (fitted.det().norm() > 1e-12).then_some(fitted)
}

/// Gaussian-rational rounding of `σ`, or of `T⁻¹σT` conjugated back by the
/// frame, kept only when `f∘σ ∝ f` holds exactly.
fn certify(f: &RationalSelfMap, el: &DeckElement, frame: &MoebiusElement) -> Option<MoebiusElement> {
    let fixes = |m: &MoebiusElement| {
        let ps = f.p.compose(m.matrix()).ok()?;
        let qs = f.q.compose(m.matrix()).ok()?;
        (ps.mul(&f.q) == qs.mul(&f.p)).then_some(())
    };
    if let Some(m) = round_gaussian(&el.sigma) {
        if fixes(&m).is_some() {
            return Some(m);
        }
    }
    if frame.is_identity() {
        return None;
    }
    let m = frame.compose(&round_gaussian(&el.balanced)?).compose(&frame.inverse());
    fixes(&m).map(|_| m)
}

fn round_gaussian(s: &ComplexMoebius) -> Option<MoebiusElement> {
    let i = Coef::root_of_unity(4, 1);
    let round = |z: Complex64| -> Option<Coef> {
        let re = Coef::from(rationalize(z.re, 1000, 1e-9)?);
        let im = rationalize(z.im, 1000, 1e-9)?;
        Some(&re + &(&Coef::from(im) * &i))
    };
    let c = s.canonical();
    let entries = c.iter().map(|&z| round(z)).collect::<Option<Vec<Coef>>>()?;
    let [a, b, cc, d]: [Coef; 4] = entries.try_into().ok()?;
    MoebiusElement::from_entries(a, b, cc, d).ok()
}

fn sphere(p: &CPoint) -> [f64; 3] {
    let n = p.x.norm_sqr() + p.y.norm_sqr();
    let w = p.x * p.y.conj();
    [2.0 * w.re / n, 2.0 * w.im / n, (p.x.norm_sqr() - p.y.norm_sqr()) / n]
}

/// Möbius `τ` moving the conformal barycenter of `points` to the center of
/// the ball, by repeatedly boosting away from the Euclidean mean on `S²`.
/// A finite group permuting the points is then conjugated into `PSU(2)`.
fn balancing_map(points: &[CPoint]) -> ComplexMoebius {
    let mut tau = ComplexMoebius::identity();
    let mut pts = points.to_vec();
    for _ in 0..100 {
        let mut v = [0.0; 3];
        for p in &pts {
            for (vi, si) in v.iter_mut().zip(sphere(p)) {
                *vi += si / pts.len() as f64;
            }
        }
        let t = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if t < 1e-3 {
            break;
        }
        let u = v.map(|c| c / t);
        // the point of P¹ in direction u, as a unit vector (a, b)
        let (a, b) = if u[2] >= 0.0 {
            (Complex64::new(1.0 + u[2], 0.0), Complex64::new(u[0], -u[1]))
        } else {
            (Complex64::new(u[0], u[1]), Complex64::new(1.0 - u[2], 0.0))
        };
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        let (a, b) = (a / n, b / n);
        // U sends (a : b) to ∞ and is unitary; x ↦ λx then pulls mass away from ∞
        let lambda = Complex64::new(((1.0 - t) / (1.0 + t)).sqrt(), 0.0);
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let rot = ComplexMoebius::new([a.conj(), b.conj(), -b, a]);
        let step = rot.inverse().mul(&ComplexMoebius::new([lambda, zero, zero, one])).mul(&rot);
        tau = step.mul(&tau);
        pts = pts.iter().map(|p| step.apply(p)).collect();
    }
    tau
}

/// `‖M‖²_F / |det M|`, equal to 2 exactly for unitary matrices up to scale.
fn distortion(m: &ComplexMoebius) -> f64 {
    m.a.iter().map(|c| c.norm_sqr()).sum::<f64>() / m.det().norm()
}

/// Exact frame `T = τ̃⁻¹`, where `τ̃` rounds the balancing map to Gaussian
/// dyadic entries. The identity when the fibers are already balanced.
fn balancing_frame(fibers: &[Vec<CPoint>; 3]) -> MoebiusElement {
    let all: Vec<CPoint> = fibers.iter().flatten().copied().collect();
    let tau = balancing_map(&all);
    if !(distortion(&tau) > 4.0) {
        return MoebiusElement::identity();
    }
    let scale = tau.a.iter().map(|c| c.re.abs().max(c.im.abs())).fold(0.0, f64::max);
    let i = Coef::root_of_unity(4, 1);
    let dyadic = |x: f64| Coef::frac((x / scale * 32.0).round() as i64, 32);
    let [a, b, c, d] = tau.a.map(|z| {
        let im = dyadic(z.im);
        if im.is_zero() {
            dyadic(z.re)
        } else {
            &dyadic(z.re) + &(&im * &i)
        }
    });
    match MoebiusElement::from_entries(a, b, c, d) {
        Ok(t) if distortion(&t.to_complex()) < distortion(&tau) * 2.0 + 4.0 => t.inverse(),
        _ => MoebiusElement::identity(),
    }
}

/// All Möbius `σ` with `f∘σ = f`, found numerically and certified exactly
/// where possible. The identity always comes first.
pub fn deck_transformations(f: &RationalSelfMap, cfg: &OracleConfig) -> Result<DeckSet> {
    let identity = DeckElement {
        sigma: ComplexMoebius::identity(),
        balanced: ComplexMoebius::identity(),
        residual: 0.0,
        exact: Some(MoebiusElement::identity()),
    };
    if f.degree() == 1 {
        return Ok(DeckSet {
            elements: vec![identity],
            duplicates_dropped: 0,
            targets: Vec::new(),
            frame: MoebiusElement::identity(),
            warnings: Vec::new(),
        });
    }
    let (targets, fibers) = pick_fibers(f, cfg)?;
    let frame = balancing_frame(&fibers);
    let (bal, fibers) = if frame.is_identity() {
        (f.clone(), fibers)
    } else {
        let bal = RationalSelfMap {
            p: f.p.compose(frame.matrix())?,
            q: f.q.compose(frame.matrix())?,
        };
        let fibers = targets
            .iter()
            .map(|t| roots_numeric(&fiber_form(&bal, t)))
            .collect::<Vec<_>>()
            .try_into()
            .expect("three fibers");
        (bal, fibers)
    };
    let (t_num, t_inv) = (frame.to_complex(), frame.inverse().to_complex());
    let e = f.degree();
    let base = [fibers[0][0], fibers[1][0], fibers[2][0]];
    let probe = fibers[0][1];
    let num = NumericMap::new(&bal);
    // fiber-matching gate; a looser acceptance tolerance lets more near misses through
    let gate = cfg.tol_accept.sqrt().max(1e-4);

    let candidates: Vec<(usize, ComplexMoebius, f64)> = (0..e * e * e)
        .into_par_iter()
        .with_min_len(64)
        .filter_map(|idx| {
            let (i, j, k) = (idx / (e * e), (idx / e) % e, idx % e);
            let img = [fibers[0][i], fibers[1][j], fibers[2][k]];
            let s = ComplexMoebius::from_three_points(base, img)?;
            // a deck map permutes each fiber, so the probe must land on F₀
            let moved = s.apply(&probe);
            if fibers[0].iter().all(|p| p.distance(&moved) > gate) {
                return None;
            }
            let s = refine(s, &fibers, gate)?;
            let (s, r) = num.polish(s);
            (r < cfg.tol_accept).then_some((idx, s, r))
        })
        .collect();

    // best residual first, so a near miss never displaces the element it shadows
    let mut candidates = candidates;
    candidates.sort_by(|a, b| a.2.total_cmp(&b.2).then(a.0.cmp(&b.0)));
    let mut elements: Vec<DeckElement> = Vec::new();
    let (mut duplicates_dropped, mut near_dropped) = (0, 0);
    for (_, s, r) in candidates {
        let nearest = elements.iter().map(|x| x.balanced.distance(&s)).fold(f64::INFINITY, f64::min);
        if nearest < cfg.tol_dedupe {
            duplicates_dropped += 1;
            continue;
        }
        if nearest < gate {
            near_dropped += 1;
            continue;
        }
        elements.push(DeckElement {
            sigma: t_num.mul(&s).mul(&t_inv),
            balanced: s,
            residual: r,
            exact: None,
        });
    }
    match elements.iter().position(|x| x.balanced.distance(&identity.balanced) < cfg.tol_dedupe) {
        Some(pos) => {
            let found = elements.remove(pos);
            elements.insert(0, DeckElement { residual: found.residual, ..identity });
        }
        None => elements.insert(0, identity),
    }
    for el in elements.iter_mut().skip(1) {
        el.exact = certify(f, el, &frame);
    }

    let mut warnings = Vec::new();
    if duplicates_dropped > 0 {
        warnings.push(format!(
            "deduplication dropped {duplicates_dropped} accepted candidate(s) within {:e}",
            cfg.tol_dedupe
        ));
    }
    if near_dropped > 0 {
        warnings.push(format!(
            "deduplication dropped {near_dropped} near-duplicate candidate(s) within {gate:e} but beyond {:e}",
            cfg.tol_dedupe
        ));
    }
    if elements.len() > e {
        warnings.push(format!(
            "{} deck elements exceed the map degree {e}; tolerance {:e} is too loose",
            elements.len(),
            cfg.tol_accept
        ));
    }
    Ok(DeckSet {
        elements,
        duplicates_dropped: duplicates_dropped + near_dropped,
        targets,
        frame,
        warnings,
    })
}

/// Outcome of the Galois test for one center.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaloisReport {
    pub galois: bool,
    pub degree: usize,
    pub deck_order: usize,
    #[serde(serialize_with = "ser_kind", skip_serializing_if = "Option::is_none")]
    pub kind: Option<GroupKind>,
    pub residual_max: f64,
    pub seed: u64,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

fn ser_kind<S: serde::Serializer>(k: &Option<GroupKind>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match k {
        Some(k) => s.serialize_str(&k.to_string()),
        None => s.serialize_none(),
    }
}

/// Galois iff the deck group has as many elements as the map has degree.
pub fn is_galois_map(f: &RationalSelfMap, cfg: &OracleConfig) -> Result<GaloisReport> {
    let deck = deck_transformations(f, cfg)?;
    let e = f.degree();
    let galois = deck.len() == e;
    let kind = if !galois {
        None
    } else if e == 1 {
        Some(GroupKind::Cyclic(1))
    } else {
        Some(classify_group(&deck.balanced_elements(), cfg.tol_dedupe)?)
    };
    Ok(GaloisReport {
        galois,
        degree: e,
        deck_order: deck.len(),
        kind,
        residual_max: deck.residual_max(),
        seed: cfg.seed,
        warnings: deck.warnings,
    })
}

pub fn is_galois(center: &ProjectionCenter, system: &LinearSystem, cfg: &OracleConfig) -> Result<GaloisReport> {
    is_galois_map(&compose_projection(center, system)?, cfg)
}

/// Numeric roots of the fiber over `[1 : t]`, for callers that want to inspect fibers.
pub fn fiber(f: &RationalSelfMap, t: &Rational) -> Vec<CPoint> {
    roots_numeric(&fiber_form(f, t))
}
