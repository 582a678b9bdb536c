//! Symbolic powers two ways: the saturation oracle, and the closed forms
//! (the determinant generator of the second symbolic power, and the cube
//! generators per presentation case). Closed forms are always cross-checked
//! against the saturation route; the oracle is ground truth.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::arith::field::Field;
use crate::arith::monomial::Monomial;
use crate::arith::poly::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{GbConfig, Ideal};
use crate::moncurve::{HerzogExponents, MonomialCurve};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    Saturation,
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossCheck {
    Pass,
    Fail,
    NotRun,
}

/// Generators of I^(n) plus provenance.
#[derive(Clone, Debug)]
pub struct SymbolicPowerResult<F: Field> {
    pub n: u32,
    pub ideal: Ideal<F>,
    pub route: Route,
    pub crosscheck: CrossCheck,
    /// Set when a closed-form request fell back to saturation.
    pub fallback: Option<String>,
}

/// I^(n) as the saturation of I^n with respect to `max_ideal`.
///
/// Valid when I^(n) and the saturation agree away from the irrelevant
/// maximal ideal; the two built-in families (curve primes, point
/// configurations) qualify, and the caller asserts it for anything else.
pub fn symbolic_power_saturation<F: Field>(
    ideal: &Ideal<F>,
    n: u32,
    max_ideal: &Ideal<F>,
    cfg: &GbConfig,
) -> Result<SymbolicPowerResult<F>> {
    let power = ideal.power(n)?;
    let saturated = power.saturate(max_ideal, cfg)?;
    Ok(SymbolicPowerResult {
        n,
        ideal: saturated,
        route: Route::Saturation,
        crosscheck: CrossCheck::NotRun,
        fallback: None,
    })
}

/// Cached symbolic and ordinary powers of one ideal.
pub struct SymbolicLab<F: Field> {
    ideal: Ideal<F>,
    max_ideal: Ideal<F>,
    cfg: GbConfig,
    sym: Mutex<BTreeMap<u32, Ideal<F>>>,
    pow: Mutex<BTreeMap<u32, Ideal<F>>>,
}

impl<F: Field> SymbolicLab<F> {
    pub fn new(ideal: Ideal<F>, max_ideal: Ideal<F>, cfg: GbConfig) -> Self {
        SymbolicLab {
            ideal,
            max_ideal,
            cfg,
            sym: Mutex::new(BTreeMap::new()),
            pow: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn for_curve(curve: &MonomialCurve<F>, cfg: GbConfig) -> Self {
        Self::new(curve.ideal().clone(), curve.maximal_ideal(), cfg)
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn max_ideal(&self) -> &Ideal<F> {
        &self.max_ideal
    }

    pub fn cfg(&self) -> &GbConfig {
        &self.cfg
    }

    /// I^n, cached.
    pub fn power(&self, n: u32) -> Result<Ideal<F>> {
        if let Some(p) = self.pow.lock().unwrap().get(&n) {
            return Ok(p.clone());
        }
        let p = self.ideal.power(n)?;
        let mut cache = self.pow.lock().unwrap();
        Ok(cache.entry(n).or_insert(p).clone())
    }

    /// I^(n) by saturation, cached.
    pub fn symbolic(&self, n: u32) -> Result<Ideal<F>> {
        if let Some(s) = self.sym.lock().unwrap().get(&n) {
            return Ok(s.clone());
        }
        let p = self.power(n)?;
        let s = p.saturate(&self.max_ideal, &self.cfg)?;
        let mut cache = self.sym.lock().unwrap();
        Ok(cache.entry(n).or_insert(s).clone())
    }
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
];

/// Case labels of the cube closed form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseId {
    C1a,
    C1b,
    C1c,
    C2a,
    C2b,
}

impl std::fmt::Display for CaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseId::C1a => "1a",
            CaseId::C1b => "1b",
            CaseId::C1c => "1c",
            CaseId::C2a => "2a",
            CaseId::C2b => "2b",
        };
        write!(f, "{s}")
    }
}

fn classify<F: Field>(exps: &HerzogExponents, field: &F) -> Option<CaseId> {
    if exps.case1() {
        let alpha = (2 * exps.a1 as i64 - exps.a2 as i64).max(0);
        let beta = (2 * exps.b2 as i64 - exps.b1 as i64).max(0);
        if alpha == 0 {
            Some(CaseId::C1a)
        } else if beta == 0 {
            Some(CaseId::C1b)
        } else {
            Some(CaseId::C1c)
        }
    } else if exps.case2() {
        if field.characteristic() == 2 {
            Some(CaseId::C2b)
        } else {
            Some(CaseId::C2a)
        }
    } else {
        None
    }
}

/// Find a variable relabeling under which the curve's presentation satisfies
/// one of the case hypotheses. The identity is tried first; a relabeling is
/// an exact ring automorphism, so closed forms computed there pull back.
pub fn normalize_into_case<F: Field>(
    curve: &MonomialCurve<F>,
    cfg: &GbConfig,
) -> Result<(MonomialCurve<F>, [usize; 3], CaseId)> {
    let field = curve.ring().field().clone();
    for perm in PERMS {
        let cand = if perm == [0, 1, 2] {
            curve.clone()
        } else {
            curve.relabeled(perm, cfg)?
        };
        let Ok(pres) = cand.presentation() else {
            continue;
        };
        if let Some(case) = classify(&pres.exps, &field) {
            return Ok((cand, perm, case));
        }
    }
    let (a, b, c) = curve.exponents();
    Err(Error::ClosedFormUnavailable(format!(
        "no variable relabeling of ({a},{b},{c}) satisfies a case hypothesis"
    )))
}

/// The determinant matrix for the second symbolic power, with the
/// relabeling used and the verified determinant generator.
#[derive(Clone, Debug)]
pub struct SchenzelData<F: Field> {
    /// Matrix in the original curve ring (entries pulled back).
    pub matrix: [[Polynomial<F>; 3]; 3],
    pub delta1: Polynomial<F>,
    pub perm: [usize; 3],
}

fn mono_poly<F: Field>(ring: &Arc<Ring<F>>, exps: [i64; 3], entry: &str) -> Result<Polynomial<F>> {
    let mut e = [0u32; 3];
    for (i, &x) in exps.iter().enumerate() {
        if x < 0 {
            return Err(Error::NegativeExponent {
                entry: entry.to_string(),
                value: x,
            });
        }
        e[i] = x as u32;
    }
    Ok(Polynomial::from_monomial(
        ring,
        Monomial::new(e.to_vec()),
        ring.field().one(),
    ))
}

fn det3<F: Field>(m: &[[Polynomial<F>; 3]; 3]) -> Polynomial<F> {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &m[r1][c1].mul(&m[r2][c2]) - &m[r1][c2].mul(&m[r2][c1])
    };
    let t0 = m[0][0].mul(&minor(1, 2, 1, 2));
    let t1 = m[0][1].mul(&minor(1, 2, 0, 2));
    let t2 = m[0][2].mul(&minor(1, 2, 0, 1));
    &(&t0 - &t1) + &t2
}

/// Divide out the monomial gcd of all terms. The determinant generator
/// carries a monomial content; since the target ideal is saturated, the
/// content-free part is the generator that matters.
fn strip_monomial_content<F: Field>(p: &Polynomial<F>) -> Polynomial<F> {
    if p.is_zero() {
        return p.clone();
    }
    let mut g = p.terms()[0].0.clone();
    for (m, _) in p.terms() {
        g = g.gcd(m);
    }
    if g.is_one() {
        return p.clone();
    }
    p.divide_by_term(&g, &p.ring().field().one())
        .expect("gcd of supports divides every term")
}

/// Δ₁: the content-free determinant of the 3×3 matrix.
fn delta1_of<F: Field>(m: &[[Polynomial<F>; 3]; 3]) -> Polynomial<F> {
    strip_monomial_content(&det3(m))
}

/// Build the 3×3 determinant matrix from a presentation in its own ring.
fn schenzel_matrix<F: Field>(curve: &MonomialCurve<F>) -> Result<[[Polynomial<F>; 3]; 3]> {
    let pres = curve.presentation()?;
    let e = pres.exps;
    let (a, b, c) = curve.exponents();
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let (a1, a2, b1, b2, c1, c2) = (
        e.a1 as i64,
        e.a2 as i64,
        e.b1 as i64,
        e.b2 as i64,
        e.c1 as i64,
        e.c2 as i64,
    );
    let ring = curve.ring();
    let row3 = [
        mono_poly(ring, [a1 - a2 + a, b1 + b, c], "D[3][1] = x^(a1-a2+a) y^(b1+b) z^c")?,
        mono_poly(ring, [a, b1 - b2 + b, c1 + c], "D[3][2] = x^a y^(b1-b2+b) z^(c1+c)")?,
        mono_poly(ring, [a1 + a, b, c1 - c2 + c], "D[3][3] = x^(a1+a) y^b z^(c1-c2+c)")?,
    ];
    Ok([
        pres.matrix[0].clone(),
        pres.matrix[1].clone(),
        row3,
    ])
}

/// Schenzel generator: Δ₁ = det D with (P², Δ₁) equal to the saturation
/// route's P^(2). Tries the curve's own presentation first, then the case
/// relabelings, and certifies the winner against the oracle.
pub fn schenzel_delta1<F: Field>(
    curve: &MonomialCurve<F>,
    lab: &SymbolicLab<F>,
) -> Result<SchenzelData<F>> {
    let cfg = lab.cfg();
    let p2_sat = lab.symbolic(2)?;
    let mut last_err: Option<Error> = None;
    for perm in PERMS {
        let cand = if perm == [0, 1, 2] {
            curve.clone()
        } else {
            match curve.relabeled(perm, cfg) {
                Ok(c) => c,
                Err(e) => {
                    last_err = Some(e);
                    continue;
                }
            }
        };
        if cand.is_complete_intersection() {
            continue;
        }
        let matrix = match schenzel_matrix(&cand) {
            Ok(m) => m,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        let delta1 = delta1_of(&matrix);
        // pull everything back into the original ring
        let back = |p: &Polynomial<F>| curve.pull_back(perm, p);
        let delta1 = back(&delta1);
        let candidate = lab.power(2)?.sum(&Ideal::new(
            curve.ring(),
            vec![delta1.clone()],
        ));
        if candidate.equal(&p2_sat, cfg)? {
            let matrix = matrix.map(|row| row.map(|p| back(&p)));
            return Ok(SchenzelData {
                matrix,
                delta1,
                perm,
            });
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::ClosedFormUnavailable(
            "no presentation yields a determinant generator matching the saturation route".into(),
        )
    }))
}

/// One verified (or flagged) relation of the cube closed form.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub description: String,
    pub verified: bool,
    /// Denominators were cleared to verify (a printed exponent was negative).
    pub cleared: bool,
    pub note: Option<String>,
}

/// The cube closed form: case, gap exponents, Δ generators, assembled ideal.
#[derive(Clone, Debug)]
pub struct CubeClosedForm<F: Field> {
    pub case_id: CaseId,
    pub perm: [usize; 3],
    /// (α, β, γ) of the normalized presentation.
    pub gaps: (u32, u32, u32),
    pub delta1: Polynomial<F>,
    /// Named Δ generators beyond P³ and Δ₁P, in the original ring.
    pub deltas: Vec<(String, Polynomial<F>)>,
    pub ideal: Ideal<F>,
    pub relation_checks: Vec<RelationCheck>,
    pub crosscheck: CrossCheck,
}

/// A term of a displayed relation: sign · x^e0 y^e1 z^e2 · Π factors.
struct RelTerm<'a, F: Field> {
    sign: i64,
    exps: [i64; 3],
    factors: Vec<&'a Polynomial<F>>,
}

impl<'a, F: Field> RelTerm<'a, F> {
    fn new(sign: i64, exps: [i64; 3], factors: Vec<&'a Polynomial<F>>) -> Self {
        RelTerm { sign, exps, factors }
    }
}

fn rel_product<F: Field>(
    ring: &Arc<Ring<F>>,
    term: &RelTerm<'_, F>,
    shift: &[i64; 3],
) -> Result<Polynomial<F>> {
    let exps = [
        term.exps[0] + shift[0],
        term.exps[1] + shift[1],
        term.exps[2] + shift[2],
    ];
    let mut p = mono_poly(ring, exps, "relation term")?;
    p = p.mul_scalar(&ring.field().from_integer(term.sign));
    for f in &term.factors {
        p = p.mul(f);
    }
    Ok(p)
}

/// Sum of relation terms; all exponents must be non-negative.
fn rel_sum<F: Field>(ring: &Arc<Ring<F>>, terms: &[RelTerm<'_, F>]) -> Result<Polynomial<F>> {
    let mut acc = Polynomial::zero(ring);
    for t in terms {
        acc = acc.add(&rel_product(ring, t, &[0, 0, 0])?);
    }
    Ok(acc)
}

/// Verify lhs_mono·lhs = Σ terms as a polynomial identity, clearing any
/// negative printed exponents by multiplying both sides.
fn check_relation<F: Field>(
    ring: &Arc<Ring<F>>,
    description: &str,
    lhs_exps: [i64; 3],
    lhs: &Polynomial<F>,
    terms: &[RelTerm<'_, F>],
) -> Result<RelationCheck> {
    let mut shift = [0i64; 3];
    for i in 0..3 {
        let mut min = lhs_exps[i];
        for t in terms {
            min = min.min(t.exps[i]);
        }
        shift[i] = (-min).max(0);
    }
    let cleared = shift != [0, 0, 0];
    let lhs_mono = mono_poly(
        ring,
        [
            lhs_exps[0] + shift[0],
            lhs_exps[1] + shift[1],
            lhs_exps[2] + shift[2],
        ],
        description,
    )?;
    let left = lhs_mono.mul(lhs);
    let mut right = Polynomial::zero(ring);
    for t in terms {
        right = right.add(&rel_product(ring, t, &shift)?);
    }
    Ok(RelationCheck {
        description: description.to_string(),
        verified: left == right,
        cleared,
        note: None,
    })
}

/// Compute Δ from its defining relation lhs_mono·Δ = Σ terms by exact
/// division.
fn delta_from_relation<F: Field>(
    ring: &Arc<Ring<F>>,
    name: &str,
    lhs_exps: [i64; 3],
    terms: &[RelTerm<'_, F>],
) -> Result<Polynomial<F>> {
    let numerator = rel_sum(ring, terms)?;
    let mut e = [0u32; 3];
    for (i, &x) in lhs_exps.iter().enumerate() {
        if x < 0 {
            return Err(Error::NegativeExponent {
                entry: format!("left factor of the defining relation of {name}"),
                value: x,
            });
        }
        e[i] = x as u32;
    }
    numerator.divide_by_term(&Monomial::new(e.to_vec()), &ring.field().one())
}

/// The closed form of the third symbolic power per the presentation case,
/// computed in a case-normalized relabeling and pulled back,
/// cross-checked against the saturation route.
pub fn cube_closed_form<F: Field>(
    curve: &MonomialCurve<F>,
    lab: &SymbolicLab<F>,
) -> Result<CubeClosedForm<F>> {
    let cfg = lab.cfg();
    if curve.is_complete_intersection() {
        let (a, b, c) = curve.exponents();
        return Err(Error::CompleteIntersection(a, b, c));
    }
    let (norm, perm, case_id) = normalize_into_case(curve, cfg)?;
    let ring = norm.ring().clone();
    let pres = norm.presentation()?.clone();
    let e = pres.exps;
    let (a1, a2, b1, b2, c1, c2) = (
        e.a1 as i64,
        e.a2 as i64,
        e.b1 as i64,
        e.b2 as i64,
        e.c1 as i64,
        e.c2 as i64,
    );
    let (alpha, beta, gamma) = match case_id {
        CaseId::C1a | CaseId::C1b | CaseId::C1c => (
            (2 * a1 - a2).max(0),
            (2 * b2 - b1).max(0),
            (2 * c2 - c1).max(0),
        ),
        CaseId::C2a | CaseId::C2b => (
            (2 * a2 - a1).max(0),
            (2 * b2 - b1).max(0),
            (2 * c2 - c1).max(0),
        ),
    };
    let (f, g, h) = (&pres.f, &pres.g, &pres.h);
    let f2 = f.mul(f);
    let f3 = f2.mul(f);
    let g2 = g.mul(g);
    let g3 = g2.mul(g);
    let h2 = h.mul(h);
    let h3 = h2.mul(h);
    let d1 = delta1_of(&schenzel_matrix(&norm)?);

    let mut checks: Vec<RelationCheck> = Vec::new();
    let mut deltas: Vec<(String, Polynomial<F>)> = Vec::new();

    // shorthand for term construction
    let t = RelTerm::new;
    match case_id {
        CaseId::C1a => {
            // third term of the defining relation is printed with G^2 H,
            // which is degree-inconsistent; G H^2 is the reading that is
            // quasi-homogeneous and certified by the oracle
            let d21 = delta_from_relation(
                &ring,
                "D21",
                [2 * a1, 0, 0],
                &[
                    t(1, [a1, 0, c1 - 2 * c2 + gamma], vec![&h3]),
                    t(-1, [0, 2 * b1 - 2 * b2, gamma], vec![f, &g2]),
                    t(1, [0, b1 - b2, c1 - c2 + gamma], vec![g, &h2]),
                ],
            )?;
            checks.push(check_relation(
                &ring,
                "y^b2 D21 = -z^g F D1 - x^(a2-a1) z^(c1-2c2+g) G H^2 - x^(a2-2a1) y^(b1-b2) z^(c1-c2+g) G^2 H",
                [0, b2, 0],
                &d21,
                &[
                    t(-1, [0, 0, gamma], vec![f, &d1]),
                    t(-1, [a2 - a1, 0, c1 - 2 * c2 + gamma], vec![g, &h2]),
                    t(-1, [a2 - 2 * a1, b1 - b2, c1 - c2 + gamma], vec![&g2, h]),
                ],
            )?);
            // printed with x^(a2-a1) y^(b1-2b2); the degree-consistent
            // exponents under the α = 0 hypothesis are a2-2a1 and
            // 2b1-2b2, which is what holds as an identity
            let mut third = check_relation(
                &ring,
                "z^(c2-g) D21 = H D1 + x^(a2-2a1) y^(2b1-2b2) G^3",
                [0, 0, c2 - gamma],
                &d21,
                &[
                    t(1, [0, 0, 0], vec![h, &d1]),
                    t(1, [a2 - 2 * a1, 2 * b1 - 2 * b2, 0], vec![&g3]),
                ],
            )?;
            third.note = Some("exponents adjusted to the degree-consistent reading".into());
            checks.push(third);
            deltas.push(("D21".into(), d21));
        }
        CaseId::C1b => {
            let d22 = delta_from_relation(
                &ring,
                "D22",
                [a1, 0, 0],
                &[
                    t(1, [0, 0, c1 - 2 * c2 + gamma], vec![&h3]),
                    t(1, [0, b1 - 2 * b2, 0], vec![&f2, g]),
                ],
            )?;
            checks.push(check_relation(
                &ring,
                "y^b2 D22 = -z^g F D1 - x^(a2-a1) z^(c1-2c2+g) G H^2",
                [0, b2, 0],
                &d22,
                &[
                    t(-1, [0, 0, gamma], vec![f, &d1]),
                    t(-1, [a2 - a1, 0, c1 - 2 * c2 + gamma], vec![g, &h2]),
                ],
            )?);
            checks.push(check_relation(
                &ring,
                "z^(c2-g) D22 = H D1 - x^(a2-a1) y^(b1-2b2) F G^2",
                [0, 0, c2 - gamma],
                &d22,
                &[
                    t(1, [0, 0, 0], vec![h, &d1]),
                    t(-1, [a2 - a1, b1 - 2 * b2, 0], vec![f, &g2]),
                ],
            )?);
            deltas.push(("D22".into(), d22));
        }
        CaseId::C1c => {
            let d231 = delta_from_relation(
                &ring,
                "D231",
                [a1, 0, 0],
                &[
                    t(1, [0, 2 * b2 - b1, c1 - 2 * c2 + gamma], vec![&h3]),
                    t(1, [0, 0, gamma], vec![&f2, g]),
                ],
            )?;
            checks.push(check_relation(
                &ring,
                "y^(b1-b2) D231 = -z^g F D1 - x^(a2-a1) z^(c1-2c2+g) G H^2",
                [0, b1 - b2, 0],
                &d231,
                &[
                    t(-1, [0, 0, gamma], vec![f, &d1]),
                    t(-1, [a2 - a1, 0, c1 - 2 * c2 + gamma], vec![g, &h2]),
                ],
            )?);
            // the printed relation omits the Δ factor on the left; verified
            // with it restored, never assumed
            let mut presumed = check_relation(
                &ring,
                "z^(c2-g) D231 = y^(2b2-b1) H D1 - x^(a2-a1) F G^2",
                [0, 0, c2 - gamma],
                &d231,
                &[
                    t(1, [0, 2 * b2 - b1, 0], vec![h, &d1]),
                    t(-1, [a2 - a1, 0, 0], vec![f, &g2]),
                ],
            )?;
            presumed.note = Some("left factor restored on a misprinted relation".into());
            checks.push(presumed);

            let d232 = delta_from_relation(
                &ring,
                "D232",
                [a2, 0, 0],
                &[
                    t(1, [a1, 0, c1 - 2 * c2 + gamma], vec![&h3]),
                    t(-1, [0, 2 * b1 - 2 * b2, gamma], vec![f, &g2]),
                    t(1, [0, b1 - b2, c1 - c2 + gamma], vec![g, &h2]),
                ],
            )?;
            checks.push(check_relation(
                &ring,
                "y^b2 D232 = -x^(2a1-a2) z^g F D1 - y^(b1-b2) z^(c1-c2+g) G^2 H - x^a1 z^(c1-2c2+g) G H^2",
                [0, b2, 0],
                &d232,
                &[
                    t(-1, [2 * a1 - a2, 0, gamma], vec![f, &d1]),
                    t(-1, [0, b1 - b2, c1 - c2 + gamma], vec![&g2, h]),
                    t(-1, [a1, 0, c1 - 2 * c2 + gamma], vec![g, &h2]),
                ],
            )?);
            checks.push(check_relation(
                &ring,
                "z^(c2-g) D232 = x^(2a1-a2) H D1 + y^(2b1-2b2) G^3",
                [0, 0, c2 - gamma],
                &d232,
                &[
                    t(1, [2 * a1 - a2, 0, 0], vec![h, &d1]),
                    t(1, [0, 2 * b1 - 2 * b2, 0], vec![&g3]),
                ],
            )?);
            deltas.push(("D231".into(), d231));
            deltas.push(("D232".into(), d232));
        }
        CaseId::C2a | CaseId::C2b => {
            let d21 = delta_from_relation(
                &ring,
                "D21",
                [a2, 0, 0],
                &[
                    t(-1, [0, beta, c1 - 2 * c2 + gamma], vec![&h3]),
                    t(-1, [0, b1 - 2 * b2 + beta, gamma], vec![&f2, g]),
                ],
            )?;
            checks.push(check_relation(
                &ring,
                "y^(b2-b) D21 = z^g F D1 + z^(c1-2c2+g) G H^2",
                [0, b2 - beta, 0],
                &d21,
                &[
                    t(1, [0, 0, gamma], vec![f, &d1]),
                    t(1, [0, 0, c1 - 2 * c2 + gamma], vec![g, &h2]),
                ],
            )?);
            // the printed relation carries an ambiguous unit coefficient;
            // try both signs and record which one holds
            let mut third = check_relation(
                &ring,
                "z^(c2-g) D21 = ±y^b H D1 + y^(b1-2b2+b) F G^2",
                [0, 0, c2 - gamma],
                &d21,
                &[
                    t(1, [0, beta, 0], vec![h, &d1]),
                    t(1, [0, b1 - 2 * b2 + beta, 0], vec![f, &g2]),
                ],
            )?;
            if third.verified {
                third.note = Some("holds with coefficient +1".into());
            } else {
                let retry = check_relation(
                    &ring,
                    "z^(c2-g) D21 = ±y^b H D1 + y^(b1-2b2+b) F G^2",
                    [0, 0, c2 - gamma],
                    &d21,
                    &[
                        t(-1, [0, beta, 0], vec![h, &d1]),
                        t(1, [0, b1 - 2 * b2 + beta, 0], vec![f, &g2]),
                    ],
                )?;
                third = retry;
                third.note = Some(if third.verified {
                    "holds with coefficient -1".into()
                } else {
                    "fails with either unit coefficient".into()
                });
            }
            checks.push(third);

            let d22 = delta_from_relation(
                &ring,
                "D22",
                [a2 - alpha, 0, 0],
                &[
                    t(1, [0, 0, gamma], vec![f, &d1]),
                    t(-1, [0, 0, c1 - 2 * c2 + gamma], vec![g, &h2]),
                ],
            )?;
            checks.push(check_relation(
                &ring,
                "y^b2 D22 = x^(a1-2a2+a) z^g F^3 + x^a z^(c1-2c2+g) G^2 H",
                [0, b2, 0],
                &d22,
                &[
                    t(1, [a1 - 2 * a2 + alpha, 0, gamma], vec![&f3]),
                    t(1, [alpha, 0, c1 - 2 * c2 + gamma], vec![&g2, h]),
                ],
            )?);
            checks.push(check_relation(
                &ring,
                "z^(c2-g) D22 = -x^a G D1 - x^(a1-2a2+a) F^2 H",
                [0, 0, c2 - gamma],
                &d22,
                &[
                    t(-1, [alpha, 0, 0], vec![g, &d1]),
                    t(-1, [a1 - 2 * a2 + alpha, 0, 0], vec![&f2, h]),
                ],
            )?);

            let d23 = delta_from_relation(
                &ring,
                "D23",
                [a2 - alpha, 0, 0],
                &[
                    t(1, [0, beta, 0], vec![h, &d1]),
                    t(1, [0, b1 - 2 * b2 + beta, 0], vec![f, &g2]),
                ],
            )?;
            checks.push(check_relation(
                &ring,
                "y^(b2-b) D23 = -x^a G D1 + x^(a1-2a2+a) F^2 H",
                [0, b2 - beta, 0],
                &d23,
                &[
                    t(-1, [alpha, 0, 0], vec![g, &d1]),
                    t(1, [a1 - 2 * a2 + alpha, 0, 0], vec![&f2, h]),
                ],
            )?);
            checks.push(check_relation(
                &ring,
                "z^c2 D23 = -x^a y^(b1-2b2+b) G^3 - x^(a1-2a2+a) y^b F H^2",
                [0, 0, c2],
                &d23,
                &[
                    t(-1, [alpha, b1 - 2 * b2 + beta, 0], vec![&g3]),
                    t(-1, [a1 - 2 * a2 + alpha, beta, 0], vec![f, &h2]),
                ],
            )?);

            if case_id == CaseId::C2b {
                // char 2: one generator D2 with x^(a2-a) D2 = D21 etc.
                let d2 = d21.divide_by_term(
                    &Monomial::new(vec![(a2 - alpha) as u32, 0, 0]),
                    &ring.field().one(),
                )?;
                checks.push(check_relation(
                    &ring,
                    "y^(b2-b) D2 = D22",
                    [0, b2 - beta, 0],
                    &d2,
                    &[t(1, [0, 0, 0], vec![&d22])],
                )?);
                checks.push(check_relation(
                    &ring,
                    "z^(c2-g) D2 = D23",
                    [0, 0, c2 - gamma],
                    &d2,
                    &[t(1, [0, 0, 0], vec![&d23])],
                )?);
                deltas.push(("D2".into(), d2));
            } else {
                deltas.push(("D21".into(), d21));
                deltas.push(("D22".into(), d22));
                deltas.push(("D23".into(), d23));
            }
        }
    }

    if let Some(fail) = checks.iter().find(|c| !c.verified) {
        return Err(Error::ClosedFormUnavailable(format!(
            "relation identity failed: {}",
            fail.description
        )));
    }

    // assemble (P^3, D1·P, deltas) in the normalized ring, then pull back
    let p = norm.ideal().clone();
    let p3 = p.power(3)?;
    let d1p = Ideal::new(&ring, vec![d1.clone()]).product(&p);
    let delta_ideal = Ideal::new(&ring, deltas.iter().map(|(_, d)| d.clone()).collect());
    let assembled = p3.sum(&d1p).sum(&delta_ideal);

    let back = |p: &Polynomial<F>| curve.pull_back(perm, p);
    let assembled = Ideal::new(
        curve.ring(),
        assembled.generators().iter().map(&back).collect(),
    );
    let deltas: Vec<(String, Polynomial<F>)> =
        deltas.into_iter().map(|(n, d)| (n, back(&d))).collect();
    let delta1 = back(&d1);

    let sat = lab.symbolic(3)?;
    let crosscheck = if assembled.equal(&sat, cfg)? {
        CrossCheck::Pass
    } else {
        CrossCheck::Fail
    };

    Ok(CubeClosedForm {
        case_id,
        perm,
        gaps: (alpha as u32, beta as u32, gamma as u32),
        delta1,
        deltas,
        ideal: assembled,
        relation_checks: checks,
        crosscheck,
    })
}

/// Route selection for the CLI and manifests.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RouteChoice {
    Saturation,
    Closed,
    Both,
}

/// Symbolic power of a curve prime with the requested route. Closed forms
/// exist for n ≤ 3; a closed-form failure falls back to saturation with the
/// reason recorded.
pub fn curve_symbolic_power<F: Field>(
    curve: &MonomialCurve<F>,
    lab: &SymbolicLab<F>,
    n: u32,
    route: RouteChoice,
) -> Result<SymbolicPowerResult<F>> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let cfg = lab.cfg();
    let saturation = |crosscheck: CrossCheck, fallback: Option<String>| -> Result<SymbolicPowerResult<F>> {
        Ok(SymbolicPowerResult {
            n,
            ideal: lab.symbolic(n)?,
            route: Route::Saturation,
            crosscheck,
            fallback,
        })
    };
    match route {
        RouteChoice::Saturation => saturation(CrossCheck::NotRun, None),
        RouteChoice::Closed | RouteChoice::Both => {
            let closed: Result<Ideal<F>> = match n {
                1 => Ok(curve.ideal().clone()),
                2 => (|| {
                    let s = schenzel_delta1(curve, lab)?;
                    Ok(lab
                        .power(2)?
                        .sum(&Ideal::new(curve.ring(), vec![s.delta1])))
                })(),
                3 => cube_closed_form(curve, lab).map(|c| c.ideal),
                _ => Err(Error::ClosedFormUnavailable(format!(
                    "no closed form for n = {n}; use the saturation route"
                ))),
            };
            match closed {
                Ok(ideal) => {
                    let crosscheck = if route == RouteChoice::Both {
                        if ideal.equal(&lab.symbolic(n)?, cfg)? {
                            CrossCheck::Pass
                        } else {
                            CrossCheck::Fail
                        }
                    } else {
                        CrossCheck::NotRun
                    };
                    Ok(SymbolicPowerResult {
                        n,
                        ideal,
                        route: Route::ClosedForm,
                        crosscheck,
                        fallback: None,
                    })
                }
                Err(e) => saturation(CrossCheck::NotRun, Some(e.to_string())),
            }
        }
    }
}
