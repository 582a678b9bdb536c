//! Space monomial curves: the kernel oracle, the 2×3 presentation matrix,
//! its minors, and the quasi-homogeneous grading.
//!
//! For coprime (a, b, c) the curve is parametrized by t ↦ (t^a, t^b, t^c).
//! The defining prime P is the kernel of x ↦ t^a, y ↦ t^b, z ↦ t^c, and in
//! the non-complete-intersection case it is generated by the 2×2 minors of
//!
//! ```text
//!     | x^a1  y^b1  z^c1 |
//!     | z^c2  x^a2  y^b2 |
//! ```
//!
//! with all six exponents positive. The minors are taken with the sign
//! convention that makes each generator "pure power minus mixed monomial":
//! F = y^(b1+b2) − x^a2·z^c1, G = z^(c1+c2) − x^a1·y^b2,
//! H = x^(a1+a2) − y^b1·z^c2.

use std::sync::Arc;

use crate::arith::field::Field;
use crate::arith::monomial::Monomial;
use crate::arith::poly::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{GbConfig, Ideal};

/// The six presentation exponents.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HerzogExponents {
    pub a1: u32,
    pub a2: u32,
    pub b1: u32,
    pub b2: u32,
    pub c1: u32,
    pub c2: u32,
}

impl HerzogExponents {
    pub fn all_positive(&self) -> bool {
        self.a1 > 0 && self.a2 > 0 && self.b1 > 0 && self.b2 > 0 && self.c1 > 0 && self.c2 > 0
    }

    /// Hypothesis a1 ≤ a2, b1 ≥ b2, c1 ≥ c2.
    pub fn case1(&self) -> bool {
        self.a1 <= self.a2 && self.b1 >= self.b2 && self.c1 >= self.c2
    }

    /// Hypothesis a1 > a2, b1 > b2, c1 > c2.
    pub fn case2(&self) -> bool {
        self.a1 > self.a2 && self.b1 > self.b2 && self.c1 > self.c2
    }

    /// The three weighted-homogeneity identities of the minors, as exact
    /// integer arithmetic: a(a1+a2) = b·b1 + c·c2, b(b1+b2) = a·a2 + c·c1,
    /// c(c1+c2) = a·a1 + b·b2.
    pub fn homogeneity_relations(&self, a: u64, b: u64, c: u64) -> [(u64, u64); 3] {
        [
            (
                a * (self.a1 + self.a2) as u64,
                b * self.b1 as u64 + c * self.c2 as u64,
            ),
            (
                b * (self.b1 + self.b2) as u64,
                a * self.a2 as u64 + c * self.c1 as u64,
            ),
            (
                c * (self.c1 + self.c2) as u64,
                a * self.a1 as u64 + b * self.b2 as u64,
            ),
        ]
    }

    pub fn homogeneous(&self, a: u64, b: u64, c: u64) -> bool {
        self.homogeneity_relations(a, b, c).iter().all(|(l, r)| l == r)
    }
}

/// Herzog presentation data: exponents, matrix, and the three minors.
#[derive(Clone, Debug)]
pub struct HerzogPresentation<F: Field> {
    pub exps: HerzogExponents,
    pub matrix: [[Polynomial<F>; 3]; 2],
    pub f: Polynomial<F>,
    pub g: Polynomial<F>,
    pub h: Polynomial<F>,
}

impl<F: Field> HerzogPresentation<F> {
    fn build(ring: &Arc<Ring<F>>, exps: HerzogExponents) -> Self {
        let xp = |e: u32| Polynomial::var_pow(ring, 0, e);
        let yp = |e: u32| Polynomial::var_pow(ring, 1, e);
        let zp = |e: u32| Polynomial::var_pow(ring, 2, e);
        let matrix = [
            [xp(exps.a1), yp(exps.b1), zp(exps.c1)],
            [zp(exps.c2), xp(exps.a2), yp(exps.b2)],
        ];
        let [f, g, h] = minors(&matrix);
        HerzogPresentation {
            exps,
            matrix,
            f,
            g,
            h,
        }
    }

    /// The ideal of the six matrix entries, I_1 of the presentation.
    pub fn entry_ideal(&self) -> Ideal<F> {
        let ring = self.f.ring().clone();
        let gens = self
            .matrix
            .iter()
            .flatten()
            .cloned()
            .collect::<Vec<_>>();
        Ideal::new(&ring, gens)
    }
}

/// The three 2×2 minors of a 2×3 matrix in the (F, G, H) sign convention.
pub fn minors<F: Field>(m: &[[Polynomial<F>; 3]; 2]) -> [Polynomial<F>; 3] {
    let f = &m[0][1].mul(&m[1][2]) - &m[0][2].mul(&m[1][1]);
    let g = &m[0][2].mul(&m[1][0]) - &m[0][0].mul(&m[1][2]);
    let h = &m[0][0].mul(&m[1][1]) - &m[0][1].mul(&m[1][0]);
    [f, g, h]
}

/// Ideal generated by the 2×2 minors of a 2×3 matrix.
pub fn minors_ideal<F: Field>(m: &[[Polynomial<F>; 3]; 2]) -> Ideal<F> {
    let ring = m[0][0].ring().clone();
    Ideal::new(&ring, minors(m).to_vec())
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    gcd(gcd(a, b), c)
}

/// The kernel of x ↦ t^a, y ↦ t^b, z ↦ t^c, by eliminating t.
/// `ring` must be a three-variable ring.
pub fn curve_kernel_oracle<F: Field>(
    ring: &Arc<Ring<F>>,
    a: u64,
    b: u64,
    c: u64,
    cfg: &GbConfig,
) -> Result<Ideal<F>> {
    assert_eq!(ring.nvars(), 3);
    let ext = ring.extended_front(&["t"])?;
    let exp = |e: u64| -> Result<u32> {
        u32::try_from(e).map_err(|_| Error::InvalidInput(format!("exponent {e} too large")))
    };
    let gens = vec![
        &Polynomial::var(&ext, 1) - &Polynomial::var_pow(&ext, 0, exp(a)?),
        &Polynomial::var(&ext, 2) - &Polynomial::var_pow(&ext, 0, exp(b)?),
        &Polynomial::var(&ext, 3) - &Polynomial::var_pow(&ext, 0, exp(c)?),
    ];
    Ideal::new(&ext, gens).eliminate_into(&[0], ring, cfg)
}

/// A space monomial curve with its defining ideal and, in the non-CI case,
/// a verified Herzog presentation.
#[derive(Clone, Debug)]
pub struct MonomialCurve<F: Field> {
    exponents: (u64, u64, u64),
    given: (u64, u64, u64),
    ring: Arc<Ring<F>>,
    ideal: Ideal<F>,
    presentation: Option<HerzogPresentation<F>>,
}

impl<F: Field> MonomialCurve<F> {
    /// Construct the curve for (a, b, c), normalizing by gcd when needed.
    /// Characteristic 3 is rejected: the curve experiments assume it away.
    pub fn new(field: F, a: u64, b: u64, c: u64, cfg: &GbConfig) -> Result<Self> {
        if field.characteristic() == 3 {
            return Err(Error::CharacteristicThree);
        }
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidInput("curve exponents must be positive".into()));
        }
        let g = gcd3(a, b, c);
        let (na, nb, nc) = (a / g, b / g, c / g);
        let ring = Ring::xyz_weighted(field, na, nb, nc)?;
        let oracle = curve_kernel_oracle(&ring, na, nb, nc, cfg)?;
        let min_gens = oracle.minimal_generators(cfg)?;
        let ideal = Ideal::new(&ring, min_gens.clone());
        let presentation = match min_gens.len() {
            1 | 2 => None,
            3 => Some(find_presentation(&ring, &ideal, na, nb, nc, cfg)?),
            n => {
                return Err(Error::InvalidInput(format!(
                    "kernel of ({na},{nb},{nc}) has {n} minimal generators; not a space monomial curve presentation"
                )))
            }
        };
        Ok(MonomialCurve {
            exponents: (na, nb, nc),
            given: (a, b, c),
            ring,
            ideal,
            presentation,
        })
    }

    pub fn exponents(&self) -> (u64, u64, u64) {
        self.exponents
    }

    /// True when the input triple needed gcd normalization.
    pub fn was_normalized(&self) -> bool {
        self.given != self.exponents
    }

    pub fn given(&self) -> (u64, u64, u64) {
        self.given
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    /// The defining prime, minimally generated.
    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn maximal_ideal(&self) -> Ideal<F> {
        Ideal::maximal(&self.ring)
    }

    pub fn is_complete_intersection(&self) -> bool {
        self.presentation.is_none()
    }

    pub fn presentation(&self) -> Result<&HerzogPresentation<F>> {
        let (a, b, c) = self.exponents;
        self.presentation
            .as_ref()
            .ok_or(Error::CompleteIntersection(a, b, c))
    }

    /// The curve with variable roles permuted: new slot i plays the role of
    /// old slot `perm[i]`. The new curve is constructed (and re-verified)
    /// from its own exponent triple.
    pub fn relabeled(&self, perm: [usize; 3], cfg: &GbConfig) -> Result<MonomialCurve<F>> {
        let w = [self.exponents.0, self.exponents.1, self.exponents.2];
        MonomialCurve::new(
            self.ring.field().clone(),
            w[perm[0]],
            w[perm[1]],
            w[perm[2]],
            cfg,
        )
    }

    /// Map a polynomial from the ring of `relabeled(perm)` back into this
    /// curve's ring.
    pub fn pull_back(&self, perm: [usize; 3], p: &Polynomial<F>) -> Polynomial<F> {
        p.map_vars(&self.ring, &perm)
    }
}

/// Read the presentation exponents off the three minimal generators and
/// certify them against the oracle; fall back to a bounded exhaustive search
/// when the read-off shape is violated.
fn find_presentation<F: Field>(
    ring: &Arc<Ring<F>>,
    oracle: &Ideal<F>,
    a: u64,
    b: u64,
    c: u64,
    cfg: &GbConfig,
) -> Result<HerzogPresentation<F>> {
    if let Some(exps) = read_off_exponents(ring, oracle) {
        let pres = HerzogPresentation::build(ring, exps);
        if exps.all_positive()
            && exps.homogeneous(a, b, c)
            && minors_ideal(&pres.matrix).equal(oracle, cfg)?
        {
            return Ok(pres);
        }
    }
    search_presentation(ring, oracle, a, b, c, cfg)
}

/// For each variable, find the generator with a pure power of it and read
/// the paired exponents from the mixed term.
fn read_off_exponents<F: Field>(ring: &Arc<Ring<F>>, oracle: &Ideal<F>) -> Option<HerzogExponents> {
    let field = ring.field();
    // per variable: (pure power, other-two exponents)
    let mut shapes: [Option<(u32, [u32; 3])>; 3] = [None, None, None];
    for g in oracle.generators() {
        if g.num_terms() != 2 {
            return None;
        }
        let (m0, c0) = &g.terms()[0];
        let (m1, c1) = &g.terms()[1];
        let support = |m: &Monomial| -> Vec<usize> {
            (0..3).filter(|&i| m.exp(i) > 0).collect()
        };
        let (pure, mixed, cp, cm) = match (support(m0).as_slice(), support(m1).as_slice()) {
            ([v], s) if s.len() == 2 => (*v, m1.clone(), c0, c1),
            (s, [v]) if s.len() == 2 => (*v, m0.clone(), c1, c0),
            _ => return None,
        };
        // normalize: pure term +1, mixed term −1
        let quot = field.div(cm, cp);
        if !field.is_one(&field.neg(&quot)) {
            return None;
        }
        let pure_exp = g
            .terms()
            .iter()
            .find(|(m, _)| m.exp(pure) > 0)
            .map(|(m, _)| m.exp(pure))?;
        if shapes[pure].is_some() {
            return None;
        }
        shapes[pure] = Some((pure_exp, [mixed.exp(0), mixed.exp(1), mixed.exp(2)]));
    }
    let (xa, xm) = shapes[0]?; // H: x^(a1+a2) − y^b1 z^c2
    let (yb, ym) = shapes[1]?; // F: y^(b1+b2) − x^a2 z^c1
    let (zc, zm) = shapes[2]?; // G: z^(c1+c2) − x^a1 y^b2
    let exps = HerzogExponents {
        a1: zm[0],
        a2: ym[0],
        b1: xm[1],
        b2: zm[1],
        c1: ym[2],
        c2: xm[2],
    };
    if exps.a1 + exps.a2 != xa || exps.b1 + exps.b2 != yb || exps.c1 + exps.c2 != zc {
        return None;
    }
    Some(exps)
}

/// Exhaustive search with the integer homogeneity relations as pruning;
/// every candidate is certified by ideal equality with the oracle.
fn search_presentation<F: Field>(
    ring: &Arc<Ring<F>>,
    oracle: &Ideal<F>,
    a: u64,
    b: u64,
    c: u64,
    cfg: &GbConfig,
) -> Result<HerzogPresentation<F>> {
    let bound = oracle
        .generators()
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(0) as u32;
    for a1 in 1..=bound {
        for a2 in 1..=bound.saturating_sub(a1).max(1) {
            for b1 in 1..=bound {
                // b2 from c(c1+c2) = a·a1 + b·b2 needs c1, so derive via the
                // other two relations first
                let lhs = a * (a1 + a2) as u64;
                let bb1 = b * b1 as u64;
                if lhs <= bb1 || (lhs - bb1) % c != 0 {
                    continue;
                }
                let c2 = ((lhs - bb1) / c) as u32;
                if c2 == 0 {
                    continue;
                }
                for b2 in 1..=bound {
                    let lhs2 = b * (b1 + b2) as u64;
                    let aa2 = a * a2 as u64;
                    if lhs2 <= aa2 || (lhs2 - aa2) % c != 0 {
                        continue;
                    }
                    let c1 = ((lhs2 - aa2) / c) as u32;
                    if c1 == 0 {
                        continue;
                    }
                    let exps = HerzogExponents {
                        a1,
                        a2,
                        b1,
                        b2,
                        c1,
                        c2,
                    };
                    if !exps.homogeneous(a, b, c) {
                        continue;
                    }
                    let pres = HerzogPresentation::build(ring, exps);
                    if minors_ideal(&pres.matrix).equal(oracle, cfg)? {
                        return Ok(pres);
                    }
                }
            }
        }
    }
    Err(Error::NoPresentationFound(a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Homogeneity, PrimeField, Rationals, WeightGrading};

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    #[test]
    fn kernel_oracle_complete_intersections() {
        let cfg = cfg();
        let c123 = MonomialCurve::new(Rationals, 1, 2, 3, &cfg).unwrap();
        assert!(c123.is_complete_intersection());
        let r = c123.ring().clone();
        let expected = Ideal::new(&r, r.polys(&["y - x^2", "z - x^3"]));
        assert!(c123.ideal().equal(&expected, &cfg).unwrap());

        let c235 = MonomialCurve::new(Rationals, 2, 3, 5, &cfg).unwrap();
        assert!(c235.is_complete_intersection());
        assert!(c235
            .ideal()
            .contains_poly(&c235.ring().poly("z - x*y"), &cfg)
            .unwrap());
        assert!(c235.presentation().is_err());
    }

    #[test]
    fn kernel_oracle_345() {
        let cfg = cfg();
        let curve = MonomialCurve::new(Rationals, 3, 4, 5, &cfg).unwrap();
        assert!(!curve.is_complete_intersection());
        let r = curve.ring().clone();
        let expected = Ideal::new(&r, r.polys(&["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]));
        assert!(curve.ideal().equal(&expected, &cfg).unwrap());

        // every generator vanishes under x ↦ t^3, y ↦ t^4, z ↦ t^5
        let rt = Ring::new(Rationals, vec!["t".into()]).unwrap();
        let images = vec![
            Polynomial::var_pow(&rt, 0, 3),
            Polynomial::var_pow(&rt, 0, 4),
            Polynomial::var_pow(&rt, 0, 5),
        ];
        for g in curve.ideal().generators() {
            assert!(g.substitute_same(&rt, &images).unwrap().is_zero());
        }
    }

    #[test]
    fn presentation_345() {
        let cfg = cfg();
        let curve = MonomialCurve::new(Rationals, 3, 4, 5, &cfg).unwrap();
        let pres = curve.presentation().unwrap();
        // minors convention: F = y^2 − xz, G = z^2 − x^2 y, H = x^3 − yz
        assert_eq!(
            pres.exps,
            HerzogExponents {
                a1: 2,
                a2: 1,
                b1: 1,
                b2: 1,
                c1: 1,
                c2: 1
            }
        );
        let r = curve.ring().clone();
        assert_eq!(pres.f, r.poly("y^2 - x*z"));
        assert_eq!(pres.g, r.poly("z^2 - x^2*y"));
        assert_eq!(pres.h, r.poly("x^3 - y*z"));
        assert!(pres.exps.homogeneous(3, 4, 5));
        assert!(pres.exps.all_positive());

        // minors ideal equals the oracle
        assert!(minors_ideal(&pres.matrix).equal(curve.ideal(), &cfg).unwrap());

        // minors are quasi-homogeneous with weighted degrees {8, 9, 10}
        let w = WeightGrading::new(vec![3, 4, 5]).unwrap();
        let mut degs: Vec<u64> = [&pres.f, &pres.g, &pres.h]
            .iter()
            .map(|p| match p.weighted_degree(&w).unwrap() {
                Homogeneity::Homogeneous(d) => d,
                Homogeneity::Inhomogeneous => panic!("minor not quasi-homogeneous"),
            })
            .collect();
        degs.sort();
        assert_eq!(degs, vec![8, 9, 10]);
    }

    #[test]
    fn corpus_presentations_match_oracle() {
        let cfg = cfg();
        let field = PrimeField::new(32003).unwrap();
        for (a, b, c) in [(3u64, 5u64, 7u64), (5, 6, 7), (5, 7, 9)] {
            let curve = MonomialCurve::new(field, a, b, c, &cfg).unwrap();
            let pres = curve.presentation().unwrap();
            assert!(pres.exps.all_positive(), "({a},{b},{c})");
            assert!(pres.exps.homogeneous(a, b, c), "({a},{b},{c})");
            assert!(
                minors_ideal(&pres.matrix).equal(curve.ideal(), &cfg).unwrap(),
                "({a},{b},{c})"
            );
        }
    }

    #[test]
    fn corpus_complete_intersections() {
        let cfg = cfg();
        for (a, b, c) in [(4u64, 5u64, 6u64), (4, 6, 9)] {
            let curve = MonomialCurve::new(Rationals, a, b, c, &cfg).unwrap();
            assert!(curve.is_complete_intersection(), "({a},{b},{c})");
        }
    }

    #[test]
    fn gcd_normalization() {
        let cfg = cfg();
        let curve = MonomialCurve::new(Rationals, 6, 8, 10, &cfg).unwrap();
        assert!(curve.was_normalized());
        assert_eq!(curve.exponents(), (3, 4, 5));
    }

    #[test]
    fn characteristic_three_rejected() {
        let cfg = cfg();
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(
            MonomialCurve::new(f3, 3, 4, 5, &cfg).unwrap_err(),
            Error::CharacteristicThree
        );
    }

    #[test]
    fn minors_examples() {
        let cfg = cfg();
        let r = Ring::xyz(Rationals);
        let m = [
            [r.poly("x"), r.poly("y"), r.poly("z")],
            [r.poly("z"), r.poly("x"), r.poly("y")],
        ];
        let i = minors_ideal(&m);
        let expected = Ideal::new(&r, r.polys(&["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]));
        assert!(i.equal(&expected, &cfg).unwrap());

        // a zero row kills all minors
        let z = [
            [Polynomial::zero(&r), Polynomial::zero(&r), Polynomial::zero(&r)],
            [r.poly("z"), r.poly("x"), r.poly("y")],
        ];
        assert!(minors_ideal(&z).is_zero_ideal());
    }

    #[test]
    fn relabel_pull_back_roundtrip() {
        let cfg = cfg();
        let curve = MonomialCurve::new(Rationals, 3, 4, 5, &cfg).unwrap();
        // swap y and z: the relabeled curve is (3, 5, 4)
        let perm = [0usize, 2, 1];
        let other = curve.relabeled(perm, &cfg).unwrap();
        assert_eq!(other.exponents(), (3, 5, 4));
        // pulled-back generators of the relabeled ideal generate the original
        let pulled: Vec<_> = other
            .ideal()
            .generators()
            .iter()
            .map(|g| curve.pull_back(perm, g))
            .collect();
        let pulled_ideal = Ideal::new(curve.ring(), pulled);
        assert!(pulled_ideal.equal(curve.ideal(), &cfg).unwrap());
    }
}
