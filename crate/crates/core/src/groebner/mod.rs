//! Buchberger engine and the ideal-theoretic toolkit.

pub mod engine;
pub mod ideal;

pub use engine::{div_exact, interreduce, Budget, GbCounters, GbStats, GroebnerBasis};
pub use ideal::{GbConfig, Ideal, IdealData};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Polynomial, Rationals, Ring, TermOrder};

    fn setup() -> (std::sync::Arc<Ring<Rationals>>, GbConfig) {
        (Ring::xyz(Rationals), GbConfig::default())
    }

    #[test]
    fn already_reduced_basis() {
        let (r, cfg) = setup();
        let i = Ideal::new(&r, r.polys(&["x", "y"]));
        let gb = i.gb(&cfg).unwrap();
        assert_eq!(gb.elements(), r.polys(&["y", "x"]));
    }

    #[test]
    fn buchberger_produces_y_cubed() {
        // S(x^2, xy + y^2) chains down to y^3
        let (r, cfg) = setup();
        let i = Ideal::new(&r, r.polys(&["x^2", "x*y + y^2"]));
        let gb = i.gb(&cfg).unwrap();
        assert!(gb.elements().contains(&r.poly("y^3")), "basis: {:?}", gb.elements());
        assert!(gb.is_member(&r.poly("y^3")));
    }

    #[test]
    fn generators_are_members() {
        let (r, cfg) = setup();
        let gens = r.polys(&["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]);
        let i = Ideal::new(&r, gens.clone());
        let gb = i.gb(&cfg).unwrap();
        for g in &gens {
            assert!(gb.is_member(g));
        }
    }

    #[test]
    fn normal_form_examples() {
        let (r, cfg) = setup();
        let i = Ideal::new(&r, r.polys(&["x"]));
        assert!(i.normal_form(&r.poly("x^2"), &cfg).unwrap().is_zero());
        assert_eq!(i.normal_form(&r.poly("y"), &cfg).unwrap(), r.poly("y"));
    }

    #[test]
    fn sum_product_power() {
        let (r, cfg) = setup();
        let ix = Ideal::new(&r, r.polys(&["x"]));
        let iy = Ideal::new(&r, r.polys(&["y"]));
        assert!(ix.sum(&iy).equal(&Ideal::new(&r, r.polys(&["x", "y"])), &cfg).unwrap());
        assert!(ix
            .product(&iy)
            .equal(&Ideal::new(&r, r.polys(&["x*y"])), &cfg)
            .unwrap());
        let m = Ideal::new(&r, r.polys(&["x", "y"]));
        let m2 = m.power(2).unwrap();
        assert!(m2
            .equal(&Ideal::new(&r, r.polys(&["x^2", "x*y", "y^2"])), &cfg)
            .unwrap());
        assert!(m.power(0).is_err());
    }

    #[test]
    fn intersect_examples() {
        let (r, cfg) = setup();
        let ix = Ideal::new(&r, r.polys(&["x"]));
        let iy = Ideal::new(&r, r.polys(&["y"]));
        let ixy = ix.intersect(&iy, &cfg).unwrap();
        assert!(ixy.equal(&Ideal::new(&r, r.polys(&["x*y"])), &cfg).unwrap());

        let a = Ideal::new(&r, r.polys(&["x^2", "y"]));
        let got = a.intersect(&ix, &cfg).unwrap();
        assert!(got
            .equal(&Ideal::new(&r, r.polys(&["x^2", "x*y"])), &cfg)
            .unwrap());

        // idempotence
        let i = Ideal::new(&r, r.polys(&["y^2 - x*z", "x^3 - y*z"]));
        assert!(i.intersect(&i, &cfg).unwrap().equal(&i, &cfg).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let (r, cfg) = setup();
        let i = Ideal::new(&r, r.polys(&["x^2"]));
        let q = i.quotient_poly(&r.poly("x"), &cfg).unwrap();
        assert!(q.equal(&Ideal::new(&r, r.polys(&["x"])), &cfg).unwrap());

        let i2 = Ideal::new(&r, r.polys(&["x^2", "x*y"]));
        let m = Ideal::new(&r, r.polys(&["x", "y"]));
        let q2 = i2.quotient_ideal(&m, &cfg).unwrap();
        assert!(q2.equal(&Ideal::new(&r, r.polys(&["x"])), &cfg).unwrap());

        let one = Polynomial::one(&r);
        assert!(i2.quotient_poly(&one, &cfg).unwrap().equal(&i2, &cfg).unwrap());
    }

    #[test]
    fn saturate_examples() {
        let (r, cfg) = setup();
        let m = Ideal::new(&r, r.polys(&["x", "y"]));
        let i = Ideal::new(&r, r.polys(&["x^2", "x*y"]));
        let s = i.saturate(&m, &cfg).unwrap();
        assert!(s.equal(&Ideal::new(&r, r.polys(&["x"])), &cfg).unwrap());

        // (x) is already saturated with respect to (x, y)
        let ix = Ideal::new(&r, r.polys(&["x"]));
        assert!(ix.saturate(&m, &cfg).unwrap().equal(&ix, &cfg).unwrap());

        // saturation by the unit ideal is the identity
        let unit = Ideal::new(&r, vec![Polynomial::one(&r)]);
        assert!(i.saturate(&unit, &cfg).unwrap().equal(&i, &cfg).unwrap());

        // idempotence
        let s2 = s.saturate(&m, &cfg).unwrap();
        assert!(s2.equal(&s, &cfg).unwrap());
    }

    #[test]
    fn equality_examples() {
        let (r, cfg) = setup();
        let a = Ideal::new(&r, r.polys(&["x", "y"]));
        let b = Ideal::new(&r, r.polys(&["y", "x + y"]));
        assert!(a.equal(&b, &cfg).unwrap());
        let c = Ideal::new(&r, r.polys(&["x^2"]));
        let d = Ideal::new(&r, r.polys(&["x"]));
        assert!(!c.equal(&d, &cfg).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        let cfg = GbConfig::default();
        let r = Ring::new(Rationals, vec!["t".into(), "x".into(), "y".into()]).unwrap();
        let i = Ideal::new(&r, r.polys(&["t - x", "t - y"]));
        let e = i.eliminate(&[0], &cfg).unwrap();
        assert_eq!(e.ring().vars(), &["x".to_string(), "y".to_string()]);
        let rxy = e.ring().clone();
        assert!(e
            .equal(&Ideal::new(&rxy, rxy.polys(&["x - y"])), &cfg)
            .unwrap());

        // eliminating nothing is the identity
        assert!(i.eliminate(&[], &cfg).unwrap().equal(&i, &cfg).unwrap());
    }

    #[test]
    fn eliminate_curve_kernel() {
        // x ↦ t^3, y ↦ t^4, z ↦ t^5
        let cfg = GbConfig::default();
        let r = Ring::new(
            Rationals,
            vec!["t".into(), "x".into(), "y".into(), "z".into()],
        )
        .unwrap();
        let i = Ideal::new(&r, r.polys(&["x - t^3", "y - t^4", "z - t^5"]));
        let p = i.eliminate(&[0], &cfg).unwrap();
        let rxyz = p.ring().clone();
        let expected = Ideal::new(&rxyz, rxyz.polys(&["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]));
        assert!(p.equal(&expected, &cfg).unwrap());
    }

    #[test]
    fn budget_exhaustion_reports_resource_limit() {
        let r = Ring::xyz(Rationals);
        let mut cfg = GbConfig::default();
        cfg.budget = Budget {
            max_pair_reductions: 1,
        };
        let i = Ideal::new(
            &r,
            r.polys(&["x^4 + y^3 - z", "x*y*z - y^2 + 3", "z^3 - x - y^2*z"]),
        );
        match i.gb(&cfg) {
            Err(crate::error::Error::ResourceLimit(_)) => {}
            other => panic!("expected resource limit, got {:?}", other.map(|g| g.len())),
        }
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let (r, cfg) = setup();
        let i = Ideal::new(&r, r.polys(&["x", "y", "x + y", "x^2"]));
        let min = i.minimal_generators(&cfg).unwrap();
        assert_eq!(min.len(), 2);
    }
}
