//! Containment experiments: symbolic-vs-ordinary containments, finite
//! containment windows, stable witnesses and their propagation, resurgence
//! lower-bound search, Swanson-constant and star-condition probes, and the
//! four-thirds suite for self-linked presentation shapes.
//!
//! Asymptotic statements are only ever probed on finite windows; every
//! report says exactly what was checked.

use num::rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::arith::field::Field;
use crate::arith::poly::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{GbConfig, Ideal};
use crate::moncurve::MonomialCurve;
use crate::symbolic::SymbolicLab;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
}

/// Work counters accumulated while producing one report.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct GbWork {
    pub gb_calls: u64,
    pub pair_reductions: u64,
    pub reduction_steps: u64,
}

/// Outcome of one containment query, with a re-verifiable witness on failure.
#[derive(Clone, Debug, Serialize)]
pub struct ContainmentReport {
    pub query: String,
    pub verdict: Verdict,
    /// A generator of the left ideal with nonzero normal form, on failure.
    pub witness: Option<String>,
    pub gb_stats: GbWork,
    pub ms: u128,
}

impl ContainmentReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

fn snapshot(cfg: &GbConfig) -> (u64, u64, u64) {
    cfg.counters.snapshot()
}

fn work_since(cfg: &GbConfig, before: (u64, u64, u64)) -> GbWork {
    let after = cfg.counters.snapshot();
    GbWork {
        gb_calls: after.0 - before.0,
        pair_reductions: after.1 - before.1,
        reduction_steps: after.2 - before.2,
    }
}

/// A ⊆ B, with the first failing generator of A as witness.
pub fn check_containment<F: Field>(
    a: &Ideal<F>,
    b: &Ideal<F>,
    query: &str,
    cfg: &GbConfig,
) -> Result<ContainmentReport> {
    let before = snapshot(cfg);
    let start = Instant::now();
    let witness = b.containment_witness(a, cfg)?;
    Ok(ContainmentReport {
        query: query.to_string(),
        verdict: if witness.is_none() {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        witness: witness.map(|w| w.to_string()),
        gb_stats: work_since(cfg, before),
        ms: start.elapsed().as_millis(),
    })
}

/// Re-verify a failure witness: its normal form against the right side must
/// be nonzero. Property-suite helper.
pub fn reverify_witness<F: Field>(
    report: &ContainmentReport,
    rhs: &Ideal<F>,
    cfg: &GbConfig,
) -> Result<bool> {
    match &report.witness {
        None => Ok(true),
        Some(w) => {
            let p = Polynomial::parse(rhs.ring(), w)?;
            Ok(!rhs.normal_form(&p, cfg)?.is_zero())
        }
    }
}

/// I^(m) ⊆ I^s via the saturation route.
pub fn symbolic_containment<F: Field>(
    lab: &SymbolicLab<F>,
    m: u32,
    s: u32,
) -> Result<ContainmentReport> {
    let sym = lab.symbolic(m)?;
    let pow = lab.power(s)?;
    check_containment(
        &sym,
        &pow,
        &format!("I^({m}) ⊆ I^{s}"),
        lab.cfg(),
    )
}

/// Exact lower bound for the resurgence from a finite search box.
#[derive(Clone, Debug, Serialize)]
pub struct ResurgenceEstimate {
    /// max m/s over verified failures (1 when no failure was found).
    pub lower_bound: (u64, u64),
    pub lower_bound_float: f64,
    /// Verified failing pairs (m, s), each with a witness report.
    pub witnesses: Vec<(u32, u32)>,
    pub search_box: (u32, u32),
    pub reports: Vec<ContainmentReport>,
    /// Cells skipped because a verified containment dominates them.
    pub pruned_cells: u64,
}

/// Exhaustive scan of I^(m) ⊆ I^s over m ≥ s within the box, pruning only
/// cells implied to hold by verified containments (I^(m') ⊆ I^(m) for
/// m' ≥ m). Every reported failure carries an explicit witness.
pub fn resurgence_search<F: Field>(
    lab: &SymbolicLab<F>,
    m_max: u32,
    s_max: u32,
) -> Result<ResurgenceEstimate> {
    if m_max < 2 || s_max < 2 {
        return Err(Error::InvalidInput(
            "resurgence search box must be at least (2,2)".into(),
        ));
    }
    // precompute symbolic powers in parallel; rows then read the cache
    (1..=m_max)
        .into_par_iter()
        .map(|m| lab.symbolic(m).map(|_| ()))
        .collect::<Result<Vec<()>>>()?;
    (1..=s_max)
        .into_par_iter()
        .map(|s| lab.power(s).map(|_| ()))
        .collect::<Result<Vec<()>>>()?;

    let rows: Vec<(Vec<ContainmentReport>, Vec<(u32, u32)>, u64)> = (1..=s_max)
        .into_par_iter()
        .map(|s| -> Result<(Vec<ContainmentReport>, Vec<(u32, u32)>, u64)> {
            let mut reports = Vec::new();
            let mut fails = Vec::new();
            let mut pruned = 0u64;
            let mut held = false;
            for m in s.max(1)..=m_max {
                if held {
                    pruned += 1;
                    continue;
                }
                let rep = symbolic_containment(lab, m, s)?;
                if rep.holds() {
                    held = true;
                } else {
                    fails.push((m, s));
                }
                reports.push(rep);
            }
            Ok((reports, fails, pruned))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut reports = Vec::new();
    let mut witnesses = Vec::new();
    let mut pruned_cells = 0;
    for (r, f, p) in rows {
        reports.extend(r);
        witnesses.extend(f);
        pruned_cells += p;
    }
    let mut best = Ratio::new(1u64, 1u64);
    for &(m, s) in &witnesses {
        let r = Ratio::new(m as u64, s as u64);
        if r > best {
            best = r;
        }
    }
    Ok(ResurgenceEstimate {
        lower_bound: (*best.numer(), *best.denom()),
        lower_bound_float: *best.numer() as f64 / *best.denom() as f64,
        witnesses,
        search_box: (m_max, s_max),
        reports,
        pruned_cells,
    })
}

/// I^(cn−c+1) ⊆ I^n for each n in 1..=n_max.
pub fn harbourne_window<F: Field>(
    lab: &SymbolicLab<F>,
    c: u32,
    n_max: u32,
) -> Result<Vec<ContainmentReport>> {
    (1..=n_max)
        .map(|n| {
            let m = c * n - c + 1;
            let sym = lab.symbolic(m)?;
            let pow = lab.power(n)?;
            check_containment(
                &sym,
                &pow,
                &format!("I^({m}) ⊆ I^{n} (window n = {n}, c = {c})"),
                lab.cfg(),
            )
        })
        .collect()
}

/// Search result for the stable-witness containment I^(ct−c+1) ⊆ m·I^t.
#[derive(Clone, Debug, Serialize)]
pub struct StableWitness {
    pub witness_t: Option<u32>,
    pub reports: Vec<ContainmentReport>,
}

/// Smallest t ≤ t_max with I^(ct−c+1) ⊆ m·I^t.
pub fn stable_witness_search<F: Field>(
    lab: &SymbolicLab<F>,
    c: u32,
    t_max: u32,
) -> Result<StableWitness> {
    let mut reports = Vec::new();
    for t in 1..=t_max {
        let m = c * t - c + 1;
        let sym = lab.symbolic(m)?;
        let target = lab.max_ideal().product(&lab.power(t)?);
        let rep = check_containment(
            &sym,
            &target,
            &format!("I^({m}) ⊆ m·I^{t} (t = {t}, c = {c})"),
            lab.cfg(),
        )?;
        let hit = rep.holds();
        reports.push(rep);
        if hit {
            return Ok(StableWitness {
                witness_t: Some(t),
                reports,
            });
        }
    }
    Ok(StableWitness {
        witness_t: None,
        reports,
    })
}

/// The propagated containments I^(c(tq+r)) ⊆ m^q·I^(tq+r) for
/// q ≤ q_max, r ≤ r_max. The q = 0 rows degenerate to the plain
/// I^(cr) ⊆ I^r instances.
pub fn propagation_check<F: Field>(
    lab: &SymbolicLab<F>,
    c: u32,
    t: u32,
    q_max: u32,
    r_max: u32,
) -> Result<Vec<ContainmentReport>> {
    let mut reports = Vec::new();
    for q in 0..=q_max {
        for r in 0..=r_max {
            let e = t * q + r;
            if e == 0 {
                continue;
            }
            let m = c * e;
            let sym = lab.symbolic(m)?;
            let target = if q == 0 {
                lab.power(e)?
            } else {
                lab.max_ideal().power(q)?.product(&lab.power(e)?)
            };
            reports.push(check_containment(
                &sym,
                &target,
                &format!("I^({m}) ⊆ m^{q}·I^{e} (q = {q}, r = {r}, t = {t}, c = {c})"),
                lab.cfg(),
            )?);
        }
    }
    Ok(reports)
}

/// Window-consistent Swanson constant candidate.
#[derive(Clone, Debug, Serialize)]
pub struct SwansonProbe {
    /// Least s with I^(sn) ⊆ I^n for all n in the window, if any.
    pub swanson_candidate: Option<u32>,
    pub window_n_max: u32,
    pub reports: Vec<ContainmentReport>,
}

pub fn swanson_probe<F: Field>(
    lab: &SymbolicLab<F>,
    n_max: u32,
    s_max: u32,
) -> Result<SwansonProbe> {
    let mut reports = Vec::new();
    for s in 1..=s_max {
        let mut all_hold = true;
        for n in 1..=n_max {
            let rep = symbolic_containment(lab, s * n, n)?;
            let ok = rep.holds();
            reports.push(rep);
            if !ok {
                all_hold = false;
                break;
            }
        }
        if all_hold {
            return Ok(SwansonProbe {
                swanson_candidate: Some(s),
                window_n_max: n_max,
                reports,
            });
        }
    }
    Ok(SwansonProbe {
        swanson_candidate: None,
        window_n_max: n_max,
        reports,
    })
}

/// I^(cn) ⊆ m^⌊n/α⌋·I^n for n in 1..=n_max, with α = alpha_num/alpha_den.
pub fn star_condition_probe<F: Field>(
    lab: &SymbolicLab<F>,
    c: u32,
    alpha_num: u32,
    alpha_den: u32,
    n_max: u32,
) -> Result<Vec<ContainmentReport>> {
    if alpha_num == 0 || alpha_den == 0 {
        return Err(Error::InvalidInput("alpha must be positive".into()));
    }
    let mut reports = Vec::new();
    for n in 1..=n_max {
        // ⌊n/α⌋ = ⌊n·den/num⌋
        let k = n * alpha_den / alpha_num;
        let sym = lab.symbolic(c * n)?;
        let target = if k == 0 {
            lab.power(n)?
        } else {
            lab.max_ideal().power(k)?.product(&lab.power(n)?)
        };
        reports.push(check_containment(
            &sym,
            &target,
            &format!(
                "I^({}) ⊆ m^{k}·I^{n} (n = {n}, α = {alpha_num}/{alpha_den})",
                c * n
            ),
            lab.cfg(),
        )?);
    }
    Ok(reports)
}

/// Finite-window probe of "the symbolic Rees algebra is generated in
/// degree 2": P^(2k) = (P^(2))^k and P^(2k+1) = (P^(2))^k·P.
#[derive(Clone, Debug, Serialize)]
pub struct ReesDegree2Item {
    pub n: u32,
    pub statement: String,
    pub holds: bool,
}

/// Derived guarantee for one m in the four-thirds argument.
#[derive(Clone, Debug, Serialize)]
pub struct FourThirdsGuarantee {
    pub m: u32,
    /// s such that P^(m) ⊆ P^s is derived when the hypotheses hold.
    pub s: u32,
    pub chain: String,
    pub direct: ContainmentReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct FourThirdsReport {
    /// Corollary-shape flags of the presentation: b1 = b2, or a1 = a2 and
    /// c1 = c2.
    pub shape_b1_eq_b2: bool,
    pub shape_a_c_pairs_equal: bool,
    pub hyp_2a: ContainmentReport,
    pub hyp_2b: ContainmentReport,
    /// Labelled finite-window proxy for the degree-2 generation hypothesis.
    pub rees_degree2_window: Vec<ReesDegree2Item>,
    pub rees_degree2_note: String,
    pub guarantees: Vec<FourThirdsGuarantee>,
}

/// The four-thirds suite: hypothesis checks (2a) P^(2) ⊆ J·P and
/// (2b) J·P^(2) ⊆ P², the degree-2 window probe, and the derived
/// guarantee table with each guaranteed containment verified directly.
pub fn four_thirds_suite<F: Field>(
    curve: &MonomialCurve<F>,
    lab: &SymbolicLab<F>,
    j: Option<Ideal<F>>,
    m_max: u32,
) -> Result<FourThirdsReport> {
    let cfg = lab.cfg();
    let pres = curve.presentation()?;
    let e = pres.exps;
    let j = match j {
        Some(j) => j,
        None => pres.entry_ideal(),
    };

    let p = curve.ideal().clone();
    let p2sym = lab.symbolic(2)?;
    let hyp_2a = check_containment(&p2sym, &j.product(&p), "P^(2) ⊆ J·P", cfg)?;
    let hyp_2b = check_containment(&j.product(&p2sym), &lab.power(2)?, "J·P^(2) ⊆ P^2", cfg)?;

    let mut rees = Vec::new();
    let mut k = 1u32;
    loop {
        let even = 2 * k;
        if even > m_max {
            break;
        }
        let lhs = lab.symbolic(even)?;
        let rhs = p2sym.power(k)?;
        rees.push(ReesDegree2Item {
            n: even,
            statement: format!("P^({even}) = (P^(2))^{k}"),
            holds: lhs.equal(&rhs, cfg)?,
        });
        let odd = 2 * k + 1;
        if odd <= m_max {
            let lhs = lab.symbolic(odd)?;
            let rhs = p2sym.power(k)?.product(&p);
            rees.push(ReesDegree2Item {
                n: odd,
                statement: format!("P^({odd}) = (P^(2))^{k}·P"),
                holds: lhs.equal(&rhs, cfg)?,
            });
        }
        k += 1;
    }

    let mut guarantees = Vec::new();
    for m in 2..=m_max {
        let n = m / 4;
        let i = m % 4;
        let (s, chain) = match i {
            0 => (3 * n, format!("m = 4·{n}: (P^(2))^{} ⊆ (JP)^{n}(P^(2))^{n} ⊆ P^{n}(JP^(2))^{n} ⊆ P^(3·{n})", 2 * n)),
            1 => (3 * n, format!("m = 4·{n}+1: P^({m}) ⊆ P^(4·{n}) then the i = 0 chain")),
            2 => (3 * n + 1, format!("m = 4·{n}+2: (P^(2))^{} = (JP)^{n}(P^(2))^{n}P^(2) ⊆ P^(3·{n}+1)", 2 * n + 1)),
            _ => (3 * n + 2, format!("m = 4·{n}+3: (P^(2))^{}·P ⊆ (JP^(2))^{n}P^({}+1)P^(2) ⊆ P^(3·{n}+2)", 2 * n + 1, n)),
        };
        if s == 0 {
            continue;
        }
        let direct = symbolic_containment(lab, m, s)?;
        guarantees.push(FourThirdsGuarantee {
            m,
            s,
            chain,
            direct,
        });
    }

    Ok(FourThirdsReport {
        shape_b1_eq_b2: e.b1 == e.b2,
        shape_a_c_pairs_equal: e.a1 == e.a2 && e.c1 == e.c2,
        hyp_2a,
        hyp_2b,
        rees_degree2_window: rees,
        rees_degree2_note:
            "finite-window proxy: degree-2 generation of the symbolic Rees algebra is only probed for the listed n"
                .to_string(),
        guarantees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals, Ring};

    #[test]
    fn basic_containments() {
        let cfg = GbConfig::default();
        let r = Ring::xyz(Rationals);
        let a = Ideal::new(&r, r.polys(&["x^2"]));
        let b = Ideal::new(&r, r.polys(&["x"]));
        let rep = check_containment(&a, &b, "(x^2) ⊆ (x)", &cfg).unwrap();
        assert!(rep.holds());
        assert!(rep.witness.is_none());

        let rep = check_containment(&b, &a, "(x) ⊆ (x^2)", &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert_eq!(rep.witness.as_deref(), Some("x"));
        assert!(reverify_witness(&rep, &a, &cfg).unwrap());
    }

    #[test]
    fn trivial_symbolic_containment() {
        let cfg = GbConfig::default();
        let curve = MonomialCurve::new(PrimeField::new(32003).unwrap(), 3, 4, 5, &cfg).unwrap();
        let lab = SymbolicLab::for_curve(&curve, cfg);
        let rep = symbolic_containment(&lab, 1, 1).unwrap();
        assert!(rep.holds());
    }

    #[test]
    fn stable_witness_for_345_is_two() {
        let cfg = GbConfig::default();
        let curve = MonomialCurve::new(PrimeField::new(32003).unwrap(), 3, 4, 5, &cfg).unwrap();
        let lab = SymbolicLab::for_curve(&curve, cfg);
        let sw = stable_witness_search(&lab, 2, 3).unwrap();
        // t = 1 always fails for a proper ideal; t = 2 is the witness
        assert_eq!(sw.witness_t, Some(2));
        assert_eq!(sw.reports.len(), 2);
        assert!(!sw.reports[0].holds());
        assert!(sw.reports[1].holds());
    }
}
