//! Buchberger engine: S-pair loop with the two classical elimination
//! criteria, normal pair-selection strategy, and reduced-basis output.
//!
//! Internally polynomials are term vectors sorted descending under the active
//! order, so leading-term access is O(1) during reduction.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::arith::field::Field;
use crate::arith::monomial::Monomial;
use crate::arith::order::TermOrder;
use crate::arith::poly::{Polynomial, Ring};
use crate::error::{Error, Result};

/// Computation budget for one Gröbner basis call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pair reductions in a single Buchberger run.
    pub max_pair_reductions: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pair_reductions: 1_000_000,
        }
    }
}

impl Budget {
    /// The stretch profile for heavyweight runs.
    pub fn stretch() -> Self {
        Budget {
            max_pair_reductions: 100_000_000,
        }
    }
}

/// Cumulative work counters, shared across a whole experiment.
#[derive(Debug, Default)]
pub struct GbCounters {
    pub gb_calls: AtomicU64,
    pub pair_reductions: AtomicU64,
    pub reduction_steps: AtomicU64,
}

impl GbCounters {
    pub fn snapshot(&self) -> (u64, u64, u64) {
        (
            self.gb_calls.load(AtomicOrdering::Relaxed),
            self.pair_reductions.load(AtomicOrdering::Relaxed),
            self.reduction_steps.load(AtomicOrdering::Relaxed),
        )
    }
}

/// Per-call statistics kept on the finished basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pair_reductions: u64,
    pub reduction_steps: u64,
    pub basis_size: usize,
}

type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

fn sort_terms_desc<F: Field>(order: &TermOrder, p: &Polynomial<F>) -> Terms<F> {
    let mut t: Terms<F> = p.terms().to_vec();
    t.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

/// a - c·m·b, both inputs sorted descending under `order`.
fn sub_scaled<F: Field>(
    field: &F,
    order: &TermOrder,
    a: &Terms<F>,
    c: &F::Elem,
    m: &Monomial,
    b: &Terms<F>,
) -> Terms<F> {
    let mut out: Terms<F> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, field.neg(&field.mul(c, &b[j].1))));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.sub(&a[i].1, &field.mul(c, &b[j].1));
                if !field.is_zero(&v) {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(m), field.neg(&field.mul(c, &b[j].1))));
        j += 1;
    }
    out
}

/// Full remainder of `f` modulo `basis` under `order`. Every term of the
/// result is divisible by no leading term of the basis.
fn reduce_full<F: Field>(
    field: &F,
    order: &TermOrder,
    mut work: Terms<F>,
    basis: &[Terms<F>],
    steps: &mut u64,
) -> Terms<F> {
    let mut rem: Terms<F> = Vec::new();
    'outer: while let Some((lm, lc)) = work.first().cloned() {
        for g in basis {
            let (gm, gc) = &g[0];
            if let Some(q) = gm.div_into(&lm) {
                let c = field.div(&lc, gc);
                work = sub_scaled(field, order, &work, &c, &q, g);
                *steps += 1;
                continue 'outer;
            }
        }
        rem.push(work.remove(0));
    }
    rem
}

fn spoly<F: Field>(field: &F, order: &TermOrder, f: &Terms<F>, g: &Terms<F>) -> Terms<F> {
    let (fm, fc) = &f[0];
    let (gm, gc) = &g[0];
    let l = fm.lcm(gm);
    let uf = fm.div_into(&l).unwrap();
    let ug = gm.div_into(&l).unwrap();
    // (1/fc)·uf·f − (1/gc)·ug·g
    let fcinv = field.inv(fc);
    let sf: Terms<F> = f
        .iter()
        .map(|(m, c)| (m.mul(&uf), field.mul(c, &fcinv)))
        .collect();
    sub_scaled(field, order, &sf, &field.inv(gc), &ug, g)
}

struct PairEntry {
    deg: u64,
    key: SmallVec<[i64; 12]>,
    i: u32,
    j: u32,
}

impl PartialEq for PairEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for PairEntry {}
impl PartialOrd for PairEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PairEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.key.cmp(&other.key))
            .then_with(|| self.i.cmp(&other.i))
            .then_with(|| self.j.cmp(&other.j))
    }
}

/// A reduced Gröbner basis with respect to a fixed term order.
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    order: TermOrder,
    elems: Vec<Terms<F>>,
    stats: GbStats,
}

impl<F: Field> GroebnerBasis<F> {
    /// Run Buchberger to completion and interreduce.
    pub fn compute(
        ring: &Arc<Ring<F>>,
        gens: &[Polynomial<F>],
        order: TermOrder,
        budget: Budget,
        counters: &GbCounters,
    ) -> Result<Self> {
        counters.gb_calls.fetch_add(1, AtomicOrdering::Relaxed);
        let field = ring.field().clone();
        let mut basis: Vec<Terms<F>> = Vec::new();
        let mut seed: Vec<Terms<F>> = gens
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| sort_terms_desc(&order, p))
            .collect();
        // deterministic start: ascending leading keys, short polynomials first
        seed.sort_by(|a, b| {
            order
                .sort_key(&a[0].0)
                .cmp(&order.sort_key(&b[0].0))
                .then_with(|| a.len().cmp(&b.len()))
        });
        seed.dedup_by(|a, b| a == b);

        let mut pairs: BinaryHeap<std::cmp::Reverse<PairEntry>> = BinaryHeap::new();
        let mut pending: HashSet<(u32, u32)> = HashSet::new();
        let mut steps: u64 = 0;
        let mut pair_reductions: u64 = 0;

        let push_pairs = |basis: &[Terms<F>],
                              pairs: &mut BinaryHeap<std::cmp::Reverse<PairEntry>>,
                              pending: &mut HashSet<(u32, u32)>,
                              new_idx: usize| {
            for i in 0..new_idx {
                let l = basis[i][0].0.lcm(&basis[new_idx][0].0);
                pairs.push(std::cmp::Reverse(PairEntry {
                    deg: l.total_degree(),
                    key: order.sort_key(&l),
                    i: i as u32,
                    j: new_idx as u32,
                }));
                pending.insert((i as u32, new_idx as u32));
            }
        };

        for p in seed {
            basis.push(p);
            let n = basis.len() - 1;
            push_pairs(&basis, &mut pairs, &mut pending, n);
        }

        while let Some(std::cmp::Reverse(entry)) = pairs.pop() {
            let (i, j) = (entry.i as usize, entry.j as usize);
            pending.remove(&(entry.i, entry.j));
            let (fm, gm) = (&basis[i][0].0, &basis[j][0].0);
            // product criterion
            if fm.coprime(gm) {
                continue;
            }
            // chain criterion
            let l = fm.lcm(gm);
            let mut skip = false;
            for (k, h) in basis.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                if h[0].0.divides(&l) {
                    let ki = (k.min(i) as u32, k.max(i) as u32);
                    let kj = (k.min(j) as u32, k.max(j) as u32);
                    if !pending.contains(&ki) && !pending.contains(&kj) {
                        skip = true;
                        break;
                    }
                }
            }
            if skip {
                continue;
            }

            pair_reductions += 1;
            if pair_reductions > budget.max_pair_reductions {
                counters
                    .pair_reductions
                    .fetch_add(pair_reductions, AtomicOrdering::Relaxed);
                counters
                    .reduction_steps
                    .fetch_add(steps, AtomicOrdering::Relaxed);
                return Err(Error::ResourceLimit(format!(
                    "Gröbner budget exhausted after {} S-pair reductions (basis size {})",
                    pair_reductions,
                    basis.len()
                )));
            }
            let s = spoly(&field, &order, &basis[i], &basis[j]);
            let r = reduce_full(&field, &order, s, &basis, &mut steps);
            if !r.is_empty() {
                let lc = r[0].1.clone();
                let inv = field.inv(&lc);
                let monic: Terms<F> = r
                    .into_iter()
                    .map(|(m, c)| (m, field.mul(&c, &inv)))
                    .collect();
                basis.push(monic);
                let n = basis.len() - 1;
                push_pairs(&basis, &mut pairs, &mut pending, n);
            }
        }

        counters
            .pair_reductions
            .fetch_add(pair_reductions, AtomicOrdering::Relaxed);

        // minimal basis: no leading term divides another
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            if !keep[i] {
                continue;
            }
            for j in 0..basis.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let (mi, mj) = (&basis[i][0].0, &basis[j][0].0);
                if mj.divides(mi) && (mi != mj || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let minimal: Vec<Terms<F>> = basis
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect();

        // tail-reduce each element against the others
        let mut reduced: Vec<Terms<F>> = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Terms<F>> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, p)| (j != i).then(|| p.clone()))
                .collect();
            let r = reduce_full(&field, &order, minimal[i].clone(), &others, &mut steps);
            debug_assert!(!r.is_empty());
            let inv = field.inv(&r[0].1);
            reduced.push(r.into_iter().map(|(m, c)| (m, field.mul(&c, &inv))).collect());
        }
        reduced.sort_by(|a, b| order.sort_key(&a[0].0).cmp(&order.sort_key(&b[0].0)));

        counters
            .reduction_steps
            .fetch_add(steps, AtomicOrdering::Relaxed);

        let stats = GbStats {
            pair_reductions,
            reduction_steps: steps,
            basis_size: reduced.len(),
        };
        Ok(GroebnerBasis {
            ring: Arc::clone(ring),
            order,
            elems: reduced,
            stats,
        })
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    /// Basis elements as canonical polynomials, in deterministic order.
    pub fn elements(&self) -> Vec<Polynomial<F>> {
        self.elems
            .iter()
            .map(|t| Polynomial::from_terms(&self.ring, t.clone()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|t| t[0].0.clone()).collect()
    }

    /// Remainder of `f` on full division by the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let field = self.ring.field().clone();
        let work = sort_terms_desc(&self.order, f);
        let mut steps = 0u64;
        let r = reduce_full(&field, &self.order, work, &self.elems, &mut steps);
        Polynomial::from_terms(&self.ring, r)
    }

    pub fn is_member(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger criterion on the finished basis: every S-polynomial
    /// reduces to zero. Used by the property suites.
    pub fn spoly_criterion_holds(&self) -> bool {
        let field = self.ring.field().clone();
        let mut steps = 0u64;
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                let s = spoly(&field, &self.order, &self.elems[i], &self.elems[j]);
                if !reduce_full(&field, &self.order, s, &self.elems, &mut steps).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact division of `num` by `den` (single divisor); errors when the
/// remainder is nonzero.
pub fn div_exact<F: Field>(num: &Polynomial<F>, den: &Polynomial<F>) -> Result<Polynomial<F>> {
    num.same_ring(den)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let order = TermOrder::DegRevLex;
    let ring = num.ring().clone();
    let field = ring.field().clone();
    let d = sort_terms_desc(&order, den);
    let mut work = sort_terms_desc(&order, num);
    let mut quot: Terms<F> = Vec::new();
    while let Some((lm, lc)) = work.first().cloned() {
        match d[0].0.div_into(&lm) {
            Some(q) => {
                let c = field.div(&lc, &d[0].1);
                work = sub_scaled(&field, &order, &work, &c, &q, &d);
                quot.push((q, c));
            }
            None => {
                return Err(Error::InexactDivision(format!(
                    "{} is not divisible by {}",
                    num, den
                )))
            }
        }
    }
    Ok(Polynomial::from_terms(&ring, quot))
}

/// Mutual reduction of a generating set: reduces each generator against the
/// others and drops those that reduce to zero. Preserves the generated ideal.
pub fn interreduce<F: Field>(polys: Vec<Polynomial<F>>, order: &TermOrder) -> Vec<Polynomial<F>> {
    if polys.is_empty() {
        return polys;
    }
    let ring = polys[0].ring().clone();
    let field = ring.field().clone();
    let mut set: Vec<Terms<F>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| sort_terms_desc(order, p))
        .collect();
    let mut steps = 0u64;
    for _ in 0..100 {
        let mut changed = false;
        let mut i = 0;
        while i < set.len() {
            let others: Vec<Terms<F>> = set
                .iter()
                .enumerate()
                .filter_map(|(j, p)| (j != i).then(|| p.clone()))
                .collect();
            if others.is_empty() {
                break;
            }
            let r = reduce_full(&field, order, set[i].clone(), &others, &mut steps);
            if r.is_empty() {
                set.remove(i);
                changed = true;
            } else {
                if r != set[i] {
                    changed = true;
                    set[i] = r;
                }
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    set.sort_by(|a, b| order.sort_key(&a[0].0).cmp(&order.sort_key(&b[0].0)));
    set.into_iter()
        .map(|t| Polynomial::from_terms(&ring, t))
        .collect()
}
