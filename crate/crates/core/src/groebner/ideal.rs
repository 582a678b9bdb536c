//! Ideals with cached Gröbner bases and the ideal-theoretic toolkit:
//! membership, sum, product, power, intersection, quotient, saturation,
//! elimination, equality.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::arith::field::Field;
use crate::arith::order::TermOrder;
use crate::arith::poly::{Polynomial, Ring, RingDescriptor};
use crate::error::{Error, Result};
use crate::groebner::engine::{self, Budget, GbCounters, GroebnerBasis};

/// Shared configuration for Gröbner-backed operations.
#[derive(Clone)]
pub struct GbConfig {
    /// Order used for containment/membership normal forms.
    pub order: TermOrder,
    pub budget: Budget,
    /// Iteration bound for saturation.
    pub max_sat_rounds: usize,
    pub counters: Arc<GbCounters>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            order: TermOrder::DegRevLex,
            budget: Budget::default(),
            max_sat_rounds: 50,
            counters: Arc::new(GbCounters::default()),
        }
    }
}

impl GbConfig {
    pub fn stretch() -> Self {
        GbConfig {
            budget: Budget::stretch(),
            ..Default::default()
        }
    }

    pub fn with_order(order: TermOrder) -> Self {
        GbConfig {
            order,
            ..Default::default()
        }
    }
}

/// An ideal given by generators, with a per-order cache of reduced bases.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Arc<Vec<Polynomial<F>>>,
    cache: Arc<Mutex<HashMap<TermOrder, Arc<GroebnerBasis<F>>>>>,
}

impl<F: Field> PartialEq for Ideal<F> {
    /// Structural equality of the generator lists (not ideal equality;
    /// see [`Ideal::equal`]).
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.gens == other.gens
    }
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Self {
        let mut gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(**g.ring() == **ring, "generator from a different ring");
        }
        gens.sort_by(|a, b| {
            let (la, lb) = (
                a.leading_term(&TermOrder::DegRevLex).unwrap().0,
                b.leading_term(&TermOrder::DegRevLex).unwrap().0,
            );
            TermOrder::DegRevLex
                .cmp(la, lb)
                .then_with(|| a.num_terms().cmp(&b.num_terms()))
        });
        gens.dedup();
        Ideal {
            ring: Arc::clone(ring),
            gens: Arc::new(gens),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Self::new(ring, Vec::new())
    }

    /// The irrelevant maximal ideal (x_1, ..., x_n).
    pub fn maximal(ring: &Arc<Ring<F>>) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                format!("{:?}", self.ring.vars()),
                format!("{:?}", other.ring.vars()),
            ))
        }
    }

    /// Reduced Gröbner basis under `order`, cached per order.
    pub fn groebner_basis(&self, order: &TermOrder, cfg: &GbConfig) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(Arc::clone(gb));
        }
        let gb = Arc::new(GroebnerBasis::compute(
            &self.ring,
            &self.gens,
            order.clone(),
            cfg.budget,
            &cfg.counters,
        )?);
        let mut cache = self.cache.lock().unwrap();
        Ok(Arc::clone(cache.entry(order.clone()).or_insert(gb)))
    }

    /// Basis under the configured containment order.
    pub fn gb(&self, cfg: &GbConfig) -> Result<Arc<GroebnerBasis<F>>> {
        self.groebner_basis(&cfg.order, cfg)
    }

    pub fn normal_form(&self, f: &Polynomial<F>, cfg: &GbConfig) -> Result<Polynomial<F>> {
        Ok(self.gb(cfg)?.normal_form(f))
    }

    pub fn contains_poly(&self, f: &Polynomial<F>, cfg: &GbConfig) -> Result<bool> {
        Ok(self.normal_form(f, cfg)?.is_zero())
    }

    /// None when every generator of `other` lies in `self`; otherwise the
    /// first failing generator.
    pub fn containment_witness(
        &self,
        other: &Self,
        cfg: &GbConfig,
    ) -> Result<Option<Polynomial<F>>> {
        self.same_ring(other)?;
        let gb = self.gb(cfg)?;
        for g in other.generators() {
            if !gb.normal_form(g).is_zero() {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    pub fn contains_ideal(&self, other: &Self, cfg: &GbConfig) -> Result<bool> {
        Ok(self.containment_witness(other, cfg)?.is_none())
    }

    /// Ideal equality via reduced bases under one fixed order.
    pub fn equal(&self, other: &Self, cfg: &GbConfig) -> Result<bool> {
        self.same_ring(other)?;
        let a = self.groebner_basis(&TermOrder::DegRevLex, cfg)?;
        let b = other.groebner_basis(&TermOrder::DegRevLex, cfg)?;
        Ok(a.elements() == b.elements())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut gens = self.gens.as_ref().clone();
        gens.extend(other.generators().iter().cloned());
        Self::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in self.gens.iter() {
            for b in other.generators() {
                gens.push(a.mul(b));
            }
        }
        Self::new(&self.ring, gens)
    }

    /// I^n for n >= 1, by repeated product with interreduction of the
    /// generator list between steps.
    pub fn power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.product(self);
            let reduced = engine::interreduce(out.gens.as_ref().clone(), &TermOrder::DegRevLex);
            out = Self::new(&self.ring, reduced);
        }
        Ok(out)
    }

    /// I ∩ J via an auxiliary variable: eliminate t from t·I + (1−t)·J.
    pub fn intersect(&self, other: &Self, cfg: &GbConfig) -> Result<Self> {
        self.same_ring(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Self::zero(&self.ring));
        }
        let tname = fresh_var_name(&self.ring, "t");
        let ext = self.ring.extended_front(&[&tname])?;
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for g in self.gens.iter() {
            gens.push(t.mul(&g.map_vars(&ext, &shift)));
        }
        for g in other.generators() {
            gens.push(one_minus_t.mul(&g.map_vars(&ext, &shift)));
        }
        let ext_ideal = Ideal::new(&ext, gens);
        ext_ideal.eliminate_into(&[0], &self.ring, cfg)
    }

    /// (I : f) = {g : g·f ∈ I}, via I ∩ (f) divided exactly by f.
    pub fn quotient_poly(&self, f: &Polynomial<F>, cfg: &GbConfig) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()]);
        let inter = self.intersect(&principal, cfg)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for g in inter.generators() {
            gens.push(engine::div_exact(g, f)?);
        }
        Ok(Self::new(&self.ring, gens))
    }

    /// (I : J) as the intersection of (I : g) over the generators of J.
    pub fn quotient_ideal(&self, other: &Self, cfg: &GbConfig) -> Result<Self> {
        self.same_ring(other)?;
        if other.is_zero_ideal() {
            return Err(Error::DivisionByZero);
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in other.generators() {
            let q = self.quotient_poly(g, cfg)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q, cfg)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// (I : J^∞) by iterating the quotient until it stabilizes.
    pub fn saturate(&self, other: &Self, cfg: &GbConfig) -> Result<Self> {
        self.same_ring(other)?;
        if other.is_zero_ideal() {
            return Err(Error::DivisionByZero);
        }
        let mut cur = self.clone();
        for _ in 0..cfg.max_sat_rounds {
            let next = cur.quotient_ideal(other, cfg)?;
            if next.equal(&cur, cfg)? {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::SaturationDiverged(cfg.max_sat_rounds))
    }

    /// I ∩ k[remaining variables], dropping the listed variable slots.
    /// The result lives in a fresh ring on the surviving variables (original
    /// weights restricted when present).
    pub fn eliminate(&self, drop: &[usize], cfg: &GbConfig) -> Result<Self> {
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let keep: Vec<usize> = (0..self.ring.nvars()).filter(|i| !drop.contains(i)).collect();
        let vars: Vec<String> = keep.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let target = match self.ring.weights() {
            Some(w) => {
                let kept: Vec<u64> = keep.iter().map(|&i| w.weights()[i]).collect();
                Ring::with_weights(
                    self.ring.field().clone(),
                    vars,
                    crate::arith::order::WeightGrading::new(kept)?,
                )?
            }
            None => Ring::new(self.ring.field().clone(), vars)?,
        };
        self.eliminate_into(drop, &target, cfg)
    }

    /// Elimination with an explicit target ring for the surviving variables.
    pub fn eliminate_into(
        &self,
        drop: &[usize],
        target: &Arc<Ring<F>>,
        cfg: &GbConfig,
    ) -> Result<Self> {
        let n = self.ring.nvars();
        for &i in drop {
            assert!(i < n, "variable index out of range");
        }
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        assert_eq!(keep.len(), target.nvars(), "target ring arity mismatch");

        // permute so dropped variables form the front block
        let mut order_new_to_old: Vec<usize> = drop.to_vec();
        order_new_to_old.extend(keep.iter().copied());
        let mut var_map = vec![0usize; n];
        for (new, &old) in order_new_to_old.iter().enumerate() {
            var_map[old] = new;
        }
        let perm_vars: Vec<String> = order_new_to_old
            .iter()
            .map(|&i| self.ring.vars()[i].clone())
            .collect();
        let perm_ring = Ring::new(self.ring.field().clone(), perm_vars)?;
        let gens: Vec<Polynomial<F>> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&perm_ring, &var_map))
            .collect();
        let perm_ideal = Ideal::new(&perm_ring, gens);
        let order = TermOrder::Elimination { front: drop.len() };
        let gb = perm_ideal.groebner_basis(&order, cfg)?;

        let front = drop.len();
        let keep_slots: Vec<usize> = (front..n).collect();
        let mut out = Vec::new();
        for e in gb.elements() {
            let in_subring = e
                .terms()
                .iter()
                .all(|(m, _)| m.exps()[..front].iter().all(|&x| x == 0));
            if in_subring {
                out.push(e.project(target, &keep_slots)?);
            }
        }
        Ok(Ideal::new(target, out))
    }

    /// A minimal generating subset: drops any generator that lies in the
    /// ideal of the others. For quasi-homogeneous ideals the count is the
    /// minimal number of generators.
    pub fn minimal_generators(&self, cfg: &GbConfig) -> Result<Vec<Polynomial<F>>> {
        let mut gens = self.gens.as_ref().clone();
        gens.sort_by_key(|g| std::cmp::Reverse(g.total_degree().unwrap_or(0)));
        loop {
            let mut removed = false;
            let mut i = 0;
            while i < gens.len() {
                if gens.len() == 1 {
                    break;
                }
                let rest: Vec<Polynomial<F>> = gens
                    .iter()
                    .enumerate()
                    .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                    .collect();
                let rest_ideal = Ideal::new(&self.ring, rest);
                if rest_ideal.contains_poly(&gens[i], cfg)? {
                    gens.remove(i);
                    removed = true;
                } else {
                    i += 1;
                }
            }
            if !removed {
                break;
            }
        }
        gens.reverse();
        Ok(gens)
    }

    pub fn descriptor(&self) -> IdealData {
        IdealData {
            ring: self.ring.descriptor(),
            generators: self.gens.iter().map(|g| g.to_string()).collect(),
        }
    }
}

fn fresh_var_name<F: Field>(ring: &Ring<F>, base: &str) -> String {
    if ring.var_index(base).is_none() {
        return base.to_string();
    }
    for i in 0.. {
        let name = format!("{base}{i}");
        if ring.var_index(&name).is_none() {
            return name;
        }
    }
    unreachable!()
}

/// Serialized form of an ideal: ring descriptor plus polynomial strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealData {
    pub ring: RingDescriptor,
    pub generators: Vec<String>,
}

impl IdealData {
    pub fn into_ideal<F: Field>(&self, field: F) -> Result<Ideal<F>> {
        let ring = self.ring.into_ring(field)?;
        let gens = self
            .generators
            .iter()
            .map(|s| Polynomial::parse(&ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&ring, gens))
    }
}
