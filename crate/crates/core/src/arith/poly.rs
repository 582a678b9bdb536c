//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept in a canonical form (strictly descending degrevlex, no zero
//! coefficients), so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::field::Field;
use crate::arith::monomial::Monomial;
use crate::arith::order::{TermOrder, WeightGrading};
use crate::error::{Error, Result};

/// A polynomial ring descriptor: variables, coefficient field, and an
/// optional weight grading used for quasi-homogeneous bookkeeping.
#[derive(Clone, Debug)]
pub struct Ring<F: Field> {
    field: F,
    vars: Vec<String>,
    weights: Option<WeightGrading>,
}

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.weights == other.weights
    }
}
impl<F: Field> Eq for Ring<F> {}

impl<F: Field> Ring<F> {
    pub fn new(field: F, vars: Vec<String>) -> Result<Arc<Self>> {
        Self::build(field, vars, None)
    }

    pub fn with_weights(field: F, vars: Vec<String>, weights: WeightGrading) -> Result<Arc<Self>> {
        if weights.len() != vars.len() {
            return Err(Error::VariableCountMismatch {
                expected: vars.len(),
                got: weights.len(),
            });
        }
        Self::build(field, vars, Some(weights))
    }

    fn build(field: F, vars: Vec<String>, weights: Option<WeightGrading>) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidInput("ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::InvalidInput(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Arc::new(Ring { field, vars, weights }))
    }

    /// k[x,y,z] without weights.
    pub fn xyz(field: F) -> Arc<Self> {
        Self::new(field, vec!["x".into(), "y".into(), "z".into()]).unwrap()
    }

    /// k[x,y,z] graded by deg x = a, deg y = b, deg z = c.
    pub fn xyz_weighted(field: F, a: u64, b: u64, c: u64) -> Result<Arc<Self>> {
        Self::with_weights(
            field,
            vec!["x".into(), "y".into(), "z".into()],
            WeightGrading::new(vec![a, b, c])?,
        )
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weights(&self) -> Option<&WeightGrading> {
        self.weights.as_ref()
    }

    pub fn descriptor(&self) -> RingDescriptor {
        RingDescriptor {
            variables: self.vars.clone(),
            characteristic: self.field.characteristic(),
            weights: self.weights.as_ref().map(|w| w.weights().to_vec()),
        }
    }

    /// New ring with `extra` fresh variables prepended (used for elimination).
    pub fn extended_front(self: &Arc<Self>, extra: &[&str]) -> Result<Arc<Ring<F>>> {
        let mut vars: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Ring::new(self.field.clone(), vars)
    }
}

/// Serializable ring description used by ideal files and manifests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub variables: Vec<String>,
    pub characteristic: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
}

impl RingDescriptor {
    pub fn into_ring<F: Field>(&self, field: F) -> Result<Arc<Ring<F>>> {
        if field.characteristic() != self.characteristic {
            return Err(Error::InvalidInput(format!(
                "ring descriptor has characteristic {}, active field has {}",
                self.characteristic,
                field.characteristic()
            )));
        }
        match &self.weights {
            Some(w) => Ring::with_weights(
                field,
                self.variables.clone(),
                WeightGrading::new(w.clone())?,
            ),
            None => Ring::new(field, self.variables.clone()),
        }
    }
}

/// Whether a polynomial is homogeneous for a given grading.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    Homogeneous(u64),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u64> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            Homogeneity::Inhomogeneous => None,
        }
    }
}

#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}
impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    TermOrder::DegRevLex.cmp(a, b)
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn var(ring: &Arc<Ring<F>>, i: usize) -> Self {
        Self::var_pow(ring, i, 1)
    }

    pub fn var_pow(ring: &Arc<Ring<F>>, i: usize, e: u32) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::var_pow(ring.nvars(), i, e), ring.field.one())],
        }
    }

    pub fn from_monomial(ring: &Arc<Ring<F>>, m: Monomial, c: F::Elem) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    pub fn from_terms(ring: &Arc<Ring<F>>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        }
        terms.sort_unstable_by(|a, b| canonical_cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = ring.field.add(lc, &c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !ring.field.is_zero(c));
        Polynomial {
            ring: Arc::clone(ring),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending degrevlex) order.
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                format!("{:?}", self.ring.vars),
                format!("{:?}", other.ring.vars),
            ))
        }
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &F::Elem)> {
        match order {
            TermOrder::DegRevLex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.field.neg(c)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other).expect("ring mismatch in add");
        let field = &self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match canonical_cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other).expect("ring mismatch in mul");
        let field = &self.ring.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_terms(&self.ring, acc.into_iter().collect())
    }

    pub fn mul_scalar(&self, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Divide leading coefficient out so the canonical leading term is 1.
    pub fn monic(&self, order: &TermOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                if self.ring.field.is_one(lc) {
                    self.clone()
                } else {
                    let inv = self.ring.field.inv(lc);
                    self.mul_scalar(&inv)
                }
            }
        }
    }

    /// Exact division by a single term c·m. Every term of `self` must be
    /// divisible by m; otherwise `NotDivisible` is returned.
    pub fn divide_by_term(&self, m: &Monomial, c: &F::Elem) -> Result<Self> {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Err(Error::DivisionByZero);
        }
        let cinv = field.inv(c);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (tm, tc) in &self.terms {
            match m.div_into(tm) {
                Some(q) => terms.push((q, field.mul(tc, &cinv))),
                None => {
                    return Err(Error::NotDivisible {
                        term: format_monomial(&self.ring, tm),
                        divisor: format_monomial(&self.ring, m),
                    })
                }
            }
        }
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    /// Common weighted degree of all terms, or the inhomogeneity marker.
    pub fn weighted_degree(&self, w: &WeightGrading) -> Result<Homogeneity> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if w.len() != self.ring.nvars() {
            return Err(Error::VariableCountMismatch {
                expected: self.ring.nvars(),
                got: w.len(),
            });
        }
        let d0 = self.terms[0].0.weighted_degree(w);
        for (m, _) in &self.terms[1..] {
            if m.weighted_degree(w) != d0 {
                return Ok(Homogeneity::Inhomogeneous);
            }
        }
        Ok(Homogeneity::Homogeneous(d0))
    }

    /// Weighted degree under the ring's own grading.
    pub fn ring_weighted_degree(&self) -> Result<Homogeneity> {
        let w = self
            .ring
            .weights()
            .cloned()
            .unwrap_or_else(|| WeightGrading::standard(self.ring.nvars()));
        self.weighted_degree(&w)
    }

    /// Image under the ring map sending variable i to `images[i]`.
    pub fn substitute<G: Field>(
        &self,
        target: &Arc<Ring<G>>,
        map_coeff: &dyn Fn(&F::Elem) -> G::Elem,
        images: &[Polynomial<G>],
    ) -> Result<Polynomial<G>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::VariableCountMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, map_coeff(c));
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Same-field substitution.
    pub fn substitute_same(&self, target: &Arc<Ring<F>>, images: &[Polynomial<F>]) -> Result<Self> {
        self.substitute(target, &|c: &F::Elem| c.clone(), images)
    }

    /// Move into a ring with the same field where variable `i` of `self`
    /// becomes variable `var_map[i]` of the target. Slots not mentioned get
    /// exponent zero.
    pub fn map_vars(&self, target: &Arc<Ring<F>>, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Project to a smaller ring, keeping the listed variable slots; errors
    /// if any discarded variable actually occurs.
    pub fn project(&self, target: &Arc<Ring<F>>, keep: &[usize]) -> Result<Self> {
        assert_eq!(keep.len(), target.nvars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut used: u64 = m.exps().iter().map(|&e| e as u64).sum();
            let mut exps = vec![0u32; keep.len()];
            for (slot, &i) in keep.iter().enumerate() {
                exps[slot] = m.exp(i);
                used -= m.exp(i) as u64;
            }
            if used != 0 {
                return Err(Error::InvalidInput(format!(
                    "cannot project {}: eliminated variable still occurs",
                    self
                )));
            }
            terms.push((Monomial::new(exps), c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Evaluate at a point (all variables substituted by field elements).
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::VariableCountMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let field = &self.ring.field;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = field.mul(&t, &point[i]);
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }
}

/// The checked arithmetic entry point: add, sub or mul with ring validation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

pub fn arithmetic<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    op: BinOp,
) -> Result<Polynomial<F>> {
    f.same_ring(g)?;
    Ok(match op {
        BinOp::Add => f.add(g),
        BinOp::Sub => f.sub(g),
        BinOp::Mul => f.mul(g),
    })
}

fn format_monomial<F: Field>(ring: &Ring<F>, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars[i].clone()),
            _ => parts.push(format!("{}^{}", ring.vars[i], e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let s = field.format_elem(c);
            let (neg, abs) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{}", format_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", abs, format_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

impl<'a, F: Field> std::ops::Add for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        Polynomial::add(self, rhs)
    }
}
impl<'a, F: Field> std::ops::Sub for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        Polynomial::sub(self, rhs)
    }
}
impl<'a, F: Field> std::ops::Mul for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        Polynomial::mul(self, rhs)
    }
}
impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}
