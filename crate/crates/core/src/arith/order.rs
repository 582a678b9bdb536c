//! Term orders and weighted gradings.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::arith::monomial::Monomial;
use crate::error::{Error, Result};

/// Positive integer weight per variable, e.g. deg x = a, deg y = b, deg z = c.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct WeightGrading {
    weights: Vec<u64>,
}

impl WeightGrading {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        Ok(WeightGrading { weights })
    }

    pub fn standard(nvars: usize) -> Self {
        WeightGrading {
            weights: vec![1; nvars],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

/// A total order on monomials compatible with multiplication.
///
/// `Elimination { front }` makes the first `front` variables dominate, so a
/// Gröbner basis under it intersects the ideal with the subring in the
/// remaining variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermOrder {
    DegRevLex,
    Lex,
    WeightedDegRevLex(WeightGrading),
    Elimination { front: usize },
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::DegRevLex => degrevlex(a.exps(), b.exps()),
            TermOrder::Lex => lex(a.exps(), b.exps()),
            TermOrder::WeightedDegRevLex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| degrevlex(a.exps(), b.exps())),
            TermOrder::Elimination { front } => {
                let f = *front;
                degrevlex(&a.exps()[..f], &b.exps()[..f])
                    .then_with(|| degrevlex(&a.exps()[f..], &b.exps()[f..]))
            }
        }
    }

    /// A vector whose lexicographic comparison agrees with `cmp`.
    /// Used as a heap key for deterministic pair selection.
    pub fn sort_key(&self, m: &Monomial) -> SmallVec<[i64; 12]> {
        let mut key = SmallVec::new();
        match self {
            TermOrder::DegRevLex => push_degrevlex_key(&mut key, m.exps()),
            TermOrder::Lex => {
                key.extend(m.exps().iter().map(|&e| e as i64));
            }
            TermOrder::WeightedDegRevLex(w) => {
                key.push(m.weighted_degree(w) as i64);
                push_degrevlex_key(&mut key, m.exps());
            }
            TermOrder::Elimination { front } => {
                push_degrevlex_key(&mut key, &m.exps()[..*front]);
                push_degrevlex_key(&mut key, &m.exps()[*front..]);
            }
        }
        key
    }
}

fn push_degrevlex_key(key: &mut SmallVec<[i64; 12]>, exps: &[u32]) {
    key.push(exps.iter().map(|&e| e as i64).sum());
    key.extend(exps.iter().rev().map(|&e| -(e as i64)));
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // last differing exponent: smaller exponent wins
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_order() {
        let o = TermOrder::DegRevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 in k[x,y,z]
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
            assert!(o.sort_key(&w[0]) > o.sort_key(&w[1]));
        }
    }

    #[test]
    fn lex_order() {
        let o = TermOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_dominates() {
        // front block {t} in k[t,x,y]
        let o = TermOrder::Elimination { front: 1 };
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        for a in [m(&[1, 2, 0]), m(&[0, 1, 1])] {
            for b in [m(&[2, 0, 1]), m(&[0, 0, 3])] {
                assert_eq!(
                    o.cmp(&a, &b),
                    o.sort_key(&a).cmp(&o.sort_key(&b)),
                    "key must agree with cmp"
                );
            }
        }
    }

    #[test]
    fn weighted_order() {
        let w = WeightGrading::new(vec![3, 4, 5]).unwrap();
        let o = TermOrder::WeightedDegRevLex(w);
        // wdeg(y^2) = 8 = wdeg(xz): tie broken by degrevlex (y^2 > xz)
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn multiplicative() {
        let orders = [
            TermOrder::DegRevLex,
            TermOrder::Lex,
            TermOrder::Elimination { front: 1 },
        ];
        let a = m(&[2, 1, 0]);
        let b = m(&[0, 3, 1]);
        let c = m(&[1, 1, 1]);
        for o in &orders {
            let ord = o.cmp(&a, &b);
            assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ord);
        }
    }
}
