//! Exponent vectors. One slot per ambient variable, never trimmed.

use smallvec::SmallVec;

use crate::arith::order::WeightGrading;

type Exps = SmallVec<[u32; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: impl Into<Vec<u32>>) -> Self {
        Monomial {
            exps: Exps::from_vec(exps.into()),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
        }
    }

    /// x_i^e in an `nvars`-variable ring.
    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, w: &WeightGrading) -> u64 {
        debug_assert_eq!(w.len(), self.exps.len());
        self.exps
            .iter()
            .zip(w.weights())
            .map(|(&e, &wt)| e as u64 * wt)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, when exact.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// True when the lcm is the product, i.e. the supports are disjoint.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Rebuild with exponent slots permuted: slot `i` of the result is
    /// exponent `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial {
            exps: perm.iter().map(|&i| self.exps[i]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![1, 3, 0]);
        assert_eq!(a.mul(&b), Monomial::new(vec![3, 3, 1]));
        assert_eq!(a.lcm(&b), Monomial::new(vec![2, 3, 1]));
        assert_eq!(a.gcd(&b), Monomial::new(vec![1, 0, 0]));
        assert!(!a.divides(&b));
        assert!(Monomial::new(vec![1, 0, 0]).divides(&a));
        assert_eq!(
            Monomial::new(vec![1, 0, 0]).div_into(&a),
            Some(Monomial::new(vec![1, 0, 1]))
        );
        assert!(!a.coprime(&b));
        assert!(Monomial::new(vec![0, 1, 0]).coprime(&Monomial::new(vec![1, 0, 1])));
    }

    #[test]
    fn weighted_degree() {
        let w = WeightGrading::new(vec![3, 4, 5]).unwrap();
        assert_eq!(Monomial::new(vec![1, 1, 1]).weighted_degree(&w), 12);
        assert_eq!(Monomial::new(vec![0, 2, 0]).weighted_degree(&w), 8);
    }
}
