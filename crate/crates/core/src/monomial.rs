//! Monomials as dense exponent vectors with a cached total degree.

use alloc::vec;
use alloc::vec::Vec;

/// A monomial in a fixed set of variables. `Ord` is the default
/// degree-reverse-lexicographic order; other orders go through
/// [`crate::order::ScalarOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0u32; nvars];
        exps[index] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// True when the monomial is a pure power of a single variable
    /// (or the constant 1).
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut hit = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if hit.is_some() {
                    return None;
                }
                hit = Some(i);
            }
        }
        hit
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Monomial { exps, deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Default comparison is degrevlex so sorted term lists are canonical.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        crate::order::ScalarOrder::DegRevLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_and_quotient() {
        let m1 = Monomial::new(vec![2, 0, 1]);
        let m2 = Monomial::new(vec![1, 3, 0]);
        let l = m1.lcm(&m2);
        assert_eq!(l.exponents(), &[2, 3, 1]);
        assert_eq!(m1.quotient_into(&l).exponents(), &[0, 3, 0]);
        assert_eq!(m2.quotient_into(&l).exponents(), &[1, 0, 1]);
    }

    #[test]
    fn pure_powers() {
        assert_eq!(Monomial::new(vec![0, 4]).pure_power_of(), Some(1));
        assert_eq!(Monomial::new(vec![1, 4]).pure_power_of(), None);
        assert_eq!(Monomial::one(2).pure_power_of(), None);
    }
}
