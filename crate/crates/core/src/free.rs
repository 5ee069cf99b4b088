//! Elements of graded free modules `Q(-s_1) + ... + Q(-s_b)`.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, ModuleTerm};
use crate::poly::Polynomial;
use alloc::vec::Vec;

/// The ambient graded free module: one degree shift per position. Position
/// `i` contributes the twist `Q(-shifts[i])`, so a monomial `m` at position
/// `i` has degree `deg(m) + shifts[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambient {
    pub shifts: Vec<i64>,
}

impl Ambient {
    pub fn new(shifts: Vec<i64>) -> Self {
        Ambient { shifts }
    }

    pub fn free_of_rank(rank: usize) -> Self {
        Ambient { shifts: alloc::vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

/// An element of a free module: one polynomial per position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeElement {
    components: Vec<Polynomial>,
}

impl FreeElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        debug_assert!(!components.is_empty());
        debug_assert!(components
            .windows(2)
            .all(|w| w[0].compatible(&w[1]).is_ok()));
        FreeElement { components }
    }

    pub fn zero(p: u64, nvars: usize, rank: usize) -> Self {
        FreeElement {
            components: (0..rank).map(|_| Polynomial::zero(p, nvars)).collect(),
        }
    }

    /// `poly * e_position`.
    pub fn single(p: u64, nvars: usize, rank: usize, position: usize, poly: Polynomial) -> Self {
        let mut el = FreeElement::zero(p, nvars, rank);
        el.components[position] = poly;
        el
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn modulus(&self) -> u64 {
        self.components[0].modulus()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn check_rank(&self, expected: usize) -> Result<()> {
        if self.rank() != expected {
            return Err(Error::AmbientMismatch { expected, found: self.rank() });
        }
        Ok(())
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        debug_assert_eq!(self.rank(), other.rank());
        FreeElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        debug_assert_eq!(self.rank(), other.rank());
        FreeElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> FreeElement {
        FreeElement { components: self.components.iter().map(Polynomial::neg).collect() }
    }

    pub fn scale(&self, c: u64) -> FreeElement {
        FreeElement { components: self.components.iter().map(|q| q.scale(c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: u64) -> FreeElement {
        FreeElement {
            components: self.components.iter().map(|q| q.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, q: &Polynomial) -> FreeElement {
        FreeElement { components: self.components.iter().map(|a| a.mul(q)).collect() }
    }

    /// Leading term under `order`, with its coefficient.
    ///
    /// Within one position any multiplicative scalar order agrees with the
    /// induced module order, so only per-position scalar leads compete.
    pub fn lead_term(&self, order: &ModuleOrder) -> Option<(ModuleTerm, u64)> {
        let scalar = order.scalar();
        let mut best: Option<(ModuleTerm, u64)> = None;
        for (pos, poly) in self.components.iter().enumerate() {
            if let Some((m, c)) = poly.lead_term(scalar) {
                let cand = ModuleTerm { monomial: m.clone(), position: pos };
                match &best {
                    Some((bt, _)) if order.cmp(&cand, bt) != core::cmp::Ordering::Greater => {}
                    _ => best = Some((cand, c)),
                }
            }
        }
        best
    }

    /// Degree of a homogeneous element w.r.t. the ambient shifts; `None` if
    /// zero or inhomogeneous.
    pub fn homogeneous_degree(&self, ambient: &Ambient) -> Option<i64> {
        debug_assert_eq!(self.rank(), ambient.rank());
        let mut degree = None;
        for (pos, poly) in self.components.iter().enumerate() {
            for (m, _) in poly.terms() {
                let d = m.degree() as i64 + ambient.shifts[pos];
                match degree {
                    None => degree = Some(d),
                    Some(seen) if seen != d => return None,
                    _ => {}
                }
            }
        }
        degree
    }

    pub fn is_homogeneous(&self, ambient: &Ambient) -> bool {
        self.is_zero() || self.homogeneous_degree(ambient).is_some()
    }

    /// Concatenate with another block of components.
    pub fn concat(&self, other: &FreeElement) -> FreeElement {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        FreeElement { components }
    }

    /// Restrict to a contiguous range of positions.
    pub fn slice(&self, range: core::ops::Range<usize>) -> FreeElement {
        FreeElement { components: self.components[range].to_vec() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::ScalarOrder;
    use alloc::vec;

    #[test]
    fn homogeneity_respects_shifts() {
        let p = 101;
        // (x, 1) in Q(0) + Q(-1): degrees 1 and 0 + 1 = 1, homogeneous.
        let el = FreeElement::new(vec![
            Polynomial::variable(p, 2, 0),
            Polynomial::one(p, 2),
        ]);
        let ambient = Ambient::new(vec![0, 1]);
        assert_eq!(el.homogeneous_degree(&ambient), Some(1));
        assert!(!el.is_homogeneous(&Ambient::free_of_rank(2)));
    }

    #[test]
    fn lead_term_top_vs_pot() {
        let p = 101;
        let el = FreeElement::new(vec![
            Polynomial::variable(p, 2, 1),                 // y at position 0
            Polynomial::variable(p, 2, 0).mul(&Polynomial::variable(p, 2, 0)), // x^2 at position 1
        ]);
        let top = ModuleOrder::TermOverPosition(ScalarOrder::DegRevLex);
        let pot = ModuleOrder::PositionOverTerm(ScalarOrder::DegRevLex);
        assert_eq!(el.lead_term(&top).unwrap().0.position, 1);
        assert_eq!(el.lead_term(&pot).unwrap().0.position, 0);
    }
}
