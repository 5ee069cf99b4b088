//! Multivariate polynomials over `F_p` with canonically sorted terms.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::order::ScalarOrder;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Reverse;

/// A polynomial over `F_p`. Terms are kept sorted in descending degrevlex
/// with no zero coefficients, so equal polynomials compare equal
/// structurally and printing is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    p: u64,
    nvars: usize,
    terms: Vec<(Monomial, u64)>,
}

/// Binary operations accepted by [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic entry point: verifies the operands live over the same
/// field and variable set before dispatching.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    a.compatible(b)?;
    Ok(match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    })
}

impl Polynomial {
    pub fn zero(p: u64, nvars: usize) -> Self {
        Polynomial { p, nvars, terms: Vec::new() }
    }

    pub fn one(p: u64, nvars: usize) -> Self {
        Polynomial::constant(p, nvars, 1)
    }

    pub fn constant(p: u64, nvars: usize, c: u64) -> Self {
        let c = c % p;
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((Monomial::one(nvars), c));
        }
        Polynomial { p, nvars, terms }
    }

    pub fn variable(p: u64, nvars: usize, index: usize) -> Self {
        Polynomial {
            p,
            nvars,
            terms: alloc::vec![(Monomial::var(nvars, index), 1)],
        }
    }

    /// Build from unsorted term data; combines duplicates, drops zeros.
    pub fn from_terms(p: u64, nvars: usize, raw: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let field = PrimeField::new(p);
        let mut acc: BTreeMap<Reverse<Monomial>, u64> = BTreeMap::new();
        for (m, c) in raw {
            debug_assert_eq!(m.nvars(), nvars);
            let c = c % p;
            if c == 0 {
                continue;
            }
            let slot = acc.entry(Reverse(m)).or_insert(0);
            *slot = field.add(*slot, c);
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(Reverse(m), c)| (m, c))
            .collect();
        Polynomial { p, nvars, terms }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending degrevlex.
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn compatible(&self, other: &Polynomial) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch { left: self.p, right: other.p });
        }
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    /// Total degree of a homogeneous polynomial; `None` for 0 or mixed terms.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.first()?.0.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == first)
            .then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Coefficient of the degree-0 monomial.
    pub fn constant_term(&self) -> u64 {
        self.terms
            .last()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.compatible(other).is_ok());
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.compatible(other).is_ok());
        self.merge(other, true)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    core::cmp::Ordering::Greater => Some(true),
                    core::cmp::Ordering::Less => Some(false),
                    core::cmp::Ordering::Equal => None,
                },
                (Some(_), None) => Some(true),
                (None, Some(_)) => Some(false),
                (None, None) => unreachable!(),
            };
            match take_left {
                Some(true) => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Some(false) => {
                    let (m, c) = other.terms[j].clone();
                    out.push((m, if negate { field.neg(c) } else { c }));
                    j += 1;
                }
                None => {
                    let (m, ca) = self.terms[i].clone();
                    let cb = other.terms[j].1;
                    let c = if negate { field.sub(ca, cb) } else { field.add(ca, cb) };
                    if c != 0 {
                        out.push((m, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { p: self.p, nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = c % self.p;
        if c == 0 {
            return Polynomial::zero(self.p, self.nvars);
        }
        let field = self.field();
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), field.mul(*k, c))).collect(),
        }
    }

    /// Multiply by a single term `c * m`. Order is preserved by
    /// multiplicativity, so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let c = c % self.p;
        if c == 0 {
            return Polynomial::zero(self.p, self.nvars);
        }
        let field = self.field();
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), field.mul(*k, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.compatible(other).is_ok());
        Polynomial::from_terms(
            self.p,
            self.nvars,
            self.terms.iter().flat_map(|(ma, ca)| {
                let field = self.field();
                other
                    .terms
                    .iter()
                    .map(move |(mb, cb)| (ma.mul(mb), field.mul(*ca, *cb)))
            }),
        )
    }

    /// Leading term under `order`; the stored order makes degrevlex O(1).
    pub fn lead_term(&self, order: ScalarOrder) -> Option<(&Monomial, u64)> {
        match order {
            ScalarOrder::DegRevLex => self.terms.first().map(|(m, c)| (m, *c)),
            _ => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| order.cmp(a, b))
                .map(|(m, c)| (m, *c)),
        }
    }

    /// Restrict to the terms of exactly the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .cloned()
                .collect(),
        }
    }
}
