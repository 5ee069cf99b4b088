//! Monomial orders for polynomials and graded free modules.

use crate::monomial::Monomial;
use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Total orders on scalar monomials. Both are degree-compatible, so every
/// homogeneous computation terminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOrder {
    /// Degree, ties broken reverse-lexicographically: the *last* variable in
    /// which the exponents differ decides, smaller exponent winning.
    DegRevLex,
    /// Degree, ties broken lexicographically from the first variable.
    DegLex,
}

impl ScalarOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        match self {
            ScalarOrder::DegRevLex => {
                for (ea, eb) in a.exponents().iter().zip(b.exponents()).rev() {
                    match ea.cmp(eb) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            ScalarOrder::DegLex => {
                for (ea, eb) in a.exponents().iter().zip(b.exponents()) {
                    match ea.cmp(eb) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ScalarOrder::DegRevLex => "degrevlex",
            ScalarOrder::DegLex => "deglex",
        }
    }
}

/// A term of a free module: a monomial sitting at a component position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleTerm {
    pub monomial: Monomial,
    pub position: usize,
}

/// Extensions of a scalar order to free modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Compare monomials first, break ties by position (lower index wins).
    TermOverPosition(ScalarOrder),
    /// Compare positions first (lower index wins), then monomials. With the
    /// position blocks arranged suitably this is an elimination order, which
    /// is how syzygy and colon computations are run.
    PositionOverTerm(ScalarOrder),
    /// Schreyer order induced by a Groebner basis: position `i` is weighted
    /// by the lead term of the `i`-th basis element; compare the weighted
    /// terms under the ambient order, break ties by position.
    Schreyer {
        ambient: Box<ModuleOrder>,
        /// Lead term of each basis element: (monomial, ambient position).
        weights: Vec<(Monomial, usize)>,
    },
}

impl ModuleOrder {
    pub fn scalar(&self) -> ScalarOrder {
        match self {
            ModuleOrder::TermOverPosition(s) | ModuleOrder::PositionOverTerm(s) => *s,
            ModuleOrder::Schreyer { ambient, .. } => ambient.scalar(),
        }
    }

    pub fn cmp(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition(s) => s
                .cmp(&a.monomial, &b.monomial)
                .then_with(|| b.position.cmp(&a.position)),
            ModuleOrder::PositionOverTerm(s) => b
                .position
                .cmp(&a.position)
                .then_with(|| s.cmp(&a.monomial, &b.monomial)),
            ModuleOrder::Schreyer { ambient, weights } => {
                let (wa, pa) = &weights[a.position];
                let (wb, pb) = &weights[b.position];
                let la = ModuleTerm { monomial: a.monomial.mul(wa), position: *pa };
                let lb = ModuleTerm { monomial: b.monomial.mul(wb), position: *pb };
                ambient
                    .cmp(&la, &lb)
                    .then_with(|| b.position.cmp(&a.position))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModuleOrder::TermOverPosition(ScalarOrder::DegRevLex) => "top-degrevlex",
            ModuleOrder::TermOverPosition(ScalarOrder::DegLex) => "top-deglex",
            ModuleOrder::PositionOverTerm(ScalarOrder::DegRevLex) => "pot-degrevlex",
            ModuleOrder::PositionOverTerm(ScalarOrder::DegLex) => "pot-deglex",
            ModuleOrder::Schreyer { .. } => "schreyer",
        }
    }
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder::TermOverPosition(ScalarOrder::DegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_spec_cases() {
        let o = ScalarOrder::DegRevLex;
        // x^2 vs xy in (x, y)
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        // m vs m
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        // xz vs y^2 in (x, y, z): equal degree, last differing variable is z,
        // where xz has the larger exponent, so xz is smaller.
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn deglex_breaks_ties_from_front() {
        let o = ScalarOrder::DegLex;
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn pot_eliminates_leading_block() {
        let o = ModuleOrder::PositionOverTerm(ScalarOrder::DegRevLex);
        let hi = ModuleTerm { monomial: m(&[0, 0]), position: 0 };
        let lo = ModuleTerm { monomial: m(&[5, 5]), position: 1 };
        assert_eq!(o.cmp(&hi, &lo), Ordering::Greater);
    }

    proptest::proptest! {
        #[test]
        fn multiplicative_and_antisymmetric(
            ea in proptest::collection::vec(0u32..6, 3),
            eb in proptest::collection::vec(0u32..6, 3),
            ec in proptest::collection::vec(0u32..6, 3),
        ) {
            for o in [ScalarOrder::DegRevLex, ScalarOrder::DegLex] {
                let (a, b, c) = (m(&ea), m(&eb), m(&ec));
                let ab = o.cmp(&a, &b);
                proptest::prop_assert_eq!(o.cmp(&b, &a), ab.reverse());
                // multiplicativity: a < b implies ca < cb
                proptest::prop_assert_eq!(o.cmp(&c.mul(&a), &c.mul(&b)), ab);
            }
        }

        #[test]
        fn transitive(
            ea in proptest::collection::vec(0u32..4, 3),
            eb in proptest::collection::vec(0u32..4, 3),
            ec in proptest::collection::vec(0u32..4, 3),
        ) {
            for o in [ScalarOrder::DegRevLex, ScalarOrder::DegLex] {
                let (a, b, c) = (m(&ea), m(&eb), m(&ec));
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    proptest::prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
