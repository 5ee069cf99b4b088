//! Submodules of graded free modules and the ideal/module operations built
//! on Groebner bases: powers, products, colons, membership, reduction
//! numbers and Ratliff-Rush closures.
//!
//! Modules over a quotient ring `A = Q/(f_1..f_c)` are handled on their
//! `Q`-presentations: a submodule of `A^b` is represented by the preimage in
//! `Q^b`, so operations that must respect the quotient either fold the
//! relation columns into their target or take them as an explicit context.

use crate::error::{Error, Result};
use crate::free::{Ambient, FreeElement};
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::order::{ModuleOrder, ScalarOrder};
use crate::poly::Polynomial;
use alloc::vec::Vec;

/// A finitely generated homogeneous submodule of a graded free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    ambient: Ambient,
    gens: Vec<FreeElement>,
}

impl Submodule {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ambient: Ambient, gens: Vec<FreeElement>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            g.check_rank(ambient.rank())?;
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous(&ambient) {
                return Err(Error::NotHomogeneous { context: "submodule generator" });
            }
            kept.push(g);
        }
        Ok(Submodule { ambient, gens: kept })
    }

    /// An ideal: a submodule of the rank-1 free module.
    pub fn ideal(polys: Vec<Polynomial>) -> Result<Self> {
        let gens = polys
            .into_iter()
            .map(|q| FreeElement::new(alloc::vec![q]))
            .collect();
        Submodule::new(Ambient::free_of_rank(1), gens)
    }

    /// The unit submodule: all of the ambient free module.
    pub fn full(p: u64, nvars: usize, ambient: Ambient) -> Self {
        let gens = (0..ambient.rank())
            .map(|i| FreeElement::single(p, nvars, ambient.rank(), i, Polynomial::one(p, nvars)))
            .collect();
        Submodule { ambient, gens }
    }

    pub fn zero(ambient: Ambient) -> Self {
        Submodule { ambient, gens: Vec::new() }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn gens(&self) -> &[FreeElement] {
        &self.gens
    }

    pub fn is_ideal(&self) -> bool {
        self.ambient.rank() == 1
    }

    /// Generators as plain polynomials (ideals only).
    pub fn ideal_gens(&self) -> Vec<Polynomial> {
        debug_assert!(self.is_ideal());
        self.gens.iter().map(|g| g.component(0).clone()).collect()
    }

    pub fn groebner(&self, order: &ModuleOrder) -> Result<GroebnerBasis> {
        buchberger(&self.gens, &self.ambient, order)
    }

    /// Extend the generating set (used to fold relation columns in).
    pub fn with_extra_gens(self, extra: &[FreeElement]) -> Result<Submodule> {
        let mut gens = self.gens;
        gens.extend(extra.iter().cloned());
        Submodule::new(self.ambient, gens)
    }
}

/// `f` lies in the submodule iff its normal form vanishes.
pub fn membership(f: &FreeElement, gb: &GroebnerBasis) -> Result<bool> {
    if !f.is_homogeneous(gb.ambient()) {
        return Err(Error::NotHomogeneous { context: "membership query" });
    }
    Ok(normal_form(f, gb)?.is_zero())
}

/// All generators of `sub` reduce to zero against `gb`.
pub fn contains(gb: &GroebnerBasis, sub: &Submodule) -> Result<bool> {
    for g in sub.gens() {
        if !membership(g, gb)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order-independent equality via two-sided membership of generators.
pub fn submodules_equal(a: &Submodule, b: &Submodule, order: &ModuleOrder) -> Result<bool> {
    let gb_a = a.groebner(order)?;
    if !contains(&gb_a, b)? {
        return Ok(false);
    }
    let gb_b = b.groebner(order)?;
    contains(&gb_b, a)
}

fn push_unique(acc: &mut Vec<FreeElement>, el: FreeElement) {
    if !el.is_zero() && !acc.contains(&el) {
        acc.push(el);
    }
}

/// `I^n` by enumerating n-fold products of the generators; `I^0 = (1)`.
pub fn ideal_power(ideal: &Submodule, n: u32) -> Submodule {
    debug_assert!(ideal.is_ideal());
    let p = ideal
        .gens
        .first()
        .map(|g| g.modulus())
        .unwrap_or(crate::field::DEFAULT_MODULUS);
    let nvars = ideal.gens.first().map(|g| g.nvars()).unwrap_or(0);
    if n == 0 {
        return Submodule {
            ambient: Ambient::free_of_rank(1),
            gens: alloc::vec![FreeElement::new(alloc::vec![Polynomial::one(p, nvars)])],
        };
    }
    let base: Vec<Polynomial> = ideal.ideal_gens();
    let mut current: Vec<Polynomial> = Vec::new();
    for g in &base {
        if !g.is_zero() && !current.contains(g) {
            current.push(g.clone());
        }
    }
    for _ in 1..n {
        let mut next: Vec<Polynomial> = Vec::new();
        for f in &current {
            for g in &base {
                let prod = f.mul(g);
                if !prod.is_zero() && !next.contains(&prod) {
                    next.push(prod);
                }
            }
        }
        current = next;
    }
    Submodule {
        ambient: Ambient::free_of_rank(1),
        gens: current
            .into_iter()
            .map(|q| FreeElement::new(alloc::vec![q]))
            .collect(),
    }
}

/// `I * M`: generated by products of ideal generators with module generators.
pub fn module_scale(ideal: &Submodule, module: &Submodule) -> Submodule {
    debug_assert!(ideal.is_ideal());
    let mut gens = Vec::new();
    for q in ideal.ideal_gens() {
        for u in module.gens() {
            push_unique(&mut gens, u.mul_poly(&q));
        }
    }
    Submodule { ambient: module.ambient.clone(), gens }
}

/// Generators of `{ u in <m> : x_t * u in <n> for every multiplier x_t }`.
///
/// One elimination on the combined system: the free module is stacked into
/// one block per multiplier plus a bookkeeping block recording the
/// coefficients on the generators of `m`. Mixed-degree multipliers are
/// balanced by per-block shift offsets so the graph stays homogeneous.
pub fn colon_generic(
    n: &Submodule,
    multipliers: &[Polynomial],
    m: &Submodule,
    scalar: ScalarOrder,
) -> Result<Submodule> {
    assert!(!multipliers.is_empty(), "colon needs at least one multiplier");
    let b = n.ambient.rank();
    if m.ambient.rank() != b {
        return Err(Error::AmbientMismatch { expected: b, found: m.ambient.rank() });
    }
    let p = multipliers[0].modulus();
    let nvars = multipliers[0].nvars();
    let t_count = multipliers.len();

    let mult_degrees = multipliers
        .iter()
        .map(|x| {
            x.homogeneous_degree()
                .ok_or(Error::NotHomogeneous { context: "colon multiplier" })
        })
        .collect::<Result<Vec<u32>>>()?;
    let max_deg = *mult_degrees.iter().max().unwrap() as i64;

    let m_degrees = m
        .gens
        .iter()
        .map(|u| {
            u.homogeneous_degree(&m.ambient)
                .ok_or(Error::NotHomogeneous { context: "colon ambient generator" })
        })
        .collect::<Result<Vec<i64>>>()?;

    // graph ambient: one copy of the base ambient per multiplier, then markers
    let mut shifts = Vec::with_capacity(t_count * b + m.gens.len());
    for d in &mult_degrees {
        for s in &n.ambient.shifts {
            shifts.push(s + max_deg - *d as i64);
        }
    }
    for d in &m_degrees {
        shifts.push(d + max_deg);
    }
    let graph_ambient = Ambient::new(shifts);
    let graph_rank = graph_ambient.rank();

    let mut graph_gens = Vec::new();
    for (i, u) in m.gens.iter().enumerate() {
        let mut comps = Vec::with_capacity(graph_rank);
        for x in multipliers {
            comps.extend(u.mul_poly(x).components().iter().cloned());
        }
        for k in 0..m.gens.len() {
            comps.push(if k == i {
                Polynomial::one(p, nvars)
            } else {
                Polynomial::zero(p, nvars)
            });
        }
        graph_gens.push(FreeElement::new(comps));
    }
    let zero_poly = Polynomial::zero(p, nvars);
    for g in &n.gens {
        for t in 0..t_count {
            let mut comps = alloc::vec![zero_poly.clone(); graph_rank];
            for (j, c) in g.components().iter().enumerate() {
                comps[t * b + j] = c.clone();
            }
            graph_gens.push(FreeElement::new(comps));
        }
    }

    let order = ModuleOrder::PositionOverTerm(scalar);
    let gb = buchberger(&graph_gens, &graph_ambient, &order)?;

    let mut result_gens = Vec::new();
    for el in gb.elements() {
        if !el.slice(0..t_count * b).is_zero() {
            continue;
        }
        let coeffs = el.slice(t_count * b..graph_rank);
        let mut u = FreeElement::zero(p, nvars, b);
        for (i, c) in coeffs.components().iter().enumerate() {
            u = u.add(&m.gens[i].mul_poly(c));
        }
        push_unique(&mut result_gens, u);
    }
    Submodule::new(n.ambient.clone(), result_gens)
}

/// `(n : x)` inside the module generated by `m`; the result contains `n`
/// whenever `n` is contained in `<m>`.
pub fn colon_by_element(
    n: &Submodule,
    x: &Polynomial,
    m: &Submodule,
    scalar: ScalarOrder,
) -> Result<Submodule> {
    colon_generic(n, core::slice::from_ref(x), m, scalar)
}

/// `(n : i)` for an ideal `i`: the intersection of the element colons,
/// computed in a single combined elimination.
pub fn colon_by_ideal(
    n: &Submodule,
    i: &Submodule,
    m: &Submodule,
    scalar: ScalarOrder,
) -> Result<Submodule> {
    colon_generic(n, &i.ideal_gens(), m, scalar)
}

/// Quotient-module context: `M = F/<relations>` with `F` the free module on
/// `ambient`. Submodules of `M` are preimages in `F`; derived submodules
/// always include the relation generators.
#[derive(Debug, Clone)]
pub struct QuotientContext {
    pub p: u64,
    pub nvars: usize,
    pub ambient: Ambient,
    pub relations: Vec<FreeElement>,
    pub scalar: ScalarOrder,
}

impl QuotientContext {
    pub fn order(&self) -> ModuleOrder {
        ModuleOrder::TermOverPosition(self.scalar)
    }

    pub fn full(&self) -> Submodule {
        Submodule::full(self.p, self.nvars, self.ambient.clone())
    }

    /// Preimage of `I^k M`: the ideal power applied to the unit submodule,
    /// together with the relations.
    pub fn power_submodule(&self, ideal: &Submodule, k: u32) -> Result<Submodule> {
        let scaled = if k == 0 {
            self.full()
        } else {
            module_scale(&ideal_power(ideal, k), &self.full())
        };
        scaled.with_extra_gens(&self.relations)
    }

    /// Least `r` with `I^{r+1} M = J I^r M`, both sides mod the relations.
    ///
    /// `J I^r M` is contained in `I^{r+1} M` whenever `J` is contained in
    /// `I`, so each step tests one inclusion; the other is verified once at
    /// the found `r`.
    pub fn reduction_number(
        &self,
        ideal: &Submodule,
        j_ideal: &Submodule,
        cap: u32,
    ) -> Result<u32> {
        let order = self.order();
        for r in 0..=cap {
            let big = self.power_submodule(ideal, r + 1)?;
            let small = if j_ideal.gens().is_empty() {
                Submodule::zero(self.ambient.clone())
            } else {
                module_scale(j_ideal, &self.power_submodule(ideal, r)?)
            }
            .with_extra_gens(&self.relations)?;
            let small_gb = small.groebner(&order)?;
            if contains(&small_gb, &big)? {
                let big_gb = big.groebner(&order)?;
                debug_assert!(contains(&big_gb, &small)?);
                return Ok(r);
            }
        }
        Err(Error::NotAReduction { cap })
    }

    /// Stabilized value of the ascending chain `(I^{n+k} M : I^k)`, the
    /// Ratliff-Rush closure of `I^n M`. Stabilization requires two
    /// consecutive stalls of the chain.
    pub fn ratliff_rush(&self, ideal: &Submodule, n: u32, cap: u32) -> Result<Submodule> {
        let order = self.order();
        let full = self.full();
        let mut current = self.power_submodule(ideal, n)?;
        let mut stalls = 0u32;
        for k in 1..=cap {
            let target = self.power_submodule(ideal, n + k)?;
            let mults = ideal_power(ideal, k);
            let next = colon_by_ideal(&target, &mults, &full, self.scalar)?
                .with_extra_gens(&self.relations)?;
            let current_gb = current.groebner(&order)?;
            if contains(&current_gb, &next)? {
                stalls += 1;
                if stalls >= 2 {
                    return Ok(current);
                }
            } else {
                stalls = 0;
                current = next;
            }
        }
        Err(Error::NoStabilization { cap })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, VarSet};
    use alloc::vec;

    const P: u64 = 101;

    fn vars2() -> VarSet {
        VarSet::from_names(&["x", "y"])
    }

    fn poly(text: &str) -> Polynomial {
        parse_polynomial(text, &vars2(), P).unwrap()
    }

    fn ideal(texts: &[&str]) -> Submodule {
        Submodule::ideal(texts.iter().map(|t| poly(t)).collect()).unwrap()
    }

    fn default_order() -> ModuleOrder {
        ModuleOrder::TermOverPosition(ScalarOrder::DegRevLex)
    }

    fn assert_ideal_eq(a: &Submodule, b: &[&str]) {
        let b = ideal(b);
        assert!(submodules_equal(a, &b, &default_order()).unwrap());
    }

    #[test]
    fn membership_hand_cases() {
        let gb = ideal(&["x^2"]).groebner(&default_order()).unwrap();
        let f = FreeElement::new(vec![poly("x^2*y")]);
        assert!(membership(&f, &gb).unwrap());
        let gb2 = ideal(&["x"]).groebner(&default_order()).unwrap();
        assert!(!membership(&FreeElement::new(vec![poly("y")]), &gb2).unwrap());
    }

    #[test]
    fn quartic_ideal_membership() {
        // degree-4 graded piece of (x^4, x^3 y, x y^3, y^4) misses x^2 y^2
        let gb = ideal(&["x^4", "x^3*y", "x*y^3", "y^4"])
            .groebner(&default_order())
            .unwrap();
        assert!(!membership(&FreeElement::new(vec![poly("x^2*y^2")]), &gb).unwrap());
    }

    #[test]
    fn ideal_powers() {
        assert_ideal_eq(&ideal_power(&ideal(&["x", "y"]), 2), &["x^2", "x*y", "y^2"]);
        assert_ideal_eq(&ideal_power(&ideal(&["x", "y"]), 0), &["1"]);
        assert_ideal_eq(
            &ideal_power(&ideal(&["x^2", "y"]), 3),
            &["x^6", "x^4*y", "x^2*y^2", "y^3"],
        );
    }

    #[test]
    fn power_product_consistency() {
        // I^a * I^b = I^{a+b}
        let i = ideal(&["x^2 + y^2", "x*y"]);
        for a in 0..3u32 {
            for b in 0..3u32 {
                let lhs = module_scale(&ideal_power(&i, a), &ideal_power(&i, b));
                let rhs = ideal_power(&i, a + b);
                assert!(submodules_equal(&lhs, &rhs, &default_order()).unwrap());
            }
        }
    }

    #[test]
    fn colon_hand_cases() {
        let full = Submodule::full(P, 2, Ambient::free_of_rank(1));
        // (x^2 : x) = (x)
        let c =
            colon_by_element(&ideal(&["x^2"]), &poly("x"), &full, ScalarOrder::DegRevLex).unwrap();
        assert_ideal_eq(&c, &["x"]);
        // (x : y) = (x)
        let c =
            colon_by_element(&ideal(&["x"]), &poly("y"), &full, ScalarOrder::DegRevLex).unwrap();
        assert_ideal_eq(&c, &["x"]);
        // ((x^2, xy) : (x, y)) = (x)
        let c = colon_by_ideal(
            &ideal(&["x^2", "x*y"]),
            &ideal(&["x", "y"]),
            &full,
            ScalarOrder::DegRevLex,
        )
        .unwrap();
        assert_ideal_eq(&c, &["x"]);
        // (n : (1)) = n
        let n = ideal(&["x^2", "x*y"]);
        let c = colon_by_ideal(&n, &ideal(&["1"]), &full, ScalarOrder::DegRevLex).unwrap();
        assert!(submodules_equal(&c, &n, &default_order()).unwrap());
    }

    #[test]
    fn colon_duality_properties() {
        let full = Submodule::full(P, 2, Ambient::free_of_rank(1));
        let n = ideal(&["x^3", "x*y^2"]);
        let x = poly("x + y");
        let c = colon_by_element(&n, &x, &full, ScalarOrder::DegRevLex).unwrap();
        let order = default_order();
        // n contained in (n : x)
        let c_gb = c.groebner(&order).unwrap();
        assert!(contains(&c_gb, &n).unwrap());
        // x * (n : x) contained in n
        let n_gb = n.groebner(&order).unwrap();
        let scaled = Submodule::new(
            Ambient::free_of_rank(1),
            c.gens().iter().map(|u| u.mul_poly(&x)).collect(),
        )
        .unwrap();
        assert!(contains(&n_gb, &scaled).unwrap());
    }

    #[test]
    fn quartic_colon_contains_x2y2() {
        let full = Submodule::full(P, 2, Ambient::free_of_rank(1));
        let i = ideal(&["x^4", "x^3*y", "x*y^3", "y^4"]);
        let i2 = ideal_power(&i, 2);
        let c = colon_by_ideal(&i2, &i, &full, ScalarOrder::DegRevLex).unwrap();
        let gb = c.groebner(&default_order()).unwrap();
        assert!(membership(&FreeElement::new(vec![poly("x^2*y^2")]), &gb).unwrap());
    }

    fn ring_context(relations: &[&str]) -> QuotientContext {
        QuotientContext {
            p: P,
            nvars: 2,
            ambient: Ambient::free_of_rank(1),
            relations: relations
                .iter()
                .map(|t| FreeElement::new(vec![poly(t)]))
                .collect(),
            scalar: ScalarOrder::DegRevLex,
        }
    }

    #[test]
    fn reduction_numbers_on_hypersurfaces() {
        let m_ideal = ideal(&["x", "y"]);
        // regular ring, J = I: r = 0
        let ctx = ring_context(&[]);
        assert_eq!(ctx.reduction_number(&m_ideal, &m_ideal, 30).unwrap(), 0);
        // A = F_p[x,y]/(x^3), J = (y): r = 2
        let ctx3 = ring_context(&["x^3"]);
        assert_eq!(ctx3.reduction_number(&m_ideal, &ideal(&["y"]), 30).unwrap(), 2);
        // A = F_p[x,y]/(x^2), J = (y): r = 1
        let ctx2 = ring_context(&["x^2"]);
        assert_eq!(ctx2.reduction_number(&m_ideal, &ideal(&["y"]), 30).unwrap(), 1);
    }

    #[test]
    fn not_a_reduction_is_diagnosed() {
        // (x) is not a reduction of (x, y) in F_p[x, y]
        let ctx = ring_context(&[]);
        let m_ideal = ideal(&["x", "y"]);
        assert!(matches!(
            ctx.reduction_number(&m_ideal, &ideal(&["x"]), 5),
            Err(Error::NotAReduction { .. })
        ));
    }

    #[test]
    fn ratliff_rush_regular_ring_is_trivial() {
        let ctx = ring_context(&[]);
        let m_ideal = ideal(&["x", "y"]);
        for n in 1..=3u32 {
            let rr = ctx.ratliff_rush(&m_ideal, n, 20).unwrap();
            let expected = ctx.power_submodule(&m_ideal, n).unwrap();
            assert!(submodules_equal(&rr, &expected, &default_order()).unwrap());
        }
    }

    #[test]
    fn ratliff_rush_quartic_example() {
        let ctx = ring_context(&[]);
        let i = ideal(&["x^4", "x^3*y", "x*y^3", "y^4"]);
        // tilde I = I + (x^2 y^2)
        let rr = ctx.ratliff_rush(&i, 1, 20).unwrap();
        let expected = ideal(&["x^4", "x^3*y", "x*y^3", "y^4", "x^2*y^2"]);
        assert!(submodules_equal(&rr, &expected, &default_order()).unwrap());
        // tilde(I^2) = I^2
        let rr2 = ctx.ratliff_rush(&i, 2, 20).unwrap();
        let expected2 = ctx.power_submodule(&i, 2).unwrap();
        assert!(submodules_equal(&rr2, &expected2, &default_order()).unwrap());
    }
}
