//! Buchberger's algorithm for homogeneous submodules of graded free modules,
//! normal forms with quotient tracking, Schreyer syzygies, and the
//! elimination-based syzygy computation for arbitrary generator sets.

use crate::error::{Error, Result};
use crate::free::{Ambient, FreeElement};
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, ModuleTerm};
use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// A reduced Groebner basis of a submodule of a graded free module.
///
/// Elements are monic, pairwise lead-term irreducible, tail-reduced, and
/// sorted ascending by lead term, so the basis is the canonical one for its
/// submodule and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ambient: Ambient,
    order: ModuleOrder,
    elements: Vec<FreeElement>,
    leads: Vec<ModuleTerm>,
}

impl GroebnerBasis {
    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    pub fn lead_terms(&self) -> &[ModuleTerm] {
        &self.leads
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    /// Lead monomials sitting at the given ambient position.
    pub fn lead_monomials_at(&self, position: usize) -> impl Iterator<Item = &Monomial> {
        self.leads
            .iter()
            .filter(move |t| t.position == position)
            .map(|t| &t.monomial)
    }
}

/// Outcome of a full reduction `f = sum q_i g_i + remainder`.
pub struct Reduction {
    pub quotients: Vec<crate::poly::Polynomial>,
    pub remainder: FreeElement,
}

/// Full normal form of `f` against `basis`: no term of the remainder is
/// divisible by any basis lead term.
pub fn normal_form(f: &FreeElement, gb: &GroebnerBasis) -> Result<FreeElement> {
    f.check_rank(gb.ambient.rank())?;
    Ok(reduce_tracked(f, &gb.elements, &gb.leads, &gb.order).remainder)
}

/// Normal form plus the quotients expressing the reduction.
pub fn reduce(f: &FreeElement, gb: &GroebnerBasis) -> Result<Reduction> {
    f.check_rank(gb.ambient.rank())?;
    Ok(reduce_tracked(f, &gb.elements, &gb.leads, &gb.order))
}

fn reduce_tracked(
    f: &FreeElement,
    basis: &[FreeElement],
    leads: &[ModuleTerm],
    order: &ModuleOrder,
) -> Reduction {
    let p = f.modulus();
    let nvars = f.nvars();
    let field = crate::field::PrimeField::new(p);
    let mut quotients =
        alloc::vec![crate::poly::Polynomial::zero(p, nvars); basis.len()];
    let mut work = f.clone();
    let mut remainder = FreeElement::zero(p, nvars, f.rank());

    'outer: while let Some((lead, coeff)) = work.lead_term(order) {
        for (i, g_lead) in leads.iter().enumerate() {
            if g_lead.position == lead.position && g_lead.monomial.divides(&lead.monomial) {
                let quot_mon = g_lead.monomial.quotient_into(&lead.monomial);
                // basis elements are monic
                work = work.sub(&basis[i].mul_term(&quot_mon, coeff));
                quotients[i] = quotients[i].add(&crate::poly::Polynomial::from_terms(
                    p,
                    nvars,
                    [(quot_mon, coeff)],
                ));
                continue 'outer;
            }
        }
        // move the irreducible lead term to the remainder
        let term = crate::poly::Polynomial::from_terms(p, nvars, [(lead.monomial.clone(), coeff)]);
        let single = FreeElement::single(p, nvars, f.rank(), lead.position, term);
        remainder = remainder.add(&single);
        work = work.sub(&single);
    }
    Reduction { quotients, remainder }
}

struct Pair {
    degree: i64,
    i: usize,
    j: usize,
}

/// Compute the reduced Groebner basis of the submodule generated by `gens`.
///
/// Pair selection is the normal strategy (lowest S-pair degree first, FIFO on
/// ties); the product criterion is applied only to pairs of single-position
/// elements, where it is valid, and the chain criterion in its conservative
/// two-sided form. Input must be homogeneous, which guarantees termination
/// degree by degree; the result is the unique reduced basis for the order.
pub fn buchberger(
    gens: &[FreeElement],
    ambient: &Ambient,
    order: &ModuleOrder,
) -> Result<GroebnerBasis> {
    for g in gens {
        g.check_rank(ambient.rank())?;
        if !g.is_homogeneous(ambient) {
            return Err(Error::NotHomogeneous { context: "groebner basis input" });
        }
    }
    let mut basis: Vec<FreeElement> = Vec::new();
    let mut leads: Vec<ModuleTerm> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push_element = |el: FreeElement,
                        basis: &mut Vec<FreeElement>,
                        leads: &mut Vec<ModuleTerm>,
                        pairs: &mut Vec<Pair>| {
        let (lead, coeff) = el.lead_term(order).expect("nonzero");
        let field = crate::field::PrimeField::new(el.modulus());
        let monic = el.scale(field.inv(coeff));
        let idx = basis.len();
        for k in 0..idx {
            if leads[k].position == lead.position {
                let lcm = leads[k].monomial.lcm(&lead.monomial);
                let pair_degree = lcm.degree() as i64 + ambient.shifts[lead.position];
                pairs.push(Pair { degree: pair_degree, i: k, j: idx });
            }
        }
        basis.push(monic);
        leads.push(lead);
    };

    for g in gens {
        if !g.is_zero() {
            push_element(g.clone(), &mut basis, &mut leads, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: lowest degree first, then insertion order
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(k, p)| (p.degree, p.i, p.j, *k))
            .map(|(k, _)| k)
            .unwrap();
        let Pair { i, j, .. } = pairs.swap_remove(best);
        done.insert((i, j));

        let (li, lj) = (&leads[i], &leads[j]);
        debug_assert_eq!(li.position, lj.position);

        // product criterion: valid when both elements live in one position
        if li.monomial.coprime(&lj.monomial)
            && single_position(&basis[i]).is_some()
            && single_position(&basis[i]) == single_position(&basis[j])
        {
            continue;
        }

        // chain criterion
        let lcm = li.monomial.lcm(&lj.monomial);
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j || leads[k].position != li.position {
                continue;
            }
            if leads[k].monomial.divides(&lcm)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        let s = s_element(&basis[i], &basis[j], li, lj);
        let reduced = reduce_tracked(&s, &basis, &leads, order).remainder;
        if !reduced.is_zero() {
            push_element(reduced, &mut basis, &mut leads, &mut pairs);
        }
    }

    Ok(reduce_basis(basis, ambient.clone(), order.clone()))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn single_position(el: &FreeElement) -> Option<usize> {
    let mut hit = None;
    for (pos, c) in el.components().iter().enumerate() {
        if !c.is_zero() {
            if hit.is_some() {
                return None;
            }
            hit = Some(pos);
        }
    }
    hit
}

/// S-element of two monic elements with lead terms at the same position.
fn s_element(
    a: &FreeElement,
    b: &FreeElement,
    la: &ModuleTerm,
    lb: &ModuleTerm,
) -> FreeElement {
    let lcm = la.monomial.lcm(&lb.monomial);
    let ua = la.monomial.quotient_into(&lcm);
    let ub = lb.monomial.quotient_into(&lcm);
    a.mul_term(&ua, 1).sub(&b.mul_term(&ub, 1))
}

/// Minimalize and tail-reduce a basis into the unique reduced form.
fn reduce_basis(mut basis: Vec<FreeElement>, ambient: Ambient, order: ModuleOrder) -> GroebnerBasis {
    // drop elements whose lead is divisible by another surviving lead
    let mut keep = alloc::vec![true; basis.len()];
    let leads: Vec<ModuleTerm> = basis
        .iter()
        .map(|el| el.lead_term(&order).expect("nonzero").0)
        .collect();
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].position == leads[i].position
                && leads[j].monomial.divides(&leads[i].monomial)
                && (leads[j].monomial != leads[i].monomial || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<FreeElement> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(el, k)| k.then_some(el))
        .collect();

    // tail-reduce to a fixpoint
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<FreeElement> = kept
                .iter()
                .enumerate()
                .filter_map(|(j, el)| (j != i).then(|| el.clone()))
                .collect();
            let other_leads: Vec<ModuleTerm> = others
                .iter()
                .map(|el| el.lead_term(&order).expect("nonzero").0)
                .collect();
            let reduced = reduce_tracked(&kept[i], &others, &other_leads, &order).remainder;
            debug_assert!(!reduced.is_zero(), "minimal basis element reduced to zero");
            if reduced != kept[i] {
                let field = crate::field::PrimeField::new(reduced.modulus());
                let (_, c) = reduced.lead_term(&order).expect("nonzero");
                kept[i] = reduced.scale(field.inv(c));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // canonical ordering: ascending lead term
    kept.sort_by(|a, b| {
        let la = a.lead_term(&order).expect("nonzero").0;
        let lb = b.lead_term(&order).expect("nonzero").0;
        order.cmp(&la, &lb)
    });
    let leads = kept
        .iter()
        .map(|el| el.lead_term(&order).expect("nonzero").0)
        .collect();
    GroebnerBasis { ambient, order, elements: kept, leads }
}

/// Schreyer generators of the syzygy module of a reduced Groebner basis.
///
/// Returns elements of the free module on the basis elements (position `i`
/// carries the degree of `gb.elements()[i]`); each maps to zero through the
/// basis. Pairs whose lcm is a multiple of an earlier pair's lcm at the same
/// position are pruned; the survivors' lead terms already generate the lead
/// module of the full syzygy module, so the output is a Groebner basis with
/// respect to the induced Schreyer order.
pub fn syzygy_module(gb: &GroebnerBasis) -> (Vec<FreeElement>, Ambient) {
    let n = gb.elements.len();
    let ambient = &gb.ambient;
    let syz_shifts: Vec<i64> = gb
        .elements
        .iter()
        .map(|el| el.homogeneous_degree(ambient).expect("homogeneous"))
        .collect();
    let syz_ambient = Ambient::new(syz_shifts);
    if n == 0 {
        return (Vec::new(), syz_ambient);
    }
    let p = gb.elements[0].modulus();
    let nvars = gb.elements[0].nvars();
    let field = crate::field::PrimeField::new(p);

    let mut result = Vec::new();
    for i in 0..n {
        // candidate lcms for fixed i; keep only divisibility-minimal ones
        let mut cands: Vec<(usize, Monomial)> = Vec::new();
        for j in (i + 1)..n {
            if gb.leads[j].position != gb.leads[i].position {
                continue;
            }
            cands.push((j, gb.leads[i].monomial.lcm(&gb.leads[j].monomial)));
        }
        for (j, lcm) in cands.iter() {
            let minimal = cands.iter().all(|(j2, lcm2)| {
                j2 == j || !lcm2.divides(lcm) || (lcm2 == lcm && j2 > j)
            });
            if !minimal {
                continue;
            }
            let ui = gb.leads[i].monomial.quotient_into(lcm);
            let uj = gb.leads[*j].monomial.quotient_into(lcm);
            let s = gb.elements[i].mul_term(&ui, 1).sub(&gb.elements[*j].mul_term(&uj, 1));
            let red = reduce_tracked(&s, &gb.elements, &gb.leads, &gb.order);
            debug_assert!(red.remainder.is_zero(), "S-pair of a GB must reduce to zero");
            let mut comps =
                alloc::vec![crate::poly::Polynomial::zero(p, nvars); n];
            comps[i] = crate::poly::Polynomial::from_terms(p, nvars, [(ui, 1)]);
            comps[*j] = crate::poly::Polynomial::from_terms(p, nvars, [(uj, field.neg(1))]);
            for (k, q) in red.quotients.iter().enumerate() {
                comps[k] = comps[k].sub(q);
            }
            result.push(FreeElement::new(comps));
        }
    }
    (result, syz_ambient)
}

/// Schreyer order induced by a Groebner basis, for checking syzygy output.
pub fn schreyer_order(gb: &GroebnerBasis) -> ModuleOrder {
    ModuleOrder::Schreyer {
        ambient: Box::new(gb.order.clone()),
        weights: gb
            .leads
            .iter()
            .map(|t| (t.monomial.clone(), t.position))
            .collect(),
    }
}

/// Generators of `{ a : sum a_t gens[t] lies in <modulo> }`, the syzygies of
/// `gens` relative to the submodule generated by `modulo`.
///
/// Computed by one elimination: a Groebner basis of the graph elements
/// `(gens[t], e_t)` and `(m, 0)` for `m` in `modulo`, under a
/// position-over-term order that ranks the original ambient block above the
/// bookkeeping block. Basis elements with vanishing first block are exactly
/// the relations sought.
pub fn syzygies_of(
    gens: &[FreeElement],
    modulo: &[FreeElement],
    ambient: &Ambient,
    scalar: crate::order::ScalarOrder,
) -> Result<(Vec<FreeElement>, Ambient)> {
    let s = gens.len();
    let b = ambient.rank();
    let gen_degrees: Vec<i64> = gens
        .iter()
        .map(|g| {
            g.homogeneous_degree(ambient)
                .ok_or(Error::NotHomogeneous { context: "syzygy generators" })
        })
        .collect::<Result<Vec<_>>>()?;
    let syz_ambient = Ambient::new(gen_degrees.clone());
    if s == 0 {
        return Ok((Vec::new(), syz_ambient));
    }
    let p = gens[0].modulus();
    let nvars = gens[0].nvars();

    let mut graph_shifts = ambient.shifts.clone();
    graph_shifts.extend(gen_degrees.iter().copied());
    let graph_ambient = Ambient::new(graph_shifts);

    let mut graph_gens = Vec::with_capacity(s + modulo.len());
    for (t, g) in gens.iter().enumerate() {
        let marker = FreeElement::single(
            p,
            nvars,
            s,
            t,
            crate::poly::Polynomial::one(p, nvars),
        );
        graph_gens.push(g.concat(&marker));
    }
    let zero_block = FreeElement::zero(p, nvars, s);
    for m in modulo {
        m.check_rank(b)?;
        graph_gens.push(m.concat(&zero_block));
    }

    let order = ModuleOrder::PositionOverTerm(scalar);
    let gb = buchberger(&graph_gens, &graph_ambient, &order)?;
    let syzygies = gb
        .elements
        .iter()
        .filter(|el| el.slice(0..b).is_zero())
        .map(|el| el.slice(b..b + s))
        .collect();
    Ok((syzygies, syz_ambient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::ScalarOrder;
    use crate::parse::{parse_polynomial, VarSet};
    use alloc::vec;

    fn vars2() -> VarSet {
        VarSet::from_names(&["x", "y"])
    }

    fn ideal_el(text: &str) -> FreeElement {
        FreeElement::new(vec![parse_polynomial(text, &vars2(), 101).unwrap()])
    }

    fn default_order() -> ModuleOrder {
        ModuleOrder::TermOverPosition(ScalarOrder::DegRevLex)
    }

    fn gb_of(texts: &[&str]) -> GroebnerBasis {
        let gens: Vec<FreeElement> = texts.iter().map(|t| ideal_el(t)).collect();
        buchberger(&gens, &Ambient::free_of_rank(1), &default_order()).unwrap()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let gb = gb_of(&["x"]);
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0], ideal_el("x"));
    }

    #[test]
    fn x2_xy_is_already_reduced() {
        let gb = gb_of(&["x^2", "x*y"]);
        assert_eq!(gb.elements().len(), 2);
        assert!(gb.elements().contains(&ideal_el("x^2")));
        assert!(gb.elements().contains(&ideal_el("x*y")));
    }

    #[test]
    fn hand_elimination_x_plus_y_x_minus_y() {
        let gb = gb_of(&["x + y", "x - y"]);
        assert_eq!(gb.elements().len(), 2);
        assert!(gb.elements().contains(&ideal_el("x")));
        assert!(gb.elements().contains(&ideal_el("y")));
    }

    #[test]
    fn normal_forms_match_hand_reduction() {
        let gb = gb_of(&["x"]);
        assert!(normal_form(&ideal_el("x^2"), &gb).unwrap().is_zero());
        assert_eq!(normal_form(&ideal_el("y^2"), &gb).unwrap(), ideal_el("y^2"));

        let gb2 = gb_of(&["x^2", "x*y"]);
        let f = ideal_el("x^2 + x*y + y^2");
        assert_eq!(normal_form(&f, &gb2).unwrap(), ideal_el("y^2"));
    }

    #[test]
    fn reduction_quotients_reassemble() {
        let gb = gb_of(&["x^2", "x*y"]);
        let f = ideal_el("x^3 + x^2*y + y^3");
        let red = reduce(&f, &gb).unwrap();
        let mut acc = red.remainder.clone();
        for (q, g) in red.quotients.iter().zip(gb.elements()) {
            acc = acc.add(&g.mul_poly(q));
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn spair_normal_forms_vanish_post_hoc() {
        let gb = gb_of(&["x^2 + y^2", "x*y", "y^3 - x^2*y"]);
        let n = gb.elements().len();
        for i in 0..n {
            for j in (i + 1)..n {
                let (li, lj) = (&gb.lead_terms()[i], &gb.lead_terms()[j]);
                if li.position != lj.position {
                    continue;
                }
                let s = s_element(&gb.elements()[i], &gb.elements()[j], li, lj);
                assert!(normal_form(&s, &gb).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn syzygies_of_nonzerodivisor_are_empty() {
        let gb = gb_of(&["x"]);
        let (syz, _) = syzygy_module(&gb);
        assert!(syz.is_empty());
    }

    #[test]
    fn koszul_syzygy_of_x_y() {
        let gb = gb_of(&["x", "y"]);
        let (syz, ambient) = syzygy_module(&gb);
        assert_eq!(syz.len(), 1);
        assert_eq!(ambient.shifts, vec![1, 1]);
        // (y, -x) up to the basis ordering
        let el = &syz[0];
        let through: FreeElement = gb
            .elements()
            .iter()
            .zip(el.components())
            .fold(FreeElement::zero(101, 2, 1), |acc, (g, c)| {
                acc.add(&g.mul_poly(c))
            });
        assert!(through.is_zero());
        assert_eq!(el.components().iter().filter(|c| !c.is_zero()).count(), 2);
    }

    #[test]
    fn schreyer_staircase_x2_xy_y2() {
        let gb = gb_of(&["x^2", "x*y", "y^2"]);
        let (syz, syz_ambient) = syzygy_module(&gb);
        assert_eq!(syz.len(), 2, "adjacent staircase pairs only");
        for el in &syz {
            assert!(el.is_homogeneous(&syz_ambient));
            let through: FreeElement = gb
                .elements()
                .iter()
                .zip(el.components())
                .fold(FreeElement::zero(101, 2, 1), |acc, (g, c)| {
                    acc.add(&g.mul_poly(c))
                });
            assert!(through.is_zero());
        }
    }

    #[test]
    fn graph_syzygies_modulo_relation() {
        // syzygies of {x} in Q/(x^2): a*x in (x^2) iff a in (x)
        let gens = vec![ideal_el("x")];
        let modulo = vec![ideal_el("x^2")];
        let (syz, _) = syzygies_of(
            &gens,
            &modulo,
            &Ambient::free_of_rank(1),
            ScalarOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0], ideal_el("x"));
    }
}
