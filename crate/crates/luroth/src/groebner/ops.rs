//! Ideal operations built on the Buchberger engine: intersection by the
//! auxiliary-variable trick, colon quotients, saturation, elimination, membership,
//! and extraction of a rational point from a degree-1 zero-dimensional basis.
//!
//! Every operation returns the reduced Gröbner basis of its result in the caller's
//! order, so results are canonical and can be compared for ideal equality directly.

use super::buchberger::{groebner, normal_form, GroebnerBasis};
use super::{Budget, GroebnerError};
use crate::exactla::SymMatrix;
use crate::ring::field::Field;
use crate::ring::monomial::{Monomial, Order, MAX_VARS};
use crate::ring::poly::{Ctx, MultiPoly};

fn shift_vars<F: Field>(ctx_to: &Ctx<F>, p: &MultiPoly<F>, by: usize) -> MultiPoly<F> {
    let terms = p
        .terms
        .iter()
        .map(|(m, c)| {
            let mut exps = [0u16; MAX_VARS];
            for i in 0..MAX_VARS - by {
                exps[i + by] = m.exp(i);
            }
            (Monomial::from_exps(&exps), c.clone())
        })
        .collect();
    MultiPoly::from_terms(ctx_to, terms)
}

fn unshift_vars<F: Field>(ctx_to: &Ctx<F>, p: &MultiPoly<F>, by: usize) -> MultiPoly<F> {
    let terms = p
        .terms
        .iter()
        .map(|(m, c)| {
            let mut exps = [0u16; MAX_VARS];
            for i in by..MAX_VARS {
                debug_assert!(i >= by);
                exps[i - by] = m.exp(i);
            }
            for i in 0..by {
                debug_assert_eq!(m.exp(i), 0);
            }
            (Monomial::from_exps(&exps), c.clone())
        })
        .collect();
    MultiPoly::from_terms(ctx_to, terms)
}

/// Intersection of two ideals via t·I + (1 − t)·J and elimination of t.
pub fn intersection<F: Field>(
    ctx: &Ctx<F>,
    a: &[MultiPoly<F>],
    b: &[MultiPoly<F>],
    budget: &mut Budget,
) -> Result<Vec<MultiPoly<F>>, GroebnerError> {
    if ctx.nvars + 1 > MAX_VARS {
        return Err(GroebnerError::TooManyVariables { needed: ctx.nvars + 1 });
    }
    let ctx_t = Ctx::new(ctx.field.clone(), ctx.nvars + 1, Order::Elim(1));
    let t = MultiPoly::var(&ctx_t, 0);
    let one = MultiPoly::constant(&ctx_t, ctx.field.one());
    let one_minus_t = one.sub(&ctx_t, &t);
    let mut gens: Vec<MultiPoly<F>> = Vec::new();
    for p in a {
        gens.push(t.mul(&ctx_t, &shift_vars(&ctx_t, p, 1)));
    }
    for p in b {
        gens.push(one_minus_t.mul(&ctx_t, &shift_vars(&ctx_t, p, 1)));
    }
    let gb = groebner(&ctx_t, &gens, budget)?;
    let kept: Vec<MultiPoly<F>> = gb
        .polys
        .iter()
        .filter(|p| p.terms.iter().all(|(m, _)| m.exp(0) == 0))
        .map(|p| unshift_vars(ctx, p, 1))
        .collect();
    // Re-run in the caller's order for a canonical reduced basis.
    Ok(groebner(ctx, &kept, budget)?.polys)
}

/// Exact division of every term: p must be a polynomial multiple of h.
fn exact_div<F: Field>(ctx: &Ctx<F>, p: &MultiPoly<F>, h: &MultiPoly<F>) -> MultiPoly<F> {
    let mut rest = p.clone();
    let mut out = MultiPoly::zero();
    let (hm, hc) = h.leading().expect("nonzero divisor");
    while let Some((m, c)) = rest.leading().map(|(m, c)| (*m, c.clone())) {
        let q = hm
            .divide_into(&m)
            .expect("quotient ideal members are divisible by the saturating polynomial");
        let qc = ctx.field.div(&c, hc).expect("nonzero leading coefficient");
        let term = MultiPoly::term(ctx, q, qc);
        out = out.add(ctx, &term);
        rest = rest.sub(ctx, &term.mul(ctx, h));
    }
    out
}

/// Colon quotient (I : h) = (I ∩ (h)) / h.
pub fn quotient<F: Field>(
    ctx: &Ctx<F>,
    gens: &[MultiPoly<F>],
    h: &MultiPoly<F>,
    budget: &mut Budget,
) -> Result<Vec<MultiPoly<F>>, GroebnerError> {
    assert!(!h.is_zero(), "colon by zero");
    let inter = intersection(ctx, gens, std::slice::from_ref(h), budget)?;
    let divided: Vec<MultiPoly<F>> = inter.iter().map(|p| exact_div(ctx, p, h)).collect();
    Ok(groebner(ctx, &divided, budget)?.polys)
}

/// Result of saturating an ideal: the stable reduced basis and how many colon
/// quotients were taken before stabilizing (0 when the input was already stable).
#[derive(Clone, Debug)]
pub struct SaturationResult<F: Field> {
    pub gens: Vec<MultiPoly<F>>,
    pub steps: usize,
}

/// Saturation (I : h^∞): iterate the colon quotient until the ideal stops growing.
pub fn saturation<F: Field>(
    ctx: &Ctx<F>,
    gens: &[MultiPoly<F>],
    h: &MultiPoly<F>,
    budget: &mut Budget,
) -> Result<SaturationResult<F>, GroebnerError> {
    let mut current = groebner(ctx, gens, budget)?.polys;
    let mut steps = 0usize;
    loop {
        let next = quotient(ctx, &current, h, budget)?;
        if next == current {
            return Ok(SaturationResult { gens: current, steps });
        }
        current = next;
        steps += 1;
    }
}

/// Saturation (I : h^∞) in a single basis computation via the localization trick:
/// adjoin a fresh variable y, add y·h − 1, and eliminate y. Equivalent to the
/// iterated quotient but usually much cheaper.
pub fn saturation_localized<F: Field>(
    ctx: &Ctx<F>,
    gens: &[MultiPoly<F>],
    h: &MultiPoly<F>,
    budget: &mut Budget,
) -> Result<Vec<MultiPoly<F>>, GroebnerError> {
    assert!(!h.is_zero(), "saturation by zero");
    if ctx.nvars + 1 > MAX_VARS {
        return Err(GroebnerError::TooManyVariables { needed: ctx.nvars + 1 });
    }
    let ctx_y = Ctx::new(ctx.field.clone(), ctx.nvars + 1, Order::Elim(1));
    let y = MultiPoly::var(&ctx_y, 0);
    let one = MultiPoly::constant(&ctx_y, ctx.field.one());
    let mut gens_y: Vec<MultiPoly<F>> =
        gens.iter().map(|p| shift_vars(&ctx_y, p, 1)).collect();
    gens_y.push(y.mul(&ctx_y, &shift_vars(&ctx_y, h, 1)).sub(&ctx_y, &one));
    let gb = groebner(&ctx_y, &gens_y, budget)?;
    let kept: Vec<MultiPoly<F>> = gb
        .polys
        .iter()
        .filter(|p| p.terms.iter().all(|(m, _)| m.exp(0) == 0))
        .map(|p| unshift_vars(ctx, p, 1))
        .collect();
    Ok(groebner(ctx, &kept, budget)?.polys)
}

/// The elimination ideal I ∩ k[x_k, …]: a block-order basis filtered to the
/// generators free of the first k variables, restated in the caller's order.
pub fn eliminate<F: Field>(
    ctx: &Ctx<F>,
    gens: &[MultiPoly<F>],
    k: usize,
    budget: &mut Budget,
) -> Result<Vec<MultiPoly<F>>, GroebnerError> {
    let ctx_e = ctx.with_order(Order::Elim(k));
    let gb = groebner(&ctx_e, gens, budget)?;
    let kept: Vec<MultiPoly<F>> = gb
        .polys
        .iter()
        .filter(|p| p.terms.iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
        .cloned()
        .collect();
    Ok(groebner(ctx, &kept, budget)?.polys)
}

/// Ideal membership through the reduced basis.
pub fn ideal_contains<F: Field>(
    ctx: &Ctx<F>,
    basis: &[MultiPoly<F>],
    p: &MultiPoly<F>,
    budget: &mut Budget,
) -> Result<bool, GroebnerError> {
    Ok(normal_form(ctx, p, basis, budget)?.is_zero())
}

/// Read the coordinates of a single projective rational point off a reduced basis
/// whose scheme is zero-dimensional of degree 1: the linear generators must cut out a
/// one-dimensional coordinate kernel, and every generator must vanish there. The
/// point is normalized so its first nonzero coordinate is 1.
pub fn extract_rational_point<F: Field>(
    ctx: &Ctx<F>,
    gb: &GroebnerBasis<F>,
) -> Option<Vec<F::Elem>> {
    let linear: Vec<&MultiPoly<F>> =
        gb.polys.iter().filter(|p| p.total_deg() == Some(1) && p.is_homogeneous()).collect();
    if linear.is_empty() {
        return None;
    }
    let rows: Vec<Vec<F::Elem>> = linear
        .iter()
        .map(|p| {
            (0..ctx.nvars)
                .map(|v| {
                    let target = Monomial::var(v);
                    p.terms
                        .iter()
                        .find(|(m, _)| *m == target)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(|| ctx.field.zero())
                })
                .collect()
        })
        .collect();
    let kernel = SymMatrix::<F>::from_rows(rows).kernel(&ctx.field);
    if kernel.len() != 1 {
        return None;
    }
    let mut point = kernel.into_iter().next().unwrap();
    let pivot = point.iter().position(|c| !ctx.field.is_zero(c))?;
    let inv = ctx.field.inv(&point[pivot]).ok()?;
    for c in point.iter_mut() {
        *c = ctx.field.mul(c, &inv);
    }
    // Every generator (any degree) must vanish at the point.
    for p in &gb.polys {
        if !ctx.field.is_zero(&p.eval(ctx, &point)) {
            return None;
        }
    }
    Some(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger::is_groebner_basis;
    use crate::ring::field::Rat;

    fn ctx(n: usize) -> Ctx<Rat> {
        Ctx::new(Rat, n, Order::Grevlex)
    }

    fn poly(c: &Ctx<Rat>, terms: &[(i64, &[u16])]) -> MultiPoly<Rat> {
        MultiPoly::from_terms(
            c,
            terms.iter().map(|(k, e)| (Monomial::from_exps(e), Rat::int(*k))).collect(),
        )
    }

    #[test]
    fn intersection_of_coordinate_ideals_is_the_product() {
        let c = ctx(2);
        let x = poly(&c, &[(1, &[1, 0])]);
        let y = poly(&c, &[(1, &[0, 1])]);
        let mut budget = Budget::default();
        let inter = intersection(&c, &[x], &[y], &mut budget).unwrap();
        assert_eq!(inter, vec![poly(&c, &[(1, &[1, 1])])]);
        // (x + y) ∩ (x − y) = ((x + y)(x − y)) = (x² − y²).
        let a = poly(&c, &[(1, &[1, 0]), (1, &[0, 1])]);
        let b = poly(&c, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let inter = intersection(&c, &[a], &[b], &mut budget).unwrap();
        assert_eq!(inter, vec![poly(&c, &[(1, &[2, 0]), (-1, &[0, 2])])]);
    }

    #[test]
    fn quotient_peels_one_multiplicity_layer() {
        let c = ctx(2);
        let mut budget = Budget::default();
        // ((x², xy) : x) = (x, y).
        let gens = [poly(&c, &[(1, &[2, 0])]), poly(&c, &[(1, &[1, 1])])];
        let h = poly(&c, &[(1, &[1, 0])]);
        let q = quotient(&c, &gens, &h, &mut budget).unwrap();
        assert_eq!(q, vec![poly(&c, &[(1, &[0, 1])]), poly(&c, &[(1, &[1, 0])])]);
    }

    #[test]
    fn saturation_stabilizes_and_counts_steps() {
        let c = ctx(2);
        let mut budget = Budget::default();
        // ((x³, x²y) : y^∞) = (x³, x²) = (x²) — one growing step, one confirming.
        let gens = [poly(&c, &[(1, &[3, 0])]), poly(&c, &[(1, &[2, 1])])];
        let h = poly(&c, &[(1, &[0, 1])]);
        let s = saturation(&c, &gens, &h, &mut budget).unwrap();
        assert_eq!(s.gens, vec![poly(&c, &[(1, &[2, 0])])]);
        assert_eq!(s.steps, 1);
        // Saturating an already-saturated ideal takes zero steps.
        let s2 = saturation(&c, &s.gens, &h, &mut budget).unwrap();
        assert_eq!(s2.steps, 0);
        // The localization route gives the same stable basis in one pass.
        let fast = saturation_localized(&c, &gens, &h, &mut budget).unwrap();
        assert_eq!(fast, s.gens);
    }

    #[test]
    fn localized_saturation_matches_iterated_quotients_on_a_mixed_ideal() {
        let c = ctx(3);
        let mut budget = Budget::default();
        // I = (z·x, z·y², x²−y²): saturating by z keeps the z-free component.
        let gens = [
            poly(&c, &[(1, &[1, 0, 1])]),
            poly(&c, &[(1, &[0, 2, 1])]),
            poly(&c, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0])]),
        ];
        let h = poly(&c, &[(1, &[0, 0, 1])]);
        let slow = saturation(&c, &gens, &h, &mut budget).unwrap();
        let fast = saturation_localized(&c, &gens, &h, &mut budget).unwrap();
        assert_eq!(fast, slow.gens);
        // x and y² are in the saturation (z·x and z·y² are generators).
        assert!(ideal_contains(&c, &fast, &poly(&c, &[(1, &[1, 0, 0])]), &mut budget).unwrap());
        assert!(ideal_contains(&c, &fast, &poly(&c, &[(1, &[0, 2, 0])]), &mut budget).unwrap());
    }

    #[test]
    fn elimination_projects_a_parametrized_curve() {
        let c = ctx(3);
        let mut budget = Budget::default();
        // I = (x − y², y − z): eliminate x to get the (y, z)-relations.
        let gens = [
            poly(&c, &[(1, &[1, 0, 0]), (-1, &[0, 2, 0])]),
            poly(&c, &[(1, &[0, 1, 0]), (-1, &[0, 0, 1])]),
        ];
        let e = eliminate(&c, &gens, 1, &mut budget).unwrap();
        assert_eq!(e, vec![poly(&c, &[(1, &[0, 1, 0]), (-1, &[0, 0, 1])])]);
        // Membership: x·y − y³ ... substitute x = y²: y³ − y³ = 0, so it is inside.
        let gb = groebner(&c, &gens, &mut budget).unwrap();
        assert!(is_groebner_basis(&c, &gb.polys, &mut budget).unwrap());
        let member = poly(&c, &[(1, &[1, 1, 0]), (-1, &[0, 3, 0])]);
        assert!(ideal_contains(&c, &gb.polys, &member, &mut budget).unwrap());
        let non_member = poly(&c, &[(1, &[1, 0, 0])]);
        assert!(!ideal_contains(&c, &gb.polys, &non_member, &mut budget).unwrap());
    }

    #[test]
    fn rational_point_extraction_normalizes_the_first_coordinate() {
        let c = ctx(3);
        let mut budget = Budget::default();
        // The point (2 : −3 : 5).
        let gens = [
            poly(&c, &[(3, &[1, 0, 0]), (2, &[0, 1, 0])]),
            poly(&c, &[(5, &[1, 0, 0]), (-2, &[0, 0, 1])]),
        ];
        let gb = groebner(&c, &gens, &mut budget).unwrap();
        let p = extract_rational_point(&c, &gb).expect("a single rational point");
        assert_eq!(p, vec![Rat::int(1), Rat::ratio(-3, 2), Rat::ratio(5, 2)]);
        // A one-dimensional ideal has no unique point.
        let line_only = groebner(&c, &gens[..1], &mut budget).unwrap();
        assert!(extract_rational_point(&c, &line_only).is_none());
    }
}
