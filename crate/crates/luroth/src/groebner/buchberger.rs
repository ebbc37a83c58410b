//! Buchberger's algorithm with sugar-degree pair selection, Gebauer–Möller pair
//! elimination, content normalization per reduction, and a hard step budget.

use super::{Budget, GroebnerError};
use crate::ring::field::Field;
use crate::ring::monomial::Monomial;
use crate::ring::poly::{Ctx, MultiPoly};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Work counters for one Gröbner run; part of the deterministic report surface.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// S-pairs actually reduced (after pair elimination).
    pub spairs_reduced: u64,
    /// S-pairs discarded by the coprimality and chain criteria.
    pub spairs_skipped: u64,
    /// Leading-term cancellations performed.
    pub reduction_steps: u64,
    /// S-pairs that reduced to zero.
    pub zero_reductions: u64,
    /// Final basis size after interreduction.
    pub basis_size: usize,
}

/// A reduced, monic Gröbner basis; generators sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    pub polys: Vec<MultiPoly<F>>,
    pub stats: Stats,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading().expect("basis polys are nonzero").0).collect()
    }

    /// True when the basis is the single constant 1 (the unit ideal).
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].leading().map(|(m, _)| m.is_one()).unwrap_or(false)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }
}

/// Keep coefficient growth in check without changing the ideal: over Q, rescale to a
/// primitive integer polynomial; over a prime field, make it monic. Both give a
/// deterministic representative of the scalar ray.
pub fn content_normalize<F: Field>(ctx: &Ctx<F>, p: &MultiPoly<F>) -> MultiPoly<F> {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    if ctx.field.characteristic().is_some() {
        return p.monic(ctx);
    }
    // Characteristic zero: all elements are exact rationals. Clear denominators and
    // divide by the numerator gcd, making the leading coefficient positive.
    let rationals: Vec<num_rational::BigRational> = p
        .terms
        .iter()
        .map(|(_, c)| ctx.field.to_rational(c).expect("characteristic-zero field"))
        .collect();
    let mut den_lcm = num_bigint::BigInt::one();
    for r in &rationals {
        den_lcm = den_lcm.lcm(r.denom());
    }
    let mut num_gcd = num_bigint::BigInt::zero();
    for r in &rationals {
        num_gcd = num_gcd.gcd(&(r.numer() * &den_lcm / r.denom()));
    }
    if num_gcd.is_zero() {
        return MultiPoly::zero();
    }
    let lead_sign = rationals[0].numer().sign();
    let mut scale = num_rational::BigRational::new(den_lcm, num_gcd);
    if lead_sign == num_bigint::Sign::Minus {
        scale = -scale;
    }
    let c = ctx.field.from_rational(&scale).expect("characteristic zero accepts rationals");
    p.scale(ctx, &c)
}

/// Full normal form of p against the basis, charging one budget step per
/// leading-term cancellation. The basis slice must hold nonzero polynomials.
pub fn normal_form<F: Field>(
    ctx: &Ctx<F>,
    p: &MultiPoly<F>,
    basis: &[MultiPoly<F>],
    budget: &mut Budget,
) -> Result<MultiPoly<F>, GroebnerError> {
    let mut tail = p.clone();
    let mut out_terms: Vec<(Monomial, F::Elem)> = Vec::new();
    'outer: while let Some((m, c)) = tail.leading().map(|(m, c)| (*m, c.clone())) {
        for g in basis {
            let (gm, gc) = g.leading().expect("nonzero basis element");
            if let Some(q) = gm.divide_into(&m) {
                budget.charge(1)?;
                let factor = ctx.field.div(&c, gc).expect("leading coefficients are nonzero");
                tail = tail.sub(ctx, &g.mul_term(ctx, &q, &factor));
                continue 'outer;
            }
        }
        // Irreducible leading term: move it to the output.
        tail = tail.sub(ctx, &MultiPoly::term(ctx, m, c.clone()));
        out_terms.push((m, c));
    }
    // Terms were peeled in descending order.
    Ok(MultiPoly { terms: out_terms })
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u16,
}

/// Deterministic selection key: sugar degree first, then the pair's lcm in the active
/// order, then indices.
fn pair_cmp<F: Field>(ctx: &Ctx<F>, a: &Pair, b: &Pair) -> Ordering {
    a.sugar
        .cmp(&b.sugar)
        .then_with(|| ctx.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

/// The Gebauer–Möller update: merge the pairs of a new basis element `t` into the
/// pending queue, applying the chain rule to old pairs and the strict-divisibility,
/// duplicate-lcm, and coprimality rules to new ones.
fn update_pairs<F: Field>(
    ctx: &Ctx<F>,
    pending: &mut Vec<Pair>,
    basis: &[MultiPoly<F>],
    sugars: &[u16],
    t: usize,
    stats: &mut Stats,
) {
    let lm = |k: usize| basis[k].leading().expect("nonzero").0;
    let lm_t = lm(t);

    // Chain rule on old pairs: (i, j) is redundant once lm_t divides lcm(i, j)
    // strictly away from both of the new lcms.
    pending.retain(|p| {
        let keep = !(lm_t.divides(&p.lcm)
            && p.lcm != lm(p.i).lcm(&lm_t)
            && p.lcm != lm(p.j).lcm(&lm_t));
        if !keep {
            stats.spairs_skipped += 1;
        }
        keep
    });

    // Candidate new pairs.
    let mut cand: Vec<Pair> = (0..t)
        .map(|i| {
            let l = lm(i).lcm(&lm_t);
            let sugar = (sugars[i] + (l.deg() - lm(i).deg()))
                .max(sugars[t] + (l.deg() - lm_t.deg()));
            Pair { i, j: t, lcm: l, sugar }
        })
        .collect();

    // Strict-divisibility rule: drop a candidate whose lcm is strictly divisible by
    // another candidate's lcm.
    let lcms: Vec<Monomial> = cand.iter().map(|p| p.lcm).collect();
    cand = cand
        .into_iter()
        .filter(|p| {
            let drop = lcms.iter().any(|other| other != &p.lcm && other.divides(&p.lcm));
            if drop {
                stats.spairs_skipped += 1;
            }
            !drop
        })
        .collect();

    // Group the survivors by equal lcm: a group containing a coprime pair dies
    // entirely; otherwise its lowest-index member survives.
    cand.sort_by(|a, b| ctx.cmp(&a.lcm, &b.lcm).then_with(|| a.i.cmp(&b.i)));
    let mut kept: Vec<Pair> = Vec::new();
    let mut idx = 0;
    while idx < cand.len() {
        let mut end = idx + 1;
        while end < cand.len() && cand[end].lcm == cand[idx].lcm {
            end += 1;
        }
        let group = &cand[idx..end];
        let coprime = group.iter().any(|p| lm(p.i).is_coprime(&lm_t));
        if coprime {
            stats.spairs_skipped += group.len() as u64;
        } else {
            kept.push(group[0].clone());
            stats.spairs_skipped += (group.len() - 1) as u64;
        }
        idx = end;
    }
    pending.extend(kept);
}

/// Buchberger's algorithm: a reduced, monic Gröbner basis of the input generators
/// under the context's monomial order.
pub fn groebner<F: Field>(
    ctx: &Ctx<F>,
    gens: &[MultiPoly<F>],
    budget: &mut Budget,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    let mut stats = Stats::default();
    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    let mut sugars: Vec<u16> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();

    let add = |p: MultiPoly<F>,
               sugar_hint: Option<u16>,
               basis: &mut Vec<MultiPoly<F>>,
               sugars: &mut Vec<u16>,
               pending: &mut Vec<Pair>,
                   stats: &mut Stats| {
        let p = content_normalize(ctx, &p);
        if p.is_zero() {
            return;
        }
        let sugar = sugar_hint.unwrap_or_else(|| p.total_deg().unwrap_or(0));
        basis.push(p);
        sugars.push(sugar.max(basis.last().unwrap().total_deg().unwrap_or(0)));
        let t = basis.len() - 1;
        update_pairs(ctx, pending, basis, sugars, t, stats);
    };

    // Seed with the nonzero generators in deterministic input order.
    for g in gens {
        if !g.is_zero() {
            let g = g.reorder(ctx);
            add(g, None, &mut basis, &mut sugars, &mut pending, &mut stats);
        }
    }

    while !pending.is_empty() {
        // Deterministic minimum extraction.
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| pair_cmp(ctx, a, b))
            .map(|(k, _)| k)
            .expect("nonempty");
        let pair = pending.swap_remove(best);

        let (gi, gj) = (&basis[pair.i], &basis[pair.j]);
        let (mi, ci) = gi.leading().expect("nonzero");
        let (mj, cj) = gj.leading().expect("nonzero");
        let qi = mi.divide_into(&pair.lcm).expect("lcm divisible");
        let qj = mj.divide_into(&pair.lcm).expect("lcm divisible");
        let spoly = gi
            .mul_term(ctx, &qi, &ctx.field.inv(ci).expect("nonzero"))
            .sub(ctx, &gj.mul_term(ctx, &qj, &ctx.field.inv(cj).expect("nonzero")));
        stats.spairs_reduced += 1;

        let before = budget.used();
        let nf = normal_form(ctx, &spoly, &basis, budget)?;
        stats.reduction_steps += budget.used() - before;
        if nf.is_zero() {
            stats.zero_reductions += 1;
        } else {
            add(nf, Some(pair.sugar), &mut basis, &mut sugars, &mut pending, &mut stats);
        }
    }

    // Interreduce: first drop elements whose leading monomial is divisible by
    // another's, then replace each survivor by its normal form against the others.
    let mut keep: Vec<MultiPoly<F>> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let (m, _) = p.leading().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            if i == j {
                return false;
            }
            let (mq, _) = q.leading().expect("nonzero");
            mq.divides(m) && (mq != m || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut reduced: Vec<MultiPoly<F>> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<MultiPoly<F>> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        let before = budget.used();
        let nf = normal_form(ctx, &keep[i], &others, budget)?;
        stats.reduction_steps += budget.used() - before;
        if !nf.is_zero() {
            reduced.push(nf.monic(ctx));
        }
    }
    reduced.sort_by(|a, b| {
        ctx.cmp(&a.leading().expect("nonzero").0, &b.leading().expect("nonzero").0)
    });
    stats.basis_size = reduced.len();
    Ok(GroebnerBasis { polys: reduced, stats })
}

/// The Buchberger certificate: every S-polynomial of the given set reduces to zero
/// against it. No elimination criteria are applied — each pair is reduced honestly.
pub fn is_groebner_basis<F: Field>(
    ctx: &Ctx<F>,
    polys: &[MultiPoly<F>],
    budget: &mut Budget,
) -> Result<bool, GroebnerError> {
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            let (mi, ci) = polys[i].leading().expect("nonzero");
            let (mj, cj) = polys[j].leading().expect("nonzero");
            let l = mi.lcm(mj);
            let qi = mi.divide_into(&l).expect("divides");
            let qj = mj.divide_into(&l).expect("divides");
            let s = polys[i]
                .mul_term(ctx, &qi, &ctx.field.inv(ci).expect("nonzero"))
                .sub(ctx, &polys[j].mul_term(ctx, &qj, &ctx.field.inv(cj).expect("nonzero")));
            if !normal_form(ctx, &s, polys, budget)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::field::{Fp, Rat};
    use crate::ring::monomial::Order;
    use crate::ring::poly::Ctx;

    fn qctx(n: usize) -> Ctx<Rat> {
        Ctx::new(Rat, n, Order::Grevlex)
    }

    fn poly(ctx: &Ctx<Rat>, terms: &[(i64, &[u16])]) -> MultiPoly<Rat> {
        MultiPoly::from_terms(
            ctx,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exps(e), Rat::int(*c)))
                .collect(),
        )
    }

    #[test]
    fn textbook_basis_for_a_twisted_pair() {
        // I = (x² − y, x³ − z) in grevlex: classical example with known reduced basis
        // {x² − y, xy − z, xz − y², y³ − z²}... computed: verify via the certificate
        // and ideal membership instead of pinning the whole list.
        let ctx = qctx(3);
        let g1 = poly(&ctx, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]);
        let g2 = poly(&ctx, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])]);
        let mut budget = Budget::default();
        let gb = groebner(&ctx, &[g1.clone(), g2.clone()], &mut budget).unwrap();
        assert!(is_groebner_basis(&ctx, &gb.polys, &mut budget).unwrap());
        // x·g1 − g2 = z − xy must reduce to zero.
        let t = poly(&ctx, &[(1, &[1, 1, 0]), (-1, &[0, 0, 1])]);
        assert!(normal_form(&ctx, &t, &gb.polys, &mut budget).unwrap().is_zero());
        // Reduced bases are monic with sorted leading terms.
        for w in gb.polys.windows(2) {
            let (a, _) = w[0].leading().unwrap();
            let (b, _) = w[1].leading().unwrap();
            assert!(ctx.cmp(a, b) == std::cmp::Ordering::Less);
        }
        for p in &gb.polys {
            assert_eq!(p.leading().unwrap().1.clone(), Rat::int(1));
        }
    }

    #[test]
    fn katsura_3_over_a_prime_field_certifies() {
        // Katsura-3: u0 + 2u1 + 2u2 + 2u3 = 1 homogenized relations; standard
        // benchmark with a 0-dimensional affine solution set.
        let p = Fp::new(65521).unwrap();
        let ctx = Ctx::new(p.clone(), 4, Order::Grevlex);
        let t = |c: i64, e: &[u16]| (Monomial::from_exps(e), p.reduce_i64(c));
        let f1 = MultiPoly::from_terms(
            &ctx,
            vec![
                t(1, &[1, 0, 0, 0]),
                t(2, &[0, 1, 0, 0]),
                t(2, &[0, 0, 1, 0]),
                t(2, &[0, 0, 0, 1]),
                t(-1, &[0, 0, 0, 0]),
            ],
        );
        let f2 = MultiPoly::from_terms(
            &ctx,
            vec![
                t(1, &[2, 0, 0, 0]),
                t(2, &[0, 2, 0, 0]),
                t(2, &[0, 0, 2, 0]),
                t(2, &[0, 0, 0, 2]),
                t(-1, &[1, 0, 0, 0]),
            ],
        );
        let f3 = MultiPoly::from_terms(
            &ctx,
            vec![
                t(2, &[1, 1, 0, 0]),
                t(2, &[0, 1, 1, 0]),
                t(2, &[0, 0, 1, 1]),
                t(-1, &[0, 1, 0, 0]),
            ],
        );
        let f4 = MultiPoly::from_terms(
            &ctx,
            vec![
                t(1, &[0, 2, 0, 0]),
                t(2, &[1, 0, 1, 0]),
                t(2, &[0, 1, 0, 1]),
                t(-1, &[0, 0, 1, 0]),
            ],
        );
        let mut budget = Budget::default();
        let gb = groebner(&ctx, &[f1, f2, f3, f4], &mut budget).unwrap();
        assert!(is_groebner_basis(&ctx, &gb.polys, &mut budget).unwrap());
        assert!(gb.stats.basis_size >= 4);
    }

    #[test]
    fn budget_overrun_is_an_error_not_a_hang() {
        let ctx = qctx(3);
        let g1 = poly(&ctx, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]);
        let g2 = poly(&ctx, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])]);
        let mut tiny = Budget::new(0);
        let err = groebner(&ctx, &[g1.clone(), g2.clone()], &mut tiny).unwrap_err();
        assert_eq!(err, GroebnerError::BudgetExceeded { steps: 0 });
        // The same input completes under the default budget.
        let mut roomy = Budget::default();
        assert!(groebner(&ctx, &[g1, g2], &mut roomy).is_ok());
    }

    #[test]
    fn unit_ideal_reduces_to_one() {
        let ctx = qctx(2);
        let g1 = poly(&ctx, &[(1, &[1, 0]), (1, &[0, 0])]); // x + 1
        let g2 = poly(&ctx, &[(1, &[1, 0])]); // x
        let mut budget = Budget::default();
        let gb = groebner(&ctx, &[g1, g2], &mut budget).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.polys.len(), 1);
    }

    #[test]
    fn content_normalization_gives_primitive_integer_representatives() {
        let ctx = qctx(2);
        let p = MultiPoly::from_terms(
            &ctx,
            vec![
                (Monomial::from_exps(&[2, 0]), Rat::ratio(-3, 2)),
                (Monomial::from_exps(&[0, 1]), Rat::ratio(9, 4)),
            ],
        );
        let n = content_normalize(&ctx, &p);
        // −3/2 x² + 9/4 y → ×(−4/3) → 2x² − 3y.
        assert_eq!(
            n,
            MultiPoly::from_terms(
                &ctx,
                vec![
                    (Monomial::from_exps(&[2, 0]), Rat::int(2)),
                    (Monomial::from_exps(&[0, 1]), Rat::int(-3)),
                ]
            )
        );
    }

    #[test]
    fn same_input_same_basis_bytes() {
        let ctx = qctx(3);
        let g1 = poly(&ctx, &[(3, &[2, 1, 0]), (-1, &[0, 0, 3]), (2, &[1, 0, 1])]);
        let g2 = poly(&ctx, &[(1, &[0, 2, 1]), (5, &[1, 1, 1]), (-2, &[3, 0, 0])]);
        let g3 = poly(&ctx, &[(1, &[1, 0, 2]), (1, &[0, 1, 0])]);
        let mut b1 = Budget::default();
        let mut b2 = Budget::default();
        let gb1 = groebner(&ctx, &[g1.clone(), g2.clone(), g3.clone()], &mut b1).unwrap();
        let gb2 = groebner(&ctx, &[g1, g2, g3], &mut b2).unwrap();
        assert_eq!(gb1, gb2);
        assert_eq!(b1.used(), b2.used());
    }
}
