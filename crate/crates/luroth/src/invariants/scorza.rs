//! The Scorza map of plane quartics: S(f) = {x : the polar cubic of f at x has
//! vanishing Aronhold invariant}. On Clebsch quartics Σlᵢ⁴ it admits a closed form
//! Σᵢ kᵢ·Π_{j≠i} lⱼ with kᵢ the product of the determinants of the four line triples
//! avoiding lᵢ, which inscribes the pentalateral l₀,…,l₄ into S(f).

use super::aronhold::{aronhold, CUBIC_COEFFS};
use crate::exactla::SymMatrix;
use crate::ring::field::Field;
use crate::ring::poly::Ctx;
use crate::ring::ternary::{plain_exponents, TernaryForm};

/// Plain coefficients of the polar cubic P_x(f) of a quartic at the point x,
/// normalized so that P_x(f)(x) = f(x).
pub fn polar_cubic<F: Field>(
    ctx: &Ctx<F>,
    f: &TernaryForm<F>,
    x: &[F::Elem; 3],
) -> Vec<F::Elem> {
    let forms = polar_cubic_linear_forms(ctx, f);
    forms.iter().map(|l| l.eval(ctx, &x[0], &x[1], &x[2])).collect()
}

/// The ten plain coefficients of the polar cubic as linear forms in the point x:
/// coefficient w of P_x(f) is (1/4)·Σ_a x_a·(w_a + 1)·f_plain(w + e_a).
pub fn polar_cubic_linear_forms<F: Field>(
    ctx: &Ctx<F>,
    f: &TernaryForm<F>,
) -> Vec<TernaryForm<F>> {
    assert_eq!(f.degree, 4);
    let fld = &ctx.field;
    let quarter = fld.inv(&fld.from_i64(4)).expect("characteristic > 3");
    (0..CUBIC_COEFFS)
        .map(|w| {
            let (i, j, k) = plain_exponents(3, w);
            let coeff_for = |a: usize| -> F::Elem {
                let (wi, wj, wk) = match a {
                    0 => (i + 1, j, k),
                    1 => (i, j + 1, k),
                    _ => (i, j, k + 1),
                };
                let wa1 = fld.from_i64(match a {
                    0 => i as i64 + 1,
                    1 => j as i64 + 1,
                    _ => k as i64 + 1,
                });
                let base = f.plain(wi, wj, wk).clone();
                fld.mul(&quarter, &fld.mul(&wa1, &base))
            };
            TernaryForm::line(coeff_for(0), coeff_for(1), coeff_for(2))
        })
        .collect()
}

/// Value of the Scorza quartic of f at a point.
pub fn scorza_at<F: Field>(ctx: &Ctx<F>, f: &TernaryForm<F>, x: &[F::Elem; 3]) -> F::Elem {
    aronhold(ctx, &polar_cubic(ctx, f, x))
}

/// The Scorza quartic S(f) as a ternary quartic, expanded symbolically by pushing the
/// linear-form polar coefficients through the Aronhold table.
pub fn scorza_map<F: Field>(ctx: &Ctx<F>, f: &TernaryForm<F>) -> TernaryForm<F> {
    let forms = polar_cubic_linear_forms(ctx, f);
    let tab = super::aronhold::table();
    let mut acc = TernaryForm::zero(ctx, 4);
    for (exps, coeff) in &tab.terms {
        let mut term = TernaryForm::from_plain(0, vec![ctx.field.from_i64(*coeff)]);
        for (w, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                term = term.mul(ctx, &forms[w]);
            }
        }
        acc = acc.add(ctx, &term);
    }
    acc
}

/// Determinant of the 3×3 coefficient matrix of three lines.
pub fn line_triple_det<F: Field>(
    ctx: &Ctx<F>,
    a: &TernaryForm<F>,
    b: &TernaryForm<F>,
    c: &TernaryForm<F>,
) -> F::Elem {
    SymMatrix::<F>::from_rows(vec![a.coeffs.clone(), b.coeffs.clone(), c.coeffs.clone()])
        .det(&ctx.field)
}

/// Closed form of the Scorza quartic of Σᵢ lᵢ⁴ over a pentalateral, up to scale:
/// Σᵢ kᵢ·Π_{j≠i} lⱼ with kᵢ = Π_{p<q<r, i∉{p,q,r}} det(l_p, l_q, l_r).
pub fn scorza_closed_form<F: Field>(ctx: &Ctx<F>, lines: &[TernaryForm<F>]) -> TernaryForm<F> {
    assert_eq!(lines.len(), 5);
    let fld = &ctx.field;
    let mut acc = TernaryForm::zero(ctx, 4);
    for i in 0..5 {
        let mut k = fld.one();
        let others: Vec<usize> = (0..5).filter(|&j| j != i).collect();
        for p in 0..4 {
            for q in (p + 1)..4 {
                for r in (q + 1)..4 {
                    let d = line_triple_det(
                        ctx,
                        &lines[others[p]],
                        &lines[others[q]],
                        &lines[others[r]],
                    );
                    k = fld.mul(&k, &d);
                }
            }
        }
        let mut prod = TernaryForm::from_plain(0, vec![k]);
        for &j in &others {
            prod = prod.mul(ctx, &lines[j]);
        }
        acc = acc.add(ctx, &prod);
    }
    acc
}

/// The degree-10 tangency determinant of five lines: the 6×6 determinant whose first
/// row is (1,0,0,0,0,0) and whose remaining rows are the degree-2 monomial vectors of
/// the lines. It vanishes exactly when the line x₀ = 0 lies on the conic through the
/// five line-points of the dual plane — that is, when x₀ is tangent to the conic
/// inscribed in the pentalateral.
pub fn tangency_det<F: Field>(ctx: &Ctx<F>, lines: &[TernaryForm<F>]) -> F::Elem {
    assert_eq!(lines.len(), 5);
    let fld = &ctx.field;
    let mut rows = Vec::with_capacity(6);
    let mut first = vec![fld.zero(); 6];
    first[0] = fld.one();
    rows.push(first);
    for l in lines {
        let p = [l.coeffs[0].clone(), l.coeffs[1].clone(), l.coeffs[2].clone()];
        rows.push(super::d2_monomials(ctx, &p).to_vec());
    }
    SymMatrix::<F>::from_rows(rows).det(fld)
}
