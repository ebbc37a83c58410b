//! Named quartic curves used across tests, benchmarks, and documentation examples.
//!
//! Each constructor is generic over the coefficient field; rational constants are
//! injected through the field, so the same fixture works over Q and over Z/p.

use crate::ring::field::{Field, Rat};
use crate::ring::monomial::Order;
use crate::ring::poly::Ctx;
use crate::ring::ternary::TernaryForm;

/// Context helper: ternary forms live in 3 variables; the order is irrelevant
/// for dense forms but a context is needed for arithmetic.
pub fn form_ctx<F: Field>(field: F) -> Ctx<F> {
    Ctx::new(field, 3, Order::Grevlex)
}

fn line<F: Field>(ctx: &Ctx<F>, a: i64, b: i64, c: i64) -> TernaryForm<F> {
    TernaryForm::line(ctx.field.from_i64(a), ctx.field.from_i64(b), ctx.field.from_i64(c))
}

/// The quartic Σᵢ wᵢ·Π_{j≠i} lⱼ spanned by the five 3-line products of a pentalateral.
/// Every such quartic passes through all 10 pairwise intersection points of the lines,
/// so it is inscribed in the pentalateral by construction.
pub fn inscribed_quartic<F: Field>(
    ctx: &Ctx<F>,
    lines: &[TernaryForm<F>; 5],
    weights: &[F::Elem; 5],
) -> TernaryForm<F> {
    let mut f = TernaryForm::zero(ctx, 4);
    for i in 0..5 {
        let mut prod = TernaryForm::line(ctx.field.zero(), ctx.field.zero(), ctx.field.zero());
        let mut first = true;
        for (j, l) in lines.iter().enumerate() {
            if j == i {
                continue;
            }
            prod = if first { l.clone() } else { prod.mul(ctx, l) };
            first = false;
        }
        f = f.add(ctx, &prod.scale(ctx, &weights[i]));
    }
    f
}

/// The pentalateral {x₀, x₁, x₂, x₀+x₁+x₂, x₀+2x₁+3x₂}: five lines in general
/// position with small integer coordinates.
pub fn standard_pentalateral<F: Field>(ctx: &Ctx<F>) -> [TernaryForm<F>; 5] {
    [
        line(ctx, 1, 0, 0),
        line(ctx, 0, 1, 0),
        line(ctx, 0, 0, 1),
        line(ctx, 1, 1, 1),
        line(ctx, 1, 2, 3),
    ]
}

/// The Lüroth quartic inscribed in the standard pentalateral with unit weights:
/// x₀x₁x₂(x₀+x₁+x₂) + (x₀+2x₁+3x₂)(x₀x₁x₂ + (x₀x₁+x₀x₂+x₁x₂)(x₀+x₁+x₂)).
/// Its White–Miller quartic has exactly 29 singular points, so it carries a
/// unique pentalateral theta.
pub fn standard_luroth_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let lines = standard_pentalateral(ctx);
    let one = ctx.field.one();
    inscribed_quartic(ctx, &lines, &[one.clone(), one.clone(), one.clone(), one.clone(), one])
}

/// Klein's quartic x₀³x₁ + x₁³x₂ + x₂³x₀: not Lüroth; its White–Miller quartic has
/// exactly the 28 bitangent singular points.
pub fn klein_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let x = line(ctx, 1, 0, 0);
    let y = line(ctx, 0, 1, 0);
    let z = line(ctx, 0, 0, 1);
    x.pow(ctx, 3)
        .mul(ctx, &y)
        .add(ctx, &y.pow(ctx, 3).mul(ctx, &z))
        .add(ctx, &z.pow(ctx, 3).mul(ctx, &x))
}

/// Edge's quartic 25(x₀⁴+x₁⁴+x₂⁴) − 34(x₀²x₁²+x₀²x₂²+x₁²x₂²): the singular locus of
/// its White–Miller quartic has degree 40 — the 28 bitangents plus 12 smooth-conic
/// points, so it has 12 distinct pentalateral thetas.
pub fn edge_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let x = line(ctx, 1, 0, 0);
    let y = line(ctx, 0, 1, 0);
    let z = line(ctx, 0, 0, 1);
    let quartics = x.pow(ctx, 4).add(ctx, &y.pow(ctx, 4)).add(ctx, &z.pow(ctx, 4));
    let x2 = x.pow(ctx, 2);
    let y2 = y.pow(ctx, 2);
    let z2 = z.pow(ctx, 2);
    let mixed = x2.mul(ctx, &y2).add(ctx, &x2.mul(ctx, &z2)).add(ctx, &y2.mul(ctx, &z2));
    quartics
        .scale(ctx, &ctx.field.from_i64(25))
        .add(ctx, &mixed.scale(ctx, &ctx.field.from_i64(-34)))
}

/// The quartic x₂²(x₀²+x₁²) + x₂(x₀³+x₁³) − x₀³x₁ + ½x₀²x₁² − x₀x₁³: the singular
/// locus of its White–Miller quartic is a conic of singular conics plus 8 isolated
/// smooth-conic points, so it has 8 distinct pentalateral thetas.
pub fn eight_theta_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let x = line(ctx, 1, 0, 0);
    let y = line(ctx, 0, 1, 0);
    let z = line(ctx, 0, 0, 1);
    let half = ctx.field.from_rational(&Rat::ratio(1, 2)).expect("odd characteristic");
    let z2 = z.pow(ctx, 2);
    let x2 = x.pow(ctx, 2);
    let y2 = y.pow(ctx, 2);
    z2.mul(ctx, &x2.add(ctx, &y2))
        .add(ctx, &z.mul(ctx, &x.pow(ctx, 3).add(ctx, &y.pow(ctx, 3))))
        .add(ctx, &x.pow(ctx, 3).mul(ctx, &y).scale(ctx, &ctx.field.from_i64(-1)))
        .add(ctx, &x2.mul(ctx, &y2).scale(ctx, &half))
        .add(ctx, &x.mul(ctx, &y.pow(ctx, 3)).scale(ctx, &ctx.field.from_i64(-1)))
}

/// A pentalateral with three concurrent lines (x₀, x₁, x₀+x₁ all pass through
/// (0:0:1)); the inscribed quartic is a singular Lüroth quartic whose White–Miller
/// quartic is singular along a conic of reducible conics plus seven smooth-conic
/// points.
pub fn concurrent_pentalateral_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let lines = [
        line(ctx, 1, 0, 0),
        line(ctx, 0, 1, 0),
        line(ctx, 1, 1, 0),
        line(ctx, 0, 0, 1),
        line(ctx, 1, 2, 3),
    ];
    let one = ctx.field.one();
    inscribed_quartic(ctx, &lines, &[one.clone(), one.clone(), one.clone(), one.clone(), one])
}

/// The desmic quartic family
/// ((a²−2mbc)x₀ + (b²−2mca)x₁ + (c²−2mab)x₂)·x₀x₁x₂
///   − m²(a²x₀⁴ + b²x₁⁴ + c²x₂⁴ − 2bcx₁²x₂² − 2cax₀²x₂² − 2abx₀²x₁²).
/// For generic parameters rank L_f = 14 and the White–Miller quartic degenerates to a
/// double hyperquadric.
pub fn desmic_quartic<F: Field>(ctx: &Ctx<F>, a: i64, b: i64, c: i64, m: i64) -> TernaryForm<F> {
    let x = line(ctx, 1, 0, 0);
    let y = line(ctx, 0, 1, 0);
    let z = line(ctx, 0, 0, 1);
    let l = line(ctx, a * a - 2 * m * b * c, b * b - 2 * m * c * a, c * c - 2 * m * a * b);
    let cubic_part = l.mul(ctx, &x).mul(ctx, &y).mul(ctx, &z);
    let x2 = x.pow(ctx, 2);
    let y2 = y.pow(ctx, 2);
    let z2 = z.pow(ctx, 2);
    let mut quartic_part = x.pow(ctx, 4).scale(ctx, &ctx.field.from_i64(a * a));
    quartic_part = quartic_part.add(ctx, &y.pow(ctx, 4).scale(ctx, &ctx.field.from_i64(b * b)));
    quartic_part = quartic_part.add(ctx, &z.pow(ctx, 4).scale(ctx, &ctx.field.from_i64(c * c)));
    quartic_part =
        quartic_part.add(ctx, &y2.mul(ctx, &z2).scale(ctx, &ctx.field.from_i64(-2 * b * c)));
    quartic_part =
        quartic_part.add(ctx, &x2.mul(ctx, &z2).scale(ctx, &ctx.field.from_i64(-2 * c * a)));
    quartic_part =
        quartic_part.add(ctx, &x2.mul(ctx, &y2).scale(ctx, &ctx.field.from_i64(-2 * a * b)));
    cubic_part.add(ctx, &quartic_part.scale(ctx, &ctx.field.from_i64(-m * m)))
}

/// A Caporali quartic: the sum of four 4-th powers x₀⁴ + x₁⁴ + x₂⁴ + (x₀+x₁+x₂)⁴.
/// Rank L_f = 14 and the White–Miller quartic is a double hyperquadric.
pub fn caporali_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let fourth = |l: &TernaryForm<F>| l.pow(ctx, 4);
    fourth(&line(ctx, 1, 0, 0))
        .add(ctx, &fourth(&line(ctx, 0, 1, 0)))
        .add(ctx, &fourth(&line(ctx, 0, 0, 1)))
        .add(ctx, &fourth(&line(ctx, 1, 1, 1)))
}

/// The cuspidal quartic
/// x₀⁴ + 2x₁⁴ − 34x₀²x₁² + (x₀²x₂² + x₁²x₂² + 2x₀x₁x₂²) + 41x₀³x₁ + 51x₁³x₂ + 21x₀x₁³ − 11x₁x₂³,
/// singular with a cusp at (0:0:1); not Lüroth — its White–Miller quartic has exactly
/// 28 singular points.
pub fn cuspidal_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let x = line(ctx, 1, 0, 0);
    let y = line(ctx, 0, 1, 0);
    let z = line(ctx, 0, 0, 1);
    let c = |n: i64| ctx.field.from_i64(n);
    let x2 = x.pow(ctx, 2);
    let y2 = y.pow(ctx, 2);
    let z2 = z.pow(ctx, 2);
    x.pow(ctx, 4)
        .add(ctx, &y.pow(ctx, 4).scale(ctx, &c(2)))
        .add(ctx, &x2.mul(ctx, &y2).scale(ctx, &c(-34)))
        .add(ctx, &x2.mul(ctx, &z2))
        .add(ctx, &y2.mul(ctx, &z2))
        .add(ctx, &x.mul(ctx, &y).mul(ctx, &z2).scale(ctx, &c(2)))
        .add(ctx, &x.pow(ctx, 3).mul(ctx, &y).scale(ctx, &c(41)))
        .add(ctx, &y.pow(ctx, 3).mul(ctx, &z).scale(ctx, &c(51)))
        .add(ctx, &x.mul(ctx, &y.pow(ctx, 3)).scale(ctx, &c(21)))
        .add(ctx, &y.mul(ctx, &z.pow(ctx, 3)).scale(ctx, &c(-11)))
}

/// The double conic (x₀² + x₁² + x₂²)²: the singular locus of its White–Miller
/// quartic is 2-dimensional.
pub fn double_conic_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let x = line(ctx, 1, 0, 0);
    let y = line(ctx, 0, 1, 0);
    let z = line(ctx, 0, 0, 1);
    x.pow(ctx, 2).add(ctx, &y.pow(ctx, 2)).add(ctx, &z.pow(ctx, 2)).pow(ctx, 2)
}

/// The Fermat quartic x₀⁴ + x₁⁴ + x₂⁴.
pub fn fermat_quartic<F: Field>(ctx: &Ctx<F>) -> TernaryForm<F> {
    let fourth = |l: &TernaryForm<F>| l.pow(ctx, 4);
    fourth(&line(ctx, 1, 0, 0))
        .add(ctx, &fourth(&line(ctx, 0, 1, 0)))
        .add(ctx, &fourth(&line(ctx, 0, 0, 1)))
}
