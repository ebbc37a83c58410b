//! Binary forms in the normalized (binomial) basis, and restriction of ternary forms
//! to a line.
//!
//! A degree-d binary form is stored as the vector (f₀, …, f_d) with
//! f = Σ C(d,i) fᵢ x^{d−i} y^i. In this basis the apolarity pairing of two degree-d
//! forms is Σ (−1)^i C(d,i) fᵢ g_{d−i}, and the pairing of two d-th powers of linear
//! forms is the d-th power of the 2×2 determinant of their coefficients.

use super::field::Field;
use super::poly::Ctx;
use super::ternary::{plain_exponents, TernaryForm};

fn binom(n: u16, k: u16) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let mut acc = 1u64;
    for t in 0..k {
        acc = acc * (n as u64 - t) / (t + 1);
    }
    acc
}

/// A degree-d binary form, normalized-basis coefficients (f₀, …, f_d).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm<F: Field> {
    pub degree: u16,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> BinaryForm<F> {
    pub fn zero(ctx: &Ctx<F>, degree: u16) -> Self {
        BinaryForm { degree, coeffs: vec![ctx.field.zero(); degree as usize + 1] }
    }

    /// Build from plain monomial coefficients c_i of x^{d−i} y^i: fᵢ = cᵢ / C(d,i).
    pub fn from_plain(ctx: &Ctx<F>, degree: u16, plain: &[F::Elem]) -> Self {
        assert_eq!(plain.len(), degree as usize + 1);
        let coeffs = plain
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let b = ctx.field.from_i64(binom(degree, i as u16) as i64);
                ctx.field.mul(c, &ctx.field.inv(&b).expect("binomials invertible for p > 3"))
            })
            .collect();
        BinaryForm { degree, coeffs }
    }

    /// Plain monomial coefficients: coefficient of x^{d−i} y^i is C(d,i) fᵢ.
    pub fn to_plain(&self, ctx: &Ctx<F>) -> Vec<F::Elem> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| ctx.field.mul(c, &ctx.field.from_i64(binom(self.degree, i as u16) as i64)))
            .collect()
    }

    /// The d-th power of a·x + b·y: fᵢ = a^{d−i} b^i.
    pub fn line_power(ctx: &Ctx<F>, d: u16, a: &F::Elem, b: &F::Elem) -> Self {
        let coeffs = (0..=d)
            .map(|i| {
                let mut t = ctx.field.one();
                for _ in 0..(d - i) {
                    t = ctx.field.mul(&t, a);
                }
                for _ in 0..i {
                    t = ctx.field.mul(&t, b);
                }
                t
            })
            .collect();
        BinaryForm { degree: d, coeffs }
    }

    pub fn is_zero(&self, ctx: &Ctx<F>) -> bool {
        self.coeffs.iter().all(|c| ctx.field.is_zero(c))
    }

    pub fn eval(&self, ctx: &Ctx<F>, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let mut acc = ctx.field.zero();
        for (i, c) in self.to_plain(ctx).iter().enumerate() {
            let mut t = c.clone();
            for _ in 0..(self.degree as usize - i) {
                t = ctx.field.mul(&t, x);
            }
            for _ in 0..i {
                t = ctx.field.mul(&t, y);
            }
            acc = ctx.field.add(&acc, &t);
        }
        acc
    }
}

/// Apolarity pairing of two degree-d binary forms: Σ (−1)^i C(d,i) fᵢ g_{d−i}.
pub fn binary_apolarity<F: Field>(ctx: &Ctx<F>, f: &BinaryForm<F>, g: &BinaryForm<F>) -> F::Elem {
    assert_eq!(f.degree, g.degree);
    let d = f.degree;
    let mut acc = ctx.field.zero();
    for i in 0..=d {
        let mut t = ctx.field.mul(&f.coeffs[i as usize], &g.coeffs[(d - i) as usize]);
        t = ctx.field.mul(&t, &ctx.field.from_i64(binom(d, i) as i64));
        if i % 2 == 1 {
            t = ctx.field.neg(&t);
        }
        acc = ctx.field.add(&acc, &t);
    }
    acc
}

/// Half the self-apolarity of a binary quartic: f₀f₄ − 4 f₁f₃ + 3 f₂².
///
/// Vanishes exactly when the four roots form an equianharmonic quadruple.
pub fn equianharmonic_invariant<F: Field>(ctx: &Ctx<F>, f: &BinaryForm<F>) -> F::Elem {
    assert_eq!(f.degree, 4);
    let fld = &ctx.field;
    let t1 = fld.mul(&f.coeffs[0], &f.coeffs[4]);
    let t2 = fld.mul(&fld.from_i64(4), &fld.mul(&f.coeffs[1], &f.coeffs[3]));
    let t3 = fld.mul(&fld.from_i64(3), &fld.mul(&f.coeffs[2], &f.coeffs[2]));
    fld.add(&fld.sub(&t1, &t2), &t3)
}

/// Restrict a ternary form to the line l = y₀x + y₁y + y₂z = 0.
///
/// The pivot variable is the first with nonzero coefficient in l; it is eliminated via
/// x_p = −(Σ_{i≠p} yᵢ xᵢ)/y_p and the result is a binary form in the two remaining
/// variables, in their natural order. Returns the form and the pivot index.
pub fn restrict_to_line<F: Field>(
    ctx: &Ctx<F>,
    f: &TernaryForm<F>,
    l: &TernaryForm<F>,
) -> (BinaryForm<F>, usize) {
    assert_eq!(l.degree, 1);
    let fld = &ctx.field;
    let p = l
        .coeffs
        .iter()
        .position(|c| !fld.is_zero(c))
        .expect("restriction line must be nonzero");
    let (a, b) = match p {
        0 => (1usize, 2usize),
        1 => (0, 2),
        _ => (0, 1),
    };
    let inv_yp = fld.inv(&l.coeffs[p]).expect("pivot coefficient is nonzero");
    // x_p = s_a x_a + s_b x_b with s_i = −y_i / y_p.
    let s_a = fld.neg(&fld.mul(&l.coeffs[a], &inv_yp));
    let s_b = fld.neg(&fld.mul(&l.coeffs[b], &inv_yp));

    let d = f.degree;
    let mut plain = vec![fld.zero(); d as usize + 1];
    for (idx, c) in f.coeffs.iter().enumerate() {
        if fld.is_zero(c) {
            continue;
        }
        let (i, j, k) = plain_exponents(d, idx);
        let exps = [i, j, k];
        let (ep, ea) = (exps[p], exps[a]);
        // x_p^{e_p} = Σ_t C(e_p, t) s_a^t s_b^{e_p − t} x_a^t x_b^{e_p − t}.
        for t in 0..=ep {
            let mut coef = ctx.field.from_i64(binom(ep, t) as i64);
            for _ in 0..t {
                coef = fld.mul(&coef, &s_a);
            }
            for _ in 0..(ep - t) {
                coef = fld.mul(&coef, &s_b);
            }
            coef = fld.mul(&coef, c);
            // Exponent of x_b in the output monomial x_a^{e_a + t} x_b^{d − e_a − t}.
            let pos = (d - ea - t) as usize;
            plain[pos] = fld.add(&plain[pos], &coef);
        }
    }
    (BinaryForm::from_plain(ctx, d, &plain), p)
}
