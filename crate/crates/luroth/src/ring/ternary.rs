//! Dense homogeneous forms in three variables, stored in the plain monomial basis.
//!
//! The degree-d plain basis lists monomials x^i y^j z^k by descending i, then descending
//! j. For d = 4 this is exactly x⁴, x³y, x³z, x²y², x²yz, x²z², xy³, xy²z, xyz², xz³, y⁴,
//! y³z, y²z², yz³, z⁴ — the indexing g₀…g₁₄ that the 15×15 trilinear matrix assumes.
//! The multinomial basis stores f_{ijk} with f = Σ (d!/(i!j!k!)) f_{ijk} x^i y^j z^k;
//! conversion divides the plain coefficient by the multinomial coefficient, which is why
//! characteristics 2 and 3 are rejected at field construction.

use super::field::{Field, FieldError};
use super::monomial::Monomial;
use super::poly::{Ctx, MultiPoly};

/// Number of degree-d monomials in three variables.
pub fn plain_len(d: u16) -> usize {
    ((d + 1) as usize * (d + 2) as usize) / 2
}

/// Index of x^i y^j z^k in the degree-(i+j+k) plain basis.
pub fn plain_index(d: u16, i: u16, j: u16) -> usize {
    let r = (d - i) as usize;
    r * (r + 1) / 2 + (r - j as usize)
}

/// The exponent triple at a plain-basis position.
pub fn plain_exponents(d: u16, idx: usize) -> (u16, u16, u16) {
    let mut r = 0usize;
    while (r + 1) * (r + 2) / 2 <= idx {
        r += 1;
    }
    let i = d as usize - r;
    let j = r - (idx - r * (r + 1) / 2);
    (i as u16, j as u16, (d as usize - i - j) as u16)
}

fn multinomial(d: u16, i: u16, j: u16, k: u16) -> u64 {
    fn fact(n: u16) -> u64 {
        (1..=n as u64).product::<u64>().max(1)
    }
    fact(d) / (fact(i) * fact(j) * fact(k))
}

/// A homogeneous degree-d form in three variables; dense plain-basis coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TernaryForm<F: Field> {
    pub degree: u16,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> TernaryForm<F> {
    pub fn zero(ctx: &Ctx<F>, degree: u16) -> Self {
        TernaryForm { degree, coeffs: vec![ctx.field.zero(); plain_len(degree)] }
    }

    pub fn from_plain(degree: u16, coeffs: Vec<F::Elem>) -> Self {
        assert_eq!(coeffs.len(), plain_len(degree));
        TernaryForm { degree, coeffs }
    }

    /// The linear form a·x + b·y + c·z.
    pub fn line(a: F::Elem, b: F::Elem, c: F::Elem) -> Self {
        TernaryForm { degree: 1, coeffs: vec![a, b, c] }
    }

    pub fn is_zero(&self, ctx: &Ctx<F>) -> bool {
        self.coeffs.iter().all(|c| ctx.field.is_zero(c))
    }

    pub fn plain(&self, i: u16, j: u16, k: u16) -> &F::Elem {
        debug_assert_eq!(i + j + k, self.degree);
        &self.coeffs[plain_index(self.degree, i, j)]
    }

    /// The multinomial coefficient f_{ijk}: plain coefficient divided by d!/(i!j!k!).
    pub fn multi(&self, ctx: &Ctx<F>, i: u16, j: u16, k: u16) -> F::Elem {
        let m = multinomial(self.degree, i, j, k);
        let inv = ctx
            .field
            .inv(&ctx.field.from_i64(m as i64))
            .expect("multinomial coefficients invertible for p > 3");
        ctx.field.mul(self.plain(i, j, k), &inv)
    }

    /// The full multinomial coefficient vector, in plain-basis position order.
    pub fn multi_vec(&self, ctx: &Ctx<F>) -> Vec<F::Elem> {
        (0..self.coeffs.len())
            .map(|idx| {
                let (i, j, k) = plain_exponents(self.degree, idx);
                self.multi(ctx, i, j, k)
            })
            .collect()
    }

    /// Rebuild a form from its multinomial coefficient vector.
    pub fn from_multi_vec(ctx: &Ctx<F>, degree: u16, multi: &[F::Elem]) -> Self {
        assert_eq!(multi.len(), plain_len(degree));
        let coeffs = multi
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let (i, j, k) = plain_exponents(degree, idx);
                let m = ctx.field.from_i64(multinomial(degree, i, j, k) as i64);
                ctx.field.mul(c, &m)
            })
            .collect();
        TernaryForm { degree, coeffs }
    }

    pub fn add(&self, ctx: &Ctx<F>, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        TernaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| ctx.field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, ctx: &Ctx<F>, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        TernaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| ctx.field.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, ctx: &Ctx<F>, c: &F::Elem) -> Self {
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| ctx.field.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, ctx: &Ctx<F>, other: &Self) -> Self {
        let d = self.degree + other.degree;
        let mut coeffs = vec![ctx.field.zero(); plain_len(d)];
        for (ia, a) in self.coeffs.iter().enumerate() {
            if ctx.field.is_zero(a) {
                continue;
            }
            let (i1, j1, _) = plain_exponents(self.degree, ia);
            for (ib, b) in other.coeffs.iter().enumerate() {
                if ctx.field.is_zero(b) {
                    continue;
                }
                let (i2, j2, _) = plain_exponents(other.degree, ib);
                let idx = plain_index(d, i1 + i2, j1 + j2);
                coeffs[idx] = ctx.field.add(&coeffs[idx], &ctx.field.mul(a, b));
            }
        }
        TernaryForm { degree: d, coeffs }
    }

    pub fn pow(&self, ctx: &Ctx<F>, e: u32) -> Self {
        let mut acc = TernaryForm::from_plain(0, vec![ctx.field.one()]);
        for _ in 0..e {
            acc = acc.mul(ctx, self);
        }
        acc
    }

    pub fn eval(&self, ctx: &Ctx<F>, x: &F::Elem, y: &F::Elem, z: &F::Elem) -> F::Elem {
        let mut acc = ctx.field.zero();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if ctx.field.is_zero(c) {
                continue;
            }
            let (i, j, k) = plain_exponents(self.degree, idx);
            let mut t = c.clone();
            for _ in 0..i {
                t = ctx.field.mul(&t, x);
            }
            for _ in 0..j {
                t = ctx.field.mul(&t, y);
            }
            for _ in 0..k {
                t = ctx.field.mul(&t, z);
            }
            acc = ctx.field.add(&acc, &t);
        }
        acc
    }

    /// View as a sparse polynomial in a 3-variable context.
    pub fn to_poly(&self, ctx: &Ctx<F>) -> MultiPoly<F> {
        assert!(ctx.nvars >= 3);
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !ctx.field.is_zero(c))
            .map(|(idx, c)| {
                let (i, j, k) = plain_exponents(self.degree, idx);
                (Monomial::from_exps(&[i, j, k]), c.clone())
            })
            .collect();
        MultiPoly::from_terms(ctx, terms)
    }

    /// Collect a homogeneous sparse polynomial back into dense plain coefficients.
    pub fn from_poly(ctx: &Ctx<F>, degree: u16, p: &MultiPoly<F>) -> Self {
        let mut form = TernaryForm::zero(ctx, degree);
        for (m, c) in &p.terms {
            assert_eq!(m.deg(), degree, "polynomial is not homogeneous of the declared degree");
            form.coeffs[plain_index(degree, m.exp(0), m.exp(1))] = c.clone();
        }
        form
    }

    /// Map the coefficients into another field.
    pub fn map_field<G, M>(&self, mut f: M) -> Result<TernaryForm<G>, FieldError>
    where
        G: Field,
        M: FnMut(&F::Elem) -> Result<G::Elem, FieldError>,
    {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(f(c)?);
        }
        Ok(TernaryForm { degree: self.degree, coeffs })
    }

    /// Projective equality: all 2×2 minors of the two coefficient vectors vanish.
    pub fn proportional(&self, ctx: &Ctx<F>, other: &Self) -> bool {
        if self.degree != other.degree {
            return false;
        }
        if self.is_zero(ctx) || other.is_zero(ctx) {
            return self.is_zero(ctx) && other.is_zero(ctx);
        }
        cross_products_vanish(ctx, &self.coeffs, &other.coeffs)
    }

    pub fn display(&self, ctx: &Ctx<F>, names: &[&str]) -> String {
        self.to_poly(ctx).display(ctx, names)
    }
}

/// Projective comparison of coefficient vectors: u ∝ v iff all uᵢvⱼ − uⱼvᵢ vanish.
pub fn cross_products_vanish<F: Field>(ctx: &Ctx<F>, u: &[F::Elem], v: &[F::Elem]) -> bool {
    assert_eq!(u.len(), v.len());
    let pivot = match u.iter().position(|c| !ctx.field.is_zero(c)) {
        Some(p) => p,
        None => return v.iter().all(|c| ctx.field.is_zero(c)),
    };
    for i in 0..u.len() {
        let lhs = ctx.field.mul(&u[pivot], &v[i]);
        let rhs = ctx.field.mul(&u[i], &v[pivot]);
        if lhs != rhs {
            return false;
        }
    }
    true
}
