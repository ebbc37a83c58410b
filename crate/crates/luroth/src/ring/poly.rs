//! Sparse multivariate polynomials over a configurable exact field.
//!
//! All arithmetic is threaded through a [`Ctx`] that carries the field handle, the number
//! of variables, and the active monomial order, in exchange for keeping elements bare.

use std::cmp::Ordering;

use super::field::{Field, FieldError};
use super::monomial::{Monomial, Order, MAX_VARS};

/// Shared context for polynomial arithmetic: field, variable count, monomial order.
#[derive(Clone, Debug)]
pub struct Ctx<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub order: Order,
}

impl<F: Field> Ctx<F> {
    pub fn new(field: F, nvars: usize, order: Order) -> Self {
        assert!(nvars <= MAX_VARS);
        Ctx { field, nvars, order }
    }

    pub fn with_order(&self, order: Order) -> Self {
        Ctx { field: self.field.clone(), nvars: self.nvars, order }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(self.nvars, a, b)
    }
}

/// A sparse polynomial: terms strictly sorted descending in the context's monomial order,
/// no zero coefficients, no duplicate monomials. The leading term is `terms[0]`.
#[derive(Clone, Debug)]
pub struct MultiPoly<F: Field> {
    pub terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> MultiPoly<F> {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(ctx: &Ctx<F>, c: F::Elem) -> Self {
        if ctx.field.is_zero(&c) {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn term(ctx: &Ctx<F>, m: Monomial, c: F::Elem) -> Self {
        if ctx.field.is_zero(&c) {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    pub fn var(ctx: &Ctx<F>, i: usize) -> Self {
        assert!(i < ctx.nvars);
        MultiPoly { terms: vec![(Monomial::var(i), ctx.field.one())] }
    }

    /// Normalize an arbitrary term list: sort, merge duplicates, drop zeros.
    pub fn from_terms(ctx: &Ctx<F>, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        terms.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = ctx.field.add(&last.1, &c);
                    if ctx.field.is_zero(&last.1) {
                        out.pop();
                    }
                    continue;
                }
            }
            if !ctx.field.is_zero(&c) {
                out.push((m, c));
            }
        }
        MultiPoly { terms: out }
    }

    pub fn leading(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn total_deg(&self) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.deg()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.deg();
                self.terms.iter().all(|(m, _)| m.deg() == d)
            }
        }
    }

    pub fn add(&self, ctx: &Ctx<F>, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ctx.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ctx.field.add(&self.terms[i].1, &other.terms[j].1);
                    if !ctx.field.is_zero(&c) {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MultiPoly { terms: out }
    }

    pub fn neg(&self, ctx: &Ctx<F>) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, ctx.field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, ctx: &Ctx<F>, other: &Self) -> Self {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn scale(&self, ctx: &Ctx<F>, c: &F::Elem) -> Self {
        if ctx.field.is_zero(c) {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, ctx.field.mul(a, c))).collect(),
        }
    }

    /// Multiply by a single term `c·m`.
    pub fn mul_term(&self, ctx: &Ctx<F>, m: &Monomial, c: &F::Elem) -> Self {
        if ctx.field.is_zero(c) {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), ctx.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, ctx: &Ctx<F>, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        // Multiply the shorter operand into the longer one, accumulating via merge-add.
        let (short, long) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc = MultiPoly::zero();
        for (m, c) in &short.terms {
            acc = acc.add(ctx, &long.mul_term(ctx, m, c));
        }
        acc
    }

    pub fn pow(&self, ctx: &Ctx<F>, e: u32) -> Self {
        let mut acc = MultiPoly::constant(ctx, ctx.field.one());
        for _ in 0..e {
            acc = acc.mul(ctx, self);
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, ctx: &Ctx<F>, i: usize) -> Self {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let factor = ctx.field.from_i64(e as i64);
            let c2 = ctx.field.mul(c, &factor);
            if !ctx.field.is_zero(&c2) {
                terms.push((m.with_exp(i, e - 1), c2));
            }
        }
        MultiPoly::from_terms(ctx, terms)
    }

    pub fn eval(&self, ctx: &Ctx<F>, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), ctx.nvars);
        let mut acc = ctx.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = ctx.field.mul(&t, p);
                }
            }
            acc = ctx.field.add(&acc, &t);
        }
        acc
    }

    /// Substitute polynomials for every variable.
    pub fn substitute(&self, ctx: &Ctx<F>, images: &[MultiPoly<F>]) -> Self {
        assert_eq!(images.len(), ctx.nvars);
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(ctx, c.clone());
            for (i, img) in images.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = t.mul(ctx, img);
                }
            }
            acc = acc.add(ctx, &t);
        }
        acc
    }

    /// Re-sort the term list after a change of monomial order.
    pub fn reorder(&self, ctx: &Ctx<F>) -> Self {
        MultiPoly::from_terms(ctx, self.terms.clone())
    }

    /// Map coefficients into another field (e.g. Q → Z/p).
    pub fn map_field<G, M>(
        &self,
        src: &Ctx<F>,
        dst: &Ctx<G>,
        mut f: M,
    ) -> Result<MultiPoly<G>, FieldError>
    where
        G: Field,
        M: FnMut(&F::Elem) -> Result<G::Elem, FieldError>,
    {
        let _ = src;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, f(c)?));
        }
        Ok(MultiPoly::from_terms(dst, terms))
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, ctx: &Ctx<F>) -> Self {
        match self.leading() {
            None => MultiPoly::zero(),
            Some((_, lc)) => {
                let inv = ctx.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(ctx, &inv)
            }
        }
    }

    /// Render with the given variable names, deterministic term order.
    pub fn display(&self, ctx: &Ctx<F>, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg_fmt = ctx.field.fmt_elem(c).starts_with('-');
            if idx > 0 {
                out.push_str(if neg_fmt { " - " } else { " + " });
            } else if neg_fmt {
                out.push('-');
            }
            let c_abs = if neg_fmt { ctx.field.neg(c) } else { c.clone() };
            let coeff_str = ctx.field.fmt_elem(&c_abs);
            let is_unit_coeff = coeff_str == "1";
            let mut factors: Vec<String> = Vec::new();
            if !is_unit_coeff || m.is_one() {
                let s = coeff_str;
                if s.contains('/') {
                    factors.push(format!("({s})"));
                } else {
                    factors.push(s);
                }
            }
            for i in 0..ctx.nvars {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    e => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}
