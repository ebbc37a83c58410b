//! Hilbert-series data of a homogeneous ideal from the leading monomials of a
//! Gröbner basis: the series numerator, projective dimension, and degree (the
//! multiplicity of the top-dimensional part).

use super::GroebnerBasis;
use crate::ring::field::Field;
use crate::ring::monomial::Monomial;

/// Dimension and degree read off a Hilbert series N(t)/(1−t)^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Number of ambient variables n.
    pub nvars: usize,
    /// Numerator of the series over (1−t)^n, as coefficients of 1, t, t², …
    pub numerator: Vec<i64>,
    /// Dimension of the projective scheme: −1 for empty, 0 for points, …
    pub proj_dim: i64,
    /// Degree of the top-dimensional part: M(1) where N = (1−t)^s·M.
    pub degree: i64,
}

/// Dense polynomial helpers in the series variable t.
fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    let mut out = vec![0i64; n];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remove monomials divisible by another of the set, deduplicated and sorted.
fn minimalize(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort_by_key(|m| {
        let mut key = [0u16; crate::ring::monomial::MAX_VARS + 1];
        key[0] = m.deg();
        for (i, k) in key.iter_mut().skip(1).enumerate() {
            *k = m.exp(i);
        }
        key
    });
    mons.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in mons {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator N(t) of the Hilbert series of S/(mons) over (1−t)^nvars, computed by the
/// pivot-variable recursion N(I) = N(I + (x)) − t·(N(I + (x)) − N(I : x)).
fn numerator(mons: &[Monomial], nvars: usize) -> Vec<i64> {
    let mons = minimalize(mons.to_vec());
    if mons.is_empty() {
        return vec![1];
    }
    if mons.iter().any(|m| m.is_one()) {
        return Vec::new(); // unit ideal: zero series
    }
    // Base case: all generators are pure powers of distinct variables, so the series
    // factors as Π (1 − t^{a_i}).
    let pure = mons.iter().all(|m| (0..nvars).filter(|&i| m.exp(i) > 0).count() == 1);
    if pure {
        let mut n = vec![1i64];
        for m in &mons {
            let a = m.deg() as usize;
            let mut factor = vec![0i64; a + 1];
            factor[0] = 1;
            factor[a] = -1;
            n = poly_mul(&n, &factor);
        }
        return n;
    }
    // Pivot: the variable occurring in the most generators (ties to the lowest
    // index), taken from a non-pure generator to guarantee progress.
    let mut counts = vec![0usize; nvars];
    for m in &mons {
        for (i, c) in counts.iter_mut().enumerate() {
            if m.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let pivot = (0..nvars)
        .filter(|&i| {
            mons.iter().any(|m| {
                m.exp(i) > 0 && (0..nvars).filter(|&v| m.exp(v) > 0).count() > 1
            })
        })
        .max_by_key(|&i| (counts[i], usize::MAX - i))
        .expect("non-pure generator exists");

    // I + (x_pivot): generators not divisible by the pivot, plus the pivot itself.
    let mut plus: Vec<Monomial> = mons.iter().filter(|m| m.exp(pivot) == 0).cloned().collect();
    plus.push(Monomial::var(pivot));
    // I : x_pivot: divide one pivot power out of each generator.
    let colon: Vec<Monomial> = mons
        .iter()
        .map(|m| {
            if m.exp(pivot) > 0 {
                m.with_exp(pivot, m.exp(pivot) - 1)
            } else {
                *m
            }
        })
        .collect();
    let n_plus = numerator(&plus, nvars);
    let n_colon = numerator(&colon, nvars);
    // N(I) = N(I + (x)) + t·N(I : x).
    let shifted: Vec<i64> = std::iter::once(0).chain(n_colon).collect();
    poly_add(&n_plus, &shifted)
}

/// Hilbert data of the quotient by the leading-term ideal of a reduced basis.
pub fn hilbert_data<F: Field>(gb: &GroebnerBasis<F>, nvars: usize) -> HilbertData {
    let mut n = numerator(&gb.leading_monomials(), nvars);
    if n.is_empty() {
        return HilbertData { nvars, numerator: n, proj_dim: -1, degree: 0 };
    }
    let original = n.clone();
    // Strip (1 − t) factors: s = multiplicity of the root t = 1.
    let mut s = 0usize;
    loop {
        let at_one: i64 = n.iter().sum();
        if at_one != 0 {
            break;
        }
        // Divide by (1 − t): synthetic division q(t) = n(t)/(1−t).
        let mut q = vec![0i64; n.len() - 1];
        let mut carry = 0i64;
        for i in 0..n.len() - 1 {
            carry += n[i];
            q[i] = carry;
        }
        n = trim(q);
        s += 1;
        if n.is_empty() {
            break;
        }
    }
    let degree: i64 = n.iter().sum();
    let krull = nvars as i64 - s as i64;
    HilbertData { nvars, numerator: original, proj_dim: krull - 1, degree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner, Budget};
    use crate::ring::field::Rat;
    use crate::ring::monomial::Order;
    use crate::ring::poly::{Ctx, MultiPoly};

    fn data_of(mons: &[&[u16]], nvars: usize) -> HilbertData {
        // Build a trivially reduced basis from the monomials themselves.
        let ctx = Ctx::new(Rat, nvars, Order::Grevlex);
        let polys: Vec<MultiPoly<Rat>> = mons
            .iter()
            .map(|e| MultiPoly::term(&ctx, Monomial::from_exps(e), Rat::int(1)))
            .collect();
        let mut budget = Budget::default();
        let gb = groebner(&ctx, &polys, &mut budget).unwrap();
        hilbert_data(&gb, nvars)
    }

    #[test]
    fn single_double_line_in_the_plane() {
        // (x²) in 3 variables: a projective line with multiplicity 2.
        let d = data_of(&[&[2, 0, 0]], 3);
        assert_eq!(d.proj_dim, 1);
        assert_eq!(d.degree, 2);
        assert_eq!(d.numerator, vec![1, 0, -1]); // 1 − t²
    }

    #[test]
    fn full_ring_and_unit_ideal_edge_cases() {
        let ctx = Ctx::new(Rat, 3, Order::Grevlex);
        let mut budget = Budget::default();
        // Zero ideal: all of P².
        let gb = groebner(&ctx, &[], &mut budget).unwrap();
        let d = hilbert_data(&gb, 3);
        assert_eq!(d.proj_dim, 2);
        assert_eq!(d.degree, 1);
        // Unit ideal: empty scheme.
        let one = MultiPoly::constant(&ctx, Rat::int(1));
        let gb = groebner(&ctx, &[one], &mut budget).unwrap();
        let d = hilbert_data(&gb, 3);
        assert_eq!(d.proj_dim, -1);
        assert_eq!(d.degree, 0);
    }

    #[test]
    fn points_and_complete_intersections() {
        // (x, y) in 3 variables: one reduced point.
        let d = data_of(&[&[1, 0, 0], &[0, 1, 0]], 3);
        assert_eq!((d.proj_dim, d.degree), (0, 1));
        // (x², y³) in P²: a complete intersection of degree 6 by Bézout.
        let d = data_of(&[&[2, 0, 0], &[0, 3, 0]], 3);
        assert_eq!((d.proj_dim, d.degree), (0, 6));
        // A quartic curve in P².
        let d = data_of(&[&[4, 0, 0]], 3);
        assert_eq!((d.proj_dim, d.degree), (1, 4));
        // (xy, xz) = the line x = 0 together with the point y = z = 0: top
        // dimension 1, top degree 1.
        let d = data_of(&[&[1, 1, 0], &[1, 0, 1]], 3);
        assert_eq!((d.proj_dim, d.degree), (1, 1));
    }

    #[test]
    fn twisted_cubic_has_dimension_one_degree_three() {
        // The twisted cubic in P³: 2×2 minors of [x y z; y z w].
        let ctx = Ctx::new(Rat, 4, Order::Grevlex);
        let m = |e: &[u16], c: i64| (Monomial::from_exps(e), Rat::int(c));
        let g1 = MultiPoly::from_terms(&ctx, vec![m(&[1, 0, 1, 0], 1), m(&[0, 2, 0, 0], -1)]);
        let g2 = MultiPoly::from_terms(&ctx, vec![m(&[1, 0, 0, 1], 1), m(&[0, 1, 1, 0], -1)]);
        let g3 = MultiPoly::from_terms(&ctx, vec![m(&[0, 1, 0, 1], 1), m(&[0, 0, 2, 0], -1)]);
        let mut budget = Budget::default();
        let gb = groebner(&ctx, &[g1, g2, g3], &mut budget).unwrap();
        let d = hilbert_data(&gb, 4);
        assert_eq!((d.proj_dim, d.degree), (1, 3));
    }
}
