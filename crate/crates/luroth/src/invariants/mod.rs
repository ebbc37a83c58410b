//! Classical invariant-theoretic constructions for ternary quartics: the trilinear
//! form A and its 15×15 coefficient matrix, the catalecticant, apolar duals and
//! bordered-determinant recovery, conic square roots, and the covariant quartic on the
//! space of conics whose singular points encode the 28 bitangents.
//!
//! Normalization conventions (pinned once, used everywhere):
//! - `trilinear_a(l₁⁴, l₂⁴, l₃⁴) = 144·det(l₁,l₂,l₃)⁴` — the matrix pairing carries a
//!   factor 144 against the determinant normalization;
//! - `trilinear_a(f,f,f) = 864·cubic_invariant(f)` — the 23-term formula takes the
//!   value 1 on x⁴+y⁴+z⁴, while the trilinear expansion over that decomposition sums
//!   144·det⁴ over the 6 permutations of distinct arguments;
//! - `trilinear_a(f,g,l⁴) = 144·y_p⁴·apolarity(f|_l, g|_l)` with y_p the pivot
//!   coefficient used by the line restriction.

pub mod aronhold;
pub mod scorza;

use crate::exactla::SymMatrix;
use crate::ring::field::Field;
use crate::ring::monomial::Monomial;
use crate::ring::poly::{Ctx, MultiPoly};
use crate::ring::ternary::{cross_products_vanish, plain_exponents, plain_index, TernaryForm};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantError {
    /// Recovery through the bordered determinant needs an invertible pairing matrix.
    SingularRecovery,
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::SingularRecovery => {
                write!(f, "bordered recovery requires det L_g != 0")
            }
        }
    }
}

impl std::error::Error for InvariantError {}

/// Index of the plain quartic monomial complementary to positions u and v, if any:
/// the k with exps(k) = (4,4,4) − exps(u) − exps(v).
fn complement_index(u: usize, v: usize) -> Option<usize> {
    let (iu, ju, ku) = plain_exponents(4, u);
    let (iv, jv, kv) = plain_exponents(4, v);
    let (i, j, k) = (
        4u16.checked_sub(iu + iv)?,
        4u16.checked_sub(ju + jv)?,
        4u16.checked_sub(ku + kv)?,
    );
    if i + j + k != 4 {
        return None;
    }
    Some(plain_index(4, i, j))
}

/// Integer coefficient table of the 15×15 symmetric matrix L_g: entry (u, v) of L_g is
/// `l_coeff()[u][v] · g_k` with k the complement index of (u, v), and 0 when there is
/// no complement.
///
/// The table is forced by the defining property of the trilinear form — the value
/// 144·det(l₁,l₂,l₃)⁴ on triples of fourth powers, which span all quartics. Expanding
/// det⁴ as Σ T[u][v][w]·l₁^exps(u)·l₂^exps(v)·l₃^exps(w) and writing the g-slot in
/// plain coordinates gives the coefficient 144·T[u][v][k]·(i!j!k!)/4! at g_k.
fn l_coeff() -> &'static [[i64; 15]; 15] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[[i64; 15]; 15]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // The six monomials of det(l₁,l₂,l₃): sign and the variable index drawn from
        // each of the three lines.
        const PERMS: [([usize; 3], i64); 6] = [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([1, 0, 2], -1),
            ([2, 1, 0], -1),
        ];
        let factorial = |n: u16| -> i64 { (1..=n as i64).product::<i64>().max(1) };
        // T[u][v][w]: coefficient of the split monomial in det⁴, via the multinomial
        // expansion over unordered choices of four det-terms.
        let mut table = [[0i64; 15]; 15];
        for i1 in 0..6 {
            for i2 in i1..6 {
                for i3 in i2..6 {
                    for i4 in i3..6 {
                        let choice = [i1, i2, i3, i4];
                        let mut counts = [0i64; 6];
                        for &c in &choice {
                            counts[c] += 1;
                        }
                        let mut multinom = 24i64; // 4!
                        for &c in &counts {
                            multinom /= factorial(c as u16);
                        }
                        let mut sign = 1i64;
                        let mut exps = [[0u16; 3]; 3]; // per line, per variable
                        for &c in &choice {
                            let (perm, s) = PERMS[c];
                            sign *= s;
                            for line in 0..3 {
                                exps[line][perm[line]] += 1;
                            }
                        }
                        let pos = |e: [u16; 3]| plain_index(4, e[0], e[1]);
                        let (u, v, w) = (pos(exps[0]), pos(exps[1]), pos(exps[2]));
                        // Fold the tensor into the matrix table on plain g-coordinates:
                        // coefficient at (u, v) on g_w is 144·T[u][v][w]·w!/4!.
                        let (wi, wj, wk) = plain_exponents(4, w);
                        let wfact = factorial(wi) * factorial(wj) * factorial(wk);
                        let contrib = sign * multinom * 144 * wfact;
                        debug_assert_eq!(contrib % 24, 0);
                        debug_assert_eq!(complement_index(u, v), Some(w));
                        table[u][v] += contrib / 24;
                    }
                }
            }
        }
        table
    })
}

/// The 15×15 symmetric matrix L_g with A(f,g,h) = multi(f)ᵗ·L_g·multi(h); entries are
/// linear in the plain coefficients of g.
pub fn build_l<F: Field>(ctx: &Ctx<F>, g: &TernaryForm<F>) -> SymMatrix<F> {
    assert_eq!(g.degree, 4);
    let coeffs = l_coeff();
    SymMatrix::from_fn(15, 15, |u, v| {
        let c = coeffs[u][v];
        if c == 0 {
            return ctx.field.zero();
        }
        let k = complement_index(u, v).expect("nonzero table entries have a complement");
        ctx.field.mul(&ctx.field.from_i64(c), &g.coeffs[k])
    })
}

/// The trilinear invariant pairing of three quartics: multi(f)ᵗ·L_g·multi(h).
///
/// Fully symmetric in its three arguments; takes the value 144·det⁴ on triples of
/// fourth powers of lines.
pub fn trilinear_a<F: Field>(
    ctx: &Ctx<F>,
    f: &TernaryForm<F>,
    g: &TernaryForm<F>,
    h: &TernaryForm<F>,
) -> F::Elem {
    let l = build_l(ctx, g);
    let fm = f.multi_vec(ctx);
    let hm = h.multi_vec(ctx);
    let lh = l.matvec(&ctx.field, &hm);
    let mut acc = ctx.field.zero();
    for (a, b) in fm.iter().zip(&lh) {
        acc = ctx.field.add(&acc, &ctx.field.mul(a, b));
    }
    acc
}

/// The 23-term degree-3 invariant of a ternary quartic, in multinomial coordinates,
/// normalized to take the value 1 on x⁴ + y⁴ + z⁴.
pub fn cubic_invariant<F: Field>(ctx: &Ctx<F>, f: &TernaryForm<F>) -> F::Elem {
    assert_eq!(f.degree, 4);
    let c = |i: u16, j: u16, k: u16| f.multi(ctx, i, j, k);
    let fld = &ctx.field;
    let mut acc = fld.zero();
    let mut add = |scale: i64, a: F::Elem, b: F::Elem, c3: F::Elem| {
        let t = fld.mul(&fld.mul(&a, &b), &c3);
        acc = fld.add(&acc, &fld.mul(&fld.from_i64(scale), &t));
    };
    add(1, c(4, 0, 0), c(0, 4, 0), c(0, 0, 4));
    add(3, c(2, 2, 0), c(2, 2, 0), c(0, 0, 4));
    add(3, c(2, 0, 2), c(2, 0, 2), c(0, 4, 0));
    add(3, c(4, 0, 0), c(0, 2, 2), c(0, 2, 2));
    add(12, c(2, 0, 2), c(1, 2, 1), c(1, 2, 1));
    add(12, c(2, 2, 0), c(1, 1, 2), c(1, 1, 2));
    add(12, c(0, 2, 2), c(2, 1, 1), c(2, 1, 1));
    add(6, c(2, 2, 0), c(2, 0, 2), c(0, 2, 2));
    add(-4, c(3, 0, 1), c(1, 0, 3), c(0, 4, 0));
    add(-4, c(4, 0, 0), c(0, 3, 1), c(0, 1, 3));
    add(-4, c(3, 1, 0), c(1, 3, 0), c(0, 0, 4));
    add(4, c(3, 1, 0), c(1, 0, 3), c(0, 3, 1));
    add(4, c(3, 0, 1), c(1, 3, 0), c(0, 1, 3));
    add(-12, c(2, 0, 2), c(1, 3, 0), c(1, 1, 2));
    add(-12, c(2, 2, 0), c(1, 2, 1), c(1, 0, 3));
    add(-12, c(2, 1, 1), c(2, 0, 2), c(0, 3, 1));
    add(-12, c(3, 0, 1), c(1, 2, 1), c(0, 2, 2));
    add(-12, c(3, 1, 0), c(1, 1, 2), c(0, 2, 2));
    add(-12, c(2, 2, 0), c(2, 1, 1), c(0, 1, 3));
    add(-12, c(2, 1, 1), c(1, 2, 1), c(1, 1, 2));
    add(12, c(3, 1, 0), c(1, 2, 1), c(0, 1, 3));
    add(12, c(2, 1, 1), c(1, 3, 0), c(1, 0, 3));
    add(12, c(3, 0, 1), c(1, 1, 2), c(0, 3, 1));
    acc
}

/// The apolar dual H = A(f, g, *): the quartic in the dual plane with
/// H(l) = trilinear_a(f, g, l⁴) for every line l. Its plain coefficient vector is
/// L_g·multi(f).
pub fn adual<F: Field>(ctx: &Ctx<F>, f: &TernaryForm<F>, g: &TernaryForm<F>) -> TernaryForm<F> {
    let l = build_l(ctx, g);
    let plain = l.matvec(&ctx.field, &f.multi_vec(ctx));
    TernaryForm::from_plain(4, plain)
}

/// Recover f from g and H = adual(f, g) through the bordered determinant: the result
/// has multinomial coordinates adjugate(L_g)·plain(H), which equals det(L_g)·f.
pub fn bordered_recover<F: Field>(
    ctx: &Ctx<F>,
    g: &TernaryForm<F>,
    h: &TernaryForm<F>,
) -> Result<TernaryForm<F>, InvariantError> {
    let l = build_l(ctx, g);
    if ctx.field.is_zero(&l.det(&ctx.field)) {
        return Err(InvariantError::SingularRecovery);
    }
    let adj = l.adjugate(&ctx.field);
    let multi = adj.matvec(&ctx.field, &h.coeffs);
    Ok(TernaryForm::from_multi_vec(ctx, 4, &multi))
}

/// Exponent triples of the degree-2 plain basis x², xy, xz, y², yz, z² — the shared
/// coordinate system for conics and for catalecticant rows/columns.
pub const D2_EXPS: [(u16, u16, u16); 6] =
    [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)];

/// The degree-2 monomial vector (a², ab, ac, b², bc, c²) of a point (a, b, c).
pub fn d2_monomials<F: Field>(ctx: &Ctx<F>, p: &[F::Elem; 3]) -> [F::Elem; 6] {
    std::array::from_fn(|u| {
        let (i, j, k) = D2_EXPS[u];
        let mut t = ctx.field.one();
        for _ in 0..i {
            t = ctx.field.mul(&t, &p[0]);
        }
        for _ in 0..j {
            t = ctx.field.mul(&t, &p[1]);
        }
        for _ in 0..k {
            t = ctx.field.mul(&t, &p[2]);
        }
        t
    })
}

/// The 6×6 catalecticant matrix of a quartic: entry (u, v) is the multinomial
/// coordinate of f at exponent D_u + D_v. Its kernel vectors are the plain coefficient
/// vectors of the conics apolar to f; its determinant is the Clebsch invariant.
pub fn catalecticant<F: Field>(ctx: &Ctx<F>, f: &TernaryForm<F>) -> SymMatrix<F> {
    assert_eq!(f.degree, 4);
    SymMatrix::from_fn(6, 6, |u, v| {
        let (iu, ju, ku) = D2_EXPS[u];
        let (iv, jv, kv) = D2_EXPS[v];
        f.multi(ctx, iu + iv, ju + jv, ku + kv)
    })
}

/// A conic q₀x² + q₁xy + q₂xz + q₃y² + q₄yz + q₅z² (possibly in dual-plane
/// variables), stored by its six plain coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConicForm<F: Field> {
    pub coeffs: [F::Elem; 6],
}

impl<F: Field> ConicForm<F> {
    pub fn from_slice(c: &[F::Elem]) -> Self {
        assert_eq!(c.len(), 6);
        ConicForm { coeffs: std::array::from_fn(|i| c[i].clone()) }
    }

    pub fn to_ternary(&self) -> TernaryForm<F> {
        TernaryForm::from_plain(2, self.coeffs.to_vec())
    }

    pub fn from_ternary(t: &TernaryForm<F>) -> Self {
        assert_eq!(t.degree, 2);
        Self::from_slice(&t.coeffs)
    }

    pub fn eval(&self, ctx: &Ctx<F>, p: &[F::Elem; 3]) -> F::Elem {
        let mono = d2_monomials(ctx, p);
        let mut acc = ctx.field.zero();
        for (c, m) in self.coeffs.iter().zip(&mono) {
            acc = ctx.field.add(&acc, &ctx.field.mul(c, m));
        }
        acc
    }

    /// The symmetric 3×3 matrix (q₀, q₁/2, q₂/2; ·, q₃, q₄/2; ·, ·, q₅).
    pub fn matrix(&self, ctx: &Ctx<F>) -> SymMatrix<F> {
        let half = ctx
            .field
            .inv(&ctx.field.from_i64(2))
            .expect("characteristic 2 is rejected at field construction");
        let q = &self.coeffs;
        let h = |e: &F::Elem| ctx.field.mul(e, &half);
        SymMatrix::from_rows(vec![
            vec![q[0].clone(), h(&q[1]), h(&q[2])],
            vec![h(&q[1]), q[3].clone(), h(&q[4])],
            vec![h(&q[2]), h(&q[4]), q[5].clone()],
        ])
    }

    /// The conic discriminant 4q₀q₃q₅ + q₁q₂q₄ − q₀q₄² − q₃q₂² − q₅q₁², which is four
    /// times the determinant of the 3×3 matrix; zero exactly on singular conics.
    pub fn discriminant(&self, ctx: &Ctx<F>) -> F::Elem {
        let fld = &ctx.field;
        let q = &self.coeffs;
        let t1 = fld.mul(&fld.from_i64(4), &fld.mul(&q[0], &fld.mul(&q[3], &q[5])));
        let t2 = fld.mul(&q[1], &fld.mul(&q[2], &q[4]));
        let t3 = fld.mul(&q[0], &fld.mul(&q[4], &q[4]));
        let t4 = fld.mul(&q[3], &fld.mul(&q[2], &q[2]));
        let t5 = fld.mul(&q[5], &fld.mul(&q[1], &q[1]));
        fld.sub(&fld.sub(&fld.sub(&fld.add(&t1, &t2), &t3), &t4), &t5)
    }

    pub fn is_smooth(&self, ctx: &Ctx<F>) -> bool {
        !ctx.field.is_zero(&self.discriminant(ctx))
    }

    pub fn rank(&self, ctx: &Ctx<F>) -> usize {
        self.matrix(ctx).rank(&ctx.field)
    }

    /// The square of the conic, a ternary quartic.
    pub fn square(&self, ctx: &Ctx<F>) -> TernaryForm<F> {
        let t = self.to_ternary();
        t.mul(ctx, &t)
    }

    pub fn is_zero(&self, ctx: &Ctx<F>) -> bool {
        self.coeffs.iter().all(|c| ctx.field.is_zero(c))
    }

    pub fn proportional(&self, ctx: &Ctx<F>, other: &Self) -> bool {
        cross_products_vanish(ctx, &self.coeffs, &other.coeffs)
    }

    /// For a rank-2 conic: the unique point where its two lines meet, read off the
    /// rank-1 adjugate of the 3×3 matrix. For a rank-2 conic in dual-plane variables
    /// this point is a line of the original plane.
    pub fn vertex(&self, ctx: &Ctx<F>) -> Option<[F::Elem; 3]> {
        let m = self.matrix(ctx);
        if m.rank(&ctx.field) != 2 {
            return None;
        }
        let adj = m.adjugate(&ctx.field);
        // adj = c·p·pᵗ; recover p from a nonzero diagonal entry's row, normalized.
        let d = (0..3).find(|&i| !ctx.field.is_zero(adj.at(i, i)))?;
        let row: Vec<F::Elem> = (0..3).map(|j| adj.at(d, j).clone()).collect();
        Some([row[0].clone(), row[1].clone(), row[2].clone()])
    }

    pub fn display(&self, ctx: &Ctx<F>, names: &[&str]) -> String {
        self.to_ternary().display(ctx, names)
    }
}

/// Exact square root of a polynomial: S with S² = p, if one exists over the base
/// field. Greedy leading-term recursion; `None` is the definitive answer that no such
/// S exists over this field.
pub fn poly_sqrt<F: Field>(ctx: &Ctx<F>, p: &MultiPoly<F>) -> Option<MultiPoly<F>> {
    if p.is_zero() {
        return Some(MultiPoly::zero());
    }
    let (lead_m, lead_c) = p.leading().map(|(m, c)| (*m, c.clone()))?;
    let mut half_exps = [0u16; crate::ring::monomial::MAX_VARS];
    for i in 0..ctx.nvars {
        let e = lead_m.exp(i);
        if e % 2 != 0 {
            return None;
        }
        half_exps[i] = e / 2;
    }
    let half_m = Monomial::from_exps(&half_exps[..ctx.nvars]);
    let s0 = ctx.field.sqrt(&lead_c)?;
    let two_s0 = ctx.field.add(&s0, &s0);
    let mut s = MultiPoly::term(ctx, half_m, s0);
    // Each further term t of S satisfies 2·s₀·monomial(half)·t = leading remainder.
    let max_terms = 1 + p.terms.len() * 2;
    for _ in 0..max_terms {
        let r = p.sub(ctx, &s.mul(ctx, &s));
        let Some((rm, rc)) = r.leading().map(|(m, c)| (*m, c.clone())) else {
            return Some(s);
        };
        let tm = half_m.divide_into(&rm)?;
        let tc = ctx.field.div(&rc, &two_s0).ok()?;
        s = s.add(ctx, &MultiPoly::term(ctx, tm, tc));
    }
    None
}

/// Whether p is a nonzero scalar multiple of a perfect square over the base field:
/// true iff p·LC(p) has an exact square root (scaling by the leading coefficient makes
/// the leading coefficient a square without changing proportionality).
pub fn is_scalar_times_square<F: Field>(ctx: &Ctx<F>, p: &MultiPoly<F>) -> bool {
    match p.leading() {
        None => true,
        Some((_, lc)) => {
            let scaled = p.scale(ctx, &lc.clone());
            poly_sqrt(ctx, &scaled).is_some()
        }
    }
}

/// Square root of a quartic up to scale: a conic q with q² ∝ F, if the quartic is a
/// scalar multiple of a perfect square over the base field.
pub fn conic_sqrt<F: Field>(ctx: &Ctx<F>, f: &TernaryForm<F>) -> Option<ConicForm<F>> {
    assert_eq!(f.degree, 4);
    let p = f.to_poly(ctx);
    let (_, lc) = p.leading()?;
    let scaled = p.scale(ctx, &lc.clone());
    let s = poly_sqrt(ctx, &scaled)?;
    let conic = TernaryForm::from_poly(ctx, 2, &s);
    Some(ConicForm::from_ternary(&conic))
}

/// The covariant quartic on the space of conics attached to a ternary quartic f.
#[derive(Clone, Debug)]
pub struct WMQuartic<F: Field> {
    /// Homogeneous degree-4 polynomial in the six conic coefficients q₀…q₅.
    pub poly: MultiPoly<F>,
    /// Rank of the 15×15 pairing matrix L_f (15 generically).
    pub rank_l: usize,
    /// Determinant of L_f.
    pub det_l: F::Elem,
}

/// Plain coefficient vector of the square of the generic conic: entry m is
/// Σ q_u·q_v over ordered pairs with D_u + D_v = m, as a quadratic polynomial in the
/// six conic variables of `ctx_q`.
pub fn generic_conic_square<F: Field>(ctx_q: &Ctx<F>) -> Vec<MultiPoly<F>> {
    assert!(ctx_q.nvars >= 6);
    let mut out = vec![MultiPoly::zero(); 15];
    for u in 0..6 {
        for v in 0..6 {
            let (iu, ju, _) = D2_EXPS[u];
            let (iv, jv, _) = D2_EXPS[v];
            let m = plain_index(4, iu + iv, ju + jv);
            let mono = Monomial::var(u).mul(&Monomial::var(v));
            let term = MultiPoly::term(ctx_q, mono, ctx_q.field.one());
            out[m] = out[m].add(ctx_q, &term);
        }
    }
    out
}

/// Build the covariant quartic plain(q²)ᵗ·adjugate(L_f)·plain(q²) in the six conic
/// variables of `ctx_q` (which must have ≥ 6 variables; the first six are q₀…q₅).
pub fn wm_quartic<F: Field>(ctx_q: &Ctx<F>, f: &TernaryForm<F>) -> WMQuartic<F> {
    assert_eq!(f.degree, 4);
    let ctx3 = Ctx::new(ctx_q.field.clone(), 3, ctx_q.order);
    let l = build_l(&ctx3, f);
    let rank_l = l.rank(&ctx_q.field);
    let det_l = l.det(&ctx_q.field);
    let adj = l.adjugate(&ctx_q.field);
    let sq = generic_conic_square(ctx_q);
    let mut poly = MultiPoly::zero();
    for u in 0..15 {
        // Symmetric matrix: fold the off-diagonal pairs once with weight 2.
        for v in u..15 {
            let a = adj.at(u, v);
            if ctx_q.field.is_zero(a) {
                continue;
            }
            let w = if u == v { a.clone() } else { ctx_q.field.add(a, a) };
            let prod = sq[u].mul(ctx_q, &sq[v]).scale(ctx_q, &w);
            poly = poly.add(ctx_q, &prod);
        }
    }
    WMQuartic { poly, rank_l, det_l }
}

impl<F: Field> WMQuartic<F> {
    /// The six partial derivatives — the generators of the singular-locus ideal.
    pub fn gradient(&self, ctx_q: &Ctx<F>) -> Vec<MultiPoly<F>> {
        (0..6).map(|i| self.poly.derivative(ctx_q, i)).collect()
    }

    /// Evaluate the gradient at a conic; all six vanish iff the conic is a singular
    /// point of the covariant quartic.
    pub fn gradient_at(&self, ctx_q: &Ctx<F>, q: &ConicForm<F>) -> Vec<F::Elem> {
        let point: Vec<F::Elem> = q.coeffs.to_vec();
        self.gradient(ctx_q).iter().map(|d| d.eval(ctx_q, &point)).collect()
    }

    pub fn is_singular_at(&self, ctx_q: &Ctx<F>, q: &ConicForm<F>) -> bool {
        self.gradient_at(ctx_q, q).iter().all(|v| ctx_q.field.is_zero(v))
    }
}
