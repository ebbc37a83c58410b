//! The end-to-end classification pipeline: build the White–Miller quartic of a plane
//! quartic, analyze its singular locus in the P⁵ of dual conics, and decide whether
//! the curve is Lüroth — recovering the pentalateral-theta conic, the Clebsch
//! preimage, and an explicit inscribed pentalateral in the affirmative case.
//!
//! The singular locus of WM_f always contains the 28 rank-2 conics attached to the
//! bitangents; extra singular points that are smooth conics are pentalateral thetas.
//! Branch structure on the scheme (dimension, degree) of the singular locus:
//!   (i) 0-dimensional of degree 28 → not Lüroth,
//!   (ii) 0-dimensional of degree 29 → one smooth-conic point: recover it exactly,
//!        certify the Clebsch round trip, and extract a pentalateral,
//!   (iii) anything else → indeterminate, with saturation diagnostics and — when the
//!        smooth-conic locus is finite — its count δ.

use crate::exactla::SymMatrix;
use crate::groebner::{
    groebner, hilbert_data, quotient, saturation_localized, Budget, GroebnerBasis, GroebnerError,
    HilbertData,
};
use crate::invariants::{
    bordered_recover, build_l, catalecticant, d2_monomials, is_scalar_times_square, trilinear_a,
    wm_quartic, ConicForm, WMQuartic,
};
use crate::ring::field::{Field, Fp, Rat};
use crate::ring::monomial::{Monomial, Order};
use crate::ring::poly::{Ctx, MultiPoly};
use crate::ring::ternary::TernaryForm;

/// Tunable limits for a classification run.
#[derive(Clone, Debug)]
pub struct DetectorOptions {
    /// Total budget (leading-term cancellations) shared by all basis computations
    /// in one call.
    pub budget_limit: u64,
    /// Max-norm bound for rational-point searches on conics.
    pub height_bound: i64,
    /// Primes used for modular counting in `classify_verified`; all must agree.
    pub counting_primes: Vec<u64>,
}

impl Default for DetectorOptions {
    fn default() -> Self {
        DetectorOptions {
            budget_limit: Budget::default_limit(),
            height_bound: 50,
            counting_primes: vec![Fp::DEFAULT_PRIME, Fp::VERIFY_PRIMES[0]],
        }
    }
}

/// Context for polynomials on the P⁵ of dual conics: variables q₀…q₅ are the
/// coefficients of y₀², y₀y₁, y₀y₂, y₁², y₁y₂, y₂².
pub fn conic_space_ctx<F: Field>(field: F) -> Ctx<F> {
    Ctx::new(field, 6, Order::Grevlex)
}

/// The discriminant cubic of singular conics: 4q₀q₃q₅ + q₁q₂q₄ − q₀q₄² − q₃q₂² − q₅q₁²,
/// which is 4·det of the symmetric 3×3 conic matrix.
pub fn conic_discriminant<F: Field>(ctx: &Ctx<F>) -> MultiPoly<F> {
    assert!(ctx.nvars >= 6);
    let t = |exps: &[u16; 6], c: i64| {
        let mut e = [0u16; crate::ring::monomial::MAX_VARS];
        e[..6].copy_from_slice(exps);
        (Monomial::from_exps(&e), ctx.field.from_i64(c))
    };
    MultiPoly::from_terms(
        ctx,
        vec![
            t(&[1, 0, 0, 1, 0, 1], 4),
            t(&[0, 1, 1, 0, 1, 0], 1),
            t(&[1, 0, 0, 0, 2, 0], -1),
            t(&[0, 0, 2, 1, 0, 0], -1),
            t(&[0, 2, 0, 0, 0, 1], -1),
        ],
    )
}

/// The singular locus of the White–Miller quartic: the ideal of its six partial
/// derivatives, with a reduced basis and Hilbert data attached.
pub struct SingularLocus<F: Field> {
    pub wm: WMQuartic<F>,
    pub generators: Vec<MultiPoly<F>>,
    pub basis: GroebnerBasis<F>,
    pub hilbert: HilbertData,
}

pub fn singular_locus<F: Field>(
    ctx_q: &Ctx<F>,
    f: &TernaryForm<F>,
    budget: &mut Budget,
) -> Result<SingularLocus<F>, GroebnerError> {
    let wm = wm_quartic(ctx_q, f);
    let generators = wm.gradient(ctx_q);
    let basis = groebner(ctx_q, &generators, budget)?;
    let hilbert = hilbert_data(&basis, 6);
    Ok(SingularLocus { wm, generators, basis, hilbert })
}

/// Classification outcome tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    NotLuroth,
    Luroth,
    Indeterminate,
}

/// An explicit pentalateral: five lines lᵢ and weights wᵢ with g = Σ wᵢ lᵢ⁴ for the
/// recovered Clebsch form g. The 10 pairwise intersections of the lines lie on f.
#[derive(Clone, Debug)]
pub struct Pentalateral<F: Field> {
    pub lines: Vec<[F::Elem; 3]>,
    pub weights: Vec<F::Elem>,
}

/// Payload attached to a Lüroth classification.
#[derive(Clone, Debug)]
pub struct LurothPayload<F: Field> {
    /// The pentalateral-theta conic: the smooth dual conic at the extra singular
    /// point of WM_f, normalized so its first nonzero coefficient is 1.
    pub conic: ConicForm<F>,
    /// The Clebsch preimage g under the covariant pairing, normalized likewise.
    pub clebsch: TernaryForm<F>,
    /// The inscribed pentalateral, when extraction over the base field succeeded.
    pub pentalateral: Option<Pentalateral<F>>,
}

/// Everything measured along the way, for reporting.
#[derive(Clone, Debug, Default)]
pub struct Diagnostics {
    pub det_l_nonzero: bool,
    pub rank_l: usize,
    /// Whether WM_f is a nonzero scalar times a perfect square (checked on the
    /// det L_f = 0 route).
    pub wm_double_quadric: Option<bool>,
    /// (projective dimension, degree) of the singular locus of WM_f.
    pub singular_locus: Option<(i64, i64)>,
    /// (projective dimension, degree) of the colon quotient (J : C) by the conic
    /// discriminant, when computed.
    pub quotient: Option<(i64, i64)>,
    /// (projective dimension, degree) of the saturation (J : C^∞), when computed.
    pub saturation: Option<(i64, i64)>,
    /// Count of pentalateral thetas when the smooth-conic locus is finite.
    pub delta: Option<i64>,
    /// Rank of the catalecticant of the recovered Clebsch form.
    pub rank_c_g: Option<usize>,
    /// Total leading-term cancellations spent across all basis computations — a
    /// deterministic measure of work done.
    pub work_units: u64,
    /// Fields in which each stage ran, e.g. "Z/65521" or "Q".
    pub fields_used: Vec<String>,
    pub notes: Vec<String>,
}

/// The full classification result.
#[derive(Clone, Debug)]
pub struct Classification<F: Field> {
    pub tag: Tag,
    pub payload: Option<LurothPayload<F>>,
    pub diagnostics: Diagnostics,
}

fn field_name<F: Field>(field: &F) -> String {
    match field.characteristic() {
        Some(p) => format!("Z/{p}"),
        None => "Q".to_string(),
    }
}

/// Normalize a form projectively: divide by the first nonzero plain coefficient.
fn normalize_form<F: Field>(ctx: &Ctx<F>, f: &TernaryForm<F>) -> TernaryForm<F> {
    for c in &f.coeffs {
        if !ctx.field.is_zero(c) {
            let inv = ctx.field.inv(c).expect("nonzero");
            return f.scale(ctx, &inv);
        }
    }
    f.clone()
}

/// Rescale a rational form to coprime integer coefficients with positive leading
/// coefficient — the canonical representative of its projective class, and the
/// representative with the smallest coefficients for downstream exact arithmetic.
fn primitive_integer_form(f: &TernaryForm<Rat>) -> TernaryForm<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};
    let mut denom_lcm = BigInt::from(1);
    for c in &f.coeffs {
        if !c.denom().is_zero() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
    }
    let ints: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for n in &ints {
        content = content.gcd(n);
    }
    if content.is_zero() {
        return f.clone();
    }
    let lead = ints.iter().find(|n| !n.is_zero()).expect("nonzero form");
    if lead.is_negative() {
        content = -content;
    }
    let coeffs: Vec<num_rational::BigRational> = ints
        .iter()
        .map(|n| num_rational::BigRational::from_integer(n / &content))
        .collect();
    let mut out = f.clone();
    out.coeffs = coeffs;
    out
}

fn normalize_conic<F: Field>(ctx: &Ctx<F>, q: &ConicForm<F>) -> ConicForm<F> {
    for c in &q.coeffs {
        if !ctx.field.is_zero(c) {
            let inv = ctx.field.inv(c).expect("nonzero");
            let scaled: Vec<F::Elem> = q.coeffs.iter().map(|x| ctx.field.mul(x, &inv)).collect();
            return ConicForm::from_slice(&scaled);
        }
    }
    q.clone()
}

/// Recover the unique singular point of WM_f away from the conic discriminant, as
/// the common zero of the saturation (J : C^∞). When that point is a single reduced
/// rational point Q, the saturation equals the full vanishing ideal of Q — its
/// reduced basis is five independent linear forms — so the point falls out of pure
/// linear algebra on the basis. Intended for prime fields; over the rationals use
/// the modular route in `classify_verified`.
pub fn saturated_point_recovery<F: Field>(
    ctx_q: &Ctx<F>,
    jacobian_basis: &[MultiPoly<F>],
    disc: &MultiPoly<F>,
    budget: &mut Budget,
) -> Result<(Option<ConicForm<F>>, Vec<String>), GroebnerError> {
    let sat = saturation_localized(ctx_q, jacobian_basis, disc, budget)?;
    let sb = GroebnerBasis { polys: sat, stats: Default::default() };
    match crate::groebner::extract_rational_point(ctx_q, &sb) {
        Some(p) => Ok((Some(ConicForm::from_slice(&p)), Vec::new())),
        None => {
            let hd = hilbert_data(&sb, 6);
            let notes = vec![format!(
                "the saturated singular locus away from the discriminant is not a single \
                 rational point (dimension {}, degree {})",
                hd.proj_dim, hd.degree
            )];
            Ok((None, notes))
        }
    }
}

/// Primes used for modular conic recovery with rational reconstruction: the Mersenne
/// prime 2⁶¹ − 1 and the largest prime below 2⁶³.
pub const RECOVERY_PRIMES: [u64; 2] = [(1 << 61) - 1, (1 << 63) - 25];

/// Rational reconstruction: find n/d with n ≡ r·d (mod m), |n| and d bounded by
/// roughly √(m/2), via the half-extended Euclidean algorithm.
fn rational_reconstruct(r: &num_bigint::BigInt, m: &num_bigint::BigInt) -> Option<Rat2> {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};
    let bound: BigInt = BigInt::from(1) << ((m.bits() as usize - 1) / 2);
    let mut r0 = m.clone();
    let mut t0 = BigInt::zero();
    let mut r1 = r.clone();
    let mut t1 = BigInt::from(1);
    while r1.abs() >= bound {
        if r1.is_zero() {
            return None;
        }
        let quo = &r0 / &r1;
        let r2 = &r0 - &quo * &r1;
        let t2 = &t0 - &quo * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (mut n, mut d) = (r1, t1);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    use num_integer::Integer;
    let g = n.gcd(&d);
    if g > BigInt::from(1) {
        n /= &g;
        d /= &g;
    }
    if d.gcd(m) != BigInt::from(1) {
        return None;
    }
    Some(num_rational::BigRational::new(n, d))
}

type Rat2 = num_rational::BigRational;

/// Combine residue systems r ≡ r₁ (mod m₁), r ≡ r₂ (mod m₂) for coprime moduli.
fn crt_combine(
    r1: &num_bigint::BigInt,
    m1: &num_bigint::BigInt,
    r2: &num_bigint::BigInt,
    m2: &num_bigint::BigInt,
) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    use num_integer::Integer;
    // Inverse of m₁ mod m₂ by the extended Euclidean algorithm.
    let e = m1.extended_gcd(m2);
    assert!(e.gcd == BigInt::from(1), "moduli must be coprime");
    let inv = e.x.mod_floor(m2);
    let diff = (r2 - r1).mod_floor(m2);
    let k = (diff * inv).mod_floor(m2);
    r1 + m1 * k
}

/// Recover the theta conic over Q: run the linear-algebra recovery modulo large
/// primes, then lift coordinates by CRT + rational reconstruction. No rational
/// Gröbner basis or rational kernel of the big slice matrix is ever computed; the
/// caller certifies the lifted candidate exactly, so a wrong lift can only lead to
/// an honest "indeterminate", never to a wrong "Lüroth".
fn recover_conic_rational(
    f: &TernaryForm<Rat>,
    wm_rat: &WMQuartic<Rat>,
    ctx_q_rat: &Ctx<Rat>,
    budget_limit: u64,
    notes: &mut Vec<String>,
    work_units: &mut u64,
) -> Result<Option<ConicForm<Rat>>, GroebnerError> {
    use num_bigint::BigInt;
    let mut acc: Option<(Vec<BigInt>, BigInt, usize)> = None;
    for &p in RECOVERY_PRIMES.iter() {
        let field = match Fp::new(p) {
            Ok(f) => f,
            Err(_) => continue,
        };
        let f_p: TernaryForm<Fp> = match f.map_field(|c| field.from_rational(c)) {
            Ok(g) => g,
            Err(_) => {
                notes.push(format!("recovery prime {p} divides a denominator of f; skipped"));
                continue;
            }
        };
        let ctx_q = conic_space_ctx(field.clone());
        let wm = wm_quartic(&ctx_q, &f_p);
        if field.is_zero(&wm.det_l) {
            notes.push(format!("recovery prime {p} is a bad reduction (det L_f ≡ 0); skipped"));
            continue;
        }
        let disc = conic_discriminant(&ctx_q);
        let gradient = wm.gradient(&ctx_q);
        let mut budget = Budget::new(budget_limit);
        let attempt = (|| {
            let basis = groebner(&ctx_q, &gradient, &mut budget)?;
            saturated_point_recovery(&ctx_q, &basis.polys, &disc, &mut budget)
        })();
        *work_units += budget.used();
        let (point, rec_notes) = attempt?;
        let Some(q_p) = point else {
            notes.extend(rec_notes.into_iter().map(|n| format!("mod {p}: {n}")));
            continue;
        };
        // Normalize the residue vector so its first nonzero coordinate is 1.
        let first = (0..6).find(|&i| q_p.coeffs[i] != 0).expect("nonzero conic");
        let inv = field.inv(&q_p.coeffs[first]).expect("nonzero");
        let coords: Vec<BigInt> =
            q_p.coeffs.iter().map(|c| BigInt::from(field.mul(c, &inv))).collect();
        let modulus = BigInt::from(p);
        acc = match acc {
            None => Some((coords, modulus, first)),
            Some((prev, m_prev, idx_prev)) => {
                if idx_prev != first {
                    notes.push(format!(
                        "recovery primes disagree on the conic's leading coordinate; \
                         keeping the residue mod {m_prev}"
                    ));
                    Some((prev, m_prev, idx_prev))
                } else {
                    let combined: Vec<BigInt> = prev
                        .iter()
                        .zip(coords.iter())
                        .map(|(a, b)| crt_combine(a, &m_prev, b, &modulus))
                        .collect();
                    Some((combined, m_prev * &modulus, idx_prev))
                }
            }
        };
        // Try to lift with what we have so far; accept only a lift that really is a
        // singular point of the rational White–Miller quartic.
        if let Some((res, m, _)) = &acc {
            let lifted: Option<Vec<Rat2>> =
                res.iter().map(|r| rational_reconstruct(r, m)).collect();
            if let Some(coords) = lifted {
                let candidate = ConicForm::<Rat>::from_slice(&coords);
                if wm_rat.is_singular_at(ctx_q_rat, &candidate) {
                    return Ok(Some(candidate));
                }
            }
        }
    }
    if acc.is_some() {
        notes.push(
            "rational reconstruction of the theta conic failed at the available \
             precision"
                .into(),
        );
    } else {
        notes.push("the theta conic could not be recovered modulo any prime".into());
    }
    Ok(None)
}

/// Exact certification data for a Lüroth classification.
pub struct Certification<F: Field> {
    pub clebsch: TernaryForm<F>,
    pub rank_c_g: usize,
}

/// Certify the branch-(ii) conditions exactly over the base field: Q is a smooth
/// singular point of WM_f; g recovered from (f, Q²) has det L_g ≠ 0 and recovers f
/// back; the catalecticant of g has rank 5 with Q in its kernel.
pub fn certify_luroth<F: Field>(
    ctx: &Ctx<F>,
    ctx_q: &Ctx<F>,
    f: &TernaryForm<F>,
    wm: &WMQuartic<F>,
    q: &ConicForm<F>,
) -> Result<Certification<F>, Vec<String>> {
    let mut errors = Vec::new();
    if !wm.is_singular_at(ctx_q, q) {
        errors.push("the recovered conic is not a singular point of the White–Miller quartic".into());
    }
    if !q.is_smooth(ctx) {
        errors.push("the recovered conic is singular".into());
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let q2 = q.square(ctx);
    let g = match bordered_recover(ctx, f, &q2) {
        Ok(g) => normalize_form(ctx, &g),
        Err(_) => {
            return Err(vec!["the contraction matrix of f is singular".into()]);
        }
    };
    let l_g = build_l(ctx, &g);
    if ctx.field.is_zero(&l_g.det(&ctx.field)) {
        errors.push("the recovered Clebsch form has singular contraction matrix".into());
        return Err(errors);
    }
    match bordered_recover(ctx, &g, &q2) {
        Ok(f_back) => {
            if !f_back.proportional(ctx, f) {
                errors.push(
                    "recovery round trip failed: the bordered recovery from the Clebsch form \
                     is not proportional to f"
                        .into(),
                );
            }
        }
        Err(_) => errors.push("recovery round trip failed: singular contraction matrix".into()),
    }
    let c_g = catalecticant(ctx, &g);
    let rank_c_g = c_g.rank(&ctx.field);
    if rank_c_g != 5 {
        errors.push(format!("the catalecticant of the Clebsch form has rank {rank_c_g}, not 5"));
    } else {
        let image = c_g.matvec(&ctx.field, &q.coeffs);
        if !image.iter().all(|c| ctx.field.is_zero(c)) {
            errors.push("the theta conic is not in the kernel of the catalecticant".into());
        }
    }
    if errors.is_empty() {
        Ok(Certification { clebsch: g, rank_c_g })
    } else {
        Err(errors)
    }
}

/// Deterministic enumeration of primitive integer triples by increasing max-norm,
/// first nonzero coordinate positive.
fn primitive_triples(height: i64) -> Vec<[i64; 3]> {
    fn gcd(a: i64, b: i64) -> i64 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    let mut out = Vec::new();
    for h in 0..=height {
        for a in -h..=h {
            for b in -h..=h {
                for c in -h..=h {
                    if a.abs().max(b.abs()).max(c.abs()) != h {
                        continue;
                    }
                    let first = if a != 0 { a } else if b != 0 { b } else { c };
                    if first <= 0 {
                        continue;
                    }
                    if gcd(gcd(a, b), c) != 1 {
                        continue;
                    }
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Result of the pentalateral extraction: the pentalateral when every step stayed
/// rational, and notes explaining any partial result.
pub struct ExtractionOutcome<F: Field> {
    pub pentalateral: Option<Pentalateral<F>>,
    pub notes: Vec<String>,
}

/// 2×2-determinant based Sylvester resultant of two conics with respect to y₂,
/// returned as the coefficients (ascending in y₁) of a binary quartic in (y₀, y₁).
/// Used to report the intersection quartic when rational root search fails.
fn pencil_resultant<F: Field>(ctx: &Ctx<F>, k1: &ConicForm<F>, k2: &ConicForm<F>) -> Vec<F::Elem> {
    // Write K = a·y₂² + (b₀y₀ + b₁y₁)·y₂ + (c₀y₀² + c₁y₀y₁ + c₂y₁²) for each conic,
    // build the 4×4 Sylvester matrix over F[y₀, y₁], and expand its determinant in a
    // 2-variable polynomial context.
    let ctx2 = Ctx::new(ctx.field.clone(), 2, Order::Grevlex);
    let lift = |q: &ConicForm<F>| -> [MultiPoly<F>; 3] {
        let y0 = Monomial::var(0);
        let y1 = Monomial::var(1);
        let a = MultiPoly::constant(&ctx2, q.coeffs[5].clone());
        let b = MultiPoly::from_terms(
            &ctx2,
            vec![(y0, q.coeffs[2].clone()), (y1, q.coeffs[4].clone())],
        );
        let c = MultiPoly::from_terms(
            &ctx2,
            vec![
                (y0.mul(&y0), q.coeffs[0].clone()),
                (y0.mul(&y1), q.coeffs[1].clone()),
                (y1.mul(&y1), q.coeffs[3].clone()),
            ],
        );
        [a, b, c]
    };
    let [a1, b1, c1] = lift(k1);
    let [a2, b2, c2] = lift(k2);
    let zero = MultiPoly::<F>::zero();
    let rows: [[&MultiPoly<F>; 4]; 4] = [
        [&a1, &b1, &c1, &zero],
        [&zero, &a1, &b1, &c1],
        [&a2, &b2, &c2, &zero],
        [&zero, &a2, &b2, &c2],
    ];
    // Permutation expansion of the 4×4 determinant with polynomial entries.
    let perms: [([usize; 4], i64); 24] = {
        let mut out = [([0usize; 4], 0i64); 24];
        let mut idx = 0;
        let items = [0usize, 1, 2, 3];
        fn permute(
            items: &mut [usize; 4],
            k: usize,
            out: &mut [([usize; 4], i64); 24],
            idx: &mut usize,
            sign: i64,
        ) {
            if k == 3 {
                out[*idx] = (*items, sign);
                *idx += 1;
                return;
            }
            for i in k..4 {
                let s = if i == k { sign } else { -sign };
                items.swap(k, i);
                permute(items, k + 1, out, idx, s);
                items.swap(k, i);
            }
        }
        let mut base = items;
        permute(&mut base, 0, &mut out, &mut idx, 1);
        out
    };
    let mut det = MultiPoly::<F>::zero();
    for (perm, sign) in perms {
        let mut prod = MultiPoly::constant(&ctx2, ctx.field.from_i64(sign));
        for (r, &c) in perm.iter().enumerate() {
            prod = prod.mul(&ctx2, rows[r][c]);
        }
        det = det.add(&ctx2, &prod);
    }
    // Read coefficients of y₀^{4−i} y₁^{i}.
    (0..=4)
        .map(|i| {
            let target = Monomial::from_exps(&[4 - i, i as u16, 0, 0, 0, 0, 0, 0]);
            det.terms
                .iter()
                .find(|(m, _)| *m == target)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| ctx.field.zero())
        })
        .collect()
}

/// Extract an inscribed pentalateral from a Clebsch form g with rank-5 catalecticant
/// and smooth kernel conic Q. Every point l₀ of Q seeds a unique decomposition
/// g = α₀l₀⁴ + (four more fourth powers): peeling α₀l₀⁴ drops the catalecticant rank
/// to 4, and the base points of the resulting kernel pencil of conics are the other
/// four lines. Seeds are tried in increasing height until one yields four rational
/// companions, rational weights, and all ten vertex conditions on f.
pub fn extract_pentalateral<F: Field>(
    ctx: &Ctx<F>,
    g: &TernaryForm<F>,
    q: &ConicForm<F>,
    f: &TernaryForm<F>,
    height_bound: i64,
) -> ExtractionOutcome<F> {
    const MAX_SEEDS: usize = 64;
    let field = &ctx.field;
    let triples = primitive_triples(height_bound);
    let to_point = |t: &[i64; 3]| -> [F::Elem; 3] {
        [field.from_i64(t[0]), field.from_i64(t[1]), field.from_i64(t[2])]
    };
    let c_g = catalecticant(ctx, g);
    let mut seeds_tried = 0usize;
    let mut last_failure: Option<String> = None;
    for t in &triples {
        if seeds_tried >= MAX_SEEDS {
            break;
        }
        let l0 = to_point(t);
        if !field.is_zero(&q.eval(ctx, &l0)) {
            continue;
        }
        seeds_tried += 1;
        match extraction_from_seed(ctx, g, f, &c_g, &l0, &triples, &to_point) {
            Ok(pentalateral) => {
                return ExtractionOutcome { pentalateral: Some(pentalateral), notes: Vec::new() }
            }
            Err(note) => last_failure = Some(note),
        }
    }
    let mut notes = Vec::new();
    match (seeds_tried, last_failure) {
        (0, _) => notes.push(format!(
            "the theta conic has no rational point of height ≤ {height_bound}; the \
             pentalateral is not defined over the base field within the search bound"
        )),
        (n, Some(why)) => notes.push(format!(
            "no pentalateral found from {n} seed point(s) of height ≤ {height_bound}; \
             last failure: {why}"
        )),
        (_, None) => unreachable!("a tried seed either succeeds or records a failure"),
    }
    ExtractionOutcome { pentalateral: None, notes }
}

/// One decomposition attempt from a fixed seed point l₀ on the kernel conic.
fn extraction_from_seed<F: Field>(
    ctx: &Ctx<F>,
    g: &TernaryForm<F>,
    f: &TernaryForm<F>,
    c_g: &SymMatrix<F>,
    l0: &[F::Elem; 3],
    triples: &[[i64; 3]],
    to_point: &impl Fn(&[i64; 3]) -> [F::Elem; 3],
) -> Result<Pentalateral<F>, String> {
    let field = &ctx.field;
    // Peeling weight: α₀ = 1/(v₀ᵗ w) where C_g·w = v₀ = d2(l₀). The fourth power
    // l₀⁴ has catalecticant v₀v₀ᵗ, and C_g − α₀·v₀v₀ᵗ kills w, dropping the rank.
    let v0 = d2_monomials(ctx, l0);
    let w = c_g
        .solve_particular(field, &v0)
        .ok_or_else(|| "the seed's moment vector is outside the catalecticant range".to_string())?;
    let mut s = field.zero();
    for (a, b) in v0.iter().zip(w.iter()) {
        s = field.add(&s, &field.mul(a, b));
    }
    if field.is_zero(&s) {
        return Err("the seed is self-conjugate for the catalecticant".into());
    }
    let alpha0 = field.inv(&s).expect("nonzero");
    let update =
        SymMatrix::<F>::from_fn(6, 6, |i, j| field.mul(&alpha0, &field.mul(&v0[i], &v0[j])));
    let dropped = c_g.sub(field, &update);
    if dropped.rank(field) != 4 {
        return Err("peeling the seed power does not drop the catalecticant rank to 4".into());
    }
    // The kernel of the dropped catalecticant is a pencil of conics through the four
    // remaining dual line-points.
    let kernel = dropped.kernel(field);
    if kernel.len() != 2 {
        return Err(format!(
            "the rank-4 catalecticant has a kernel of dimension {}, not 2",
            kernel.len()
        ));
    }
    let k1 = ConicForm::from_slice(&kernel[0]);
    let k2 = ConicForm::from_slice(&kernel[1]);
    // Common zeros of the pencil: search rational points by height.
    let mut lines: Vec<[F::Elem; 3]> = vec![l0.clone()];
    for t in triples {
        if lines.len() == 5 {
            break;
        }
        let p = to_point(t);
        if field.is_zero(&k1.eval(ctx, &p)) && field.is_zero(&k2.eval(ctx, &p)) {
            let dup = lines.iter().any(|l| {
                crate::ring::ternary::cross_products_vanish(ctx, l.as_slice(), p.as_slice())
            });
            if !dup {
                lines.push(p);
            }
        }
    }
    if lines.len() != 5 {
        let res = pencil_resultant(ctx, &k1, &k2);
        let shown: Vec<String> = res.iter().map(|c| field.fmt_elem(c)).collect();
        return Err(format!(
            "only {} of the 5 lines are rational within the height bound; the kernel \
             pencil's intersection quartic [{}] (coefficients ascending in y₁) does not \
             split over the base field within the bound",
            lines.len(),
            shown.join(", ")
        ));
    }
    // Solve g = Σ wᵢ lᵢ⁴ (15 plain coefficients, 5 unknowns) and verify exactly.
    let powers: Vec<TernaryForm<F>> = lines
        .iter()
        .map(|l| TernaryForm::line(l[0].clone(), l[1].clone(), l[2].clone()).pow(ctx, 4))
        .collect();
    let mat = SymMatrix::<F>::from_fn(15, 5, |m, i| powers[i].coeffs[m].clone());
    let weights = mat
        .solve_particular(field, &g.coeffs)
        .ok_or_else(|| "the recovered lines do not span the Clebsch form".to_string())?;
    if weights.iter().any(|w| field.is_zero(w)) {
        return Err("a recovered weight is zero: the decomposition uses fewer than 5 lines".into());
    }
    let mut recombined = TernaryForm::zero(ctx, 4);
    for (w, p4) in weights.iter().zip(powers.iter()) {
        recombined = recombined.add(ctx, &p4.scale(ctx, w));
    }
    if recombined.coeffs != g.coeffs {
        return Err("the weighted power sum does not reproduce the Clebsch form".into());
    }
    if weights[0] != alpha0 {
        return Err("the solved weight on the seed line differs from the peeling weight".into());
    }
    // All 10 vertices must lie on f.
    for i in 0..5 {
        for j in (i + 1)..5 {
            let a = trilinear_a(ctx, &powers[i], f, &powers[j]);
            if !field.is_zero(&a) {
                return Err(format!(
                    "the intersection of lines {i} and {j} is not on the curve"
                ));
            }
        }
    }
    Ok(Pentalateral { lines, weights })
}

/// Counting data for one prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularCounts {
    pub prime: u64,
    pub singular_locus: (i64, i64),
    pub quotient: Option<(i64, i64)>,
    pub saturation: Option<(i64, i64)>,
}

/// Run the modular counting pass for one prime: singular-locus Hilbert data, plus the
/// colon quotient when the degree says branch (ii), plus the saturation otherwise.
fn counting_pass(
    f: &TernaryForm<Rat>,
    prime: u64,
    budget: &mut Budget,
) -> Result<Result<ModularCounts, String>, GroebnerError> {
    let field = match Fp::new(prime) {
        Ok(f) => f,
        Err(_) => return Ok(Err(format!("{prime} is not a usable prime"))),
    };
    let f_p: TernaryForm<Fp> = match f.map_field(|c| field.from_rational(c)) {
        Ok(f) => f,
        Err(_) => {
            return Ok(Err(format!(
                "coefficients of f do not reduce modulo {prime} (denominator divisible by p)"
            )))
        }
    };
    let ctx_q = conic_space_ctx(field.clone());
    let locus = singular_locus(&ctx_q, &f_p, budget)?;
    let sing = (locus.hilbert.proj_dim, locus.hilbert.degree);
    let disc = conic_discriminant(&ctx_q);
    let mut quot = None;
    let mut sat = None;
    if sing == (0, 29) {
        let q = quotient(&ctx_q, &locus.basis.polys, &disc, budget)?;
        let qb = GroebnerBasis { polys: q, stats: Default::default() };
        let hd = hilbert_data(&qb, 6);
        quot = Some((hd.proj_dim, hd.degree));
    } else if sing != (0, 28) {
        let s = saturation_localized(&ctx_q, &locus.basis.polys, &disc, budget)?;
        let sb = GroebnerBasis { polys: s, stats: Default::default() };
        let hd = hilbert_data(&sb, 6);
        sat = Some((hd.proj_dim, hd.degree));
    }
    Ok(Ok(ModularCounts { prime, singular_locus: sing, quotient: quot, saturation: sat }))
}

/// Classify a rational quartic: modular counting over the configured primes (all of
/// which must agree), then exact recovery and certification over Q in the Lüroth
/// branch. Gröbner bases are never computed over Q — only finite fields count, and
/// the rational stage is pure linear algebra.
pub fn classify_verified(
    f: &TernaryForm<Rat>,
    opts: &DetectorOptions,
) -> Result<Classification<Rat>, GroebnerError> {
    let ctx = crate::fixtures::form_ctx(Rat);
    let mut diag = Diagnostics::default();
    assert_eq!(f.degree, 4, "classification expects a quartic");
    assert!(!f.is_zero(&ctx), "classification expects a nonzero quartic");
    // Scale-invariance and coefficient control: clear denominators and content.
    let f = primitive_integer_form(f);

    // Guard: the covariant pairing must be invertible to recover a Clebsch preimage.
    let l_f = build_l(&ctx, &f);
    diag.rank_l = l_f.rank(&Rat);
    diag.det_l_nonzero = diag.rank_l == 15;
    let ctx_q = conic_space_ctx(Rat);
    if !diag.det_l_nonzero {
        let wm = wm_quartic(&ctx_q, &f);
        diag.fields_used.push("Q".into());
        if wm.poly.is_zero() {
            diag.wm_double_quadric = Some(false);
            diag.notes.push(format!(
                "the contraction matrix has rank {} ≤ 13, so the White–Miller quartic \
                 vanishes identically and has no singular-locus geometry to analyze",
                diag.rank_l
            ));
            return Ok(Classification {
                tag: Tag::Indeterminate,
                payload: None,
                diagnostics: diag,
            });
        }
        let square = is_scalar_times_square(&ctx_q, &wm.poly);
        diag.wm_double_quadric = Some(square);
        diag.notes.push(format!(
            "the contraction matrix is singular (rank {}){}; the Clebsch recovery does \
             not apply",
            diag.rank_l,
            if square { " and the White–Miller quartic is a double hyperquadric" } else { "" }
        ));
        // Fall through: the singular locus of WM_f is still meaningful and is
        // reported, but the classification stays indeterminate.
    }

    // Modular counting with agreement across primes.
    let mut counts: Vec<ModularCounts> = Vec::new();
    let mut primes = opts.counting_primes.clone();
    let mut reserve: Vec<u64> = Fp::VERIFY_PRIMES
        .iter()
        .copied()
        .filter(|p| !primes.contains(p))
        .collect();
    let mut i = 0;
    while i < primes.len() {
        let p = primes[i];
        let mut budget = Budget::new(opts.budget_limit);
        let pass = counting_pass(&f, p, &mut budget);
        diag.work_units += budget.used();
        match pass? {
            Ok(c) => {
                diag.fields_used.push(format!("Z/{p}"));
                counts.push(c);
                i += 1;
            }
            Err(why) => {
                diag.notes.push(why);
                if let Some(r) = reserve.pop() {
                    primes[i] = r;
                } else {
                    i += 1;
                }
            }
        }
    }
    if counts.is_empty() {
        diag.notes.push("no usable counting prime".into());
        return Ok(Classification { tag: Tag::Indeterminate, payload: None, diagnostics: diag });
    }
    let agreed = counts.windows(2).all(|w| {
        w[0].singular_locus == w[1].singular_locus
            && w[0].quotient == w[1].quotient
            && w[0].saturation == w[1].saturation
    });
    if !agreed {
        for c in &counts {
            diag.notes.push(format!(
                "Z/{}: singular locus {:?}, quotient {:?}, saturation {:?}",
                c.prime, c.singular_locus, c.quotient, c.saturation
            ));
        }
        diag.notes
            .push("modular counts disagree across primes; rerun with more primes".into());
        return Ok(Classification { tag: Tag::Indeterminate, payload: None, diagnostics: diag });
    }
    let c0 = &counts[0];
    diag.singular_locus = Some(c0.singular_locus);
    diag.quotient = c0.quotient;
    diag.saturation = c0.saturation;

    if !diag.det_l_nonzero {
        // Counting ran purely for diagnostics; without an invertible contraction
        // matrix there is no Clebsch recovery, so the answer stays indeterminate.
        if let Some((sd, deg)) = c0.saturation {
            if sd <= 0 {
                diag.delta = Some(if sd < 0 { 0 } else { deg });
            } else {
                diag.notes.push(format!(
                    "away from the discriminant the singular locus is \
                     positive-dimensional (dimension {sd}, degree {deg})"
                ));
            }
        }
        return Ok(Classification { tag: Tag::Indeterminate, payload: None, diagnostics: diag });
    }

    match c0.singular_locus {
        (0, 28) => {
            diag.delta = Some(0);
            diag.notes.push(
                "the 28 singular points are exactly the bitangent conics; no smooth-conic \
                 singular point exists"
                    .into(),
            );
            Ok(Classification { tag: Tag::NotLuroth, payload: None, diagnostics: diag })
        }
        (0, 29) if c0.quotient == Some((0, 1)) => {
            // Exact recovery over Q: modular linear algebra lifted by rational
            // reconstruction, then unconditional certification.
            diag.fields_used.push("Q".into());
            let wm = wm_quartic(&ctx_q, &f);
            let conic = recover_conic_rational(
                &f,
                &wm,
                &ctx_q,
                opts.budget_limit,
                &mut diag.notes,
                &mut diag.work_units,
            )?;
            let Some(conic) = conic else {
                diag.notes.push(
                    "the pentalateral conic could not be recovered over the rationals"
                        .into(),
                );
                return Ok(Classification {
                    tag: Tag::Indeterminate,
                    payload: None,
                    diagnostics: diag,
                });
            };
            let conic = normalize_conic(&ctx, &conic);
            match certify_luroth(&ctx, &ctx_q, &f, &wm, &conic) {
                Ok(cert) => {
                    diag.rank_c_g = Some(cert.rank_c_g);
                    diag.delta = Some(1);
                    let extraction = extract_pentalateral(
                        &ctx,
                        &cert.clebsch,
                        &conic,
                        &f,
                        opts.height_bound,
                    );
                    diag.notes.extend(extraction.notes);
                    Ok(Classification {
                        tag: Tag::Luroth,
                        payload: Some(LurothPayload {
                            conic,
                            clebsch: cert.clebsch,
                            pentalateral: extraction.pentalateral,
                        }),
                        diagnostics: diag,
                    })
                }
                Err(errors) => {
                    diag.notes.extend(errors);
                    Ok(Classification {
                        tag: Tag::Indeterminate,
                        payload: None,
                        diagnostics: diag,
                    })
                }
            }
        }
        _ => {
            if let Some((sd, deg)) = c0.saturation {
                if sd <= 0 {
                    diag.delta = Some(if sd < 0 { 0 } else { deg });
                    diag.notes.push(format!(
                        "the smooth-conic singular locus is finite: {} pentalateral theta(s)",
                        diag.delta.unwrap()
                    ));
                } else {
                    diag.notes.push(format!(
                        "the smooth-conic singular locus is positive-dimensional \
                         (dimension {sd}, degree {deg}); the pentalateral-theta count is \
                         infinite or unknown"
                    ));
                }
            }
            if c0.singular_locus == (0, 29) {
                diag.notes.push(
                    "degree 29 but the colon quotient is not a single reduced point".into(),
                );
            }
            Ok(Classification { tag: Tag::Indeterminate, payload: None, diagnostics: diag })
        }
    }
}

/// Classify entirely within one field (used for prime-field runs from the CLI).
/// The same pipeline as `classify_verified`, but counting, recovery, and
/// certification all happen over `field` with no cross-checking.
pub fn classify<F: Field>(
    field: &F,
    f: &TernaryForm<F>,
    opts: &DetectorOptions,
) -> Result<Classification<F>, GroebnerError> {
    let ctx = crate::fixtures::form_ctx(field.clone());
    let ctx_q = conic_space_ctx(field.clone());
    let mut diag = Diagnostics::default();
    assert_eq!(f.degree, 4, "classification expects a quartic");
    assert!(!f.is_zero(&ctx), "classification expects a nonzero quartic");
    diag.fields_used.push(field_name(field));

    let f = normalize_form(&ctx, f);
    let l_f = build_l(&ctx, &f);
    diag.rank_l = l_f.rank(field);
    diag.det_l_nonzero = diag.rank_l == 15;
    if !diag.det_l_nonzero {
        let wm = wm_quartic(&ctx_q, &f);
        if wm.poly.is_zero() {
            diag.wm_double_quadric = Some(false);
            diag.notes.push(format!(
                "the contraction matrix has rank {} ≤ 13, so the White–Miller quartic \
                 vanishes identically and has no singular-locus geometry to analyze",
                diag.rank_l
            ));
            return Ok(Classification {
                tag: Tag::Indeterminate,
                payload: None,
                diagnostics: diag,
            });
        }
        let square = is_scalar_times_square(&ctx_q, &wm.poly);
        diag.wm_double_quadric = Some(square);
        diag.notes.push(format!(
            "the contraction matrix is singular (rank {}){}; the Clebsch recovery does \
             not apply",
            diag.rank_l,
            if square { " and the White–Miller quartic is a double hyperquadric" } else { "" }
        ));
    }

    let mut budget = Budget::new(opts.budget_limit);
    let locus = singular_locus(&ctx_q, &f, &mut budget)?;
    let sing = (locus.hilbert.proj_dim, locus.hilbert.degree);
    diag.singular_locus = Some(sing);
    let disc = conic_discriminant(&ctx_q);

    if !diag.det_l_nonzero {
        // Report the geometry away from the discriminant, then stop.
        let s = saturation_localized(&ctx_q, &locus.basis.polys, &disc, &mut budget)?;
        let sb = GroebnerBasis { polys: s, stats: Default::default() };
        let hd = hilbert_data(&sb, 6);
        diag.saturation = Some((hd.proj_dim, hd.degree));
        if hd.proj_dim <= 0 {
            diag.delta = Some(if hd.proj_dim < 0 { 0 } else { hd.degree });
        } else {
            diag.notes.push(format!(
                "away from the discriminant the singular locus is positive-dimensional \
                 (dimension {}, degree {})",
                hd.proj_dim, hd.degree
            ));
        }
        diag.work_units = budget.used();
        return Ok(Classification { tag: Tag::Indeterminate, payload: None, diagnostics: diag });
    }

    match sing {
        (0, 28) => {
            diag.delta = Some(0);
            diag.notes.push(
                "the 28 singular points are exactly the bitangent conics; no smooth-conic \
                 singular point exists"
                    .into(),
            );
            diag.work_units = budget.used();
            Ok(Classification { tag: Tag::NotLuroth, payload: None, diagnostics: diag })
        }
        (0, 29) => {
            let q = quotient(&ctx_q, &locus.basis.polys, &disc, &mut budget)?;
            let qb = GroebnerBasis { polys: q, stats: Default::default() };
            let hd = hilbert_data(&qb, 6);
            diag.quotient = Some((hd.proj_dim, hd.degree));
            if (hd.proj_dim, hd.degree) != (0, 1) {
                diag.notes.push(
                    "degree 29 but the colon quotient is not a single reduced point".into(),
                );
                diag.work_units = budget.used();
        return Ok(Classification {
                    tag: Tag::Indeterminate,
                    payload: None,
                    diagnostics: diag,
                });
            }
            let (point, rec_notes) =
                saturated_point_recovery(&ctx_q, &locus.basis.polys, &disc, &mut budget)?;
            diag.notes.extend(rec_notes);
            let Some(conic) = point else {
                diag.work_units = budget.used();
        return Ok(Classification {
                    tag: Tag::Indeterminate,
                    payload: None,
                    diagnostics: diag,
                });
            };
            let conic = normalize_conic(&ctx, &conic);
            match certify_luroth(&ctx, &ctx_q, &f, &locus.wm, &conic) {
                Ok(cert) => {
                    diag.rank_c_g = Some(cert.rank_c_g);
                    diag.delta = Some(1);
                    let extraction = extract_pentalateral(
                        &ctx,
                        &cert.clebsch,
                        &conic,
                        &f,
                        opts.height_bound,
                    );
                    diag.notes.extend(extraction.notes);
                    diag.work_units = budget.used();
                    Ok(Classification {
                        tag: Tag::Luroth,
                        payload: Some(LurothPayload {
                            conic,
                            clebsch: cert.clebsch,
                            pentalateral: extraction.pentalateral,
                        }),
                        diagnostics: diag,
                    })
                }
                Err(errors) => {
                    diag.notes.extend(errors);
                    diag.work_units = budget.used();
                    Ok(Classification {
                        tag: Tag::Indeterminate,
                        payload: None,
                        diagnostics: diag,
                    })
                }
            }
        }
        _ => {
            let s = saturation_localized(&ctx_q, &locus.basis.polys, &disc, &mut budget)?;
            let sb = GroebnerBasis { polys: s, stats: Default::default() };
            let hd = hilbert_data(&sb, 6);
            diag.saturation = Some((hd.proj_dim, hd.degree));
            if hd.proj_dim <= 0 {
                diag.delta = Some(if hd.proj_dim < 0 { 0 } else { hd.degree });
                diag.notes.push(format!(
                    "the smooth-conic singular locus is finite: {} pentalateral theta(s)",
                    diag.delta.unwrap()
                ));
            } else {
                diag.notes.push(format!(
                    "the smooth-conic singular locus is positive-dimensional (dimension {}, \
                     degree {}); the pentalateral-theta count is infinite or unknown",
                    hd.proj_dim, hd.degree
                ));
            }
            diag.work_units = budget.used();
            Ok(Classification { tag: Tag::Indeterminate, payload: None, diagnostics: diag })
        }
    }
}

/// The count of pentalateral thetas: the degree of the saturation of the singular
/// locus by the conic discriminant, when that saturation is finite.
#[derive(Clone, Debug)]
pub struct ThetaCount {
    /// (projective dimension, degree) of the full singular locus.
    pub singular_locus: (i64, i64),
    /// (projective dimension, degree) of the saturation (J : C^∞).
    pub saturation: (i64, i64),
    /// The count when the saturation is finite; None when positive-dimensional.
    pub count: Option<i64>,
}

pub fn count_pentalateral_thetas<F: Field>(
    ctx_q: &Ctx<F>,
    f: &TernaryForm<F>,
    budget: &mut Budget,
) -> Result<ThetaCount, GroebnerError> {
    let locus = singular_locus(ctx_q, f, budget)?;
    let disc = conic_discriminant(ctx_q);
    let s = saturation_localized(ctx_q, &locus.basis.polys, &disc, budget)?;
    let sb = GroebnerBasis { polys: s, stats: Default::default() };
    let hd = hilbert_data(&sb, 6);
    let count = if hd.proj_dim < 0 {
        Some(0)
    } else if hd.proj_dim == 0 {
        Some(hd.degree)
    } else {
        None
    };
    Ok(ThetaCount {
        singular_locus: (locus.hilbert.proj_dim, locus.hilbert.degree),
        saturation: (hd.proj_dim, hd.degree),
        count,
    })
}

/// The bitangent ideal: the jacobian ideal of WM_f with Hilbert data and an optional
/// univariate eliminant enumerating the 28 points in an affine chart.
pub struct BitangentIdeal<F: Field> {
    pub generators: Vec<MultiPoly<F>>,
    pub basis: GroebnerBasis<F>,
    pub hilbert: HilbertData,
    /// (chart variable set to 1, coordinate kept, ascending coefficients).
    pub eliminant: Option<(usize, usize, Vec<F::Elem>)>,
    pub notes: Vec<String>,
}

pub fn bitangent_ideal<F: Field>(
    ctx_q: &Ctx<F>,
    f: &TernaryForm<F>,
    want_eliminant: bool,
    budget: &mut Budget,
) -> Result<BitangentIdeal<F>, GroebnerError> {
    let locus = singular_locus(ctx_q, f, budget)?;
    let mut notes = Vec::new();
    let expected = locus.hilbert.degree;
    let mut eliminant = None;
    if want_eliminant {
        let mut best: Option<(usize, usize, Vec<F::Elem>)> = None;
        'outer: for (chart, coord) in [(0usize, 5usize), (5, 0), (1, 4), (2, 3)] {
            match chart_eliminant(ctx_q, &locus.basis.polys, chart, coord, budget) {
                Ok(Some(coeffs)) => {
                    let deg = coeffs.len() as i64 - 1;
                    let better = best
                        .as_ref()
                        .map(|(_, _, b)| (b.len() as i64 - 1) < deg)
                        .unwrap_or(true);
                    if better {
                        best = Some((chart, coord, coeffs));
                    }
                    if deg == expected {
                        break 'outer;
                    }
                }
                Ok(None) => {}
                Err(GroebnerError::BudgetExceeded { .. }) => {
                    notes.push(format!(
                        "eliminant attempt in chart q{chart} = 1 exceeded the budget"
                    ));
                    break 'outer;
                }
                Err(e) => return Err(e),
            }
        }
        match &best {
            Some((chart, coord, coeffs)) => {
                let deg = coeffs.len() as i64 - 1;
                if deg != expected {
                    notes.push(format!(
                        "the best eliminant (chart q{chart} = 1, coordinate q{coord}) has \
                         degree {deg}, less than the scheme degree {expected}: some points \
                         are at infinity in this chart or collide in this projection"
                    ));
                }
            }
            None => notes.push("no chart produced a univariate eliminant".into()),
        }
        eliminant = best;
    }
    Ok(BitangentIdeal {
        generators: locus.generators,
        basis: locus.basis,
        hilbert: locus.hilbert,
        eliminant,
        notes,
    })
}

/// Dehomogenize at `chart` = 1, swap `coord` into the last position, and eliminate
/// everything else; returns the ascending coefficients of the univariate generator.
fn chart_eliminant<F: Field>(
    ctx_q: &Ctx<F>,
    basis: &[MultiPoly<F>],
    chart: usize,
    coord: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<F::Elem>>, GroebnerError> {
    assert_ne!(chart, coord);
    // Build the substitution images: q_chart ↦ 1, q_coord ↦ q₅, q₅ ↦ q_coord.
    let images: Vec<MultiPoly<F>> = (0..6)
        .map(|v| {
            if v == chart {
                MultiPoly::constant(ctx_q, ctx_q.field.one())
            } else if v == coord {
                MultiPoly::var(ctx_q, 5)
            } else if v == 5 {
                MultiPoly::var(ctx_q, coord)
            } else {
                MultiPoly::var(ctx_q, v)
            }
        })
        .collect();
    let affine: Vec<MultiPoly<F>> =
        basis.iter().map(|p| p.substitute(ctx_q, &images)).filter(|p| !p.is_zero()).collect();
    let elim = crate::groebner::eliminate(ctx_q, &affine, 5, budget)?;
    // The elimination ideal lives in k[q₅]; a zero-dimensional chart gives a single
    // univariate generator.
    let univariate: Vec<&MultiPoly<F>> = elim
        .iter()
        .filter(|p| p.terms.iter().all(|(m, _)| (0..5).all(|i| m.exp(i) == 0)))
        .collect();
    if univariate.len() != 1 {
        return Ok(None);
    }
    let p = univariate[0];
    let deg = p.terms.iter().map(|(m, _)| m.exp(5)).max().unwrap_or(0);
    let mut coeffs = vec![ctx_q.field.zero(); deg as usize + 1];
    for (m, c) in &p.terms {
        coeffs[m.exp(5) as usize] = c.clone();
    }
    Ok(Some(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        form_ctx, klein_quartic, standard_luroth_quartic, standard_pentalateral,
    };
    use crate::rng::SplitMix64;

    #[test]
    fn the_discriminant_polynomial_matches_the_conic_discriminant() {
        let field = Fp::new(65521).unwrap();
        let ctx_q = conic_space_ctx(field.clone());
        let ctx = form_ctx(field.clone());
        let disc = conic_discriminant(&ctx_q);
        let mut rng = SplitMix64::new(0xD15C);
        for _ in 0..20 {
            let coeffs: Vec<u64> = (0..6).map(|_| field.reduce_i64(rng.range_i64(-9, 9))).collect();
            let q = ConicForm::<Fp>::from_slice(&coeffs);
            let direct = q.discriminant(&ctx);
            let via_poly = disc.eval(&ctx_q, &coeffs);
            assert_eq!(direct, via_poly);
        }
    }

    #[test]
    fn primitive_triples_are_primitive_and_deterministic() {
        let ts = primitive_triples(3);
        assert!(ts.contains(&[1, 0, 0]));
        assert!(ts.contains(&[0, 1, 0]));
        assert!(ts.contains(&[1, 1, 1]));
        assert!(ts.contains(&[1, 2, 3]));
        assert!(!ts.contains(&[2, 4, 6]));
        assert!(!ts.contains(&[-1, 0, 0]));
        // Deterministic ordering: height shells ascend.
        let ts2 = primitive_triples(3);
        assert_eq!(ts, ts2);
    }

    #[test]
    fn extraction_recovers_a_known_power_sum_decomposition() {
        // g = Σ lᵢ⁴ over the standard pentalateral is Clebsch with a rank-5
        // catalecticant; its kernel conic is the dual conic through the 5 line
        // points, and the extraction should find five lines of the same family.
        let ctx = form_ctx(Rat);
        let lines = standard_pentalateral(&ctx);
        let mut g = TernaryForm::zero(&ctx, 4);
        for l in &lines {
            g = g.add(&ctx, &l.pow(&ctx, 4));
        }
        let c_g = catalecticant(&ctx, &g);
        assert_eq!(c_g.rank(&Rat), 5);
        let kernel = c_g.kernel(&Rat);
        assert_eq!(kernel.len(), 1);
        let q = ConicForm::from_slice(&kernel[0]);
        assert!(q.is_smooth(&ctx));
        // The five dual points lie on the kernel conic.
        for l in &lines {
            let p = [l.coeffs[0].clone(), l.coeffs[1].clone(), l.coeffs[2].clone()];
            assert!(Rat.is_zero(&q.eval(&ctx, &p)));
        }
        // f = the inscribed quartic; its vertices are the pairwise intersections.
        let f = standard_luroth_quartic(&ctx);
        let out = extract_pentalateral(&ctx, &g, &q, &f, 10);
        let penta = out.pentalateral.expect("extraction succeeds");
        assert_eq!(penta.lines.len(), 5);
        // The recovered decomposition reproduces g exactly (verified internally);
        // check that each recovered line lies on the kernel conic.
        for l in &penta.lines {
            assert!(Rat.is_zero(&q.eval(&ctx, l)));
        }
    }

    #[test]
    fn saturation_recovery_finds_the_theta_conic_of_the_standard_curve() {
        // The point extracted from the saturated jacobian ideal must be a smooth
        // singular point of WM_f, and the certification chain must accept it.
        let field = Fp::new(65521).unwrap();
        let ctx = form_ctx(field.clone());
        let ctx_q = conic_space_ctx(field.clone());
        let f = standard_luroth_quartic(&ctx);
        let wm = wm_quartic(&ctx_q, &f);
        assert!(!field.is_zero(&wm.det_l));
        let disc = conic_discriminant(&ctx_q);
        let gradient = wm.gradient(&ctx_q);
        let mut budget = Budget::default();
        let basis = groebner(&ctx_q, &gradient, &mut budget).unwrap();
        let (point, rec_notes) =
            saturated_point_recovery(&ctx_q, &basis.polys, &disc, &mut budget).unwrap();
        let q = point.unwrap_or_else(|| panic!("recovery failed: {rec_notes:?}"));
        assert!(q.is_smooth(&ctx));
        assert!(wm.is_singular_at(&ctx_q, &q));
        // And the certification chain accepts it.
        let cert = certify_luroth(&ctx, &ctx_q, &f, &wm, &q).expect("certification");
        assert_eq!(cert.rank_c_g, 5);
    }

    #[test]
    fn rational_recovery_lifts_the_standard_theta_conic() {
        let ctx = form_ctx(Rat);
        let ctx_q = conic_space_ctx(Rat);
        let f = standard_luroth_quartic(&ctx);
        let wm = wm_quartic(&ctx_q, &f);
        let mut notes = Vec::new();
        let mut work = 0u64;
        let q = recover_conic_rational(&f, &wm, &ctx_q, Budget::default_limit(), &mut notes, &mut work)
            .unwrap()
            .unwrap_or_else(|| panic!("recovery failed: {notes:?}"));
        assert!(q.is_smooth(&ctx));
        assert!(wm.is_singular_at(&ctx_q, &q));
        let q = normalize_conic(&ctx, &q);
        let cert = certify_luroth(&ctx, &ctx_q, &f, &wm, &q).expect("certification");
        assert_eq!(cert.rank_c_g, 5);
    }

    #[test]
    fn recovery_prime_constants_are_prime() {
        // Deterministic Miller–Rabin, valid for all u64 with these witnesses.
        fn mulmod(a: u64, b: u64, m: u64) -> u64 {
            ((a as u128 * b as u128) % m as u128) as u64
        }
        fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
            let mut acc = 1u64;
            b %= m;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, b, m);
                }
                b = mulmod(b, b, m);
                e >>= 1;
            }
            acc
        }
        fn is_prime(n: u64) -> bool {
            if n < 2 {
                return false;
            }
            for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
                if n == p {
                    return true;
                }
                if n % p == 0 {
                    return false;
                }
            }
            let mut d = n - 1;
            let mut s = 0;
            while d % 2 == 0 {
                d /= 2;
                s += 1;
            }
            'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
                let mut x = powmod(a, d, n);
                if x == 1 || x == n - 1 {
                    continue;
                }
                for _ in 0..s - 1 {
                    x = mulmod(x, x, n);
                    if x == n - 1 {
                        continue 'witness;
                    }
                }
                return false;
            }
            true
        }
        for &p in RECOVERY_PRIMES.iter() {
            assert!(is_prime(p), "{p} must be prime");
        }
    }

    #[test]
    fn rational_reconstruction_round_trips_small_fractions() {
        use num_bigint::BigInt;
        let p = BigInt::from(RECOVERY_PRIMES[0]);
        for (n, d) in [(1i64, 1i64), (-7, 3), (22, 7), (-355, 113), (0, 1), (65536, 12345)] {
            // Residue of n/d mod p.
            let dinv = {
                let e = num_integer::Integer::extended_gcd(&BigInt::from(d), &p);
                num_integer::Integer::mod_floor(&e.x, &p)
            };
            let r = num_integer::Integer::mod_floor(&(BigInt::from(n) * dinv), &p);
            let rec = rational_reconstruct(&r, &p).expect("reconstructs");
            assert_eq!(rec, num_rational::BigRational::new(BigInt::from(n), BigInt::from(d)));
        }
    }

    #[test]
    fn classify_over_a_prime_field_detects_the_standard_curve() {
        let field = Fp::new(65521).unwrap();
        let ctx = form_ctx(field.clone());
        let f = standard_luroth_quartic(&ctx);
        let out = classify(&field, &f, &DetectorOptions::default()).unwrap();
        assert_eq!(out.tag, Tag::Luroth, "diagnostics: {:?}", out.diagnostics);
        assert_eq!(out.diagnostics.singular_locus, Some((0, 29)));
        assert_eq!(out.diagnostics.quotient, Some((0, 1)));
        assert_eq!(out.diagnostics.delta, Some(1));
        let payload = out.payload.expect("payload");
        assert!(payload.conic.is_smooth(&ctx));
        let penta = payload.pentalateral.expect("pentalateral extracted");
        assert_eq!(penta.lines.len(), 5);
    }

    #[test]
    fn classify_over_a_prime_field_rejects_the_klein_curve() {
        let field = Fp::new(65521).unwrap();
        let ctx = form_ctx(field.clone());
        let f = klein_quartic(&ctx);
        let out = classify(&field, &f, &DetectorOptions::default()).unwrap();
        assert_eq!(out.tag, Tag::NotLuroth, "diagnostics: {:?}", out.diagnostics);
        assert_eq!(out.diagnostics.singular_locus, Some((0, 28)));
        assert_eq!(out.diagnostics.delta, Some(0));
    }

    #[test]
    fn klein_singular_locus_has_dimension_zero_and_degree_28() {
        let field = Fp::new(65521).unwrap();
        let ctx = form_ctx(field.clone());
        let ctx_q = conic_space_ctx(field);
        let f = klein_quartic(&ctx);
        let mut budget = Budget::default();
        let locus = singular_locus(&ctx_q, &f, &mut budget).unwrap();
        assert_eq!(locus.hilbert.proj_dim, 0);
        assert_eq!(locus.hilbert.degree, 28);
    }
}
