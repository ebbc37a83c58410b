//! The Aronhold invariant of ternary cubics: the degree-4 invariant that vanishes
//! exactly on sums of three cubes of linear forms.
//!
//! The invariant is a degree-4 polynomial in the ten plain coefficients of a cubic
//! (basis x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³). Its 715-dimensional
//! coefficient vector is pinned by interpolation: sums of three cubes fill a
//! hypersurface, and the space of quartic polynomials in the coefficients vanishing on
//! enough random samples of that hypersurface over Z/(2⁶¹−1) is one-dimensional. The
//! primitive integer representative (first nonzero coefficient positive) is stored in
//! `data/aronhold.txt`, re-derivable at any time by [`generate_table_text`]; a test
//! regenerates the table and diffs it against the shipped file.

use crate::ring::field::{Field, Fp, Rat};
use crate::ring::poly::Ctx;
use crate::ring::ternary::TernaryForm;
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::sync::OnceLock;

/// Number of plain coefficients of a ternary cubic.
pub const CUBIC_COEFFS: usize = 10;

/// Number of degree-4 monomials in ten variables: C(13, 4).
pub const MONOMIAL_COUNT: usize = 715;

/// Interpolated invariant: exponent tuples (descending lexicographic) with their
/// integer coefficients; zero coefficients are not stored.
pub struct AronholdTable {
    pub terms: Vec<([u8; CUBIC_COEFFS], i64)>,
}

/// All degree-4 exponent tuples in ten variables, in descending lexicographic order.
pub fn degree4_monomials() -> Vec<[u8; CUBIC_COEFFS]> {
    let mut out = Vec::with_capacity(MONOMIAL_COUNT);
    fn rec(pos: usize, left: u8, cur: &mut [u8; CUBIC_COEFFS], out: &mut Vec<[u8; CUBIC_COEFFS]>) {
        if pos == CUBIC_COEFFS - 1 {
            cur[pos] = left;
            out.push(*cur);
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut cur = [0u8; CUBIC_COEFFS];
    rec(0, 4, &mut cur, &mut out);
    assert_eq!(out.len(), MONOMIAL_COUNT);
    out
}

fn parse_table(text: &str) -> AronholdTable {
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(
            fields.len(),
            CUBIC_COEFFS + 1,
            "line {}: expected 10 exponents and a coefficient",
            lineno + 1
        );
        let mut exps = [0u8; CUBIC_COEFFS];
        for (i, f) in fields[..CUBIC_COEFFS].iter().enumerate() {
            exps[i] = f.parse().expect("exponent");
        }
        assert_eq!(exps.iter().map(|&e| e as u32).sum::<u32>(), 4, "line {}", lineno + 1);
        let coeff: i64 = fields[CUBIC_COEFFS].parse().expect("coefficient");
        assert!(coeff != 0, "line {}: zero coefficient stored", lineno + 1);
        terms.push((exps, coeff));
    }
    assert!(!terms.is_empty(), "empty invariant table");
    AronholdTable { terms }
}

/// The shipped table, parsed once.
pub fn table() -> &'static AronholdTable {
    static TABLE: OnceLock<AronholdTable> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(include_str!("../../data/aronhold.txt")))
}

/// Evaluate the Aronhold invariant on the ten plain coefficients of a ternary cubic.
pub fn aronhold<F: Field>(ctx: &Ctx<F>, c: &[F::Elem]) -> F::Elem {
    aronhold_with(ctx, c, table())
}

fn aronhold_with<F: Field>(ctx: &Ctx<F>, c: &[F::Elem], tab: &AronholdTable) -> F::Elem {
    assert_eq!(c.len(), CUBIC_COEFFS);
    let fld = &ctx.field;
    // Powers c[i]^e for e = 0..=4.
    let pows: Vec<[F::Elem; 5]> = c
        .iter()
        .map(|ci| {
            let mut p = [fld.one(), fld.one(), fld.one(), fld.one(), fld.one()];
            for e in 1..5 {
                p[e] = fld.mul(&p[e - 1], ci);
            }
            p
        })
        .collect();
    let mut acc = fld.zero();
    for (exps, coeff) in &tab.terms {
        let mut t = fld.from_i64(*coeff);
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                t = fld.mul(&t, &pows[i][e as usize]);
            }
        }
        acc = fld.add(&acc, &t);
    }
    acc
}

/// Plain coefficients of (ax + by + cz)³ over any field.
pub fn cube_of_line<F: Field>(ctx: &Ctx<F>, line: &[F::Elem; 3]) -> Vec<F::Elem> {
    TernaryForm::line(line[0].clone(), line[1].clone(), line[2].clone())
        .pow(ctx, 3)
        .coeffs
}

fn random_rank3_cubic(fld: &Fp, ctx: &Ctx<Fp>, rng: &mut SplitMix64) -> Vec<u64> {
    let p = fld.modulus();
    let mut total = vec![fld.zero(); CUBIC_COEFFS];
    for _ in 0..3 {
        let line = [rng.below(p), rng.below(p), rng.below(p)];
        let cube = cube_of_line(ctx, &line);
        for (t, c) in total.iter_mut().zip(&cube) {
            *t = fld.add(t, c);
        }
    }
    total
}

/// Balanced rational reconstruction of a mod p: the unique n/d with |n|, d ≤ bound and
/// n ≡ a·d (mod p), if one exists.
fn rational_reconstruct(a: u64, p: u64, bound: i64) -> Option<(i64, i64)> {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound as i128 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound as i128 {
        return None;
    }
    let (num, den) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    let g = gcd_i128(num.abs(), den);
    Some(((num / g) as i64, (den / g) as i64))
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Re-derive the invariant from scratch and render the table file. Errors carry a
/// description of the failed certification step.
///
/// Pipeline: 800 random sums of three cubes over Z/(2⁶¹−1) give linear conditions on
/// the 715 quartic-monomial coefficients; the nullspace must be one-dimensional; its
/// coordinates are lifted to Q by balanced rational reconstruction and cleared to a
/// primitive integer vector with positive leading coefficient. Certification: 200
/// held-out mod-p samples vanish, 20 exact rational sums of three cubes vanish over Q,
/// the invariant does not vanish on xyz, and on the pencil x³ + y³ + z³ + 6m·xyz it is
/// proportional to m − m⁴.
pub fn generate_table_text() -> Result<String, String> {
    let p61: u64 = (1u64 << 61) - 1;
    let fld = Fp::new(p61).map_err(|e| e.to_string())?;
    let ctx = Ctx::new(fld.clone(), 3, crate::ring::monomial::Order::Grevlex);
    let monomials = degree4_monomials();
    let mut rng = SplitMix64::new(0xA407_001D);

    let eval_row = |c: &[u64]| -> Vec<u64> {
        let pows: Vec<[u64; 5]> = c
            .iter()
            .map(|ci| {
                let mut pw = [1u64; 5];
                for e in 1..5 {
                    pw[e] = fld.mul(&pw[e - 1], ci);
                }
                pw
            })
            .collect();
        monomials
            .iter()
            .map(|exps| {
                let mut t = 1u64;
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        t = fld.mul(&t, &pows[i][e as usize]);
                    }
                }
                t
            })
            .collect()
    };

    let rows: Vec<Vec<u64>> =
        (0..800).map(|_| eval_row(&random_rank3_cubic(&fld, &ctx, &mut rng))).collect();
    let matrix = crate::exactla::SymMatrix::<Fp>::from_rows(rows);
    let kernel = matrix.kernel(&fld);
    if kernel.len() != 1 {
        return Err(format!(
            "interpolation nullspace has dimension {}, expected 1",
            kernel.len()
        ));
    }
    let v = &kernel[0];

    // Lift to a primitive integer vector.
    let bound = 1i64 << 25;
    let mut rationals = Vec::with_capacity(MONOMIAL_COUNT);
    for &a in v {
        let (n, d) =
            rational_reconstruct(a, p61, bound).ok_or("rational reconstruction failed")?;
        rationals.push((n, d));
    }
    let mut common_den: i128 = 1;
    for &(_, d) in &rationals {
        common_den = common_den / gcd_i128(common_den, d as i128) * d as i128;
    }
    let mut ints: Vec<i128> =
        rationals.iter().map(|&(n, d)| n as i128 * (common_den / d as i128)).collect();
    let mut g: i128 = 0;
    for &n in &ints {
        g = gcd_i128(g, n);
    }
    for n in ints.iter_mut() {
        *n /= g;
    }
    if let Some(first) = ints.iter().find(|&&n| n != 0) {
        if *first < 0 {
            for n in ints.iter_mut() {
                *n = -*n;
            }
        }
    }
    if ints.iter().any(|n| n.abs() >= (1i128 << 40)) {
        return Err("reconstructed coefficients implausibly large".into());
    }
    let coeffs: Vec<i64> = ints.iter().map(|&n| n as i64).collect();
    let tab = AronholdTable {
        terms: monomials
            .iter()
            .zip(&coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| (*m, c))
            .collect(),
    };

    // Certification, step 1: 200 held-out mod-p samples.
    for i in 0..200 {
        let c = random_rank3_cubic(&fld, &ctx, &mut rng);
        if !fld.is_zero(&aronhold_with(&ctx, &c, &tab)) {
            return Err(format!("held-out sample {i} does not vanish"));
        }
    }

    // Step 2: exact rational sums of three cubes vanish identically.
    let qctx = Ctx::new(Rat, 3, crate::ring::monomial::Order::Grevlex);
    for i in 0..20 {
        let mut total = vec![Rat::int(0); CUBIC_COEFFS];
        for _ in 0..3 {
            let line = [
                Rat::int(rng.range_i64(-20, 20)),
                Rat::int(rng.range_i64(-20, 20)),
                Rat::int(rng.range_i64(-20, 20)),
            ];
            let cube = cube_of_line(&qctx, &line);
            for (t, c) in total.iter_mut().zip(&cube) {
                *t = t.clone() + c.clone();
            }
        }
        if !aronhold_with(&qctx, &total, &tab).is_zero() {
            return Err(format!("exact rational sum of cubes {i} does not vanish"));
        }
    }

    // Step 3: does not vanish on the triangle xyz.
    let mut xyz = vec![Rat::int(0); CUBIC_COEFFS];
    xyz[4] = Rat::int(1);
    if aronhold_with(&qctx, &xyz, &tab).is_zero() {
        return Err("invariant vanishes on xyz".into());
    }

    // Step 4: on x³ + y³ + z³ + 6m·xyz the invariant is proportional to m − m⁴,
    // with one proportionality constant across the pencil.
    let hesse = |m: i64| -> Vec<BigRational> {
        let mut c = vec![Rat::int(0); CUBIC_COEFFS];
        c[0] = Rat::int(1);
        c[6] = Rat::int(1);
        c[9] = Rat::int(1);
        c[4] = Rat::int(6 * m);
        c
    };
    let expected = |m: i64| Rat::int(m) - Rat::int(m * m * m * m);
    let base = aronhold_with(&qctx, &hesse(2), &tab);
    if base.is_zero() {
        return Err("invariant vanishes on the m = 2 pencil member".into());
    }
    let lambda = base / expected(2);
    for m in [0i64, 1, 3, 5, 7] {
        let got = aronhold_with(&qctx, &hesse(m), &tab);
        if got != lambda.clone() * expected(m) {
            return Err(format!("pencil member m = {m} violates the m − m⁴ law"));
        }
    }

    // Render.
    let mut out = String::new();
    out.push_str("# Aronhold invariant of ternary cubics.\n");
    out.push_str("# Degree-4 polynomial in the ten plain cubic coefficients\n");
    out.push_str("# (x3 x2y x2z xy2 xyz xz2 y3 y2z yz2 z3); primitive integer\n");
    out.push_str("# coefficients, first nonzero positive; exponent tuples in\n");
    out.push_str("# descending lexicographic order; zero terms omitted.\n");
    for (exps, c) in &tab.terms {
        let e: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{} {}\n", e.join(" "), c));
    }
    Ok(out)
}

/// Evaluate on an exact integer cubic given as a `BigInt` slice (certification helper).
pub fn aronhold_bigint(c: &[BigInt]) -> BigInt {
    assert_eq!(c.len(), CUBIC_COEFFS);
    let tab = table();
    let mut acc = BigInt::zero();
    for (exps, coeff) in &tab.terms {
        let mut t = BigInt::from(*coeff);
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                t *= &c[i];
            }
        }
        acc += t;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::monomial::Order;

    #[test]
    fn monomial_enumeration_is_715_descending_lex() {
        let m = degree4_monomials();
        assert_eq!(m.len(), MONOMIAL_COUNT);
        assert_eq!(m[0], [4, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(m[714], [0, 0, 0, 0, 0, 0, 0, 0, 0, 4]);
        for w in m.windows(2) {
            assert!(w[0] > w[1], "descending lexicographic order");
        }
    }

    #[test]
    #[ignore = "writes data/aronhold.txt; run explicitly to regenerate the table"]
    fn regenerate_and_write_table() {
        let text = generate_table_text().expect("regeneration certifies");
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/aronhold.txt");
        std::fs::write(path, text).expect("write table file");
    }

    #[test]
    fn shipped_table_matches_regeneration_from_scratch() {
        let regenerated = generate_table_text().expect("regeneration certifies");
        let shipped = include_str!("../../data/aronhold.txt");
        assert_eq!(shipped, regenerated, "data/aronhold.txt is stale; regenerate it");
    }

    #[test]
    fn invariant_vanishes_on_sums_of_three_cubes_and_not_on_the_triangle() {
        let qctx = Ctx::new(Rat, 3, Order::Grevlex);
        let mut rng = SplitMix64::new(99);
        for _ in 0..5 {
            let mut total = vec![Rat::int(0); CUBIC_COEFFS];
            for _ in 0..3 {
                let line = [
                    Rat::int(rng.range_i64(-9, 9)),
                    Rat::int(rng.range_i64(-9, 9)),
                    Rat::int(rng.range_i64(-9, 9)),
                ];
                for (t, c) in total.iter_mut().zip(&cube_of_line(&qctx, &line)) {
                    *t = t.clone() + c.clone();
                }
            }
            assert!(aronhold(&qctx, &total).is_zero());
        }
        let mut xyz = vec![Rat::int(0); CUBIC_COEFFS];
        xyz[4] = Rat::int(1);
        assert!(!aronhold(&qctx, &xyz).is_zero());
        // Four generic cubes no longer vanish.
        let mut four = vec![Rat::int(0); CUBIC_COEFFS];
        for line in [[1i64, 2, 3], [5, -1, 2], [0, 3, -4], [7, 1, 1]] {
            let l = [Rat::int(line[0]), Rat::int(line[1]), Rat::int(line[2])];
            for (t, c) in four.iter_mut().zip(&cube_of_line(&qctx, &l)) {
                *t = t.clone() + c.clone();
            }
        }
        assert!(!aronhold(&qctx, &four).is_zero());
    }

    #[test]
    fn hesse_pencil_law_pins_the_classical_normalization() {
        let qctx = Ctx::new(Rat, 3, Order::Grevlex);
        let hesse = |m: i64| {
            let mut c = vec![Rat::int(0); CUBIC_COEFFS];
            c[0] = Rat::int(1);
            c[6] = Rat::int(1);
            c[9] = Rat::int(1);
            c[4] = Rat::int(6 * m);
            c
        };
        let lambda = aronhold(&qctx, &hesse(2)) / (Rat::int(2) - Rat::int(16));
        assert!(!lambda.is_zero());
        for m in [3i64, 5, 11] {
            assert_eq!(
                aronhold(&qctx, &hesse(m)),
                lambda.clone() * (Rat::int(m) - Rat::int(m * m * m * m))
            );
        }
    }

    #[test]
    fn bigint_evaluation_agrees_with_the_rational_field() {
        let qctx = Ctx::new(Rat, 3, Order::Grevlex);
        let mut rng = SplitMix64::new(123);
        let ints: Vec<i64> = (0..CUBIC_COEFFS).map(|_| rng.range_i64(-9, 9)).collect();
        let as_big: Vec<BigInt> = ints.iter().map(|&n| BigInt::from(n)).collect();
        let as_rat: Vec<BigRational> = ints.iter().map(|&n| Rat::int(n)).collect();
        let big = aronhold_bigint(&as_big);
        let rat = aronhold(&qctx, &as_rat);
        assert_eq!(BigRational::from(big), rat);
    }

    #[test]
    fn rational_reconstruction_round_trips_small_fractions() {
        let p: u64 = (1 << 61) - 1;
        let fld = Fp::new(p).unwrap();
        for (n, d) in [(3i64, 7u64), (-22, 5), (1, 1), (-144, 1), (35, 36)] {
            let a = fld
                .mul(&fld.reduce_i64(n), &fld.inv(&(d % p)).unwrap());
            let (rn, rd) = rational_reconstruct(a, p, 1 << 25).unwrap();
            assert_eq!((rn, rd as u64), (n / gcd_i128(n as i128, d as i128) as i64, d / gcd_i128(n as i128, d as i128) as u64));
        }
    }
}
