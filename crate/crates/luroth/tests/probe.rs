// Temporary investigation probe — delete before committing.
use luroth::detector::*;
use luroth::fixtures;
use luroth::groebner::{hilbert_data, saturation, Budget, GroebnerBasis};
use luroth::invariants::build_l;
use luroth::ring::field::{Field, Fp, Rat};
use luroth::ring::ternary::TernaryForm;
use std::time::Instant;

fn probe_over_prime(name: &str, which: usize, p: u64) {
    let field = Fp::new(p).unwrap();
    let ctx = fixtures::form_ctx(field.clone());
    let ctx_q = conic_space_ctx(field.clone());
    let f = match which {
        0 => fixtures::edge_quartic(&ctx),
        1 => fixtures::eight_theta_quartic(&ctx),
        _ => fixtures::double_conic_quartic(&ctx),
    };
    let l = build_l(&ctx, &f);
    let rank = l.rank(&field);
    let det = l.det(&field);
    let t = Instant::now();
    let mut budget = Budget::new(200_000_000);
    match count_pentalateral_thetas(&ctx_q, &f, &mut budget) {
        Ok(tc) => println!(
            "{name} mod {p}: rank_l={} det_zero={} sing={:?} sat={:?} count={:?}  [{:?}]",
            rank,
            field.is_zero(&det),
            tc.singular_locus,
            tc.saturation,
            tc.count,
            t.elapsed()
        ),
        Err(e) => println!("{name} mod {p}: rank_l={rank} ERR {e:?}"),
    }
}

#[test]
fn probe_ranks_over_q() {
    let ctx = fixtures::form_ctx(Rat);
    for (name, f) in [
        ("edge", fixtures::edge_quartic(&ctx)),
        ("eight", fixtures::eight_theta_quartic(&ctx)),
        ("double-conic", fixtures::double_conic_quartic(&ctx)),
    ] {
        let l = build_l(&ctx, &f);
        let rank = l.rank(&Rat);
        let det = l.det(&Rat);
        println!("{name} over Q: rank_l={rank} det={det}");
    }
}

#[test]
fn probe_edge_primes() {
    for p in [65521u64, 65537, 65539, 32749, 1000003] {
        probe_over_prime("edge", 0, p);
    }
}

#[test]
fn probe_eight_primes() {
    for p in [65521u64, 65537, 65539, 32749, 1000003] {
        probe_over_prime("eight", 1, p);
    }
}

#[test]
fn probe_double_conic_primes() {
    for p in [65521u64, 65537, 65539, 32749, 1000003] {
        probe_over_prime("double-conic", 2, p);
    }
}

#[test]
fn probe_eight_slow_saturation() {
    // Cross-check the localized saturation against the iterated colon quotient.
    let field = Fp::new(65521).unwrap();
    let ctx = fixtures::form_ctx(field.clone());
    let ctx_q = conic_space_ctx(field.clone());
    let f = fixtures::eight_theta_quartic(&ctx);
    let mut budget = Budget::new(400_000_000);
    let locus = singular_locus(&ctx_q, &f, &mut budget).unwrap();
    let disc = conic_discriminant(&ctx_q);
    let t = Instant::now();
    let slow = saturation(&ctx_q, &locus.basis.polys, &disc, &mut budget).unwrap();
    let sb = GroebnerBasis { polys: slow.gens, stats: Default::default() };
    let hd = hilbert_data(&sb, 6);
    println!(
        "eight slow saturation mod 65521: ({}, {}) steps={}  [{:?}]",
        hd.proj_dim,
        hd.degree,
        slow.steps,
        t.elapsed()
    );
}

#[test]
fn probe_edge_wm_structure() {
    // Is WM_edge special (zero / perfect square) in char 0?
    use luroth::invariants::{is_scalar_times_square, wm_quartic};
    let ctx_q = conic_space_ctx(Rat);
    let ctx = fixtures::form_ctx(Rat);
    let f: TernaryForm<Rat> = fixtures::edge_quartic(&ctx);
    let wm = wm_quartic(&ctx_q, &f);
    println!(
        "edge WM over Q: zero={} square={} terms={}",
        wm.poly.is_zero(),
        is_scalar_times_square(&ctx_q, &wm.poly),
        wm.poly.terms.len()
    );
}

/// Brute-force scan of P^5(F_p): count singular points of WM_f, split by whether
/// the conic discriminant vanishes there.
fn brute_scan(name: &str, which: usize, p: u64) {
    use luroth::invariants::wm_quartic;
    use luroth::ring::poly::MultiPoly;
    let field = Fp::new(p).unwrap();
    let ctx = fixtures::form_ctx(field.clone());
    let ctx_q = conic_space_ctx(field.clone());
    let f = match which {
        0 => fixtures::edge_quartic(&ctx),
        1 => fixtures::eight_theta_quartic(&ctx),
        2 => fixtures::double_conic_quartic(&ctx),
        _ => fixtures::standard_luroth_quartic(&ctx),
    };
    let l = build_l(&ctx, &f);
    if field.is_zero(&l.det(&field)) {
        println!("{name} mod {p}: det L = 0, skipping");
        return;
    }
    let wm = wm_quartic(&ctx_q, &f);
    let grad: Vec<MultiPoly<Fp>> = wm.gradient(&ctx_q);
    let disc = conic_discriminant(&ctx_q);
    let t = Instant::now();
    let mut n_rank2 = 0u64;
    let mut n_smooth = 0u64;
    let mut smooth_pts: Vec<Vec<u64>> = Vec::new();
    // Projective representatives: first nonzero coordinate = 1.
    let mut point = [0u64; 6];
    for lead in 0..6 {
        let free = 5 - lead;
        let total = (p as u128).pow(free as u32);
        for mut idx in 0..total {
            for c in point.iter_mut().take(lead) {
                *c = 0;
            }
            point[lead] = 1;
            for k in 0..free {
                point[lead + 1 + k] = (idx % p as u128) as u64;
                idx /= p as u128;
            }
            let pt: Vec<u64> = point.to_vec();
            if grad.iter().all(|g| field.is_zero(&g.eval(&ctx_q, &pt))) {
                if field.is_zero(&disc.eval(&ctx_q, &pt)) {
                    n_rank2 += 1;
                } else {
                    n_smooth += 1;
                    if smooth_pts.len() < 20 {
                        smooth_pts.push(pt);
                    }
                }
            }
        }
    }
    println!(
        "{name} mod {p}: brute sing points: disc=0: {n_rank2}, disc!=0: {n_smooth}  [{:?}]",
        t.elapsed()
    );
    for sp in &smooth_pts {
        println!("  smooth singular point: {sp:?}");
    }
}

#[test]
fn probe_brute_standard() {
    brute_scan("standard", 3, 11);
    brute_scan("standard", 3, 13);
}

#[test]
fn probe_brute_edge() {
    brute_scan("edge", 0, 11);
    brute_scan("edge", 0, 13);
    brute_scan("edge", 0, 19);
}

#[test]
fn probe_brute_eight() {
    brute_scan("eight", 1, 11);
    brute_scan("eight", 1, 13);
}

#[test]
fn probe_brute_double_conic() {
    brute_scan("double-conic", 2, 11);
    brute_scan("double-conic", 2, 13);
}

#[test]
fn probe_edge_gb_certificate() {
    use luroth::groebner::is_groebner_basis;
    let field = Fp::new(65521).unwrap();
    let ctx = fixtures::form_ctx(field.clone());
    let ctx_q = conic_space_ctx(field.clone());
    let f = fixtures::edge_quartic(&ctx);
    let mut budget = Budget::new(400_000_000);
    let locus = singular_locus(&ctx_q, &f, &mut budget).unwrap();
    let ok = is_groebner_basis(&ctx_q, &locus.basis.polys, &mut budget).unwrap();
    println!(
        "edge jacobian basis mod 65521: certificate={ok} basis_size={}",
        locus.basis.polys.len()
    );
}

#[test]
fn probe_edge_symmetric_theta_over_q() {
    use luroth::invariants::{wm_quartic, ConicForm};
    let ctx = fixtures::form_ctx(Rat);
    let ctx_q = conic_space_ctx(Rat);
    let f = fixtures::edge_quartic(&ctx);
    let wm = wm_quartic(&ctx_q, &f);
    let q = ConicForm::<Rat>::from_slice(&[
        Rat::int(1),
        Rat::int(0),
        Rat::int(0),
        Rat::int(1),
        Rat::int(0),
        Rat::int(1),
    ]);
    println!(
        "edge over Q: is_singular_at(y0^2+y1^2+y2^2) = {}",
        wm.is_singular_at(&ctx_q, &q)
    );
    let grad = wm.gradient(&ctx_q);
    let pt: Vec<_> = q.coeffs.to_vec();
    for (i, g) in grad.iter().enumerate() {
        let v = g.eval(&ctx_q, &pt);
        println!("  dWM/dq{i} at point = {v}");
    }
}

/// Find pentalaterals of f over F_p by brute force: 5 lines whose 10 pairwise
/// intersections all lie on f; then test the conic through the 5 dual points
/// against the White–Miller gradient.
fn pentalateral_clique_search(name: &str, which: usize, p: u64, max_report: usize) {
    use luroth::invariants::{d2_monomials, wm_quartic, ConicForm};
    use luroth::exactla::SymMatrix;
    let field = Fp::new(p).unwrap();
    let ctx = fixtures::form_ctx(field.clone());
    let ctx_q = conic_space_ctx(field.clone());
    let f = match which {
        0 => fixtures::edge_quartic(&ctx),
        1 => fixtures::eight_theta_quartic(&ctx),
        2 => fixtures::double_conic_quartic(&ctx),
        _ => fixtures::standard_luroth_quartic(&ctx),
    };
    // All lines of P^2(F_p), first nonzero coordinate = 1.
    let mut lines: Vec<[u64; 3]> = Vec::new();
    for b in 0..p {
        for c in 0..p {
            lines.push([1, b, c]);
        }
    }
    for c in 0..p {
        lines.push([0, 1, c]);
    }
    lines.push([0, 0, 1]);
    let n = lines.len();
    // Adjacency: intersection point of the two lines lies on f.
    let cross = |a: &[u64; 3], b: &[u64; 3]| -> [u64; 3] {
        let m = |x: u64, y: u64| field.mul(&x, &y);
        let s = |x: u64, y: u64| field.sub(&x, &y);
        [
            s(m(a[1], b[2]), m(a[2], b[1])),
            s(m(a[2], b[0]), m(a[0], b[2])),
            s(m(a[0], b[1]), m(a[1], b[0])),
        ]
    };
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = cross(&lines[i], &lines[j]);
            if v == [0, 0, 0] {
                continue;
            }
            let val = f.eval(&ctx, &v[0], &v[1], &v[2]);
            if field.is_zero(&val) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    // Enumerate 5-cliques.
    let mut cliques: Vec<[usize; 5]> = Vec::new();
    for a in 0..n {
        let na: Vec<usize> = ((a + 1)..n).filter(|&x| adj[a][x]).collect();
        for (bi, &b) in na.iter().enumerate() {
            for (ci, &c) in na.iter().enumerate().skip(bi + 1) {
                if !adj[b][c] {
                    continue;
                }
                for (di, &d) in na.iter().enumerate().skip(ci + 1) {
                    if !adj[b][d] || !adj[c][d] {
                        continue;
                    }
                    for &e in na.iter().skip(di + 1) {
                        if adj[b][e] && adj[c][e] && adj[d][e] {
                            cliques.push([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    let wm = wm_quartic(&ctx_q, &f);
    let disc = conic_discriminant(&ctx_q);
    println!("{name} mod {p}: {} lines, {} pentalateral cliques", n, cliques.len());
    let mut thetas_seen: Vec<Vec<u64>> = Vec::new();
    let mut reported = 0;
    for cl in &cliques {
        // No three lines concurrent: all 10 vertices distinct.
        let mut ok = true;
        'outer: for x in 0..5 {
            for y in (x + 1)..5 {
                for z in (y + 1)..5 {
                    let v = cross(&lines[cl[x]], &lines[cl[y]]);
                    let lz = &lines[cl[z]];
                    let dot = field.add(
                        &field.add(&field.mul(&v[0], &lz[0]), &field.mul(&v[1], &lz[1])),
                        &field.mul(&v[2], &lz[2]),
                    );
                    if field.is_zero(&dot) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        // Conic through the 5 dual points.
        let rows: Vec<Vec<u64>> = cl
            .iter()
            .map(|&i| {
                let l = &lines[i];
                d2_monomials(&ctx, &[l[0], l[1], l[2]]).to_vec()
            })
            .collect();
        let ker = SymMatrix::<Fp>::from_rows(rows).kernel(&field);
        if ker.len() != 1 {
            continue;
        }
        let theta = ConicForm::<Fp>::from_slice(&ker[0]);
        if thetas_seen.iter().any(|t| {
            // projective equality
            let (a, b) = (t, &ker[0]);
            let i0 = a.iter().position(|x| *x != 0).unwrap();
            if b[i0] == 0 {
                return false;
            }
            let r = field.div(&b[i0], &a[i0]).unwrap();
            a.iter().zip(b.iter()).all(|(x, y)| field.mul(x, &r) == *y)
        }) {
            continue;
        }
        thetas_seen.push(ker[0].clone());
        let smooth = !field.is_zero(&disc.eval(&ctx_q, &ker[0]));
        let singular_on_wm = wm.is_singular_at(&ctx_q, &theta);
        if reported < max_report {
            println!(
                "  clique {:?} theta={:?} smooth={} wm_singular={}",
                cl.map(|i| lines[i]),
                ker[0],
                smooth,
                singular_on_wm
            );
            reported += 1;
        }
    }
    println!("  distinct thetas: {}", thetas_seen.len());
}

#[test]
fn probe_cliques_standard() {
    pentalateral_clique_search("standard", 3, 13, 6);
}

#[test]
fn probe_cliques_edge() {
    pentalateral_clique_search("edge", 0, 13, 10);
    pentalateral_clique_search("edge", 0, 29, 10);
}

#[test]
fn probe_cliques_eight() {
    pentalateral_clique_search("eight", 1, 13, 10);
}

#[test]
fn probe_pentasingular_random_clebsch() {
    // Random Clebsch forms phi = sum of 5 weighted 4th powers over a prime field;
    // f = S(phi); theta Q = kernel conic of the catalecticant of phi. Test whether
    // Q is a singular point of WM_f.
    use luroth::invariants::scorza::scorza_map;
    use luroth::invariants::{catalecticant, wm_quartic, ConicForm};
    use luroth::rng::SplitMix64;
    let field = Fp::new(65521).unwrap();
    let ctx = fixtures::form_ctx(field.clone());
    let ctx_q = conic_space_ctx(field.clone());
    let mut rng = SplitMix64::new(42);
    let mut ok = 0;
    let mut fail = 0;
    for trial in 0..20 {
        let mut phi = TernaryForm::zero(&ctx, 4);
        for _ in 0..5 {
            let l = TernaryForm::line(
                field.from_i64(rng.range_i64(-20, 20)),
                field.from_i64(rng.range_i64(-20, 20)),
                field.from_i64(rng.range_i64(-20, 20)),
            );
            let w = field.from_i64(rng.small_nonzero(20));
            phi = phi.add(&ctx, &l.pow(&ctx, 4).scale(&ctx, &w));
        }
        let c_phi = catalecticant(&ctx, &phi);
        if c_phi.rank(&field) != 5 {
            continue;
        }
        let ker = c_phi.kernel(&field);
        if ker.len() != 1 {
            continue;
        }
        let q = ConicForm::<Fp>::from_slice(&ker[0]);
        let f = scorza_map(&ctx, &phi);
        if f.is_zero(&ctx) {
            continue;
        }
        let wm = wm_quartic(&ctx_q, &f);
        if wm.poly.is_zero() {
            continue;
        }
        let sing = wm.is_singular_at(&ctx_q, &q);
        if sing {
            ok += 1;
        } else {
            fail += 1;
            if fail <= 3 {
                println!("  trial {trial}: theta NOT singular on WM_scorza(phi)");
            }
        }
    }
    println!("pentasingular random check: ok={ok} fail={fail}");
}
