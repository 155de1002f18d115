//! Structural identities of the curve, its codes and point ideals.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hermitia::gf::{field_for_q, FieldElement};
use hermitia::groebner::{buchberger, GroebnerBasis};
use hermitia::hermitian::{
    build_curve, code_parameters, points_basis, staircase_supports, supports_codeword, CurveContext, Divisor,
};
use hermitia::mwcount::line_union_codeword;
use hermitia::oracle::{exhaustive_min_weight, OracleBudget};
use hermitia::poly::{Monomial, Polynomial, Ring, TermOrder};

fn curve(q: u32) -> Arc<CurveContext> {
    build_curve(field_for_q(q).unwrap())
}

fn minimal(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.xy_exponents()));
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by_key(|m| m.xy_exponents());
    out
}

fn sorted_initial(gb: &GroebnerBasis) -> Vec<Monomial> {
    let mut v = gb.initial().to_vec();
    v.sort_by_key(|m| m.xy_exponents());
    v
}

fn random_element(rng: &mut ChaCha8Rng, ctx: &CurveContext) -> FieldElement {
    ctx.field().element(rng.gen_range(0..ctx.field().size())).unwrap()
}

/// A random polynomial with leading monomial `x^r y^s` under DegRevLex and
/// x-degree at most q.
fn random_curve_cut(rng: &mut ChaCha8Rng, ctx: &CurveContext, ring: &Arc<Ring>, r: u32, s: u32) -> Polynomial {
    let q = ctx.q();
    let lead = Monomial::xy(r, s);
    let mut terms = vec![(lead, FieldElement::ONE)];
    for a in 0..=q {
        for b in 0..=(r + s) {
            let m = Monomial::xy(a, b);
            if TermOrder::DegRevLex.compare(&m, &lead, 2).is_lt() && rng.gen_bool(0.5) {
                terms.push((m, random_element(rng, ctx)));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

#[test]
fn intersection_with_a_curve_has_predicted_initial_ideal() {
    for (q, seed) in [(2u32, 11u64), (3, 12)] {
        let ctx = curve(q);
        let ring = ctx.ring().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = ctx.hermitian_polynomial().clone();
        for _ in 0..120 {
            let (r, s) = loop {
                let r = rng.gen_range(0..=q);
                let s = rng.gen_range(0..=q + 1);
                if r + s > 0 {
                    break (r, s);
                }
            };
            let f = random_curve_cut(&mut rng, &ctx, &ring, r, s);
            let gb = buchberger(&[h.clone(), f.clone()], TermOrder::DegRevLex).unwrap();
            let expected = if s == 0 {
                minimal(vec![Monomial::xy(r, 0), Monomial::xy(0, q)])
            } else {
                minimal(vec![Monomial::xy(q + 1, 0), Monomial::xy(r, s), Monomial::xy(0, s + q)])
            };
            assert_eq!(sorted_initial(&gb), expected, "q={q} F={f}");
            let st = gb.staircase().unwrap();
            assert_eq!(st.monomials.len() as u32, r * q + s * (q + 1), "q={q} F={f}");
        }
    }
}

#[test]
fn curve_ideal_initial_and_staircase() {
    for q in [2u32, 3, 4] {
        let ctx = curve(q);
        let gb = buchberger(&ctx.curve_ideal(), TermOrder::DegRevLex).unwrap();
        let expected = minimal(vec![
            Monomial::xy(q + 1, 0),
            Monomial::xy(1, q * q - q),
            Monomial::xy(0, q * q),
        ]);
        assert_eq!(sorted_initial(&gb), expected);
        assert_eq!(gb.staircase().unwrap().monomials.len() as u32, q * q * q);
    }
}

/// Closed-form (d, k) of each phase for a valid m, when the m is one the
/// closed forms parametrize.
fn closed_form(q: u32, n: u32, g: u32, phase: u8, m: u32) -> (Option<u32>, Option<u32>) {
    match phase {
        1 => {
            let (a, b) = (m / q, m % q);
            if b <= a && a < q && b != q - 1 {
                let d = if a > b { a + 1 } else { a + 2 };
                (Some(d), Some(q * q * q - a * (a + 1) / 2 - (b + 1)))
            } else {
                (None, None)
            }
        }
        2 => {
            let k = n + g - 1 - m;
            let mut d = None;
            for a in 2..q {
                for b in 0..=q - 2 {
                    if (a == q - 1 && b == 0) || 2 * g - 2 + a * q != m + b {
                        continue;
                    }
                    let v = a * q - b;
                    let gap = !(0..=v / q).any(|i| (v - i * q) % (q + 1) == 0);
                    d = Some(if gap { a * q } else { v });
                }
            }
            (d, Some(k))
        }
        3 => (Some(m + 2 - 2 * g), Some(n + g - 1 - m)),
        _ => {
            let t = n + 2 * g - 2 - m;
            for a in 0..=q.saturating_sub(2) {
                for b in 0..=a {
                    if a * q + b == t {
                        return (Some(n - a * q - b), Some(a * (a + 1) / 2 + b + 1));
                    }
                }
            }
            (None, None)
        }
    }
}

#[test]
fn dimension_and_distance_match_closed_forms() {
    for q in [2u32, 3, 4] {
        let ctx = curve(q);
        let (n, g) = (ctx.n(), ctx.genus());
        let mut checked = 0;
        for m in ctx.valid_ms() {
            let code = code_parameters(&ctx, m).unwrap();
            assert_eq!(code.k() as usize, n as usize - code.bm().len());
            let (d, k) = closed_form(q, n, g, code.phase(), m);
            if let Some(k) = k {
                assert_eq!(code.k(), k, "q={q} m={m}");
                checked += 1;
            }
            if let Some(d) = d {
                assert_eq!(code.d(), Some(d), "q={q} m={m}");
            }
            if code.phase() >= 3 {
                assert!(k.is_some() && d.is_some(), "q={q} m={m}");
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn q2_distances_match_exhaustive_search() {
    let ctx = curve(2);
    for m in ctx.valid_ms() {
        let code = code_parameters(&ctx, m).unwrap();
        let res = exhaustive_min_weight(&code, OracleBudget::default()).unwrap();
        assert_eq!(code.d(), Some(res.d), "m={m}");
    }
}

fn random_divisor(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Divisor {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx.truncate(size);
    Divisor::new(idx, n).unwrap()
}

/// Divisors worth testing at (q, m): line unions, random sets around d and
/// random sets just large enough to force dependency.
fn sample_divisors(ctx: &Arc<CurveContext>, m: u32, rng: &mut ChaCha8Rng, count: usize) -> Vec<Divisor> {
    let code = code_parameters(ctx, m).unwrap();
    let n = ctx.n() as usize;
    let d = code.d().unwrap() as usize;
    let mut out = Vec::new();
    for seed in 0..4 {
        if let Ok((_, div)) = line_union_codeword(&code, seed) {
            out.push(div);
        }
    }
    for i in 0..count {
        let size = match i % 3 {
            0 => d,
            1 => (d + 1).min(n),
            _ => (code.bm().len() + 1).min(n),
        };
        out.push(random_divisor(rng, n, size));
    }
    out
}

fn high_phase_ms(ctx: &CurveContext) -> Vec<u32> {
    ctx.valid_ms().into_iter().filter(|&m| ctx.phase_of(m) >= 3).collect()
}

#[test]
fn support_test_agrees_with_staircase_criterion() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for q in [2u32, 3] {
        let ctx = curve(q);
        let mut positives = 0;
        for m in high_phase_ms(&ctx) {
            let code = code_parameters(&ctx, m).unwrap();
            for div in sample_divisors(&ctx, m, &mut rng, 12) {
                let lin = supports_codeword(&code, &div);
                assert_eq!(lin, staircase_supports(&code, &div).unwrap(), "q={q} m={m} D={:?}", div.indices());
                positives += lin as usize;
            }
        }
        assert!(positives > 0);
    }
}

fn check_support_shape(q: u32, m: u32, gb: &GroebnerBasis, what: &str) {
    let has = |a: u32, b: u32| gb.in_initial(&Monomial::xy(a, b));
    assert!(
        (has(q + 1, 0) && !has(q, 0)) || has(0, q),
        "q={q} m={m} {what}: initial {:?}",
        gb.initial()
    );
    if m + 2 + 2 * q >= 2 * q * q {
        assert!(!(has(q, 0) && has(0, q - 1)), "q={q} m={m} {what}");
    }
}

#[test]
fn supports_of_codewords_have_constrained_initial_ideals() {
    let ctx = curve(2);
    let n = ctx.n() as usize;
    for m in high_phase_ms(&ctx) {
        let code = code_parameters(&ctx, m).unwrap();
        for mask in 1u32..(1 << n) {
            let div = Divisor::new((0..n).filter(|i| mask >> i & 1 == 1).collect(), n).unwrap();
            if supports_codeword(&code, &div) {
                check_support_shape(2, m, &points_basis(&ctx, &div).unwrap(), "exhaustive");
            }
        }
    }
    let ctx = curve(3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for m in high_phase_ms(&ctx) {
        let code = code_parameters(&ctx, m).unwrap();
        for div in sample_divisors(&ctx, m, &mut rng, 6) {
            if supports_codeword(&code, &div) {
                check_support_shape(3, m, &points_basis(&ctx, &div).unwrap(), "sampled");
            }
        }
    }
}

#[test]
fn point_count_bounded_by_initial_monomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for q in [2u32, 3] {
        let ctx = curve(q);
        let n = ctx.n() as usize;
        for _ in 0..40 {
            let size = rng.gen_range(1..=n);
            let div = random_divisor(&mut rng, n, size);
            let gb = points_basis(&ctx, &div).unwrap();
            assert_eq!(gb.staircase().unwrap().monomials.len(), div.len());
            for lm in gb.initial() {
                let (r, s) = lm.xy_exponents();
                if r <= q {
                    assert!(div.len() as u32 <= r * q + s * (q + 1), "q={q} D={:?}", div.indices());
                }
            }
        }
    }
}
