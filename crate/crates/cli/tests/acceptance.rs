//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if a required criterion fails.
//!
//! Criteria 7 and 8 take from minutes to hours; they run only when
//! `HERMITIA_EXTENDED=1` is set and are reported as SKIP otherwise.
//! In criterion 7 each m gets `HERMITIA_EXTENDED_SECS` (default 3600) for
//! the Groebner count, then the same again for the exhaustive oracle.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hermitia::gf::{field_for_q, FieldElement};
use hermitia::groebner::buchberger;
use hermitia::hermitian::{
    build_curve, code_parameters, codeword_from_support, supports_codeword, CurveContext,
};
use hermitia::mwcount::{count_min_weight, count_min_weight_with, line_union_codeword, CountOptions};
use hermitia::oracle::{assignment_count, exhaustive_min_weight, OracleBudget};
use hermitia::poly::{Monomial, Polynomial, TermOrder};
use hermitia::Error;
use hermitia_cli::{run_command, RunRecord, Status};

type Outcome = Result<String, String>;

fn curve(q: u32) -> Arc<CurveContext> {
    build_curve(field_for_q(q).unwrap())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    check(t <= limit, || format!("{what} took {t:.1?} > {limit:?}"))
}

fn cli_count(q: u32, m: u32) -> Result<RunRecord, String> {
    let argv: Vec<String> = format!("count --q {q} --m {m} --json")
        .split_whitespace()
        .map(String::from)
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(&argv, &mut out, &mut err);
    let text = String::from_utf8_lossy(&out);
    let rec: RunRecord = serde_json::from_str(text.trim())
        .map_err(|e| format!("m={m}: exit {code}, bad output {text:?}: {e}"))?;
    check(code == 0 && rec.status == Status::Ok, || {
        format!("m={m}: exit {code} {}", String::from_utf8_lossy(&err))
    })?;
    Ok(rec)
}

fn small_band() -> Outcome {
    let expected = [(10, 576), (11, 2160), (12, 5400), (13, 8448), (14, 17280)];
    let mut times = Vec::new();
    for (m, mw) in expected {
        let start = Instant::now();
        let rec = cli_count(3, m)?;
        check(rec.mw == Some(mw), || format!("m={m}: mw {:?} != {mw}", rec.mw))?;
        within(start, Duration::from_secs(600), &format!("m={m}"))?;
        times.push(format!("{m}:{:.2}s", start.elapsed().as_secs_f64()));
    }
    Ok(times.join(" "))
}

fn high_band() -> Outcome {
    let ctx = curve(3);
    let expected = [(22, 18, 8448), (23, 19, 5400), (24, 20, 2160), (25, 21, 576), (27, 23, 432), (28, 24, 72)];
    let mut worst = Duration::ZERO;
    for (m, d, mw) in expected {
        let start = Instant::now();
        let code = code_parameters(&ctx, m).map_err(|e| e.to_string())?;
        let r = exhaustive_min_weight(&code, OracleBudget::default()).map_err(|e| format!("m={m}: {e}"))?;
        check((r.d, r.mw_count) == (d, mw), || format!("m={m}: got ({}, {})", r.d, r.mw_count))?;
        within(start, Duration::from_secs(600), &format!("m={m}"))?;
        worst = worst.max(start.elapsed());
    }
    Ok(format!("slowest {worst:.2?}"))
}

fn oracle_agreement() -> Outcome {
    let ctx = curve(3);
    for m in [10, 11, 12, 13] {
        let code = code_parameters(&ctx, m).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let oracle = assignment_count(&code, OracleBudget::default()).map_err(|e| format!("m={m}: {e}"))?;
        within(start, Duration::from_secs(300), &format!("assignment m={m}"))?;
        let a1 = count_min_weight(3, m).map_err(|e| format!("m={m}: {e}"))?;
        check(oracle.mw_count == a1.mw_count, || {
            format!("m={m}: oracle {} != algorithm {}", oracle.mw_count, a1.mw_count)
        })?;
    }
    Ok("m=10..13".into())
}

fn q2_closure() -> Outcome {
    let start = Instant::now();
    let ctx = curve(2);
    let ms: Vec<u32> = ctx.valid_ms().into_iter().filter(|&m| ctx.phase_of(m) >= 3).collect();
    for &m in &ms {
        let code = code_parameters(&ctx, m).map_err(|e| e.to_string())?;
        let a = count_min_weight(2, m).map_err(|e| format!("m={m}: {e}"))?;
        let b = assignment_count(&code, OracleBudget::default()).map_err(|e| format!("m={m}: {e}"))?;
        let c = exhaustive_min_weight(&code, OracleBudget::default()).map_err(|e| format!("m={m}: {e}"))?;
        check(a.mw_count == b.mw_count && b.mw_count == c.mw_count, || {
            format!("m={m}: {} / {} / {}", a.mw_count, b.mw_count, c.mw_count)
        })?;
        check(c.d + 2 * ctx.genus() == m + 2, || format!("m={m}: distance {}", c.d))?;
    }
    within(start, Duration::from_secs(60), "q=2 suite")?;
    Ok(format!("m={ms:?}"))
}

fn sorted_xy(ms: &[Monomial]) -> Vec<(u32, u32)> {
    let mut v: Vec<(u32, u32)> = ms.iter().map(|m| m.xy_exponents()).collect();
    v.sort_unstable();
    v
}

fn minimal_xy(mut v: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    v.sort_by_key(|&(a, b)| (a + b, a, b));
    let mut out: Vec<(u32, u32)> = Vec::new();
    for (a, b) in v {
        if !out.iter().any(|&(c, d)| c <= a && d <= b) {
            out.push((a, b));
        }
    }
    out.sort_unstable();
    out
}

fn structural() -> Outcome {
    for q in [2u32, 3, 4] {
        let ctx = curve(q);
        let gb = buchberger(&ctx.curve_ideal(), TermOrder::DegRevLex).map_err(|e| e.to_string())?;
        let want = minimal_xy(vec![(q + 1, 0), (1, q * q - q), (0, q * q)]);
        check(sorted_xy(gb.initial()) == want, || format!("q={q}: curve initial ideal"))?;
        let st = gb.staircase().map_err(|e| e.to_string())?;
        check(st.monomials.len() as u32 == q * q * q, || format!("q={q}: staircase size"))?;
    }

    let mut random_cuts = 0;
    for (q, seed) in [(2u32, 1u64), (3, 2)] {
        let ctx = curve(q);
        let field = ctx.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            let (r, s) = loop {
                let (r, s) = (rng.gen_range(0..=q), rng.gen_range(0..=q + 1));
                if r + s > 0 {
                    break (r, s);
                }
            };
            let lead = Monomial::xy(r, s);
            let mut terms = vec![(lead, FieldElement::ONE)];
            for a in 0..=q {
                for b in 0..=r + s {
                    let t = Monomial::xy(a, b);
                    if TermOrder::DegRevLex.compare(&t, &lead, 2).is_lt() && rng.gen_bool(0.5) {
                        terms.push((t, field.element(rng.gen_range(0..field.size())).unwrap()));
                    }
                }
            }
            let f = Polynomial::from_terms(ctx.ring(), terms);
            let gb = buchberger(&[ctx.hermitian_polynomial().clone(), f.clone()], TermOrder::DegRevLex)
                .map_err(|e| e.to_string())?;
            let want = if s == 0 {
                minimal_xy(vec![(r, 0), (0, q)])
            } else {
                minimal_xy(vec![(q + 1, 0), (r, s), (0, s + q)])
            };
            check(sorted_xy(gb.initial()) == want, || format!("q={q}: initial ideal of <H, {f}>"))?;
            random_cuts += 1;
        }
    }

    let mut rows = 0;
    for q in [2u32, 3, 4] {
        let ctx = curve(q);
        let (n, g) = (ctx.n(), ctx.genus());
        for m in ctx.valid_ms() {
            let code = code_parameters(&ctx, m).map_err(|e| e.to_string())?;
            check(code.k() as usize == n as usize - code.bm().len(), || format!("q={q} m={m}: k"))?;
            let (d, k) = match code.phase() {
                1 => {
                    let (a, b) = (m / q, m % q);
                    if b <= a && b != q - 1 {
                        (Some(if a > b { a + 1 } else { a + 2 }), Some(n - a * (a + 1) / 2 - b - 1))
                    } else {
                        (None, None)
                    }
                }
                2 => (None, Some(n + g - 1 - m)),
                3 => (Some(m + 2 - 2 * g), Some(n + g - 1 - m)),
                _ => {
                    let t = n + 2 * g - 2 - m;
                    let (a, b) = (t / q, t % q);
                    if b <= a && a + 2 <= q {
                        (Some(n - t), Some(a * (a + 1) / 2 + b + 1))
                    } else {
                        (None, None)
                    }
                }
            };
            if let Some(k) = k {
                check(code.k() == k, || format!("q={q} m={m}: k {} != {k}", code.k()))?;
                rows += 1;
            }
            if let Some(d) = d {
                check(code.d() == Some(d), || format!("q={q} m={m}: d {:?} != {d}", code.d()))?;
            }
            if q == 2 {
                let r = exhaustive_min_weight(&code, OracleBudget::default()).map_err(|e| e.to_string())?;
                check(code.d() == Some(r.d), || format!("q=2 m={m}: exhaustive distance {}", r.d))?;
            }
        }
    }
    Ok(format!("{random_cuts} random cuts, {rows} parameter rows"))
}

fn constructive_codewords() -> Outcome {
    let start = Instant::now();
    let ctx = curve(3);
    let mut count = 0;
    for m in ctx.valid_ms().into_iter().filter(|&m| ctx.phase_of(m) >= 3) {
        let code = code_parameters(&ctx, m).map_err(|e| e.to_string())?;
        let d = code.d().unwrap() as usize;
        let (_, div) = line_union_codeword(&code, 0).map_err(|e| format!("m={m}: {e}"))?;
        check(div.len() == d, || format!("m={m}: |D| = {}", div.len()))?;
        check(supports_codeword(&code, &div), || format!("m={m}: no codeword on D"))?;
        let word = codeword_from_support(&code, &div).map_err(|e| format!("m={m}: {e}"))?;
        check(word.weight() == d && code.is_codeword(&word), || format!("m={m}: weight {}", word.weight()))?;
        count += 1;
    }
    within(start, Duration::from_secs(60), "line unions")?;
    Ok(format!("{count} values of m"))
}

fn middle_band() -> Outcome {
    let expected = [
        (15, 24408),
        (16, 32544),
        (17, 39744),
        (18, 39744),
        (19, 32544),
        (20, 24408),
        (21, 17280),
    ];
    let secs = std::env::var("HERMITIA_EXTENDED_SECS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(3600);
    let ctx = curve(3);
    let mut times = Vec::new();
    for (m, mw) in expected {
        let start = Instant::now();
        let opts = CountOptions {
            max_duration: Some(Duration::from_secs(secs)),
        };
        let (r, how) = match count_min_weight_with(&ctx, m, opts) {
            Ok(r) => (r, "algorithm"),
            Err(Error::BudgetExceeded { .. }) => {
                let code = code_parameters(&ctx, m).map_err(|e| e.to_string())?;
                let budget = OracleBudget {
                    max_enumerations: 1 << 40,
                    max_duration: Duration::from_secs(secs),
                };
                let r = exhaustive_min_weight(&code, budget).map_err(|e| format!("m={m}: {e}"))?;
                (r, "exhaustive")
            }
            Err(e) => return Err(format!("m={m}: {e}")),
        };
        check(r.mw_count == mw, || format!("m={m}: {} != {mw}", r.mw_count))?;
        times.push(format!("{m}:{how}:{:.0}s", start.elapsed().as_secs_f64()));
    }
    Ok(times.join(" "))
}

fn q4_m22() -> Outcome {
    let ctx = curve(4);
    let code = code_parameters(&ctx, 22).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let budget = OracleBudget {
        max_enumerations: 1 << 26,
        max_duration: Duration::from_secs(1800),
    };
    let oracle = assignment_count(&code, budget).map_err(|e| e.to_string())?;
    let t_oracle = start.elapsed();
    let a1 = count_min_weight(4, 22).map_err(|e| e.to_string())?;
    check(oracle.mw_count == 150_000 && a1.mw_count == 150_000, || {
        format!("oracle {} algorithm {}", oracle.mw_count, a1.mw_count)
    })?;
    Ok(format!(
        "d={:?}, oracle {t_oracle:.1?}, algorithm {:.1?}",
        code.d(),
        a1.elapsed
    ))
}

fn main() {
    let extended = std::env::var("HERMITIA_EXTENDED").is_ok_and(|v| v == "1");
    let required: [(&str, fn() -> Outcome); 6] = [
        ("1 small band counts (q=3, m=10..14)", small_band),
        ("2 high band via exhaustive oracle (q=3, m=22..28)", high_band),
        ("3 assignment oracle agrees with algorithm", oracle_agreement),
        ("4 q=2 closure", q2_closure),
        ("5 structural identities", structural),
        ("6 constructive codewords", constructive_codewords),
    ];
    let optional: [(&str, fn() -> Outcome); 2] = [
        ("7 middle band counts (q=3, m=15..21, extended)", middle_band),
        ("8 q=4 m=22 (extended)", q4_m22),
    ];
    let mut failed = 0;
    for (name, f) in required {
        let start = Instant::now();
        match f() {
            Ok(note) => println!("PASS criterion {name} [{:.1?}] {note}", start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    for (name, f) in optional {
        if !extended {
            println!("SKIP criterion {name}: set HERMITIA_EXTENDED=1 to run");
            continue;
        }
        match f() {
            Ok(note) => println!("PASS criterion {name} {note}"),
            Err(e) => println!("FAIL criterion {name} (not gating): {e}"),
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
