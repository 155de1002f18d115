//! Brute-force minimum-weight counts that share no Gröbner machinery with
//! [`crate::mwcount`].
//!
//! Both oracles walk an odometer over the field enumeration. Moving one
//! digit from value `v` to its successor adds a precomputed delta vector, so
//! each step costs one vector addition plus a weight count. The search space
//! is split on the most significant digit and the chunks run on rayon.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::hermitian::HermitianCode;
use crate::linalg::Matrix;
use crate::mwcount::{parameter_support, MWResult, Method};
use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_enumerations: u128,
    pub max_duration: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_enumerations: 100_000_000,
            max_duration: Duration::from_secs(600),
        }
    }
}

/// Receives the completed fraction of the search space.
pub type Progress<'a> = &'a (dyn Fn(f64) + Sync);

/// Rows spanning the code: a basis of the kernel of the parity-check matrix.
pub fn generator_matrix(code: &HermitianCode) -> Matrix {
    Matrix::from_rows(code.parity_check().kernel(code.ctx().field()))
}

/// Enumerates every codeword and returns the minimum nonzero weight and the
/// number of codewords attaining it.
pub fn exhaustive_min_weight(code: &HermitianCode, budget: OracleBudget) -> Result<MWResult> {
    exhaustive_min_weight_with(code, budget, None)
}

pub fn exhaustive_min_weight_with(
    code: &HermitianCode,
    budget: OracleBudget,
    progress: Option<Progress<'_>>,
) -> Result<MWResult> {
    let start = Instant::now();
    let field = code.ctx().field();
    let gens = generator_matrix(code).to_rows();
    let n = code.n() as usize;
    let (min, count) = run_odometer(
        field,
        &gens,
        vec![FieldElement::ZERO; n],
        budget,
        progress,
        start,
        "exhaustive enumeration",
        (u32::MAX, 0u64),
        |v, acc| {
            let w = v.iter().filter(|c| !c.is_zero()).count() as u32;
            if w > 0 {
                if w < acc.0 {
                    *acc = (w, 1);
                } else if w == acc.0 {
                    acc.1 += 1;
                }
            }
        },
        |a, b| match a.0.cmp(&b.0) {
            std::cmp::Ordering::Less => a,
            std::cmp::Ordering::Greater => b,
            std::cmp::Ordering::Equal => (a.0, a.1 + b.1),
        },
    )?;
    let dec = code.decomposition();
    Ok(MWResult {
        q: code.q(),
        m: code.m(),
        d: if count == 0 { 0 } else { min },
        mu: dec.map(|d| d.mu),
        lambda: dec.map(|d| d.lambda),
        num_points_z: None,
        mw_count: count,
        elapsed: start.elapsed(),
        method: Method::OracleExhaustive,
    })
}

struct Assignment {
    d: u32,
    base: Vec<FieldElement>,
    rows: Vec<Vec<FieldElement>>,
}

fn assignment_setup(code: &HermitianCode) -> Result<Assignment> {
    let dec = code.decomposition().ok_or(Error::UnsupportedPhase {
        m: code.m(),
        phase: code.phase(),
    })?;
    let ctx = code.ctx();
    let d = code.d().expect("high-phase distance");
    let n = ctx.points().len();
    let eval = |m: Monomial| (0..n).map(|i| ctx.evaluate_monomial(&m, i)).collect::<Vec<_>>();
    Ok(Assignment {
        d,
        base: eval(Monomial::xy(dec.mu, dec.lambda)),
        rows: parameter_support(ctx.q(), d)
            .pairs
            .iter()
            .map(|&(a, b)| eval(Monomial::xy(a, b)))
            .collect(),
    })
}

fn zeros_exactly(v: &[FieldElement], d: u32) -> bool {
    let mut z = 0;
    for c in v {
        if c.is_zero() {
            z += 1;
            if z > d {
                return false;
            }
        }
    }
    z == d
}

/// Counts assignments of the tail coefficients of
/// `x^mu y^lambda + sum nu_{a,b} x^a y^b` whose curve has exactly `d` zeros
/// on the rational points, times `q^2 - 1`.
pub fn assignment_count(code: &HermitianCode, budget: OracleBudget) -> Result<MWResult> {
    assignment_count_with(code, budget, None)
}

pub fn assignment_count_with(
    code: &HermitianCode,
    budget: OracleBudget,
    progress: Option<Progress<'_>>,
) -> Result<MWResult> {
    let start = Instant::now();
    let field = code.ctx().field();
    let setup = assignment_setup(code)?;
    let d = setup.d;
    let good = run_odometer(
        field,
        &setup.rows,
        setup.base.clone(),
        budget,
        progress,
        start,
        "assignment enumeration",
        0u64,
        |v, acc| {
            if zeros_exactly(v, d) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )?;
    let dec = code.decomposition().expect("checked in setup");
    let q2 = field.size() as u64;
    Ok(MWResult {
        q: code.q(),
        m: code.m(),
        d,
        mu: Some(dec.mu),
        lambda: Some(dec.lambda),
        num_points_z: None,
        mw_count: good * (q2 - 1),
        elapsed: start.elapsed(),
        method: Method::OracleAssignment,
    })
}

/// The assignments counted by [`assignment_count`], as coefficient vectors
/// aligned with [`parameter_support`]. Sequential; intended for small cases.
pub fn good_assignments(code: &HermitianCode, budget: OracleBudget) -> Result<Vec<Vec<FieldElement>>> {
    let start = Instant::now();
    let field = code.ctx().field();
    let setup = assignment_setup(code)?;
    let k = setup.rows.len();
    check_size(field.size(), k, budget, start, "assignment enumeration")?;
    let elements = field.enumerate_elements();
    let mut digits = vec![0usize; k];
    let mut out = Vec::new();
    loop {
        let mut v = setup.base.clone();
        for (row, &dg) in setup.rows.iter().zip(&digits) {
            axpy(field, &mut v, elements[dg], row);
        }
        if zeros_exactly(&v, setup.d) {
            out.push(digits.iter().map(|&i| elements[i]).collect());
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < elements.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn axpy(field: &FieldSpec, v: &mut [FieldElement], a: FieldElement, row: &[FieldElement]) {
    if a.is_zero() {
        return;
    }
    for (x, &r) in v.iter_mut().zip(row) {
        *x = field.add(*x, field.mul(a, r));
    }
}

fn check_size(q2: u32, digits: usize, budget: OracleBudget, start: Instant, stage: &str) -> Result<u128> {
    let total = (q2 as u128).checked_pow(digits as u32).unwrap_or(u128::MAX);
    if total > budget.max_enumerations {
        return Err(Error::BudgetExceeded {
            stage: stage.into(),
            elapsed: start.elapsed(),
            detail: format!("{total} candidates exceed the limit of {}", budget.max_enumerations),
        });
    }
    Ok(total)
}

/// Visits `base + sum c_i rows[i]` for every coefficient vector `c`.
#[allow(clippy::too_many_arguments)]
fn run_odometer<A, V, R>(
    field: &FieldSpec,
    rows: &[Vec<FieldElement>],
    base: Vec<FieldElement>,
    budget: OracleBudget,
    progress: Option<Progress<'_>>,
    start: Instant,
    stage: &str,
    init: A,
    visit: V,
    reduce: R,
) -> Result<A>
where
    A: Clone + Send + Sync,
    V: Fn(&[FieldElement], &mut A) + Sync,
    R: Fn(A, A) -> A + Sync + Send,
{
    let k = rows.len();
    check_size(field.size(), k, budget, start, stage)?;
    let elements = field.enumerate_elements();
    let q2 = elements.len();
    if k == 0 {
        let mut acc = init;
        visit(&base, &mut acc);
        return Ok(acc);
    }

    // deltas[i][v]: change of the vector when digit i moves from value v to
    // its successor (wrapping to zero after the last value).
    let deltas: Vec<Vec<Vec<FieldElement>>> = rows
        .iter()
        .map(|row| {
            (0..q2)
                .map(|v| {
                    let next = elements[(v + 1) % q2];
                    let step = field.sub(next, elements[v]);
                    row.iter().map(|&r| field.mul(step, r)).collect()
                })
                .collect()
        })
        .collect();

    let deadline = start + budget.max_duration;
    let abort = AtomicBool::new(false);
    let done = AtomicUsize::new(0);
    let top = k - 1;
    let results: Vec<A> = (0..q2)
        .into_par_iter()
        .map(|lead| {
            let mut acc = init.clone();
            if abort.load(Ordering::Relaxed) {
                return acc;
            }
            let mut v = base.clone();
            axpy(field, &mut v, elements[lead], &rows[top]);
            let mut digits = vec![0usize; top];
            let mut steps = 0u64;
            loop {
                visit(&v, &mut acc);
                steps += 1;
                if steps & 0xffff == 0 {
                    if abort.load(Ordering::Relaxed) {
                        return acc;
                    }
                    if Instant::now() > deadline {
                        abort.store(true, Ordering::Relaxed);
                        return acc;
                    }
                }
                let mut i = 0;
                loop {
                    if i == top {
                        break;
                    }
                    let dv = &deltas[i][digits[i]];
                    for (x, &dx) in v.iter_mut().zip(dv) {
                        *x = field.add(*x, dx);
                    }
                    digits[i] += 1;
                    if digits[i] < q2 {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == top {
                    break;
                }
            }
            let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
            if let Some(p) = progress {
                p(finished as f64 / q2 as f64);
            }
            acc
        })
        .collect();
    if abort.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            stage: stage.into(),
            elapsed: start.elapsed(),
            detail: format!("{} of {q2} chunks finished", done.load(Ordering::Relaxed)),
        });
    }
    Ok(results.into_iter().fold(init, reduce))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_for_q;
    use crate::hermitian::{build_curve, code_parameters};

    #[test]
    fn small_fourth_phase_codes() {
        let ctx = build_curve(field_for_q(3).unwrap());
        let code = code_parameters(&ctx, 28).unwrap();
        let r = exhaustive_min_weight(&code, OracleBudget::default()).unwrap();
        assert_eq!((r.d, r.mw_count), (24, 72));
        let code = code_parameters(&ctx, 25).unwrap();
        let r = exhaustive_min_weight(&code, OracleBudget::default()).unwrap();
        assert_eq!((r.d, r.mw_count), (21, 576));
    }

    #[test]
    fn assignment_small() {
        let ctx = build_curve(field_for_q(3).unwrap());
        let code = code_parameters(&ctx, 10).unwrap();
        let r = assignment_count(&code, OracleBudget::default()).unwrap();
        assert_eq!(r.mw_count, 576);
        assert_eq!(good_assignments(&code, OracleBudget::default()).unwrap().len(), 72);
    }

    #[test]
    fn budget_is_enforced() {
        let ctx = build_curve(field_for_q(3).unwrap());
        let code = code_parameters(&ctx, 10).unwrap();
        let tight = OracleBudget {
            max_enumerations: 100,
            ..OracleBudget::default()
        };
        assert!(matches!(assignment_count(&code, tight), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(exhaustive_min_weight(&code, tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn progress_reaches_one() {
        let ctx = build_curve(field_for_q(2).unwrap());
        let code = code_parameters(&ctx, 6).unwrap();
        let last = std::sync::Mutex::new(0.0f64);
        let cb = |f: f64| {
            let mut l = last.lock().unwrap();
            *l = l.max(f);
        };
        exhaustive_min_weight_with(&code, OracleBudget::default(), Some(&cb)).unwrap();
        assert_eq!(*last.lock().unwrap(), 1.0);
    }
}
