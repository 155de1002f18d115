//! Counting minimum-weight codewords of third- and fourth-phase codes.
//!
//! The count runs through the generic curve
//! `f = x^mu y^lambda + sum nu_{a,b} x^a y^b`: a specialization of the
//! `nu`'s cuts a minimum-weight support exactly when the ideal `<H, f>`
//! contains both field equations, which turns into a zero-dimensional
//! system `J` in the `nu`'s whose rational points are counted by a
//! staircase. Every point accounts for `q^2 - 1` codewords.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::gf::{field_for_q, FieldElement};
use crate::groebner::{buchberger_with, count_rational_points_with, GbOptions, GroebnerBasis};
use crate::hermitian::{build_curve, code_parameters, divisor_cut, CurveContext, Divisor, HermitianCode};
use crate::poly::{Monomial, Polynomial, Ring, TermOrder, X, Y};

/// Exponent pairs `(a, b)` with `a <= q` and `w(x^a y^b) < d`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSupport {
    pub q: u32,
    pub d: u32,
    pub pairs: Vec<(u32, u32)>,
}

impl ParameterSupport {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Algorithm1,
    OracleExhaustive,
    OracleAssignment,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Algorithm1 => "algorithm1",
            Method::OracleExhaustive => "oracle_exhaustive",
            Method::OracleAssignment => "oracle_assignment",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a minimum-weight count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWResult {
    pub q: u32,
    pub m: u32,
    pub d: u32,
    pub mu: Option<u32>,
    pub lambda: Option<u32>,
    /// Number of rational points of `J`; set by [`Method::Algorithm1`].
    pub num_points_z: Option<u64>,
    pub mw_count: u64,
    pub elapsed: Duration,
    pub method: Method,
}

pub fn parameter_support(q: u32, d: u32) -> ParameterSupport {
    let mut pairs = Vec::new();
    for a in 0..=q {
        let mut b = 0;
        while a * q + b * (q + 1) < d {
            pairs.push((a, b));
            b += 1;
        }
    }
    ParameterSupport { q, d, pairs }
}

/// `x^mu y^lambda + sum nu_{a,b} x^a y^b` in GF(q^2)[y, x, nu...] under the
/// block order.
pub fn generic_polynomial(
    ctx: &CurveContext,
    ps: &ParameterSupport,
    mu: u32,
    lambda: u32,
) -> Result<Polynomial> {
    let ring = Ring::plane_with_params(ctx.field_arc().clone(), &ps.pairs, TermOrder::Block)?;
    let mut terms = vec![(Monomial::xy(mu, lambda), FieldElement::ONE)];
    for (i, &(a, b)) in ps.pairs.iter().enumerate() {
        let mut m = Monomial::xy(a, b);
        m.set_exponent(2 + i, 1);
        terms.push((m, FieldElement::ONE));
    }
    Ok(Polynomial::from_terms(&ring, terms))
}

/// Options for [`count_min_weight_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct CountOptions {
    pub max_duration: Option<Duration>,
}

/// The parameter system of the count: the parameter ring and the
/// coefficients of the normal forms of both field equations, without the
/// parameter field equations.
#[derive(Clone, Debug)]
pub struct ParameterSystem {
    pub support: ParameterSupport,
    pub f: Polynomial,
    pub basis: GroebnerBasis,
    pub param_ring: Arc<Ring>,
    pub equations: Vec<Polynomial>,
}

fn high_phase(code: &HermitianCode) -> Result<(u32, u32, u32)> {
    let dec = code.decomposition().ok_or(Error::UnsupportedPhase {
        m: code.m(),
        phase: code.phase(),
    })?;
    Ok((dec.mu, dec.lambda, code.d().expect("high-phase distance")))
}

/// Builds `f`, the basis of `<H, f>` and the coefficient equations.
pub fn parameter_system(code: &HermitianCode, opts: GbOptions) -> Result<ParameterSystem> {
    let ctx = code.ctx();
    let (mu, lambda, d) = high_phase(code)?;
    let q = ctx.q();
    let support = parameter_support(q, d);
    let f = generic_polynomial(ctx, &support, mu, lambda)?;
    let ring = f.ring().clone();
    let h = ctx.hermitian_polynomial().embed(&ring)?;
    let basis = buchberger_with(&[h, f.clone()], TermOrder::Block, opts)?;

    let size = ctx.field().size();
    let mut coeffs: Vec<(Monomial, usize, Vec<(Monomial, FieldElement)>)> = Vec::new();
    for (which, v) in [(0usize, X), (1, Y)] {
        let nf = field_equation_remainder(&basis, v, size, opts)?;
        let mut groups: Vec<(Monomial, Vec<(Monomial, FieldElement)>)> = Vec::new();
        for &(m, c) in nf.terms() {
            let plane = m.plane_part();
            let param = m.params_part().shift_down(2);
            match groups.iter_mut().find(|g| g.0 == plane) {
                Some(g) => g.1.push((param, c)),
                None => groups.push((plane, vec![(param, c)])),
            }
        }
        coeffs.extend(groups.into_iter().map(|(p, t)| (p, which, t)));
    }
    coeffs.sort_by(|a, b| {
        TermOrder::DegRevLex
            .compare(&b.0, &a.0, 2)
            .then(a.1.cmp(&b.1))
    });
    let param_ring = Ring::params_only(ctx.field_arc().clone(), &support.pairs, TermOrder::DegRevLex)?;
    let equations = coeffs
        .into_iter()
        .map(|(_, _, t)| Polynomial::from_terms(&param_ring, t))
        .filter(|p| !p.is_zero())
        .collect();
    Ok(ParameterSystem {
        support,
        f,
        basis,
        param_ring,
        equations,
    })
}

/// Normal form of `v^size - v`, built as `NF(v * NF(v^(k-1)))` with the
/// parameter exponents folded by their own field equations at each step.
fn field_equation_remainder(
    basis: &GroebnerBasis,
    v: usize,
    size: u32,
    opts: GbOptions,
) -> Result<Polynomial> {
    let ring = basis.ring();
    let var = Monomial::var(v, 1);
    let x = Polynomial::monomial(ring, var);
    let reduced = basis.normal_form(&x)?;
    let mut acc = reduced.clone();
    for _ in 1..size {
        if let Some(t) = opts.deadline {
            if Instant::now() > t {
                return Err(Error::BudgetExceeded {
                    stage: "normal form".into(),
                    elapsed: Duration::ZERO,
                    detail: String::new(),
                });
            }
        }
        acc = basis
            .normal_form(&acc.mul_term(&var, FieldElement::ONE))?
            .fold_exponents(2);
    }
    acc.sub(&reduced)
}

/// Number of minimum-weight codewords of `C_m` over GF(q^2).
pub fn count_min_weight(q: u32, m: u32) -> Result<MWResult> {
    let ctx = build_curve(field_for_q(q)?);
    count_min_weight_with(&ctx, m, CountOptions::default())
}

pub fn count_min_weight_with(ctx: &Arc<CurveContext>, m: u32, opts: CountOptions) -> Result<MWResult> {
    let start = Instant::now();
    let code = code_parameters(ctx, m)?;
    let (mu, lambda, d) = high_phase(&code)?;
    let gb_opts = GbOptions {
        deadline: opts.max_duration.map(|t| start + t),
        ..GbOptions::default()
    };
    let stamp = |e: Error| match e {
        Error::BudgetExceeded { stage, detail, .. } => Error::BudgetExceeded {
            stage,
            elapsed: start.elapsed(),
            detail,
        },
        other => other,
    };
    let system = parameter_system(&code, gb_opts).map_err(stamp)?;
    let z = count_rational_points_with(&system.equations, &system.param_ring, gb_opts).map_err(stamp)?;
    let q = ctx.q();
    Ok(MWResult {
        q,
        m,
        d,
        mu: Some(mu),
        lambda: Some(lambda),
        num_points_z: Some(z),
        mw_count: z * (q as u64 * q as u64 - 1),
        elapsed: start.elapsed(),
        method: Method::Algorithm1,
    })
}

/// Values of `alpha` and `beta` available to the line-union construction.
struct LineChoices {
    alphas: Vec<FieldElement>,
    betas: Vec<FieldElement>,
}

fn line_choices(ctx: &CurveContext) -> LineChoices {
    let f = ctx.field();
    let elements = f.enumerate_elements();
    LineChoices {
        alphas: elements.clone(),
        betas: elements.into_iter().filter(|&b| !f.trace(b).is_zero()).collect(),
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let mut c = next;
        loop {
            let block = binomial(n - c - 1, k - slot - 1);
            if rank < block {
                break;
            }
            rank -= block;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}

fn admissible_betas(ctx: &CurveContext, choices: &LineChoices, alphas: &[FieldElement]) -> Vec<FieldElement> {
    let f = ctx.field();
    let norms: Vec<FieldElement> = alphas.iter().map(|&a| f.norm(a)).collect();
    choices
        .betas
        .iter()
        .copied()
        .filter(|&b| !norms.contains(&f.trace(b)))
        .collect()
}

/// Number of admissible line configurations for the code.
pub fn line_union_count(code: &HermitianCode) -> Result<u128> {
    let (mu, lambda, _) = high_phase(code)?;
    let ctx = code.ctx();
    let choices = line_choices(ctx);
    let n = choices.alphas.len();
    let mut total = 0u128;
    for r in 0..binomial(n, mu as usize) {
        let idx = unrank_combination(n, mu as usize, r);
        let alphas: Vec<FieldElement> = idx.iter().map(|&i| choices.alphas[i]).collect();
        total += binomial(admissible_betas(ctx, &choices, &alphas).len(), lambda as usize);
    }
    Ok(total)
}

/// A minimum-weight support cut by `mu` vertical and `lambda` horizontal
/// lines. Configurations are enumerated with the `alpha`-subsets outermost,
/// both in field order, and `seed` indexes into that list.
pub fn line_union_codeword(code: &HermitianCode, seed: u64) -> Result<(Polynomial, Divisor)> {
    let (mu, lambda, d) = high_phase(code)?;
    let ctx = code.ctx();
    let f = ctx.field();
    let choices = line_choices(ctx);
    let n = choices.alphas.len();
    let mut rank = seed as u128;
    let mut seen = 0u128;
    for r in 0..binomial(n, mu as usize) {
        let idx = unrank_combination(n, mu as usize, r);
        let alphas: Vec<FieldElement> = idx.iter().map(|&i| choices.alphas[i]).collect();
        let betas = admissible_betas(ctx, &choices, &alphas);
        let block = binomial(betas.len(), lambda as usize);
        if rank >= block {
            rank -= block;
            seen += block;
            continue;
        }
        let chosen: Vec<FieldElement> = unrank_combination(betas.len(), lambda as usize, rank)
            .into_iter()
            .map(|i| betas[i])
            .collect();
        let ring = ctx.ring();
        let mut poly = Polynomial::one(ring);
        for &a in &alphas {
            let line = Polynomial::from_terms(ring, [(Monomial::xy(1, 0), FieldElement::ONE), (Monomial::one(), f.neg(a))]);
            poly = poly.mul(&line)?;
        }
        for &b in &chosen {
            let line = Polynomial::from_terms(ring, [(Monomial::xy(0, 1), FieldElement::ONE), (Monomial::one(), f.neg(b))]);
            poly = poly.mul(&line)?;
        }
        let (div, reduced) = divisor_cut(ctx, &poly)?;
        debug_assert!(reduced && div.len() == d as usize);
        return Ok((poly, div));
    }
    Err(Error::Unsatisfiable {
        seed,
        available: seen,
    })
}

/// Orders results by `(q, m, method)`.
pub fn result_order(a: &MWResult, b: &MWResult) -> Ordering {
    (a.q, a.m, a.method.as_str()).cmp(&(b.q, b.m, b.method.as_str()))
}
