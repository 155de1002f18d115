//! The Hermitian curve `x^{q+1} = y^q + y` over GF(q^2), its rational
//! points, the monomial basis of its coordinate ring and the codes `C_m`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::groebner::{buchberger, field_equation, GroebnerBasis};
use crate::linalg::Matrix;
use crate::poly::{w_degree, Monomial, Polynomial, Ring, TermOrder, X, Y};

/// Curve data shared by all codes over one field.
#[derive(Debug)]
pub struct CurveContext {
    field: Arc<FieldSpec>,
    q: u32,
    ring: Arc<Ring>,
    h: Polynomial,
    points: Vec<(FieldElement, FieldElement)>,
    basis: Vec<Monomial>,
}

/// A set of distinct rational points, stored as sorted point indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    indices: Vec<usize>,
}

impl Divisor {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDivisor("repeated point".into()));
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidDivisor(format!("point index {i} out of range 0..{n}")));
        }
        Ok(Divisor { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    pub entries: Vec<FieldElement>,
}

impl Codeword {
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn support(&self) -> Divisor {
        Divisor {
            indices: (0..self.entries.len()).filter(|&i| !self.entries[i].is_zero()).collect(),
        }
    }
}

/// `(mu, beta, lambda)` with `m = mu q + beta (q+1)`, `lambda = beta - q + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub mu: u32,
    pub beta: u32,
    pub lambda: u32,
}

#[derive(Clone, Debug)]
pub struct HermitianCode {
    ctx: Arc<CurveContext>,
    m: u32,
    phase: u8,
    d: Option<u32>,
    k: u32,
    decomposition: Option<Decomposition>,
    bm: Vec<Monomial>,
    parity_check: Matrix,
}

impl CurveContext {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn genus(&self) -> u32 {
        self.q * (self.q - 1) / 2
    }

    pub fn n(&self) -> u32 {
        self.q * self.q * self.q
    }

    /// The plane ring GF(q^2)[x, y] under DegRevLex with `y > x`.
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// `H = x^{q+1} - y^q - y`.
    pub fn hermitian_polynomial(&self) -> &Polynomial {
        &self.h
    }

    pub fn points(&self) -> &[(FieldElement, FieldElement)] {
        &self.points
    }

    /// The monomial basis of the coordinate ring of the point set, sorted by
    /// increasing w-degree.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Largest admissible `m`, namely `n + 2g - 2`.
    pub fn max_m(&self) -> u32 {
        self.n() + 2 * self.genus() - 2
    }

    pub fn w(&self, m: &Monomial) -> u32 {
        w_degree(m, self.q).expect("plane monomial")
    }

    /// True when the basis has a monomial of w-degree `m + 1` and `m` is in range.
    pub fn is_valid_m(&self, m: u32) -> bool {
        m <= self.max_m() && self.basis.iter().any(|b| self.w(b) == m + 1)
    }

    pub fn valid_ms(&self) -> Vec<u32> {
        (0..=self.max_m()).filter(|&m| self.is_valid_m(m)).collect()
    }

    pub fn phase_of(&self, m: u32) -> u8 {
        let (q, g, n) = (self.q, self.genus(), self.n());
        if m + 1 >= n {
            4
        } else if m + 2 >= 4 * g {
            3
        } else if m + 1 >= q * q {
            2
        } else {
            1
        }
    }

    pub fn evaluate_monomial(&self, m: &Monomial, point: usize) -> FieldElement {
        let f = self.field();
        let (x, y) = self.points[point];
        let (r, s) = m.xy_exponents();
        f.mul(f.pow(x, r as u64), f.pow(y, s as u64))
    }

    /// Generators of the ideal of all rational points: `H`, `x^{q^2} - x`, `y^{q^2} - y`.
    pub fn curve_ideal(&self) -> Vec<Polynomial> {
        vec![
            self.h.clone(),
            field_equation(&self.ring, X),
            field_equation(&self.ring, Y),
        ]
    }

    pub fn divisor(&self, indices: Vec<usize>) -> Result<Divisor> {
        Divisor::new(indices, self.points.len())
    }

    pub fn point_index(&self, x: FieldElement, y: FieldElement) -> Option<usize> {
        self.points.iter().position(|&p| p == (x, y))
    }
}

/// Builds the curve over GF(q^2).
pub fn build_curve(field: FieldSpec) -> Arc<CurveContext> {
    let field = Arc::new(field);
    let q = field.q();
    let ring = Ring::plane(field.clone(), TermOrder::DegRevLex);
    let minus_one = field.neg(FieldElement::ONE);
    let h = Polynomial::from_terms(
        &ring,
        [
            (Monomial::xy(q + 1, 0), FieldElement::ONE),
            (Monomial::xy(0, q), minus_one),
            (Monomial::xy(0, 1), minus_one),
        ],
    );

    let elements = field.enumerate_elements();
    let mut by_trace: Vec<Vec<FieldElement>> = vec![Vec::new(); field.size() as usize];
    for &y in &elements {
        by_trace[field.trace(y).index() as usize].push(y);
    }
    let mut points = Vec::with_capacity((q * q * q) as usize);
    for &x in &elements {
        for &y in &by_trace[field.norm(x).index() as usize] {
            points.push((x, y));
        }
    }

    let mut basis = Vec::with_capacity(points.len());
    for r in 0..=q {
        for s in 0..q * q - q {
            basis.push(Monomial::xy(r, s));
        }
    }
    for s in q * q - q..q * q {
        basis.push(Monomial::xy(0, s));
    }
    basis.sort_by_key(|m| w_degree(m, q).expect("plane"));

    Arc::new(CurveContext {
        field,
        q,
        ring,
        h,
        points,
        basis,
    })
}

/// The unique `(mu, beta)` with `m = mu q + beta (q+1)` and `0 <= mu <= q`.
pub fn decompose_m(q: u32, m: u32) -> Result<(u32, u32)> {
    let mu = (q + 1 - m % (q + 1)) % (q + 1);
    match m.checked_sub(mu * q) {
        Some(rest) if rest % (q + 1) == 0 => Ok((mu, rest / (q + 1))),
        _ => Err(Error::NoDecomposition { q, m }),
    }
}

/// Phase, distance and dimension of `C_m`.
pub fn code_parameters(ctx: &Arc<CurveContext>, m: u32) -> Result<HermitianCode> {
    let q = ctx.q;
    let invalid = |reason: String| Error::InvalidM { q, m, reason };
    if m > ctx.max_m() {
        return Err(invalid(format!("m exceeds n + 2g - 2 = {}", ctx.max_m())));
    }
    if !ctx.is_valid_m(m) {
        return Err(invalid(format!("no basis monomial has w-degree {}", m + 1)));
    }
    let phase = ctx.phase_of(m);
    let bm: Vec<Monomial> = ctx.basis.iter().copied().filter(|b| ctx.w(b) <= m).collect();
    let k = ctx.n() - bm.len() as u32;
    let (d, decomposition) = match phase {
        3 | 4 => {
            let (mu, beta) = decompose_m(q, m)?;
            let lambda = (beta + 2)
                .checked_sub(q)
                .ok_or_else(|| invalid("beta < q - 2".into()))?;
            let d = mu * q + lambda * (q + 1);
            debug_assert_eq!(d + 2 * ctx.genus(), m + 2);
            (Some(d), Some(Decomposition { mu, beta, lambda }))
        }
        _ => {
            // Phases 1 and 2 are tabulated at w-degrees; C_m equals C_{m'}
            // for the largest w-degree m' <= m.
            let label = bm.iter().map(|b| ctx.w(b)).max().unwrap_or(0);
            let d = if phase == 1 {
                low_phase_distance(q, label)
            } else {
                second_phase_distance(q, ctx.genus(), label)
            };
            (d, None)
        }
    };
    let parity_check = Matrix::from_rows(
        bm.iter()
            .map(|b| (0..ctx.points.len()).map(|i| ctx.evaluate_monomial(b, i)).collect())
            .collect(),
    );
    Ok(HermitianCode {
        ctx: ctx.clone(),
        m,
        phase,
        d,
        k,
        decomposition,
        bm,
        parity_check,
    })
}

fn low_phase_distance(q: u32, m: u32) -> Option<u32> {
    let (a, b) = (m / q, m % q);
    (b <= a && a < q && b != q - 1).then(|| if a > b { a + 1 } else { a + 2 })
}

fn second_phase_distance(q: u32, g: u32, m: u32) -> Option<u32> {
    let t = m.checked_sub(2 * g - 2)?;
    for a in 2..q {
        for b in 0..=q.saturating_sub(2) {
            if a == q - 1 && b == 0 {
                continue;
            }
            if a * q == t + b {
                let v = a * q - b;
                let in_semigroup = (0..=v / q).any(|i| (v - i * q) % (q + 1) == 0);
                return Some(if in_semigroup { v } else { a * q });
            }
        }
    }
    None
}

impl HermitianCode {
    pub fn ctx(&self) -> &Arc<CurveContext> {
        &self.ctx
    }

    pub fn q(&self) -> u32 {
        self.ctx.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// Minimum distance; `None` for second-phase codes not covered by the
    /// closed forms.
    pub fn d(&self) -> Option<u32> {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.ctx.n()
    }

    pub fn decomposition(&self) -> Option<Decomposition> {
        self.decomposition
    }

    /// Basis monomials of w-degree at most `m`.
    pub fn bm(&self) -> &[Monomial] {
        &self.bm
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    pub fn is_codeword(&self, c: &Codeword) -> bool {
        c.entries.len() == self.ctx.points.len()
            && self
                .parity_check
                .mul_vec(self.ctx.field(), &c.entries)
                .iter()
                .all(|v| v.is_zero())
    }

    fn require_high_phase(&self) -> Result<Decomposition> {
        self.decomposition.ok_or(Error::UnsupportedPhase {
            m: self.m,
            phase: self.phase,
        })
    }
}

pub fn parity_check_matrix(code: &HermitianCode) -> &Matrix {
    code.parity_check()
}

/// Zeros of `F` among the rational points, and whether they make up the
/// whole intersection divisor of `F` with the curve.
pub fn divisor_cut(ctx: &CurveContext, f: &Polynomial) -> Result<(Divisor, bool)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.terms().iter().any(|t| !t.0.is_plane()) {
        return Err(Error::ParameterVariables);
    }
    let degree = f.degree_in(X);
    if degree > ctx.q {
        return Err(Error::XDegreeTooLarge { degree, q: ctx.q });
    }
    let indices: Vec<usize> = (0..ctx.points.len())
        .filter(|&i| {
            let (x, y) = ctx.points[i];
            f.evaluate_xy(x, y).is_zero()
        })
        .collect();
    let lm = f.leading_monomial_in(TermOrder::DegRevLex)?;
    let expected = ctx.w(&lm) as usize;
    let reduced_rational = !indices.is_empty() && indices.len() == expected;
    Ok((Divisor { indices }, reduced_rational))
}

/// True when some nonzero codeword has support inside `D`.
pub fn supports_codeword(code: &HermitianCode, d: &Divisor) -> bool {
    if d.is_empty() {
        return false;
    }
    code.parity_check.select_columns(d.indices()).rank(code.ctx.field()) < d.len()
}

/// The codeword with support inside `D`, normalized so that its first
/// nonzero entry is 1. Requires a one-dimensional solution space.
pub fn codeword_from_support(code: &HermitianCode, d: &Divisor) -> Result<Codeword> {
    let field = code.ctx.field();
    let kernel = code.parity_check.select_columns(d.indices()).kernel(field);
    if kernel.len() != 1 {
        return Err(Error::KernelDimension(kernel.len()));
    }
    let v = &kernel[0];
    let first = v.iter().find(|c| !c.is_zero()).copied().expect("nonzero kernel vector");
    let inv = field.inv(first)?;
    let mut entries = vec![FieldElement::ZERO; code.ctx.points.len()];
    for (&i, &c) in d.indices().iter().zip(v) {
        entries[i] = field.mul(c, inv);
    }
    Ok(Codeword { entries })
}

/// Monomials whose presence in the staircase of `I_D` decides whether `D`
/// supports a codeword.
pub fn critical_monomials(code: &HermitianCode) -> Result<Vec<Monomial>> {
    let Decomposition { mu, beta, .. } = code.require_high_phase()?;
    let q = code.q();
    let mut out = Vec::new();
    if mu > 0 {
        for i in 1..=mu {
            out.push(Monomial::xy(mu - i, beta + i));
        }
        for j in 0..=q - mu {
            out.push(Monomial::xy(q - j, beta + mu + j + 1 - q));
        }
    } else {
        for j in 0..=q {
            out.push(Monomial::xy(q - j, beta + j + 1 - q));
        }
    }
    Ok(out)
}

/// Generators of the ideal of the points of `D`: the curve ideal plus one
/// basis combination per kernel vector of the evaluation map on `D`.
pub fn ideal_of_points(ctx: &CurveContext, d: &Divisor) -> Vec<Polynomial> {
    let eval = Matrix::from_rows(
        d.indices()
            .iter()
            .map(|&i| ctx.basis.iter().map(|b| ctx.evaluate_monomial(b, i)).collect())
            .collect(),
    );
    let mut gens = ctx.curve_ideal();
    for v in eval.kernel(ctx.field()) {
        gens.push(Polynomial::from_terms(
            &ctx.ring,
            ctx.basis.iter().copied().zip(v),
        ));
    }
    gens
}

/// Gröbner basis of the ideal of the points of `D` under DegRevLex.
pub fn points_basis(ctx: &CurveContext, d: &Divisor) -> Result<GroebnerBasis> {
    buchberger(&ideal_of_points(ctx, d), TermOrder::DegRevLex)
}

/// Support test through the staircase of `I_D`: some standard monomial has
/// w-degree in `[m+1, m+q+1]`.
pub fn staircase_supports(code: &HermitianCode, d: &Divisor) -> Result<bool> {
    let gb = points_basis(&code.ctx, d)?;
    let st = gb.staircase()?;
    let (lo, hi) = (code.m + 1, code.m + code.q() + 1);
    Ok(st.monomials.iter().any(|m| (lo..=hi).contains(&code.ctx.w(m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_for_q;

    fn curve(q: u32) -> Arc<CurveContext> {
        build_curve(field_for_q(q).unwrap())
    }

    #[test]
    fn point_counts_and_basis() {
        for q in [2, 3, 4] {
            let ctx = curve(q);
            assert_eq!(ctx.points().len() as u32, q * q * q);
            assert_eq!(ctx.basis().len() as u32, q * q * q);
            let h = ctx.hermitian_polynomial();
            assert!(ctx.points().iter().all(|&(x, y)| h.evaluate_xy(x, y).is_zero()));
        }
        let ctx = curve(2);
        let mut b: Vec<(u32, u32)> = ctx.basis().iter().map(|m| m.xy_exponents()).collect();
        b.sort();
        assert_eq!(b, vec![(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1)]);
        assert_eq!(curve(3).genus(), 3);
    }

    #[test]
    fn decompositions() {
        assert_eq!(decompose_m(3, 10).unwrap(), (2, 1));
        assert_eq!(decompose_m(3, 28).unwrap(), (0, 7));
        assert_eq!(decompose_m(4, 22).unwrap(), (3, 2));
        assert_eq!(decompose_m(3, 5), Err(Error::NoDecomposition { q: 3, m: 5 }));
        for q in 2..=5 {
            for m in q * q - 1..200 {
                let (mu, beta) = decompose_m(q, m).unwrap();
                assert!(mu <= q);
                assert_eq!(mu * q + beta * (q + 1), m);
            }
        }
    }

    #[test]
    fn parameters_of_known_codes() {
        let ctx = curve(3);
        let c = code_parameters(&ctx, 10).unwrap();
        assert_eq!((c.phase(), c.d(), c.k()), (3, Some(6), 19));
        assert_eq!(c.parity_check().rows(), 8);
        assert_eq!(c.parity_check().cols(), 27);
        let c = code_parameters(&ctx, 28).unwrap();
        assert_eq!((c.phase(), c.d(), c.k()), (4, Some(24), 2));
        assert_eq!(c.decomposition().unwrap().lambda, 6);
        assert!(matches!(code_parameters(&ctx, 26), Err(Error::InvalidM { .. })));
        assert!(matches!(code_parameters(&ctx, 40), Err(Error::InvalidM { .. })));
    }

    #[test]
    fn parity_check_has_full_rank() {
        for q in [2, 3] {
            let ctx = curve(q);
            for m in ctx.valid_ms() {
                let c = code_parameters(&ctx, m).unwrap();
                let h = c.parity_check();
                assert_eq!(h.rank(ctx.field()), c.bm().len());
                assert!(h.row(0).iter().all(|v| v.is_one()));
            }
        }
    }

    #[test]
    fn critical_monomial_examples() {
        let ctx = curve(3);
        let c = code_parameters(&ctx, 10).unwrap();
        let crit: Vec<(u32, u32)> = critical_monomials(&c).unwrap().iter().map(|m| m.xy_exponents()).collect();
        assert_eq!(crit, vec![(1, 2), (0, 3), (3, 1), (2, 2)]);
        let c = code_parameters(&ctx, 28).unwrap();
        let crit: Vec<(u32, u32)> = critical_monomials(&c).unwrap().iter().map(|m| m.xy_exponents()).collect();
        assert_eq!(crit, vec![(3, 5), (2, 6), (1, 7), (0, 8)]);
        for m in ctx.valid_ms().into_iter().filter(|&m| ctx.phase_of(m) >= 3) {
            let c = code_parameters(&ctx, m).unwrap();
            for mono in critical_monomials(&c).unwrap() {
                let w = ctx.w(&mono);
                assert!((m + 1..=m + 4).contains(&w), "m={m} w={w}");
            }
        }
        let low = code_parameters(&ctx, 3).unwrap();
        assert!(matches!(critical_monomials(&low), Err(Error::UnsupportedPhase { .. })));
    }

    #[test]
    fn vertical_line_cut() {
        let ctx = curve(3);
        let f = ctx.field();
        for a in f.enumerate_elements() {
            let line = Polynomial::from_terms(
                ctx.ring(),
                [(Monomial::xy(1, 0), FieldElement::ONE), (Monomial::one(), f.neg(a))],
            );
            let (d, ok) = divisor_cut(&ctx, &line).unwrap();
            assert_eq!(d.len(), 3);
            assert!(ok);
        }
        let c = Polynomial::one(ctx.ring());
        let (d, ok) = divisor_cut(&ctx, &c).unwrap();
        assert!(d.is_empty() && !ok);
        assert_eq!(divisor_cut(&ctx, &Polynomial::zero(ctx.ring())), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn support_basics() {
        let ctx = curve(3);
        let code = code_parameters(&ctx, 10).unwrap();
        let all = ctx.divisor((0..27).collect()).unwrap();
        assert!(supports_codeword(&code, &all));
        let small = ctx.divisor((0..5).collect()).unwrap();
        assert!(!supports_codeword(&code, &small));
        assert!(matches!(codeword_from_support(&code, &small), Err(Error::KernelDimension(0))));
        assert!(Divisor::new(vec![1, 1], 27).is_err());
        assert!(Divisor::new(vec![27], 27).is_err());
    }

    #[test]
    fn curve_staircase_is_basis() {
        for q in [2, 3, 4] {
            let ctx = curve(q);
            let gb = buchberger(&ctx.curve_ideal(), TermOrder::DegRevLex).unwrap();
            let mut st = gb.staircase().unwrap().monomials;
            let mut b = ctx.basis().to_vec();
            st.sort_by_key(|m| m.xy_exponents());
            b.sort_by_key(|m| m.xy_exponents());
            assert_eq!(st, b);
            assert!(gb.contains(&field_equation(ctx.ring(), X)).unwrap());
        }
    }
}
