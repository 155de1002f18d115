//! Sparse multivariate polynomials over GF(q^2).
//!
//! A [`Ring`] fixes the coefficient field, the variable list and a term
//! order. Plane rings use the variable layout `(y, x, nu_{a,b}...)` with the
//! parameter variables sorted by `(a, b)`. Every [`Polynomial`] keeps its
//! terms sorted in strictly decreasing order under its ring's term order
//! with no zero coefficients, so the leading term is always `terms[0]`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// Capacity of a monomial's exponent vector.
pub const MAX_VARS: usize = 32;

/// Index of `y` in a plane ring.
pub const Y: usize = 0;
/// Index of `x` in a plane ring.
pub const X: usize = 1;

/// A power product, stored as a fixed-capacity exponent vector. Slots past
/// the ring's variable count are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "Monomial{:?}", &self.exps[..last])
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::one();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e).map_err(|_| Error::Parse(format!("exponent {e} too large")))?;
        }
        Ok(m)
    }

    /// The plane monomial `x^r y^s`.
    pub fn xy(r: u32, s: u32) -> Self {
        let mut m = Self::one();
        m.exps[X] = r as u8;
        m.exps[Y] = s as u8;
        m
    }

    /// `v^e` for the variable with index `v`.
    pub fn var(v: usize, e: u32) -> Self {
        let mut m = Self::one();
        m.exps[v] = e as u8;
        m
    }

    #[inline]
    pub fn exponent(&self, v: usize) -> u32 {
        self.exps[v] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    pub(crate) fn set_exponent(&mut self, v: usize, e: u32) {
        self.exps[v] = u8::try_from(e).expect("exponent overflow");
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    fn degree_in(&self, lo: usize, hi: usize) -> u32 {
        self.exps[lo..hi].iter().map(|&e| e as u32).sum()
    }

    /// `(r, s)` such that the plane part of the monomial is `x^r y^s`.
    pub fn xy_exponents(&self) -> (u32, u32) {
        (self.exps[X] as u32, self.exps[Y] as u32)
    }

    /// True when every exponent past `x` and `y` is zero.
    pub fn is_plane(&self) -> bool {
        self.exps[2..].iter().all(|&e| e == 0)
    }

    /// True when the exponents of `x` and `y` are both zero.
    pub fn is_xy_free(&self) -> bool {
        self.exps[X] == 0 && self.exps[Y] == 0
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, &b) in m.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(b);
        }
        m
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, &b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        m
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for (a, &b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_sub(b)?;
        }
        Some(m)
    }

    /// Drops the `x`, `y` exponents.
    pub fn params_part(&self) -> Monomial {
        let mut m = *self;
        m.exps[X] = 0;
        m.exps[Y] = 0;
        m
    }

    /// Keeps only the `x`, `y` exponents.
    pub fn plane_part(&self) -> Monomial {
        Monomial::xy(self.exps[X] as u32, self.exps[Y] as u32)
    }

    /// Shifts exponents left by `by` slots (drops the first `by` variables).
    pub(crate) fn shift_down(&self, by: usize) -> Monomial {
        let mut m = Monomial::one();
        m.exps[..MAX_VARS - by].copy_from_slice(&self.exps[by..]);
        m
    }

    /// Replaces `v^e` by `v^(((e-1) mod (size-1)) + 1)` for every variable
    /// with index `>= from`, i.e. reduces modulo `v^size - v`.
    pub(crate) fn fold(&self, from: usize, size: u32) -> Monomial {
        let mut m = *self;
        let period = size - 1;
        for e in &mut m.exps[from..] {
            if *e as u32 >= size {
                *e = (((*e as u32 - 1) % period) + 1) as u8;
            }
        }
        m
    }
}

/// Weighted degree `w(x^r y^s) = r q + s (q + 1)` of a plane monomial.
pub fn w_degree(m: &Monomial, q: u32) -> Result<u32> {
    if !m.is_plane() {
        return Err(Error::ParameterVariables);
    }
    let (r, s) = m.xy_exponents();
    Ok(r * q + s * (q + 1))
}

/// Term orders used by the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Graded reverse lexicographic order over all ring variables, in ring
    /// order. In a plane ring this is DegRevLex with `y > x`.
    DegRevLex,
    /// `x^r y^s < x^r' y^s'` iff `w` is smaller, or `w` ties and `s < s'`.
    /// Any parameter variables break remaining ties by DegRevLex.
    Weighted { q: u32 },
    /// Elimination order: DegRevLex on `(y, x)` first, then DegRevLex on the
    /// parameter block.
    Block,
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match *self {
            TermOrder::DegRevLex => degrevlex(a, b, 0, nvars),
            TermOrder::Weighted { q } => {
                let w = |m: &Monomial| m.exps[X] as u32 * q + m.exps[Y] as u32 * (q + 1);
                w(a).cmp(&w(b))
                    .then(a.exps[Y].cmp(&b.exps[Y]))
                    .then_with(|| degrevlex(a, b, 2, nvars))
            }
            TermOrder::Block => {
                degrevlex(a, b, 0, 2.min(nvars)).then_with(|| degrevlex(a, b, 2, nvars))
            }
        }
    }

    /// Primary grading used for critical-pair selection.
    pub(crate) fn grade(&self, m: &Monomial) -> u32 {
        match *self {
            TermOrder::DegRevLex => m.degree(),
            TermOrder::Weighted { q } => {
                m.exps[X] as u32 * q + m.exps[Y] as u32 * (q + 1) + m.degree_in(2, MAX_VARS)
            }
            TermOrder::Block => m.degree_in(0, 2),
        }
    }
}

#[inline]
fn degrevlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    if lo >= hi {
        return Ordering::Equal;
    }
    a.degree_in(lo, hi).cmp(&b.degree_in(lo, hi)).then_with(|| {
        for i in (lo..hi).rev() {
            if a.exps[i] != b.exps[i] {
                return b.exps[i].cmp(&a.exps[i]);
            }
        }
        Ordering::Equal
    })
}

/// Compares two monomials of a ring with `nvars` variables.
pub fn compare(a: &Monomial, b: &Monomial, ord: TermOrder, nvars: usize) -> Ordering {
    ord.compare(a, b, nvars)
}

/// Coefficient field, variable names and term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: Arc<FieldSpec>,
    vars: Vec<String>,
    plane: bool,
    order: TermOrder,
}

impl Ring {
    pub fn new(field: Arc<FieldSpec>, vars: Vec<String>, order: TermOrder) -> Result<Arc<Ring>> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        let plane = vars.len() >= 2 && vars[Y] == "y" && vars[X] == "x";
        Ok(Arc::new(Ring {
            field,
            vars,
            plane,
            order,
        }))
    }

    /// GF(q^2)[x, y] with variable layout `(y, x)`.
    pub fn plane(field: Arc<FieldSpec>, order: TermOrder) -> Arc<Ring> {
        Self::new(field, vec!["y".into(), "x".into()], order).expect("two variables")
    }

    /// GF(q^2)[x, y, nu_{a,b}...] with one parameter per exponent pair.
    pub fn plane_with_params(
        field: Arc<FieldSpec>,
        params: &[(u32, u32)],
        order: TermOrder,
    ) -> Result<Arc<Ring>> {
        let mut vars = vec!["y".to_string(), "x".to_string()];
        vars.extend(params.iter().map(|&(a, b)| param_name(a, b)));
        Self::new(field, vars, order)
    }

    /// GF(q^2)[nu_{a,b}...] with the parameter variables only.
    pub fn params_only(
        field: Arc<FieldSpec>,
        params: &[(u32, u32)],
        order: TermOrder,
    ) -> Result<Arc<Ring>> {
        let vars = params.iter().map(|&(a, b)| param_name(a, b)).collect();
        Self::new(field, vars, order)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// True when variables 0 and 1 are `y` and `x`.
    pub fn is_plane(&self) -> bool {
        self.plane
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The same ring under a different term order.
    pub fn with_order(&self, order: TermOrder) -> Arc<Ring> {
        Arc::new(Ring {
            order,
            ..self.clone()
        })
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b, self.vars.len())
    }

    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    /// Order in which variables are printed: `x` before `y`, then the rest.
    fn display_order(&self) -> Vec<usize> {
        let n = self.vars.len();
        if self.plane {
            [X, Y].into_iter().chain(2..n).collect()
        } else {
            (0..n).collect()
        }
    }
}

pub fn param_name(a: u32, b: u32) -> String {
    format!("nu_{a}_{b}")
}

pub type Term = (Monomial, FieldElement);

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElement) -> Self {
        Self::term(ring, Monomial::one(), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, FieldElement::ONE)
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: FieldElement) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Self::term(ring, m, FieldElement::ONE)
    }

    pub fn var(ring: &Arc<Ring>, v: usize) -> Self {
        Self::monomial(ring, Monomial::var(v, 1))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by(|a, b| ring.cmp(&b.0, &a.0));
        let field = ring.field();
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => {
                    if out.last().is_some_and(|t| t.1.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already in strictly decreasing order with no zeros.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<Term> {
        self.terms.first().copied().ok_or(Error::ZeroPolynomial)
    }

    /// Leading monomial under the ring's own order.
    pub fn leading_monomial(&self) -> Result<Monomial> {
        self.leading_term().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Result<FieldElement> {
        self.leading_term().map(|t| t.1)
    }

    /// Leading monomial under an arbitrary order.
    pub fn leading_monomial_in(&self, ord: TermOrder) -> Result<Monomial> {
        let n = self.ring.nvars();
        self.terms
            .iter()
            .map(|t| t.0)
            .max_by(|a, b| ord.compare(a, b, n))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Total degree (maximum over terms), `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Largest exponent of variable `v`.
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map_or(FieldElement::ZERO, |t| t.1)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other),
            ArithOp::Sub => self.sub_unchecked(other),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Add)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, c)| (m, field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, field.mul(a, c))).collect(),
        }
    }

    /// `c * t * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, t: &Monomial, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(m, a)| (m.mul(t), field.mul(a, c)))
                .collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some(&(_, lc)) if !lc.is_one() => {
                self.scale(self.field().inv(lc).expect("nonzero leading coefficient"))
            }
            _ => self.clone(),
        }
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        merge(&self.ring, &self.terms, &other.terms, FieldElement::ONE)
    }

    pub(crate) fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        let minus_one = self.field().neg(FieldElement::ONE);
        merge(&self.ring, &self.terms, &other.terms, minus_one)
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let field = self.field();
        let mut all = Vec::with_capacity(self.len() * other.len());
        for &(m, a) in &self.terms {
            for &(n, b) in &other.terms {
                all.push((m.mul(&n), field.mul(a, b)));
            }
        }
        Polynomial::from_terms(&self.ring, all)
    }

    /// Evaluates at a point given as one value per ring variable.
    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        let field = self.field();
        let n = self.ring.nvars();
        self.terms.iter().fold(FieldElement::ZERO, |acc, &(m, c)| {
            let v = (0..n).fold(c, |v, i| match m.exponent(i) {
                0 => v,
                e => field.mul(v, field.pow(point[i], e as u64)),
            });
            field.add(acc, v)
        })
    }

    /// Evaluates a plane polynomial at `(x, y)`; parameters must not occur.
    pub fn evaluate_xy(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let mut point = vec![FieldElement::ZERO; self.ring.nvars()];
        point[X] = x;
        point[Y] = y;
        self.evaluate(&point)
    }

    /// Re-sorts the polynomial into the same ring under another order.
    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        let ring = self.ring.with_order(order);
        self.in_ring(&ring)
    }

    /// Moves the terms into a structurally identical ring (possibly with a
    /// different order).
    pub fn in_ring(&self, ring: &Arc<Ring>) -> Polynomial {
        assert_eq!(ring.vars(), self.ring.vars(), "rings differ in variables");
        Polynomial::from_terms(ring, self.terms.iter().copied())
    }

    /// Maps into a ring whose variable list extends this ring's.
    pub fn embed(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if !ring.vars().starts_with(self.ring.vars()) || ring.field() != self.field() {
            return Err(Error::MixedRings);
        }
        Ok(Polynomial::from_terms(ring, self.terms.iter().copied()))
    }

    /// Reduces every variable with index `>= from` modulo `v^q2 - v`.
    pub fn fold_exponents(&self, from: usize) -> Polynomial {
        let size = self.field().size();
        if self.terms.iter().all(|t| t.0.exps[from..].iter().all(|&e| (e as u32) < size)) {
            return self.clone();
        }
        Polynomial::from_terms(&self.ring, self.terms.iter().map(|&(m, c)| (m.fold(from, size), c)))
    }

    /// Parses the textual format, e.g. `x^2*y + 2*x + 1`, where integer
    /// coefficients are indices into the field enumeration.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
        parse::parse(ring, text)
    }
}

fn merge(ring: &Arc<Ring>, a: &[Term], b: &[Term], scale_b: FieldElement) -> Polynomial {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, field.mul(b[j].1, scale_b)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(a[i].1, field.mul(b[j].1, scale_b));
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(m, c)| (m, field.mul(c, scale_b))));
    Polynomial::from_sorted(ring, out)
}

/// Leading monomial of `f` under `ord`.
pub fn leading_monomial(f: &Polynomial, ord: TermOrder) -> Result<Monomial> {
    f.leading_monomial_in(ord)
}

/// Ring arithmetic with a mixed-ring check.
pub fn arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    f.arith(g, op)
}

pub(crate) fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let parts: Vec<String> = ring
        .display_order()
        .into_iter()
        .filter(|&v| m.exponent(v) > 0)
        .map(|v| match m.exponent(v) {
            1 => ring.vars[v].clone(),
            e => format!("{}^{e}", ring.vars[v]),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", format_monomial(&self.ring, m))?;
            } else {
                write!(f, "{c}*{}", format_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

mod parse {
    use super::*;

    pub(super) fn parse(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
        let field = ring.field();
        let src: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let mut pos = 0;
        let mut terms = Vec::new();
        let mut first = true;
        while pos < src.len() {
            let negate = match src[pos] {
                '+' if !first => {
                    pos += 1;
                    false
                }
                '-' => {
                    pos += 1;
                    true
                }
                _ if first => false,
                c => return Err(Error::Parse(format!("expected '+' or '-' at {pos}, found '{c}'"))),
            };
            first = false;
            let (m, mut c) = term(ring, &src, &mut pos)?;
            if negate {
                c = field.neg(c);
            }
            terms.push((m, c));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    fn term(ring: &Ring, src: &[char], pos: &mut usize) -> Result<(Monomial, FieldElement)> {
        let field = ring.field();
        let mut m = Monomial::one();
        let mut c = FieldElement::ONE;
        loop {
            match src.get(*pos) {
                Some(ch) if ch.is_ascii_digit() => {
                    let v = number(src, pos)?;
                    c = field.mul(c, field.element(v).map_err(|_| {
                        Error::Parse(format!("coefficient index {v} exceeds field size {}", field.size()))
                    })?);
                }
                Some(ch) if ch.is_ascii_alphabetic() || *ch == '_' => {
                    let start = *pos;
                    while src.get(*pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                        *pos += 1;
                    }
                    let name: String = src[start..*pos].iter().collect();
                    let v = ring.var_index(&name)?;
                    let mut e = 1;
                    if src.get(*pos) == Some(&'^') {
                        *pos += 1;
                        e = number(src, pos)?;
                    }
                    m.set_exponent(v, m.exponent(v) + e);
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected a factor at {}, found {:?}",
                        *pos, other
                    )))
                }
            }
            if src.get(*pos) == Some(&'*') {
                *pos += 1;
            } else {
                return Ok((m, c));
            }
        }
    }

    fn number(src: &[char], pos: &mut usize) -> Result<u32> {
        let start = *pos;
        while src.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
            *pos += 1;
        }
        let digits: String = src[start..*pos].iter().collect();
        digits
            .parse()
            .map_err(|_| Error::Parse(format!("expected a number at {start}")))
    }
}
