//! Buchberger's algorithm, normal forms and staircases.
//!
//! Reduction runs on geobuckets. Critical pairs are pruned with the coprime
//! and chain criteria (Gebauer–Möller) and selected by the normal strategy.
//! Under [`TermOrder::Block`] in a ring with parameter variables every basis
//! element must have a leading monomial free of parameters; otherwise the
//! computation stops with [`Error::ParametricLeadingCoefficient`].

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::poly::{Monomial, Polynomial, Ring, Term, TermOrder, MAX_VARS};

/// A reduced Gröbner basis together with its ring and order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    initial: Vec<Monomial>,
}

/// The monomials outside an initial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub monomials: Vec<Monomial>,
    pub complete: bool,
}

impl Staircase {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }
}

/// Knobs for a Buchberger run.
#[derive(Clone, Copy, Debug, Default)]
pub struct GbOptions {
    /// Abort with [`Error::BudgetExceeded`] once this instant has passed.
    pub deadline: Option<Instant>,
    /// Skip the parametric leading-coefficient check.
    pub allow_parametric: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order()
    }

    /// Reduced, monic generators sorted by increasing leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Minimal generators of the initial ideal, increasing.
    pub fn initial(&self) -> &[Monomial] {
        &self.initial
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.initial.iter().any(|m| m.is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !Ring::same(f.ring(), &self.ring) {
            if f.ring().vars() != self.ring.vars() || f.field() != self.ring.field() {
                return Err(Error::MixedRings);
            }
            return Ok(normal_form_in(&f.in_ring(&self.ring), &self.generators));
        }
        Ok(normal_form_in(f, &self.generators))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn staircase(&self) -> Result<Staircase> {
        staircase_of(&self.ring, &self.initial)
    }

    /// True when `m` lies in the initial ideal.
    pub fn in_initial(&self, m: &Monomial) -> bool {
        self.initial.iter().any(|g| g.divides(m))
    }

    /// Re-checks Buchberger's criterion on every pair of generators.
    pub fn verify(&self) -> bool {
        let reducers = Reducers::new(&self.generators);
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                if !reducers.reduce(spoly(&self.generators[i], &self.generators[j])).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `gens` under `ord`.
pub fn buchberger(gens: &[Polynomial], ord: TermOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, ord, GbOptions::default())
}

pub fn buchberger_with(gens: &[Polynomial], ord: TermOrder, opts: GbOptions) -> Result<GroebnerBasis> {
    let first = gens.first().ok_or(Error::ZeroPolynomial)?;
    if gens.iter().any(|g| !Ring::same(g.ring(), first.ring())) {
        return Err(Error::MixedRings);
    }
    let ring = if first.ring().order() == ord {
        first.ring().clone()
    } else {
        first.ring().with_order(ord)
    };
    let check_parametric =
        !opts.allow_parametric && ord == TermOrder::Block && ring.nvars() > 2 && ring.is_plane();
    let mut engine = Engine {
        ring: ring.clone(),
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        check_parametric,
        deadline: opts.deadline,
    };
    let mut inputs: Vec<Polynomial> = gens
        .iter()
        .map(|g| if Ring::same(g.ring(), &ring) { g.clone() } else { g.in_ring(&ring) })
        .filter(|g| !g.is_zero())
        .collect();
    if inputs.is_empty() {
        return Ok(GroebnerBasis {
            ring,
            generators: Vec::new(),
            initial: Vec::new(),
        });
    }
    inputs.sort_by(|a, b| ring.cmp(&a.terms()[0].0, &b.terms()[0].0));
    for g in inputs {
        let h = engine.reduce_full(g);
        if !h.is_zero() {
            engine.insert(h)?;
        }
    }
    engine.run()?;
    Ok(engine.finish())
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: Arc<Ring>,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    check_parametric: bool,
    deadline: Option<Instant>,
}

impl Engine {
    fn lm(&self, i: usize) -> Monomial {
        self.basis[i].terms()[0].0
    }

    fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(t) if Instant::now() > t => Err(Error::BudgetExceeded {
                stage: "groebner".into(),
                elapsed: Duration::ZERO,
                detail: format!("{} basis elements, {} pairs pending", self.basis.len(), self.pairs.len()),
            }),
            _ => Ok(()),
        }
    }

    fn reduce_full(&self, f: Polynomial) -> Polynomial {
        let gens: Vec<&Polynomial> = self
            .basis
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(g, _)| g)
            .collect();
        Reducers::from_refs(&gens).reduce(f)
    }

    fn insert(&mut self, h: Polynomial) -> Result<()> {
        let h = h.monic();
        let lm = h.terms()[0].0;
        if self.check_parametric && !lm.params_part().is_one() {
            return Err(Error::ParametricLeadingCoefficient);
        }
        let k = self.basis.len();
        self.basis.push(h);
        self.active.push(true);

        // New pairs (g, h) with the chain criterion applied among themselves.
        let mut cands: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| {
                let li = self.lm(i);
                (i, li.lcm(&lm), li.coprime(&lm))
            })
            .collect();
        cands.sort_by(|a, b| self.ring.cmp(&a.1, &b.1));
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (i, l, coprime) = cands[idx];
            let dominated = cands
                .iter()
                .enumerate()
                .any(|(o, c)| o != idx && c.1 != l && c.1.divides(&l))
                || kept.iter().any(|c| c.1 == l);
            if coprime || !dominated {
                kept.push((i, l, coprime));
            }
        }

        // Old pairs made redundant by h.
        let basis = &self.basis;
        self.pairs.retain(|p| {
            !(lm.divides(&p.lcm)
                && basis[p.i].terms()[0].0.lcm(&lm) != p.lcm
                && basis[p.j].terms()[0].0.lcm(&lm) != p.lcm)
        });
        for (i, l, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i, j: k, lcm: l });
            }
        }
        for i in 0..k {
            if self.active[i] && lm.divides(&self.lm(i)) {
                self.active[i] = false;
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let mut steps = 0u64;
        while !self.pairs.is_empty() {
            steps += 1;
            if steps % 16 == 0 {
                self.check_deadline()?;
            }
            let ring = &self.ring;
            let best = (0..self.pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                    ring.order()
                        .grade(&pa.lcm)
                        .cmp(&ring.order().grade(&pb.lcm))
                        .then_with(|| ring.cmp(&pa.lcm, &pb.lcm))
                })
                .expect("nonempty");
            let pair = self.pairs.swap_remove(best);
            let s = spoly(&self.basis[pair.i], &self.basis[pair.j]);
            let h = self.reduce_full(s);
            if !h.is_zero() {
                self.insert(h)?;
                if self.basis.last().is_some_and(|h| h.terms()[0].0.is_one()) {
                    self.pairs.clear();
                }
            }
        }
        Ok(())
    }

    fn finish(self) -> GroebnerBasis {
        let ring = self.ring;
        let mut minimal: Vec<Polynomial> = self
            .basis
            .into_iter()
            .zip(self.active)
            .filter_map(|(g, a)| a.then_some(g))
            .collect();
        minimal.sort_by(|a, b| ring.cmp(&a.terms()[0].0, &b.terms()[0].0));
        let mut generators = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<&Polynomial> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g).collect();
            let g = &minimal[i];
            let (lead, tail) = g.terms().split_first().expect("nonzero");
            let tail = Polynomial::from_sorted(&ring, tail.to_vec());
            let reduced = Reducers::from_refs(&others).reduce(tail);
            let mut terms = vec![*lead];
            terms.extend_from_slice(reduced.terms());
            generators.push(Polynomial::from_sorted(&ring, terms));
        }
        let initial = generators.iter().map(|g| g.terms()[0].0).collect();
        GroebnerBasis {
            ring,
            generators,
            initial,
        }
    }
}

/// S-polynomial of two monic polynomials.
fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, cf) = f.terms()[0];
    let (lg, cg) = g.terms()[0];
    let l = lf.lcm(&lg);
    let field = f.field();
    let a = f.mul_term(&l.div(&lf).expect("divides"), field.inv(cf).expect("nonzero"));
    let b = g.mul_term(&l.div(&lg).expect("divides"), field.inv(cg).expect("nonzero"));
    a.sub_unchecked(&b)
}

/// Normal form of `f` with respect to arbitrary polynomials in `f`'s ring.
pub(crate) fn normal_form_in(f: &Polynomial, gens: &[Polynomial]) -> Polynomial {
    Reducers::new(gens).reduce(f.clone())
}

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for v in 0..MAX_VARS {
        let e = m.exponent(v);
        if e >= 1 {
            mask |= 1 << (2 * v);
        }
        if e >= 2 {
            mask |= 1 << (2 * v + 1);
        }
    }
    mask
}

struct Reducer<'a> {
    poly: &'a Polynomial,
    lm: Monomial,
    lc_inv: FieldElement,
    mask: u64,
}

struct Reducers<'a> {
    list: Vec<Reducer<'a>>,
}

impl<'a> Reducers<'a> {
    fn new(gens: &'a [Polynomial]) -> Self {
        let refs: Vec<&Polynomial> = gens.iter().collect();
        Self::from_refs(&refs)
    }

    fn from_refs(gens: &[&'a Polynomial]) -> Self {
        let list = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let (lm, lc) = g.terms()[0];
                Reducer {
                    poly: g,
                    lm,
                    lc_inv: g.field().inv(lc).expect("nonzero"),
                    mask: divmask(&lm),
                }
            })
            .collect();
        Reducers { list }
    }

    fn find(&self, m: &Monomial) -> Option<&Reducer<'a>> {
        let mask = divmask(m);
        self.list
            .iter()
            .find(|r| r.mask & !mask == 0 && r.lm.divides(m))
    }

    /// Full reduction: top and tail.
    fn reduce(&self, f: Polynomial) -> Polynomial {
        let ring = f.ring().clone();
        if self.list.is_empty() || f.is_zero() {
            return f;
        }
        let field = ring.field();
        let mut bucket = Geobucket::new(&ring);
        bucket.add_desc(f.into_terms());
        let mut out = Vec::new();
        while let Some((m, c)) = bucket.pop_leading() {
            match self.find(&m) {
                Some(r) => {
                    let t = m.div(&r.lm).expect("divides");
                    let k = field.neg(field.mul(c, r.lc_inv));
                    let tail = &r.poly.terms()[1..];
                    let scaled: Vec<Term> = tail
                        .iter()
                        .rev()
                        .map(|&(mm, cc)| (mm.mul(&t), field.mul(cc, k)))
                        .collect();
                    bucket.add_asc(scaled);
                }
                None => out.push((m, c)),
            }
        }
        Polynomial::from_sorted(&ring, out)
    }
}

/// Sum of polynomials kept in buckets of geometrically growing length.
/// Each bucket is sorted in increasing order so its leading term is last.
struct Geobucket<'r> {
    ring: &'r Ring,
    field: &'r FieldSpec,
    buckets: Vec<Vec<Term>>,
}

impl<'r> Geobucket<'r> {
    fn new(ring: &'r Arc<Ring>) -> Self {
        Geobucket {
            ring,
            field: ring.field(),
            buckets: Vec::new(),
        }
    }

    fn add_desc(&mut self, mut terms: Vec<Term>) {
        terms.reverse();
        self.add_asc(terms);
    }

    fn add_asc(&mut self, terms: Vec<Term>) {
        if terms.is_empty() {
            return;
        }
        let mut i = bucket_index(terms.len());
        let mut cur = terms;
        loop {
            if self.buckets.len() <= i {
                self.buckets.resize_with(i + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[i]);
            cur = self.merge_asc(existing, cur);
            if cur.len() <= bucket_cap(i) {
                self.buckets[i] = cur;
                return;
            }
            i += 1;
        }
    }

    fn merge_asc(&self, a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
        if a.is_empty() {
            return b;
        }
        if b.is_empty() {
            return a;
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(a[i].1, b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        out
    }

    fn pop_leading(&mut self) -> Option<Term> {
        loop {
            let mut best: Option<usize> = None;
            for i in 0..self.buckets.len() {
                let Some(head) = self.buckets[i].last().copied() else {
                    continue;
                };
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        let bh = self.buckets[b].last().expect("nonempty").0;
                        match self.ring.cmp(&head.0, &bh) {
                            Ordering::Greater => best = Some(i),
                            Ordering::Equal => {
                                self.buckets[i].pop();
                                let slot = self.buckets[b].last_mut().expect("nonempty");
                                slot.1 = self.field.add(slot.1, head.1);
                            }
                            Ordering::Less => {}
                        }
                    }
                }
            }
            let t = self.buckets[best?].pop().expect("nonempty");
            if !t.1.is_zero() {
                return Some(t);
            }
        }
    }
}

fn bucket_cap(i: usize) -> usize {
    4usize << (2 * i)
}

fn bucket_index(len: usize) -> usize {
    let mut i = 0;
    while bucket_cap(i) < len {
        i += 1;
    }
    i
}

/// Normal form of `f` modulo `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(f)
}

/// Staircase of a basis.
pub fn staircase(g: &GroebnerBasis) -> Result<Staircase> {
    g.staircase()
}

/// Monomials outside the ideal generated by `initial`, by breadth-first
/// expansion from 1.
pub fn staircase_of(ring: &Ring, initial: &[Monomial]) -> Result<Staircase> {
    let n = ring.nvars();
    for v in 0..n {
        let pure = initial.iter().any(|m| {
            m.exponent(v) > 0 && (0..n).all(|u| u == v || m.exponent(u) == 0)
        });
        if !pure && !initial.iter().any(|m| m.is_one()) {
            return Err(Error::InfiniteStaircase(ring.vars()[v].clone()));
        }
    }
    let masks: Vec<(u64, Monomial)> = initial.iter().map(|m| (divmask(m), *m)).collect();
    let in_ideal = |m: &Monomial| {
        let mask = divmask(m);
        masks.iter().any(|(k, g)| k & !mask == 0 && g.divides(m))
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let one = Monomial::one();
    if !in_ideal(&one) {
        seen.insert(one);
        queue.push_back(one);
    }
    while let Some(m) = queue.pop_front() {
        out.push(m);
        for v in 0..n {
            let next = m.mul(&Monomial::var(v, 1));
            if !in_ideal(&next) && seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    out.sort_by(|a, b| ring.cmp(a, b));
    Ok(Staircase {
        monomials: out,
        complete: true,
    })
}

/// Field equation `v^{q^2} - v` for variable `v`.
pub fn field_equation(ring: &Arc<Ring>, v: usize) -> Polynomial {
    let size = ring.field().size();
    let minus_one = ring.field().neg(FieldElement::ONE);
    Polynomial::from_terms(
        ring,
        [(Monomial::var(v, size), FieldElement::ONE), (Monomial::var(v, 1), minus_one)],
    )
}

/// Number of GF(q^2)-rational points of the ideal generated by `gens`,
/// counted as the staircase size of the ideal with all field equations
/// adjoined. An empty generator list means the whole affine space of the
/// given ring.
pub fn count_rational_points(gens: &[Polynomial], ring: &Arc<Ring>) -> Result<u64> {
    count_rational_points_with(gens, ring, GbOptions::default())
}

pub fn count_rational_points_with(gens: &[Polynomial], ring: &Arc<Ring>, opts: GbOptions) -> Result<u64> {
    if gens.iter().any(|g| !Ring::same(g.ring(), ring)) {
        return Err(Error::MixedRings);
    }
    let mut all: Vec<Polynomial> = gens.to_vec();
    all.extend((0..ring.nvars()).map(|v| field_equation(ring, v)));
    if all.is_empty() {
        return Ok(1);
    }
    let gb = buchberger_with(&all, TermOrder::DegRevLex, opts)?;
    Ok(gb.staircase()?.len() as u64)
}
