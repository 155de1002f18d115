//! Exact arithmetic in GF(q^2) with q = p^e.
//!
//! The field is modelled as GF(p)[t]/(m(t)) where m is the monic irreducible
//! polynomial of degree 2e whose coefficient vector, read from the leading
//! coefficient down, is lexicographically smallest. An element is stored as
//! the integer `c_0 + c_1 p + ... + c_{2e-1} p^{2e-1}` of its reduced
//! coefficient vector, so equality is structural and the natural integer
//! order doubles as the deterministic enumeration order (0 first, then 1).
//!
//! GF(q) is the subfield `{a : a^q = a}`; there is no separate type for it.
//!
//! Supported sizes: q^2 <= 2^16.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of field elements.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// An element of GF(q^2), encoded as the integer value of its coefficient
/// vector in base p.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Position of the element in the deterministic enumeration.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A concrete model of GF(q^2) together with the lookup tables used for
/// arithmetic.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    q2: u32,
    /// Monic modulus, lowest degree first, length 2e + 1.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed primitive element g, doubled in length so
    /// that `exp[log a + log b]` never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Addition table, only for small odd characteristic.
    add: Option<Vec<u16>>,
    neg: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("q", &self.q)
            .field("q2", &self.q2)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

/// Builds GF(q^2) for q = p^e.
pub fn build_field(p: u64, e: u32) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::InvalidExponent);
    }
    let size = (p as u128).checked_pow(2 * e).unwrap_or(u128::MAX);
    if size > MAX_FIELD_SIZE as u128 {
        return Err(Error::FieldTooLarge(size.min(u64::MAX as u128) as u64));
    }
    let p = p as u32;
    let n = 2 * e as usize;
    let q = p.pow(e);
    let q2 = q * q;
    let modulus = smallest_irreducible(p, n);

    let mut spec = FieldSpec {
        p,
        e,
        q,
        q2,
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
        add: None,
        neg: Vec::new(),
    };

    spec.neg = (0..q2)
        .map(|a| {
            let digits: Vec<u32> = spec.digits(a).iter().map(|&c| (p - c) % p).collect();
            spec.from_digits(&digits)
        })
        .collect();
    if p != 2 && q2 <= 256 {
        let mut table = vec![0u16; (q2 * q2) as usize];
        for a in 0..q2 {
            for b in 0..q2 {
                table[(a * q2 + b) as usize] = spec.add_digits(a, b) as u16;
            }
        }
        spec.add = Some(table);
    }

    let order = q2 - 1;
    let g = (2..q2)
        .chain(std::iter::once(1))
        .find(|&g| is_primitive(&spec, g, order))
        .expect("the multiplicative group of a finite field is cyclic");
    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![0u32; q2 as usize];
    let mut acc = 1u32;
    for i in 0..order {
        exp[i as usize] = acc;
        exp[(i + order) as usize] = acc;
        log[acc as usize] = i;
        acc = spec.mul_slow(acc, g);
    }
    spec.exp = exp;
    spec.log = log;
    Ok(spec)
}

/// Builds GF(q^2) for a prime power q.
pub fn field_for_q(q: u32) -> Result<FieldSpec> {
    let factors = prime_factors(q as u64);
    match factors.first() {
        Some(&p) if factors.iter().all(|&f| f == p) => {
            let mut e = 0;
            let mut v = q;
            while v > 1 {
                v /= p as u32;
                e += 1;
            }
            build_field(p, e)
        }
        _ => Err(Error::NotPrime(q as u64)),
    }
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of elements, q^2.
    pub fn size(&self) -> u32 {
        self.q2
    }

    /// Monic modulus, lowest degree coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Element at position `index` of the enumeration.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.q2 {
            Ok(FieldElement(index))
        } else {
            Err(Error::ElementOutOfRange(index))
        }
    }

    /// The image of an integer under Z -> GF(p) -> GF(q^2).
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > 2 * self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!(
                "coefficient vector {coeffs:?} is not reduced mod {}",
                self.p
            )));
        }
        Ok(FieldElement(self.from_digits(coeffs)))
    }

    /// The 2e coefficients of `a` in GF(p)[t]/(m), lowest degree first.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        self.digits(a.0)
    }

    /// The class of t in GF(p)[t]/(m).
    pub fn generator_t(&self) -> FieldElement {
        FieldElement(self.p)
    }

    /// All q^2 elements in enumeration order, starting with 0 and 1.
    pub fn enumerate_elements(&self) -> Vec<FieldElement> {
        (0..self.q2).map(FieldElement).collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        match &self.add {
            Some(t) => FieldElement(t[(a.0 * self.q2 + b.0) as usize] as u32),
            None => FieldElement(self.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q2 - 1;
        Ok(FieldElement(
            self.exp[((order - self.log[a.0 as usize]) % order) as usize],
        ))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = (self.q2 - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (k % order)) % order;
        FieldElement(self.exp[l as usize])
    }

    /// a -> a^q, the generator of Gal(GF(q^2)/GF(q)).
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.q as u64)
    }

    /// Tr(a) = a^q + a.
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        self.add(self.frobenius(a), a)
    }

    /// N(a) = a^(q+1).
    pub fn norm(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.q as u64 + 1)
    }

    pub fn in_subfield(&self, a: FieldElement) -> bool {
        self.frobenius(a) == a
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let n = 2 * self.e as usize;
        let mut out = vec![0; n];
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    /// Schoolbook product reduced mod the modulus; only used to build tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; da.len() + db.len()];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let n = self.modulus.len() - 1;
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = k - n + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let reduced: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
        self.from_digits(&reduced)
    }
}

fn is_primitive(spec: &FieldSpec, g: u32, order: u32) -> bool {
    if order == 1 {
        return g == 1;
    }
    let pow = |mut k: u32| {
        let (mut acc, mut base) = (1u32, g);
        while k > 0 {
            if k & 1 == 1 {
                acc = spec.mul_slow(acc, base);
            }
            base = spec.mul_slow(base, base);
            k >>= 1;
        }
        acc
    };
    prime_factors(order as u64)
        .into_iter()
        .all(|r| pow(order / r as u32) != 1)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest monic irreducible of degree n over GF(p), lowest degree first.
fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    let count = (p as u64).pow(n as u32);
    (0..count)
        .map(|v| {
            let mut c = Vec::with_capacity(n + 1);
            let mut v = v;
            for _ in 0..n {
                c.push((v % p as u64) as u32);
                v /= p as u64;
            }
            c.push(1);
            c
        })
        .find(|c| is_irreducible(c, p))
        .expect("irreducible polynomials exist in every degree")
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    if f[0] == 0 {
        return n == 1;
    }
    for deg in 1..=n / 2 {
        for v in 0..(p as u64).pow(deg as u32) {
            let mut g = Vec::with_capacity(deg + 1);
            let mut v = v;
            for _ in 0..deg {
                g.push((v % p as u64) as u32);
                v /= p as u64;
            }
            g.push(1);
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    for k in (dg..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let idx = k - dg + i;
            r[idx] = (r[idx] + (p - c) * gi as u64) % p;
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}
