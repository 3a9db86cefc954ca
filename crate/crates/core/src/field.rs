//! Exact arithmetic in finite fields `F_p[a]/(m(a))`.
//!
//! A [`Field`] owns precomputed addition, multiplication, negation and
//! inversion tables, so every operation is a table lookup. Elements are
//! carried around as bare [`Fe`] indices in hot loops; the checked
//! [`FieldElement`] wrapper pairs an index with its field for API surfaces
//! that must reject mixed-field arithmetic.
//!
//! The index of an element is its coefficient vector read as a base-`p`
//! number: `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Index 0 is zero, index 1 is
//! one, and `0..p` is the prime subfield.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: usize = 1024;

/// Characteristic, extension degree and minimal polynomial of a field.
///
/// `min_poly` lists coefficients from the constant term upward and must be
/// monic of degree `ext_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub ext_degree: u32,
    pub min_poly: Vec<u32>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec { p, ext_degree: 1, min_poly: vec![0, 1] }
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.ext_degree)
    }
}

/// Element index into a [`Field`]'s tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    spec: FieldSpec,
    q: usize,
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
}

/// A finite field with precomputed operation tables. Cheap to clone.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.spec.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())?;
        if self.ext_degree() > 1 {
            write!(f, "[{}]", render_poly_fp(&self.inner.spec.min_poly, "a"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(FieldSpec::prime(p))
    }

    /// Builds the field described by `spec`, validating primality of `p` and
    /// irreducibility of the minimal polynomial.
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let p = spec.p;
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        let m = spec.ext_degree as usize;
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        if spec.min_poly.len() != m + 1 || spec.min_poly[m] != 1 {
            return Err(Error::InvalidField(format!(
                "minimal polynomial must be monic of degree {m}, got {:?}",
                spec.min_poly
            )));
        }
        if spec.min_poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!(
                "minimal polynomial coefficients must lie in [0, {p})"
            )));
        }
        let q = (p as usize)
            .checked_pow(m as u32)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("field order {p}^{m} exceeds {MAX_FIELD_ORDER}")))?;
        if !is_irreducible(&spec.min_poly, p) {
            return Err(Error::InvalidField(format!(
                "{} is reducible over F_{p}",
                render_poly_fp(&spec.min_poly, "a")
            )));
        }
        Ok(Field { inner: Arc::new(build_tables(spec, q)) })
    }

    /// `F_{p^m}` with a fixed conventional minimal polynomial.
    ///
    /// `F_9` uses `a^2 + a + 2`, `F_4` uses `a^2 + a + 1` and `F_8` uses
    /// `a^3 + a + 1`; other orders take the first irreducible polynomial in
    /// base-`p` enumeration order of the lower coefficients.
    pub fn standard(p: u32, m: u32) -> Result<Field> {
        let min_poly = match (p, m) {
            (_, 1) => vec![0, 1],
            (2, 2) => vec![1, 1, 1],
            (2, 3) => vec![1, 1, 0, 1],
            (3, 2) => vec![2, 1, 1],
            _ => {
                if !is_prime(p) {
                    return Err(Error::InvalidField(format!("{p} is not prime")));
                }
                first_irreducible(p, m as usize).ok_or_else(|| {
                    Error::InvalidField(format!("no irreducible polynomial of degree {m} over F_{p}"))
                })?
            }
        };
        Field::new(FieldSpec { p, ext_degree: m, min_poly })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.inner.spec.p
    }

    pub fn ext_degree(&self) -> u32 {
        self.inner.spec.ext_degree
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.inner.add[a.index() * self.inner.q + b.index()]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.inner.neg[a.index()]
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.inner.mul[a.index() * self.inner.q + b.index()]
    }

    /// Row of the multiplication table for a fixed left factor.
    #[inline]
    pub fn mul_row(&self, a: Fe) -> &[Fe] {
        let q = self.inner.q;
        &self.inner.mul[a.index() * q..(a.index() + 1) * q]
    }

    /// Row of the addition table for a fixed left summand.
    #[inline]
    pub fn add_row(&self, a: Fe) -> &[Fe] {
        let q = self.inner.q;
        &self.inner.add[a.index() * q..(a.index() + 1) * q]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            None
        } else {
            Some(self.inner.inv[a.index()])
        }
    }

    pub fn try_inv(&self, a: Fe) -> Result<Fe> {
        self.inv(a).ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.try_inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.characteristic() as i64) as u16)
    }

    /// Element with the given coefficient vector (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        let m = self.ext_degree() as usize;
        let p = self.characteristic();
        if coeffs.len() != m {
            return Err(Error::InvalidInput(format!(
                "field element needs {m} coefficients, got {}",
                coeffs.len()
            )));
        }
        let mut idx = 0usize;
        for &c in coeffs.iter().rev() {
            if c >= p {
                return Err(Error::InvalidInput(format!("coefficient {c} not reduced mod {p}")));
            }
            idx = idx * p as usize + c as usize;
        }
        Ok(Fe(idx as u16))
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let p = self.characteristic() as usize;
        let mut idx = a.index();
        (0..self.ext_degree())
            .map(|_| {
                let c = idx % p;
                idx /= p;
                c as u32
            })
            .collect()
    }

    /// The class of `a` in `F_p[a]/(m(a))`; equals `from_int(0)` in a prime
    /// field presented by `m(a) = a`.
    pub fn root(&self) -> Fe {
        if self.ext_degree() == 1 {
            let c = self.inner.spec.min_poly[0] as i64;
            self.from_int(-c)
        } else {
            Fe(self.characteristic() as u16)
        }
    }

    /// All `p^m` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order()).map(|i| Fe(i as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (1..self.order()).map(|i| Fe(i as u16))
    }

    /// Least `t >= 1` with `a^t = 1`.
    pub fn multiplicative_order(&self, a: Fe) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut x = a;
        let mut t = 1u64;
        while x != Fe::ONE {
            x = self.mul(x, a);
            t += 1;
        }
        Ok(t)
    }

    /// First element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> Fe {
        let target = self.order() as u64 - 1;
        self.nonzero_elements()
            .find(|&a| self.multiplicative_order(a).ok() == Some(target))
            .expect("finite fields have cyclic unit groups")
    }

    /// Whether `a` lies in a proper subfield.
    pub fn in_proper_subfield(&self, a: Fe) -> bool {
        let p = self.characteristic() as u64;
        let m = self.ext_degree() as u64;
        (1..m).filter(|&d| m.is_multiple_of(d)).any(|d| self.pow(a, p.pow(d as u32)) == a)
    }

    pub fn element(&self, a: Fe) -> FieldElement {
        FieldElement { field: self.clone(), value: a }
    }

    /// Human-readable form; the adjoined root is written `a`.
    pub fn render(&self, a: Fe) -> String {
        if self.ext_degree() == 1 {
            return a.0.to_string();
        }
        let c = self.coeffs(a);
        render_poly_fp(&c, "a")
    }

    /// `true` when `render` yields a single token that needs no parentheses
    /// as a coefficient.
    pub fn is_atomic(&self, a: Fe) -> bool {
        self.ext_degree() == 1 || self.coeffs(a).iter().filter(|&&c| c != 0).count() <= 1
    }
}

/// A field element bundled with its field. Mixed-field arithmetic is an error.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Fe,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self.field.render(self.value), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.render(self.value))
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.element(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.element(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.element(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.field.element(self.field.try_inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.element(self.field.pow(self.value, e))
    }

    pub fn multiplicative_order(&self) -> Result<u64> {
        self.field.multiplicative_order(self.value)
    }
}

fn build_tables(spec: FieldSpec, q: usize) -> Tables {
    let p = spec.p as usize;
    let m = spec.ext_degree as usize;
    let digits = |mut i: usize| -> Vec<usize> {
        (0..m)
            .map(|_| {
                let d = i % p;
                i /= p;
                d
            })
            .collect()
    };
    let encode = |c: &[usize]| -> u16 { c.iter().rev().fold(0usize, |acc, &d| acc * p + d) as u16 };
    let all: Vec<Vec<usize>> = (0..q).map(digits).collect();

    let mut add = vec![Fe::ZERO; q * q];
    let mut mul = vec![Fe::ZERO; q * q];
    let mut neg = vec![Fe::ZERO; q];
    for a in 0..q {
        let ca = &all[a];
        let n: Vec<usize> = ca.iter().map(|&d| (p - d) % p).collect();
        neg[a] = Fe(encode(&n));
        for b in 0..q {
            let cb = &all[b];
            let s: Vec<usize> = ca.iter().zip(cb).map(|(&x, &y)| (x + y) % p).collect();
            add[a * q + b] = Fe(encode(&s));
            mul[a * q + b] = Fe(encode(&mulmod(ca, cb, &spec.min_poly, p)));
        }
    }
    let mut inv = vec![Fe::ZERO; q];
    for a in 1..q {
        for b in 1..q {
            if mul[a * q + b] == Fe::ONE {
                inv[a] = Fe(b as u16);
                break;
            }
        }
    }
    Tables { spec, q, add, mul, neg, inv }
}

/// Product of two residues modulo the monic `modulus`, all over `F_p`.
fn mulmod(a: &[usize], b: &[usize], modulus: &[u32], p: usize) -> Vec<usize> {
    let m = modulus.len() - 1;
    let mut prod = vec![0usize; 2 * m.max(1)];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (m..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &mc) in modulus[..m].iter().enumerate() {
            let idx = k - m + i;
            prod[idx] = (prod[idx] + p * p - c * mc as usize % p) % p;
        }
    }
    prod.truncate(m);
    prod
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense univariate polynomials over F_p, constant term first, no trailing zeros.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| (a as u64 * b as u64) % p as u64 == 1).expect("nonzero residue")
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod_p(*b.last().expect("nonzero divisor"), p) as u64;
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv) % p as u64;
        for (i, &bc) in b.iter().enumerate() {
            let v = (r[shift + i] as u64 + (p as u64 - c) * bc as u64) % p as u64;
            r[shift + i] = v as u32;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    poly_rem(&prod.into_iter().map(|c| c as u32).collect::<Vec<_>>(), f, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility over `F_p` by `gcd(f, a^{p^i} - a) = 1` for `i <= deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let n = f.len().saturating_sub(1);
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let mut h = poly_rem(&[0, 1], &f, p);
    for _ in 1..=n / 2 {
        // h <- h^p mod f
        let mut acc = vec![1u32];
        for _ in 0..p {
            acc = poly_mulmod(&acc, &h, &f, p);
        }
        h = acc;
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(&f, &trim(diff), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn first_irreducible(p: u32, m: usize) -> Option<Vec<u32>> {
    let count = (p as usize).pow(m as u32);
    (0..count).find_map(|i| {
        let mut poly = Vec::with_capacity(m + 1);
        let mut idx = i;
        for _ in 0..m {
            poly.push((idx % p as usize) as u32);
            idx /= p as usize;
        }
        poly.push(1);
        is_irreducible(&poly, p).then_some(poly)
    })
}

fn render_poly_fp(coeffs: &[u32], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, _) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, _) => format!("{c}{var}"),
            (_, 1) => format!("{var}^{i}"),
            _ => format!("{c}{var}^{i}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::standard(3, 2).unwrap()
    }

    #[test]
    fn square_of_root_in_f9() {
        let f = f9();
        let x = f.root();
        // a^2 = -a - 2 = 2a + 1
        assert_eq!(f.coeffs(f.mul(x, x)), vec![1, 2]);
    }

    #[test]
    fn prime_field_addition() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.add(Fe(2), Fe(2)), Fe(1));
    }

    #[test]
    fn inverse_of_root_by_scan() {
        let f = f9();
        let x = f.root();
        let scanned: Vec<Fe> = f.elements().filter(|&v| f.mul(x, v) == Fe::ONE).collect();
        assert_eq!(scanned.len(), 1);
        assert_eq!(f.inv(x), Some(scanned[0]));
        // a (a + 1) = a^2 + a = -2 = 1
        assert_eq!(f.coeffs(scanned[0]), vec![1, 1]);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = f9();
        assert!(matches!(f.try_inv(Fe::ZERO), Err(Error::DivisionByZero)));
        assert!(f.multiplicative_order(Fe::ZERO).is_err());
    }

    #[test]
    fn element_counts() {
        assert_eq!(Field::prime(3).unwrap().elements().collect::<Vec<_>>(), vec![Fe(0), Fe(1), Fe(2)]);
        assert_eq!(f9().elements().count(), 9);
        assert_eq!(Field::standard(2, 2).unwrap().elements().count(), 4);
    }

    #[test]
    fn orders_in_small_fields() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.multiplicative_order(Fe(1)).unwrap(), 1);
        assert_eq!(f3.multiplicative_order(Fe(2)).unwrap(), 2);
        let f = f9();
        // brute force: a^t for t = 1..8
        let x = f.root();
        let mut t = 1;
        let mut acc = x;
        while acc != Fe::ONE {
            acc = f.mul(acc, x);
            t += 1;
        }
        assert_eq!(f.multiplicative_order(x).unwrap(), t);
        assert_eq!(8 % t, 0);
        assert_eq!(t, 8);
    }

    #[test]
    fn rejects_reducible_and_malformed_specs() {
        // a^2 + 1 = (a + 1)^2 over F_2
        let bad = FieldSpec { p: 2, ext_degree: 2, min_poly: vec![1, 0, 1] };
        assert!(matches!(Field::new(bad), Err(Error::InvalidField(_))));
        let not_monic = FieldSpec { p: 3, ext_degree: 2, min_poly: vec![2, 1, 2] };
        assert!(Field::new(not_monic).is_err());
        assert!(Field::prime(4).is_err());
        // a^4 + a^2 + 1 = (a^2 + a + 1)^2 over F_2 has no roots but is reducible
        let quartic = FieldSpec { p: 2, ext_degree: 4, min_poly: vec![1, 0, 1, 0, 1] };
        assert!(Field::new(quartic).is_err());
    }

    #[test]
    fn mixed_field_arithmetic_is_an_error() {
        let a = f9().element(Fe(4));
        let b = Field::prime(3).unwrap().element(Fe(1));
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch)));
        assert!(a.mul(&a).is_ok());
    }

    #[test]
    fn standard_fields_build() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 4), (5, 1), (5, 2), (7, 1)] {
            let f = Field::standard(p, m).unwrap();
            assert_eq!(f.order(), (p as usize).pow(m));
        }
    }

    #[test]
    fn subfield_membership() {
        let f = f9();
        assert!(f.in_proper_subfield(Fe(2)));
        assert!(!f.in_proper_subfield(f.root()));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, m) in [(2, 2), (2, 3), (3, 2), (5, 1), (3, 4)] {
            let f = Field::standard(p, m).unwrap();
            let els: Vec<Fe> = f.elements().collect();
            let step = if f.order() > 20 { 7 } else { 1 };
            for &a in &els {
                if a != Fe::ZERO {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                    let ord = f.multiplicative_order(a).unwrap();
                    assert_eq!((f.order() as u64 - 1) % ord, 0);
                }
                for &b in els.iter().step_by(step) {
                    // Frobenius is additive
                    let fr = |v| f.pow(v, p as u64);
                    assert_eq!(fr(f.add(a, b)), f.add(fr(a), fr(b)));
                    for &c in els.iter().step_by(step) {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
