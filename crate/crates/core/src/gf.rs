//! Prime fields `GF(p)` and explicit extensions `GF(p^m)`.
//!
//! Extension elements are coefficient vectors of length `m` (low degree
//! first) reduced modulo a fixed monic irreducible polynomial. The modulus is
//! the smallest irreducible of its degree under the canonical ordering, so
//! every run builds the same field and finds the same roots of unity.

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Hard ceiling on the extension degree.
pub const MAX_EXT_DEGREE: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + self.p as u64 - b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }
}

/// `GF(p^m)` with an explicit monic irreducible modulus of degree `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    m: usize,
    modulus: Poly,
}

/// An element of an [`ExtField`]: `m` coefficients in `[0, p)`, low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    coeffs: Vec<u32>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl ExtField {
    /// `GF(p^m)` whose modulus is the smallest monic irreducible of degree `m`.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_cap(p, m, MAX_EXT_DEGREE)
    }

    pub fn with_cap(p: u64, m: u32, cap: u32) -> Result<Self> {
        let base = PrimeField::new(p)?;
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let cap = cap.min(MAX_EXT_DEGREE);
        if m > cap {
            return Err(Error::ExtensionTooLarge {
                m: m as u64,
                cap: cap as u64,
            });
        }
        let modulus = smallest_irreducible(base, m as usize);
        Ok(Self {
            base,
            m: m as usize,
            modulus,
        })
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn p(&self) -> u32 {
        self.base.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `p^m - 1`.
    pub fn group_order(&self) -> u128 {
        (self.base.p as u128).pow(self.m as u32) - 1
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_base(1)
    }

    pub fn from_base(&self, c: u32) -> FieldElem {
        let mut e = self.zero();
        e.coeffs[0] = c % self.base.p;
        e
    }

    /// Element with the given coefficient vector (reduced mod `p`, padded or
    /// rejected if longer than `m`).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.m {
            return Err(Error::FieldMismatch);
        }
        let mut e = self.zero();
        for (dst, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *dst = c % self.base.p;
        }
        Ok(e)
    }

    /// Element whose coefficient vector spells `index` in base `p`, low
    /// degree least significant. This is the canonical element ordering.
    pub fn from_index(&self, mut index: u128) -> FieldElem {
        let p = self.base.p as u128;
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = (index % p) as u32;
            index /= p;
        }
        e
    }

    pub fn index(&self, a: &FieldElem) -> u128 {
        a.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.base.p as u128 + c as u128)
    }

    /// `Some(c)` when `a` is the image of `c` in the prime subfield.
    pub fn as_base(&self, a: &FieldElem) -> Option<u32> {
        if a.coeffs[1..].iter().all(|&c| c == 0) {
            Some(a.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, a: &FieldElem) -> Result<()> {
        if a.coeffs.len() != self.m || a.coeffs.iter().any(|&c| c >= self.base.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let f = self.base;
        FieldElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect(),
        }
    }

    pub fn add_assign(&self, a: &mut FieldElem, b: &FieldElem) {
        let f = self.base;
        for (x, &y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x = f.add(*x, y);
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let f = self.base;
        FieldElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.sub(x, y)).collect(),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let f = self.base;
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| f.neg(x)).collect(),
        }
    }

    pub fn scale(&self, a: &FieldElem, c: u32) -> FieldElem {
        let f = self.base;
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| f.mul(x, c)).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let p = self.base.p as u64;
        let m = self.m;
        if m == 1 {
            return FieldElem {
                coeffs: vec![((a.coeffs[0] as u64 * b.coeffs[0] as u64) % p) as u32],
            };
        }
        let mut t = vec![0u64; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                t[i + j] = (t[i + j] + x as u64 * y as u64) % p;
            }
        }
        let md = self.modulus.coeffs();
        for i in (m..2 * m - 1).rev() {
            let c = t[i];
            if c == 0 {
                continue;
            }
            // x^m = -(md[0] + ... + md[m-1] x^{m-1})
            for j in 0..m {
                t[i - m + j] = (t[i - m + j] + (p - c) * md[j] as u64) % p;
            }
        }
        FieldElem {
            coeffs: t[..m].iter().map(|&c| c as u32).collect(),
        }
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.group_order() - 1))
    }

    /// Checked arithmetic on possibly foreign elements.
    pub fn arith(&self, a: &FieldElem, b: &FieldElem, op: ArithOp) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.mul(a, &self.inv(b)?),
        })
    }

    /// Smallest `t >= 1` with `a^t = 1`.
    pub fn mult_order(&self, a: &FieldElem) -> Result<u128> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroOrder);
        }
        let mut ord = self.group_order();
        for (r, _) in factorize(ord) {
            while ord % r == 0 && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Smallest generator of the multiplicative group under the canonical ordering.
    pub fn smallest_generator(&self) -> FieldElem {
        let order = self.group_order();
        let primes: Vec<u128> = factorize(order).into_iter().map(|(r, _)| r).collect();
        let one = self.one();
        (1..=order)
            .map(|i| self.from_index(i))
            .find(|g| primes.iter().all(|&r| self.pow(g, order / r) != one))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// A primitive `n`-th root of unity: `gamma^((p^m - 1)/n)` for the smallest generator `gamma`.
    pub fn primitive_nth_root(&self, n: u64) -> Result<FieldElem> {
        let order = self.group_order();
        if n == 0 || order % n as u128 != 0 {
            return Err(Error::NoNthRoot { n, order });
        }
        if n == 1 {
            return Ok(self.one());
        }
        let gamma = self.smallest_generator();
        Ok(self.pow(&gamma, order / n as u128))
    }
}

/// Irreducibility over `GF(p)` by Ben-Or's test: `f` of degree `m` is
/// irreducible iff `gcd(x^(p^i) - x, f) = 1` for every `i <= m/2`.
pub fn is_irreducible(f: &Poly) -> bool {
    let m = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(m) => m,
    };
    let field = f.field();
    let x = Poly::monomial(field, 1, 1);
    let mut h = x.clone();
    for _ in 0..m / 2 {
        h = h.pow_mod(field.p() as u64, f);
        let g = Poly::gcd(&(&h - &x), f).expect("f is nonzero");
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

fn smallest_irreducible(field: PrimeField, m: usize) -> Poly {
    let p = field.p() as u128;
    let count = p.pow(m as u32);
    (0..count)
        .map(|v| {
            let mut coeffs = Vec::with_capacity(m + 1);
            let mut v = v;
            for _ in 0..m {
                coeffs.push((v % p) as u32);
                v /= p;
            }
            coeffs.push(1);
            Poly::from_coeffs(field, coeffs)
        })
        .find(|f| (m == 1 || f.coeffs()[0] != 0) && is_irreducible(f))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Oracle: trial division by every monic polynomial of degree <= m/2.
    fn irreducible_by_trial_division(f: &Poly) -> bool {
        let m = f.degree().unwrap();
        let field = f.field();
        let p = field.p() as u64;
        for d in 1..=m / 2 {
            for v in 0..p.pow(d as u32) {
                let mut coeffs = Vec::new();
                let mut v = v;
                for _ in 0..d {
                    coeffs.push((v % p) as u32);
                    v /= p;
                }
                coeffs.push(1);
                let g = Poly::from_coeffs(field, coeffs);
                if f.divmod(&g).unwrap().1.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn ben_or_agrees_with_trial_division() {
        for (p, maxdeg) in [(2u32, 8usize), (3, 5), (5, 4)] {
            let field = PrimeField::new(p as u64).unwrap();
            for m in 1..=maxdeg {
                for v in 0..(p as u64).pow(m as u32) {
                    let mut coeffs = Vec::new();
                    let mut v = v;
                    for _ in 0..m {
                        coeffs.push((v % p as u64) as u32);
                        v /= p as u64;
                    }
                    coeffs.push(1);
                    let f = Poly::from_coeffs(field, coeffs);
                    assert_eq!(is_irreducible(&f), irreducible_by_trial_division(&f), "{f}");
                }
            }
        }
    }

    #[test]
    fn modulus_choice() {
        let f = ExtField::new(2, 1).unwrap();
        assert_eq!(f.modulus().degree(), Some(1));
        let f = ExtField::new(2, 3).unwrap();
        assert_eq!(f.modulus().coeffs(), &[1, 1, 0, 1]);
        let f = ExtField::new(2, 15).unwrap();
        assert_eq!(f.group_order(), 32767);
        assert!(irreducible_by_trial_division(f.modulus()));
        assert!(matches!(ExtField::new(4, 2), Err(Error::NotPrime(4))));
        assert!(matches!(ExtField::new(2, 0), Err(Error::ZeroDegree)));
        assert!(matches!(ExtField::new(2, 31), Err(Error::ExtensionTooLarge { .. })));
    }

    #[test]
    fn prime_field_examples() {
        let f = ExtField::new(7, 1).unwrap();
        let (a, b) = (f.from_base(3), f.from_base(5));
        assert_eq!(f.arith(&a, &b, ArithOp::Mul).unwrap(), f.one());
        assert_eq!(f.arith(&f.one(), &a, ArithOp::Div).unwrap(), f.from_base(5));
        assert_eq!(f.arith(&a, &f.zero(), ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(f.mult_order(&f.one()).unwrap(), 1);
        assert_eq!(f.mult_order(&a).unwrap(), 6);
        assert_eq!(f.mult_order(&f.zero()), Err(Error::ZeroOrder));
        let g13 = ExtField::new(13, 1).unwrap();
        assert_eq!(g13.mult_order(&g13.from_base(5)).unwrap(), 4);
    }

    #[test]
    fn cubic_extension_mul() {
        let f = ExtField::new(2, 3).unwrap();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        let x2 = f.from_coeffs(&[0, 0, 1]).unwrap();
        assert_eq!(f.mul(&x, &x2), f.from_coeffs(&[1, 1]).unwrap());
        let other = ExtField::new(2, 4).unwrap();
        assert_eq!(
            f.arith(&x, &other.one(), ArithOp::Add),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn nth_roots() {
        let f = ExtField::new(2, 3).unwrap();
        let b = f.primitive_nth_root(7).unwrap();
        let mut x = b.clone();
        let mut k = 1;
        while x != f.one() {
            x = f.mul(&x, &b);
            k += 1;
        }
        assert_eq!(k, 7);

        let f = ExtField::new(5, 1).unwrap();
        assert_eq!(f.primitive_nth_root(1).unwrap(), f.one());

        let f = ExtField::new(2, 15).unwrap();
        let b = f.primitive_nth_root(217).unwrap();
        assert_eq!(f.pow(&b, 217), f.one());
        assert_ne!(f.pow(&b, 31), f.one());
        assert_ne!(f.pow(&b, 7), f.one());
        assert!(matches!(f.primitive_nth_root(11), Err(Error::NoNthRoot { .. })));
    }

    #[test]
    fn large_extension_generator() {
        let f = ExtField::new(5, 30).unwrap();
        let g = f.smallest_generator();
        assert_eq!(f.mult_order(&g).unwrap(), f.group_order());
    }

    fn elem(f: &ExtField) -> impl Strategy<Value = FieldElem> + '_ {
        prop::collection::vec(0..f.p(), f.degree()).prop_map(move |c| f.from_coeffs(&c).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(
            (a, b, c) in {
                let f = Box::leak(Box::new(ExtField::new(3, 5).unwrap()));
                (elem(f), elem(f), elem(f))
            }
        ) {
            let f = ExtField::new(3, 5).unwrap();
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
            // Frobenius: a^(p^m) = a
            prop_assert_eq!(f.pow(&a, f.group_order() + 1), a);
        }

        #[test]
        fn binary_frobenius(v in 0u128..(1 << 12)) {
            let f = ExtField::new(2, 12).unwrap();
            let a = f.from_index(v);
            prop_assert_eq!(f.index(&a), v);
            prop_assert_eq!(f.pow(&a, 1 << 12), a);
        }
    }
}
