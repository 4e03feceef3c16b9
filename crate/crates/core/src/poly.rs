//! Dense univariate polynomials over a prime field.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::gf::PrimeField;

/// Coefficients low degree first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::monomial(field, 0, 1)
    }

    pub fn monomial(field: PrimeField, degree: usize, c: u32) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: PrimeField, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Self::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        let p = field.p();
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut poly = Self { field, coeffs };
        poly.trim();
        poly
    }

    /// Build from signed coefficients, reducing each into `[0, p)`.
    pub fn from_signed(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Quotient and remainder; `deg(remainder) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let f = self.field;
        if self.field != divisor.field {
            return Err(Error::FieldMismatch);
        }
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lead = f.inv(divisor.leading())?;
        let p = f.p() as u64;
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], inv_lead);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            let neg_c = (p - c as u64) % p;
            let base = i - dd;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                if dj != 0 {
                    let r = &mut rem[base + j];
                    *r = ((*r as u64 + neg_c * dj as u64) % p) as u32;
                }
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.divmod(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor by Euclid's algorithm.
    pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroGcd);
        }
        if a.field != b.field {
            return Err(Error::FieldMismatch);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r2 = r0.rem(&r1)?;
            r0 = r1;
            r1 = r2;
        }
        Ok(r0.monic())
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut acc = Poly::one(self.field).rem(modulus).expect("nonzero modulus");
        let mut base = self.rem(modulus).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus).expect("nonzero modulus");
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus).expect("nonzero modulus");
            }
        }
        acc
    }

    /// Coefficient list, low degree first, comma separated. Zero is `"0"`.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_coeff_list(field: PrimeField, s: &str) -> Result<Poly> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_signed(field, &coeffs))
    }

    /// Descending powers, e.g. `x^96+x^94+2x^5+x+1`.
    pub fn to_human(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            let term = match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// Parse the descending-power form. Accepts `x^{12}` braces and spaces.
    pub fn parse_human(field: PrimeField, s: &str) -> Result<Poly> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        if cleaned == "0" {
            return Ok(Poly::zero(field));
        }
        let mut coeffs: Vec<i64> = Vec::new();
        for term in cleaned.split('+') {
            let (coef, exp) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?
                    };
                    (&term[..pos], exp)
                }
            };
            let coef: i64 = if coef.is_empty() {
                1
            } else {
                coef.parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            coeffs[exp] += coef;
        }
        Ok(Poly::from_signed(field, &coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let p = f.p() as u64;
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
                }
            }
        }
        Poly::from_coeffs(f, out.into_iter().map(|c| c as u32).collect())
    }
}
