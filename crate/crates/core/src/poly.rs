//! Dense univariate polynomials over a [`Field`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cycfactor;
use crate::{Error, Field, FieldElem, Result};

/// Polynomial with coefficients in ascending degree. The coefficient vector
/// never ends in a zero, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: FieldElem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: FieldElem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    pub fn x(field: &Field) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Self {
        let mut p = Self::monomial(field, field.one(), n);
        p = p.sub(&Self::one(field));
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = &self.field;
        let db = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = f.mul(&rem[i], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let k = i - db + j;
                rem[k] = f.sub(&rem[k], &f.mul(&c, d));
            }
            quot[i - db] = c;
        }
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Exact quotient; panics when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(c) => self.scale(&self.field.inv(c).unwrap()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, at: &FieldElem) -> FieldElem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, at), c))
    }

    /// `(g, u, v)` with `g = gcd(a, b)` monic and `u a + v b = g`.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
        a.check_same(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut u1) = (Poly::one(f), Poly::zero(f));
        let (mut v0, mut v1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = core::mem::replace(&mut r1, r);
            u0 = core::mem::replace(&mut u1, u);
            v0 = core::mem::replace(&mut v1, v);
        }
        let lead_inv = f.inv(r0.leading().unwrap()).unwrap();
        Ok((r0.scale(&lead_inv), u0.scale(&lead_inv), v0.scale(&lead_inv)))
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(Self::ext_gcd(a, b)?.0)
    }

    /// `l` with `a l ≡ 1 (mod f)` and `deg l < deg f`.
    pub fn inverse_mod(a: &Poly, f: &Poly) -> Result<Poly> {
        a.check_same(f)?;
        if f.degree().unwrap_or(0) < 1 {
            return Err(Error::NotInvertible);
        }
        let (g, u, _) = Self::ext_gcd(&a.rem(f), f)?;
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        Ok(u.rem(f))
    }

    /// `x^k p(1/x)` for a formal degree `k >= deg p`, without normalization.
    pub fn reverse_at(&self, k: usize) -> Poly {
        let f = &self.field;
        assert!(self.degree().is_none_or(|d| d <= k));
        Poly::new(f, (0..=k).map(|i| self.coeff(k - i)).collect())
    }

    /// The reciprocal `x^deg f(1/x)`, made monic. Its roots are the inverses
    /// of the roots of `self`.
    pub fn reciprocal(&self) -> Result<Poly> {
        let f = &self.field;
        if self.is_zero() || f.is_zero(&self.coeff(0)) {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(self.reverse_at(self.degree().unwrap()).monic())
    }

    pub fn formal_derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(&f.from_int(i as i64), c))
                .collect(),
        )
    }

    /// The least `n >= 1` with `self | x^n - 1`.
    ///
    /// The class of `x` is a unit in `F[x]/(f)` when `f(0) != 0`, so the
    /// loop terminates.
    pub fn order(&self) -> Result<u64> {
        let f = &self.field;
        match self.degree() {
            None => return Err(Error::ZeroConstantTerm),
            Some(0) => return Err(Error::NotInvertible),
            _ => {}
        }
        if f.is_zero(&self.coeff(0)) {
            return Err(Error::ZeroConstantTerm);
        }
        let x = Poly::x(f).rem(self);
        let one = Poly::one(f);
        let mut acc = x.clone();
        let mut n = 1u64;
        while acc != one {
            acc = acc.mul(&x).rem(self);
            n += 1;
        }
        Ok(n)
    }

    /// The `s`-involution: the monic polynomial whose roots are the `s`-th
    /// powers of the roots of `self`, for `self | x^n - 1`.
    ///
    /// Computed on cyclotomic cosets: each irreducible factor with coset `C`
    /// is replaced by the factor with coset `sC mod n`.
    pub fn s_involution(&self, s: u64, n: u64) -> Result<Poly> {
        let f = &self.field;
        if n == 0 || (s % n) * (s % n) % n != 1 % n {
            return Err(Error::BadS { s, n });
        }
        let xn1 = Poly::x_pow_minus_one(f, n as usize);
        if self.is_zero() || !self.divides(&xn1) {
            return Err(Error::NotDividingXNMinus1);
        }
        let report = cycfactor::factor_xn_minus_1(n, f)?;
        let mut out = Poly::one(f);
        for factor in &report.factors {
            if factor.poly.divides(self) {
                let image = cycfactor::coset_times(&factor.coset, s, n);
                let partner = report
                    .factors
                    .iter()
                    .find(|g| g.coset == image)
                    .expect("s maps cosets to cosets");
                out = out.mul(&partner.poly);
            }
        }
        let lead = self.leading().unwrap();
        Ok(out.scale(lead).monic())
    }

    /// Canonical text form `c0 + c1*x + ... + ck*x^k`. Coefficients are the
    /// integer encodings of field elements (residues in `[0, p)` over a prime
    /// field). The zero polynomial is `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let f = &self.field;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let v = f.to_index(c).unwrap_or(0);
            match i {
                0 => out.push_str(&format!("{v}")),
                1 => out.push_str(&format!("{v}*x")),
                _ => out.push_str(&format!("{v}*x^{i}")),
            }
        }
        out
    }

    /// Parses the output of [`Poly::to_text`].
    pub fn from_text(field: &Field, text: &str) -> Option<Poly> {
        let text = text.trim();
        if text == "0" {
            return Some(Poly::zero(field));
        }
        let mut coeffs = Vec::new();
        for (i, term) in text.split('+').enumerate() {
            let term = term.trim();
            let (c, power) = match term.split_once("*x") {
                None => (term, 0),
                Some((c, "")) => (c, 1),
                Some((c, rest)) => (c, rest.strip_prefix('^')?.parse().ok()?),
            };
            if power != i {
                return None;
            }
            let v: u64 = c.trim().parse().ok()?;
            if field.order_u64().is_some_and(|q| v >= q) {
                return None;
            }
            coeffs.push(field.from_index(v));
        }
        Some(Poly::new(field, coeffs))
    }

    /// Coefficient string used to order factors canonically.
    pub(crate) fn sort_key(&self) -> Vec<u64> {
        self.coeffs
            .iter()
            .map(|c| self.field.to_index(c).unwrap_or(u64::MAX))
            .collect()
    }
}
