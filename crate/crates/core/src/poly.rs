//! Dense univariate polynomials over F_{2^m}.

use num_bigint::BigUint;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, FieldElem};

/// A polynomial with coefficients indexed by degree.
///
/// Always normalized: the last coefficient is nonzero, and the zero
/// polynomial has no coefficients (its degree is `None`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree first, then coefficients from the constant term up.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::ONE)
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(FieldElem::ONE, 1)
    }

    pub fn monomial(c: FieldElem, deg: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from integer coefficient patterns, lowest degree first.
    pub fn from_ints(coeffs: &[u16]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| FieldElem(c)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElem::ONE
    }

    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElem::ONE
    }

    /// A uniformly random polynomial of degree < `bound`.
    pub fn random<R: Rng + ?Sized>(field: &FieldCtx, bound: usize, rng: &mut R) -> Self {
        Self::from_coeffs((0..bound).map(|_| field.random(rng)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            c.0 ^= s.0;
        }
        Self::from_coeffs(coeffs)
    }

    /// Subtraction coincides with addition in characteristic 2.
    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(other)
    }

    pub fn scale(&self, c: FieldElem, field: &FieldCtx) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElem::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn mul(&self, other: &Poly, field: &FieldCtx) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.len() + other.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j].0 ^= field.mul(a, b).0;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn square(&self, field: &FieldCtx) -> Poly {
        // (sum a_i x^i)^2 = sum a_i^2 x^{2i} in characteristic 2
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElem::ZERO; 2 * self.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[2 * i] = field.square(a);
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, mut e: usize, field: &FieldCtx) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            e >>= 1;
            if e > 0 {
                base = base.square(field);
            }
        }
        acc
    }

    /// Euclidean division: returns (q, r) with q·d + r = self and deg r < deg d.
    pub fn divmod(&self, d: &Poly, field: &FieldCtx) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.len() < d.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let dl = d.len();
        let inv_lead = field.inv(d.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElem::ZERO; self.len() - dl + 1];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dl - 1];
            if c.is_zero() {
                continue;
            }
            let factor = field.mul(c, inv_lead);
            quot[i] = factor;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j].0 ^= field.mul(factor, dc).0;
            }
        }
        rem.truncate(dl - 1);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, d: &Poly, field: &FieldCtx) -> Result<Poly> {
        Ok(self.divmod(d, field)?.1)
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly, field: &FieldCtx) -> Result<Poly> {
        let (q, r) = self.divmod(d, field)?;
        if !r.is_zero() {
            return Err(Error::Verification("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn mulmod(&self, other: &Poly, modulus: &Poly, field: &FieldCtx) -> Result<Poly> {
        self.mul(other, field).rem(modulus, field)
    }

    pub fn eval(&self, x: FieldElem, field: &FieldCtx) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn monic(&self, field: &FieldCtx) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        Ok(self.scale(field.inv(self.lead())?, field))
    }

    /// Monic greatest common divisor; gcd(0, 0) is an error.
    pub fn gcd(a: &Poly, b: &Poly, field: &FieldCtx) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidParams("gcd(0, 0) is undefined".into()));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = r0.rem(&r1, field)?;
            r0 = r1;
            r1 = r;
        }
        r0.monic(field)
    }

    /// Extended Euclid: returns (g, s, t) with g monic and s·a + t·b = g.
    pub fn xgcd(a: &Poly, b: &Poly, field: &FieldCtx) -> Result<(Poly, Poly, Poly)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidParams("gcd(0, 0) is undefined".into()));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1, field)?;
            let s = s0.sub(&q.mul(&s1, field));
            let t = t0.sub(&q.mul(&t1, field));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = field.inv(r0.lead())?;
        Ok((r0.scale(inv, field), s0.scale(inv, field), t0.scale(inv, field)))
    }

    /// base^e mod modulus by square-and-multiply.
    pub fn powmod(base: &Poly, e: &BigUint, modulus: &Poly, field: &FieldCtx) -> Result<Poly> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidParams(
                "powmod needs a nonconstant modulus".into(),
            ));
        }
        let mut acc = Poly::one();
        let b = base.rem(modulus, field)?;
        for i in (0..e.bits()).rev() {
            acc = acc.square(field).rem(modulus, field)?;
            if e.bit(i) {
                acc = acc.mulmod(&b, modulus, field)?;
            }
        }
        Ok(acc)
    }

    /// base^(2^times) mod modulus, i.e. `times` repeated squarings.
    pub fn square_times_mod(
        base: &Poly,
        times: usize,
        modulus: &Poly,
        field: &FieldCtx,
    ) -> Result<Poly> {
        let mut acc = base.rem(modulus, field)?;
        for _ in 0..times {
            acc = acc.square(field).rem(modulus, field)?;
        }
        Ok(acc)
    }
}
