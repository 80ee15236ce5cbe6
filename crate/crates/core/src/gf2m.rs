//! Arithmetic in the binary field F_{2^m}, 1 <= m <= 16.
//!
//! Elements are bit vectors in the polynomial basis {1, y, ..., y^{m-1}} of
//! F_2[y]/(p(y)). For m <= 12 multiplication and inversion go through
//! log/antilog tables; above that they fall back to carry-less
//! multiplication with reduction. Both paths compute the same values.

use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

const TABLE_MAX_DEGREE: u32 = 12;

/// Built-in reduction polynomials, indexed by m. Every entry is primitive
/// over F_2, so the class of `y` generates the multiplicative group.
///
/// | m  | polynomial                       |
/// |----|----------------------------------|
/// | 1  | y + 1                            |
/// | 2  | y^2 + y + 1                      |
/// | 3  | y^3 + y + 1                      |
/// | 4  | y^4 + y + 1                      |
/// | 5  | y^5 + y^2 + 1                    |
/// | 6  | y^6 + y + 1                      |
/// | 7  | y^7 + y^3 + 1                    |
/// | 8  | y^8 + y^4 + y^3 + y^2 + 1        |
/// | 9  | y^9 + y^4 + 1                    |
/// | 10 | y^10 + y^3 + 1                   |
/// | 11 | y^11 + y^2 + 1                   |
/// | 12 | y^12 + y^6 + y^4 + y + 1         |
/// | 13 | y^13 + y^4 + y^3 + y + 1         |
/// | 14 | y^14 + y^10 + y^6 + y + 1        |
/// | 15 | y^15 + y + 1                     |
/// | 16 | y^16 + y^12 + y^3 + y + 1        |
pub const DEFAULT_REDUCTION: [u32; 17] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B,
    0x4443, 0x8003, 0x1100B,
];

/// An element of F_{2^m}, stored as its coordinate bit vector.
///
/// Serializes as the unsigned integer whose bit i is the coefficient of y^i.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElem(pub u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0 as u32
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone)]
struct Tables {
    /// exp[i] = g^i for 0 <= i < 2(q-1), doubled to skip a modular reduction.
    exp: Vec<u16>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
}

/// The field F_{2^m} together with its reduction polynomial.
///
/// Immutable after construction and cheap to share behind an `Arc`.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    m: u32,
    reduction: u32,
    tables: Option<Tables>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.reduction == other.reduction
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds F_{2^m}, using the built-in reduction polynomial unless one is given.
    pub fn new(m: u32, reduction: Option<u32>) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::InvalidParams(format!(
                "field degree m must lie in 1..={MAX_DEGREE}, got {m}"
            )));
        }
        let reduction = reduction.unwrap_or(DEFAULT_REDUCTION[m as usize]);
        if bit_degree(reduction) != Some(m) || !is_irreducible_gf2(reduction) {
            return Err(Error::NotIrreducible(reduction));
        }
        let mut ctx = FieldCtx {
            m,
            reduction,
            tables: None,
        };
        if m <= TABLE_MAX_DEGREE {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn reduction(&self) -> u32 {
        self.reduction
    }

    /// Number of field elements, 2^m.
    #[inline]
    pub fn order(&self) -> u32 {
        1u32 << self.m
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Converts an integer bit pattern into an element, rejecting patterns wider than m bits.
    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if bits >= self.order() {
            return Err(Error::InvalidParams(format!(
                "{bits} is not an element of F_2^{}",
                self.m
            )));
        }
        Ok(FieldElem(bits as u16))
    }

    /// The class of y.
    pub fn generator(&self) -> FieldElem {
        if self.m == 1 {
            FieldElem::ONE
        } else {
            FieldElem(2)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order()).map(|v| FieldElem(v as u16))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(0..self.order()) as u16)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(1..self.order()) as u16)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let idx = t.log[a.0 as usize] + t.log[b.0 as usize];
                FieldElem(t.exp[idx as usize])
            }
            None => FieldElem(self.mul_slow(a.bits(), b.bits()) as u16),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Some(t) => {
                let q1 = self.order() - 1;
                let l = t.log[a.0 as usize];
                FieldElem(t.exp[((q1 - l) % q1) as usize])
            }
            None => self.pow(a, (self.order() - 2) as u64),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; 0^0 = 1.
    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    /// The unique square root, a^{2^{m-1}}.
    pub fn sqrt(&self, a: FieldElem) -> FieldElem {
        let mut r = a;
        for _ in 1..self.m {
            r = self.square(r);
        }
        r
    }

    /// The unique delta0 with delta0^{2^k} = delta.
    ///
    /// Uses delta0 = delta^tau with tau = 2^{(-k) mod m}, the inverse of 2^k
    /// modulo 2^m - 1.
    pub fn root_2k(&self, delta: FieldElem, k: u32) -> Result<FieldElem> {
        if delta.is_zero() {
            return Err(Error::InvalidParams(
                "cannot take a 2^k-th root of zero".into(),
            ));
        }
        let q1 = (self.order() - 1) as u64;
        let shift = (self.m - k % self.m) % self.m;
        let tau = (1u64 << shift) % q1.max(1);
        let root = self.pow(delta, tau);
        let mut check = root;
        for _ in 0..k {
            check = self.square(check);
        }
        if check != delta {
            return Err(Error::Verification(format!(
                "root_2k({delta}, {k}) = {root} fails delta0^(2^k) = delta"
            )));
        }
        Ok(root)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let prod = clmul(a as u64, b as u64);
        reduce_gf2(prod, self.reduction as u64) as u32
    }

    fn build_tables(&self) -> Tables {
        let q = self.order();
        let q1 = q - 1;
        let g = self.find_primitive();
        let mut exp = vec![0u16; (2 * q1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q1 {
            exp[i as usize] = x as u16;
            log[x as usize] = i;
            x = self.mul_slow(x, g);
        }
        for i in q1..2 * q1 {
            exp[i as usize] = exp[(i - q1) as usize];
        }
        Tables { exp, log }
    }

    fn find_primitive(&self) -> u32 {
        let q1 = (self.order() - 1) as u64;
        let primes = prime_divisors(q1);
        (1..self.order())
            .find(|&g| {
                primes
                    .iter()
                    .all(|&p| self.pow_slow(g, q1 / p) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn bit_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

#[inline]
fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

fn reduce_gf2(mut a: u64, p: u64) -> u64 {
    let dp = 63 - p.leading_zeros();
    while a != 0 {
        let da = 63 - a.leading_zeros();
        if da < dp {
            break;
        }
        a ^= p << (da - dp);
    }
    a
}

fn gcd_gf2(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = reduce_gf2(a, b);
        a = b;
        b = r;
    }
    a
}

/// Rabin-style test over F_2: gcd(y^{2^i} - y, p) = 1 for 1 <= i <= deg/2.
fn is_irreducible_gf2(p: u32) -> bool {
    let p = p as u64;
    let deg = 63 - p.leading_zeros();
    if deg == 0 {
        return false;
    }
    let mut power = 2u64; // y
    for _ in 1..=deg / 2 {
        power = reduce_gf2(clmul(power, power), p);
        if gcd_gf2(p, power ^ 2) != 1 {
            return false;
        }
    }
    true
}
