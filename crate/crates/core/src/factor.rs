//! Factorization of x^n + δ0 (n odd) over F_{2^m} and the CRT idempotents of
//! A = F_{2^m}[x]/⟨(x^n + δ0)^{2^k λ}⟩.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2m::{prime_divisors, FieldCtx, FieldElem};
use crate::params::Params;
use crate::poly::Poly;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// A monic irreducible factor and its degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub poly: Poly,
    pub degree: usize,
}

/// Factors x^n + δ0 into distinct monic irreducibles, sorted by degree and
/// then by coefficients (constant term first).
pub fn factor_xn_delta(
    field: &FieldCtx,
    n: usize,
    delta0: FieldElem,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Factor>> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("n must be odd, got {n}")));
    }
    if delta0.is_zero() {
        return Err(Error::InvalidParams("delta0 must be nonzero".into()));
    }
    let mut coeffs = vec![FieldElem::ZERO; n + 1];
    coeffs[0] = delta0;
    coeffs[n] = FieldElem::ONE;
    let target = Poly::from_coeffs(coeffs);

    let mut factors = Vec::new();
    for (d, block) in distinct_degree(&target, field)? {
        equal_degree(&block, d, field, rng, &mut factors)?;
    }
    factors.sort();

    let product = factors
        .iter()
        .fold(Poly::one(), |acc, f| acc.mul(f, field));
    if product != target {
        return Err(Error::Verification(
            "product of factors differs from x^n + delta0".into(),
        ));
    }
    for f in &factors {
        if !is_irreducible(f, field)? {
            return Err(Error::Verification(format!("factor {f:?} is reducible")));
        }
    }
    Ok(factors
        .into_iter()
        .map(|poly| Factor {
            degree: poly.degree().unwrap_or(0),
            poly,
        })
        .collect())
}

/// Splits a squarefree monic polynomial into (d, product of its degree-d factors).
fn distinct_degree(f: &Poly, field: &FieldCtx) -> Result<Vec<(usize, Poly)>> {
    let m = field.degree() as usize;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut frob = Poly::x();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        frob = Poly::square_times_mod(&frob, m, &rest, field)?;
        let g = Poly::gcd(&frob.sub(&Poly::x()), &rest, field)?;
        if !g.is_one() {
            rest = rest.div_exact(&g, field)?;
            frob = frob.rem(&rest, field)?;
            out.push((d, g));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((deg, rest.monic(field)?));
    }
    Ok(out)
}

/// Equal-degree splitting with the absolute trace map, which works in
/// characteristic 2 where the (q^d - 1)/2 exponent does not exist.
fn equal_degree(
    block: &Poly,
    d: usize,
    field: &FieldCtx,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly>,
) -> Result<()> {
    let deg = block.degree().unwrap_or(0);
    if deg == d {
        out.push(block.monic(field)?);
        return Ok(());
    }
    let trace_len = field.degree() as usize * d;
    loop {
        let a = Poly::random(field, deg, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut term = a.clone();
        let mut trace = a;
        for _ in 1..trace_len {
            term = term.square(field).rem(block, field)?;
            trace = trace.add(&term);
        }
        if trace.is_zero() {
            continue;
        }
        let g = Poly::gcd(&trace, block, field)?;
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let other = block.div_exact(&g, field)?;
            equal_degree(&g, d, field, rng, out)?;
            equal_degree(&other, d, field, rng, out)?;
            return Ok(());
        }
    }
}

/// Rabin's test: x^{q^d} = x mod f, and gcd(x^{q^{d/p}} - x, f) = 1 for
/// every prime p dividing d = deg f.
pub fn is_irreducible(f: &Poly, field: &FieldCtx) -> Result<bool> {
    let d = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(d) => d,
    };
    let m = field.degree() as usize;
    let x = Poly::x();
    for p in prime_divisors(d as u64) {
        let h = Poly::square_times_mod(&x, m * d / p as usize, f, field)?;
        if !Poly::gcd(&h.sub(&x), f, field)?.is_one() {
            return Ok(false);
        }
    }
    Ok(Poly::square_times_mod(&x, m * d, f, field)? == x.rem(f, field)?)
}

/// One irreducible factor f_j with its cofactor, Bezout pair and idempotent.
#[derive(Debug, Clone, Serialize)]
pub struct FactorEntry {
    pub index: usize,
    pub f: Poly,
    pub degree: usize,
    /// F_j = (x^n + δ0)/f_j.
    pub cofactor: Poly,
    /// g_j with g_j·F_j^{2^kλ} + h_j·f_j^{2^kλ} = 1.
    pub bezout_g: Poly,
    pub bezout_h: Poly,
    /// ε_j = g_j·F_j^{2^kλ} mod (x^n + δ0)^{2^kλ}.
    pub idempotent: Poly,
}

/// The CRT data of A, verified at construction.
#[derive(Debug, Clone)]
pub struct FactorData {
    params: Params,
    modulus: Poly,
    entries: Vec<FactorEntry>,
}

impl FactorData {
    pub fn build(params: &Params) -> Result<Self> {
        Self::build_seeded(params, DEFAULT_SEED)
    }

    pub fn build_seeded(params: &Params, seed: u64) -> Result<Self> {
        let field = params.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let factors = factor_xn_delta(field, params.n(), params.delta0(), &mut rng)?;
        let e = params.nilpotency();
        let base = params.base_poly();
        let modulus = base.pow(e, field);

        let mut entries = Vec::with_capacity(factors.len());
        for (index, Factor { poly: f, degree }) in factors.into_iter().enumerate() {
            let cofactor = base.div_exact(&f, field)?;
            let big_f = cofactor.pow(e, field);
            let small_f = f.pow(e, field);
            let (g, bezout_g, bezout_h) = Poly::xgcd(&big_f, &small_f, field)?;
            if !g.is_one() {
                return Err(Error::Verification(format!(
                    "cofactor of factor {index} is not coprime to it"
                )));
            }
            let idempotent = bezout_g.mul(&big_f, field).rem(&modulus, field)?;
            let other = Poly::one()
                .sub(&bezout_h.mul(&small_f, field))
                .rem(&modulus, field)?;
            if idempotent != other {
                return Err(Error::Verification(format!(
                    "Bezout identity fails for factor {index}"
                )));
            }
            entries.push(FactorEntry {
                index,
                f,
                degree,
                cofactor,
                bezout_g,
                bezout_h,
                idempotent,
            });
        }
        let data = FactorData {
            params: params.clone(),
            modulus,
            entries,
        };
        data.verify()?;
        Ok(data)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// (x^n + δ0)^{2^kλ}.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn entries(&self) -> &[FactorEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.degree).collect()
    }

    /// Checks reassembly, pairwise coprimality and the idempotent laws
    /// Σε_j = 1, ε_j^2 = ε_j, ε_jε_l = 0 (j != l), ε_j·f_j^{2^kλ} = 0.
    pub fn verify(&self) -> Result<()> {
        let field = self.params.field();
        let e = self.params.nilpotency();
        let m = &self.modulus;
        let fail = |msg: String| Err(Error::Verification(msg));

        let product = self
            .entries
            .iter()
            .fold(Poly::one(), |acc, entry| acc.mul(&entry.f.pow(e, field), field));
        if &product != m {
            return fail("product of f_j^e differs from (x^n + delta0)^e".into());
        }
        let mut sum = Poly::zero();
        for (j, a) in self.entries.iter().enumerate() {
            sum = sum.add(&a.idempotent);
            if a.idempotent.mulmod(&a.idempotent, m, field)? != a.idempotent {
                return fail(format!("epsilon_{j} is not idempotent"));
            }
            if !a.idempotent.mulmod(&a.f.pow(e, field), m, field)?.is_zero() {
                return fail(format!("epsilon_{j} * f_{j}^e is nonzero"));
            }
            for (l, b) in self.entries.iter().enumerate().skip(j + 1) {
                if !Poly::gcd(&a.f, &b.f, field)?.is_one() {
                    return fail(format!("f_{j} and f_{l} share a factor"));
                }
                if !a.idempotent.mulmod(&b.idempotent, m, field)?.is_zero() {
                    return fail(format!("epsilon_{j} * epsilon_{l} is nonzero"));
                }
            }
        }
        if !sum.rem(m, field)?.is_one() {
            return fail("idempotents do not sum to 1".into());
        }
        Ok(())
    }
}

/// q^d as a big integer, where q = 2^m.
pub(crate) fn residue_field_order(m: u32, d: usize) -> BigUint {
    BigUint::from(1u32) << (m as usize * d)
}
