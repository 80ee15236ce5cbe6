//! Self-dual (1 + αu^2)-constacyclic codes of length 4 over F_{2^m}[u]/⟨u^4⟩.
//!
//! Writing y = x + 1, they are
//!
//! 1. ⟨u^2⟩
//! 2. ⟨u^2 b0 + u y^3, u^2 y⟩ for b0 in F_{2^m}
//! 3. ⟨u^2 (b1 + b2 y) + u y^2, u^2 y^2⟩ for b1, b2 in F_{2^m}
//! 4. ⟨α0 y^3 + u^2 (α0^2 + b3 y + b4 y^2) + u y, u^2 y^3⟩ for b3, b4 in F_{2^m}
//!
//! where α0^2 = α^{-1}, so there are 1 + 2^m + 2·4^m of them.

use num_bigint::BigUint;
use serde::Serialize;

use crate::ambient::AmbientRing;
use crate::chain::ExtElem;
use crate::enumerate::{size_exponent, CodeDescriptor, Enumeration};
use crate::error::{Error, Result};
use crate::f2::F2Subspace;
use crate::gf2m::FieldElem;
use crate::par::Exec;
use crate::poly::Poly;

/// Σ u^j p_j(x), as (j, p_j) pairs.
pub type UPoly = Vec<(usize, Poly)>;

#[derive(Clone, Debug, Serialize)]
pub struct SelfDualCode {
    /// 1 to 4, as in the module docs.
    pub case: u8,
    /// b0; b1, b2; or b3, b4.
    pub coefficients: Vec<FieldElem>,
    pub generators: Vec<UPoly>,
    pub code: CodeDescriptor,
}

/// Most descriptors the listing will index; reached at m = 5.
const INDEX_CAP: u64 = 1 << 20;

/// 1 + 2^m + 2·4^m.
pub fn self_dual_count(m: u32) -> BigUint {
    let q = BigUint::from(1u32) << m as usize;
    BigUint::from(1u32) + &q + BigUint::from(2u32) * &q * &q
}

fn check_case(en: &Enumeration) -> Result<()> {
    let p = en.params();
    if p.lambda() != 2 || p.k() != 2 || p.n() != 1 || p.delta() != FieldElem::ONE {
        return Err(Error::InvalidParams(
            "the self-dual list covers lambda = 2, k = 2, n = 1, delta = 1 only".into(),
        ));
    }
    Ok(())
}

/// The generators of every self-dual code, before identification.
fn families(en: &Enumeration) -> Vec<(u8, Vec<FieldElem>, Vec<UPoly>)> {
    let p = en.params();
    let field = p.field();
    let y = Poly::from_ints(&[1, 1]);
    let y2 = y.pow(2, field);
    let y3 = y.pow(3, field);
    let a0 = p.alpha0();
    let elems: Vec<FieldElem> = field.elements().collect();
    let mut out = vec![(1u8, vec![], vec![vec![(2, Poly::one())]])];
    for &b0 in &elems {
        out.push((
            2,
            vec![b0],
            vec![
                vec![(2, Poly::constant(b0)), (1, y3.clone())],
                vec![(2, y.clone())],
            ],
        ));
    }
    for &b1 in &elems {
        for &b2 in &elems {
            let h = Poly::constant(b1).add(&y.scale(b2, field));
            out.push((
                3,
                vec![b1, b2],
                vec![vec![(2, h), (1, y2.clone())], vec![(2, y2.clone())]],
            ));
        }
    }
    for &b3 in &elems {
        for &b4 in &elems {
            let h = Poly::constant(field.mul(a0, a0))
                .add(&y.scale(b3, field))
                .add(&y2.scale(b4, field));
            out.push((
                4,
                vec![b3, b4],
                vec![
                    vec![(0, y3.scale(a0, field)), (2, h), (1, y.clone())],
                    vec![(2, y3.clone())],
                ],
            ));
        }
    }
    out
}

/// Lists the self-dual codes, each identified with its enumeration descriptor.
pub fn list_self_dual_length4(en: &Enumeration, exec: Exec) -> Result<Vec<SelfDualCode>> {
    check_case(en)?;
    let ring = AmbientRing::new(en.params());
    let ctx = &en.chains[0];
    // a self-dual code has |C|^2 = |R|^4, so only blocks of size exponent e matter
    let e = ctx.nilpotency();
    let index = en.catalogs[0].form_index(ctx, exec, INDEX_CAP, |b| {
        size_exponent(b.family, b.s, b.t, e) == e
    })?;
    let mut out = Vec::new();
    for (case, coefficients, generators) in families(en) {
        let mut exts = Vec::with_capacity(generators.len());
        for g in &generators {
            let a = ring.psi_inverse(&ring.rpoly_from_u_parts(g)?);
            exts.push(ExtElem::new(ctx.reduce(&a.xi0)?, ctx.reduce(&a.xi1)?));
        }
        let desc = index.get(&ctx.ideal_form(&exts)).ok_or_else(|| {
            Error::Verification(format!("case {case} code {coefficients:?} is not enumerated"))
        })?;
        out.push(SelfDualCode {
            case,
            coefficients,
            generators,
            code: CodeDescriptor {
                components: vec![desc.clone()],
            },
        });
    }
    Ok(out)
}

/// Checks each listed code against the ambient ring: its generators in
/// R[x] and its descriptor span the same code, and that code equals its dual.
pub fn verify_self_dual(en: &Enumeration, list: &[SelfDualCode], exec: Exec) -> Result<()> {
    let ring = AmbientRing::new(en.params());
    let ops = ring.operators();
    let checks = exec.map(list, |c| -> Result<F2Subspace> {
        let gens = c
            .generators
            .iter()
            .map(|g| ring.rpoly_from_u_parts(g))
            .collect::<Result<Vec<_>>>()?;
        let direct = ring.ideal_space(&gens, &ops)?;
        if direct != ring.code_space(en, &c.code, &ops)? {
            return Err(Error::Verification(format!(
                "case {} {:?}: generators and descriptor differ",
                c.case, c.coefficients
            )));
        }
        if ring.dual_space(&direct)? != direct {
            return Err(Error::Verification(format!(
                "case {} {:?} is not self-dual",
                c.case, c.coefficients
            )));
        }
        Ok(direct)
    });
    let spaces = checks.into_iter().collect::<Result<Vec<_>>>()?;
    let distinct: std::collections::BTreeSet<&F2Subspace> = spaces.iter().collect();
    if distinct.len() != spaces.len() {
        return Err(Error::Verification("the list contains a repeated code".into()));
    }
    Ok(())
}

/// Every enumerated code with C = C^⊥, found by computing all duals.
pub fn scan_self_dual(en: &Enumeration, exec: Exec) -> Result<Vec<CodeDescriptor>> {
    let ring = AmbientRing::new(en.params());
    let ops = ring.operators();
    let codes: Vec<CodeDescriptor> = en.stream().collect();
    let flags = exec.map(&codes, |c| -> Result<bool> {
        let space = ring.code_space(en, c, &ops)?;
        Ok(ring.dual_space(&space)? == space)
    });
    let mut out = Vec::new();
    for (c, flag) in codes.into_iter().zip(flags) {
        if flag? {
            out.push(c);
        }
    }
    Ok(out)
}
