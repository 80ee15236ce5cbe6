//! The ambient rings of the codes: A + uA with A = F_{2^m}[x]/⟨(x^n + δ0)^{2^k λ}⟩,
//! and R[x]/⟨x^N - γ⟩ with R = F_{2^m}[u]/⟨u^{2λ}⟩, γ = δ + αu^2, N = 2^k n.
//! Also the isomorphism Ψ between them, codeword materialization, duals,
//! and the brute-force ideal oracle on the F_2-linear representation.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use serde::Serialize;

use crate::enumerate::{CodeDescriptor, Enumeration};
use crate::error::{Error, Result};
use crate::f2::{invariant_subspaces, F2Subspace, InvariantLattice, LinearOp, MAX_DIM};
use crate::gf2m::{FieldCtx, FieldElem};
use crate::par::Exec;
use crate::params::Params;
use crate::poly::Poly;

pub const DEFAULT_MAX_CODEWORDS: u64 = 1 << 24;
pub const DEFAULT_ORACLE_MAX_DIM: usize = 16;

/// ξ0 + uξ1 in A + uA.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct AmbientElem {
    pub xi0: Poly,
    pub xi1: Poly,
}

/// An element Σ_i c_i x^i of R[x]/⟨x^N - γ⟩; c_i holds the 2λ u-adic digits
/// of the i-th coordinate. Read as a vector, it is a word of R^N.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RPoly {
    digits: usize,
    coeffs: Vec<FieldElem>,
}

impl RPoly {
    pub fn zero(len: usize, digits: usize) -> Self {
        RPoly {
            digits,
            coeffs: vec![FieldElem::ZERO; len * digits],
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len() / self.digits
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The u^j digit of coordinate i.
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.coeffs[i * self.digits + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.coeffs[i * self.digits + j] = v;
    }

    /// Coordinate i as its u-adic digits.
    pub fn coordinate(&self, i: usize) -> &[FieldElem] {
        &self.coeffs[i * self.digits..(i + 1) * self.digits]
    }

    pub fn coordinates(&self) -> impl Iterator<Item = &[FieldElem]> {
        self.coeffs.chunks(self.digits)
    }
}

/// Both ambient rings for one parameter set.
#[derive(Debug, Clone)]
pub struct AmbientRing {
    params: Params,
    /// (x^n + δ0)^{2^k λ}.
    modulus: Poly,
    /// u^2 in A + uA: α^{-1}(x^n + δ0)^{2^k} = α^{-1}(x^N + δ).
    u_square: Poly,
    /// γ^l in R for l < λ.
    gamma_pows: Vec<Vec<FieldElem>>,
}

impl AmbientRing {
    pub fn new(params: &Params) -> Self {
        let field = params.field();
        let len = params.length();
        let digits = params.u_digits();
        let modulus = params.base_poly().pow(params.nilpotency(), field);
        let mut xn = vec![FieldElem::ZERO; len + 1];
        xn[0] = params.delta();
        xn[len] = FieldElem::ONE;
        let u_square = Poly::from_coeffs(xn).scale(params.alpha_inv(), field);
        let mut gamma = vec![FieldElem::ZERO; digits];
        gamma[0] = params.delta();
        gamma[2] = params.alpha();
        let mut gamma_pows = vec![{
            let mut one = vec![FieldElem::ZERO; digits];
            one[0] = FieldElem::ONE;
            one
        }];
        for l in 1..params.lambda() {
            gamma_pows.push(r_mul(field, &gamma_pows[l - 1], &gamma));
        }
        AmbientRing {
            params: params.clone(),
            modulus,
            u_square,
            gamma_pows,
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    fn field(&self) -> &FieldCtx {
        self.params.field()
    }

    pub fn length(&self) -> usize {
        self.params.length()
    }

    pub fn digits(&self) -> usize {
        self.params.u_digits()
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// u^2 expressed in A + uA.
    pub fn u_square(&self) -> &Poly {
        &self.u_square
    }

    /// γ = δ + αu^2 as an element of R.
    pub fn gamma(&self) -> Vec<FieldElem> {
        let mut g = vec![FieldElem::ZERO; self.digits()];
        g[0] = self.params.delta();
        g[2] = self.params.alpha();
        g
    }

    /// Dimension of R[x]/⟨x^N - γ⟩ over F_2.
    pub fn bit_dim(&self) -> usize {
        self.params.m() as usize * self.digits() * self.length()
    }

    // A + uA

    pub fn elem(&self, xi0: &Poly, xi1: &Poly) -> AmbientElem {
        let f = self.field();
        AmbientElem {
            xi0: xi0.rem(&self.modulus, f).expect("modulus is nonzero"),
            xi1: xi1.rem(&self.modulus, f).expect("modulus is nonzero"),
        }
    }

    pub fn add(&self, a: &AmbientElem, b: &AmbientElem) -> AmbientElem {
        AmbientElem {
            xi0: a.xi0.add(&b.xi0),
            xi1: a.xi1.add(&b.xi1),
        }
    }

    pub fn mul(&self, a: &AmbientElem, b: &AmbientElem) -> AmbientElem {
        let f = self.field();
        let m = &self.modulus;
        let hi = a.xi1.mulmod(&b.xi1, m, f).expect("modulus is nonzero");
        let xi0 = a
            .xi0
            .mulmod(&b.xi0, m, f)
            .expect("modulus is nonzero")
            .add(&hi.mulmod(&self.u_square, m, f).expect("modulus is nonzero"));
        let xi1 = a
            .xi0
            .mulmod(&b.xi1, m, f)
            .expect("modulus is nonzero")
            .add(&a.xi1.mulmod(&b.xi0, m, f).expect("modulus is nonzero"));
        AmbientElem { xi0, xi1 }
    }

    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> AmbientElem {
        let bound = self.modulus.len() - 1;
        let f = self.field();
        AmbientElem {
            xi0: Poly::random(f, bound, rng),
            xi1: Poly::random(f, bound, rng),
        }
    }

    // R[x]/⟨x^N - γ⟩

    pub fn rzero(&self) -> RPoly {
        RPoly::zero(self.length(), self.digits())
    }

    pub fn rone(&self) -> RPoly {
        let mut r = self.rzero();
        r.set(0, 0, FieldElem::ONE);
        r
    }

    /// Σ_j u^j p_j(x) for polynomials p_j of degree < N.
    pub fn rpoly_from_u_parts(&self, parts: &[(usize, Poly)]) -> Result<RPoly> {
        let mut r = self.rzero();
        for (j, p) in parts {
            if *j >= self.digits() || p.len() > self.length() {
                return Err(Error::InvalidParams(format!(
                    "term u^{j} with degree {:?} does not fit",
                    p.degree()
                )));
            }
            for (i, &c) in p.coeffs().iter().enumerate() {
                let v = self.field().add(r.get(i, *j), c);
                r.set(i, *j, v);
            }
        }
        Ok(r)
    }

    pub fn random_rpoly<R: Rng + ?Sized>(&self, rng: &mut R) -> RPoly {
        let mut r = self.rzero();
        for c in r.coeffs.iter_mut() {
            *c = self.field().random(rng);
        }
        r
    }

    pub fn radd(&self, a: &RPoly, b: &RPoly) -> RPoly {
        RPoly {
            digits: a.digits,
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.field().add(x, y))
                .collect(),
        }
    }

    pub fn rmul(&self, a: &RPoly, b: &RPoly) -> RPoly {
        let len = self.length();
        let f = self.field();
        let gamma = self.gamma();
        let mut out = self.rzero();
        for i in 0..len {
            let ai = a.coordinate(i);
            if ai.iter().all(|c| c.is_zero()) {
                continue;
            }
            for l in 0..len {
                let mut prod = r_mul(f, ai, b.coordinate(l));
                let mut idx = i + l;
                if idx >= len {
                    idx -= len;
                    prod = r_mul(f, &prod, &gamma);
                }
                for (j, v) in prod.into_iter().enumerate() {
                    let cur = out.get(idx, j);
                    out.set(idx, j, f.add(cur, v));
                }
            }
        }
        out
    }

    /// x·a: (c_0, ..., c_{N-1}) ↦ (γ c_{N-1}, c_0, ..., c_{N-2}).
    pub fn shift_x(&self, a: &RPoly) -> RPoly {
        let len = self.length();
        let mut out = self.rzero();
        let wrapped = r_mul(self.field(), a.coordinate(len - 1), &self.gamma());
        for (j, v) in wrapped.into_iter().enumerate() {
            out.set(0, j, v);
        }
        for i in 1..len {
            for j in 0..self.digits() {
                out.set(i, j, a.get(i - 1, j));
            }
        }
        out
    }

    pub fn mul_u(&self, a: &RPoly) -> RPoly {
        let mut out = self.rzero();
        for i in 0..self.length() {
            for j in 1..self.digits() {
                out.set(i, j, a.get(i, j - 1));
            }
        }
        out
    }

    pub fn rscale(&self, a: &RPoly, c: FieldElem) -> RPoly {
        RPoly {
            digits: a.digits,
            coeffs: a.coeffs.iter().map(|&x| self.field().mul(x, c)).collect(),
        }
    }

    /// Σ_i a_i b_i in R.
    pub fn inner(&self, a: &RPoly, b: &RPoly) -> Vec<FieldElem> {
        let f = self.field();
        let mut acc = vec![FieldElem::ZERO; self.digits()];
        for (x, y) in a.coordinates().zip(b.coordinates()) {
            for (j, v) in r_mul(f, x, y).into_iter().enumerate() {
                acc[j] = f.add(acc[j], v);
            }
        }
        acc
    }

    // Ψ

    /// Ψ: A + uA → R[x]/⟨x^N - γ⟩, x^{i + lN} ↦ x^i γ^l, u ↦ u.
    pub fn psi_lift(&self, a: &AmbientElem) -> RPoly {
        let f = self.field();
        let len = self.length();
        let mut out = self.rzero();
        for (shift, xi) in [(0usize, &a.xi0), (1, &a.xi1)] {
            for (t, &c) in xi.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, l) = (t % len, t / len);
                for (j, &g) in self.gamma_pows[l].iter().enumerate() {
                    if j + shift < self.digits() {
                        let cur = out.get(i, j + shift);
                        out.set(i, j + shift, f.add(cur, f.mul(c, g)));
                    }
                }
            }
        }
        out
    }

    /// Ψ^{-1}: x ↦ x, u ↦ u with u^2 = α^{-1}(x^N + δ) in A + uA.
    pub fn psi_inverse(&self, c: &RPoly) -> AmbientElem {
        let f = self.field();
        // u^{2t} = (u^2)^t has degree tN, and i + tN < λN = deg of the modulus
        let mut u2_pows = vec![Poly::one()];
        for t in 1..self.params.lambda() {
            u2_pows.push(u2_pows[t - 1].mul(&self.u_square, f));
        }
        let mut parts = [Poly::zero(), Poly::zero()];
        for (t, u2t) in u2_pows.iter().enumerate() {
            for (half, part) in parts.iter_mut().enumerate() {
                let j = 2 * t + half;
                let coeffs: Vec<FieldElem> = (0..self.length()).map(|i| c.get(i, j)).collect();
                let p = Poly::from_coeffs(coeffs);
                *part = part.add(&p.mul(u2t, f));
            }
        }
        let [xi0, xi1] = parts;
        AmbientElem { xi0, xi1 }
    }

    // F_2-linear view

    fn check_bits(&self, cap: usize) -> Result<()> {
        let d = self.bit_dim();
        if d > cap.min(MAX_DIM) {
            return Err(Error::CapExceeded {
                what: "ambient F_2 dimension",
                needed: d.to_string(),
                cap: cap.min(MAX_DIM).to_string(),
            });
        }
        Ok(())
    }

    /// Bit ((i·2λ + j)·m + b) is bit b of the u^j digit of coordinate i.
    pub fn to_bits(&self, a: &RPoly) -> u128 {
        debug_assert!(self.bit_dim() <= MAX_DIM);
        let m = self.params.m() as usize;
        a.coeffs
            .iter()
            .enumerate()
            .fold(0u128, |acc, (slot, c)| acc | (c.bits() as u128) << (slot * m))
    }

    pub fn from_bits(&self, v: u128) -> RPoly {
        let m = self.params.m() as usize;
        let mask = (1u128 << m) - 1;
        let mut out = self.rzero();
        for (slot, c) in out.coeffs.iter_mut().enumerate() {
            *c = FieldElem((v >> (slot * m) & mask) as u16);
        }
        out
    }

    /// Multiplication by x, by u and (for m > 1) by the field element y as
    /// F_2-linear maps; a subspace is an ideal iff it is invariant under them.
    pub fn operators(&self) -> Vec<LinearOp> {
        let d = self.bit_dim();
        let mut ops = vec![
            LinearOp::from_fn(d, |v| self.to_bits(&self.shift_x(&self.from_bits(v)))),
            LinearOp::from_fn(d, |v| self.to_bits(&self.mul_u(&self.from_bits(v)))),
        ];
        if self.params.m() > 1 {
            let y = FieldElem(2);
            ops.push(LinearOp::from_fn(d, |v| {
                self.to_bits(&self.rscale(&self.from_bits(v), y))
            }));
        }
        ops
    }

    /// The ideal generated by `gens`, as an F_2-subspace.
    pub fn ideal_space(&self, gens: &[RPoly], ops: &[LinearOp]) -> Result<F2Subspace> {
        self.check_bits(MAX_DIM)?;
        let mut s = F2Subspace::span(gens.iter().map(|g| self.to_bits(g)));
        s.close_under(ops);
        Ok(s)
    }

    /// Generators of the code in R[x]/⟨x^N - γ⟩: each component generator,
    /// placed in A + uA through its idempotent and mapped by Ψ.
    pub fn lift_code(&self, en: &Enumeration, code: &CodeDescriptor) -> Vec<RPoly> {
        let f = self.field();
        let mut out = Vec::new();
        for (ent, gens) in en.data.entries().iter().zip(en.generators(code)) {
            for g in gens {
                let a = self.elem(
                    &g.c0.rep().mul(&ent.idempotent, f),
                    &g.c1.rep().mul(&ent.idempotent, f),
                );
                out.push(self.psi_lift(&a));
            }
        }
        out
    }

    /// The code as an F_2-subspace, checked against the predicted size.
    pub fn code_space(
        &self,
        en: &Enumeration,
        code: &CodeDescriptor,
        ops: &[LinearOp],
    ) -> Result<F2Subspace> {
        let space = self.ideal_space(&self.lift_code(en, code), ops)?;
        let predicted = en.stream().code_size(code);
        if BigUint::one() << space.dim() != predicted {
            return Err(Error::Verification(format!(
                "{code:?} spans 2^{} words, predicted {predicted}",
                space.dim()
            )));
        }
        Ok(space)
    }

    /// Every codeword of `code`; refuses codes larger than `cap` words.
    pub fn materialize_code(
        &self,
        en: &Enumeration,
        code: &CodeDescriptor,
        cap: u64,
    ) -> Result<Vec<RPoly>> {
        let predicted = en.stream().code_size(code);
        if predicted > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                what: "materialization",
                needed: predicted.to_string(),
                cap: cap.to_string(),
            });
        }
        let space = self.code_space(en, code, &self.operators())?;
        Ok(space.elements().map(|v| self.from_bits(v)).collect())
    }

    /// C^⊥ under the R-valued Euclidean inner product. Asserts |C|·|C^⊥| = |R|^N.
    pub fn dual_space(&self, code: &F2Subspace) -> Result<F2Subspace> {
        self.check_bits(MAX_DIM)?;
        let d = self.bit_dim();
        let m = self.params.m() as usize;
        let units: Vec<RPoly> = (0..d).map(|p| self.from_bits(1u128 << p)).collect();
        let mut constraints = Vec::new();
        for &b in code.basis() {
            let b = self.from_bits(b);
            let values: Vec<Vec<FieldElem>> = units.iter().map(|e| self.inner(e, &b)).collect();
            for j in 0..self.digits() {
                for bit in 0..m {
                    let row = values.iter().enumerate().fold(0u128, |acc, (p, v)| {
                        acc | ((v[j].bits() >> bit & 1) as u128) << p
                    });
                    constraints.push(row);
                }
            }
        }
        let dual = F2Subspace::annihilator(&constraints, d);
        if dual.dim() + code.dim() != d {
            return Err(Error::Verification(format!(
                "dim C + dim C^perp = {} + {} differs from {d}",
                code.dim(),
                dual.dim()
            )));
        }
        Ok(dual)
    }

    /// Every word orthogonal to all of `words`.
    pub fn dual_code(&self, words: &[RPoly]) -> Result<Vec<RPoly>> {
        let space = F2Subspace::span(words.iter().map(|w| self.to_bits(w)));
        let dual = self.dual_space(&space)?;
        Ok(dual.elements().map(|v| self.from_bits(v)).collect())
    }

    /// All ideals of R[x]/⟨x^N - γ⟩ by brute force over F_2^D, D <= `max_dim`.
    pub fn brute_force_ideals(&self, exec: Exec, max_dim: usize) -> Result<InvariantLattice> {
        self.check_bits(max_dim)?;
        Ok(invariant_subspaces(self.bit_dim(), &self.operators(), exec))
    }

    /// A short generator list for an ideal, picked greedily from its basis.
    pub fn greedy_generators(&self, space: &F2Subspace, ops: &[LinearOp]) -> Vec<RPoly> {
        let mut cur = F2Subspace::zero();
        let mut gens = Vec::new();
        for &v in space.basis() {
            if cur.contains(v) {
                continue;
            }
            let mut s = F2Subspace::span([v]);
            s.close_under(ops);
            cur = cur.sum(&s);
            gens.push(self.from_bits(v));
            if cur == *space {
                break;
            }
        }
        gens
    }
}

/// Product in R = F[u]/⟨u^{2λ}⟩ of two digit vectors of equal length.
fn r_mul(field: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let n = a.len();
    let mut out = vec![FieldElem::ZERO; n];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    out
}

/// All submodules of (F_{2^m}[π]/⟨π^e⟩)^2, by brute force over F_2^{2em}.
pub fn brute_force_submodules(field: &FieldCtx, e: usize, exec: Exec, max_dim: usize) -> Result<InvariantLattice> {
    let m = field.degree() as usize;
    let d = 2 * e * m;
    if d > max_dim.min(MAX_DIM) {
        return Err(Error::CapExceeded {
            what: "submodule sweep dimension",
            needed: d.to_string(),
            cap: max_dim.min(MAX_DIM).to_string(),
        });
    }
    // bit ((c·e + i)·m + b): bit b of the π^i digit in column c
    let digit_mask = (1u128 << m) - 1;
    let pi = LinearOp::from_fn(d, |v| {
        let mut out = 0u128;
        for c in 0..2 {
            for i in 0..e - 1 {
                let slot = c * e + i;
                out |= (v >> (slot * m) & digit_mask) << ((slot + 1) * m);
            }
        }
        out
    });
    let mut ops = vec![pi];
    if m > 1 {
        let y = FieldElem(2);
        ops.push(LinearOp::from_fn(d, |v| {
            let mut out = 0u128;
            for slot in 0..2 * e {
                let c = FieldElem((v >> (slot * m) & digit_mask) as u16);
                out |= (field.mul(c, y).bits() as u128) << (slot * m);
            }
            out
        }));
    }
    Ok(invariant_subspaces(d, &ops, exec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(m: u32, n: usize, delta: u32, alpha: u32) -> AmbientRing {
        AmbientRing::new(&Params::with_degree(m, n, 2, 2, delta, alpha).unwrap())
    }

    #[test]
    fn psi_examples() {
        let r = ring(1, 1, 1, 1);
        let one = r.elem(&Poly::one(), &Poly::zero());
        assert_eq!(r.psi_lift(&one), r.rone());
        assert_eq!(r.psi_inverse(&r.rzero()), AmbientElem::default());
        // Ψ((x + δ0)^4) = αu^2
        for (m, delta, alpha) in [(1, 1, 1), (2, 3, 2), (3, 5, 6)] {
            let r = ring(m, 1, delta, alpha);
            let p = r.params().base_poly().pow(4, r.params().field());
            let lifted = r.psi_lift(&r.elem(&p, &Poly::zero()));
            let expected = r
                .rpoly_from_u_parts(&[(2, Poly::constant(r.params().alpha()))])
                .unwrap();
            assert_eq!(lifted, expected);
        }
    }

    #[test]
    fn psi_inverse_of_u_square() {
        for (m, n, delta, alpha) in [(1, 1, 1, 1), (2, 3, 2, 3), (3, 1, 7, 4)] {
            let r = ring(m, n, delta, alpha);
            let u2 = r.rpoly_from_u_parts(&[(2, Poly::one())]).unwrap();
            let p = r.params();
            let expected = p
                .base_poly()
                .pow(p.two_k(), p.field())
                .scale(p.alpha_inv(), p.field());
            assert_eq!(r.psi_inverse(&u2), AmbientElem { xi0: expected, xi1: Poly::zero() });
        }
    }

    #[test]
    fn psi_is_a_ring_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (m, n, delta, alpha) in [(1, 1, 1, 1), (1, 3, 1, 1), (2, 3, 3, 2)] {
            let r = ring(m, n, delta, alpha);
            for _ in 0..200 {
                let a = r.random_elem(&mut rng);
                let b = r.random_elem(&mut rng);
                let (pa, pb) = (r.psi_lift(&a), r.psi_lift(&b));
                assert_eq!(r.psi_lift(&r.add(&a, &b)), r.radd(&pa, &pb));
                assert_eq!(r.psi_lift(&r.mul(&a, &b)), r.rmul(&pa, &pb));
                assert_eq!(r.psi_inverse(&pa), a);
                let c = r.random_rpoly(&mut rng);
                assert_eq!(r.psi_lift(&r.psi_inverse(&c)), c);
            }
        }
    }

    #[test]
    fn shift_matches_multiplication_by_x() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = ring(2, 3, 3, 1);
        let x = r.rpoly_from_u_parts(&[(0, Poly::x())]).unwrap();
        let u = r.rpoly_from_u_parts(&[(1, Poly::one())]).unwrap();
        for _ in 0..50 {
            let a = r.random_rpoly(&mut rng);
            assert_eq!(r.shift_x(&a), r.rmul(&x, &a));
            assert_eq!(r.mul_u(&a), r.rmul(&u, &a));
            assert_eq!(r.from_bits(r.to_bits(&a)), a);
        }
    }

    #[test]
    fn dual_of_zero_and_unit() {
        let r = ring(1, 1, 1, 1);
        let full = r.dual_space(&F2Subspace::zero()).unwrap();
        assert_eq!(full.dim(), 16);
        assert_eq!(r.dual_space(&full).unwrap(), F2Subspace::zero());
        let ops = r.operators();
        let u2 = r.rpoly_from_u_parts(&[(2, Poly::one())]).unwrap();
        let c = r.ideal_space(&[u2], &ops).unwrap();
        assert_eq!(c.dim(), 8);
        assert_eq!(r.dual_space(&c).unwrap(), c);
    }

    #[test]
    fn caps_are_enforced() {
        let r = ring(1, 3, 1, 1);
        assert!(matches!(
            r.brute_force_ideals(Exec::Sequential, 16),
            Err(Error::CapExceeded { .. })
        ));
        let f = FieldCtx::new(2, None).unwrap();
        assert!(brute_force_submodules(&f, 5, Exec::Sequential, 16).is_err());
    }

    #[test]
    fn small_submodule_counts() {
        let f2 = FieldCtx::new(1, None).unwrap();
        let counts: Vec<usize> = (1..=3)
            .map(|e| brute_force_submodules(&f2, e, Exec::Parallel, 16).unwrap().members.len())
            .collect();
        assert_eq!(counts, vec![5, 15, 37]);
    }
}
