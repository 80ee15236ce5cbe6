use serde::Serialize;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, FieldElem};
use crate::poly::Poly;

/// Upper bound on 2^k·λ·n, the degree of (x^n + δ0)^{2^k λ}.
pub const MAX_AMBIENT_DEGREE: usize = 1 << 16;

/// The tuple (m, n, k, λ, δ, α) with the derived roots δ0 and α0.
///
/// Invariants: n odd, k, λ >= 2, δ0^{2^k} = δ and α0^2·α = 1.
#[derive(Debug, Clone)]
pub struct Params {
    field: Arc<FieldCtx>,
    n: usize,
    k: u32,
    lambda: usize,
    delta: FieldElem,
    alpha: FieldElem,
    delta0: FieldElem,
    alpha0: FieldElem,
}

/// JSON view of a parameter set.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ParamsSummary {
    pub m: u32,
    pub reduction: u32,
    pub n: usize,
    pub k: u32,
    pub lambda: usize,
    pub delta: FieldElem,
    pub alpha: FieldElem,
    pub delta0: FieldElem,
    pub alpha0: FieldElem,
    pub length: usize,
}

impl Params {
    pub fn new(
        field: Arc<FieldCtx>,
        n: usize,
        k: u32,
        lambda: usize,
        delta: u32,
        alpha: u32,
    ) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("n must be odd, got {n}")));
        }
        if k < 2 {
            return Err(Error::InvalidParams(format!("k must be at least 2, got {k}")));
        }
        if lambda < 2 {
            return Err(Error::InvalidParams(format!(
                "lambda must be at least 2, got {lambda}"
            )));
        }
        let degree = (1usize << k.min(31))
            .checked_mul(lambda)
            .and_then(|v| v.checked_mul(n));
        if k > 20 || degree.is_none_or(|v| v > MAX_AMBIENT_DEGREE) {
            return Err(Error::InvalidParams(format!(
                "2^k·lambda·n must not exceed {MAX_AMBIENT_DEGREE}"
            )));
        }
        let delta = field.elem(delta)?;
        let alpha = field.elem(alpha)?;
        if delta.is_zero() {
            return Err(Error::InvalidParams("delta must be nonzero".into()));
        }
        if alpha.is_zero() {
            return Err(Error::InvalidParams("alpha must be nonzero".into()));
        }
        let delta0 = field.root_2k(delta, k)?;
        let alpha0 = field.sqrt(field.inv(alpha)?);
        debug_assert_eq!(field.mul(field.square(alpha0), alpha), FieldElem::ONE);
        Ok(Params {
            field,
            n,
            k,
            lambda,
            delta,
            alpha,
            delta0,
            alpha0,
        })
    }

    /// Convenience constructor with the built-in reduction polynomial for `m`.
    pub fn with_degree(
        m: u32,
        n: usize,
        k: u32,
        lambda: usize,
        delta: u32,
        alpha: u32,
    ) -> Result<Self> {
        Self::new(Arc::new(FieldCtx::new(m, None)?), n, k, lambda, delta, alpha)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn m(&self) -> u32 {
        self.field.degree()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn delta(&self) -> FieldElem {
        self.delta
    }

    pub fn alpha(&self) -> FieldElem {
        self.alpha
    }

    pub fn delta0(&self) -> FieldElem {
        self.delta0
    }

    pub fn alpha0(&self) -> FieldElem {
        self.alpha0
    }

    pub fn alpha_inv(&self) -> FieldElem {
        self.field.inv(self.alpha).expect("alpha is nonzero")
    }

    /// 2^k.
    pub fn two_k(&self) -> usize {
        1 << self.k
    }

    /// 2^k·λ, the nilpotency index of every f_j in K_j.
    pub fn nilpotency(&self) -> usize {
        self.two_k() * self.lambda
    }

    /// 2^{k-1}·λ.
    pub fn half_nilpotency(&self) -> usize {
        self.nilpotency() / 2
    }

    /// Code length 2^k·n.
    pub fn length(&self) -> usize {
        self.two_k() * self.n
    }

    /// Number of u-adic digits of an element of R, i.e. 2λ.
    pub fn u_digits(&self) -> usize {
        2 * self.lambda
    }

    /// x^n + δ0.
    pub fn base_poly(&self) -> Poly {
        let mut coeffs = vec![FieldElem::ZERO; self.n + 1];
        coeffs[0] = self.delta0;
        coeffs[self.n] = FieldElem::ONE;
        Poly::from_coeffs(coeffs)
    }

    pub fn summary(&self) -> ParamsSummary {
        ParamsSummary {
            m: self.m(),
            reduction: self.field.reduction(),
            n: self.n,
            k: self.k,
            lambda: self.lambda,
            delta: self.delta,
            alpha: self.alpha,
            delta0: self.delta0,
            alpha0: self.alpha0,
            length: self.length(),
        }
    }
}
