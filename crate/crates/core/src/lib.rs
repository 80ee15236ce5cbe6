//! Constacyclic codes of length 2^k·n over F_{2^m}[u]/⟨u^{2λ}⟩.
//!
//! The crate factors x^n + δ0, builds the chain rings K_j and enumerates
//! every (δ + αu^2)-constacyclic code through its components in K_j + uK_j.
//! A brute-force F_2-linear oracle checks the enumeration on small cases.

pub mod ambient;
pub mod chain;
pub mod enumerate;
pub mod error;
pub mod f2;
pub mod factor;
pub mod gf2m;
pub mod par;
pub mod params;
pub mod poly;
pub mod selfdual;

pub use ambient::{AmbientElem, AmbientRing, RPoly};
pub use chain::{ChainCtx, ChainElem, ExtElem, ModuleForm};
pub use enumerate::{
    CodeDescriptor, CodeStream, Enumeration, Family, IdealCatalog, IdealDescriptor,
};
pub use error::{Error, Result};
pub use f2::{F2Subspace, LinearOp};
pub use factor::{Factor, FactorData, FactorEntry};
pub use gf2m::{FieldCtx, FieldElem};
pub use par::Exec;
pub use params::{Params, ParamsSummary};
pub use poly::Poly;
