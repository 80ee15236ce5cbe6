//! Enumeration and counting of the ideals of K_j + uK_j, and of the codes
//! they assemble into.
//!
//! Every ideal of K + uK has exactly one descriptor in one of six families,
//! indexed by the π-degree `s` of the u-coefficient, a gap `t` and a
//! residue `h`:
//!
//! | family | generators | size exponent |
//! |---|---|---|
//! | F1 | ω f^{2^{k-1}+s} + f^{L+⌈s/2⌉} h + u f^s | e - s |
//! | F2 | f^{L+⌈s/2⌉} h + u f^s | e - s |
//! | F3 | f^s | 2e - 2s |
//! | F4 | u f^s, f^{s+1} | 2e - 2s - 1 |
//! | F5 | f^{s+⌈t/2⌉} h + u f^s, f^{s+t} | 2e - 2s - t |
//! | F6 | ω f^{2^{k-1}+s} + f^{s+⌈t/2⌉} h + u f^s, f^{s+t} | 2e - 2s - t |
//!
//! with e = 2^k λ, L = e/2, sizes in powers of |F_j| = 2^{md}, and h running
//! over residues modulo f^{L-⌈s/2⌉} (F1, F2) or f^{⌊t/2⌋} (F5, F6).
//!
//! Descriptors are ordered by family, then t, then s, then h. The residue h
//! is enumerated through its f-adic digits: the coefficients of digit 0
//! come first (lowest power of x first), and the sequence is compared
//! lexicographically with field elements in the integer order of their bit
//! patterns. The last coefficient therefore varies fastest.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use std::sync::Arc;

use crate::chain::{ChainCtx, ExtElem, ModuleForm};
use crate::error::{Error, Result};
use crate::factor::{residue_field_order, FactorData};
use crate::gf2m::{FieldCtx, FieldElem};
use crate::par::Exec;
use crate::params::Params;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F1 = 1,
    F2 = 2,
    F3 = 3,
    F4 = 4,
    F5 = 5,
    F6 = 6,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::F1,
        Family::F2,
        Family::F3,
        Family::F4,
        Family::F5,
        Family::F6,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(v: u8) -> Option<Family> {
        Family::ALL.get((v as usize).wrapping_sub(1)).copied()
    }

    /// Whether the family carries a residue h.
    pub fn has_h(self) -> bool {
        matches!(self, Family::F1 | Family::F2 | Family::F5 | Family::F6)
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.number())
    }
}

/// One ideal of K_j + uK_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IdealDescriptor {
    pub factor: usize,
    pub family: Family,
    pub s: usize,
    pub t: Option<usize>,
    /// The residue h(x) as a polynomial; zero for F3 and F4.
    pub h: Poly,
}

/// One code: an ideal descriptor per factor of x^n + δ0, in factor order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CodeDescriptor {
    pub components: Vec<IdealDescriptor>,
}

/// A run of descriptors sharing (family, t, s); h ranges over `h_digits`
/// f-adic digits, so the block holds q^{h_digits} descriptors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub family: Family,
    pub t: Option<usize>,
    pub s: usize,
    pub h_digits: usize,
}

/// Size exponent of an ideal, in powers of |F_j|.
pub fn size_exponent(family: Family, s: usize, t: Option<usize>, e: usize) -> usize {
    match family {
        Family::F1 | Family::F2 => e - s,
        Family::F3 => 2 * e - 2 * s,
        Family::F4 => 2 * e - 2 * s - 1,
        Family::F5 | Family::F6 => 2 * e - 2 * s - t.expect("F5 and F6 carry t"),
    }
}

/// Position of a cursor inside an [`IdealCatalog`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    block: usize,
    /// Flattened h coefficients, digit-major.
    state: Vec<u16>,
}

/// All ideals of K_j + uK_j for one factor, as a sequence of blocks.
#[derive(Clone, Debug)]
pub struct IdealCatalog {
    factor: usize,
    field: Arc<FieldCtx>,
    f: Poly,
    d: usize,
    e: usize,
    blocks: Vec<Block>,
    /// Prefix sums of block sizes; `starts[i]` is the index of block i's first descriptor.
    starts: Vec<BigUint>,
    total: BigUint,
}

impl IdealCatalog {
    pub fn new(field: Arc<FieldCtx>, factor: usize, f: Poly, k: u32, lambda: usize) -> Self {
        let d = f.degree().expect("factor is nonconstant");
        let two_k = 1usize << k;
        let e = two_k * lambda;
        let half = e / 2;
        let mut blocks = Vec::new();
        for s in 0..half {
            blocks.push(Block { family: Family::F1, t: None, s, h_digits: half - s.div_ceil(2) });
        }
        for s in half..e {
            blocks.push(Block { family: Family::F2, t: None, s, h_digits: half - s.div_ceil(2) });
        }
        for s in 0..=e {
            blocks.push(Block { family: Family::F3, t: None, s, h_digits: 0 });
        }
        for s in 0..=e - 2 {
            blocks.push(Block { family: Family::F4, t: Some(1), s, h_digits: 0 });
        }
        for (family, ts) in [(Family::F5, 2..=two_k), (Family::F6, two_k + 1..=e - 1)] {
            for t in ts {
                for s in 0..=e - 1 - t {
                    blocks.push(Block { family, t: Some(t), s, h_digits: t / 2 });
                }
            }
        }
        let md = field.degree() as usize * d;
        let mut starts = Vec::with_capacity(blocks.len());
        let mut total = BigUint::zero();
        for b in &blocks {
            starts.push(total.clone());
            total += BigUint::one() << (md * b.h_digits);
        }
        IdealCatalog { factor, field, f, d, e, blocks, starts, total }
    }

    /// One catalog per factor of x^n + δ0.
    pub fn for_factors(data: &FactorData) -> Vec<IdealCatalog> {
        let p = data.params();
        data.entries()
            .iter()
            .map(|ent| IdealCatalog::new(p.field_arc().clone(), ent.index, ent.f.clone(), p.k(), p.lambda()))
            .collect()
    }

    pub fn factor(&self) -> usize {
        self.factor
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn nilpotency(&self) -> usize {
        self.e
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> &BigUint {
        &self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total.is_zero()
    }

    fn block_len(&self, i: usize) -> BigUint {
        BigUint::one() << (self.md() * self.blocks[i].h_digits)
    }

    fn md(&self) -> usize {
        self.field.degree() as usize * self.d
    }

    /// Number of descriptors per family, F1 first.
    pub fn family_counts(&self) -> [BigUint; 6] {
        let mut out: [BigUint; 6] = Default::default();
        for i in 0..self.blocks.len() {
            out[self.blocks[i].family as usize - 1] += self.block_len(i);
        }
        out
    }

    /// |C_j| for a descriptor of this catalog.
    pub fn ideal_size(&self, desc: &IdealDescriptor) -> BigUint {
        BigUint::one() << (self.md() * size_exponent(desc.family, desc.s, desc.t, self.e))
    }

    pub fn start(&self) -> Position {
        Position {
            block: 0,
            state: vec![0; self.blocks[0].h_digits * self.d],
        }
    }

    /// Position of the descriptor with index `idx`, or None past the end.
    pub fn position_at(&self, idx: &BigUint) -> Option<Position> {
        if idx >= &self.total {
            return None;
        }
        let block = self.starts.partition_point(|s| s <= idx) - 1;
        let mut rest = idx - &self.starts[block];
        let m = self.field.degree() as usize;
        let mask = BigUint::from((1u32 << m) - 1);
        let len = self.blocks[block].h_digits * self.d;
        let mut state = vec![0u16; len];
        for slot in state.iter_mut().rev() {
            *slot = u16::try_from(&rest & &mask).expect("digit fits in m bits");
            rest >>= m;
        }
        Some(Position { block, state })
    }

    /// Moves to the next descriptor; false once the catalog is exhausted.
    pub fn advance(&self, pos: &mut Position) -> bool {
        let top = (1u32 << self.field.degree()) as u16;
        for slot in pos.state.iter_mut().rev() {
            *slot += 1;
            if *slot < top {
                return true;
            }
            *slot = 0;
        }
        pos.block += 1;
        if pos.block >= self.blocks.len() {
            return false;
        }
        pos.state = vec![0; self.blocks[pos.block].h_digits * self.d];
        true
    }

    pub fn descriptor(&self, pos: &Position) -> IdealDescriptor {
        let b = &self.blocks[pos.block];
        let mut h = Poly::zero();
        let mut f_pow = Poly::one();
        for digit in pos.state.chunks(self.d.max(1)) {
            let coeffs: Vec<FieldElem> = digit.iter().map(|&c| FieldElem(c)).collect();
            h = h.add(&Poly::from_coeffs(coeffs).mul(&f_pow, &self.field));
            f_pow = f_pow.mul(&self.f, &self.field);
        }
        IdealDescriptor {
            factor: self.factor,
            family: b.family,
            s: b.s,
            t: b.t,
            h,
        }
    }

    pub fn iter(&self) -> IdealIter<'_> {
        IdealIter {
            cat: self,
            pos: Some(self.start()),
        }
    }

    /// Iterator starting at descriptor `idx`.
    pub fn iter_from(&self, idx: &BigUint) -> IdealIter<'_> {
        IdealIter {
            cat: self,
            pos: self.position_at(idx),
        }
    }

    pub fn nth(&self, idx: &BigUint) -> Option<IdealDescriptor> {
        self.position_at(idx).map(|p| self.descriptor(&p))
    }

    /// Checks the catalog against its chain ring: every descriptor spans an
    /// ideal (Condition (4) closure of its module rows), has at most two
    /// generators, has the predicted size, and no two descriptors coincide.
    ///
    /// Refuses catalogs with more than `cap` descriptors.
    pub fn verify(&self, ctx: &ChainCtx, exec: Exec, cap: u64) -> Result<Vec<ModuleForm>> {
        let total = u64::try_from(&self.total).ok().filter(|&t| t <= cap).ok_or_else(|| {
            Error::CapExceeded {
                what: "catalog verification",
                needed: self.total.to_string(),
                cap: cap.to_string(),
            }
        })?;
        let descs: Vec<IdealDescriptor> = self.iter().collect();
        debug_assert_eq!(descs.len() as u64, total);
        let checked = exec.map(&descs, |d| -> Result<ModuleForm> {
            let gens = descriptor_generators(d, ctx);
            if gens.is_empty() || gens.len() > 2 {
                return Err(Error::Verification(format!("{d:?} has {} generators", gens.len())));
            }
            let rows = module_rows(d, ctx);
            if !ctx.is_u_closed(&rows) {
                return Err(Error::Verification(format!("{d:?} is not closed under u")));
            }
            let form = ctx.ideal_form(&gens);
            if form != ctx.canonical_module_form(&rows) {
                return Err(Error::Verification(format!("{d:?}: generators and rows differ")));
            }
            if form.size_exponent(self.e) != size_exponent(d.family, d.s, d.t, self.e) {
                return Err(Error::Verification(format!(
                    "{d:?}: size exponent {} differs from the formula",
                    form.size_exponent(self.e)
                )));
            }
            Ok(form)
        });
        let forms = checked.into_iter().collect::<Result<Vec<_>>>()?;
        let mut seen = HashMap::with_capacity(forms.len());
        for (i, form) in forms.iter().enumerate() {
            if let Some(j) = seen.insert(form, i) {
                return Err(Error::Verification(format!(
                    "{:?} and {:?} span the same ideal",
                    descs[j], descs[i]
                )));
            }
        }
        Ok(forms)
    }

    /// The descriptors of block `i`.
    pub fn block_iter(&self, i: usize) -> impl Iterator<Item = IdealDescriptor> + '_ {
        self.iter_from(&self.starts[i]).take_while(move |d| {
            let b = &self.blocks[i];
            (d.family, d.t, d.s) == (b.family, b.t, b.s)
        })
    }

    /// Map from canonical ideal form to descriptor, over the blocks accepted
    /// by `keep`. Refuses to index more than `cap` descriptors.
    pub fn form_index(
        &self,
        ctx: &ChainCtx,
        exec: Exec,
        cap: u64,
        keep: impl Fn(&Block) -> bool,
    ) -> Result<HashMap<ModuleForm, IdealDescriptor>> {
        let chosen: Vec<usize> = (0..self.blocks.len()).filter(|&i| keep(&self.blocks[i])).collect();
        let size: BigUint = chosen.iter().map(|&i| self.block_len(i)).sum();
        if size > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                what: "descriptor index",
                needed: size.to_string(),
                cap: cap.to_string(),
            });
        }
        let descs: Vec<IdealDescriptor> = chosen.iter().flat_map(|&i| self.block_iter(i)).collect();
        let forms = exec.map(&descs, |d| ctx.ideal_form(&descriptor_generators(d, ctx)));
        Ok(forms.into_iter().zip(descs).collect())
    }
}

pub struct IdealIter<'a> {
    cat: &'a IdealCatalog,
    pos: Option<Position>,
}

impl Iterator for IdealIter<'_> {
    type Item = IdealDescriptor;

    fn next(&mut self) -> Option<IdealDescriptor> {
        let pos = self.pos.as_mut()?;
        let out = self.cat.descriptor(pos);
        if !self.cat.advance(pos) {
            self.pos = None;
        }
        Some(out)
    }
}

fn h_elem(desc: &IdealDescriptor, ctx: &ChainCtx) -> crate::chain::ChainElem {
    ctx.reduce(&desc.h).expect("f^e is nonzero")
}

/// The u-free part and u-coefficient of the first generator of F1, F2, F5, F6.
fn first_generator(desc: &IdealDescriptor, ctx: &ChainCtx) -> ExtElem {
    let e = ctx.nilpotency();
    let s = desc.s;
    let h_shift = match desc.family {
        Family::F1 | Family::F2 => e / 2 + s.div_ceil(2),
        _ => s + desc.t.expect("F5 and F6 carry t").div_ceil(2),
    };
    let mut c0 = ctx.mul(&ctx.f_pow(h_shift), &h_elem(desc, ctx));
    if matches!(desc.family, Family::F1 | Family::F6) {
        let w = ctx.mul(ctx.omega(), &ctx.f_pow(ctx.two_k() / 2 + s));
        c0 = ctx.add(&c0, &w);
    }
    ExtElem::new(c0, ctx.f_pow(s))
}

/// The literal generators of a descriptor as elements of K_j + uK_j.
pub fn descriptor_generators(desc: &IdealDescriptor, ctx: &ChainCtx) -> Vec<ExtElem> {
    let s = desc.s;
    match desc.family {
        Family::F3 => vec![ExtElem::new(ctx.f_pow(s), ctx.zero())],
        Family::F4 => vec![
            ExtElem::new(ctx.zero(), ctx.f_pow(s)),
            ExtElem::new(ctx.f_pow(s + 1), ctx.zero()),
        ],
        Family::F1 | Family::F2 => vec![first_generator(desc, ctx)],
        Family::F5 | Family::F6 => {
            let t = desc.t.expect("F5 and F6 carry t");
            vec![
                first_generator(desc, ctx),
                ExtElem::new(ctx.f_pow(s + t), ctx.zero()),
            ]
        }
    }
}

/// Rows of the generator matrix of the submodule of K_j^2 matching the
/// descriptor; F3 needs the diagonal pair, the rest are the generators.
pub fn module_rows(desc: &IdealDescriptor, ctx: &ChainCtx) -> Vec<ExtElem> {
    match desc.family {
        Family::F3 => vec![
            ExtElem::new(ctx.f_pow(desc.s), ctx.zero()),
            ExtElem::new(ctx.zero(), ctx.f_pow(desc.s)),
        ],
        _ => descriptor_generators(desc, ctx),
    }
}

/// Whether the module rows of `desc` are closed under (a0, a1) ↦ (ω^2 f^{2^k} a1, a0).
pub fn ideal_membership_check(desc: &IdealDescriptor, ctx: &ChainCtx) -> bool {
    ctx.is_u_closed(&module_rows(desc, ctx))
}

/// Σ_{i=0}^{L} (1 + 4i) q^{L-i} with L = 2^{k-1}λ.
pub fn ideal_count_sum(q: &BigUint, k: u32, lambda: usize) -> BigUint {
    let half = (1usize << (k - 1)) * lambda;
    let mut acc = BigUint::zero();
    // Horner in q, starting from the i = 0 term
    for i in 0..=half {
        acc = acc * q + BigUint::from(1 + 4 * i);
    }
    acc
}

/// ((q + 3) q^{L+1} - q(4L + 5) + 4L + 1) / (q - 1)^2 with L = 2^{k-1}λ.
pub fn ideal_count_closed(q: &BigUint, k: u32, lambda: usize) -> Result<BigUint> {
    if q < &BigUint::from(2u32) {
        return Err(Error::InvalidParams("q must be at least 2".into()));
    }
    let half = (1usize << (k - 1)) * lambda;
    let num = (q + 3u32) * q.pow(half as u32 + 1) + BigUint::from(4 * half + 1)
        - q * BigUint::from(4 * half + 5);
    let den = (q - 1u32).pow(2);
    if !(&num % &den).is_zero() {
        return Err(Error::Verification(format!(
            "closed-form numerator is not divisible by (q - 1)^2 at q = {q}"
        )));
    }
    Ok(num / den)
}

/// N for one factor, with the sum and closed forms checked against each other.
pub fn ideal_count(q: &BigUint, k: u32, lambda: usize) -> Result<BigUint> {
    let sum = ideal_count_sum(q, k, lambda);
    let closed = ideal_count_closed(q, k, lambda)?;
    if sum != closed {
        return Err(Error::Verification(format!(
            "sum form {sum} and closed form {closed} disagree at q = {q}"
        )));
    }
    Ok(sum)
}

/// Number of (δ + αu^2)-constacyclic codes: the product over factors of N.
pub fn count_codes(data: &FactorData) -> Result<BigUint> {
    let p = data.params();
    let mut total = BigUint::one();
    for ent in data.entries() {
        let q = residue_field_order(p.m(), ent.degree);
        total *= ideal_count(&q, p.k(), p.lambda())?;
    }
    Ok(total)
}

/// Σ_{i=0}^{e} (2i + 1) q^{e-i}: the number of submodules of (F_q[π]/π^e)^2.
pub fn count_submodules_length2(q: &BigUint, e: usize) -> BigUint {
    let mut acc = BigUint::zero();
    for i in 0..=e {
        acc = acc * q + BigUint::from(2 * i + 1);
    }
    acc
}

/// Lazy product of the per-factor catalogs; the last factor varies fastest.
pub struct CodeStream {
    catalogs: Vec<IdealCatalog>,
    positions: Option<Vec<Position>>,
}

impl CodeStream {
    pub fn new(catalogs: Vec<IdealCatalog>) -> Self {
        Self::starting_at(catalogs, &BigUint::zero())
    }

    /// Stream beginning at code number `offset`.
    pub fn starting_at(catalogs: Vec<IdealCatalog>, offset: &BigUint) -> Self {
        let mut rest = offset.clone();
        let mut positions = Vec::with_capacity(catalogs.len());
        for cat in catalogs.iter().rev() {
            let idx = &rest % cat.len();
            rest /= cat.len();
            positions.push(cat.position_at(&idx));
        }
        positions.reverse();
        let positions = if rest.is_zero() {
            positions.into_iter().collect()
        } else {
            None
        };
        CodeStream { catalogs, positions }
    }

    pub fn total(&self) -> BigUint {
        self.catalogs.iter().map(|c| c.len().clone()).product()
    }

    pub fn catalogs(&self) -> &[IdealCatalog] {
        &self.catalogs
    }

    /// |C| = Π |C_j|.
    pub fn code_size(&self, code: &CodeDescriptor) -> BigUint {
        self.catalogs
            .iter()
            .zip(&code.components)
            .map(|(cat, d)| cat.ideal_size(d))
            .product()
    }
}

impl Iterator for CodeStream {
    type Item = CodeDescriptor;

    fn next(&mut self) -> Option<CodeDescriptor> {
        let positions = self.positions.as_mut()?;
        let components = self
            .catalogs
            .iter()
            .zip(positions.iter())
            .map(|(c, p)| c.descriptor(p))
            .collect();
        let mut carried = true;
        for (cat, pos) in self.catalogs.iter().zip(positions.iter_mut()).rev() {
            if cat.advance(pos) {
                carried = false;
                break;
            }
            *pos = cat.start();
        }
        if carried {
            self.positions = None;
        }
        Some(CodeDescriptor { components })
    }
}

/// Catalogs and chain rings for a parameter set, built together.
pub struct Enumeration {
    pub data: FactorData,
    pub chains: Vec<ChainCtx>,
    pub catalogs: Vec<IdealCatalog>,
}

impl Enumeration {
    pub fn build(params: &Params) -> Result<Self> {
        Self::build_seeded(params, crate::factor::DEFAULT_SEED)
    }

    pub fn build_seeded(params: &Params, seed: u64) -> Result<Self> {
        let data = FactorData::build_seeded(params, seed)?;
        let chains = data
            .entries()
            .iter()
            .map(|ent| ChainCtx::for_factor(params, ent))
            .collect::<Result<Vec<_>>>()?;
        let catalogs = IdealCatalog::for_factors(&data);
        Ok(Enumeration { data, chains, catalogs })
    }

    pub fn params(&self) -> &Params {
        self.data.params()
    }

    pub fn count(&self) -> Result<BigUint> {
        let n = count_codes(&self.data)?;
        let listed: BigUint = self.catalogs.iter().map(|c| c.len().clone()).product();
        if n != listed {
            return Err(Error::Verification(format!(
                "formula count {n} differs from catalog length {listed}"
            )));
        }
        Ok(n)
    }

    pub fn stream(&self) -> CodeStream {
        CodeStream::new(self.catalogs.clone())
    }

    pub fn stream_from(&self, offset: &BigUint) -> CodeStream {
        CodeStream::starting_at(self.catalogs.clone(), offset)
    }

    /// Generators of every component of `code`, in K_j + uK_j.
    pub fn generators(&self, code: &CodeDescriptor) -> Vec<Vec<ExtElem>> {
        code.components
            .iter()
            .zip(&self.chains)
            .map(|(d, ctx)| descriptor_generators(d, ctx))
            .collect()
    }
}
