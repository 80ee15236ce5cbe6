//! Subspaces of F_2^D for D <= 128, stored as u128 bit vectors.

use std::collections::BTreeSet;

use crate::par::Exec;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 128;

fn pivot(v: u128) -> u32 {
    127 - v.leading_zeros()
}

/// A subspace in fully reduced row echelon form: basis vectors are sorted by
/// decreasing leading bit and no leading bit appears in another vector.
/// The basis is therefore canonical, and equality of subspaces is equality
/// of the structs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Subspace {
    basis: Vec<u128>,
}

impl F2Subspace {
    pub fn zero() -> Self {
        F2Subspace::default()
    }

    pub fn span<I: IntoIterator<Item = u128>>(vs: I) -> Self {
        let mut s = F2Subspace::zero();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u128] {
        &self.basis
    }

    pub fn reduce(&self, mut v: u128) -> u128 {
        for &b in &self.basis {
            if v >> pivot(b) & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn contains(&self, v: u128) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v` to the span; returns the new reduced basis vector if the
    /// dimension grew.
    pub fn insert(&mut self, v: u128) -> Option<u128> {
        let v = self.reduce(v);
        if v == 0 {
            return None;
        }
        let p = pivot(v);
        for b in self.basis.iter_mut() {
            if *b >> p & 1 == 1 {
                *b ^= v;
            }
        }
        let at = self.basis.partition_point(|&b| pivot(b) > p);
        self.basis.insert(at, v);
        Some(v)
    }

    pub fn sum(&self, other: &F2Subspace) -> F2Subspace {
        let (mut big, small) = if self.dim() >= other.dim() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for &v in &small.basis {
            big.insert(v);
        }
        big
    }

    pub fn is_subspace_of(&self, other: &F2Subspace) -> bool {
        self.basis.iter().all(|&v| other.contains(v))
    }

    /// Smallest subspace containing `self` and stable under every operator.
    pub fn close_under(&mut self, ops: &[LinearOp]) {
        let mut queue: Vec<u128> = self.basis.clone();
        while let Some(v) = queue.pop() {
            for op in ops {
                if let Some(w) = self.insert(op.apply(v)) {
                    queue.push(w);
                }
            }
        }
    }

    pub fn is_invariant(&self, ops: &[LinearOp]) -> bool {
        self.basis
            .iter()
            .all(|&v| ops.iter().all(|op| self.contains(op.apply(v))))
    }

    /// All 2^dim elements, in Gray-code order starting at 0.
    pub fn elements(&self) -> impl Iterator<Item = u128> + '_ {
        let total = 1u128 << self.dim();
        let mut cur = 0u128;
        (0..total).map(move |i| {
            if i > 0 {
                cur ^= self.basis[i.trailing_zeros() as usize];
            }
            cur
        })
    }

    /// {a in F_2^dim : popcount(c & a) is even for every constraint c}.
    pub fn annihilator(constraints: &[u128], dim: usize) -> F2Subspace {
        let rows = F2Subspace::span(constraints.iter().copied());
        let pivots: u128 = rows.basis.iter().fold(0, |acc, &b| acc | 1u128 << pivot(b));
        let mut out = F2Subspace::zero();
        for free in (0..dim).filter(|&i| pivots >> i & 1 == 0) {
            let mut v = 1u128 << free;
            for &r in &rows.basis {
                if r >> free & 1 == 1 {
                    v |= 1u128 << pivot(r);
                }
            }
            out.insert(v);
        }
        out
    }

    /// Bit vectors as fixed-width hex, most significant word first.
    pub fn hex_basis(&self, dim: usize) -> Vec<String> {
        let width = dim.div_ceil(4).max(1);
        self.basis.iter().map(|b| format!("{b:0width$x}")).collect()
    }
}

/// A linear map of F_2^D given by the images of the unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOp {
    images: Vec<u128>,
}

impl LinearOp {
    pub fn from_fn(dim: usize, f: impl Fn(u128) -> u128) -> Self {
        LinearOp {
            images: (0..dim).map(|i| f(1u128 << i)).collect(),
        }
    }

    pub fn apply(&self, mut v: u128) -> u128 {
        let mut out = 0;
        while v != 0 {
            let i = v.trailing_zeros() as usize;
            out ^= self.images[i];
            v &= v - 1;
        }
        out
    }
}

/// The lattice of subspaces of F_2^dim invariant under `ops`, found by brute
/// force: the invariant closure of every single vector, then pairwise sums
/// until nothing new appears.
#[derive(Clone, Debug)]
pub struct InvariantLattice {
    pub members: Vec<F2Subspace>,
    /// Distinct cyclic (single-generator) members.
    pub cyclic: usize,
    /// Rounds of pairwise summing until the fixpoint.
    pub rounds: usize,
}

pub fn invariant_subspaces(dim: usize, ops: &[LinearOp], exec: Exec) -> InvariantLattice {
    assert!(dim < MAX_DIM, "dimension {dim} is too large to sweep");
    let total = 1u64 << dim;
    let chunks = exec.fold_chunks(0..total, 1 << 12, |range| {
        let mut found = BTreeSet::new();
        for v in range {
            let mut s = F2Subspace::zero();
            s.insert(v as u128);
            s.close_under(ops);
            found.insert(s);
        }
        found
    });
    let mut all: BTreeSet<F2Subspace> = chunks.into_iter().flatten().collect();
    let cyclic = all.len();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let list: Vec<F2Subspace> = all.iter().cloned().collect();
        let idx: Vec<usize> = (0..list.len()).collect();
        let fresh: Vec<BTreeSet<F2Subspace>> = exec.map(&idx, |&i| {
            (i + 1..list.len())
                .map(|j| list[i].sum(&list[j]))
                .filter(|s| !all.contains(s))
                .collect()
        });
        let before = all.len();
        all.extend(fresh.into_iter().flatten());
        if all.len() == before {
            break;
        }
    }
    InvariantLattice {
        members: all.into_iter().collect(),
        cyclic,
        rounds,
    }
}
