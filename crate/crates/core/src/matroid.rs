//! Gale duality and the dual matroid `M*(A)`.
//!
//! Subsets of the ground set `[m]` are `u64` bitmasks, so `m <= 64`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, IntMatrix};

/// A Gale dual configuration: the rows of `beta` form a lattice basis of
/// `ker(A) ∩ Z^m`, so `A beta^T = 0`. The Gale vectors `b_j` are the columns
/// of `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleDual {
    source: IntMatrix,
    beta: IntMatrix,
}

impl GaleDual {
    pub fn source(&self) -> &IntMatrix {
        &self.source
    }

    pub fn beta(&self) -> &IntMatrix {
        &self.beta
    }

    /// `m - d`.
    pub fn corank(&self) -> usize {
        self.beta.rows()
    }

    pub fn m(&self) -> usize {
        self.source.cols()
    }

    pub fn vector(&self, j: usize) -> Vec<BigInt> {
        self.beta.column(j)
    }

    pub fn vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.m()).map(|j| self.vector(j)).collect()
    }

    /// Indices `j` with `b_j = 0`.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.m())
            .filter(|&j| self.vector(j).iter().all(|x| x.is_zero()))
            .collect()
    }
}

/// Gale dual from the Hermite basis of the integer kernel. The result is
/// determined by `A`.
pub fn gale_dual(a: &IntMatrix) -> Result<GaleDual> {
    let rank = a.rank();
    if rank < a.rows() {
        return Err(Error::RankDeficient {
            expected: a.rows(),
            found: rank,
        });
    }
    if a.cols() > 64 {
        return Err(Error::Input(format!(
            "at most 64 columns are supported, got {}",
            a.cols()
        )));
    }
    Ok(GaleDual {
        source: a.clone(),
        beta: kernel_basis(a),
    })
}

/// Incremental integer row echelon form used for span membership.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    /// Reduce `v` against the current rows; keep it if it is independent.
    pub(crate) fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (c, row) in &self.rows {
            if v[*c].is_zero() {
                continue;
            }
            let (p, q) = (row[*c].clone(), v[*c].clone());
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * &p - &q * r;
            }
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() {
                v.iter_mut().for_each(|x| *x /= &g);
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(c) => {
                self.rows.push((c, v));
                true
            }
            None => false,
        }
    }

    pub(crate) fn contains(&self, v: &[BigInt]) -> bool {
        let mut e = self.clone();
        !e.insert(v.to_vec())
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading positions of the stored rows.
    pub(crate) fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }
}

pub fn bits(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |acc, &j| acc | (1 << j))
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&j| mask & (1 << j) != 0).collect()
}

/// The vector matroid of the Gale vectors, which is `M*(A)`.
#[derive(Debug)]
pub struct DualMatroid {
    vectors: Vec<Vec<BigInt>>,
    rank: usize,
    closures: Mutex<HashMap<u64, u64>>,
}

impl Clone for DualMatroid {
    fn clone(&self) -> Self {
        DualMatroid {
            vectors: self.vectors.clone(),
            rank: self.rank,
            closures: Mutex::new(self.closures.lock().unwrap().clone()),
        }
    }
}

impl DualMatroid {
    pub fn new(gale: &GaleDual) -> Self {
        Self::from_vectors(gale.vectors())
    }

    pub fn from_vectors(vectors: Vec<Vec<BigInt>>) -> Self {
        let mut e = Echelon::default();
        for v in &vectors {
            e.insert(v.clone());
        }
        DualMatroid {
            rank: e.rank(),
            vectors,
            closures: Mutex::new(HashMap::new()),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.vectors.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn span(&self, mask: u64) -> Echelon {
        let mut e = Echelon::default();
        for j in members(mask) {
            e.insert(self.vectors[j].clone());
        }
        e
    }

    pub fn rank_of(&self, mask: u64) -> usize {
        self.span(mask).rank()
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        self.rank_of(mask) == mask.count_ones() as usize
    }

    pub fn closure(&self, mask: u64) -> u64 {
        if let Some(&c) = self.closures.lock().unwrap().get(&mask) {
            return c;
        }
        let span = self.span(mask);
        let mut c = mask;
        for (j, v) in self.vectors.iter().enumerate() {
            if c & (1 << j) == 0 && span.contains(v) {
                c |= 1 << j;
            }
        }
        self.closures.lock().unwrap().insert(mask, c);
        c
    }

    pub fn is_flat(&self, mask: u64) -> bool {
        self.closure(mask) == mask
    }

    /// `rank(S) = |S|` for every subset of size at most the rank.
    pub fn is_uniform(&self) -> bool {
        (0..self.ground_size())
            .combinations(self.rank)
            .all(|s| self.is_independent(bits(&s)))
    }

    /// All bases, as bitmasks in increasing order.
    pub fn bases(&self) -> Vec<u64> {
        let mut out: Vec<u64> = (0..self.ground_size())
            .combinations(self.rank)
            .map(|s| bits(&s))
            .filter(|&b| self.is_independent(b))
            .collect();
        out.sort_unstable();
        out
    }

    /// Rank-`k` flats, each as a sorted subset, in lexicographic order.
    pub fn flats_of_rank(&self, k: usize) -> Vec<Vec<usize>> {
        if k > self.rank {
            return Vec::new();
        }
        let flats: BTreeSet<Vec<usize>> = (0..self.ground_size())
            .combinations(k)
            .map(|s| bits(&s))
            .filter(|&s| self.rank_of(s) == k)
            .map(|s| members(self.closure(s)))
            .collect();
        flats.into_iter().collect()
    }

    /// Every maximal chain of flats `J_1 ⊂ ... ⊂ J_{r-1}` with
    /// `rank(J_k) = k`, by depth-first extension. Flats at each step are
    /// visited in order of their smallest new element.
    pub fn maximal_chains(&self) -> Vec<FlagChain> {
        let mut out = Vec::new();
        if self.rank == 0 {
            return out;
        }
        let mut path = Vec::new();
        self.extend(self.closure(0), &mut path, &mut out);
        out
    }

    fn extend(&self, current: u64, path: &mut Vec<u64>, out: &mut Vec<FlagChain>) {
        if path.len() + 1 == self.rank {
            out.push(FlagChain {
                flats: path.clone(),
            });
            return;
        }
        let mut seen = BTreeSet::new();
        for j in 0..self.ground_size() {
            if current & (1 << j) != 0 {
                continue;
            }
            let next = self.closure(current | (1 << j));
            if seen.insert(next) {
                path.push(next);
                self.extend(next, path, out);
                path.pop();
            }
        }
    }
}

/// A maximal chain of flats, stored as bitmasks `J_1 ⊂ J_2 ⊂ ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagChain {
    flats: Vec<u64>,
}

impl FlagChain {
    pub fn new(flats: Vec<u64>) -> Self {
        FlagChain { flats }
    }

    pub fn masks(&self) -> &[u64] {
        &self.flats
    }

    pub fn flats(&self) -> Vec<Vec<usize>> {
        self.flats.iter().map(|&f| members(f)).collect()
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }
}

impl std::fmt::Display for FlagChain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts = self
            .flats
            .iter()
            .map(|&m| format!("{{{}}}", members(m).iter().map(|j| j + 1).join(",")));
        write!(f, "{}", parts.format(" ⊂ "))
    }
}

/// Rank of `S` in `M*(A)` straight from the primal matroid:
/// `r*(S) = |S| - rank(A) + rank(A restricted to [m] \ S)`.
pub fn dual_rank_from_primal(a: &IntMatrix, mask: u64) -> usize {
    let rest: Vec<usize> = (0..a.cols()).filter(|&j| mask & (1 << j) == 0).collect();
    let r_rest = if rest.is_empty() {
        0
    } else {
        a.select_columns(&rest).rank()
    };
    mask.count_ones() as usize + r_rest - a.rank()
}

/// `(r-1)! C(m, r-1)`, the number of maximal chains of a uniform matroid of
/// rank `r` on `m` elements.
pub fn uniform_chain_count(m: usize, r: usize) -> u128 {
    if r == 0 {
        return 0;
    }
    let k = (r - 1) as u128;
    let fact: u128 = (1..=k).product();
    let mut binom: u128 = 1;
    for i in 0..k {
        binom = binom * (m as u128 - i) / (i + 1);
    }
    fact * binom
}
