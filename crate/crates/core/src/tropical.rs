//! Degree of the discriminant cycle by tropical ray shooting.
//!
//! For a generic weight `w`, the exponent of `x_i` in the initial monomial
//! `in_w(Δ̃_A)` is
//!
//! ```text
//! Σ_{J ∈ C_{i,w}} |det(A^T, e_{J_1}, ..., e_{J_{m-d-1}}, e_i)|
//! ```
//!
//! over the maximal chains of flats `J` of `M*(A)` whose cone, shifted by
//! `w`, meets the ray `-e_i`. Membership is decided in the Gale dual: the
//! chain counts when `β(w) ∈ R_{>0}{σ_{J_1}, ..., σ_{J_{m-d-1}}, -b_i}` with
//! `σ_J = Σ_{j ∈ J} b_j`. The exponents summed over a block give the degree
//! of the cycle in that block's coefficients.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cayley::CayleySystem;
use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::matroid::{gale_dual, DualMatroid, Echelon, FlagChain, GaleDual};
use crate::planar;

/// Weights are drawn uniformly from `[-WEIGHT_RANGE, WEIGHT_RANGE]`.
pub const WEIGHT_RANGE: i64 = 1_000_000;
/// Redraws allowed before giving up on a seed.
pub const RETRY_LIMIT: u32 = 32;
/// Largest `m - 2n` accepted without `force`.
pub const MAX_CORANK: usize = 8;
/// Largest `m` accepted without `force`.
pub const MAX_COLUMNS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCertificate {
    pub w: Vec<i64>,
    pub seed: u64,
    /// Number of degenerate draws discarded before `w`.
    pub retries: u32,
}

fn draw(m: usize, seed: u64, index: u32) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = Vec::new();
    for _ in 0..=index {
        w = (0..m).map(|_| rng.gen_range(-WEIGHT_RANGE..=WEIGHT_RANGE)).collect();
    }
    w
}

/// First weight of the deterministic stream for `seed`.
pub fn generic_weight(m: usize, seed: u64) -> WeightCertificate {
    WeightCertificate {
        w: draw(m, seed, 0),
        seed,
        retries: 0,
    }
}

impl WeightCertificate {
    /// Next weight of the same stream.
    pub fn redraw(&self) -> Result<WeightCertificate> {
        let retries = self.retries + 1;
        if retries > RETRY_LIMIT {
            return Err(Error::GenericityFailure { retries: RETRY_LIMIT });
        }
        Ok(WeightCertificate {
            w: draw(self.w.len(), self.seed, retries),
            seed: self.seed,
            retries,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    /// Position in [`RayShooter::chains`].
    pub chain: usize,
    pub column: usize,
    /// `|det M(A, J, i)|`.
    pub value: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShootStatus {
    Ok,
    /// Some Gale vector vanishes (a pyramid), there is no kernel, or no
    /// chain contributes: the discriminant is not a hypersurface.
    Defective,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayShootResult {
    pub weight: Vec<i64>,
    pub seed: Option<u64>,
    pub retries: u32,
    /// Exponent of `x_i` in `in_w(Δ̃_A)`.
    pub exponents: Vec<BigInt>,
    pub block_degrees: Vec<BigInt>,
    pub contributions: Vec<Contribution>,
    pub status: ShootStatus,
}

/// A chain with its Gale-side linear algebra solved once: `W = [Σ | e_ρ]`
/// is invertible, `adj W = D W^{-1}`, and `gamma[i] = adj b_i`.
#[derive(Clone, Debug)]
struct PreparedChain {
    index: usize,
    det: BigInt,
    adj: Vec<Vec<BigInt>>,
    gamma: Vec<Vec<BigInt>>,
}

/// Fraction-free Gauss-Jordan on `[W | I]`. Returns `(D, X)` with
/// `W X = D I` and `|D| = |det W|`, or `None` when `W` is singular.
pub fn fraction_free_inverse(w: &[Vec<BigInt>]) -> Option<(BigInt, Vec<Vec<BigInt>>)> {
    let r = w.len();
    let mut m: Vec<Vec<BigInt>> = w
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut out = row.clone();
            out.extend((0..r).map(|j| BigInt::from((i == j) as i32)));
            out
        })
        .collect();
    let mut prev = BigInt::from(1);
    for k in 0..r {
        let p = (k..r).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let f = row[k].clone();
            for j in 0..2 * r {
                row[j] = (&pivot_row[k] * &row[j] - &f * &pivot_row[j]) / &prev;
            }
        }
        prev = pivot_row[k].clone();
    }
    let adj = m.into_iter().map(|row| row[r..].to_vec()).collect();
    Some((prev, adj))
}

fn mat_vec(a: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn prepare(index: usize, chain: &FlagChain, gale: &[Vec<BigInt>], r: usize) -> Option<PreparedChain> {
    let sigmas: Vec<Vec<BigInt>> = chain
        .flats()
        .iter()
        .map(|flat| {
            (0..r)
                .map(|t| flat.iter().map(|&j| &gale[j][t]).sum())
                .collect()
        })
        .collect();
    let mut ech = Echelon::default();
    for s in &sigmas {
        if !ech.insert(s.clone()) {
            return None;
        }
    }
    let pivots = ech.pivots();
    let rho = (0..r).find(|t| !pivots.contains(t))?;
    // columns σ_1, ..., σ_{r-1}, e_ρ
    let w: Vec<Vec<BigInt>> = (0..r)
        .map(|t| {
            let mut row: Vec<BigInt> = sigmas.iter().map(|s| s[t].clone()).collect();
            row.push(BigInt::from((t == rho) as i32));
            row
        })
        .collect();
    let (det, adj) = fraction_free_inverse(&w)?;
    let gamma = gale.iter().map(|b| mat_vec(&adj, b)).collect();
    Some(PreparedChain {
        index,
        det,
        adj,
        gamma,
    })
}

/// Contributions of one chain, or `None` if `w` sits on a cone boundary.
fn shoot_chain(p: &PreparedChain, bw: &[BigInt]) -> Option<Vec<(usize, BigInt)>> {
    let alpha = mat_vec(&p.adj, bw);
    let u = alpha.len() - 1;
    if alpha[u].is_zero() {
        return None;
    }
    let mut out = Vec::new();
    for (i, g) in p.gamma.iter().enumerate() {
        if g[u].is_zero() {
            continue;
        }
        let mut hit = (-&alpha[u]).signum() == g[u].signum();
        let target = (&p.det * &g[u]).signum();
        for k in 0..u {
            let num = &alpha[k] * &g[u] - &alpha[u] * &g[k];
            if num.is_zero() {
                return None;
            }
            hit &= num.signum() == target;
        }
        if hit {
            out.push((i, g[u].abs()));
        }
    }
    Some(out)
}

/// Everything about a Cayley system that does not depend on the weight.
#[derive(Clone, Debug)]
pub struct RayShooter {
    blocks: Vec<Vec<usize>>,
    gale: GaleDual,
    chains: Vec<FlagChain>,
    prepared: Vec<PreparedChain>,
    scale: BigInt,
    trivially_defective: bool,
}

impl RayShooter {
    pub fn new(sys: &CayleySystem) -> Result<Self> {
        Self::from_matrix(sys.matrix(), sys.blocks().to_vec())
    }

    /// Any full-row-rank matrix with `e_{I_j}` in its row span for every
    /// block `I_j`.
    pub fn from_matrix(a: &IntMatrix, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let gale = gale_dual(a)?;
        let r = gale.corank();
        let trivially_defective = r == 0 || !gale.loops().is_empty();
        let (chains, prepared, scale) = if trivially_defective {
            (Vec::new(), Vec::new(), BigInt::zero())
        } else {
            let matroid = DualMatroid::new(&gale);
            let chains = matroid.maximal_chains();
            let vectors = gale.vectors();
            let prepared: Vec<PreparedChain> = chains
                .par_iter()
                .enumerate()
                .filter_map(|(k, c)| prepare(k, c, &vectors, r))
                .collect();
            (chains, prepared, determinant_scale(a, &gale)?)
        };
        Ok(RayShooter {
            blocks,
            gale,
            chains,
            prepared,
            scale,
            trivially_defective,
        })
    }

    pub fn gale(&self) -> &GaleDual {
        &self.gale
    }

    pub fn chains(&self) -> &[FlagChain] {
        &self.chains
    }

    /// Chains whose `σ` vectors are linearly independent.
    pub fn active_chains(&self) -> usize {
        self.prepared.len()
    }

    /// `|c|` in `det(A^T | X) = c det(β X)`.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    fn zero_result(&self, w: &[i64]) -> RayShootResult {
        let m = self.gale.m();
        RayShootResult {
            weight: w.to_vec(),
            seed: None,
            retries: 0,
            exponents: vec![BigInt::zero(); m],
            block_degrees: vec![BigInt::zero(); self.blocks.len()],
            contributions: Vec::new(),
            status: ShootStatus::Defective,
        }
    }

    /// Ray shooting for one weight. Fails with
    /// [`Error::DegenerateWeight`] when any Cramer coordinate is zero.
    pub fn shoot(&self, w: &[i64]) -> Result<RayShootResult> {
        let m = self.gale.m();
        if w.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "weight has {} entries, expected {m}",
                w.len()
            )));
        }
        if self.trivially_defective {
            return Ok(self.zero_result(w));
        }
        let wb: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
        let bw = self.gale.beta().mul_vec(&wb);
        let per_chain: Option<Vec<(usize, Vec<(usize, BigInt)>)>> = self
            .prepared
            .par_iter()
            .map(|p| shoot_chain(p, &bw).map(|hits| (p.index, hits)))
            .collect();
        let per_chain = per_chain.ok_or(Error::DegenerateWeight)?;

        let mut exponents = vec![BigInt::zero(); m];
        let mut contributions = Vec::new();
        for (chain, hits) in per_chain {
            for (column, g) in hits {
                let value = &self.scale * g;
                exponents[column] += &value;
                contributions.push(Contribution {
                    chain,
                    column,
                    value,
                });
            }
        }
        let block_degrees: Vec<BigInt> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| &exponents[i]).sum())
            .collect();
        let status = if block_degrees.iter().all(|d| d.is_zero()) {
            ShootStatus::Defective
        } else {
            ShootStatus::Ok
        };
        Ok(RayShootResult {
            weight: w.to_vec(),
            seed: None,
            retries: 0,
            exponents,
            block_degrees,
            contributions,
            status,
        })
    }

    /// Shoot with the weight stream of `seed`, redrawing on degeneracy.
    pub fn shoot_seeded(&self, seed: u64) -> Result<RayShootResult> {
        let mut cert = generic_weight(self.gale.m(), seed);
        loop {
            match self.shoot(&cert.w) {
                Ok(mut res) => {
                    res.seed = Some(seed);
                    res.retries = cert.retries;
                    return Ok(res);
                }
                Err(Error::DegenerateWeight) => cert = cert.redraw()?,
                Err(e) => return Err(e),
            }
        }
    }
}

/// `c` with `det(A^T | X) = c det(β X)` for every `m x (m-d)` matrix `X`,
/// read off a column subset `T` where `β_T` is invertible.
fn determinant_scale(a: &IntMatrix, gale: &GaleDual) -> Result<BigInt> {
    let m = a.cols();
    let r = gale.corank();
    let beta = gale.beta();
    let mut t: Vec<usize> = Vec::new();
    let mut ech = Echelon::default();
    for j in 0..m {
        if t.len() == r {
            break;
        }
        if ech.insert(gale.vector(j)) {
            t.push(j);
        }
    }
    let mut cols: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    for &j in &t {
        let mut e = vec![BigInt::zero(); m];
        e[j] = BigInt::from(1);
        cols.push(e);
    }
    let full = IntMatrix::from_columns(&cols, m).det();
    let small = beta.select_columns(&t).det();
    if small.is_zero() || !(&full % &small).is_zero() {
        return Err(Error::Inconsistent(format!(
            "determinant ratio {full}/{small} is not an integer"
        )));
    }
    Ok((full / small).abs())
}

pub fn ray_shoot(sys: &CayleySystem, w: &[i64]) -> Result<RayShootResult> {
    RayShooter::new(sys)?.shoot(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TropicalOptions {
    pub seed: u64,
    /// Independent seeds that must agree.
    pub seeds: usize,
    /// Skip the size gate.
    pub force: bool,
}

impl Default for TropicalOptions {
    fn default() -> Self {
        TropicalOptions {
            seed: 0,
            seeds: 3,
            force: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TropicalRun {
    pub degree: Multidegree,
    pub runs: Vec<RayShootResult>,
    pub chains: usize,
}

pub fn check_size(sys: &CayleySystem) -> Result<()> {
    let (m, corank) = (sys.m(), sys.m().saturating_sub(sys.d()));
    if corank > MAX_CORANK || m > MAX_COLUMNS {
        return Err(Error::SizeGate { m, corank });
    }
    Ok(())
}

/// Cycle degrees from three seeds, which must agree, reduced by `i(A)`.
pub fn tropical_degree(sys: &CayleySystem, seed: u64) -> Result<Multidegree> {
    let opts = TropicalOptions {
        seed,
        ..TropicalOptions::default()
    };
    Ok(tropical_run(sys, &opts)?.degree)
}

pub fn tropical_run(sys: &CayleySystem, opts: &TropicalOptions) -> Result<TropicalRun> {
    if !opts.force {
        check_size(sys)?;
    }
    let shooter = RayShooter::new(sys)?;
    let runs: Vec<RayShootResult> = (0..opts.seeds.max(1) as u64)
        .map(|k| shooter.shoot_seeded(opts.seed.wrapping_add(k)))
        .collect::<Result<_>>()?;
    let first = &runs[0].block_degrees;
    if let Some(bad) = runs.iter().find(|r| &r.block_degrees != first) {
        return Err(Error::Instability(format!(
            "seeds {:?} and {:?} give different block degrees",
            runs[0].seed, bad.seed
        )));
    }
    let degree = Multidegree::new(first.clone(), sys.lattice_index().clone());
    if degree.reduced.is_none() && !sys.lattice_index().is_zero() {
        return Err(Error::Inconsistent(format!(
            "cycle degrees {first:?} are not divisible by i(A) = {}",
            sys.lattice_index()
        )));
    }
    Ok(TropicalRun {
        degree,
        runs,
        chains: shooter.chains().len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectMethod {
    /// Exact classification of two full-dimensional planar supports.
    PlanarExact,
    /// Exact one-dimensional planar case.
    PlanarOneDim,
    /// All block degrees vanished for every trial weight. Not a
    /// certificate.
    MonteCarlo { trials: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectVerdict {
    pub defective: bool,
    pub method: DefectMethod,
}

pub fn is_defective(sys: &CayleySystem, seed: u64, trials: usize) -> Result<DefectVerdict> {
    let configs = sys.configs();
    if configs.len() == 2 && configs.iter().all(|c| c.dim() == 2) {
        let dims = (configs[0].affine_dim(), configs[1].affine_dim());
        match dims {
            (2, 2) => {
                return Ok(DefectVerdict {
                    defective: planar::planar_defective(&configs[0], &configs[1])?.defective,
                    method: DefectMethod::PlanarExact,
                })
            }
            (2, 1) | (1, 2) => {
                let (full, seg) = if dims.0 == 2 { (0, 1) } else { (1, 0) };
                return Ok(DefectVerdict {
                    defective: planar::one_dim_degree(&configs[full], &configs[seg])?.defective,
                    method: DefectMethod::PlanarOneDim,
                });
            }
            _ => {}
        }
    }
    let shooter = RayShooter::new(sys)?;
    let trials = trials.max(1);
    let mut defective = true;
    for k in 0..trials as u64 {
        let res = shooter.shoot_seeded(seed.wrapping_add(k))?;
        if res.status == ShootStatus::Ok {
            defective = false;
            break;
        }
    }
    Ok(DefectVerdict {
        defective,
        method: DefectMethod::MonteCarlo { trials },
    })
}
