//! Cayley configurations of `n` supports in `Z^n`.
//!
//! Column order is fixed throughout the crate: blocks in input order, and
//! points within a block in input order. Every sign-sensitive quantity
//! (Plücker coordinates, stratum fingerprints) is relative to it.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{gcd_maximal_minors, IntMatrix, LatticePoint};

/// The support `A_i` of one Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<LatticePoint>,
    label: String,
}

impl PointConfig {
    pub fn new(points: Vec<LatticePoint>, label: impl Into<String>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyConfig { block: 1 });
        };
        let dim = first.dim();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch(
                "points of one configuration have different lengths".into(),
            ));
        }
        let mut seen = HashSet::new();
        if !points.iter().all(|p| seen.insert(p)) {
            return Err(Error::DuplicatePoint { block: 1 });
        }
        Ok(PointConfig {
            dim,
            points,
            label: label.into(),
        })
    }

    /// Convenience constructor for hand-written supports. Panics on invalid
    /// input.
    pub fn from_i64(points: &[&[i64]]) -> Self {
        Self::new(points.iter().map(|p| LatticePoint::from_i64(p)).collect(), "")
            .expect("invalid point configuration")
    }

    pub fn from_pairs(points: &[(i64, i64)]) -> Self {
        Self::new(
            points.iter().map(|&(x, y)| LatticePoint::from_i64(&[x, y])).collect(),
            "",
        )
        .expect("invalid point configuration")
    }

    /// Vertices of `scale * σ_n`: the origin and `scale * e_k`. A negative
    /// scale gives the reflected simplex.
    pub fn simplex_vertices(n: usize, scale: i64) -> Self {
        let mut pts = vec![LatticePoint::origin(n)];
        for k in 0..n {
            let mut c = vec![0; n];
            c[k] = scale;
            pts.push(LatticePoint::from_i64(&c));
        }
        Self::new(pts, format!("{scale}σ{n}")).unwrap()
    }

    /// All lattice points of `scale * s_2` (a dense planar triangle).
    pub fn dense_triangle(scale: i64) -> Self {
        let s = scale.abs();
        let sign = scale.signum();
        let mut pts = Vec::new();
        for i in 0..=s {
            for j in 0..=s - i {
                pts.push(LatticePoint::from_i64(&[sign * i, sign * j]));
            }
        }
        Self::new(pts, format!("dense {scale}s2")).unwrap()
    }

    pub fn unit_square() -> Self {
        Self::from_pairs(&[(0, 0), (1, 0), (0, 1), (1, 1)]).with_label("unit square")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn translate(&self, t: &LatticePoint) -> PointConfig {
        PointConfig {
            dim: self.dim,
            points: self.points.iter().map(|p| p.add(t)).collect(),
            label: self.label.clone(),
        }
    }

    /// Image under `x -> M x` for a square integer matrix given by rows.
    /// The caller is responsible for `M` being invertible.
    pub fn transform(&self, rows: &[Vec<BigInt>]) -> PointConfig {
        PointConfig {
            dim: self.dim,
            points: self.points.iter().map(|p| p.transform(rows)).collect(),
            label: self.label.clone(),
        }
    }

    /// The configuration with one point removed.
    pub fn without(&self, v: &LatticePoint) -> Option<PointConfig> {
        let points: Vec<_> = self.points.iter().filter(|p| *p != v).cloned().collect();
        if points.is_empty() {
            None
        } else {
            Some(PointConfig {
                dim: self.dim,
                points,
                label: self.label.clone(),
            })
        }
    }

    /// Dimension of the affine span.
    pub fn affine_dim(&self) -> usize {
        let base = &self.points[0];
        let diffs: Vec<Vec<BigInt>> = self.points[1..]
            .iter()
            .map(|p| p.sub(base).coords().to_vec())
            .collect();
        if diffs.is_empty() {
            return 0;
        }
        IntMatrix::from_rows(diffs).rank()
    }
}

/// `Cay(A_1, ..., A_n)` with its block partition and lattice index.
#[derive(Clone, Debug)]
pub struct CayleySystem {
    configs: Vec<PointConfig>,
    matrix: IntMatrix,
    blocks: Vec<Vec<usize>>,
    lattice_index: BigInt,
}

impl CayleySystem {
    pub fn configs(&self) -> &[PointConfig] {
        &self.configs
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `[Z^{2n} : Z A]`, or zero when the matrix is rank deficient.
    pub fn lattice_index(&self) -> &BigInt {
        &self.lattice_index
    }

    /// Rank below `2n`: the Cayley polytope is not full-dimensional.
    pub fn is_degenerate(&self) -> bool {
        self.lattice_index.is_zero()
    }

    pub fn n(&self) -> usize {
        self.configs.len()
    }

    /// Number of columns `m = Σ |A_i|`.
    pub fn m(&self) -> usize {
        self.matrix.cols()
    }

    /// Number of rows `d = 2n`.
    pub fn d(&self) -> usize {
        self.matrix.rows()
    }

    pub fn block_of(&self, column: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&column)).unwrap()
    }
}

impl fmt::Display for CayleySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Cayley matrix of configurations that share an ambient lattice `Z^k`
/// (any `k`): block indicator rows on top, then the coordinates of every
/// point. Also returns the column indices of each block.
pub fn cayley_matrix(configs: &[PointConfig]) -> Result<(IntMatrix, Vec<Vec<usize>>)> {
    let n = configs.len();
    let Some(first) = configs.first() else {
        return Err(Error::Input("at least one configuration is required".into()));
    };
    let k = first.dim();
    if let Some(c) = configs.iter().find(|c| c.dim() != k) {
        return Err(Error::DimensionMismatch(format!(
            "block {} lives in Z^{} but block 1 lives in Z^{k}",
            c.label(),
            c.dim()
        )));
    }
    let m: usize = configs.iter().map(|c| c.len()).sum();
    let mut matrix = IntMatrix::zeros(n + k, m);
    let mut blocks = Vec::with_capacity(n);
    let mut col = 0;
    for (b, c) in configs.iter().enumerate() {
        let mut block = Vec::with_capacity(c.len());
        for p in c.points() {
            matrix[(b, col)] = BigInt::one();
            for (r, x) in p.coords().iter().enumerate() {
                matrix[(n + r, col)] = x.clone();
            }
            block.push(col);
            col += 1;
        }
        blocks.push(block);
    }
    Ok((matrix, blocks))
}

/// Assemble the Cayley system of `n` configurations in `Z^n`.
pub fn build_cayley(configs: Vec<PointConfig>) -> Result<CayleySystem> {
    let n = configs.len();
    if n == 0 {
        return Err(Error::Input("at least one configuration is required".into()));
    }
    for (k, c) in configs.iter().enumerate() {
        if c.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "block {} lives in Z^{} but there are {} configurations",
                k + 1,
                c.dim(),
                n
            )));
        }
    }
    let (matrix, blocks) = cayley_matrix(&configs)?;
    let lattice_index = if matrix.rank() == 2 * n {
        gcd_maximal_minors(&matrix)?
    } else {
        BigInt::zero()
    };
    Ok(CayleySystem {
        configs,
        matrix,
        blocks,
        lattice_index,
    })
}

/// Maximal minors of a `d x m` matrix, indexed by `d`-subsets of columns in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    d: usize,
    m: usize,
    coords: BTreeMap<Vec<usize>, BigInt>,
}

impl PluckerVector {
    pub fn of_matrix(a: &IntMatrix) -> PluckerVector {
        let coords = (0..a.cols())
            .combinations(a.rows())
            .map(|s| {
                let v = a.select_columns(&s).det();
                (s, v)
            })
            .collect();
        PluckerVector {
            d: a.rows(),
            m: a.cols(),
            coords,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, subset: &[usize]) -> &BigInt {
        &self.coords[subset]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.coords.iter()
    }

    /// Coordinates in lexicographic subset order.
    pub fn values(&self) -> Vec<BigInt> {
        self.coords.values().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.values().all(|v| v.is_zero())
    }

    pub fn gcd(&self) -> BigInt {
        self.coords.values().fold(BigInt::zero(), |g, v| g.gcd(v))
    }
}

pub fn plucker(sys: &CayleySystem) -> PluckerVector {
    PluckerVector::of_matrix(sys.matrix())
}

/// Linear forms on `∧^d R^m` given by the coordinates of `ξ ∧ v`.
///
/// Each form is a coefficient vector over the `d`-subsets in lexicographic
/// order; the form indexed by a `(d+1)`-subset `T` is
/// `Σ_{t ∈ T} (-1)^{#{s ∈ T : s > t}} v_t p_{T \ t}`.
pub fn wedge_forms(m: usize, d: usize, v: &[BigInt]) -> Vec<Vec<BigInt>> {
    let index: BTreeMap<Vec<usize>, usize> = (0..m)
        .combinations(d)
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut forms = Vec::new();
    for t in (0..m).combinations(d + 1) {
        let mut form = vec![BigInt::zero(); index.len()];
        let mut nonzero = false;
        for (pos, &tk) in t.iter().enumerate() {
            if v[tk].is_zero() {
                continue;
            }
            let rest: Vec<usize> = t.iter().copied().filter(|&x| x != tk).collect();
            let after = t.len() - 1 - pos;
            let coeff = if after % 2 == 0 { v[tk].clone() } else { -v[tk].clone() };
            form[index[&rest]] += coeff;
            nonzero = true;
        }
        if nonzero && form.iter().any(|x| !x.is_zero()) {
            forms.push(form);
        }
    }
    forms
}

/// All linear forms `ξ ∧ e_{I_j}` for the blocks of a partition. They vanish
/// on the mixed Grassmannian `G(d, I)`.
pub fn vanishing_forms(blocks: &[Vec<usize>], m: usize, d: usize) -> Vec<Vec<BigInt>> {
    blocks
        .iter()
        .flat_map(|block| {
            let mut v = vec![BigInt::zero(); m];
            for &i in block {
                v[i] = BigInt::one();
            }
            wedge_forms(m, d, &v)
        })
        .collect()
}

/// Is the Plücker vector in the linear span of the mixed Grassmannian for
/// the given partition (every `ξ ∧ e_{I_j}` vanishes)?
pub fn in_mixed_grassmannian(p: &PluckerVector, blocks: &[Vec<usize>]) -> bool {
    let vals = p.values();
    vanishing_forms(blocks, p.m(), p.d()).iter().all(|f| {
        f.iter()
            .zip(&vals)
            .map(|(a, b)| a * b)
            .sum::<BigInt>()
            .is_zero()
    })
}

/// Lattice index of the affine lattice spanned by a configuration in `Z^k`:
/// gcd of the maximal minors of its differences. Zero when not full
/// dimensional.
pub fn affine_lattice_index(c: &PointConfig) -> BigInt {
    let base = &c.points()[0];
    let diffs: Vec<Vec<BigInt>> = c.points()[1..]
        .iter()
        .map(|p| p.sub(base).coords().to_vec())
        .collect();
    if diffs.len() < c.dim() {
        return BigInt::zero();
    }
    let m = IntMatrix::from_rows(diffs).transpose();
    if m.rank() < c.dim() {
        return BigInt::zero();
    }
    gcd_maximal_minors(&m).map(|g| g.abs()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn two_univariate_quadrics() {
        let a1 = PointConfig::from_pairs(&[(0, 0), (1, 0), (2, 0)]);
        let a2 = PointConfig::from_pairs(&[(0, 0), (0, 1), (0, 2)]);
        let sys = build_cayley(vec![a1, a2]).unwrap();
        let expected = IntMatrix::from_i64_rows(&[
            vec![1, 1, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 1, 1],
            vec![0, 1, 2, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 2],
        ]);
        assert_eq!(sys.matrix(), &expected);
        assert_eq!(sys.blocks(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(sys.lattice_index(), &n(1));
    }

    #[test]
    fn sparse_triangles_matrix() {
        let sys = build_cayley(vec![
            PointConfig::simplex_vertices(2, 2),
            PointConfig::simplex_vertices(2, 3),
        ])
        .unwrap();
        let expected = IntMatrix::from_i64_rows(&[
            vec![1, 1, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 1, 1],
            vec![0, 2, 0, 0, 3, 0],
            vec![0, 0, 2, 0, 0, 3],
        ]);
        assert_eq!(sys.matrix(), &expected);
        assert_eq!(sys.lattice_index(), &n(1));
    }

    #[test]
    fn univariate_case() {
        let sys = build_cayley(vec![PointConfig::from_i64(&[&[0], &[1]])]).unwrap();
        assert_eq!(sys.matrix(), &IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]));
        let sys = build_cayley(vec![PointConfig::from_i64(&[&[0], &[1], &[2]])]).unwrap();
        let p = plucker(&sys);
        assert_eq!(p.values(), vec![n(1), n(2), n(1)]);
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let r = build_cayley(vec![PointConfig::from_i64(&[&[0, 0], &[1, 0]])]);
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn duplicate_points_rejected() {
        let r = PointConfig::new(
            vec![LatticePoint::from_i64(&[0, 0]), LatticePoint::from_i64(&[0, 0])],
            "",
        );
        assert!(matches!(r, Err(Error::DuplicatePoint { .. })));
    }

    #[test]
    fn degenerate_system_flagged() {
        // both supports on the x-axis: rank 3 < 4
        let a1 = PointConfig::from_pairs(&[(0, 0), (1, 0)]);
        let a2 = PointConfig::from_pairs(&[(0, 0), (2, 0)]);
        let sys = build_cayley(vec![a1, a2]).unwrap();
        assert!(sys.is_degenerate());
        assert!(plucker(&sys).is_zero());
    }

    #[test]
    fn plucker_values_of_sparse_triangles() {
        let (d1, d2) = (2, 3);
        let sys = build_cayley(vec![
            PointConfig::simplex_vertices(2, d1),
            PointConfig::simplex_vertices(2, d2),
        ])
        .unwrap();
        let p = plucker(&sys);
        assert_eq!(p.gcd(), *sys.lattice_index());
        assert!(in_mixed_grassmannian(&p, sys.blocks()));
    }

    #[test]
    fn wedge_form_detects_non_members() {
        // a 2x3 matrix whose row space does not contain (1,1,1)
        let a = IntMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let p = PluckerVector::of_matrix(&a);
        assert!(!in_mixed_grassmannian(&p, &[vec![0, 1, 2]]));
        let a = IntMatrix::from_i64_rows(&[vec![1, 1, 1], vec![0, 1, 5]]);
        assert!(in_mixed_grassmannian(&PluckerVector::of_matrix(&a), &[vec![0, 1, 2]]));
    }

    #[test]
    fn affine_index_of_sparse_simplex() {
        assert_eq!(affine_lattice_index(&PointConfig::simplex_vertices(2, 3)), n(9));
        assert_eq!(affine_lattice_index(&PointConfig::unit_square()), n(1));
        assert_eq!(
            affine_lattice_index(&PointConfig::from_pairs(&[(0, 0), (1, 1)])),
            n(0)
        );
    }
}
