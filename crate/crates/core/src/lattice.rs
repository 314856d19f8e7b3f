//! Exact lattice geometry in the plane and integer linear algebra.
//!
//! Everything here works over [`BigInt`] or [`BigRational`]; there is no
//! floating point anywhere in the crate.
//!
//! Area conventions: [`normalized_area`] is twice the Euclidean area, so a
//! primitive triangle has area 1. [`mixed_volume2`] is the Bernstein root
//! count `EuclidArea(P+Q) - EuclidArea(P) - EuclidArea(Q)`.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A point of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn x(&self) -> &BigInt {
        &self.0[0]
    }

    pub fn y(&self) -> &BigInt {
        &self.0[1]
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Apply an integer matrix given by rows: `x -> M x`.
    pub fn transform(&self, rows: &[Vec<BigInt>]) -> LatticePoint {
        LatticePoint(
            rows.iter()
                .map(|r| r.iter().zip(&self.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// gcd of the coordinates (0 for the origin).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Cross product `(a - o) x (b - o)` of planar points.
pub(crate) fn cross(o: &LatticePoint, a: &LatticePoint, b: &LatticePoint) -> BigInt {
    (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x())
}

pub(crate) fn cross_vec(a: &LatticePoint, b: &LatticePoint) -> BigInt {
    a.x() * b.y() - a.y() * b.x()
}

/// Convex lattice polygon with counterclockwise vertices and no three
/// consecutive collinear vertices. Points and segments are represented with
/// one and two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<LatticePoint>,
}

impl Polygon {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// 0 for a point, 1 for a segment, 2 otherwise.
    pub fn dimension(&self) -> usize {
        match self.vertices.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == 2
    }

    /// Directed edges `(v_k, v_{k+1})` in counterclockwise order. A segment
    /// yields its two opposite orientations, a point yields nothing.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|k| (self.vertices[k].clone(), self.vertices[(k + 1) % n].clone()))
            .collect()
    }

    pub fn translate(&self, t: &LatticePoint) -> Polygon {
        convex_hull(&self.vertices.iter().map(|v| v.add(t)).collect::<Vec<_>>())
    }

    /// Does `p` lie in the closed polygon?
    pub fn contains(&self, p: &LatticePoint) -> bool {
        match self.vertices.len() {
            1 => &self.vertices[0] == p,
            2 => on_segment(&self.vertices[0], &self.vertices[1], p),
            _ => self
                .edges()
                .iter()
                .all(|(a, b)| !cross(a, b, p).is_negative()),
        }
    }
}

fn on_segment(a: &LatticePoint, b: &LatticePoint, p: &LatticePoint) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let lo_x = a.x().min(b.x());
    let hi_x = a.x().max(b.x());
    let lo_y = a.y().min(b.y());
    let hi_y = a.y().max(b.y());
    p.x() >= lo_x && p.x() <= hi_x && p.y() >= lo_y && p.y() <= hi_y
}

/// Convex hull of a nonempty set of planar lattice points (monotone chain).
pub fn convex_hull(points: &[LatticePoint]) -> Polygon {
    assert!(!points.is_empty(), "convex hull of an empty point set");
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return Polygon { vertices: pts };
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Polygon { vertices: lower }
}

/// Twice the Euclidean area. Zero for points and segments.
pub fn normalized_area(p: &Polygon) -> BigInt {
    if !p.is_full_dimensional() {
        return BigInt::zero();
    }
    let o = LatticePoint::origin(2);
    p.edges().iter().map(|(a, b)| cross(&o, a, b)).sum()
}

/// `|boundary ∩ Z^2|`. A segment with lattice length `l` has `l + 1`
/// boundary points and a single point has one.
pub fn boundary_lattice_points(p: &Polygon) -> BigInt {
    match p.vertices.len() {
        1 => BigInt::one(),
        2 => p.vertices[1].sub(&p.vertices[0]).content() + 1,
        _ => p.edges().iter().map(|(a, b)| b.sub(a).content()).sum(),
    }
}

/// All lattice points in the closed polygon, by scanning its bounding box.
pub fn lattice_points(p: &Polygon) -> Vec<LatticePoint> {
    let vs = p.vertices();
    let min_x = vs.iter().map(|v| v.x()).min().unwrap().clone();
    let max_x = vs.iter().map(|v| v.x()).max().unwrap().clone();
    let min_y = vs.iter().map(|v| v.y()).min().unwrap().clone();
    let max_y = vs.iter().map(|v| v.y()).max().unwrap().clone();
    let mut out = Vec::new();
    let mut x = min_x;
    while x <= max_x {
        let mut y = min_y.clone();
        while y <= max_y {
            let q = LatticePoint::new(vec![x.clone(), y.clone()]);
            if p.contains(&q) {
                out.push(q);
            }
            y += 1;
        }
        x += 1;
    }
    out
}

// Polar order of edge vectors starting at angle 0.
fn angle_cmp(a: &LatticePoint, b: &LatticePoint) -> Ordering {
    let half = |v: &LatticePoint| {
        if v.y().is_positive() || (v.y().is_zero() && v.x().is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross_vec(a, b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn from_bottom(p: &Polygon) -> Vec<LatticePoint> {
    let vs = &p.vertices;
    let start = (0..vs.len())
        .min_by(|&i, &j| (vs[i].y(), vs[i].x()).cmp(&(vs[j].y(), vs[j].x())))
        .unwrap();
    vs[start..].iter().chain(vs[..start].iter()).cloned().collect()
}

/// Minkowski sum by merging the edge sequences of both polygons in polar order.
pub fn minkowski_sum(p: &Polygon, q: &Polygon) -> Polygon {
    if p.vertices.len() == 1 {
        return q.translate(&p.vertices[0]);
    }
    if q.vertices.len() == 1 {
        return p.translate(&q.vertices[0]);
    }
    let a = from_bottom(p);
    let b = from_bottom(q);
    let edge_vecs = |v: &[LatticePoint]| -> Vec<LatticePoint> {
        (0..v.len()).map(|k| v[(k + 1) % v.len()].sub(&v[k])).collect()
    };
    let ea = edge_vecs(&a);
    let eb = edge_vecs(&b);
    let mut cur = a[0].add(&b[0]);
    let mut out = vec![cur.clone()];
    let (mut i, mut j) = (0, 0);
    while i < ea.len() || j < eb.len() {
        let ord = if i == ea.len() {
            Ordering::Greater
        } else if j == eb.len() {
            Ordering::Less
        } else {
            angle_cmp(&ea[i], &eb[j])
        };
        match ord {
            Ordering::Less => {
                cur = cur.add(&ea[i]);
                i += 1;
            }
            Ordering::Greater => {
                cur = cur.add(&eb[j]);
                j += 1;
            }
            Ordering::Equal => {
                cur = cur.add(&ea[i]).add(&eb[j]);
                i += 1;
                j += 1;
            }
        }
        out.push(cur.clone());
    }
    convex_hull(&out)
}

/// Bernstein count of two planar polygons (points and segments allowed).
pub fn mixed_volume2(p: &Polygon, q: &Polygon) -> BigInt {
    let total = normalized_area(&minkowski_sum(p, q)) - normalized_area(p) - normalized_area(q);
    debug_assert!(total.is_even());
    total / 2
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<BigInt>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m[(i, k)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn augment(&self, other: &IntMatrix) -> IntMatrix {
        self.transpose().stack(&other.transpose()).transpose()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss_det(self.to_rows())
    }

    pub fn rank(&self) -> usize {
        echelon_rank(self.to_rows())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "[{}]", self.row(i).iter().join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

fn echelon_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (f, g) = (a[rank][c].clone(), a[i][c].clone());
            for j in c..cols {
                let v = &a[i][j] * &f - &a[rank][j] * &g;
                a[i][j] = v;
            }
            let content = a[i].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if content > BigInt::one() {
                a[i].iter_mut().for_each(|x| *x /= &content);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Unimodular column reduction `M U = [L | 0]` with `L` lower-echelon.
/// Returns the reduced matrix, `U`, and the number of nonzero columns.
fn column_reduce(m: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let mut n = m.clone();
    let mut u = IntMatrix::identity(m.cols);
    let mut piv = 0;
    for i in 0..m.rows {
        if piv == m.cols {
            break;
        }
        loop {
            let best = (piv..m.cols)
                .filter(|&j| !n[(i, j)].is_zero())
                .min_by(|&a, &b| n[(i, a)].abs().cmp(&n[(i, b)].abs()));
            let Some(best) = best else { break };
            swap_cols(&mut n, piv, best);
            swap_cols(&mut u, piv, best);
            let mut done = true;
            for j in piv + 1..m.cols {
                if n[(i, j)].is_zero() {
                    continue;
                }
                let q = n[(i, j)].div_floor(&n[(i, piv)]);
                sub_col_multiple(&mut n, j, piv, &q);
                sub_col_multiple(&mut u, j, piv, &q);
                if !n[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !n[(i, piv)].is_zero() {
            piv += 1;
        }
    }
    (n, u, piv)
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows {
        let (x, y) = (i * m.cols + a, i * m.cols + b);
        m.data.swap(x, y);
    }
}

fn sub_col_multiple(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for i in 0..m.rows {
        let v = &m[(i, source)] * q;
        m[(i, target)] -= v;
    }
}

/// Row Hermite normal form of a full-row-rank matrix: positive pivots,
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let (h, _, _) = column_reduce(&m.transpose());
    let mut h = h.transpose();
    // `h` is upper-echelon on rows; normalize.
    let rows = h.rows;
    let cols = h.cols;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            for j in 0..cols {
                h[(r, j)] = -h[(r, j)].clone();
            }
        }
        let p = h[(r, c)].clone();
        for i in 0..r {
            let q = h[(i, c)].div_floor(&p);
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let v = &h[(r, j)] * &q;
                h[(i, j)] -= v;
            }
        }
        r += 1;
    }
    h
}

/// gcd of all maximal minors of a full-row-rank matrix with `rows <= cols`.
///
/// Enumerates column subsets for up to 24 columns and otherwise reads the
/// value off a unimodular column reduction.
pub fn gcd_maximal_minors(m: &IntMatrix) -> Result<BigInt> {
    let rank = m.rank();
    if rank < m.rows || m.rows > m.cols {
        return Err(Error::RankDeficient {
            expected: m.rows,
            found: rank,
        });
    }
    if m.cols <= 24 {
        Ok(gcd_minors_enumerated(m))
    } else {
        Ok(gcd_minors_reduced(m))
    }
}

pub(crate) fn gcd_minors_enumerated(m: &IntMatrix) -> BigInt {
    let mut g = BigInt::zero();
    for cols in (0..m.cols).combinations(m.rows) {
        g = g.gcd(&m.select_columns(&cols).det());
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn gcd_minors_reduced(m: &IntMatrix) -> BigInt {
    let (n, _, piv) = column_reduce(m);
    let l = n.select_columns(&(0..piv).collect::<Vec<_>>());
    l.det().abs()
}

/// Lattice basis of `ker(M) ∩ Z^m`, returned as the rows of a matrix in row
/// Hermite normal form. A matrix with trivial kernel yields zero rows.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let (_, u, piv) = column_reduce(m);
    let kcols: Vec<usize> = (piv..m.cols).collect();
    if kcols.is_empty() {
        return IntMatrix::zeros(0, m.cols);
    }
    hermite_rows(&u.select_columns(&kcols).transpose())
}

/// Exact rational Gauss-Jordan elimination. Returns the reduced rows and the
/// pivot columns.
pub fn rref(mut a: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let v = &a[r][j] * &f;
                a[i][j] -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Solve `A x = b` exactly. Returns one solution (free variables set to
/// zero) or `None` when the system is inconsistent.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &c) in red.iter().zip(&pivots) {
        x[c] = row[cols].clone();
    }
    Some(x)
}

pub fn to_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}
