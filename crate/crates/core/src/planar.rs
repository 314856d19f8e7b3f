//! Closed-form bidegree of the mixed discriminant of two plane curves.
//!
//! For full-dimensional supports `A_1, A_2 ⊂ Z^2` with hulls `Q_1, Q_2`,
//!
//! ```text
//! δ1 = area(Q_2) + 2 MV(Q_1,Q_2)
//!      - Σ_{(e,f) strongly parallel} min{u(e,A_1), u(f,A_2)} ℓ(f)
//!      - Σ_{v ∈ Vert A_1} mmult(v)
//! ```
//!
//! and symmetrically for `δ2`. Areas are normalized (primitive triangle = 1)
//! and `MV` is the Bernstein count. The result is the bidegree of the
//! discriminant cycle `Δ^{i(A)}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cayley::{affine_lattice_index, build_cayley, PointConfig};
use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::lattice::{
    boundary_lattice_points, convex_hull, cross_vec, lattice_points, mixed_volume2,
    normalized_area, LatticePoint, Polygon,
};

/// One edge of the hull of a planar support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub start: LatticePoint,
    pub end: LatticePoint,
    /// Primitive inner normal `η`.
    pub inner_normal: LatticePoint,
    /// Lattice length `ℓ(e)`.
    pub length: BigInt,
    /// Lattice distance `u(e, A)` from the edge to the nearest point of the
    /// support off the edge.
    pub height: BigInt,
}

impl EdgeData {
    /// Points of the support lying on this edge.
    pub fn points_on<'a>(&self, a: &'a PointConfig) -> Vec<&'a LatticePoint> {
        let level = self.inner_normal.dot(&self.start);
        a.points()
            .iter()
            .filter(|p| self.inner_normal.dot(p) == level)
            .collect()
    }
}

/// An edge of `Q_1` and an edge of `Q_2` with the same primitive inner
/// normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelPair {
    pub edge1: EdgeData,
    pub edge2: EdgeData,
}

pub fn hull(a: &PointConfig) -> Polygon {
    convex_hull(a.points())
}

fn require_planar(a: &PointConfig) -> Result<()> {
    if a.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "planar routines need points in Z^2, got Z^{}",
            a.dim()
        )));
    }
    Ok(())
}

fn require_full(a: &PointConfig) -> Result<Polygon> {
    require_planar(a)?;
    let q = hull(a);
    if q.is_full_dimensional() {
        Ok(q)
    } else {
        Err(Error::NotFullDimensional)
    }
}

/// Edge data of every hull edge, counterclockwise.
pub fn edge_data(a: &PointConfig) -> Result<Vec<EdgeData>> {
    let q = require_full(a)?;
    Ok(q.edges()
        .into_iter()
        .map(|(s, e)| {
            let dir = e.sub(&s);
            let length = dir.content();
            let normal = LatticePoint::new(vec![-dir.y() / &length, dir.x() / &length]);
            let level = normal.dot(&s);
            let height = a
                .points()
                .iter()
                .map(|p| normal.dot(p) - &level)
                .filter(|h| h.is_positive())
                .min()
                .expect("full-dimensional support has a point off every edge");
            EdgeData {
                start: s,
                end: e,
                inner_normal: normal,
                length,
                height,
            }
        })
        .collect())
}

pub fn strongly_parallel_pairs(a1: &PointConfig, a2: &PointConfig) -> Result<Vec<ParallelPair>> {
    let e1 = edge_data(a1)?;
    let e2 = edge_data(a2)?;
    let mut out = Vec::new();
    for e in &e1 {
        for f in &e2 {
            if e.inner_normal == f.inner_normal {
                out.push(ParallelPair {
                    edge1: e.clone(),
                    edge2: f.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// `mmult(v) = MV(Q_i, Q_j) - MV(conv(A_i \ v), Q_j)`.
pub fn mixed_multiplicity(v: &LatticePoint, ai: &PointConfig, aother: &PointConfig) -> BigInt {
    let qo = hull(aother);
    let full = mixed_volume2(&hull(ai), &qo);
    match ai.without(v) {
        Some(rest) => full - mixed_volume2(&hull(&rest), &qo),
        None => full,
    }
}

/// `Σ_{v ∈ Vert A_i} mmult(v)`.
pub fn vertex_multiplicity_sum(ai: &PointConfig, aother: &PointConfig) -> BigInt {
    hull(ai)
        .vertices()
        .iter()
        .map(|v| mixed_multiplicity(v, ai, aother))
        .sum()
}

/// Total lattice length of the edges of `A_j` that have no strongly
/// parallel partner in `A_i`.
pub fn unmatched_edge_length(aj: &PointConfig, ai: &PointConfig) -> Result<BigInt> {
    let normals: BTreeSet<LatticePoint> = edge_data(ai)?.into_iter().map(|e| e.inner_normal).collect();
    Ok(edge_data(aj)?
        .into_iter()
        .filter(|e| !normals.contains(&e.inner_normal))
        .map(|e| e.length)
        .sum())
}

struct PlanarData {
    area1: BigInt,
    area2: BigInt,
    mv: BigInt,
    pairs: Vec<ParallelPair>,
}

fn planar_data(a1: &PointConfig, a2: &PointConfig) -> Result<PlanarData> {
    require_planar(a1)?;
    require_planar(a2)?;
    let (q1, q2) = (hull(a1), hull(a2));
    if !q1.is_full_dimensional() || !q2.is_full_dimensional() {
        return Err(Error::OneDimensional);
    }
    Ok(PlanarData {
        area1: normalized_area(&q1),
        area2: normalized_area(&q2),
        mv: mixed_volume2(&q1, &q2),
        pairs: strongly_parallel_pairs(a1, a2)?,
    })
}

/// Bidegree of the principal determinant cycle of `Cay(A_1, A_2)`:
/// `(3a1 + a2 + 2MV, a1 + 3a2 + 2MV)`.
pub fn principal_bidegree(a1: &PointConfig, a2: &PointConfig) -> Result<(BigInt, BigInt)> {
    let d = planar_data(a1, a2)?;
    let two_mv = &d.mv * 2;
    Ok((
        &d.area1 * 3 + &d.area2 + &two_mv,
        &d.area1 + &d.area2 * 3 + &two_mv,
    ))
}

fn vertical_correction(pairs: &[ParallelPair]) -> (BigInt, BigInt) {
    let mut c1 = BigInt::zero();
    let mut c2 = BigInt::zero();
    for p in pairs {
        let u = (&p.edge1.height).min(&p.edge2.height).clone();
        c1 += &u * &p.edge2.length;
        c2 += &u * &p.edge1.length;
    }
    (c1, c2)
}

/// Closed-form bidegree of the mixed discriminant cycle.
///
/// Both supports must be full-dimensional; a segment input is rejected with
/// [`Error::OneDimensional`] (see [`one_dim_degree`]). The result is also
/// assembled from the face decomposition of the principal determinant and
/// the two routes must agree.
pub fn planar_bidegree(a1: &PointConfig, a2: &PointConfig) -> Result<Multidegree> {
    let d = planar_data(a1, a2)?;
    let two_mv = &d.mv * 2;
    let (c1, c2) = vertical_correction(&d.pairs);
    let delta1 = &d.area2 + &two_mv - c1 - vertex_multiplicity_sum(a1, a2);
    let delta2 = &d.area1 + &two_mv - c2 - vertex_multiplicity_sum(a2, a1);

    let (f1, f2) = face_decomposition_bidegree(a1, a2)?;
    if f1 != delta1 || f2 != delta2 {
        return Err(Error::Inconsistent(format!(
            "closed form ({delta1},{delta2}) != face decomposition ({f1},{f2})"
        )));
    }
    let sys = build_cayley(vec![a1.clone(), a2.clone()])?;
    Ok(Multidegree::new(vec![delta1, delta2], sys.lattice_index().clone()))
}

/// Discriminant cycle degree of a collinear support (any dimension of the
/// ambient lattice), from `deg E = 2ℓ` minus the two endpoint corrections.
pub fn segment_discriminant_degree(points: &[&LatticePoint]) -> BigInt {
    let base = points[0];
    let dir = points
        .iter()
        .map(|p| p.sub(base))
        .find(|v| !v.content().is_zero())
        .expect("segment support needs two points");
    let prim = {
        let g = dir.content();
        LatticePoint::new(dir.coords().iter().map(|c| c / &g).collect())
    };
    let k = prim
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap();
    let mut ts: Vec<BigInt> = points
        .iter()
        .map(|p| (p.coords()[k].clone() - &base.coords()[k]) / &prim.coords()[k])
        .collect();
    ts.sort();
    let len = ts.last().unwrap() - &ts[0];
    // u(endpoint) = ℓ - length(conv(S \ endpoint))
    let u_first = &ts[1] - &ts[0];
    let u_last = &ts[ts.len() - 1] - &ts[ts.len() - 2];
    len * 2 - u_first - u_last
}

/// Total degree of the discriminant cycle of a single full-dimensional
/// planar support: `3 area(Q) - Σ_e u(e,A) deg Δ_e - Σ_v u(v,A)` with
/// `u(v,A) = area(Q) - area(conv(A \ v))`.
pub fn curve_discriminant_degree(a: &PointConfig) -> Result<BigInt> {
    let q = require_full(a)?;
    let area = normalized_area(&q);
    let mut deg = &area * 3;
    for e in edge_data(a)? {
        deg -= &e.height * segment_discriminant_degree(&e.points_on(a));
    }
    for v in q.vertices() {
        deg -= vertex_area_drop(v, a, &area);
    }
    Ok(deg)
}

fn vertex_area_drop(v: &LatticePoint, a: &PointConfig, area: &BigInt) -> BigInt {
    match a.without(v) {
        Some(rest) => area - normalized_area(&hull(&rest)),
        None => area.clone(),
    }
}

/// Bidegree assembled face by face from the factorization of the principal
/// determinant cycle: the horizontal facets `A_1`, `A_2`, their edges and
/// vertices, and the vertical trapezoids of strongly parallel edges.
pub fn face_decomposition_bidegree(a1: &PointConfig, a2: &PointConfig) -> Result<(BigInt, BigInt)> {
    let (p1, p2) = principal_bidegree(a1, a2)?;
    let d = planar_data(a1, a2)?;
    let horizontal = |ai: &PointConfig, aj: &PointConfig| -> Result<BigInt> {
        let q = hull(ai);
        let area = normalized_area(&q);
        let mut total = curve_discriminant_degree(ai)?;
        for e in edge_data(ai)? {
            total += &e.height * segment_discriminant_degree(&e.points_on(ai));
        }
        for v in q.vertices() {
            // u(v, A) = u(v, A_i) + mmult(v)
            total += vertex_area_drop(v, ai, &area) + mixed_multiplicity(v, ai, aj);
        }
        Ok(total)
    };
    let (c1, c2) = vertical_correction(&d.pairs);
    Ok((
        p1 - horizontal(a1, a2)? - c1,
        p2 - horizontal(a2, a1)? - c2,
    ))
}

/// Upper bound `area(Q_j) + 2MV - perim(Q_j)` and the two sufficient
/// conditions for equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub bound: [BigInt; 2],
    pub bidegree: [BigInt; 2],
    pub equality: [bool; 2],
    /// `i(A_1) = i(A_2) = 1` and the toric surfaces of `A_1`, `A_2`,
    /// `A_1 + A_2` are smooth.
    pub smooth_unimodular: bool,
    /// Same normal fan and one of the supports is dense.
    pub same_fan_one_dense: bool,
}

pub fn bidegree_upper_bound(a1: &PointConfig, a2: &PointConfig) -> Result<BoundReport> {
    let d = planar_data(a1, a2)?;
    let (q1, q2) = (hull(a1), hull(a2));
    let two_mv = &d.mv * 2;
    let bound = [
        &d.area2 + &two_mv - boundary_lattice_points(&q2),
        &d.area1 + &two_mv - boundary_lattice_points(&q1),
    ];
    let deg = planar_bidegree(a1, a2)?;
    let bidegree = [deg.cycle[0].clone(), deg.cycle[1].clone()];
    let equality = [bidegree[0] == bound[0], bidegree[1] == bound[1]];
    let smooth_unimodular = affine_lattice_index(a1).is_one()
        && affine_lattice_index(a2).is_one()
        && is_smooth(a1)?
        && is_smooth(a2)?
        && is_smooth(&minkowski_config(a1, a2))?;
    let same_fan_one_dense = same_normal_fan(a1, a2)? && (is_dense(a1) || is_dense(a2));
    Ok(BoundReport {
        bound,
        bidegree,
        equality,
        smooth_unimodular,
        same_fan_one_dense,
    })
}

/// `A = conv(A) ∩ Z^2`.
pub fn is_dense(a: &PointConfig) -> bool {
    lattice_points(&hull(a)).len() == a.len()
}

fn normals(a: &PointConfig) -> Result<BTreeSet<LatticePoint>> {
    Ok(edge_data(a)?.into_iter().map(|e| e.inner_normal).collect())
}

pub fn same_normal_fan(a1: &PointConfig, a2: &PointConfig) -> Result<bool> {
    Ok(normals(a1)? == normals(a2)?)
}

/// Smoothness of the toric surface of a full-dimensional support: at every
/// hull vertex, the first support points along the two incident edges span
/// the lattice generated by the support.
pub fn is_smooth(a: &PointConfig) -> Result<bool> {
    let q = require_full(a)?;
    let index = affine_lattice_index(a);
    let pts: BTreeSet<&LatticePoint> = a.points().iter().collect();
    let vs = q.vertices();
    let k = vs.len();
    let first_step = |v: &LatticePoint, w: &LatticePoint| -> LatticePoint {
        let dir = w.sub(v);
        let g = dir.content();
        let prim = LatticePoint::new(dir.coords().iter().map(|c| c / &g).collect());
        let mut step = prim.clone();
        while !pts.contains(&v.add(&step)) {
            step = step.add(&prim);
        }
        step
    };
    for i in 0..k {
        let v = &vs[i];
        let next = first_step(v, &vs[(i + 1) % k]);
        let prev = first_step(v, &vs[(i + k - 1) % k]);
        if cross_vec(&next, &prev).abs() != index {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The support `A_1 + A_2 = {a + b}`.
pub fn minkowski_config(a1: &PointConfig, a2: &PointConfig) -> PointConfig {
    let sums: BTreeSet<LatticePoint> = a1
        .points()
        .iter()
        .flat_map(|a| a2.points().iter().map(move |b| a.add(b)))
        .collect();
    PointConfig::new(sums.into_iter().collect(), "A1+A2").unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OneDimCase {
    NoParallelEdge,
    OneParallelEdge,
    TwoParallelEdges,
}

/// `A_2`-degree when `A_2` spans a segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimDegree {
    pub delta2: BigInt,
    pub case: OneDimCase,
    pub defective: bool,
}

/// `δ2 = area(Q_1) - Σ_{e ∥ Q_2} u(e, A_1) ℓ(e)` for a full-dimensional
/// `A_1` and a one-dimensional `A_2`.
///
/// With no edge of `Q_1` parallel to `Q_2` the pair is never defective.
/// With one or two parallel edges, `δ2 = 0` happens exactly when the
/// Cayley configuration is a pyramid, or a Cayley lift of three segments,
/// and both are defective.
pub fn one_dim_degree(a1: &PointConfig, a2: &PointConfig) -> Result<OneDimDegree> {
    let q1 = require_full(a1)?;
    require_planar(a2)?;
    let q2 = hull(a2);
    if q2.dimension() != 1 {
        return Err(Error::NotASegment);
    }
    let dir = q2.vertices()[1].sub(&q2.vertices()[0]);
    let parallel: Vec<EdgeData> = edge_data(a1)?
        .into_iter()
        .filter(|e| cross_vec(&e.end.sub(&e.start), &dir).is_zero())
        .collect();
    let mut delta2 = normalized_area(&q1);
    for e in &parallel {
        delta2 -= &e.height * &e.length;
    }
    let case = match parallel.len() {
        0 => OneDimCase::NoParallelEdge,
        1 => OneDimCase::OneParallelEdge,
        _ => OneDimCase::TwoParallelEdges,
    };
    let defective = delta2.is_zero();
    Ok(OneDimDegree {
        delta2,
        case,
        defective,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectReason {
    /// Both supports are the vertex sets of translated lattice triangles.
    TranslatedTriangles,
    /// The hull of the given block (1-based) is not a triangle.
    NotTriangle(usize),
    /// The given block has points besides the triangle's vertices.
    ExtraPoints(usize),
    /// Two triangles, but not translates of each other.
    NotTranslate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlanarDefect {
    pub defective: bool,
    pub reason: DefectReason,
}

/// Exact defectiveness test for two full-dimensional planar supports: the
/// pair is defective exactly when both are the vertices of lattice
/// triangles and one is a translate of the other.
pub fn planar_defective(a1: &PointConfig, a2: &PointConfig) -> Result<PlanarDefect> {
    require_full(a1)?;
    require_full(a2)?;
    for (k, a) in [a1, a2].into_iter().enumerate() {
        if hull(a).vertices().len() != 3 {
            return Ok(PlanarDefect {
                defective: false,
                reason: DefectReason::NotTriangle(k + 1),
            });
        }
        if a.len() != 3 {
            return Ok(PlanarDefect {
                defective: false,
                reason: DefectReason::ExtraPoints(k + 1),
            });
        }
    }
    let s1: BTreeSet<&LatticePoint> = a1.points().iter().collect();
    let s2: BTreeSet<LatticePoint> = a2.points().iter().cloned().collect();
    let t = s2.iter().next().unwrap().sub(s1.iter().next().unwrap());
    let moved: BTreeSet<LatticePoint> = s1.iter().map(|p| p.add(&t)).collect();
    let defective = moved == s2;
    Ok(PlanarDefect {
        defective,
        reason: if defective {
            DefectReason::TranslatedTriangles
        } else {
            DefectReason::NotTranslate
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn square_triangle() -> (PointConfig, PointConfig) {
        (
            PointConfig::unit_square(),
            PointConfig::from_pairs(&[(0, 0), (1, 3), (-1, 2), (0, 1), (0, 2)]),
        )
    }

    #[test]
    fn edge_data_dense_square() {
        let e = edge_data(&PointConfig::unit_square()).unwrap();
        assert_eq!(e.len(), 4);
        assert!(e.iter().all(|e| e.length == n(1) && e.height == n(1)));
    }

    #[test]
    fn edge_data_sparse_triangle() {
        let e = edge_data(&PointConfig::simplex_vertices(2, 2)).unwrap();
        assert_eq!(e.len(), 3);
        assert!(e.iter().all(|e| e.length == n(2) && e.height == n(2)));
    }

    #[test]
    fn edge_data_square_triangle() {
        let (_, a2) = square_triangle();
        let e = edge_data(&a2).unwrap();
        assert_eq!(e.len(), 3);
        // Every hull edge is primitive and (0,1), (0,2) lie at lattice
        // distance 1 from the three edges.
        assert!(e.iter().all(|e| e.length == n(1) && e.height == n(1)));
    }

    #[test]
    fn non_full_dimensional_edge_data_fails() {
        let seg = PointConfig::from_pairs(&[(0, 0), (1, 1)]);
        assert!(matches!(edge_data(&seg), Err(Error::NotFullDimensional)));
    }

    #[test]
    fn parallel_pairs() {
        let sq = PointConfig::unit_square();
        assert_eq!(strongly_parallel_pairs(&sq, &sq).unwrap().len(), 4);
        let a = PointConfig::simplex_vertices(2, 2);
        let b = PointConfig::simplex_vertices(2, -3);
        assert!(strongly_parallel_pairs(&a, &b).unwrap().is_empty());
        let b = PointConfig::simplex_vertices(2, 3);
        assert_eq!(strongly_parallel_pairs(&a, &b).unwrap().len(), 3);
    }

    #[test]
    fn mixed_multiplicities() {
        let (d1, d2) = (2, 3);
        let a1 = PointConfig::dense_triangle(d1);
        let a2 = PointConfig::dense_triangle(-d2);
        for v in hull(&a1).vertices() {
            assert_eq!(mixed_multiplicity(v, &a1, &a2), n(d2));
        }
        for v in hull(&a2).vertices() {
            assert_eq!(mixed_multiplicity(v, &a2, &a1), n(d1));
        }
        let (sq, a2) = square_triangle();
        let origin = LatticePoint::from_i64(&[0, 0]);
        assert_eq!(mixed_multiplicity(&origin, &a2, &sq), n(1));
        let reduced = a2.without(&LatticePoint::from_i64(&[0, 1])).unwrap();
        assert_eq!(mixed_multiplicity(&origin, &reduced, &sq), n(2));
        // interior points never matter
        assert_eq!(mixed_multiplicity(&LatticePoint::from_i64(&[0, 2]), &a2, &sq), n(0));
    }

    #[test]
    fn bidegree_examples() {
        let sq = PointConfig::unit_square();
        let d = planar_bidegree(&sq, &sq).unwrap();
        assert_eq!(d.cycle, vec![n(2), n(2)]);
        assert_eq!(d.lattice_index, n(1));

        let (a1, a2) = square_triangle();
        assert_eq!(planar_bidegree(&a1, &a2).unwrap().cycle, vec![n(12), n(8)]);
        let a2r = a2.without(&LatticePoint::from_i64(&[0, 1])).unwrap();
        assert_eq!(planar_bidegree(&a1, &a2r).unwrap().cycle, vec![n(12), n(7)]);

        let dense = PointConfig::dense_triangle(2);
        assert_eq!(planar_bidegree(&dense, &dense).unwrap().cycle, vec![n(6), n(6)]);

        let s2 = PointConfig::simplex_vertices(2, 2);
        let s3 = PointConfig::simplex_vertices(2, 3);
        assert_eq!(planar_bidegree(&s2, &s3).unwrap().cycle, vec![n(3), n(4)]);
    }

    #[test]
    fn bidegree_rejects_segments() {
        let seg = PointConfig::from_pairs(&[(0, 0), (0, 1)]);
        assert!(matches!(
            planar_bidegree(&PointConfig::unit_square(), &seg),
            Err(Error::OneDimensional)
        ));
    }

    #[test]
    fn principal_examples() {
        let sq = PointConfig::unit_square();
        assert_eq!(principal_bidegree(&sq, &sq).unwrap(), (n(12), n(12)));
        let t = PointConfig::simplex_vertices(2, 1);
        assert_eq!(principal_bidegree(&t, &t).unwrap(), (n(6), n(6)));
        let a = PointConfig::simplex_vertices(2, 2);
        let b = PointConfig::simplex_vertices(2, -1);
        // areas 4 and 1, MV(2σ, -σ) = 4
        assert_eq!(principal_bidegree(&a, &b).unwrap(), (n(21), n(15)));
    }

    #[test]
    fn curve_discriminant_degrees() {
        // a plane curve of degree d has a discriminant of degree 3(d-1)^2
        for d in 1..=4 {
            let a = PointConfig::dense_triangle(d);
            assert_eq!(curve_discriminant_degree(&a).unwrap(), n(3 * (d - 1) * (d - 1)));
        }
        // the sparse triangle is defective
        assert_eq!(
            curve_discriminant_degree(&PointConfig::simplex_vertices(2, 2)).unwrap(),
            n(0)
        );
        // 2x2x? : the bilinear form a + bx + cy + dxy has discriminant ad - bc
        assert_eq!(curve_discriminant_degree(&PointConfig::unit_square()).unwrap(), n(2));
    }

    #[test]
    fn segment_degrees() {
        let p = |x: i64| LatticePoint::from_i64(&[x, 0]);
        let dense: Vec<LatticePoint> = (0..=3).map(p).collect();
        let refs: Vec<&LatticePoint> = dense.iter().collect();
        assert_eq!(segment_discriminant_degree(&refs), n(4));
        let ends = [p(0), p(3)];
        assert_eq!(segment_discriminant_degree(&ends.iter().collect::<Vec<_>>()), n(0));
    }

    #[test]
    fn upper_bound_reports() {
        let sq = PointConfig::unit_square();
        let r = bidegree_upper_bound(&sq, &sq).unwrap();
        assert_eq!(r.bound, [n(2), n(2)]);
        assert_eq!(r.equality, [true, true]);
        assert!(r.same_fan_one_dense);

        let (a1, a2) = square_triangle();
        let r = bidegree_upper_bound(&a1, &a2).unwrap();
        assert_eq!(r.bound, [n(12), n(8)]);
        assert_eq!(r.equality, [true, true]);
        assert!(!r.smooth_unimodular);
        assert!(!r.same_fan_one_dense);

        let r = bidegree_upper_bound(
            &PointConfig::simplex_vertices(2, 2),
            &PointConfig::simplex_vertices(2, 3),
        )
        .unwrap();
        assert!(r.bidegree[0] < r.bound[0] && r.bidegree[1] < r.bound[1]);
    }

    #[test]
    fn one_dimensional_cases() {
        let vertical = PointConfig::from_pairs(&[(0, 0), (0, 1)]);
        let r = one_dim_degree(&PointConfig::unit_square(), &vertical).unwrap();
        assert_eq!(r.delta2, n(0));
        assert_eq!(r.case, OneDimCase::TwoParallelEdges);
        assert!(r.defective);

        let slanted = PointConfig::from_pairs(&[(0, 0), (1, 2)]);
        let r = one_dim_degree(&PointConfig::simplex_vertices(2, 1), &slanted).unwrap();
        assert_eq!(r.delta2, n(1));
        assert_eq!(r.case, OneDimCase::NoParallelEdge);
        assert!(!r.defective);

        // pyramid: one parallel edge and a single point off it
        let tri = PointConfig::from_pairs(&[(0, 0), (1, 0), (2, 0), (0, 1)]);
        let horizontal = PointConfig::from_pairs(&[(0, 0), (1, 0)]);
        let r = one_dim_degree(&tri, &horizontal).unwrap();
        assert_eq!(r.case, OneDimCase::OneParallelEdge);
        assert_eq!(r.delta2, n(0));
        assert!(r.defective);

        let trap = PointConfig::from_pairs(&[(0, 0), (1, 0), (0, 1), (2, 1)]);
        let r = one_dim_degree(&trap, &horizontal).unwrap();
        assert_eq!(r.delta2, n(0));
        assert_eq!(r.case, OneDimCase::TwoParallelEdges);

        assert!(matches!(
            one_dim_degree(&trap, &PointConfig::unit_square()),
            Err(Error::NotASegment)
        ));
    }

    #[test]
    fn defectiveness_classifier() {
        let a = PointConfig::simplex_vertices(2, 2);
        let b = a.translate(&LatticePoint::from_i64(&[5, 7]));
        let r = planar_defective(&a, &b).unwrap();
        assert!(r.defective);
        assert_eq!(planar_bidegree(&a, &b).unwrap().cycle, vec![n(0), n(0)]);

        let r = planar_defective(&a, &PointConfig::simplex_vertices(2, 3)).unwrap();
        assert_eq!(r.reason, DefectReason::NotTranslate);
        let r = planar_defective(&a, &PointConfig::simplex_vertices(2, -2)).unwrap();
        assert!(!r.defective);
        let r = planar_defective(&PointConfig::unit_square(), &a).unwrap();
        assert_eq!(r.reason, DefectReason::NotTriangle(1));
        let r = planar_defective(&a, &PointConfig::dense_triangle(2)).unwrap();
        assert_eq!(r.reason, DefectReason::ExtraPoints(2));
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth(&PointConfig::unit_square()).unwrap());
        assert!(is_smooth(&PointConfig::dense_triangle(3)).unwrap());
        let (_, a2) = square_triangle();
        assert!(!is_smooth(&a2).unwrap());
        assert!(is_dense(&a2));
        assert!(!is_dense(&PointConfig::simplex_vertices(2, 2)));
    }
}
