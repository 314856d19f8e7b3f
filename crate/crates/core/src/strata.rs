//! Tropical matroid strata and degree formulas in Plücker coordinates.
//!
//! Two Cayley systems lie in the same stratum when their dual matroids
//! agree and every augmented determinant
//! `det M(A,J,i) = det(A^T, e_{J_1}, ..., e_{J_{m-d-1}}, e_i)` has the same
//! sign. On a stratum each block degree is a fixed linear form in the
//! Plücker coordinates, unique modulo the forms `ξ ∧ e_{I_j}`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::cayley::{plucker, vanishing_forms, CayleySystem, PluckerVector};
use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::lattice::{rref, solve_rational, to_rational, IntMatrix};
use crate::matroid::{gale_dual, DualMatroid, FlagChain};
use crate::tropical::RayShooter;

/// Columns of `M(A,J,i)` after `A^T`: one indicator vector per flat, then
/// `e_i`.
fn augmentation(chain: &FlagChain, i: usize, m: usize) -> Vec<Vec<BigInt>> {
    let mut cols: Vec<Vec<BigInt>> = chain
        .masks()
        .iter()
        .map(|&f| (0..m).map(|j| BigInt::from((f >> j) & 1)).collect())
        .collect();
    cols.push((0..m).map(|j| BigInt::from((j == i) as i32)).collect());
    cols
}

/// `det M(A, J, i)` as an `m x m` determinant.
pub fn augmented_determinant(a: &IntMatrix, chain: &FlagChain, i: usize) -> BigInt {
    let m = a.cols();
    let mut cols: Vec<Vec<BigInt>> = (0..a.rows()).map(|r| a.row(r).to_vec()).collect();
    cols.extend(augmentation(chain, i, m));
    IntMatrix::from_columns(&cols, m).det()
}

/// `det M(A, J, i)` as a linear form in the Plücker coordinates of the row
/// span of `A`, by Laplace expansion along the first `d` columns. Keys are
/// `d`-subsets of `[m]`; zero coefficients are omitted.
pub fn determinant_form(d: usize, m: usize, chain: &FlagChain, i: usize) -> BTreeMap<Vec<usize>, BigInt> {
    let e = IntMatrix::from_columns(&augmentation(chain, i, m), m);
    let base_sign = d * (d + 1) / 2;
    let mut out = BTreeMap::new();
    for s in (0..m).combinations(d) {
        let rest: Vec<usize> = (0..m).filter(|j| !s.contains(j)).collect();
        let minor = e.select_rows(&rest).det();
        if minor.is_zero() {
            continue;
        }
        let parity = s.iter().map(|j| j + 1).sum::<usize>() + base_sign;
        out.insert(s, if parity.is_multiple_of(2) { minor } else { -minor });
    }
    out
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumFingerprint {
    /// `m`.
    pub ground_size: usize,
    /// Bases of `M*(A)` as bitmasks, increasing.
    pub matroid_id: Vec<u64>,
    /// Maximal chains in enumeration order.
    pub chains: Vec<FlagChain>,
    /// `signs[k][i]` is the sign of `det M(A, chains[k], i)`.
    pub signs: Vec<Vec<i8>>,
}

impl StratumFingerprint {
    pub fn sign(&self, chain: usize, column: usize) -> i8 {
        self.signs[chain][column]
    }

    /// Sign vector as a string of `+`, `-`, `0`, one row per chain.
    pub fn sign_string(&self) -> String {
        self.signs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| match s {
                        1 => '+',
                        -1 => '-',
                        _ => '0',
                    })
                    .collect::<String>()
            })
            .join("/")
    }
}

pub fn fingerprint(sys: &CayleySystem) -> Result<StratumFingerprint> {
    let a = sys.matrix();
    let matroid = DualMatroid::new(&gale_dual(a)?);
    let chains = matroid.maximal_chains();
    let m = a.cols();
    let signs = chains
        .par_iter()
        .map(|c| (0..m).map(|i| sign_of(&augmented_determinant(a, c, i))).collect())
        .collect();
    Ok(StratumFingerprint {
        ground_size: m,
        matroid_id: matroid.bases(),
        chains,
        signs,
    })
}

pub fn same_stratum(a: &StratumFingerprint, b: &StratumFingerprint) -> bool {
    a.ground_size == b.ground_size && a.matroid_id == b.matroid_id && a.signs == b.signs
}

/// A linear form on `∧^d R^m` giving one block degree on a stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFormula {
    pub block: usize,
    pub d: usize,
    pub m: usize,
    /// Coefficient of each Plücker coordinate `p_S`; zeros omitted.
    pub coefficients: BTreeMap<Vec<usize>, BigRational>,
    /// A basis of the span of the forms `ξ ∧ e_{I_j}`, which vanish on the
    /// mixed Grassmannian. Adding any combination of them does not change
    /// the value on a Cayley matrix.
    pub vanishing: Vec<Vec<BigRational>>,
}

impl DegreeFormula {
    pub fn evaluate(&self, p: &PluckerVector) -> BigRational {
        self.coefficients
            .iter()
            .map(|(s, c)| c * to_rational(p.get(s)))
            .sum()
    }

    /// Coefficient vector over all `d`-subsets in lexicographic order.
    pub fn dense(&self) -> Vec<BigRational> {
        (0..self.m)
            .combinations(self.d)
            .map(|s| self.coefficients.get(&s).cloned().unwrap_or_else(BigRational::zero))
            .collect()
    }

    pub fn terms(&self) -> usize {
        self.coefficients.len()
    }
}

impl fmt::Display for DegreeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (k, (s, c)) in self.coefficients.iter().enumerate() {
            let sub = s.iter().map(|j| j + 1).join(",");
            let (neg, abs) = (c.is_negative(), c.abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{abs}·p[{sub}]")?;
        }
        Ok(())
    }
}

/// Row-reduced basis of the span of the given integer forms.
fn span_basis(forms: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let rows = forms.iter().map(|f| f.iter().map(to_rational).collect()).collect();
    rref(rows).0
}

/// `c - V^T (V V^T)^{-1} V c`: the representative of `c + span(V)` closest
/// to the origin.
fn minimal_norm(c: &[BigRational], v: &[Vec<BigRational>]) -> Vec<BigRational> {
    if v.is_empty() {
        return c.to_vec();
    }
    let dot = |x: &[BigRational], y: &[BigRational]| -> BigRational {
        x.iter().zip(y).map(|(a, b)| a * b).sum()
    };
    let gram: Vec<Vec<BigRational>> = v.iter().map(|a| v.iter().map(|b| dot(a, b)).collect()).collect();
    let rhs: Vec<BigRational> = v.iter().map(|a| dot(a, c)).collect();
    let y = solve_rational(&gram, &rhs).expect("Gram matrix of a basis is invertible");
    let mut out = c.to_vec();
    for (coef, row) in y.iter().zip(v) {
        for (o, r) in out.iter_mut().zip(row) {
            *o -= coef * r;
        }
    }
    out
}

/// Linear degree formula for block `block` (0-based) on the stratum of the
/// samples.
///
/// The candidate form is read off the ray-shooting certificate of the first
/// sample: each contributing pair `(J, i)` adds `sign · det M(A,J,i)`
/// written in Plücker coordinates. It is then moved to the shortest
/// representative modulo the vanishing forms and must reproduce every
/// sample degree, and the held-out degree when given, exactly.
pub fn fit_degree_formula(
    samples: &[(CayleySystem, Multidegree)],
    block: usize,
    holdout: Option<(&CayleySystem, &Multidegree)>,
) -> Result<DegreeFormula> {
    let (first, _) = samples
        .first()
        .ok_or_else(|| Error::Input("at least one sample is required".into()))?;
    let (d, m, n) = (first.d(), first.m(), first.n());
    if block >= n {
        return Err(Error::Input(format!("block {} out of range 1..={n}", block + 1)));
    }
    let reference = fingerprint(first)?;
    for (k, (sys, _)) in samples.iter().enumerate().skip(1) {
        if sys.m() != m || sys.n() != n || !same_stratum(&reference, &fingerprint(sys)?) {
            return Err(Error::NoLinearFit(format!(
                "sample {} lies in a different stratum than sample 1",
                k + 1
            )));
        }
    }

    let shooter = RayShooter::new(first)?;
    let run = shooter.shoot_seeded(0)?;
    let p0 = plucker(first);
    let mut coeffs: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for c in run.contributions.iter().filter(|c| first.block_of(c.column) == block) {
        let form = determinant_form(d, m, &shooter.chains()[c.chain], c.column);
        let value: BigInt = form.iter().map(|(s, x)| x * p0.get(s)).sum();
        let sign = BigInt::from(sign_of(&value));
        for (s, x) in form {
            *coeffs.entry(s).or_insert_with(BigInt::zero) += &sign * x;
        }
    }
    let raw: Vec<BigRational> = (0..m)
        .combinations(d)
        .map(|s| coeffs.get(&s).map(to_rational).unwrap_or_else(BigRational::zero))
        .collect();
    let vanishing = span_basis(&vanishing_forms(first.blocks(), m, d));
    let canonical = minimal_norm(&raw, &vanishing);
    let formula = DegreeFormula {
        block,
        d,
        m,
        coefficients: (0..m)
            .combinations(d)
            .zip(canonical)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
        vanishing,
    };

    let check = |sys: &CayleySystem, deg: &Multidegree, what: String| -> Result<()> {
        let got = formula.evaluate(&plucker(sys));
        let want = to_rational(&deg.cycle[block]);
        if got != want {
            return Err(Error::NoLinearFit(format!("{what}: formula gives {got}, degree is {want}")));
        }
        Ok(())
    };
    for (k, (sys, deg)) in samples.iter().enumerate() {
        check(sys, deg, format!("sample {}", k + 1))?;
    }
    if let Some((sys, deg)) = holdout {
        if sys.m() != m || sys.n() != n {
            return Err(Error::NoLinearFit("held-out system has a different shape".into()));
        }
        check(sys, deg, "held-out sample".into())?;
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{build_cayley, PointConfig};
    use crate::tropical::tropical_degree;

    fn sparse(d1: i64, d2: i64) -> CayleySystem {
        build_cayley(vec![
            PointConfig::simplex_vertices(2, d1),
            PointConfig::simplex_vertices(2, d2),
        ])
        .unwrap()
    }

    #[test]
    fn sparse_pair_strata() {
        let a = fingerprint(&sparse(3, 2)).unwrap();
        let b = fingerprint(&sparse(5, 2)).unwrap();
        let c = fingerprint(&sparse(3, -2)).unwrap();
        let d = fingerprint(&sparse(5, -3)).unwrap();
        assert!(same_stratum(&a, &a));
        assert!(same_stratum(&a, &b));
        assert!(!same_stratum(&a, &c));
        assert!(same_stratum(&c, &d));
        assert_eq!(a.chains.len(), 3);
    }

    #[test]
    fn different_sizes_never_match() {
        let a = fingerprint(&sparse(3, 2)).unwrap();
        let sq = build_cayley(vec![PointConfig::unit_square(), PointConfig::unit_square()]).unwrap();
        assert!(!same_stratum(&a, &fingerprint(&sq).unwrap()));
    }

    #[test]
    fn laplace_form_matches_determinant() {
        let sys = sparse(3, -2);
        let p = plucker(&sys);
        let fp = fingerprint(&sys).unwrap();
        for chain in &fp.chains {
            for i in 0..sys.m() {
                let form = determinant_form(sys.d(), sys.m(), chain, i);
                let v: BigInt = form.iter().map(|(s, x)| x * p.get(s)).sum();
                assert_eq!(v, augmented_determinant(sys.matrix(), chain, i));
            }
        }
    }

    #[test]
    fn sparse_pair_determinants() {
        // the determinants are 0, ±d1(d1-d2) or ±d2(d1-d2)
        let (d1, d2) = (5i64, 3i64);
        let sys = sparse(d1, d2);
        let fp = fingerprint(&sys).unwrap();
        for chain in &fp.chains {
            for i in 0..6 {
                let v = augmented_determinant(sys.matrix(), chain, i).abs();
                let ok = [0, d1 * (d1 - d2), d2 * (d1 - d2)].map(BigInt::from);
                assert!(ok.contains(&v), "{v}");
            }
        }
    }

    #[test]
    fn fit_sparse_family() {
        let samples: Vec<_> = [(3, 2), (5, 2), (5, 3)]
            .into_iter()
            .map(|(a, b)| {
                let s = sparse(a, b);
                let d = tropical_degree(&s, 0).unwrap();
                (s, d)
            })
            .collect();
        let held = sparse(7, 3);
        let held_deg = tropical_degree(&held, 0).unwrap();
        for block in 0..2 {
            let f = fit_degree_formula(&samples, block, Some((&held, &held_deg))).unwrap();
            assert!(f.terms() > 0);
        }
    }

    #[test]
    fn fit_rejects_wrong_degrees_and_strata() {
        let s = sparse(3, 2);
        let mut d = tropical_degree(&s, 0).unwrap();
        d.cycle[0] += 1;
        assert!(matches!(
            fit_degree_formula(&[(s.clone(), d)], 0, None),
            Err(Error::NoLinearFit(_))
        ));
        let good = tropical_degree(&s, 0).unwrap();
        let other = sparse(3, -2);
        let od = tropical_degree(&other, 0).unwrap();
        assert!(matches!(
            fit_degree_formula(&[(s, good), (other, od)], 0, None),
            Err(Error::NoLinearFit(_))
        ));
    }

    #[test]
    fn vanishing_forms_do_not_change_values() {
        let s = sparse(3, 2);
        let d = tropical_degree(&s, 0).unwrap();
        let f = fit_degree_formula(&[(s.clone(), d.clone())], 0, None).unwrap();
        let p = plucker(&s);
        let base = f.evaluate(&p);
        let mut shifted = f.clone();
        for (k, row) in f.vanishing.iter().enumerate() {
            let w = BigRational::from_integer(BigInt::from(k as i64 + 2));
            for (s, c) in (0..f.m).combinations(f.d).zip(row) {
                *shifted.coefficients.entry(s).or_insert_with(BigRational::zero) += &w * c;
            }
        }
        assert_eq!(shifted.evaluate(&p), base);
        assert_eq!(base, to_rational(&d.cycle[0]));
    }
}
