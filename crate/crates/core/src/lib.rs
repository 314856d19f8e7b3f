//! Exact multidegrees of mixed discriminants of sparse polynomial systems.
//!
//! Two independent routes compute the degree of the mixed discriminant
//! cycle of `n` supports `A_1, ..., A_n ⊂ Z^n`:
//!
//! * [`planar`]: the closed-form bidegree for two full-dimensional planar
//!   supports, built from areas, mixed volumes, strongly parallel edges and
//!   mixed multiplicities;
//! * [`tropical`]: ray shooting against the tropical discriminant, summing
//!   determinants over maximal chains of flats of the Gale dual matroid
//!   ([`matroid`]).
//!
//! [`strata`] fingerprints tropical matroid strata and produces degree
//! formulas that are linear in Plücker coordinates on a stratum.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod matroid;
pub mod planar;
pub mod strata;
pub mod tropical;

mod degree;

pub use cayley::{build_cayley, plucker, CayleySystem, PluckerVector, PointConfig};
pub use degree::Multidegree;
pub use error::{Error, Result};
pub use lattice::{IntMatrix, LatticePoint, Polygon};
