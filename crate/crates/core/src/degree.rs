use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Multidegree of a discriminant cycle, one entry per block, together with
/// the reduced degree of the discriminant itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    /// Degrees of the cycle `Δ^{i(A)}`.
    pub cycle: Vec<BigInt>,
    /// `cycle / i(A)`, present when every entry divides exactly.
    pub reduced: Option<Vec<BigInt>>,
    pub lattice_index: BigInt,
    pub defective: bool,
}

impl Multidegree {
    pub fn new(cycle: Vec<BigInt>, lattice_index: BigInt) -> Self {
        let reduced = if lattice_index.is_zero() {
            None
        } else if cycle.iter().all(|c| c.is_multiple_of(&lattice_index)) {
            Some(cycle.iter().map(|c| c / &lattice_index).collect())
        } else {
            None
        };
        let defective = cycle.iter().all(|c| c.is_zero());
        Multidegree {
            cycle,
            reduced,
            lattice_index,
            defective,
        }
    }

    pub fn cycle_i64(&self) -> Vec<i64> {
        self.cycle.iter().map(|c| i64::try_from(c).unwrap_or(i64::MAX)).collect()
    }

    pub fn reduced_i64(&self) -> Option<Vec<i64>> {
        self.reduced
            .as_ref()
            .map(|r| r.iter().map(|c| i64::try_from(c).unwrap_or(i64::MAX)).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle ({})", self.cycle.iter().join(","))?;
        if let Some(r) = &self.reduced {
            write!(f, ", reduced ({})", r.iter().join(","))?;
        }
        write!(f, ", i(A) = {}", self.lattice_index)?;
        if self.defective {
            write!(f, ", defective")?;
        }
        Ok(())
    }
}
