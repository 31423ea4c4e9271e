//! Geometric and homological stretch factors.

use crate::error::{Error, Result};
use crate::graph::GraphMap;
use crate::matrices::{char_poly, irreducibility_report, monodromy_char_poly, transition_matrix};
use crate::roots::max_modulus;

const PERRON_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricStretch {
    pub value: f64,
    /// False when the transition matrix is not primitive; `value` is then
    /// just the spectral radius.
    pub primitive: bool,
}

/// Perron root of the transition matrix.
///
/// The spectral radius of a nonnegative matrix is a real eigenvalue lying
/// between the smallest and largest column sums, so it is the largest real
/// root of `char(A)` in that bracket.
pub fn geometric_stretch(f: &GraphMap) -> Result<GeometricStretch> {
    let a = transition_matrix(f);
    let report = irreducibility_report(&a)?;
    let sums: Vec<i64> = (0..a.ncols()).map(|j| a.col_sum(j)).collect();
    let lo = *sums.iter().min().expect("nonempty") as f64 - 1.0;
    let hi = *sums.iter().max().expect("nonempty") as f64 + 1.0;
    let p = char_poly(&a)?;
    let value = p
        .largest_real_root(lo, hi, PERRON_TOL)
        .ok_or_else(|| Error::RootFinding("no real root in the column-sum bracket".into()))?;
    Ok(GeometricStretch {
        value,
        primitive: report.primitive,
    })
}

/// Spectral radius of `f_*` on `H_1(G)`.
pub fn homological_stretch(f: &GraphMap) -> Result<f64> {
    max_modulus(&monodromy_char_poly(f)?)
}
