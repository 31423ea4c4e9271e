//! Complex roots of integer polynomials.
//!
//! Initial guesses come from the eigenvalues of the companion matrix; they
//! are refined simultaneously with the Aberth–Ehrlich iteration and then
//! polished by Newton steps on the exact integer polynomial.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::upoly::IntPoly;

const ABERTH_TOL: f64 = 1e-12;
const ABERTH_MAX_ITER: usize = 500;

/// All complex roots with multiplicity. Zero roots are returned as exact
/// zeros.
pub fn roots(p: &IntPoly) -> Result<Vec<Complex64>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let zeros = p
        .coeffs()
        .iter()
        .take_while(|c| num_traits::Zero::is_zero(*c))
        .count();
    let coeffs: Vec<f64> = p.to_f64_coeffs()[zeros..].to_vec();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::RootFinding("coefficient does not fit in f64".into()));
    }
    let mut out = vec![Complex64::new(0.0, 0.0); zeros];
    let n = deg - zeros;
    if n == 0 {
        return Ok(out);
    }
    let mut z = companion_eigenvalues(&coeffs);
    aberth(&coeffs, &mut z);
    for r in z.iter_mut() {
        *r = newton_polish(&coeffs, *r);
    }
    out.extend(z);
    Ok(out)
}

fn companion_eigenvalues(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    if n == 1 {
        return vec![Complex64::new(-coeffs[0] / lead, 0.0)];
    }
    let mut c = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        c[(i, n - 1)] = -coeffs[i] / lead;
    }
    let eig = c.complex_eigenvalues();
    let mut z: Vec<Complex64> = eig.iter().copied().collect();
    // Aberth needs pairwise distinct starting points.
    for i in 0..z.len() {
        for j in 0..i {
            if (z[i] - z[j]).norm() < 1e-9 {
                z[i] += Complex64::new(1e-7 * (i as f64 + 1.0), 1e-7);
            }
        }
    }
    z
}

/// `(p(x), p'(x))` by Horner.
fn eval_with_derivative(coeffs: &[f64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

fn aberth(coeffs: &[f64], z: &mut [Complex64]) {
    let n = z.len();
    for _ in 0..ABERTH_MAX_ITER {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !w.is_finite() {
                continue;
            }
            z[i] -= w;
            max_step = max_step.max(w.norm() / z[i].norm().max(1.0));
        }
        if max_step < ABERTH_TOL {
            break;
        }
    }
}

fn newton_polish(coeffs: &[f64], mut x: Complex64) -> Complex64 {
    for _ in 0..3 {
        let (p, dp) = eval_with_derivative(coeffs, x);
        if dp.norm() == 0.0 || p.norm() == 0.0 {
            break;
        }
        let next = x - p / dp;
        let (pn, _) = eval_with_derivative(coeffs, next);
        if pn.norm() < p.norm() {
            x = next;
        } else {
            break;
        }
    }
    x
}

/// Largest root modulus; 0 for constants.
pub fn max_modulus(p: &IntPoly) -> Result<f64> {
    Ok(roots(p)?.iter().map(|r| r.norm()).fold(0.0, f64::max))
}
