//! Dense univariate integer polynomials in `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial with coefficients stored in ascending degree.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// From ascending `i64` coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `t`.
    pub fn t() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    /// `t - c`.
    pub fn t_minus(c: i64) -> Self {
        IntPoly::from_i64(&[-c, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `t^deg · p(1/t)`.
    pub fn reversed(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Exact quotient; fails if the division leaves a remainder.
    pub fn exact_div(&self, d: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_exact_lead(d)?;
        if !r.is_zero() {
            return Err(Error::NonexactDivision(format!(
                "({self}) / ({d}) leaves {r}"
            )));
        }
        Ok(q)
    }

    /// Long division where every leading-coefficient quotient must be exact.
    fn div_rem_exact_lead(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (qc, rem) = r[k].div_rem(&dl);
            if !rem.is_zero() {
                return Err(Error::NonexactDivision(format!(
                    "({self}) / ({d}): leading coefficient {} not divisible by {dl}",
                    r[k]
                )));
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= &qc * dc;
            }
            q[k - dd] = qc;
        }
        Ok((IntPoly::new(q), IntPoly::new(r)))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Coefficients as `f64`, ascending.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Squarefree part, normalized to a primitive polynomial with positive
    /// leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let p = to_rational(self);
        let g = rat_gcd(p.clone(), rat_derivative(&p));
        let (q, _) = rat_div_rem(&p, &g);
        primitive_part(&q)
    }

    /// Largest real root, isolated with a Sturm sequence and bisected over
    /// exact rationals until the bracket is narrower than `tol`.
    ///
    /// `upper` must bound every real root from above and `lower` must lie
    /// strictly below the largest one.
    pub fn largest_real_root(&self, lower: f64, upper: f64, tol: f64) -> Option<f64> {
        let sf = self.squarefree_part();
        if sf.degree().unwrap_or(0) == 0 {
            return None;
        }
        let sturm = sturm_sequence(&sf);
        let count_above = |x: &BigRational| sign_variations(&sturm, x);
        let mut lo = rational_from_f64(lower);
        let mut hi = rational_from_f64(upper);
        let v_hi = count_above(&hi);
        if count_above(&lo) <= v_hi {
            return None;
        }
        let tol = rational_from_f64(tol);
        let two = BigRational::from_integer(BigInt::from(2));
        while &hi - &lo > tol {
            let mid = (&lo + &hi) / &two;
            // Roots in (mid, hi] = V(mid) - V(hi).
            if count_above(&mid) > v_hi {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(((lo + hi) / two).to_f64().unwrap_or(f64::NAN))
    }
}

fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite bound")
}

fn to_rational(p: &IntPoly) -> Vec<BigRational> {
    p.coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn rat_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rat_derivative(p: &[BigRational]) -> Vec<BigRational> {
    rat_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

fn rat_div_rem(p: &[BigRational], d: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = p.to_vec();
    let dd = d.len() - 1;
    if r.len() <= dd {
        return (Vec::new(), rat_trim(r));
    }
    let mut q = vec![BigRational::zero(); r.len() - dd];
    let dl = d[dd].clone();
    for k in (dd..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let qc = &r[k] / &dl;
        for (j, dc) in d.iter().enumerate() {
            r[k - dd + j] = &r[k - dd + j] - &qc * dc;
        }
        q[k - dd] = qc;
    }
    (rat_trim(q), rat_trim(r))
}

fn rat_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    a = rat_trim(a);
    b = rat_trim(b);
    while !b.is_empty() {
        let (_, r) = rat_div_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn primitive_part(p: &[BigRational]) -> IntPoly {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    IntPoly::new(out)
}

fn sturm_sequence(p: &IntPoly) -> Vec<Vec<BigRational>> {
    let mut seq = vec![to_rational(p), rat_derivative(&to_rational(p))];
    loop {
        let n = seq.len();
        let (_, r) = rat_div_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn sign_variations(seq: &[Vec<BigRational>], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = p
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64, c)),
            "t",
        )
    }
}

/// Renders terms given in display order as `t^4 - 6t^3 + 7t^2 - 3t + 1`.
pub(crate) fn write_univariate<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let mon = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mon.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mon}")?;
        } else {
            write!(f, "{mag}{mon}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let p = &IntPoly::t_minus(2) * &IntPoly::t_minus(1);
        assert_eq!(
            p.exact_div(&IntPoly::t_minus(1)).unwrap(),
            IntPoly::t_minus(2)
        );
        assert!(matches!(
            IntPoly::from_i64(&[1, 0, 1]).exact_div(&IntPoly::t_minus(1)),
            Err(Error::NonexactDivision(_))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPoly::from_i64(&[1, -3, 7, -6, 1]).to_string(),
            "t^4 - 6t^3 + 7t^2 - 3t + 1"
        );
        assert_eq!(IntPoly::t_minus(2).to_string(), "t - 2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn largest_real_root_with_repeated_factor() {
        // (t - 2)^2 (t + 3): no sign change at 2, still found.
        let p = &IntPoly::t_minus(2).pow(2) * &IntPoly::from_i64(&[3, 1]);
        let r = p.largest_real_root(-10.0, 10.0, 1e-12).unwrap();
        assert!((r - 2.0).abs() < 1e-10);
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let p = &IntPoly::t_minus(1).pow(3) * &IntPoly::t_minus(5);
        assert_eq!(
            p.squarefree_part(),
            &IntPoly::t_minus(1) * &IntPoly::t_minus(5)
        );
    }

    #[test]
    fn negate_variable_and_reverse() {
        let p = IntPoly::from_i64(&[-1, -3, 1, 1]);
        assert_eq!(p.negate_variable(), IntPoly::from_i64(&[-1, 3, 1, -1]));
        assert_eq!(p.reversed(), IntPoly::from_i64(&[1, 1, -3, -1]));
    }
}
