//! Fraction-free determinants over exact integral domains.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::upoly::IntPoly;

/// The operations Bareiss elimination needs from an integral domain.
pub trait ExactRing: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; must fail rather than round.
    fn exact_div(&self, d: &Self) -> Result<Self>;
    /// Pivot cost; smaller is preferred.
    fn size(&self) -> usize;
}

impl ExactRing for IntPoly {
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Result<Self> {
        IntPoly::exact_div(self, d)
    }
    fn size(&self) -> usize {
        self.num_terms()
    }
}

impl ExactRing for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Result<Self> {
        LaurentPoly::exact_div(self, d)
    }
    fn size(&self) -> usize {
        self.num_terms()
    }
}

impl ExactRing for BigInt {
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Result<Self> {
        if num_traits::Zero::is_zero(d) {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = num_integer::Integer::div_rem(self, d);
        if !num_traits::Zero::is_zero(&r) {
            return Err(Error::NonexactDivision(format!("{self} / {d}")));
        }
        Ok(q)
    }
    fn size(&self) -> usize {
        self.bits() as usize
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    Ok(n)
}

/// Determinant by Bareiss elimination. `one` is the ring's unit, returned
/// for the empty matrix.
pub fn bareiss_det<T: ExactRing>(mut m: Vec<Vec<T>>, one: T) -> Result<T> {
    let n = check_square(&m)?;
    if n == 0 {
        return Ok(one);
    }
    let mut negate = false;
    let mut prev: Option<T> = None;
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].size());
        let Some(p) = pivot else {
            return Ok(one.sub(&one));
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = match &prev {
                    Some(d) => num.exact_div(d)?,
                    None => num,
                };
            }
        }
        prev = Some(m[k][k].clone());
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Determinant by Laplace expansion along the first row. Exponential; meant
/// for small matrices and as an independent check of [`bareiss_det`].
pub fn cofactor_det<T: ExactRing>(m: &[Vec<T>], one: &T) -> Result<T> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(one.clone());
    }
    if n > 9 {
        return Err(Error::TooLarge(format!(
            "cofactor expansion of a {n}x{n} matrix"
        )));
    }
    Ok(cofactor_rec(m, &(0..n).collect::<Vec<_>>(), 0, one))
}

fn cofactor_rec<T: ExactRing>(m: &[Vec<T>], cols: &[usize], row: usize, one: &T) -> T {
    if cols.is_empty() {
        return one.clone();
    }
    let mut acc: Option<T> = None;
    for (pos, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[row][c].mul(&cofactor_rec(m, &rest, row + 1, one));
        let term = if pos % 2 == 1 { term.neg() } else { term };
        acc = Some(match acc {
            None => term,
            Some(a) => a.sub(&term.neg()),
        });
    }
    acc.unwrap_or_else(|| one.sub(one))
}

/// Determinant over ℤ[H] by Bareiss elimination.
pub fn laurent_det(m: &[Vec<LaurentPoly>], rank: usize) -> Result<LaurentPoly> {
    bareiss_det(m.to_vec(), LaurentPoly::one(rank))
}

/// `zI - X` for the deck variable `z`, the last coordinate of ℤ[H].
pub fn z_minus(x: &[Vec<LaurentPoly>], rank: usize) -> Vec<Vec<LaurentPoly>> {
    let z = LaurentPoly::var(rank, rank - 1);
    x.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, p)| if i == j { &z - p } else { -p })
                .collect()
        })
        .collect()
}
