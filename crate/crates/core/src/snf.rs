//! Unimodular diagonalization and Hermite normal form for small integer
//! matrices.

use crate::error::{Error, Result};

type Mat = Vec<Vec<i64>>;

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn ck(x: Option<i64>) -> Result<i64> {
    x.ok_or(Error::Overflow("integer matrix reduction"))
}

/// `row[dst] -= q * row[src]`.
fn row_axpy(m: &mut Mat, dst: usize, src: usize, q: i64) -> Result<()> {
    for j in 0..m[dst].len() {
        let t = ck(q.checked_mul(m[src][j]))?;
        m[dst][j] = ck(m[dst][j].checked_sub(t))?;
    }
    Ok(())
}

fn col_axpy(m: &mut Mat, dst: usize, src: usize, q: i64) -> Result<()> {
    for row in m.iter_mut() {
        let t = ck(q.checked_mul(row[src]))?;
        row[dst] = ck(row[dst].checked_sub(t))?;
    }
    Ok(())
}

fn swap_cols(m: &mut Mat, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonalization {
    pub u: Mat,
    pub v: Mat,
    pub diagonal: Vec<i64>,
    pub rank: usize,
}

/// Diagonalizes an `m×n` integer matrix by row and column operations. The
/// nonzero diagonal entries come first; they are not forced into the
/// divisibility chain of the Smith form, which nothing here needs.
pub fn diagonalize(a: &[Vec<i64>], ncols: usize) -> Result<Diagonalization> {
    let m = a.len();
    let n = ncols;
    let mut d: Mat = a.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0
                    && best.is_none_or(|(bi, bj)| d[i][j].unsigned_abs() < d[bi][bj].unsigned_abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = d[i][t].div_euclid(p);
                if q != 0 {
                    row_axpy(&mut d, i, t, q)?;
                    row_axpy(&mut u, i, t, q)?;
                }
                if d[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = d[t][j].div_euclid(p);
                if q != 0 {
                    col_axpy(&mut d, j, t, q)?;
                    col_axpy(&mut v, j, t, q)?;
                }
                if d[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // A remainder survived: move the smallest entry of row/column t
            // to the pivot and repeat.
            let mut best = (t, t);
            for i in t + 1..m {
                if d[i][t] != 0 && d[i][t].unsigned_abs() < d[best.0][best.1].unsigned_abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..n {
                if d[t][j] != 0 && d[t][j].unsigned_abs() < d[best.0][best.1].unsigned_abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                d.swap(t, best.0);
                u.swap(t, best.0);
            } else if best.1 != t {
                swap_cols(&mut d, t, best.1);
                swap_cols(&mut v, t, best.1);
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }
    let diagonal = (0..m.min(n)).map(|i| d[i][i]).collect();
    Ok(Diagonalization {
        u,
        v,
        diagonal,
        rank: t,
    })
}

/// Row Hermite normal form: the nonzero rows of an echelon basis of the row
/// lattice, pivots positive, entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hermite_rows(a: &[Vec<i64>], ncols: usize) -> Result<Mat> {
    let mut h: Mat = a.to_vec();
    let m = h.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        // Euclid down the column until one nonzero entry is left.
        loop {
            let piv = (r..m)
                .filter(|&i| h[i][c] != 0)
                .min_by_key(|&i| h[i][c].unsigned_abs());
            let Some(p) = piv else { break };
            h.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                let q = h[i][c].div_euclid(h[r][c]);
                if q != 0 {
                    row_axpy(&mut h, i, r, q)?;
                }
                if h[i][c] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r).is_none_or(|row| row[c] == 0) {
            continue;
        }
        if h[r][c] < 0 {
            for x in h[r].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_euclid(h[r][c]);
            if q != 0 {
                row_axpy(&mut h, i, r, q)?;
            }
        }
        r += 1;
    }
    h.truncate(r);
    Ok(h)
}

/// An integer right inverse `R` (`Q·R = I`) of a surjective `Q: ℤ^n → ℤ^m`.
pub fn right_inverse(q: &[Vec<i64>], ncols: usize) -> Result<Mat> {
    let m = q.len();
    let dg = diagonalize(q, ncols)?;
    if dg.rank != m || dg.diagonal.iter().any(|&x| x != 1) {
        return Err(Error::Inconsistent(
            "map is not surjective over the integers".into(),
        ));
    }
    // U·Q·V = [I 0], so Q·(V[:, :m]·U) = I.
    let mut r = vec![vec![0i64; m]; ncols];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let mut acc = 0i64;
            for k in 0..m {
                acc = ck(acc.checked_add(ck(dg.v[i][k].checked_mul(dg.u[k][j]))?))?;
            }
            *x = acc;
        }
    }
    Ok(r)
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>], bcols: usize) -> Result<Mat> {
    a.iter()
        .map(|row| {
            (0..bcols)
                .map(|j| {
                    row.iter().zip(b).try_fold(0i64, |acc, (&x, brow)| {
                        ck(acc.checked_add(ck(x.checked_mul(brow[j]))?))
                    })
                })
                .collect()
        })
        .collect()
}
