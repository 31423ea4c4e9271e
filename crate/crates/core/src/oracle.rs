//! Brute-force computations that check the main pipeline independently.

use crate::error::{Error, Result};
use crate::graph::{GraphMap, IntMatrix, Step};
use crate::laurent::{GroupElement, LaurentPoly};
use crate::upoly::IntPoly;

pub const MAX_CYCLE_VERTICES: usize = 12;
pub const MAX_PERMUTATION_DIM: usize = 8;
pub const MAX_GROWTH_ITERATES: usize = 12;
/// Iteration of path images stops once a path is longer than this.
pub const GROWTH_LENGTH_CAP: usize = 2_000_000;

/// `1 + Σ (-1)^{#cycles} ∏ weights` over families of vertex-disjoint simple
/// cycles of the digraph on edges with one arc `e → e'` of weight `h·z⁻¹` for
/// each monomial `h` of `Ã[e', e]`. Equals `det(I - z⁻¹Ã)`.
pub fn multicycle_expansion(alift: &[Vec<LaurentPoly>], rank: usize) -> Result<LaurentPoly> {
    let n = alift.len();
    if n > MAX_CYCLE_VERTICES {
        return Err(Error::TooLarge(format!("{n} edges in the cycle expansion")));
    }
    let zinv = GroupElement::basis(rank, rank - 1).neg();
    let zero = LaurentPoly::zero(rank);
    // w[from][to]
    let w: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|from| (0..n).map(|to| alift[to][from].shift(&zinv)).collect())
        .collect();
    let full = 1usize << n;

    // cycle[T]: total weight of simple cycles with vertex set exactly T,
    // each traversed from its smallest vertex.
    let mut cycle = vec![zero.clone(); full];
    for anchor in 0..n {
        // paths[(S, v)] over S ⊆ {anchor..n}, S ∋ anchor, path anchor → v.
        let mut paths: Vec<Vec<LaurentPoly>> = vec![Vec::new(); full];
        let start = 1usize << anchor;
        paths[start] = vec![zero.clone(); n];
        paths[start][anchor] = LaurentPoly::one(rank);
        // Supersets of `start` within vertices ≥ anchor, in increasing order.
        for s in (start..full).filter(|s| s & start != 0 && s & (start - 1) == 0) {
            if paths[s].is_empty() {
                continue;
            }
            for v in 0..n {
                if paths[s][v].is_zero() {
                    continue;
                }
                let pv = paths[s][v].clone();
                let closing = &pv * &w[v][anchor];
                cycle[s] = &cycle[s] + &closing;
                for x in anchor + 1..n {
                    if s & (1 << x) != 0 || w[v][x].is_zero() {
                        continue;
                    }
                    let t = s | (1 << x);
                    if paths[t].is_empty() {
                        paths[t] = vec![zero.clone(); n];
                    }
                    paths[t][x] = &paths[t][x] + &(&pv * &w[v][x]);
                }
            }
        }
    }

    // d[S]: signed sum over disjoint cycle families inside S.
    let mut d = vec![zero.clone(); full];
    d[0] = LaurentPoly::one(rank);
    for s in 1..full {
        let low = s & s.wrapping_neg();
        // The smallest vertex of S is either uncovered or in the cycle T.
        let mut acc = d[s ^ low].clone();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if !cycle[t].is_zero() && !d[s ^ t].is_zero() {
                acc = &acc - &(&cycle[t] * &d[s ^ t]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        d[s] = acc;
    }
    Ok(d[full - 1].clone())
}

/// `det(tI - M)` as a signed sum over permutations.
pub fn brute_char_poly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.nrows();
    if n > MAX_PERMUTATION_DIM {
        return Err(Error::TooLarge(format!("{n}x{n} permutation expansion")));
    }
    let entry = |i: usize, j: usize| -> IntPoly {
        if i == j {
            IntPoly::from_i64(&[-m.get(i, j), 1])
        } else {
            IntPoly::from_i64(&[-m.get(i, j)])
        }
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = IntPoly::zero();
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let term = (0..n).fold(IntPoly::one(), |acc, i| &acc * &entry(i, p[i]));
        total = if inversions % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    });
    Ok(total)
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

fn free_reduce(steps: Vec<Step>) -> Vec<Step> {
    let mut out: Vec<Step> = Vec::with_capacity(steps.len());
    for s in steps {
        match out.last() {
            Some(&last) if last == s.reversed() => {
                out.pop();
            }
            _ => out.push(s),
        }
    }
    out
}

/// Lengths of the reduced paths `f^k(e)` for `k = 0, 1, …, n`, stopping
/// early once a path exceeds [`GROWTH_LENGTH_CAP`].
pub fn iterate_growth(f: &GraphMap, e: usize, n: usize) -> Result<Vec<usize>> {
    if n > MAX_GROWTH_ITERATES {
        return Err(Error::TooLarge(format!("{n} iterates")));
    }
    let mut path = vec![Step::new(e, crate::graph::Sign::Pos)];
    let mut lengths = vec![1];
    for _ in 0..n {
        if path.len() > GROWTH_LENGTH_CAP {
            break;
        }
        path = free_reduce(f.apply(&path));
        lengths.push(path.len());
    }
    Ok(lengths)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl OracleReport {
    pub fn compare<T: PartialEq + std::fmt::Display>(name: &str, expected: &T, got: &T) -> Self {
        OracleReport {
            name: name.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass: expected == got,
        }
    }
}
