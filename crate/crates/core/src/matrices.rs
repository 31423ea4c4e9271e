//! Integer matrices attached to a graph map and their characteristic
//! polynomials.

use std::collections::VecDeque;

use num_integer::Integer;

use crate::det::bareiss_det;
use crate::error::{Error, Result};
use crate::graph::{GraphMap, IntMatrix};
use crate::upoly::IntPoly;

fn edge_square(f: &GraphMap) -> IntMatrix {
    let names = f.graph().edge_names();
    IntMatrix::zeros(names.clone(), names)
}

/// `A[e', e]` = number of times `f(e)` crosses `e'` in either direction.
pub fn transition_matrix(f: &GraphMap) -> IntMatrix {
    let mut a = edge_square(f);
    for (e, path) in f.edge_images().iter().enumerate() {
        for s in path.steps() {
            a.add_to(s.edge, e, 1);
        }
    }
    a
}

/// `M[e', e]` = signed number of crossings of `e'` by `f(e)`; the action on
/// simplicial 1-chains.
pub fn signed_chain_matrix(f: &GraphMap) -> IntMatrix {
    let mut m = edge_square(f);
    for (e, path) in f.edge_images().iter().enumerate() {
        for s in path.steps() {
            m.add_to(s.edge, e, s.sign.value());
        }
    }
    m
}

/// `P[v, w] = 1` iff `f(w) = v`; the action on 0-chains.
pub fn vertex_action_matrix(f: &GraphMap) -> IntMatrix {
    let names = f.graph().vertex_names().to_vec();
    let mut p = IntMatrix::zeros(names.clone(), names);
    for (w, &v) in f.vertex_images().iter().enumerate() {
        p.set(v, w, 1);
    }
    p
}

/// `det(tI - M)` by fraction-free elimination over ℤ[t].
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.nrows();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -m.get(i, j);
                    if i == j {
                        IntPoly::from_i64(&[c, 1])
                    } else {
                        IntPoly::from_i64(&[c])
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(entries, IntPoly::one())
}

/// Characteristic polynomial of `f_*` on `H_1(G)`, from
/// `(t-1)·det(tI-M) = det(tI-f_*)·det(tI-P)`.
pub fn monodromy_char_poly(f: &GraphMap) -> Result<IntPoly> {
    let cm = char_poly(&signed_chain_matrix(f))?;
    let cp = char_poly(&vertex_action_matrix(f))?;
    (&IntPoly::t_minus(1) * &cm).exact_div(&cp)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub irreducible: bool,
    /// gcd of directed cycle lengths inside the strongly connected pieces;
    /// 0 when the digraph has no cycle.
    pub period: u64,
    pub primitive: bool,
}

/// Strong connectivity and period of the digraph `D(A)` with an arc
/// `j → i` for every unit of `A[i][j]`.
pub fn irreducibility_report(a: &IntMatrix) -> Result<IrreducibilityReport> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.nrows();
    let mut succ = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j);
            if x < 0 {
                return Err(Error::DimensionMismatch(
                    "matrix has a negative entry".into(),
                ));
            }
            if x > 0 {
                succ[j].push(i);
            }
        }
    }
    let comp = strong_components(&succ);
    let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
    let has_arc = succ.iter().any(|s| !s.is_empty());
    let irreducible = n > 0 && ncomp == 1 && has_arc;

    // Period via BFS levels inside each component.
    let mut period = 0u64;
    let mut level = vec![usize::MAX; n];
    for root in 0..n {
        if level[root] != usize::MAX {
            continue;
        }
        level[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &succ[v] {
                if comp[w] != comp[v] {
                    continue;
                }
                if level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                } else {
                    let diff = (level[v] as i64 + 1 - level[w] as i64).unsigned_abs();
                    period = period.gcd(&diff);
                }
            }
        }
    }
    Ok(IrreducibilityReport {
        irreducible,
        period,
        primitive: irreducible && period == 1,
    })
}

/// Tarjan's algorithm; returns a component id per vertex.
pub(crate) fn strong_components(succ: &[Vec<usize>]) -> Vec<usize> {
    struct State<'a> {
        succ: &'a [Vec<usize>],
        index: Vec<usize>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        comp: Vec<usize>,
        next_index: usize,
        next_comp: usize,
    }
    fn visit(s: &mut State, v: usize) {
        s.index[v] = s.next_index;
        s.low[v] = s.next_index;
        s.next_index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for k in 0..s.succ[v].len() {
            let w = s.succ[v][k];
            if s.index[w] == usize::MAX {
                visit(s, w);
                s.low[v] = s.low[v].min(s.low[w]);
            } else if s.on_stack[w] {
                s.low[v] = s.low[v].min(s.index[w]);
            }
        }
        if s.low[v] == s.index[v] {
            while let Some(w) = s.stack.pop() {
                s.on_stack[w] = false;
                s.comp[w] = s.next_comp;
                if w == v {
                    break;
                }
            }
            s.next_comp += 1;
        }
    }
    let n = succ.len();
    let mut s = State {
        succ,
        index: vec![usize::MAX; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        comp: vec![0; n],
        next_index: 0,
        next_comp: 0,
    };
    for v in 0..n {
        if s.index[v] == usize::MAX {
            visit(&mut s, v);
        }
    }
    s.comp
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn char_poly_small() {
        assert_eq!(char_poly(&mat(&[&[2]])).unwrap(), IntPoly::t_minus(2));
        assert_eq!(
            char_poly(&mat(&[&[0, 1], &[1, 0]])).unwrap(),
            IntPoly::from_i64(&[-1, 0, 1])
        );
    }

    #[test]
    fn irreducibility_examples() {
        let r = irreducibility_report(&mat(&[&[1]])).unwrap();
        assert_eq!((r.irreducible, r.period, r.primitive), (true, 1, true));
        let r = irreducibility_report(&mat(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!((r.irreducible, r.period, r.primitive), (true, 2, false));
        let r = irreducibility_report(&mat(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(!r.irreducible);
        let r = irreducibility_report(&mat(&[&[0]])).unwrap();
        assert!(!r.irreducible);
        // multi-edges contribute cycle lengths independently: 2- and 3-cycles
        let r = irreducibility_report(&mat(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]])).unwrap();
        assert_eq!((r.irreducible, r.period), (true, 1));
    }
}
