//! Free abelianized homology of the mapping torus, the splitting
//! `H = K ⊕ ⟨z⟩`, and the lifted matrices over ℤ[K].
//!
//! A spanning tree `T` and basepoint fix a lift of `f` to the free abelian
//! cover of the fiber: `cocycle(e)` is the K-class of the loop through `e`
//! closed up in `T`, and the potential `ψ(v)` is the K-offset of the lifted
//! image of the lift of `v`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{GraphMap, Sign, Step};
use crate::laurent::{AbelianGroup, CohomClass, GroupElement, LaurentPoly};
use crate::matrices::{signed_chain_matrix, transition_matrix, vertex_action_matrix};
use crate::snf::{diagonalize, hermite_rows, mat_mul, right_inverse};

/// Overrides for the canonical choices of basepoint and spanning tree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PresentationOptions {
    pub basepoint: Option<String>,
    pub tree: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPresentation {
    pub group: AbelianGroup,
    /// Rank `b` of `H`.
    pub rank: usize,
    pub basepoint: usize,
    /// Tree edges, sorted by index.
    pub tree: Vec<usize>,
    /// Non-tree edges in index order; they index the loop basis of `H_1(G)`.
    pub loop_edges: Vec<usize>,
    /// `f_*` on the loop basis (columns are images).
    pub f_star: Vec<Vec<i64>>,
    /// `q_K`, `(b-1) × β` in row Hermite form.
    pub project_k: Vec<Vec<i64>>,
    /// Orders of the torsion summands of `coker(f_* - I)` that were dropped.
    pub torsion: Vec<i64>,
    pub cocycle: Vec<GroupElement>,
    pub potentials: Vec<GroupElement>,
    pub zbar: GroupElement,
    pub dual_class: CohomClass,
    /// Tree path from the basepoint to each vertex.
    pub tree_paths: Vec<Vec<Step>>,
}

fn select_tree(f: &GraphMap, basepoint: usize, tree: Option<&[String]>) -> Result<Vec<usize>> {
    let g = f.graph();
    let nv = g.num_vertices();
    let mut chosen = match tree {
        Some(names) => {
            let edges = names
                .iter()
                .map(|n| g.edge_by_name(n))
                .collect::<Result<Vec<_>>>()?;
            if edges.len() + 1 != nv {
                return Err(Error::InvalidTree(format!(
                    "a spanning tree needs {} edges, got {}",
                    nv - 1,
                    edges.len()
                )));
            }
            edges
        }
        None => {
            let order = g.edges_by_name();
            let mut seen = vec![false; nv];
            seen[basepoint] = true;
            let mut queue = VecDeque::from([basepoint]);
            let mut edges = Vec::new();
            while let Some(v) = queue.pop_front() {
                for &e in &order {
                    let edge = g.edge(e);
                    let other = if edge.tail == v {
                        edge.head
                    } else if edge.head == v {
                        edge.tail
                    } else {
                        continue;
                    };
                    if !seen[other] {
                        seen[other] = true;
                        edges.push(e);
                        queue.push_back(other);
                    }
                }
            }
            edges
        }
    };
    chosen.sort_unstable();
    chosen.dedup();
    if chosen.len() + 1 != nv {
        return Err(Error::InvalidTree("repeated edge".into()));
    }
    Ok(chosen)
}

/// Paths from the basepoint inside the tree; errors if the tree does not
/// span.
fn tree_paths(f: &GraphMap, basepoint: usize, tree: &[usize]) -> Result<Vec<Vec<Step>>> {
    let g = f.graph();
    let mut paths: Vec<Option<Vec<Step>>> = vec![None; g.num_vertices()];
    paths[basepoint] = Some(Vec::new());
    let mut queue = VecDeque::from([basepoint]);
    while let Some(v) = queue.pop_front() {
        let here = paths[v].clone().expect("queued vertices have paths");
        for &e in tree {
            let edge = g.edge(e);
            for (from, to, sign) in [
                (edge.tail, edge.head, Sign::Pos),
                (edge.head, edge.tail, Sign::Neg),
            ] {
                if from == v && paths[to].is_none() {
                    let mut p = here.clone();
                    p.push(Step::new(e, sign));
                    paths[to] = Some(p);
                    queue.push_back(to);
                }
            }
        }
    }
    paths
        .into_iter()
        .map(|p| p.ok_or_else(|| Error::InvalidTree("edges do not span the graph".into())))
        .collect()
}

fn chain_of(steps: &[Step], n_edges: usize) -> Vec<i64> {
    let mut x = vec![0; n_edges];
    for s in steps {
        x[s.edge] += s.sign.value();
    }
    x
}

/// Computes `H`, `K`, the cocycle and the potentials.
pub fn compute_presentation(f: &GraphMap, opts: &PresentationOptions) -> Result<TorusPresentation> {
    let g = f.graph();
    let ne = g.num_edges();
    let basepoint = match &opts.basepoint {
        Some(name) => g.vertex(name)?,
        None => g.vertices_by_name()[0],
    };
    let tree = select_tree(f, basepoint, opts.tree.as_deref())?;
    let paths = tree_paths(f, basepoint, &tree)?;
    let loop_edges: Vec<usize> = (0..ne).filter(|e| tree.binary_search(e).is_err()).collect();
    let beta = loop_edges.len();

    // Loop j as a 1-chain: τ_tail · e_j · τ̄_head.
    let loop_chain = |e: usize| -> Vec<i64> {
        let edge = g.edge(e);
        let mut steps = paths[edge.tail].clone();
        steps.push(Step::new(e, Sign::Pos));
        steps.extend(paths[edge.head].iter().rev().map(|s| s.reversed()));
        chain_of(&steps, ne)
    };
    let m = signed_chain_matrix(f);
    let mut f_star = vec![vec![0i64; beta]; beta];
    for (j, &e) in loop_edges.iter().enumerate() {
        let x = loop_chain(e);
        for (i, &e2) in loop_edges.iter().enumerate() {
            f_star[i][j] = (0..ne).map(|k| m.get(e2, k) * x[k]).sum();
        }
    }

    let mut shifted = f_star.clone();
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] -= 1;
    }
    let dg = diagonalize(&shifted, beta)?;
    let free_rows: Vec<Vec<i64>> = dg.u[dg.rank..].to_vec();
    let torsion = dg.diagonal[..dg.rank]
        .iter()
        .copied()
        .filter(|&d| d != 1)
        .collect();
    let project_k = if free_rows.is_empty() {
        Vec::new()
    } else {
        hermite_rows(&free_rows, beta)?
    };
    let k = project_k.len();
    let b = k + 1;

    let mut cocycle = vec![GroupElement::zero(b); ne];
    for (j, &e) in loop_edges.iter().enumerate() {
        let mut v: Vec<i64> = project_k.iter().map(|row| row[j]).collect();
        v.push(0);
        cocycle[e] = GroupElement(v);
    }
    let sum_cocycle = |steps: &[Step]| -> GroupElement {
        steps.iter().fold(GroupElement::zero(b), |acc, s| {
            acc.add(&cocycle[s.edge].scale(s.sign.value()))
        })
    };
    let potentials = paths.iter().map(|p| sum_cocycle(&f.apply(p))).collect();

    let mut u0 = vec![0; b];
    u0[b - 1] = -1;
    Ok(TorusPresentation {
        group: AbelianGroup::fiber_and_deck(k),
        rank: b,
        basepoint,
        tree,
        loop_edges,
        f_star,
        project_k,
        torsion,
        cocycle,
        potentials,
        zbar: GroupElement::basis(b, b - 1),
        dual_class: CohomClass(u0),
        tree_paths: paths,
    })
}

impl TorusPresentation {
    /// K-class (as an element of `H`) of a closed step sequence.
    pub fn class_of_loop(&self, steps: &[Step]) -> GroupElement {
        steps.iter().fold(GroupElement::zero(self.rank), |acc, s| {
            acc.add(&self.cocycle[s.edge].scale(s.sign.value()))
        })
    }

    /// The loop `τ_tail · e · τ̄_head` of a non-tree edge.
    pub fn basis_loop(&self, f: &GraphMap, e: usize) -> Vec<Step> {
        let edge = f.graph().edge(e);
        let mut steps = self.tree_paths[edge.tail].clone();
        steps.push(Step::new(e, Sign::Pos));
        steps.extend(
            self.tree_paths[edge.head]
                .iter()
                .rev()
                .map(|s| s.reversed()),
        );
        steps
    }

    /// `q_K ∘ (f_* - I) = 0`.
    pub fn k_is_invariant(&self) -> bool {
        let beta = self.loop_edges.len();
        let mut shifted = self.f_star.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] -= 1;
        }
        match mat_mul(&self.project_k, &shifted, beta) {
            Ok(p) => p.iter().all(|row| row.iter().all(|&x| x == 0)),
            Err(_) => false,
        }
    }
}

/// Matrices over ℤ[K] (embedded in ℤ[H] with zero `z`-exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedMatrices {
    pub alift: Vec<Vec<LaurentPoly>>,
    pub mlift: Vec<Vec<LaurentPoly>>,
    pub plift: Vec<Vec<LaurentPoly>>,
}

/// Walks each edge image in the cover, recording the K-offset of every
/// crossing.
pub fn lifted_matrices(pres: &TorusPresentation, f: &GraphMap) -> LiftedMatrices {
    let g = f.graph();
    let (ne, nv, b) = (g.num_edges(), g.num_vertices(), pres.rank);
    let zero = LaurentPoly::zero(b);
    let mut alift = vec![vec![zero.clone(); ne]; ne];
    let mut mlift = alift.clone();
    for e in 0..ne {
        let mut k = pres.potentials[g.edge(e).tail].clone();
        for s in f.edge_image(e).steps() {
            let c = &pres.cocycle[s.edge];
            if s.sign == Sign::Neg {
                k = k.sub(c);
            }
            alift[s.edge][e] = &alift[s.edge][e] + &LaurentPoly::monomial(k.clone(), 1);
            mlift[s.edge][e] =
                &mlift[s.edge][e] + &LaurentPoly::monomial(k.clone(), s.sign.value());
            if s.sign == Sign::Pos {
                k = k.add(c);
            }
        }
    }
    let mut plift = vec![vec![zero; nv]; nv];
    for v in 0..nv {
        plift[f.vertex_image(v)][v] = LaurentPoly::monomial(pres.potentials[v].clone(), 1);
    }
    LiftedMatrices {
        alift,
        mlift,
        plift,
    }
}

impl LiftedMatrices {
    /// Sending every K-variable to 1 recovers `A`, `M` and `P`.
    pub fn augments_to(&self, f: &GraphMap) -> bool {
        let aug = |m: &Vec<Vec<LaurentPoly>>| -> Vec<Vec<i64>> {
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|p| i64::try_from(p.coefficient_sum()).unwrap_or(i64::MAX))
                        .collect()
                })
                .collect()
        };
        aug(&self.alift) == transition_matrix(f).rows()
            && aug(&self.mlift) == signed_chain_matrix(f).rows()
            && aug(&self.plift) == vertex_action_matrix(f).rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCycle {
    pub orbit: Vec<usize>,
    pub class: GroupElement,
}

/// Periodic orbits of the vertex action, each starting at its name-smallest
/// vertex, with classes `(Σ ψ over the orbit, -length)`.
pub fn vertex_cycles(pres: &TorusPresentation, f: &GraphMap) -> Vec<VertexCycle> {
    let g = f.graph();
    let n = g.num_vertices();
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for v in g.vertices_by_name() {
        if done[v] {
            continue;
        }
        // v is periodic iff it returns within n steps.
        let mut orbit = vec![v];
        let mut w = f.vertex_image(v);
        while w != v && orbit.len() <= n {
            orbit.push(w);
            w = f.vertex_image(w);
        }
        if w != v {
            continue;
        }
        let mut class = orbit.iter().fold(GroupElement::zero(pres.rank), |acc, &x| {
            acc.add(&pres.potentials[x])
        });
        class.0[pres.rank - 1] = -(orbit.len() as i64);
        for &x in &orbit {
            done[x] = true;
        }
        out.push(VertexCycle { orbit, class });
    }
    out
}

/// The matrix `Φ` (`b × b`, acting on exponent columns) taking coordinates
/// of `from` to coordinates of `to`, for two presentations of the same map.
///
/// On K it is determined by evaluating both cocycles on the same cycles of
/// `G`; the image of `z` is fixed by requiring a vertex cycle, an intrinsic
/// class, to have the same image.
pub fn coordinate_change(
    from: &TorusPresentation,
    to: &TorusPresentation,
    f: &GraphMap,
) -> Result<Vec<Vec<i64>>> {
    if from.rank != to.rank {
        return Err(Error::Inconsistent(
            "presentations have different ranks".into(),
        ));
    }
    let b = from.rank;
    let k = b - 1;
    let mut phi = vec![vec![0i64; b]; b];
    if k > 0 {
        let beta = from.loop_edges.len();
        let r = right_inverse(&from.project_k, beta)?;
        for i in 0..k {
            // A cycle whose `from`-class is the i-th basis vector of K.
            let mut steps = Vec::new();
            for (j, &e) in from.loop_edges.iter().enumerate() {
                let loop_steps = from.basis_loop(f, e);
                let times = r[j][i];
                let piece: Vec<Step> = if times >= 0 {
                    loop_steps
                } else {
                    loop_steps.iter().rev().map(|s| s.reversed()).collect()
                };
                for _ in 0..times.unsigned_abs() {
                    steps.extend_from_slice(&piece);
                }
            }
            let img = to.class_of_loop(&steps);
            for (row, x) in phi.iter_mut().zip(&img.0).take(k) {
                row[i] = *x;
            }
        }
    }
    let c_from = vertex_cycles(from, f);
    let c_to = vertex_cycles(to, f);
    let (a, bcyc) = (
        c_from
            .first()
            .ok_or_else(|| Error::Inconsistent("no vertex cycle".into()))?,
        c_to.first()
            .ok_or_else(|| Error::Inconsistent("no vertex cycle".into()))?,
    );
    if a.orbit != bcyc.orbit {
        return Err(Error::Inconsistent("vertex cycles do not match".into()));
    }
    let len = a.orbit.len() as i64;
    // Φ(κ, -ℓ) = (Tκ - ℓ s, -ℓ) must equal (κ', -ℓ).
    for i in 0..k {
        let t_kappa: i64 = (0..k).map(|j| phi[i][j] * a.class.0[j]).sum();
        let diff = t_kappa - bcyc.class.0[i];
        if diff % len != 0 {
            return Err(Error::Inconsistent("vertex cycle classes disagree".into()));
        }
        phi[i][k] = diff / len;
    }
    phi[k][k] = 1;
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn map(text: &str) -> GraphMap {
        parse(text).unwrap().map
    }

    #[test]
    fn identity_circle_has_rank_two() {
        let f = map("vertex v\nedge a v v\nimage a a\n");
        let p = compute_presentation(&f, &PresentationOptions::default()).unwrap();
        assert_eq!(p.rank, 2);
        assert_eq!(p.cocycle[0], GroupElement(vec![1, 0]));
        let l = lifted_matrices(&p, &f);
        assert_eq!(l.mlift[0][0], LaurentPoly::one(2));
        assert_eq!(l.plift[0][0], LaurentPoly::one(2));
        let cyc = vertex_cycles(&p, &f);
        assert_eq!(cyc.len(), 1);
        assert_eq!(cyc[0].class, GroupElement(vec![0, -1]));
    }

    #[test]
    fn doubling_has_trivial_k() {
        let f = map("vertex v\nedge a v v\nimage a a a\n");
        let p = compute_presentation(&f, &PresentationOptions::default()).unwrap();
        assert_eq!(p.rank, 1);
        let l = lifted_matrices(&p, &f);
        assert_eq!(l.mlift[0][0], LaurentPoly::constant(1, 2));
        assert!(l.augments_to(&f));
        assert!(p.k_is_invariant());
    }

    #[test]
    fn rejects_bad_tree() {
        let f = map("vertex v w\nedge a v w\nedge b v w\nimage a a\nimage b b\n");
        let opts = PresentationOptions {
            basepoint: None,
            tree: Some(vec!["a".into(), "b".into()]),
        };
        assert!(matches!(
            compute_presentation(&f, &opts),
            Err(Error::InvalidTree(_))
        ));
    }
}
