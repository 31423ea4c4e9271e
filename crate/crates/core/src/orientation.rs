//! Orientability of graph maps and the oriented edge double.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgePath, Graph, GraphMap, IntMatrix, Sign, Step};
use crate::matrices::{
    char_poly, irreducibility_report, monodromy_char_poly, signed_chain_matrix, transition_matrix,
};
use crate::roots::roots;
use crate::stretch::geometric_stretch;
use crate::upoly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrientabilityKind {
    PosOrientable,
    NegOrientable,
    NonOrientable,
}

impl OrientabilityKind {
    pub fn label(self) -> &'static str {
        match self {
            OrientabilityKind::PosOrientable => "pos",
            OrientabilityKind::NegOrientable => "neg",
            OrientabilityKind::NonOrientable => "none",
        }
    }
}

/// `assignment[e] = Neg` means the stored orientation of `e` is reversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientabilityClass {
    pub kind: OrientabilityKind,
    pub assignment: Option<Vec<Sign>>,
}

/// Solves `x_{e'} = s·x_e` (positive) or `x_{e'} = -s·x_e` (negative) over
/// every crossing of `e'` with sign `s` in `f(e)`, seeding `+1` on the
/// name-smallest edge.
fn propagate(f: &GraphMap, negative: bool) -> Option<Vec<Sign>> {
    let g = f.graph();
    let n = g.num_edges();
    // Undirected constraint graph: (neighbour, relative sign).
    let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
    for (e, img) in f.edge_images().iter().enumerate() {
        for s in img.steps() {
            let rel = if negative { s.sign.flip() } else { s.sign };
            adj[e].push((s.edge, rel));
            adj[s.edge].push((e, rel));
        }
    }
    let seed = g.edges_by_name()[0];
    let mut x: Vec<Option<Sign>> = vec![None; n];
    x[seed] = Some(Sign::Pos);
    let mut queue = VecDeque::from([seed]);
    while let Some(e) = queue.pop_front() {
        let xe = x[e].expect("queued edges are assigned");
        for &(e2, rel) in &adj[e] {
            let want = xe.times(rel);
            match x[e2] {
                None => {
                    x[e2] = Some(want);
                    queue.push_back(e2);
                }
                Some(have) if have != want => return None,
                Some(_) => {}
            }
        }
    }
    x.into_iter().collect()
}

/// Positive or negative orientability by sign propagation. Positive wins
/// when both systems are solvable (only possible for non-expanding maps).
pub fn classify_orientability(f: &GraphMap) -> Result<OrientabilityClass> {
    if !irreducibility_report(&transition_matrix(f))?.irreducible {
        return Err(Error::ReducibleInput);
    }
    if let Some(a) = propagate(f, false) {
        return Ok(OrientabilityClass {
            kind: OrientabilityKind::PosOrientable,
            assignment: Some(a),
        });
    }
    if let Some(a) = propagate(f, true) {
        return Ok(OrientabilityClass {
            kind: OrientabilityKind::NegOrientable,
            assignment: Some(a),
        });
    }
    Ok(OrientabilityClass {
        kind: OrientabilityKind::NonOrientable,
        assignment: None,
    })
}

/// The 2-fold edge cover `Ĝ`: edge `2e` is `e₊` (tail to head of `e`) and
/// edge `2e+1` is `e₋` (head to tail).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDouble {
    pub lift: GraphMap,
    /// `σ` on edge indices of `Ĝ`.
    pub involution: Vec<usize>,
    pub matrix: IntMatrix,
}

/// Index in `Ĝ` of the positive lift of a step of `G`.
pub fn lift_index(step: Step) -> usize {
    match step.sign {
        Sign::Pos => 2 * step.edge,
        Sign::Neg => 2 * step.edge + 1,
    }
}

/// Projection of an edge of `Ĝ` to a step of `G`.
pub fn project(edge: usize) -> Step {
    Step::new(
        edge / 2,
        if edge.is_multiple_of(2) {
            Sign::Pos
        } else {
            Sign::Neg
        },
    )
}

fn positive_lift(steps: &[Step]) -> Vec<Step> {
    steps
        .iter()
        .map(|&s| Step::new(lift_index(s), Sign::Pos))
        .collect()
}

pub fn oriented_edge_double(f: &GraphMap) -> Result<EdgeDouble> {
    let g = f.graph();
    let mut edges = Vec::with_capacity(2 * g.num_edges());
    for e in g.edges() {
        let (t, h) = (g.vertex_name(e.tail), g.vertex_name(e.head));
        edges.push((format!("{}+", e.name), t.to_string(), h.to_string()));
        edges.push((format!("{}-", e.name), h.to_string(), t.to_string()));
    }
    let double = Graph::new(g.vertex_names().to_vec(), edges)?;
    let mut images = Vec::with_capacity(double.num_edges());
    for e in 0..g.num_edges() {
        for sign in [Sign::Pos, Sign::Neg] {
            let steps = positive_lift(&f.step_image(Step::new(e, sign)));
            images.push(EdgePath::new(&double, steps)?);
        }
    }
    let lift = GraphMap::new(double, images)?;
    let involution = (0..lift.graph().num_edges()).map(|i| i ^ 1).collect();
    let matrix = transition_matrix(&lift);
    Ok(EdgeDouble {
        lift,
        involution,
        matrix,
    })
}

impl EdgeDouble {
    /// `σ` applied to a path of `Ĝ`: each edge is replaced by its partner
    /// traversed backwards.
    pub fn sigma(&self, steps: &[Step]) -> Vec<Step> {
        steps
            .iter()
            .map(|s| Step::new(self.involution[s.edge], s.sign.flip()))
            .collect()
    }

    /// Checks `σ∘f̂ = f̂∘σ` and `p∘f̂ = f∘p` edge by edge.
    pub fn check_commutation(&self, f: &GraphMap) -> bool {
        (0..self.lift.graph().num_edges()).all(|i| {
            let fi = self.lift.step_image(Step::new(i, Sign::Pos));
            let commutes = self.sigma(&fi)
                == self
                    .lift
                    .step_image(Step::new(self.involution[i], Sign::Neg));
            let projected: Vec<Step> = fi
                .iter()
                .map(|s| {
                    let p = project(s.edge);
                    Step::new(p.edge, p.sign.times(s.sign))
                })
                .collect();
            commutes && projected == f.step_image(project(i))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremAReport {
    pub kind: OrientabilityKind,
    /// The exact char-poly identity for the orientable cases; the strict
    /// spectral gap for the non-orientable case.
    pub pass: bool,
    pub char_a: IntPoly,
    pub char_m: IntPoly,
    pub perron: f64,
    /// Largest root modulus of the homology char poly.
    pub homological: f64,
    pub gap: f64,
}

const GAP_TOL: f64 = 1e-6;

/// Orientable maps have equal geometric and homological stretch, witnessed
/// exactly by the char polys; non-orientable maps have a strict gap.
pub fn verify_theorem_a(f: &GraphMap) -> Result<TheoremAReport> {
    let class = classify_orientability(f)?;
    let char_a = char_poly(&transition_matrix(f))?;
    let char_m = char_poly(&signed_chain_matrix(f))?;
    let perron = geometric_stretch(f)?.value;
    let mono = monodromy_char_poly(f)?;
    let homological = roots(&mono)?.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let n = f.graph().num_edges();
    let pass = match class.kind {
        OrientabilityKind::PosOrientable => char_m == char_a,
        OrientabilityKind::NegOrientable => {
            let mirrored = char_a.negate_variable();
            char_m
                == if n.is_multiple_of(2) {
                    mirrored
                } else {
                    -&mirrored
                }
        }
        OrientabilityKind::NonOrientable => perron > homological + GAP_TOL,
    };
    Ok(TheoremAReport {
        kind: class.kind,
        pass,
        char_a,
        char_m,
        perron,
        homological,
        gap: perron - homological,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn map(text: &str) -> GraphMap {
        parse(text).unwrap().map
    }

    #[test]
    fn reversal_and_doubling_doubles() {
        let rev = map("vertex v\nedge a v v\nimage a ~a\n");
        let d = oriented_edge_double(&rev).unwrap();
        assert_eq!(d.matrix.rows(), &[vec![0, 1], vec![1, 0]]);
        assert!(d.check_commutation(&rev));
        let dbl = map("vertex v\nedge a v v\nimage a a a\n");
        let d = oriented_edge_double(&dbl).unwrap();
        assert_eq!(d.matrix.rows(), &[vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn reversal_is_negative() {
        let rev = map("vertex v\nedge a v v\nimage a ~a\n");
        let c = classify_orientability(&rev).unwrap();
        assert_eq!(c.kind, OrientabilityKind::NegOrientable);
        assert!(verify_theorem_a(&rev).unwrap().pass);
    }

    #[test]
    fn swap_rose_prefers_positive() {
        let f = map("vertex v\nedge a v v\nedge b v v\nimage a b\nimage b a\n");
        assert_eq!(
            classify_orientability(&f).unwrap().kind,
            OrientabilityKind::PosOrientable
        );
    }

    #[test]
    fn reducible_input_is_refused() {
        let f = map("vertex v\nedge a v v\nedge b v v\nimage a a\nimage b b a\n");
        assert_eq!(classify_orientability(&f), Err(Error::ReducibleInput));
    }

    #[test]
    fn reorientation_turns_m_into_plus_or_minus_a() {
        let f = map("vertex v\nedge a v v\nedge b v v\nimage a ~a b\nimage b a\n");
        let c = classify_orientability(&f).unwrap();
        let flipped = f.reoriented(c.assignment.as_ref().unwrap());
        let a = transition_matrix(&flipped);
        let m = signed_chain_matrix(&flipped);
        match c.kind {
            OrientabilityKind::PosOrientable => assert_eq!(m, a),
            OrientabilityKind::NegOrientable => assert_eq!(m, a.map(|x| -x)),
            OrientabilityKind::NonOrientable => unreachable!(),
        }
    }
}
