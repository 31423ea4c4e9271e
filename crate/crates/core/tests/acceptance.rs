//! One line per acceptance criterion, each at its stated tolerance.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` print FAIL and are required to
//! keep failing; every other criterion must pass.

mod common;

use std::io::Write;

use common::*;
use fbc_core::cones::{classify_class, ClassVerdict};
use fbc_core::det::{laurent_det, z_minus};
use fbc_core::homology::{coordinate_change, vertex_cycles};
use fbc_core::matrices::{char_poly, monodromy_char_poly, signed_chain_matrix, transition_matrix};
use fbc_core::oracle::{
    brute_char_poly, multicycle_expansion, MAX_CYCLE_VERTICES, MAX_PERMUTATION_DIM,
};
use fbc_core::orientation::{classify_orientability, verify_theorem_a, OrientabilityKind};
use fbc_core::stretch::{geometric_stretch, homological_stretch};
use fbc_core::{CohomClass, IntPoly, LaurentPoly};

/// The listed inverse of the "Anti anti" automorphism has λ ≈ 3.2143 and a
/// homology char poly reciprocal to the forward one; 3.72 and the printed
/// polynomial cannot both belong to an inverse.
const KNOWN_UNATTAINABLE: &[u32] = &[2];

struct Outcome {
    pass: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.details.push(what.into());
        }
    }
}

fn kind(name: &str) -> OrientabilityKind {
    classify_orientability(&load(name)).unwrap().kind
}

fn u0_stretches(name: &str) -> (f64, f64) {
    let an = analyse(name);
    let r = an.class_report(an.u0()).unwrap();
    (r.lambda.unwrap(), r.rho.unwrap())
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let f = load("o_and_none");
    o.check(
        kind("o_and_none") == OrientabilityKind::PosOrientable,
        "O and none is not pos-orientable",
    );
    let ca = char_poly(&transition_matrix(&f)).unwrap();
    o.check(
        ca == IntPoly::from_i64(&[1, -3, 7, -6, 1]),
        format!("char_poly(A) = {ca}"),
    );
    let g = geometric_stretch(&f).unwrap().value;
    let h = homological_stretch(&f).unwrap();
    o.check(
        close(g, 4.61, 0.01) && close(h, 4.61, 0.01),
        format!("stretches {g} / {h}"),
    );
    o.check(
        kind("o_and_none_inverse") == OrientabilityKind::NonOrientable,
        "g′ is orientable",
    );
    let (l, r) = u0_stretches("o_and_none_inverse");
    o.check(close(l, 3.08, 0.01), format!("g′ λ = {l}"));
    o.check(close(r, 2.15, 0.01), format!("g′ ρ = {r}"));
    o
}

fn matches_under_mirror(got: &IntPoly, listed: &IntPoly) -> bool {
    let m = got.negate_variable();
    m == *listed || m == -listed
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    for (name, lambda, listed) in [
        ("anti_anti", 2.17, IntPoly::from_i64(&[-1, 3, 1, -1])),
        (
            "anti_anti_inverse",
            3.72,
            IntPoly::from_i64(&[-1, 3, 3, -1]),
        ),
    ] {
        o.check(
            kind(name) == OrientabilityKind::NegOrientable,
            format!("{name} is not neg-orientable"),
        );
        let (l, _) = u0_stretches(name);
        o.check(
            close(l, lambda, 0.01),
            format!("{name}: λ = {l:.6}, expected {lambda} ± 0.01"),
        );
        let got = monodromy_char_poly(&load(name)).unwrap();
        o.check(
            matches_under_mirror(&got, &listed),
            format!("{name}: char(f_*) = {got} does not match {listed} under t ↦ -t"),
        );
    }
    o
}

fn poly2(terms: &[(i64, i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(2, terms.iter().map(|&(a, z, c)| (vec![a, z], c)))
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let an = anti_o_tree_f();
    o.check(an.bundle.rank == 2, format!("b = {}", an.bundle.rank));
    // Edge classes [aF] = [cF] = α, [fb] = -α, [dF] = [fe] = 0.
    let p = &an.presentation;
    let g = an.map.graph();
    let class = |word: &str| {
        let steps: Vec<_> = word
            .chars()
            .map(|ch| {
                let e = g
                    .edge_by_name(&ch.to_ascii_lowercase().to_string())
                    .unwrap();
                let sign = if ch.is_uppercase() {
                    fbc_core::Sign::Neg
                } else {
                    fbc_core::Sign::Pos
                };
                fbc_core::Step::new(e, sign)
            })
            .collect();
        p.class_of_loop(&steps).0
    };
    for (word, expected) in [
        ("aF", vec![1, 0]),
        ("cF", vec![1, 0]),
        ("fb", vec![-1, 0]),
        ("dF", vec![0, 0]),
        ("fe", vec![0, 0]),
    ] {
        let got = class(word);
        o.check(got == expected, format!("[{word}] = {got:?}"));
    }
    let a = |k: i64, c: i64| poly2(&[(k, 0, c)]);
    let zero = LaurentPoly::zero(2);
    o.check(
        an.lifted.plift == vec![vec![zero.clone(), a(1, 1)], vec![a(0, 1), zero]],
        "P̃ differs",
    );
    let shown: [[(i64, i64); 6]; 6] = [
        [(0, -1), (0, 0), (0, -1), (0, -1), (0, -1), (0, 0)],
        [(1, -1), (0, 0), (1, -1), (1, -1), (1, -2), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, -1), (0, 0), (0, -1)],
        [(1, -1), (0, -1), (0, 0), (0, -1), (0, 0), (0, -1)],
        [(1, -1), (0, -2), (0, 0), (0, -1), (0, 0), (0, -1)],
        [(1, -1), (0, 0), (1, -1), (0, 0), (0, 0), (0, 0)],
    ];
    let m: Vec<Vec<LaurentPoly>> = shown
        .iter()
        .map(|r| r.iter().map(|&(k, c)| a(k, c)).collect())
        .collect();
    o.check(an.lifted.mlift == m, "M̃ differs");
    let delta = poly2(&[
        (0, 4, 1),
        (0, 3, 2),
        (0, 2, 1),
        (1, 2, -7),
        (1, 1, 2),
        (2, 0, 1),
    ]);
    let mc = poly2(&[
        (0, 6, 1),
        (0, 5, -2),
        (0, 4, 1),
        (1, 4, -8),
        (2, 2, 8),
        (1, 2, -1),
        (2, 1, 2),
        (3, 0, -1),
    ]);
    o.check(
        an.bundle.alexander.unit_equivalent(&delta),
        format!("Δ = {}", an.bundle.alexander),
    );
    o.check(
        an.bundle.mcmullen.unit_equivalent(&mc),
        format!("m = {}", an.bundle.mcmullen),
    );
    let mut rays = an.cone.rays.clone().unwrap_or_default();
    rays.sort();
    o.check(
        rays == vec![vec![-2, -1], vec![1, 0]],
        format!("rays {rays:?}"),
    );
    let u0 = an.u0().clone();
    let r0 = an.class_report(&u0).unwrap();
    let (l0, p0) = (r0.lambda.unwrap(), r0.rho.unwrap());
    o.check(
        close(l0, 3.732, 0.01) && close(p0, 3.732, 0.01),
        format!("λ(u₀) = {l0}, ρ(u₀) = {p0}"),
    );
    let r = an.class_report(&CohomClass(vec![2, -3])).unwrap();
    let (l, p) = (r.lambda.unwrap(), r.rho.unwrap());
    o.check(
        close(l, 1.43092, 1e-4) && close(p, 1.43092, 1e-4),
        format!("λ(2,-3) = {l}, ρ(2,-3) = {p}"),
    );
    let verdict = |u: Vec<i64>| {
        classify_class(
            &an.cone,
            OrientabilityKind::NegOrientable,
            &u0,
            &CohomClass(u),
        )
        .unwrap()
    };
    o.check(
        verdict(vec![2, -3]) == ClassVerdict::Neg,
        "(2,-3) is not neg",
    );
    o.check(
        verdict(vec![1, -1]) == ClassVerdict::None,
        "(1,-1) is not none",
    );
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    for name in all_fixtures() {
        let an = analyse(name);
        let rel = an.relations().unwrap();
        match an.kind().unwrap() {
            OrientabilityKind::PosOrientable => o.check(
                rel.pos == Some(true),
                format!("{name}: pos {:?}", rel.witnesses),
            ),
            OrientabilityKind::NegOrientable => o.check(
                rel.neg == Some(true),
                format!("{name}: neg {:?}", rel.witnesses),
            ),
            OrientabilityKind::NonOrientable => {}
        }
        o.check(rel.mod2, format!("{name}: mod 2 {:?}", rel.witnesses));
    }
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for name in all_fixtures() {
        let s = analyse(name).specializations().unwrap();
        o.check(
            s.mcmullen,
            format!("{name}: m(u₀) = {} vs {}", s.mcmullen_lhs, s.mcmullen_rhs),
        );
        o.check(
            s.alexander,
            format!("{name}: Δ(u₀) = {} vs {}", s.alexander_lhs, s.alexander_rhs),
        );
    }
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    for name in all_fixtures() {
        let an = analyse(name);
        let f = &an.map;
        let b = an.bundle.rank;
        if f.graph().num_edges() <= MAX_CYCLE_VERTICES {
            let mc = multicycle_expansion(&an.lifted.alift, b).unwrap();
            let raw = laurent_det(&z_minus(&an.lifted.alift, b), b).unwrap();
            let shifted = raw.shift(&an.presentation.zbar.scale(-(f.graph().num_edges() as i64)));
            o.check(mc == shifted, format!("{name}: cycle expansion differs"));
        }
        for m in [transition_matrix(f), signed_chain_matrix(f)] {
            if m.nrows() <= MAX_PERMUTATION_DIM {
                o.check(
                    brute_char_poly(&m).unwrap() == char_poly(&m).unwrap(),
                    format!("{name}: char poly"),
                );
            }
        }
        let one = LaurentPoly::one(b);
        let product = vertex_cycles(&an.presentation, f)
            .iter()
            .fold(one.clone(), |acc, c| {
                &acc * &(&one - &LaurentPoly::monomial(c.class.clone(), 1))
            });
        let det = laurent_det(&z_minus(&an.lifted.plift, b), b).unwrap();
        o.check(
            product.unit_equivalent(&det),
            format!("{name}: vertex cycles {product} vs {det}"),
        );
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    for name in all_fixtures() {
        let rep = verify_theorem_a(&load(name)).unwrap();
        o.check(rep.pass, format!("{name}: {:?} fails", rep.kind));
        if rep.kind == OrientabilityKind::NonOrientable {
            o.check(rep.gap > 0.5, format!("{name}: gap {}", rep.gap));
        }
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let from = analyse("anti_o");
    let to = anti_o_tree_f();
    o.check(
        from.presentation.tree != to.presentation.tree,
        "the two trees coincide",
    );
    let phi = coordinate_change(&from.presentation, &to.presentation, &from.map).unwrap();
    let moved = |p: &LaurentPoly| p.change_coordinates(&phi);
    o.check(
        moved(&from.bundle.mcmullen_normalized) == to.bundle.mcmullen_normalized,
        "m′ does not transform exactly",
    );
    o.check(
        moved(&from.bundle.alexander).unit_equivalent(&to.bundle.alexander),
        "Δ differs",
    );
    o.check(
        moved(&from.bundle.mcmullen).unit_equivalent(&to.bundle.mcmullen),
        "m differs",
    );
    o.check(
        moved(&from.bundle.vertex_poly).unit_equivalent(&to.bundle.vertex_poly),
        "p differs",
    );
    // Classes pull back by the transpose.
    let pull = |u: &[i64]| -> Vec<i64> {
        (0..2)
            .map(|j| (0..2).map(|i| phi[i][j] * u[i]).sum())
            .collect()
    };
    o.check(pull(&to.u0().0) == from.u0().0, "u₀ is not preserved");
    let mut a: Vec<Vec<i64>> = to
        .cone
        .rays
        .clone()
        .unwrap()
        .iter()
        .map(|r| pull(r))
        .collect();
    let mut b = from.cone.rays.clone().unwrap();
    a.sort();
    b.sort();
    o.check(a == b, format!("rays {a:?} vs {b:?}"));
    for x in -6i64..=6 {
        for y in -6i64..=6 {
            let u = CohomClass(vec![x, y]);
            let back = CohomClass(pull(&u.0));
            o.check(
                to.cone.contains(&u) == from.cone.contains(&back),
                format!("membership of {u:?}"),
            );
        }
    }
    o
}

type Criterion = (u32, &'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        (
            1,
            "O and none: orientability, char poly, stretch factors",
            criterion_1,
        ),
        (
            2,
            "Anti anti: orientability, stretch factors, homology char polys",
            criterion_2,
        ),
        (
            3,
            "AntiO: lifted matrices, polynomials, cone, classes",
            criterion_3,
        ),
        (
            4,
            "relations m̂ ≐ Δ·p (pos), ι(m)·r ≐ Δ·p (neg), mod 2 (all)",
            criterion_4,
        ),
        (5, "specializations at u₀", criterion_5),
        (6, "oracle equivalence", criterion_6),
        (
            7,
            "orientability dichotomy spectral identities",
            criterion_7,
        ),
        (8, "basis independence for AntiO", criterion_8),
    ];
    // Written to the raw handle so the report shows without --nocapture.
    let mut out = std::io::stdout().lock();
    let mut unexpected = Vec::new();
    for (id, label, run) in criteria {
        let o = run();
        let known = KNOWN_UNATTAINABLE.contains(&id);
        let status = match (o.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        writeln!(out, "criterion {id}: {status} - {label}").unwrap();
        for d in &o.details {
            writeln!(out, "    {d}").unwrap();
        }
        if o.pass == known {
            unexpected.push(id);
        }
    }
    assert!(
        unexpected.is_empty(),
        "criteria with unexpected outcome: {unexpected:?}"
    );
}
