//! One function per subcommand. Each builds the JSON report and the text
//! rendering from the same values.

use fbc_core::cones::{newton_dual_cone_check, ClassReport};
use fbc_core::dsl::GraphMapDocument;
use fbc_core::homology::{vertex_cycles, PresentationOptions};
use fbc_core::matrices::{
    char_poly, irreducibility_report, monodromy_char_poly, signed_chain_matrix, transition_matrix,
    vertex_action_matrix,
};
use fbc_core::oracle::{
    brute_char_poly, multicycle_expansion, MAX_CYCLE_VERTICES, MAX_PERMUTATION_DIM,
};
use fbc_core::orientation::{oriented_edge_double, verify_theorem_a, OrientabilityKind};
use fbc_core::stretch::{geometric_stretch, homological_stretch};
use fbc_core::train_track::{is_train_track, whitehead_graphs_connected};
use fbc_core::{Analysis, CohomClass, Error, LaurentPoly, Result};
use serde_json::{json, Map, Value};

use crate::format::{int_poly_coeffs, laurent_terms, num6, opt6, sig6, univariate_terms, vector};
use crate::svg::plot_cone;

pub struct Settings {
    pub options: PresentationOptions,
    pub classes: Vec<Vec<i64>>,
    pub tolerance: f64,
}

pub struct Output {
    pub json: Value,
    pub text: String,
    /// False when a checked identity failed.
    pub ok: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            ok: true,
        }
    }
}

fn doc_name(doc: &GraphMapDocument) -> Value {
    doc.name.clone().map(Value::String).unwrap_or(Value::Null)
}

fn with_header(command: &str, doc: &GraphMapDocument, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("command".into(), json!(command));
    map.insert("name".into(), doc_name(doc));
    if let Value::Object(rest) = body {
        map.extend(rest);
    }
    Value::Object(map)
}

fn analysis(doc: &GraphMapDocument, s: &Settings) -> Result<Analysis> {
    Analysis::new(doc.map.clone(), &s.options)
}

fn render(an: &Analysis, p: &LaurentPoly) -> String {
    p.display_form().render(an.var_names())
}

pub fn validate(doc: &GraphMapDocument) -> Result<Output> {
    let f = &doc.map;
    let g = f.graph();
    let a = transition_matrix(f);
    let irr = irreducibility_report(&a)?;
    let tt = is_train_track(f);
    let wh = whitehead_graphs_connected(f);
    let images: Map<String, Value> = g
        .edges_by_name()
        .into_iter()
        .map(|e| (g.edge_name(e).to_string(), json!(f.edge_image(e).render(g))))
        .collect();
    let vimages: Map<String, Value> = g
        .vertices_by_name()
        .into_iter()
        .map(|v| {
            (
                g.vertex_name(v).to_string(),
                json!(g.vertex_name(f.vertex_image(v))),
            )
        })
        .collect();
    let witness = tt
        .witness
        .map(|w| json!({ "edge": g.edge_name(w.edge), "iterate": w.iterate }));
    let json = with_header(
        "validate",
        doc,
        json!({
            "valid": true,
            "vertices": g.num_vertices(),
            "edges": g.num_edges(),
            "vertex_images": vimages,
            "edge_images": images,
            "irreducible": irr.irreducible,
            "primitive": irr.primitive,
            "period": irr.period,
            "train_track": tt.is_train_track,
            "train_track_witness": witness,
            "whitehead_connected": wh.all_connected,
        }),
    );
    let mut text = format!(
        "valid graph map: {} vertices, {} edges\n",
        g.num_vertices(),
        g.num_edges()
    );
    text += &format!(
        "irreducible: {}, primitive: {}, period: {}\n",
        irr.irreducible, irr.primitive, irr.period
    );
    text += &format!("train track: {}", tt.is_train_track);
    if let Some(w) = tt.witness {
        text += &format!(
            " (edge {} fails at iterate {})",
            g.edge_name(w.edge),
            w.iterate
        );
    }
    text += &format!("\nwhitehead graphs connected: {}\n", wh.all_connected);
    Ok(Output::new(json, text))
}

pub fn orient(doc: &GraphMapDocument) -> Result<Output> {
    let f = &doc.map;
    let g = f.graph();
    let rep = verify_theorem_a(f)?;
    let class = fbc_core::orientation::classify_orientability(f)?;
    let assignment = class.assignment.as_ref().map(|signs| {
        g.edges_by_name()
            .into_iter()
            .map(|e| (g.edge_name(e).to_string(), json!(signs[e].value())))
            .collect::<Map<String, Value>>()
    });
    let double = oriented_edge_double(f)?;
    let commutes = double.check_commutation(f);
    let json = with_header(
        "orient",
        doc,
        json!({
            "kind": rep.kind.label(),
            "assignment": assignment,
            "edge_double_commutes": commutes,
            "theorem_a": {
                "pass": rep.pass,
                "char_a": int_poly_coeffs(&rep.char_a),
                "char_m": int_poly_coeffs(&rep.char_m),
                "perron": num6(rep.perron),
                "homological": num6(rep.homological),
                "gap": num6(rep.gap),
            },
        }),
    );
    let mut text = format!("orientability: {}\n", rep.kind.label());
    if let Some(signs) = &class.assignment {
        let flips: Vec<String> = g
            .edges_by_name()
            .into_iter()
            .map(|e| {
                format!(
                    "{}{}",
                    if signs[e].value() > 0 { "+" } else { "-" },
                    g.edge_name(e)
                )
            })
            .collect();
        text += &format!("assignment: {}\n", flips.join(" "));
    }
    text += &format!("char A: {}\nchar M: {}\n", rep.char_a, rep.char_m);
    text += &format!(
        "perron: {}  homological: {}  gap: {}\n",
        sig6(rep.perron),
        sig6(rep.homological),
        sig6(rep.gap)
    );
    text += &format!(
        "spectral identity: {}\n",
        if rep.pass { "pass" } else { "FAIL" }
    );
    Ok(Output {
        json,
        text,
        ok: rep.pass && commutes,
    })
}

pub fn stretch(doc: &GraphMapDocument) -> Result<Output> {
    let f = &doc.map;
    let geo = geometric_stretch(f)?;
    let hom = homological_stretch(f)?;
    let ca = char_poly(&transition_matrix(f))?;
    let cm = char_poly(&signed_chain_matrix(f))?;
    let cp = char_poly(&vertex_action_matrix(f))?;
    let mono = monodromy_char_poly(f)?;
    let json = with_header(
        "stretch",
        doc,
        json!({
            "geometric": num6(geo.value),
            "primitive": geo.primitive,
            "homological": num6(hom),
            "char_a": int_poly_coeffs(&ca),
            "char_m": int_poly_coeffs(&cm),
            "char_p": int_poly_coeffs(&cp),
            "monodromy": int_poly_coeffs(&mono),
        }),
    );
    let text = format!(
        "geometric stretch: {}{}\nhomological stretch: {}\nchar A: {ca}\nchar M: {cm}\nchar P: {cp}\nchar f_*: {mono}\n",
        sig6(geo.value),
        if geo.primitive { "" } else { " (not primitive)" },
        sig6(hom)
    );
    Ok(Output::new(json, text))
}

pub fn homology(doc: &GraphMapDocument, s: &Settings) -> Result<Output> {
    let an = analysis(doc, s)?;
    let p = &an.presentation;
    let g = an.map.graph();
    let names = an.var_names();
    let cocycle: Map<String, Value> = g
        .edges_by_name()
        .into_iter()
        .map(|e| (g.edge_name(e).to_string(), json!(p.cocycle[e].0)))
        .collect();
    let cycles = vertex_cycles(p, &an.map);
    let cycles_json: Vec<Value> = cycles
        .iter()
        .map(|c| {
            json!({
                "orbit": c.orbit.iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>(),
                "class": c.class.0,
            })
        })
        .collect();
    let json = with_header(
        "homology",
        doc,
        json!({
            "vars": names,
            "rank": p.rank,
            "basepoint": g.vertex_name(p.basepoint),
            "tree": p.tree.iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>(),
            "loop_edges": p.loop_edges.iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>(),
            "f_star": p.f_star,
            "project_k": p.project_k,
            "torsion": p.torsion,
            "cocycle": cocycle,
            "u0": an.u0().0,
            "vertex_cycles": cycles_json,
        }),
    );
    let mut text = format!("H = Z^{} with variables {}\n", p.rank, names.join(", "));
    text += &format!(
        "basepoint {}, tree {{{}}}\n",
        g.vertex_name(p.basepoint),
        p.tree
            .iter()
            .map(|&e| g.edge_name(e))
            .collect::<Vec<_>>()
            .join(", ")
    );
    if !p.torsion.is_empty() {
        text += &format!("dropped torsion: {:?}\n", p.torsion);
    }
    text += &format!("u0 = {}\n", vector(&an.u0().0));
    text += "edge classes in K:\n";
    for e in g.edges_by_name() {
        text += &format!("  {}: {}\n", g.edge_name(e), vector(&p.cocycle[e].0));
    }
    text += "vertex cycles:\n";
    for c in &cycles {
        let orbit: Vec<&str> = c.orbit.iter().map(|&v| g.vertex_name(v)).collect();
        text += &format!("  {}: {}\n", orbit.join(" -> "), vector(&c.class.0));
    }
    Ok(Output::new(json, text))
}

fn class_json(r: &ClassReport) -> Value {
    json!({
        "u": r.u.0,
        "in_cone": r.in_cone,
        "lambda": opt6(r.lambda),
        "rho": opt6(r.rho),
        "orientability": r.orientability.label(),
        "spec_m": univariate_terms(&r.spec_m),
        "spec_delta": univariate_terms(&r.spec_delta),
    })
}

fn class_text(r: &ClassReport, tolerance: f64) -> String {
    let mut t = format!("class {}\n", vector(&r.u.0));
    t += &format!("  in cone: {}\n", if r.in_cone { "yes" } else { "no" });
    if let Some(l) = r.lambda {
        t += &format!("  λ = {}\n", sig6(l));
    }
    if let Some(p) = r.rho {
        t += &format!("  ρ = {}\n", sig6(p));
    }
    if let (Some(l), Some(p)) = (r.lambda, r.rho) {
        t += &format!(
            "  λ = ρ within {}: {}\n",
            sig6(tolerance),
            (l - p).abs() <= tolerance
        );
    }
    t += &format!("  verdict: {}\n", r.orientability.label());
    t += &format!("  m^u(t) = {}\n", r.spec_m);
    t += &format!("  Δ^u(t) = {}\n", r.spec_delta);
    t
}

fn requested_classes(an: &Analysis, s: &Settings) -> Vec<CohomClass> {
    if s.classes.is_empty() {
        vec![an.u0().clone()]
    } else {
        s.classes.iter().cloned().map(CohomClass).collect()
    }
}

/// The stable schema shared by every invariant command.
fn invariant_json(an: &Analysis, classes: &[ClassReport]) -> Value {
    let b = &an.bundle;
    json!({
        "vars": an.var_names(),
        "polynomials": {
            "alexander": laurent_terms(&b.alexander.display_form()),
            "mcmullen": laurent_terms(&b.mcmullen.display_form()),
            "vertex": laurent_terms(&b.vertex_poly.display_form()),
            "mcmullen_normalized": laurent_terms(&b.mcmullen_normalized),
        },
        "cone": {
            "inequalities": an.cone.inequalities(),
            "rays": an.cone.rays,
        },
        "classes": classes.iter().map(class_json).collect::<Vec<_>>(),
    })
}

fn merge(base: Value, extra: Value) -> Value {
    let (Value::Object(mut a), Value::Object(b)) = (base, extra) else {
        unreachable!("both sides are objects");
    };
    a.extend(b);
    Value::Object(a)
}

pub fn polynomial(doc: &GraphMapDocument, s: &Settings, which: &str) -> Result<Output> {
    let an = analysis(doc, s)?;
    let p = match which {
        "alexander" => &an.bundle.alexander,
        "mcmullen" => &an.bundle.mcmullen,
        _ => &an.bundle.vertex_poly,
    };
    let command = if which == "vertex" {
        "vertexpoly"
    } else {
        which
    };
    let json = with_header(command, doc, invariant_json(&an, &[]));
    Ok(Output::new(json, format!("{}\n", render(&an, p))))
}

pub fn cone(doc: &GraphMapDocument, s: &Settings) -> Result<Output> {
    let an = analysis(doc, s)?;
    let json = with_header("cone", doc, invariant_json(&an, &[]));
    let names = an.var_names();
    let mut text = format!("variables: {}\n", names.join(", "));
    text += &format!("m′ = {}\n", an.bundle.mcmullen_normalized.render(names));
    text += "cone: u·s > 0 for s in\n";
    for s in an.cone.inequalities() {
        text += &format!("  {}\n", vector(&s));
    }
    if let Some(rays) = &an.cone.rays {
        let rs: Vec<String> = rays.iter().map(|r| vector(r)).collect();
        text += &format!("rays: {}\n", rs.join(", "));
    }
    text += &format!(
        "u0 = {} in cone: {}\n",
        vector(&an.u0().0),
        an.cone.contains(an.u0())
    );
    Ok(Output::new(json, text))
}

pub fn specialize(doc: &GraphMapDocument, s: &Settings) -> Result<Output> {
    let an = analysis(doc, s)?;
    let reports = requested_classes(&an, s)
        .iter()
        .map(|u| an.class_report(u))
        .collect::<Result<Vec<_>>>()?;
    let json = with_header("specialize", doc, invariant_json(&an, &reports));
    let text: String = reports.iter().map(|r| class_text(r, s.tolerance)).collect();
    Ok(Output::new(json, text))
}

pub fn classify(doc: &GraphMapDocument, s: &Settings) -> Result<Output> {
    let an = analysis(doc, s)?;
    let kind = an.kind()?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for u in requested_classes(&an, s) {
        let verdict = fbc_core::cones::classify_class(&an.cone, kind, an.u0(), &u)?;
        text += &format!("{}: {}\n", vector(&u.0), verdict.label());
        rows.push(json!({ "u": u.0, "orientability": verdict.label() }));
    }
    let json = with_header(
        "classify",
        doc,
        json!({ "vars": an.var_names(), "base": kind.label(), "classes": rows }),
    );
    Ok(Output::new(json, text))
}

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

pub fn verify(doc: &GraphMapDocument, s: &Settings) -> Result<Output> {
    let an = analysis(doc, s)?;
    let f = &an.map;
    let b = an.bundle.rank;
    let mut checks = Vec::new();
    let mut push =
        |name: &'static str, pass: bool, detail: String| checks.push(Check { name, pass, detail });

    push(
        "augmentation",
        an.lifted.augments_to(f),
        "Ã, M̃, P̃ augment to A, M, P".into(),
    );
    push(
        "k_invariant",
        an.presentation.k_is_invariant(),
        "q_K·(f_* - I) = 0".into(),
    );
    match an.relations() {
        Ok(rel) => {
            if let Some(p) = rel.pos {
                push("relation_pos", p, "m̂ ≐ Δ·p".into());
            }
            if let Some(n) = rel.neg {
                push("relation_neg", n, "ι(m)·r ≐ Δ·p".into());
            }
            let mut detail = String::from("m̂ ≡ Δ·p mod 2");
            if !rel.witnesses.is_empty() {
                detail += &format!(" ({})", rel.witnesses.join("; "));
            }
            push("relation_mod2", rel.mod2, detail);
        }
        Err(Error::ReducibleInput) => {
            let rel_mod2 = an
                .bundle
                .mcmullen_hat()
                .mod2_equivalent(&(&an.bundle.alexander * &an.bundle.vertex_poly));
            push("relation_mod2", rel_mod2, "m̂ ≡ Δ·p mod 2".into());
        }
        Err(e) => return Err(e),
    }
    let sp = an.specializations()?;
    push(
        "specialization_mcmullen",
        sp.mcmullen,
        format!("m(u0) = {} vs {}", sp.mcmullen_lhs, sp.mcmullen_rhs),
    );
    push(
        "specialization_alexander",
        sp.alexander,
        format!(
            "(1-t)^p·Δ(u0) = {} vs {}",
            sp.alexander_lhs, sp.alexander_rhs
        ),
    );
    if f.graph().num_edges() <= MAX_CYCLE_VERTICES {
        let mc = multicycle_expansion(&an.lifted.alift, b)?;
        push(
            "oracle_cycles",
            mc == an.bundle.mcmullen_normalized,
            "cycle expansion = m′".into(),
        );
    }
    let a = transition_matrix(f);
    if a.nrows() <= MAX_PERMUTATION_DIM {
        push(
            "oracle_char_poly",
            brute_char_poly(&a)? == char_poly(&a)?,
            "permutation expansion = Bareiss".into(),
        );
    }
    push(
        "u0_in_cone",
        an.cone.contains(an.u0()),
        format!("u0 = {}", vector(&an.u0().0)),
    );
    if let Some(orient) = &an.orientation {
        let rep = verify_theorem_a(f)?;
        push(
            "theorem_a",
            rep.pass,
            format!("{} (gap {})", rep.kind.label(), sig6(rep.gap)),
        );
        // The Newton description of the cone needs an expanding map.
        if orient.kind != OrientabilityKind::NonOrientable
            && geometric_stretch(f)?.value > 1.0 + s.tolerance
        {
            let n = newton_dual_cone_check(&an.bundle.alexander, &an.cone, an.u0(), orient.kind)?;
            push(
                "newton_dual_cone",
                n.equal,
                "cone = dual cone of the u0-maximal vertex of N(inv Δ)".into(),
            );
        }
    }
    match an.class_report(an.u0()) {
        Ok(r) => {
            if let (Some(l), Some(p)) = (r.lambda, r.rho) {
                push(
                    "rho_le_lambda",
                    p <= l + s.tolerance,
                    format!("λ = {}, ρ = {}", sig6(l), sig6(p)),
                );
            }
        }
        Err(e) if !e.is_theory_violation() || matches!(e, Error::RootFinding(_)) => {}
        Err(e) => return Err(e),
    }

    let ok = checks.iter().all(|c| c.pass);
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
        .collect();
    let json = merge(
        with_header("verify", doc, invariant_json(&an, &[])),
        json!({ "checks": rows, "pass": ok }),
    );
    let mut text = String::new();
    for c in &checks {
        text += &format!(
            "{} {}: {}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    text += if ok {
        "all checks passed\n"
    } else {
        "some checks FAILED\n"
    };
    Ok(Output { json, text, ok })
}

pub fn plot(doc: &GraphMapDocument, s: &Settings) -> Result<Output> {
    let an = analysis(doc, s)?;
    if an.bundle.rank != 2 {
        return Err(Error::DimensionMismatch(format!(
            "plot-cone needs rank 2, this map has rank {}",
            an.bundle.rank
        )));
    }
    let points: Vec<Vec<i64>> = an
        .bundle
        .mcmullen_normalized
        .apply_inv()
        .support()
        .map(|e| e.0.clone())
        .collect();
    let rays = an.cone.rays.clone().unwrap_or_default();
    let title = doc
        .name
        .clone()
        .unwrap_or_else(|| "cone of sections".into());
    let svg = plot_cone(an.var_names(), &points, &rays, &title);
    let json = with_header("plot-cone", doc, json!({ "svg": svg }));
    Ok(Output::new(json, svg))
}
