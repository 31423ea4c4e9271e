use std::path::PathBuf;
use std::process::{Command, Output};

use fbc_core::LaurentPoly;
use serde_json::Value;

const FIXTURES: &[&str] = &[
    "o_and_none",
    "o_and_none_inverse",
    "anti_anti",
    "anti_anti_inverse",
    "anti_o",
    "anti_o_inverse",
    "circle_identity",
    "doubling",
    "reversal",
    "swap_rose",
];

fn fixture(name: &str) -> String {
    let p: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "core",
        "fixtures",
        &format!("{name}.gm"),
    ]
    .iter()
    .collect();
    p.to_string_lossy().into_owned()
}

fn fbc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fbc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = fbc(&all);
    (
        serde_json::from_str(&stdout(&o)).expect("valid JSON"),
        o.status.code().unwrap(),
    )
}

fn poly_from_terms(terms: &Value, rank: usize) -> LaurentPoly {
    LaurentPoly::from_terms(
        rank,
        terms.as_array().unwrap().iter().map(|t| {
            let exp = t["exp"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_i64().unwrap())
                .collect();
            (exp, t["coeff"].as_i64().unwrap())
        }),
    )
}

#[test]
fn doubling_alexander() {
    let o = fbc(&["alexander", &fixture("doubling")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "z - 2\n");
}

#[test]
fn anti_o_class_in_tree_f_coordinates() {
    let f = fixture("anti_o");
    let o = fbc(&[
        "specialize",
        &f,
        "--tree",
        "f",
        "--basepoint",
        "v",
        "--class",
        "2,-3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("λ = 1.43092"), "{text}");
    assert!(text.contains("ρ = 1.43092"), "{text}");
    assert!(text.contains("verdict: neg"), "{text}");

    let (v, code) = json(&[
        "specialize",
        &f,
        "--tree",
        "f",
        "--basepoint",
        "v",
        "--class",
        "2,-3",
    ]);
    assert_eq!(code, 0);
    let c = &v["classes"][0];
    assert_eq!(c["lambda"], serde_json::json!(1.43092));
    assert_eq!(c["orientability"], "neg");
}

#[test]
fn verify_passes_on_every_fixture() {
    for name in FIXTURES {
        let (v, code) = json(&["verify", &fixture(name)]);
        assert_eq!(code, 0, "{name}: {v}");
        assert_eq!(v["pass"], true, "{name}");
    }
    let (v, _) = json(&["verify", &fixture("anti_o")]);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for expected in [
        "relation_neg",
        "relation_mod2",
        "specialization_mcmullen",
        "specialization_alexander",
    ] {
        assert!(names.contains(&expected), "{names:?}");
    }
}

#[test]
fn json_schema_is_stable() {
    for cmd in [
        "alexander",
        "mcmullen",
        "vertexpoly",
        "cone",
        "specialize",
        "verify",
    ] {
        let (v, _) = json(&[cmd, &fixture("anti_o")]);
        assert!(v["vars"].is_array(), "{cmd}");
        for p in ["alexander", "mcmullen", "vertex"] {
            let terms = v["polynomials"][p].as_array().unwrap();
            assert!(
                terms
                    .iter()
                    .all(|t| t["coeff"].is_i64() && t["exp"].is_array()),
                "{cmd}/{p}"
            );
        }
        assert!(v["cone"]["inequalities"].is_array(), "{cmd}");
        assert!(v["cone"]["rays"].is_array(), "{cmd}");
        assert!(v["classes"].is_array(), "{cmd}");
    }
}

#[test]
fn text_and_json_agree_term_by_term() {
    for name in FIXTURES {
        let f = fixture(name);
        for (cmd, key) in [
            ("alexander", "alexander"),
            ("mcmullen", "mcmullen"),
            ("vertexpoly", "vertex"),
        ] {
            let text = stdout(&fbc(&[cmd, &f]));
            let (v, _) = json(&[cmd, &f]);
            let vars: Vec<String> = v["vars"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap().to_string())
                .collect();
            let p = poly_from_terms(&v["polynomials"][key], vars.len());
            assert_eq!(text.trim_end(), p.render(&vars), "{name} {cmd}");
        }
    }
}

#[test]
fn orientability_reports() {
    let expected = [
        ("o_and_none", "pos"),
        ("o_and_none_inverse", "none"),
        ("anti_anti", "neg"),
        ("anti_o", "neg"),
    ];
    for (name, kind) in expected {
        let (v, code) = json(&["orient", &fixture(name)]);
        assert_eq!(code, 0);
        assert_eq!(v["kind"], kind, "{name}");
        assert_eq!(v["theorem_a"]["pass"], true, "{name}");
    }
    let (v, _) = json(&[
        "classify",
        &fixture("anti_o"),
        "--tree",
        "f",
        "--basepoint",
        "v",
        "--class",
        "2,-3",
        "--class",
        "1,-1",
    ]);
    assert_eq!(v["classes"][0]["orientability"], "neg");
    assert_eq!(v["classes"][1]["orientability"], "none");
}

#[test]
fn stretch_factors() {
    let (v, _) = json(&["stretch", &fixture("o_and_none")]);
    let g = v["geometric"].as_f64().unwrap();
    assert!((g - 4.61347).abs() < 1e-9);
    assert_eq!(v["homological"], v["geometric"]);
    let text = stdout(&fbc(&["stretch", &fixture("o_and_none_inverse")]));
    assert!(text.contains("geometric stretch: 3.0796\n"), "{text}");
}

#[test]
fn error_exit_codes() {
    let dir = std::env::temp_dir().join(format!("fbc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.gm");
    std::fs::write(&bad, "vertex v\nedge a v v\nimage a a ~b\n").unwrap();
    let (v, code) = json(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "unknown_edge");

    std::fs::write(
        &bad,
        "vertex v w\nedge a v w\nedge b w v\nimage a a a\nimage b b\n",
    )
    .unwrap();
    let (v, code) = json(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "inconsistent_endpoints");

    let (v, code) = json(&["specialize", &fixture("anti_o"), "--class", "2,-4"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "not_primitive");

    let (v, code) = json(&[
        "classify",
        &fixture("anti_o"),
        "--tree",
        "f",
        "--basepoint",
        "v",
        "--class",
        "-2,3",
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "not_in_cone");

    // Specializations are still defined outside the cone; λ is not.
    let (v, code) = json(&[
        "specialize",
        &fixture("anti_o"),
        "--tree",
        "f",
        "--basepoint",
        "v",
        "--class",
        "-2,3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["classes"][0]["in_cone"], false);
    assert!(v["classes"][0]["lambda"].is_null());

    let o = fbc(&["specialize", &fixture("swap_rose")]);
    assert_eq!(
        o.status.code(),
        Some(3),
        "separation guard is a theory error"
    );

    let o = fbc(&["plot-cone", &fixture("doubling")]);
    assert_eq!(o.status.code(), Some(2));

    let o = fbc(&["alexander", dir.join("missing.gm").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn plot_cone_writes_svg() {
    let dir = std::env::temp_dir().join(format!("fbc-plot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("cone.svg");
    let o = fbc(&[
        "plot-cone",
        &fixture("anti_o"),
        "--tree",
        "f",
        "--basepoint",
        "v",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    // Eight monomials in m′, two boundary rays.
    assert_eq!(svg.matches("<circle").count(), 8);
    assert!(svg.contains("ray (1, 0)") && svg.contains("ray (-2, -1)"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn homology_and_validate_reports() {
    let (v, code) = json(&[
        "homology",
        &fixture("anti_o"),
        "--tree",
        "f",
        "--basepoint",
        "v",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["u0"], serde_json::json!([0, -1]));
    assert_eq!(v["cocycle"]["b"], serde_json::json!([-1, 0]));
    let (v, _) = json(&["validate", &fixture("swap_rose")]);
    assert_eq!(v["period"], 2);
    assert_eq!(v["primitive"], false);
    let (v, _) = json(&["homology", &fixture("anti_o"), "--tree", "x"]);
    assert_eq!(v["error"]["code"], "unknown_edge");
}
