#![allow(dead_code)]

use fbc_core::dsl::parse;
use fbc_core::homology::PresentationOptions;
use fbc_core::{Analysis, GraphMap};

/// Maps taken from worked examples.
pub const EXAMPLE_FIXTURES: &[&str] = &[
    "o_and_none",
    "o_and_none_inverse",
    "anti_anti",
    "anti_anti_inverse",
    "anti_o",
    "anti_o_inverse",
];

/// Small maps with known behaviour.
pub const TRIVIAL_FIXTURES: &[&str] = &["circle_identity", "doubling", "reversal", "swap_rose"];

pub fn all_fixtures() -> impl Iterator<Item = &'static str> {
    EXAMPLE_FIXTURES.iter().chain(TRIVIAL_FIXTURES).copied()
}

pub fn load(name: &str) -> GraphMap {
    let path = format!("{}/fixtures/{name}.gm", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse(&text).unwrap_or_else(|e| panic!("{path}: {e}")).map
}

pub fn analyse(name: &str) -> Analysis {
    Analysis::new(load(name), &PresentationOptions::default()).unwrap()
}

/// AntiO with the spanning tree `{f}` and basepoint `v`.
pub fn anti_o_tree_f() -> Analysis {
    let opts = PresentationOptions {
        basepoint: Some("v".into()),
        tree: Some(vec!["f".into()]),
    };
    Analysis::new(load("anti_o"), &opts).unwrap()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
