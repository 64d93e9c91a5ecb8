//! Bundled model files and a catalog of known subalgebras.

use crate::lie::LieAlgebra;
use crate::linalg::{vector, Subspace};
use crate::model::parse_model;

pub const SL2_JSON: &str = include_str!("../fixtures/sl2.json");
pub const GL2_JSON: &str = include_str!("../fixtures/gl2.json");
pub const HEISENBERG_JSON: &str = include_str!("../fixtures/heisenberg.json");
pub const ABELIAN_JSON: &str = include_str!("../fixtures/abelian_n.json");

/// Bundled model text by name (`sl2`, `gl2`, `heisenberg`, `abelian_n`).
pub fn model_text(name: &str) -> Option<&'static str> {
    match name {
        "sl2" => Some(SL2_JSON),
        "gl2" => Some(GL2_JSON),
        "heisenberg" => Some(HEISENBERG_JSON),
        "abelian_n" | "abelian" => Some(ABELIAN_JSON),
        _ => None,
    }
}

/// `[e1,e2] = -e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
pub fn sl2() -> LieAlgebra {
    parse_model(SL2_JSON).expect("bundled sl2")
}

/// gl(2) in the elementary-matrix basis `a = E11, b = E12, c = E21, d = E22`.
pub fn gl2() -> LieAlgebra {
    parse_model(GL2_JSON).expect("bundled gl2")
}

/// `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    parse_model(HEISENBERG_JSON).expect("bundled heisenberg")
}

pub fn abelian3() -> LieAlgebra {
    parse_model(ABELIAN_JSON).expect("bundled abelian")
}

fn span(n: usize, gens: &[&[i64]]) -> Subspace {
    Subspace::span(n, gens.iter().map(|g| vector(g)).collect()).expect("catalog subspace")
}

/// Named subalgebras of the bundled algebras.
pub fn subalgebra_catalog() -> Vec<(&'static str, LieAlgebra, Subspace)> {
    let sl2 = sl2();
    let gl2 = gl2();
    let heis = heisenberg();
    vec![
        ("sl2: 0", sl2.clone(), Subspace::zero(3)),
        ("sl2: <e1>", sl2.clone(), span(3, &[&[1, 0, 0]])),
        ("sl2: <e3>", sl2.clone(), span(3, &[&[0, 0, 1]])),
        (
            "sl2: <e1, e2-e3>",
            sl2.clone(),
            span(3, &[&[1, 0, 0], &[0, 1, -1]]),
        ),
        (
            "sl2: <e1, e2+e3>",
            sl2.clone(),
            span(3, &[&[1, 0, 0], &[0, 1, 1]]),
        ),
        ("sl2: g", sl2, Subspace::full(3)),
        (
            "gl2: diagonal",
            gl2.clone(),
            span(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]),
        ),
        (
            "gl2: upper",
            gl2.clone(),
            span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]),
        ),
        (
            "gl2: lower",
            gl2.clone(),
            span(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
        ),
        (
            "gl2: sl2",
            gl2.clone(),
            span(4, &[&[1, 0, 0, -1], &[0, 1, 0, 0], &[0, 0, 1, 0]]),
        ),
        ("gl2: center", gl2.clone(), span(4, &[&[1, 0, 0, 1]])),
        (
            "gl2: <a, b>",
            gl2.clone(),
            span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
        ),
        (
            "gl2: <a+d, b>",
            gl2.clone(),
            span(4, &[&[1, 0, 0, 1], &[0, 1, 0, 0]]),
        ),
        ("gl2: g", gl2, Subspace::full(4)),
        ("heisenberg: <z>", heis.clone(), span(3, &[&[0, 0, 1]])),
        ("heisenberg: <x>", heis.clone(), span(3, &[&[1, 0, 0]])),
        (
            "heisenberg: <x, z>",
            heis.clone(),
            span(3, &[&[1, 0, 0], &[0, 0, 1]]),
        ),
        (
            "heisenberg: <x+y, z>",
            heis.clone(),
            span(3, &[&[1, 1, 0], &[0, 0, 1]]),
        ),
        ("heisenberg: g", heis, Subspace::full(3)),
    ]
}
