#![allow(dead_code)]

use lpl::linalg::{frac, int};
use lpl::poly::Polynomial;
use lpl::{fixtures, LieAlgebra, Rational, Subspace, Vector};
use proptest::prelude::*;

pub fn algebras() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("sl2", fixtures::sl2()),
        ("gl2", fixtures::gl2()),
        ("heisenberg", fixtures::heisenberg()),
        ("abelian3", fixtures::abelian3()),
    ]
}

/// Fixtures and their direct sums up to dimension 6.
pub fn algebras_up_to_6() -> Vec<LieAlgebra> {
    let base = algebras();
    let mut out: Vec<LieAlgebra> = base.iter().map(|(_, l)| l.clone()).collect();
    for (_, a) in &base {
        for (_, b) in &base {
            if a.dim() + b.dim() <= 6 {
                out.push(a.direct_sum(b, 1));
            }
        }
    }
    out.push(fixtures::gl2().direct_sum(&LieAlgebra::abelian(2), 1));
    out
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        2 => Just(int(0)),
        3 => (-3i64..=3).prop_map(int),
        2 => (-9i64..=9, 1i64..=4).prop_map(|(p, q)| frac(p, q)),
    ]
}

pub fn vector_of(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(small_rational(), n)
}

pub fn generators(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(vector_of(n), 0..=max)
}

pub fn span(n: usize, gens: Vec<Vector>) -> Subspace {
    Subspace::span(n, gens).unwrap()
}

/// Random polynomial in `n` variables of degree at most `deg`.
pub fn polynomial(n: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (
        (-4i64..=4, 1i64..=3).prop_map(|(p, q)| frac(p, q)),
        prop::collection::vec(0..=deg, n),
    );
    prop::collection::vec(term, 0..=4).prop_map(move |terms| {
        let mut out = Polynomial::zero(n);
        for (c, mut exps) in terms {
            // trim to total degree ≤ deg
            let mut total: u32 = exps.iter().sum();
            for e in exps.iter_mut() {
                while total > deg && *e > 0 {
                    *e -= 1;
                    total -= 1;
                }
            }
            let mut m = Polynomial::constant(n, c);
            for (i, e) in exps.iter().enumerate() {
                for _ in 0..*e {
                    m = m.mul(&Polynomial::var(n, i)).unwrap();
                }
            }
            out = out.add(&m).unwrap();
        }
        out
    })
}
