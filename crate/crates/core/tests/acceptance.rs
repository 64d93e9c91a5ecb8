//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails. All comparisons are exact.

use std::path::Path;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lpl::algebroid::{isotropy_algebra, transversal_orbit_report};
use lpl::embedding::{
    constant_sharp_conormal, cosymplectic_locus, extend_with, induced_structure,
    symmetric_pair_analysis, Constancy,
};
use lpl::fixtures::{self, subalgebra_catalog};
use lpl::linalg::{self, frac, int, vector, Matrix};
use lpl::poly::{casimir_check, poisson_bracket, Polynomial};
use lpl::submanifold::{
    classify, coad_span, graph_coisotropy, is_coisotropic, pre_poisson_check, product, rank_at,
    sharp_conormal_at, tangent_plus_sharp, PrePoisson,
};
use lpl::{AffineSubspace, LieAlgebra, LinearMap, Rational, SampleSpec, Subspace, Vector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn problems_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/problems")
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-20..=20), rng.gen_range(1..=6))
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| random_rational(rng)).collect()
}

fn random_sparse_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.4) {
                int(0)
            } else {
                int(rng.gen_range(-2..=2))
            }
        })
        .collect()
}

fn gl2_h() -> Subspace {
    Subspace::axes(4, &[1, 2, 3])
}

fn c1_gl2_end_to_end() -> Outcome {
    let gl2 = fixtures::gl2();
    let sampling = SampleSpec::default();
    let c0 = AffineSubspace::new(gl2.clone(), gl2_h(), vector(&[0, 0, 0, 0])).unwrap();
    let report = classify(&c0, &sampling).unwrap();
    ensure!(
        c0.direction() == &Subspace::axes(4, &[0]),
        "C is not the a-axis"
    );
    ensure!(!report.coisotropic.coisotropic, "C reported coisotropic");
    match &report.pre_poisson {
        PrePoisson::NotConstant { first, second } => {
            ensure!(
                first.rank == 1 && linalg::is_zero(&first.point),
                "origin rank {}",
                first.rank
            );
            ensure!(
                second.rank == 3
                    && second.point[0] != int(0)
                    && linalg::is_zero(&second.point[1..]),
                "second rank {} at {:?}",
                second.rank,
                second.point
            );
        }
        other => return Err(format!("expected NotConstant, got {other:?}")),
    }
    ensure!(
        extend_with(&c0, &sampling, None, false).is_err(),
        "unrestricted extension did not refuse"
    );

    let c = AffineSubspace::new(gl2.clone(), gl2_h(), vector(&[1, 0, 0, 0])).unwrap();
    let e = extend_with(&c, &sampling, None, true).map_err(|e| e.to_string())?;
    ensure!(e.r == Subspace::axes(4, &[3]), "R = {}", e.r);
    ensure!(
        e.extended.direction() == &Subspace::axes(4, &[0, 3]),
        "P̃ not diagonal"
    );
    ensure!(e.p == Subspace::axes(4, &[1, 2]), "p = {}", e.p);

    let mut extra = Vec::new();
    for t in [int(0), int(1), frac(-3, 2), int(7)] {
        extra.push(vec![t.clone(), int(0), int(0), t]);
    }
    extra.push(vector(&[2, 0, 0, -1]));
    let locus = cosymplectic_locus(&e, &SampleSpec::new(64, 5), &extra).unwrap();
    for (x, ok) in &locus.checked {
        ensure!(*ok == (x[0] != x[3]), "locus wrong at {x:?}");
    }
    ensure!(
        locus.failing().count() == 4,
        "failing count {}",
        locus.failing().count()
    );
    ensure!(
        locus.pfaffian == Polynomial::parse(4, "nu1 - nu4").unwrap(),
        "pfaffian {}",
        locus.pfaffian
    );

    match constant_sharp_conormal(&e).unwrap() {
        Constancy::Certified { k_annihilator, .. } => {
            ensure!(
                k_annihilator == Subspace::axes(4, &[1, 2]),
                "k° = {k_annihilator}"
            )
        }
        other => return Err(format!("constancy {other:?}")),
    }
    ensure!(e.k == Some(Subspace::axes(4, &[0, 3])), "k = {:?}", e.k);
    let pair = symmetric_pair_analysis(&e).unwrap();
    ensure!(
        pair.direct_sum && pair.k_subalgebra && pair.kp_in_p && pair.pp_in_k,
        "pair flags {pair:?}"
    );
    let induced = induced_structure(&e).unwrap();
    ensure!(induced.is_zero(), "induced structure not zero");
    Ok("k = diagonal, locus = plane minus {a = d}, induced = 0".into())
}

fn c2_gl2_alternative_r() -> Outcome {
    let gl2 = fixtures::gl2();
    let c = AffineSubspace::new(gl2.clone(), gl2_h(), vector(&[1, 0, 0, 0])).unwrap();
    // coordinates of the covector; the second is the same element read
    // through the trace pairing
    for r in [vector(&[0, 0, 1, 1]), vector(&[0, 1, 0, 1])] {
        let r = Subspace::span(4, vec![r]).unwrap();
        let e =
            extend_with(&c, &SampleSpec::default(), Some(&r), true).map_err(|e| e.to_string())?;
        ensure!(
            matches!(
                constant_sharp_conormal(&e).unwrap(),
                Constancy::NotConstant { .. }
            ),
            "constancy certified for R = {r}"
        );
        ensure!(e.k.is_none(), "k set for R = {r}");
    }
    // ♯N*_xP̃ at x = (a, 0, b, b) is spanned by (-b, a-b, b, b) and (0, 0, b-a, 0)
    let p = Subspace::span(4, vec![vector(&[0, 1, 0, 0]), vector(&[0, 0, 1, -1])]).unwrap();
    for (a, b) in [(3, 1), (1, 2), (-2, 5)] {
        let x = vector(&[a, 0, b, b]);
        let expected = Subspace::span(
            4,
            vec![vector(&[-b, a - b, b, b]), vector(&[0, 0, b - a, 0])],
        )
        .unwrap();
        ensure!(
            coad_span(&gl2, &p, &x).unwrap() == expected,
            "♯N* at a={a}, b={b}"
        );
    }
    Ok("NotConstant for both coordinate readings of R".into())
}

fn c3_sl2_classifications() -> Outcome {
    let sl2 = fixtures::sl2();
    let h = Subspace::span(3, vec![vector(&[1, 0, 0]), vector(&[0, 1, -1])]).unwrap();
    let at = |lambda: Vector| AffineSubspace::new(sl2.clone(), h.clone(), lambda).unwrap();
    ensure!(
        is_coisotropic(&at(vector(&[0, 0, 0]))).unwrap().coisotropic,
        "λ = 0"
    );
    // [h, h] = span{e2 - e3}
    let derived = sl2.subspace_bracket(&h, &h).unwrap();
    ensure!(
        derived == Subspace::span(3, vec![vector(&[0, 1, -1])]).unwrap(),
        "[h,h] = {derived}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let (u, t) = (random_rational(&mut rng), random_rational(&mut rng));
        let lambda = vec![u, t.clone(), t];
        ensure!(
            is_coisotropic(&at(lambda.clone())).unwrap().coisotropic,
            "character {lambda:?}"
        );
    }
    let c = at(vector(&[0, 0, 1]));
    ensure!(
        !is_coisotropic(&c).unwrap().coisotropic,
        "(0,0,1) coisotropic"
    );
    match pre_poisson_check(&c, &SampleSpec::default()).unwrap() {
        PrePoisson::CertifiedConstant { rank: 3, space } => {
            ensure!(space.is_full(), "space {space}")
        }
        other => return Err(format!("{other:?}")),
    }
    Ok("coisotropic at characters, rank 3 at (0, 0, 1)".into())
}

fn c4_casimir() -> Outcome {
    let sl2 = fixtures::sl2();
    let f = Polynomial::parse(3, "nu1^2 + nu2^2 - nu3^2").unwrap();
    ensure!(
        casimir_check(&sl2, &f).unwrap(),
        "quadratic form not Casimir"
    );
    for i in 0..3 {
        ensure!(
            !casimir_check(&sl2, &Polynomial::var(3, i)).unwrap(),
            "nu{} Casimir",
            i + 1
        );
    }
    Ok("ν₁² + ν₂² − ν₃² only".into())
}

fn c5_isotropy() -> Outcome {
    let sl2 = fixtures::sl2();
    for t in [int(0), int(1), int(-2), frac(3, 2)] {
        let x = vec![int(0), t.clone(), &t + int(1)];
        let expected = Subspace::span(3, vec![vec![int(0), t.clone(), -(&t + int(1))]]).unwrap();
        ensure!(isotropy_algebra(&sl2, &x).unwrap() == expected, "t = {t}");
    }
    let h = Subspace::span(3, vec![vector(&[1, 0, 0]), vector(&[0, 1, -1])]).unwrap();
    let c = AffineSubspace::new(sl2, h, vector(&[0, 0, 1])).unwrap();
    let r = transversal_orbit_report(&c, &SampleSpec::default()).unwrap();
    ensure!(
        r.constant_orbit_dim && r.samples.iter().all(|s| s.orbit_dim == 2),
        "orbit dims not constant 2"
    );
    ensure!(r.all_transversal(), "not transversal");
    Ok("g_x = ℝ(t e₂ − (t+1) e₃), orbit dim 2".into())
}

fn c6_subalgebra_suite() -> Outcome {
    let catalog = subalgebra_catalog();
    ensure!(catalog.len() >= 10, "catalog too small");
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut cases, mut coisotropic_cases) = (0, 0);
    for (name, l, h) in &catalog {
        let n = l.dim();
        let characters = l.subspace_bracket(h, h).unwrap().annihilator();
        for round in 0..20 {
            let lambda = if round % 2 == 0 {
                random_vector(&mut rng, n)
            } else {
                let mut v = linalg::zero_vector(n);
                for b in characters.basis() {
                    v = linalg::add(&v, &linalg::scale(&random_rational(&mut rng), b));
                }
                v
            };
            let c = AffineSubspace::new(l.clone(), h.clone(), lambda.clone()).unwrap();
            let verdict = pre_poisson_check(&c, &SampleSpec::new(8, round)).unwrap();
            ensure!(
                matches!(verdict, PrePoisson::CertifiedConstant { .. }),
                "{name}: {verdict:?}"
            );
            let character = characters.contains_vector(&lambda).unwrap();
            let coisotropic = is_coisotropic(&c).unwrap().coisotropic;
            ensure!(coisotropic == character, "{name}: λ = {lambda:?}");
            // brute force: ⟨x, [v, w]⟩ = 0 for v, w ∈ h at 50 points of C
            let oracle = c
                .sample_points(&SampleSpec::new(50, round))
                .iter()
                .all(|x| {
                    h.basis().iter().all(|v| {
                        h.basis()
                            .iter()
                            .all(|w| linalg::dot(x, &l.bracket(v, w).unwrap()) == int(0))
                    })
                });
            ensure!(
                oracle == coisotropic,
                "{name}: oracle disagrees at λ = {lambda:?}"
            );
            cases += 1;
            coisotropic_cases += usize::from(coisotropic);
        }
    }
    Ok(format!(
        "{} subalgebras, {cases} cases, {coisotropic_cases} coisotropic",
        catalog.len()
    ))
}

fn small_algebras() -> Vec<LieAlgebra> {
    let base = [
        fixtures::sl2(),
        fixtures::gl2(),
        fixtures::heisenberg(),
        fixtures::abelian3(),
    ];
    let mut out = base.to_vec();
    for a in &base {
        for b in &base {
            if a.dim() + b.dim() <= 6 {
                out.push(a.direct_sum(b, 1));
            }
        }
    }
    out
}

fn c7_rank_identity() -> Outcome {
    let algebras = small_algebras();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut points = 0;
    for case in 0..60 {
        let l = &algebras[case % algebras.len()];
        let n = l.dim();
        let k = rng.gen_range(0..=n);
        let gens = (0..k).map(|_| random_sparse_vector(&mut rng, n)).collect();
        let h = Subspace::span(n, gens).unwrap();
        let c = AffineSubspace::new(l.clone(), h, random_vector(&mut rng, n)).unwrap();
        let mut xs = vec![c.base_point().clone()];
        xs.extend(c.sample_points(&SampleSpec::new(5, case as u64)));
        for x in xs {
            let sharp = sharp_conormal_at(&c, &x).unwrap();
            let lhs = tangent_plus_sharp(&c, &x).unwrap().dim();
            let meet = c.direction().intersection(&sharp).unwrap().dim();
            ensure!(lhs + meet == sharp.dim() + c.dim(), "case {case}");
            ensure!(
                rank_at(&c, &x).unwrap() == lhs,
                "skew-form rank, case {case}"
            );
            points += 1;
        }
    }
    Ok(format!("60 subspaces, {points} points"))
}

fn c8_graph_morphism() -> Outcome {
    let algebras = [
        fixtures::sl2(),
        fixtures::gl2(),
        fixtures::heisenberg(),
        fixtures::abelian3(),
        LieAlgebra::abelian(1),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut total, mut morphisms) = (0, 0);
    let mut check = |phi: LinearMap| -> Result<(), String> {
        let (_, coisotropic) = graph_coisotropy(&phi).unwrap();
        let morphism = phi.is_morphism().unwrap();
        ensure!(coisotropic == morphism, "disagreement on {:?}", phi.matrix);
        total += 1;
        morphisms += usize::from(morphism);
        Ok(())
    };
    for _ in 0..120 {
        let d = &algebras[rng.gen_range(0..algebras.len())];
        let c = &algebras[rng.gen_range(0..algebras.len())];
        let rows: Vec<Vector> = (0..c.dim())
            .map(|_| random_sparse_vector(&mut rng, d.dim()))
            .collect();
        check(
            LinearMap::new(
                d.clone(),
                c.clone(),
                Matrix::from_rows(d.dim(), &rows).unwrap(),
            )
            .unwrap(),
        )?;
    }
    // known morphisms and rescalings of them (still morphisms only when the
    // image is abelian); e1 ↦ H/2, e2 ↦ (E + F)/2, e3 ↦ (F - E)/2
    let half = |v: &[i64]| -> Vector { v.iter().map(|&x| frac(x, 2)).collect() };
    let sl2_in_gl2 = Matrix::from_columns(
        4,
        &[
            half(&[1, 0, 0, -1]),
            half(&[0, 1, 1, 0]),
            half(&[0, -1, 1, 0]),
        ],
    )
    .unwrap();
    for _ in 0..10 {
        let s = random_rational(&mut rng);
        let id = |n: usize| {
            let mut m = Matrix::identity(n);
            for i in 0..n {
                m[(i, i)] = s.clone();
            }
            m
        };
        let scaled = |m: &Matrix| {
            let mut m = m.clone();
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    m[(i, j)] = &m[(i, j)] * &s;
                }
            }
            m
        };
        check(LinearMap::new(fixtures::sl2(), fixtures::sl2(), Matrix::identity(3)).unwrap())?;
        check(LinearMap::new(fixtures::gl2(), fixtures::gl2(), id(4)).unwrap())?;
        check(
            LinearMap::new(
                fixtures::gl2(),
                LieAlgebra::abelian(1),
                scaled(&Matrix::from_i64(&[&[1, 0, 0, 1]])),
            )
            .unwrap(),
        )?;
        check(LinearMap::new(fixtures::sl2(), fixtures::gl2(), sl2_in_gl2.clone()).unwrap())?;
        check(LinearMap::new(fixtures::sl2(), fixtures::gl2(), scaled(&sl2_in_gl2)).unwrap())?;
        check(
            LinearMap::new(
                LieAlgebra::abelian(1),
                fixtures::heisenberg(),
                scaled(&Matrix::from_i64(&[&[0], &[0], &[1]])),
            )
            .unwrap(),
        )?;
    }
    ensure!(morphisms > 0 && morphisms < total, "one-sided sample");
    Ok(format!("{total} maps, {morphisms} morphisms"))
}

fn c9_products() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut cases: Vec<AffineSubspace> = subalgebra_catalog()
        .into_iter()
        .map(|(_, l, h)| {
            let n = l.dim();
            AffineSubspace::new(l, h, random_vector(&mut rng, n)).unwrap()
        })
        .collect();
    // non-subalgebra cases with constant rank
    cases.push(
        AffineSubspace::new(
            fixtures::sl2(),
            Subspace::axes(3, &[0, 1]),
            vector(&[0, 0, 1]),
        )
        .unwrap(),
    );
    cases.push(
        AffineSubspace::new(
            fixtures::heisenberg(),
            Subspace::axes(3, &[0, 1]),
            vector(&[0, 0, 1]),
        )
        .unwrap(),
    );
    let sampling = SampleSpec::new(6, 0);
    let verdicts: Vec<PrePoisson> = cases
        .iter()
        .map(|c| pre_poisson_check(c, &sampling).unwrap())
        .collect();
    let mut pairs = 0;
    for (i, c1) in cases.iter().enumerate() {
        for (j, c2) in cases.iter().enumerate() {
            if verdicts[i].is_not_constant() || verdicts[j].is_not_constant() {
                continue;
            }
            let p = product(c1, c2).unwrap();
            let v = pre_poisson_check(&p, &sampling).unwrap();
            ensure!(!v.is_not_constant(), "product {i}×{j} not constant");
            ensure!(
                v.generic_rank() == verdicts[i].generic_rank() + verdicts[j].generic_rank(),
                "rank {i}×{j}"
            );
            let both_certified = matches!(verdicts[i], PrePoisson::CertifiedConstant { .. })
                && matches!(verdicts[j], PrePoisson::CertifiedConstant { .. });
            ensure!(
                matches!(v, PrePoisson::CertifiedConstant { .. }) == both_certified,
                "certification {i}×{j}"
            );
            let coiso = is_coisotropic(&p).unwrap().coisotropic;
            ensure!(
                coiso
                    == (is_coisotropic(c1).unwrap().coisotropic
                        && is_coisotropic(c2).unwrap().coisotropic),
                "coisotropy {i}×{j}"
            );
            let (r1, r2) = (
                classify(c1, &sampling).unwrap(),
                classify(c2, &sampling).unwrap(),
            );
            let r = classify(&p, &sampling).unwrap();
            ensure!(
                r.rank_at_base == r1.rank_at_base + r2.rank_at_base,
                "base rank {i}×{j}"
            );
            ensure!(
                r.characteristic_rank_at_base
                    == r1.characteristic_rank_at_base + r2.characteristic_rank_at_base,
                "characteristic rank {i}×{j}"
            );
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn c10_symmetric_pair() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let algebras = [
        fixtures::sl2(),
        fixtures::gl2(),
        fixtures::heisenberg(),
        fixtures::abelian3(),
    ];
    let mut cs = Vec::new();
    for (_, l, h) in subalgebra_catalog() {
        for _ in 0..3 {
            let n = l.dim();
            cs.push(AffineSubspace::new(l.clone(), h.clone(), random_vector(&mut rng, n)).unwrap());
        }
    }
    for i in 0..800 {
        let l = &algebras[i % algebras.len()];
        let n = l.dim();
        let k = rng.gen_range(1..n);
        let gens = (0..k).map(|_| random_sparse_vector(&mut rng, n)).collect();
        let lambda = random_sparse_vector(&mut rng, n);
        cs.push(AffineSubspace::new(l.clone(), Subspace::span(n, gens).unwrap(), lambda).unwrap());
    }
    cs.push(AffineSubspace::new(fixtures::gl2(), gl2_h(), vector(&[1, 0, 0, 0])).unwrap());
    let mut tested = 0;
    for c in &cs {
        let Ok(e) = extend_with(c, &SampleSpec::new(16, 0), None, true) else {
            continue;
        };
        if e.k.is_none() || e.p.is_zero() {
            continue;
        }
        let locus = cosymplectic_locus(&e, &SampleSpec::new(8, 0), &[]).unwrap();
        if locus.never_cosymplectic {
            continue;
        }
        let pair = symmetric_pair_analysis(&e).unwrap();
        ensure!(pair.k_subalgebra && pair.kp_in_p, "failure: {pair:?}");
        tested += 1;
    }
    ensure!(tested > 0, "no extension exercised");
    Ok(format!("{tested} extensions with p ≠ 0, zero failures"))
}

fn random_polynomial(rng: &mut ChaCha8Rng, n: usize) -> Polynomial {
    let mut f = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=4) {
        let mut term = Polynomial::constant(n, random_rational(rng));
        for _ in 0..rng.gen_range(0..=3) {
            term = term.mul(&Polynomial::var(n, rng.gen_range(0..n))).unwrap();
        }
        f = f.add(&term).unwrap();
    }
    f
}

fn c11_polynomial_engine() -> Outcome {
    let algebras = [
        fixtures::sl2(),
        fixtures::gl2(),
        fixtures::heisenberg(),
        fixtures::abelian3(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..120 {
        let l = &algebras[case % algebras.len()];
        let n = l.dim();
        let (f, g, h) = (
            random_polynomial(&mut rng, n),
            random_polynomial(&mut rng, n),
            random_polynomial(&mut rng, n),
        );
        let br = |a: &Polynomial, b: &Polynomial| poisson_bracket(l, a, b).unwrap();
        ensure!(
            br(&f, &g).add(&br(&g, &f)).unwrap().is_zero(),
            "antisymmetry {case}"
        );
        let leibniz = br(&f, &g.mul(&h).unwrap())
            .sub(&br(&f, &g).mul(&h).unwrap())
            .unwrap()
            .sub(&g.mul(&br(&f, &h)).unwrap())
            .unwrap();
        ensure!(leibniz.is_zero(), "Leibniz {case}");
        let jacobi = br(&f, &br(&g, &h))
            .add(&br(&g, &br(&h, &f)))
            .unwrap()
            .add(&br(&h, &br(&f, &g)))
            .unwrap();
        ensure!(jacobi.is_zero(), "Jacobi {case}");
    }
    Ok("120 triples".into())
}

fn cli_suite() -> Vec<(String, Option<i32>, Vec<u8>)> {
    let bin = env!("CARGO_BIN_EXE_lpl");
    let mut entries: Vec<_> = std::fs::read_dir(problems_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    entries.sort();
    let mut out = Vec::new();
    for path in &entries {
        for cmd in ["validate", "classify", "extend", "pair", "algebroid"] {
            let o = Command::new(bin)
                .args([
                    cmd,
                    "--problem",
                    path.to_str().unwrap(),
                    "--json",
                    "--seed",
                    "12",
                    "--samples",
                    "16",
                ])
                .output()
                .unwrap();
            out.push((
                format!("{cmd} {}", path.display()),
                o.status.code(),
                o.stdout,
            ));
        }
    }
    for args in [
        &[
            "casimir",
            "--model",
            "sl2",
            "--f",
            "nu1^2 + nu2^2 - nu3^2",
            "--json",
        ][..],
        &[
            "bracket",
            "--model",
            "gl2",
            "--f",
            "nu2*nu3",
            "--g",
            "nu1 - nu4^2",
            "--json",
        ][..],
    ] {
        let o = Command::new(bin).args(args).output().unwrap();
        out.push((args.join(" "), o.status.code(), o.stdout));
    }
    out
}

fn c12_determinism() -> Outcome {
    let first = cli_suite();
    let second = cli_suite();
    ensure!(first.len() == second.len(), "different run counts");
    for (a, b) in first.iter().zip(&second) {
        ensure!(a == b, "{} differs", a.0);
    }
    Ok(format!("{} invocations byte-identical", first.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("gl(2) end-to-end", c1_gl2_end_to_end),
        ("gl(2) alternative R", c2_gl2_alternative_r),
        ("sl(2) classifications", c3_sl2_classifications),
        ("Casimir", c4_casimir),
        ("isotropy along (0, t, t+1)", c5_isotropy),
        ("subalgebra property suite", c6_subalgebra_suite),
        ("rank identity", c7_rank_identity),
        ("graph coisotropy vs morphism", c8_graph_morphism),
        ("products", c9_products),
        ("k subalgebra and [k, p] ⊆ p", c10_symmetric_pair),
        ("polynomial engine", c11_polynomial_engine),
        ("determinism", c12_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
