//! Command dispatch and reports for the `lpl` binary.
//!
//! Every report is a JSON value; the human text form is a flat rendering of
//! the same value. Maps are key-sorted, rationals are strings.

use serde_json::{json, Map, Value};

use crate::algebroid::{isotropy_algebra, transversal_orbit_report};
use crate::embedding::{
    constant_sharp_conormal, cosymplectic_locus, decomposition_check, extend_with, induced_from,
    induced_structure, symmetric_pair_analysis, Constancy, Evidence, InducedStructure, PairReport,
};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Matrix, Rational, Subspace};
use crate::model::Problem;
use crate::poly::{casimir_check, poisson_bracket, Polynomial};
use crate::submanifold::{classify, CoisotropyWitness, PrePoisson, SampleSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Classify,
    Extend,
    Pair,
    Algebroid,
    Bracket,
    Casimir,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Classify => "classify",
            Command::Extend => "extend",
            Command::Pair => "pair",
            Command::Algebroid => "algebroid",
            Command::Bracket => "bracket",
            Command::Casimir => "casimir",
        }
    }
}

/// Polynomial arguments of `bracket` and `casimir`.
#[derive(Debug, Clone, Default)]
pub struct PolyArgs {
    pub f: Option<String>,
    pub g: Option<String>,
}

fn rat(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn span_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| vec_json(v)).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| vec_json(r)).collect())
}

fn sampled(s: &SampleSpec) -> String {
    format!("sampled({}, {})", s.count, s.seed)
}

fn header(cmd: Command, p: &Problem) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(cmd.name()));
    m.insert("model".into(), json!(p.model_name));
    m.insert("dim".into(), json!(p.algebra.dim()));
    m.insert("basis".into(), json!(p.algebra.labels()));
    m
}

fn pre_poisson_json(v: &PrePoisson) -> Value {
    match v {
        PrePoisson::CertifiedConstant { rank, space } => json!({
            "verdict": v.name(),
            "rank": rank,
            "space": span_json(space),
            "provenance": "certified",
        }),
        PrePoisson::SampledConstant {
            rank,
            samples,
            seed,
        } => json!({
            "verdict": v.name(),
            "rank": rank,
            "provenance": format!("sampled({samples}, {seed})"),
        }),
        PrePoisson::NotConstant { first, second } => json!({
            "verdict": v.name(),
            "first": {"point": vec_json(&first.point), "rank": first.rank},
            "second": {"point": vec_json(&second.point), "rank": second.rank},
            "provenance": "certified",
        }),
    }
}

fn classify_report(p: &Problem) -> Result<Value> {
    let c = p.affine()?;
    let r = classify(&c, &p.sampling)?;
    let witness = match &r.coisotropic.witness {
        None => Value::Null,
        Some(CoisotropyWitness::NotSubalgebra { u, v, bracket }) => json!({
            "kind": "not_subalgebra",
            "u": vec_json(u),
            "v": vec_json(v),
            "bracket": vec_json(bracket),
        }),
        Some(CoisotropyWitness::NotCharacter { element, pairing }) => json!({
            "kind": "not_character",
            "element": vec_json(element),
            "pairing": rat(pairing),
        }),
    };
    let mut m = header(Command::Classify, p);
    m.insert("h".into(), span_json(c.h()));
    m.insert("lambda".into(), vec_json(&p.lambda));
    m.insert(
        "C".into(),
        json!({
            "dim": r.dim,
            "base_point": vec_json(c.base_point()),
            "direction": span_json(c.direction()),
        }),
    );
    m.insert(
        "coisotropic".into(),
        json!({"value": r.coisotropic.coisotropic, "witness": witness, "provenance": "certified"}),
    );
    m.insert("pre_poisson".into(), pre_poisson_json(&r.pre_poisson));
    m.insert("generic_rank".into(), json!(r.generic_rank));
    m.insert(
        "at_base".into(),
        json!({
            "rank": r.rank_at_base,
            "characteristic_rank": r.characteristic_rank_at_base,
            "poisson_dirac": r.poisson_dirac_at_base,
            "cosymplectic": r.cosymplectic_at_base,
        }),
    );
    m.insert("pointwise_only".into(), json!(r.pointwise_only));
    Ok(Value::Object(m))
}

fn evidence_str(e: &Evidence) -> String {
    match e {
        Evidence::Certified => "certified".into(),
        Evidence::Sampled { samples, seed } => format!("sampled({samples}, {seed})"),
        Evidence::GenericLocus {
            rank,
            samples,
            seed,
        } => {
            format!("generic locus, rank {rank}, sampled({samples}, {seed})")
        }
    }
}

fn constancy_json(c: &Constancy) -> Value {
    match c {
        Constancy::Certified {
            k_annihilator,
            reference,
        } => json!({
            "verdict": "Certified",
            "k_annihilator": span_json(k_annihilator),
            "k": span_json(&k_annihilator.annihilator()),
            "reference": vec_json(reference),
            "provenance": "certified",
        }),
        Constancy::NotConstant {
            reference,
            p_vector,
            direction,
            moved,
        } => json!({
            "verdict": "NotConstant",
            "reference": vec_json(reference),
            "p_vector": vec_json(p_vector),
            "direction": vec_json(direction),
            "moved": vec_json(moved),
            "provenance": "certified",
        }),
    }
}

fn extend_report(p: &Problem) -> Result<Value> {
    let c = p.affine()?;
    let e = extend_with(&c, &p.sampling, p.r.as_ref(), p.restrict)?;
    let locus = cosymplectic_locus(&e, &p.sampling, &p.points)?;
    let checked: Vec<Value> = locus
        .checked
        .iter()
        .map(|(x, ok)| json!({"point": vec_json(x), "cosymplectic": ok}))
        .collect();
    let mut m = header(Command::Extend, p);
    m.insert("lambda".into(), vec_json(&p.lambda));
    m.insert("R".into(), span_json(&e.r));
    m.insert(
        "R_source".into(),
        json!(if p.r.is_some() { "user" } else { "greedy" }),
    );
    m.insert(
        "pre_poisson_evidence".into(),
        json!(evidence_str(&e.evidence)),
    );
    m.insert(
        "extension".into(),
        json!({
            "dim": e.extended.dim(),
            "base_point": vec_json(e.extended.base_point()),
            "direction": span_json(e.extended.direction()),
        }),
    );
    m.insert("p".into(), span_json(&e.p));
    m.insert(
        "constancy".into(),
        constancy_json(&constant_sharp_conormal(&e)?),
    );
    m.insert(
        "cosymplectic_locus".into(),
        json!({
            "dim_p": locus.dim_p,
            "pfaffian": locus.pfaffian.to_string(),
            "pfaffian_on_extension": locus.pfaffian_on_extension.render("s"),
            "never_cosymplectic": locus.never_cosymplectic,
            "base_cosymplectic": locus.base_cosymplectic,
            "checked": checked,
            "failing": locus.failing().count(),
            "provenance": sampled(&p.sampling),
        }),
    );
    Ok(Value::Object(m))
}

fn pair_flags_json(r: &PairReport) -> Value {
    json!({
        "direct_sum": r.direct_sum,
        "k_subalgebra": r.k_subalgebra,
        "kp_in_p": r.kp_in_p,
        "pp_in_k": r.pp_in_k,
        "symmetric_pair": r.symmetric_pair(),
    })
}

fn induced_json(s: &InducedStructure) -> Value {
    let brackets: Vec<Value> = s
        .algebra
        .nonzero_brackets()
        .iter()
        .map(|(i, j, w)| json!({"i": i, "j": j, "value": vec_json(w)}))
        .collect();
    json!({
        "zero": s.is_zero(),
        "coordinates": s.coordinates.iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
        "dual_basis": s.dual_basis.iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
        "base_point": vec_json(&s.base_point),
        "linear_brackets": brackets,
        "offset": matrix_json(&s.offset),
    })
}

fn pair_report(p: &Problem) -> Result<Value> {
    let mut m = header(Command::Pair, p);
    let (report, induced, source) = match (&p.k, &p.p) {
        (Some(k), Some(pp)) => {
            let r = decomposition_check(&p.algebra, k, pp)?;
            let s = if r.direct_sum && r.k_subalgebra {
                Some(induced_from(&p.algebra, k, pp, &p.lambda)?)
            } else {
                None
            };
            (r, s, "user".to_string())
        }
        (None, None) => {
            let c = p.affine()?;
            let e = extend_with(&c, &p.sampling, p.r.as_ref(), p.restrict)?;
            let r = symmetric_pair_analysis(&e)?;
            let s = if r.k_subalgebra {
                Some(induced_structure(&e)?)
            } else {
                None
            };
            m.insert(
                "pre_poisson_evidence".into(),
                json!(evidence_str(&e.evidence)),
            );
            (r, s, "extension".to_string())
        }
        _ => {
            return Err(Error::Malformed(
                "k_basis and p_basis must be given together".into(),
            ))
        }
    };
    m.insert("source".into(), json!(source));
    m.insert("k".into(), span_json(&report.k));
    m.insert("p".into(), span_json(&report.p));
    m.insert("flags".into(), pair_flags_json(&report));
    m.insert("provenance".into(), json!("certified"));
    m.insert(
        "induced".into(),
        induced.as_ref().map_or(Value::Null, induced_json),
    );
    Ok(Value::Object(m))
}

fn algebroid_report(p: &Problem) -> Result<Value> {
    let c = p.affine()?;
    let r = transversal_orbit_report(&c, &p.sampling)?;
    let samples: Vec<Value> = r
        .samples
        .iter()
        .map(|s| {
            json!({
                "point": vec_json(&s.point),
                "orbit_dim": s.orbit_dim,
                "isotropy_dim": s.isotropy_dim,
                "transversal": s.transversal,
            })
        })
        .collect();
    let mut m = header(Command::Algebroid, p);
    m.insert("h".into(), span_json(c.h()));
    m.insert("lambda".into(), vec_json(&p.lambda));
    m.insert("d".into(), r.d.as_ref().map_or(Value::Null, span_json));
    m.insert("d_is_subalgebra".into(), json!(r.d_is_subalgebra));
    m.insert(
        "isotropy_at_base".into(),
        span_json(&isotropy_algebra(&p.algebra, &p.lambda)?),
    );
    m.insert("samples".into(), Value::Array(samples));
    m.insert("constant_orbit_dim".into(), json!(r.constant_orbit_dim));
    m.insert("transversal".into(), json!(r.all_transversal()));
    m.insert("provenance".into(), json!(sampled(&p.sampling)));
    Ok(Value::Object(m))
}

fn need_poly(p: &Problem, text: &Option<String>, flag: &str) -> Result<Polynomial> {
    let t = text
        .as_ref()
        .ok_or_else(|| Error::Malformed(format!("--{flag} is required")))?;
    Polynomial::parse(p.algebra.dim(), t)
}

pub fn run(cmd: Command, p: &Problem, args: &PolyArgs) -> Result<Value> {
    match cmd {
        Command::Validate => {
            let mut m = header(cmd, p);
            m.insert("jacobi".into(), json!(p.algebra.validate_jacobi().passes()));
            m.insert("abelian".into(), json!(p.algebra.is_abelian()));
            m.insert("center".into(), span_json(&p.algebra.center()));
            m.insert("derived".into(), span_json(&p.algebra.derived()));
            Ok(Value::Object(m))
        }
        Command::Classify => classify_report(p),
        Command::Extend => extend_report(p),
        Command::Pair => pair_report(p),
        Command::Algebroid => algebroid_report(p),
        Command::Bracket => {
            let f = need_poly(p, &args.f, "f")?;
            let g = need_poly(p, &args.g, "g")?;
            let b = poisson_bracket(&p.algebra, &f, &g)?;
            let mut m = header(cmd, p);
            m.insert("f".into(), json!(f.to_string()));
            m.insert("g".into(), json!(g.to_string()));
            m.insert("bracket".into(), json!(b.to_string()));
            Ok(Value::Object(m))
        }
        Command::Casimir => {
            let f = need_poly(p, &args.f, "f")?;
            let mut m = header(cmd, p);
            m.insert("f".into(), json!(f.to_string()));
            m.insert("casimir".into(), json!(casimir_check(&p.algebra, &f)?));
            m.insert("provenance".into(), json!("certified"));
            Ok(Value::Object(m))
        }
    }
}

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|i| match i {
                    Value::Object(_) => None,
                    Value::Array(_) => scalar_text(i),
                    other => scalar_text(other),
                })
                .collect();
            parts.map(|p| format!("({})", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn text_into(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar_text(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                text_into(out, k, x, indent + 1);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                text_into(out, &format!("[{}]", i + 1), x, indent + 1);
            }
        }
        _ => unreachable!(),
    }
}

/// Plain text rendering of a report.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                text_into(&mut out, k, x, 0);
            }
        }
        other => text_into(&mut out, "value", other, 0),
    }
    out
}
