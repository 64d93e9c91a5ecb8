//! Cosymplectic extensions of pre-Poisson affine subspaces.
//!
//! Given `C = λ + h°` with constant `rank(TC + ♯N*C)`, a complement `R` of
//! `T_λC + ♯N*_λC` gives the affine subspace `P̃ = λ + (h° ⊕ R)`, whose
//! annihilator is `p`. Where `P̃` is cosymplectic and `♯N*P̃ = coad_p(x)` is
//! independent of `x`, that common space is `k°`, and `(k, p)` satisfies
//! `k ⊕ p = g`, `[k, k] ⊆ k` and `[k, p] ⊆ p`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{skew_form_on, LieAlgebra};
use crate::linalg::{self, Matrix, Rational, Subspace, Vector};
use crate::poly::{pfaffian, Polynomial};
use crate::submanifold::{
    coad_span, pointwise_flags, pre_poisson_check, rank_at, tangent_plus_sharp, AffineSubspace,
    PrePoisson, SampleSpec,
};

/// How constancy of `rank(TC + ♯N*C)` was established before extending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Certified,
    /// Sampled evidence only; `h` was not a subalgebra.
    Sampled {
        samples: usize,
        seed: u64,
    },
    /// The rank varies along `C`; the extension lives over the open part
    /// of `C` where it equals the largest value seen, which the base point
    /// attains.
    GenericLocus {
        rank: usize,
        samples: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub c: AffineSubspace,
    pub r: Subspace,
    /// `P̃ = λ + (h° ⊕ R)`
    pub extended: AffineSubspace,
    /// Annihilator of the direction of `P̃`.
    pub p: Subspace,
    /// Set when constancy of `♯N*P̃` is certified.
    pub k: Option<Subspace>,
    pub evidence: Evidence,
}

/// Complement `R` of `T_λC + ♯N*_λC`, greedy unless `user` is given (then
/// it is validated). Refuses when the rank is not constant along `C`,
/// unless `restrict` is set and `λ` attains the generic rank.
pub fn choose_r(
    c: &AffineSubspace,
    sampling: &SampleSpec,
    user: Option<&Subspace>,
    restrict: bool,
) -> Result<(Subspace, Evidence)> {
    let evidence = match pre_poisson_check(c, sampling)? {
        PrePoisson::CertifiedConstant { .. } => Evidence::Certified,
        PrePoisson::SampledConstant { samples, seed, .. } => Evidence::Sampled { samples, seed },
        PrePoisson::NotConstant { .. } if restrict => {
            let at_base = rank_at(c, c.base_point())?;
            let mut generic = at_base;
            for x in c.sample_points(sampling) {
                generic = generic.max(rank_at(c, &x)?);
            }
            if at_base < generic {
                return Err(Error::RankNotConstant(format!(
                    "base point {} has rank {at_base}, below the generic rank {generic}",
                    linalg::format_vector(c.base_point())
                )));
            }
            Evidence::GenericLocus {
                rank: generic,
                samples: sampling.count,
                seed: sampling.seed,
            }
        }
        PrePoisson::NotConstant { first, second } => {
            return Err(Error::RankNotConstant(format!(
                "rank {} at {} but {} at {}",
                first.rank,
                linalg::format_vector(&first.point),
                second.rank,
                linalg::format_vector(&second.point)
            )))
        }
    };
    let u = tangent_plus_sharp(c, c.base_point())?;
    let full = Subspace::full(c.ambient_dim());
    let r = match user {
        Some(r) => {
            check_complement(r, &u)?;
            r.clone()
        }
        None => u.complement_in(&full)?,
    };
    Ok((r, evidence))
}

fn check_complement(r: &Subspace, u: &Subspace) -> Result<()> {
    let full = Subspace::full(u.ambient_dim());
    if r.ambient_dim() != u.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: u.ambient_dim(),
            found: r.ambient_dim(),
        });
    }
    if !r.is_complement_of(u, &full)? {
        return Err(Error::NotComplement(format!(
            "R has dimension {}, TC + ♯N*C has dimension {} and they meet in dimension {}",
            r.dim(),
            u.dim(),
            r.intersection(u)?.dim()
        )));
    }
    Ok(())
}

/// Extends `C` along `R`.
pub fn extend(c: &AffineSubspace, r: &Subspace, evidence: Evidence) -> Result<Extension> {
    let u = tangent_plus_sharp(c, c.base_point())?;
    check_complement(r, &u)?;
    let dir = c.direction().sum(r)?;
    let extended =
        AffineSubspace::from_direction(c.algebra().clone(), &dir, c.base_point().clone())?;
    let p = extended.h().clone();
    let mut e = Extension {
        c: c.clone(),
        r: r.clone(),
        extended,
        p,
        k: None,
        evidence,
    };
    if let Constancy::Certified { k_annihilator, .. } = constant_sharp_conormal(&e)? {
        e.k = Some(k_annihilator.annihilator());
    }
    Ok(e)
}

/// `choose_r` followed by `extend`.
pub fn extend_with(
    c: &AffineSubspace,
    sampling: &SampleSpec,
    user: Option<&Subspace>,
    restrict: bool,
) -> Result<Extension> {
    let (r, evidence) = choose_r(c, sampling, user, restrict)?;
    extend(c, &r, evidence)
}

/// Cosymplectic locus of `P̃` at exact points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusReport {
    pub dim_p: usize,
    /// Pfaffian of `B_ν|_p`, `B_ν(v, w) = ⟨ν, [v, w]⟩`, as a polynomial on `g*`.
    /// `P̃` is cosymplectic exactly off its zero set.
    pub pfaffian: Polynomial,
    /// The same polynomial in the parameters of `P̃` (variables numbered
    /// along the canonical direction basis, base point `λ`).
    pub pfaffian_on_extension: Polynomial,
    /// `dim p` odd or the Pfaffian vanishes on `P̃`.
    pub never_cosymplectic: bool,
    pub base_cosymplectic: bool,
    pub checked: Vec<(Vector, bool)>,
}

impl LocusReport {
    pub fn failing(&self) -> impl Iterator<Item = &Vector> {
        self.checked.iter().filter(|(_, ok)| !ok).map(|(x, _)| x)
    }
}

/// `B_x|_p` nondegenerate.
pub fn cosymplectic_at(e: &Extension, x: &[Rational]) -> Result<bool> {
    if !e.extended.contains_point(x)? {
        return Err(Error::NotOnSubspace);
    }
    let g = skew_form_on(e.c.algebra(), x, e.p.basis())?;
    Ok(g.rank() == e.p.dim())
}

pub fn cosymplectic_locus(
    e: &Extension,
    sampling: &SampleSpec,
    extra: &[Vector],
) -> Result<LocusReport> {
    let l = e.c.algebra();
    let n = l.dim();
    let basis = e.p.basis();
    let m = basis.len();
    let mut entries = vec![vec![Polynomial::zero(n); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let lin = Polynomial::linear(&l.bracket(&basis[i], &basis[j])?);
            entries[j][i] = lin.neg();
            entries[i][j] = lin;
        }
    }
    let pf = pfaffian(&entries, n)?;
    let on_ext = pf.substitute_affine(e.extended.base_point(), e.extended.direction().basis())?;
    let mut checked = Vec::new();
    for x in extra
        .iter()
        .cloned()
        .chain(e.extended.sample_points(sampling))
    {
        let ok = cosymplectic_at(e, &x)?;
        checked.push((x, ok));
    }
    Ok(LocusReport {
        dim_p: m,
        never_cosymplectic: on_ext.is_zero(),
        base_cosymplectic: cosymplectic_at(e, e.extended.base_point())?,
        pfaffian: pf,
        pfaffian_on_extension: on_ext,
        checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constancy {
    /// `coad_p(x) ⊆ k°` for every `x ∈ P̃`, with equality at `reference` and
    /// hence on the open set where the dimension is maximal.
    Certified {
        k_annihilator: Subspace,
        reference: Vector,
    },
    /// `coad_p_vector(direction)` leaves the space spanned at `reference`,
    /// so `♯N*P̃` moves along `direction`.
    NotConstant {
        reference: Vector,
        p_vector: Vector,
        direction: Vector,
        moved: Vector,
    },
}

/// Exact certificate for constancy of `♯N*_xP̃ = coad_p(x)`. Since
/// `coad_v(x)` is linear in `x`, the span is contained in the span at the
/// reference point everywhere iff `coad_{p_i}(u_j)` lies in it for every
/// basis vector `p_i` of `p` and direction vector `u_j` of `P̃`.
pub fn constant_sharp_conormal(e: &Extension) -> Result<Constancy> {
    let l = e.c.algebra();
    let p = &e.p;
    let base = e.extended.base_point();
    let dirs = e.extended.direction().basis();

    // reference point: first candidate of maximal span dimension
    let mut candidates = vec![base.clone()];
    candidates.extend(dirs.iter().map(|u| linalg::add(base, u)));
    candidates.extend(e.extended.sample_points(&SampleSpec::new(8, 0)));
    let mut best: Option<(Vector, Subspace)> = None;
    for x in candidates {
        let s = coad_span(l, p, &x)?;
        if best.as_ref().is_none_or(|(_, b)| s.dim() > b.dim()) {
            best = Some((x, s));
        }
    }
    let (reference, span) = best.expect("at least the base point");

    for pv in p.basis() {
        for u in dirs {
            let moved = l.coad(pv, u)?;
            if !span.contains_vector(&moved)? {
                return Ok(Constancy::NotConstant {
                    reference,
                    p_vector: pv.clone(),
                    direction: u.clone(),
                    moved,
                });
            }
        }
    }
    Ok(Constancy::Certified {
        k_annihilator: span,
        reference,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub k: Subspace,
    pub p: Subspace,
    pub direct_sum: bool,
    pub k_subalgebra: bool,
    pub kp_in_p: bool,
    pub pp_in_k: bool,
}

impl PairReport {
    pub fn symmetric_pair(&self) -> bool {
        self.direct_sum && self.k_subalgebra && self.kp_in_p && self.pp_in_k
    }
}

/// Bracket conditions of an arbitrary decomposition `g = k ⊕ p`.
pub fn decomposition_check(l: &LieAlgebra, k: &Subspace, p: &Subspace) -> Result<PairReport> {
    let full = Subspace::full(l.dim());
    Ok(PairReport {
        direct_sum: k.is_complement_of(p, &full)?,
        k_subalgebra: l.is_subalgebra(k)?,
        kp_in_p: p.contains(&l.subspace_bracket(k, p)?)?,
        pp_in_k: k.contains(&l.subspace_bracket(p, p)?)?,
        k: k.clone(),
        p: p.clone(),
    })
}

pub fn symmetric_pair_analysis(e: &Extension) -> Result<PairReport> {
    let k = e.k.as_ref().ok_or(Error::ConstancyNotCertified)?;
    decomposition_check(e.c.algebra(), k, &e.p)
}

/// `v ↦ coad_v(y)` is injective on `p`.
pub fn injectivity_at(l: &LieAlgebra, p: &Subspace, y: &[Rational]) -> Result<bool> {
    Ok(coad_span(l, p, y)?.dim() == p.dim())
}

/// Poisson structure induced on `P̃ = x₀ + p°` by functions constant along
/// `k°`, in the coordinates `x = x₀ + Σ s_a d_a` (`d_a` the canonical basis
/// of `p°`, `x₀` the canonical base point):
/// `{s_a, s_b} = offset_ab + Σ_e c^e_ab s_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedStructure {
    /// Linear part, as structure constants on the coordinates `s_a`.
    pub algebra: LieAlgebra,
    /// Constant part (zero when `P̃` is a linear subspace).
    pub offset: Matrix,
    pub base_point: Vector,
    pub coordinates: Vec<Vector>,
    /// Elements `k'_a ∈ k` with `⟨d_b, k'_a⟩ = δ_ab`; `s_a` extends to the
    /// linear function `k'_a` up to a constant.
    pub dual_basis: Vec<Vector>,
}

impl InducedStructure {
    pub fn is_zero(&self) -> bool {
        self.algebra.is_abelian() && self.offset.is_zero()
    }
}

pub fn induced_from(
    l: &LieAlgebra,
    k: &Subspace,
    p: &Subspace,
    base: &[Rational],
) -> Result<InducedStructure> {
    let full = Subspace::full(l.dim());
    if !k.is_complement_of(p, &full)? {
        return Err(Error::NotComplement("k ⊕ p ≠ g".into()));
    }
    if !l.is_subalgebra(k)? {
        return Err(Error::NotSubalgebra("k".into()));
    }
    let d = p.annihilator();
    let m = d.dim();
    let base_point = d.reduce(base)?;
    // A[b][c] = ⟨d_b, k_c⟩; dual basis k'_a = Σ_c X[c][a] k_c with A X = I
    let mut a = Matrix::zeros(m, m);
    for (b, db) in d.basis().iter().enumerate() {
        for (c, kc) in k.basis().iter().enumerate() {
            a[(b, c)] = linalg::dot(db, kc);
        }
    }
    let mut dual_basis = Vec::with_capacity(m);
    for idx in 0..m {
        let x = linalg::solve(&a, &linalg::unit_vector(m, idx))?;
        let mut v = linalg::zero_vector(l.dim());
        for (xc, kc) in x.iter().zip(k.basis()) {
            v = linalg::add(&v, &linalg::scale(xc, kc));
        }
        dual_basis.push(v);
    }
    let mut brackets = Vec::new();
    let mut offset = Matrix::zeros(m, m);
    for i in 0..m {
        for j in i + 1..m {
            let w = l.bracket(&dual_basis[i], &dual_basis[j])?;
            let coeffs: Vector = d.basis().iter().map(|de| linalg::dot(de, &w)).collect();
            brackets.push((i, j, coeffs));
            let o = linalg::dot(&base_point, &w);
            offset[(j, i)] = -o.clone();
            offset[(i, j)] = o;
        }
    }
    let labels = (1..=m).map(|i| format!("s{i}")).collect();
    let algebra = LieAlgebra::new(labels, brackets)?;
    algebra.validate_jacobi().into_result()?;
    Ok(InducedStructure {
        algebra,
        offset,
        base_point,
        coordinates: d.basis().to_vec(),
        dual_basis,
    })
}

pub fn induced_structure(e: &Extension) -> Result<InducedStructure> {
    let k = e.k.as_ref().ok_or(Error::ConstancyNotCertified)?;
    induced_from(e.c.algebra(), k, &e.p, e.extended.base_point())
}

/// Whether `C` is coisotropic inside `P̃` at `x ∈ C`: for each `w ∈ h`,
/// correct `w` by the unique `q ∈ p` with `B_x(p, w + q) = 0`, then test
/// `coad_{w+q}(x) ∈ TC`. `None` when `P̃` is not cosymplectic at `x`.
pub fn coisotropic_in_extension(e: &Extension, x: &[Rational]) -> Result<Option<bool>> {
    if !e.c.contains_point(x)? {
        return Err(Error::NotOnSubspace);
    }
    if !cosymplectic_at(e, x)? {
        return Ok(None);
    }
    let l = e.c.algebra();
    let pb = e.p.basis();
    let gram = skew_form_on(l, x, pb)?;
    for w in e.c.h().basis() {
        let rhs: Vector = pb
            .iter()
            .map(|pi| -crate::lie::pairing_of_bracket(l, x, pi, w).expect("dimensions checked"))
            .collect();
        let beta = if pb.is_empty() {
            Vec::new()
        } else {
            linalg::solve(&gram, &rhs)?
        };
        let mut corrected = w.clone();
        for (b, pi) in beta.iter().zip(pb) {
            if !b.is_zero() {
                corrected = linalg::add(&corrected, &linalg::scale(b, pi));
            }
        }
        if !e.c.direction().contains_vector(&l.coad(&corrected, x)?)? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// `dim ♯N*_xP̃ + dim P̃ = n` and `T ∩ ♯N* = 0` at `x`.
pub fn direct_sum_at(e: &Extension, x: &[Rational]) -> Result<bool> {
    Ok(pointwise_flags(&e.extended, x)?.cosymplectic)
}
