//! Affine subspaces `C = λ + h°` of `g*` and their Poisson-geometric type.
//!
//! The conormal space `N*_xC` is `h` at every point, and
//! `♯N*_xC = {coad_v(x) : v ∈ h}`. Coisotropy is decided exactly. Constancy of
//! `rank(T_xC + ♯N*_xC)` is proved when `h` is a subalgebra (the sum is then
//! `h° + coad_h(λ)` at every point) and sampled at exact rational points
//! otherwise; the verdict records which of the two happened.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lie::{skew_form_on, LieAlgebra, LinearMap};
use crate::linalg::{self, Matrix, Rational, Subspace, Vector};

/// Deterministic sampling of exact rational points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSpec {
    pub count: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec { count: 64, seed: 0 }
    }
}

impl SampleSpec {
    pub fn new(count: usize, seed: u64) -> Self {
        SampleSpec { count, seed }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// `p/q` with `|p| ≤ 1000`, `1 ≤ q ≤ 1000`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let p: i64 = rng.gen_range(-1000..=1000);
    let q: i64 = rng.gen_range(1..=1000);
    linalg::frac(p, q)
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// `C = λ + h°`, presented by its defining subspace `h ⊆ g` and a base
/// point `λ ∈ g*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSubspace {
    algebra: LieAlgebra,
    h: Subspace,
    lambda: Vector,
    direction: Subspace,
}

impl AffineSubspace {
    pub fn new(algebra: LieAlgebra, h: Subspace, lambda: Vector) -> Result<Self> {
        let n = algebra.dim();
        if h.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: h.ambient_dim(),
            });
        }
        if lambda.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: lambda.len(),
            });
        }
        let direction = h.annihilator();
        Ok(AffineSubspace {
            algebra,
            h,
            lambda,
            direction,
        })
    }

    /// `base + direction`.
    pub fn from_direction(algebra: LieAlgebra, direction: &Subspace, base: Vector) -> Result<Self> {
        AffineSubspace::new(algebra, direction.annihilator(), base)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Defining subspace; also the conormal space at every point.
    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn base_point(&self) -> &Vector {
        &self.lambda
    }

    /// Tangent space `h°`.
    pub fn direction(&self) -> &Subspace {
        &self.direction
    }

    pub fn dim(&self) -> usize {
        self.direction.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn contains_point(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: x.len(),
            });
        }
        self.direction
            .contains_vector(&linalg::sub(x, &self.lambda))
    }

    fn require_point(&self, x: &[Rational]) -> Result<()> {
        if !self.contains_point(x)? {
            return Err(Error::NotOnSubspace);
        }
        Ok(())
    }

    /// `λ + Σ t_a u_a` over the canonical direction basis.
    pub fn point(&self, params: &[Rational]) -> Result<Vector> {
        if params.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: params.len(),
            });
        }
        let mut x = self.lambda.clone();
        for (t, u) in params.iter().zip(self.direction.basis()) {
            x = linalg::add(&x, &linalg::scale(t, u));
        }
        Ok(x)
    }

    /// `sampling.count` seed-deterministic exact points of `C`.
    pub fn sample_points(&self, sampling: &SampleSpec) -> Vec<Vector> {
        let mut rng = sampling.rng();
        (0..sampling.count)
            .map(|_| {
                let params = random_vector(&mut rng, self.dim());
                self.point(&params).expect("parameter count matches")
            })
            .collect()
    }

    /// Point of `C` with zero entries at the pivot columns of the direction.
    pub fn canonical_base_point(&self) -> Vector {
        self.direction
            .reduce(&self.lambda)
            .expect("base point length checked")
    }
}

/// `♯N*_xC = coad_h(x)`.
pub fn sharp_conormal_at(c: &AffineSubspace, x: &[Rational]) -> Result<Subspace> {
    c.require_point(x)?;
    coad_span(&c.algebra, c.h(), x)
}

/// `span{coad_v(x) : v ∈ u}`.
pub fn coad_span(l: &LieAlgebra, u: &Subspace, x: &[Rational]) -> Result<Subspace> {
    let gens = u
        .basis()
        .iter()
        .map(|v| l.coad(v, x))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(l.dim(), gens)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoisotropyWitness {
    /// `[u, v] ∉ h` for canonical basis vectors `u, v` of `h`.
    NotSubalgebra {
        u: Vector,
        v: Vector,
        bracket: Vector,
    },
    /// An element of `[h, h]` on which `λ` does not vanish.
    NotCharacter { element: Vector, pairing: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coisotropy {
    pub coisotropic: bool,
    pub witness: Option<CoisotropyWitness>,
}

/// Exact: `C` is coisotropic iff `h` is a subalgebra and `λ` vanishes on
/// `[h, h]`.
pub fn is_coisotropic(c: &AffineSubspace) -> Result<Coisotropy> {
    let l = &c.algebra;
    if let Some((i, j, w)) = l.subalgebra_violation(c.h())? {
        return Ok(Coisotropy {
            coisotropic: false,
            witness: Some(CoisotropyWitness::NotSubalgebra {
                u: c.h().basis()[i].clone(),
                v: c.h().basis()[j].clone(),
                bracket: w,
            }),
        });
    }
    let derived = l.subspace_bracket(c.h(), c.h())?;
    for e in derived.basis() {
        let pairing = linalg::dot(&c.lambda, e);
        if !pairing.is_zero() {
            return Ok(Coisotropy {
                coisotropic: false,
                witness: Some(CoisotropyWitness::NotCharacter {
                    element: e.clone(),
                    pairing,
                }),
            });
        }
    }
    Ok(Coisotropy {
        coisotropic: true,
        witness: None,
    })
}

/// `rank(T_xC + ♯N*_xC)` as `dim h° + rank(B_x|_h)` with
/// `B_x(v, w) = ⟨x, [v, w]⟩`.
pub fn rank_at(c: &AffineSubspace, x: &[Rational]) -> Result<usize> {
    c.require_point(x)?;
    Ok(c.dim() + skew_form_on(&c.algebra, x, c.h().basis())?.rank())
}

/// `T_xC + ♯N*_xC` as a subspace.
pub fn tangent_plus_sharp(c: &AffineSubspace, x: &[Rational]) -> Result<Subspace> {
    c.direction().sum(&sharp_conormal_at(c, x)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankAt {
    pub point: Vector,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrePoisson {
    /// Proved: `h` is a subalgebra and `T_xC + ♯N*_xC = h° + coad_h(λ)`
    /// for every `x ∈ C`.
    CertifiedConstant {
        rank: usize,
        space: Subspace,
    },
    /// The base point and every sample gave the same rank.
    SampledConstant {
        rank: usize,
        samples: usize,
        seed: u64,
    },
    NotConstant {
        first: RankAt,
        second: RankAt,
    },
}

impl PrePoisson {
    pub fn is_not_constant(&self) -> bool {
        matches!(self, PrePoisson::NotConstant { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PrePoisson::CertifiedConstant { .. } => "CertifiedConstant",
            PrePoisson::SampledConstant { .. } => "SampledConstant",
            PrePoisson::NotConstant { .. } => "NotConstant",
        }
    }

    /// Largest rank seen (the constant rank when constant).
    pub fn generic_rank(&self) -> usize {
        match self {
            PrePoisson::CertifiedConstant { rank, .. }
            | PrePoisson::SampledConstant { rank, .. } => *rank,
            PrePoisson::NotConstant { first, second } => first.rank.max(second.rank),
        }
    }
}

pub fn pre_poisson_check(c: &AffineSubspace, sampling: &SampleSpec) -> Result<PrePoisson> {
    let l = &c.algebra;
    if l.is_subalgebra(c.h())? {
        let space = c.direction().sum(&coad_span(l, c.h(), &c.lambda)?)?;
        return Ok(PrePoisson::CertifiedConstant {
            rank: space.dim(),
            space,
        });
    }
    let base = RankAt {
        point: c.lambda.clone(),
        rank: rank_at(c, &c.lambda)?,
    };
    for x in c.sample_points(sampling) {
        let r = rank_at(c, &x)?;
        if r != base.rank {
            return Ok(PrePoisson::NotConstant {
                first: base,
                second: RankAt { point: x, rank: r },
            });
        }
    }
    Ok(PrePoisson::SampledConstant {
        rank: base.rank,
        samples: sampling.count,
        seed: sampling.seed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointwiseFlags {
    /// `dim(T_xC ∩ ♯N*_xC)`
    pub characteristic_rank: usize,
    pub poisson_dirac: bool,
    pub cosymplectic: bool,
}

pub fn pointwise_flags(c: &AffineSubspace, x: &[Rational]) -> Result<PointwiseFlags> {
    let sharp = sharp_conormal_at(c, x)?;
    let characteristic_rank = c.direction().intersection(&sharp)?.dim();
    let poisson_dirac = characteristic_rank == 0;
    Ok(PointwiseFlags {
        characteristic_rank,
        poisson_dirac,
        cosymplectic: poisson_dirac && c.dim() + sharp.dim() == c.ambient_dim(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub dim: usize,
    pub coisotropic: Coisotropy,
    pub pre_poisson: PrePoisson,
    pub generic_rank: usize,
    pub rank_at_base: usize,
    pub characteristic_rank_at_base: usize,
    pub poisson_dirac_at_base: bool,
    pub cosymplectic_at_base: bool,
    /// `C` is a single point; only data at `λ` is meaningful.
    pub pointwise_only: bool,
}

pub fn classify(c: &AffineSubspace, sampling: &SampleSpec) -> Result<ClassificationReport> {
    let coisotropic = is_coisotropic(c)?;
    let pre_poisson = pre_poisson_check(c, sampling)?;
    let flags = pointwise_flags(c, &c.lambda)?;
    Ok(ClassificationReport {
        dim: c.dim(),
        coisotropic,
        generic_rank: pre_poisson.generic_rank(),
        pre_poisson,
        rank_at_base: rank_at(c, &c.lambda)?,
        characteristic_rank_at_base: flags.characteristic_rank,
        poisson_dirac_at_base: flags.poisson_dirac,
        cosymplectic_at_base: flags.cosymplectic,
        pointwise_only: c.dim() == 0,
    })
}

/// Preimages under the restriction `f: g* → h*` for a subalgebra `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preimage {
    /// `f⁻¹(ν) = λ + h°`
    pub c: AffineSubspace,
    /// `f⁻¹(ν + S)` for the greedy slice `S` transverse to the `H`-orbit
    /// through `ν`.
    pub slice: Option<AffineSubspace>,
    /// `T_ν(H·ν) ⊆ h*`, in coordinates dual to the canonical basis of `h`.
    pub orbit_tangent: Subspace,
}

/// Lifts of covectors on `h` (coordinates against the canonical basis of
/// `h`) to `g*`, vanishing on the greedy complement of `h`.
pub struct Lift {
    system: Matrix,
    h_dim: usize,
}

impl Lift {
    pub fn new(h: &Subspace) -> Result<Self> {
        let n = h.ambient_dim();
        let comp = h.complement_in(&Subspace::full(n))?;
        let rows: Vec<Vector> = h.basis().iter().chain(comp.basis()).cloned().collect();
        Ok(Lift {
            system: Matrix::from_rows(n, &rows)?,
            h_dim: h.dim(),
        })
    }

    pub fn lift(&self, nu: &[Rational]) -> Result<Vector> {
        if nu.len() != self.h_dim {
            return Err(Error::DimensionMismatch {
                expected: self.h_dim,
                found: nu.len(),
            });
        }
        let mut rhs = nu.to_vec();
        rhs.resize(self.system.rows(), Rational::zero());
        linalg::solve(&self.system, &rhs)
    }
}

pub fn preimage_construction(
    l: &LieAlgebra,
    h: &Subspace,
    nu: &[Rational],
    with_slice: bool,
) -> Result<Preimage> {
    let hh = l.restrict_to(h)?;
    let lift = Lift::new(h)?;
    let lambda = lift.lift(nu)?;
    let c = AffineSubspace::new(l.clone(), h.clone(), lambda.clone())?;
    let m = h.dim();
    let orbit_tangent = coad_span(&hh, &Subspace::full(m), nu)?;
    let slice = if with_slice {
        let s_dir = orbit_tangent.complement_in(&Subspace::full(m))?;
        let lifted = s_dir
            .basis()
            .iter()
            .map(|s| lift.lift(s))
            .collect::<Result<Vec<_>>>()?;
        let dir = c.direction().sum(&Subspace::span(l.dim(), lifted)?)?;
        Some(AffineSubspace::from_direction(l.clone(), &dir, lambda)?)
    } else {
        None
    };
    Ok(Preimage {
        c,
        slice,
        orbit_tangent,
    })
}

/// Annihilator `W = {(-φ(w), w)}` of the graph of `φ*` inside
/// `g ⊕ h̄` (second factor with negated bracket), and whether `W` is a
/// subalgebra, i.e. whether the graph is coisotropic.
pub fn graph_coisotropy(phi: &LinearMap) -> Result<(Subspace, bool)> {
    let g = &phi.codomain;
    let h = &phi.domain;
    let total = g.direct_sum(h, -1);
    let (n, m) = (g.dim(), h.dim());
    let gens = (0..m)
        .map(|a| {
            let mut v: Vector = phi.matrix.column(a).iter().map(|x| -x.clone()).collect();
            v.extend(linalg::unit_vector(m, a));
            v
        })
        .collect();
    let w = Subspace::span(n + m, gens)?;
    let coisotropic = total.is_subalgebra(&w)?;
    Ok((w, coisotropic))
}

/// `C₁ × C₂` inside `(g₁ ⊕ g₂)*`.
pub fn product(c1: &AffineSubspace, c2: &AffineSubspace) -> Result<AffineSubspace> {
    let l = c1.algebra.direct_sum(&c2.algebra, 1);
    let (n1, n2) = (c1.ambient_dim(), c2.ambient_dim());
    let mut gens: Vec<Vector> = Vec::new();
    for v in c1.h().basis() {
        let mut w = v.clone();
        w.extend(linalg::zero_vector(n2));
        gens.push(w);
    }
    for v in c2.h().basis() {
        let mut w = linalg::zero_vector(n1);
        w.extend(v.iter().cloned());
        gens.push(w);
    }
    let h = Subspace::span(n1 + n2, gens)?;
    let mut lambda = c1.lambda.clone();
    lambda.extend(c2.lambda.iter().cloned());
    AffineSubspace::new(l, h, lambda)
}
