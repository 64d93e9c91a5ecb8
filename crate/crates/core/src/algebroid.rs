//! Fiber data of the groupoid picture: the subalgebroid fiber `d` of an
//! affine `C = λ + h°` and the coadjoint isotropy algebras `g_x`.

use crate::error::{Error, Result};
use crate::lie::{skew_form_on, LieAlgebra};
use crate::linalg::{Matrix, Rational, Subspace, Vector};
use crate::submanifold::{coad_span, AffineSubspace, SampleSpec};

/// `g_x = {v : ⟨x, [v, w]⟩ = 0 for all w}`, the kernel of `v ↦ coad_v(x)`.
pub fn isotropy_algebra(l: &LieAlgebra, x: &[Rational]) -> Result<Subspace> {
    let n = l.dim();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        cols.push(l.coad(&crate::linalg::unit_vector(n, i), x)?);
    }
    Ok(Matrix::from_columns(n, &cols)?.kernel())
}

/// Tangent space of the coadjoint orbit through `x`.
pub fn orbit_tangent(l: &LieAlgebra, x: &[Rational]) -> Result<Subspace> {
    coad_span(l, &Subspace::full(l.dim()), x)
}

/// `d = {v ∈ h : (coad_v λ)|_h = 0}`, the radical of `B_λ|_h`, together with
/// whether it is closed under the bracket. Requires `h` to be a subalgebra.
pub fn algebroid_fiber_d(c: &AffineSubspace) -> Result<(Subspace, bool)> {
    let l = c.algebra();
    let h = c.h();
    if let Some((i, j, w)) = l.subalgebra_violation(h)? {
        return Err(Error::NotSubalgebra(format!(
            "[h{}, h{}] = {} leaves h",
            i + 1,
            j + 1,
            crate::linalg::format_vector(&w)
        )));
    }
    let form = skew_form_on(l, c.base_point(), h.basis())?;
    let mut gens: Vec<Vector> = Vec::new();
    for coeffs in form.kernel().basis() {
        let mut v = crate::linalg::zero_vector(l.dim());
        for (a, hb) in coeffs.iter().zip(h.basis()) {
            v = crate::linalg::add(&v, &crate::linalg::scale(a, hb));
        }
        gens.push(v);
    }
    let d = Subspace::span(l.dim(), gens)?;
    let closed = l.is_subalgebra(&d)?;
    Ok((d, closed))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSample {
    pub point: Vector,
    pub isotropy_dim: usize,
    pub orbit_dim: usize,
    /// `T_xC ∩ T_xO = 0`
    pub transversal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebroidFiberReport {
    /// `None` when `h` is not a subalgebra.
    pub d: Option<Subspace>,
    pub d_is_subalgebra: Option<bool>,
    pub samples: Vec<OrbitSample>,
    pub constant_orbit_dim: bool,
}

impl AlgebroidFiberReport {
    pub fn all_transversal(&self) -> bool {
        self.samples.iter().all(|s| s.transversal)
    }
}

/// Orbit dimensions and transversality at the base point and sampled points.
pub fn transversal_orbit_report(
    c: &AffineSubspace,
    sampling: &SampleSpec,
) -> Result<AlgebroidFiberReport> {
    let l = c.algebra();
    let (d, d_is_subalgebra) = match algebroid_fiber_d(c) {
        Ok((d, closed)) => (Some(d), Some(closed)),
        Err(Error::NotSubalgebra(_)) => (None, None),
        Err(e) => return Err(e),
    };
    let mut points = vec![c.base_point().clone()];
    points.extend(c.sample_points(sampling));
    let mut samples = Vec::with_capacity(points.len());
    for x in points {
        let orbit = orbit_tangent(l, &x)?;
        let transversal = orbit.intersection(c.direction())?.is_zero();
        samples.push(OrbitSample {
            isotropy_dim: l.dim() - orbit.dim(),
            orbit_dim: orbit.dim(),
            transversal,
            point: x,
        });
    }
    let constant_orbit_dim = samples.windows(2).all(|w| w[0].orbit_dim == w[1].orbit_dim);
    Ok(AlgebroidFiberReport {
        d,
        d_is_subalgebra,
        samples,
        constant_orbit_dim,
    })
}
