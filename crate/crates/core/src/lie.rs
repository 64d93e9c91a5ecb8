//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Conventions: `[e_i, e_j] = Σ_k c^k_ij e_k`; `ad_v(w) = [v, w]`; the
//! coadjoint matrix is the plain transpose of `ad_v` acting on `g*`
//! coordinates, so that `⟨coad_v(x), w⟩ = ⟨x, [v, w]⟩`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, format_vector, zero_vector, Matrix, Rational, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    // table[i * n + j] = [e_i, e_j], antisymmetric by construction
    table: Vec<Vector>,
}

/// Result of checking the Jacobi identity on basis triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    /// First violating triple `(i, j, k)` with `i < j < k` (0-based) and the
    /// residual `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub violation: Option<(usize, usize, usize, Vector)>,
}

impl JacobiReport {
    pub fn passes(&self) -> bool {
        self.violation.is_none()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some((i, j, k, r)) => Err(Error::Jacobi {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                residual: format_vector(&r),
            }),
        }
    }
}

impl LieAlgebra {
    /// Builds an algebra from the brackets `[e_i, e_j]` with `i < j`.
    /// Unlisted pairs bracket to zero. Jacobi is not checked here; see
    /// [`LieAlgebra::validate_jacobi`].
    pub fn new(labels: Vec<String>, brackets: Vec<(usize, usize, Vector)>) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![zero_vector(n); n * n];
        for (i, j, v) in brackets {
            if i >= j || j >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket indices ({i}, {j}) must satisfy i < j < {n}"
                )));
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            table[j * n + i] = v.iter().map(|x| -x.clone()).collect();
            table[i * n + j] = v;
        }
        Ok(LieAlgebra { labels, table })
    }

    /// Integer structure constants `(i, j, [e_i, e_j])`, 0-based, `i < j`.
    pub fn from_integer_brackets(labels: &[&str], brackets: &[(usize, usize, &[i64])]) -> Self {
        let labels = labels.iter().map(|s| s.to_string()).collect();
        let brackets = brackets
            .iter()
            .map(|&(i, j, v)| (i, j, linalg::vector(v)))
            .collect();
        LieAlgebra::new(labels, brackets).expect("invalid integer structure constants")
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        LieAlgebra::new(labels, Vec::new()).expect("abelian algebra")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    /// Structure constants for `i < j` with nonzero bracket.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.basis_bracket(i, j);
                if !linalg::is_zero(v) {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| linalg::is_zero(v))
    }

    fn check(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, v: &[Rational], w: &[Rational]) -> Result<Vector> {
        self.check(v)?;
        self.check(w)?;
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, wj) in w.iter().enumerate() {
                if wj.is_zero() || i == j {
                    continue;
                }
                let c = vi * wj;
                for (o, t) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn validate_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |a: usize| linalg::unit_vector(n, a);
                    let t1 = self
                        .bracket(self.basis_bracket(i, j), &e(k))
                        .expect("square table");
                    let t2 = self
                        .bracket(self.basis_bracket(j, k), &e(i))
                        .expect("square table");
                    let t3 = self
                        .bracket(self.basis_bracket(k, i), &e(j))
                        .expect("square table");
                    let r = linalg::add(&linalg::add(&t1, &t2), &t3);
                    if !linalg::is_zero(&r) {
                        return JacobiReport {
                            violation: Some((i, j, k, r)),
                        };
                    }
                }
            }
        }
        JacobiReport { violation: None }
    }

    /// Matrix of `ad_v = [v, ·]` in the basis.
    pub fn ad(&self, v: &[Rational]) -> Result<Matrix> {
        self.check(v)?;
        let n = self.dim();
        let cols = (0..n)
            .map(|j| self.bracket(v, &linalg::unit_vector(n, j)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(n, &cols)
    }

    /// `(ad_v, coad_v)` with `coad_v = ad_vᵀ`.
    pub fn adjoint_maps(&self, v: &[Rational]) -> Result<(Matrix, Matrix)> {
        let ad = self.ad(v)?;
        let coad = ad.transpose();
        Ok((ad, coad))
    }

    /// `coad_v(x)`, i.e. the covector `w ↦ ⟨x, [v, w]⟩`.
    pub fn coad(&self, v: &[Rational], x: &[Rational]) -> Result<Vector> {
        self.check(v)?;
        self.check(x)?;
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let p = linalg::dot(x, self.basis_bracket(i, j));
                if !p.is_zero() {
                    *o += vi * p;
                }
            }
        }
        Ok(out)
    }

    /// `span{[u, v] : u ∈ U, v ∈ V}`.
    pub fn subspace_bracket(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let mut gens = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                gens.push(self.bracket(a, b)?);
            }
        }
        Subspace::span(self.dim(), gens)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        u.contains(&self.subspace_bracket(u, u)?)
    }

    /// First pair of canonical basis indices whose bracket leaves `u`.
    pub fn subalgebra_violation(&self, u: &Subspace) -> Result<Option<(usize, usize, Vector)>> {
        self.check_subspace(u)?;
        let b = u.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let w = self.bracket(&b[i], &b[j])?;
                if !u.contains_vector(&w)? {
                    return Ok(Some((i, j, w)));
                }
            }
        }
        Ok(None)
    }

    /// Block algebra `self ⊕ other`, the second block's constants multiplied
    /// by `sign` (which must be `1` or `-1`).
    pub fn direct_sum(&self, other: &LieAlgebra, sign: i64) -> LieAlgebra {
        assert!(sign == 1 || sign == -1, "direct_sum sign must be ±1");
        let (n1, n2) = (self.dim(), other.dim());
        let s = linalg::int(sign);
        let mut brackets = Vec::new();
        for (i, j, v) in self.nonzero_brackets() {
            let mut w = v;
            w.extend(zero_vector(n2));
            brackets.push((i, j, w));
        }
        for (i, j, v) in other.nonzero_brackets() {
            let mut w = zero_vector(n1);
            w.extend(v.iter().map(|x| &s * x));
            brackets.push((n1 + i, n1 + j, w));
        }
        let labels = self
            .labels
            .iter()
            .cloned()
            .chain(other.labels.iter().map(|l| format!("{l}'")))
            .collect();
        LieAlgebra::new(labels, brackets).expect("block structure constants")
    }

    /// The subalgebra `u` as an algebra in its own right, in the canonical
    /// basis of `u`.
    pub fn restrict_to(&self, u: &Subspace) -> Result<LieAlgebra> {
        if let Some((i, j, _)) = self.subalgebra_violation(u)? {
            return Err(Error::NotSubalgebra(format!(
                "subspace (basis pair {}, {} brackets out)",
                i + 1,
                j + 1
            )));
        }
        let b = u.basis();
        let mut brackets = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let w = self.bracket(&b[i], &b[j])?;
                brackets.push((i, j, u.coordinates(&w)?));
            }
        }
        let labels = (1..=b.len()).map(|i| format!("h{i}")).collect();
        LieAlgebra::new(labels, brackets)
    }

    /// `{v : [v, w] = 0 for all w}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // rows: for each (j, k), the linear form v ↦ ([v, e_j])_k
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push(
                    (0..n)
                        .map(|i| self.basis_bracket(i, j)[k].clone())
                        .collect(),
                );
            }
        }
        Matrix::from_rows(n, &rows).expect("square table").kernel()
    }

    /// `[g, g]`.
    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.subspace_bracket(&full, &full).expect("same dimension")
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} [{}]", self.dim(), self.labels.join(", "))
    }
}

/// Linear map `domain → codomain` between Lie algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub domain: LieAlgebra,
    pub codomain: LieAlgebra,
    /// `codomain.dim() × domain.dim()`
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(domain: LieAlgebra, codomain: LieAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: codomain.dim(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    /// `φ([u, v]) = [φu, φv]` on all basis pairs.
    pub fn is_morphism(&self) -> Result<bool> {
        let m = self.domain.dim();
        for i in 0..m {
            for j in i + 1..m {
                let lhs = self.apply(self.domain.basis_bracket(i, j))?;
                let rhs = self
                    .codomain
                    .bracket(&self.matrix.column(i), &self.matrix.column(j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn morphism_check(phi: &LinearMap) -> Result<bool> {
    phi.is_morphism()
}

/// `⟨x, [v, w]⟩` for a covector `x`.
pub fn pairing_of_bracket(
    l: &LieAlgebra,
    x: &[Rational],
    v: &[Rational],
    w: &[Rational],
) -> Result<Rational> {
    Ok(linalg::dot(x, &l.bracket(v, w)?))
}

/// Gram matrix of the skew form `B_x(v, w) = ⟨x, [v, w]⟩` on a basis.
pub fn skew_form_on(l: &LieAlgebra, x: &[Rational], basis: &[Vector]) -> Result<Matrix> {
    let m = basis.len();
    let mut g = Matrix::zeros(m, m);
    for i in 0..m {
        for j in i + 1..m {
            let b = pairing_of_bracket(l, x, &basis[i], &basis[j])?;
            g[(j, i)] = -b.clone();
            g[(i, j)] = b;
        }
    }
    Ok(g)
}
