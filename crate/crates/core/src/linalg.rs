//! Exact rational vectors, matrices and subspaces.
//!
//! A [`Subspace`] is stored by its reduced row-echelon basis, so structural
//! equality is equality of subspaces. Vectors of `g` and covectors of `g*`
//! share the representation; they pair by the coordinate dot product.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` (optionally signed, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn vector(entries: &[i64]) -> Vector {
    entries.iter().map(|&e| int(e)).collect()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_len(cols, r.len())?;
            data.extend(r.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows.iter().map(|r| vector(r)).collect();
        Matrix::from_rows(cols, &rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            check_len(rows, c.len())?;
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        check_len(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.cols, other.rows)?;
        let mut m = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    m[(i, j)] += prod;
                }
            }
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn rank(&self) -> usize {
        rref(self.row_vectors(), self.cols).1.len()
    }

    /// Right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace {
        kernel_of_rows(self.row_vectors(), self.cols)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span_unchecked(self.rows, self.column_vectors())
    }

    /// Determinant by Gaussian elimination over ℚ.
    pub fn determinant(&self) -> Result<Rational> {
        check_len(self.rows, self.cols)?;
        let n = self.rows;
        let mut a = self.row_vectors();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                let (top, bottom) = a.split_at_mut(r);
                for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= &f * y;
                }
            }
        }
        Ok(det)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| format_vector(&self.row(i)))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Reduced row-echelon form of `rows`; returns the nonzero rows and their
/// pivot columns.
pub fn rref(mut rows: Vec<Vector>, cols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = rows[top][col].recip();
        for x in rows[top].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

fn kernel_of_rows(rows: Vec<Vector>, cols: usize) -> Subspace {
    let (reduced, pivots) = rref(rows, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = zero_vector(cols);
        v[free] = Rational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    Subspace::span_unchecked(cols, basis)
}

/// Rank, kernel and image of a matrix in one call.
pub fn rank_kernel_image(m: &Matrix) -> (usize, Subspace, Subspace) {
    let image = m.image();
    (image.dim(), m.kernel(), image)
}

/// Linear subspace of `ℚ^n` in canonical reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) generators.
    pub fn span(ambient: usize, generators: Vec<Vector>) -> Result<Self> {
        for g in &generators {
            check_len(ambient, g.len())?;
        }
        Ok(Self::span_unchecked(ambient, generators))
    }

    pub(crate) fn span_unchecked(ambient: usize, generators: Vec<Vector>) -> Self {
        let (basis, _) = rref(generators, ambient);
        Subspace { ambient, basis }
    }

    /// Span of coordinate axes.
    pub fn axes(ambient: usize, axes: &[usize]) -> Self {
        Self::span_unchecked(
            ambient,
            axes.iter().map(|&i| unit_vector(ambient, i)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical basis (reduced row-echelon rows).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .expect("zero row in basis")
            })
            .collect()
    }

    /// Residue of `v` after clearing the pivot coordinates; zero iff `v ∈ self`.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vector> {
        check_len(self.ambient, v.len())?;
        let mut w = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        Ok(w)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        Ok(is_zero(&self.reduce(v)?))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        check_len(self.ambient, other.ambient)?;
        for v in &other.basis {
            if !self.contains_vector(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient, other.ambient)?;
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::span_unchecked(self.ambient, gens))
    }

    /// Intersection by the Zassenhaus sum-intersection scheme.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient, other.ambient)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            rows.push(u.iter().chain(u.iter()).cloned().collect::<Vector>());
        }
        for v in &other.basis {
            rows.push(v.iter().cloned().chain(zero_vector(n)).collect::<Vector>());
        }
        let (reduced, _) = rref(rows, 2 * n);
        let gens = reduced
            .into_iter()
            .filter(|r| is_zero(&r[..n]))
            .map(|r| r[n..].to_vec())
            .collect();
        Ok(Self::span_unchecked(n, gens))
    }

    /// Sum, intersection and `other ⊆ self` together.
    pub fn lattice(&self, other: &Subspace) -> Result<(Subspace, Subspace, bool)> {
        Ok((
            self.sum(other)?,
            self.intersection(other)?,
            self.contains(other)?,
        ))
    }

    /// `{ξ : ⟨ξ, u⟩ = 0 for all u ∈ self}` under the coordinate pairing.
    pub fn annihilator(&self) -> Subspace {
        kernel_of_rows(self.basis.clone(), self.ambient)
    }

    /// Complement of `self` inside `within`, built greedily from the canonical
    /// basis of `within` in coordinate order.
    pub fn complement_in(&self, within: &Subspace) -> Result<Subspace> {
        if !within.contains(self)? {
            return Err(Error::NotContained);
        }
        let mut acc = self.basis.clone();
        let mut chosen = Vec::new();
        let mut current = self.clone();
        for w in &within.basis {
            if current.dim() == within.dim() {
                break;
            }
            if !current.contains_vector(w)? {
                chosen.push(w.clone());
                acc.push(w.clone());
                current = Self::span_unchecked(self.ambient, acc.clone());
            }
        }
        Ok(Self::span_unchecked(self.ambient, chosen))
    }

    /// `self ∩ other = 0` and the dimensions add up to `whole`.
    pub fn is_complement_of(&self, other: &Subspace, whole: &Subspace) -> Result<bool> {
        Ok(self.intersection(other)?.is_zero()
            && self.sum(other)? == *whole
            && self.dim() + other.dim() == whole.dim())
    }

    /// Image under a matrix with `ambient` columns.
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        check_len(m.cols(), self.ambient)?;
        let gens = self
            .basis
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span_unchecked(m.rows(), gens))
    }

    /// Coordinates of `v ∈ self` in the canonical basis.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Vector> {
        if !self.contains_vector(v)? {
            return Err(Error::NotContained);
        }
        // Canonical basis rows carry a 1 at their pivot and 0 at other pivots.
        Ok(self.pivots().into_iter().map(|p| v[p].clone()).collect())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis.iter().map(|v| format_vector(v)).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Greedy complement of `u` inside `w`; errors when `u ⊄ w`.
pub fn choose_complement(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.complement_in(w)
}

/// Solves `M x = b` when `M` is square and invertible.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Vector> {
    check_len(m.rows(), b.len())?;
    let n = m.cols();
    let rows = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i);
            r.push(b[i].clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(rows, n + 1);
    if pivots.len() != n || pivots.contains(&n) {
        return Err(Error::Malformed("linear system is singular".into()));
    }
    Ok(reduced.iter().map(|r| r[n].clone()).collect())
}
