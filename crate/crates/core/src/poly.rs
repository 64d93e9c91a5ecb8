//! The Lie-Poisson structure on `g*`: the bivector at a point, the sharp map,
//! and the Poisson bracket of polynomial functions in the dual coordinates
//! `ν₁ … νₙ`.
//!
//! Sign convention: `Π_ij(x) = ⟨x, [e_i, e_j]⟩`, so `{ν_i, ν_j}` is the linear
//! function of `[e_i, e_j]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{self, format_rational, Matrix, Rational, Vector};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial over ℚ in a fixed number of variables. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial(vec![0; nvars]), c);
        p
    }

    /// The coordinate function `ν_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial(e), Rational::one());
        p
    }

    /// The linear function `ν ↦ ⟨ν, v⟩`.
    pub fn linear(v: &[Rational]) -> Self {
        let n = v.len();
        let mut p = Polynomial::zero(n);
        for (i, c) in v.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            p.add_term(m.clone(), a * c);
        }
        p
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = Polynomial::zero(self.nvars);
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(x, y)| x + y).collect();
                p.add_term(Monomial(e), a * b);
            }
        }
        Ok(p)
    }

    /// `∂/∂ν_{i+1}`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            p.add_term(Monomial(e), c * linalg::int(k as i64));
        }
        p
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: x.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(&m.0) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Pullback along `s ↦ base + Σ s_e dirs[e]`; the result has
    /// `dirs.len()` variables.
    pub fn substitute_affine(&self, base: &[Rational], dirs: &[Vector]) -> Result<Polynomial> {
        let m = dirs.len();
        let coords = (0..self.nvars)
            .map(|i| {
                let mut p = Polynomial::constant(m, base[i].clone());
                for (e, d) in dirs.iter().enumerate() {
                    p = p.add(&Polynomial::var(m, e).scale(&d[i]))?;
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = Polynomial::zero(m);
        for (mono, c) in &self.terms {
            let mut t = Polynomial::constant(m, c.clone());
            for (i, &k) in mono.0.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&coords[i])?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Parses sums of terms `coef * nu1^a * nu2^b …` with rational
    /// coefficients `p` or `p/q`.
    pub fn parse(nvars: usize, text: &str) -> Result<Polynomial> {
        Parser::new(nvars, text)?.parse()
    }

    /// Renders with the given variable prefix (`nu` by default in `Display`).
    pub fn render(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("{prefix}{}", i + 1)
                        } else {
                            format!("{prefix}{}^{k}", i + 1)
                        }
                    })
                    .collect();
            if factors.is_empty() {
                out.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("nu"))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Parser {
    nvars: usize,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(nvars: usize, text: &str) -> Result<Self> {
        let err = |m: String| Error::Malformed(format!("polynomial {text:?}: {m}"));
        let chars: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                ' ' | '\t' | '\n' => i += 1,
                '+' => {
                    tokens.push(Token::Plus);
                    i += 1
                }
                '-' => {
                    tokens.push(Token::Minus);
                    i += 1
                }
                '*' => {
                    tokens.push(Token::Star);
                    i += 1
                }
                '/' => {
                    tokens.push(Token::Slash);
                    i += 1
                }
                '^' => {
                    tokens.push(Token::Caret);
                    i += 1
                }
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    tokens.push(Token::Int(chars[start..i].iter().collect()));
                }
                'a'..='z' | 'A'..='Z' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_alphabetic() {
                        i += 1;
                    }
                    let name: String = chars[start..i].iter().collect();
                    if name != "nu" {
                        return Err(err(format!("unknown identifier {name:?}")));
                    }
                    let ds = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let idx: usize = chars[ds..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| err("variable needs an index".into()))?;
                    if idx == 0 || idx > nvars {
                        return Err(Error::IndexOutOfRange(format!(
                            "variable nu{idx} in a {nvars}-variable polynomial"
                        )));
                    }
                    tokens.push(Token::Var(idx - 1));
                }
                other => return Err(err(format!("unexpected character {other:?}"))),
            }
        }
        Ok(Parser {
            nvars,
            tokens,
            pos: 0,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut total = Polynomial::zero(self.nvars);
        if self.tokens.is_empty() {
            return Err(Error::Malformed("empty polynomial".into()));
        }
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    sign = -sign;
                }
                None => break,
                _ if first => {}
                Some(t) => {
                    return Err(Error::Malformed(format!("expected + or -, found {t:?}")));
                }
            }
            first = false;
            let term = self.term()?;
            total = total.add(&term.scale(&sign))?;
        }
        Ok(total)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut t = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            t = t.mul(&self.factor()?)?;
        }
        Ok(t)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::Int(n)) => {
                let mut s = n;
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Int(d)) => s = format!("{s}/{d}"),
                        _ => return Err(Error::BadRational(format!("{s}/"))),
                    }
                }
                Ok(Polynomial::constant(
                    self.nvars,
                    linalg::parse_rational(&s)?,
                ))
            }
            Some(Token::Var(i)) => {
                let mut k = 1u32;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Int(e)) => {
                            k = e
                                .parse()
                                .map_err(|_| Error::Malformed(format!("bad exponent {e}")))?
                        }
                        t => return Err(Error::Malformed(format!("bad exponent {t:?}"))),
                    }
                }
                let mut e = vec![0; self.nvars];
                e[i] = k;
                let mut p = Polynomial::zero(self.nvars);
                p.add_term(Monomial(e), Rational::one());
                Ok(p)
            }
            t => Err(Error::Malformed(format!("expected a factor, found {t:?}"))),
        }
    }
}

/// `Π(x)` with `Π_ij(x) = ⟨x, [e_i, e_j]⟩`.
pub fn bivector_at(l: &LieAlgebra, x: &[Rational]) -> Result<Matrix> {
    let n = l.dim();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = linalg::dot(x, l.basis_bracket(i, j));
            m[(j, i)] = -v.clone();
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// `♯_x ξ = Π(ξ, ·)`, a vector in `T_x g* = g*`.
pub fn sharp_at(l: &LieAlgebra, x: &[Rational], xi: &[Rational]) -> Result<Vector> {
    let pi = bivector_at(l, x)?;
    pi.transpose().mul_vec(xi)
}

/// `{f, g} = Σ_ij Π_ij(ν) ∂_i f ∂_j g`.
pub fn poisson_bracket(l: &LieAlgebra, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let n = l.dim();
    f.check(g)?;
    if f.nvars != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.nvars,
        });
    }
    let df: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    let dg: Vec<Polynomial> = (0..n).map(|i| g.derivative(i)).collect();
    let mut out = Polynomial::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let c = l.basis_bracket(i, j);
            if linalg::is_zero(c) {
                continue;
            }
            let cross = df[i].mul(&dg[j])?.sub(&df[j].mul(&dg[i])?)?;
            if cross.is_zero() {
                continue;
            }
            out = out.add(&Polynomial::linear(c).mul(&cross)?)?;
        }
    }
    Ok(out)
}

/// `{f, ν_i} = 0` for every coordinate.
pub fn casimir_check(l: &LieAlgebra, f: &Polynomial) -> Result<bool> {
    for i in 0..l.dim() {
        if !poisson_bracket(l, f, &Polynomial::var(l.dim(), i))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pfaffian of a skew-symmetric matrix of polynomials (expansion along the
/// first row). Odd size gives zero, empty gives one.
pub fn pfaffian(a: &[Vec<Polynomial>], nvars: usize) -> Result<Polynomial> {
    let idx: Vec<usize> = (0..a.len()).collect();
    pfaffian_rec(a, &idx, nvars)
}

fn pfaffian_rec(a: &[Vec<Polynomial>], idx: &[usize], nvars: usize) -> Result<Polynomial> {
    if idx.is_empty() {
        return Ok(Polynomial::constant(nvars, Rational::one()));
    }
    if idx.len() % 2 == 1 {
        return Ok(Polynomial::zero(nvars));
    }
    let i0 = idx[0];
    let mut total = Polynomial::zero(nvars);
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = &a[i0][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&r| r != j).collect();
        let minor = pfaffian_rec(a, &rest, nvars)?;
        let term = entry.mul(&minor)?;
        // sign (-1)^(pos+1) with pos counted from 0 over idx
        total = if pos % 2 == 1 {
            total.add(&term)?
        } else {
            total.sub(&term)?
        };
    }
    Ok(total)
}
