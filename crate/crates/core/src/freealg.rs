//! The free algebra on a small generating set, quadratic quotients with
//! graded pieces up to degree 4, centers in low degree, multilinearization
//! and quadratic duals.
//!
//! All graded computations are dense exact linear algebra: the degree-`d`
//! piece of `T(V)/(R)` is the cokernel of
//! `W_d = sum_i V^(i) ⊗ R ⊗ V^(d-2-i)` inside the `n^d`-dimensional tensor
//! power, and normal forms project onto the non-pivot word coordinates of a
//! row-reduced basis of `W_d`. Words are ordered lexicographically with
//! `x < y < z`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FieldContext, FieldElem};
use crate::linalg::{same_row_span, Matrix};
use crate::literal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgError {
    WrongDegree { expected: usize, found: usize },
    DegreeBound,
    ZeroVector,
    DependentRelations,
    NotInFamily,
    NotCentral,
    Parse(String),
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::WrongDegree { expected, found } => {
                write!(f, "expected degree {expected}, found {found}")
            }
            AlgError::DegreeBound => write!(f, "degree bound exceeded"),
            AlgError::ZeroVector => write!(f, "zero coordinate vector"),
            AlgError::DependentRelations => write!(f, "relations are linearly dependent"),
            AlgError::NotInFamily => write!(f, "algebra is not in the expected family"),
            AlgError::NotCentral => write!(f, "not a central element"),
            AlgError::Parse(m) => write!(f, "relation parse error: {m}"),
        }
    }
}

impl core::error::Error for AlgError {}

/// A homogeneous element of the free algebra: a map from words of one fixed
/// degree to coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeElem {
    n_gens: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<u8>, FieldElem>,
}

impl FreeElem {
    pub fn zero(n_gens: usize, degree: usize) -> Self {
        FreeElem {
            n_gens,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn word(n_gens: usize, letters: &[u8]) -> Self {
        let mut e = FreeElem::zero(n_gens, letters.len());
        e.add_term(letters.to_vec(), FieldElem::one());
        e
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &FieldElem)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> FieldElem {
        self.coeffs
            .get(word)
            .cloned()
            .unwrap_or_else(FieldElem::zero)
    }

    pub fn add_term(&mut self, word: Vec<u8>, c: FieldElem) {
        debug_assert_eq!(word.len(), self.degree);
        debug_assert!(word.iter().all(|&l| (l as usize) < self.n_gens));
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&word) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.coeffs.remove(&word);
                } else {
                    *v = s;
                }
            }
            None => {
                self.coeffs.insert(word, c);
            }
        }
    }

    pub fn add(&self, rhs: &FreeElem) -> FreeElem {
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (w, c) in rhs.coeffs.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FreeElem) -> FreeElem {
        self.add(&rhs.scale(&FieldElem::from_integer(-1)))
    }

    pub fn scale(&self, c: &FieldElem) -> FreeElem {
        let mut out = FreeElem::zero(self.n_gens, self.degree);
        for (w, v) in self.coeffs.iter() {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, rhs: &FreeElem) -> FreeElem {
        assert_eq!(self.n_gens, rhs.n_gens);
        let mut out = FreeElem::zero(self.n_gens, self.degree + rhs.degree);
        for (w1, c1) in self.coeffs.iter() {
            for (w2, c2) in rhs.coeffs.iter() {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Dense coefficient vector over all words of this degree in lex order.
    pub fn to_vec(&self) -> Vec<FieldElem> {
        let dim = self.n_gens.pow(self.degree as u32);
        let mut v = vec![FieldElem::zero(); dim];
        for (w, c) in self.coeffs.iter() {
            v[word_index(self.n_gens, w)] = c.clone();
        }
        v
    }

    pub fn from_vec(n_gens: usize, degree: usize, v: &[FieldElem]) -> FreeElem {
        let mut e = FreeElem::zero(n_gens, degree);
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.add_term(index_word(n_gens, degree, idx), c.clone());
            }
        }
        e
    }

    /// A degree-1 element with the given coordinates.
    pub fn linear(n_gens: usize, coords: &[FieldElem]) -> FreeElem {
        assert_eq!(coords.len(), n_gens);
        let mut e = FreeElem::zero(n_gens, 1);
        for (l, c) in coords.iter().enumerate() {
            e.add_term(vec![l as u8], c.clone());
        }
        e
    }

    /// Renders with the supplied generator names.
    pub fn render(&self, gens: &[&str], ctx: &FieldContext) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (w, c) in self.coeffs.iter() {
            let mono: Vec<String> = compress_word(w)
                .into_iter()
                .map(|(l, e)| {
                    if e == 1 {
                        gens[l as usize].to_string()
                    } else {
                        format!("{}^{}", gens[l as usize], e)
                    }
                })
                .collect();
            let mono = mono.join("*");
            if c.is_one() {
                parts.push(mono);
            } else if (-c).is_one() {
                parts.push(format!("-{mono}"));
            } else {
                parts.push(format!("({})*{}", literal::render(c, ctx), mono));
            }
        }
        parts.join(" + ")
    }
}

fn compress_word(w: &[u8]) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &l in w {
        match out.last_mut() {
            Some((prev, e)) if *prev == l => *e += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

pub fn word_index(n_gens: usize, word: &[u8]) -> usize {
    word.iter().fold(0, |acc, &l| acc * n_gens + l as usize)
}

pub fn index_word(n_gens: usize, degree: usize, mut idx: usize) -> Vec<u8> {
    let mut w = vec![0u8; degree];
    for k in (0..degree).rev() {
        w[k] = (idx % n_gens) as u8;
        idx /= n_gens;
    }
    w
}

/// Row-reduced data for one graded piece of a quadratic quotient.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    degree: usize,
    /// RREF rows of `W_d`, paired with their pivot column.
    rows: Vec<(usize, Vec<FieldElem>)>,
    /// Word indices forming the basis of `S_d` (the non-pivot columns).
    basis_words: Vec<usize>,
}

impl GradedBasis {
    fn build(n_gens: usize, relations: &[FreeElem], degree: usize) -> GradedBasis {
        let dim = n_gens.pow(degree as u32);
        let mut gen_rows: Vec<Vec<FieldElem>> = Vec::new();
        if degree >= 2 {
            for i in 0..=(degree - 2) {
                let j = degree - 2 - i;
                for left in 0..n_gens.pow(i as u32) {
                    let lw = index_word(n_gens, i, left);
                    for right in 0..n_gens.pow(j as u32) {
                        let rw = index_word(n_gens, j, right);
                        for rel in relations {
                            let mut row = vec![FieldElem::zero(); dim];
                            for (w, c) in rel.terms() {
                                let mut full = lw.clone();
                                full.extend_from_slice(w);
                                full.extend_from_slice(&rw);
                                let idx = word_index(n_gens, &full);
                                row[idx] = &row[idx] + c;
                            }
                            gen_rows.push(row);
                        }
                    }
                }
            }
        }
        let (rows, basis_words) = if gen_rows.is_empty() {
            (Vec::new(), (0..dim).collect())
        } else {
            let mut m = Matrix::from_rows(gen_rows);
            let pivots = m.rref();
            let rows = pivots
                .iter()
                .enumerate()
                .map(|(r, &c)| (c, m.rows()[r].clone()))
                .collect::<Vec<_>>();
            let basis_words = (0..dim).filter(|c| !pivots.contains(c)).collect();
            (rows, basis_words)
        };
        GradedBasis {
            degree,
            rows,
            basis_words,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis_words.len()
    }

    pub fn basis_words(&self) -> &[usize] {
        &self.basis_words
    }

    /// Normal form of a dense coefficient vector: the unique representative
    /// supported on the non-pivot words. Idempotent by construction.
    pub fn normal_form_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (k, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    v[k] = &v[k] - &(&f * r);
                }
            }
        }
        v
    }

    /// Coordinates of the normal form on `basis_words`.
    pub fn coords(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let nf = self.normal_form_vec(v);
        self.basis_words.iter().map(|&w| nf[w].clone()).collect()
    }
}

/// A quadratic quotient of the free algebra with cached graded data.
///
/// The cache is filled once at construction (degrees `0..=max_degree`) and is
/// immutable afterwards, so values can be shared freely across threads.
#[derive(Clone, Debug)]
pub struct QuadAlgebra {
    n_gens: usize,
    relations: Vec<FreeElem>,
    graded: Vec<GradedBasis>,
    family_tag: Option<String>,
}

pub const MAX_DEGREE: usize = 4;

impl QuadAlgebra {
    pub fn new(n_gens: usize, relations: Vec<FreeElem>) -> Result<QuadAlgebra, AlgError> {
        Self::with_max_degree(n_gens, relations, MAX_DEGREE)
    }

    pub fn with_max_degree(
        n_gens: usize,
        relations: Vec<FreeElem>,
        max_degree: usize,
    ) -> Result<QuadAlgebra, AlgError> {
        for r in &relations {
            if r.degree() != 2 {
                return Err(AlgError::WrongDegree {
                    expected: 2,
                    found: r.degree(),
                });
            }
        }
        let rel_matrix = Matrix::from_rows(relations.iter().map(FreeElem::to_vec).collect());
        if rel_matrix.rank() != relations.len() {
            return Err(AlgError::DependentRelations);
        }
        let graded = (0..=max_degree)
            .map(|d| GradedBasis::build(n_gens, &relations, d))
            .collect();
        Ok(QuadAlgebra {
            n_gens,
            relations,
            graded,
            family_tag: None,
        })
    }

    pub fn with_tag(mut self, tag: &str) -> QuadAlgebra {
        self.family_tag = Some(tag.to_string());
        self
    }

    pub fn family_tag(&self) -> Option<&str> {
        self.family_tag.as_deref()
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn relations(&self) -> &[FreeElem] {
        &self.relations
    }

    pub fn graded(&self, d: usize) -> Result<&GradedBasis, AlgError> {
        self.graded.get(d).ok_or(AlgError::DegreeBound)
    }

    /// Dimension of the degree-`d` piece.
    pub fn graded_dim(&self, d: usize) -> Result<usize, AlgError> {
        Ok(self.graded(d)?.dim())
    }

    /// Does the Hilbert function match a polynomial ring on three generators
    /// in degrees 2..=4? (Dimensions 6, 10, 15.)
    pub fn is_quantum_candidate(&self) -> bool {
        debug_assert_eq!(self.n_gens, 3);
        (2..=4).all(|d| self.graded_dim(d).map(|n| n == (d + 1) * (d + 2) / 2) == Ok(true))
    }

    /// Normal form of a homogeneous free element.
    pub fn normal_form(&self, e: &FreeElem) -> Result<FreeElem, AlgError> {
        let g = self.graded(e.degree())?;
        Ok(FreeElem::from_vec(
            self.n_gens,
            e.degree(),
            &g.normal_form_vec(&e.to_vec()),
        ))
    }

    /// Basis of the centralizer of the generators in degree `d`, i.e. of
    /// `Z(S)_d` for `d = 1, 2` (the algebra is generated in degree 1).
    ///
    /// Returned as normal-form representatives. Each element is re-checked
    /// directly against the generators.
    pub fn center_basis(&self, d: usize) -> Result<Vec<FreeElem>, AlgError> {
        let gd = self.graded(d)?;
        let gd1 = self.graded(d + 1)?;
        let sd_words = gd.basis_words().to_vec();
        let mut rows: Vec<Vec<FieldElem>> =
            vec![vec![FieldElem::zero(); sd_words.len()]; self.n_gens * gd1.dim()];
        for (col, &widx) in sd_words.iter().enumerate() {
            let w = FreeElem::word(self.n_gens, &index_word(self.n_gens, d, widx));
            for gen in 0..self.n_gens {
                let x = FreeElem::word(self.n_gens, &[gen as u8]);
                let comm = w.mul(&x).sub(&x.mul(&w));
                let coords = gd1.coords(&comm.to_vec());
                for (r, c) in coords.into_iter().enumerate() {
                    rows[gen * gd1.dim() + r][col] = c;
                }
            }
        }
        let kernel = Matrix::from_rows(rows).kernel_basis();
        let basis: Vec<FreeElem> = kernel
            .into_iter()
            .map(|combo| {
                let mut e = FreeElem::zero(self.n_gens, d);
                for (k, c) in combo.into_iter().enumerate() {
                    if !c.is_zero() {
                        e.add_term(index_word(self.n_gens, d, sd_words[k]), c);
                    }
                }
                e
            })
            .collect();
        // Independent re-check: each returned element commutes with every generator.
        for c in &basis {
            for gen in 0..self.n_gens {
                let x = FreeElem::word(self.n_gens, &[gen as u8]);
                let comm = self.normal_form(&c.mul(&x).sub(&x.mul(c)))?;
                assert!(comm.is_zero(), "center recheck failed");
            }
        }
        Ok(basis)
    }

    /// Is `f` central, i.e. does it commute with every generator?
    pub fn is_central(&self, f: &FreeElem) -> Result<bool, AlgError> {
        if f.is_zero() {
            return Ok(true);
        }
        let nf = self.normal_form(f)?;
        for gen in 0..self.n_gens {
            let x = FreeElem::word(self.n_gens, &[gen as u8]);
            let comm = self.normal_form(&nf.mul(&x).sub(&x.mul(&nf)))?;
            if !comm.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis of the annihilator `R^perp` of the relation space under the
    /// tensor pairing, presented on the dual generators (u pairs with x, v
    /// with y, w with z).
    pub fn quadratic_dual(&self) -> Result<Vec<FreeElem>, AlgError> {
        let rel_matrix = Matrix::from_rows(self.relations.iter().map(FreeElem::to_vec).collect());
        if rel_matrix.rank() != self.relations.len() {
            return Err(AlgError::DependentRelations);
        }
        let kernel = rel_matrix.kernel_basis();
        Ok(kernel
            .into_iter()
            .map(|v| FreeElem::from_vec(self.n_gens, 2, &v))
            .collect())
    }

    /// Detects the relation template `yz+zy+alpha x^2, zx+xz+beta y^2,
    /// xy+yx+gamma z^2` and returns `(alpha, beta, gamma)`.
    pub fn skew_family_params(&self) -> Result<(FieldElem, FieldElem, FieldElem), AlgError> {
        if self.n_gens != 3 || self.relations.len() != 3 {
            return Err(AlgError::NotInFamily);
        }
        let rel_rows: Vec<Vec<FieldElem>> = self.relations.iter().map(FreeElem::to_vec).collect();
        let mut params = Vec::with_capacity(3);
        for k in 0..3 {
            // Template relation k: x_{k+1} x_{k+2} + x_{k+2} x_{k+1} + t x_k^2.
            let a = ((k + 1) % 3) as u8;
            let b = ((k + 2) % 3) as u8;
            let mut base = FreeElem::zero(3, 2);
            base.add_term(vec![a, b], FieldElem::one());
            base.add_term(vec![b, a], FieldElem::one());
            let mut square = FreeElem::zero(3, 2);
            square.add_term(vec![k as u8, k as u8], FieldElem::one());
            // Solve base + t*square = sum_j c_j rel_j for (c, t).
            let mut cols: Vec<Vec<FieldElem>> = rel_rows.clone();
            cols.push(square.scale(&FieldElem::from_integer(-1)).to_vec());
            let rows: Vec<Vec<FieldElem>> = (0..9)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect();
            let rhs = base.to_vec();
            let sol = Matrix::from_rows(rows)
                .solve(&rhs)
                .ok_or(AlgError::NotInFamily)?;
            params.push(sol[3].clone());
        }
        let gamma = params.pop().unwrap();
        let beta = params.pop().unwrap();
        let alpha = params.pop().unwrap();
        Ok((alpha, beta, gamma))
    }
}

/// Multilinearization of a degree-2 element: the matrix `a_{ij}` with
/// `a_{ij}` the coefficient of the word `x_i x_j`.
pub fn multilinearize(f: &FreeElem) -> Result<Vec<Vec<FieldElem>>, AlgError> {
    if f.degree() != 2 {
        return Err(AlgError::WrongDegree {
            expected: 2,
            found: f.degree(),
        });
    }
    let n = f.n_gens();
    let mut m = vec![vec![FieldElem::zero(); n]; n];
    for (w, c) in f.terms() {
        m[w[0] as usize][w[1] as usize] = c.clone();
    }
    Ok(m)
}

/// Evaluates a multilinearized degree-2 element at a point pair.
pub fn eval_bilinear(m: &[Vec<FieldElem>], p: &[FieldElem], q: &[FieldElem]) -> FieldElem {
    let mut acc = FieldElem::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            if !a.is_zero() {
                acc = &acc + &(&(a * &p[i]) * &q[j]);
            }
        }
    }
    acc
}

/// Do all relations of `s` vanish on the pair `(p, q)`?
pub fn graph_contains(s: &QuadAlgebra, p: &[FieldElem], q: &[FieldElem]) -> Result<bool, AlgError> {
    if p.iter().all(FieldElem::is_zero) || q.iter().all(FieldElem::is_zero) {
        return Err(AlgError::ZeroVector);
    }
    for rel in s.relations() {
        let m = multilinearize(rel)?;
        if !eval_bilinear(&m, p, q).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed form for the central square of a linear form in the skew family:
/// `g = lx + my + nz` has `g^2 = (l^2 - alpha mn) x^2 + (m^2 - beta nl) y^2 +
/// (n^2 - gamma lm) z^2`.
pub fn square_central_closed_form(
    family: &(FieldElem, FieldElem, FieldElem),
    g: &[FieldElem],
) -> (FieldElem, FieldElem, FieldElem) {
    let (alpha, beta, gamma) = family;
    let (l, m, n) = (&g[0], &g[1], &g[2]);
    (
        &(l * l) - &(alpha * &(m * n)),
        &(m * m) - &(beta * &(n * l)),
        &(n * n) - &(gamma * &(l * m)),
    )
}

/// The checked version: computes the closed form, verifies it against the
/// normal form of `g^2`, and verifies centrality of the result.
pub fn square_central(
    s: &QuadAlgebra,
    g: &[FieldElem],
) -> Result<(FieldElem, FieldElem, FieldElem), AlgError> {
    let family = s.skew_family_params()?;
    let (a, b, c) = square_central_closed_form(&family, g);
    let gl = FreeElem::linear(3, g);
    let nf = s.normal_form(&gl.mul(&gl))?;
    let mut expected = FreeElem::zero(3, 2);
    expected.add_term(vec![0, 0], a.clone());
    expected.add_term(vec![1, 1], b.clone());
    expected.add_term(vec![2, 2], c.clone());
    if s.normal_form(&expected)? != nf {
        return Err(AlgError::NotInFamily);
    }
    if !s.is_central(&expected)? {
        return Err(AlgError::NotCentral);
    }
    Ok((a, b, c))
}

/// Span comparison for relation lists.
pub fn same_span(a: &[FreeElem], b: &[FreeElem]) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    same_row_span(
        &Matrix::from_rows(a.iter().map(FreeElem::to_vec).collect()),
        &Matrix::from_rows(b.iter().map(FreeElem::to_vec).collect()),
    )
}

/// Parses a relation in the free-algebra grammar, e.g.
/// `"y*z + z*y + alpha*x^2"`. Words are juxtaposed generators joined by `*`;
/// there is no implicit commutativity. Scalar factors use the field-element
/// literal grammar.
pub fn parse_relation(
    input: &str,
    gens: &[&str],
    ctx: &FieldContext,
) -> Result<FreeElem, AlgError> {
    let n_gens = gens.len();
    let terms = split_terms(input).map_err(AlgError::Parse)?;
    let mut result: Option<FreeElem> = None;
    for (sign, term) in terms {
        let factors = split_factors(&term).map_err(AlgError::Parse)?;
        let mut scalar = FieldElem::from_integer(sign);
        let mut word: Vec<u8> = Vec::new();
        for f in factors {
            let (base, exp) = split_power(&f).map_err(AlgError::Parse)?;
            if let Some(g) = gens.iter().position(|&g| g == base) {
                for _ in 0..exp {
                    word.push(g as u8);
                }
            } else {
                let v = literal::parse(&f, ctx)
                    .map_err(|e| AlgError::Parse(format!("{e} in `{f}`")))?;
                scalar = &scalar * &v;
            }
        }
        let mut t = FreeElem::zero(n_gens, word.len());
        t.add_term(word, scalar);
        result = Some(match result {
            None => t,
            Some(acc) => {
                if t.is_zero() {
                    acc
                } else if acc.is_zero() {
                    t
                } else if acc.degree() != t.degree() {
                    return Err(AlgError::Parse("mixed degrees in relation".into()));
                } else {
                    acc.add(&t)
                }
            }
        });
    }
    result.ok_or_else(|| AlgError::Parse("empty relation".into()))
}

/// Splits a sum into `(sign, term)` pairs at top-level `+`/`-`.
fn split_terms(input: &str) -> Result<Vec<(i64, String)>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut sign = 1i64;
    for ch in input.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced parenthesis".into());
                }
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if current.trim().is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    out.push((sign, current.trim().to_string()));
                    current = String::new();
                    sign = if ch == '-' { -1 } else { 1 };
                }
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err("unbalanced parenthesis".into());
    }
    if !current.trim().is_empty() {
        out.push((sign, current.trim().to_string()));
    }
    Ok(out)
}

/// Splits a term into factors at top-level `*`.
fn split_factors(input: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in input.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            '*' if depth == 0 => {
                out.push(current.trim().to_string());
                current = String::new();
            }
            _ => current.push(ch),
        }
    }
    out.push(current.trim().to_string());
    if out.iter().any(String::is_empty) {
        return Err("empty factor".into());
    }
    Ok(out)
}

/// Splits `base^exp` for generator powers; scalar factors keep their `^`.
fn split_power(f: &str) -> Result<(String, u32), String> {
    match f.split_once('^') {
        Some((base, exp)) if !base.contains(['(', ')']) => {
            let e: u32 = exp
                .trim()
                .parse()
                .map_err(|_| format!("bad exponent `{exp}`"))?;
            Ok((base.trim().to_string(), e))
        }
        _ => Ok((f.trim().to_string(), 1)),
    }
}

pub const GENS_XYZ: [&str; 3] = ["x", "y", "z"];
pub const GENS_UVW: [&str; 3] = ["u", "v", "w"];


#[cfg(test)]
mod degenerate_diagonal_tests {
    use super::*;

    #[test]
    fn degenerate_diagonal_dims() {
        // the all-ones diagonal family is a degenerate member (its cube is
        // a forbidden parameter value): the relation matrix loses rank
        // already in degree 3, where the dimension jumps from the
        // polynomial value 10 to 12
        let c = FieldContext::default();
        let rels: Vec<FreeElem> = ["y*z + z*y + x^2", "z*x + x*z + y^2", "x*y + y*x + z^2"]
            .iter()
            .map(|r| parse_relation(r, &GENS_XYZ, &c).unwrap())
            .collect();
        let s = QuadAlgebra::new(3, rels).unwrap();
        assert_eq!(s.graded_dim(2).unwrap(), 6);
        assert_eq!(s.graded_dim(3).unwrap(), 12);
        assert!(!s.is_quantum_candidate());
        // a legal neighbour keeps the polynomial dimensions
        let rels2: Vec<FreeElem> = [
            "y*z + z*y + 2*x^2",
            "z*x + x*z + 2*y^2",
            "x*y + y*x + 2*z^2",
        ]
        .iter()
        .map(|r| parse_relation(r, &GENS_XYZ, &c).unwrap())
        .collect();
        let s2 = QuadAlgebra::new(3, rels2).unwrap();
        assert_eq!(s2.graded_dim(3).unwrap(), 10);
    }
}
