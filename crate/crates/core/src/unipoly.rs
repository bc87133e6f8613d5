//! Univariate polynomials over the field, with the gcd-based root counting
//! used everywhere for counting over the algebraic closure.
//!
//! `distinct_root_count` is the degree of the squarefree part, which in
//! characteristic 0 equals the number of roots in the algebraic closure.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::FieldElem;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    ZeroInput,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroInput => write!(f, "zero input"),
        }
    }
}

impl core::error::Error for PolyError {}

/// Coefficients lowest degree first; the leading coefficient is nonzero.
/// The zero polynomial is the empty list (degree -1).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::from_coeffs(vec![FieldElem::one()])
    }

    pub fn var() -> Self {
        UniPoly::from_coeffs(vec![FieldElem::zero(), FieldElem::one()])
    }

    pub fn constant(c: FieldElem) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().map(FieldElem::is_zero) == Some(true) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Monic product of `t - r` over the given roots (test and oracle helper).
    pub fn from_roots(roots: &[FieldElem]) -> Self {
        let mut p = UniPoly::one();
        for r in roots {
            p = p.mul(&UniPoly::from_coeffs(vec![-r, FieldElem::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree with -1 encoding the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![FieldElem::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &FieldElem) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| &FieldElem::from_integer((k + 1) as i64) * c)
            .collect();
        UniPoly::from_coeffs(out)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, rhs: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot =
            vec![FieldElem::zero(); self.coeffs.len().saturating_sub(rhs.coeffs.len() - 1)];
        let lead_inv = rhs.leading().unwrap().inverse().unwrap();
        while !rem.is_zero() && rem.degree() >= rhs.degree() {
            let shift = (rem.degree() - rhs.degree()) as usize;
            let factor = &rem.leading().unwrap().clone() * &lead_inv;
            quot[shift] = factor.clone();
            let mut sub = vec![FieldElem::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&UniPoly::from_coeffs(sub));
        }
        (UniPoly::from_coeffs(quot), rem)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }
}

/// Monic polynomial with the same root set as `p` and all roots simple.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let g = p.gcd(&p.derivative());
    if g.degree() <= 0 {
        return Ok(p.monic());
    }
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero());
    Ok(q.monic())
}

/// Number of roots of `p` in the algebraic closure of the base field.
pub fn distinct_root_count(p: &UniPoly) -> Result<usize, PolyError> {
    Ok(squarefree_part(p)?.degree() as usize)
}

/// Number of shared roots of `p` and `q` in the algebraic closure.
pub fn common_root_count(p: &UniPoly, q: &UniPoly) -> Result<usize, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    distinct_root_count(&p.gcd(q))
}

/// Roots of `p` lying in the base field, with a completeness certificate.
///
/// Strategy: strip to the squarefree part, peel off rational roots (by the
/// rational-root theorem, when the coefficients are rational), then resolve
/// a remaining quadratic through the field square root. The boolean is true
/// when the returned list provably contains every root of `p` that lies in
/// the field; callers treat `false` as "don't know".
pub fn field_roots(p: &UniPoly) -> (Vec<FieldElem>, bool) {
    let Ok(mut work) = squarefree_part(p) else {
        return (Vec::new(), false);
    };
    let mut roots = Vec::new();
    if work.degree() > 0 && work.coeff(0).is_zero() {
        // squarefree, so the root at zero divides out exactly once
        roots.push(FieldElem::zero());
        work = work.div_rem(&UniPoly::var()).0;
    }
    // rational-root candidates
    if work.degree() > 0 {
        if let Some(cands) = rational_root_candidates(&work) {
            for r in cands {
                if work.degree() == 0 {
                    break;
                }
                let val = FieldElem::from_rational(r);
                if work.eval(&val).is_zero() {
                    let lin = UniPoly::from_coeffs(vec![-&val, FieldElem::one()]);
                    work = work.div_rem(&lin).0;
                    roots.push(val);
                }
            }
        }
    }
    match work.degree() {
        d if d <= 0 => (roots, true),
        1 => {
            roots.push(-&(&work.coeff(0) / &work.coeff(1)));
            (roots, true)
        }
        2 => {
            // quadratic formula through the field square root
            let (a, b, c) = (work.coeff(2), work.coeff(1), work.coeff(0));
            let disc = &(&b * &b) - &(&FieldElem::from_integer(4) * &(&a * &c));
            match disc.sqrt() {
                Some(s) => {
                    let two_a = &FieldElem::from_integer(2) * &a;
                    roots.push(&(&(-&b) + &s) / &two_a);
                    roots.push(&(&(-&b) - &s) / &two_a);
                    (roots, true)
                }
                None => {
                    // complete only if the discriminant is certified to have
                    // no square root in the field (rational case)
                    (roots, disc.as_rational().is_some())
                }
            }
        }
        _ => (roots, false),
    }
}

/// Candidate rational roots `p/q` with `p | constant`, `q | leading`, for a
/// polynomial with rational coefficients; `None` for non-rational
/// coefficients or oversized divisor sets.
fn rational_root_candidates(p: &UniPoly) -> Option<Vec<num_rational::BigRational>> {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};
    let rats: Vec<num_rational::BigRational> = p
        .coeffs
        .iter()
        .map(|c| c.as_rational())
        .collect::<Option<_>>()?;
    // clear denominators
    let mut lcm = BigInt::from(1);
    for r in &rats {
        let d = r.denom();
        let g = num_integer::Integer::gcd(&lcm, d);
        lcm = &lcm / g * d;
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
    let a0 = ints.iter().find(|c| !c.is_zero())?.abs();
    let an = ints.last()?.abs();
    let div0 = divisors_capped(&a0, 4000)?;
    let divn = divisors_capped(&an, 4000)?;
    let mut out = Vec::new();
    for p in &div0 {
        for q in &divn {
            let r = num_rational::BigRational::new(p.clone(), q.clone());
            if !out.contains(&r) {
                out.push(-r.clone());
                out.push(r);
            }
        }
    }
    Some(out)
}

fn divisors_capped(n: &num_bigint::BigInt, cap: u64) -> Option<Vec<num_bigint::BigInt>> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    if n.is_zero() {
        return Some(vec![BigInt::from(1)]);
    }
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    let cap = BigInt::from(cap);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
        if d > cap {
            // trial division exhausted the budget; report incompleteness
            return if &d * &d > *n { Some(out) } else { None };
        }
    }
    Some(out)
}

/// Sylvester-matrix resultant, zero exactly when `p` and `q` share a root.
///
/// Rows carry the coefficients lowest degree first, `p` rows above `q` rows,
/// so `resultant(t - a, t - b) = b - a`.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<FieldElem, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let n = p.degree() as usize;
    let m = q.degree() as usize;
    if n == 0 {
        return Ok(p.coeff(0).pow(m as i32));
    }
    if m == 0 {
        return Ok(q.coeff(0).pow(n as i32));
    }
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..m {
        let mut row = vec![FieldElem::zero(); size];
        for (k, c) in p.coeffs.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..n {
        let mut row = vec![FieldElem::zero(); size];
        for (k, c) in q.coeffs.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows).det())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> FieldElem {
        FieldElem::from_integer(n)
    }

    fn linear(root: i64) -> UniPoly {
        // t - root
        UniPoly::from_coeffs(vec![int(-root), int(1)])
    }

    #[test]
    fn squarefree_removes_repeated_factor() {
        // (u-1)^2 (u-2) -> (u-1)(u-2)
        let p = linear(1).pow(2).mul(&linear(2));
        let sqf = squarefree_part(&p).unwrap();
        assert_eq!(sqf, linear(1).mul(&linear(2)).monic());
        // u^4 -> u
        let u4 = UniPoly::var().pow(4);
        assert_eq!(squarefree_part(&u4).unwrap(), UniPoly::var());
        assert_eq!(
            squarefree_part(&UniPoly::zero()).unwrap_err(),
            PolyError::ZeroInput
        );
    }

    #[test]
    fn squarefree_reference_quartic() {
        // (u + 1/3)^3 (u + 5/7) -> (u + 1/3)(u + 5/7)
        let a = UniPoly::from_coeffs(vec![FieldElem::from_ratio(1, 3), int(1)]);
        let b = UniPoly::from_coeffs(vec![FieldElem::from_ratio(5, 7), int(1)]);
        let p = a.pow(3).mul(&b);
        assert_eq!(squarefree_part(&p).unwrap(), a.mul(&b));
        assert_eq!(distinct_root_count(&p).unwrap(), 2);
    }

    #[test]
    fn root_counts() {
        assert_eq!(distinct_root_count(&UniPoly::var().pow(4)).unwrap(), 1);
        // u^3 - 2 has three distinct roots over the closure
        let p = UniPoly::var().pow(3).sub(&UniPoly::constant(int(2)));
        assert_eq!(distinct_root_count(&p).unwrap(), 3);
    }

    #[test]
    fn common_roots() {
        let p = linear(1).mul(&linear(2));
        let q = linear(2).mul(&linear(3));
        assert_eq!(common_root_count(&p, &q).unwrap(), 1);
        // t^2 + 1 shared with itself: i and -i
        let c = UniPoly::from_coeffs(vec![int(1), int(0), int(1)]);
        assert_eq!(common_root_count(&c, &c).unwrap(), 2);
    }

    #[test]
    fn resultant_convention() {
        // res(t - a, t - b) = b - a with symbolic a, b
        let a = FieldElem::param(0);
        let b = FieldElem::param(1);
        let p = UniPoly::from_coeffs(vec![-&a, int(1)]);
        let q = UniPoly::from_coeffs(vec![-&b, int(1)]);
        assert_eq!(resultant(&p, &q).unwrap(), &b - &a);
        // res(t^2 + 1, t - 1) = 2
        let c = UniPoly::from_coeffs(vec![int(1), int(0), int(1)]);
        assert_eq!(resultant(&c, &linear(1)).unwrap(), int(2));
    }

    #[test]
    fn resultant_vanishes_iff_common_root() {
        // a small deterministic sweep of cubic pairs
        let mut k = 0u64;
        let mut next = || {
            k = k
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((k >> 33) % 7) as i64 - 3
        };
        for _ in 0..20 {
            let p = UniPoly::from_roots(&[int(next()), int(next()), int(next())]);
            let q = UniPoly::from_roots(&[int(next()), int(next()), int(next())]);
            let r = resultant(&p, &q).unwrap();
            let c = common_root_count(&p, &q).unwrap();
            assert_eq!(r.is_zero(), c > 0, "p={p:?} q={q:?}");
        }
    }
}
