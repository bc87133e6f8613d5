//! Multivariate polynomials over `Q(zeta)` in the declared transcendental
//! parameters, with a fixed graded-lex monomial order and an exact gcd.
//!
//! Parameters are addressed by position. A monomial stores its exponent
//! vector with trailing zeros trimmed, so elements of contexts with fewer
//! parameters embed into larger ones with no conversion.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use alloc::collections::BTreeMap;

use crate::cyclotomic::Cyclo;

/// Exponent vector with trailing zeros trimmed; ordered by graded-lex.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Mon(Vec<u16>);

impl Mon {
    pub fn one() -> Self {
        Mon(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        let mut e = vec![0u16; index + 1];
        e[index] = 1;
        Mon(e)
    }

    pub fn from_exponents(mut e: Vec<u16>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Mon(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, rhs: &Mon) -> Mon {
        let n = self.0.len().max(rhs.0.len());
        let mut e = vec![0u16; n];
        for (i, v) in self.0.iter().enumerate() {
            e[i] += v;
        }
        for (i, v) in rhs.0.iter().enumerate() {
            e[i] += v;
        }
        Mon::from_exponents(e)
    }

    pub fn divides(&self, rhs: &Mon) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e <= rhs.0.get(i).copied().unwrap_or(0))
    }

    pub fn div(&self, rhs: &Mon) -> Option<Mon> {
        if !rhs.divides(self) {
            return None;
        }
        let mut e = self.0.clone();
        for (i, v) in rhs.0.iter().enumerate() {
            e[i] -= v;
        }
        Some(Mon::from_exponents(e))
    }
}

impl Ord for Mon {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                match a.cmp(&b) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mon {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Mon, Cyclo>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyclo::one())
    }

    pub fn constant(c: Cyclo) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Mon::one(), c);
        }
        p
    }

    pub fn var(index: usize) -> Self {
        let mut p = Self::zero();
        p.terms.insert(Mon::var(index), Cyclo::one());
        p
    }

    pub fn monomial(m: Mon, c: Cyclo) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mon::one()))
    }

    pub fn as_constant(&self) -> Option<Cyclo> {
        if self.is_zero() {
            Some(Cyclo::zero())
        } else if self.is_constant() {
            self.terms.get(&Mon::one()).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mon, &Cyclo)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mon::degree).max().unwrap_or(0)
    }

    /// Leading (monomial, coefficient) under graded-lex.
    pub fn leading(&self) -> Option<(&Mon, &Cyclo)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, m: Mon, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclo) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul_mon(&self, m: &Mon) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in self.terms.iter() {
            out.terms.insert(m1.mul(m), c1.clone());
        }
        out
    }

    /// Exact division; `None` when `rhs` does not divide `self`.
    pub fn exact_div(&self, rhs: &MPoly) -> Option<MPoly> {
        if rhs.is_zero() {
            return None;
        }
        if let Some(c) = rhs.as_constant() {
            return Some(self.scale(&c.inverse()?));
        }
        let (lm, lc) = rhs.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lc_inv = lc.inverse()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let q_mon = m.div(&lm)?;
            let q_coeff = &c * &lc_inv;
            let t = MPoly::monomial(q_mon, q_coeff);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(rhs));
        }
        Some(quot)
    }

    /// Index of the highest parameter occurring, or `None` for constants.
    fn main_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|m| {
                let e = m.exponents();
                if e.is_empty() {
                    None
                } else {
                    Some(e.len() - 1)
                }
            })
            .max()
    }

    /// Views the polynomial as univariate in parameter `var`, densely by degree.
    fn to_univar(&self, var: usize) -> Vec<MPoly> {
        let deg = self
            .terms
            .keys()
            .map(|m| m.exponents().get(var).copied().unwrap_or(0))
            .max()
            .unwrap_or(0) as usize;
        let mut coeffs = vec![MPoly::zero(); deg + 1];
        for (m, c) in self.terms.iter() {
            let e = m.exponents().get(var).copied().unwrap_or(0) as usize;
            let mut rest = m.exponents().to_vec();
            if var < rest.len() {
                rest[var] = 0;
            }
            coeffs[e].insert_add(Mon::from_exponents(rest), c.clone());
        }
        coeffs
    }

    fn from_univar(coeffs: &[MPoly], var: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, coef) in c.terms.iter() {
                let mut exps = m.exponents().to_vec();
                if exps.len() <= var {
                    exps.resize(var + 1, 0);
                }
                exps[var] += e as u16;
                out.insert_add(Mon::from_exponents(exps), coef.clone());
            }
        }
        out
    }

    /// Scales so the graded-lex leading coefficient becomes 1.
    pub fn normalized(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Content of `p` viewed as univariate in `var`: the gcd of its coefficients.
fn content(p: &MPoly, var: usize) -> MPoly {
    let coeffs = p.to_univar(var);
    let mut g = MPoly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
    }
    g
}

/// Pseudo-remainder of `a` by `b`, both viewed as univariate in `var`.
fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Vec<MPoly> = a.to_vec();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r <- lb * r - lr * x^(dr-db) * b
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = i + dr - db;
            r[idx] = r[idx].sub(&lr.mul(bc));
        }
        while r.len() > 1 && r.last().map(MPoly::is_zero) == Some(true) {
            r.pop();
        }
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    r
}

/// Multivariate gcd by the primitive pseudo-remainder sequence, normalized so
/// the leading coefficient under graded-lex is 1.
pub fn gcd(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.is_constant() || q.is_constant() {
        return MPoly::one();
    }
    let var = p.main_var().unwrap().max(q.main_var().unwrap());

    let cp = content(p, var);
    let cq = content(q, var);
    let cont = gcd(&cp, &cq);

    let pp: Vec<MPoly> = p
        .to_univar(var)
        .iter()
        .map(|c| c.exact_div(&cp).expect("content divides"))
        .collect();
    let qp: Vec<MPoly> = q
        .to_univar(var)
        .iter()
        .map(|c| c.exact_div(&cq).expect("content divides"))
        .collect();

    let (mut a, mut b) = if pp.len() >= qp.len() {
        (pp, qp)
    } else {
        (qp, pp)
    };
    loop {
        let r = pseudo_rem(&a, &b);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        // Primitive part of the remainder.
        let r_poly = MPoly::from_univar(&r, var);
        let rc = content(&r_poly, var);
        let r_prim: Vec<MPoly> = r
            .iter()
            .map(|c| c.exact_div(&rc).expect("content divides"))
            .collect();
        a = b;
        b = r_prim;
        if b.len() == 1 {
            // Degree zero in the main variable: the primitive gcd is 1.
            return cont.normalized();
        }
    }
    MPoly::from_univar(&b, var).mul(&cont).normalized()
}
