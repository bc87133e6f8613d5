//! Commutative polynomials in three variables over the field, under graded
//! lex order, with single-divisor reduction and a small Buchberger
//! completion.
//!
//! The same type serves two jobs: quadric ideals in the dual variables
//! `u, v, w` (Clifford deformations) and homogeneous forms in the projective
//! coordinates `x, y, z` (point geometry).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::FieldElem;

/// Exponent triple ordered by graded lex with variable 0 strongest.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mon3(pub [u16; 3]);

impl Mon3 {
    pub fn one() -> Mon3 {
        Mon3([0, 0, 0])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, rhs: &Mon3) -> Mon3 {
        Mon3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }

    pub fn divides(&self, rhs: &Mon3) -> bool {
        self.0.iter().zip(rhs.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, rhs: &Mon3) -> Option<Mon3> {
        if rhs.divides(self) {
            Some(Mon3([
                self.0[0] - rhs.0[0],
                self.0[1] - rhs.0[1],
                self.0[2] - rhs.0[2],
            ]))
        } else {
            None
        }
    }

    pub fn lcm(&self, rhs: &Mon3) -> Mon3 {
        Mon3([
            self.0[0].max(rhs.0[0]),
            self.0[1].max(rhs.0[1]),
            self.0[2].max(rhs.0[2]),
        ])
    }

    pub fn coprime(&self, rhs: &Mon3) -> bool {
        self.0
            .iter()
            .zip(rhs.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Mon3 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mon3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct TriPoly {
    terms: BTreeMap<Mon3, FieldElem>,
}

impl TriPoly {
    pub fn zero() -> TriPoly {
        TriPoly::default()
    }

    pub fn one() -> TriPoly {
        TriPoly::constant(FieldElem::one())
    }

    pub fn constant(c: FieldElem) -> TriPoly {
        let mut p = TriPoly::zero();
        p.add_term(Mon3::one(), c);
        p
    }

    pub fn var(i: usize) -> TriPoly {
        let mut e = [0u16; 3];
        e[i] = 1;
        TriPoly::monomial(Mon3(e), FieldElem::one())
    }

    pub fn monomial(m: Mon3, c: FieldElem) -> TriPoly {
        let mut p = TriPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mon3, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mon3) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mon3::degree).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Mon3, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mon3, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> TriPoly {
        TriPoly::zero().sub(self)
    }

    pub fn mul(&self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> TriPoly {
        let mut out = TriPoly::zero();
        for (m, v) in self.terms.iter() {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> TriPoly {
        let mut acc = TriPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, p: &[FieldElem; 3]) -> FieldElem {
        let mut acc = FieldElem::zero();
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &p[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes each variable by the corresponding polynomial.
    pub fn substitute(&self, subs: &[TriPoly; 3]) -> TriPoly {
        let mut acc = TriPoly::zero();
        for (m, c) in self.terms.iter() {
            let mut t = TriPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&subs[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Normal form against a list of divisors (full multivariate division).
    pub fn reduce(&self, divisors: &[TriPoly]) -> TriPoly {
        let active: Vec<&TriPoly> = divisors.iter().filter(|d| !d.is_zero()).collect();
        let leads: Vec<(Mon3, FieldElem)> = active
            .iter()
            .map(|d| {
                let (m, c) = d.leading().unwrap();
                (*m, c.inverse().expect("nonzero leading coefficient"))
            })
            .collect();
        let mut rem = TriPoly::zero();
        let mut work = self.clone();
        while let Some((m, c)) = work.leading().map(|(m, c)| (*m, c.clone())) {
            let mut reduced = false;
            for (k, (lm, lc_inv)) in leads.iter().enumerate() {
                if lm.divides(&m) {
                    let q = m.div(lm).unwrap();
                    let f = &c * lc_inv;
                    let t = TriPoly::monomial(q, f);
                    work = work.sub(&t.mul(active[k]));
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                rem.add_term(m, c.clone());
                work.terms.remove(&m);
            }
        }
        rem
    }

    /// Is `self` in the principal ideal generated by `f`? Exact: a single
    /// divisor is its own Groebner basis.
    pub fn divisible_by(&self, f: &TriPoly) -> bool {
        self.reduce(core::slice::from_ref(f)).is_zero()
    }
}

/// Buchberger completion with full reduction and the coprime-leading-term
/// criterion. Returns a reduced Groebner basis under graded lex.
pub fn groebner(gens: &[TriPoly]) -> Vec<TriPoly> {
    let mut basis: Vec<TriPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (_, c) = g.leading().unwrap();
            g.scale(&c.inverse().unwrap())
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (li, _) = basis[i].leading().unwrap();
        let (lj, _) = basis[j].leading().unwrap();
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let s = basis[i]
            .mul(&TriPoly::monomial(l.div(li).unwrap(), FieldElem::one()))
            .sub(&basis[j].mul(&TriPoly::monomial(l.div(lj).unwrap(), FieldElem::one())));
        let r = s.reduce(&basis);
        if !r.is_zero() {
            let (_, c) = r.leading().unwrap();
            let r = r.scale(&c.inverse().unwrap());
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(r);
        }
    }
    // Minimalize: drop elements whose leading term another one divides.
    let mut keep = Vec::new();
    for i in 0..basis.len() {
        let li = *basis[i].leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if i == j {
                return false;
            }
            let lj = *g.leading().unwrap().0;
            lj.divides(&li) && (lj != li || j < i)
        });
        if !redundant {
            keep.push(basis[i].clone());
        }
    }
    // Inter-reduce tails for a canonical reduced basis.
    let snapshot = keep.clone();
    for (i, g) in keep.iter_mut().enumerate() {
        let others: Vec<TriPoly> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = g.reduce(&others);
        if !r.is_zero() {
            let (_, c) = r.leading().unwrap();
            *g = r.scale(&c.inverse().unwrap());
        }
    }
    keep.retain(|g| !g.is_zero());
    keep
}

/// Monomials outside the leading-term ideal of a Groebner basis, or `None`
/// when the quotient is infinite-dimensional.
pub fn standard_monomials(gb: &[TriPoly]) -> Option<Vec<Mon3>> {
    let leads: Vec<Mon3> = gb.iter().map(|g| *g.leading().unwrap().0).collect();
    // Finite dimension needs a pure power of each variable among the leads.
    let mut bound = [0u16; 3];
    for v in 0..3 {
        let pure = leads
            .iter()
            .filter(|m| (0..3).all(|k| k == v || m.0[k] == 0))
            .map(|m| m.0[v])
            .min()?;
        bound[v] = pure;
    }
    let mut out = Vec::new();
    for a in 0..bound[0] {
        for b in 0..bound[1] {
            for c in 0..bound[2] {
                let m = Mon3([a, b, c]);
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
            }
        }
    }
    out.sort();
    Some(out)
}
