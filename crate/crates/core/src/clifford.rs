//! Clifford maps on quadratic duals, and Clifford deformations realized as
//! 8-dimensional parity-graded algebras with explicit structure constants.
//!
//! Two rewriting engines build the deformation, chosen by the shape of the
//! dual relations. Commutative duals (the relation space contains all three
//! commutators) go through a Buchberger completion of the three deformed
//! quadrics in commuting variables, since naive square rewriting can loop
//! when every cross term is present. Skew duals (the relation space contains
//! all three anticommutators) use Clifford straightening: swapping distinct
//! letters with a sign and eliminating squares, which terminates because
//! each square rule only produces strictly larger letters.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::FieldElem;
use crate::findim::FinDimAlgebra;
use crate::freealg::{FreeElem, QuadAlgebra};
use crate::linalg::Matrix;
use crate::tripoly::{groebner, standard_monomials, Mon3, TriPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliffordError {
    NotCentral,
    NotCliffordMap,
    DegenerateDeformation,
    UnsupportedPresentation,
    DualShape,
}

impl fmt::Display for CliffordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordError::NotCentral => write!(f, "not a central element"),
            CliffordError::NotCliffordMap => write!(f, "map fails the Clifford condition"),
            CliffordError::DegenerateDeformation => write!(f, "degenerate deformation"),
            CliffordError::UnsupportedPresentation => {
                write!(f, "dual presentation outside the supported shapes")
            }
            CliffordError::DualShape => {
                write!(
                    f,
                    "dual relation space has no commutator or anticommutator template"
                )
            }
        }
    }
}

impl core::error::Error for CliffordError {}

/// Whether the dual relations contain the three commutators (a commutative
/// dual) or the three anticommutators (a skew dual).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKind {
    Commutative,
    Skew,
}

/// The 6-dimensional dual relation space organized on a template basis:
/// three (anti)commutators followed by three quadratic relations whose
/// square parts are exactly `u^2`, `v^2`, `w^2`.
#[derive(Clone, Debug)]
pub struct DualPresentation {
    kind: DualKind,
    /// `u_a u_b -+ u_b u_a` for `(a,b) = (0,1), (1,2), (2,0)`.
    mixed: [FreeElem; 3],
    /// Quadratic relation with square pattern `delta_{jk}` at `u_j^2`.
    quadratics: [FreeElem; 3],
}

impl DualPresentation {
    /// Organizes a 6-dimensional dual relation span onto the template basis.
    pub fn from_span(span: &[FreeElem]) -> Result<DualPresentation, CliffordError> {
        assert!(span.iter().all(|r| r.degree() == 2 && r.n_gens() == 3));
        let span_rows: Vec<Vec<FieldElem>> = span.iter().map(FreeElem::to_vec).collect();
        let span_rank = Matrix::from_rows(span_rows.clone()).rank();
        if span.len() != 6 || span_rank != 6 {
            return Err(CliffordError::DualShape);
        }
        let contains = |e: &FreeElem| {
            let mut rows = span_rows.clone();
            rows.push(e.to_vec());
            Matrix::from_rows(rows).rank() == 6
        };
        let mixed_template = |sign: i64| -> [FreeElem; 3] {
            let pairs = [(0u8, 1u8), (1, 2), (2, 0)];
            pairs.map(|(a, b)| {
                let mut e = FreeElem::zero(3, 2);
                e.add_term(vec![a, b], FieldElem::one());
                e.add_term(vec![b, a], FieldElem::from_integer(sign));
                e
            })
        };
        let (kind, mixed) = {
            let comms = mixed_template(-1);
            let anti = mixed_template(1);
            if comms.iter().all(contains) {
                (DualKind::Commutative, comms)
            } else if anti.iter().all(contains) {
                (DualKind::Skew, anti)
            } else {
                return Err(CliffordError::DualShape);
            }
        };
        // For each k solve for a span element with square pattern delta_{jk};
        // the choice is unique modulo the mixed relations, which is harmless
        // because Clifford maps of interest vanish there.
        let coord_rows: Vec<Vec<FieldElem>> = (0..9)
            .map(|r| span_rows.iter().map(|v| v[r].clone()).collect())
            .collect();
        let coord_matrix = Matrix::from_rows(coord_rows);
        let mut quadratics = Vec::with_capacity(3);
        for k in 0..3u8 {
            // Target constraints live on the three square coordinates only:
            // build the 3x6 system sum_i c_i span_i[square_j] = delta_{jk}.
            let rows: Vec<Vec<FieldElem>> = (0..3)
                .map(|j| {
                    let idx = crate::freealg::word_index(3, &[j as u8, j as u8]);
                    span_rows.iter().map(|v| v[idx].clone()).collect()
                })
                .collect();
            let mut rhs = vec![FieldElem::zero(); 3];
            rhs[k as usize] = FieldElem::one();
            let combo = Matrix::from_rows(rows)
                .solve(&rhs)
                .ok_or(CliffordError::DualShape)?;
            let mut q = vec![FieldElem::zero(); 9];
            for (i, c) in combo.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (r, cell) in q.iter_mut().enumerate() {
                    *cell = &*cell + &(c * &coord_matrix.at(r, i).clone());
                }
            }
            quadratics.push(FreeElem::from_vec(3, 2, &q));
        }
        let quadratics: [FreeElem; 3] = quadratics.try_into().unwrap();
        Ok(DualPresentation {
            kind,
            mixed,
            quadratics,
        })
    }

    /// Dual presentation of a quadratic algebra on three generators.
    pub fn of_dual(s: &QuadAlgebra) -> Result<DualPresentation, CliffordError> {
        let span = s.quadratic_dual().map_err(|_| CliffordError::DualShape)?;
        DualPresentation::from_span(&span)
    }

    pub fn kind(&self) -> DualKind {
        self.kind
    }

    /// The six template relations: mixed ones first, then the quadratics.
    pub fn relations(&self) -> Vec<FreeElem> {
        let mut out: Vec<FreeElem> = self.mixed.to_vec();
        out.extend(self.quadratics.iter().cloned());
        out
    }

    pub fn quadratics(&self) -> &[FreeElem; 3] {
        &self.quadratics
    }
}

/// A linear functional on the dual relation space, stored as values on the
/// six template relations of a [`DualPresentation`].
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordMap {
    pub values: [FieldElem; 6],
}

impl CliffordMap {
    pub fn zero() -> CliffordMap {
        CliffordMap {
            values: core::array::from_fn(|_| FieldElem::zero()),
        }
    }

    /// Vanishes on the mixed (commutator/anticommutator) relations?
    pub fn vanishes_on_mixed(&self) -> bool {
        self.values[..3].iter().all(FieldElem::is_zero)
    }
}

/// The Clifford map attached to a central element `f = a x^2 + b y^2 + c z^2`
/// of `s`: each quadratic dual relation goes to the matching coefficient of
/// `f` and the mixed relations go to 0. Checked against the Clifford
/// condition before returning.
pub fn theta_from_central(
    s: &QuadAlgebra,
    f: &[FieldElem; 3],
) -> Result<(DualPresentation, CliffordMap), CliffordError> {
    let mut fe = FreeElem::zero(3, 2);
    for (k, c) in f.iter().enumerate() {
        fe.add_term(vec![k as u8, k as u8], c.clone());
    }
    if s.is_central(&fe) != Ok(true) {
        return Err(CliffordError::NotCentral);
    }
    let pres = DualPresentation::of_dual(s)?;
    let theta = CliffordMap {
        values: [
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::zero(),
            f[0].clone(),
            f[1].clone(),
            f[2].clone(),
        ],
    };
    if !is_clifford_map(&pres.relations(), &theta.values) {
        return Err(CliffordError::NotCliffordMap);
    }
    Ok((pres, theta))
}

/// The Clifford condition: `(theta ⊗ 1 - 1 ⊗ theta)` annihilates
/// `V ⊗ R ∩ R ⊗ V` inside the 27-dimensional cube. Computed by exact
/// linear algebra from a basis of the intersection.
///
/// `relations` is any basis of the dual relation space and `values` the
/// functional's values on that basis.
pub fn is_clifford_map(relations: &[FreeElem], values: &[FieldElem]) -> bool {
    assert_eq!(relations.len(), values.len());
    let n = 3usize;
    let m = relations.len();
    let dim = n * n * n;
    // Columns: x_i ⊗ r_k (i*m+k), then r_k ⊗ x_j (k*n+j, negated).
    let mut cols: Vec<Vec<FieldElem>> = Vec::with_capacity(2 * n * m);
    for i in 0..n {
        for rel in relations {
            let mut v = vec![FieldElem::zero(); dim];
            for (w, c) in rel.terms() {
                let idx = (i * n + w[0] as usize) * n + w[1] as usize;
                v[idx] = c.clone();
            }
            cols.push(v);
        }
    }
    for rel in relations {
        for j in 0..n {
            let mut v = vec![FieldElem::zero(); dim];
            for (w, c) in rel.terms() {
                let idx = (w[0] as usize * n + w[1] as usize) * n + j;
                v[idx] = -c;
            }
            cols.push(v);
        }
    }
    let rows: Vec<Vec<FieldElem>> = (0..dim)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let kernel = Matrix::from_rows(rows).kernel_basis();
    // Each kernel vector encodes one intersection element with both of its
    // decompositions; apply 1⊗theta to the left half and theta⊗1 to the
    // right half and compare.
    for combo in kernel {
        let (left, right) = combo.split_at(n * m);
        let mut diff = vec![FieldElem::zero(); n];
        for i in 0..n {
            for k in 0..m {
                let c = &left[i * m + k];
                if !c.is_zero() {
                    // w = sum c_{ik} x_i ⊗ r_k, (1⊗theta)(w) = sum c theta_k x_i
                    diff[i] = &diff[i] - &(c * &values[k]);
                }
            }
        }
        for k in 0..m {
            for j in 0..n {
                // the columns were negated, so the kernel coefficient is the
                // decomposition coefficient itself
                let c = &right[k * n + j];
                if !c.is_zero() {
                    diff[j] = &diff[j] + &(c * &values[k]);
                }
            }
        }
        if diff.iter().any(|c| !c.is_zero()) {
            return false;
        }
    }
    true
}

const EIGHT_BASIS: [&[u8]; 8] = [&[], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]];

fn basis_label(word: &[u8]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter()
        .map(|&l| ["u", "v", "w"][l as usize])
        .collect::<Vec<_>>()
        .join("")
}

/// Clifford deformation of a dual presentation by a Clifford map: the
/// 8-dimensional parity-graded algebra on `1, u, v, w, uv, uw, vw, uvw`.
pub fn clifford_deformation(
    pres: &DualPresentation,
    theta: &CliffordMap,
) -> Result<FinDimAlgebra, CliffordError> {
    if !is_clifford_map(&pres.relations(), &theta.values) {
        return Err(CliffordError::NotCliffordMap);
    }
    if !theta.vanishes_on_mixed() {
        // The engines below present the quotient over the undeformed mixed
        // relations; a nonzero mixed value would change the shape.
        return Err(CliffordError::UnsupportedPresentation);
    }
    match pres.kind {
        DualKind::Commutative => commutative_deformation(pres, theta),
        DualKind::Skew => skew_deformation(pres, theta),
    }
}

fn mon_of_word(word: &[u8]) -> Mon3 {
    let mut e = [0u16; 3];
    for &l in word {
        e[l as usize] += 1;
    }
    Mon3(e)
}

/// Commutative engine: Buchberger completion of the three deformed quadrics
/// in `k[u, v, w]`.
fn commutative_deformation(
    pres: &DualPresentation,
    theta: &CliffordMap,
) -> Result<FinDimAlgebra, CliffordError> {
    let mut gens = Vec::with_capacity(3);
    for (k, q) in pres.quadratics.iter().enumerate() {
        let mut p = TriPoly::zero();
        for (w, c) in q.terms() {
            p.add_term(mon_of_word(w), c.clone());
        }
        p.add_term(Mon3::one(), -&theta.values[3 + k]);
        gens.push(p);
    }
    let gb = groebner(&gens);
    let std_mons = standard_monomials(&gb).ok_or(CliffordError::DegenerateDeformation)?;
    if std_mons.len() != 8 {
        return Err(CliffordError::DegenerateDeformation);
    }
    let nf_coords = |p: &TriPoly| -> Vec<FieldElem> {
        let r = p.reduce(&gb);
        std_mons.iter().map(|m| r.coeff(m)).collect()
    };
    // Express everything on the preferred squarefree basis.
    let preferred: Vec<TriPoly> = EIGHT_BASIS
        .iter()
        .map(|w| TriPoly::monomial(mon_of_word(w), FieldElem::one()))
        .collect();
    let pref_coords: Vec<Vec<FieldElem>> = preferred.iter().map(&nf_coords).collect();
    let rows: Vec<Vec<FieldElem>> = (0..8)
        .map(|r| pref_coords.iter().map(|c| c[r].clone()).collect())
        .collect();
    let change = Matrix::from_rows(rows);
    let express = |v: &[FieldElem]| -> Result<Vec<FieldElem>, CliffordError> {
        change.solve(v).ok_or(CliffordError::DegenerateDeformation)
    };
    let mut sc = vec![vec![Vec::new(); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let prod = preferred[i].mul(&preferred[j]);
            sc[i][j] = express(&nf_coords(&prod))?;
        }
    }
    let mut unit = vec![FieldElem::zero(); 8];
    unit[0] = FieldElem::one();
    let labels = EIGHT_BASIS.iter().map(|w| basis_label(w)).collect();
    let grading = EIGHT_BASIS.iter().map(|w| (w.len() % 2) as u8).collect();
    FinDimAlgebra::new(labels, sc, unit, Some(grading))
        .map_err(|_| CliffordError::DegenerateDeformation)
}

/// Skew engine: straightening with anticommuting swaps and square
/// elimination. Swapping distinct letters decreases inversions; a square
/// rule for letter `k` may only produce letters greater than `k`, so the
/// letter-count vector decreases lexicographically and rewriting terminates.
fn skew_deformation(
    pres: &DualPresentation,
    theta: &CliffordMap,
) -> Result<FinDimAlgebra, CliffordError> {
    // Square rules: u_k u_k -> theta_k - (sorted mixed part of q_k).
    let mut rules: Vec<Vec<(Vec<u8>, FieldElem)>> = Vec::with_capacity(3);
    for (k, q) in pres.quadratics.iter().enumerate() {
        let mut rhs: Vec<(Vec<u8>, FieldElem)> = vec![(vec![], theta.values[3 + k].clone())];
        for (w, c) in q.terms() {
            if w[0] == w[1] {
                continue;
            }
            // sort the pair with a sign, then negate (moved to the rhs)
            let (word, sign) = if w[0] < w[1] {
                (vec![w[0], w[1]], FieldElem::from_integer(-1))
            } else {
                (vec![w[1], w[0]], FieldElem::one())
            };
            if word[0] as usize <= k {
                return Err(CliffordError::UnsupportedPresentation);
            }
            rhs.push((word, &sign * c));
        }
        rules.push(rhs);
    }
    let straighten = |word: &[u8]| -> Result<Vec<FieldElem>, CliffordError> {
        let mut out = vec![FieldElem::zero(); 8];
        let mut work: Vec<(Vec<u8>, FieldElem)> = vec![(word.to_vec(), FieldElem::one())];
        let mut fuel = 100_000usize;
        while let Some((w, c)) = work.pop() {
            fuel = fuel
                .checked_sub(1)
                .ok_or(CliffordError::UnsupportedPresentation)?;
            if c.is_zero() {
                continue;
            }
            match (0..w.len().saturating_sub(1)).find(|&i| w[i] >= w[i + 1]) {
                None => {
                    let idx = EIGHT_BASIS
                        .iter()
                        .position(|b| *b == w.as_slice())
                        .expect("sorted squarefree word");
                    out[idx] = &out[idx] + &c;
                }
                Some(i) if w[i] == w[i + 1] => {
                    let k = w[i] as usize;
                    for (rw, rc) in &rules[k] {
                        let mut nw = w[..i].to_vec();
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[i + 2..]);
                        work.push((nw, &c * rc));
                    }
                }
                Some(i) => {
                    let mut nw = w.clone();
                    nw.swap(i, i + 1);
                    work.push((nw, -&c));
                }
            }
        }
        Ok(out)
    };
    let mut sc = vec![vec![Vec::new(); 8]; 8];
    for (i, wi) in EIGHT_BASIS.iter().enumerate() {
        for (j, wj) in EIGHT_BASIS.iter().enumerate() {
            let mut cat = wi.to_vec();
            cat.extend_from_slice(wj);
            sc[i][j] = straighten(&cat)?;
        }
    }
    let mut unit = vec![FieldElem::zero(); 8];
    unit[0] = FieldElem::one();
    let labels = EIGHT_BASIS.iter().map(|w| basis_label(w)).collect();
    let grading = EIGHT_BASIS.iter().map(|w| (w.len() % 2) as u8).collect();
    FinDimAlgebra::new(labels, sc, unit, Some(grading))
        .map_err(|_| CliffordError::DegenerateDeformation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::findim::CAClass;
    use crate::freealg::{parse_relation, GENS_XYZ};

    fn int(n: i64) -> FieldElem {
        FieldElem::from_integer(n)
    }

    fn commutative() -> QuadAlgebra {
        let c = FieldContext::default();
        let rels = ["y*z - z*y", "z*x - x*z", "x*y - y*x"]
            .iter()
            .map(|r| parse_relation(r, &GENS_XYZ, &c).unwrap())
            .collect();
        QuadAlgebra::new(3, rels).unwrap()
    }

    fn skew(a: i64, b: i64, g: i64) -> QuadAlgebra {
        let c = FieldContext::default();
        let rels = [
            format!("y*z + z*y + ({a})*x^2"),
            format!("z*x + x*z + ({b})*y^2"),
            format!("x*y + y*x + ({g})*z^2"),
        ]
        .iter()
        .map(|r| parse_relation(r, &GENS_XYZ, &c).unwrap())
        .collect();
        QuadAlgebra::new(3, rels).unwrap()
    }

    fn triple_line() -> QuadAlgebra {
        let c = FieldContext::default();
        let rels = ["y*z - z*y + x^2", "z*x - x*z", "x*y - y*x"]
            .iter()
            .map(|r| parse_relation(r, &GENS_XYZ, &c).unwrap())
            .collect();
        QuadAlgebra::new(3, rels).unwrap()
    }

    #[test]
    fn dual_presentation_kinds() {
        // dual of a commutative ring is skew (exterior algebra)
        assert_eq!(
            DualPresentation::of_dual(&commutative()).unwrap().kind(),
            DualKind::Skew
        );
        // dual of the skew family is commutative
        assert_eq!(
            DualPresentation::of_dual(&skew(1, 1, 0)).unwrap().kind(),
            DualKind::Commutative
        );
        assert_eq!(
            DualPresentation::of_dual(&triple_line()).unwrap().kind(),
            DualKind::Skew
        );
    }

    #[test]
    fn theta_from_central_examples() {
        // (0,0,0) family, f = x^2 + y^2 + z^2
        let s = skew(0, 0, 0);
        let (_, theta) = theta_from_central(&s, &[int(1), int(1), int(1)]).unwrap();
        assert_eq!(theta.values[3..], [int(1), int(1), int(1)]);
        assert!(theta.vanishes_on_mixed());
        // zero map
        let (_, theta0) = theta_from_central(&s, &[int(0), int(0), int(0)]).unwrap();
        assert_eq!(theta0, CliffordMap::zero());
        // non-central f rejected: y^2 is not central in the triple-line algebra
        assert_eq!(
            theta_from_central(&triple_line(), &[int(0), int(1), int(0)]).unwrap_err(),
            CliffordError::NotCentral
        );
    }

    #[test]
    fn theta_is_clifford_for_random_central_elements() {
        let mut state = 0xdeadbeefdead1234u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ((state >> 40) as i64 % 7) - 3
        };
        let families = [skew(0, 0, 0), skew(1, 1, 0), skew(2, 2, 2), skew(3, 0, 0)];
        let mut count = 0;
        while count < 20 {
            let s = &families[(next().unsigned_abs() as usize) % families.len()];
            let f = [int(next()), int(next()), int(next())];
            if f.iter().all(FieldElem::is_zero) {
                continue;
            }
            theta_from_central(s, &f).unwrap();
            count += 1;
        }
    }

    #[test]
    fn nonstandard_functional_on_dual_of_skew000() {
        // theta(uv - vu) = 1, all others zero, on the commutative dual of the
        // (0,0,0) family: frozen regression value for the brute-force
        // intersection computation.
        let pres = DualPresentation::of_dual(&skew(0, 0, 0)).unwrap();
        let mut values = vec![FieldElem::zero(); 6];
        values[0] = FieldElem::one();
        assert!(!is_clifford_map(&pres.relations(), &values));
    }

    #[test]
    fn deformation_of_commutative_dual_is_clifford_algebra() {
        // k[x,y,z]/(quadrics) dual deformed by (1,1,1): the rank-3 Clifford
        // algebra, whose even part is the 2x2 matrix algebra.
        let s = commutative();
        let (pres, theta) = theta_from_central(&s, &[int(1), int(1), int(1)]).unwrap();
        let alg = clifford_deformation(&pres, &theta).unwrap();
        assert_eq!(alg.dim(), 8);
        let even = alg.even_part().unwrap();
        assert_eq!(even.dim(), 4);
        assert_eq!(even.classify_ca().unwrap(), CAClass::Mat2);
        // rank 1: skew dual numbers
        let (pres, theta) = theta_from_central(&s, &[int(1), int(0), int(0)]).unwrap();
        let even = clifford_deformation(&pres, &theta)
            .unwrap()
            .even_part()
            .unwrap();
        assert_eq!(even.classify_ca().unwrap(), CAClass::SkewDualNumbers);
        // rank 2: skew split
        let (pres, theta) = theta_from_central(&s, &[int(1), int(1), int(0)]).unwrap();
        let even = clifford_deformation(&pres, &theta)
            .unwrap()
            .even_part()
            .unwrap();
        assert_eq!(even.classify_ca().unwrap(), CAClass::SkewSplit);
    }

    #[test]
    fn deformation_of_skew000_dual() {
        // dual of the (0,0,0) family is k[u,v,w]/(u^2,v^2,w^2)-shaped;
        // theta = (1,1,1) gives k[u,v,w]/(u^2-1, v^2-1, w^2-1): even part k^4.
        let s = skew(0, 0, 0);
        let (pres, theta) = theta_from_central(&s, &[int(1), int(1), int(1)]).unwrap();
        let alg = clifford_deformation(&pres, &theta).unwrap();
        assert_eq!(alg.dim(), 8);
        assert!(alg.is_commutative());
        let even = alg.even_part().unwrap();
        assert_eq!(even.classify_ca().unwrap(), CAClass::Split4);
        // theta with one vanished square: (k[u]/(u^2))^2 pattern
        let (pres, theta) = theta_from_central(&s, &[int(1), int(1), int(0)]).unwrap();
        let even = clifford_deformation(&pres, &theta)
            .unwrap()
            .even_part()
            .unwrap();
        assert_eq!(even.classify_ca().unwrap(), CAClass::DoubleDual);
        // undeformed: local with a 3-dimensional radical
        let (pres, theta) = theta_from_central(&s, &[int(0), int(0), int(0)]).unwrap();
        let even = clifford_deformation(&pres, &theta)
            .unwrap()
            .even_part()
            .unwrap();
        assert_eq!(even.radical().len(), 3);
    }

    #[test]
    fn undeformed_dual_is_never_semisimple() {
        // theta = 0 corresponds to f = 0, which is not a conic; the even
        // part must never look semisimple (it may fall outside the nine
        // classes entirely, which classify_ca reports as an error).
        for s in [skew(0, 0, 0), skew(1, 1, 0), skew(2, 2, 2), commutative()] {
            let (pres, theta) = theta_from_central(&s, &[int(0), int(0), int(0)]).unwrap();
            let alg = clifford_deformation(&pres, &theta).unwrap();
            assert_eq!(alg.dim(), 8);
            let even = alg.even_part().unwrap();
            assert!(
                !even.radical().is_empty(),
                "theta = 0 gave a semisimple even part"
            );
            if let Ok(class) = even.classify_ca() {
                assert!(!matches!(class, CAClass::Mat2 | CAClass::Split4));
            }
        }
    }

    #[test]
    fn triple_line_deformation() {
        // f = x^2 in the triple-line algebra: even part is the skew dual
        // numbers (the same class as the commutative double line).
        let s = triple_line();
        let (pres, theta) = theta_from_central(&s, &[int(1), int(0), int(0)]).unwrap();
        let alg = clifford_deformation(&pres, &theta).unwrap();
        assert_eq!(alg.dim(), 8);
        let even = alg.even_part().unwrap();
        assert_eq!(even.classify_ca().unwrap(), CAClass::SkewDualNumbers);
    }

    #[test]
    fn sklyanin_deformation_spec_counts() {
        // lambda = 2: f = x^2+y^2+z^2 must give 4 spectrum points
        let s = skew(2, 2, 2);
        let (pres, theta) = theta_from_central(&s, &[int(1), int(1), int(1)]).unwrap();
        let even = clifford_deformation(&pres, &theta)
            .unwrap()
            .even_part()
            .unwrap();
        assert_eq!(even.spec_count(true).unwrap(), 4);
        assert_eq!(even.classify_ca().unwrap(), CAClass::Split4);
        // f = -4x^2 + 12y^2 + 12z^2: two points, local cube factor
        let (pres, theta) = theta_from_central(&s, &[int(-4), int(12), int(12)]).unwrap();
        let even = clifford_deformation(&pres, &theta)
            .unwrap()
            .even_part()
            .unwrap();
        assert_eq!(even.spec_count(true).unwrap(), 2);
        assert_eq!(even.classify_ca().unwrap(), CAClass::Jordan3PlusK);
        assert_eq!(even.radical().len(), 2);
    }
}
