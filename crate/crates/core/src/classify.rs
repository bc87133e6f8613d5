//! The end-to-end classification pipeline: validate a conic specification,
//! compute every invariant (automorphism order, center dimension, the
//! 4-dimensional invariant algebra and its class, spectrum count, point
//! variety), cross-check the record against the built-in classification
//! tables, and emit an invariant record.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::{
    self, instantiate, point_variety_ea, sigma_order_bar, skew_geometry, skew_relations,
    CatalogEntry, CatalogError, RowTag, SigmaOrderClass,
};
use crate::clifford::{clifford_deformation, theta_from_central, CliffordError};
use crate::field::{FieldContext, FieldElem};
use crate::findim::{CAClass, FinDimError};
use crate::freealg::{square_central_closed_form, AlgError, FreeElem, QuadAlgebra};
use crate::geometry::{proportional, render_tripoly, Count, PointP2};
use crate::linalg::Matrix;
use crate::tripoly::TriPoly;
use crate::unipoly::{self, UniPoly};

#[derive(Clone, Debug, PartialEq)]
pub enum ClassifyError {
    Validation(String),
    NotQuantumCandidate,
    FNotCentral,
    TableInconsistency(String),
    Alg(AlgError),
    Clifford(CliffordError),
    FinDim(FinDimError),
    Catalog(CatalogError),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Validation(m) => write!(f, "invalid specification: {m}"),
            ClassifyError::NotQuantumCandidate => {
                write!(f, "not a quantum polynomial candidate")
            }
            ClassifyError::FNotCentral => write!(f, "f is not central in degree 2"),
            ClassifyError::TableInconsistency(m) => write!(f, "table inconsistency: {m}"),
            ClassifyError::Alg(e) => write!(f, "{e}"),
            ClassifyError::Clifford(e) => write!(f, "{e}"),
            ClassifyError::FinDim(e) => write!(f, "{e}"),
            ClassifyError::Catalog(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ClassifyError {}

impl From<AlgError> for ClassifyError {
    fn from(e: AlgError) -> Self {
        ClassifyError::Alg(e)
    }
}
impl From<CliffordError> for ClassifyError {
    fn from(e: CliffordError) -> Self {
        ClassifyError::Clifford(e)
    }
}
impl From<FinDimError> for ClassifyError {
    fn from(e: FinDimError) -> Self {
        ClassifyError::FinDim(e)
    }
}
impl From<CatalogError> for ClassifyError {
    fn from(e: CatalogError) -> Self {
        ClassifyError::Catalog(e)
    }
}

/// The four specification families.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// The commutative polynomial ring.
    Commutative,
    /// The triple-line algebra `yz - zy + x^2, zx - xz, xy - yx`.
    TripleLine,
    /// The diagonal skew family `S^(alpha, beta, gamma)`.
    Skew([FieldElem; 3]),
    /// The diagonal elliptic family at one parameter.
    Sklyanin(FieldElem),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Commutative => "commutative",
            Family::TripleLine => "tl",
            Family::Skew(_) => "skew",
            Family::Sklyanin(_) => "sklyanin",
        }
    }

    pub fn params(&self) -> Vec<FieldElem> {
        match self {
            Family::Commutative | Family::TripleLine => vec![],
            Family::Skew(c) => c.to_vec(),
            Family::Sklyanin(l) => vec![l.clone()],
        }
    }

    /// The skew-family coefficients when the dual route applies.
    fn skew_coeffs(&self) -> Option<[FieldElem; 3]> {
        match self {
            Family::Skew(c) => Some(c.clone()),
            Family::Sklyanin(l) => Some([l.clone(), l.clone(), l.clone()]),
            _ => None,
        }
    }
}

/// A conic specification: a family, the diagonal coefficients of the
/// central element `f = a x^2 + b y^2 + c z^2`, and optionally an explicit
/// linear form with `g^2` proportional to `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicSpec {
    pub family: Family,
    pub f: [FieldElem; 3],
    pub g: Option<[FieldElem; 3]>,
}

impl ConicSpec {
    pub fn new(family: Family, f: [FieldElem; 3]) -> ConicSpec {
        ConicSpec { family, f, g: None }
    }

    pub fn with_g(mut self, g: [FieldElem; 3]) -> ConicSpec {
        self.g = Some(g);
        self
    }

    pub fn validate(&self) -> Result<(), ClassifyError> {
        if self.f.iter().all(FieldElem::is_zero) {
            return Err(ClassifyError::Validation("f must be nonzero".into()));
        }
        match &self.family {
            Family::Commutative | Family::TripleLine => Ok(()),
            Family::Skew(c) => {
                let product = &(&c[0] * &c[1]) * &c[2];
                let all_equal = c[0] == c[1] && c[1] == c[2];
                if !product.is_zero() && !all_equal {
                    return Err(ClassifyError::Validation(
                        "skew family requires a zero coefficient or all coefficients equal".into(),
                    ));
                }
                if !product.is_zero() {
                    check_elliptic_param(&c[0])?;
                }
                Ok(())
            }
            Family::Sklyanin(l) => check_elliptic_param(l),
        }
    }
}

fn check_elliptic_param(l: &FieldElem) -> Result<(), ClassifyError> {
    let c = l.pow(3);
    if c.is_zero() || c.is_one() || c == FieldElem::from_integer(-8) {
        return Err(ClassifyError::Validation(
            "elliptic family requires the parameter cube to avoid 0, 1 and -8".into(),
        ));
    }
    Ok(())
}

/// Finite, infinite (a line), or undetermined point-variety count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EaCount {
    Finite(usize),
    Infinite,
    Unknown,
}

impl fmt::Display for EaCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EaCount::Finite(n) => write!(f, "{n}"),
            EaCount::Infinite => write!(f, "infinite"),
            EaCount::Unknown => write!(f, "unknown"),
        }
    }
}

/// The classification output for one conic.
#[derive(Clone, Debug)]
pub struct InvariantRecord {
    pub family: Family,
    pub f: [FieldElem; 3],
    pub sigma_class: SigmaOrderClass,
    pub dim_z2: usize,
    pub ca_class: CAClass,
    /// Number of points of the spectrum of the invariant algebra (equals
    /// the point count of the dual conic's variety).
    pub spec_count: usize,
    pub ea_count: EaCount,
    pub dual_presentation: String,
    /// The row of the reference classification this record realizes, named
    /// by the shape of the point variety.
    pub table_row: String,
    pub consistent: bool,
    pub g_found: Option<[FieldElem; 3]>,
    pub ea_points: Option<Vec<PointP2>>,
}

/// Relations of the specified family.
pub fn family_relations(family: &Family) -> Vec<FreeElem> {
    match family {
        Family::Commutative => {
            let minus = FieldElem::from_integer(-1);
            (0..3u8)
                .map(|k| {
                    let a = (k + 1) % 3;
                    let b = (k + 2) % 3;
                    let mut e = FreeElem::zero(3, 2);
                    e.add_term(vec![a, b], FieldElem::one());
                    e.add_term(vec![b, a], minus.clone());
                    e
                })
                .collect()
        }
        Family::TripleLine => {
            let minus = FieldElem::from_integer(-1);
            (0..3u8)
                .map(|k| {
                    let a = (k + 1) % 3;
                    let b = (k + 2) % 3;
                    let mut e = FreeElem::zero(3, 2);
                    e.add_term(vec![a, b], FieldElem::one());
                    e.add_term(vec![b, a], minus.clone());
                    if k == 0 {
                        e.add_term(vec![0, 0], FieldElem::one());
                    }
                    e
                })
                .collect()
        }
        Family::Skew(c) => skew_relations(c),
        Family::Sklyanin(l) => skew_relations(&[l.clone(), l.clone(), l.clone()]),
    }
}

/// Builds the ambient algebra, checks the polynomial Hilbert dimensions, and
/// checks that `f` is central; returns the algebra and the central element.
pub fn build_algebra(spec: &ConicSpec) -> Result<(QuadAlgebra, FreeElem), ClassifyError> {
    spec.validate()?;
    let s = QuadAlgebra::new(3, family_relations(&spec.family))?.with_tag(spec.family.name());
    if !s.is_quantum_candidate() {
        return Err(ClassifyError::NotQuantumCandidate);
    }
    let mut f = FreeElem::zero(3, 2);
    for (k, c) in spec.f.iter().enumerate() {
        f.add_term(vec![k as u8, k as u8], c.clone());
    }
    if !s.is_central(&f)? {
        return Err(ClassifyError::FNotCentral);
    }
    Ok((s, f))
}

/// Rank of a symmetric 3x3 matrix over the field (the classification of a
/// commutative quadric up to linear change of coordinates).
pub fn sylvester_rank(m: &[[FieldElem; 3]; 3]) -> Result<usize, ClassifyError> {
    for i in 0..3 {
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(ClassifyError::Validation("matrix is not symmetric".into()));
            }
        }
    }
    if m.iter().flatten().all(FieldElem::is_zero) {
        return Err(ClassifyError::Validation("zero matrix".into()));
    }
    Ok(Matrix::from_rows(m.iter().map(|r| r.to_vec()).collect()).rank())
}

/// Sylvester rank of the diagonal quadric `a x^2 + b y^2 + c z^2`.
pub fn diagonal_rank(f: &[FieldElem; 3]) -> Result<usize, ClassifyError> {
    let z = FieldElem::zero;
    let m = [
        [f[0].clone(), z(), z()],
        [z(), f[1].clone(), z()],
        [z(), z(), f[2].clone()],
    ];
    sylvester_rank(&m)
}

/// All linear forms `g` (up to scalar) with `g^2` proportional to `f`,
/// found by solving the closed-form square system over the base field, and
/// a flag certifying that the list covers every solution over the algebraic
/// closure.
pub fn square_roots_of_f(
    coeffs: &[FieldElem; 3],
    f: &[FieldElem; 3],
) -> (Vec<[FieldElem; 3]>, bool) {
    let family = (coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone());
    let mut found: Vec<[FieldElem; 3]> = Vec::new();
    let mut complete = true;

    let is_solution = |g: &[FieldElem; 3]| {
        let (a, b, c) = square_central_closed_form(&family, g);
        let sq = [a, b, c];
        !sq.iter().all(FieldElem::is_zero) && proportional(&sq, f)
    };

    // Pattern (0, 0, 1).
    {
        let g = [FieldElem::zero(), FieldElem::zero(), FieldElem::one()];
        if is_solution(&g) {
            found.push(g);
        }
    }
    // Pattern (0, 1, nu): the square is (-alpha nu, 1 - beta nu * 0, ...)
    // handled by eliminating down to a single variable.
    {
        let (sols, ok) = solve_second_pattern(&family, f);
        complete &= ok;
        for g in sols {
            if is_solution(&g) {
                found.push(g);
            }
        }
    }
    // Pattern (1, mu, nu): two-variable elimination.
    {
        let (sols, ok) = solve_leading_pattern(&family, f);
        complete &= ok;
        for g in sols {
            if is_solution(&g) {
                found.push(g);
            }
        }
    }
    let mut dedup: Vec<[FieldElem; 3]> = Vec::new();
    for g in found {
        if !dedup.iter().any(|h| proportional(h, &g)) {
            dedup.push(g);
        }
    }
    (dedup, complete)
}

// Scratch parameter indices for elimination variables; chosen above any
// index a specification context would use.
const MU: usize = 8;
const NU: usize = 9;

/// The three 2x2 minors of `[square_central(g); f]` as polynomials in the
/// scratch variables, for `g` with the given leading pattern.
fn square_minors(
    family: &(FieldElem, FieldElem, FieldElem),
    f: &[FieldElem; 3],
    g: &[FieldElem; 3],
) -> Vec<FieldElem> {
    let (a, b, c) = square_central_closed_form(family, g);
    let sq = [a, b, c];
    let mut minors = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            minors.push(&(&sq[i] * &f[j]) - &(&sq[j] * &f[i]));
        }
    }
    minors.retain(|m| !m.is_zero());
    minors
}

fn solve_second_pattern(
    family: &(FieldElem, FieldElem, FieldElem),
    f: &[FieldElem; 3],
) -> (Vec<[FieldElem; 3]>, bool) {
    let nu = FieldElem::param(NU);
    let g = [FieldElem::zero(), FieldElem::one(), nu];
    let minors = square_minors(family, f, &g);
    if minors.is_empty() {
        // the square is proportional to f for every nu: a one-parameter
        // family cannot occur for nonzero f, so treat as none found
        return (Vec::new(), false);
    }
    // gcd of the univariate minors in nu
    let mut gcd = UniPoly::zero();
    for m in &minors {
        let Some(p) = as_unipoly_in(m, NU) else {
            return (Vec::new(), false);
        };
        gcd = gcd.gcd(&p);
    }
    if gcd.is_zero() {
        return (Vec::new(), false);
    }
    if gcd.degree() == 0 {
        return (Vec::new(), true);
    }
    let (roots, root_complete) = unipoly::field_roots(&gcd);
    let closure_count = unipoly::distinct_root_count(&gcd).unwrap_or(usize::MAX);
    let complete = root_complete && roots.len() == closure_count;
    let sols = roots
        .into_iter()
        .map(|r| [FieldElem::zero(), FieldElem::one(), r])
        .collect();
    (sols, complete)
}

fn solve_leading_pattern(
    family: &(FieldElem, FieldElem, FieldElem),
    f: &[FieldElem; 3],
) -> (Vec<[FieldElem; 3]>, bool) {
    let mu = FieldElem::param(MU);
    let nu = FieldElem::param(NU);
    let g = [FieldElem::one(), mu, nu];
    let minors = square_minors(family, f, &g);
    if minors.is_empty() {
        return (Vec::new(), false);
    }
    // Convert each minor to a polynomial in nu with coefficients in mu.
    let polys: Vec<UniPoly> = match minors.iter().map(|m| as_unipoly_in(m, NU)).collect() {
        Some(p) => p,
        None => return (Vec::new(), false),
    };
    // Eliminate nu by a resultant of two minors that genuinely involve it;
    // fall back to minors free of nu as direct constraints on mu.
    let mut eliminant = UniPoly::zero();
    let with_nu: Vec<&UniPoly> = polys.iter().filter(|p| p.degree() > 0).collect();
    let without_nu: Vec<&UniPoly> = polys.iter().filter(|p| p.degree() == 0).collect();
    for p in &without_nu {
        let Some(q) = as_unipoly_in(&p.coeff(0), MU) else {
            return (Vec::new(), false);
        };
        eliminant = eliminant.gcd(&q);
    }
    if with_nu.len() >= 2 {
        let mut res_all = UniPoly::zero();
        for i in 0..with_nu.len() {
            for j in (i + 1)..with_nu.len() {
                if let Ok(r) = unipoly::resultant(with_nu[i], with_nu[j]) {
                    if let Some(rp) = as_unipoly_in(&r, MU) {
                        res_all = res_all.gcd(&rp);
                    }
                }
            }
        }
        eliminant = eliminant.gcd(&res_all);
    } else if with_nu.len() == 1 && without_nu.is_empty() {
        // a single bivariate equation: positive-dimensional, give up
        return (Vec::new(), false);
    }
    if eliminant.is_zero() {
        return (Vec::new(), false);
    }
    if eliminant.degree() == 0 {
        return (Vec::new(), true);
    }
    let (mu_roots, mu_complete) = unipoly::field_roots(&eliminant);
    let closure_count = unipoly::distinct_root_count(&eliminant).unwrap_or(usize::MAX);
    let mut complete = mu_complete && mu_roots.len() == closure_count;
    let mut sols = Vec::new();
    for m0 in mu_roots {
        // substitute mu and solve the fiber in nu
        let mut fiber = UniPoly::zero();
        for p in &polys {
            let coeffs: Vec<FieldElem> = p.coeffs().iter().map(|c| c.eval_param(MU, &m0)).collect();
            let sub = UniPoly::from_coeffs(coeffs);
            if !sub.is_zero() {
                fiber = fiber.gcd(&sub);
            }
        }
        if fiber.is_zero() {
            // every minor vanished identically on the fiber: cannot happen
            // for nonzero f; treat as incomplete
            complete = false;
            continue;
        }
        if fiber.degree() == 0 {
            continue;
        }
        let (nu_roots, nu_complete) = unipoly::field_roots(&fiber);
        let nu_closure = unipoly::distinct_root_count(&fiber).unwrap_or(usize::MAX);
        complete = complete && nu_complete && nu_roots.len() == nu_closure;
        for n0 in nu_roots {
            sols.push([FieldElem::one(), m0.clone(), n0]);
        }
    }
    (sols, complete)
}

/// Reads a field element that is polynomial in the scratch parameter `var`
/// as a univariate polynomial with field-element coefficients.
fn as_unipoly_in(e: &FieldElem, var: usize) -> Option<UniPoly> {
    e.poly_coefficients_in(var).map(UniPoly::from_coeffs)
}

/// The reference classification rows for the involutive path, keyed by
/// `(point count, spectrum count, class)`; an infinite point variety is a
/// line.
pub const TWO_PATH_ROWS: [(EaCount, usize, CAClass); 6] = [
    (EaCount::Infinite, 1, CAClass::DualSquare),
    (EaCount::Finite(1), 1, CAClass::Jordan4),
    (EaCount::Finite(2), 2, CAClass::Jordan3PlusK),
    (EaCount::Finite(3), 2, CAClass::DoubleDual),
    (EaCount::Finite(4), 3, CAClass::DualPlusK2),
    (EaCount::Finite(6), 4, CAClass::Split4),
];

/// The reference rows for the commutative path, keyed by the Sylvester rank:
/// `(rank, variety description, spectrum count, class)`.
pub const COMMUTATIVE_ROWS: [(usize, &str, usize, CAClass); 3] = [
    (1, "a line", 1, CAClass::SkewDualNumbers),
    (2, "two lines", 2, CAClass::SkewSplit),
    (3, "a smooth conic", 0, CAClass::Mat2),
];

fn two_path_row_description(ea: EaCount) -> String {
    match ea {
        EaCount::Infinite => "a line".to_string(),
        EaCount::Finite(1) => "1 point".to_string(),
        EaCount::Finite(n) => format!("{n} points"),
        EaCount::Unknown => "unknown".to_string(),
    }
}

/// The geometry entry attached to a specification's family.
pub fn geometry_entry(spec: &ConicSpec) -> Result<CatalogEntry, ClassifyError> {
    let one = FieldElem::one;
    Ok(match &spec.family {
        Family::Commutative => instantiate(RowTag::P, &[one()])?,
        Family::TripleLine => instantiate(RowTag::TL, &[one()])?,
        Family::Skew(c) => skew_geometry(&c[0], &c[1], &c[2])?,
        Family::Sklyanin(l) => instantiate(RowTag::EC, core::slice::from_ref(l))?,
    })
}

/// Number of points of the dual variety for a commutative conic of the
/// given Sylvester rank, computed honestly by two quotient steps in the
/// geometry of the all-zero skew family (whose algebra presents the dual).
pub fn commutative_dual_point_count(rank: usize) -> Result<usize, ClassifyError> {
    let entry = skew_geometry(&FieldElem::zero(), &FieldElem::zero(), &FieldElem::zero())?;
    let i = FieldElem::sqrt_minus_one();
    let (g1, g2): ([FieldElem; 3], [FieldElem; 3]) = match rank {
        1 => (
            [FieldElem::zero(), FieldElem::one(), FieldElem::zero()],
            [FieldElem::zero(), FieldElem::zero(), FieldElem::one()],
        ),
        2 => (
            [FieldElem::one(), i, FieldElem::zero()],
            [FieldElem::zero(), FieldElem::zero(), FieldElem::one()],
        ),
        3 => (
            [FieldElem::one(), i.clone(), FieldElem::zero()],
            [FieldElem::one(), FieldElem::zero(), i],
        ),
        _ => return Err(ClassifyError::Validation("rank must be 1, 2 or 3".into())),
    };
    let first = point_variety_ea(&entry, &g1)?;
    match first.count {
        Count::Infinite => {
            // first quotient leaves a whole line; intersect it with the
            // second form and close under the automorphism
            let c = first.containment.expect("containment component");
            let line_form = match &entry.components[c].support {
                crate::geometry::Support::Line(l) => l.clone(),
                _ => {
                    return Err(ClassifyError::TableInconsistency(
                        "containment in a non-line component".into(),
                    ))
                }
            };
            let comp = crate::geometry::CurveComponent {
                support: crate::geometry::Support::Line(line_form.clone()),
                form: line_form,
            };
            let li = crate::geometry::intersect_line_component(&g2, &comp)?;
            let pts = li.points.ok_or_else(|| {
                ClassifyError::TableInconsistency("non-explicit line intersection".into())
            })?;
            let mut every = pts.clone();
            for p in &pts {
                every.push(entry.sigma_point(p)?);
            }
            Ok(crate::geometry::dedup_points(every).len())
        }
        Count::Finite(_) => {
            let pts = first.points.ok_or_else(|| {
                ClassifyError::TableInconsistency("non-explicit first quotient".into())
            })?;
            // keep the points on the second form, close under the automorphism
            let mut kept: Vec<PointP2> = Vec::new();
            for p in &pts {
                let v = g2
                    .iter()
                    .zip(p.coords())
                    .fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b));
                if v.is_zero() {
                    kept.push(p.clone());
                }
            }
            let mut every = kept.clone();
            for p in &kept {
                every.push(entry.sigma_point(p)?);
            }
            Ok(crate::geometry::dedup_points(every).len())
        }
    }
}

impl From<crate::geometry::GeomError> for ClassifyError {
    fn from(e: crate::geometry::GeomError) -> Self {
        ClassifyError::Catalog(CatalogError::Geometry(e))
    }
}

/// The dual presentation string emitted for a specification.
pub fn dual_presentation(spec: &ConicSpec) -> Result<String, ClassifyError> {
    spec.validate()?;
    match &spec.family {
        Family::Commutative | Family::TripleLine => {
            let rank = diagonal_rank(&spec.f)?;
            Ok(match rank {
                1 => "k_-1[x,y,z]/(y^2, z^2)".to_string(),
                2 => "k_-1[x,y,z]/(x^2 - y^2, z^2)".to_string(),
                _ => "k_-1[x,y,z]/(x^2 - y^2, x^2 - z^2)".to_string(),
            })
        }
        _ => {
            let coeffs = spec.family.skew_coeffs().expect("skew route");
            // rotate cyclically until the first f-coefficient is nonzero
            let mut rot = 0usize;
            while spec.f[rot % 3].is_zero() {
                rot += 1;
            }
            let take = |arr: &[FieldElem; 3], k: usize| arr[(rot + k) % 3].clone();
            let (a, b, c) = (take(&spec.f, 0), take(&spec.f, 1), take(&spec.f, 2));
            let (al, be, ga) = (take(&coeffs, 0), take(&coeffs, 1), take(&coeffs, 2));
            let x = TriPoly::var(0);
            let y = TriPoly::var(1);
            let z = TriPoly::var(2);
            let base = x.pow(2).sub(&y.mul(&z).scale(&al));
            let g1 = y
                .pow(2)
                .sub(&x.mul(&z).scale(&be))
                .scale(&a)
                .sub(&base.scale(&b));
            let g2 = z
                .pow(2)
                .sub(&x.mul(&y).scale(&ga))
                .scale(&a)
                .sub(&base.scale(&c));
            let ctx = FieldContext::default();
            Ok(format!(
                "k[x,y,z]/({}, {})",
                render_tripoly(&g1, ["x", "y", "z"], &ctx),
                render_tripoly(&g2, ["x", "y", "z"], &ctx)
            ))
        }
    }
}

/// Runs the whole pipeline and cross-checks the record against the
/// reference classification. A cross-check failure is reported as a table
/// inconsistency (it can only fire on an engine defect, never on in-family
/// input).
pub fn classify(spec: &ConicSpec) -> Result<InvariantRecord, ClassifyError> {
    let (s, _f) = build_algebra(spec)?;
    let dim_z2 = s.center_basis(2)?.len();

    let entry = geometry_entry(spec)?;
    let sigma_class = sigma_order_bar(&entry);
    if sigma_class != entry.declared_order {
        return Err(ClassifyError::TableInconsistency(format!(
            "computed automorphism order {sigma_class} differs from the declared {}",
            entry.declared_order
        )));
    }

    let (pres, theta) = theta_from_central(&s, &spec.f)?;
    let deformation = clifford_deformation(&pres, &theta)?;
    let even = deformation.even_part()?;
    let ca_class = even.classify_ca()?;

    let record = match sigma_class {
        SigmaOrderClass::Two => {
            let spec_count = even.spec_count(true)?;
            let coeffs = spec.family.skew_coeffs().expect("involutive route");
            // find a base-field g with g^2 proportional to f
            let g_found: Option<[FieldElem; 3]> = match &spec.g {
                Some(g) => {
                    let sq = square_central_closed_form(
                        &(coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone()),
                        g,
                    );
                    let sq = [sq.0, sq.1, sq.2];
                    if !proportional(&sq, &spec.f) {
                        return Err(ClassifyError::Validation(
                            "supplied g does not square to f".into(),
                        ));
                    }
                    Some(g.clone())
                }
                None => {
                    let (roots, _) = square_roots_of_f(&coeffs, &spec.f);
                    roots.into_iter().next()
                }
            };
            let (ea_count, ea_points) = match &g_found {
                Some(g) => {
                    let r = point_variety_ea(&entry, g)?;
                    let count = match r.count {
                        Count::Finite(n) => EaCount::Finite(n),
                        Count::Infinite => EaCount::Infinite,
                    };
                    (count, r.points)
                }
                None => (EaCount::Unknown, None),
            };
            // row lookup by (spec_count, class)
            let row = TWO_PATH_ROWS
                .iter()
                .find(|(_, sc, cls)| *sc == spec_count && *cls == ca_class)
                .ok_or_else(|| {
                    ClassifyError::TableInconsistency(format!(
                        "({spec_count}, {ca_class}) matches no reference row"
                    ))
                })?;
            if ea_count != EaCount::Unknown && ea_count != row.0 {
                return Err(ClassifyError::TableInconsistency(format!(
                    "point count {ea_count} disagrees with the reference row {}",
                    two_path_row_description(row.0)
                )));
            }
            InvariantRecord {
                family: spec.family.clone(),
                f: spec.f.clone(),
                sigma_class,
                dim_z2,
                ca_class,
                spec_count,
                ea_count,
                dual_presentation: dual_presentation(spec)?,
                table_row: two_path_row_description(row.0),
                consistent: true,
                g_found,
                ea_points,
            }
        }
        _ => {
            let rank = diagonal_rank(&spec.f)?;
            let row = COMMUTATIVE_ROWS
                .iter()
                .find(|(r, _, _, _)| *r == rank)
                .expect("rank is 1, 2 or 3");
            if ca_class != row.3 {
                return Err(ClassifyError::TableInconsistency(format!(
                    "rank {rank} produced class {ca_class}, expected {}",
                    row.3
                )));
            }
            let spec_count = commutative_dual_point_count(rank)?;
            if spec_count != row.2 {
                return Err(ClassifyError::TableInconsistency(format!(
                    "dual point count {spec_count} disagrees with the reference {}",
                    row.2
                )));
            }
            InvariantRecord {
                family: spec.family.clone(),
                f: spec.f.clone(),
                sigma_class,
                dim_z2,
                ca_class,
                spec_count,
                ea_count: EaCount::Infinite,
                dual_presentation: dual_presentation(spec)?,
                table_row: row.1.to_string(),
                consistent: true,
                g_found: None,
                ea_points: None,
            }
        }
    };
    Ok(record)
}

/// One assertion of the verification battery.
#[derive(Clone, Debug)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Report of the full battery over the built-in tables.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    fn check(&mut self, name: &str, pass: bool, detail: String) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            pass,
            detail,
        });
    }
}

/// Runs the full battery: the six central rows (center dimensions and
/// automorphism orders), the nine reference conics through the classifier,
/// coverage of every reference row, and graph verification of the whole
/// catalog. `corrupt` perturbs one chart first and is the negative-control
/// hook used by the command-line front end.
pub fn verify_tables(corrupt: bool) -> Report {
    let mut report = Report::default();
    let int = FieldElem::from_integer;

    // Six central rows: center dimensions and automorphism orders.
    let central_rows: [(&str, RowTag, FieldElem, usize, SigmaOrderClass); 6] = [
        ("P", RowTag::P, int(1), 6, SigmaOrderClass::One),
        ("TL", RowTag::TL, int(1), 1, SigmaOrderClass::One),
        ("S", RowTag::S1, int(-1), 3, SigmaOrderClass::Two),
        ("S'", RowTag::SPrime, int(-1), 3, SigmaOrderClass::Two),
        ("NC", RowTag::NC, int(-1), 3, SigmaOrderClass::Two),
        ("EC", RowTag::EC, int(2), 3, SigmaOrderClass::Two),
    ];
    for (name, tag, param, want_dim, want_order) in central_rows {
        let result = (|| -> Result<(usize, SigmaOrderClass), ClassifyError> {
            let mut entry = instantiate(tag, &[param.clone()])?;
            if corrupt {
                let last = entry.charts.len() - 1;
                let d = entry.charts[last].formulas[2].total_degree();
                entry.charts[last].formulas[2] =
                    entry.charts[last].formulas[2].add(&TriPoly::var(0).pow(d));
            }
            let s = QuadAlgebra::new(3, entry.relations.clone())?;
            let dim = s.center_basis(2)?.len();
            if catalog::verify_graph(&entry).is_err() {
                return Err(ClassifyError::TableInconsistency(
                    "graph verification failed".into(),
                ));
            }
            Ok((dim, sigma_order_bar(&entry)))
        })();
        match result {
            Ok((dim, order)) => {
                report.check(
                    &format!("central row {name}: center dimension"),
                    dim == want_dim,
                    format!("computed {dim}, reference {want_dim}"),
                );
                report.check(
                    &format!("central row {name}: automorphism order"),
                    order == want_order,
                    format!("computed {order}, reference {want_order}"),
                );
            }
            Err(e) => {
                report.check(
                    &format!("central row {name}"),
                    false,
                    format!("pipeline error: {e}"),
                );
            }
        }
    }

    // The nine reference conics.
    let nine: [(&str, ConicSpec, CAClass, &str); 9] = [
        (
            "commutative/x^2",
            ConicSpec::new(Family::Commutative, [int(1), int(0), int(0)]),
            CAClass::SkewDualNumbers,
            "a line",
        ),
        (
            "commutative/x^2+y^2",
            ConicSpec::new(Family::Commutative, [int(1), int(1), int(0)]),
            CAClass::SkewSplit,
            "two lines",
        ),
        (
            "commutative/x^2+y^2+z^2",
            ConicSpec::new(Family::Commutative, [int(1), int(1), int(1)]),
            CAClass::Mat2,
            "a smooth conic",
        ),
        (
            "skew(0,0,0)/x^2",
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(0), int(0)],
            ),
            CAClass::DualSquare,
            "a line",
        ),
        (
            "skew(1,1,0)/x^2",
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(1), int(0), int(0)],
            ),
            CAClass::Jordan4,
            "1 point",
        ),
        (
            "skew(1,1,0)/3x^2+3y^2+4z^2",
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(3), int(3), int(4)],
            ),
            CAClass::Jordan3PlusK,
            "2 points",
        ),
        (
            "skew(0,0,0)/x^2+y^2",
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(1), int(0)],
            ),
            CAClass::DoubleDual,
            "3 points",
        ),
        (
            "skew(1,1,0)/x^2+y^2-4z^2",
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(1), int(1), int(-4)],
            ),
            CAClass::DualPlusK2,
            "4 points",
        ),
        (
            "skew(0,0,0)/x^2+y^2+z^2",
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(1), int(1)],
            ),
            CAClass::Split4,
            "6 points",
        ),
    ];
    let mut witnessed_two: Vec<(EaCount, usize, CAClass)> = Vec::new();
    let mut witnessed_comm: Vec<usize> = Vec::new();
    for (name, spec, want_class, want_row) in nine {
        match classify(&spec) {
            Ok(record) => {
                report.check(
                    &format!("reference conic {name}: class"),
                    record.ca_class == want_class,
                    format!("computed {}, reference {want_class}", record.ca_class),
                );
                report.check(
                    &format!("reference conic {name}: variety"),
                    record.table_row == want_row,
                    format!("computed `{}`, reference `{want_row}`", record.table_row),
                );
                match record.sigma_class {
                    SigmaOrderClass::Two => {
                        witnessed_two.push((record.ea_count, record.spec_count, record.ca_class))
                    }
                    _ => {
                        if let Ok(rank) = diagonal_rank(&record.f) {
                            witnessed_comm.push(rank);
                        }
                    }
                }
            }
            Err(e) => {
                report.check(
                    &format!("reference conic {name}"),
                    false,
                    format!("pipeline error: {e}"),
                );
            }
        }
    }
    // Row coverage for the involutive table.
    for (ea, sc, cls) in TWO_PATH_ROWS {
        let hit = witnessed_two
            .iter()
            .any(|(e, s, c)| *e == ea && *s == sc && *c == cls);
        report.check(
            &format!(
                "row coverage ({}, {sc}, {cls})",
                two_path_row_description(ea)
            ),
            hit,
            if hit {
                "witnessed".into()
            } else {
                "no witness".into()
            },
        );
    }
    // Row coverage for the commutative table.
    for (rank, desc, _, _) in COMMUTATIVE_ROWS {
        let hit = witnessed_comm.contains(&rank);
        report.check(
            &format!("commutative row coverage ({desc})"),
            hit,
            if hit {
                "witnessed".into()
            } else {
                "no witness".into()
            },
        );
    }
    // Whole-catalog graph verification and declared orders.
    for entry in catalog::catalog() {
        let graph = catalog::verify_graph(&entry).is_ok();
        report.check(
            &format!("catalog row {}: graph", entry.tag),
            graph,
            if graph {
                "verified".into()
            } else {
                "mismatch".into()
            },
        );
        let order = sigma_order_bar(&entry);
        report.check(
            &format!("catalog row {}: order", entry.tag),
            order == entry.declared_order,
            format!("computed {order}, declared {}", entry.declared_order),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> FieldElem {
        FieldElem::from_integer(n)
    }

    fn skew_spec(c: [i64; 3], f: [i64; 3]) -> ConicSpec {
        ConicSpec::new(Family::Skew(c.map(int)), f.map(int))
    }

    #[test]
    fn build_algebra_validation() {
        // valid
        assert!(build_algebra(&skew_spec([0, 0, 0], [1, 1, 1])).is_ok());
        // f = 0 rejected
        assert!(matches!(
            build_algebra(&skew_spec([0, 0, 0], [0, 0, 0])),
            Err(ClassifyError::Validation(_))
        ));
        // sklyanin lambda = 1 rejected
        let bad = ConicSpec::new(Family::Sklyanin(int(1)), [int(1), int(0), int(0)]);
        assert!(matches!(
            build_algebra(&bad),
            Err(ClassifyError::Validation(_))
        ));
        // non-central f in the triple-line family
        let tl = ConicSpec::new(Family::TripleLine, [int(0), int(1), int(0)]);
        assert!(matches!(
            build_algebra(&tl),
            Err(ClassifyError::FNotCentral)
        ));
        // skew family constraint
        assert!(matches!(
            build_algebra(&skew_spec([1, 2, 3], [1, 0, 0])),
            Err(ClassifyError::Validation(_))
        ));
    }

    #[test]
    fn sylvester_ranks() {
        assert_eq!(diagonal_rank(&[int(1), int(0), int(0)]).unwrap(), 1);
        assert_eq!(diagonal_rank(&[int(1), int(1), int(0)]).unwrap(), 2);
        assert_eq!(diagonal_rank(&[int(1), int(1), int(1)]).unwrap(), 3);
        assert!(diagonal_rank(&[int(0), int(0), int(0)]).is_err());
        // general symmetric input: rank-2 quadric xy (matrix with equal
        // off-diagonal entries)
        let z = FieldElem::zero;
        let m = [[z(), int(1), z()], [int(1), z(), z()], [z(), z(), z()]];
        assert_eq!(sylvester_rank(&m).unwrap(), 2);
        let asym = [[z(), int(1), z()], [int(-1), z(), z()], [z(), z(), z()]];
        assert!(sylvester_rank(&asym).is_err());
    }

    #[test]
    fn square_search_finds_reference_roots() {
        // (0,0,0), f = (1,1,1): four classes, all rational
        let zero3 = [int(0), int(0), int(0)];
        let (roots, complete) = square_roots_of_f(&zero3, &[int(1), int(1), int(1)]);
        assert!(complete);
        assert_eq!(roots.len(), 4);
        // (1,1,0), f = (3,3,4): two classes
        let c = [int(1), int(1), int(0)];
        let (roots, complete) = square_roots_of_f(&c, &[int(3), int(3), int(4)]);
        assert!(complete);
        assert_eq!(roots.len(), 2);
        // f proportional to z^2 only: the degenerate pattern
        let (roots, _) = square_roots_of_f(&zero3, &[int(0), int(0), int(1)]);
        assert_eq!(roots.len(), 1);
        assert!(proportional(&roots[0], &[int(0), int(0), int(1)]));
        // sklyanin lambda = 2, f = (1,1,1): four rational classes
        let l = [int(2), int(2), int(2)];
        let (roots, complete) = square_roots_of_f(&l, &[int(1), int(1), int(1)]);
        assert!(complete);
        assert_eq!(roots.len(), 4);
    }

    #[test]
    fn classify_reference_examples() {
        let r = classify(&skew_spec([1, 1, 0], [1, 1, -4])).unwrap();
        assert_eq!(r.ca_class, CAClass::DualPlusK2);
        assert_eq!(r.spec_count, 3);
        assert_eq!(r.ea_count, EaCount::Finite(4));
        assert!(r.consistent);

        let r = classify(&skew_spec([1, 1, 0], [3, 3, 4])).unwrap();
        assert_eq!(r.ca_class, CAClass::Jordan3PlusK);
        assert_eq!(r.spec_count, 2);
        assert_eq!(r.ea_count, EaCount::Finite(2));

        let r = classify(&skew_spec([0, 0, 0], [1, 0, 0])).unwrap();
        assert_eq!(r.ca_class, CAClass::DualSquare);
        assert_eq!(r.spec_count, 1);
        assert_eq!(r.ea_count, EaCount::Infinite);
        assert_eq!(r.table_row, "a line");

        let r = classify(&ConicSpec::new(
            Family::Commutative,
            [int(1), int(1), int(0)],
        ))
        .unwrap();
        assert_eq!(r.ca_class, CAClass::SkewSplit);
        assert_eq!(r.table_row, "two lines");
        assert_eq!(r.spec_count, 2);
    }

    #[test]
    fn classify_is_scale_invariant() {
        let base = classify(&skew_spec([1, 1, 0], [1, 1, -4])).unwrap();
        for mu in [2, -3, 7] {
            let scaled = classify(&skew_spec([1, 1, 0], [mu, mu, -4 * mu])).unwrap();
            assert_eq!(scaled.ca_class, base.ca_class);
            assert_eq!(scaled.spec_count, base.spec_count);
            assert_eq!(scaled.ea_count, base.ea_count);
            assert_eq!(scaled.table_row, base.table_row);
        }
    }

    #[test]
    fn classify_is_cyclically_equivariant() {
        // rotating (alpha,beta,gamma) and (a,b,c) together fixes the record
        let base = classify(&skew_spec([1, 1, 0], [3, 3, 4])).unwrap();
        let rot1 = classify(&skew_spec([1, 0, 1], [3, 4, 3])).unwrap();
        let rot2 = classify(&skew_spec([0, 1, 1], [4, 3, 3])).unwrap();
        for r in [rot1, rot2] {
            assert_eq!(r.ca_class, base.ca_class);
            assert_eq!(r.spec_count, base.spec_count);
            assert_eq!(r.ea_count, base.ea_count);
            assert_eq!(r.table_row, base.table_row);
        }
    }

    #[test]
    fn dual_presentations() {
        let r = dual_presentation(&ConicSpec::new(
            Family::Commutative,
            [int(1), int(0), int(0)],
        ))
        .unwrap();
        assert_eq!(r, "k_-1[x,y,z]/(y^2, z^2)");
        let r = dual_presentation(&ConicSpec::new(
            Family::Commutative,
            [int(1), int(1), int(1)],
        ))
        .unwrap();
        assert_eq!(r, "k_-1[x,y,z]/(x^2 - y^2, x^2 - z^2)");
        // skew with a = 0: rotation to a nonzero coefficient
        let r = dual_presentation(&skew_spec([1, 1, 0], [0, 0, 1])).unwrap();
        assert!(r.starts_with("k[x,y,z]/("), "{r}");
        // the generic skew presentation shows both quadrics:
        // a(y^2 - beta xz) - b(x^2 - alpha yz) and a(z^2 - gamma xy) - c(x^2 - alpha yz)
        let r = dual_presentation(&skew_spec([1, 1, 0], [3, 3, 4])).unwrap();
        assert_eq!(
            r,
            "k[x,y,z]/(-3*x^2 - 3*x*z + 3*y^2 + 3*y*z, -4*x^2 + 4*y*z + 3*z^2)"
        );
    }

    #[test]
    fn sklyanin_sweep_lands_in_reference_rows() {
        // lambda = 2 and a deterministic pseudorandom batch of f
        let mut state = 0xfeedface1234u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ((state >> 45) as i64 % 9) - 4
        };
        let mut tried = 0;
        while tried < 8 {
            let f = [int(next()), int(next()), int(next())];
            if f.iter().all(FieldElem::is_zero) {
                continue;
            }
            let spec = ConicSpec::new(Family::Sklyanin(int(2)), f.clone());
            let r = classify(&spec).unwrap();
            assert!(
                matches!(r.spec_count, 2 | 3 | 4),
                "spectrum count {} for f = {f:?}",
                r.spec_count
            );
            tried += 1;
        }
    }

    #[test]
    fn verify_tables_is_clean_and_corruption_is_detected() {
        let report = verify_tables(false);
        assert!(
            report.passed(),
            "failures: {:?}",
            report
                .assertions
                .iter()
                .filter(|a| !a.pass)
                .map(|a| &a.name)
                .collect::<Vec<_>>()
        );
        assert!(report.assertions.len() >= 40);
        let corrupted = verify_tables(true);
        assert!(!corrupted.passed());
    }
}
