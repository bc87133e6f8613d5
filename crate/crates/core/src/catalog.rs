//! The built-in catalog of point varieties and automorphisms for the eleven
//! families of three-generator quadratic algebras with polynomial Hilbert
//! series, together with symbolic graph verification, automorphism-order
//! computation, and the point-variety counting used by the classifier.
//!
//! Each entry carries defining relations, the components of the reduced
//! point variety, one polynomial chart per component for the automorphism
//! (with explicit exceptional points where the cleared formulas vanish), and
//! closed-form iterates for cross-checking compositions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::FieldElem;
use crate::freealg::{eval_bilinear, multilinearize, FreeElem};
use crate::geometry::{
    bins_projectively_equal, dedup_points, intersect_line_component, line_param, linear_coeffs,
    polys_projectively_equal_mod, proportional, restrict_form, BinForm, Count, CurveComponent,
    GeomError, LineIntersection, PointP2, SigmaChart, Support,
};
use crate::tripoly::TriPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RowTag {
    P,
    S1,
    S3,
    SPrime,
    T,
    TPrime,
    NC,
    CC,
    TL,
    WL,
    EC,
}

impl RowTag {
    pub fn name(&self) -> &'static str {
        match self {
            RowTag::P => "P",
            RowTag::S1 => "S1",
            RowTag::S3 => "S3",
            RowTag::SPrime => "S'",
            RowTag::T => "T",
            RowTag::TPrime => "T'",
            RowTag::NC => "NC",
            RowTag::CC => "CC",
            RowTag::TL => "TL",
            RowTag::WL => "WL",
            RowTag::EC => "EC",
        }
    }

    pub fn all() -> [RowTag; 11] {
        [
            RowTag::P,
            RowTag::S1,
            RowTag::S3,
            RowTag::SPrime,
            RowTag::T,
            RowTag::TPrime,
            RowTag::NC,
            RowTag::CC,
            RowTag::TL,
            RowTag::WL,
            RowTag::EC,
        ]
    }

    /// Does this row take a parameter, and which constraint does it carry?
    pub fn constraint(&self) -> ParamConstraint {
        match self {
            RowTag::P | RowTag::T | RowTag::TL => ParamConstraint::CubeRootOfUnity,
            RowTag::S1 | RowTag::S3 | RowTag::SPrime | RowTag::NC => {
                ParamConstraint::CubeNotZeroOne
            }
            RowTag::EC => ParamConstraint::Elliptic,
            RowTag::TPrime | RowTag::CC | RowTag::WL => ParamConstraint::None,
        }
    }
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamConstraint {
    /// `alpha^3 = 1`
    CubeRootOfUnity,
    /// `alpha^3` is neither 0 nor 1
    CubeNotZeroOne,
    /// `lambda^3` is none of 0, 1, -8
    Elliptic,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaOrderClass {
    One,
    Two,
    Other,
}

impl fmt::Display for SigmaOrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaOrderClass::One => write!(f, "1"),
            SigmaOrderClass::Two => write!(f, "2"),
            SigmaOrderClass::Other => write!(f, "other"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    WrongParamCount { expected: usize, found: usize },
    Constraint(String),
    Geometry(GeomError),
    UnsupportedIterate,
    NotInvolutive,
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::WrongParamCount { expected, found } => {
                write!(f, "expected {expected} parameter(s), found {found}")
            }
            CatalogError::Constraint(m) => write!(f, "parameter constraint violated: {m}"),
            CatalogError::Geometry(e) => write!(f, "{e}"),
            CatalogError::UnsupportedIterate => write!(f, "iterate not tabulated"),
            CatalogError::NotInvolutive => {
                write!(f, "automorphism is not an involution on this entry")
            }
        }
    }
}

impl core::error::Error for CatalogError {}

impl From<GeomError> for CatalogError {
    fn from(e: GeomError) -> Self {
        CatalogError::Geometry(e)
    }
}

/// Extra data for the elliptic entry: the second automorphism chart and the
/// two three-point fibers where one chart degenerates.
#[derive(Clone, Debug)]
pub struct EcData {
    pub chart2: SigmaChart,
    pub e1: Vec<PointP2>,
    pub e2: Vec<PointP2>,
}

/// One instantiated catalog row.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub tag: RowTag,
    pub params: Vec<FieldElem>,
    pub relations: Vec<FreeElem>,
    pub components: Vec<CurveComponent>,
    /// One chart per component.
    pub charts: Vec<SigmaChart>,
    /// Points lying on more than one component.
    pub shared_points: Vec<PointP2>,
    pub declared_order: SigmaOrderClass,
    pub ec: Option<EcData>,
}

fn fx() -> TriPoly {
    TriPoly::var(0)
}
fn fy() -> TriPoly {
    TriPoly::var(1)
}
fn fz() -> TriPoly {
    TriPoly::var(2)
}
fn con(c: &FieldElem) -> TriPoly {
    TriPoly::constant(c.clone())
}
fn int(n: i64) -> FieldElem {
    FieldElem::from_integer(n)
}

fn rel(terms: &[(&[u8; 2], FieldElem)]) -> FreeElem {
    let mut e = FreeElem::zero(3, 2);
    for (w, c) in terms {
        e.add_term(w.to_vec(), c.clone());
    }
    e
}

/// Relations `x_{k+1} x_{k+2} - alpha x_{k+2} x_{k+1} + extra` for the cyclic
/// rows, with the extra square terms supplied per relation.
fn cyclic_relations(alpha: &FieldElem, squares: [FieldElem; 3]) -> Vec<FreeElem> {
    (0..3u8)
        .map(|k| {
            let a = (k + 1) % 3;
            let b = (k + 2) % 3;
            rel(&[
                (&[a, b], FieldElem::one()),
                (&[b, a], -alpha),
                (&[k, k], squares[k as usize].clone()),
            ])
        })
        .collect()
}

fn line(form: TriPoly) -> CurveComponent {
    CurveComponent {
        support: Support::Line(form.clone()),
        form,
    }
}

fn pt(coords: [i64; 3]) -> PointP2 {
    PointP2::from_integers(coords).unwrap()
}

fn identity_chart() -> SigmaChart {
    SigmaChart::polynomial([fx(), fy(), fz()])
}

fn check_constraint(tag: RowTag, params: &[FieldElem]) -> Result<(), CatalogError> {
    let expected = match tag.constraint() {
        ParamConstraint::None => 0,
        _ => 1,
    };
    if params.len() != expected {
        return Err(CatalogError::WrongParamCount {
            expected,
            found: params.len(),
        });
    }
    match tag.constraint() {
        ParamConstraint::None => Ok(()),
        ParamConstraint::CubeRootOfUnity => {
            let a = &params[0];
            if a.pow(3) != FieldElem::one() {
                return Err(CatalogError::Constraint(format!(
                    "{} requires the parameter to cube to 1",
                    tag
                )));
            }
            Ok(())
        }
        ParamConstraint::CubeNotZeroOne => {
            let c = params[0].pow(3);
            if c.is_zero() || c.is_one() {
                return Err(CatalogError::Constraint(format!(
                    "{} requires the parameter cube to avoid 0 and 1",
                    tag
                )));
            }
            Ok(())
        }
        ParamConstraint::Elliptic => {
            let c = params[0].pow(3);
            if c.is_zero() || c.is_one() || c == int(-8) {
                return Err(CatalogError::Constraint(
                    "elliptic entry requires the parameter cube to avoid 0, 1 and -8".into(),
                ));
            }
            Ok(())
        }
    }
}

/// Instantiates one catalog row with bound parameter values (which may be
/// transcendental field parameters where the row allows it).
pub fn instantiate(tag: RowTag, params: &[FieldElem]) -> Result<CatalogEntry, CatalogError> {
    check_constraint(tag, params)?;
    let one = FieldElem::one();
    let zero = FieldElem::zero();
    let entry = match tag {
        RowTag::P => {
            let a = params[0].clone();
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations: cyclic_relations(&a, [zero.clone(), zero.clone(), zero]),
                components: vec![CurveComponent {
                    form: TriPoly::zero(),
                    support: Support::Plane,
                }],
                charts: vec![SigmaChart::polynomial([
                    con(&a).mul(&fx()),
                    con(&a.pow(2)).mul(&fy()),
                    fz(),
                ])],
                shared_points: vec![],
                declared_order: if a.is_one() {
                    SigmaOrderClass::One
                } else {
                    SigmaOrderClass::Other
                },
                ec: None,
            }
        }
        RowTag::S1 => {
            let a = params[0].clone();
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations: cyclic_relations(&a, [zero.clone(), zero.clone(), zero]),
                components: vec![line(fx()), line(fy()), line(fz())],
                charts: vec![
                    SigmaChart::polynomial([fx(), fy(), con(&a).mul(&fz())]),
                    SigmaChart::polynomial([con(&a).mul(&fx()), fy(), fz()]),
                    SigmaChart::polynomial([fx(), con(&a).mul(&fy()), fz()]),
                ],
                shared_points: vec![pt([0, 0, 1]), pt([0, 1, 0]), pt([1, 0, 0])],
                declared_order: if a == int(-1) {
                    SigmaOrderClass::Two
                } else {
                    SigmaOrderClass::Other
                },
                ec: None,
            }
        }
        RowTag::S3 => {
            let a = params[0].clone();
            let relations = vec![
                rel(&[(&[2, 1], one.clone()), (&[0, 0], -&a)]),
                rel(&[(&[0, 2], one.clone()), (&[1, 1], -&a)]),
                rel(&[(&[1, 0], one.clone()), (&[2, 2], -&a)]),
            ];
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations,
                components: vec![line(fx()), line(fy()), line(fz())],
                charts: vec![
                    SigmaChart::polynomial([con(&a).mul(&fz()), fx(), fy()]),
                    SigmaChart::polynomial([fz(), con(&a).mul(&fx()), fy()]),
                    SigmaChart::polynomial([fz(), fx(), con(&a).mul(&fy())]),
                ],
                shared_points: vec![pt([0, 0, 1]), pt([0, 1, 0]), pt([1, 0, 0])],
                declared_order: SigmaOrderClass::Other,
                ec: None,
            }
        }
        RowTag::SPrime => {
            let a = params[0].clone();
            // conic component x^2 = lam yz with lam = (a^3 - 1)/a
            let lam = &(&a.pow(3) - &one) / &a;
            let conic_form = fx().pow(2).sub(&con(&lam).mul(&fy()).mul(&fz()));
            let conic_param = [
                BinForm::from_coeffs(vec![zero.clone(), lam.clone(), zero.clone()]),
                BinForm::from_coeffs(vec![lam.clone(), zero.clone(), zero.clone()]),
                BinForm::from_coeffs(vec![zero.clone(), zero.clone(), one.clone()]),
            ];
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations: cyclic_relations(&a, [one.clone(), zero.clone(), zero]),
                components: vec![
                    line(fx()),
                    CurveComponent {
                        form: conic_form,
                        support: Support::Conic(conic_param),
                    },
                ],
                charts: vec![
                    SigmaChart::polynomial([fx(), fy(), con(&a).mul(&fz())]),
                    SigmaChart::polynomial([con(&a).mul(&fx()), con(&a.pow(2)).mul(&fy()), fz()]),
                ],
                shared_points: vec![pt([0, 1, 0]), pt([0, 0, 1])],
                declared_order: if a == int(-1) {
                    SigmaOrderClass::Two
                } else {
                    SigmaOrderClass::Other
                },
                ec: None,
            }
        }
        RowTag::T => {
            let a = params[0].clone();
            let eps = FieldElem::cube_root_of_unity();
            let lines: Vec<CurveComponent> = (0..3)
                .map(|j| line(con(&eps.pow(j)).mul(&fx()).add(&fy())))
                .collect();
            let chart = SigmaChart::polynomial([
                fx().mul(&fy()),
                con(&a).mul(&fy().pow(2)),
                con(&a.pow(2)).mul(&fy()).mul(&fz()).sub(&fx().pow(2)),
            ])
            .with_exceptional(vec![(pt([0, 0, 1]), pt([0, 0, 1]))]);
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations: cyclic_relations(&a, [one.clone(), one.clone(), zero]),
                components: lines,
                charts: vec![chart.clone(), chart.clone(), chart],
                shared_points: vec![pt([0, 0, 1])],
                declared_order: SigmaOrderClass::Other,
                ec: None,
            }
        }
        RowTag::TPrime => {
            let relations = vec![
                rel(&[
                    (&[1, 2], one.clone()),
                    (&[2, 1], -&one),
                    (&[0, 1], one.clone()),
                    (&[1, 0], one.clone()),
                ]),
                rel(&[
                    (&[2, 0], one.clone()),
                    (&[0, 2], -&one),
                    (&[0, 0], one.clone()),
                    (&[1, 2], -&one),
                    (&[2, 1], -&one),
                    (&[1, 1], one.clone()),
                ]),
                rel(&[(&[0, 1], one.clone()), (&[1, 0], -&one), (&[1, 1], -&one)]),
            ];
            let conic_form = fx().pow(2).sub(&fy().mul(&fz()));
            let conic_param = [
                BinForm::from_coeffs(vec![zero.clone(), one.clone(), zero.clone()]),
                BinForm::from_coeffs(vec![one.clone(), zero.clone(), zero.clone()]),
                BinForm::from_coeffs(vec![zero.clone(), zero.clone(), one.clone()]),
            ];
            CatalogEntry {
                tag,
                params: vec![],
                relations,
                components: vec![
                    line(fy()),
                    CurveComponent {
                        form: conic_form,
                        support: Support::Conic(conic_param),
                    },
                ],
                charts: vec![
                    SigmaChart::polynomial([fx(), fy(), fx().add(&fz())]),
                    SigmaChart::polynomial([
                        fx().sub(&fy()),
                        fy(),
                        fz().add(&fy()).sub(&con(&int(2)).mul(&fx())),
                    ]),
                ],
                shared_points: vec![pt([0, 0, 1])],
                declared_order: SigmaOrderClass::Other,
                ec: None,
            }
        }
        RowTag::NC => {
            let a = params[0].clone();
            let lam = &(&a.pow(3) - &one) / &a;
            let cubic = fx()
                .pow(3)
                .add(&fy().pow(3))
                .sub(&con(&lam).mul(&fx()).mul(&fy()).mul(&fz()));
            let chart = SigmaChart::polynomial([
                fx().mul(&fy()),
                con(&a).mul(&fy().pow(2)),
                con(&a.pow(2)).mul(&fy()).mul(&fz()).sub(&fx().pow(2)),
            ])
            .with_exceptional(vec![(pt([0, 0, 1]), pt([0, 0, 1]))]);
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations: cyclic_relations(&a, [one.clone(), one.clone(), zero]),
                components: vec![CurveComponent {
                    form: cubic,
                    support: Support::Cubic,
                }],
                charts: vec![chart],
                shared_points: vec![],
                declared_order: if a == int(-1) {
                    SigmaOrderClass::Two
                } else {
                    SigmaOrderClass::Other
                },
                ec: None,
            }
        }
        RowTag::CC => {
            let relations = vec![
                rel(&[
                    (&[1, 2], one.clone()),
                    (&[2, 1], -&one),
                    (&[1, 1], one.clone()),
                    (&[0, 0], int(3)),
                ]),
                rel(&[
                    (&[2, 0], one.clone()),
                    (&[0, 2], -&one),
                    (&[1, 0], one.clone()),
                    (&[0, 1], one.clone()),
                    (&[1, 2], -&one),
                    (&[2, 1], -&one),
                ]),
                rel(&[(&[0, 1], one.clone()), (&[1, 0], -&one), (&[1, 1], -&one)]),
            ];
            let cubic = fx().pow(3).sub(&fy().pow(2).mul(&fz()));
            let chart = SigmaChart::polynomial([
                fx().sub(&fy()).mul(&fy()),
                fy().pow(2),
                fy().mul(&fz())
                    .add(&con(&int(3)).mul(&fx()).mul(&fy()))
                    .sub(&con(&int(3)).mul(&fx().pow(2)))
                    .sub(&fy().pow(2)),
            ])
            .with_exceptional(vec![(pt([0, 0, 1]), pt([0, 0, 1]))]);
            CatalogEntry {
                tag,
                params: vec![],
                relations,
                components: vec![CurveComponent {
                    form: cubic,
                    support: Support::Cubic,
                }],
                charts: vec![chart],
                shared_points: vec![],
                declared_order: SigmaOrderClass::Other,
                ec: None,
            }
        }
        RowTag::TL => {
            let a = params[0].clone();
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations: cyclic_relations(&a, [one.clone(), zero.clone(), zero]),
                components: vec![CurveComponent {
                    form: fx().pow(3),
                    support: Support::Line(fx()),
                }],
                charts: vec![SigmaChart::polynomial([fx(), fy(), con(&a).mul(&fz())])],
                shared_points: vec![],
                declared_order: if a.is_one() {
                    SigmaOrderClass::One
                } else {
                    SigmaOrderClass::Other
                },
                ec: None,
            }
        }
        RowTag::WL => {
            let relations = vec![
                rel(&[
                    (&[1, 2], one.clone()),
                    (&[2, 1], -&one),
                    (&[1, 1], one.clone()),
                ]),
                rel(&[
                    (&[2, 0], one.clone()),
                    (&[0, 2], -&one),
                    (&[1, 0], one.clone()),
                    (&[0, 1], one.clone()),
                ]),
                rel(&[(&[0, 1], one.clone()), (&[1, 0], -&one)]),
            ];
            CatalogEntry {
                tag,
                params: vec![],
                relations,
                components: vec![
                    CurveComponent {
                        form: fx().pow(2),
                        support: Support::Line(fx()),
                    },
                    line(fy()),
                ],
                charts: vec![
                    SigmaChart::polynomial([fx(), fy(), fz().sub(&fy())]),
                    identity_chart(),
                ],
                shared_points: vec![pt([0, 0, 1])],
                declared_order: SigmaOrderClass::Other,
                ec: None,
            }
        }
        RowTag::EC => {
            let lam = params[0].clone();
            let f = con(&lam)
                .mul(&fx().pow(3).add(&fy().pow(3)).add(&fz().pow(3)))
                .sub(
                    &con(&(&lam.pow(3) + &int(2)))
                        .mul(&fx())
                        .mul(&fy())
                        .mul(&fz()),
                );
            let chart1_formulas = [
                con(&lam).mul(&fy().pow(2)).sub(&fx().mul(&fz())),
                con(&lam).mul(&fx().pow(2)).sub(&fy().mul(&fz())),
                fz().pow(2).sub(&con(&lam.pow(2)).mul(&fx()).mul(&fy())),
            ];
            let chart2_formulas = [
                con(&lam).mul(&fz().pow(2)).sub(&fx().mul(&fy())),
                fy().pow(2).sub(&con(&lam.pow(2)).mul(&fx()).mul(&fz())),
                con(&lam).mul(&fx().pow(2)).sub(&fy().mul(&fz())),
            ];
            let eps = FieldElem::cube_root_of_unity();
            let e1: Vec<PointP2> = (0..3)
                .map(|j| PointP2::new([one.clone(), eps.pow(j), &lam * &eps.pow(2 * j)]).unwrap())
                .collect();
            let e2: Vec<PointP2> = (0..3)
                .map(|j| PointP2::new([one.clone(), &lam * &eps.pow(2 * j), eps.pow(j)]).unwrap())
                .collect();
            // chart images of the degenerate fibers: sigma(e1_j) = (1, -eps^j, 0)
            // through the second chart and sigma(e2_j) = (1, 0, -eps^j) through
            // the first.
            let e1_images: Vec<(PointP2, PointP2)> = (0..3)
                .map(|j| {
                    (
                        e1[j as usize].clone(),
                        PointP2::new([one.clone(), -&eps.pow(j), FieldElem::zero()]).unwrap(),
                    )
                })
                .collect();
            let e2_images: Vec<(PointP2, PointP2)> = (0..3)
                .map(|j| {
                    (
                        e2[j as usize].clone(),
                        PointP2::new([one.clone(), FieldElem::zero(), -&eps.pow(j)]).unwrap(),
                    )
                })
                .collect();
            let chart1 = SigmaChart::polynomial(chart1_formulas).with_exceptional(e1_images);
            let chart2 = SigmaChart::polynomial(chart2_formulas).with_exceptional(e2_images);
            CatalogEntry {
                tag,
                params: params.to_vec(),
                relations: cyclic_relations(&int(-1), [lam.clone(), lam.clone(), lam.clone()]),
                components: vec![CurveComponent {
                    form: f,
                    support: Support::Cubic,
                }],
                charts: vec![chart1],
                shared_points: vec![],
                declared_order: SigmaOrderClass::Two,
                ec: Some(EcData { chart2, e1, e2 }),
            }
        }
    };
    Ok(entry)
}

/// The full catalog at canonical parameter bindings: symbolic parameters
/// where the constraint leaves a continuous family (the transcendental
/// parameter with index 0), the primitive cube root of unity where the
/// parameter is a root of unity.
pub fn catalog() -> Vec<CatalogEntry> {
    let eps = FieldElem::cube_root_of_unity();
    let sym = FieldElem::param(0);
    RowTag::all()
        .into_iter()
        .map(|tag| {
            let params: Vec<FieldElem> = match tag.constraint() {
                ParamConstraint::None => vec![],
                ParamConstraint::CubeRootOfUnity => vec![eps.clone()],
                ParamConstraint::CubeNotZeroOne | ParamConstraint::Elliptic => vec![sym.clone()],
            };
            instantiate(tag, &params).expect("canonical binding satisfies the constraint")
        })
        .collect()
}

impl CatalogEntry {
    /// Tabulated closed form for the `i`-th iterate of the automorphism,
    /// one formula triple per component, for `i = 2, 3`.
    pub fn sigma_iterate(&self, i: usize) -> Result<Vec<[TriPoly; 3]>, CatalogError> {
        if i != 2 && i != 3 {
            return Err(CatalogError::UnsupportedIterate);
        }
        let ii = int(i as i64);
        let one = FieldElem::one();
        let out: Vec<[TriPoly; 3]> = match self.tag {
            RowTag::P => {
                let a = self.params[0].pow(i as i32);
                vec![[con(&a).mul(&fx()), con(&a.pow(2)).mul(&fy()), fz()]]
            }
            RowTag::S1 => {
                let a = self.params[0].pow(i as i32);
                vec![
                    [fx(), fy(), con(&a).mul(&fz())],
                    [con(&a).mul(&fx()), fy(), fz()],
                    [fx(), con(&a).mul(&fy()), fz()],
                ]
            }
            RowTag::S3 => {
                let a = self.params[0].pow(i as i32);
                match i % 3 {
                    1 => vec![
                        [con(&a).mul(&fz()), fx(), fy()],
                        [fz(), con(&a).mul(&fx()), fy()],
                        [fz(), fx(), con(&a).mul(&fy())],
                    ],
                    2 => vec![
                        [fy(), con(&a).mul(&fz()), fx()],
                        [fy(), fz(), con(&a).mul(&fx())],
                        [con(&a).mul(&fy()), fz(), fx()],
                    ],
                    _ => vec![
                        [fx(), fy(), con(&a).mul(&fz())],
                        [con(&a).mul(&fx()), fy(), fz()],
                        [fx(), con(&a).mul(&fy()), fz()],
                    ],
                }
            }
            RowTag::SPrime => {
                let a = self.params[0].pow(i as i32);
                vec![
                    [fx(), fy(), con(&a).mul(&fz())],
                    [con(&a).mul(&fx()), con(&a.pow(2)).mul(&fy()), fz()],
                ]
            }
            RowTag::T => {
                let a = &self.params[0];
                // (x y, a^i y^2, -i a^(2i-2) x^2 + a^(2i) y z)
                let a2i = a.pow(2 * i as i32);
                let coeff = &ii * &a.pow(2 * i as i32 - 2);
                let f = [
                    fx().mul(&fy()),
                    con(&a.pow(i as i32)).mul(&fy().pow(2)),
                    con(&a2i)
                        .mul(&fy())
                        .mul(&fz())
                        .sub(&con(&coeff).mul(&fx().pow(2))),
                ];
                vec![f.clone(), f.clone(), f]
            }
            RowTag::TPrime => {
                vec![
                    [fx(), fy(), con(&ii).mul(&fx()).add(&fz())],
                    [
                        fx().sub(&con(&ii).mul(&fy())),
                        fy(),
                        fz().add(&con(&(&ii * &ii)).mul(&fy()))
                            .sub(&con(&(&int(2) * &ii)).mul(&fx())),
                    ],
                ]
            }
            RowTag::NC => {
                let a = &self.params[0];
                // coefficient (a^(3i) - 1)/(a^(i-1) (a^3 - 1))
                let num = &a.pow(3 * i as i32) - &one;
                let den = &a.pow(i as i32 - 1) * &(&a.pow(3) - &one);
                let coeff = &num / &den;
                vec![[
                    fx().mul(&fy()),
                    con(&a.pow(i as i32)).mul(&fy().pow(2)),
                    con(&a.pow(2 * i as i32))
                        .mul(&fy())
                        .mul(&fz())
                        .sub(&con(&coeff).mul(&fx().pow(2))),
                ]]
            }
            RowTag::CC => {
                // ((x - i y) y, y^2, -3i x^2 + 3i^2 x y - i^3 y^2 + y z)
                let i2 = &ii * &ii;
                let i3 = &i2 * &ii;
                vec![[
                    fx().sub(&con(&ii).mul(&fy())).mul(&fy()),
                    fy().pow(2),
                    fy().mul(&fz())
                        .add(&con(&(&int(3) * &i2)).mul(&fx()).mul(&fy()))
                        .sub(&con(&(&int(3) * &ii)).mul(&fx().pow(2)))
                        .sub(&con(&i3).mul(&fy().pow(2))),
                ]]
            }
            RowTag::TL => {
                let a = self.params[0].pow(i as i32);
                vec![[fx(), fy(), con(&a).mul(&fz())]]
            }
            RowTag::WL => {
                vec![
                    [fx(), fy(), fz().sub(&con(&ii).mul(&fy()))],
                    [fx(), fy(), fz()],
                ]
            }
            RowTag::EC => {
                if i == 2 {
                    vec![[fx(), fy(), fz()]]
                } else {
                    vec![core::array::from_fn(|k| self.charts[0].formulas[k].clone())]
                }
            }
        };
        Ok(out)
    }

    /// The component on which the automorphism image of component `c` lands.
    pub fn image_component(&self, c: usize) -> Result<usize, CatalogError> {
        match &self.components[c].support {
            Support::Plane | Support::Cubic => Ok(c),
            _ => {
                let param = self.components[c].param()?.expect("parametrized support");
                let image = self.charts[c].compose_bins(&param);
                for (j, comp) in self.components.iter().enumerate() {
                    if restrict_form(&comp.form, &image).is_zero() {
                        return Ok(j);
                    }
                }
                Err(CatalogError::Geometry(GeomError::ChartDegeneracy))
            }
        }
    }

    /// All components containing the point.
    pub fn components_through(&self, p: &PointP2) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| match &c.support {
                Support::Plane => true,
                _ => c.contains(p),
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Is the point on the reduced point variety?
    pub fn on_variety(&self, p: &PointP2) -> bool {
        !self.components_through(p).is_empty()
    }

    /// Applies the automorphism to an explicit point of the variety.
    pub fn sigma_point(&self, p: &PointP2) -> Result<PointP2, CatalogError> {
        let through = self.components_through(p);
        let c = *through.first().ok_or(GeomError::NotOnCurve)?;
        let image = self.charts[c].apply(p)?;
        // all containing components must agree
        for &other in through.iter().skip(1) {
            if let Ok(q) = self.charts[other].apply(p) {
                if q != image {
                    return Err(CatalogError::Geometry(GeomError::ChartDegeneracy));
                }
            }
        }
        Ok(image)
    }
}

/// Symbolic graph verification: along every component, every relation's
/// multilinearization vanishes identically on `(p, sigma(p))`, the chart
/// image stays on the variety, and the exceptional points satisfy the same
/// conditions. On failure returns the offending `(component, relation)`
/// pair.
pub fn verify_graph(entry: &CatalogEntry) -> Result<(), (usize, usize)> {
    let mats: Vec<Vec<Vec<FieldElem>>> = entry
        .relations
        .iter()
        .map(|r| multilinearize(r).expect("degree-2 relation"))
        .collect();
    for (c, comp) in entry.components.iter().enumerate() {
        let chart = &entry.charts[c];
        match &comp.support {
            Support::Plane => {
                let coords = [fx(), fy(), fz()];
                for (ri, m) in mats.iter().enumerate() {
                    let mut acc = TriPoly::zero();
                    for (i, row) in m.iter().enumerate() {
                        for (j, a) in row.iter().enumerate() {
                            if !a.is_zero() {
                                acc = acc.add(&coords[i].mul(&chart.formulas[j]).scale(a));
                            }
                        }
                    }
                    if !acc.is_zero() {
                        return Err((c, ri));
                    }
                }
            }
            Support::Line(_) | Support::Conic(_) => {
                let param = comp.param().ok().flatten().expect("parametrized support");
                let image = chart.compose_bins(&param);
                for (ri, m) in mats.iter().enumerate() {
                    let mut acc = BinForm::zero(param[0].degree() + image[0].degree());
                    for (i, row) in m.iter().enumerate() {
                        for (j, a) in row.iter().enumerate() {
                            if !a.is_zero() {
                                acc = acc.add(&param[i].mul(&image[j]).scale(a));
                            }
                        }
                    }
                    if !acc.is_zero() {
                        return Err((c, ri));
                    }
                }
                // image must land on the variety: the product of all
                // component forms restricted along the image vanishes
                let mut product = BinForm::constant(FieldElem::one());
                for other in &entry.components {
                    if matches!(other.support, Support::Plane) {
                        product = BinForm::zero(0);
                        break;
                    }
                    product = product.mul(&restrict_form(&other.form, &image));
                }
                if !product.is_zero() {
                    return Err((c, usize::MAX));
                }
            }
            Support::Cubic => {
                let modulus = &comp.form;
                let coords = [fx(), fy(), fz()];
                for (ri, m) in mats.iter().enumerate() {
                    let mut acc = TriPoly::zero();
                    for (i, row) in m.iter().enumerate() {
                        for (j, a) in row.iter().enumerate() {
                            if !a.is_zero() {
                                acc = acc.add(&coords[i].mul(&chart.formulas[j]).scale(a));
                            }
                        }
                    }
                    if !acc.divisible_by(modulus) {
                        return Err((c, ri));
                    }
                }
                // image on the cubic
                let img_f = modulus.substitute(&chart.formulas);
                if !img_f.divisible_by(modulus) {
                    return Err((c, usize::MAX));
                }
            }
        }
        // exceptional points lie on the graph
        for (src, dst) in &chart.exceptional {
            if !entry.on_variety(dst) {
                return Err((c, usize::MAX));
            }
            for (ri, m) in mats.iter().enumerate() {
                if !eval_bilinear(m, src.coords(), dst.coords()).is_zero() {
                    return Err((c, ri));
                }
            }
        }
    }
    Ok(())
}

/// Verifies that composing the chart `i` times agrees projectively with the
/// tabulated iterate formula on every component. On failure returns the
/// offending component.
pub fn verify_iterates(entry: &CatalogEntry, i: usize) -> Result<(), usize> {
    let iterates = entry.sigma_iterate(i).map_err(|_| usize::MAX)?;
    for (c, comp) in entry.components.iter().enumerate() {
        match &comp.support {
            Support::Plane => {
                let mut composed = [fx(), fy(), fz()];
                let mut at = c;
                for _ in 0..i {
                    composed = entry.charts[at].compose_polys(&composed);
                    at = entry.image_component(at).map_err(|_| c)?;
                }
                // exact projective equality of polynomial maps
                let a = &composed;
                let b = &iterates[c];
                for p in 0..3 {
                    for q in (p + 1)..3 {
                        let minor = a[p].mul(&b[q]).sub(&a[q].mul(&b[p]));
                        if !minor.is_zero() {
                            return Err(c);
                        }
                    }
                }
            }
            Support::Line(_) | Support::Conic(_) => {
                let param = comp.param().ok().flatten().expect("parametrized support");
                let mut composed = param.clone();
                let mut at = c;
                for _ in 0..i {
                    composed = entry.charts[at].compose_bins(&composed);
                    at = entry.image_component(at).map_err(|_| c)?;
                }
                let expected: [BinForm; 3] =
                    core::array::from_fn(|k| restrict_form(&iterates[c][k], &param));
                if !bins_projectively_equal(&composed, &expected) {
                    return Err(c);
                }
            }
            Support::Cubic => {
                let modulus = &comp.form;
                let mut composed = [fx(), fy(), fz()];
                for _ in 0..i {
                    composed = entry.charts[c].compose_polys(&composed);
                    composed = core::array::from_fn(|k| {
                        composed[k].reduce(core::slice::from_ref(modulus))
                    });
                }
                if !polys_projectively_equal_mod(&composed, &iterates[c], modulus) {
                    return Err(c);
                }
            }
        }
    }
    Ok(())
}

/// Does the chart act as the identity on every component?
fn sigma_power_is_identity(entry: &CatalogEntry, power: usize) -> bool {
    for (c, comp) in entry.components.iter().enumerate() {
        match &comp.support {
            Support::Plane | Support::Cubic => {
                let modulus = match &comp.support {
                    Support::Cubic => Some(&comp.form),
                    _ => None,
                };
                let mut composed = [fx(), fy(), fz()];
                for _ in 0..power {
                    composed = entry.charts[c].compose_polys(&composed);
                    if let Some(m) = modulus {
                        composed =
                            core::array::from_fn(|k| composed[k].reduce(core::slice::from_ref(m)));
                    }
                }
                let identity = [fx(), fy(), fz()];
                let equal = match modulus {
                    Some(m) => polys_projectively_equal_mod(&composed, &identity, m),
                    None => {
                        let mut ok = !composed.iter().all(TriPoly::is_zero);
                        for p in 0..3 {
                            for q in (p + 1)..3 {
                                let minor = composed[p]
                                    .mul(&identity[q])
                                    .sub(&composed[q].mul(&identity[p]));
                                if !minor.is_zero() {
                                    ok = false;
                                }
                            }
                        }
                        ok
                    }
                };
                if !equal {
                    return false;
                }
            }
            Support::Line(_) | Support::Conic(_) => {
                let param = comp.param().ok().flatten().expect("parametrized support");
                let mut composed = param.clone();
                let mut at = c;
                for _ in 0..power {
                    composed = entry.charts[at].compose_bins(&composed);
                    at = match entry.image_component(at) {
                        Ok(j) => j,
                        Err(_) => return false,
                    };
                }
                if at != c || !bins_projectively_equal(&composed, &param) {
                    return false;
                }
            }
        }
    }
    true
}

/// Order class of the reduced automorphism, computed symbolically.
pub fn sigma_order_bar(entry: &CatalogEntry) -> SigmaOrderClass {
    if sigma_power_is_identity(entry, 1) {
        SigmaOrderClass::One
    } else if sigma_power_is_identity(entry, 2) {
        SigmaOrderClass::Two
    } else {
        SigmaOrderClass::Other
    }
}

/// Result of a point-variety computation for one conic.
#[derive(Clone, Debug)]
pub struct EaResult {
    pub count: Count,
    /// Complete point list when every intersection root is base-field.
    pub points: Option<Vec<PointP2>>,
    /// Index of a containing component when the count is infinite.
    pub containment: Option<usize>,
}

/// The point variety of the conic cut out by `g^2`: the union of the
/// intersection of the variety with the line `V(g)` and its automorphism
/// image, counted as `2#T - #(T ∩ sigma T)` with per-component gcd counts
/// and inclusion-exclusion over the shared component points.
pub fn point_variety_ea(
    entry: &CatalogEntry,
    g: &[FieldElem; 3],
) -> Result<EaResult, CatalogError> {
    if g.iter().all(FieldElem::is_zero) {
        return Err(CatalogError::Geometry(GeomError::ZeroForm));
    }
    debug_assert_eq!(entry.declared_order, SigmaOrderClass::Two);
    // Containment checks first: a line component proportional to g.
    for (c, comp) in entry.components.iter().enumerate() {
        if let Support::Line(lin) = &comp.support {
            let cf = linear_coeffs(lin).expect("linear support form");
            if proportional(&cf, g) {
                return Ok(EaResult {
                    count: Count::Infinite,
                    points: None,
                    containment: Some(c),
                });
            }
        }
    }
    let param = line_param(g)?;
    let mut raw_t = 0usize;
    let mut raw_ts = 0usize;
    let mut all_points: Option<Vec<PointP2>> = Some(Vec::new());
    let mut intersections: Vec<LineIntersection> = Vec::new();
    for (c, comp) in entry.components.iter().enumerate() {
        let li = intersect_line_component(g, comp)?;
        match li.count {
            Count::Infinite => {
                return Ok(EaResult {
                    count: Count::Infinite,
                    points: None,
                    containment: Some(c),
                })
            }
            Count::Finite(n) => {
                debug_assert!(
                    n <= comp.form.total_degree() as usize,
                    "line section exceeds the degree bound"
                );
                raw_t += n;
            }
        }
        // restriction of g ∘ sigma along the line: detects T ∩ sigma T
        let r_c = restrict_form(&comp.form, &param);
        let image = entry.charts[c].compose_bins(&param);
        let mut s_c = BinForm::zero(image[0].degree());
        for (k, gc) in g.iter().enumerate() {
            if !gc.is_zero() {
                s_c = s_c.add(&image[k].scale(gc));
            }
        }
        let mut common = if s_c.is_zero() {
            match li.count {
                Count::Finite(n) => n,
                Count::Infinite => unreachable!(),
            }
        } else {
            r_c.common_projective_roots(&s_c)
                .map_err(|_| CatalogError::Geometry(GeomError::ZeroForm))?
        };
        // The first elliptic chart vanishes identically on its degenerate
        // fiber, producing spurious common roots there: remove the fiber
        // points that sit on the line but whose true image leaves it.
        if let Some(ec) = &entry.ec {
            for q in &ec.e1 {
                let on_line = g
                    .iter()
                    .zip(q.coords())
                    .fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b))
                    .is_zero();
                if on_line && comp.contains(q) {
                    let image = entry.charts[c].apply(q)?;
                    let g_at_image = g
                        .iter()
                        .zip(image.coords())
                        .fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b));
                    if !g_at_image.is_zero() {
                        common -= 1;
                    }
                }
            }
        }
        raw_ts += common;
        if let Some(points) = all_points.as_mut() {
            match &li.points {
                Some(pts) => points.extend(pts.iter().cloned()),
                None => all_points = None,
            }
        }
        intersections.push(li);
    }
    // Inclusion-exclusion over points on several components.
    for p in &entry.shared_points {
        let g_at = g
            .iter()
            .zip(p.coords())
            .fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b));
        if !g_at.is_zero() {
            continue;
        }
        let mult = entry.components_through(p).len();
        if mult >= 2 {
            raw_t -= mult - 1;
            let image = entry.sigma_point(p)?;
            let g_at_image = g
                .iter()
                .zip(image.coords())
                .fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b));
            if g_at_image.is_zero() {
                raw_ts -= mult - 1;
            }
        }
    }
    let count = 2 * raw_t - raw_ts;
    let points = match all_points {
        None => None,
        Some(t_points) => {
            let t_points = dedup_points(t_points);
            let mut every = t_points.clone();
            for p in &t_points {
                every.push(entry.sigma_point(p)?);
            }
            let every = dedup_points(every);
            assert_eq!(
                every.len(),
                count,
                "explicit point set disagrees with the gcd count"
            );
            Some(every)
        }
    };
    Ok(EaResult {
        count: Count::Finite(count),
        points,
        containment: None,
    })
}

/// The elliptic automorphism applied to an explicit curve point, with the
/// chart switched on the degenerate fiber. The image is checked to lie on
/// the curve.
pub fn sklyanin_sigma(p: &PointP2, lambda: &FieldElem) -> Result<PointP2, CatalogError> {
    let entry = instantiate(RowTag::EC, core::slice::from_ref(lambda))?;
    let curve = &entry.components[0].form;
    if !curve.eval(p.coords()).is_zero() {
        return Err(CatalogError::Geometry(GeomError::NotOnCurve));
    }
    let ec = entry.ec.as_ref().unwrap();
    let image = if ec.e1.contains(p) {
        ec.chart2.apply(p)?
    } else {
        entry.charts[0].apply(p)?
    };
    debug_assert!(curve.eval(image.coords()).is_zero());
    Ok(image)
}

/// Report of the cubic-form membership checks for the elliptic family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhReport {
    /// The first degenerate fiber lies on the first auxiliary cubic.
    pub e1_on_h1: bool,
    /// The second degenerate fiber lies on the second auxiliary cubic.
    pub e2_on_h2: bool,
    /// Explicit point-variety points lie on both auxiliary cubics.
    pub ea_on_both: Option<bool>,
    /// The first fiber misses the point variety (checked when requested).
    pub e1_disjoint_from_ea: Option<bool>,
}

/// The two auxiliary cubics attached to `f = a x^2 + b y^2 + c z^2` on the
/// elliptic family.
pub fn fh_cubics(lambda: &FieldElem, f: &[FieldElem; 3]) -> (TriPoly, TriPoly) {
    let (a, b, c) = (&f[0], &f[1], &f[2]);
    let l2 = lambda.pow(2);
    let h1 = fx()
        .mul(&con(lambda).mul(&fy().pow(2)).sub(&fx().mul(&fz())))
        .scale(a)
        .add(
            &fy()
                .mul(&con(lambda).mul(&fx().pow(2)).sub(&fy().mul(&fz())))
                .scale(b),
        )
        .add(
            &fz()
                .mul(&fz().pow(2).sub(&con(&l2).mul(&fx()).mul(&fy())))
                .scale(c),
        );
    let h2 = fx()
        .mul(&con(lambda).mul(&fz().pow(2)).sub(&fx().mul(&fy())))
        .scale(a)
        .add(
            &fy()
                .mul(&fy().pow(2).sub(&con(&l2).mul(&fx()).mul(&fz())))
                .scale(b),
        )
        .add(
            &fz()
                .mul(&con(lambda).mul(&fx().pow(2)).sub(&fy().mul(&fz())))
                .scale(c),
        );
    (h1, h2)
}

/// Checks the degenerate fibers against the auxiliary cubics, optionally
/// together with explicit point-variety points. Valid with symbolic
/// parameters.
pub fn verify_fh(
    lambda: &FieldElem,
    f: &[FieldElem; 3],
    ea_points: Option<&[PointP2]>,
) -> Result<FhReport, CatalogError> {
    let (h1, h2) = fh_cubics(lambda, f);
    let eps = FieldElem::cube_root_of_unity();
    let one = FieldElem::one();
    let e1: Vec<PointP2> = (0..3)
        .map(|j| PointP2::new([one.clone(), eps.pow(j), lambda * &eps.pow(2 * j)]).unwrap())
        .collect();
    let e2: Vec<PointP2> = (0..3)
        .map(|j| PointP2::new([one.clone(), lambda * &eps.pow(2 * j), eps.pow(j)]).unwrap())
        .collect();
    let e1_on_h1 = e1.iter().all(|p| h1.eval(p.coords()).is_zero());
    let e2_on_h2 = e2.iter().all(|p| h2.eval(p.coords()).is_zero());
    let ea_on_both = ea_points.map(|pts| {
        pts.iter()
            .all(|p| h1.eval(p.coords()).is_zero() && h2.eval(p.coords()).is_zero())
    });
    // disjointness is only claimed when a^3 != b^3
    let a3 = f[0].pow(3);
    let b3 = f[1].pow(3);
    let e1_disjoint_from_ea = if a3 != b3 {
        ea_points.map(|pts| e1.iter().all(|p| !pts.contains(p)))
    } else {
        None
    };
    Ok(FhReport {
        e1_on_h1,
        e2_on_h2,
        ea_on_both,
        e1_disjoint_from_ea,
    })
}

/// Geometry for a general member `S^(a,b,c)` of the diagonal skew family
/// (constraint: some coefficient zero, or all equal). The entry's tag names
/// the reference row whose shape the relations instantiate; components and
/// charts carry the coefficients.
pub fn skew_geometry(
    alpha: &FieldElem,
    beta: &FieldElem,
    gamma: &FieldElem,
) -> Result<CatalogEntry, CatalogError> {
    let coeffs = [alpha.clone(), beta.clone(), gamma.clone()];
    let zeros: Vec<usize> = (0..3).filter(|&k| coeffs[k].is_zero()).collect();
    match zeros.len() {
        3 => instantiate(RowTag::S1, &[int(-1)]),
        2 => {
            let k = (0..3).find(|&k| !coeffs[k].is_zero()).unwrap();
            Ok(sprime_like(k, &coeffs[k]))
        }
        1 => {
            let k = zeros[0];
            Ok(nc_like(k, &coeffs))
        }
        0 => {
            if alpha == beta && beta == gamma {
                instantiate(RowTag::EC, core::slice::from_ref(alpha))
            } else {
                Err(CatalogError::Constraint(
                    "diagonal family needs a zero coefficient or all coefficients equal".into(),
                ))
            }
        }
        _ => unreachable!(),
    }
}

/// Relations of `S^(a,b,c)`.
pub fn skew_relations(coeffs: &[FieldElem; 3]) -> Vec<FreeElem> {
    cyclic_relations(&int(-1), coeffs.clone())
}

/// Geometry when exactly the `k`-th coefficient is nonzero: a line and a
/// conic meeting at two points.
fn sprime_like(k: usize, coeff: &FieldElem) -> CatalogEntry {
    let vk = TriPoly::var(k);
    let k1 = (k + 1) % 3;
    let k2 = (k + 2) % 3;
    let mu = &int(2) / coeff;
    let conic_form = vk
        .pow(2)
        .sub(&con(&mu).mul(&TriPoly::var(k1)).mul(&TriPoly::var(k2)));
    // parametrization (analogous to x^2 = mu y z: (mu s t, mu s^2, t^2))
    let zero = FieldElem::zero();
    let one = FieldElem::one();
    let mut conic_param: [BinForm; 3] = [BinForm::zero(2), BinForm::zero(2), BinForm::zero(2)];
    conic_param[k] = BinForm::from_coeffs(vec![zero.clone(), mu.clone(), zero.clone()]);
    conic_param[k1] = BinForm::from_coeffs(vec![mu.clone(), zero.clone(), zero.clone()]);
    conic_param[k2] = BinForm::from_coeffs(vec![zero.clone(), zero.clone(), one]);
    // sigma: on the line, negate the (k+2)-th coordinate; on the conic,
    // negate both off-`k` coordinates
    let mut line_chart = [fx(), fy(), fz()];
    line_chart[k2] = line_chart[k2].neg();
    let mut conic_chart = [fx(), fy(), fz()];
    conic_chart[k1] = conic_chart[k1].neg();
    conic_chart[k2] = conic_chart[k2].neg();
    let mut coeffs = [FieldElem::zero(), FieldElem::zero(), FieldElem::zero()];
    coeffs[k] = coeff.clone();
    let mut shared1 = [0i64; 3];
    shared1[k1] = 1;
    let mut shared2 = [0i64; 3];
    shared2[k2] = 1;
    CatalogEntry {
        tag: RowTag::SPrime,
        params: vec![coeff.clone()],
        relations: skew_relations(&coeffs),
        components: vec![
            line(vk),
            CurveComponent {
                form: conic_form,
                support: Support::Conic(conic_param),
            },
        ],
        charts: vec![
            SigmaChart::polynomial(line_chart),
            SigmaChart::polynomial(conic_chart),
        ],
        shared_points: vec![pt(shared1), pt(shared2)],
        declared_order: SigmaOrderClass::Two,
        ec: None,
    }
}

/// Geometry when exactly the `k`-th coefficient vanishes: a cubic with a
/// chart that degenerates at the `k`-th coordinate point.
fn nc_like(k: usize, coeffs: &[FieldElem; 3]) -> CatalogEntry {
    let k1 = (k + 1) % 3;
    let k2 = (k + 2) % 3;
    let (a1, a2) = (&coeffs[k1], &coeffs[k2]);
    let cubic = TriPoly::var(k1)
        .pow(3)
        .scale(a1)
        .add(&TriPoly::var(k2).pow(3).scale(a2))
        .sub(
            &TriPoly::var(0)
                .mul(&TriPoly::var(1))
                .mul(&TriPoly::var(2))
                .scale(&int(2)),
        );
    // chart in canonical coordinates (X, Y, Z) = (x_{k1}, x_{k2}, x_k):
    // (X Y, -Y^2, Y Z - a1 X^2)
    let (xv, yv, zv) = (TriPoly::var(k1), TriPoly::var(k2), TriPoly::var(k));
    let mut formulas = [TriPoly::zero(), TriPoly::zero(), TriPoly::zero()];
    formulas[k1] = xv.mul(&yv);
    formulas[k2] = yv.pow(2).neg();
    formulas[k] = yv.mul(&zv).sub(&xv.pow(2).scale(a1));
    let mut fixed = [0i64; 3];
    fixed[k] = 1;
    let chart = SigmaChart::polynomial(formulas).with_exceptional(vec![(pt(fixed), pt(fixed))]);
    CatalogEntry {
        tag: RowTag::NC,
        params: vec![a1.clone(), a2.clone()],
        relations: skew_relations(coeffs),
        components: vec![CurveComponent {
            form: cubic,
            support: Support::Cubic,
        }],
        charts: vec![chart],
        shared_points: vec![],
        declared_order: SigmaOrderClass::Two,
        ec: None,
    }
}
