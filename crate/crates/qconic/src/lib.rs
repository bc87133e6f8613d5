//! IO layer for the conic classifier: spec-file ingestion, JSON emission,
//! and the report formats used by the `qconic` binary.
//!
//! Exit-code contract: 0 success, 1 parse error, 2 validation or domain
//! error, 3 internal inconsistency.

use serde_json::{json, Map, Value};

use qconic_core::catalog::{instantiate, CatalogEntry, RowTag};
use qconic_core::classify::{
    classify, ClassifyError, ConicSpec, EaCount, Family, InvariantRecord, Report,
};
use qconic_core::field::{FieldContext, FieldElem};
use qconic_core::findim::FinDimAlgebra;
use qconic_core::geometry::{render_tripoly, Count, PointP2};
use qconic_core::literal;
use qconic_core::unipoly::UniPoly;

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> CliError {
        CliError {
            exit_code: 1,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> CliError {
        CliError {
            exit_code: 2,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> CliError {
        CliError {
            exit_code: 3,
            message: message.into(),
        }
    }

    /// Machine-readable error object.
    pub fn to_json(&self) -> Value {
        json!({ "error": self.message, "exit_code": self.exit_code })
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::TableInconsistency(_) => CliError::internal(e.to_string()),
            _ => CliError::validation(e.to_string()),
        }
    }
}

/// The parameter context a family exposes to literals.
pub fn family_context(family: &str) -> FieldContext {
    match family {
        "skew" => FieldContext::new(["alpha", "beta", "gamma"]),
        "sklyanin" => FieldContext::new(["lambda"]),
        _ => FieldContext::default(),
    }
}

fn parse_elem(text: &str, ctx: &FieldContext) -> Result<FieldElem, CliError> {
    literal::parse(text, ctx).map_err(|e| CliError::parse(format!("`{text}`: {e}")))
}

/// Builds a conic specification from family name, named parameters and the
/// three coefficients of `f` (plus an optional `g`). Parameter values are
/// field-element literals.
pub fn spec_from_parts(
    family: &str,
    parameters: &[(String, String)],
    f: &[String; 3],
    g: Option<&[String; 3]>,
) -> Result<ConicSpec, CliError> {
    let ctx = family_context(family);
    let get = |name: &str| -> Result<FieldElem, CliError> {
        let text = parameters
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| CliError::validation(format!("missing parameter `{name}`")))?;
        parse_elem(text, &ctx)
    };
    let fam = match family {
        "commutative" => Family::Commutative,
        "tl" => Family::TripleLine,
        "skew" => Family::Skew([get("alpha")?, get("beta")?, get("gamma")?]),
        "sklyanin" => Family::Sklyanin(get("lambda")?),
        other => return Err(CliError::validation(format!("unknown family `{other}`"))),
    };
    let parse3 = |arr: &[String; 3]| -> Result<[FieldElem; 3], CliError> {
        Ok([
            parse_elem(&arr[0], &ctx)?,
            parse_elem(&arr[1], &ctx)?,
            parse_elem(&arr[2], &ctx)?,
        ])
    };
    let mut spec = ConicSpec::new(fam, parse3(f)?);
    if let Some(g) = g {
        spec = spec.with_g(parse3(g)?);
    }
    Ok(spec)
}

/// Parses a JSON spec file with keys `family`, `parameters`, `f` and
/// optionally `g`.
pub fn spec_from_json(text: &str) -> Result<ConicSpec, CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("spec file: {e}")))?;
    let family = value
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::parse("spec file: missing `family` string"))?;
    let mut parameters: Vec<(String, String)> = Vec::new();
    if let Some(params) = value.get("parameters") {
        let map = params
            .as_object()
            .ok_or_else(|| CliError::parse("spec file: `parameters` must be an object"))?;
        for (k, v) in map {
            let text = v
                .as_str()
                .ok_or_else(|| CliError::parse("spec file: parameter values must be strings"))?;
            parameters.push((k.clone(), text.to_string()));
        }
    }
    let read3 = |key: &str| -> Result<Option<[String; 3]>, CliError> {
        match value.get(key) {
            None => Ok(None),
            Some(v) => {
                let arr = v.as_array().ok_or_else(|| {
                    CliError::parse(format!("spec file: `{key}` must be an array"))
                })?;
                if arr.len() != 3 {
                    return Err(CliError::parse(format!(
                        "spec file: `{key}` must have exactly 3 entries"
                    )));
                }
                let mut out = [String::new(), String::new(), String::new()];
                for (k, v) in arr.iter().enumerate() {
                    out[k] = v
                        .as_str()
                        .ok_or_else(|| {
                            CliError::parse(format!("spec file: `{key}` entries must be strings"))
                        })?
                        .to_string();
                }
                Ok(Some(out))
            }
        }
    };
    let f = read3("f")?.ok_or_else(|| CliError::parse("spec file: missing `f`"))?;
    let g = read3("g")?;
    spec_from_parts(family, &parameters, &f, g.as_ref())
}

fn render_elem(e: &FieldElem, ctx: &FieldContext) -> String {
    literal::render(e, ctx)
}

fn render_point(p: &PointP2, ctx: &FieldContext) -> Value {
    Value::Array(
        p.coords()
            .iter()
            .map(|c| Value::String(render_elem(c, ctx)))
            .collect(),
    )
}

/// The invariant record as the stable JSON schema.
pub fn record_to_json(record: &InvariantRecord) -> Value {
    let ctx = family_context(record.family.name());
    let mut witnesses = Map::new();
    witnesses.insert(
        "g_found".into(),
        match &record.g_found {
            Some(g) => Value::Array(
                g.iter()
                    .map(|c| Value::String(render_elem(c, &ctx)))
                    .collect(),
            ),
            None => Value::Null,
        },
    );
    if let Some(points) = &record.ea_points {
        witnesses.insert(
            "ea_points".into(),
            Value::Array(points.iter().map(|p| render_point(p, &ctx)).collect()),
        );
    }
    json!({
        "family": record.family.name(),
        "params": record.family.params().iter().map(|p| render_elem(p, &ctx)).collect::<Vec<_>>(),
        "f": record.f.iter().map(|c| render_elem(c, &ctx)).collect::<Vec<_>>(),
        "sigma_class": record.sigma_class.to_string(),
        "dimZ2": record.dim_z2,
        "ca_class": record.ca_class.tag(),
        "spec_count": record.spec_count,
        "ea_count": match record.ea_count {
            EaCount::Finite(n) => json!(n),
            EaCount::Infinite => json!("infinite"),
            EaCount::Unknown => json!("unknown"),
        },
        "dual": record.dual_presentation,
        "table_row": record.table_row,
        "consistent": record.consistent,
        "witnesses": Value::Object(witnesses),
    })
}

/// Runs the classifier and renders the record.
pub fn cmd_classify(spec: &ConicSpec) -> Result<Value, CliError> {
    let record = classify(spec)?;
    Ok(record_to_json(&record))
}

/// Renders a univariate polynomial in the given variable.
pub fn render_unipoly(p: &UniPoly, var: &str, ctx: &FieldContext) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let coeff = render_elem(c, ctx);
        let body = if mono.is_empty() {
            coeff
        } else if c.is_one() {
            mono
        } else if (-c).is_one() {
            format!("-{mono}")
        } else if coeff.contains([' ', '+']) || coeff.starts_with('-') {
            format!("({coeff})*{mono}")
        } else {
            format!("{coeff}*{mono}")
        };
        parts.push(body);
    }
    parts.join(" + ")
}

/// The 4-dimensional invariant algebra of a conic in the JSON schema
/// `{dim, basis, unit, sc, grading}` plus its class and the minimal
/// polynomial of a canonical generator.
pub fn cmd_c_algebra(spec: &ConicSpec) -> Result<Value, CliError> {
    use qconic_core::classify::build_algebra;
    use qconic_core::clifford::{clifford_deformation, theta_from_central};
    let (s, _) = build_algebra(spec)?;
    let (pres, theta) = theta_from_central(&s, &spec.f).map_err(ClassifyError::from)?;
    let alg = clifford_deformation(&pres, &theta).map_err(ClassifyError::from)?;
    let even = alg.even_part().map_err(ClassifyError::from)?;
    let class = even.classify_ca().map_err(ClassifyError::from)?;
    let ctx = family_context(spec.family.name());
    // canonical generator search: fixed candidate order, first of maximal
    // minimal-polynomial degree
    let candidates: Vec<(String, Vec<FieldElem>)> = {
        let mut out = Vec::new();
        let combos: [(&str, &[usize]); 7] = [
            ("uw", &[2]),
            ("uv", &[1]),
            ("vw", &[3]),
            ("uv+vw", &[1, 3]),
            ("uv+uw", &[1, 2]),
            ("uw+vw", &[2, 3]),
            ("uv+uw+vw", &[1, 2, 3]),
        ];
        for (label, idxs) in combos {
            let mut v = vec![FieldElem::zero(); even.dim()];
            for &i in idxs {
                v[i] = FieldElem::one();
            }
            out.push((label.to_string(), v));
        }
        out
    };
    let mut best: Option<(String, UniPoly)> = None;
    for (label, v) in candidates {
        let mp = even.min_poly(&v);
        let better = match &best {
            None => true,
            Some((_, b)) => mp.degree() > b.degree(),
        };
        if better {
            best = Some((label, mp));
        }
    }
    let (generator, min_poly) = best.expect("candidate list is nonempty");
    Ok(json!({
        "algebra": algebra_to_json(&even, &ctx),
        "full_deformation": algebra_to_json(&alg, &ctx),
        "ca_class": class.tag(),
        "generator": generator,
        "min_poly": render_unipoly(&min_poly, "u", &ctx),
    }))
}

/// Serializes a structure-constant algebra as
/// `{dim, basis, unit, sc, grading}` with field-element strings.
pub fn algebra_to_json(alg: &FinDimAlgebra, ctx: &FieldContext) -> Value {
    let dim = alg.dim();
    let sc: Vec<Value> = (0..dim)
        .map(|i| {
            Value::Array(
                (0..dim)
                    .map(|j| {
                        Value::Array(
                            alg.sc(i, j)
                                .iter()
                                .map(|c| Value::String(render_elem(c, ctx)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "dim": dim,
        "basis": alg.basis_labels(),
        "unit": alg.unit().iter().map(|c| render_elem(c, ctx)).collect::<Vec<_>>(),
        "sc": sc,
        "grading": alg.grading().map(|g| g.to_vec()),
    })
}

/// Degree-2 center basis of the family's ambient algebra, rendered in the
/// free-algebra grammar.
pub fn cmd_center(spec: &ConicSpec, degree: usize) -> Result<Value, CliError> {
    use qconic_core::classify::family_relations;
    use qconic_core::freealg::{QuadAlgebra, GENS_XYZ};
    if degree != 1 && degree != 2 {
        return Err(CliError::validation("center degree must be 1 or 2"));
    }
    let ctx = family_context(spec.family.name());
    let s = QuadAlgebra::new(3, family_relations(&spec.family)).map_err(ClassifyError::from)?;
    let basis = s.center_basis(degree).map_err(ClassifyError::from)?;
    Ok(json!(basis
        .iter()
        .map(|e| e.render(&GENS_XYZ, &ctx))
        .collect::<Vec<_>>()))
}

/// Quadratic dual relations of the family's ambient algebra on `u, v, w`.
pub fn cmd_dual(spec: &ConicSpec) -> Result<Value, CliError> {
    use qconic_core::classify::family_relations;
    use qconic_core::freealg::{QuadAlgebra, GENS_UVW};
    let ctx = family_context(spec.family.name());
    let s = QuadAlgebra::new(3, family_relations(&spec.family)).map_err(ClassifyError::from)?;
    let dual = s.quadratic_dual().map_err(ClassifyError::from)?;
    Ok(json!({
        "relations": dual.iter().map(|e| e.render(&GENS_UVW, &ctx)).collect::<Vec<_>>(),
        "dual_conic": qconic_core::classify::dual_presentation(spec)?,
    }))
}

/// Looks up a catalog entry by row name with bound parameters.
pub fn entry_by_name(name: &str, params: &[(String, String)]) -> Result<CatalogEntry, CliError> {
    let tag = RowTag::all()
        .into_iter()
        .find(|t| t.name() == name)
        .ok_or_else(|| CliError::validation(format!("unknown catalog row `{name}`")))?;
    let ctx = FieldContext::new(["alpha", "lambda"]);
    let values: Result<Vec<FieldElem>, CliError> =
        params.iter().map(|(_, v)| parse_elem(v, &ctx)).collect();
    instantiate(tag, &values?).map_err(|e| CliError::validation(e.to_string()))
}

/// Intersection report of a line against every component of a catalog entry.
pub fn cmd_geometry(entry: &CatalogEntry, line_text: &str) -> Result<Value, CliError> {
    use qconic_core::geometry::intersect_line_component;
    let form_ctx = FieldContext::new(["alpha", "lambda"]);
    let line = parse_linear_form(line_text, &form_ctx)?;
    let mut components = Vec::new();
    for comp in &entry.components {
        let report = match intersect_line_component(&line, comp) {
            Ok(r) => json!({
                "component": render_tripoly(&comp.form, ["x", "y", "z"], &form_ctx),
                "count": match r.count {
                    Count::Finite(n) => json!(n),
                    Count::Infinite => json!("infinite"),
                },
                "points": r.points.map(|pts| pts.iter().map(|p| render_point(p, &form_ctx)).collect::<Vec<_>>()),
                "restriction": render_unipoly(&r.restriction, "t", &form_ctx),
            }),
            Err(e) => json!({
                "component": render_tripoly(&comp.form, ["x", "y", "z"], &form_ctx),
                "error": e.to_string(),
            }),
        };
        components.push(report);
    }
    Ok(json!({
        "entry": entry.tag.name(),
        "line": line_text,
        "components": components,
    }))
}

/// Parses a linear form such as `x + 2*y - z` into its coefficient triple.
pub fn parse_linear_form(text: &str, ctx: &FieldContext) -> Result<[FieldElem; 3], CliError> {
    use qconic_core::freealg::{parse_relation, GENS_XYZ};
    let e = parse_relation(text, &GENS_XYZ, ctx)
        .map_err(|err| CliError::parse(format!("line `{text}`: {err}")))?;
    if e.degree() != 1 {
        return Err(CliError::validation("line must be homogeneous of degree 1"));
    }
    Ok([e.coeff(&[0]), e.coeff(&[1]), e.coeff(&[2])])
}

/// Renders the verification report.
pub fn report_to_json(report: &Report) -> Value {
    json!({
        "passed": report.passed(),
        "assertions": report.assertions.iter().map(|a| json!({
            "name": a.name,
            "pass": a.pass,
            "detail": a.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn report_to_text(report: &Report) -> String {
    let mut out = String::new();
    for a in &report.assertions {
        out.push_str(if a.pass { "pass" } else { "FAIL" });
        out.push_str("  ");
        out.push_str(&a.name);
        out.push_str(" (");
        out.push_str(&a.detail);
        out.push_str(")\n");
    }
    out.push_str(&format!(
        "{} assertions, {} failed\n",
        report.assertions.len(),
        report.assertions.iter().filter(|a| !a.pass).count()
    ));
    out
}
