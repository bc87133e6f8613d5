//! Acceptance suite: one test per acceptance criterion, each printing a
//! pass line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Every tolerance is exact; the only floating-point code is the
//! sanity oracle of criterion 11, which never feeds back into the engine.

use qconic_core::catalog::{
    self, catalog, instantiate, point_variety_ea, sigma_order_bar, verify_graph, verify_iterates,
    RowTag, SigmaOrderClass,
};
use qconic_core::classify::{
    build_algebra, classify, diagonal_rank, square_roots_of_f, verify_tables, ConicSpec, EaCount,
    Family, COMMUTATIVE_ROWS, TWO_PATH_ROWS,
};
use qconic_core::clifford::{clifford_deformation, is_clifford_map, theta_from_central};
use qconic_core::field::FieldElem;
use qconic_core::findim::{reference_algebra, CAClass, FinDimError};
use qconic_core::freealg::{square_central_closed_form, QuadAlgebra};
use qconic_core::geometry::proportional;
use qconic_core::tripoly::TriPoly;
use qconic_core::unipoly::{distinct_root_count, UniPoly};

fn int(n: i64) -> FieldElem {
    FieldElem::from_integer(n)
}

fn ratio(n: i64, d: i64) -> FieldElem {
    FieldElem::from_ratio(n, d)
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn small(&mut self, bound: i64) -> i64 {
        (self.next() >> 40) as i64 % (2 * bound + 1) - bound
    }
}

/// Criterion 1: the six central rows reproduce the reference center
/// dimensions {6,1,3,3,3,3} and automorphism orders {1,1,2,2,2,2}.
#[test]
fn acceptance_01_central_rows() {
    let rows: [(RowTag, FieldElem, usize, SigmaOrderClass); 6] = [
        (RowTag::P, int(1), 6, SigmaOrderClass::One),
        (RowTag::TL, int(1), 1, SigmaOrderClass::One),
        (RowTag::S1, int(-1), 3, SigmaOrderClass::Two),
        (RowTag::SPrime, int(-1), 3, SigmaOrderClass::Two),
        (RowTag::NC, int(-1), 3, SigmaOrderClass::Two),
        (RowTag::EC, int(2), 3, SigmaOrderClass::Two),
    ];
    for (tag, param, want_dim, want_order) in rows {
        let entry = instantiate(tag, &[param]).unwrap();
        let s = QuadAlgebra::new(3, entry.relations.clone()).unwrap();
        assert_eq!(
            s.center_basis(2).unwrap().len(),
            want_dim,
            "center dimension of row {tag}"
        );
        assert_eq!(sigma_order_bar(&entry), want_order, "order of row {tag}");
    }
    println!("criterion 01: PASS (6 central rows, exact)");
}

/// Criterion 2: the nine reference conics classify to the listed invariant
/// algebra classes and point-variety descriptions.
#[test]
fn acceptance_02_nine_reference_conics() {
    let nine: [(ConicSpec, CAClass, &str); 9] = [
        (
            ConicSpec::new(Family::Commutative, [int(1), int(0), int(0)]),
            CAClass::SkewDualNumbers,
            "a line",
        ),
        (
            ConicSpec::new(Family::Commutative, [int(1), int(1), int(0)]),
            CAClass::SkewSplit,
            "two lines",
        ),
        (
            ConicSpec::new(Family::Commutative, [int(1), int(1), int(1)]),
            CAClass::Mat2,
            "a smooth conic",
        ),
        (
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(0), int(0)],
            ),
            CAClass::DualSquare,
            "a line",
        ),
        (
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(1), int(0), int(0)],
            ),
            CAClass::Jordan4,
            "1 point",
        ),
        (
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(3), int(3), int(4)],
            ),
            CAClass::Jordan3PlusK,
            "2 points",
        ),
        (
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(1), int(0)],
            ),
            CAClass::DoubleDual,
            "3 points",
        ),
        (
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(1), int(1), int(-4)],
            ),
            CAClass::DualPlusK2,
            "4 points",
        ),
        (
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(1), int(1)],
            ),
            CAClass::Split4,
            "6 points",
        ),
    ];
    for (spec, want_class, want_row) in nine {
        let record = classify(&spec).unwrap();
        assert_eq!(record.ca_class, want_class);
        assert_eq!(record.table_row, want_row);
        assert!(record.consistent);
    }
    println!("criterion 02: PASS (9 reference conics, exact)");
}

/// Criterion 3: the six reference pairs (point count, spectrum count) are
/// each witnessed and no computed record falls outside the table.
#[test]
fn acceptance_03_row_coverage_and_closure() {
    let witnesses: [(ConicSpec, EaCount, usize); 6] = [
        (
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(0), int(0)],
            ),
            EaCount::Infinite,
            1,
        ),
        (
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(1), int(0), int(0)],
            ),
            EaCount::Finite(1),
            1,
        ),
        (
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(3), int(3), int(4)],
            ),
            EaCount::Finite(2),
            2,
        ),
        (
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(1), int(0)],
            ),
            EaCount::Finite(3),
            2,
        ),
        (
            ConicSpec::new(
                Family::Skew([int(1), int(1), int(0)]),
                [int(1), int(1), int(-4)],
            ),
            EaCount::Finite(4),
            3,
        ),
        (
            ConicSpec::new(
                Family::Skew([int(0), int(0), int(0)]),
                [int(1), int(1), int(1)],
            ),
            EaCount::Finite(6),
            4,
        ),
    ];
    let mut seen = Vec::new();
    for (spec, want_ea, want_spec) in witnesses {
        let r = classify(&spec).unwrap();
        assert_eq!(r.ea_count, want_ea);
        assert_eq!(r.spec_count, want_spec);
        // classify would have failed on any out-of-table record; re-check
        // the triple against the reference rows explicitly
        let row = TWO_PATH_ROWS
            .iter()
            .find(|(ea, sc, cls)| *ea == r.ea_count && *sc == r.spec_count && *cls == r.ca_class);
        assert!(row.is_some(), "record outside the reference table");
        seen.push((r.ea_count, r.spec_count));
    }
    for (ea, sc, _) in TWO_PATH_ROWS {
        assert!(
            seen.contains(&(ea, sc)),
            "pair ({ea:?}, {sc}) not witnessed"
        );
    }
    // commutative rows cannot fall outside their table either
    for (rank, _, want_spec, want_class) in COMMUTATIVE_ROWS {
        let mut f = [int(0), int(0), int(0)];
        for k in 0..rank {
            f[k] = int(1);
        }
        let r = classify(&ConicSpec::new(Family::Commutative, f)).unwrap();
        assert_eq!(r.spec_count, want_spec);
        assert_eq!(r.ca_class, want_class);
    }
    println!("criterion 03: PASS (6 reference pairs witnessed, no record out of table)");
}

/// Criterion 4: the elliptic trichotomy at lambda = 2 over 25 pseudorandom
/// rational coefficient triples.
#[test]
fn acceptance_04_elliptic_trichotomy() {
    let mut rng = Rng(0x5eed5eed5eed5eedu64);
    let mut done = 0;
    let mut seen_counts = Vec::new();
    while done < 25 {
        let f = [
            ratio(rng.small(6), 1 + rng.small(3).unsigned_abs() as i64),
            ratio(rng.small(6), 1 + rng.small(3).unsigned_abs() as i64),
            ratio(rng.small(6), 1 + rng.small(3).unsigned_abs() as i64),
        ];
        if f.iter().all(FieldElem::is_zero) {
            continue;
        }
        let spec = ConicSpec::new(Family::Sklyanin(int(2)), f.clone());
        let r = classify(&spec).unwrap();
        assert!(
            matches!(r.spec_count, 2 | 3 | 4),
            "spectrum count {} outside the trichotomy",
            r.spec_count
        );
        if let EaCount::Finite(n) = r.ea_count {
            let listed = TWO_PATH_ROWS
                .iter()
                .any(|(ea, sc, _)| *ea == EaCount::Finite(n) && *sc == r.spec_count);
            assert!(listed, "pair ({n}, {}) not a reference pair", r.spec_count);
        }
        seen_counts.push(r.spec_count);
        done += 1;
    }
    println!(
        "criterion 04: PASS (25 pseudorandom triples at lambda = 2, spectrum counts {:?})",
        {
            let mut c = [0usize; 3];
            for s in seen_counts {
                c[s - 2] += 1;
            }
            c
        }
    );
}

/// The closed-form quartic minimal polynomial for `c = 1`, `a^3 != 1`,
/// frozen as literal coefficients in `(lambda, a, b)` and then substituted.
fn reference_quartic(a: &FieldElem, b: &FieldElem, lambda: &FieldElem) -> UniPoly {
    use qconic_core::field::FieldContext;
    use qconic_core::literal;
    let ctx = FieldContext::new(["lambda", "a", "b"]);
    let coeffs = [
        "(-a*b^2*lambda^4 + (a^3*b + b)*lambda^2 - a^2)/((lambda^3 - 1)^3)",
        "(lambda^2*(b^3*lambda^4 - 2*a*b*lambda^3 + (1 + a^3)*lambda - a*b))/((lambda^3 - 1)^3)",
        "(3*b^2*lambda^4 - a*lambda^3 - 2*a)/((lambda^3 - 1)^2)",
        "(3*b*lambda^2)/(lambda^3 - 1)",
        "1",
    ];
    let values = coeffs.map(|text| {
        literal::parse(text, &ctx)
            .unwrap()
            .eval_param(0, lambda)
            .eval_param(1, a)
            .eval_param(2, b)
    });
    UniPoly::from_coeffs(values.to_vec())
}

/// Criterion 5: the minimal polynomial of the canonical generator of the
/// invariant algebra reproduces the closed-form quartic coefficient by
/// coefficient at lambda = 2, c = 1, (a, b) in {(2,3), (5,1), (-1,2)}.
#[test]
fn acceptance_05_quartic_reproduction() {
    let lambda = int(2);
    for (a, b) in [(2i64, 3i64), (5, 1), (-1, 2)] {
        let (a, b) = (int(a), int(b));
        assert!(a.pow(3) != FieldElem::one(), "hypothesis a^3 != 1");
        let spec = ConicSpec::new(
            Family::Sklyanin(lambda.clone()),
            [a.clone(), b.clone(), int(1)],
        );
        let (s, _) = build_algebra(&spec).unwrap();
        let (pres, theta) = theta_from_central(&s, &spec.f).unwrap();
        let even = clifford_deformation(&pres, &theta)
            .unwrap()
            .even_part()
            .unwrap();
        // canonical generator: the `uw` basis element of the even part
        let gen = even.basis_vec(2);
        assert_eq!(even.basis_labels()[2], "uw");
        let mp = even.min_poly(&gen);
        let want = reference_quartic(&a, &b, &lambda);
        assert_eq!(mp, want, "quartic mismatch at (a, b) = ({a}, {b})");
    }
    println!("criterion 05: PASS (closed-form quartic, 3 instances, coefficient-exact)");
}

/// Criterion 6: the two-point case at lambda = 2, f = -4x^2 + 12y^2 + 12z^2:
/// the cubed-linear-factor quartic and the resulting class.
#[test]
fn acceptance_06_two_point_case() {
    let spec = ConicSpec::new(Family::Sklyanin(int(2)), [int(-4), int(12), int(12)]);
    let r = classify(&spec).unwrap();
    assert_eq!(r.ca_class, CAClass::Jordan3PlusK);
    assert_eq!(r.ea_count, EaCount::Finite(2));
    assert_eq!(r.spec_count, 2);
    // normalized coefficients (-1/3, 1, 1): the quartic factors as
    // (u + 1/3)^3 (u + 5/7)
    let norm = ConicSpec::new(Family::Sklyanin(int(2)), [ratio(-1, 3), int(1), int(1)]);
    let (s, _) = build_algebra(&norm).unwrap();
    let (pres, theta) = theta_from_central(&s, &norm.f).unwrap();
    let even = clifford_deformation(&pres, &theta)
        .unwrap()
        .even_part()
        .unwrap();
    let mp = even.min_poly(&even.basis_vec(2));
    let lin1 = UniPoly::from_coeffs(vec![ratio(1, 3), int(1)]);
    let lin2 = UniPoly::from_coeffs(vec![ratio(5, 7), int(1)]);
    assert_eq!(mp, lin1.pow(3).mul(&lin2));
    assert_eq!(
        qconic_core::unipoly::squarefree_part(&mp).unwrap(),
        lin1.mul(&lin2)
    );
    assert_eq!(distinct_root_count(&mp).unwrap(), 2);
    println!("criterion 06: PASS (two-point case, (u+1/3)^3 (u+5/7), exact)");
}

/// Criterion 7: equal-cube case at lambda = 2, f = x^2 + y^2 + z^2: four
/// spectrum points and the four explicit linear forms squaring to f.
#[test]
fn acceptance_07_equal_cube_case() {
    let spec = ConicSpec::new(Family::Sklyanin(int(2)), [int(1), int(1), int(1)]);
    let r = classify(&spec).unwrap();
    assert_eq!(r.spec_count, 4);
    assert_eq!(r.ca_class, CAClass::Split4);
    // the four reference forms (the eps = 1 member of each family):
    // x+y+z, x+y-3z, x-3y+z, -3x+y+z
    let family = (int(2), int(2), int(2));
    let f = [int(1), int(1), int(1)];
    let gs: [[FieldElem; 3]; 4] = [
        [int(1), int(1), int(1)],
        [int(1), int(1), int(-3)],
        [int(1), int(-3), int(1)],
        [int(-3), int(1), int(1)],
    ];
    for g in &gs {
        let (a, b, c) = square_central_closed_form(&family, g);
        assert!(
            proportional(&[a, b, c], &f),
            "square of {g:?} is not proportional to f"
        );
    }
    // and the search finds exactly these four classes
    let (found, complete) = square_roots_of_f(&[int(2), int(2), int(2)], &f);
    assert!(complete);
    assert_eq!(found.len(), 4);
    println!("criterion 07: PASS (equal-cube case: 4 spectrum points, 4 explicit squares)");
}

/// Criterion 8: graph verification over the whole catalog with symbolic
/// parameters, second-iterate checks for the four tabulated rows, and one
/// perturbed negative control per row.
#[test]
fn acceptance_08_graph_verification() {
    let entries = catalog();
    for entry in &entries {
        assert_eq!(verify_graph(entry), Ok(()), "row {}", entry.tag);
    }
    for tag in [RowTag::P, RowTag::S1, RowTag::S3, RowTag::SPrime] {
        let entry = entries.iter().find(|e| e.tag == tag).unwrap();
        assert_eq!(verify_iterates(entry, 2), Ok(()), "row {tag}");
    }
    for entry in &entries {
        // flip the sign of one chart coordinate (and shift by a power of the
        // first coordinate so the identity chart is also disturbed)
        let mut bad = entry.clone();
        let c = bad.charts.len() - 1;
        let d = bad.charts[c].formulas[2].total_degree();
        bad.charts[c].formulas[2] = bad.charts[c].formulas[2]
            .neg()
            .add(&TriPoly::var(0).pow(d.max(1)));
        assert!(
            verify_graph(&bad).is_err(),
            "perturbed row {} still verifies",
            entry.tag
        );
    }
    println!("criterion 08: PASS (11 graphs verified, 4 second iterates, 11 negative controls)");
}

/// Criterion 9: the double dual returns the relation space on every row,
/// and 50 random central elements produce valid Clifford maps.
#[test]
fn acceptance_09_duality_and_clifford_validity() {
    use qconic_core::freealg::same_span;
    for entry in catalog() {
        let s = QuadAlgebra::new(3, entry.relations.clone()).unwrap();
        let dual = s.quadratic_dual().unwrap();
        assert_eq!(dual.len(), 6);
        let dd = QuadAlgebra::with_max_degree(3, dual, 2)
            .unwrap()
            .quadratic_dual()
            .unwrap();
        assert!(same_span(&dd, s.relations()), "row {}", entry.tag);
    }
    // 50 random central f across the families with centers
    let mut rng = Rng(0xc11ff0d);
    let families = [
        Family::Commutative,
        Family::TripleLine,
        Family::Skew([int(0), int(0), int(0)]),
        Family::Skew([int(1), int(1), int(0)]),
        Family::Skew([int(3), int(0), int(0)]),
        Family::Sklyanin(int(2)),
    ];
    let mut done = 0;
    while done < 50 {
        let fam = &families[(rng.next() % families.len() as u64) as usize];
        let f = match fam {
            Family::TripleLine => {
                // only multiples of x^2 are central here
                [int(1 + rng.small(3).abs()), int(0), int(0)]
            }
            _ => [int(rng.small(4)), int(rng.small(4)), int(rng.small(4))],
        };
        if f.iter().all(FieldElem::is_zero) {
            continue;
        }
        let spec = ConicSpec::new(fam.clone(), f);
        let (s, _) = build_algebra(&spec).unwrap();
        let (pres, theta) = theta_from_central(&s, &spec.f).unwrap();
        assert!(is_clifford_map(&pres.relations(), &theta.values));
        done += 1;
    }
    println!("criterion 09: PASS (double dual on 11 rows, 50 Clifford maps)");
}

/// Criterion 10: the structure-constant engine: associativity is enforced
/// at construction, the nine reference presentations classify to their own
/// tags, and the two skew centers have the reference shapes.
#[test]
fn acceptance_10_findim_engine() {
    for class in CAClass::all() {
        // construction re-checks associativity and the unit law
        let alg = reference_algebra(class);
        assert_eq!(alg.dim(), 4);
        assert_eq!(alg.classify_ca().unwrap(), class);
    }
    let skew_dual = reference_algebra(CAClass::SkewDualNumbers);
    let z = skew_dual.center();
    assert_eq!(z.dim(), 2);
    // the center is k[t]/(t^2): a one-dimensional radical whose square
    // vanishes, and a degree-2 generator
    assert_eq!(z.radical_power_dims(), vec![1]);
    let t = z.basis_vec(1);
    assert_eq!(z.min_poly(&t).degree(), 2);
    let skew_split = reference_algebra(CAClass::SkewSplit);
    assert_eq!(skew_split.center().dim(), 1);
    // spec_count refuses noncommutative input
    assert_eq!(
        reference_algebra(CAClass::Mat2)
            .spec_count(true)
            .unwrap_err(),
        FinDimError::NotCommutative
    );
    println!("criterion 10: PASS (9 reference classes, skew centers, refusal check)");
}

/// Independent oracle for the spectrum count: the number of distinct
/// projective intersection points of the two minor conics, counted through
/// resultants along several projection directions.
fn conic_intersection_count(coeffs: &[FieldElem; 3], f: &[FieldElem; 3]) -> usize {
    let x = TriPoly::var(0);
    let y = TriPoly::var(1);
    let z = TriPoly::var(2);
    let q = [
        x.pow(2).sub(&y.mul(&z).scale(&coeffs[0])),
        y.pow(2).sub(&z.mul(&x).scale(&coeffs[1])),
        z.pow(2).sub(&x.mul(&y).scale(&coeffs[2])),
    ];
    // two independent minors (rotate so the pivot coefficient is nonzero)
    let piv = (0..3).find(|&k| !f[k].is_zero()).unwrap();
    let (i, j) = ((piv + 1) % 3, (piv + 2) % 3);
    let g1 = q[piv].scale(&f[i]).sub(&q[i].scale(&f[piv]));
    let g2 = q[piv].scale(&f[j]).sub(&q[j].scale(&f[piv]));
    // Projection directions: cyclically twisted shears. A direction is
    // admissible when both transformed conics have a nonzero (scalar)
    // coefficient at the square of the eliminated variable, i.e. the
    // projection center lies on neither conic; the resultant is then an
    // honest binary quartic whose projective roots are the projected
    // intersection points.
    let mut best: Option<usize> = None;
    for t in 2i64..=11 {
        // circulant in the powers of t; invertible whenever t^3 != 1
        let m = [[1, t, t * t], [t * t, 1, t], [t, t * t, 1]];
        let subs: [TriPoly; 3] = core::array::from_fn(|r| {
            let mut acc = TriPoly::zero();
            for c in 0..3 {
                acc = acc.add(&TriPoly::var(c).scale(&int(m[r][c])));
            }
            acc
        });
        let h1 = g1.substitute(&subs);
        let h2 = g2.substitute(&subs);
        use qconic_core::tripoly::Mon3;
        if h1.coeff(&Mon3([0, 2, 0])).is_zero() || h2.coeff(&Mon3([0, 2, 0])).is_zero() {
            continue;
        }
        // eliminate the middle variable: coefficients in scratch params
        let to_uni = |p: &TriPoly| -> UniPoly {
            let mut buckets = vec![FieldElem::zero(); 3];
            for (mon, c) in p.terms() {
                let e = mon.0[1] as usize;
                let factor = &FieldElem::param(8).pow(mon.0[0] as i32)
                    * &FieldElem::param(9).pow(mon.0[2] as i32);
                buckets[e] = &buckets[e] + &(c * &factor);
            }
            UniPoly::from_coeffs(buckets)
        };
        let (u1, u2) = (to_uni(&h1), to_uni(&h2));
        let res = qconic_core::unipoly::resultant(&u1, &u2).unwrap();
        if res.is_zero() {
            // shared component; no instance in the sweep does this
            continue;
        }
        // the resultant is a binary quartic in (param8, param9)
        let affine_coeffs = res
            .eval_param(8, &FieldElem::one())
            .poly_coefficients_in(9)
            .expect("polynomial in the scratch parameters");
        let affine = UniPoly::from_coeffs(affine_coeffs);
        let mut count = distinct_root_count(&affine).unwrap();
        if affine.degree() < 4 {
            count += 1; // projective root over the second base point
        }
        best = Some(best.unwrap_or(0).max(count));
    }
    best.expect("no admissible projection direction")
}

/// Criterion 11: cross-oracles. The spectrum count agrees with an
/// independent resultant-based count of the minor-conic intersection on 10
/// instances, and the gcd-based root counter agrees with a floating-point
/// companion-matrix eigenvalue counter on 100 well-separated polynomials.
#[test]
fn acceptance_11_oracles() {
    // (a) spectrum count vs conic intersection
    let instances: [([i64; 3], [i64; 3]); 10] = [
        ([0, 0, 0], [1, 1, 1]),
        ([0, 0, 0], [1, 1, 0]),
        ([0, 0, 0], [1, 0, 0]),
        ([0, 0, 0], [2, -3, 5]),
        ([1, 1, 0], [1, 1, -4]),
        ([1, 1, 0], [3, 3, 4]),
        ([1, 1, 0], [1, 0, 0]),
        ([2, 2, 2], [1, 1, 1]),
        ([2, 2, 2], [-4, 12, 12]),
        ([2, 2, 2], [2, 3, 1]),
    ];
    for (c, f) in instances {
        let coeffs = c.map(int);
        let fe = f.map(int);
        let family = if c == [0, 0, 0] || c[2] == 0 {
            Family::Skew(coeffs.clone())
        } else {
            Family::Sklyanin(coeffs[0].clone())
        };
        let record = classify(&ConicSpec::new(family, fe.clone())).unwrap();
        let oracle = conic_intersection_count(&coeffs, &fe);
        assert_eq!(
            record.spec_count, oracle,
            "oracle disagrees on ({c:?}, {f:?})"
        );
    }

    // (b) exact distinct-root counts vs companion-matrix eigenvalues
    let mut rng = Rng(0xf10a7);
    let mut done = 0;
    let mut check = |roots: &[(i64, usize)]| {
        let elems: Vec<FieldElem> = roots
            .iter()
            .flat_map(|(r, m)| core::iter::repeat(ratio(*r, 4)).take(*m))
            .collect();
        let p = UniPoly::from_roots(&elems);
        let exact = distinct_root_count(&p).unwrap();
        // companion matrix of the monic polynomial
        let n = p.degree() as usize;
        let comp = nalgebra::DMatrix::<f64>::from_fn(n, n, |r, c| {
            if c == n - 1 {
                let coeff = p.coeff(r).as_rational().unwrap();
                use num_traits::ToPrimitive;
                -(coeff.to_f64().unwrap())
            } else if r == c + 1 {
                1.0
            } else {
                0.0
            }
        });
        let eigen = comp.complex_eigenvalues();
        let mut vals: Vec<(f64, f64)> = eigen.iter().map(|z| (z.re, z.im)).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut clusters = 0;
        let mut last: Option<(f64, f64)> = None;
        for v in vals {
            let fresh = match last {
                None => true,
                Some(l) => ((v.0 - l.0).powi(2) + (v.1 - l.1).powi(2)).sqrt() > 1e-6,
            };
            if fresh {
                clusters += 1;
            }
            last = Some(v);
        }
        assert_eq!(exact, clusters, "float oracle disagrees on roots {roots:?}");
    };
    while done < 100 {
        // simple, well-separated roots at quarter-integer spacing: companion
        // eigenvalues are then accurate far beyond the 1e-6 clustering
        // tolerance (a multiple root scatters its eigenvalue cluster by
        // roughly eps^(1/multiplicity), which 1e-6 cannot resolve)
        let k = 1 + (rng.next() % 6) as usize;
        let mut chosen: Vec<(i64, usize)> = Vec::new();
        for _ in 0..k {
            let r = rng.small(16);
            if chosen.iter().any(|(c, _)| *c == r) {
                continue;
            }
            chosen.push((r, 1));
        }
        if chosen.is_empty() {
            continue;
        }
        check(&chosen);
        done += 1;
    }
    // multiplicity handling is asserted exactly against the construction
    for (mults, distinct) in [
        (vec![(0i64, 3usize), (4, 1)], 2usize),
        (vec![(-2, 2), (2, 2)], 2),
        (vec![(1, 4)], 1),
        (vec![(3, 2), (-1, 1), (5, 3)], 3),
    ] {
        let elems: Vec<FieldElem> = mults
            .iter()
            .flat_map(|(r, m)| core::iter::repeat(ratio(*r, 4)).take(*m))
            .collect();
        let p = UniPoly::from_roots(&elems);
        assert_eq!(distinct_root_count(&p).unwrap(), distinct);
    }
    // the cube-root example: x^3 - 2 has three distinct roots
    let cube = UniPoly::var().pow(3).sub(&UniPoly::constant(int(2)));
    assert_eq!(distinct_root_count(&cube).unwrap(), 3);
    println!("criterion 11: PASS (10 resultant oracles, 100 float oracles + cube root)");
}

/// The full verification battery stays clean end to end (and its negative
/// control trips).
#[test]
fn acceptance_full_battery() {
    let report = verify_tables(false);
    assert!(report.passed());
    assert!(report.assertions.len() >= 40, "assertion inventory shrank");
    assert!(!verify_tables(true).passed());
    println!(
        "full battery: PASS ({} assertions)",
        report.assertions.len()
    );
}

/// Auxiliary reproduction: the degenerate-fiber membership checks for the
/// elliptic family hold symbolically and on the explicit instance.
#[test]
fn acceptance_aux_fh_checks() {
    let lam = FieldElem::param(0);
    let f = [
        FieldElem::param(1),
        FieldElem::param(2),
        FieldElem::param(3),
    ];
    let report = catalog::verify_fh(&lam, &f, None).unwrap();
    assert!(report.e1_on_h1 && report.e2_on_h2);
    let entry = instantiate(RowTag::EC, &[int(2)]).unwrap();
    let r = point_variety_ea(&entry, &[int(1), int(1), int(1)]).unwrap();
    let pts = r.points.unwrap();
    let report = catalog::verify_fh(&int(2), &[int(1), int(1), int(1)], Some(&pts)).unwrap();
    assert_eq!(report.ea_on_both, Some(true));
    println!("auxiliary: PASS (degenerate-fiber membership, symbolic and explicit)");
}

/// Auxiliary reproduction: the commutative-path spectrum counts {1, 2, 0}
/// are computed by explicit two-step quotient geometry, not read off a table.
#[test]
fn acceptance_aux_commutative_dual_counts() {
    use qconic_core::classify::commutative_dual_point_count;
    assert_eq!(commutative_dual_point_count(1).unwrap(), 1);
    assert_eq!(commutative_dual_point_count(2).unwrap(), 2);
    assert_eq!(commutative_dual_point_count(3).unwrap(), 0);
    // rank computation feeding the path
    assert_eq!(diagonal_rank(&[int(0), int(7), int(0)]).unwrap(), 1);
    println!("auxiliary: PASS (two-step dual point counts 1, 2, 0)");
}
