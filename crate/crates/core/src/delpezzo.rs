//! Determinantal presentations of Del Pezzo surfaces in products of
//! projective lines.
//!
//! Blowing up the plane in k points (k = 1..5) and projecting away from each
//! point (plus, for the fifth pencil, the conics through four points) embeds
//! the surface into a product of projective lines. Each projection
//! contributes one row of linear forms in a fresh coordinate pair, and the
//! surface is cut out by the maximal minors of the stacked matrix:
//!
//! - k = 3: a single trilinear determinant,
//! - k = 4: the four signed 3x3 minors of a 4x3 matrix, with the matrix
//!   itself giving the linear syzygies (the length-two resolution shape),
//! - k = 5: the ten 3x3 minors of a 5x3 matrix.
//!
//! Everything is verified symbolically: the minors vanish identically under
//! the parametrization from the plane, and the minor row vector composes to
//! zero with the matrix.

use std::sync::Arc;

use crate::config::ProjPoint;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{combinations, PolyMatrix};
use crate::poly::{varset, MultiPoly};
use crate::scalar::{FieldSpec, Scalar};

/// Blow-up centers in the plane: pairwise distinct, no three collinear.
#[derive(Debug, Clone)]
pub struct BlowupData {
    points: Vec<ProjPoint>,
}

impl BlowupData {
    pub fn new(points: Vec<ProjPoint>) -> Result<BlowupData> {
        if points.is_empty() || points.len() > 5 {
            return Err(Error::InvalidArgument(format!(
                "expected between 1 and 5 blow-up points, got {}",
                points.len()
            )));
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::InvalidArgument(format!(
                        "blow-up points {i} and {j} coincide"
                    )));
                }
            }
        }
        for c in combinations(points.len(), 3) {
            if crate::config::collinear(&points[c[0]], &points[c[1]], &points[c[2]]) {
                return Err(Error::InvalidArgument(format!(
                    "blow-up points {:?} are collinear",
                    c
                )));
            }
        }
        Ok(BlowupData { points })
    }

    /// The four standard centers (0:0:1), (0:1:0), (1:0:0), (1:1:1).
    pub fn standard(k: usize) -> Result<BlowupData> {
        let std_points = [
            ProjPoint::from_ints([0, 0, 1]),
            ProjPoint::from_ints([0, 1, 0]),
            ProjPoint::from_ints([1, 0, 0]),
            ProjPoint::from_ints([1, 1, 1]),
        ];
        if k == 0 || k > 4 {
            return Err(Error::InvalidArgument(
                "standard centers are defined for 1 to 4 points".into(),
            ));
        }
        BlowupData::new(std_points[..k].to_vec())
    }

    /// Standard four plus the fifth point (lambda : 1 : mu).
    pub fn standard_with_fifth(lambda: &Scalar, mu: &Scalar) -> Result<BlowupData> {
        for (name, v) in [("lambda", lambda), ("mu", mu)] {
            if v.is_zero() || v.is_one() {
                return Err(Error::InvalidArgument(format!(
                    "degenerate fifth point: {name} must avoid 0 and 1"
                )));
            }
        }
        if lambda == mu {
            return Err(Error::InvalidArgument(
                "degenerate fifth point: lambda = mu puts it on a line through two centers"
                    .into(),
            ));
        }
        let mut pts = BlowupData::standard(4)?.points;
        pts.push(ProjPoint::new([
            lambda.clone(),
            Scalar::from_int(1),
            mu.clone(),
        ])?);
        BlowupData::new(pts)
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn k(&self) -> usize {
        self.points.len()
    }
}

/// Coefficient pairs (alpha, beta) with row entry `r_c = alpha_c s1 + beta_c s2`.
type RowCoeffs = [[Scalar; 2]; 3];

/// The projection row attached to a center: three linear forms in a fresh
/// coordinate pair (s1, s2) whose pairing with x vanishes on the graph of
/// the projection away from the point. The named centers use fixed rows;
/// a general point (lambda : 1 : mu) uses the row
/// (s2, -lambda s2 - mu s1, s1); anything else falls back to an echelon
/// basis of the forms vanishing at the point.
pub fn projection_row_coeffs(p: &ProjPoint) -> RowCoeffs {
    let zero = || Scalar::from_int(0);
    let one = || Scalar::from_int(1);
    let neg = || Scalar::from_int(-1);
    let named = [
        (
            ProjPoint::from_ints([0, 0, 1]),
            [[zero(), one()], [neg(), zero()], [zero(), zero()]],
        ),
        (
            ProjPoint::from_ints([0, 1, 0]),
            [[one(), zero()], [zero(), zero()], [zero(), neg()]],
        ),
        (
            ProjPoint::from_ints([1, 0, 0]),
            [[zero(), zero()], [zero(), one()], [neg(), zero()]],
        ),
        (
            ProjPoint::from_ints([1, 1, 1]),
            [
                [zero(), neg()],
                [one(), one()],
                [neg(), zero()],
            ],
        ),
    ];
    for (q, row) in named {
        if p == &q {
            return row;
        }
    }
    let coords = p.coords();
    if !coords[1].is_zero() {
        // normalize to (lambda : 1 : mu)
        let inv = coords[1].inv().expect("nonzero");
        let lambda = coords[0].mul(&inv);
        let mu = coords[2].mul(&inv);
        return [
            [zero(), one()],
            [mu.neg(), lambda.neg()],
            [one(), zero()],
        ];
    }
    // generic fallback: (l, m) an echelon basis of the forms vanishing at p,
    // row = s2 * l - s1 * m
    let field = coords[0].field();
    let basis = linalg::kernel_basis(&[coords.to_vec()], &field);
    debug_assert_eq!(basis.len(), 2);
    let (l, m) = (&basis[0], &basis[1]);
    [
        [m[0].neg(), l[0].clone()],
        [m[1].neg(), l[1].clone()],
        [m[2].neg(), l[2].clone()],
    ]
}

/// The projection row as polynomials in a fresh two-variable ring (s1, s2).
pub fn projection_row(p: &ProjPoint) -> [MultiPoly; 3] {
    let coeffs = projection_row_coeffs(p);
    let vars = varset(&["s1", "s2"]);
    let field = p.coords()[0].field();
    let build = |pair: &[Scalar; 2]| {
        MultiPoly::monomial_term(field.clone(), vars.clone(), 0, 1, pair[0].clone()).add(
            &MultiPoly::monomial_term(field.clone(), vars.clone(), 1, 1, pair[1].clone()),
        )
    };
    [build(&coeffs[0]), build(&coeffs[1]), build(&coeffs[2])]
}

/// Block names, one fresh projective line per center, in the order the
/// sections of the construction use them.
pub const BLOCK_NAMES: [&str; 5] = ["y", "z", "t", "w", "v"];

fn block_vars(k: usize, extra: &[&str]) -> Arc<Vec<String>> {
    let mut names = Vec::new();
    for b in BLOCK_NAMES.iter().take(k) {
        names.push(format!("{b}1"));
        names.push(format!("{b}2"));
    }
    for e in extra {
        names.push(e.to_string());
    }
    Arc::new(names)
}

/// Presentation data: the matrix, its equations, the syzygy matrix when
/// the shape provides one, and the outcome of the exact verifications.
#[derive(Debug, Clone)]
pub struct DeterminantalPresentation {
    /// Names of the projective-line blocks, in row order.
    pub blocks: Vec<String>,
    pub matrix: PolyMatrix,
    pub equations: Vec<MultiPoly>,
    pub syzygy_matrix: Option<PolyMatrix>,
    pub checks: PresentationChecks,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationChecks {
    /// The signed minor row composes to zero with the matrix.
    pub complex: bool,
    /// Each matrix column annihilates the equation vector.
    pub syzygy: bool,
    /// Every equation vanishes identically under the plane parametrization.
    pub parametrization_vanishing: bool,
}

impl PresentationChecks {
    pub fn all(&self) -> bool {
        self.complex && self.syzygy && self.parametrization_vanishing
    }
}

/// Ambient ring of the plane parametrization: x1, x2, x3 (plus extras).
fn xring(extra: &[&str]) -> Arc<Vec<String>> {
    let mut names = vec!["x1".to_string(), "x2".to_string(), "x3".to_string()];
    for e in extra {
        names.push(e.to_string());
    }
    Arc::new(names)
}

/// Parametrization images of one block: the row with coefficient pairs
/// (alpha, beta) sends (s1, s2) to (sum beta_c x_c, -sum alpha_c x_c).
fn row_images(
    coeffs: &RowCoeffs,
    field: &FieldSpec,
    xvars: &Arc<Vec<String>>,
) -> [MultiPoly; 2] {
    let mut s1 = MultiPoly::zero(field.clone(), xvars.clone());
    let mut s2 = MultiPoly::zero(field.clone(), xvars.clone());
    for c in 0..3 {
        let x = MultiPoly::var(field.clone(), xvars.clone(), c);
        s1 = s1.add(&x.scale(&coeffs[c][1]));
        s2 = s2.sub(&x.scale(&coeffs[c][0]));
    }
    [s1, s2]
}

/// Stack the projection rows of k >= 3 centers into a k x 3 matrix over the
/// product of k projective lines.
pub fn dp_matrix(data: &BlowupData) -> Result<PolyMatrix> {
    let k = data.k();
    if k < 3 {
        return Err(Error::InvalidArgument(
            "the determinantal form needs at least 3 centers".into(),
        ));
    }
    let field = data.points[0].coords()[0].field();
    let vars = block_vars(k, &[]);
    let mut entries = Vec::new();
    for (i, p) in data.points.iter().enumerate() {
        let coeffs = projection_row_coeffs(p);
        for pair in &coeffs {
            let s1 = MultiPoly::monomial_term(
                field.clone(),
                vars.clone(),
                2 * i,
                1,
                pair[0].clone(),
            );
            let s2 = MultiPoly::monomial_term(
                field.clone(),
                vars.clone(),
                2 * i + 1,
                1,
                pair[1].clone(),
            );
            entries.push(s1.add(&s2));
        }
    }
    PolyMatrix::new(k, 3, entries)
}

/// Parametrization images for every block variable of `dp_matrix(data)`.
pub fn dp_parametrization(data: &BlowupData, extra: &[&str]) -> Vec<MultiPoly> {
    let field = data.points[0].coords()[0].field();
    let xvars = xring(extra);
    let mut images = Vec::new();
    for p in &data.points {
        let coeffs = projection_row_coeffs(p);
        let [s1, s2] = row_images(&coeffs, &field, &xvars);
        images.push(s1);
        images.push(s2);
    }
    images
}

/// Graph presentation for one or two centers: the blow-up sits inside
/// `P^2 x (P^1)^k` cut by k bilinear equations `row_i(s) . x = 0`.
pub fn graph_equations(data: &BlowupData) -> Result<DeterminantalPresentation> {
    let k = data.k();
    if !(1..=2).contains(&k) {
        return Err(Error::InvalidArgument(
            "the graph presentation keeps the plane block and needs 1 or 2 centers".into(),
        ));
    }
    let field = data.points[0].coords()[0].field();
    // variables: blocks then the plane block x1,x2,x3
    let mut names = Vec::new();
    for b in BLOCK_NAMES.iter().take(k) {
        names.push(format!("{b}1"));
        names.push(format!("{b}2"));
    }
    names.extend(["x1".into(), "x2".into(), "x3".into()]);
    let vars = Arc::new(names);
    let mut equations = Vec::new();
    let mut entries = Vec::new();
    for (i, p) in data.points.iter().enumerate() {
        let coeffs = projection_row_coeffs(p);
        let mut eq = MultiPoly::zero(field.clone(), vars.clone());
        for (c, pair) in coeffs.iter().enumerate() {
            let s1 = MultiPoly::monomial_term(field.clone(), vars.clone(), 2 * i, 1, pair[0].clone());
            let s2 = MultiPoly::monomial_term(
                field.clone(),
                vars.clone(),
                2 * i + 1,
                1,
                pair[1].clone(),
            );
            let row_entry = s1.add(&s2);
            entries.push(row_entry.clone());
            let x = MultiPoly::var(field.clone(), vars.clone(), 2 * k + c);
            eq = eq.add(&row_entry.mul(&x));
        }
        equations.push(eq);
    }
    let matrix = PolyMatrix::new(k, 3, entries)?;
    // vanishing: substitute s-blocks by their images and x by itself
    let xvars = xring(&[]);
    let mut images = dp_parametrization(data, &[]);
    for c in 0..3 {
        images.push(MultiPoly::var(field.clone(), xvars.clone(), c));
    }
    let vanishing = equations
        .iter()
        .map(|e| e.substitute(&images).map(|p| p.is_zero()))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    Ok(DeterminantalPresentation {
        blocks: BLOCK_NAMES.iter().take(k).map(|s| s.to_string()).collect(),
        matrix,
        equations,
        syzygy_matrix: None,
        checks: PresentationChecks {
            complex: true,
            syzygy: true,
            parametrization_vanishing: vanishing,
        },
    })
}

fn verify_hilbert_burch(
    matrix: &PolyMatrix,
    equations: &[MultiPoly],
) -> (bool, bool) {
    let zero = MultiPoly::zero(matrix.field().clone(), matrix.vars().clone());
    // minor row composed with the matrix
    let mut complex = true;
    for c in 0..matrix.cols() {
        let mut acc = zero.clone();
        for (j, g) in equations.iter().enumerate() {
            acc = acc.add(&g.mul(matrix.entry(j, c)));
        }
        if !acc.is_zero() {
            complex = false;
        }
    }
    // columns as syzygies of the equation vector (same identity, checked
    // column by column against each equation product sum)
    let mut syzygy = true;
    for c in 0..matrix.cols() {
        let mut acc = zero.clone();
        for j in 0..matrix.rows() {
            acc = acc.add(&matrix.entry(j, c).mul(&equations[j]));
        }
        if !acc.is_zero() {
            syzygy = false;
        }
    }
    (complex, syzygy)
}

fn check_vanishing(equations: &[MultiPoly], images: &[MultiPoly]) -> Result<bool> {
    for eq in equations {
        if !eq.substitute(images)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-6 surface: the single trilinear determinant of the 3x3 matrix for
/// the three coordinate centers.
pub fn dp6_equation(data: &BlowupData) -> Result<MultiPoly> {
    if data.k() != 3 || data.points() != BlowupData::standard(3)?.points() {
        return Err(Error::InvalidArgument(
            "the degree-6 determinant is defined for the three coordinate centers".into(),
        ));
    }
    dp_matrix(data)?.determinant()
}

/// Which matrix convention to use for the degree-5 surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dp5Variant {
    /// Rows stacked from the four standard centers (blocks y, z, t, w).
    Stacked,
    /// The symmetric convention (blocks v, w, z, t), rows ordered t, v, w, z.
    Symmetric,
}

/// Degree-5 Del Pezzo presentation: 4x3 matrix, four signed minors, matrix
/// columns as syzygies, everything verified exactly.
pub fn dp5_presentation(variant: Dp5Variant) -> Result<DeterminantalPresentation> {
    match variant {
        Dp5Variant::Stacked => {
            let data = BlowupData::standard(4)?;
            let matrix = dp_matrix(&data)?;
            let equations = matrix.maximal_minors(3)?;
            let (complex, syzygy) = verify_hilbert_burch(&matrix, &equations);
            let images = dp_parametrization(&data, &[]);
            let vanishing = check_vanishing(&equations, &images)?;
            Ok(DeterminantalPresentation {
                blocks: BLOCK_NAMES[..4].iter().map(|s| s.to_string()).collect(),
                matrix: matrix.clone(),
                equations,
                syzygy_matrix: Some(matrix),
                checks: PresentationChecks {
                    complex,
                    syzygy,
                    parametrization_vanishing: vanishing,
                },
            })
        }
        Dp5Variant::Symmetric => {
            let matrix = symmetric_dp5_matrix();
            let equations = matrix.maximal_minors(3)?;
            let (complex, syzygy) = verify_hilbert_burch(&matrix, &equations);
            let images = symmetric_parametrization();
            let vanishing = check_vanishing(&equations, &images)?;
            Ok(DeterminantalPresentation {
                blocks: vec!["v".into(), "w".into(), "z".into(), "t".into()],
                matrix: matrix.clone(),
                equations,
                syzygy_matrix: Some(matrix),
                checks: PresentationChecks {
                    complex,
                    syzygy,
                    parametrization_vanishing: vanishing,
                },
            })
        }
    }
}

/// Variables of the symmetric degree-5 convention.
pub fn symmetric_vars() -> Arc<Vec<String>> {
    varset(&["v1", "v2", "w1", "w2", "z1", "z2", "t1", "t2"])
}

/// The symmetric 4x3 matrix with rows in blocks t, v, w, z:
///
/// ```text
/// ( t2  -t1  t1+t2 )
/// ( v1   v2    0   )
/// ( w2    0   w1   )
/// (  0  -z1   z2   )
/// ```
pub fn symmetric_dp5_matrix() -> PolyMatrix {
    let vars = symmetric_vars();
    let f = FieldSpec::Q;
    let v = |i: usize| MultiPoly::var(f.clone(), vars.clone(), i);
    let zero = MultiPoly::zero(f.clone(), vars.clone());
    let entries = vec![
        v(7),
        v(6).neg(),
        v(6).add(&v(7)),
        v(0),
        v(1),
        zero.clone(),
        v(3),
        zero.clone(),
        v(2),
        zero,
        v(4).neg(),
        v(5),
    ];
    PolyMatrix::new(4, 3, entries).expect("symmetric matrix")
}

/// Images of (v1,v2,w1,w2,z1,z2,t1,t2) under the plane parametrization
/// v=(x1:x2), w=(x2:x3), z=(x3:x1), t=(x3-x2 : x1-x3).
pub fn symmetric_parametrization() -> Vec<MultiPoly> {
    let xv = xring(&[]);
    let f = FieldSpec::Q;
    let x = |i: usize| MultiPoly::var(f.clone(), xv.clone(), i);
    vec![
        x(0),
        x(1),
        x(1),
        x(2),
        x(2),
        x(0),
        x(2).sub(&x(1)),
        x(0).sub(&x(2)),
    ]
}

/// Twelve-variable ring of the pencil coordinates with their third
/// components: v3 = v2 - v1 and cyclic, t3 = -t1 - t2.
pub fn pencil_vars() -> Arc<Vec<String>> {
    varset(&[
        "v1", "v2", "v3", "w1", "w2", "w3", "z1", "z2", "z3", "t1", "t2", "t3",
    ])
}

/// The four binomial surface equations in the twelve pencil coordinates:
///
/// ```text
/// v1 w1 z1 - v2 w2 z2,   w3 z1 t2 - w2 z3 t1,
/// z3 v1 t3 - z2 v3 t2,   v3 w1 t1 - v2 w3 t3.
/// ```
pub fn sigma_binomial_equations() -> Vec<MultiPoly> {
    let vars = pencil_vars();
    let f = FieldSpec::Q;
    let term = |ids: [usize; 3]| -> MultiPoly {
        let mut e = vec![0u32; vars.len()];
        for id in ids {
            e[id] += 1;
        }
        MultiPoly::from_terms(f.clone(), vars.clone(), [(e, Scalar::from_int(1))]).unwrap()
    };
    // indices: v1 v2 v3 w1 w2 w3 z1 z2 z3 t1 t2 t3
    //          0  1  2  3  4  5  6  7  8  9  10 11
    vec![
        term([0, 3, 6]).sub(&term([1, 4, 7])),
        term([5, 6, 10]).sub(&term([4, 8, 9])),
        term([8, 0, 11]).sub(&term([7, 2, 10])),
        term([2, 3, 9]).sub(&term([1, 5, 11])),
    ]
}

/// Images of the twelve pencil coordinates in the plane:
/// v = (x1, x2, y3), w = (x2, x3, y1), z = (x3, x1, y2), t = (y1, y2, y3)
/// with y1 = x3 - x2, y2 = x1 - x3, y3 = x2 - x1.
pub fn pencil_parametrization() -> Vec<MultiPoly> {
    let xv = xring(&[]);
    let f = FieldSpec::Q;
    let x = |i: usize| MultiPoly::var(f.clone(), xv.clone(), i);
    let y1 = x(2).sub(&x(1));
    let y2 = x(0).sub(&x(2));
    let y3 = x(1).sub(&x(0));
    vec![
        x(0),
        x(1),
        y3.clone(),
        x(1),
        x(2),
        y1.clone(),
        x(2),
        x(0),
        y2.clone(),
        y1,
        y2,
        y3,
    ]
}

/// The four symmetric equations with the third coordinates eliminated via
/// the pencil relations, landing in the eight-variable symmetric ring.
pub fn dp5_symmetric_equations() -> Vec<MultiPoly> {
    let target = symmetric_vars();
    let f = FieldSpec::Q;
    let v = |i: usize| MultiPoly::var(f.clone(), target.clone(), i);
    // v1, v2, v3 = v2 - v1; w, z alike; t3 = -t1 - t2
    let images = vec![
        v(0),
        v(1),
        v(1).sub(&v(0)),
        v(2),
        v(3),
        v(3).sub(&v(2)),
        v(4),
        v(5),
        v(5).sub(&v(4)),
        v(6),
        v(7),
        v(6).neg().sub(&v(7)),
    ];
    sigma_binomial_equations()
        .iter()
        .map(|g| g.substitute(&images).expect("elimination"))
        .collect()
}

/// Degree-4 Del Pezzo: the 5x3 matrix for the standard centers plus
/// (lambda : 1 : mu), its ten minors, all vanishing on the parametrization.
pub fn dp4_presentation(lambda: &Scalar, mu: &Scalar) -> Result<DeterminantalPresentation> {
    let data = BlowupData::standard_with_fifth(lambda, mu)?;
    let matrix = dp_matrix(&data)?;
    let equations = matrix.maximal_minors(3)?;
    let images = dp_parametrization(&data, &[]);
    let vanishing = check_vanishing(&equations, &images)?;
    Ok(DeterminantalPresentation {
        blocks: BLOCK_NAMES.iter().map(|s| s.to_string()).collect(),
        matrix,
        equations,
        syzygy_matrix: None,
        checks: PresentationChecks {
            complex: true,
            syzygy: true,
            parametrization_vanishing: vanishing,
        },
    })
}

/// Degree-4 presentation with symbolic lambda, mu: the vanishing of all ten
/// minors holds identically in (x, lambda, mu), covering the whole
/// two-parameter family at once.
pub fn dp4_presentation_symbolic() -> Result<DeterminantalPresentation> {
    let f = FieldSpec::Q;
    let vars = block_vars(5, &["lam", "mu"]);
    let lam = MultiPoly::var(f.clone(), vars.clone(), 10);
    let mu = MultiPoly::var(f.clone(), vars.clone(), 11);
    // rows for the four standard centers
    let std4 = BlowupData::standard(4)?;
    let mut entries = Vec::new();
    for (i, p) in std4.points().iter().enumerate() {
        let coeffs = projection_row_coeffs(p);
        for pair in &coeffs {
            let s1 =
                MultiPoly::monomial_term(f.clone(), vars.clone(), 2 * i, 1, pair[0].clone());
            let s2 = MultiPoly::monomial_term(
                f.clone(),
                vars.clone(),
                2 * i + 1,
                1,
                pair[1].clone(),
            );
            entries.push(s1.add(&s2));
        }
    }
    // fifth row (v2, -lam v2 - mu v1, v1)
    let v1 = MultiPoly::var(f.clone(), vars.clone(), 8);
    let v2 = MultiPoly::var(f.clone(), vars.clone(), 9);
    entries.push(v2.clone());
    entries.push(lam.mul(&v2).add(&mu.mul(&v1)).neg());
    entries.push(v1);
    let matrix = PolyMatrix::new(5, 3, entries)?;
    let equations = matrix.maximal_minors(3)?;
    // parametrization with lam, mu symbolic
    let xv = xring(&["lam", "mu"]);
    let x = |i: usize| MultiPoly::var(f.clone(), xv.clone(), i);
    let (lam_x, mu_x) = (x(3), x(4));
    let mut images = Vec::new();
    for p in std4.points() {
        let coeffs = projection_row_coeffs(p);
        let [s1, s2] = row_images(&coeffs, &f, &xv);
        images.push(s1);
        images.push(s2);
    }
    // fifth block: (x1 - lam x2 : mu x2 - x3)
    images.push(x(0).sub(&lam_x.mul(&x(1))));
    images.push(mu_x.mul(&x(1)).sub(&x(2)));
    images.push(lam_x);
    images.push(mu_x);
    let vanishing = check_vanishing(&equations, &images)?;
    Ok(DeterminantalPresentation {
        blocks: BLOCK_NAMES.iter().map(|s| s.to_string()).collect(),
        matrix,
        equations,
        syzygy_matrix: None,
        checks: PresentationChecks {
            complex: true,
            syzygy: true,
            parametrization_vanishing: vanishing,
        },
    })
}

/// One term of a resolution shape: a rank and the twist multidegrees of its
/// summands (one vector per summand, one entry per projective-line factor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexTerm {
    pub rank: usize,
    pub summands: Vec<Vec<i64>>,
}

/// Resolution bookkeeping for the ideal of maximal minors, from the leftmost
/// term to the structure sheaf:
/// k=3 a single determinant, k=4 the length-two shape (3, 4, 1),
/// k=5 the shape (6, 15, 10, 1). Ranks and twists only; the first
/// differential of the k=4 shape is verified through the degree-5
/// presentation, deeper exactness is not checked here.
pub fn eagon_northcott_terms(k: usize) -> Result<Vec<ComplexTerm>> {
    if !(3..=5).contains(&k) {
        return Err(Error::InvalidArgument(
            "resolution shapes are tabulated for 3 to 5 centers".into(),
        ));
    }
    let all_minus: Vec<i64> = vec![-1; k];
    let unit = ComplexTerm {
        rank: 1,
        summands: vec![vec![0; k]],
    };
    let term_with_one_zero = |copies: usize| -> ComplexTerm {
        let mut summands = Vec::new();
        for j in 0..k {
            let mut v = all_minus.clone();
            v[j] = 0;
            for _ in 0..copies {
                summands.push(v.clone());
            }
        }
        ComplexTerm {
            rank: k * copies,
            summands,
        }
    };
    Ok(match k {
        3 => vec![
            ComplexTerm {
                rank: 1,
                summands: vec![all_minus],
            },
            unit,
        ],
        4 => vec![
            ComplexTerm {
                rank: 3,
                summands: vec![all_minus.clone(); 3],
            },
            term_with_one_zero(1),
            unit,
        ],
        5 => {
            let mut pairs = Vec::new();
            for hk in combinations(5, 2) {
                let mut v = all_minus.clone();
                v[hk[0]] = 0;
                v[hk[1]] = 0;
                pairs.push(v);
            }
            vec![
                ComplexTerm {
                    rank: 6,
                    summands: vec![all_minus.clone(); 6],
                },
                term_with_one_zero(3),
                ComplexTerm {
                    rank: 10,
                    summands: pairs,
                },
                unit,
            ]
        }
        _ => unreachable!(),
    })
}

/// Fifteen-variable ring for the five pencils with third coordinates:
/// v, w, z, t as in `pencil_vars` plus the conic pencil u with
/// u = (x1 y1, x2 y2, x3 y3) and u1 + u2 + u3 = 0.
pub fn five_pencil_vars() -> Arc<Vec<String>> {
    varset(&[
        "v1", "v2", "v3", "w1", "w2", "w3", "z1", "z2", "z3", "t1", "t2", "t3", "u1", "u2",
        "u3",
    ])
}

/// Ten-variable ring of the five pencils with third coordinates eliminated.
pub fn five_block_vars() -> Arc<Vec<String>> {
    varset(&[
        "v1", "v2", "w1", "w2", "z1", "z2", "t1", "t2", "u1", "u2",
    ])
}

/// Plane images of the fifteen five-pencil coordinates.
pub fn five_pencil_parametrization() -> Vec<MultiPoly> {
    let xv = xring(&[]);
    let f = FieldSpec::Q;
    let x = |i: usize| MultiPoly::var(f.clone(), xv.clone(), i);
    let y1 = x(2).sub(&x(1));
    let y2 = x(0).sub(&x(2));
    let y3 = x(1).sub(&x(0));
    let mut images = pencil_parametrization();
    images.push(x(0).mul(&y1));
    images.push(x(1).mul(&y2));
    images.push(x(2).mul(&y3));
    images
}

/// One of the ten equations of the five-pencil embedding.
#[derive(Debug, Clone)]
pub struct FiveBlockEquation {
    /// Indices of the three blocks (0..5 = v, w, z, t, u).
    pub blocks: [usize; 3],
    /// Binomial form in the fifteen-variable pencil ring.
    pub binomial: MultiPoly,
    /// The same equation with third coordinates eliminated (ten variables).
    pub reduced: MultiPoly,
}

fn five_pencil_block_images() -> Vec<[MultiPoly; 3]> {
    let params = five_pencil_parametrization();
    (0..5)
        .map(|b| {
            [
                params[3 * b].clone(),
                params[3 * b + 1].clone(),
                params[3 * b + 2].clone(),
            ]
        })
        .collect()
}

/// Elimination images: fifteen pencil coordinates in terms of the ten
/// reduced ones.
fn elimination_images() -> Vec<MultiPoly> {
    let target = five_block_vars();
    let f = FieldSpec::Q;
    let v = |i: usize| MultiPoly::var(f.clone(), target.clone(), i);
    vec![
        v(0),
        v(1),
        v(1).sub(&v(0)),
        v(2),
        v(3),
        v(3).sub(&v(2)),
        v(4),
        v(5),
        v(5).sub(&v(4)),
        v(6),
        v(7),
        v(6).neg().sub(&v(7)),
        v(8),
        v(9),
        v(8).neg().sub(&v(9)),
    ]
}

/// Derive, for every coordinate projection onto three of the five pencils,
/// the trilinear equation of the image: searched as a binomial relation
/// between products of pencil coordinates, then cross-checked against the
/// one-dimensional kernel of the product map in the reduced coordinates.
pub fn dp5_ten_binomial_equations() -> Result<Vec<FiveBlockEquation>> {
    let f = FieldSpec::Q;
    let vars15 = five_pencil_vars();
    let block_images = five_pencil_block_images();
    let elim = elimination_images();
    let mut out = Vec::new();
    for subset in combinations(5, 3) {
        let blocks = [subset[0], subset[1], subset[2]];
        // search for a binomial: two coordinate products with proportional
        // plane images, in lexicographic order of coordinate triples
        let mut found: Option<(Vec<usize>, Vec<usize>, Scalar)> = None;
        'search: for a in 0..3usize {
            for b in 0..3usize {
                for c in 0..3usize {
                    let m1 = vec![a, b, c];
                    let p1 = block_images[blocks[0]][a]
                        .mul(&block_images[blocks[1]][b])
                        .mul(&block_images[blocks[2]][c]);
                    if p1.is_zero() {
                        continue;
                    }
                    for a2 in 0..3usize {
                        for b2 in 0..3usize {
                            for c2 in 0..3usize {
                                let m2 = vec![a2, b2, c2];
                                if m2 <= m1 {
                                    continue;
                                }
                                let p2 = block_images[blocks[0]][a2]
                                    .mul(&block_images[blocks[1]][b2])
                                    .mul(&block_images[blocks[2]][c2]);
                                if p2.is_zero() || !p1.proportional_to(&p2) {
                                    continue;
                                }
                                // ratio rho with p1 = rho * p2
                                let (m0, c0) = p1.leading_term().expect("nonzero");
                                let rho = c0.div(&p2.coefficient(&m0.0)).expect("ratio");
                                found = Some((m1, m2, rho));
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
        let (m1, m2, rho) = found.ok_or_else(|| {
            Error::VerificationFailed(format!(
                "no binomial relation found for projection {blocks:?}"
            ))
        })?;
        let term = |ids: &[usize]| -> MultiPoly {
            let mut e = vec![0u32; vars15.len()];
            for (pos, &coord) in ids.iter().enumerate() {
                e[3 * blocks[pos] + coord] += 1;
            }
            MultiPoly::from_terms(f.clone(), vars15.clone(), [(e, Scalar::from_int(1))])
                .unwrap()
        };
        let binomial = term(&m1).sub(&term(&m2).scale(&rho));
        // vanishing under the plane parametrization
        if !binomial
            .substitute(&five_pencil_parametrization())?
            .is_zero()
        {
            return Err(Error::VerificationFailed(format!(
                "binomial for projection {blocks:?} does not vanish on the parametrization"
            )));
        }
        let reduced = binomial.substitute(&elim)?;
        if reduced.is_zero() {
            return Err(Error::VerificationFailed(format!(
                "binomial for projection {blocks:?} collapses under elimination"
            )));
        }
        // cross-check: the kernel of the product map in reduced coordinates
        // is one-dimensional and spanned by the reduced equation
        verify_unique_trilinear_relation(&blocks, &reduced)?;
        out.push(FiveBlockEquation {
            blocks,
            binomial,
            reduced,
        });
    }
    Ok(out)
}

/// The ten reduced trilinear equations of the five-pencil embedding.
pub fn dp5_ten_equations() -> Result<Vec<MultiPoly>> {
    Ok(dp5_ten_binomial_equations()?
        .into_iter()
        .map(|e| e.reduced)
        .collect())
}

/// Check that the space of multidegree (1,1,1) forms on three chosen blocks
/// vanishing on the surface is one-dimensional and spanned by `candidate`.
fn verify_unique_trilinear_relation(blocks: &[usize; 3], candidate: &MultiPoly) -> Result<()> {
    let f = FieldSpec::Q;
    let params = five_pencil_parametrization();
    // reduced coordinate i corresponds to pencil coordinate map[i]
    let reduced_images: Vec<MultiPoly> = {
        let map = [0usize, 1, 3, 4, 6, 7, 9, 10, 12, 13];
        map.iter().map(|&i| params[i].clone()).collect()
    };
    // the eight products of reduced coordinates, one from each block
    let mut products = Vec::new();
    let mut exponents = Vec::new();
    for a in 0..2usize {
        for b in 0..2usize {
            for c in 0..2usize {
                let ia = 2 * blocks[0] + a;
                let ib = 2 * blocks[1] + b;
                let ic = 2 * blocks[2] + c;
                products.push(
                    reduced_images[ia]
                        .mul(&reduced_images[ib])
                        .mul(&reduced_images[ic]),
                );
                exponents.push((ia, ib, ic));
            }
        }
    }
    // matrix: rows = plane monomials, columns = the eight products
    let deg = products
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0);
    let monos = crate::poly::monomials_of_degree(3, deg);
    let index: std::collections::BTreeMap<Vec<u32>, usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut mat = vec![vec![f.zero(); products.len()]; monos.len()];
    for (col, p) in products.iter().enumerate() {
        for (m, c) in p.terms() {
            mat[index[&m.0]][col] = c.clone();
        }
    }
    let kernel = linalg::kernel_basis(&mat, &f);
    if kernel.len() != 1 {
        return Err(Error::VerificationFailed(format!(
            "projection {blocks:?}: relation space has dimension {}",
            kernel.len()
        )));
    }
    // assemble the kernel vector as a polynomial and compare with candidate
    let ten = five_block_vars();
    let mut gen = MultiPoly::zero(f.clone(), ten.clone());
    for (col, coeff) in kernel[0].iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (ia, ib, ic) = exponents[col];
        let mut e = vec![0u32; 10];
        e[ia] += 1;
        e[ib] += 1;
        e[ic] += 1;
        gen = gen.add(
            &MultiPoly::from_terms(f.clone(), ten.clone(), [(e, coeff.clone())]).unwrap(),
        );
    }
    if !gen.proportional_to(candidate) {
        return Err(Error::VerificationFailed(format!(
            "projection {blocks:?}: binomial does not span the relation space"
        )));
    }
    Ok(())
}
