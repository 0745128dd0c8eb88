//! Singular Kummer covers of the plane branched on a line configuration and
//! the first-order deformation machinery attached to them.
//!
//! For a normalized configuration `l_0 = x0, l_1 = x1, l_2 = x2, l_3, ...,
//! l_r` and exponent `n`, the cover lives in projective r-space with
//! homogeneous equations
//!
//! ```text
//! F_j = l_j(z0^n, z1^n, z2^n) - z_j^n,   3 <= j <= r.
//! ```
//!
//! First-order deformations perturb each `F_j` by a degree-n form `Phi_j`.
//! Two exact linear subspaces of the tuple space `(degree-n forms)^{r-2}`,
//! taken modulo the componentwise span of `{F_3..F_r}`, are computed:
//!
//! - `T`: deformations induced by moving the ambient space, i.e. the image of
//!   `(a_0..a_r) |-> (sum_k dF_j/dz_k * a_k)_j` over vectors of linear forms;
//! - `E`: tuples satisfying, for every singular point of the configuration
//!   and every relation `l_j = lambda*l_i + mu*l_k` among concurrent lines,
//!   the local condition
//!
//! ```text
//! Phi_j - lambda*Phi_i - mu*Phi_k  =  u*z_j^{n-1} - lambda*v*z_i^{n-1} - mu*w*z_k^{n-1}
//! ```
//!
//!   (modulo span{F}) for some linear forms `u, v, w`. The sign of the
//!   `mu`-term follows from the exact identity
//!   `F_j - lambda*F_i - mu*F_k = lambda*z_i^n + mu*z_k^n - z_j^n`,
//!   which is verified in the tests rather than assumed.
//!
//! `E` is cut out by conditions every equisingular deformation must satisfy,
//! so `E` contains the honest equisingular space; `E` being contained in `T`
//! therefore certifies that all equisingular first-order deformations are
//! trivial. The converse direction is never claimed.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::config::{normalize_basis, Configuration, ProjLine};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::matrix::PolyMatrix;
use crate::poly::{monomials_of_degree, MultiPoly};
use crate::scalar::{FieldSpec, Scalar};

/// Default cap on the number of coefficient unknowns in the certificate.
pub const DEFAULT_MAX_UNKNOWNS: usize = 20_000;

/// A singular Kummer cover: normalized configuration, exponent, equations.
#[derive(Debug, Clone)]
pub struct KummerCover {
    cfg: Configuration,
    n: u32,
    zvars: Arc<Vec<String>>,
    equations: Vec<MultiPoly>,
}

/// A collinearity relation `l_j = lambda*l_i + mu*l_k` at a singular point.
#[derive(Debug, Clone)]
pub struct PointRelation {
    /// Index into `Configuration::points`.
    pub point_index: usize,
    pub j: usize,
    pub i: usize,
    pub k: usize,
    pub lambda: Scalar,
    pub mu: Scalar,
}

/// Outcome of the triviality certificate. All dimensions are taken in the
/// quotient of the tuple space by the componentwise span of the equations.
#[derive(Debug, Clone)]
pub struct DeformationReport {
    pub n: u32,
    pub ambient_dim: usize,
    pub dim_t: usize,
    pub dim_e: usize,
    pub dim_e_plus_t: usize,
    pub contained: bool,
    pub relation_count: usize,
    /// A representative of `E` outside `T` when containment fails.
    pub witness: Option<Vec<MultiPoly>>,
    /// One-sided soundness statement, included in every report.
    pub soundness_note: &'static str,
}

pub const SOUNDNESS_NOTE: &str = "E is cut out by necessary conditions for equisingularity, \
so E contains every first-order equisingular deformation; E contained in T certifies that all \
equisingular deformations are trivial. Failure of containment is informational, not a disproof.";

impl KummerCover {
    pub fn cfg(&self) -> &Configuration {
        &self.cfg
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Ambient projective dimension r (one less than the number of lines).
    pub fn r(&self) -> usize {
        self.cfg.line_count() - 1
    }

    pub fn zvars(&self) -> &Arc<Vec<String>> {
        &self.zvars
    }

    /// The defining equations `F_3 .. F_r`.
    pub fn equations(&self) -> &[MultiPoly] {
        &self.equations
    }
}

fn is_coordinate_line(line: &ProjLine, index: usize) -> bool {
    line.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| if i == index { c.is_one() } else { c.is_zero() })
}

/// Build the cover equations for a normalized configuration.
pub fn cover_equations(cfg: &Configuration, n: u32) -> Result<KummerCover> {
    if n < 1 {
        return Err(Error::InvalidArgument("exponent must be at least 1".into()));
    }
    if cfg.line_count() < 4 {
        return Err(Error::InvalidConfiguration(
            "need at least 4 lines to form a cover with equations".into(),
        ));
    }
    for idx in 0..3 {
        if !is_coordinate_line(&cfg.lines()[idx], idx) {
            return Err(Error::InvalidConfiguration(format!(
                "configuration is not normalized: line {idx} is not the coordinate line"
            )));
        }
    }
    let r = cfg.line_count() - 1;
    let names: Vec<String> = (0..=r).map(|i| format!("z{i}")).collect();
    let zvars = Arc::new(names);
    let field = cfg.field().clone();
    let mut equations = Vec::new();
    for j in 3..=r {
        let coeffs = cfg.lines()[j].coeffs();
        let mut f = MultiPoly::zero(field.clone(), zvars.clone());
        for c in 0..3 {
            if coeffs[c].is_zero() {
                continue;
            }
            f = f.add(&MultiPoly::monomial_term(
                field.clone(),
                zvars.clone(),
                c,
                n,
                coeffs[c].clone(),
            ));
        }
        f = f.sub(&MultiPoly::monomial_term(
            field.clone(),
            zvars.clone(),
            j,
            n,
            field.one(),
        ));
        equations.push(f);
    }
    Ok(KummerCover {
        cfg: cfg.clone(),
        n,
        zvars,
        equations,
    })
}

/// Normalize a configuration and build the cover in one step.
pub fn cover_from_configuration(cfg: &Configuration, n: u32) -> Result<KummerCover> {
    let normalized = normalize_basis(cfg)?;
    cover_equations(&normalized, n)
}

/// The (r-2) x (r+1) matrix of gradients: row j is grad F_j.
pub fn gradient_matrix(cover: &KummerCover) -> PolyMatrix {
    let r = cover.r();
    let mut entries = Vec::new();
    for f in &cover.equations {
        for k in 0..=r {
            entries.push(f.derivative(k));
        }
    }
    PolyMatrix::new(cover.equations.len(), r + 1, entries).expect("gradient matrix")
}

/// For each singular point with incident lines `c_1 < c_2 < ... < c_v`, the
/// v-2 relations expressing `l_{c_t}` (t >= 3) through `l_{c_1}, l_{c_2}`.
pub fn point_relations(cover: &KummerCover) -> Vec<PointRelation> {
    let cfg = &cover.cfg;
    let field = cfg.field().clone();
    let mut out = Vec::new();
    for &pi in cfg.singular_points() {
        let incident = &cfg.points()[pi].lines;
        let (i, k) = (incident[0], incident[1]);
        let li = cfg.lines()[i].coeffs();
        let lk = cfg.lines()[k].coeffs();
        for &j in &incident[2..] {
            let lj = cfg.lines()[j].coeffs();
            let a: Vec<Vec<Scalar>> = (0..3)
                .map(|c| vec![li[c].clone(), lk[c].clone()])
                .collect();
            let b: Vec<Scalar> = (0..3).map(|c| lj[c].clone()).collect();
            let sol = linalg::solve(&a, &b, &field)
                .expect("concurrent lines admit a linear relation");
            let (lambda, mu) = (sol[0].clone(), sol[1].clone());
            debug_assert!(!lambda.is_zero() && !mu.is_zero());
            out.push(PointRelation {
                point_index: pi,
                j,
                i,
                k,
                lambda,
                mu,
            });
        }
    }
    out
}

/// `Phi_j = sum_k dF_j/dz_k * a_k` for a vector of linear forms `a`.
pub fn trivial_deformation(cover: &KummerCover, a: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    let r = cover.r();
    if a.len() != r + 1 {
        return Err(Error::VariableMismatch {
            expected: r + 1,
            got: a.len(),
        });
    }
    for form in a {
        let linear = form.is_zero()
            || (form.is_homogeneous() && form.total_degree() == Some(1));
        if !linear {
            return Err(Error::InvalidArgument(
                "deformation directions must be homogeneous linear forms".into(),
            ));
        }
    }
    let mut out = Vec::new();
    for f in &cover.equations {
        let mut phi = MultiPoly::zero(cover.cfg.field().clone(), cover.zvars.clone());
        for (k, ak) in a.iter().enumerate() {
            if ak.is_zero() {
                continue;
            }
            phi = phi.add(&f.derivative(k).mul(ak));
        }
        out.push(phi);
    }
    Ok(out)
}

/// The combination `Phi_j - lambda*Phi_i - mu*Phi_k` for a relation, with
/// `Phi` components of coordinate lines (indices < 3) identically zero.
pub fn relation_combination(rel: &PointRelation, phi: &[MultiPoly]) -> MultiPoly {
    let pick = |idx: usize| -> Option<&MultiPoly> {
        if idx >= 3 {
            Some(&phi[idx - 3])
        } else {
            None
        }
    };
    let mut acc = phi[rel.j - 3].clone();
    if let Some(pi) = pick(rel.i) {
        acc = acc.sub(&pi.scale(&rel.lambda));
    }
    if let Some(pk) = pick(rel.k) {
        acc = acc.sub(&pk.scale(&rel.mu));
    }
    acc
}

struct CoefficientSpace {
    monomials: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
}

impl CoefficientSpace {
    fn new(nvars: usize, degree: u32) -> CoefficientSpace {
        let monomials = monomials_of_degree(nvars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        CoefficientSpace { monomials, index }
    }

    fn dim(&self) -> usize {
        self.monomials.len()
    }

    fn vectorize(&self, p: &MultiPoly, field: &FieldSpec) -> Vec<Scalar> {
        let mut v = vec![field.zero(); self.dim()];
        for (m, c) in p.terms() {
            let idx = *self
                .index
                .get(&m.0)
                .expect("polynomial outside the fixed-degree space");
            v[idx] = c.clone();
        }
        v
    }

    fn devectorize(
        &self,
        v: &[Scalar],
        field: &FieldSpec,
        vars: &Arc<Vec<String>>,
    ) -> MultiPoly {
        MultiPoly::from_terms(
            field.clone(),
            vars.clone(),
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.monomials[i].clone(), c.clone())),
        )
        .expect("vector within the fixed-degree space")
    }
}

fn vectorize_tuple(
    space: &CoefficientSpace,
    phi: &[MultiPoly],
    field: &FieldSpec,
) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(space.dim() * phi.len());
    for p in phi {
        out.extend(space.vectorize(p, field));
    }
    out
}

/// The exact triviality certificate. Constructs `T` and `E` as above and
/// decides the containment `E` in `T` by rank computations.
pub fn certify_triviality(cover: &KummerCover, max_unknowns: usize) -> Result<DeformationReport> {
    if cover.n < 3 {
        return Err(Error::InvalidArgument(
            "the certificate requires exponent at least 3".into(),
        ));
    }
    if cover.cfg.m() == 0 {
        return Err(Error::InvalidConfiguration(
            "configuration has no singular points".into(),
        ));
    }
    let field = cover.cfg.field().clone();
    let r = cover.r();
    let nf = r - 2;
    let n = cover.n;
    let space = CoefficientSpace::new(r + 1, n);
    let d = space.dim();
    let nphi = nf * d;
    if nphi > max_unknowns {
        return Err(Error::SizeGuardrail(nphi, max_unknowns));
    }

    // The degree-n piece of the ideal generated by the equations is their
    // linear span; verify the generators are independent.
    let f_vecs: Vec<Vec<Scalar>> = cover
        .equations
        .iter()
        .map(|f| space.vectorize(f, &field))
        .collect();
    {
        let mut ech = Echelon::new(d);
        for fv in &f_vecs {
            ech.insert(fv);
        }
        if ech.rank() != nf {
            return Err(Error::VerificationFailed(
                "cover equations are linearly dependent".into(),
            ));
        }
    }

    let relations = point_relations(cover);
    let aux_per_rel = 3 * (r + 1) + nf;
    let total_cols = nphi + relations.len() * aux_per_rel;
    let total_rows = relations.len() * d;

    // One row per (relation, degree-n monomial):
    //   [Phi_j - lambda Phi_i - mu Phi_k
    //      - u z_j^{n-1} + lambda v z_i^{n-1} + mu w z_k^{n-1}
    //      - sum_s c_s F_s]  coefficient = 0.
    let mut mat: Vec<Vec<Scalar>> = Vec::with_capacity(total_rows);
    for _ in 0..total_rows {
        mat.push(vec![field.zero(); total_cols]);
    }
    let shifted = |var: usize, t: usize| -> usize {
        // index of the monomial z_t * z_var^{n-1}
        let mut e = vec![0u32; r + 1];
        e[var] += n - 1;
        e[t] += 1;
        *space.index.get(&e).expect("degree-n monomial")
    };
    let one = field.one();
    for (ridx, rel) in relations.iter().enumerate() {
        let row0 = ridx * d;
        let base = nphi + ridx * aux_per_rel;
        for m in 0..d {
            mat[row0 + m][(rel.j - 3) * d + m] = one.clone();
            if rel.i >= 3 {
                let col = (rel.i - 3) * d + m;
                mat[row0 + m][col] = mat[row0 + m][col].sub(&rel.lambda);
            }
            if rel.k >= 3 {
                let col = (rel.k - 3) * d + m;
                mat[row0 + m][col] = mat[row0 + m][col].sub(&rel.mu);
            }
        }
        for t in 0..=r {
            // u-column t
            let m = shifted(rel.j, t);
            let col = base + t;
            mat[row0 + m][col] = mat[row0 + m][col].sub(&one);
            // v-column t
            let m = shifted(rel.i, t);
            let col = base + (r + 1) + t;
            mat[row0 + m][col] = mat[row0 + m][col].add(&rel.lambda);
            // w-column t
            let m = shifted(rel.k, t);
            let col = base + 2 * (r + 1) + t;
            mat[row0 + m][col] = mat[row0 + m][col].add(&rel.mu);
        }
        for (s, fv) in f_vecs.iter().enumerate() {
            let col = base + 3 * (r + 1) + s;
            for (m, c) in fv.iter().enumerate() {
                if !c.is_zero() {
                    mat[row0 + m][col] = mat[row0 + m][col].sub(c);
                }
            }
        }
    }

    let kernel = linalg::kernel_basis(&mat, &field);
    drop(mat);

    // Componentwise span of the equations inside the tuple space.
    let mut ech_f = Echelon::new(nphi);
    for jj in 0..nf {
        for fv in &f_vecs {
            let mut v = vec![field.zero(); nphi];
            v[jj * d..(jj + 1) * d].clone_from_slice(fv);
            ech_f.insert(&v);
        }
    }
    let dim_f = ech_f.rank();
    let ambient_dim = nphi - dim_f;

    // T: image of the trivial-deformation map, over the basis a = e_k * z_t.
    let mut ech_t = ech_f.clone();
    for k in 0..=r {
        for t in 0..=r {
            let mut a: Vec<MultiPoly> = (0..=r)
                .map(|_| MultiPoly::zero(field.clone(), cover.zvars.clone()))
                .collect();
            a[k] = MultiPoly::var(field.clone(), cover.zvars.clone(), t);
            let phi = trivial_deformation(cover, &a)?;
            ech_t.insert(&vectorize_tuple(&space, &phi, &field));
        }
    }
    let dim_t = ech_t.rank() - dim_f;

    // E: projections of the solution space onto the Phi coordinates.
    let mut ech_e = ech_f.clone();
    let mut ech_et = ech_t.clone();
    let mut witness_vec: Option<Vec<Scalar>> = None;
    for sol in &kernel {
        let phi_part = &sol[..nphi];
        ech_e.insert(phi_part);
        let grew = ech_et.insert(phi_part);
        if grew && witness_vec.is_none() {
            witness_vec = Some(phi_part.to_vec());
        }
    }
    let dim_e = ech_e.rank() - dim_f;
    let dim_e_plus_t = ech_et.rank() - dim_f;
    let contained = dim_e_plus_t == dim_t;

    let witness = if contained {
        None
    } else {
        witness_vec.map(|v| {
            (0..nf)
                .map(|jj| {
                    space.devectorize(&v[jj * d..(jj + 1) * d], &field, &cover.zvars)
                })
                .collect()
        })
    };

    Ok(DeformationReport {
        n,
        ambient_dim,
        dim_t,
        dim_e,
        dim_e_plus_t,
        contained,
        relation_count: relations.len(),
        witness,
        soundness_note: SOUNDNESS_NOTE,
    })
}

/// Check that a tuple `Phi` satisfies every relation condition modulo
/// span{F}: used to verify that trivial deformations lie in `E`.
pub fn satisfies_relation_system(cover: &KummerCover, phi: &[MultiPoly]) -> Result<bool> {
    let field = cover.cfg.field().clone();
    let r = cover.r();
    let n = cover.n;
    let space = CoefficientSpace::new(r + 1, n);
    let f_vecs: Vec<Vec<Scalar>> = cover
        .equations
        .iter()
        .map(|f| space.vectorize(f, &field))
        .collect();
    for rel in point_relations(cover) {
        let combo = relation_combination(&rel, phi);
        let mut ech = Echelon::new(space.dim());
        for fv in &f_vecs {
            ech.insert(fv);
        }
        for var in [rel.j, rel.i, rel.k] {
            for t in 0..=r {
                let gen = MultiPoly::monomial_term(
                    field.clone(),
                    cover.zvars.clone(),
                    var,
                    n - 1,
                    field.one(),
                )
                .mul(&MultiPoly::var(field.clone(), cover.zvars.clone(), t));
                ech.insert(&space.vectorize(&gen, &field));
            }
        }
        if !ech.contains(&space.vectorize(&combo, &field)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::catalog;

    fn cq_cover(n: u32) -> KummerCover {
        let cfg = catalog("complete-quadrangle").unwrap();
        cover_equations(&cfg, n).unwrap()
    }

    fn zpoly(cover: &KummerCover, terms: &[(Vec<u32>, i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            FieldSpec::Q,
            cover.zvars().clone(),
            terms
                .iter()
                .map(|(e, c)| (e.clone(), Scalar::from_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn cq_cover_equations_n5() {
        let cover = cq_cover(5);
        // With the canonical line scaling (leading coefficient one) the
        // fourth line is stored as x0 - x2, so:
        // F3 = z1^5 - z2^5 - z3^5, F4 = z0^5 - z2^5 - z4^5, F5 = z0^5 - z1^5 - z5^5.
        // F4 differs by an overall sign of the line form from the variant
        // built on x2 - x0; the deformation spaces are unaffected.
        let e = |i: usize| -> Vec<u32> {
            let mut v = vec![0u32; 6];
            v[i] = 5;
            v
        };
        let f3 = zpoly(&cover, &[(e(1), 1), (e(2), -1), (e(3), -1)]);
        let f4 = zpoly(&cover, &[(e(0), 1), (e(2), -1), (e(4), -1)]);
        let f5 = zpoly(&cover, &[(e(0), 1), (e(1), -1), (e(5), -1)]);
        assert_eq!(cover.equations(), &[f3, f4, f5]);
    }

    #[test]
    fn cq_cover_n1_is_linear() {
        let cover = cq_cover(1);
        for f in cover.equations() {
            assert_eq!(f.total_degree(), Some(1));
        }
        assert_eq!(cover.equations().len(), 3);
    }

    #[test]
    fn four_general_lines_give_one_equation() {
        let lines = vec![
            ProjLine::from_ints([1, 0, 0]),
            ProjLine::from_ints([0, 1, 0]),
            ProjLine::from_ints([0, 0, 1]),
            ProjLine::from_ints([1, 2, 3]),
        ];
        let cfg = Configuration::analyze(FieldSpec::Q, lines).unwrap();
        let cover = cover_equations(&cfg, 2).unwrap();
        assert_eq!(cover.equations().len(), 1);
        assert_eq!(cover.equations()[0].total_degree(), Some(2));
    }

    #[test]
    fn unnormalized_configuration_rejected() {
        let lines = vec![
            ProjLine::from_ints([1, 1, 0]),
            ProjLine::from_ints([0, 1, 0]),
            ProjLine::from_ints([0, 0, 1]),
            ProjLine::from_ints([1, 2, 3]),
        ];
        let cfg = Configuration::analyze(FieldSpec::Q, lines).unwrap();
        assert!(cover_equations(&cfg, 3).is_err());
    }

    #[test]
    fn gradient_matrix_rows() {
        let cover = cq_cover(3);
        let grad = gradient_matrix(&cover);
        assert_eq!((grad.rows(), grad.cols()), (3, 6));
        // row for F3 = z1^3 - z2^3 - z3^3: (0, 3z1^2, -3z2^2, -3z3^2, 0, 0)
        let sq = |i: usize, c: i64| {
            let mut e = vec![0u32; 6];
            e[i] = 2;
            zpoly(&cover, &[(e, c)])
        };
        assert!(grad.entry(0, 0).is_zero());
        assert_eq!(grad.entry(0, 1), &sq(1, 3));
        assert_eq!(grad.entry(0, 2), &sq(2, -3));
        assert_eq!(grad.entry(0, 3), &sq(3, -3));
        assert!(grad.entry(0, 4).is_zero());
        assert!(grad.entry(0, 5).is_zero());
    }

    #[test]
    fn euler_identity() {
        // grad(F) . z = n * F for homogeneous degree-n equations
        for n in [1u32, 3, 4] {
            let cover = cq_cover(n);
            let grad = gradient_matrix(&cover);
            for (jj, f) in cover.equations().iter().enumerate() {
                let mut acc = MultiPoly::zero(FieldSpec::Q, cover.zvars().clone());
                for k in 0..=cover.r() {
                    let zk = MultiPoly::var(FieldSpec::Q, cover.zvars().clone(), k);
                    acc = acc.add(&grad.entry(jj, k).mul(&zk));
                }
                assert_eq!(acc, f.scale(&Scalar::from_int(n as i64)));
            }
        }
    }

    #[test]
    fn cq_point_relations() {
        let cover = cq_cover(3);
        let rels = point_relations(&cover);
        // four triple points, each contributing v - 2 = 1 relation
        assert_eq!(rels.len(), 4);
        // the relation at (1:0:0): l3 = 1*l1 + (-1)*l2
        let rel = rels
            .iter()
            .find(|rel| (rel.i, rel.k, rel.j) == (1, 2, 3))
            .expect("relation through (1:0:0)");
        assert_eq!(rel.lambda, Scalar::from_int(1));
        assert_eq!(rel.mu, Scalar::from_int(-1));
    }

    #[test]
    fn valency_five_point_yields_three_relations() {
        let lines = vec![
            ProjLine::from_ints([1, 0, 0]),
            ProjLine::from_ints([0, 1, 0]),
            ProjLine::from_ints([0, 0, 1]),
            ProjLine::from_ints([1, -1, 0]),
            ProjLine::from_ints([1, 1, 0]),
            ProjLine::from_ints([1, 2, 0]),
        ];
        let cfg = Configuration::analyze(FieldSpec::Q, lines).unwrap();
        let cover = cover_equations(&cfg, 3).unwrap();
        // (0:0:1) lies on five of the six lines
        let rels = point_relations(&cover);
        let at_center: Vec<_> = rels
            .iter()
            .filter(|r| {
                cfg.points()[r.point_index].point == crate::config::ProjPoint::from_ints([0, 0, 1])
            })
            .collect();
        assert_eq!(at_center.len(), 3);
    }

    #[test]
    fn relation_sign_identity() {
        // F_j - lambda F_i - mu F_k = lambda z_i^n + mu z_k^n - z_j^n exactly,
        // with F := l(z^n) - z^n and F identically zero on coordinate lines.
        for n in [3u32, 4] {
            let cover = cq_cover(n);
            let zero = MultiPoly::zero(FieldSpec::Q, cover.zvars().clone());
            let f = |idx: usize| -> MultiPoly {
                if idx >= 3 {
                    cover.equations()[idx - 3].clone()
                } else {
                    zero.clone()
                }
            };
            for rel in point_relations(&cover) {
                let lhs = f(rel.j)
                    .sub(&f(rel.i).scale(&rel.lambda))
                    .sub(&f(rel.k).scale(&rel.mu));
                let mono = |i: usize, c: &Scalar| {
                    MultiPoly::monomial_term(
                        FieldSpec::Q,
                        cover.zvars().clone(),
                        i,
                        n,
                        c.clone(),
                    )
                };
                let rhs = mono(rel.i, &rel.lambda)
                    .add(&mono(rel.k, &rel.mu))
                    .sub(&mono(rel.j, &Scalar::from_int(1)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trivial_deformation_euler_direction() {
        // a_k = z_k gives Phi_j = n F_j
        let cover = cq_cover(3);
        let a: Vec<MultiPoly> = (0..=cover.r())
            .map(|k| MultiPoly::var(FieldSpec::Q, cover.zvars().clone(), k))
            .collect();
        let phi = trivial_deformation(&cover, &a).unwrap();
        for (p, f) in phi.iter().zip(cover.equations()) {
            assert_eq!(p, &f.scale(&Scalar::from_int(3)));
        }
    }

    #[test]
    fn trivial_deformation_single_direction() {
        // CQ n=3, a = (z1, 0, ..., 0): Phi_j = z1 * dF_j/dz0, so Phi3 = 0 and
        // Phi4, Phi5 are +-3 z0^2 z1 with signs fixed by the stored line forms
        // (here F4 = z0^3 - z2^3 - z4^3 after canonical scaling).
        let cover = cq_cover(3);
        let mut a: Vec<MultiPoly> = (0..=cover.r())
            .map(|_| MultiPoly::zero(FieldSpec::Q, cover.zvars().clone()))
            .collect();
        a[0] = MultiPoly::var(FieldSpec::Q, cover.zvars().clone(), 1);
        let phi = trivial_deformation(&cover, &a).unwrap();
        let z0sq_z1 = |c: i64| zpoly(&cover, &[(vec![2, 1, 0, 0, 0, 0], c)]);
        assert!(phi[0].is_zero());
        assert_eq!(phi[1], z0sq_z1(3));
        assert_eq!(phi[2], z0sq_z1(3));
    }

    #[test]
    fn trivial_deformation_rejects_nonlinear() {
        let cover = cq_cover(3);
        let mut a: Vec<MultiPoly> = (0..=cover.r())
            .map(|_| MultiPoly::zero(FieldSpec::Q, cover.zvars().clone()))
            .collect();
        a[0] = MultiPoly::var(FieldSpec::Q, cover.zvars().clone(), 0).pow(2);
        assert!(trivial_deformation(&cover, &a).is_err());
    }

    #[test]
    fn certificate_rejects_small_exponent() {
        let cover = cq_cover(2);
        assert!(matches!(
            certify_triviality(&cover, DEFAULT_MAX_UNKNOWNS),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn certificate_guardrail() {
        let cover = cq_cover(3);
        assert!(matches!(
            certify_triviality(&cover, 10),
            Err(Error::SizeGuardrail(_, _))
        ));
    }

    #[test]
    fn certify_cq_n3() {
        let cover = cq_cover(3);
        let report = certify_triviality(&cover, DEFAULT_MAX_UNKNOWNS).unwrap();
        assert!(report.contained, "dims: {report:?}");
        assert_eq!(report.dim_e_plus_t, report.dim_t);
        assert!(report.dim_e <= report.dim_t);
        assert!(report.witness.is_none());
        assert_eq!(report.relation_count, 4);
        // ambient quotient dimension: 3 * (C(8,5) - 3)
        assert_eq!(report.ambient_dim, 3 * (56 - 3));
        println!(
            "cq n=3 dims: ambient={} T={} E={} E+T={}",
            report.ambient_dim, report.dim_t, report.dim_e, report.dim_e_plus_t
        );
    }

    #[test]
    fn trivial_deformations_satisfy_relation_system() {
        // T inside E, probed on seeded pseudo-random direction vectors
        let cover = cq_cover(3);
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..5 {
            let a: Vec<MultiPoly> = (0..=cover.r())
                .map(|_| {
                    let mut form = MultiPoly::zero(FieldSpec::Q, cover.zvars().clone());
                    for t in 0..=cover.r() {
                        let c = (next() % 7) as i64 - 3;
                        if c != 0 {
                            form = form.add(
                                &MultiPoly::var(FieldSpec::Q, cover.zvars().clone(), t)
                                    .scale(&Scalar::from_int(c)),
                            );
                        }
                    }
                    form
                })
                .collect();
            let phi = trivial_deformation(&cover, &a).unwrap();
            assert!(satisfies_relation_system(&cover, &phi).unwrap());
        }
    }

    #[test]
    fn certify_runs_on_non_saturated_configuration() {
        // five lines with a single triple point: the certificate is still
        // produced; its verdict is informational here
        let lines = vec![
            ProjLine::from_ints([1, 0, 0]),
            ProjLine::from_ints([0, 1, 0]),
            ProjLine::from_ints([0, 0, 1]),
            ProjLine::from_ints([1, 1, 0]),
            ProjLine::from_ints([1, 2, 3]),
        ];
        let cfg = Configuration::analyze(FieldSpec::Q, lines).unwrap();
        assert!(!crate::config::rigidity_report(&cfg).singularly_saturated);
        let cover = cover_equations(&cfg, 3).unwrap();
        let rep = certify_triviality(&cover, DEFAULT_MAX_UNKNOWNS).unwrap();
        // the trivial space always embeds into the constrained one
        assert!(rep.dim_t <= rep.dim_e);
        assert_eq!(rep.contained, rep.dim_e == rep.dim_t);
    }

    #[test]
    fn certify_invariant_under_tail_line_permutation() {
        use crate::config::Configuration;
        let cfg = catalog("complete-quadrangle").unwrap();
        let mut lines = cfg.lines().to_vec();
        lines.swap(3, 5);
        let permuted = Configuration::analyze(FieldSpec::Q, lines).unwrap();
        let a = certify_triviality(&cq_cover(3), DEFAULT_MAX_UNKNOWNS).unwrap();
        let b = certify_triviality(
            &cover_equations(&permuted, 3).unwrap(),
            DEFAULT_MAX_UNKNOWNS,
        )
        .unwrap();
        assert_eq!(
            (a.ambient_dim, a.dim_t, a.dim_e, a.contained),
            (b.ambient_dim, b.dim_t, b.dim_e, b.contained)
        );
    }

    #[test]
    fn proof_shape_coefficient_matching() {
        // With Phi3 = u3 z3^{n-1} - u1 z1^{n-1} + u2 z2^{n-1},
        //      Phi4 = v4 z4^{n-1} - v2 z2^{n-1} + v0 z0^{n-1},
        //      Phi5 = w5 z5^{n-1} - w0 z0^{n-1} + w1 z1^{n-1},
        // the constraint Phi3+Phi4+Phi5 = a3 z3^{n-1} + a4 z4^{n-1} + a5 z5^{n-1}
        // forces a3=u3, a4=v4, a5=w5 and v0=w0, u1=w1, u2=v2.
        let n = 3u32;
        let cover = cq_cover(n);
        let r = cover.r();
        let field = FieldSpec::Q;
        let space = CoefficientSpace::new(r + 1, n);
        // unknowns: twelve linear forms, each with r+1 coefficients:
        // u1,u2,u3, v0,v2,v4, w0,w1,w5, a3,a4,a5 (in this order)
        let forms = [
            ("u1", 1usize, -1i64),
            ("u2", 2, 1),
            ("u3", 3, 1),
            ("v0", 0, 1),
            ("v2", 2, -1),
            ("v4", 4, 1),
            ("w0", 0, -1),
            ("w1", 1, 1),
            ("w5", 5, 1),
            ("a3", 3, -1),
            ("a4", 4, -1),
            ("a5", 5, -1),
        ];
        let cols = forms.len() * (r + 1);
        let mut mat = vec![vec![field.zero(); cols]; space.dim()];
        for (fi, &(_, var, sign)) in forms.iter().enumerate() {
            for t in 0..=r {
                let mut e = vec![0u32; r + 1];
                e[var] += n - 1;
                e[t] += 1;
                let row = *space.index.get(&e).unwrap();
                let col = fi * (r + 1) + t;
                mat[row][col] = mat[row][col].add(&field.from_i64(sign));
            }
        }
        let kernel = linalg::kernel_basis(&mat, &field);
        assert!(!kernel.is_empty());
        let idx = |name: &str| forms.iter().position(|f| f.0 == name).unwrap();
        let forced_equal = [
            ("a3", "u3"),
            ("a4", "v4"),
            ("a5", "w5"),
            ("v0", "w0"),
            ("u1", "w1"),
            ("u2", "v2"),
        ];
        for sol in &kernel {
            for &(x, y) in &forced_equal {
                for t in 0..=r {
                    let xv = &sol[idx(x) * (r + 1) + t];
                    let yv = &sol[idx(y) * (r + 1) + t];
                    assert_eq!(xv, yv, "{x} != {y} at coefficient {t}");
                }
            }
        }
    }
}
