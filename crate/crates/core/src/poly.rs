//! Sparse multivariate polynomials over an exact scalar field.
//!
//! Terms are kept in a BTree map keyed by exponent vectors under graded
//! lexicographic order, so iteration, printing and serialization are
//! deterministic. No zero coefficient is ever stored, and all arithmetic is
//! exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Exponent vector with graded lexicographic ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial with a fixed ordered variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: FieldSpec,
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(field: FieldSpec, vars: Arc<Vec<String>>) -> MultiPoly {
        MultiPoly {
            field,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, vars: Arc<Vec<String>>, c: Scalar) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars);
        if !c.is_zero() {
            let n = p.vars.len();
            let c = c.promote(&p.field).expect("constant kind");
            p.terms.insert(Monomial(vec![0; n]), c);
        }
        p
    }

    /// The polynomial consisting of the single variable `index`.
    pub fn var(field: FieldSpec, vars: Arc<Vec<String>>, index: usize) -> MultiPoly {
        let one = field.one();
        MultiPoly::monomial_term(field, vars, index, 1, one)
    }

    /// `c * x_index^exp`.
    pub fn monomial_term(
        field: FieldSpec,
        vars: Arc<Vec<String>>,
        index: usize,
        exp: u32,
        c: Scalar,
    ) -> MultiPoly {
        assert!(index < vars.len());
        let mut p = MultiPoly::zero(field, vars);
        if !c.is_zero() {
            let mut e = vec![0; p.vars.len()];
            e[index] = exp;
            let c = c.promote(&p.field).expect("coefficient kind");
            p.terms.insert(Monomial(e), c);
        }
        p
    }

    pub fn from_terms(
        field: FieldSpec,
        vars: Arc<Vec<String>>,
        terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>,
    ) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(field, vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::VariableMismatch {
                    expected: p.vars.len(),
                    got: e.len(),
                });
            }
            let c = c.promote(&p.field)?;
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Degree in the single variable `index`.
    pub fn degree_in(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[index]).max()
    }

    /// Total degree across the variable block `indices`.
    pub fn degree_in_block(&self, indices: &[usize]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| indices.iter().map(|&i| m.0[i]).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// True when every term has total degree exactly `d` in each listed block.
    pub fn is_multihomogeneous(&self, blocks: &[Vec<usize>], d: &[u32]) -> bool {
        assert_eq!(blocks.len(), d.len());
        self.terms.keys().all(|m| {
            blocks
                .iter()
                .zip(d)
                .all(|(b, &want)| b.iter().map(|&i| m.0[i]).sum::<u32>() == want)
        })
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    fn check_compatible(&self, other: &MultiPoly) -> Result<FieldSpec> {
        if self.vars != other.vars && *self.vars != *other.vars {
            return Err(Error::VariableMismatch {
                expected: self.vars.len(),
                got: other.vars.len(),
            });
        }
        self.field.join(&other.field)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let field = self.check_compatible(other).expect("polynomial kinds");
        let mut out = MultiPoly::zero(field.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.promote(&field).unwrap());
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.promote(&field).unwrap());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let field = self.check_compatible(other).expect("polynomial kinds");
        let mut out = MultiPoly::zero(field.clone(), self.vars.clone());
        for (ma, ca) in &self.terms {
            let ca = ca.promote(&field).unwrap();
            for (mb, cb) in &other.terms {
                let m = Monomial(
                    ma.0.iter()
                        .zip(mb.0.iter())
                        .map(|(x, y)| x + y)
                        .collect(),
                );
                out.add_term(m, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.field.clone(), self.vars.clone());
        }
        let field = self.field.join(&c.field()).expect("scalar kind");
        let c = c.promote(&field).unwrap();
        MultiPoly {
            field: field.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.promote(&field).unwrap().mul(&c)))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(
            self.field.clone(),
            self.vars.clone(),
            self.field.one(),
        );
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.field.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[index] = e - 1;
            let factor = self.field.from_i64(e as i64);
            out.add_term(Monomial(exps), c.mul(&factor));
        }
        out
    }

    /// Exact evaluation at a scalar point. The point may live in an extension
    /// of the coefficient field (rationals promote into cyclotomic or prime
    /// fields); a coefficient that cannot be promoted into the joined field is
    /// an error.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.vars.len() {
            return Err(Error::VariableMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut field = self.field.clone();
        for s in point {
            field = field.join(&s.field())?;
        }
        let point: Vec<Scalar> = point
            .iter()
            .map(|s| s.promote(&field))
            .collect::<Result<_>>()?;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = c.promote(&field)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Substitute each variable by a polynomial in a common target ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::VariableMismatch {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target_vars = images
            .first()
            .map(|p| p.vars.clone())
            .ok_or_else(|| Error::InvalidArgument("substitution with no variables".into()))?;
        let mut field = self.field.clone();
        for img in images {
            field = field.join(&img.field)?;
        }
        let mut acc = MultiPoly::zero(field.clone(), target_vars.clone());
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(
                field.clone(),
                target_vars.clone(),
                c.promote(&field)?,
            );
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Re-express the polynomial in a larger variable set; `map[i]` is the
    /// index of old variable `i` in the target set.
    pub fn embed(&self, target: Arc<Vec<String>>, map: &[usize]) -> Result<MultiPoly> {
        if map.len() != self.vars.len() {
            return Err(Error::VariableMismatch {
                expected: self.vars.len(),
                got: map.len(),
            });
        }
        let mut out = MultiPoly::zero(self.field.clone(), target.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &exp) in m.0.iter().enumerate() {
                e[map[i]] += exp;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient in graded lexicographic order.
    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    /// Divide by the leading coefficient, making the polynomial monic.
    pub fn monic(&self) -> Result<MultiPoly> {
        match self.leading_coefficient() {
            None => Ok(self.clone()),
            Some(c) => {
                let inv = c.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// True when `other` is a nonzero scalar multiple of `self`.
    pub fn proportional_to(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (m0, c0) = self.terms.iter().next_back().unwrap();
        let d0 = match other.terms.get(m0) {
            Some(d) => d,
            None => return false,
        };
        // ratio = d0 / c0; check other == ratio * self
        let ratio = match d0.div(c0) {
            Ok(r) => r,
            Err(_) => return false,
        };
        other == &self.scale(&ratio)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            let mono = factors.join("*");
            let coeff = format!("{c}");
            let (sign, coeff_abs) = match coeff.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{coeff_abs}")?;
            } else if coeff_abs == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff_abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Shared variable list for building polynomial rings.
pub fn varset(names: &[&str]) -> Arc<Vec<String>> {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// All exponent vectors of total degree `deg` in `nvars` variables, in
/// ascending graded-lex order.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if nvars == 1 {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=deg {
            prefix.push(e);
            rec(nvars - 1, deg - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    rec(nvars, deg, &mut prefix, &mut out);
    out.sort_by(|a, b| Monomial(a.clone()).cmp(&Monomial(b.clone())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use proptest::prelude::*;

    fn ring() -> (FieldSpec, Arc<Vec<String>>) {
        (FieldSpec::Q, varset(&["x0", "x1", "x2"]))
    }

    fn x(i: usize) -> MultiPoly {
        let (f, v) = ring();
        MultiPoly::var(f, v, i)
    }

    #[test]
    fn eval_symmetric_point() {
        // x1*x2 - x0^2 at (1,1,1) -> 0
        let p = x(1).mul(&x(2)).sub(&x(0).mul(&x(0)));
        let pt = vec![
            Scalar::from_int(1),
            Scalar::from_int(1),
            Scalar::from_int(1),
        ];
        assert!(p.eval(&pt).unwrap().is_zero());
    }

    #[test]
    fn eval_del_pezzo_parametrization_point() {
        // v1*w1*z1 - v2*w2*z2 at v=(1,2), w=(2,3), z=(3,1): 1*2*3 - 2*3*1 = 0
        let vars = varset(&["v1", "v2", "w1", "w2", "z1", "z2"]);
        let v = |i| MultiPoly::var(FieldSpec::Q, vars.clone(), i);
        let p = v(0).mul(&v(2)).mul(&v(4)).sub(&v(1).mul(&v(3)).mul(&v(5)));
        let pt: Vec<Scalar> = [1, 2, 2, 3, 3, 1].iter().map(|&n| Scalar::from_int(n)).collect();
        assert!(p.eval(&pt).unwrap().is_zero());
    }

    #[test]
    fn eval_over_prime_field() {
        // x^3 over F_7 at x=2 -> 1
        let vars = varset(&["x"]);
        let p = MultiPoly::var(FieldSpec::Q, vars, 0).pow(3);
        let pt = vec![FieldSpec::PrimeField(7).from_i64(2)];
        assert_eq!(p.eval(&pt).unwrap(), FieldSpec::PrimeField(7).from_i64(1));
    }

    #[test]
    fn eval_rejects_prime_field_into_rational() {
        let vars = varset(&["x"]);
        let coeff = FieldSpec::PrimeField(5).from_i64(2);
        let p = MultiPoly::monomial_term(FieldSpec::PrimeField(5), vars, 0, 1, coeff);
        // evaluating an F_5 polynomial at a cyclotomic point has no common field
        let pt = vec![FieldSpec::Cyclotomic(3).zeta().unwrap()];
        assert!(p.eval(&pt).is_err());
    }

    #[test]
    fn eval_length_mismatch() {
        let p = x(0);
        assert!(p.eval(&[Scalar::from_int(1)]).is_err());
    }

    #[test]
    fn derivative_basic() {
        // d/dx0 (x0^3 - x0*x1) = 3x0^2 - x1
        let p = x(0).pow(3).sub(&x(0).mul(&x(1)));
        let d = p.derivative(0);
        let expected = x(0).pow(2).scale(&Scalar::from_int(3)).sub(&x(1));
        assert_eq!(d, expected);
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(n + k - 1, k - 1) monomials of degree n in k variables
        assert_eq!(monomials_of_degree(6, 3).len(), 56);
        assert_eq!(monomials_of_degree(6, 4).len(), 126);
        assert_eq!(monomials_of_degree(7, 3).len(), 84);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u32..3, 3),
                -6i64..=6,
            ),
            0..6,
        )
        .prop_map(|terms| {
            let (f, v) = ring();
            MultiPoly::from_terms(
                f,
                v,
                terms
                    .into_iter()
                    .map(|(e, c)| (e, Scalar::from_int(c))),
            )
            .unwrap()
        })
    }

    fn arb_point() -> impl Strategy<Value = Vec<Scalar>> {
        proptest::collection::vec((-5i64..=5, 1i64..=3), 3)
            .prop_map(|cs| cs.into_iter().map(|(n, d)| Scalar::from_ratio(n, d)).collect())
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(p in arb_poly(), q in arb_poly(), pt in arb_point()) {
            let lhs = p.mul(&q).eval(&pt).unwrap();
            let rhs = p.eval(&pt).unwrap().mul(&q.eval(&pt).unwrap());
            prop_assert_eq!(lhs, rhs);
            let lhs = p.add(&q).eval(&pt).unwrap();
            let rhs = p.eval(&pt).unwrap().add(&q.eval(&pt).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
