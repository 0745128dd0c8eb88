//! Exact scalars: rationals, cyclotomic field elements and prime fields.
//!
//! A [`Scalar`] is a tagged value in one of three fields:
//!
//! - `Rational`: an arbitrary-precision rational, always reduced with a
//!   positive denominator (guaranteed by `num_rational::BigRational`).
//! - `Cyclotomic`: an element of `Q[x]/Phi_k(x)` for the k-th cyclotomic
//!   polynomial `Phi_k`, stored as a rational coefficient vector of length
//!   `deg Phi_k`. Reducing modulo `Phi_k` (rather than `x^k - 1`) keeps the
//!   representation a field, so kernels and ranks are well defined.
//! - `PrimeField`: an element of `F_p`, stored reduced in `[0, p)`.
//!
//! Rationals coerce silently into either extension (a rational embeds into
//! `Q(zeta_k)` as a constant and reduces canonically modulo `p`). The reverse
//! directions are errors, as is mixing distinct extensions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which exact field a computation lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The cyclotomic field `Q(zeta_k)`.
    Cyclotomic(u32),
    /// The prime field `F_p`.
    PrimeField(u64),
}

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rational(BigRational::zero()),
            FieldSpec::Cyclotomic(k) => Scalar::Cyclotomic {
                order: *k,
                coeffs: vec![BigRational::zero(); cyclotomic_degree(*k)],
            },
            FieldSpec::PrimeField(p) => Scalar::PrimeField { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Cyclotomic(k) => {
                let mut coeffs = vec![BigRational::zero(); cyclotomic_degree(*k)];
                if !coeffs.is_empty() {
                    coeffs[0] = BigRational::from(BigInt::from(n));
                }
                Scalar::Cyclotomic { order: *k, coeffs }
            }
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64);
                Scalar::PrimeField {
                    p: *p,
                    value: r as u64,
                }
            }
        }
    }

    /// The primitive root of unity `zeta_k` for a cyclotomic field.
    pub fn zeta(&self) -> Result<Scalar> {
        match self {
            FieldSpec::Cyclotomic(k) => {
                let deg = cyclotomic_degree(*k);
                let mut coeffs = vec![BigRational::zero(); deg];
                if deg == 1 {
                    // Phi_1 = x - 1, Phi_2 = x + 1: zeta is rational here.
                    coeffs[0] = if *k == 1 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                } else {
                    coeffs[1] = BigRational::one();
                }
                Ok(Scalar::Cyclotomic { order: *k, coeffs })
            }
            _ => Err(Error::InvalidArgument(
                "zeta is only defined for cyclotomic fields".into(),
            )),
        }
    }

    /// The least common field both specs embed into, if any.
    pub fn join(&self, other: &FieldSpec) -> Result<FieldSpec> {
        match (self, other) {
            (a, b) if a == b => Ok(a.clone()),
            (FieldSpec::Q, b) => Ok(b.clone()),
            (a, FieldSpec::Q) => Ok(a.clone()),
            (a, b) => Err(Error::IncompatibleScalars(format!("{a:?} vs {b:?}"))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Cyclotomic(k) => write!(f, "Q(zeta_{k})"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic { order: u32, coeffs: Vec<BigRational> },
    PrimeField { p: u64, value: u64 },
}

impl Scalar {
    pub fn from_int(n: i64) -> Scalar {
        FieldSpec::Q.from_i64(n)
    }

    pub fn from_ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Q,
            Scalar::Cyclotomic { order, .. } => FieldSpec::Cyclotomic(*order),
            Scalar::PrimeField { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(|c| c.is_zero()),
            Scalar::PrimeField { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic { coeffs, .. } => {
                !coeffs.is_empty()
                    && coeffs[0].is_one()
                    && coeffs[1..].iter().all(|c| c.is_zero())
            }
            Scalar::PrimeField { value, .. } => *value == 1,
        }
    }

    /// Promote into `spec` when a canonical embedding exists.
    pub fn promote(&self, spec: &FieldSpec) -> Result<Scalar> {
        if &self.field() == spec {
            return Ok(self.clone());
        }
        match (self, spec) {
            (Scalar::Rational(r), FieldSpec::Cyclotomic(k)) => {
                let mut coeffs = vec![BigRational::zero(); cyclotomic_degree(*k)];
                coeffs[0] = r.clone();
                Ok(Scalar::Cyclotomic { order: *k, coeffs })
            }
            (Scalar::Rational(r), FieldSpec::PrimeField(p)) => {
                let num = mod_bigint(r.numer(), *p);
                let den = mod_bigint(r.denom(), *p);
                if den == 0 {
                    return Err(Error::BadReduction(*p));
                }
                let value = mulmod(num, inv_mod(den, *p)?, *p);
                Ok(Scalar::PrimeField { p: *p, value })
            }
            (a, b) => Err(Error::IncompatibleScalars(format!(
                "cannot promote {:?} into {b:?}",
                a.field()
            ))),
        }
    }

    fn pair(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        let spec = a
            .field()
            .join(&b.field())
            .unwrap_or_else(|e| panic!("scalar kind mismatch in arithmetic: {e}"));
        (
            a.promote(&spec).expect("promotion after join"),
            b.promote(&spec).expect("promotion after join"),
        )
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let (a, b) = Scalar::pair(self, other);
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (
                Scalar::Cyclotomic { order, coeffs: x },
                Scalar::Cyclotomic { coeffs: y, .. },
            ) => Scalar::Cyclotomic {
                order,
                coeffs: x.iter().zip(&y).map(|(a, b)| a + b).collect(),
            },
            (Scalar::PrimeField { p, value: x }, Scalar::PrimeField { value: y, .. }) => {
                Scalar::PrimeField {
                    p,
                    value: addmod(x, y, p),
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Cyclotomic { order, coeffs } => Scalar::Cyclotomic {
                order: *order,
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
            Scalar::PrimeField { p, value } => Scalar::PrimeField {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let (a, b) = Scalar::pair(self, other);
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (
                Scalar::Cyclotomic { order, coeffs: x },
                Scalar::Cyclotomic { coeffs: y, .. },
            ) => {
                let modulus = cyclotomic_polynomial(order);
                let prod = poly_mul(&x, &y);
                Scalar::Cyclotomic {
                    order,
                    coeffs: poly_rem_fixed(&prod, &modulus),
                }
            }
            (Scalar::PrimeField { p, value: x }, Scalar::PrimeField { value: y, .. }) => {
                Scalar::PrimeField {
                    p,
                    value: mulmod(x, y, p),
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Cyclotomic { order, coeffs } => {
                let modulus = cyclotomic_polynomial(*order);
                let inv = poly_invmod(coeffs, &modulus).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::Cyclotomic {
                    order: *order,
                    coeffs: inv,
                })
            }
            Scalar::PrimeField { p, value } => Ok(Scalar::PrimeField {
                p: *p,
                value: inv_mod(*value, *p)?,
            }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total order used only for deterministic sorting and canonical output.
    /// Rationals compare by value; other kinds compare representationally.
    pub fn cmp_repr(&self, other: &Scalar) -> Ordering {
        fn tag(s: &Scalar) -> u8 {
            match s {
                Scalar::Rational(_) => 0,
                Scalar::Cyclotomic { .. } => 1,
                Scalar::PrimeField { .. } => 2,
            }
        }
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (
                Scalar::Cyclotomic { order: ka, coeffs: ca },
                Scalar::Cyclotomic { order: kb, coeffs: cb },
            ) => ka.cmp(kb).then_with(|| ca.cmp(cb)),
            (
                Scalar::PrimeField { p: pa, value: va },
                Scalar::PrimeField { p: pb, value: vb },
            ) => pa.cmp(pb).then_with(|| va.cmp(vb)),
            (a, b) => tag(a).cmp(&tag(b)),
        }
    }

    /// Wire format: "p/q" for rationals, coefficient lists for cyclotomics,
    /// the residue for prime fields.
    pub fn to_wire_string(&self) -> String {
        match self {
            Scalar::Rational(r) => format_rational(r),
            Scalar::Cyclotomic { coeffs, .. } => {
                let parts: Vec<String> = coeffs.iter().map(format_rational).collect();
                format!("[{}]", parts.join(","))
            }
            Scalar::PrimeField { value, .. } => format!("{value}"),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        FieldSpec::Q.zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", format_rational(r)),
            Scalar::Cyclotomic { order, coeffs } => {
                let mut parts = Vec::new();
                for (i, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let coeff = format_rational(c);
                    let part = match i {
                        0 => coeff,
                        1 if c.is_one() => format!("z{order}"),
                        1 => format!("{coeff}*z{order}"),
                        _ if c.is_one() => format!("z{order}^{i}"),
                        _ => format!("{coeff}*z{order}^{i}"),
                    };
                    parts.push(part);
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
            Scalar::PrimeField { p, value } => write!(f, "{value} mod {p}"),
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn mod_bigint(n: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let mut r = n % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    let digits = r.to_u64_digits().1;
    if digits.is_empty() {
        0
    } else {
        digits[0]
    }
}

pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Result<u64> {
    if a % p == 0 {
        return Err(Error::DivisionByZero);
    }
    // p is prime throughout the crate.
    Ok(powmod(a, p - 2, p))
}

/// Euler's totient, the degree of the k-th cyclotomic polynomial.
pub fn cyclotomic_degree(k: u32) -> usize {
    let mut n = k;
    let mut phi = k;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            phi = phi / d * (d - 1);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi as usize
}

/// Coefficients of the k-th cyclotomic polynomial, constant term first,
/// including the leading 1. Computed by dividing `x^k - 1` by the cyclotomic
/// polynomials of the proper divisors of k.
pub fn cyclotomic_polynomial(k: u32) -> Vec<BigRational> {
    assert!(k >= 1);
    // x^k - 1
    let mut num = vec![BigRational::zero(); k as usize + 1];
    num[0] = -BigRational::one();
    num[k as usize] = BigRational::one();
    let mut result = num;
    for d in 1..k {
        if k % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            result = poly_div_exact(&result, &phi_d);
        }
    }
    result
}

// --- dense univariate helpers over Q (constant term first) ---

fn poly_trim(a: &mut Vec<BigRational>) {
    while a.len() > 1 && a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![BigRational::zero()];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_deg(a: &[BigRational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

/// Exact division; panics if the division is not exact (internal use only).
fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let (q, r) = poly_divrem(num, den);
    assert!(
        poly_deg(&r).is_none(),
        "inexact polynomial division in cyclotomic setup"
    );
    q
}

fn poly_divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = poly_deg(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<BigRational> = num.to_vec();
    poly_trim(&mut rem);
    let nd = match poly_deg(&rem) {
        Some(d) => d,
        None => return (vec![BigRational::zero()], rem),
    };
    if nd < dd {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); nd - dd + 1];
    for i in (0..=(nd - dd)).rev() {
        let c = &rem[i + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dc) in den.iter().enumerate().take(dd + 1) {
            let delta = dc * &c;
            rem[i + j] -= delta;
        }
    }
    poly_trim(&mut rem);
    (quot, rem)
}

/// Remainder modulo `modulus`, padded/truncated to length `deg(modulus)`.
fn poly_rem_fixed(a: &[BigRational], modulus: &[BigRational]) -> Vec<BigRational> {
    let deg = poly_deg(modulus).expect("zero modulus");
    let (_, mut r) = poly_divrem(a, modulus);
    r.resize(deg, BigRational::zero());
    r
}

/// Inverse of `a` modulo `modulus` via the extended Euclidean algorithm.
fn poly_invmod(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
    // r0 = modulus, r1 = a; maintain s-coefficients for a only.
    let mut r0: Vec<BigRational> = modulus.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0 = vec![BigRational::zero()];
    let mut s1 = vec![BigRational::one()];
    while poly_deg(&r1).is_some() {
        let (q, r) = poly_divrem(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let mut s = s0.clone();
        s.resize(s.len().max(qs.len()), BigRational::zero());
        for (i, c) in qs.iter().enumerate() {
            s[i] -= c;
        }
        poly_trim(&mut s);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        poly_trim(&mut r1);
    }
    // r0 = gcd; invertible iff gcd is a nonzero constant
    let d = poly_deg(&r0)?;
    if d != 0 {
        return None;
    }
    let c = r0[0].clone();
    let inv: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
    Some(poly_rem_fixed(&inv, modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        let as_i64 = |v: Vec<BigRational>| -> Vec<i64> {
            v.iter()
                .map(|c| {
                    assert!(c.denom().is_one());
                    let s: String = c.numer().to_string();
                    s.parse().unwrap()
                })
                .collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(5)), vec![1, 1, 1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_powers_close_up() {
        for k in [1u32, 2, 3, 4, 5, 6, 12] {
            let spec = FieldSpec::Cyclotomic(k);
            let z = spec.zeta().unwrap();
            // zeta^k = 1
            assert!(z.pow(k).is_one(), "zeta_{k}^{k} != 1");
            // Phi_k(zeta) = 0
            let phi = cyclotomic_polynomial(k);
            let mut acc = spec.zero();
            for (i, c) in phi.iter().enumerate() {
                let term = Scalar::Rational(c.clone()).promote(&spec).unwrap();
                acc = acc.add(&term.mul(&z.pow(i as u32)));
            }
            assert!(acc.is_zero(), "Phi_{k}(zeta_{k}) != 0");
            // lower powers are not 1 for k > 1
            if k > 1 {
                for e in 1..k {
                    if z.pow(e).is_one() {
                        // zeta_k is a primitive k-th root
                        panic!("zeta_{k}^{e} = 1");
                    }
                }
            }
        }
    }

    #[test]
    fn rational_reduces_into_prime_field() {
        let spec = FieldSpec::PrimeField(7);
        let half = q(1, 2).promote(&spec).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(half, Scalar::PrimeField { p: 7, value: 4 });
        // denominator divisible by p is rejected
        assert!(q(1, 7).promote(&spec).is_err());
        // prime field into rationals is an error
        assert!(half.promote(&FieldSpec::Q).is_err());
    }

    #[test]
    fn prime_field_cube() {
        let spec = FieldSpec::PrimeField(7);
        let two = spec.from_i64(2);
        assert_eq!(two.pow(3), spec.from_i64(1));
    }

    #[test]
    fn cyclotomic_inverse() {
        let spec = FieldSpec::Cyclotomic(3);
        let z = spec.zeta().unwrap();
        // (1 + zeta) has inverse since 1 + zeta = -zeta^2
        let a = spec.one().add(&z);
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
    }

    fn arb_rational() -> impl Strategy<Value = Scalar> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
    }

    fn arb_cyclotomic(k: u32) -> impl Strategy<Value = Scalar> {
        let deg = cyclotomic_degree(k);
        proptest::collection::vec((-9i64..=9, 1i64..=4), deg).prop_map(move |cs| {
            Scalar::Cyclotomic {
                order: k,
                coeffs: cs
                    .into_iter()
                    .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                    .collect(),
            }
        })
    }

    fn arb_fp(p: u64) -> impl Strategy<Value = Scalar> {
        (0..p).prop_map(move |v| Scalar::PrimeField { p, value: v })
    }

    fn check_field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
        // associativity
        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        // commutativity
        assert_eq!(a.add(b), b.add(a));
        assert_eq!(a.mul(b), b.mul(a));
        // distributivity
        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
        // additive inverse
        assert!(a.add(&a.neg()).is_zero());
        // multiplicative inverse
        if !a.is_zero() {
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    proptest! {
        #[test]
        fn field_axioms_rational(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            check_field_axioms(&a, &b, &c);
        }

        #[test]
        fn field_axioms_cyclotomic(a in arb_cyclotomic(5), b in arb_cyclotomic(5), c in arb_cyclotomic(5)) {
            check_field_axioms(&a, &b, &c);
        }

        #[test]
        fn field_axioms_prime(a in arb_fp(101), b in arb_fp(101), c in arb_fp(101)) {
            check_field_axioms(&a, &b, &c);
        }
    }
}
