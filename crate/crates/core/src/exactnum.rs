//! Exact integers, rationals and polynomials in the formal parameter β.
//!
//! Integers and rationals are the arbitrary-precision types from `num`;
//! rationals are always kept in lowest terms with a positive denominator.
//! [`BetaPoly`] is a dense univariate polynomial with rational coefficients,
//! stored lowest degree first with trailing zeros stripped.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// The rational with value `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if Zero::is_zero(b) {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or `-p/q`. The result is canonical.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        kind: "rational",
        input: s.to_string(),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Integer = num.parse().map_err(|_| err())?;
    let den: Integer = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// `Some(n)` when `r` is an integer that fits an `i64`.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Coefficient ring for truncated series: exact, commutative, with a
/// rational scalar action.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
    /// Exact text form: `p/q` for rationals, `[c0, c1, ...]` for polynomials.
    fn to_exact_string(&self) -> String;

    fn from_rational(r: &Rational) -> Self {
        Self::one_elem().scale(r)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = Ring::add(&*self, other);
    }
}

impl Ring for Rational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_exact_string(&self) -> String {
        format_rational(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

/// Polynomial in β with rational coefficients; `coeffs[i]` multiplies β^i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BetaPoly {
    coeffs: Vec<Rational>,
}

impl BetaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BetaPoly { coeffs }
    }

    pub fn zero() -> Self {
        BetaPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `β`.
    pub fn beta() -> Self {
        BetaPoly {
            coeffs: vec![Zero::zero(), One::one()],
        }
    }

    /// `a + b·β`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of β^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Zero::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(<Rational as Zero>::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if Zero::is_zero(r) {
            return Self::zero();
        }
        BetaPoly {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// `p(β + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let step = BetaPoly::linear(c.clone(), One::one());
        self.coeffs.iter().rev().fold(BetaPoly::zero(), |acc, a| {
            &(&acc * &step) + &BetaPoly::constant(a.clone())
        })
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(", "))
    }
}

impl Add for &BetaPoly {
    type Output = BetaPoly;
    fn add(self, rhs: &BetaPoly) -> BetaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        BetaPoly::new(coeffs)
    }
}

impl AddAssign<&BetaPoly> for BetaPoly {
    fn add_assign(&mut self, rhs: &BetaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Zero::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += s;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        BetaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &BetaPoly {
    type Output = BetaPoly;
    fn sub(self, rhs: &BetaPoly) -> BetaPoly {
        self + &(-rhs)
    }
}

impl Mul for &BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: &BetaPoly) -> BetaPoly {
        if self.is_zero() || rhs.is_zero() {
            return BetaPoly::zero();
        }
        let mut coeffs = vec![<Rational as Zero>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BetaPoly::new(coeffs)
    }
}

impl Ring for BetaPoly {
    fn zero_elem() -> Self {
        BetaPoly::zero()
    }
    fn one_elem() -> Self {
        BetaPoly::constant(One::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        BetaPoly::scale(self, r)
    }
    fn inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(BetaPoly::constant(self.coeffs[0].recip())),
            _ => None,
        }
    }
    fn to_exact_string(&self) -> String {
        self.to_string()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

/// Multiplies `poly` (integer coefficients, lowest degree first) by
/// `(a - β)` in place.
pub(crate) fn mul_by_const_minus_beta(poly: &mut Vec<Integer>, a: &Integer) {
    poly.push(Integer::zero());
    for i in (0..poly.len()).rev() {
        let lower = if i > 0 {
            poly[i - 1].clone()
        } else {
            Integer::zero()
        };
        poly[i] = &poly[i] * a - lower;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_examples() {
        let sum = rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap();
        assert_eq!(sum, rat(5, 6));
        let prod = rat_arith(&rat(-3, 1), &rat(5, 9), RatOp::Mul).unwrap();
        assert_eq!(prod, rat(-5, 3));
        let x = rat(-7, 11);
        assert_eq!(rat_arith(&x, &x, RatOp::Div).unwrap(), rat(1, 1));
        assert_eq!(
            rat_arith(&x, &rat(0, 1), RatOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(8, 4)), "2");
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("17").unwrap(), rat_int(17));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn big_factorial_is_exact() {
        let f = factorial(100);
        assert_eq!(f.to_string().len(), 158);
        let r = Rational::new(f.clone() * f.clone(), f.clone());
        assert_eq!(r, Rational::from_integer(f));
    }

    #[test]
    fn beta_poly_examples() {
        let a = BetaPoly::linear(rat_int(1), rat_int(-1));
        let b = BetaPoly::linear(rat_int(1), rat(-1, 4));
        let prod = &a * &b;
        assert_eq!(prod.coeffs(), &[rat_int(1), rat(-5, 4), rat(1, 4)]);
        assert!((&a * &BetaPoly::zero()).is_zero());
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(BetaPoly::zero().degree(), None);
    }

    #[test]
    fn beta_poly_eval_examples() {
        // s(s-3)/2 vanishes at s = 3
        let f2 = BetaPoly::new(vec![rat_int(0), rat(-3, 2), rat(1, 2)]);
        assert_eq!(f2.eval(&rat_int(3)), rat_int(0));
        assert_eq!(f2.eval(&rat_int(0)), f2.coeff(0));
        let one_minus_beta = BetaPoly::linear(rat_int(1), rat_int(-1));
        assert_eq!(one_minus_beta.eval(&rat_int(25)), rat_int(-24));
    }

    #[test]
    fn shift_matches_substitution() {
        let p = BetaPoly::from_integers(&[3, -1, 0, 2]);
        let q = p.shift(&rat_int(5));
        for x in -3..4 {
            let x = rat_int(x);
            assert_eq!(q.eval(&x), p.eval(&(&x + rat_int(5))));
        }
    }

    #[test]
    fn const_minus_beta_product() {
        let mut p = vec![Integer::one()];
        mul_by_const_minus_beta(&mut p, &Integer::from(4));
        mul_by_const_minus_beta(&mut p, &Integer::from(1));
        // (4 - β)(1 - β) = 4 - 5β + β²
        assert_eq!(
            p,
            vec![Integer::from(4), Integer::from(-5), Integer::from(1)]
        );
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly() -> impl Strategy<Value = BetaPoly> {
        prop::collection::vec(small_rational(), 0..6).prop_map(BetaPoly::new)
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            let canon = Rational::new(a.numer().clone(), a.denom().clone());
            prop_assert_eq!(&canon, &a);
            prop_assert!(a.denom() > &Integer::zero());
        }

        #[test]
        fn eval_is_multiplicative(p in small_poly(), q in small_poly(), r in small_rational()) {
            prop_assert_eq!((&p * &q).eval(&r), p.eval(&r) * q.eval(&r));
            prop_assert_eq!((&p + &q).eval(&r), p.eval(&r) + q.eval(&r));
        }

        #[test]
        fn degree_is_additive(p in small_poly(), q in small_poly()) {
            if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
                prop_assert_eq!((&p * &q).degree(), Some(dp + dq));
            }
        }

        #[test]
        fn poly_strings_round_trip(p in small_poly()) {
            prop_assert_eq!(BetaPoly::from_strings(&p.to_strings()).unwrap(), p);
        }
    }
}
