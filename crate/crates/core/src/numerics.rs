//! Exact arithmetic substrate.
//!
//! Integers are [`BigInt`], fractions are [`Rational`] (always in lowest terms
//! with a positive denominator), and polynomials are dense coefficient vectors
//! over [`Rational`]. [`Laurent`] extends [`Polynomial`] with finitely many
//! negative powers of `x`; it is the ring in which matrices with `1/x`
//! entries generate their triangles.
//!
//! Text forms: integers render as optional `-` plus digits, non-integers as
//! `p/q`, polynomials as degree-ascending coefficient lists of those strings.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact fraction in lowest terms, denominator positive.
pub type Rational = BigRational;

/// Builds `num / den` in lowest terms.
pub fn rational_make(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` for small operands. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `"3"`, `"-1/2"`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses the canonical text form (also accepts unreduced `p/q`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(alloc::format!("invalid integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => rational_make(parse_int(n)?, parse_int(d)?),
    }
}

/// Returns the integer value of `q`, or `None` if it has a denominator.
pub fn to_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.numer().clone())
}

/// Largest integer not exceeding `q`.
pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

/// Coefficient ring consumed by the triangle engine.
///
/// Instances must satisfy the commutative ring axioms; the test suite checks
/// them by random sampling for [`Rational`], [`Polynomial`] and [`Laurent`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Dense univariate polynomial with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; the vector never ends in a zero,
/// so the zero polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(int(1), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        if Zero::is_zero(&c) {
            return Self::zero();
        }
        let mut coeffs = vec![<Rational as Zero>::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(<Rational as Zero>::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(<Rational as Zero>::zero(), |acc, c| acc * x + c)
    }

    /// Exact quotient by `x`; fails when the constant term is nonzero.
    pub fn div_by_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c0) if Zero::is_zero(c0) => Ok(Polynomial {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => Err(Error::InexactDivision(self.to_string())),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![<Rational as Zero>::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Number of leading (low-degree) zero coefficients, `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !Zero::is_zero(c))
    }

    /// Canonical text form: degree-ascending coefficient strings.
    pub fn to_text_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![<Rational as Zero>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned_ops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

forward_owned_ops!(Polynomial);

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (i64, Rational)>) -> fmt::Result {
    let mut first = true;
    for (exp, c) in terms {
        if Zero::is_zero(&c) {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let show_coeff = exp == 0 || !mag.is_one();
        if show_coeff {
            if mag.is_integer() || exp == 0 {
                f.write_str(&format_rational(&mag))?;
            } else {
                write!(f, "({})", format_rational(&mag))?;
            }
        }
        match exp {
            0 => {}
            1 => f.write_str("x")?,
            e => write!(f, "x^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Human-readable, highest degree first: `4x^2 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().rev().map(|(k, c)| (k as i64, c.clone()));
        write_terms(f, terms)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Laurent polynomial `x^min_degree * p(x)` with `p(0) != 0`.
///
/// The zero value is stored with `min_degree == 0` and an empty `p`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    min_degree: i64,
    body: Polynomial,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::normalized(0, p)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    /// `c * x^exp`, where `exp` may be negative.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::normalized(exp, Polynomial::constant(c))
    }

    /// Builds `x^min_degree * (c_0 + c_1 x + ...)` from the given coefficients.
    pub fn from_parts(min_degree: i64, coeffs: Vec<Rational>) -> Self {
        Self::normalized(min_degree, Polynomial::from_coeffs(coeffs))
    }

    fn normalized(min_degree: i64, p: Polynomial) -> Self {
        match p.valuation() {
            None => Laurent::zero(),
            Some(v) => Laurent {
                min_degree: min_degree + v as i64,
                body: Polynomial {
                    coeffs: p.coeffs[v..].to_vec(),
                },
            },
        }
    }

    /// Lowest exponent present (0 for the zero value).
    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Coefficients from `x^min_degree` upward.
    pub fn coeffs(&self) -> &[Rational] {
        self.body.coeffs()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let k = exp - self.min_degree;
        if k < 0 {
            <Rational as Zero>::zero()
        } else {
            self.body.coeff(k as usize)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// `Some` when no negative powers occur.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        (self.min_degree >= 0).then(|| self.body.shift(self.min_degree as usize))
    }

    /// Exact evaluation; `x = 0` is an error when negative powers occur.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(<Rational as Zero>::zero());
        }
        if Zero::is_zero(x) && self.min_degree < 0 {
            return Err(Error::DivisionByZero);
        }
        let base = self.body.eval(x);
        Ok(base * num_traits::pow::Pow::pow(x, self.min_degree as i32))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.min_degree, self.body.scale(c))
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.min_degree.min(rhs.min_degree);
        let a = self.body.shift((self.min_degree - low) as usize);
        let b = rhs.body.shift((rhs.min_degree - low) as usize);
        Laurent::normalized(low, &a + &b)
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            min_degree: self.min_degree,
            body: -&self.body,
        }
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        Laurent::normalized(self.min_degree + rhs.min_degree, &self.body * &rhs.body)
    }
}

forward_owned_ops!(Laurent);

impl Ring for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        self.body.is_zero()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let low = self.min_degree;
        let terms = self
            .body
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| (low + k as i64, c.clone()));
        write_terms(f, terms)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}
