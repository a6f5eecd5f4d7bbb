use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::{coeffs_from_wire, coeffs_to_wire, Coeff, Rational};

/// A reduced quotient `num/den` of polynomials in `s`.
///
/// Invariants: `den` is monic and `gcd(num, den) = 1`. The zero function is
/// `0/1`. Because the form is canonical, derived equality is functional
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        rf_normalize(&num, &den)
    }

    pub fn zero() -> Self {
        Self { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cross-multiplication equality, independent of normal form.
    pub fn exact_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::reduce(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self { num: self.num.pow(exp), den: self.den.pow(exp) }
    }

    /// `num(z) / den(z)` in floating point.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        rf_eval(self, z)
    }

    /// `(proper, strictly_proper)`; the zero function is strictly proper.
    pub fn properness(&self) -> (bool, bool) {
        rf_is_proper(self)
    }

    // den nonzero guaranteed by callers
    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        rf_normalize(&num, &den).expect("nonzero denominator")
    }
}

/// Reduces `num/den` to lowest terms with a monic denominator.
pub fn rf_normalize(num: &Polynomial, den: &Polynomial) -> Result<RationalFunction> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let g = num.gcd(den)?;
    let (num, den) =
        if g.is_constant() { (num.clone(), den.clone()) } else { (num.exact_div(&g)?, den.exact_div(&g)?) };
    let lc = den.leading_coeff().expect("nonzero").clone();
    if lc.is_one() {
        return Ok(RationalFunction { num, den });
    }
    let inv = lc.recip();
    Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
}

pub fn rf_eval(f: &RationalFunction, z: Complex64) -> Result<Complex64> {
    let d = f.den.eval_complex(z);
    if d.norm() == 0.0 {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok(f.num.eval_complex(z) / d)
}

pub fn rf_is_proper(f: &RationalFunction) -> (bool, bool) {
    let dd = f.den.degree().unwrap_or(0);
    match f.num.degree() {
        None => (true, true),
        Some(nd) => (nd <= dd, nd < dd),
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    /// Canonical grammar text, e.g. `s/(s^2 - 1)` or `(s + 2)/s^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.term_count() > 1 || self.num.has_fractional_coeff() {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        if self.den.term_count() > 1 {
            write!(f, "{num}/({})", self.den)
        } else {
            write!(f, "{num}/{}", self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFunctionWire {
    num: Vec<Coeff>,
    den: Vec<Coeff>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let num = if self.num.is_zero() { vec![Rational::zero()] } else { self.num.coeffs().to_vec() };
        RationalFunctionWire { num: coeffs_to_wire(&num), den: coeffs_to_wire(self.den.coeffs()) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = RationalFunctionWire::deserialize(deserializer)?;
        let num = Polynomial::from_coeffs(coeffs_from_wire(wire.num));
        let den = Polynomial::from_coeffs(coeffs_from_wire(wire.den));
        rf_normalize(&num, &den).map_err(serde::de::Error::custom)
    }
}
