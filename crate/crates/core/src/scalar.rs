//! Exact arithmetic in the biquadratic field Q(√2, √3).
//!
//! Every value is stored on the fixed basis {1, √2, √3, √6} with
//! arbitrary-precision rational coordinates, so two scalars are equal exactly
//! when their four coordinates are equal. `BigRational` keeps each coordinate
//! reduced after every operation, which makes structural equality semantic.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rational coordinate type: numerator and positive denominator, always reduced.
pub type Rational = BigRational;

const SQRT_3: f64 = 1.732_050_807_568_877_2;
const SQRT_6: f64 = 2.449_489_742_783_178;

/// Exact element `q1 + q2·√2 + q3·√3 + q6·√6` of Q(√2, √3).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtScalar {
    q1: Rational,
    q2: Rational,
    q3: Rational,
    q6: Rational,
}

/// One of the four basis radicals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radical {
    One,
    Two,
    Three,
    Six,
}

impl Radical {
    pub const ALL: [Radical; 4] = [Radical::One, Radical::Two, Radical::Three, Radical::Six];

    pub fn radicand(self) -> u32 {
        match self {
            Radical::One => 1,
            Radical::Two => 2,
            Radical::Three => 3,
            Radical::Six => 6,
        }
    }

    fn from_radicand(r: u32) -> Option<Self> {
        match r {
            1 => Some(Radical::One),
            2 => Some(Radical::Two),
            3 => Some(Radical::Three),
            6 => Some(Radical::Six),
            _ => None,
        }
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl ExtScalar {
    pub fn new(q1: Rational, q2: Rational, q3: Rational, q6: Rational) -> Self {
        ExtScalar { q1, q2, q3, q6 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        ExtScalar {
            q1: q,
            ..Self::default()
        }
    }

    /// The rational `n/d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn integer(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    /// `(n/d)·√r` for `r ∈ {1, 2, 3, 6}`. Panics on any other radicand or `d == 0`.
    pub fn surd(n: i64, d: i64, r: u32) -> Self {
        let radical = Radical::from_radicand(r)
            .unwrap_or_else(|| panic!("radicand {r} is outside the basis {{1, 2, 3, 6}}"));
        let mut out = Self::zero();
        *out.coord_mut(radical) = rat(n, d);
        out
    }

    /// `n / (d·√r)`, the way coefficients such as 1/√6 or 1/(2√3) are usually typeset.
    pub fn over_sqrt(n: i64, d: i64, r: u32) -> Self {
        // n/(d√r) = n√r/(d·r)
        Self::surd(n, d * i64::from(r), r)
    }

    pub fn sqrt2() -> Self {
        Self::surd(1, 1, 2)
    }

    pub fn sqrt3() -> Self {
        Self::surd(1, 1, 3)
    }

    pub fn sqrt6() -> Self {
        Self::surd(1, 1, 6)
    }

    pub fn coord(&self, radical: Radical) -> &Rational {
        match radical {
            Radical::One => &self.q1,
            Radical::Two => &self.q2,
            Radical::Three => &self.q3,
            Radical::Six => &self.q6,
        }
    }

    fn coord_mut(&mut self, radical: Radical) -> &mut Rational {
        match radical {
            Radical::One => &mut self.q1,
            Radical::Two => &mut self.q2,
            Radical::Three => &mut self.q3,
            Radical::Six => &mut self.q6,
        }
    }

    pub fn q1(&self) -> &Rational {
        &self.q1
    }

    pub fn q2(&self) -> &Rational {
        &self.q2
    }

    pub fn q3(&self) -> &Rational {
        &self.q3
    }

    pub fn q6(&self) -> &Rational {
        &self.q6
    }

    pub fn is_zero(&self) -> bool {
        self.q1.is_zero() && self.q2.is_zero() && self.q3.is_zero() && self.q6.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.q1.is_one() && self.q2.is_zero() && self.q3.is_zero() && self.q6.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q2.is_zero() && self.q3.is_zero() && self.q6.is_zero()
    }

    /// Image under the field automorphism that flips the sign of √2 and/or √3.
    pub fn conjugate(&self, flip_sqrt2: bool, flip_sqrt3: bool) -> Self {
        let signed = |q: &Rational, flip: bool| if flip { -q.clone() } else { q.clone() };
        ExtScalar {
            q1: self.q1.clone(),
            q2: signed(&self.q2, flip_sqrt2),
            q3: signed(&self.q3, flip_sqrt3),
            q6: signed(&self.q6, flip_sqrt2 ^ flip_sqrt3),
        }
    }

    /// Field norm down to Q: the product of all four Galois conjugates.
    pub fn norm(&self) -> Rational {
        let n = self * &self.galois_cofactor();
        debug_assert!(n.is_rational(), "field norm must be rational");
        n.q1
    }

    fn galois_cofactor(&self) -> Self {
        &(&self.conjugate(true, false) * &self.conjugate(false, true)) * &self.conjugate(true, true)
    }

    /// Multiplicative inverse, rationalized through the three non-trivial conjugates.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cofactor = self.galois_cofactor();
        let norm = (self * &cofactor).q1;
        Ok(cofactor.scale(&norm.recip()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ExtScalar {
            q1: &self.q1 * q,
            q2: &self.q2 * q,
            q3: &self.q3 * q,
            q6: &self.q6 * q,
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Double-precision value, each coordinate converted with correct rounding.
    pub fn to_f64(&self) -> f64 {
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        f(&self.q1) + f(&self.q2) * std::f64::consts::SQRT_2 + f(&self.q3) * SQRT_3 + f(&self.q6) * SQRT_6
    }

    /// Nonzero `(radical, coefficient)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (Radical, &Rational)> {
        Radical::ALL
            .into_iter()
            .map(move |r| (r, self.coord(r)))
            .filter(|(_, q)| !q.is_zero())
    }

    /// LaTeX rendering, e.g. `\frac{\sqrt{6}}{6}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (radical, q)) in self.terms().enumerate() {
            let negative = q.is_negative();
            if n == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let numer = q.numer().abs();
            let denom = q.denom();
            let mut top = String::new();
            match radical {
                Radical::One => top.push_str(&numer.to_string()),
                r => {
                    if !numer.is_one() {
                        top.push_str(&numer.to_string());
                    }
                    top.push_str(&format!("\\sqrt{{{}}}", r.radicand()));
                }
            }
            if denom.is_one() {
                out.push_str(&top);
            } else {
                out.push_str(&format!("\\frac{{{top}}}{{{denom}}}"));
            }
        }
        out
    }
}

impl fmt::Display for ExtScalar {
    /// Human-readable form such as `√6/6`, `-1/2` or `1/3 + √2/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (radical, q)) in self.terms().enumerate() {
            let negative = q.is_negative();
            if n == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let numer = q.numer().abs();
            let denom = q.denom();
            match radical {
                Radical::One => write!(f, "{numer}")?,
                r => {
                    if !numer.is_one() {
                        write!(f, "{numer}")?;
                    }
                    write!(f, "√{}", r.radicand())?;
                }
            }
            if !denom.is_one() {
                write!(f, "/{denom}")?;
            }
        }
        Ok(())
    }
}

// Arithmetic. √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2, √6·√6 = 6.

impl Add<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        ExtScalar {
            q1: &self.q1 + &rhs.q1,
            q2: &self.q2 + &rhs.q2,
            q3: &self.q3 + &rhs.q3,
            q6: &self.q6 + &rhs.q6,
        }
    }
}

impl Sub<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        ExtScalar {
            q1: &self.q1 - &rhs.q1,
            q2: &self.q2 - &rhs.q2,
            q3: &self.q3 - &rhs.q3,
            q6: &self.q6 - &rhs.q6,
        }
    }
}

impl Mul<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &ExtScalar) -> ExtScalar {
        let (a1, a2, a3, a6) = (&self.q1, &self.q2, &self.q3, &self.q6);
        let (b1, b2, b3, b6) = (&rhs.q1, &rhs.q2, &rhs.q3, &rhs.q6);
        let two = rat(2, 1);
        let three = rat(3, 1);
        let six = rat(6, 1);
        ExtScalar {
            q1: a1 * b1 + &two * (a2 * b2) + &three * (a3 * b3) + &six * (a6 * b6),
            q2: a1 * b2 + a2 * b1 + &three * (a3 * b6 + a6 * b3),
            q3: a1 * b3 + a3 * b1 + &two * (a2 * b6 + a6 * b2),
            q6: a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2,
        }
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar {
            q1: -self.q1.clone(),
            q2: -self.q2.clone(),
            q3: -self.q3.clone(),
            q6: -self.q6.clone(),
        }
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: &ExtScalar) -> ExtScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<ExtScalar> for &ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Zero for ExtScalar {
    fn zero() -> Self {
        ExtScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
}

impl One for ExtScalar {
    fn one() -> Self {
        ExtScalar::one()
    }
}

impl Sum for ExtScalar {
    fn sum<I: Iterator<Item = ExtScalar>>(iter: I) -> Self {
        iter.fold(ExtScalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExtScalar> for ExtScalar {
    fn sum<I: Iterator<Item = &'a ExtScalar>>(iter: I) -> Self {
        iter.fold(ExtScalar::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for ExtScalar {
    fn from(n: i64) -> Self {
        ExtScalar::integer(n)
    }
}

impl From<Rational> for ExtScalar {
    fn from(q: Rational) -> Self {
        ExtScalar::from_rational(q)
    }
}

/// Canonical `p/q` literal; integers keep the explicit `/1`.
pub fn rational_literal(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses a canonical `p/q` literal. Non-canonical forms (`2/4`, `1/-3`, `5`) are rejected.
pub fn parse_rational_literal(s: &str) -> Result<Rational> {
    let bad = || Error::RationalLiteral(s.to_string());
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if !q.is_positive() || !p.gcd(&q).is_one() {
        return Err(bad());
    }
    Ok(Rational::new_raw(p, q))
}

impl Serialize for ExtScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExtScalar", 4)?;
        st.serialize_field("q1", &rational_literal(&self.q1))?;
        st.serialize_field("q2", &rational_literal(&self.q2))?;
        st.serialize_field("q3", &rational_literal(&self.q3))?;
        st.serialize_field("q6", &rational_literal(&self.q6))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ExtScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            q1: String,
            q2: String,
            q3: String,
            q6: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        let p = |s: &str| parse_rational_literal(s).map_err(de::Error::custom);
        Ok(ExtScalar {
            q1: p(&raw.q1)?,
            q2: p(&raw.q2)?,
            q3: p(&raw.q3)?,
            q6: p(&raw.q6)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse_cancels() {
        assert!((ExtScalar::one() + ExtScalar::integer(-1)).is_zero());
    }

    #[test]
    fn doubling_inverse_sqrt6() {
        // 1/√6 + 1/√6 = 2/√6 = √6/3; (2/√6)² = 4/6 = 2/3 = (√6/3)²
        let x = ExtScalar::over_sqrt(1, 1, 6);
        assert_eq!(x.q6(), &rat(1, 6));
        let sum = &x + &x;
        assert_eq!(sum, ExtScalar::surd(1, 3, 6));
        assert_eq!(sum.square(), ExtScalar::ratio(2, 3));
    }

    #[test]
    fn rational_addition() {
        assert_eq!(ExtScalar::ratio(1, 3) + ExtScalar::ratio(1, 6), ExtScalar::ratio(1, 2));
    }

    #[test]
    fn radical_products() {
        assert_eq!(ExtScalar::sqrt2() * ExtScalar::sqrt3(), ExtScalar::sqrt6());
        assert_eq!(ExtScalar::sqrt2() * ExtScalar::sqrt6(), ExtScalar::surd(2, 1, 3));
        assert_eq!(ExtScalar::sqrt3() * ExtScalar::sqrt6(), ExtScalar::surd(3, 1, 2));
        assert_eq!(ExtScalar::sqrt6() * ExtScalar::sqrt6(), ExtScalar::integer(6));
        let r3 = ExtScalar::over_sqrt(1, 1, 3);
        assert_eq!(r3.q3(), &rat(1, 3));
        assert_eq!(&r3 * &r3, ExtScalar::ratio(1, 3));
    }

    #[test]
    fn inverse_sqrt2_times_inverse_sqrt6() {
        let p = ExtScalar::over_sqrt(1, 1, 2) * ExtScalar::over_sqrt(1, 1, 6);
        assert_eq!(p, ExtScalar::surd(1, 6, 3));
        assert!((p.to_f64() - std::f64::consts::FRAC_1_SQRT_2 * 0.408248290463863).abs() < 1e-15);
    }

    #[test]
    fn inverses() {
        assert_eq!(ExtScalar::sqrt6().inv().unwrap(), ExtScalar::surd(1, 6, 6));
        assert_eq!(ExtScalar::ratio(1, 3).inv().unwrap(), ExtScalar::integer(3));
        let a = ExtScalar::one() + ExtScalar::sqrt2();
        assert_eq!(a.inv().unwrap(), ExtScalar::integer(-1) + ExtScalar::sqrt2());
        assert!(matches!(ExtScalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn inverse_of_full_element() {
        let a = ExtScalar::new(rat(3, 7), rat(-2, 5), rat(1, 1), rat(5, 3));
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn float_values() {
        assert_eq!(ExtScalar::zero().to_f64(), 0.0);
        assert!((ExtScalar::over_sqrt(1, 1, 6).to_f64() - 0.408_248_290_463_863).abs() < 1e-15);
        assert!((ExtScalar::over_sqrt(1, 2, 3).to_f64() - 0.288_675_134_594_812_9).abs() < 1e-15);
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExtScalar::over_sqrt(1, 1, 6).to_string(), "√6/6");
        assert_eq!(ExtScalar::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(
            (ExtScalar::ratio(1, 3) - ExtScalar::surd(2, 3, 2)).to_string(),
            "1/3 - 2√2/3"
        );
        assert_eq!(ExtScalar::over_sqrt(-1, 1, 6).to_latex(), "-\\frac{\\sqrt{6}}{6}");
    }

    #[test]
    fn json_encoding_of_inverse_sqrt6() {
        let json = serde_json::to_string(&ExtScalar::over_sqrt(1, 1, 6)).unwrap();
        assert_eq!(json, r#"{"q1":"0/1","q2":"0/1","q3":"0/1","q6":"1/6"}"#);
        let back: ExtScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ExtScalar::over_sqrt(1, 1, 6));
    }

    #[test]
    fn non_canonical_literals_rejected() {
        for s in ["2/4", "1/-3", "5", "0/2", "a/b", "1/0"] {
            assert!(parse_rational_literal(s).is_err(), "{s}");
        }
        assert_eq!(parse_rational_literal("-7/3").unwrap(), rat(-7, 3));
    }
}
