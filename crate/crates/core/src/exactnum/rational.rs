//! Arbitrary-precision rationals.
//!
//! A thin newtype over [`num_rational::BigRational`], which already keeps
//! values reduced with a positive denominator. The wrapper exists so that the
//! JSON form (`[num, den]`) and the text rendering are fixed in one place.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The value as a machine integer, if it is one and fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on a zero divisor; use [`Rational::recip`] for a checked path.
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Integers that fit in an i64 are written as JSON numbers, anything larger as
// a decimal string. Both forms are accepted on input.
fn serialize_int<S: SerializeTuple>(seq: &mut S, v: &BigInt) -> std::result::Result<(), S::Error> {
    match v.to_i64() {
        Some(small) => seq.serialize_element(&small),
        None => seq.serialize_element(&v.to_string()),
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_tuple(2)?;
        serialize_int(&mut seq, self.numer())?;
        serialize_int(&mut seq, self.denom())?;
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Text(String),
}

impl IntRepr {
    fn into_bigint<E: de::Error>(self) -> std::result::Result<BigInt, E> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(v)),
            IntRepr::Text(s) => s
                .parse::<BigInt>()
                .map_err(|_| E::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PairVisitor;
        impl<'de> Visitor<'de> for PairVisitor {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a [numerator, denominator] pair")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Rational, A::Error> {
                let num: IntRepr = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let den: IntRepr = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Rational::new(num.into_bigint()?, den.into_bigint()?)
                    .map_err(|_| de::Error::custom("zero denominator"))
            }
        }
        deserializer.deserialize_seq(PairVisitor)
    }
}
