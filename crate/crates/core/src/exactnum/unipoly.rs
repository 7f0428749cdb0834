use std::fmt;

use crate::error::{Error, Result};

use super::Rational;

/// Univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[0] = Rational::from(-1);
        coeffs[n] = Rational::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.recip()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] * &lead_inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = &rem[idx] - &(&c * d);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Inverse of `self` modulo `modulus` via the extended Euclidean
    /// algorithm, or `None` when the two are not coprime.
    pub fn inverse_mod(&self, modulus: &Self) -> Result<Option<Self>> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (_, a) = self.div_rem(modulus)?;
        if a.is_zero() {
            return Ok(None);
        }
        // Invariant: s * self ≡ r (mod modulus) for both rows.
        let (mut r0, mut s0) = (modulus.clone(), Self::zero());
        let (mut r1, mut s1) = (a, Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return Ok(None);
        }
        let c = r0.coeffs[0].recip()?;
        let (_, inv) = s0.scale(&c).div_rem(modulus)?;
        Ok(Some(inv))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
