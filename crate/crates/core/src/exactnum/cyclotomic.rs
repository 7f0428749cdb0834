//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! An element of order `N` is a polynomial in `ζ_N` of degree `< φ(N)`,
//! i.e. its canonical residue modulo the cyclotomic polynomial `Φ_N`.
//! Internally the coefficients are kept as an integer vector over one common
//! positive denominator. Arithmetic first runs on `i128` with checked
//! operations and only falls back to `BigInt` when an intermediate overflows.
//!
//! Binary operations embed both operands into the order `lcm(N₁, N₂)`.
//! Results that turn out to be rational are demoted to order 1; no other
//! order minimization happens unless [`CyclotomicNumber::normalized`] is
//! called explicitly.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::intmath::{divisors, gcd32, lcm32, mobius, mod_inverse, prime_factors};
use super::{Rational, UniPoly};

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

/// Integer form of `Φ_N`, monic.
struct Modulus {
    degree: usize,
    coeffs: Vec<i64>,
    /// Nonzero coefficients strictly below the leading one.
    low: Vec<(usize, i64)>,
}

fn modulus(n: u32) -> Arc<Modulus> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Modulus>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().expect("modulus cache poisoned").get(&n) {
        return Arc::clone(m);
    }
    let built = Arc::new(build_modulus(n));
    let mut w = cache.write().expect("modulus cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

// Φ_N = ∏_{d | N} (x^d - 1)^{μ(N/d)}
fn build_modulus(n: u32) -> Modulus {
    assert!(n >= 1, "cyclotomic order must be positive");
    let divs = divisors(n);
    let mut poly: Vec<i128> = vec![1];
    for &d in &divs {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut out = vec![0i128; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                out[i + d] += c;
                out[i] -= c;
            }
            poly = out;
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut q = vec![0i128; qlen];
            for i in 0..qlen {
                let prev = if i >= d { q[i - d] } else { 0 };
                q[i] = prev - poly[i];
            }
            poly = q;
        }
    }
    let coeffs: Vec<i64> = poly
        .iter()
        .map(|&c| i64::try_from(c).expect("cyclotomic coefficient exceeds i64"))
        .collect();
    let degree = coeffs.len() - 1;
    debug_assert_eq!(coeffs[degree], 1);
    let low = coeffs[..degree]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k, c))
        .collect();
    Modulus {
        degree,
        coeffs,
        low,
    }
}

/// The `n`-th cyclotomic polynomial `Φ_n`, monic of degree `φ(n)`.
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> UniPoly {
    UniPoly::from_i64s(&modulus(n).coeffs)
}

/// `φ(n)`, the degree of `Φ_n`.
pub fn field_degree(n: u32) -> usize {
    modulus(n).degree
}

// ---------------------------------------------------------------------------
// Integer kernels, generic over a checked i128 fast path and BigInt

trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    /// Nonnegative gcd.
    fn gcd(&self, o: &Self) -> Self;
    fn is_one(&self) -> bool;
    fn div_exact(&self, o: &Self) -> Self;
    fn to_i64(&self) -> Option<i64>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn gcd(&self, o: &Self) -> Self {
        let g = self.unsigned_abs().gcd(&o.unsigned_abs());
        i128::try_from(g).unwrap_or(i128::MAX)
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(*self).ok()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_i64(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Numerator vector over a common denominator.
type Frac<T> = (Vec<T>, T);

/// Canonical integer storage: `den > 0`, `gcd(num..., den) = 1`, and the
/// `Small` variant whenever everything fits in an `i64`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Small { num: Vec<i64>, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

impl Repr {
    fn len(&self) -> usize {
        match self {
            Repr::Small { num, .. } => num.len(),
            Repr::Big { num, .. } => num.len(),
        }
    }

    fn is_coeff_zero(&self, k: usize) -> bool {
        match self {
            Repr::Small { num, .. } => num[k] == 0,
            Repr::Big { num, .. } => Zero::is_zero(&num[k]),
        }
    }

    fn coeff(&self, k: usize) -> Rational {
        match self {
            Repr::Small { num, den } => Rational::new(num[k], *den).expect("positive denominator"),
            Repr::Big { num, den } => Rational::new(num[k].clone(), den.clone()).expect("positive denominator"),
        }
    }

    fn as_frac<T: Scalar>(&self) -> Frac<T> {
        match self {
            Repr::Small { num, den } => (num.iter().map(|&v| T::from_i64(v)).collect(), T::from_i64(*den)),
            Repr::Big { .. } => unreachable!("only small values enter the fast path"),
        }
    }

    fn as_big(&self) -> Frac<BigInt> {
        match self {
            Repr::Small { num, den } => (num.iter().map(|&v| BigInt::from(v)).collect(), BigInt::from(*den)),
            Repr::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    fn from_rationals(coeffs: &[Rational]) -> Frac<BigInt> {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| Integer::lcm(&acc, c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (num, den)
    }
}

fn canonical<T: Scalar>(num: Vec<T>, den: T) -> Option<Repr> {
    let mut g = den.gcd(&T::zero());
    for v in &num {
        if g.is_one() {
            break;
        }
        if !v.is_zero() {
            g = g.gcd(v);
        }
    }
    let all_zero = num.iter().all(Scalar::is_zero);
    let (mut num, mut den) = if all_zero {
        (num, T::from_i64(1))
    } else if g.is_one() {
        (num, den)
    } else {
        (num.iter().map(|v| v.div_exact(&g)).collect(), den.div_exact(&g))
    };
    if den.is_negative() {
        num = num.iter().map(|v| v.neg()).collect::<Option<Vec<_>>>()?;
        den = den.neg()?;
    }
    let small: Option<Vec<i64>> = num.iter().map(Scalar::to_i64).collect();
    match (small, den.to_i64()) {
        (Some(num), Some(den)) => Some(Repr::Small { num, den }),
        _ => Some(Repr::Big {
            num: num.iter().map(Scalar::to_big).collect(),
            den: den.to_big(),
        }),
    }
}

/// `v mod Φ`, truncating to `Φ`'s degree.
fn reduce<T: Scalar>(v: &mut Vec<T>, m: &Modulus) -> Option<()> {
    let deg = m.degree;
    for e in (deg..v.len()).rev() {
        if v[e].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[e], T::zero());
        for &(k, p) in &m.low {
            let idx = e - deg + k;
            v[idx] = v[idx].sub(&c.mul(&T::from_i64(p))?)?;
        }
    }
    v.resize(deg, T::zero());
    Some(())
}

trait Kernel {
    fn run<T: Scalar>(&self, ops: &[Frac<T>]) -> Option<Frac<T>>;
}

fn compute<K: Kernel>(kernel: &K, ops: &[&Repr]) -> Repr {
    if ops.iter().all(|r| matches!(r, Repr::Small { .. })) {
        let fast: Vec<Frac<i128>> = ops.iter().map(|r| r.as_frac()).collect();
        if let Some((num, den)) = kernel.run(&fast) {
            if let Some(r) = canonical(num, den) {
                return r;
            }
        }
    }
    let slow: Vec<Frac<BigInt>> = ops.iter().map(|r| r.as_big()).collect();
    let (num, den) = kernel.run(&slow).expect("BigInt arithmetic cannot overflow");
    canonical(num, den).expect("BigInt arithmetic cannot overflow")
}

struct AddKernel {
    negate_rhs: bool,
}

impl Kernel for AddKernel {
    fn run<T: Scalar>(&self, ops: &[Frac<T>]) -> Option<Frac<T>> {
        let (a, da) = &ops[0];
        let (b, db) = &ops[1];
        let mut out = Vec::with_capacity(a.len());
        for (x, y) in a.iter().zip(b) {
            let l = x.mul(db)?;
            let r = y.mul(da)?;
            out.push(if self.negate_rhs { l.sub(&r)? } else { l.add(&r)? });
        }
        Some((out, da.mul(db)?))
    }
}

struct MulKernel<'a> {
    modulus: &'a Modulus,
}

impl Kernel for MulKernel<'_> {
    fn run<T: Scalar>(&self, ops: &[Frac<T>]) -> Option<Frac<T>> {
        let (a, da) = &ops[0];
        let (b, db) = &ops[1];
        let mut out = vec![T::zero(); (a.len() + b.len()).saturating_sub(1).max(1)];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&x.mul(y)?)?;
            }
        }
        reduce(&mut out, self.modulus)?;
        Some((out, da.mul(db)?))
    }
}

/// Multiplies every coefficient of the first operand by the scalar second
/// operand (a length-1 vector).
struct ScaleKernel;

impl Kernel for ScaleKernel {
    fn run<T: Scalar>(&self, ops: &[Frac<T>]) -> Option<Frac<T>> {
        let (a, da) = &ops[0];
        let (s, ds) = &ops[1];
        let c = &s[0];
        let num = a.iter().map(|x| x.mul(c)).collect::<Option<Vec<_>>>()?;
        Some((num, da.mul(ds)?))
    }
}

/// Sends coefficient `k` to exponent `targets[k]` (with sign) and reduces
/// modulo the target `Φ`.
struct ScatterKernel<'a> {
    targets: &'a [(usize, bool)],
    len: usize,
    modulus: &'a Modulus,
}

impl Kernel for ScatterKernel<'_> {
    fn run<T: Scalar>(&self, ops: &[Frac<T>]) -> Option<Frac<T>> {
        let (a, da) = &ops[0];
        let mut out = vec![T::zero(); self.len.max(self.modulus.degree)];
        for (x, &(e, neg)) in a.iter().zip(self.targets) {
            if x.is_zero() {
                continue;
            }
            out[e] = if neg { out[e].sub(x)? } else { out[e].add(x)? };
        }
        reduce(&mut out, self.modulus)?;
        Some((out, da.clone()))
    }
}

struct NegKernel;

impl Kernel for NegKernel {
    fn run<T: Scalar>(&self, ops: &[Frac<T>]) -> Option<Frac<T>> {
        let (a, da) = &ops[0];
        let num = a.iter().map(Scalar::neg).collect::<Option<Vec<_>>>()?;
        Some((num, da.clone()))
    }
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

/// Exact element of ℚ(ζ_N) in canonical form modulo `Φ_N`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u32,
    repr: Repr,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        Self::from_rational(&Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        CyclotomicNumber {
            order: 1,
            repr: Repr::Small { num: vec![v], den: 1 },
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        let (num, den) = Repr::from_rationals(std::slice::from_ref(r));
        CyclotomicNumber {
            order: 1,
            repr: canonical(num, den).expect("BigInt canonicalization"),
        }
    }

    /// Builds `Σ coeffs[k] ζ_order^k`, reduced modulo `Φ_order`. Any number of
    /// coefficients is accepted.
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        let m = modulus(order);
        let (mut num, den) = Repr::from_rationals(coeffs);
        reduce(&mut num, &m).expect("BigInt reduction");
        Ok(CyclotomicNumber {
            order,
            repr: canonical(num, den).expect("BigInt canonicalization"),
        })
    }

    /// `ζ_order^power`, exponent taken modulo `order`.
    ///
    /// Panics if `order == 0`.
    pub fn root(order: u32, power: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = power.rem_euclid(order as i64) as usize;
        let m = modulus(order);
        let mut num = vec![0i128; (e + 1).max(m.degree)];
        num[e] = 1;
        reduce(&mut num, &m).expect("root of unity reduction");
        CyclotomicNumber {
            order,
            repr: canonical(num, 1).expect("root of unity canonicalization"),
        }
    }

    /// `2cos(2πk/n) = ζ_n^k + ζ_n^{-k}`.
    pub fn two_cos(k: i64, n: u32) -> Self {
        &Self::root(n, k) + &Self::root(n, -k)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficients, exactly `φ(order)` of them.
    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.repr.len()).map(|k| self.repr.coeff(k)).collect()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        if k < self.repr.len() {
            self.repr.coeff(k)
        } else {
            Rational::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.repr.len()).all(|k| self.repr.is_coeff_zero(k))
    }

    pub fn is_rational(&self) -> bool {
        (1..self.repr.len()).all(|k| self.repr.is_coeff_zero(k))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeff(0))
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    fn demote(self) -> Self {
        if self.order != 1 && self.is_rational() {
            Self::from_rational(&self.coeff(0))
        } else {
            self
        }
    }

    fn scatter(&self, targets: &[(usize, bool)], target_order: u32) -> Self {
        let m = modulus(target_order);
        let len = targets.iter().map(|&(e, _)| e + 1).max().unwrap_or(0);
        let kernel = ScatterKernel {
            targets,
            len,
            modulus: &m,
        };
        CyclotomicNumber {
            order: target_order,
            repr: compute(&kernel, &[&self.repr]),
        }
    }

    /// Image under `ζ_M ↦ ζ_N^{N/M}` where `M = self.order()` must divide `N`.
    pub fn embed(&self, target_order: u32) -> Result<Self> {
        if target_order == 0 || target_order % self.order != 0 {
            return Err(Error::IncompatibleOrders {
                from: self.order,
                to: target_order,
            });
        }
        if target_order == self.order {
            return Ok(self.clone());
        }
        let step = (target_order / self.order) as usize;
        let targets: Vec<(usize, bool)> = (0..self.repr.len()).map(|k| (k * step, false)).collect();
        Ok(self.scatter(&targets, target_order))
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = lcm32(a.order, b.order);
        (
            a.embed(l).expect("lcm is a common multiple"),
            b.embed(l).expect("lcm is a common multiple"),
        )
    }

    fn add_impl(&self, other: &Self, negate_rhs: bool) -> Self {
        let (a, b) = Self::unify(self, other);
        CyclotomicNumber {
            order: a.order,
            repr: compute(&AddKernel { negate_rhs }, &[&a.repr, &b.repr]),
        }
        .demote()
    }

    fn scale_by(&self, scalar: &Self) -> Self {
        CyclotomicNumber {
            order: self.order,
            repr: compute(&ScaleKernel, &[&self.repr, &scalar.repr]),
        }
        .demote()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if other.order == 1 {
            return self.scale_by(other);
        }
        if self.order == 1 {
            return other.scale_by(self);
        }
        let (a, b) = Self::unify(self, other);
        let m = modulus(a.order);
        CyclotomicNumber {
            order: a.order,
            repr: compute(&MulKernel { modulus: &m }, &[&a.repr, &b.repr]),
        }
        .demote()
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            repr: compute(&NegKernel, &[&self.repr]),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Φ_N`. The result may live at a smaller order than `self`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&r.recip()?));
        }
        let a = self.normalized();
        let support: Vec<usize> = (0..a.repr.len()).filter(|&k| !a.repr.is_coeff_zero(k)).collect();
        if let [k] = support[..] {
            // c ζ^k
            let c = a.repr.coeff(k).recip()?;
            return Ok(Self::root(a.order, -(k as i64)).scale_by(&Self::from_rational(&c)));
        }
        let phi = cyclotomic_polynomial(a.order);
        let poly = UniPoly::new(a.coeffs());
        let inv = poly
            .inverse_mod(&phi)?
            .expect("nonzero elements of a field are invertible");
        Self::from_coeffs(a.order, inv.coeffs())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Complex conjugation, `ζ_N ↦ ζ_N^{-1}`.
    pub fn conj(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        let n = self.order as usize;
        let targets: Vec<(usize, bool)> = (0..self.repr.len()).map(|k| ((n - k) % n, false)).collect();
        self.scatter(&targets, self.order)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The reduced fraction `q = num/den` with `0 < q < 1/2`, `den ≤ max_den`
    /// and `self = 2cos(2πq)`, if any.
    pub fn match_two_cos(&self, max_den: u32) -> Option<(u32, u32)> {
        let (re, im) = self.approx();
        if im.abs() > 1e-6 || re <= -2.0 || re >= 2.0 {
            return None;
        }
        for den in 3..=max_den {
            for num in 1..den.div_ceil(2) {
                if 2 * num >= den || gcd32(num, den) != 1 {
                    continue;
                }
                let guess = 2.0 * (std::f64::consts::TAU * num as f64 / den as f64).cos();
                if (guess - re).abs() > 1e-6 {
                    continue;
                }
                if Self::two_cos(num as i64, den) == *self {
                    return Some((num, den));
                }
            }
        }
        None
    }

    /// Floating-point value at `ζ_N = e^{2πi/N}`. For display only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for k in 0..self.repr.len() {
            if self.repr.is_coeff_zero(k) {
                continue;
            }
            let c = self.repr.coeff(k).to_f64();
            let angle = std::f64::consts::TAU * k as f64 / n;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    /// Equal element at the smallest order that contains it.
    pub fn normalized(&self) -> Self {
        if self.is_rational() {
            return Self::from_rational(&self.coeff(0));
        }
        let mut cur = self.clone();
        'outer: loop {
            for p in prime_factors(cur.order) {
                if let Some(smaller) = cur.descend(p) {
                    cur = smaller;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Tries to write `self` at order `N/p` for a prime `p | N`.
    fn descend(&self, p: u32) -> Option<Self> {
        let n = self.order;
        let m = n / p;
        if m % p == 0 {
            // Φ_N(x) = Φ_M(x^p): subfield elements are supported on multiples of p.
            let pu = p as usize;
            if (0..self.repr.len()).any(|k| k % pu != 0 && !self.repr.is_coeff_zero(k)) {
                return None;
            }
            let coeffs: Vec<Rational> = (0..self.repr.len()).step_by(pu).map(|k| self.repr.coeff(k)).collect();
            return Some(Self::from_coeffs(m, &coeffs).expect("positive order"));
        }
        // gcd(p, M) = 1: ζ_N = ζ_p^s ζ_M^t, so self = Σ_i ζ_p^i g_i with
        // g_i ∈ ℚ(ζ_M). Since ζ_p, …, ζ_p^{p-1} is a basis over ℚ(ζ_M), self
        // lies in ℚ(ζ_M) exactly when g_1 = … = g_{p-1}, and then equals g_0 - g_1.
        let s = mod_inverse(m as u64, p as u64) as usize;
        let t = mod_inverse(p as u64, m as u64) as usize;
        let mut parts: Vec<Vec<Rational>> = vec![vec![Rational::zero(); m as usize]; p as usize];
        for k in 0..self.repr.len() {
            if self.repr.is_coeff_zero(k) {
                continue;
            }
            let i = (k * s) % p as usize;
            let j = (k * t) % m as usize;
            parts[i][j] = &parts[i][j] + &self.repr.coeff(k);
        }
        let parts: Vec<Self> = parts
            .iter()
            .map(|c| Self::from_coeffs(m, c).expect("positive order"))
            .collect();
        if parts[2..].iter().any(|g| *g != parts[1]) {
            return None;
        }
        let out = parts[0].sub(&parts[1]);
        Some(if out.order == m { out } else { out.embed(m).expect("rational embeds anywhere") })
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.repr == other.repr;
        }
        let (a, b) = Self::unify(self, other);
        a.repr == b.repr
    }
}

impl Eq for CyclotomicNumber {}

impl Default for CyclotomicNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CyclotomicNumber {
    fn from(v: i64) -> Self {
        Self::from_i64(v)
    }
}

impl From<Rational> for CyclotomicNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> CyclotomicNumber {
        CyclotomicNumber::add(self, rhs)
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        CyclotomicNumber::sub(self, rhs)
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        CyclotomicNumber::mul(self, rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber::neg(self)
    }
}

impl fmt::Display for CyclotomicNumber {
    /// Rationals print bare; anything else prints as a parenthesized sum in
    /// powers of `zN`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        f.write_str("(")?;
        let mut first = true;
        for k in 0..self.repr.len() {
            if self.repr.is_coeff_zero(k) {
                continue;
            }
            let c = self.repr.coeff(k);
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let root = match k {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{k}", self.order),
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(&root)?,
                (_, false) => write!(f, "{mag}*{root}")?,
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{}]{}", self.order, self)
    }
}

#[derive(Serialize, Deserialize)]
struct CycWire {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycWire {
            order: self.order,
            coeffs: self.coeffs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = CycWire::deserialize(deserializer)?;
        if wire.order == 0 {
            return Err(serde::de::Error::custom("cyclotomic order must be positive"));
        }
        CyclotomicNumber::from_coeffs(wire.order, &wire.coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root(n, k)
    }

    fn q(v: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_i64(v)
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), UniPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(6), UniPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), UniPoly::from_i64s(&[1, 0, -1, 0, 1]));
        // first order with a coefficient of magnitude 2
        assert!(cyclotomic_polynomial(105).coeffs().iter().any(|c| *c == Rational::from(-2)));
    }

    #[test]
    fn roots_reduce() {
        assert_eq!(z(4, 1).mul(&z(4, 1)), q(-1));
        assert_eq!(z(7, 0), q(1));
        assert_eq!(z(6, 3), q(-1));
        assert_eq!(z(5, 5), q(1));
        assert_eq!(z(5, -1), z(5, 4));
        assert_eq!(z(4, 1).coeffs().len(), 2);
    }

    #[test]
    fn inverse_of_i() {
        assert_eq!(z(4, 1).inv().unwrap(), z(4, 1).neg());
        assert_eq!(q(0).inv(), Err(Error::DivisionByZero));
        let a = &z(12, 1) + &q(3);
        assert_eq!(a.mul(&a.inv().unwrap()), q(1));
    }

    #[test]
    fn embedding() {
        assert_eq!(z(3, 1).embed(6).unwrap(), z(6, 2));
        let one12 = q(1).embed(2).unwrap().embed(12).unwrap();
        assert_eq!(one12.order(), 12);
        assert_eq!(one12, q(1));
        let c = CyclotomicNumber::two_cos(1, 3).embed(12).unwrap();
        assert_eq!(c, q(-1));
        assert_eq!(
            z(4, 1).embed(6),
            Err(Error::IncompatibleOrders { from: 4, to: 6 })
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(4, 1).conj(), z(4, 1).neg());
        let r = CyclotomicNumber::from_rational(&Rational::new(3, 7).unwrap());
        assert_eq!(r.conj(), r);
        let c = CyclotomicNumber::two_cos(1, 5);
        assert_eq!(c.conj(), c);
        assert!(!z(5, 1).is_real());
    }

    #[test]
    fn two_cos_values() {
        assert_eq!(CyclotomicNumber::two_cos(1, 4), q(0));
        assert_eq!(CyclotomicNumber::two_cos(1, 3), q(-1));
        assert_eq!(CyclotomicNumber::two_cos(1, 6), q(1));
        assert_eq!(CyclotomicNumber::two_cos(1, 2), q(-2));
    }

    #[test]
    fn match_two_cos_examples() {
        assert_eq!(q(-1).match_two_cos(10), Some((1, 3)));
        assert_eq!(q(0).match_two_cos(10), Some((1, 4)));
        assert_eq!(q(3).match_two_cos(10), None);
        assert_eq!(CyclotomicNumber::two_cos(3, 7).match_two_cos(7), Some((3, 7)));
        assert_eq!(CyclotomicNumber::two_cos(3, 7).match_two_cos(6), None);
        assert_eq!(z(5, 1).match_two_cos(10), None);
    }

    #[test]
    fn approximations() {
        let (re, im) = q(1).approx();
        assert_eq!((re, im), (1.0, 0.0));
        let (re, im) = z(4, 1).approx();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = CyclotomicNumber::two_cos(1, 5).approx();
        assert!((re - 0.618034).abs() < 1e-6 && im.abs() < 1e-9);
    }

    #[test]
    fn normalization_shrinks_order() {
        let a = CyclotomicNumber::two_cos(1, 8).embed(1680).unwrap();
        let n = a.normalized();
        assert_eq!(n, a);
        assert_eq!(n.order(), 8);
        let b = z(10, 3).normalized();
        assert_eq!(b.order(), 5);
        assert_eq!(b, z(10, 3));
        let c = (&z(15, 5) + &z(15, 3)).normalized();
        assert_eq!(c.order(), 15);
        assert_eq!(z(7, 2).embed(21).unwrap().normalized().order(), 7);
    }

    #[test]
    fn big_fallback() {
        // coefficients leave the i64 range quickly
        let mut a = &z(7, 1) + &q(1_000_000_007);
        for _ in 0..4 {
            a = a.mul(&a);
        }
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), q(1));
        let json = serde_json::to_string(&a).unwrap();
        let back: CyclotomicNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn json_form_reduces_on_load() {
        // ζ_4^2 written unreduced
        let a: CyclotomicNumber = serde_json::from_str(r#"{"order":4,"coeffs":[[0,1],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(a, q(-1));
        assert_eq!(
            serde_json::to_string(&z(4, 1)).unwrap(),
            r#"{"order":4,"coeffs":[[0,1],[1,1]]}"#
        );
        assert!(serde_json::from_str::<CyclotomicNumber>(r#"{"order":0,"coeffs":[]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(q(-3).to_string(), "-3");
        assert_eq!(z(4, 1).to_string(), "(z4)");
        assert_eq!((&z(6, 1) - &q(2)).to_string(), "(-2 + z6)");
    }
}
