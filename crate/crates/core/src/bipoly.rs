//! Bivariate polynomials over cyclotomic coefficients and exact determinants
//! of affine matrix pencils `-I + x₁A + x₂B`.
//!
//! Terms are ordered graded-lexicographically with `x₁ > x₂`; the last key
//! of the term map is the leading monomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{CycMatrix, CyclotomicNumber};

/// `x₁^a x₂^b`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x1: u32,
    pub x2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x1: 0, x2: 0 };

    pub fn new(x1: u32, x2: u32) -> Self {
        Monomial { x1, x2 }
    }

    pub fn degree(self) -> u32 {
        self.x1 + self.x2
    }

    fn divides(self, other: Monomial) -> bool {
        self.x1 <= other.x1 && self.x2 <= other.x2
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.x1 + other.x1, self.x2 + other.x2)
    }

    fn over(self, other: Monomial) -> Monomial {
        Monomial::new(self.x1 - other.x1, self.x2 - other.x2)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x1.cmp(&other.x1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, CyclotomicNumber>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::one())
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: CyclotomicNumber, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { terms }
    }

    pub fn x1() -> Self {
        Self::term(CyclotomicNumber::one(), Monomial::new(1, 0))
    }

    pub fn x2() -> Self {
        Self::term(CyclotomicNumber::one(), Monomial::new(0, 1))
    }

    /// `c₀ + c₁x₁ + c₂x₂`
    pub fn affine(c0: &CyclotomicNumber, c1: &CyclotomicNumber, c2: &CyclotomicNumber) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::ONE, c0.clone());
        p.add_term(Monomial::new(1, 0), c1.clone());
        p.add_term(Monomial::new(0, 1), c2.clone());
        p
    }

    /// Builds a polynomial from `(x1 exponent, x2 exponent, coefficient)`
    /// triples with integer coefficients.
    pub fn from_i64_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = BiPoly::zero();
        for &(a, b, c) in terms {
            p.add_term(Monomial::new(a, b), CyclotomicNumber::from_i64(c));
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CyclotomicNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> CyclotomicNumber {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(Monomial, &CyclotomicNumber)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                out.add_term(ma.times(*mb), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BiPoly::one(), |acc, _| acc.mul(self))
    }

    /// `Some(q)` with `self = q * divisor` exactly, `None` if no such
    /// polynomial exists. Division runs in graded-lex order; for a single
    /// divisor a zero remainder is equivalent to divisibility.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (lead_m, lead_c) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((m, c)) = rem.leading() {
            if !lead_m.divides(m) {
                return Ok(None);
            }
            let qm = m.over(lead_m);
            let qc = c * &lead_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.times(qm), (dc * &qc).neg());
            }
            debug_assert!(rem.terms.get(&m).is_none());
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    pub fn eval(&self, x1: &CyclotomicNumber, x2: &CyclotomicNumber) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::zero();
        for (m, c) in &self.terms {
            let v = c * &(&x1.pow(m.x1) * &x2.pow(m.x2));
            acc = &acc + &v;
        }
        acc
    }

    /// Substitutes `(x₁, x₂) ↦ (x₂, x₁)`.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x2, m.x1), c.clone()))
                .collect(),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut parts = Vec::new();
    for (name, e) in [("x1", m.x1), ("x2", m.x2)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for BiPoly {
    /// Canonical rendering: descending graded-lex order, e.g.
    /// `-x1^2 + x1*x2 - x2^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = match c.as_rational() {
                Some(r) => (r.is_negative(), crate::exactnum::CyclotomicNumber::from_rational(&r.abs())),
                None => (false, c.clone()),
            };
            match (idx == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{body}")?;
            } else {
                if !body.is_one() {
                    write!(f, "{body}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Square matrix of bivariate polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<BiPoly>>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 || rows.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "polynomial matrix must be square and nonempty, got {d} rows"
            )));
        }
        Ok(PolyMatrix { rows })
    }

    /// The pencil `-I + x₁A + x₂B`.
    pub fn pencil(a: &CycMatrix, b: &CycMatrix) -> Result<Self> {
        let d = a.dim();
        if b.dim() != d || d == 0 {
            return Err(Error::DimensionMismatch(format!(
                "pencil needs two nonempty matrices of equal size, got {d} and {}",
                b.dim()
            )));
        }
        let minus_one = CyclotomicNumber::from_i64(-1);
        let zero = CyclotomicNumber::zero();
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let c0 = if i == j { &minus_one } else { &zero };
                        BiPoly::affine(c0, a.get(i, j), b.get(i, j))
                    })
                    .collect()
            })
            .collect();
        Ok(PolyMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.rows[i][j]
    }

    /// Exact determinant. The matrix is first split into the strongly
    /// connected components of its sparsity graph; after a simultaneous row
    /// and column permutation it is block triangular, so the determinant is
    /// the product of the diagonal blocks' determinants.
    pub fn det(&self) -> BiPoly {
        let blocks = self.components();
        if blocks.len() == 1 {
            return bareiss(self.rows.clone());
        }
        blocks.iter().fold(BiPoly::one(), |acc, idx| {
            let sub = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.rows[i][j].clone()).collect())
                .collect();
            acc.mul(&bareiss(sub))
        })
    }

    /// Index sets of mutually reachable rows, where `i → j` when entry
    /// `(i, j)` is nonzero.
    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.dim();
        let mut reach: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| i == j || !self.rows[i][j].is_zero()).collect())
            .collect();
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let block: Vec<usize> = (i..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
            for &j in &block {
                assigned[j] = true;
            }
            out.push(block);
        }
        out
    }
}

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact in the polynomial ring.
fn bareiss(mut m: Vec<Vec<BiPoly>>) -> BiPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = BiPoly::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BiPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = pivot.mul(&row[j]);
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = v.sub(&factor.mul(&pivot_row[j]));
                }
                row[j] = if prev.is_constant() && prev.coeff(Monomial::ONE).is_one() {
                    v
                } else {
                    v.exact_div(&prev)
                        .expect("previous pivot is nonzero")
                        .expect("Bareiss division is exact")
                };
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// `det(-I + x₁A + x₂B)`.
pub fn det_pencil(a: &CycMatrix, b: &CycMatrix) -> Result<BiPoly> {
    Ok(PolyMatrix::pencil(a, b)?.det())
}
