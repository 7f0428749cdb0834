use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::CyclotomicNumber;

/// Dense square matrix over cyclotomic numbers.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycMatrix {
    rows: Vec<Vec<CyclotomicNumber>>,
}

impl CycMatrix {
    pub fn from_rows(rows: Vec<Vec<CyclotomicNumber>>) -> Result<Self> {
        let d = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries in a {d}x{d} matrix",
                rows[bad].len()
            )));
        }
        Ok(CycMatrix { rows })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| CyclotomicNumber::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn identity(d: usize) -> Self {
        Self::scalar(d, &CyclotomicNumber::one())
    }

    pub fn scalar(d: usize, c: &CyclotomicNumber) -> Self {
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { c.clone() } else { CyclotomicNumber::zero() })
                    .collect()
            })
            .collect();
        CycMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<CyclotomicNumber>] {
        &self.rows
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.dim();
        if other.dim() != d {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {d}x{d} by {0}x{0}",
                other.dim()
            )));
        }
        let mut rows = vec![vec![CyclotomicNumber::zero(); d]; d];
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    rows[i][j] = &rows[i][j] + &(a * b);
                }
            }
        }
        Ok(CycMatrix { rows })
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    pub fn trace(&self) -> CyclotomicNumber {
        self.rows
            .iter()
            .enumerate()
            .fold(CyclotomicNumber::zero(), |acc, (i, r)| &acc + &r[i])
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[CycMatrix]) -> Self {
        let d: usize = blocks.iter().map(CycMatrix::dim).sum();
        let mut rows = vec![vec![CyclotomicNumber::zero(); d]; d];
        let mut offset = 0;
        for b in blocks {
            for (i, row) in b.rows.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    rows[offset + i][offset + j] = v.clone();
                }
            }
            offset += b.dim();
        }
        CycMatrix { rows }
    }

    pub fn map(&self, f: impl Fn(&CyclotomicNumber) -> CyclotomicNumber) -> Self {
        CycMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    /// Least common multiple of the entries' cyclotomic orders.
    pub fn common_order(&self) -> u32 {
        self.rows
            .iter()
            .flatten()
            .fold(1, |acc, v| super::intmath::lcm32(acc, v.order()))
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str("]")
    }
}
