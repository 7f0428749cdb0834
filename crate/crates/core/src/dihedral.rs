//! The dihedral group `W(I₂(n))` of order `2n`, its irreducible
//! representations, and representations given by explicit matrices.
//!
//! Elements are written `r^a s₂^b` with `r = s₁s₂`, so `s₁ = r s₂`. The
//! one-dimensional irreducibles follow the sign patterns on `(s₁, s₂)`:
//! `ρ₁,₁ = (+,+)`, `ρ₁,₂ = (−,−)`, `ρ₁,₃ = (+,−)`, `ρ₁,₄ = (−,+)`, the last two
//! existing only for even `n`. The two-dimensional `ρ₂,ₖ` sends
//! `s₁ ↦ [[0,1],[1,0]]` and `s₂ ↦ [[0,ζₙᵏ],[ζₙ⁻ᵏ,0]]` for
//! `1 ≤ k ≤ ⌊(n−1)/2⌋`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{CycMatrix, CyclotomicNumber, Rational};
use crate::spectrum::{Curve, LineCode};

/// Symmetric matrix of finite bond orders `m_ij ≥ 2`, ones on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::InvalidCoxeterMatrix("rank must be positive".into()));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCoxeterMatrix(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 1 {
                    return Err(Error::InvalidCoxeterMatrix(format!("m[{i}][{i}] = {v}, expected 1")));
                }
                if i != j && v < 2 {
                    return Err(Error::InvalidCoxeterMatrix(format!("m[{i}][{j}] = {v} is below 2")));
                }
                if m[j][i] != v {
                    return Err(Error::InvalidCoxeterMatrix(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    /// `I₂(n)`
    pub fn dihedral(n: u32) -> Result<Self> {
        Self::new(vec![vec![1, n], vec![n, 1]])
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn bond(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.m
    }
}

/// `r^rot s₂^[reflection]` in `Dih₂ₙ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    rot: u32,
    reflection: bool,
    n: u32,
}

impl DihedralElement {
    pub fn new(n: u32, rot: i64, reflection: bool) -> Self {
        assert!(n >= 1, "dihedral modulus must be positive");
        DihedralElement {
            rot: rot.rem_euclid(n as i64) as u32,
            reflection,
            n,
        }
    }

    pub fn identity(n: u32) -> Self {
        Self::new(n, 0, false)
    }

    /// `r = s₁s₂`
    pub fn r(n: u32) -> Self {
        Self::new(n, 1, false)
    }

    pub fn s1(n: u32) -> Self {
        Self::new(n, 1, true)
    }

    pub fn s2(n: u32) -> Self {
        Self::new(n, 0, true)
    }

    pub fn rot(&self) -> u32 {
        self.rot
    }

    pub fn is_reflection(&self) -> bool {
        self.reflection
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.rot == 0 && !self.reflection
    }

    /// Uses `s₂ r = r⁻¹ s₂`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let c = other.rot as i64;
        let rot = self.rot as i64 + if self.reflection { -c } else { c };
        Ok(Self::new(self.n, rot, self.reflection ^ other.reflection))
    }

    pub fn inverse(&self) -> Self {
        if self.reflection {
            *self
        } else {
            Self::new(self.n, -(self.rot as i64), false)
        }
    }

    /// Position in the canonical enumeration order.
    pub fn index(&self) -> usize {
        self.rot as usize + if self.reflection { self.n as usize } else { 0 }
    }
}

impl Ord for DihedralElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.reflection, self.rot).cmp(&(other.n, other.reflection, other.rot))
    }
}

impl PartialOrd for DihedralElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rot, self.reflection) {
            (0, false) => f.write_str("e"),
            (0, true) => f.write_str("s2"),
            (1, false) => f.write_str("r"),
            (1, true) => f.write_str("r s2"),
            (a, false) => write!(f, "r^{a}"),
            (a, true) => write!(f, "r^{a} s2"),
        }
    }
}

/// All `2n` elements: rotations `r⁰ … rⁿ⁻¹`, then reflections `s₂ … rⁿ⁻¹s₂`.
pub fn enumerate(n: u32) -> Vec<DihedralElement> {
    (0..n)
        .map(|a| DihedralElement::new(n, a as i64, false))
        .chain((0..n).map(|a| DihedralElement::new(n, a as i64, true)))
        .collect()
}

/// Label of an irreducible representation of `Dih₂ₙ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepLabel {
    OneDim(u8),
    TwoDim(u32),
}

impl IrrepLabel {
    pub fn dim(&self) -> usize {
        match self {
            IrrepLabel::OneDim(_) => 1,
            IrrepLabel::TwoDim(_) => 2,
        }
    }

    pub fn is_valid_for(&self, n: u32) -> bool {
        match *self {
            IrrepLabel::OneDim(j) => j >= 1 && u32::from(j) <= one_dim_count(n),
            IrrepLabel::TwoDim(k) => k >= 1 && k <= two_dim_count(n),
        }
    }

    pub fn validate(&self, n: u32) -> Result<()> {
        if n >= 2 && self.is_valid_for(n) {
            Ok(())
        } else {
            Err(Error::InvalidLabel {
                n,
                label: self.to_string(),
            })
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::OneDim(j) => write!(f, "rho_{{1,{j}}}"),
            IrrepLabel::TwoDim(k) => write!(f, "rho_{{2,{k}}}"),
        }
    }
}

/// Number of one-dimensional irreducibles: 2 for odd `n`, 4 for even `n`.
pub fn one_dim_count(n: u32) -> u32 {
    if n % 2 == 0 {
        4
    } else {
        2
    }
}

/// Number of two-dimensional irreducibles.
pub fn two_dim_count(n: u32) -> u32 {
    if n < 2 {
        0
    } else if n % 2 == 0 {
        (n - 2) / 2
    } else {
        (n - 1) / 2
    }
}

/// Every irreducible label for `n`, one-dimensional first.
pub fn catalog(n: u32) -> Vec<IrrepLabel> {
    (1..=one_dim_count(n))
        .map(|j| IrrepLabel::OneDim(j as u8))
        .chain((1..=two_dim_count(n)).map(IrrepLabel::TwoDim))
        .collect()
}

/// A representation of `Dih₂ₙ` given by its irreducible constituents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    n: u32,
    terms: BTreeMap<IrrepLabel, u32>,
}

impl RepSpec {
    /// Repeated labels are rejected, as are zero multiplicities.
    pub fn new(n: u32, terms: impl IntoIterator<Item = (IrrepLabel, u32)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("dihedral parameter n = {n} is below 2")));
        }
        let mut map = BTreeMap::new();
        for (label, mult) in terms {
            label.validate(n)?;
            if mult == 0 {
                return Err(Error::InvalidSpec(format!("{label} has multiplicity 0")));
            }
            if map.insert(label, mult).is_some() {
                return Err(Error::InvalidSpec(format!("{label} listed twice")));
            }
        }
        if map.is_empty() {
            return Err(Error::InvalidSpec("representation has no constituents".into()));
        }
        Ok(RepSpec { n, terms: map })
    }

    /// Every label with multiplicity one.
    pub fn from_support(n: u32, labels: impl IntoIterator<Item = IrrepLabel>) -> Result<Self> {
        Self::new(n, labels.into_iter().map(|l| (l, 1)))
    }

    /// The regular representation: each irreducible with multiplicity equal
    /// to its dimension.
    pub fn regular(n: u32) -> Result<Self> {
        Self::new(n, catalog(n).into_iter().map(|l| (l, l.dim() as u32)))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (IrrepLabel, u32)> + '_ {
        self.terms.iter().map(|(l, m)| (*l, *m))
    }

    pub fn labels(&self) -> impl Iterator<Item = IrrepLabel> + '_ {
        self.terms.keys().copied()
    }

    pub fn contains(&self, label: IrrepLabel) -> bool {
        self.terms.contains_key(&label)
    }

    pub fn multiplicity(&self, label: IrrepLabel) -> u32 {
        self.terms.get(&label).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> usize {
        self.terms.iter().map(|(l, m)| l.dim() * *m as usize).sum()
    }

    pub fn support(&self) -> RepSpec {
        RepSpec {
            n: self.n,
            terms: self.terms.keys().map(|l| (*l, 1)).collect(),
        }
    }
}

/// Explicit generator matrices `ρ(s₁), …, ρ(s_k)`, each an involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    generators: Vec<CycMatrix>,
}

impl MatrixRep {
    pub fn new(generators: Vec<CycMatrix>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidSpec("no generator matrices".into()));
        };
        let d = first.dim();
        if d == 0 {
            return Err(Error::DimensionMismatch("generator matrices are empty".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != d {
                return Err(Error::DimensionMismatch(format!(
                    "generator {i} is {0}x{0}, expected {d}x{d}",
                    g.dim()
                )));
            }
            if !g.mul(g)?.is_identity() {
                return Err(Error::NotARepresentation(format!("generator {i} does not square to the identity")));
            }
        }
        Ok(MatrixRep { generators })
    }

    pub fn generators(&self) -> &[CycMatrix] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    pub fn generator(&self, i: usize) -> &CycMatrix {
        &self.generators[i]
    }

    /// Restriction to the generator pair `(i, j)`.
    pub fn pair(&self, i: usize, j: usize) -> (&CycMatrix, &CycMatrix) {
        (&self.generators[i], &self.generators[j])
    }

    /// Least common multiple of all entry orders.
    pub fn cyclotomic_order(&self) -> u32 {
        self.generators
            .iter()
            .fold(1, |acc, g| crate::exactnum::intmath::lcm32(acc, g.common_order()))
    }
}

fn sign(positive: bool) -> CyclotomicNumber {
    CyclotomicNumber::from_i64(if positive { 1 } else { -1 })
}

/// Generator matrices `(ρ(s₁), ρ(s₂))` of a catalog irreducible.
pub fn irrep_matrices(n: u32, label: IrrepLabel) -> Result<(CycMatrix, CycMatrix)> {
    label.validate(n)?;
    Ok(match label {
        IrrepLabel::OneDim(j) => {
            let (a, b) = match j {
                1 => (true, true),
                2 => (false, false),
                3 => (true, false),
                _ => (false, true),
            };
            (
                CycMatrix::from_rows(vec![vec![sign(a)]])?,
                CycMatrix::from_rows(vec![vec![sign(b)]])?,
            )
        }
        IrrepLabel::TwoDim(k) => {
            let zero = CyclotomicNumber::zero;
            let s1 = CycMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])?;
            let s2 = CycMatrix::from_rows(vec![
                vec![zero(), CyclotomicNumber::root(n, k as i64)],
                vec![CyclotomicNumber::root(n, -(k as i64)), zero()],
            ])?;
            (s1, s2)
        }
    })
}

/// Spectral curve of a catalog irreducible: the zero set of
/// `det(−I + x₁ρ(s₁) + x₂ρ(s₂))`.
pub fn irrep_curve(n: u32, label: IrrepLabel) -> Result<Curve> {
    label.validate(n)?;
    Ok(match label {
        IrrepLabel::OneDim(1) => Curve::Line(LineCode::PP),
        IrrepLabel::OneDim(2) => Curve::Line(LineCode::MM),
        IrrepLabel::OneDim(3) => Curve::Line(LineCode::PM),
        IrrepLabel::OneDim(_) => Curve::Line(LineCode::MP),
        IrrepLabel::TwoDim(k) => Curve::for_two_dim(k, n),
    })
}

/// Images of every group element, in [`enumerate`] order, under the
/// representation generated by the involutions `a = ρ(s₁)`, `b = ρ(s₂)`.
pub fn element_images(a: &CycMatrix, b: &CycMatrix, n: u32) -> Result<Vec<CycMatrix>> {
    let rot = a.mul(b)?;
    let mut rotations = Vec::with_capacity(n as usize);
    let mut cur = CycMatrix::identity(a.dim());
    for _ in 0..n {
        let next = cur.mul(&rot)?;
        rotations.push(cur);
        cur = next;
    }
    let reflections = rotations.iter().map(|r| r.mul(b)).collect::<Result<Vec<_>>>()?;
    rotations.extend(reflections);
    Ok(rotations)
}

/// Kernel of a catalog irreducible, by enumeration.
pub fn irrep_kernel(n: u32, label: IrrepLabel) -> Result<Vec<DihedralElement>> {
    let (a, b) = irrep_matrices(n, label)?;
    let images = element_images(&a, &b, n)?;
    Ok(enumerate(n)
        .into_iter()
        .zip(images)
        .filter(|(_, m)| m.is_identity())
        .map(|(w, _)| w)
        .collect())
}

/// `χ(w)`, the trace of the catalog matrix of `w`.
pub fn character(n: u32, label: IrrepLabel, w: &DihedralElement) -> Result<CyclotomicNumber> {
    if w.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n,
            right: w.modulus(),
        });
    }
    let (a, b) = irrep_matrices(n, label)?;
    let mut m = CycMatrix::identity(label.dim());
    let rot = a.mul(&b)?;
    for _ in 0..w.rot() {
        m = m.mul(&rot)?;
    }
    if w.is_reflection() {
        m = m.mul(&b)?;
    }
    Ok(m.trace())
}

/// Block-diagonal direct sum, labels in catalog order, each block repeated
/// by its multiplicity.
pub fn assemble(spec: &RepSpec) -> Result<(CycMatrix, CycMatrix)> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (label, mult) in spec.terms() {
        let (a, b) = irrep_matrices(spec.n(), label)?;
        for _ in 0..mult {
            left.push(a.clone());
            right.push(b.clone());
        }
    }
    Ok((CycMatrix::direct_sum(&left), CycMatrix::direct_sum(&right)))
}

/// Smallest `n ≥ 1` with `(AB)ⁿ = I`.
pub fn ord_of_product(a: &CycMatrix, b: &CycMatrix, max_order: u32) -> Result<u32> {
    let rot = a.mul(b)?;
    let mut cur = rot.clone();
    for n in 1..=max_order {
        if cur.is_identity() {
            return Ok(n);
        }
        cur = cur.mul(&rot)?;
    }
    Err(Error::OrderExceeded { max: max_order })
}

/// Character table of `Dih₂ₙ`: one row per catalog label, columns in
/// [`enumerate`] order.
pub fn character_table(n: u32) -> Result<Vec<(IrrepLabel, Vec<CyclotomicNumber>)>> {
    catalog(n)
        .into_iter()
        .map(|label| {
            let (a, b) = irrep_matrices(n, label)?;
            let chars = element_images(&a, &b, n)?.iter().map(CycMatrix::trace).collect();
            Ok((label, chars))
        })
        .collect()
}

/// Decomposes the representation generated by the involutions `a`, `b` of
/// `Dih₂ₙ` into irreducibles using the character inner product
/// `⟨ψ, χ⟩ = (1/2n) Σ_w ψ(w) conj(χ(w))`.
pub fn decompose(a: &CycMatrix, b: &CycMatrix, n: u32) -> Result<RepSpec> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("dihedral parameter n = {n} is below 2")));
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", a.dim(), b.dim())));
    }
    if !a.mul(a)?.is_identity() || !b.mul(b)?.is_identity() {
        return Err(Error::NotARepresentation("generators are not involutions".into()));
    }
    let images = element_images(a, b, n)?;
    if !images[n as usize - 1].mul(&a.mul(b)?)?.is_identity() {
        return Err(Error::OrderViolation { n });
    }
    let traces: Vec<CyclotomicNumber> = images.iter().map(CycMatrix::trace).collect();
    let group_order = CyclotomicNumber::from_i64(2 * n as i64);
    let mut terms = Vec::new();
    let mut total_dim = 0usize;
    for (label, chars) in character_table(n)? {
        let sum = traces
            .iter()
            .zip(&chars)
            .fold(CyclotomicNumber::zero(), |acc, (t, c)| &acc + &(t * &c.conj()));
        let mult = sum.div(&group_order)?;
        let mult = mult
            .as_rational()
            .filter(Rational::is_integer)
            .and_then(|r| r.to_i64())
            .filter(|&m| m >= 0)
            .ok_or_else(|| Error::NotARepresentation(format!("multiplicity of {label} is {mult}")))?;
        if mult > 0 {
            total_dim += label.dim() * mult as usize;
            terms.push((label, mult as u32));
        }
    }
    if total_dim != a.dim() {
        return Err(Error::NotARepresentation(format!(
            "constituents span dimension {total_dim}, matrices have dimension {}",
            a.dim()
        )));
    }
    RepSpec::new(n, terms)
}

/// The reflection representation on the span of simple roots: `σᵢ(αⱼ) =
/// αⱼ + 2cos(π/mᵢⱼ)αᵢ`, with columns holding the images of basis vectors.
pub fn geometric_representation(m: &CoxeterMatrix) -> MatrixRep {
    let rank = m.rank();
    let generators = (0..rank)
        .map(|i| {
            let rows = (0..rank)
                .map(|r| {
                    (0..rank)
                        .map(|c| {
                            if r != i {
                                CyclotomicNumber::from_i64(i64::from(r == c))
                            } else if c == i {
                                CyclotomicNumber::from_i64(-1)
                            } else {
                                CyclotomicNumber::two_cos(1, 2 * m.bond(i, c))
                            }
                        })
                        .collect()
                })
                .collect();
            CycMatrix::from_rows(rows).expect("square by construction")
        })
        .collect();
    MatrixRep::new(generators).expect("reflections are involutions")
}
