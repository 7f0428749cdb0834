//! Faithfulness of dihedral representations and recovery of Coxeter
//! matrices from pair spectra.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dihedral::{
    element_images, enumerate, irrep_matrices, CoxeterMatrix, DihedralElement, IrrepLabel, MatrixRep, RepSpec,
};
use crate::error::{Error, Result};
use crate::exactnum::intmath::{gcd32, lcm32};
use crate::exactnum::CycMatrix;
use crate::spectrum::{spectrum_of_matrices, Curve, CurveSet, LineCode, PairCurves};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaithfulnessVerdict {
    pub faithful: bool,
    pub kernel_size: usize,
    /// Smallest nontrivial kernel element in canonical order.
    pub witness: Option<DihedralElement>,
    pub method: Method,
}

impl FaithfulnessVerdict {
    fn from_kernel(kernel: &[DihedralElement], method: Method) -> Self {
        let witness = kernel.iter().copied().filter(|w| !w.is_identity()).min();
        FaithfulnessVerdict {
            faithful: witness.is_none(),
            kernel_size: kernel.len(),
            witness,
            method,
        }
    }
}

impl fmt::Display for FaithfulnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let method = match self.method {
            Method::Theorem => "theorem",
            Method::Oracle => "oracle",
        };
        match &self.witness {
            None => write!(f, "faithful ({method}, kernel size 1)"),
            Some(w) => write!(f, "not faithful ({method}, kernel size {}, witness {w})", self.kernel_size),
        }
    }
}

fn kernel_of_images(n: u32, images: &[CycMatrix]) -> Vec<DihedralElement> {
    enumerate(n)
        .into_iter()
        .zip(images)
        .filter(|(_, m)| m.is_identity())
        .map(|(w, _)| w)
        .collect()
}

/// Elements acting trivially in every constituent, in canonical order.
pub fn kernel_of_spec(spec: &RepSpec) -> Result<Vec<DihedralElement>> {
    let n = spec.n();
    let mut in_kernel = vec![true; 2 * n as usize];
    for label in spec.labels() {
        let (a, b) = irrep_matrices(n, label)?;
        for (flag, m) in in_kernel.iter_mut().zip(element_images(&a, &b, n)?) {
            *flag &= m.is_identity();
        }
    }
    Ok(enumerate(n)
        .into_iter()
        .zip(in_kernel)
        .filter(|(_, keep)| *keep)
        .map(|(w, _)| w)
        .collect())
}

/// Closed-form faithfulness test on the labels of the constituents.
///
/// For even `n ≥ 4` with a sign-mixed one-dimensional constituent, the
/// condition is `gcd(n/2, k₁, …, k_t) = 1`.
pub fn theorem_predicts_faithful(spec: &RepSpec) -> bool {
    let n = spec.n();
    let ks: Vec<u32> = spec
        .labels()
        .filter_map(|l| match l {
            IrrepLabel::TwoDim(k) => Some(k),
            IrrepLabel::OneDim(_) => None,
        })
        .collect();
    if n == 2 {
        let nontrivial = [2u8, 3, 4]
            .iter()
            .filter(|&&j| spec.contains(IrrepLabel::OneDim(j)))
            .count();
        return nontrivial >= 2;
    }
    if ks.is_empty() {
        return false;
    }
    let mixed = spec.contains(IrrepLabel::OneDim(3)) || spec.contains(IrrepLabel::OneDim(4));
    if n % 2 == 0 && mixed {
        ks.iter().fold(n / 2, |g, &k| gcd32(g, k)) == 1
    } else {
        ks.iter().fold(0, |g, &k| gcd32(g, gcd32(n, k))) == 1
    }
}

/// Faithfulness by the closed-form criterion. When the answer is negative
/// the kernel is enumerated to fill in its size and a witness.
pub fn is_faithful_theorem(spec: &RepSpec) -> Result<FaithfulnessVerdict> {
    for l in spec.labels() {
        l.validate(spec.n())?;
    }
    if theorem_predicts_faithful(spec) {
        return Ok(FaithfulnessVerdict {
            faithful: true,
            kernel_size: 1,
            witness: None,
            method: Method::Theorem,
        });
    }
    let kernel = kernel_of_spec(spec)?;
    let witness = kernel.iter().copied().filter(|w| !w.is_identity()).min();
    Ok(FaithfulnessVerdict {
        faithful: false,
        kernel_size: kernel.len(),
        witness,
        method: Method::Theorem,
    })
}

/// Faithfulness by enumerating the kernel.
pub fn is_faithful_oracle(spec: &RepSpec) -> Result<FaithfulnessVerdict> {
    Ok(FaithfulnessVerdict::from_kernel(&kernel_of_spec(spec)?, Method::Oracle))
}

/// Faithfulness of the pair `(A, B)` as a representation of `Dih₂ₙ`, `n`
/// the order of `AB`. Returns `n` alongside the verdict.
pub fn is_faithful_matrices(a: &CycMatrix, b: &CycMatrix, max_order: u32) -> Result<(u32, FaithfulnessVerdict)> {
    let n = crate::dihedral::ord_of_product(a, b, max_order)?;
    let images = element_images(a, b, n)?;
    Ok((n, FaithfulnessVerdict::from_kernel(&kernel_of_images(n, &images), Method::Oracle)))
}

/// Faithfulness of `(A, B)` as a representation of `Dih₂ₙ` for a given `n`,
/// which must satisfy `(AB)ⁿ = I`.
pub fn is_faithful_matrices_at(a: &CycMatrix, b: &CycMatrix, n: u32) -> Result<FaithfulnessVerdict> {
    if n < 1 {
        return Err(Error::InvalidSpec("dihedral parameter must be positive".into()));
    }
    let images = element_images(a, b, n)?;
    if !images[n as usize - 1].mul(&a.mul(b)?)?.is_identity() {
        return Err(Error::OrderViolation { n });
    }
    Ok(FaithfulnessVerdict::from_kernel(&kernel_of_images(n, &images), Method::Oracle))
}

/// Bond recovered from one pair spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReconstruction {
    /// 1: lines only; 2: ellipses, no sign-mixed line; 3: ellipses and a
    /// sign-mixed line.
    pub case: u8,
    /// Least common multiple of ellipse denominators (1 when there are none).
    pub theta: u32,
    pub m: u32,
}

pub fn reconstruct_order(curves: &CurveSet) -> Result<OrderReconstruction> {
    curves.validate()?;
    let theta = curves.ellipses().fold(1, |acc, (_, den, _)| lcm32(acc, den));
    let has_ellipse = curves.ellipses().next().is_some();
    let mixed = curves.contains(&Curve::Line(LineCode::MP)) || curves.contains(&Curve::Line(LineCode::PM));
    Ok(if !has_ellipse {
        OrderReconstruction { case: 1, theta, m: 2 }
    } else if mixed {
        let m = if theta % 2 == 1 { 2 * theta } else { theta };
        OrderReconstruction { case: 3, theta, m }
    } else {
        OrderReconstruction { case: 2, theta, m: theta }
    })
}

/// The support spec at parameter `n` whose spectrum is `curves`, if any.
pub fn curves_to_spec(curves: &CurveSet, n: u32) -> Result<Option<RepSpec>> {
    curves.validate()?;
    let mut labels = Vec::new();
    for (c, _) in curves.iter() {
        let label = match c {
            Curve::Line(LineCode::PP) => IrrepLabel::OneDim(1),
            Curve::Line(LineCode::MM) => IrrepLabel::OneDim(2),
            Curve::Line(LineCode::PM) => IrrepLabel::OneDim(3),
            Curve::Line(LineCode::MP) => IrrepLabel::OneDim(4),
            Curve::Ellipse { num, den } => {
                if n % den != 0 {
                    return Ok(None);
                }
                IrrepLabel::TwoDim(num * (n / den))
            }
        };
        if !label.is_valid_for(n) {
            return Ok(None);
        }
        labels.push(label);
    }
    if labels.is_empty() {
        return Ok(None);
    }
    RepSpec::from_support(n, labels).map(Some)
}

/// Whether some faithful representation of `Dih₂ₘ`, `m` the reconstructed
/// bond, has exactly this spectrum support.
pub fn validate_faithful_curveset(curves: &CurveSet) -> Result<bool> {
    let order = reconstruct_order(curves)?;
    match curves_to_spec(curves, order.m)? {
        Some(spec) => Ok(is_faithful_theorem(&spec)?.faithful),
        None => Ok(false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    pub case: u8,
    pub theta: u32,
    pub m: u32,
    /// `None` when only curves were available.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub faithful: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub matrix: CoxeterMatrix,
    pub pairs: Vec<PairReport>,
}

#[derive(Serialize)]
struct ReportFile<'a> {
    rank: usize,
    m: &'a [Vec<u32>],
    pairs: &'a [PairReport],
}

impl ReconstructionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ReportFile {
            rank: self.matrix.rank(),
            m: self.matrix.rows(),
            pairs: &self.pairs,
        })
        .expect("reports always serialize")
    }
}

/// Assembles a Coxeter matrix from one curve set per pair `i < j`. In strict
/// mode every curve set must be realizable by a faithful representation.
pub fn reconstruct_matrix(per_pair: &[PairCurves], rank: usize, strict: bool) -> Result<ReconstructionReport> {
    if rank == 0 {
        return Err(Error::InvalidCurveSet("rank must be positive".into()));
    }
    let mut by_pair = BTreeMap::new();
    for p in per_pair {
        if p.i >= p.j || p.j >= rank {
            return Err(Error::InvalidCurveSet(format!("pair ({}, {}) out of range for rank {rank}", p.i, p.j)));
        }
        if by_pair.insert((p.i, p.j), &p.curves).is_some() {
            return Err(Error::InvalidCurveSet(format!("pair ({}, {}) listed twice", p.i, p.j)));
        }
    }
    let mut m = vec![vec![1u32; rank]; rank];
    let mut pairs = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            let curves = by_pair.get(&(i, j)).ok_or(Error::MissingPair { i, j })?;
            let order = reconstruct_order(curves)?;
            if strict && !validate_faithful_curveset(curves)? {
                return Err(Error::NotFaithfullyRealizable(format!("pair ({i}, {j}) with curves {curves}")));
            }
            m[i][j] = order.m;
            m[j][i] = order.m;
            pairs.push(PairReport {
                i,
                j,
                case: order.case,
                theta: order.theta,
                m: order.m,
                faithful: None,
            });
        }
    }
    Ok(ReconstructionReport {
        matrix: CoxeterMatrix::new(m)?,
        pairs,
    })
}

/// Full pipeline output for a matrix representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub report: ReconstructionReport,
    pub spectra: Vec<PairCurves>,
    pub verdicts: Vec<((usize, usize), FaithfulnessVerdict)>,
}

/// For every pair of generators: spectrum, faithfulness, bond. Every pair
/// restriction must be faithful and its bond must equal the detected order.
/// Faithfulness is judged at the ambient parameter, so equal generators
/// (`AB = I`) fail with witness `r`.
pub fn analyze(rep: &MatrixRep, max_order: u32) -> Result<Analysis> {
    let rank = rep.rank();
    let mut spectra = Vec::new();
    let mut verdicts = Vec::new();
    let mut detected = BTreeMap::new();
    for i in 0..rank {
        for j in i + 1..rank {
            let (a, b) = rep.pair(i, j);
            let ps = spectrum_of_matrices(a, b, max_order)?;
            let verdict = is_faithful_matrices_at(a, b, ps.n)?;
            if let Some(w) = verdict.witness {
                return Err(Error::FaithfulnessViolation {
                    i,
                    j,
                    witness: w.to_string(),
                });
            }
            detected.insert((i, j), ps.n);
            verdicts.push(((i, j), verdict));
            spectra.push(PairCurves { i, j, curves: ps.curves });
        }
    }
    let mut report = reconstruct_matrix(&spectra, rank, false)?;
    for p in &mut report.pairs {
        let n = detected[&(p.i, p.j)];
        if p.m != n {
            return Err(Error::BondMismatch {
                i: p.i,
                j: p.j,
                reconstructed: p.m,
                detected: n,
            });
        }
        p.faithful = Some(true);
    }
    Ok(Analysis {
        report,
        spectra,
        verdicts,
    })
}
