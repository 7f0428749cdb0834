//! Exhaustive verification sweeps over small dihedral groups and random
//! Coxeter matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{analyze, is_faithful_oracle, is_faithful_theorem, reconstruct_order};
use crate::bipoly::det_pencil;
use crate::dihedral::{assemble, catalog, geometric_representation, CoxeterMatrix, IrrepLabel, RepSpec};
use crate::error::Result;
use crate::formats::{coxeter_to_json, repspec_to_json};
use crate::spectrum::{spectrum_of_matrices, spectrum_of_spec};

/// Outcome of one sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub cases: usize,
    /// Serialized failing instances with a reason.
    pub failures: Vec<String>,
}

impl SweepReport {
    fn new(name: &str) -> Self {
        SweepReport {
            name: name.into(),
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, reason: String) {
        self.failures.push(reason);
    }
}

/// Nonempty subsets of `items` of size at most `max_size`, in lexicographic
/// index order.
pub fn subsets<T: Copy>(items: &[T], max_size: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], start: usize, max: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        for i in start..items.len() {
            cur.push(items[i]);
            out.push(cur.clone());
            if cur.len() < max {
                go(items, i + 1, max, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_size > 0 {
        go(items, 0, max_size, &mut Vec::new(), &mut out);
    }
    out
}

/// Every multiplicity-one spec of `Dih₂ₙ` with at most `max_support` labels.
pub fn support_specs(n: u32, max_support: usize) -> Vec<RepSpec> {
    subsets(&catalog(n), max_support)
        .into_iter()
        .map(|s| RepSpec::from_support(n, s).expect("catalog labels are valid"))
        .collect()
}

/// Every assignment of multiplicities `1..=max_mult` to each support.
pub fn multiplicity_specs(n: u32, max_support: usize, max_mult: u32) -> Vec<RepSpec> {
    let mut out = Vec::new();
    for support in subsets(&catalog(n), max_support) {
        let mut mults = vec![1u32; support.len()];
        loop {
            let terms: Vec<(IrrepLabel, u32)> = support.iter().copied().zip(mults.iter().copied()).collect();
            out.push(RepSpec::new(n, terms).expect("catalog labels are valid"));
            let Some(pos) = mults.iter().position(|&m| m < max_mult) else {
                break;
            };
            mults[pos] += 1;
            for m in &mut mults[..pos] {
                *m = 1;
            }
        }
    }
    out
}

/// Closed-form faithfulness against kernel enumeration.
pub fn faithfulness_sweep(max_n: u32, max_support: usize) -> Result<SweepReport> {
    let mut report = SweepReport::new("faithfulness: theorem vs oracle");
    for n in 2..=max_n {
        for spec in support_specs(n, max_support) {
            report.cases += 1;
            let t = is_faithful_theorem(&spec)?;
            let o = is_faithful_oracle(&spec)?;
            if t.faithful != o.faithful {
                report.fail(format!(
                    "theorem says {}, oracle says {} for {}",
                    t.faithful,
                    o.faithful,
                    repspec_to_json(&spec)
                ));
            }
        }
    }
    Ok(report)
}

/// Determinant of the assembled pencil against the product of catalog curves,
/// and the factorization of that determinant against the spec's spectrum.
pub fn product_identity_sweep(max_n: u32, max_support: usize, max_mult: u32) -> Result<SweepReport> {
    let mut report = SweepReport::new("product identity and factorization");
    for n in 2..=max_n {
        for spec in multiplicity_specs(n, max_support, max_mult) {
            report.cases += 1;
            let curves = spectrum_of_spec(&spec)?;
            let (a, b) = assemble(&spec)?;
            let det = det_pencil(&a, &b)?;
            if det != curves.product() {
                report.fail(format!("determinant {det} differs for {}", repspec_to_json(&spec)));
                continue;
            }
            let ps = spectrum_of_matrices(&a, &b, n.max(2))?;
            if ps.curves != curves {
                report.fail(format!(
                    "factorization {} differs from {curves} for {}",
                    ps.curves,
                    repspec_to_json(&spec)
                ));
            }
        }
    }
    Ok(report)
}

/// Bond recovery from the spectrum of every faithful support spec.
pub fn reconstruction_sweep(max_n: u32, max_support: usize) -> Result<SweepReport> {
    let mut report = SweepReport::new("reconstruction soundness");
    for n in 2..=max_n {
        for spec in support_specs(n, max_support) {
            if !is_faithful_oracle(&spec)?.faithful {
                continue;
            }
            report.cases += 1;
            let m = reconstruct_order(&spectrum_of_spec(&spec)?)?.m;
            if m != n {
                report.fail(format!("reconstructed {m} for {}", repspec_to_json(&spec)));
            }
        }
    }
    Ok(report)
}

/// Random Coxeter matrix of the given rank with bonds in `2..=max_bond`.
pub fn random_coxeter(rng: &mut impl Rng, rank: usize, max_bond: u32) -> CoxeterMatrix {
    let mut m = vec![vec![1u32; rank]; rank];
    for i in 0..rank {
        for j in i + 1..rank {
            let v = rng.gen_range(2..=max_bond);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    CoxeterMatrix::new(m).expect("bonds are at least 2")
}

/// Geometric representation, analysis, comparison.
pub fn roundtrip_sweep(seed: u64, trials: usize, max_rank: usize, max_bond: u32, max_order: u32) -> Result<SweepReport> {
    let mut report = SweepReport::new("random round trips");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let rank = rng.gen_range(1..=max_rank.max(1));
        let m = random_coxeter(&mut rng, rank, max_bond);
        report.cases += 1;
        match analyze(&geometric_representation(&m), max_order) {
            Ok(out) if out.report.matrix == m => {}
            Ok(out) => report.fail(format!(
                "reconstructed {:?} from {}",
                out.report.matrix.rows(),
                coxeter_to_json(&m)
            )),
            Err(e) => report.fail(format!("{e} for {}", coxeter_to_json(&m))),
        }
    }
    Ok(report)
}
