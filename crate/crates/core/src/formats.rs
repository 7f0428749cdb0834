//! JSON interchange for representation specs, generator matrices and
//! Coxeter matrices. Curve-set files live in [`crate::spectrum`].

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::dihedral::{CoxeterMatrix, IrrepLabel, MatrixRep, RepSpec};
use crate::error::{Error, Result};
use crate::exactnum::{CycMatrix, CyclotomicNumber};

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    #[serde(rename = "type")]
    kind: String,
    n: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IrrepJson {
    dim: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    irrep: IrrepJson,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepSpecJson {
    group: GroupJson,
    terms: Vec<TermJson>,
}

pub fn repspec_to_json(spec: &RepSpec) -> String {
    let file = RepSpecJson {
        group: GroupJson {
            kind: "dihedral".into(),
            n: spec.n(),
        },
        terms: spec
            .terms()
            .map(|(label, mult)| TermJson {
                irrep: match label {
                    IrrepLabel::OneDim(j) => IrrepJson {
                        dim: 1,
                        j: Some(u32::from(j)),
                        k: None,
                    },
                    IrrepLabel::TwoDim(k) => IrrepJson {
                        dim: 2,
                        j: None,
                        k: Some(k),
                    },
                },
                mult,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("specs always serialize")
}

fn repspec_from_value(v: Value) -> Result<RepSpec> {
    let file: RepSpecJson = serde_json::from_value(v).map_err(parse_err)?;
    if file.group.kind != "dihedral" {
        return Err(Error::InvalidSpec(format!("unsupported group type {:?}", file.group.kind)));
    }
    let n = file.group.n;
    let terms = file
        .terms
        .into_iter()
        .map(|t| {
            let label = match (t.irrep.dim, t.irrep.j, t.irrep.k) {
                (1, Some(j), None) => IrrepLabel::OneDim(u8::try_from(j).map_err(|_| Error::InvalidLabel {
                    n,
                    label: format!("rho_{{1,{j}}}"),
                })?),
                (2, None, Some(k)) => IrrepLabel::TwoDim(k),
                _ => return Err(Error::Parse("irrep must be {\"dim\":1,\"j\":J} or {\"dim\":2,\"k\":K}".into())),
            };
            Ok((label, t.mult))
        })
        .collect::<Result<Vec<_>>>()?;
    RepSpec::new(n, terms)
}

pub fn repspec_from_json(text: &str) -> Result<RepSpec> {
    repspec_from_value(serde_json::from_str(text).map_err(parse_err)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRepJson {
    cyclotomic_order: u32,
    generators: Vec<Vec<Vec<CyclotomicNumber>>>,
}

/// Every entry is written in `ℚ(ζ_N)` with `N` the common order.
pub fn matrixrep_to_json(rep: &MatrixRep) -> String {
    let order = rep.cyclotomic_order();
    let file = MatrixRepJson {
        cyclotomic_order: order,
        generators: rep
            .generators()
            .iter()
            .map(|g| {
                g.rows()
                    .iter()
                    .map(|r| r.iter().map(|v| v.embed(order).expect("order divides the common order")).collect())
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("matrices always serialize")
}

fn matrixrep_from_value(v: Value) -> Result<MatrixRep> {
    let file: MatrixRepJson = serde_json::from_value(v).map_err(parse_err)?;
    let order = file.cyclotomic_order;
    if order == 0 {
        return Err(Error::Parse("cyclotomic_order must be positive".into()));
    }
    let generators = file
        .generators
        .into_iter()
        .map(|rows| {
            for v in rows.iter().flatten() {
                if order % v.order() != 0 {
                    return Err(Error::Parse(format!(
                        "entry {v} of order {} does not lie in Q(zeta_{order})",
                        v.order()
                    )));
                }
            }
            CycMatrix::from_rows(rows.into_iter().map(|r| r.iter().map(CyclotomicNumber::normalized).collect()).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixRep::new(generators)
}

pub fn matrixrep_from_json(text: &str) -> Result<MatrixRep> {
    matrixrep_from_value(serde_json::from_str(text).map_err(parse_err)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoxeterJson {
    rank: usize,
    m: Vec<Vec<u32>>,
}

pub fn coxeter_to_json(m: &CoxeterMatrix) -> String {
    serde_json::to_string_pretty(&CoxeterJson {
        rank: m.rank(),
        m: m.rows().to_vec(),
    })
    .expect("matrices always serialize")
}

pub fn coxeter_from_json(text: &str) -> Result<CoxeterMatrix> {
    let file: CoxeterJson = serde_json::from_str(text).map_err(parse_err)?;
    if file.rank != file.m.len() {
        return Err(Error::InvalidCoxeterMatrix(format!(
            "declared rank {} but {} rows",
            file.rank,
            file.m.len()
        )));
    }
    CoxeterMatrix::new(file.m)
}

/// A representation file of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepInput {
    Spec(RepSpec),
    Matrices(MatrixRep),
}

/// Reads a spec file (has `"group"`) or a matrix file (has `"generators"`).
pub fn rep_from_json(text: &str) -> Result<RepInput> {
    let v: Value = serde_json::from_str(text).map_err(parse_err)?;
    let Some(obj) = v.as_object() else {
        return Err(Error::Parse("expected a JSON object".into()));
    };
    if obj.contains_key("group") {
        repspec_from_value(v).map(RepInput::Spec)
    } else if obj.contains_key("generators") {
        matrixrep_from_value(v).map(RepInput::Matrices)
    } else {
        Err(Error::Parse("expected a representation spec or matrix representation".into()))
    }
}
