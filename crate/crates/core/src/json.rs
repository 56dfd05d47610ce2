//! JSON schemas for the external interfaces, pinned to the exact rational
//! scalar. Rationals serialize as reduced strings (`"3"`, `"-3/4"`), never
//! as floats, so output is bit-exact and round-trips.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bimodule::{QuadraticResidual, RightAction, SolveOutcome, Stage};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::octonion::Octonion;
use crate::omodule::{AbstractModule, CanonicalForm, ModuleElement, ModuleType};
use crate::Rat;

pub fn rat_from_str(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("invalid rational `{s}`: {e}"),
    })
}

pub fn octonion_to_strings(x: &Octonion<Rat>) -> Vec<String> {
    x.coords().iter().map(ToString::to_string).collect()
}

pub fn octonion_from_strings(coords: &[String]) -> Result<Octonion<Rat>> {
    if coords.len() != 8 {
        return Err(Error::Dimension {
            context: "octonion JSON coordinates",
            expected: 8,
            got: coords.len(),
        });
    }
    let parsed: Vec<Rat> = coords
        .iter()
        .map(|s| rat_from_str(s))
        .collect::<Result<_>>()?;
    Octonion::from_slice(&parsed)
}

pub fn matrix_to_strings(m: &Matrix<Rat>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect()
}

pub fn matrix_from_strings(rows: &[Vec<String>]) -> Result<Matrix<Rat>> {
    let parsed: Vec<Vec<Rat>> = rows
        .iter()
        .map(|row| row.iter().map(|s| rat_from_str(s)).collect())
        .collect::<Result<_>>()?;
    Matrix::from_rows(parsed)
}

/// Module element: `{"n": .., "k": .., "p": [[8 strings] x n], "q": ...}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ElementJson {
    pub n: usize,
    pub k: usize,
    pub p: Vec<Vec<String>>,
    pub q: Vec<Vec<String>>,
}

impl ElementJson {
    pub fn from_element(m: &ModuleElement<Rat>) -> Self {
        ElementJson {
            n: m.mtype().n(),
            k: m.mtype().k(),
            p: m.p().iter().map(octonion_to_strings).collect(),
            q: m.q().iter().map(octonion_to_strings).collect(),
        }
    }

    pub fn to_element(&self) -> Result<ModuleElement<Rat>> {
        let mtype = ModuleType::new(self.n, self.k)?;
        let p = self
            .p
            .iter()
            .map(|c| octonion_from_strings(c))
            .collect::<Result<_>>()?;
        let q = self
            .q
            .iter()
            .map(|c| octonion_from_strings(c))
            .collect::<Result<_>>()?;
        ModuleElement::from_parts(mtype, p, q)
    }
}

/// Abstract module: `{"d": .., "L": [seven d x d string matrices]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AbstractModuleJson {
    pub d: usize,
    #[serde(rename = "L")]
    pub l: Vec<Vec<Vec<String>>>,
}

impl AbstractModuleJson {
    pub fn from_module(am: &AbstractModule<Rat>) -> Self {
        AbstractModuleJson {
            d: am.dim(),
            l: am.generators().iter().map(matrix_to_strings).collect(),
        }
    }

    pub fn to_module(&self) -> Result<AbstractModule<Rat>> {
        let ls = self
            .l
            .iter()
            .map(|m| matrix_from_strings(m))
            .collect::<Result<Vec<_>>>()?;
        let am = AbstractModule::new(ls)?;
        if am.dim() != self.d {
            return Err(Error::Dimension {
                context: "abstract module JSON `d`",
                expected: am.dim(),
                got: self.d,
            });
        }
        Ok(am)
    }
}

/// Right action: `{"d": .., "R": [seven d x d string matrices]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RightActionJson {
    pub d: usize,
    #[serde(rename = "R")]
    pub r: Vec<Vec<Vec<String>>>,
}

impl RightActionJson {
    pub fn from_action(ra: &RightAction<Rat>) -> Self {
        RightActionJson {
            d: ra.dim(),
            r: ra.generators().iter().map(matrix_to_strings).collect(),
        }
    }

    pub fn to_action(&self) -> Result<RightAction<Rat>> {
        let rs = self
            .r
            .iter()
            .map(|m| matrix_from_strings(m))
            .collect::<Result<Vec<_>>>()?;
        let ra = RightAction::new(rs)?;
        if ra.dim() != self.d {
            return Err(Error::Dimension {
                context: "right action JSON `d`",
                expected: ra.dim(),
                got: self.d,
            });
        }
        Ok(ra)
    }
}

/// Solver outcome: `{"outcome": "...", "stage": ..., "action": ...}` with
/// optional detail fields; `action` carries the seven matrices for a unique
/// solution or a family witness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolveOutcomeJson {
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<QuadraticResidual>,
}

impl SolveOutcomeJson {
    pub fn from_outcome(outcome: &SolveOutcome<Rat>) -> Self {
        match outcome {
            SolveOutcome::Unique(ra) => SolveOutcomeJson {
                outcome: "unique".into(),
                stage: None,
                detail: None,
                affine_dim: None,
                action: Some(RightActionJson::from_action(ra).r),
                residual: None,
            },
            SolveOutcome::Infeasible { stage, detail } => SolveOutcomeJson {
                outcome: "infeasible".into(),
                stage: Some(
                    match stage {
                        Stage::Linear => "linear",
                        Stage::Quadratic => "quadratic",
                    }
                    .into(),
                ),
                detail: Some(detail.clone()),
                affine_dim: None,
                action: None,
                residual: None,
            },
            SolveOutcome::Family {
                affine_dim,
                witness,
            } => SolveOutcomeJson {
                outcome: "family".into(),
                stage: None,
                detail: None,
                affine_dim: Some(*affine_dim),
                action: witness
                    .as_ref()
                    .map(|ra| RightActionJson::from_action(ra).r),
                residual: None,
            },
            SolveOutcome::Indeterminate { reason, residual } => SolveOutcomeJson {
                outcome: "indeterminate".into(),
                stage: None,
                detail: Some(reason.clone()),
                affine_dim: None,
                action: None,
                residual: Some(residual.clone()),
            },
        }
    }
}

/// Canonical form: the type, the invariant subspace bases, and the
/// isomorphism matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CanonicalFormJson {
    pub n: usize,
    pub k: usize,
    pub assoc: Vec<Vec<String>>,
    pub conjassoc: Vec<Vec<String>>,
    pub iso: Vec<Vec<String>>,
}

impl CanonicalFormJson {
    pub fn from_form(form: &CanonicalForm<Rat>) -> Self {
        CanonicalFormJson {
            n: form.mtype.n(),
            k: form.mtype.k(),
            assoc: matrix_to_strings(form.assoc_basis.basis()),
            conjassoc: matrix_to_strings(form.conjassoc_basis.basis()),
            iso: matrix_to_strings(&form.iso),
        }
    }
}

pub fn subspace_to_strings(s: &Subspace<Rat>) -> Vec<Vec<String>> {
    matrix_to_strings(s.basis())
}

/// Parses a JSON document with a position-free parse error.
pub fn from_json_str<'a, D: Deserialize<'a>>(s: &'a str) -> Result<D> {
    serde_json::from_str(s).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: format!("invalid JSON: {e}"),
    })
}

/// Accepts either a `RightActionJson` document or a solver output document
/// whose `action` field carries the matrices.
pub fn right_action_from_json(s: &str) -> Result<RightAction<Rat>> {
    if let Ok(direct) = from_json_str::<RightActionJson>(s) {
        return direct.to_action();
    }
    let outcome: SolveOutcomeJson = from_json_str(s)?;
    let action = outcome.action.ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "document carries no right action (no `R` and no `action` field)".into(),
    })?;
    let rs = action
        .iter()
        .map(|m| matrix_from_strings(m))
        .collect::<Result<Vec<_>>>()?;
    RightAction::new(rs)
}
