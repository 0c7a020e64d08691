//! Reflections and Coxeter matrices.
//!
//! Matrices act on column vectors: column `j` of the matrix of `f` holds
//! the coordinates of `f(e_j)`. Products of reflections are taken with the
//! first vertex of the numbering leftmost.

mod forms;
mod numbering;
mod reflection;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{cartan_matrix, AlgebraError};
use crate::polyring::{PolyError, PolyMatrix, Polynomial};
use crate::quiverdsl::BoundQuiver;

pub use forms::{
    bilinear_form_graph, euler_form, gram_matrix, quadratic_form_graph, symmetric_form_matrix, CartanForms,
};
pub use numbering::{
    admissible_numbering, admissible_numbering_with, admissible_numberings, is_admissible, AdmissibleNumbering,
    SinkChoice,
};
pub use reflection::{
    coxeter_from_cartan, coxeter_matrix_graph, coxeter_matrix_graph_with, gamma_reflection, graph_reflection,
    sigma_reflect, sigma_reflect_bound, ReflectionKind, ReflectionMatrix,
};
pub use verify::{verify_identities, CheckEntry, CheckReport, CheckStatus, VerifyOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("NotAcyclic: the quiver has an oriented cycle, so no admissible numbering exists")]
    NotAcyclic,
    #[error("LoopAtVertex: vertex {0} carries a loop")]
    LoopAtVertex(usize),
    #[error("NotUnimodular: det C_q = {det}, expected 1 or -1")]
    NotUnimodular { det: Polynomial },
    #[error("InvalidVertex: index {0} is out of range")]
    InvalidVertex(usize),
    #[error("DimensionMismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("RelationsNotTransported: reflecting a bound quiver with relations is not supported")]
    RelationsNotTransported,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl CoxeterError {
    pub fn kind(&self) -> &'static str {
        match self {
            CoxeterError::NotAcyclic => "NotAcyclic",
            CoxeterError::LoopAtVertex(_) => "LoopAtVertex",
            CoxeterError::NotUnimodular { .. } => "NotUnimodular",
            CoxeterError::InvalidVertex(_) => "InvalidVertex",
            CoxeterError::DimensionMismatch { .. } => "DimensionMismatch",
            CoxeterError::RelationsNotTransported => "RelationsNotTransported",
            CoxeterError::Algebra(e) => e.kind(),
        }
    }
}

impl From<PolyError> for CoxeterError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::NotUnimodular { det } => CoxeterError::NotUnimodular { det },
            PolyError::DimensionMismatch { expected, found } => CoxeterError::DimensionMismatch { expected, found },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoxeterMethod {
    /// Product of gamma reflections along the admissible numbering.
    Reflections,
    /// `-C_q^T C_q^{-1}`.
    Cartan,
}

/// `Phi_q` of a bound quiver. The reflection method needs an acyclic quiver.
pub fn coxeter_matrix_bound(
    bq: &BoundQuiver,
    method: CoxeterMethod,
    degree_cap: usize,
) -> Result<PolyMatrix, CoxeterError> {
    let numbering = match method {
        CoxeterMethod::Reflections => Some(admissible_numbering(&bq.quiver)?),
        CoxeterMethod::Cartan => None,
    };
    let forms = CartanForms::new(cartan_matrix(bq, degree_cap)?)?;
    match numbering {
        Some(a) => forms.coxeter_by_reflections(a.order()),
        None => Ok(forms.coxeter()),
    }
}
