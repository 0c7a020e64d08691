use serde::Serialize;

use super::{admissible_numbering, AdmissibleNumbering, CartanForms, CoxeterError};
use crate::polyring::{rat, PolyMatrix, Polynomial};
use crate::quiverdsl::{BoundQuiver, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReflectionKind {
    /// `s_i`, built from the arrow counts of the quiver.
    Graph,
    /// `gamma_i`, built from the symmetrized inverse Cartan matrix.
    Gamma,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionMatrix {
    pub matrix: PolyMatrix,
    pub vertex: usize,
    pub kind: ReflectionKind,
}

/// `S_i`: `s_i(e_j) = e_j + q a_ji e_i` for `j != i` and `s_i(e_i) = -e_i`.
/// Only row `i` differs from the identity.
pub fn graph_reflection(q: &Quiver, i: usize) -> Result<ReflectionMatrix, CoxeterError> {
    let n = q.n();
    if i >= n {
        return Err(CoxeterError::InvalidVertex(i));
    }
    if q.has_loop_at(i) {
        return Err(CoxeterError::LoopAtVertex(i));
    }
    let mut m = PolyMatrix::identity(n);
    for j in 0..n {
        let v = if j == i {
            Polynomial::from_int(-1)
        } else {
            Polynomial::monomial(rat(q.edge_count(j, i) as i64), 1)
        };
        m.set(i, j, v);
    }
    Ok(ReflectionMatrix {
        matrix: m,
        vertex: i,
        kind: ReflectionKind::Graph,
    })
}

/// `S_{a_1} S_{a_2} ... S_{a_n}` for a given vertex order.
pub fn coxeter_matrix_graph_with(q: &Quiver, order: &[usize]) -> Result<PolyMatrix, CoxeterError> {
    let factors = order
        .iter()
        .map(|&v| graph_reflection(q, v).map(|r| r.matrix))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::product(q.n(), &factors))
}

/// Graph Coxeter matrix along the default admissible numbering.
pub fn coxeter_matrix_graph(q: &Quiver) -> Result<(PolyMatrix, AdmissibleNumbering), CoxeterError> {
    let a = admissible_numbering(q)?;
    Ok((coxeter_matrix_graph_with(q, a.order())?, a))
}

/// `gamma_i(e_j) = e_j - a_ij(q) e_i` with `A_q = C_q^{-1} + C_q^{-T}`.
pub fn gamma_reflection(cartan: &PolyMatrix, i: usize) -> Result<ReflectionMatrix, CoxeterError> {
    CartanForms::new(cartan.clone())?.gamma(i)
}

/// `-C_q^T C_q^{-1}`.
pub fn coxeter_from_cartan(cartan: &PolyMatrix) -> Result<PolyMatrix, CoxeterError> {
    Ok(CartanForms::new(cartan.clone())?.coxeter())
}

/// `sigma_a Q`: every arrow incident to `a` is reversed.
pub fn sigma_reflect(q: &Quiver, a: usize) -> Result<Quiver, CoxeterError> {
    if a >= q.n() {
        return Err(CoxeterError::InvalidVertex(a));
    }
    Ok(q.with_reversed(|arrow| arrow.source == a || arrow.target == a))
}

/// Reflection of a relation-free bound quiver. Relations are not carried
/// across a reflection, so bound quivers with relations are rejected.
pub fn sigma_reflect_bound(bq: &BoundQuiver, a: usize) -> Result<BoundQuiver, CoxeterError> {
    if !bq.relations.is_empty() {
        return Err(CoxeterError::RelationsNotTransported);
    }
    Ok(BoundQuiver::free(bq.name.clone(), sigma_reflect(&bq.quiver, a)?))
}
