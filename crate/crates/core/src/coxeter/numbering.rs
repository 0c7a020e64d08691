use serde::Serialize;

use super::CoxeterError;
use crate::quiverdsl::Quiver;

/// Vertex order `(a_1, ..., a_n)` in which each `a_k` is a sink of the full
/// subquiver on the vertices not yet listed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AdmissibleNumbering {
    order: Vec<usize>,
}

impl AdmissibleNumbering {
    /// Checks admissibility against `q`.
    pub fn new(q: &Quiver, order: Vec<usize>) -> Option<Self> {
        is_admissible(q, &order).then_some(Self { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.order.iter().map(|&v| q.vertices()[v].clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SinkChoice {
    Smallest,
    Largest,
}

pub fn is_admissible(q: &Quiver, order: &[usize]) -> bool {
    let n = q.n();
    if order.len() != n {
        return false;
    }
    let mut placed = vec![false; n];
    for &v in order {
        if v >= n || placed[v] {
            return false;
        }
        // every arrow out of v must point to an already placed vertex
        if q.arrows().iter().any(|a| a.source == v && !placed[a.target]) {
            return false;
        }
        placed[v] = true;
    }
    true
}

fn remaining_sinks(q: &Quiver, placed: &[bool]) -> Vec<usize> {
    (0..q.n())
        .filter(|&v| !placed[v])
        .filter(|&v| q.arrows().iter().all(|a| a.source != v || placed[a.target]))
        .collect()
}

pub fn admissible_numbering_with(q: &Quiver, choice: SinkChoice) -> Result<AdmissibleNumbering, CoxeterError> {
    let n = q.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let sinks = remaining_sinks(q, &placed);
        let pick = match choice {
            SinkChoice::Smallest => sinks.first(),
            SinkChoice::Largest => sinks.last(),
        };
        let &v = pick.ok_or(CoxeterError::NotAcyclic)?;
        placed[v] = true;
        order.push(v);
    }
    Ok(AdmissibleNumbering { order })
}

/// Deterministic admissible numbering: the smallest-index sink first at every step.
pub fn admissible_numbering(q: &Quiver) -> Result<AdmissibleNumbering, CoxeterError> {
    admissible_numbering_with(q, SinkChoice::Smallest)
}

/// Up to `limit` admissible numberings, in lexicographic order.
pub fn admissible_numberings(q: &Quiver, limit: usize) -> Result<Vec<AdmissibleNumbering>, CoxeterError> {
    if !q.is_acyclic() {
        return Err(CoxeterError::NotAcyclic);
    }
    let mut out = Vec::new();
    let mut placed = vec![false; q.n()];
    let mut order = Vec::with_capacity(q.n());
    collect(q, &mut placed, &mut order, limit, &mut out);
    Ok(out)
}

fn collect(
    q: &Quiver,
    placed: &mut Vec<bool>,
    order: &mut Vec<usize>,
    limit: usize,
    out: &mut Vec<AdmissibleNumbering>,
) {
    if out.len() >= limit {
        return;
    }
    if order.len() == q.n() {
        out.push(AdmissibleNumbering { order: order.clone() });
        return;
    }
    for v in remaining_sinks(q, placed) {
        placed[v] = true;
        order.push(v);
        collect(q, placed, order, limit, out);
        order.pop();
        placed[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_numbering() {
        // 1 <- 2 -> 3
        let q = Quiver::from_indices(&["1", "2", "3"], &[("a", 1, 0), ("b", 1, 2)]).unwrap();
        assert_eq!(admissible_numbering(&q).unwrap().order(), &[0, 2, 1]);
        assert_eq!(admissible_numbering_with(&q, SinkChoice::Largest).unwrap().order(), &[2, 0, 1]);
        let all = admissible_numberings(&q, 10).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|a| is_admissible(&q, a.order())));
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::from_indices(&["1"], &[]).unwrap();
        assert_eq!(admissible_numbering(&q).unwrap().order(), &[0]);
    }

    #[test]
    fn kronecker_chain() {
        // 1 => 2 -> 3
        let q = Quiver::from_indices(&["1", "2", "3"], &[("a", 0, 1), ("b", 0, 1), ("d", 1, 2)]).unwrap();
        assert_eq!(admissible_numbering(&q).unwrap().order(), &[2, 1, 0]);
        assert_eq!(admissible_numberings(&q, 10).unwrap().len(), 1);
    }

    #[test]
    fn cycles_rejected() {
        let q = Quiver::from_indices(&["1", "2"], &[("a", 0, 1), ("b", 1, 0)]).unwrap();
        assert_eq!(admissible_numbering(&q), Err(CoxeterError::NotAcyclic));
        let l = Quiver::from_indices(&["1"], &[("x", 0, 0)]).unwrap();
        assert_eq!(admissible_numbering(&l), Err(CoxeterError::NotAcyclic));
    }

    #[test]
    fn rejects_bad_orders() {
        let q = Quiver::from_indices(&["1", "2"], &[("a", 0, 1)]).unwrap();
        assert!(AdmissibleNumbering::new(&q, vec![1, 0]).is_some());
        assert!(AdmissibleNumbering::new(&q, vec![0, 1]).is_none());
        assert!(AdmissibleNumbering::new(&q, vec![1, 1]).is_none());
    }
}
