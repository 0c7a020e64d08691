use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use super::ValidationError;
use crate::polyring::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Finite quiver. Vertex order fixes matrix indexing everywhere downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

impl Quiver {
    /// Checks names and endpoints. Arrow names may not be purely numeric, since
    /// a leading number in a relation term is read as a coefficient.
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, ValidationError> {
        if vertices.is_empty() {
            return Err(ValidationError::NoVertices);
        }
        let mut seen = HashMap::new();
        for v in &vertices {
            if !is_identifier(v) {
                return Err(ValidationError::InvalidName(v.clone()));
            }
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(ValidationError::DuplicateVertex(v.clone()));
            }
        }
        let mut seen = HashMap::new();
        for a in &arrows {
            if !is_identifier(&a.name) || a.name.chars().all(|c| c.is_ascii_digit()) {
                return Err(ValidationError::InvalidName(a.name.clone()));
            }
            if seen.insert(a.name.as_str(), ()).is_some() {
                return Err(ValidationError::DuplicateArrow(a.name.clone()));
            }
            for end in [a.source, a.target] {
                if end >= vertices.len() {
                    return Err(ValidationError::UnknownVertex(format!("#{end}")));
                }
            }
        }
        Ok(Self { vertices, arrows })
    }

    /// Convenience constructor from `(name, source, target)` index triples.
    pub fn from_indices(
        vertices: &[&str],
        arrows: &[(&str, usize, usize)],
    ) -> Result<Self, ValidationError> {
        Self::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            arrows
                .iter()
                .map(|&(name, source, target)| Arrow {
                    name: name.to_string(),
                    source,
                    target,
                })
                .collect(),
        )
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// `b_ij`: number of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == i && a.target == j)
            .count()
    }

    /// `a_ij = b_ij + b_ji`: number of edges between `i` and `j` in the
    /// underlying graph (for `i == j` this counts each loop twice).
    pub fn edge_count(&self, i: usize, j: usize) -> usize {
        self.arrow_count(i, j) + self.arrow_count(j, i)
    }

    /// The matrix `B = (b_ij)`.
    pub fn arrow_matrix(&self) -> Vec<Vec<usize>> {
        let mut b = vec![vec![0; self.n()]; self.n()];
        for a in &self.arrows {
            b[a.source][a.target] += 1;
        }
        b
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i).count()
    }

    /// Indices of arrows leaving `i`, ascending.
    pub fn outgoing(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == i)
            .map(|(k, _)| k)
    }

    /// Indices of arrows entering `j`, ascending.
    pub fn incoming(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == j)
            .map(|(k, _)| k)
    }

    pub fn has_loop_at(&self, i: usize) -> bool {
        self.arrows.iter().any(|a| a.source == i && a.target == i)
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.source == a.target)
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.out_degree(i) == 0
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.incoming(i).next().is_none()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_sink(i)).collect()
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for a in &self.arrows {
            adj[a.source].push(a.target);
            adj[a.target].push(a.source);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// No oriented cycles (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut out = vec![0usize; n];
        for a in &self.arrows {
            out[a.source] += 1;
        }
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&i| out[i] == 0).collect();
        let mut count = 0;
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            count += 1;
            for a in self.arrows.iter().filter(|a| a.target == v) {
                out[a.source] -= 1;
                if out[a.source] == 0 && !removed[a.source] {
                    stack.push(a.source);
                }
            }
        }
        count == n
    }

    /// Compose arrows left to right; `None` if two consecutive arrows do not
    /// meet or an index is out of range. An empty list is not a path here
    /// (use [`Path::trivial`]).
    pub fn path(&self, arrows: Vec<usize>) -> Option<Path> {
        let first = *arrows.first()?;
        let last = *arrows.last()?;
        if arrows.iter().any(|&a| a >= self.arrows.len()) {
            return None;
        }
        let composes = arrows
            .windows(2)
            .all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source);
        composes.then(|| Path {
            source: self.arrows[first].source,
            target: self.arrows[last].target,
            arrows,
        })
    }

    /// Copy with the listed arrows reversed.
    pub(crate) fn with_reversed(&self, reverse: impl Fn(&Arrow) -> bool) -> Self {
        Self {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| {
                    if reverse(a) {
                        Arrow {
                            name: a.name.clone(),
                            source: a.target,
                            target: a.source,
                        }
                    } else {
                        a.clone()
                    }
                })
                .collect(),
        }
    }
}

/// Oriented path: consecutive arrows satisfy `t(a_k) = s(a_{k+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    arrows: Vec<usize>,
    source: usize,
    target: usize,
}

impl Path {
    /// The trivial path `e_v`.
    pub fn trivial(v: usize) -> Self {
        Self {
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices()[self.source]);
        }
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Linear combination of parallel paths of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    terms: Vec<(Rational, Path)>,
}

impl Relation {
    /// Collects like terms and drops zero coefficients; term order is kept by
    /// first occurrence.
    pub fn new(terms: Vec<(Rational, Path)>) -> Self {
        let mut merged: Vec<(Rational, Path)> = Vec::new();
        for (c, p) in terms {
            match merged.iter_mut().find(|(_, q)| *q == p) {
                Some((acc, _)) => *acc += c,
                None => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Self { terms: merged }
    }

    pub fn terms(&self) -> &[(Rational, Path)] {
        &self.terms
    }

    /// Common length of the paths, if homogeneous and nonempty.
    pub fn degree(&self) -> Option<usize> {
        let d = self.terms.first()?.1.len();
        self.terms.iter().all(|(_, p)| p.len() == d).then_some(d)
    }

    /// Common `(source, target)`, if all paths are parallel and nonempty.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let p = &self.terms.first()?.1;
        let ends = (p.source(), p.target());
        self.terms
            .iter()
            .all(|(_, p)| (p.source(), p.target()) == ends)
            .then_some(ends)
    }

    pub fn display(&self, q: &Quiver) -> String {
        super::text::relation_text(self, q)
    }
}

/// Quiver together with homogeneous relations generating an admissible ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundQuiver {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl BoundQuiver {
    pub fn new(name: impl Into<String>, quiver: Quiver, relations: Vec<Relation>) -> Self {
        Self {
            name: name.into(),
            quiver,
            relations,
        }
    }

    /// Relation-free bound quiver.
    pub fn free(name: impl Into<String>, quiver: Quiver) -> Self {
        Self::new(name, quiver, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }
}
