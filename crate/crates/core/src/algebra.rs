//! The graded algebra `A = kQ/<I>`: graded dimensions of `e_i A e_j`, the
//! q-Cartan matrix, and graded dimension vectors of simples, projectives and
//! injectives.
//!
//! The ideal is built degree by degree in path coordinates. A homogeneous
//! ideal generated by relations `R` satisfies
//! `I_{d+1} = I_d * Q_1 + Q_1 * I_d + R_{d+1}`, and each summand respects the
//! `(source, target)` decomposition, so every block `(i, j, d)` is an
//! independent rank computation over the rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::polyring::{integer_row, integer_row_basis, PolyMatrix, Polynomial, Rational};
use crate::quiverdsl::{BoundQuiver, Path, Quiver};

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// Upper bound on the number of paths of a single degree that the
/// path-coordinate computation will hold in memory.
pub const MAX_PATHS_PER_DEGREE: usize = 250_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("DegreeCapExceeded: no vanishing degree up to {cap}; the algebra may be infinite-dimensional")]
    DegreeCapExceeded { cap: usize },
    #[error("PathLimitExceeded: {paths} paths of length {degree} exceed the limit of {limit}")]
    PathLimitExceeded {
        degree: usize,
        paths: usize,
        limit: usize,
    },
    #[error("InvalidVertex: index {0} is out of range")]
    InvalidVertex(usize),
    #[error("TerminationCheckFailed: degree {degree} vanishes but degree {} does not", degree + 1)]
    TerminationCheckFailed { degree: usize },
}

impl AlgebraError {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraError::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            AlgebraError::PathLimitExceeded { .. } => "PathLimitExceeded",
            AlgebraError::InvalidVertex(_) => "InvalidVertex",
            AlgebraError::TerminationCheckFailed { .. } => "TerminationCheckFailed",
        }
    }
}

/// `dim (e_i A e_j)_d` for all vertex pairs and all degrees below
/// `max_degree`; every degree `>= max_degree` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDimTable {
    n: usize,
    max_degree: usize,
    /// `dims[d][i][j]`
    dims: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimEntry {
    pub source: String,
    pub target: String,
    pub degree: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimTableJson {
    pub dims: Vec<DimEntry>,
    pub max_degree: usize,
}

impl GradedDimTable {
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Smallest degree `N >= 1` at which every component vanishes.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn get(&self, i: usize, j: usize, degree: usize) -> usize {
        self.dims.get(degree).map_or(0, |m| m[i][j])
    }

    /// Total dimension of `A_d`.
    pub fn total(&self, degree: usize) -> usize {
        self.dims
            .get(degree)
            .map_or(0, |m| m.iter().flatten().sum())
    }

    /// Nonzero entries `(i, j, d, dim)` ordered by degree, then source, then target.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        self.dims.iter().enumerate().flat_map(move |(d, m)| {
            (0..self.n).flat_map(move |i| {
                (0..self.n).filter_map(move |j| (m[i][j] > 0).then_some((i, j, d, m[i][j])))
            })
        })
    }

    /// Nonzero entries with vertex names; zero entries are omitted.
    pub fn to_json(&self, q: &Quiver) -> DimTableJson {
        DimTableJson {
            dims: self
                .nonzero()
                .map(|(i, j, degree, dim)| DimEntry {
                    source: q.vertices()[i].clone(),
                    target: q.vertices()[j].clone(),
                    degree,
                    dim,
                })
                .collect(),
            max_degree: self.max_degree,
        }
    }

    /// `c_ij(q) = sum_d dim (e_i A e_j)_d q^d`.
    pub fn cartan(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, |i, j| {
            Polynomial::from_coeffs(
                self.dims
                    .iter()
                    .map(|m| Rational::from_integer(BigInt::from(m[i][j])))
                    .collect(),
            )
        })
    }
}

/// All length-`d` paths from `i` to `j`, in lexicographic order of arrow indices.
pub fn enumerate_paths(q: &Quiver, i: usize, j: usize, d: usize) -> Vec<Path> {
    if d == 0 {
        return if i == j { vec![Path::trivial(i)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(d);
    extend_paths(q, i, j, d, &mut stack, &mut out);
    out
}

fn extend_paths(q: &Quiver, at: usize, j: usize, left: usize, stack: &mut Vec<usize>, out: &mut Vec<Path>) {
    if left == 0 {
        if at == j {
            out.push(q.path(stack.clone()).expect("composable by construction"));
        }
        return;
    }
    for a in q.outgoing(at) {
        stack.push(a);
        extend_paths(q, q.arrow(a).target, j, left - 1, stack, out);
        stack.pop();
    }
}

/// Path basis and ideal basis of one block `(i, j)` at a fixed degree.
#[derive(Default, Clone)]
struct Block {
    paths: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    ideal: Vec<Vec<BigInt>>,
}

impl Block {
    fn from_paths(mut paths: Vec<Vec<usize>>) -> Self {
        paths.sort();
        let index = paths.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        Self {
            paths,
            index,
            ideal: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.paths.len() - self.ideal.len()
    }
}

struct Layer {
    n: usize,
    blocks: Vec<Block>,
}

impl Layer {
    fn block(&self, i: usize, j: usize) -> &Block {
        &self.blocks[i * self.n + j]
    }

    fn degree_zero(n: usize) -> Self {
        let blocks = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    Block::from_paths(vec![Vec::new()])
                } else {
                    Block::default()
                }
            })
            .collect();
        Self { n, blocks }
    }

    fn dims(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.block(i, j).dim()).collect())
            .collect()
    }
}

/// Relations grouped by `(degree, source, target)` as integer coefficient
/// rows over their paths.
type RelationIndex = HashMap<(usize, usize, usize), Vec<Vec<(BigInt, Vec<usize>)>>>;

fn index_relations(bq: &BoundQuiver) -> RelationIndex {
    let mut out: RelationIndex = HashMap::new();
    for r in &bq.relations {
        let (Some(d), Some((s, t))) = (r.degree(), r.endpoints()) else {
            continue;
        };
        let coeffs: Vec<Rational> = r.terms().iter().map(|(c, _)| c.clone()).collect();
        let ints = integer_row(&coeffs);
        let row = ints
            .into_iter()
            .zip(r.terms())
            .map(|(c, (_, p))| (c, p.arrows().to_vec()))
            .collect();
        out.entry((d, s, t)).or_default().push(row);
    }
    out
}

fn next_layer(
    q: &Quiver,
    prev: &Layer,
    degree: usize,
    relations: &RelationIndex,
) -> Result<Layer, AlgebraError> {
    let n = prev.n;
    // Paths of the new degree: every old path extended by one arrow.
    let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n * n];
    for i in 0..n {
        for k in 0..n {
            for p in &prev.block(i, k).paths {
                for a in q.outgoing(k) {
                    let mut ext = p.clone();
                    ext.push(a);
                    paths[i * n + q.arrow(a).target].push(ext);
                }
            }
        }
    }
    let total: usize = paths.iter().map(Vec::len).sum();
    if total > MAX_PATHS_PER_DEGREE {
        return Err(AlgebraError::PathLimitExceeded {
            degree,
            paths: total,
            limit: MAX_PATHS_PER_DEGREE,
        });
    }
    let mut blocks: Vec<Block> = paths.into_iter().map(Block::from_paths).collect();

    for i in 0..n {
        for j in 0..n {
            let width = blocks[i * n + j].paths.len();
            if width == 0 {
                continue;
            }
            let index = &blocks[i * n + j].index;
            let mut gens: Vec<Vec<BigInt>> = Vec::new();
            // I_d * a for arrows a: k -> j
            for a in q.incoming(j) {
                let k = q.arrow(a).source;
                let src = prev.block(i, k);
                for row in &src.ideal {
                    let mut v = vec![BigInt::zero(); width];
                    for (c, p) in row.iter().zip(&src.paths) {
                        if !c.is_zero() {
                            let mut ext = p.clone();
                            ext.push(a);
                            v[index[&ext]] = c.clone();
                        }
                    }
                    gens.push(v);
                }
            }
            // a * I_d for arrows a: i -> k
            for a in q.outgoing(i) {
                let k = q.arrow(a).target;
                let src = prev.block(k, j);
                for row in &src.ideal {
                    let mut v = vec![BigInt::zero(); width];
                    for (c, p) in row.iter().zip(&src.paths) {
                        if !c.is_zero() {
                            let mut ext = Vec::with_capacity(p.len() + 1);
                            ext.push(a);
                            ext.extend_from_slice(p);
                            v[index[&ext]] = c.clone();
                        }
                    }
                    gens.push(v);
                }
            }
            // generating relations of exactly this degree
            if let Some(rels) = relations.get(&(degree, i, j)) {
                for rel in rels {
                    let mut v = vec![BigInt::zero(); width];
                    for (c, p) in rel {
                        v[index[p]] += c;
                    }
                    gens.push(v);
                }
            }
            blocks[i * n + j].ideal = integer_row_basis(gens);
        }
    }
    Ok(Layer { n, blocks })
}

/// Graded dimensions of `kQ/<I>`, stopping at the first degree `d >= 1` whose
/// total dimension is zero. Degree `d + 1` is also computed and must vanish.
pub fn graded_dims(bq: &BoundQuiver, degree_cap: usize) -> Result<GradedDimTable, AlgebraError> {
    let q = &bq.quiver;
    let n = q.n();
    let relations = index_relations(bq);
    let mut layer = Layer::degree_zero(n);
    let mut dims = vec![layer.dims()];
    for degree in 1..=degree_cap {
        layer = next_layer(q, &layer, degree, &relations)?;
        let here = layer.dims();
        if here.iter().flatten().all(|&d| d == 0) {
            let after = next_layer(q, &layer, degree + 1, &relations)?;
            if after.blocks.iter().any(|b| b.dim() != 0) {
                return Err(AlgebraError::TerminationCheckFailed { degree });
            }
            return Ok(GradedDimTable {
                n,
                max_degree: degree,
                dims,
            });
        }
        dims.push(here);
    }
    Err(AlgebraError::DegreeCapExceeded { cap: degree_cap })
}

/// The q-Cartan matrix `C_q`.
pub fn cartan_matrix(bq: &BoundQuiver, degree_cap: usize) -> Result<PolyMatrix, AlgebraError> {
    Ok(graded_dims(bq, degree_cap)?.cartan())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimKind {
    Simple,
    Projective,
    Injective,
}

/// Graded dimension vector of `S(i)`, `P(i)` or `I(i)`, as a column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDimVector {
    pub kind: DimKind,
    pub vertex: usize,
    pub entries: Vec<Polynomial>,
}

/// Simple: `e_i`. Projective: `C_q^T e_i` (row `i`). Injective: `C_q e_i` (column `i`).
pub fn dim_vector_from_cartan(
    cartan: &PolyMatrix,
    kind: DimKind,
    i: usize,
) -> Result<GradedDimVector, AlgebraError> {
    let n = cartan.order();
    if i >= n {
        return Err(AlgebraError::InvalidVertex(i));
    }
    let entries = match kind {
        DimKind::Simple => crate::polyring::unit_vector(n, i),
        DimKind::Projective => cartan.row(i),
        DimKind::Injective => cartan.column(i),
    };
    Ok(GradedDimVector {
        kind,
        vertex: i,
        entries,
    })
}

pub fn dim_vector(
    bq: &BoundQuiver,
    kind: DimKind,
    i: usize,
    degree_cap: usize,
) -> Result<GradedDimVector, AlgebraError> {
    if i >= bq.n() {
        return Err(AlgebraError::InvalidVertex(i));
    }
    dim_vector_from_cartan(&cartan_matrix(bq, degree_cap)?, kind, i)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetCheck {
    pub det: Polynomial,
    pub unimodular: bool,
}

/// Determinant of `C_q` and whether it is `+1` or `-1`. Unimodularity is
/// necessary for finite global dimension, not sufficient.
pub fn cartan_det_check(cartan: &PolyMatrix) -> DetCheck {
    let det = cartan.det();
    let unimodular = det.is_sign_unit();
    DetCheck { det, unimodular }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverdsl::parse_quiver;

    fn zigzag() -> BoundQuiver {
        parse_quiver(
            "quiver zigzag { vertices: 1,2,3;
               arrows: a: 1->2; d: 2->1; b: 2->3; g: 3->2;
               relations: a*b; g*d; d*a - b*g; }",
        )
        .unwrap()
    }

    fn first6() -> BoundQuiver {
        parse_quiver(
            "quiver first { vertices: 1,2,3; arrows: a: 1->2; b: 1->2; d: 2->3; relations: a*d - b*d; }",
        )
        .unwrap()
    }

    fn last6() -> BoundQuiver {
        parse_quiver(
            "quiver last { vertices: 1,2; arrows: a: 1->2; b: 1->2; d: 2->1; relations: a*d; b*d; }",
        )
        .unwrap()
    }

    fn names(q: &Quiver, ps: &[Path]) -> Vec<String> {
        ps.iter().map(|p| p.display(q)).collect()
    }

    #[test]
    fn enumerate_small() {
        let bq = zigzag();
        let q = &bq.quiver;
        assert_eq!(names(q, &enumerate_paths(q, 0, 0, 2)), vec!["a*d"]);
        assert_eq!(names(q, &enumerate_paths(q, 1, 1, 0)), vec!["e_2"]);
        assert!(enumerate_paths(q, 0, 1, 0).is_empty());
        let bq = first6();
        assert_eq!(names(&bq.quiver, &enumerate_paths(&bq.quiver, 0, 2, 2)), vec!["a*d", "b*d"]);
    }

    #[test]
    fn dims_example_2_2() {
        let t = graded_dims(&zigzag(), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(t.max_degree(), 3);
        let mut expected = vec![];
        for i in 0..3 {
            expected.push((i, i, 0, 1));
        }
        for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
            expected.push((i, j, 1, 1));
        }
        for i in 0..3 {
            expected.push((i, i, 2, 1));
        }
        let mut got: Vec<_> = t.nonzero().collect();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn cartan_examples() {
        let c = cartan_matrix(&zigzag(), DEFAULT_DEGREE_CAP).unwrap();
        let expected = PolyMatrix::from_int_rows(&[
            &[&[1, 0, 1], &[0, 1], &[]],
            &[&[0, 1], &[1, 0, 1], &[0, 1]],
            &[&[], &[0, 1], &[1, 0, 1]],
        ]);
        assert_eq!(c, expected);
        let c = cartan_matrix(&last6(), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(c, PolyMatrix::from_int_rows(&[&[&[1], &[0, 2]], &[&[0, 1], &[1, 0, 2]]]));
        let c = cartan_matrix(&first6(), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(
            c,
            PolyMatrix::from_int_rows(&[
                &[&[1], &[0, 2], &[0, 0, 1]],
                &[&[], &[1], &[0, 1]],
                &[&[], &[], &[1]],
            ])
        );
    }

    #[test]
    fn single_vertex() {
        let bq = parse_quiver("quiver pt { vertices: 1; arrows: }").unwrap();
        let t = graded_dims(&bq, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(t.max_degree(), 1);
        assert_eq!(t.nonzero().collect::<Vec<_>>(), vec![(0, 0, 0, 1)]);
        let c = t.cartan();
        assert_eq!(cartan_det_check(&c), DetCheck { det: Polynomial::one(), unimodular: true });
    }

    #[test]
    fn cycle_without_relations_exceeds_cap() {
        let bq = parse_quiver("quiver cyc { vertices: 1,2; arrows: a: 1->2; b: 2->1; }").unwrap();
        assert_eq!(graded_dims(&bq, 10), Err(AlgebraError::DegreeCapExceeded { cap: 10 }));
    }

    #[test]
    fn dim_vectors() {
        let bq = zigzag();
        let p = dim_vector(&bq, DimKind::Projective, 0, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(p.entries, vec![Polynomial::from_ints(&[1, 0, 1]), Polynomial::q(), Polynomial::zero()]);
        let s = dim_vector(&bq, DimKind::Simple, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(s.entries, crate::polyring::unit_vector(3, 2));
        let inj = dim_vector(&last6(), DimKind::Injective, 1, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(inj.entries, vec![Polynomial::from_ints(&[0, 2]), Polynomial::from_ints(&[1, 0, 2])]);
        assert_eq!(
            dim_vector(&bq, DimKind::Simple, 5, DEFAULT_DEGREE_CAP),
            Err(AlgebraError::InvalidVertex(5))
        );
    }

    #[test]
    fn det_checks() {
        let c = cartan_matrix(&last6(), DEFAULT_DEGREE_CAP).unwrap();
        assert!(cartan_det_check(&c).unimodular);
        assert!(cartan_det_check(&c).det.is_one());
        // (1+q^2)^3 - 2q^2(1+q^2), by cofactor expansion along the first row
        let c = cartan_matrix(&zigzag(), DEFAULT_DEGREE_CAP).unwrap();
        let check = cartan_det_check(&c);
        assert_eq!(check.det, Polynomial::from_ints(&[1, 0, 1, 0, 1, 0, 1]));
        assert!(!check.unimodular);
    }

    #[test]
    fn dims_json_uses_names() {
        let bq = last6();
        let t = graded_dims(&bq, DEFAULT_DEGREE_CAP).unwrap();
        let v = serde_json::to_value(t.to_json(&bq.quiver)).unwrap();
        assert_eq!(v["max_degree"], 3);
        assert_eq!(v["dims"][0], serde_json::json!({"source":"1","target":"1","degree":0,"dim":1}));
    }
}
