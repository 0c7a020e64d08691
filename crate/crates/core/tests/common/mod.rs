//! Seeded quiver generators and independent oracles shared by the
//! integration tests. Nothing here calls the library's elimination or
//! graded-dimension code.
#![allow(dead_code)]

use num_traits::{One, Zero};
use qcox::polyring::{PolyMatrix, Polynomial, RatMatrix, Rational};
use qcox::quiverdsl::{Arrow, BoundQuiver, Quiver, Relation};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Connected acyclic quiver on `n` vertices with edge multiplicities in
/// `1..=max_mult`. Arrows run down a hidden topological order which is then
/// shuffled, so vertex indices carry no orientation information.
pub fn random_acyclic_quiver(rng: &mut ChaCha8Rng, n: usize, max_mult: usize, extra_edge_prob: f64) -> Quiver {
    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(rng);
    // rank[k] is the vertex at topological position k
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for k in 1..n {
        let parent = rng.gen_range(0..k);
        edges.push((parent, k, rng.gen_range(1..=max_mult)));
    }
    for a in 0..n {
        for b in a + 1..n {
            if edges.iter().any(|&(x, y, _)| (x, y) == (a, b)) {
                continue;
            }
            if rng.gen_bool(extra_edge_prob) {
                edges.push((a, b, rng.gen_range(1..=max_mult)));
            }
        }
    }
    let mut arrows = Vec::new();
    for (a, b, m) in edges {
        for _ in 0..m {
            arrows.push(Arrow {
                name: format!("a{}", arrows.len()),
                source: rank[a],
                target: rank[b],
            });
        }
    }
    arrows.shuffle(rng);
    for (k, a) in arrows.iter_mut().enumerate() {
        a.name = format!("a{k}");
    }
    let vertices = (1..=n).map(|v| v.to_string()).collect();
    Quiver::new(vertices, arrows).expect("generated quiver is well formed")
}

/// Relation-free acyclic quivers with 3 to 7 vertices and multiplicity at most 2.
pub fn free_suite(count: usize, seed: u64) -> Vec<BoundQuiver> {
    let mut g = rng(seed);
    (0..count)
        .map(|k| {
            let n = g.gen_range(3..=7);
            BoundQuiver::free(format!("free{k}"), random_acyclic_quiver(&mut g, n, 2, 0.3))
        })
        .collect()
}

/// All paths of length `d` from `i` to `j`, by depth-first extension.
pub fn paths(q: &Quiver, i: usize, j: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(i, Vec::new())];
    while let Some((v, path)) = stack.pop() {
        if path.len() == d {
            if v == j {
                out.push(path);
            }
            continue;
        }
        for (k, a) in q.arrows().iter().enumerate() {
            if a.source == v {
                let mut next = path.clone();
                next.push(k);
                stack.push((a.target, next));
            }
        }
    }
    out.sort();
    out
}

/// Acyclic bound quiver with one to three homogeneous relations of degree 2 or 3.
/// Returns `None` when the drawn quiver has no pair of parallel paths of those lengths.
pub fn random_bound_quiver(g: &mut ChaCha8Rng, name: &str, n_range: std::ops::RangeInclusive<usize>) -> Option<BoundQuiver> {
    let n = g.gen_range(n_range);
    let q = random_acyclic_quiver(g, n, 2, 0.35);
    let mut slots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for d in 2..=3 {
                let ps = paths(&q, i, j, d);
                if !ps.is_empty() {
                    slots.push(ps);
                }
            }
        }
    }
    if slots.is_empty() {
        return None;
    }
    let nrel = g.gen_range(1..=3);
    let mut relations = Vec::new();
    for _ in 0..nrel {
        let ps = slots.choose(g).unwrap();
        let k = g.gen_range(1..=ps.len().min(3));
        let chosen: Vec<&Vec<usize>> = ps.choose_multiple(g, k).collect();
        let terms = chosen
            .into_iter()
            .map(|arrows| {
                let mut c = 0;
                while c == 0 {
                    c = g.gen_range(-2..=2);
                }
                (r(c), q.path(arrows.clone()).unwrap())
            })
            .collect();
        relations.push(Relation::new(terms));
    }
    Some(BoundQuiver::new(name.to_string(), q, relations))
}

/// Acyclic bound quivers with relations, 3 to 6 vertices.
pub fn bound_suite(count: usize, seed: u64) -> Vec<BoundQuiver> {
    let mut g = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let name = format!("bound{}", out.len());
        if let Some(bq) = random_bound_quiver(&mut g, &name, 3..=6) {
            out.push(bq);
        }
    }
    out
}

/// Row rank over the rationals by textbook Gaussian elimination.
pub fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for k in c..ncols {
                    let v = &m[rank][k] * &f;
                    m[i][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim (e_i A e_j)_d` by listing every path and every product `u r v` of a
/// path, a relation and a path, then taking the rank of the spanning set.
pub fn naive_graded_dim(bq: &BoundQuiver, i: usize, j: usize, d: usize) -> usize {
    let q = &bq.quiver;
    let basis = paths(q, i, j, d);
    if basis.is_empty() {
        return 0;
    }
    let index = |p: &[usize]| basis.iter().position(|b| b == p).expect("parallel path of the right length");
    let mut span: Vec<Vec<Rational>> = Vec::new();
    for rel in &bq.relations {
        let deg = rel.degree().unwrap();
        let (s, t) = rel.endpoints().unwrap();
        if deg > d {
            continue;
        }
        for left in 0..=d - deg {
            let right = d - deg - left;
            for u in paths(q, i, s, left) {
                for v in paths(q, t, j, right) {
                    let mut row = vec![Rational::zero(); basis.len()];
                    for (c, path) in rel.terms() {
                        let mut full = u.clone();
                        full.extend_from_slice(path.arrows());
                        full.extend_from_slice(&v);
                        row[index(&full)] += c.clone();
                    }
                    span.push(row);
                }
            }
        }
    }
    basis.len() - naive_rank(&span)
}

/// Number of paths from `i` to `j` of every length, for acyclic quivers.
pub fn path_count_cartan(q: &Quiver) -> RatMatrix {
    let n = q.n();
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        // count[v] = number of paths i -> v, relaxed n times along arrows
        let mut count = vec![0i64; n];
        count[i] = 1;
        let mut frontier = count.clone();
        for _ in 0..n {
            let mut next = vec![0i64; n];
            for a in q.arrows() {
                next[a.target] += frontier[a.source];
            }
            for v in 0..n {
                count[v] += next[v];
            }
            frontier = next;
        }
        for v in 0..n {
            row[v] = r(count[v]);
        }
    }
    RatMatrix::from_rows(rows)
}

/// Inverse by Gauss-Jordan on `[M | E]`.
pub fn naive_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let pivot = a[c][c].clone();
        for k in 0..2 * n {
            a[c][k] = &a[c][k] / &pivot;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..2 * n {
                    let v = &a[c][k] * &f;
                    a[i][k] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn naive_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// `-C^T C^{-1}` for a rational matrix.
pub fn classical_coxeter(c: &RatMatrix) -> Vec<Vec<Rational>> {
    let t = c.transpose();
    let inv = naive_inverse(c.rows()).expect("classical Cartan matrix is invertible");
    naive_mul(t.rows(), &inv)
        .into_iter()
        .map(|r| r.into_iter().map(|v| -v).collect())
        .collect()
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &PolyMatrix) -> Polynomial {
    fn go(rows: &[Vec<Polynomial>]) -> Polynomial {
        let n = rows.len();
        if n == 0 {
            return Polynomial::one();
        }
        let mut total = Polynomial::zero();
        for c in 0..n {
            if rows[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Polynomial>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &rows[0][c] * &go(&minor);
            total = if c % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }
    go(&m.rows())
}

