use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PolyError, Polynomial, RatMatrix, Rational};

/// Square matrix over `Q[q]`, stored row-major.
///
/// Vectors are columns: the matrix of a linear map `f` has `f(e_j)` as its
/// `j`-th column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![Polynomial::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    /// Build from rows; `None` if the rows do not form a square array.
    pub fn try_from_rows(rows: Vec<Vec<Polynomial>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        Self::try_from_rows(rows).expect("PolyMatrix rows must form a square array")
    }

    /// Rows of ascending integer coefficient lists, e.g. `[[[1],[0,2]],...]`.
    pub fn from_int_rows(rows: &[&[&[i64]]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|c| Polynomial::from_ints(c)).collect())
                .collect(),
        )
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.entries[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|p| -p).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        Self {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        Self {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            (0..n).fold(Polynomial::zero(), |acc, k| {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        })
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|p| p * c).collect(),
        }
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>, PolyError> {
        if v.len() != self.n {
            return Err(PolyError::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                v.iter()
                    .enumerate()
                    .fold(Polynomial::zero(), |acc, (k, x)| &acc + &(self.get(i, k) * x))
            })
            .collect())
    }

    /// Product of a sequence of matrices, left to right; identity if empty.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a PolyMatrix>) -> Self {
        factors
            .into_iter()
            .fold(Self::identity(n), |acc, m| acc.mul(m))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Zero above the diagonal and ones on it.
    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.n).all(|i| {
            self.get(i, i).is_one() && (i + 1..self.n).all(|j| self.get(i, j).is_zero())
        })
    }

    /// Entry-wise evaluation at `q = at`.
    pub fn specialize(&self, at: &Rational) -> RatMatrix {
        RatMatrix::from_rows(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j).eval(at)).collect())
                .collect(),
        )
    }

    /// Simultaneous row and column permutation: entry `(r, s)` of the result is
    /// entry `(order[r], order[s])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.n, "permutation length mismatch");
        Self::from_fn(self.n, |r, s| self.get(order[r], order[s]).clone())
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact in `Q[q]`.
    pub fn det(&self) -> Polynomial {
        let n = self.n;
        if n == 0 {
            return Polynomial::one();
        }
        let mut a = self.rows();
        let mut negate = false;
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Polynomial::zero();
                };
                a.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = v.exact_div(&prev).expect("inexact Bareiss division");
                }
                a[i][k] = Polynomial::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Fraction-free Gauss-Jordan elimination of `[M | E]`.
    ///
    /// Returns `(det, adj)` with `adj = det * M^{-1}`, or `None` when `M` is
    /// singular.
    fn det_and_adjugate(&self) -> Option<(Polynomial, PolyMatrix)> {
        let n = self.n;
        let mut a: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                let mut row = self.row(i);
                row.extend((0..n).map(|j| {
                    if i == j {
                        Polynomial::one()
                    } else {
                        Polynomial::zero()
                    }
                }));
                row
            })
            .collect();
        let mut negate = false;
        let mut prev = Polynomial::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            if p != k {
                a.swap(k, p);
                negate = !negate;
            }
            let pivot_row = a[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let v = &(&pivot_row[k] * &row[j]) - &(&factor * &pivot_row[j]);
                    row[j] = v.exact_div(&prev).expect("inexact fraction-free division");
                }
                row[k] = Polynomial::zero();
            }
            prev = pivot_row[k].clone();
        }
        // Left block is now prev * E and the right block is prev * M^{-1};
        // prev is the determinant of the row-permuted matrix.
        let det = if negate { -&prev } else { prev.clone() };
        let sign = if negate { Polynomial::from_int(-1) } else { Polynomial::one() };
        let adj = PolyMatrix::from_fn(n, |i, j| &a[i][n + j] * &sign);
        Some((det, adj))
    }

    /// Adjugate of a nonsingular matrix (`None` when the determinant vanishes).
    pub fn adjugate(&self) -> Option<Self> {
        self.det_and_adjugate().map(|(_, adj)| adj)
    }

    /// Inverse over `Q[q]` for matrices with determinant `+1` or `-1`.
    pub fn inverse_unimodular(&self) -> Result<Self, PolyError> {
        let (det, adj) = self
            .det_and_adjugate()
            .ok_or_else(|| PolyError::NotUnimodular { det: Polynomial::zero() })?;
        if !det.is_sign_unit() {
            return Err(PolyError::NotUnimodular { det });
        }
        // adj / det, and det is its own inverse.
        Ok(adj.scale(&det))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        super::write_grid(f, &cells)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix({}x{})", self.n, self.n)?;
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Polynomial>>::deserialize(deserializer)?;
        Self::try_from_rows(rows).ok_or_else(|| D::Error::custom("matrix is not square"))
    }
}
