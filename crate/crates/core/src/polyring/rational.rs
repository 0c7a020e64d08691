use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Parse `"a"` or `"a/b"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse::<Rational>().ok()
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Clear denominators: multiply the row by the lcm of its denominators and
/// return the resulting integer row.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in row.iter_mut() {
        *c /= &g;
    }
}

/// Row-echelon basis of the row space of an integer matrix, computed with
/// fraction-free (Bareiss) elimination. Returned rows are nonzero, in echelon
/// order, and divided by their content.
pub fn integer_row_basis(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col..ncols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
            // Columns left of `col` are already zero below the pivot rows.
        }
        prev = pivot.clone();
        rank += 1;
    }
    rows.truncate(rank);
    for row in rows.iter_mut() {
        remove_content(row);
    }
    rows
}

/// Exact rank of a rational matrix (rows may have any common length).
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| integer_row(r))
        .collect();
    integer_row_basis(ints).len()
}

/// Dense matrix over the rationals; used for specialisations at `q = q0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: Vec<Vec<Rational>>,
    ncols: usize,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Self { rows, ncols }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&c| rat(c)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_rows(
            (0..self.ncols)
                .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_rows(
            self.rows
                .iter()
                .map(|r| r.iter().map(|c| -c).collect())
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows(), "dimension mismatch");
        Self::from_rows(
            self.rows
                .iter()
                .map(|r| {
                    (0..rhs.ncols)
                        .map(|j| {
                            r.iter()
                                .zip(&rhs.rows)
                                .fold(Rational::zero(), |acc, (a, row)| acc + a * &row[j])
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        rank_rational(&self.rows)
    }

    /// Gauss-Jordan inverse over the rationals; `None` if singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.nrows();
        if n != self.ncols {
            return None;
        }
        let mut a: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| if i == j { rat(1) } else { rat(0) }));
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, p);
            let inv = a[k][k].recip();
            for c in a[k].iter_mut() {
                *c *= &inv;
            }
            let pivot_row = a[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k || row[k].is_zero() {
                    continue;
                }
                let f = row[k].clone();
                for (c, p) in row.iter_mut().zip(&pivot_row) {
                    *c -= &f * p;
                }
            }
        }
        Some(Self::from_rows(a.into_iter().map(|r| r[n..].to_vec()).collect()))
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        super::write_grid(f, &cells)
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        cells.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let cells = Vec::<Vec<String>>::deserialize(deserializer)?;
        let ncols = cells.first().map_or(0, Vec::len);
        if cells.iter().any(|r| r.len() != ncols) {
            return Err(D::Error::custom("ragged matrix"));
        }
        let rows = cells
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_rows(rows))
    }
}
